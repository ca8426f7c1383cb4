#![no_main]

use innmonoid::io::parse_partition;
use libfuzzer_sys::fuzz_target;

// First byte is the carrier size; 0 lets the parser infer it.
fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let n = (n % 64 != 0).then_some(usize::from(n % 64));
    if let Ok(p) = parse_partition(text, n) {
        assert_eq!(parse_partition(&p.to_string(), Some(p.len())).expect("written partitions parse"), p);
    }
});
