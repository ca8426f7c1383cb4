#![no_main]

use innmonoid::io::parse_partial_map;
use libfuzzer_sys::fuzz_target;

// First byte is the ambient size.
fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let n = usize::from(n % 64);
    if let Ok(f) = parse_partial_map(text, n) {
        assert_eq!(parse_partial_map(&f.to_string(), n).expect("written maps parse"), f);
    }
});
