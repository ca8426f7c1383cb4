#![no_main]

use innmonoid::io::{parse_table, to_cayley_text};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = parse_table(text) {
        let back = parse_table(&to_cayley_text(&s)).expect("written tables parse");
        assert_eq!(back.rows(), s.rows());
    }
});
