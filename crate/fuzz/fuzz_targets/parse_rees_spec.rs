#![no_main]

use innmonoid::io::{parse_rees_spec, to_rees_text};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = parse_rees_spec(text) {
        let written = to_rees_text(&spec);
        let back = parse_rees_spec(&written).expect("written specs parse");
        assert_eq!(to_rees_text(&back), written);
    }
});
