#![no_main]

use innmonoid::io::{parse_gset, to_gset_text};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(gs) = parse_gset(text) {
        let back = parse_gset(&to_gset_text(&gs)).expect("written G-sets parse");
        assert_eq!(back.action_rows(), gs.action_rows());
    }
});
