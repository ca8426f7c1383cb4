#![no_main]

use innmonoid::io::{build_catalog, parse_catalog_name, CatalogName};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(name) = std::str::from_utf8(data) else { return };
    if let Ok(Some(parsed)) = parse_catalog_name(name) {
        // Large members take too long to build; rees: names refer to files.
        let small = match parsed {
            CatalogName::Clifford8 | CatalogName::Strict4 => true,
            CatalogName::LeftZero(k) | CatalogName::Cyclic(k) => k <= 8,
            CatalogName::Transformations(k) | CatalogName::SymmetricInverse(k) | CatalogName::Symmetric(k) => k <= 3,
            CatalogName::Rees(_) => false,
        };
        if small {
            build_catalog(&parsed).expect("catalog members build");
        }
    }
});
