#![no_main]

use gendist::monounary::{canonical_code, parse_mua, to_mua};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(a) = parse_mua(text) {
        let back = parse_mua(&to_mua(&a)).expect("printed algebra parses");
        assert_eq!(back, a);
        if a.len() <= 64 {
            let _ = canonical_code(&a);
            let _ = a.mgen();
        }
    }
});
