#![no_main]

use gendist::network::{parse_fa, to_fa};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // errors are fine, panics are not
    if let Ok(fa) = parse_fa(text) {
        let back = parse_fa(&to_fa(&fa)).expect("printed algebra parses");
        assert_eq!(back.signature(), fa.signature());
    }
});
