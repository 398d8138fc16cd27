#![no_main]

use gendist::qz::{parse_choice_seq, qz_diameter, qz_distance};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(k) = parse_choice_seq(text) {
        let back = parse_choice_seq(&k.to_string()).expect("printed sequence parses");
        assert_eq!(back, k);
        assert_eq!(qz_distance(&k, &back), gendist::Distance::ZERO);
        let _ = qz_diameter(&k);
    }
});
