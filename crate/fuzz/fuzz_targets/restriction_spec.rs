#![no_main]

use bcover::{restrict, restricted_total_monodromy, MonodromySequence};
use bcover_cli::parse_restriction;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let s = MonodromySequence::from_pairs(4, &[(1, 2), (2, 3), (1, 2), (3, 4), (2, 4)]).unwrap();
    if let Ok(spec) = parse_restriction(text) {
        if let Ok(r) = restrict(&s, &spec) {
            assert_eq!(r.total_monodromy(), restricted_total_monodromy(&s, &spec).unwrap());
        }
    }
});
