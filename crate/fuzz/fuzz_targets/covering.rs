#![no_main]

use bcover_cli::{emit_covering, parse_covering};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(seq) = parse_covering(text) {
        let again = parse_covering(&emit_covering(&seq)).expect("emitted documents parse");
        assert_eq!(again, seq);
        let _ = seq.surface_invariants();
    }
});
