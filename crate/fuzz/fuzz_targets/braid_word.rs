#![no_main]

use bcover::MonodromySequence;
use bcover_cli::parse_braid;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let p = MonodromySequence::disk(4);
    if let Ok(w) = parse_braid(4, text) {
        let moved = p.act(&w).expect("word fits the strands");
        assert_eq!(moved.total_monodromy(), p.total_monodromy());
    }
});
