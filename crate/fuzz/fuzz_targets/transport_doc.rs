#![no_main]

use bcover::{curve_monodromy, interval_type, CurveRef, IntervalRef, MonodromySequence};
use bcover_cli::{parse_system, parse_transport};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let p = MonodromySequence::disk(4);
    if let Ok(doc) = parse_transport(text) {
        if let Ok(w) = doc.braid(4) {
            if let Ok(c) = CurveRef::new(4, doc.base, w.clone()) {
                let _ = curve_monodromy(&p, &c);
            }
            if let Ok(x) = IntervalRef::new(4, doc.base, w) {
                let t = interval_type(&p, &x).expect("valid interval");
                assert!((1..=3).contains(&t));
            }
        }
    }
    let _ = parse_system(text);
});
