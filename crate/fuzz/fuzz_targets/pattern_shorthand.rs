#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = exturan::shorthand::parse_pattern(text) {
        assert!(g.n() <= exturan::graph::MAX_VERTICES);
        let _ = exturan::graph::graph6_encode(&g);
    }
});
