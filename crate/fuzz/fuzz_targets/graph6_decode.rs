//! Arbitrary bytes through the graph6 decoder; anything accepted must
//! re-encode to the same string.
#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = exturan::graph::graph6_decode(text) {
        let enc = exturan::graph::graph6_encode(&g);
        let body = text.trim_end_matches(['\n', '\r']);
        assert_eq!(enc, body.strip_prefix(">>graph6<<").unwrap_or(body));
        assert_eq!(exturan::graph::graph6_decode(&enc).unwrap(), g);
    }
});
