#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = exturan::graph::parse_edge_list(text) {
        // Written form parses back to the same graph.
        let again = exturan::graph::parse_edge_list(&exturan::graph::write_edge_list(&g)).unwrap();
        assert_eq!(again, g);
    }
});
