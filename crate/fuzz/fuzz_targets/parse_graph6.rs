#![no_main]

use libfuzzer_sys::fuzz_target;
use srdom::graph6::{parse_graph6, write_graph6, HEADER};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(graph) = parse_graph6(text) {
        graph.check_invariants().expect("decoded graph is well-formed");
        // strict decoding means encoding is the exact inverse
        let body = text.strip_prefix(HEADER).unwrap_or(text);
        let written = write_graph6(&graph).expect("decoded orders re-encode");
        assert_eq!(written, body);
        assert_eq!(parse_graph6(&written).unwrap(), graph);
    }
});
