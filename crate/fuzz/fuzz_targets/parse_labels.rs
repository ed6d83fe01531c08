#![no_main]

use libfuzzer_sys::fuzz_target;
use srdom::records::{format_labels, parse_labels};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(labeling) = parse_labels(text) {
        assert!(!labeling.is_empty());
        let formatted = format_labels(&labeling);
        assert_eq!(parse_labels(&formatted).unwrap(), labeling);
    }
});
