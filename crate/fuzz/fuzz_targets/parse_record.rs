#![no_main]

use libfuzzer_sys::fuzz_target;
use srdom::records::LabelingRecord;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(record) = LabelingRecord::parse(text) {
        let line = record.to_line();
        assert_eq!(LabelingRecord::parse(&line).unwrap(), record);
    }
});
