#![no_main]

use acis_cli::parse_report;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(report) = parse_report(text) {
        let printed = serde_json::to_string(&report).unwrap();
        assert!(parse_report(&printed).is_ok());
    }
});
