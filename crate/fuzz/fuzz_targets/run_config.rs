#![no_main]

use libfuzzer_sys::fuzz_target;
use yangian_core::config::RunConfig;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(c) = RunConfig::parse(text) {
        assert!(c.tolerance > 0.0);
        let again = RunConfig::parse(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(again, c);
    }
});
