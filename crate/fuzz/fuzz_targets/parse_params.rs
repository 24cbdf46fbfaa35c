#![no_main]

use libfuzzer_sys::fuzz_target;
use yangian_core::config::parse_params;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = parse_params(text) {
        assert!(p.mu.is_finite() && p.nu.is_finite() && p.lambda.is_finite());
        let _ = p.normalizer();
    }
});
