#![no_main]

use libfuzzer_sys::fuzz_target;
use yangian_core::config::Scenario;
use yangian_core::suites::entangle;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(s) = Scenario::parse(text) {
        // Parsed scenarios either run or fail with an error, never panic.
        let _ = entangle(&s);
    }
});
