#![no_main]

use libfuzzer_sys::fuzz_target;
use yangian_core::ComplexMatrix;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(m) = ComplexMatrix::from_json(text) {
        assert_eq!(m.as_slice().len(), m.rows() * m.cols());
        let back = ComplexMatrix::from_json(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back, m);
    }
});
