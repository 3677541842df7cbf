#![no_main]

use libfuzzer_sys::fuzz_target;
use operad_forge::linear::{parse_scalar, scalar_to_string};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Some(s) = parse_scalar(text) {
        assert_eq!(parse_scalar(&scalar_to_string(&s)), Some(s));
    }
});
