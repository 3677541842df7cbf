#![no_main]

use libfuzzer_sys::fuzz_target;
use operad_forge::combinatorics::parse_any;

mod common;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(b) = parse_any(text) {
        common::round_trip(b.kind(), b.to_string().as_bytes());
    }
});
