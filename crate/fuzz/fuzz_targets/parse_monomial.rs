#![no_main]

use libfuzzer_sys::fuzz_target;
use operad_forge::combinatorics::BasisKind;

mod common;

fuzz_target!(|data: &[u8]| common::round_trip(BasisKind::Monomial, data));
