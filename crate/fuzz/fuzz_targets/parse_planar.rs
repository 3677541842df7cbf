#![no_main]

use libfuzzer_sys::fuzz_target;
use operad_forge::combinatorics::{BasisKind, Family};

mod common;

fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else { return };
    let fam = [Family::Magmatic, Family::Alternating, Family::Dipterous][first as usize % 3];
    common::round_trip(BasisKind::Planar(fam), rest);
});
