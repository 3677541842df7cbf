#![no_main]

use libfuzzer_sys::fuzz_target;
use operad_forge::combinatorics::{BasisKind, Family};
use operad_forge::report::{decode_lincomb, lincomb_json};

const KINDS: [BasisKind; 9] = [
    BasisKind::Tree,
    BasisKind::Pointed,
    BasisKind::Word,
    BasisKind::Monomial,
    BasisKind::Surjection,
    BasisKind::Hypertree,
    BasisKind::Planar(Family::Magmatic),
    BasisKind::Planar(Family::Alternating),
    BasisKind::Planar(Family::Dipterous),
];

fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let kind = KINDS[first as usize % KINDS.len()];
    if let Ok(x) = decode_lincomb(kind, text) {
        let encoded = lincomb_json(&x).to_string();
        assert_eq!(decode_lincomb(kind, &encoded), Ok(x));
    }
});
