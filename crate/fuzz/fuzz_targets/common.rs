use operad_forge::combinatorics::{parse_element, BasisKind};

/// Anything that parses must print canonically and parse back to itself.
pub fn round_trip(kind: BasisKind, data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(b) = parse_element(kind, text) {
        let printed = b.to_string();
        assert_eq!(parse_element(kind, &printed).as_ref(), Ok(&b), "{text:?} printed as {printed:?}");
        if !matches!(kind, BasisKind::Planar(_)) {
            assert_eq!(b.kind(), kind);
        }
    }
}
