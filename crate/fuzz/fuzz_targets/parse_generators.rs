#![no_main]

use libfuzzer_sys::fuzz_target;
use operad_forge::cli::parse_generators;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(gens) = parse_generators(text) {
        assert!(!gens.is_empty());
        let listed: Vec<String> = gens.iter().map(|l| l.to_string()).collect();
        assert_eq!(parse_generators(&listed.join(",")), Ok(gens));
    }
});
