#![no_main]

use langlands_core::orbits::{bind, minimal_datum};
use langlands_core::parse::parse_descriptor;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|s: &str| {
    if let Ok(d) = parse_descriptor(s) {
        assert_eq!(bind(&minimal_datum(&d)), d);
    }
});
