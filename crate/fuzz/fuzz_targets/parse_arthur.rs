#![no_main]

use langlands_core::arthur::{classify_arthur, duality_map, phi_of_psi};
use langlands_core::parse::parse_arthur;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|s: &str| {
    if let Ok(psi) = parse_arthur(s) {
        let _ = classify_arthur(&psi);
        let _ = phi_of_psi(&psi);
        let _ = duality_map(&psi);
    }
});
