#![no_main]

use langlands_core::parse::{parse_levi, parse_orbits, parse_partition};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|s: &str| {
    if let Ok(p) = parse_partition(s) {
        assert_eq!(p.transpose().transpose(), p);
    }
    let _ = parse_levi(s);
    let _ = parse_orbits(s);
});
