#![no_main]

use langlands_core::parse::parse_coords;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|s: &str| {
    let _ = parse_coords(s);
});
