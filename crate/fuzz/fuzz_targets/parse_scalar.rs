#![no_main]

use langlands_core::parse::parse_scalar;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|s: &str| {
    if let Ok(x) = parse_scalar(s) {
        assert_eq!(parse_scalar(&x.to_string()).unwrap(), x);
    }
});
