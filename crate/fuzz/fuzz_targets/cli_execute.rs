#![no_main]

use langlands_cli::execute;
use libfuzzer_sys::fuzz_target;

// arguments are NUL-separated so the fuzzer can place spaces inside values
fuzz_target!(|s: &str| {
    let (code, _) = execute(s.split('\0'));
    assert!((0..=2).contains(&code));
});
