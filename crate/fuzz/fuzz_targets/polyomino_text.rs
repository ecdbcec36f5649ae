#![no_main]

use cubmatch::planar::{build_from_polyomino, parse_polyomino};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if parse_polyomino(text).is_ok() {
        let _ = build_from_polyomino(text);
    }
});
