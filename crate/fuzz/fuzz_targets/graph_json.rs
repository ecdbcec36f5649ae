#![no_main]

use cubmatch::{build_complex, PlanarGraph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = PlanarGraph::from_json(text) {
        // Keep complex construction cheap enough for the fuzzer.
        if g.vertex_count() <= 24 {
            let _ = build_complex(&g).f_vector();
        }
    }
});
