#![no_main]

use acis::polyarith::VarSet;
use libfuzzer_sys::fuzz_target;

// Input is `vars` or `vars|weights`.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let (vars, weights) = match text.split_once('|') {
        Some((v, w)) => (v, Some(w)),
        None => (text, None),
    };
    if let Ok(ring) = VarSet::parse(vars, weights) {
        assert_eq!(ring.names().len(), ring.weights().len());
        assert!(ring.weights().iter().all(|&w| w > 0));
    }
});
