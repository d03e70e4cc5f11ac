#![no_main]

use acis::polyarith::{parse, VarSet};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let ring = VarSet::weighted(&["x", "y", "z"], &[1, 2, 3]).unwrap();
    if let Ok(p) = parse(text, &ring) {
        // Printing and re-parsing is the identity.
        let again = parse(&p.to_string(), &ring).expect("printed polynomial parses");
        assert_eq!(again, p);
    }
});
