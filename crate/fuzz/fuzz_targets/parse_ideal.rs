#![no_main]

use acis::polyarith::{parse_list, VarSet};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let ring = VarSet::unit(&["x", "y", "z"]).unwrap();
    if let Ok(gens) = parse_list(text, &ring) {
        let printed: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        assert_eq!(parse_list(&printed.join(";"), &ring).unwrap(), gens);
    }
});
