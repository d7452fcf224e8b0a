#![no_main]

use hombra::Scalar;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(x) = text.parse::<Scalar>() {
        let shown = x.to_string();
        assert_eq!(shown.parse::<Scalar>().unwrap(), x);
    }
});
