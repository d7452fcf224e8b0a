#![no_main]

use hombra::qmatrix::{normal_form, parse_word, QParams, QPoly};
use hombra::Scalar;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 10 {
        return;
    }
    if let Ok(word) = parse_word(text) {
        let p = QParams::default();
        let nf = normal_form(&word, &p);
        assert!(nf.is_zero() || nf.degree() == word.len() as u32);
        for (m, _) in nf.terms() {
            let again = normal_form(&m.word(), &p);
            assert_eq!(again, QPoly::monomial(*m, Scalar::one()));
        }
    }
});
