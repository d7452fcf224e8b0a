#![no_main]

use hombra::format::parse_matrix_literal;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(m) = parse_matrix_literal(text) {
        let rows: Vec<String> = m
            .to_rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        assert_eq!(parse_matrix_literal(&rows.join(";")).unwrap(), m);
    }
});
