#![no_main]

use hombra::format::StructureFile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(file) = StructureFile::parse(text) {
        let emitted = file.emit();
        let again = StructureFile::parse(&emitted).expect("emitted files parse");
        assert_eq!(again, file);
        assert_eq!(again.emit(), emitted);
    }
});
