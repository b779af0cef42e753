//! Config files: parsing never panics, and an accepted config survives a
//! write/read cycle unchanged.
#![no_main]
use exturan_cli::ExperimentConfig;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = exturan_cli::parse_config_text(text);
    if let Ok(config) = ExperimentConfig::from_text(text) {
        let back = ExperimentConfig::from_text(&config.to_text()).expect("own output parses");
        assert_eq!(back, config);
    }
});
