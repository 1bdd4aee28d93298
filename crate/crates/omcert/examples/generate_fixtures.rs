//! Writing chirotope and configuration files.
//!
//! Generates the stock examples (moment curve, cube, a seeded random
//! configuration), round-trips them through the two text formats, and
//! prints where everything went. Files land in a temporary directory.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use omcert::chirotope::Chirotope;
use omcert::generate::{moment_curve, random_chirotope, unit_cube};
use omcert::io::{
    parse_chirotope, parse_configuration, write_chirotope, write_configuration,
};

fn main() {
    let dir = std::env::temp_dir().join("omcert_fixtures");
    std::fs::create_dir_all(&dir).unwrap();

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let named = [
        ("moment_7_3", Chirotope::from_configuration(&moment_curve(7, 3)).unwrap()),
        ("cube_8_4", Chirotope::from_configuration(&unit_cube()).unwrap()),
        ("random_6_3_seed7", random_chirotope(&mut rng, 6, 3).0),
    ];
    for (name, chi) in &named {
        let text = write_chirotope(chi);
        let path = dir.join(format!("{name}.chi"));
        std::fs::write(&path, &text).unwrap();
        let back = parse_chirotope(&text).unwrap();
        assert_eq!(&back, chi, "chirotope files round-trip");
        println!("{} -> {}", path.display(), chi.sign_string());
    }

    // Configurations carry exact rationals and round-trip too.
    let config = moment_curve(5, 3);
    let text = write_configuration(&config);
    let path = dir.join("moment_5_3.cfg");
    std::fs::write(&path, &text).unwrap();
    assert_eq!(parse_configuration(&text).unwrap(), config);
    println!("{} ({} bytes, entries like 4/1 16/1)", path.display(), text.len());

    // The same generators back the `gen` subcommand of the binary.
    println!("\nequivalent: omcert gen moment --n 7 --r 3; omcert gen cube; omcert gen random --n 6 --seed 7");
}
