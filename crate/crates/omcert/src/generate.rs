//! Deterministic and seeded generators for rational vector configurations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;

use crate::chirotope::{Chirotope, ChirotopeError, VectorConfiguration};

/// Points on the moment curve t -> (1, t, t^2, ...), t = 1..n. Every maximal
/// minor is a Vandermonde determinant, so the chirotope is uniform and
/// all-positive.
pub fn moment_curve(n: u32, r: u32) -> VectorConfiguration {
    let columns = (1..=n)
        .map(|t| {
            let mut coord = BigRational::one();
            let step = BigRational::from_integer(BigInt::from(t));
            (0..r)
                .map(|_| {
                    let value = coord.clone();
                    coord *= &step;
                    value
                })
                .collect()
        })
        .collect();
    VectorConfiguration::new(r, columns).expect("moment curve columns are well formed")
}

/// The eight vertices of [-1, 1]^3, homogenized: rank 4 on 8 elements.
/// Vertex i has coordinates read off the bits of i-1 (bit k -> coordinate
/// k+1), with 0 mapped to -1.
pub fn unit_cube() -> VectorConfiguration {
    let columns = (0u32..8)
        .map(|bits| {
            let mut column = vec![BigRational::one()];
            for k in 0..3 {
                let v = if bits >> k & 1 == 1 { 1 } else { -1 };
                column.push(BigRational::from_integer(BigInt::from(v)));
            }
            column
        })
        .collect();
    VectorConfiguration::new(4, columns).expect("cube columns are well formed")
}

/// Random configuration with small rational entries. Not guaranteed to have
/// full rank; see [`random_chirotope`] for the retrying variant.
pub fn random_configuration<R: Rng>(rng: &mut R, n: u32, r: u32) -> VectorConfiguration {
    let columns = (0..n)
        .map(|_| {
            (0..r)
                .map(|_| {
                    let numer = BigInt::from(rng.gen_range(-9i32..=9));
                    let denom = BigInt::from(rng.gen_range(1i32..=3));
                    BigRational::new(numer, denom)
                })
                .collect()
        })
        .collect();
    VectorConfiguration::new(r, columns).expect("random columns are well formed")
}

/// Draws configurations until one has full rank and returns its chirotope
/// together with the witnessing configuration.
pub fn random_chirotope<R: Rng>(
    rng: &mut R,
    n: u32,
    r: u32,
) -> (Chirotope, VectorConfiguration) {
    loop {
        let config = random_configuration(rng, n, r);
        match Chirotope::from_configuration(&config) {
            Ok(chi) => return (chi, config),
            Err(ChirotopeError::RankDeficient) => continue,
            Err(e) => unreachable!("unexpected generator failure: {e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn moment_curve_is_all_positive() {
        let chi = Chirotope::from_configuration(&moment_curve(7, 3)).unwrap();
        assert!(chi.sign_string().chars().all(|c| c == '+'));
        assert!(chi.is_uniform());
        assert!(chi.check_axioms().all_ok());
    }

    #[test]
    fn cube_has_rank_four_and_flats() {
        let chi = Chirotope::from_configuration(&unit_cube()).unwrap();
        assert_eq!((chi.n(), chi.r()), (8, 4));
        // Faces of the cube are planar: four coplanar vertices per face.
        assert!(!chi.is_uniform());
        assert!(chi.check_axioms().all_ok());
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let mut rng_a = ChaCha8Rng::seed_from_u64(11);
        let mut rng_b = ChaCha8Rng::seed_from_u64(11);
        let (chi_a, config_a) = random_chirotope(&mut rng_a, 6, 3);
        let (chi_b, config_b) = random_chirotope(&mut rng_b, 6, 3);
        assert_eq!(chi_a, chi_b);
        assert_eq!(config_a, config_b);
        assert!(chi_a.check_axioms().all_ok());
    }
}
