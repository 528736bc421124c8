//! Seeded random elements of `K` and `I_1` with polynomial entries, for spot
//! checks of the decompositions.

use rand::Rng;

use crate::field::PrimeField;
use crate::weyl::WeylElem;

use super::matrix::GMat;
use super::series::TruncSeries;

fn random_poly<R: Rng>(rng: &mut R, field: PrimeField, start: i64, len: usize) -> TruncSeries {
    let q = field.characteristic() as i64;
    let digits: Vec<i64> = (0..len).map(|_| rng.gen_range(0..q)).collect();
    TruncSeries::from_digits(field, start, &digits)
}

/// A product of root elements with entries in `o` above and `p` below the
/// diagonal and diagonal entries in `1 + p`; `len` digits per entry.
pub fn random_i1<R: Rng>(rng: &mut R, field: PrimeField, n: usize, len: usize) -> GMat {
    let mut g = GMat::identity(n, field);
    for i in 0..n {
        let d = TruncSeries::one(field).add(&random_poly(rng, field, 1, len));
        let mut m = GMat::identity(n, field);
        m.set(i, i, d);
        g = g.mul(&m);
    }
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let x = random_poly(rng, field, (i > j) as i64, len);
            g = g.mul(&GMat::elementary(n, i, j, x));
        }
    }
    g
}

/// A random element of `K`: permutation, unit diagonal and integral root
/// elements on both sides.
pub fn random_k<R: Rng>(rng: &mut R, field: PrimeField, n: usize, len: usize) -> GMat {
    let q = field.characteristic() as i64;
    let perms = WeylElem::all(n);
    let w = &perms[rng.gen_range(0..perms.len())];
    let mut g = GMat::perm(w, field);
    for i in 0..n {
        let unit = TruncSeries::constant(field, rng.gen_range(1..q)).add(&random_poly(rng, field, 1, len));
        let mut m = GMat::identity(n, field);
        m.set(i, i, unit);
        g = g.mul(&m);
    }
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let x = random_poly(rng, field, 0, len);
            g = GMat::elementary(n, i, j, x).mul(&g);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::subgroup::{SubgroupSpec, SubgroupTag};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_lie_in_their_groups() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for q in [2, 3, 5] {
            let f = PrimeField::new(q).unwrap();
            for _ in 0..20 {
                assert!(SubgroupSpec::new(SubgroupTag::I1, 8)
                    .contains(&random_i1(&mut rng, f, 3, 3))
                    .unwrap());
                assert!(SubgroupSpec::new(SubgroupTag::K, 8)
                    .contains(&random_k(&mut rng, f, 3, 3))
                    .unwrap());
            }
        }
    }
}
