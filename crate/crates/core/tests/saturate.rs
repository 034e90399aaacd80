use std::collections::HashSet;
use std::sync::Arc;

use gcr_core::ffalg::{FqField, MatRep, Matrix};
use gcr_core::meataxe::{is_semisimple, RandomSource};
use gcr_core::saturate::{is_saturated, sat_power, saturated_closure, SaturateError, UnipotentElem};
use rand::Rng;

fn gf(p: u64, k: usize) -> Arc<FqField> {
    Arc::new(FqField::new(p, k).unwrap())
}

fn random_matrix(f: &Arc<FqField>, n: usize, rng: &mut RandomSource) -> Matrix {
    let elems = f.elements();
    let data = (0..n * n).map(|_| elems[rng.rng().gen_range(0..elems.len())]).collect();
    Matrix::from_vec(f, n, n, data)
}

fn random_invertible(f: &Arc<FqField>, n: usize, rng: &mut RandomSource) -> Matrix {
    loop {
        let m = random_matrix(f, n, rng);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// Conjugate of a random upper unitriangular matrix.
pub fn random_unipotent(f: &Arc<FqField>, n: usize, rng: &mut RandomSource) -> Matrix {
    let mut u = random_matrix(f, n, rng);
    for i in 0..n {
        for j in 0..=i {
            u.set(i, j, if i == j { f.one() } else { f.zero() });
        }
    }
    let g = random_invertible(f, n, rng);
    g.mul(&u).mul(&g.inverse().unwrap())
}

#[test]
fn homomorphism_and_inverse_laws() {
    let mut rng = RandomSource::new(31);
    for p in [3u64, 5, 7] {
        let f = gf(p, 1);
        for n in 1..=p.min(5) as usize {
            for _ in 0..3 {
                let u = UnipotentElem::new(&random_unipotent(&f, n, &mut rng)).unwrap();
                for s in f.elements() {
                    let us = sat_power(&u, s);
                    assert_eq!(us.mul(&sat_power(&u, f.neg(s))), Matrix::identity(&f, n));
                    for t in f.elements() {
                        assert_eq!(us.mul(&sat_power(&u, t)), sat_power(&u, f.add(s, t)));
                    }
                }
            }
        }
    }
}

#[test]
fn closure_is_idempotent_and_contains_group() {
    let f = gf(3, 2);
    let mut rng = RandomSource::new(8);
    for _ in 0..6 {
        let g = random_invertible(&f, 2, &mut rng);
        let r = MatRep::new(&f, 2, vec![g]).unwrap();
        let c = saturated_closure(&r, 5000).unwrap();
        assert!(c.saturated);
        assert!(is_saturated(&c.elements, &f).unwrap());
        let set: HashSet<&Matrix> = c.elements.iter().collect();
        for x in r.group_closure(5000).unwrap() {
            assert!(set.contains(&x));
        }
        let again = saturated_closure(&c.as_rep(), 5000).unwrap();
        assert_eq!(again.size(), c.size());
        assert!(again.adjoined.is_empty());
    }
}

#[test]
fn precondition_reported() {
    let f = gf(2, 1);
    let r = MatRep::trivial(&f, 3, 1);
    assert_eq!(
        saturated_closure(&r, 10).unwrap_err(),
        SaturateError::CharacteristicBelowDim { p: 2, dim: 3 }
    );
}

/// Semisimplicity over a group and over its saturation agree (p ≥ dim).
#[test]
fn semisimplicity_unchanged_by_saturation() {
    let f = gf(3, 2);
    let mut rng = RandomSource::new(77);
    let mut compared = 0;
    for i in 0..40 {
        let n = 2 + i % 2;
        let gens = if i % 3 == 0 {
            vec![random_unipotent(&f, n, &mut rng), random_invertible(&f, n, &mut rng)]
        } else {
            vec![random_unipotent(&f, n, &mut rng)]
        };
        let r = MatRep::new(&f, n, gens).unwrap();
        let Ok(c) = saturated_closure(&r, 20_000) else {
            continue;
        };
        let s = c.as_rep();
        let a = is_semisimple(&r, &mut rng, 64).as_bool();
        let b = is_semisimple(&s, &mut rng, 64).as_bool();
        if let (Some(a), Some(b)) = (a, b) {
            assert_eq!(a, b, "sample {i}");
            compared += 1;
        }
    }
    assert!(compared >= 20, "only {compared} conclusive comparisons");
}
