use std::sync::Arc;

use gcr_core::ffalg::{parse_rep, sl2_generators, write_rep, FqElem, FqField, MatRep, Matrix};
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = Arc<FqField>> {
    prop::sample::select(vec![(2u64, 1usize), (2, 2), (3, 1), (3, 2), (5, 1), (7, 1), (2, 3)])
        .prop_map(|(p, k)| Arc::new(FqField::new(p, k).unwrap()))
}

fn matrix_strategy(f: Arc<FqField>, n: usize) -> impl Strategy<Value = Matrix> {
    let q = f.order() as usize;
    prop::collection::vec(0..q, n * n).prop_map(move |idx| {
        let elems = f.elements();
        Matrix::from_vec(&f, n, n, idx.into_iter().map(|i| elems[i]).collect())
    })
}

fn invertible(f: Arc<FqField>, n: usize) -> impl Strategy<Value = Matrix> {
    matrix_strategy(f, n).prop_filter("invertible", |m| !m.det().is_zero())
}

fn rep_strategy() -> impl Strategy<Value = MatRep> {
    (field_strategy(), 1usize..=3, 1usize..=3).prop_flat_map(|(f, n, g)| {
        let f2 = f.clone();
        prop::collection::vec(invertible(f, n), g).prop_map(move |gens| MatRep::new(&f2, n, gens).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn char_poly_is_conjugation_invariant(
        (m, g) in (field_strategy(), 1usize..=5).prop_flat_map(|(f, n)| (matrix_strategy(f.clone(), n), invertible(f, n)))
    ) {
        let conj = g.mul(&m).mul(&g.inverse().unwrap());
        prop_assert_eq!(conj.char_poly(), m.char_poly());
    }

    #[test]
    fn rank_nullity((m, _) in (field_strategy(), 1usize..=6).prop_flat_map(|(f, n)| (matrix_strategy(f, n), Just(())))) {
        prop_assert_eq!(m.rank() + m.nullspace().rows(), m.cols());
    }

    #[test]
    fn dual_of_tensor_is_tensor_of_duals(a in rep_strategy()) {
        // b shares a's field and generator count
        let f = a.field().clone();
        let b = MatRep::new(&f, 1, vec![Matrix::identity(&f, 1); a.ngens()]).unwrap()
            .direct_sum(&a.twist(1)).unwrap();
        let lhs = a.tensor(&b).unwrap().dual();
        let rhs = a.dual().tensor(&b.dual()).unwrap();
        prop_assert_eq!(lhs.generators(), rhs.generators());
    }

    #[test]
    fn frobenius_twist_is_multiplicative(r in rep_strategy(), i in 0usize..4) {
        let t = r.twist(i);
        let gs = r.generators();
        let ts = t.generators();
        for (a, ta) in gs.iter().zip(ts) {
            for (b, tb) in gs.iter().zip(ts) {
                let f = r.field();
                let prod = a.mul(b).map(|e| f.frobenius_pow(e, i));
                prop_assert_eq!(prod, ta.mul(tb));
            }
        }
        prop_assert_eq!(r.twist(r.field().degree()), r.clone());
    }

    #[test]
    fn rep_file_round_trip(r in rep_strategy()) {
        let text = write_rep(&r);
        let back = parse_rep(&text).unwrap();
        prop_assert_eq!(write_rep(&back), text);
        prop_assert_eq!(back, r);
    }

    #[test]
    fn centralizer_of_direct_sum_at_least_blocks(r in rep_strategy()) {
        let f = r.field().clone();
        let triv = MatRep::trivial(&f, 1, r.ngens());
        let s = r.direct_sum(&triv).unwrap();
        prop_assert!(s.lie_centralizer() > r.lie_centralizer());
    }
}

#[test]
fn frobenius_fixes_exactly_prime_field() {
    for (p, k) in [(2, 2), (3, 2), (2, 3), (5, 2)] {
        let f = FqField::new(p, k).unwrap();
        let fixed: Vec<FqElem> = f.elements().into_iter().filter(|e| f.frobenius(*e) == *e).collect();
        assert_eq!(fixed.len() as u64, p);
        assert!(fixed.iter().all(|e| f.coeffs(*e)[1..].iter().all(|c| *c == 0)));
    }
}

#[test]
fn sl2_f9_tensor_cube_has_dimension_eight() {
    let f = Arc::new(FqField::new(3, 2).unwrap());
    let l = sl2_generators(&f);
    let v = l.tensor(&l.twist(2)).unwrap().tensor(&l.twist(4)).unwrap();
    assert_eq!(v.dim(), 8);
    assert_eq!(v.group_closure(1000).unwrap().len(), 720);
}
