use std::sync::Arc;

use gcr_core::ffalg::{sl2_generators, FqElem, FqField, MatRep, Matrix};
use gcr_core::meataxe::{
    brute_force_submodules, find_proper_submodule, has_equivariant_complement, is_semisimple, is_summand_of,
    lattice_is_semisimple, restrict, spin, IrreducibilityOutcome, MeataxeError, RandomSource, SemisimpleVerdict,
    SubmoduleWitness,
};
use proptest::prelude::*;
use rand::Rng;

fn gf(p: u64, k: usize) -> Arc<FqField> {
    Arc::new(FqField::new(p, k).unwrap())
}

fn jordan_gf2() -> MatRep {
    let f = gf(2, 1);
    MatRep::new(&f, 2, vec![Matrix::from_ints(&f, &[&[1, 1], &[0, 1]])]).unwrap()
}

fn sl2_f9_example() -> MatRep {
    let f = gf(3, 2);
    let l1 = sl2_generators(&f);
    // q-twists over F_9 are p-power twists by 2 and 4
    l1.tensor(&l1.twist(2)).unwrap().tensor(&l1.twist(4)).unwrap()
}

fn random_invertible(f: &Arc<FqField>, n: usize, rng: &mut RandomSource) -> Matrix {
    loop {
        let data = (0..n * n)
            .map(|_| {
                let c: Vec<u32> = (0..f.degree())
                    .map(|_| rng.rng().gen_range(0..f.characteristic() as u32))
                    .collect();
                f.from_coeffs(&c).unwrap()
            })
            .collect();
        let m = Matrix::from_vec(f, n, n, data);
        if !m.det().is_zero() {
            return m;
        }
    }
}

fn random_rep(f: &Arc<FqField>, n: usize, ngens: usize, rng: &mut RandomSource) -> MatRep {
    let gens = (0..ngens).map(|_| random_invertible(f, n, rng)).collect();
    MatRep::new(f, n, gens).unwrap()
}

fn assert_witness_valid(r: &MatRep, w: &SubmoduleWitness) {
    assert!(w.is_invariant(r), "witness not invariant");
}

#[test]
fn spin_examples() {
    let f = gf(3, 2);
    let nat = sl2_generators(&f);
    assert_eq!(spin(&nat, &[FqElem::ONE, FqElem::ZERO]).unwrap().dim(), 2);

    let j = jordan_gf2();
    let g2 = j.field().clone();
    assert_eq!(spin(&j, &[g2.one(), g2.zero()]).unwrap().dim(), 1);
    assert_eq!(spin(&j, &[g2.zero(), g2.one()]).unwrap().dim(), 2);
    assert_eq!(spin(&j, &[g2.zero(), g2.zero()]), Err(MeataxeError::ZeroVector));

    let triv = MatRep::trivial(&f, 3, 2);
    assert_eq!(spin(&triv, &[FqElem::ONE, FqElem::ONE, FqElem::ZERO]).unwrap().dim(), 1);
}

#[test]
fn proper_submodule_examples() {
    let mut rng = RandomSource::new(1);
    let f = gf(5, 1);
    let one = MatRep::new(&f, 1, vec![Matrix::from_ints(&f, &[&[3]])]).unwrap();
    assert_eq!(find_proper_submodule(&one, &mut rng, 10), IrreducibilityOutcome::Irreducible);

    match find_proper_submodule(&jordan_gf2(), &mut rng, 50) {
        IrreducibilityOutcome::Reducible(w) => {
            assert_eq!(w.dim(), 1);
            assert_witness_valid(&jordan_gf2(), &w);
        }
        other => panic!("unexpected {other:?}"),
    }

    let nat = sl2_generators(&gf(3, 2));
    assert_eq!(find_proper_submodule(&nat, &mut rng, 50), IrreducibilityOutcome::Irreducible);
    let lattice = brute_force_submodules(&nat).unwrap();
    assert_eq!(lattice.len(), 2);
}

#[test]
fn brute_force_examples() {
    assert_eq!(brute_force_submodules(&jordan_gf2()).unwrap().len(), 3);
    let f = gf(5, 1);
    let torus = MatRep::new(&f, 2, vec![Matrix::from_ints(&f, &[&[2, 0], &[0, 3]])]).unwrap();
    let lattice = brute_force_submodules(&torus).unwrap();
    assert_eq!(lattice.len(), 4);
    assert!(lattice_is_semisimple(&lattice, 2));
    assert!(!lattice_is_semisimple(&brute_force_submodules(&jordan_gf2()).unwrap(), 2));
    let big = MatRep::trivial(&gf(3, 2), 6, 1);
    assert!(matches!(brute_force_submodules(&big), Err(MeataxeError::EnumerationTooLarge(_))));
}

#[test]
fn complement_examples() {
    let f = gf(3, 1);
    let r = sl2_generators(&f);
    let whole = SubmoduleWitness::whole(&f, 2);
    match has_equivariant_complement(&r, &whole).unwrap() {
        gcr_core::meataxe::SplitResult::Splits { complement } => assert_eq!(complement.dim(), 0),
        other => panic!("unexpected {other:?}"),
    }
    let line = SubmoduleWitness::span(&f, &[vec![FqElem::ONE, FqElem::ZERO]], 2);
    assert_eq!(
        has_equivariant_complement(&r, &line),
        Err(MeataxeError::NotInvariant(1))
    );

    let j = jordan_gf2();
    let fixed = SubmoduleWitness::span(j.field(), &[vec![FqElem::ONE, FqElem::ZERO]], 2);
    assert!(!has_equivariant_complement(&j, &fixed).unwrap().splits());
}

/// Trace-zero matrices inside all 2×2 matrices under conjugation.
fn sl_in_gl(p: u64, k: usize) -> (MatRep, MatRep, Matrix) {
    let f = gf(p, k);
    let (gl, sl_basis) = sl2_generators(&f).adjoint_rep();
    let w = SubmoduleWitness::span(&f, &sl_basis.row_vecs(), 4);
    let sl = restrict(&gl, &w).unwrap();
    (sl, gl, w.basis().clone())
}

#[test]
fn sl2_summand_of_gl2() {
    let (sl, gl, emb) = sl_in_gl(2, 1);
    assert!(!is_summand_of(&sl, &gl, &emb).unwrap().splits());
    let (sl, gl, emb) = sl_in_gl(3, 2);
    let res = is_summand_of(&sl, &gl, &emb).unwrap();
    assert!(res.splits());
    if let gcr_core::meataxe::SplitResult::Splits { complement } = res {
        assert_eq!(complement.dim(), 1);
        assert_witness_valid(&gl, &complement);
    }
    let f = gf(3, 1);
    let triv = MatRep::trivial(&f, 2, 1);
    let one = MatRep::trivial(&f, 1, 1);
    let emb = Matrix::from_ints(&f, &[&[1, 1]]);
    assert!(is_summand_of(&one, &triv, &emb).unwrap().splits());
    let bad = MatRep::new(&f, 1, vec![Matrix::from_ints(&f, &[&[2]])]).unwrap();
    assert_eq!(is_summand_of(&bad, &triv, &emb), Err(MeataxeError::EmbeddingMismatch(0)));
}

#[test]
fn sl2_f9_tensor_product_is_not_semisimple() {
    let v = sl2_f9_example();
    assert_eq!(v.dim(), 8);
    let mut rng = RandomSource::new(2024);
    match is_semisimple(&v, &mut rng, 64) {
        SemisimpleVerdict::NotSemisimple { witness, extension } => {
            assert_eq!(witness.dim(), 2);
            let u = extension.expect("extension witness");
            assert_eq!(u.dim(), 4);
            assert!(u.contains_subspace(&witness));
            assert_witness_valid(&v, &u);
            let ur = restrict(&v, &u).unwrap();
            assert!(!has_equivariant_complement(&ur, &u.relative(&witness)).unwrap().splits());
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn gl2_f2_v_tensor_vdual_not_semisimple() {
    let f = gf(2, 1);
    let v = sl2_generators(&f);
    let vv = v.tensor(&v.dual()).unwrap();
    let mut rng = RandomSource::new(7);
    let verdict = is_semisimple(&vv, &mut rng, 64);
    assert_eq!(verdict.as_bool(), Some(false));
    let lattice = brute_force_submodules(&vv).unwrap();
    assert!(!lattice_is_semisimple(&lattice, 4));
}

#[test]
fn semisimple_direct_sums_report_summands() {
    let f = gf(3, 2);
    let nat = sl2_generators(&f);
    let triv = MatRep::trivial(&f, 1, 2);
    let s = nat.direct_sum(&triv).unwrap().direct_sum(&nat.twist(1)).unwrap();
    let mut rng = RandomSource::new(3);
    match is_semisimple(&s, &mut rng, 64) {
        SemisimpleVerdict::Semisimple { summands } => {
            let mut dims: Vec<usize> = summands.iter().map(|w| w.dim()).collect();
            dims.sort();
            assert_eq!(dims, vec![1, 2, 2]);
            for w in &summands {
                assert_witness_valid(&s, w);
            }
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn seeded_runs_are_reproducible() {
    let v = sl2_f9_example();
    let a = format!("{:?}", is_semisimple(&v, &mut RandomSource::new(99), 64));
    let b = format!("{:?}", is_semisimple(&v, &mut RandomSource::new(99), 64));
    assert_eq!(a, b);
}

#[test]
fn oracle_agreement_small_fields() {
    let mut rng = RandomSource::new(500);
    let mut conclusive = 0;
    for i in 0..200 {
        let f = if i % 2 == 0 { gf(2, 1) } else { gf(3, 1) };
        let n = rng.rng().gen_range(1..=3);
        let ngens = rng.rng().gen_range(1..=2);
        let r = random_rep(&f, n, ngens, &mut rng);
        let lattice = brute_force_submodules(&r).unwrap();
        for w in &lattice {
            assert_witness_valid(&r, w);
        }
        let expected = lattice_is_semisimple(&lattice, n);
        if let Some(got) = is_semisimple(&r, &mut rng, 64).as_bool() {
            conclusive += 1;
            assert_eq!(got, expected, "sample {i}: {r:?}");
        }
        let irreducible = lattice.len() == 2;
        match find_proper_submodule(&r, &mut rng, 64) {
            IrreducibilityOutcome::Irreducible => assert!(irreducible),
            IrreducibilityOutcome::Reducible(w) => {
                assert!(!irreducible);
                assert!(lattice.contains(&w));
            }
            IrreducibilityOutcome::Inconclusive { .. } => {}
        }
    }
    assert!(conclusive >= 190);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn direct_sum_semisimplicity_is_conjunction(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3]), a in 1usize..=3, b in 1usize..=3) {
        let mut rng = RandomSource::new(seed);
        let f = gf(p, 1);
        let ra = random_rep(&f, a, 2, &mut rng);
        let rb = random_rep(&f, b, 2, &mut rng);
        let sum = ra.direct_sum(&rb).unwrap();
        let va = is_semisimple(&ra, &mut rng, 64).as_bool();
        let vb = is_semisimple(&rb, &mut rng, 64).as_bool();
        let vs = is_semisimple(&sum, &mut rng, 64).as_bool();
        if let (Some(x), Some(y), Some(z)) = (va, vb, vs) {
            prop_assert_eq!(z, x && y);
        }
    }

    #[test]
    fn split_results_are_valid(seed in any::<u64>(), n in 2usize..=4) {
        let mut rng = RandomSource::new(seed);
        let f = gf(3, 1);
        let r = random_rep(&f, n, 1, &mut rng);
        for w in brute_force_submodules(&r).unwrap() {
            if let gcr_core::meataxe::SplitResult::Splits { complement } = has_equivariant_complement(&r, &w).unwrap() {
                prop_assert!(complement.is_invariant(&r));
                prop_assert_eq!(complement.dim() + w.dim(), n);
                let mut rows = w.basis().row_vecs();
                rows.extend(complement.basis().row_vecs());
                if !rows.is_empty() {
                    prop_assert_eq!(Matrix::from_rows(&f, &rows, n).rank(), n);
                }
            }
        }
    }
}
