//! Named end-to-end scenarios with embedded expected values.

use std::sync::Arc;

use gcr_core::criteria::{check_bounds, Guard};
use gcr_core::ffalg::{sl2_generators, FqField, MatRep, Matrix};
use gcr_core::meataxe::{
    brute_force_submodules, has_equivariant_complement, is_semisimple, lattice_is_semisimple, RandomSource,
    SemisimpleVerdict, SubmoduleWitness,
};
use gcr_core::repcalc::{a1_twisted_semisimplicity, dim_simple_a1, TwistedVerdict};
use gcr_core::rootsys::{a_invariant, RootSystem};
use gcr_core::saturate::{sat_power, saturated_closure, SaturateError, UnipotentElem};
use gcr_core::{GroupSpec, ModuleSpec, SimpleType, Weight};
use serde_json::json;

use crate::report::{Basis, Report};

pub struct Scenario {
    pub name: &'static str,
    pub setup: &'static str,
    run: fn(&mut Report),
}

impl Scenario {
    pub fn run(&self) -> Report {
        let mut r = Report::new("example", json!({ "name": self.name }));
        (self.run)(&mut r);
        r
    }
}

pub const NAMES: [&str; 8] = [
    "e6-omega1",
    "coxeter-identity",
    "a-invariants",
    "sl2-f9",
    "gl2-p2",
    "sl2-p2-sharp",
    "vvdual-symbolic",
    "saturation-ga",
];

static SCENARIOS: [Scenario; 8] = [
    Scenario {
        name: "e6-omega1",
        setup: "minuscule 27-dimensional module of E6 at p = 17",
        run: e6_omega1,
    },
    Scenario {
        name: "coxeter-identity",
        setup: "n of the highest root against 2h - 2 for every type at minimal rank",
        run: coxeter_identity,
    },
    Scenario {
        name: "a-invariants",
        setup: "a(G) for a simple group, a torus and products",
        run: a_invariants,
    },
    Scenario {
        name: "sl2-f9",
        setup: "L(1) ⊗ L(1)^[2] ⊗ L(1)^[4] for SL2(F9) in characteristic 3",
        run: sl2_f9,
    },
    Scenario {
        name: "gl2-p2",
        setup: "V ⊗ V* for the natural module of GL2(F2)",
        run: gl2_p2,
    },
    Scenario {
        name: "sl2-p2-sharp",
        setup: "trace-zero matrices inside gl2 under conjugation, over F2 and F9",
        run: sl2_p2_sharp,
    },
    Scenario {
        name: "vvdual-symbolic",
        setup: "V ⊗ V* for V = L(1) ⊗ L(1)^[1] ⊗ L(1)^[2] over SL2 at p = 3",
        run: vvdual_symbolic,
    },
    Scenario {
        name: "saturation-ga",
        setup: "saturating a transvection over GF(9) and the one-parameter law",
        run: saturation_ga,
    },
];

pub fn all() -> &'static [Scenario] {
    &SCENARIOS
}

pub fn find(name: &str) -> Option<&'static Scenario> {
    SCENARIOS.iter().find(|s| s.name == name)
}

fn gf(p: u64, k: usize) -> Arc<FqField> {
    Arc::new(FqField::new(p, k).expect("valid field"))
}

fn simple(s: &str) -> SimpleType {
    s.parse().expect("valid type")
}

fn e6_omega1(r: &mut Report) {
    let g = GroupSpec::simple(simple("E6"));
    let m = ModuleSpec::simple(g, Weight::fundamental(6, 1));
    let b = check_bounds(&m, 17).expect("valid module");
    r.expect("n(V)", b.n.to_string(), "16", Basis::Published);
    r.expect("dim V", b.dim.value.to_string(), "27", Basis::Published);
    r.expect("p > n(V) at p = 17", b.check(Guard::PGtN).holds, true, Basis::Published);
    r.expect("a(E6)", b.a, 7, Basis::Definitional);
}

fn coxeter_identity(r: &mut Report) {
    for t in ["A1", "B2", "C3", "D4", "E6", "E7", "E8", "F4", "G2"] {
        let rs = RootSystem::new(simple(t));
        let n = rs.n_of_weight(&rs.highest_root()).expect("highest root is dominant");
        let h = rs.coxeter_number() as i64;
        r.expect(format!("n(theta) = 2h - 2 for {t}"), n, 2 * h - 2, Basis::Published);
    }
}

fn a_invariants(r: &mut Report) {
    for (g, a) in [("E6", 7u64), ("T1", 1), ("A1xA2", 3), ("E8xG2xT3", 9)] {
        let spec: GroupSpec = g.parse().expect("valid group");
        let basis = if g == "E6" || g == "T1" { Basis::Published } else { Basis::Definitional };
        r.expect(format!("a({g})"), a_invariant(&spec), a, basis);
    }
}

/// `L(1) ⊗ L(1)^[2] ⊗ L(1)^[4]` over GF(9): the q-twists of SL₂(F₉) are
/// the Frobenius powers 2 and 4.
pub fn sl2_f9_module() -> MatRep {
    let f = gf(3, 2);
    let l = sl2_generators(&f);
    l.tensor(&l.twist(2)).and_then(|v| v.tensor(&l.twist(4))).expect("same field and generators")
}

fn sl2_f9(r: &mut Report) {
    r.expect("dim L(91) at p = 3", dim_simple_a1(&91i64, 3).to_string(), "8", Basis::Published);
    let v = sl2_f9_module();
    r.expect("dim V", v.dim(), 8, Basis::Definitional);
    let mut rng = RandomSource::new(2024);
    let verdict = is_semisimple(&v, &mut rng, 64);
    r.expect("V over SL2(F9)", verdict.label(), "not-semisimple", Basis::Published);
    let ext = match &verdict {
        SemisimpleVerdict::NotSemisimple { witness, extension } => {
            r.witnesses.push(json!({"role": "non-split submodule", "witness": witness}));
            if let Some(u) = extension {
                r.witnesses.push(json!({"role": "indecomposable extension", "witness": u}));
            }
            extension.as_ref().map(SubmoduleWitness::dim)
        }
        _ => None,
    };
    r.expect("indecomposable block dimension", ext, Some(4), Basis::Published);
    let sym = a1_twisted_semisimplicity(&[1, 0, 1, 0, 1], &[1, 0, 1, 0, 1], 3).expect("restricted digits");
    let label = match sym {
        TwistedVerdict::Semisimple { .. } => "semisimple",
        TwistedVerdict::UndecidedSymbolically { .. } => "undecided",
    };
    r.expect("V ⊗ V* over SL2 (algebraic group)", label, "semisimple", Basis::Published);
}

fn gl2_p2(r: &mut Report) {
    let f = gf(2, 1);
    let v = sl2_generators(&f);
    r.expect("|GL2(F2)|", v.group_closure(100).map(|g| g.len()).ok(), Some(6), Basis::Definitional);
    let vv = v.tensor(&v.dual()).expect("same field");
    let mut rng = RandomSource::new(7);
    r.expect("V ⊗ V*", is_semisimple(&vv, &mut rng, 64).label(), "not-semisimple", Basis::Published);
    let lattice = brute_force_submodules(&vv).expect("small enumeration");
    r.expect(
        "V ⊗ V* by exhaustive enumeration",
        lattice_is_semisimple(&lattice, vv.dim()),
        false,
        Basis::Computed,
    );
}

fn sl_in_gl(p: u64, k: usize) -> &'static str {
    let f = gf(p, k);
    let (gl, sl) = sl2_generators(&f).adjoint_rep();
    let w = SubmoduleWitness::span(&f, &sl.row_vecs(), gl.dim());
    has_equivariant_complement(&gl, &w).expect("sl is invariant").label()
}

fn sl2_p2_sharp(r: &mut Report) {
    r.expect("sl2 summand of gl2 over F2", sl_in_gl(2, 1), "does-not-split", Basis::Published);
    r.expect("sl2 summand of gl2 over F9", sl_in_gl(3, 2), "splits", Basis::Computed);
}

fn vvdual_symbolic(r: &mut Report) {
    let v = a1_twisted_semisimplicity(&[1, 1, 1], &[1, 1, 1], 3).expect("restricted digits");
    let mut expected: Vec<Vec<u64>> = Vec::new();
    for a in [0u64, 2] {
        for b in [0u64, 2] {
            for c in [0u64, 2] {
                expected.push(vec![a, b, c]);
            }
        }
    }
    match v {
        TwistedVerdict::Semisimple { mut summands } => {
            summands.sort();
            r.expect("verdict", "semisimple", "semisimple", Basis::Published);
            r.expect("number of summands", summands.len(), 8, Basis::Computed);
            r.expect("summand digits", summands, expected, Basis::Computed);
        }
        TwistedVerdict::UndecidedSymbolically { .. } => {
            r.expect("verdict", "undecided", "semisimple", Basis::Published);
        }
    }
}

fn saturation_ga(r: &mut Report) {
    let f = gf(3, 2);
    let u = Matrix::from_ints(&f, &[&[1, 1], &[0, 1]]);
    let rep = MatRep::new(&f, 2, vec![u.clone()]).expect("invertible");
    r.expect("|<u>|", rep.group_closure(100).map(|g| g.len()).ok(), Some(3), Basis::Computed);
    let c = saturated_closure(&rep, 1000).expect("small closure");
    r.expect("saturated closure size", c.size(), 9, Basis::Computed);
    r.expect("closure is saturated", c.saturated, true, Basis::Definitional);

    let f5 = gf(5, 1);
    let j = Matrix::from_ints(&f5, &[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
    let ue = UnipotentElem::new(&j).expect("unipotent");
    let law = f5.elements().iter().all(|s| {
        f5.elements()
            .iter()
            .all(|t| sat_power(&ue, *s).mul(&sat_power(&ue, *t)) == sat_power(&ue, f5.add(*s, *t)))
    });
    r.expect("u^s u^t = u^(s+t) over GF(5)", law, true, Basis::Published);

    let f2 = gf(2, 1);
    let small = MatRep::trivial(&f2, 3, 1);
    let refused = matches!(
        saturated_closure(&small, 10),
        Err(SaturateError::CharacteristicBelowDim { .. })
    );
    r.expect("p < dim V refused", refused, true, Basis::Published);
}
