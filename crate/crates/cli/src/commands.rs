use std::fmt::Write as _;
use std::path::Path;

use gcr_core::criteria::{check_bounds, infer as run_infer, parse_facts, rule};
use gcr_core::ffalg::{parse_rep, MatRep};
use gcr_core::meataxe::{
    has_equivariant_complement, is_semisimple, restrict, IrreducibilityOutcome, RandomSource, SemisimpleVerdict,
    SplitResult, SubmoduleWitness,
};
use gcr_core::rootsys::RootSystem;
use gcr_core::saturate::{saturated_closure, SaturateError};
use gcr_core::{GroupSpec, ModuleSpec, SimpleType, Weight};
use serde_json::json;

use crate::report::{exit, Outcome, Report};
use crate::scenarios;
use crate::{BoundsArgs, ExampleArgs, InferArgs, MeataxeArgs, MeataxeTest, SaturateArgs};

fn read(path: &Path, flag: &str) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome::usage(format!("error: --{flag} {}: {e}\n", path.display())))
}

fn load_rep(path: &Path) -> Result<MatRep, Outcome> {
    let text = read(path, "rep")?;
    parse_rep(&text).map_err(|e| Outcome::usage(format!("error: --rep {}: {e}\n", path.display())))
}

fn done(code: i32, text: String, report: Report) -> Outcome {
    Outcome {
        code,
        text,
        report: Some(report),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn bounds(a: &BoundsArgs) -> Outcome {
    let t = match SimpleType::new(a.family, a.rank) {
        Ok(t) => t,
        Err(e) => return Outcome::usage(format!("error: --rank: {e}\n")),
    };
    if a.weight.len() != a.rank {
        return Outcome::usage(format!(
            "error: --weight has {} coordinates, rank is {}\n",
            a.weight.len(),
            a.rank
        ));
    }
    let group = GroupSpec::simple(t);
    let m = ModuleSpec::simple(group.clone(), Weight::new(a.weight.clone()));
    let rep = match check_bounds(&m, a.p) {
        Ok(r) => r,
        Err(e) => {
            let flag = if e.to_string().contains("prime") { "p" } else { "weight" };
            return Outcome::usage(format!("error: --{flag}: {e}\n"));
        }
    };
    let h = RootSystem::new(t).coxeter_number();

    let mut report = Report::new(
        "bounds",
        json!({"family": a.family.to_string(), "rank": a.rank, "weight": a.weight, "p": a.p}),
    );
    report.verdict("n(V)", rep.n.to_string());
    report.verdict("dim V", json!({"value": rep.dim.value.to_string(), "exactness": rep.dim.exactness.to_string()}));
    report.verdict("a(G)", rep.a);
    report.verdict("h", h);

    let mut text = String::new();
    let _ = writeln!(text, "group {t}, weight ({}), p = {}", join(&a.weight), a.p);
    let _ = writeln!(text, "n(V) = {}", rep.n);
    let _ = writeln!(text, "dim V = {} ({})", rep.dim.value, rep.dim.exactness);
    let _ = writeln!(text, "a(G) = {}", rep.a);
    let _ = writeln!(text, "h = {h}");
    for c in &rep.checks {
        let note = if c.conservative { "  (dimension is an upper bound)" } else { "" };
        let _ = writeln!(text, "{}: {}{note}", c.description, yes_no(c.holds));
        report.verdict(c.description, c.holds);
    }
    done(exit::OK, text, report)
}

fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn infer(a: &InferArgs) -> Outcome {
    let text = match read(&a.facts, "facts") {
        Ok(t) => t,
        Err(o) => return o,
    };
    let facts = match parse_facts(&text) {
        Ok(f) => f,
        Err(e) => return Outcome::usage(format!("error: --facts {}: {e}\n", a.facts.display())),
    };
    let inf = match run_infer(&facts) {
        Ok(i) => i,
        Err(e) => return Outcome::usage(format!("error: --facts {}: {e}\n", a.facts.display())),
    };
    let mut report = Report::new(
        "infer",
        json!({"facts": facts.iter().map(|f| f.to_string()).collect::<Vec<_>>()}),
    );
    let mut out = String::new();
    if inf.derivations.is_empty() {
        out.push_str("no derivations\n");
    }
    for (i, d) in inf.derivations.iter().enumerate() {
        let tree = inf.explain(d).expect("derivation belongs to this inference");
        let citation = rule(d.rule_id).map(|r| r.citation).unwrap_or("");
        let steps = tree.steps();
        let plural = if steps == 1 { "" } else { "s" };
        let _ = writeln!(out, "[{}] {} via {} ({citation}), {steps} step{plural}", i + 1, d.conclusion, d.rule_id);
        for line in tree.render().lines() {
            let _ = writeln!(out, "    {line}");
        }
        report.verdicts.push(crate::report::Verdict {
            check: format!("{} via {}", d.conclusion, d.rule_id),
            value: json!({"derived": true, "steps": tree.steps(), "depth": tree.depth()}),
            expected: None,
            pass: None,
        });
        report.witnesses.push(serde_json::to_value(&tree).expect("serializable"));
    }
    done(exit::OK, out, report)
}

/// Rows of field elements, one vector per line, entries separated by spaces.
fn parse_sub(text: &str, r: &MatRep) -> Result<SubmoduleWitness, String> {
    let f = r.field();
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| f.parse_elem(t))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("line {}: {e}", i + 1))?;
        if row.len() != r.dim() {
            return Err(format!("line {}: expected {} entries, found {}", i + 1, r.dim(), row.len()));
        }
        rows.push(row);
    }
    Ok(SubmoduleWitness::span(f, &rows, r.dim()))
}

pub fn meataxe(a: &MeataxeArgs) -> Outcome {
    let rep = match load_rep(&a.rep) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let mut rng = RandomSource::new(a.seed);
    let mut report = Report::new(
        "meataxe",
        json!({
            "rep": a.rep.display().to_string(),
            "test": format!("{:?}", a.test).to_lowercase(),
            "field": rep.field().order(),
            "dim": rep.dim(),
            "seed": a.seed,
            "budget": a.budget,
        }),
    );
    let mut text = String::new();
    let _ = writeln!(text, "module of dimension {} over GF({})", rep.dim(), rep.field().order());
    let code = match a.test {
        MeataxeTest::Irreducible => {
            let outcome = gcr_core::meataxe::find_proper_submodule(&rep, &mut rng, a.budget);
            let (label, code) = match &outcome {
                IrreducibilityOutcome::Irreducible => ("irreducible", exit::OK),
                IrreducibilityOutcome::Reducible(w) => {
                    witness(&mut text, &mut report, "submodule", w);
                    ("reducible", exit::NEGATIVE)
                }
                IrreducibilityOutcome::Inconclusive { .. } => ("inconclusive", exit::INCONCLUSIVE),
            };
            report.verdict("irreducible", label);
            text.insert_str(0, &format!("verdict: {label}\n"));
            code
        }
        MeataxeTest::Semisimple => {
            let v = is_semisimple(&rep, &mut rng, a.budget);
            let label = v.label();
            report.verdict("semisimple", label);
            text.insert_str(0, &format!("verdict: {label}\n"));
            match &v {
                SemisimpleVerdict::Semisimple { summands } => {
                    let dims: Vec<usize> = summands.iter().map(|s| s.dim()).collect();
                    let _ = writeln!(text, "summand dimensions: {dims:?}");
                    for s in summands {
                        report.witnesses.push(json!({"role": "summand", "witness": s}));
                    }
                    exit::OK
                }
                SemisimpleVerdict::NotSemisimple { witness: w, extension } => {
                    witness(&mut text, &mut report, "non-split submodule", w);
                    if let Some(u) = extension {
                        witness(&mut text, &mut report, "indecomposable extension", u);
                    }
                    exit::NEGATIVE
                }
                SemisimpleVerdict::Inconclusive { .. } => exit::INCONCLUSIVE,
            }
        }
        MeataxeTest::Summand => {
            let (amb, w) = match (&a.sub, a.adjoint) {
                (Some(_), true) | (None, false) => {
                    return Outcome::usage("error: --test summand needs exactly one of --sub or --adjoint\n")
                }
                (None, true) => {
                    let (gl, sl) = rep.adjoint_rep();
                    let w = SubmoduleWitness::span(rep.field(), &sl.row_vecs(), gl.dim());
                    (gl, w)
                }
                (Some(path), false) => {
                    let t = match read(path, "sub") {
                        Ok(t) => t,
                        Err(o) => return o,
                    };
                    match parse_sub(&t, &rep) {
                        Ok(w) => (rep.clone(), w),
                        Err(e) => return Outcome::usage(format!("error: --sub {}: {e}\n", path.display())),
                    }
                }
            };
            if let Err(e) = restrict(&amb, &w) {
                return Outcome::usage(format!("error: --sub: {e}\n"));
            }
            let res = match has_equivariant_complement(&amb, &w) {
                Ok(r) => r,
                Err(e) => return Outcome::usage(format!("error: --sub: {e}\n")),
            };
            let label = res.label();
            report.verdict("summand", label);
            text = format!(
                "verdict: {label}\nsubmodule of dimension {} in ambient of dimension {}\n",
                w.dim(),
                amb.dim()
            );
            report.witnesses.push(json!({"role": "submodule", "witness": w}));
            match &res {
                SplitResult::Splits { complement } => {
                    witness(&mut text, &mut report, "complement", complement);
                    exit::OK
                }
                SplitResult::DoesNotSplit => exit::NEGATIVE,
            }
        }
    };
    done(code, text, report)
}

fn witness(text: &mut String, report: &mut Report, role: &str, w: &SubmoduleWitness) {
    let f = w.basis().field().clone();
    let _ = writeln!(text, "{role}: dimension {}", w.dim());
    for row in w.basis().row_vecs() {
        let entries: Vec<String> = row.iter().map(|e| f.format_elem(*e)).collect();
        let _ = writeln!(text, "  {}", entries.join(" "));
    }
    report.witnesses.push(json!({"role": role, "witness": w}));
}

pub fn example(a: &ExampleArgs) -> Outcome {
    let Some(s) = scenarios::find(&a.name) else {
        return Outcome::usage(format!(
            "error: --name: unknown scenario `{}`; valid names: {}\n",
            a.name,
            scenarios::NAMES.join(", ")
        ));
    };
    let report = s.run();
    let mut text = String::new();
    let _ = writeln!(text, "scenario {}: {}", s.name, s.setup);
    for v in &report.verdicts {
        let mark = match v.pass {
            Some(true) => "ok  ",
            Some(false) => "FAIL",
            None => "    ",
        };
        let basis = report
            .provenance
            .iter()
            .find(|p| p.claim == v.check)
            .map(|p| p.basis.tag())
            .unwrap_or("");
        let expected = v.expected.as_ref().map(|e| format!(" expected {e}")).unwrap_or_default();
        let _ = writeln!(text, "{mark} {}: got {}{expected} [{basis}]", v.check, v.value);
    }
    let pass = report.all_pass();
    let _ = writeln!(text, "{}", if pass { "all checks passed" } else { "some checks failed" });
    done(if pass { exit::OK } else { exit::NEGATIVE }, text, report)
}

pub fn saturate(a: &SaturateArgs) -> Outcome {
    let rep = match load_rep(&a.rep) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let mut report = Report::new(
        "saturate",
        json!({"rep": a.rep.display().to_string(), "cap": a.cap, "field": rep.field().order(), "dim": rep.dim()}),
    );
    let c = match saturated_closure(&rep, a.cap) {
        Ok(c) => c,
        Err(e @ SaturateError::CharacteristicBelowDim { .. }) => {
            return Outcome::usage(format!("error: --rep: {e}; saturation requires p >= dim V\n"))
        }
        Err(SaturateError::Rep(e)) => {
            let mut text = format!("verdict: cap-exceeded\n{e}\n");
            report.verdict("closure", "cap-exceeded");
            text.push_str(&format!("cap: {}\n", a.cap));
            return done(exit::INCONCLUSIVE, text, report);
        }
        Err(e) => return Outcome::usage(format!("error: --rep: {e}\n")),
    };
    let f = c.field.clone();
    let mut text = String::new();
    let _ = writeln!(text, "closure size: {}", c.size());
    let _ = writeln!(text, "saturated: {}", yes_no(c.saturated));
    let _ = writeln!(text, "adjoined one-parameter subgroups: {}", c.adjoined.len());
    report.verdict("closure size", c.size());
    report.verdict("saturated", c.saturated);
    report.verdict("adjoined", c.adjoined.len());
    for u in &c.adjoined {
        let rows: Vec<Vec<String>> = u
            .row_vecs()
            .iter()
            .map(|r| r.iter().map(|e| f.format_elem(*e)).collect())
            .collect();
        let _ = writeln!(
            text,
            "  u = [{}]",
            rows.iter().map(|r| r.join(" ")).collect::<Vec<_>>().join("; ")
        );
        report.witnesses.push(json!({"role": "adjoined-unipotent", "matrix": rows}));
    }
    done(exit::OK, text, report)
}
