//! Acceptance run: one PASS/FAIL line per criterion, exact arithmetic
//! throughout, wall-clock limits as stated. Exits nonzero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use arguesia::batch::{run_seeds, Sweep};
use arguesia::instance::Kind;
use arguesia::menelaus::{ProofTrace, StepKind};
use arguesia::report::TheoremReport;

struct Outcome {
    ok: bool,
    detail: String,
}

fn reports(sw: &Sweep) -> Result<Vec<&TheoremReport>, String> {
    sw.outcomes
        .iter()
        .map(|o| match (&o.report, &o.error) {
            (Some(r), _) => Ok(r),
            (None, e) => Err(format!("seed {}: {}", o.seed, e.clone().unwrap_or_default())),
        })
        .collect()
}

/// Every report true, plus a per-report check; `seeds` consecutive seeds from 1.
fn suite(kind: Kind, seeds: u64, check: impl Fn(&TheoremReport) -> Result<(), String>) -> Outcome {
    let sw = run_seeds(kind, 1, seeds, 10);
    let rs = match reports(&sw) {
        Ok(rs) => rs,
        Err(e) => return Outcome { ok: false, detail: e },
    };
    for r in rs {
        let seed = r.seed.unwrap_or_default();
        if !r.verdict {
            let bad = r.claims.iter().find(|c| !c.equal).map(|c| c.label.clone()).unwrap_or_else(|| "trace".into());
            return Outcome { ok: false, detail: format!("{kind} seed {seed}: false claim {bad}") };
        }
        if let Err(e) = check(r) {
            return Outcome { ok: false, detail: format!("{kind} seed {seed}: {e}") };
        }
    }
    Outcome { ok: true, detail: format!("{seeds} {kind} seeds") }
}

fn has(r: &TheoremReport, label: &str) -> Result<(), String> {
    match r.claims.iter().find(|c| c.label == label || c.label.ends_with(&format!(": {label}"))) {
        Some(c) if c.equal => Ok(()),
        Some(_) => Err(format!("claim {label:?} is false")),
        None => Err(format!("claim {label:?} missing")),
    }
}

fn trace(r: &TheoremReport) -> Result<&ProofTrace, String> {
    r.trace.as_ref().ok_or_else(|| "no proof trace".to_string())
}

fn steps(t: &ProofTrace, kind: StepKind, n: usize) -> Result<(), String> {
    let got: Vec<_> = t.steps.iter().filter(|s| s.kind == kind).collect();
    if got.len() != n {
        return Err(format!("{} {kind:?} steps, expected {n}", got.len()));
    }
    if got.iter().any(|s| !s.equal) {
        return Err(format!("a {kind:?} step fails"));
    }
    Ok(())
}

fn both(a: Outcome, b: Outcome) -> Outcome {
    match (a.ok, b.ok) {
        (true, true) => Outcome { ok: true, detail: format!("{}; {}", a.detail, b.detail) },
        (false, _) => a,
        _ => b,
    }
}

fn criterion_1() -> Outcome {
    suite(Kind::Menelaus, 500, |r| {
        has(r, "Ratio(N1;b,c)·Ratio(N2;c,a)·Ratio(N3;a,b) = 1")?;
        has(r, "converse: incidence residual of N1, N2, rebuilt N3")
    })
}

fn criterion_2() -> Outcome {
    suite(Kind::Ramee, 500, |r| {
        has(r, "image couples are exchanged by one involution")?;
        has(r, "image couples satisfy the rectangle identities")?;
        has(r, "classification preserved")?;
        has(r, "π∘Φ∘π⁻¹ is the image involution")?;
        steps(trace(r)?, StepKind::Menelaus, 8)
    })
}

fn criterion_3() -> Outcome {
    suite(Kind::RameeShortcut, 200, |r| {
        has(r, "D is its own image")?;
        has(r, "image couples are exchanged by one involution")?;
        steps(trace(r)?, StepKind::Menelaus, 4)
    })
}

fn criterion_4() -> Outcome {
    let mid = suite(Kind::Midpoint, 200, |r| {
        has(r, "metric: f is the midpoint of cb")?;
        has(r, "(BC/BD)(FD/FC)")?;
        has(r, "converse: f' is the midpoint of cb'")
    });
    let bis = suite(Kind::Bisector, 200, |r| {
        has(r, "metric: reflection across KC sends KD onto KF")?;
        has(r, "metric: reflection across KB sends KD onto KF")?;
        has(r, "converse: KB'·KG")
    });
    let p13 = suite(Kind::P13, 200, |r| has(r, "(B,G;D,F)"));
    both(both(mid, bis), p13)
}

fn criterion_5() -> Outcome {
    suite(Kind::Quadrangle, 200, |r| {
        has(r, "(I,K), (P,Q), (G,H) exchanged by one involution")?;
        has(r, "perspectives and quadrangle agree")?;
        steps(trace(r)?, StepKind::Menelaus, 4)
    })
}

fn criterion_6() -> Outcome {
    suite(Kind::Pencil, 100, |r| {
        has(r, "line-pair members")?;
        has(r, "tangency point is fixed")?;
        has(r, "tangency point is one of the fixed points")?;
        has(r, "σ(a) = c: σ(G) = Q")?;
        has(r, "σ(c') = a': σ(P) = H")?;
        let members = (1..=5).filter(|i| r.claims.iter().any(|c| c.label.starts_with(&format!("member {i}:")))).count();
        if members != 5 {
            return Err(format!("{members} members checked"));
        }
        Ok(())
    })
}

fn criterion_7() -> Outcome {
    suite(Kind::ParallelBornales, 200, |r| {
        has(r, "IC·IB/(KD·KE) = IQ·IP/(KQ·KP)")?;
        has(r, "CI·CB/(DK·DE) = CQ·CF/(DQ·DF)")?;
        has(r, "BI·BC/(EK·ED) = BF·BP/(EF·EP)")
    })
}

fn criterion_8() -> Outcome {
    suite(Kind::Beaugrand, 100, |r| {
        let t = trace(r)?;
        steps(t, StepKind::Apollonius, 2)?;
        steps(t, StepKind::Menelaus, 2)?;
        steps(t, StepKind::Conclusion, 1)?;
        steps(t, StepKind::Analogy, 2)
    })
}

fn criterion_9() -> Outcome {
    suite(Kind::Pascal, 200, |r| {
        has(r, "incidence residual of M, S, X")?;
        let images = (1..=20).filter(|j| has(r, &format!("collineation {j}: incidence residual of M, S, X")).is_ok()).count();
        if images != 20 {
            return Err(format!("{images} of 20 collineation images verified"));
        }
        steps(trace(r)?, StepKind::CrossRatio, 1)
    })
}

fn criterion_10() -> Outcome {
    suite(Kind::Retablissement, 50, |r| {
        has(r, "base couples in involution")?;
        has(r, "pulled-back involution is the cut plane's")
    })
}

fn run_cli(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_arguesia"))
        .args(args)
        .env_remove("ARGUESIA_SEED")
        .output()
        .expect("binary runs");
    (out.status.code(), out.stdout)
}

fn criterion_11(start: Instant) -> Outcome {
    let invocations: [&[&str]; 6] = [
        &["verify", "ramee", "--seed", "1", "--trials", "20", "--json"],
        &["verify", "pencil", "--seed", "3", "--json"],
        &["verify", "pascal", "--seed", "2"],
        &["replay", "ramee", "--seed", "1", "--json"],
        &["replay", "beaugrand", "--seed", "5"],
        &["replay", "quadrangle", "--seed", "8", "--json"],
    ];
    for args in invocations {
        let (c1, o1) = run_cli(args);
        let (c2, o2) = run_cli(args);
        if c1 != Some(0) || c1 != c2 || o1 != o2 || o1.is_empty() {
            return Outcome { ok: false, detail: format!("`{}` not reproducible or failing", args.join(" ")) };
        }
    }
    let total = start.elapsed();
    Outcome {
        ok: total < Duration::from_secs(120),
        detail: format!("6 invocations byte-identical; full suite {:.1} s", total.as_secs_f64()),
    }
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome, Option<u64>);
    let criteria: [Criterion; 10] = [
        ("Menelaus suite", criterion_1, Some(5)),
        ("Ramée suite", criterion_2, Some(10)),
        ("Ramée shortcut", criterion_3, None),
        ("Special cases", criterion_4, Some(5)),
        ("Quadrangle suite", criterion_5, Some(5)),
        ("Pencil suite", criterion_6, Some(20)),
        ("Parallel bornales", criterion_7, None),
        ("Beaugrand suite", criterion_8, None),
        ("Pascal suite", criterion_9, None),
        ("Rétablissement", criterion_10, None),
    ];
    let start = Instant::now();
    let mut all = true;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = f();
        let secs = t.elapsed().as_secs_f64();
        let in_time = limit.is_none_or(|l| secs < l as f64);
        let ok = out.ok && in_time;
        all &= ok;
        let limit = limit.map(|l| format!(" (limit {l} s)")).unwrap_or_default();
        let late = if in_time { "" } else { " [too slow]" };
        println!("{} {:>2}. {name}: {} in {secs:.2} s{limit}{late}", if ok { "PASS" } else { "FAIL" }, i + 1, out.detail);
    }
    let t = Instant::now();
    let out = criterion_11(start);
    all &= out.ok;
    println!(
        "{} 11. Determinism: {} (CLI checks {:.2} s, limit 120 s)",
        if out.ok { "PASS" } else { "FAIL" },
        out.detail,
        t.elapsed().as_secs_f64()
    );
    if !all {
        std::process::exit(1);
    }
}
