//! The hexagram lemma: for `P, K, V, O, N, Q` on a conic, `M = PK ∩ VO`,
//! `S = NK ∩ VQ` and `X = NO ∩ PQ` are collinear. On a circle the proof is
//! replayed through Menelaus, the power of a point, and the cross-ratio
//! criterion for concurrent lines.

use serde_json::json;

use super::{cut, line};
use crate::conics::Conic;
use crate::error::{Error, Result};
use crate::menelaus::{Figure, ProofTrace, StepKind};
use crate::projective::{cross_ratio, incidence_residual, PLine, PPoint, Param};
use crate::report::TheoremReport;
use crate::scalar::Rat;

#[derive(Clone, Debug)]
pub struct PascalOutcome {
    pub report: TheoremReport,
    /// The line through `M, S, X`.
    pub line: PLine,
}

pub const HEXAGON: [&str; 6] = ["P", "K", "V", "O", "N", "Q"];

const CITE: &str = "Essay pour les coniques, lemme I";

pub fn pascal_collinear(conic: &Conic, hexagon: &[PPoint; 6]) -> Result<PascalOutcome> {
    if conic.is_degenerate() {
        return Err(Error::Degenerate("conic is a line pair".into()));
    }
    for i in 0..6 {
        if !conic.contains(&hexagon[i]) {
            return Err(Error::Precondition(format!("{} is not on the conic", HEXAGON[i])));
        }
        for j in i + 1..6 {
            if hexagon[i] == hexagon[j] {
                return Err(Error::CoincidentPoints(format!("{} = {}", HEXAGON[i], HEXAGON[j])));
            }
        }
    }
    let [p, k, v, o, n, q] = hexagon;
    let (pk, vo, nk, vq, no, pq) = (
        line(p, k, "PK")?,
        line(v, o, "VO")?,
        line(n, k, "NK")?,
        line(v, q, "VQ")?,
        line(n, o, "NO")?,
        line(p, q, "PQ")?,
    );
    let m = cut(&pk, &vo, "M")?;
    let s = cut(&nk, &vq, "S")?;
    let x = cut(&no, &pq, "X")?;
    let inputs = json!({ "conic": conic, "hexagon": hexagon });
    let mut r = TheoremReport::new("pascal", inputs);
    r.eq("incidence residual of M, S, X", &incidence_residual(&m, &s, &x), &Rat::zero());
    let pascal = if m != s { line(&m, &s, "MS")? } else { line(&m, &x, "MX")? };

    if conic.is_circle() {
        let mut fig = Figure::new();
        for (name, pt) in HEXAGON.iter().zip(hexagon) {
            fig.add(name, pt.clone());
        }
        for (name, pt) in [("M", &m), ("S", &s), ("X", &x)] {
            fig.add(name, pt.clone());
        }
        // the replay needs α, β, A finite and off the hexagon
        if let Ok(t) = circle_replay(&mut fig, [&pk, &vq, &no]) {
            r.attach(t);
        }
    }
    Ok(PascalOutcome { report: r, line: pascal })
}

fn finite_rat(p: Param) -> Result<Rat> {
    match p {
        Param::Finite(r) => Ok(r),
        Param::Infinity => Err(Error::NonGeneric("cross-ratio is infinite".into())),
    }
}

fn circle_replay(fig: &mut Figure, [pk, qv, no]: [&PLine; 3]) -> Result<ProofTrace> {
    let alpha = cut(no, pk, "α")?;
    let beta = cut(no, qv, "β")?;
    let a = cut(pk, qv, "A")?;
    fig.add("α", alpha);
    fig.add("β", beta);
    fig.add("A", a);
    for (name, pt) in &fig.points {
        pt.affine_or_err(name)?;
    }
    let fig = &*fig;
    let mut t = ProofTrace::new("pascal");

    let ma = fig.ratio("M", "A", "α")?;
    t.ratio_step(StepKind::Menelaus, "transversal VO", &ma, &fig.chain(&[["V", "A", "β"], ["O", "β", "α"]])?, CITE);
    let sa = fig.ratio("S", "A", "β")?;
    t.ratio_step(StepKind::Menelaus, "transversal NK", &sa, &fig.chain(&[["K", "A", "α"], ["N", "α", "β"]])?, CITE);

    for (label, l, rr) in [
        ("power of α", ["α", "K", "P"], ["α", "N", "O"]),
        ("power of β", ["β", "N", "O"], ["β", "V", "Q"]),
        ("power of A", ["A", "P", "K"], ["A", "Q", "V"]),
    ] {
        let stmt = format!("{0}{1}·{0}{2} = {3}{4}·{3}{5}", l[0], l[1], l[2], rr[0], rr[1], rr[2]);
        t.step(StepKind::Power, label, stmt, &fig.rect(l[0], l[1], l[2])?, &fig.rect(rr[0], rr[1], rr[2])?, "Euclid III.35/36");
    }

    t.step(
        StepKind::Composition,
        "substitute at P",
        "Pα/PA = [αN·αO/(AQ·AV)]·(KA/Kα)".into(),
        &fig.ratio("P", "α", "A")?.value(),
        &(fig.rect_ratio(["α", "N", "O"], ["A", "Q", "V"])? * fig.ratio("K", "A", "α")?.value()),
        CITE,
    );
    t.step(
        StepKind::Composition,
        "substitute at Q",
        "Qβ/QA = [βN·βO/(AP·AK)]·(VA/Vβ)".into(),
        &fig.ratio("Q", "β", "A")?.value(),
        &(fig.rect_ratio(["β", "N", "O"], ["A", "P", "K"])? * fig.ratio("V", "A", "β")?.value()),
        CITE,
    );
    let g = |n: &str| fig.get(n);
    let lhs = finite_rat(cross_ratio(g("A"), g("α"), g("M"), g("P"))?)?;
    let rhs = finite_rat(cross_ratio(g("A"), g("β"), g("S"), g("Q"))?)?;
    t.step(StepKind::CrossRatio, "equal cross-ratios", "[A,α,M,P] = [A,β,S,Q]".into(), &lhs, &rhs, CITE);
    t.step(
        StepKind::Collinearity,
        "Pappus: αβ, MS, PQ concur",
        "incidence residual of M, S, X".into(),
        &incidence_residual(g("M"), g("S"), g("X")),
        &Rat::zero(),
        "Pappus, Collection, prop. 142",
    );
    Ok(t)
}
