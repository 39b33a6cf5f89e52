//! The involution theorem through four conic points `K, N, O, V`, by two
//! instances of Apollonius III.17 and two of Menelaus. Rectangles are
//! signed at their common point, so every step is an exact identity.

use serde::Serialize;

use super::{cut, line};
use crate::conics::{conic_line_intersection, Conic};
use crate::error::{Error, Result};
use crate::menelaus::{Figure, ProofTrace, StepKind};
use crate::projective::{PLine, PPoint};

#[derive(Clone, Debug, Serialize)]
pub struct BeaugrandInput {
    pub conic: Conic,
    pub k: PPoint,
    pub n: PPoint,
    pub o: PPoint,
    pub v: PPoint,
    pub transversal: PLine,
}

fn rational_pair(c: &Conic, l: &PLine, what: &str) -> Result<(PPoint, PPoint)> {
    let ch = conic_line_intersection(c, l)?;
    let pts = ch.rational_points().ok_or_else(|| Error::Irrational {
        discriminant: ch.discriminant.to_string(),
        context: format!("{what} meets the conic irrationally"),
    })?;
    match pts.as_slice() {
        [x] => Ok((x.clone(), x.clone())),
        [x, y] => Ok((x.clone(), y.clone())),
        _ => Err(Error::NonGeneric(format!("{what} misses the conic"))),
    }
}

/// `A, B, C, E` on the transversal (from `NV, KN, KO, VO`), `P = KO ∩ NV`,
/// `Q, R` on the parallel to `NV` through `C`, `F, G` where the
/// transversal meets the conic. The four given points are not required to
/// lie on the conic; that is what the Apollonius steps test.
pub fn beaugrand_figure(input: &BeaugrandInput) -> Result<Figure> {
    let BeaugrandInput { conic, k, n, o, v, transversal: delta } = input;
    if conic.is_degenerate() {
        return Err(Error::Degenerate("conic is a line pair".into()));
    }
    let (nv, kn, ko, vo) = (line(n, v, "NV")?, line(k, n, "KN")?, line(k, o, "KO")?, line(v, o, "VO")?);
    let mut fig = Figure::new();
    for (name, p) in [("K", k), ("N", n), ("O", o), ("V", v)] {
        fig.add(name, p.clone());
    }
    fig.add("A", cut(&nv, delta, "A")?);
    fig.add("B", cut(&kn, delta, "B")?);
    let c = fig.add("C", cut(&ko, delta, "C")?).clone();
    fig.add("E", cut(&vo, delta, "E")?);
    fig.add("P", cut(&ko, &nv, "P")?);
    let mu = nv.parallel_through(&c)?;
    let (q, r) = rational_pair(conic, &mu, "the parallel to NV through C")?;
    fig.add("Q", q);
    fig.add("R", r);
    let (f, g) = rational_pair(conic, delta, "the transversal")?;
    fig.add("F", f);
    fig.add("G", g);
    for (name, p) in &fig.points {
        p.affine_or_err(name)?;
    }
    for [x, y] in [["A", "C"], ["B", "E"], ["A", "P"], ["C", "P"]] {
        if fig.get(x) == fig.get(y) {
            return Err(Error::NonGeneric(format!("{x} and {y} coincide")));
        }
    }
    Ok(fig)
}

const CITE_A: &str = "Advis Charitables p.5 l.25";

pub fn beaugrand_replay(input: &BeaugrandInput) -> Result<ProofTrace> {
    let fig = beaugrand_figure(input)?;
    let rr = |num: [&str; 3], den: [&str; 3]| fig.rect_ratio(num, den);
    let mut t = ProofTrace::new("beaugrand");

    t.step(
        StepKind::Apollonius,
        "Apollonius III.17 at P and C",
        "PN·PV/(CQ·CR) = PK·PO/(CK·CO)".into(),
        &rr(["P", "N", "V"], ["C", "Q", "R"])?,
        &rr(["P", "K", "O"], ["C", "K", "O"])?,
        CITE_A,
    );
    t.step(
        StepKind::Composition,
        "compose with AN·AV/(PN·PV)",
        "AN·AV/(CQ·CR) = [AN·AV/(PN·PV)]·[PK·PO/(CK·CO)]".into(),
        &rr(["A", "N", "V"], ["C", "Q", "R"])?,
        &(rr(["A", "N", "V"], ["P", "N", "V"])? * rr(["P", "K", "O"], ["C", "K", "O"])?),
        "Advis Charitables p.5 l.26",
    );
    t.step(
        StepKind::Apollonius,
        "Apollonius III.17 at A and C",
        "AN·AV/(AF·AG) = CQ·CR/(CF·CG)".into(),
        &rr(["A", "N", "V"], ["A", "F", "G"])?,
        &rr(["C", "Q", "R"], ["C", "F", "G"])?,
        "Advis Charitables p.5 l.28",
    );
    let cite_m = "Advis Charitables p.5 l.31";
    let bac = fig.ratio("B", "A", "C")?;
    t.ratio_step(StepKind::Menelaus, "transversal KN", &bac, &fig.chain(&[["N", "A", "P"], ["K", "P", "C"]])?, cite_m);
    let eac = fig.ratio("E", "A", "C")?;
    t.ratio_step(StepKind::Menelaus, "transversal VO", &eac, &fig.chain(&[["V", "A", "P"], ["O", "P", "C"]])?, cite_m);
    t.step(
        StepKind::Composition,
        "multiply the two Menelaus identities",
        "AB·AE/(CB·CE) = [AN·AV/(PN·PV)]·[PK·PO/(CK·CO)]".into(),
        &rr(["A", "B", "E"], ["C", "B", "E"])?,
        &(rr(["A", "N", "V"], ["P", "N", "V"])? * rr(["P", "K", "O"], ["C", "K", "O"])?),
        cite_m,
    );
    t.step(
        StepKind::Conclusion,
        "final identity",
        "AF·AG/(CF·CG) = AB·AE/(CB·CE)".into(),
        &rr(["A", "F", "G"], ["C", "F", "G"])?,
        &rr(["A", "B", "E"], ["C", "B", "E"])?,
        cite_m,
    );
    t.step(
        StepKind::Analogy,
        "analogy at B and E",
        "BF·BG/(EF·EG) = BA·BC/(EA·EC)".into(),
        &rr(["B", "F", "G"], ["E", "F", "G"])?,
        &rr(["B", "A", "C"], ["E", "A", "C"])?,
        "Advis Charitables p.5",
    );
    t.step(
        StepKind::Analogy,
        "analogy at F and G",
        "FA·FC/(GA·GC) = FB·FE/(GB·GE)".into(),
        &rr(["F", "A", "C"], ["G", "A", "C"])?,
        &rr(["F", "B", "E"], ["G", "B", "E"])?,
        "Advis Charitables p.5",
    );
    Ok(t)
}
