//! Menelaus' theorem in the common-origin signed form, the automatic
//! decomposition of a brin ratio, and step-by-step replays of the two
//! classical involution proofs built from it.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::involution::NodeCouples;
use crate::projective::{collinear, direction, join, meet, PLine, PPoint};
use crate::scalar::Rat;

/// The signed ratio `t` with `num_end − origin = t·(den_end − origin)`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub origin: PPoint,
    pub num_end: PPoint,
    pub den_end: PPoint,
    pub names: [String; 3],
}

impl Ratio {
    pub fn new(origin: &PPoint, num_end: &PPoint, den_end: &PPoint) -> Result<Self> {
        Ratio::named(["O", "N", "D"], [origin, num_end, den_end])
    }

    pub fn named(names: [&str; 3], pts: [&PPoint; 3]) -> Result<Self> {
        let [o, n, d] = pts;
        if o == d {
            return Err(Error::CoincidentPoints(format!(
                "ratio {}{}/{}{} has a zero denominator",
                names[0], names[1], names[0], names[2]
            )));
        }
        if !collinear(o, n, d) {
            return Err(Error::NotCollinear(format!(
                "{}, {}, {} do not lie on one line",
                names[0], names[1], names[2]
            )));
        }
        for (p, name) in pts.iter().zip(names) {
            p.affine_or_err(name)?;
        }
        Ok(Ratio {
            origin: o.clone(),
            num_end: n.clone(),
            den_end: d.clone(),
            names: names.map(String::from),
        })
    }

    pub fn value(&self) -> Rat {
        let (nx, ny) = direction(&self.origin, &self.num_end).expect("checked finite");
        let (dx, dy) = direction(&self.origin, &self.den_end).expect("checked finite");
        (nx * &dx + ny * &dy) / (dx.square() + dy.square())
    }

    pub fn inverted(&self) -> Ratio {
        let [o, n, d] = self.names.clone();
        Ratio {
            origin: self.origin.clone(),
            num_end: self.den_end.clone(),
            den_end: self.num_end.clone(),
            names: [o, d, n],
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [o, n, d] = &self.names;
        write!(f, "{o}{n}/{o}{d}")
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} = {}", self.value())
    }
}

/// A formal product of ratios.
#[derive(Clone, PartialEq, Eq, Serialize, Default)]
pub struct RatioChain {
    pub factors: Vec<Ratio>,
}

impl RatioChain {
    pub fn new(factors: Vec<Ratio>) -> Self {
        RatioChain { factors }
    }

    pub fn value(&self) -> Rat {
        self.factors.iter().map(Ratio::value).product()
    }

    pub fn inverted(&self) -> RatioChain {
        RatioChain::new(self.factors.iter().map(Ratio::inverted).collect())
    }

    /// Rewrites `Oa/Ob · Ob/Oc` to `Oa/Oc` and drops `Oa/Oa`, left to right.
    pub fn cancel_adjacent(&self) -> RatioChain {
        let mut out: Vec<Ratio> = Vec::new();
        for r in &self.factors {
            if r.num_end == r.den_end {
                continue;
            }
            match out.last_mut() {
                Some(prev) if prev.origin == r.origin && prev.den_end == r.num_end => {
                    prev.den_end = r.den_end.clone();
                    prev.names[2] = r.names[2].clone();
                    if prev.num_end == prev.den_end {
                        out.pop();
                    }
                }
                _ => out.push(r.clone()),
            }
        }
        RatioChain::new(out)
    }
}

impl fmt::Display for RatioChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.factors.iter().map(|r| format!("({r})")).collect();
        f.write_str(&parts.join("·"))
    }
}

impl fmt::Debug for RatioChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} = {}", self.value())
    }
}

/// Three rays cut by a tronc: node `Ni` lies on ray `ri`; the vertex with
/// index `i` is the meet of the two other rays.
#[derive(Clone, Debug, Serialize)]
pub struct SectorFigure {
    pub tronc: PLine,
    pub nodes: [PPoint; 3],
    pub rays: [PLine; 3],
    pub vertices: [PPoint; 3],
}

impl SectorFigure {
    pub fn new(tronc: PLine, nodes: [PPoint; 3], rays: [PLine; 3]) -> Result<Self> {
        for i in 0..3 {
            if rays[i] == tronc {
                return Err(Error::Degenerate(format!("ray {} runs along the tronc", i + 1)));
            }
            if !nodes[i].lies_on(&tronc) || !nodes[i].lies_on(&rays[i]) {
                return Err(Error::NotOnLine(format!("node N{} is not on its tronc and ray", i + 1)));
            }
        }
        if nodes[0] == nodes[1] || nodes[1] == nodes[2] || nodes[0] == nodes[2] {
            return Err(Error::CoincidentPoints("nodes must be pairwise distinct".into()));
        }
        let vertices = [
            meet(&rays[1], &rays[2])?,
            meet(&rays[0], &rays[2])?,
            meet(&rays[0], &rays[1])?,
        ];
        if vertices.iter().any(|v| v.lies_on(&tronc)) {
            return Err(Error::Degenerate("a vertex lies on the tronc".into()));
        }
        Ok(SectorFigure {
            tronc,
            nodes,
            rays,
            vertices,
        })
    }

    /// Triangle `a, b, c` cut by a transversal.
    pub fn from_triangle(a: &PPoint, b: &PPoint, c: &PPoint, tronc: &PLine) -> Result<Self> {
        let rays = [join(b, c)?, join(a, c)?, join(a, b)?];
        let nodes = [
            meet(&rays[0], tronc)?,
            meet(&rays[1], tronc)?,
            meet(&rays[2], tronc)?,
        ];
        SectorFigure::new(tronc.clone(), nodes, rays)
    }

    const VERTEX: [&'static str; 3] = ["a", "b", "c"];
    const NODE: [&'static str; 3] = ["N1", "N2", "N3"];

    /// `Ratio(Ni; v, w)` with names.
    fn node_ratio(&self, i: usize, v: usize, w: usize) -> Result<Ratio> {
        Ratio::named(
            [Self::NODE[i], Self::VERTEX[v], Self::VERTEX[w]],
            [&self.nodes[i], &self.vertices[v], &self.vertices[w]],
        )
    }
}

/// `Ratio(N1;b,c) · Ratio(N2;c,a) · Ratio(N3;a,b)`, which Menelaus makes 1.
pub fn menelaus_product(sf: &SectorFigure) -> Result<Rat> {
    Ok(RatioChain::new(vec![
        sf.node_ratio(0, 1, 2)?,
        sf.node_ratio(1, 2, 0)?,
        sf.node_ratio(2, 0, 1)?,
    ])
    .value())
}

/// A brin ratio written as a product of two others, both sides evaluated.
#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub target: Ratio,
    pub chain: RatioChain,
    pub lhs: Rat,
    pub rhs: Rat,
    pub equal: bool,
}

/// The fill-in-the-missing-vertex rule: for node `k` whose ray carries
/// vertices `u, w`, the missing vertex `m` gives
/// `Nk u/Nk w = (Nw u/Nw m)·(Nu m/Nu w)`. With `inverted` the target is
/// `Nk w/Nk u` and every factor flips.
pub fn decompose_ratio(sf: &SectorFigure, node: usize, inverted: bool) -> Result<Decomposition> {
    if node > 2 {
        return Err(Error::Precondition(format!("node index {node} out of range")));
    }
    let (k, u, w) = (node, (node + 1) % 3, (node + 2) % 3);
    let mut target = sf.node_ratio(k, u, w)?;
    let mut chain = RatioChain::new(vec![sf.node_ratio(w, u, k)?, sf.node_ratio(u, k, w)?]);
    if inverted {
        target = target.inverted();
        chain = chain.inverted();
    }
    let (lhs, rhs) = (target.value(), chain.value());
    Ok(Decomposition {
        equal: lhs == rhs,
        target,
        chain,
        lhs,
        rhs,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    Menelaus,
    Aggregation,
    Conclusion,
    Apollonius,
    Composition,
    Power,
    CrossRatio,
    Collinearity,
    Analogy,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProofStep {
    pub label: String,
    pub kind: StepKind,
    pub statement: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub cite: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProofTrace {
    pub name: String,
    pub steps: Vec<ProofStep>,
    pub verdict: bool,
}

impl ProofTrace {
    pub fn new(name: &str) -> Self {
        ProofTrace {
            name: name.into(),
            steps: Vec::new(),
            verdict: true,
        }
    }

    pub fn step(&mut self, kind: StepKind, label: &str, statement: String, lhs: &Rat, rhs: &Rat, cite: &str) {
        let equal = lhs == rhs;
        self.verdict &= equal;
        self.steps.push(ProofStep {
            label: label.into(),
            kind,
            statement,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            equal,
            cite: cite.into(),
        });
    }

    /// `lhs = chain` between a single ratio and a product.
    pub fn ratio_step(&mut self, kind: StepKind, label: &str, lhs: &Ratio, rhs: &RatioChain, cite: &str) {
        self.step(kind, label, format!("{lhs} = {rhs}"), &lhs.value(), &rhs.value(), cite);
    }

    pub fn count(&self, kind: StepKind) -> usize {
        self.steps.iter().filter(|s| s.kind == kind).count()
    }
}

/// Named points of a figure, for ratios and rectangles by label.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Figure {
    pub points: BTreeMap<String, PPoint>,
}

impl Figure {
    pub fn new() -> Self {
        Figure::default()
    }

    pub fn add(&mut self, name: &str, p: PPoint) -> &PPoint {
        self.points.insert(name.to_string(), p);
        &self.points[name]
    }

    pub fn get(&self, name: &str) -> &PPoint {
        self.points
            .get(name)
            .unwrap_or_else(|| panic!("figure has no point {name}"))
    }

    pub fn ratio(&self, o: &str, n: &str, d: &str) -> Result<Ratio> {
        Ratio::named([o, n, d], [self.get(o), self.get(n), self.get(d)])
    }

    pub fn chain(&self, parts: &[[&str; 3]]) -> Result<RatioChain> {
        parts
            .iter()
            .map(|[o, n, d]| self.ratio(o, n, d))
            .collect::<Result<Vec<_>>>()
            .map(RatioChain::new)
    }

    /// Signed rectangle `XY·XZ` of collinear points, as a dot product so that
    /// rectangles on parallel lines share a scale.
    pub fn rect(&self, x: &str, y: &str, z: &str) -> Result<Rat> {
        rectangle(self.get(x), self.get(y), self.get(z))
    }

    pub fn rect_ratio(&self, num: [&str; 3], den: [&str; 3]) -> Result<Rat> {
        self.rect(num[0], num[1], num[2])?
            .checked_div(&self.rect(den[0], den[1], den[2])?)
    }
}

pub fn rectangle(x: &PPoint, y: &PPoint, z: &PPoint) -> Result<Rat> {
    if !collinear(x, y, z) {
        return Err(Error::NotCollinear("rectangle sides on different lines".into()));
    }
    let (ax, ay) = direction(x, y)?;
    let (bx, by) = direction(x, z)?;
    Ok(ax * bx + ay * by)
}

fn need_finite(fig: &Figure, names: &[&str]) -> Result<()> {
    for n in names {
        fig.get(n).affine_or_err(n)?;
    }
    Ok(())
}

fn labelled_meet(l: &PLine, m: &PLine, what: &str) -> Result<PPoint> {
    meet(l, m).map_err(|_| Error::NonGeneric(format!("{what} is undefined")))
}

/// Projects couples `(B,H), (C,G), (D,F)` on Δ from `k` onto the line of
/// `target`, returning the figure with upper- and lower-case names.
pub(crate) fn ramee_figure(nc: &NodeCouples, k: &PPoint, target: &PLine) -> Result<Figure> {
    if k.lies_on(&nc.chart.line) || k.lies_on(target) {
        return Err(Error::Precondition("center K lies on the source or image line".into()));
    }
    let mut fig = Figure::new();
    fig.add("K", k.clone());
    let [(b, h), (c, g), (d, f)] = &nc.pairs;
    for (name, p) in [("B", b), ("H", h), ("C", c), ("G", g), ("D", d), ("F", f)] {
        fig.add(name, p.clone());
        let img = labelled_meet(&join(k, p)?, target, &format!("image of {name}"))?;
        fig.add(&name.to_lowercase(), img);
    }
    Ok(fig)
}

/// Replays the ramée proof: four Menelaus steps from the image line to the
/// intermediate line `Df`, four from `Df` back to Δ, and three aggregations.
/// When δ passes through `D` the intermediate line is δ itself and only the
/// second series is needed.
pub fn replay_ramee_proof(nc: &NodeCouples, k: &PPoint, delta: &PLine) -> Result<ProofTrace> {
    let mut fig = ramee_figure(nc, k, delta)?;
    need_finite(&fig, &["K", "B", "H", "C", "G", "D", "F", "b", "h", "c", "g", "d", "f"])?;
    if fig.get("D") == fig.get("F") {
        return Err(Error::NonGeneric("couple D, F is double: no intermediate line".into()));
    }
    if fig.get("d") == fig.get("D") {
        return replay_ramee_shortcut(fig);
    }
    let df = join(fig.get("D"), fig.get("f"))?;
    // 2, 3, 4, 5 are the traces of rameaux KB, KC, KG, KH on Df
    for (n, x) in [("2", "B"), ("3", "C"), ("4", "G"), ("5", "H")] {
        let p = labelled_meet(&join(fig.get("K"), fig.get(x))?, &df, &format!("point {n}"))?;
        fig.add(n, p);
    }
    need_finite(&fig, &["2", "3", "4", "5"])?;

    let mut t = ProofTrace::new("ramee");
    let order = [("g", "4", "G"), ("c", "3", "C"), ("b", "2", "B"), ("h", "5", "H")];
    for (x, n, _) in order {
        let lhs = fig.ratio(x, "d", "f")?;
        let rhs = fig.chain(&[["K", "d", "D"], [n, "D", "f"]])?;
        t.ratio_step(StepKind::Menelaus, &format!("series 1: {x}"), &lhs, &rhs, "Brouillon p.11 l.38");
    }
    for (_, n, x) in order {
        let lhs = fig.ratio(n, "D", "f")?;
        let rhs = fig.chain(&[[x, "D", "F"], ["K", "F", "f"]])?;
        t.ratio_step(StepKind::Menelaus, &format!("series 2: {n}"), &lhs, &rhs, "Brouillon p.11 l.45");
    }
    let alpha = fig.ratio("K", "d", "D")?.value().square() * fig.ratio("K", "F", "f")?.value().square();
    let lower_gc = fig.rect_ratio(["d", "g", "c"], ["f", "g", "c"])?;
    let upper_gc = fig.rect_ratio(["D", "G", "C"], ["F", "G", "C"])?;
    t.step(
        StepKind::Aggregation,
        "aggregate g, c",
        "dg·dc/(fg·fc) = α·DG·DC/(FG·FC), α = (Kd/KD)²(KF/Kf)²".into(),
        &lower_gc,
        &(&alpha * &upper_gc),
        "Brouillon p.12 l.11",
    );
    let lower_bh = fig.rect_ratio(["d", "b", "h"], ["f", "b", "h"])?;
    let upper_bh = fig.rect_ratio(["D", "B", "H"], ["F", "B", "H"])?;
    t.step(
        StepKind::Aggregation,
        "aggregate b, h",
        "db·dh/(fb·fh) = α·DB·DH/(FB·FH)".into(),
        &lower_bh,
        &(&alpha * &upper_bh),
        "Brouillon p.12 l.7",
    );
    t.step(
        StepKind::Conclusion,
        "involution on δ",
        "db·dh/(fb·fh) = dg·dc/(fg·fc)".into(),
        &lower_bh,
        &lower_gc,
        "Brouillon p.12 l.26",
    );
    Ok(t)
}

fn replay_ramee_shortcut(mut fig: Figure) -> Result<ProofTrace> {
    // δ = Df, so the traces 2, 3, 4, 5 are b, c, g, h themselves
    for (n, x) in [("2", "b"), ("3", "c"), ("4", "g"), ("5", "h")] {
        let p = fig.get(x).clone();
        fig.add(n, p);
    }
    let mut t = ProofTrace::new("ramee shortcut");
    for (n, x) in [("4", "G"), ("3", "C"), ("2", "B"), ("5", "H")] {
        let lhs = fig.ratio(n, "D", "f")?;
        let rhs = fig.chain(&[[x, "D", "F"], ["K", "F", "f"]])?;
        t.ratio_step(StepKind::Menelaus, &format!("series 2: {n}"), &lhs, &rhs, "Brouillon p.11 l.45");
    }
    let beta = fig.ratio("K", "F", "f")?.value().square();
    let img_25 = fig.rect_ratio(["D", "2", "5"], ["f", "2", "5"])?;
    let img_34 = fig.rect_ratio(["D", "3", "4"], ["f", "3", "4"])?;
    t.step(
        StepKind::Aggregation,
        "aggregate 2, 5",
        "D2·D5/(f2·f5) = (KF/Kf)²·DB·DH/(FB·FH)".into(),
        &img_25,
        &(&beta * fig.rect_ratio(["D", "B", "H"], ["F", "B", "H"])?),
        "Brouillon p.12 l.7",
    );
    t.step(
        StepKind::Aggregation,
        "aggregate 3, 4",
        "D3·D4/(f3·f4) = (KF/Kf)²·DC·DG/(FC·FG)".into(),
        &img_34,
        &(&beta * fig.rect_ratio(["D", "C", "G"], ["F", "C", "G"])?),
        "Brouillon p.12 l.11",
    );
    t.step(
        StepKind::Conclusion,
        "involution (D,f), (2,5), (3,4)",
        "D2·D5/(f2·f5) = D3·D4/(f3·f4)".into(),
        &img_25,
        &img_34,
        "Brouillon p.12 l.26",
    );
    Ok(t)
}

/// Four Menelaus steps pivoting on `F = BE ∩ DC`, then the two
/// aggregations whose right sides are composed of the same four ratios.
pub fn replay_quadrangle_proof(fig: &Figure) -> Result<ProofTrace> {
    need_finite(fig, &["B", "C", "D", "E", "F", "I", "K", "P", "Q", "G", "H"])?;
    let mut t = ProofTrace::new("quadrangle");
    let steps = [
        ("I", "C", "B", "Brouillon p.17 l.7"),
        ("K", "D", "E", "Brouillon p.17 l.9"),
        ("G", "D", "B", "Brouillon p.17 l.16"),
        ("H", "C", "E", "Brouillon p.17 l.18"),
    ];
    for (x, a, b, cite) in steps {
        let lhs = fig.ratio(x, "Q", "P")?;
        let rhs = fig.chain(&[[a, "Q", "F"], [b, "F", "P"]])?;
        t.ratio_step(StepKind::Menelaus, &format!("pivot F: {x}Q/{x}P"), &lhs, &rhs, cite);
    }
    let composed = fig
        .chain(&[["C", "Q", "F"], ["B", "F", "P"], ["D", "Q", "F"], ["E", "F", "P"]])?
        .value();
    t.step(
        StepKind::Aggregation,
        "aggregate I, K",
        "QI·QK/(PI·PK) = (CQ/CF)(BF/BP)(DQ/DF)(EF/EP)".into(),
        &fig.rect_ratio(["Q", "I", "K"], ["P", "I", "K"])?,
        &composed,
        "Brouillon p.17 l.11",
    );
    t.step(
        StepKind::Aggregation,
        "aggregate G, H",
        "QG·QH/(PG·PH) = (DQ/DF)(BF/BP)(CQ/CF)(EF/EP)".into(),
        &fig.rect_ratio(["Q", "G", "H"], ["P", "G", "H"])?,
        &composed,
        "Brouillon p.17 l.20",
    );
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::PLine;

    fn q(s: &str) -> Rat {
        Rat::parse(s).unwrap()
    }

    fn example() -> SectorFigure {
        // triangle (0,0), (4,0), (0,4) cut by y = x − 1
        let tr = PLine::new(Rat::one(), Rat::int(-1), Rat::int(-1)).unwrap();
        SectorFigure::from_triangle(&PPoint::xy(0, 0), &PPoint::xy(4, 0), &PPoint::xy(0, 4), &tr).unwrap()
    }

    #[test]
    fn hand_computed_menelaus() {
        let sf = example();
        // N1 = (5/2, 3/2) on bc, N2 = (0, −1) on ca, N3 = (1, 0) on ab
        assert_eq!(sf.nodes[0], PPoint::affine(q("5/2"), q("3/2")));
        assert_eq!(sf.node_ratio(0, 1, 2).unwrap().value(), q("-3/5"));
        assert_eq!(sf.node_ratio(1, 2, 0).unwrap().value(), q("5"));
        assert_eq!(sf.node_ratio(2, 0, 1).unwrap().value(), q("-1/3"));
        assert_eq!(menelaus_product(&sf).unwrap(), Rat::one());
    }

    #[test]
    fn classical_sign_convention() {
        // the unsigned-orientation form (AF/FB)(BD/DC)(CE/EA) is −1
        let sf = example();
        let [a, b, c] = &sf.vertices;
        let [n1, n2, n3] = &sf.nodes;
        let r = |o: &PPoint, p: &PPoint, q: &PPoint| Ratio::new(o, p, q).unwrap().value();
        // AN3/N3B = −Ratio(N3; a, b), and cyclically
        let classical = -r(n3, a, b) * -r(n1, b, c) * -r(n2, c, a);
        assert_eq!(classical, Rat::int(-1));
    }

    #[test]
    fn decomposition_examples() {
        let sf = example();
        let d = decompose_ratio(&sf, 0, false).unwrap();
        assert_eq!(d.target.to_string(), "N1b/N1c");
        assert_eq!(d.chain.to_string(), "(N3b/N3a)·(N2a/N2c)");
        assert!(d.equal);
        let inv = decompose_ratio(&sf, 0, true).unwrap();
        assert_eq!(inv.target.to_string(), "N1c/N1b");
        assert_eq!(inv.chain.to_string(), "(N3a/N3b)·(N2c/N2a)");
        assert!(inv.equal);
        assert_eq!(inv.lhs, d.lhs.recip().unwrap());
        // N3 anchored: N3a/N3b = (N2a/N2c)(N1c/N1b)
        let d3 = decompose_ratio(&sf, 2, false).unwrap();
        assert_eq!(d3.target.to_string(), "N3a/N3b");
        assert!(d3.equal);
        assert_eq!(d3.lhs, q("-1/3"));
        assert_eq!(d3.chain.factors[0].value(), q("1/5"));
        assert_eq!(d3.chain.factors[1].value(), q("-5/3"));
    }

    #[test]
    fn perturbed_node_breaks_product() {
        let sf = example();
        let [a, b, c] = &sf.vertices;
        // slide N3 along side ab, off the transversal
        let n3 = PPoint::affine(q("6/5"), Rat::zero());
        let r = |o: &PPoint, p: &PPoint, q: &PPoint| Ratio::new(o, p, q).unwrap().value();
        let prod = r(&sf.nodes[0], b, c) * r(&sf.nodes[1], c, a) * r(&n3, a, b);
        assert_ne!(prod, Rat::one());
    }

    #[test]
    fn chain_cancellation() {
        let (o, a, b, c) = (PPoint::xy(0, 0), PPoint::xy(1, 1), PPoint::xy(3, 3), PPoint::xy(-2, -2));
        let chain = RatioChain::new(vec![
            Ratio::named(["O", "a", "b"], [&o, &a, &b]).unwrap(),
            Ratio::named(["O", "b", "c"], [&o, &b, &c]).unwrap(),
        ]);
        let short = chain.cancel_adjacent();
        assert_eq!(short.to_string(), "(Oa/Oc)");
        assert_eq!(short.value(), chain.value());
        let full = RatioChain::new(vec![
            Ratio::named(["O", "a", "b"], [&o, &a, &b]).unwrap(),
            Ratio::named(["O", "b", "a"], [&o, &b, &a]).unwrap(),
        ]);
        assert_eq!(full.cancel_adjacent().factors.len(), 0);
        assert_eq!(full.value(), Rat::one());
    }

    #[test]
    fn ratio_needs_distinct_denominator() {
        let o = PPoint::xy(1, 1);
        assert!(Ratio::new(&o, &PPoint::xy(2, 2), &o).is_err());
        assert!(Ratio::new(&o, &PPoint::xy(2, 3), &PPoint::xy(3, 3)).is_err());
    }
}
