//! Deterministic random instances for every verifier, and the dispatch
//! from an instance to its report.
//!
//! A generator draws a candidate from the seeded stream, runs the target
//! operation, and redraws while the operation rejects the candidate as
//! degenerate. A candidate that runs but yields a false verdict is kept:
//! that is a finding, not a degeneracy.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::conics::{pencil_member, rational_parametrization, Collineation, Conic, Mat3};
use crate::error::{Error, Result};
use crate::involution::{classify, involution_of, Involution, NodeCouples};
use crate::menelaus::{ProofTrace, SectorFigure, StepKind};
use crate::projective::{join, meet, project_through, AffineChart, LineMap, PLine, PPoint, Param};
use crate::report::{Claim, TheoremReport};
use crate::rng::Draws;
use crate::scalar::Rat;
use crate::theorems::{
    beaugrand_replay, construct_involution_p13, desargues_involution_by_perspectives, harmonic_conjugate,
    parallel_bornales_identities, pascal_collinear, pencil_involution_check, quadrangle_involution,
    retablissement_demo, tangent_members, verify_bisector_case, verify_harmonic, verify_menelaus,
    verify_midpoint_case, verify_ramee, BeaugrandInput, ConeSetup, QuadrangleConfig,
};

pub const DEFAULT_BOUNDS: u32 = 10;
pub const RETRY_BUDGET: usize = 200;
const COLLINEATIONS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Menelaus,
    Ramee,
    RameeShortcut,
    Quadrangle,
    Pencil,
    Pascal,
    Beaugrand,
    Harmonic,
    Midpoint,
    Bisector,
    P13,
    #[serde(alias = "parallel_bornales")]
    ParallelBornales,
    Retablissement,
}

impl Kind {
    pub const ALL: [Kind; 13] = [
        Kind::Menelaus,
        Kind::Ramee,
        Kind::RameeShortcut,
        Kind::Quadrangle,
        Kind::Pencil,
        Kind::Pascal,
        Kind::Beaugrand,
        Kind::Harmonic,
        Kind::Midpoint,
        Kind::Bisector,
        Kind::P13,
        Kind::ParallelBornales,
        Kind::Retablissement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Menelaus => "menelaus",
            Kind::Ramee => "ramee",
            Kind::RameeShortcut => "ramee-shortcut",
            Kind::Quadrangle => "quadrangle",
            Kind::Pencil => "pencil",
            Kind::Pascal => "pascal",
            Kind::Beaugrand => "beaugrand",
            Kind::Harmonic => "harmonic",
            Kind::Midpoint => "midpoint",
            Kind::Bisector => "bisector",
            Kind::P13 => "p13",
            Kind::ParallelBornales => "parallel-bornales",
            Kind::Retablissement => "retablissement",
        }
    }

    /// Kinds whose report carries a proof trace.
    pub fn has_replay(self) -> bool {
        matches!(self, Kind::Ramee | Kind::RameeShortcut | Kind::Quadrangle | Kind::Beaugrand | Kind::Pascal)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        let norm = s.replace('_', "-");
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown theorem kind {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceConfig {
    pub kind: Kind,
    pub seed: u64,
    #[serde(default = "default_bounds")]
    pub bounds: u32,
    /// Replaces a named free point of the generator (see each kind's
    /// generator for its names). Overridden points are kept on every retry.
    #[serde(default)]
    pub overrides: BTreeMap<String, PPoint>,
}

fn default_bounds() -> u32 {
    DEFAULT_BOUNDS
}

impl InstanceConfig {
    pub fn new(kind: Kind, seed: u64) -> Self {
        InstanceConfig { kind, seed, bounds: DEFAULT_BOUNDS, overrides: BTreeMap::new() }
    }

    pub fn with_bounds(mut self, bounds: u32) -> Self {
        self.bounds = bounds;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Instance {
    Menelaus { triangle: [PPoint; 3], tronc: PLine },
    Ramee { couples: NodeCouples, center: PPoint, image: AffineChart },
    RameeShortcut { couples: NodeCouples, center: PPoint, image: AffineChart },
    Quadrangle { quadrangle: QuadrangleConfig },
    Pencil { quadrangle: QuadrangleConfig, members: Vec<Conic>, tangency: PPoint },
    Pascal { conic: Conic, params: [Rat; 6], hexagon: [PPoint; 6], collineations: Vec<Mat3> },
    Beaugrand { input: BeaugrandInput },
    Harmonic { b: PPoint, c: PPoint, d: PPoint },
    Midpoint { b: PPoint, c: PPoint, d: PPoint, f: PPoint, k: PPoint },
    Bisector { b: PPoint, c: PPoint, d: PPoint, f: PPoint, k: PPoint },
    P13 { b: PPoint, h: PPoint, g: PPoint, k: PPoint },
    ParallelBornales { quadrangle: QuadrangleConfig },
    Retablissement { bornes: [PPoint; 4], transversal: AffineChart },
}

impl Instance {
    pub fn kind(&self) -> Kind {
        match self {
            Instance::Menelaus { .. } => Kind::Menelaus,
            Instance::Ramee { .. } => Kind::Ramee,
            Instance::RameeShortcut { .. } => Kind::RameeShortcut,
            Instance::Quadrangle { .. } => Kind::Quadrangle,
            Instance::Pencil { .. } => Kind::Pencil,
            Instance::Pascal { .. } => Kind::Pascal,
            Instance::Beaugrand { .. } => Kind::Beaugrand,
            Instance::Harmonic { .. } => Kind::Harmonic,
            Instance::Midpoint { .. } => Kind::Midpoint,
            Instance::Bisector { .. } => Kind::Bisector,
            Instance::P13 { .. } => Kind::P13,
            Instance::ParallelBornales { .. } => Kind::ParallelBornales,
            Instance::Retablissement { .. } => Kind::Retablissement,
        }
    }
}

fn absorb(into: &mut TheoremReport, prefix: &str, from: TheoremReport) {
    for c in from.claims {
        into.push(Claim { label: format!("{prefix}: {}", c.label), ..c });
    }
}

/// Runs the operation an instance was generated for.
pub fn verify_instance(inst: &Instance) -> Result<TheoremReport> {
    let mut r = match inst {
        Instance::Menelaus { triangle: [a, b, c], tronc } => verify_menelaus(&SectorFigure::from_triangle(a, b, c, tronc)?)?,
        Instance::Ramee { couples, center, image } => verify_ramee(couples, center, image)?,
        Instance::RameeShortcut { couples, center, image } => {
            let mut r = verify_ramee(couples, center, image)?;
            let d = &couples.pairs[2].0;
            r.eq("D is its own image", &project_through(center, d, &image.line)?, d);
            r
        }
        Instance::Quadrangle { quadrangle } => {
            let (inv, mut r) = quadrangle_involution(quadrangle)?;
            let (persp, pr) = desargues_involution_by_perspectives(quadrangle)?;
            absorb(&mut r, "perspectives", pr);
            r.eq("perspectives and quadrangle agree", persp.map(), inv.map());
            r
        }
        Instance::Pencil { quadrangle, members, .. } => {
            let mut r = TheoremReport::new("pencil", serde_json::to_value(inst).expect("serializable"));
            r.eq("line-pair members", &members.iter().filter(|m| m.is_degenerate()).count(), &3);
            for (i, m) in members.iter().enumerate() {
                absorb(&mut r, &format!("member {}", i + 1), pencil_involution_check(quadrangle, m)?);
            }
            let tm = tangent_members(quadrangle)?;
            let inv = involution_of(&quadrangle.couples()?)?;
            r.eq(
                "two tangent members iff hyperbolic",
                &tm.discriminant.is_positive(),
                &classify(&inv)?.is_hyperbolic(),
            );
            r
        }
        Instance::Pascal { conic, hexagon, collineations, .. } => {
            let mut r = pascal_collinear(conic, hexagon)?.report;
            for (j, m) in collineations.iter().enumerate() {
                let col = Collineation::new(m.clone())?;
                let img = hexagon.clone().map(|p| col.apply(&p));
                let out = pascal_collinear(&col.apply_conic(conic), &img)?;
                absorb(&mut r, &format!("collineation {}", j + 1), out.report);
            }
            r
        }
        Instance::Beaugrand { input } => {
            let mut r = TheoremReport::new("beaugrand", serde_json::to_value(input).expect("serializable"));
            r.attach(beaugrand_replay(input)?);
            r
        }
        Instance::Harmonic { b, c, d } => verify_harmonic(b, c, d)?,
        Instance::Midpoint { b, c, d, f, k } => verify_midpoint_case(b, c, d, f, k)?,
        Instance::Bisector { b, c, d, f, k } => verify_bisector_case(b, c, d, f, k)?,
        Instance::P13 { b, h, g, k } => construct_involution_p13(b, h, g, k)?,
        Instance::ParallelBornales { quadrangle } => parallel_bornales_identities(quadrangle)?,
        Instance::Retablissement { bornes, transversal } => {
            retablissement_demo(&ConeSetup::standard(), bornes, transversal)?
        }
    };
    r.inputs = serde_json::to_value(inst).expect("serializable");
    Ok(r)
}

/// Whether a report is complete enough to stand for its kind: replays
/// must have been attached, in the expected shape.
fn well_formed(kind: Kind, r: &TheoremReport) -> std::result::Result<(), String> {
    let menelaus = |n: usize| match &r.trace {
        Some(t) if t.count(StepKind::Menelaus) == n => Ok(()),
        Some(t) => Err(format!("replay has {} Menelaus steps", t.count(StepKind::Menelaus))),
        None => Err("replay not applicable".into()),
    };
    match kind {
        Kind::Ramee => menelaus(8),
        Kind::RameeShortcut => menelaus(4),
        Kind::Quadrangle => menelaus(4),
        Kind::Pascal | Kind::Beaugrand => r.trace.as_ref().map(|_| ()).ok_or_else(|| "replay not applicable".into()),
        _ => Ok(()),
    }
}

struct Gen<'a> {
    draws: Draws,
    bounds: u32,
    overrides: &'a BTreeMap<String, PPoint>,
}

impl Gen<'_> {
    fn rat(&mut self) -> Rat {
        self.draws.rat(self.bounds)
    }

    fn point(&mut self, name: &str) -> PPoint {
        let p = self.draws.point(self.bounds);
        self.overrides.get(name).cloned().unwrap_or(p)
    }

    fn chart(&mut self, origin: &str, unit: &str) -> Result<AffineChart> {
        let o = self.point(origin);
        let u = self.point(unit);
        AffineChart::new(o, u)
    }

    fn distinct_rats<const N: usize>(&mut self) -> Result<[Rat; N]> {
        let v: Vec<Rat> = (0..N).map(|_| self.rat()).collect();
        for i in 0..N {
            if v[i + 1..].contains(&v[i]) {
                return Err(Error::CoincidentPoints("repeated parameter".into()));
            }
        }
        Ok(v.try_into().expect("length N"))
    }

    /// A circle with rational center and radius, and a rational point on it.
    fn circle(&mut self) -> Result<(Conic, PPoint)> {
        let (cx, cy) = (self.rat(), self.rat());
        let r = self.draws.nonzero_rat(self.bounds).abs();
        let conic = Conic::circle(&cx, &cy, &r.square())?;
        Ok((conic, PPoint::affine(cx - r, cy)))
    }

    fn involution(&mut self, chart: &AffineChart) -> Result<Involution> {
        let (a, b, c) = (self.rat(), self.rat(), self.rat());
        let map = LineMap::new([[a.clone(), b], [c, -a]], chart.clone(), chart.clone())?;
        Involution::new(map)
    }

    fn couples(&mut self) -> Result<NodeCouples> {
        let chart = self.chart("Δ origin", "Δ unit")?;
        let inv = self.involution(&chart)?;
        let xs = self.distinct_rats::<3>()?;
        let pairs = xs.map(|x| {
            let x = Param::Finite(x);
            let y = inv.apply(&x);
            (x, y)
        });
        let mut seen = Vec::new();
        for (x, y) in &pairs {
            if x == y || y.is_infinite() {
                return Err(Error::NonGeneric("double or infinite couple".into()));
            }
            seen.extend([x.clone(), y.clone()]);
        }
        for i in 0..6 {
            if seen[i + 1..].contains(&seen[i]) {
                return Err(Error::CoincidentPoints("couples share a point".into()));
            }
        }
        NodeCouples::from_params(chart, pairs)
    }

    fn bornes(&mut self) -> [PPoint; 4] {
        ["B", "C", "D", "E"].map(|n| self.point(n))
    }

    fn candidate(&mut self, kind: Kind) -> Result<Instance> {
        Ok(match kind {
            Kind::Menelaus => {
                let triangle = ["a", "b", "c"].map(|n| self.point(n));
                let tronc = join(&self.point("tronc 1"), &self.point("tronc 2"))?;
                Instance::Menelaus { triangle, tronc }
            }
            Kind::Ramee => {
                let couples = self.couples()?;
                let center = self.point("K");
                let image = self.chart("δ origin", "δ unit")?;
                Instance::Ramee { couples, center, image }
            }
            Kind::RameeShortcut => {
                let couples = self.couples()?;
                let center = self.point("K");
                let image = AffineChart::new(couples.pairs[2].0.clone(), self.point("δ unit"))?;
                Instance::RameeShortcut { couples, center, image }
            }
            Kind::Quadrangle => {
                let bornes = self.bornes();
                let q = QuadrangleConfig::new(bornes, self.chart("Δ origin", "Δ unit")?)?;
                Instance::Quadrangle { quadrangle: q }
            }
            Kind::Pencil => {
                let bornes = self.bornes();
                let pencil = crate::conics::Pencil::new(bornes.clone())?;
                let t = self.point("T");
                let tangent_member = pencil_member(&pencil, &t)?;
                if tangent_member.is_degenerate() {
                    return Err(Error::Degenerate("member through T is a line pair".into()));
                }
                let delta = AffineChart::on_line(&tangent_member.polar(&t)?)?;
                let q = QuadrangleConfig::new(bornes, delta)?;
                let u = q.transversal.point_at(&self.rat());
                let through_u = pencil_member(&pencil, &u)?;
                if through_u == tangent_member {
                    return Err(Error::NonGeneric("second member repeats the tangent one".into()));
                }
                let mut members = pencil.degenerate_members()?.to_vec();
                members.push(tangent_member);
                members.push(through_u);
                Instance::Pencil { quadrangle: q, members, tangency: t }
            }
            Kind::Pascal => {
                let (conic, seed) = self.circle()?;
                let par = rational_parametrization(&conic, &seed)?;
                let params = self.distinct_rats::<6>()?;
                let hexagon = params.clone().map(|t| par.point_at(&t));
                let mut collineations = Vec::with_capacity(COLLINEATIONS);
                while collineations.len() < COLLINEATIONS {
                    let m: Mat3 = std::array::from_fn(|_| std::array::from_fn(|_| self.rat()));
                    if Collineation::new(m.clone()).is_ok() {
                        collineations.push(m);
                    }
                }
                Instance::Pascal { conic, params, hexagon, collineations }
            }
            Kind::Beaugrand => {
                let (conic, seed) = self.circle()?;
                let par = rational_parametrization(&conic, &seed)?;
                let [tk, tn, to, tv, tq, tf] = self.distinct_rats::<6>()?;
                let [k, n, o, v, q, f] = [tk, tn, to, tv, tq, tf].map(|t| par.point_at(&t));
                // overriding one of the four points may take it off the conic
                let pick = |name: &str, p: PPoint| self.overrides.get(name).cloned().unwrap_or(p);
                let (k, n, o, v) = (pick("K", k), pick("N", n), pick("O", o), pick("V", v));
                // conic first: R is Q's partner along NV, and C = QR ∩ KO
                let nv = join(&n, &v)?;
                let qr = nv.parallel_through(&q)?;
                let c = meet(&qr, &join(&k, &o)?)?;
                let transversal = join(&f, &c)?;
                Instance::Beaugrand { input: BeaugrandInput { conic, k, n, o, v, transversal } }
            }
            Kind::Harmonic => {
                let (b, c) = (self.point("B"), self.point("C"));
                let d = b.offset(&b, &c, &self.rat())?;
                Instance::Harmonic { b, c, d: self.overrides.get("D").cloned().unwrap_or(d) }
            }
            Kind::Midpoint => {
                let (b, c) = (self.point("B"), self.point("C"));
                let d = b.offset(&b, &c, &self.rat())?;
                let f = harmonic_conjugate(&b, &c, &d)?;
                let k = self.point("K");
                Instance::Midpoint { b, c, d, f, k }
            }
            Kind::Bisector => {
                let (b, c) = (self.point("B"), self.point("C"));
                let center = b.midpoint(&c)?;
                let (mx, my) = center.to_affine().expect("finite");
                let (bx, by) = b.to_affine().expect("finite");
                let r2 = (&bx - &mx).square() + (&by - &my).square();
                let thales = Conic::circle(&mx, &my, &r2)?;
                let k = rational_parametrization(&thales, &b)?.point_at(&self.rat());
                let d = b.offset(&b, &c, &self.rat())?;
                let f = harmonic_conjugate(&b, &c, &d)?;
                Instance::Bisector { b, c, d, f, k }
            }
            Kind::P13 => {
                let (b, k, g) = (self.point("B"), self.point("K"), self.point("G"));
                let h = b.offset(&b, &k, &self.rat())?;
                Instance::P13 { b, h, g, k }
            }
            Kind::ParallelBornales => {
                let (b, c, d) = (self.point("B"), self.point("C"), self.point("D"));
                let e = d.offset(&b, &c, &self.draws.nonzero_rat(self.bounds))?;
                let q = QuadrangleConfig::new([b, c, d, e], self.chart("Δ origin", "Δ unit")?)?;
                Instance::ParallelBornales { quadrangle: q }
            }
            Kind::Retablissement => {
                let setup = ConeSetup::standard();
                let par = rational_parametrization(&setup.circle, &PPoint::xy(-1, 0))?;
                let ts = self.distinct_rats::<4>()?;
                let mut bornes = Vec::with_capacity(4);
                for t in &ts {
                    let p = setup.to_cut(&par.point_at(t))?;
                    p.affine_or_err("borne on the cut plane")?;
                    bornes.push(p);
                }
                let bornes: [PPoint; 4] = bornes.try_into().expect("four");
                Instance::Retablissement { bornes, transversal: self.chart("δ origin", "δ unit")? }
            }
        })
    }
}

/// Generates and verifies in one pass, returning the accepted instance
/// with its report (seeded).
pub fn generate_verified(cfg: &InstanceConfig) -> Result<(Instance, TheoremReport)> {
    if cfg.bounds == 0 {
        return Err(Error::InvalidConfig("bounds must be at least 1".into()));
    }
    let mut g = Gen { draws: Draws::new(cfg.seed), bounds: cfg.bounds, overrides: &cfg.overrides };
    let mut last = String::new();
    for _ in 0..RETRY_BUDGET {
        let attempt = g.candidate(cfg.kind).and_then(|inst| {
            let report = verify_instance(&inst)?;
            well_formed(cfg.kind, &report).map_err(Error::NonGeneric)?;
            Ok((inst, report))
        });
        match attempt {
            Ok((inst, report)) => return Ok((inst, report.with_seed(cfg.seed))),
            Err(e) => last = e.to_string(),
        }
    }
    Err(Error::RetryExhausted { kind: cfg.kind.to_string(), attempts: RETRY_BUDGET, last })
}

pub fn generate_instance(cfg: &InstanceConfig) -> Result<Instance> {
    generate_verified(cfg).map(|(inst, _)| inst)
}

/// The proof trace of a replayable kind.
pub fn replay_trace(cfg: &InstanceConfig) -> Result<ProofTrace> {
    if !cfg.kind.has_replay() {
        return Err(Error::InvalidConfig(format!("{} has no proof replay", cfg.kind)));
    }
    let (_, r) = generate_verified(cfg)?;
    r.trace.ok_or_else(|| Error::NonGeneric("no trace attached".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_kind_generates() {
        for kind in Kind::ALL {
            let (inst, r) = generate_verified(&InstanceConfig::new(kind, 1)).unwrap();
            assert_eq!(inst.kind(), kind);
            assert!(r.verdict, "{kind}: {r:#?}");
        }
    }

    #[test]
    fn deterministic() {
        let cfg = InstanceConfig::new(Kind::Quadrangle, 1);
        let a = serde_json::to_string(&generate_instance(&cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&generate_instance(&cfg).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn pascal_parameters_distinct() {
        let Instance::Pascal { params, .. } = generate_instance(&InstanceConfig::new(Kind::Pascal, 7)).unwrap() else {
            panic!("wrong kind");
        };
        for i in 0..6 {
            assert!(!params[i + 1..].contains(&params[i]));
        }
    }

    #[test]
    fn bounds_one_exhausts_retries() {
        // {-1, 0, 1} cannot supply the distinct parameters these kinds need
        for kind in [Kind::Ramee, Kind::Pascal, Kind::Beaugrand, Kind::Retablissement] {
            let err = generate_instance(&InstanceConfig::new(kind, 1).with_bounds(1)).unwrap_err();
            assert!(matches!(err, Error::RetryExhausted { attempts: RETRY_BUDGET, .. }), "{kind}: {err}");
        }
        assert!(matches!(
            generate_instance(&InstanceConfig::new(Kind::Harmonic, 1).with_bounds(0)),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in Kind::ALL {
            assert_eq!(k.name().parse::<Kind>().unwrap(), k);
        }
        assert_eq!("parallel_bornales".parse::<Kind>().unwrap(), Kind::ParallelBornales);
        assert!("desargues".parse::<Kind>().is_err());
    }

    #[test]
    fn overrides_are_used() {
        let mut cfg = InstanceConfig::new(Kind::Ramee, 3);
        cfg.overrides.insert("K".into(), PPoint::xy(7, 9));
        let Instance::Ramee { center, .. } = generate_instance(&cfg).unwrap() else { panic!() };
        assert_eq!(center, PPoint::xy(7, 9));
    }
}
