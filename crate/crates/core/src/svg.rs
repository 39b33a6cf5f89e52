//! SVG figures for generated instances.
//!
//! The viewport is the bounding box of the finite labeled points plus a 10%
//! margin; full lines are clipped to it, conics are sampled adaptively, and
//! labeled points at infinity become arrows on the boundary in their
//! direction. Coordinates are printed with two decimals, so output is
//! byte-identical for identical input.

use std::fmt::Write as _;

use crate::conics::{rational_parametrization, Conic};
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::menelaus::{ramee_figure, SectorFigure};
use crate::projective::{direction, join, meet, PLine, PPoint};
use crate::report::TheoremReport;
use crate::theorems::{beaugrand_figure, harmonic_conjugate_constructed, QuadrangleConfig};

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 800.0;
const MARGIN: f64 = 0.10;
const TOLERANCE_PX: f64 = 0.5;
const MAX_DEPTH: u32 = 14;

#[derive(Clone, Debug)]
enum Item {
    Line { class: &'static str, line: PLine },
    Segment { class: &'static str, a: PPoint, b: PPoint },
    Conic { class: &'static str, conic: Conic },
    Point { label: String, point: PPoint },
}

/// Styled primitives in the rational plane, rendered on demand.
#[derive(Clone, Debug, Default)]
pub struct SvgDoc {
    title: String,
    items: Vec<Item>,
}

#[derive(Clone, Copy, Debug)]
struct Viewport {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
    scale: f64,
}

impl Viewport {
    fn to_screen(&self, x: f64, y: f64) -> (f64, f64) {
        let cx = (self.x0 + self.x1) / 2.0;
        let cy = (self.y0 + self.y1) / 2.0;
        (WIDTH / 2.0 + (x - cx) * self.scale, HEIGHT / 2.0 - (y - cy) * self.scale)
    }

    fn contains(&self, x: f64, y: f64, slack: f64) -> bool {
        let (w, h) = ((self.x1 - self.x0) * slack, (self.y1 - self.y0) * slack);
        x >= self.x0 - w && x <= self.x1 + w && y >= self.y0 - h && y <= self.y1 + h
    }
}

fn coords(p: &PPoint) -> [f64; 3] {
    p.coords().clone().map(|c| c.to_f64())
}

fn affine_f64(p: &PPoint) -> Option<(f64, f64)> {
    p.to_affine().map(|(x, y)| (x.to_f64(), y.to_f64()))
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

impl SvgDoc {
    pub fn new(title: &str) -> Self {
        SvgDoc { title: title.into(), items: Vec::new() }
    }

    pub fn point(&mut self, label: &str, p: &PPoint) -> &mut Self {
        self.items.push(Item::Point { label: label.into(), point: p.clone() });
        self
    }

    pub fn line(&mut self, class: &'static str, l: &PLine) -> &mut Self {
        self.items.push(Item::Line { class, line: l.clone() });
        self
    }

    /// The line through two points; silently skipped when they coincide.
    pub fn line_through(&mut self, class: &'static str, p: &PPoint, q: &PPoint) -> &mut Self {
        if let Ok(l) = join(p, q) {
            self.line(class, &l);
        }
        self
    }

    pub fn segment(&mut self, class: &'static str, a: &PPoint, b: &PPoint) -> &mut Self {
        self.items.push(Item::Segment { class, a: a.clone(), b: b.clone() });
        self
    }

    pub fn conic(&mut self, class: &'static str, c: &Conic) -> &mut Self {
        self.items.push(Item::Conic { class, conic: c.clone() });
        self
    }

    pub fn labeled_points(&self) -> usize {
        self.items.iter().filter(|i| matches!(i, Item::Point { .. })).count()
    }

    fn viewport(&self) -> Result<Viewport> {
        let finite: Vec<(f64, f64)> = self
            .items
            .iter()
            .filter_map(|i| match i {
                Item::Point { point, .. } => affine_f64(point),
                _ => None,
            })
            .collect();
        if finite.is_empty() {
            return Err(Error::Precondition("unbounded configuration: no finite labeled point".into()));
        }
        let fold = |f: fn(f64, f64) -> f64, pick: fn(&(f64, f64)) -> f64, init: f64| finite.iter().map(pick).fold(init, f);
        let (mut x0, mut x1) = (fold(f64::min, |p| p.0, f64::INFINITY), fold(f64::max, |p| p.0, f64::NEG_INFINITY));
        let (mut y0, mut y1) = (fold(f64::min, |p| p.1, f64::INFINITY), fold(f64::max, |p| p.1, f64::NEG_INFINITY));
        // a point or a flat box still needs an extent
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        let (mx, my) = ((span - (x1 - x0)).max(0.0) / 2.0, (span - (y1 - y0)).max(0.0) / 2.0);
        if x1 - x0 < span * 1e-3 {
            x0 -= mx.max(span / 2.0);
            x1 += mx.max(span / 2.0);
        }
        if y1 - y0 < span * 1e-3 {
            y0 -= my.max(span / 2.0);
            y1 += my.max(span / 2.0);
        }
        let (w, h) = (x1 - x0, y1 - y0);
        let (x0, x1, y0, y1) = (x0 - MARGIN * w, x1 + MARGIN * w, y0 - MARGIN * h, y1 + MARGIN * h);
        let scale = (WIDTH / (x1 - x0)).min(HEIGHT / (y1 - y0));
        Ok(Viewport { x0, y0, x1, y1, scale })
    }

    /// The visible part of a full line, in world coordinates.
    fn clip(v: &Viewport, l: &PLine) -> Option<((f64, f64), (f64, f64))> {
        let [a, b, c] = l.coords().clone().map(|t| t.to_f64());
        if a == 0.0 && b == 0.0 {
            return None;
        }
        // the screen rectangle, widened to the full canvas
        let (hw, hh) = (WIDTH / 2.0 / v.scale, HEIGHT / 2.0 / v.scale);
        let (cx, cy) = ((v.x0 + v.x1) / 2.0, (v.y0 + v.y1) / 2.0);
        let (x0, x1, y0, y1) = (cx - hw, cx + hw, cy - hh, cy + hh);
        let mut hits: Vec<(f64, f64)> = Vec::new();
        if b != 0.0 {
            for x in [x0, x1] {
                let y = -(a * x + c) / b;
                if (y0..=y1).contains(&y) {
                    hits.push((x, y));
                }
            }
        }
        if a != 0.0 {
            for y in [y0, y1] {
                let x = -(b * y + c) / a;
                if (x0..=x1).contains(&x) {
                    hits.push((x, y));
                }
            }
        }
        hits.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
        Some((*hits.first()?, *hits.last()?))
    }

    fn conic_path(v: &Viewport, c: &Conic) -> String {
        let m = c.matrix().clone().map(|row| row.map(|t| t.to_f64()));
        let bil = |p: [f64; 3], q: [f64; 3]| (0..3).map(|i| (0..3).map(|j| p[i] * m[i][j] * q[j]).sum::<f64>()).sum::<f64>();
        let Some(p0) = Self::seed_point(v, &m) else {
            return String::new();
        };
        // second intersection of the conic with the line through p0 in direction θ
        let at = |theta: f64| -> Option<(f64, f64)> {
            let d = [theta.cos(), theta.sin(), 0.0];
            let (q, b) = (bil(d, d), bil(p0, d));
            let x = [q * p0[0] - 2.0 * b * d[0], q * p0[1] - 2.0 * b * d[1], q * p0[2]];
            (x[2].abs() > 1e-12).then(|| (x[0] / x[2], x[1] / x[2]))
        };
        let visible = |p: Option<(f64, f64)>| p.filter(|&(x, y)| v.contains(x, y, 1.0));
        let n = 96;
        let mut out = String::new();
        let mut pen_down = false;
        let mut emit = |p: Option<(f64, f64)>, out: &mut String| match p {
            Some((x, y)) => {
                let (sx, sy) = v.to_screen(x, y);
                let _ = write!(out, "{}{sx:.2},{sy:.2} ", if pen_down { "L" } else { "M" });
                pen_down = true;
            }
            None => pen_down = false,
        };
        let step = std::f64::consts::PI / n as f64;
        let mut prev = visible(at(0.0));
        emit(prev, &mut out);
        for k in 0..n {
            let (t0, t1) = (k as f64 * step, (k + 1) as f64 * step);
            let next = visible(at(t1));
            Self::refine(v, &at, t0, t1, prev, next, 0, &mut |p| emit(p, &mut out));
            prev = next;
        }
        out.trim_end().to_string()
    }

    #[allow(clippy::too_many_arguments)]
    fn refine(
        v: &Viewport,
        at: &dyn Fn(f64) -> Option<(f64, f64)>,
        t0: f64,
        t1: f64,
        p0: Option<(f64, f64)>,
        p1: Option<(f64, f64)>,
        depth: u32,
        emit: &mut dyn FnMut(Option<(f64, f64)>),
    ) {
        let tm = (t0 + t1) / 2.0;
        let pm = at(tm).filter(|&(x, y)| v.contains(x, y, 1.0));
        let flat = match (p0, pm, p1) {
            (Some(a), Some(m), Some(b)) => {
                let (ax, ay) = v.to_screen(a.0, a.1);
                let (mx, my) = v.to_screen(m.0, m.1);
                let (bx, by) = v.to_screen(b.0, b.1);
                let (dx, dy) = ((ax + bx) / 2.0 - mx, (ay + by) / 2.0 - my);
                (dx * dx + dy * dy).sqrt() <= TOLERANCE_PX
            }
            (None, None, None) => true,
            _ => false,
        };
        if flat || depth >= MAX_DEPTH {
            emit(p1);
            return;
        }
        Self::refine(v, at, t0, tm, p0, pm, depth + 1, emit);
        Self::refine(v, at, tm, t1, pm, p1, depth + 1, emit);
    }

    /// A point of the conic near the viewport, from lines through its center.
    fn seed_point(v: &Viewport, m: &[[f64; 3]; 3]) -> Option<[f64; 3]> {
        let (cx, cy) = ((v.x0 + v.x1) / 2.0, (v.y0 + v.y1) / 2.0);
        let bil = |p: [f64; 3], q: [f64; 3]| (0..3).map(|i| (0..3).map(|j| p[i] * m[i][j] * q[j]).sum::<f64>()).sum::<f64>();
        for k in 0..16 {
            let theta = k as f64 * std::f64::consts::PI / 16.0 + 0.1;
            let (c, d) = ([cx, cy, 1.0], [theta.cos(), theta.sin(), 0.0]);
            let (qa, qb, qc) = (bil(d, d), 2.0 * bil(c, d), bil(c, c));
            let disc = qb * qb - 4.0 * qa * qc;
            if qa.abs() < 1e-12 || disc < 0.0 {
                continue;
            }
            let s = (-qb + disc.sqrt()) / (2.0 * qa);
            return Some([cx + s * d[0], cy + s * d[1], 1.0]);
        }
        None
    }

    /// Where the ray from the center in direction `(dx, dy)` leaves the box.
    fn boundary(v: &Viewport, dx: f64, dy: f64) -> (f64, f64) {
        let (cx, cy) = ((v.x0 + v.x1) / 2.0, (v.y0 + v.y1) / 2.0);
        let tx = if dx != 0.0 { ((if dx > 0.0 { v.x1 } else { v.x0 }) - cx) / dx } else { f64::INFINITY };
        let ty = if dy != 0.0 { ((if dy > 0.0 { v.y1 } else { v.y0 }) - cy) / dy } else { f64::INFINITY };
        let t = tx.min(ty) * 0.95;
        (cx + t * dx, cy + t * dy)
    }

    pub fn render(&self) -> Result<String> {
        let v = self.viewport()?;
        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
        );
        let _ = writeln!(s, "<title>{}</title>", esc(&self.title));
        let _ = writeln!(
            s,
            concat!(
                "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" orient=\"auto\">",
                "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"#444\"/></marker></defs>"
            )
        );
        let _ = writeln!(
            s,
            concat!(
                "<style>line,path{{fill:none;stroke-width:1.2}} .construction,.side,.bornale,.rameau{{stroke:#888}} ",
                ".tronc,.transversal{{stroke:#000;stroke-width:1.6}} .image,.pascal{{stroke:#b22}} ",
                ".conic{{stroke:#2460a7}} .member{{stroke:#6a9}} text{{font:14px serif}}</style>"
            )
        );
        let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#fff"/>"##);
        for item in &self.items {
            match item {
                Item::Line { class, line } => {
                    if let Some((a, b)) = Self::clip(&v, line) {
                        let ((x1, y1), (x2, y2)) = (v.to_screen(a.0, a.1), v.to_screen(b.0, b.1));
                        let _ = writeln!(s, r#"<line class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#);
                    }
                }
                Item::Segment { class, a, b } => {
                    if let (Some(a), Some(b)) = (affine_f64(a), affine_f64(b)) {
                        let ((x1, y1), (x2, y2)) = (v.to_screen(a.0, a.1), v.to_screen(b.0, b.1));
                        let _ = writeln!(s, r#"<line class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#);
                    }
                }
                Item::Conic { class, conic } => {
                    let _ = writeln!(s, r#"<path class="{class}" d="{}"/>"#, Self::conic_path(&v, conic));
                }
                Item::Point { .. } => {}
            }
        }
        // points last so they sit on top
        for item in &self.items {
            let Item::Point { label, point } = item else { continue };
            let label = esc(label);
            match affine_f64(point) {
                Some((x, y)) => {
                    let (sx, sy) = v.to_screen(x, y);
                    let _ = writeln!(
                        s,
                        r#"<g class="point"><circle cx="{sx:.2}" cy="{sy:.2}" r="3"/><text x="{:.2}" y="{:.2}">{label}</text></g>"#,
                        sx + 5.0,
                        sy - 5.0
                    );
                }
                None => {
                    let [dx, dy, _] = coords(point);
                    let (tx, ty) = Self::boundary(&v, dx, dy);
                    let (bx, by) = (tx - dx * 0.05 * (v.x1 - v.x0) / dx.hypot(dy), ty - dy * 0.05 * (v.y1 - v.y0) / dx.hypot(dy));
                    let ((x1, y1), (x2, y2)) = (v.to_screen(bx, by), v.to_screen(tx, ty));
                    let _ = writeln!(
                        s,
                        r##"<g class="point at-infinity"><line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#444" marker-end="url(#arrow)"/><text x="{:.2}" y="{:.2}">{label}∞</text></g>"##,
                        x2 + 4.0,
                        y2 - 4.0
                    );
                }
            }
        }
        s.push_str("</svg>\n");
        Ok(s)
    }
}

fn quadrangle_items(doc: &mut SvgDoc, q: &QuadrangleConfig) {
    let [b, c, d, e] = &q.bornes;
    for (x, y) in [(b, c), (d, e), (b, d), (c, e), (b, e), (c, d)] {
        doc.line_through("bornale", x, y);
    }
    doc.line("transversal", &q.transversal.line);
    for (name, p) in q.figure().points {
        doc.point(&name, &p);
    }
}

/// The figure of an instance, annotated with the report's verdict when given.
pub fn figure(inst: &Instance, report: Option<&TheoremReport>) -> Result<SvgDoc> {
    let title = match report {
        Some(r) => format!("{} ({})", inst.kind(), if r.verdict { "verified" } else { "FAILED" }),
        None => inst.kind().to_string(),
    };
    let mut doc = SvgDoc::new(&title);
    match inst {
        Instance::Menelaus { triangle: [a, b, c], tronc } => {
            let sf = SectorFigure::from_triangle(a, b, c, tronc)?;
            for (x, y) in [(b, c), (c, a), (a, b)] {
                doc.line_through("side", x, y);
            }
            doc.line("tronc", tronc);
            for (name, p) in [("a", a), ("b", b), ("c", c)] {
                doc.point(name, p);
            }
            for (i, n) in sf.nodes.iter().enumerate() {
                doc.point(&format!("N{}", i + 1), n);
            }
        }
        Instance::Ramee { couples, center, image } | Instance::RameeShortcut { couples, center, image } => {
            let fig = ramee_figure(couples, center, &image.line)?;
            doc.line("tronc", &couples.chart.line).line("image", &image.line);
            for n in ["B", "H", "C", "G", "D", "F"] {
                doc.line_through("rameau", center, fig.get(n));
            }
            for (name, p) in &fig.points {
                doc.point(name, p);
            }
        }
        Instance::Quadrangle { quadrangle } | Instance::ParallelBornales { quadrangle } => quadrangle_items(&mut doc, quadrangle),
        Instance::Pencil { quadrangle, members, tangency } => {
            quadrangle_items(&mut doc, quadrangle);
            for m in members.iter().filter(|m| !m.is_degenerate()) {
                doc.conic("member", m);
            }
            doc.point("T", tangency);
        }
        Instance::Pascal { conic, hexagon, .. } => {
            let out = crate::theorems::pascal_collinear(conic, hexagon)?;
            doc.conic("conic", conic);
            for i in 0..6 {
                doc.segment("side", &hexagon[i], &hexagon[(i + 1) % 6]);
            }
            doc.line("pascal", &out.line);
            for (name, p) in crate::theorems::HEXAGON.iter().zip(hexagon) {
                doc.point(name, p);
            }
            let [p, k, v, o, n, q] = hexagon;
            let m = meet(&join(p, k)?, &join(v, o)?)?;
            let s = meet(&join(n, k)?, &join(v, q)?)?;
            let x = meet(&join(n, o)?, &join(p, q)?)?;
            doc.point("M", &m).point("S", &s).point("X", &x);
        }
        Instance::Beaugrand { input } => {
            let fig = beaugrand_figure(input)?;
            doc.conic("conic", &input.conic).line("transversal", &input.transversal);
            for (x, y) in [("N", "V"), ("K", "N"), ("K", "O"), ("V", "O"), ("Q", "R")] {
                doc.line_through("construction", fig.get(x), fig.get(y));
            }
            for (name, p) in &fig.points {
                doc.point(name, p);
            }
        }
        Instance::Harmonic { b, c, d } => {
            // the default construction: secant through D perpendicular to
            // BC, and its parallel through the conjugate
            let f = harmonic_conjugate_constructed(b, c, d, None)?;
            let (ux, uy) = direction(b, c)?;
            let secant = join(d, &PPoint::at_infinity(-uy, ux)?)?;
            doc.line_through("construction", b, c);
            doc.line("construction", &secant).line("construction", &secant.parallel_through(&f)?);
            doc.point("B", b).point("C", c).point("D", d).point("F", &f);
        }
        Instance::Midpoint { b, c, d, f, k } | Instance::Bisector { b, c, d, f, k } => {
            doc.line_through("tronc", b, c);
            for x in [b, c, d, f] {
                doc.line_through("construction", k, x);
            }
            doc.point("B", b).point("C", c).point("D", d).point("F", f).point("K", k);
        }
        Instance::P13 { b, h, g, k } => {
            doc.line_through("construction", b, k).line_through("construction", g, h);
            doc.line_through("tronc", b, g);
            doc.point("B", b).point("h", h).point("G", g).point("K", k);
        }
        Instance::Retablissement { bornes, transversal } => {
            let q = QuadrangleConfig::new(bornes.clone(), transversal.clone())?;
            quadrangle_items(&mut doc, &q);
            // the section of the cone by the cut plane, through all four bornes
            // and the image of a fifth base-circle point
            let setup = crate::theorems::ConeSetup::standard();
            let par = rational_parametrization(&setup.circle, &PPoint::xy(-1, 0))?;
            let fifth = setup.to_cut(&par.point_at(&crate::scalar::Rat::frac(1, 7)))?;
            let pts = [bornes[0].clone(), bornes[1].clone(), bornes[2].clone(), bornes[3].clone(), fifth];
            if let Ok(c) = crate::conics::conic_through_five(&pts) {
                doc.conic("conic", &c);
            }
        }
    }
    Ok(doc)
}

pub fn render_svg(inst: &Instance, report: Option<&TheoremReport>) -> Result<String> {
    figure(inst, report)?.render()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{generate_verified, InstanceConfig, Kind};

    fn count(svg: &str, needle: &str) -> usize {
        svg.matches(needle).count()
    }

    #[test]
    fn harmonic_structure() {
        let (inst, r) = generate_verified(&InstanceConfig::new(Kind::Harmonic, 1)).unwrap();
        let svg = render_svg(&inst, Some(&r)).unwrap();
        assert_eq!(count(&svg, r#"<g class="point"#), 4);
        assert_eq!(count(&svg, r#"class="construction""#), 3);
    }

    #[test]
    fn pascal_structure() {
        let (inst, r) = generate_verified(&InstanceConfig::new(Kind::Pascal, 1)).unwrap();
        let svg = render_svg(&inst, Some(&r)).unwrap();
        assert_eq!(count(&svg, r#"<path class="conic""#), 1);
        assert_eq!(count(&svg, r#"class="pascal""#), 1);
        let path = svg.lines().find(|l| l.contains(r#"class="conic""#)).unwrap();
        assert!(count(path, "L") > 50, "conic path is sampled");
    }

    #[test]
    fn deterministic_bytes() {
        for kind in Kind::ALL {
            let (inst, r) = generate_verified(&InstanceConfig::new(kind, 3)).unwrap();
            let a = render_svg(&inst, Some(&r)).unwrap();
            let b = render_svg(&inst, Some(&r)).unwrap();
            assert_eq!(a, b, "{kind}");
            assert!(a.starts_with("<?xml") && a.trim_end().ends_with("</svg>"));
        }
    }

    #[test]
    fn every_label_appears() {
        let (inst, _) = generate_verified(&InstanceConfig::new(Kind::Quadrangle, 2)).unwrap();
        let svg = render_svg(&inst, None).unwrap();
        for name in ["B", "C", "D", "E", "N", "F", "R", "I", "K", "P", "Q", "G", "H"] {
            assert!(svg.contains(&format!(">{name}<")) || svg.contains(&format!(">{name}∞<")), "{name}");
        }
    }

    #[test]
    fn point_at_infinity_is_an_arrow() {
        let mut doc = SvgDoc::new("t");
        doc.point("A", &PPoint::xy(0, 0)).point("B", &PPoint::xy(1, 1));
        doc.point("Z", &PPoint::at_infinity(crate::scalar::Rat::one(), crate::scalar::Rat::zero()).unwrap());
        let svg = doc.render().unwrap();
        assert!(svg.contains("at-infinity") && svg.contains("Z∞"));
    }

    #[test]
    fn unbounded_configuration_rejected() {
        let mut doc = SvgDoc::new("t");
        doc.point("Z", &PPoint::at_infinity(crate::scalar::Rat::one(), crate::scalar::Rat::zero()).unwrap());
        assert!(matches!(doc.render(), Err(Error::Precondition(_))));
    }

    #[test]
    fn clipped_line_spans_canvas() {
        let mut doc = SvgDoc::new("t");
        doc.point("A", &PPoint::xy(0, 0)).point("B", &PPoint::xy(2, 2));
        doc.line_through("tronc", &PPoint::xy(0, 0), &PPoint::xy(2, 2));
        let svg = doc.render().unwrap();
        let l = svg.lines().find(|l| l.contains(r#"class="tronc""#)).unwrap();
        assert!(l.contains(r#"x1="0.00""#) && l.contains(r#"x2="800.00""#), "{l}");
    }
}
