//! The four-point involutions: harmonic conjugates and the metric special
//! cases. Claims tagged "metric" use the Euclidean chart z = 1.

use serde_json::json;

use super::{cut, line};
use crate::error::{Error, Result};
use crate::menelaus::Ratio;
use crate::projective::{collinear, cross_ratio, direction, join, AffineChart, PPoint, Param};
use crate::report::TheoremReport;
use crate::scalar::Rat;

type Vec2 = (Rat, Rat);

fn dot(u: &Vec2, v: &Vec2) -> Rat {
    &u.0 * &v.0 + &u.1 * &v.1
}

fn wedge(u: &Vec2, v: &Vec2) -> Rat {
    &u.0 * &v.1 - &u.1 * &v.0
}

/// Reflection of `v` across the direction `axis`: `2·a(a·v)/(a·a) − v`.
fn reflect(axis: &Vec2, v: &Vec2) -> Vec2 {
    let k = Rat::int(2) * dot(axis, v) / dot(axis, axis);
    (&k * &axis.0 - &v.0, &k * &axis.1 - &v.1)
}

fn distinct_collinear(b: &PPoint, c: &PPoint, d: &PPoint) -> Result<()> {
    if b == c || b == d || c == d {
        return Err(Error::CoincidentPoints("B, C, D must be distinct".into()));
    }
    if !collinear(b, c, d) {
        return Err(Error::NotCollinear("B, C, D are not collinear".into()));
    }
    Ok(())
}

/// Closed form: in the chart with `B = 0`, `C = 1`, the conjugate of `d` is
/// `d/(2d − 1)`.
pub fn harmonic_conjugate(b: &PPoint, c: &PPoint, d: &PPoint) -> Result<PPoint> {
    distinct_collinear(b, c, d)?;
    let chart = AffineChart::new(b.clone(), c.clone())?;
    let f = match chart.coordinate(d)? {
        Param::Infinity => Param::Finite(Rat::frac(1, 2)),
        Param::Finite(t) => {
            let den = Rat::int(2) * &t - Rat::one();
            if den.is_zero() {
                Param::Infinity
            } else {
                Param::Finite(t / den)
            }
        }
    };
    Ok(chart.point(&f))
}

/// Ruler construction: a secant through `D` with `D` the midpoint of `bc`,
/// `K = bB ∩ cC`, and `F` where the parallel to `bc` through `K` meets `BC`.
/// `secant` is the half-chord `D→b`; by default it is perpendicular to `BC`.
pub fn harmonic_conjugate_constructed(b: &PPoint, c: &PPoint, d: &PPoint, secant: Option<Vec2>) -> Result<PPoint> {
    distinct_collinear(b, c, d)?;
    let (dx, dy) = d.affine_or_err("D")?;
    let v = match secant {
        Some(v) => v,
        None => {
            let (ux, uy) = direction(b, c)?;
            (-uy, ux)
        }
    };
    let sb = PPoint::affine(&dx + &v.0, &dy + &v.1);
    let sc = PPoint::affine(&dx - &v.0, &dy - &v.1);
    let bc = line(b, c, "line BC")?;
    if sb.lies_on(&bc) {
        return Err(Error::Degenerate("secant lies along BC".into()));
    }
    let k = cut(&line(&sb, b, "line bB")?, &line(&sc, c, "line cC")?, "K")?;
    let secant_dir = PPoint::at_infinity(v.0, v.1)?;
    // K at infinity (D the midpoint): the parallel is the line at infinity
    let through_k = if k.is_finite() {
        line(&k, &secant_dir, "parallel through K")?
    } else {
        crate::projective::PLine::at_infinity()
    };
    cut(&through_k, &bc, "F")
}

/// Both routes, their agreement, the cross-ratio and involutivity.
pub fn verify_harmonic(b: &PPoint, c: &PPoint, d: &PPoint) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("harmonic", json!({ "B": b, "C": c, "D": d }));
    let f = harmonic_conjugate(b, c, d)?;
    let built = harmonic_conjugate_constructed(b, c, d, None)?;
    r.eq("construction agrees with the closed form", &built, &f);
    r.eq("(B,C;D,F)", &cross_ratio(b, c, d, &f)?, &Param::Finite(Rat::int(-1)));
    r.eq("conjugating F gives back D", &harmonic_conjugate(b, c, &f)?, d);
    Ok(r)
}

/// The four-point involution `B = H`, `C = G`, `D, F` seen from `K` on the
/// image line through `C` parallel to `DK`: `f` bisects `cb` and the
/// composed ratio `(BC/BD)(FD/FC)` is 2. The converse rebuilds the image
/// line from the midpoint condition and checks it is parallel to `DK`.
pub fn verify_midpoint_case(b: &PPoint, c: &PPoint, d: &PPoint, f: &PPoint, k: &PPoint) -> Result<TheoremReport> {
    let inputs = json!({ "B": b, "C": c, "D": d, "F": f, "K": k });
    let mut r = TheoremReport::new("midpoint", inputs);
    for (p, name) in [(b, "B"), (c, "C"), (d, "D"), (f, "F"), (k, "K")] {
        p.affine_or_err(name)?;
    }
    let delta = line(b, c, "line BC")?;
    if !d.lies_on(&delta) || !f.lies_on(&delta) {
        return Err(Error::NotOnLine("D and F must lie on BC".into()));
    }
    if k.lies_on(&delta) {
        return Err(Error::Precondition("K lies on the line of the couples".into()));
    }
    if [c, d, f].contains(&b) || c == d || c == f || d == f {
        return Err(Error::CoincidentPoints("harmonic data must be four distinct points".into()));
    }

    let dk = line(d, k, "line DK")?;
    let image = dk.parallel_through(c)?;
    let ib = cut(&line(k, b, "KB")?, &image, "b")?;
    let if_ = cut(&line(k, f, "KF")?, &image, "f")?;
    let id = cut(&dk, &image, "d")?;
    r.fact("d is at infinity", !id.is_finite());
    r.eq("metric: f is the midpoint of cb", &if_, &c.midpoint(&ib)?);
    let double = Ratio::new(b, c, d)?.value() * Ratio::new(f, d, c)?.value();
    r.eq("(BC/BD)(FD/FC)", &double, &Rat::int(2));

    // converse: pick b' on KB with midpoint(C, b') on KF
    let kf = line(k, f, "KF")?;
    let eval = |p: &PPoint| -> Result<Rat> {
        let (x, y) = p.affine_or_err("point")?;
        let [l0, l1, l2] = kf.coords();
        Ok(l0 * x + l1 * y + l2)
    };
    let lb = eval(b)?;
    let s = (eval(c)? + &lb).checked_div(&lb)?;
    let b2 = b.offset(b, k, &s)?;
    let image2 = line(c, &b2, "converse image line")?;
    r.eq("converse: f' is the midpoint of cb'", &cut(&kf, &image2, "f'")?, &c.midpoint(&b2)?);
    r.eq("converse: DK ∥ cb' (cross product)", &wedge(&direction(d, k)?, &direction(c, &b2)?), &Rat::zero());
    Ok(r)
}

/// Perpendicular rameaux `KB ⟂ KC` bisect the angle `DKF`: the reflection
/// across `KC` (internal) and across `KB` (external) sends direction `KD`
/// onto line `KF`. The converse runs from the same `K`, `D` and `G = C`.
pub fn verify_bisector_case(b: &PPoint, c: &PPoint, d: &PPoint, f: &PPoint, k: &PPoint) -> Result<TheoremReport> {
    let inputs = json!({ "B": b, "C": c, "D": d, "F": f, "K": k });
    let mut r = TheoremReport::new("bisector", inputs);
    let delta = line(b, c, "line BC")?;
    if k.lies_on(&delta) {
        return Err(Error::Precondition("K lies on the line of the couples".into()));
    }
    if !d.lies_on(&delta) || !f.lies_on(&delta) {
        return Err(Error::NotOnLine("D and F must lie on BC".into()));
    }
    let (kb, kc) = (direction(k, b)?, direction(k, c)?);
    let (kd, kf) = (direction(k, d)?, direction(k, f)?);
    r.eq("metric: KB·KC", &dot(&kb, &kc), &Rat::zero());
    r.eq("metric: reflection across KC sends KD onto KF", &wedge(&reflect(&kc, &kd), &kf), &Rat::zero());
    r.eq("metric: reflection across KB sends KD onto KF", &wedge(&reflect(&kb, &kd), &kf), &Rat::zero());
    let conv = bisector_converse_points(d, c, k)?;
    r.eq("converse: rebuilt F", &conv.0, f);
    r.eq("converse: rebuilt B", &conv.1, b);
    r.eq("converse: KB'·KG", &conv.2, &Rat::zero());
    Ok(r)
}

/// From a bisecting `KG` of angle `DKF`: reflect `KD` across `KG` to find
/// `F` on `DG`, take `B` harmonic to `G` with respect to `D, F`, and
/// return `(F, B, KB·KG)`.
fn bisector_converse_points(d: &PPoint, g: &PPoint, k: &PPoint) -> Result<(PPoint, PPoint, Rat)> {
    let delta = line(d, g, "line DG")?;
    if k.lies_on(&delta) {
        return Err(Error::Precondition("K lies on the line DG".into()));
    }
    let (kd, kg) = (direction(k, d)?, direction(k, g)?);
    let kf = reflect(&kg, &kd);
    let (kx, ky) = k.affine_or_err("K")?;
    let far = PPoint::affine(&kx + &kf.0, &ky + &kf.1);
    let f = cut(&line(k, &far, "KF")?, &delta, "F")?;
    if f == *d {
        return Err(Error::Degenerate("KG is perpendicular to DG; F coincides with D".into()));
    }
    let b = harmonic_conjugate(d, &f, g)?;
    let perp = dot(&direction(k, &b)?, &kg);
    Ok((f, b, perp))
}

pub fn verify_bisector_converse(d: &PPoint, g: &PPoint, k: &PPoint) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("bisector-converse", json!({ "D": d, "G": g, "K": k }));
    let (f, b, perp) = bisector_converse_points(d, g, k)?;
    r.eq("(B,G;D,F)", &cross_ratio(&b, g, d, &f)?, &Param::Finite(Rat::int(-1)));
    r.eq("metric: KB·KG", &perp, &Rat::zero());
    Ok(r)
}

/// `h` on `BK`, `f` the midpoint of `Gh`, `F = Kf ∩ BG`, `D` where the
/// parallel to `Gh` through `K` meets `BG`: then `(B,G;D,F) = −1`.
pub fn construct_involution_p13(b: &PPoint, h: &PPoint, g: &PPoint, k: &PPoint) -> Result<TheoremReport> {
    let f = g.midpoint(h)?;
    construct_involution_p13_with(b, h, g, k, &f)
}

/// Same construction with an arbitrary `f` on `Gh` (the midpoint is the
/// harmonic choice; anything else is a negative control).
pub fn construct_involution_p13_with(b: &PPoint, h: &PPoint, g: &PPoint, k: &PPoint, f: &PPoint) -> Result<TheoremReport> {
    let inputs = json!({ "B": b, "h": h, "G": g, "K": k, "f": f });
    let mut r = TheoremReport::new("p13", inputs);
    let bk = line(b, k, "line BK")?;
    if !h.lies_on(&bk) {
        return Err(Error::NotOnLine("h must lie on BK".into()));
    }
    if h == b || h == k {
        return Err(Error::CoincidentPoints("h must differ from B and K".into()));
    }
    if g.lies_on(&bk) {
        return Err(Error::Degenerate("G lies on line BK".into()));
    }
    let gh = line(g, h, "line Gh")?;
    if !f.lies_on(&gh) {
        return Err(Error::NotOnLine("f must lie on Gh".into()));
    }
    let bg = join(b, g)?;
    let big_f = cut(&line(k, f, "Kf")?, &bg, "F")?;
    let d = cut(&gh.parallel_through(k)?, &bg, "D")?;
    r.eq("(B,G;D,F)", &cross_ratio(b, g, &d, &big_f)?, &Param::Finite(Rat::int(-1)));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conics::{rational_parametrization, Conic};

    fn x(v: &str) -> PPoint {
        PPoint::affine(Rat::parse(v).unwrap(), Rat::zero())
    }

    #[test]
    fn harmonic_example() {
        let f = harmonic_conjugate(&x("0"), &x("2"), &x("3")).unwrap();
        assert_eq!(f, x("3/2"));
        // independent oracle: solve (0,2;3,F) = −1 by hand, 3(F−2) = −F(3−2)·... gives F = 3/2
        let (b, c, d) = (Rat::int(0), Rat::int(2), Rat::int(3));
        let fx = Rat::parse("3/2").unwrap();
        assert_eq!((&d - &b) * (&fx - &c), -((&d - &c) * (&fx - &b)));
        assert_eq!(harmonic_conjugate_constructed(&x("0"), &x("2"), &x("3"), None).unwrap(), f);
        assert_eq!(harmonic_conjugate(&x("0"), &x("2"), &f).unwrap(), x("3"));
    }

    #[test]
    fn midpoint_goes_to_infinity() {
        let f = harmonic_conjugate(&x("0"), &x("2"), &x("1")).unwrap();
        assert!(!f.is_finite());
        let g = harmonic_conjugate_constructed(&x("0"), &x("2"), &x("1"), None).unwrap();
        assert_eq!(f, g);
        let r = verify_harmonic(&x("0"), &x("2"), &x("1")).unwrap();
        assert!(r.verdict, "{r:#?}");
    }

    #[test]
    fn oblique_secant() {
        let v = (Rat::int(1), Rat::int(3));
        let p = harmonic_conjugate_constructed(&x("-1"), &x("5"), &x("1/3"), Some(v)).unwrap();
        assert_eq!(p, harmonic_conjugate(&x("-1"), &x("5"), &x("1/3")).unwrap());
    }

    #[test]
    fn midpoint_case_example() {
        let r = verify_midpoint_case(&x("0"), &x("2"), &x("3"), &x("3/2"), &PPoint::xy(1, 2)).unwrap();
        assert!(r.verdict, "{r:#?}");
        assert_eq!(r.claim("(BC/BD)(FD/FC)").unwrap().lhs, "2/1");
    }

    #[test]
    fn midpoint_case_perturbed() {
        let r = verify_midpoint_case(&x("0"), &x("2"), &x("3"), &x("8/5"), &PPoint::xy(1, 2)).unwrap();
        assert!(!r.verdict);
    }

    fn thales_k() -> PPoint {
        // circle on diameter BC = [0, 2]
        let circle = Conic::circle(&Rat::one(), &Rat::zero(), &Rat::one()).unwrap();
        rational_parametrization(&circle, &x("0")).unwrap().point_at(&Rat::frac(1, 3))
    }

    #[test]
    fn bisector_example() {
        let k = thales_k();
        assert!(k.is_finite() && !k.lies_on(&crate::projective::PLine::new(Rat::zero(), Rat::one(), Rat::zero()).unwrap()));
        let r = verify_bisector_case(&x("0"), &x("2"), &x("3"), &x("3/2"), &k).unwrap();
        assert!(r.verdict, "{r:#?}");
        let conv = verify_bisector_converse(&x("3"), &x("2"), &k).unwrap();
        assert!(conv.verdict, "{conv:#?}");
    }

    #[test]
    fn bisector_negative_control() {
        let r = verify_bisector_case(&x("0"), &x("2"), &x("3"), &x("3/2"), &PPoint::xy(1, 3)).unwrap();
        assert!(!r.verdict);
        assert!(!r.claim("metric: KB·KC").unwrap().equal);
    }

    #[test]
    fn p13_construction() {
        let (b, k, g) = (PPoint::xy(0, 0), PPoint::xy(2, 4), PPoint::xy(5, 1));
        let h = PPoint::xy(3, 6);
        assert!(construct_involution_p13(&b, &h, &g, &k).unwrap().verdict);
        let off = PPoint::affine(Rat::frac(9, 2), Rat::frac(9, 4)); // on Gh, not the midpoint
        assert!(!construct_involution_p13_with(&b, &h, &g, &k, &off).unwrap().verdict);
        assert!(construct_involution_p13(&b, &h, &PPoint::xy(1, 2), &k).is_err());
    }
}
