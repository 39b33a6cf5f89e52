//! A quadrangle on an oblique section of a cone, carried back through the
//! apex to the base circle, and its involution pulled back again.

use serde_json::json;

use super::quadrangle::{quadrangle_involution, QuadrangleConfig};
use crate::conics::Conic;
use crate::error::{Error, Result};
use crate::involution::involution_of;
use crate::projective::{AffineChart, LineMap, PPoint, Param};
use crate::report::TheoremReport;
use crate::scalar::Rat;
use crate::space::{central_projection_3d, P3Point, PlaneFrame};

#[derive(Clone, Debug)]
pub struct ConeSetup {
    pub apex: P3Point,
    pub base: PlaneFrame,
    /// In the base frame's coordinates.
    pub circle: Conic,
    pub cut: PlaneFrame,
}

impl ConeSetup {
    /// Apex `(0, 0, 2)` over the unit circle in `z = 0`, cut by `z = x/2 + 1`.
    pub fn standard() -> Self {
        let r = |n: i64, d: i64| Rat::frac(n, d);
        let cut = PlaneFrame::new([r(0, 1), r(0, 1), r(1, 1)], [r(1, 1), r(0, 1), r(1, 2)], [r(0, 1), r(1, 1), r(0, 1)])
            .expect("independent directions");
        ConeSetup {
            apex: P3Point::affine(Rat::zero(), Rat::zero(), Rat::int(2)),
            base: PlaneFrame::ground(),
            circle: Conic::unit_circle(),
            cut,
        }
    }

    fn check(&self) -> Result<()> {
        if self.apex.lies_on(&self.cut.plane) || self.apex.lies_on(&self.base.plane) {
            return Err(Error::Precondition("apex lies on the cut or the base plane".into()));
        }
        Ok(())
    }

    /// Cut-plane point to base-plane point through the apex.
    pub fn to_base(&self, p: &PPoint) -> Result<PPoint> {
        self.check()?;
        self.base.flatten(&central_projection_3d(&self.apex, &self.base.plane, &self.cut.embed(p))?)
    }

    pub fn to_cut(&self, p: &PPoint) -> Result<PPoint> {
        self.check()?;
        self.cut.flatten(&central_projection_3d(&self.apex, &self.cut.plane, &self.base.embed(p))?)
    }
}

fn finite_image(setup: &ConeSetup, p: &PPoint, what: &str) -> Result<PPoint> {
    let img = setup.to_base(p)?;
    img.affine_or_err(what)?;
    Ok(img)
}

/// `bornes` and `delta` live in the cut plane's coordinates.
pub fn retablissement_demo(setup: &ConeSetup, bornes: &[PPoint; 4], delta: &AffineChart) -> Result<TheoremReport> {
    setup.check()?;
    let inputs = json!({ "apex": setup.apex, "bornes": bornes, "transversal": delta });
    let mut r = TheoremReport::new("retablissement", inputs);
    let cut_q = QuadrangleConfig::new(bornes.clone(), delta.clone())?;

    let names = ["B", "C", "D", "E"];
    let mut base_bornes = Vec::with_capacity(4);
    for (p, name) in bornes.iter().zip(names) {
        let img = finite_image(setup, p, name)?;
        r.fact(&format!("{name} lands on the base circle"), setup.circle.contains(&img));
        base_bornes.push(img);
    }
    let base_bornes = <[PPoint; 4]>::try_from(base_bornes).expect("four bornes");
    let base_chart = AffineChart::new(
        finite_image(setup, &delta.origin, "transversal origin")?,
        finite_image(setup, &delta.unit, "transversal unit")?,
    )?;
    let base_q = QuadrangleConfig::new(base_bornes, base_chart.clone())?;

    for (name, here, there) in [
        ("N", &cut_q.n, &base_q.n),
        ("F", &cut_q.f, &base_q.f),
        ("R", &cut_q.r, &base_q.r),
        ("I", &cut_q.i, &base_q.i),
        ("K", &cut_q.k, &base_q.k),
        ("P", &cut_q.p, &base_q.p),
        ("Q", &cut_q.q, &base_q.q),
        ("G", &cut_q.g, &base_q.g),
        ("H", &cut_q.h, &base_q.h),
    ] {
        r.eq(&format!("{name} projects to the base {name}"), &setup.to_base(here)?, there);
    }

    let (base_inv, base_report) = quadrangle_involution(&base_q)?;
    r.fact("base couples in involution", base_report.verdict);
    // the ramée with tree top at the apex: δ → Δ by central projection
    let samples = [0, 1, 2].map(|k| Param::Finite(Rat::int(k)));
    let mut images = Vec::with_capacity(3);
    for t in &samples {
        images.push(base_chart.coordinate(&setup.to_base(&delta.point(t))?)?);
    }
    let transport = LineMap::from_three(
        delta,
        [&samples[0], &samples[1], &samples[2]],
        &base_chart,
        [&images[0], &images[1], &images[2]],
    )?;
    let pulled = base_inv.conjugate(&transport.inverse())?;
    let direct = involution_of(&cut_q.couples()?)?;
    r.eq("pulled-back involution is the cut plane's", pulled.map(), direct.map());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conics::rational_parametrization;

    fn cut_bornes(setup: &ConeSetup, ts: [i64; 4]) -> [PPoint; 4] {
        let par = rational_parametrization(&setup.circle, &PPoint::xy(-1, 0)).unwrap();
        ts.map(|t| setup.to_cut(&par.point_at(&Rat::int(t))).unwrap())
    }

    #[test]
    fn standard_cone() {
        let setup = ConeSetup::standard();
        let bornes = cut_bornes(&setup, [0, 1, 3, -2]);
        let delta = AffineChart::new(PPoint::affine(Rat::zero(), Rat::frac(1, 7)), PPoint::affine(Rat::one(), Rat::frac(1, 2))).unwrap();
        let r = retablissement_demo(&setup, &bornes, &delta).unwrap();
        assert!(r.verdict, "{r:#?}");
    }

    #[test]
    fn cut_equal_to_base_is_identity() {
        let mut setup = ConeSetup::standard();
        setup.cut = PlaneFrame::ground();
        let p = PPoint::affine(Rat::frac(1, 3), Rat::frac(-2, 5));
        assert_eq!(setup.to_base(&p).unwrap(), p);
        let bornes = cut_bornes(&setup, [0, 1, 3, -2]);
        let delta = AffineChart::new(PPoint::affine(Rat::zero(), Rat::frac(1, 7)), PPoint::affine(Rat::one(), Rat::frac(1, 2))).unwrap();
        assert!(retablissement_demo(&setup, &bornes, &delta).unwrap().verdict);
    }

    #[test]
    fn apex_on_cut_plane() {
        let mut setup = ConeSetup::standard();
        setup.apex = P3Point::affine(Rat::zero(), Rat::zero(), Rat::one());
        let bornes = [PPoint::xy(0, 0), PPoint::xy(1, 0), PPoint::xy(0, 1), PPoint::xy(1, 1)];
        let r = retablissement_demo(&setup, &bornes, &AffineChart::x_axis());
        assert!(matches!(r, Err(Error::Precondition(_))));
    }
}
