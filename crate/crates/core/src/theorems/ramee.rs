use serde_json::json;

use crate::error::{Error, Result};
use crate::involution::{classify, equivalence_check, involution_of, souche, Classification, NodeCouples};
use crate::menelaus::{decompose_ratio, menelaus_product, replay_ramee_proof, Ratio, SectorFigure};
use crate::projective::{incidence_residual, perspective_map, AffineChart, PPoint, Param, QParam};
use crate::report::TheoremReport;
use crate::scalar::Rat;

/// Menelaus on a sector figure: the product is 1, each node's ratio
/// decomposes, and the product-1 constraint puts the third node back on the tronc.
pub fn verify_menelaus(sf: &SectorFigure) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("menelaus", serde_json::to_value(sf).expect("serializable"));
    r.eq("Ratio(N1;b,c)·Ratio(N2;c,a)·Ratio(N3;a,b) = 1", &menelaus_product(sf)?, &Rat::one());
    for node in 0..3 {
        let d = decompose_ratio(sf, node, false)?;
        r.eq(&format!("{} = {}", d.target, d.chain), &d.lhs, &d.rhs);
    }
    // converse: rebuild N3 on line ab from the first two ratios alone
    let [a, b, c] = &sf.vertices;
    let r1 = Ratio::new(&sf.nodes[0], b, c)?.value();
    let r2 = Ratio::new(&sf.nodes[1], c, a)?.value();
    let t = (&r1 * &r2).recip()?;
    let (ax, ay) = a.affine_or_err("vertex a")?;
    let (bx, by) = b.affine_or_err("vertex b")?;
    let den = &t - Rat::one();
    let n3 = PPoint::affine((&t * bx - ax).checked_div(&den)?, (&t * by - ay).checked_div(&den)?);
    r.eq(
        "converse: incidence residual of N1, N2, rebuilt N3",
        &incidence_residual(&sf.nodes[0], &sf.nodes[1], &n3),
        &Rat::zero(),
    );
    r.eq("converse: rebuilt N3 is the node", &n3, &sf.nodes[2]);
    Ok(r)
}

fn same_fixed_points(a: &[QParam; 2], b: &[QParam; 2]) -> bool {
    (a[0] == b[0] && a[1] == b[1]) || (a[0] == b[1] && a[1] == b[0])
}

/// Central projection from `k` of three couples in involution on Δ onto δ.
/// A center at infinity (parallel rameaux) skips the Menelaus replay.
pub fn verify_ramee(nc: &NodeCouples, k: &PPoint, delta: &AffineChart) -> Result<TheoremReport> {
    let src = &nc.chart;
    let inputs = json!({ "couples": nc, "center": k, "image_chart": delta });
    let mut r = TheoremReport::new("ramee", inputs);
    let pi = perspective_map(k, src, delta)?;
    let phi = involution_of(nc)?;
    let eq_src = equivalence_check(nc)?;
    if !eq_src.holds() {
        return Err(Error::Precondition("source couples are not in involution".into()));
    }

    let images: Vec<(Param, Param)> = nc
        .params()?
        .iter()
        .map(|(x, y)| (pi.apply(x), pi.apply(y)))
        .collect();
    let image = NodeCouples::from_params(
        delta.clone(),
        <[(Param, Param); 3]>::try_from(images.clone()).expect("three couples"),
    )?;
    let eq = equivalence_check(&image)?;
    r.fact("image couples are exchanged by one involution", eq.by_homography);
    match eq.by_rectangles {
        Some(holds) => r.fact("image couples satisfy the rectangle identities", holds),
        None => {
            // a couple went to infinity: its partner must be the souche
            let induced = involution_of(&image)?;
            for (x, y) in &images {
                let partner = match (x, y) {
                    (Param::Infinity, p) | (p, Param::Infinity) => p,
                    _ => continue,
                };
                r.eq("partner of the image at infinity is the souche", &souche(&induced), &delta.point(partner));
            }
        }
    }

    let conj = phi.conjugate(&pi)?;
    r.eq("π∘Φ∘π⁻¹ is the image involution", conj.map(), involution_of(&image)?.map());
    let (c_src, c_img) = (classify(&phi)?, classify(&conj)?);
    r.eq("classification preserved", &c_src.is_hyperbolic(), &c_img.is_hyperbolic());
    if let (Classification::Hyperbolic { fixed: f }, Classification::Hyperbolic { fixed: g }) = (&c_src, &c_img) {
        let moved = [pi.apply_quad(&f[0])?, pi.apply_quad(&f[1])?];
        r.fact("fixed points go to fixed points", same_fixed_points(&moved, g));
    }

    if k.is_finite() {
        match replay_ramee_proof(nc, k, &delta.line) {
            Ok(trace) => r.attach(trace),
            Err(Error::NonGeneric(_) | Error::PointAtInfinity(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(r)
}
