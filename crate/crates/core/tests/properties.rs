//! Structural invariants on random rational data.

use arguesia::conics::{conic_line_intersection, rational_parametrization, Collineation, Conic, Pencil};
use arguesia::involution::{
    classify, equivalence_check, involution_of, partner, rectangle_identity_check, Classification, Involution,
    NodeCouples,
};
use arguesia::menelaus::{decompose_ratio, menelaus_product, SectorFigure};
use arguesia::projective::{
    collinear, cross_ratio_params, join, meet, perspective_map, AffineChart, LineMap, PPoint, Param,
};
use arguesia::scalar::Rat;
use arguesia::theorems::verify_menelaus;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=30).prop_map(|(p, q)| Rat::frac(p, q))
}

fn point() -> impl Strategy<Value = PPoint> {
    (rat(), rat()).prop_map(|(x, y)| PPoint::affine(x, y))
}

fn mat2() -> impl Strategy<Value = [[Rat; 2]; 2]> {
    [[rat(), rat()], [rat(), rat()]]
}

fn chart() -> impl Strategy<Value = AffineChart> {
    (point(), point()).prop_filter_map("distinct", |(o, u)| AffineChart::new(o, u).ok())
}

fn distinct<T: PartialEq>(xs: &[T]) -> bool {
    (0..xs.len()).all(|i| !xs[i + 1..].contains(&xs[i]))
}

fn fin(r: &Rat) -> Param {
    Param::Finite(r.clone())
}

fn involution_on(chart: &AffineChart, a: Rat, b: Rat, c: Rat) -> Option<Involution> {
    LineMap::new([[a.clone(), b], [c, -a]], chart.clone(), chart.clone()).ok().and_then(|m| Involution::new(m).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn join_meet_duality(p in point(), q in point(), r in point()) {
        prop_assume!(!collinear(&p, &q, &r));
        prop_assert_eq!(meet(&join(&p, &q).unwrap(), &join(&p, &r).unwrap()).unwrap(), p);
    }

    #[test]
    fn cross_ratio_invariant_under_line_maps(
        src in chart(), dst in chart(), m in [[rat(), rat()], [rat(), rat()]], ts in [rat(), rat(), rat(), rat()]
    ) {
        prop_assume!(distinct(&ts));
        let Ok(map) = LineMap::new(m, src, dst) else { return Ok(()) };
        let ps = ts.clone().map(|t| fin(&t));
        let img = ps.clone().map(|p| map.apply(&p));
        prop_assert_eq!(
            cross_ratio_params(&ps[0], &ps[1], &ps[2], &ps[3]).unwrap(),
            cross_ratio_params(&img[0], &img[1], &img[2], &img[3]).unwrap()
        );
    }

    #[test]
    fn perspective_preserves_cross_ratio_and_inverts(
        src in chart(), dst in chart(), k in point(), ts in [rat(), rat(), rat(), rat()]
    ) {
        prop_assume!(distinct(&ts) && src.line != dst.line);
        prop_assume!(!k.lies_on(&src.line) && !k.lies_on(&dst.line));
        let there = perspective_map(&k, &src, &dst).unwrap();
        let back = perspective_map(&k, &dst, &src).unwrap();
        prop_assert!(back.after(&there).unwrap().is_identity());
        let ps = ts.map(|t| fin(&t));
        let img = ps.clone().map(|p| there.apply(&p));
        prop_assert_eq!(
            cross_ratio_params(&ps[0], &ps[1], &ps[2], &ps[3]).unwrap(),
            cross_ratio_params(&img[0], &img[1], &img[2], &img[3]).unwrap()
        );
    }

    #[test]
    fn composition_is_associative_and_pointwise(
        c in chart(), ms in [mat2(), mat2(), mat2()], ts in [rat(), rat(), rat()]
    ) {
        let maps: Vec<LineMap> = ms.into_iter().filter_map(|m| LineMap::new(m, c.clone(), c.clone()).ok()).collect();
        prop_assume!(maps.len() == 3);
        let (f, g, h) = (&maps[0], &maps[1], &maps[2]);
        let left = h.after(g).unwrap().after(f).unwrap();
        let right = h.after(&g.after(f).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        for t in ts {
            let t = fin(&t);
            prop_assert_eq!(left.apply(&t), h.apply(&g.apply(&f.apply(&t))));
        }
    }

    #[test]
    fn generated_couples_pass_both_checks(c in chart(), a in rat(), b in rat(), cc in rat(), xs in [rat(), rat(), rat()]) {
        let Some(inv) = involution_on(&c, a, b, cc) else { return Ok(()) };
        let pairs = xs.map(|x| (fin(&x), inv.apply(&fin(&x))));
        let flat: Vec<&Param> = pairs.iter().flat_map(|(x, y)| [x, y]).collect();
        prop_assume!(distinct(&flat) && flat.iter().all(|p| !p.is_infinite()));
        let nc = NodeCouples::from_params(c, pairs).unwrap();
        prop_assert!(rectangle_identity_check(&nc).unwrap().holds);
        let eq = equivalence_check(&nc).unwrap();
        prop_assert!(eq.holds());
        let rebuilt = involution_of(&nc).unwrap();
        prop_assert_eq!(rebuilt.map(), inv.map());
    }

    #[test]
    fn one_check_holds_iff_the_other(c in chart(), ts in [rat(), rat(), rat(), rat(), rat(), rat()]) {
        // arbitrary sixtuples: the homography and rectangle routes never disagree
        prop_assume!(distinct(&ts));
        let [b, h, cc, g, d, f] = ts.map(|t| fin(&t));
        let Ok(nc) = NodeCouples::from_params(c, [(b, h), (cc, g), (d, f)]) else { return Ok(()) };
        let eq = equivalence_check(&nc).unwrap();
        prop_assert!(eq.consistent());
        if let Ok(r) = rectangle_identity_check(&nc) {
            let n = r.identities.iter().filter(|c| c.equal).count();
            prop_assert!(n == 0 || n == 3, "identities hold or fail together, got {}", n);
        }
    }

    #[test]
    fn partner_is_involutive(c in chart(), a in rat(), b in rat(), cc in rat(), t in rat()) {
        let Some(inv) = involution_on(&c, a, b, cc) else { return Ok(()) };
        let p = c.point_at(&t);
        prop_assert_eq!(partner(&inv, &partner(&inv, &p).unwrap()).unwrap(), p);
    }

    #[test]
    fn conjugation_transports_class_and_fixed_points(
        src in chart(), dst in chart(), k in point(), a in rat(), b in rat(), c in rat()
    ) {
        prop_assume!(src.line != dst.line && !k.lies_on(&src.line) && !k.lies_on(&dst.line));
        let Some(phi) = involution_on(&src, a, b, c) else { return Ok(()) };
        let pi = perspective_map(&k, &src, &dst).unwrap();
        let conj = phi.conjugate(&pi).unwrap();
        let (c1, c2) = (classify(&phi), classify(&conj));
        let (Ok(c1), Ok(c2)) = (c1, c2) else { return Ok(()) };
        prop_assert_eq!(c1.is_hyperbolic(), c2.is_hyperbolic());
        if let (Classification::Hyperbolic { fixed: f }, Classification::Hyperbolic { fixed: g }) = (c1, c2) {
            for x in f {
                let y = pi.apply_quad(&x).unwrap();
                prop_assert!(y == g[0] || y == g[1]);
            }
        }
    }

    #[test]
    fn menelaus_product_and_converse(a in point(), b in point(), c in point(), p in point(), q in point()) {
        let Ok(tronc) = join(&p, &q) else { return Ok(()) };
        let Ok(sf) = SectorFigure::from_triangle(&a, &b, &c, &tronc) else { return Ok(()) };
        prop_assert_eq!(menelaus_product(&sf).unwrap(), Rat::one());
        if let Ok(r) = verify_menelaus(&sf) {
            prop_assert!(r.verdict, "{:#?}", r);
        }
    }

    #[test]
    fn decomposition_is_chart_independent(
        a in point(), b in point(), c in point(), p in point(), q in point(),
        lin in [[rat(), rat()], [rat(), rat()]], shift in (rat(), rat())
    ) {
        let Ok(tronc) = join(&p, &q) else { return Ok(()) };
        let Ok(sf) = SectorFigure::from_triangle(&a, &b, &c, &tronc) else { return Ok(()) };
        let m = [
            [lin[0][0].clone(), lin[0][1].clone(), shift.0],
            [lin[1][0].clone(), lin[1][1].clone(), shift.1],
            [Rat::zero(), Rat::zero(), Rat::one()],
        ];
        let Ok(aff) = Collineation::new(m) else { return Ok(()) };
        let moved = SectorFigure::from_triangle(&aff.apply(&a), &aff.apply(&b), &aff.apply(&c), &aff.apply_line(&tronc)).unwrap();
        for node in 0..3 {
            let (d1, d2) = (decompose_ratio(&sf, node, false).unwrap(), decompose_ratio(&moved, node, false).unwrap());
            prop_assert!(d1.equal && d2.equal);
            prop_assert_eq!(d1.lhs, d2.lhs);
        }
    }

    #[test]
    fn pencil_members_and_line_pairs(base in [point(), point(), point(), point()], l in rat(), m in rat()) {
        let Ok(pencil) = Pencil::new(base.clone()) else { return Ok(()) };
        if let Ok(member) = pencil.member(&l, &m) {
            for p in &base {
                prop_assert!(member.contains(p));
            }
        }
        let [b, c, d, e] = &base;
        let pair = |w: &PPoint, x: &PPoint, y: &PPoint, z: &PPoint| Conic::line_pair(&join(w, x).unwrap(), &join(y, z).unwrap());
        let expected = [pair(b, c, d, e), pair(b, e, c, d), pair(b, d, c, e)];
        let got = pencil.degenerate_members().unwrap();
        for g in &got {
            prop_assert!(g.is_degenerate());
            prop_assert!(expected.contains(g));
        }
        prop_assert!(got[0] != got[1] && got[1] != got[2] && got[0] != got[2]);
    }

    #[test]
    fn chord_points_lie_on_the_conic(cx in rat(), cy in rat(), r in rat(), p in point(), q in point()) {
        prop_assume!(!r.is_zero());
        let conic = Conic::circle(&cx, &cy, &r.square()).unwrap();
        let Ok(l) = join(&p, &q) else { return Ok(()) };
        let ch = conic_line_intersection(&conic, &l).unwrap();
        for x in ch.points() {
            prop_assert!(conic.eval_quad(&x).unwrap().is_zero());
        }
    }

    #[test]
    fn tangent_at_a_conic_point(cx in rat(), cy in rat(), r in rat(), t in rat()) {
        prop_assume!(!r.is_zero());
        let conic = Conic::circle(&cx, &cy, &r.square()).unwrap();
        let seed = PPoint::affine(&cx - &r, cy.clone());
        let at = rational_parametrization(&conic, &seed).unwrap().point_at(&t);
        let ch = conic_line_intersection(&conic, &conic.polar(&at).unwrap()).unwrap();
        prop_assert!(ch.is_tangent());
        prop_assert!(ch.discriminant.is_zero());
    }

    #[test]
    fn parametrization_round_trip(cx in rat(), cy in rat(), r in rat(), t in rat()) {
        prop_assume!(!r.is_zero());
        let conic = Conic::circle(&cx, &cy, &r.square()).unwrap();
        let par = rational_parametrization(&conic, &PPoint::affine(&cx - &r, cy.clone())).unwrap();
        let p = par.point_at(&t);
        prop_assert!(conic.contains(&p));
        prop_assert_eq!(par.point(&par.parameter_of(&p).unwrap()), p);
    }
}
