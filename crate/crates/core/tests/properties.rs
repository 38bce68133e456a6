use proptest::prelude::*;
use ratcurves_core::classifier::{almost_nice_component, classify, nice_component, ComponentKind};
use ratcurves_core::dimension::{dim_mae, expected_dim};
use ratcurves_core::lattice::{delta, enumerate_range, in_range, validate_params, PairAE, Params};
use ratcurves_core::mrc::{mrc_quotient, MrcTarget};
use ratcurves_core::plot::{PlotFormat, PlotSpec};

fn params() -> impl Strategy<Value = Params> {
    (2i64..=40, 1i64..=150).prop_map(|(g, k)| validate_params(g, k).unwrap())
}

/// Independent enumeration straight from the defining inequalities,
/// with the fraction compared in exact rationals via i128 cross products.
fn brute_range(k: i64) -> Vec<PairAE> {
    let mut out = Vec::new();
    for a in 0..=k + 1 {
        for e in 0..=k {
            let strip = 2 * a > k && a <= k && e > 0 && ((k - a) as i128) >= (e as i128) * ((2 * a - k) as i128);
            if strip || (a == k && e == 0) {
                out.push(PairAE::new(a, e));
            }
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for k in 1..=120 {
        assert_eq!(enumerate_range(k), brute_range(k), "k = {k}");
    }
}

proptest! {
    #[test]
    fn range_members_have_nonnegative_delta(k in 1i64..300) {
        let range = enumerate_range(k);
        let zero_e: Vec<PairAE> = range.iter().copied().filter(|p| p.e == 0).collect();
        prop_assert_eq!(zero_e, vec![PairAE::new(k, 0)]);
        for p in &range {
            prop_assert!(delta(k, p.a, p.e) >= 0);
            prop_assert!(in_range(k, p.a, p.e));
            prop_assert!(2 * p.a != k);
        }
        if k % 2 == 1 {
            let nice = PairAE::new((k + 1) / 2, (k - 1) / 2);
            prop_assert!(range.contains(&nice));
            prop_assert_eq!(delta(k, nice.a, nice.e), 0);
        }
        let mut sorted = range.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted, range);
    }

    #[test]
    fn in_range_rejects_everything_else(k in 1i64..200, a in -5i64..210, e in -5i64..210) {
        let listed = enumerate_range(k).contains(&PairAE::new(a, e));
        prop_assert_eq!(in_range(k, a, e), listed);
    }

    #[test]
    fn dimension_closed_forms(p in params()) {
        let (g, k) = (p.g(), p.k());
        prop_assert_eq!(dim_mae(p, PairAE::new(k, 0)).unwrap(), (k + 2) * g - 1);
        prop_assert_eq!(dim_mae(p, PairAE::new(k, 0)).unwrap() - expected_dim(p), (k - 1) * (g - 2));
        if k % 2 == 1 {
            prop_assert_eq!(dim_mae(p, PairAE::new((k + 1) / 2, (k - 1) / 2)).unwrap(), expected_dim(p));
        } else if k <= 2 * g - 2 {
            let a = k / 2 + 1;
            for q in enumerate_range(k).into_iter().filter(|q| q.a == a) {
                prop_assert_eq!(dim_mae(p, q).unwrap(), 4 * g + 3 * k / 2 - 4);
            }
        }
    }

    #[test]
    fn inventory_invariants(p in params()) {
        let inv = classify(p);
        let (g, k) = (p.g(), p.k());
        prop_assert!(!inv.is_empty());

        let nice = nice_component(p);
        let nice_rec = inv.get(nice).expect("nice component present");
        prop_assert_eq!(nice_rec.dim, inv.expected);
        prop_assert!(nice_rec.labels.nice);
        prop_assert_eq!(inv.components.iter().filter(|c| c.labels.nice).count(), 1);
        prop_assert!(inv.components.iter().filter(|c| c.labels.almost_nice).count() <= 1);
        if let Some(q) = almost_nice_component(p) {
            prop_assert!(inv.get_pair(q.a, q.e).is_some_and(|c| c.labels.almost_nice && c.dim == inv.expected));
        }

        let me = inv.components.iter().filter(|c| c.kind == ComponentKind::Me).count();
        prop_assert_eq!(me, if k % 2 == 0 { 1 } else { 0 });
        if k % 2 == 0 {
            prop_assert_eq!(inv.components[0].kind, ComponentKind::Me);
        }

        let top = inv.get_pair(k, 0).expect("M(k,0) present");
        prop_assert!(top.labels.max_dim);
        for c in &inv.components {
            prop_assert!(c.dim >= c.expected);
            prop_assert!(c.dim <= top.dim);
            if c.kind == ComponentKind::Me {
                prop_assert_eq!(c.dim, c.expected);
                prop_assert!(c.mrc.is_none() && c.delta.is_none());
            }
            if let ComponentKind::Mae(q) = c.kind {
                // components under e = g/2 − 1 only cover M as the almost nice or
                // nice (k ≥ g − 1) component
                if 2 * q.e < g - 2 && c.covers_m {
                    prop_assert!(c.labels.almost_nice || (c.labels.nice && k >= g - 1));
                }
                prop_assert_eq!(c.unobstructed, c.labels.nice || c.labels.almost_nice);
                prop_assert_eq!(c.nonreduced, c.dim == c.expected && !c.unobstructed);
            }
        }

        let pairs: Vec<_> = inv.pairs().collect();
        let mut sorted = pairs.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(&sorted, &pairs);

        // a component cannot sit inside a bigger one up and to the left
        let nice_pair = nice.pair();
        for c in inv.components.iter().filter(|c| c.kind.pair().is_some()) {
            let pp = c.kind.pair().unwrap();
            if Some(pp) == nice_pair {
                continue;
            }
            for d in inv.components.iter().filter(|d| d.kind.pair().is_some()) {
                let qq = d.kind.pair().unwrap();
                if qq != pp && qq.a <= pp.a && qq.e >= pp.e {
                    prop_assert!(d.dim <= c.dim, "{} dim {} above {} dim {}", qq, d.dim, pp, c.dim);
                }
            }
        }
    }

    #[test]
    fn mrc_invariants(p in params()) {
        let k = p.k();
        for q in enumerate_range(k) {
            let m = mrc_quotient(p, q).unwrap();
            prop_assert_eq!(m.delta as i128, delta(k, q.a, q.e));
            match m.target {
                MrcTarget::Jac => prop_assert!(m.delta == 0 && m.dominant),
                MrcTarget::JacXJac => prop_assert!(m.delta > 0 && m.dominant == (m.delta >= p.g())),
            }
            prop_assert_eq!(m.image_note.is_some(), m.delta > 0 && m.delta < p.g());
            if q.e >= 1 && in_range(k, q.a, q.e + 1) {
                prop_assert!(mrc_quotient(p, PairAE::new(q.a, q.e + 1)).unwrap().delta < m.delta);
            }
        }
    }

    #[test]
    fn plot_marker_counts(p in params()) {
        let inv = classify(p);
        for format in [PlotFormat::Ascii, PlotFormat::Svg] {
            let spec = PlotSpec::from_inventory(&inv, format);
            prop_assert_eq!(spec.marker_count(), enumerate_range(p.k()).len());
            prop_assert_eq!(spec.component_marker_count(), inv.mae_count());
            for q in inv.pairs() {
                prop_assert!(spec.markers.contains_key(&q));
            }
        }
    }
}
