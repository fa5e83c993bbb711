use nevanlinna::{
    all_roots, build_profile, fta_witness, localize_roots, log_grid, proximity_m, winding_count, Complex64,
    Polynomial64, Quadrature64, Rational64, Region64, Target64, TargetAnalysis,
};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

const SEED: u64 = 20_240_917;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn complex(h: f64) -> impl Strategy<Value = Complex64> {
    (-h..=h, -h..=h).prop_map(|(re, im)| Complex64::new(re, im))
}

fn polynomial(max_degree: usize) -> impl Strategy<Value = Polynomial64> {
    (1..=max_degree)
        .prop_flat_map(|d| (prop::collection::vec(complex(1.0), d), complex(1.0)))
        .prop_filter("leading coefficient too small", |(_, lead)| lead.norm() >= 0.25)
        .prop_map(|(mut coeffs, lead)| {
            coeffs.push(lead);
            Polynomial64::new(coeffs).unwrap()
        })
}

/// Well-separated simple roots.
fn separated_roots(max: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec(complex(2.0), 1..=max).prop_filter("roots too close", |roots| {
        roots
            .iter()
            .enumerate()
            .all(|(i, a)| roots[i + 1..].iter().all(|b| (a - b).norm() >= 0.1))
    })
}

fn rational() -> impl Strategy<Value = Rational64> {
    (
        prop::collection::vec(complex(1.0), 0..=4),
        prop::collection::vec(complex(1.0), 0..=4),
        0.5f64..2.0,
    )
        .prop_filter("constant", |(z, p, _)| !z.is_empty() || !p.is_empty())
        .prop_filter("zero on pole", |(z, p, _)| {
            z.iter().all(|a| p.iter().all(|b| (a - b).norm() >= 1e-3))
        })
        .prop_map(|(zeros, poles, c)| {
            let num = Polynomial64::from_roots(&zeros).scale_by(Complex64::new(c, 0.0));
            Rational64::new(num, Polynomial64::from_roots(&poles)).unwrap()
        })
}

/// `sum |a_k| x^k` shifted by `t >= 0`: an upper bound for the coefficient
/// moduli of any shift by `|h| <= t`.
fn abs_shift_scale(p: &Polynomial64, t: f64) -> f64 {
    let abs: Vec<f64> = p.coeffs().iter().map(|c| c.norm()).collect();
    Polynomial64::from_real(&abs)
        .unwrap()
        .shift(Complex64::new(t, 0.0))
        .scale()
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn shift_composition(p in polynomial(12), h1 in complex(2.0), h2 in complex(2.0)) {
        let two_step = p.shift(h1).shift(h2);
        let one_step = p.shift(h1 + h2);
        let scale = abs_shift_scale(&p, h1.norm() + h2.norm());
        prop_assert_eq!(two_step.degree(), one_step.degree());
        for k in 0..=p.degree() {
            prop_assert!((two_step.coeff(k) - one_step.coeff(k)).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn evaluation_consistency(p in polynomial(12), z in complex(10.0), h in complex(10.0)) {
        let lhs = p.shift(h).eval(z);
        let rhs = p.eval(z + h);
        let bound = p.abs_eval(z.norm() + h.norm());
        prop_assert!((lhs - rhs).norm() <= 1e-10 * bound);
    }

    #[test]
    fn shift_preserves_degree_and_leading(p in polynomial(12), h in complex(3.0)) {
        let q = p.shift(h);
        prop_assert_eq!(q.degree(), p.degree());
        prop_assert!((q.leading() - p.leading()).norm() <= 1e-15 * p.leading().norm());
        let linear = p.derivative().eval(h);
        prop_assert!((q.coeff(1) - linear).norm() <= 1e-12 * abs_shift_scale(&p, h.norm()));
    }

    #[test]
    fn derivative_linearity(p in polynomial(10), q in polynomial(10), a in complex(2.0), b in complex(2.0)) {
        let lhs = (&p.scale_by(a) + &q.scale_by(b)).derivative();
        let rhs = &p.derivative().scale_by(a) + &q.derivative().scale_by(b);
        let scale = 20.0 * (a.norm() * p.scale() + b.norm() * q.scale());
        for k in 0..=lhs.degree().max(rhs.degree()) {
            prop_assert!((lhs.coeff(k) - rhs.coeff(k)).norm() <= 1e-14 * scale);
        }
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn shift_translates_roots(roots in separated_roots(6), h in complex(1.0)) {
        let p = Polynomial64::from_roots(&roots);
        let found = all_roots(&p.shift(h), 1e-11).unwrap();
        prop_assert_eq!(found.len(), roots.len());
        for r in &roots {
            let target = r - h;
            prop_assert!(found.iter().any(|e| e.multiplicity == 1 && (e.center() - target).norm() <= 1e-8));
        }
    }

    #[test]
    fn subdivision_conserves_count(p in polynomial(8), c in complex(0.5), half in 0.5f64..2.5) {
        let region = Region64::centered_square(half).unwrap();
        let region = Region64::rect(c, half, half).unwrap_or(region);
        let total = winding_count(&Rational64::polynomial(p.clone()), &region);
        let enclosures = localize_roots(&p, &region, 1e-9);
        if let (Ok((w, _)), Ok(enc)) = (total, enclosures) {
            let sum: usize = enc.iter().map(|e| e.multiplicity).sum();
            prop_assert_eq!(sum as i64, w);
            prop_assert!(enc.iter().all(|e| e.radius() <= 1e-9));
        }
    }

    #[test]
    fn all_roots_count_degree(p in polynomial(12)) {
        let enc = all_roots(&p, 1e-10).unwrap();
        prop_assert_eq!(enc.iter().map(|e| e.multiplicity).sum::<usize>(), p.degree());
    }

    #[test]
    fn witness_translation_coherence(p in polynomial(9), h in complex(1.0)) {
        prop_assume!(p.degree() >= 1);
        let shifted = p.shift(h);
        let trace = fta_witness(&shifted, 1e-10).unwrap();
        let w = trace.witness + h;
        let bound = p.abs_eval(w.norm());
        prop_assert!(p.eval(w).norm() <= 1e-8 * bound.max(p.scale()));
        prop_assert!(trace.linear_terms_vanish(1e-9));
    }

    #[test]
    fn reduction_separates_roots(f in rational()) {
        let g = f.reduced().unwrap();
        prop_assert!(g.is_reduced());
        if g.numerator().degree() > 0 && g.denominator().degree() > 0 {
            let zeros = all_roots(g.numerator(), 1e-12).unwrap();
            let poles = all_roots(g.denominator(), 1e-12).unwrap();
            let tau = 1e-8 * g.numerator().scale().max(g.denominator().scale());
            for z in &zeros {
                for p in &poles {
                    prop_assert!((z.center() - p.center()).norm() >= tau);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn value_distribution_invariants(f in rational(), a in complex(1.5)) {
        let grid = log_grid(0.25, 1e3, 12).unwrap();
        let cfg = Quadrature64::default();
        let f = f.reduced().unwrap();
        let degree = f.degree();
        let profiles = build_profile(&f, &[Target64::Infinity, Target64::Finite(a)], &grid, &cfg).unwrap();
        for profile in &profiles {
            for row in &profile.rows {
                prop_assert!(row.m >= 0.0);
                prop_assert!(row.nbar <= row.n);
                prop_assert!(row.n <= degree);
                prop_assert!(row.big_nbar <= row.big_n + 1e-12 * (1.0 + row.big_n.abs()));
            }
            for w in profile.rows.windows(2) {
                prop_assert!(w[1].n >= w[0].n && w[1].nbar >= w[0].nbar);
                prop_assert!(w[1].big_n >= w[0].big_n - 1e-12);
                prop_assert!(w[1].big_nbar >= w[0].big_nbar - 1e-12);
                prop_assert!(w[1].t >= w[0].t - 1e-9);
            }
        }
        // m(r,a) + N(r,a) - T(r,f) = m(r, f - a) - m(r, f) - log|c| at every radius.
        let log_c = nevanlinna::verify::jensen_constant(&f, a).unwrap();
        let shifted = Rational64::new(f.numerator() - &f.denominator().scale_by(a), f.denominator().clone()).unwrap();
        for (ri, ra) in profiles[0].rows.iter().zip(&profiles[1].rows) {
            let m_shift = proximity_m(&shifted, Target64::Infinity, ra.r, &cfg).unwrap();
            prop_assert!((ra.m_plus_n - ri.t - (m_shift - ri.m - log_c)).abs() <= 1e-7);
        }
    }

    #[test]
    fn counts_match_enumeration(f in rational(), a in complex(1.5), r in 0.1f64..4.0) {
        let analysis = TargetAnalysis::new(&f, Target64::Finite(a)).unwrap();
        prop_assume!(!analysis.touches_circle(r));
        let inside = analysis.points_within(r);
        prop_assert_eq!(analysis.count(r, false).unwrap(), inside.iter().map(|p| p.multiplicity).sum::<usize>());
        prop_assert_eq!(analysis.count(r, true).unwrap(), inside.len());
    }
}
