use backshift_core::{norm_p, reference_bound, BoundKind, Exponent, PExponent, TaylorCoeffs, C64};
use proptest::prelude::*;

fn exponents() -> Vec<Exponent> {
    vec![
        PExponent::one(),
        PExponent::Finite(1.5),
        PExponent::two(),
        PExponent::Finite(3.0),
        PExponent::Finite(6.0),
        PExponent::Infinity,
    ]
}

fn poly() -> impl Strategy<Value = backshift_core::Coeffs> {
    prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64), 1..=21)
        .prop_map(|v| TaylorCoeffs::new(v.into_iter().map(|(re, im)| C64::new(re, im)).collect()))
        .prop_filter("nonzero", |f| f.coeffs().iter().any(|c| c.norm() > 1e-3))
}

proptest! {
    #[test]
    fn homogeneity(f in poly(), re in -5.0..5.0f64, im in -5.0..5.0f64) {
        let c = C64::new(re, im);
        let g = f.to_grid(64).unwrap();
        let cg = g.scale(c);
        for p in exponents() {
            let lhs = norm_p(&cg, p);
            let rhs = c.norm() * norm_p(&g, p);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1e-300), "p={p}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn monotone_in_p(f in poly()) {
        let g = f.to_grid(64).unwrap();
        let norms: Vec<f64> = exponents().into_iter().map(|p| norm_p(&g, p)).collect();
        for w in norms.windows(2) {
            prop_assert!(w[0] <= w[1] + 1e-12, "{norms:?}");
        }
    }

    #[test]
    fn parseval(f in poly()) {
        let g = f.to_grid(64).unwrap();
        let energy: f64 = f.coeffs().iter().map(|c| c.norm_sqr()).sum();
        let n2 = norm_p(&g, PExponent::two());
        prop_assert!((n2 * n2 - energy).abs() <= 1e-12 * energy);
    }
}

#[test]
fn bound_ordering() {
    let one = PExponent::<f64>::one();
    let b = |k| reference_bound(one, k).unwrap();
    assert!(b(BoundKind::SharpH1) < b(BoundKind::FergusonH1));
    assert!(b(BoundKind::FergusonH1) < b(BoundKind::Trivial));
    assert!(b(BoundKind::SharpH1) < b(BoundKind::RieszThorin));
    assert_eq!(b(BoundKind::RieszThorin), 2.0);
    assert_eq!(b(BoundKind::SharpH1), 2.0 * 3f64.powf(-0.5));
}

#[test]
fn riesz_thorin_is_symmetric_under_conjugate_exponents() {
    for p in [1.25, 1.5, 3.0, 4.0] {
        let q = p / (p - 1.0);
        let a: f64 = reference_bound(PExponent::Finite(p), BoundKind::RieszThorin).unwrap();
        let b: f64 = reference_bound(PExponent::Finite(q), BoundKind::RieszThorin).unwrap();
        assert!((a - b).abs() < 1e-14);
    }
}
