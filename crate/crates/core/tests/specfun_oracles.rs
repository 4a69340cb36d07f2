//! Struve / Bessel-Y checks against references that share no code path with
//! the implementation under test.

use deform_hydrogen::quadrature::{integrate_semi_infinite, QuadratureSpec, Transform};
use deform_hydrogen::specfun::{bessel_y, euler_gamma, struve_h, struve_minus_y, SERIES_CUTOFF};

fn h(nu: u32, x: f64) -> f64 {
    struve_h(nu, x).unwrap().value
}

fn y(nu: u32, x: f64) -> f64 {
    bessel_y(nu, x).unwrap().value
}

fn hmy(nu: u32, x: f64) -> f64 {
    struve_minus_y(nu, x).unwrap().value
}

/// Hν − Yν from its Laplace-type integral, evaluated by quadrature.
fn integral_rep(nu: u32, x: f64) -> f64 {
    let spec = QuadratureSpec::default().with_rel_tol(1e-13).with_transform(Transform::ExpSubstitution);
    // s = x t puts the exponential decay on a unit scale
    let root = |s: f64| (1.0 + (s / x) * (s / x)).sqrt();
    match nu {
        0 => {
            let q = integrate_semi_infinite(|s| (-s).exp() / root(s), &spec).unwrap();
            2.0 / (std::f64::consts::PI * x) * q.value
        }
        _ => {
            let q = integrate_semi_infinite(|s| (-s).exp() * root(s), &spec).unwrap();
            2.0 / std::f64::consts::PI * q.value
        }
    }
}

/// Large-x asymptotic series of Hν − Yν, summed to its smallest term.
fn asymptotic(nu: u32, x: f64) -> f64 {
    // (1+t²)^{ν−½} = Σ c_k t^{2k}; ∫ e^{−xt} t^{2k} dt = (2k)!/x^{2k+1}
    let a = f64::from(nu) - 0.5;
    let mut c = 1.0;
    let mut moment = 1.0 / x;
    let mut sum = c * moment;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let kf = f64::from(k);
        c *= (a - kf + 1.0) / kf;
        moment *= (2.0 * kf - 1.0) * (2.0 * kf) / (x * x);
        let term = c * moment;
        if term.abs() >= last {
            break;
        }
        sum += term;
        last = term.abs();
    }
    let pre = if nu == 0 { 1.0 } else { x };
    2.0 / std::f64::consts::PI * pre * sum
}

#[test]
fn series_region_matches_integral_representation() {
    let mut x = 0.05;
    while x <= SERIES_CUTOFF {
        for nu in [0, 1] {
            let got = h(nu, x) - y(nu, x);
            let want = integral_rep(nu, x);
            assert!((got - want).abs() <= 1e-10 * want.abs().max(1.0), "nu={nu} x={x}: {got} vs {want}");
        }
        x *= 1.37;
    }
}

#[test]
fn large_argument_matches_asymptotic_series() {
    for x in [30.0, 45.0, 80.0, 250.0, 1e3] {
        for nu in [0, 1] {
            let got = hmy(nu, x);
            let want = asymptotic(nu, x);
            assert!((got - want).abs() <= 1e-12 * want.abs(), "nu={nu} x={x}: {got} vs {want}");
        }
    }
}

#[test]
fn direct_difference_agrees_with_combined_routine() {
    for x in [0.3, 2.0, 7.5, 15.9, 16.1, 20.0, 33.0] {
        for nu in [0, 1] {
            let direct = h(nu, x) - y(nu, x);
            let combined = hmy(nu, x);
            assert!((direct - combined).abs() <= 1e-10, "nu={nu} x={x}");
        }
    }
}

#[test]
fn derivative_identities() {
    // Y₁ = −Y₀′ and (x H₁)′ = x H₀, by central differences
    let step = 1e-5;
    for x in [0.5, 1.3, 4.0, 9.0, 15.0, 17.0, 25.0, 40.0] {
        let dy0 = (y(0, x + step) - y(0, x - step)) / (2.0 * step);
        assert!((y(1, x) + dy0).abs() < 1e-8, "Y at {x}");
        let g = |t: f64| t * h(1, t);
        let dg = (g(x + step) - g(x - step)) / (2.0 * step);
        assert!((dg - x * h(0, x)).abs() < 1e-8 * x.max(1.0), "H at {x}");
    }
}

#[test]
fn continuous_across_series_cutoff() {
    let eps = 1e-13;
    for nu in [0, 1] {
        for f in [h, y] {
            let below = f(nu, SERIES_CUTOFF - eps);
            let above = f(nu, SERIES_CUTOFF + eps);
            assert!((below - above).abs() < 1e-11, "nu={nu}: {below} vs {above}");
        }
    }
}

#[test]
fn struve_minus_y_is_positive_and_decreasing() {
    let mut prev = f64::INFINITY;
    let mut x = 0.01;
    while x < 500.0 {
        let v = hmy(0, x);
        assert!(v > 0.0 && v < prev, "x={x}");
        prev = v;
        x *= 1.5;
    }
}

#[test]
fn euler_gamma_matches_harmonic_extrapolation() {
    // H_n − ln n − 1/(2n) + 1/(12n²) − 1/(120n⁴) → γ with O(n⁻⁶) error
    let n = 1000u32;
    let harmonic: f64 = (1..=n).rev().map(|k| 1.0 / f64::from(k)).sum();
    let nf = f64::from(n);
    let approx = harmonic - nf.ln() - 0.5 / nf + 1.0 / (12.0 * nf * nf) - 1.0 / (120.0 * nf.powi(4));
    assert!((approx - euler_gamma()).abs() < 1e-14);
}
