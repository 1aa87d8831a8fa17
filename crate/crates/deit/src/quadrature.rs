//! Gauss-Legendre nodes and adaptive Gauss-Kronrod quadrature.
//!
//! The exchange field D(z)^2 spans roughly three orders of magnitude over
//! the medium, so fixed-order rules are not enough for the susceptibility
//! integrals; the adaptive G7-K15 driver below bisects until the embedded
//! error estimate meets the requested relative tolerance.

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton
/// iteration on the Legendre polynomial.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Fixed-order Gauss-Legendre integral of `f` over [a, b].
pub fn integrate_gl<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, order: usize) -> f64 {
    let (xs, ws) = gauss_legendre(order);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    xs.iter()
        .zip(ws.iter())
        .map(|(&x, &w)| w * f(mid + half * x))
        .sum::<f64>()
        * half
}

// G7-K15 nodes (positive half) and weights, Kronrod 15-point with embedded
// Gauss 7-point. Standard QUADPACK values.
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let fc = f(mid);
    let mut result_k = WGK[7] * fc;
    let mut result_g = WG[3] * fc;
    for j in 0..7 {
        let x = half * XGK[j];
        let fsum = f(mid - x) + f(mid + x);
        result_k += WGK[j] * fsum;
        if j % 2 == 1 {
            result_g += WG[j / 2] * fsum;
        }
    }
    result_k *= half;
    result_g *= half;
    let err = (result_k - result_g).abs();
    (result_k, err)
}

/// Adaptive quadrature of `f` over [a, b] to relative tolerance `rel_tol`
/// (with a small absolute floor for integrals near zero).
pub fn integrate_adaptive<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> f64 {
    let mut stack = vec![(a, b)];
    let mut total = 0.0;
    let (whole, _) = gk15(&f, a, b);
    let scale = whole.abs().max(1e-300);
    let mut depth_guard = 0usize;
    while let Some((lo, hi)) = stack.pop() {
        depth_guard += 1;
        if depth_guard > 100_000 {
            // refuse to loop forever on pathological integrands
            let (v, _) = gk15(&f, lo, hi);
            total += v;
            continue;
        }
        let (v, e) = gk15(&f, lo, hi);
        let local_tol = rel_tol * scale * ((hi - lo) / (b - a)).max(1e-12);
        if e <= local_tol || (hi - lo) < 1e-13 * (b - a).abs() {
            total += v;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((lo, mid));
            stack.push((mid, hi));
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_weights_sum_to_two() {
        for n in [2, 5, 16, 64] {
            let (_, w) = gauss_legendre(n);
            let s: f64 = w.iter().sum();
            assert!((s - 2.0).abs() < 1e-13, "n={n}: sum {s}");
        }
    }

    #[test]
    fn gl_integrates_polynomials_exactly() {
        // order n is exact through degree 2n-1
        let v = integrate_gl(|x| x.powi(6), -1.0, 1.0, 4);
        assert!((v - 2.0 / 7.0).abs() < 1e-14);
        let v = integrate_gl(|x| 3.0 * x * x, 0.0, 2.0, 8);
        assert!((v - 8.0).abs() < 1e-12);
    }

    #[test]
    fn adaptive_handles_peaked_integrand() {
        // narrow Lorentzian: int 1/(x^2 + g^2) dx over [-1, 1], g = 1e-3
        let g: f64 = 1e-3;
        let exact = 2.0 * (1.0f64 / g).atan() / g;
        let v = integrate_adaptive(|x| 1.0 / (x * x + g * g), -1.0, 1.0, 1e-10);
        assert!(
            ((v - exact) / exact).abs() < 1e-8,
            "got {v}, want {exact}"
        );
    }

    #[test]
    fn adaptive_matches_analytic_exponential() {
        let v = integrate_adaptive(|x| (-x).exp(), 0.0, 30.0, 1e-10);
        let exact = 1.0 - (-30.0f64).exp();
        assert!(((v - exact) / exact).abs() < 1e-9);
    }
}
