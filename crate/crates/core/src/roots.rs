//! Roots of univariate complex polynomials by Durand–Kerner simultaneous
//! iteration. Degrees here are fundamental-domain sizes (small), where the
//! method is fast and stable; convergence tolerance is 1e-10 on the step
//! size with residual polishing left to the iteration itself.

use num::complex::Complex64;

const STEP_TOL: f64 = 1e-12;
const MAX_ITERS: usize = 400;
/// Relative threshold below which a leading coefficient is treated as a
/// degree drop (the corresponding root has escaped to infinity).
const LEADING_EPS: f64 = 1e-12;

/// All roots of `c[0] + c[1] x + … + c[d] x^d`, with multiplicity.
/// Near-zero leading coefficients (relative to the largest) are trimmed
/// first; the constant polynomial has no roots.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let maxc = coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    if maxc == 0.0 {
        return Vec::new();
    }
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while let Some(last) = c.last() {
        if last.norm() < LEADING_EPS * maxc && c.len() > 1 {
            c.pop();
        } else {
            break;
        }
    }
    let d = c.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    if d == 1 {
        return vec![-c[0] / c[1]];
    }

    // Monic normalization.
    let lead = c[d];
    for x in c.iter_mut() {
        *x /= lead;
    }

    // Cauchy-style radius bound and non-real spread of starting points.
    let radius = 1.0
        + c[..d]
            .iter()
            .map(|x| x.norm())
            .fold(0.0f64, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..d)
        .map(|k| radius * seed.powu(k as u32 + 1) / seed.norm().powi(k as i32))
        .collect();

    let eval = |x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for k in (0..d).rev() {
            acc = acc * x + c[k];
        }
        acc
    };

    for _ in 0..MAX_ITERS {
        let mut max_step = 0.0f64;
        for k in 0..d {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if j != k {
                    denom *= roots[k] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                // Coincident iterates: nudge and continue.
                roots[k] += Complex64::new(1e-8, 1e-8);
                max_step = f64::MAX;
                continue;
            }
            let step = eval(roots[k]) / denom;
            roots[k] -= step;
            let scale = 1.0 + roots[k].norm();
            max_step = max_step.max(step.norm() / scale);
        }
        if max_step < STEP_TOL {
            break;
        }
    }
    roots
}
