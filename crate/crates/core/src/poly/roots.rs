use std::f64::consts::TAU;

use num_complex::Complex64;

use super::IntPoly;

/// Simultaneous Aberth-Ehrlich iteration for all complex roots.
///
/// Intended for squarefree inputs; multiple roots converge slowly and only
/// to about half precision.
pub fn aberth_roots(p: &IntPoly) -> Vec<Complex64> {
    let p = p.strip_z();
    let n = p.deg();
    let mut roots = vec![Complex64::new(0.0, 0.0); p.valuation()];
    if n == 0 {
        return roots;
    }
    let c = p.to_f64s();
    let lead = c[n];
    let c: Vec<f64> = c.iter().map(|x| x / lead).collect();
    let dc: Vec<f64> = (1..=n).map(|i| c[i] * i as f64).collect();
    let eval = |coeffs: &[f64], z: Complex64| {
        coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    };
    // Cauchy-type radius for initial guesses, offset from the real axis.
    let radius = c[..n].iter().map(|x| x.abs()).fold(0.0f64, f64::max).powf(1.0 / n as f64).max(0.5);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, TAU * (k as f64 + 0.25) / n as f64 + 0.4))
        .collect();
    for _ in 0..2000 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let pz = eval(&c, z[i]);
            let dpz = eval(&dc, z[i]);
            if pz.norm() == 0.0 {
                continue;
            }
            let ratio = pz / dpz;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let denom = Complex64::new(1.0, 0.0) - ratio * s;
            let step = if denom.norm() == 0.0 { ratio } else { ratio / denom };
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    // Newton polish against the original coefficients.
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let d = eval(&dc, *zi);
            if d.norm() == 0.0 {
                break;
            }
            let step = eval(&c, *zi) / d;
            if !step.is_finite() {
                break;
            }
            *zi -= step;
        }
    }
    roots.extend(z);
    roots
}

/// Angles in `(0, 2π)` of the unit-circle roots of a squarefree
/// self-inversive polynomial with no root at `z = 1`.
///
/// Aberth seeds are bracketed and refined by bisection on the real-valued
/// function `θ ↦ c·e^{-idθ/2} p(e^{iθ})` to an interval width of `tol`.
/// Returns `None` if any root lies off the circle by more than `1e-6`.
pub fn unit_circle_angles(p: &IntPoly, tol: f64) -> Option<Vec<f64>> {
    let d = p.deg();
    if d == 0 {
        return Some(Vec::new());
    }
    let sign = p.self_inversive_sign()?;
    let roots = aberth_roots(p);
    if roots.iter().any(|z| (z.norm() - 1.0).abs() > 1e-6) {
        return None;
    }
    let rot = if sign == 1 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, -1.0) };
    let h = |theta: f64| {
        let z = Complex64::from_polar(1.0, theta);
        (rot * Complex64::from_polar(1.0, -(d as f64) * theta / 2.0) * p.eval_complex(z)).re
    };
    let mut thetas: Vec<f64> = roots.iter().map(|z| z.arg().rem_euclid(TAU)).collect();
    thetas.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut out = Vec::with_capacity(d);
    for (idx, &t) in thetas.iter().enumerate() {
        let prev = if idx == 0 { 0.0 } else { thetas[idx - 1] };
        let next = if idx + 1 == thetas.len() { TAU } else { thetas[idx + 1] };
        let mut lo = (t + prev) / 2.0;
        let mut hi = (t + next) / 2.0;
        let (mut flo, fhi) = (h(lo), h(hi));
        if flo.signum() == fhi.signum() {
            // bracket too coarse to certify; keep the polished Aberth value
            out.push(t);
            continue;
        }
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            let fm = h(mid);
            if fm == 0.0 {
                lo = mid;
                hi = mid;
                break;
            }
            if fm.signum() == flo.signum() {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    Some(out)
}
