use crate::{char_poly, largest_real_root, SymbolicError, TransitionMatrix};

const REL_TOL: f64 = 1e-12;
const CROSS_CHECK_Q: usize = 8;

/// Spectral radius by power iteration on the SCC blocks.
///
/// Power iteration runs on B + I restricted to each strongly connected
/// component: for an irreducible non-negative B the Perron root of B + I is
/// simple and strictly dominant, so the shifted iteration converges
/// geometrically even when B itself is periodic. Acyclic parts contribute 0.
pub fn spectral_radius_power(a: &TransitionMatrix) -> f64 {
    let mut rho: f64 = 0.0;
    for comp in a.strongly_connected_components() {
        let sub = a.submatrix(&comp);
        let has_cycle = comp.len() > 1 || sub.entry(0, 0) > 0;
        if !has_cycle {
            continue;
        }
        rho = rho.max(block_radius(&sub));
    }
    rho
}

fn block_radius(b: &TransitionMatrix) -> f64 {
    let q = b.q();
    let mut x = vec![1.0f64; q];
    let mut lambda_prev = 0.0f64;
    let mut stable = 0;
    for _ in 0..500_000 {
        // y = (B + I) x
        let mut y = vec![0.0f64; q];
        for i in 0..q {
            let mut acc = x[i]; // the +I term
            for j in 0..q {
                let e = b.entry(i, j);
                if e > 0 {
                    acc += e as f64 * x[j];
                }
            }
            y[i] = acc;
        }
        let norm = y.iter().fold(0.0f64, |m, v| m.max(*v));
        let lambda = norm; // sup-norm growth of a positive vector
        for v in y.iter_mut() {
            *v /= norm;
        }
        x = y;
        if (lambda - lambda_prev).abs() <= REL_TOL * lambda.max(1.0) {
            stable += 1;
            if stable >= 4 {
                return lambda - 1.0;
            }
        } else {
            stable = 0;
        }
        lambda_prev = lambda;
    }
    lambda_prev - 1.0
}

/// Spectral radius as the largest real root of the characteristic polynomial
/// (exact Sturm bisection). Independent of power iteration.
pub fn spectral_radius_charpoly(a: &TransitionMatrix) -> f64 {
    let coeffs = char_poly(a);
    largest_real_root(&coeffs, 1e-14).unwrap_or(0.0).max(0.0)
}

/// Topological entropy of the subshift: log of the spectral radius of A.
///
/// For integer matrices the radius is either 0 (acyclic graph, eventually
/// empty shift: entropy 0) or at least 1, so the result is always >= 0.
/// Permutation matrices give radius 1, entropy 0. For q <= 8 the power
/// iteration is cross-checked against the exact characteristic-polynomial
/// root; disagreement is reported as an error rather than papered over.
pub fn topological_entropy(a: &TransitionMatrix) -> Result<f64, SymbolicError> {
    if a.is_zero() {
        return Err(SymbolicError::ZeroMatrix);
    }
    let rho = spectral_radius_power(a);
    if a.q() <= CROSS_CHECK_Q {
        let rho2 = spectral_radius_charpoly(a);
        if (rho - rho2).abs() > 1e-9 * rho.max(1.0) {
            return Err(SymbolicError::EntropyCrossCheck { power: rho, charpoly: rho2 });
        }
    }
    if rho < 1.0 {
        // no cycles: no periodic words at all
        return Ok(0.0);
    }
    Ok(rho.ln())
}
