//! Exact characteristic polynomial and largest-real-root isolation.
//!
//! Used as an oracle independent of power iteration: coefficients come from
//! Faddeev-LeVerrier over big integers, the root from a Sturm-chain bisection
//! over exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::TransitionMatrix;

type Poly = Vec<BigRational>; // ascending coefficients

/// Coefficients of det(xI - A), ascending: c[0] + c[1] x + ... + x^q.
pub fn char_poly(a: &TransitionMatrix) -> Vec<BigInt> {
    let q = a.q();
    let to_big = |v: u64| BigInt::from(v);
    let mut m: Vec<BigInt> = vec![BigInt::zero(); q * q]; // M_0 = 0
    let mut coeffs = vec![BigInt::zero(); q + 1]; // descending fill below
    coeffs[q] = BigInt::one(); // leading term x^q
    let mut c_prev = BigInt::one(); // c_0 = 1

    for k in 1..=q {
        // M_k = A * M_{k-1} + c_{k-1} I
        let mut am = vec![BigInt::zero(); q * q];
        for i in 0..q {
            for l in 0..q {
                let a_il = to_big(a.entry(i, l));
                if a_il.is_zero() {
                    continue;
                }
                for j in 0..q {
                    let add = &a_il * &m[l * q + j];
                    am[i * q + j] += add;
                }
            }
        }
        for i in 0..q {
            am[i * q + i] += &c_prev;
        }
        m = am;
        // c_k = -trace(A * M_k) / k  (exact division)
        let mut tr = BigInt::zero();
        for i in 0..q {
            for l in 0..q {
                tr += to_big(a.entry(i, l)) * &m[l * q + i];
            }
        }
        let c_k = -tr / BigInt::from(k as u64);
        coeffs[q - k] = c_k.clone();
        c_prev = c_k;
    }
    coeffs
}

fn trim(p: &mut Poly) {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
}

fn degree(p: &Poly) -> usize {
    p.len() - 1
}

fn eval(p: &Poly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn derivative(p: &Poly) -> Poly {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    let mut out = Vec::with_capacity(p.len() - 1);
    for (i, c) in p.iter().enumerate().skip(1) {
        out.push(c * BigRational::from(BigInt::from(i as u64)));
    }
    out
}

/// Remainder of polynomial division.
fn poly_rem(num: &Poly, den: &Poly) -> Poly {
    let mut rem = num.clone();
    trim(&mut rem);
    let mut den = den.clone();
    trim(&mut den);
    let dd = degree(&den);
    let lead = den[dd].clone();
    while degree(&rem) >= dd && !(rem.len() == 1 && rem[0].is_zero()) {
        let dr = degree(&rem);
        let factor = &rem[dr] / &lead;
        let shift = dr - dd;
        for i in 0..=dd {
            let sub = &den[i] * &factor;
            rem[i + shift] = &rem[i + shift] - sub;
        }
        rem[dr] = BigRational::zero();
        trim(&mut rem);
        if dr == 0 {
            break;
        }
    }
    rem
}

fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0].is_zero()) {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    // normalize leading coefficient to 1
    let lead = a.last().unwrap().clone();
    if !lead.is_zero() {
        for c in a.iter_mut() {
            *c = &*c / &lead;
        }
    }
    a
}

/// Sturm chain of a square-free polynomial.
fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), derivative(p)];
    loop {
        let n = chain.len();
        let r = poly_rem(&chain[n - 2], &chain[n - 1]);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
        chain.push(r.iter().map(|c| -c).collect());
        if degree(chain.last().unwrap()) == 0 {
            break;
        }
    }
    chain
}

fn sign_variations(chain: &[Poly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut prev: Option<bool> = None; // sign as is_positive
    for p in chain {
        let v = eval(p, x);
        if v.is_zero() {
            continue;
        }
        let s = v.is_positive();
        if let Some(ps) = prev {
            if ps != s {
                count += 1;
            }
        }
        prev = Some(s);
    }
    count
}

/// Largest real root of the polynomial (ascending coefficients over BigInt),
/// isolated by Sturm bisection to absolute tolerance `tol`. Returns None if
/// there is no real root.
pub fn largest_real_root(coeffs: &[BigInt], tol: f64) -> Option<f64> {
    let mut p: Poly = coeffs.iter().map(|c| BigRational::from(c.clone())).collect();
    trim(&mut p);
    if degree(&p) == 0 {
        return None;
    }
    // square-free part: p / gcd(p, p')
    let g = poly_gcd(&p, &derivative(&p));
    let p = if degree(&g) > 0 { poly_div_exact(&p, &g) } else { p };
    let chain = sturm_chain(&p);

    // Cauchy bound: 1 + max |c_i| / |lead|
    let lead = p.last().unwrap().clone();
    let mut maxc = BigRational::zero();
    for c in &p[..p.len() - 1] {
        let a = (c / &lead).abs();
        if a > maxc {
            maxc = a;
        }
    }
    let bound = maxc + BigRational::one();
    let mut lo = -bound.clone();
    let mut hi = bound;

    let roots_in = |a: &BigRational, b: &BigRational| -> usize {
        sign_variations(&chain, a).saturating_sub(sign_variations(&chain, b))
    };
    if roots_in(&lo, &hi) == 0 {
        return None;
    }
    // keep the largest root inside (lo, hi]
    let two = BigRational::from(BigInt::from(2));
    let tol_r = BigRational::from_float(tol.max(f64::MIN_POSITIVE))
        .unwrap_or_else(|| BigRational::new(BigInt::one(), BigInt::from(u64::MAX)));
    while &hi - &lo > tol_r {
        let mid = (&lo + &hi) / &two;
        if roots_in(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let approx = (&lo + &hi) / two;
    let num = approx.numer().to_string().parse::<f64>().ok()?;
    let den = approx.denom().to_string().parse::<f64>().ok()?;
    Some(num / den)
}

fn poly_div_exact(num: &Poly, den: &Poly) -> Poly {
    let mut rem = num.clone();
    trim(&mut rem);
    let mut den = den.clone();
    trim(&mut den);
    let dd = degree(&den);
    let lead = den[dd].clone();
    let mut quot = vec![BigRational::zero(); degree(&rem).saturating_sub(dd) + 1];
    while degree(&rem) >= dd && !(rem.len() == 1 && rem[0].is_zero()) {
        let dr = degree(&rem);
        let factor = &rem[dr] / &lead;
        let shift = dr - dd;
        quot[shift] = factor.clone();
        for i in 0..=dd {
            let sub = &den[i] * &factor;
            rem[i + shift] = &rem[i + shift] - sub;
        }
        rem[dr] = BigRational::zero();
        trim(&mut rem);
        if dr == 0 {
            break;
        }
    }
    trim(&mut quot);
    quot
}
