//! Exact integer polynomials: evaluation, Sturm sequences, and bisection to
//! the largest real root.
//!
//! Coefficients are arbitrary-precision integers in descending degree order
//! with a nonzero leading entry (except for the zero polynomial `[]`).
//! Root isolation never leaves exact arithmetic: sign evaluations happen at
//! dyadic rationals, so the returned `f64` is the midpoint of an interval of
//! width at most `eps` certified to contain the largest real root.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::Coeff;

/// Removes leading zero coefficients in place.
pub fn trim(p: &mut Vec<Coeff>) {
    while p.first().is_some_and(|c| c.is_zero()) {
        p.remove(0);
    }
}

/// Degree of a trimmed polynomial; `None` for the zero polynomial.
pub fn degree(p: &[Coeff]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

/// Horner evaluation at an exact rational point.
pub fn eval_rational(p: &[Coeff], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

/// Evaluation at an integer point.
pub fn eval_int(p: &[Coeff], x: &Coeff) -> Coeff {
    let mut acc = Coeff::zero();
    for c in p {
        acc = acc * x + c;
    }
    acc
}

/// Formal derivative.
pub fn derivative(p: &[Coeff]) -> Vec<Coeff> {
    let n = p.len();
    if n <= 1 {
        return Vec::new();
    }
    p[..n - 1]
        .iter()
        .enumerate()
        .map(|(i, c)| c * Coeff::from((n - 1 - i) as u64))
        .collect()
}

/// Coefficientwise difference `a - b` (descending order), trimmed.
pub fn sub(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
    let len = a.len().max(b.len());
    let mut out = vec![Coeff::zero(); len];
    for (i, c) in a.iter().enumerate() {
        out[len - a.len() + i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[len - b.len() + i] -= c;
    }
    trim(&mut out);
    out
}

/// Multiplication by `x`.
pub fn mul_x(p: &[Coeff]) -> Vec<Coeff> {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = p.to_vec();
    out.push(Coeff::zero());
    out
}

type QPoly = Vec<BigRational>;

fn q_trim(p: &mut QPoly) {
    while p.first().is_some_and(|c| c.is_zero()) {
        p.remove(0);
    }
}

/// Scales by the reciprocal of the absolute leading coefficient; positive
/// scaling preserves every sign needed by the Sturm count.
fn q_normalize(p: &mut QPoly) {
    if let Some(lead) = p.first() {
        let scale = lead.abs();
        if !scale.is_zero() && !scale.is_one() {
            for c in p.iter_mut() {
                *c /= scale.clone();
            }
        }
    }
}

/// Remainder of polynomial long division.
fn q_rem(a: &[BigRational], b: &[BigRational]) -> QPoly {
    debug_assert!(!b.is_empty());
    let mut r: QPoly = a.to_vec();
    q_trim(&mut r);
    while r.len() >= b.len() {
        let factor = &r[0] / &b[0];
        for i in 0..b.len() {
            let t = &factor * &b[i];
            r[i] -= t;
        }
        debug_assert!(r[0].is_zero());
        r.remove(0);
        q_trim(&mut r);
    }
    r
}

/// Sturm chain of `p` (with sign-preserving normalization at each step).
fn sturm_chain(p: &[Coeff]) -> Vec<QPoly> {
    let to_q = |p: &[Coeff]| -> QPoly {
        p.iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    };
    let mut chain: Vec<QPoly> = Vec::new();
    let mut p0 = to_q(p);
    q_trim(&mut p0);
    if p0.is_empty() {
        return chain;
    }
    chain.push(p0.clone());
    let mut p1 = to_q(&derivative(p));
    q_trim(&mut p1);
    while !p1.is_empty() {
        q_normalize(&mut p1);
        chain.push(p1.clone());
        let mut next = q_rem(&p0, &p1);
        for c in next.iter_mut() {
            *c = -c.clone();
        }
        p0 = std::mem::replace(&mut p1, next);
    }
    chain
}

fn q_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p {
        acc = acc * x + c;
    }
    acc
}

/// Sign variations of the chain at `x`, zeros skipped.
fn variations(chain: &[QPoly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut prev = 0i8;
    for p in chain {
        let v = q_eval(p, x);
        let s = if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if s != 0 {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
    }
    count
}

/// Largest real root of a nonconstant integer polynomial, as the midpoint
/// of a bisection interval narrowed below `eps`; `None` when no real root
/// exists.
pub fn largest_real_root(p: &[Coeff], eps: f64) -> Option<f64> {
    let mut p = p.to_vec();
    trim(&mut p);
    if degree(&p).is_none_or(|d| d == 0) {
        return None;
    }
    // Cauchy bound: every root has |x| < 1 + max |c_i| / |c_0|.
    let lead = p[0].abs();
    let max_tail = p[1..]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Coeff::zero);
    let bound = BigInt::from(2) + (max_tail + &lead - BigInt::one()) / &lead;
    let chain = sturm_chain(&p);
    let mut lo = BigRational::from_integer(-bound.clone());
    let mut hi = BigRational::from_integer(bound);
    let mut var_hi = variations(&chain, &hi);
    if variations(&chain, &lo) == var_hi {
        return None;
    }
    let eps = BigRational::from_f64(eps).filter(|e| e.is_positive())?;
    while &hi - &lo > eps {
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        if eval_rational(&p, &mid).is_zero() {
            // mid is itself a root, so the largest root is at or above it.
            lo = mid;
        } else if variations(&chain, &mid) > var_hi {
            lo = mid;
        } else {
            hi = mid;
            var_hi = variations(&chain, &hi);
        }
    }
    ((lo + hi) / BigRational::from_integer(2.into())).to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<Coeff> {
        v.iter().map(|&c| Coeff::from(c)).collect()
    }

    #[test]
    fn eval_and_derivative() {
        // x^3 - 2x + 1 at 3 = 22; derivative 3x^2 - 2.
        let p = z(&[1, 0, -2, 1]);
        assert_eq!(eval_int(&p, &Coeff::from(3)), Coeff::from(22));
        assert_eq!(derivative(&p), z(&[3, 0, -2]));
    }

    #[test]
    fn subtraction_aligns_degrees() {
        // (x^2 + 1) - (x + 1) = x^2 - x.
        assert_eq!(sub(&z(&[1, 0, 1]), &z(&[1, 1])), z(&[1, -1, 0]));
        assert!(sub(&z(&[1, 2]), &z(&[1, 2])).is_empty());
    }

    #[test]
    fn quadratic_root() {
        // x^2 - x - 6 = (x - 3)(x + 2).
        let r = largest_real_root(&z(&[1, -1, -6]), 1e-12).unwrap();
        assert!((r - 3.0).abs() < 1e-9, "{r}");
    }

    #[test]
    fn integer_roots_hit_exactly() {
        // (x - 1)(x - 2)(x - 4) with bisection midpoints that can land on
        // the roots.
        let p = z(&[1, -7, 14, -8]);
        let r = largest_real_root(&p, 1e-12).unwrap();
        assert!((r - 4.0).abs() < 1e-9, "{r}");
    }

    #[test]
    fn repeated_roots() {
        // (x - 2)^2 (x + 1).
        let p = z(&[1, -3, 0, 4]);
        let r = largest_real_root(&p, 1e-12).unwrap();
        assert!((r - 2.0).abs() < 1e-9, "{r}");
    }

    #[test]
    fn no_real_roots() {
        assert!(largest_real_root(&z(&[1, 0, 1]), 1e-9).is_none());
        assert!(largest_real_root(&z(&[5]), 1e-9).is_none());
        assert!(largest_real_root(&[], 1e-9).is_none());
    }

    #[test]
    fn negative_largest_root() {
        // (x + 3)(x + 5): largest root -3.
        let p = z(&[1, 8, 15]);
        let r = largest_real_root(&p, 1e-12).unwrap();
        assert!((r + 3.0).abs() < 1e-9, "{r}");
    }

    #[test]
    fn random_products_of_linear_factors() {
        let mut state = 0xc0ffee11u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..50 {
            let k = 2 + (next() % 5) as usize;
            let roots: Vec<i64> = (0..k).map(|_| (next() % 21) as i64 - 10).collect();
            // Expand prod (x - r_i).
            let mut p = z(&[1]);
            for &r in &roots {
                let shifted = mul_x(&p);
                let scaled: Vec<Coeff> = p.iter().map(|c| c * Coeff::from(r)).collect();
                p = sub(&shifted, &scaled);
            }
            let want = *roots.iter().max().unwrap() as f64;
            let got = largest_real_root(&p, 1e-10).unwrap();
            assert!((got - want).abs() < 1e-8, "roots {roots:?} got {got}");
        }
    }
}
