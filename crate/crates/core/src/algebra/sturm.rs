//! Exact real-root counting by Sturm sequences over rationals.

use crate::algebra::IntPoly;
use crate::error::{Error, Result};
use crate::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Polynomial over Q, lowest degree first, used internally for Sturm
/// chains and interval evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct RatPoly {
    pub coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_int_poly(f: &IntPoly) -> Self {
        RatPoly::new(
            f.coeffs()
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> usize {
        assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return RatPoly::new(vec![]);
        }
        RatPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i as u64 + 1)))
                .collect(),
        )
    }

    fn rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        let dd = d.deg();
        let lcinv = d.coeffs.last().unwrap().recip();
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let c = r.last().unwrap().clone();
            if !c.is_zero() {
                let q = &c * &lcinv;
                let off = r.len() - 1 - dd;
                for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                    let delta = &q * dc;
                    r[off + j] -= delta;
                }
            }
            r.pop();
            while r.last().map_or(false, |c| c.is_zero()) {
                r.pop();
            }
        }
        RatPoly::new(r)
    }
}

/// Sturm chain of a squarefree polynomial.
struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    fn new(f: &RatPoly) -> Self {
        let mut chain = vec![f.clone(), f.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() || chain[n - 1].deg() == 0 {
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(RatPoly::new(r.coeffs.iter().map(|c| -c).collect()));
        }
        SturmChain { chain }
    }

    /// Sign variations at x, ignoring zeros.
    fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            if p.is_zero() {
                continue;
            }
            let v = p.eval(x);
            let s = if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the half-open interval (lo, hi].
    fn count_half_open(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations(lo) - self.variations(hi)
    }
}

/// Exact number of distinct real roots of the squarefree polynomial `f`
/// in the closed interval [lo, hi]. Endpoint roots are detected by
/// separate evaluation.
pub fn count_real_roots_in_interval(
    f: &IntPoly,
    lo: &Rational,
    hi: &Rational,
) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("zero polynomial".into()));
    }
    if lo >= hi {
        return Err(Error::InvalidArgument("need lo < hi".into()));
    }
    if !f.is_squarefree() {
        return Err(Error::Internal(
            "count_real_roots_in_interval requires a squarefree input".into(),
        ));
    }
    let fq = RatPoly::from_int_poly(f);
    if fq.deg() == 0 {
        return Ok(0);
    }
    let chain = SturmChain::new(&fq);
    // (lo, hi] via variations, then account for a root exactly at lo.
    let mut n = chain.count_half_open(lo, hi);
    if fq.eval(lo).is_zero() {
        n += 1;
    }
    Ok(n)
}

/// Cauchy bound: all real roots of f lie in (-b, b).
fn root_bound(f: &IntPoly) -> Rational {
    let lc = f.leading();
    let mut m = Rational::zero();
    for c in f.coeffs() {
        let r = Rational::new(c.abs(), lc.abs());
        if r > m {
            m = r;
        }
    }
    m + Rational::from_integer(BigInt::one())
}

/// Decides whether every complex root of `f` (counted with multiplicity)
/// is real and lies in the closed interval [-sqrt(s), sqrt(s)] for a
/// non-negative rational s (typically s = 4p with sqrt irrational).
///
/// Exact: (a) the squarefree part must have all roots real, (b) the
/// even polynomial with roots y^2 must have no root above s. Roots at
/// exactly +-sqrt(s) are included (closed interval).
pub fn all_roots_real_in_scaled_interval(f: &IntPoly, s: &Rational) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("zero polynomial".into()));
    }
    if f.deg() == 0 {
        return Ok(true);
    }
    let sf = f.squarefree_part();
    let d = sf.deg();
    if d == 0 {
        return Ok(true);
    }
    let bound = root_bound(&sf);
    let total = count_real_roots_in_interval(&sf, &(-bound.clone()), &bound)?;
    if total != d {
        return Ok(false);
    }
    // t(u) = +- sf(sqrt u) * sf(-sqrt u): integer polynomial in u = y^2
    let t = squared_roots_poly(&sf);
    let tsf = t.squarefree_part();
    if tsf.deg() == 0 {
        return Ok(true);
    }
    let ubound = {
        let b = root_bound(&tsf);
        if b > *s {
            b
        } else {
            s.clone() + Rational::one()
        }
    };
    // roots with y^2 strictly above s would violate the closed interval;
    // a root at exactly s sits on the boundary and is allowed
    let mut above = count_real_roots_in_interval(&tsf, s, &ubound)?;
    if RatPoly::from_int_poly(&tsf).eval(s).is_zero() {
        above -= 1;
    }
    Ok(above == 0)
}

/// Integer polynomial whose roots are the squares of the roots of f:
/// writing f(y)f(-y) = g(y^2), returns g (up to sign normalization).
fn squared_roots_poly(f: &IntPoly) -> IntPoly {
    let minus = IntPoly::new(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect(),
    );
    let prod = f.mul(&minus);
    let mut even = Vec::new();
    for i in (0..prod.coeffs().len()).step_by(2) {
        even.push(prod.coeff(i));
    }
    debug_assert!(prod.coeffs().iter().skip(1).step_by(2).all(|c| c.is_zero()));
    IntPoly::new(even)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn spec_examples() {
        let f = IntPoly::from_i64(&[-2, 0, 1]); // x^2 - 2
        assert_eq!(count_real_roots_in_interval(&f, &rat(-2), &rat(2)).unwrap(), 2);
        let f = IntPoly::from_i64(&[1, 0, 1]); // x^2 + 1
        assert_eq!(count_real_roots_in_interval(&f, &rat(-2), &rat(2)).unwrap(), 0);
        let f = IntPoly::from_i64(&[-5, 0, 1]); // x^2 - 5
        assert_eq!(count_real_roots_in_interval(&f, &rat(-2), &rat(2)).unwrap(), 0);
    }

    #[test]
    fn endpoints_are_included() {
        let f = IntPoly::from_i64(&[-4, 0, 1]); // roots +-2
        assert_eq!(count_real_roots_in_interval(&f, &rat(-2), &rat(2)).unwrap(), 2);
        assert_eq!(count_real_roots_in_interval(&f, &rat(-2), &rat(0)).unwrap(), 1);
        assert_eq!(count_real_roots_in_interval(&f, &rat(0), &rat(2)).unwrap(), 1);
    }

    #[test]
    fn partition_additivity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let mut done = 0;
        while done < 60 {
            let d = rng.gen_range(2..=6);
            let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-9..=9)).collect();
            c[d] = 1;
            let f = IntPoly::from_i64(&c);
            if !f.is_squarefree() {
                continue;
            }
            let b = 16i64;
            let whole = count_real_roots_in_interval(&f, &rat(-b), &rat(b)).unwrap();
            // partition [-B, B] into half-open pieces plus the left endpoint
            let cuts = [-b, -3, 0, 2, b];
            let mut sum = 0;
            for w in cuts.windows(2) {
                let chain_count = count_real_roots_in_interval(&f, &rat(w[0]), &rat(w[1])).unwrap();
                // avoid double counting shared endpoints: drop the left one
                // except on the first piece
                let lo_is_root = {
                    let fq = RatPoly::from_int_poly(&f);
                    fq.eval(&rat(w[0])).is_zero()
                };
                sum += chain_count - if lo_is_root && w[0] != -b { 1 } else { 0 };
            }
            assert_eq!(sum, whole, "f={f:?}");
            done += 1;
        }
    }

    #[test]
    fn scaled_interval_membership() {
        // x^2 - 28: roots +-sqrt(28), not within [-2 sqrt 7, 2 sqrt 7] iff s < 28
        let f = IntPoly::from_i64(&[-28, 0, 1]);
        assert!(all_roots_real_in_scaled_interval(&f, &rat(28)).unwrap());
        assert!(!all_roots_real_in_scaled_interval(&f, &rat(27)).unwrap());
        // x^2 + 1: not all roots real
        let f = IntPoly::from_i64(&[1, 0, 1]);
        assert!(!all_roots_real_in_scaled_interval(&f, &rat(100)).unwrap());
        // x + 3: single root 3, s = 9 boundary included
        let f = IntPoly::from_i64(&[3, 1]);
        assert!(all_roots_real_in_scaled_interval(&f, &rat(9)).unwrap());
        assert!(!all_roots_real_in_scaled_interval(&f, &rat(8)).unwrap());
    }
}
