//! Dense univariate polynomials over Z with exact resultants and
//! discriminants (fraction-free subresultant scheme).

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Polynomial over Z, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    /// x^n
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        IntPoly::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree of a nonzero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().expect("deg of zero polynomial")
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().expect("leading of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading().is_one()
    }

    pub fn neg(&self) -> Self {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        IntPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Coefficient-wise exact division by a scalar; panics if inexact.
    pub fn scalar_div_exact(&self, s: &BigInt) -> Self {
        assert!(!s.is_zero());
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(s);
                    assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i as u64 + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Content: gcd of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        self.scalar_div_exact(&c)
    }

    /// Euclidean division when `d` is monic: self = q*d + r, deg r < deg d.
    pub fn div_rem_monic(&self, d: &Self) -> (Self, Self) {
        assert!(d.is_monic());
        let dd = d.deg();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = std::mem::replace(&mut r[i], BigInt::zero());
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().take(dd).enumerate() {
                r[i - dd + j] -= &c * dc;
            }
            q[i - dd] = c;
        }
        r.truncate(dd);
        (IntPoly::new(q), IntPoly::new(r))
    }

    /// Whether the monic polynomial `d` divides `self` exactly.
    pub fn divisible_by_monic(&self, d: &Self) -> bool {
        self.div_rem_monic(d).1.is_zero()
    }

    /// Pseudo-remainder: R with lc(d)^(deg self - deg d + 1) * self = Q*d + R.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.deg();
        let lc = d.leading();
        let mut r = self.clone();
        let mut e = (self.deg() + 1).saturating_sub(dd) as i64;
        while !r.is_zero() && r.deg() >= dd {
            let k = r.deg() - dd;
            let rl = r.leading();
            // r <- lc*r - rl*x^k*d
            let mut shifted = vec![BigInt::zero(); k];
            shifted.extend(d.coeffs.iter().map(|c| c * &rl));
            r = r.scale(&lc).sub(&IntPoly::new(shifted));
            e -= 1;
        }
        // restore the full lc^(δ+1) factor
        let mut out = r;
        for _ in 0..e {
            out = out.scale(&lc);
        }
        out
    }

    /// Resultant of two nonzero polynomials, exact, via the fraction-free
    /// subresultant scheme.
    pub fn resultant(&self, other: &Self) -> Result<BigInt> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::InvalidArgument(
                "resultant of the zero polynomial".into(),
            ));
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut s = BigInt::one();
        if a.deg() < b.deg() {
            if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
                s = -s;
            }
            std::mem::swap(&mut a, &mut b);
        }
        let ca = a.content();
        let cb = b.content();
        a = a.scalar_div_exact(&ca);
        b = b.scalar_div_exact(&cb);
        let mut t = ca.pow(b.deg() as u32) * cb.pow(a.deg() as u32);
        t *= s;
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        let mut sign = BigInt::one();
        while b.deg() > 0 {
            let delta = (a.deg() - b.deg()) as u32;
            if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
                sign = -sign;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            let divisor = &g * h.pow(delta);
            b = if r.is_zero() {
                IntPoly::zero()
            } else {
                r.scalar_div_exact(&divisor)
            };
            if b.is_zero() {
                // positive-degree common factor
                return Ok(BigInt::zero());
            }
            g = a.leading();
            h = if delta == 0 {
                h
            } else {
                let num = g.pow(delta);
                let (q, rem) = num.div_rem(&h.pow(delta - 1));
                assert!(rem.is_zero());
                q
            };
        }
        // b is a nonzero constant now
        let da = a.deg() as u32;
        let hfin = if da == 0 {
            h
        } else {
            let num = b.leading().pow(da);
            let (q, rem) = num.div_rem(&h.pow(da - 1));
            assert!(rem.is_zero());
            q
        };
        Ok(t * sign * hfin)
    }

    /// disc(f) = (-1)^(d(d-1)/2) * res(f, f') / lc(f).
    pub fn discriminant(&self) -> Result<BigInt> {
        let d = self
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::InvalidArgument("discriminant of a constant".into()))?;
        let r = self.resultant(&self.derivative())?;
        let (q, rem) = r.div_rem(&self.leading());
        assert!(rem.is_zero(), "resultant not divisible by leading coefficient");
        let sign = if (d * (d - 1) / 2) % 2 == 0 { 1 } else { -1 };
        Ok(q * BigInt::from(sign))
    }

    /// gcd over Z (primitive PRS), normalized with positive leading
    /// coefficient, content included.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.abs_normalized();
        }
        if other.is_zero() {
            return self.abs_normalized();
        }
        let cont = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.abs_normalized().scale(&cont)
    }

    fn abs_normalized(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        if self.leading().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// f / gcd(f, f'): same roots, all simple.
    pub fn squarefree_part(&self) -> Self {
        assert!(!self.is_zero());
        if self.deg() == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        if g.deg() == 0 {
            return self.primitive_part();
        }
        // exact by Gauss's lemma after making the divisor's sign canonical
        let pp = self.primitive_part();
        let gp = g.primitive_part();
        poly_div_exact(&pp, &gp)
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && (self.deg() == 0 || self.gcd(&self.derivative()).deg() == 0)
    }
}

/// Exact division of polynomials over Z (panics if not exact).
pub(crate) fn poly_div_exact(num: &IntPoly, den: &IntPoly) -> IntPoly {
    assert!(!den.is_zero());
    if num.is_zero() {
        return IntPoly::zero();
    }
    let dn = num.deg();
    let dd = den.deg();
    assert!(dn >= dd);
    let mut r = num.coeffs().to_vec();
    let mut q = vec![BigInt::zero(); dn - dd + 1];
    let lc = den.leading();
    for i in (dd..=dn).rev() {
        let c = std::mem::replace(&mut r[i], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        let (qc, rem) = c.div_rem(&lc);
        assert!(rem.is_zero(), "inexact polynomial division");
        for (j, dc) in den.coeffs().iter().take(dd).enumerate() {
            r[i - dd + j] -= &qc * dc;
        }
        q[i - dd] = qc;
    }
    assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
    IntPoly::new(q)
}
