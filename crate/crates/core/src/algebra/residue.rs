//! Polynomials over Z/m and complete factorization over prime fields
//! (squarefree + distinct-degree + equal-degree splitting).

use crate::algebra::IntPoly;
use crate::error::{Error, Result};
use crate::util::inv_mod;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Default seed for the equal-degree splitting RNG; fixed so runs are
/// bit-reproducible, overridable through [`factor_mod_l_seeded`].
pub const DEFAULT_FACTOR_SEED: u64 = 0x5eed_f00d;

/// Dense polynomial over Z/m, coefficients in [0, m), lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResiduePoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl fmt::Debug for ResiduePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0 (mod {})", self.modulus);
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}x"),
                _ => format!("{c}x^{i}"),
            })
            .collect();
        write!(f, "{} (mod {})", terms.join(" + "), self.modulus)
    }
}

impl ResiduePoly {
    pub fn new(modulus: u64, mut coeffs: Vec<u64>) -> Self {
        assert!(modulus > 1 && modulus < (1 << 32));
        for c in &mut coeffs {
            *c %= modulus;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ResiduePoly { modulus, coeffs }
    }

    pub fn from_int_poly(f: &IntPoly, modulus: u64) -> Self {
        let m = BigInt::from(modulus);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| {
                let r = c % &m;
                let r = if r < BigInt::from(0) { r + &m } else { r };
                r.to_u64().unwrap()
            })
            .collect();
        ResiduePoly::new(modulus, coeffs)
    }

    pub fn zero(modulus: u64) -> Self {
        ResiduePoly::new(modulus, vec![])
    }

    pub fn one(modulus: u64) -> Self {
        ResiduePoly::new(modulus, vec![1])
    }

    pub fn x(modulus: u64) -> Self {
        ResiduePoly::new(modulus, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("deg of zero polynomial")
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().expect("leading of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading() == 1
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let m = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        ResiduePoly::new(m, (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % m).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let m = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        ResiduePoly::new(
            m,
            (0..n)
                .map(|i| (self.coeff(i) + m - other.coeff(i)) % m)
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let m = self.modulus;
        if self.is_zero() || other.is_zero() {
            return ResiduePoly::zero(m);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % m;
            }
        }
        ResiduePoly::new(m, out)
    }

    pub fn scale(&self, s: u64) -> Self {
        let m = self.modulus;
        ResiduePoly::new(m, self.coeffs.iter().map(|&c| c * (s % m) % m).collect())
    }

    pub fn eval(&self, x: u64) -> u64 {
        let m = self.modulus;
        let x = x % m;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * x + c) % m;
        }
        acc
    }

    /// Make monic; requires the leading coefficient to be a unit.
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.modulus))
    }

    /// Division with remainder; the divisor's leading coefficient must be
    /// a unit mod m.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        debug_assert_eq!(self.modulus, d.modulus);
        let m = self.modulus;
        assert!(!d.is_zero());
        let dd = d.deg();
        let lcinv = inv_mod(d.leading(), m);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (ResiduePoly::zero(m), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = r[i] % m;
            if c == 0 {
                continue;
            }
            let qc = c * lcinv % m;
            for (j, &dc) in d.coeffs.iter().enumerate().take(dd) {
                let sub = qc * dc % m;
                r[i - dd + j] = (r[i - dd + j] + m - sub) % m;
            }
            r[i] = 0;
            q[i - dd] = qc;
        }
        r.truncate(dd);
        (ResiduePoly::new(m, q), ResiduePoly::new(m, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd over a prime field.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// self^e mod g (prime modulus).
    pub fn pow_mod(&self, mut e: u64, g: &Self) -> Self {
        let mut base = self.rem(g);
        let mut acc = ResiduePoly::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(g);
            }
            base = base.mul(&base).rem(g);
            e >>= 1;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let m = self.modulus;
        if self.coeffs.len() <= 1 {
            return ResiduePoly::zero(m);
        }
        ResiduePoly::new(
            m,
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * ((i as u64 + 1) % m) % m)
                .collect(),
        )
    }
}

/// Multiset of monic irreducible factors over a prime field. The product
/// of the factors (with multiplicity) times the recorded unit equals the
/// input mod l.
#[derive(Clone, Debug)]
pub struct FactorMultiset {
    pub modulus: u64,
    pub unit: u64,
    pub factors: Vec<(ResiduePoly, u32)>,
}

impl FactorMultiset {
    /// Multiset of factor degrees, repeated with multiplicity.
    pub fn degree_profile(&self) -> Vec<usize> {
        let mut degs = Vec::new();
        for (f, mult) in &self.factors {
            for _ in 0..*mult {
                degs.push(f.deg());
            }
        }
        degs.sort_unstable();
        degs
    }

    /// Number of distinct irreducible factors of each degree d, as
    /// (degree, count) pairs (counting multiplicity separately is the
    /// caller's business; here each distinct factor counts once).
    pub fn distinct_degree_counts(&self) -> Vec<(usize, usize)> {
        let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
        for (f, _) in &self.factors {
            *counts.entry(f.deg()).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    pub fn product(&self) -> ResiduePoly {
        let mut acc = ResiduePoly::new(self.modulus, vec![self.unit]);
        for (f, mult) in &self.factors {
            for _ in 0..*mult {
                acc = acc.mul(f);
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }
}

/// Complete factorization of `f` mod the prime `l`, deterministic for a
/// fixed RNG seed.
pub fn factor_mod_l(f: &IntPoly, l: u64) -> Result<FactorMultiset> {
    factor_mod_l_seeded(f, l, DEFAULT_FACTOR_SEED)
}

pub fn factor_mod_l_seeded(f: &IntPoly, l: u64, seed: u64) -> Result<FactorMultiset> {
    let fr = ResiduePoly::from_int_poly(f, l);
    factor_residue_poly(&fr, seed)
}

pub fn factor_residue_poly(fr: &ResiduePoly, seed: u64) -> Result<FactorMultiset> {
    let l = fr.modulus();
    if fr.is_zero() {
        return Err(Error::DegenerateInput(format!(
            "polynomial vanishes identically mod {l}"
        )));
    }
    let unit = if fr.deg() == 0 { fr.coeff(0) } else { fr.leading() };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(ResiduePoly, u32)> = Vec::new();
    for (g, mult) in squarefree_decomposition(&fr.monic()) {
        for irred in factor_squarefree(&g, &mut rng) {
            factors.push((irred, mult));
        }
    }
    factors.sort_by(|a, b| (a.0.deg(), a.0.coeffs()).cmp(&(b.0.deg(), b.0.coeffs())));
    Ok(FactorMultiset { modulus: l, unit, factors })
}

/// Squarefree decomposition in characteristic l: returns (g_i, m_i) with
/// f = prod g_i^{m_i}, the g_i squarefree and pairwise coprime.
fn squarefree_decomposition(f: &ResiduePoly) -> Vec<(ResiduePoly, u32)> {
    let l = f.modulus();
    let mut out: Vec<(ResiduePoly, u32)> = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = h(x^l); take the l-th root (Frobenius is identity on F_l)
        let mut root = Vec::new();
        for i in (0..f.coeffs().len()).step_by(l as usize) {
            root.push(f.coeff(i));
        }
        let h = ResiduePoly::new(l, root);
        for (g, m) in squarefree_decomposition(&h) {
            out.push((g, m * l as u32));
        }
        return out;
    }
    let mut c = f.gcd(&deriv);
    let mut w = f.div_rem(&c).0.monic();
    let mut i = 1u32;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0.monic();
        if z.deg() > 0 {
            out.push((z, i));
        }
        w = y;
        c = c.div_rem(&w).0.monic();
        i += 1;
    }
    if c.deg() > 0 {
        // remaining part is an l-th power
        let mut root = Vec::new();
        for j in (0..c.coeffs().len()).step_by(l as usize) {
            root.push(c.coeff(j));
        }
        let h = ResiduePoly::new(l, root);
        for (g, m) in squarefree_decomposition(&h) {
            out.push((g, m * l as u32));
        }
    }
    out
}

/// Factor a monic squarefree polynomial over F_l into irreducibles:
/// distinct-degree stage, then equal-degree (Cantor-Zassenhaus) splits.
fn factor_squarefree(f: &ResiduePoly, rng: &mut ChaCha8Rng) -> Vec<ResiduePoly> {
    let l = f.modulus();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = ResiduePoly::x(l);
    let mut frob = x.pow_mod(l, &rest); // x^(l^d) mod rest, incrementally
    let mut d = 1usize;
    while rest.deg() >= 2 * d {
        let g = frob.sub(&x).gcd(&rest);
        if g.deg() > 0 {
            equal_degree_split(&g, d, rng, &mut out);
            rest = rest.div_rem(&g).0.monic();
            frob = frob.rem(&rest);
        }
        d += 1;
        if rest.deg() == 0 {
            break;
        }
        frob = frob.pow_mod(l, &rest);
    }
    if rest.deg() > 0 {
        out.push(rest);
    }
    out
}

/// Split a product of distinct irreducibles all of degree d.
fn equal_degree_split(
    f: &ResiduePoly,
    d: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<ResiduePoly>,
) {
    let l = f.modulus();
    if f.deg() == d {
        out.push(f.monic());
        return;
    }
    loop {
        let a = ResiduePoly::new(
            l,
            (0..f.deg()).map(|_| rng.gen_range(0..l)).collect::<Vec<_>>(),
        );
        if a.degree().is_none() {
            continue;
        }
        let g = if l == 2 {
            // trace map: a + a^2 + a^4 + ... + a^(2^(d-1)) mod f
            let mut t = a.clone().rem(f);
            let mut sq = a.rem(f);
            for _ in 1..d {
                sq = sq.mul(&sq).rem(f);
                t = t.add(&sq);
            }
            t.gcd(f)
        } else {
            // a^((l^d - 1)/2) - 1 splits the factors by quadratic residuosity
            let e = (u64::pow(l, d as u32) - 1) / 2;
            let b = pow_mod_big_exponent(&a, e, f);
            b.sub(&ResiduePoly::one(l)).gcd(f)
        };
        if g.deg() > 0 && g.deg() < f.deg() {
            let h = f.div_rem(&g).0.monic();
            equal_degree_split(&g, d, rng, out);
            equal_degree_split(&h, d, rng, out);
            return;
        }
    }
}

/// base^e mod g where e may exceed u64 range is not needed here (l^d with
/// d <= 16 and l < 2^32 stays within u128); we chunk through u128.
fn pow_mod_big_exponent(base: &ResiduePoly, e: u64, g: &ResiduePoly) -> ResiduePoly {
    base.pow_mod(e, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(l: u64, c: &[i64]) -> ResiduePoly {
        ResiduePoly::new(l, c.iter().map(|&x| x.rem_euclid(l as i64) as u64).collect())
    }

    /// Exhaustive root/quadratic-search factorization over F_l, the
    /// oracle for small-degree cases.
    fn oracle_factor_quadratic(f: &ResiduePoly) -> Vec<(ResiduePoly, u32)> {
        let l = f.modulus();
        assert_eq!(f.deg(), 2);
        let fm = f.monic();
        let mut roots = Vec::new();
        for r in 0..l {
            if fm.eval(r) == 0 {
                roots.push(r);
            }
        }
        match roots.len() {
            0 => vec![(fm, 1)],
            1 => vec![(poly(l, &[-(roots[0] as i64), 1]), 2)],
            _ => vec![
                (poly(l, &[-(roots[0] as i64), 1]), 1),
                (poly(l, &[-(roots[1] as i64), 1]), 1),
            ],
        }
    }

    #[test]
    fn factor_examples_from_quadratics() {
        // x^2+5x+4 mod 3 = (x+1)^2
        let f = IntPoly::from_i64(&[4, 5, 1]);
        let fac = factor_mod_l(&f, 3).unwrap();
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0].1, 2);
        assert_eq!(fac.factors[0].0, poly(3, &[1, 1]));
        let oracle = oracle_factor_quadratic(&ResiduePoly::from_int_poly(&f, 3));
        assert_eq!(fac.factors, oracle);

        // x^2+1 mod 5 = (x+2)(x+3)
        let f = IntPoly::from_i64(&[1, 0, 1]);
        let fac = factor_mod_l(&f, 5).unwrap();
        let mut got: Vec<_> = fac.factors.iter().map(|(p, _)| p.clone()).collect();
        got.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        assert_eq!(got, vec![poly(5, &[2, 1]), poly(5, &[3, 1])]);

        // x^2+1 mod 3 irreducible
        let fac = factor_mod_l(&f, 3).unwrap();
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0].0.deg(), 2);
        assert_eq!(fac.factors[0].1, 1);
    }

    #[test]
    fn zero_mod_l_is_degenerate() {
        let f = IntPoly::from_i64(&[3, 6, 9]);
        assert!(factor_mod_l(&f, 3).is_err());
    }

    #[test]
    fn refactored_product_matches_input() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let primes = [2u64, 3, 5, 7, 11, 13];
        let mut done = 0;
        while done < 1000 {
            let l = primes[rng.gen_range(0..primes.len())];
            let d = rng.gen_range(1..=8usize);
            let coeffs: Vec<i64> = (0..=d).map(|_| rng.gen_range(-50..=50)).collect();
            let f = IntPoly::from_i64(&coeffs);
            let fr = ResiduePoly::from_int_poly(&f, l);
            if fr.is_zero() {
                continue;
            }
            let fac = factor_mod_l(&f, l).unwrap();
            assert_eq!(fac.product(), fr, "l={l} f={f:?}");
            for (p, _) in &fac.factors {
                assert!(p.is_monic());
            }
            done += 1;
        }
    }

    #[test]
    fn factorization_handles_multiplicity_divisible_by_char() {
        // (x+1)^3 mod 3 has derivative zero cases folded in
        let f = IntPoly::from_i64(&[1, 3, 3, 1]);
        let fac = factor_mod_l(&f, 3).unwrap();
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0].1, 3);
        assert_eq!(fac.product(), ResiduePoly::from_int_poly(&f, 3));
    }

    #[test]
    fn deterministic_given_seed() {
        let f = IntPoly::from_i64(&[3, 1, 4, 1, 5, 9, 2, 6, 1]);
        let a = factor_mod_l_seeded(&f, 13, 99).unwrap();
        let b = factor_mod_l_seeded(&f, 13, 99).unwrap();
        assert_eq!(a.factors, b.factors);
    }
}
