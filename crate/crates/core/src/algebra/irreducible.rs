//! Irreducibility over Z for small monic polynomials: factor mod a good
//! prime, Hensel-lift to above the Landau-Mignotte bound, and try every
//! recombination of the modular factors.

use crate::algebra::{factor_mod_l, IntPoly};
use crate::error::{Error, Result};
use crate::util::primes_up_to;
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

const MAX_DEGREE: usize = 16;

/// Exact irreducibility test over Z for monic f of degree <= 16.
pub fn is_irreducible_over_z(f: &IntPoly) -> Result<bool> {
    let d = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::InvalidArgument("need a nonconstant polynomial".into()))?;
    if !f.is_monic() {
        return Err(Error::InvalidArgument("irreducibility test requires monic input".into()));
    }
    if d > MAX_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "degree {d} exceeds the supported cap {MAX_DEGREE}"
        )));
    }
    if d == 1 {
        return Ok(true);
    }
    if !f.coeff(0).is_zero() && f.coeff(0).is_zero() {
        unreachable!()
    }
    if f.coeff(0).is_zero() {
        // x divides
        return Ok(false);
    }
    if !f.is_squarefree() {
        return Ok(false);
    }

    // a prime where the reduction stays squarefree
    let disc = f.discriminant()?;
    let mut bound = 100u64;
    let l = loop {
        let found = primes_up_to(bound)
            .into_iter()
            .find(|&l| l != 2 && (&disc % BigInt::from(l)) != BigInt::zero());
        if let Some(l) = found {
            break l;
        }
        bound *= 4;
        if bound > 1_000_000 {
            return Err(Error::Internal("no squarefree reduction prime found".into()));
        }
    };

    let modular = factor_mod_l(f, l)?;
    let r = modular.factors.len();
    if r == 1 {
        return Ok(true);
    }

    // Landau-Mignotte: a monic divisor of degree m <= d-1 has coefficients
    // bounded by 2^m * ||f||_2.
    let norm2 = {
        let sum: BigInt = f.coeffs().iter().map(|c| c * c).sum();
        sum.sqrt() + 1
    };
    let coeff_bound: BigInt = (BigInt::one() << (d - 1)) * &norm2;
    let target: BigInt = (&coeff_bound << 1) + 1;
    let mut modulus = BigInt::from(l);
    let mut k = 1u32;
    while modulus < target {
        modulus *= BigInt::from(l);
        k += 1;
    }
    let _ = k;

    let base: Vec<ModPoly> = modular
        .factors
        .iter()
        .map(|(p, _)| ModPoly::from_residue(p, &modulus))
        .collect();
    let lifted = hensel_lift_list(f, &base, l, &modulus);

    // recombination: any proper subset whose balanced product divides f
    let full: u32 = 1 << r;
    for mask in 1..full - 1 {
        let size = mask.count_ones() as usize;
        if 2 * size > r {
            continue;
        }
        if 2 * size == r && mask & 1 == 0 {
            continue; // complements give the same split
        }
        let mut prod = ModPoly::one(&modulus);
        for (i, g) in lifted.iter().enumerate() {
            if mask >> i & 1 == 1 {
                prod = prod.mul(g);
            }
        }
        let cand = prod.balanced();
        if cand.coeffs().iter().any(|c| c.abs() > coeff_bound) {
            continue;
        }
        if f.divisible_by_monic(&cand) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Polynomial over Z/M with BigInt modulus, canonical coefficients in
/// [0, M); only what Hensel lifting needs.
#[derive(Clone, Debug)]
struct ModPoly {
    modulus: BigInt,
    coeffs: Vec<BigInt>,
}

impl ModPoly {
    fn new(modulus: &BigInt, mut coeffs: Vec<BigInt>) -> Self {
        for c in &mut coeffs {
            *c = c.mod_floor(modulus);
        }
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        ModPoly { modulus: modulus.clone(), coeffs }
    }

    fn from_residue(p: &crate::algebra::ResiduePoly, modulus: &BigInt) -> Self {
        ModPoly::new(
            modulus,
            p.coeffs().iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    fn from_int(f: &IntPoly, modulus: &BigInt) -> Self {
        ModPoly::new(modulus, f.coeffs().to_vec())
    }

    fn one(modulus: &BigInt) -> Self {
        ModPoly::new(modulus, vec![BigInt::one()])
    }

    fn zero(modulus: &BigInt) -> Self {
        ModPoly::new(modulus, vec![])
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn deg(&self) -> usize {
        assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        ModPoly::new(
            &self.modulus,
            (0..n).map(|i| self.coeff(i) + o.coeff(i)).collect(),
        )
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        ModPoly::new(
            &self.modulus,
            (0..n).map(|i| self.coeff(i) - o.coeff(i)).collect(),
        )
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return ModPoly::zero(&self.modulus);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ModPoly::new(&self.modulus, out)
    }

    /// Division with remainder by a monic divisor.
    fn div_rem_monic(&self, d: &Self) -> (Self, Self) {
        let dd = d.deg();
        debug_assert!(d.coeff(dd).is_one());
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (ModPoly::zero(&self.modulus), self.clone());
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = std::mem::replace(&mut r[i], BigInt::zero()).mod_floor(&self.modulus);
            if c.is_zero() {
                continue;
            }
            for j in 0..dd {
                let delta = (&c * &d.coeffs[j]).mod_floor(&self.modulus);
                r[i - dd + j] = (&r[i - dd + j] - delta).mod_floor(&self.modulus);
            }
            q[i - dd] = c;
        }
        r.truncate(dd);
        (ModPoly::new(&self.modulus, q), ModPoly::new(&self.modulus, r))
    }

    fn reduce_to(&self, modulus: &BigInt) -> Self {
        ModPoly::new(modulus, self.coeffs.clone())
    }

    /// Representative with coefficients in (-M/2, M/2].
    fn balanced(&self) -> IntPoly {
        let half = &self.modulus >> 1;
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    if c > &half {
                        c - &self.modulus
                    } else {
                        c.clone()
                    }
                })
                .collect(),
        )
    }
}

/// Extended Euclid over F_l for the initial Bezout pair.
fn bezout_mod_l(g: &ModPoly, h: &ModPoly, l: u64) -> (ModPoly, ModPoly) {
    let m = BigInt::from(l);
    let gl = g.reduce_to(&m);
    let hl = h.reduce_to(&m);
    // classical extended Euclid over the field F_l
    let (mut r0, mut r1) = (gl, hl);
    let (mut s0, mut s1) = (ModPoly::one(&m), ModPoly::zero(&m));
    let (mut t0, mut t1) = (ModPoly::zero(&m), ModPoly::one(&m));
    while !r1.is_zero() {
        let lead = r1.coeff(r1.deg());
        let inv = mod_inverse(&lead, &m);
        let r1m = r1.scale(&inv);
        // make divisor monic for div_rem, then undo on the quotient
        let (q, rem) = r0.div_rem_monic(&r1m);
        let q = q.scale(&inv);
        let rr = rem;
        r0 = r1;
        r1 = rr;
        let ns = s0.sub(&q.mul(&s1));
        s0 = s1;
        s1 = ns;
        let nt = t0.sub(&q.mul(&t1));
        t0 = t1;
        t1 = nt;
    }
    // r0 = gcd (a unit since g, h coprime mod l); normalize to 1
    assert_eq!(r0.deg(), 0, "modular factors not coprime");
    let inv = mod_inverse(&r0.coeff(0), &m);
    (s0.scale(&inv), t0.scale(&inv))
}

impl ModPoly {
    fn scale(&self, s: &BigInt) -> Self {
        ModPoly::new(
            &self.modulus,
            self.coeffs.iter().map(|c| c * s).collect(),
        )
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "non-unit in mod_inverse");
    e.x.mod_floor(m)
}

/// Quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m)
/// to the same congruences mod m^2 (von zur Gathen-Gerhard 15.10).
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &ModPoly,
    g: &ModPoly,
    h: &ModPoly,
    s: &ModPoly,
    t: &ModPoly,
    m2: &BigInt,
) -> (ModPoly, ModPoly, ModPoly, ModPoly) {
    let f = f.reduce_to(m2);
    let g = g.reduce_to(m2);
    let h = h.reduce_to(m2);
    let s = s.reduce_to(m2);
    let t = t.reduce_to(m2);
    let e = f.sub(&g.mul(&h));
    let (q, r) = s.mul(&e).div_rem_monic(&h);
    let gstar = g.add(&t.mul(&e)).add(&q.mul(&g));
    let hstar = h.add(&r);
    let b = s.mul(&gstar).add(&t.mul(&hstar)).sub(&ModPoly::one(m2));
    let (c, d) = s.mul(&b).div_rem_monic(&hstar);
    let sstar = s.sub(&d);
    let tstar = t.sub(&t.mul(&b)).sub(&c.mul(&gstar));
    (gstar, hstar, sstar, tstar)
}

/// Lift the coprime monic factorization f = prod(base) mod l to the full
/// modulus, peeling one factor at a time.
fn hensel_lift_list(f: &IntPoly, base: &[ModPoly], l: u64, modulus: &BigInt) -> Vec<ModPoly> {
    if base.len() == 1 {
        return vec![ModPoly::from_int(f, modulus)];
    }
    let g0 = base[0].clone();
    let mut h0 = ModPoly::one(modulus);
    for b in &base[1..] {
        h0 = h0.mul(b);
    }
    let (s, t) = bezout_mod_l(&g0, &h0, l);
    let mut m = BigInt::from(l);
    let mut g = g0.reduce_to(&m);
    let mut h = h0.reduce_to(&m);
    let mut ss = s;
    let mut tt = t;
    let ftarget = ModPoly::from_int(f, modulus);
    while &m < modulus {
        let m2 = (&m * &m).min(modulus.clone());
        // lifting modulus must be a power of l dividing `modulus`
        let m2 = {
            let mut acc = BigInt::from(l);
            while acc < m2 {
                acc *= BigInt::from(l);
            }
            acc
        };
        let (gn, hn, sn, tn) = hensel_step(&ftarget.reduce_to(&m2), &g, &h, &ss, &tt, &m2);
        g = gn;
        h = hn;
        ss = sn;
        tt = tn;
        m = m2;
    }
    let mut out = vec![g.reduce_to(modulus)];
    let h_int = h.reduce_to(modulus).balanced();
    out.extend(hensel_lift_list(&h_int, &base[1..], l, modulus));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_cases() {
        assert!(!is_irreducible_over_z(&IntPoly::from_i64(&[4, 5, 1])).unwrap()); // (x+1)(x+4)
        assert!(is_irreducible_over_z(&IntPoly::from_i64(&[5, -1, 1])).unwrap()); // disc -19
        assert!(is_irreducible_over_z(&IntPoly::from_i64(&[7, 1])).unwrap());
        assert!(is_irreducible_over_z(&IntPoly::from_i64(&[1, 2, 1])).is_ok()); // (x+1)^2 squarefree gate
        assert!(!is_irreducible_over_z(&IntPoly::from_i64(&[1, 2, 1])).unwrap());
        assert!(is_irreducible_over_z(&IntPoly::from_i64(&[2])).is_err());
        assert!(is_irreducible_over_z(&IntPoly::from_i64(&[1, 0, 2])).is_err()); // not monic
    }

    /// Brute-force search over all monic integer factor pairs with
    /// Landau-Mignotte coefficient bounds; the independent oracle.
    fn oracle_irreducible_deg4(f: &IntPoly) -> bool {
        assert_eq!(f.deg(), 4);
        let norm2 = {
            let s: BigInt = f.coeffs().iter().map(|c| c * c).sum();
            s.sqrt() + 1
        };
        let b2: i64 = {
            use num_traits::ToPrimitive;
            let b: BigInt = BigInt::from(4) * &norm2;
            b.to_i64().unwrap()
        };
        // degree-1 divisors x - d with d | f(0)
        use num_traits::ToPrimitive;
        let c0 = f.coeff(0).to_i64().unwrap();
        for d in -b2..=b2 {
            if d != 0 && c0 % d == 0 {
                let cand = IntPoly::from_i64(&[-d, 1]);
                if f.divisible_by_monic(&cand) {
                    return false;
                }
            }
        }
        // degree-2 divisors x^2 + bx + c
        for b in -b2..=b2 {
            for c in -b2..=b2 {
                let cand = IntPoly::from_i64(&[c, b, 1]);
                if f.divisible_by_monic(&cand) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn quartic_weil_polynomial_matches_bruteforce_oracle() {
        // x^4 + x^3 + 2x^2 + 5x + 25 (g=2, p=5 Weil polynomial)
        let f = IntPoly::from_i64(&[25, 5, 2, 1, 1]);
        let fast = is_irreducible_over_z(&f).unwrap();
        let slow = oracle_irreducible_deg4(&f);
        assert_eq!(fast, slow);
        assert!(fast);
    }

    #[test]
    fn agrees_with_bruteforce_oracle_on_random_quartics() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..40 {
            let c: Vec<i64> = vec![
                rng.gen_range(-12..=12),
                rng.gen_range(-8..=8),
                rng.gen_range(-8..=8),
                rng.gen_range(-4..=4),
                1,
            ];
            let f = IntPoly::from_i64(&c);
            if f.coeff(0).is_zero() || !f.is_squarefree() {
                continue;
            }
            assert_eq!(
                is_irreducible_over_z(&f).unwrap(),
                oracle_irreducible_deg4(&f),
                "f={f:?}"
            );
        }
    }

    #[test]
    fn products_of_irreducibles_detected() {
        // (x^2+1)(x^2+x+3)
        let f = IntPoly::from_i64(&[1, 0, 1]).mul(&IntPoly::from_i64(&[3, 1, 1]));
        assert!(!is_irreducible_over_z(&f).unwrap());
        // (x^2 - x + 5)(x^2 + x + 5): both irreducible, product reducible
        let f = IntPoly::from_i64(&[5, -1, 1]).mul(&IntPoly::from_i64(&[5, 1, 1]));
        assert!(!is_irreducible_over_z(&f).unwrap());
    }
}
