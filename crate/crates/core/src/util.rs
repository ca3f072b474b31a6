//! Small shared helpers: primes, modular arithmetic, quadratic residues.

/// Primes up to and including `bound`, by sieve.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `a^e mod m` for `m < 2^32`.
pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    debug_assert!(m < (1 << 32));
    a %= m;
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % m;
        }
        a = a * a % m;
        e >>= 1;
    }
    acc
}

/// Inverse of `a` mod `m` (gcd(a, m) must be 1), via extended Euclid.
pub fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "inv_mod of non-unit {a} mod {m}");
    t.rem_euclid(m as i128) as u64
}

/// Legendre symbol of `a` mod odd prime `l`, with the convention
/// `legendre(0) = 0`.
pub fn legendre(a: i64, l: u64) -> i32 {
    let r = a.rem_euclid(l as i64) as u64;
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (l - 1) / 2, l) == 1 {
        1
    } else {
        -1
    }
}

/// Table `t[x] = legendre(x, l)` for `x in [0, l)`.
pub fn legendre_table(l: u64) -> Vec<i8> {
    let mut t = vec![-1i8; l as usize];
    t[0] = 0;
    let mut x = 1u64;
    while x <= l / 2 {
        t[(x * x % l) as usize] = 1;
        x += 1;
    }
    t
}

/// Floor of the square root of a non-negative integer.
pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64 + 1;
    while x * x > n {
        x -= 1;
    }
    x
}

/// l-adic valuation of a nonzero integer.
pub fn ord_l(mut n: i128, l: u64) -> u32 {
    assert!(n != 0);
    let l = l as i128;
    let mut v = 0;
    while n % l == 0 {
        n /= l;
        v += 1;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_and_legendre() {
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
        assert_eq!(legendre(14, 7), 0);
        let t = legendre_table(11);
        for x in 0..11 {
            assert_eq!(t[x as usize] as i32, legendre(x, 11));
        }
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(pow_mod(2, 10, 1000), 24);
        for a in 1..96u64 {
            if a % 97 != 0 {
                assert_eq!(a * inv_mod(a, 97) % 97, 1);
            }
        }
        assert_eq!(isqrt(28), 5);
        assert_eq!(isqrt(25), 5);
        assert_eq!(ord_l(-27, 3), 3);
    }
}
