//! Floating-point root finding (Aberth-Ehrlich), used only for numeric
//! cross-checks and the archimedean quantities.

use crate::algebra::IntPoly;
use num_complex::Complex64;
use num_traits::ToPrimitive;

/// All complex roots of a nonzero polynomial, by simultaneous
/// Aberth-Ehrlich iteration. Accuracy is adequate for degree <= 16 with
/// the moderate coefficients this crate produces.
pub fn complex_roots(f: &IntPoly) -> Vec<Complex64> {
    let d = f.deg();
    if d == 0 {
        return vec![];
    }
    let c: Vec<f64> = f.coeffs().iter().map(|x| x.to_f64().unwrap()).collect();
    let lead = c[d];
    let monic: Vec<f64> = c.iter().map(|x| x / lead).collect();

    // initial guesses on a circle of the Cauchy-bound radius
    let bound = 1.0
        + monic[..d]
            .iter()
            .fold(0.0f64, |m, x| m.max(x.abs()));
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * (k as f64 + 0.35) / d as f64;
            Complex64::from_polar(bound * 0.7, ang)
        })
        .collect();

    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for k in (0..=d).rev() {
            dp = dp * x + p;
            p = p * x + monic[k];
        }
        (p, dp)
    };

    for _ in 0..200 {
        let mut moved = 0.0f64;
        for i in 0..d {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let newton = if dp.norm() == 0.0 {
                Complex64::new(1e-12, 1e-12)
            } else {
                p / dp
            };
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..d {
                if j != i {
                    let diff = z[i] - z[j];
                    if diff.norm() > 1e-300 {
                        s += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * s;
            let delta = if denom.norm() < 1e-300 { newton } else { newton / denom };
            z[i] -= delta;
            moved = moved.max(delta.norm());
        }
        if moved < 1e-14 * bound.max(1.0) {
            break;
        }
    }
    // Newton polish
    for zi in z.iter_mut() {
        for _ in 0..5 {
            let (p, dp) = eval(*zi);
            if dp.norm() > 0.0 {
                *zi -= p / dp;
            }
        }
    }
    z
}

/// Real roots of a polynomial whose roots are all real (e.g. the totally
/// real companion polynomials), sorted ascending.
pub fn real_roots_numeric(f: &IntPoly) -> Vec<f64> {
    let mut roots: Vec<f64> = complex_roots(f).iter().map(|z| z.re).collect();
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_simple_polynomials() {
        let f = IntPoly::from_i64(&[-2, 0, 1]); //
        let mut r = real_roots_numeric(&f);
        r.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((r[0] + 2f64.sqrt()).abs() < 1e-9);
        assert!((r[1] - 2f64.sqrt()).abs() < 1e-9);

        // (x^2+1)(x-3)
        let f = IntPoly::from_i64(&[-3, 1, -3, 1]);
        let roots = complex_roots(&f);
        let mut found_i = false;
        let mut found_3 = false;
        for z in roots {
            if (z - Complex64::new(0.0, 1.0)).norm() < 1e-8
                || (z - Complex64::new(0.0, -1.0)).norm() < 1e-8
            {
                found_i = true;
            }
            if (z - Complex64::new(3.0, 0.0)).norm() < 1e-8 {
                found_3 = true;
            }
        }
        assert!(found_i && found_3);
    }
}
