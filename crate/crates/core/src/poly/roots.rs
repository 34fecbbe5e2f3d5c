//! Splitting squarefree polynomials over `Q(zeta_N)` with Trager's norm method.
//!
//! For a shift `s`, the norm `N_s(x) = Norm(f(x - s*zeta))` has rational
//! coefficients. When it is squarefree, each of its irreducible factors `h`
//! over `Q` gives an irreducible factor `gcd(f(x), h(x + s*zeta))` of `f` over
//! the cyclotomic field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{factor_over_integers, Poly};
use crate::scalars::{euler_phi, FieldScalar};

/// Irreducible factors of a polynomial over `Q(zeta_N)`, split by degree.
#[derive(Clone, Debug, Default)]
pub struct Splitting {
    /// Roots in the field (from the linear factors), in discovery order.
    pub roots: Vec<FieldScalar>,
    /// Monic irreducible factors of degree at least two.
    pub nonlinear: Vec<Poly>,
}

impl Splitting {
    pub fn splits_completely(&self) -> bool {
        self.nonlinear.is_empty()
    }
}

/// Newton interpolation through `(i, values[i])`, `i = 0..len`.
fn interpolate(values: &[BigRational]) -> Vec<BigRational> {
    let n = values.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = BigRational::from_integer(BigInt::from(level));
            dd[i] = (&dd[i] - &dd[i - 1]) / denom;
        }
    }
    // Expand sum dd[k] * prod_{j<k} (x - j).
    let mut coeffs = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::one()];
    for (k, c) in dd.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            coeffs[i] += c * b;
        }
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b;
            next[i] -= b * BigRational::from_integer(BigInt::from(k));
        }
        basis = next;
    }
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

fn to_primitive_integer(c: &[BigRational]) -> Vec<BigInt> {
    let l = c.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    c.iter().map(|q| (q * BigRational::from_integer(l.clone())).to_integer()).collect()
}

fn factor_rational(f: &Poly) -> Vec<Poly> {
    let q = f.rational_coeffs().expect("rational polynomial");
    factor_over_integers(&to_primitive_integer(&q))
        .into_iter()
        .map(|g| {
            Poly::new(g.into_iter().map(FieldScalar::from).collect()).monic()
        })
        .collect()
}

/// Factors a squarefree polynomial over `Q(zeta_conductor)`.
///
/// Every coefficient of `f` must live in a subfield of `Q(zeta_conductor)`.
pub fn split_over_cyclotomic(f: &Poly, conductor: u32) -> Splitting {
    let deg = f.degree().expect("nonzero polynomial");
    let mut out = Splitting::default();
    if deg == 0 {
        return out;
    }
    let f = f.monic();
    let phi = euler_phi(conductor);
    let factors = if phi == 1 {
        factor_rational(&f)
    } else {
        let zeta = FieldScalar::zeta(conductor);
        let mut found = None;
        for step in 0i64.. {
            // 0, 1, -1, 2, -2, ...
            let s = if step % 2 == 1 { (step + 1) / 2 } else { -step / 2 };
            let shift = &zeta * &FieldScalar::from_int(s);
            let values: Vec<BigRational> = (0..=deg * phi)
                .map(|x0| f.eval(&(FieldScalar::from_int(x0 as i64) - &shift)).norm())
                .collect();
            let norm = Poly::from_rationals(&interpolate(&values));
            if !norm.is_squarefree() {
                continue;
            }
            let mut parts = Vec::new();
            for h in factor_rational(&norm) {
                let g = f.gcd(&h.shift(&shift));
                if g.degree().unwrap_or(0) > 0 {
                    parts.push(g);
                }
            }
            found = Some(parts);
            break;
        }
        found.expect("some shift gives a squarefree norm")
    };
    for g in factors {
        if g.degree() == Some(1) {
            out.roots.push(-&g.coeffs()[0]);
        } else {
            out.nonlinear.push(g);
        }
    }
    out
}
