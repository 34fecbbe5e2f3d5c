//! Row-style Hermite normal form of integer lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Basis of the lattice spanned by `generators` in Hermite normal form.
///
/// The rows are upper triangular with positive pivots, and every entry above
/// a pivot is reduced into `[0, pivot)`. The lattice must have full rank in
/// `Z^k`, `k` being the common length of the generators.
pub fn lattice_basis_hnf(generators: Vec<Vec<BigInt>>) -> Result<Vec<Vec<BigInt>>> {
    let k = match generators.first() {
        Some(g) => g.len(),
        None => return Err(Error::RankDeficient { rank: 0, expected: 0 }),
    };
    if let Some(bad) = generators.iter().find(|g| g.len() != k) {
        return Err(Error::DimMismatch {
            expected: k,
            got: bad.len(),
        });
    }
    let mut m = generators;
    let rows = m.len();
    let mut r = 0;
    for c in 0..k {
        if r == rows {
            break;
        }
        // fold every lower entry of column c into the pivot row by unimodular 2x2 steps
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let a = m[r][c].clone();
            let b = m[i][c].clone();
            let eg = a.extended_gcd(&b);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let (ag, bg) = (&a / &g, &b / &g);
            for col in c..k {
                let (x, y) = (m[r][col].clone(), m[i][col].clone());
                m[r][col] = &s * &x + &t * &y;
                m[i][col] = &ag * &y - &bg * &x;
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for v in m[r][c..].iter_mut() {
                *v = -v.clone();
            }
        }
        for i in 0..r {
            let q = m[i][c].div_floor(&m[r][c]);
            if !q.is_zero() {
                for col in c..k {
                    let d = &q * &m[r][col];
                    m[i][col] -= d;
                }
            }
        }
        r += 1;
    }
    if r < k {
        return Err(Error::RankDeficient { rank: r, expected: k });
    }
    m.truncate(r);
    Ok(m)
}
