//! Step-by-step replay of the divisibility argument over `Z`.
//!
//! Over `K = Q(zeta_N)` the module `M` is restricted to `Q`: coordinates in
//! `K^k` are flattened to `Q^(k phi(N))`, and the lattice
//! `N = Z[zeta] H_Z x` is spanned by `zeta^a rho(x'_t) x`. Every `Q`-linear map
//! is then checked against a `Z`-basis of `N` obtained from the Hermite
//! normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::{frobenius_certificate, lattice_basis_hnf, weak_form_check};
use crate::error::{Error, Result};
use crate::hopf::{transform_tensor, Element, HopfData};
use crate::integrals::nu_tensor;
use crate::linalg::{rank_of, Matrix};
use crate::scalars::{euler_phi, FieldScalar, SubringSpec};
use crate::wedderburn::{simple_module_matrices, BlockData};

/// Everything established by a successful replay.
#[derive(Clone, Debug)]
pub struct ReplayReport {
    pub n: usize,
    pub degree: usize,
    /// Index `s` of the module coordinate vector `e_s` used as generator.
    pub generator_index: usize,
    /// Common denominator cleared before the HNF.
    pub lattice_scale: BigInt,
    /// HNF rows of the scaled lattice; the actual basis is these divided by the scale.
    pub lattice_basis: Vec<Vec<BigInt>>,
    /// `rho(x'_t)` over `K` in the form basis.
    pub rho: Vec<Matrix>,
    /// `rho(x'_t)` as integer matrices in the lattice basis.
    pub rho_integral: Vec<Matrix>,
    /// `chi(x'_t)`, all in `Z[zeta_N]`.
    pub characters: Vec<FieldScalar>,
    /// `sum nu'^{ij} chi(x'_i) rho(x'_j)`.
    pub identity_lhs: Matrix,
    pub quotient: BigRational,
    pub certificate_agrees: bool,
}

impl fmt::Display for ReplayReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree k = {}, n = {}", self.degree, self.n)?;
        writeln!(
            f,
            "lattice: rank {}, generator e_{}, scale {}",
            self.lattice_basis.len(),
            self.generator_index,
            self.lattice_scale
        )?;
        writeln!(f, "step 2: rho and chi integral on the lattice")?;
        writeln!(f, "step 3: sum nu'^ij chi(x'_i) rho(x'_j) =")?;
        write!(f, "{}", self.identity_lhs)?;
        writeln!(
            f,
            "step 4: n/k = {} in Z, certificate {}",
            self.quotient,
            if self.certificate_agrees { "agrees" } else { "disagrees" }
        )
    }
}

fn fail(step: usize, detail: impl Into<String>) -> Error {
    Error::ReplayFailed {
        step,
        detail: detail.into(),
    }
}

fn lifted_coords(a: &FieldScalar, conductor: u32) -> Vec<BigRational> {
    a.lift_to(conductor).expect("module entries live in the algebra's field").coeffs().to_vec()
}

fn flatten(v: &[FieldScalar], conductor: u32) -> Vec<BigRational> {
    v.iter().flat_map(|a| lifted_coords(a, conductor)).collect()
}

/// The `Q`-linear map of a `K`-matrix on flattened coordinates.
fn restrict_scalars(a: &Matrix, conductor: u32) -> Matrix {
    let d = euler_phi(conductor);
    let k = a.rows();
    let mut out = Matrix::zeros(k * d, k * d);
    for r in 0..k {
        for s in 0..k {
            if a[(r, s)].is_zero() {
                continue;
            }
            let m = a[(r, s)].lift_to(conductor).expect("same field").multiplication_matrix();
            for (i, row) in m.into_iter().enumerate() {
                for (j, v) in row.into_iter().enumerate() {
                    out[(r * d + i, s * d + j)] = FieldScalar::rational(v);
                }
            }
        }
    }
    out
}

fn is_integral(m: &Matrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| SubringSpec::Integers.contains(&m[(i, j)]).unwrap_or(false)))
}

/// Replays the argument that `n / k in Z` for the given block, starting from the
/// `Z`-form with basis the columns of `b`.
pub fn theorem2_replay(h: &HopfData, lambda: &Element, b: &Matrix, block: &BlockData) -> Result<ReplayReport> {
    let n = h.dim();
    let k = block.degree;
    let conductor = h.conductor();
    let d = euler_phi(conductor);

    // step 0: the basis must span a weak Z-form
    let form = weak_form_check(h, lambda, b, &SubringSpec::Integers)?;
    if !form.passed {
        return Err(fail(0, "basis does not span a weak Z-form"));
    }
    let c = b.inverse()?;
    let nu = transform_tensor(&nu_tensor(h, lambda)?, &c);
    let base = simple_module_matrices(h, block)?;
    let rho: Vec<Matrix> = (0..n)
        .map(|t| {
            (0..n).fold(Matrix::zeros(k, k), |acc, i| {
                if b[(i, t)].is_zero() {
                    acc
                } else {
                    acc.add(&base[i].scale(&b[(i, t)]))
                }
            })
        })
        .collect();
    let characters: Vec<FieldScalar> = rho.iter().map(Matrix::trace).collect();

    // step 1: N = Z[zeta] H_Z x and a Z-basis of it
    let generator_index = (0..k)
        .find(|&s| {
            let orbit: Vec<Vec<FieldScalar>> = rho.iter().map(|m| m.column(s)).collect();
            rank_of(&orbit) == k
        })
        .ok_or_else(|| fail(1, "no standard basis vector generates the module"))?;
    let zetas: Vec<FieldScalar> = (0..d as i64).map(|a| FieldScalar::zeta_pow(conductor, a)).collect();
    let mut gens: Vec<Vec<BigRational>> = Vec::with_capacity(n * d);
    for m in &rho {
        let col = m.column(generator_index);
        for z in &zetas {
            let v: Vec<FieldScalar> = col.iter().map(|a| a * z).collect();
            gens.push(flatten(&v, conductor));
        }
    }
    let scale = gens
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let scaled: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|v| v.iter().map(|q| (q * BigRational::from_integer(scale.clone())).to_integer()).collect())
        .collect();
    let lattice_basis = lattice_basis_hnf(scaled).map_err(|e| fail(1, e.to_string()))?;
    let scale_q = FieldScalar::rational(BigRational::from_integer(scale.clone()));
    let p_cols: Vec<Vec<FieldScalar>> = lattice_basis
        .iter()
        .map(|row| row.iter().map(|v| &FieldScalar::rational(BigRational::from_integer(v.clone())) / &scale_q).collect())
        .collect();
    let p = Matrix::from_columns(&p_cols, k * d);
    let p_inv = p.inverse().map_err(|_| fail(1, "lattice basis is singular"))?;
    let in_lattice = |a: &Matrix| &(&p_inv * &restrict_scalars(a, conductor)) * &p;

    // step 2: integrality of the action, of zeta and of the characters
    let rho_integral: Vec<Matrix> = rho.iter().map(&in_lattice).collect();
    if let Some(t) = rho_integral.iter().position(|m| !is_integral(m)) {
        return Err(fail(2, format!("rho(x'_{t}) is not integral on the lattice")));
    }
    let zeta_k = Matrix::identity(k).scale(&FieldScalar::zeta(conductor));
    if !is_integral(&in_lattice(&zeta_k)) {
        return Err(fail(2, "lattice is not stable under zeta"));
    }
    let ring = SubringSpec::CyclotomicIntegers(conductor);
    if let Some(t) = characters.iter().position(|x| !ring.contains(x).unwrap_or(false)) {
        return Err(fail(2, format!("chi(x'_{t}) = {} is not integral", characters[t])));
    }

    // step 3: the exact identity, over K and on the lattice
    let mut identity_lhs = Matrix::zeros(k, k);
    let mut lattice_lhs = Matrix::zeros(k * d, k * d);
    for (i, j, v) in nu.nonzero() {
        if characters[i].is_zero() {
            continue;
        }
        let coeff = v * &characters[i];
        identity_lhs = identity_lhs.add(&rho[j].scale(&coeff));
        let chi_lattice = in_lattice(&Matrix::identity(k).scale(&characters[i]));
        if !is_integral(&chi_lattice) {
            return Err(fail(3, format!("chi(x'_{i}) is not integral on the lattice")));
        }
        lattice_lhs = lattice_lhs.add(&(&chi_lattice * &rho_integral[j]).scale(v));
    }
    let quotient = BigRational::new(BigInt::from(n), BigInt::from(k));
    let q = FieldScalar::rational(quotient.clone());
    if identity_lhs != Matrix::identity(k).scale(&q) {
        return Err(fail(3, format!("left side is not {quotient} * Id")));
    }
    if !is_integral(&lattice_lhs) || lattice_lhs != Matrix::identity(k * d).scale(&q) {
        return Err(fail(3, "identity fails on the lattice"));
    }

    // step 4: n/k is a diagonal entry of an integer matrix
    if !quotient.is_integer() {
        return Err(fail(4, format!("{quotient} is not an integer")));
    }
    let cert = frobenius_certificate(n as u64, &[k as u64], &[SubringSpec::Integers])?;
    if !cert.overall {
        return Err(fail(4, "certificate disagrees"));
    }
    Ok(ReplayReport {
        n,
        degree: k,
        generator_index,
        lattice_scale: scale,
        lattice_basis,
        rho,
        rho_integral,
        characters,
        identity_lhs,
        quotient,
        certificate_agrees: true,
    })
}
