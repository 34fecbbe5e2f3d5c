//! Hopf algebras given by dense structure-constant tensors.
//!
//! With basis `x_0, ..., x_{n-1}`:
//!
//! - `mul[i][j][k]` is `m_{ij}^k`, so `x_i x_j = sum_k m_{ij}^k x_k`;
//! - `comul[i][j][k]` is `Delta_i^{jk}`, so `Delta(x_i) = sum Delta_i^{jk} x_j (x) x_k`;
//! - row `i` of `antipode` holds the coordinates of `S(x_i)`;
//! - `counit[i] = eps(x_i)` and `unit` holds the coordinates of `1`.

mod axioms;
mod basis;
mod json;

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::FieldScalar;

pub use axioms::{AxiomReport, Witness};
pub use json::HopfFile;

/// A vector in `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    coeffs: Vec<FieldScalar>,
}

impl Element {
    pub fn new(coeffs: Vec<FieldScalar>) -> Self {
        Element { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Element::new(vec![FieldScalar::zero(); n])
    }

    /// The basis vector `x_i`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut e = Element::zero(n);
        e.coeffs[i] = FieldScalar::one();
        e
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Element::new(v.iter().map(|&x| FieldScalar::from_int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[FieldScalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldScalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldScalar::is_zero)
    }

    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.dim(), other.dim());
        Element::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Element) -> Element {
        assert_eq!(self.dim(), other.dim());
        Element::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &FieldScalar) -> Element {
        Element::new(self.coeffs.iter().map(|c| c * s).collect())
    }
}

impl std::ops::Index<usize> for Element {
    type Output = FieldScalar;
    fn index(&self, i: usize) -> &FieldScalar {
        &self.coeffs[i]
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A vector in `H (x) H`; entry `(i, j)` is the coefficient of `x_i (x) x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSquare {
    coeffs: Matrix,
}

impl TensorSquare {
    pub fn zero(n: usize) -> Self {
        TensorSquare {
            coeffs: Matrix::zeros(n, n),
        }
    }

    pub fn from_matrix(m: Matrix) -> Self {
        assert!(m.is_square());
        TensorSquare { coeffs: m }
    }

    /// `a (x) b`.
    pub fn pure(a: &Element, b: &Element) -> Self {
        let n = a.dim();
        let mut t = TensorSquare::zero(n);
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                t.coeffs[(i, j)] = &a[i] * &b[j];
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldScalar {
        &self.coeffs[(i, j)]
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn add(&self, other: &TensorSquare) -> TensorSquare {
        TensorSquare {
            coeffs: self.coeffs.add(&other.coeffs),
        }
    }

    pub fn scale(&self, s: &FieldScalar) -> TensorSquare {
        TensorSquare {
            coeffs: self.coeffs.scale(s),
        }
    }

    /// Nonzero entries as `(i, j, coefficient)`.
    pub fn nonzero(&self) -> Vec<(usize, usize, &FieldScalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let c = &self.coeffs[(i, j)];
                if !c.is_zero() {
                    out.push((i, j, c));
                }
            }
        }
        out
    }

    /// `(f (x) g)(t)` for linear functionals given by their values on the basis.
    pub fn pair(&self, f: &[FieldScalar], g: &[FieldScalar]) -> FieldScalar {
        self.nonzero()
            .into_iter()
            .map(|(i, j, c)| c * &f[i] * &g[j])
            .sum()
    }

    /// `(f (x) Id)(t)`.
    pub fn contract_left(&self, f: &[FieldScalar]) -> Element {
        let n = self.dim();
        let mut out = vec![FieldScalar::zero(); n];
        for (i, j, c) in self.nonzero() {
            if !f[i].is_zero() {
                out[j] += &(c * &f[i]);
            }
        }
        Element::new(out)
    }

    /// `(Id (x) g)(t)`.
    pub fn contract_right(&self, g: &[FieldScalar]) -> Element {
        let n = self.dim();
        let mut out = vec![FieldScalar::zero(); n];
        for (i, j, c) in self.nonzero() {
            if !g[j].is_zero() {
                out[i] += &(c * &g[j]);
            }
        }
        Element::new(out)
    }
}

impl fmt::Display for TensorSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .nonzero()
            .into_iter()
            .map(|(i, j, c)| format!("{c}*x{i}(x)x{j}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Structure constants of a finite-dimensional Hopf algebra.
#[derive(Clone, Debug)]
pub struct HopfData {
    dim: usize,
    conductor: u32,
    mul: Vec<FieldScalar>,
    comul: Vec<FieldScalar>,
    antipode: Matrix,
    counit: Vec<FieldScalar>,
    unit: Vec<FieldScalar>,
    // nonzero (k, coefficient) per product x_i x_j, indexed by i * n + j
    mul_nz: Vec<Vec<(usize, FieldScalar)>>,
    // nonzero (j, k, coefficient) per Delta(x_i)
    comul_nz: Vec<Vec<(usize, usize, FieldScalar)>>,
}

impl PartialEq for HopfData {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.mul == other.mul
            && self.comul == other.comul
            && self.antipode == other.antipode
            && self.counit == other.counit
            && self.unit == other.unit
    }
}

impl Eq for HopfData {}

impl HopfData {
    /// Assembles structure constants. Tensors are flat with index `(i * n + j) * n + k`.
    pub fn new(
        dim: usize,
        conductor: u32,
        mul: Vec<FieldScalar>,
        comul: Vec<FieldScalar>,
        antipode: Matrix,
        counit: Vec<FieldScalar>,
        unit: Vec<FieldScalar>,
    ) -> Result<Self> {
        let n = dim;
        if n == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        if conductor == 0 {
            return Err(Error::InvalidInput("conductor must be positive".into()));
        }
        for (len, want) in [
            (mul.len(), n * n * n),
            (comul.len(), n * n * n),
            (counit.len(), n),
            (unit.len(), n),
            (antipode.rows(), n),
            (antipode.cols(), n),
        ] {
            if len != want {
                return Err(Error::DimMismatch {
                    expected: want,
                    got: len,
                });
            }
        }
        for s in mul
            .iter()
            .chain(&comul)
            .chain(&counit)
            .chain(&unit)
            .chain((0..n).flat_map(|i| antipode.row(i)))
        {
            s.lift_to(conductor)?;
        }
        let mul_nz = (0..n * n)
            .map(|ij| {
                (0..n)
                    .filter(|&k| !mul[ij * n + k].is_zero())
                    .map(|k| (k, mul[ij * n + k].clone()))
                    .collect()
            })
            .collect();
        let comul_nz = (0..n)
            .map(|i| {
                let mut v = Vec::new();
                for j in 0..n {
                    for k in 0..n {
                        let c = &comul[(i * n + j) * n + k];
                        if !c.is_zero() {
                            v.push((j, k, c.clone()));
                        }
                    }
                }
                v
            })
            .collect();
        Ok(HopfData {
            dim,
            conductor,
            mul,
            comul,
            antipode,
            counit,
            unit,
            mul_nz,
            comul_nz,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// `m_{ij}^k`.
    pub fn mul_coeff(&self, i: usize, j: usize, k: usize) -> &FieldScalar {
        &self.mul[(i * self.dim + j) * self.dim + k]
    }

    /// `Delta_i^{jk}`.
    pub fn comul_coeff(&self, i: usize, j: usize, k: usize) -> &FieldScalar {
        &self.comul[(i * self.dim + j) * self.dim + k]
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    pub fn counit(&self) -> &[FieldScalar] {
        &self.counit
    }

    pub fn unit(&self) -> Element {
        Element::new(self.unit.clone())
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.dim, i)
    }

    pub(crate) fn mul_tensor(&self) -> &[FieldScalar] {
        &self.mul
    }

    pub(crate) fn comul_tensor(&self) -> &[FieldScalar] {
        &self.comul
    }

    /// Returns a copy with one multiplication constant replaced.
    pub fn with_mul_coeff(&self, i: usize, j: usize, k: usize, value: FieldScalar) -> Result<HopfData> {
        let mut mul = self.mul.clone();
        mul[(i * self.dim + j) * self.dim + k] = value;
        HopfData::new(
            self.dim,
            self.conductor,
            mul,
            self.comul.clone(),
            self.antipode.clone(),
            self.counit.clone(),
            self.unit.clone(),
        )
    }

    fn check_dim(&self, a: &Element) -> Result<()> {
        if a.dim() != self.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                got: a.dim(),
            });
        }
        Ok(())
    }

    pub(crate) fn mul_basis(&self, i: usize, j: usize) -> &[(usize, FieldScalar)] {
        &self.mul_nz[i * self.dim + j]
    }

    pub(crate) fn comul_basis(&self, i: usize) -> &[(usize, usize, FieldScalar)] {
        &self.comul_nz[i]
    }

    /// `c^k = sum a^i b^j m_{ij}^k`.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &Element, b: &Element) -> Element {
        let n = self.dim;
        let mut out = vec![FieldScalar::zero(); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for (k, c) in self.mul_basis(i, j) {
                    out[*k] += &(&ab * c);
                }
            }
        }
        Element::new(out)
    }

    /// `Delta(a)`.
    pub fn comultiply(&self, a: &Element) -> Result<TensorSquare> {
        self.check_dim(a)?;
        let mut t = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            if a[i].is_zero() {
                continue;
            }
            for (j, k, c) in self.comul_basis(i) {
                t[(*j, *k)] += &(&a[i] * c);
            }
        }
        Ok(TensorSquare { coeffs: t })
    }

    /// `S(a)`.
    pub fn antipode_apply(&self, a: &Element) -> Result<Element> {
        self.check_dim(a)?;
        Ok(Element::new(self.antipode.transpose().apply(a.coeffs())))
    }

    /// `eps(a)`.
    pub fn counit_apply(&self, a: &Element) -> Result<FieldScalar> {
        self.check_dim(a)?;
        Ok(a.coeffs()
            .iter()
            .zip(&self.counit)
            .filter(|(x, _)| !x.is_zero())
            .map(|(x, e)| x * e)
            .sum())
    }

    /// Product in `H (x) H`: `(x_p (x) x_q)(x_r (x) x_s) = x_p x_r (x) x_q x_s`.
    pub fn tensor_multiply(&self, a: &TensorSquare, b: &TensorSquare) -> Result<TensorSquare> {
        if a.dim() != self.dim || b.dim() != self.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                got: a.dim().min(b.dim()),
            });
        }
        let mut t = Matrix::zeros(self.dim, self.dim);
        let bn = b.nonzero();
        for (p, q, ca) in a.nonzero() {
            for (r, s, cb) in &bn {
                let coef = ca * *cb;
                for (u, m1) in self.mul_basis(p, *r) {
                    let cu = &coef * m1;
                    for (v, m2) in self.mul_basis(q, *s) {
                        t[(*u, *v)] += &(&cu * m2);
                    }
                }
            }
        }
        Ok(TensorSquare { coeffs: t })
    }

    /// `(Id (x) S)(t)`.
    pub fn tensor_id_antipode(&self, t: &TensorSquare) -> TensorSquare {
        let out = t.as_matrix() * &self.antipode;
        TensorSquare { coeffs: out }
    }

    /// `m(t)`.
    pub fn tensor_collapse(&self, t: &TensorSquare) -> Element {
        let n = self.dim;
        let mut out = vec![FieldScalar::zero(); n];
        for (i, j, c) in t.nonzero() {
            for (k, m) in self.mul_basis(i, j) {
                out[*k] += &(c * m);
            }
        }
        Element::new(out)
    }

    /// Matrix of left multiplication by `a`; column `j` holds `a * x_j`.
    pub fn left_mult_matrix(&self, a: &Element) -> Matrix {
        let cols: Vec<Vec<FieldScalar>> = (0..self.dim)
            .map(|j| self.mul_unchecked(a, &self.basis(j)).into_coeffs())
            .collect();
        Matrix::from_columns(&cols, self.dim)
    }

    /// Trace of left multiplication by `a` on `H`.
    pub fn regular_trace(&self, a: &Element) -> FieldScalar {
        let n = self.dim;
        let mut acc = FieldScalar::zero();
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                acc += &(&a[i] * self.mul_coeff(i, j, j));
            }
        }
        acc
    }

    pub fn check_axioms(&self) -> AxiomReport {
        axioms::check(self)
    }

    pub fn change_of_basis(&self, b: &Matrix) -> Result<HopfData> {
        basis::change_of_basis(self, b)
    }
}

/// Coordinates of `t` after the change of basis with inverse `c`: `C t C^T`.
pub fn transform_tensor(t: &TensorSquare, c: &Matrix) -> TensorSquare {
    TensorSquare::from_matrix(&(c * t.as_matrix()) * &c.transpose())
}

/// Coordinates of `a` after the change of basis with inverse `c`.
pub fn transform_element(a: &Element, c: &Matrix) -> Element {
    Element::new(c.apply(a.coeffs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{dual_group_algebra, group_algebra, CayleyTable};

    fn c2() -> HopfData {
        group_algebra(&CayleyTable::cyclic(2), 1).unwrap()
    }

    #[test]
    fn multiply_in_c2() {
        let h = c2();
        let (e, g) = (h.basis(0), h.basis(1));
        assert_eq!(h.multiply(&g, &g).unwrap(), e);
        assert_eq!(h.multiply(&e, &g).unwrap(), g);
        let p = Element::from_ints(&[1, 1]);
        let m = Element::from_ints(&[1, -1]);
        assert!(h.multiply(&p, &m).unwrap().is_zero());
        assert!(matches!(
            h.multiply(&p, &Element::from_ints(&[1])),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn comultiply_examples() {
        let h = c2();
        let g = h.basis(1);
        assert_eq!(h.comultiply(&g).unwrap(), TensorSquare::pure(&g, &g));
        let s = h.comultiply(&Element::from_ints(&[1, 1])).unwrap();
        let want = TensorSquare::pure(&h.basis(0), &h.basis(0)).add(&TensorSquare::pure(&g, &g));
        assert_eq!(s, want);

        // dual of C2: Delta(p_1) = p_e (x) p_e + p_g (x) p_g
        let d = dual_group_algebra(&CayleyTable::cyclic(2), 1).unwrap();
        let (pe, pg) = (d.basis(0), d.basis(1));
        let want = TensorSquare::pure(&pe, &pe).add(&TensorSquare::pure(&pg, &pg));
        assert_eq!(d.comultiply(&pe).unwrap(), want);
    }

    #[test]
    fn antipode_examples() {
        let c3 = group_algebra(&CayleyTable::cyclic(3), 3).unwrap();
        assert_eq!(c3.antipode_apply(&c3.basis(1)).unwrap(), c3.basis(2));
        let h = c2();
        let s = Element::from_ints(&[1, 1]);
        assert_eq!(h.antipode_apply(&s).unwrap(), s);
        let d = dual_group_algebra(&CayleyTable::cyclic(2), 1).unwrap();
        assert_eq!(d.antipode_apply(&d.basis(1)).unwrap(), d.basis(1));
    }

    #[test]
    fn regular_trace_of_unit_is_dimension() {
        let s3 = group_algebra(&CayleyTable::symmetric3(), 1).unwrap();
        assert_eq!(s3.regular_trace(&s3.unit()), FieldScalar::from_int(6));
        assert_eq!(s3.left_mult_matrix(&s3.unit()), Matrix::identity(6));
    }
}
