use super::{transform_element, transform_tensor, Element, HopfData};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::FieldScalar;

/// Re-expresses `h` in the basis `x'_j = sum_i B[i][j] x_i` (columns of `B`).
pub(super) fn change_of_basis(h: &HopfData, b: &Matrix) -> Result<HopfData> {
    let n = h.dim();
    if b.rows() != n || b.cols() != n {
        return Err(Error::DimMismatch {
            expected: n,
            got: if b.rows() != n { b.rows() } else { b.cols() },
        });
    }
    if b.determinant().is_zero() {
        return Err(Error::SingularBasis);
    }
    let c = b.inverse()?;
    let new_basis: Vec<Element> = (0..n).map(|j| Element::new(b.column(j))).collect();

    let mut mul = vec![FieldScalar::zero(); n * n * n];
    for a in 0..n {
        for bb in 0..n {
            let prod = h.mul_unchecked(&new_basis[a], &new_basis[bb]);
            for (k, v) in transform_element(&prod, &c).into_coeffs().into_iter().enumerate() {
                mul[(a * n + bb) * n + k] = v;
            }
        }
    }

    let mut comul = vec![FieldScalar::zero(); n * n * n];
    for a in 0..n {
        let t = transform_tensor(&h.comultiply(&new_basis[a])?, &c);
        for (p, q, v) in t.nonzero() {
            comul[(a * n + p) * n + q] = v.clone();
        }
    }

    let antipode = &(&b.transpose() * h.antipode_matrix()) * &c.transpose();
    let counit = b.transpose().apply(h.counit());
    let unit = c.apply(h.unit().coeffs());
    HopfData::new(n, h.conductor(), mul, comul, antipode, counit, unit)
}
