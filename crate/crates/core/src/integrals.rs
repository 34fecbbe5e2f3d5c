//! The normalized integral `Lambda` (with `eps(Lambda) = n`) and the tensor
//! `nu = sum Lambda_1 (x) S(Lambda_2)`.

use crate::error::{Error, Result};
use crate::hopf::{Element, HopfData, TensorSquare};
use crate::linalg::Matrix;
use crate::scalars::FieldScalar;

/// Basis of the space of left integrals `{L : h L = eps(h) L for all h}`.
pub fn left_integral_space(h: &HopfData) -> Vec<Element> {
    let n = h.dim();
    // Stack (L_{x_i} - eps(x_i) Id) for every basis element.
    let mut system = Matrix::zeros(n * n, n);
    for i in 0..n {
        let li = h.left_mult_matrix(&h.basis(i));
        for r in 0..n {
            for c in 0..n {
                let mut v = li[(r, c)].clone();
                if r == c {
                    v -= &h.counit()[i];
                }
                system[(i * n + r, c)] = v;
            }
        }
    }
    system.nullspace().into_iter().map(Element::new).collect()
}

/// The two-sided integral normalized so that `eps(Lambda) = dim H`.
///
/// Also verifies that it is a right integral and that `S(Lambda) = Lambda`.
pub fn find_integral(h: &HopfData) -> Result<Element> {
    let space = left_integral_space(h);
    if space.len() != 1 {
        return Err(Error::MalformedHopfAlgebra(format!(
            "space of left integrals has dimension {}",
            space.len()
        )));
    }
    let raw = &space[0];
    let e = h.counit_apply(raw)?;
    if e.is_zero() {
        return Err(Error::NotSemisimple);
    }
    let n = FieldScalar::from_int(h.dim() as i64);
    let lambda = raw.scale(&(&n / &e));
    for i in 0..h.dim() {
        let right = h.multiply(&lambda, &h.basis(i))?;
        if right != lambda.scale(&h.counit()[i]) {
            return Err(Error::MalformedHopfAlgebra(format!(
                "integral is not a right integral (fails at x_{i})"
            )));
        }
    }
    if h.antipode_apply(&lambda)? != lambda {
        return Err(Error::MalformedHopfAlgebra("S(Lambda) != Lambda".into()));
    }
    Ok(lambda)
}

/// `nu = (Id (x) S)(Delta(Lambda))`.
pub fn nu_tensor(h: &HopfData, lambda: &Element) -> Result<TensorSquare> {
    Ok(h.tensor_id_antipode(&h.comultiply(lambda)?))
}
