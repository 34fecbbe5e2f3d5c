//! Weak integral forms, Frobenius-type divisibility certificates, lattice
//! bases and the replay of the divisibility argument over `Z`.

mod hnf;
mod replay;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{transform_tensor, Element, HopfData};
use crate::integrals::nu_tensor;
use crate::linalg::Matrix;
use crate::scalars::{is_prime, FieldScalar, SubringSpec};

pub use hnf::lattice_basis_hnf;
pub use replay::{theorem2_replay, ReplayReport};

/// Outcome of a weak-form check: every offending coefficient is listed.
#[derive(Clone, Debug, Serialize)]
pub struct FormReport {
    #[serde(skip)]
    pub basis: Matrix,
    #[serde(serialize_with = "ser_display")]
    pub subring: SubringSpec,
    /// `(i, j, k, m'_{ij}^k)` outside the subring.
    #[serde(serialize_with = "ser_mul")]
    pub mul_violations: Vec<(usize, usize, usize, FieldScalar)>,
    /// `(i, j, nu'^{ij})` outside the subring.
    #[serde(serialize_with = "ser_nu")]
    pub nu_violations: Vec<(usize, usize, FieldScalar)>,
    pub passed: bool,
}

fn ser_display<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn ser_mul<S: serde::Serializer>(
    v: &[(usize, usize, usize, FieldScalar)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(i, j, k, c)| (i, j, k, c.to_string())))
}

fn ser_nu<S: serde::Serializer>(v: &[(usize, usize, FieldScalar)], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(i, j, c)| (i, j, c.to_string())))
}

impl fmt::Display for FormReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "weak {}-form: {}",
            self.subring,
            if self.passed { "PASS" } else { "FAIL" }
        )?;
        for (i, j, k, c) in &self.mul_violations {
            writeln!(f, "  m[{i}][{j}][{k}] = {c}")?;
        }
        for (i, j, c) in &self.nu_violations {
            writeln!(f, "  nu[{i}][{j}] = {c}")?;
        }
        Ok(())
    }
}

// A coefficient that does not even lie in the ambient field of `r` is not in `r`.
fn member(r: &SubringSpec, x: &FieldScalar) -> bool {
    r.contains(x).unwrap_or(false)
}

/// Checks whether the `R`-span of the columns of `b` is closed under
/// multiplication and contains `nu`.
pub fn weak_form_check(h: &HopfData, lambda: &Element, b: &Matrix, r: &SubringSpec) -> Result<FormReport> {
    let hb = h.change_of_basis(b)?;
    let c = b.inverse()?;
    let nu = transform_tensor(&nu_tensor(h, lambda)?, &c);
    let n = h.dim();
    let mut mul_violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = hb.mul_coeff(i, j, k);
                if !v.is_zero() && !member(r, v) {
                    mul_violations.push((i, j, k, v.clone()));
                }
            }
        }
    }
    let mut nu_violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = nu.get(i, j);
            if !v.is_zero() && !member(r, v) {
                nu_violations.push((i, j, v.clone()));
            }
        }
    }
    let passed = mul_violations.is_empty() && nu_violations.is_empty();
    Ok(FormReport {
        basis: b.clone(),
        subring: *r,
        mul_violations,
        nu_violations,
        passed,
    })
}

/// Divisibility verdicts `n / k in R` for every degree and subring.
#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusCertificate {
    pub n: u64,
    pub degrees: Vec<u64>,
    #[serde(serialize_with = "ser_display_vec")]
    pub subrings: Vec<SubringSpec>,
    #[serde(serialize_with = "ser_display_vec")]
    pub quotients: Vec<BigRational>,
    /// `verdicts[d][r]`: whether `n / degrees[d]` lies in `subrings[r]`.
    pub verdicts: Vec<Vec<bool>>,
    pub overall: bool,
}

fn ser_display_vec<T: fmt::Display, S: serde::Serializer>(
    v: &[T],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl fmt::Display for FrobeniusCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, k) in self.degrees.iter().enumerate() {
            let cells: Vec<String> = self
                .subrings
                .iter()
                .zip(&self.verdicts[d])
                .map(|(r, &ok)| format!("{r}:{}", if ok { "yes" } else { "no" }))
                .collect();
            writeln!(f, "{}/{} = {}  {}", self.n, k, self.quotients[d], cells.join(" "))?;
        }
        write!(f, "overall: {}", if self.overall { "PASS" } else { "FAIL" })
    }
}

/// Checks `n / k in R` for every degree `k` and every subring `R`.
pub fn frobenius_certificate(n: u64, degrees: &[u64], subrings: &[SubringSpec]) -> Result<FrobeniusCertificate> {
    if degrees.contains(&0) {
        return Err(Error::InvalidInput("degree 0 is not allowed".into()));
    }
    let quotients: Vec<BigRational> = degrees
        .iter()
        .map(|&k| BigRational::new(BigInt::from(n), BigInt::from(k)))
        .collect();
    let mut verdicts = Vec::with_capacity(degrees.len());
    for q in &quotients {
        let x = FieldScalar::rational(q.clone());
        verdicts.push(subrings.iter().map(|r| member(r, &x)).collect::<Vec<bool>>());
    }
    let overall = verdicts.iter().flatten().all(|&v| v);
    Ok(FrobeniusCertificate {
        n,
        degrees: degrees.to_vec(),
        subrings: subrings.to_vec(),
        quotients,
        verdicts,
        overall,
    })
}

/// `Z_(p)` for every prime `p <= n`.
pub fn localizations_up_to(n: u64) -> Vec<SubringSpec> {
    (2..=n).filter(|&p| is_prime(p)).map(SubringSpec::LocalizedAt).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{builtin_corpus, group_algebra, CayleyTable};
    use crate::integrals::find_integral;
    use crate::wedderburn::decompose_center;

    fn zp(p: u64) -> SubringSpec {
        SubringSpec::LocalizedAt(p)
    }

    #[test]
    fn group_basis_is_a_z_form() {
        for entry in builtin_corpus() {
            let h = &entry.algebra;
            if entry.name.ends_with("-dual") {
                continue;
            }
            let lambda = find_integral(h).unwrap();
            let rep = weak_form_check(h, &lambda, &Matrix::identity(h.dim()), &SubringSpec::Integers).unwrap();
            assert!(rep.passed, "{}", entry.name);
        }
    }

    #[test]
    fn scaled_basis_fails_at_three_only() {
        let h = group_algebra(&CayleyTable::cyclic(3), 1).unwrap();
        let lambda = find_integral(&h).unwrap();
        let mut b = Matrix::identity(3);
        b[(1, 1)] = FieldScalar::from_ratio(1, 3);
        let z = weak_form_check(&h, &lambda, &b, &SubringSpec::Integers).unwrap();
        assert!(!z.passed);
        assert!(z.mul_violations.iter().any(|(_, _, _, c)| *c == FieldScalar::from_ratio(1, 9)));
        assert!(!weak_form_check(&h, &lambda, &b, &zp(3)).unwrap().passed);
        assert!(weak_form_check(&h, &lambda, &b, &zp(2)).unwrap().passed);
    }

    #[test]
    fn dual_group_idempotent_basis_is_a_z_form() {
        let entry = builtin_corpus().into_iter().find(|e| e.name == "S3-dual").unwrap();
        let h = &entry.algebra;
        let lambda = find_integral(h).unwrap();
        let rep = weak_form_check(h, &lambda, &Matrix::identity(6), &SubringSpec::Integers).unwrap();
        assert!(rep.passed);
    }

    #[test]
    fn certificates() {
        let c = frobenius_certificate(6, &[1, 1, 2], &[SubringSpec::Integers]).unwrap();
        assert!(c.overall);
        let c = frobenius_certificate(12, &[5], &[SubringSpec::Integers]).unwrap();
        assert!(!c.overall);
        let c = frobenius_certificate(12, &[5], &[zp(2), zp(3), zp(5)]).unwrap();
        assert_eq!(c.verdicts, vec![vec![true, true, false]]);
        assert!(frobenius_certificate(6, &[0], &[SubringSpec::Integers]).is_err());
    }

    #[test]
    fn local_verdicts_match_global_on_the_corpus() {
        for entry in builtin_corpus() {
            let h = &entry.algebra;
            let n = h.dim() as u64;
            let degrees: Vec<u64> = decompose_center(h).unwrap().iter().map(|b| b.degree as u64).collect();
            let global = frobenius_certificate(n, &degrees, &[SubringSpec::Integers]).unwrap();
            let local = frobenius_certificate(n, &degrees, &localizations_up_to(n)).unwrap();
            assert!(global.overall, "{}", entry.name);
            assert_eq!(global.overall, local.overall);
        }
        for (n, k) in [(12u64, 5u64), (10, 4), (9, 2), (8, 3)] {
            let global = frobenius_certificate(n, &[k], &[SubringSpec::Integers]).unwrap();
            let local = frobenius_certificate(n, &[k], &localizations_up_to(n)).unwrap();
            assert_eq!(global.overall, local.overall, "{n}/{k}");
        }
    }
}
