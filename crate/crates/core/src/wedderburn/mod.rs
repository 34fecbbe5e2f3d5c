//! Wedderburn decomposition of a split semisimple Hopf algebra: center,
//! primitive central idempotents, irreducible characters, the character
//! pairing defined through `nu`, and the idempotents rebuilt from characters.

mod module;

use std::cmp::Ordering;
use std::fmt;

use num_integer::Roots;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{Element, HopfData, TensorSquare};
use crate::integrals::{find_integral, nu_tensor};
use crate::linalg::{rank_of, Matrix};
use crate::poly::{split_over_cyclotomic, Poly};
use crate::scalars::FieldScalar;

pub use module::{simple_module, simple_module_matrices, SimpleModule, MODULE_SEARCH_BOUND};

/// An irreducible character, given by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub values: Vec<FieldScalar>,
    pub degree: usize,
}

impl Character {
    pub fn eval(&self, a: &Element) -> FieldScalar {
        a.coeffs()
            .iter()
            .zip(&self.values)
            .filter(|(x, _)| !x.is_zero())
            .map(|(x, v)| x * v)
            .sum()
    }
}

/// One simple block of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockData {
    pub idempotent: Element,
    pub degree: usize,
    pub character: Character,
}

/// Basis of the center, from the nullspace of `z x_i - x_i z = 0` over all `i`.
pub fn center_basis(h: &HopfData) -> Vec<Element> {
    let n = h.dim();
    let mut system = Matrix::zeros(n * n, n);
    for i in 0..n {
        let xi = h.basis(i);
        // column j: x_j x_i - x_i x_j
        for j in 0..n {
            let xj = h.basis(j);
            let d = h.mul_unchecked(&xj, &xi).sub(&h.mul_unchecked(&xi, &xj));
            for (r, v) in d.into_coeffs().into_iter().enumerate() {
                system[(i * n + r, j)] = v;
            }
        }
    }
    system.nullspace().into_iter().map(Element::new).collect()
}

/// Minimal polynomial of `z` together with its powers `1, z, ..., z^(deg-1)`.
fn minimal_polynomial(h: &HopfData, z: &Element) -> (Poly, Vec<Element>) {
    let mut powers = vec![h.unit()];
    loop {
        let next = h.mul_unchecked(powers.last().unwrap(), z);
        let cols: Vec<Vec<FieldScalar>> = powers.iter().map(|p| p.coeffs().to_vec()).collect();
        let m = Matrix::from_columns(&cols, h.dim());
        if let Some(a) = m.solve(next.coeffs()) {
            let mut coeffs: Vec<FieldScalar> = a.into_iter().map(|c| -c).collect();
            coeffs.push(FieldScalar::one());
            return (Poly::new(coeffs), powers);
        }
        powers.push(next);
    }
}

fn eval_with_powers(p: &Poly, powers: &[Element]) -> Element {
    let n = powers[0].dim();
    p.coeffs()
        .iter()
        .zip(powers)
        .fold(Element::zero(n), |acc, (c, pw)| acc.add(&pw.scale(c)))
}

/// Number of random candidates tried when looking for a primitive central element.
const PRIMITIVE_SEARCH_BOUND: usize = 500;

/// An element of the center whose minimal polynomial has degree `dim Z(H)`.
fn primitive_central_element(h: &HopfData, center: &[Element]) -> Option<(Element, Poly, Vec<Element>)> {
    let c = center.len();
    let try_one = |z: Element| {
        let (p, powers) = minimal_polynomial(h, &z);
        (p.degree() == Some(c)).then_some((z, p, powers))
    };
    for z in center {
        if let Some(found) = try_one(z.clone()) {
            return Some(found);
        }
    }
    let ramp = center.iter().enumerate().fold(Element::zero(h.dim()), |acc, (i, b)| {
        acc.add(&b.scale(&FieldScalar::from_int(i as i64 + 1)))
    });
    if let Some(found) = try_one(ramp) {
        return Some(found);
    }
    // the coefficient range must allow c distinct eigenvalues
    let r = (c as i64).max(3);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..PRIMITIVE_SEARCH_BOUND {
        let z = center.iter().fold(Element::zero(h.dim()), |acc, b| {
            acc.add(&b.scale(&FieldScalar::from_int(rng.gen_range(-r..=r))))
        });
        if let Some(found) = try_one(z) {
            return Some(found);
        }
    }
    None
}

fn cmp_elements(a: &Element, b: &Element) -> Ordering {
    for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
        match x.cmp_lex(y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

/// All primitive central idempotents with degrees and characters, sorted by
/// `(degree, idempotent coefficients)`.
///
/// Degrees are `sqrt(dim e H)` and characters `chi(x) = tr_H(e x) / k`, where
/// `tr_H` is the trace of left multiplication.
pub fn decompose_center(h: &HopfData) -> Result<Vec<BlockData>> {
    let center = center_basis(h);
    let (idempotents, nonsplit) = if center.len() == 1 {
        (vec![h.unit()], None)
    } else {
        let (_, minpoly, powers) = primitive_central_element(h, &center).ok_or_else(|| {
            Error::SplittingFieldTooSmall {
                block: 0,
                detail: "no central element with distinct eigenvalues in the field".into(),
            }
        })?;
        let split = split_over_cyclotomic(&minpoly, h.conductor());
        let roots = split.roots;
        let idem = (0..roots.len())
            .map(|j| {
                let mut num = Poly::constant(FieldScalar::one());
                let mut den = FieldScalar::one();
                for (i, r) in roots.iter().enumerate() {
                    if i != j {
                        num = num.mul(&Poly::linear(r));
                        den = &den * &(&roots[j] - r);
                    }
                }
                // Lagrange basis at the roots; the other factors of the minimal
                // polynomial must vanish too, so multiply their product in and
                // renormalize at roots[j].
                for g in &split.nonlinear {
                    num = num.mul(g);
                    den = &den * &g.eval(&roots[j]);
                }
                let lagrange = num.scale(&den.inverse().expect("distinct roots"));
                eval_with_powers(&lagrange.div_rem(&minpoly).1, &powers)
            })
            .collect::<Vec<_>>();
        (idem, split.nonlinear.first().map(|g| (roots.len(), g.clone())))
    };
    if let Some((block, g)) = nonsplit {
        return Err(Error::SplittingFieldTooSmall {
            block,
            detail: format!("central minimal polynomial has the irreducible factor {g}"),
        });
    }

    let n = h.dim();
    let mut blocks = Vec::with_capacity(idempotents.len());
    for (b, e) in idempotents.into_iter().enumerate() {
        let dim = h.regular_trace(&e);
        let square = dim
            .as_rational()
            .filter(|q| q.is_integer() && q.is_positive())
            .and_then(|q| q.to_integer().to_u64())
            .and_then(|d| {
                let k = d.sqrt();
                (k * k == d).then_some(k as usize)
            });
        let k = square.ok_or_else(|| Error::SplittingFieldTooSmall {
            block: b,
            detail: format!("block dimension {dim} is not a perfect square"),
        })?;
        let kk = FieldScalar::from_int(k as i64);
        let values = (0..n)
            .map(|j| &h.regular_trace(&h.mul_unchecked(&e, &h.basis(j))) / &kk)
            .collect();
        blocks.push(BlockData {
            idempotent: e,
            degree: k,
            character: Character { values, degree: k },
        });
    }
    blocks.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| cmp_elements(&a.idempotent, &b.idempotent)));
    Ok(blocks)
}

/// `(1/n) (chi (x) eta)(nu)`.
pub fn char_inner_product(h: &HopfData, lambda: &Element, chi: &Character, eta: &Character) -> Result<FieldScalar> {
    let nu = nu_tensor(h, lambda)?;
    Ok(nu_pairing(h, &nu, chi, eta))
}

pub(crate) fn nu_pairing(h: &HopfData, nu: &TensorSquare, chi: &Character, eta: &Character) -> FieldScalar {
    &nu.pair(&chi.values, &eta.values) / &FieldScalar::from_int(h.dim() as i64)
}

/// `z = (k/n) (chi (x) Id)(nu)`.
pub fn idempotent_from_character(h: &HopfData, nu: &TensorSquare, chi: &Character) -> Element {
    let factor = FieldScalar::from_ratio(chi.degree as i64, h.dim() as i64);
    nu.contract_left(&chi.values).scale(&factor)
}

/// Result of checking that `z` is central through the two identities
/// `sum S(h_2) z h_1 = eps(h) z` and `z h = h z` on basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralityReport {
    /// First basis index where the twisted adjoint identity fails.
    pub adjoint_failure: Option<usize>,
    /// First basis index that does not commute with `z`.
    pub commute_failure: Option<usize>,
}

impl CentralityReport {
    pub fn passed(&self) -> bool {
        self.adjoint_failure.is_none() && self.commute_failure.is_none()
    }
}

pub fn centrality_certificate(h: &HopfData, z: &Element) -> Result<CentralityReport> {
    let n = h.dim();
    if z.dim() != n {
        return Err(Error::DimMismatch { expected: n, got: z.dim() });
    }
    let adjoint_failure = (0..n).find(|&i| {
        let mut acc = Element::zero(n);
        for (j, k, c) in h.comul_basis(i) {
            let s = h.antipode_apply(&h.basis(*k)).unwrap();
            let term = h.mul_unchecked(&h.mul_unchecked(&s, z), &h.basis(*j));
            acc = acc.add(&term.scale(c));
        }
        acc != z.scale(&h.counit()[i])
    });
    let commute_failure = (0..n).find(|&i| {
        let x = h.basis(i);
        h.mul_unchecked(z, &x) != h.mul_unchecked(&x, z)
    });
    Ok(CentralityReport {
        adjoint_failure,
        commute_failure,
    })
}

/// Per-block comparison of the decomposition idempotent with the one rebuilt
/// from the block's character.
#[derive(Clone, Debug, Serialize)]
pub struct Lemma1Row {
    pub block: usize,
    pub degree: usize,
    pub matches: bool,
    pub central: bool,
    #[serde(serialize_with = "ser_display_vec")]
    pub idempotent: Vec<FieldScalar>,
    #[serde(serialize_with = "ser_display_vec")]
    pub reconstructed: Vec<FieldScalar>,
}

fn ser_display_vec<S: serde::Serializer>(v: &[FieldScalar], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl fmt::Display for Lemma1Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "block {} (degree {}): {}{}",
            self.block,
            self.degree,
            if self.matches { "MATCH" } else { "MISMATCH" },
            if self.central { "" } else { " (not central)" }
        )
    }
}

/// Rebuilds every primitive central idempotent from its character and
/// compares it with the decomposition.
pub fn lemma1_equivalence(h: &HopfData) -> Result<Vec<Lemma1Row>> {
    let lambda = find_integral(h)?;
    let nu = nu_tensor(h, &lambda)?;
    let blocks = decompose_center(h)?;
    blocks
        .iter()
        .enumerate()
        .map(|(b, block)| {
            let z = idempotent_from_character(h, &nu, &block.character);
            let central = centrality_certificate(h, &z)?.passed();
            Ok(Lemma1Row {
                block: b,
                degree: block.degree,
                matches: z == block.idempotent,
                central,
                idempotent: block.idempotent.coeffs().to_vec(),
                reconstructed: z.into_coeffs(),
            })
        })
        .collect()
}

/// The Gram matrix `<chi_i, chi_j>` over all blocks.
pub fn character_gram(h: &HopfData, nu: &TensorSquare, blocks: &[BlockData]) -> Matrix {
    let m = blocks.len();
    let mut g = Matrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            g[(i, j)] = nu_pairing(h, nu, &blocks[i].character, &blocks[j].character);
        }
    }
    g
}

/// Rank of `e H`, computed directly (independent of the trace formula).
pub fn block_dimension(h: &HopfData, e: &Element) -> usize {
    let vecs: Vec<Vec<FieldScalar>> = (0..h.dim())
        .map(|j| h.mul_unchecked(e, &h.basis(j)).into_coeffs())
        .collect();
    rank_of(&vecs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{dual_group_algebra, group_algebra, CayleyTable};

    fn s3() -> (CayleyTable, HopfData) {
        let t = CayleyTable::symmetric3();
        let h = group_algebra(&t, 1).unwrap();
        (t, h)
    }

    /// Class sums of a group, the classical basis of the center.
    fn class_sums(t: &CayleyTable) -> Vec<Element> {
        let n = t.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let mut v = vec![0i64; n];
            for x in 0..n {
                let c = t.mul(t.mul(x, g), t.inverse(x));
                if !seen[c] {
                    seen[c] = true;
                    v[c] = 1;
                }
            }
            out.push(Element::from_ints(&v));
        }
        out
    }

    #[test]
    fn center_dimensions() {
        let (t, h) = s3();
        let z = center_basis(&h);
        assert_eq!(z.len(), 3);
        // the class sums lie in (and span) the computed center
        let mut vecs: Vec<Vec<FieldScalar>> = z.iter().map(|e| e.coeffs().to_vec()).collect();
        for cs in class_sums(&t) {
            vecs.push(cs.coeffs().to_vec());
        }
        assert_eq!(rank_of(&vecs), 3);

        let d = dual_group_algebra(&CayleyTable::cyclic(2), 1).unwrap();
        assert_eq!(center_basis(&d).len(), 2);
        let q8 = group_algebra(&CayleyTable::quaternion8(), 4).unwrap();
        assert_eq!(center_basis(&q8).len(), 5);
    }

    #[test]
    fn c2_blocks() {
        let h = group_algebra(&CayleyTable::cyclic(2), 1).unwrap();
        let blocks = decompose_center(&h).unwrap();
        let half = |a, b| Element::new(vec![FieldScalar::from_ratio(a, 2), FieldScalar::from_ratio(b, 2)]);
        let got: Vec<Element> = blocks.iter().map(|b| b.idempotent.clone()).collect();
        // sorted lexicographically: (1/2, -1/2) before (1/2, 1/2)
        assert_eq!(got, vec![half(1, -1), half(1, 1)]);
        assert!(blocks.iter().all(|b| b.degree == 1));
    }

    #[test]
    fn c3_blocks_are_fourier_idempotents() {
        let h = group_algebra(&CayleyTable::cyclic(3), 3).unwrap();
        let blocks = decompose_center(&h).unwrap();
        assert_eq!(blocks.len(), 3);
        let z = FieldScalar::zeta(3);
        let third = FieldScalar::from_ratio(1, 3);
        for m in 0..3 {
            let e = Element::new((0..3).map(|j| &third * &z.pow((3 * 3 - j * m) % 3)).collect());
            assert!(blocks.iter().any(|b| b.idempotent == e), "missing Fourier idempotent {m}");
        }
    }

    #[test]
    fn s3_degrees_and_two_dim_character() {
        let (t, h) = s3();
        let blocks = decompose_center(&h).unwrap();
        let degrees: Vec<usize> = blocks.iter().map(|b| b.degree).collect();
        assert_eq!(degrees, vec![1, 1, 2]);
        let chi = &blocks[2].character;
        for g in 0..6 {
            let want = match t.element_order(g) {
                1 => 2,
                2 => 0,
                _ => -1,
            };
            assert_eq!(chi.values[g], FieldScalar::from_int(want));
        }
    }

    #[test]
    fn pairing_examples() {
        let h = group_algebra(&CayleyTable::cyclic(2), 1).unwrap();
        let lambda = find_integral(&h).unwrap();
        let blocks = decompose_center(&h).unwrap();
        let (sgn, triv) = (&blocks[0].character, &blocks[1].character);
        assert_eq!(triv.values, vec![FieldScalar::one(), FieldScalar::one()]);
        assert_eq!(char_inner_product(&h, &lambda, triv, sgn).unwrap(), FieldScalar::zero());
        assert_eq!(char_inner_product(&h, &lambda, sgn, sgn).unwrap(), FieldScalar::one());
    }

    #[test]
    fn idempotents_from_characters() {
        let h = group_algebra(&CayleyTable::cyclic(2), 1).unwrap();
        let nu = nu_tensor(&h, &find_integral(&h).unwrap()).unwrap();
        let triv = Character { values: vec![FieldScalar::one(), FieldScalar::one()], degree: 1 };
        let sgn = Character { values: vec![FieldScalar::one(), FieldScalar::from_int(-1)], degree: 1 };
        let half = |a, b| Element::new(vec![FieldScalar::from_ratio(a, 2), FieldScalar::from_ratio(b, 2)]);
        assert_eq!(idempotent_from_character(&h, &nu, &triv), half(1, 1));
        assert_eq!(idempotent_from_character(&h, &nu, &sgn), half(1, -1));

        let (t, s3) = s3();
        let nu = nu_tensor(&s3, &find_integral(&s3).unwrap()).unwrap();
        let values = (0..6)
            .map(|g| FieldScalar::from_int(match t.element_order(g) { 1 => 2, 2 => 0, _ => -1 }))
            .collect();
        let chi = Character { values, degree: 2 };
        let z = idempotent_from_character(&s3, &nu, &chi);
        // (1/3)(2 id - r - r^2)
        for g in 0..6 {
            let want = match t.element_order(g) {
                1 => FieldScalar::from_ratio(2, 3),
                2 => FieldScalar::zero(),
                _ => FieldScalar::from_ratio(-1, 3),
            };
            assert_eq!(z[g], want);
        }
    }

    #[test]
    fn centrality_examples() {
        let (t, h) = s3();
        let three_cycles = Element::from_ints(&(0..6).map(|g| i64::from(t.element_order(g) == 3)).collect::<Vec<_>>());
        assert!(centrality_certificate(&h, &three_cycles).unwrap().passed());
        let transposition = (0..6).find(|&g| t.element_order(g) == 2).unwrap();
        let r = centrality_certificate(&h, &h.basis(transposition)).unwrap();
        assert!(r.commute_failure.is_some());
        assert!(!r.passed());
    }

    #[test]
    fn q8_over_rationals_is_not_split_but_over_gaussians_is() {
        let q8 = group_algebra(&CayleyTable::quaternion8(), 4).unwrap();
        let degrees: Vec<usize> = decompose_center(&q8).unwrap().iter().map(|b| b.degree).collect();
        assert_eq!(degrees, vec![1, 1, 1, 1, 2]);
        let c3 = group_algebra(&CayleyTable::cyclic(3), 1).unwrap();
        assert!(matches!(decompose_center(&c3), Err(Error::SplittingFieldTooSmall { .. })));
    }

    #[test]
    fn lemma1_on_small_algebras() {
        for h in [
            group_algebra(&CayleyTable::cyclic(4), 4).unwrap(),
            group_algebra(&CayleyTable::symmetric3(), 1).unwrap(),
            dual_group_algebra(&CayleyTable::symmetric3(), 1).unwrap(),
        ] {
            for row in lemma1_equivalence(&h).unwrap() {
                assert!(row.matches && row.central, "{row}");
            }
        }
    }

    #[test]
    fn trace_dimension_agrees_with_rank() {
        let (_, h) = s3();
        for b in decompose_center(&h).unwrap() {
            assert_eq!(block_dimension(&h, &b.idempotent), b.degree * b.degree);
        }
    }
}
