//! Explicit simple modules, realized as minimal left ideals `H w` inside a block.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::BlockData;
use crate::error::{Error, Result};
use crate::hopf::{Element, HopfData};
use crate::linalg::{rank_of, Matrix};
use crate::scalars::FieldScalar;

/// Maximum number of candidate generators tried per block.
pub const MODULE_SEARCH_BOUND: usize = 4000;

/// A simple module `M = H w` with a chosen basis and the action matrices.
#[derive(Clone, Debug)]
pub struct SimpleModule {
    pub generator: Element,
    /// Basis of `H w` as vectors of `H`.
    pub basis: Vec<Element>,
    /// `rho(x_t)` for every basis element `x_t` of `H`; column `s` is `x_t b_s`.
    pub matrices: Vec<Matrix>,
}

/// Candidate generators: block basis vectors, then two-term combinations with
/// root-of-unity coefficients, then seeded random small combinations.
fn candidates(h: &HopfData, e: &Element) -> impl Iterator<Item = Element> {
    let n = h.dim();
    let mut gens: Vec<Element> = Vec::new();
    for j in 0..n {
        let v = h.mul_unchecked(e, &h.basis(j));
        if !v.is_zero() && !gens.contains(&v) {
            gens.push(v);
        }
    }
    let nc = h.conductor();
    let mut coeffs: Vec<FieldScalar> = (0..nc as i64).map(|t| FieldScalar::zeta_pow(nc, t)).collect();
    if !coeffs.contains(&FieldScalar::from_int(-1)) {
        coeffs.push(FieldScalar::from_int(-1));
    }
    let g = gens.len();
    let singles = gens.clone().into_iter();
    let pair_gens = gens.clone();
    let pair_coeffs = coeffs.clone();
    let pairs = (0..g).flat_map(move |a| (a + 1..g).map(move |b| (a, b))).flat_map(move |(a, b)| {
        let (ga, gb) = (pair_gens[a].clone(), pair_gens[b].clone());
        pair_coeffs
            .clone()
            .into_iter()
            .map(move |c| ga.add(&gb.scale(&c)))
    });
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut small = coeffs;
    small.push(FieldScalar::zero());
    small.push(FieldScalar::zero());
    let random = std::iter::from_fn(move || {
        let v = gens.iter().fold(Element::zero(n), |acc, gv| {
            let c = &small[rng.gen_range(0..small.len())];
            acc.add(&gv.scale(c))
        });
        Some(v)
    });
    singles.chain(pairs).chain(random).filter(|v| !v.is_zero())
}

/// Greedy choice of the first linearly independent vectors among `vs`.
fn independent_prefix(vs: Vec<Element>) -> Vec<Element> {
    let mut chosen: Vec<Element> = Vec::new();
    let mut rows: Vec<Vec<FieldScalar>> = Vec::new();
    for v in vs {
        rows.push(v.coeffs().to_vec());
        if rank_of(&rows) == rows.len() {
            chosen.push(v);
        } else {
            rows.pop();
        }
    }
    chosen
}

/// Finds a minimal left ideal of the block and the action of `H` on it.
pub fn simple_module(h: &HopfData, block: &BlockData) -> Result<SimpleModule> {
    let n = h.dim();
    let k = block.degree;
    for w in candidates(h, &block.idempotent).take(MODULE_SEARCH_BOUND) {
        let orbit: Vec<Element> = (0..n).map(|j| h.mul_unchecked(&h.basis(j), &w)).collect();
        let rows: Vec<Vec<FieldScalar>> = orbit.iter().map(|v| v.coeffs().to_vec()).collect();
        if rank_of(&rows) != k {
            continue;
        }
        let basis = independent_prefix(orbit);
        let cols: Vec<Vec<FieldScalar>> = basis.iter().map(|b| b.coeffs().to_vec()).collect();
        let frame = Matrix::from_columns(&cols, n);
        let mut matrices = Vec::with_capacity(n);
        for t in 0..n {
            let mut rho = Matrix::zeros(k, k);
            for (s, b) in basis.iter().enumerate() {
                let image = h.mul_unchecked(&h.basis(t), b);
                let coords = frame.solve(image.coeffs()).expect("H w is a left ideal");
                for (r, c) in coords.into_iter().enumerate() {
                    rho[(r, s)] = c;
                }
            }
            matrices.push(rho);
        }
        return Ok(SimpleModule {
            generator: w,
            basis,
            matrices,
        });
    }
    Err(Error::ModuleSearchFailed {
        bound: MODULE_SEARCH_BOUND,
    })
}

/// `rho(x_0), ..., rho(x_{n-1})` for an irreducible module of the block.
pub fn simple_module_matrices(h: &HopfData, block: &BlockData) -> Result<Vec<Matrix>> {
    simple_module(h, block).map(|m| m.matrices)
}
