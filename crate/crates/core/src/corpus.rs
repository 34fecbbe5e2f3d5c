//! Finite groups as Cayley tables, their group algebras `K[G]` and the dual
//! algebras `K^G`.

use std::collections::{BTreeSet, VecDeque};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::hopf::HopfData;
use crate::linalg::Matrix;
use crate::scalars::FieldScalar;

/// Multiplication table of a finite group; `table[i][j]` is the index of `g_i g_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl CayleyTable {
    /// Validates a table: Latin square with a two-sided identity and inverses.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidCayleyTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCayleyTable(format!("row {i} has length {}", row.len())));
            }
            let set: BTreeSet<usize> = row.iter().copied().collect();
            if set.len() != n || set.iter().any(|&v| v >= n) {
                return Err(Error::InvalidCayleyTable(format!("row {i} is not a permutation")));
            }
        }
        for j in 0..n {
            let set: BTreeSet<usize> = (0..n).map(|i| table[i][j]).collect();
            if set.len() != n {
                return Err(Error::InvalidCayleyTable(format!("column {j} is not a permutation")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidCayleyTable("no identity element".into()))?;
        let inverse = (0..n)
            .map(|g| (0..n).find(|&h| table[g][h] == identity && table[h][g] == identity))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidCayleyTable("missing inverse".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidCayleyTable(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(CayleyTable {
            table,
            identity,
            inverse,
        })
    }

    /// Group generated by permutations, elements sorted lexicographically.
    pub fn from_permutations(generators: &[Vec<usize>]) -> Self {
        let degree = generators[0].len();
        let id: Vec<usize> = (0..degree).collect();
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&i| p[i]).collect() };
        let mut seen = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in generators {
                let next = compose(&p, g);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let elems: Vec<Vec<usize>> = seen.into_iter().collect();
        let index = |p: &Vec<usize>| elems.binary_search(p).expect("closed under composition");
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| index(&compose(a, b))).collect())
            .collect();
        CayleyTable::from_table(table).expect("permutation groups are groups")
    }

    pub fn cyclic(n: usize) -> Self {
        CayleyTable::from_table((0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect())
            .expect("Z/n is a group")
    }

    pub fn symmetric3() -> Self {
        CayleyTable::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]])
    }

    /// Symmetries of a square, order 8.
    pub fn dihedral4() -> Self {
        CayleyTable::from_permutations(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
    }

    pub fn alternating4() -> Self {
        CayleyTable::from_permutations(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
    }

    /// Quaternion group; elements ordered `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion8() -> Self {
        // unit products: (sign, unit) for units 1, i, j, k
        const UNIT: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let table = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (sa, ua) = (a % 2 == 1, a / 2);
                        let (sb, ub) = (b % 2 == 1, b / 2);
                        let (s, u) = UNIT[ua][ub];
                        2 * u + usize::from(sa ^ sb ^ s)
                    })
                    .collect()
            })
            .collect();
        CayleyTable::from_table(table).expect("Q8 is a group")
    }

    /// Built-in groups by name: C2, C3, C4, C6, S3, D4, Q8, A4.
    pub fn builtin(name: &str) -> Option<Self> {
        Some(match name.to_ascii_uppercase().as_str() {
            "C2" => Self::cyclic(2),
            "C3" => Self::cyclic(3),
            "C4" => Self::cyclic(4),
            "C6" => Self::cyclic(6),
            "S3" => Self::symmetric3(),
            "D4" => Self::dihedral4(),
            "Q8" => Self::quaternion8(),
            "A4" => Self::alternating4(),
            _ => return None,
        })
    }

    pub const BUILTIN_NAMES: [&'static str; 8] = ["C2", "C3", "C4", "C6", "S3", "D4", "Q8", "A4"];

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u32 {
        (0..self.order()).fold(1usize, |acc, g| acc.lcm(&self.element_order(g))) as u32
    }
}

fn tensor3(n: usize) -> Vec<FieldScalar> {
    vec![FieldScalar::zero(); n * n * n]
}

/// `K[G]`: basis the group elements, `Delta(g) = g (x) g`, `S(g) = g^-1`, `eps(g) = 1`.
pub fn group_algebra(t: &CayleyTable, conductor: u32) -> Result<HopfData> {
    let n = t.order();
    let mut mul = tensor3(n);
    let mut comul = tensor3(n);
    let mut antipode = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            mul[(a * n + b) * n + t.mul(a, b)] = FieldScalar::one();
        }
        comul[(a * n + a) * n + a] = FieldScalar::one();
        antipode[(a, t.inverse(a))] = FieldScalar::one();
    }
    let counit = vec![FieldScalar::one(); n];
    let mut unit = vec![FieldScalar::zero(); n];
    unit[t.identity()] = FieldScalar::one();
    HopfData::new(n, conductor, mul, comul, antipode, counit, unit)
}

/// `K^G`: basis `p_g`, `p_a p_b = delta_{ab} p_a`, `Delta(p_g) = sum_{ab=g} p_a (x) p_b`,
/// `S(p_g) = p_{g^-1}`, `eps(p_g) = delta_{g,1}`, `1 = sum p_g`.
pub fn dual_group_algebra(t: &CayleyTable, conductor: u32) -> Result<HopfData> {
    let n = t.order();
    let mut mul = tensor3(n);
    let mut comul = tensor3(n);
    let mut antipode = Matrix::zeros(n, n);
    for a in 0..n {
        mul[(a * n + a) * n + a] = FieldScalar::one();
        for b in 0..n {
            comul[(t.mul(a, b) * n + a) * n + b] = FieldScalar::one();
        }
        antipode[(a, t.inverse(a))] = FieldScalar::one();
    }
    let mut counit = vec![FieldScalar::zero(); n];
    counit[t.identity()] = FieldScalar::one();
    let unit = vec![FieldScalar::one(); n];
    HopfData::new(n, conductor, mul, comul, antipode, counit, unit)
}

/// Sweedler's 4-dimensional Hopf algebra (basis `1, g, x, gx`; `g^2 = 1`,
/// `x^2 = 0`, `xg = -gx`). It is not semisimple and `S^2 != Id`.
pub fn sweedler_algebra() -> HopfData {
    let n = 4;
    let one = FieldScalar::one;
    let mut mul = tensor3(n);
    // basis index a + 2b for g^a x^b
    for i in 0..4 {
        for j in 0..4 {
            let (a, b) = (i % 2, i / 2);
            let (c, d) = (j % 2, j / 2);
            if b + d >= 2 {
                continue;
            }
            let sign = if b * c == 1 { -1 } else { 1 };
            let k = (a + c) % 2 + 2 * (b + d);
            mul[(i * n + j) * n + k] = FieldScalar::from_int(sign);
        }
    }
    let mut comul = tensor3(n);
    let mut set = |i: usize, j: usize, k: usize, v: i64| comul[(i * n + j) * n + k] = FieldScalar::from_int(v);
    set(0, 0, 0, 1);
    set(1, 1, 1, 1);
    set(2, 2, 0, 1); // x (x) 1
    set(2, 1, 2, 1); // g (x) x
    set(3, 3, 1, 1); // gx (x) g
    set(3, 0, 3, 1); // 1 (x) gx
    let mut antipode = Matrix::zeros(n, n);
    antipode[(0, 0)] = one();
    antipode[(1, 1)] = one();
    antipode[(2, 3)] = FieldScalar::from_int(-1);
    antipode[(3, 2)] = one();
    let counit = vec![one(), one(), FieldScalar::zero(), FieldScalar::zero()];
    let unit = vec![one(), FieldScalar::zero(), FieldScalar::zero(), FieldScalar::zero()];
    HopfData::new(n, 1, mul, comul, antipode, counit, unit).expect("well-formed constants")
}

/// A named corpus algebra.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub group: CayleyTable,
    pub algebra: HopfData,
}

/// The eight built-in group algebras followed by their duals, each over
/// `Q(zeta_e)` with `e` the exponent of the group.
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for dual in [false, true] {
        for name in CayleyTable::BUILTIN_NAMES {
            let group = CayleyTable::builtin(name).expect("listed");
            let conductor = group.exponent();
            let algebra = if dual {
                dual_group_algebra(&group, conductor)
            } else {
                group_algebra(&group, conductor)
            }
            .expect("valid table");
            out.push(CorpusEntry {
                name: if dual { format!("{name}-dual") } else { name.to_string() },
                group,
                algebra,
            });
        }
    }
    out
}
