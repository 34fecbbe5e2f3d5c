//! Factorization of squarefree integer polynomials.
//!
//! The polynomial is factored modulo a single prime larger than twice the
//! Landau-Mignotte coefficient bound (distinct-degree then Cantor-Zassenhaus
//! equal-degree splitting). Because the prime exceeds the bound, products of
//! modular factors lift to true factors by taking symmetric residues, so no
//! Hensel lifting is needed. Modular factors are recombined by trial division.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type ZPoly = Vec<BigInt>;

fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
fn primitive(p: &[BigInt]) -> ZPoly {
    let c = content(p);
    let mut out: ZPoly = p.iter().map(|v| v / &c).collect();
    if out.last().is_some_and(|l| l.is_negative()) {
        out.iter_mut().for_each(|v| *v = -&*v);
    }
    out
}

/// Exact division over Z; `None` if `d` does not divide `n`.
fn exact_div(n: &[BigInt], d: &[BigInt]) -> Option<ZPoly> {
    let mut rem = n.to_vec();
    let dd = d.len() - 1;
    if rem.len() < d.len() {
        return None;
    }
    let lead = d.last().unwrap();
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let (q, r) = rem[i + dd].div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        if q.is_zero() {
            continue;
        }
        for (j, c) in d.iter().enumerate() {
            rem[i + j] -= &q * c;
        }
        quot[i] = q;
    }
    if rem.iter().all(Zero::is_zero) {
        Some(quot)
    } else {
        None
    }
}

/// Arithmetic in `F_p[x]`.
struct Fp {
    p: BigInt,
}

impl Fp {
    fn norm(&self, a: &BigInt) -> BigInt {
        a.mod_floor(&self.p)
    }

    fn reduce(&self, a: &[BigInt]) -> ZPoly {
        let mut out: ZPoly = a.iter().map(|c| self.norm(c)).collect();
        trim(&mut out);
        out
    }

    fn inv(&self, a: &BigInt) -> BigInt {
        // p is prime: a^(p-2)
        a.modpow(&(&self.p - 2u32), &self.p)
    }

    fn sub(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        let mut out: ZPoly = (0..n)
            .map(|i| self.norm(&(a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))))
            .collect();
        trim(&mut out);
        out
    }

    fn mul(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.reduce(&out)
    }

    fn rem(&self, a: &[BigInt], m: &[BigInt]) -> ZPoly {
        self.div_rem(a, m).1
    }

    fn div_rem(&self, a: &[BigInt], m: &[BigInt]) -> (ZPoly, ZPoly) {
        let mut rem = self.reduce(a);
        let dm = m.len() - 1;
        if rem.len() <= dm {
            return (Vec::new(), rem);
        }
        let li = self.inv(m.last().unwrap());
        let mut quot = vec![BigInt::zero(); rem.len() - dm];
        for i in (0..quot.len()).rev() {
            let c = self.norm(&(&rem[i + dm] * &li));
            if c.is_zero() {
                continue;
            }
            for (j, mc) in m.iter().enumerate() {
                rem[i + j] = self.norm(&(&rem[i + j] - &c * mc));
            }
            quot[i] = c;
        }
        rem.truncate(dm);
        trim(&mut rem);
        trim(&mut quot);
        (quot, rem)
    }

    fn monic(&self, a: &[BigInt]) -> ZPoly {
        let li = self.inv(a.last().unwrap());
        self.reduce(&a.iter().map(|c| c * &li).collect::<Vec<_>>())
    }

    fn gcd(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        let (mut a, mut b) = (self.reduce(a), self.reduce(b));
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        if a.is_empty() {
            a
        } else {
            self.monic(&a)
        }
    }

    fn powmod(&self, base: &[BigInt], e: &BigInt, m: &[BigInt]) -> ZPoly {
        let mut result: ZPoly = vec![BigInt::one()];
        let mut b = self.rem(base, m);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                result = self.rem(&self.mul(&result, &b), m);
            }
            if i + 1 < bits {
                b = self.rem(&self.mul(&b, &b), m);
            }
        }
        result
    }

    fn derivative(&self, a: &[BigInt]) -> ZPoly {
        self.reduce(
            &a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect::<Vec<_>>(),
        )
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    fn ddf(&self, f: &[BigInt]) -> Vec<(ZPoly, usize)> {
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let x: ZPoly = vec![BigInt::zero(), BigInt::one()];
        let mut h = x.clone();
        let mut i = 1;
        while f.len() > 2 * i {
            h = self.powmod(&h, &self.p, &f);
            let g = self.gcd(&self.sub(&h, &x), &f);
            if g.len() > 1 {
                f = self.div_rem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, i));
            }
            i += 1;
        }
        if f.len() > 1 {
            let d = f.len() - 1;
            out.push((f, d));
        }
        out
    }

    /// Equal-degree splitting (Cantor-Zassenhaus, odd p).
    fn edf(&self, f: &[BigInt], d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ZPoly>) {
        let n = f.len() - 1;
        if n == d {
            out.push(f.to_vec());
            return;
        }
        let exp = (self.p.pow(d as u32) - 1u32) / 2u32;
        let bytes = (self.p.bits() / 8 + 2) as usize;
        loop {
            let a: ZPoly = (0..n)
                .map(|_| {
                    let buf: Vec<u8> = (0..bytes).map(|_| rng.gen()).collect();
                    self.norm(&BigInt::from_bytes_le(Sign::Plus, &buf))
                })
                .collect();
            let a = self.reduce(&a);
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.powmod(&a, &exp, f), &[BigInt::one()]);
            let g = self.gcd(&b, f);
            if g.len() > 1 && g.len() < f.len() {
                let q = self.monic(&self.div_rem(f, &g).0);
                self.edf(&g, d, rng, out);
                self.edf(&q, d, rng, out);
                return;
            }
        }
    }
}

fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    for sp in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let sp = BigInt::from(sp);
        if n == &sp {
            return true;
        }
        if (n % &sp).is_zero() {
            return false;
        }
    }
    let nm1 = n - 1u32;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn isqrt_ceil(n: &BigInt) -> BigInt {
    let r = n.sqrt();
    if &(&r * &r) == n {
        r
    } else {
        r + 1
    }
}

/// Irreducible factors over Z of a squarefree integer polynomial (coefficients
/// lowest degree first), each primitive with positive leading coefficient, in
/// the order they were found. Constant content is dropped.
pub fn factor_over_integers(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let mut f = f.to_vec();
    trim(&mut f);
    assert!(f.len() > 1, "cannot factor a constant");
    let f = primitive(&f);
    let deg = f.len() - 1;
    if deg == 1 {
        return vec![f];
    }
    let lc = f.last().unwrap().clone();
    let norm2 = isqrt_ceil(&f.iter().map(|c| c * c).sum::<BigInt>());
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << deg) * (norm2 + 1u32);

    let mut candidate = bound + 1u32;
    if candidate.is_even() {
        candidate += 1u32;
    }
    let fp = loop {
        if is_probable_prime(&candidate) && !(&lc % &candidate).is_zero() {
            let fp = Fp {
                p: candidate.clone(),
            };
            let g = fp.gcd(&f, &fp.derivative(&f));
            if g.len() == 1 {
                break fp;
            }
        }
        candidate += 2u32;
    };

    let monic = fp.monic(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut modular = Vec::new();
    for (g, d) in fp.ddf(&monic) {
        fp.edf(&g, d, &mut rng, &mut modular);
    }

    let half = &fp.p >> 1u32;
    let symmetric = |c: BigInt| if c > half { c - &fp.p } else { c };

    let mut remaining = f.clone();
    let mut factors = Vec::new();
    let mut pool: Vec<ZPoly> = modular;
    let mut size = 1;
    while 2 * size <= pool.len() {
        let mut found = false;
        for subset in combinations(pool.len(), size) {
            let lead = remaining.last().unwrap().clone();
            let mut g: ZPoly = vec![fp.norm(&lead)];
            for &i in &subset {
                g = fp.mul(&g, &pool[i]);
            }
            let g: ZPoly = g.into_iter().map(&symmetric).collect();
            let g = primitive(&g);
            if let Some(q) = exact_div(&remaining, &g) {
                factors.push(g);
                remaining = q;
                pool = pool
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, v)| v)
                    .collect();
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    factors.push(primitive(&remaining));
    factors
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}
