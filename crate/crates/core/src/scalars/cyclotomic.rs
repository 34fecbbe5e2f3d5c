//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! An element is stored by its coordinates in the power basis
//! `1, zeta, ..., zeta^(phi(N)-1)` of `Q[x]/(Phi_N)`. Conductor 1 is the
//! rational field. Elements of different conductors may be mixed freely: both
//! operands are embedded into `Q(zeta_L)` with `L = lcm` of the conductors,
//! using `zeta_M = zeta_L^(L/M)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ScalarError;

/// Cached data for one conductor.
#[derive(Debug)]
struct Cyclo {
    phi: usize,
    /// `powers[j]` holds `x^j mod Phi_N` for `0 <= j < N`.
    powers: Vec<Vec<BigInt>>,
}

fn cyclo(conductor: u32) -> Arc<Cyclo> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Cyclo>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&conductor) {
        return Arc::clone(c);
    }
    let built = Arc::new(build_cyclo(conductor));
    cache
        .lock()
        .unwrap()
        .entry(conductor)
        .or_insert(built)
        .clone()
}

/// `Phi_N` with integer coefficients, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "conductor must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = exact_monic_div(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_monic_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dc) in den.iter().enumerate() {
            rem[i + j] -= &c * dc;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

fn build_cyclo(conductor: u32) -> Cyclo {
    let modulus = cyclotomic_polynomial(conductor);
    let phi = modulus.len() - 1;
    let mut powers = Vec::with_capacity(conductor as usize);
    let mut cur = vec![BigInt::zero(); phi];
    cur[0] = BigInt::one();
    for _ in 0..conductor {
        powers.push(cur.clone());
        // multiply by x, then reduce the overflow coefficient with the monic modulus
        let top = cur[phi - 1].clone();
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1].clone();
        }
        cur[0] = BigInt::zero();
        if !top.is_zero() {
            for i in 0..phi {
                cur[i] -= &top * &modulus[i];
            }
        }
    }
    Cyclo { phi, powers }
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    let mut result = n as u64;
    let mut m = n as u64;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result as usize
}

/// An exact element of `Q(zeta_N)`.
#[derive(Clone, Debug)]
pub struct FieldScalar {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl FieldScalar {
    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn rational(q: BigRational) -> Self {
        FieldScalar {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    /// Builds an element from power-basis coordinates.
    pub fn from_coeffs(conductor: u32, coeffs: Vec<BigRational>) -> Result<Self, ScalarError> {
        if conductor == 0 {
            return Err(ScalarError::Parse("conductor must be positive".into()));
        }
        let phi = euler_phi(conductor);
        if coeffs.len() != phi {
            return Err(ScalarError::Parse(format!(
                "conductor {conductor} needs {phi} coordinates, got {}",
                coeffs.len()
            )));
        }
        Ok(FieldScalar { conductor, coeffs })
    }

    /// `zeta_N^k`.
    pub fn zeta_pow(conductor: u32, k: i64) -> Self {
        let c = cyclo(conductor);
        let j = k.rem_euclid(conductor as i64) as usize;
        FieldScalar {
            conductor,
            coeffs: c.powers[j]
                .iter()
                .map(|v| BigRational::from_integer(v.clone()))
                .collect(),
        }
    }

    pub fn zeta(conductor: u32) -> Self {
        Self::zeta_pow(conductor, 1)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Embeds into `Q(zeta_target)`; `target` must be a multiple of the conductor.
    pub fn lift_to(&self, target: u32) -> Result<Self, ScalarError> {
        if target == self.conductor {
            return Ok(self.clone());
        }
        if target % self.conductor != 0 {
            return Err(ScalarError::IncompatibleField {
                conductor: self.conductor,
                target,
            });
        }
        let step = (target / self.conductor) as usize;
        let c = cyclo(target);
        let mut out = vec![BigRational::zero(); c.phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let p = &c.powers[(i * step) % target as usize];
            for (o, v) in out.iter_mut().zip(p) {
                if !v.is_zero() {
                    *o += a * BigRational::from_integer(v.clone());
                }
            }
        }
        Ok(FieldScalar {
            conductor: target,
            coeffs: out,
        })
    }

    fn common(&self, other: &Self) -> (std::borrow::Cow<'_, Self>, FieldScalar, u32) {
        let l = self.conductor.lcm(&other.conductor);
        let a = if l == self.conductor {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.lift_to(l).expect("lcm is a multiple"))
        };
        let b = if l == other.conductor {
            other.clone()
        } else {
            other.lift_to(l).expect("lcm is a multiple")
        };
        (a, b, l)
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.conductor == other.conductor {
            return FieldScalar {
                conductor: self.conductor,
                coeffs: self
                    .coeffs
                    .iter()
                    .zip(&other.coeffs)
                    .map(|(a, b)| a + b)
                    .collect(),
            };
        }
        let (a, b, l) = self.common(other);
        FieldScalar {
            conductor: l,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.conductor == 1 {
            let q = &self.coeffs[0];
            return FieldScalar {
                conductor: other.conductor,
                coeffs: other.coeffs.iter().map(|c| c * q).collect(),
            };
        }
        if other.conductor == 1 {
            return other.mul_ref(self);
        }
        if self.conductor != other.conductor {
            let (a, b, _) = self.common(other);
            return a.mul_ref(&b);
        }
        let c = cyclo(self.conductor);
        let n = self.conductor as usize;
        let mut prod = vec![BigRational::zero(); 2 * c.phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigRational> = prod[..c.phi].to_vec();
        for (j, v) in prod.iter().enumerate().skip(c.phi) {
            if v.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&c.powers[j % n]) {
                if !p.is_zero() {
                    *o += v * BigRational::from_integer(p.clone());
                }
            }
        }
        FieldScalar {
            conductor: self.conductor,
            coeffs: out,
        }
    }

    /// Matrix of multiplication by `self` on the power basis; column `j` is `self * zeta^j`.
    pub fn multiplication_matrix(&self) -> Vec<Vec<BigRational>> {
        let d = self.coeffs.len();
        let mut m = vec![vec![BigRational::zero(); d]; d];
        for j in 0..d {
            let col = self.mul_ref(&FieldScalar::zeta_pow(self.conductor, j as i64));
            for (i, v) in col.coeffs.into_iter().enumerate() {
                m[i][j] = v;
            }
        }
        m
    }

    /// Field norm down to `Q`.
    pub fn norm(&self) -> BigRational {
        rational_det(self.multiplication_matrix())
    }

    /// Field trace down to `Q`.
    pub fn trace(&self) -> BigRational {
        let m = self.multiplication_matrix();
        (0..m.len()).fold(BigRational::zero(), |acc, i| acc + &m[i][i])
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            let inv = FieldScalar::rational(q.recip());
            return if self.conductor == 1 {
                Ok(inv)
            } else {
                inv.lift_to(self.conductor)
            };
        }
        // Solve M y = e_0 where M is multiplication by self.
        let m = self.multiplication_matrix();
        let d = m.len();
        let mut rhs = vec![BigRational::zero(); d];
        rhs[0] = BigRational::one();
        let y = rational_solve(m, rhs).ok_or(ScalarError::DivisionByZero)?;
        Ok(FieldScalar {
            conductor: self.conductor,
            coeffs: y,
        })
    }

    /// Raises to a non-negative integer power.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = FieldScalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Lexicographic comparison of power-basis coordinates in a common field.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.common(other);
        for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
            match x.cmp(y) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// True when every power-basis coordinate is an integer.
    pub fn has_integral_coords(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Power-basis coordinates in `Q(zeta_target)`, even for rational values.
    pub fn display_in(&self, target: u32) -> String {
        let s = self.lift_to(target).unwrap_or_else(|_| self.clone());
        let coords: Vec<String> = s.coeffs.iter().map(ToString::to_string).collect();
        format!("[{}]@{}", coords.join(", "), s.conductor)
    }
}

fn rational_solve(mut m: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let d = m.len();
    for col in 0..d {
        let piv = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        rhs.swap(col, piv);
        let inv = m[col][col].recip();
        for c in col..d {
            m[col][c] = &m[col][c] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..d {
                    let t = &f * &m[col][c];
                    m[r][c] -= t;
                }
                let t = &f * &rhs[col];
                rhs[r] -= t;
            }
        }
    }
    Some(rhs)
}

fn rational_det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let d = m.len();
    let mut det = BigRational::one();
    for col in 0..d {
        let Some(piv) = (col..d).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(col, piv);
            det = -det;
        }
        det *= &m[col][col];
        for r in col + 1..d {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &m[col][col];
            for c in col..d {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    det
}

impl PartialEq for FieldScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for FieldScalar {}

impl Default for FieldScalar {
    fn default() -> Self {
        FieldScalar::zero()
    }
}

impl From<i64> for FieldScalar {
    fn from(v: i64) -> Self {
        FieldScalar::from_int(v)
    }
}

impl From<BigRational> for FieldScalar {
    fn from(q: BigRational) -> Self {
        FieldScalar::rational(q)
    }
}

impl From<BigInt> for FieldScalar {
    fn from(v: BigInt) -> Self {
        FieldScalar::rational(BigRational::from_integer(v))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a FieldScalar> for &'a FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: &'a FieldScalar) -> FieldScalar {
                let f: fn(&FieldScalar, &FieldScalar) -> FieldScalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: FieldScalar) -> FieldScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: &'a FieldScalar) -> FieldScalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<FieldScalar> for &'a FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: FieldScalar) -> FieldScalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&-b));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
// Division by zero panics, like integer division; use `inverse` for a checked path.
forward_binop!(Div, div, |a, b| a.mul_ref(&b.inverse().expect("division by zero")));

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -&self
    }
}

impl AddAssign<&FieldScalar> for FieldScalar {
    fn add_assign(&mut self, rhs: &FieldScalar) {
        if self.conductor == rhs.conductor {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
        } else {
            *self = self.add_ref(rhs);
        }
    }
}

impl AddAssign for FieldScalar {
    fn add_assign(&mut self, rhs: FieldScalar) {
        *self += &rhs;
    }
}

impl SubAssign<&FieldScalar> for FieldScalar {
    fn sub_assign(&mut self, rhs: &FieldScalar) {
        *self += &-rhs;
    }
}

impl SubAssign for FieldScalar {
    fn sub_assign(&mut self, rhs: FieldScalar) {
        *self += &-rhs;
    }
}

impl MulAssign<&FieldScalar> for FieldScalar {
    fn mul_assign(&mut self, rhs: &FieldScalar) {
        *self = self.mul_ref(rhs);
    }
}

impl std::iter::Sum for FieldScalar {
    fn sum<I: Iterator<Item = FieldScalar>>(iter: I) -> Self {
        iter.fold(FieldScalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        f.write_str(&self.display_in(self.conductor))
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let s = s.trim();
    let bad = || ScalarError::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for FieldScalar {
    type Err = ScalarError;

    /// Accepts `a/b`, `a`, or `[a0/b0, a1/b1, ...]@N`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('[') {
            let (body, cond) = rest
                .split_once("]@")
                .ok_or_else(|| ScalarError::Parse(format!("missing ]@N in {s:?}")))?;
            let conductor: u32 = cond
                .trim()
                .parse()
                .map_err(|_| ScalarError::Parse(format!("bad conductor in {s:?}")))?;
            let coeffs = body
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()?;
            return FieldScalar::from_coeffs(conductor, coeffs);
        }
        parse_rational(s).map(FieldScalar::rational)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32) -> FieldScalar {
        FieldScalar::zeta(n)
    }

    #[test]
    fn cyclotomic_polynomials() {
        let p = |n| {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| c.to_string().parse::<i64>().unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(p(1), vec![-1, 1]);
        assert_eq!(p(3), vec![1, 1, 1]);
        assert_eq!(p(4), vec![1, 0, 1]);
        assert_eq!(p(6), vec![1, -1, 1]);
        assert_eq!(p(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1), 1);
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(z(3).pow(3), FieldScalar::one());
        assert_eq!(z(4).pow(2), FieldScalar::from_int(-1));
        // 1 + zeta_3 + zeta_3^2 = 0
        assert!((FieldScalar::one() + z(3) + z(3).pow(2)).is_zero());
        // zeta_6 = -zeta_3^2 and zeta_12^4 = zeta_3
        assert_eq!(z(6), -z(3).pow(2));
        assert_eq!(z(12).pow(4), z(3));
        assert_eq!(z(12).pow(3), z(4));
    }

    #[test]
    fn inverse_and_norm() {
        let a = FieldScalar::from_int(2) + z(3);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_one());
        // N(2 + zeta_3) = 4 - 2 + 1 = 3
        assert_eq!(a.norm(), BigRational::from_integer(3.into()));
        assert_eq!(z(5).trace(), BigRational::from_integer((-1).into()));
        assert!(FieldScalar::zero().inverse().is_err());
    }

    #[test]
    fn parse_and_display() {
        let a: FieldScalar = "[2, 1]@3".parse().unwrap();
        assert_eq!(a, FieldScalar::from_int(2) + z(3));
        assert_eq!(a.to_string(), "[2, 1]@3");
        let q: FieldScalar = "-3/6".parse().unwrap();
        assert_eq!(q.to_string(), "-1/2");
        assert_eq!(FieldScalar::from_int(1).display_in(4), "[1, 0]@4");
        assert!("[1]@3".parse::<FieldScalar>().is_err());
        assert!("1/0".parse::<FieldScalar>().is_err());
        assert!("x".parse::<FieldScalar>().is_err());
    }

    #[test]
    fn mixed_conductors_embed() {
        let s = z(3) + z(4);
        assert_eq!(s.conductor(), 12);
        assert_eq!(&s - &z(4), z(3));
        assert!(z(4).lift_to(6).is_err());
    }
}
