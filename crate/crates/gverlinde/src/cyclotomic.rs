//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! A value is stored as a vector of big rationals of length `phi(N)`:
//! its coordinates in the power basis `1, z, ..., z^{phi(N)-1}` modulo the
//! `N`-th cyclotomic polynomial, where `z = zeta_N` is a fixed primitive
//! `N`-th root of unity.  Coordinates in this basis are unique, so
//! equality of values is equality of coordinate vectors.
//!
//! Values at different levels interoperate: binary operations promote
//! both operands to the least common multiple of their levels via
//! `zeta_M = zeta_N^{N/M}` for `M | N`.  Promotion is a ring embedding,
//! so mixed-level equality is well defined.
//!
//! Reduction data per level (the cyclotomic polynomial and a table of
//! reduced monomials `z^e` for every exponent `e < N`) is computed once
//! and shared through a global cache.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};
use thiserror::Error;

/// Hard bound on the cyclotomic level.  Levels seen in practice stay in
/// the low hundreds (theory levels and character conductors of groups of
/// order at most 64); the bound only guards against runaway lcm growth.
pub const MAX_LEVEL: u32 = 4096;

#[derive(Debug, Error)]
pub enum CycError {
    #[error("cannot invert zero in Q(zeta_{0})")]
    DivisionByZero(u32),
    #[error("level {0} does not divide target level {1}")]
    BadPromotion(u32, u32),
    #[error("cyclotomic level {0} out of range 1..={MAX_LEVEL}")]
    LevelOutOfRange(u32),
    #[error("cannot parse cyclotomic literal {0:?}: {1}")]
    Parse(String, String),
}

/// Euler totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
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
    result
}

/// Exact division of integer polynomials, `num / den` with monic `den`.
/// Coefficient order is ascending.  Panics if the division is not exact;
/// it always is for the cyclotomic recursion that calls it.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    assert!(rem.len() >= den.len());
    let qn = rem.len() - den.len() + 1;
    let mut quot = vec![BigInt::zero(); qn];
    for i in (0..qn).rev() {
        let c = rem[i + dn].clone();
        if !c.is_zero() {
            quot[i] = c.clone();
            for (j, d) in den.iter().enumerate() {
                let t = &c * d;
                rem[i + j] -= t;
            }
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

/// The `n`-th cyclotomic polynomial, ascending coefficients, monic.
fn cyclo_poly(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = poly_div_exact(&num, &cyclo_poly(d));
        }
    }
    num
}

/// Reduction data for one cyclotomic level.
pub struct LevelData {
    pub n: u32,
    pub phi: usize,
    /// `powers[e]` = coordinates of `z^e` in the power basis, for `0 <= e < n`.
    powers: Vec<Vec<BigInt>>,
}

impl LevelData {
    fn build(n: u32) -> LevelData {
        let poly = cyclo_poly(n);
        let phi = poly.len() - 1;
        debug_assert_eq!(phi as u32, euler_phi(n));
        let mut powers: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize);
        for e in 0..n as usize {
            if e < phi {
                let mut v = vec![BigInt::zero(); phi];
                v[e] = BigInt::one();
                powers.push(v);
            } else if e == phi {
                // z^phi = -(c_0 + c_1 z + ... + c_{phi-1} z^{phi-1}) since the
                // cyclotomic polynomial is monic.
                let v: Vec<BigInt> = poly[..phi].iter().map(|c| -c).collect();
                powers.push(v);
            } else {
                // z^e = z * z^{e-1}: shift up, then fold the spill-over.
                let prev = powers[e - 1].clone();
                let mut v = vec![BigInt::zero(); phi];
                for i in 0..phi - 1 {
                    v[i + 1] = prev[i].clone();
                }
                let top = prev[phi - 1].clone();
                if !top.is_zero() {
                    let red = powers[phi].clone();
                    for i in 0..phi {
                        v[i] += &top * &red[i];
                    }
                }
                powers.push(v);
            }
        }
        LevelData { n, phi, powers }
    }

    /// Coordinates of `z^e` (any `e`, reduced mod `n`).
    pub fn power(&self, e: u32) -> &[BigInt] {
        &self.powers[(e % self.n) as usize]
    }
}

static LEVELS: Lazy<RwLock<HashMap<u32, Arc<LevelData>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Shared reduction data for level `n` (computed once per process).
pub fn level_data(n: u32) -> Arc<LevelData> {
    assert!(
        (1..=MAX_LEVEL).contains(&n),
        "cyclotomic level {n} out of range 1..={MAX_LEVEL}"
    );
    if let Some(d) = LEVELS.read().unwrap().get(&n) {
        return Arc::clone(d);
    }
    let built = Arc::new(LevelData::build(n));
    let mut w = LEVELS.write().unwrap();
    Arc::clone(w.entry(n).or_insert(built))
}

/// An element of `Q(zeta_N)` in canonical power-basis coordinates.
#[derive(Clone, Debug)]
pub struct CycNum {
    level: u32,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    pub fn zero(level: u32) -> CycNum {
        let d = level_data(level);
        CycNum { level, coeffs: vec![BigRational::zero(); d.phi] }
    }

    pub fn one(level: u32) -> CycNum {
        CycNum::root_of_unity(level, 0)
    }

    /// `zeta_level ^ k`.
    pub fn root_of_unity(level: u32, k: i64) -> CycNum {
        let d = level_data(level);
        let e = k.rem_euclid(level as i64) as u32;
        let coeffs = d.power(e).iter().map(|c| BigRational::from(c.clone())).collect();
        CycNum { level, coeffs }
    }

    pub fn from_int(v: i64) -> CycNum {
        CycNum { level: 1, coeffs: vec![BigRational::from(BigInt::from(v))] }
    }

    pub fn from_ratio(num: i64, den: i64) -> CycNum {
        assert!(den != 0, "zero denominator");
        CycNum {
            level: 1,
            coeffs: vec![BigRational::new(BigInt::from(num), BigInt::from(den))],
        }
    }

    pub fn from_rational(r: BigRational) -> CycNum {
        CycNum { level: 1, coeffs: vec![r] }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational this value equals, if it is rational (coordinates are
    /// unique, so rationals are exactly the values supported on `z^0`).
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    /// Re-express at a level that `self.level` divides.
    pub fn promote(&self, target: u32) -> Result<CycNum, CycError> {
        if target == self.level {
            return Ok(self.clone());
        }
        if target % self.level != 0 {
            return Err(CycError::BadPromotion(self.level, target));
        }
        let d = level_data(target);
        let step = target / self.level;
        let mut coeffs = vec![BigRational::zero(); d.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let basis = d.power(i as u32 * step);
            for (j, b) in basis.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[j] += c * BigRational::from(b.clone());
                }
            }
        }
        Ok(CycNum { level: target, coeffs })
    }

    fn common_level(&self, other: &CycNum) -> u32 {
        if self.level == other.level {
            self.level
        } else {
            self.level.lcm(&other.level)
        }
    }

    pub fn add(&self, other: &CycNum) -> CycNum {
        let l = self.common_level(other);
        let a = self.promote(l).expect("lcm promotion");
        let b = other.promote(l).expect("lcm promotion");
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x + y)
            .collect();
        CycNum { level: l, coeffs }
    }

    pub fn neg(&self) -> CycNum {
        CycNum {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &CycNum) -> CycNum {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &CycNum) -> CycNum {
        let l = self.common_level(other);
        let a = self.promote(l).expect("lcm promotion");
        let b = other.promote(l).expect("lcm promotion");
        let d = level_data(l);
        let phi = d.phi;
        // Raw convolution, then fold exponents >= phi through the monomial table.
        let mut raw = vec![BigRational::zero(); 2 * phi - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        let mut coeffs: Vec<BigRational> = raw[..phi].to_vec();
        for (e, c) in raw.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            let basis = d.power(e as u32);
            for (j, bc) in basis.iter().enumerate() {
                if !bc.is_zero() {
                    coeffs[j] += c * BigRational::from(bc.clone());
                }
            }
        }
        CycNum { level: l, coeffs }
    }

    pub fn scale(&self, r: &BigRational) -> CycNum {
        CycNum {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the (irreducible) cyclotomic polynomial.
    pub fn invert(&self) -> Result<CycNum, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero(self.level));
        }
        let d = level_data(self.level);
        let modulus: Vec<BigRational> = cyclo_poly(self.level)
            .into_iter()
            .map(BigRational::from)
            .collect();
        // Invariants: r0 = s0*f mod Phi, r1 = s1*f mod Phi.
        let mut r0 = modulus.clone();
        let mut r1 = poly_trim(self.coeffs.clone());
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, rem) = poly_divmod(&r0, &r1);
            let s_next = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s_next;
        }
        // r0 is a nonzero constant: gcd(f, Phi) with Phi irreducible.
        assert_eq!(r0.len(), 1, "cyclotomic polynomial must be irreducible");
        let inv_c = r0[0].recip();
        let scaled: Vec<BigRational> = s0.iter().map(|c| c * &inv_c).collect();
        let (_, reduced) = poly_divmod(&scaled, &modulus);
        let mut coeffs = vec![BigRational::zero(); d.phi];
        for (i, c) in reduced.into_iter().enumerate() {
            coeffs[i] = c;
        }
        let out = CycNum { level: self.level, coeffs };
        debug_assert!(out.mul(self).is_one(), "inverse verification");
        Ok(out)
    }

    /// Complex conjugation, `z^i -> z^{-i}`.
    pub fn conjugate(&self) -> CycNum {
        let d = level_data(self.level);
        let mut coeffs = vec![BigRational::zero(); d.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (self.level - i as u32 % self.level) % self.level;
            let basis = d.power(e);
            for (j, b) in basis.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[j] += c * BigRational::from(b.clone());
                }
            }
        }
        CycNum { level: self.level, coeffs }
    }

    /// Total order on values (promotes to a common level, then compares
    /// coordinate vectors lexicographically).  Used for deterministic sorts.
    pub fn lex_cmp(&self, other: &CycNum) -> Ordering {
        let l = self.common_level(other);
        let a = self.promote(l).expect("lcm promotion");
        let b = other.promote(l).expect("lcm promotion");
        for (x, y) in a.coeffs.iter().zip(b.coeffs.iter()) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Numerical embedding sending `z` to `exp(2 pi i / level)`.
    /// For display and diagnostics only; all decisions are made exactly.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = rational_to_f64(c);
            let ang = 2.0 * std::f64::consts::PI * (i as f64) / (self.level as f64);
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    let n = r.numer();
    let d = r.denom();
    // Good enough for diagnostics; exact values never flow through here.
    let fn_ = n.to_string().parse::<f64>().unwrap_or(f64::NAN);
    let fd = d.to_string().parse::<f64>().unwrap_or(f64::NAN);
    fn_ / fd
}

// ---- rational polynomial helpers (ascending coefficients, trimmed) ----

fn poly_trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    poly_trim(out)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    poly_trim(out)
}

/// Division with remainder; the divisor need not be monic.
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem: Vec<BigRational> = a.to_vec();
    rem = poly_trim(rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap().clone();
    let qn = rem.len() - b.len() + 1;
    let mut quot = vec![BigRational::zero(); qn];
    for i in (0..qn).rev() {
        let top = rem.get(i + b.len() - 1).cloned().unwrap_or_else(BigRational::zero);
        if top.is_zero() {
            continue;
        }
        let q = &top / &lead;
        quot[i] = q.clone();
        for (j, d) in b.iter().enumerate() {
            let t = &q * d;
            rem[i + j] -= t;
        }
    }
    (poly_trim(quot), poly_trim(rem))
}

// ---- operator overloads on references ----

impl std::ops::Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum::add(self, rhs)
    }
}

impl std::ops::Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum::sub(self, rhs)
    }
}

impl std::ops::Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        CycNum::mul(self, rhs)
    }
}

impl std::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::neg(self)
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.level == other.level {
            return self.coeffs == other.coeffs;
        }
        let l = self.common_level(other);
        self.promote(l).expect("lcm promotion").coeffs
            == other.promote(l).expect("lcm promotion").coeffs
    }
}

impl Eq for CycNum {}

// ---- textual form: "c0 + c1*z + c2*z^2@N" ----

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = match k {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{k}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            terms.push("0".to_string());
        }
        write!(f, "{}@{}", terms.join(" + "), self.level)
    }
}

impl FromStr for CycNum {
    type Err = CycError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |m: &str| CycError::Parse(s.to_string(), m.to_string());
        let (body, lev) = s
            .rsplit_once('@')
            .ok_or_else(|| err("missing '@level' suffix"))?;
        let level: u32 = lev
            .trim()
            .parse()
            .map_err(|_| err("level is not an integer"))?;
        if !(1..=MAX_LEVEL).contains(&level) {
            return Err(CycError::LevelOutOfRange(level));
        }
        let mut out = CycNum::zero(level);
        for term in body.split(" + ") {
            let term = term.trim();
            if term == "0" {
                continue;
            }
            let (coef_str, exp) = match term.split_once('*') {
                None => (term, 0u32),
                Some((c, z)) => {
                    let e = if z == "z" {
                        1
                    } else if let Some(k) = z.strip_prefix("z^") {
                        k.parse().map_err(|_| err("bad exponent"))?
                    } else {
                        return Err(err("bad monomial"));
                    };
                    (c, e)
                }
            };
            let coef = BigRational::from_str(coef_str).map_err(|_| err("bad coefficient"))?;
            let mono = CycNum::root_of_unity(level, exp as i64).scale(&coef);
            out = out.add(&mono);
        }
        Ok(out)
    }
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        CycNum::from_str(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn totient_values() {
        let vals = [(1, 1), (2, 1), (3, 2), (4, 2), (6, 2), (8, 4), (9, 6), (12, 4), (16, 8), (36, 12)];
        for (n, p) in vals {
            assert_eq!(euler_phi(n), p, "phi({n})");
            assert_eq!(level_data(n).phi as u32, p, "level table phi({n})");
        }
    }

    #[test]
    fn primitive_root_relations() {
        let i = CycNum::root_of_unity(4, 1);
        assert_eq!(i.mul(&i), CycNum::from_int(-1), "zeta_4^2 = -1");
        let w = CycNum::root_of_unity(3, 1);
        let sum = w.mul(&w).add(&w).add(&CycNum::one(3));
        assert!(sum.is_zero(), "1 + zeta_3 + zeta_3^2 = 0");
        for n in [1u32, 2, 3, 4, 5, 8, 9, 12, 16, 36] {
            assert!(
                CycNum::root_of_unity(n, n as i64).is_one(),
                "zeta_{n}^{n} = 1"
            );
        }
    }

    #[test]
    fn promotion_identifies_common_values() {
        assert_eq!(CycNum::root_of_unity(2, 1), CycNum::root_of_unity(4, 2), "-1 across levels");
        assert_eq!(CycNum::root_of_unity(3, 1), CycNum::root_of_unity(6, 2));
        assert_eq!(CycNum::root_of_unity(6, 3), CycNum::from_int(-1));
        // Mixed-level arithmetic: zeta_4 * zeta_6 = zeta_12^5.
        let prod = CycNum::root_of_unity(4, 1).mul(&CycNum::root_of_unity(6, 1));
        assert_eq!(prod, CycNum::root_of_unity(12, 5));
    }

    #[test]
    fn conjugation_inverts_roots() {
        for n in [3u32, 4, 5, 8, 9, 16] {
            for k in 0..n as i64 {
                let z = CycNum::root_of_unity(n, k);
                assert_eq!(z.conjugate(), CycNum::root_of_unity(n, -k), "conj zeta_{n}^{k}");
                assert!(z.mul(&z.conjugate()).is_one(), "unit modulus zeta_{n}^{k}");
            }
        }
    }

    #[test]
    fn inversion_round_trip() {
        let x = CycNum::one(5)
            .add(&CycNum::root_of_unity(5, 1))
            .add(&CycNum::root_of_unity(5, 4));
        let xi = x.invert().expect("nonzero");
        assert!(x.mul(&xi).is_one(), "x * x^-1 = 1");
        assert!(CycNum::zero(7).invert().is_err(), "zero has no inverse");
    }

    #[test]
    fn rational_detection() {
        let z = CycNum::root_of_unity(4, 2); // equals -1
        assert_eq!(z.as_integer(), Some(BigInt::from(-1)));
        assert_eq!(CycNum::root_of_unity(4, 1).as_rational(), None);
        let half = CycNum::from_ratio(1, 2);
        assert_eq!(half.as_rational(), Some(BigRational::new(1.into(), 2.into())));
    }

    #[test]
    fn display_parse_round_trip() {
        let samples = vec![
            CycNum::zero(8),
            CycNum::one(12),
            CycNum::from_ratio(-3, 2),
            CycNum::root_of_unity(16, 5),
            CycNum::root_of_unity(9, 2)
                .scale(&BigRational::new(7.into(), 3.into()))
                .sub(&CycNum::from_int(2)),
        ];
        for v in samples {
            let s = v.to_string();
            let back: CycNum = s.parse().unwrap_or_else(|e| panic!("parse {s:?}: {e}"));
            assert_eq!(back, v, "round trip through {s:?}");
        }
        let lit: CycNum = "1/2 + -1/2*z^2@8".parse().expect("literal parse");
        assert_eq!(
            lit,
            CycNum::from_ratio(1, 2).sub(&CycNum::root_of_unity(8, 2).scale(&BigRational::new(1.into(), 2.into())))
        );
        assert!("z^2@8".parse::<CycNum>().is_err(), "bare monomial with no coefficient is rejected");
        assert!("1 + 2".parse::<CycNum>().is_err(), "missing level suffix is rejected");
    }

    #[test]
    fn lex_cmp_is_a_total_order_on_samples() {
        let mut vals: Vec<CycNum> = (0..8).map(|k| CycNum::root_of_unity(8, k)).collect();
        vals.push(CycNum::zero(8));
        vals.sort_by(|a, b| a.lex_cmp(b));
        for w in vals.windows(2) {
            assert_ne!(w[0].lex_cmp(&w[1]), Ordering::Greater, "sorted order");
        }
        // Sorting is deterministic: repeat and compare.
        let mut again: Vec<CycNum> = (0..8).rev().map(|k| CycNum::root_of_unity(8, k)).collect();
        again.push(CycNum::zero(8));
        again.sort_by(|a, b| a.lex_cmp(b));
        assert_eq!(vals, again);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn field_axioms_on_random_samples(
            level in 1u32..=24,
            a in proptest::collection::vec(-4i64..=4, 4),
            b in proptest::collection::vec(-4i64..=4, 4),
            c in proptest::collection::vec(-4i64..=4, 4),
        ) {
            let mk = |v: &Vec<i64>| {
                let mut x = CycNum::zero(level);
                for (k, &ci) in v.iter().enumerate() {
                    x = x.add(&CycNum::root_of_unity(level, k as i64).scale(&BigRational::from(BigInt::from(ci))));
                }
                x
            };
            let (x, y, z) = (mk(&a), mk(&b), mk(&c));
            prop_assert_eq!(x.add(&y), y.add(&x));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            prop_assert_eq!(x.sub(&x), CycNum::zero(level));
            if !x.is_zero() {
                let xi = x.invert().expect("nonzero invertible");
                prop_assert!(x.mul(&xi).is_one());
            }
        }
    }
}
