use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num::complex::Complex64;
use num::integer::{gcd, lcm};
use num::traits::{One, Zero};
use num::{BigInt, BigRational, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::poly::RatPoly;
use super::ExactError;
use crate::linalg;

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = BigRational;

/// Per-conductor data: the cyclotomic polynomial and every power of ζ
/// reduced into the power basis.
#[derive(Debug)]
struct CyclotomicField {
    degree: usize,
    /// Φ_N, lowest coefficient first, monic.
    modulus: Vec<BigInt>,
    /// ζ^k for k in 0..N, each of length `degree`.
    powers: Vec<Vec<BigInt>>,
}

impl CyclotomicField {
    fn build(n: u32) -> Self {
        let modulus = cyclotomic_polynomial(n);
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce the overflow term
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for (c, m) in cur.iter_mut().zip(&modulus) {
                    *c -= &top * m;
                }
            }
        }
        CyclotomicField { degree, modulus, powers }
    }
}

fn field(n: u32) -> Arc<CyclotomicField> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
    assert!(n > 0, "conductor must be positive");
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.read().expect("cyclotomic cache poisoned").get(&n) {
        return Arc::clone(f);
    }
    // Built outside the lock: construction recurses into smaller conductors.
    let built = Arc::new(CyclotomicField::build(n));
    let mut guard = cache.write().expect("cyclotomic cache poisoned");
    Arc::clone(guard.entry(n).or_insert(built))
}

/// Φ_n by exact division of x^n - 1 by Φ_d for every proper divisor d of n.
fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in (1..n).filter(|&d| n.is_multiple_of(d)) {
        num = exact_div_monic(&num, &field(d).modulus);
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "cyclotomic division left a remainder");
    quot
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}

/// An element of the cyclotomic field Q(ζ_N) in the power basis
/// {1, ζ, …, ζ^{φ(N)-1}} modulo Φ_N.
///
/// The representation is canonical for a fixed conductor. Values are never
/// moved down to a smaller conductor; binary operations lift both operands to
/// the lcm of their conductors.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawCycNum", into = "RawCycNum")]
pub struct CycNum {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl CycNum {
    pub fn zero_in(conductor: u32) -> Self {
        let f = field(conductor);
        CycNum { conductor, coeffs: vec![Rational::zero(); f.degree] }
    }

    pub fn from_rational(q: Rational) -> Self {
        CycNum { conductor: 1, coeffs: vec![q] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num.into(), den.into()))
    }

    /// Builds an element from explicit power-basis coefficients.
    pub fn from_coeffs(conductor: u32, coeffs: Vec<Rational>) -> Result<Self, ExactError> {
        if conductor == 0 {
            return Err(ExactError::ZeroConductor);
        }
        let degree = field(conductor).degree;
        if coeffs.len() != degree {
            return Err(ExactError::CoefficientLength { conductor, expected: degree, found: coeffs.len() });
        }
        Ok(CycNum { conductor, coeffs })
    }

    /// ζ_n^k, reduced into Q(ζ_n).
    pub fn zeta_power(n: u32, k: i64) -> Self {
        let f = field(n);
        let e = k.rem_euclid(n as i64) as usize;
        let coeffs = f.powers[e].iter().map(|c| Rational::from_integer(c.clone())).collect();
        CycNum { conductor: n, coeffs }
    }

    /// The primitive root ζ_n = exp(2πi/n).
    pub fn zeta(n: u32) -> Self {
        Self::zeta_power(n, 1)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then(|| &self.coeffs[0])
    }

    /// Whether this is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Image under the embedding Q(ζ_N) → Q(ζ_M), ζ_N ↦ ζ_M^{M/N}.
    pub fn change_conductor(&self, m: u32) -> Result<CycNum, ExactError> {
        if m == 0 || !m.is_multiple_of(self.conductor) {
            return Err(ExactError::ConductorNotDivisible { from: self.conductor, to: m });
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let step = (m / self.conductor) as usize;
        let target = field(m);
        let mut out = vec![Rational::zero(); target.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            accumulate_power(&mut out, c, &target.powers[(i * step) % m as usize]);
        }
        Ok(CycNum { conductor: m, coeffs: out })
    }

    fn lifted(&self, m: u32) -> CycNum {
        self.change_conductor(m).expect("lift target is a multiple of the conductor")
    }

    fn aligned(a: &CycNum, b: &CycNum) -> (CycNum, CycNum) {
        if a.conductor == b.conductor {
            return (a.clone(), b.clone());
        }
        let m = lcm(a.conductor, b.conductor);
        (a.lifted(m), b.lifted(m))
    }

    /// Complex conjugation, ζ ↦ ζ^{N-1}.
    pub fn conjugate(&self) -> CycNum {
        let n = self.conductor as usize;
        let f = field(self.conductor);
        let mut out = vec![Rational::zero(); f.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                accumulate_power(&mut out, c, &f.powers[(n - i) % n]);
            }
        }
        CycNum { conductor: self.conductor, coeffs: out }
    }

    pub fn scale(&self, q: &Rational) -> CycNum {
        CycNum { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn scale_int(&self, n: i64) -> CycNum {
        let q = Rational::from_integer(n.into());
        self.scale(&q)
    }

    fn mul_same(&self, other: &CycNum) -> CycNum {
        debug_assert_eq!(self.conductor, other.conductor);
        let f = field(self.conductor);
        let d = f.degree;
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        let mut prod = vec![Rational::zero(); 2 * d - 1];
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
        for k in (d..prod.len()).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for (m, coef) in f.modulus[..d].iter().enumerate() {
                prod[k - d + m] -= &c * Rational::from_integer(coef.clone());
            }
        }
        prod.truncate(d);
        CycNum { conductor: self.conductor, coeffs: prod }
    }

    /// Matrix of multiplication by `self` on the power basis (column k is
    /// `self * ζ^k`).
    pub fn multiplication_matrix(&self) -> Vec<Vec<Rational>> {
        let f = field(self.conductor);
        let d = f.degree;
        let columns: Vec<CycNum> =
            (0..d).map(|k| self.mul_same(&CycNum::zeta_power(self.conductor, k as i64))).collect();
        (0..d).map(|i| columns.iter().map(|c| c.coeffs[i].clone()).collect()).collect()
    }

    pub fn inverse(&self) -> Result<CycNum, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            let inv = q.recip();
            let mut coeffs = vec![Rational::zero(); self.coeffs.len()];
            coeffs[0] = inv;
            return Ok(CycNum { conductor: self.conductor, coeffs });
        }
        let m = self.multiplication_matrix();
        let mut e0 = vec![Rational::zero(); m.len()];
        e0[0] = Rational::one();
        let coeffs = linalg::solve(&m, &e0).ok_or(ExactError::DivisionByZero)?;
        Ok(CycNum { conductor: self.conductor, coeffs })
    }

    pub fn checked_div(&self, other: &CycNum) -> Result<CycNum, ExactError> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, e: u32) -> CycNum {
        (0..e).fold(CycNum::one(), |acc, _| &acc * self)
    }

    /// Evaluates the representing polynomial at exp(2πi/N).
    pub fn embed_complex(&self) -> Complex64 {
        let n = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let angle = 2.0 * std::f64::consts::PI * k as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }

    /// Characteristic polynomial of multiplication-by-`self` on Q(ζ_N).
    pub fn characteristic_polynomial(&self) -> RatPoly {
        if let Some(q) = self.as_rational() {
            // (x - q)^φ(N)
            let linear = RatPoly::new(vec![-q.clone(), Rational::one()]);
            return (0..self.coeffs.len()).fold(RatPoly::one(), |acc, _| acc.mul(&linear));
        }
        RatPoly::new(linalg::char_poly(&self.multiplication_matrix()))
    }

    /// Monic minimal polynomial over Q: the squarefree part of the
    /// characteristic polynomial.
    pub fn minimal_polynomial(&self) -> RatPoly {
        self.characteristic_polynomial().squarefree_part()
    }

    /// Membership in the ring of algebraic integers.
    pub fn is_algebraic_integer(&self) -> bool {
        // Z[ζ_N] is the full ring of integers, so integer coordinates settle it
        if self.coeffs.iter().all(Rational::is_integer) {
            return true;
        }
        let by_charpoly = self.characteristic_polynomial().is_integral();
        if cfg!(debug_assertions) && self.coeffs.len() <= 16 {
            let by_minpoly = self.minimal_polynomial().is_integral();
            assert_eq!(
                by_charpoly, by_minpoly,
                "integrality criteria disagree for {self}: charpoly {by_charpoly}, minpoly {by_minpoly}"
            );
        }
        by_charpoly
    }

    /// Short decimal rendering of the complex embedding.
    pub fn approx_string(&self) -> String {
        let z = self.embed_complex();
        let clean = |x: f64| if x.abs() < 5e-10 { 0.0 } else { x };
        let (re, im) = (clean(z.re), clean(z.im));
        if im == 0.0 {
            format!("{re:.6}")
        } else {
            format!("{re:.6}{im:+.6}i")
        }
    }
}

fn accumulate_power(out: &mut [Rational], c: &Rational, power: &[BigInt]) {
    for (o, p) in out.iter_mut().zip(power) {
        if !p.is_zero() {
            *o += c * Rational::from_integer(p.clone());
        }
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = CycNum::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNum {}

impl Zero for CycNum {
    fn zero() -> Self {
        CycNum::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for CycNum {
    fn one() -> Self {
        CycNum::from_int(1)
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::from_int(n)
    }
}

impl From<Rational> for CycNum {
    fn from(q: Rational) -> Self {
        CycNum::from_rational(q)
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        let (a, b) = CycNum::aligned(self, rhs);
        let coeffs = a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| x + y).collect();
        CycNum { conductor: a.conductor, coeffs }
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        let (a, b) = CycNum::aligned(self, rhs);
        let coeffs = a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| x - y).collect();
        CycNum { conductor: a.conductor, coeffs }
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        if self.conductor == rhs.conductor {
            return self.mul_same(rhs);
        }
        let (a, b) = CycNum::aligned(self, rhs);
        a.mul_same(&b)
    }
}

impl<'a> Div<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    /// Panics on a zero divisor; use [`CycNum::checked_div`] to get an error.
    fn div(self, rhs: &CycNum) -> CycNum {
        self.checked_div(rhs).expect("division by zero in Q(ζ_N)")
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

macro_rules! owned_binop {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
    )*};
}

owned_binop!(Add::add, Sub::sub, Mul::mul, Div::div);

impl std::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a CycNum> for CycNum {
    fn sum<I: Iterator<Item = &'a CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::zero(), |acc, x| &acc + x)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                if abs.is_integer() {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "({abs})")?;
                }
            }
            write!(f, "ζ{}", self.conductor)?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

/// Integer that serializes as a JSON number when it fits in an i64 and as a
/// decimal string otherwise.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
enum WireInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for WireInt {
    fn from(n: &BigInt) -> Self {
        n.to_i64().map_or_else(|| WireInt::Big(n.to_string()), WireInt::Small)
    }
}

impl TryFrom<&WireInt> for BigInt {
    type Error = ExactError;
    fn try_from(w: &WireInt) -> Result<Self, ExactError> {
        match w {
            WireInt::Small(n) => Ok(BigInt::from(*n)),
            WireInt::Big(s) => s.parse().map_err(|_| ExactError::Malformed(format!("not an integer: {s:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawCycNum {
    conductor: u32,
    coeffs: Vec<[WireInt; 2]>,
}

impl From<CycNum> for RawCycNum {
    fn from(c: CycNum) -> Self {
        let coeffs = c.coeffs.iter().map(|q| [WireInt::from(q.numer()), WireInt::from(q.denom())]).collect();
        RawCycNum { conductor: c.conductor, coeffs }
    }
}

impl TryFrom<RawCycNum> for CycNum {
    type Error = ExactError;
    fn try_from(raw: RawCycNum) -> Result<Self, ExactError> {
        let coeffs = raw
            .coeffs
            .iter()
            .map(|[n, d]| {
                let n = BigInt::try_from(n)?;
                let d = BigInt::try_from(d)?;
                if d.is_zero() {
                    return Err(ExactError::Malformed("zero denominator".into()));
                }
                Ok(Rational::new(n, d))
            })
            .collect::<Result<Vec<_>, _>>()?;
        CycNum::from_coeffs(raw.conductor, coeffs)
    }
}
