use std::fmt;

use num::traits::{One, Zero};
use num::{BigInt, BigRational, Signed};

use super::CycNum;

/// Polynomial over Q, lowest coefficient first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

/// Polynomial over Z with nonzero leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn one() -> Self {
        RatPoly { coeffs: vec![BigRational::one()] }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn monic(&self) -> RatPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => RatPoly::new(self.coeffs.iter().map(|c| c / lead).collect()),
        }
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::new(Vec::new());
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (RatPoly::new(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self')`, made monic.
    pub fn squarefree_part(&self) -> RatPoly {
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    pub fn to_int_poly(&self) -> Option<IntPoly> {
        if self.is_zero() || !self.is_integral() {
            return None;
        }
        Some(IntPoly { coeffs: self.coeffs.iter().map(BigRational::to_integer).collect() })
    }

    /// Horner evaluation in Q(ζ_N).
    pub fn eval(&self, x: &CycNum) -> CycNum {
        self.coeffs
            .iter()
            .rev()
            .fold(CycNum::zero_in(x.conductor()), |acc, c| &(&acc * x) + &CycNum::from_rational(c.clone()))
    }
}

impl IntPoly {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }
}

fn write_terms<T, F>(f: &mut fmt::Formatter<'_>, coeffs: &[T], split: F) -> fmt::Result
where
    F: Fn(&T) -> Option<(bool, String, bool)>,
{
    // split returns (negative, |c| rendered, |c| == 1) or None for zero
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate().rev() {
        let Some((neg, abs, unit)) = split(c) else { continue };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        match k {
            0 => write!(f, "{abs}")?,
            _ => {
                if !unit {
                    write!(f, "{abs}")?;
                }
                write!(f, "x")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, |c| {
            if c.is_zero() {
                return None;
            }
            let abs = c.abs();
            let text = if abs.is_integer() { abs.to_string() } else { format!("({abs})") };
            Some((c.is_negative(), text, abs.is_one()))
        })
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, |c| {
            (!c.is_zero()).then(|| (c.is_negative(), c.abs().to_string(), c.abs().is_one()))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> RatPoly {
        RatPoly::new(cs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    #[test]
    fn squarefree_part_of_power() {
        // (x^2 - 2)^2 = x^4 - 4x^2 + 4
        assert_eq!(p(&[4, 0, -4, 0, 1]).squarefree_part(), p(&[-2, 0, 1]));
        // (x - 1)^3 (x + 1)
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[-1, 1])).mul(&p(&[1, 1]));
        assert_eq!(f.squarefree_part(), p(&[-1, 0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, -1, 1]).to_string(), "x^2 - x - 1");
        assert_eq!(p(&[0]).to_string(), "0");
        let half = RatPoly::new(vec![BigRational::new(1.into(), 2.into()), BigRational::one()]);
        assert_eq!(half.to_string(), "x + (1/2)");
        assert!(half.to_int_poly().is_none());
        let ip = p(&[5, -5, 1]).to_int_poly().unwrap();
        assert!(ip.is_monic());
        assert_eq!(ip.to_string(), "x^2 - 5x + 5");
    }
}
