//! Dense univariate polynomials in `q` with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial in `q` over the rationals, stored densely by ascending degree.
///
/// Invariant: the coefficient vector never ends in a zero, so the zero
/// polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    pub fn from_int(k: i64) -> Self {
        QPoly::constant(BigRational::from_integer(BigInt::from(k)))
    }

    /// `c * q^deg`.
    pub fn monomial(deg: usize, c: BigRational) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        QPoly { coeffs }
    }

    /// `q^deg`.
    pub fn q_power(deg: usize) -> Self {
        QPoly::monomial(deg, BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// True when the only nonzero coefficient is the leading one.
    pub fn is_monomial(&self) -> bool {
        !self.coeffs.is_empty()
            && self.coeffs[..self.coeffs.len() - 1].iter().all(|c| c.is_zero())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        QPoly::new(out)
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        QPoly::new(out)
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn mul_scalar(&self, c: &BigRational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![
            BigRational::zero();
            self.coeffs.len().saturating_sub(divisor.coeffs.len()) + 1
        ];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() / &lead;
            let shift = rd - dd;
            quot[shift] = factor.clone();
            // rem -= factor * q^shift * divisor
            let mut coeffs = rem.coeffs;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[shift + j] -= &factor * b;
                }
            }
            rem = QPoly::new(coeffs);
        }
        (QPoly::new(quot), rem)
    }

    /// Divide by leading coefficient; zero stays zero.
    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = BigRational::one() / l;
                self.mul_scalar(&inv)
            }
        }
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        // A nonzero constant divides everything.
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return QPoly::one();
        }
        let mut x = a.monic();
        let mut y = b.monic();
        while !y.is_zero() {
            if y.degree() == Some(0) {
                return QPoly::one();
            }
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r.monic();
        }
        x
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                if k == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{k}")?;
                }
            } else if k == 1 {
                write!(f, "{mag}*q")?;
            } else {
                write!(f, "{mag}*q^{k}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ints: &[i64]) -> QPoly {
        QPoly::new(
            ints.iter()
                .map(|&k| BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn long_division_exact() {
        // (1 - q^4) / (1 - q^2) = 1 + q^2
        let (q, r) = p(&[1, 0, 0, 0, -1]).div_rem(&p(&[1, 0, -1]));
        assert!(r.is_zero());
        assert_eq!(q, p(&[1, 0, 1]));
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        // gcd((1-q^2)(1+q), (1-q^2)) = (1-q^2) up to normalization
        let a = p(&[1, 0, -1]).mul(&p(&[1, 1]));
        let b = p(&[1, 0, -1]);
        let g = QPoly::gcd(&a, &b);
        assert!(g.is_monic());
        let (_, r1) = a.div_rem(&g);
        let (_, r2) = b.div_rem(&g);
        assert!(r1.is_zero() && r2.is_zero());
        assert_eq!(g.degree(), Some(2));
    }

    #[test]
    fn display_matches_expected_form() {
        assert_eq!(p(&[1, 0, -1]).to_string(), "1 - q^2");
        assert_eq!(p(&[0, 2]).to_string(), "2*q");
        assert_eq!(p(&[-1, 1]).to_string(), "-1 + q");
    }
}
