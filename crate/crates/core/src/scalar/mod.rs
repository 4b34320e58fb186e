//! Exact arithmetic in the coefficient field `Q(q)` of rational functions in
//! one indeterminate `q`, plus q-Pochhammer symbols.
//!
//! Every scalar in the engine is a [`QRat`]: a reduced fraction of two
//! [`QPoly`] with a monic denominator. Canonical form makes equality a
//! structural check, which every verification suite relies on.

mod poly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use poly::QPoly;

/// A rational function in `q` with rational coefficients.
///
/// Invariants: the denominator is nonzero and monic, the fraction is reduced
/// (`gcd(num, den) = 1`), and zero is uniquely `0/1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    /// Build and canonicalize `num / den`. Fails on a zero denominator.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return QRat::zero();
        }
        if den.is_one() {
            return QRat { num, den };
        }
        let g = QPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        // Normalize the denominator to be monic.
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            QRat { num, den }
        } else {
            let inv = BigRational::one() / lead;
            QRat {
                num: num.mul_scalar(&inv),
                den: den.mul_scalar(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRat {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    pub fn from_int(k: i64) -> Self {
        QRat {
            num: QPoly::from_int(k),
            den: QPoly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        QRat {
            num: QPoly::constant(c),
            den: QPoly::one(),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRat {
            num: p,
            den: QPoly::one(),
        }
    }

    /// `q^k` for any integer `k`, negative powers landing in the denominator.
    pub fn q_power(k: i64) -> Self {
        if k >= 0 {
            QRat {
                num: QPoly::q_power(k as usize),
                den: QPoly::one(),
            }
        } else {
            QRat {
                num: QPoly::one(),
                den: QPoly::q_power((-k) as usize),
            }
        }
    }

    /// `q` itself.
    pub fn q() -> Self {
        QRat::q_power(1)
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// If this scalar is exactly `q^k` for some integer `k`, return `k`.
    pub fn as_pure_q_power(&self) -> Option<i64> {
        let lead_one = |p: &QPoly| p.is_monomial() && p.leading().is_some_and(|c| c.is_one());
        if !lead_one(&self.num) || !lead_one(&self.den) {
            return None;
        }
        Some(self.num.degree().unwrap() as i64 - self.den.degree().unwrap() as i64)
    }

    pub fn checked_inv(&self) -> Result<QRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &QRat) -> Result<QRat> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &other.checked_inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn checked_pow(&self, k: i64) -> Result<QRat> {
        let base = if k < 0 { self.checked_inv()? } else { self.clone() };
        let mut acc = QRat::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, other: &QRat) -> QRat {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return QRat {
                num: self.num.add(&other.num),
                den: QPoly::one(),
            };
        }
        if self.den == other.den {
            return QRat::reduce(self.num.add(&other.num), self.den.clone());
        }
        // Work against gcd(b, d) instead of the full product denominator:
        // with both inputs reduced, a/b + c/d = (a(d/g) + c(b/g)) / (b(d/g))
        // needs only a reduction against the small cofactor g.
        let g = QPoly::gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            // Coprime denominators of reduced fractions: already reduced.
            return QRat { num, den };
        }
        let d_over_g = other.den.div_rem(&g).0;
        let b_over_g = self.den.div_rem(&g).0;
        let t = self.num.mul(&d_over_g).add(&other.num.mul(&b_over_g));
        if t.is_zero() {
            return QRat::zero();
        }
        let g2 = QPoly::gcd(&t, &g);
        if g2.is_one() {
            return QRat {
                num: t,
                den: self.den.mul(&d_over_g),
            };
        }
        QRat {
            num: t.div_rem(&g2).0,
            den: b_over_g.mul(&other.den.div_rem(&g2).0),
        }
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, other: &QRat) -> QRat {
        self + &(-other)
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, other: &QRat) -> QRat {
        if self.is_zero() || other.is_zero() {
            return QRat::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return QRat {
                num: self.num.mul(&other.num),
                den: QPoly::one(),
            };
        }
        // Cross-reduce before multiplying to keep intermediates small.
        let g1 = QPoly::gcd(&self.num, &other.den);
        let g2 = QPoly::gcd(&other.num, &self.den);
        let n1 = if g1.is_one() { self.num.clone() } else { self.num.div_rem(&g1).0 };
        let d2 = if g1.is_one() { other.den.clone() } else { other.den.div_rem(&g1).0 };
        let n2 = if g2.is_one() { other.num.clone() } else { other.num.div_rem(&g2).0 };
        let d1 = if g2.is_one() { self.den.clone() } else { self.den.div_rem(&g2).0 };
        QRat::reduce(n1.mul(&n2), d1.mul(&d2))
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

/// Panics on division by zero; use [`QRat::checked_div`] where the divisor is
/// not known to be nonzero.
impl Div for &QRat {
    type Output = QRat;
    fn div(self, other: &QRat) -> QRat {
        self.checked_div(other).expect("division by zero in Q(q)")
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QRat {
            type Output = QRat;
            fn $method(self, other: QRat) -> QRat {
                (&self).$method(&other)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // Stored monic; print with the denominator's lowest nonzero
        // coefficient positive, e.g. `1 - q^2` instead of `-1 + q^2`.
        let flip = self
            .den
            .coeffs()
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(num_traits::Signed::is_negative);
        if flip {
            write!(f, "({})/({})", self.num.neg(), self.den.neg())
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// The q-Pochhammer symbol `(x; y)_k = prod_{i=0}^{k-1} (1 - x y^i)`.
pub fn pochhammer(x: &QRat, y: &QRat, k: usize) -> QRat {
    let one = QRat::one();
    let mut acc = QRat::one();
    let mut yi = QRat::one();
    for _ in 0..k {
        acc = &acc * &(&one - &(x * &yi));
        yi = &yi * y;
    }
    acc
}

/// `(q^2; q^2)_k`, the denominator of the k-th psi-series coefficient.
pub fn qq_factorial(k: usize) -> QRat {
    let q2 = QRat::q_power(2);
    pochhammer(&q2, &q2, k)
}

/// Rational constant `a/b`.
pub fn ratio(a: i64, b: i64) -> QRat {
    QRat::from_rational(BigRational::new(BigInt::from(a), BigInt::from(b)))
}
