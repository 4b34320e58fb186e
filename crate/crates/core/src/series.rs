//! Truncated multivariate formal power series in named spectral parameters
//! with operator coefficients.
//!
//! A [`PSeries`] keeps one canonical [`OpSum`] per parameter-exponent vector
//! of total degree at most the cap. Multiplication is the noncommutative
//! Cauchy product with total-degree truncation; equality is coefficientwise
//! equality of canonical operator sums.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::monop::{make_generator, Generator, IndexMap, MonOp, OpSum};
use crate::scalar::{qq_factorial, QRat};

/// Composition order for [`ordered_product`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `a_1 a_2 ... a_n`
    Up,
    /// `a_n a_(n-1) ... a_1`
    Down,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PSeries {
    params: Vec<String>,
    cap: usize,
    arity: usize,
    coeffs: BTreeMap<Vec<u32>, OpSum>,
}

impl PSeries {
    pub fn zero(params: &[&str], cap: usize, arity: usize) -> Self {
        PSeries {
            params: params.iter().map(|s| s.to_string()).collect(),
            cap,
            arity,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant series `1` (identity operator at order zero).
    pub fn one(params: &[&str], cap: usize, arity: usize) -> Self {
        PSeries::from_opsum(params, cap, OpSum::identity(arity))
    }

    /// A constant series with the given order-zero coefficient.
    pub fn from_opsum(params: &[&str], cap: usize, op: OpSum) -> Self {
        let mut s = PSeries::zero(params, cap, op.arity());
        s.set_coeff(vec![0; s.params.len()], op);
        s
    }

    /// A single term `x^expo * op`.
    pub fn term(params: &[&str], cap: usize, expo: Vec<u32>, op: OpSum) -> Result<Self> {
        if expo.len() != params.len() {
            return Err(Error::ParamMismatch);
        }
        let mut s = PSeries::zero(params, cap, op.arity());
        if degree(&expo) <= cap {
            s.set_coeff(expo, op);
        }
        Ok(s)
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn coeff(&self, expo: &[u32]) -> Option<&OpSum> {
        self.coeffs.get(expo)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Vec<u32>, &OpSum)> {
        self.coeffs.iter()
    }

    /// Total number of stored operator terms across all orders.
    pub fn total_terms(&self) -> usize {
        self.coeffs.values().map(|c| c.term_count()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn set_coeff(&mut self, expo: Vec<u32>, op: OpSum) {
        if !op.is_zero() {
            self.coeffs.insert(expo, op);
        }
    }

    fn merge_coeff(&mut self, expo: Vec<u32>, op: &OpSum) -> Result<()> {
        match self.coeffs.entry(expo) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !op.is_zero() {
                    e.insert(op.clone());
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(op)?;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    fn check_compatible(&self, other: &PSeries) -> Result<()> {
        if self.params != other.params {
            return Err(Error::ParamMismatch);
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        Ok(())
    }

    pub fn add(&self, other: &PSeries) -> Result<PSeries> {
        self.check_compatible(other)?;
        let cap = self.cap.min(other.cap);
        let mut out = PSeries::zero(&as_strs(&self.params), cap, self.arity);
        for (e, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if degree(e) <= cap {
                out.merge_coeff(e.clone(), c)?;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PSeries) -> Result<PSeries> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PSeries {
        PSeries {
            params: self.params.clone(),
            cap: self.cap,
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &QRat) -> PSeries {
        if c.is_zero() {
            return PSeries {
                params: self.params.clone(),
                cap: self.cap,
                arity: self.arity,
                coeffs: BTreeMap::new(),
            };
        }
        PSeries {
            params: self.params.clone(),
            cap: self.cap,
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|(e, x)| (e.clone(), x.scale(c))).collect(),
        }
    }

    /// Noncommutative Cauchy product truncated at `min(cap, cap)`.
    pub fn mul(&self, other: &PSeries) -> Result<PSeries> {
        self.check_compatible(other)?;
        let cap = self.cap.min(other.cap);
        let mut out = PSeries::zero(&as_strs(&self.params), cap, self.arity);
        for (ea, ca) in &self.coeffs {
            let da = degree(ea);
            if da > cap {
                continue;
            }
            for (eb, cb) in &other.coeffs {
                if da + degree(eb) > cap {
                    continue;
                }
                let expo: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.merge_coeff(expo, &ca.compose(cb)?)?;
            }
        }
        Ok(out)
    }

    /// Left-multiply every coefficient by an operator.
    pub fn lmul_op(&self, op: &OpSum) -> Result<PSeries> {
        let mut out = PSeries::zero(&as_strs(&self.params), self.cap, self.arity);
        for (e, c) in &self.coeffs {
            out.merge_coeff(e.clone(), &op.compose(c)?)?;
        }
        Ok(out)
    }

    /// Right-multiply every coefficient by an operator.
    pub fn rmul_op(&self, op: &OpSum) -> Result<PSeries> {
        let mut out = PSeries::zero(&as_strs(&self.params), self.cap, self.arity);
        for (e, c) in &self.coeffs {
            out.merge_coeff(e.clone(), &c.compose(op)?)?;
        }
        Ok(out)
    }

    /// Parameter substitution; every image must be zero or a monomial of
    /// degree at least one, so truncation is stable.
    pub fn subst(&self, s: &ParamSubst) -> Result<PSeries> {
        if s.images.len() != self.params.len() {
            return Err(Error::ParamMismatch);
        }
        let mut out = PSeries::zero(&as_strs(&self.params), self.cap, self.arity);
        'term: for (e, c) in &self.coeffs {
            let mut expo = vec![0u32; self.params.len()];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match &s.images[i] {
                    ParamImage::Zero => continue 'term,
                    ParamImage::Monomial(m) => {
                        for (x, &mk) in expo.iter_mut().zip(m) {
                            *x += k * mk;
                        }
                    }
                }
            }
            if degree(&expo) <= self.cap {
                out.merge_coeff(expo, c)?;
            }
        }
        Ok(out)
    }

    /// Raise the truncation cap (new orders are absent, not computed).
    pub fn with_cap(&self, cap: usize) -> PSeries {
        let mut s = self.clone();
        s.cap = cap;
        s.coeffs.retain(|e, _| degree(e) <= cap);
        s
    }

    /// Multiplicative inverse of a truncated series whose constant term is a
    /// single invertible monomial operator: writing the series as
    /// `c0 (1 + N)` with `N` of positive order, the inverse is
    /// `(sum_k (-N)^k) c0^-1` up to the cap.
    pub fn inverse(&self) -> Result<PSeries> {
        let params = as_strs(&self.params);
        let zero_expo = vec![0u32; self.params.len()];
        let c0 = self.coeff(&zero_expo).ok_or_else(|| {
            Error::NotInvertible("series with zero constant term".into())
        })?;
        if c0.term_count() != 1 {
            return Err(Error::NotInvertible(
                "constant term is not a single monomial operator".into(),
            ));
        }
        let c0_inv = OpSum::from(c0.terms().next().unwrap().inverse()?);
        let neg_n = PSeries::one(&params, self.cap, self.arity)
            .sub(&self.lmul_op(&c0_inv)?)?;
        let mut acc = PSeries::one(&params, self.cap, self.arity);
        let mut power = PSeries::one(&params, self.cap, self.arity);
        for _ in 1..=self.cap {
            power = power.mul(&neg_n)?;
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power)?;
        }
        acc.rmul_op(&c0_inv)
    }

    /// Embed every coefficient into a larger variable space.
    pub fn embed(&self, map: &IndexMap) -> Result<PSeries> {
        let mut out = PSeries::zero(&as_strs(&self.params), self.cap, map.target_arity());
        for (e, c) in &self.coeffs {
            out.merge_coeff(e.clone(), &c.embed(map)?)?;
        }
        Ok(out)
    }

    /// Trace out one variable slot in every coefficient.
    pub fn partial_trace(&self, slot: usize) -> Result<PSeries> {
        let mut out = PSeries::zero(&as_strs(&self.params), self.cap, self.arity - 1);
        for (e, c) in &self.coeffs {
            out.merge_coeff(e.clone(), &c.partial_trace(slot)?)?;
        }
        Ok(out)
    }
}

impl PSeries {
    /// Report rendering: one line per stored order with the term count, and
    /// optionally the full operator sum.
    pub fn render(&self, full: bool) -> String {
        use std::fmt::Write as _;
        if self.is_zero() {
            return "0\n".to_string();
        }
        let mut out = String::new();
        for (e, c) in &self.coeffs {
            let _ = write!(out, "[");
            for (i, (name, k)) in self.params.iter().zip(e).enumerate() {
                if i > 0 {
                    let _ = write!(out, " ");
                }
                let _ = write!(out, "{name}^{k}");
            }
            let _ = writeln!(out, "] {} term(s)", c.term_count());
            if full {
                let _ = writeln!(out, "    {c}");
            }
        }
        out
    }
}

impl fmt::Display for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

fn degree(e: &[u32]) -> usize {
    e.iter().map(|&k| k as usize).sum()
}

fn as_strs(params: &[String]) -> Vec<&str> {
    params.iter().map(|s| s.as_str()).collect()
}

/// Per-parameter image of a substitution: zero or a monomial in the same
/// parameter list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamImage {
    Zero,
    Monomial(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSubst {
    images: Vec<ParamImage>,
}

impl ParamSubst {
    /// Validates that every monomial image has degree >= 1 and matching width.
    pub fn new(params: &[String], images: Vec<ParamImage>) -> Result<Self> {
        if images.len() != params.len() {
            return Err(Error::ParamMismatch);
        }
        for (i, im) in images.iter().enumerate() {
            if let ParamImage::Monomial(m) = im {
                if m.len() != params.len() {
                    return Err(Error::ParamMismatch);
                }
                if m.iter().all(|&k| k == 0) {
                    return Err(Error::DegreeDecreasing(params[i].clone()));
                }
            }
        }
        Ok(ParamSubst { images })
    }

    pub fn identity(nparams: usize) -> Self {
        ParamSubst {
            images: (0..nparams)
                .map(|i| {
                    let mut m = vec![0; nparams];
                    m[i] = 1;
                    ParamImage::Monomial(m)
                })
                .collect(),
        }
    }

    /// Cyclic rotation `x_i -> x_(i-1)` (indices mod the block size), applied
    /// to the parameter block starting at `offset` of width `n`; other
    /// parameters are fixed. Evaluating a series at the rotated vector
    /// `tau(x) = (x_n, x_1, ..., x_(n-1))` is exactly this substitution.
    pub fn rotation_block(nparams: usize, offset: usize, n: usize) -> Self {
        let mut images = Vec::with_capacity(nparams);
        for i in 0..nparams {
            let target = if i >= offset && i < offset + n {
                let j = (i - offset + n - 1) % n;
                offset + j
            } else {
                i
            };
            let mut m = vec![0; nparams];
            m[target] = 1;
            images.push(ParamImage::Monomial(m));
        }
        ParamSubst { images }
    }

    /// Send one parameter to zero, fix the rest.
    pub fn zero_at(nparams: usize, index: usize) -> Self {
        let mut s = ParamSubst::identity(nparams);
        s.images[index] = ParamImage::Zero;
        s
    }
}

/// The q-exponential series of a decorated operator:
/// `psi(x^expo * m) = sum_k (x^expo)^k (-m)^k / (q^2; q^2)_k`,
/// truncated at total degree `cap`. The order-zero coefficient is the
/// identity.
pub fn psi_series(params: &[&str], cap: usize, expo: &[u32], m: &OpSum) -> Result<PSeries> {
    if expo.len() != params.len() {
        return Err(Error::ParamMismatch);
    }
    let deg = degree(expo);
    if deg == 0 {
        return Err(Error::ZeroParamMonomial);
    }
    let mut out = PSeries::zero(params, cap, m.arity());
    let mut mk = OpSum::identity(m.arity());
    let mut k = 0usize;
    while k * deg <= cap {
        if k > 0 {
            mk = mk.compose(m)?;
        }
        let sign = if k % 2 == 0 { QRat::one() } else { -&QRat::one() };
        let scalar = sign.checked_div(&qq_factorial(k))?;
        let e: Vec<u32> = expo.iter().map(|&x| x * k as u32).collect();
        out.set_coeff(e, mk.scale(&scalar));
        k += 1;
    }
    Ok(out)
}

/// Ordered product of series factors in the stated direction.
pub fn ordered_product(factors: &[PSeries], direction: Direction) -> Result<PSeries> {
    let mut iter: Box<dyn Iterator<Item = &PSeries>> = match direction {
        Direction::Up => Box::new(factors.iter()),
        Direction::Down => Box::new(factors.iter().rev()),
    };
    let first = iter
        .next()
        .ok_or_else(|| Error::Invariant("ordered product of no factors".into()))?;
    let mut acc = first.clone();
    for f in iter {
        acc = acc.mul(f)?;
    }
    Ok(acc)
}

/// The monomial argument of the B-operator's q-exponential:
/// `v_1 u_1^-1 u_2 u_3^-1 v_3^-1` on three variables.
pub fn b_psi_argument() -> MonOp {
    let g = |k: Generator, s: usize| make_generator(k, &[s], 3).unwrap();
    g(Generator::V, 1)
        .compose(&g(Generator::UInv, 1))
        .unwrap()
        .compose(&g(Generator::U, 2))
        .unwrap()
        .compose(&g(Generator::UInv, 3))
        .unwrap()
        .compose(&g(Generator::VInv, 3))
        .unwrap()
}

/// The three-variable solution of the spectral tetrahedron equation,
/// embedded at the given 1-based slots of an `arity`-variable space:
/// `B = F psi(x^expo * v1 u1^-1 u2 u3^-1 v3^-1)`.
pub fn build_b(
    params: &[&str],
    cap: usize,
    arity: usize,
    slots: &[usize; 3],
    expo: &[u32],
) -> Result<PSeries> {
    let map = IndexMap::new(arity, slots)?;
    let f = OpSum::from(make_generator(Generator::F, slots, arity)?);
    let arg = OpSum::from(b_psi_argument().embed(&map)?);
    psi_series(params, cap, expo, &arg)?.lmul_op(&f)
}

/// Per-factor spectral decoration of a monodromy factor: a parameter
/// monomial, or zero (which collapses the factor to its constant term `F`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorParam {
    Zero,
    Monomial(Vec<u32>),
}

/// The three-dimensional monodromy operator: the descending ordered product
/// of B-factors indexed `i = n..1`, factor `i` acting on the slot triple
/// `slot_triples[i-1]` with decoration `factor_params[i-1]`.
pub fn build_b_tilde(
    params: &[&str],
    cap: usize,
    arity: usize,
    slot_triples: &[[usize; 3]],
    factor_params: &[FactorParam],
) -> Result<PSeries> {
    assert_eq!(slot_triples.len(), factor_params.len());
    let mut factors = Vec::with_capacity(slot_triples.len());
    for (slots, fp) in slot_triples.iter().zip(factor_params) {
        let factor = match fp {
            FactorParam::Zero => {
                let f = OpSum::from(make_generator(Generator::F, slots, arity)?);
                PSeries::from_opsum(params, cap, f)
            }
            FactorParam::Monomial(expo) => build_b(params, cap, arity, slots, expo)?,
        };
        factors.push(factor);
    }
    ordered_product(&factors, Direction::Down)
}
