//! The closed algebra of monomial operators on `n`-variable Laurent spaces.
//!
//! A [`MonOp`] acts on the monomial basis by
//! `t^a  ->  coeff * q^<weight, a> * t^(matrix * a + shift)`,
//! and this class is closed under composition, inversion, slot embedding,
//! tensoring and (where defined) the formal partial trace. [`OpSum`] is the
//! canonical finite linear combination of such operators, with terms keyed by
//! their `(shift, weight, matrix)` signature. [`LPoly`] is a plain Laurent
//! polynomial used as the brute-force application oracle in tests.

mod generators;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::QRat;

pub use generators::{make_big_g, make_g, make_g_bracket, make_generator, Generator};

/// Square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IntMat {
    n: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMat { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in &rows {
            assert_eq!(row.len(), n, "matrix rows must be square");
            data.extend_from_slice(row);
        }
        IntMat { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn at(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.n + c] = v;
    }

    pub fn is_identity(&self) -> bool {
        for r in 0..self.n {
            for c in 0..self.n {
                if self.at(r, c) != i64::from(r == c) {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.n, other.n);
        if self.is_identity() {
            return other.clone();
        }
        if other.is_identity() {
            return self.clone();
        }
        let n = self.n;
        let mut data = vec![0i64; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.at(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    data[r * n + c] += a * other.at(k, c);
                }
            }
        }
        IntMat { n, data }
    }

    /// `A * v`.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.at(r, c) * v[c]).sum())
            .collect()
    }

    /// `A^T * v`.
    pub fn transpose_apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|c| (0..self.n).map(|r| self.at(r, c) * v[r]).sum())
            .collect()
    }

    /// Exact integer inverse; `None` unless the matrix is unimodular.
    pub fn inverse(&self) -> Option<IntMat> {
        let n = self.n;
        if self.is_identity() {
            return Some(self.clone());
        }
        // Rational Gauss-Jordan on [A | I]; the inverse is integral exactly
        // when det = +/-1.
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|r| (0..n).map(|c| BigRational::from_integer(self.at(r, c).into())).collect())
            .collect();
        let mut inv: Vec<Vec<BigRational>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        if r == c {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for c in 0..n {
                a[col][c] /= &p;
                inv[col][c] /= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let av = &a[col][c] * &f;
                    a[r][c] -= av;
                    let iv = &inv[col][c] * &f;
                    inv[r][c] -= iv;
                }
            }
        }
        let mut data = Vec::with_capacity(n * n);
        for row in &inv {
            for v in row {
                if !v.is_integer() {
                    return None;
                }
                data.push(i64::try_from(v.to_integer()).ok()?);
            }
        }
        Some(IntMat { n, data })
    }
}

/// Canonical key of a monomial operator: ordered by shift, then weight, then
/// the matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Signature {
    pub shift: Vec<i64>,
    pub weight: Vec<i64>,
    pub matrix: IntMat,
}

/// Injective slot assignment `{1..m} -> {1..n}` used to embed an operator on
/// `m` variables into an `n`-variable space, acting as the identity elsewhere.
/// Slots are 1-based at the API surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexMap {
    target: usize,
    slots: Vec<usize>, // 0-based internally
}

impl IndexMap {
    pub fn new(target_arity: usize, slots: &[usize]) -> Result<Self> {
        let mut seen = vec![false; target_arity];
        for &s in slots {
            if s == 0 || s > target_arity {
                return Err(Error::BadIndex(format!(
                    "slot {s} outside 1..={target_arity}"
                )));
            }
            if seen[s - 1] {
                return Err(Error::NonInjectiveMap);
            }
            seen[s - 1] = true;
        }
        Ok(IndexMap {
            target: target_arity,
            slots: slots.iter().map(|&s| s - 1).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        IndexMap {
            target: n,
            slots: (0..n).collect(),
        }
    }

    /// `outer o inner`: first embed along `inner`, then along `outer`.
    pub fn compose(outer: &IndexMap, inner: &IndexMap) -> Result<IndexMap> {
        if inner.target != outer.source_arity() {
            return Err(Error::ArityMismatch(inner.target, outer.source_arity()));
        }
        Ok(IndexMap {
            target: outer.target,
            slots: inner.slots.iter().map(|&s| outer.slots[s]).collect(),
        })
    }

    pub fn source_arity(&self) -> usize {
        self.slots.len()
    }

    pub fn target_arity(&self) -> usize {
        self.target
    }

    /// 1-based target slot of 1-based source slot `i`.
    pub fn slot(&self, i: usize) -> usize {
        self.slots[i - 1] + 1
    }
}

/// A monomial operator `t^a -> coeff * q^<weight,a> * t^(matrix a + shift)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonOp {
    coeff: QRat,
    sig: Signature,
}

impl MonOp {
    pub fn new(coeff: QRat, weight: Vec<i64>, matrix: IntMat, shift: Vec<i64>) -> Result<Self> {
        let n = matrix.size();
        if weight.len() != n || shift.len() != n {
            return Err(Error::BadArity(format!(
                "weight/shift of lengths {}/{} against {n}x{n} matrix",
                weight.len(),
                shift.len()
            )));
        }
        if coeff.is_zero() {
            return Err(Error::Invariant("monomial operator with zero coefficient".into()));
        }
        Ok(MonOp {
            coeff,
            sig: Signature { shift, weight, matrix },
        })
    }

    pub fn identity(n: usize) -> Self {
        MonOp {
            coeff: QRat::one(),
            sig: Signature {
                shift: vec![0; n],
                weight: vec![0; n],
                matrix: IntMat::identity(n),
            },
        }
    }

    /// Pure substitution operator `t^a -> t^(A a)`.
    pub fn substitution(matrix: IntMat) -> Self {
        let n = matrix.size();
        MonOp {
            coeff: QRat::one(),
            sig: Signature {
                shift: vec![0; n],
                weight: vec![0; n],
                matrix,
            },
        }
    }

    pub fn arity(&self) -> usize {
        self.sig.shift.len()
    }

    pub fn coeff(&self) -> &QRat {
        &self.coeff
    }

    pub fn weight(&self) -> &[i64] {
        &self.sig.weight
    }

    pub fn matrix(&self) -> &IntMat {
        &self.sig.matrix
    }

    pub fn shift(&self) -> &[i64] {
        &self.sig.shift
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn is_identity(&self) -> bool {
        self.coeff.is_one()
            && self.sig.matrix.is_identity()
            && self.sig.weight.iter().all(|&w| w == 0)
            && self.sig.shift.iter().all(|&b| b == 0)
    }

    pub fn scale(&self, c: &QRat) -> Result<Self> {
        MonOp::new(
            c * &self.coeff,
            self.sig.weight.clone(),
            self.sig.matrix.clone(),
            self.sig.shift.clone(),
        )
    }

    /// Action on one basis monomial: returns the scalar and the new exponent.
    pub fn apply_monomial(&self, a: &[i64]) -> (QRat, Vec<i64>) {
        let pairing: i64 = self.sig.weight.iter().zip(a).map(|(w, x)| w * x).sum();
        let mut out = self.sig.matrix.apply(a);
        for (o, b) in out.iter_mut().zip(&self.sig.shift) {
            *o += b;
        }
        (&self.coeff * &QRat::q_power(pairing), out)
    }

    /// Operator product `self o other` (apply `other` first).
    pub fn compose(&self, other: &MonOp) -> Result<MonOp> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch(self.arity(), other.arity()));
        }
        let (sig, q_exp) = compose_signatures(&self.sig, &other.sig);
        let coeff = &(&self.coeff * &other.coeff) * &QRat::q_power(q_exp);
        Ok(MonOp { coeff, sig })
    }

    /// Inverse operator; requires a unimodular exponent matrix.
    pub fn inverse(&self) -> Result<MonOp> {
        let ainv = self
            .sig
            .matrix
            .inverse()
            .ok_or_else(|| Error::NotInvertible("exponent matrix is not unimodular".into()))?;
        let w = ainv.transpose_apply(&self.sig.weight);
        let pairing: i64 = w.iter().zip(&self.sig.shift).map(|(x, y)| x * y).sum();
        let coeff = &self.coeff.checked_inv()? * &QRat::q_power(pairing);
        let shift: Vec<i64> = ainv.apply(&self.sig.shift).iter().map(|v| -v).collect();
        let weight = w.into_iter().map(|v| -v).collect();
        MonOp::new(coeff, weight, ainv, shift)
    }

    /// Integer power, negative exponents through the inverse.
    pub fn pow(&self, k: i64) -> Result<MonOp> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = MonOp::identity(self.arity());
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base)?;
        }
        Ok(acc)
    }

    /// Embed into a larger space along `map`, acting as the identity on
    /// unmapped slots.
    pub fn embed(&self, map: &IndexMap) -> Result<MonOp> {
        if map.source_arity() != self.arity() {
            return Err(Error::ArityMismatch(map.source_arity(), self.arity()));
        }
        let n = map.target_arity();
        let mut weight = vec![0i64; n];
        let mut shift = vec![0i64; n];
        let mut matrix = IntMat::identity(n);
        for (i, &ti) in map.slots.iter().enumerate() {
            weight[ti] = self.sig.weight[i];
            shift[ti] = self.sig.shift[i];
            matrix.set(ti, ti, 0);
        }
        for (i, &ti) in map.slots.iter().enumerate() {
            for (j, &tj) in map.slots.iter().enumerate() {
                matrix.set(ti, tj, self.sig.matrix.at(i, j));
            }
        }
        MonOp::new(self.coeff.clone(), weight, matrix, shift)
    }

    /// Formal partial trace over 1-based slot `k`, defined when the diagonal
    /// equation `(A a + b)_k = a_k` has a unique integral solution.
    pub fn partial_trace(&self, k: usize) -> Result<MonOp> {
        let n = self.arity();
        if k == 0 || k > n {
            return Err(Error::BadIndex(format!("trace slot {k} outside 1..={n}")));
        }
        let k0 = k - 1;
        let akk = self.sig.matrix.at(k0, k0);
        if akk == 1 {
            return Err(Error::TraceDiverges { slot: k });
        }
        let d = 1 - akk;
        for j in 0..n {
            if j != k0 && self.sig.matrix.at(k0, j) % d != 0 {
                return Err(Error::NonMonomialTrace { slot: k });
            }
        }
        if self.sig.shift[k0] % d != 0 {
            return Err(Error::NonMonomialTrace { slot: k });
        }
        // a_k = sum_j c_j a_j + d0 on the traced diagonal.
        let c: Vec<i64> = (0..n)
            .map(|j| if j == k0 { 0 } else { self.sig.matrix.at(k0, j) / d })
            .collect();
        let d0 = self.sig.shift[k0] / d;

        let keep: Vec<usize> = (0..n).filter(|&j| j != k0).collect();
        let m = n - 1;
        let mut weight = Vec::with_capacity(m);
        let mut shift = Vec::with_capacity(m);
        let lk = self.sig.weight[k0];
        for &j in &keep {
            weight.push(self.sig.weight[j] + lk * c[j]);
        }
        let mut matrix = IntMat::identity(m);
        for (ri, &i) in keep.iter().enumerate() {
            let aik = self.sig.matrix.at(i, k0);
            shift.push(self.sig.shift[i] + aik * d0);
            for (cj, &j) in keep.iter().enumerate() {
                matrix.set(ri, cj, self.sig.matrix.at(i, j) + aik * c[j]);
            }
        }
        let coeff = &self.coeff * &QRat::q_power(lk * d0);
        MonOp::new(coeff, weight, matrix, shift)
    }

    /// Tensor product acting on the concatenation of the two variable blocks.
    pub fn tensor(&self, right: &MonOp) -> MonOp {
        let m = self.arity();
        let n = right.arity();
        let mut weight = Vec::with_capacity(m + n);
        weight.extend_from_slice(&self.sig.weight);
        weight.extend_from_slice(&right.sig.weight);
        let mut shift = Vec::with_capacity(m + n);
        shift.extend_from_slice(&self.sig.shift);
        shift.extend_from_slice(&right.sig.shift);
        let mut matrix = IntMat::identity(m + n);
        for r in 0..m {
            for c in 0..m {
                matrix.set(r, c, self.sig.matrix.at(r, c));
            }
        }
        for r in 0..n {
            for c in 0..n {
                matrix.set(m + r, m + c, right.sig.matrix.at(r, c));
            }
        }
        MonOp {
            coeff: &self.coeff * &right.coeff,
            sig: Signature { shift, weight, matrix },
        }
    }

    pub fn apply(&self, p: &LPoly) -> Result<LPoly> {
        if self.arity() != p.arity() {
            return Err(Error::ArityMismatch(self.arity(), p.arity()));
        }
        let mut out = LPoly::zero(p.arity());
        for (expo, c) in &p.terms {
            let (s, e) = self.apply_monomial(expo);
            out.add_term(e, &(&s * c));
        }
        Ok(out)
    }
}

fn compose_signatures(left: &Signature, right: &Signature) -> (Signature, i64) {
    let q_exp: i64 = left.weight.iter().zip(&right.shift).map(|(w, b)| w * b).sum();
    let mut weight = right.matrix.transpose_apply(&left.weight);
    for (w, r) in weight.iter_mut().zip(&right.weight) {
        *w += r;
    }
    let matrix = left.matrix.mul(&right.matrix);
    let mut shift = left.matrix.apply(&right.shift);
    for (s, l) in shift.iter_mut().zip(&left.shift) {
        *s += l;
    }
    (Signature { shift, weight, matrix }, q_exp)
}

impl fmt::Display for MonOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.arity();
        if !self.coeff.is_one() {
            write!(f, "({}) * ", self.coeff)?;
        }
        let lin = |coeffs: &dyn Fn(usize) -> i64, constant: i64| -> String {
            let mut s = String::new();
            for j in 0..n {
                let c = coeffs(j);
                if c == 0 {
                    continue;
                }
                if !s.is_empty() {
                    s.push_str(if c > 0 { "+" } else { "-" });
                } else if c < 0 {
                    s.push('-');
                }
                if c.abs() != 1 {
                    s.push_str(&format!("{}*", c.abs()));
                }
                s.push_str(&format!("a{}", j + 1));
            }
            if constant != 0 {
                if !s.is_empty() {
                    s.push_str(if constant > 0 { "+" } else { "-" });
                    s.push_str(&constant.abs().to_string());
                } else {
                    s.push_str(&constant.to_string());
                }
            }
            if s.is_empty() {
                s.push('0');
            }
            s
        };
        let wstr = lin(&|j| self.sig.weight[j], 0);
        if wstr != "0" {
            write!(f, "q^({wstr}) * ")?;
        }
        write!(f, "t^(")?;
        for r in 0..n {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", lin(&|j| self.sig.matrix.at(r, j), self.sig.shift[r]))?;
        }
        write!(f, ")")
    }
}

/// Canonical finite linear combination of monomial operators of one arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpSum {
    arity: usize,
    terms: BTreeMap<Signature, QRat>,
}

impl OpSum {
    pub fn zero(arity: usize) -> Self {
        OpSum {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(arity: usize) -> Self {
        OpSum::from(MonOp::identity(arity))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.term_count() == 1 && {
            let (sig, c) = self.terms.iter().next().unwrap();
            c.is_one()
                && sig.matrix.is_identity()
                && sig.weight.iter().all(|&w| w == 0)
                && sig.shift.iter().all(|&b| b == 0)
        }
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = MonOp> + '_ {
        self.terms.iter().map(|(sig, c)| MonOp {
            coeff: c.clone(),
            sig: sig.clone(),
        })
    }

    fn add_part(&mut self, sig: Signature, coeff: QRat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(sig) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &OpSum) -> Result<OpSum> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        let mut out = self.clone();
        for (sig, c) in &other.terms {
            out.add_part(sig.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &OpSum) -> Result<OpSum> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> OpSum {
        OpSum {
            arity: self.arity,
            terms: self.terms.iter().map(|(s, c)| (s.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &QRat) -> OpSum {
        if c.is_zero() {
            return OpSum::zero(self.arity);
        }
        OpSum {
            arity: self.arity,
            terms: self.terms.iter().map(|(s, x)| (s.clone(), c * x)).collect(),
        }
    }

    /// Bilinear extension of operator composition.
    pub fn compose(&self, other: &OpSum) -> Result<OpSum> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        let mut out = OpSum::zero(self.arity);
        for (ls, lc) in &self.terms {
            for (rs, rc) in &other.terms {
                let (sig, q_exp) = compose_signatures(ls, rs);
                let coeff = &(lc * rc) * &QRat::q_power(q_exp);
                out.add_part(sig, coeff);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: usize) -> Result<OpSum> {
        let mut acc = OpSum::identity(self.arity);
        for _ in 0..k {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    pub fn embed(&self, map: &IndexMap) -> Result<OpSum> {
        let mut out = OpSum::zero(map.target_arity());
        for t in self.terms() {
            let e = t.embed(map)?;
            out.add_part(e.sig, e.coeff);
        }
        Ok(out)
    }

    /// Tensor product: `self` on the first block of slots, `right` on the rest.
    pub fn tensor(&self, right: &OpSum) -> OpSum {
        let mut out = OpSum::zero(self.arity + right.arity);
        for l in self.terms() {
            for r in right.terms() {
                let t = l.tensor(&r);
                out.add_part(t.sig, t.coeff);
            }
        }
        out
    }

    pub fn apply(&self, p: &LPoly) -> Result<LPoly> {
        if self.arity != p.arity() {
            return Err(Error::ArityMismatch(self.arity, p.arity()));
        }
        let mut out = LPoly::zero(self.arity);
        for t in self.terms() {
            out = out.add(&t.apply(p)?)?;
        }
        Ok(out)
    }

    /// Formal partial trace over 1-based slot `k`, term by term.
    pub fn partial_trace(&self, k: usize) -> Result<OpSum> {
        if self.arity == 0 {
            return Err(Error::BadIndex("trace on arity 0".into()));
        }
        let mut out = OpSum::zero(self.arity - 1);
        for t in self.terms() {
            let tr = t.partial_trace(k)?;
            out.add_part(tr.sig, tr.coeff);
        }
        Ok(out)
    }
}

impl From<MonOp> for OpSum {
    fn from(op: MonOp) -> Self {
        let mut terms = BTreeMap::new();
        let arity = op.arity();
        terms.insert(op.sig, op.coeff);
        OpSum { arity, terms }
    }
}

impl fmt::Display for OpSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, t) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// A Laurent polynomial in `n` variables: the brute-force oracle space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPoly {
    arity: usize,
    terms: BTreeMap<Vec<i64>, QRat>,
}

impl LPoly {
    pub fn zero(arity: usize) -> Self {
        LPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        LPoly::monomial(vec![0; arity], QRat::one())
    }

    pub fn monomial(expo: Vec<i64>, coeff: QRat) -> Self {
        let arity = expo.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(expo, coeff);
        }
        LPoly { arity, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, expo: &[i64]) -> QRat {
        self.terms.get(expo).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &QRat)> {
        self.terms.iter()
    }

    fn add_term(&mut self, expo: Vec<i64>, c: &QRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(expo) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &LPoly) -> Result<LPoly> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QRat) -> LPoly {
        if c.is_zero() {
            return LPoly::zero(self.arity);
        }
        LPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), c * x)).collect(),
        }
    }
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*t^{e:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
