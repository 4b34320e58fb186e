//! The quantum-group layer: the `e`/`f` generator families on `N^2`
//! variables, the representation of the centrally extended quantized
//! enveloping algebra they induce, q-deformed root vectors, Cartan data, and
//! the closed-form R-matrices.
//!
//! Hierarchical slot indices are flattened block-major: the variable at
//! (block `j`, inner slot `i`) of an `N x N` layout is global slot
//! `(j-1)*N + i`, and a leading space index of width `N^2` is flattened the
//! same way in front.

mod rmatrix;

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monop::{make_generator, Generator, MonOp, OpSum};
use crate::scalar::QRat;
use crate::series::PSeries;

pub use rmatrix::{
    build_big_r_closed, build_big_r_product, build_r_closed, build_r_traced, mfor_lhs, mfor_rhs,
    psi_double_product, standard_b_tilde_slots,
};

/// Representative of `i` in `1..=n`.
pub(crate) fn wrap(i: i64, n: usize) -> usize {
    ((i - 1).rem_euclid(n as i64) + 1) as usize
}

/// 1-based global slot of (block, inner) in a block-major `n x n` layout.
pub(crate) fn slot_bi(block: usize, inner: usize, n: usize) -> usize {
    (block - 1) * n + inner
}

fn gen_at(kind: Generator, slot: usize, arity: usize) -> MonOp {
    make_generator(kind, &[slot], arity).expect("valid slot")
}

fn check_indices(i: usize, j: usize, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::BadIndex(format!("n = {n} < 2")));
    }
    if i == 0 || i >= n {
        return Err(Error::BadIndex(format!("root index {i} outside 1..={}", n - 1)));
    }
    if j == 0 || j > n {
        return Err(Error::BadIndex(format!("copy index {j} outside 1..={n}")));
    }
    Ok(())
}

/// The displayed factor sequence of `e_(i,j)`, left to right:
/// `wt_(j : i+j), u_(j : i+j-1),
///  then u^2_(k : i+k) u^-1_(k : i+k-1) u^-1_(k : i+k+1) for k = j..n`.
pub fn e_factor_ops(i: usize, j: usize, n: usize) -> Result<Vec<MonOp>> {
    check_indices(i, j, n)?;
    let arity = n * n;
    let ii = i as i64;
    let slot = |block: usize, inner: i64| slot_bi(block, wrap(inner, n), n);
    let mut factors = vec![
        gen_at(Generator::WTilde, slot(j, ii + j as i64), arity),
        gen_at(Generator::U, slot(j, ii + j as i64 - 1), arity),
    ];
    for k in j..=n {
        let kk = k as i64;
        factors.push(gen_at(Generator::U, slot(k, ii + kk), arity).pow(2)?);
        factors.push(gen_at(Generator::UInv, slot(k, ii + kk - 1), arity));
        factors.push(gen_at(Generator::UInv, slot(k, ii + kk + 1), arity));
    }
    Ok(factors)
}

/// The displayed factor sequence of `f_(i,j)`:
/// `v_(k:i) v^-1_(k:i+1) for k = 1..j, then u_(j:i+1) w^-1_(j:i)`.
pub fn f_factor_ops(i: usize, j: usize, n: usize) -> Result<Vec<MonOp>> {
    check_indices(i, j, n)?;
    let arity = n * n;
    let ii = i as i64;
    let slot = |block: usize, inner: i64| slot_bi(block, wrap(inner, n), n);
    let mut factors = Vec::new();
    for k in 1..=j {
        factors.push(gen_at(Generator::V, slot(k, ii), arity));
        factors.push(gen_at(Generator::VInv, slot(k, ii + 1), arity));
    }
    factors.push(gen_at(Generator::U, slot(j, ii + 1), arity));
    factors.push(gen_at(Generator::WInv, slot(j, ii), arity));
    Ok(factors)
}

fn compose_all(factors: &[MonOp], arity: usize) -> Result<MonOp> {
    let mut op = MonOp::identity(arity);
    for f in factors {
        op = op.compose(f)?;
    }
    Ok(op)
}

/// The raising generator `e_(i,j)` on `n^2` variables: root `i` in
/// `1..=n-1`, copy `j` in `1..=n`, inner index arithmetic mod `n`.
pub fn build_e_monop(i: usize, j: usize, n: usize) -> Result<MonOp> {
    compose_all(&e_factor_ops(i, j, n)?, n * n)
}

/// The lowering generator `f_(i,j)` on `n^2` variables.
pub fn build_f_monop(i: usize, j: usize, n: usize) -> Result<MonOp> {
    compose_all(&f_factor_ops(i, j, n)?, n * n)
}

/// Single-term sum form of [`build_e_monop`].
pub fn build_e(i: usize, j: usize, n: usize) -> Result<OpSum> {
    Ok(OpSum::from(build_e_monop(i, j, n)?))
}

/// Single-term sum form of [`build_f_monop`].
pub fn build_f(i: usize, j: usize, n: usize) -> Result<OpSum> {
    Ok(OpSum::from(build_f_monop(i, j, n)?))
}

/// Cartan matrix data and the weight structure extracted from the images of
/// the Cartan generators.
///
/// The image of `K_i` is a pure diagonal `q^<h_i, a>`. The image of `L_i`
/// comes out a pure shift `t^a -> t^(a + s_i)` rather than a diagonal, and
/// the twist checks work directly with that shift vector.
#[derive(Clone, Debug)]
pub struct CartanData {
    n: usize,
    cartan: Vec<Vec<i64>>,
    inv_cartan: Vec<Vec<BigRational>>,
    k_weight: Vec<Vec<i64>>,
    l_shift: Vec<Vec<i64>>,
}

impl CartanData {
    pub fn rank(&self) -> usize {
        self.n - 1
    }

    /// `a_(i,j) = 2 d_(i,j) - d_(|i-j|,1)`, 1-based.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    /// Entry of the exact inverse Cartan matrix, 1-based.
    pub fn a_inv(&self, i: usize, j: usize) -> &BigRational {
        &self.inv_cartan[i - 1][j - 1]
    }

    /// Diagonal weight vector of the image of `K_i`.
    pub fn k_weight(&self, i: usize) -> &[i64] {
        &self.k_weight[i - 1]
    }

    /// Shift vector of the image of `L_i`.
    pub fn l_shift(&self, i: usize) -> &[i64] {
        &self.l_shift[i - 1]
    }
}

fn cartan_matrix(rank: usize) -> Vec<Vec<i64>> {
    (1..=rank)
        .map(|i| {
            (1..=rank)
                .map(|j| {
                    if i == j {
                        2
                    } else if i.abs_diff(j) == 1 {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

fn invert_rational(m: &[Vec<i64>]) -> Result<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|&v| BigRational::from_integer(v.into())).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if r == c { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Invariant("singular Cartan matrix".into()))?;
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
    Ok(inv)
}

/// The images of the algebra generators on `N^2` variables together with the
/// q-deformed root vectors.
pub struct GenSet {
    n: usize,
    e: Vec<Vec<MonOp>>, // e[i-1][j-1]
    f: Vec<Vec<MonOp>>,
    kappa_e: Vec<OpSum>, // images of E_i, i in 1..=n-1
    kappa_f: Vec<OpSum>,
    kappa_k: Vec<MonOp>,
    kappa_l: Vec<MonOp>,
    root_e: BTreeMap<(usize, usize), OpSum>, // images of E_(i,j), i < j
    root_f: BTreeMap<(usize, usize), OpSum>,
    cartan: CartanData,
}

impl GenSet {
    pub fn new(n: usize) -> Result<GenSet> {
        if n < 2 {
            return Err(Error::BadIndex(format!("n = {n} < 2")));
        }
        let rank = n - 1;
        let mut e = Vec::with_capacity(rank);
        let mut f = Vec::with_capacity(rank);
        for i in 1..=rank {
            e.push((1..=n).map(|j| build_e_monop(i, j, n)).collect::<Result<Vec<_>>>()?);
            f.push((1..=n).map(|j| build_f_monop(i, j, n)).collect::<Result<Vec<_>>>()?);
        }
        let sum_of = |ops: &[MonOp]| -> OpSum {
            ops.iter().fold(OpSum::zero(n * n), |acc, t| {
                acc.add(&OpSum::from(t.clone())).expect("uniform arity")
            })
        };
        let kappa_e: Vec<OpSum> = e.iter().map(|row| sum_of(row)).collect();
        let kappa_f: Vec<OpSum> = f.iter().map(|row| sum_of(row)).collect();
        let mut kappa_k = Vec::with_capacity(rank);
        let mut kappa_l = Vec::with_capacity(rank);
        for i in 1..=rank {
            kappa_k.push(e[i - 1][0].compose(&f[i - 1][0])?);
            kappa_l.push(f[i - 1][n - 1].compose(&e[i - 1][n - 1])?);
        }

        // Weight structure of the Cartan images. K_i must be a pure
        // diagonal; L_i comes out a pure shift.
        let mut k_weight = Vec::with_capacity(rank);
        let mut l_shift = Vec::with_capacity(rank);
        for i in 1..=rank {
            let k = &kappa_k[i - 1];
            if !k.matrix().is_identity()
                || k.shift().iter().any(|&b| b != 0)
                || !k.coeff().is_one()
            {
                return Err(Error::Invariant(format!(
                    "image of K_{i} is not a pure diagonal"
                )));
            }
            k_weight.push(k.weight().to_vec());
            let l = &kappa_l[i - 1];
            if !l.matrix().is_identity()
                || l.weight().iter().any(|&w| w != 0)
                || !l.coeff().is_one()
            {
                return Err(Error::Invariant(format!(
                    "image of L_{i} is not a pure shift"
                )));
            }
            l_shift.push(l.shift().to_vec());
        }
        let cartan_m = cartan_matrix(rank);
        let inv_cartan = invert_rational(&cartan_m)?;
        let cartan = CartanData {
            n,
            cartan: cartan_m,
            inv_cartan,
            k_weight,
            l_shift,
        };

        let mut gs = GenSet {
            n,
            e,
            f,
            kappa_e,
            kappa_f,
            kappa_k,
            kappa_l,
            root_e: BTreeMap::new(),
            root_f: BTreeMap::new(),
            cartan,
        };
        gs.build_root_vectors()?;
        Ok(gs)
    }

    /// `E_(i,i+1) = E_i`; `E_(i,j+1) = (E_j E_(i,j) - q E_(i,j) E_j)/(1-q^2)`,
    /// and the same recursion on the lowering side.
    fn build_root_vectors(&mut self) -> Result<()> {
        let n = self.n;
        let scale = (&QRat::one() - &QRat::q_power(2)).checked_inv()?;
        for i in 1..n {
            self.root_e.insert((i, i + 1), self.kappa_e[i - 1].clone());
            self.root_f.insert((i, i + 1), self.kappa_f[i - 1].clone());
        }
        for len in 2..n {
            for i in 1..=(n - len) {
                let j = i + len; // E_(i,j) from E_(i,j-1) and the simple E_(j-1)
                let prev_e = self.root_e[&(i, j - 1)].clone();
                let simple_e = &self.kappa_e[j - 2];
                let re = simple_e
                    .compose(&prev_e)?
                    .sub(&prev_e.compose(simple_e)?.scale(&QRat::q()))?
                    .scale(&scale);
                self.root_e.insert((i, j), re);
                let prev_f = self.root_f[&(i, j - 1)].clone();
                let simple_f = &self.kappa_f[j - 2];
                let rf = simple_f
                    .compose(&prev_f)?
                    .sub(&prev_f.compose(simple_f)?.scale(&QRat::q()))?
                    .scale(&scale);
                self.root_f.insert((i, j), rf);
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.n - 1
    }

    /// Arity of every stored operator: `n^2`.
    pub fn arity(&self) -> usize {
        self.n * self.n
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn e(&self, i: usize, j: usize) -> &MonOp {
        &self.e[i - 1][j - 1]
    }

    pub fn f(&self, i: usize, j: usize) -> &MonOp {
        &self.f[i - 1][j - 1]
    }

    /// Image of `E_i`: the sum of `e_(i,j)` over all copies `j`.
    pub fn kappa_e(&self, i: usize) -> &OpSum {
        &self.kappa_e[i - 1]
    }

    pub fn kappa_f(&self, i: usize) -> &OpSum {
        &self.kappa_f[i - 1]
    }

    /// Image of `K_i = e_(i,1) f_(i,1)`.
    pub fn kappa_k(&self, i: usize) -> &MonOp {
        &self.kappa_k[i - 1]
    }

    /// Image of `L_i = f_(i,n) e_(i,n)`.
    pub fn kappa_l(&self, i: usize) -> &MonOp {
        &self.kappa_l[i - 1]
    }

    /// Image of the central element `Z_i = K_i L_i`.
    pub fn kappa_z(&self, i: usize) -> Result<MonOp> {
        self.kappa_k[i - 1].compose(&self.kappa_l[i - 1])
    }

    /// Image of the root vector `E_(i,j)`, `1 <= i < j <= n`.
    pub fn root_e(&self, i: usize, j: usize) -> &OpSum {
        &self.root_e[&(i, j)]
    }

    pub fn root_f(&self, i: usize, j: usize) -> &OpSum {
        &self.root_f[&(i, j)]
    }

    /// Root grading of a monomial operator with identity exponent matrix:
    /// the integer vector `g` with
    /// `K_m X K_m^-1 = q^(sum_i a_(m,i) g_i) X` for every `m`.
    ///
    /// For operators on `2 n^2` variables only the first tensor block enters
    /// (the grading of the raising leg).
    pub fn grading(&self, op: &MonOp) -> Result<Vec<i64>> {
        let n2 = self.arity();
        if !op.matrix().is_identity() {
            return Err(Error::UngradedTerm);
        }
        let shift = if op.arity() == n2 {
            op.shift().to_vec()
        } else if op.arity() == 2 * n2 {
            op.shift()[..n2].to_vec()
        } else {
            return Err(Error::ArityMismatch(op.arity(), n2));
        };
        let rank = self.rank();
        let pair: Vec<BigRational> = (1..=rank)
            .map(|m| {
                let w: i64 = self
                    .cartan
                    .k_weight(m)
                    .iter()
                    .zip(&shift)
                    .map(|(h, b)| h * b)
                    .sum();
                BigRational::from_integer(w.into())
            })
            .collect();
        let mut g = Vec::with_capacity(rank);
        for i in 1..=rank {
            let mut acc = BigRational::zero();
            for m in 1..=rank {
                acc += self.cartan.a_inv(i, m) * &pair[m - 1];
            }
            if !acc.is_integer() {
                return Err(Error::UngradedTerm);
            }
            g.push(i64::try_from(acc.to_integer()).map_err(|_| Error::UngradedTerm)?);
        }
        Ok(g)
    }

    /// Common grading of all terms of a coefficient; errors if terms mix.
    pub fn opsum_grading(&self, op: &OpSum) -> Result<Vec<i64>> {
        let mut out: Option<Vec<i64>> = None;
        for t in op.terms() {
            let g = self.grading(&t)?;
            match &out {
                None => out = Some(g),
                Some(prev) if *prev == g => {}
                Some(_) => return Err(Error::UngradedTerm),
            }
        }
        out.ok_or(Error::UngradedTerm)
    }

    /// Spectral bookkeeping for the parameter twist: in the forward
    /// direction the coefficient at parameter exponent `alpha` with root
    /// grading `g` moves to `alpha + g`; the inverse direction removes the
    /// decoration again. Terms pushed past the cap are dropped.
    pub fn apply_rho(&self, series: &PSeries, dir: RhoDirection) -> Result<PSeries> {
        if series.params().len() != self.rank() {
            return Err(Error::ParamMismatch);
        }
        let params: Vec<&str> = series.params().iter().map(|s| s.as_str()).collect();
        let mut out = PSeries::zero(&params, series.cap(), series.arity());
        for (expo, coeff) in series.coeffs() {
            let g = self.opsum_grading(coeff)?;
            let mut target = Vec::with_capacity(expo.len());
            for (&x, &gi) in expo.iter().zip(&g) {
                let v = match dir {
                    RhoDirection::Forward => x as i64 + gi,
                    RhoDirection::Inverse => x as i64 - gi,
                };
                if v < 0 {
                    return Err(Error::UngradedTerm);
                }
                target.push(v as u32);
            }
            if target.iter().map(|&x| x as usize).sum::<usize>() <= series.cap() {
                out = out.add(&PSeries::term(&params, series.cap(), target, coeff.clone())?)?;
            }
        }
        Ok(out)
    }
}

/// Direction of the spectral-decoration transform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoDirection {
    Forward,
    Inverse,
}

#[cfg(test)]
mod tests;
