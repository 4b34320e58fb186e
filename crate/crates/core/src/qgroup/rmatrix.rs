//! R-matrix constructions: the transfer-matrix operator obtained as a formal
//! partial trace of the monodromy, its closed product form, the big
//! difference-property solution on `2 N^2` variables, and the two sides of
//! the q-exponential product identity.

use super::{slot_bi, wrap, GenSet};
use crate::error::Result;
use crate::monop::{make_big_g, make_g, make_generator, Generator, IndexMap, MonOp, OpSum};
use crate::series::{build_b_tilde, ordered_product, psi_series, FactorParam, PSeries};

fn gen_at(kind: Generator, slot: usize, arity: usize) -> MonOp {
    make_generator(kind, &[slot], arity).expect("valid slot")
}

/// Slot triples of the standard monodromy layout on `2n + 1` variables:
/// factor `i` acts on (block-1 slot `i`, block-2 slot `n+i`, slot `2n+1`).
pub fn standard_b_tilde_slots(n: usize) -> Vec<[usize; 3]> {
    (1..=n).map(|i| [i, n + i, 2 * n + 1]).collect()
}

/// Transfer-matrix operator as the formal partial trace of the monodromy
/// over the shared third slot: a series on `2n` variables.
pub fn build_r_traced(
    params: &[&str],
    cap: usize,
    n: usize,
    factor_params: &[FactorParam],
) -> Result<PSeries> {
    let slots = standard_b_tilde_slots(n);
    let bt = build_b_tilde(params, cap, 2 * n + 1, &slots, factor_params)?;
    bt.partial_trace(2 * n + 1)
}

/// The psi-argument of the closed-form transfer matrix at rotation `rot`:
/// `wt_(1:k+rot) u_(1:k+rot-1) u_(2:k+rot) w^-1_(2:k+rot-1)` on `2n`
/// variables, indices mod `n`.
fn r_psi_argument(n: usize, rot: usize, k: usize) -> MonOp {
    let arity = 2 * n;
    let kk = (k + rot) as i64;
    let s1 = |inner: i64| slot_bi(1, wrap(inner, n), n);
    let s2 = |inner: i64| n + slot_bi(1, wrap(inner, n), n);
    gen_at(Generator::WTilde, s1(kk), arity)
        .compose(&gen_at(Generator::U, s1(kk - 1), arity))
        .expect("arity")
        .compose(&gen_at(Generator::U, s2(kk), arity))
        .expect("arity")
        .compose(&gen_at(Generator::WInv, s2(kk - 1), arity))
        .expect("arity")
}

/// Closed product form of the transfer matrix at rotation `rot`:
/// `G * prod_(k down 1..n-1) psi(x_k * arg_k)`, where the decoration of the
/// k-th factor is `expos[k-1]` over `params`.
pub fn build_r_closed(
    params: &[&str],
    cap: usize,
    n: usize,
    rot: usize,
    expos: &[Vec<u32>],
) -> Result<PSeries> {
    assert_eq!(expos.len(), n - 1, "one decoration per factor 1..n-1");
    let g = OpSum::from(make_g(n));
    let mut factors = Vec::with_capacity(n - 1);
    for k in (1..=n - 1).rev() {
        let arg = OpSum::from(r_psi_argument(n, rot, k));
        factors.push(psi_series(params, cap, &expos[k - 1], &arg)?);
    }
    let prod = ordered_product(&factors, crate::series::Direction::Up)?;
    prod.lmul_op(&g)
}

fn big_space_map(space: usize, block: usize, n: usize) -> Result<IndexMap> {
    let total = 2 * n * n;
    let base = ((space - 1) * n + (block - 1)) * n;
    let slots: Vec<usize> = (1..=n).map(|inner| base + inner).collect();
    IndexMap::new(total, &slots)
}

/// Product-route construction of the big solution on `2 n^2` variables:
/// outer factors `M_(1,2:j)` for `j` ascending, each
/// `M = prod_(i down 1..n) R^(tau^i(x))_(1:i, 2)`, built from the closed form
/// with rotated slot indices. Every factor carries the same per-k decoration
/// `base_expos`.
pub fn build_big_r_product(
    params: &[&str],
    cap: usize,
    n: usize,
    base_expos: &[Vec<u32>],
) -> Result<PSeries> {
    let total = 2 * n * n;
    let mut acc = PSeries::one(params, cap, total);
    for j in 1..=n {
        for i in (1..=n).rev() {
            let r = build_r_closed(params, cap, n, i % n, base_expos)?;
            let m1 = big_space_map(1, i, n)?;
            let m2 = big_space_map(2, j, n)?;
            let mut slots = Vec::with_capacity(2 * n);
            for inner in 1..=n {
                slots.push(m1.slot(inner));
            }
            for inner in 1..=n {
                slots.push(m2.slot(inner));
            }
            let map = IndexMap::new(total, &slots)?;
            acc = acc.mul(&r.embed(&map)?)?;
        }
    }
    Ok(acc)
}

/// The double ordered product of q-exponentials of the tensor generators:
/// `prod_(i down, j up) prod_(k down 1..n-1) psi(x_k e_(k,i) (x) f_(k,j))`,
/// outer `j` ascending with inner `i` descending, over `2 n^2` variables.
/// This is the big solution without its trailing substitution twist.
pub fn psi_double_product(
    gs: &GenSet,
    params: &[&str],
    cap: usize,
    expo_of_k: &dyn Fn(usize) -> Vec<u32>,
) -> Result<PSeries> {
    let n = gs.n();
    let total = 2 * n * n;
    let mut acc = PSeries::one(params, cap, total);
    for j in 1..=n {
        for i in (1..=n).rev() {
            for k in (1..=n - 1).rev() {
                let arg = OpSum::from(gs.e(k, i).tensor(gs.f(k, j)));
                let factor = psi_series(params, cap, &expo_of_k(k), &arg)?;
                acc = acc.mul(&factor)?;
            }
        }
    }
    Ok(acc)
}

/// Closed-route construction of the big solution: the double psi-product
/// followed by the block substitution twist on the right.
pub fn build_big_r_closed(
    gs: &GenSet,
    params: &[&str],
    cap: usize,
    expo_of_k: &dyn Fn(usize) -> Vec<u32>,
) -> Result<PSeries> {
    let prod = psi_double_product(gs, params, cap, expo_of_k)?;
    prod.rmul_op(&OpSum::from(make_big_g(gs.n())))
}

/// Left side of the q-exponential product identity: the plain double
/// product with decoration `x_k` on the k-th factor.
pub fn mfor_lhs(gs: &GenSet, params: &[&str], cap: usize) -> Result<PSeries> {
    let rank = gs.rank();
    psi_double_product(gs, params, cap, &|k| {
        let mut e = vec![0u32; rank];
        e[k - 1] = 1;
        e
    })
}

/// Right side of the q-exponential product identity: root vectors in the
/// double-descending order, factor `(i,j)` decorated by
/// `X_(i,j) = x_i x_(i+1) ... x_(j-1)`.
pub fn mfor_rhs(gs: &GenSet, params: &[&str], cap: usize) -> Result<PSeries> {
    let n = gs.n();
    let rank = gs.rank();
    let total = 2 * n * n;
    let mut acc = PSeries::one(params, cap, total);
    for i in (1..=rank).rev() {
        for j in ((i + 1)..=n).rev() {
            let arg = tensor_root(gs, i, j);
            let mut expo = vec![0u32; rank];
            for k in i..j {
                expo[k - 1] = 1;
            }
            acc = acc.mul(&psi_series(params, cap, &expo, &arg)?)?;
        }
    }
    Ok(acc)
}

fn tensor_root(gs: &GenSet, i: usize, j: usize) -> OpSum {
    gs.root_e(i, j).tensor(gs.root_f(i, j))
}
