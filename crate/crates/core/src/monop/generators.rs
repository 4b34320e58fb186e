//! Constructors for the named generators of the operator algebra.
//!
//! Single-variable operators: `u` rescales the variable by `q`, `v`
//! multiplies by it, `w = v u`, `wt = v u^-1`. The three-variable `F`
//! substitutes `(t1 t2 / t3, t3, t2)`, the two-variable `S` substitutes
//! `(t1 t2, t2)` and `P` swaps. `G` acts on two blocks of `N` variables and
//! its big-space analogue acts on `2 N^2`.

use super::{IndexMap, IntMat, MonOp};
use crate::error::{Error, Result};
use crate::scalar::QRat;

/// The generator alphabet accepted by [`make_generator`] and the expression
/// parser.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    U,
    UInv,
    V,
    VInv,
    W,
    WTilde,
    WInv,
    F,
    S,
    SInv,
    P,
}

impl Generator {
    /// Number of slots the generator naturally acts on.
    pub fn natural_arity(self) -> usize {
        match self {
            Generator::U
            | Generator::UInv
            | Generator::V
            | Generator::VInv
            | Generator::W
            | Generator::WTilde
            | Generator::WInv => 1,
            Generator::S | Generator::SInv | Generator::P => 2,
            Generator::F => 3,
        }
    }

    /// The operator on its natural arity.
    pub fn base_op(self) -> MonOp {
        let op = |coeff: QRat, weight: Vec<i64>, rows: Vec<Vec<i64>>, shift: Vec<i64>| {
            MonOp::new(coeff, weight, IntMat::from_rows(rows), shift).expect("valid generator")
        };
        match self {
            Generator::U => op(QRat::one(), vec![1], vec![vec![1]], vec![0]),
            Generator::UInv => op(QRat::one(), vec![-1], vec![vec![1]], vec![0]),
            Generator::V => op(QRat::one(), vec![0], vec![vec![1]], vec![1]),
            Generator::VInv => op(QRat::one(), vec![0], vec![vec![1]], vec![-1]),
            Generator::W => op(QRat::one(), vec![1], vec![vec![1]], vec![1]),
            Generator::WTilde => op(QRat::one(), vec![-1], vec![vec![1]], vec![1]),
            Generator::WInv => op(QRat::q(), vec![-1], vec![vec![1]], vec![-1]),
            Generator::F => op(
                QRat::one(),
                vec![0; 3],
                vec![vec![1, 0, 0], vec![1, 0, 1], vec![-1, 1, 0]],
                vec![0; 3],
            ),
            Generator::S => op(
                QRat::one(),
                vec![0; 2],
                vec![vec![1, 0], vec![1, 1]],
                vec![0; 2],
            ),
            Generator::SInv => op(
                QRat::one(),
                vec![0; 2],
                vec![vec![1, 0], vec![-1, 1]],
                vec![0; 2],
            ),
            Generator::P => op(
                QRat::one(),
                vec![0; 2],
                vec![vec![0, 1], vec![1, 0]],
                vec![0; 2],
            ),
        }
    }
}

/// Build a generator acting on the named 1-based global slots of an
/// `arity`-variable space, identity elsewhere.
pub fn make_generator(kind: Generator, slots: &[usize], arity: usize) -> Result<MonOp> {
    if slots.len() != kind.natural_arity() {
        return Err(Error::BadArity(format!(
            "{kind:?} takes {} slot(s), got {}",
            kind.natural_arity(),
            slots.len()
        )));
    }
    kind.base_op().embed(&IndexMap::new(arity, slots)?)
}

/// Reduce an index to a representative in `1..=n`.
fn wrap(i: i64, n: usize) -> usize {
    ((i - 1).rem_euclid(n as i64) + 1) as usize
}

/// 0-based global slot of (block, inner) in a block-major layout of
/// `blocks x n` variables.
fn slot_bi(block: usize, inner: usize, n: usize) -> usize {
    (block - 1) * n + (inner - 1)
}

/// The substitution operator on two blocks of `n` variables which maps the
/// first-block variable `t_{1:i}` to `t_{1:i} t_{2:i} / t_{2:i+1}` and the
/// second-block variable `t_{2:j}` to `t_{2:j+1}`, indices mod `n`.
pub fn make_g(n: usize) -> MonOp {
    let total = 2 * n;
    let mut m = IntMat::identity(total);
    for r in 0..total {
        m.set(r, r, 0);
    }
    for i in 1..=n {
        // Column of t_{1:i}: e_{1:i} + e_{2:i} - e_{2:i+1}.
        let col = slot_bi(1, i, n);
        m.set(slot_bi(1, i, n), col, 1);
        m.set(n + slot_bi(1, i, n), col, 1);
        m.set(n + slot_bi(1, wrap(i as i64 + 1, n), n), col, -1);
    }
    for j in 1..=n {
        // Column of t_{2:j}: e_{2:j+1}.
        let col = n + slot_bi(1, j, n);
        m.set(n + slot_bi(1, wrap(j as i64 + 1, n), n), col, 1);
    }
    MonOp::substitution(m)
}

/// 0-based global slot of (space, block, inner) in the `2 n^2` layout:
/// space-major, then block, then inner slot.
fn slot_sbi(space: usize, block: usize, inner: usize, n: usize) -> usize {
    ((space - 1) * n + (block - 1)) * n + (inner - 1)
}

/// The substitution operator on `2 n^2` variables which maps
/// `t_{1:i:j} -> t_{1:i:j} * prod_m t_{2:m:j-i} / t_{2:m:j-i+1}` and leaves
/// every `t_{2:k:l}` fixed, indices mod `n`.
pub fn make_big_g(n: usize) -> MonOp {
    let total = 2 * n * n;
    let mut m = IntMat::identity(total);
    for i in 1..=n {
        for j in 1..=n {
            let col = slot_sbi(1, i, j, n);
            let lo = wrap(j as i64 - i as i64, n);
            let hi = wrap(j as i64 - i as i64 + 1, n);
            for blk in 1..=n {
                let r_lo = slot_sbi(2, blk, lo, n);
                let r_hi = slot_sbi(2, blk, hi, n);
                m.set(r_lo, col, m.at(r_lo, col) + 1);
                m.set(r_hi, col, m.at(r_hi, col) - 1);
            }
        }
    }
    MonOp::substitution(m)
}

/// Ordered product of embedded copies of `G`:
/// outer index `l` ascending `1..=j`, inner index `k` descending `n..=i`,
/// with `G_{1:k,2:l}` acting on block `k` of the first space and block `l` of
/// the second.
pub fn make_g_bracket(i: usize, j: usize, n: usize) -> Result<MonOp> {
    if i == 0 || i > n || j == 0 || j > n {
        return Err(Error::BadIndex(format!("bracket indices ({i},{j}) outside 1..={n}")));
    }
    let total = 2 * n * n;
    let g = make_g(n);
    let mut acc = MonOp::identity(total);
    for l in 1..=j {
        for k in (i..=n).rev() {
            let mut slots = Vec::with_capacity(2 * n);
            for inner in 1..=n {
                slots.push(slot_sbi(1, k, inner, n) + 1);
            }
            for inner in 1..=n {
                slots.push(slot_sbi(2, l, inner, n) + 1);
            }
            let factor = g.embed(&IndexMap::new(total, &slots)?)?;
            acc = acc.compose(&factor)?;
        }
    }
    Ok(acc)
}
