//! The check registry: every verified identity lives in exactly one suite.

use std::sync::OnceLock;

use super::{CheckDef, CheckOutcome, SuiteConfig};
use crate::error::Result;
use crate::monop::{
    make_big_g, make_g, make_g_bracket, make_generator, Generator, IndexMap, LPoly, MonOp, OpSum,
};
use crate::qgroup::{
    self, build_big_r_closed, build_big_r_product, build_r_closed, build_r_traced, mfor_lhs,
    mfor_rhs, GenSet, RhoDirection,
};
use crate::scalar::{qq_factorial, QRat};
use crate::series::{
    b_psi_argument, build_b, build_b_tilde, psi_series, FactorParam, PSeries,
};
use Generator::*;

/// Every anchor the registry must cover, one owner suite each.
pub const REQUIRED_ANCHORS: &[&str] = &[
    // prop1
    "weyl-pair",
    "f-involution",
    "f-commutation",
    "constant-te",
    // pentagon
    "q-exponential",
    "pentagon",
    // te-spectral
    "b-operator",
    "spectral-te",
    // four-term
    "four-term-generators",
    "four-term",
    // monodromy
    "monodromy",
    "monodromy-ybe",
    // trace-closed-form
    "transfer-trace",
    "r-closed-form",
    "r-closed-form-rotated",
    // ybe-r
    "transfer-ybe",
    // ybe-bigr
    "m-factorization",
    "bigr-closed-form",
    "difference-ybe",
    // srelations
    "f-factorization",
    "s-relations",
    "p-trace",
    // grelations
    "g-substitution",
    "g-relations",
    // ef-relations
    "e-generators",
    "f-generators",
    "perm-relations",
    "quad-relations",
    "ef-commutativity",
    // hopf
    "hopf-relations",
    "central-elements",
    // bigg-twist
    "bigg-substitution",
    "twist-conjugation",
    // mfor
    "root-vectors",
    "q-exponential-identity",
    "spectral-decoration",
];

const SUITE_NAMES: &[&str] = &[
    "prop1",
    "pentagon",
    "te-spectral",
    "four-term",
    "monodromy",
    "trace-closed-form",
    "ybe-r",
    "ybe-bigr",
    "srelations",
    "grelations",
    "ef-relations",
    "hopf",
    "bigg-twist",
    "mfor",
    "all",
];

pub fn suite_names() -> &'static [&'static str] {
    SUITE_NAMES
}

macro_rules! checks {
    ($( $name:literal / $anchor:literal => $fun:path ),+ $(,)?) => {
        &[ $( CheckDef { name: $name, anchor: $anchor, run: $fun } ),+ ]
    };
}

static PROP1: &[CheckDef] = checks![
    "weyl-commutation" / "weyl-pair" => check_weyl,
    "f-involution" / "f-involution" => check_f_involution,
    "f-commutation-u1" / "f-commutation" => check_f_u1,
    "f-commutation-u2" / "f-commutation" => check_f_u2,
    "f-commutation-v1v2" / "f-commutation" => check_f_v1v2,
    "f-commutation-v2" / "f-commutation" => check_f_v2,
    "constant-te" / "constant-te" => check_constant_te,
];

static PENTAGON: &[CheckDef] = checks![
    "psi-expansion" / "q-exponential" => check_psi_expansion,
    "pentagon-weyl-pair" / "pentagon" => check_pentagon_pair,
    "pentagon" / "pentagon" => check_pentagon,
];

static TE_SPECTRAL: &[CheckDef] = checks![
    "b-series" / "b-operator" => check_b_series,
    "spectral-te" / "spectral-te" => check_spectral_te,
];

static FOUR_TERM: &[CheckDef] = checks![
    "uvw-commutation" / "four-term-generators" => check_uvw_commutation,
    "four-term" / "four-term" => check_four_term,
];

static MONODROMY: &[CheckDef] = checks![
    "monodromy-constant" / "monodromy" => check_monodromy_constant,
    "monodromy-ybe" / "monodromy-ybe" => check_monodromy_ybe,
];

static TRACE_CLOSED_FORM: &[CheckDef] = checks![
    "transfer-trace" / "transfer-trace" => check_transfer_trace,
    "r-closed-form" / "r-closed-form" => check_r_closed_form,
    "r-closed-form-rotated" / "r-closed-form-rotated" => check_r_closed_form_rotated,
];

static YBE_R: &[CheckDef] = checks![
    "transfer-ybe" / "transfer-ybe" => check_transfer_ybe,
];

static YBE_BIGR: &[CheckDef] = checks![
    "m-factorization" / "m-factorization" => check_m_factorization,
    "bigr-closed-form" / "bigr-closed-form" => check_bigr_closed_form,
    "bigr-ybe" / "difference-ybe" => check_bigr_ybe,
];

static SRELATIONS: &[CheckDef] = checks![
    "f-factorization" / "f-factorization" => check_f_factorization,
    "s-exchange" / "s-relations" => check_s_exchange,
    "s-weyl-action" / "s-relations" => check_s_weyl_action,
    "p-partial-trace" / "p-trace" => check_p_trace,
];

static GRELATIONS: &[CheckDef] = checks![
    "g-substitution" / "g-substitution" => check_g_substitution,
    "g-relations" / "g-relations" => check_g_relations,
];

static EF_RELATIONS: &[CheckDef] = checks![
    "e-construction" / "e-generators" => check_e_construction,
    "f-construction" / "f-generators" => check_f_construction,
    "perm-relations" / "perm-relations" => check_perm_relations,
    "quad-relations" / "quad-relations" => check_quad_relations,
    "commutativity-scan" / "ef-commutativity" => check_commutativity_scan,
];

static HOPF: &[CheckDef] = checks![
    "cartan-commutativity" / "hopf-relations" => check_cartan_commutativity,
    "cartan-action" / "hopf-relations" => check_cartan_action,
    "ef-commutator" / "hopf-relations" => check_ef_commutator,
    "serre-relations" / "hopf-relations" => check_serre,
    "distant-commutativity" / "hopf-relations" => check_distant_commutativity,
    "central-elements" / "central-elements" => check_central_elements,
];

static BIGG_TWIST: &[CheckDef] = checks![
    "bigg-substitution" / "bigg-substitution" => check_bigg_substitution,
    "twist-raising" / "twist-conjugation" => check_twist_raising,
    "twist-lowering" / "twist-conjugation" => check_twist_lowering,
];

static MFOR: &[CheckDef] = checks![
    "root-vectors" / "root-vectors" => check_root_vectors,
    "q-exponential-identity" / "q-exponential-identity" => check_mfor,
    "spectral-decoration" / "spectral-decoration" => check_spectral_decoration,
];

static ALL: OnceLock<Vec<CheckDef>> = OnceLock::new();

pub fn suite_checks(suite: &str) -> Option<&'static [CheckDef]> {
    match suite {
        "prop1" => Some(PROP1),
        "pentagon" => Some(PENTAGON),
        "te-spectral" => Some(TE_SPECTRAL),
        "four-term" => Some(FOUR_TERM),
        "monodromy" => Some(MONODROMY),
        "trace-closed-form" => Some(TRACE_CLOSED_FORM),
        "ybe-r" => Some(YBE_R),
        "ybe-bigr" => Some(YBE_BIGR),
        "srelations" => Some(SRELATIONS),
        "grelations" => Some(GRELATIONS),
        "ef-relations" => Some(EF_RELATIONS),
        "hopf" => Some(HOPF),
        "bigg-twist" => Some(BIGG_TWIST),
        "mfor" => Some(MFOR),
        "all" => Some(ALL.get_or_init(|| {
            SUITE_NAMES
                .iter()
                .filter(|&&s| s != "all")
                .flat_map(|&s| suite_checks(s).unwrap().iter().copied())
                .collect()
        })),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// outcome helpers
// ---------------------------------------------------------------------------

fn ops_eq(l: &OpSum, r: &OpSum) -> CheckOutcome {
    CheckOutcome {
        equal: l == r,
        lhs_terms: l.term_count(),
        rhs_terms: r.term_count(),
        max_order: 0,
        detail: None,
    }
}

fn monops_eq(l: &MonOp, r: &MonOp) -> CheckOutcome {
    ops_eq(&OpSum::from(l.clone()), &OpSum::from(r.clone()))
}

fn series_eq(l: &PSeries, r: &PSeries) -> CheckOutcome {
    CheckOutcome {
        equal: l == r,
        lhs_terms: l.total_terms(),
        rhs_terms: r.total_terms(),
        max_order: l.cap().min(r.cap()),
        detail: None,
    }
}

fn conjunction(parts: Vec<CheckOutcome>) -> CheckOutcome {
    let mut out = CheckOutcome {
        equal: true,
        lhs_terms: 0,
        rhs_terms: 0,
        max_order: 0,
        detail: None,
    };
    let mut failing = Vec::new();
    for (i, p) in parts.into_iter().enumerate() {
        if !p.equal {
            failing.push(i);
        }
        out.equal &= p.equal;
        out.lhs_terms += p.lhs_terms;
        out.rhs_terms += p.rhs_terms;
        out.max_order = out.max_order.max(p.max_order);
    }
    if !failing.is_empty() {
        out.detail = Some(format!("failing sub-checks (0-based): {failing:?}"));
    }
    out
}

/// Effective truncation order: an explicit order wins, otherwise the owning
/// suite's default (so `verify all` mixes per-suite defaults).
fn cap_for(cfg: &SuiteConfig, suite: &str) -> usize {
    cfg.order
        .unwrap_or_else(|| super::default_order(suite, cfg.n))
}

fn gen(kind: Generator, slots: &[usize], arity: usize) -> Result<MonOp> {
    make_generator(kind, slots, arity)
}

fn unit(len: usize, idx: usize) -> Vec<u32> {
    let mut e = vec![0u32; len];
    e[idx] += 1;
    e
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn refs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

// ---------------------------------------------------------------------------
// prop1
// ---------------------------------------------------------------------------

fn check_weyl(_: &SuiteConfig) -> Result<CheckOutcome> {
    let u = gen(U, &[1], 1)?;
    let v = gen(V, &[1], 1)?;
    let lhs = u.compose(&v)?;
    let rhs = v.compose(&u)?.scale(&QRat::q())?;
    Ok(monops_eq(&lhs, &rhs))
}

fn check_f_involution(_: &SuiteConfig) -> Result<CheckOutcome> {
    let f = gen(F, &[1, 2, 3], 3)?;
    Ok(monops_eq(&f.compose(&f)?, &MonOp::identity(3)))
}

fn check_f_u1(_: &SuiteConfig) -> Result<CheckOutcome> {
    let f = gen(F, &[1, 2, 3], 3)?;
    let u1 = gen(U, &[1], 3)?;
    Ok(monops_eq(&u1.compose(&f)?, &f.compose(&u1)?))
}

fn check_f_u2(_: &SuiteConfig) -> Result<CheckOutcome> {
    let f = gen(F, &[1, 2, 3], 3)?;
    let lhs = gen(U, &[2], 3)?.compose(&f)?;
    let rhs = f.compose(&gen(U, &[1], 3)?)?.compose(&gen(U, &[3], 3)?)?;
    Ok(monops_eq(&lhs, &rhs))
}

fn check_f_v1v2(_: &SuiteConfig) -> Result<CheckOutcome> {
    let f = gen(F, &[1, 2, 3], 3)?;
    let v1v2 = gen(V, &[1], 3)?.compose(&gen(V, &[2], 3)?)?;
    Ok(monops_eq(&v1v2.compose(&f)?, &f.compose(&v1v2)?))
}

fn check_f_v2(_: &SuiteConfig) -> Result<CheckOutcome> {
    let f = gen(F, &[1, 2, 3], 3)?;
    let lhs = gen(V, &[2], 3)?.compose(&f)?;
    let rhs = f.compose(&gen(V, &[3], 3)?)?;
    Ok(monops_eq(&lhs, &rhs))
}

fn compose_chain(factors: &[MonOp]) -> Result<MonOp> {
    let mut acc = MonOp::identity(factors[0].arity());
    for f in factors {
        acc = acc.compose(f)?;
    }
    Ok(acc)
}

fn check_constant_te(_: &SuiteConfig) -> Result<CheckOutcome> {
    let f = |a, b, c| gen(F, &[a, b, c], 6);
    let lhs = compose_chain(&[f(1, 2, 4)?, f(1, 3, 5)?, f(2, 3, 6)?, f(4, 5, 6)?])?;
    let rhs = compose_chain(&[f(4, 5, 6)?, f(2, 3, 6)?, f(1, 3, 5)?, f(1, 2, 4)?])?;
    Ok(monops_eq(&lhs, &rhs))
}

// ---------------------------------------------------------------------------
// pentagon
// ---------------------------------------------------------------------------

fn check_psi_expansion(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let cap = cap_for(cfg, "pentagon");
    let m = OpSum::from(gen(U, &[1], 1)?.pow(2)?);
    let s = psi_series(&["x"], cap, &[1], &m)?;
    let mut parts = Vec::new();
    for k in 0..=cap {
        let sign = if k % 2 == 0 { QRat::one() } else { -&QRat::one() };
        let expect = m.pow(k)?.scale(&sign.checked_div(&qq_factorial(k))?);
        let got = s.coeff(&[k as u32]).cloned().unwrap_or_else(|| OpSum::zero(1));
        parts.push(ops_eq(&got, &expect));
    }
    let mut out = conjunction(parts);
    out.max_order = cap;
    Ok(out)
}

fn pentagon_ops() -> Result<(OpSum, OpSum)> {
    let x = OpSum::from(gen(U, &[1], 1)?.pow(2)?);
    let y = OpSum::from(gen(V, &[1], 1)?);
    Ok((x, y))
}

fn check_pentagon_pair(_: &SuiteConfig) -> Result<CheckOutcome> {
    let (x, y) = pentagon_ops()?;
    let lhs = x.compose(&y)?;
    let rhs = y.compose(&x)?.scale(&QRat::q_power(2));
    Ok(ops_eq(&lhs, &rhs))
}

fn check_pentagon(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let cap = cap_for(cfg, "pentagon");
    let params = ["x", "y"];
    let (mx, my) = pentagon_ops()?;
    let myx = my.compose(&mx)?;
    let psi_x = psi_series(&params, cap, &[1, 0], &mx)?;
    let psi_y = psi_series(&params, cap, &[0, 1], &my)?;
    let psi_yx = psi_series(&params, cap, &[1, 1], &myx)?;
    let lhs = psi_x.mul(&psi_y)?;
    let rhs = psi_y.mul(&psi_yx)?.mul(&psi_x)?;
    Ok(series_eq(&lhs, &rhs))
}

// ---------------------------------------------------------------------------
// te-spectral
// ---------------------------------------------------------------------------

fn check_b_series(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let cap = cap_for(cfg, "te-spectral");
    let b = build_b(&["x"], cap, 3, &[1, 2, 3], &[1])?;
    let f = OpSum::from(gen(F, &[1, 2, 3], 3)?);
    let m = OpSum::from(b_psi_argument());
    let mut parts = Vec::new();
    for k in 0..=cap {
        let sign = if k % 2 == 0 { QRat::one() } else { -&QRat::one() };
        let expect = f
            .compose(&m.pow(k)?)?
            .scale(&sign.checked_div(&qq_factorial(k))?);
        let got = b.coeff(&[k as u32]).cloned().unwrap_or_else(|| OpSum::zero(3));
        parts.push(ops_eq(&got, &expect));
    }
    // Constant solution at parameter zero.
    let zeroed = b.subst(&crate::series::ParamSubst::zero_at(1, 0))?;
    parts.push(series_eq(&zeroed, &PSeries::from_opsum(&["x"], cap, f)));
    let mut out = conjunction(parts);
    out.max_order = cap;
    Ok(out)
}

fn check_spectral_te(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let cap = cap_for(cfg, "te-spectral");
    let p = ["x", "y", "z"];
    let b = |slots: [usize; 3], expo: &[u32]| build_b(&p, cap, 6, &slots, expo);
    let lhs = b([1, 2, 4], &[1, 0, 0])?
        .mul(&b([1, 3, 5], &[1, 0, 1])?)?
        .mul(&b([2, 3, 6], &[0, 1, 0])?)?
        .mul(&b([4, 5, 6], &[0, 0, 1])?)?;
    let rhs = b([4, 5, 6], &[0, 1, 0])?
        .mul(&b([2, 3, 6], &[0, 0, 1])?)?
        .mul(&b([1, 3, 5], &[1, 1, 0])?)?
        .mul(&b([1, 2, 4], &[1, 0, 0])?)?;
    Ok(series_eq(&lhs, &rhs))
}

// ---------------------------------------------------------------------------
// four-term
// ---------------------------------------------------------------------------

fn four_term_ops() -> Result<(MonOp, MonOp, MonOp)> {
    // U = v1 u1^-1 u2 u3^-1 v3^-1, V = v2 u2^-1 u3 u4 u5^-1 v5^-1,
    // W = v3 u3^-1 u5 u6^-1 v6^-1, all on six variables.
    let mu = b_psi_argument().embed(&IndexMap::new(6, &[1, 2, 3])?)?;
    let mv = compose_chain(&[
        gen(V, &[2], 6)?,
        gen(UInv, &[2], 6)?,
        gen(U, &[3], 6)?,
        gen(U, &[4], 6)?,
        gen(UInv, &[5], 6)?,
        gen(VInv, &[5], 6)?,
    ])?;
    let mw = b_psi_argument().embed(&IndexMap::new(6, &[3, 5, 6])?)?;
    Ok((mu, mv, mw))
}

fn check_uvw_commutation(_: &SuiteConfig) -> Result<CheckOutcome> {
    let (mu, mv, mw) = four_term_ops()?;
    let q2 = QRat::q_power(2);
    let parts = vec![
        monops_eq(&mu.compose(&mv)?, &mv.compose(&mu)?.scale(&q2)?),
        monops_eq(&mv.compose(&mw)?, &mw.compose(&mv)?.scale(&q2)?),
        monops_eq(&mw.compose(&mu)?, &mu.compose(&mw)?.scale(&q2)?),
    ];
    Ok(conjunction(parts))
}

fn check_four_term(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let cap = cap_for(cfg, "four-term");
    let p = ["x", "y", "z"];
    let (mu, mv, mw) = four_term_ops()?;
    let psi_of = |expo: &[u32], m: &MonOp| psi_series(&p, cap, expo, &OpSum::from(m.clone()));
    let lhs = psi_of(&[1, 0, 0], &mu)?
        .mul(&psi_of(&[1, 0, 1], &mu.compose(&mw)?)?)?
        .mul(&psi_of(&[0, 1, 0], &mv)?)?
        .mul(&psi_of(&[0, 0, 1], &mw)?)?;
    let rhs = psi_of(&[0, 1, 0], &mv)?
        .mul(&psi_of(&[0, 0, 1], &mw)?)?
        .mul(&psi_of(&[1, 1, 0], &mv.compose(&mu)?)?)?
        .mul(&psi_of(&[1, 0, 0], &mu)?)?;
    Ok(series_eq(&lhs, &rhs))
}

// ---------------------------------------------------------------------------
// monodromy
// ---------------------------------------------------------------------------

/// Monodromy factor embedded in the 3-block-plus-3 layout of `3n + 3`
/// variables: factor `i` acts on (block `b1` slot `i`, block `b2` slot `i`,
/// bare slot `bare`), with a per-factor decoration.
fn monodromy_block(
    params: &[&str],
    cap: usize,
    n: usize,
    b1: usize,
    b2: usize,
    bare: usize,
    deco: &dyn Fn(usize) -> FactorParam,
) -> Result<PSeries> {
    let total = 3 * n + 3;
    let triples: Vec<[usize; 3]> = (1..=n)
        .map(|i| [(b1 - 1) * n + i, (b2 - 1) * n + i, 3 * n + bare - 3])
        .collect();
    let fps: Vec<FactorParam> = (1..=n).map(deco).collect();
    build_b_tilde(params, cap, total, &triples, &fps)
}

fn check_monodromy_constant(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let cap = cap_for(cfg, "monodromy");
    let params = ["x"];
    let zeroed = monodromy_block(&params, cap, n, 1, 2, 4, &|_| FactorParam::Zero)?;
    let total = 3 * n + 3;
    let mut expect = MonOp::identity(total);
    for i in (1..=n).rev() {
        expect = expect.compose(&gen(F, &[i, n + i, 3 * n + 1], total)?)?;
    }
    Ok(series_eq(
        &zeroed,
        &PSeries::from_opsum(&params, cap, OpSum::from(expect)),
    ))
}

fn check_monodromy_ybe(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let cap = cap_for(cfg, "monodromy");
    let nm = [names("x", n), names("y", n)].concat();
    let p = refs(&nm);
    let total = 3 * n + 3;
    let nparams = 2 * n;
    let x = |i: usize| unit(nparams, i - 1);
    let y = |i: usize| unit(nparams, n + i - 1);
    let prev = |i: usize| qgroup_wrap(i as i64 - 1, n);
    let add = |a: Vec<u32>, b: Vec<u32>| -> Vec<u32> {
        a.iter().zip(&b).map(|(u, v)| u + v).collect()
    };
    let mono = |e: Vec<u32>| FactorParam::Monomial(e);

    let bt_x = monodromy_block(&p, cap, n, 1, 2, 4, &|i| mono(x(i)))?;
    let bt_xty = monodromy_block(&p, cap, n, 1, 3, 5, &|i| mono(add(x(i), y(prev(i)))))?;
    let bt_y = monodromy_block(&p, cap, n, 2, 3, 6, &|i| mono(y(i)))?;
    let b_yn = build_b(
        &p,
        cap,
        total,
        &[3 * n + 1, 3 * n + 2, 3 * n + 3],
        &y(n),
    )?;
    let lhs = bt_x.mul(&bt_xty)?.mul(&bt_y)?.mul(&b_yn)?;

    let bt_ty = monodromy_block(&p, cap, n, 2, 3, 6, &|i| mono(y(prev(i))))?;
    let bt_xy = monodromy_block(&p, cap, n, 1, 3, 5, &|i| mono(add(x(i), y(i))))?;
    let rhs = b_yn.mul(&bt_ty)?.mul(&bt_xy)?.mul(&bt_x)?;
    Ok(series_eq(&lhs, &rhs))
}

fn qgroup_wrap(i: i64, n: usize) -> usize {
    ((i - 1).rem_euclid(n as i64) + 1) as usize
}

// ---------------------------------------------------------------------------
// trace-closed-form
// ---------------------------------------------------------------------------

/// Decorations of the monodromy at parameter vector `(x_1,...,x_(n-1), 0)`
/// rotated `rot` times: factor `i` carries `x_(i-rot mod n)`, zero when that
/// index is `n`.
fn rotated_zero_tail(n: usize, rot: usize, i: usize) -> FactorParam {
    let idx = qgroup_wrap(i as i64 - rot as i64, n);
    if idx == n {
        FactorParam::Zero
    } else {
        FactorParam::Monomial(unit(n, idx - 1))
    }
}

fn check_transfer_trace(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let cap = cap_for(cfg, "trace-closed-form");
    let nm = names("x", n);
    let p = refs(&nm);
    let slots = qgroup::standard_b_tilde_slots(n);
    let fps: Vec<FactorParam> = (1..=n).map(|i| rotated_zero_tail(n, 0, i)).collect();
    let bt = build_b_tilde(&p, cap.min(2), 2 * n + 1, &slots, &fps)?;
    let traced = bt.partial_trace(2 * n + 1)?;
    // Oracle: matrix elements of the traced coefficients equal windowed
    // diagonal sums of the untraced ones.
    let probes: Vec<Vec<i64>> = vec![
        vec![0; 2 * n],
        (0..2 * n).map(|k| if k % 2 == 0 { 1 } else { -1 }).collect(),
        (0..2 * n).map(|k| (k as i64 % 3) - 1).collect(),
    ];
    let mut equal = true;
    for (expo, coeff) in bt.coeffs() {
        let tr = traced.coeff(expo).cloned().unwrap_or_else(|| OpSum::zero(2 * n));
        for a in &probes {
            let direct = tr.apply(&LPoly::monomial(a.clone(), QRat::one()))?;
            let mut summed = LPoly::zero(2 * n);
            for m in -8..=8i64 {
                let mut full = a.clone();
                full.push(m);
                let image = coeff.apply(&LPoly::monomial(full, QRat::one()))?;
                for (e, c) in image.terms() {
                    if e[2 * n] == m {
                        let reduced = LPoly::monomial(e[..2 * n].to_vec(), c.clone());
                        summed = summed.add(&reduced)?;
                    }
                }
            }
            equal &= direct == summed;
        }
    }
    Ok(CheckOutcome {
        equal,
        lhs_terms: traced.total_terms(),
        rhs_terms: bt.total_terms(),
        max_order: cap.min(2),
        detail: None,
    })
}

fn traced_transfer(n: usize, cap: usize, p: &[&str], rot: usize) -> Result<PSeries> {
    let fps: Vec<FactorParam> = (1..=n).map(|i| rotated_zero_tail(n, rot, i)).collect();
    build_r_traced(p, cap, n, &fps)
}

fn check_r_closed_form(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let cap = cap_for(cfg, "trace-closed-form");
    let nm = names("x", n);
    let p = refs(&nm);
    let traced = traced_transfer(n, cap, &p, 0)?;
    let expos: Vec<Vec<u32>> = (1..n).map(|k| unit(n, k - 1)).collect();
    let closed = build_r_closed(&p, cap, n, 0, &expos)?;
    Ok(series_eq(&traced, &closed))
}

fn check_r_closed_form_rotated(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let cap = cap_for(cfg, "trace-closed-form");
    let nm = names("x", n);
    let p = refs(&nm);
    let mut parts = Vec::new();
    for rot in 1..n {
        let traced = traced_transfer(n, cap, &p, rot)?;
        let expos: Vec<Vec<u32>> = (1..n).map(|k| unit(n, k - 1)).collect();
        let closed = build_r_closed(&p, cap, n, rot, &expos)?;
        parts.push(series_eq(&traced, &closed));
    }
    Ok(conjunction(parts))
}

// ---------------------------------------------------------------------------
// ybe-r
// ---------------------------------------------------------------------------

fn embed_blocks(s: &PSeries, block_width: usize, total: usize, a: usize, b: usize) -> Result<PSeries> {
    let mut slots = Vec::with_capacity(2 * block_width);
    for i in 1..=block_width {
        slots.push((a - 1) * block_width + i);
    }
    for i in 1..=block_width {
        slots.push((b - 1) * block_width + i);
    }
    s.embed(&IndexMap::new(total, &slots)?)
}

fn check_transfer_ybe(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let cap = cap_for(cfg, "ybe-r");
    let nm = [names("x", n), names("y", n)].concat();
    let p = refs(&nm);
    let nparams = 2 * n;
    let x = |i: usize| unit(nparams, i - 1);
    let y = |i: usize| unit(nparams, n + i - 1);
    let prev = |i: usize| qgroup_wrap(i as i64 - 1, n);
    let add = |a: Vec<u32>, b: Vec<u32>| -> Vec<u32> {
        a.iter().zip(&b).map(|(u, v)| u + v).collect()
    };
    // Fully generic decorations: the transfer matrix exists as a formal
    // trace without setting any parameter to zero.
    let r = |deco: &dyn Fn(usize) -> Vec<u32>| -> Result<PSeries> {
        let fps: Vec<FactorParam> = (1..=n).map(|i| FactorParam::Monomial(deco(i))).collect();
        build_r_traced(&p, cap, n, &fps)
    };
    let total = 3 * n;
    let r_x = r(&|i| x(i))?;
    let r_xty = r(&|i| add(x(i), y(prev(i))))?;
    let r_y = r(&|i| y(i))?;
    let r_ty = r(&|i| y(prev(i)))?;
    let r_xy = r(&|i| add(x(i), y(i)))?;
    let lhs = embed_blocks(&r_x, n, total, 1, 2)?
        .mul(&embed_blocks(&r_xty, n, total, 1, 3)?)?
        .mul(&embed_blocks(&r_y, n, total, 2, 3)?)?;
    let rhs = embed_blocks(&r_ty, n, total, 2, 3)?
        .mul(&embed_blocks(&r_xy, n, total, 1, 3)?)?
        .mul(&embed_blocks(&r_x, n, total, 1, 2)?)?;
    Ok(series_eq(&lhs, &rhs))
}

// ---------------------------------------------------------------------------
// ybe-bigr
// ---------------------------------------------------------------------------

fn check_m_factorization(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let cap = cap_for(cfg, "ybe-bigr");
    let nm = names("x", n - 1);
    let p = refs(&nm);
    let expos: Vec<Vec<u32>> = (1..n).map(|k| unit(n - 1, k - 1)).collect();
    // Row-major nesting (outer j ascending over M-factors).
    let row_major = build_big_r_product(&p, cap, n, &expos)?;
    // Column-major nesting: outer i descending, inner j ascending.
    let total = 2 * n * n;
    let mut col_major = PSeries::one(&p, cap, total);
    for i in (1..=n).rev() {
        for j in 1..=n {
            let r = build_r_closed(&p, cap, n, i % n, &expos)?;
            let mut slots = Vec::with_capacity(2 * n);
            for inner in 1..=n {
                slots.push(((i - 1) * n) + inner);
            }
            for inner in 1..=n {
                slots.push(n * n + ((j - 1) * n) + inner);
            }
            col_major = col_major.mul(&r.embed(&IndexMap::new(total, &slots)?)?)?;
        }
    }
    Ok(series_eq(&row_major, &col_major))
}

fn check_bigr_closed_form(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let cap = cap_for(cfg, "ybe-bigr");
    let nm = names("x", n - 1);
    let p = refs(&nm);
    let expos: Vec<Vec<u32>> = (1..n).map(|k| unit(n - 1, k - 1)).collect();
    let product = build_big_r_product(&p, cap, n, &expos)?;
    let gs = GenSet::new(n)?;
    let closed = build_big_r_closed(&gs, &p, cap, &|k| unit(n - 1, k - 1))?;
    Ok(series_eq(&product, &closed))
}

fn check_bigr_ybe(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let cap = cap_for(cfg, "ybe-bigr");
    let rank = n - 1;
    let nm = [names("x", rank), names("y", rank)].concat();
    let p = refs(&nm);
    let gs = GenSet::new(n)?;
    let x = |k: usize| unit(2 * rank, k - 1);
    let y = |k: usize| unit(2 * rank, rank + k - 1);
    let xy = |k: usize| {
        let mut e = x(k);
        e[rank + k - 1] += 1;
        e
    };
    let big_r_x = build_big_r_closed(&gs, &p, cap, &x)?;
    let big_r_y = build_big_r_closed(&gs, &p, cap, &y)?;
    let big_r_xy = build_big_r_closed(&gs, &p, cap, &xy)?;
    let n2 = n * n;
    let total = 3 * n2;
    let lhs = embed_blocks(&big_r_x, n2, total, 1, 2)?
        .mul(&embed_blocks(&big_r_xy, n2, total, 1, 3)?)?
        .mul(&embed_blocks(&big_r_y, n2, total, 2, 3)?)?;
    let rhs = embed_blocks(&big_r_y, n2, total, 2, 3)?
        .mul(&embed_blocks(&big_r_xy, n2, total, 1, 3)?)?
        .mul(&embed_blocks(&big_r_x, n2, total, 1, 2)?)?;
    Ok(series_eq(&lhs, &rhs))
}

// ---------------------------------------------------------------------------
// srelations
// ---------------------------------------------------------------------------

fn check_f_factorization(_: &SuiteConfig) -> Result<CheckOutcome> {
    let lhs = compose_chain(&[gen(SInv, &[1, 3], 3)?, gen(P, &[2, 3], 3)?, gen(S, &[1, 3], 3)?])?;
    Ok(monops_eq(&lhs, &gen(F, &[1, 2, 3], 3)?))
}

fn check_s_exchange(_: &SuiteConfig) -> Result<CheckOutcome> {
    let s12 = gen(S, &[1, 2], 3)?;
    let s13 = gen(S, &[1, 3], 3)?;
    let s23 = gen(S, &[2, 3], 3)?;
    Ok(conjunction(vec![
        monops_eq(&s12.compose(&s13)?, &s13.compose(&s12)?),
        monops_eq(&s13.compose(&s23)?, &s23.compose(&s13)?),
    ]))
}

fn check_s_weyl_action(_: &SuiteConfig) -> Result<CheckOutcome> {
    let s = gen(S, &[1, 2], 2)?;
    let u1 = gen(U, &[1], 2)?;
    let u2 = gen(U, &[2], 2)?;
    let v1 = gen(V, &[1], 2)?;
    let v2 = gen(V, &[2], 2)?;
    Ok(conjunction(vec![
        monops_eq(&s.compose(&u1)?, &u1.compose(&s)?),
        monops_eq(&s.compose(&v1)?, &v1.compose(&v2)?.compose(&s)?),
        monops_eq(&s.compose(&u1)?.compose(&u2)?, &u2.compose(&s)?),
        monops_eq(&s.compose(&v2)?, &v2.compose(&s)?),
    ]))
}

fn check_p_trace(_: &SuiteConfig) -> Result<CheckOutcome> {
    let p = OpSum::from(gen(P, &[1, 2], 2)?);
    let tr = p.partial_trace(2)?;
    Ok(ops_eq(&tr, &OpSum::identity(1)))
}

// ---------------------------------------------------------------------------
// grelations
// ---------------------------------------------------------------------------

fn check_g_substitution(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let g = make_g(n);
    // Independent route: exponent bookkeeping straight off the displayed
    // substitution. t_(1:i) -> t_(1:i) t_(2:i) / t_(2:i+1), t_(2:j) -> t_(2:j+1).
    let probes: Vec<Vec<i64>> = vec![
        (0..2 * n).map(|k| k as i64 + 1).collect(),
        (0..2 * n).map(|k| if k % 2 == 0 { -2 } else { 3 }).collect(),
        unit(2 * n, 0).iter().map(|&v| v as i64).collect(),
    ];
    let mut equal = true;
    for a in &probes {
        let (c, got) = g.apply_monomial(a);
        let mut expect = vec![0i64; 2 * n];
        for i in 1..=n {
            expect[i - 1] += a[i - 1];
            expect[n + i - 1] += a[i - 1];
            expect[n + qgroup_wrap(i as i64 + 1, n) - 1] -= a[i - 1];
        }
        for j in 1..=n {
            expect[n + qgroup_wrap(j as i64 + 1, n) - 1] += a[n + j - 1];
        }
        equal &= c.is_one() && got == expect;
    }
    Ok(CheckOutcome {
        equal,
        lhs_terms: 1,
        rhs_terms: 1,
        max_order: 0,
        detail: None,
    })
}

fn check_g_relations(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let total = 2 * n;
    let g = make_g(n);
    let s1 = |i: usize| qgroup_wrap(i as i64, n);
    let s2 = |i: usize| n + qgroup_wrap(i as i64, n);
    let mut parts = Vec::new();
    for i in 1..=n {
        let u1 = gen(U, &[s1(i)], total)?;
        parts.push(monops_eq(&g.compose(&u1)?, &u1.compose(&g)?));
        let v1 = gen(V, &[s1(i)], total)?;
        let rhs = compose_chain(&[
            v1.clone(),
            gen(V, &[s2(i)], total)?,
            gen(VInv, &[s2(i + 1)], total)?,
            g.clone(),
        ])?;
        parts.push(monops_eq(&g.compose(&v1)?, &rhs));
        let u2 = gen(U, &[s2(i)], total)?;
        let rhs = compose_chain(&[
            gen(U, &[s2(i + 1)], total)?,
            gen(U, &[s1(i)], total)?,
            gen(UInv, &[s1(i + 1)], total)?,
            g.clone(),
        ])?;
        parts.push(monops_eq(&g.compose(&u2)?, &rhs));
        let v2 = gen(V, &[s2(i)], total)?;
        let rhs = gen(V, &[s2(i + 1)], total)?.compose(&g)?;
        parts.push(monops_eq(&g.compose(&v2)?, &rhs));
    }
    Ok(conjunction(parts))
}

// ---------------------------------------------------------------------------
// ef-relations
// ---------------------------------------------------------------------------

fn factor_oracle(factors: &[MonOp], composed: &MonOp, arity: usize) -> Result<bool> {
    let probes: Vec<Vec<i64>> = vec![
        vec![0; arity],
        vec![1; arity],
        (0..arity).map(|k| (k as i64 % 3) - 1).collect(),
    ];
    for a in probes {
        let direct = composed.apply(&LPoly::monomial(a.clone(), QRat::one()))?;
        let mut stepped = LPoly::monomial(a, QRat::one());
        for f in factors.iter().rev() {
            stepped = f.apply(&stepped)?;
        }
        if direct != stepped {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_e_construction(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let mut equal = true;
    let mut count = 0;
    for i in 1..n {
        for j in 1..=n {
            let factors = qgroup::e_factor_ops(i, j, n)?;
            let op = qgroup::build_e_monop(i, j, n)?;
            equal &= factor_oracle(&factors, &op, n * n)?;
            count += 1;
        }
    }
    Ok(CheckOutcome {
        equal,
        lhs_terms: count,
        rhs_terms: count,
        max_order: 0,
        detail: None,
    })
}

fn check_f_construction(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let mut equal = true;
    let mut count = 0;
    for i in 1..n {
        for j in 1..=n {
            let factors = qgroup::f_factor_ops(i, j, n)?;
            let op = qgroup::build_f_monop(i, j, n)?;
            equal &= factor_oracle(&factors, &op, n * n)?;
            count += 1;
        }
    }
    Ok(CheckOutcome {
        equal,
        lhs_terms: count,
        rhs_terms: count,
        max_order: 0,
        detail: None,
    })
}

fn check_perm_relations(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let gs = GenSet::new(n)?;
    let q = QRat::q();
    let q2 = QRat::q_power(2);
    let qm1 = QRat::q_power(-1);
    let mut parts = Vec::new();
    // Same copy, adjacent roots: e_(i+1,k) e_(i,k) = q e_(i,k) e_(i+1,k).
    for i in 1..n.saturating_sub(1) {
        for k in 1..=n {
            let (a, b) = (gs.e(i + 1, k), gs.e(i, k));
            parts.push(monops_eq(&a.compose(b)?, &b.compose(a)?.scale(&q)?));
            let (a, b) = (gs.f(i + 1, k), gs.f(i, k));
            parts.push(monops_eq(&a.compose(b)?, &b.compose(a)?.scale(&q)?));
        }
    }
    // Distinct copies k < l.
    for k in 1..=n {
        for l in (k + 1)..=n {
            for i in 1..n {
                for j in 1..n {
                    if i == j {
                        let (a, b) = (gs.e(i, k), gs.e(i, l));
                        parts.push(monops_eq(&a.compose(b)?, &b.compose(a)?.scale(&q2)?));
                        let (a, b) = (gs.f(i, l), gs.f(i, k));
                        parts.push(monops_eq(&a.compose(b)?, &b.compose(a)?.scale(&q2)?));
                    } else if i.abs_diff(j) == 1 {
                        let (a, b) = (gs.e(i, k), gs.e(j, l));
                        parts.push(monops_eq(&a.compose(b)?, &b.compose(a)?.scale(&qm1)?));
                        let (a, b) = (gs.f(i, l), gs.f(j, k));
                        parts.push(monops_eq(&a.compose(b)?, &b.compose(a)?.scale(&qm1)?));
                    }
                }
            }
        }
    }
    // Same copy, mixed pair: e_(i,k) f_(j,k) = q^(+-2) f_(j,k) e_(i,k) for
    // j = k+i resp. j = k+i-1, mod n.
    for k in 1..=n {
        for i in 1..n {
            for (delta, c) in [(0i64, &q2), (1i64, &QRat::q_power(-2))] {
                let j = qgroup_wrap(k as i64 + i as i64 - delta, n);
                if j >= n {
                    continue;
                }
                let (a, b) = (gs.e(i, k), gs.f(j, k));
                parts.push(monops_eq(&a.compose(b)?, &b.compose(a)?.scale(c)?));
            }
        }
    }
    Ok(conjunction(parts))
}

fn check_quad_relations(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let gs = GenSet::new(n)?;
    let mut parts = Vec::new();
    // e_(i,k+1) f_(j,k+1) = f_(j,k) e_(i,k) for k = j - i mod n, k + 1 <= n.
    for i in 1..n {
        for j in 1..n {
            let k = qgroup_wrap(j as i64 - i as i64, n);
            if k >= n {
                continue;
            }
            let lhs = gs.e(i, k + 1).compose(gs.f(j, k + 1))?;
            let rhs = gs.f(j, k).compose(gs.e(i, k))?;
            parts.push(monops_eq(&lhs, &rhs));
        }
    }
    if parts.is_empty() {
        // No admissible index triples at this n; the constraint is vacuous.
        return Ok(CheckOutcome {
            equal: true,
            lhs_terms: 0,
            rhs_terms: 0,
            max_order: 0,
            detail: Some("no admissible index triples at this n".to_string()),
        });
    }
    Ok(conjunction(parts))
}

/// The exact commutation constant `c` with `X Y = c Y X` predicted by the
/// displayed relation tables, `1` for every pair outside them.
fn predicted_constant(
    x_is_e: bool,
    (i, k): (usize, usize),
    y_is_e: bool,
    (j, l): (usize, usize),
    n: usize,
) -> QRat {
    let q = |e: i64| QRat::q_power(e);
    match (x_is_e, y_is_e) {
        (true, true) => {
            if k == l {
                if i == j + 1 {
                    q(1)
                } else if j == i + 1 {
                    q(-1)
                } else {
                    q(0)
                }
            } else if k < l {
                if i == j {
                    q(2)
                } else if i.abs_diff(j) == 1 {
                    q(-1)
                } else {
                    q(0)
                }
            } else if i == j {
                q(-2)
            } else if i.abs_diff(j) == 1 {
                q(1)
            } else {
                q(0)
            }
        }
        (false, false) => {
            if k == l {
                if i == j + 1 {
                    q(1)
                } else if j == i + 1 {
                    q(-1)
                } else {
                    q(0)
                }
            } else if k > l {
                if i == j {
                    q(2)
                } else if i.abs_diff(j) == 1 {
                    q(-1)
                } else {
                    q(0)
                }
            } else if i == j {
                q(-2)
            } else if i.abs_diff(j) == 1 {
                q(1)
            } else {
                q(0)
            }
        }
        (true, false) => {
            if k == l {
                if j == qgroup_wrap(k as i64 + i as i64, n) {
                    q(2)
                } else if j == qgroup_wrap(k as i64 + i as i64 - 1, n) {
                    q(-2)
                } else {
                    q(0)
                }
            } else {
                q(0)
            }
        }
        (false, true) => {
            // Inverse of the mixed rule with the roles swapped.
            let inv = predicted_constant(true, (j, l), false, (i, k), n);
            inv.checked_inv().expect("nonzero power of q")
        }
    }
}

fn check_commutativity_scan(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let gs = GenSet::new(n)?;
    let mut ops: Vec<(bool, usize, usize, &MonOp)> = Vec::new();
    for i in 1..n {
        for j in 1..=n {
            ops.push((true, i, j, gs.e(i, j)));
            ops.push((false, i, j, gs.f(i, j)));
        }
    }
    let mut scanned = 0usize;
    let mut bad = Vec::new();
    for &(xe, xi, xk, xop) in &ops {
        for &(ye, yi, yk, yop) in &ops {
            if xe == ye && xi == yi && xk == yk {
                continue;
            }
            let c = predicted_constant(xe, (xi, xk), ye, (yi, yk), n);
            let lhs = xop.compose(yop)?;
            let rhs = yop.compose(xop)?.scale(&c)?;
            if lhs != rhs {
                bad.push(format!(
                    "({}{:?}, {}{:?})",
                    if xe { "e" } else { "f" },
                    (xi, xk),
                    if ye { "e" } else { "f" },
                    (yi, yk)
                ));
            }
            scanned += 1;
        }
    }
    Ok(CheckOutcome {
        equal: bad.is_empty(),
        lhs_terms: scanned,
        rhs_terms: scanned,
        max_order: 0,
        detail: if bad.is_empty() {
            Some(format!("{scanned} ordered pairs scanned"))
        } else {
            Some(format!("mismatching pairs: {}", bad.join(", ")))
        },
    })
}

// ---------------------------------------------------------------------------
// hopf
// ---------------------------------------------------------------------------

fn check_cartan_commutativity(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let gs = GenSet::new(n)?;
    let mut parts = Vec::new();
    for i in 1..n {
        for j in 1..n {
            let (ki, kj) = (gs.kappa_k(i), gs.kappa_k(j));
            parts.push(monops_eq(&ki.compose(kj)?, &kj.compose(ki)?));
            let (li, lj) = (gs.kappa_l(i), gs.kappa_l(j));
            parts.push(monops_eq(&li.compose(lj)?, &lj.compose(li)?));
            parts.push(monops_eq(
                &gs.kappa_k(i).compose(gs.kappa_l(j))?,
                &gs.kappa_l(j).compose(gs.kappa_k(i))?,
            ));
        }
    }
    Ok(conjunction(parts))
}

fn check_cartan_action(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let gs = GenSet::new(n)?;
    let mut parts = Vec::new();
    for i in 1..n {
        for j in 1..n {
            let a = gs.cartan().a(i, j);
            let k = OpSum::from(gs.kappa_k(i).clone());
            let l = OpSum::from(gs.kappa_l(i).clone());
            let e = gs.kappa_e(j);
            let f = gs.kappa_f(j);
            parts.push(ops_eq(
                &k.compose(e)?,
                &e.compose(&k)?.scale(&QRat::q_power(a)),
            ));
            parts.push(ops_eq(
                &k.compose(f)?,
                &f.compose(&k)?.scale(&QRat::q_power(-a)),
            ));
            parts.push(ops_eq(
                &l.compose(e)?,
                &e.compose(&l)?.scale(&QRat::q_power(-a)),
            ));
            parts.push(ops_eq(
                &l.compose(f)?,
                &f.compose(&l)?.scale(&QRat::q_power(a)),
            ));
        }
    }
    Ok(conjunction(parts))
}

fn check_ef_commutator(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let gs = GenSet::new(n)?;
    let one_minus_q2 = &QRat::one() - &QRat::q_power(2);
    let mut parts = Vec::new();
    for i in 1..n {
        for j in 1..n {
            let com = gs
                .kappa_e(i)
                .compose(gs.kappa_f(j))?
                .sub(&gs.kappa_f(j).compose(gs.kappa_e(i))?)?;
            let expect = if i == j {
                OpSum::from(gs.kappa_k(i).clone())
                    .sub(&OpSum::from(gs.kappa_l(i).clone()))?
                    .scale(&one_minus_q2)
            } else {
                OpSum::zero(gs.arity())
            };
            parts.push(ops_eq(&com, &expect));
        }
    }
    Ok(conjunction(parts))
}

fn check_serre(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let gs = GenSet::new(n)?;
    let qpq = &QRat::q() + &QRat::q_power(-1);
    let mut parts = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) != 1 {
                continue;
            }
            for raising in [true, false] {
                let (a, b) = if raising {
                    (gs.kappa_e(i), gs.kappa_e(j))
                } else {
                    (gs.kappa_f(i), gs.kappa_f(j))
                };
                let b2 = b.compose(b)?;
                let lhs = a.compose(&b2)?.add(&b2.compose(a)?)?;
                let rhs = b.compose(a)?.compose(b)?.scale(&qpq);
                parts.push(ops_eq(&lhs, &rhs));
            }
        }
    }
    if parts.is_empty() {
        return Ok(CheckOutcome {
            equal: true,
            lhs_terms: 0,
            rhs_terms: 0,
            max_order: 0,
            detail: Some("no adjacent root pairs at this n".to_string()),
        });
    }
    Ok(conjunction(parts))
}

fn check_distant_commutativity(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let gs = GenSet::new(n)?;
    let mut parts = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) <= 1 {
                continue;
            }
            parts.push(ops_eq(
                &gs.kappa_e(i).compose(gs.kappa_e(j))?,
                &gs.kappa_e(j).compose(gs.kappa_e(i))?,
            ));
            parts.push(ops_eq(
                &gs.kappa_f(i).compose(gs.kappa_f(j))?,
                &gs.kappa_f(j).compose(gs.kappa_f(i))?,
            ));
        }
    }
    if parts.is_empty() {
        return Ok(CheckOutcome {
            equal: true,
            lhs_terms: 0,
            rhs_terms: 0,
            max_order: 0,
            detail: Some("no distant root pairs at this n".to_string()),
        });
    }
    Ok(conjunction(parts))
}

fn check_central_elements(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let gs = GenSet::new(n)?;
    let mut parts = Vec::new();
    for i in 1..n {
        let z = OpSum::from(gs.kappa_z(i)?);
        parts.push(CheckOutcome {
            equal: !z.is_identity(),
            lhs_terms: z.term_count(),
            rhs_terms: 1,
            max_order: 0,
            detail: None,
        });
        for m in 1..n {
            for g in [
                gs.kappa_e(m).clone(),
                gs.kappa_f(m).clone(),
                OpSum::from(gs.kappa_k(m).clone()),
                OpSum::from(gs.kappa_l(m).clone()),
            ] {
                parts.push(ops_eq(&z.compose(&g)?, &g.compose(&z)?));
            }
        }
    }
    Ok(conjunction(parts))
}

// ---------------------------------------------------------------------------
// bigg-twist
// ---------------------------------------------------------------------------

fn check_bigg_substitution(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let big = make_big_g(n);
    let bracket = make_g_bracket(1, n, n)?;
    let mut parts = vec![monops_eq(&big, &bracket)];
    // Direct formula on probe exponents:
    // t_(1:i:j) picks up prod_m t_(2:m:j-i)/t_(2:m:j-i+1).
    let n2 = n * n;
    let probes: Vec<Vec<i64>> = vec![
        (0..2 * n2).map(|k| k as i64 % 5 - 2).collect(),
        unit(2 * n2, 0).iter().map(|&v| v as i64).collect(),
        unit(2 * n2, n2 - 1).iter().map(|&v| v as i64).collect(),
    ];
    let sbi = |space: usize, block: usize, inner: usize| ((space - 1) * n + (block - 1)) * n + inner;
    for a in &probes {
        let (c, got) = big.apply_monomial(a);
        let mut expect = a.clone();
        for i in 1..=n {
            for j in 1..=n {
                let x = a[sbi(1, i, j) - 1];
                if x == 0 {
                    continue;
                }
                let lo = qgroup_wrap(j as i64 - i as i64, n);
                let hi = qgroup_wrap(j as i64 - i as i64 + 1, n);
                for m in 1..=n {
                    expect[sbi(2, m, lo) - 1] += x;
                    expect[sbi(2, m, hi) - 1] -= x;
                }
            }
        }
        parts.push(CheckOutcome {
            equal: c.is_one() && got == expect,
            lhs_terms: 1,
            rhs_terms: 1,
            max_order: 0,
            detail: None,
        });
    }
    let mut out = conjunction(parts);
    // Record the raw data a diagonal exponential twist would be built from:
    // the substitution is asserted only through its action formula and its
    // conjugation consequences, never as a literal exponential.
    let gs = GenSet::new(n)?;
    let mut lines = Vec::new();
    for i in 1..n {
        lines.push(format!(
            "K_{i} weight {:?}; L_{i} shift {:?}",
            gs.cartan().k_weight(i),
            gs.cartan().l_shift(i)
        ));
    }
    for i in 1..n {
        for j in 1..n {
            lines.push(format!("inverse Cartan ({i},{j}) = {}", gs.cartan().a_inv(i, j)));
        }
    }
    out.detail = Some(lines.join("\n"));
    Ok(out)
}

fn twist_case(gs: &GenSet, raising: bool) -> Result<CheckOutcome> {
    let n = gs.n();
    let n2 = gs.arity();
    let big = OpSum::from(make_big_g(n));
    let big_inv = OpSum::from(make_big_g(n).inverse()?);
    let left_map = IndexMap::new(2 * n2, &(1..=n2).collect::<Vec<_>>())?;
    let right_map = IndexMap::new(2 * n2, &((n2 + 1)..=(2 * n2)).collect::<Vec<_>>())?;
    let mut parts = Vec::new();
    for i in 1..n {
        let (lhs_core, rhs) = if raising {
            // G (E_i x 1) G^-1 = E_i x L_i
            let e1 = gs.kappa_e(i).embed(&left_map)?;
            let rhs = gs
                .kappa_e(i)
                .embed(&left_map)?
                .compose(&OpSum::from(gs.kappa_l(i).clone()).embed(&right_map)?)?;
            (e1, rhs)
        } else {
            // G (1 x F_i) G^-1 = K_i x F_i
            let f2 = gs.kappa_f(i).embed(&right_map)?;
            let rhs = OpSum::from(gs.kappa_k(i).clone())
                .embed(&left_map)?
                .compose(&gs.kappa_f(i).embed(&right_map)?)?;
            (f2, rhs)
        };
        let lhs = big.compose(&lhs_core)?.compose(&big_inv)?;
        parts.push(ops_eq(&lhs, &rhs));
    }
    Ok(conjunction(parts))
}

fn check_twist_raising(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    twist_case(&GenSet::new(cfg.n)?, true)
}

fn check_twist_lowering(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    twist_case(&GenSet::new(cfg.n)?, false)
}

// ---------------------------------------------------------------------------
// mfor
// ---------------------------------------------------------------------------

fn check_root_vectors(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let gs = GenSet::new(n)?;
    let rank = n - 1;
    let mut parts = Vec::new();
    for i in 1..=rank {
        for j in (i + 1)..=n {
            let re = gs.root_e(i, j);
            let rf = gs.root_f(i, j);
            let mut expect = vec![0i64; rank];
            for k in i..j {
                expect[k - 1] = 1;
            }
            let ge = gs.opsum_grading(re)?;
            let gf = gs.opsum_grading(rf)?;
            let neg: Vec<i64> = expect.iter().map(|v| -v).collect();
            parts.push(CheckOutcome {
                equal: !re.is_zero() && !rf.is_zero() && ge == expect && gf == neg,
                lhs_terms: re.term_count(),
                rhs_terms: rf.term_count(),
                max_order: 0,
                detail: None,
            });
        }
    }
    Ok(conjunction(parts))
}

fn check_mfor(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let cap = cap_for(cfg, "mfor");
    let gs = GenSet::new(n)?;
    let nm = names("x", n - 1);
    let p = refs(&nm);
    let lhs = mfor_lhs(&gs, &p, cap)?;
    let rhs = mfor_rhs(&gs, &p, cap)?;
    Ok(series_eq(&lhs, &rhs))
}

fn check_spectral_decoration(cfg: &SuiteConfig) -> Result<CheckOutcome> {
    let n = cfg.n;
    let cap = cap_for(cfg, "mfor").min(3);
    let gs = GenSet::new(n)?;
    let nm = names("x", n - 1);
    let p = refs(&nm);
    let rhs = mfor_rhs(&gs, &p, cap)?;
    // Every coefficient's parameter exponent equals its root grading: the
    // decorations are pure bookkeeping and carry no extra freedom.
    let mut equal = true;
    for (expo, coeff) in rhs.coeffs() {
        let g = gs.opsum_grading(coeff)?;
        let as_u32: Result<Vec<u32>> = g
            .iter()
            .map(|&v| u32::try_from(v).map_err(|_| crate::error::Error::UngradedTerm))
            .collect();
        equal &= as_u32? == *expo;
    }
    // Round trip: removing and re-attaching the decoration is the identity
    // when the cap leaves room.
    let wide = rhs.with_cap(3 * cap);
    let fwd = gs.apply_rho(&wide, RhoDirection::Forward)?;
    let back = gs.apply_rho(&fwd, RhoDirection::Inverse)?;
    equal &= back == wide;
    Ok(CheckOutcome {
        equal,
        lhs_terms: rhs.total_terms(),
        rhs_terms: rhs.total_terms(),
        max_order: cap,
        detail: None,
    })
}
