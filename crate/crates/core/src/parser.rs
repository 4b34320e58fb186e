//! Operator-expression parser for ad-hoc evaluation, plus a renderer that
//! emits parseable expression text.
//!
//! Grammar:
//!
//! ```text
//! expr   := term { "*" term } { ("+"|"-") expr } ;
//! term   := atom [ "^" signed-int ] ;
//! atom   := gen "[" int { "," int } "]"
//!         | "psi" "(" param "*" expr ")"
//!         | "q" | rational | param | "(" expr ")" ;
//! gen    := "u" | "v" | "w" | "wt" | "F" | "S" | "P" | "G" ;
//! ```
//!
//! Any identifier outside the generator alphabet (and `q`, `psi`) is a
//! spectral parameter; expressions containing parameters need a truncation
//! cap. Evaluation produces a scalar, a canonical operator sum, or a
//! truncated series, promoting upward as needed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monop::{make_g, make_generator, Generator, IndexMap, IntMat, MonOp, OpSum};
use crate::scalar::{QPoly, QRat};
use crate::series::{psi_series, PSeries};

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(QRat),
    Op(OpSum),
    Series(PSeries),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Star,
    Plus,
    Minus,
    Caret,
    Slash,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::SyntaxError {
        pos,
        msg: msg.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '*' => {
                out.push((Tok::Star, i));
                i += 1;
            }
            '+' => {
                out.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, i));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, i));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, i));
                i += 1;
            }
            '[' => {
                out.push((Tok::LBracket, i));
                i += 1;
            }
            ']' => {
                out.push((Tok::RBracket, i));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            ',' => {
                out.push((Tok::Comma, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: i64 = text[start..i]
                    .parse()
                    .map_err(|_| err(start, "integer literal out of range"))?;
                out.push((Tok::Int(v), start));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
            }
            _ => return Err(err(i, format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

fn generator_of(name: &str) -> Option<Generator> {
    match name {
        "u" => Some(Generator::U),
        "v" => Some(Generator::V),
        "w" => Some(Generator::W),
        "wt" => Some(Generator::WTilde),
        "F" => Some(Generator::F),
        "S" => Some(Generator::S),
        "P" => Some(Generator::P),
        _ => None,
    }
}

fn is_reserved(name: &str) -> bool {
    matches!(name, "u" | "v" | "w" | "wt" | "F" | "S" | "P" | "G" | "q" | "psi")
}

pub struct ExprContext {
    pub arity: usize,
    pub cap: Option<usize>,
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    arity: usize,
    cap: usize,
    params: Vec<String>,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, p)| p)
            .unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t);
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let pos = self.here();
        match self.next() {
            Some(t) if *t == want => Ok(()),
            _ => Err(err(pos, format!("expected {what}"))),
        }
    }

    fn param_refs(&self) -> Vec<&str> {
        self.params.iter().map(String::as_str).collect()
    }

    fn to_series(&self, v: Value) -> Result<PSeries> {
        let params = self.param_refs();
        Ok(match v {
            Value::Series(s) => s,
            Value::Op(op) => PSeries::from_opsum(&params, self.cap, op),
            Value::Scalar(c) => {
                PSeries::from_opsum(&params, self.cap, OpSum::identity(self.arity).scale(&c))
            }
        })
    }

    fn to_op(&self, v: Value) -> OpSum {
        match v {
            Value::Op(op) => op,
            Value::Scalar(c) => OpSum::identity(self.arity).scale(&c),
            Value::Series(_) => unreachable!("series handled before operator fallback"),
        }
    }

    fn mul_values(&self, a: Value, b: Value) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x * &y),
            (a @ Value::Series(_), b) | (a, b @ Value::Series(_)) => {
                Value::Series(self.to_series(a)?.mul(&self.to_series(b)?)?)
            }
            (a, b) => Value::Op(self.to_op(a).compose(&self.to_op(b))?),
        })
    }

    fn add_values(&self, a: Value, b: Value, sub: bool) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => {
                Value::Scalar(if sub { &x - &y } else { &x + &y })
            }
            (a @ Value::Series(_), b) | (a, b @ Value::Series(_)) => {
                let (x, y) = (self.to_series(a)?, self.to_series(b)?);
                Value::Series(if sub { x.sub(&y)? } else { x.add(&y)? })
            }
            (a, b) => {
                let (x, y) = (self.to_op(a), self.to_op(b));
                Value::Op(if sub { x.sub(&y)? } else { x.add(&y)? })
            }
        })
    }

    fn pow_value(&self, v: Value, e: i64, pos: usize) -> Result<Value> {
        Ok(match v {
            Value::Scalar(c) => Value::Scalar(c.checked_pow(e)?),
            Value::Op(op) => {
                if e >= 0 {
                    Value::Op(op.pow(e as usize)?)
                } else if op.term_count() == 1 {
                    let inv = op.terms().next().unwrap().inverse()?;
                    Value::Op(OpSum::from(inv).pow((-e) as usize)?)
                } else {
                    return Err(err(pos, "negative power of a multi-term operator sum"));
                }
            }
            Value::Series(s) => {
                if e >= 0 {
                    let params = self.param_refs();
                    let mut acc = PSeries::one(&params, self.cap, s.arity());
                    for _ in 0..e {
                        acc = acc.mul(&s)?;
                    }
                    Value::Series(acc)
                } else {
                    let inv = s.inverse()?;
                    let mut acc = inv.clone();
                    for _ in 1..(-e) {
                        acc = acc.mul(&inv)?;
                    }
                    Value::Series(acc)
                }
            }
        })
    }

    fn parse_expr(&mut self) -> Result<Value> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    let rhs = self.parse_term()?;
                    acc = self.mul_values(acc, rhs)?;
                }
                Some(Tok::Plus) => {
                    self.next();
                    let rhs = self.parse_expr()?;
                    acc = self.add_values(acc, rhs, false)?;
                }
                Some(Tok::Minus) => {
                    self.next();
                    let rhs = self.parse_expr()?;
                    acc = self.add_values(acc, rhs, true)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_signed_int(&mut self) -> Result<i64> {
        let pos = self.here();
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.next();
            true
        } else {
            false
        };
        match self.next() {
            Some(Tok::Int(v)) => Ok(if neg { -v } else { *v }),
            _ => Err(err(pos, "expected an integer")),
        }
    }

    fn parse_term(&mut self) -> Result<Value> {
        let atom = self.parse_atom()?;
        if self.peek() == Some(&Tok::Caret) {
            let pos = self.here();
            self.next();
            let e = self.parse_signed_int()?;
            return self.pow_value(atom, e, pos);
        }
        Ok(atom)
    }

    fn parse_slots(&mut self) -> Result<Vec<usize>> {
        self.expect(Tok::LBracket, "`[`")?;
        let mut slots = Vec::new();
        loop {
            let pos = self.here();
            match self.next() {
                Some(Tok::Int(v)) if *v >= 1 => slots.push(*v as usize),
                _ => return Err(err(pos, "expected a 1-based slot index")),
            }
            match self.next() {
                Some(Tok::Comma) => continue,
                Some(Tok::RBracket) => break,
                _ => return Err(err(self.here(), "expected `,` or `]`")),
            }
        }
        Ok(slots)
    }

    fn parse_atom(&mut self) -> Result<Value> {
        let pos = self.here();
        match self.next().cloned() {
            Some(Tok::Minus) => {
                // Allow a leading sign on an atom (e.g. `-1`, `-q`).
                let inner = self.parse_atom()?;
                self.mul_values(Value::Scalar(-&QRat::one()), inner)
            }
            Some(Tok::Int(v)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.next();
                    let dpos = self.here();
                    match self.next() {
                        Some(Tok::Int(d)) if *d != 0 => Ok(Value::Scalar(QRat::from_rational(
                            BigRational::new(BigInt::from(v), BigInt::from(*d)),
                        ))),
                        _ => Err(err(dpos, "expected a nonzero denominator")),
                    }
                } else {
                    Ok(Value::Scalar(QRat::from_int(v)))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.parse_expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => self.parse_ident_atom(&name, pos),
            _ => Err(err(pos, "expected an atom")),
        }
    }

    fn parse_ident_atom(&mut self, name: &str, pos: usize) -> Result<Value> {
        if name == "q" {
            return Ok(Value::Scalar(QRat::q()));
        }
        if name == "psi" {
            self.expect(Tok::LParen, "`(` after psi")?;
            let inner = self.parse_expr()?;
            self.expect(Tok::RParen, "`)`")?;
            let series = self.to_series(inner)?;
            let mut nonzero = series.coeffs();
            let (expo, op) = nonzero
                .next()
                .ok_or_else(|| err(pos, "psi of the zero expression"))?;
            if series.coeffs().count() != 1 {
                return Err(err(pos, "psi argument must be a single decorated monomial"));
            }
            if expo.iter().all(|&k| k == 0) {
                return Err(Error::ZeroParamMonomial);
            }
            let params = self.param_refs();
            return Ok(Value::Series(psi_series(&params, self.cap, expo, op)?));
        }
        if name == "G" {
            let slots = self.parse_slots()?;
            if slots.len() < 2 || slots.len() % 2 != 0 {
                return Err(err(pos, "G takes an even number of slots"));
            }
            let g = make_g(slots.len() / 2);
            let map = IndexMap::new(self.arity, &slots)?;
            return Ok(Value::Op(OpSum::from(g.embed(&map)?)));
        }
        if let Some(kind) = generator_of(name) {
            let slots = self.parse_slots()?;
            return Ok(Value::Op(OpSum::from(make_generator(
                kind, &slots, self.arity,
            )?)));
        }
        // A spectral parameter.
        let idx = self
            .params
            .iter()
            .position(|p| p == name)
            .expect("params pre-scanned");
        let mut expo = vec![0u32; self.params.len()];
        expo[idx] = 1;
        let params = self.param_refs();
        Ok(Value::Series(PSeries::term(
            &params,
            self.cap,
            expo,
            OpSum::identity(self.arity),
        )?))
    }
}

/// Parse and evaluate an expression over `arity` Laurent variables.
/// Expressions mentioning spectral parameters (or `psi`) require a cap.
pub fn parse_expr(text: &str, ctx: &ExprContext) -> Result<Value> {
    let toks = tokenize(text)?;
    // Pre-scan for parameter names in order of first appearance.
    let mut params: Vec<String> = Vec::new();
    let mut uses_psi = false;
    for (t, _) in &toks {
        if let Tok::Ident(name) = t {
            if name == "psi" {
                uses_psi = true;
            } else if !is_reserved(name) && !params.contains(name) {
                params.push(name.clone());
            }
        }
    }
    let cap = match ctx.cap {
        Some(c) => c,
        None if params.is_empty() && !uses_psi => 0,
        None => {
            return Err(err(
                0,
                "expression uses spectral parameters; a truncation cap is required",
            ))
        }
    };
    let end = text.len();
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        arity: ctx.arity,
        cap,
        params,
        end,
    };
    let v = p.parse_expr()?;
    if p.pos < p.toks.len() {
        return Err(err(p.here(), "trailing input"));
    }
    Ok(v)
}

// ---------------------------------------------------------------------------
// rendering back into the grammar
// ---------------------------------------------------------------------------

fn rational_expr(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn poly_expr(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_part = rational_expr(&mag);
        if k == 0 {
            out.push_str(&coeff_part);
        } else {
            if !mag.is_one() {
                out.push_str(&coeff_part);
                out.push('*');
            }
            if k == 1 {
                out.push('q');
            } else {
                out.push_str(&format!("q^{k}"));
            }
        }
    }
    out
}

fn scalar_expr(c: &QRat) -> String {
    if c.denominator().is_one() {
        format!("({})", poly_expr(c.numerator()))
    } else {
        format!(
            "({}) * ({})^-1",
            poly_expr(c.numerator()),
            poly_expr(c.denominator())
        )
    }
}

#[derive(Clone, Copy, Debug)]
enum ElemOp {
    /// row[target] += c * row[source]  ==  S[source+1, target+1]^c
    Transvection { source: usize, target: usize, c: i64 },
    Swap(usize, usize),
}

fn apply_elem(m: &mut [Vec<i64>], op: ElemOp) {
    match op {
        ElemOp::Transvection { source, target, c } => {
            let src = m[source].clone();
            for (t, s) in m[target].iter_mut().zip(&src) {
                *t += c * s;
            }
        }
        ElemOp::Swap(a, b) => m.swap(a, b),
    }
}

/// Decompose a unimodular matrix as elementary left-operations times a
/// diagonal of signs: `(prod ops) * A = diag(d)`.
fn reduce_to_signs(a: &IntMat) -> Result<(Vec<ElemOp>, Vec<i64>)> {
    let n = a.size();
    let mut m: Vec<Vec<i64>> = (0..n)
        .map(|r| (0..n).map(|c| a.at(r, c)).collect())
        .collect();
    let mut ops = Vec::new();
    let push = |m: &mut Vec<Vec<i64>>, ops: &mut Vec<ElemOp>, op: ElemOp| {
        apply_elem(m, op);
        ops.push(op);
    };
    for col in 0..n {
        // Euclidean reduction below the diagonal.
        loop {
            let mut rows: Vec<usize> =
                (col..n).filter(|&r| m[r][col] != 0).collect();
            if rows.is_empty() {
                return Err(Error::NotInvertible("singular matrix".into()));
            }
            rows.sort_by_key(|&r| m[r][col].unsigned_abs());
            let pivot = rows[0];
            if pivot != col {
                push(&mut m, &mut ops, ElemOp::Swap(pivot, col));
                continue;
            }
            if rows.len() == 1 {
                break;
            }
            let r = rows[1];
            let t = m[r][col] / m[col][col];
            let c = if t != 0 { -t } else { -m[r][col].signum() * m[col][col].signum() };
            push(
                &mut m,
                &mut ops,
                ElemOp::Transvection { source: col, target: r, c },
            );
        }
        if m[col][col].abs() != 1 {
            return Err(Error::NotInvertible("matrix is not unimodular".into()));
        }
    }
    // Clear above the +-1 diagonal.
    for col in (0..n).rev() {
        for r in 0..col {
            if m[r][col] != 0 {
                let c = -m[r][col] * m[col][col];
                push(
                    &mut m,
                    &mut ops,
                    ElemOp::Transvection { source: col, target: r, c },
                );
            }
        }
    }
    let signs = (0..n).map(|i| m[i][i]).collect();
    Ok((ops, signs))
}

/// Express the exponent matrix as generator tokens (composition order).
fn matrix_tokens(a: &IntMat) -> Result<Vec<String>> {
    if a.is_identity() {
        return Ok(Vec::new());
    }
    let n = a.size();
    let (ops, signs) = reduce_to_signs(a)?;
    // E_m ... E_1 A = D  =>  A = E_1^-1 E_2^-1 ... E_m^-1 D, so the ops are
    // emitted in application order, each inverted.
    let mut tokens = Vec::new();
    for op in &ops {
        match *op {
            ElemOp::Transvection { source, target, c } => {
                tokens.push(format!("S[{},{}]^{}", source + 1, target + 1, -c));
            }
            ElemOp::Swap(x, y) => tokens.push(format!("P[{},{}]", x + 1, y + 1)),
        }
    }
    for (i, &d) in signs.iter().enumerate() {
        if d == -1 {
            if n < 2 {
                return Err(Error::NotRenderable(
                    "variable inversion on a single slot".into(),
                ));
            }
            let j = if i + 1 < n { i + 1 } else { i - 1 };
            let (a1, b1) = (i + 1, j + 1);
            // diag(-1 at i) = P[i,j] * S[i,j]^-1 * S[j,i] * S[i,j]^-1
            tokens.push(format!("P[{a1},{b1}]"));
            tokens.push(format!("S[{a1},{b1}]^-1"));
            tokens.push(format!("S[{b1},{a1}]"));
            tokens.push(format!("S[{a1},{b1}]^-1"));
        }
    }
    Ok(tokens)
}

/// Render one monomial operator as a parseable product of generators.
pub fn monop_expr(op: &MonOp) -> Result<String> {
    let n = op.arity();
    let mut tokens = Vec::new();
    if !op.coeff().is_one() {
        tokens.push(scalar_expr(op.coeff()));
    }
    tokens.extend(matrix_tokens(op.matrix())?);
    let ainv = op
        .matrix()
        .inverse()
        .ok_or_else(|| Error::NotRenderable("non-unimodular exponent matrix".into()))?;
    let pre_shift = ainv.apply(op.shift());
    for (i, &b) in pre_shift.iter().enumerate() {
        if b != 0 {
            tokens.push(format!("v[{}]^{}", i + 1, b));
        }
    }
    for (i, &l) in op.weight().iter().enumerate() {
        if l != 0 {
            tokens.push(format!("u[{}]^{}", i + 1, l));
        }
    }
    debug_assert!(pre_shift.len() == n);
    if tokens.is_empty() {
        return Ok("1".to_string());
    }
    Ok(tokens.join("*"))
}

/// Render an operator sum as a parseable expression.
pub fn opsum_expr(op: &OpSum) -> Result<String> {
    if op.is_zero() {
        return Ok("0".to_string());
    }
    let parts: Result<Vec<String>> = op.terms().map(|t| monop_expr(&t)).collect();
    Ok(parts?.join(" + "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monop::LPoly;

    fn ctx(arity: usize, cap: Option<usize>) -> ExprContext {
        ExprContext { arity, cap }
    }

    fn eval_op(text: &str, arity: usize) -> OpSum {
        match parse_expr(text, &ctx(arity, None)).unwrap() {
            Value::Op(op) => op,
            v => panic!("expected operator, got {v:?}"),
        }
    }

    #[test]
    fn parses_f_generator() {
        let f = eval_op("F[1,2,3]", 3);
        assert_eq!(
            f,
            OpSum::from(make_generator(Generator::F, &[1, 2, 3], 3).unwrap())
        );
    }

    #[test]
    fn weyl_difference_is_zero() {
        let z = eval_op("u[1]*v[1] - q*v[1]*u[1]", 1);
        assert!(z.is_zero());
        // Oracle: also annihilates monomials.
        for a in -2..=2 {
            let p = LPoly::monomial(vec![a], QRat::one());
            assert!(z.apply(&p).unwrap().is_zero());
        }
    }

    #[test]
    fn psi_atom_builds_the_b_factor() {
        let v = parse_expr(
            "psi(x * v[1]*u[1]^-1*u[2]*u[3]^-1*v[3]^-1)",
            &ctx(3, Some(2)),
        )
        .unwrap();
        let m = OpSum::from(crate::series::b_psi_argument());
        let expect = psi_series(&["x"], 2, &[1], &m).unwrap();
        assert_eq!(v, Value::Series(expect));
    }

    #[test]
    fn psi_without_cap_is_rejected() {
        let e = parse_expr("psi(x * u[1])", &ctx(1, None));
        assert!(matches!(e, Err(Error::SyntaxError { .. })));
        let e = parse_expr("x * u[1]", &ctx(1, None));
        assert!(matches!(e, Err(Error::SyntaxError { .. })));
    }

    #[test]
    fn psi_requires_a_decorated_monomial() {
        let e = parse_expr("psi(u[1])", &ctx(1, Some(2)));
        assert!(matches!(e, Err(Error::ZeroParamMonomial)));
    }

    #[test]
    fn rationals_and_powers() {
        match parse_expr("3/2 * q^-2", &ctx(1, None)).unwrap() {
            Value::Scalar(c) => {
                assert_eq!(c, &crate::scalar::ratio(3, 2) * &QRat::q_power(-2));
            }
            v => panic!("expected scalar, got {v:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_expr("u[1]*", &ctx(1, None)) {
            Err(Error::SyntaxError { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_expr("u[0]", &ctx(1, None)).is_err());
        assert!(parse_expr("u[2]", &ctx(1, None)).is_err());
    }

    #[test]
    fn g_atom_matches_builder() {
        let g = eval_op("G[1,2,3,4]", 4);
        assert_eq!(g, OpSum::from(make_g(2)));
    }

    #[test]
    fn series_inverse_through_power() {
        let b = parse_expr(
            "(F[1,2,3] * psi(x * v[1]*u[1]^-1*u[2]*u[3]^-1*v[3]^-1))^-1",
            &ctx(3, Some(2)),
        )
        .unwrap();
        let fwd = parse_expr(
            "F[1,2,3] * psi(x * v[1]*u[1]^-1*u[2]*u[3]^-1*v[3]^-1)",
            &ctx(3, Some(2)),
        )
        .unwrap();
        match (b, fwd) {
            (Value::Series(inv), Value::Series(fwd)) => {
                let prod = fwd.mul(&inv).unwrap();
                assert_eq!(prod, PSeries::one(&["x"], 2, 3));
            }
            _ => panic!("expected series"),
        }
    }

    #[test]
    fn round_trip_simple_operators() {
        for text in [
            "u[2]*v[1]^-3",
            "F[1,2,3]",
            "S[1,3]*P[2,3]*S[1,3]^-1",
            "q*u[1] + v[2] - 2*w[3]*wt[1]",
            "(1 - q^2)^-1 * u[1]",
            "wt[2]^2*w[1]^-1",
            "G[1,2,3,4]",
        ] {
            let parsed = eval_op(text, 4);
            let rendered = opsum_expr(&parsed).unwrap();
            let reparsed = eval_op(&rendered, 4);
            assert_eq!(parsed, reparsed, "round trip of `{text}` via `{rendered}`");
        }
    }

    #[test]
    fn round_trip_handles_sign_matrices() {
        // t1 -> t1^-1 t2, t2 -> t2: det = -1 with a sign on the diagonal.
        let m = MonOp::substitution(IntMat::from_rows(vec![vec![-1, 0], vec![1, 1]]));
        let rendered = monop_expr(&m).unwrap();
        let reparsed = eval_op(&rendered, 2);
        assert_eq!(OpSum::from(m), reparsed);
    }
}
