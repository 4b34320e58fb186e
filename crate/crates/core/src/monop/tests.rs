use super::*;
use crate::scalar::QRat;
use Generator::*;

fn gen(kind: Generator, slots: &[usize], arity: usize) -> MonOp {
    make_generator(kind, slots, arity).unwrap()
}

fn basis(expo: &[i64]) -> LPoly {
    LPoly::monomial(expo.to_vec(), QRat::one())
}

/// All exponent vectors of the given arity with entries in -w..=w.
fn window(arity: usize, w: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..arity {
        let mut next = Vec::new();
        for v in &out {
            for x in -w..=w {
                let mut v2 = v.clone();
                v2.push(x);
                next.push(v2);
            }
        }
        out = next;
    }
    out
}

#[test]
fn u_is_a_diagonal_weight() {
    let u2 = gen(U, &[2], 3);
    for a in [[0, 1, -2], [3, -1, 0], [2, 2, 2]] {
        let (c, e) = u2.apply_monomial(&a);
        assert_eq!(c, QRat::q_power(a[1]));
        assert_eq!(e, a.to_vec());
    }
}

#[test]
fn f_substitution_action() {
    // f(t1 t2 / t3, t3, t2): t^(a,b,c) -> t^(a, a+c, b-a), expanded by hand.
    let f = gen(F, &[1, 2, 3], 3);
    for a in window(3, 2) {
        let (c, e) = f.apply_monomial(&a);
        assert!(c.is_one());
        assert_eq!(e, vec![a[0], a[0] + a[2], a[1] - a[0]]);
    }
    assert_eq!(
        f.apply(&basis(&[1, 0, 0])).unwrap(),
        basis(&[1, 1, -1]) // t1 -> t1 t2 / t3
    );
}

#[test]
fn f_factorizes_through_s_and_p() {
    let lhs = gen(SInv, &[1, 3], 3)
        .compose(&gen(P, &[2, 3], 3))
        .unwrap()
        .compose(&gen(S, &[1, 3], 3))
        .unwrap();
    assert_eq!(lhs, gen(F, &[1, 2, 3], 3));
}

#[test]
fn uv_equals_q_vu() {
    let u = gen(U, &[1], 1);
    let v = gen(V, &[1], 1);
    let uv = u.compose(&v).unwrap();
    let vu = v.compose(&u).unwrap();
    assert_eq!(uv, vu.scale(&QRat::q()).unwrap());
    // Oracle: uv t^a = q^(a+1) t^(a+1), vu t^a = q^a t^(a+1).
    for a in -2..=2 {
        let (c1, e1) = uv.apply_monomial(&[a]);
        let (c2, e2) = vu.apply_monomial(&[a]);
        assert_eq!((c1, e1), (QRat::q_power(a + 1), vec![a + 1]));
        assert_eq!((c2, e2), (QRat::q_power(a), vec![a + 1]));
    }
    // As an OpSum difference: uv - q vu = 0.
    let diff = OpSum::from(uv)
        .sub(&OpSum::from(vu).scale(&QRat::q()))
        .unwrap();
    assert!(diff.is_zero());
    for a in -2..=2 {
        assert!(diff.apply(&basis(&[a])).unwrap().is_zero());
    }
}

#[test]
fn w_generators_compose_from_u_and_v() {
    let u = gen(U, &[1], 1);
    let v = gen(V, &[1], 1);
    assert_eq!(gen(W, &[1], 1), v.compose(&u).unwrap());
    assert_eq!(gen(WTilde, &[1], 1), v.compose(&u.inverse().unwrap()).unwrap());
    assert_eq!(gen(WInv, &[1], 1), gen(W, &[1], 1).inverse().unwrap());
}

#[test]
fn f_is_an_involution() {
    let f = gen(F, &[1, 2, 3], 3);
    assert!(f.compose(&f).unwrap().is_identity());
    assert_eq!(f.inverse().unwrap(), f);
}

#[test]
fn inverses() {
    let v = gen(V, &[1], 1);
    let vinv = v.inverse().unwrap();
    assert_eq!(vinv, gen(VInv, &[1], 1));
    for a in -2..=2 {
        let (c, e) = vinv.apply_monomial(&[a]);
        assert!(c.is_one());
        assert_eq!(e, vec![a - 1]);
    }
    let s = gen(S, &[1, 2], 2);
    assert!(s.inverse().unwrap().compose(&s).unwrap().is_identity());
    for a in window(2, 2) {
        let p = s.inverse().unwrap().apply(&s.apply(&basis(&a)).unwrap()).unwrap();
        assert_eq!(p, basis(&a));
    }
}

#[test]
fn not_invertible_when_matrix_is_singular() {
    // t^(a,b) -> t^(a+b, a+b) has a rank-1 exponent matrix.
    let m = MonOp::substitution(IntMat::from_rows(vec![vec![1, 1], vec![1, 1]]));
    assert!(matches!(m.inverse(), Err(Error::NotInvertible(_))));
}

#[test]
fn embedding_is_functorial() {
    let inner = IndexMap::new(3, &[3, 1]).unwrap();
    let outer = IndexMap::new(5, &[2, 4, 5]).unwrap();
    let s = gen(S, &[1, 2], 2);
    let via_two = s.embed(&inner).unwrap().embed(&outer).unwrap();
    let via_one = s.embed(&IndexMap::compose(&outer, &inner).unwrap()).unwrap();
    assert_eq!(via_two, via_one);

    assert!(MonOp::identity(2)
        .embed(&IndexMap::new(6, &[4, 1]).unwrap())
        .unwrap()
        .is_identity());
    assert_eq!(
        gen(U, &[1], 1).embed(&IndexMap::new(3, &[2]).unwrap()).unwrap(),
        gen(U, &[2], 3)
    );
}

#[test]
fn index_map_validation() {
    assert!(matches!(IndexMap::new(3, &[1, 1]), Err(Error::NonInjectiveMap)));
    assert!(matches!(IndexMap::new(3, &[0]), Err(Error::BadIndex(_))));
    assert!(matches!(IndexMap::new(3, &[4]), Err(Error::BadIndex(_))));
}

#[test]
fn arity_errors() {
    // Slot count must match the generator's natural arity.
    assert!(matches!(
        make_generator(F, &[1, 2], 3),
        Err(Error::BadArity(_))
    ));
    assert!(matches!(
        make_generator(U, &[1, 2], 3),
        Err(Error::BadArity(_))
    ));
    // Binary operations reject mixed arities.
    assert!(matches!(
        gen(U, &[1], 1).compose(&gen(U, &[1], 2)),
        Err(Error::ArityMismatch(1, 2))
    ));
    assert!(matches!(
        OpSum::identity(2).add(&OpSum::identity(3)),
        Err(Error::ArityMismatch(2, 3))
    ));
    assert!(matches!(
        gen(U, &[1], 2).apply(&basis(&[0, 0, 0])),
        Err(Error::ArityMismatch(2, 3))
    ));
}

#[test]
fn u2_f_commutation() {
    // u2 F = F u1 u3 on three variables.
    let f = gen(F, &[1, 2, 3], 3);
    let lhs = gen(U, &[2], 3).compose(&f).unwrap();
    let rhs = f
        .compose(&gen(U, &[1], 3))
        .unwrap()
        .compose(&gen(U, &[3], 3))
        .unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn tensor_products() {
    let id1 = OpSum::identity(1);
    assert!(id1.tensor(&id1).is_identity());
    let u = gen(U, &[1], 1);
    let v = gen(V, &[1], 1);
    let t = u.tensor(&v);
    for a in window(2, 2) {
        let (c, e) = t.apply_monomial(&a);
        assert_eq!(c, QRat::q_power(a[0]));
        assert_eq!(e, vec![a[0], a[1] + 1]);
    }
    // Tensor agrees with the embed-then-compose route.
    let m = 2usize;
    let left = OpSum::from(gen(S, &[1, 2], 2));
    let right = OpSum::from(gen(P, &[1, 2], 2));
    let via_tensor = left.tensor(&right);
    let via_embed = left
        .embed(&IndexMap::new(2 * m, &[1, 2]).unwrap())
        .unwrap()
        .compose(&right.embed(&IndexMap::new(2 * m, &[3, 4]).unwrap()).unwrap())
        .unwrap();
    assert_eq!(via_tensor, via_embed);
}

#[test]
fn apply_examples() {
    let v = gen(V, &[1], 1);
    assert_eq!(v.apply(&LPoly::one(1)).unwrap(), basis(&[1]));
}

#[test]
fn trace_of_p_is_identity() {
    let p = OpSum::from(gen(P, &[1, 2], 2));
    let tr = p.partial_trace(2).unwrap();
    assert!(tr.is_identity());
}

#[test]
fn trace_of_identity_diverges() {
    let id = OpSum::identity(1);
    assert_eq!(
        id.partial_trace(1),
        Err(Error::TraceDiverges { slot: 1 })
    );
}

#[test]
fn trace_of_f_is_identity_with_summation_oracle() {
    let f = gen(F, &[1, 2, 3], 3);
    let tr = f.partial_trace(3).unwrap();
    assert!(tr.is_identity());
    // Oracle: matrix elements of the trace equal the diagonal sum of the
    // matrix elements of F over a window in the traced exponent.
    for a in window(2, 3) {
        let mut summed = LPoly::zero(2);
        for m in -9..=9 {
            let full = [a[0], a[1], m];
            let (c, e) = f.apply_monomial(&full);
            if e[2] == m {
                summed = summed.add(&LPoly::monomial(vec![e[0], e[1]], c)).unwrap();
            }
        }
        let (c, e) = tr.apply_monomial(&a);
        assert_eq!(summed, LPoly::monomial(e, c));
    }
}

#[test]
fn trace_respects_linearity() {
    let p = OpSum::from(gen(P, &[1, 2], 2));
    let f3 = OpSum::from(gen(F, &[1, 2, 3], 3).partial_trace(3).unwrap());
    let two_p = p.scale(&QRat::from_int(2));
    assert_eq!(
        two_p.partial_trace(2).unwrap(),
        p.partial_trace(2).unwrap().scale(&QRat::from_int(2))
    );
    assert_eq!(f3.arity(), 2);
}

#[test]
fn non_monomial_trace_detected() {
    // t^(a,b) -> t^(a+b, 3a): row 2 diagonal is 0, row entries not divisible
    // by 1 are fine; make one where divisibility fails: A = [[2, 1], [1, -1]]
    // traced on slot 1: d = 1 - 2 = -1 divides everything, so use slot 2 of
    // A = [[1, 0], [1, 3]]: d = 1 - 3 = -2, off-diagonal 1 not divisible.
    let m = MonOp::substitution(IntMat::from_rows(vec![vec![1, 0], vec![1, 3]]));
    assert_eq!(m.partial_trace(2), Err(Error::NonMonomialTrace { slot: 2 }));
}

#[test]
fn constant_tetrahedron_equation() {
    let f = |a, b, c| gen(F, &[a, b, c], 6);
    let lhs = f(1, 2, 4)
        .compose(&f(1, 3, 5))
        .unwrap()
        .compose(&f(2, 3, 6))
        .unwrap()
        .compose(&f(4, 5, 6))
        .unwrap();
    let rhs = f(4, 5, 6)
        .compose(&f(2, 3, 6))
        .unwrap()
        .compose(&f(1, 3, 5))
        .unwrap()
        .compose(&f(1, 2, 4))
        .unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn negative_control_perturbed_f_breaks_involution() {
    let broken = MonOp::substitution(IntMat::from_rows(vec![
        vec![1, 0, 0],
        vec![1, 0, 1],
        vec![1, 1, 0], // sign flipped on the last row
    ]));
    assert!(!broken.compose(&broken).unwrap().is_identity());
}

#[test]
fn g_relations_spot_checks() {
    for n in [2usize, 3] {
        let g = make_g(n);
        let total = 2 * n;
        for i in 1..=n {
            let u1 = gen(U, &[i], total);
            assert_eq!(g.compose(&u1).unwrap(), u1.compose(&g).unwrap(), "G u_(1:{i})");
            let v2 = gen(V, &[n + i], total);
            let v2next = gen(V, &[n + (i % n) + 1], total);
            assert_eq!(
                g.compose(&v2).unwrap(),
                v2next.compose(&g).unwrap(),
                "G v_(2:{i})"
            );
        }
    }
}

#[test]
fn g_bracket_full_equals_big_g() {
    for n in [2usize, 3] {
        assert_eq!(make_g_bracket(1, n, n).unwrap(), make_big_g(n), "n = {n}");
    }
}

#[test]
fn opsum_canonical_merging() {
    let u = OpSum::from(gen(U, &[1], 1));
    let sum = u.add(&u).unwrap();
    assert_eq!(sum.term_count(), 1);
    assert_eq!(sum, u.scale(&QRat::from_int(2)));
    assert!(u.sub(&u).unwrap().is_zero());
    // add is the canonical merge: (A + B) - B = A for distinct signatures.
    let v = OpSum::from(gen(V, &[1], 1));
    let mixed = u.add(&v).unwrap();
    assert_eq!(mixed.term_count(), 2);
    assert_eq!(mixed.sub(&v).unwrap(), u);
}
