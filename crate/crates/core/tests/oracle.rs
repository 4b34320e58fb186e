//! Brute-force application oracle: every canonical-form operation must agree
//! with direct action on basis monomials.

use qtetra_core::monop::{
    make_generator, Generator, IndexMap, LPoly, MonOp, OpSum,
};
use qtetra_core::scalar::QRat;

/// Small deterministic generator so the randomized identity set is fixed.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    fn below(&mut self, n: u64) -> u64 {
        (self.next() >> 33) % n
    }
}

const ONE_SLOT: &[Generator] = &[
    Generator::U,
    Generator::UInv,
    Generator::V,
    Generator::VInv,
    Generator::W,
    Generator::WTilde,
    Generator::WInv,
];

fn random_factor(rng: &mut Lcg, arity: usize) -> MonOp {
    let pick = rng.below(10);
    if pick < 6 {
        let kind = ONE_SLOT[rng.below(ONE_SLOT.len() as u64) as usize];
        let slot = rng.below(arity as u64) as usize + 1;
        make_generator(kind, &[slot], arity).unwrap()
    } else if pick < 8 && arity >= 2 {
        let kind = if pick == 6 { Generator::S } else { Generator::P };
        let a = rng.below(arity as u64) as usize + 1;
        let mut b = rng.below(arity as u64) as usize + 1;
        if b == a {
            b = (a % arity) + 1;
        }
        make_generator(kind, &[a, b], arity).unwrap()
    } else if arity >= 3 {
        let mut slots = Vec::new();
        while slots.len() < 3 {
            let s = rng.below(arity as u64) as usize + 1;
            if !slots.contains(&s) {
                slots.push(s);
            }
        }
        make_generator(Generator::F, &[slots[0], slots[1], slots[2]], arity).unwrap()
    } else {
        make_generator(Generator::U, &[1], arity).unwrap()
    }
}

fn grid(arity: usize, w: i64) -> Vec<Vec<i64>> {
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

fn apply_word(word: &[MonOp], a: &[i64]) -> LPoly {
    let mut p = LPoly::monomial(a.to_vec(), QRat::one());
    for op in word.iter().rev() {
        p = op.apply(&p).unwrap();
    }
    p
}

/// 200 random generator words: the canonically composed operator acts on
/// every monomial of a window exactly as the factor-by-factor application.
#[test]
fn randomized_composition_identities() {
    let mut rng = Lcg(0x5eed_cafe_f00d_0001);
    for trial in 0..200 {
        let arity = 2 + (trial % 3); // 2, 3, 4
        let len = 2 + rng.below(4) as usize;
        let word: Vec<MonOp> = (0..len).map(|_| random_factor(&mut rng, arity)).collect();
        let composed = word
            .iter()
            .fold(MonOp::identity(arity), |acc, f| acc.compose(f).unwrap());
        let w = if arity <= 3 { 2 } else { 1 };
        for a in grid(arity, w) {
            let direct = composed.apply(&LPoly::monomial(a.clone(), QRat::one())).unwrap();
            assert_eq!(
                direct,
                apply_word(&word, &a),
                "trial {trial}: composed action disagrees with stepwise action"
            );
        }
    }
}

#[test]
fn composition_is_associative_in_canonical_form() {
    let mut rng = Lcg(0x5eed_cafe_f00d_0002);
    for _ in 0..60 {
        let arity = 3;
        let x = random_factor(&mut rng, arity);
        let y = random_factor(&mut rng, arity);
        let z = random_factor(&mut rng, arity);
        let left = x.compose(&y).unwrap().compose(&z).unwrap();
        let right = x.compose(&y.compose(&z).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn inverse_oracle() {
    let mut rng = Lcg(0x5eed_cafe_f00d_0003);
    for _ in 0..60 {
        let arity = 3;
        let len = 1 + rng.below(4) as usize;
        let word: Vec<MonOp> = (0..len).map(|_| random_factor(&mut rng, arity)).collect();
        let composed = word
            .iter()
            .fold(MonOp::identity(arity), |acc, f| acc.compose(f).unwrap());
        let inv = composed.inverse().unwrap();
        assert!(inv.compose(&composed).unwrap().is_identity());
        assert!(composed.compose(&inv).unwrap().is_identity());
        for a in grid(arity, 1) {
            let round = inv
                .apply(&composed.apply(&LPoly::monomial(a.clone(), QRat::one())).unwrap())
                .unwrap();
            assert_eq!(round, LPoly::monomial(a, QRat::one()));
        }
    }
}

#[test]
fn embedding_oracle() {
    let mut rng = Lcg(0x5eed_cafe_f00d_0004);
    for _ in 0..40 {
        let op = random_factor(&mut rng, 2);
        let map = IndexMap::new(5, &[4, 2]).unwrap();
        let embedded = op.embed(&map).unwrap();
        for a in grid(5, 1) {
            let (c_small, e_small) = op.apply_monomial(&[a[3], a[1]]);
            let (c_big, e_big) = embedded.apply_monomial(&a);
            assert_eq!(c_small, c_big);
            let mut expect = a.clone();
            expect[3] = e_small[0];
            expect[1] = e_small[1];
            assert_eq!(e_big, expect);
        }
    }
}

#[test]
fn tensor_oracle() {
    let mut rng = Lcg(0x5eed_cafe_f00d_0005);
    for _ in 0..40 {
        let l = random_factor(&mut rng, 2);
        let r = random_factor(&mut rng, 2);
        let t = l.tensor(&r);
        for a in grid(4, 1) {
            let (cl, el) = l.apply_monomial(&a[..2]);
            let (cr, er) = r.apply_monomial(&a[2..]);
            let (ct, et) = t.apply_monomial(&a);
            assert_eq!(ct, &cl * &cr);
            assert_eq!(et, [el, er].concat());
        }
    }
}

/// Where the formal trace is defined it equals the windowed diagonal sum of
/// matrix elements; 17 is comfortably beyond any image the window reaches.
#[test]
fn partial_trace_oracle() {
    let mut rng = Lcg(0x5eed_cafe_f00d_0006);
    let mut traced_count = 0;
    for _ in 0..120 {
        let arity = 3;
        let len = 1 + rng.below(3) as usize;
        let word: Vec<MonOp> = (0..len).map(|_| random_factor(&mut rng, arity)).collect();
        let composed = word
            .iter()
            .fold(MonOp::identity(arity), |acc, f| acc.compose(f).unwrap());
        let slot = rng.below(3) as usize + 1;
        let Ok(tr) = composed.partial_trace(slot) else {
            continue;
        };
        traced_count += 1;
        for a in grid(2, 2) {
            let (c, e) = tr.apply_monomial(&a);
            let mut summed = LPoly::zero(2);
            for m in -17..=17i64 {
                let mut full = a.clone();
                full.insert(slot - 1, m);
                let (cm, em) = composed.apply_monomial(&full);
                if em[slot - 1] == m {
                    let mut reduced = em.clone();
                    reduced.remove(slot - 1);
                    summed = summed.add(&LPoly::monomial(reduced, cm)).unwrap();
                }
            }
            assert_eq!(summed, LPoly::monomial(e, c));
        }
    }
    assert!(traced_count > 10, "too few traceable samples: {traced_count}");
}

/// The window shrinks with arity to keep the grid affordable; arity 6 is
/// exercised with entries in -1..=1.
#[test]
fn randomized_identities_at_high_arity() {
    let mut rng = Lcg(0x5eed_cafe_f00d_0007);
    for trial in 0..30 {
        let arity = 5 + trial % 2; // 5, 6
        let len = 2 + rng.below(3) as usize;
        let word: Vec<MonOp> = (0..len).map(|_| random_factor(&mut rng, arity)).collect();
        let composed = word
            .iter()
            .fold(MonOp::identity(arity), |acc, f| acc.compose(f).unwrap());
        for a in grid(arity, 1) {
            let direct = composed
                .apply(&LPoly::monomial(a.clone(), QRat::one()))
                .unwrap();
            assert_eq!(direct, apply_word(&word, &a), "trial {trial}");
        }
    }
}

#[test]
fn opsum_linear_action() {
    // (2 X - 3 Y) p = 2 (X p) - 3 (Y p) for generator sums.
    let x = OpSum::from(make_generator(Generator::U, &[1], 2).unwrap());
    let y = OpSum::from(make_generator(Generator::S, &[1, 2], 2).unwrap());
    let two = QRat::from_int(2);
    let three = QRat::from_int(3);
    let sum = x.scale(&two).sub(&y.scale(&three)).unwrap();
    for a in grid(2, 2) {
        let p = LPoly::monomial(a, QRat::one());
        let lhs = sum.apply(&p).unwrap();
        let rhs = x
            .apply(&p)
            .unwrap()
            .scale(&two)
            .add(&y.apply(&p).unwrap().scale(&(-&three)))
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}
