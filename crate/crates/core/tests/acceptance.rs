//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};

use qtetra_core::monop::{make_generator, Generator, LPoly, MonOp, OpSum};
use qtetra_core::qgroup::GenSet;
use qtetra_core::scalar::QRat;
use qtetra_core::verify::{report_to_json, run_suite, SuiteConfig, VerifyReport};

fn run(suite: &str, n: usize, order: usize) -> VerifyReport {
    let cfg = SuiteConfig::new(suite, n, order);
    let report = run_suite(&cfg).expect("suite exists");
    if !report.pass {
        for c in &report.checks {
            eprintln!(
                "  {:?} {} [{}] {}",
                c.status,
                c.name,
                c.anchor,
                c.detail.clone().unwrap_or_default()
            );
        }
    }
    assert!(report.pass, "suite {suite} (n={n}, order={order}) failed");
    report
}

fn finish(criterion: &str, what: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!(
        "PASS {criterion}: {what} in {:.3}s (budget {:.0}s)",
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    assert!(
        elapsed <= budget,
        "{criterion} exceeded its time budget: {elapsed:?} > {budget:?}"
    );
}

#[test]
fn criterion_01_constant_relations() {
    let start = Instant::now();
    run("prop1", 2, 0);
    finish(
        "criterion 01",
        "constant operator relations and constant tetrahedron equation",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_02_pentagon() {
    let start = Instant::now();
    run("pentagon", 2, 6);
    finish(
        "criterion 02",
        "q-exponential pentagon identity to total degree 6",
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_03_spectral_te_and_four_term() {
    let start = Instant::now();
    run("te-spectral", 2, 4);
    run("four-term", 2, 4);
    finish(
        "criterion 03",
        "spectral tetrahedron equation and four-term identity to degree 4",
        start,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_04_monodromy() {
    let start = Instant::now();
    run("monodromy", 2, 3);
    finish(
        "criterion 04a",
        "monodromy identity at n=2, degree 3",
        start,
        Duration::from_secs(600),
    );
    let start = Instant::now();
    run("monodromy", 3, 2);
    finish(
        "criterion 04b",
        "monodromy identity at n=3, degree 2",
        start,
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_05_trace_consistency() {
    let start = Instant::now();
    run("trace-closed-form", 2, 3);
    run("trace-closed-form", 3, 3);
    run("srelations", 2, 0);
    run("grelations", 2, 0);
    run("grelations", 3, 0);
    finish(
        "criterion 05",
        "formal trace equals closed transfer-matrix form (n=2,3) with the S/P/G sub-checks",
        start,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_06_yang_baxter() {
    let start = Instant::now();
    run("ybe-r", 2, 3);
    run("ybe-bigr", 2, 2);
    finish(
        "criterion 06",
        "Yang-Baxter equations for the traced and big solutions",
        start,
        Duration::from_secs(1800),
    );
}

#[test]
fn criterion_07_ef_relations() {
    let start = Instant::now();
    for n in [2, 3, 4] {
        run("ef-relations", n, 0);
    }
    finish(
        "criterion 07",
        "generator relation tables and exhaustive commutativity scan (n=2,3,4)",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_08_hopf_relations() {
    let start = Instant::now();
    run("hopf", 2, 0);
    run("hopf", 3, 0);
    finish(
        "criterion 08",
        "defining relations of the algebra under the representation (n=2,3)",
        start,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_09_q_exponential_identity() {
    let start = Instant::now();
    run("mfor", 2, 4);
    run("mfor", 3, 2);
    finish(
        "criterion 09",
        "q-exponential product identity at n=2 (degree 4) and n=3 (degree 2)",
        start,
        Duration::from_secs(1800),
    );
}

#[test]
fn criterion_10_twist_conjugation() {
    let start = Instant::now();
    run("bigg-twist", 2, 0);
    run("bigg-twist", 3, 0);
    finish(
        "criterion 10",
        "block-substitution action formula and twist conjugation identities (n=2,3)",
        start,
        Duration::from_secs(60),
    );
}

// ---------------------------------------------------------------------------
// criterion 11: infrastructure
// ---------------------------------------------------------------------------

struct Lcg(u64);

impl Lcg {
    fn below(&mut self, n: u64) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 33) % n
    }
}

fn random_factor(rng: &mut Lcg, arity: usize) -> MonOp {
    const ONE_SLOT: &[Generator] = &[
        Generator::U,
        Generator::UInv,
        Generator::V,
        Generator::VInv,
        Generator::W,
        Generator::WTilde,
        Generator::WInv,
    ];
    match rng.below(9) {
        k if k < 6 => {
            let kind = ONE_SLOT[rng.below(ONE_SLOT.len() as u64) as usize];
            let slot = rng.below(arity as u64) as usize + 1;
            make_generator(kind, &[slot], arity).unwrap()
        }
        6 | 7 if arity >= 2 => {
            let kind = if rng.below(2) == 0 { Generator::S } else { Generator::P };
            let a = rng.below(arity as u64) as usize + 1;
            let b = (a % arity) + 1;
            make_generator(kind, &[a, b], arity).unwrap()
        }
        _ if arity >= 3 => make_generator(Generator::F, &[1, 2, 3], arity).unwrap(),
        _ => make_generator(Generator::V, &[1], arity).unwrap(),
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

#[test]
fn criterion_11_infrastructure() {
    let start = Instant::now();

    // (a) 200 randomized identities: canonical composition vs monomial
    // application.
    let mut rng = Lcg(0x0ace_50fb_a5e0);
    for trial in 0..200 {
        let arity = 2 + trial % 2;
        let len = 2 + rng.below(3) as usize;
        let word: Vec<MonOp> = (0..len).map(|_| random_factor(&mut rng, arity)).collect();
        let composed = word
            .iter()
            .fold(MonOp::identity(arity), |acc, f| acc.compose(f).unwrap());
        for a in grid(arity, 2) {
            let direct = composed
                .apply(&LPoly::monomial(a.clone(), QRat::one()))
                .unwrap();
            let mut stepped = LPoly::monomial(a, QRat::one());
            for f in word.iter().rev() {
                stepped = f.apply(&stepped).unwrap();
            }
            assert_eq!(direct, stepped, "trial {trial}");
        }
    }

    // (b) Byte-identical JSON reports across two runs.
    for (suite, n, order) in [("prop1", 2, 0), ("te-spectral", 2, 2), ("hopf", 2, 0)] {
        let cfg = SuiteConfig::new(suite, n, order);
        let a = report_to_json(&run_suite(&cfg).unwrap());
        let b = report_to_json(&run_suite(&cfg).unwrap());
        assert_eq!(a, b, "JSON report for {suite} not deterministic");
    }

    // (c) Negative controls fail as expected.
    let u = make_generator(Generator::U, &[1], 1).unwrap();
    let v = make_generator(Generator::V, &[1], 1).unwrap();
    let uv = u.compose(&v).unwrap();
    let wrong = v.compose(&u).unwrap().scale(&QRat::q_power(2)).unwrap();
    assert_ne!(uv, wrong, "perturbed commutation must not verify");

    let gs = GenSet::new(2).unwrap();
    let bad_k = gs.e(1, 2).compose(gs.f(1, 1)).unwrap();
    let e1 = gs.kappa_e(1).clone();
    let lhs = OpSum::from(bad_k.clone()).compose(&e1).unwrap();
    let rhs = e1
        .compose(&OpSum::from(bad_k))
        .unwrap()
        .scale(&QRat::q_power(2));
    assert_ne!(lhs, rhs, "misindexed Cartan generator must break the relation");

    finish(
        "criterion 11",
        "randomized oracle equivalence, deterministic reports, negative controls",
        start,
        Duration::from_secs(300),
    );
}
