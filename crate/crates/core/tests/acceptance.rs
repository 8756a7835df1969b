//! End-to-end verification gate. Each test pins one externally visible
//! guarantee of the library at its full advertised parameter range and
//! prints a single `[PASS] criterion N` line (visible with `--nocapture`);
//! a failure panics with the matching `[FAIL]` line. Everything here is
//! exact — there are no tolerances anywhere.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use trijac_core::genfunc::{check_genfunc, check_genfunc_with, DenominatorForm};
use trijac_core::identities::{
    check_binet_agreement, check_cassini, run_suite, IdentityKind, SuiteGrid,
};
use trijac_core::matrixgen::{
    check_column_relation, check_matrix_identity, eval_at_matrix, qj_matrix, Mat3,
};
use trijac_core::{
    Bihyperbolic, EisensteinRational, Field, IntPoly, Ring, SeqParams, SequenceEngine,
};

fn pass(n: usize, detail: &str) {
    println!("[PASS] criterion {n}: {detail}");
}

fn shifts(max: i64) -> Vec<SeqParams> {
    let mut out = Vec::new();
    for a in 1..=max {
        for b in 1..=max {
            for c in 1..=max {
                out.push(SeqParams::new(a, b, c).unwrap());
            }
        }
    }
    out
}

#[test]
fn criterion_1_definition_recurrence_and_binet_agree() {
    let t0 = Instant::now();
    let mut checks = 0usize;
    for abc in shifts(4) {
        let engine = SequenceEngine::new(abc);
        for n in 0..=40 {
            let report = check_binet_agreement(&engine, n)
                .unwrap_or_else(|e| panic!("[FAIL] criterion 1: {e} (n = {n}, shifts {abc})"));
            assert!(
                report.equal,
                "[FAIL] criterion 1: Binet route differs at n = {n}, shifts {abc}"
            );
            checks += 1;
        }
    }
    pass(
        1,
        &format!(
            "bj, bj_rec, bj_binet coincide for n in [0,40], shifts in [1,4]^3 \
             ({checks} checks, {:.2?})",
            t0.elapsed()
        ),
    );
}

#[test]
fn criterion_2_identity_suite_passes_exactly() {
    let t0 = Instant::now();
    let grid = SuiteGrid {
        families: vec![
            IdentityKind::ScalarTripleSum,
            IdentityKind::TripleSum,
            IdentityKind::VajdaZ,
            IdentityKind::VajdaBj,
            IdentityKind::Catalan,
            IdentityKind::Cassini,
            IdentityKind::DOcagne,
            IdentityKind::PartialSumScalar,
            IdentityKind::PartialSum,
        ],
        ..SuiteGrid::default()
    };
    let summary = run_suite(&grid).expect("[FAIL] criterion 2: suite aborted");
    assert!(
        summary.all_passed(),
        "[FAIL] criterion 2: {} of {} identity instances failed; first: {:?}",
        summary.failed(),
        summary.total(),
        summary.failures().first()
    );
    let per_family: Vec<String> = summary
        .family_counts()
        .iter()
        .map(|(name, (runs, _))| format!("{name} {runs}"))
        .collect();
    pass(
        2,
        &format!(
            "all {} identity instances equal over shifts in [1,4]^3 [{}] ({:.2?})",
            summary.total(),
            per_family.join(", "),
            t0.elapsed()
        ),
    );
}

#[test]
fn criterion_3_integer_specialization_at_two() {
    let engine = SequenceEngine::new(SeqParams::new(1, 2, 3).unwrap());
    let expected: [i64; 9] = [0, 1, 1, 2, 5, 9, 18, 37, 73];
    let two = BigInt::from(2);
    for (n, want) in expected.iter().enumerate() {
        let got = engine.jacobsthal_poly(n as u64).eval(&two);
        assert_eq!(
            got,
            BigInt::from(*want),
            "[FAIL] criterion 3: J_{n}(2) = {got}, expected {want}"
        );
    }
    pass(3, "J_n(2) for n in 0..=8 equals 0, 1, 1, 2, 5, 9, 18, 37, 73");
}

#[test]
fn criterion_4_cassini_witness_at_two() {
    let engine = SequenceEngine::new(SeqParams::new(1, 2, 3).unwrap());
    let report = check_cassini(&engine, 1).expect("[FAIL] criterion 4: checker errored");
    assert!(
        report.equal,
        "[FAIL] criterion 4: Cassini sides differ symbolically at n = 1"
    );

    // Independent route: evaluate the windows at x = 2 first, then multiply
    // in H2 over the rationals, bypassing all polynomial machinery.
    let two = BigRational::from_integer(BigInt::from(2));
    let at_two = |n: u64| -> Bihyperbolic<BigRational> {
        engine
            .bj_poly(n)
            .map(|p| BigRational::from_integer(p.eval(&BigInt::from(2))))
    };
    let direct = at_two(2) * at_two(0) - at_two(1) * at_two(1);
    let frozen = [-6i64, -2, 0, -5].map(|v| BigRational::from_integer(BigInt::from(v)));
    for (got, want) in direct.components().iter().zip(&frozen) {
        assert_eq!(*got, want, "[FAIL] criterion 4: direct product mismatch");
    }

    // The symbolic left side evaluates to the same quadruple.
    for (comp, want) in report.lhs.components().iter().zip(&frozen) {
        let val = comp
            .map_eval(&two, |k| BigRational::from_integer(k.clone()))
            .unwrap();
        assert_eq!(&val, want, "[FAIL] criterion 4: symbolic lhs mismatch");
    }
    pass(
        4,
        "Cassini at x = 2, n = 1, shifts (1,2,3): lhs = (-6, -2, 0, -5) by direct \
         product and by the closed form",
    );
}

#[test]
fn criterion_5_generating_function_series() {
    let t0 = Instant::now();
    for abc in shifts(3) {
        let engine = SequenceEngine::new(abc);
        let report = check_genfunc(&engine, 20).expect("[FAIL] criterion 5: expansion errored");
        assert!(
            report.equal && report.params.n == Some(20),
            "[FAIL] criterion 5: corrected-denominator series deviates at t^{} for shifts {abc}",
            report.params.n.unwrap_or(-1)
        );
    }
    let engine = SequenceEngine::new(SeqParams::new(1, 2, 3).unwrap());
    let printed = check_genfunc_with(&engine, DenominatorForm::Printed, 20)
        .expect("[FAIL] criterion 5: expansion errored");
    assert!(
        !printed.equal && printed.params.n == Some(2),
        "[FAIL] criterion 5: slip denominator should first deviate at t^2, got t^{}",
        printed.params.n.unwrap_or(-1)
    );
    pass(
        5,
        &format!(
            "corrected denominator reproduces coefficients 0..=20 for shifts in [1,3]^3; \
             slip variant first deviates at t^2 ({:.2?})",
            t0.elapsed()
        ),
    );
}

#[test]
fn criterion_6_matrix_generators() {
    let t0 = Instant::now();
    for abc in shifts(3) {
        let engine = SequenceEngine::new(abc);
        for n in 1..=12 {
            let r = check_column_relation(&engine, n).unwrap();
            assert!(
                r.equal,
                "[FAIL] criterion 6: column relation fails at n = {n}, shifts {abc}"
            );
        }
        for n in 0..=12 {
            let r = check_matrix_identity(&engine, n).unwrap();
            assert!(
                r.equal,
                "[FAIL] criterion 6: window power identity fails at n = {n}, shifts {abc}"
            );
        }
    }
    let q = qj_matrix();
    assert_eq!(
        q.det(),
        IntPoly::x(),
        "[FAIL] criterion 6: det of the companion matrix is not x"
    );
    assert_eq!(
        eval_at_matrix(&q.char_poly(), &q),
        Mat3::zero(),
        "[FAIL] criterion 6: companion matrix does not satisfy its characteristic polynomial"
    );
    pass(
        6,
        &format!(
            "column relation (1 <= n <= 12) and window power identity (0 <= n <= 12) hold \
             for shifts in [1,3]^3; det(Q) = x; Cayley-Hamilton holds ({:.2?})",
            t0.elapsed()
        ),
    );
}

#[test]
fn criterion_7_algebra_laws_randomized() {
    const CASES: usize = 200;
    let t0 = Instant::now();
    let mut rng = ChaCha20Rng::seed_from_u64(0x7261_6e64);

    // H2 over integer scalars.
    let rand_bh_int = |rng: &mut ChaCha20Rng| {
        let mut c = || BigInt::from(rng.gen_range(-50i64..=50));
        Bihyperbolic::new(c(), c(), c(), c())
    };
    for _ in 0..CASES {
        let (u, v, w) = (
            rand_bh_int(&mut rng),
            rand_bh_int(&mut rng),
            rand_bh_int(&mut rng),
        );
        assert_eq!(
            u.clone() * v.clone(),
            v.clone() * u.clone(),
            "[FAIL] criterion 7: H2 multiplication is not commutative"
        );
        assert_eq!(
            (u.clone() * v.clone()) * w.clone(),
            u.clone() * (v.clone() * w.clone()),
            "[FAIL] criterion 7: H2 multiplication is not associative"
        );
        assert_eq!(
            u.clone() * (v.clone() + w.clone()),
            u.clone() * v.clone() + u.clone() * w.clone(),
            "[FAIL] criterion 7: H2 multiplication does not distribute"
        );
        assert_eq!(
            (u.clone() + v.clone()) + w.clone(),
            u.clone() + (v.clone() + w.clone()),
            "[FAIL] criterion 7: H2 addition is not associative"
        );
    }

    // H2 over polynomial scalars.
    let rand_poly = |rng: &mut ChaCha20Rng| {
        let deg = rng.gen_range(0..=3usize);
        IntPoly::new((0..=deg).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect())
    };
    let rand_bh_poly = |rng: &mut ChaCha20Rng| {
        Bihyperbolic::new(
            rand_poly(&mut *rng),
            rand_poly(&mut *rng),
            rand_poly(&mut *rng),
            rand_poly(&mut *rng),
        )
    };
    for _ in 0..CASES {
        let (u, v, w) = (
            rand_bh_poly(&mut rng),
            rand_bh_poly(&mut rng),
            rand_bh_poly(&mut rng),
        );
        assert_eq!(
            u.clone() * v.clone(),
            v.clone() * u.clone(),
            "[FAIL] criterion 7: H2 over Z[x] is not commutative"
        );
        assert_eq!(
            (u.clone() * v.clone()) * w.clone(),
            u.clone() * (v.clone() * w.clone()),
            "[FAIL] criterion 7: H2 over Z[x] is not associative"
        );
        assert_eq!(
            u.clone() * (v.clone() + w.clone()),
            u.clone() * v.clone() + u.clone() * w.clone(),
            "[FAIL] criterion 7: H2 over Z[x] does not distribute"
        );
    }

    // Zero divisors: (1 + j1)(1 - j1) = 0 and (1 + j3)(1 - j3) = 0.
    for unit in [Bihyperbolic::<BigInt>::j1(), Bihyperbolic::<BigInt>::j3()] {
        let plus = Bihyperbolic::one() + unit.clone();
        let minus = Bihyperbolic::one() - unit;
        assert!(
            !plus.is_zero() && !minus.is_zero() && (plus * minus).is_zero(),
            "[FAIL] criterion 7: missing zero-divisor pair"
        );
    }

    // Eisenstein rationals form a field.
    let rand_eis = |rng: &mut ChaCha20Rng| {
        let mut part = || {
            BigRational::new(
                BigInt::from(rng.gen_range(-20i64..=20)),
                BigInt::from(rng.gen_range(1i64..=9)),
            )
        };
        EisensteinRational::new(part(), part())
    };
    for _ in 0..CASES {
        let (u, v, w) = (rand_eis(&mut rng), rand_eis(&mut rng), rand_eis(&mut rng));
        assert_eq!(
            u.clone() * v.clone(),
            v.clone() * u.clone(),
            "[FAIL] criterion 7: Q(omega) multiplication is not commutative"
        );
        assert_eq!(
            (u.clone() * v.clone()) * w.clone(),
            u.clone() * (v.clone() * w.clone()),
            "[FAIL] criterion 7: Q(omega) multiplication is not associative"
        );
        assert_eq!(
            u.clone() * (v.clone() + w.clone()),
            u.clone() * v.clone() + u.clone() * w.clone(),
            "[FAIL] criterion 7: Q(omega) multiplication does not distribute"
        );
        if !u.is_zero() {
            assert!(
                (u.clone() * u.inv().unwrap()).is_one(),
                "[FAIL] criterion 7: nonzero element without inverse"
            );
        }
    }
    let diff = EisensteinRational::root_diff();
    assert_eq!(
        diff.clone() * diff,
        EisensteinRational::from_ints(-3, 0),
        "[FAIL] criterion 7: (omega1 - omega2)^2 != -3"
    );
    pass(
        7,
        &format!(
            "ring laws over {CASES} random cases each (integer and polynomial scalars), \
             zero-divisor witnesses, Q(omega) field laws, (omega1 - omega2)^2 = -3 ({:.2?})",
            t0.elapsed()
        ),
    );
}

#[test]
fn criterion_8_omega_parts_vanish() {
    let t0 = Instant::now();
    for abc in shifts(4) {
        let engine = SequenceEngine::new(abc);
        // These constructors return Err on any surviving omega-part, so Ok
        // here is the vanishing statement itself.
        engine.phi_product().unwrap_or_else(|e| {
            panic!("[FAIL] criterion 8: Phi1*Phi2 has an omega-part at shifts {abc}: {e}")
        });
        for n in -8..=16 {
            engine.bj_binet(n).unwrap_or_else(|e| {
                panic!("[FAIL] criterion 8: bj_binet omega-part at n = {n}, shifts {abc}: {e}")
            });
            engine.z_seq(n).unwrap_or_else(|e| {
                panic!("[FAIL] criterion 8: z_seq omega-part at n = {n}, shifts {abc}: {e}")
            });
        }
        // Direct witness, independent of the conversion helpers: each
        // component of Phi1*Phi2 is literally rational in Q(omega).
        let consts = engine.binet_constants();
        let prod = consts.phi1.clone() * consts.phi2.clone();
        for comp in prod.components() {
            assert!(
                comp.is_rational(),
                "[FAIL] criterion 8: Phi1*Phi2 component {comp} is not rational at shifts {abc}"
            );
        }
    }
    pass(
        8,
        &format!(
            "bj_binet and z_seq for n in [-8,16] and Phi1*Phi2 have zero omega-part \
             for shifts in [1,4]^3 ({:.2?})",
            t0.elapsed()
        ),
    );
}
