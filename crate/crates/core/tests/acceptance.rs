//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! with its timing. Run with `cargo test --test acceptance -- --nocapture`.
//!
//! Grid conventions: "the grid" is kind in {Sp, O}, rank n in {2, 3}, and
//! every partition of every d <= 4.

use std::time::{Duration, Instant};

use lefrep_core::characters::{irr_character, shape_constituent, shape_dim};
use lefrep_core::hodgemotive::{
    binomial, kleiman_projectors, molien_holomorphic_invariants, primitive_filtration_dims,
    sym_vanishing_check,
};
use lefrep_core::lefschetz::{
    coniveau_report, lefschetz_group, validate, AbelianDescriptor, AbelianFactor, AlbertType,
    LefschetzError,
};
use lefrep_core::partitions::{column_data, enumerate_partitions, Partition};
use lefrep_core::weylconstruct::{
    decomposition_audit, hodge_profile, s_lambda_space, FormKind, HodgeProfile, StandardRep,
};

fn grid() -> Vec<(FormKind, usize)> {
    vec![
        (FormKind::Symplectic, 2),
        (FormKind::Symplectic, 3),
        (FormKind::Orthogonal, 2),
        (FormKind::Orthogonal, 3),
    ]
}

fn shapes_up_to(d: u32) -> Vec<Partition> {
    (0..=d).flat_map(enumerate_partitions).collect()
}

fn report(criterion: &str, pass: bool, elapsed: Duration, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("criterion {criterion}: {verdict} [{elapsed:?}] {detail}");
}

fn very_general(g: u32) -> AbelianDescriptor {
    AbelianDescriptor::new(vec![AbelianFactor {
        albert_type: AlbertType::I,
        f: 1,
        d: 1,
        g,
        m: 1,
    }])
}

/// Criterion 1: on the grid, the explicit tensor model and the character
/// oracle agree exactly, in dimension and in Hodge profile.
#[test]
fn criterion_1_weyl_oracle_equivalence() {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut cases = 0;
    for (kind, n) in grid() {
        let rep = StandardRep::new(kind, n).unwrap();
        for shape in shapes_up_to(4) {
            cases += 1;
            let space = s_lambda_space(&rep, &shape).unwrap();
            let tensor_dim = space.dim() as u64;
            let oracle_dim = shape_dim(kind, n, &shape);
            if tensor_dim != oracle_dim {
                mismatches.push(format!(
                    "{kind} n={n} {shape}: tensor dim {tensor_dim} vs oracle {oracle_dim}"
                ));
                continue;
            }
            let tensor_profile = hodge_profile(&rep, &space, shape.size() as usize);
            let oracle_profile = match shape_constituent(kind, n, &shape) {
                Some(w) => irr_character(kind, n, &w).hodge_specialize(),
                None => HodgeProfile::new(),
            };
            if tensor_profile != oracle_profile {
                mismatches.push(format!(
                    "{kind} n={n} {shape}: profile {tensor_profile} vs {oracle_profile}"
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = mismatches.is_empty() && elapsed < Duration::from_secs(120);
    report(
        "1 (Weyl-construction oracle equivalence)",
        pass,
        elapsed,
        &format!("{cases} cases; mismatches: {mismatches:?}"),
    );
    assert!(pass, "{mismatches:?}");
}

/// Criterion 2: nonvanishing of the tensor model matches the stated rules:
/// symplectic iff the shape has at most n rows, orthogonal iff the first two
/// columns total at most 2n.
#[test]
fn criterion_2_nonvanishing_rules() {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    for (kind, n) in grid() {
        let rep = StandardRep::new(kind, n).unwrap();
        for shape in shapes_up_to(4) {
            let nonzero = s_lambda_space(&rep, &shape).unwrap().dim() > 0;
            let predicted = match kind {
                FormKind::Symplectic => shape.rows() <= n,
                FormKind::Orthogonal => {
                    let (c1, c2) = column_data(&shape);
                    c1 + c2 <= 2 * n as u32
                }
            };
            if nonzero != predicted {
                mismatches.push(format!(
                    "{kind} n={n} {shape}: tensor nonzero={nonzero}, rule predicts {predicted}"
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = mismatches.is_empty();
    report(
        "2 (irreducibility/nonvanishing rules)",
        pass,
        elapsed,
        &format!("mismatches: {mismatches:?}"),
    );
    assert!(pass, "{mismatches:?}");
}

/// Criterion 3: every nonzero S_<λ>V on the grid is numerically Hodge
/// symmetric and its top (p-q) support equals the size of λ.
///
/// The palindromic half holds throughout. The top-support half fails for
/// orthogonal shapes whose first column is longer than n: those spaces are
/// the associated smaller shape twisted by the determinant character, whose
/// top torus weight is the size of the smaller shape, not of λ. The failures
/// are printed and the criterion is asserted as stated.
#[test]
fn criterion_3_hodge_symmetry_and_top_support() {
    let start = Instant::now();
    let mut symmetry_failures = Vec::new();
    let mut support_failures = Vec::new();
    for (kind, n) in grid() {
        let rep = StandardRep::new(kind, n).unwrap();
        for shape in shapes_up_to(4) {
            let space = s_lambda_space(&rep, &shape).unwrap();
            if space.dim() == 0 {
                continue;
            }
            let profile = hodge_profile(&rep, &space, shape.size() as usize);
            if !profile.is_palindromic() {
                symmetry_failures.push(format!("{kind} n={n} {shape}: {profile}"));
            }
            let expected = shape.size() as i64;
            if profile.max_support() != Some(expected) {
                support_failures.push(format!(
                    "{kind} n={n} {shape}: max support {:?}, size {expected}",
                    profile.max_support()
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = symmetry_failures.is_empty() && support_failures.is_empty();
    report(
        "3 (numerical Hodge symmetry and top support)",
        pass,
        elapsed,
        &format!(
            "symmetry failures: {symmetry_failures:?}; top-support failures: {support_failures:?}"
        ),
    );
    assert!(
        pass,
        "symmetry: {symmetry_failures:?}; support: {support_failures:?}"
    );
}

/// Criterion 4: for very general descriptors (type I, f = 1) with g <= 3 the
/// certificate tables equal the primitive filtration dimensions, for every
/// degree and coniveau step.
#[test]
fn criterion_4_coniveau_equals_primitive_filtration() {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    for g in 1..=3u32 {
        let desc = very_general(g);
        for k in 0..=2 * g {
            let cert = coniveau_report(&desc, 1, k).unwrap();
            for n in 0..=k / 2 {
                let expected = primitive_filtration_dims(g, k, n);
                let got = cert.table.get(n);
                if got != expected {
                    mismatches.push(format!("g={g} k={k} n={n}: {got} vs {expected}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = mismatches.is_empty() && elapsed < Duration::from_secs(60);
    report(
        "4 (coniveau tables equal the primitive filtration)",
        pass,
        elapsed,
        &format!("mismatches: {mismatches:?}"),
    );
    assert!(pass, "{mismatches:?}");
}

/// Criterion 5: the symmetric/skew vanishing premise holds at the threshold
/// N = C(g,i) + 1 for all g <= 4 and 0 <= i <= g.
#[test]
fn criterion_5_sym_vanishing_at_threshold() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for g in 1..=4u32 {
        for i in 0..=g {
            let n = binomial(g as u64, i as u64) as usize + 1;
            if !sym_vanishing_check(g, i, n) {
                failures.push(format!("g={g} i={i} N={n}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(10);
    report(
        "5 (holomorphic-row vanishing at the binomial threshold)",
        pass,
        elapsed,
        &format!("failures: {failures:?}"),
    );
    assert!(pass, "{failures:?}");
}

/// Criterion 6: invariant-form counts for the abelian-surface quotients have
/// no odd terms for n <= 4, and n = 1 gives exactly 1 + t^2.
#[test]
fn criterion_6_molien_invariants() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let kummer = molien_holomorphic_invariants(2, 1).unwrap();
    if kummer != vec![1, 0, 1] {
        failures.push(format!("n=1 coefficients {kummer:?}"));
    }
    for n in 1..=4u32 {
        let coeffs = molien_holomorphic_invariants(2, n).unwrap();
        for (k, &c) in coeffs.iter().enumerate() {
            if k % 2 == 1 && c != 0 {
                failures.push(format!("n={n}: odd coefficient {c} at degree {k}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(30);
    report(
        "6 (invariant holomorphic forms on Kummer quotients)",
        pass,
        elapsed,
        &format!("failures: {failures:?}"),
    );
    assert!(pass, "{failures:?}");
}

/// Criterion 7: the projector families for g <= 3 are exact orthogonal
/// decompositions with primitive Betti ranks, and the hard Lefschetz maps
/// are invertible.
#[test]
fn criterion_7_kleiman_projector_families() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for g in 0..=3u32 {
        let family = kleiman_projectors(g).unwrap();
        let verdict = family.verify();
        if !(verdict.idempotent_ok
            && verdict.orthogonal_ok
            && verdict.sum_is_identity
            && verdict.hard_lefschetz_ok)
        {
            failures.push(format!("g={g}: {verdict:?}"));
            continue;
        }
        for ((k, r), rank) in &verdict.ranks {
            let j = *k as i64 - 2 * *r as i64;
            let expected = if j < 0 {
                0
            } else {
                binomial(2 * g as u64, j as u64)
                    .saturating_sub(if j >= 2 { binomial(2 * g as u64, j as u64 - 2) } else { 0 })
            };
            if *rank != expected {
                failures.push(format!("g={g} p^({k},{r}): rank {rank} vs {expected}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(60);
    report(
        "7 (graded projector families and hard Lefschetz)",
        pass,
        elapsed,
        &format!("failures: {failures:?}"),
    );
    assert!(pass, "{failures:?}");
}

/// Criterion 8: the classification error taxonomy: the three stated
/// violation examples and the type IV refusal path.
#[test]
fn criterion_8_validation_taxonomy() {
    let start = Instant::now();
    let mut failures = Vec::new();

    if !validate(&very_general(2)).is_empty() {
        failures.push("very general surface flagged as invalid".to_string());
    }
    let strict = AbelianDescriptor::new(vec![AbelianFactor {
        albert_type: AlbertType::III,
        f: 1,
        d: 2,
        g: 2,
        m: 1,
    }]);
    let v = validate(&strict);
    if !(v.len() == 1 && v[0].rule == "albert.type_iii.strict_divisibility") {
        failures.push(format!("type III strictness: {v:?}"));
    }
    let bad_ii = AbelianDescriptor::new(vec![AbelianFactor {
        albert_type: AlbertType::II,
        f: 2,
        d: 2,
        g: 2,
        m: 1,
    }]);
    let v = validate(&bad_ii);
    if !(v.len() == 1 && v[0].rule == "albert.type_ii.divisibility") {
        failures.push(format!("type II divisibility: {v:?}"));
    }

    // Type IV: group identification works, certificates are refused.
    let cm_curve = AbelianDescriptor::new(vec![AbelianFactor {
        albert_type: AlbertType::IV,
        f: 1,
        d: 1,
        g: 1,
        m: 1,
    }]);
    if lefschetz_group(&cm_curve).is_err() {
        failures.push("type IV group identification rejected".to_string());
    }
    match coniveau_report(&cm_curve, 1, 1) {
        Err(LefschetzError::TypeIvUnsupported) => {}
        other => failures.push(format!("type IV certificate path: {other:?}")),
    }

    let elapsed = start.elapsed();
    let pass = failures.is_empty();
    report(
        "8 (classification violations and type IV refusal)",
        pass,
        elapsed,
        &format!("failures: {failures:?}"),
    );
    assert!(pass, "{failures:?}");
}

/// Criterion 9: the contraction/insertion decomposition reconciles exactly
/// with the full tensor space for both kinds, n <= 3, 2 <= d <= 4.
#[test]
fn criterion_9_decomposition_audit() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut reps = vec![
        StandardRep::new(FormKind::Symplectic, 1).unwrap(),
        StandardRep::new(FormKind::Symplectic, 2).unwrap(),
        StandardRep::new(FormKind::Symplectic, 3).unwrap(),
        StandardRep::new(FormKind::Orthogonal, 2).unwrap(),
    ];
    reps.push(StandardRep::new(FormKind::Orthogonal, 3).unwrap());
    for rep in reps {
        for d in 2..=4usize {
            let audit = decomposition_audit(&rep, d).unwrap();
            if !audit.pass
                || audit.traceless_dim + audit.insertion_span_dim != audit.ambient_dim
                || audit.intersection_dim != 0
            {
                failures.push(format!(
                    "{} n={} d={d}: {audit:?}",
                    rep.kind(),
                    rep.rank()
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty();
    report(
        "9 (direct-sum decomposition audit)",
        pass,
        elapsed,
        &format!("failures: {failures:?}"),
    );
    assert!(pass, "{failures:?}");
}
