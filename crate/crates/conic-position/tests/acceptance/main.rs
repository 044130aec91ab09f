//! Acceptance suite: one test per criterion. Each test prints a single
//! `PASS <criterion>: ...` line with the measured corpus size and timing
//! (visible with `--nocapture`); on failure the panic message carries the
//! criterion name and the first counterexamples.

mod corpus;

use std::collections::BTreeSet;
use std::hint::black_box;
use std::time::{Duration, Instant};

use conic_position::classify_hyperbola::{self, HyperbolaEllipsePosition};
use conic_position::classify_parabola::{self, ParabolaEllipsePosition};
use conic_position::conic::{normalize, transform_conic, Conic};
use conic_position::numeric::{ApproxScalar, Rational, Scalar, Sign};
use conic_position::oracle::{
    coarse_class, coarse_matches_hyperbola, coarse_matches_parabola, intersect_conics,
    isolate_cubic_roots, root_pattern_classify_hyperbola, root_pattern_classify_parabola,
};
use conic_position::pencil::{discriminant, invariants};
use conic_position::witness::{hyperbola_witnesses, parabola_witnesses};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use corpus::*;

#[test]
fn parabola_witness_reproduction() {
    let start = Instant::now();
    let witnesses = parabola_witnesses();
    let mut cases = BTreeSet::new();
    for w in &witnesses {
        let (n, m) = w.conic_pair();
        let got = classify_parabola::classify_general(&n, &m)
            .unwrap_or_else(|e| panic!("FAIL parabola witness reproduction: {}: {e}", w.name));
        assert_eq!(
            got, w.expected,
            "FAIL parabola witness reproduction: witness {}",
            w.name
        );
        cases.insert(got.case_number().expect("exact mode is determinate"));
    }
    let elapsed = start.elapsed();
    assert_eq!(
        cases.len(),
        9,
        "FAIL parabola witness reproduction: cases covered {cases:?}"
    );
    assert!(
        elapsed < Duration::from_secs(1),
        "FAIL parabola witness reproduction: took {elapsed:?}"
    );
    println!(
        "PASS parabola witness reproduction: {} witnesses, 9/9 cases via the general classifier, {elapsed:?}",
        witnesses.len()
    );
}

#[test]
fn hyperbola_witness_reproduction() {
    let start = Instant::now();
    let witnesses = hyperbola_witnesses();
    let mut cases = BTreeSet::new();
    for w in &witnesses {
        let (n, m) = w.conic_pair();
        let got = classify_hyperbola::classify_general(&n, &m)
            .unwrap_or_else(|e| panic!("FAIL hyperbola witness reproduction: {}: {e}", w.name));
        assert_eq!(
            got, w.expected,
            "FAIL hyperbola witness reproduction: witness {}",
            w.name
        );
        cases.insert(got.case_number().expect("exact mode is determinate"));
    }
    let elapsed = start.elapsed();
    assert_eq!(
        cases.len(),
        11,
        "FAIL hyperbola witness reproduction: cases covered {cases:?}"
    );
    assert!(
        elapsed < Duration::from_secs(1),
        "FAIL hyperbola witness reproduction: took {elapsed:?}"
    );
    println!(
        "PASS hyperbola witness reproduction: {} witnesses, 11/11 cases via the general classifier, {elapsed:?}",
        witnesses.len()
    );
}

#[test]
fn classifier_oracle_equivalence() {
    let start = Instant::now();
    let parabolas = parabola_corpus(10_000, 500);
    let hyperbolas = hyperbola_corpus(10_000, 500);
    let mut mismatches: Vec<String> = Vec::new();

    for (i, s) in parabolas.iter().enumerate() {
        let classified = classify_parabola::classify_canonical(&s.config)
            .unwrap_or_else(|e| panic!("FAIL classifier-oracle equivalence: parabola {i}: {e}"));
        let from_roots = root_pattern_classify_parabola(&s.config).unwrap_or_else(|e| {
            panic!("FAIL classifier-oracle equivalence: parabola {i}: oracle: {e} (config {:?})", s.config)
        });
        if classified != from_roots {
            mismatches.push(format!(
                "parabola {i}: classifier {classified} vs root pattern {from_roots} (config {:?})",
                s.config
            ));
        }
    }
    for (i, s) in hyperbolas.iter().enumerate() {
        let classified = classify_hyperbola::classify_canonical(&s.config)
            .unwrap_or_else(|e| panic!("FAIL classifier-oracle equivalence: hyperbola {i}: {e}"));
        let from_roots = root_pattern_classify_hyperbola(&s.config).unwrap_or_else(|e| {
            panic!("FAIL classifier-oracle equivalence: hyperbola {i}: oracle: {e} (config {:?})", s.config)
        });
        if classified != from_roots {
            mismatches.push(format!(
                "hyperbola {i}: classifier {classified} vs root pattern {from_roots} (config {:?})",
                s.config
            ));
        }
    }

    if !mismatches.is_empty() {
        for line in mismatches.iter().take(10) {
            eprintln!("{line}");
        }
        panic!(
            "FAIL classifier-oracle equivalence: {} mismatches",
            mismatches.len()
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(120),
        "FAIL classifier-oracle equivalence: took {elapsed:?}"
    );
    println!(
        "PASS classifier-oracle equivalence: {} parabola + {} hyperbola instances (500 exact tangencies each), 100% agreement, {elapsed:?}",
        parabolas.len(),
        hyperbolas.len()
    );
}

#[test]
fn general_classification_is_similarity_invariant() {
    let start = Instant::now();
    let pw = parabola_witnesses();
    let hw = hyperbola_witnesses();
    let mut r = rng(5);
    let total = 1_000;
    for i in 0..total {
        let s = similarity(&mut r);
        if i % 2 == 0 {
            let w = &pw[(i / 2) % pw.len()];
            let expected = classify_parabola::classify_canonical(&w.canonical()).unwrap();
            let (n, m) = w.conic_pair();
            let got = classify_parabola::classify_general(
                &transform_conic(&n, &s),
                &transform_conic(&m, &s),
            )
            .unwrap_or_else(|e|

                panic!("FAIL similarity invariance: {} under transform {i}: {e}", w.name)
            );
            assert_eq!(
                got, expected,
                "FAIL similarity invariance: witness {} under transform {i}",
                w.name
            );
        } else {
            let w = &hw[(i / 2) % hw.len()];
            let expected = classify_hyperbola::classify_canonical(&w.canonical()).unwrap();
            let (n, m) = w.conic_pair();
            let got = classify_hyperbola::classify_general(
                &transform_conic(&n, &s),
                &transform_conic(&m, &s),
            )
            .unwrap_or_else(|e| {
                panic!("FAIL similarity invariance: {} under transform {i}: {e}", w.name)
            });
            assert_eq!(
                got, expected,
                "FAIL similarity invariance: witness {} under transform {i}",
                w.name
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "FAIL similarity invariance: took {elapsed:?}"
    );
    println!(
        "PASS similarity invariance: {total} random rotation+scaling+translation transforms of the witness corpus, 100% agreement, {elapsed:?}"
    );
}

#[test]
fn discriminant_sign_matches_root_structure() {
    let start = Instant::now();
    let mut r = rng(6);
    let total = 10_000;
    let mut counts = [0usize; 3];
    for i in 0..total {
        let f = if i % 10 == 0 {
            repeated_root_cubic(&mut r)
        } else {
            random_cubic(&mut r)
        };
        let disc = discriminant(&f).expect("sampler keeps the leading coefficient nonzero");
        let pattern =
            isolate_cubic_roots(&f).expect("sampler keeps the leading coefficient nonzero");
        let distinct = pattern.roots.len();
        let repeated = pattern.roots.iter().any(|p| p.multiplicity > 1);
        match disc.sign() {
            Sign::Positive => {
                counts[0] += 1;
                assert!(
                    distinct == 3 && !repeated,
                    "FAIL discriminant law: cubic {i} ({f:?}) has positive discriminant but roots {pattern:?}"
                );
            }
            Sign::Negative => {
                counts[1] += 1;
                assert!(
                    distinct == 1 && !repeated && pattern.complex_pair_count == 1,
                    "FAIL discriminant law: cubic {i} ({f:?}) has negative discriminant but roots {pattern:?}"
                );
            }
            Sign::Zero => {
                counts[2] += 1;
                assert!(
                    repeated,
                    "FAIL discriminant law: cubic {i} ({f:?}) has zero discriminant but roots {pattern:?}"
                );
            }
            Sign::Unknown => unreachable!("rational signs are always determinate"),
        }
    }
    let elapsed = start.elapsed();
    println!(
        "PASS discriminant law: {total} cubics ({} positive, {} negative, {} zero), root structure matches on 100%, {elapsed:?}",
        counts[0], counts[1], counts[2]
    );
}

#[test]
fn coarse_geometry_matches_fine_cases() {
    let start = Instant::now();
    let parabolas = parabola_corpus(400, 100);
    let hyperbolas = hyperbola_corpus(400, 100);
    for (i, s) in parabolas.iter().enumerate() {
        let case = classify_parabola::classify_canonical(&s.config).unwrap();
        let summary = intersect_conics(&s.parabola, &s.circle).unwrap_or_else(|e| {
            panic!("FAIL coarse check: parabola {i}: {e} (config {:?})", s.config)
        });
        let coarse = coarse_class(&summary, &s.parabola, &s.circle).unwrap();
        assert!(
            coarse_matches_parabola(&case, &coarse),
            "FAIL coarse check: parabola {i}: case {case} vs geometry {coarse:?} (config {:?})",
            s.config
        );
    }
    for (i, s) in hyperbolas.iter().enumerate() {
        let case = classify_hyperbola::classify_canonical(&s.config).unwrap();
        let summary = intersect_conics(&s.hyperbola, &s.circle).unwrap_or_else(|e| {
            panic!("FAIL coarse check: hyperbola {i}: {e} (config {:?})", s.config)
        });
        let coarse = coarse_class(&summary, &s.hyperbola, &s.circle).unwrap();
        assert!(
            coarse_matches_hyperbola(&case, &coarse),
            "FAIL coarse check: hyperbola {i}: case {case} vs geometry {coarse:?} (config {:?})",
            s.config
        );
    }
    let elapsed = start.elapsed();
    println!(
        "PASS coarse geometric check: {} instances (200 exact tangencies), intersection counts and containment match on 100%, {elapsed:?}",
        parabolas.len() + hyperbolas.len()
    );
}

#[test]
fn exactly_one_condition_set_matches() {
    let start = Instant::now();
    let parabolas = parabola_corpus(10_000, 500);
    let hyperbolas = hyperbola_corpus(10_000, 500);
    let mut trouble: Vec<String> = Vec::new();

    for (i, s) in parabolas.iter().enumerate() {
        let sd = classify_parabola::canonical_sign_data(&s.config)
            .unwrap_or_else(|q| panic!("FAIL exclusivity audit: parabola {i}: uncertain {q}"));
        let cases = classify_parabola::matching_cases_canonical(&sd);
        if cases.len() != 1 {
            trouble.push(format!(
                "parabola {i}: canonical cases {cases:?} (config {:?})",
                s.config
            ));
            continue;
        }
        let n = normalize(&s.parabola).unwrap();
        let m = normalize(&s.circle).unwrap();
        let inv = invariants(&n, &m).unwrap();
        let gsd = classify_parabola::general_sign_data(&inv)
            .unwrap_or_else(|q| panic!("FAIL exclusivity audit: parabola {i}: uncertain {q}"));
        let gcases = classify_parabola::matching_cases_general(&gsd);
        if gcases != cases {
            trouble.push(format!(
                "parabola {i}: general cases {gcases:?} vs canonical {cases:?} (config {:?})",
                s.config
            ));
        }
    }
    for (i, s) in hyperbolas.iter().enumerate() {
        let sd = classify_hyperbola::canonical_sign_data(&s.config)
            .unwrap_or_else(|q| panic!("FAIL exclusivity audit: hyperbola {i}: uncertain {q}"));
        let cases = classify_hyperbola::matching_cases_canonical(&sd);
        if cases.len() != 1 {
            trouble.push(format!(
                "hyperbola {i}: canonical cases {cases:?} (config {:?})",
                s.config
            ));
            continue;
        }
        let n = normalize(&s.hyperbola).unwrap();
        let m = normalize(&s.circle).unwrap();
        let inv = invariants(&n, &m).unwrap();
        let gsd = classify_hyperbola::general_sign_data(&inv)
            .unwrap_or_else(|q| panic!("FAIL exclusivity audit: hyperbola {i}: uncertain {q}"));
        let gcases = classify_hyperbola::matching_cases_general(&gsd);
        if gcases != cases {
            trouble.push(format!(
                "hyperbola {i}: general cases {gcases:?} vs canonical {cases:?} (config {:?})",
                s.config
            ));
        }
    }

    if !trouble.is_empty() {
        for line in trouble.iter().take(10) {
            eprintln!("{line}");
        }
        panic!("FAIL exclusivity audit: {} violations", trouble.len());
    }
    let elapsed = start.elapsed();
    println!(
        "PASS exclusivity audit: {} instances, exactly one condition set per instance on both routes, zero unmatched, {elapsed:?}",
        parabolas.len() + hyperbolas.len()
    );
}

#[test]
fn float_mode_agrees_or_abstains() {
    let start = Instant::now();
    // Relative noise injected into every nonzero coefficient; the tolerance
    // knob sits above the noise floor so that boundary signs abstain instead
    // of guessing.
    let noise = 1e-6;
    let tol = 1e-4;
    let mut noise_rng = rng(7);
    let parabolas = parabola_corpus(10_000, 500);
    let hyperbolas = hyperbola_corpus(10_000, 500);
    let mut abstained = 0usize;
    let mut violations: Vec<String> = Vec::new();

    for (i, s) in parabolas.iter().enumerate() {
        let exact = classify_parabola::classify_canonical(&s.config).unwrap();
        let fp = perturbed(&s.parabola, &mut noise_rng, noise, tol);
        let fc = perturbed(&s.circle, &mut noise_rng, noise, tol);
        match classify_parabola::classify_general(&fp, &fc) {
            Ok(ParabolaEllipsePosition::Indeterminate { .. }) => abstained += 1,
            Ok(got) if got == exact => {}
            Ok(got) => violations.push(format!(
                "parabola {i}: float {got} vs exact {exact} (config {:?})",
                s.config
            )),
            Err(e) => violations.push(format!("parabola {i}: float mode error {e}")),
        }
    }
    for (i, s) in hyperbolas.iter().enumerate() {
        let exact = classify_hyperbola::classify_canonical(&s.config).unwrap();
        let fh = perturbed(&s.hyperbola, &mut noise_rng, noise, tol);
        let fc = perturbed(&s.circle, &mut noise_rng, noise, tol);
        match classify_hyperbola::classify_general(&fh, &fc) {
            Ok(HyperbolaEllipsePosition::Indeterminate { .. }) => abstained += 1,
            Ok(got) if got == exact => {}
            Ok(got) => violations.push(format!(
                "hyperbola {i}: float {got} vs exact {exact} (config {:?})",
                s.config
            )),
            Err(e) => violations.push(format!("hyperbola {i}: float mode error {e}")),
        }
    }

    if !violations.is_empty() {
        for line in violations.iter().take(10) {
            eprintln!("{line}");
        }
        panic!("FAIL float-mode sanity: {} violations", violations.len());
    }
    let total = parabolas.len() + hyperbolas.len();
    let elapsed = start.elapsed();
    println!(
        "PASS float-mode sanity: {total} perturbed instances (noise {noise:.0e}, tol {tol:.0e}), agreement or abstention on 100% ({abstained} abstained), {elapsed:?}"
    );
}

#[test]
fn classification_latency() {
    let runs = 1_000;
    let mut r = rng(8);

    let mut exact_times: Vec<Duration> = Vec::with_capacity(runs);
    let mut float_times: Vec<Duration> = Vec::with_capacity(runs);
    for i in 0..runs {
        if i % 2 == 0 {
            let s = random_parabola_sample(&mut r);
            let t0 = Instant::now();
            black_box(classify_parabola::classify_general(
                black_box(&s.parabola),
                black_box(&s.circle),
            ))
            .unwrap();
            exact_times.push(t0.elapsed());
            let fp = to_float(&s.parabola);
            let fc = to_float(&s.circle);
            let t0 = Instant::now();
            black_box(classify_parabola::classify_general(
                black_box(&fp),
                black_box(&fc),
            ))
            .ok();
            float_times.push(t0.elapsed());
        } else {
            let s = random_hyperbola_sample(&mut r);
            let t0 = Instant::now();
            black_box(classify_hyperbola::classify_general(
                black_box(&s.hyperbola),
                black_box(&s.circle),
            ))
            .unwrap();
            exact_times.push(t0.elapsed());
            let fh = to_float(&s.hyperbola);
            let fc = to_float(&s.circle);
            let t0 = Instant::now();
            black_box(classify_hyperbola::classify_general(
                black_box(&fh),
                black_box(&fc),
            ))
            .ok();
            float_times.push(t0.elapsed());
        }
    }
    exact_times.sort_unstable();
    float_times.sort_unstable();
    let exact_median = exact_times[runs / 2];
    let float_median = float_times[runs / 2];
    assert!(
        exact_median < Duration::from_millis(10),
        "FAIL performance: exact-mode median {exact_median:?}"
    );
    assert!(
        float_median < Duration::from_micros(100),
        "FAIL performance: float-mode median {float_median:?}"
    );
    println!(
        "PASS performance: medians over {runs} runs: exact {exact_median:?} (< 10 ms), float {float_median:?} (< 100 us)"
    );
}

// ── Helpers ──────────────────────────────────────────────────────────────────

fn perturbed(
    c: &Conic<Rational>,
    rng: &mut ChaCha8Rng,
    noise: f64,
    tol: f64,
) -> Conic<ApproxScalar> {
    c.map(|x| {
        let u: f64 = rng.gen_range(-1.0..=1.0);
        ApproxScalar::new(Scalar::to_f64(x) * (1.0 + u * noise), tol)
    })
}

fn to_float(c: &Conic<Rational>) -> Conic<ApproxScalar> {
    c.map(|x| ApproxScalar::with_default_tol(Scalar::to_f64(x)))
}
