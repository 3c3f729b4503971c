//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured data (visible with `--nocapture`; the test name carries the
//! verdict either way).
//!
//! Run with: cargo test --test acceptance -- --nocapture

use broomex::{
    check_berge_free, closed_form_value, contains_broom, count_subgraph_naive, enumerate_count,
    enumerate_graphs, enumerate_via_dedup, extremal_search, family_min_n, is_broom_free,
    make_broom, predicted_extremal, uniqueness_claimed, verify_predictions, BergeFreeVerdict,
    BroomSpec, FamilyId, Graph, Objective,
};

fn spec(ell: u32, s: u32) -> BroomSpec {
    BroomSpec::new(ell, s).unwrap()
}

/// Specs whose closed forms are exercised family by family.
const FAMILY_BATTERY: [(u32, u32); 9] = [
    (4, 0),
    (4, 1),
    (5, 0),
    (5, 1),
    (5, 2),
    (6, 0),
    (6, 1),
    (7, 0),
    (8, 0),
];

/// Specs used in the enumeration-heavy criteria.
const ENUM_BATTERY: [(u32, u32); 5] = [(4, 0), (4, 1), (5, 0), (5, 1), (6, 0)];

/// Maximum of an objective over broom-free graphs, straight from the labeled
/// dedup oracle. Independent of the augmentation generator and of the pruned
/// search.
fn oracle_optimum(sp: &BroomSpec, n: usize, r: u32, objective: Objective) -> u64 {
    enumerate_via_dedup(n)
        .unwrap()
        .iter()
        .filter(|g| is_broom_free(g, sp))
        .map(|g| objective.evaluate(g, r).unwrap())
        .max()
        .unwrap()
}

#[test]
fn criterion_1_chair_free_star_optimum() {
    // Claimed: for B(4,1), r = 2, the search optimum at n = 7, 8, 9 is
    // exactly (n-1)^2 + (n-1) with the star as the unique maximizer.
    let sp = spec(4, 1);
    let mut failures = Vec::new();
    let mut observed = Vec::new();
    for n in 7u32..=9 {
        let report = extremal_search(&sp, n, 2, Objective::Er).unwrap();
        let claimed = ((n - 1) * (n - 1) + (n - 1)) as u64;
        let star_g6 = {
            let star = Graph::star(n as usize).unwrap();
            broomex::graph6_encode(&broomex::canonical_graph(&star).unwrap()).unwrap()
        };
        observed.push(format!(
            "n={n}: optimum={} (claimed {claimed}), optimizers={:?}",
            report.optimum, report.optimizers
        ));
        if report.optimum != claimed {
            failures.push(format!(
                "n={n}: optimum is {} from {:?}, not {claimed}",
                report.optimum, report.optimizers
            ));
        } else if report.optimizers != vec![star_g6.clone()] {
            failures.push(format!(
                "n={n}: optimum {claimed} attained by {:?}, not by the star alone",
                report.optimizers
            ));
        }
    }
    for line in &observed {
        println!("criterion 1 data: {line}");
    }
    assert!(
        failures.is_empty(),
        "criterion 1 fails as stated; exhaustive search contradicts the claimed values:\n{}",
        failures.join("\n")
    );
    println!("criterion 1: PASS");
}

#[test]
fn criterion_2_closed_form_matches_construction() {
    let mut checked = 0usize;
    for (ell, s) in FAMILY_BATTERY {
        let sp = spec(ell, s);
        for n in family_min_n(&sp)..=12 {
            let (_, g) = predicted_extremal(&sp, n).unwrap();
            for r in [2u32, 3] {
                for objective in [Objective::Er, Objective::Stars] {
                    assert_eq!(
                        closed_form_value(&sp, n, r, objective).unwrap(),
                        objective.evaluate(&g, r).unwrap(),
                        "B({ell},{s}), n={n}, r={r}, {objective}"
                    );
                    checked += 1;
                }
            }
        }
    }
    println!("criterion 2: PASS ({checked} closed-form agreements)");
}

#[test]
fn criterion_3_predicted_families_broom_free() {
    let mut checked = 0usize;
    for (ell, s) in FAMILY_BATTERY {
        let sp = spec(ell, s);
        for n in family_min_n(&sp)..=12 {
            let (family, g) = predicted_extremal(&sp, n).unwrap();
            assert!(
                !contains_broom(&g, &sp),
                "{family} contains B({ell},{s}) at n={n}"
            );
            checked += 1;
        }
    }
    println!("criterion 3: PASS ({checked} family/spec pairings broom-free)");
}

#[test]
fn criterion_4_agreement_sweeps() {
    // Sweeps to n = 9 at r = 2 for both objectives. The closed forms only
    // promise extremality for large n, so small-n deviations are legitimate
    // data; what this criterion demands is that every sweep completes, that
    // the searched optima agree with the dedup oracle wherever the oracle
    // reaches (n <= 6), and that disagreements surface in the reports
    // rather than vanish.
    let mut lines = Vec::new();
    for (ell, s) in [(4u32, 0u32), (5, 0), (5, 1), (6, 0)] {
        let sp = spec(ell, s);
        let n_min = family_min_n(&sp);
        let summary = verify_predictions(&sp, 2, n_min, 9).unwrap();
        for sweep in &summary.sweeps {
            assert_eq!(
                sweep.reports.len() as u32,
                9 - n_min + 1,
                "sweep must cover the whole range"
            );
            for report in &sweep.reports {
                // Honest reporting: the agreement flag is exactly the value
                // comparison, and maximizers are never empty.
                assert_eq!(report.agrees, report.optimum == report.predicted_value);
                assert!(!report.optimizers.is_empty());
                if report.n <= 6 {
                    let oracle = oracle_optimum(&sp, report.n as usize, 2, sweep.objective);
                    assert_eq!(
                        report.optimum, oracle,
                        "search disagrees with the dedup oracle at B({ell},{s}), n={}, {}",
                        report.n, sweep.objective
                    );
                }
            }
            assert_eq!(
                sweep.uniqueness_claimed,
                uniqueness_claimed(&sp, sweep.objective)
            );
            lines.push(format!(
                "B({ell},{s}) {}: threshold={:?} agrees={:?}",
                sweep.objective,
                sweep.threshold,
                sweep.reports.iter().map(|r| r.agrees).collect::<Vec<_>>()
            ));
        }
    }
    for line in &lines {
        println!("criterion 4 data: {line}");
    }
    // Measured agreement thresholds, pinned; the README records the same
    // values. None for B(5,1): packings of K5 components stay ahead of F(n)
    // through n = 9.
    let expected: Vec<(&str, Option<u32>)> = vec![
        ("B(4,0) er", Some(5)),
        ("B(4,0) stars", Some(5)),
        ("B(5,0) er", Some(9)),
        ("B(5,0) stars", Some(9)),
        ("B(5,1) er", None),
        ("B(5,1) stars", None),
        ("B(6,0) er", Some(7)),
        ("B(6,0) stars", Some(7)),
    ];
    for ((label, want), line) in expected.iter().zip(&lines) {
        assert!(
            line.starts_with(&format!("{label}: threshold={want:?}")),
            "measured threshold moved: wanted `{label}: threshold={want:?}`, got `{line}`"
        );
    }
    println!("criterion 4: PASS (sweeps complete, oracle-verified at n <= 6, duplicates of the data above recorded in README.md)");
}

#[test]
fn criterion_5_oracle_equivalences() {
    // (a) Star counts against naive subgraph counting, r in {2, 3, 4}.
    let mut graphs: Vec<Graph> = vec![Graph::empty(1).unwrap()];
    for n in 2..=7usize {
        graphs.extend(enumerate_graphs(n, None, false).unwrap());
    }
    let mut star_checks = 0usize;
    for g in &graphs {
        for r in [2u32, 3, 4] {
            let star_pattern = Graph::star(r as usize + 1).unwrap();
            assert_eq!(
                g.count_stars(r).unwrap(),
                count_subgraph_naive(g, &star_pattern).unwrap(),
                "stars r={r} on {g:?}"
            );
            star_checks += 1;
        }
    }

    // (b) Broom containment against naive embedding counting, ell + s <= 7.
    let specs: Vec<BroomSpec> = (4u32..=7)
        .flat_map(|ell| (0..=(7 - ell)).map(move |s| spec(ell, s)))
        .collect();
    let mut broom_checks = 0usize;
    for g in &graphs {
        for sp in &specs {
            let pattern = make_broom(sp).unwrap();
            let copies = count_subgraph_naive(g, &pattern).unwrap();
            assert_eq!(
                contains_broom(g, sp),
                copies > 0,
                "containment vs naive count on {g:?} for {sp}"
            );
            broom_checks += 1;
        }
    }

    // (c) Filtered enumeration equals post-filtered enumeration at n <= 6.
    for n in 2..=6usize {
        for (ell, s) in ENUM_BATTERY {
            let sp = spec(ell, s);
            let filtered: Vec<String> = enumerate_graphs(n, Some(&sp), false)
                .unwrap()
                .iter()
                .map(|g| broomex::graph6_encode(g).unwrap())
                .collect();
            let post: Vec<String> = enumerate_graphs(n, None, false)
                .unwrap()
                .iter()
                .filter(|g| is_broom_free(g, &sp))
                .map(|g| broomex::graph6_encode(g).unwrap())
                .collect();
            assert_eq!(filtered, post, "n={n}, {sp}");
        }
    }

    // (d) Class counts, from the generator and from labeled brute force.
    for (n, classes) in [(4usize, 11u64), (5, 34), (6, 156), (7, 1044)] {
        assert_eq!(enumerate_count(n, None, false).unwrap(), classes);
        assert_eq!(enumerate_via_dedup(n).unwrap().len() as u64, classes);
    }

    println!(
        "criterion 5: PASS ({star_checks} star equivalences, {broom_checks} containment equivalences, \
         filtered = post-filtered at n <= 6, counts 11/34/156/1044)"
    );
}

#[test]
fn criterion_6_edge_count_bound() {
    let mut checked = 0usize;
    for (ell, s) in ENUM_BATTERY {
        let sp = spec(ell, s);
        for n in 2..=8usize {
            for g in enumerate_graphs(n, Some(&sp), false).unwrap() {
                assert!(
                    g.edge_count() as u64 <= ((ell + s) as u64) * n as u64,
                    "edge bound violated on {g:?} for {sp}"
                );
                checked += 1;
            }
        }
    }
    println!("criterion 6: PASS ({checked} broom-free graphs within the edge bound)");
}

#[test]
fn criterion_7_heavy_rset_berge_freeness() {
    // Every broom-free graph on <= 8 vertices, battery specs, r = 2: the
    // pairs with more than ell + s common neighbors admit no Berge path of
    // k + 1 hyperedges.
    let mut checked = 0usize;
    for (ell, s) in ENUM_BATTERY {
        let sp = spec(ell, s);
        for n in 2..=8usize {
            for g in enumerate_graphs(n, Some(&sp), false).unwrap() {
                match check_berge_free(&g, 2, &sp).unwrap() {
                    BergeFreeVerdict::Holds { .. } => checked += 1,
                    BergeFreeVerdict::Inapplicable => {
                        panic!("filtered enumeration emitted a broom host: {g:?}")
                    }
                    BergeFreeVerdict::Violated { berge, broom } => panic!(
                        "Berge path {berge:?} in a broom-free host {g:?} yields broom {broom:?}"
                    ),
                }
            }
        }
    }
    println!("criterion 7: PASS ({checked} broom-free hosts Berge-free at length k+1)");
}

#[test]
fn criterion_8_edge_deletion_strictness() {
    // Deleting any edge of a predicted family must strictly lower e_2, and
    // strictly lower the star count for the H and H* families.
    let mut er_checks = 0usize;
    let mut star_checks = 0usize;
    let mut violations = Vec::new();
    for (ell, s) in FAMILY_BATTERY {
        let sp = spec(ell, s);
        for n in family_min_n(&sp)..=10 {
            let (family, g) = predicted_extremal(&sp, n).unwrap();
            let er = g.e_r(2).unwrap();
            let stars = g.count_stars(2).unwrap();
            let stars_claimed = !matches!(family, FamilyId::F { .. });
            for (u, v) in g.edges() {
                let smaller = g.with_edge_removed(u, v).unwrap();
                if smaller.e_r(2).unwrap() >= er {
                    violations.push(format!(
                        "e_2 not strictly lower deleting ({u},{v}) from {family} [B({ell},{s})]"
                    ));
                }
                er_checks += 1;
                if stars_claimed {
                    if smaller.count_stars(2).unwrap() >= stars {
                        violations.push(format!(
                            "star count not strictly lower deleting ({u},{v}) from {family} [B({ell},{s}), n={n}]"
                        ));
                    }
                    star_checks += 1;
                }
            }
        }
    }
    assert!(
        violations.is_empty(),
        "criterion 8 fails as stated:\n{}",
        violations.join("\n")
    );
    println!(
        "criterion 8: PASS ({er_checks} e_2 deletions, {star_checks} star deletions, all strict)"
    );
}
