//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the verified facts. Every tolerance is exact (integer equality);
//! run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod support;

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hilb3::bounds::{self, PsiContext, ScanOpts};
use hilb3::lattice::{parse_ideal, Exp3, Staircase2, Staircase3};
use hilb3::num::binom;
use hilb3::{enumerate, hom2d, tangent3d};

fn stair2(text: &str) -> Staircase2 {
    parse_ideal(text).unwrap().to_staircase2().unwrap()
}

fn stair3(text: &str) -> Staircase3 {
    parse_ideal(text).unwrap().to_staircase3().unwrap()
}

/// Criterion 1: the maximum-singularity verification at tetrahedral
/// colengths, k = 1..=4: unique maximizer, exact tangent values.
#[test]
fn acceptance_1_maximum_singularity_small_k() {
    let expected = [
        (1usize, 1usize, 3i64),
        (2, 4, 18),
        (3, 10, 60),
        (4, 20, 150),
    ];
    for (k, l, t) in expected {
        let report = bounds::conjecture_check(k, &ScanOpts::default()).unwrap();
        assert!(report.passed(), "k={k}: {:?}", report.violations);
        assert_eq!(report.colength, Some(l as i64));
        assert_eq!(report.max_tangent, Some(t));
        assert_eq!(
            report.maximizers,
            vec![Staircase3::power_ideal(k).unwrap().render()]
        );
    }
    println!(
        "ACCEPTANCE 1 PASS: unique maximizers at k=1..4 with T = 3, 18, 60, 150 \
         at colengths 1, 4, 10, 20"
    );
}

/// Criterion 1, stretch: k = 5 at colength 35 with T = 315.
#[test]
fn acceptance_1_stretch_k5() {
    let report = bounds::conjecture_check(5, &ScanOpts::default()).unwrap();
    assert!(report.passed(), "{:?}", report.violations);
    assert_eq!(report.max_tangent, Some(315));
    assert_eq!(report.ideals_scanned, enumerate::count_borel3(35));
    assert_eq!(
        report.maximizers,
        vec![Staircase3::power_ideal(5).unwrap().render()]
    );
    println!(
        "ACCEPTANCE 1 (stretch) PASS: k=5 unique maximizer with T = 315 over {} ideals",
        report.ideals_scanned
    );
}

/// Criterion 2: for every colength up to 20, every Borel-fixed ideal
/// satisfies T <= psi(m1) and the full chain T <= b1 <= b2 <= b3.
#[test]
fn acceptance_2_upper_bound_all_colengths_to_20() {
    let mut scanned = 0;
    for l in 1..=20 {
        let report = bounds::upper_bound_check(l, &ScanOpts::default()).unwrap();
        assert!(report.passed(), "l={l}: {:?}", report.violations);
        scanned += report.ideals_scanned;
    }
    println!(
        "ACCEPTANCE 2 PASS: T <= psi(m1) and T <= b1 <= b2 <= b3 over {scanned} \
         Borel-fixed ideals, colengths 1..=20, zero violations"
    );
}

/// Criterion 3: the 2-variable identity hom = l + l' - #ghosts and the
/// cardinality claims |A_p| = l', |B_n| = l, plus t <= #ghosts, over all
/// ordered pairs with colengths <= 8 and ten thousand random pairs with
/// colengths <= 25.
#[test]
fn acceptance_3_two_variable_identity() {
    fn assert_pair(j: &Staircase2, jp: &Staircase2) {
        let summary = hom2d::hom_summary(j, jp);
        let l = j.colength() as i64;
        let lp = jp.colength() as i64;
        let ghosts = summary.ghosts.len() as i64;
        assert_eq!(
            summary.hom_by_components,
            l + lp - ghosts,
            "identity fails for J={} J'={}",
            j.render(),
            jp.render()
        );
        assert_eq!(summary.ap as i64, lp, "J={} J'={}", j.render(), jp.render());
        assert_eq!(summary.bn as i64, l, "J={} J'={}", j.render(), jp.render());
        assert!(
            hom2d::t_statistic(j, jp) <= ghosts,
            "t exceeds ghosts for J={} J'={}",
            j.render(),
            jp.render()
        );
    }

    let small = support::all_staircases2_up_to(8);
    for j in &small {
        for jp in &small {
            assert_pair(j, jp);
        }
    }
    let exhaustive_pairs = small.len() * small.len();

    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..10_000 {
        let j = support::random_staircase2(&mut rng, 25);
        let jp = support::random_staircase2(&mut rng, 25);
        assert_pair(&j, &jp);
    }

    println!(
        "ACCEPTANCE 3 PASS: hom = l + l' - #ghosts, |A_p| = l', |B_n| = l, t <= #ghosts \
         over {exhaustive_pairs} exhaustive pairs (colengths <= 8) and 10000 random pairs \
         (colengths <= 25)"
    );
}

/// Criterion 4: the documented worked examples, bit-exact.
#[test]
fn acceptance_4_worked_examples() {
    // Short pair: height 1, t = 3, three ghosts.
    let j = stair2("y^2,z^3,yz^2");
    let jp = stair2("y,z");
    assert_eq!(jp.height(), 1);
    assert_eq!(hom2d::t_statistic(&j, &jp), 3);
    let ghosts: BTreeSet<(i64, i64)> = hom2d::ghost_vectors(&j, &jp)
        .into_iter()
        .map(|s| (s.y, s.z))
        .collect();
    let expected: BTreeSet<(i64, i64)> = [(-1, -2), (-2, -1), (-1, -1)].into_iter().collect();
    assert_eq!(ghosts, expected);

    // Tall pair: height 4, t = 3 but four ghosts including (-1,-3).
    let j = stair2("y^4,z^6,y^3z,y^2z^3,yz^5");
    let jp = stair2("y^2,z^4,yz^2");
    assert_eq!(jp.height(), 4);
    assert_eq!(hom2d::t_statistic(&j, &jp), 3);
    let ghosts: BTreeSet<(i64, i64)> = hom2d::ghost_vectors(&j, &jp)
        .into_iter()
        .map(|s| (s.y, s.z))
        .collect();
    let expected: BTreeSet<(i64, i64)> = [(-1, -1), (-1, -2), (-2, -1), (-1, -3)]
        .into_iter()
        .collect();
    assert_eq!(ghosts, expected);

    // Slice decompositions of the two running ideals.
    let s = stair3("x^2,y^2,z^3,xz,yz^2,xy");
    let slices: Vec<String> = s.decompose().iter().map(|d| d.render()).collect();
    assert_eq!(slices, ["y^2,yz^2,z^3", "y,z", "1"]);

    let s = stair3("x^3,y^4,z^6,y^3z,y^2z^3,yz^5,xy^2,xz^4,xyz^2,x^2y,x^2z");
    let slices: Vec<String> = s.decompose().iter().map(|d| d.render()).collect();
    assert_eq!(
        slices,
        ["y^4,y^3z,y^2z^3,yz^5,z^6", "y^2,yz^2,z^4", "y,z", "1"]
    );

    println!(
        "ACCEPTANCE 4 PASS: worked ghost sets {{(-1,-2),(-2,-1),(-1,-1)}} and \
         {{(-1,-1),(-1,-2),(-2,-1),(-1,-3)}}, heights 1 and 4, t = 3 both, and both \
         slice decompositions reproduced exactly"
    );
}

/// Criterion 5: smoothness in two variables: hom(J, S/J) = 2l for every
/// staircase with colength <= 10 on all three routes, and the 3-variable
/// oracle agrees on plane-embedded ideals (the cross matrix reproduces the
/// 2-variable value and T = 3l, the smooth-point dimension).
#[test]
fn acceptance_5_two_variable_smoothness() {
    let mut checked = 0;
    for l in 0..=10 {
        for rows in support::all_partitions(l) {
            let j = Staircase2::from_rows(rows);
            let expected = 2 * l as i64;
            assert_eq!(
                hom2d::hom2_by_components(&j, &j),
                expected,
                "{}",
                j.render()
            );
            assert_eq!(hom2d::hom2_by_formula(&j, &j), expected, "{}", j.render());
            assert_eq!(hom2d::hom2_by_syzygy(&j, &j), expected, "{}", j.render());

            if l > 0 {
                // Embed as x + J inside three variables.
                let mut gens3 = vec![Exp3::new(1, 0, 0)];
                for g in j.minimal_generators().gens() {
                    gens3.push(Exp3::new(0, g.y, g.z));
                }
                let (set, _) = hilb3::lattice::GeneratorSet3::minimalize(gens3);
                let embedded = Staircase3::from_generators(&set);
                assert_eq!(embedded.colength(), l);
                let cross = tangent3d::cross_homs(&embedded);
                assert_eq!(cross.entries[0][0], expected, "{}", embedded.render());
                assert_eq!(
                    tangent3d::tangent_dimension(&embedded),
                    3 * l as i64,
                    "{}",
                    embedded.render()
                );
            }
            checked += 1;
        }
    }
    println!(
        "ACCEPTANCE 5 PASS: hom(J, S/J) = 2l on three routes and embedded T = 3l \
         across {checked} staircases with colength <= 10, zero violations"
    );
}

/// Criterion 6: psi identities: the closed form at tetrahedral colengths
/// for k <= 50, strict monotonicity for k <= 60 over every delta, and the
/// two forms of the budget identity for m1 <= 50. All exact.
#[test]
fn acceptance_6_psi_identities() {
    for k in 1..=50i64 {
        let ctx = PsiContext::for_colength(binom(k + 2, 3)).unwrap();
        assert_eq!(
            bounds::psi(&ctx, k).unwrap(),
            binom(k + 2, 2) * binom(k + 1, 2),
            "k={k}"
        );
    }
    let report = bounds::psi_monotonicity_check(60).unwrap();
    assert!(report.passed(), "{:?}", report.violations);
    for m1 in 1..=50usize {
        // Both forms are computed and compared inside.
        tangent3d::zero_vector_budget(m1);
    }
    println!(
        "ACCEPTANCE 6 PASS: psi closed form to k = 50, strict monotonicity over \
         {} contexts to k = 60, budget identity to m1 = 50, all exact",
        report.ideals_scanned
    );
}

/// Criterion 7: enumeration soundness and completeness: agreement with the
/// raw order-ideal oracle for colengths <= 10 (counts 1, 1, 2, 3 at 1..=4),
/// soundness to 15, and m1 <= k to 20.
#[test]
fn acceptance_7_enumeration() {
    for l in 1..=10 {
        let expected: BTreeSet<String> = support::all_order_ideals3(l)
            .into_iter()
            .filter(|points| support::point_set_is_borel_closed(points))
            .map(|points| {
                Staircase3::from_complement_points(&points)
                    .unwrap()
                    .render()
            })
            .collect();
        let got: BTreeSet<String> = enumerate::enum_borel3(l)
            .iter()
            .map(|s| s.render())
            .collect();
        assert_eq!(got, expected, "l={l}");
        assert_eq!(enumerate::count_borel3(l), expected.len() as u64, "l={l}");
    }
    assert_eq!(enumerate::count_borel3(1), 1);
    assert_eq!(enumerate::count_borel3(2), 1);
    assert_eq!(enumerate::count_borel3(3), 2);
    assert_eq!(enumerate::count_borel3(4), 3);

    for l in 1..=15 {
        for s in enumerate::stream_borel3(l) {
            assert!(s.is_borel(), "unsound at l={l}: {}", s.render());
        }
    }

    for l in 1..=20 {
        let report = bounds::min_pure_exponent_check(l, &ScanOpts::default()).unwrap();
        assert!(report.passed(), "l={l}: {:?}", report.violations);
    }

    println!(
        "ACCEPTANCE 7 PASS: enumeration matches the order-ideal oracle to colength 10 \
         (counts 1, 1, 2, 3 at 1..=4), all output Borel-fixed to 15, m1 <= k to 20"
    );
}

/// Criterion 8: the component-counting tangent oracle equals the dense
/// elimination route degree by degree on 200 random Borel-fixed ideals
/// with colength <= 12, and T is invariant under all six coordinate
/// permutations for colengths <= 8.
#[test]
fn acceptance_8_oracle_cross_validation() {
    let mut rng = StdRng::seed_from_u64(88);
    let pools: Vec<Vec<Staircase3>> = (1..=12).map(enumerate::enum_borel3).collect();
    for _ in 0..200 {
        let pool = &pools[rng.random_range(0..pools.len())];
        let ideal = &pool[rng.random_range(0..pool.len())];
        for shift in tangent3d::candidate_shifts(ideal) {
            assert_eq!(
                tangent3d::graded_tangent_piece(ideal, shift),
                tangent3d::graded_piece_by_elimination(ideal, shift),
                "{} at {shift}",
                ideal.render()
            );
        }
        assert_eq!(
            tangent3d::tangent_dimension(ideal),
            tangent3d::tangent_dimension_by_elimination(ideal),
            "{}",
            ideal.render()
        );
    }

    let mut permuted_checked = 0;
    for l in 1..=8 {
        for ideal in enumerate::stream_borel3(l) {
            let t = tangent3d::tangent_dimension(&ideal);
            for perm in support::permutations() {
                let points: Vec<Exp3> = ideal.complement_points().iter().map(perm).collect();
                let permuted = Staircase3::from_complement_points(&points)
                    .expect("permuted complement stays downward closed");
                assert_eq!(
                    tangent3d::tangent_dimension(&permuted),
                    t,
                    "{} under permutation",
                    ideal.render()
                );
                permuted_checked += 1;
            }
        }
    }

    println!(
        "ACCEPTANCE 8 PASS: graph oracle equals elimination on 200 random ideals \
         (every graded piece), tangent invariant under {permuted_checked} coordinate \
         permutations"
    );
}
