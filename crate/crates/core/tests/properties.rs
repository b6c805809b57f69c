use bidouble::classifier::{in_t1, in_t2, ReasonKind};
use bidouble::geometry::enumerate_triples;
use bidouble::query::{render_json_lines, to_json};
use bidouble::{
    brute_force_search, check_numerical_ulrich, classify, invariants, line_bundle_status,
    odd_rank_obstruction, p1xp1_line_search, preset_lattice, rank1_rho1_search,
    special_rank2_recipe, special_ulrich_targets, ulrich_complexity, validate_triple,
    verify_recipe, BranchTriple, ComplexityKind, DivisorClass, FeasibilityStatus,
    IntersectionLattice, LineBundleAvailability, Preset, QueryResult, RationalClass,
    UlrichCandidate,
};
use num_rational::Ratio;
use proptest::prelude::*;

fn preset_strategy() -> impl Strategy<Value = Preset> {
    prop_oneof![
        Just(Preset::P1xP1),
        (1u32..=9).prop_map(Preset::DelPezzo),
        Just(Preset::K3_024),
        (0i64..12, 0i64..12, 0i64..12).prop_filter_map("valid even triple", |(a, b, c)| {
            validate_triple(2 * a, 2 * b, 2 * c)
                .ok()
                .map(Preset::Rank1Bidouble)
        }),
    ]
}

fn class(rank: usize) -> impl Strategy<Value = DivisorClass> {
    prop::collection::vec(-500i64..500, rank).prop_map(DivisorClass::new)
}

fn lattice_with_classes() -> impl Strategy<
    Value = (
        IntersectionLattice,
        DivisorClass,
        DivisorClass,
        DivisorClass,
    ),
> {
    preset_strategy().prop_flat_map(|p| {
        let lat = preset_lattice(p).unwrap();
        let r = lat.rank();
        (Just(lat), class(r), class(r), class(r))
    })
}

fn any_triple() -> impl Strategy<Value = [i64; 3]> {
    prop_oneof![
        (0i64..30, 0i64..30, 0i64..30).prop_map(|(a, b, c)| [2 * a, 2 * b, 2 * c]),
        (0i64..30, 0i64..30, 0i64..30).prop_map(|(a, b, c)| [2 * a + 1, 2 * b + 1, 2 * c + 1]),
    ]
    .prop_filter("connected", |t| validate_triple(t[0], t[1], t[2]).is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn pairing_is_bilinear((lat, d1, d2, d3) in lattice_with_classes(), a in -40i64..40, b in -40i64..40) {
        let combo = d1.checked_scale(a).unwrap().checked_add(&d2.checked_scale(b).unwrap()).unwrap();
        prop_assert_eq!(
            lat.pair(&combo, &d3).unwrap(),
            a * lat.pair(&d1, &d3).unwrap() + b * lat.pair(&d2, &d3).unwrap()
        );
    }

    #[test]
    fn pairing_is_symmetric((lat, d1, d2, _) in lattice_with_classes()) {
        prop_assert_eq!(lat.pair(&d1, &d2).unwrap(), lat.pair(&d2, &d1).unwrap());
    }

    #[test]
    fn zero_class_has_genus_one(p in preset_strategy()) {
        let lat = preset_lattice(p).unwrap();
        prop_assert_eq!(lat.arithmetic_genus(&DivisorClass::zero(lat.rank())).unwrap(), Ratio::from_integer(1));
    }

    #[test]
    fn invariants_ignore_input_order(t in any_triple(), perm in 0usize..6) {
        let [a, b, c] = t;
        let p = [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]][perm];
        let s1 = validate_triple(a, b, c).unwrap();
        let s2 = validate_triple(p[0], p[1], p[2]).unwrap();
        prop_assert_eq!(s1, s2);
        prop_assert_eq!(invariants(&s1), invariants(&s2));
    }

    #[test]
    fn json_round_trip_is_idempotent(t in any_triple()) {
        let q = classify(&validate_triple(t[0], t[1], t[2]).unwrap()).unwrap();
        let first = to_json(&q, true).unwrap();
        let back: QueryResult = serde_json::from_str(&first).unwrap();
        prop_assert_eq!(&back, &q);
        prop_assert_eq!(to_json(&back, true).unwrap(), first);
        let line = render_json_lines(std::slice::from_ref(&q)).unwrap();
        let back: QueryResult = serde_json::from_str(line.trim_end()).unwrap();
        prop_assert_eq!(back, q);
    }

    /// Adding a kernel vector of the Gram form changes no pairing, so the
    /// Chern equalities cannot notice it.
    #[test]
    fn ulrich_check_sees_numerical_classes_only(
        x in -20i64..20, y in -20i64..20, kernel in -50i64..50, c2 in -40i64..40, rank in 1u32..4
    ) {
        // P1×P1 with a third, numerically trivial generator.
        let lat = IntersectionLattice::new(
            "p1xp1+kernel",
            vec!["F1".into(), "F2".into(), "T".into()],
            vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]],
            DivisorClass::new(vec![1, 1, 0]),
            DivisorClass::new(vec![-2, -2, 0]),
            Some(1),
        ).unwrap();
        let base = DivisorClass::new(vec![x, y, 0]);
        let moved = DivisorClass::new(vec![x, y, kernel]);
        let mk = |d: DivisorClass| {
            let c2 = if rank == 1 { 0 } else { c2 };
            UlrichCandidate::new(RationalClass::new(d, 1).unwrap(), c2, rank).unwrap()
        };
        prop_assert_eq!(
            check_numerical_ulrich(&lat, &mk(base), None).unwrap(),
            check_numerical_ulrich(&lat, &mk(moved), None).unwrap()
        );
    }

    #[test]
    fn delpezzo_search_is_symmetric_in_exceptional_curves(
        d in 3u32..=7, i in 0usize..6, j in 0usize..6, degree in 1i64..5, selfint in -1i64..3
    ) {
        let lat = preset_lattice(Preset::DelPezzo(d)).unwrap();
        let points = 9 - d as usize;
        let (i, j) = (1 + i % points, 1 + j % points);
        let found = brute_force_search(&lat, 2, degree, selfint).unwrap();
        let mut swapped: Vec<DivisorClass> = found
            .iter()
            .map(|c| {
                let mut v = c.0.clone();
                v.swap(i, j);
                DivisorClass::new(v)
            })
            .collect();
        swapped.sort();
        prop_assert_eq!(swapped, found);
    }
}

#[test]
fn picard_cross_check_is_consistent_to_40() {
    for t in enumerate_triples(40) {
        let q = classify(&t).unwrap();
        assert_eq!(q.picard.rho_is_one, q.picard.witnesses.is_empty(), "{t}");
    }
}

#[test]
fn degree_equation_gives_total_branch_degree() {
    for t in enumerate_triples(40)
        .into_iter()
        .filter(BranchTriple::is_even)
    {
        let inv = invariants(&t);
        let three_h_k_dot_h = 3 * inv.h_squared + inv.h_dot_k;
        assert_eq!(three_h_k_dot_h % 2, 0, "{t}");
        assert_eq!(three_h_k_dot_h / 2, t.sum(), "{t}");
    }
}

#[test]
fn special_targets_match_m_to_60() {
    for t in enumerate_triples(60)
        .into_iter()
        .filter(BranchTriple::is_even)
    {
        let [a, b, c] = t.degrees().map(|x| x / 2);
        let m = a + b + c;
        let targets = special_ulrich_targets(&t).unwrap();
        assert_eq!(targets.c2, m * m + a * a + b * b + c * c, "{t}");
        assert_eq!(targets.c1_coefficient, m, "{t}");
    }
}

#[test]
fn recipe_degree_positivity_and_equality_case() {
    for t in enumerate_triples(60)
        .into_iter()
        .filter(BranchTriple::is_even)
    {
        if t.degrees() == [0, 2, 2] {
            continue;
        }
        let r = special_rank2_recipe(&t).unwrap();
        assert!(r.deg_c_prime >= 1, "{t}");
        assert_eq!(r.deg_c_prime == 1, r.deg_c == r.m, "{t}");
        match r.residue {
            0 => assert_eq!(4 * r.deg_c, r.big_m, "{t}"),
            2 => assert_eq!(4 * (r.deg_c - 1) + 2, r.big_m, "{t}"),
            other => panic!("{t}: residue {other}"),
        }
    }
}

#[test]
fn consistency_triangle_to_40() {
    for t in enumerate_triples(40) {
        let lb = line_bundle_status(&t).unwrap();
        let uc = ulrich_complexity(&t).unwrap();
        if lb.status == LineBundleAvailability::Exists {
            assert_eq!((uc.kind, uc.value), (ComplexityKind::Exact, Some(1)), "{t}");
            assert!(in_t2(&t), "{t}");
        }
        if lb.status == LineBundleAvailability::Impossible && t.is_even() {
            assert!(uc.lower() >= 2, "{t}");
        }
        if lb.status == LineBundleAvailability::Open {
            assert!(in_t1(&t), "{t}");
        }
        if t.is_even() && t.sum() / 2 >= 3 {
            let r = special_rank2_recipe(&t).unwrap();
            verify_recipe(&t, &r).unwrap();
            assert!(uc.upper().is_some_and(|u| u <= 2), "{t}");
        }
    }
}

#[test]
fn impossible_verdicts_are_reproduced_by_the_cited_argument() {
    for t in enumerate_triples(40) {
        let lb = line_bundle_status(&t).unwrap();
        if lb.status != LineBundleAvailability::Impossible {
            continue;
        }
        let v = match lb.reason.kind {
            ReasonKind::OddRankParity => odd_rank_obstruction(&t, 1).unwrap(),
            ReasonKind::PicardOneElimination => rank1_rho1_search(&t).unwrap(),
            ReasonKind::QuadricDiscriminant => p1xp1_line_search(t.n3() / 2, None).unwrap(),
            other => panic!("{t}: impossible with reason {other:?}"),
        };
        assert!(v.is_infeasible(), "{t}");
        if lb.reason.kind == ReasonKind::OddRankParity {
            assert_eq!(v.status, FeasibilityStatus::InfeasibleParity);
        }
    }
}

#[test]
fn exists_only_on_certified_cases() {
    let exists: Vec<[i64; 3]> = enumerate_triples(40)
        .into_iter()
        .filter(|t| line_bundle_status(t).unwrap().status == LineBundleAvailability::Exists)
        .map(|t| t.degrees())
        .collect();
    assert_eq!(exists, vec![[0, 2, 2], [0, 2, 4]]);
}

#[test]
fn k3_024_gram_numbers() {
    let lat = preset_lattice(Preset::K3_024).unwrap();
    let h = &lat.h;
    assert_eq!(lat.pair(h, h).unwrap(), 4);
    for label in ["G1", "G2", "E1'", "E2'"] {
        let c = lat.class_of(label).unwrap();
        assert_eq!(lat.pair(h, &c).unwrap(), 2, "{label}");
    }
}
