//! Every closed form and gap polynomial is re-derived here by direct exact
//! computation on the constructed graphs.

use drd_core::families::{
    build_cycle_pendant, build_g0, build_g10, build_g3, build_g4, build_g5, build_g8,
    cycle_vs_pendant_gap, end_cycle_shrink_gap, find_end_cycles, g10_g5_gap, g3_g0_gap, g4_g0_gap,
    g5_g0_gap, g8_g0_gap, sigma_eligible, sigma_transform,
};
use drd_core::invariants::{d_v, degree_resistance_distance, kf_v, kirchhoff_index};
use drd_core::{
    cactus_check, closed_forms_cycle, closed_forms_cycle_pendant, corollary_closed_forms,
    enumerate_cacti, g0_closed_form, lemma7_transform, FamilyId, Graph, Rational,
};

fn dr(g: &Graph) -> Rational {
    degree_resistance_distance(g).unwrap()
}

type Builder = fn(usize, usize) -> Result<Graph, drd_core::FamilyError>;

const BUILDERS: [(&str, Builder, usize); 6] = [
    ("g0", build_g0, 0),
    ("g3", build_g3, 1),
    ("g4", build_g4, 1),
    ("g5", build_g5, 1),
    ("g8", build_g8, 2),
    ("g10", build_g10, 1),
];

#[test]
fn constructed_families_are_cacti_with_the_right_parameters() {
    for (name, build, t_min) in BUILDERS {
        let mut feasible = 0;
        for n in 3..=12 {
            for t in t_min..=5 {
                let Ok(g) = build(n, t) else { continue };
                feasible += 1;
                assert_eq!(g.vertex_count(), n, "{name}({n},{t})");
                assert_eq!(g.edge_count(), n - 1 + t, "{name}({n},{t})");
                assert_eq!(cactus_check(&g).unwrap(), t, "{name}({n},{t})");
            }
        }
        assert!(feasible >= 10, "{name} never became feasible");
    }
}

#[test]
fn hub_closed_form_matches_direct_computation() {
    for n in 3..=12 {
        for t in 0..=(n - 1) / 2 {
            let g = build_g0(n, t).unwrap();
            assert_eq!(g0_closed_form(n, t).unwrap(), dr(&g), "({n},{t})");
        }
    }
}

#[test]
fn hub_closed_form_specializes_to_the_star_at_t_zero() {
    for n in 2..=10i64 {
        // (n−1)(3n−4) is the star value.
        assert_eq!(
            g0_closed_form(n as usize, 0).unwrap(),
            Rational::from_integer((n - 1) * (3 * n - 4))
        );
    }
}

#[test]
fn second_and_third_place_closed_forms_match_their_graphs() {
    for n in 4..=12 {
        for t in 1..=(n - 1) / 2 {
            if let Ok(g5) = build_g5(n, t) {
                let form = corollary_closed_forms(FamilyId::G5, n, t).unwrap();
                assert_eq!(form, dr(&g5), "g5 ({n},{t})");
            }
            if let Ok(g4) = build_g4(n, t) {
                let form = corollary_closed_forms(FamilyId::G4, n, t).unwrap();
                assert_eq!(form, dr(&g4), "g4 ({n},{t})");
            }
        }
    }
}

#[test]
fn gap_polynomials_equal_direct_differences() {
    for n in 5..=12 {
        for t in 1..=(n - 1) / 2 {
            let g0 = dr(&build_g0(n, t).unwrap());
            if let Ok(g) = build_g3(n, t) {
                assert_eq!(g3_g0_gap(n, t), dr(&g) - &g0, "g3 ({n},{t})");
            }
            if let Ok(g) = build_g4(n, t) {
                assert_eq!(g4_g0_gap(n, t), dr(&g) - &g0, "g4 ({n},{t})");
            }
            if let Ok(g) = build_g5(n, t) {
                assert_eq!(g5_g0_gap(n, t), dr(&g) - &g0, "g5 ({n},{t})");
                if let Ok(h) = build_g10(n, t) {
                    assert_eq!(g10_g5_gap(n, t), dr(&h) - dr(&g), "g10 ({n},{t})");
                }
            }
            if let Ok(g) = build_g8(n, t) {
                assert_eq!(g8_g0_gap(n, t), dr(&g) - &g0, "g8 ({n},{t})");
            }
        }
    }
}

#[test]
fn cycle_forms_match_direct_computation() {
    for k in 3..=12 {
        let g =
            drd_core::Graph::from_edges(k, &(0..k).map(|i| (i, (i + 1) % k)).collect::<Vec<_>>())
                .unwrap();
        let forms = closed_forms_cycle(k).unwrap();
        assert_eq!(forms.kf, kirchhoff_index(&g).unwrap());
        assert_eq!(forms.degree_resistance, dr(&g));
        assert_eq!(forms.kf_v, kf_v(&g, 0).unwrap());
        assert_eq!(forms.d_v, d_v(&g, 0).unwrap());
    }
}

#[test]
fn cycle_pendant_forms_match_direct_computation() {
    for h in 4..=12 {
        let g = build_cycle_pendant(h).unwrap();
        let forms = closed_forms_cycle_pendant(h).unwrap();
        assert_eq!(forms.degree_resistance, dr(&g), "h = {h}");
        assert_eq!(forms.kf_u, kf_v(&g, 0).unwrap(), "h = {h}");
        assert_eq!(forms.d_u, d_v(&g, 0).unwrap(), "h = {h}");
        // The gap against the plain cycle on the same vertex count.
        let cycle_forms = closed_forms_cycle(h).unwrap();
        assert_eq!(
            cycle_vs_pendant_gap(h).unwrap(),
            cycle_forms.degree_resistance - forms.degree_resistance
        );
    }
}

#[test]
fn end_cycle_shrink_gap_matches_direct_difference_over_a_corpus() {
    let mut exercised = 0;
    for n in 6..=8 {
        for t in 2..=(n - 1) / 2 {
            for g in enumerate_cacti(n, t).unwrap().graphs() {
                let Ok(cycles) = find_end_cycles(g) else {
                    continue;
                };
                for c in cycles {
                    let h = c.cycle_vertices.len();
                    if h < 4 {
                        continue;
                    }
                    let shrunk = lemma7_transform(g, &c).unwrap();
                    assert_eq!(cactus_check(&shrunk).unwrap(), t);
                    assert_eq!(end_cycle_shrink_gap(n, t, h), dr(g) - dr(&shrunk));
                    exercised += 1;
                }
            }
        }
    }
    assert!(exercised > 5, "corpus produced too few end cycles");
}

#[test]
fn pendant_migration_never_increases_the_invariant() {
    for n in 4..=7 {
        for t in 0..=(n - 1) / 2 {
            for g in enumerate_cacti(n, t).unwrap().graphs() {
                for v in 0..n {
                    if !sigma_eligible(g, v) {
                        continue;
                    }
                    let moved = sigma_transform(g, v).unwrap();
                    assert!(
                        dr(&moved) <= dr(g),
                        "migration increased the value at vertex {v} of an ({n},{t}) cactus"
                    );
                }
            }
        }
    }
}
