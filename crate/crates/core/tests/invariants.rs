//! Structural identities tying the invariants together, checked exactly
//! over exhaustive corpora and classic families.

mod common;

use common::{cycle, path, star};
use drd_core::invariants::{
    degree_distance, degree_resistance_distance, dr_via_cut_decomposition, kirchhoff_index, wiener,
};
use drd_core::{enumerate_cacti, invariant_report, Graph, Rational};

fn every_cactus_up_to(n_max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for t in 0..=(n - 1) / 2 {
            out.extend(enumerate_cacti(n, t).unwrap().graphs().cloned());
        }
    }
    out
}

#[test]
fn row_sums_tie_back_to_the_global_invariants() {
    for g in every_cactus_up_to(9) {
        let report = invariant_report(&g).unwrap();
        let kf_total: Rational = report.per_vertex.iter().map(|p| p.kf_v.clone()).sum();
        let dv_total: Rational = report.per_vertex.iter().map(|p| p.d_v.clone()).sum();
        let weighted: Rational = report
            .per_vertex
            .iter()
            .map(|p| Rational::from_integer(g.degree(p.vertex) as i64) * &p.kf_v)
            .sum();
        // Each pair is counted from both endpoints.
        assert_eq!(kf_total, Rational::from_integer(2) * &report.kirchhoff);
        assert_eq!(dv_total, report.degree_resistance);
        assert_eq!(weighted, report.degree_resistance);
    }
}

/// Connected components of g − v, as vertex lists.
fn components_without(g: &Graph, v: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                    queue.push(y);
                }
            }
        }
        comps.push(comp);
    }
    comps
}

#[test]
fn cut_decomposition_holds_for_every_split_choice() {
    for g in every_cactus_up_to(7) {
        let n = g.vertex_count();
        if n < 3 {
            continue;
        }
        let direct = degree_resistance_distance(&g).unwrap();
        for v in 0..n {
            let comps = components_without(&g, v);
            if comps.len() < 2 {
                continue;
            }
            // Any union of components is a legitimate half; the empty and
            // full unions degenerate to the single-vertex split.
            for mask in 0..(1u32 << comps.len()) {
                let mut side: Vec<usize> = Vec::new();
                for (i, comp) in comps.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        side.extend(comp.iter().copied());
                    }
                }
                assert_eq!(
                    dr_via_cut_decomposition(&g, v, &side).unwrap(),
                    direct,
                    "split at {v} with side {side:?}"
                );
            }
        }
    }
}

#[test]
fn trees_collapse_to_the_shortest_path_invariants() {
    for g in (2..=9).flat_map(|n| {
        enumerate_cacti(n, 0)
            .unwrap()
            .graphs()
            .cloned()
            .collect::<Vec<_>>()
    }) {
        assert_eq!(kirchhoff_index(&g).unwrap(), wiener(&g).unwrap());
        assert_eq!(
            degree_resistance_distance(&g).unwrap(),
            degree_distance(&g).unwrap()
        );
    }
}

#[test]
fn cycles_are_two_regular_so_degree_weighting_is_a_factor_of_four() {
    for n in 3..=12 {
        let g = cycle(n);
        let kf = kirchhoff_index(&g).unwrap();
        assert_eq!(
            degree_resistance_distance(&g).unwrap(),
            Rational::from_integer(4) * kf
        );
    }
}

#[test]
fn known_closed_forms_for_paths_stars_and_cycles() {
    for n in 2..=8i64 {
        let p = path(n as usize);
        // Σ_{i<j} (j−i) = C(n+1, 3).
        assert_eq!(
            wiener(&p).unwrap(),
            Rational::from_integer(n * (n * n - 1) / 6)
        );
        let s = star(n as usize);
        assert_eq!(
            wiener(&s).unwrap(),
            Rational::from_integer((n - 1) * (n - 1))
        );
        assert_eq!(
            degree_distance(&s).unwrap(),
            Rational::from_integer((n - 1) * (3 * n - 4))
        );
    }
    for k in 3..=10i64 {
        let c = cycle(k as usize);
        assert_eq!(
            kirchhoff_index(&c).unwrap(),
            Rational::ratio(k * k * k - k, 12)
        );
    }
    let lone = Graph::from_edges(1, &[]).unwrap();
    assert!(kirchhoff_index(&lone).unwrap().is_zero());
}

#[test]
fn report_serialization_is_stable_and_exact() {
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
    let report = invariant_report(&g).unwrap();
    assert_eq!(report.degree_resistance, Rational::ratio(128, 3));
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["degree_resistance"], "128/3");
    // Integer-valued invariants serialize without a denominator.
    assert_eq!(json["wiener"], "14");
    assert_eq!(json["per_vertex"][0]["vertex"], 0);
    let back: drd_core::InvariantReport = serde_json::from_value(json).unwrap();
    assert_eq!(back, report);
}
