//! Constructors for the extremal cactus families, their closed-form
//! evaluators, and the two D_R-monotone graph transforms.
//!
//! Layout convention for every (n, t) constructor: the hub is vertex 0;
//! triangles come first (vertices 1+2i, 2+2i), then any larger cycle, then
//! pendant vertices, so each family has one reproducible labeling.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::blocks::{block_decomposition, cactus_check, CactusParams, StructureError};
use crate::graph::Graph;
use crate::rational::Rational;

/// The named families. G8 and G10 are reconstructions from difference
/// arithmetic rather than pictures, so they stay flagged as inferred
/// wherever they are reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    G0,
    G3,
    G4,
    G5,
    G8,
    G10,
    CyclePendant,
}

impl FamilyId {
    pub fn is_inferred(self) -> bool {
        matches!(self, FamilyId::G8 | FamilyId::G10)
    }

    pub fn label(self) -> &'static str {
        match self {
            FamilyId::G0 => "g0",
            FamilyId::G3 => "g3",
            FamilyId::G4 => "g4",
            FamilyId::G5 => "g5",
            FamilyId::G8 => "g8 (inferred)",
            FamilyId::G10 => "g10 (inferred)",
            FamilyId::CyclePendant => "cycle-pendant",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for FamilyId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("{family} is not constructible at n = {n}, t = {t}")]
    InfeasibleParams {
        family: FamilyId,
        n: usize,
        t: usize,
    },
    #[error("cycle-with-pendant fragment needs h >= 4, got {h}")]
    FragmentTooSmall { h: usize },
    #[error("cycle closed forms need k >= 3, got {k}")]
    CycleTooSmall { k: usize },
    #[error("no corollary closed form for family {family}")]
    NoClosedForm { family: FamilyId },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {vertex} has no pendant neighbor to move")]
    NoPendantNeighbors { vertex: usize },
    #[error("vertex {vertex} has {count} non-pendant neighbors, need at most one")]
    MultipleNonPendantNeighbors { vertex: usize, count: usize },
    #[error("end cycles require at least 2 cycles, got t = {t}")]
    NeedsTwoCycles { t: usize },
    #[error("not a valid end cycle: {detail}")]
    NotEndCycle { detail: String },
    #[error("a 3-cycle cannot be shrunk further")]
    CycleTooShort,
    #[error(transparent)]
    Structure(#[from] StructureError),
}

fn rational(num: i64, den: i64) -> Rational {
    Rational::ratio(num, den)
}

fn attach_triangles(g: &mut Graph, t: usize) {
    for i in 0..t {
        let (a, b) = (1 + 2 * i, 2 + 2 * i);
        g.add_edge(0, a).unwrap();
        g.add_edge(0, b).unwrap();
        g.add_edge(a, b).unwrap();
    }
}

fn attach_pendants(g: &mut Graph, hub: usize, from: usize, n: usize) {
    for p in from..n {
        g.add_edge(hub, p).unwrap();
    }
}

/// Hub with t triangles and n−2t−1 pendant edges.
pub fn build_g0(n: usize, t: usize) -> Result<Graph, FamilyError> {
    CactusParams::new(n, t).map_err(|_| FamilyError::InfeasibleParams {
        family: FamilyId::G0,
        n,
        t,
    })?;
    let mut g = Graph::new(n);
    attach_triangles(&mut g, t);
    attach_pendants(&mut g, 0, 2 * t + 1, n);
    Ok(g)
}

/// Hub with t triangles, n−2t−3 pendants, and one pendant path of length 2.
pub fn build_g3(n: usize, t: usize) -> Result<Graph, FamilyError> {
    if n < 2 * t + 3 {
        return Err(FamilyError::InfeasibleParams {
            family: FamilyId::G3,
            n,
            t,
        });
    }
    let mut g = Graph::new(n);
    attach_triangles(&mut g, t);
    g.add_edge(0, 2 * t + 1).unwrap();
    g.add_edge(2 * t + 1, 2 * t + 2).unwrap();
    attach_pendants(&mut g, 0, 2 * t + 3, n);
    Ok(g)
}

/// build_g0(n−1, t) plus a pendant at a degree-2 triangle vertex.
pub fn build_g4(n: usize, t: usize) -> Result<Graph, FamilyError> {
    if t < 1 || n < 2 * t + 2 {
        return Err(FamilyError::InfeasibleParams {
            family: FamilyId::G4,
            n,
            t,
        });
    }
    let mut g = build_g0(n - 1, t)
        .map_err(|_| FamilyError::InfeasibleParams {
            family: FamilyId::G4,
            n,
            t,
        })?
        .grown(1);
    g.add_edge(1, n - 1).unwrap();
    Ok(g)
}

/// Hub with t−1 triangles, one 4-cycle, and n−2t−2 pendants.
pub fn build_g5(n: usize, t: usize) -> Result<Graph, FamilyError> {
    if t < 1 || n < 2 * t + 2 {
        return Err(FamilyError::InfeasibleParams {
            family: FamilyId::G5,
            n,
            t,
        });
    }
    let mut g = Graph::new(n);
    attach_triangles(&mut g, t - 1);
    let (a, b, c) = (2 * t - 1, 2 * t, 2 * t + 1);
    g.add_edge(0, a).unwrap();
    g.add_edge(a, b).unwrap();
    g.add_edge(b, c).unwrap();
    g.add_edge(c, 0).unwrap();
    attach_pendants(&mut g, 0, 2 * t + 2, n);
    Ok(g)
}

/// Hub with t−2 triangles, two 4-cycles, and n−2t−3 pendants (inferred shape).
pub fn build_g8(n: usize, t: usize) -> Result<Graph, FamilyError> {
    if t < 2 || n < 2 * t + 3 {
        return Err(FamilyError::InfeasibleParams {
            family: FamilyId::G8,
            n,
            t,
        });
    }
    let mut g = Graph::new(n);
    attach_triangles(&mut g, t - 2);
    for base in [2 * t - 3, 2 * t] {
        let (a, b, c) = (base, base + 1, base + 2);
        g.add_edge(0, a).unwrap();
        g.add_edge(a, b).unwrap();
        g.add_edge(b, c).unwrap();
        g.add_edge(c, 0).unwrap();
    }
    attach_pendants(&mut g, 0, 2 * t + 3, n);
    Ok(g)
}

/// Hub with t−1 triangles, one 5-cycle, and n−2t−3 pendants (inferred shape).
pub fn build_g10(n: usize, t: usize) -> Result<Graph, FamilyError> {
    if t < 1 || n < 2 * t + 3 {
        return Err(FamilyError::InfeasibleParams {
            family: FamilyId::G10,
            n,
            t,
        });
    }
    let mut g = Graph::new(n);
    attach_triangles(&mut g, t - 1);
    let ring = [0, 2 * t - 1, 2 * t, 2 * t + 1, 2 * t + 2];
    for i in 0..5 {
        g.add_edge(ring[i], ring[(i + 1) % 5]).unwrap();
    }
    attach_pendants(&mut g, 0, 2 * t + 3, n);
    Ok(g)
}

/// Cycle on h−1 vertices with one pendant at the distinguished vertex 0;
/// h vertices in total.
pub fn build_cycle_pendant(h: usize) -> Result<Graph, FamilyError> {
    if h < 4 {
        return Err(FamilyError::FragmentTooSmall { h });
    }
    let ring = h - 1;
    let mut g = Graph::new(h);
    for i in 0..ring {
        g.add_edge(i, (i + 1) % ring).unwrap();
    }
    g.add_edge(0, h - 1).unwrap();
    Ok(g)
}

pub fn build_family(family: FamilyId, n: usize, t: usize) -> Result<Graph, FamilyError> {
    match family {
        FamilyId::G0 => build_g0(n, t),
        FamilyId::G3 => build_g3(n, t),
        FamilyId::G4 => build_g4(n, t),
        FamilyId::G5 => build_g5(n, t),
        FamilyId::G8 => build_g8(n, t),
        FamilyId::G10 => build_g10(n, t),
        FamilyId::CyclePendant => {
            if t == 1 {
                build_cycle_pendant(n)
            } else {
                Err(FamilyError::InfeasibleParams { family, n, t })
            }
        }
    }
}

/// Invariant values of the cycle C_k at any vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleForms {
    pub kf: Rational,
    pub degree_resistance: Rational,
    pub kf_v: Rational,
    pub d_v: Rational,
}

/// ((k³−k)/12, (k³−k)/3, (k²−1)/6, (k²−1)/3).
pub fn closed_forms_cycle(k: usize) -> Result<CycleForms, FamilyError> {
    if k < 3 {
        return Err(FamilyError::CycleTooSmall { k });
    }
    let k = k as i64;
    Ok(CycleForms {
        kf: rational(k * k * k - k, 12),
        degree_resistance: rational(k * k * k - k, 3),
        kf_v: rational(k * k - 1, 6),
        d_v: rational(k * k - 1, 3),
    })
}

/// Invariant values of the h-vertex cycle-with-pendant fragment at its
/// degree-3 vertex u (= vertex 0 of build_cycle_pendant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePendantForms {
    pub degree_resistance: Rational,
    pub kf_u: Rational,
    pub d_u: Rational,
}

/// ((h³−h²+7h−6)/3, (h²−2h+6)/6, (h²−2h+3)/3).
pub fn closed_forms_cycle_pendant(h: usize) -> Result<CyclePendantForms, FamilyError> {
    if h < 4 {
        return Err(FamilyError::FragmentTooSmall { h });
    }
    let h = h as i64;
    Ok(CyclePendantForms {
        degree_resistance: rational(h * h * h - h * h + 7 * h - 6, 3),
        kf_u: rational(h * h - 2 * h + 6, 6),
        d_u: rational(h * h - 2 * h + 3, 3),
    })
}

/// D_R(C_h) − D_R(fragment) = (h²−8h+6)/3.
pub fn cycle_vs_pendant_gap(h: usize) -> Result<Rational, FamilyError> {
    if h < 4 {
        return Err(FamilyError::FragmentTooSmall { h });
    }
    let h = h as i64;
    Ok(rational(h * h - 8 * h + 6, 3))
}

/// The uncorrected published version of the same gap, (h²−8h+3)/3; kept so
/// the harness can demonstrate that it disagrees with direct computation.
pub fn cycle_vs_pendant_gap_erroneous(h: usize) -> Result<Rational, FamilyError> {
    if h < 4 {
        return Err(FamilyError::FragmentTooSmall { h });
    }
    let h = h as i64;
    Ok(rational(h * h - 8 * h + 3, 3))
}

/// D_R of build_g0(n,t): −(4/3)t² + ((4/3)n − 14/3)t + 3n² − 7n + 4.
pub fn g0_closed_form(n: usize, t: usize) -> Result<Rational, FamilyError> {
    CactusParams::new(n, t).map_err(|_| FamilyError::InfeasibleParams {
        family: FamilyId::G0,
        n,
        t,
    })?;
    let (n, t) = (n as i64, t as i64);
    Ok(rational(-4 * t * t + (4 * n - 14) * t, 3) + Rational::from_integer(3 * n * n - 7 * n + 4))
}

/// The uncorrected published closed form, −(4/3)t² + ((8/3)n − 6)t + 3n² − 7n + 4,
/// reading the sign so that it reproduces the published value 50 at (5,1).
/// Kept for the counterexample suite; disagrees with direct computation.
pub fn g0_closed_form_erroneous(n: usize, t: usize) -> Result<Rational, FamilyError> {
    CactusParams::new(n, t).map_err(|_| FamilyError::InfeasibleParams {
        family: FamilyId::G0,
        n,
        t,
    })?;
    let (n, t) = (n as i64, t as i64);
    Ok(rational(-4 * t * t + (8 * n - 18) * t, 3) + Rational::from_integer(3 * n * n - 7 * n + 4))
}

/// Exact D_R for G5 and G4 as degree-2 polynomials in (n, t).
pub fn corollary_closed_forms(
    family: FamilyId,
    n: usize,
    t: usize,
) -> Result<Rational, FamilyError> {
    // Both shapes need t ≥ 1 and n ≥ 2t+2.
    if t < 1 || n < 2 * t + 2 {
        return Err(FamilyError::InfeasibleParams { family, n, t });
    }
    let (ni, ti) = (n as i64, t as i64);
    match family {
        FamilyId::G5 => Ok(rational(-4 * ti * ti + (4 * ni - 13) * ti, 3)
            + Rational::from_integer(3 * ni * ni)
            + rational(-16 * ni - 19, 3)),
        FamilyId::G4 => Ok(rational(-4 * ti * ti + (4 * ni - 10) * ti, 3)
            + Rational::from_integer(3 * ni * ni - 8)
            + rational(-13 * ni, 3)),
        other => Err(FamilyError::NoClosedForm { family: other }),
    }
}

// Pairwise D_R gaps used in the ranking arguments, as exact polynomials.
pub fn g3_g0_gap(n: usize, t: usize) -> Rational {
    Rational::from_integer(4 * n as i64 + 2 * t as i64 - 12)
}

pub fn g4_g0_gap(n: usize, t: usize) -> Rational {
    rational(8 * n as i64 + 4 * t as i64 - 36, 3)
}

pub fn g5_g0_gap(n: usize, t: usize) -> Rational {
    rational(5 * n as i64 + t as i64 - 31, 3)
}

pub fn g8_g0_gap(n: usize, t: usize) -> Rational {
    rational(10 * n as i64 + 2 * t as i64 - 62, 3)
}

pub fn g10_g5_gap(n: usize, t: usize) -> Rational {
    Rational::from_integer(3 * n as i64 + t as i64 - 19)
}

pub fn g6_g4_gap(n: usize, t: usize) -> Rational {
    rational(12 * n as i64 + 3 * t as i64 - 89, 6)
}

pub fn g7_g6_gap(n: usize, t: usize) -> Rational {
    rational(2 * n as i64 + t as i64 - 11, 2)
}

pub fn g9_g8_gap(n: usize, t: usize) -> Rational {
    rational(3 * n as i64 + 3 * t as i64 - 5, 3)
}

/// Predicted D_R(G) − D_R(shrunk G) when an end cycle of length h is
/// shrunk by one: (h²−8h+6)/3 + (n−1−h)(4h−11)/3 + t(2h−7)/3 + (2h−4)/3.
/// Negative values mean the shrink raises the invariant.
pub fn end_cycle_shrink_gap(n: usize, t: usize, h: usize) -> Rational {
    let (n, t, h) = (n as i64, t as i64, h as i64);
    rational(
        (h * h - 8 * h + 6) + (n - 1 - h) * (4 * h - 11) + t * (2 * h - 7) + (2 * h - 4),
        3,
    )
}

/// Is v shaped for the pendant-moving transform: at least one pendant
/// neighbor and at most one non-pendant neighbor?
pub fn sigma_eligible(g: &Graph, v: usize) -> bool {
    let pendants = g.neighbors(v).filter(|&w| g.degree(w) == 1).count();
    let others = g.degree(v) - pendants;
    pendants >= 1 && others <= 1
}

/// Moves every pendant edge at v over to v's non-pendant neighbor u. When v
/// has only pendant neighbors (a star centered at v), the smallest-index
/// neighbor stands in for u and the result is an isomorphic star.
pub fn sigma_transform(g: &Graph, v: usize) -> Result<Graph, FamilyError> {
    let n = g.vertex_count();
    if v >= n {
        return Err(FamilyError::VertexOutOfRange { vertex: v, n });
    }
    let pendants: BTreeSet<usize> = g.neighbors(v).filter(|&w| g.degree(w) == 1).collect();
    let others: Vec<usize> = g.neighbors(v).filter(|w| !pendants.contains(w)).collect();
    if others.len() > 1 {
        return Err(FamilyError::MultipleNonPendantNeighbors {
            vertex: v,
            count: others.len(),
        });
    }
    if pendants.is_empty() {
        return Err(FamilyError::NoPendantNeighbors { vertex: v });
    }
    let u = match others.first() {
        Some(&u) => u,
        // Star centered at v: any neighbor can play u; take the smallest.
        None => *pendants.iter().next().expect("nonempty"),
    };
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(a, b)| {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                return (a, b);
            };
            if w != u && pendants.contains(&w) {
                (u, w)
            } else {
                (a, b)
            }
        })
        .collect();
    Ok(Graph::from_edges(n, &edges).expect("moved pendant edges stay simple"))
}

/// A cycle block whose anchor is its only vertex with neighbors outside the
/// cycle. `cycle_vertices` starts at the anchor and follows the cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndCycle {
    pub cycle_vertices: Vec<usize>,
    pub anchor: usize,
}

/// All end cycles of a cactus with t ≥ 2, each listed from its anchor.
pub fn find_end_cycles(g: &Graph) -> Result<Vec<EndCycle>, FamilyError> {
    let t = cactus_check(g)?;
    if t < 2 {
        return Err(FamilyError::NeedsTwoCycles { t });
    }
    let decomposition = block_decomposition(g)?;
    let mut found = Vec::new();
    for (idx, block) in decomposition.blocks.iter().enumerate() {
        if block.len() < 3 {
            continue;
        }
        let vertices = decomposition.block_vertices(idx);
        // Inside a cycle block every vertex has exactly two block neighbors,
        // so outside attachments show up as degree > 2.
        let anchors: Vec<usize> = vertices
            .iter()
            .copied()
            .filter(|&x| g.degree(x) > 2)
            .collect();
        if let [anchor] = anchors[..] {
            found.push(EndCycle {
                cycle_vertices: walk_cycle(block, anchor),
                anchor,
            });
        }
    }
    Ok(found)
}

/// Orders a cycle block's vertices by traversal from `start`, stepping first
/// to the smaller neighbor.
fn walk_cycle(block: &[(usize, usize)], start: usize) -> Vec<usize> {
    let next_of = |x: usize, prev: Option<usize>| -> usize {
        block
            .iter()
            .flat_map(|&(a, b)| [(a, b), (b, a)])
            .filter(|&(a, b)| a == x && Some(b) != prev)
            .map(|(_, b)| b)
            .min()
            .expect("cycle vertex has two block neighbors")
    };
    let mut order = vec![start];
    let mut prev = None;
    let mut here = start;
    for _ in 1..block.len() {
        let step = next_of(here, prev);
        order.push(step);
        prev = Some(here);
        here = step;
    }
    order
}

/// Shrinks an end cycle by one: with u the anchor and u–v–w consecutive on
/// the cycle, replaces edge vw by uw, so v is re-hung as a pendant at u and
/// the cycle loses one vertex. n and t are preserved.
pub fn lemma7_transform(g: &Graph, c: &EndCycle) -> Result<Graph, FamilyError> {
    let n = g.vertex_count();
    let h = c.cycle_vertices.len();
    let ring = &c.cycle_vertices;
    if ring.first() != Some(&c.anchor) {
        return Err(FamilyError::NotEndCycle {
            detail: format!("cycle list must start at the anchor {}", c.anchor),
        });
    }
    let distinct: BTreeSet<usize> = ring.iter().copied().collect();
    if distinct.len() != h || ring.iter().any(|&x| x >= n) {
        return Err(FamilyError::NotEndCycle {
            detail: "cycle list repeats or exceeds the vertex range".into(),
        });
    }
    for i in 0..h {
        let (a, b) = (ring[i], ring[(i + 1) % h]);
        if !g.has_edge(a, b) {
            return Err(FamilyError::NotEndCycle {
                detail: format!("consecutive vertices {a} and {b} are not adjacent"),
            });
        }
    }
    for &x in &ring[1..] {
        if g.neighbors(x).any(|y| !distinct.contains(&y)) {
            return Err(FamilyError::NotEndCycle {
                detail: format!("non-anchor vertex {x} has a neighbor outside the cycle"),
            });
        }
    }
    if !g.neighbors(c.anchor).any(|y| !distinct.contains(&y)) {
        return Err(FamilyError::NotEndCycle {
            detail: format!("anchor {} has no neighbor outside the cycle", c.anchor),
        });
    }
    if h == 3 {
        return Err(FamilyError::CycleTooShort);
    }
    // Deterministic choice: v is the anchor's smaller cycle neighbor.
    let (v, w) = if ring[1] < ring[h - 1] {
        (ring[1], ring[2])
    } else {
        (ring[h - 1], ring[h - 2])
    };
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(a, b)| {
            if (a, b) == (v.min(w), v.max(w)) {
                (c.anchor, w)
            } else {
                (a, b)
            }
        })
        .collect();
    Ok(Graph::from_edges(n, &edges).expect("rewired cycle stays simple"))
}
