//! Colorings of 2-gyrogroup Cayley graphs. Under left translation the two
//! halves induce the same circulant on residues, so each construction colors
//! the circulant once (exactly, via the oracle), copies it onto the second
//! half through a palette permutation chosen so the reflection matching
//! stays proper, and spends dedicated colors on the reflection edges.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::chroma::{
    verify_edge, verify_total, verify_vertex, ColoringReport, EdgeColoring, TotalColorMatrix,
    VertexColoring,
};
use crate::construct::edge_fallback::edge_color_delta_plus_one;
use crate::construct::{ensure_proper_report, ConstructError};
use crate::graph::{cayley_gyro, circulant, Graph, GyroGenSet};
use crate::gyro::GyroTable;
use crate::oracle::{self, Budget, OracleStatus, OracleWitness};

/// `{1..k} ∪ {m-k..m-1} ∪ {m/2 + m}`.
pub fn gyro_gen_set_for_k(table: &GyroTable, k: usize) -> Result<GyroGenSet, ConstructError> {
    let m = table.m();
    if k == 0 || 2 * k >= m {
        return Err(ConstructError::BadParameters(format!(
            "need 1 <= k < m/2, got k = {k}, m = {m}"
        )));
    }
    let mut labels: Vec<usize> = (1..=k).collect();
    labels.extend((m - k)..m);
    labels.push(table.reflection());
    Ok(GyroGenSet::new(table, labels)?)
}

fn validate_s1(table: &GyroTable, s1: &BTreeSet<usize>) -> Result<(), ConstructError> {
    let m = table.m();
    for &r in s1 {
        if r == 0 || r >= m || !s1.contains(&((m - r) % m)) {
            return Err(ConstructError::BadParameters(format!(
                "connection residue {r} invalid or asymmetric mod {m}"
            )));
        }
    }
    if s1.is_empty() {
        return Err(ConstructError::BadParameters(
            "connection set must be nonempty".into(),
        ));
    }
    Ok(())
}

fn full_gen_set(table: &GyroTable, s1: &BTreeSet<usize>) -> Result<GyroGenSet, ConstructError> {
    let mut labels: Vec<usize> = s1.iter().copied().collect();
    labels.push(table.reflection());
    Ok(GyroGenSet::new(table, labels)?)
}

/// Reflection matching partners: `pair[x] = reflection + x` for `x` in the
/// first half (an involution between the halves once the axioms hold).
fn matching_pairs(table: &GyroTable) -> Vec<usize> {
    let refl = table.reflection();
    (0..table.m()).map(|x| table.add(refl, x)).collect()
}

#[derive(Debug)]
pub struct GyroVertexOutcome {
    pub graph: Graph,
    pub coloring: VertexColoring,
    pub report: ColoringReport,
    /// Exact chromatic number of the underlying circulant.
    pub circulant_chromatic: usize,
    /// Whether the output uses exactly that many colors.
    pub matches_circulant: bool,
    /// Palette permutation applied to the second half, when one sufficed.
    pub permutation: Option<Vec<u32>>,
    pub repaired: bool,
}

/// Proper vertex coloring of `C(Γ, S1 ∪ {m/2+m})` built from an exact
/// coloring of `circulant(m, S1)`.
pub fn gyro_vertex_color(
    table: &GyroTable,
    s1: &BTreeSet<usize>,
    budget: &Budget,
) -> Result<GyroVertexOutcome, ConstructError> {
    validate_s1(table, s1)?;
    let m = table.m();
    let gens = full_gen_set(table, s1)?;
    let graph = cayley_gyro(table, &gens)?;
    let circ = circulant(m, s1)?;

    let base_result = oracle::chromatic_number(&circ, budget);
    if base_result.status != OracleStatus::Exact {
        return Err(ConstructError::ComponentUnavailable(Box::new(base_result)));
    }
    let chi = base_result.value.expect("exact result has a value");
    let base = match base_result.witness {
        Some(OracleWitness::Vertex(c)) => c,
        _ => unreachable!("chromatic witness is a vertex coloring"),
    };

    let pairs = matching_pairs(table);
    let palette: Vec<u32> = {
        let mut p = base.colors.clone();
        p.sort_unstable();
        p.dedup();
        p
    };

    // A palette permutation works iff no matched pair becomes monochromatic.
    let mut chosen: Option<Vec<u32>> = None;
    for perm in palette.iter().copied().permutations(palette.len()) {
        let relabel = |c: u32| perm[palette.binary_search(&c).unwrap()];
        let ok = (0..m).all(|x| relabel(base.colors[pairs[x] - m]) != base.colors[x]);
        if ok {
            chosen = Some(perm);
            break;
        }
    }

    let mut colors = vec![0u32; 2 * m];
    let mut repaired = false;
    match &chosen {
        Some(perm) => {
            let relabel = |c: u32| perm[palette.binary_search(&c).unwrap()];
            for x in 0..m {
                colors[x] = base.colors[x];
                colors[x + m] = relabel(base.colors[x]);
            }
        }
        None => {
            // Bounded repair: start from the identity copy and recolor the
            // conflicted second-half vertices greedily within the palette.
            for x in 0..m {
                colors[x] = base.colors[x];
                colors[x + m] = base.colors[x];
            }
            repaired = true;
            for x in 0..m {
                let y = pairs[x];
                if colors[y] != colors[x] {
                    continue;
                }
                let found = palette.iter().copied().find(|&c| {
                    c != colors[x] && graph.neighbors(y).iter().all(|&z| z == x || colors[z] != c)
                });
                match found {
                    Some(c) => colors[y] = c,
                    None => return Err(ConstructError::SearchExhausted(format!(
                        "no palette permutation or local repair fixes the matching at vertex {y}"
                    ))),
                }
            }
        }
    }

    let coloring = VertexColoring::new(colors)?;
    let report = ensure_proper_report(verify_vertex(&graph, &coloring)?)?;
    Ok(GyroVertexOutcome {
        graph,
        matches_circulant: report.colors_used == chi,
        circulant_chromatic: chi,
        permutation: chosen,
        repaired,
        coloring,
        report,
    })
}

#[derive(Debug)]
pub struct GyroTotalOutcome {
    pub graph: Graph,
    pub matrix: TotalColorMatrix,
    pub report: ColoringReport,
    /// Exact total chromatic number of the underlying circulant.
    pub circulant_total: usize,
    /// The dedicated matching color.
    pub matching_color: u32,
}

/// Total coloring of `C(Γ, S1 ∪ {m/2+m})`: both induced circulants carry an
/// exact total coloring of `circulant(m, S1)` (the second copy permuted so
/// matched vertices differ), and the reflection matching takes one fresh
/// color.
pub fn gyro_total_color(
    table: &GyroTable,
    s1: &BTreeSet<usize>,
    budget: &Budget,
) -> Result<GyroTotalOutcome, ConstructError> {
    validate_s1(table, s1)?;
    let m = table.m();
    let gens = full_gen_set(table, s1)?;
    let graph = cayley_gyro(table, &gens)?;
    let circ = circulant(m, s1)?;

    let base_result = oracle::total_chromatic_number(&circ, budget);
    if base_result.status != OracleStatus::Exact {
        return Err(ConstructError::ComponentUnavailable(Box::new(base_result)));
    }
    let chi_tt = base_result.value.expect("exact result has a value");
    let base = match base_result.witness {
        Some(OracleWitness::Total(mtx)) => mtx,
        _ => unreachable!("total witness is a matrix"),
    };

    let palette: Vec<u32> = (1..=chi_tt as u32).collect();
    let pairs = matching_pairs(table);
    let base_vertex = |x: usize| base.vertex(x).expect("oracle witness is complete");

    let mut chosen: Option<Vec<u32>> = None;
    for perm in palette.iter().copied().permutations(palette.len()) {
        let relabel = |c: u32| perm[(c - 1) as usize];
        let ok = (0..m).all(|x| relabel(base_vertex(pairs[x] - m)) != base_vertex(x));
        if ok {
            chosen = Some(perm);
            break;
        }
    }
    let perm = chosen.ok_or_else(|| {
        ConstructError::SearchExhausted(
            "no palette permutation keeps the reflection matching proper".into(),
        )
    })?;
    let relabel = |c: u32| perm[(c - 1) as usize];

    let matching_color = chi_tt as u32 + 1;
    let mut matrix = TotalColorMatrix::new(2 * m);
    for x in 0..m {
        matrix.set_vertex(x, base_vertex(x));
        matrix.set_vertex(x + m, relabel(base_vertex(x)));
        matrix.set_edge(x, pairs[x], matching_color);
    }
    for &(u, v) in circ.edges() {
        let c = base.edge(u, v).expect("oracle witness covers all edges");
        matrix.set_edge(u, v, c);
        matrix.set_edge(u + m, v + m, relabel(c));
    }

    let report = ensure_proper_report(verify_total(&graph, &matrix)?)?;
    Ok(GyroTotalOutcome {
        graph,
        matrix,
        report,
        circulant_total: chi_tt,
        matching_color,
    })
}

#[derive(Debug)]
pub struct GyroEdgeOutcome {
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub report: ColoringReport,
    /// Exact class verdict: colors used equals the maximum degree.
    pub class_one: bool,
    /// Edge chromatic number used for the circulant part, when present.
    pub circulant_index: Option<usize>,
    /// Whether the bounded fan-rotation fallback replaced the exact oracle.
    pub used_fallback: bool,
}

/// Edge coloring of `C(Γ, S)` for any symmetric generating set: each
/// reflection generator gets a dedicated color on its perfect matching; the
/// two disjoint circulant copies share one exactly-colored palette.
pub fn gyro_edge_color(
    table: &GyroTable,
    s: &GyroGenSet,
    budget: &Budget,
) -> Result<GyroEdgeOutcome, ConstructError> {
    let m = table.m();
    let graph = cayley_gyro(table, s)?;
    let conn: BTreeSet<usize> = s.labels().iter().copied().filter(|&l| l < m).collect();
    let reflections: Vec<usize> = s.labels().iter().copied().filter(|&l| l >= m).collect();

    let mut coloring = EdgeColoring::new();
    let mut next_color = 1u32;
    let mut circulant_index = None;
    let mut used_fallback = false;

    if !conn.is_empty() {
        let circ = circulant(m, &conn)?;
        let result = oracle::chromatic_index(&circ, budget);
        let ec = match (result.status, result.witness) {
            (OracleStatus::Exact, Some(OracleWitness::Edge(ec))) => {
                circulant_index = result.value;
                ec
            }
            _ => {
                used_fallback = true;
                edge_color_delta_plus_one(&circ)
            }
        };
        let shared: u32 = ec.colors.values().copied().max().unwrap_or(0);
        for (&(u, v), &c) in &ec.colors {
            coloring.set(u, v, c);
            coloring.set(u + m, v + m, c);
        }
        next_color = shared + 1;
    }
    for &refl in &reflections {
        let matching: Vec<(usize, usize)> = (0..table.order())
            .map(|x| {
                let y = table.add(refl, x);
                (x.min(y), x.max(y))
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if !graph.is_perfect_matching(&matching) {
            return Err(ConstructError::HypothesisFailed(format!(
                "translation by reflection {refl} is not a perfect matching"
            )));
        }
        for &(a, b) in &matching {
            coloring.set(a, b, next_color);
        }
        next_color += 1;
    }

    let report = ensure_proper_report(verify_edge(&graph, &coloring)?)?;
    Ok(GyroEdgeOutcome {
        class_one: report.colors_used == graph.max_degree(),
        graph,
        coloring,
        report,
        circulant_index,
        used_fallback,
    })
}
