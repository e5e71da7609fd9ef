//! Total coloring of the Cayley graph of the symmetric group generated by a
//! transposition and the two rotations, for degrees divisible by 3.
//!
//! The graph is a perfect matching (the transposition) laid over disjoint
//! n-cycles (the left cosets of the rotation subgroup). Each cycle carries
//! the repeating 3-total-coloring of a cycle whose length is divisible by 3,
//! relabeled per coset by a bijection of the three colors; the matching takes
//! a dedicated fourth color. The relabelings are found by backtracking so
//! that no matching edge joins equally colored endpoints.

use crate::chroma::{verify_total, TotalColorMatrix};
use crate::construct::{ensure_proper_report, ConstructError};
use crate::graph::{cayley_group, Graph, PermGenSet};
use crate::perm::{coset_decompose, enumerate, CosetSide, GroupKind, Permutation, SubgroupSpec};

/// `{(1,2), (1,2,...,n), (1,n,...,2)}`.
pub fn symmetric_gen_set(n: usize) -> Result<PermGenSet, ConstructError> {
    if n < 3 {
        return Err(ConstructError::BadParameters(format!(
            "degree must be at least 3, got {n}"
        )));
    }
    let forward: Vec<usize> = (1..=n).collect();
    let mut backward = vec![1];
    backward.extend((2..=n).rev());
    let gens = vec![
        Permutation::from_cycles(n, &[vec![1, 2]])?,
        Permutation::from_cycles(n, &[forward])?,
        Permutation::from_cycles(n, &[backward])?,
    ];
    Ok(PermGenSet::new(gens)?)
}

/// The six bijections of the color set {0,1,2}, rotations first.
const COLOR_MAPS: [[u32; 3]; 6] = [
    [0, 1, 2],
    [1, 2, 0],
    [2, 0, 1],
    [0, 2, 1],
    [1, 0, 2],
    [2, 1, 0],
];

#[derive(Debug)]
pub struct SymTotalOutcome {
    pub graph: Graph,
    pub matrix: TotalColorMatrix,
    pub report: crate::chroma::ColoringReport,
    /// Index into the color-map table chosen for each rotation coset.
    pub coset_maps: Vec<usize>,
}

/// Builds and verifies the 4-color total coloring of `C(S_n, S)` for `3 | n`.
pub fn total_color_sym(n: usize, node_budget: u64) -> Result<SymTotalOutcome, ConstructError> {
    if n % 3 != 0 {
        return Err(ConstructError::BadParameters(format!(
            "degree must be divisible by 3, got {n}"
        )));
    }
    let elements = enumerate(GroupKind::Symmetric, n)?;
    let gens = symmetric_gen_set(n)?;
    let graph = cayley_group(&elements, &gens)?;

    let forward: Vec<usize> = (1..=n).collect();
    let sigma = Permutation::from_cycles(n, &[forward])?;
    let cosets = coset_decompose(
        &elements,
        &sigma,
        SubgroupSpec::CyclicGenerated,
        CosetSide::Left,
    )?;

    // Vertex -> (coset, position along the rotation cycle).
    let mut place = vec![(0usize, 0usize); elements.len()];
    for (c, coset) in cosets.iter().enumerate() {
        for (p, perm) in coset.iter().enumerate() {
            place[elements.index_of(perm).expect("coset inside group")] = (c, p);
        }
    }

    // Matching constraints: the endpoints of each transposition edge must
    // receive different vertex colors.
    let swap = Permutation::from_cycles(n, &[vec![1, 2]])?;
    let mut constraints: Vec<(usize, usize, usize, usize)> = Vec::new();
    for (v, x) in elements.elements().iter().enumerate() {
        let w = elements
            .index_of(&x.compose(&swap)?)
            .expect("closed under generators");
        if v < w {
            let (c1, p1) = place[v];
            let (c2, p2) = place[w];
            if c1 == c2 {
                if p1 % 3 == p2 % 3 {
                    return Err(ConstructError::HypothesisFailed(format!(
                        "matching edge inside rotation coset {c1} joins equal color positions"
                    )));
                }
                continue;
            }
            constraints.push((c1, p1 % 3, c2, p2 % 3));
        }
    }

    // Group constraints per coset for the backtracking pass.
    let mut per_coset: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); cosets.len()];
    for &(c1, r1, c2, r2) in &constraints {
        per_coset[c1.max(c2)].push(if c1 > c2 { (r1, c2, r2) } else { (r2, c1, r1) });
    }

    let mut chosen = vec![usize::MAX; cosets.len()];
    let mut nodes = 0u64;
    if !assign_maps(0, &per_coset, &mut chosen, &mut nodes, node_budget) {
        return Err(ConstructError::SearchExhausted(format!(
            "no per-coset color relabeling avoids the matching clashes within {node_budget} nodes"
        )));
    }

    let mut matrix = TotalColorMatrix::new(elements.len());
    for (c, coset) in cosets.iter().enumerate() {
        let phi = &COLOR_MAPS[chosen[c]];
        let len = coset.len();
        for (p, perm) in coset.iter().enumerate() {
            let v = elements.index_of(perm).unwrap();
            matrix.set_vertex(v, phi[p % 3] + 1);
            let q = (p + 1) % len;
            let w = elements.index_of(&coset[q]).unwrap();
            matrix.set_edge(v, w, phi[(p + 2) % 3] + 1);
        }
    }
    for (v, x) in elements.elements().iter().enumerate() {
        let w = elements.index_of(&x.compose(&swap)?).unwrap();
        matrix.set_edge(v, w, 4);
    }

    let report = ensure_proper_report(verify_total(&graph, &matrix)?)?;
    Ok(SymTotalOutcome {
        graph,
        matrix,
        report,
        coset_maps: chosen,
    })
}

fn assign_maps(
    coset: usize,
    per_coset: &[Vec<(usize, usize, usize)>],
    chosen: &mut [usize],
    nodes: &mut u64,
    budget: u64,
) -> bool {
    if coset == chosen.len() {
        return true;
    }
    for candidate in 0..COLOR_MAPS.len() {
        *nodes += 1;
        if *nodes > budget {
            return false;
        }
        let ok = per_coset[coset].iter().all(|&(r_here, other, r_other)| {
            chosen[other] == usize::MAX
                || COLOR_MAPS[candidate][r_here] != COLOR_MAPS[chosen[other]][r_other]
        });
        if ok {
            chosen[coset] = candidate;
            if assign_maps(coset + 1, per_coset, chosen, nodes, budget) {
                return true;
            }
            chosen[coset] = usize::MAX;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chroma::BoundClass;

    #[test]
    fn prism_gets_four_total_colors() {
        let out = total_color_sym(3, 1 << 20).unwrap();
        assert_eq!(out.graph.n(), 6);
        assert!(out.graph.is_regular(3));
        assert!(out.report.proper);
        assert_eq!(out.report.colors_used, 4);
        assert_eq!(out.report.bound_class, BoundClass::TypeI);
    }

    #[test]
    fn matching_edges_colored_four_with_endpoints_below() {
        let out = total_color_sym(3, 1 << 20).unwrap();
        let elements = enumerate(GroupKind::Symmetric, 3).unwrap();
        let swap = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        for (v, x) in elements.elements().iter().enumerate() {
            let w = elements.index_of(&x.compose(&swap).unwrap()).unwrap();
            assert_eq!(out.matrix.edge(v, w), Some(4));
            assert!(out.matrix.vertex(v).unwrap() <= 3);
        }
    }

    #[test]
    fn rejects_degree_not_divisible_by_three() {
        assert!(matches!(
            total_color_sym(4, 1 << 20),
            Err(ConstructError::BadParameters(_))
        ));
    }

    #[test]
    fn each_coset_restriction_is_proper_cycle_coloring() {
        let out = total_color_sym(3, 1 << 20).unwrap();
        let elements = enumerate(GroupKind::Symmetric, 3).unwrap();
        let sigma = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let cosets = coset_decompose(
            &elements,
            &sigma,
            SubgroupSpec::CyclicGenerated,
            CosetSide::Left,
        )
        .unwrap();
        for coset in &cosets {
            let len = coset.len();
            for p in 0..len {
                let v = elements.index_of(&coset[p]).unwrap();
                let w = elements.index_of(&coset[(p + 1) % len]).unwrap();
                let cv = out.matrix.vertex(v).unwrap();
                let cw = out.matrix.vertex(w).unwrap();
                let ce = out.matrix.edge(v, w).unwrap();
                assert!(cv != cw && ce != cv && ce != cw);
                assert!(cv <= 3 && cw <= 3 && ce <= 3);
            }
        }
    }
}
