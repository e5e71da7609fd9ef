//! Conformable vertex colorings of powers of cycles: proper colorings into
//! exactly 2k+1 classes whose sizes all share the parity of n.
//!
//! Even order: antipodal pairs packed into the classes (empty classes are
//! fine, zero is even). Odd order: a skeleton of stride-(k+1) triples plus
//! singletons when the order is small, otherwise singleton seeds plus
//! spread-out pairs; both sides fall back to bounded backtracking when the
//! greedy packing gets stuck.

use crate::chroma::{verify_conformable, VertexColoring};
use crate::construct::ConstructError;
use crate::graph::power_cycle;

const PACK_BUDGET: u64 = 1_000_000;

fn circ_dist(n: usize, a: usize, b: usize) -> usize {
    let d = a.abs_diff(b) % n;
    d.min(n - d)
}

/// Builds and checker-validates a conformable coloring of `C_n^k`.
///
/// Preconditions: even `n` needs `k < n/2`; odd `n` needs `k + 1 < n/3`.
pub fn conformable_partition(n: usize, k: usize) -> Result<VertexColoring, ConstructError> {
    if k == 0 {
        return Err(ConstructError::BadParameters("k must be positive".into()));
    }
    let colors = if n % 2 == 0 {
        if 2 * k >= n {
            return Err(ConstructError::BadParameters(format!(
                "even order needs k < n/2, got n = {n}, k = {k}"
            )));
        }
        even_partition(n, k)?
    } else {
        if 3 * (k + 1) >= n {
            return Err(ConstructError::BadParameters(format!(
                "odd order needs k + 1 < n/3, got n = {n}, k = {k}"
            )));
        }
        odd_partition(n, k)?
    };
    let coloring = VertexColoring::new(colors)?;
    let graph = power_cycle(n, k)?;
    let report = verify_conformable(&graph, &coloring)?;
    if !report.conformable {
        return Err(ConstructError::HypothesisFailed(format!(
            "packed partition failed the conformability check: {report:?}"
        )));
    }
    Ok(coloring)
}

/// Even order: assign each antipodal pair {i, i + n/2} to a class. Two pairs
/// may share a class iff their representative distance d satisfies
/// k < d < n/2 - k. First-fit with backtracking over the pair order.
fn even_partition(n: usize, k: usize) -> Result<Vec<u32>, ConstructError> {
    let half = n / 2;
    let class_count = 2 * k + 1;
    let compatible = |i: usize, j: usize| {
        let d = circ_dist(n, i, j);
        d > k && half - d > k
    };
    let mut assignment = vec![usize::MAX; half];
    let mut budget = PACK_BUDGET;
    if !place_pairs(
        0,
        half,
        class_count,
        &compatible,
        &mut assignment,
        &mut budget,
    ) {
        return Err(ConstructError::SearchExhausted(format!(
            "antipodal pair packing for n = {n}, k = {k} exhausted its budget"
        )));
    }
    let mut colors = vec![0u32; n];
    for (pair, &class) in assignment.iter().enumerate() {
        colors[pair] = (class + 1) as u32;
        colors[pair + half] = (class + 1) as u32;
    }
    Ok(colors)
}

fn place_pairs(
    pair: usize,
    half: usize,
    class_count: usize,
    compatible: &dyn Fn(usize, usize) -> bool,
    assignment: &mut [usize],
    budget: &mut u64,
) -> bool {
    if pair == half {
        return true;
    }
    for class in 0..class_count {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let ok = assignment[..pair]
            .iter()
            .enumerate()
            .all(|(other, &cl)| cl != class || compatible(pair, other));
        if ok {
            assignment[pair] = class;
            if place_pairs(pair + 1, half, class_count, compatible, assignment, budget) {
                return true;
            }
            assignment[pair] = usize::MAX;
        }
    }
    false
}

/// Odd order. With t = (n - 2k - 1)/2 triples fitting side by side
/// (n <= 4k+3), uses stride-(k+1) triples {j, j+k+1, j+2k+2} plus singleton
/// classes. Otherwise seeds the classes with the first 2k+1 vertices and
/// spreads the remaining even run as pairs at distance n - 2k - 1 over the
/// seeds, first-fit with backtracking.
fn odd_partition(n: usize, k: usize) -> Result<Vec<u32>, ConstructError> {
    let class_count = 2 * k + 1;
    let mut colors = vec![0u32; n];
    let triples = (n - 2 * k - 1) / 2;
    if triples <= k + 1 {
        for j in 0..triples {
            for member in [j, j + k + 1, j + 2 * k + 2] {
                colors[member] = (j + 1) as u32;
            }
        }
        let mut next_class = triples + 1;
        for v in 0..n {
            if colors[v] == 0 {
                colors[v] = next_class as u32;
                next_class += 1;
            }
        }
        debug_assert_eq!(next_class, class_count + 1);
        return Ok(colors);
    }

    // Large odd orders: singleton seeds 0..2k, then pair (2k+1+j) with the
    // vertex half the leftover run further along.
    let run = n - (2 * k + 1);
    let halfrun = run / 2;
    debug_assert!(halfrun > k);
    let pair_members = |j: usize| -> (usize, usize) { (2 * k + 1 + j, 2 * k + 1 + j + halfrun) };
    let seat_ok = |j: usize, seat: usize, seated: &[Vec<usize>]| -> bool {
        let (a, b) = pair_members(j);
        let mut members = vec![seat];
        members.extend(seated[seat].iter().flat_map(|&other| {
            let (x, y) = pair_members(other);
            [x, y]
        }));
        members
            .into_iter()
            .all(|m| circ_dist(n, a, m) > k && circ_dist(n, b, m) > k)
    };

    let mut seated: Vec<Vec<usize>> = vec![Vec::new(); class_count];
    let mut budget = PACK_BUDGET;
    if !seat_pairs(0, halfrun, class_count, &seat_ok, &mut seated, &mut budget) {
        return Err(ConstructError::SearchExhausted(format!(
            "pair seating for n = {n}, k = {k} exhausted its budget"
        )));
    }
    for seed in 0..class_count {
        colors[seed] = (seed + 1) as u32;
        for &j in &seated[seed] {
            let (a, b) = pair_members(j);
            colors[a] = (seed + 1) as u32;
            colors[b] = (seed + 1) as u32;
        }
    }
    Ok(colors)
}

fn seat_pairs(
    j: usize,
    pair_count: usize,
    class_count: usize,
    seat_ok: &dyn Fn(usize, usize, &[Vec<usize>]) -> bool,
    seated: &mut Vec<Vec<usize>>,
    budget: &mut u64,
) -> bool {
    if j == pair_count {
        return true;
    }
    for seat in 0..class_count {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        if seat_ok(j, seat, seated) {
            seated[seat].push(j);
            if seat_pairs(j + 1, pair_count, class_count, seat_ok, seated, budget) {
                return true;
            }
            seated[seat].pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chroma::verify_conformable;

    #[test]
    fn even_8_2_all_even_classes() {
        let coloring = conformable_partition(8, 2).unwrap();
        let g = power_cycle(8, 2).unwrap();
        let report = verify_conformable(&g, &coloring).unwrap();
        assert!(report.conformable);
        assert_eq!(report.classes, 5);
        assert!(report.class_sizes.iter().all(|s| s % 2 == 0));
    }

    #[test]
    fn odd_13_3_all_odd_classes() {
        let coloring = conformable_partition(13, 3).unwrap();
        let g = power_cycle(13, 3).unwrap();
        let report = verify_conformable(&g, &coloring).unwrap();
        assert!(report.conformable, "{report:?}");
        assert_eq!(report.classes, 7);
        assert!(report.class_sizes.iter().all(|s| s % 2 == 1));
    }

    #[test]
    fn rejects_odd_7_3() {
        assert!(matches!(
            conformable_partition(7, 3),
            Err(ConstructError::BadParameters(_))
        ));
    }

    #[test]
    fn large_even_and_odd_instances() {
        for (n, k) in [(30, 5), (26, 5), (28, 4), (31, 5), (29, 4), (31, 3)] {
            let coloring = conformable_partition(n, k).unwrap();
            let g = power_cycle(n, k).unwrap();
            assert!(
                verify_conformable(&g, &coloring).unwrap().conformable,
                "n = {n}, k = {k}"
            );
        }
    }
}
