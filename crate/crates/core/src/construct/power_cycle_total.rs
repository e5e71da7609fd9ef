//! Total coloring of powers of cycles `C_n^k` for `n = m(k+1)+1` with `m`
//! even and `k` odd, using exactly `2k+2` colors.
//!
//! The vertices split into `m` blocks of `k+1` consecutive vertices, the last
//! block absorbing the extra vertex. Inside a block both vertex and edge
//! colors come from a commutative idempotent pseudo-Latin square; the
//! connector edges between consecutive blocks carry diagonal colors from the
//! upper half of the palette, with the direction of the diagonal numbering
//! alternating with block parity.

use crate::chroma::{verify_total, TotalColorMatrix};
use crate::construct::{ensure_proper_report, ConstructError};
use crate::graph::power_cycle;

/// The order-(k+1) front of a commutative idempotent Latin square of order
/// `k+2`: `entry(i,j) = ((k+3)/2 * (i+j) mod (k+2)) + 1`.
///
/// The multiplier is the inverse of 2 mod `k+2`, which makes the square
/// idempotent (`entry(i,i) = i+1`) and commutative; indices up to `k+1` are
/// accepted so the final oversized block can keep using the same square.
#[derive(Debug, Clone, Copy)]
pub struct PseudoLatin {
    order: usize,
    modulus: usize,
    multiplier: usize,
}

impl PseudoLatin {
    pub fn new(k: usize) -> Self {
        PseudoLatin {
            order: k + 1,
            modulus: k + 2,
            multiplier: (k + 3) / 2,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        ((self.multiplier * (i + j)) % self.modulus + 1) as u32
    }
}

/// Builds the total color matrix for `C_n^k` and verifies it before
/// returning. Requires odd `k >= 3` and `n = m(k+1)+1` with even `m >= 2`.
pub fn total_color_power_cycle(n: usize, k: usize) -> Result<TotalColorMatrix, ConstructError> {
    if k < 3 || k % 2 == 0 {
        return Err(ConstructError::BadParameters(format!(
            "k must be odd and at least 3, got {k}"
        )));
    }
    if n <= k + 1 || (n - 1) % (k + 1) != 0 {
        return Err(ConstructError::BadParameters(format!(
            "n must be m(k+1)+1 for some even m, got n = {n}, k = {k}"
        )));
    }
    let m = (n - 1) / (k + 1);
    if m < 2 || m % 2 != 0 {
        return Err(ConstructError::BadParameters(format!(
            "n must be m(k+1)+1 for some even m >= 2, got m = {m}"
        )));
    }
    debug_assert!(2 * k < n);

    let square = PseudoLatin::new(k);
    let block = |i: usize| {
        (
            (i / (k + 1)).min(m - 1),
            i - (i / (k + 1)).min(m - 1) * (k + 1),
        )
    };

    let graph = power_cycle(n, k)?;
    let mut matrix = TotalColorMatrix::new(n);
    for v in 0..n {
        let (_, r) = block(v);
        matrix.set_vertex(v, square.entry(r, r));
    }
    for &(u, v) in graph.edges() {
        let (bu, ru) = block(u);
        let (bv, rv) = block(v);
        let color = if bu == bv {
            square.entry(ru, rv)
        } else if v - u <= k {
            // Forward connector between consecutive blocks.
            debug_assert_eq!(bv, bu + 1);
            let gap = v - u;
            if bu % 2 == 0 {
                (2 * k + 3 - gap) as u32
            } else {
                (k + 2 + gap) as u32
            }
        } else {
            // Wrap connector through vertex 0.
            let gap = n - (v - u);
            debug_assert!(gap >= 1 && gap <= k);
            (k + 2 + gap) as u32
        };
        matrix.set_edge(u, v, color);
    }

    let report = ensure_proper_report(verify_total(&graph, &matrix)?)?;
    if report.colors_used != 2 * k + 2 {
        return Err(ConstructError::SelfVerification(Box::new(report)));
    }
    Ok(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chroma::BoundClass;
    use crate::golden::{TABLE1_CSV, TABLE1_PARAMS, TABLE2_CSV, TABLE2_PARAMS};

    #[test]
    fn pseudo_latin_shape() {
        let sq = PseudoLatin::new(5);
        assert_eq!(sq.order(), 6);
        assert_eq!(sq.modulus(), 7);
        // Idempotent and commutative.
        for i in 0..=6 {
            assert_eq!(sq.entry(i, i), (i + 1) as u32);
            for j in 0..=6 {
                assert_eq!(sq.entry(i, j), sq.entry(j, i));
            }
        }
        // Each row of the full order-(k+2) square is a permutation of 1..=7.
        for i in 0..=6 {
            let mut row: Vec<u32> = (0..=6).map(|j| sq.entry(i, j)).collect();
            row.sort_unstable();
            assert_eq!(row, (1..=7).collect::<Vec<u32>>());
        }
    }

    #[test]
    fn matches_golden_table1() {
        let (n, k) = TABLE1_PARAMS;
        let m = total_color_power_cycle(n, k).unwrap();
        assert_eq!(m.to_csv(), TABLE1_CSV);
        // Spot entries.
        assert_eq!(m.edge(0, 1), Some(5));
        assert_eq!(m.edge(1, 6), Some(8));
        assert_eq!(m.edge(0, 8), Some(12));
        assert_eq!(m.vertex(12), Some(7));
    }

    #[test]
    fn matches_golden_table2() {
        let (n, k) = TABLE2_PARAMS;
        let m = total_color_power_cycle(n, k).unwrap();
        assert_eq!(m.to_csv(), TABLE2_CSV);
        assert_eq!(m.edge(7, 12), Some(12));
        assert_eq!(m.edge(13, 18), Some(8));
        assert_eq!(m.edge(20, 0), Some(12));
    }

    #[test]
    fn nine_vertices_proper_with_eight_colors() {
        let m = total_color_power_cycle(9, 3).unwrap();
        let g = power_cycle(9, 3).unwrap();
        let report = verify_total(&g, &m).unwrap();
        assert!(report.proper);
        assert_eq!(report.colors_used, 8);
        assert_eq!(report.bound_class, BoundClass::TypeII);
    }

    #[test]
    fn diagonal_rule() {
        let m = total_color_power_cycle(13, 5).unwrap();
        for i in 0..12 {
            assert_eq!(m.vertex(i), Some((i % 6 + 1) as u32));
        }
        assert_eq!(m.vertex(12), Some(7));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(total_color_power_cycle(13, 4).is_err()); // even k
        assert!(total_color_power_cycle(12, 3).is_err()); // n not m(k+1)+1
        assert!(total_color_power_cycle(5, 3).is_err()); // m < 2
        assert!(total_color_power_cycle(13, 3).is_err()); // m = 3 odd
    }
}
