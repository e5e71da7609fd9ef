//! Finite permutation arithmetic and enumeration of symmetric, alternating,
//! and cyclic groups, together with coset decompositions.
//!
//! Composition is left-to-right throughout the crate: `a.compose(&b)` is the
//! permutation "apply `a`, then `b`". Points are 0-based internally and
//! 1-based in cycle notation and all I/O.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

/// Default cap on the degree of symmetric/alternating enumeration (8! = 40320).
pub const DEFAULT_FACTORIAL_DEGREE_LIMIT: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("cycle point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once across cycles")]
    RepeatedPoint(usize),
    #[error("image list is not a bijection on 0..{0}")]
    NotBijective(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("enumeration of degree {degree} exceeds the budget of {limit}")]
    BudgetExceeded { degree: usize, limit: usize },
    #[error("element {0} does not belong to the group")]
    NotInGroup(String),
    #[error("malformed cycle notation: {0}")]
    Parse(String),
}

/// A bijection on `{0..n-1}`, stored by its image list: `images[i]` is the
/// image of point `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        Ok(Self {
            images: (0..degree).collect(),
        })
    }

    /// Builds a permutation from its image list, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        if images.is_empty() {
            return Err(PermError::ZeroDegree);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n || seen[im] {
                return Err(PermError::NotBijective(n));
            }
            seen[im] = true;
        }
        Ok(Self { images })
    }

    /// Builds the product of disjoint cycles written with 1-based points.
    /// Points not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (t, &point) in cycle.iter().enumerate() {
                if point == 0 || point > degree {
                    return Err(PermError::PointOutOfRange { point, degree });
                }
                if used[point - 1] {
                    return Err(PermError::RepeatedPoint(point));
                }
                used[point - 1] = true;
                let next = cycle[(t + 1) % cycle.len()];
                if next == 0 || next > degree {
                    return Err(PermError::PointOutOfRange {
                        point: next,
                        degree,
                    });
                }
                images[point - 1] = next - 1;
            }
        }
        Ok(Self { images })
    }

    /// Parses cycle notation such as `"(1,2)(3,4,5)"`. `"()"` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self, PermError> {
        let trimmed: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if trimmed.is_empty() || trimmed == "()" || trimmed == "id" {
            return Self::identity(degree);
        }
        let mut cycles = Vec::new();
        let mut rest = trimmed.as_str();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(PermError::Parse(text.to_string()));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| PermError::Parse(text.to_string()))?;
            let inner = &rest[1..close];
            if !inner.is_empty() {
                let cycle: Result<Vec<usize>, _> = inner
                    .split(',')
                    .map(|tok| {
                        tok.parse::<usize>()
                            .map_err(|_| PermError::Parse(text.to_string()))
                    })
                    .collect();
                cycles.push(cycle?);
            }
            rest = &rest[close + 1..];
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// Left-to-right composition: the result applies `self`, then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Self {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Self { images }
    }

    /// `self` composed with itself `k` times; `pow(0)` is the identity.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self {
            images: (0..self.degree()).collect(),
        };
        for _ in 0..k {
            acc = acc.compose(self).expect("equal degrees");
        }
        acc
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut ord = 1;
        while !acc.is_identity() {
            acc = acc.compose(self).expect("equal degrees");
            ord += 1;
        }
        ord
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Disjoint cycle decomposition with 1-based points; fixed points omitted,
    /// each cycle starting at its smallest point, cycles sorted by first point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    /// Canonical cycle-notation string, e.g. `"(1,2)(3,4,5)"`; identity is `"()"`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| format!("({})", c.iter().map(|p| p.to_string()).join(",")))
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Symmetric,
    Alternating,
    Cyclic,
}

/// A fully enumerated group: elements in canonical order (lexicographic by
/// image list), identity first, with an index for O(1) membership lookups.
#[derive(Debug, Clone)]
pub struct GroupElements {
    kind: GroupKind,
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl GroupElements {
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }
}

pub fn enumerate(kind: GroupKind, degree: usize) -> Result<GroupElements, PermError> {
    enumerate_with_limit(kind, degree, DEFAULT_FACTORIAL_DEGREE_LIMIT)
}

pub fn enumerate_with_limit(
    kind: GroupKind,
    degree: usize,
    limit: usize,
) -> Result<GroupElements, PermError> {
    if degree == 0 {
        return Err(PermError::ZeroDegree);
    }
    let elements: Vec<Permutation> = match kind {
        GroupKind::Symmetric | GroupKind::Alternating => {
            if degree > limit {
                return Err(PermError::BudgetExceeded { degree, limit });
            }
            (0..degree)
                .permutations(degree)
                .map(|images| Permutation { images })
                .filter(|p| kind == GroupKind::Symmetric || p.is_even())
                .collect()
        }
        GroupKind::Cyclic => (0..degree)
            .map(|c| Permutation {
                images: (0..degree).map(|i| (i + c) % degree).collect(),
            })
            .collect(),
    };
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    Ok(GroupElements {
        kind,
        degree,
        elements,
        index,
    })
}

/// Which subgroup a coset decomposition is taken against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupSpec {
    /// The cyclic subgroup generated by the given element.
    CyclicGenerated,
    /// The stabilizer of the last point of the ambient group.
    LastPointStabilizer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetSide {
    Left,
    Right,
}

/// Decomposes `ambient` into cosets of the selected subgroup.
///
/// For `CyclicGenerated` each coset is listed in cycle order
/// `[g, g·tau, g·tau², ...]` from its minimal representative, and cosets are
/// ordered by minimal representative (so the principal coset comes first).
///
/// For `LastPointStabilizer` the cosets are labeled `H, H·tau, H·tau², ...`
/// in power order, followed by any remainder cosets in canonical order; the
/// elements inside each coset keep the subgroup's canonical order translated.
pub fn coset_decompose(
    ambient: &GroupElements,
    tau: &Permutation,
    subgroup: SubgroupSpec,
    side: CosetSide,
) -> Result<Vec<Vec<Permutation>>, PermError> {
    if !ambient.contains(tau) {
        return Err(PermError::NotInGroup(tau.cycle_string()));
    }
    match subgroup {
        SubgroupSpec::CyclicGenerated => {
            let ord = tau.order();
            let mut assigned = vec![false; ambient.len()];
            let mut cosets = Vec::new();
            for start in 0..ambient.len() {
                if assigned[start] {
                    continue;
                }
                let mut coset = Vec::with_capacity(ord);
                let mut cur = ambient.element(start).clone();
                for _ in 0..ord {
                    let idx = ambient
                        .index_of(&cur)
                        .ok_or_else(|| PermError::NotInGroup(cur.cycle_string()))?;
                    assigned[idx] = true;
                    coset.push(cur.clone());
                    cur = match side {
                        CosetSide::Left => cur.compose(tau)?,
                        CosetSide::Right => tau.compose(&cur)?,
                    };
                }
                cosets.push(coset);
            }
            Ok(cosets)
        }
        SubgroupSpec::LastPointStabilizer => {
            let last = ambient.degree() - 1;
            let stab: Vec<Permutation> = ambient
                .elements()
                .iter()
                .filter(|p| p.apply(last) == last)
                .cloned()
                .collect();
            let translate = |g: &Permutation, t: &Permutation| -> Result<Permutation, PermError> {
                match side {
                    CosetSide::Right => g.compose(t),
                    CosetSide::Left => t.compose(g),
                }
            };
            let mut remaining: Vec<bool> = vec![true; ambient.len()];
            let mut cosets: Vec<Vec<Permutation>> = Vec::new();
            let mut power = Permutation::identity(ambient.degree())?;
            let ord = tau.order();
            for _ in 0..ord {
                let probe = translate(&stab[0], &power)?;
                let probe_idx = ambient
                    .index_of(&probe)
                    .ok_or_else(|| PermError::NotInGroup(probe.cycle_string()))?;
                if remaining[probe_idx] {
                    let coset: Result<Vec<Permutation>, PermError> =
                        stab.iter().map(|g| translate(g, &power)).collect();
                    let coset = coset?;
                    for p in &coset {
                        let i = ambient.index_of(p).expect("coset inside ambient");
                        remaining[i] = false;
                    }
                    cosets.push(coset);
                }
                power = power.compose(tau)?;
            }
            // Remainder cosets (if the powers of tau do not exhaust the index),
            // grouped by the image of the last point, in canonical order.
            for i in 0..ambient.len() {
                if !remaining[i] {
                    continue;
                }
                let rep = ambient.element(i).clone();
                let coset: Result<Vec<Permutation>, PermError> = stab
                    .iter()
                    .map(|g| match side {
                        CosetSide::Right => g.compose(&rep),
                        CosetSide::Left => rep.compose(g),
                    })
                    .collect();
                let coset = coset?;
                for p in &coset {
                    let j = ambient.index_of(p).expect("coset inside ambient");
                    remaining[j] = false;
                }
                cosets.push(coset);
            }
            Ok(cosets)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    #[test]
    fn from_cycles_transposition() {
        let p = Permutation::from_cycles(4, &[vec![1, 2]]).unwrap();
        assert_eq!(p.images(), &[1, 0, 2, 3]);
    }

    #[test]
    fn from_cycles_three_cycle() {
        let p = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(p.images(), &[1, 2, 0]);
    }

    #[test]
    fn from_cycles_disjoint_product() {
        // (1,2)(3,4,5): 1<->2, 3->4->5->3. Images derived by hand.
        let p = Permutation::from_cycles(5, &[vec![1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 4, 2]);
    }

    #[test]
    fn from_cycles_rejects_repeats_and_range() {
        assert_eq!(
            Permutation::from_cycles(4, &[vec![1, 2], vec![2, 3]]),
            Err(PermError::RepeatedPoint(2))
        );
        assert_eq!(
            Permutation::from_cycles(3, &[vec![1, 4]]),
            Err(PermError::PointOutOfRange {
                point: 4,
                degree: 3
            })
        );
    }

    #[test]
    fn compose_involution_is_identity() {
        let t = perm(3, "(1,2)");
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn compose_three_cycle_squared() {
        // (1,2,3)(1,2,3) = (1,3,2)
        let c = perm(3, "(1,2,3)");
        assert_eq!(c.compose(&c).unwrap(), perm(3, "(1,3,2)"));
    }

    #[test]
    fn compose_full_cycle_with_reverse() {
        for n in 3..7 {
            let fwd: Vec<usize> = (1..=n).collect();
            let mut rev = vec![1];
            rev.extend((2..=n).rev());
            let a = Permutation::from_cycles(n, &[fwd]).unwrap();
            let b = Permutation::from_cycles(n, &[rev]).unwrap();
            assert!(a.compose(&b).unwrap().is_identity());
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(perm(3, "(1,2,3)").inverse(), perm(3, "(1,3,2)"));
        assert_eq!(perm(2, "(1,2)").inverse(), perm(2, "(1,2)"));
        assert!(Permutation::identity(5).unwrap().inverse().is_identity());
    }

    #[test]
    fn enumerate_sizes() {
        assert_eq!(enumerate(GroupKind::Symmetric, 3).unwrap().len(), 6);
        assert_eq!(enumerate(GroupKind::Alternating, 4).unwrap().len(), 12);
        assert_eq!(enumerate(GroupKind::Alternating, 5).unwrap().len(), 60);
        assert_eq!(enumerate(GroupKind::Cyclic, 7).unwrap().len(), 7);
    }

    #[test]
    fn enumerate_identity_first_and_budget() {
        let s4 = enumerate(GroupKind::Symmetric, 4).unwrap();
        assert!(s4.element(0).is_identity());
        assert!(matches!(
            enumerate(GroupKind::Symmetric, 9),
            Err(PermError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn enumerate_closed_under_composition_spot() {
        let a4 = enumerate(GroupKind::Alternating, 4).unwrap();
        for i in (0..a4.len()).step_by(3) {
            for j in (0..a4.len()).step_by(4) {
                let c = a4.element(i).compose(a4.element(j)).unwrap();
                assert!(a4.contains(&c));
                assert!(a4.contains(&a4.element(i).inverse()));
            }
        }
    }

    #[test]
    fn coset_decompose_cyclic_s3() {
        let s3 = enumerate(GroupKind::Symmetric, 3).unwrap();
        let sigma = perm(3, "(1,2,3)");
        let cosets =
            coset_decompose(&s3, &sigma, SubgroupSpec::CyclicGenerated, CosetSide::Left).unwrap();
        assert_eq!(cosets.len(), 2);
        assert!(cosets.iter().all(|c| c.len() == 3));
        assert!(cosets[0][0].is_identity());
    }

    #[test]
    fn coset_decompose_stabilizer_a5() {
        let a5 = enumerate(GroupKind::Alternating, 5).unwrap();
        let tau = perm(5, "(1,2,3,4,5)");
        let cosets = coset_decompose(
            &a5,
            &tau,
            SubgroupSpec::LastPointStabilizer,
            CosetSide::Right,
        )
        .unwrap();
        assert_eq!(cosets.len(), 5);
        assert!(cosets.iter().all(|c| c.len() == 12));
        // Partition check.
        let mut seen = std::collections::HashSet::new();
        for c in &cosets {
            for p in c {
                assert!(seen.insert(p.clone()));
            }
        }
        assert_eq!(seen.len(), 60);
    }

    #[test]
    fn coset_decompose_stabilizer_a6_with_remainder() {
        let a6 = enumerate(GroupKind::Alternating, 6).unwrap();
        let tau = perm(6, "(2,3,4,5,6)");
        let cosets = coset_decompose(
            &a6,
            &tau,
            SubgroupSpec::LastPointStabilizer,
            CosetSide::Right,
        )
        .unwrap();
        assert_eq!(cosets.len(), 6);
        assert!(cosets.iter().all(|c| c.len() == 60));
        // The tau-power cosets are labeled by the image of the last point:
        // power i sends 6 to i+1 for i >= 1.
        for (i, coset) in cosets.iter().enumerate().take(5) {
            let expect = if i == 0 { 5 } else { i };
            assert!(coset.iter().all(|p| p.apply(5) == expect));
        }
        // The remainder coset consists of the elements sending the last point
        // to 1, and equals the stabilizer translated by (1,3,4,5,6).
        let rho = perm(6, "(1,3,4,5,6)");
        assert!(cosets[5].iter().all(|p| p.apply(5) == 0));
        let stab_translated: std::collections::HashSet<Permutation> = a6
            .elements()
            .iter()
            .filter(|p| p.apply(5) == 5)
            .map(|p| p.compose(&rho).unwrap())
            .collect();
        let remainder: std::collections::HashSet<Permutation> = cosets[5].iter().cloned().collect();
        assert_eq!(stab_translated, remainder);
    }

    #[test]
    fn cycle_string_round_trip() {
        let p = perm(6, "(1,2)(3,4,5)");
        assert_eq!(p.cycle_string(), "(1,2)(3,4,5)");
        assert_eq!(Permutation::parse_cycles(6, &p.cycle_string()).unwrap(), p);
        assert_eq!(Permutation::identity(4).unwrap().cycle_string(), "()");
    }
}
