//! Coloring data model, proper-coloring verifiers, the conformability
//! checker, and the total-color-matrix CSV format.
//!
//! Colors are opaque positive integers; the verifiers never assume they are
//! contiguous. Every improper verdict carries a witness naming the clashing
//! pair of elements.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChromaError {
    #[error("coloring has {got} entries for a graph on {want} vertices")]
    LengthMismatch { got: usize, want: usize },
    #[error("color 0 is not a valid color (colors are positive)")]
    ZeroColor,
    #[error("edge coloring domain does not match the edge set at {0:?}")]
    DomainMismatch((usize, usize)),
    #[error("matrix entry ({i},{j}) = {a} conflicts with ({j},{i}) = {b}")]
    AsymmetricEntry { i: usize, j: usize, a: u32, b: u32 },
    #[error("matrix is missing the diagonal entry for vertex {0}")]
    MissingDiagonal(usize),
    #[error("matrix has entry ({0},{1}) but the graph has no such edge")]
    EntryOffEdge(usize, usize),
    #[error("matrix is missing the entry for edge ({0},{1})")]
    MissingEdge(usize, usize),
    #[error("conformability is defined here for regular graphs only")]
    NotRegular,
    #[error("malformed matrix CSV at line {line}: {msg}")]
    Csv { line: usize, msg: String },
}

/// One color per vertex, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexColoring {
    pub colors: Vec<u32>,
}

impl VertexColoring {
    pub fn new(colors: Vec<u32>) -> Result<Self, ChromaError> {
        if colors.iter().any(|&c| c == 0) {
            return Err(ChromaError::ZeroColor);
        }
        Ok(Self { colors })
    }

    pub fn distinct_colors(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// A map from edges (stored with `i < j`) to colors. Serialized as a list
/// of `[i, j, color]` triples so the JSON form has no tuple keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<(usize, usize, u32)>", from = "Vec<(usize, usize, u32)>")]
pub struct EdgeColoring {
    pub colors: BTreeMap<(usize, usize), u32>,
}

impl From<EdgeColoring> for Vec<(usize, usize, u32)> {
    fn from(ec: EdgeColoring) -> Self {
        ec.colors.into_iter().map(|((a, b), c)| (a, b, c)).collect()
    }
}

impl From<Vec<(usize, usize, u32)>> for EdgeColoring {
    fn from(list: Vec<(usize, usize, u32)>) -> Self {
        let mut ec = EdgeColoring::new();
        for (a, b, c) in list {
            ec.set(a, b, c);
        }
        ec
    }
}

impl EdgeColoring {
    pub fn new() -> Self {
        Self {
            colors: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, a: usize, b: usize, color: u32) {
        self.colors.insert((a.min(b), a.max(b)), color);
    }

    pub fn get(&self, a: usize, b: usize) -> Option<u32> {
        self.colors.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn distinct_colors(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.values().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

impl Default for EdgeColoring {
    fn default() -> Self {
        Self::new()
    }
}

/// Symmetric partial matrix encoding of a total coloring: diagonal entries
/// are vertex colors, off-diagonal entries are edge colors, absent entries
/// are non-edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TotalColorMatrixWire", from = "TotalColorMatrixWire")]
pub struct TotalColorMatrix {
    n: usize,
    entries: BTreeMap<(usize, usize), u32>,
}

#[derive(Serialize, Deserialize)]
struct TotalColorMatrixWire {
    n: usize,
    entries: Vec<(usize, usize, u32)>,
}

impl From<TotalColorMatrix> for TotalColorMatrixWire {
    fn from(m: TotalColorMatrix) -> Self {
        TotalColorMatrixWire {
            n: m.n,
            entries: m.entries.into_iter().map(|((a, b), c)| (a, b, c)).collect(),
        }
    }
}

impl From<TotalColorMatrixWire> for TotalColorMatrix {
    fn from(w: TotalColorMatrixWire) -> Self {
        let mut m = TotalColorMatrix::new(w.n);
        for (a, b, c) in w.entries {
            m.entries.insert((a.min(b), a.max(b)), c);
        }
        m
    }
}

impl TotalColorMatrix {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_parts(
        vertices: &VertexColoring,
        edges: &EdgeColoring,
    ) -> Result<Self, ChromaError> {
        let n = vertices.colors.len();
        let mut m = Self::new(n);
        for (v, &c) in vertices.colors.iter().enumerate() {
            m.set_vertex(v, c);
        }
        for (&(a, b), &c) in &edges.colors {
            if a >= n || b >= n {
                return Err(ChromaError::LengthMismatch {
                    got: a.max(b),
                    want: n,
                });
            }
            m.set_edge(a, b, c);
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set_vertex(&mut self, v: usize, color: u32) {
        self.entries.insert((v, v), color);
    }

    pub fn set_edge(&mut self, a: usize, b: usize, color: u32) {
        self.entries.insert((a.min(b), a.max(b)), color);
    }

    pub fn vertex(&self, v: usize) -> Option<u32> {
        self.entries.get(&(v, v)).copied()
    }

    pub fn edge(&self, a: usize, b: usize) -> Option<u32> {
        self.entries.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn vertex_coloring(&self) -> Result<VertexColoring, ChromaError> {
        let colors: Result<Vec<u32>, ChromaError> = (0..self.n)
            .map(|v| self.vertex(v).ok_or(ChromaError::MissingDiagonal(v)))
            .collect();
        VertexColoring::new(colors?)
    }

    pub fn edge_coloring(&self) -> EdgeColoring {
        let mut ec = EdgeColoring::new();
        for (&(a, b), &c) in &self.entries {
            if a != b {
                ec.set(a, b, c);
            }
        }
        ec
    }

    pub fn distinct_colors(&self) -> usize {
        let mut seen: Vec<u32> = self.entries.values().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Serializes the full symmetric grid: a header row and column of vertex
    /// indices, blank cells for non-edges.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&(0..self.n).fold(String::new(), |acc, i| format!("{acc},{i}")));
        out.push('\n');
        for i in 0..self.n {
            out.push_str(&i.to_string());
            for j in 0..self.n {
                out.push(',');
                if let Some(c) = self
                    .edge(i, j)
                    .or(if i == j { self.vertex(i) } else { None })
                {
                    out.push_str(&c.to_string());
                }
            }
            out.push('\n');
        }
        out
    }

    /// Parses the CSV grid form, completing symmetric entries and rejecting
    /// conflicting ones.
    pub fn from_csv(text: &str) -> Result<Self, ChromaError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(ChromaError::Csv {
            line: 1,
            msg: "empty file".into(),
        })?;
        let n = header.split(',').count() - 1;
        let mut matrix = Self::new(n);
        let mut rows_seen = 0usize;
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let cells: Vec<&str> = line.split(',').collect();
            if cells.len() != n + 1 {
                return Err(ChromaError::Csv {
                    line: lineno,
                    msg: format!("expected {} cells, found {}", n + 1, cells.len()),
                });
            }
            let i: usize = cells[0].trim().parse().map_err(|_| ChromaError::Csv {
                line: lineno,
                msg: format!("bad row index {:?}", cells[0]),
            })?;
            if i >= n {
                return Err(ChromaError::Csv {
                    line: lineno,
                    msg: format!("row index {i} out of range"),
                });
            }
            rows_seen += 1;
            for (j, cell) in cells[1..].iter().enumerate() {
                let cell = cell.trim();
                if cell.is_empty() {
                    continue;
                }
                let value: u32 = cell.parse().map_err(|_| ChromaError::Csv {
                    line: lineno,
                    msg: format!("bad cell {cell:?}"),
                })?;
                let key = (i.min(j), i.max(j));
                match matrix.entries.get(&key) {
                    Some(&prev) if prev != value => {
                        return Err(ChromaError::AsymmetricEntry {
                            i: key.0,
                            j: key.1,
                            a: prev,
                            b: value,
                        })
                    }
                    _ => {
                        matrix.entries.insert(key, value);
                    }
                }
            }
        }
        if rows_seen != n {
            return Err(ChromaError::Csv {
                line: 1,
                msg: format!("expected {n} rows, found {rows_seen}"),
            });
        }
        Ok(matrix)
    }
}

/// Which of the two elements of a clash witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColoredElement {
    Vertex(usize),
    Edge(usize, usize),
}

/// How the number of colors used relates to the relevant degree bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundClass {
    /// Total coloring with Delta + 1 colors.
    TypeI,
    /// Total coloring with Delta + 2 colors.
    TypeII,
    /// Total coloring with more than Delta + 2 colors.
    BeyondTcc,
    /// Edge coloring with Delta colors.
    ClassI,
    /// Edge coloring with Delta + 1 colors.
    ClassII,
    /// Edge coloring with more than Delta + 1 colors.
    BeyondVizing,
    NotApplicable,
}

/// Verifier verdict: properness, color count, bound classification, and a
/// witness for the first clash when improper.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoringReport {
    pub proper: bool,
    pub colors_used: usize,
    pub bound_class: BoundClass,
    pub witness: Option<(ColoredElement, ColoredElement)>,
}

impl ColoringReport {
    fn improper(colors_used: usize, a: ColoredElement, b: ColoredElement) -> Self {
        ColoringReport {
            proper: false,
            colors_used,
            bound_class: BoundClass::NotApplicable,
            witness: Some((a, b)),
        }
    }
}

/// Checks that no edge is monochromatic.
pub fn verify_vertex(g: &Graph, c: &VertexColoring) -> Result<ColoringReport, ChromaError> {
    if c.colors.len() != g.n() {
        return Err(ChromaError::LengthMismatch {
            got: c.colors.len(),
            want: g.n(),
        });
    }
    let colors_used = c.distinct_colors();
    for &(a, b) in g.edges() {
        if c.colors[a] == c.colors[b] {
            return Ok(ColoringReport::improper(
                colors_used,
                ColoredElement::Vertex(a),
                ColoredElement::Vertex(b),
            ));
        }
    }
    Ok(ColoringReport {
        proper: true,
        colors_used,
        bound_class: BoundClass::NotApplicable,
        witness: None,
    })
}

/// Checks that no two incident edges share a color; classifies the count
/// against Delta and Delta + 1.
pub fn verify_edge(g: &Graph, ec: &EdgeColoring) -> Result<ColoringReport, ChromaError> {
    for &(a, b) in g.edges() {
        if ec.get(a, b).is_none() {
            return Err(ChromaError::DomainMismatch((a, b)));
        }
    }
    for &key in ec.colors.keys() {
        if !g.has_edge(key.0, key.1) {
            return Err(ChromaError::DomainMismatch(key));
        }
    }
    let colors_used = ec.distinct_colors();
    for v in 0..g.n() {
        let nbrs = g.neighbors(v);
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                if ec.get(v, x) == ec.get(v, y) {
                    return Ok(ColoringReport::improper(
                        colors_used,
                        ColoredElement::Edge(v.min(x), v.max(x)),
                        ColoredElement::Edge(v.min(y), v.max(y)),
                    ));
                }
            }
        }
    }
    let delta = g.max_degree();
    let bound_class = if colors_used <= delta {
        BoundClass::ClassI
    } else if colors_used == delta + 1 {
        BoundClass::ClassII
    } else {
        BoundClass::BeyondVizing
    };
    Ok(ColoringReport {
        proper: true,
        colors_used,
        bound_class,
        witness: None,
    })
}

/// Checks the three total-coloring constraints: adjacent vertices differ,
/// incident edges differ, and each edge differs from both endpoints.
pub fn verify_total(g: &Graph, m: &TotalColorMatrix) -> Result<ColoringReport, ChromaError> {
    if m.n() != g.n() {
        return Err(ChromaError::LengthMismatch {
            got: m.n(),
            want: g.n(),
        });
    }
    for v in 0..g.n() {
        if m.vertex(v).is_none() {
            return Err(ChromaError::MissingDiagonal(v));
        }
    }
    for &(a, b) in g.edges() {
        if m.edge(a, b).is_none() {
            return Err(ChromaError::MissingEdge(a, b));
        }
    }
    for &(a, b) in m.entries.keys() {
        if a != b && !g.has_edge(a, b) {
            return Err(ChromaError::EntryOffEdge(a, b));
        }
    }

    let colors_used = m.distinct_colors();
    for &(a, b) in g.edges() {
        if m.vertex(a) == m.vertex(b) {
            return Ok(ColoringReport::improper(
                colors_used,
                ColoredElement::Vertex(a),
                ColoredElement::Vertex(b),
            ));
        }
        let e = m.edge(a, b);
        if e == m.vertex(a) {
            return Ok(ColoringReport::improper(
                colors_used,
                ColoredElement::Edge(a, b),
                ColoredElement::Vertex(a),
            ));
        }
        if e == m.vertex(b) {
            return Ok(ColoringReport::improper(
                colors_used,
                ColoredElement::Edge(a, b),
                ColoredElement::Vertex(b),
            ));
        }
    }
    for v in 0..g.n() {
        let nbrs = g.neighbors(v);
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                if m.edge(v, x) == m.edge(v, y) {
                    return Ok(ColoringReport::improper(
                        colors_used,
                        ColoredElement::Edge(v.min(x), v.max(x)),
                        ColoredElement::Edge(v.min(y), v.max(y)),
                    ));
                }
            }
        }
    }
    let delta = g.max_degree();
    let bound_class = if colors_used <= delta + 1 {
        BoundClass::TypeI
    } else if colors_used == delta + 2 {
        BoundClass::TypeII
    } else {
        BoundClass::BeyondTcc
    };
    Ok(ColoringReport {
        proper: true,
        colors_used,
        bound_class,
        witness: None,
    })
}

/// Conformability verdict for a regular graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConformableReport {
    pub conformable: bool,
    /// Class count frame: Delta + 1, empty classes included.
    pub classes: usize,
    pub class_sizes: Vec<usize>,
    pub proper: bool,
    pub parity_ok: bool,
}

/// True iff `c` is a proper coloring into exactly Delta + 1 classes (empty
/// classes permitted and counted) with every class size congruent to the
/// vertex count mod 2. Rejects non-regular graphs.
pub fn verify_conformable(g: &Graph, c: &VertexColoring) -> Result<ConformableReport, ChromaError> {
    let degree = g.max_degree();
    if !g.is_regular(degree) {
        return Err(ChromaError::NotRegular);
    }
    if c.colors.len() != g.n() {
        return Err(ChromaError::LengthMismatch {
            got: c.colors.len(),
            want: g.n(),
        });
    }
    let classes = degree + 1;
    // Colors must be drawn from 1..=classes so empty classes are well defined.
    let in_frame = c.colors.iter().all(|&col| (col as usize) <= classes);
    let mut class_sizes = vec![0usize; classes];
    if in_frame {
        for &col in &c.colors {
            class_sizes[col as usize - 1] += 1;
        }
    }
    let proper = verify_vertex(g, c)?.proper;
    let parity_ok = in_frame && class_sizes.iter().all(|&s| s % 2 == g.n() % 2);
    Ok(ConformableReport {
        conformable: proper && parity_ok && in_frame,
        classes,
        class_sizes,
        proper,
        parity_ok,
    })
}
