//! Pentagonal cylinder chains `P_n` and pentagonal Möbius chains `P'_n`.
//!
//! Vertex layout (0-based, fixed so serialized artifacts are comparable):
//!
//! | ids              | labels          | role   |
//! |------------------|-----------------|--------|
//! | `0 .. 2n`        | `1 .. 2n`       | upper  |
//! | `2n .. 4n`       | `1' .. 2n'`     | lower  |
//! | `4n .. 5n`       | `~1 .. ~n`      | middle |
//!
//! Block `i` (1-based) is the pentagon `2i-1, 2i, ~i, 2i', (2i-1)'`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainFamily {
    Cylinder,
    Mobius,
}

impl ChainFamily {
    pub const ALL: [ChainFamily; 2] = [ChainFamily::Cylinder, ChainFamily::Mobius];

    pub fn as_str(self) -> &'static str {
        match self {
            ChainFamily::Cylinder => "cylinder",
            ChainFamily::Mobius => "mobius",
        }
    }

    /// `P_n` or `P'_n`.
    pub fn symbol(self, n: usize) -> String {
        match self {
            ChainFamily::Cylinder => format!("P_{n}"),
            ChainFamily::Mobius => format!("P'_{n}"),
        }
    }
}

impl fmt::Display for ChainFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ChainFamily {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "cylinder" => Ok(ChainFamily::Cylinder),
            "mobius" | "möbius" => Ok(ChainFamily::Mobius),
            other => Err(format!("unknown chain family {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Degree-based vertex typing used in the Gutman/Schultz counting argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexClass {
    /// Degree 3, no degree-2 neighbour (labels `1, 1', 3, 3', ...`).
    #[serde(rename = "a")]
    AType,
    /// Degree 3 with a degree-2 neighbour (labels `2, 2', 4, 4', ...`).
    #[serde(rename = "b")]
    BType,
    /// Degree 2 (labels `~1 .. ~n`).
    #[serde(rename = "c")]
    CType,
}

impl VertexClass {
    pub fn as_str(self) -> &'static str {
        match self {
            VertexClass::AType => "a",
            VertexClass::BType => "b",
            VertexClass::CType => "c",
        }
    }
}

/// Position of a vertex in the chain, with 1-based labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    Upper(usize),
    Lower(usize),
    Middle(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainGraph {
    n: usize,
    family: ChainFamily,
    adjacency: Vec<Vec<usize>>,
}

/// Build `P_n` (cylinder) or `P'_n` (Möbius). Rejects `n < 2`.
pub fn build_chain(n: usize, family: ChainFamily) -> Result<ChainGraph> {
    if n < 2 {
        return Err(Error::ChainTooShort(n));
    }
    let up = |i: usize| i - 1;
    let low = |i: usize| 2 * n + i - 1;
    let mid = |i: usize| 4 * n + i - 1;

    let mut edges = Vec::with_capacity(7 * n);
    for i in 1..=n {
        let (odd, even) = (2 * i - 1, 2 * i);
        edges.push((up(odd), low(odd)));
        edges.push((up(odd), up(even)));
        edges.push((up(even), mid(i)));
        edges.push((mid(i), low(even)));
        edges.push((low(even), low(odd)));
        if i < n {
            edges.push((up(even), up(even + 1)));
            edges.push((low(even), low(even + 1)));
        }
    }
    match family {
        ChainFamily::Cylinder => {
            edges.push((up(2 * n), up(1)));
            edges.push((low(2 * n), low(1)));
        }
        ChainFamily::Mobius => {
            edges.push((up(2 * n), low(1)));
            edges.push((low(2 * n), up(1)));
        }
    }

    let mut adjacency = vec![Vec::with_capacity(3); 5 * n];
    for (u, v) in edges {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    for nbrs in &mut adjacency {
        nbrs.sort_unstable();
        debug_assert!(nbrs.windows(2).all(|w| w[0] != w[1]), "multi-edge");
    }
    Ok(ChainGraph {
        n,
        family,
        adjacency,
    })
}

impl ChainGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> ChainFamily {
        self.family
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: VertexId) -> &[usize] {
        &self.adjacency[v.0]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.0].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u.0].binary_search(&v.0).is_ok()
    }

    /// Canonical `(min, max)` edge list in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count()).map(VertexId)
    }

    pub fn upper(&self, label: usize) -> VertexId {
        assert!((1..=2 * self.n).contains(&label), "upper label {label} out of range");
        VertexId(label - 1)
    }

    pub fn lower(&self, label: usize) -> VertexId {
        assert!((1..=2 * self.n).contains(&label), "lower label {label} out of range");
        VertexId(2 * self.n + label - 1)
    }

    pub fn middle(&self, label: usize) -> VertexId {
        assert!((1..=self.n).contains(&label), "middle label {label} out of range");
        VertexId(4 * self.n + label - 1)
    }

    pub fn role(&self, v: VertexId) -> VertexRole {
        let n = self.n;
        match v.0 {
            i if i < 2 * n => VertexRole::Upper(i + 1),
            i if i < 4 * n => VertexRole::Lower(i - 2 * n + 1),
            i => VertexRole::Middle(i - 4 * n + 1),
        }
    }

    pub fn vertex_of_role(&self, role: VertexRole) -> VertexId {
        match role {
            VertexRole::Upper(i) => self.upper(i),
            VertexRole::Lower(i) => self.lower(i),
            VertexRole::Middle(i) => self.middle(i),
        }
    }

    /// Human label: `"3"`, `"3'"` or `"~2"`.
    pub fn label(&self, v: VertexId) -> String {
        match self.role(v) {
            VertexRole::Upper(i) => i.to_string(),
            VertexRole::Lower(i) => format!("{i}'"),
            VertexRole::Middle(i) => format!("~{i}"),
        }
    }

    /// 1-based block index of a vertex.
    pub fn block_of(&self, v: VertexId) -> usize {
        match self.role(v) {
            VertexRole::Upper(i) | VertexRole::Lower(i) => i.div_ceil(2),
            VertexRole::Middle(i) => i,
        }
    }

    pub fn block_vertices(&self, block: usize) -> [VertexId; 5] {
        [
            self.upper(2 * block - 1),
            self.upper(2 * block),
            self.middle(block),
            self.lower(2 * block),
            self.lower(2 * block - 1),
        ]
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.vertex_count()
    }

    /// The same graph with vertex `v` renamed to `perm(v)`. Labels and roles
    /// keep referring to positions, so only adjacency moves.
    pub fn relabeled(&self, perm: &VertexPermutation) -> ChainGraph {
        assert_eq!(perm.len(), self.vertex_count(), "permutation size");
        let mut adjacency = vec![Vec::new(); self.vertex_count()];
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            let pu = perm.apply(VertexId(u)).0;
            adjacency[pu] = nbrs.iter().map(|&w| perm.apply(VertexId(w)).0).collect();
            adjacency[pu].sort_unstable();
        }
        ChainGraph {
            n: self.n,
            family: self.family,
            adjacency,
        }
    }

    /// Two-colouring attempt; pentagons make every chain non-bipartite.
    pub fn is_bipartite(&self) -> bool {
        let mut colour: Vec<Option<bool>> = vec![None; self.vertex_count()];
        for start in 0..self.vertex_count() {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].expect("coloured on push");
                for &w in &self.adjacency[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }
}

/// Classify a vertex from its degree and its neighbours' degrees.
pub fn vertex_class(g: &ChainGraph, v: VertexId) -> VertexClass {
    match g.degree(v) {
        2 => VertexClass::CType,
        _ if g.neighbors(v).iter().any(|&w| g.degree(VertexId(w)) == 2) => VertexClass::BType,
        _ => VertexClass::AType,
    }
}

/// A bijection on `0 .. 5n`, stored as the image of each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPermutation {
    image: Vec<usize>,
}

impl VertexPermutation {
    pub fn identity(len: usize) -> Self {
        VertexPermutation {
            image: (0..len).collect(),
        }
    }

    /// Fails unless `image` is a bijection on `0 .. image.len()`.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &v in &image {
            if v >= image.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::OutOfRange(format!("not a permutation: {image:?}")));
            }
        }
        Ok(VertexPermutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        VertexId(self.image[v.0])
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &VertexPermutation) -> VertexPermutation {
        VertexPermutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn fixed_points(&self) -> usize {
        self.image.iter().enumerate().filter(|&(i, &v)| i == v).count()
    }

    /// Cycle lengths, sorted ascending (fixed points included as 1-cycles).
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.image.len()];
        let mut lengths = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.image[v];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        lengths
    }

    /// `u ~ v ⇔ π(u) ~ π(v)`, checked over every vertex pair.
    pub fn is_automorphism_of(&self, g: &ChainGraph) -> bool {
        if self.image.len() != g.vertex_count() {
            return false;
        }
        let n = g.vertex_count();
        (0..n).all(|u| {
            (u + 1..n).all(|v| {
                g.has_edge(VertexId(u), VertexId(v))
                    == g.has_edge(self.apply(VertexId(u)), self.apply(VertexId(v)))
            })
        })
    }
}

/// The involution fixing every middle vertex and swapping `i ↔ i'`.
pub fn reflection_automorphism(g: &ChainGraph) -> VertexPermutation {
    let image = g
        .vertices()
        .map(|v| {
            let role = match g.role(v) {
                VertexRole::Upper(i) => VertexRole::Lower(i),
                VertexRole::Lower(i) => VertexRole::Upper(i),
                m @ VertexRole::Middle(_) => m,
            };
            g.vertex_of_role(role).0
        })
        .collect();
    VertexPermutation { image }
}

/// Rotation of `P'_n` by `k` blocks, `1 <= k <= n-1`.
///
/// Labels advance by `2k` (middle labels by `k`). A side label that runs
/// past `2n` wraps to the opposite side, which carries the twist of the
/// closure edges along with the rotation; without the swap the map is not
/// adjacency-preserving on the Möbius chain.
pub fn block_automorphism(g: &ChainGraph, k: usize) -> Result<VertexPermutation> {
    if g.family() != ChainFamily::Mobius {
        return Err(Error::WrongFamily {
            expected: ChainFamily::Mobius,
            got: g.family(),
        });
    }
    let n = g.n();
    if !(1..n).contains(&k) {
        return Err(Error::OutOfRange(format!("block shift k={k} not in 1..={}", n - 1)));
    }
    let shift = |i: usize| -> (usize, bool) {
        let j = i + 2 * k;
        if j > 2 * n {
            (j - 2 * n, true)
        } else {
            (j, false)
        }
    };
    let image = g
        .vertices()
        .map(|v| {
            let role = match g.role(v) {
                VertexRole::Upper(i) => match shift(i) {
                    (j, false) => VertexRole::Upper(j),
                    (j, true) => VertexRole::Lower(j),
                },
                VertexRole::Lower(i) => match shift(i) {
                    (j, false) => VertexRole::Lower(j),
                    (j, true) => VertexRole::Upper(j),
                },
                VertexRole::Middle(i) => VertexRole::Middle((i - 1 + k) % n + 1),
            };
            g.vertex_of_role(role).0
        })
        .collect();
    Ok(VertexPermutation { image })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeListJson,
    Dot,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ExportedVertex {
    pub id: usize,
    pub label: String,
    pub class: VertexClass,
}

/// Edge-list JSON document.
#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ExportedGraph {
    pub n: usize,
    pub family: ChainFamily,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub vertices: Vec<ExportedVertex>,
    pub edges: Vec<[usize; 2]>,
}

impl ExportedGraph {
    pub fn from_graph(g: &ChainGraph) -> Self {
        ExportedGraph {
            n: g.n(),
            family: g.family(),
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            vertices: g
                .vertices()
                .map(|v| ExportedVertex {
                    id: v.0,
                    label: g.label(v),
                    class: vertex_class(g, v),
                })
                .collect(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

pub fn export_graph(g: &ChainGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::EdgeListJson => {
            let mut s = serde_json::to_string_pretty(&ExportedGraph::from_graph(g))
                .expect("graph export is always serializable");
            s.push('\n');
            s
        }
        ExportFormat::Dot => {
            let mut s = format!("graph \"{}\" {{\n", g.family().symbol(g.n()));
            for v in g.vertices() {
                s.push_str(&format!(
                    "  {} [label=\"{}\", class=\"{}\"];\n",
                    v.0,
                    g.label(v),
                    vertex_class(g, v).as_str()
                ));
            }
            for (u, v) in g.edges() {
                s.push_str(&format!("  {u} -- {v};\n"));
            }
            s.push_str("}\n");
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_short_chains() {
        assert_eq!(build_chain(1, ChainFamily::Cylinder), Err(Error::ChainTooShort(1)));
        assert_eq!(build_chain(0, ChainFamily::Mobius), Err(Error::ChainTooShort(0)));
    }

    #[test]
    fn p2_counts() {
        let g = build_chain(2, ChainFamily::Cylinder).unwrap();
        let deg = g.degrees();
        assert_eq!(deg.iter().filter(|&&d| d == 3).count(), 8);
        assert_eq!(deg.iter().filter(|&&d| d == 2).count(), 2);
        assert_eq!(g.edge_count(), 14);
        assert_eq!(g.vertex_count(), 10);
    }

    #[test]
    fn mobius_three() {
        let g = build_chain(3, ChainFamily::Mobius).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (15, 21));
        assert!(g.is_connected());
    }

    #[test]
    fn mobius_closure_edges() {
        let g = build_chain(2, ChainFamily::Mobius).unwrap();
        assert!(g.has_edge(g.upper(4), g.lower(1)));
        assert!(g.has_edge(g.lower(4), g.upper(1)));
        assert!(!g.has_edge(g.upper(4), g.upper(1)));
        let c = build_chain(2, ChainFamily::Cylinder).unwrap();
        assert!(c.has_edge(c.upper(4), c.upper(1)));
        assert!(!c.has_edge(c.upper(4), c.lower(1)));
    }

    #[test]
    fn classes_on_p2() {
        let g = build_chain(2, ChainFamily::Cylinder).unwrap();
        assert_eq!(vertex_class(&g, g.upper(1)), VertexClass::AType);
        assert_eq!(vertex_class(&g, g.lower(3)), VertexClass::AType);
        assert_eq!(vertex_class(&g, g.upper(2)), VertexClass::BType);
        assert_eq!(vertex_class(&g, g.lower(4)), VertexClass::BType);
        assert_eq!(vertex_class(&g, g.middle(1)), VertexClass::CType);
    }

    #[test]
    fn reflection_on_p2() {
        let g = build_chain(2, ChainFamily::Cylinder).unwrap();
        let r = reflection_automorphism(&g);
        assert_eq!(r.fixed_points(), 2);
        assert_eq!(r.cycle_type(), vec![1, 1, 2, 2, 2, 2]);
        assert!(r.compose(&r).is_identity());
        assert!(r.is_automorphism_of(&g));
    }

    #[test]
    fn reflection_on_mobius_has_order_two() {
        let g = build_chain(3, ChainFamily::Mobius).unwrap();
        let r = reflection_automorphism(&g);
        assert!(r.is_automorphism_of(&g));
        assert!(!r.is_identity());
        assert!(r.compose(&r).is_identity());
    }

    #[test]
    fn block_rotation_maps_block_one_to_block_two() {
        let g = build_chain(2, ChainFamily::Mobius).unwrap();
        let pi = block_automorphism(&g, 1).unwrap();
        assert!(pi.is_automorphism_of(&g));
        for v in g.block_vertices(1) {
            assert_eq!(g.block_of(pi.apply(v)), 2);
        }
    }

    #[test]
    fn literal_label_shift_is_not_a_mobius_automorphism() {
        // shifting labels by 2k without swapping sides breaks the twisted closure
        let g = build_chain(2, ChainFamily::Mobius).unwrap();
        let image = g
            .vertices()
            .map(|v| {
                let role = match g.role(v) {
                    VertexRole::Upper(i) => VertexRole::Upper((i + 1) % 4 + 1),
                    VertexRole::Lower(i) => VertexRole::Lower((i + 1) % 4 + 1),
                    VertexRole::Middle(i) => VertexRole::Middle(i % 2 + 1),
                };
                g.vertex_of_role(role).0
            })
            .collect();
        let shift = VertexPermutation::from_image(image).unwrap();
        assert!(!shift.is_automorphism_of(&g));
    }

    #[test]
    fn block_rotation_is_bijective() {
        let g = build_chain(3, ChainFamily::Mobius).unwrap();
        let pi = block_automorphism(&g, 2).unwrap();
        assert!(VertexPermutation::from_image(pi.image().to_vec()).is_ok());
        assert_eq!(pi.len(), 15);
    }

    #[test]
    fn block_rotation_rejects_cylinder_and_bad_shift() {
        let c = build_chain(3, ChainFamily::Cylinder).unwrap();
        assert!(matches!(block_automorphism(&c, 1), Err(Error::WrongFamily { .. })));
        let m = build_chain(3, ChainFamily::Mobius).unwrap();
        assert!(block_automorphism(&m, 0).is_err());
        assert!(block_automorphism(&m, 3).is_err());
    }

    #[test]
    fn json_export() {
        let g = build_chain(2, ChainFamily::Cylinder).unwrap();
        let doc: serde_json::Value =
            serde_json::from_str(&export_graph(&g, ExportFormat::EdgeListJson)).unwrap();
        assert_eq!(doc["edge_count"], 14);
        assert_eq!(doc["family"], "cylinder");
        assert_eq!(doc["vertices"][4]["label"], "1'");
        assert_eq!(doc["vertices"][8]["class"], "c");
    }

    #[test]
    fn json_export_has_mobius_closure() {
        let g = build_chain(2, ChainFamily::Mobius).unwrap();
        let doc: ExportedGraph =
            serde_json::from_str(&export_graph(&g, ExportFormat::EdgeListJson)).unwrap();
        let (a, b) = (g.upper(4).0, g.lower(1).0);
        assert!(doc.edges.contains(&[a.min(b), a.max(b)]));
        assert!(doc.edges.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn dot_export_edge_statements() {
        let g = build_chain(2, ChainFamily::Cylinder).unwrap();
        let dot = export_graph(&g, ExportFormat::Dot);
        assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 14);
        assert!(dot.contains("label=\"~1\""));
        assert!(dot.starts_with("graph \"P_2\" {"));
    }

    #[test]
    fn family_parsing() {
        assert_eq!("Mobius".parse::<ChainFamily>(), Ok(ChainFamily::Mobius));
        assert!("torus".parse::<ChainFamily>().is_err());
    }
}
