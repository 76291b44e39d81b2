//! Quivers, paths, elements of the path algebra KQ, and presentations KQ/I.
//!
//! Paths are stored in traversal order: the first-traversed arrow comes
//! first in the word. `compose(p, q)` is "p then q" and is defined exactly
//! when the target of `p` equals the source of `q`; the zero product is the
//! value `None`, not an error.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

pub type VertexId = usize;
pub type ArrowId = usize;

/// A vertex or an arrow, for base-order bookkeeping.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Item {
    Vertex(VertexId),
    Arrow(ArrowId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite directed multigraph with named vertices and arrows.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Quiver {
    vertex_names: Vec<String>,
    arrows: Vec<Arrow>,
    lookup: BTreeMap<String, Item>,
}

impl Quiver {
    pub fn new() -> Quiver {
        Quiver::default()
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId> {
        if self.lookup.contains_key(name) {
            return Err(Error::DuplicateId(name.to_string()));
        }
        let id = self.vertex_names.len();
        self.vertex_names.push(name.to_string());
        self.lookup.insert(name.to_string(), Item::Vertex(id));
        Ok(id)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<ArrowId> {
        if self.lookup.contains_key(name) {
            return Err(Error::DuplicateId(name.to_string()));
        }
        let s = self.vertex(source)?;
        let t = self.vertex(target)?;
        let id = self.arrows.len();
        self.arrows.push(Arrow {
            name: name.to_string(),
            source: s,
            target: t,
        });
        self.lookup.insert(name.to_string(), Item::Arrow(id));
        Ok(id)
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        match self.lookup.get(name) {
            Some(Item::Vertex(v)) => Ok(*v),
            _ => Err(Error::UnknownId(name.to_string())),
        }
    }

    pub fn arrow_id(&self, name: &str) -> Result<ArrowId> {
        match self.lookup.get(name) {
            Some(Item::Arrow(a)) => Ok(*a),
            _ => Err(Error::UnknownId(name.to_string())),
        }
    }

    pub fn item(&self, name: &str) -> Result<Item> {
        self.lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownId(name.to_string()))
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn trivial_path(&self, v: VertexId) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow_path(&self, a: ArrowId) -> Path {
        let arr = &self.arrows[a];
        Path {
            source: arr.source,
            target: arr.target,
            arrows: vec![a],
        }
    }

    /// Path from consecutive arrows in traversal order; `None` if they do
    /// not compose.
    pub fn path_from_arrows(&self, arrows: &[ArrowId]) -> Option<Path> {
        if arrows.is_empty() {
            return None;
        }
        for w in arrows.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return None;
            }
        }
        Some(Path {
            source: self.arrows[arrows[0]].source,
            target: self.arrows[*arrows.last().unwrap()].target,
            arrows: arrows.to_vec(),
        })
    }

    pub fn path_display(&self, p: &Path) -> String {
        if p.is_trivial() {
            self.vertex_names[p.source].clone()
        } else {
            p.arrows
                .iter()
                .map(|a| self.arrows[*a].name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A path in the quiver: either a trivial path at a vertex or a nonempty
/// composable arrow word in traversal order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    /// True when this path is a loop: length 1 with equal endpoints.
    pub fn is_loop_arrow(&self) -> bool {
        self.arrows.len() == 1 && self.source == self.target
    }

    /// Replace `len` arrows starting at `pos` by the arrows of `mid`.
    /// The caller guarantees `mid` is parallel to the removed factor, so
    /// the endpoints of the spliced word are unchanged.
    pub fn splice(&self, pos: usize, len: usize, mid: &Path) -> Path {
        let mut arrows = Vec::with_capacity(self.arrows.len() - len + mid.arrows.len());
        arrows.extend_from_slice(&self.arrows[..pos]);
        arrows.extend_from_slice(&mid.arrows);
        arrows.extend_from_slice(&self.arrows[pos + len..]);
        Path {
            source: self.source,
            target: self.target,
            arrows,
        }
    }

    /// Positions where `factor` occurs as a contiguous subword.
    pub fn factor_positions(&self, factor: &[ArrowId]) -> Vec<usize> {
        if factor.is_empty() || factor.len() > self.arrows.len() {
            return Vec::new();
        }
        (0..=self.arrows.len() - factor.len())
            .filter(|&i| &self.arrows[i..i + factor.len()] == factor)
            .collect()
    }

    pub fn contains_factor(&self, factor: &[ArrowId]) -> bool {
        !self.factor_positions(factor).is_empty()
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Path {
    /// Structural order (length, arrow word, source). This is the
    /// deterministic container order, not the rewriting order.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.arrows.len(), &self.arrows, self.source).cmp(&(
            other.arrows.len(),
            &other.arrows,
            other.source,
        ))
    }
}

/// Concatenation "p then q"; `None` is the zero of the path monoid.
pub fn compose(p: &Path, q: &Path) -> Option<Path> {
    if p.target != q.source {
        return None;
    }
    let mut arrows = Vec::with_capacity(p.arrows.len() + q.arrows.len());
    arrows.extend_from_slice(&p.arrows);
    arrows.extend_from_slice(&q.arrows);
    Some(Path {
        source: p.source,
        target: q.target,
        arrows,
    })
}

/// True when the two paths share source and target.
pub fn parallel(p: &Path, q: &Path) -> bool {
    p.source == q.source && p.target == q.target
}

/// A finite K-linear combination of paths with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PathSum {
    terms: BTreeMap<Path, Scalar>,
}

impl PathSum {
    pub fn zero() -> PathSum {
        PathSum::default()
    }

    pub fn term(path: Path, coeff: Scalar) -> PathSum {
        let mut s = PathSum::zero();
        s.add_term(path, coeff);
        s
    }

    pub fn from_path(path: Path, field: &Field) -> PathSum {
        PathSum::term(path, field.one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Scalar)> {
        self.terms.iter()
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> {
        self.terms.keys()
    }

    pub fn coeff(&self, p: &Path) -> Option<&Scalar> {
        self.terms.get(p)
    }

    pub fn add_term(&mut self, path: Path, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(path) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &PathSum) -> PathSum {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PathSum) -> PathSum {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> PathSum {
        let mut out = PathSum::zero();
        for (p, c) in self.terms() {
            out.add_term(p.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> PathSum {
        if c.is_zero() {
            return PathSum::zero();
        }
        let mut out = PathSum::zero();
        for (p, k) in self.terms() {
            out.add_term(p.clone(), k.mul(c));
        }
        out
    }

    /// Bilinear extension of concatenation; incompatible products vanish.
    pub fn mul(&self, other: &PathSum) -> PathSum {
        let mut out = PathSum::zero();
        for (p, a) in self.terms() {
            for (q, b) in other.terms() {
                if let Some(pq) = compose(p, q) {
                    out.add_term(pq, a.mul(b));
                }
            }
        }
        out
    }

    /// All paths of this sum share source and target.
    pub fn is_parallel_combination(&self) -> bool {
        let mut it = self.terms.keys();
        if let Some(first) = it.next() {
            it.all(|p| parallel(first, p))
        } else {
            true
        }
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    out.push_str("- ");
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" || p.is_trivial() {
                out.push_str(&mag);
                out.push('*');
            }
            out.push_str(&quiver.path_display(p));
        }
        out
    }
}

impl fmt::Display for PathSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*[{:?};{:?}]", c, p.source, p.arrows)?;
        }
        Ok(())
    }
}

/// Per-vertex loop counts and ordered-pair parallel-arrow counts.
/// With an admissible ideal these equal the Ext^1 dimensions between
/// the corresponding simple modules.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ExtStats {
    pub loops: Vec<usize>,
    pub pairs: Vec<Vec<usize>>,
}

impl ExtStats {
    pub fn max_loops(&self) -> usize {
        self.loops.iter().copied().max().unwrap_or(0)
    }

    /// Largest arrow count between two distinct vertices.
    pub fn max_parallel(&self) -> usize {
        let n = self.pairs.len();
        let mut m = 0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    m = m.max(self.pairs[i][j]);
                }
            }
        }
        m
    }

    pub fn no_loops(&self) -> bool {
        self.max_loops() == 0
    }

    /// At most one arrow for every ordered pair, loops included.
    pub fn all_counts_at_most_one(&self) -> bool {
        self.max_loops() <= 1 && self.max_parallel() <= 1
    }
}

/// A presentation A = KQ/I over an exact field, with optional weight and
/// base-order data for the rewriting order and an optional truncation level.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    pub field: Field,
    pub quiver: Quiver,
    pub relations: Vec<PathSum>,
    /// Weight per arrow, default all 1.
    pub weights: Vec<u64>,
    /// Base well-order on vertices and arrows; default declaration order.
    pub base_order: Option<Vec<Item>>,
    /// When set, analyze A/J(A)^n instead of A.
    pub truncate_level: Option<u32>,
}

impl Presentation {
    pub fn new(field: Field, quiver: Quiver) -> Presentation {
        let weights = vec![1; quiver.n_arrows()];
        Presentation {
            field,
            quiver,
            relations: Vec::new(),
            weights,
            base_order: None,
            truncate_level: None,
        }
    }

    pub fn with_relations(mut self, relations: Vec<PathSum>) -> Presentation {
        self.relations = relations;
        self
    }

    /// Normalize and check the presentation:
    /// - merge duplicate paths, drop zero terms and zero relations;
    /// - every relation must be a combination of parallel paths of length >= 2;
    /// - weight and base-order data must be well-formed (vertices below arrows).
    pub fn validated(mut self) -> Result<Presentation> {
        if self.weights.len() != self.quiver.n_arrows() {
            return Err(Error::Internal(format!(
                "{} weights for {} arrows",
                self.weights.len(),
                self.quiver.n_arrows()
            )));
        }
        if let Some(n) = self.truncate_level {
            if n < 2 {
                return Err(Error::BadTruncation(n));
            }
        }
        if let Some(order) = &self.base_order {
            let mut seen = std::collections::BTreeSet::new();
            let mut seen_arrow = false;
            for item in order {
                if !seen.insert(*item) {
                    return Err(Error::InvalidOrder("repeated item".to_string()));
                }
                match item {
                    Item::Vertex(v) => {
                        if seen_arrow {
                            return Err(Error::InvalidOrder(format!(
                                "vertex `{}` listed after an arrow",
                                self.quiver.vertex_name(*v)
                            )));
                        }
                        if *v >= self.quiver.n_vertices() {
                            return Err(Error::InvalidOrder("vertex out of range".to_string()));
                        }
                    }
                    Item::Arrow(a) => {
                        seen_arrow = true;
                        if *a >= self.quiver.n_arrows() {
                            return Err(Error::InvalidOrder("arrow out of range".to_string()));
                        }
                    }
                }
            }
            if seen.len() != self.quiver.n_vertices() + self.quiver.n_arrows() {
                return Err(Error::InvalidOrder(
                    "order must list every vertex and arrow".to_string(),
                ));
            }
        }
        let mut relations = Vec::new();
        for (index, rel) in self.relations.iter().enumerate() {
            // Rebuild through add_term to merge and drop zeros.
            let mut norm = PathSum::zero();
            for (p, c) in rel.terms() {
                norm.add_term(p.clone(), c.clone());
            }
            if norm.is_zero() {
                continue;
            }
            let mut first: Option<&Path> = None;
            for p in norm.paths() {
                if p.len() < 2 {
                    return Err(Error::ShortRelation {
                        index,
                        path: self.quiver.path_display(p),
                        len: p.len(),
                    });
                }
                match first {
                    None => first = Some(p),
                    Some(f) => {
                        if !parallel(f, p) {
                            return Err(Error::NonParallelRelation {
                                index,
                                a: self.quiver.path_display(f),
                                b: self.quiver.path_display(p),
                            });
                        }
                    }
                }
            }
            relations.push(norm);
        }
        self.relations = relations;
        Ok(self)
    }

    pub fn ext_quiver_stats(&self) -> ExtStats {
        let n = self.quiver.n_vertices();
        let mut loops = vec![0usize; n];
        let mut pairs = vec![vec![0usize; n]; n];
        for a in self.quiver.arrows() {
            pairs[a.source][a.target] += 1;
            if a.source == a.target {
                loops[a.source] += 1;
            }
        }
        ExtStats { loops, pairs }
    }

    pub fn is_local(&self) -> bool {
        self.quiver.n_vertices() == 1
    }

    /// Every relation is length-homogeneous.
    pub fn is_length_graded(&self) -> bool {
        self.relations.iter().all(|r| {
            let mut lens = r.paths().map(|p| p.len());
            match lens.next() {
                None => true,
                Some(l) => lens.all(|m| m == l),
            }
        })
    }
}
