//! Data model for `K_v^(3) - I` and the exact-cover verifier.
//!
//! Vertices are 0-based integers `0..v` everywhere. A [`Triplet`] is a
//! canonical (sorted) 3-element vertex set, the edge unit of the hypergraph.
//! A [`TightCycle`] is a cyclic vertex sequence whose edges are the windows
//! of three consecutive vertices; two cycles are equal iff their sequences
//! agree up to rotation and reflection. [`verify_decomposition`] certifies a
//! full [`Decomposition`] by exact multiset accounting over the edge set and
//! never exits early, so its reports are complete.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::Result;

pub type Vertex = usize;

/// Canonical 3-element vertex set with `a < b < c`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Triplet([Vertex; 3]);

impl Triplet {
    /// Builds the canonical triplet from any permutation of three distinct
    /// values.
    pub fn new(x: Vertex, y: Vertex, z: Vertex) -> Result<Self> {
        let mut t = [x, y, z];
        t.sort_unstable();
        if t[0] == t[1] {
            return Err(Error::DuplicateVertex(t[0]));
        }
        if t[1] == t[2] {
            return Err(Error::DuplicateVertex(t[1]));
        }
        Ok(Triplet(t))
    }

    pub fn from_slice(s: &[Vertex]) -> Result<Self> {
        if s.len() != 3 {
            return Err(Error::WrongLength {
                expected: 3,
                got: s.len(),
            });
        }
        Triplet::new(s[0], s[1], s[2])
    }

    pub fn vertices(self) -> [Vertex; 3] {
        self.0
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn max_vertex(self) -> Vertex {
        self.0[2]
    }

    /// Rotates all three vertices by `s` modulo `modulus`. All vertices must
    /// lie below `modulus`, otherwise distinct vertices could collide.
    pub fn shift(self, s: usize, modulus: usize) -> Triplet {
        Triplet::new(
            (self.0[0] + s) % modulus,
            (self.0[1] + s) % modulus,
            (self.0[2] + s) % modulus,
        )
        .expect("shifting preserves distinctness")
    }
}

impl fmt::Display for Triplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.0[0], self.0[1], self.0[2])
    }
}

/// Cyclic vertex sequence of length `k >= 4` with all vertices distinct.
///
/// The sequence is kept exactly as constructed; equality, hashing and
/// ordering go through [`TightCycle::canonical`], the lexicographically
/// least sequence over all `2k` rotations and reflections. Edge sets of two
/// tight cycles coincide exactly when their canonical forms agree.
#[derive(Clone, Debug)]
pub struct TightCycle {
    vertices: Vec<Vertex>,
}

impl TightCycle {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.len() < 4 {
            return Err(Error::CycleTooShort(vertices.len()));
        }
        let mut seen = vertices.clone();
        seen.sort_unstable();
        for w in seen.windows(2) {
            if w[0] == w[1] {
                return Err(Error::RepeatedVertex(w[0]));
            }
        }
        Ok(TightCycle { vertices })
    }

    pub fn k(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// The k edges (v_i, v_{i+1}, v_{i+2}), indices mod k. All k are distinct
    /// since the vertices are.
    pub fn edges(&self) -> Vec<Triplet> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| {
                Triplet::new(
                    self.vertices[i],
                    self.vertices[(i + 1) % k],
                    self.vertices[(i + 2) % k],
                )
                .expect("cycle vertices are distinct")
            })
            .collect()
    }

    /// Lexicographically least sequence over all rotations and reflections.
    pub fn canonical(&self) -> Vec<Vertex> {
        let k = self.vertices.len();
        let mut best: Option<Vec<Vertex>> = None;
        let mut reversed = self.vertices.clone();
        reversed.reverse();
        for seq in [&self.vertices, &reversed] {
            for r in 0..k {
                let cand: Vec<Vertex> = (0..k).map(|i| seq[(r + i) % k]).collect();
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        best.unwrap()
    }

    /// Rotates every vertex by `s` modulo `modulus`. All vertices must lie
    /// below `modulus`.
    pub fn shift(&self, s: usize, modulus: usize) -> TightCycle {
        TightCycle {
            vertices: self.vertices.iter().map(|&x| (x + s) % modulus).collect(),
        }
    }

    /// Applies a vertex relabeling.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Result<TightCycle> {
        TightCycle::new(self.vertices.iter().map(|&x| map(x)).collect())
    }
}

impl PartialEq for TightCycle {
    fn eq(&self, other: &Self) -> bool {
        self.vertices.len() == other.vertices.len() && self.canonical() == other.canonical()
    }
}

impl Eq for TightCycle {}

impl std::hash::Hash for TightCycle {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl fmt::Display for TightCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Checks that a raw vertex sequence is a valid tight k-cycle over `0..v`.
pub fn verify_cycle(vertices: &[Vertex], v: usize, k: usize) -> Result<()> {
    if vertices.len() != k {
        return Err(Error::WrongLength {
            expected: k,
            got: vertices.len(),
        });
    }
    for &x in vertices {
        if x >= v {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                order: v,
            });
        }
    }
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::RepeatedVertex(w[0]));
        }
    }
    Ok(())
}

/// Number of edges of `K_v^(3) - I`, namely `v^2 (v-3) / 6`.
pub fn edge_count(v: usize) -> Result<usize> {
    if v < 3 || !v.is_multiple_of(3) {
        return Err(Error::infeasible(v, "v must be a positive multiple of 3"));
    }
    Ok(v * v * (v - 3) / 6)
}

/// A 1-factor: `v/3` pairwise disjoint triplets covering all `v` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneFactor {
    v: usize,
    blocks: Vec<Triplet>,
}

impl OneFactor {
    pub fn new(v: usize, mut blocks: Vec<Triplet>) -> Result<Self> {
        if !v.is_multiple_of(3) || v == 0 {
            return Err(Error::InvalidFactor(format!(
                "order {v} is not a multiple of 3"
            )));
        }
        if blocks.len() != v / 3 {
            return Err(Error::InvalidFactor(format!(
                "{} blocks for order {v}, expected {}",
                blocks.len(),
                v / 3
            )));
        }
        let mut seen = vec![false; v];
        for b in &blocks {
            for x in b.vertices() {
                if x >= v {
                    return Err(Error::InvalidFactor(format!(
                        "vertex {x} out of range for order {v}"
                    )));
                }
                if seen[x] {
                    return Err(Error::InvalidFactor(format!(
                        "vertex {x} appears in two blocks"
                    )));
                }
                seen[x] = true;
            }
        }
        blocks.sort_unstable();
        Ok(OneFactor { v, blocks })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn blocks(&self) -> &[Triplet] {
        &self.blocks
    }

    pub fn contains(&self, t: Triplet) -> bool {
        self.blocks.binary_search(&t).is_ok()
    }
}

/// All `C(v,3)` triplets minus the factor blocks, sorted.
pub fn target_edges(v: usize, factor: &OneFactor) -> Result<Vec<Triplet>> {
    if factor.v() != v {
        return Err(Error::InvalidFactor(format!(
            "factor has order {}, expected {v}",
            factor.v()
        )));
    }
    let mut edges = Vec::with_capacity(edge_count(v)?);
    for a in 0..v {
        for b in a + 1..v {
            for c in b + 1..v {
                let t = Triplet::new(a, b, c).unwrap();
                if !factor.contains(t) {
                    edges.push(t);
                }
            }
        }
    }
    Ok(edges)
}

/// Ordered list of disjoint vertex sets, used to label the inputs of the
/// block constructions.
#[derive(Clone, Debug)]
pub struct PartLabeling {
    parts: Vec<Vec<Vertex>>,
}

impl PartLabeling {
    pub fn new(parts: &[&[Vertex]]) -> Result<Self> {
        let mut all: Vec<Vertex> = parts.iter().flat_map(|p| p.iter().copied()).collect();
        all.sort_unstable();
        for w in all.windows(2) {
            if w[0] == w[1] {
                return Err(Error::OverlappingParts);
            }
        }
        Ok(PartLabeling {
            parts: parts.iter().map(|p| p.to_vec()).collect(),
        })
    }

    pub fn expect_sizes(&self, sizes: &[usize]) -> Result<()> {
        if self.parts.len() != sizes.len() {
            return Err(Error::WrongPartSize {
                expected: sizes.len(),
                got: self.parts.len(),
            });
        }
        for (p, &s) in self.parts.iter().zip(sizes) {
            if p.len() != s {
                return Err(Error::WrongPartSize {
                    expected: s,
                    got: p.len(),
                });
            }
        }
        Ok(())
    }

    pub fn part(&self, i: usize) -> &[Vertex] {
        &self.parts[i]
    }
}

/// A full certificate: order, cycle length, omitted 1-factor and cycle list.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub v: usize,
    pub k: usize,
    pub factor: OneFactor,
    pub cycles: Vec<TightCycle>,
}

/// Outcome of [`verify_decomposition`]. `missing`, `duplicated` and
/// `foreign` are exhaustive; `covered` counts target edges seen at least
/// once.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub v: usize,
    pub k: usize,
    pub cycle_count: usize,
    pub target_count: usize,
    pub covered: usize,
    pub missing: Vec<Triplet>,
    pub duplicated: Vec<Triplet>,
    pub foreign: Vec<Triplet>,
    pub cycle_errors: Vec<(usize, Error)>,
    pub factor_error: Option<Error>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.factor_error.is_none()
            && self.cycle_errors.is_empty()
            && self.missing.is_empty()
            && self.duplicated.is_empty()
            && self.foreign.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(
                f,
                "VALID: {} cycles, {}/{} edges",
                self.cycle_count, self.covered, self.target_count
            );
        }
        writeln!(
            f,
            "INVALID: {} cycles, {}/{} edges",
            self.cycle_count, self.covered, self.target_count
        )?;
        if let Some(e) = &self.factor_error {
            writeln!(f, "factor: {e}")?;
        }
        for (i, e) in &self.cycle_errors {
            writeln!(f, "cycle {i}: {e}")?;
        }
        write!(f, "missing ({})", self.missing.len())?;
        for t in &self.missing {
            write!(f, "\n  {t}")?;
        }
        write!(f, "\nduplicated ({})", self.duplicated.len())?;
        for t in &self.duplicated {
            write!(f, "\n  {t}")?;
        }
        write!(f, "\nforeign ({})", self.foreign.len())?;
        for t in &self.foreign {
            write!(f, "\n  {t}")?;
        }
        Ok(())
    }
}

/// Certifies a decomposition: every cycle must be a valid tight k-cycle over
/// `0..v` and the multiset union of all cycle edges must equal the target
/// edge set with every edge covered exactly once. Runs to completion so the
/// report lists every missing, duplicated and foreign edge.
pub fn verify_decomposition(d: &Decomposition) -> VerifyReport {
    let mut report = VerifyReport {
        v: d.v,
        k: d.k,
        cycle_count: d.cycles.len(),
        target_count: 0,
        covered: 0,
        missing: Vec::new(),
        duplicated: Vec::new(),
        foreign: Vec::new(),
        cycle_errors: Vec::new(),
        factor_error: None,
    };

    let factor_check = OneFactor::new(d.v, d.factor.blocks().to_vec());
    if d.factor.v() != d.v {
        report.factor_error = Some(Error::InvalidFactor(format!(
            "factor has order {}, expected {}",
            d.factor.v(),
            d.v
        )));
    } else if let Err(e) = factor_check {
        report.factor_error = Some(e);
    }

    let target = target_edges(d.v, &d.factor).unwrap_or_default();
    report.target_count = target.len();

    let mut counts: BTreeMap<Triplet, usize> = BTreeMap::new();
    for (i, c) in d.cycles.iter().enumerate() {
        if let Err(e) = verify_cycle(c.vertices(), d.v, d.k) {
            report.cycle_errors.push((i, e));
        }
        // count every well-formed window, even on cycles that failed above
        let k = c.k();
        for j in 0..k {
            if let Ok(t) = Triplet::new(
                c.vertices()[j],
                c.vertices()[(j + 1) % k],
                c.vertices()[(j + 2) % k],
            ) {
                *counts.entry(t).or_insert(0) += 1;
            }
        }
    }

    for &t in &target {
        match counts.get(&t).copied().unwrap_or(0) {
            0 => report.missing.push(t),
            1 => report.covered += 1,
            _ => {
                report.covered += 1;
                report.duplicated.push(t);
            }
        }
    }
    let target_set: std::collections::BTreeSet<Triplet> = target.into_iter().collect();
    for &t in counts.keys() {
        if !target_set.contains(&t) {
            report.foreign.push(t);
        }
    }
    report
}
