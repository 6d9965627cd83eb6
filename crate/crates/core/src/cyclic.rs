//! Rotation-symmetric systems over `Z_v`: triplet types and distances,
//! orbit-period detection, base-cycle expansion and verification, the
//! bundled systems, and a bounded search for new ones.
//!
//! Under the rotation `i -> i+1 (mod v)` the orbit of every triplet other
//! than `(i, i+v/3, i+2v/3)` has `v` members, exactly three of which contain
//! vertex 1. The lexicographically smallest of those three — with residues
//! taken in `{1..v}`, writing 0 as `v` — is the *type* of the triplet. A
//! base-cycle collection generates a cyclic decomposition exactly when its
//! windows cover every type once (weighted by orbit length).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::hypercore::{
    verify_decomposition, Decomposition, OneFactor, TightCycle, Triplet, VerifyReport, Vertex,
};
use crate::spectrum::{self, Feasibility};
use crate::Result;

/// Canonical orbit representative `(1, b, c)` of a triplet under rotation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TripletType {
    rep: [usize; 3],
}

impl TripletType {
    /// The representative `(a', b', c')` with `a' = 1`.
    pub fn rep(&self) -> [usize; 3] {
        self.rep
    }

    /// The smallest distance `b' - a' = b' - 1`.
    pub fn d(&self) -> usize {
        self.rep[1] - 1
    }
}

impl fmt::Display for TripletType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.rep[0], self.rep[1], self.rep[2])
    }
}

/// Number of triplet orbits other than the rotation-invariant 1-factor,
/// namely `v(v-3)/6`.
pub fn type_count(v: usize) -> Result<usize> {
    if v < 3 || !v.is_multiple_of(3) {
        return Err(Error::infeasible(v, "v must be a positive multiple of 3"));
    }
    Ok(v * (v - 3) / 6)
}

fn check_order(t: Triplet, v: usize) -> Result<()> {
    if v < 3 || !v.is_multiple_of(3) {
        return Err(Error::infeasible(v, "v must be a positive multiple of 3"));
    }
    if t.max_vertex() >= v {
        return Err(Error::VertexOutOfRange {
            vertex: t.max_vertex(),
            order: v,
        });
    }
    let [a, b, c] = t.vertices();
    if b - a == v / 3 && c - b == v / 3 {
        return Err(Error::DegenerateOrbit(t));
    }
    Ok(())
}

/// The type of a triplet, together with the source vertices reordered so
/// that they map onto `(a', b', c')` in that order.
pub fn type_alignment(t: Triplet, v: usize) -> Result<([Vertex; 3], TripletType)> {
    check_order(t, v)?;
    let verts = t.vertices();
    let mut best: Option<([Vertex; 3], [usize; 3])> = None;
    for &x in &verts {
        let s = (1 + v - x % v) % v; // shift sending x to 1
        let residue = |y: Vertex| -> usize {
            let r = (y + s) % v;
            if r == 0 {
                v
            } else {
                r
            }
        };
        let mut labeled: Vec<(usize, Vertex)> = verts.iter().map(|&y| (residue(y), y)).collect();
        labeled.sort_unstable();
        let rep = [labeled[0].0, labeled[1].0, labeled[2].0];
        let aligned = [labeled[0].1, labeled[1].1, labeled[2].1];
        if best.as_ref().is_none_or(|(_, r)| rep < *r) {
            best = Some((aligned, rep));
        }
    }
    let (aligned, rep) = best.unwrap();
    Ok((aligned, TripletType { rep }))
}

/// The type of a triplet: the lexicographically smallest of its three
/// vertex-1 orbit members, residues taken in `{1..v}`.
pub fn triplet_type(t: Triplet, v: usize) -> Result<TripletType> {
    Ok(type_alignment(t, v)?.1)
}

/// Smallest `s > 0` such that the cycle shifted by `s` equals itself (up to
/// rotation and reflection). Always divides `v`.
pub fn orbit_period(c: &TightCycle, v: usize) -> usize {
    let canon = c.canonical();
    for s in 1..v {
        if c.shift(s, v).canonical() == canon {
            return s;
        }
    }
    v
}

/// A base cycle with its auto-detected orbit period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseCycle {
    pub cycle: TightCycle,
    pub period: usize,
}

/// A rotation-symmetric system: base cycles whose shift orbits decompose
/// `K_v^(3) - I` with the 1-factor `{(i, i+v/3, i+2v/3)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSystem {
    pub v: usize,
    pub k: usize,
    pub base_cycles: Vec<BaseCycle>,
}

impl CyclicSystem {
    /// Periods are always auto-detected, never declared by the caller.
    pub fn new(v: usize, k: usize, cycles: Vec<TightCycle>) -> Result<Self> {
        let mut base_cycles = Vec::with_capacity(cycles.len());
        for c in cycles {
            crate::hypercore::verify_cycle(c.vertices(), v, k)?;
            let period = orbit_period(&c, v);
            debug_assert!(v.is_multiple_of(period), "shift stabilizers are subgroups");
            base_cycles.push(BaseCycle { cycle: c, period });
        }
        Ok(CyclicSystem { v, k, base_cycles })
    }
}

/// The rotation-invariant 1-factor `{(i, i+v/3, i+2v/3) : i < v/3}`.
pub fn cyclic_factor(v: usize) -> Result<OneFactor> {
    if !v.is_multiple_of(3) || v < 6 {
        return Err(Error::infeasible(v, "v must be a multiple of 3, v >= 6"));
    }
    let third = v / 3;
    OneFactor::new(
        v,
        (0..third)
            .map(|i| Triplet::new(i, i + third, i + 2 * third).unwrap())
            .collect(),
    )
}

/// Emits the distinct shifts of every base cycle (period many) together with
/// the rotation-invariant factor.
pub fn expand_cyclic(s: &CyclicSystem) -> Result<Decomposition> {
    let factor = cyclic_factor(s.v)?;
    let mut cycles = Vec::new();
    for bc in &s.base_cycles {
        for i in 0..bc.period {
            cycles.push(bc.cycle.shift(i, s.v));
        }
    }
    Ok(Decomposition {
        v: s.v,
        k: s.k,
        factor,
        cycles,
    })
}

/// One window of a base cycle: the window vertices reordered to match the
/// type representative, and the type itself (`None` for factor windows).
#[derive(Clone, Debug)]
pub struct WindowType {
    pub aligned: [Vertex; 3],
    pub ty: Option<TripletType>,
}

/// Per-base-cycle row of the type table, for diffing against printed tables.
#[derive(Clone, Debug)]
pub struct TypeRow {
    pub vertices: Vec<Vertex>,
    pub period: usize,
    pub windows: Vec<WindowType>,
}

/// Full verification report for a cyclic system.
#[derive(Clone, Debug)]
pub struct CyclicReport {
    pub expansion: VerifyReport,
    pub rows: Vec<TypeRow>,
    pub type_total: usize,
    /// Types never covered by any window.
    pub uncovered_types: Vec<TripletType>,
    /// Types whose weighted coverage differs from `v` (weight given).
    pub miscovered_types: Vec<(TripletType, usize)>,
}

impl CyclicReport {
    pub fn is_valid(&self) -> bool {
        self.expansion.is_valid()
            && self.uncovered_types.is_empty()
            && self.miscovered_types.is_empty()
    }
}

impl fmt::Display for CyclicReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covered = self.type_total - self.uncovered_types.len();
        if self.is_valid() {
            write!(
                f,
                "VALID: {} base cycles, {} cycles, {}/{} types covered",
                self.rows.len(),
                self.expansion.cycle_count,
                covered,
                self.type_total
            )
        } else {
            writeln!(
                f,
                "INVALID: {} base cycles, {} cycles, {}/{} types covered",
                self.rows.len(),
                self.expansion.cycle_count,
                covered,
                self.type_total
            )?;
            if !self.uncovered_types.is_empty() {
                writeln!(f, "uncovered types ({}):", self.uncovered_types.len())?;
                for t in &self.uncovered_types {
                    writeln!(f, "  {t}")?;
                }
            }
            for (t, w) in &self.miscovered_types {
                writeln!(
                    f,
                    "type {t} has weighted coverage {w}, expected {}",
                    self.expansion.v
                )?;
            }
            write!(f, "{}", self.expansion)
        }
    }
}

/// Expands the system, verifies the expansion as an ordinary decomposition,
/// and cross-checks the type calculus: base-cycle windows weighted by orbit
/// length must cover every type exactly `v` times in total.
pub fn verify_cyclic(s: &CyclicSystem) -> Result<CyclicReport> {
    let expansion = verify_decomposition(&expand_cyclic(s)?);
    let total = type_count(s.v)?;
    let mut weights: BTreeMap<TripletType, usize> = BTreeMap::new();
    let mut rows = Vec::with_capacity(s.base_cycles.len());
    for bc in &s.base_cycles {
        let mut windows = Vec::with_capacity(s.k);
        for e in bc.cycle.edges() {
            match type_alignment(e, s.v) {
                Ok((aligned, ty)) => {
                    *weights.entry(ty).or_insert(0) += bc.period;
                    windows.push(WindowType {
                        aligned,
                        ty: Some(ty),
                    });
                }
                Err(_) => windows.push(WindowType {
                    aligned: e.vertices(),
                    ty: None,
                }),
            }
        }
        rows.push(TypeRow {
            vertices: bc.cycle.vertices().to_vec(),
            period: bc.period,
            windows,
        });
    }
    let mut uncovered = Vec::new();
    let mut miscovered = Vec::new();
    for t in all_types(s.v)? {
        match weights.get(&t).copied().unwrap_or(0) {
            0 => uncovered.push(t),
            w if w == s.v => {}
            w => miscovered.push((t, w)),
        }
    }
    for (t, w) in &weights {
        if *w != s.v && !miscovered.contains(&(*t, *w)) && !uncovered.contains(t) {
            miscovered.push((*t, *w));
        }
    }
    Ok(CyclicReport {
        expansion,
        rows,
        type_total: total,
        uncovered_types: uncovered,
        miscovered_types: miscovered,
    })
}

/// Every type of order `v`, enumerated by brute force over all non-factor
/// triplets.
pub fn all_types(v: usize) -> Result<Vec<TripletType>> {
    if !v.is_multiple_of(3) || v < 3 {
        return Err(Error::infeasible(v, "v must be a positive multiple of 3"));
    }
    let mut set = BTreeSet::new();
    for a in 0..v {
        for b in a + 1..v {
            for c in b + 1..v {
                let t = Triplet::new(a, b, c).unwrap();
                if let Ok(ty) = triplet_type(t, v) {
                    set.insert(ty);
                }
            }
        }
    }
    Ok(set.into_iter().collect())
}

static BUNDLED: OnceLock<BTreeMap<(usize, usize), CyclicSystem>> = OnceLock::new();

/// The bundled base-cycle systems, keyed by `(k, v)`: k=6 for
/// v = 6, 12, 15, 18, 24, 27, 30 and k=9 for v = 9, 12, 15, 18, 21, 24, 27, 30.
pub fn bundled_systems() -> &'static BTreeMap<(usize, usize), CyclicSystem> {
    BUNDLED.get_or_init(|| {
        let sources: [(&str, &str); 15] = [
            ("c6_v6", include_str!("../data/c6_v6.hcb")),
            ("c6_v12", include_str!("../data/c6_v12.hcb")),
            ("c6_v15", include_str!("../data/c6_v15.hcb")),
            ("c6_v18", include_str!("../data/c6_v18.hcb")),
            ("c6_v24", include_str!("../data/c6_v24.hcb")),
            ("c6_v27", include_str!("../data/c6_v27.hcb")),
            ("c6_v30", include_str!("../data/c6_v30.hcb")),
            ("c9_v9", include_str!("../data/c9_v9.hcb")),
            ("c9_v12", include_str!("../data/c9_v12.hcb")),
            ("c9_v15", include_str!("../data/c9_v15.hcb")),
            ("c9_v18", include_str!("../data/c9_v18.hcb")),
            ("c9_v21", include_str!("../data/c9_v21.hcb")),
            ("c9_v24", include_str!("../data/c9_v24.hcb")),
            ("c9_v27", include_str!("../data/c9_v27.hcb")),
            ("c9_v30", include_str!("../data/c9_v30.hcb")),
        ];
        let mut map = BTreeMap::new();
        for (name, text) in sources {
            let sys = crate::cli::files::parse_base_cycles(text)
                .unwrap_or_else(|e| panic!("bundled data {name} is well-formed: {e}"));
            map.insert((sys.k, sys.v), sys);
        }
        map
    })
}

/// Looks up a bundled system.
pub fn bundled_system(k: usize, v: usize) -> Result<CyclicSystem> {
    bundled_systems()
        .get(&(k, v))
        .cloned()
        .ok_or(Error::UnknownSystem { k, v })
}

/// Backtracking search for a cyclic system, scored by uncovered types.
/// Deterministic for a fixed seed; `budget` caps the number of search nodes.
pub fn search_cyclic(v: usize, k: usize, seed: u64, budget: u64) -> Result<CyclicSystem> {
    match spectrum::feasible(k, v, false)? {
        Feasibility::Feasible => {}
        Feasibility::Infeasible(r) => return Err(Error::infeasible(v, r.to_string())),
    }
    let types = all_types(v)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = SearchState {
        v,
        k,
        uncovered: types.into_iter().collect(),
        chosen: Vec::new(),
        nodes: 0,
        budget,
    };
    // when the type count is not a multiple of k, exactly one base cycle
    // with a shorter orbit is needed; search it first
    let remainder = state.uncovered.len() % k;
    if remainder != 0 {
        debug_assert_eq!(remainder, 3);
        if !state.place_exceptional(&mut rng) {
            return Err(Error::NotFound);
        }
    }
    if state.solve(&mut rng) {
        let cycles = state.chosen;
        let sys = CyclicSystem::new(v, k, cycles)?;
        let report = verify_cyclic(&sys)?;
        assert!(report.is_valid(), "search returned an unverified system");
        Ok(sys)
    } else {
        Err(Error::NotFound)
    }
}

struct SearchState {
    v: usize,
    k: usize,
    uncovered: BTreeSet<TripletType>,
    chosen: Vec<TightCycle>,
    nodes: u64,
    budget: u64,
}

impl SearchState {
    fn window_type(&self, a: Vertex, b: Vertex, c: Vertex) -> Option<TripletType> {
        Triplet::new(a, b, c)
            .ok()
            .and_then(|t| triplet_type(t, self.v).ok())
    }

    /// Places one short-orbit cycle. The half-shift (k=6) or third-shift
    /// (k=9) must map the cycle to itself: either as a rotation, giving the
    /// translation shape below, or — for k=6 only — as a reflection, giving
    /// the second shape. Reflected copies of the k=9 rotation shape are
    /// already equal to translation-shape cycles, so one shape suffices
    /// there.
    fn place_exceptional(&mut self, rng: &mut ChaCha8Rng) -> bool {
        let v = self.v;
        let copies = if self.k == 6 { 2 } else { 3 };
        if !v.is_multiple_of(copies) {
            return false;
        }
        let h = v / copies;
        let mut seconds: Vec<Vertex> = (1..v).collect();
        seconds.shuffle(rng);
        for &x1 in &seconds {
            let mut thirds: Vec<Vertex> = (1..v).filter(|&x| x != x1).collect();
            thirds.shuffle(rng);
            for &x2 in &thirds {
                let mut shapes: Vec<Vec<Vertex>> = Vec::with_capacity(2);
                let mut translated = Vec::with_capacity(self.k);
                for c in 0..copies {
                    translated.push(c * h % v);
                    translated.push((x1 + c * h) % v);
                    translated.push((x2 + c * h) % v);
                }
                shapes.push(translated);
                if self.k == 6 {
                    shapes.push(vec![0, h, x1, x2, (x2 + h) % v, (x1 + h) % v]);
                }
                for seq in shapes {
                    if self.try_exceptional(seq, h) {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn try_exceptional(&mut self, seq: Vec<Vertex>, period: usize) -> bool {
        let v = self.v;
        let mut sorted = seq.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.k {
            return false;
        }
        let cycle = TightCycle::new(seq).expect("distinct by construction");
        if orbit_period(&cycle, v) != period {
            return false;
        }
        let mut distinct = BTreeSet::new();
        for e in cycle.edges() {
            match triplet_type(e, v) {
                Ok(t) => {
                    distinct.insert(t);
                }
                Err(_) => return false,
            }
        }
        // the k windows must fall on exactly 3 types, each hit k/3 times
        if distinct.len() != 3 || !distinct.iter().all(|t| self.uncovered.contains(t)) {
            return false;
        }
        for t in &distinct {
            self.uncovered.remove(t);
        }
        self.chosen.push(cycle);
        true
    }

    fn solve(&mut self, rng: &mut ChaCha8Rng) -> bool {
        self.nodes += 1;
        if self.nodes >= self.budget {
            return false;
        }
        let target = match self.uncovered.iter().next() {
            None => return true,
            Some(t) => *t,
        };
        // the covering window can be shifted onto the type representative
        let rep = target.rep();
        let w: Vec<Vertex> = rep.iter().map(|&r| r % self.v).collect();
        let mut starts = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if j == i {
                    continue;
                }
                let l = 3 - i - j;
                starts.push([w[i], w[j], w[l]]);
            }
        }
        for start in starts {
            let mut seq: Vec<Vertex> = start.to_vec();
            let mut used: BTreeSet<Vertex> = seq.iter().copied().collect();
            if used.len() != 3 {
                continue;
            }
            let mut taken = vec![target];
            self.uncovered.remove(&target);
            if self.extend_cycle(&mut seq, &mut used, &mut taken, rng) {
                return true;
            }
            self.uncovered.insert(target);
        }
        false
    }

    fn extend_cycle(
        &mut self,
        seq: &mut Vec<Vertex>,
        used: &mut BTreeSet<Vertex>,
        taken: &mut Vec<TripletType>,
        rng: &mut ChaCha8Rng,
    ) -> bool {
        self.nodes += 1;
        if self.nodes >= self.budget {
            return false;
        }
        if seq.len() == self.k {
            let t1 = self.window_type(seq[self.k - 2], seq[self.k - 1], seq[0]);
            let t2 = self.window_type(seq[self.k - 1], seq[0], seq[1]);
            let (t1, t2) = match (t1, t2) {
                (Some(a), Some(b)) if a != b => (a, b),
                _ => return false,
            };
            if !self.uncovered.contains(&t1) || !self.uncovered.contains(&t2) {
                return false;
            }
            let cycle = TightCycle::new(seq.clone()).expect("distinct");
            if orbit_period(&cycle, self.v) != self.v {
                return false;
            }
            self.uncovered.remove(&t1);
            self.uncovered.remove(&t2);
            self.chosen.push(cycle);
            if self.solve(rng) {
                return true;
            }
            self.chosen.pop();
            self.uncovered.insert(t1);
            self.uncovered.insert(t2);
            return false;
        }
        let mut cands: Vec<Vertex> = (0..self.v).filter(|x| !used.contains(x)).collect();
        cands.shuffle(rng);
        for next in cands {
            let ty = match self.window_type(seq[seq.len() - 2], seq[seq.len() - 1], next) {
                Some(t) => t,
                None => continue,
            };
            if !self.uncovered.contains(&ty) {
                continue;
            }
            seq.push(next);
            used.insert(next);
            self.uncovered.remove(&ty);
            taken.push(ty);
            if self.extend_cycle(seq, used, taken, rng) {
                return true;
            }
            taken.pop();
            self.uncovered.insert(ty);
            used.remove(&next);
            seq.pop();
        }
        false
    }
}
