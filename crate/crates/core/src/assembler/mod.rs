//! Recursive constructions: the pairing decomposer for complete triple
//! systems, the Kirkman triple system provider, the part-splitting chains
//! for 9-cycles, and the top-level constructors covering the full spectra
//! and their 2-split variants.

pub mod matching;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::hypercore::{Decomposition, OneFactor, PartLabeling, TightCycle, Triplet, Vertex};
use crate::spectrum::{self, Feasibility};
use crate::{blocks, Result};

/// Default node budget for the Kirkman system search.
pub const KTS_DEFAULT_BUDGET: u64 = 2_000_000;

/// Two triplets sharing exactly two vertices; the pairing unit used to cover
/// edges that meet three parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct H2Pair {
    pub e1: Triplet,
    pub e2: Triplet,
}

impl H2Pair {
    pub fn new(e1: Triplet, e2: Triplet) -> Result<Self> {
        let shared = e1.vertices().iter().filter(|x| e2.contains(**x)).count();
        if shared != 2 {
            return Err(Error::NotAnH2(e1, e2, shared));
        }
        Ok(if e1 <= e2 {
            H2Pair { e1, e2 }
        } else {
            H2Pair { e1: e2, e2: e1 }
        })
    }

    /// The shared pair and the two private vertices (one per edge).
    pub fn split(&self) -> ([Vertex; 2], Vertex, Vertex) {
        let mut shared = [0; 2];
        let mut si = 0;
        let mut only1 = 0;
        for x in self.e1.vertices() {
            if self.e2.contains(x) {
                shared[si] = x;
                si += 1;
            } else {
                only1 = x;
            }
        }
        let only2 = self
            .e2
            .vertices()
            .into_iter()
            .find(|x| !self.e1.contains(*x))
            .expect("pair shares exactly two vertices");
        (shared, only1, only2)
    }
}

/// Pairs up all `C(n,3)` triples of `{0..n}` so that the two triples of each
/// pair share exactly two vertices. Realized as a perfect matching in the
/// graph whose nodes are triples and whose edges join triples with
/// 2-element intersection.
pub fn h2_decompose(n: usize) -> Result<Vec<H2Pair>> {
    if n < 4 || n % 4 == 3 {
        return Err(Error::infeasible(n, "n must be >= 4 and 0, 1 or 2 (mod 4)"));
    }
    let mut triples = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                triples.push(Triplet::new(a, b, c).unwrap());
            }
        }
    }
    let index = |t: &Triplet| triples.binary_search(t).unwrap();
    let mut adj = vec![Vec::new(); triples.len()];
    // triples sharing a fixed pair form a clique of size n-2
    for a in 0..n {
        for b in a + 1..n {
            let members: Vec<usize> = (0..n)
                .filter(|&c| c != a && c != b)
                .map(|c| index(&Triplet::new(a, b, c).unwrap()))
                .collect();
            for &x in &members {
                for &y in &members {
                    if x != y {
                        adj[x].push(y);
                    }
                }
            }
        }
    }
    let mate = matching::maximum_matching(triples.len(), &adj);
    let mut pairs = Vec::with_capacity(triples.len() / 2);
    for (i, m) in mate.iter().enumerate() {
        match m {
            None => return Err(Error::MatchingFailed { n }),
            Some(j) if i < *j => pairs.push(H2Pair::new(triples[i], triples[*j])?),
            _ => {}
        }
    }
    Ok(pairs)
}

/// Checks that `pairs` is a pairing of all triples of `{0..n}` into copies
/// sharing exactly two vertices.
pub fn verify_h2_pairing(n: usize, pairs: &[H2Pair]) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for p in pairs {
        let shared =
            p.e1.vertices()
                .iter()
                .filter(|x| p.e2.contains(**x))
                .count();
        if shared != 2 {
            return Err(Error::NotAnH2(p.e1, p.e2, shared));
        }
        for t in [p.e1, p.e2] {
            if t.max_vertex() >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: t.max_vertex(),
                    order: n,
                });
            }
            if !seen.insert(t) {
                return Err(Error::DuplicateTriple(t));
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let t = Triplet::new(a, b, c).unwrap();
                if !seen.contains(&t) {
                    return Err(Error::MissingTriple(t));
                }
            }
        }
    }
    Ok(())
}

/// Resolvable triple system: `(v-1)/2` parallel classes of `v/3` disjoint
/// blocks covering every pair exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KirkmanSystem {
    pub v: usize,
    pub classes: Vec<Vec<Triplet>>,
}

/// Kirkman triple system of order `v ≡ 3 (mod 6)`. Order 9 is built from the
/// affine-plane pattern, orders 15 and 21 come from bundled certified data,
/// larger orders are attempted by bounded backtracking.
pub fn kts(v: usize) -> Result<KirkmanSystem> {
    kts_with(v, 0, KTS_DEFAULT_BUDGET)
}

pub fn kts_with(v: usize, seed: u64, budget: u64) -> Result<KirkmanSystem> {
    if v % 6 != 3 {
        return Err(Error::infeasible(v, "Kirkman systems need v = 3 (mod 6)"));
    }
    match v {
        9 => Ok(kts9()),
        15 => crate::cli::files::parse_kts(include_str!("../../data/kts15.kts")),
        21 => crate::cli::files::parse_kts(include_str!("../../data/kts21.kts")),
        _ => kts_search(v, seed, budget),
    }
}

/// Rows, columns and the two diagonal-line classes of the 3x3 grid.
fn kts9() -> KirkmanSystem {
    let block = |a: usize, b: usize, c: usize| Triplet::new(a, b, c).unwrap();
    let mut classes = Vec::with_capacity(4);
    classes.push((0..3).map(|r| block(3 * r, 3 * r + 1, 3 * r + 2)).collect());
    classes.push((0..3).map(|c| block(c, c + 3, c + 6)).collect());
    for slope in 1..3usize {
        classes.push(
            (0..3)
                .map(|c| {
                    let pts: Vec<usize> = (0..3).map(|r| 3 * r + (slope * r + c) % 3).collect();
                    block(pts[0], pts[1], pts[2])
                })
                .collect(),
        );
    }
    KirkmanSystem { v: 9, classes }
}

fn kts_search(v: usize, seed: u64, budget: u64) -> Result<KirkmanSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut nodes: u64 = 0;
    let nclasses = (v - 1) / 2;
    'restart: loop {
        let mut used = vec![false; v * v];
        let mut classes: Vec<Vec<Triplet>> = Vec::with_capacity(nclasses);
        for _ in 0..nclasses {
            match build_class(v, &used, &mut rng, &mut nodes, budget) {
                Some(class) => {
                    for b in &class {
                        let [a, b2, c] = b.vertices();
                        for (x, y) in [(a, b2), (a, c), (b2, c)] {
                            used[x * v + y] = true;
                        }
                    }
                    classes.push(class);
                }
                None => {
                    if nodes >= budget {
                        return Err(Error::SearchBudgetExceeded);
                    }
                    continue 'restart;
                }
            }
        }
        let system = KirkmanSystem { v, classes };
        verify_kts(&system)?;
        return Ok(system);
    }
}

/// One parallel class avoiding `used` pairs, by randomized backtracking.
/// Blocks are anchored at the vertex with the fewest completions left, which
/// keeps nearly-exhausted vertices from stranding the tail of the class.
fn build_class(
    v: usize,
    used: &[bool],
    rng: &mut ChaCha8Rng,
    nodes: &mut u64,
    budget: u64,
) -> Option<Vec<Triplet>> {
    fn candidates(v: usize, used: &[bool], remaining: &[Vertex], a: Vertex) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (i, &b) in remaining.iter().enumerate() {
            if b == a || used[a * v + b.min(a).max(b)] {}
            if b == a {
                continue;
            }
            if used[a.min(b) * v + a.max(b)] {
                continue;
            }
            for &c in &remaining[i + 1..] {
                if c == a {
                    continue;
                }
                if !used[a.min(c) * v + a.max(c)] && !used[b * v + c] {
                    out.push((b, c));
                }
            }
        }
        out
    }

    fn rec(
        v: usize,
        used: &[bool],
        remaining: &[Vertex],
        acc: &mut Vec<Triplet>,
        rng: &mut ChaCha8Rng,
        nodes: &mut u64,
        budget: u64,
    ) -> bool {
        *nodes += 1;
        if *nodes >= budget {
            return false;
        }
        if remaining.is_empty() {
            return true;
        }
        let mut anchor = remaining[0];
        let mut cands = candidates(v, used, remaining, anchor);
        for &x in &remaining[1..] {
            let alt = candidates(v, used, remaining, x);
            if alt.len() < cands.len() {
                anchor = x;
                cands = alt;
                if cands.is_empty() {
                    break;
                }
            }
        }
        let a = anchor;
        cands.shuffle(rng);
        for (b, c) in cands {
            let rest: Vec<Vertex> = remaining
                .iter()
                .copied()
                .filter(|&x| x != a && x != b && x != c)
                .collect();
            acc.push(Triplet::new(a, b, c).unwrap());
            if rec(v, used, &rest, acc, rng, nodes, budget) {
                return true;
            }
            acc.pop();
        }
        false
    }

    let remaining: Vec<Vertex> = (0..v).collect();
    let mut acc = Vec::with_capacity(v / 3);
    if rec(v, used, &remaining, &mut acc, rng, nodes, budget) {
        Some(acc)
    } else {
        None
    }
}

/// Exact accounting over the Kirkman system: every class partitions the
/// vertex set and every unordered pair is covered exactly once overall.
pub fn verify_kts(s: &KirkmanSystem) -> Result<()> {
    let v = s.v;
    let mut pair_count = vec![0u32; v * v];
    for (ci, class) in s.classes.iter().enumerate() {
        let mut seen = vec![false; v];
        let mut total = 0;
        for b in class {
            for x in b.vertices() {
                if x >= v || seen[x] {
                    return Err(Error::ClassNotPartition(ci));
                }
                seen[x] = true;
                total += 1;
            }
            let [a, b2, c] = b.vertices();
            for (x, y) in [(a, b2), (a, c), (b2, c)] {
                pair_count[x * v + y] += 1;
                if pair_count[x * v + y] > 1 {
                    return Err(Error::PairCoveredTwice(x, y));
                }
            }
        }
        if total != v {
            return Err(Error::ClassNotPartition(ci));
        }
    }
    for a in 0..v {
        for b in a + 1..v {
            if pair_count[a * v + b] == 0 {
                return Err(Error::PairUncovered(a, b));
            }
        }
    }
    Ok(())
}

/// Writes `p = 2a + 3b` with `b` minimized (`b ∈ {0,1}`); needs `p >= 2`.
pub fn two_three_split(p: usize) -> Result<(usize, usize)> {
    if p < 2 {
        return Err(Error::WrongPartSize {
            expected: 6,
            got: 3 * p,
        });
    }
    if p.is_multiple_of(2) {
        Ok((p / 2, 0))
    } else {
        Ok(((p - 3) / 2, 1))
    }
}

/// Top-level assembly parameters: `v = 12u + 3s` with `s ∈ {0,1,2}`, so the
/// vertex set splits into `4u + s` triplets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AssemblyParams {
    pub u: usize,
    pub s: usize,
}

impl AssemblyParams {
    pub fn for_order(v: usize) -> Result<Self> {
        if !v.is_multiple_of(3) || v < 12 {
            return Err(Error::infeasible(v, "v must be a multiple of 3, v >= 12"));
        }
        let n = v / 3;
        let (u, s) = (n / 4, n % 4);
        if s > 2 {
            return Err(Error::infeasible(v, "v must be 0, 3 or 6 (mod 12)"));
        }
        Ok(AssemblyParams { u, s })
    }

    pub fn part_count(&self) -> usize {
        4 * self.u + self.s
    }
}

/// Decomposition of the complete 3-partite hypergraph with part sizes
/// `3p, 3q, 3r` into 9-cycles, by splitting every part into triplets and
/// applying the three-part base block to each combination.
pub fn ktri3_c9(a: &[Vertex], b: &[Vertex], c: &[Vertex]) -> Result<Vec<TightCycle>> {
    PartLabeling::new(&[a, b, c])?;
    for part in [a, b, c] {
        if part.len() % 3 != 0 || part.is_empty() {
            return Err(Error::WrongPartSize {
                expected: 3,
                got: part.len(),
            });
        }
    }
    let mut cycles = Vec::with_capacity(a.len() * b.len() * c.len() / 9);
    for ck in c.chunks(3) {
        for bj in b.chunks(3) {
            for ai in a.chunks(3) {
                cycles.extend(blocks::tri333_c9(ai, bj, ck)?);
            }
        }
    }
    Ok(cycles)
}

/// Decomposition of the triplets with two vertices in `a` (size `3p`,
/// `p >= 2`) and one in `b` (size `3q`) into 9-cycles. Splits `b` into
/// triplets, `a` into 6-sets and 9-sets with `p = 2a + 3b`, and stitches the
/// leftover two-chunk crossings with three-part blocks.
pub fn kpq3_c9(a: &[Vertex], b: &[Vertex]) -> Result<Vec<TightCycle>> {
    PartLabeling::new(&[a, b])?;
    if !a.len().is_multiple_of(3) || !b.len().is_multiple_of(3) || b.is_empty() {
        return Err(Error::WrongPartSize {
            expected: 3,
            got: if !a.len().is_multiple_of(3) {
                a.len()
            } else {
                b.len()
            },
        });
    }
    let p = a.len() / 3;
    let (sixes, _) = two_three_split(p)?;
    let six_part = &a[..6 * sixes];
    let nine_part = &a[6 * sixes..];
    let mut cycles = Vec::new();
    for bj in b.chunks(3) {
        for s in six_part.chunks(6) {
            cycles.extend(blocks::kpq63_c9(s, bj)?);
        }
        for n in nine_part.chunks(9) {
            cycles.extend(blocks::kpq93_c9(n, bj)?);
        }
        for s in six_part.chunks(6) {
            for n in nine_part.chunks(9) {
                cycles.extend(ktri3_c9(bj, s, n)?);
            }
        }
        let six_chunks: Vec<&[Vertex]> = six_part.chunks(6).collect();
        for i in 0..six_chunks.len() {
            for j in i + 1..six_chunks.len() {
                cycles.extend(ktri3_c9(bj, six_chunks[i], six_chunks[j])?);
            }
        }
        let nine_chunks: Vec<&[Vertex]> = nine_part.chunks(9).collect();
        for i in 0..nine_chunks.len() {
            for j in i + 1..nine_chunks.len() {
                cycles.extend(ktri3_c9(bj, nine_chunks[i], nine_chunks[j])?);
            }
        }
    }
    Ok(cycles)
}

/// Decomposition of all crossing triplets between `a` (size `3p`) and `b`
/// (size `3q`), `p, q >= 2`, as the union of the two one-sided systems.
pub fn crt3_c9(a: &[Vertex], b: &[Vertex]) -> Result<Vec<TightCycle>> {
    let mut cycles = kpq3_c9(a, b)?;
    cycles.extend(kpq3_c9(b, a)?);
    Ok(cycles)
}

fn require_feasible(k: usize, v: usize, split2: bool) -> Result<()> {
    match spectrum::feasible(k, v, split2)? {
        Feasibility::Feasible => Ok(()),
        Feasibility::Infeasible(r) => Err(Error::infeasible(v, r.to_string())),
    }
}

fn consecutive_parts(start: usize, count: usize, size: usize) -> Vec<Vec<Vertex>> {
    (0..count)
        .map(|i| (start + size * i..start + size * (i + 1)).collect())
        .collect()
}

/// 6-cycle decomposition of `K_v^(3) - I` for `v ≡ 0, 3, 6 (mod 12)`.
///
/// The vertex set splits into `4u + s` triplets that become the 1-factor.
/// Edges meeting two triplets are covered pairwise; edges meeting three
/// triplets are covered through a pairing of the triples of the quotient
/// complete triple system, each pair yielding three 3+3+2 blocks.
pub fn construct_c6(v: usize) -> Result<Decomposition> {
    require_feasible(6, v, false)?;
    let parts = consecutive_parts(0, v / 3, 3);
    let factor = OneFactor::new(
        v,
        parts
            .iter()
            .map(|p| Triplet::from_slice(p).unwrap())
            .collect(),
    )?;
    if v == 6 {
        let cycles = blocks::bi6(&parts[0], &parts[1])?;
        return Ok(Decomposition {
            v,
            k: 6,
            factor,
            cycles,
        });
    }
    let n = AssemblyParams::for_order(v)?.part_count();
    debug_assert_eq!(n, v / 3);
    let mut cycles = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            cycles.extend(blocks::bi6(&parts[i], &parts[j])?);
        }
    }
    for pair in h2_decompose(n)? {
        let ([i, j], k1, k2) = pair.split();
        // split the union of the two private triplets into three pairs,
        // matching elements by position
        for l in 0..3 {
            let two = [parts[k1][l], parts[k2][l]];
            cycles.extend(blocks::tri332(&parts[i], &parts[j], &two)?);
        }
    }
    Ok(Decomposition {
        v,
        k: 6,
        factor,
        cycles,
    })
}

/// 9-cycle decomposition of `K_v^(3) - I` for every multiple of 3, `v >= 9`.
/// The three residue classes of `v` modulo 9 use different part layouts.
pub fn construct_c9(v: usize) -> Result<Decomposition> {
    require_feasible(9, v, false)?;
    let mut cycles = Vec::new();
    let mut factor_blocks: Vec<Triplet> = Vec::new();
    match v % 9 {
        0 => {
            let u = v / 9;
            let parts = consecutive_parts(0, u, 9);
            for p in &parts {
                let (cs, unc) = blocks::k9_c9(p)?;
                cycles.extend(cs);
                factor_blocks.extend(unc);
            }
            for i in 0..u {
                for j in i + 1..u {
                    cycles.extend(crt3_c9(&parts[i], &parts[j])?);
                }
            }
            for i in 0..u {
                for j in i + 1..u {
                    for l in j + 1..u {
                        cycles.extend(ktri3_c9(&parts[i], &parts[j], &parts[l])?);
                    }
                }
            }
        }
        3 => {
            let u = (v - 3) / 9;
            let a0: Vec<Vertex> = (0..3).collect();
            let parts = consecutive_parts(3, u, 9);
            for p in &parts {
                // 12-vertex layout with a0 on the {3,7,11} label slots, so a0
                // is one of the uncovered triplets and the other three fall
                // inside p
                let layout = vec![
                    p[0], p[1], p[2], a0[0], p[3], p[4], p[5], a0[1], p[6], p[7], p[8], a0[2],
                ];
                let (cs, unc) = blocks::k12_c9(&layout)?;
                debug_assert_eq!(unc[3], Triplet::from_slice(&a0)?);
                cycles.extend(cs);
                factor_blocks.extend_from_slice(&unc[..3]);
            }
            factor_blocks.push(Triplet::from_slice(&a0)?);
            for i in 0..u {
                for j in i + 1..u {
                    cycles.extend(crt3_c9(&parts[i], &parts[j])?);
                }
            }
            for i in 0..u {
                for j in i + 1..u {
                    for l in j + 1..u {
                        cycles.extend(ktri3_c9(&parts[i], &parts[j], &parts[l])?);
                    }
                }
            }
            for i in 0..u {
                for j in i + 1..u {
                    cycles.extend(ktri3_c9(&a0, &parts[i], &parts[j])?);
                }
            }
        }
        6 => {
            let u = (v - 6) / 9;
            let a0: Vec<Vertex> = (0..6).collect();
            // parts[0] is the special 9-set combined with a0 into a 15-vertex
            // block; the remaining parts get plain 9-vertex blocks
            let parts = consecutive_parts(6, u, 9);
            let (cs, unc) = blocks::k15_c9(&a0, &parts[0][..6], &parts[0][6..])?;
            cycles.extend(cs);
            factor_blocks.extend(unc);
            for p in parts.iter().skip(1) {
                let (cs, unc) = blocks::k9_c9(p)?;
                cycles.extend(cs);
                factor_blocks.extend(unc);
            }
            for p in parts.iter().skip(1) {
                cycles.extend(crt3_c9(&a0, p)?);
            }
            for i in 0..u {
                for j in i + 1..u {
                    cycles.extend(ktri3_c9(&a0, &parts[i], &parts[j])?);
                }
            }
            for i in 0..u {
                for j in i + 1..u {
                    cycles.extend(crt3_c9(&parts[i], &parts[j])?);
                }
            }
            for i in 0..u {
                for j in i + 1..u {
                    for l in j + 1..u {
                        cycles.extend(ktri3_c9(&parts[i], &parts[j], &parts[l])?);
                    }
                }
            }
        }
        _ => unreachable!("v is a multiple of 3"),
    }
    let factor = OneFactor::new(v, factor_blocks)?;
    Ok(Decomposition {
        v,
        k: 9,
        factor,
        cycles,
    })
}

/// 2-split 9-cycle system: two half-order systems plus a decomposition of
/// all crossing triplets.
pub fn construct_c9_split2(v: usize) -> Result<Decomposition> {
    require_feasible(9, v, true)?;
    let half = v / 2;
    let d1 = construct_c9(half)?;
    let d2 = construct_c9(half)?;
    let mut cycles = d1.cycles;
    cycles.extend(d2.cycles.iter().map(|c| c.shift(half, v)));
    let left: Vec<Vertex> = (0..half).collect();
    let right: Vec<Vertex> = (half..v).collect();
    cycles.extend(crt3_c9(&left, &right)?);
    let mut blocks_all: Vec<Triplet> = d1.factor.blocks().to_vec();
    blocks_all.extend(d2.factor.blocks().iter().map(|b| b.shift(half, v)));
    Ok(Decomposition {
        v,
        k: 9,
        factor: OneFactor::new(v, blocks_all)?,
        cycles,
    })
}

/// The 6,6,6 three-part decomposition, chained down to 3+3+2 blocks.
fn ktri666_c6(x: &[Vertex], y: &[Vertex], z: &[Vertex]) -> Result<Vec<TightCycle>> {
    let parts = PartLabeling::new(&[x, y, z])?;
    parts.expect_sizes(&[6, 6, 6])?;
    let mut out = Vec::with_capacity(36);
    for xh in x.chunks(3) {
        for yh in y.chunks(3) {
            for zp in z.chunks(2) {
                out.extend(blocks::tri332(xh, yh, zp)?);
            }
        }
    }
    Ok(out)
}

/// 2-split 6-cycle system for `v ≡ 0, 6, 12 (mod 24)`.
///
/// For `v = 12p` the crossing triplets are covered by 6+6 crossing blocks
/// between the two sides' 6-sets plus chained 6,6,6 three-part blocks. For
/// `v = 24p + 6` they are covered through Kirkman triple systems on the two
/// sides: matching parallel classes pairwise block-by-block yields one
/// 6-vertex block decomposition per block pair.
pub fn construct_c6_split2(v: usize, seed: u64) -> Result<Decomposition> {
    require_feasible(6, v, true)?;
    let half = v / 2;
    let d1 = construct_c6(half)?;
    let d2 = construct_c6(half)?;
    let mut cycles = d1.cycles;
    cycles.extend(d2.cycles.iter().map(|c| c.shift(half, v)));
    let mut factor_blocks: Vec<Triplet> = d1.factor.blocks().to_vec();
    factor_blocks.extend(d2.factor.blocks().iter().map(|b| b.shift(half, v)));

    if v % 24 == 6 {
        // half = 12p + 3: pair up the parallel classes of a Kirkman system
        // on each side
        let system = kts_with(half, seed, KTS_DEFAULT_BUDGET)?;
        for class in &system.classes {
            for t1 in class {
                let left = t1.vertices();
                for t2 in class {
                    let right: Vec<Vertex> = t2.vertices().iter().map(|&x| x + half).collect();
                    cycles.extend(blocks::bi6(&left, &right)?);
                }
            }
        }
    } else {
        // half = 6p: all 6+6 crossings plus two-same-side-one-other triples
        let p = half / 6;
        let a = consecutive_parts(0, p, 6);
        let b = consecutive_parts(half, p, 6);
        for ai in &a {
            for bj in &b {
                cycles.extend(blocks::crt66_c6(ai, bj)?);
            }
        }
        for (same, other) in [(&a, &b), (&b, &a)] {
            for i in 0..p {
                for j in i + 1..p {
                    for ok in other.iter() {
                        cycles.extend(ktri666_c6(&same[i], &same[j], ok)?);
                    }
                }
            }
        }
    }
    Ok(Decomposition {
        v,
        k: 6,
        factor: OneFactor::new(v, factor_blocks)?,
        cycles,
    })
}
