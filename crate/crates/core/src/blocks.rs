//! Explicit small decompositions, each parameterized by caller-supplied
//! labeled vertex sets so the assemblers can instantiate them on arbitrary
//! parts. Every operation emits its cycles in a fixed order (template order,
//! then shift index) and is certified by the verifier in the tests below.

use std::sync::OnceLock;

use crate::hypercore::{PartLabeling, TightCycle, Triplet, Vertex};
use crate::Result;

fn instantiate(template: &[usize], label: &[Vertex]) -> TightCycle {
    TightCycle::new(template.iter().map(|&i| label[i]).collect())
        .expect("block templates produce valid cycles")
}

/// Decomposition of the complete hypergraph on `t1 ∪ t2` minus the 1-factor
/// `{t1, t2}` into three 6-cycles.
pub fn bi6(t1: &[Vertex], t2: &[Vertex]) -> Result<Vec<TightCycle>> {
    let parts = PartLabeling::new(&[t1, t2])?;
    parts.expect_sizes(&[3, 3])?;
    let all: Vec<Vertex> = t1.iter().chain(t2.iter()).copied().collect();
    const TEMPLATES: [[usize; 6]; 3] = [[0, 3, 1, 4, 2, 5], [3, 1, 5, 0, 4, 2], [1, 5, 2, 3, 0, 4]];
    Ok(TEMPLATES.iter().map(|t| instantiate(t, &all)).collect())
}

/// Decomposition of the complete 3-partite hypergraph with part sizes 3,3,2
/// into three 6-cycles.
pub fn tri332(a: &[Vertex], b: &[Vertex], c: &[Vertex]) -> Result<Vec<TightCycle>> {
    let parts = PartLabeling::new(&[a, b, c])?;
    parts.expect_sizes(&[3, 3, 2])?;
    Ok((0..3)
        .map(|i| {
            TightCycle::new(vec![a[i], b[i], c[0], a[(i + 1) % 3], b[(i + 2) % 3], c[1]])
                .expect("distinct parts")
        })
        .collect())
}

/// Decomposition of all crossing triplets between two 6-sets into thirty
/// 6-cycles. Built from a rotational construction on `Z_12` where even
/// residues in order map to `a` and odd residues to `b`.
pub fn crt66_c6(a: &[Vertex], b: &[Vertex]) -> Result<Vec<TightCycle>> {
    let parts = PartLabeling::new(&[a, b])?;
    parts.expect_sizes(&[6, 6])?;
    let label = |r: usize| -> Vertex {
        if r.is_multiple_of(2) {
            a[r / 2]
        } else {
            b[r / 2]
        }
    };
    const FULL: [[usize; 6]; 2] = [[0, 5, 10, 8, 11, 2], [0, 1, 9, 4, 3, 7]];
    let mut cycles = Vec::with_capacity(30);
    for t in &FULL {
        for s in 0..12 {
            cycles.push(
                TightCycle::new(t.iter().map(|&r| label((r + s) % 12)).collect())
                    .expect("shifted residues stay distinct"),
            );
        }
    }
    // the third cycle is invariant under the shift by 6, so 6 positions suffice
    const HALF: [usize; 6] = [0, 1, 2, 6, 7, 8];
    for s in 0..6 {
        cycles.push(
            TightCycle::new(HALF.iter().map(|&r| label((r + s) % 12)).collect())
                .expect("shifted residues stay distinct"),
        );
    }
    Ok(cycles)
}

/// Rotational decomposition of the complete hypergraph on nine vertices
/// minus a 1-factor into nine 9-cycles; returns the cycles plus the three
/// uncovered triplets `{a[0],a[3],a[6]}, {a[1],a[4],a[7]}, {a[2],a[5],a[8]}`.
pub fn k9_c9(a: &[Vertex]) -> Result<(Vec<TightCycle>, Vec<Triplet>)> {
    let parts = PartLabeling::new(&[a])?;
    parts.expect_sizes(&[9])?;
    const TEMPLATE: [usize; 9] = [0, 1, 2, 7, 6, 4, 8, 5, 3];
    let cycles = (0..9)
        .map(|i| {
            TightCycle::new(TEMPLATE.iter().map(|&p| a[(p + i) % 9]).collect())
                .expect("distinct labels")
        })
        .collect();
    let uncovered = (0..3)
        .map(|i| Triplet::new(a[i], a[i + 3], a[i + 6]).expect("distinct labels"))
        .collect();
    Ok((cycles, uncovered))
}

/// A fixed decomposition of the ordinary complete graph K9 into six graph
/// 6-cycles, used to drive [`kpq93_c9`]. Frozen data; any valid decomposition
/// would do, this one is committed for determinism.
pub fn k9_graph_c6() -> &'static [[Vertex; 6]; 6] {
    static CYCLES: OnceLock<[[Vertex; 6]; 6]> = OnceLock::new();
    CYCLES.get_or_init(|| {
        let raw = include_str!("../data/k9_graph_cycles.txt");
        let mut out = [[0usize; 6]; 6];
        let mut row = 0;
        for line in raw.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let vals: Vec<Vertex> = line
                .split_whitespace()
                .map(|t| t.parse().expect("k9 cycle data is numeric"))
                .collect();
            assert_eq!(vals.len(), 6, "k9 cycle data rows have six vertices");
            out[row].copy_from_slice(&vals);
            row += 1;
        }
        assert_eq!(row, 6, "k9 cycle data has six rows");
        out
    })
}

/// Decomposition of the triplets with two vertices in the 9-set `a` and one
/// in the 3-set `b` into twelve 9-cycles, two per graph 6-cycle of
/// [`k9_graph_c6`].
pub fn kpq93_c9(a: &[Vertex], b: &[Vertex]) -> Result<Vec<TightCycle>> {
    let parts = PartLabeling::new(&[a, b])?;
    parts.expect_sizes(&[9, 3])?;
    let mut cycles = Vec::with_capacity(12);
    for g in k9_graph_c6() {
        let x: Vec<Vertex> = g.iter().map(|&i| a[i]).collect();
        cycles.push(
            TightCycle::new(vec![x[0], b[0], x[1], x[2], b[1], x[3], x[4], b[2], x[5]])
                .expect("distinct parts"),
        );
        cycles.push(
            TightCycle::new(vec![b[1], x[0], x[1], b[2], x[2], x[3], b[0], x[4], x[5]])
                .expect("distinct parts"),
        );
    }
    Ok(cycles)
}

/// Decomposition of the triplets with two vertices in the 6-set `a` and one
/// in the 3-set `b` into five 9-cycles.
pub fn kpq63_c9(a: &[Vertex], b: &[Vertex]) -> Result<Vec<TightCycle>> {
    let parts = PartLabeling::new(&[a, b])?;
    parts.expect_sizes(&[6, 3])?;
    const TEMPLATES: [[usize; 6]; 5] = [
        [0, 1, 2, 3, 4, 5],
        [0, 4, 5, 3, 1, 2],
        [1, 3, 0, 5, 2, 4],
        [2, 5, 1, 4, 0, 3],
        [3, 4, 2, 0, 1, 5],
    ];
    Ok(TEMPLATES
        .iter()
        .map(|t| {
            TightCycle::new(vec![
                a[t[0]], a[t[1]], b[0], a[t[2]], a[t[3]], b[1], a[t[4]], a[t[5]], b[2],
            ])
            .expect("distinct parts")
        })
        .collect())
}

/// Decomposition of the complete 3-partite hypergraph with three parts of
/// size 3 into three 9-cycles (stepping through the nine labels with strides
/// 1, 2 and 4; label classes mod 3 are the parts).
pub fn tri333_c9(a: &[Vertex], b: &[Vertex], c: &[Vertex]) -> Result<Vec<TightCycle>> {
    let parts = PartLabeling::new(&[a, b, c])?;
    parts.expect_sizes(&[3, 3, 3])?;
    let label = |s: usize| -> Vertex {
        match s % 3 {
            0 => a[s / 3],
            1 => b[s / 3],
            _ => c[s / 3],
        }
    };
    Ok([1usize, 2, 4]
        .iter()
        .map(|&step| {
            TightCycle::new((0..9).map(|j| label((j * step) % 9)).collect())
                .expect("distinct parts")
        })
        .collect())
}

/// Rotational decomposition of the complete hypergraph on twelve vertices
/// minus a 1-factor into twenty-four 9-cycles; the four uncovered triplets
/// are `{a[i], a[i+4], a[i+8]}` for `i = 0..4`.
pub fn k12_c9(a: &[Vertex]) -> Result<(Vec<TightCycle>, Vec<Triplet>)> {
    let parts = PartLabeling::new(&[a])?;
    parts.expect_sizes(&[12])?;
    const TEMPLATES: [[usize; 9]; 2] =
        [[0, 1, 2, 4, 5, 8, 10, 3, 6], [0, 1, 7, 11, 2, 9, 10, 6, 8]];
    let mut cycles = Vec::with_capacity(24);
    for t in &TEMPLATES {
        for s in 0..12 {
            cycles.push(
                TightCycle::new(t.iter().map(|&p| a[(p + s) % 12]).collect())
                    .expect("distinct labels"),
            );
        }
    }
    let uncovered = (0..4)
        .map(|i| Triplet::new(a[i], a[i + 4], a[i + 8]).expect("distinct labels"))
        .collect();
    Ok((cycles, uncovered))
}

/// Decomposition of the complete hypergraph on fifteen vertices minus a
/// 1-factor into fifty 9-cycles, assembled over parts `a`, `b` of size 6 and
/// `c` of size 3. Returns the five uncovered triplets: two inside `a`, two
/// inside `b`, and `c` itself.
pub fn k15_c9(a: &[Vertex], b: &[Vertex], c: &[Vertex]) -> Result<(Vec<TightCycle>, Vec<Triplet>)> {
    let parts = PartLabeling::new(&[a, b, c])?;
    parts.expect_sizes(&[6, 6, 3])?;
    // lay c on the {0,3,6} label slots of each k9 copy so that c is one of
    // its uncovered triplets and the other two fall inside a (resp. b)
    let layout = |side: &[Vertex]| -> Vec<Vertex> {
        vec![
            c[0], side[0], side[1], c[1], side[2], side[3], c[2], side[4], side[5],
        ]
    };
    let (cycles_ac, unc_ac) = k9_c9(&layout(a))?;
    let (cycles_bc, unc_bc) = k9_c9(&layout(b))?;
    debug_assert_eq!(unc_ac[0], Triplet::from_slice(c)?);
    let mut cycles = cycles_ac;
    cycles.extend(cycles_bc);
    cycles.extend(crate::assembler::crt3_c9(a, b)?);
    cycles.extend(crate::assembler::ktri3_c9(a, b, c)?);
    let uncovered = vec![
        unc_ac[1],
        unc_ac[2],
        unc_bc[1],
        unc_bc[2],
        Triplet::from_slice(c)?,
    ];
    Ok((cycles, uncovered))
}
