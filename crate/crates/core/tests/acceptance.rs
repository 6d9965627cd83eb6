//! Acceptance suite: one test per criterion, each printing a summary line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};

use hcd::assembler::{
    construct_c6, construct_c6_split2, construct_c9, construct_c9_split2, h2_decompose, kts,
    verify_h2_pairing, verify_kts,
};
use hcd::blocks;
use hcd::cli::files;
use hcd::cyclic::{self, bundled_system, triplet_type, type_alignment, type_count, verify_cyclic};
use hcd::hypercore::{
    edge_count, verify_decomposition, Decomposition, OneFactor, TightCycle, Triplet,
};
use hcd::spectrum::{c4_bounds, feasible, Feasibility};
use hcd::Error;

fn cycle(vs: &[usize]) -> TightCycle {
    TightCycle::new(vs.to_vec()).unwrap()
}

fn triplet(a: usize, b: usize, c: usize) -> Triplet {
    Triplet::new(a, b, c).unwrap()
}

#[test]
fn c01_spectrum_c6() {
    for v in [6, 12, 15, 18, 24, 27, 30, 36, 39] {
        let d = construct_c6(v).unwrap();
        assert_eq!(d.cycles.len(), v * v * (v - 3) / 36, "cycle count at v={v}");
        let r = verify_decomposition(&d);
        assert!(r.is_valid(), "v={v}: {r}");
    }
    for v in [9, 21, 33] {
        assert!(
            matches!(construct_c6(v), Err(Error::InfeasibleOrder { .. })),
            "v={v} must be infeasible"
        );
    }
    println!("criterion 1 (6-cycle spectrum): PASS");
}

#[test]
fn c02_spectrum_c9() {
    for v in [9, 12, 15, 18, 21, 24, 27, 30, 33, 36] {
        let d = construct_c9(v).unwrap();
        assert_eq!(d.cycles.len(), v * v * (v - 3) / 54, "cycle count at v={v}");
        let r = verify_decomposition(&d);
        assert!(r.is_valid(), "v={v}: {r}");
    }
    assert_eq!(construct_c9(15).unwrap().cycles.len(), 50);
    println!("criterion 2 (9-cycle spectrum): PASS");
}

#[test]
fn c03_explicit_block_fixtures() {
    let got = blocks::bi6(&[0, 1, 2], &[3, 4, 5]).unwrap();
    let want = [[0, 3, 1, 4, 2, 5], [3, 1, 5, 0, 4, 2], [1, 5, 2, 3, 0, 4]];
    assert_eq!(got.len(), want.len());
    for (g, w) in got.iter().zip(want.iter()) {
        assert_eq!(g, &cycle(w));
    }

    let got = blocks::tri332(&[0, 1, 2], &[3, 4, 5], &[6, 7]).unwrap();
    let want = [[0, 3, 6, 1, 5, 7], [1, 4, 6, 2, 3, 7], [2, 5, 6, 0, 4, 7]];
    for (g, w) in got.iter().zip(want.iter()) {
        assert_eq!(g, &cycle(w));
    }

    let got = blocks::kpq63_c9(&[0, 1, 2, 3, 4, 5], &[6, 7, 8]).unwrap();
    let want = [
        [0, 1, 6, 2, 3, 7, 4, 5, 8],
        [0, 4, 6, 5, 3, 7, 1, 2, 8],
        [1, 3, 6, 0, 5, 7, 2, 4, 8],
        [2, 5, 6, 1, 4, 7, 0, 3, 8],
        [3, 4, 6, 2, 0, 7, 1, 5, 8],
    ];
    assert_eq!(got.len(), want.len());
    for (g, w) in got.iter().zip(want.iter()) {
        assert_eq!(g, &cycle(w));
    }

    let got = blocks::tri333_c9(&[0, 3, 6], &[1, 4, 7], &[2, 5, 8]).unwrap();
    let want = [
        [0, 1, 2, 3, 4, 5, 6, 7, 8],
        [0, 2, 4, 6, 8, 1, 3, 5, 7],
        [0, 4, 8, 3, 7, 2, 6, 1, 5],
    ];
    for (g, w) in got.iter().zip(want.iter()) {
        assert_eq!(g, &cycle(w));
    }

    let a: Vec<usize> = (0..12).collect();
    let (got, uncovered) = blocks::k12_c9(&a).unwrap();
    for s in 0..12 {
        let base1: Vec<usize> = [0, 1, 2, 4, 5, 8, 10, 3, 6]
            .iter()
            .map(|&x| (x + s) % 12)
            .collect();
        let base2: Vec<usize> = [0, 1, 7, 11, 2, 9, 10, 6, 8]
            .iter()
            .map(|&x| (x + s) % 12)
            .collect();
        assert_eq!(got[s], cycle(&base1));
        assert_eq!(got[12 + s], cycle(&base2));
    }
    assert_eq!(
        uncovered,
        vec![
            triplet(0, 4, 8),
            triplet(1, 5, 9),
            triplet(2, 6, 10),
            triplet(3, 7, 11),
        ]
    );

    let a: Vec<usize> = (0..9).collect();
    let (got, uncovered) = blocks::k9_c9(&a).unwrap();
    for (s, g) in got.iter().enumerate() {
        let shifted: Vec<usize> = [0, 1, 2, 7, 6, 4, 8, 5, 3]
            .iter()
            .map(|&x| (x + s) % 9)
            .collect();
        assert_eq!(g, &cycle(&shifted));
    }
    assert_eq!(
        uncovered,
        vec![triplet(0, 3, 6), triplet(1, 4, 7), triplet(2, 5, 8)]
    );

    // even residues as the first part makes the residue labeling the identity
    let evens = [0, 2, 4, 6, 8, 10];
    let odds = [1, 3, 5, 7, 9, 11];
    let got = blocks::crt66_c6(&evens, &odds).unwrap();
    for s in 0..12 {
        let c1: Vec<usize> = [0, 5, 10, 8, 11, 2].iter().map(|&x| (x + s) % 12).collect();
        let c2: Vec<usize> = [0, 1, 9, 4, 3, 7].iter().map(|&x| (x + s) % 12).collect();
        assert_eq!(got[s], cycle(&c1));
        assert_eq!(got[12 + s], cycle(&c2));
    }
    for s in 0..6 {
        let c3: Vec<usize> = [0, 1, 2, 6, 7, 8].iter().map(|&x| (x + s) % 12).collect();
        assert_eq!(got[24 + s], cycle(&c3));
    }
    println!("criterion 3 (explicit block fixtures): PASS");
}

#[test]
fn c04_cyclic_regression() {
    let k6_counts = [
        (6, 3),
        (12, 36),
        (15, 75),
        (18, 135),
        (24, 336),
        (27, 486),
        (30, 675),
    ];
    let k9_counts = [
        (9, 9),
        (12, 24),
        (15, 50),
        (18, 90),
        (21, 147),
        (24, 224),
        (27, 324),
        (30, 450),
    ];
    for (k, counts) in [(6, &k6_counts[..]), (9, &k9_counts[..])] {
        for &(v, expected) in counts {
            let sys = bundled_system(k, v).unwrap();
            let report = verify_cyclic(&sys).unwrap();
            assert!(report.is_valid(), "k={k} v={v}: {report}");
            assert_eq!(
                report.expansion.cycle_count, expected,
                "expanded count at k={k} v={v}"
            );
            assert_eq!(expected, v * v * (v - 3) / (6 * k));
        }
    }
    assert_eq!(cyclic::bundled_systems().len(), 15);
    println!("criterion 4 (bundled cyclic systems): PASS");
}

/// One printed table row: base cycle, then (d, window vertices in type
/// order, type) for each of the k windows.
struct TypeRowFixture {
    cycle: &'static [usize],
    cells: &'static [(usize, [usize; 3], [usize; 3])],
}

fn check_type_rows(v: usize, rows: &[TypeRowFixture]) {
    for row in rows {
        let c = cycle(row.cycle);
        let edges = c.edges();
        assert_eq!(edges.len(), row.cells.len());
        for (i, (d, aligned_want, type_want)) in row.cells.iter().enumerate() {
            let (aligned, ty) = type_alignment(edges[i], v).unwrap();
            assert_eq!(
                ty.rep(),
                *type_want,
                "type of window {i} of {:?} at v={v}",
                row.cycle
            );
            assert_eq!(ty.d(), *d, "distance of window {i} of {:?}", row.cycle);
            assert_eq!(
                aligned, *aligned_want,
                "alignment of window {i} of {:?}",
                row.cycle
            );
        }
    }
}

#[test]
fn c05_type_table_fixtures() {
    // v=12, k=6: the full table
    let v12: [TypeRowFixture; 3] = [
        TypeRowFixture {
            cycle: &[0, 1, 2, 4, 5, 8],
            cells: &[
                (1, [0, 1, 2], [1, 2, 3]),
                (1, [1, 2, 4], [1, 2, 4]),
                (1, [4, 5, 2], [1, 2, 11]),
                (1, [4, 5, 8], [1, 2, 5]),
                (3, [5, 8, 0], [1, 4, 8]),
                (1, [0, 1, 8], [1, 2, 9]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 1, 5, 8, 3, 6],
            cells: &[
                (1, [0, 1, 5], [1, 2, 6]),
                (3, [5, 8, 1], [1, 4, 9]),
                (2, [3, 5, 8], [1, 3, 6]),
                (2, [6, 8, 3], [1, 3, 10]),
                (3, [0, 3, 6], [1, 4, 7]),
                (1, [0, 1, 6], [1, 2, 7]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 1, 9, 3, 5, 7],
            cells: &[
                (1, [0, 1, 9], [1, 2, 10]),
                (2, [1, 3, 9], [1, 3, 9]),
                (2, [3, 5, 9], [1, 3, 7]),
                (2, [3, 5, 7], [1, 3, 5]),
                (2, [5, 7, 0], [1, 3, 8]),
                (1, [0, 1, 7], [1, 2, 8]),
            ],
        },
    ];
    check_type_rows(12, &v12);

    // v=9, k=9: the full table
    let v9 = [TypeRowFixture {
        cycle: &[0, 1, 2, 7, 6, 4, 8, 5, 3],
        cells: &[
            (1, [0, 1, 2], [1, 2, 3]),
            (1, [1, 2, 7], [1, 2, 7]),
            (1, [6, 7, 2], [1, 2, 6]),
            (1, [6, 7, 4], [1, 2, 8]),
            (2, [4, 6, 8], [1, 3, 5]),
            (1, [4, 5, 8], [1, 2, 5]),
            (2, [3, 5, 8], [1, 3, 6]),
            (2, [3, 5, 0], [1, 3, 7]),
            (1, [0, 1, 3], [1, 2, 4]),
        ],
    }];
    check_type_rows(9, &v9);

    // v=30, k=6: ten sampled rows
    let v30_c6: [TypeRowFixture; 10] = [
        TypeRowFixture {
            cycle: &[0, 1, 2, 15, 16, 17],
            cells: &[
                (1, [0, 1, 2], [1, 2, 3]),
                (1, [1, 2, 15], [1, 2, 15]),
                (1, [15, 16, 2], [1, 2, 18]),
                (1, [15, 16, 17], [1, 2, 3]),
                (1, [16, 17, 0], [1, 2, 15]),
                (1, [0, 1, 17], [1, 2, 18]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 2, 3, 15, 27, 28],
            cells: &[
                (1, [2, 3, 0], [1, 2, 29]),
                (1, [2, 3, 15], [1, 2, 14]),
                (6, [27, 3, 15], [1, 7, 19]),
                (1, [27, 28, 15], [1, 2, 19]),
                (1, [27, 28, 0], [1, 2, 4]),
                (2, [28, 0, 2], [1, 3, 5]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 4, 6, 15, 24, 26],
            cells: &[
                (2, [4, 6, 0], [1, 3, 27]),
                (2, [4, 6, 15], [1, 3, 12]),
                (9, [6, 15, 24], [1, 10, 19]),
                (2, [24, 26, 15], [1, 3, 22]),
                (2, [24, 26, 0], [1, 3, 7]),
                (4, [26, 0, 4], [1, 5, 9]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 5, 1, 15, 29, 25],
            cells: &[
                (1, [0, 1, 5], [1, 2, 6]),
                (4, [1, 5, 15], [1, 5, 15]),
                (2, [29, 1, 15], [1, 3, 17]),
                (4, [25, 29, 15], [1, 5, 21]),
                (1, [29, 0, 25], [1, 2, 27]),
                (5, [25, 0, 5], [1, 6, 11]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 1, 8, 10, 2, 20],
            cells: &[
                (1, [0, 1, 8], [1, 2, 9]),
                (2, [8, 10, 1], [1, 3, 24]),
                (2, [8, 10, 2], [1, 3, 25]),
                (8, [2, 10, 20], [1, 9, 19]),
                (2, [0, 2, 20], [1, 3, 21]),
                (1, [0, 1, 20], [1, 2, 21]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 3, 9, 16, 1, 10],
            cells: &[
                (3, [0, 3, 9], [1, 4, 10]),
                (6, [3, 9, 16], [1, 7, 14]),
                (7, [9, 16, 1], [1, 8, 23]),
                (6, [10, 16, 1], [1, 7, 22]),
                (1, [0, 1, 10], [1, 2, 11]),
                (3, [0, 3, 10], [1, 4, 11]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 10, 21, 6, 24, 13],
            cells: &[
                (9, [21, 0, 10], [1, 10, 20]),
                (4, [6, 10, 21], [1, 5, 16]),
                (3, [21, 24, 6], [1, 4, 16]),
                (7, [6, 13, 24], [1, 8, 19]),
                (6, [24, 0, 13], [1, 7, 20]),
                (3, [10, 13, 0], [1, 4, 21]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 18, 10, 12, 19, 20],
            cells: &[
                (8, [10, 18, 0], [1, 9, 21]),
                (2, [10, 12, 18], [1, 3, 9]),
                (2, [10, 12, 19], [1, 3, 10]),
                (1, [19, 20, 12], [1, 2, 24]),
                (1, [19, 20, 0], [1, 2, 12]),
                (2, [18, 20, 0], [1, 3, 13]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 9, 24, 1, 7, 10],
            cells: &[
                (6, [24, 0, 9], [1, 7, 16]),
                (7, [24, 1, 9], [1, 8, 16]),
                (6, [1, 7, 24], [1, 7, 24]),
                (3, [7, 10, 1], [1, 4, 25]),
                (3, [7, 10, 0], [1, 4, 24]),
                (1, [9, 10, 0], [1, 2, 22]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 19, 7, 22, 3, 13],
            cells: &[
                (7, [0, 7, 19], [1, 8, 20]),
                (3, [19, 22, 7], [1, 4, 19]),
                (4, [3, 7, 22], [1, 5, 20]),
                (9, [13, 22, 3], [1, 10, 21]),
                (3, [0, 3, 13], [1, 4, 14]),
                (6, [13, 19, 0], [1, 7, 18]),
            ],
        },
    ];
    check_type_rows(30, &v30_c6);

    // v=30, k=9: ten sampled rows
    let v30_c9: [TypeRowFixture; 10] = [
        TypeRowFixture {
            cycle: &[0, 1, 3, 6, 7, 23, 24, 27, 29],
            cells: &[
                (1, [0, 1, 3], [1, 2, 4]),
                (2, [1, 3, 6], [1, 3, 6]),
                (1, [6, 7, 3], [1, 2, 28]),
                (1, [6, 7, 23], [1, 2, 18]),
                (1, [23, 24, 7], [1, 2, 15]),
                (1, [23, 24, 27], [1, 2, 5]),
                (2, [27, 29, 24], [1, 3, 28]),
                (1, [29, 0, 27], [1, 2, 29]),
                (1, [29, 0, 1], [1, 2, 3]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 2, 6, 1, 7, 23, 29, 24, 28],
            cells: &[
                (2, [0, 2, 6], [1, 3, 7]),
                (1, [1, 2, 6], [1, 2, 6]),
                (1, [6, 7, 1], [1, 2, 26]),
                (6, [1, 7, 23], [1, 7, 23]),
                (6, [23, 29, 7], [1, 7, 15]),
                (1, [23, 24, 29], [1, 2, 7]),
                (1, [28, 29, 24], [1, 2, 27]),
                (2, [28, 0, 24], [1, 3, 27]),
                (2, [28, 0, 2], [1, 3, 5]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 3, 7, 12, 1, 29, 18, 23, 27],
            cells: &[
                (3, [0, 3, 7], [1, 4, 8]),
                (4, [3, 7, 12], [1, 5, 10]),
                (5, [7, 12, 1], [1, 6, 25]),
                (2, [29, 1, 12], [1, 3, 14]),
                (2, [29, 1, 18], [1, 3, 20]),
                (5, [18, 23, 29], [1, 6, 12]),
                (4, [23, 27, 18], [1, 5, 26]),
                (3, [27, 0, 23], [1, 4, 27]),
                (3, [27, 0, 3], [1, 4, 7]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 4, 10, 1, 8, 22, 29, 20, 26],
            cells: &[
                (4, [0, 4, 10], [1, 5, 11]),
                (3, [1, 4, 10], [1, 4, 10]),
                (2, [8, 10, 1], [1, 3, 24]),
                (7, [1, 8, 22], [1, 8, 22]),
                (7, [22, 29, 8], [1, 8, 17]),
                (2, [20, 22, 29], [1, 3, 10]),
                (3, [26, 29, 20], [1, 4, 25]),
                (4, [26, 0, 20], [1, 5, 25]),
                (4, [26, 0, 4], [1, 5, 9]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 5, 7, 13, 6, 24, 17, 23, 25],
            cells: &[
                (2, [5, 7, 0], [1, 3, 26]),
                (2, [5, 7, 13], [1, 3, 9]),
                (1, [6, 7, 13], [1, 2, 8]),
                (7, [6, 13, 24], [1, 8, 19]),
                (7, [17, 24, 6], [1, 8, 20]),
                (1, [23, 24, 17], [1, 2, 25]),
                (2, [23, 25, 17], [1, 3, 25]),
                (2, [23, 25, 0], [1, 3, 8]),
                (5, [25, 0, 5], [1, 6, 11]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 6, 13, 1, 4, 26, 29, 17, 24],
            cells: &[
                (6, [0, 6, 13], [1, 7, 14]),
                (5, [1, 6, 13], [1, 6, 13]),
                (3, [1, 4, 13], [1, 4, 13]),
                (3, [1, 4, 26], [1, 4, 26]),
                (3, [26, 29, 4], [1, 4, 9]),
                (3, [26, 29, 17], [1, 4, 22]),
                (5, [24, 29, 17], [1, 6, 24]),
                (6, [24, 0, 17], [1, 7, 24]),
                (6, [24, 0, 6], [1, 7, 13]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 8, 10, 19, 2, 28, 11, 20, 22],
            cells: &[
                (2, [8, 10, 0], [1, 3, 23]),
                (2, [8, 10, 19], [1, 3, 12]),
                (8, [2, 10, 19], [1, 9, 18]),
                (4, [28, 2, 19], [1, 5, 22]),
                (4, [28, 2, 11], [1, 5, 14]),
                (8, [20, 28, 11], [1, 9, 22]),
                (2, [20, 22, 11], [1, 3, 22]),
                (2, [20, 22, 0], [1, 3, 11]),
                (8, [22, 0, 8], [1, 9, 17]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 13, 1, 11, 8, 22, 19, 29, 17],
            cells: &[
                (1, [0, 1, 13], [1, 2, 14]),
                (2, [11, 13, 1], [1, 3, 21]),
                (3, [8, 11, 1], [1, 4, 24]),
                (3, [8, 11, 22], [1, 4, 15]),
                (3, [19, 22, 8], [1, 4, 20]),
                (3, [19, 22, 29], [1, 4, 11]),
                (2, [17, 19, 29], [1, 3, 13]),
                (1, [29, 0, 17], [1, 2, 19]),
                (4, [13, 17, 0], [1, 5, 18]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 14, 2, 17, 3, 27, 13, 28, 16],
            cells: &[
                (2, [0, 2, 14], [1, 3, 15]),
                (3, [14, 17, 2], [1, 4, 19]),
                (1, [2, 3, 17], [1, 2, 16]),
                (6, [27, 3, 17], [1, 7, 21]),
                (6, [27, 3, 13], [1, 7, 17]),
                (1, [27, 28, 13], [1, 2, 17]),
                (3, [13, 16, 28], [1, 4, 16]),
                (2, [28, 0, 16], [1, 3, 19]),
                (2, [14, 16, 0], [1, 3, 17]),
            ],
        },
        TypeRowFixture {
            cycle: &[0, 6, 15, 25, 8, 18, 4, 13, 19],
            cells: &[
                (6, [0, 6, 15], [1, 7, 16]),
                (9, [6, 15, 25], [1, 10, 20]),
                (7, [8, 15, 25], [1, 8, 18]),
                (7, [18, 25, 8], [1, 8, 21]),
                (4, [4, 8, 18], [1, 5, 15]),
                (5, [13, 18, 4], [1, 6, 22]),
                (6, [13, 19, 4], [1, 7, 22]),
                (6, [13, 19, 0], [1, 7, 18]),
                (6, [0, 6, 19], [1, 7, 20]),
            ],
        },
    ];
    check_type_rows(30, &v30_c9);
    println!("criterion 5 (type table fixtures): PASS");
}

#[test]
fn c06_type_count_identity() {
    let mut v = 6;
    while v <= 60 {
        let types = cyclic::all_types(v).unwrap();
        assert_eq!(types.len(), type_count(v).unwrap(), "v={v}");
        assert_eq!(types.len(), v * (v - 3) / 6);
        v += 3;
    }
    println!("criterion 6 (type count identity): PASS");
}

#[test]
fn c07_h2_decomposer() {
    for n in [4, 5, 6, 8, 9, 10, 12, 13] {
        let pairs = h2_decompose(n).unwrap();
        assert_eq!(
            pairs.len(),
            n * (n - 1) * (n - 2) / 12,
            "pair count at n={n}"
        );
        verify_h2_pairing(n, &pairs).unwrap();
        assert_eq!(pairs, h2_decompose(n).unwrap(), "determinism at n={n}");
    }
    println!("criterion 7 (pairing decomposer): PASS");
}

#[test]
fn c08_kirkman_provider() {
    for v in [9, 15] {
        verify_kts(&kts(v).unwrap()).unwrap();
    }
    let s = kts(15).unwrap();
    assert_eq!(s.classes.len(), 7);
    assert!(s.classes.iter().all(|c| c.len() == 5));
    let mut pairs = BTreeSet::new();
    for class in &s.classes {
        for b in class {
            let [a, b2, c] = b.vertices();
            for p in [(a, b2), (a, c), (b2, c)] {
                assert!(pairs.insert(p), "pair {p:?} covered twice");
            }
        }
    }
    assert_eq!(pairs.len(), 105);
    println!("criterion 8 (Kirkman provider): PASS");
}

/// Every cycle must lie inside one half or consist of crossing edges only.
fn assert_split_structure(d: &Decomposition) {
    let half = d.v / 2;
    for (i, c) in d.cycles.iter().enumerate() {
        let mut inside = false;
        let mut crossing = false;
        for e in c.edges() {
            let left = e.vertices().iter().filter(|&&x| x < half).count();
            match left {
                0 | 3 => inside = true,
                _ => crossing = true,
            }
        }
        assert!(
            !(inside && crossing),
            "cycle {i} mixes inside and crossing edges"
        );
        if !crossing {
            let verts = c.vertices();
            assert!(
                verts.iter().all(|&x| x < half) || verts.iter().all(|&x| x >= half),
                "inside cycle {i} spans both halves"
            );
        }
    }
}

#[test]
fn c09_two_split_systems() {
    for v in [24, 30, 48] {
        let d = construct_c6_split2(v, 0).unwrap();
        assert_eq!(d.cycles.len(), edge_count(v).unwrap() / 6, "count at v={v}");
        let r = verify_decomposition(&d);
        assert!(r.is_valid(), "v={v}: {r}");
        assert_split_structure(&d);
    }
    for v in [18, 24, 30, 36] {
        let d = construct_c9_split2(v).unwrap();
        assert_eq!(d.cycles.len(), edge_count(v).unwrap() / 9, "count at v={v}");
        let r = verify_decomposition(&d);
        assert!(r.is_valid(), "v={v}: {r}");
        assert_split_structure(&d);
    }
    println!("criterion 9 (2-split systems): PASS");
}

#[test]
fn c10_c4_bounds() {
    assert_eq!(c4_bounds(9).schonheim, 18);
    assert_eq!(c4_bounds(6).johnson, Some(3));
    let mut v = 6;
    while v <= 120 {
        let b = c4_bounds(v);
        assert!(
            b.max_coverable_edges < v * v * (v - 3) / 6,
            "bound fails at v={v}"
        );
        assert!(b.impossible);
        assert!(matches!(
            feasible(4, v, false).unwrap(),
            Feasibility::Infeasible(_)
        ));
        v += 3;
    }
    println!("criterion 10 (4-cycle packing bounds): PASS");
}

#[test]
fn c11_randomized_property_trials() {
    let mut rng = StdRng::seed_from_u64(0x6cd);
    let trials_per_property = 2500;

    // relabeling invariance of valid decompositions
    for _ in 0..trials_per_property {
        let v = *[6usize, 9, 12].choose(&mut rng).unwrap();
        let (factor_blocks, cycles) = match v {
            6 => (
                vec![triplet(0, 1, 2), triplet(3, 4, 5)],
                blocks::bi6(&[0, 1, 2], &[3, 4, 5]).unwrap(),
            ),
            9 => {
                let a: Vec<usize> = (0..9).collect();
                let (c, u) = blocks::k9_c9(&a).unwrap();
                (u, c)
            }
            _ => {
                let a: Vec<usize> = (0..12).collect();
                let (c, u) = blocks::k12_c9(&a).unwrap();
                (u, c)
            }
        };
        let mut perm: Vec<usize> = (0..v).collect();
        perm.shuffle(&mut rng);
        let relabeled = Decomposition {
            v,
            k: cycles[0].k(),
            factor: OneFactor::new(
                v,
                factor_blocks
                    .iter()
                    .map(|b| {
                        let [x, y, z] = b.vertices();
                        triplet(perm[x], perm[y], perm[z])
                    })
                    .collect(),
            )
            .unwrap(),
            cycles: cycles
                .iter()
                .map(|c| c.relabel(|x| perm[x]).unwrap())
                .collect(),
        };
        let r = verify_decomposition(&relabeled);
        assert!(r.is_valid(), "relabeling broke validity: {r}");
    }

    // type shift-invariance
    for _ in 0..trials_per_property {
        let v = 3 * rng.random_range(2..=20);
        let t = loop {
            let a = rng.random_range(0..v);
            let b = rng.random_range(0..v);
            let c = rng.random_range(0..v);
            if a != b && b != c && a != c {
                if let Ok(ty) = triplet_type(triplet(a, b, c), v) {
                    break (triplet(a, b, c), ty);
                }
            }
        };
        let s = rng.random_range(0..v);
        assert_eq!(triplet_type(t.0.shift(s, v), v).unwrap(), t.1);
    }

    // cycle equality under rotation/reflection; inequality under a
    // transposition of non-adjacent vertices (k >= 5)
    for _ in 0..trials_per_property {
        let k = rng.random_range(5..=12);
        let mut verts: Vec<usize> = (0..60).collect();
        verts.shuffle(&mut rng);
        verts.truncate(k);
        let c = TightCycle::new(verts.clone()).unwrap();
        let r = rng.random_range(0..k);
        let rotated: Vec<usize> = (0..k).map(|i| verts[(i + r) % k]).collect();
        assert_eq!(c, TightCycle::new(rotated).unwrap());
        let mut reflected = verts.clone();
        reflected.reverse();
        assert_eq!(c, TightCycle::new(reflected).unwrap());
        let i = rng.random_range(0..k);
        let j = loop {
            let j = rng.random_range(0..k);
            let adjacent = (i + 1) % k == j || (j + 1) % k == i || i == j;
            if !adjacent {
                break j;
            }
        };
        let mut swapped = verts.clone();
        swapped.swap(i, j);
        assert_ne!(c, TightCycle::new(swapped).unwrap());
    }

    // file round-trips
    for _ in 0..trials_per_property {
        match rng.random_range(0..3) {
            0 => {
                let v = *[9usize, 12].choose(&mut rng).unwrap();
                let d = construct_c9(v).unwrap();
                let text = files::format_decomposition(&d);
                let reparsed = files::parse_decomposition(&text).unwrap();
                assert_eq!(files::format_decomposition(&reparsed), text);
            }
            1 => {
                let systems = cyclic::bundled_systems();
                let keys: Vec<&(usize, usize)> = systems.keys().collect();
                let key = keys.choose(&mut rng).unwrap();
                let s = &systems[*key];
                let text = files::format_base_cycles(s);
                let reparsed = files::parse_base_cycles(&text).unwrap();
                assert_eq!(files::format_base_cycles(&reparsed), text);
            }
            _ => {
                let s = kts(*[9usize, 15, 21].choose(&mut rng).unwrap()).unwrap();
                let text = files::format_kts(&s);
                let reparsed = files::parse_kts(&text).unwrap();
                assert_eq!(files::format_kts(&reparsed), text);
            }
        }
    }
    println!(
        "criterion 11 (randomized properties): PASS — {} trials",
        4 * trials_per_property
    );
}
