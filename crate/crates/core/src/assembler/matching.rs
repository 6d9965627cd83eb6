//! Maximum cardinality matching in general graphs via blossom contraction.
//!
//! Deterministic: vertices are scanned in index order and adjacency lists are
//! used as given, so equal inputs produce equal matchings.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

struct Matcher<'a> {
    n: usize,
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    queued: Vec<bool>,
    blossom: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn new(n: usize, adj: &'a [Vec<usize>]) -> Self {
        Matcher {
            n,
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            queued: vec![false; n],
            blossom: vec![false; n],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.n];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, root: usize, mut child: usize) {
        while self.base[v] != root {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> usize {
        self.parent.fill(NONE);
        self.queued.fill(false);
        for i in 0..self.n {
            self.base[i] = i;
        }
        self.queued[root] = true;
        let mut q = VecDeque::from([root]);
        while let Some(v) = q.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract the blossom
                    let cur = self.lca(v, to);
                    self.blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..self.n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.queued[i] {
                                self.queued[i] = true;
                                q.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    self.queued[self.mate[to]] = true;
                    q.push_back(self.mate[to]);
                }
            }
        }
        NONE
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(mut self) -> Vec<Option<usize>> {
        // greedy seed matching, then augment from every exposed vertex
        for v in 0..self.n {
            if self.mate[v] == NONE {
                for &u in &self.adj[v] {
                    if self.mate[u] == NONE {
                        self.mate[v] = u;
                        self.mate[u] = v;
                        break;
                    }
                }
            }
        }
        for v in 0..self.n {
            if self.mate[v] == NONE {
                let end = self.find_path(v);
                if end != NONE {
                    self.augment(end);
                }
            }
        }
        self.mate
            .into_iter()
            .map(|m| if m == NONE { None } else { Some(m) })
            .collect()
    }
}

/// Returns `mate[v]` for every vertex, `None` when `v` is unmatched.
pub fn maximum_matching(n: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    Matcher::new(n, adj).run()
}
