//! Simple undirected graphs over vertex ids 0..n, stored as a bit
//! adjacency matrix for constant-time membership tests.

use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::perm::Permutation;

/// Construction-provenance tag for graphs built from a polyhedron:
/// whether a graph vertex came from the vertex side or the face side of
/// the incidence relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    VertexSide,
    FaceSide,
}

/// Simple undirected graph. No loops, no multi-edges.
///
/// Optional side labels record construction provenance only; they take no
/// part in equality or hashing, which compare the edge relation alone.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
    sides: Option<Vec<Side>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64).max(1);
        Self {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
            sides: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.bits[u * self.words_per_row + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words_per_row + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words_per_row + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words_per_row + u / 64] &= !(1 << (u % 64));
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        let row = &self.bits[v * self.words_per_row..(v + 1) * self.words_per_row];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    /// All edges as (min, max) pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn set_sides(&mut self, sides: Vec<Side>) {
        assert_eq!(sides.len(), self.n);
        self.sides = Some(sides);
    }

    pub fn sides(&self) -> Option<&[Side]> {
        self.sides.as_deref()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.n
    }

    /// BFS 2-coloring test.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The graph relabeled by `p`: edge (u, v) becomes (p(u), p(v)).
    /// Side labels are dropped.
    pub fn relabeled(&self, p: &Permutation) -> Graph {
        assert_eq!(p.degree(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(p.apply(u), p.apply(v));
        }
        g
    }

    /// Copy with one appended vertex adjacent to `neighbors`.
    pub fn extended(&self, neighbors: impl IntoIterator<Item = usize>) -> Graph {
        let mut g = Graph::new(self.n + 1);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for u in neighbors {
            g.add_edge(u, self.n);
        }
        g
    }

    /// True if `p` maps the edge relation onto itself.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        if p.degree() != self.n {
            return false;
        }
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) != self.has_edge(p.apply(u), p.apply(v)) {
                    return false;
                }
            }
        }
        true
    }

    /// Upper-triangle adjacency bits in row-major order ((0,1), (0,2), …,
    /// (0,n−1), (1,2), …), packed MSB-first so byte-wise comparison equals
    /// bit-wise lexicographic comparison.
    pub fn upper_triangle_bits(&self) -> Vec<u8> {
        let nbits = self.n * self.n.saturating_sub(1) / 2;
        let mut out = vec![0u8; nbits.div_ceil(8)];
        let mut k = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out[k / 8] |= 0x80 >> (k % 8);
                }
                k += 1;
            }
        }
        out
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bits.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_edges_and_degrees() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    #[should_panic(expected = "loops")]
    fn loops_rejected() {
        Graph::new(3).add_edge(1, 1);
    }

    #[test]
    fn connectivity_and_bipartiteness() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(c4.is_connected());
        assert!(c4.is_bipartite());

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(!c5.is_bipartite());

        let disconnected = Graph::from_edges(4, &[(0, 1)]);
        assert!(!disconnected.is_connected());
        assert!(disconnected.is_bipartite());

        assert!(Graph::new(0).is_connected());
    }

    #[test]
    fn relabeling_preserves_structure() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let p = Permutation::from_images(vec![2, 0, 1]).unwrap();
        let h = g.relabeled(&p);
        assert!(h.has_edge(2, 0) && h.has_edge(0, 1));
        assert!(!h.has_edge(2, 1));
    }

    #[test]
    fn automorphism_check() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let flip = Permutation::from_images(vec![2, 1, 0]).unwrap();
        let bad = Permutation::from_images(vec![1, 0, 2]).unwrap();
        assert!(path.is_automorphism(&flip));
        assert!(!path.is_automorphism(&bad));
    }

    #[test]
    fn triangle_bits_row_major() {
        // path 0-1-2: pairs (0,1)=1, (0,2)=0, (1,2)=1 -> bits 101 -> 0xA0
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(path.upper_triangle_bits(), vec![0xA0]);
    }

    #[test]
    fn large_vertex_counts_use_multiple_words() {
        let mut g = Graph::new(130);
        g.add_edge(0, 129);
        g.add_edge(64, 65);
        assert!(g.has_edge(129, 0));
        assert!(g.has_edge(65, 64));
        assert_eq!(g.edge_count(), 2);
    }
}
