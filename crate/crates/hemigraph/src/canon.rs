//! Automorphism search, canonical forms and isomorphism testing via
//! individualization-refinement.
//!
//! The search tree alternates equitable refinement with individualization
//! of one vertex from the first smallest non-singleton cell. Each discrete
//! leaf yields a labeling; the canonical form is the lexicographically
//! smallest relabeled adjacency bit string over all leaves. Two leaves
//! with equal bit strings differ by an automorphism, which is verified by
//! a direct edge check before use. Discovered automorphisms prune sibling
//! branches through orbit computation on the individualized prefix, which
//! skips subtrees that are images of already-explored ones and therefore
//! changes neither the canonical minimum nor the generated group.

use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::graph6_encode;
use crate::group::PermGroup;
use crate::partition::{refine, OrderedPartition};
use crate::perm::Permutation;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AutError {
    #[error("generator {0} is not an automorphism of the graph")]
    NotAutomorphism(String),
    #[error("graphs have different vertex counts")]
    DegreeMismatch,
}

/// Relabeling-invariant certificate: vertex count plus the canonical
/// adjacency bit string (row-major upper triangle, MSB-first packing).
/// Equal exactly for isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u8>,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// The canonically relabeled graph itself.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        let mut k = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.bits[k / 8] >> (7 - k % 8) & 1 == 1 {
                    g.add_edge(u, v);
                }
                k += 1;
            }
        }
        g
    }

    /// Portable serialization: graph6 of the canonically relabeled graph.
    pub fn to_graph6(&self) -> String {
        graph6_encode(&self.to_graph())
    }
}

#[derive(Clone)]
struct Leaf {
    bits: Vec<u8>,
    /// vertex -> canonical position
    labeling: Permutation,
}

struct IrSearch<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Permutation>,
}

impl<'a> IrSearch<'a> {
    fn run(g: &'a Graph, initial: &OrderedPartition) -> Self {
        let mut search = IrSearch {
            g,
            first: None,
            best: None,
            autos: Vec::new(),
        };
        let root = refine(g, initial);
        search.explore(root, &mut Vec::new());
        search
    }

    fn explore(&mut self, partition: OrderedPartition, prefix: &mut Vec<usize>) {
        match partition.target_cell() {
            None => self.visit_leaf(&partition),
            Some(cell_idx) => {
                let cell = partition.cells()[cell_idx].clone();
                let mut tried: Vec<usize> = Vec::new();
                for &v in &cell {
                    if self.equivalent_to_tried(v, &tried, prefix) {
                        continue;
                    }
                    tried.push(v);
                    let child = refine(self.g, &partition.individualized(v));
                    prefix.push(v);
                    self.explore(child, prefix);
                    prefix.pop();
                }
            }
        }
    }

    /// True if some already-discovered automorphism fixing the current
    /// prefix pointwise maps `v` into the tried set.
    fn equivalent_to_tried(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        if tried.is_empty() || self.autos.is_empty() {
            return false;
        }
        let fixing: Vec<&Permutation> = self
            .autos
            .iter()
            .filter(|a| prefix.iter().all(|&p| a.apply(p) == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        // orbit of v under the subgroup generated by the prefix-fixing
        // automorphisms, by closure
        let n = self.g.vertex_count();
        let mut in_orbit = vec![false; n];
        in_orbit[v] = true;
        let mut queue = vec![v];
        while let Some(p) = queue.pop() {
            for a in &fixing {
                for q in [a.apply(p), a.inverse().apply(p)] {
                    if !in_orbit[q] {
                        in_orbit[q] = true;
                        queue.push(q);
                    }
                }
            }
        }
        tried.iter().any(|&u| in_orbit[u])
    }

    fn visit_leaf(&mut self, partition: &OrderedPartition) {
        let n = self.g.vertex_count();
        let verts: Vec<usize> = partition.cells().iter().map(|c| c[0]).collect();
        let mut images = vec![0usize; n];
        for (pos, &v) in verts.iter().enumerate() {
            images[v] = pos;
        }
        let labeling = Permutation::from_images(images).expect("discrete partition is a bijection");
        let nbits = n * n.saturating_sub(1) / 2;
        let mut bits = vec![0u8; nbits.div_ceil(8)];
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.g.has_edge(verts[i], verts[j]) {
                    bits[k / 8] |= 0x80 >> (k % 8);
                }
                k += 1;
            }
        }
        let leaf = Leaf { bits, labeling };
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return;
        };
        let mut candidates = Vec::new();
        if first.bits == leaf.bits {
            candidates.push(automorphism_between(first, &leaf));
        }
        let best = self.best.as_ref().expect("best is set with first");
        if leaf.bits < best.bits {
            self.best = Some(leaf);
        } else if leaf.bits == best.bits {
            candidates.push(automorphism_between(best, &leaf));
        }
        for candidate in candidates {
            self.add_automorphism(candidate);
        }
    }

    fn add_automorphism(&mut self, candidate: Permutation) {
        if candidate.is_identity()
            || self.autos.contains(&candidate)
            || !self.g.is_automorphism(&candidate)
        {
            return;
        }
        self.autos.push(candidate);
    }
}

/// Maps each vertex through `a`'s labeling and back through `b`'s: with
/// equal leaf bit strings the result preserves adjacency.
fn automorphism_between(a: &Leaf, b: &Leaf) -> Permutation {
    let b_inv = b.labeling.inverse();
    a.labeling.then(&b_inv)
}

/// Generators of the automorphism group of `g` that stabilize the cells
/// of `initial` setwise. Every generator has passed a direct
/// adjacency-preservation check.
pub fn automorphism_group(g: &Graph, initial: &OrderedPartition) -> PermGroup {
    let search = IrSearch::run(g, initial);
    PermGroup::from_generators(g.vertex_count(), search.autos)
        .expect("verified automorphisms share the graph degree")
}

/// Canonical form over the unit partition.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Canonical form plus the labeling (vertex -> canonical position) that
/// realizes it.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Permutation) {
    let n = g.vertex_count();
    if n == 0 {
        return (CanonicalForm { n, bits: vec![] }, Permutation::identity(0));
    }
    let search = IrSearch::run(g, &OrderedPartition::unit(n));
    let best = search.best.expect("nonempty graph has at least one leaf");
    (
        CanonicalForm {
            n,
            bits: best.bits,
        },
        best.labeling,
    )
}

/// Isomorphism test with witness: `Some(p)` maps vertices of `g` to
/// vertices of `h` preserving adjacency, `None` if not isomorphic. The
/// witness is assembled from the two canonical labelings and verified
/// edge by edge.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Permutation> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (cg, lg) = canonical_labeling(g);
    let (ch, lh) = canonical_labeling(h);
    if cg != ch {
        return None;
    }
    let witness = lg.then(&lh.inverse());
    for (u, v) in g.edges() {
        assert!(
            h.has_edge(witness.apply(u), witness.apply(v)),
            "canonical witness failed the edge check"
        );
    }
    for (u, v) in h.edges() {
        let (iu, iv) = (witness.inverse().apply(u), witness.inverse().apply(v));
        assert!(g.has_edge(iu, iv), "canonical witness failed the reverse edge check");
    }
    Some(witness)
}

/// Orbits of `group` acting on the unordered edges of `g`. Every
/// generator must preserve the edge relation.
pub fn edge_orbits(
    g: &Graph,
    group: &PermGroup,
) -> Result<Vec<Vec<(usize, usize)>>, AutError> {
    for gen in group.generators() {
        if !g.is_automorphism(gen) {
            return Err(AutError::NotAutomorphism(gen.to_string()));
        }
    }
    let edges = g.edges();
    let index = |u: usize, v: usize| -> usize {
        edges
            .binary_search(&(u.min(v), u.max(v)))
            .expect("image of an edge is an edge")
    };
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for (e, &(u, v)) in edges.iter().enumerate() {
        for gen in group.generators() {
            let img = index(gen.apply(u), gen.apply(v));
            let (a, b) = (find(&mut parent, e), find(&mut parent, img));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut orbit_of_root: std::collections::BTreeMap<usize, usize> = Default::default();
    for e in 0..edges.len() {
        let root = find(&mut parent, e);
        let idx = *orbit_of_root.entry(root).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        orbits[idx].push(edges[e]);
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::OrderedPartition;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push((i, j));
            }
        }
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn complete_graph_has_full_symmetry() {
        let group = automorphism_group(&complete(4), &OrderedPartition::unit(4));
        assert_eq!(group.order(), 24);
    }

    #[test]
    fn cycle_has_dihedral_symmetry() {
        let group = automorphism_group(&cycle(5), &OrderedPartition::unit(5));
        assert_eq!(group.order(), 10);
    }

    #[test]
    fn empty_and_singleton_graphs() {
        let g0 = Graph::new(0);
        assert_eq!(automorphism_group(&g0, &OrderedPartition::unit(0)).order(), 1);
        assert_eq!(canonical_form(&g0).to_graph6(), "?");
        let g1 = Graph::new(1);
        assert_eq!(automorphism_group(&g1, &OrderedPartition::unit(1)).order(), 1);
        assert_eq!(canonical_form(&g1).to_graph6(), "@");
    }

    #[test]
    fn colors_restrict_the_group() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let unit = automorphism_group(&path, &OrderedPartition::unit(3));
        assert_eq!(unit.order(), 2);
        let colored = OrderedPartition::from_cells(3, vec![vec![0], vec![1, 2]]).unwrap();
        let fixed = automorphism_group(&path, &colored);
        assert_eq!(fixed.order(), 1);
    }

    #[test]
    fn canonical_form_separates_non_isomorphic() {
        let k3 = complete(3);
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_ne!(canonical_form(&k3), canonical_form(&path));
        assert!(are_isomorphic(&k3, &path).is_none());
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]);
        let base = canonical_form(&g);
        let p = Permutation::from_cycles(6, &[&[0, 4, 2], &[1, 5]]);
        assert_eq!(canonical_form(&g.relabeled(&p)), base);
    }

    #[test]
    fn isomorphism_witness_is_returned() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let p = Permutation::from_cycles(4, &[&[0, 3], &[1, 2]]);
        let h = g.relabeled(&p);
        let witness = are_isomorphic(&g, &h).expect("relabelings are isomorphic");
        for (u, v) in g.edges() {
            assert!(h.has_edge(witness.apply(u), witness.apply(v)));
        }
        assert!(are_isomorphic(&g, &g).is_some());
    }

    #[test]
    fn generators_are_automorphisms() {
        let (pi, _) =
            crate::incidence::projective_vertex_face_graph(&crate::polyhedron::icosahedron())
                .unwrap();
        let group = automorphism_group(&pi, &OrderedPartition::unit(16));
        assert_eq!(group.order(), 60);
        for gen in group.generators() {
            assert!(pi.is_automorphism(gen));
        }
    }

    #[test]
    fn edge_orbit_computation() {
        let c5 = cycle(5);
        let trivial = PermGroup::trivial(5);
        let orbits = edge_orbits(&c5, &trivial).unwrap();
        assert_eq!(orbits.len(), 5);

        let full = automorphism_group(&c5, &OrderedPartition::unit(5));
        let orbits = edge_orbits(&c5, &full).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].len(), 5);
    }

    #[test]
    fn edge_orbits_reject_non_automorphisms() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let bogus = PermGroup::from_generators(
            3,
            vec![Permutation::from_cycles(3, &[&[0, 1]])],
        )
        .unwrap();
        assert!(matches!(
            edge_orbits(&path, &bogus),
            Err(AutError::NotAutomorphism(_))
        ));
    }
}
