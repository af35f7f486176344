//! Vertex-face incidence graphs and their antipodal (projective)
//! quotients, plus the wheel-based chord construction.
//!
//! For a polyhedron P the vertex-face graph joins each vertex to the faces
//! it is a corner of. For a centrally symmetric P the projective variant
//! is the same construction on antipodal classes: a vertex class is
//! adjacent to a face class when some representative pair is incident.
//! Applied to the icosahedron the quotient is a 16-vertex bipartite graph
//! (6 vertex classes of degree 5, 10 face classes of degree 3); adding
//! three chords chosen from a 5-wheel in the skeleton cuts its
//! automorphism group from A5 down to A4.

use thiserror::Error;

use crate::graph::{Graph, Side};
use crate::polyhedron::{antipodal_pairing, AntipodalPairing, GeometryError, Polyhedron};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IncidenceError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("vertex {0} is not the hub of a 5-wheel")]
    NoWheel(usize),
    #[error("chord ({0}, {1}) already present in the base graph")]
    EdgeExists(usize, usize),
    #[error("wheel vertices do not lie in 6 distinct antipodal classes")]
    ClassCollision,
}

/// Bipartite incidence graph on V(P) ⊔ F(P): vertex v is adjacent to face
/// f iff v is a corner of f. Face k becomes graph vertex |V| + k. Side
/// labels are set.
pub fn vertex_face_graph(p: &Polyhedron) -> Graph {
    let nv = p.vertex_count();
    let mut g = Graph::new(nv + p.face_count());
    for (fi, face) in p.faces().iter().enumerate() {
        for &v in face {
            g.add_edge(v, nv + fi);
        }
    }
    let mut sides = vec![Side::VertexSide; nv];
    sides.extend(vec![Side::FaceSide; p.face_count()]);
    g.set_sides(sides);
    g
}

/// Projective vertex-face graph: the incidence construction on antipodal
/// classes. Vertex class c is graph vertex c; face class c is graph
/// vertex `pairing.n_vertex_classes() + c`.
pub fn projective_vertex_face_graph(
    p: &Polyhedron,
) -> Result<(Graph, AntipodalPairing), IncidenceError> {
    let pairing = antipodal_pairing(p)?;
    let nvc = pairing.n_vertex_classes();
    let mut g = Graph::new(nvc + pairing.n_face_classes());
    for (fi, face) in p.faces().iter().enumerate() {
        let fc = pairing.face_class(fi);
        for &v in face {
            let vc = pairing.vertex_class(v);
            if !g.has_edge(vc, nvc + fc) {
                g.add_edge(vc, nvc + fc);
            }
        }
    }
    let mut sides = vec![Side::VertexSide; nvc];
    sides.extend(vec![Side::FaceSide; pairing.n_face_classes()]);
    g.set_sides(sides);
    Ok((g, pairing))
}

/// The six vertices of a 5-wheel in a polyhedral skeleton: a hub plus its
/// rim cycle in order.
///
/// The rim is normalized to start at its smallest vertex id and to run in
/// the direction that gives the lexicographically smaller id sequence, so
/// the labeling is deterministic. The six vertices are checked to lie in
/// six distinct antipodal classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WheelLabeling {
    pub hub: usize,
    pub rim: [usize; 5],
}

/// Finds the 5-wheel centered at `hub`: its five neighbors must induce a
/// 5-cycle in the skeleton.
pub fn find_wheel(
    skeleton: &Graph,
    pairing: &AntipodalPairing,
    hub: usize,
) -> Result<WheelLabeling, IncidenceError> {
    let nbrs: Vec<usize> = skeleton.neighbors(hub).collect();
    if nbrs.len() != 5 {
        return Err(IncidenceError::NoWheel(hub));
    }
    // each rim vertex must have exactly 2 neighbors inside the rim
    for &v in &nbrs {
        let inside = nbrs.iter().filter(|&&u| u != v && skeleton.has_edge(u, v)).count();
        if inside != 2 {
            return Err(IncidenceError::NoWheel(hub));
        }
    }
    // walk the cycle from the smallest rim id in both directions
    let start = *nbrs.iter().min().expect("rim is nonempty");
    let walk = |second: usize| -> Option<[usize; 5]> {
        let mut cycle = [start, second, 0, 0, 0];
        for k in 2..5 {
            let prev = cycle[k - 1];
            let before = cycle[k - 2];
            let next = nbrs
                .iter()
                .copied()
                .find(|&u| u != before && u != prev && skeleton.has_edge(prev, u))?;
            cycle[k] = next;
        }
        skeleton.has_edge(cycle[4], start).then_some(cycle)
    };
    let mut candidates: Vec<[usize; 5]> = nbrs
        .iter()
        .copied()
        .filter(|&u| skeleton.has_edge(start, u))
        .filter_map(walk)
        .collect();
    candidates.sort();
    candidates.dedup();
    if candidates.len() != 2 {
        // a 5-cycle has exactly two traversals from a fixed start
        return Err(IncidenceError::NoWheel(hub));
    }
    let rim = candidates[0];
    let labeling = WheelLabeling { hub, rim };
    let mut classes: Vec<usize> = std::iter::once(hub)
        .chain(rim)
        .map(|v| pairing.vertex_class(v))
        .collect();
    classes.sort_unstable();
    classes.dedup();
    if classes.len() != 6 {
        return Err(IncidenceError::ClassCollision);
    }
    Ok(labeling)
}

/// The three chords added to the projective graph, as unordered pairs of
/// vertex-class ids. With the wheel labeled hub O and rim A B C D E, the
/// chords join the classes of A–C, B–O and D–E.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtraEdges {
    pairs: [(usize, usize); 3],
}

impl ExtraEdges {
    pub fn pairs(&self) -> &[(usize, usize); 3] {
        &self.pairs
    }

    /// Arbitrary chord triple, normalized; used to probe what happens
    /// with chord choices other than the wheel-derived one.
    pub fn from_pairs(pairs: [(usize, usize); 3]) -> Self {
        let mut pairs = pairs.map(|(a, b)| (a.min(b), a.max(b)));
        pairs.sort_unstable();
        ExtraEdges { pairs }
    }
}

/// Chord classes for a wheel labeling.
pub fn extra_edges(pairing: &AntipodalPairing, w: &WheelLabeling) -> ExtraEdges {
    let class = |v: usize| pairing.vertex_class(v);
    let norm = |a: usize, b: usize| (a.min(b), a.max(b));
    let [a, b, c, d, e] = w.rim;
    let mut pairs = [
        norm(class(a), class(c)),
        norm(class(b), class(w.hub)),
        norm(class(d), class(e)),
    ];
    pairs.sort_unstable();
    ExtraEdges { pairs }
}

/// Adds a chord triple to a graph, rejecting chords already present.
pub fn add_chords(base: &Graph, chords: &ExtraEdges) -> Result<Graph, IncidenceError> {
    let mut g = base.clone();
    for &(a, b) in chords.pairs() {
        if g.has_edge(a, b) {
            return Err(IncidenceError::EdgeExists(a, b));
        }
        g.add_edge(a, b);
    }
    Ok(g)
}

/// The projective graph plus the three wheel chords: 16 vertices and 33
/// edges for the icosahedron. Side labels are kept from the base graph
/// although the result is no longer bipartite.
pub fn build_xi(
    pi_graph: &Graph,
    pairing: &AntipodalPairing,
    w: &WheelLabeling,
) -> Result<Graph, IncidenceError> {
    add_chords(pi_graph, &extra_edges(pairing, w))
}
