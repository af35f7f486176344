//! Centrally symmetric polyhedra over Q(φ) and their antipodal pairings.
//!
//! The icosahedron uses the cyclic-shift coordinate model (0, ±1, ±φ); the
//! dodecahedron uses (±1, ±1, ±1) together with the cyclic shifts of
//! (0, ±(φ−1), ±φ), keeping every coordinate inside Q(φ) via 1/φ = φ − 1.
//! Face index lists are fixed constants validated against the
//! edge-in-two-faces and Euler invariants rather than computed from hulls,
//! so construction is deterministic and entirely float-free.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde_json::json;
use thiserror::Error;

use crate::golden::{GVec3, GoldenRational};
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("invalid polyhedron: {0}")]
    InvalidPolyhedron(String),
    #[error("polyhedron is not centrally symmetric: {0}")]
    NotCentrallySymmetric(String),
}

/// A polyhedron given by exact vertex coordinates and cyclically ordered
/// face index lists; the edge set is derived from the faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    vertices: Vec<GVec3>,
    faces: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Polyhedron {
    /// Builds and validates a polyhedron. Checks that every face is a
    /// simple cycle of length ≥ 3, that each derived edge lies in exactly
    /// two faces, and that V − E + F = 2.
    pub fn new(vertices: Vec<GVec3>, faces: Vec<Vec<usize>>) -> Result<Self, GeometryError> {
        let n = vertices.len();
        let mut edge_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (fi, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(GeometryError::InvalidPolyhedron(format!(
                    "face {fi} has fewer than 3 vertices"
                )));
            }
            let distinct: BTreeSet<_> = face.iter().collect();
            if distinct.len() != face.len() {
                return Err(GeometryError::InvalidPolyhedron(format!(
                    "face {fi} repeats a vertex"
                )));
            }
            for &v in face {
                if v >= n {
                    return Err(GeometryError::InvalidPolyhedron(format!(
                        "face {fi} references vertex {v} out of range"
                    )));
                }
            }
            for k in 0..face.len() {
                let u = face[k];
                let v = face[(k + 1) % face.len()];
                *edge_count.entry((u.min(v), u.max(v))).or_insert(0) += 1;
            }
        }
        for (&(u, v), &c) in &edge_count {
            if c != 2 {
                return Err(GeometryError::InvalidPolyhedron(format!(
                    "edge ({u},{v}) lies in {c} faces, expected 2"
                )));
            }
        }
        let edges: Vec<(usize, usize)> = edge_count.into_keys().collect();
        let euler = n as i64 - edges.len() as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(GeometryError::InvalidPolyhedron(format!(
                "Euler characteristic is {euler}, expected 2"
            )));
        }
        Ok(Self {
            vertices,
            faces,
            edges,
        })
    }

    pub fn vertices(&self) -> &[GVec3] {
        &self.vertices
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Derived edges as ordered (min, max) index pairs, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Index of the face whose corner set equals `corners`, if any.
    pub fn face_with_corners(&self, corners: &BTreeSet<usize>) -> Option<usize> {
        self.faces
            .iter()
            .position(|f| f.len() == corners.len() && f.iter().all(|v| corners.contains(v)))
    }

    /// The polyhedral (1-skeleton) graph: vertices of the solid joined by
    /// its edges.
    pub fn one_skeleton(&self) -> Graph {
        let mut g = Graph::new(self.vertex_count());
        for &(u, v) in &self.edges {
            g.add_edge(u, v);
        }
        g
    }

    /// JSON document `{"vertices": [[[an,ad],[bn,bd]] ×3, ...], "faces": [...]}`
    /// with each coordinate as `[[an,ad],[bn,bd]]` meaning (an/ad) + (bn/bd)·φ.
    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<_> = self
            .vertices
            .iter()
            .map(|v| json!([v.x.to_pairs(), v.y.to_pairs(), v.z.to_pairs()]))
            .collect();
        json!({ "vertices": vertices, "faces": self.faces })
    }
}

/// Matching of vertices and faces into antipodal classes (x, −x).
///
/// Classes on each side are numbered by the smallest member index, so ids
/// are deterministic. In the projective vertex-face graph, vertex class
/// `c` becomes graph vertex `c` and face class `c` becomes graph vertex
/// `n_vertex_classes + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodalPairing {
    vertex_class: Vec<usize>,
    face_class: Vec<usize>,
    vertex_partner: Vec<usize>,
    face_partner: Vec<usize>,
    vertex_class_members: Vec<[usize; 2]>,
    face_class_members: Vec<[usize; 2]>,
}

impl AntipodalPairing {
    pub fn n_vertex_classes(&self) -> usize {
        self.vertex_class_members.len()
    }

    pub fn n_face_classes(&self) -> usize {
        self.face_class_members.len()
    }

    /// Class id of a vertex of the parent polyhedron.
    pub fn vertex_class(&self, v: usize) -> usize {
        self.vertex_class[v]
    }

    /// Class id of a face of the parent polyhedron.
    pub fn face_class(&self, f: usize) -> usize {
        self.face_class[f]
    }

    /// The antipodal partner vertex −v.
    pub fn vertex_partner(&self, v: usize) -> usize {
        self.vertex_partner[v]
    }

    /// The face whose corner set is the negation of face `f`'s.
    pub fn face_partner(&self, f: usize) -> usize {
        self.face_partner[f]
    }

    /// Both members of a vertex class, smallest first.
    pub fn vertex_class_members(&self, class: usize) -> [usize; 2] {
        self.vertex_class_members[class]
    }

    pub fn face_class_members(&self, class: usize) -> [usize; 2] {
        self.face_class_members[class]
    }
}

/// Pairs every vertex with its exact negation and every face with the face
/// whose corner set is the negation of its own.
pub fn antipodal_pairing(p: &Polyhedron) -> Result<AntipodalPairing, GeometryError> {
    let n = p.vertex_count();
    let index: HashMap<&GVec3, usize> = p
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    let mut vertex_partner = vec![usize::MAX; n];
    for (i, v) in p.vertices().iter().enumerate() {
        let neg = v.negated();
        match index.get(&neg) {
            Some(&j) if j != i => vertex_partner[i] = j,
            _ => {
                return Err(GeometryError::NotCentrallySymmetric(format!(
                    "vertex {i} has no antipodal partner"
                )))
            }
        }
    }
    let mut face_partner = vec![usize::MAX; p.face_count()];
    for (fi, face) in p.faces().iter().enumerate() {
        let negated: BTreeSet<usize> = face.iter().map(|&v| vertex_partner[v]).collect();
        match p.face_with_corners(&negated) {
            Some(fj) if fj != fi => face_partner[fi] = fj,
            _ => {
                return Err(GeometryError::NotCentrallySymmetric(format!(
                    "face {fi} has no antipodal partner"
                )))
            }
        }
    }

    let class_of = |partner: &[usize]| {
        let mut class = vec![usize::MAX; partner.len()];
        let mut members = Vec::new();
        for i in 0..partner.len() {
            if class[i] == usize::MAX {
                let id = members.len();
                class[i] = id;
                class[partner[i]] = id;
                members.push([i, partner[i]]);
            }
        }
        (class, members)
    };
    let (vertex_class, vertex_class_members) = class_of(&vertex_partner);
    let (face_class, face_class_members) = class_of(&face_partner);
    Ok(AntipodalPairing {
        vertex_class,
        face_class,
        vertex_partner,
        face_partner,
        vertex_class_members,
        face_class_members,
    })
}

fn gr(a: i64, b: i64) -> GoldenRational {
    GoldenRational::from_int(a)
        + GoldenRational::from_int(b) * GoldenRational::phi()
}

fn vec3(x: GoldenRational, y: GoldenRational, z: GoldenRational) -> GVec3 {
    GVec3::new(x, y, z)
}

const ICOSAHEDRON_FACES: [[usize; 3]; 20] = [
    [0, 2, 8],
    [0, 4, 6],
    [0, 6, 10],
    [0, 8, 4],
    [0, 10, 2],
    [1, 3, 11],
    [1, 4, 9],
    [1, 6, 4],
    [1, 9, 3],
    [1, 11, 6],
    [2, 5, 8],
    [2, 7, 5],
    [2, 10, 7],
    [3, 5, 7],
    [3, 7, 11],
    [3, 9, 5],
    [4, 8, 9],
    [5, 9, 8],
    [6, 11, 10],
    [7, 10, 11],
];

/// Regular icosahedron: the 12 cyclic shifts of (0, ±1, ±φ), 30 edges,
/// 20 triangular faces, centered at the origin.
pub fn icosahedron() -> Polyhedron {
    let z = gr(0, 0);
    let coords: [[GoldenRational; 3]; 12] = [
        [z, gr(1, 0), gr(0, 1)],
        [z, gr(1, 0), gr(0, -1)],
        [z, gr(-1, 0), gr(0, 1)],
        [z, gr(-1, 0), gr(0, -1)],
        [gr(1, 0), gr(0, 1), z],
        [gr(1, 0), gr(0, -1), z],
        [gr(-1, 0), gr(0, 1), z],
        [gr(-1, 0), gr(0, -1), z],
        [gr(0, 1), z, gr(1, 0)],
        [gr(0, 1), z, gr(-1, 0)],
        [gr(0, -1), z, gr(1, 0)],
        [gr(0, -1), z, gr(-1, 0)],
    ];
    let vertices = coords.iter().map(|c| vec3(c[0], c[1], c[2])).collect();
    let faces = ICOSAHEDRON_FACES.iter().map(|f| f.to_vec()).collect();
    Polyhedron::new(vertices, faces).expect("icosahedron model is valid")
}

const DODECAHEDRON_FACES: [[usize; 5]; 12] = [
    [0, 8, 10, 2, 16],
    [0, 12, 14, 4, 8],
    [0, 16, 17, 1, 12],
    [1, 9, 5, 14, 12],
    [1, 17, 3, 11, 9],
    [2, 10, 6, 15, 13],
    [2, 13, 3, 17, 16],
    [3, 13, 15, 7, 11],
    [4, 14, 5, 19, 18],
    [4, 18, 6, 10, 8],
    [5, 9, 11, 7, 19],
    [6, 18, 19, 7, 15],
];

/// Regular dodecahedron: (±1, ±1, ±1) plus the 12 cyclic shifts of
/// (0, ±(φ−1), ±φ), 30 edges, 12 pentagonal faces, centered at the origin.
pub fn dodecahedron() -> Polyhedron {
    let z = gr(0, 0);
    let phi = gr(0, 1);
    let inv_phi = gr(-1, 1); // 1/phi = phi - 1
    let mut vertices = Vec::with_capacity(20);
    for sx in [1i64, -1] {
        for sy in [1i64, -1] {
            for sz in [1i64, -1] {
                vertices.push(vec3(gr(sx, 0), gr(sy, 0), gr(sz, 0)));
            }
        }
    }
    for (sy, sz) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
        vertices.push(vec3(z, scale(inv_phi, sy), scale(phi, sz)));
    }
    for (sx, sy) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
        vertices.push(vec3(scale(inv_phi, sx), scale(phi, sy), z));
    }
    for (sx, sz) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
        vertices.push(vec3(scale(phi, sx), z, scale(inv_phi, sz)));
    }
    let faces = DODECAHEDRON_FACES.iter().map(|f| f.to_vec()).collect();
    Polyhedron::new(vertices, faces).expect("dodecahedron model is valid")
}

fn scale(v: GoldenRational, sign: i64) -> GoldenRational {
    if sign >= 0 {
        v
    } else {
        -v
    }
}

const CUBE_FACES: [[usize; 4]; 6] = [
    [0, 1, 5, 4],
    [0, 2, 3, 1],
    [0, 4, 6, 2],
    [1, 3, 7, 5],
    [2, 6, 7, 3],
    [4, 5, 7, 6],
];

/// Cube on (±1, ±1, ±1); a small centrally symmetric test fixture.
pub fn cube() -> Polyhedron {
    let mut vertices = Vec::with_capacity(8);
    for sx in [1i64, -1] {
        for sy in [1i64, -1] {
            for sz in [1i64, -1] {
                vertices.push(vec3(gr(sx, 0), gr(sy, 0), gr(sz, 0)));
            }
        }
    }
    let faces = CUBE_FACES.iter().map(|f| f.to_vec()).collect();
    Polyhedron::new(vertices, faces).expect("cube model is valid")
}

const TETRAHEDRON_FACES: [[usize; 3]; 4] = [[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]];

/// Regular tetrahedron; a fixture with no central symmetry.
pub fn tetrahedron() -> Polyhedron {
    let vertices = vec![
        vec3(gr(1, 0), gr(1, 0), gr(1, 0)),
        vec3(gr(1, 0), gr(-1, 0), gr(-1, 0)),
        vec3(gr(-1, 0), gr(1, 0), gr(-1, 0)),
        vec3(gr(-1, 0), gr(-1, 0), gr(1, 0)),
    ];
    let faces = TETRAHEDRON_FACES.iter().map(|f| f.to_vec()).collect();
    Polyhedron::new(vertices, faces).expect("tetrahedron model is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn icosahedron_counts_and_euler() {
        let p = icosahedron();
        assert_eq!(p.vertex_count(), 12);
        assert_eq!(p.edge_count(), 30);
        assert_eq!(p.face_count(), 20);
        assert_eq!(
            p.vertex_count() as i64 - p.edge_count() as i64 + p.face_count() as i64,
            2
        );
    }

    #[test]
    fn icosahedron_is_sign_symmetric() {
        let p = icosahedron();
        for v in p.vertices() {
            assert!(p.vertices().contains(&v.negated()));
        }
    }

    #[test]
    fn icosahedron_faces_are_equilateral() {
        let p = icosahedron();
        let four = gr(4, 0);
        for face in p.faces() {
            for k in 0..face.len() {
                let a = &p.vertices()[face[k]];
                let b = &p.vertices()[face[(k + 1) % face.len()]];
                assert_eq!(a.dist_sq(b), four);
            }
        }
    }

    #[test]
    fn dodecahedron_counts() {
        let p = dodecahedron();
        assert_eq!(p.vertex_count(), 20);
        assert_eq!(p.edge_count(), 30);
        assert_eq!(p.face_count(), 12);
        assert!(p.faces().iter().all(|f| f.len() == 5));
    }

    #[test]
    fn dodecahedron_edges_have_uniform_length() {
        let p = dodecahedron();
        // edge length^2 = (2/phi)^2 = 4(2 - phi) = 8 - 4phi
        let expected = gr(8, -4);
        for &(u, v) in p.edges() {
            assert_eq!(p.vertices()[u].dist_sq(&p.vertices()[v]), expected);
        }
    }

    #[test]
    fn dodecahedron_faces_are_planar() {
        let p = dodecahedron();
        for face in p.faces() {
            let base = &p.vertices()[face[0]];
            let u = p.vertices()[face[1]].sub(base);
            let v = p.vertices()[face[2]].sub(base);
            // exact normal = u x v; all further corners must satisfy n.(w - base) = 0
            let n = GVec3::new(
                u.y * v.z - u.z * v.y,
                u.z * v.x - u.x * v.z,
                u.x * v.y - u.y * v.x,
            );
            for &w in &face[3..] {
                assert!(n.dot(&p.vertices()[w].sub(base)).is_zero());
            }
        }
    }

    #[test]
    fn pairing_counts_for_both_solids() {
        let ico = icosahedron();
        let pairing = antipodal_pairing(&ico).unwrap();
        assert_eq!(pairing.n_vertex_classes(), 6);
        assert_eq!(pairing.n_face_classes(), 10);

        let dod = dodecahedron();
        let pairing = antipodal_pairing(&dod).unwrap();
        assert_eq!(pairing.n_vertex_classes(), 10);
        assert_eq!(pairing.n_face_classes(), 6);
    }

    #[test]
    fn pairing_is_an_involution() {
        let p = icosahedron();
        let pairing = antipodal_pairing(&p).unwrap();
        for v in 0..p.vertex_count() {
            assert_eq!(pairing.vertex_partner(pairing.vertex_partner(v)), v);
            assert_ne!(pairing.vertex_partner(v), v);
        }
        for f in 0..p.face_count() {
            assert_eq!(pairing.face_partner(pairing.face_partner(f)), f);
        }
    }

    #[test]
    fn face_negation_has_no_fixed_face() {
        for p in [icosahedron(), dodecahedron(), cube()] {
            let pairing = antipodal_pairing(&p).unwrap();
            for f in 0..p.face_count() {
                assert_ne!(pairing.face_partner(f), f);
            }
        }
    }

    #[test]
    fn tetrahedron_is_not_centrally_symmetric() {
        let err = antipodal_pairing(&tetrahedron()).unwrap_err();
        assert!(matches!(err, GeometryError::NotCentrallySymmetric(_)));
    }

    #[test]
    fn cube_pairing_counts() {
        let pairing = antipodal_pairing(&cube()).unwrap();
        assert_eq!(pairing.n_vertex_classes(), 4);
        assert_eq!(pairing.n_face_classes(), 3);
    }

    #[test]
    fn skeleton_degrees() {
        let g = icosahedron().one_skeleton();
        assert_eq!(g.vertex_count(), 12);
        assert!((0..12).all(|v| g.degree(v) == 5));
        assert!(g.is_connected());

        let g = dodecahedron().one_skeleton();
        assert_eq!(g.vertex_count(), 20);
        assert!((0..20).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn bad_faces_are_rejected() {
        let p = cube();
        let verts = p.vertices().to_vec();
        // drop one face: its edges now lie in only one face
        let faces: Vec<Vec<usize>> = p.faces()[1..].to_vec();
        let err = Polyhedron::new(verts.clone(), faces).unwrap_err();
        assert!(matches!(err, GeometryError::InvalidPolyhedron(_)));

        let err = Polyhedron::new(verts, vec![vec![0, 1]]).unwrap_err();
        assert!(matches!(err, GeometryError::InvalidPolyhedron(_)));
    }

    #[test]
    fn json_schema_shape() {
        let doc = cube().to_json();
        assert_eq!(doc["vertices"].as_array().unwrap().len(), 8);
        assert_eq!(doc["faces"].as_array().unwrap().len(), 6);
        // first cube vertex is (1,1,1): each coordinate is [[1,1],[0,1]]
        assert_eq!(doc["vertices"][0][0], json!([[1, 1], [0, 1]]));
    }
}
