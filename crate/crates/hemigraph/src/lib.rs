//! Exact construction of the projective (antipodal-quotient) vertex-face
//! graphs of the icosahedron and dodecahedron, together with the
//! machinery to verify their symmetry properties from scratch: equitable
//! partition refinement, individualization-refinement canonical labeling,
//! Schreier-Sims permutation groups, evidence-based small-group
//! identification, and an exhaustive search for the smallest graphs
//! realizing a given automorphism group.
//!
//! The headline objects are two 16-vertex graphs. The antipodal quotient
//! of the icosahedron's vertex-face incidence graph has automorphism
//! group A5 (order 60), realized exactly by projectivized rotations;
//! adding three chords chosen from a 5-wheel in the skeleton cuts the
//! group to A4 (order 12). Everything is computed over the exact field
//! Q(φ), so no geometric test ever depends on floating-point tolerances.
//!
//! ```
//! use hemigraph::prelude::*;
//!
//! let solid = icosahedron();
//! let (pi, _) = projective_vertex_face_graph(&solid).unwrap();
//! let aut = automorphism_group(&pi, &OrderedPartition::unit(16));
//! assert_eq!(aut.order(), 60);
//! assert_eq!(identify_group(&aut).unwrap().tag, GroupTag::A5);
//! ```
//!
//! The `examples/` directory has one runnable program per capability;
//! the `hemigraph` binary exposes the same functionality as subcommands
//! (`build`, `graph`, `aut`, `verify`, `search`).

pub mod actions;
pub mod canon;
pub mod cli;
pub mod dot;
pub mod enumerate;
pub mod golden;
pub mod graph;
pub mod graph6;
pub mod group;
pub mod identify;
pub mod incidence;
pub mod musearch;
pub mod partition;
pub mod perm;
pub mod polyhedron;
pub mod report;
pub mod verify;

/// The most commonly used items in one import.
pub mod prelude {
    pub use crate::actions::{induced_vertex_face_action, projectivize_action};
    pub use crate::canon::{
        are_isomorphic, automorphism_group, canonical_form, canonical_labeling, edge_orbits,
        CanonicalForm,
    };
    pub use crate::dot::{dot_export, DotOptions};
    pub use crate::enumerate::enumerate_classes;
    pub use crate::golden::{GVec3, GoldenRational};
    pub use crate::graph::{Graph, Side};
    pub use crate::graph6::{graph6_decode, graph6_encode};
    pub use crate::group::{schreier_sims, schreier_sims_on, PermGroup};
    pub use crate::identify::{identify_group, GroupName, GroupTag};
    pub use crate::incidence::{
        build_xi, extra_edges, find_wheel, projective_vertex_face_graph, vertex_face_graph,
        ExtraEdges, WheelLabeling,
    };
    pub use crate::musearch::mu_search;
    pub use crate::partition::{refine, OrderedPartition};
    pub use crate::perm::Permutation;
    pub use crate::polyhedron::{
        antipodal_pairing, cube, dodecahedron, icosahedron, tetrahedron, AntipodalPairing,
        Polyhedron,
    };
    pub use crate::verify::{rotation_group, verify_all, verify_prop1, verify_prop2, verify_remarks};
}
