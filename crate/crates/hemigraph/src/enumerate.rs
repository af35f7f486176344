//! Exhaustive generation of one representative per isomorphism class of
//! simple graphs, by canonical augmentation.
//!
//! Level n is produced from level n−1 by appending a vertex with every
//! possible neighborhood and keeping a child only when its canonical form
//! has not been seen at this level, so the canonical form certifies the
//! class representative. Every class on n vertices arises this way:
//! deleting any vertex of a representative lands in some level-(n−1)
//! class, and the deleted neighborhood is one of the masks tried.

use std::collections::BTreeSet;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;

/// Progress callback: (current level, classes found at that level so far,
/// candidates processed, total candidates at the level).
pub type Progress<'a> = &'a mut dyn FnMut(usize, usize, u64, u64);

/// Representatives (canonically relabeled) of every isomorphism class
/// with 1..=n_max vertices, sorted by canonical form within each level.
pub fn enumerate_classes(n_max: usize) -> Vec<Vec<Graph>> {
    enumerate_classes_with_progress(n_max, &mut |_, _, _, _| {})
}

pub fn enumerate_classes_with_progress(n_max: usize, progress: Progress) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if n_max == 0 {
        return levels;
    }
    levels.push(vec![Graph::new(1)]);
    for n in 2..=n_max {
        let parents = &levels[n - 2];
        let total = parents.len() as u64 * (1u64 << (n - 1));
        let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
        let mut processed = 0u64;
        for parent in parents {
            for mask in 0u64..(1 << (n - 1)) {
                let child = parent.extended(
                    (0..n - 1).filter(|&v| mask >> v & 1 == 1),
                );
                seen.insert(canonical_form(&child));
                processed += 1;
                if processed % 4096 == 0 {
                    progress(n, seen.len(), processed, total);
                }
            }
        }
        progress(n, seen.len(), total, total);
        levels.push(seen.into_iter().map(|form| form.to_graph()).collect());
    }
    levels
}
