//! Ordered vertex partitions and equitable refinement.
//!
//! Refinement repeatedly splits every cell by the vector of neighbor
//! counts into all current cells, ordering subcells by that vector. The
//! fixpoint is the coarsest equitable refinement of the input, and the
//! resulting cell order depends only on graph structure, never on vertex
//! ids, which is what the canonical-labeling search requires.

use crate::graph::Graph;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("cells do not partition 0..{0}")]
    NotAPartition(usize),
}

/// An ordered partition of the vertex set 0..n into nonempty cells.
/// Vertices inside a cell are kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl OrderedPartition {
    /// Single cell holding every vertex.
    pub fn unit(n: usize) -> Self {
        if n == 0 {
            return Self { n, cells: vec![] };
        }
        Self {
            n,
            cells: vec![(0..n).collect()],
        }
    }

    /// Every vertex in its own cell, in id order.
    pub fn discrete(n: usize) -> Self {
        Self {
            n,
            cells: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn from_cells(n: usize, cells: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut seen = vec![false; n];
        let mut count = 0;
        for cell in &cells {
            if cell.is_empty() {
                return Err(PartitionError::NotAPartition(n));
            }
            for &v in cell {
                if v >= n || seen[v] {
                    return Err(PartitionError::NotAPartition(n));
                }
                seen[v] = true;
                count += 1;
            }
        }
        if count != n {
            return Err(PartitionError::NotAPartition(n));
        }
        let cells = cells
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Ok(Self { n, cells })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// Index of the first non-singleton cell of smallest size, if any.
    pub fn target_cell(&self) -> Option<usize> {
        let min_size = self
            .cells
            .iter()
            .map(|c| c.len())
            .filter(|&s| s >= 2)
            .min()?;
        self.cells.iter().position(|c| c.len() == min_size)
    }

    /// Splits `v` out of its cell, placing the singleton before the
    /// remainder of the cell.
    pub fn individualized(&self, v: usize) -> OrderedPartition {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        for cell in &self.cells {
            if cell.contains(&v) && cell.len() > 1 {
                cells.push(vec![v]);
                cells.push(cell.iter().copied().filter(|&u| u != v).collect());
            } else {
                cells.push(cell.clone());
            }
        }
        OrderedPartition { n: self.n, cells }
    }

    /// True if every cell of `self` lies inside some cell of `coarser`.
    pub fn refines(&self, coarser: &OrderedPartition) -> bool {
        let mut cell_of = vec![usize::MAX; self.n];
        for (i, cell) in coarser.cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        self.cells
            .iter()
            .all(|cell| cell.iter().all(|&v| cell_of[v] == cell_of[cell[0]]))
    }
}

/// Coarsest equitable refinement of `p` with a deterministic,
/// relabeling-invariant cell order.
pub fn refine(g: &Graph, p: &OrderedPartition) -> OrderedPartition {
    let n = p.n();
    assert_eq!(n, g.vertex_count());
    let mut cells = p.cells().to_vec();
    loop {
        let mut cell_of = vec![0usize; n];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let signature = |v: usize| -> Vec<usize> {
            let mut counts = vec![0usize; cells.len()];
            for u in g.neighbors(v) {
                counts[cell_of[u]] += 1;
            }
            counts
        };
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> =
                cell.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
            for (key, v) in keyed {
                match groups.last_mut() {
                    Some((last_key, members)) if *last_key == key => members.push(v),
                    _ => groups.push((key, vec![v])),
                }
            }
            if groups.len() > 1 {
                changed = true;
            }
            next.extend(groups.into_iter().map(|(_, members)| members));
        }
        cells = next;
        if !changed {
            return OrderedPartition { n, cells };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)])
    }

    #[test]
    fn path_splits_by_degree() {
        let r = refine(&path3(), &OrderedPartition::unit(3));
        assert_eq!(r.cells(), &[vec![0, 2], vec![1]]);
    }

    #[test]
    fn cycle_stays_one_cell() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let r = refine(&c5, &OrderedPartition::unit(5));
        assert_eq!(r.cells().len(), 1);
    }

    #[test]
    fn refinement_is_idempotent_and_monotone() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]);
        let p = OrderedPartition::unit(6);
        let r = refine(&g, &p);
        assert_eq!(refine(&g, &r), r);
        assert!(r.refines(&p));
    }

    #[test]
    fn individualization_puts_singleton_first() {
        let p = OrderedPartition::unit(4).individualized(2);
        assert_eq!(p.cells(), &[vec![2], vec![0, 1, 3]]);
        // individualizing a vertex already alone changes nothing
        assert_eq!(p.individualized(2), p);
    }

    #[test]
    fn target_cell_prefers_smallest_then_first() {
        let p = OrderedPartition::from_cells(6, vec![vec![0], vec![1, 2, 3], vec![4, 5]]).unwrap();
        assert_eq!(p.target_cell(), Some(2));
        assert!(OrderedPartition::discrete(4).target_cell().is_none());
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(OrderedPartition::from_cells(3, vec![vec![0, 1]]).is_err());
        assert!(OrderedPartition::from_cells(3, vec![vec![0, 1, 1], vec![2]]).is_err());
        assert!(OrderedPartition::from_cells(3, vec![vec![0, 1, 3], vec![2]]).is_err());
        assert!(OrderedPartition::from_cells(3, vec![vec![0], vec![], vec![1, 2]]).is_err());
    }
}
