//! Permutation groups with a base and strong generating set.
//!
//! The stabilizer chain is built by the deterministic incremental
//! Schreier-Sims procedure: generators are sifted level by level, orbits
//! and transversals are recomputed by breadth-first search in fixed
//! order, and Schreier generators of each level are sifted into the next.
//! The group order is the product of fundamental orbit lengths. Full
//! element enumeration is an independent breadth-first closure over the
//! generators and deliberately does not consult the chain, so comparing
//! the two is a genuine cross-check.

use std::collections::{BTreeMap, HashSet, VecDeque};

use serde_json::json;
use thiserror::Error;

use crate::perm::Permutation;

/// Everything in this project has order ≤ 120; the bound leaves room for
/// small-graph searches while keeping full enumeration trivially fast.
pub const ENUMERATION_BOUND: usize = 20_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("generators have mismatched degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("group order {order} exceeds the enumeration bound {bound}")]
    TooLarge { order: u128, bound: usize },
    #[error("serialized group claims order {claimed} but the generators produce {actual}")]
    OrderMismatch { claimed: u128, actual: u128 },
    #[error("invalid serialized group: {0}")]
    BadSerialization(String),
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// orbit point -> coset representative mapping base to that point
    transversal: BTreeMap<usize, Permutation>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut transversal = BTreeMap::new();
        transversal.insert(base, Permutation::identity(degree));
        Self {
            base,
            gens: Vec::new(),
            transversal,
        }
    }

    fn recompute_transversal(&mut self, degree: usize) {
        let mut transversal = BTreeMap::new();
        transversal.insert(self.base, Permutation::identity(degree));
        let mut queue = VecDeque::from([self.base]);
        while let Some(p) = queue.pop_front() {
            let rep = transversal[&p].clone();
            for g in &self.gens {
                let q = g.apply(p);
                if !transversal.contains_key(&q) {
                    transversal.insert(q, rep.then(g));
                    queue.push_back(q);
                }
            }
        }
        self.transversal = transversal;
    }
}

/// A permutation group given by generators, with a stabilizer chain for
/// order computation and membership testing.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// Builds the stabilizer chain from the given generators.
    pub fn from_generators(
        degree: usize,
        generators: Vec<Permutation>,
    ) -> Result<Self, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch(degree, g.degree()));
            }
        }
        let mut group = Self {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
        };
        for g in generators {
            if !g.is_identity() {
                group.generators.push(g.clone());
                group.add_generator(g, 0);
            }
        }
        Ok(group)
    }

    fn add_generator(&mut self, g: Permutation, level: usize) {
        if g.is_identity() {
            return;
        }
        if level == self.levels.len() {
            let base = g.min_moved_point().expect("non-identity moves a point");
            self.levels.push(Level::new(self.degree, base));
        }
        self.levels[level].gens.push(g);
        self.levels[level].recompute_transversal(self.degree);

        // sift all Schreier generators of this level into the next
        let points: Vec<usize> = self.levels[level].transversal.keys().copied().collect();
        let gens = self.levels[level].gens.clone();
        for p in points {
            let rep = self.levels[level].transversal[&p].clone();
            for s in &gens {
                let target = s.apply(p);
                let rep_target_inv = self.levels[level].transversal[&target].inverse();
                let schreier = rep.then(s).then(&rep_target_inv);
                let (residue_level, residue) = self.sift_from(schreier, level + 1);
                if !residue.is_identity() {
                    self.add_generator(residue, residue_level);
                }
            }
        }
    }

    fn sift_from(&self, mut p: Permutation, start: usize) -> (usize, Permutation) {
        let mut level = start;
        while level < self.levels.len() {
            if p.is_identity() {
                break;
            }
            let image = p.apply(self.levels[level].base);
            match self.levels[level].transversal.get(&image) {
                None => return (level, p),
                Some(rep) => p = p.then(&rep.inverse()),
            }
            level += 1;
        }
        (level.min(self.levels.len()), p)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Group order: product of fundamental orbit lengths along the chain.
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.transversal.len() as u128)
            .product()
    }

    /// Base points of the stabilizer chain.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Membership test by sifting through the chain.
    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (_, residue) = self.sift_from(p.clone(), 0);
        residue.is_identity()
    }

    /// Every element, by breadth-first closure over the generators.
    /// Fails with `TooLarge` beyond [`ENUMERATION_BOUND`]. The result is
    /// sorted by image array, so iteration order is deterministic.
    pub fn elements(&self) -> Result<Vec<Permutation>, GroupError> {
        let identity = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = p.then(g);
                if seen.insert(q.clone()) {
                    if seen.len() > ENUMERATION_BOUND {
                        return Err(GroupError::TooLarge {
                            order: self.order(),
                            bound: ENUMERATION_BOUND,
                        });
                    }
                    queue.push_back(q);
                }
            }
        }
        let mut out: Vec<Permutation> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Map from element order to the number of elements of that order.
    /// Counts sum to the group order.
    pub fn element_order_histogram(&self) -> Result<BTreeMap<u64, u64>, GroupError> {
        let mut histogram = BTreeMap::new();
        for e in self.elements()? {
            *histogram.entry(e.order()).or_insert(0) += 1;
        }
        Ok(histogram)
    }

    /// Orbit of a point (ascending) and the stabilizer order
    /// |G| / |orbit|.
    pub fn orbit_and_stabilizer(&self, point: usize) -> (Vec<usize>, u128) {
        assert!(point < self.degree, "point out of range");
        let mut in_orbit = vec![false; self.degree];
        in_orbit[point] = true;
        let mut queue = VecDeque::from([point]);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = g.apply(p);
                if !in_orbit[q] {
                    in_orbit[q] = true;
                    queue.push_back(q);
                }
            }
        }
        let orbit: Vec<usize> = (0..in_orbit.len()).filter(|&p| in_orbit[p]).collect();
        let stabilizer = self.order() / orbit.len() as u128;
        (orbit, stabilizer)
    }

    /// Derived subgroup: the normal closure of the commutators of all
    /// generator pairs. Requires the group order to be within the
    /// enumeration bound.
    pub fn derived_subgroup(&self) -> Result<PermGroup, GroupError> {
        let order = self.order();
        if order > ENUMERATION_BOUND as u128 {
            return Err(GroupError::TooLarge {
                order,
                bound: ENUMERATION_BOUND,
            });
        }
        let mut commutators = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a.inverse().then(&b.inverse()).then(a).then(b);
                if !c.is_identity() {
                    commutators.push(c);
                }
            }
        }
        self.normal_closure(commutators)
    }

    /// Smallest normal subgroup containing the given elements.
    pub fn normal_closure(&self, seeds: Vec<Permutation>) -> Result<PermGroup, GroupError> {
        let mut sub = PermGroup::from_generators(self.degree, seeds.clone())?;
        let mut queue: VecDeque<Permutation> = seeds.into();
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let conj = x.conjugated_by(g);
                if !sub.contains(&conj) {
                    sub.generators.push(conj.clone());
                    sub.add_generator(conj.clone(), 0);
                    queue.push_back(conj);
                }
            }
        }
        Ok(sub)
    }

    /// Elements commuting with every generator.
    pub fn center_elements(&self) -> Result<Vec<Permutation>, GroupError> {
        Ok(self
            .elements()?
            .into_iter()
            .filter(|e| self.generators.iter().all(|g| e.then(g) == g.then(e)))
            .collect())
    }

    /// JSON form: degree, claimed order and generator image arrays.
    pub fn to_json(&self) -> serde_json::Value {
        let gens: Vec<&[usize]> = self.generators.iter().map(|g| g.images()).collect();
        json!({
            "degree": self.degree,
            "order": self.order() as u64,
            "generators": gens,
        })
    }

    /// Rebuilds a group from its JSON form, re-verifying the claimed
    /// order against the freshly built chain.
    pub fn from_json(value: &serde_json::Value) -> Result<PermGroup, GroupError> {
        let bad = |m: &str| GroupError::BadSerialization(m.to_string());
        let degree = value["degree"]
            .as_u64()
            .ok_or_else(|| bad("missing degree"))? as usize;
        let claimed = value["order"].as_u64().ok_or_else(|| bad("missing order"))? as u128;
        let gens_json = value["generators"]
            .as_array()
            .ok_or_else(|| bad("missing generators"))?;
        let mut gens = Vec::new();
        for g in gens_json {
            let images: Option<Vec<usize>> = g
                .as_array()
                .map(|a| a.iter().map(|x| x.as_u64().map(|v| v as usize)).collect())
                .unwrap_or(None);
            let images = images.ok_or_else(|| bad("generator is not an image array"))?;
            gens.push(
                Permutation::from_images(images)
                    .map_err(|e| GroupError::BadSerialization(e.to_string()))?,
            );
        }
        let group = PermGroup::from_generators(degree, gens)?;
        let actual = group.order();
        if actual != claimed {
            return Err(GroupError::OrderMismatch { claimed, actual });
        }
        Ok(group)
    }
}

/// Convenience alias matching the operation name: builds the stabilizer
/// chain for a generator list.
pub fn schreier_sims(gens: Vec<Permutation>) -> Result<PermGroup, GroupError> {
    let degree = gens.first().map(|g| g.degree()).unwrap_or(0);
    PermGroup::from_generators(degree, gens)
}

/// schreier_sims for an explicit degree, covering the empty generator
/// list.
pub fn schreier_sims_on(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup, GroupError> {
    PermGroup::from_generators(degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_order() {
        let gens = vec![
            Permutation::from_cycles(4, &[&[0, 1]]),
            Permutation::from_cycles(4, &[&[0, 1, 2, 3]]),
        ];
        let g = schreier_sims(gens).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.elements().unwrap().len(), 24);
    }

    #[test]
    fn empty_generator_list_gives_trivial_group() {
        let g = schreier_sims_on(5, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.contains(&Permutation::identity(5)));
        assert!(!g.contains(&Permutation::from_cycles(5, &[&[0, 1]])));
    }

    #[test]
    fn degree_mismatch_is_reported() {
        let gens = vec![
            Permutation::from_cycles(4, &[&[0, 1]]),
            Permutation::from_cycles(5, &[&[0, 1]]),
        ];
        assert!(matches!(
            schreier_sims(gens),
            Err(GroupError::DegreeMismatch(4, 5))
        ));
    }

    #[test]
    fn membership_matches_enumeration() {
        let gens = vec![
            Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]),
            Permutation::from_cycles(5, &[&[1, 4], &[2, 3]]),
        ];
        let g = schreier_sims(gens).unwrap(); // dihedral of order 10
        assert_eq!(g.order(), 10);
        let elements = g.elements().unwrap();
        assert_eq!(elements.len(), 10);
        for e in &elements {
            assert!(g.contains(e));
        }
        let outsider = Permutation::from_cycles(5, &[&[0, 1]]);
        assert!(!elements.contains(&outsider));
        assert!(!g.contains(&outsider));
    }

    #[test]
    fn abelian_group_has_trivial_derived_subgroup() {
        let g = schreier_sims(vec![Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        assert_eq!(g.derived_subgroup().unwrap().order(), 1);
    }

    #[test]
    fn s4_derived_subgroup_is_a4() {
        let gens = vec![
            Permutation::from_cycles(4, &[&[0, 1]]),
            Permutation::from_cycles(4, &[&[0, 1, 2, 3]]),
        ];
        let derived = schreier_sims(gens).unwrap().derived_subgroup().unwrap();
        assert_eq!(derived.order(), 12);
        let histogram = derived.element_order_histogram().unwrap();
        assert_eq!(histogram, BTreeMap::from([(1, 1), (2, 3), (3, 8)]));
    }

    #[test]
    fn orbit_and_stabilizer_of_trivial_group() {
        let g = PermGroup::trivial(4);
        let (orbit, stab) = g.orbit_and_stabilizer(2);
        assert_eq!(orbit, vec![2]);
        assert_eq!(stab, 1);
    }

    #[test]
    fn histogram_of_trivial_group() {
        let g = PermGroup::trivial(3);
        assert_eq!(
            g.element_order_histogram().unwrap(),
            BTreeMap::from([(1, 1)])
        );
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        // S8 has order 40320 > 20000
        let gens = vec![
            Permutation::from_cycles(8, &[&[0, 1]]),
            Permutation::from_cycles(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]]),
        ];
        let g = schreier_sims(gens).unwrap();
        assert_eq!(g.order(), 40320);
        assert!(matches!(g.elements(), Err(GroupError::TooLarge { .. })));
        assert!(matches!(
            g.derived_subgroup(),
            Err(GroupError::TooLarge { .. })
        ));
    }

    #[test]
    fn json_round_trip_reverifies_order() {
        let gens = vec![
            Permutation::from_cycles(4, &[&[0, 1]]),
            Permutation::from_cycles(4, &[&[0, 1, 2, 3]]),
        ];
        let g = schreier_sims(gens).unwrap();
        let doc = g.to_json();
        let back = PermGroup::from_json(&doc).unwrap();
        assert_eq!(back.order(), 24);

        let mut tampered = doc.clone();
        tampered["order"] = serde_json::json!(23);
        assert!(matches!(
            PermGroup::from_json(&tampered),
            Err(GroupError::OrderMismatch { .. })
        ));
    }
}
