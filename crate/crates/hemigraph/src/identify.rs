//! Evidence-based recognition of small groups.
//!
//! Identification never consults stored isomorphism tables; it works from
//! computable evidence (order, element-order histogram, abelianness,
//! center, derived subgroup, simplicity) through a fixed decision table.
//! At each order the table is sufficient to separate the candidates it
//! names: order 12 with element orders within {1,2,3} forces A4, order 60
//! with no nontrivial proper normal subgroup forces A5, and at order 120
//! the center/derived-subgroup tests separate S5 from A5 x C2. Anything
//! the table cannot pin down is reported as Unknown together with the
//! gathered evidence.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::group::{GroupError, PermGroup};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GroupTag {
    Trivial,
    Cyclic(u64),
    Dihedral(u64),
    A4,
    S4,
    A5,
    S5,
    A5xC2,
    Unknown,
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Trivial => write!(f, "trivial"),
            GroupTag::Cyclic(k) => write!(f, "C{k}"),
            GroupTag::Dihedral(k) => write!(f, "D{k}"),
            GroupTag::A4 => write!(f, "A4"),
            GroupTag::S4 => write!(f, "S4"),
            GroupTag::A5 => write!(f, "A5"),
            GroupTag::S5 => write!(f, "S5"),
            GroupTag::A5xC2 => write!(f, "A5xC2"),
            GroupTag::Unknown => write!(f, "unknown"),
        }
    }
}

impl FromStr for GroupTag {
    type Err = String;

    /// Accepts `trivial`, `C<k>`, `D<k>`, `A4`, `S4`, `A5`, `S5`,
    /// `A5xC2` and the alias `S3` (= `D3`), case-insensitively.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let parse_k = |rest: &str| -> Result<u64, String> {
            rest.parse()
                .map_err(|_| format!("bad group name suffix in {s:?}"))
        };
        match lower.as_str() {
            "trivial" | "1" | "c1" => Ok(GroupTag::Trivial),
            "a4" => Ok(GroupTag::A4),
            "s4" => Ok(GroupTag::S4),
            "a5" => Ok(GroupTag::A5),
            "s5" => Ok(GroupTag::S5),
            "a5xc2" | "a5c2" => Ok(GroupTag::A5xC2),
            "s3" => Ok(GroupTag::Dihedral(3)),
            _ if lower.starts_with('c') => Ok(GroupTag::Cyclic(parse_k(&lower[1..])?)),
            _ if lower.starts_with('d') => Ok(GroupTag::Dihedral(parse_k(&lower[1..])?)),
            _ => Err(format!("unrecognized group name {s:?}")),
        }
    }
}

impl GroupTag {
    /// Order of the named group; None for Unknown.
    pub fn order(&self) -> Option<u64> {
        match self {
            GroupTag::Trivial => Some(1),
            GroupTag::Cyclic(k) => Some(*k),
            GroupTag::Dihedral(k) => Some(2 * k),
            GroupTag::A4 => Some(12),
            GroupTag::S4 => Some(24),
            GroupTag::A5 => Some(60),
            GroupTag::S5 => Some(120),
            GroupTag::A5xC2 => Some(120),
            GroupTag::Unknown => None,
        }
    }
}

/// The computable facts identification is based on. Fields not needed to
/// reach a verdict are left unset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupEvidence {
    pub order: u64,
    pub element_orders: BTreeMap<u64, u64>,
    pub abelian: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center_order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived_order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simple: Option<bool>,
}

/// Identification verdict: a tag plus the evidence that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupName {
    pub tag: GroupTag,
    pub evidence: GroupEvidence,
}

/// No nontrivial proper normal subgroup: the normal closure of every
/// nontrivial element must be the whole group.
pub fn is_simple(group: &PermGroup, elements: &[Permutation]) -> Result<bool, GroupError> {
    let order = group.order();
    if order == 1 {
        return Ok(false);
    }
    for e in elements {
        if e.is_identity() {
            continue;
        }
        let closure = group.normal_closure(vec![e.clone()])?;
        if closure.order() != order {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs the decision table. Requires the order to be within the
/// enumeration bound.
pub fn identify_group(group: &PermGroup) -> Result<GroupName, GroupError> {
    let elements = group.elements()?;
    let order = elements.len() as u64;
    let mut element_orders: BTreeMap<u64, u64> = BTreeMap::new();
    for e in &elements {
        *element_orders.entry(e.order()).or_insert(0) += 1;
    }
    let abelian = group
        .generators()
        .iter()
        .enumerate()
        .all(|(i, a)| group.generators()[i..].iter().all(|b| a.then(b) == b.then(a)));
    let mut evidence = GroupEvidence {
        order,
        element_orders: element_orders.clone(),
        abelian,
        center_order: None,
        derived_order: None,
        simple: None,
    };
    let named = |tag: GroupTag, evidence: GroupEvidence| Ok(GroupName { tag, evidence });

    if order == 1 {
        return named(GroupTag::Trivial, evidence);
    }
    if abelian && element_orders.contains_key(&order) {
        return named(GroupTag::Cyclic(order), evidence);
    }
    if order % 2 == 0 && order >= 4 {
        let k = order / 2;
        if dihedral_witness(group, &elements, k).is_some() {
            return named(GroupTag::Dihedral(k), evidence);
        }
    }
    if order == 12 && element_orders.keys().all(|o| [1, 2, 3].contains(o)) {
        return named(GroupTag::A4, evidence);
    }
    if order == 60 {
        let simple = is_simple(group, &elements)?;
        evidence.simple = Some(simple);
        if simple {
            return named(GroupTag::A5, evidence);
        }
    }
    if order == 24 && element_orders == BTreeMap::from([(1, 1), (2, 9), (3, 8), (4, 6)]) {
        return named(GroupTag::S4, evidence);
    }
    if order == 120 {
        let center = group.center_elements()?.len() as u64;
        evidence.center_order = Some(center);
        let derived = group.derived_subgroup()?;
        let derived_order = derived.order() as u64;
        evidence.derived_order = Some(derived_order);
        if center == 1 && derived_order == 60 {
            let derived_simple = is_simple(&derived, &derived.elements()?)?;
            evidence.simple = Some(derived_simple);
            if derived_simple {
                return named(GroupTag::S5, evidence);
            }
        }
        if center == 2 && derived_order == 60 {
            return named(GroupTag::A5xC2, evidence);
        }
    }
    named(GroupTag::Unknown, evidence)
}

/// Searches for r of order k and an involution s with s·r·s = r⁻¹ that
/// together generate the whole group. Elements are scanned in sorted
/// order, so the witness is deterministic.
fn dihedral_witness(
    group: &PermGroup,
    elements: &[Permutation],
    k: u64,
) -> Option<(Permutation, Permutation)> {
    let order = group.order();
    for r in elements {
        if r.order() != k {
            continue;
        }
        let r_inv = r.inverse();
        for s in elements {
            if s.order() != 2 {
                continue;
            }
            if s.then(r).then(s) != r_inv {
                continue;
            }
            let generated =
                PermGroup::from_generators(group.degree(), vec![r.clone(), s.clone()])
                    .expect("elements share the group degree");
            if generated.order() == order {
                return Some((r.clone(), s.clone()));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::schreier_sims;

    fn cyclic(k: usize) -> PermGroup {
        let cycle: Vec<usize> = (0..k).collect();
        schreier_sims(vec![Permutation::from_cycles(k, &[&cycle])]).unwrap()
    }

    fn dihedral(k: usize) -> PermGroup {
        let cycle: Vec<usize> = (0..k).collect();
        let mut flip: Vec<usize> = (0..k).collect();
        flip.reverse();
        schreier_sims(vec![
            Permutation::from_cycles(k, &[&cycle]),
            Permutation::from_images(flip).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn trivial_and_cyclic() {
        let trivial = PermGroup::trivial(3);
        assert_eq!(identify_group(&trivial).unwrap().tag, GroupTag::Trivial);
        for k in 2..=12 {
            assert_eq!(
                identify_group(&cyclic(k)).unwrap().tag,
                GroupTag::Cyclic(k as u64),
                "C{k}"
            );
        }
    }

    #[test]
    fn dihedral_groups() {
        for k in 3..=8 {
            assert_eq!(
                identify_group(&dihedral(k)).unwrap().tag,
                GroupTag::Dihedral(k as u64),
                "D{k}"
            );
        }
        // Klein four-group: the degenerate dihedral case k = 2
        let klein = schreier_sims(vec![
            Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]),
            Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]),
        ])
        .unwrap();
        assert_eq!(identify_group(&klein).unwrap().tag, GroupTag::Dihedral(2));
    }

    #[test]
    fn alternating_and_symmetric() {
        let a4 = schreier_sims(vec![
            Permutation::from_cycles(4, &[&[0, 1, 2]]),
            Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]),
        ])
        .unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(identify_group(&a4).unwrap().tag, GroupTag::A4);

        let s4 = schreier_sims(vec![
            Permutation::from_cycles(4, &[&[0, 1]]),
            Permutation::from_cycles(4, &[&[0, 1, 2, 3]]),
        ])
        .unwrap();
        assert_eq!(identify_group(&s4).unwrap().tag, GroupTag::S4);

        let a5 = schreier_sims(vec![
            Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]),
            Permutation::from_cycles(5, &[&[0, 1, 2]]),
        ])
        .unwrap();
        assert_eq!(a5.order(), 60);
        let name = identify_group(&a5).unwrap();
        assert_eq!(name.tag, GroupTag::A5);
        assert_eq!(name.evidence.simple, Some(true));

        let s5 = schreier_sims(vec![
            Permutation::from_cycles(5, &[&[0, 1]]),
            Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]),
        ])
        .unwrap();
        assert_eq!(identify_group(&s5).unwrap().tag, GroupTag::S5);
    }

    #[test]
    fn a5_times_c2_on_disjoint_supports() {
        let g = schreier_sims(vec![
            Permutation::from_cycles(7, &[&[0, 1, 2, 3, 4]]),
            Permutation::from_cycles(7, &[&[0, 1, 2]]),
            Permutation::from_cycles(7, &[&[5, 6]]),
        ])
        .unwrap();
        assert_eq!(g.order(), 120);
        let name = identify_group(&g).unwrap();
        assert_eq!(name.tag, GroupTag::A5xC2);
        assert_eq!(name.evidence.center_order, Some(2));
        assert_eq!(name.evidence.derived_order, Some(60));
    }

    #[test]
    fn honest_unknowns() {
        // C2 x C6: abelian, not cyclic, no dihedral witness
        let g = schreier_sims(vec![
            Permutation::from_cycles(8, &[&[0, 1]]),
            Permutation::from_cycles(8, &[&[2, 3, 4, 5, 6, 7]]),
        ])
        .unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(identify_group(&g).unwrap().tag, GroupTag::Unknown);

        // quaternion group Q8 in its regular representation
        let q8 = schreier_sims(vec![
            Permutation::from_images(vec![2, 3, 1, 0, 6, 7, 5, 4]).unwrap(),
            Permutation::from_images(vec![4, 5, 7, 6, 1, 0, 2, 3]).unwrap(),
        ])
        .unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(identify_group(&q8).unwrap().tag, GroupTag::Unknown);
    }

    #[test]
    fn names_parse_and_print() {
        for (s, tag) in [
            ("trivial", GroupTag::Trivial),
            ("C2", GroupTag::Cyclic(2)),
            ("c3", GroupTag::Cyclic(3)),
            ("D4", GroupTag::Dihedral(4)),
            ("s3", GroupTag::Dihedral(3)),
            ("A4", GroupTag::A4),
            ("A5xC2", GroupTag::A5xC2),
        ] {
            assert_eq!(s.parse::<GroupTag>().unwrap(), tag);
        }
        assert!("X7".parse::<GroupTag>().is_err());
        assert_eq!(GroupTag::Dihedral(3).to_string(), "D3");
        assert_eq!(GroupTag::Cyclic(2).order(), Some(2));
        assert_eq!(GroupTag::Dihedral(4).order(), Some(8));
    }
}
