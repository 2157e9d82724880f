//! Subgroup enumeration up to conjugacy, by closing the lattice under
//! one-element extensions starting from the trivial subgroup.

use std::collections::HashSet;

use crate::group::{is_normal_in, Elem, FiniteGroup, GroupError, Subgroup};

/// One representative per conjugacy class of subgroups, ordered by
/// (order, member list). Fails when `|g|` exceeds `cap`.
pub fn subgroups_up_to_conjugacy(
    g: &FiniteGroup,
    cap: usize,
) -> Result<Vec<Subgroup>, GroupError> {
    if g.order() > cap {
        return Err(GroupError::OrderCapExceeded { cap });
    }
    let all = all_subgroups(g);
    // Partition into conjugacy orbits.
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut reps: Vec<Subgroup> = Vec::new();
    for members in &all {
        if seen.contains(members) {
            continue;
        }
        let mut orbit: Vec<Vec<Elem>> = Vec::new();
        for by in 0..g.order() as Elem {
            let mut conj: Vec<Elem> = members.iter().map(|&x| g.conj(x, by)).collect();
            conj.sort_unstable();
            if seen.insert(conj.clone()) {
                orbit.push(conj);
            }
        }
        let rep = orbit.into_iter().min().expect("orbit is nonempty");
        let is_normal = is_normal_in(g, &rep);
        reps.push(Subgroup { members: rep, is_normal });
    }
    reps.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    Ok(reps)
}

/// Every subgroup of `g`, as sorted member lists.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Vec<Elem>> {
    let mut found: HashSet<Vec<Elem>> = HashSet::new();
    let trivial = vec![0 as Elem];
    found.insert(trivial.clone());
    let mut frontier = vec![trivial];
    while let Some(current) = frontier.pop() {
        for x in 1..g.order() as Elem {
            if current.binary_search(&x).is_ok() {
                continue;
            }
            let mut gens = current.clone();
            gens.push(x);
            let extended = g.closure(&gens);
            if found.insert(extended.clone()) {
                frontier.push(extended);
            }
        }
    }
    let mut out: Vec<Vec<Elem>> = found.into_iter().collect();
    out.sort_by(|a, b| (a.len(), a.clone()).cmp(&(b.len(), b.clone())));
    out
}

impl Subgroup {
    /// Whether this subgroup is cyclic (some member generates it).
    pub fn is_cyclic(&self, g: &FiniteGroup) -> bool {
        self.members
            .iter()
            .any(|&x| g.elem_order(x) as usize == self.members.len())
    }
}
