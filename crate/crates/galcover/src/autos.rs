//! Automorphism enumeration and isomorphism testing by backtracking over
//! generator images, pruned by element order and conjugacy class size.

use std::collections::{HashMap, HashSet};

use crate::group::{Elem, FiniteGroup, GroupError, GroupMap};

/// Lexicographically first generating set of minimal size.
pub fn minimal_generating_set(g: &FiniteGroup) -> Vec<Elem> {
    let n = g.order() as Elem;
    if g.order() == 1 {
        return vec![];
    }
    for size in 1..=g.order() {
        let mut combo: Vec<Elem> = (1..=size as Elem).collect();
        loop {
            if g.generates(&combo) {
                return combo;
            }
            // Next lexicographic combination of {1..n-1}.
            let mut i = size;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if combo[i] < n - (size - i) as Elem {
                    combo[i] += 1;
                    for j in i + 1..size {
                        combo[j] = combo[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    combo.clear();
                    break;
                }
            }
            if combo.is_empty() {
                break;
            }
        }
    }
    unreachable!("the full element set always generates");
}

/// A spanning description of the group over a generating set: every
/// element as (parent, generator index), in BFS discovery order.
struct WordTable {
    /// (element, parent element, generator index) in fill order;
    /// the identity is the implicit root.
    steps: Vec<(Elem, Elem, usize)>,
}

fn word_table(g: &FiniteGroup, gens: &[Elem]) -> WordTable {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut frontier = vec![0 as Elem];
    let mut steps = Vec::with_capacity(g.order() - 1);
    let mut queue = 0usize;
    while queue < frontier.len() {
        let current = frontier[queue];
        queue += 1;
        for (gi, &gen) in gens.iter().enumerate() {
            let next = g.mul(current, gen);
            if !seen[next as usize] {
                seen[next as usize] = true;
                steps.push((next, current, gi));
                frontier.push(next);
            }
        }
    }
    debug_assert_eq!(steps.len(), g.order() - 1);
    WordTable { steps }
}

/// Extend generator images to the whole group along the word table.
fn extend_map(
    source: &FiniteGroup,
    target: &FiniteGroup,
    words: &WordTable,
    images: &[Elem],
) -> GroupMap {
    let mut image = vec![0 as Elem; source.order()];
    for &(elem, parent, gi) in &words.steps {
        image[elem as usize] = target.mul(image[parent as usize], images[gi]);
    }
    GroupMap { image }
}

/// Candidates in `target` for the image of a source element: matching
/// element order and conjugacy class size.
fn candidate_images(source: &FiniteGroup, target: &FiniteGroup, x: Elem) -> Vec<Elem> {
    let sc = source.conjugacy();
    let tc = target.conjugacy();
    let order = source.elem_order(x);
    let class_size = sc.class_size(sc.class_of[x as usize] as usize);
    (0..target.order() as Elem)
        .filter(|&y| {
            target.elem_order(y) == order
                && tc.class_size(tc.class_of[y as usize] as usize) == class_size
        })
        .collect()
}

fn search_homomorphisms(
    source: &FiniteGroup,
    target: &FiniteGroup,
    first_only: bool,
) -> Vec<GroupMap> {
    let gens = minimal_generating_set(source);
    if gens.is_empty() {
        return vec![GroupMap::identity(target.order())];
    }
    let words = word_table(source, &gens);
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&x| candidate_images(source, target, x))
        .collect();
    let mut found = Vec::new();
    let mut stack: Vec<Elem> = Vec::with_capacity(gens.len());
    fn recurse(
        source: &FiniteGroup,
        target: &FiniteGroup,
        words: &WordTable,
        candidates: &[Vec<Elem>],
        stack: &mut Vec<Elem>,
        found: &mut Vec<GroupMap>,
        first_only: bool,
    ) -> bool {
        if stack.len() == candidates.len() {
            let map = extend_map(source, target, words, stack);
            if map.is_bijective() && map.is_homomorphism(source, target) {
                found.push(map);
                return first_only;
            }
            return false;
        }
        for &y in &candidates[stack.len()] {
            stack.push(y);
            let done = recurse(source, target, words, candidates, stack, found, first_only);
            stack.pop();
            if done {
                return true;
            }
        }
        false
    }
    recurse(
        source,
        target,
        &words,
        &candidates,
        &mut stack,
        &mut found,
        first_only,
    );
    found
}

/// All automorphisms of `g`, sorted for determinism. Fails when the
/// group order exceeds `cap`.
pub fn automorphisms(g: &FiniteGroup, cap: usize) -> Result<Vec<GroupMap>, GroupError> {
    if g.order() > cap {
        return Err(GroupError::OrderCapExceeded { cap });
    }
    let mut auts = search_homomorphisms(g, g, false);
    auts.sort_unstable_by(|a, b| a.image.cmp(&b.image));
    Ok(auts)
}

/// A small subset of `auts` generating the same group under composition.
pub fn generating_subset(auts: &[GroupMap], order: usize) -> Vec<GroupMap> {
    let mut gens: Vec<GroupMap> = Vec::new();
    let mut span: HashSet<Vec<Elem>> = HashSet::new();
    span.insert(GroupMap::identity(order).image);
    for a in auts {
        if span.contains(&a.image) {
            continue;
        }
        gens.push(a.clone());
        // Close the span under the new generator set.
        let mut frontier: Vec<GroupMap> = span
            .iter()
            .map(|v| GroupMap { image: v.clone() })
            .collect();
        let mut queue = 0usize;
        while queue < frontier.len() {
            let current = frontier[queue].clone();
            queue += 1;
            for gmap in &gens {
                let next = gmap.compose(&current);
                if span.insert(next.image.clone()) {
                    frontier.push(next);
                }
            }
        }
        if span.len() == auts.len() {
            break;
        }
    }
    gens
}

/// Cheap relabeling-invariant fingerprint used to prune isomorphism tests.
fn invariant_key(g: &FiniteGroup) -> (usize, u32, bool, Vec<(u32, usize)>, Vec<(u32, usize)>, usize) {
    (
        g.order(),
        g.exponent(),
        g.is_abelian(),
        g.order_profile(),
        g.conjugacy().class_profile(g),
        g.center().len(),
    )
}

/// An isomorphism from `g` to `h`, if one exists.
pub fn isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<GroupMap> {
    if invariant_key(g) != invariant_key(h) {
        return None;
    }
    search_homomorphisms(g, h, true).into_iter().next()
}

pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    isomorphism(g, h).is_some()
}

/// The distinct inner automorphisms of `g`.
pub fn inner_automorphisms(g: &FiniteGroup) -> Vec<GroupMap> {
    let mut set: HashSet<Vec<Elem>> = HashSet::new();
    let mut out = Vec::new();
    for by in 0..g.order() as Elem {
        let map = GroupMap::inner(g, by);
        if set.insert(map.image.clone()) {
            out.push(map);
        }
    }
    out.sort_unstable_by(|a, b| a.image.cmp(&b.image));
    out
}

/// Apply a relabeling permutation to a multiplication table: the image
/// group has `relabel[x]` wherever the original had `x`. The identity
/// must stay at index 0.
pub fn relabel_table(g: &FiniteGroup, relabel: &[Elem]) -> Vec<Vec<usize>> {
    assert_eq!(relabel[0], 0, "identity must remain at index 0");
    let n = g.order();
    let mut inv = vec![0 as Elem; n];
    for (x, &y) in relabel.iter().enumerate() {
        inv[y as usize] = x as Elem;
    }
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| relabel[g.mul(inv[a], inv[b]) as usize] as usize)
                .collect()
        })
        .collect()
}

/// Map from one permutation-constructed group into another given by
/// composing lookups; used by tests and catalog fixtures.
pub fn index_map(perms: &[crate::perm::Perm]) -> HashMap<crate::perm::Perm, Elem> {
    perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i as Elem))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn cyclic(n: usize) -> FiniteGroup {
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup::from_table(&table).unwrap()
    }

    fn sym(n: usize) -> FiniteGroup {
        let mut cycle = Vec::new();
        for i in 1..=n {
            cycle.push(i);
        }
        let gens = [
            Perm::from_cycles(n, &[cycle]).unwrap(),
            Perm::from_cycles(n, &[vec![1, 2]]).unwrap(),
        ];
        FiniteGroup::from_permutations(n, &gens, 10_000).unwrap().0
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&cyclic(2), 256).unwrap().len(), 1);
        assert_eq!(automorphisms(&cyclic(3), 256).unwrap().len(), 2);
        // S3: all six automorphisms are inner.
        let s3 = sym(3);
        let auts = automorphisms(&s3, 256).unwrap();
        assert_eq!(auts.len(), 6);
        let inner = inner_automorphisms(&s3);
        assert_eq!(inner.len(), 6);
        assert_eq!(auts, inner);
    }

    #[test]
    fn automorphisms_form_a_group() {
        let s3 = sym(3);
        let auts = automorphisms(&s3, 256).unwrap();
        let set: std::collections::HashSet<Vec<Elem>> =
            auts.iter().map(|a| a.image.clone()).collect();
        for a in &auts {
            assert!(set.contains(&a.inverse().image));
            for b in &auts {
                assert!(set.contains(&a.compose(b).image));
            }
        }
    }

    #[test]
    fn inner_automorphism_count_is_index_of_center() {
        for g in [sym(3), sym(4), cyclic(8)] {
            let inner = inner_automorphisms(&g);
            assert_eq!(inner.len(), g.order() / g.center().len());
            // Normal inside Aut: conjugating an inner by any
            // automorphism stays inner.
            let auts = automorphisms(&g, 256).unwrap();
            let inner_set: std::collections::HashSet<Vec<Elem>> =
                inner.iter().map(|a| a.image.clone()).collect();
            for a in auts.iter().take(8) {
                for i in &inner {
                    let conj = a.compose(&i.compose(&a.inverse()));
                    assert!(inner_set.contains(&conj.image));
                }
            }
        }
    }

    #[test]
    fn minimal_generating_sets() {
        assert_eq!(minimal_generating_set(&cyclic(12)).len(), 1);
        assert_eq!(minimal_generating_set(&sym(4)).len(), 2);
    }

    #[test]
    fn isomorphism_detects_relabeling() {
        let g = sym(3);
        // Relabel by an arbitrary permutation of the non-identity elements.
        let relabel: Vec<Elem> = vec![0, 3, 5, 1, 4, 2];
        let h = FiniteGroup::from_table(&relabel_table(&g, &relabel)).unwrap();
        let iso = isomorphism(&g, &h).expect("relabeled copy must be isomorphic");
        assert!(iso.is_homomorphism(&g, &h));
        assert!(iso.is_bijective());
    }

    #[test]
    fn non_isomorphic_groups_of_order_4() {
        let z4 = cyclic(4);
        let klein = {
            let gens = [
                Perm::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap(),
                Perm::from_cycles(4, &[vec![1, 3], vec![2, 4]]).unwrap(),
            ];
            FiniteGroup::from_permutations(4, &gens, 100).unwrap().0
        };
        assert_eq!(klein.order(), 4);
        assert!(!are_isomorphic(&z4, &klein));
        assert!(are_isomorphic(&z4, &cyclic(4)));
    }

    #[test]
    fn generating_subset_spans() {
        let g = sym(4);
        let auts = automorphisms(&g, 256).unwrap();
        assert_eq!(auts.len(), 24);
        let gens = generating_subset(&auts, g.order());
        assert!(gens.len() <= 3);
        // Re-close and compare.
        let mut span: HashSet<Vec<Elem>> = HashSet::new();
        span.insert(GroupMap::identity(g.order()).image);
        let mut frontier: Vec<GroupMap> = vec![GroupMap::identity(g.order())];
        let mut queue = 0;
        while queue < frontier.len() {
            let cur = frontier[queue].clone();
            queue += 1;
            for gen in &gens {
                let next = gen.compose(&cur);
                if span.insert(next.image.clone()) {
                    frontier.push(next);
                }
            }
        }
        assert_eq!(span.len(), auts.len());
    }

    #[test]
    fn order_cap_is_enforced() {
        let g = cyclic(10);
        assert!(matches!(
            automorphisms(&g, 5),
            Err(GroupError::OrderCapExceeded { cap: 5 })
        ));
    }
}
