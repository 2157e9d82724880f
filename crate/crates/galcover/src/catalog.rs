//! The catalog of isomorphism classes of small finite groups, complete
//! through order 24 (and in fact through order 31; order 32 carries only
//! the standard families). Entries are built from explicit constructions
//! and labeled with our own (order, local_index) scheme; the groups that
//! appear in published classification tables additionally carry their
//! conventional `G(n,k)` id.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::autos::are_isomorphic;
use crate::group::{Elem, FiniteGroup, GroupMap};
use crate::perm::Perm;

/// Orders above this are rejected outright.
pub const HARD_CAP: usize = 32;
/// Completeness is only promised up to here.
pub const COMPLETE_THROUGH: usize = 24;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("requested max order {requested} exceeds the hard cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("no catalog entry isomorphic to the given group of order {order}")]
    NotFound { order: usize },
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub order: usize,
    /// Position among the groups of this order, in construction order.
    pub local_index: usize,
    pub name: String,
    /// Conventional small-group id `G(n,k)` where one is published.
    pub paper_id: Option<String>,
    pub group: Arc<FiniteGroup>,
}

impl CatalogEntry {
    pub fn id(&self) -> String {
        format!("{}/{}", self.order, self.local_index)
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub max_order: usize,
}

// ---------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------

pub fn cyclic(n: usize) -> FiniteGroup {
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    FiniteGroup::from_table(&table).expect("cyclic group table is valid")
}

/// Decode a mixed-radix index into coordinates over the given factors.
pub fn abelian_coords(factors: &[usize], mut index: usize) -> Vec<usize> {
    let mut out = vec![0; factors.len()];
    for i in (0..factors.len()).rev() {
        out[i] = index % factors[i];
        index /= factors[i];
    }
    out
}

pub fn abelian_index(factors: &[usize], coords: &[usize]) -> usize {
    let mut index = 0;
    for (i, &c) in coords.iter().enumerate() {
        index = index * factors[i] + c % factors[i];
    }
    index
}

/// Direct product of cyclic groups of the given orders; element index is
/// mixed-radix over the factors, first factor most significant.
pub fn abelian(factors: &[usize]) -> FiniteGroup {
    let n: usize = factors.iter().product();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            let ca = abelian_coords(factors, a);
            (0..n)
                .map(|b| {
                    let cb = abelian_coords(factors, b);
                    let sum: Vec<usize> = ca
                        .iter()
                        .zip(&cb)
                        .zip(factors)
                        .map(|((&x, &y), &f)| (x + y) % f)
                        .collect();
                    abelian_index(factors, &sum)
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(&table).expect("abelian product table is valid")
}

/// An automorphism of an abelian group given coordinate-wise.
pub fn abelian_automorphism(
    factors: &[usize],
    f: impl Fn(&[usize]) -> Vec<usize>,
) -> GroupMap {
    let n: usize = factors.iter().product();
    GroupMap {
        image: (0..n)
            .map(|a| abelian_index(factors, &f(&abelian_coords(factors, a))) as Elem)
            .collect(),
    }
}

/// Direct product on index pairs: `(a, b) -> a * |B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let na = a.order();
    let nb = b.order();
    let table: Vec<Vec<usize>> = (0..na * nb)
        .map(|x| {
            let (xa, xb) = ((x / nb) as Elem, (x % nb) as Elem);
            (0..na * nb)
                .map(|y| {
                    let (ya, yb) = ((y / nb) as Elem, (y % nb) as Elem);
                    a.mul(xa, ya) as usize * nb + b.mul(xb, yb) as usize
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(&table).expect("direct product table is valid")
}

/// Semidirect product `base x| Z_k` under `alpha` with `alpha^k = id`.
/// Elements are `(a, i) = a * t^i` at index `i * |base| + a`, multiplied
/// by `(a, i)(b, j) = (a * alpha^i(b), i + j)`. The twisting generator
/// `t` sits at index `|base|`.
pub fn semidirect(base: &FiniteGroup, k: usize, alpha: &GroupMap) -> FiniteGroup {
    let nb = base.order();
    debug_assert!(alpha.is_bijective() && alpha.is_homomorphism(base, base));
    let mut alpha_pow: Vec<GroupMap> = vec![GroupMap::identity(nb)];
    for i in 1..k {
        alpha_pow.push(alpha.compose(&alpha_pow[i - 1]));
    }
    assert!(
        alpha.compose(&alpha_pow[k - 1]).image == GroupMap::identity(nb).image,
        "twist must have order dividing k"
    );
    let n = nb * k;
    let table: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let (xi, xa) = (x / nb, (x % nb) as Elem);
            (0..n)
                .map(|y| {
                    let (yi, ya) = (y / nb, (y % nb) as Elem);
                    let twisted = alpha_pow[xi].apply(ya);
                    ((xi + yi) % k) * nb + base.mul(xa, twisted) as usize
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(&table).expect("semidirect product table is valid")
}

/// Dihedral group of order `2m`: rotation at index 1, reflection at
/// index `m`.
pub fn dihedral(m: usize) -> FiniteGroup {
    let inversion = abelian_automorphism(&[m], |c| vec![(m - c[0]) % m]);
    semidirect(&cyclic(m), 2, &inversion)
}

/// Dicyclic group of order `4m`: `a^(2m) = 1`, `b^2 = a^m`,
/// `b a b^-1 = a^-1`; `a` at index 1, `b` at index `2m`.
pub fn dicyclic(m: usize) -> FiniteGroup {
    let n = 4 * m;
    let two_m = 2 * m;
    // Element i*2m + j stands for a^j b^i with i in {0, 1}.
    let table: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let (xi, xj) = (x / two_m, x % two_m);
            (0..n)
                .map(|y| {
                    let (yi, yj) = (y / two_m, y % two_m);
                    // (a^xj b^xi)(a^yj b^yi): move b^xi past a^yj.
                    let j = if xi == 0 { xj + yj } else { xj + two_m - yj };
                    match (xi, yi) {
                        (0, i) => (i % 2) * two_m + j % two_m,
                        (1, 0) => two_m + j % two_m,
                        (1, 1) => (j + m) % two_m,
                        _ => unreachable!(),
                    }
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(&table).expect("dicyclic table is valid")
}

pub fn symmetric(n: usize) -> (FiniteGroup, Vec<Perm>) {
    let mut cycle = Vec::new();
    for i in 1..=n {
        cycle.push(i);
    }
    let gens = [
        Perm::from_cycles(n, &[cycle]).unwrap(),
        Perm::from_cycles(n, &[vec![1, 2]]).unwrap(),
    ];
    FiniteGroup::from_permutations(n, &gens, 10_000).expect("S_n closure fits")
}

pub fn alternating4() -> (FiniteGroup, Vec<Perm>) {
    let gens = [
        Perm::from_cycles(4, &[vec![1, 2, 3]]).unwrap(),
        Perm::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap(),
    ];
    FiniteGroup::from_permutations(4, &gens, 10_000).expect("A4 closure fits")
}

/// `SL(2, F_3)` as 2x2 matrices of determinant 1 over the field with
/// three elements; returns the matrix realizing each element index.
pub fn sl23() -> (FiniteGroup, Vec<[[u8; 2]; 2]>) {
    let mut mats: Vec<[[u8; 2]; 2]> = vec![[[1, 0], [0, 1]]];
    for a in 0..3u8 {
        for b in 0..3u8 {
            for c in 0..3u8 {
                for d in 0..3u8 {
                    let det = (3 + a * d % 3 - b * c % 3) % 3;
                    let m = [[a, b], [c, d]];
                    if det == 1 && m != [[1, 0], [0, 1]] {
                        mats.push(m);
                    }
                }
            }
        }
    }
    assert_eq!(mats.len(), 24);
    let index: HashMap<[[u8; 2]; 2], usize> =
        mats.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mul = |x: &[[u8; 2]; 2], y: &[[u8; 2]; 2]| -> [[u8; 2]; 2] {
        let mut out = [[0u8; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = (x[i][0] * y[0][j] + x[i][1] * y[1][j]) % 3;
            }
        }
        out
    };
    let table: Vec<Vec<usize>> = mats
        .iter()
        .map(|x| mats.iter().map(|y| index[&mul(x, y)]).collect())
        .collect();
    let group = FiniteGroup::from_table(&table).expect("SL(2,3) table is valid");
    (group, mats)
}

// ---------------------------------------------------------------------
// The curated list
// ---------------------------------------------------------------------

fn partitions(e: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut part = max_part.min(remaining);
        while part >= 1 {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    rec(e, e, &mut Vec::new(), &mut out);
    out
}

/// All abelian groups of order n as (invariant factors, construction
/// factors), invariant factors descending.
fn abelian_types(n: usize) -> Vec<Vec<usize>> {
    // Factor n.
    let mut rest = n;
    let mut primes: Vec<(usize, u32)> = Vec::new();
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            primes.push((p, e));
        }
        p += 1;
    }
    if rest > 1 {
        primes.push((rest, 1));
    }
    // Cartesian product of partitions per prime.
    let mut combos: Vec<Vec<Vec<u32>>> = vec![vec![]];
    for &(_, e) in &primes {
        let parts = partitions(e);
        let mut next = Vec::new();
        for combo in &combos {
            for part in &parts {
                let mut c = combo.clone();
                c.push(part.clone());
                next.push(c);
            }
        }
        combos = next;
    }
    let mut types: Vec<Vec<usize>> = Vec::new();
    for combo in combos {
        // Elementary divisors by prime, converted to invariant factors.
        let mut columns: Vec<Vec<usize>> = Vec::new();
        for (i, &(p, _)) in primes.iter().enumerate() {
            let mut col: Vec<usize> =
                combo[i].iter().map(|&a| (p as u64).pow(a) as usize).collect();
            col.sort_unstable_by(|x, y| y.cmp(x));
            columns.push(col);
        }
        let depth = columns.iter().map(|c| c.len()).max().unwrap_or(0);
        let mut invariant: Vec<usize> = Vec::new();
        for d in 0..depth {
            let mut f = 1;
            for col in &columns {
                if d < col.len() {
                    f *= col[d];
                }
            }
            invariant.push(f);
        }
        types.push(invariant);
    }
    // Descending lexicographic order gives the cyclic group first.
    types.sort_unstable_by(|a, b| b.cmp(a));
    types
}

fn abelian_name(invariant: &[usize]) -> String {
    invariant
        .iter()
        .map(|f| format!("Z{f}"))
        .collect::<Vec<_>>()
        .join("x")
}

/// Non-abelian entries for one order, in fixed construction order.
fn nonabelian_entries(n: usize) -> Vec<(String, FiniteGroup)> {
    let named = |s: &str, g: FiniteGroup| (s.to_string(), g);
    match n {
        6 => vec![named("S3", dihedral(3))],
        8 => vec![named("D4", dihedral(4)), named("Q8", dicyclic(2))],
        10 => vec![named("D5", dihedral(5))],
        12 => vec![
            named("D6", dihedral(6)),
            named("A4", alternating4().0),
            named("Z3:Z4", dicyclic(3)),
        ],
        14 => vec![named("D7", dihedral(7))],
        16 => {
            let z8_cube = abelian_automorphism(&[8], |c| vec![c[0] * 3 % 8]);
            let z8_fifth = abelian_automorphism(&[8], |c| vec![c[0] * 5 % 8]);
            let z4_inv = abelian_automorphism(&[4], |c| vec![(4 - c[0]) % 4]);
            // y3 of order 4, y2 of order 2; the twist fixes y3 and sends
            // y2 to y2*y3^2.
            let pauli_twist =
                abelian_automorphism(&[4, 2], |c| vec![(c[0] + 2 * c[1]) % 4, c[1]]);
            let swap = abelian_automorphism(&[2, 2], |c| vec![c[1], c[0]]);
            vec![
                named("D8", dihedral(8)),
                named("QD16", semidirect(&cyclic(8), 2, &z8_cube)),
                named("M16", semidirect(&cyclic(8), 2, &z8_fifth)),
                named("Q16", dicyclic(4)),
                named("D4xZ2", direct_product(&dihedral(4), &cyclic(2))),
                named("Q8xZ2", direct_product(&dicyclic(2), &cyclic(2))),
                named("(Z4xZ2):Z2", semidirect(&abelian(&[4, 2]), 2, &pauli_twist)),
                named("Z4:Z4", semidirect(&cyclic(4), 4, &z4_inv)),
                named("(Z2xZ2):Z4", semidirect(&abelian(&[2, 2]), 4, &swap)),
            ]
        }
        18 => {
            let invert_second =
                abelian_automorphism(&[3, 3], |c| vec![c[0], (3 - c[1]) % 3]);
            let invert_both =
                abelian_automorphism(&[3, 3], |c| vec![(3 - c[0]) % 3, (3 - c[1]) % 3]);
            vec![
                named("D9", dihedral(9)),
                named("Z3xS3", semidirect(&abelian(&[3, 3]), 2, &invert_second)),
                named("(Z3xZ3):Z2", semidirect(&abelian(&[3, 3]), 2, &invert_both)),
            ]
        }
        20 => {
            let z5_square = abelian_automorphism(&[5], |c| vec![c[0] * 2 % 5]);
            vec![
                named("D10", dihedral(10)),
                named("Dic5", dicyclic(5)),
                named("F20", semidirect(&cyclic(5), 4, &z5_square)),
            ]
        }
        21 => {
            let z7_square = abelian_automorphism(&[7], |c| vec![c[0] * 2 % 7]);
            vec![named("Z7:Z3", semidirect(&cyclic(7), 3, &z7_square))]
        }
        22 => vec![named("D11", dihedral(11))],
        24 => {
            let z3_inv = abelian_automorphism(&[3], |c| vec![(3 - c[0]) % 3]);
            // (Z6 x Z2) x| Z2 with u -> u^-1, v -> u^3 v.
            let twist24_8 = abelian_automorphism(&[6, 2], |c| {
                vec![((6 - c[0]) + 3 * c[1]) % 6, c[1]]
            });
            vec![
                named("S4", symmetric(4).0),
                named("SL(2,3)", sl23().0),
                named("A4xZ2", direct_product(&alternating4().0, &cyclic(2))),
                named("D12", dihedral(12)),
                named("Dic6", dicyclic(6)),
                named("Z3:Z8", semidirect(&cyclic(3), 8, &z3_inv)),
                named("Z3xD4", direct_product(&cyclic(3), &dihedral(4))),
                named("Z3xQ8", direct_product(&cyclic(3), &dicyclic(2))),
                named("S3xZ4", direct_product(&dihedral(3), &cyclic(4))),
                named("D6xZ2", direct_product(&dihedral(6), &cyclic(2))),
                named("(Z3:Z4)xZ2", direct_product(&dicyclic(3), &cyclic(2))),
                named("Z3:D4", semidirect(&abelian(&[6, 2]), 2, &twist24_8)),
            ]
        }
        26 => vec![named("D13", dihedral(13))],
        27 => {
            let z9_fourth = abelian_automorphism(&[9], |c| vec![c[0] * 4 % 9]);
            let shear = abelian_automorphism(&[3, 3], |c| vec![(c[0] + c[1]) % 3, c[1]]);
            vec![
                named("Z9:Z3", semidirect(&cyclic(9), 3, &z9_fourth)),
                named("(Z3xZ3):Z3", semidirect(&abelian(&[3, 3]), 3, &shear)),
            ]
        }
        28 => vec![named("D14", dihedral(14)), named("Dic7", dicyclic(7))],
        30 => vec![
            named("D15", dihedral(15)),
            named("Z3xD5", direct_product(&cyclic(3), &dihedral(5))),
            named("Z5xS3", direct_product(&cyclic(5), &dihedral(3))),
        ],
        // Order 32 ships only the standard families; the catalog does
        // not promise completeness here.
        32 => {
            let z16_m = abelian_automorphism(&[16], |c| vec![c[0] * 9 % 16]);
            let z16_sd = abelian_automorphism(&[16], |c| vec![c[0] * 7 % 16]);
            vec![
                named("D16", dihedral(16)),
                named("QD32", semidirect(&cyclic(16), 2, &z16_sd)),
                named("M32", semidirect(&cyclic(16), 2, &z16_m)),
                named("Q32", dicyclic(8)),
                named("D8xZ2", direct_product(&dihedral(8), &cyclic(2))),
                named("Q16xZ2", direct_product(&dicyclic(4), &cyclic(2))),
                named("D4xZ4", direct_product(&dihedral(4), &cyclic(4))),
                named("Q8xZ4", direct_product(&dicyclic(2), &cyclic(4))),
                named("D4xZ2xZ2", direct_product(&dihedral(4), &abelian(&[2, 2]))),
                named("Q8xZ2xZ2", direct_product(&dicyclic(2), &abelian(&[2, 2]))),
            ]
        }
        _ => vec![],
    }
}

/// Conventional ids for the groups that appear in the published table.
fn paper_ids() -> HashMap<&'static str, &'static str> {
    HashMap::from([
        ("Z2", "G(2,1)"),
        ("Z3", "G(3,1)"),
        ("Z4", "G(4,1)"),
        ("Z2xZ2", "G(4,2)"),
        ("Z5", "G(5,1)"),
        ("S3", "G(6,1)"),
        ("Z6", "G(6,2)"),
        ("Z7", "G(7,1)"),
        ("Z8", "G(8,1)"),
        ("Z4xZ2", "G(8,2)"),
        ("D4", "G(8,3)"),
        ("Q8", "G(8,4)"),
        ("Z9", "G(9,1)"),
        ("Z3xZ3", "G(9,2)"),
        ("Z10", "G(10,2)"),
        ("Z3:Z4", "G(12,1)"),
        ("Z12", "G(12,2)"),
        ("A4", "G(12,3)"),
        ("D6", "G(12,4)"),
        ("Z6xZ2", "G(12,5)"),
        ("(Z4xZ2):Z2", "G(16,13)"),
        ("Z3xS3", "G(18,3)"),
        ("SL(2,3)", "G(24,3)"),
        ("S4", "G(24,12)"),
    ])
}

/// Build the catalog of all isomorphism classes of groups of order up to
/// `max_order` (complete through 24).
pub fn catalog_build(max_order: usize) -> Result<Catalog, CatalogError> {
    if max_order > HARD_CAP {
        return Err(CatalogError::CapExceeded { requested: max_order, cap: HARD_CAP });
    }
    let ids = paper_ids();
    let mut entries = Vec::new();
    for n in 1..=max_order {
        let mut local = 0;
        for invariant in abelian_types(n) {
            let name = abelian_name(&invariant);
            let group = abelian(&invariant);
            entries.push(CatalogEntry {
                order: n,
                local_index: local,
                paper_id: ids.get(name.as_str()).map(|s| s.to_string()),
                name,
                group: Arc::new(group),
            });
            local += 1;
        }
        for (name, group) in nonabelian_entries(n) {
            entries.push(CatalogEntry {
                order: n,
                local_index: local,
                paper_id: ids.get(name.as_str()).map(|s| s.to_string()),
                name,
                group: Arc::new(group),
            });
            local += 1;
        }
    }
    Ok(Catalog { entries, max_order })
}

impl Catalog {
    /// The unique entry isomorphic to `g`.
    pub fn identify(&self, g: &FiniteGroup) -> Result<&CatalogEntry, CatalogError> {
        let order = g.order();
        if order > self.max_order {
            return Err(CatalogError::NotFound { order });
        }
        self.entries
            .iter()
            .filter(|e| e.order == order)
            .find(|e| are_isomorphic(&e.group, g))
            .ok_or(CatalogError::NotFound { order })
    }

    pub fn by_name(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Resolve "name" or "order/local_index" keys.
    pub fn lookup(&self, key: &str) -> Option<&CatalogEntry> {
        if let Some(e) = self.by_name(key) {
            return Some(e);
        }
        let (o, i) = key.split_once('/')?;
        let (o, i) = (o.parse::<usize>().ok()?, i.parse::<usize>().ok()?);
        self.entries.iter().find(|e| e.order == o && e.local_index == i)
    }

    pub fn of_order(&self, n: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.order == n)
    }
}

/// The unique entry isomorphic to `g` (free-function form).
pub fn identify<'c>(catalog: &'c Catalog, g: &FiniteGroup) -> Result<&'c CatalogEntry, CatalogError> {
    catalog.identify(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autos::{automorphisms, relabel_table};

    /// Published numbers of groups per order.
    const GROUP_COUNTS: [usize; 24] = [
        1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15,
    ];

    #[test]
    fn counts_through_24_match_published_numbers() {
        let cat = catalog_build(24).unwrap();
        for n in 1..=24 {
            let count = cat.of_order(n).count();
            assert_eq!(count, GROUP_COUNTS[n - 1], "order {n}");
        }
    }

    #[test]
    fn counts_through_8() {
        let cat = catalog_build(8).unwrap();
        let counts: Vec<usize> = (1..=8).map(|n| cat.of_order(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 2, 1, 5]);
    }

    #[test]
    fn entries_of_equal_order_pairwise_non_isomorphic() {
        let cat = catalog_build(24).unwrap();
        for n in 1..=24 {
            let of_n: Vec<&CatalogEntry> = cat.of_order(n).collect();
            for i in 0..of_n.len() {
                for j in i + 1..of_n.len() {
                    assert!(
                        !are_isomorphic(&of_n[i].group, &of_n[j].group),
                        "{} and {} are isomorphic",
                        of_n[i].name,
                        of_n[j].name
                    );
                }
            }
        }
    }

    #[test]
    fn orders_are_as_labeled() {
        let cat = catalog_build(32).unwrap();
        for e in &cat.entries {
            assert_eq!(e.group.order(), e.order, "{}", e.name);
        }
    }

    #[test]
    fn identify_round_trip() {
        let cat = catalog_build(16).unwrap();
        for e in &cat.entries {
            let found = cat.identify(&e.group).unwrap();
            assert_eq!(found.id(), e.id());
        }
    }

    #[test]
    fn identify_is_relabeling_invariant() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let cat = catalog_build(12).unwrap();
        let d4 = cat.by_name("D4").unwrap();
        for _ in 0..5 {
            let mut tail: Vec<Elem> = (1..8).collect();
            tail.shuffle(&mut rng);
            let mut relabel = vec![0 as Elem];
            relabel.extend(tail);
            let table = relabel_table(&d4.group, &relabel);
            let shuffled = FiniteGroup::from_table(&table).unwrap();
            assert_eq!(cat.identify(&shuffled).unwrap().name, "D4");
        }
    }

    #[test]
    fn z6_built_two_ways_identifies_identically() {
        let cat = catalog_build(8).unwrap();
        let from_table = cyclic(6);
        let (from_perms, _) = FiniteGroup::from_permutations(
            5,
            &[Perm::from_cycles(5, &[vec![1, 2], vec![3, 4, 5]]).unwrap()],
            100,
        )
        .unwrap();
        let a = cat.identify(&from_table).unwrap().id();
        let b = cat.identify(&from_perms).unwrap().id();
        assert_eq!(a, b);
        assert_eq!(cat.identify(&from_table).unwrap().name, "Z6");
    }

    #[test]
    fn paper_table_groups_are_present_with_ids() {
        let cat = catalog_build(24).unwrap();
        for (name, id) in paper_ids() {
            let e = cat.by_name(name).unwrap_or_else(|| panic!("missing {name}"));
            assert_eq!(e.paper_id.as_deref(), Some(id));
        }
        // Abelian/non-abelian status splits as published.
        for name in ["Z2", "Z4xZ2", "Z3xZ3", "Z6xZ2"] {
            assert!(cat.by_name(name).unwrap().group.is_abelian());
        }
        for name in ["S3", "D4", "Q8", "A4", "S4", "SL(2,3)", "Z3:Z4", "Z3xS3", "(Z4xZ2):Z2", "D6"] {
            assert!(!cat.by_name(name).unwrap().group.is_abelian(), "{name}");
        }
    }

    #[test]
    fn sl23_structure() {
        let (g, mats) = sl23();
        assert_eq!(g.order(), 24);
        assert_eq!(g.exponent(), 12);
        assert_eq!(g.conjugacy().class_count(), 7);
        // The center is {I, -I}.
        let minus_one = mats.iter().position(|&m| m == [[2, 0], [0, 2]]).unwrap();
        assert_eq!(g.center(), vec![0, minus_one as Elem]);
    }

    #[test]
    fn order16_sweep_oracle() {
        // Independent completeness check at order 16: every split
        // extension (base x| Z_k) of the smaller catalog groups, plus the
        // dicyclic group, must land in the catalog; and the catalog has
        // exactly the published 14 classes.
        let cat = catalog_build(16).unwrap();
        let mut produced: Vec<FiniteGroup> = vec![dicyclic(4)];
        let bases: Vec<Arc<FiniteGroup>> = cat
            .entries
            .iter()
            .filter(|e| e.order == 8 || e.order == 4 || e.order == 2)
            .map(|e| e.group.clone())
            .collect();
        for base in &bases {
            let k = 16 / base.order();
            for alpha in automorphisms(&base, 256).unwrap() {
                // Twist order must divide k.
                let mut pow = alpha.clone();
                let mut ord = 1;
                while pow.image != GroupMap::identity(base.order()).image {
                    pow = alpha.compose(&pow);
                    ord += 1;
                }
                if k % ord == 0 {
                    produced.push(semidirect(base, k, &alpha));
                }
            }
        }
        for g in &produced {
            assert!(cat.identify(g).is_ok(), "sweep found a group outside the catalog");
        }
        assert_eq!(cat.of_order(16).count(), 14);
    }

    #[test]
    fn hard_cap() {
        assert!(matches!(
            catalog_build(33),
            Err(CatalogError::CapExceeded { requested: 33, cap: 32 })
        ));
        assert!(matches!(
            catalog_build(24).unwrap().identify(&cyclic(25)),
            Err(CatalogError::NotFound { order: 25 })
        ));
    }

    #[test]
    fn lookup_keys() {
        let cat = catalog_build(12).unwrap();
        assert_eq!(cat.lookup("D4").unwrap().name, "D4");
        let id = cat.by_name("A4").unwrap().id();
        assert_eq!(cat.lookup(&id).unwrap().name, "A4");
        assert!(cat.lookup("nope").is_none());
    }
}
