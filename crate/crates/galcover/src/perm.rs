//! Permutations of `{0..n-1}`, with 1-based cycle notation for input and
//! display (matching the usual `(1 2 3)(4 5)` convention).

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("cycle entry {0} out of range 1..={1}")]
    EntryOutOfRange(usize, usize),
    #[error("point {0} appears twice")]
    RepeatedPoint(usize),
    #[error("image list of length {0} is not a bijection of {{0..{0}-1}}")]
    NotBijective(usize),
}

/// A permutation of `{0..degree-1}` stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<u16>) -> Result<Perm, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if (i as usize) >= n || seen[i as usize] {
                return Err(PermError::NotBijective(n));
            }
            seen[i as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Build from 1-based disjoint cycles, e.g. `[[1,2,3],[4,5]]` on
    /// `degree` points. Cycles need not be disjoint; later cycles are
    /// applied first, so `[[1,2],[1,3]]` equals the product (12)(13).
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm, PermError> {
        let mut result = Perm::identity(degree);
        for cycle in cycles.iter().rev() {
            let mut one = Perm::identity(degree);
            let mut seen = vec![false; degree];
            for (k, &p) in cycle.iter().enumerate() {
                if p < 1 || p > degree {
                    return Err(PermError::EntryOutOfRange(p, degree));
                }
                if seen[p - 1] {
                    return Err(PermError::RepeatedPoint(p));
                }
                seen[p - 1] = true;
                let q = cycle[(k + 1) % cycle.len()];
                if q < 1 || q > degree {
                    return Err(PermError::EntryOutOfRange(q, degree));
                }
                one.images[p - 1] = (q - 1) as u16;
            }
            result = result.compose(&one);
        }
        Ok(result)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: u16) -> u16 {
        self.images[point as usize]
    }

    /// Function composition: `(self . other)(i) = self(other(i))`,
    /// i.e. `other` acts first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u16 == j)
    }

    /// Cycle decomposition on 0-based points, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<u16>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u16);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_round_trip() {
        let p = Perm::from_cycles(5, &[vec![1, 2, 3], vec![4, 5]]).unwrap();
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(3), 4);
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        // (123) then (13)(24) gives (142); in product notation
        // (13)(24) * (123) where the right factor acts first.
        let a = Perm::from_cycles(4, &[vec![1, 3], vec![2, 4]]).unwrap();
        let b = Perm::from_cycles(4, &[vec![1, 2, 3]]).unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.to_string(), "(1 4 2)");
        // The paper-style product y1*y3 with y1 = (123), y3 = (13)(24).
        let ba = b.compose(&a);
        assert_eq!(ba.to_string(), "(2 4 3)");
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(Perm::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Perm::from_cycles(3, &[vec![1, 1]]).is_err());
    }
}
