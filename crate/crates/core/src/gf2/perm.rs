use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From the 1-based image list `[σ(1), …, σ(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::invalid(format!("{images:?} is not a permutation of 1..{n}")));
            }
            seen[i - 1] = true;
            out.push(i - 1);
        }
        Ok(Permutation { images: out })
    }

    /// Product of 1-based disjoint or overlapping cycles, rightmost applied first.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut acc = Self::identity(n);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..n).collect();
            let mut seen = HashSet::new();
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || !seen.insert(a) {
                    return Err(Error::invalid(format!("bad cycle {cycle:?} on 1..{n}")));
                }
                images[a - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
            acc = Permutation { images }.compose(&acc);
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for 0-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "permutations of different degrees");
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycles, 0-based, each starting at its least point, including fixed points.
    fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let parts: Vec<String> = cycle.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All elements of the group generated by `gens`, by breadth-first closure.
/// Meant for the small groups used here.
pub fn generate_group(n: usize, gens: &[Permutation]) -> BTreeSet<Permutation> {
    let id = Permutation::identity(n);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = s.compose(&g);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_and_composition() {
        let s = Permutation::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap();
        assert_eq!(s.images(), vec![2, 3, 4, 5, 1]);
        assert_eq!(s.to_string(), "(1 2 3 4 5)");
        let t = Permutation::from_cycles(5, &[&[2, 5], &[3, 4]]).unwrap();
        assert_eq!(t.cycle_type(), vec![2, 2, 1]);
        // (1 2)(2 3) = (1 2 3) with the right factor applied first
        let a = Permutation::from_cycles(3, &[&[1, 2], &[2, 3]]).unwrap();
        assert_eq!(a.to_string(), "(1 2 3)");
        assert!(s.compose(&s.inverse()).is_identity());
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    #[test]
    fn invalid_inputs() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[&[1, 4]]).is_err());
        assert!(Permutation::from_cycles(3, &[&[1, 2, 1]]).is_err());
    }

    #[test]
    fn small_group_orders() {
        let c = Permutation::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap();
        let f = Permutation::from_cycles(5, &[&[2, 3, 5, 4]]).unwrap();
        assert_eq!(generate_group(5, &[c.clone(), f]).len(), 20);
        let tr = Permutation::from_cycles(5, &[&[1, 2]]).unwrap();
        assert_eq!(generate_group(5, &[c, tr]).len(), 120);
    }
}
