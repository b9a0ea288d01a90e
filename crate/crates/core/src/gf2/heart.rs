use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::bitmatrix::BitMatrix;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::exact::is_prime_u64;
use crate::galois::GaloisGroupId;

/// Largest heart dimension [`analyze`] will spin exhaustively.
pub const MAX_ANALYZE_DIM: usize = 24;

/// A named transitive group: one of the identified Galois groups, or the
/// cyclic group of any odd prime degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupTag {
    Galois(GaloisGroupId),
    Cyclic(usize),
}

impl FromStr for GroupTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Ok(id) = s.parse::<GaloisGroupId>() {
            return Ok(GroupTag::Galois(id));
        }
        s.strip_prefix(['C', 'c'])
            .and_then(|d| d.parse::<usize>().ok())
            .map(GroupTag::Cyclic)
            .ok_or_else(|| Error::invalid(format!("unknown group tag {s:?}")))
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Galois(id) => write!(f, "{id}"),
            GroupTag::Cyclic(n) => write!(f, "C{n}"),
        }
    }
}

fn n_cycle(n: usize) -> Permutation {
    let cycle: Vec<usize> = (1..=n).collect();
    Permutation::from_cycles(n, &[&cycle]).expect("valid cycle")
}

/// Generators of a concrete copy of the group `tag` acting on `{1..n}`.
pub fn standard_generators(tag: GroupTag, n: usize) -> Result<Vec<Permutation>> {
    use GaloisGroupId::*;
    let incompatible = || Err(Error::invalid(format!("no group {tag} of degree {n} here")));
    let cyc = |cycles: &[&[usize]]| Permutation::from_cycles(n, cycles);
    match tag {
        GroupTag::Cyclic(m) => {
            if m != n || n < 3 || !is_prime_u64(n as u64) {
                return incompatible();
            }
            Ok(vec![n_cycle(n)])
        }
        GroupTag::Galois(id) => {
            if id.degree() != Some(n) {
                return incompatible();
            }
            Ok(match id {
                C3 | C5 => vec![n_cycle(n)],
                S3 | S5 => vec![cyc(&[&[1, 2]])?, n_cycle(n)],
                A5 => vec![cyc(&[&[1, 2, 3]])?, n_cycle(5)],
                D5 => vec![n_cycle(5), cyc(&[&[2, 5], &[3, 4]])?],
                F20 => vec![n_cycle(5), cyc(&[&[2, 3, 5, 4]])?],
                Reducible => return incompatible(),
            })
        }
    }
}

/// The sum-zero part of the permutation module `F₂ⁿ` for odd `n`, in the
/// basis `vᵢ = eᵢ + eₙ`, `i = 1..n−1`. Vectors are bit masks, bit `i−1`
/// standing for `vᵢ`.
#[derive(Clone, Debug)]
pub struct HeartModule {
    n: usize,
    generators: Vec<BitMatrix>,
    // column masks of each generator, for fast action
    columns: Vec<Vec<u64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleReport {
    pub simple: bool,
    pub endomorphism_dim: usize,
    pub absolutely_simple: bool,
}

/// Coordinates of `σ(vᵢ)` for 0-based `i < n−1`.
fn image_of_basis_vector(sigma: &Permutation, i: usize) -> u64 {
    let last = sigma.degree() - 1;
    let (a, b) = (sigma.apply(i), sigma.apply(last));
    // eₐ + e_b with one of them possibly e_last, which is zero in coordinates
    let bit = |k: usize| if k == last { 0 } else { 1u64 << k };
    bit(a) ^ bit(b)
}

pub fn heart_module(n: usize, gens: &[Permutation]) -> Result<HeartModule> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::invalid(format!("the heart needs an odd degree n ≥ 3, got {n}")));
    }
    if n > 65 {
        return Err(Error::capability(format!("heart dimension {} exceeds 64", n - 1)));
    }
    if gens.is_empty() {
        return Err(Error::invalid("at least one generator is needed"));
    }
    if let Some(g) = gens.iter().find(|g| g.degree() != n) {
        return Err(Error::invalid(format!("{g} does not act on 1..{n}")));
    }
    let dim = n - 1;
    let columns: Vec<Vec<u64>> = gens
        .iter()
        .map(|g| (0..dim).map(|i| image_of_basis_vector(g, i)).collect())
        .collect();
    let generators = columns
        .iter()
        .map(|cols| BitMatrix::from_column_masks(dim, cols))
        .collect();
    Ok(HeartModule { n, generators, columns })
}

/// Echelon basis keyed by leading bit.
struct Echelon {
    pivots: Vec<u64>,
    len: usize,
}

impl Echelon {
    fn new(dim: usize) -> Self {
        Echelon { pivots: vec![0; dim], len: 0 }
    }

    fn reduce(&self, mut w: u64) -> u64 {
        while w != 0 {
            let top = 63 - w.leading_zeros() as usize;
            if self.pivots[top] == 0 {
                break;
            }
            w ^= self.pivots[top];
        }
        w
    }

    /// Adds `w` if independent; reports whether it was.
    fn insert(&mut self, w: u64) -> bool {
        let r = self.reduce(w);
        if r == 0 {
            return false;
        }
        self.pivots[63 - r.leading_zeros() as usize] = r;
        self.len += 1;
        true
    }

    fn basis(&self) -> Vec<u64> {
        self.pivots.iter().rev().copied().filter(|&b| b != 0).collect()
    }
}

impl HeartModule {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n - 1
    }

    pub fn generators(&self) -> &[BitMatrix] {
        &self.generators
    }

    fn act(&self, g: usize, v: u64) -> u64 {
        let cols = &self.columns[g];
        let mut out = 0;
        let mut rest = v;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            out ^= cols[i];
            rest &= rest - 1;
        }
        out
    }

    fn spin_echelon(&self, v: u64) -> Echelon {
        let dim = self.dim();
        let mut ech = Echelon::new(dim);
        ech.insert(v);
        let mut work = vec![v];
        while let Some(w) = work.pop() {
            if ech.len == dim {
                break;
            }
            for g in 0..self.columns.len() {
                let u = self.act(g, w);
                if ech.insert(u) {
                    work.push(u);
                }
            }
        }
        ech
    }

    /// Basis (as rows) of the smallest invariant subspace containing `v`.
    pub fn spin(&self, v: u64) -> Result<BitMatrix> {
        let dim = self.dim();
        if v == 0 {
            return Err(Error::invalid("cannot spin the zero vector"));
        }
        if dim < 64 && v >> dim != 0 {
            return Err(Error::invalid(format!("vector {v:#b} is wider than {dim} bits")));
        }
        Ok(BitMatrix::from_row_masks(dim, &self.spin_echelon(v).basis()))
    }

    /// Whether the span of `basis` is mapped into itself by every generator.
    pub fn is_invariant(&self, basis: &[u64]) -> bool {
        let mut ech = Echelon::new(self.dim());
        for &b in basis {
            ech.insert(b);
        }
        basis
            .iter()
            .all(|&b| (0..self.columns.len()).all(|g| ech.reduce(self.act(g, b)) == 0))
    }

    /// Simplicity by spinning every nonzero vector, and the dimension of the
    /// commutant `{X : X·A = A·X for every generator A}`.
    pub fn analyze(&self) -> Result<ModuleReport> {
        let dim = self.dim();
        if dim > MAX_ANALYZE_DIM {
            return Err(Error::capability(format!(
                "exhaustive spinning is limited to dimension {MAX_ANALYZE_DIM}, got {dim}"
            )));
        }
        let simple = (1u64..1 << dim)
            .into_par_iter()
            .all(|v| self.spin_echelon(v).len == dim);
        let endomorphism_dim = self.commutant_dim();
        Ok(ModuleReport {
            simple,
            endomorphism_dim,
            absolutely_simple: simple && endomorphism_dim == 1,
        })
    }

    fn commutant_dim(&self) -> usize {
        let d = self.dim();
        let var = |i: usize, k: usize| i * d + k;
        let mut system = BitMatrix::zeros(self.generators.len() * d * d, d * d);
        for (gi, a) in self.generators.iter().enumerate() {
            for i in 0..d {
                for j in 0..d {
                    // (XA − AX)_{ij} = Σ_k X_{ik} A_{kj} − A_{ik} X_{kj}
                    let row = (gi * d + i) * d + j;
                    for k in 0..d {
                        if a.get(k, j) {
                            system.flip(row, var(i, k));
                        }
                        if a.get(i, k) {
                            system.flip(row, var(k, j));
                        }
                    }
                }
            }
        }
        system.nullity()
    }
}
