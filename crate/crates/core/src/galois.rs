//! Galois groups of squarefree cubics and quintics over ℚ.
//!
//! Cubics are settled by irreducibility and the discriminant. Quintics use
//! how `f` splits over its own stem field `K = ℚ(θ)`: the five transitive
//! groups of degree 5 give the patterns `1,1,1,1,1` (C5), `1,2,2` (D5) and
//! `1,4` (F20, A5, S5). The square discriminant picks out A5, and the
//! resolvent cubic of the quartic cofactor separates F20 from S5: the point
//! stabilizer of F20 is cyclic of order 4, which fixes a root of that cubic.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::integer::odd_primes;
use crate::exact::{discriminant, is_square, Polynomial};
use crate::factor::{degree_pattern_mod_p, factor_over_q, is_squarefree};
use crate::number_field::{trager_factor, NumberField, PolyOverK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GaloisGroupId {
    C3,
    S3,
    C5,
    D5,
    F20,
    A5,
    S5,
    Reducible,
}

impl GaloisGroupId {
    pub const ALL: [GaloisGroupId; 8] = [
        Self::C3,
        Self::S3,
        Self::C5,
        Self::D5,
        Self::F20,
        Self::A5,
        Self::S5,
        Self::Reducible,
    ];

    /// Degree of the permutation representation; `None` for `Reducible`.
    pub fn degree(self) -> Option<usize> {
        match self {
            Self::C3 | Self::S3 => Some(3),
            Self::Reducible => None,
            _ => Some(5),
        }
    }

    /// Whether the group lies in the alternating group.
    pub fn is_even(self) -> bool {
        matches!(self, Self::C3 | Self::C5 | Self::D5 | Self::A5)
    }
}

impl fmt::Display for GaloisGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for GaloisGroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|g| g.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid(format!("unknown group tag {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GroupProperties {
    pub order: u64,
    pub doubly_transitive: bool,
    pub cyclic_of_order_n: bool,
    pub has_cn_quotient: bool,
}

pub fn group_properties(id: GaloisGroupId) -> Result<GroupProperties> {
    let row = |order, doubly_transitive, cyclic_of_order_n, has_cn_quotient| GroupProperties {
        order,
        doubly_transitive,
        cyclic_of_order_n,
        has_cn_quotient,
    };
    Ok(match id {
        GaloisGroupId::C3 => row(3, false, true, true),
        GaloisGroupId::S3 => row(6, true, false, false),
        GaloisGroupId::C5 => row(5, false, true, true),
        GaloisGroupId::D5 => row(10, false, false, false),
        GaloisGroupId::F20 => row(20, true, false, false),
        GaloisGroupId::A5 => row(60, true, false, false),
        GaloisGroupId::S5 => row(120, true, false, false),
        GaloisGroupId::Reducible => {
            return Err(Error::invalid("a reducible polynomial has no transitive group"))
        }
    })
}

/// Cycle types occurring in the group, each sorted in decreasing order.
pub fn cycle_types(id: GaloisGroupId) -> Result<BTreeSet<Vec<usize>>> {
    let types: &[&[usize]] = match id {
        GaloisGroupId::C3 => &[&[1, 1, 1], &[3]],
        GaloisGroupId::S3 => &[&[1, 1, 1], &[2, 1], &[3]],
        GaloisGroupId::C5 => &[&[1, 1, 1, 1, 1], &[5]],
        GaloisGroupId::D5 => &[&[1, 1, 1, 1, 1], &[2, 2, 1], &[5]],
        GaloisGroupId::F20 => &[&[1, 1, 1, 1, 1], &[2, 2, 1], &[4, 1], &[5]],
        GaloisGroupId::A5 => &[&[1, 1, 1, 1, 1], &[2, 2, 1], &[3, 1, 1], &[5]],
        GaloisGroupId::S5 => &[
            &[1, 1, 1, 1, 1],
            &[2, 1, 1, 1],
            &[2, 2, 1],
            &[3, 1, 1],
            &[3, 2],
            &[4, 1],
            &[5],
        ],
        GaloisGroupId::Reducible => {
            return Err(Error::invalid("a reducible polynomial has no transitive group"))
        }
    };
    Ok(types.iter().map(|t| t.to_vec()).collect())
}

fn check_input(f: &Polynomial, n: usize) -> Result<()> {
    if f.degree() != Some(n) {
        return Err(Error::invalid(format!("expected a polynomial of degree {n}, got {f}")));
    }
    if !is_squarefree(f) {
        return Err(Error::invalid(format!("{f} has repeated roots")));
    }
    Ok(())
}

pub fn galois_cubic(f: &Polynomial) -> Result<GaloisGroupId> {
    check_input(f, 3)?;
    if !factor_over_q(f)?.is_irreducible() {
        return Ok(GaloisGroupId::Reducible);
    }
    Ok(if is_square(&discriminant(f)?) {
        GaloisGroupId::C3
    } else {
        GaloisGroupId::S3
    })
}

/// `y³ − c₂y² + (c₁c₃ − 4c₀)y − (c₁² + c₀c₃² − 4c₀c₂)` for a monic quartic
/// `x⁴ + c₃x³ + c₂x² + c₁x + c₀` over K.
pub fn resolvent_cubic(g: &PolyOverK) -> Result<PolyOverK> {
    if g.degree() != Some(4) {
        return Err(Error::invalid("the resolvent cubic needs a quartic"));
    }
    let g = g.monic();
    let k = g.field();
    let c: Vec<_> = (0..4).map(|i| g.coeff(i)).collect();
    let four = k.from_int(4);
    let e1 = -&c[2];
    let e2 = &(&c[1] * &c[3]) - &(&four * &c[0]);
    let e3 = -&(&(&(&c[1] * &c[1]) + &(&c[0] * &(&c[3] * &c[3]))) - &(&four * &(&c[0] * &c[2])));
    Ok(PolyOverK::new(k, vec![e3, e2, e1, k.one()]))
}

pub fn galois_quintic(f: &Polynomial) -> Result<GaloisGroupId> {
    check_input(f, 5)?;
    if !factor_over_q(f)?.is_irreducible() {
        return Ok(GaloisGroupId::Reducible);
    }
    let k = NumberField::new(f)?;
    let factors = trager_factor(&PolyOverK::from_rational_poly(&k, f))?;
    let mut pattern: Vec<usize> = factors.iter().map(|(g, _)| g.degree().unwrap()).collect();
    pattern.sort_unstable();
    let square = is_square(&discriminant(f)?);
    let inconsistent = |why: &str| {
        Err(Error::Inconsistency(format!(
            "{f}: stem pattern {pattern:?} with square discriminant {square}: {why}"
        )))
    };
    match pattern.as_slice() {
        [1, 1, 1, 1, 1] if square => Ok(GaloisGroupId::C5),
        [1, 2, 2] if square => Ok(GaloisGroupId::D5),
        [1, 4] if square => Ok(GaloisGroupId::A5),
        [1, 4] => {
            let quartic = &factors.iter().find(|(g, _)| g.degree() == Some(4)).unwrap().0;
            let cubic = resolvent_cubic(quartic)?;
            let has_root = trager_factor(&cubic)?.iter().any(|(g, _)| g.degree() == Some(1));
            Ok(if has_root { GaloisGroupId::F20 } else { GaloisGroupId::S5 })
        }
        [1, 1, 1, 1, 1] | [1, 2, 2] => inconsistent("group should be even"),
        _ => inconsistent("no transitive group of degree 5 splits this way"),
    }
}

/// Galois group of a squarefree cubic or quintic; other degrees are a
/// capability error.
pub fn galois_group(f: &Polynomial) -> Result<GaloisGroupId> {
    match f.degree() {
        Some(3) => galois_cubic(f),
        Some(5) => galois_quintic(f),
        Some(d) => Err(Error::capability(format!(
            "Galois identification covers degrees 3 and 5, not {d}"
        ))),
        None => Err(Error::invalid("the zero polynomial has no Galois group")),
    }
}

/// Factorization patterns of `f mod p` over odd primes `p ≤ prime_bound` not
/// dividing `lc(f)·disc(f)`. Advisory only.
pub fn cycle_type_prefilter(f: &Polynomial, prime_bound: u64) -> Result<BTreeSet<Vec<usize>>> {
    let disc = discriminant(f)?;
    let (_, prim) = f.primitive_part();
    let bad = prim.leading_coeff() * disc.numer() * disc.denom();
    let mut out = BTreeSet::new();
    for p in odd_primes().take_while(|&p| p <= prime_bound) {
        if (&bad % p).is_zero() {
            continue;
        }
        if let Some(pattern) = degree_pattern_mod_p(&prim, p) {
            out.insert(pattern);
        }
    }
    Ok(out)
}
