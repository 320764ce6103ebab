//! Plethysm of exterior powers: Λ^k(Sym² S) decomposed into Schur
//! functors, and wedge powers of the rank-18 bundle (Sym² S)^⊕3 on a
//! rank-3 space, with the determinant-twist duality for the upper half.
//!
//! The closed form for Λ^k(Sym²) uses Frobenius coordinates: the summands
//! are exactly the partitions of 2k whose arm lengths exceed their leg
//! lengths by one at every diagonal cell, each with multiplicity one.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::{lr_coefficients, weyl_dim, FrobeniusCoords, Partition};

/// A nonnegative integer combination of Schur functors of a fixed-rank
/// space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurDecomposition {
    rank: u32,
    terms: BTreeMap<Partition, u64>,
}

impl SchurDecomposition {
    pub fn new(rank: u32) -> Self {
        SchurDecomposition {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(rank: u32) -> Self {
        let mut d = Self::new(rank);
        d.add(Partition::empty(), 1);
        d
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Adds a summand, dropping functors that vanish on a rank-`rank`
    /// space.
    pub fn add(&mut self, lambda: Partition, mult: u64) {
        if mult == 0 || lambda.len() as u32 > self.rank {
            return;
        }
        let entry = self.terms.entry(lambda).or_insert(0);
        *entry = entry.checked_add(mult).expect("multiplicity overflow");
    }

    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    /// Terms sorted lexicographically descending by partition.
    pub fn sorted_desc(&self) -> Vec<(&Partition, u64)> {
        self.terms.iter().rev().map(|(p, &m)| (p, m)).collect()
    }

    /// Total dimension Σ mult · dim Γ^λ over the base rank.
    pub fn dimension(&self) -> u64 {
        self.terms
            .iter()
            .map(|(lam, &m)| {
                m.checked_mul(weyl_dim(lam, self.rank))
                    .expect("dimension overflow")
            })
            .sum()
    }
}

impl FromIterator<(Partition, u64)> for SchurDecomposition {
    /// Collects with rank 3, the only base rank used by the wedge tables.
    fn from_iter<T: IntoIterator<Item = (Partition, u64)>>(iter: T) -> Self {
        let mut d = SchurDecomposition::new(3);
        for (p, m) in iter {
            d.add(p, m);
        }
        d
    }
}

/// Λ^k(Sym² of a rank-`rank` space) as a sum of Schur functors: the
/// partitions of 2k with Frobenius arms = legs + 1 componentwise, filtered
/// to at most `rank` rows.
pub fn wedge_sym2(k: u32, rank: u32) -> Result<SchurDecomposition> {
    let max = rank * (rank + 1) / 2;
    if k > max {
        return Err(Error::WedgeOutOfRange { index: k, max });
    }
    let mut out = SchurDecomposition::new(rank);
    if k == 0 {
        out.add(Partition::empty(), 1);
        return Ok(out);
    }
    // Enumerate strictly decreasing leg sequences l_1 > ... > l_d >= 0 with
    // Σ(2l_i + 2) = 2k, i.e. Σ(l_i + 1) = k; arms are legs + 1.
    let mut legs = Vec::new();
    enumerate_legs(k, u32::MAX, &mut legs, &mut |legs| {
        let arms: Vec<u32> = legs.iter().map(|&l| l + 1).collect();
        let coords = FrobeniusCoords::new(arms, legs.to_vec())
            .expect("legs are strictly decreasing by construction");
        out.add(coords.to_partition(), 1);
    });
    Ok(out)
}

fn enumerate_legs(remaining: u32, bound: u32, acc: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if remaining == 0 {
        f(acc);
        return;
    }
    // Next leg l contributes l + 1 cells of the half-weight k.
    let top = remaining.min(bound);
    for next in (1..=top).rev() {
        let l = next - 1;
        acc.push(l);
        enumerate_legs(remaining - next, l.min(next - 1), acc, f);
        acc.pop();
    }
}

/// Tensor product of two decompositions over the same base rank: bilinear
/// Littlewood-Richardson expansion with rows beyond the rank dropped.
pub fn tensor_schur(a: &SchurDecomposition, b: &SchurDecomposition) -> Result<SchurDecomposition> {
    if a.rank != b.rank {
        return Err(Error::RankMismatch(a.rank, b.rank));
    }
    let mut out = SchurDecomposition::new(a.rank);
    for (lam, &ma) in a.terms() {
        for (mu, &mb) in b.terms() {
            let m = ma.checked_mul(mb).expect("multiplicity overflow");
            for (nu, lr) in lr_coefficients(lam, mu).terms() {
                out.add(
                    nu.clone(),
                    m.checked_mul(*lr).expect("multiplicity overflow"),
                );
            }
        }
    }
    Ok(out)
}

/// Highest weight of the determinant of (Sym² S)^⊕3 on a rank-3 space:
/// three factors each contributing det Sym² S = (det S)^4.
const DET_TWIST: u32 = 12;

/// Λ^r of the rank-18 bundle (Sym² S)^⊕3, S of rank three: direct sum over
/// compositions (e₁,e₂,e₃) of r with each eᵢ ≤ 6 of the tensor products of
/// the single-factor wedges. The upper half r > 9 is produced by the
/// determinant-twist duality and agrees with the direct sum (tested).
pub fn wedge_triple_sym2(r: u32) -> Result<SchurDecomposition> {
    if r > 18 {
        return Err(Error::WedgeOutOfRange { index: r, max: 18 });
    }
    if r > 9 {
        return det_twist_dual(&wedge_triple_sym2_direct(18 - r)?, r);
    }
    wedge_triple_sym2_direct(r)
}

/// The composition sum itself, valid for every 0 ≤ r ≤ 18.
pub fn wedge_triple_sym2_direct(r: u32) -> Result<SchurDecomposition> {
    if r > 18 {
        return Err(Error::WedgeOutOfRange { index: r, max: 18 });
    }
    let mut out = SchurDecomposition::new(3);
    // Compositions in lexicographic order.
    for e1 in 0..=r.min(6) {
        for e2 in 0..=(r - e1).min(6) {
            let e3 = r - e1 - e2;
            if e3 > 6 {
                continue;
            }
            let w1 = wedge_sym2(e1, 3)?;
            let w2 = wedge_sym2(e2, 3)?;
            let w3 = wedge_sym2(e3, 3)?;
            let prod = tensor_schur(&tensor_schur(&w1, &w2)?, &w3)?;
            for (lam, &m) in prod.terms() {
                out.add(lam.clone(), m);
            }
        }
    }
    Ok(out)
}

/// Duality Λ^r = det ⊗ (Λ^{18−r})*: maps each term (a₁,a₂,a₃) of
/// Λ^{18−r} to (12−a₃, 12−a₂, 12−a₁), preserving multiplicities.
pub fn det_twist_dual(d: &SchurDecomposition, r: u32) -> Result<SchurDecomposition> {
    let mut out = SchurDecomposition::new(d.rank);
    for (lam, &m) in d.terms() {
        if lam.part(0) > DET_TWIST {
            return Err(Error::InvalidArgument(format!(
                "part {} exceeds the determinant twist {DET_TWIST}",
                lam.part(0)
            )));
        }
        let parts: Vec<u32> = (0..3).rev().map(|i| DET_TWIST - lam.part(i)).collect();
        out.add(Partition::new(parts)?, m);
    }
    // The image must again be a wedge decomposition of the complementary
    // exterior power; weight bookkeeping catches mismatched r.
    for lam in out.terms.keys() {
        debug_assert_eq!(lam.weight(), 2 * r as u64);
    }
    Ok(out)
}
