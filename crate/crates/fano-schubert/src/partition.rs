//! Partition combinatorics: Young diagrams, Frobenius coordinates,
//! Littlewood-Richardson expansions, and the Weyl dimension formula.
//!
//! Everything downstream (Schubert classes, plethysm, Bott cohomology)
//! reduces to the operations in this module. All arithmetic is exact;
//! multiplicities that would overflow `u64` panic rather than wrap.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition: a weakly decreasing sequence of positive integers.
/// Trailing zeros are stripped on construction, so two partitions are
/// equal iff their zero-stripped part lists are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, rejecting sequences that are not weakly decreasing.
    pub fn new<I: Into<Vec<u32>>>(parts: I) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Single-row partition (p), or the empty partition when p = 0.
    pub fn row(p: u32) -> Self {
        if p == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![p] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-indexed), with zeros beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// True when the diagram has at most `rows` rows and `width` columns.
    pub fn fits_in(&self, rows: u32, width: u32) -> bool {
        self.len() as u32 <= rows && self.part(0) <= width
    }

    /// True when `self` contains `other` as a diagram.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Transposed Young diagram; an involution.
    pub fn conjugate(&self) -> Partition {
        let mut cols = Vec::new();
        if let Some(&first) = self.parts.first() {
            cols.reserve(first as usize);
            for c in 1..=first {
                let height = self.parts.iter().take_while(|&&p| p >= c).count() as u32;
                cols.push(height);
            }
        }
        Partition { parts: cols }
    }

    /// Frobenius coordinates: arms a_i = λ_i − i and legs l_i = λ'_i − i
    /// (1-indexed i up to the Durfee rank).
    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let mut arms = Vec::new();
        let mut legs = Vec::new();
        for i in 0.. {
            let row = self.part(i);
            if row as usize <= i {
                break;
            }
            arms.push(row - i as u32 - 1);
            legs.push(conj.part(i) - i as u32 - 1);
        }
        FrobeniusCoords { arms, legs }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

// Partitions serialize as plain JSON arrays, e.g. [3,2,1]; the empty
// partition is [].
impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// Frobenius coordinates of a partition: for each diagonal cell, the arm
/// length a_i = λ_i − i and leg length l_i = λ'_i − i. Both sequences are
/// strictly decreasing and have the same length (the Durfee rank).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusCoords {
    arms: Vec<u32>,
    legs: Vec<u32>,
}

impl FrobeniusCoords {
    pub fn new(arms: Vec<u32>, legs: Vec<u32>) -> Result<Self> {
        let strict = |v: &[u32]| v.windows(2).all(|w| w[0] > w[1]);
        if arms.len() != legs.len() || !strict(&arms) || !strict(&legs) {
            return Err(Error::InvalidFrobenius { arms, legs });
        }
        Ok(FrobeniusCoords { arms, legs })
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn arms(&self) -> &[u32] {
        &self.arms
    }

    pub fn legs(&self) -> &[u32] {
        &self.legs
    }

    /// Rebuilds the unique partition with these coordinates.
    pub fn to_partition(&self) -> Partition {
        let rank = self.rank();
        let rows = self
            .legs
            .first()
            .map(|&l| l as usize + 1)
            .unwrap_or(0)
            .max(rank);
        let mut parts = vec![0u32; rows];
        for (i, (slot, &arm)) in parts.iter_mut().zip(&self.arms).enumerate() {
            *slot = arm + i as u32 + 1;
        }
        // Column lengths below the diagonal.
        for i in 0..rank {
            let col_height = self.legs[i] as usize + i + 1;
            for row in parts.iter_mut().take(col_height).skip(rank) {
                *row = (*row).max(i as u32 + 1);
            }
        }
        Partition::new(parts).expect("frobenius reconstruction is monotone")
    }
}

/// A Littlewood-Richardson expansion: the multiset of partitions ν with
/// multiplicities c^ν_{λμ} appearing in Γ^λ ⊗ Γ^μ (equivalently σ_λ·σ_μ).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LrExpansion {
    terms: BTreeMap<Partition, u64>,
}

impl LrExpansion {
    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    pub fn coefficient(&self, nu: &Partition) -> u64 {
        self.terms.get(nu).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted lexicographically descending by partition.
    pub fn sorted_desc(&self) -> Vec<(&Partition, u64)> {
        self.terms.iter().rev().map(|(p, &c)| (p, c)).collect()
    }
}

impl FromIterator<(Partition, u64)> for LrExpansion {
    fn from_iter<T: IntoIterator<Item = (Partition, u64)>>(iter: T) -> Self {
        let mut terms = BTreeMap::new();
        for (p, c) in iter {
            if c > 0 {
                *terms.entry(p).or_insert(0) += c;
            }
        }
        LrExpansion { terms }
    }
}

/// Full Littlewood-Richardson expansion of σ_λ·σ_μ, no box truncation.
///
/// Counts the sequences λ = ν⁰ ⊆ ν¹ ⊆ … ⊆ ν^ℓ where ν^i/ν^{i−1} is a
/// horizontal strip of size μ_i and the label counts satisfy the lattice
/// condition: #(i+1)'s in rows 1..j  ≤  #i's in rows 1..j−1 for every j.
/// Each surviving sequence is one LR tableau of shape ν^ℓ/λ and content μ,
/// so the multiplicity of ν in the output is exactly c^ν_{λμ}.
pub fn lr_coefficients(lambda: &Partition, mu: &Partition) -> LrExpansion {
    let rows_bound = lambda.len() + mu.len();
    let mut state = StripSearch {
        mu,
        rows_bound,
        shape: (0..rows_bound).map(|i| lambda.part(i)).collect(),
        out: BTreeMap::new(),
    };
    state.place_label(0, None);
    LrExpansion { terms: state.out }
}

struct StripSearch<'a> {
    mu: &'a Partition,
    rows_bound: usize,
    shape: Vec<u32>,
    out: BTreeMap<Partition, u64>,
}

impl StripSearch<'_> {
    /// Places the horizontal strip of cells carrying `label`, then recurses.
    /// `prev_cum[j]` is the cumulative count of the previous label over rows
    /// 0..=j; `None` for the first label, which the lattice rule leaves free.
    fn place_label(&mut self, label: usize, prev_cum: Option<&[u64]>) {
        if label == self.mu.len() {
            let nu = Partition::new(self.shape.clone()).expect("strips keep the shape monotone");
            *self.out.entry(nu).or_insert(0) += 1;
            return;
        }
        let strip = self.mu.part(label);
        let mut added = vec![0u32; self.rows_bound];
        self.place_cells(label, 0, strip, prev_cum, 0, &mut added);
    }

    fn place_cells(
        &mut self,
        label: usize,
        row: usize,
        remaining: u32,
        prev_cum: Option<&[u64]>,
        placed_above: u64,
        added: &mut Vec<u32>,
    ) {
        if remaining == 0 {
            let mut cum = Vec::with_capacity(self.rows_bound);
            let mut acc = 0u64;
            for &a in added.iter() {
                acc += a as u64;
                cum.push(acc);
            }
            self.place_label(label + 1, Some(&cum));
            return;
        }
        if row >= self.rows_bound {
            return;
        }
        let old_len = self.shape[row];
        // Horizontal strip: the new row must not pass the previous length of
        // the row above (its current length minus what this strip added).
        let cap = if row == 0 {
            u32::MAX
        } else {
            self.shape[row - 1] - added[row - 1]
        };
        // Lattice rule: cells of this label in rows 0..=row may not exceed
        // cells of the previous label in rows 0..row.
        let lattice_cap = match prev_cum {
            None => u64::MAX,
            Some(cum) => {
                let allowed = if row == 0 { 0 } else { cum[row - 1] };
                allowed.saturating_sub(placed_above)
            }
        };
        let max_here = (remaining as u64)
            .min(cap.saturating_sub(old_len) as u64)
            .min(lattice_cap) as u32;
        for add in 0..=max_here {
            self.shape[row] = old_len + add;
            added[row] = add;
            self.place_cells(
                label,
                row + 1,
                remaining - add,
                prev_cum,
                placed_above + add as u64,
                added,
            );
        }
        self.shape[row] = old_len;
        added[row] = 0;
    }
}

/// Dimension of the Schur functor Γ^λ applied to an r-dimensional space:
/// ∏_{1≤i<j≤r} (λ_i − λ_j + j − i)/(j − i), with λ padded by zeros.
/// Returns 0 when λ has more than r nonzero parts.
pub fn weyl_dim(lambda: &Partition, r: u32) -> u64 {
    if lambda.len() as u32 > r {
        return 0;
    }
    let r = r as usize;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..r {
        for j in (i + 1)..r {
            let li = lambda.part(i) as i64;
            let lj = lambda.part(j) as i64;
            num *= BigInt::from(li - lj + (j as i64 - i as i64));
            den *= BigInt::from(j as i64 - i as i64);
        }
    }
    let q = &num / &den;
    debug_assert!(
        (&q * &den - &num).is_zero(),
        "weyl dimension must divide exactly"
    );
    q.to_u64().expect("schur functor dimension fits in u64")
}
