//! Cohomology of the homogeneous bundles Γ^a S on Gr(k,n) by the
//! Borel-Weil-Bott algorithm.
//!
//! For a weight a = (a₁,…,a_k) form the integer sequence
//!
//! ```text
//! s = (−1, −2, …, −(n−k),  a₁−(n−k)−1, …, a_k−(n−k)−k)
//! ```
//!
//! A repeated entry means the shifted weight is singular and every
//! cohomology group vanishes. Otherwise exactly one group is nonzero: its
//! degree j is the number of inversions needed to sort s strictly
//! decreasing, and sorting to t and setting μ_i = t_i + i gives the
//! dominant weight of the ambient GL(n)-representation H^j ≅ Γ^μ V.
//! Uniform shifts of μ change only the determinant twist, not the
//! dimension, so the dimension is the convention-independent output.

use serde::Serialize;

use crate::chow::Grassmannian;
use crate::error::{Error, Result};
use crate::partition::{weyl_dim, Partition};

/// Result of the Bott algorithm for one weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BottCohomology {
    /// Singular shifted weight: all cohomology vanishes.
    Zero,
    NonZero(BottGroup),
}

/// The unique nonvanishing cohomology group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BottGroup {
    /// Cohomological degree j ≤ k(n−k).
    pub degree: u32,
    /// Dominant weight μ of the ambient GL(n)-representation.
    pub weight: Partition,
    /// det-power part of μ: its smallest (n-th) entry.
    pub twist: u32,
    /// Exact dimension, Weyl dimension of μ over GL(n).
    pub dimension: u64,
}

impl BottGroup {
    /// μ with the uniform determinant twist removed.
    pub fn normalized_weight(&self) -> Partition {
        let parts: Vec<u32> = self
            .weight
            .parts()
            .iter()
            .map(|&p| p - self.twist)
            .collect();
        Partition::new(parts).expect("subtracting a uniform twist keeps monotonicity")
    }
}

impl BottCohomology {
    pub fn is_zero(&self) -> bool {
        matches!(self, BottCohomology::Zero)
    }

    pub fn group(&self) -> Option<&BottGroup> {
        match self {
            BottCohomology::Zero => None,
            BottCohomology::NonZero(g) => Some(g),
        }
    }
}

/// Runs the Bott algorithm for Γ^a S on Gr(k,n).
pub fn bott_cohomology(a: &Partition, gr: Grassmannian) -> Result<BottCohomology> {
    let k = gr.k();
    let w = gr.width() as i64;
    if a.len() as u32 > k {
        return Err(Error::TooManyParts { parts: a.len(), k });
    }
    let mut s: Vec<i64> = (1..=w).map(|i| -i).collect();
    for i in 0..k as usize {
        s.push(a.part(i) as i64 - w - (i as i64 + 1));
    }
    // Repeated entries are singular weights.
    let mut sorted = s.clone();
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return Ok(BottCohomology::Zero);
    }
    // Inversions relative to strictly decreasing order.
    let mut inversions = 0u32;
    for i in 0..s.len() {
        for j in (i + 1)..s.len() {
            if s[i] < s[j] {
                inversions += 1;
            }
        }
    }
    debug_assert!(inversions as u64 <= gr.dim());
    let mu: Vec<i64> = sorted
        .iter()
        .enumerate()
        .map(|(i, &t)| t + i as i64 + 1)
        .collect();
    debug_assert!(mu.iter().all(|&m| m >= 0), "dominant weight is effective");
    let weight = Partition::new(mu.iter().map(|&m| m as u32).collect::<Vec<_>>())
        .expect("sorted strictly decreasing entries give a partition");
    let twist = weight.part(gr.n() as usize - 1);
    let dimension = weyl_dim(&weight, gr.n());
    Ok(BottCohomology::NonZero(BottGroup {
        degree: inversions,
        weight,
        twist,
        dimension,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn gr310() -> Grassmannian {
        Grassmannian::new(3, 10).unwrap()
    }

    fn group(a: &[u32]) -> BottGroup {
        match bott_cohomology(&p(a), gr310()).unwrap() {
            BottCohomology::NonZero(g) => g,
            BottCohomology::Zero => panic!("expected nonzero cohomology for {a:?}"),
        }
    }

    #[test]
    fn structure_sheaf() {
        let g = group(&[]);
        assert_eq!(g.degree, 0);
        assert_eq!(g.weight, Partition::empty());
        assert_eq!(g.dimension, 1);
        assert_eq!(g.twist, 0);
    }

    #[test]
    fn determinant_in_degree_seven() {
        let g = group(&[8, 1, 1]);
        assert_eq!(g.degree, 7);
        assert_eq!(g.weight, p(&[1; 10]));
        assert_eq!(g.dimension, 1);
        assert_eq!(g.twist, 1);
        assert_eq!(g.normalized_weight(), Partition::empty());
    }

    #[test]
    fn singular_weight_vanishes() {
        assert!(bott_cohomology(&p(&[2]), gr310()).unwrap().is_zero());
    }

    #[test]
    fn degree_fourteen_and_twentyone() {
        let g = group(&[10, 10, 2]);
        assert_eq!(g.degree, 14);
        assert_eq!(g.weight, p(&[3, 3, 2, 2, 2, 2, 2, 2, 2, 2]));
        assert_eq!(g.dimension, 45);

        let g = group(&[12, 12, 12]);
        assert_eq!(g.degree, 21);
        assert_eq!(g.weight, p(&[5, 5, 5, 3, 3, 3, 3, 3, 3, 3]));
        assert_eq!(g.dimension, 4950);
        assert_eq!(g.twist, 3);
        assert_eq!(g.normalized_weight(), p(&[2, 2, 2]));
    }

    #[test]
    fn nine_part_weight_has_dimension_55() {
        // Γ^(10,9,1) S contributes (4,2,…,2,1)-type weights; the computed
        // ten-part weight (3,2,2,2,2,2,2,2,2,1) has dimension 99, and
        // Γ^(11,9,2) S yields (4,2,2,2,2,2,2,2,2,2) of dimension 55.
        let g = group(&[11, 9, 2]);
        assert_eq!(g.degree, 14);
        assert_eq!(g.weight, p(&[4, 2, 2, 2, 2, 2, 2, 2, 2, 2]));
        assert_eq!(g.dimension, 55);
        let g = group(&[10, 9, 1]);
        assert_eq!(g.weight, p(&[3, 2, 2, 2, 2, 2, 2, 2, 2, 1]));
        assert_eq!(g.dimension, 99);
    }

    #[test]
    fn too_many_parts_rejected() {
        let err = bott_cohomology(&p(&[2, 1, 1, 1]), gr310()).unwrap_err();
        assert!(matches!(err, Error::TooManyParts { parts: 4, k: 3 }));
    }

    #[test]
    fn degree_bounded_by_dimension() {
        for a1 in 0..=12u32 {
            for a2 in 0..=a1 {
                for a3 in 0..=a2 {
                    if let BottCohomology::NonZero(g) =
                        bott_cohomology(&p(&[a1, a2, a3]), gr310()).unwrap()
                    {
                        assert!(g.degree as u64 <= gr310().dim());
                    }
                }
            }
        }
    }
}
