//! The Chow ring of the Grassmannian Gr(k,n) in the Schubert basis.
//!
//! Classes are integer combinations of Schubert classes σ_λ with λ inside
//! the k×(n−k) box. Multiplication is the Littlewood-Richardson expansion
//! with out-of-box terms discarded, and integration reads off the
//! coefficient of the point class σ_(w,…,w).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{lr_coefficients, Partition};

/// The ambient Grassmannian Gr(k,n) of k-planes in an n-space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grassmannian {
    k: u32,
    n: u32,
}

impl Grassmannian {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidGrassmannian { k, n });
        }
        Ok(Grassmannian { k, n })
    }

    /// Rank of the tautological subbundle.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Dimension of the ambient space.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Width of the Schubert box, n − k.
    pub fn width(&self) -> u32 {
        self.n - self.k
    }

    /// Dimension k(n−k) of the variety.
    pub fn dim(&self) -> u64 {
        self.k as u64 * self.width() as u64
    }

    pub fn fits(&self, lambda: &Partition) -> bool {
        lambda.fits_in(self.k, self.width())
    }

    /// The full-box partition indexing the point class.
    pub fn point_partition(&self) -> Partition {
        Partition::new(vec![self.width(); self.k as usize]).expect("box partition is constant")
    }

    fn check(&self, lambda: &Partition) -> Result<()> {
        if self.fits(lambda) {
            Ok(())
        } else {
            Err(Error::BoxViolation {
                parts: lambda.parts().to_vec(),
                k: self.k,
                w: self.width(),
            })
        }
    }
}

impl fmt::Display for Grassmannian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.k, self.n)
    }
}

impl Serialize for Grassmannian {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.k, self.n].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Grassmannian {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [k, n] = <[u32; 2]>::deserialize(d)?;
        Grassmannian::new(k, n).map_err(serde::de::Error::custom)
    }
}

/// Poincaré-dual partner of λ in the box: (w−λ_k, …, w−λ_1).
pub fn complement(lambda: &Partition, gr: Grassmannian) -> Result<Partition> {
    gr.check(lambda)?;
    let w = gr.width();
    let parts: Vec<u32> = (0..gr.k as usize)
        .rev()
        .map(|i| w - lambda.part(i))
        .collect();
    Partition::new(parts)
}

/// An integer combination of Schubert classes on a fixed Grassmannian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowClass {
    gr: Grassmannian,
    terms: BTreeMap<Partition, i64>,
}

impl ChowClass {
    pub fn zero(gr: Grassmannian) -> Self {
        ChowClass {
            gr,
            terms: BTreeMap::new(),
        }
    }

    /// The unit class σ_().
    pub fn one(gr: Grassmannian) -> Self {
        ChowClass::schubert(gr, Partition::empty()).expect("empty partition fits any box")
    }

    /// A single Schubert class σ_λ.
    pub fn schubert(gr: Grassmannian, lambda: Partition) -> Result<Self> {
        gr.check(&lambda)?;
        let mut terms = BTreeMap::new();
        terms.insert(lambda, 1);
        Ok(ChowClass { gr, terms })
    }

    pub fn from_terms<I>(gr: Grassmannian, iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, i64)>,
    {
        let mut terms = BTreeMap::new();
        for (lambda, c) in iter {
            gr.check(&lambda)?;
            if c != 0 {
                let entry = terms.entry(lambda).or_insert(0i64);
                *entry = entry.checked_add(c).expect("coefficient overflow");
            }
        }
        terms.retain(|_, c| *c != 0);
        Ok(ChowClass { gr, terms })
    }

    pub fn grassmannian(&self) -> Grassmannian {
        self.gr
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    /// Terms sorted lexicographically descending by partition.
    pub fn sorted_desc(&self) -> Vec<(&Partition, i64)> {
        self.terms.iter().rev().map(|(p, &c)| (p, c)).collect()
    }

    pub fn coefficient(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Weight shared by all terms, if the class is pure (zero counts as pure
    /// of any degree and reports `None`).
    pub fn pure_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys().map(|p| p.weight());
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.same_context(other)?;
        ChowClass::from_terms(
            self.gr,
            self.terms()
                .chain(other.terms())
                .map(|(p, c)| (p.clone(), c)),
        )
    }

    pub fn scale(&self, factor: i64) -> ChowClass {
        ChowClass {
            gr: self.gr,
            terms: self
                .terms
                .iter()
                .filter(|(_, &c)| c != 0 && factor != 0)
                .map(|(p, &c)| {
                    (
                        p.clone(),
                        c.checked_mul(factor).expect("coefficient overflow"),
                    )
                })
                .collect(),
        }
    }

    /// Product in the Chow ring: bilinear LR expansion, terms outside the
    /// box discarded.
    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass> {
        self.same_context(other)?;
        let mut terms: BTreeMap<Partition, i64> = BTreeMap::new();
        for (lam, a) in self.terms() {
            for (mu, b) in other.terms() {
                let ab = a.checked_mul(b).expect("coefficient overflow");
                for (nu, lr) in lr_coefficients(lam, mu).terms() {
                    if !self.gr.fits(nu) {
                        continue;
                    }
                    let contrib = i64::try_from(*lr)
                        .ok()
                        .and_then(|lr| lr.checked_mul(ab))
                        .expect("coefficient overflow");
                    let entry = terms.entry(nu.clone()).or_insert(0);
                    *entry = entry.checked_add(contrib).expect("coefficient overflow");
                }
            }
        }
        terms.retain(|_, c| *c != 0);
        Ok(ChowClass { gr: self.gr, terms })
    }

    /// Coefficient of the point class σ_(w,…,w); zero if absent.
    pub fn integrate(&self) -> i64 {
        self.coefficient(&self.gr.point_partition())
    }

    fn same_context(&self, other: &ChowClass) -> Result<()> {
        if self.gr == other.gr {
            Ok(())
        } else {
            Err(Error::ContextMismatch(
                self.gr.k, self.gr.n, other.gr.k, other.gr.n,
            ))
        }
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.sorted_desc().into_iter().enumerate() {
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            if a != 1 || p.is_empty() {
                write!(f, "{a}")?;
                if !p.is_empty() {
                    write!(f, " ")?;
                }
            }
            if !p.is_empty() {
                write!(f, "s{p}")?;
            }
        }
        Ok(())
    }
}
