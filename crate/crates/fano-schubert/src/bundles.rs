//! Chern-class calculus for bundles built from the tautological sequence
//! on Gr(k,n): symmetric and exterior powers via the splitting principle,
//! tensor products and the tangent bundle via the multiplicativity of the
//! Chern character, Todd classes, and the class of the zero locus cutting
//! out the plane locus of an intersection of quadrics.
//!
//! All graded classes carry exact rational coefficients. Division of total
//! Chern classes is formal power-series inversion in the truncated ring,
//! never numerical.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::chow::{ChowClass, Grassmannian};
use crate::error::{Error, Result};
use crate::partition::{lr_coefficients, Partition};
use crate::symfun::{root_multisets, to_elementary_basis, MultiPoly};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A mixed-degree element of the rational Chow ring of a Grassmannian,
/// indexed by Schubert classes. The degree-d component is the set of terms
/// whose partition has weight d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedClass {
    gr: Grassmannian,
    terms: BTreeMap<Partition, BigRational>,
}

impl GradedClass {
    pub fn zero(gr: Grassmannian) -> Self {
        GradedClass {
            gr,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(gr: Grassmannian) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Partition::empty(), BigRational::one());
        GradedClass { gr, terms }
    }

    pub fn from_chow(class: &ChowClass) -> Self {
        let mut terms = BTreeMap::new();
        for (p, c) in class.terms() {
            terms.insert(p.clone(), rat(c));
        }
        GradedClass {
            gr: class.grassmannian(),
            terms,
        }
    }

    pub fn grassmannian(&self) -> Grassmannian {
        self.gr
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigRational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    fn insert(&mut self, p: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Occupied(mut o) => {
                let v = o.get() + &c;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
        }
    }

    /// Terms of weight exactly d.
    pub fn component(&self, d: u64) -> GradedClass {
        GradedClass {
            gr: self.gr,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.weight() == d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops all terms of weight above `max_degree`.
    pub fn truncate(&self, max_degree: u64) -> GradedClass {
        GradedClass {
            gr: self.gr,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.weight() <= max_degree)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &GradedClass) -> GradedClass {
        assert_eq!(
            self.gr, other.gr,
            "graded classes on different grassmannians"
        );
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.insert(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GradedClass) -> GradedClass {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, factor: &BigRational) -> GradedClass {
        if factor.is_zero() {
            return GradedClass::zero(self.gr);
        }
        GradedClass {
            gr: self.gr,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), c * factor))
                .collect(),
        }
    }

    pub fn scale_int(&self, factor: i64) -> GradedClass {
        self.scale(&rat(factor))
    }

    /// Product in the truncated Chow ring, keeping degrees ≤ `max_degree`.
    pub fn mul_to(&self, other: &GradedClass, max_degree: u64) -> GradedClass {
        assert_eq!(
            self.gr, other.gr,
            "graded classes on different grassmannians"
        );
        let mut out = GradedClass::zero(self.gr);
        for (lam, a) in &self.terms {
            for (mu, b) in &other.terms {
                if lam.weight() + mu.weight() > max_degree {
                    continue;
                }
                let ab = a * b;
                for (nu, lr) in lr_coefficients(lam, mu).terms() {
                    if !self.gr.fits(nu) {
                        continue;
                    }
                    out.insert(
                        nu.clone(),
                        &ab * rat(i64::try_from(*lr).expect("lr fits i64")),
                    );
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &GradedClass) -> GradedClass {
        self.mul_to(other, self.gr.dim())
    }

    /// Multiplicative inverse of a series with constant term 1, truncated
    /// at `max_degree`.
    pub fn invert_to(&self, max_degree: u64) -> GradedClass {
        assert!(
            self.coefficient(&Partition::empty()).is_one(),
            "series inversion needs constant term 1"
        );
        let mut inv = GradedClass::one(self.gr);
        for d in 1..=max_degree {
            // inv_d = -sum_{j=1..d} c_j * inv_{d-j}
            let mut comp = GradedClass::zero(self.gr);
            for j in 1..=d {
                comp = comp.sub(&self.component(j).mul_to(&inv.component(d - j), max_degree));
            }
            inv = inv.add(&comp.component(d));
        }
        inv
    }

    /// Coefficient of the point class.
    pub fn integrate(&self) -> BigRational {
        self.coefficient(&self.gr.point_partition())
    }

    /// Converts to an integer class; panics if any coefficient has a
    /// denominator, since callers only invoke this where integrality is
    /// forced.
    pub fn to_chow(&self) -> ChowClass {
        ChowClass::from_terms(
            self.gr,
            self.terms.iter().map(|(p, c)| {
                assert!(c.is_integer(), "non-integer coefficient {c} at {p}");
                (
                    p.clone(),
                    c.to_integer().to_i64().expect("coefficient fits i64"),
                )
            }),
        )
        .expect("terms already box-checked")
    }

    /// exp(m·σ₁) truncated at `max_degree`; the Chern character of the
    /// m-th power of the Plücker line bundle.
    pub fn exp_hyperplane(gr: Grassmannian, m: i64, max_degree: u64) -> GradedClass {
        let sigma1 = GradedClass::from_chow(
            &ChowClass::schubert(gr, Partition::row(1)).expect("σ₁ fits any box"),
        );
        let mut out = GradedClass::one(gr);
        let mut pow = GradedClass::one(gr);
        let mut factorial = BigInt::one();
        for d in 1..=max_degree {
            pow = pow.mul_to(&sigma1, max_degree).scale_int(m);
            factorial *= BigInt::from(d);
            out = out.add(&pow.scale(&BigRational::new(BigInt::one(), factorial.clone())));
        }
        out
    }
}

/// A formal bundle on Gr(k,n) built from the tautological sub and quotient
/// bundles, trivial summands, duals, direct sums, tensor products, and
/// symmetric/exterior powers of low-rank generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bundle {
    /// Tautological subbundle S of rank k.
    Sub,
    /// Its dual S*.
    SubDual,
    /// Tautological quotient bundle Q of rank n−k.
    Quot,
    /// Its dual Q*.
    QuotDual,
    Trivial(u32),
    Sum(Box<Bundle>, Box<Bundle>),
    Tensor(Box<Bundle>, Box<Bundle>),
    Sym(u32, Box<Bundle>),
    Wedge(u32, Box<Bundle>),
    Dual(Box<Bundle>),
}

impl Bundle {
    pub fn sum(self, other: Bundle) -> Bundle {
        Bundle::Sum(Box::new(self), Box::new(other))
    }

    pub fn tensor(self, other: Bundle) -> Bundle {
        Bundle::Tensor(Box::new(self), Box::new(other))
    }

    pub fn sym(self, d: u32) -> Bundle {
        Bundle::Sym(d, Box::new(self))
    }

    pub fn wedge(self, d: u32) -> Bundle {
        Bundle::Wedge(d, Box::new(self))
    }

    pub fn dual(self) -> Bundle {
        Bundle::Dual(Box::new(self))
    }

    /// Direct sum of `copies` copies of `self`.
    pub fn repeated(self, copies: u32) -> Bundle {
        assert!(copies > 0, "empty direct sum");
        let mut out = self.clone();
        for _ in 1..copies {
            out = out.sum(self.clone());
        }
        out
    }

    pub fn rank(&self, gr: Grassmannian) -> u64 {
        match self {
            Bundle::Sub | Bundle::SubDual => gr.k() as u64,
            Bundle::Quot | Bundle::QuotDual => gr.width() as u64,
            Bundle::Trivial(r) => *r as u64,
            Bundle::Sum(a, b) => a.rank(gr) + b.rank(gr),
            Bundle::Tensor(a, b) => a.rank(gr) * b.rank(gr),
            Bundle::Sym(d, a) => binomial(a.rank(gr) + *d as u64 - 1, *d as u64),
            Bundle::Wedge(d, a) => binomial(a.rank(gr), *d as u64),
            Bundle::Dual(a) => a.rank(gr),
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i).expect("binomial overflow") / (i + 1);
    }
    acc
}

/// Chern classes c_1..c_r of a generator usable under Sym/Wedge.
fn generator_chern(e: &Bundle, gr: Grassmannian) -> Result<(u32, Vec<ChowClass>)> {
    let unsupported = || Error::UnsupportedExpression(format!("{e:?}"));
    let column = |i: u32| Partition::new(vec![1; i as usize]).expect("column partition");
    match e {
        Bundle::Sub | Bundle::SubDual => {
            let k = gr.k();
            let sign = if matches!(e, Bundle::Sub) { -1 } else { 1 };
            let classes =
                (1..=k)
                    .map(|i| {
                        Ok(ChowClass::schubert(gr, column(i))?.scale(if i % 2 == 1 {
                            sign
                        } else {
                            1
                        }))
                    })
                    .collect::<Result<Vec<_>>>()?;
            Ok((k, classes))
        }
        Bundle::Quot | Bundle::QuotDual => {
            let w = gr.width();
            let sign = if matches!(e, Bundle::QuotDual) { -1 } else { 1 };
            let classes = (1..=w)
                .map(|i| {
                    Ok(
                        ChowClass::schubert(gr, Partition::row(i))?.scale(if i % 2 == 1 {
                            sign
                        } else {
                            1
                        }),
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((w, classes))
        }
        Bundle::Trivial(r) => Ok((*r, vec![ChowClass::zero(gr); *r as usize])),
        Bundle::Dual(inner) => {
            let (r, classes) = generator_chern(inner, gr)?;
            Ok((
                r,
                classes
                    .into_iter()
                    .enumerate()
                    .map(|(i, c)| if i % 2 == 0 { c.scale(-1) } else { c })
                    .collect(),
            ))
        }
        _ => Err(unsupported()),
    }
}

/// Total Chern class of a bundle expression, exact in the truncated Chow
/// ring. Symmetric and exterior powers expand formal Chern roots of their
/// base generator (rank ≤ 4) and re-express the elementary symmetric
/// functions of the derived roots through the base Chern classes; tensor
/// products go through the Chern character.
pub fn total_chern(e: &Bundle, gr: Grassmannian) -> Result<GradedClass> {
    let max = gr.dim();
    match e {
        Bundle::Sub | Bundle::SubDual | Bundle::Quot | Bundle::QuotDual => {
            let (_, classes) = generator_chern(e, gr)?;
            let mut out = GradedClass::one(gr);
            for c in classes {
                out = out.add(&GradedClass::from_chow(&c));
            }
            Ok(out)
        }
        Bundle::Trivial(_) => Ok(GradedClass::one(gr)),
        Bundle::Sum(a, b) => Ok(total_chern(a, gr)?.mul(&total_chern(b, gr)?)),
        Bundle::Dual(a) => Ok(dual_total(&total_chern(a, gr)?)),
        Bundle::Sym(d, a) => sym_or_wedge_chern(a, gr, *d, false),
        Bundle::Wedge(d, a) => sym_or_wedge_chern(a, gr, *d, true),
        Bundle::Tensor(a, b) => {
            let ra = a.rank(gr);
            let rb = b.rank(gr);
            let cha = character_from_total(&total_chern(a, gr)?, ra, max);
            let chb = character_from_total(&total_chern(b, gr)?, rb, max);
            let ch = cha.mul(&chb);
            Ok(total_from_character(&ch, max))
        }
    }
}

/// Negates the odd-degree components.
fn dual_total(c: &GradedClass) -> GradedClass {
    let gr = c.grassmannian();
    let mut out = GradedClass::zero(gr);
    for d in 0..=gr.dim() {
        let comp = c.component(d);
        out = out.add(&if d % 2 == 1 { comp.scale_int(-1) } else { comp });
    }
    out
}

fn sym_or_wedge_chern(
    base: &Bundle,
    gr: Grassmannian,
    d: u32,
    strict: bool,
) -> Result<GradedClass> {
    let (r, base_chern) = generator_chern(base, gr)?;
    if r > 4 {
        return Err(Error::UnsupportedExpression(format!(
            "sym/wedge of a rank-{r} bundle; only generators of rank <= 4 are supported"
        )));
    }
    // Product over the derived roots, expanded among formal base roots.
    let nvars = r as usize;
    let mut poly = MultiPoly::constant(nvars, 1);
    for multi in root_multisets(nvars, d as usize, strict) {
        let coeffs: Vec<i64> = multi.iter().map(|&m| m as i64).collect();
        poly = poly.mul(&MultiPoly::one_plus_root(nvars, &coeffs));
    }
    // Rewrite in e_1..e_r and substitute the base Chern classes.
    let mut out = GradedClass::zero(gr);
    for (epow, coeff) in to_elementary_basis(&poly) {
        let mut term = GradedClass::one(gr);
        for (i, &pw) in epow.iter().enumerate() {
            let ci = GradedClass::from_chow(&base_chern[i]);
            for _ in 0..pw {
                term = term.mul(&ci);
            }
        }
        out = out.add(&term.scale_int(coeff));
    }
    Ok(out)
}

/// Newton's identities: power sums p_1..p_max from a total Chern class,
/// then ch = rank + Σ p_m/m!.
fn character_from_total(c: &GradedClass, rank: u64, max_degree: u64) -> GradedClass {
    let gr = c.grassmannian();
    let mut powers: Vec<GradedClass> = Vec::new();
    for m in 1..=max_degree {
        // p_m = Σ_{t=1}^{m-1} (−1)^{t−1} c_t p_{m−t} + (−1)^{m−1} m c_m
        let mut pm = GradedClass::zero(gr);
        for t in 1..m {
            let part = c
                .component(t)
                .mul_to(&powers[(m - t - 1) as usize], max_degree);
            pm = if t % 2 == 1 {
                pm.add(&part)
            } else {
                pm.sub(&part)
            };
        }
        let lead = c.component(m).scale_int(m as i64);
        pm = if m % 2 == 1 {
            pm.add(&lead)
        } else {
            pm.sub(&lead)
        };
        powers.push(pm);
    }
    let mut ch = GradedClass::one(gr).scale(&rat(i64::try_from(rank).expect("rank fits i64")));
    let mut factorial = BigInt::one();
    for (idx, pm) in powers.iter().enumerate() {
        factorial *= BigInt::from(idx as u64 + 1);
        ch = ch.add(&pm.scale(&BigRational::new(BigInt::one(), factorial.clone())));
    }
    ch
}

/// Inverse direction: total Chern class from a Chern character.
fn total_from_character(ch: &GradedClass, max_degree: u64) -> GradedClass {
    let gr = ch.grassmannian();
    // p_m = m! ch_m
    let mut powers: Vec<GradedClass> = Vec::new();
    let mut factorial = BigInt::one();
    for m in 1..=max_degree {
        factorial *= BigInt::from(m);
        powers.push(
            ch.component(m)
                .scale(&BigRational::from_integer(factorial.clone())),
        );
    }
    // m e_m = Σ_{t=1}^{m} (−1)^{t−1} e_{m−t} p_t
    let mut total = GradedClass::one(gr);
    let mut elem: Vec<GradedClass> = vec![GradedClass::one(gr)];
    for m in 1..=max_degree {
        let mut acc = GradedClass::zero(gr);
        for t in 1..=m {
            let part = elem[(m - t) as usize].mul_to(&powers[(t - 1) as usize], max_degree);
            acc = if t % 2 == 1 {
                acc.add(&part)
            } else {
                acc.sub(&part)
            };
        }
        let em = acc.scale(&BigRational::new(BigInt::one(), BigInt::from(m)));
        total = total.add(&em);
        elem.push(em);
    }
    total
}

/// Total Chern class of the tangent bundle Hom(S,Q), through the identity
/// ch(T) = ch(S*)·ch(Q), truncated at `max_degree`.
pub fn tangent_chern_to(gr: Grassmannian, max_degree: u64) -> GradedClass {
    let cs = total_chern(&Bundle::SubDual, gr).expect("S* is always supported");
    let cq = total_chern(&Bundle::Quot, gr).expect("Q is always supported");
    let ch = character_from_total(&cs, gr.k() as u64, max_degree).mul_to(
        &character_from_total(&cq, gr.width() as u64, max_degree),
        max_degree,
    );
    total_from_character(&ch, max_degree)
}

/// Total Chern class of the tangent bundle over the whole box.
pub fn tangent_chern(gr: Grassmannian) -> GradedClass {
    tangent_chern_to(gr, gr.dim())
}

/// Chern character of a bundle expression up to `max_degree`.
pub fn chern_character(e: &Bundle, gr: Grassmannian, max_degree: u64) -> Result<GradedClass> {
    let total = total_chern(e, gr)?;
    Ok(character_from_total(&total, e.rank(gr), max_degree).truncate(max_degree))
}

/// Todd class 1 + c₁/2 + (c₁²+c₂)/12 + c₁c₂/24 of a total Chern class,
/// up to degree `max_degree` ≤ 3.
pub fn todd(c: &GradedClass, max_degree: u64) -> GradedClass {
    assert!(
        max_degree <= 3,
        "todd expansion implemented through degree 3"
    );
    let gr = c.grassmannian();
    let c1 = c.component(1);
    let c2 = c.component(2);
    let mut out = GradedClass::one(gr);
    if max_degree >= 1 {
        out = out.add(&c1.scale(&BigRational::new(BigInt::one(), BigInt::from(2))));
    }
    if max_degree >= 2 {
        let c1sq = c1.mul_to(&c1, 2);
        out = out.add(
            &c1sq
                .add(&c2)
                .scale(&BigRational::new(BigInt::one(), BigInt::from(12))),
        );
    }
    if max_degree >= 3 {
        let c1c2 = c1.mul_to(&c2, 3);
        out = out.add(&c1c2.scale(&BigRational::new(BigInt::one(), BigInt::from(24))));
    }
    out
}

/// The bundle ⊕_i Sym^{d_i}(S*) whose generic section cuts out the locus
/// of k-planes inside the corresponding complete intersection.
pub fn section_bundle(degrees: &[u32]) -> Bundle {
    assert!(!degrees.is_empty(), "need at least one degree");
    let mut it = degrees.iter();
    let first = Bundle::SubDual.sym(*it.next().unwrap());
    it.fold(first, |acc, &d| acc.sum(Bundle::SubDual.sym(d)))
}

/// Class of the plane locus: the top Chern class of ⊕ Sym^{d_i}(S*),
/// truncated to the ambient box.
pub fn fano_class(gr: Grassmannian, degrees: &[u32]) -> Result<ChowClass> {
    let bundle = section_bundle(degrees);
    let rank = bundle.rank(gr);
    if rank > gr.dim() {
        return Err(Error::RankExceedsDimension {
            rank,
            dim: gr.dim(),
        });
    }
    let total = total_chern(&bundle, gr)?;
    Ok(total.component(rank).to_chow())
}

/// Expected dimension of the plane locus: dim Gr − rank of the section
/// bundle.
pub fn fano_expected_dim(gr: Grassmannian, degrees: &[u32]) -> i64 {
    gr.dim() as i64 - section_bundle(degrees).rank(gr) as i64
}

/// Chern classes of the tangent bundle of the plane locus, as restricted
/// classes: c(T_Gr)/c(E) expanded by formal series inversion up to
/// `max_degree`.
pub fn fano_tangent_chern(
    gr: Grassmannian,
    degrees: &[u32],
    max_degree: u64,
) -> Result<GradedClass> {
    let e_total = total_chern(&section_bundle(degrees), gr)?;
    let t_total = tangent_chern_to(gr, max_degree);
    Ok(t_total
        .mul_to(&e_total.invert_to(max_degree), max_degree)
        .truncate(max_degree))
}

/// For planes on an intersection of three quadrics in projective n-space:
/// the coefficient of σ₁ in the canonical class of the plane locus and its
/// expected dimension. The canonical coefficient is recomputed from
/// c₁(E) − c₁(T_Gr) on Gr(3,n+1) and must agree with the closed form
/// 12 − (n+1).
pub fn canonical_and_expected_dim(n: u32) -> Result<(i64, i64)> {
    if n < 7 {
        return Err(Error::InvalidArgument(format!(
            "planes on three quadrics require n >= 7, got {n}"
        )));
    }
    let gr = Grassmannian::new(3, n + 1)?;
    let sigma1 = Partition::row(1);
    let c1_e = total_chern(&section_bundle(&[2, 2, 2]), gr)?
        .component(1)
        .coefficient(&sigma1);
    let c1_t = tangent_chern_to(gr, 1).component(1).coefficient(&sigma1);
    let k_coeff = &c1_e - &c1_t;
    assert!(
        k_coeff.is_integer(),
        "canonical coefficient must be integral"
    );
    let k_coeff = k_coeff.to_integer().to_i64().expect("fits i64");
    let closed_form = 12 - (n as i64 + 1);
    assert_eq!(k_coeff, closed_form, "adjunction cross-check failed");
    Ok((k_coeff, 3 * n as i64 - 24))
}
