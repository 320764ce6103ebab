//! Riemann-Roch invariants of the threefold of planes on an intersection
//! of three quadrics, Hodge-number closed forms for complete intersections
//! of three quadrics, and the two small lattice/surface checks.
//!
//! Push-forward convention: a class restricted to the plane locus F is
//! integrated as ∫_Gr (class)·`[F]`, with `[F]` the top Chern class of the
//! section bundle. This convention is fixed once here and used everywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::bundles::{fano_class, fano_expected_dim, fano_tangent_chern, todd, GradedClass};
use crate::chow::{ChowClass, Grassmannian};
use crate::error::{Error, Result};
use crate::partition::Partition;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn expect_i64(q: &BigRational, what: &str) -> i64 {
    assert!(q.is_integer(), "{what} must be an integer, got {q}");
    q.to_integer().to_i64().expect("value fits i64")
}

/// Cached geometry of the threefold of planes: its class, hyperplane
/// class, and tangent Chern classes up to degree three.
#[derive(Debug, Clone)]
pub struct ThreefoldInvariants {
    gr: Grassmannian,
    degrees: Vec<u32>,
    fano: GradedClass,
    tangent: GradedClass,
}

impl ThreefoldInvariants {
    /// Requires expected dimension three; checks that c₁c₂/24 integrates
    /// to an integer (a hard consistency assertion, not an input error).
    pub fn new(gr: Grassmannian, degrees: &[u32]) -> Result<Self> {
        let expdim = fano_expected_dim(gr, degrees);
        if expdim != 3 {
            return Err(Error::NotAThreefold(expdim));
        }
        let fano = GradedClass::from_chow(&fano_class(gr, degrees)?);
        let tangent = fano_tangent_chern(gr, degrees, 3)?;
        let inv = ThreefoldInvariants {
            gr,
            degrees: degrees.to_vec(),
            fano,
            tangent,
        };
        inv.euler_characteristic_structure_sheaf(); // asserts integrality
        Ok(inv)
    }

    pub fn grassmannian(&self) -> Grassmannian {
        self.gr
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn fano_class(&self) -> ChowClass {
        self.fano.to_chow()
    }

    pub fn tangent_chern(&self) -> &GradedClass {
        &self.tangent
    }

    /// ∫_F α = ∫_Gr α·[F], taking the degree-3 part of α.
    fn integrate_on_fano(&self, alpha: &GradedClass) -> BigRational {
        alpha.component(3).mul(&self.fano).integrate()
    }

    /// χ(𝒪(m)) by Riemann-Roch: ∫_F (exp(mσ₁)·td(T_F))₃.
    pub fn hrr_chi(&self, m: i64) -> i64 {
        let ch = GradedClass::exp_hyperplane(self.gr, m, 3);
        let td = todd(&self.tangent, 3);
        expect_i64(&self.integrate_on_fano(&ch.mul_to(&td, 3)), "chi(O(m))")
    }

    fn euler_characteristic_structure_sheaf(&self) -> i64 {
        self.hrr_chi(0)
    }

    /// Degree under the Plücker embedding: ∫_F σ₁³.
    pub fn degree(&self) -> i64 {
        let sigma1 = GradedClass::from_chow(
            &ChowClass::schubert(self.gr, Partition::row(1)).expect("σ₁ fits"),
        );
        let cube = sigma1.mul(&sigma1).mul(&sigma1);
        expect_i64(&self.integrate_on_fano(&cube), "degree")
    }

    /// Self-intersection K³ of the canonical class.
    pub fn canonical_cubed(&self) -> i64 {
        let k = self.tangent.component(1).scale_int(-1);
        let cube = k.mul(&k).mul(&k);
        expect_i64(&self.integrate_on_fano(&cube), "K^3")
    }

    /// χ(Ω¹) by Riemann-Roch with ch_i(Ω¹) = (−1)^i ch_i(T).
    pub fn chi_cotangent(&self) -> i64 {
        let ch_t = self.tangent_character();
        let mut ch = GradedClass::zero(self.gr);
        for d in 0..=3u64 {
            let sign = if d % 2 == 1 { -1 } else { 1 };
            ch = ch.add(&ch_t.component(d).scale_int(sign));
        }
        let td = todd(&self.tangent, 3);
        expect_i64(&self.integrate_on_fano(&ch.mul_to(&td, 3)), "chi(Omega^1)")
    }

    /// Topological Euler characteristic ∫_F c₃(T_F).
    pub fn chi_topological(&self) -> i64 {
        expect_i64(
            &self.integrate_on_fano(&self.tangent.component(3)),
            "chi_top",
        )
    }

    /// ch(T_F) up to degree 3 from c₁, c₂, c₃.
    fn tangent_character(&self) -> GradedClass {
        let c1 = self.tangent.component(1);
        let c2 = self.tangent.component(2);
        let c3 = self.tangent.component(3);
        let rank = GradedClass::one(self.gr).scale_int(3);
        let ch2 = c1
            .mul_to(&c1, 2)
            .sub(&c2.scale_int(2))
            .scale(&BigRational::new(BigInt::one(), BigInt::from(2)));
        let ch3 = c1
            .mul_to(&c1, 3)
            .mul_to(&c1, 3)
            .sub(&c1.mul_to(&c2, 3).scale_int(3))
            .add(&c3.scale_int(3))
            .scale(&BigRational::new(BigInt::one(), BigInt::from(6)));
        rank.add(&c1).add(&ch2).add(&ch3)
    }

    /// The unique cubic through (m, χ(𝒪(m))) for m = 0..3, highest degree
    /// first. Its leading coefficient always equals degree/6.
    pub fn hilbert_polynomial(&self) -> [BigRational; 4] {
        let values: Vec<i64> = (0..4).map(|m| self.hrr_chi(m)).collect();
        // Newton forward differences at 0,1,2,3 for a cubic.
        let d0 = rat(values[0]);
        let d1 = rat(values[1] - values[0]);
        let d2 = rat(values[2] - 2 * values[1] + values[0]);
        let d3 = rat(values[3] - 3 * values[2] + 3 * values[1] - values[0]);
        // P(m) = d0 + d1 m + d2 m(m-1)/2 + d3 m(m-1)(m-2)/6
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let sixth = BigRational::new(BigInt::one(), BigInt::from(6));
        let c3 = &d3 * &sixth;
        let c2 = &d2 * &half - &c3 * rat(3);
        let c1 = d1 - &d2 * &half + &d3 * BigRational::new(BigInt::from(2), BigInt::from(6));
        let c0 = d0;
        let coeffs = [c3, c2, c1, c0];
        let leading = rat(self.degree()) * BigRational::new(BigInt::one(), BigInt::from(6));
        assert_eq!(coeffs[0], leading, "leading coefficient must be deg/6");
        coeffs
    }

    /// Evaluates the interpolated cubic at m.
    pub fn hilbert_value(&self, m: i64) -> BigRational {
        let coeffs = self.hilbert_polynomial();
        let mut acc = BigRational::zero();
        for c in coeffs {
            acc = acc * rat(m) + c;
        }
        acc
    }
}

/// Euler characteristic and nontrivial middle Hodge numbers of a smooth
/// complete intersection of three quadrics in projective n-space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CiHodge {
    pub n: u32,
    pub euler: i64,
    /// (h^{m-1,m-2}, h^{m-2,m-1}) for even n = 2m;
    /// (h^{m-1,m-3}, h^{m-2,m-2}, h^{m-3,m-1}) for odd n = 2m−1.
    pub middle: Vec<u64>,
}

pub fn ci_hodge(n: u32) -> Result<CiHodge> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "complete intersection Hodge numbers need n >= 4, got {n}"
        )));
    }
    if n.is_multiple_of(2) {
        let m = (n / 2) as i64;
        let h = (2 * m * m - m - 1) as u64;
        Ok(CiHodge {
            n,
            euler: -4 * m * (m - 1),
            middle: vec![h, h],
        })
    } else {
        let m = n.div_ceil(2) as i64;
        let outer = (((m - 1) * (m - 2)) / 2) as u64;
        let center = (3 * m * m - 3 * m + 2) as u64;
        Ok(CiHodge {
            n,
            euler: 4 * m * (m - 1),
            middle: vec![outer, center, outer],
        })
    }
}

/// Riemann-Roch on a surface: χ(D) = (D² − D·K)/2 + χ(𝒪).
pub fn surface_rr(d_squared: i64, d_dot_k: i64, chi_o: i64) -> Result<i64> {
    let num = d_squared - d_dot_k;
    if num % 2 != 0 {
        return Err(Error::ParityViolation(num));
    }
    Ok(num / 2 + chi_o)
}

/// Discriminant of a rank-two symmetric form: g11·g22 − g12².
pub fn gram_discriminant(g11: i64, g12: i64, g22: i64) -> i64 {
    g11 * g22 - g12 * g12
}

/// Assumptions consumed as axioms when assembling the Hodge diamond.
/// They are surfaced by name in every output rather than silently used.
pub const DIAMOND_ASSUMPTIONS: [&str; 2] = ["picard-rank-1", "cylinder-injectivity"];

/// Hodge diamond of a smooth projective threefold, stored as `h[p][q]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeDiamond {
    h: [[i64; 4]; 4],
}

/// Inputs for assembling the diamond of the threefold of planes.
#[derive(Debug, Clone)]
pub struct DiamondInputs {
    pub chi_o: i64,
    pub h02: i64,
    pub chi_cotangent: i64,
    pub chi_top: i64,
    /// Middle Hodge numbers (h^{m-1,m-3}, h^{m-2,m-2}, h^{m-3,m-1}) of the
    /// ambient complete intersection.
    pub ci_middle: [u64; 3],
    pub picard_rank: i64,
}

impl HodgeDiamond {
    /// Assembles the diamond: h¹¹ comes from the primitive middle cohomology
    /// of the ambient intersection plus the Picard classes, h⁰³ from χ(𝒪),
    /// h¹² from χ(Ω¹); conjugation and Serre symmetry fill the rest. The
    /// recomputed topological Euler characteristic must match the input.
    pub fn assemble(inputs: &DiamondInputs) -> Result<HodgeDiamond> {
        let mut h = [[0i64; 4]; 4];
        h[0][0] = 1;
        h[1][0] = 0;
        h[0][1] = 0;
        h[0][2] = inputs.h02;
        h[2][0] = inputs.h02;
        // Primitive (1,1) part of the middle cohomology of the ambient
        // variety, plus the hyperplane class and any extra Picard classes.
        h[1][1] = inputs.ci_middle[1] as i64 - 1 + inputs.picard_rank;
        // χ(𝒪) = h00 − h01 + h02 − h03.
        h[0][3] = h[0][0] - h[0][1] + h[0][2] - inputs.chi_o;
        h[3][0] = h[0][3];
        // Serre duality h^{p,q} = h^{3−p,3−q} pins h13 = h20.
        h[1][3] = h[2][0];
        h[3][1] = h[0][2];
        // χ(Ω¹) = h10 − h11 + h12 − h13.
        h[1][2] = inputs.chi_cotangent + h[1][1] + h[1][3] - h[1][0];
        h[2][1] = h[1][2];
        // Remaining entries by Serre duality.
        h[2][2] = h[1][1];
        h[3][2] = h[0][1];
        h[2][3] = h[1][0];
        h[3][3] = h[0][0];
        let diamond = HodgeDiamond { h };
        let recomputed = diamond.euler_characteristic();
        if recomputed != inputs.chi_top {
            panic!(
                "hodge diamond inconsistent: chi_top recomputed {recomputed} vs input {}",
                inputs.chi_top
            );
        }
        Ok(diamond)
    }

    pub fn entry(&self, p: usize, q: usize) -> i64 {
        self.h[p][q]
    }

    /// Rows of the upper half: (h00), (h10,h01), (h20,h11,h02),
    /// (h30,h21,h12,h03).
    pub fn rows(&self) -> [Vec<i64>; 4] {
        [
            vec![self.h[0][0]],
            vec![self.h[1][0], self.h[0][1]],
            vec![self.h[2][0], self.h[1][1], self.h[0][2]],
            vec![self.h[3][0], self.h[2][1], self.h[1][2], self.h[0][3]],
        ]
    }

    pub fn euler_characteristic(&self) -> i64 {
        let mut acc = 0i64;
        for p in 0..4 {
            for q in 0..4 {
                let sign = if (p + q) % 2 == 0 { 1 } else { -1 };
                acc += sign * self.h[p][q];
            }
        }
        acc
    }

    pub fn betti(&self, i: usize) -> i64 {
        (0..4)
            .filter_map(|p| {
                let q = i.checked_sub(p)?;
                (q < 4).then(|| self.h[p][q])
            })
            .sum()
    }
}
