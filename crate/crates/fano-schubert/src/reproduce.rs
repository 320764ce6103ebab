//! End-to-end reproduction of every headline number: each check recomputes
//! a value through the library and compares it against a frozen constant.
//! The frozen side is transcription, never computation, so any drift in
//! the pipelines shows up as a failed row.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::bott::bott_cohomology;
use crate::bundles::{
    canonical_and_expected_dim, fano_class, fano_tangent_chern, tangent_chern_to, total_chern,
    Bundle,
};
use crate::chow::{ChowClass, Grassmannian};
use crate::invariants::{
    ci_hodge, gram_discriminant, surface_rr, DiamondInputs, HodgeDiamond, ThreefoldInvariants,
};
use crate::koszul::{cohomology_contributions, sheaf_cohomology};
use crate::partition::Partition;
use crate::plethysm::wedge_triple_sym2;

/// One reproduced value: name, what it must equal, what the library got.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    fn compare<T: PartialEq + std::fmt::Display>(name: &str, expected: T, actual: T) -> Check {
        Check {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass: expected == actual,
        }
    }
}

/// Schur-functor decompositions of the wedge powers Λ^r E*, r = 0..18,
/// for E the rank-18 bundle (Sym² S*)^⊕3 on Gr(3,10). Frozen reference
/// values; every multiplicity is compared against the computed plethysm.
pub const WEDGE_TABLE: [&[(&[u32], u64)]; 19] = [
    &[(&[], 1)],
    &[(&[2], 3)],
    &[(&[4], 3), (&[3, 1], 6), (&[2, 2], 3)],
    &[
        (&[6], 1),
        (&[5, 1], 8),
        (&[4, 2], 9),
        (&[4, 1, 1], 10),
        (&[3, 3], 10),
        (&[3, 2, 1], 8),
        (&[2, 2, 2], 1),
    ],
    &[
        (&[7, 1], 3),
        (&[6, 2], 9),
        (&[6, 1, 1], 15),
        (&[5, 3], 18),
        (&[5, 2, 1], 24),
        (&[4, 4], 6),
        (&[4, 3, 1], 33),
        (&[4, 2, 2], 9),
        (&[3, 3, 2], 15),
    ],
    &[
        (&[8, 2], 3),
        (&[8, 1, 1], 6),
        (&[7, 3], 9),
        (&[7, 2, 1], 24),
        (&[6, 4], 18),
        (&[6, 3, 1], 54),
        (&[6, 2, 2], 21),
        (&[5, 5], 6),
        (&[5, 4, 1], 48),
        (&[5, 3, 2], 54),
        (&[4, 4, 2], 39),
        (&[4, 3, 3], 30),
    ],
    &[
        (&[9, 3], 1),
        (&[9, 2, 1], 8),
        (&[8, 4], 8),
        (&[8, 3, 1], 27),
        (&[8, 2, 2], 19),
        (&[7, 5], 9),
        (&[7, 4, 1], 64),
        (&[7, 3, 2], 62),
        (&[6, 6], 10),
        (&[6, 5, 1], 53),
        (&[6, 4, 2], 117),
        (&[6, 3, 3], 56),
        (&[5, 5, 2], 46),
        (&[5, 4, 3], 88),
        (&[4, 4, 4], 38),
    ],
    &[
        (&[10, 3, 1], 3),
        (&[10, 2, 2], 6),
        (&[9, 5], 3),
        (&[9, 4, 1], 24),
        (&[9, 3, 2], 27),
        (&[8, 6], 6),
        (&[8, 5, 1], 42),
        (&[8, 4, 2], 93),
        (&[8, 3, 3], 36),
        (&[7, 7], 3),
        (&[7, 6, 1], 48),
        (&[7, 5, 2], 132),
        (&[7, 4, 3], 144),
        (&[6, 6, 2], 66),
        (&[6, 5, 3], 138),
        (&[6, 4, 4], 114),
        (&[5, 5, 4], 60),
    ],
    &[
        (&[11, 3, 2], 3),
        (&[10, 5, 1], 9),
        (&[10, 4, 2], 24),
        (&[10, 3, 3], 9),
        (&[9, 7], 3),
        (&[9, 6, 1], 24),
        (&[9, 5, 2], 75),
        (&[9, 4, 3], 72),
        (&[8, 7, 1], 24),
        (&[8, 6, 2], 102),
        (&[8, 5, 3], 168),
        (&[8, 4, 4], 99),
        (&[7, 7, 2], 69),
        (&[7, 6, 3], 168),
        (&[7, 5, 4], 213),
        (&[6, 6, 4], 96),
        (&[6, 5, 5], 75),
    ],
    &[
        (&[12, 3, 3], 1),
        (&[11, 5, 2], 9),
        (&[11, 4, 3], 8),
        (&[10, 7, 1], 9),
        (&[10, 6, 2], 36),
        (&[10, 5, 3], 63),
        (&[10, 4, 4], 28),
        (&[9, 9], 1),
        (&[9, 8, 1], 8),
        (&[9, 7, 2], 63),
        (&[9, 6, 3], 128),
        (&[9, 5, 4], 142),
        (&[8, 8, 2], 28),
        (&[8, 7, 3], 142),
        (&[8, 6, 4], 216),
        (&[8, 5, 5], 146),
        (&[7, 7, 4], 146),
        (&[7, 6, 5], 160),
        (&[6, 6, 6], 20),
    ],
    &[
        (&[10, 9, 1], 3),
        (&[11, 7, 2], 9),
        (&[10, 8, 2], 24),
        (&[9, 9, 2], 9),
        (&[12, 5, 3], 3),
        (&[11, 6, 3], 24),
        (&[10, 7, 3], 75),
        (&[9, 8, 3], 72),
        (&[11, 5, 4], 24),
        (&[10, 6, 4], 102),
        (&[9, 7, 4], 168),
        (&[8, 8, 4], 99),
        (&[10, 5, 5], 69),
        (&[9, 6, 5], 168),
        (&[8, 7, 5], 213),
        (&[8, 6, 6], 96),
        (&[7, 7, 6], 75),
    ],
    &[
        (&[11, 9, 2], 3),
        (&[10, 10, 2], 6),
        (&[12, 7, 3], 3),
        (&[11, 8, 3], 24),
        (&[10, 9, 3], 27),
        (&[12, 6, 4], 6),
        (&[11, 7, 4], 42),
        (&[10, 8, 4], 93),
        (&[9, 9, 4], 36),
        (&[12, 5, 5], 3),
        (&[11, 6, 5], 48),
        (&[10, 7, 5], 132),
        (&[9, 8, 5], 144),
        (&[10, 6, 6], 66),
        (&[9, 7, 6], 138),
        (&[8, 8, 6], 114),
        (&[8, 7, 7], 60),
    ],
    &[
        (&[12, 9, 3], 1),
        (&[11, 10, 3], 8),
        (&[12, 8, 4], 8),
        (&[11, 9, 4], 27),
        (&[10, 10, 4], 19),
        (&[12, 7, 5], 9),
        (&[11, 8, 5], 64),
        (&[10, 9, 5], 62),
        (&[12, 6, 6], 10),
        (&[11, 7, 6], 53),
        (&[10, 8, 6], 117),
        (&[9, 9, 6], 56),
        (&[10, 7, 7], 46),
        (&[9, 8, 7], 88),
        (&[8, 8, 8], 38),
    ],
    &[
        (&[12, 10, 4], 3),
        (&[11, 11, 4], 6),
        (&[12, 9, 5], 9),
        (&[11, 10, 5], 24),
        (&[12, 8, 6], 18),
        (&[11, 9, 6], 54),
        (&[10, 10, 6], 21),
        (&[12, 7, 7], 6),
        (&[11, 8, 7], 48),
        (&[10, 9, 7], 54),
        (&[10, 8, 8], 39),
        (&[9, 9, 8], 30),
    ],
    &[
        (&[12, 11, 5], 3),
        (&[12, 10, 6], 9),
        (&[11, 11, 6], 15),
        (&[12, 9, 7], 18),
        (&[11, 10, 7], 24),
        (&[12, 8, 8], 6),
        (&[11, 9, 8], 33),
        (&[10, 10, 8], 9),
        (&[10, 9, 9], 15),
    ],
    &[
        (&[12, 12, 6], 1),
        (&[12, 11, 7], 8),
        (&[12, 10, 8], 9),
        (&[11, 11, 8], 10),
        (&[12, 9, 9], 10),
        (&[11, 10, 9], 8),
        (&[10, 10, 10], 1),
    ],
    &[(&[12, 12, 8], 3), (&[12, 11, 9], 6), (&[12, 10, 10], 3)],
    &[(&[12, 12, 10], 3)],
    &[(&[12, 12, 12], 1)],
];

/// First-page support of the hypercohomology and total dimensions.
pub const SPECTRAL_SUPPORT: [((i32, u32), u64); 9] = [
    ((0, 0), 1),
    ((-5, 7), 6),
    ((-9, 14), 55),
    ((-10, 14), 306),
    ((-11, 14), 435),
    ((-15, 21), 1),
    ((-16, 21), 165),
    ((-17, 21), 2475),
    ((-18, 21), 4950),
];

/// The universal top Chern class of (Sym² S*)^⊕3, divided by 512, on any
/// Grassmannian wide enough that no term is truncated.
pub const UNIVERSAL_FANO_CLASS: [(&[u32], i64); 8] = [
    (&[9, 6, 3], 1),
    (&[9, 5, 4], 2),
    (&[8, 7, 3], 2),
    (&[8, 6, 4], 6),
    (&[8, 5, 5], 4),
    (&[7, 7, 4], 4),
    (&[7, 6, 5], 8),
    (&[6, 6, 6], 2),
];

/// Chern classes of Sym²(S*) on Gr(3,10), one entry per degree 1..6.
pub const SYM2_CHERN: [&[(&[u32], i64)]; 6] = [
    &[(&[1], 4)],
    &[(&[2], 5), (&[1, 1], 10)],
    &[(&[3], 2), (&[2, 1], 15), (&[1, 1, 1], 20)],
    &[(&[3, 1], 6), (&[2, 2], 10), (&[2, 1, 1], 30)],
    &[(&[3, 2], 4), (&[3, 1, 1], 12), (&[2, 2, 1], 20)],
    &[(&[3, 2, 1], 8)],
];

pub const SECTION_CHERN: [&[(&[u32], i64)]; 3] = [
    &[(&[1], 12)],
    &[(&[2], 63), (&[1, 1], 78)],
    &[(&[3], 190), (&[2, 1], 533), (&[1, 1, 1], 364)],
];

pub const TANGENT_GR_CHERN: [&[(&[u32], i64)]; 3] = [
    &[(&[1], 10)],
    &[(&[2], 47), (&[1, 1], 51)],
    &[(&[3], 140), (&[2, 1], 310), (&[1, 1, 1], 180)],
];

pub const TANGENT_FANO_CHERN: [&[(&[u32], i64)]; 3] = [
    &[(&[1], -2)],
    &[(&[2], 8), (&[1, 1], -3)],
    &[(&[3], -20), (&[2, 1], -1), (&[1, 1, 1], 8)],
];

/// Middle Hodge numbers of a smooth intersection of three quadrics in
/// projective n-space, n = 4..10.
pub const CI_HODGE_TABLE: [(u32, &[u64]); 7] = [
    (4, &[5, 5]),
    (5, &[1, 20, 1]),
    (6, &[14, 14]),
    (7, &[3, 38, 3]),
    (8, &[27, 27]),
    (9, &[6, 62, 6]),
    (10, &[44, 44]),
];

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("frozen tables hold valid partitions")
}

fn class(gr: Grassmannian, entries: &[(&[u32], i64)], scale: i64) -> ChowClass {
    ChowClass::from_terms(gr, entries.iter().map(|(q, c)| (p(q), *c * scale)))
        .expect("frozen classes fit their boxes")
}

/// Runs every reproduction check. All values are exact; a row passes only
/// on equality.
pub fn run_all() -> Vec<Check> {
    let mut checks = Vec::new();
    let gr310 = Grassmannian::new(3, 10).expect("valid");
    let gr39 = Grassmannian::new(3, 9).expect("valid");
    let gr312 = Grassmannian::new(3, 12).expect("valid");

    // Chern classes of the quadric section bundle and its building block.
    let sym2 = total_chern(&Bundle::SubDual.sym(2), gr310).expect("supported");
    for (d, want) in SYM2_CHERN.iter().enumerate() {
        checks.push(Check::compare(
            &format!("c{}(Sym^2 S*) on Gr(3,10)", d + 1),
            class(gr310, want, 1),
            sym2.component(d as u64 + 1).to_chow(),
        ));
    }
    let section =
        total_chern(&crate::bundles::section_bundle(&[2, 2, 2]), gr310).expect("supported");
    for (d, want) in SECTION_CHERN.iter().enumerate() {
        checks.push(Check::compare(
            &format!("c{}(E) on Gr(3,10)", d + 1),
            class(gr310, want, 1),
            section.component(d as u64 + 1).to_chow(),
        ));
    }

    // Class of the plane locus.
    checks.push(Check::compare(
        "universal [F] on Gr(3,12)",
        class(gr312, &UNIVERSAL_FANO_CLASS, 512),
        fano_class(gr312, &[2, 2, 2]).expect("rank fits"),
    ));
    checks.push(Check::compare(
        "[F] on Gr(3,10)",
        class(
            gr310,
            &[(&[7, 7, 4], 4), (&[7, 6, 5], 8), (&[6, 6, 6], 2)],
            512,
        ),
        fano_class(gr310, &[2, 2, 2]).expect("rank fits"),
    ));
    checks.push(Check::compare(
        "deg [F] on Gr(3,9) (count of planes)",
        1024,
        fano_class(gr39, &[2, 2, 2]).expect("rank fits").integrate(),
    ));

    // Tangent bundles.
    let t_gr = tangent_chern_to(gr310, 3);
    for (d, want) in TANGENT_GR_CHERN.iter().enumerate() {
        checks.push(Check::compare(
            &format!("c{}(T Gr(3,10))", d + 1),
            class(gr310, want, 1),
            t_gr.component(d as u64 + 1).to_chow(),
        ));
    }
    let t_f = fano_tangent_chern(gr310, &[2, 2, 2], 3).expect("supported");
    for (d, want) in TANGENT_FANO_CHERN.iter().enumerate() {
        checks.push(Check::compare(
            &format!("c{}(T F)", d + 1),
            class(gr310, want, 1),
            t_f.component(d as u64 + 1).to_chow(),
        ));
    }

    // Adjunction and expected dimension.
    for (n, want) in [(8u32, (3i64, 0i64)), (9, (2, 3)), (12, (-1, 12))] {
        let got = canonical_and_expected_dim(n).expect("n >= 7");
        checks.push(Check::compare(
            &format!("(K coefficient, expected dim) at n={n}"),
            format!("{want:?}"),
            format!("{got:?}"),
        ));
    }

    // Riemann-Roch package.
    let inv = ThreefoldInvariants::new(gr310, &[2, 2, 2]).expect("threefold");
    checks.push(Check::compare("deg F", 11264, inv.degree()));
    checks.push(Check::compare("K^3", 90112, inv.canonical_cubed()));
    for (m, want) in [(0i64, -2816i64), (1, 0), (2, 2816), (3, 16896)] {
        checks.push(Check::compare(
            &format!("chi(O({m}))"),
            want,
            inv.hrr_chi(m),
        ));
    }
    checks.push(Check::compare("chi(Omega^1)", 15616, inv.chi_cotangent()));
    checks.push(Check::compare("chi_top", -36864, inv.chi_topological()));
    checks.push(Check::compare(
        "Hilbert cubic leading coefficient = deg/6",
        BigRational::new(BigInt::from(5632), BigInt::from(3)),
        inv.hilbert_polynomial()[0].clone(),
    ));
    let hilbert_matches = (-5..=10)
        .all(|m| inv.hilbert_value(m) == BigRational::from_integer(BigInt::from(inv.hrr_chi(m))));
    checks.push(Check::compare(
        "Hilbert cubic = Riemann-Roch on -5..=10",
        true,
        hilbert_matches,
    ));

    // Plethysm golden tables and dimension census.
    for (r, want) in WEDGE_TABLE.iter().enumerate() {
        let computed = wedge_triple_sym2(r as u32).expect("r in range");
        let frozen: crate::plethysm::SchurDecomposition =
            want.iter().map(|(q, m)| (p(q), *m)).collect();
        checks.push(Check::compare(
            &format!("wedge^{r} E* decomposition"),
            format!("{} terms", frozen.terms().len()),
            if computed == frozen {
                format!("{} terms", computed.terms().len())
            } else {
                format!("mismatch: {computed:?}")
            },
        ));
    }
    let census_ok = (0..=18u32).all(|r| {
        let dim = wedge_triple_sym2(r).expect("in range").dimension();
        let mut want = 1u64;
        for i in 0..r.min(18 - r) as u64 {
            want = want * (18 - i) / (i + 1);
        }
        dim == want
    });
    checks.push(Check::compare(
        "dimension census: dim wedge^r E* = C(18,r)",
        true,
        census_ok,
    ));

    // Bott support.
    let support = cohomology_contributions();
    let mut expected_support: Vec<(i32, u32)> = SPECTRAL_SUPPORT.iter().map(|&(k, _)| k).collect();
    expected_support.sort();
    checks.push(Check::compare(
        "hypercohomology support",
        format!("{expected_support:?}"),
        format!("{:?}", support.support()),
    ));
    for ((pp, q), dim) in SPECTRAL_SUPPORT {
        checks.push(Check::compare(
            &format!("dim E1^({pp},{q})"),
            dim,
            support.dimension(pp, q),
        ));
    }
    checks.push(Check::compare(
        "Koszul alternating sum = chi(O) from Riemann-Roch",
        format!("{} = {}", -2816, -2816),
        format!("{} = {}", support.euler_sum(), inv.hrr_chi(0)),
    ));

    // Sheaf cohomology and the Hodge diamond.
    let sheaf = sheaf_cohomology(false);
    checks.push(Check::compare(
        "h^i(O_F)",
        "[1, 0, 6, 2823]".to_string(),
        format!("{:?}", sheaf.h),
    ));
    let nine = ci_hodge(9).expect("n >= 4");
    let diamond = HodgeDiamond::assemble(&DiamondInputs {
        chi_o: inv.hrr_chi(0),
        h02: sheaf.h[2] as i64,
        chi_cotangent: inv.chi_cotangent(),
        chi_top: inv.chi_topological(),
        ci_middle: [nine.middle[0], nine.middle[1], nine.middle[2]],
        picard_rank: 1,
    })
    .expect("consistent inputs");
    checks.push(Check::compare(
        "Hodge diamond rows",
        "[[1], [0, 0], [6, 62, 6], [2823, 15684, 15684, 2823]]".to_string(),
        format!("{:?}", diamond.rows()),
    ));
    checks.push(Check::compare(
        "chi_top recomputed from the diamond",
        -36864,
        diamond.euler_characteristic(),
    ));

    // Hodge numbers of the ambient complete intersections.
    for (n, middle) in CI_HODGE_TABLE {
        checks.push(Check::compare(
            &format!("middle Hodge numbers of X in P^{n}"),
            format!("{middle:?}"),
            format!("{:?}", ci_hodge(n).expect("n >= 4").middle),
        ));
    }

    // Small surface/lattice checks.
    checks.push(Check::compare(
        "chi(2h-K) on the branch surface",
        3,
        surface_rr(10, 12, 4).expect("even"),
    ));
    checks.push(Check::compare(
        "disc <K,h>",
        -31,
        gram_discriminant(2, 7, 9),
    ));
    checks.push(Check::compare(
        "disc <g^2,P>",
        31,
        gram_discriminant(8, 1, 4),
    ));

    // A spot Bott value quoted with the degree-7 block.
    let det_line = bott_cohomology(&p(&[8, 1, 1]), gr310)
        .expect("three parts")
        .group()
        .map(|g| (g.degree, g.dimension))
        .expect("nonzero");
    checks.push(Check::compare(
        "H^7 of Schur(8,1,1) S is one-dimensional",
        "(7, 1)".to_string(),
        format!("{det_line:?}"),
    ));

    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn everything_reproduces() {
        let checks = run_all();
        let failures: Vec<&Check> = checks.iter().filter(|c| !c.pass).collect();
        assert!(
            failures.is_empty(),
            "failed checks: {:#?}",
            failures
                .iter()
                .map(|c| format!("{}: expected {}, got {}", c.name, c.expected, c.actual))
                .collect::<Vec<_>>()
        );
        assert!(checks.len() > 50);
    }
}
