//! Property suites over randomized inputs: structural invariants of the
//! partition operations, the Chow ring, and the plethysm tables.

mod common;

use proptest::collection::vec;
use proptest::prelude::*;

use fano_schubert::bundles::{total_chern, Bundle};
use fano_schubert::chow::{complement, ChowClass, Grassmannian};
use fano_schubert::plethysm::{tensor_schur, wedge_sym2};
use fano_schubert::{lr_coefficients, weyl_dim, Partition};

/// Weakly decreasing sequences of weight ≤ roughly 30.
fn partition_strategy(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    vec(0..=max_part, 0..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted input")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn conjugate_is_an_involution(lam in partition_strategy(10, 6)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam);
    }
}

proptest! {
    #[test]
    fn conjugate_preserves_weight(lam in partition_strategy(10, 6)) {
        prop_assert_eq!(lam.conjugate().weight(), lam.weight());
    }

    #[test]
    fn frobenius_round_trip(lam in partition_strategy(12, 8)) {
        prop_assert_eq!(lam.frobenius().to_partition(), lam);
    }

    #[test]
    fn frobenius_arms_and_legs_swap_under_conjugation(lam in partition_strategy(9, 7)) {
        let f = lam.frobenius();
        let g = lam.conjugate().frobenius();
        prop_assert_eq!(f.arms(), g.legs());
        prop_assert_eq!(f.legs(), g.arms());
    }

    #[test]
    fn lr_is_symmetric(a in partition_strategy(5, 3), b in partition_strategy(5, 3)) {
        prop_assert_eq!(lr_coefficients(&a, &b), lr_coefficients(&b, &a));
    }

    #[test]
    fn lr_weights_add(a in partition_strategy(5, 3), b in partition_strategy(5, 3)) {
        let total = a.weight() + b.weight();
        for (nu, c) in lr_coefficients(&a, &b).terms() {
            prop_assert!(*c > 0);
            prop_assert_eq!(nu.weight(), total);
        }
    }

    #[test]
    fn pieri_rule_structure(a in partition_strategy(6, 4), strip in 0u32..5) {
        // Multiplying by a single row gives coefficient one on exactly the
        // horizontal-strip extensions.
        let row = Partition::row(strip);
        for (nu, c) in lr_coefficients(&a, &row).terms() {
            prop_assert_eq!(*c, 1u64);
            prop_assert!(nu.contains(&a));
            // Horizontal strip: each new row stays within the old row above.
            for i in 1..nu.len() {
                prop_assert!(nu.part(i) <= a.part(i - 1));
            }
        }
    }

    #[test]
    fn lr_dimension_identity(a in partition_strategy(4, 3), b in partition_strategy(4, 3)) {
        let r = (a.len() + b.len()).max(1) as u32;
        let sum: u64 = lr_coefficients(&a, &b)
            .terms()
            .iter()
            .map(|(nu, &c)| c * weyl_dim(nu, r))
            .sum();
        prop_assert_eq!(sum, weyl_dim(&a, r) * weyl_dim(&b, r));
    }

    #[test]
    fn chow_product_commutes(
        a in partition_strategy(4, 3),
        b in partition_strategy(4, 3),
    ) {
        let gr = Grassmannian::new(3, 9).unwrap();
        prop_assume!(gr.fits(&a) && gr.fits(&b));
        let ca = ChowClass::schubert(gr, a).unwrap();
        let cb = ChowClass::schubert(gr, b).unwrap();
        prop_assert_eq!(ca.mul(&cb).unwrap(), cb.mul(&ca).unwrap());
    }

    #[test]
    fn chow_product_associates(
        a in partition_strategy(3, 3),
        b in partition_strategy(3, 3),
        c in partition_strategy(3, 3),
    ) {
        let gr = Grassmannian::new(3, 9).unwrap();
        prop_assume!(gr.fits(&a) && gr.fits(&b) && gr.fits(&c));
        let ca = ChowClass::schubert(gr, a).unwrap();
        let cb = ChowClass::schubert(gr, b).unwrap();
        let cc = ChowClass::schubert(gr, c).unwrap();
        prop_assert_eq!(
            ca.mul(&cb).unwrap().mul(&cc).unwrap(),
            ca.mul(&cb.mul(&cc).unwrap()).unwrap()
        );
    }

    #[test]
    fn chow_truncation_matches_full_expansion(
        a in partition_strategy(5, 3),
        b in partition_strategy(5, 3),
    ) {
        let gr = Grassmannian::new(3, 10).unwrap();
        prop_assume!(gr.fits(&a) && gr.fits(&b));
        let product = ChowClass::schubert(gr, a.clone())
            .unwrap()
            .mul(&ChowClass::schubert(gr, b.clone()).unwrap())
            .unwrap();
        for (nu, c) in lr_coefficients(&a, &b).terms() {
            let expected = if gr.fits(nu) { *c as i64 } else { 0 };
            prop_assert_eq!(product.coefficient(nu), expected);
        }
    }

    #[test]
    fn complement_is_an_involution(a in partition_strategy(6, 3)) {
        let gr = Grassmannian::new(3, 9).unwrap();
        prop_assume!(gr.fits(&a));
        let c = complement(&a, gr).unwrap();
        prop_assert_eq!(complement(&c, gr).unwrap(), a.clone());
        prop_assert_eq!(a.weight() + c.weight(), gr.dim());
    }

    #[test]
    fn whitney_formula(d1 in 1u32..4, d2 in 1u32..4) {
        let gr = Grassmannian::new(3, 8).unwrap();
        let a = Bundle::SubDual.sym(d1);
        let b = Bundle::Sub.wedge(d2);
        let sum = total_chern(&a.clone().sum(b.clone()), gr).unwrap();
        let product = total_chern(&a, gr).unwrap().mul(&total_chern(&b, gr).unwrap());
        prop_assert_eq!(sum, product);
    }

    #[test]
    fn tensor_decomposition_dimensions(k1 in 0u32..4, k2 in 0u32..4) {
        let a = wedge_sym2(k1, 3).unwrap();
        let b = wedge_sym2(k2, 3).unwrap();
        let product = tensor_schur(&a, &b).unwrap();
        prop_assert_eq!(product.dimension(), a.dimension() * b.dimension());
    }

    #[test]
    fn chow_class_json_round_trip(
        a in partition_strategy(5, 3),
        coeff in -1000i64..1000,
    ) {
        let gr = Grassmannian::new(3, 10).unwrap();
        prop_assume!(gr.fits(&a) && coeff != 0);
        let class = ChowClass::from_terms(gr, [(a, coeff)]).unwrap();
        let json = serde_json::json!({
            "grassmannian": class.grassmannian(),
            "terms": class
                .sorted_desc()
                .into_iter()
                .map(|(p, c)| serde_json::json!({"partition": p, "coeff": c}))
                .collect::<Vec<_>>(),
        });
        let text = serde_json::to_string(&json).unwrap();
        let back: serde_json::Value = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(json, back);
    }
}

#[test]
fn plucker_degree_matches_hook_length_count() {
    // The top power of σ₁ integrates to the number of standard fillings of
    // the box; the hook length formula counts those independently.
    for (k, n) in [(2u32, 5u32), (2, 6), (3, 7), (3, 8), (3, 9)] {
        let gr = Grassmannian::new(k, n).unwrap();
        let sigma1 = ChowClass::schubert(gr, Partition::row(1)).unwrap();
        let mut acc = ChowClass::one(gr);
        for _ in 0..gr.dim() {
            acc = acc.mul(&sigma1).unwrap();
        }
        let rows = k as u128;
        let cols = (n - k) as u128;
        let cells = rows * cols;
        let mut numerator: u128 = 1;
        for v in 1..=cells {
            numerator = numerator.checked_mul(v).expect("fits u128");
        }
        let mut hooks: u128 = 1;
        for r in 0..rows {
            for c in 0..cols {
                hooks *= rows + cols - 1 - r - c;
            }
        }
        assert_eq!(
            acc.integrate() as u128,
            numerator / hooks,
            "degree of Gr({k},{n})"
        );
    }
}
