//! Small multivariate polynomial arithmetic over the integers, used to
//! expand splitting-principle root products and rewrite them in the
//! elementary symmetric basis. Only a handful of variables (Chern roots of
//! a low-rank bundle) ever appear, so a map keyed by exponent vectors is
//! plenty.

use std::collections::BTreeMap;

/// Polynomial in `nvars` variables; keys are exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut p = Self::zero(nvars);
        if c != 0 {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, expo: Vec<u32>, c: i64) {
        debug_assert_eq!(expo.len(), self.nvars);
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(expo) {
            Entry::Occupied(mut o) => {
                let v = o
                    .get()
                    .checked_add(c)
                    .expect("polynomial coefficient overflow");
                if v == 0 {
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

    /// 1 + Σ coeffs_i · x_i, the total Chern factor of a single root.
    pub fn one_plus_root(nvars: usize, coeffs: &[i64]) -> Self {
        let mut p = Self::constant(nvars, 1);
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                let mut e = vec![0; nvars];
                e[i] = 1;
                p.add_term(e, c);
            }
        }
        p
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let expo: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let c = ca.checked_mul(cb).expect("polynomial coefficient overflow");
                out.add_term(expo, c);
            }
        }
        out
    }

    fn sub_scaled(&mut self, other: &MultiPoly, factor: i64) {
        for (e, &c) in &other.terms {
            let scaled = c
                .checked_mul(factor)
                .expect("polynomial coefficient overflow");
            self.add_term(e.clone(), -scaled);
        }
    }

    /// The i-th elementary symmetric polynomial e_i(x_1..x_nvars).
    pub fn elementary(nvars: usize, i: usize) -> Self {
        let mut p = MultiPoly::zero(nvars);
        subsets(nvars, i, &mut |subset| {
            let mut e = vec![0; nvars];
            for &v in subset {
                e[v] = 1;
            }
            p.add_term(e, 1);
        });
        p
    }
}

fn subsets(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for v in start..n {
            acc.push(v);
            rec(n, k, v + 1, acc, f);
            acc.pop();
        }
    }
    rec(n, k, 0, &mut Vec::new(), f);
}

/// Rewrites a symmetric polynomial as a polynomial in the elementary
/// symmetric functions, by repeated subtraction of the e-monomial whose
/// leading term matches. Returns a map from e-exponent vectors
/// (powers of e_1..e_nvars) to coefficients.
///
/// Panics if the input is not symmetric (a leading exponent that is not
/// weakly decreasing can never be cancelled).
pub(crate) fn to_elementary_basis(poly: &MultiPoly) -> BTreeMap<Vec<u32>, i64> {
    let nvars = poly.nvars;
    let mut work = poly.clone();
    let mut out: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    while !work.is_zero() {
        let (lead, &coeff) = work
            .terms
            .iter()
            .next_back()
            .expect("nonzero polynomial has a leading term");
        let lead = lead.clone();
        assert!(
            lead.windows(2).all(|w| w[0] >= w[1]),
            "polynomial is not symmetric: leading exponent {lead:?}"
        );
        // x^(a1,...,an) is the leading monomial of e_1^(a1-a2) ... e_n^(an).
        let mut epow = vec![0u32; nvars];
        for i in 0..nvars {
            let next = if i + 1 < nvars { lead[i + 1] } else { 0 };
            epow[i] = lead[i] - next;
        }
        let mut emono = MultiPoly::constant(nvars, 1);
        for (i, &pw) in epow.iter().enumerate() {
            let e = MultiPoly::elementary(nvars, i + 1);
            for _ in 0..pw {
                emono = emono.mul(&e);
            }
        }
        work.sub_scaled(&emono, coeff);
        *out.entry(epow).or_insert(0) += coeff;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Exponent iterator over sums of roots: all multisets (for symmetric
/// powers) or subsets (for wedge powers) of size d drawn from nvars roots,
/// reported as count-per-root vectors.
pub(crate) fn root_multisets(nvars: usize, d: usize, strict: bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(
        nvars: usize,
        d: usize,
        start: usize,
        strict: bool,
        acc: &mut Vec<u32>,
        chosen: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if chosen == d {
            out.push(acc.clone());
            return;
        }
        for v in start..nvars {
            acc[v] += 1;
            rec(
                nvars,
                d,
                if strict { v + 1 } else { v },
                strict,
                acc,
                chosen + 1,
                out,
            );
            acc[v] -= 1;
        }
    }
    rec(nvars, d, 0, strict, &mut vec![0; nvars], 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_leading_terms() {
        let e2 = MultiPoly::elementary(3, 2);
        // x1x2 + x1x3 + x2x3
        assert_eq!(e2.terms.len(), 3);
    }

    #[test]
    fn reduce_power_sum() {
        // p2 = x² + y² = e1² − 2e2.
        let mut p2 = MultiPoly::zero(2);
        p2.add_term(vec![2, 0], 1);
        p2.add_term(vec![0, 2], 1);
        let basis = to_elementary_basis(&p2);
        assert_eq!(basis.get(&vec![2, 0]), Some(&1));
        assert_eq!(basis.get(&vec![0, 1]), Some(&-2));
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn sym2_root_count() {
        assert_eq!(root_multisets(3, 2, false).len(), 6);
        assert_eq!(root_multisets(3, 2, true).len(), 3);
        assert_eq!(root_multisets(4, 2, false).len(), 10);
    }

    #[test]
    #[should_panic(expected = "not symmetric")]
    fn asymmetric_input_rejected() {
        let mut p = MultiPoly::zero(2);
        p.add_term(vec![0, 1], 1);
        to_elementary_basis(&p);
    }
}
