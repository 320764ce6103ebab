//! Independent oracles for the integration suites. Everything here works
//! with explicit polynomials and tableaux — no Littlewood-Richardson rule,
//! no Frobenius shortcut — so agreement with the library is a genuine
//! cross-check rather than the same algorithm twice.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use fano_schubert::Partition;

/// Polynomial in `nvars` variables with integer coefficients, keyed by
/// exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u8>, i64>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, expo: Vec<u8>, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(expo) {
            Entry::Occupied(mut o) => {
                let v = *o.get() + c;
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

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let expo: Vec<u8> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(expo, ca * cb);
            }
        }
        out
    }

    pub fn sub_scaled(&mut self, other: &Poly, factor: i64) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), -c * factor);
        }
    }
}

/// Schur polynomial s_λ(x_1..x_nvars) as the generating function of
/// semistandard tableaux of shape λ with entries in 1..=nvars.
pub fn schur_poly(lambda: &Partition, nvars: usize) -> Poly {
    let mut out = Poly::zero(nvars);
    if lambda.len() > nvars {
        return out; // no column-strict filling exists
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut above: Vec<u8> = Vec::new();
    let mut content = vec![0u8; nvars];
    fill_rows(&shape, 0, nvars as u8, &mut above, &mut content, &mut out);
    out
}

fn fill_rows(
    shape: &[usize],
    row: usize,
    nvars: u8,
    above: &mut Vec<u8>,
    content: &mut Vec<u8>,
    out: &mut Poly,
) {
    if row == shape.len() {
        out.add_term(content.clone(), 1);
        return;
    }
    let len = shape[row];
    let mut current: Vec<u8> = Vec::with_capacity(len);
    fill_cells(shape, row, 0, nvars, above, &mut current, content, out);
}

#[allow(clippy::too_many_arguments)]
fn fill_cells(
    shape: &[usize],
    row: usize,
    col: usize,
    nvars: u8,
    above: &mut Vec<u8>,
    current: &mut Vec<u8>,
    content: &mut Vec<u8>,
    out: &mut Poly,
) {
    if col == shape[row] {
        let saved = std::mem::replace(above, current.clone());
        fill_rows(shape, row + 1, nvars, above, content, out);
        *above = saved;
        return;
    }
    let mut min = 1u8;
    if col > 0 {
        min = min.max(current[col - 1]); // weakly increasing along the row
    }
    if row > 0 {
        min = min.max(above[col] + 1); // strictly increasing down the column
    }
    for v in min..=nvars {
        current.push(v);
        content[(v - 1) as usize] += 1;
        fill_cells(shape, row, col + 1, nvars, above, current, content, out);
        content[(v - 1) as usize] -= 1;
        current.pop();
    }
}

/// Greedy expansion of a symmetric polynomial into Schur polynomials: the
/// lexicographically greatest monomial of s_ν is x^ν, so repeatedly
/// subtracting the Schur polynomial of the leading exponent terminates and
/// produces the (unique) expansion.
pub fn schur_decompose(mut poly: Poly, nvars: usize) -> BTreeMap<Partition, i64> {
    let mut cache: HashMap<Partition, Poly> = HashMap::new();
    let mut out = BTreeMap::new();
    while !poly.is_zero() {
        let (lead, &coeff) = poly.terms.iter().next_back().expect("nonzero");
        assert!(
            lead.windows(2).all(|w| w[0] >= w[1]),
            "leading monomial {lead:?} is not dominant; input was not symmetric"
        );
        let nu = Partition::new(lead.iter().map(|&e| e as u32).collect::<Vec<_>>())
            .expect("dominant monomial is a partition");
        let s = cache
            .entry(nu.clone())
            .or_insert_with(|| schur_poly(&nu, nvars))
            .clone();
        poly.sub_scaled(&s, coeff);
        *out.entry(nu).or_insert(0) += coeff;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Product expansion oracle: coefficients of σ_λ·σ_μ read off from actual
/// Schur polynomials in `nvars` variables. Valid when nvars is at least
/// the number of rows any product term can have.
pub fn lr_oracle(lambda: &Partition, mu: &Partition, nvars: usize) -> BTreeMap<Partition, i64> {
    assert!(lambda.len() + mu.len() <= nvars, "not enough variables");
    let product = schur_poly(lambda, nvars).mul(&schur_poly(mu, nvars));
    schur_decompose(product, nvars)
}

/// Character of Λ^k(Sym² C³) in three variables: the sum over k-subsets of
/// the six weights x_i x_j (i ≤ j) of Sym².
pub fn wedge_sym2_character(k: usize) -> Poly {
    let weights: Vec<Vec<u8>> = vec![
        vec![2, 0, 0],
        vec![1, 1, 0],
        vec![1, 0, 1],
        vec![0, 2, 0],
        vec![0, 1, 1],
        vec![0, 0, 2],
    ];
    let mut out = Poly::zero(3);
    let mut chosen = Vec::new();
    subsets(weights.len(), k, 0, &mut chosen, &mut |subset| {
        let mut expo = vec![0u8; 3];
        for &i in subset {
            for (s, w) in expo.iter_mut().zip(&weights[i]) {
                *s += w;
            }
        }
        out.add_term(expo, 1);
    });
    out
}

fn subsets(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if acc.len() == k {
        f(acc);
        return;
    }
    for v in start..n {
        acc.push(v);
        subsets(n, k, v + 1, acc, f);
        acc.pop();
    }
}

/// Deterministic xorshift generator so "random" suites are reproducible.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// Random partition with weight ≤ max_weight and at most max_parts parts.
pub fn random_partition(rng: &mut Rng, max_weight: u64, max_parts: usize) -> Partition {
    let weight = rng.below(max_weight + 1);
    let mut remaining = weight;
    let mut parts: Vec<u32> = Vec::new();
    let mut cap = weight.max(1);
    while remaining > 0 && parts.len() < max_parts {
        let hi = remaining.min(cap);
        let part = 1 + rng.below(hi);
        parts.push(part as u32);
        remaining -= part;
        cap = part;
    }
    // Leftover cells get absorbed by padding earlier parts when possible;
    // otherwise they are simply dropped — fine for a sampler.
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted descending")
}
