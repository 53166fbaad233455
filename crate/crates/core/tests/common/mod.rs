#![allow(dead_code)]

use proptest::prelude::*;
use qlogic_core::linalg::{inner, is_zero_vec, rref_rows};
use qlogic_core::{GaussianRational, Subspace, Vector};

pub fn gr(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> GaussianRational {
    GaussianRational::from_fractions(re_n, re_d, im_n, im_d)
}

/// Small Gaussian rationals; zero is common so that sparse vectors show up.
pub fn arb_scalar() -> impl Strategy<Value = GaussianRational> {
    prop_oneof![
        1 => Just(GaussianRational::from(0)),
        4 => (-3i64..=3, 1i64..=3, -3i64..=3, 1i64..=3).prop_map(|(a, b, c, d)| gr(a, b, c, d)),
    ]
}

pub fn arb_vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(arb_scalar(), n)
}

pub fn arb_subspace_in(n: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(arb_vector(n), 0..=n)
        .prop_map(move |vs| Subspace::from_span(n, vs).unwrap())
}

pub fn arb_subspace() -> impl Strategy<Value = Subspace> {
    (2usize..=4).prop_flat_map(arb_subspace_in)
}

pub fn arb_pair() -> impl Strategy<Value = (Subspace, Subspace)> {
    (2usize..=4).prop_flat_map(|n| (arb_subspace_in(n), arb_subspace_in(n)))
}

pub fn arb_triple() -> impl Strategy<Value = (Subspace, Subspace, Subspace)> {
    (2usize..=4).prop_flat_map(|n| (arb_subspace_in(n), arb_subspace_in(n), arb_subspace_in(n)))
}

/// Intersection by the Zassenhaus algorithm: row-reduce `[a | a]` stacked on
/// `[b | 0]`; rows whose left half vanishes carry the intersection in the
/// right half. Independent of the orthocomplement route used by `meet`.
pub fn zassenhaus_intersection(a: &Subspace, b: &Subspace) -> Subspace {
    let n = a.ambient_dim();
    let zero = GaussianRational::from(0);
    let mut rows = Vec::new();
    for v in a.basis() {
        rows.push(v.iter().chain(v.iter()).cloned().collect::<Vector>());
    }
    for v in b.basis() {
        rows.push(
            v.iter()
                .cloned()
                .chain(std::iter::repeat_n(zero.clone(), n))
                .collect(),
        );
    }
    let ech = rref_rows(rows, 2 * n);
    let basis = ech
        .rows
        .into_iter()
        .filter(|r| is_zero_vec(&r[..n]))
        .map(|r| r[n..].to_vec())
        .collect();
    Subspace::from_span(n, basis).unwrap()
}

/// Exact Gram-Schmidt; zero remainders are dropped.
pub fn gram_schmidt(vectors: &[Vector]) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for u in &out {
            let coeff = inner(u, &w).checked_div(&inner(u, u)).unwrap();
            for (wi, ui) in w.iter_mut().zip(u) {
                *wi -= &(&coeff * ui);
            }
        }
        if !is_zero_vec(&w) {
            out.push(w);
        }
    }
    out
}

/// Linear combination `sum c_i v_i`.
pub fn combine(coeffs: &[GaussianRational], vectors: &[Vector], n: usize) -> Vector {
    let mut out = vec![GaussianRational::from(0); n];
    for (c, v) in coeffs.iter().zip(vectors) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += &(c * x);
        }
    }
    out
}
