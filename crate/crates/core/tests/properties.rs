//! Property tests for the invariants of each module.

use std::collections::BTreeMap;

use parabolic_strata::cover::{galois_twist, pullback, pushforward, CoverSpec};
use parabolic_strata::exact::span_rank;
use parabolic_strata::flagcoh::{
    all_parabolics, flag_poincare, levi_components, pic_rank_flag, simple_types_up_to,
    weyl_poincare, CartanType,
};
use parabolic_strata::parabolic::{
    is_generic, par_degree, par_slope, Genericity, ParabolicDatum, PointWeights,
};
use parabolic_strata::strata::{
    codim_bound, enumerate_matrices, evenly_weighted, flag_dimension,
    matrix_to_multiplicity_system, moduli_dimension, point_stratum_indices, stratum_dimension,
    ModuliSpec,
};
use parabolic_strata::{Cyclotomic, ExactMatrix, Field, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d))
}

fn cyclotomic(order: u32) -> impl Strategy<Value = Cyclotomic> {
    let deg = parabolic_strata::exact::euler_totient(order) as usize;
    prop::collection::vec(rational(), deg)
        .prop_map(move |c| Cyclotomic::from_coeffs(order, c).unwrap())
}

fn weight() -> impl Strategy<Value = Rational> {
    (1i64..=12).prop_flat_map(|den| (0..den).prop_map(move |n| Rational::new(n, den)))
}

/// Point weights of total `rank` with at most three steps.
fn point(rank: u32) -> impl Strategy<Value = PointWeights> {
    (
        prop::collection::btree_set(weight(), 1..=3usize),
        prop::collection::vec(1u32..=rank, 3),
    )
        .prop_filter_map("needs a valid composition", move |(ws, raw)| {
            let ws: Vec<Rational> = ws.into_iter().collect();
            let l = ws.len().min(rank as usize);
            let ws = ws[..l].to_vec();
            // composition of rank into l parts from the raw cut values
            let mut cuts: Vec<u32> = raw[..l - 1]
                .iter()
                .map(|c| c % rank)
                .filter(|&c| c > 0)
                .collect();
            cuts.sort();
            cuts.dedup();
            if cuts.len() != l - 1 {
                return None;
            }
            let mut prev = 0;
            let mults: Vec<u32> = cuts
                .iter()
                .chain([&rank])
                .map(|&c| {
                    let m = c - prev;
                    prev = c;
                    m
                })
                .collect();
            PointWeights::from_parts(ws, mults).ok()
        })
}

/// `(d, s, m)` with `m` a composition of `d * s` into at most
/// three parts.
fn margins(ds: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = (u32, u32, Vec<u32>)> {
    (ds, 1u32..=3).prop_flat_map(|(d, s)| {
        let r = d * s;
        (1..=r.min(3) as usize).prop_flat_map(move |l| {
            prop::sample::subsequence((1..r).collect::<Vec<u32>>(), l - 1).prop_map(move |cuts| {
                let mut prev = 0;
                let m = cuts
                    .iter()
                    .chain([&r])
                    .map(|&c| {
                        let x = c - prev;
                        prev = c;
                        x
                    })
                    .collect();
                (d, s, m)
            })
        })
    })
}

fn datum() -> impl Strategy<Value = ParabolicDatum> {
    (1u32..=5, -8i64..=8).prop_flat_map(|(r, deg)| {
        prop::collection::vec(point(r), 0..=3).prop_map(move |pts| {
            let points = pts
                .into_iter()
                .enumerate()
                .map(|(i, p)| (format!("p{i}"), p))
                .collect();
            ParabolicDatum::new(r, deg, points).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational()) {
        prop_assert_eq!((a.clone() + b.clone()) - b.clone(), a.clone());
        if !a.is_zero() {
            prop_assert!(a.times(&a.inverse()).is_one());
        }
        let s = a.to_string();
        prop_assert_eq!(s.parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn cyclotomic_inverse_and_conjugation(
        (order, x, y) in (1u32..=12).prop_flat_map(|o| (Just(o), cyclotomic(o), cyclotomic(o)))
    ) {
        if !x.is_zero() {
            prop_assert!(x.times(&x.inverse()).is_one());
        }
        prop_assert_eq!(x.times(&y).conj(), x.conj().times(&y.conj()));
        prop_assert_eq!(x.conj().conj(), x.clone());
        // x * conj(x) is fixed by conjugation
        let n = x.times(&x.conj());
        prop_assert_eq!(n.conj(), n);
        prop_assert!(Cyclotomic::zeta(order).unwrap().pow(order as u64).is_one());
    }

    #[test]
    fn kernel_dimension_and_vectors(rows in 1usize..=5, cols in 1usize..=5, seed in prop::collection::vec(-3i64..=3, 25)) {
        let entries: Vec<Vec<Rational>> = (0..rows)
            .map(|i| (0..cols).map(|j| Rational::integer(seed[i * 5 + j])).collect())
            .collect();
        let m = ExactMatrix::from_rows(entries.clone(), Rational::zero()).unwrap();
        let ker = m.kernel();
        for v in &ker {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Field::is_zero));
        }
        prop_assert_eq!(span_rank(&ker, &Rational::zero()), ker.len());
        prop_assert_eq!(ker.len(), cols - independent_rank(entries));
    }

    #[test]
    fn generic_witness_has_equal_slope(d in datum()) {
        if let Genericity::NonGeneric(w) = is_generic(&d) {
            prop_assert!(w.sub_rank > 0 && w.sub_rank < d.rank());
            let mut sub = Rational::integer(w.sub_degree);
            for (id, ns) in &w.sub_multiplicities {
                let pw = &d.points()[id];
                prop_assert_eq!(ns.iter().sum::<u32>(), w.sub_rank);
                for (e, &n) in pw.entries().iter().zip(ns) {
                    prop_assert!(n <= e.multiplicity);
                    sub = sub + e.weight.clone() * Rational::integer(n as i64);
                }
            }
            prop_assert_eq!(sub / Rational::integer(w.sub_rank as i64), par_slope(&d));
        }
        if d.rank() == 1 {
            prop_assert!(is_generic(&d).is_generic());
        }
    }

    #[test]
    fn pushforward_preserves_parabolic_degree(
        deg in 1u32..=4,
        rank in 1u32..=3,
        e in -5i64..=5,
        pts in prop::collection::vec(point(3), 8),
        twist in 0i64..4,
    ) {
        let cover = CoverSpec::standard(deg, &["a", "b"]).unwrap();
        let mut points = BTreeMap::new();
        let mut k = 0;
        for (_, fibre) in cover.fibers() {
            for q in fibre {
                // rescale each sampled point to the chosen rank
                let p = &pts[k % pts.len()];
                let w = PointWeights::new(vec![(p.weights()[0].clone(), rank)]).unwrap();
                points.insert(q.clone(), w);
                k += 1;
            }
        }
        let f = ParabolicDatum::new(rank, e, points).unwrap();
        let down = pushforward(&cover, &f).unwrap();
        prop_assert_eq!(par_degree(&down), par_degree(&f));
        prop_assert_eq!(down.rank(), deg * rank);
        prop_assert_eq!(par_slope(&galois_twist(&cover, &f, twist).unwrap()), par_slope(&f));
        let back = pushforward(&cover, &pullback(&cover, &down).unwrap()).unwrap();
        prop_assert_eq!(par_degree(&back), par_degree(&down) * Rational::integer(deg as i64));
    }

    #[test]
    fn matrices_satisfy_conditions((d, s, m) in margins(1..=3)) {
        let r = d * s;
        let w = evenly_weighted(&m);
        for t in point_stratum_indices(m.len(), r, d) {
            for mat in enumerate_matrices(&t, &w, r, d) {
                prop_assert!(mat.satisfies_support(&t));
                prop_assert!(mat.satisfies_margins(s, &m));
                let fibres = matrix_to_multiplicity_system(&mat, &w).unwrap();
                prop_assert!(fibres.iter().all(|f| f.total() == s));
            }
        }
    }

    #[test]
    fn strata_respect_the_bound(g in 2u32..=4, (d, s, m) in margins(2..=3)) {
        let r = d * s;
        let w = evenly_weighted(&m);
        let spec = ModuliSpec::new(g, r, 0, BTreeMap::from([("p".to_string(), w.clone())])).unwrap();
        let dim_m = moduli_dimension(&spec);
        let bound = codim_bound(g, r, d);
        for t in point_stratum_indices(m.len(), r, d) {
            for mat in enumerate_matrices(&t, &w, r, d) {
                let dim = stratum_dimension(&spec, d, &BTreeMap::from([("p".to_string(), mat.clone())])).unwrap();
                prop_assert!(Rational::integer(dim_m - dim) >= bound.clone());
                let rows: u64 = mat.rows().iter().map(|row| {
                    let kept: Vec<u32> = row.iter().copied().filter(|&n| n > 0).collect();
                    flag_dimension(&kept)
                }).sum();
                prop_assert!(rows <= flag_dimension(&m));
            }
        }
    }
}

/// Rank by elimination choosing the pivot in the last available row, a
/// different rule from the library's.
fn independent_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).rev().find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, rank);
        let pivot = rows[rank][c].clone();
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() / pivot.clone();
                let pivot_row = rows[rank].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn flag_polynomials_for_all_small_types() {
    for st in simple_types_up_to(5) {
        let t = CartanType::new(vec![st]);
        let w = weyl_poincare(&t);
        for i in all_parabolics(&t) {
            let p = flag_poincare(&t, &i).unwrap();
            assert!(p.is_palindromic(), "{t}");
            assert!(p.coeffs().iter().all(|&c| c >= 0));
            assert_eq!(p.coeff(1), pic_rank_flag(&t, &i).unwrap() as i64);
            let levi = levi_components(&t, &i).unwrap();
            assert_eq!(levi.rank() as usize, i.size());
            assert_eq!(p.mul(&weyl_poincare(&levi)), w);
        }
    }
}
