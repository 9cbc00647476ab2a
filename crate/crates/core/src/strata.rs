//! Fixed-point strata of a nontrivial `d`-torsion line bundle acting on the
//! moduli of parabolic bundles, and the dimension count comparing them with
//! the whole moduli space.
//!
//! At a point `p` with `l` weights a stratum is indexed by a `d`-tuple of
//! nonempty weight subsets `(lambda_1, ..., lambda_d)`, each of size at most
//! `r/d`, together with a `d x l` matrix `n` of non-negative integers such
//! that
//!
//! * (a) `n[j][k] = 0` exactly when weight `k` is not in `lambda_j`;
//! * (b) each row sums to `r/d` and column `k` sums to `m_k`.
//!
//! Several points are handled independently and combined by taking
//! products.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Rational;
use crate::parabolic::{
    advance_odometer, is_generic, ParabolicDatum, ParabolicError, PointId, PointWeights,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(u32),
    #[error("cover degree {d} does not divide rank {r}")]
    DoesNotDivide { r: u32, d: u32 },
    #[error("cover degree must be at least 2, got {0}")]
    DegreeTooSmall(u32),
    #[error("delta {delta} is not the residue of degree {degree} modulo {rank}")]
    DeltaMismatch { delta: u32, degree: i64, rank: u32 },
    #[error("malformed multiplicity matrix: {0}")]
    MalformedMatrix(String),
    #[error("invalid stratum index: {0}")]
    InvalidIndex(String),
    #[error("no matrix supplied for point {0}")]
    MissingPoint(PointId),
    #[error(transparent)]
    Parabolic(#[from] ParabolicError),
}

/// Genus, rank, determinant degree and parabolic data of a moduli problem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuliSpec {
    genus: u32,
    rank: u32,
    xi_degree: i64,
    delta: u32,
    points: BTreeMap<PointId, PointWeights>,
}

impl ModuliSpec {
    pub fn new(
        genus: u32,
        rank: u32,
        xi_degree: i64,
        points: BTreeMap<PointId, PointWeights>,
    ) -> Result<Self, StrataError> {
        if genus < 2 {
            return Err(StrataError::GenusTooSmall(genus));
        }
        // rank and multiplicity sums
        ParabolicDatum::new(rank, xi_degree, points.clone())?;
        Ok(ModuliSpec {
            genus,
            rank,
            xi_degree,
            delta: xi_degree.rem_euclid(rank as i64) as u32,
            points,
        })
    }

    /// Like [`ModuliSpec::new`], also checking a caller-supplied `delta`.
    pub fn with_delta(
        genus: u32,
        rank: u32,
        xi_degree: i64,
        delta: u32,
        points: BTreeMap<PointId, PointWeights>,
    ) -> Result<Self, StrataError> {
        let spec = ModuliSpec::new(genus, rank, xi_degree, points)?;
        if spec.delta != delta {
            return Err(StrataError::DeltaMismatch {
                delta,
                degree: xi_degree,
                rank,
            });
        }
        Ok(spec)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn xi_degree(&self) -> i64 {
        self.xi_degree
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn points(&self) -> &BTreeMap<PointId, PointWeights> {
        &self.points
    }

    pub fn datum(&self) -> ParabolicDatum {
        ParabolicDatum::new(self.rank, self.xi_degree, self.points.clone())
            .expect("validated on construction")
    }

    fn check_degree(&self, d: u32) -> Result<u32, StrataError> {
        if d < 2 {
            return Err(StrataError::DegreeTooSmall(d));
        }
        if !self.rank.is_multiple_of(d) {
            return Err(StrataError::DoesNotDivide { r: self.rank, d });
        }
        Ok(self.rank / d)
    }
}

/// `(lambda_1, ..., lambda_d)` at one point; each subset holds 0-based
/// positions into the point's weight list, increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetTuple(pub Vec<Vec<usize>>);

/// One [`SubsetTuple`] per marked point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StratumIndex(pub BTreeMap<PointId, SubsetTuple>);

/// `d x l` matrix `n[j][k]` of multiplicities along a fibre.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiplicityMatrix(pub Vec<Vec<u32>>);

impl MultiplicityMatrix {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.0
    }

    pub fn row_sums(&self) -> Vec<u32> {
        self.0.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn column_sums(&self) -> Vec<u32> {
        let width = self.0.first().map_or(0, Vec::len);
        (0..width)
            .map(|k| self.0.iter().map(|r| r[k]).sum())
            .collect()
    }

    /// Condition (a) against a subset tuple.
    pub fn satisfies_support(&self, t: &SubsetTuple) -> bool {
        self.0.len() == t.0.len()
            && self.0.iter().zip(&t.0).all(|(row, lambda)| {
                row.iter()
                    .enumerate()
                    .all(|(k, &n)| (n != 0) == lambda.contains(&k))
            })
    }

    /// Condition (b): rows sum to `r/d`, columns to the multiplicities.
    pub fn satisfies_margins(&self, row_sum: u32, mults: &[u32]) -> bool {
        self.0.iter().all(|r| r.len() == mults.len())
            && self.row_sums().iter().all(|&s| s == row_sum)
            && self.column_sums() == mults
    }
}

/// Nonempty subsets of `{0, ..., len-1}` with at most `max_size` elements,
/// ordered lexicographically as increasing index lists.
pub fn weight_subsets(len: usize, max_size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, len: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for i in start..len {
            cur.push(i);
            out.push(cur.clone());
            if cur.len() < max {
                rec(i + 1, len, max, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if max_size > 0 {
        rec(0, len, max_size, &mut Vec::new(), &mut out);
    }
    out
}

/// All `d`-tuples of admissible subsets at a point with `len` weights, in
/// lexicographic order.
pub fn point_stratum_indices(len: usize, r: u32, d: u32) -> Vec<SubsetTuple> {
    let subsets = weight_subsets(len, (r / d) as usize);
    let radices = vec![subsets.len(); d as usize];
    let mut digits = vec![0usize; d as usize];
    let mut out = Vec::new();
    if subsets.is_empty() {
        return out;
    }
    loop {
        out.push(SubsetTuple(
            digits.iter().map(|&i| subsets[i].clone()).collect(),
        ));
        if !advance_odometer(&mut digits, &radices) {
            break;
        }
    }
    out
}

/// Lazy product of per-point choices, last point varying fastest.
pub struct Product<T: Clone> {
    keys: Vec<PointId>,
    choices: Vec<Vec<T>>,
    digits: Vec<usize>,
    done: bool,
}

impl<T: Clone> Product<T> {
    fn new(per_point: Vec<(PointId, Vec<T>)>) -> Self {
        let done = per_point.iter().any(|(_, c)| c.is_empty());
        let (keys, choices): (Vec<_>, Vec<_>) = per_point.into_iter().unzip();
        let digits = vec![0; keys.len()];
        Product {
            keys,
            choices,
            digits,
            done,
        }
    }
}

impl<T: Clone> Iterator for Product<T> {
    type Item = BTreeMap<PointId, T>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let item = self
            .keys
            .iter()
            .zip(&self.choices)
            .zip(&self.digits)
            .map(|((k, c), &i)| (k.clone(), c[i].clone()))
            .collect();
        let radices: Vec<usize> = self.choices.iter().map(Vec::len).collect();
        if !advance_odometer(&mut self.digits, &radices) {
            self.done = true;
        }
        Some(item)
    }
}

/// Every stratum index over all marked points, produced lazily in
/// lexicographic order.
pub fn enumerate_stratum_indices(
    spec: &ModuliSpec,
    d: u32,
) -> Result<impl Iterator<Item = StratumIndex>, StrataError> {
    spec.check_degree(d)?;
    let per_point = spec
        .points
        .iter()
        .map(|(id, w)| (id.clone(), point_stratum_indices(w.len(), spec.rank, d)))
        .collect();
    Ok(Product::new(per_point).map(StratumIndex))
}

/// All matrices satisfying (a) and (b) for the subset tuple `t`, in
/// row-major lexicographic order. Possibly empty.
pub fn enumerate_matrices(
    t: &SubsetTuple,
    m: &PointWeights,
    r: u32,
    d: u32,
) -> Vec<MultiplicityMatrix> {
    let len = m.len();
    if d == 0 || !r.is_multiple_of(d) || t.0.len() != d as usize {
        return Vec::new();
    }
    let support: Vec<Vec<bool>> =
        t.0.iter()
            .map(|lambda| (0..len).map(|k| lambda.contains(&k)).collect())
            .collect();
    let mut search = MatrixSearch {
        support,
        len,
        col_left: m.multiplicities(),
        row_left: vec![r / d; d as usize],
        cells: vec![vec![0; len]; d as usize],
        out: Vec::new(),
    };
    search.fill(0);
    search.out
}

struct MatrixSearch {
    support: Vec<Vec<bool>>,
    len: usize,
    col_left: Vec<u32>,
    row_left: Vec<u32>,
    cells: Vec<Vec<u32>>,
    out: Vec<MultiplicityMatrix>,
}

impl MatrixSearch {
    fn fill(&mut self, pos: usize) {
        let rows = self.cells.len();
        if pos == rows * self.len {
            if self.col_left.iter().all(|&c| c == 0) {
                self.out.push(MultiplicityMatrix(self.cells.clone()));
            }
            return;
        }
        let (j, k) = (pos / self.len, pos % self.len);
        // support cells still to fill in this row need at least 1 each
        let later_support = (k + 1..self.len).filter(|&c| self.support[j][c]).count() as u32;
        let last_in_row = k + 1 == self.len;
        let last_row = j + 1 == rows;
        if !self.support[j][k] {
            if last_in_row && self.row_left[j] != 0 {
                return;
            }
            if last_row && self.col_left[k] != 0 {
                return;
            }
            self.fill(pos + 1);
            return;
        }
        let hi = self.row_left[j]
            .saturating_sub(later_support)
            .min(self.col_left[k]);
        for v in 1..=hi {
            if last_in_row && v != self.row_left[j] {
                continue;
            }
            if last_row && v != self.col_left[k] {
                continue;
            }
            self.cells[j][k] = v;
            self.row_left[j] -= v;
            self.col_left[k] -= v;
            self.fill(pos + 1);
            self.row_left[j] += v;
            self.col_left[k] += v;
        }
        self.cells[j][k] = 0;
    }
}

/// Reads row `j` of the matrix as the weighted multiplicities at `q_j`,
/// dropping zero entries.
pub fn matrix_to_multiplicity_system(
    mat: &MultiplicityMatrix,
    weights: &PointWeights,
) -> Result<Vec<PointWeights>, StrataError> {
    let d = mat.0.len() as u32;
    if d == 0 {
        return Err(StrataError::MalformedMatrix("no rows".into()));
    }
    if mat.0.iter().any(|r| r.len() != weights.len()) {
        return Err(StrataError::MalformedMatrix(format!(
            "rows must have {} entries",
            weights.len()
        )));
    }
    let r = weights.total();
    if !r.is_multiple_of(d) || !mat.satisfies_margins(r / d, &weights.multiplicities()) {
        return Err(StrataError::MalformedMatrix(format!(
            "margins do not match rows summing to {r}/{d} and columns {:?}",
            weights.multiplicities()
        )));
    }
    mat.0
        .iter()
        .map(|row| {
            let entries = row
                .iter()
                .zip(weights.entries())
                .filter(|(&n, _)| n > 0)
                .map(|(&n, e)| (e.weight.clone(), n))
                .collect();
            Ok(PointWeights::new(entries)?)
        })
        .collect()
}

/// Dimension of the partial flag variety of type `m`:
/// `sum_{i<l} m_i (m_{i+1} + ... + m_l)`.
pub fn flag_dimension(m: &[u32]) -> u64 {
    let mut tail: u64 = 0;
    let mut total: u64 = 0;
    for &x in m.iter().rev() {
        total += x as u64 * tail;
        tail += x as u64;
    }
    total
}

/// `(r^2 - 1)(g - 1) + sum_p flag_dimension(m_p)`.
pub fn moduli_dimension(spec: &ModuliSpec) -> i64 {
    let r = spec.rank as i64;
    let g = spec.genus as i64;
    let flags: u64 = spec
        .points
        .values()
        .map(|w| flag_dimension(&w.multiplicities()))
        .sum();
    (r * r - 1) * (g - 1) + flags as i64
}

fn row_flag_terms(mat: &MultiplicityMatrix) -> u64 {
    mat.0
        .iter()
        .map(|row| {
            let kept: Vec<u32> = row.iter().copied().filter(|&n| n > 0).collect();
            flag_dimension(&kept)
        })
        .sum()
}

/// `(g - 1)(r^2/d - 1)`: the non-parabolic part of a stratum's dimension.
fn stratum_base_dimension(spec: &ModuliSpec, d: u32) -> i64 {
    let r = spec.rank as i64;
    (spec.genus as i64 - 1) * (r * r / d as i64 - 1)
}

/// `(g - 1)(r^2/d - 1) + sum_p sum_j flag_dimension(row j of mats[p])`.
pub fn stratum_dimension(
    spec: &ModuliSpec,
    d: u32,
    mats: &BTreeMap<PointId, MultiplicityMatrix>,
) -> Result<i64, StrataError> {
    let row_sum = spec.check_degree(d)?;
    let mut total = stratum_base_dimension(spec, d);
    for (id, w) in &spec.points {
        let mat = mats
            .get(id)
            .ok_or_else(|| StrataError::MissingPoint(id.clone()))?;
        if mat.0.len() != d as usize || !mat.satisfies_margins(row_sum, &w.multiplicities()) {
            return Err(StrataError::MalformedMatrix(format!(
                "matrix at {id} violates the row/column sums"
            )));
        }
        total += row_flag_terms(mat) as i64;
    }
    if let Some(extra) = mats.keys().find(|k| !spec.points.contains_key(*k)) {
        return Err(StrataError::InvalidIndex(format!("unknown point {extra}")));
    }
    Ok(total)
}

/// The analytic lower bound `r^2 (g - 1)(1 - 1/d)`.
pub fn codim_bound(genus: u32, rank: u32, d: u32) -> Rational {
    let r = rank as i64;
    Rational::integer(r * r * (genus as i64 - 1)) * (Rational::one() - Rational::new(1, d as i64))
}

/// One nonempty stratum: an index, a matrix per point, and its dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub index: StratumIndex,
    pub matrices: BTreeMap<PointId, MultiplicityMatrix>,
    pub dimension: i64,
}

/// `(t, matrix, flag terms)` for every nonempty choice at one point.
fn point_strata(w: &PointWeights, r: u32, d: u32) -> Vec<(SubsetTuple, MultiplicityMatrix, u64)> {
    point_stratum_indices(w.len(), r, d)
        .into_iter()
        .flat_map(|t| {
            enumerate_matrices(&t, w, r, d).into_iter().map(move |m| {
                let terms = row_flag_terms(&m);
                (t.clone(), m, terms)
            })
        })
        .collect()
}

/// Every nonempty stratum, lazily over the product of points. Strata whose
/// matrix collection is empty are skipped.
pub fn strata(spec: &ModuliSpec, d: u32) -> Result<impl Iterator<Item = Stratum>, StrataError> {
    spec.check_degree(d)?;
    let base = stratum_base_dimension(spec, d);
    let per_point = spec
        .points
        .iter()
        .map(|(id, w)| (id.clone(), point_strata(w, spec.rank, d)))
        .collect();
    Ok(Product::new(per_point).map(move |choice| {
        let mut index = BTreeMap::new();
        let mut matrices = BTreeMap::new();
        let mut dimension = base;
        for (id, (t, m, terms)) in choice {
            index.insert(id.clone(), t);
            matrices.insert(id, m);
            dimension += terms as i64;
        }
        Stratum {
            index: StratumIndex(index),
            matrices,
            dimension,
        }
    }))
}

/// Comparison of the moduli dimension with its fixed-point strata.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodimReport {
    pub genus: u32,
    pub rank: u32,
    pub d: u32,
    pub delta: u32,
    pub generic: bool,
    #[serde(rename = "dim_M")]
    pub dim_moduli: i64,
    pub stratum_count: u64,
    /// `None` when no stratum is nonempty.
    pub max_stratum_dim: Option<i64>,
    pub codim: Option<i64>,
    pub bound: Rational,
    /// Exact codimension is at least the bound (vacuous without strata).
    pub bound_holds: bool,
    pub codim_at_least_three: bool,
    /// Whether the bound alone already gives 3.
    pub bound_at_least_three: bool,
}

/// Enumerates the strata point by point and reports the largest stratum
/// dimension, the exact codimension and the analytic bound. Since stratum
/// dimensions add over points, the maximum is taken per point.
pub fn codim_report(spec: &ModuliSpec, d: u32) -> Result<CodimReport, StrataError> {
    spec.check_degree(d)?;
    let dim_moduli = moduli_dimension(spec);
    let mut count: u64 = 1;
    let mut max_terms: Option<u64> = Some(0);
    for w in spec.points.values() {
        let choices = point_strata(w, spec.rank, d);
        count = count.saturating_mul(choices.len() as u64);
        let best = choices.iter().map(|(_, _, t)| *t).max();
        max_terms = match (max_terms, best) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
    }
    let max_stratum_dim = max_terms.map(|t| stratum_base_dimension(spec, d) + t as i64);
    let codim = max_stratum_dim.map(|m| dim_moduli - m);
    let bound = codim_bound(spec.genus, spec.rank, d);
    let three = Rational::integer(3);
    Ok(CodimReport {
        genus: spec.genus,
        rank: spec.rank,
        d,
        delta: spec.delta,
        generic: is_generic(&spec.datum()).is_generic(),
        dim_moduli,
        stratum_count: if max_terms.is_some() { count } else { 0 },
        max_stratum_dim,
        codim,
        bound: bound.clone(),
        bound_holds: codim.is_none_or(|c| Rational::integer(c) >= bound),
        codim_at_least_three: codim.is_none_or(|c| c >= 3),
        bound_at_least_three: bound >= three,
    })
}

/// Compositions of `r` into between 1 and `max_parts` positive parts, in
/// lexicographic order.
pub fn compositions(r: u32, max_parts: usize) -> Vec<Vec<u32>> {
    fn rec(left: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == parts {
            return;
        }
        for v in 1..=left {
            cur.push(v);
            rec(left - v, parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r > 0 {
        rec(r, max_parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Weights `0, 1/l, ..., (l-1)/l` attached to a multiplicity sequence.
pub fn evenly_weighted(mults: &[u32]) -> PointWeights {
    let l = mults.len() as i64;
    PointWeights::new(
        mults
            .iter()
            .enumerate()
            .map(|(k, &m)| (Rational::new(k as i64, l), m))
            .collect(),
    )
    .expect("evenly spaced weights are valid")
}

/// Parameter ranges for a codimension sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRange {
    pub genus: (u32, u32),
    pub ranks: Vec<u32>,
    /// Cover degrees to try; `None` means every divisor `d >= 2` of `r`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u32>>,
    pub max_length: usize,
    pub max_points: usize,
}

/// All configurations of a sweep in canonical order: genus, then rank, then
/// `d`, then the multiplicity system. Point `i` is named `p{i}` and the
/// systems at several points are taken as multisets (non-decreasing in the
/// composition order), since relabelling points does not change dimensions.
pub fn sweep_configurations(range: &SweepRange) -> Vec<(ModuliSpec, u32)> {
    let mut out = Vec::new();
    for g in range.genus.0..=range.genus.1 {
        for &r in &range.ranks {
            let ds: Vec<u32> = match &range.degrees {
                Some(ds) => ds
                    .iter()
                    .copied()
                    .filter(|&d| d >= 2 && r % d == 0)
                    .collect(),
                None => (2..=r).filter(|d| r % d == 0).collect(),
            };
            let comps = compositions(r, range.max_length);
            let mut systems: Vec<Vec<usize>> = Vec::new();
            for n in 0..=range.max_points {
                multisets(comps.len(), n, 0, &mut Vec::new(), &mut systems);
            }
            for &d in &ds {
                for sys in &systems {
                    let points = sys
                        .iter()
                        .enumerate()
                        .map(|(i, &c)| (format!("p{}", i + 1), evenly_weighted(&comps[c])))
                        .collect();
                    if let Ok(spec) = ModuliSpec::new(g, r, 0, points) {
                        out.push((spec, d));
                    }
                }
            }
        }
    }
    out
}

fn multisets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        cur.push(i);
        multisets(n, k, i, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn spec(g: u32, r: u32, pts: &[&[u32]]) -> ModuliSpec {
        let points = pts
            .iter()
            .enumerate()
            .map(|(i, m)| (format!("p{}", i + 1), evenly_weighted(m)))
            .collect();
        ModuliSpec::new(g, r, 0, points).unwrap()
    }

    fn mat(rows: &[&[u32]]) -> MultiplicityMatrix {
        MultiplicityMatrix(rows.iter().map(|r| r.to_vec()).collect())
    }

    // Independent count: subsets of every size up to the cap, by binomials.
    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn index_counts() {
        for (l, r, d, p) in [
            (2usize, 2u32, 2u32, 2u64),
            (2, 4, 2, 3),
            (1, 6, 3, 1),
            (3, 6, 2, 7),
        ] {
            let expect_p: u64 = (1..=(l as u64).min((r / d) as u64))
                .map(|s| binom(l as u64, s))
                .sum();
            assert_eq!(expect_p, p);
            assert_eq!(weight_subsets(l, (r / d) as usize).len() as u64, p);
            assert_eq!(point_stratum_indices(l, r, d).len() as u64, p.pow(d));
        }
        let s = spec(2, 2, &[&[1, 1]]);
        assert_eq!(enumerate_stratum_indices(&s, 2).unwrap().count(), 4);
        let s = spec(2, 4, &[&[2, 2]]);
        assert_eq!(enumerate_stratum_indices(&s, 2).unwrap().count(), 9);
        let s = spec(2, 4, &[&[4]]);
        assert_eq!(enumerate_stratum_indices(&s, 2).unwrap().count(), 1);
    }

    #[test]
    fn index_errors() {
        let s = spec(2, 3, &[&[1, 2]]);
        assert_eq!(
            enumerate_stratum_indices(&s, 2).err(),
            Some(StrataError::DoesNotDivide { r: 3, d: 2 })
        );
        assert_eq!(
            enumerate_stratum_indices(&s, 1).err(),
            Some(StrataError::DegreeTooSmall(1))
        );
    }

    #[test]
    fn subsets_lexicographic() {
        assert_eq!(
            weight_subsets(3, 2),
            vec![
                vec![0],
                vec![0, 1],
                vec![0, 2],
                vec![1],
                vec![1, 2],
                vec![2]
            ]
        );
    }

    #[test]
    fn matrix_examples() {
        let m11 = evenly_weighted(&[1, 1]);
        let t = SubsetTuple(vec![vec![0], vec![1]]);
        assert_eq!(
            enumerate_matrices(&t, &m11, 2, 2),
            vec![mat(&[&[1, 0], &[0, 1]])]
        );
        let t = SubsetTuple(vec![vec![0], vec![0]]);
        assert!(enumerate_matrices(&t, &m11, 2, 2).is_empty());
        let m22 = evenly_weighted(&[2, 2]);
        let t = SubsetTuple(vec![vec![0, 1], vec![0, 1]]);
        assert_eq!(
            enumerate_matrices(&t, &m22, 4, 2),
            vec![mat(&[&[1, 1], &[1, 1]])]
        );
    }

    #[test]
    fn multiplicity_system_examples() {
        let w = PointWeights::new(vec![(q(1, 4), 1), (q(1, 2), 1)]).unwrap();
        let sys = matrix_to_multiplicity_system(&mat(&[&[1, 0], &[0, 1]]), &w).unwrap();
        assert_eq!(sys[0], PointWeights::new(vec![(q(1, 4), 1)]).unwrap());
        assert_eq!(sys[1], PointWeights::new(vec![(q(1, 2), 1)]).unwrap());

        let w2 = PointWeights::new(vec![(q(1, 4), 2), (q(1, 2), 2)]).unwrap();
        let sys = matrix_to_multiplicity_system(&mat(&[&[1, 1], &[1, 1]]), &w2).unwrap();
        let both = PointWeights::new(vec![(q(1, 4), 1), (q(1, 2), 1)]).unwrap();
        assert_eq!(sys, vec![both.clone(), both]);

        let w3 = PointWeights::new(vec![(q(1, 3), 4)]).unwrap();
        let sys = matrix_to_multiplicity_system(&mat(&[&[2], &[2]]), &w3).unwrap();
        assert_eq!(sys, vec![PointWeights::new(vec![(q(1, 3), 2)]).unwrap(); 2]);

        assert!(matches!(
            matrix_to_multiplicity_system(&mat(&[&[2, 0], &[0, 0]]), &w),
            Err(StrataError::MalformedMatrix(_))
        ));
        assert!(matches!(
            matrix_to_multiplicity_system(&mat(&[&[1], &[1]]), &w),
            Err(StrataError::MalformedMatrix(_))
        ));
    }

    #[test]
    fn flag_dimension_examples() {
        assert_eq!(flag_dimension(&[1, 1, 1]), 3);
        assert_eq!(flag_dimension(&[5]), 0);
        assert_eq!(flag_dimension(&[2, 1]), 2);
        assert_eq!(flag_dimension(&[]), 0);
    }

    #[test]
    fn moduli_dimension_examples() {
        assert_eq!(moduli_dimension(&spec(2, 2, &[&[1, 1]])), 4);
        assert_eq!(moduli_dimension(&spec(2, 3, &[&[1, 1, 1]])), 11);
        assert_eq!(moduli_dimension(&spec(3, 2, &[])), 6);
    }

    #[test]
    fn stratum_dimension_examples() {
        let one = |m: MultiplicityMatrix| BTreeMap::from([("p1".to_string(), m)]);
        let s = spec(2, 2, &[&[1, 1]]);
        assert_eq!(
            stratum_dimension(&s, 2, &one(mat(&[&[1, 0], &[0, 1]]))),
            Ok(1)
        );
        let s = spec(2, 4, &[&[2, 2]]);
        assert_eq!(
            stratum_dimension(&s, 2, &one(mat(&[&[1, 1], &[1, 1]]))),
            Ok(9)
        );
        assert_eq!(
            stratum_dimension(&s, 2, &one(mat(&[&[2, 0], &[0, 2]]))),
            Ok(7)
        );
        assert!(matches!(
            stratum_dimension(&s, 2, &one(mat(&[&[2, 1], &[0, 1]]))),
            Err(StrataError::MalformedMatrix(_))
        ));
        assert_eq!(
            stratum_dimension(&s, 2, &BTreeMap::new()),
            Err(StrataError::MissingPoint("p1".into()))
        );
    }

    #[test]
    fn codim_examples() {
        let rep = codim_report(&spec(2, 2, &[&[1, 1]]), 2).unwrap();
        assert_eq!(rep.dim_moduli, 4);
        assert_eq!(rep.max_stratum_dim, Some(1));
        assert_eq!(rep.codim, Some(3));
        assert_eq!(rep.bound, Rational::integer(2));
        assert!(rep.bound_holds && rep.codim_at_least_three);
        assert!(!rep.bound_at_least_three);

        let rep = codim_report(&spec(2, 4, &[&[2, 2]]), 2).unwrap();
        assert_eq!(
            (rep.dim_moduli, rep.max_stratum_dim, rep.codim),
            (19, Some(9), Some(10))
        );
        assert_eq!(rep.bound, Rational::integer(8));

        let rep = codim_report(&spec(3, 3, &[]), 3).unwrap();
        assert_eq!(
            (rep.dim_moduli, rep.max_stratum_dim, rep.codim),
            (16, Some(4), Some(12))
        );
        assert_eq!(rep.bound, Rational::integer(12));
        assert_eq!(rep.stratum_count, 1);
    }

    #[test]
    fn single_weight_point() {
        // the only tuple ({0},{0}) gives [[1],[1]]; dim M = 3, stratum = 1
        let rep = codim_report(&spec(2, 2, &[&[2]]), 2).unwrap();
        assert_eq!(rep.stratum_count, 1);
        assert_eq!(rep.codim, Some(2));
        assert!(rep.bound_holds && !rep.codim_at_least_three);
    }

    #[test]
    fn lazy_strata_match_report() {
        let s = spec(2, 4, &[&[2, 2], &[1, 2, 1]]);
        let all: Vec<Stratum> = strata(&s, 2).unwrap().collect();
        let rep = codim_report(&s, 2).unwrap();
        assert_eq!(all.len() as u64, rep.stratum_count);
        assert_eq!(all.iter().map(|s| s.dimension).max(), rep.max_stratum_dim);
        for st in &all {
            assert_eq!(stratum_dimension(&s, 2, &st.matrices), Ok(st.dimension));
        }
    }

    #[test]
    fn delta_is_residue() {
        let s = ModuliSpec::new(2, 3, -4, BTreeMap::new()).unwrap();
        assert_eq!(s.delta(), 2);
        assert!(ModuliSpec::with_delta(2, 3, -4, 1, BTreeMap::new()).is_err());
        assert_eq!(
            ModuliSpec::new(1, 2, 0, BTreeMap::new()),
            Err(StrataError::GenusTooSmall(1))
        );
    }

    #[test]
    fn compositions_small() {
        assert_eq!(compositions(3, 2), vec![vec![1, 2], vec![2, 1], vec![3]]);
        assert_eq!(compositions(6, 3).len(), 16);
    }
}
