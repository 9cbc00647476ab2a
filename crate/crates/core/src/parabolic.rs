//! Discrete data of a parabolic vector bundle: rank, degree and the weighted
//! multiplicities at each marked point.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Rational;

pub type PointId = String;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParabolicError {
    #[error("weight {0} is outside [0, 1)")]
    WeightOutOfRange(String),
    #[error("weights must be strictly increasing ({0} followed by {1})")]
    WeightsNotIncreasing(String, String),
    #[error("multiplicity of weight {0} must be positive")]
    ZeroMultiplicity(String),
    #[error("rank must be positive")]
    ZeroRank,
    #[error("multiplicities at point {point} sum to {sum}, expected rank {rank}")]
    RankMismatch { point: PointId, sum: u32, rank: u32 },
    #[error("{weights} weights but {mults} multiplicities")]
    LengthMismatch { weights: usize, mults: usize },
}

/// One step of a weighted flag: a weight and the dimension drop it carries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEntry {
    pub weight: Rational,
    pub multiplicity: u32,
}

/// Weighted multiplicities at one point, in increasing weight order.
///
/// An empty sequence is allowed here (a zero-dimensional fibre); a
/// [`ParabolicDatum`] of positive rank never contains one.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<WeightEntry>", into = "Vec<WeightEntry>")]
pub struct PointWeights {
    entries: Vec<WeightEntry>,
}

impl PointWeights {
    pub fn new(entries: Vec<(Rational, u32)>) -> Result<Self, ParabolicError> {
        PointWeights::from_entries(
            entries
                .into_iter()
                .map(|(weight, multiplicity)| WeightEntry {
                    weight,
                    multiplicity,
                })
                .collect(),
        )
    }

    pub fn from_entries(entries: Vec<WeightEntry>) -> Result<Self, ParabolicError> {
        let unit = Rational::one();
        for e in &entries {
            if e.weight.is_negative() || e.weight >= unit {
                return Err(ParabolicError::WeightOutOfRange(e.weight.to_string()));
            }
            if e.multiplicity == 0 {
                return Err(ParabolicError::ZeroMultiplicity(e.weight.to_string()));
            }
        }
        for w in entries.windows(2) {
            if w[0].weight >= w[1].weight {
                return Err(ParabolicError::WeightsNotIncreasing(
                    w[0].weight.to_string(),
                    w[1].weight.to_string(),
                ));
            }
        }
        Ok(PointWeights { entries })
    }

    /// Parallel weight and multiplicity lists.
    pub fn from_parts(weights: Vec<Rational>, mults: Vec<u32>) -> Result<Self, ParabolicError> {
        if weights.len() != mults.len() {
            return Err(ParabolicError::LengthMismatch {
                weights: weights.len(),
                mults: mults.len(),
            });
        }
        PointWeights::new(weights.into_iter().zip(mults).collect())
    }

    pub fn entries(&self) -> &[WeightEntry] {
        &self.entries
    }

    /// Flag length `l(p)`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn weights(&self) -> Vec<Rational> {
        self.entries.iter().map(|e| e.weight.clone()).collect()
    }

    pub fn multiplicities(&self) -> Vec<u32> {
        self.entries.iter().map(|e| e.multiplicity).collect()
    }

    /// Dimension of the fibre, the sum of the multiplicities.
    pub fn total(&self) -> u32 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// `dim E_{p,k}` for `k = 1..=l+1`; the last entry is always zero.
    pub fn flag_dims(&self) -> Vec<u32> {
        let mut dims = vec![0u32; self.entries.len() + 1];
        for k in (0..self.entries.len()).rev() {
            dims[k] = dims[k + 1] + self.entries[k].multiplicity;
        }
        dims
    }

    /// `sum_i m_i * alpha_i`.
    pub fn weighted_sum(&self) -> Rational {
        self.entries
            .iter()
            .map(|e| &e.weight * &Rational::integer(e.multiplicity as i64))
            .sum()
    }
}

impl TryFrom<Vec<WeightEntry>> for PointWeights {
    type Error = ParabolicError;
    fn try_from(entries: Vec<WeightEntry>) -> Result<Self, Self::Error> {
        PointWeights::from_entries(entries)
    }
}

impl From<PointWeights> for Vec<WeightEntry> {
    fn from(p: PointWeights) -> Self {
        p.entries
    }
}

/// Rank, degree and weighted flags of a parabolic bundle. Points iterate in
/// lexicographic order of their ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDatum")]
pub struct ParabolicDatum {
    rank: u32,
    degree: i64,
    points: BTreeMap<PointId, PointWeights>,
}

#[derive(Deserialize)]
struct RawDatum {
    rank: u32,
    degree: i64,
    points: BTreeMap<PointId, PointWeights>,
}

impl TryFrom<RawDatum> for ParabolicDatum {
    type Error = ParabolicError;
    fn try_from(raw: RawDatum) -> Result<Self, Self::Error> {
        ParabolicDatum::new(raw.rank, raw.degree, raw.points)
    }
}

impl ParabolicDatum {
    pub fn new(
        rank: u32,
        degree: i64,
        points: BTreeMap<PointId, PointWeights>,
    ) -> Result<Self, ParabolicError> {
        if rank == 0 {
            return Err(ParabolicError::ZeroRank);
        }
        for (id, w) in &points {
            if w.total() != rank {
                return Err(ParabolicError::RankMismatch {
                    point: id.clone(),
                    sum: w.total(),
                    rank,
                });
            }
        }
        Ok(ParabolicDatum {
            rank,
            degree,
            points,
        })
    }

    /// A datum with one marked point.
    pub fn single_point(
        rank: u32,
        degree: i64,
        id: &str,
        weights: PointWeights,
    ) -> Result<Self, ParabolicError> {
        ParabolicDatum::new(rank, degree, BTreeMap::from([(id.to_string(), weights)]))
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn points(&self) -> &BTreeMap<PointId, PointWeights> {
        &self.points
    }

    /// Same weights with another degree.
    pub fn with_degree(&self, degree: i64) -> Self {
        ParabolicDatum {
            degree,
            ..self.clone()
        }
    }
}

/// `deg(E) + sum_p sum_i m_{p,i} alpha_{p,i}`.
pub fn par_degree(datum: &ParabolicDatum) -> Rational {
    Rational::integer(datum.degree)
        + datum
            .points
            .values()
            .map(PointWeights::weighted_sum)
            .sum::<Rational>()
}

/// Parabolic degree divided by rank.
pub fn par_slope(datum: &ParabolicDatum) -> Rational {
    par_degree(datum) / Rational::integer(datum.rank as i64)
}

/// A numerically admissible sub-datum with the same parabolic slope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericityWitness {
    pub sub_rank: u32,
    pub sub_degree: i64,
    pub sub_multiplicities: BTreeMap<PointId, Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Genericity {
    Generic,
    NonGeneric(GenericityWitness),
}

impl Genericity {
    pub fn is_generic(&self) -> bool {
        matches!(self, Genericity::Generic)
    }
}

/// All `n` with `0 <= n_i <= bounds_i` and `sum n_i = total`, in
/// lexicographic order.
pub(crate) fn bounded_compositions(bounds: &[u32], total: u32) -> Vec<Vec<u32>> {
    fn rec(bounds: &[u32], left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        match bounds.split_first() {
            None => {
                if left == 0 {
                    out.push(cur.clone());
                }
            }
            Some((&b, rest)) => {
                let room: u32 = rest.iter().sum();
                let lo = left.saturating_sub(room);
                for v in lo..=b.min(left) {
                    cur.push(v);
                    rec(rest, left - v, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(bounds, total, &mut Vec::new(), &mut out);
    out
}

/// Steps a mixed-radix counter, last digit fastest. Returns `false` once it
/// wraps back to all zeros.
pub(crate) fn advance_odometer(digits: &mut [usize], radices: &[usize]) -> bool {
    for pos in (0..digits.len()).rev() {
        digits[pos] += 1;
        if digits[pos] < radices[pos] {
            return true;
        }
        digits[pos] = 0;
    }
    false
}

/// Wall test for the weight system of `datum`.
///
/// Non-generic iff some `0 < r' < r` and per-point sub-multiplicities
/// `0 <= n_{p,i} <= m_{p,i}` with `sum_i n_{p,i} = r'` make
/// `e' = r' * par_slope - sum n * alpha` an integer; the integer `e'` is then
/// the degree of a sub-datum of equal slope. This only checks numerical
/// admissibility, not whether a subbundle with that data exists.
///
/// Candidates are scanned by increasing `r'`, then lexicographically in
/// the concatenated `n` (points in id order); the first hit is returned.
pub fn is_generic(datum: &ParabolicDatum) -> Genericity {
    let slope = par_slope(datum);
    for sub_rank in 1..datum.rank {
        let per_point: Vec<(&PointId, &PointWeights, Vec<Vec<u32>>)> = datum
            .points
            .iter()
            .map(|(id, w)| (id, w, bounded_compositions(&w.multiplicities(), sub_rank)))
            .collect();
        // every point admits at least one choice since sum m = r > r'
        let target = &slope * &Rational::integer(sub_rank as i64);
        let mut odometer = vec![0usize; per_point.len()];
        loop {
            let mut e = target.clone();
            for ((_, w, choices), &idx) in per_point.iter().zip(&odometer) {
                for (entry, &n) in w.entries().iter().zip(&choices[idx]) {
                    e = e - &entry.weight * &Rational::integer(n as i64);
                }
            }
            if let Some(sub_degree) = e.to_i64() {
                let sub_multiplicities = per_point
                    .iter()
                    .zip(&odometer)
                    .map(|((id, _, choices), &idx)| ((*id).clone(), choices[idx].clone()))
                    .collect();
                return Genericity::NonGeneric(GenericityWitness {
                    sub_rank,
                    sub_degree,
                    sub_multiplicities,
                });
            }
            let lens: Vec<usize> = per_point.iter().map(|(_, _, c)| c.len()).collect();
            if !advance_odometer(&mut odometer, &lens) {
                break;
            }
        }
    }
    Genericity::Generic
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn one_point(rank: u32, degree: i64, w: &[(Rational, u32)]) -> ParabolicDatum {
        ParabolicDatum::single_point(rank, degree, "p", PointWeights::new(w.to_vec()).unwrap())
            .unwrap()
    }

    #[test]
    fn par_degree_examples() {
        let empty = ParabolicDatum::new(2, 3, BTreeMap::new()).unwrap();
        assert_eq!(par_degree(&empty), Rational::integer(3));
        assert_eq!(par_slope(&empty), q(3, 2));

        let two = one_point(2, 0, &[(q(1, 4), 1), (q(1, 2), 1)]);
        assert_eq!(par_degree(&two), q(3, 4));
        assert_eq!(par_slope(&two), q(3, 8));

        let neg = one_point(2, -1, &[(q(1, 3), 2)]);
        assert_eq!(par_degree(&neg), q(-1, 3));

        let four = one_point(4, 2, &[(q(1, 2), 4)]);
        assert_eq!(par_slope(&four), Rational::one());
    }

    #[test]
    fn genericity_examples() {
        let d = one_point(2, 0, &[(q(1, 4), 2)]);
        assert_eq!(
            is_generic(&d),
            Genericity::NonGeneric(GenericityWitness {
                sub_rank: 1,
                sub_degree: 0,
                sub_multiplicities: BTreeMap::from([("p".to_string(), vec![1])]),
            })
        );
        assert!(is_generic(&one_point(2, 1, &[(q(1, 4), 2)])).is_generic());
        assert!(is_generic(&one_point(2, 0, &[(q(1, 4), 1), (q(1, 2), 1)])).is_generic());
    }

    #[test]
    fn rank_one_is_generic() {
        assert!(is_generic(&one_point(1, 7, &[(q(1, 3), 1)])).is_generic());
    }

    #[test]
    fn no_points_degree_divisible() {
        // r = 2, e = 2: a line subbundle of degree 1 has equal slope
        let d = ParabolicDatum::new(2, 2, BTreeMap::new()).unwrap();
        match is_generic(&d) {
            Genericity::NonGeneric(w) => assert_eq!((w.sub_rank, w.sub_degree), (1, 1)),
            Genericity::Generic => panic!("expected a wall"),
        }
        assert!(is_generic(&d.with_degree(1)).is_generic());
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            PointWeights::new(vec![(q(1, 2), 1), (q(1, 4), 1)]),
            Err(ParabolicError::WeightsNotIncreasing(..))
        ));
        assert!(matches!(
            PointWeights::new(vec![(Rational::one(), 1)]),
            Err(ParabolicError::WeightOutOfRange(_))
        ));
        assert!(matches!(
            PointWeights::new(vec![(q(-1, 2), 1)]),
            Err(ParabolicError::WeightOutOfRange(_))
        ));
        assert!(matches!(
            PointWeights::new(vec![(q(1, 2), 0)]),
            Err(ParabolicError::ZeroMultiplicity(_))
        ));
        assert!(PointWeights::new(vec![(Rational::zero(), 1)]).is_ok());
        let w = PointWeights::new(vec![(q(1, 2), 3)]).unwrap();
        assert!(matches!(
            ParabolicDatum::single_point(2, 0, "p", w),
            Err(ParabolicError::RankMismatch { .. })
        ));
        assert_eq!(
            ParabolicDatum::new(0, 0, BTreeMap::new()),
            Err(ParabolicError::ZeroRank)
        );
    }

    #[test]
    fn flag_dims() {
        let w = PointWeights::new(vec![(q(0, 1), 2), (q(1, 3), 1), (q(1, 2), 3)]).unwrap();
        assert_eq!(w.flag_dims(), vec![6, 4, 3, 0]);
    }

    #[test]
    fn compositions_are_lexicographic() {
        assert_eq!(
            bounded_compositions(&[1, 2], 2),
            vec![vec![0, 2], vec![1, 1]]
        );
        assert!(bounded_compositions(&[1, 1], 3).is_empty());
    }
}
