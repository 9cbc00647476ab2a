//! Cyclic étale covers as pure combinatorics, and the parabolic push-forward
//! and pull-back along them.
//!
//! A cover of degree `d` is recorded by its ordered fibres
//! `(q_{p,1}, ..., q_{p,d})` over each base point `p`; the Galois generator
//! acts by `q_{p,j} -> q_{p,j+1 mod d}`.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::exact::Rational;
use crate::parabolic::{ParabolicDatum, ParabolicError, PointId, PointWeights};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("cover degree must be positive")]
    ZeroDegree,
    #[error("fibre over {base} has {found} points, expected {expected}")]
    FiberSize {
        base: PointId,
        expected: u32,
        found: usize,
    },
    #[error("point id {0} appears more than once in the cover")]
    DuplicatePoint(PointId),
    #[error("point set mismatch: expected {expected:?}, found {found:?}")]
    PointSetMismatch {
        expected: Vec<PointId>,
        found: Vec<PointId>,
    },
    #[error("fibre point {0} carries no parabolic data")]
    MissingData(PointId),
    #[error(transparent)]
    Parabolic(#[from] ParabolicError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSpec {
    degree: u32,
    fibers: Vec<(PointId, Vec<PointId>)>,
}

impl CoverSpec {
    pub fn new(degree: u32, fibers: Vec<(PointId, Vec<PointId>)>) -> Result<Self, CoverError> {
        if degree == 0 {
            return Err(CoverError::ZeroDegree);
        }
        let mut seen = BTreeSet::new();
        for (base, fiber) in &fibers {
            if fiber.len() != degree as usize {
                return Err(CoverError::FiberSize {
                    base: base.clone(),
                    expected: degree,
                    found: fiber.len(),
                });
            }
            if !seen.insert(base.clone()) {
                return Err(CoverError::DuplicatePoint(base.clone()));
            }
        }
        let mut seen_total = BTreeSet::new();
        for q in fibers.iter().flat_map(|(_, f)| f) {
            if !seen_total.insert(q.clone()) {
                return Err(CoverError::DuplicatePoint(q.clone()));
            }
        }
        Ok(CoverSpec { degree, fibers })
    }

    /// Fibres named `"{p}.1"`, ..., `"{p}.d"` over the given base points.
    pub fn standard<S: AsRef<str>>(degree: u32, base_points: &[S]) -> Result<Self, CoverError> {
        let fibers = base_points
            .iter()
            .map(|p| {
                let p = p.as_ref();
                (
                    p.to_string(),
                    (1..=degree).map(|j| format!("{p}.{j}")).collect(),
                )
            })
            .collect();
        CoverSpec::new(degree, fibers)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn base_points(&self) -> impl Iterator<Item = &PointId> {
        self.fibers.iter().map(|(p, _)| p)
    }

    pub fn fibers(&self) -> &[(PointId, Vec<PointId>)] {
        &self.fibers
    }

    pub fn fiber(&self, base: &str) -> Option<&[PointId]> {
        self.fibers
            .iter()
            .find(|(p, _)| p == base)
            .map(|(_, f)| f.as_slice())
    }

    /// Image of a total-space point under the `i`-th power of the generator.
    pub fn galois_image(&self, q: &str, i: i64) -> Option<&PointId> {
        let d = self.degree as i64;
        self.fibers.iter().find_map(|(_, f)| {
            let j = f.iter().position(|x| x == q)? as i64;
            Some(&f[(j + i).rem_euclid(d) as usize])
        })
    }

    fn total_points(&self) -> BTreeSet<&PointId> {
        self.fibers.iter().flat_map(|(_, f)| f).collect()
    }

    fn check_total_space(&self, f: &ParabolicDatum) -> Result<(), CoverError> {
        let expected = self.total_points();
        let found: BTreeSet<&PointId> = f.points().keys().collect();
        if let Some(q) = expected.difference(&found).next() {
            if found.is_subset(&expected) {
                return Err(CoverError::MissingData((*q).clone()));
            }
        }
        if expected != found {
            return Err(CoverError::PointSetMismatch {
                expected: expected.into_iter().cloned().collect(),
                found: found.into_iter().cloned().collect(),
            });
        }
        Ok(())
    }
}

/// `genus(Y) = d(g - 1) + 1` for an étale cover of degree `d` of a genus `g`
/// curve.
pub fn cover_genus(base_genus: u32, degree: u32) -> i64 {
    degree as i64 * (base_genus as i64 - 1) + 1
}

/// Merges the weighted flags of one fibre into a weighted flag on the base
/// fibre `E_p = (+)_q F_q`.
///
/// The base weights are the sorted union of the fibre weights. The step
/// with weight `beta_j` is `E_{p,j} = (+)_q F_{q,t(q)}` with `t(q)` the
/// smallest index having `beta_j <= alpha_{q,t(q)}`, or the zero subspace
/// when no such index exists. Fibres may have different dimensions, and
/// empty fibres contribute nothing.
pub fn pushforward_fiber(fiber: &[PointWeights]) -> PointWeights {
    let betas: BTreeSet<Rational> = fiber.iter().flat_map(PointWeights::weights).collect();
    let betas: Vec<Rational> = betas.into_iter().collect();
    let dims: Vec<Vec<u32>> = fiber.iter().map(PointWeights::flag_dims).collect();
    let step_dim = |beta: &Rational| -> u32 {
        fiber
            .iter()
            .zip(&dims)
            .map(|(w, d)| {
                let t = w.entries().iter().position(|e| *beta <= e.weight);
                t.map_or(0, |t| d[t])
            })
            .sum()
    };
    let mut base_dims: Vec<u32> = betas.iter().map(step_dim).collect();
    base_dims.push(0);
    let entries = betas
        .into_iter()
        .enumerate()
        .map(|(j, beta)| (beta, base_dims[j] - base_dims[j + 1]))
        .collect();
    PointWeights::new(entries).expect("merged weights are sorted with positive drops")
}

/// Parabolic push-forward `gamma_* F`.
///
/// Rank multiplies by the cover degree; the underlying degree is kept, which
/// is what makes the parabolic degree invariant.
pub fn pushforward(cover: &CoverSpec, f: &ParabolicDatum) -> Result<ParabolicDatum, CoverError> {
    cover.check_total_space(f)?;
    let points = cover
        .fibers
        .iter()
        .map(|(base, fiber)| {
            let data: Vec<PointWeights> = fiber.iter().map(|q| f.points()[q].clone()).collect();
            (base.clone(), pushforward_fiber(&data))
        })
        .collect();
    Ok(ParabolicDatum::new(
        cover.degree * f.rank(),
        f.degree(),
        points,
    )?)
}

/// Parabolic pull-back `gamma^* E`: every fibre point copies the base
/// point's weighted flag and the degree multiplies by the cover degree.
pub fn pullback(cover: &CoverSpec, e: &ParabolicDatum) -> Result<ParabolicDatum, CoverError> {
    let expected: BTreeSet<&PointId> = cover.base_points().collect();
    let found: BTreeSet<&PointId> = e.points().keys().collect();
    if expected != found {
        return Err(CoverError::PointSetMismatch {
            expected: expected.into_iter().cloned().collect(),
            found: found.into_iter().cloned().collect(),
        });
    }
    let points = cover
        .fibers
        .iter()
        .flat_map(|(base, fiber)| {
            let w = &e.points()[base];
            fiber.iter().map(move |q| (q.clone(), w.clone()))
        })
        .collect();
    Ok(ParabolicDatum::new(
        e.rank(),
        cover.degree as i64 * e.degree(),
        points,
    )?)
}

/// Pull-back along the `i`-th power of the Galois generator `sigma`:
/// the data at `q_j` becomes the old data at `sigma^i(q_j) = q_{j+i}`.
pub fn galois_twist(
    cover: &CoverSpec,
    f: &ParabolicDatum,
    i: i64,
) -> Result<ParabolicDatum, CoverError> {
    cover.check_total_space(f)?;
    let points: BTreeMap<PointId, PointWeights> = f
        .points()
        .keys()
        .map(|q| {
            let src = cover.galois_image(q, i).expect("point lies in a fibre");
            (q.clone(), f.points()[src].clone())
        })
        .collect();
    Ok(ParabolicDatum::new(f.rank(), f.degree(), points)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::par_degree;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn pw(w: &[(Rational, u32)]) -> PointWeights {
        PointWeights::new(w.to_vec()).unwrap()
    }

    fn datum(rank: u32, degree: i64, pts: &[(&str, PointWeights)]) -> ParabolicDatum {
        ParabolicDatum::new(
            rank,
            degree,
            pts.iter()
                .map(|(id, w)| (id.to_string(), w.clone()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn pushforward_distinct_weights() {
        let c = CoverSpec::standard(2, &["p"]).unwrap();
        let f = datum(
            1,
            0,
            &[("p.1", pw(&[(q(1, 4), 1)])), ("p.2", pw(&[(q(1, 2), 1)]))],
        );
        let e = pushforward(&c, &f).unwrap();
        assert_eq!(e.rank(), 2);
        assert_eq!(e.degree(), 0);
        assert_eq!(e.points()["p"], pw(&[(q(1, 4), 1), (q(1, 2), 1)]));
    }

    #[test]
    fn pushforward_merges_duplicates() {
        let c = CoverSpec::standard(2, &["p"]).unwrap();
        let f = datum(
            1,
            0,
            &[("p.1", pw(&[(q(1, 3), 1)])), ("p.2", pw(&[(q(1, 3), 1)]))],
        );
        assert_eq!(
            pushforward(&c, &f).unwrap().points()["p"],
            pw(&[(q(1, 3), 2)])
        );
    }

    #[test]
    fn identity_cover_relabels() {
        let c = CoverSpec::standard(1, &["p"]).unwrap();
        let w = pw(&[(q(0, 1), 2), (q(2, 5), 1)]);
        let f = datum(3, -2, &[("p.1", w.clone())]);
        let e = pushforward(&c, &f).unwrap();
        assert_eq!(e, datum(3, -2, &[("p", w.clone())]));
        assert_eq!(pullback(&c, &e).unwrap(), f);
    }

    #[test]
    fn pushforward_interleaved_flags() {
        // q1: (0, 1), (1/2, 2); q2: (1/3, 1) -> betas 0, 1/3, 1/2
        // dims: beta=0 -> 3 + 1, beta=1/3 -> 2 + 1, beta=1/2 -> 2 + 0
        let f1 = pw(&[(q(0, 1), 1), (q(1, 2), 2)]);
        let f2 = pw(&[(q(1, 3), 1)]);
        let merged = pushforward_fiber(&[f1, f2]);
        assert_eq!(merged, pw(&[(q(0, 1), 1), (q(1, 3), 1), (q(1, 2), 2)]));
    }

    #[test]
    fn pullback_examples() {
        let c = CoverSpec::standard(2, &["p"]).unwrap();
        let w = pw(&[(q(1, 4), 1), (q(1, 2), 1)]);
        let e = datum(2, 0, &[("p", w.clone())]);
        let up = pullback(&c, &e).unwrap();
        assert_eq!(up, datum(2, 0, &[("p.1", w.clone()), ("p.2", w)]));

        let c3 = CoverSpec::standard(3, &["p"]).unwrap();
        let e3 = datum(2, 2, &[("p", pw(&[(q(1, 5), 2)]))]);
        let up3 = pullback(&c3, &e3).unwrap();
        assert_eq!(up3.degree(), 6);
        assert_eq!(par_degree(&up3), Rational::integer(3) * par_degree(&e3));
    }

    #[test]
    fn twist_examples() {
        let c = CoverSpec::standard(2, &["p"]).unwrap();
        let a = pw(&[(q(1, 4), 1)]);
        let b = pw(&[(q(1, 2), 1)]);
        let f = datum(1, 3, &[("p.1", a.clone()), ("p.2", b.clone())]);
        assert_eq!(galois_twist(&c, &f, 0).unwrap(), f);
        assert_eq!(galois_twist(&c, &f, 2).unwrap(), f);
        assert_eq!(
            galois_twist(&c, &f, 1).unwrap(),
            datum(1, 3, &[("p.1", b), ("p.2", a)])
        );
    }

    #[test]
    fn error_paths() {
        assert_eq!(CoverSpec::standard(0, &["p"]), Err(CoverError::ZeroDegree));
        assert!(matches!(
            CoverSpec::new(2, vec![("p".into(), vec!["a".into()])]),
            Err(CoverError::FiberSize { .. })
        ));
        assert!(matches!(
            CoverSpec::new(
                1,
                vec![
                    ("p".into(), vec!["a".into()]),
                    ("r".into(), vec!["a".into()])
                ]
            ),
            Err(CoverError::DuplicatePoint(_))
        ));
        let c = CoverSpec::standard(2, &["p"]).unwrap();
        let partial = datum(1, 0, &[("p.1", pw(&[(q(1, 4), 1)]))]);
        assert_eq!(
            pushforward(&c, &partial),
            Err(CoverError::MissingData("p.2".into()))
        );
        let stray = datum(1, 0, &[("x", pw(&[(q(1, 4), 1)]))]);
        assert!(matches!(
            pushforward(&c, &stray),
            Err(CoverError::PointSetMismatch { .. })
        ));
        assert!(matches!(
            pullback(&c, &stray),
            Err(CoverError::PointSetMismatch { .. })
        ));
    }

    #[test]
    fn genus_formula() {
        assert_eq!(cover_genus(2, 2), 3);
        assert_eq!(cover_genus(3, 1), 3);
        assert_eq!(cover_genus(5, 4), 17);
    }
}
