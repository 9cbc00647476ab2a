//! Flags over cyclotomic fields, finite-order automorphisms preserving them,
//! and the descent of such a flag to the fibres of a cyclic cover.
//!
//! An automorphism `phi` with `phi^d = 1` is diagonalisable over `Q(zeta_d)`
//! with eigenvalues among `zeta_d^j`. Eigenvalue `zeta_d^j` is matched with
//! fibre point `q_j`, `j = 1..=d`, so `zeta_d^d = 1` belongs to `q_d`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{
    echelon_basis, span_rank, Cyclotomic, ExactError, ExactMatrix, Field, Rational,
};
use crate::parabolic::{ParabolicError, PointWeights};

pub type Vector = Vec<Cyclotomic>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EigenflagError {
    #[error("invalid flag: {0}")]
    InvalidFlag(String),
    #[error("automorphism does not satisfy phi^{0} = identity")]
    NotPeriodic(u32),
    #[error("automorphism does not preserve flag step {0}")]
    FlagNotPreserved(usize),
    #[error("scalars of order {found} where order {expected} was expected")]
    OrderMismatch { expected: u32, found: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("eigenspaces of step {0} do not span it")]
    NotDiagonalizable(usize),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Parabolic(#[from] ParabolicError),
}

fn check_order(expected: u32, x: &Cyclotomic) -> Result<(), EigenflagError> {
    if x.order() == expected {
        Ok(())
    } else {
        Err(EigenflagError::OrderMismatch {
            expected,
            found: x.order(),
        })
    }
}

/// `V = V_1 ⊋ V_2 ⊋ ... ⊋ V_l ⊋ 0` with increasing weights in `[0, 1)`.
/// Each step is stored by a reduced echelon basis.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedFlag {
    ambient_dim: usize,
    field_order: u32,
    subspaces: Vec<Vec<Vector>>,
    weights: Vec<Rational>,
}

impl WeightedFlag {
    /// `subspaces[i]` is any spanning set of `V_{i+1}`.
    pub fn new(
        ambient_dim: usize,
        field_order: u32,
        subspaces: Vec<Vec<Vector>>,
        weights: Vec<Rational>,
    ) -> Result<Self, EigenflagError> {
        let zero = Cyclotomic::zero(field_order)?;
        if ambient_dim == 0 {
            return Err(EigenflagError::InvalidFlag(
                "ambient dimension must be positive".into(),
            ));
        }
        if subspaces.is_empty() || subspaces.len() != weights.len() {
            return Err(EigenflagError::InvalidFlag(format!(
                "{} subspaces and {} weights",
                subspaces.len(),
                weights.len()
            )));
        }
        for v in subspaces.iter().flatten() {
            if v.len() != ambient_dim {
                return Err(EigenflagError::DimensionMismatch(format!(
                    "vector of length {} in dimension {ambient_dim}",
                    v.len()
                )));
            }
            for x in v {
                check_order(field_order, x)?;
            }
        }
        // validates range and ordering of the weights
        PointWeights::new(weights.iter().map(|w| (w.clone(), 1)).collect())?;

        let bases: Vec<Vec<Vector>> = subspaces.iter().map(|s| echelon_basis(s, &zero)).collect();
        if bases[0].len() != ambient_dim {
            return Err(EigenflagError::InvalidFlag(
                "first step must be the whole space".into(),
            ));
        }
        for i in 1..bases.len() {
            let (big, small) = (&bases[i - 1], &bases[i]);
            if small.is_empty() {
                return Err(EigenflagError::InvalidFlag(format!(
                    "step {} is zero",
                    i + 1
                )));
            }
            if small.len() >= big.len() {
                return Err(EigenflagError::InvalidFlag(format!(
                    "step {} does not drop dimension",
                    i + 1
                )));
            }
            let joined: Vec<Vector> = big.iter().chain(small).cloned().collect();
            if span_rank(&joined, &zero) != big.len() {
                return Err(EigenflagError::InvalidFlag(format!(
                    "step {} is not contained in step {i}",
                    i + 1
                )));
            }
        }
        Ok(WeightedFlag {
            ambient_dim,
            field_order,
            subspaces: bases,
            weights,
        })
    }

    /// Convenience constructor from integer spanning vectors.
    pub fn from_integer_vectors(
        ambient_dim: usize,
        field_order: u32,
        subspaces: &[Vec<Vec<i64>>],
        weights: Vec<Rational>,
    ) -> Result<Self, EigenflagError> {
        let lift = |v: &Vec<i64>| -> Result<Vector, ExactError> {
            v.iter()
                .map(|&x| Cyclotomic::from_rational(field_order, Rational::integer(x)))
                .collect()
        };
        let subspaces = subspaces
            .iter()
            .map(|s| s.iter().map(lift).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        WeightedFlag::new(ambient_dim, field_order, subspaces, weights)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    /// Number of steps `l`.
    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    pub fn subspace(&self, i: usize) -> &[Vector] {
        &self.subspaces[i]
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// `dim V_1, ..., dim V_l`.
    pub fn dims(&self) -> Vec<usize> {
        self.subspaces.iter().map(Vec::len).collect()
    }

    /// `m_k = dim V_k - dim V_{k+1}`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let dims = self.dims();
        (0..dims.len())
            .map(|k| (dims[k] - dims.get(k + 1).copied().unwrap_or(0)) as u32)
            .collect()
    }

    pub fn point_weights(&self) -> PointWeights {
        PointWeights::from_parts(self.weights.clone(), self.multiplicities())
            .expect("flag weights are validated")
    }

    fn zero(&self) -> Cyclotomic {
        Cyclotomic::zero(self.field_order).expect("validated order")
    }

    fn contains(&self, step: usize, v: &Vector) -> bool {
        let basis = &self.subspaces[step];
        let mut joined = basis.clone();
        joined.push(v.clone());
        span_rank(&joined, &self.zero()) == basis.len()
    }
}

/// A linear automorphism with `phi^d = 1`, scalars in `Q(zeta_d)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FlagAutomorphism {
    matrix: ExactMatrix<Cyclotomic>,
    order: u32,
}

impl FlagAutomorphism {
    pub fn new(matrix: ExactMatrix<Cyclotomic>, order: u32) -> Result<Self, EigenflagError> {
        if matrix.rows() != matrix.cols() {
            return Err(EigenflagError::DimensionMismatch(
                "automorphism must be square".into(),
            ));
        }
        check_order(order, matrix.zero_scalar())?;
        for i in 0..matrix.rows() {
            for x in matrix.row(i) {
                check_order(order, x)?;
            }
        }
        let id = ExactMatrix::identity(matrix.rows(), matrix.zero_scalar());
        if matrix.pow(order as u64)? != id {
            return Err(EigenflagError::NotPeriodic(order));
        }
        Ok(FlagAutomorphism { matrix, order })
    }

    pub fn from_integer_rows(order: u32, rows: &[Vec<i64>]) -> Result<Self, EigenflagError> {
        let lifted = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| Cyclotomic::from_rational(order, Rational::integer(x)))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let m = ExactMatrix::from_rows(lifted, Cyclotomic::zero(order)?)?;
        FlagAutomorphism::new(m, order)
    }

    pub fn matrix(&self) -> &ExactMatrix<Cyclotomic> {
        &self.matrix
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// An eigenvector with eigenvalue `zeta_d^exponent`, `exponent` in `1..=d`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenVector {
    pub vector: Vector,
    pub exponent: u32,
    pub eigenvalue: Cyclotomic,
}

/// Bases `B_1 ⊇ B_2 ⊇ ... ⊇ B_l` of the flag steps made of eigenvectors.
/// `levels[i]` lists the vectors of `levels[i + 1]` first, in the same
/// order, followed by the vectors added at step `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct NestedEigenbasis {
    pub levels: Vec<Vec<EigenVector>>,
}

fn check_compatible(phi: &FlagAutomorphism, flag: &WeightedFlag) -> Result<(), EigenflagError> {
    if phi.dim() != flag.ambient_dim {
        return Err(EigenflagError::DimensionMismatch(format!(
            "automorphism of dimension {} on a flag in dimension {}",
            phi.dim(),
            flag.ambient_dim
        )));
    }
    if phi.order != flag.field_order {
        return Err(EigenflagError::OrderMismatch {
            expected: phi.order,
            found: flag.field_order,
        });
    }
    for (i, basis) in flag.subspaces.iter().enumerate() {
        for v in basis {
            let image = phi.matrix.mul_vec(v)?;
            if !flag.contains(i, &image) {
                return Err(EigenflagError::FlagNotPreserved(i + 1));
            }
        }
    }
    Ok(())
}

/// Echelon basis of `ker(phi - lambda) ∩ span(basis)`.
fn eigen_intersection(
    phi: &ExactMatrix<Cyclotomic>,
    lambda: &Cyclotomic,
    basis: &[Vector],
) -> Result<Vec<Vector>, EigenflagError> {
    let zero = lambda.zero_like();
    let dim = phi.rows();
    let b = ExactMatrix::from_columns(dim, basis, zero.clone())?;
    let m = phi.shift(lambda)?.mul(&b)?;
    let vectors = m
        .kernel()
        .iter()
        .map(|c| b.mul_vec(c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(echelon_basis(&vectors, &zero))
}

/// Complement of `span(inner)` inside `span(outer)` that is orthogonal to
/// `inner` for the Hermitian form `sum x_i conj(y_i)`. That form is
/// anisotropic over a cyclotomic field, so the result is always a direct
/// summand.
fn hermitian_complement(
    dim: usize,
    outer: &[Vector],
    inner: &[Vector],
) -> Result<Vec<Vector>, EigenflagError> {
    let zero = outer
        .first()
        .and_then(|v| v.first())
        .map(Field::zero_like)
        .expect("nonempty outer space");
    if inner.is_empty() {
        return Ok(outer.to_vec());
    }
    let c = ExactMatrix::from_columns(dim, outer, zero.clone())?;
    let u = ExactMatrix::from_rows(inner.to_vec(), zero.clone())?;
    // rows: conj(u)^T C
    let mut conj_u = u.clone();
    for i in 0..conj_u.rows() {
        for j in 0..conj_u.cols() {
            let x = conj_u.get(i, j).conjugate();
            conj_u.set(i, j, x);
        }
    }
    let constraints = conj_u.mul(&c)?;
    let vectors = constraints
        .kernel()
        .iter()
        .map(|coef| c.mul_vec(coef))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(echelon_basis(&vectors, &zero))
}

/// Nested eigenbases for a flag preserved by `phi`, built from the deepest
/// step outwards: each eigenspace of `V_{i+1}` is extended to the matching
/// eigenspace of `V_i` by its Hermitian-orthogonal complement.
pub fn nested_eigenbasis(
    phi: &FlagAutomorphism,
    flag: &WeightedFlag,
) -> Result<NestedEigenbasis, EigenflagError> {
    check_compatible(phi, flag)?;
    let d = phi.order;
    let dim = flag.ambient_dim;
    let eigenvalues: Vec<Cyclotomic> = (1..=d)
        .map(|j| Cyclotomic::zeta_pow(d, j as i64))
        .collect::<Result<_, _>>()?;

    let depth = flag.len();
    let mut per_value: Vec<Vec<Vector>> = vec![Vec::new(); d as usize];
    let mut levels: Vec<Vec<EigenVector>> = vec![Vec::new(); depth];
    for step in (0..depth).rev() {
        let mut level: Vec<EigenVector> = levels.get(step + 1).cloned().unwrap_or_default();
        let mut total = 0;
        for (idx, lambda) in eigenvalues.iter().enumerate() {
            let eig = eigen_intersection(&phi.matrix, lambda, flag.subspace(step))?;
            total += eig.len();
            if eig.len() == per_value[idx].len() {
                continue;
            }
            let added = hermitian_complement(dim, &eig, &per_value[idx])?;
            for v in added {
                level.push(EigenVector {
                    vector: v.clone(),
                    exponent: idx as u32 + 1,
                    eigenvalue: lambda.clone(),
                });
                per_value[idx].push(v);
            }
        }
        if total != flag.subspace(step).len() || level.len() != total {
            return Err(EigenflagError::NotDiagonalizable(step + 1));
        }
        levels[step] = level;
    }
    Ok(NestedEigenbasis { levels })
}

/// Weighted flag descended to one fibre point `q_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberDescent {
    /// `j`, so the eigenvalue is `zeta_d^j`.
    pub index: u32,
    pub eigenspace_dim: u32,
    pub weights: PointWeights,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentResult {
    pub fibers: Vec<FiberDescent>,
    /// `d x l` matrix of `n_{q_j,k}`.
    pub matrix: Vec<Vec<u32>>,
}

impl DescentResult {
    pub fn eigenspace_dims(&self) -> Vec<u32> {
        self.fibers.iter().map(|f| f.eigenspace_dim).collect()
    }

    pub fn fiber_weights(&self) -> Vec<PointWeights> {
        self.fibers.iter().map(|f| f.weights.clone()).collect()
    }
}

/// Splits a preserved flag along the eigenspaces of `phi`:
/// `F_{q_j,k} = span(B_k ∩ eigenspace(zeta^j))`, with multiplicities
/// `n_{q_j,k} = dim F_{q_j,k} - dim F_{q_j,k+1}` and zero entries dropped
/// from the fibre's weighted flag.
pub fn descend(
    phi: &FlagAutomorphism,
    flag: &WeightedFlag,
    d: u32,
) -> Result<DescentResult, EigenflagError> {
    if d != phi.order {
        return Err(EigenflagError::OrderMismatch {
            expected: phi.order,
            found: d,
        });
    }
    let basis = nested_eigenbasis(phi, flag)?;
    let depth = flag.len();
    let mut fibers = Vec::with_capacity(d as usize);
    let mut matrix = Vec::with_capacity(d as usize);
    for j in 1..=d {
        let mut dims: Vec<u32> = basis
            .levels
            .iter()
            .map(|lvl| lvl.iter().filter(|v| v.exponent == j).count() as u32)
            .collect();
        dims.push(0);
        let row: Vec<u32> = (0..depth).map(|k| dims[k] - dims[k + 1]).collect();
        let entries = row
            .iter()
            .zip(flag.weights())
            .filter(|(&n, _)| n > 0)
            .map(|(&n, w)| (w.clone(), n))
            .collect();
        fibers.push(FiberDescent {
            index: j,
            eigenspace_dim: dims[0],
            weights: PointWeights::new(entries)?,
        });
        matrix.push(row);
    }
    Ok(DescentResult { fibers, matrix })
}

/// Whether every eigenspace has dimension `r/d`.
pub fn fixed_point_shape(res: &DescentResult, r: u32, d: u32) -> bool {
    d > 0
        && r.is_multiple_of(d)
        && res.fibers.len() == d as usize
        && res.fibers.iter().all(|f| f.eigenspace_dim == r / d)
}

/// Which weight comparison triggers the flag condition for a morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MorphismConvention {
    /// `alpha_i > alpha'_j` forces `f(V_i) ⊆ W_{j+1}`.
    #[default]
    Strict,
    /// `alpha_i >= alpha'_j` forces it; the identity is then never parabolic
    /// on a flag with more than one step.
    NonStrict,
}

/// Checks `f(V_i) ⊆ W_{j+1}` for every pair of steps whose weights compare
/// according to `convention` (with `W_{l'+1} = 0`). `f` maps the ambient
/// space of `src` to that of `dst`.
pub fn check_parabolic_morphism(
    src: &WeightedFlag,
    dst: &WeightedFlag,
    f: &ExactMatrix<Cyclotomic>,
    convention: MorphismConvention,
) -> Result<bool, EigenflagError> {
    if f.cols() != src.ambient_dim || f.rows() != dst.ambient_dim {
        return Err(EigenflagError::DimensionMismatch(format!(
            "{}x{} map between dimensions {} and {}",
            f.rows(),
            f.cols(),
            src.ambient_dim,
            dst.ambient_dim
        )));
    }
    if src.field_order != dst.field_order {
        return Err(EigenflagError::OrderMismatch {
            expected: src.field_order,
            found: dst.field_order,
        });
    }
    check_order(src.field_order, f.zero_scalar())?;
    let zero = dst.zero();
    for (i, alpha) in src.weights.iter().enumerate() {
        let images = src.subspaces[i]
            .iter()
            .map(|v| f.mul_vec(v))
            .collect::<Result<Vec<_>, _>>()?;
        for (j, beta) in dst.weights.iter().enumerate() {
            let triggered = match convention {
                MorphismConvention::Strict => alpha > beta,
                MorphismConvention::NonStrict => alpha >= beta,
            };
            if !triggered {
                continue;
            }
            let target: &[Vector] = dst.subspaces.get(j + 1).map_or(&[], Vec::as_slice);
            let mut joined = target.to_vec();
            joined.extend(images.iter().cloned());
            if span_rank(&joined, &zero) != target.len() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn lift(order: u32, v: &[i64]) -> Vector {
        v.iter()
            .map(|&x| Cyclotomic::from_rational(order, Rational::integer(x)).unwrap())
            .collect()
    }

    fn vectors_of(level: &[EigenVector]) -> Vec<Vector> {
        level.iter().map(|e| e.vector.clone()).collect()
    }

    fn same_set(a: &[Vector], b: &[Vector]) -> bool {
        a.len() == b.len() && a.iter().all(|x| b.contains(x))
    }

    fn swap_flag() -> (FlagAutomorphism, WeightedFlag) {
        let phi = FlagAutomorphism::from_integer_rows(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        let flag = WeightedFlag::from_integer_vectors(
            2,
            2,
            &[vec![vec![1, 0], vec![0, 1]], vec![vec![1, 1]]],
            vec![q(1, 4), q(1, 2)],
        )
        .unwrap();
        (phi, flag)
    }

    #[test]
    fn swap_eigenbasis() {
        let (phi, flag) = swap_flag();
        let b = nested_eigenbasis(&phi, &flag).unwrap();
        assert_eq!(vectors_of(&b.levels[1]), vec![lift(2, &[1, 1])]);
        assert_eq!(b.levels[1][0].exponent, 2);
        assert!(same_set(
            &vectors_of(&b.levels[0]),
            &[lift(2, &[1, 1]), lift(2, &[1, -1])]
        ));
        for e in &b.levels[0] {
            let image = phi.matrix().mul_vec(&e.vector).unwrap();
            let scaled: Vector = e.vector.iter().map(|x| x.times(&e.eigenvalue)).collect();
            assert_eq!(image, scaled);
        }
    }

    #[test]
    fn identity_has_only_eigenvalue_one() {
        let phi =
            FlagAutomorphism::from_integer_rows(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])
                .unwrap();
        let flag = WeightedFlag::from_integer_vectors(
            3,
            3,
            &[
                vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
                vec![vec![1, 2, 3], vec![0, 1, 1]],
                vec![vec![1, 3, 4]],
            ],
            vec![q(0, 1), q(1, 3), q(2, 3)],
        )
        .unwrap();
        let b = nested_eigenbasis(&phi, &flag).unwrap();
        for (i, lvl) in b.levels.iter().enumerate() {
            assert!(lvl.iter().all(|e| e.exponent == 3 && e.eigenvalue.is_one()));
            assert_eq!(lvl.len(), flag.dims()[i]);
        }
    }

    #[test]
    fn diagonal_eigenbasis() {
        let phi =
            FlagAutomorphism::from_integer_rows(2, &[vec![1, 0, 0], vec![0, -1, 0], vec![0, 0, 1]])
                .unwrap();
        let flag = WeightedFlag::from_integer_vectors(
            3,
            2,
            &[
                vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
                vec![vec![1, 0, 1]],
            ],
            vec![q(1, 4), q(1, 2)],
        )
        .unwrap();
        let b = nested_eigenbasis(&phi, &flag).unwrap();
        assert_eq!(vectors_of(&b.levels[1]), vec![lift(2, &[1, 0, 1])]);
        assert!(same_set(
            &vectors_of(&b.levels[0]),
            &[
                lift(2, &[1, 0, 1]),
                lift(2, &[1, 0, -1]),
                lift(2, &[0, 1, 0])
            ]
        ));
    }

    #[test]
    fn descend_swap() {
        let (phi, flag) = swap_flag();
        let res = descend(&phi, &flag, 2).unwrap();
        assert_eq!(
            res.fibers[0].weights,
            PointWeights::new(vec![(q(1, 4), 1)]).unwrap()
        );
        assert_eq!(
            res.fibers[1].weights,
            PointWeights::new(vec![(q(1, 2), 1)]).unwrap()
        );
        assert_eq!(res.matrix, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(res.eigenspace_dims(), vec![1, 1]);
        assert!(fixed_point_shape(&res, 2, 2));
    }

    #[test]
    fn descend_identity_single_fiber() {
        let phi = FlagAutomorphism::from_integer_rows(1, &[vec![1, 0], vec![0, 1]]).unwrap();
        let flag = WeightedFlag::from_integer_vectors(
            2,
            1,
            &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1]]],
            vec![q(1, 5), q(3, 5)],
        )
        .unwrap();
        let res = descend(&phi, &flag, 1).unwrap();
        assert_eq!(res.fibers.len(), 1);
        assert_eq!(res.fibers[0].weights, flag.point_weights());
    }

    #[test]
    fn descend_minus_identity() {
        let phi = FlagAutomorphism::from_integer_rows(2, &[vec![-1, 0], vec![0, -1]]).unwrap();
        let flag = WeightedFlag::from_integer_vectors(
            2,
            2,
            &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1]]],
            vec![q(1, 4), q(1, 2)],
        )
        .unwrap();
        let res = descend(&phi, &flag, 2).unwrap();
        assert_eq!(res.eigenspace_dims(), vec![2, 0]);
        assert_eq!(
            res.fibers[0].weights,
            PointWeights::new(vec![(q(1, 4), 1), (q(1, 2), 1)]).unwrap()
        );
        assert!(res.fibers[1].weights.is_empty());
        assert!(!fixed_point_shape(&res, 2, 2));
    }

    #[test]
    fn fixed_shape_examples() {
        let mk = |dims: &[u32]| DescentResult {
            fibers: dims
                .iter()
                .enumerate()
                .map(|(j, &e)| FiberDescent {
                    index: j as u32 + 1,
                    eigenspace_dim: e,
                    weights: PointWeights::default(),
                })
                .collect(),
            matrix: Vec::new(),
        };
        assert!(fixed_point_shape(&mk(&[1, 1]), 2, 2));
        assert!(!fixed_point_shape(&mk(&[2, 0]), 2, 2));
        assert!(fixed_point_shape(&mk(&[2, 2, 2]), 6, 3));
        assert!(!fixed_point_shape(&mk(&[1, 1]), 3, 2));
    }

    #[test]
    fn morphism_conventions() {
        let (_, flag) = swap_flag();
        let zero = Cyclotomic::zero(2).unwrap();
        let id = ExactMatrix::identity(2, &zero);
        let nil = ExactMatrix::zeros(2, 2, &zero);
        assert!(check_parabolic_morphism(&flag, &flag, &id, MorphismConvention::Strict).unwrap());
        assert!(
            !check_parabolic_morphism(&flag, &flag, &id, MorphismConvention::NonStrict).unwrap()
        );
        for c in [MorphismConvention::Strict, MorphismConvention::NonStrict] {
            assert!(check_parabolic_morphism(&flag, &flag, &nil, c).unwrap());
        }
        let wide = ExactMatrix::zeros(2, 3, &zero);
        assert!(matches!(
            check_parabolic_morphism(&flag, &flag, &wide, MorphismConvention::Strict),
            Err(EigenflagError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            FlagAutomorphism::from_integer_rows(2, &[vec![1, 1], vec![0, 1]]),
            Err(EigenflagError::NotPeriodic(2))
        ));
        let (phi, _) = swap_flag();
        let not_preserved = WeightedFlag::from_integer_vectors(
            2,
            2,
            &[vec![vec![1, 0], vec![0, 1]], vec![vec![1, 0]]],
            vec![q(1, 4), q(1, 2)],
        )
        .unwrap();
        assert_eq!(
            nested_eigenbasis(&phi, &not_preserved),
            Err(EigenflagError::FlagNotPreserved(2))
        );
        assert!(matches!(
            WeightedFlag::from_integer_vectors(
                2,
                2,
                &[vec![vec![1, 0]], vec![vec![1, 0]]],
                vec![q(1, 4), q(1, 2)]
            ),
            Err(EigenflagError::InvalidFlag(_))
        ));
        assert!(matches!(
            WeightedFlag::from_integer_vectors(
                2,
                2,
                &[vec![vec![1, 0], vec![0, 1]], vec![vec![1, 0]]],
                vec![q(1, 2), q(1, 4)]
            ),
            Err(EigenflagError::Parabolic(_))
        ));
        let (phi, flag) = swap_flag();
        assert!(matches!(
            descend(&phi, &flag, 3),
            Err(EigenflagError::OrderMismatch { .. })
        ));
    }

    #[test]
    fn order_four_rotation() {
        // rotation by 90 degrees has eigenvalues z and z^3 = -z
        let phi = FlagAutomorphism::from_integer_rows(4, &[vec![0, -1], vec![1, 0]]).unwrap();
        let z = Cyclotomic::zeta(4).unwrap();
        let one = z.one_like();
        let v = vec![one.clone(), z.negated()];
        let flag = WeightedFlag::new(
            2,
            4,
            vec![vec![lift(4, &[1, 0]), lift(4, &[0, 1])], vec![v.clone()]],
            vec![q(0, 1), q(1, 2)],
        )
        .unwrap();
        let res = descend(&phi, &flag, 4).unwrap();
        assert_eq!(res.eigenspace_dims(), vec![1, 0, 1, 0]);
        assert_eq!(
            res.matrix,
            vec![vec![0, 1], vec![0, 0], vec![1, 0], vec![0, 0]]
        );
    }
}
