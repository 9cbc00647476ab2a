use super::{ExactError, Field};

/// Dense row-major matrix over an exact field.
///
/// `zero` is a prototype scalar used to build new entries; for cyclotomic
/// scalars it fixes the field order even when the matrix has no entries.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
    zero: F,
}

impl<F: Field> ExactMatrix<F> {
    pub fn new(rows: usize, cols: usize, entries: Vec<F>, zero: F) -> Result<Self, ExactError> {
        if entries.len() != rows * cols {
            return Err(ExactError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let zero = zero.zero_like();
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
            zero,
        })
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows(rows: Vec<Vec<F>>, zero: F) -> Result<Self, ExactError> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(ExactError::DimensionMismatch("ragged rows".into()));
        }
        ExactMatrix::new(n, m, rows.into_iter().flatten().collect(), zero)
    }

    /// Builds the matrix whose columns are the given vectors of length `dim`.
    pub fn from_columns(dim: usize, columns: &[Vec<F>], zero: F) -> Result<Self, ExactError> {
        if columns.iter().any(|c| c.len() != dim) {
            return Err(ExactError::DimensionMismatch(format!(
                "column vectors must have length {dim}"
            )));
        }
        let mut entries = Vec::with_capacity(dim * columns.len());
        for i in 0..dim {
            for c in columns {
                entries.push(c[i].clone());
            }
        }
        ExactMatrix::new(dim, columns.len(), entries, zero)
    }

    pub fn zeros(rows: usize, cols: usize, zero: &F) -> Self {
        let zero = zero.zero_like();
        ExactMatrix {
            rows,
            cols,
            entries: vec![zero.clone(); rows * cols],
            zero,
        }
    }

    pub fn identity(n: usize, proto: &F) -> Self {
        let mut m = ExactMatrix::zeros(n, n, proto);
        for i in 0..n {
            m.entries[i * n + i] = proto.one_like();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn zero_scalar(&self) -> &F {
        &self.zero
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: F) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = ExactMatrix::zeros(self.cols, self.rows, &self.zero);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Entrywise conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = self.transpose();
        for e in out.entries.iter_mut() {
            *e = e.conjugate();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Field::is_zero)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.cols != rhs.rows {
            return Err(ExactError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols, &self.zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).plus(&a.times(b));
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.zero.clone(), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect())
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, ExactError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(ExactError::DimensionMismatch(
                "shape mismatch in subtraction".into(),
            ));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.minus(b))
            .collect();
        ExactMatrix::new(self.rows, self.cols, entries, self.zero.clone())
    }

    /// `self - lambda * I`.
    pub fn shift(&self, lambda: &F) -> Result<Self, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::DimensionMismatch(
                "shift of a non-square matrix".into(),
            ));
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            let v = out.get(i, i).minus(lambda);
            out.set(i, i, v);
        }
        Ok(out)
    }

    pub fn pow(&self, e: u64) -> Result<Self, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::DimensionMismatch(
                "power of a non-square matrix".into(),
            ));
        }
        let mut acc = ExactMatrix::identity(self.rows, &self.zero);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Reduced row echelon form together with the pivot columns. Pivots are
    /// taken as the first nonzero entry in each column, scanning left to
    /// right.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.entries.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inverse();
            for j in c..m.cols {
                let v = m.get(r, j).times(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j).minus(&factor.times(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, returned in reduced echelon form (as row
    /// vectors), ordered by pivot position. Empty when the kernel is zero.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.zero.clone(); self.cols];
            v[free] = self.zero.one_like();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = r.get(row, free).negated();
            }
            basis.push(v);
        }
        echelon_basis(&basis, &self.zero)
    }
}

/// Reduced echelon basis of the span of `vectors`, dropping zero rows.
pub fn echelon_basis<F: Field>(vectors: &[Vec<F>], zero: &F) -> Vec<Vec<F>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = ExactMatrix::from_rows(vectors.to_vec(), zero.clone())
        .expect("vectors share a common length");
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Dimension of the span of `vectors`.
pub fn span_rank<F: Field>(vectors: &[Vec<F>], zero: &F) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    ExactMatrix::from_rows(vectors.to_vec(), zero.clone())
        .expect("vectors share a common length")
        .rank()
}

/// Scales `v` so that its first nonzero entry is one.
pub fn normalize_leading<F: Field>(v: &[F]) -> Vec<F> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let inv = lead.inverse();
            v.iter().map(|x| x.times(&inv)).collect()
        }
        None => v.to_vec(),
    }
}
