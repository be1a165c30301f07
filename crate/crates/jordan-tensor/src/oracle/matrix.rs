//! Dense matrices over a runtime field, sized for brute force: the largest
//! instances the suites touch are `100 x 100`.

use super::field::Field;
use crate::arith::Partition;

/// Dense row-major matrix over the field `F`.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Matrix<F> {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_fn(
        field: F,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> F::Elem,
    ) -> Matrix<F> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Matrix<F> {
        let one = field.one();
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = one.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Matrix product, skipping zero entries (the powers of a shift-like
    /// matrix are sparse, and this keeps the oracle affordable).
    ///
    /// # Panics
    ///
    /// Panics on dimension or field mismatch.
    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        assert!(
            self.field == other.field,
            "field mismatch in matrix product"
        );
        let f = &self.field;
        let mut out = Matrix::zeros(self.field.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if f.is_zero(b) {
                        continue;
                    }
                    let prod = f.mul(a, b);
                    out[(i, j)] = f.add(&out[(i, j)], &prod);
                }
            }
        }
        out
    }

    /// `self - lambda * I`.
    pub fn minus_scaled_identity(&self, lambda: &F::Elem) -> Matrix<F> {
        assert_eq!(self.rows, self.cols, "needs a square matrix");
        let mut out = self.clone();
        for i in 0..self.rows {
            out[(i, i)] = self.field.sub(&out[(i, i)], lambda);
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for j in 0..self.cols {
                    let a = &self[(i, j)];
                    if f.is_zero(a) || f.is_zero(&v[j]) {
                        continue;
                    }
                    let prod = f.mul(a, &v[j]);
                    acc = f.add(&acc, &prod);
                }
                acc
            })
            .collect()
    }

    fn to_row_vecs(&self) -> Vec<Vec<F::Elem>> {
        self.data
            .chunks(self.cols.max(1))
            .map(|c| c.to_vec())
            .collect()
    }

    /// Rank over the field, by exact elimination.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.field.rank_rows(self.to_row_vecs(), self.cols)
    }

    /// A basis of the right null space, one vector per non-pivot column of
    /// the reduced row echelon form.
    pub fn null_space(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let mut m = self.to_row_vecs();
        let mut pivots: Vec<usize> = Vec::new(); // pivots[r] = column of row r
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..m.len()).find(|&r| !f.is_zero(&m[r][col])) else {
                continue;
            };
            m.swap(rank, p);
            let inv_pivot = f.inv(&m[rank][col]);
            for e in m[rank].iter_mut().skip(col) {
                *e = f.mul(e, &inv_pivot);
            }
            let pivot_row = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == rank || f.is_zero(&row[col]) {
                    continue;
                }
                let factor = row[col].clone();
                for c in col..self.cols {
                    let delta = f.mul(&factor, &pivot_row[c]);
                    row[c] = f.sub(&row[c], &delta);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&m[r][free]);
            }
            basis.push(v);
        }
        basis
    }
}

impl<F: Field> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F::Elem;

    fn index(&self, (i, j): (usize, usize)) -> &F::Elem {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F::Elem {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

/// The `size x size` Jordan block: `eigenvalue` on the diagonal, 1 on the
/// superdiagonal.
pub fn jordan_matrix<F: Field>(field: &F, eigenvalue: &F::Elem, size: usize) -> Matrix<F> {
    assert!(size >= 1, "Jordan blocks have size at least 1");
    let mut m = Matrix::zeros(field.clone(), size, size);
    let one = field.one();
    for i in 0..size {
        m[(i, i)] = eigenvalue.clone();
        if i + 1 < size {
            m[(i, i + 1)] = one.clone();
        }
    }
    m
}

/// Kronecker (tensor) product: block `a[i][j] * b`.
///
/// # Panics
///
/// Panics on field mismatch.
pub fn kronecker<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    assert!(
        a.field() == b.field(),
        "field mismatch in Kronecker product"
    );
    let f = a.field().clone();
    Matrix::from_fn(
        f.clone(),
        a.rows() * b.rows(),
        a.cols() * b.cols(),
        |i, j| {
            let (i1, i2) = (i / b.rows(), i % b.rows());
            let (j1, j2) = (j / b.cols(), j % b.cols());
            f.mul(&a[(i1, j1)], &b[(i2, j2)])
        },
    )
}

/// Jordan structure of a square matrix whose only eigenvalue is
/// `eigenvalue`: the block-size partition read off the rank profile of
/// powers of `N = M - eigenvalue * I`. The number of blocks of size `>= i`
/// is `rank(N^(i-1)) - rank(N^i)`.
///
/// # Panics
///
/// Panics if the ranks fail to hit zero within `dim` steps, i.e. if `M` has
/// some other eigenvalue.
pub fn partition_from_ranks<F: Field>(m: &Matrix<F>, eigenvalue: &F::Elem) -> Partition {
    assert_eq!(m.rows(), m.cols(), "needs a square matrix");
    let n = m.rows();
    if n == 0 {
        return Partition::empty();
    }
    let nilpotent = m.minus_scaled_identity(eigenvalue);
    let mut power = nilpotent.clone();
    let mut diffs = Vec::new();
    let mut prev_rank = n;
    for _ in 0..n {
        let r = power.rank();
        diffs.push(prev_rank - r);
        prev_rank = r;
        if r == 0 {
            return Partition::new(diffs).conjugate();
        }
        power = power.mul(&nilpotent);
    }
    panic!("matrix is not nilpotent after shifting by the claimed eigenvalue");
}
