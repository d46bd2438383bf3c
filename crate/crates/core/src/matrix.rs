//! Power matrices and the index types used to sum over them.
//!
//! A power matrix has `R` columns (one per group column involved) and a
//! symbolic number `N` of rows. Only the leading `r` rows are stored; every
//! row past the support is zero.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// Vector of non-negative exponents or summation indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VectorIndex(Vec<u32>);

impl VectorIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        VectorIndex(entries)
    }

    pub fn zeros(len: usize) -> Self {
        VectorIndex(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Component sum (the "bar" of the vector).
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|v| v % 2 == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = &u32> {
        self.0.iter()
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::Shape(format!(
                "vector lengths differ ({} vs {})",
                self.len(),
                other.len()
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(VectorIndex(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Componentwise `self - other`; requires `other <= self`.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .enumerate()
            .map(|(index, (&a, &b))| {
                a.checked_sub(b).ok_or(Error::IndexOutOfRange {
                    index,
                    value: b,
                    bound: a,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(VectorIndex)
    }
}

impl Index<usize> for VectorIndex {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for VectorIndex {
    fn from(v: Vec<u32>) -> Self {
        VectorIndex(v)
    }
}

impl<const K: usize> From<[u32; K]> for VectorIndex {
    fn from(v: [u32; K]) -> Self {
        VectorIndex(v.to_vec())
    }
}

/// Row-major matrix of non-negative summation indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixIndex {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl MatrixIndex {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged index matrix".into()));
        }
        Ok(MatrixIndex {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub(crate) fn from_flat(rows: usize, cols: usize, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        MatrixIndex { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_sums(&self) -> VectorIndex {
        (0..self.rows)
            .map(|i| self.row(i).iter().sum())
            .collect::<Vec<_>>()
            .into()
    }

    pub fn column_sums(&self) -> VectorIndex {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j)).sum())
            .collect::<Vec<_>>()
            .into()
    }
}

/// Exponent matrix of a monomial in the entries of an orthogonal matrix.
///
/// Stored rows stop at the last nonzero row. The column count is fixed at
/// construction and may include zero columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerMatrix {
    cols: usize,
    data: Vec<u32>,
}

impl PowerMatrix {
    /// Build from signed rows, rejecting negative entries and ragged input.
    pub fn new(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if cols == 0 {
            return Err(Error::Shape(
                "a power matrix needs at least one column".into(),
            ));
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                let v = u32::try_from(v).map_err(|_| Error::InvalidExponent {
                    row: i,
                    col: j,
                    value: v,
                })?;
                data.push(v);
            }
        }
        Ok(Self::from_flat(cols, data))
    }

    /// Build from non-negative rows.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if cols == 0 {
            return Err(Error::Shape(
                "a power matrix needs at least one column".into(),
            ));
        }
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Self::from_flat(cols, rows.concat()))
    }

    /// A single column.
    pub fn column(v: &VectorIndex) -> Self {
        Self::from_flat(1, v.entries().to_vec())
    }

    /// `m` and `n` side by side.
    pub fn two_columns(m: &VectorIndex, n: &VectorIndex) -> Result<Self> {
        if m.len() != n.len() {
            return Err(Error::Shape("column lengths differ".into()));
        }
        let data = m.iter().zip(n.iter()).flat_map(|(&a, &b)| [a, b]).collect();
        Ok(Self::from_flat(2, data))
    }

    pub fn zeros(cols: usize) -> Self {
        assert!(cols > 0);
        PowerMatrix {
            cols,
            data: Vec::new(),
        }
    }

    /// Square matrix with `diag` on the diagonal.
    pub fn diagonal(diag: &[u32]) -> Self {
        let n = diag.len();
        let mut data = vec![0; n * n];
        for (i, &d) in diag.iter().enumerate() {
            data[i * n + i] = d;
        }
        Self::from_flat(n, data)
    }

    pub(crate) fn from_flat(cols: usize, mut data: Vec<u32>) -> Self {
        debug_assert!(cols > 0 && data.len() % cols == 0);
        while data.len() >= cols && data[data.len() - cols..].iter().all(|&v| v == 0) {
            data.truncate(data.len() - cols);
        }
        PowerMatrix { cols, data }
    }

    /// `R`, the number of columns.
    pub fn column_count(&self) -> usize {
        self.cols
    }

    /// `r`, the number of stored rows.
    pub fn support(&self) -> usize {
        self.data.len() / self.cols
    }

    /// Smallest `N` for which the matrix fits into an `N x N` group element.
    pub fn validity_bound(&self) -> usize {
        self.cols.max(self.support())
    }

    /// Entry `(i, j)`; rows past the support read as zero.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        assert!(j < self.cols, "column {j} out of range");
        self.data.get(i * self.cols + j).copied().unwrap_or(0)
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.data.chunks(self.cols)
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.rows().map(<[u32]>::to_vec).collect()
    }

    /// Column `j` over the support rows.
    pub fn column_vector(&self, j: usize) -> VectorIndex {
        self.rows().map(|r| r[j]).collect::<Vec<_>>().into()
    }

    pub fn row_sums(&self) -> Vec<u32> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    pub fn column_sums(&self) -> Vec<u32> {
        (0..self.cols)
            .map(|j| self.rows().map(|r| r[j]).sum())
            .collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.data.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.is_empty()
    }

    /// True if some row or column sum is odd, in which case the integral
    /// vanishes.
    pub fn is_vanishing_by_parity(&self) -> bool {
        self.row_sums()
            .iter()
            .chain(self.column_sums().iter())
            .any(|s| s % 2 == 1)
    }

    /// Last column over the support rows.
    pub fn last_column(&self) -> VectorIndex {
        self.column_vector(self.cols - 1)
    }

    /// The first `R - 1` columns. Fails for a single-column matrix.
    pub fn drop_last_column(&self) -> Result<Self> {
        if self.cols < 2 {
            return Err(Error::Shape("cannot drop the only column".into()));
        }
        let data = self
            .rows()
            .flat_map(|r| r[..self.cols - 1].iter().copied())
            .collect();
        Ok(Self::from_flat(self.cols - 1, data))
    }

    /// `self + k`, zero-padding whichever has fewer rows.
    pub fn add_index(&self, k: &MatrixIndex) -> Result<Self> {
        if k.cols() != self.cols {
            return Err(Error::Shape(format!(
                "index matrix has {} columns, power matrix has {}",
                k.cols(),
                self.cols
            )));
        }
        let rows = self.support().max(k.rows());
        let mut data = vec![0; rows * self.cols];
        for i in 0..rows {
            for j in 0..self.cols {
                let kij = if i < k.rows() { k.get(i, j) } else { 0 };
                data[i * self.cols + j] = self.get(i, j) + kij;
            }
        }
        Ok(Self::from_flat(self.cols, data))
    }

    /// Transpose of the support block; the result has `r` columns.
    ///
    /// Fails on the zero matrix, which has no support to transpose.
    pub fn transpose(&self) -> Result<Self> {
        let r = self.support();
        if r == 0 {
            return Err(Error::Shape("zero matrix has an empty support".into()));
        }
        let mut data = vec![0; r * self.cols];
        for i in 0..r {
            for j in 0..self.cols {
                data[j * r + i] = self.get(i, j);
            }
        }
        Ok(Self::from_flat(r, data))
    }

    /// Reorder columns: column `j` of the result is column `perm[j]` of self.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.cols)?;
        let data = self
            .rows()
            .flat_map(|r| perm.iter().map(move |&p| r[p]))
            .collect();
        Ok(Self::from_flat(self.cols, data))
    }

    /// Reorder the first `perm.len()` rows (must cover the support): row `i`
    /// of the result is row `perm[i]` of self.
    pub fn permute_rows(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() < self.support() {
            return Err(Error::Shape(
                "row permutation shorter than the support".into(),
            ));
        }
        check_permutation(perm, perm.len())?;
        let data = perm
            .iter()
            .flat_map(|&p| (0..self.cols).map(move |j| self.get(p, j)))
            .collect();
        Ok(Self::from_flat(self.cols, data))
    }

    /// Add `delta` to entry `(i, j)`, growing the support if needed.
    pub fn add_at(&self, i: usize, j: usize, delta: u32) -> Self {
        assert!(j < self.cols);
        let rows = self.support().max(i + 1);
        let mut data = self.data.clone();
        data.resize(rows * self.cols, 0);
        data[i * self.cols + j] += delta;
        Self::from_flat(self.cols, data)
    }

    /// Append `row` directly below the support.
    pub fn with_row_appended(&self, row: &[u32]) -> Result<Self> {
        if row.len() != self.cols {
            return Err(Error::Shape("appended row has the wrong length".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(row);
        Ok(Self::from_flat(self.cols, data))
    }

    /// Key shared by all matrices related by row or column permutation,
    /// transposition, or insertion/removal of zero rows and columns.
    ///
    /// The block is oriented to have no more columns than rows. Up to
    /// [`EXACT_KEY_COLUMNS`] columns the key is a complete invariant: the
    /// largest row-sorted form over all column permutations. Wider blocks
    /// fall back to alternating row/column sorts, which may split one class
    /// into several keys but never merges two classes.
    pub fn canonical_key(&self) -> CanonicalKey {
        let block = Block::compact(self);
        if block.rows == 0 || block.cols == 0 {
            return CanonicalKey {
                cols: 0,
                rows: 0,
                data: Vec::new(),
            };
        }
        let candidates = match block.cols.cmp(&block.rows) {
            std::cmp::Ordering::Less => vec![block],
            std::cmp::Ordering::Greater => vec![block.transposed()],
            std::cmp::Ordering::Equal => {
                let t = block.transposed();
                vec![block, t]
            }
        };
        candidates
            .into_iter()
            .map(|b| {
                if b.cols <= EXACT_KEY_COLUMNS {
                    b.exact_form()
                } else {
                    b.sorted()
                }
            })
            .map(Block::into_key)
            .max()
            .unwrap()
    }
}

/// Column count up to which [`PowerMatrix::canonical_key`] is exact.
pub const EXACT_KEY_COLUMNS: usize = 6;

impl fmt::Display for PowerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 ({} columns)", self.cols);
        }
        let rows: Vec<String> = self
            .rows()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join("; "))
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::Shape(format!(
            "permutation of length {} for {n} items",
            perm.len()
        )));
    }
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Shape("not a permutation".into()));
        }
    }
    Ok(())
}

/// Memo key for power matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    cols: usize,
    rows: usize,
    data: Vec<u32>,
}

impl CanonicalKey {
    /// The representative matrix; for the all-zero class this is a single
    /// zero column.
    pub fn to_matrix(&self) -> PowerMatrix {
        if self.cols == 0 {
            return PowerMatrix::zeros(1);
        }
        PowerMatrix::from_flat(self.cols, self.data.clone())
    }

    pub fn column_count(&self) -> usize {
        self.cols
    }
}

#[derive(Clone)]
struct Block {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

const SORT_ROUNDS: usize = 64;

impl Block {
    fn compact(m: &PowerMatrix) -> Self {
        let keep_cols: Vec<usize> = (0..m.cols)
            .filter(|&j| m.rows().any(|r| r[j] != 0))
            .collect();
        let mut data = Vec::new();
        let mut rows = 0;
        for r in m.rows().filter(|r| r.iter().any(|&v| v != 0)) {
            data.extend(keep_cols.iter().map(|&j| r[j]));
            rows += 1;
        }
        Block {
            rows,
            cols: keep_cols.len(),
            data,
        }
    }

    fn transposed(&self) -> Self {
        let mut data = vec![0; self.data.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        Block {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Alternate descending row and column sorts until neither moves.
    fn sorted(mut self) -> Self {
        for _ in 0..SORT_ROUNDS {
            let before = self.data.clone();
            let mut rows: Vec<&[u32]> = self.data.chunks(self.cols).collect();
            rows.sort_by(|a, b| b.cmp(a));
            let data: Vec<u32> = rows.concat();
            let mut cols: Vec<Vec<u32>> = (0..self.cols)
                .map(|j| (0..self.rows).map(|i| data[i * self.cols + j]).collect())
                .collect();
            cols.sort_by(|a, b| b.cmp(a));
            for (j, c) in cols.iter().enumerate() {
                for (i, &v) in c.iter().enumerate() {
                    self.data[i * self.cols + j] = v;
                }
            }
            if self.data == before {
                break;
            }
        }
        self
    }

    fn sorted_rows(&self, col_order: &[usize]) -> Vec<u32> {
        let mut rows: Vec<Vec<u32>> = self
            .data
            .chunks(self.cols)
            .map(|r| col_order.iter().map(|&j| r[j]).collect())
            .collect();
        rows.sort_by(|a, b| b.cmp(a));
        rows.concat()
    }

    /// Largest row-sorted data over all column permutations (Heap's
    /// algorithm).
    fn exact_form(mut self) -> Self {
        let n = self.cols;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = self.sorted_rows(&perm);
        let mut c = vec![0usize; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                let cand = self.sorted_rows(&perm);
                if cand > best {
                    best = cand;
                }
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        self.data = best;
        self
    }

    fn into_key(self) -> CanonicalKey {
        CanonicalKey {
            cols: self.cols,
            rows: self.rows,
            data: self.data,
        }
    }
}
