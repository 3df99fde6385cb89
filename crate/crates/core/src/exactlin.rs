//! Exact rational linear algebra: rank, kernel, subspace intersection and
//! sum, projector checks.
//!
//! Scalars are arbitrary-precision rationals (always in lowest terms with a
//! positive denominator), so every result is exact and exact equality is a
//! meaningful test oracle. Subspaces are kept in reduced row echelon form
//! with sorted pivot columns; two bases spanning the same subspace therefore
//! compare equal as plain values.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational scalar: arbitrary-precision numerator and positive
/// denominator, always reduced to lowest terms.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Sparse coordinate vector: `(index, coefficient)` pairs, sorted by index,
/// all coefficients nonzero.
pub type SparseVec = Vec<(u32, Rat)>;

/// Builds a sparse vector from an unsorted list of (index, value) pairs,
/// summing duplicates and dropping zeros.
pub fn sparse_from_pairs(pairs: impl IntoIterator<Item = (u32, Rat)>) -> SparseVec {
    let mut acc: BTreeMap<u32, Rat> = BTreeMap::new();
    for (i, v) in pairs {
        let slot = acc.entry(i).or_insert_with(Rat::zero);
        *slot += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Dense expansion of a sparse vector.
pub fn sparse_to_dense(v: &[(u32, Rat)], len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for (i, c) in v {
        out[*i as usize] = c.clone();
    }
    out
}

fn sparse_get(v: &[(u32, Rat)], idx: u32) -> Option<&Rat> {
    v.binary_search_by_key(&idx, |(i, _)| *i)
        .ok()
        .map(|p| &v[p].1)
}

/// `a - c*b`, merging sorted supports.
fn sparse_sub_scaled(a: &[(u32, Rat)], c: &Rat, b: &[(u32, Rat)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ia, va)), Some((ib, vb))) => {
                if ia < ib {
                    out.push((*ia, va.clone()));
                    i += 1;
                } else if ib < ia {
                    out.push((*ib, -(c * vb)));
                    j += 1;
                } else {
                    let v = va - &(c * vb);
                    if !v.is_zero() {
                        out.push((*ia, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some((ia, va)), None) => {
                out.push((*ia, va.clone()));
                i += 1;
            }
            (None, Some((ib, vb))) => {
                out.push((*ib, -(c * vb)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn sparse_scale(v: &mut SparseVec, c: &Rat) {
    for (_, x) in v.iter_mut() {
        *x *= c;
    }
}

/// Errors from the linear-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinError {
    /// Two subspaces of different ambient dimension were combined.
    AmbientMismatch { left: usize, right: usize },
    /// An operation requiring a square matrix received a non-square one.
    NonSquare { rows: usize, cols: usize },
    /// Matrix product with incompatible shapes.
    ShapeMismatch,
}

impl fmt::Display for LinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinError::AmbientMismatch { left, right } => {
                write!(f, "ambient dimension mismatch: {left} vs {right}")
            }
            LinError::NonSquare { rows, cols } => {
                write!(f, "matrix is not square: {rows}x{cols}")
            }
            LinError::ShapeMismatch => write!(f, "incompatible matrix shapes"),
        }
    }
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Matrix representation. Sparse storage is used below a 25% fill ratio,
/// dense storage above it; all operations give bit-identical results on
/// either path.
#[derive(Debug, Clone)]
enum Storage {
    Dense(Vec<Rat>),
    Sparse(BTreeMap<(u32, u32), Rat>),
}

/// Immutable exact rational matrix.
#[derive(Debug, Clone)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    storage: Storage,
}

const SPARSE_FILL_THRESHOLD_NUM: usize = 1;
const SPARSE_FILL_THRESHOLD_DEN: usize = 4;

impl RatMatrix {
    /// Zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            storage: Storage::Sparse(BTreeMap::new()),
        }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        Self::from_triplets(n, n, (0..n).map(|i| (i, i, Rat::one())))
    }

    /// Builds a matrix from (row, col, value) triplets, summing duplicates.
    /// The storage layout is chosen automatically from the fill ratio.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rat)>,
    ) -> Self {
        let mut map: BTreeMap<(u32, u32), Rat> = BTreeMap::new();
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet out of bounds");
            let slot = map.entry((r as u32, c as u32)).or_insert_with(Rat::zero);
            *slot += v;
        }
        map.retain(|_, v| !v.is_zero());
        let nnz = map.len();
        let mut m = RatMatrix {
            rows,
            cols,
            storage: Storage::Sparse(map),
        };
        if nnz * SPARSE_FILL_THRESHOLD_DEN > rows * cols * SPARSE_FILL_THRESHOLD_NUM {
            m = m.into_dense_storage();
        }
        m
    }

    /// Builds a matrix from dense rows.
    pub fn from_dense(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_triplets(
            r,
            c,
            rows.into_iter().enumerate().flat_map(|(i, row)| {
                row.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(move |(j, v)| (i, j, v))
            }),
        )
    }

    /// Forces dense storage (used to exercise both elimination paths).
    pub fn into_dense_storage(self) -> Self {
        match self.storage {
            Storage::Dense(_) => self,
            Storage::Sparse(map) => {
                let mut data = vec![Rat::zero(); self.rows * self.cols];
                for ((r, c), v) in map {
                    data[r as usize * self.cols + c as usize] = v;
                }
                RatMatrix {
                    rows: self.rows,
                    cols: self.cols,
                    storage: Storage::Dense(data),
                }
            }
        }
    }

    /// Forces sparse storage (used to exercise both elimination paths).
    pub fn into_sparse_storage(self) -> Self {
        match self.storage {
            Storage::Sparse(_) => self,
            Storage::Dense(data) => {
                let cols = self.cols;
                let map = data
                    .into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| (((k / cols) as u32, (k % cols) as u32), v))
                    .collect();
                RatMatrix {
                    rows: self.rows,
                    cols,
                    storage: Storage::Sparse(map),
                }
            }
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at (r, c).
    pub fn get(&self, r: usize, c: usize) -> Rat {
        assert!(r < self.rows && c < self.cols);
        match &self.storage {
            Storage::Dense(d) => d[r * self.cols + c].clone(),
            Storage::Sparse(m) => m
                .get(&(r as u32, c as u32))
                .cloned()
                .unwrap_or_else(Rat::zero),
        }
    }

    /// Row `r` as a sparse vector.
    pub fn sparse_row(&self, r: usize) -> SparseVec {
        match &self.storage {
            Storage::Dense(d) => d[r * self.cols..(r + 1) * self.cols]
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j as u32, v.clone()))
                .collect(),
            Storage::Sparse(m) => m
                .range((r as u32, 0)..=(r as u32, u32::MAX))
                .map(|((_, c), v)| (*c, v.clone()))
                .collect(),
        }
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut trips = Vec::new();
        self.for_each_nonzero(|r, c, v| trips.push((c, r, v.clone())));
        RatMatrix::from_triplets(self.cols, self.rows, trips)
    }

    fn for_each_nonzero(&self, mut f: impl FnMut(usize, usize, &Rat)) {
        match &self.storage {
            Storage::Dense(d) => {
                for r in 0..self.rows {
                    for c in 0..self.cols {
                        let v = &d[r * self.cols + c];
                        if !v.is_zero() {
                            f(r, c, v);
                        }
                    }
                }
            }
            Storage::Sparse(m) => {
                for ((r, c), v) in m {
                    f(*r as usize, *c as usize, v);
                }
            }
        }
    }

    /// Number of stored nonzero entries.
    pub fn nnz(&self) -> usize {
        let mut n = 0;
        self.for_each_nonzero(|_, _, _| n += 1);
        n
    }

    /// Exact matrix product.
    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, LinError> {
        if self.cols != other.rows {
            return Err(LinError::ShapeMismatch);
        }
        let mut trips = Vec::new();
        for r in 0..self.rows {
            let mut acc: BTreeMap<u32, Rat> = BTreeMap::new();
            for (k, a) in self.sparse_row(r) {
                for (j, b) in other.sparse_row(k as usize) {
                    let slot = acc.entry(j).or_insert_with(Rat::zero);
                    *slot += a.clone() * b;
                }
            }
            for (j, v) in acc {
                if !v.is_zero() {
                    trips.push((r, j as usize, v));
                }
            }
        }
        Ok(RatMatrix::from_triplets(self.rows, other.cols, trips))
    }

    /// Exact matrix sum.
    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix, LinError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinError::ShapeMismatch);
        }
        let mut trips = Vec::new();
        self.for_each_nonzero(|r, c, v| trips.push((r, c, v.clone())));
        other.for_each_nonzero(|r, c, v| trips.push((r, c, v.clone())));
        Ok(RatMatrix::from_triplets(self.rows, self.cols, trips))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat) -> RatMatrix {
        let mut trips = Vec::new();
        self.for_each_nonzero(|r, co, v| trips.push((r, co, v * c)));
        RatMatrix::from_triplets(self.rows, self.cols, trips)
    }

    /// Rank over ℚ, by exact Gaussian elimination on the storage's own path.
    pub fn rank(&self) -> usize {
        match &self.storage {
            Storage::Dense(_) => self.rank_dense(),
            Storage::Sparse(_) => self.row_space().dim(),
        }
    }

    fn rank_dense(&self) -> usize {
        let mut a: Vec<Vec<Rat>> = (0..self.rows)
            .map(|r| sparse_to_dense(&self.sparse_row(r), self.cols))
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let pivot = (rank..self.rows).find(|&r| !a[r][col].is_zero());
            let Some(p) = pivot else { continue };
            a.swap(rank, p);
            let inv = a[rank][col].clone();
            for v in a[rank].iter_mut() {
                *v /= inv.clone();
            }
            for r in 0..self.rows {
                if r != rank && !a[r][col].is_zero() {
                    let c = a[r][col].clone();
                    for j in 0..self.cols {
                        let t = &a[rank][j] * &c;
                        a[r][j] -= t;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Row space as a canonical subspace of ℚ^cols.
    pub fn row_space(&self) -> SubspaceBasis {
        let mut basis = SubspaceBasis::empty(self.cols);
        for r in 0..self.rows {
            basis.insert(self.sparse_row(r));
        }
        basis
    }

    /// Canonical basis of the right kernel `{x : Mx = 0}`.
    ///
    /// The reduced echelon form of the rows is computed first; each free
    /// column then contributes one kernel vector, and the result is
    /// re-canonicalized so equal kernels are equal values.
    pub fn kernel_basis(&self) -> SubspaceBasis {
        let row_rref = self.row_space();
        let pivots: Vec<u32> = row_rref.rows.iter().map(|r| r[0].0).collect();
        let is_pivot = |c: u32| pivots.binary_search(&c).is_ok();
        let mut kernel = SubspaceBasis::empty(self.cols);
        for free in 0..self.cols as u32 {
            if is_pivot(free) {
                continue;
            }
            let mut v: Vec<(u32, Rat)> = vec![(free, Rat::one())];
            for row in &row_rref.rows {
                if let Some(c) = sparse_get(row, free) {
                    v.push((row[0].0, -c.clone()));
                }
            }
            v.sort_by_key(|(i, _)| *i);
            kernel.insert(v);
        }
        kernel
    }

    /// True iff the matrix is square and `M*M == M` exactly.
    pub fn is_idempotent(&self) -> Result<bool, LinError> {
        if self.rows != self.cols {
            return Err(LinError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.mul(self)? == *self)
    }

    /// Exact inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Result<Option<RatMatrix>, LinError> {
        if self.rows != self.cols {
            return Err(LinError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        // Gauss-Jordan on [M | I].
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|r| {
                let mut row = sparse_to_dense(&self.sparse_row(r), n);
                let mut aug = vec![Rat::zero(); n];
                aug[r] = Rat::one();
                row.extend(aug);
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero());
            let Some(p) = pivot else {
                return Ok(None);
            };
            a.swap(col, p);
            let inv = a[col][col].clone();
            for v in a[col].iter_mut() {
                *v /= inv.clone();
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let c = a[r][col].clone();
                    for j in 0..2 * n {
                        let t = &a[col][j] * &c;
                        a[r][j] -= t;
                    }
                }
            }
        }
        let inv = RatMatrix::from_dense(a.into_iter().map(|row| row[n..].to_vec()).collect());
        Ok(Some(inv))
    }
}

impl PartialEq for RatMatrix {
    fn eq(&self, other: &Self) -> bool {
        if self.rows != other.rows || self.cols != other.cols {
            return false;
        }
        let mut a: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
        self.for_each_nonzero(|r, c, v| {
            a.insert((r, c), v.clone());
        });
        let mut b: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
        other.for_each_nonzero(|r, c, v| {
            b.insert((r, c), v.clone());
        });
        a == b
    }
}

impl Eq for RatMatrix {}

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

/// A linear subspace of ℚ^ambient in canonical form: the rows are the reduced
/// row echelon basis, sorted by pivot column, pivot coefficients 1, pivot
/// columns cleared everywhere else. Equal subspaces are equal values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    rows: Vec<SparseVec>,
}

impl SubspaceBasis {
    /// The zero subspace.
    pub fn empty(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            rows: Vec::new(),
        }
    }

    /// The full space ℚ^ambient.
    pub fn full(ambient: usize) -> Self {
        let mut s = Self::empty(ambient);
        for i in 0..ambient as u32 {
            s.rows.push(vec![(i, Rat::one())]);
        }
        s
    }

    /// Canonical basis of the span of the given vectors.
    pub fn from_spanning(ambient: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut s = Self::empty(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Canonical basis vectors, sorted by pivot column.
    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Basis as a `dim x ambient` matrix.
    pub fn basis_matrix(&self) -> RatMatrix {
        RatMatrix::from_triplets(
            self.rows.len(),
            self.ambient,
            self.rows.iter().enumerate().flat_map(|(i, row)| {
                row.iter().map(move |(j, v)| (i, *j as usize, v.clone()))
            }),
        )
    }

    /// Residual of `v` after elimination against the basis; zero iff `v`
    /// lies in the subspace. Reduction against a fixed basis is linear in `v`.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        for row in &self.rows {
            let pivot = row[0].0;
            if let Some(c) = sparse_get(&v, pivot) {
                let c = c.clone();
                v = sparse_sub_scaled(&v, &c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[(u32, Rat)]) -> bool {
        self.reduce(v.to_vec()).is_empty()
    }

    /// Inserts a vector into the span, keeping the canonical form. Returns
    /// true iff the dimension grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.iter().all(|(i, c)| (*i as usize) < self.ambient && !c.is_zero()));
        let mut v = self.reduce(v);
        if v.is_empty() {
            return false;
        }
        let lead = v[0].1.clone();
        let inv = Rat::one() / lead;
        sparse_scale(&mut v, &inv);
        let pivot = v[0].0;
        for row in self.rows.iter_mut() {
            if let Some(c) = sparse_get(row, pivot) {
                let c = c.clone();
                *row = sparse_sub_scaled(row, &c, &v);
            }
        }
        let pos = self
            .rows
            .binary_search_by_key(&pivot, |r| r[0].0)
            .unwrap_err();
        self.rows.insert(pos, v);
        true
    }

    /// Canonical basis of the sum `self + other`.
    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, LinError> {
        if self.ambient != other.ambient {
            return Err(LinError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        let mut s = self.clone();
        for row in &other.rows {
            s.insert(row.clone());
        }
        Ok(s)
    }

    /// Canonical basis of the intersection.
    ///
    /// A combination `sum c_j b_j` of the basis of `other` lies in `self`
    /// exactly when the corresponding combination of residuals
    /// `r_j = reduce(b_j)` vanishes, so the coefficient vectors form the
    /// kernel of the (small) residual matrix.
    pub fn intersect(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, LinError> {
        if self.ambient != other.ambient {
            return Err(LinError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        // Reduce the smaller basis against the bigger one.
        let (big, small) = if self.dim() >= other.dim() {
            (self, other)
        } else {
            (other, self)
        };
        let residuals: Vec<SparseVec> = small
            .rows
            .iter()
            .map(|b| big.reduce(b.clone()))
            .collect();
        // Columns of the residual matrix are indexed by small's basis.
        let residual_matrix = RatMatrix::from_triplets(
            self.ambient,
            small.dim(),
            residuals.iter().enumerate().flat_map(|(j, r)| {
                r.iter().map(move |(i, v)| (*i as usize, j, v.clone()))
            }),
        );
        let coeffs = residual_matrix.kernel_basis();
        let mut out = SubspaceBasis::empty(self.ambient);
        for c in coeffs.basis() {
            let mut v: SparseVec = Vec::new();
            for (j, cj) in c {
                let mut term = small.rows[*j as usize].clone();
                sparse_scale(&mut term, cj);
                v = sparse_sub_scaled(&v, &-Rat::one(), &term) // v += term
                    .into_iter()
                    .collect();
            }
            out.insert(v);
        }
        Ok(out)
    }
}
