//! Explicit tensor-space model of Weyl's construction for `Sp(2n)` and
//! `O(2n)`: contraction and insertion operators, traceless subspaces, Schur
//! images, their intersections, and Hodge `(p-q)` profiles.
//!
//! Conventions, fixed once:
//!
//! * The standard space `V` has basis `e_1..e_n, e_{-1}..e_{-n}`, in that
//!   order. Basis index `i` (0-based) encodes `e_{i+1}` for `i < n` and
//!   `e_{-(i-n+1)}` for `i >= n`.
//! * The invariant 2-tensor is `psi = sum_i e_i⊗e_{-i} - e_{-i}⊗e_i` in the
//!   symplectic case and `sum_i e_i⊗e_{-i} + e_{-i}⊗e_i` in the orthogonal
//!   case; the pairing `Q` dual to it satisfies `Q(e_i, e_{-i}) = 1` and
//!   `Q(e_{-i}, e_i) = -1` (symplectic) or `+1` (orthogonal).
//! * Basis words of `V^{⊗d}` are enumerated lexicographically, most
//!   significant position first.
//! * Hodge grading: `e_1..e_n` span the `(1,0)` part and carry torus weight
//!   `+1`; `e_{-1}..e_{-n}` span `(0,1)` and carry `-1`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exactlin::{rat_int, sparse_from_pairs, Rat, RatMatrix, SparseVec, SubspaceBasis};
use crate::partitions::{young_projector, FilledTableau, Partition};

/// Kind of invariant bilinear form: skew-symmetric (`Sp`) or symmetric (`O`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormKind {
    Symplectic,
    Orthogonal,
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormKind::Symplectic => write!(f, "sp"),
            FormKind::Orthogonal => write!(f, "o"),
        }
    }
}

/// Errors from the tensor model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeylError {
    /// The orthogonal model requires rank n > 1.
    OrthogonalRankTooSmall,
    /// Rank must be positive.
    ZeroRank,
    /// A tensor space larger than the desk-scale guard was requested.
    ResourceLimit { dim: u128 },
    /// Contraction/insertion positions out of range.
    IndexOutOfRange,
}

impl fmt::Display for WeylError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylError::OrthogonalRankTooSmall => {
                write!(f, "orthogonal standard representation requires n > 1")
            }
            WeylError::ZeroRank => write!(f, "rank must be at least 1"),
            WeylError::ResourceLimit { dim } => {
                write!(f, "tensor space of dimension {dim} exceeds the 10^6 guard")
            }
            WeylError::IndexOutOfRange => write!(f, "tensor positions out of range"),
        }
    }
}

const TENSOR_DIM_GUARD: u128 = 1_000_000;

/// The standard representation of `Sp(2n)` or `O(2n)` with its fixed basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StandardRep {
    kind: FormKind,
    n: usize,
}

impl StandardRep {
    pub fn new(kind: FormKind, n: usize) -> Result<Self, WeylError> {
        if n == 0 {
            return Err(WeylError::ZeroRank);
        }
        if kind == FormKind::Orthogonal && n < 2 {
            return Err(WeylError::OrthogonalRankTooSmall);
        }
        Ok(StandardRep { kind, n })
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Dimension of `V`, i.e. `2n`.
    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// Value of the pairing `Q` on basis vectors (0 or ±1).
    pub fn form_value(&self, a: usize, b: usize) -> i64 {
        let n = self.n;
        if a < n && b == a + n {
            1
        } else if a >= n && b == a - n {
            match self.kind {
                FormKind::Symplectic => -1,
                FormKind::Orthogonal => 1,
            }
        } else {
            0
        }
    }

    /// The invariant tensor `psi` as a vector of `V⊗V`.
    pub fn psi(&self) -> SparseVec {
        let dim = self.dim() as u32;
        let mut pairs = Vec::new();
        for i in 0..self.n as u32 {
            let j = i + self.n as u32;
            pairs.push((i * dim + j, Rat::one()));
            let c = match self.kind {
                FormKind::Symplectic => -Rat::one(),
                FormKind::Orthogonal => Rat::one(),
            };
            pairs.push((j * dim + i, c));
        }
        sparse_from_pairs(pairs)
    }

    /// `(p-q)` torus weight of a basis letter.
    pub fn letter_weight(&self, letter: usize) -> i64 {
        if letter < self.n {
            1
        } else {
            -1
        }
    }

    /// Dimension of `V^{⊗d}`, checked against the desk-scale guard.
    pub fn tensor_dim(&self, d: usize) -> Result<usize, WeylError> {
        let dim = (self.dim() as u128).pow(d as u32);
        if dim > TENSOR_DIM_GUARD {
            return Err(WeylError::ResourceLimit { dim });
        }
        Ok(dim as usize)
    }
}

/// Decodes word index `w` in `V^{⊗d}` into letters, most significant first.
fn decode_word(mut w: usize, d: usize, dim: usize) -> Vec<usize> {
    let mut letters = vec![0; d];
    for pos in (0..d).rev() {
        letters[pos] = w % dim;
        w /= dim;
    }
    letters
}

fn encode_word(letters: &[usize], dim: usize) -> usize {
    letters.iter().fold(0, |acc, &l| acc * dim + l)
}

fn check_pair(d: usize, pair: (usize, usize)) -> Result<(usize, usize), WeylError> {
    let (p, q) = pair;
    if !(1 <= p && p < q && q <= d) {
        return Err(WeylError::IndexOutOfRange);
    }
    Ok((p - 1, q - 1))
}

/// Matrix of the contraction `Phi_{p,q} : V^{⊗d} -> V^{⊗(d-2)}` sending a
/// word to `Q(v_p, v_q)` times the word with positions `p < q` (1-based)
/// removed.
pub fn contraction_matrix(
    rep: &StandardRep,
    d: usize,
    pair: (usize, usize),
) -> Result<RatMatrix, WeylError> {
    let (p, q) = check_pair(d, pair)?;
    let dim = rep.dim();
    let source = rep.tensor_dim(d)?;
    let target = rep.tensor_dim(d - 2)?;
    let mut trips = Vec::new();
    for w in 0..source {
        let letters = decode_word(w, d, dim);
        let coeff = rep.form_value(letters[p], letters[q]);
        if coeff == 0 {
            continue;
        }
        let rest: Vec<usize> = letters
            .iter()
            .enumerate()
            .filter(|(pos, _)| *pos != p && *pos != q)
            .map(|(_, &l)| l)
            .collect();
        trips.push((encode_word(&rest, dim), w, rat_int(coeff)));
    }
    Ok(RatMatrix::from_triplets(target, source, trips))
}

/// Matrix of the insertion `Psi_{p,q} : V^{⊗(d-2)} -> V^{⊗d}` placing `psi`
/// in positions `p < q` (1-based).
pub fn insertion_matrix(
    rep: &StandardRep,
    d: usize,
    pair: (usize, usize),
) -> Result<RatMatrix, WeylError> {
    if d < 2 {
        return Err(WeylError::IndexOutOfRange);
    }
    let (p, q) = check_pair(d, pair)?;
    let dim = rep.dim();
    let source = rep.tensor_dim(d - 2)?;
    let target = rep.tensor_dim(d)?;
    let neg = match rep.kind {
        FormKind::Symplectic => -1i64,
        FormKind::Orthogonal => 1,
    };
    let mut trips = Vec::new();
    for w in 0..source {
        let rest = decode_word(w, d - 2, dim);
        for i in 0..rep.n {
            let j = i + rep.n;
            for (a, b, c) in [(i, j, 1i64), (j, i, neg)] {
                let mut letters = vec![0; d];
                let mut rest_iter = rest.iter();
                for (pos, slot) in letters.iter_mut().enumerate() {
                    *slot = if pos == p {
                        a
                    } else if pos == q {
                        b
                    } else {
                        *rest_iter.next().unwrap()
                    };
                }
                trips.push((encode_word(&letters, dim), w, rat_int(c)));
            }
        }
    }
    Ok(RatMatrix::from_triplets(target, source, trips))
}

/// All position pairs `1 <= p < q <= d`.
pub fn contraction_pairs(d: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 1..=d {
        for q in (p + 1)..=d {
            out.push((p, q));
        }
    }
    out
}

/// Canonical basis of the traceless subspace `V^{<d>}`, the intersection of
/// the kernels of all contractions. For `d <= 1` this is the full space.
pub fn traceless_subspace(rep: &StandardRep, d: usize) -> Result<SubspaceBasis, WeylError> {
    let total = rep.tensor_dim(d)?;
    if d <= 1 {
        return Ok(SubspaceBasis::full(total));
    }
    Ok(stacked_contractions(rep, d)?.kernel_basis())
}

/// All contractions stacked into one matrix `V^{⊗d} -> ⊕_I V^{⊗(d-2)}`.
fn stacked_contractions(rep: &StandardRep, d: usize) -> Result<RatMatrix, WeylError> {
    let source = rep.tensor_dim(d)?;
    let block = rep.tensor_dim(d - 2)?;
    let pairs = contraction_pairs(d);
    let mut trips = Vec::new();
    for (k, pair) in pairs.iter().enumerate() {
        let m = contraction_matrix(rep, d, *pair)?;
        for r in 0..m.rows() {
            for (c, v) in m.sparse_row(r) {
                trips.push((k * block + r, c as usize, v));
            }
        }
    }
    Ok(RatMatrix::from_triplets(pairs.len() * block, source, trips))
}

/// Image of the Young projector of `t` acting on `V^{⊗d}` by place
/// permutation: `sigma` moves the letter in position `j` to position
/// `sigma(j)`.
pub fn schur_image(rep: &StandardRep, t: &FilledTableau) -> Result<SubspaceBasis, WeylError> {
    let d = t.shape().size() as usize;
    let total = rep.tensor_dim(d)?;
    let dim = rep.dim();
    let projector = young_projector(t);
    let mut image = SubspaceBasis::empty(total);
    for w in 0..total {
        let letters = decode_word(w, d, dim);
        let mut pairs: Vec<(u32, Rat)> = Vec::with_capacity(projector.num_terms());
        for (perm, coeff) in projector.terms() {
            let mut permuted = vec![0; d];
            for (j, &letter) in letters.iter().enumerate() {
                permuted[(perm.apply(j as u32 + 1) - 1) as usize] = letter;
            }
            pairs.push((encode_word(&permuted, dim) as u32, coeff.clone()));
        }
        image.insert(sparse_from_pairs(pairs));
    }
    Ok(image)
}

/// Canonical basis of `S_<λ>V`: the Schur image of the canonical row-major
/// filling intersected with the traceless subspace.
///
/// The intersection is computed as the kernel of the stacked contractions
/// restricted to the Schur image, which is the same subspace but keeps the
/// elimination small.
pub fn s_lambda_space(rep: &StandardRep, shape: &Partition) -> Result<SubspaceBasis, WeylError> {
    let d = shape.size() as usize;
    let image = schur_image(rep, &FilledTableau::row_major(shape.clone()))?;
    if d <= 1 {
        return Ok(image);
    }
    let contractions = stacked_contractions(rep, d)?;
    Ok(restrict_to_kernel(&image, &contractions))
}

/// Kernel of `m` restricted to a subspace: `{v in s : m v = 0}`.
fn restrict_to_kernel(s: &SubspaceBasis, m: &RatMatrix) -> SubspaceBasis {
    let basis = s.basis();
    // Column j of `restricted` is m applied to the j-th basis vector; build
    // it from the transpose so the access pattern stays row-wise.
    let mt = m.transpose();
    let mut trips = Vec::new();
    for (j, vec_j) in basis.iter().enumerate() {
        let mut acc: BTreeMap<u32, Rat> = BTreeMap::new();
        for (col, coeff) in vec_j {
            for (r, v) in mt.sparse_row(*col as usize) {
                let slot = acc.entry(r).or_insert_with(Rat::zero);
                *slot += coeff * &v;
            }
        }
        for (r, v) in acc {
            if !v.is_zero() {
                trips.push((r as usize, j, v));
            }
        }
    }
    let restricted = RatMatrix::from_triplets(m.rows(), basis.len(), trips);
    let coeff_kernel = restricted.kernel_basis();
    let mut out = SubspaceBasis::empty(s.ambient_dim());
    for c in coeff_kernel.basis() {
        let mut pairs: Vec<(u32, Rat)> = Vec::new();
        for (j, cj) in c {
            for (i, v) in &basis[*j as usize] {
                pairs.push((*i, cj * v));
            }
        }
        out.insert(sparse_from_pairs(pairs));
    }
    out
}

/// Report of the direct-sum decomposition
/// `V^{⊗d} = V^{<d>} ⊕ sum_I im(Psi_I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionAudit {
    pub traceless_dim: usize,
    pub insertion_span_dim: usize,
    pub ambient_dim: usize,
    pub intersection_dim: usize,
    pub pass: bool,
}

/// Verifies that the traceless subspace and the span of all insertion images
/// are complementary in `V^{⊗d}`.
pub fn decomposition_audit(rep: &StandardRep, d: usize) -> Result<DecompositionAudit, WeylError> {
    if d < 2 {
        return Err(WeylError::IndexOutOfRange);
    }
    let ambient = rep.tensor_dim(d)?;
    let traceless = traceless_subspace(rep, d)?;
    let mut insertion_span = SubspaceBasis::empty(ambient);
    for pair in contraction_pairs(d) {
        let psi_matrix = insertion_matrix(rep, d, pair)?;
        let cols = psi_matrix.transpose();
        for c in 0..cols.rows() {
            insertion_span.insert(cols.sparse_row(c));
        }
    }
    let sum = traceless.sum(&insertion_span).expect("same ambient");
    let intersection_dim = traceless.dim() + insertion_span.dim() - sum.dim();
    let pass = traceless.dim() + insertion_span.dim() == ambient && intersection_dim == 0;
    Ok(DecompositionAudit {
        traceless_dim: traceless.dim(),
        insertion_span_dim: insertion_span.dim(),
        ambient_dim: ambient,
        intersection_dim,
        pass,
    })
}

// ---------------------------------------------------------------------------
// Hodge profiles
// ---------------------------------------------------------------------------

/// Dimension of each `(p-q)` eigenspace of a graded space, keyed by the
/// eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HodgeProfile {
    counts: BTreeMap<i64, u64>,
}

impl HodgeProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, eigenvalue: i64, dim: u64) {
        if dim > 0 {
            *self.counts.entry(eigenvalue).or_insert(0) += dim;
        }
    }

    pub fn get(&self, eigenvalue: i64) -> u64 {
        self.counts.get(&eigenvalue).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<i64, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Largest eigenvalue with a nonzero eigenspace; `None` for the zero
    /// profile.
    pub fn max_support(&self) -> Option<i64> {
        self.counts.keys().next_back().copied()
    }

    /// True iff `dim(m) == dim(-m)` for all `m`.
    pub fn is_palindromic(&self) -> bool {
        self.counts.iter().all(|(m, d)| self.get(-m) == *d)
    }

    /// Convolution: the profile of a tensor product.
    pub fn convolve(&self, other: &HodgeProfile) -> HodgeProfile {
        let mut out = HodgeProfile::new();
        for (a, da) in &self.counts {
            for (b, db) in &other.counts {
                out.add(a + b, da * db);
            }
        }
        out
    }
}

impl fmt::Display for HodgeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (m, d)) in self.counts.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}: {d}")?;
        }
        write!(f, "}}")
    }
}

/// `(p-q)` weight of a word index in `V^{⊗d}`.
fn word_weight(rep: &StandardRep, w: usize, d: usize) -> i64 {
    decode_word(w, d, rep.dim())
        .into_iter()
        .map(|l| rep.letter_weight(l))
        .sum()
}

/// Hodge profile of a subspace of `V^{⊗d}`: the dimensions of its
/// intersections with the `(p-q)` eigenspaces of the torus action.
///
/// When the subspace is spanned by eigenvectors (the case for every Schur or
/// traceless construction here) the eigenspace projections already have the
/// right ranks and their total matches the dimension; otherwise the exact
/// slices are computed as kernels.
pub fn hodge_profile(rep: &StandardRep, s: &SubspaceBasis, d: usize) -> HodgeProfile {
    let dim_check = rep
        .tensor_dim(d)
        .expect("subspace was built under the same guard");
    assert_eq!(s.ambient_dim(), dim_check, "subspace is not in V^(⊗d)");
    // Group the occurring coordinates by torus weight.
    let mut weight_of_word: BTreeMap<u32, i64> = BTreeMap::new();
    for vec in s.basis() {
        for (w, _) in vec {
            weight_of_word
                .entry(*w)
                .or_insert_with(|| word_weight(rep, *w as usize, d));
        }
    }
    let mut occurring: Vec<i64> = weight_of_word.values().copied().collect();
    occurring.sort_unstable();
    occurring.dedup();

    // Rank of the projection of the subspace onto each weight block.
    let mut profile = HodgeProfile::new();
    let mut total_rank = 0;
    for &m in &occurring {
        let mut block = SubspaceBasis::empty(s.ambient_dim());
        for vec in s.basis() {
            let part: SparseVec = vec
                .iter()
                .filter(|(w, _)| weight_of_word[w] == m)
                .cloned()
                .collect();
            block.insert(part);
        }
        total_rank += block.dim();
        profile.add(m, block.dim() as u64);
    }
    if total_rank == s.dim() {
        return profile;
    }

    // Not weight-homogeneous: compute the exact slices s ∩ E_m instead.
    let mut profile = HodgeProfile::new();
    for &m in &occurring {
        let basis = s.basis();
        // Coefficient vectors c with sum_j c_j basis_j supported in weight m.
        let mut trips = Vec::new();
        let mut row_of_word: BTreeMap<u32, usize> = BTreeMap::new();
        for (j, vec) in basis.iter().enumerate() {
            for (w, v) in vec {
                if weight_of_word[w] != m {
                    let next = row_of_word.len();
                    let r = *row_of_word.entry(*w).or_insert(next);
                    trips.push((r, j, v.clone()));
                }
            }
        }
        let constraint = RatMatrix::from_triplets(row_of_word.len(), basis.len(), trips);
        profile.add(m, constraint.kernel_basis().dim() as u64);
    }
    profile
}
