//! Bigraded Poincaré data of abelian-variety cohomology: Künneth products,
//! super plethysm, Hodge level and coniveau, the primitive filtration, the
//! Kleiman projector family on the exterior-algebra model of `H^*(A)`,
//! Beauville weights, Molien invariant counts, and the vanishing checks
//! built on them.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactlin::{rat_int, Rat, RatMatrix, SparseVec, SubspaceBasis};
use crate::partitions::{enumerate_partitions, Partition};

/// Errors from the Hodge layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HodgeError {
    /// Super plethysm needs input concentrated in one total degree.
    MixedDegree,
    /// Skew vanishing is only defined in even total degree.
    OddDegree,
    /// Model size guard exceeded.
    ResourceLimit,
    /// The pairing restricted to the subspace is degenerate.
    DegeneratePairing,
}

impl fmt::Display for HodgeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HodgeError::MixedDegree => write!(f, "input must sit in a single total degree"),
            HodgeError::OddDegree => write!(f, "input must sit in an even total degree"),
            HodgeError::ResourceLimit => write!(f, "model size exceeds the resource guard"),
            HodgeError::DegeneratePairing => {
                write!(f, "pairing restricted to the subspace is degenerate")
            }
        }
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Binomial with possibly-negative lower index treated as zero.
fn binomial_i(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 {
        return 0;
    }
    binomial(n as u64, k as u64)
}

// ---------------------------------------------------------------------------
// Bigraded dimension tables
// ---------------------------------------------------------------------------

/// Hodge-number table: `(p, q) -> dim`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BigradedDims {
    table: BTreeMap<(u32, u32), u64>,
}

impl BigradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    /// The table of a point: a single (0,0) class.
    pub fn point() -> Self {
        let mut t = Self::new();
        t.add(0, 0, 1);
        t
    }

    pub fn add(&mut self, p: u32, q: u32, dim: u64) {
        if dim > 0 {
            *self.table.entry((p, q)).or_insert(0) += dim;
        }
    }

    pub fn get(&self, p: u32, q: u32) -> u64 {
        self.table.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u32, u32), &u64)> {
        self.table.iter()
    }

    pub fn total(&self) -> u64 {
        self.table.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    /// The single total degree of the table, if it has one. The zero table
    /// is concentrated in every degree; `Some(0)` is returned for it.
    pub fn single_degree(&self) -> Option<u32> {
        let mut degrees = self.table.keys().map(|(p, q)| p + q);
        let Some(first) = degrees.next() else {
            return Some(0);
        };
        degrees.all(|d| d == first).then_some(first)
    }

    /// Restriction to one total degree.
    pub fn degree_slice(&self, k: u32) -> BigradedDims {
        BigradedDims {
            table: self
                .table
                .iter()
                .filter(|((p, q), _)| p + q == k)
                .map(|(k, v)| (*k, *v))
                .collect(),
        }
    }

    /// True iff the whole `(p, 0)` row vanishes.
    pub fn holomorphic_row_is_zero(&self) -> bool {
        self.table.keys().all(|(_, q)| *q != 0)
    }

    /// Hodge symmetry `h^{p,q} = h^{q,p}`.
    pub fn is_hodge_symmetric(&self) -> bool {
        self.table.iter().all(|((p, q), d)| self.get(*q, *p) == *d)
    }
}

impl fmt::Display for BigradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, ((p, q), d)) in self.table.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({p},{q}): {d}")?;
        }
        write!(f, "}}")
    }
}

/// Hodge level: still `-infinity` for the zero table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    MinusInfinity,
    Finite(u32),
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::MinusInfinity => write!(f, "-inf"),
            Level::Finite(l) => write!(f, "{l}"),
        }
    }
}

/// `max |p-q|` over the nonzero entries; `-infinity` for the zero table.
pub fn level(a: &BigradedDims) -> Level {
    a.entries()
        .map(|((p, q), _)| (*p as i64 - *q as i64).unsigned_abs() as u32)
        .max()
        .map_or(Level::MinusInfinity, Level::Finite)
}

/// Coniveau of a table concentrated in degree `k`: `(k - level)/2`, with the
/// convention that the zero table has coniveau `k`.
pub fn coniveau_in_degree(a: &BigradedDims, k: u32) -> u32 {
    match level(a) {
        Level::MinusInfinity => k,
        Level::Finite(l) => (k - l) / 2,
    }
}

/// Hodge numbers of a g-dimensional abelian variety:
/// `h^{p,q} = C(g,p) C(g,q)`.
pub fn abelian_hodge(g: u32) -> BigradedDims {
    let mut t = BigradedDims::new();
    for p in 0..=g {
        for q in 0..=g {
            t.add(p, q, binomial(g as u64, p as u64) * binomial(g as u64, q as u64));
        }
    }
    t
}

/// Künneth product: convolution of tables.
pub fn kunneth(a: &BigradedDims, b: &BigradedDims) -> BigradedDims {
    let mut out = BigradedDims::new();
    for ((pa, qa), da) in a.entries() {
        for ((pb, qb), db) in b.entries() {
            out.add(pa + pb, qa + qb, da * db);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Super plethysm
// ---------------------------------------------------------------------------

fn plethysm_gf(a: &BigradedDims, n: usize, alternating: bool) -> BigradedDims {
    // layers[j] = bigraded table at t-degree j of the generating function
    // prod_{(p,q)} (1 + t x^p y^q)^{h} or (1 - t x^p y^q)^{-h}.
    let mut layers: Vec<BTreeMap<(u32, u32), u64>> = vec![BTreeMap::new(); n + 1];
    layers[0].insert((0, 0), 1);
    for ((p, q), &h) in a.entries() {
        let top = if alternating { (h as usize).min(n) } else { n };
        let mut factor: Vec<((u32, u32), u64)> = Vec::new();
        for j in 0..=top {
            let coeff = if alternating {
                binomial(h, j as u64)
            } else if j == 0 {
                1
            } else {
                binomial(h + j as u64 - 1, j as u64)
            };
            if coeff > 0 {
                factor.push(((p * j as u32, q * j as u32), coeff));
            }
        }
        let mut next: Vec<BTreeMap<(u32, u32), u64>> = vec![BTreeMap::new(); n + 1];
        for (deg, layer) in layers.iter().enumerate() {
            for (&(tp, tq), &c) in layer {
                for (j, &((fp, fq), fc)) in factor.iter().enumerate() {
                    if deg + j > n {
                        break;
                    }
                    *next[deg + j].entry((tp + fp, tq + fq)).or_insert(0) += c * fc;
                }
            }
        }
        layers = next;
    }
    BigradedDims {
        table: core::mem::take(&mut layers[n]),
    }
}

/// N-th symmetric power in the super sense: for odd total degree this is the
/// exterior power of the underlying bigraded space, for even degree the
/// ordinary symmetric power.
pub fn super_sym(a: &BigradedDims, n: usize) -> Result<BigradedDims, HodgeError> {
    let k = a.single_degree().ok_or(HodgeError::MixedDegree)?;
    Ok(plethysm_gf(a, n, k % 2 == 1))
}

/// N-th exterior power in the super sense: for odd total degree this is the
/// ordinary symmetric power, for even degree the ordinary exterior power.
pub fn super_ext(a: &BigradedDims, n: usize) -> Result<BigradedDims, HodgeError> {
    let k = a.single_degree().ok_or(HodgeError::MixedDegree)?;
    Ok(plethysm_gf(a, n, k % 2 == 0))
}

/// Cohomological premise of the symmetric/skew vanishing on the weight-`i`
/// piece of zero-cycles: the `(p,0)` row of the N-th super power (symmetric
/// for odd `i`, exterior for even `i`) of the degree `2g-i` table vanishes.
pub fn sym_vanishing_check(g: u32, i: u32, n: usize) -> bool {
    debug_assert!(i <= g, "weight index must satisfy 0 <= i <= g");
    let slice = abelian_hodge(g).degree_slice(2 * g - i);
    let power = if i % 2 == 1 {
        super_sym(&slice, n)
    } else {
        super_ext(&slice, n)
    }
    .expect("slice is concentrated in one degree");
    power.holomorphic_row_is_zero()
}

/// True iff the `(p,0)` row of the N-th super exterior power of an
/// even-degree table vanishes.
pub fn skew_vanishing(a: &BigradedDims, n: usize) -> Result<bool, HodgeError> {
    let k = a.single_degree().ok_or(HodgeError::MixedDegree)?;
    if k % 2 != 0 {
        return Err(HodgeError::OddDegree);
    }
    Ok(super_ext(a, n)?.holomorphic_row_is_zero())
}

// ---------------------------------------------------------------------------
// Primitive filtration
// ---------------------------------------------------------------------------

/// Dimension of the n-th step of the primitive filtration of `H^k` for a
/// g-dimensional abelian variety:
/// `sum_{r >= max(n, k-g), 2r <= k} (C(2g, k-2r) - C(2g, k-2r-2))`.
///
/// The lower cutoff `r >= k-g` reflects that `L^r` kills degree-`(k-2r)`
/// primitive classes once `r` exceeds `g-(k-2r)`.
pub fn primitive_filtration_dims(g: u32, k: u32, n: u32) -> u64 {
    let g = g as i64;
    let k = k as i64;
    let mut total = 0u64;
    let mut r = (n as i64).max(k - g);
    while 2 * r <= k {
        let j = k - 2 * r;
        total += binomial_i(2 * g, j) - binomial_i(2 * g, j - 2);
        r += 1;
    }
    total
}

/// Cumulative coniveau table for one cohomological degree: `dims[n]` is the
/// dimension of the part of `H^k` of coniveau at least `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConiveauTable {
    pub k: u32,
    dims: BTreeMap<u32, u64>,
}

impl ConiveauTable {
    pub fn new(k: u32) -> Self {
        ConiveauTable {
            k,
            dims: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, n: u32, dim: u64) {
        self.dims.insert(n, dim);
    }

    pub fn get(&self, n: u32) -> u64 {
        self.dims.get(&n).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&u32, &u64)> {
        self.dims.iter()
    }

    /// Weakly decreasing in n with the full dimension at n = 0.
    pub fn is_monotone(&self) -> bool {
        let vals: Vec<u64> = self.dims.values().copied().collect();
        vals.windows(2).all(|w| w[0] >= w[1])
    }
}

// ---------------------------------------------------------------------------
// Exterior-algebra model and Kleiman projectors
// ---------------------------------------------------------------------------

/// The graded projectors `p^{k,r}` cutting `H^*(A)` into Lefschetz pieces
/// `L^r H^{k-2r}_prim`, realized on the exterior algebra over `H^1`.
#[derive(Debug, Clone)]
pub struct ProjectorFamily {
    g: u32,
    /// Multiplication by the polarization class.
    lefschetz_op: RatMatrix,
    matrices: BTreeMap<(u32, u32), RatMatrix>,
}

/// Outcome of the algebraic verification of a projector family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectorReport {
    pub idempotent_ok: bool,
    pub orthogonal_ok: bool,
    pub sum_is_identity: bool,
    pub hard_lefschetz_ok: bool,
    pub ranks: BTreeMap<(u32, u32), u64>,
}

const MAX_PROJECTOR_G: u32 = 4;

impl ProjectorFamily {
    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn model_dim(&self) -> usize {
        1usize << (2 * self.g)
    }

    pub fn projector(&self, k: u32, r: u32) -> Option<&RatMatrix> {
        self.matrices.get(&(k, r))
    }

    pub fn projectors(&self) -> impl Iterator<Item = (&(u32, u32), &RatMatrix)> {
        self.matrices.iter()
    }

    /// Degree projector `pi^k = sum_r p^{k,r}`.
    pub fn degree_projector(&self, k: u32) -> RatMatrix {
        let mut acc = RatMatrix::zero(self.model_dim(), self.model_dim());
        for ((kk, _), m) in &self.matrices {
            if *kk == k {
                acc = acc.add(m).expect("same shape");
            }
        }
        acc
    }

    pub fn lefschetz_op(&self) -> &RatMatrix {
        &self.lefschetz_op
    }

    /// Checks idempotence, pairwise orthogonality, completeness, ranks, and
    /// hard Lefschetz invertibility, all exactly.
    pub fn verify(&self) -> ProjectorReport {
        let dim = self.model_dim();
        let mut idempotent_ok = true;
        let mut ranks = BTreeMap::new();
        for (key, m) in &self.matrices {
            idempotent_ok &= m.is_idempotent().expect("square");
            ranks.insert(*key, m.rank() as u64);
        }
        let keys: Vec<(u32, u32)> = self.matrices.keys().copied().collect();
        let mut orthogonal_ok = true;
        for (i, a) in keys.iter().enumerate() {
            for b in keys.iter().skip(i + 1) {
                let prod = self.matrices[a].mul(&self.matrices[b]).expect("square");
                orthogonal_ok &= prod == RatMatrix::zero(dim, dim);
                let prod = self.matrices[b].mul(&self.matrices[a]).expect("square");
                orthogonal_ok &= prod == RatMatrix::zero(dim, dim);
            }
        }
        let mut sum = RatMatrix::zero(dim, dim);
        for m in self.matrices.values() {
            sum = sum.add(m).expect("same shape");
        }
        let sum_is_identity = sum == RatMatrix::identity(dim);

        // Hard Lefschetz: L^{g-i} restricted to degree i is injective into
        // degree 2g-i (both have the same dimension).
        let mut hard_lefschetz_ok = true;
        for i in 0..=self.g {
            let power = matrix_power(&self.lefschetz_op, (self.g - i) as usize);
            let restricted = restrict_to_degrees(&power, self.g, i);
            hard_lefschetz_ok &= restricted.rank() == restricted.cols();
        }
        ProjectorReport {
            idempotent_ok,
            orthogonal_ok,
            sum_is_identity,
            hard_lefschetz_ok,
            ranks,
        }
    }
}

fn matrix_power(m: &RatMatrix, e: usize) -> RatMatrix {
    let mut acc = RatMatrix::identity(m.rows());
    for _ in 0..e {
        acc = acc.mul(m).expect("square");
    }
    acc
}

/// Restriction of an endomorphism of the exterior model to the degree-i
/// block, as a map into its image degree block.
fn restrict_to_degrees(m: &RatMatrix, g: u32, i: u32) -> RatMatrix {
    let source: Vec<usize> = (0..m.cols()).filter(|b| (b.count_ones()) == i).collect();
    let target_degree = 2 * g - i;
    let target: Vec<usize> = (0..m.rows())
        .filter(|b| (b.count_ones()) == target_degree)
        .collect();
    let mut trips = Vec::new();
    for (tc, &col) in source.iter().enumerate() {
        for (tr, &row) in target.iter().enumerate() {
            let v = m.get(row, col);
            if !v.is_zero() {
                trips.push((tr, tc, v));
            }
        }
    }
    RatMatrix::from_triplets(target.len(), source.len(), trips)
}

/// Sign of inserting generator `gen` into the monomial `mask`: the parity of
/// the number of set generators below `gen`.
fn wedge_sign(mask: usize, gen: usize) -> i64 {
    let below = (mask & ((1 << gen) - 1)).count_ones();
    if below % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Builds the Kleiman projector family for a g-dimensional abelian variety
/// on the exterior-algebra model of `H^*(A)` with the symplectic
/// polarization class `L = sum_i e_i ∧ e_{g+i}`.
///
/// Exterior monomials are indexed by bitmasks over 2g generators; the degree
/// of a monomial is its popcount. `p^{k,r}` projects onto `L^r H^{k-2r}_prim`
/// along the full Lefschetz decomposition.
pub fn kleiman_projectors(g: u32) -> Result<ProjectorFamily, HodgeError> {
    if g > MAX_PROJECTOR_G {
        return Err(HodgeError::ResourceLimit);
    }
    let dim = 1usize << (2 * g);
    // Multiplication by L.
    let mut trips = Vec::new();
    for mask in 0..dim {
        for i in 0..g as usize {
            let (a, b) = (i, g as usize + i);
            if mask & (1 << a) != 0 || mask & (1 << b) != 0 {
                continue;
            }
            // e_a ∧ (e_b ∧ mask): insert b first, then a.
            let sign_b = wedge_sign(mask, b);
            let with_b = mask | (1 << b);
            let sign_a = wedge_sign(with_b, a);
            trips.push((with_b | (1 << a), mask, rat_int(sign_a * sign_b)));
        }
    }
    let lefschetz_op = RatMatrix::from_triplets(dim, dim, trips);

    // Primitive subspaces per degree k <= g: ker(L^{g-k+1}) within degree k.
    let mut block_columns: Vec<(u32, u32, Vec<SparseVec>)> = Vec::new();
    for k in 0..=g {
        let degree_k: Vec<usize> = (0..dim).filter(|m| m.count_ones() == k).collect();
        let power = matrix_power(&lefschetz_op, (g - k + 1) as usize);
        // Columns of power restricted to degree-k monomials.
        let mut trips = Vec::new();
        for (c, &mask) in degree_k.iter().enumerate() {
            for r in 0..dim {
                let v = power.get(r, mask);
                if !v.is_zero() {
                    trips.push((r, c, v));
                }
            }
        }
        let restricted = RatMatrix::from_triplets(dim, degree_k.len(), trips);
        let prim_coeffs = restricted.kernel_basis();
        // Primitive vectors back in the full model.
        let prim: Vec<SparseVec> = prim_coeffs
            .basis()
            .iter()
            .map(|coef| {
                coef.iter()
                    .map(|(j, v)| (degree_k[*j as usize] as u32, v.clone()))
                    .collect::<Vec<_>>()
            })
            .map(|mut v: SparseVec| {
                v.sort_by_key(|(i, _)| *i);
                v
            })
            .collect();
        // L^r images for every valid r.
        for r in 0..=(g - k) {
            let power_r = matrix_power(&lefschetz_op, r as usize);
            let cols: Vec<SparseVec> = prim
                .iter()
                .map(|v| apply_matrix(&power_r, v))
                .collect();
            if !cols.is_empty() {
                block_columns.push((k + 2 * r, r, cols));
            }
        }
    }

    // Assemble the change of basis and cut it into projectors.
    block_columns.sort_by_key(|(k, r, _)| (*k, *r));
    let mut columns: Vec<SparseVec> = Vec::with_capacity(dim);
    let mut ranges: Vec<((u32, u32), core::ops::Range<usize>)> = Vec::new();
    for (k, r, cols) in block_columns {
        let start = columns.len();
        columns.extend(cols);
        ranges.push(((k, r), start..columns.len()));
    }
    debug_assert_eq!(columns.len(), dim, "Lefschetz blocks must fill the model");
    let t = RatMatrix::from_triplets(
        dim,
        dim,
        columns
            .iter()
            .enumerate()
            .flat_map(|(c, v)| v.iter().map(move |(r, x)| (*r as usize, c, x.clone()))),
    );
    let t_inv = t
        .inverse()
        .expect("square")
        .expect("Lefschetz decomposition basis is invertible");
    let mut matrices = BTreeMap::new();
    for ((k, r), range) in ranges {
        // p = T * E_block * T^{-1} = (columns of T in block) * (rows of T^{-1} in block)
        let mut trips = Vec::new();
        for c in range.clone() {
            for (row, v) in columns[c].iter() {
                trips.push((*row as usize, c, v.clone()));
            }
        }
        let t_block = RatMatrix::from_triplets(dim, dim, trips);
        let mut trips = Vec::new();
        for rr in range {
            for (cc, v) in t_inv.sparse_row(rr) {
                trips.push((rr, cc as usize, v));
            }
        }
        let tinv_block = RatMatrix::from_triplets(dim, dim, trips);
        let p = t_block.mul(&tinv_block).expect("square");
        matrices.insert((k, r), p);
    }
    Ok(ProjectorFamily {
        g,
        lefschetz_op,
        matrices,
    })
}

fn apply_matrix(m: &RatMatrix, v: &[(u32, Rat)]) -> SparseVec {
    let mt = m.transpose();
    let mut acc: BTreeMap<u32, Rat> = BTreeMap::new();
    for (c, x) in v {
        for (r, y) in mt.sparse_row(*c as usize) {
            let slot = acc.entry(r).or_insert_with(Rat::zero);
            *slot += x * &y;
        }
    }
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// Orthogonal projector onto a subspace with respect to a (symmetric or
/// skew) non-degenerate pairing: idempotent, image the subspace, self-adjoint
/// for the pairing, vanishing on the pairing-orthogonal complement.
///
/// With `B` the basis matrix (rows spanning `s`) and `Q` the pairing, the
/// projector is `B^T (B Q B^T)^{-1} B Q`; the Gram matrix in the middle is
/// invertible exactly when the restriction of the pairing is non-degenerate.
pub fn orthogonal_projector(
    s: &SubspaceBasis,
    pairing: &RatMatrix,
) -> Result<RatMatrix, HodgeError> {
    let b = s.basis_matrix();
    let bt = b.transpose();
    let gram = b.mul(pairing).and_then(|m| m.mul(&bt)).expect("shapes agree");
    let gram_inv = gram
        .inverse()
        .expect("gram is square")
        .ok_or(HodgeError::DegeneratePairing)?;
    let proj = bt
        .mul(&gram_inv)
        .and_then(|m| m.mul(&b))
        .and_then(|m| m.mul(pairing))
        .expect("shapes agree");
    Ok(proj)
}

// ---------------------------------------------------------------------------
// Beauville weights
// ---------------------------------------------------------------------------

/// Multiplication-by-n eigenvalue exponents of the Chow piece `CH^i(A)_(j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BeauvilleWeight {
    /// Weight of the motive summand the piece lives in.
    pub motive_degree: i64,
    /// `[n]^* = n^(i-2j)` on the piece.
    pub pullback_exponent: i64,
    /// `[n]_* = n^(2g-(i-2j))` on the corresponding zero-cycle piece.
    pub pushforward_exponent_zero_cycles: i64,
}

/// Both eigenvalue conventions for the Beauville piece `CH^i(A)_(j)` on a
/// g-dimensional abelian variety; exposing the pair keeps the two indexings
/// from colliding silently.
pub fn beauville_weight(i: u32, j: i64, g: u32) -> BeauvilleWeight {
    let motive_degree = i as i64 - 2 * j;
    BeauvilleWeight {
        motive_degree,
        pullback_exponent: motive_degree,
        pushforward_exponent_zero_cycles: 2 * g as i64 - motive_degree,
    }
}

// ---------------------------------------------------------------------------
// Molien counts
// ---------------------------------------------------------------------------

const MOLIEN_FACTORIAL_GUARD: u64 = 10_000_000;

/// Coefficients of the generating polynomial counting invariant holomorphic
/// forms on the quotient model of the n-th generalized Kummer variety of a
/// g-dimensional abelian variety: coefficient `k` is the dimension of the
/// S_{n+1}-invariants in the k-th exterior power of `std_n ⊗ C^g`, where
/// `std_n` is the n-dimensional standard constituent of the permutation
/// representation.
///
/// Computed as the Molien average over conjugacy classes of S_{n+1}: a class
/// of cycle type `mu` contributes `[prod_c (1 - (-t)^c) / (1+t)]^g` with the
/// class size as weight.
pub fn molien_holomorphic_invariants(g: u32, n: u32) -> Result<Vec<u64>, HodgeError> {
    if g == 0 || n == 0 {
        return Err(HodgeError::ResourceLimit);
    }
    let order = factorial_checked(n as u64 + 1).ok_or(HodgeError::ResourceLimit)?;
    let degree = (g * n) as usize;
    let mut acc = vec![BigInt::zero(); degree + 1];
    for class in enumerate_partitions(n + 1) {
        let size = class_size(&class, order);
        // prod over cycles of (1 - (-t)^c), divided once by (1 + t).
        let mut poly = vec![BigInt::one()];
        for &c in class.parts() {
            // 1 - (-t)^c = 1 - (-1)^c t^c
            let mut factor = vec![BigInt::zero(); c as usize + 1];
            factor[0] = BigInt::one();
            factor[c as usize] = if c % 2 == 0 { -BigInt::one() } else { BigInt::one() };
            poly = poly_mul(&poly, &factor);
        }
        let reduced = poly_div_exact(&poly, &[BigInt::one(), BigInt::one()]);
        // raise to the g-th power
        let mut powered = vec![BigInt::one()];
        for _ in 0..g {
            powered = poly_mul(&powered, &reduced);
        }
        for (k, c) in powered.iter().enumerate() {
            if k <= degree {
                acc[k] += c * BigInt::from(size);
            }
        }
    }
    let order_big = BigInt::from(order);
    let mut out = Vec::with_capacity(degree + 1);
    for c in acc {
        let (q, r) = c.div_rem(&order_big);
        debug_assert!(r.is_zero(), "Molien average must be integral");
        debug_assert!(!q.is_negative());
        out.push(q.to_u64().expect("dimension fits in u64"));
    }
    Ok(out)
}

fn factorial_checked(n: u64) -> Option<u64> {
    let mut acc = 1u64;
    for k in 2..=n {
        acc = acc.checked_mul(k)?;
        if acc > MOLIEN_FACTORIAL_GUARD {
            return None;
        }
    }
    Some(acc)
}

/// Size of the conjugacy class of cycle type `mu` in S_m: `m! / z_mu` with
/// `z_mu = prod c^{m_c} m_c!`.
fn class_size(mu: &Partition, order: u64) -> u64 {
    let mut z = 1u64;
    let mut run = 0u64;
    let mut prev = 0u32;
    for &c in mu.parts() {
        if c == prev {
            run += 1;
        } else {
            prev = c;
            run = 1;
        }
        z *= c as u64 * run;
    }
    order / z
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Exact division of polynomials (ascending coefficients); panics on a
/// nonzero remainder, which would indicate a broken invariant.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    let lead = den.last().expect("nonzero divisor");
    assert!(!lead.is_zero());
    let out_len = rem.len().saturating_sub(dn);
    let mut out = vec![BigInt::zero(); out_len.max(1)];
    for k in (0..out_len).rev() {
        let idx = k + dn;
        let (q, r) = rem[idx].div_rem(lead);
        debug_assert!(r.is_zero());
        out[k] = q.clone();
        for (j, dcoef) in den.iter().enumerate() {
            let sub = &q * dcoef;
            rem[k + j] -= sub;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division must be exact");
    out
}

/// Renders polynomial coefficients as a compact string like `1 + t^2`.
pub fn poly_to_string(coeffs: &[u64]) -> alloc::string::String {
    use alloc::string::String;
    use core::fmt::Write;
    let mut out = String::new();
    let mut first = true;
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if !first {
            out.push_str(" + ");
        }
        first = false;
        match (k, c) {
            (0, c) => write!(out, "{c}").unwrap(),
            (1, 1) => out.push('t'),
            (1, c) => write!(out, "{c}*t").unwrap(),
            (k, 1) => write!(out, "t^{k}").unwrap(),
            (k, c) => write!(out, "{c}*t^{k}").unwrap(),
        }
    }
    if first {
        out.push('0');
    }
    out
}
