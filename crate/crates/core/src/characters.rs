//! Character-theoretic oracle for `Sp(2n)` and `O(2n)`: weight multisets,
//! the Weyl dimension formula, Freudenthal weight multiplicities, and
//! highest-weight peeling. Entirely independent of the tensor model in
//! [`crate::weylconstruct`], so the two sides can cross-check each other.
//!
//! Weights live in the standard coordinates of the rank-n torus. The
//! orthogonal group is handled as the full `O(2n)`: a dominant weight with a
//! positive last coordinate stands for the associated pair of `SO(2n)`
//! irreducibles and carries a `paired` flag; its dimension and character are
//! the sums over the pair.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::partitions::{column_data, Partition};
use crate::weylconstruct::{FormKind, HodgeProfile};

/// Weight of the rank-n torus in standard coordinates.
pub type Weight = Vec<i64>;

/// Errors from the character layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharError {
    /// Orthogonal groups need rank n > 1.
    OrthogonalRankTooSmall,
    /// Rank must be positive.
    ZeroRank,
    /// Operation on characters of different ranks.
    RankMismatch { left: usize, right: usize },
    /// Coordinates not a valid dominant weight for the group.
    InvalidWeight,
    /// Peeling produced a negative multiplicity: the input was not a
    /// genuine character of the group.
    NotACharacter,
}

impl fmt::Display for CharError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharError::OrthogonalRankTooSmall => write!(f, "orthogonal rank must be > 1"),
            CharError::ZeroRank => write!(f, "rank must be at least 1"),
            CharError::RankMismatch { left, right } => {
                write!(f, "rank mismatch: {left} vs {right}")
            }
            CharError::InvalidWeight => write!(f, "not a dominant weight for this group"),
            CharError::NotACharacter => {
                write!(f, "peeling hit a negative multiplicity; input is not a character")
            }
        }
    }
}

fn check_group(kind: FormKind, n: usize) -> Result<(), CharError> {
    if n == 0 {
        return Err(CharError::ZeroRank);
    }
    if kind == FormKind::Orthogonal && n < 2 {
        return Err(CharError::OrthogonalRankTooSmall);
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Weight characters
// ---------------------------------------------------------------------------

/// Finitely supported multiplicity function on the weight lattice.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightCharacter {
    rank: usize,
    mult: BTreeMap<Weight, u64>,
}

impl WeightCharacter {
    pub fn zero(rank: usize) -> Self {
        WeightCharacter {
            rank,
            mult: BTreeMap::new(),
        }
    }

    /// The trivial (one-dimensional) character.
    pub fn trivial(rank: usize) -> Self {
        let mut c = Self::zero(rank);
        c.add(vec![0; rank], 1);
        c
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add(&mut self, w: Weight, m: u64) {
        debug_assert_eq!(w.len(), self.rank);
        if m > 0 {
            *self.mult.entry(w).or_insert(0) += m;
        }
    }

    pub fn get(&self, w: &[i64]) -> u64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    pub fn weights(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.mult.iter()
    }

    pub fn support_len(&self) -> usize {
        self.mult.len()
    }

    /// Total multiplicity (the dimension of the underlying space).
    pub fn total_mass(&self) -> u64 {
        self.mult.values().sum()
    }

    /// Scales every multiplicity, realizing a direct sum of copies.
    pub fn repeat(&self, copies: u64) -> Self {
        WeightCharacter {
            rank: self.rank,
            mult: self.mult.iter().map(|(w, m)| (w.clone(), m * copies)).collect(),
        }
    }

    /// Character of the tensor product (convolution of weights).
    pub fn tensor(&self, other: &WeightCharacter) -> Result<WeightCharacter, CharError> {
        if self.rank != other.rank {
            return Err(CharError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut out = WeightCharacter::zero(self.rank);
        for (a, ma) in &self.mult {
            for (b, mb) in &other.mult {
                let sum: Weight = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add(sum, ma * mb);
            }
        }
        Ok(out)
    }

    /// Character of the k-th exterior power, by the generating function
    /// `prod_w (1 + t x^w)^{mult(w)}` truncated at degree k.
    pub fn wedge(&self, k: usize) -> WeightCharacter {
        self.lambda_op(k, true)
    }

    /// Character of the k-th symmetric power, by
    /// `prod_w (1 - t x^w)^{-mult(w)}` truncated at degree k.
    pub fn sym(&self, k: usize) -> WeightCharacter {
        self.lambda_op(k, false)
    }

    fn lambda_op(&self, k: usize, alternating: bool) -> WeightCharacter {
        // layers[j] = character at t-degree j
        let mut layers: Vec<BTreeMap<Weight, u64>> = vec![BTreeMap::new(); k + 1];
        layers[0].insert(vec![0; self.rank], 1);
        for (w, &m) in &self.mult {
            // Per-generator factor: sum_j binom(m, j) x^{jw} t^j (exterior)
            // or sum_j binom(m+j-1, j) x^{jw} t^j (symmetric).
            let mut factor: Vec<(Weight, u64)> = Vec::new();
            let top = if alternating { (m as usize).min(k) } else { k };
            for j in 0..=top {
                let coeff = if alternating {
                    binomial(m, j as u64)
                } else {
                    binomial(m + j as u64 - if j > 0 { 1 } else { 0 }, j as u64)
                };
                if coeff == 0 {
                    continue;
                }
                let jw: Weight = w.iter().map(|x| x * j as i64).collect();
                factor.push((jw, coeff));
            }
            let mut next: Vec<BTreeMap<Weight, u64>> = vec![BTreeMap::new(); k + 1];
            for (deg, layer) in layers.iter().enumerate() {
                for (wt, c) in layer {
                    for (fj, (fw, fc)) in factor.iter().enumerate() {
                        if deg + fj > k {
                            break;
                        }
                        let nw: Weight = wt.iter().zip(fw).map(|(a, b)| a + b).collect();
                        *next[deg + fj].entry(nw).or_insert(0) += c * fc;
                    }
                }
            }
            layers = next;
        }
        WeightCharacter {
            rank: self.rank,
            mult: core::mem::take(&mut layers[k]),
        }
    }

    /// Pushforward of the multiplicities along `w -> sum(w)`, the `(p-q)`
    /// eigenvalue of the Hodge torus.
    pub fn hodge_specialize(&self) -> HodgeProfile {
        let mut profile = HodgeProfile::new();
        for (w, m) in &self.mult {
            profile.add(w.iter().sum(), *m);
        }
        profile
    }
}

fn binomial(n: u64, k: u64) -> u64 {
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

/// Character of the standard representation: the 2n weights `±e_i`.
pub fn std_character(kind: FormKind, n: usize) -> Result<WeightCharacter, CharError> {
    check_group(kind, n)?;
    let mut c = WeightCharacter::zero(n);
    for i in 0..n {
        let mut w = vec![0i64; n];
        w[i] = 1;
        c.add(w.clone(), 1);
        w[i] = -1;
        c.add(w, 1);
    }
    Ok(c)
}

// ---------------------------------------------------------------------------
// Root systems
// ---------------------------------------------------------------------------

struct RootSystem {
    kind: FormKind,
    n: usize,
    positive: Vec<Weight>,
    rho: Weight,
}

impl RootSystem {
    fn new(kind: FormKind, n: usize) -> Self {
        let mut positive = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut a = vec![0i64; n];
                a[i] = 1;
                a[j] = -1;
                positive.push(a.clone());
                a[j] = 1;
                positive.push(a);
            }
        }
        if kind == FormKind::Symplectic {
            for i in 0..n {
                let mut a = vec![0i64; n];
                a[i] = 2;
                positive.push(a);
            }
        }
        let rho: Weight = match kind {
            FormKind::Symplectic => (0..n).map(|i| (n - i) as i64).collect(),
            FormKind::Orthogonal => (0..n).map(|i| (n - 1 - i) as i64).collect(),
        };
        RootSystem {
            kind,
            n,
            positive,
            rho,
        }
    }

    /// Expresses `v` in the simple-root basis; `Some` iff all coefficients
    /// are nonnegative integers (i.e. `v` is a nonnegative root-lattice
    /// combination).
    fn nonneg_simple_coords(&self, v: &[i64]) -> Option<Vec<i64>> {
        let n = self.n;
        let mut partial = Vec::with_capacity(n);
        let mut acc = 0i64;
        for x in v {
            acc += x;
            partial.push(acc);
        }
        let coords: Vec<i64> = match self.kind {
            FormKind::Symplectic => {
                // simple roots e_i - e_{i+1} (i < n) and 2 e_n
                let mut c: Vec<i64> = partial[..n - 1].to_vec();
                if partial[n - 1] % 2 != 0 {
                    return None;
                }
                c.push(partial[n - 1] / 2);
                c
            }
            FormKind::Orthogonal => {
                // simple roots e_i - e_{i+1} (i < n) and e_{n-1} + e_n;
                // writing s_k for the k-th partial sum, the coefficients are
                // c_i = s_i for i <= n-2, c_n = s_n / 2, c_{n-1} = s_{n-1} - c_n.
                let mut c: Vec<i64> = partial[..n - 2].to_vec();
                if partial[n - 1] % 2 != 0 {
                    return None;
                }
                let cn = partial[n - 1] / 2;
                c.push(partial[n - 2] - cn);
                c.push(cn);
                c
            }
        };
        if coords.iter().all(|&c| c >= 0) {
            Some(coords)
        } else {
            None
        }
    }

    fn dot(a: &[i64], b: &[i64]) -> i64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    /// Dominant representative of the Weyl orbit of `w`.
    fn dominant_rep(&self, w: &[i64]) -> Weight {
        let mut abs: Vec<i64> = w.iter().map(|x| x.abs()).collect();
        abs.sort_unstable_by(|a, b| b.cmp(a));
        if self.kind == FormKind::Orthogonal {
            let negatives = w.iter().filter(|&&x| x < 0).count();
            let has_zero = w.contains(&0);
            if !has_zero && negatives % 2 == 1 {
                let n = abs.len();
                abs[n - 1] = -abs[n - 1];
            }
        }
        abs
    }

    /// True iff `w` lies in the closed dominant chamber.
    fn is_dominant(&self, w: &[i64]) -> bool {
        let decreasing = w.windows(2).all(|p| p[0] >= p[1]);
        match self.kind {
            FormKind::Symplectic => decreasing && w[self.n - 1] >= 0,
            FormKind::Orthogonal => {
                let ok_last = if self.n >= 2 {
                    w[self.n - 2] >= w[self.n - 1].abs()
                } else {
                    true
                };
                w[..self.n - 1].windows(2).all(|p| p[0] >= p[1]) && ok_last
            }
        }
    }

    /// Weyl orbit of a dominant weight.
    fn orbit(&self, w: &[i64]) -> Vec<Weight> {
        let mut perms: Vec<Weight> = Vec::new();
        let mut sorted = w.to_vec();
        sorted.sort_unstable();
        permutations_of(&sorted, &mut perms);
        let mut out: Vec<Weight> = Vec::new();
        for p in perms {
            // all sign patterns, filtered by group kind
            let nonzero: Vec<usize> = (0..p.len()).filter(|&i| p[i] != 0).collect();
            for mask in 0u32..(1 << nonzero.len()) {
                if self.kind == FormKind::Orthogonal && mask.count_ones() % 2 == 1 {
                    // odd sign changes reachable only via a zero coordinate
                    if nonzero.len() == p.len() {
                        continue;
                    }
                }
                let mut q = p.clone();
                for (bit, &idx) in nonzero.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        q[idx] = -q[idx];
                    }
                }
                out.push(q);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn permutations_of(sorted: &[i64], out: &mut Vec<Weight>) {
    // unique permutations of a sorted multiset
    let mut cur = sorted.to_vec();
    loop {
        out.push(cur.clone());
        // next_permutation
        let n = cur.len();
        let mut i = n.wrapping_sub(1);
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

// ---------------------------------------------------------------------------
// Dominant weights
// ---------------------------------------------------------------------------

/// Validated dominant weight. For orthogonal groups, a positive last
/// coordinate marks the associated pair of `SO(2n)` constituents and sets
/// `paired`; dimensions and characters then refer to the sum of the pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight {
    coords: Vec<u64>,
    paired: bool,
}

impl DominantWeight {
    pub fn new(kind: FormKind, n: usize, coords: Vec<u64>) -> Result<Self, CharError> {
        check_group(kind, n)?;
        if coords.len() != n || coords.windows(2).any(|w| w[0] < w[1]) {
            return Err(CharError::InvalidWeight);
        }
        let paired = kind == FormKind::Orthogonal && coords[n - 1] > 0;
        Ok(DominantWeight { coords, paired })
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn paired(&self) -> bool {
        self.paired
    }

    /// Sum of the coordinates: the top Hodge weight of the constituent.
    pub fn size(&self) -> u64 {
        self.coords.iter().sum()
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    fn as_weight(&self) -> Weight {
        self.coords.iter().map(|&c| c as i64).collect()
    }

    /// The all-zero weight (trivial representation).
    pub fn trivial(kind: FormKind, n: usize) -> Result<Self, CharError> {
        Self::new(kind, n, vec![0; n])
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")?;
        if self.paired {
            write!(f, "±")?;
        }
        Ok(())
    }
}

/// Dimension of the irreducible with the given highest weight, by the Weyl
/// dimension formula. For a paired orthogonal weight this is the dimension
/// of the associated pair (twice the single `SO` constituent).
pub fn weyl_dim(kind: FormKind, n: usize, lambda: &DominantWeight) -> u64 {
    let rs = RootSystem::new(kind, n);
    let lam = lambda.as_weight();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in &rs.positive {
        let lr: i64 = RootSystem::dot(&lam, alpha) + RootSystem::dot(&rs.rho, alpha);
        let rr: i64 = RootSystem::dot(&rs.rho, alpha);
        num *= BigInt::from(lr);
        den *= BigInt::from(rr);
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    let single = q.to_u64().expect("dimension fits in u64");
    if lambda.paired {
        2 * single
    } else {
        single
    }
}

/// Full weight multiplicity function of the irreducible with highest weight
/// `lambda`, by the Freudenthal recursion. For a paired orthogonal weight
/// the mirror constituent (last coordinate negated) is added in.
pub fn irr_character(kind: FormKind, n: usize, lambda: &DominantWeight) -> WeightCharacter {
    let rs = RootSystem::new(kind, n);
    let lam = lambda.as_weight();

    // Dominant weights below lambda in the root order.
    let bound = lam.first().copied().unwrap_or(0);
    let mut dominant: Vec<(Weight, Vec<i64>)> = Vec::new();
    enumerate_box(n, bound, &mut |cand: &Weight| {
        if !rs.is_dominant(cand) {
            return;
        }
        let diff: Weight = lam.iter().zip(cand).map(|(a, b)| a - b).collect();
        if let Some(coords) = rs.nonneg_simple_coords(&diff) {
            dominant.push((cand.clone(), coords));
        }
    });
    // Sort by height of lambda - mu, ascending: closest to lambda first.
    dominant.sort_by_key(|(w, coords)| (coords.iter().sum::<i64>(), w.clone()));

    let rho2 = |w: &Weight| -> i64 {
        let shifted: Weight = w.iter().zip(&rs.rho).map(|(a, b)| a + b).collect();
        RootSystem::dot(&shifted, &shifted)
    };
    let norm_lam = rho2(&lam);

    let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
    for (mu, _) in &dominant {
        if *mu == lam {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut acc: i64 = 0;
        for alpha in &rs.positive {
            // Walk up the alpha string while still inside the weight box;
            // weights outside the support contribute zero.
            let mut k = 1i64;
            loop {
                let shifted: Weight = mu.iter().zip(alpha).map(|(m, a)| m + k * a).collect();
                if shifted.iter().any(|c| c.abs() > bound) {
                    break;
                }
                let rep = rs.dominant_rep(&shifted);
                if let Some(&m_up) = mult.get(&rep) {
                    acc += m_up * RootSystem::dot(&shifted, alpha);
                }
                k += 1;
            }
        }
        let denom = norm_lam - rho2(mu);
        debug_assert!(denom > 0, "Freudenthal denominator must be positive");
        let twice = 2 * acc;
        debug_assert_eq!(twice % denom, 0);
        let m = twice / denom;
        if m != 0 {
            mult.insert(mu.clone(), m);
        }
    }

    // Expand dominant multiplicities over Weyl orbits.
    let mut out = WeightCharacter::zero(n);
    for (mu, m) in &mult {
        for w in rs.orbit(mu) {
            out.add(w, *m as u64);
        }
    }
    if lambda.paired {
        // Mirror constituent: negate the last coordinate everywhere.
        let mut mirrored = WeightCharacter::zero(n);
        for (w, m) in out.weights() {
            let mut v = w.clone();
            v[n - 1] = -v[n - 1];
            mirrored.add(v, *m);
        }
        let mut total = WeightCharacter::zero(n);
        for (w, m) in out.weights() {
            total.add(w.clone(), *m);
        }
        for (w, m) in mirrored.weights() {
            total.add(w.clone(), *m);
        }
        return total;
    }
    out
}

/// Calls `f` on every vector in `[-bound, bound]^n`.
fn enumerate_box(n: usize, bound: i64, f: &mut impl FnMut(&Weight)) {
    let mut cur = vec![-bound; n];
    loop {
        f(&cur);
        let mut pos = n;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if cur[pos] < bound {
                cur[pos] += 1;
                for slot in cur.iter_mut().skip(pos + 1) {
                    *slot = -bound;
                }
                break;
            }
        }
    }
}

/// Breaks a genuine character into irreducible constituents by repeatedly
/// peeling the dominance-maximal surviving weight. Dominance is compared by
/// the vector of partial sums, ties lexicographically, so the output order
/// is deterministic.
///
/// For orthogonal groups the maximal weight of a genuine `O(2n)` character
/// never has a negative last coordinate, and a strictly positive one is
/// peeled as the associated pair.
pub fn decompose(
    x: &WeightCharacter,
    kind: FormKind,
    n: usize,
) -> Result<Vec<(DominantWeight, u64)>, CharError> {
    check_group(kind, n)?;
    if x.rank() != n {
        return Err(CharError::RankMismatch {
            left: x.rank(),
            right: n,
        });
    }
    let mut work: BTreeMap<Weight, i64> = x
        .weights()
        .map(|(w, m)| (w.clone(), *m as i64))
        .collect();
    let mut out: Vec<(DominantWeight, u64)> = Vec::new();
    loop {
        work.retain(|_, m| *m != 0);
        if work.is_empty() {
            break;
        }
        // dominance-maximal weight: max by (partial sums, lex)
        let top = work
            .keys()
            .max_by(|a, b| {
                let pa = partial_sums(a);
                let pb = partial_sums(b);
                pa.cmp(&pb).then_with(|| a.cmp(b))
            })
            .expect("nonempty")
            .clone();
        let m = work[&top];
        if m < 0 {
            return Err(CharError::NotACharacter);
        }
        let coords: Vec<u64> = top.iter().map(|&c| c.max(0) as u64).collect();
        if top.iter().any(|&c| c < 0) || coords.windows(2).any(|w| w[0] < w[1]) {
            return Err(CharError::NotACharacter);
        }
        let label = DominantWeight::new(kind, n, coords)?;
        let irr = irr_character(kind, n, &label);
        for (w, im) in irr.weights() {
            let slot = work.entry(w.clone()).or_insert(0);
            *slot -= m * (*im as i64);
            if *slot < 0 {
                return Err(CharError::NotACharacter);
            }
        }
        out.push((label, m as u64));
    }
    Ok(out)
}

fn partial_sums(w: &[i64]) -> Vec<i64> {
    let mut acc = 0;
    w.iter()
        .map(|x| {
            acc += x;
            acc
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Shapes and constituents
// ---------------------------------------------------------------------------

/// The constituent carved out of `V^{⊗d}` by a Young diagram under Weyl's
/// construction, as a dominant weight; `None` when the space vanishes.
///
/// Symplectic: vanishes unless the diagram has at most n rows. Orthogonal:
/// vanishes unless the first two columns total at most 2n; a first column
/// longer than n is replaced by its associated diagram (first column `2n -
/// c1`, other columns unchanged), which labels the same irreducible up to a
/// determinant twist that is invisible to the torus.
pub fn shape_constituent(kind: FormKind, n: usize, shape: &Partition) -> Option<DominantWeight> {
    match kind {
        FormKind::Symplectic => {
            if shape.rows() > n {
                return None;
            }
            let mut coords: Vec<u64> = shape.parts().iter().map(|&p| p as u64).collect();
            coords.resize(n, 0);
            Some(DominantWeight::new(kind, n, coords).expect("valid by construction"))
        }
        FormKind::Orthogonal => {
            let (c1, c2) = column_data(shape);
            if c1 + c2 > 2 * n as u32 {
                return None;
            }
            let effective: Partition = if c1 > n as u32 {
                let mut conj: Vec<u32> = shape.conjugate().parts().to_vec();
                conj[0] = 2 * n as u32 - c1;
                let conj = Partition::new(conj.into_iter().filter(|&c| c > 0).collect())
                    .expect("columns stay decreasing");
                conj.conjugate()
            } else {
                shape.clone()
            };
            let mut coords: Vec<u64> = effective.parts().iter().map(|&p| p as u64).collect();
            coords.resize(n, 0);
            Some(DominantWeight::new(kind, n, coords).expect("valid by construction"))
        }
    }
}

/// Dimension of the Weyl-construction constituent of a shape (0 when it
/// vanishes). This is the character-side oracle for the tensor model.
pub fn shape_dim(kind: FormKind, n: usize, shape: &Partition) -> u64 {
    shape_constituent(kind, n, shape).map_or(0, |w| weyl_dim(kind, n, &w))
}
