//! Partitions, Young diagrams, standard tableaux, and Young symmetrizers as
//! exact elements of the group algebra ℚ[S_d].
//!
//! Permutations are stored in one-line notation. The composition convention,
//! used everywhere in the crate, is `(s∘t)(i) = s(t(i))`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exactlin::{rat_int, Rat};

/// Errors for malformed partitions and tableaux.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeError {
    /// Parts not weakly decreasing or not positive.
    NotAPartition,
    /// A filling that is not a bijective, row/column strictly increasing
    /// assignment of 1..d to the diagram.
    NonStandardFilling,
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeError::NotAPartition => write!(f, "parts must be positive and weakly decreasing"),
            ShapeError::NonStandardFilling => write!(f, "filling is not a standard tableau"),
        }
    }
}

/// A partition: weakly decreasing list of positive integers. The empty
/// partition is allowed and has size 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, ShapeError> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(ShapeError::NotAPartition);
        }
        Ok(Partition { parts })
    }

    /// Empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts (the number of boxes).
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of column `c` (0-based): the number of parts that are > c.
    pub fn column_length(&self, c: u32) -> u32 {
        self.parts.iter().filter(|&&p| p > c).count() as u32
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..cols).map(|c| self.column_length(c)).collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Lengths of the first two columns of the diagram; the second is 0 when the
/// diagram has a single column.
pub fn column_data(shape: &Partition) -> (u32, u32) {
    (shape.column_length(0), shape.column_length(1))
}

/// All partitions of `d` in reverse-lexicographic order, e.g.
/// `3 -> [(3), (2,1), (1,1,1)]`.
pub fn enumerate_partitions(d: u32) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let hi = remaining.min(max_part);
        for next in (1..=hi).rev() {
            prefix.push(next);
            go(remaining - next, next, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d.max(1), &mut Vec::new(), &mut out);
    out
}

/// Number of standard Young tableaux of the given shape, by the hook length
/// formula `d! / prod(hooks)`.
pub fn count_standard_tableaux(shape: &Partition) -> u64 {
    let d = shape.size() as u128;
    let mut numerator: u128 = 1;
    for k in 2..=d {
        numerator *= k;
    }
    let conj = shape.conjugate();
    let mut denom: u128 = 1;
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 0..len as usize {
            let hook = (len as usize - c) + (conj.parts()[c] as usize - r) - 1;
            denom *= hook as u128;
        }
    }
    (numerator / denom) as u64
}

// ---------------------------------------------------------------------------
// Tableaux
// ---------------------------------------------------------------------------

/// A standard filling of a Young diagram: entries 1..d, strictly increasing
/// along rows and down columns. Standardness is enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilledTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl FilledTableau {
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Result<Self, ShapeError> {
        let d = shape.size();
        if rows.len() != shape.rows()
            || rows
                .iter()
                .zip(shape.parts())
                .any(|(row, &len)| row.len() != len as usize)
        {
            return Err(ShapeError::NonStandardFilling);
        }
        let mut seen = vec![false; d as usize + 1];
        for row in &rows {
            for &e in row {
                if e == 0 || e > d || seen[e as usize] {
                    return Err(ShapeError::NonStandardFilling);
                }
                seen[e as usize] = true;
            }
        }
        let increasing_rows = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let increasing_cols = (1..rows.len()).all(|r| {
            rows[r]
                .iter()
                .enumerate()
                .all(|(c, &e)| e > rows[r - 1][c])
        });
        if !increasing_rows || !increasing_cols {
            return Err(ShapeError::NonStandardFilling);
        }
        Ok(FilledTableau { shape, rows })
    }

    /// The canonical row-major filling: 1..d along the rows, top to bottom.
    pub fn row_major(shape: Partition) -> Self {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<u32> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        FilledTableau { shape, rows }
    }

    /// All standard fillings of a shape, by backtracking. The count matches
    /// [`count_standard_tableaux`].
    pub fn standard_fillings(shape: &Partition) -> Vec<FilledTableau> {
        let d = shape.size();
        let mut fill: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
        let mut used_in_row: Vec<usize> = vec![0; shape.rows()];
        let mut out = Vec::new();
        fn place(
            entry: u32,
            d: u32,
            shape: &Partition,
            fill: &mut Vec<Vec<u32>>,
            used: &mut Vec<usize>,
            out: &mut Vec<FilledTableau>,
        ) {
            if entry > d {
                out.push(FilledTableau {
                    shape: shape.clone(),
                    rows: fill.clone(),
                });
                return;
            }
            for r in 0..shape.rows() {
                let c = used[r];
                if c >= shape.parts()[r] as usize {
                    continue;
                }
                // Column constraint: the cell above must already be filled.
                if r > 0 && used[r - 1] <= c {
                    continue;
                }
                fill[r][c] = entry;
                used[r] += 1;
                place(entry + 1, d, shape, fill, used, out);
                used[r] -= 1;
                fill[r][c] = 0;
            }
        }
        place(1, d, shape, &mut fill, &mut used_in_row, &mut out);
        out
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entries of column `c`, top to bottom.
    pub fn column(&self, c: usize) -> Vec<u32> {
        self.rows
            .iter()
            .filter_map(|row| row.get(c).copied())
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Permutations and the group algebra
// ---------------------------------------------------------------------------

/// Permutation of {1..d} in one-line notation: `map[i]` is the image of
/// `i+1`, stored 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    map: Vec<u32>,
}

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm {
            map: (1..=d as u32).collect(),
        }
    }

    /// From one-line notation (1-based images).
    pub fn from_one_line(map: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = map.clone();
            s.sort_unstable();
            s == (1..=map.len() as u32).collect::<Vec<_>>()
        });
        Perm { map }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: u32) -> u32 {
        self.map[(i - 1) as usize]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            map: other.map.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0; self.map.len()];
        for (i, &img) in self.map.iter().enumerate() {
            map[(img - 1) as usize] = i as u32 + 1;
        }
        Perm { map }
    }

    /// Sign of the permutation.
    pub fn sign(&self) -> i32 {
        let mut seen = vec![false; self.map.len()];
        let mut sign = 1;
        for start in 0..self.map.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = (self.map[cur] - 1) as usize;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }
}

/// All permutations of {1..d}, in lexicographic order of one-line notation.
pub fn all_perms(d: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    let mut used = vec![false; d + 1];
    fn go(d: usize, cur: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if cur.len() == d {
            out.push(Perm::from_one_line(cur.clone()));
            return;
        }
        for v in 1..=d as u32 {
            if !used[v as usize] {
                used[v as usize] = true;
                cur.push(v);
                go(d, cur, used, out);
                cur.pop();
                used[v as usize] = false;
            }
        }
    }
    go(d, &mut cur, &mut used, &mut out);
    out
}

/// Finitely supported element of the group algebra ℚ[S_d].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Perm, Rat>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(degree: usize) -> Self {
        let mut e = Self::zero(degree);
        e.add_term(Perm::identity(degree), Rat::one());
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, p: Perm, c: Rat) {
        debug_assert_eq!(p.degree(), self.degree);
        let slot = self.terms.entry(p).or_insert_with(Rat::zero);
        *slot += c;
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn scale(&self, c: &Rat) -> Self {
        GroupAlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, v)| (p.clone(), v * c))
                .collect(),
        }
    }

    /// Convolution product in the group algebra.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree, other.degree);
        let mut out = Self::zero(self.degree);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q), a * b);
            }
        }
        out
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }
}

/// The normalized Young projector of a standard tableau `t`:
/// `p = (f/d!) * a_t * b_t`, where `a_t` sums the row group, `b_t` sums the
/// column group with signs, and `f` is the number of standard tableaux of
/// the shape. Satisfies `p*p = p` exactly.
pub fn young_projector(t: &FilledTableau) -> GroupAlgebraElement {
    let d = t.shape().size() as usize;
    // Row symmetrizer: permutations preserving each row setwise.
    let row_group = stabilizer_perms(d, t.rows());
    let cols: Vec<Vec<u32>> = (0..t.shape().parts().first().copied().unwrap_or(0) as usize)
        .map(|c| t.column(c))
        .collect();
    let col_group = stabilizer_perms(d, &cols);

    let mut a = GroupAlgebraElement::zero(d);
    for p in row_group {
        a.add_term(p, Rat::one());
    }
    let mut b = GroupAlgebraElement::zero(d);
    for p in col_group {
        let sign = rat_int(p.sign() as i64);
        b.add_term(p, sign);
    }
    let c = a.mul(&b);
    let mut factorial: u64 = 1;
    for k in 2..=d as u64 {
        factorial *= k;
    }
    let scale = rat_int(count_standard_tableaux(t.shape()) as i64) / rat_int(factorial as i64);
    c.scale(&scale)
}

/// All permutations of {1..d} preserving each block of `blocks` setwise.
fn stabilizer_perms(d: usize, blocks: &[Vec<u32>]) -> Vec<Perm> {
    let mut result = vec![Perm::identity(d)];
    for block in blocks {
        if block.len() <= 1 {
            continue;
        }
        let block_perms = all_perms(block.len());
        let mut next = Vec::with_capacity(result.len() * block_perms.len());
        for base in &result {
            for bp in &block_perms {
                // Send block[i] to block[bp(i)-1], fix everything else,
                // then compose with what we already have.
                let mut map: Vec<u32> = (1..=d as u32).collect();
                for (i, &src) in block.iter().enumerate() {
                    map[(src - 1) as usize] = block[(bp.apply(i as u32 + 1) - 1) as usize];
                }
                next.push(Perm::from_one_line(map).compose(base));
            }
        }
        result = next;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_enumeration_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let three = enumerate_partitions(3);
        assert_eq!(three, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        // p(5) = 7, every entry a genuine partition of 5, all distinct
        let five = enumerate_partitions(5);
        assert_eq!(five.len(), 7);
        for q in &five {
            assert_eq!(q.size(), 5);
        }
        let mut sorted = five.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), 7);
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn hook_counts_match_enumeration() {
        // single row is 1; small shapes by explicit enumeration
        assert_eq!(count_standard_tableaux(&p(&[4])), 1);
        assert_eq!(count_standard_tableaux(&p(&[2, 1])), 2);
        assert_eq!(count_standard_tableaux(&p(&[2, 2])), 2);
        for d in 0..=8u32 {
            for shape in enumerate_partitions(d) {
                let by_enum = FilledTableau::standard_fillings(&shape).len() as u64;
                assert_eq!(count_standard_tableaux(&shape), by_enum, "shape {shape}");
            }
        }
    }

    #[test]
    fn tableau_count_squares_sum_to_factorial() {
        let mut factorial: u64 = 1;
        for d in 1..=8u32 {
            factorial *= d as u64;
            let sum: u64 = enumerate_partitions(d)
                .iter()
                .map(|s| count_standard_tableaux(s).pow(2))
                .sum();
            assert_eq!(sum, factorial, "d = {d}");
        }
    }

    #[test]
    fn column_data_cases() {
        assert_eq!(column_data(&p(&[1, 1, 1])), (3, 0));
        assert_eq!(column_data(&p(&[2, 2])), (2, 2));
        assert_eq!(column_data(&p(&[3, 1])), (2, 1));
        // first column length equals the number of parts
        for d in 0..=6 {
            for shape in enumerate_partitions(d) {
                assert_eq!(column_data(&shape).0 as usize, shape.rows());
            }
        }
    }

    #[test]
    fn tableau_validation() {
        let shape = p(&[2, 1]);
        assert!(FilledTableau::new(shape.clone(), vec![vec![1, 2], vec![3]]).is_ok());
        // column not increasing
        assert!(FilledTableau::new(shape.clone(), vec![vec![2, 3], vec![1]]).is_err());
        // duplicate entry
        assert!(FilledTableau::new(shape, vec![vec![1, 1], vec![2]]).is_err());
    }

    #[test]
    fn perm_composition_convention() {
        // s = (1 2), t = (2 3) as one-line maps on {1,2,3}
        let s = Perm::from_one_line(vec![2, 1, 3]);
        let t = Perm::from_one_line(vec![1, 3, 2]);
        // (s∘t)(2) = s(t(2)) = s(3) = 3
        assert_eq!(s.compose(&t).apply(2), 3);
        assert_eq!(s.sign(), -1);
        assert_eq!(s.compose(&s), Perm::identity(3));
        assert_eq!(t.inverse(), t);
    }

    #[test]
    fn full_symmetrizer_and_antisymmetrizer() {
        let d = 3;
        let sym = young_projector(&FilledTableau::row_major(p(&[3])));
        assert_eq!(sym.num_terms(), 6);
        for (_, c) in sym.terms() {
            assert_eq!(*c, rat_int(1) / rat_int(6));
        }
        let alt = young_projector(&FilledTableau::row_major(p(&[1, 1, 1])));
        assert_eq!(alt.num_terms(), 6);
        for (perm, c) in alt.terms() {
            assert_eq!(*c, rat_int(perm.sign() as i64) / rat_int(6));
        }
        assert_eq!(all_perms(d).len(), 6);
    }

    #[test]
    fn young_projectors_are_idempotent_exhaustively() {
        for d in 0..=5u32 {
            for shape in enumerate_partitions(d) {
                for t in FilledTableau::standard_fillings(&shape) {
                    let proj = young_projector(&t);
                    assert!(proj.is_idempotent(), "shape {shape}");
                }
            }
        }
    }
}
