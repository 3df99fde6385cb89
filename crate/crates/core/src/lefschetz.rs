//! Albert-type descriptors of abelian varieties, validation of the
//! classification's dimension restrictions, the induced Lefschetz group
//! data, and coniveau certificates for `H^k(A^m)`.
//!
//! All group computations happen over the complex points of the Lefschetz
//! group: each simple factor contributes, per real embedding of its totally
//! real field, one classical group acting on copies of its standard
//! representation inside `H^1(A) ⊗ C`. Certificates decompose
//! `∧^k(H^1(A^m) ⊗ C)` into irreducible constituents labelled by tuples of
//! dominant weights, assign each the Hodge level given by the total size of
//! its labels, and aggregate a cumulative coniveau table.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::characters::{decompose, irr_character, std_character, weyl_dim, DominantWeight};
use crate::hodgemotive::{binomial, ConiveauTable};
use crate::weylconstruct::{FormKind, HodgeProfile};

/// Albert types of division algebras with positive involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlbertType {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for AlbertType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlbertType::I => write!(f, "I"),
            AlbertType::II => write!(f, "II"),
            AlbertType::III => write!(f, "III"),
            AlbertType::IV => write!(f, "IV"),
        }
    }
}

/// One isogeny factor `A_i^{m_i}` of an abelian variety: Albert type of its
/// endomorphism algebra, degree `f` of the totally real field, reduced
/// degree `d`, dimension `g` of the simple factor, multiplicity `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbelianFactor {
    pub albert_type: AlbertType,
    pub f: u32,
    pub d: u32,
    pub g: u32,
    pub m: u32,
}

/// Isogeny-type descriptor: a list of pairwise distinct simple factors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AbelianDescriptor {
    pub factors: Vec<AbelianFactor>,
}

impl AbelianDescriptor {
    pub fn new(factors: Vec<AbelianFactor>) -> Self {
        AbelianDescriptor { factors }
    }

    /// Dimension of the abelian variety: `sum m_i g_i`.
    pub fn total_dimension(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| f.m as u64 * f.g as u64)
            .sum()
    }

    pub fn has_type_iv(&self) -> bool {
        self.factors
            .iter()
            .any(|f| f.albert_type == AlbertType::IV)
    }
}

/// A violated classification rule, identified by a stable rule name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.rule, self.message)
    }
}

/// Checks every dimension restriction of the classification; an empty list
/// means the descriptor is admissible.
pub fn validate(desc: &AbelianDescriptor) -> Vec<Violation> {
    let mut out = Vec::new();
    for (idx, fac) in desc.factors.iter().enumerate() {
        let mut push = |rule: &'static str, message: String| {
            out.push(Violation {
                rule,
                message: format!("factor {idx}: {message}"),
            });
        };
        if fac.f == 0 || fac.g == 0 || fac.m == 0 {
            push(
                "albert.positive_parameters",
                format!("f, g, m must be positive (f={}, g={}, m={})", fac.f, fac.g, fac.m),
            );
            continue;
        }
        match fac.albert_type {
            AlbertType::I => {
                if fac.d != 1 {
                    push(
                        "albert.type_i.reduced_degree",
                        format!("type I requires d = 1, got d = {}", fac.d),
                    );
                }
                if fac.g % fac.f != 0 {
                    push(
                        "albert.type_i.divisibility",
                        format!("type I requires f | g, got f = {}, g = {}", fac.f, fac.g),
                    );
                }
            }
            AlbertType::II | AlbertType::III => {
                let name = if fac.albert_type == AlbertType::II {
                    "II"
                } else {
                    "III"
                };
                if fac.d != 2 {
                    push(
                        if fac.albert_type == AlbertType::II {
                            "albert.type_ii.reduced_degree"
                        } else {
                            "albert.type_iii.reduced_degree"
                        },
                        format!("type {name} requires d = 2, got d = {}", fac.d),
                    );
                }
                if fac.g % (2 * fac.f) != 0 {
                    push(
                        if fac.albert_type == AlbertType::II {
                            "albert.type_ii.divisibility"
                        } else {
                            "albert.type_iii.divisibility"
                        },
                        format!(
                            "type {name} requires 2f | g, got f = {}, g = {}",
                            fac.f, fac.g
                        ),
                    );
                } else if fac.albert_type == AlbertType::III && fac.g == 2 * fac.f {
                    push(
                        "albert.type_iii.strict_divisibility",
                        format!(
                            "type III requires 2f to divide g strictly, got g = 2f = {}",
                            fac.g
                        ),
                    );
                }
            }
            AlbertType::IV => {
                if fac.d == 0 {
                    push(
                        "albert.type_iv.reduced_degree",
                        String::from("type IV requires d >= 1"),
                    );
                } else if (2 * fac.g) % (fac.f * fac.d * fac.d) != 0 {
                    push(
                        "albert.type_iv.divisibility",
                        format!(
                            "type IV requires f*d^2 | 2g, got f = {}, d = {}, g = {}",
                            fac.f, fac.d, fac.g
                        ),
                    );
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Lefschetz group data
// ---------------------------------------------------------------------------

/// Kind of classical group attached to one embedding of one factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Sp,
    O,
    Gl,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Sp => write!(f, "Sp"),
            GroupKind::O => write!(f, "O"),
            GroupKind::Gl => write!(f, "GL"),
        }
    }
}

/// Classical group at one embedding: `kind_{size}` with `std_copies` copies
/// of the standard representation (and, for GL, the same number of copies of
/// the contragredient) inside `H^1(A) ⊗ C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddingGroup {
    pub kind: GroupKind,
    /// Matrix size: the subscript in `Sp_{2n}`, `O_{2n}`, `GL_r`.
    pub size: u32,
    pub std_copies: u32,
    pub contragredient_copies: u32,
}

/// Per-factor Lefschetz group data: `embeddings` identical classical groups,
/// one per real embedding of the totally real field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorGroup {
    pub albert_type: AlbertType,
    pub embeddings: u32,
    pub group: EmbeddingGroup,
}

/// The Lefschetz group of a descriptor over the complex numbers: a product
/// of classical groups with prescribed copies of standard representations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LefschetzGroupData {
    pub factors: Vec<FactorGroup>,
}

impl LefschetzGroupData {
    /// Total complex dimension of `H^1`, which must be twice the abelian
    /// dimension.
    pub fn h1_dim(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| {
                f.embeddings as u64
                    * f.group.size as u64
                    * (f.group.std_copies + f.group.contragredient_copies) as u64
            })
            .sum()
    }
}

/// Errors from descriptor-level computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LefschetzError {
    /// The descriptor violates the classification.
    Invalid(Vec<Violation>),
    /// Certificates for type IV factors are not computed: the complex-point
    /// method reads Hodge levels off weights of totally real type factors
    /// only (rule `albert.type_iv.coniveau_unsupported`).
    TypeIvUnsupported,
    /// Rank/degree guard exceeded.
    ResourceLimit,
}

impl fmt::Display for LefschetzError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LefschetzError::Invalid(v) => {
                write!(f, "descriptor violates {} classification rule(s)", v.len())
            }
            LefschetzError::TypeIvUnsupported => write!(
                f,
                "type IV factors are refused: Hodge levels of complex-point \
                 constituents certify coniveau only for totally real type \
                 (rule albert.type_iv.coniveau_unsupported)"
            ),
            LefschetzError::ResourceLimit => write!(f, "descriptor exceeds the rank/degree guard"),
        }
    }
}

/// Computes the Lefschetz group data of a valid descriptor.
///
/// Per factor and embedding: type I gives `Sp_{2g/f}` with `m` copies of the
/// standard representation; types II and III give `Sp_{g/f}` resp. `O_{g/f}`
/// with `2m` copies (standard plus contragredient, which are isomorphic);
/// type IV gives `GL_{g/(df)}` with `dm` copies each of the standard and the
/// contragredient.
pub fn lefschetz_group(desc: &AbelianDescriptor) -> Result<LefschetzGroupData, LefschetzError> {
    let violations = validate(desc);
    if !violations.is_empty() {
        return Err(LefschetzError::Invalid(violations));
    }
    let factors = desc
        .factors
        .iter()
        .map(|fac| {
            let group = match fac.albert_type {
                AlbertType::I => EmbeddingGroup {
                    kind: GroupKind::Sp,
                    size: 2 * fac.g / fac.f,
                    std_copies: fac.m,
                    contragredient_copies: 0,
                },
                AlbertType::II => EmbeddingGroup {
                    kind: GroupKind::Sp,
                    size: fac.g / fac.f,
                    std_copies: 2 * fac.m,
                    contragredient_copies: 0,
                },
                AlbertType::III => EmbeddingGroup {
                    kind: GroupKind::O,
                    size: fac.g / fac.f,
                    std_copies: 2 * fac.m,
                    contragredient_copies: 0,
                },
                AlbertType::IV => EmbeddingGroup {
                    kind: GroupKind::Gl,
                    size: fac.g / (fac.d * fac.f),
                    std_copies: fac.d * fac.m,
                    contragredient_copies: fac.d * fac.m,
                },
            };
            FactorGroup {
                albert_type: fac.albert_type,
                embeddings: fac.f,
                group,
            }
        })
        .collect();
    let data = LefschetzGroupData { factors };
    debug_assert_eq!(data.h1_dim(), 2 * desc.total_dimension());
    Ok(data)
}

// ---------------------------------------------------------------------------
// Coniveau certificates
// ---------------------------------------------------------------------------

/// One isotypic constituent of `H^k(A^m) ⊗ C`: the tuple of dominant weights
/// across the group slots, its multiplicity, total dimension, Hodge level
/// (the sum of the label sizes) and coniveau `(k - level)/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constituent {
    pub labels: Vec<DominantWeight>,
    pub multiplicity: u64,
    pub dim: u64,
    pub level: u64,
    pub coniveau: u64,
}

/// Coniveau certificate for `H^k(A^m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GhcCertificate {
    pub m: u32,
    pub k: u32,
    pub total_dim: u64,
    pub constituents: Vec<Constituent>,
    pub table: ConiveauTable,
}

/// One classical-group slot of the complexified Lefschetz group, with the
/// number of standard copies in `H^1(A^m) ⊗ C`.
#[derive(Debug, Clone, Copy)]
struct Slot {
    kind: FormKind,
    rank: usize,
    copies: u64,
}

const MAX_H1_DIM: u64 = 64;
const MAX_WEDGE_DEGREE: u32 = 24;

fn slots_for(
    desc: &AbelianDescriptor,
    m: u32,
) -> Result<Vec<Slot>, LefschetzError> {
    let group = lefschetz_group(desc)?;
    if desc.has_type_iv() {
        return Err(LefschetzError::TypeIvUnsupported);
    }
    let mut slots = Vec::new();
    for fac in &group.factors {
        let kind = match fac.group.kind {
            GroupKind::Sp => FormKind::Symplectic,
            GroupKind::O => FormKind::Orthogonal,
            GroupKind::Gl => unreachable!("type IV already refused"),
        };
        debug_assert_eq!(fac.group.size % 2, 0);
        for _ in 0..fac.embeddings {
            slots.push(Slot {
                kind,
                rank: (fac.group.size / 2) as usize,
                copies: m as u64 * fac.group.std_copies as u64,
            });
        }
    }
    Ok(slots)
}

/// Builds the coniveau certificate for `H^k(A^m)` of a descriptor of totally
/// real type.
///
/// `H^1(A^m) ⊗ C` splits over the product group into `copies` standard
/// representations per slot. Its k-th exterior power is assembled across
/// compositions `k = sum k_j`; each `∧^{k_j}` of a slot decomposes by
/// character peeling, the per-slot constituents multiply out to labelled
/// tuples, and the certificate aggregates dimensions by coniveau.
pub fn coniveau_report(
    desc: &AbelianDescriptor,
    m: u32,
    k: u32,
) -> Result<GhcCertificate, LefschetzError> {
    let slots = slots_for(desc, m)?;
    let h1_dim: u64 = slots.iter().map(|s| s.copies * 2 * s.rank as u64).sum();
    if h1_dim > MAX_H1_DIM || k > MAX_WEDGE_DEGREE {
        return Err(LefschetzError::ResourceLimit);
    }
    let total_dim = binomial(h1_dim, k as u64);

    // Per-slot wedge decompositions for every degree up to min(k, slot dim).
    let mut per_slot: Vec<Vec<Vec<(DominantWeight, u64)>>> = Vec::with_capacity(slots.len());
    for slot in &slots {
        let std = std_character(slot.kind, slot.rank).expect("slot groups are valid");
        let full = std.repeat(slot.copies);
        let top = (slot.copies * 2 * slot.rank as u64).min(k as u64) as usize;
        let mut by_degree = Vec::with_capacity(top + 1);
        for deg in 0..=top {
            let wedge = full.wedge(deg);
            let parts =
                decompose(&wedge, slot.kind, slot.rank).expect("wedge powers are characters");
            by_degree.push(parts);
        }
        per_slot.push(by_degree);
    }

    // Walk the compositions of k across slots and multiply out constituents.
    let mut aggregate: BTreeMap<Vec<DominantWeight>, u64> = BTreeMap::new();
    let mut composition = Vec::with_capacity(slots.len());
    fn walk(
        slot_idx: usize,
        remaining: usize,
        per_slot: &[Vec<Vec<(DominantWeight, u64)>>],
        composition: &mut Vec<usize>,
        aggregate: &mut BTreeMap<Vec<DominantWeight>, u64>,
    ) {
        if slot_idx == per_slot.len() {
            if remaining > 0 {
                return;
            }
            // Cartesian product over slots of the chosen degree pieces.
            let mut tuples: Vec<(Vec<DominantWeight>, u64)> = alloc::vec![(Vec::new(), 1)];
            for (s, &deg) in composition.iter().enumerate() {
                let mut next = Vec::new();
                for (labels, mult) in &tuples {
                    for (w, wm) in &per_slot[s][deg] {
                        let mut ls = labels.clone();
                        ls.push(w.clone());
                        next.push((ls, mult * wm));
                    }
                }
                tuples = next;
            }
            for (labels, mult) in tuples {
                *aggregate.entry(labels).or_insert(0) += mult;
            }
            return;
        }
        let top = (per_slot[slot_idx].len() - 1).min(remaining);
        for deg in 0..=top {
            composition.push(deg);
            walk(slot_idx + 1, remaining - deg, per_slot, composition, aggregate);
            composition.pop();
        }
    }
    walk(0, k as usize, &per_slot, &mut composition, &mut aggregate);

    // Assemble constituents and the cumulative table.
    let mut constituents = Vec::with_capacity(aggregate.len());
    let mut by_coniveau: BTreeMap<u64, u64> = BTreeMap::new();
    for (labels, multiplicity) in aggregate {
        let mut dim_single = 1u64;
        let mut level = 0u64;
        for (slot, w) in slots.iter().zip(&labels) {
            dim_single *= weyl_dim(slot.kind, slot.rank, w);
            level += w.size();
        }
        debug_assert!(level <= k as u64 && (k as u64 - level) % 2 == 0);
        let coniveau = (k as u64 - level) / 2;
        let dim = multiplicity * dim_single;
        *by_coniveau.entry(coniveau).or_insert(0) += dim;
        constituents.push(Constituent {
            labels,
            multiplicity,
            dim,
            level,
            coniveau,
        });
    }
    let mut table = ConiveauTable::new(k);
    for n in 0..=(k / 2) as u64 {
        let cumulative: u64 = by_coniveau
            .iter()
            .filter(|(c, _)| **c >= n)
            .map(|(_, d)| d)
            .sum();
        table.set(n as u32, cumulative);
    }
    debug_assert_eq!(table.get(0), total_dim);
    Ok(GhcCertificate {
        m,
        k,
        total_dim,
        constituents,
        table,
    })
}

/// True iff every constituent of `H^k(A^m)` has a palindromic Hodge profile.
pub fn hodge_symmetry_audit(
    desc: &AbelianDescriptor,
    m: u32,
    k: u32,
) -> Result<bool, LefschetzError> {
    let slots = slots_for(desc, m)?;
    let certificate = coniveau_report(desc, m, k)?;
    for constituent in &certificate.constituents {
        let mut profile = HodgeProfile::new();
        profile.add(0, 1);
        for (slot, w) in slots.iter().zip(&constituent.labels) {
            let factor = irr_character(slot.kind, slot.rank, w).hodge_specialize();
            profile = profile.convolve(&factor);
        }
        if !profile.is_palindromic() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodgemotive::primitive_filtration_dims;

    fn very_general(g: u32) -> AbelianDescriptor {
        AbelianDescriptor::new(alloc::vec![AbelianFactor {
            albert_type: AlbertType::I,
            f: 1,
            d: 1,
            g,
            m: 1,
        }])
    }

    #[test]
    fn validation_examples() {
        assert!(validate(&very_general(2)).is_empty());
        // type III with g = 2f exactly: strictness violated
        let v = validate(&AbelianDescriptor::new(alloc::vec![AbelianFactor {
            albert_type: AlbertType::III,
            f: 1,
            d: 2,
            g: 2,
            m: 1,
        }]));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule, "albert.type_iii.strict_divisibility");
        // type II with 2f not dividing g
        let v = validate(&AbelianDescriptor::new(alloc::vec![AbelianFactor {
            albert_type: AlbertType::II,
            f: 2,
            d: 2,
            g: 2,
            m: 1,
        }]));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule, "albert.type_ii.divisibility");
    }

    #[test]
    fn group_data_per_type() {
        let data = lefschetz_group(&very_general(2)).unwrap();
        assert_eq!(data.factors.len(), 1);
        let f = &data.factors[0];
        assert_eq!((f.embeddings, f.group.kind, f.group.size), (1, GroupKind::Sp, 4));
        assert_eq!(f.group.std_copies, 1);

        let data = lefschetz_group(&AbelianDescriptor::new(alloc::vec![AbelianFactor {
            albert_type: AlbertType::II,
            f: 1,
            d: 2,
            g: 2,
            m: 1,
        }]))
        .unwrap();
        let f = &data.factors[0];
        assert_eq!((f.group.kind, f.group.size, f.group.std_copies), (GroupKind::Sp, 2, 2));

        let data = lefschetz_group(&AbelianDescriptor::new(alloc::vec![AbelianFactor {
            albert_type: AlbertType::III,
            f: 1,
            d: 2,
            g: 4,
            m: 1,
        }]))
        .unwrap();
        let f = &data.factors[0];
        assert_eq!((f.group.kind, f.group.size, f.group.std_copies), (GroupKind::O, 4, 2));

        let data = lefschetz_group(&AbelianDescriptor::new(alloc::vec![AbelianFactor {
            albert_type: AlbertType::IV,
            f: 1,
            d: 1,
            g: 1,
            m: 2,
        }]))
        .unwrap();
        let f = &data.factors[0];
        assert_eq!((f.group.kind, f.group.size), (GroupKind::Gl, 1));
        assert_eq!((f.group.std_copies, f.group.contragredient_copies), (2, 2));
        assert_eq!(data.h1_dim(), 4);

        // copies scale linearly in the factor multiplicity
        let mut doubled = very_general(2);
        doubled.factors[0].m = 3;
        let data = lefschetz_group(&doubled).unwrap();
        assert_eq!(data.factors[0].group.std_copies, 3);
    }

    #[test]
    fn invalid_descriptor_is_rejected() {
        let bad = AbelianDescriptor::new(alloc::vec![AbelianFactor {
            albert_type: AlbertType::III,
            f: 1,
            d: 2,
            g: 2,
            m: 1,
        }]);
        assert!(matches!(
            lefschetz_group(&bad),
            Err(LefschetzError::Invalid(_))
        ));
        assert!(matches!(
            coniveau_report(&bad, 1, 2),
            Err(LefschetzError::Invalid(_))
        ));
    }

    #[test]
    fn type_iv_certificates_are_refused() {
        let cm = AbelianDescriptor::new(alloc::vec![AbelianFactor {
            albert_type: AlbertType::IV,
            f: 1,
            d: 1,
            g: 1,
            m: 1,
        }]);
        assert!(lefschetz_group(&cm).is_ok());
        assert_eq!(
            coniveau_report(&cm, 1, 1),
            Err(LefschetzError::TypeIvUnsupported)
        );
    }

    #[test]
    fn very_general_surface_tables() {
        let desc = very_general(2);
        let cert = coniveau_report(&desc, 1, 2).unwrap();
        assert_eq!(cert.total_dim, 6);
        assert_eq!(cert.table.get(0), 6);
        assert_eq!(cert.table.get(1), 1);
        let cert = coniveau_report(&desc, 1, 3).unwrap();
        assert_eq!(cert.table.get(0), 4);
        assert_eq!(cert.table.get(1), 4);
        // certificate invariants
        for c in &cert.constituents {
            assert_eq!(c.level % 2, cert.k as u64 % 2);
        }
    }

    #[test]
    fn squares_of_very_general_surface() {
        let desc = very_general(2);
        let cert = coniveau_report(&desc, 2, 2).unwrap();
        assert_eq!(cert.total_dim, 28);
        assert_eq!(cert.table.get(0), 28);
        assert_eq!(cert.table.get(1), 3);
        // three trivial constituents carry the polarization classes
        let trivial_dim: u64 = cert
            .constituents
            .iter()
            .filter(|c| c.level == 0)
            .map(|c| c.dim)
            .sum();
        assert_eq!(trivial_dim, 3);
    }

    #[test]
    fn coniveau_matches_primitive_filtration() {
        for g in 1..=3u32 {
            let desc = very_general(g);
            for k in 0..=2 * g {
                let cert = coniveau_report(&desc, 1, k).unwrap();
                for n in 0..=k / 2 {
                    assert_eq!(
                        cert.table.get(n),
                        primitive_filtration_dims(g, k, n),
                        "g {g} k {k} n {n}"
                    );
                }
                assert!(cert.table.is_monotone());
                let sum: u64 = cert.constituents.iter().map(|c| c.dim).sum();
                assert_eq!(sum, cert.total_dim);
            }
        }
    }

    #[test]
    fn hodge_symmetry_audits() {
        assert!(hodge_symmetry_audit(&very_general(2), 1, 2).unwrap());
        assert!(hodge_symmetry_audit(&very_general(2), 1, 4).unwrap());
        let type_ii = AbelianDescriptor::new(alloc::vec![AbelianFactor {
            albert_type: AlbertType::II,
            f: 1,
            d: 2,
            g: 2,
            m: 1,
        }]);
        assert!(hodge_symmetry_audit(&type_ii, 1, 2).unwrap());
        let type_iii = AbelianDescriptor::new(alloc::vec![AbelianFactor {
            albert_type: AlbertType::III,
            f: 1,
            d: 2,
            g: 4,
            m: 1,
        }]);
        assert!(hodge_symmetry_audit(&type_iii, 1, 2).unwrap());
    }

    #[test]
    fn product_descriptor_certificates() {
        // E x S: an elliptic curve times a very general surface
        let desc = AbelianDescriptor::new(alloc::vec![
            AbelianFactor {
                albert_type: AlbertType::I,
                f: 1,
                d: 1,
                g: 1,
                m: 1,
            },
            AbelianFactor {
                albert_type: AlbertType::I,
                f: 1,
                d: 1,
                g: 2,
                m: 1,
            },
        ]);
        let cert = coniveau_report(&desc, 1, 2).unwrap();
        assert_eq!(cert.total_dim, binomial(6, 2));
        let sum: u64 = cert.constituents.iter().map(|c| c.dim).sum();
        assert_eq!(sum, cert.total_dim);
        // labels are tuples over two slots
        assert!(cert.constituents.iter().all(|c| c.labels.len() == 2));
        // the two polarizations give coniveau-1 classes
        assert!(cert.table.get(1) >= 2);
    }
}
