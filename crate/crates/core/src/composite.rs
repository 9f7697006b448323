//! Code composition: almost-disjoint decimal families, the 24-code base-26
//! family, direct products, the CRT-flattened base-36 codes with the 7/p
//! relabeling, restricted mod-37 codes, and grouped tag codes.

use crate::analysis::count_errors;
use crate::codegen::{
    base_code, insert_extend, AlphabetKind, CodeParams, CodeTable, CodegenError, TableKind, Word,
    WordCode,
};
use crate::catalog;
use crate::galois::Field;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CompositeError {
    #[error("product precondition failed: {0}")]
    ProductPrecondition(&'static str),
    #[error("K4 must be in 1..=3, got {0}")]
    BadCrtIndex(u8),
    #[error("K must be in 1..=36, got {0}")]
    BadMod37K(u8),
    #[error("grouped spec invalid: {0}")]
    BadGroupedSpec(String),
    #[error(transparent)]
    Codegen(#[from] CodegenError),
}

/// A shared-weight sequence of almost-disjoint extended decimal codes.
pub struct Family {
    pub name: &'static str,
    pub b: u8,
    pub e: u8,
    /// (K, P) per code, in published order.
    pub pairs: Vec<(u8, u8)>,
    /// Published (left, right) phonetic counts per code.
    pub expected_phonetic: Vec<(u32, u32)>,
    pub codes: Vec<CodeTable>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyName {
    Seq38,
    Seq47,
}

impl FamilyName {
    pub fn parse(s: &str) -> Option<FamilyName> {
        match s {
            "seq38" => Some(FamilyName::Seq38),
            "seq47" => Some(FamilyName::Seq47),
            _ => None,
        }
    }
}

/// The two published sequences. seq38 is the full sequence of 8 codes with 16
/// phonetic errors total; seq47 is the greedy sequence of 6 codes with 9.
pub fn family_seq(name: FamilyName) -> Family {
    let f = Field::new(9).unwrap();
    struct Published {
        name: &'static str,
        b: u8,
        e: u8,
        pairs: &'static [(u8, u8)],
        phonetic: &'static [(u32, u32)],
    }
    let row = match name {
        FamilyName::Seq38 => Published {
            name: "seq38",
            b: 3,
            e: 8,
            pairs: &[(5, 5), (1, 1), (2, 2), (7, 7), (3, 3), (4, 4), (6, 6), (8, 8)],
            phonetic: &[(0, 0), (1, 1), (1, 1), (1, 1), (2, 0), (0, 2), (2, 1), (1, 2)],
        },
        FamilyName::Seq47 => Published {
            name: "seq47",
            b: 4,
            e: 7,
            pairs: &[(3, 7), (1, 3), (5, 2), (6, 1), (4, 4), (2, 5)],
            phonetic: &[(0, 0), (0, 1), (1, 0), (1, 1), (1, 1), (1, 2)],
        },
    };
    let (fname, b, e) = (row.name, row.b, row.e);
    let pairs: Vec<(u8, u8)> = row.pairs.to_vec();
    let phonetic: Vec<(u32, u32)> = row.phonetic.to_vec();
    let codes = pairs
        .iter()
        .map(|&(k, p)| {
            insert_extend(&base_code(&f, b, e, k).unwrap(), p)
                .expect("published family parameters are valid")
        })
        .collect();
    let fam = Family { name: fname, b, e, pairs, expected_phonetic: phonetic, codes };
    family_invariants(&fam).expect("published family satisfies the disjointness requirements");
    fam
}

/// The requirements for an almost-disjoint ensemble: shared B and E; K, P, R
/// and C pairwise distinct; R and C nonzero.
pub fn family_invariants(fam: &Family) -> Result<(), String> {
    let params: Vec<&CodeParams> = fam
        .codes
        .iter()
        .map(|c| c.params().expect("family codes carry parameters"))
        .collect();
    let distinct = |vals: Vec<u8>, what: &str| -> Result<(), String> {
        let mut sorted = vals.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vals.len() {
            return Err(format!("{what} values are not pairwise distinct"));
        }
        Ok(())
    };
    if params.iter().any(|p| p.b != fam.b || p.e != fam.e) {
        return Err("codes do not share B and E".into());
    }
    distinct(params.iter().map(|p| p.k).collect(), "K")?;
    distinct(params.iter().map(|p| p.p.unwrap()).collect(), "P")?;
    distinct(params.iter().map(|p| p.r().unwrap()).collect(), "R")?;
    distinct(params.iter().map(|p| p.c().unwrap()).collect(), "C")?;
    if params.iter().any(|p| p.r() == Some(0) || p.c() == Some(0)) {
        return Err("R and C must be nonzero".into());
    }
    Ok(())
}

/// The 24 almost-disjoint base-26 codes: insertion of 'z' into the GF(5^2)
/// code with B=(2,1)=11, E=(3,3)=18 and K = P ranging over the nonzero field
/// elements. All pairwise intersections are the single word zzz.
pub fn base26_family() -> Vec<CodeTable> {
    let f = Field::new(25).unwrap();
    (1..25)
        .map(|k| {
            insert_extend(&base_code(&f, 11, 18, k).unwrap(), k)
                .expect("K = P != 0 meets the insertion conditions")
        })
        .collect()
}

/// Direct product: symbols are pairs (s1, s2) encoded as s1 * q2 + s2.
///
/// Requires c1 to detect all error types with no triple words, and c2 to
/// detect all types except possibly triple and cyclic.
pub fn product(c1: &CodeTable, c2: &CodeTable) -> Result<CodeTable, CompositeError> {
    let r1 = count_errors(&WordCode::from_table(c1));
    if !r1.detects_all_types() {
        return Err(CompositeError::ProductPrecondition(
            "left factor must detect all error types",
        ));
    }
    if !c1.triple_words().is_empty() {
        return Err(CompositeError::ProductPrecondition("left factor must have no triple words"));
    }
    let r2 = count_errors(&WordCode::from_table(c2));
    if r2.single != 0
        || r2.transposition != 0
        || r2.twin != 0
        || r2.jump_transposition != 0
        || r2.jump_twin != 0
    {
        return Err(CompositeError::ProductPrecondition(
            "right factor must detect all error types except possibly triple and cyclic",
        ));
    }
    let (q1, q2) = (c1.q(), c2.q());
    let q = q1 as usize * q2 as usize;
    assert!(q <= 64, "product alphabet too large");
    let q = q as u8;
    let mut entries = Vec::with_capacity(q as usize * q as usize);
    for b in 0..q {
        for e in 0..q {
            let (b1, b2) = (b / q2, b % q2);
            let (e1, e2) = (e / q2, e % q2);
            entries.push(c1.entry(b1, e1) * q2 + c2.entry(b2, e2));
        }
    }
    Ok(CodeTable::from_entries(
        q,
        entries,
        TableKind::Composed(format!("product {}x{}", q1, q2)),
    ))
}

/// The involution exchanging the symbols 7 and 25 ('p'), fixing all others.
pub fn p7(x: u8) -> u8 {
    if x % 18 == 7 {
        32 - x
    } else {
        x
    }
}

/// CRT flattening of a GF(4) x GF(9) symbol pair into 0..36.
fn crt_pair(x4: u8, x9: u8) -> u8 {
    ((9 * x4 as u16 + 64 * x9 as u16) % 36) as u8
}

/// The base-36 code C4(i) x C9(j) flattened through the Chinese remainder
/// map and conjugated by the 7/p exchange. i is the GF(4) constant (nonzero),
/// j the GF(9) constant.
pub fn crt36(i: u8, j: u8) -> Result<CodeTable, CompositeError> {
    if i == 0 || i > 3 {
        return Err(CompositeError::BadCrtIndex(i));
    }
    if j > 8 {
        return Err(CompositeError::BadMod37K(j));
    }
    let c4 = catalog::base4_code(i).expect("i checked above");
    let f9 = Field::new(9).unwrap();
    let c9 = base_code(&f9, 4, 7, j)?;
    let m36 = |b: u8, e: u8| crt_pair(c4.entry(b % 4, e % 4), c9.entry(b % 9, e % 9));
    let mut entries = Vec::with_capacity(36 * 36);
    for b in 0..36 {
        for e in 0..36 {
            entries.push(p7(m36(p7(b), p7(e))));
        }
    }
    Ok(CodeTable::from_entries(
        36,
        entries,
        TableKind::Composed(format!("crt36 K4={i} K9={j}")),
    ))
}

/// The restricted mod-37 code: words (b, m, e) over 0..=35 with
/// 10b + m + 26e = K (mod 37). Not a full table; the row/column solution can
/// be the excluded 37th symbol.
pub fn mod37_code(k: u8) -> Result<WordCode, CompositeError> {
    if k == 0 || k > 36 {
        return Err(CompositeError::BadMod37K(k));
    }
    let mut words = Vec::new();
    for b in 0..36 {
        for e in 0..36 {
            let m = mod37_entry(k, b, e);
            if m <= 35 {
                words.push([b, m, e]);
            }
        }
    }
    Ok(WordCode::from_words(36, words).with_alphabet(AlphabetKind::Alphanumeric))
}

/// Middle symbol of the unrestricted mod-37 table; 36 means the excluded
/// symbol (no codeword at this cell).
pub fn mod37_entry(k: u8, b: u8, e: u8) -> u8 {
    let m = (k as i32 - 10 * b as i32 - 26 * e as i32).rem_euclid(37);
    m as u8
}

/// ell collections of k pairwise-disjoint codes plus a single-error-detecting
/// index code over the collection labels.
pub struct GroupedSpec {
    pub name: String,
    /// collections[i] are the k candidate codes for group i.
    pub collections: Vec<Vec<WordCode>>,
    /// Index words s with s[i] selecting collections[i][s[i]].
    pub index_code: Vec<Vec<u8>>,
}

/// A grouped tag code: concatenations of one codeword per group, group
/// membership steered by the index code.
pub struct GroupedCode {
    spec: GroupedSpec,
    q: u8,
}

pub fn grouped(spec: GroupedSpec) -> Result<GroupedCode, CompositeError> {
    let ell = spec.collections.len();
    if ell == 0 {
        return Err(CompositeError::BadGroupedSpec("no groups".into()));
    }
    let k = spec.collections[0].len();
    if k == 0 || spec.collections.iter().any(|c| c.len() != k) {
        return Err(CompositeError::BadGroupedSpec(
            "collections must be non-empty and equally sized".into(),
        ));
    }
    let q = spec.collections[0][0].q();
    if spec.collections.iter().flatten().any(|c| c.q() != q) {
        return Err(CompositeError::BadGroupedSpec("mixed alphabet sizes".into()));
    }
    for (i, coll) in spec.collections.iter().enumerate() {
        for a in 0..coll.len() {
            for b in a + 1..coll.len() {
                if coll[a].words().iter().any(|&w| coll[b].contains(w)) {
                    return Err(CompositeError::BadGroupedSpec(format!(
                        "collection {i}: codes {a} and {b} are not disjoint"
                    )));
                }
            }
        }
    }
    if spec.index_code.is_empty() {
        return Err(CompositeError::BadGroupedSpec("empty index code".into()));
    }
    for s in &spec.index_code {
        if s.len() != ell || s.iter().any(|&x| x as usize >= k) {
            return Err(CompositeError::BadGroupedSpec("malformed index word".into()));
        }
    }
    if !index_min_distance_two(&spec.index_code) {
        return Err(CompositeError::BadGroupedSpec(
            "index code is not single error detecting".into(),
        ));
    }
    Ok(GroupedCode { spec, q })
}

fn index_min_distance_two(index: &[Vec<u8>]) -> bool {
    for i in 0..index.len() {
        for j in i + 1..index.len() {
            let diff = index[i]
                .iter()
                .zip(&index[j])
                .filter(|(a, b)| a != b)
                .count();
            if diff < 2 {
                return false;
            }
        }
    }
    true
}

/// The cyclic-shift index code {(i, i+1 mod k)} over two groups.
pub fn cyclic_index(k: u8) -> Vec<Vec<u8>> {
    (0..k).map(|i| vec![i, (i + 1) % k]).collect()
}

/// Detection guarantees of a grouped code: the worst per-category counts over
/// each collection and the structural index properties.
pub struct GroupedReport {
    pub per_group_worst: Vec<crate::analysis::ErrorReport>,
    pub index_single_error_detecting: bool,
    pub group_reversal_detecting: bool,
}

impl GroupedCode {
    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn groups(&self) -> usize {
        self.spec.collections.len()
    }

    pub fn codes_per_group(&self) -> usize {
        self.spec.collections[0].len()
    }

    pub fn word_len(&self) -> usize {
        3 * self.groups()
    }

    /// Exact codeword count: sum over index words of the product of the
    /// selected code sizes.
    pub fn count(&self) -> u64 {
        self.spec
            .index_code
            .iter()
            .map(|s| {
                s.iter()
                    .enumerate()
                    .map(|(i, &x)| self.spec.collections[i][x as usize].len() as u64)
                    .product::<u64>()
            })
            .sum()
    }

    /// Which code of collection `group` contains the group word, if any.
    /// Disjointness makes the answer unique.
    pub fn group_of(&self, group: usize, w: Word) -> Option<u8> {
        self.spec.collections[group]
            .iter()
            .position(|c| c.contains(w))
            .map(|i| i as u8)
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        self.split_indices(word).is_some_and(|s| self.spec.index_code.contains(&s))
    }

    /// The index vector of a full word, if every group resolves to a code.
    pub fn split_indices(&self, word: &[u8]) -> Option<Vec<u8>> {
        if word.len() != self.word_len() {
            return None;
        }
        word.chunks(3)
            .enumerate()
            .map(|(i, g)| self.group_of(i, [g[0], g[1], g[2]]))
            .collect()
    }

    /// First index word and the smallest codeword of each selected code.
    pub fn sample_word(&self) -> Vec<u8> {
        let s = &self.spec.index_code[0];
        s.iter()
            .enumerate()
            .flat_map(|(i, &x)| self.spec.collections[i][x as usize].words()[0])
            .collect()
    }

    /// Completes a word with exactly one unknown symbol.
    pub fn complete(&self, pattern: &[Option<u8>]) -> Result<Vec<u8>, CodegenError> {
        let holes = pattern.iter().filter(|x| x.is_none()).count();
        if holes != 1 {
            return Err(CodegenError::WrongHoleCount(holes));
        }
        if pattern.len() != self.word_len() {
            return Err(CodegenError::NoCompletion);
        }
        let hole_group = pattern.iter().position(|x| x.is_none()).unwrap() / 3;
        // resolve every intact group
        let mut indices: Vec<Option<u8>> = Vec::new();
        for (i, g) in pattern.chunks(3).enumerate() {
            if i == hole_group {
                indices.push(None);
                continue;
            }
            let w = [g[0].unwrap(), g[1].unwrap(), g[2].unwrap()];
            indices.push(Some(self.group_of(i, w).ok_or(CodegenError::NoCompletion)?));
        }
        // index words consistent with the resolved groups
        let mut completions = Vec::new();
        for s in &self.spec.index_code {
            let ok = indices
                .iter()
                .zip(s)
                .all(|(have, want)| have.is_none_or(|h| h == *want));
            if !ok {
                continue;
            }
            let code = &self.spec.collections[hole_group][s[hole_group] as usize];
            let g = &pattern[hole_group * 3..hole_group * 3 + 3];
            if let Ok(w) = code.complete([g[0], g[1], g[2]]) {
                let mut full: Vec<u8> = pattern.iter().map(|x| x.unwrap_or(0)).collect();
                full[hole_group * 3..hole_group * 3 + 3].copy_from_slice(&w);
                completions.push(full);
            }
        }
        completions.sort_unstable();
        completions.dedup();
        match completions.len() {
            1 => Ok(completions.pop().unwrap()),
            _ => Err(CodegenError::NoCompletion),
        }
    }

    pub fn detect_report(&self) -> GroupedReport {
        let per_group_worst = self
            .spec
            .collections
            .iter()
            .map(|coll| {
                let mut worst = count_errors(&coll[0]);
                for c in &coll[1..] {
                    let r = count_errors(c);
                    worst.single = worst.single.max(r.single);
                    worst.transposition = worst.transposition.max(r.transposition);
                    worst.twin = worst.twin.max(r.twin);
                    worst.jump_transposition =
                        worst.jump_transposition.max(r.jump_transposition);
                    worst.jump_twin = worst.jump_twin.max(r.jump_twin);
                    worst.triple = worst.triple.max(r.triple);
                    worst.phonetic_left = worst.phonetic_left.max(r.phonetic_left);
                    worst.phonetic_right = worst.phonetic_right.max(r.phonetic_right);
                    worst.cyclic = worst.cyclic.max(r.cyclic);
                    worst.permutation = worst.permutation.max(r.permutation);
                }
                worst
            })
            .collect();
        let reversal = self.groups() == 2
            && self
                .spec
                .index_code
                .iter()
                .all(|s| !self.spec.index_code.contains(&vec![s[1], s[0]]));
        GroupedReport {
            per_group_worst,
            index_single_error_detecting: index_min_distance_two(&self.spec.index_code),
            group_reversal_detecting: reversal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupedPreset {
    /// 8 decimal codes of 99 words (999 removed), cyclic index of size 8.
    Base10,
    /// 24 base-26 codes of 675 words (zzz removed), cyclic index of size 24.
    Base26,
    /// As Base26, but the two component codes of the first index pair keep
    /// the shared word zzz.
    Base26Zzz,
    /// The 27 CRT base-36 codes, cyclic index of size 27.
    Base36Crt,
    /// 35 restricted mod-37 codes (K = 1..=35), cyclic index of size 35.
    Base37,
}

impl GroupedPreset {
    pub const ALL: [GroupedPreset; 5] = [
        GroupedPreset::Base10,
        GroupedPreset::Base26,
        GroupedPreset::Base26Zzz,
        GroupedPreset::Base36Crt,
        GroupedPreset::Base37,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupedPreset::Base10 => "base10",
            GroupedPreset::Base26 => "base26",
            GroupedPreset::Base26Zzz => "base26+zzz",
            GroupedPreset::Base36Crt => "base36crt",
            GroupedPreset::Base37 => "base37",
        }
    }

    pub fn parse(s: &str) -> Option<GroupedPreset> {
        GroupedPreset::ALL.into_iter().find(|p| p.name() == s)
    }

    /// A note on how the published figure for this preset relates to the
    /// exact count, where the two disagree.
    pub fn published_note(self) -> Option<&'static str> {
        match self {
            GroupedPreset::Base26Zzz => Some(
                "published figure 10936351 assumes zzz retained in the two component codes \
                 of one index pair; retaining it in code 0 of both collections instead \
                 would give 10936350",
            ),
            GroupedPreset::Base36Crt => Some(
                "published figure 40310784 equals 1296^2 x 24 but the preset has k=27 \
                 codes (the printed 75% bound matches k=27)",
            ),
            GroupedPreset::Base37 => Some(
                "published figure 58786560 equals 36^4 x 35, which ignores the removal \
                 of words containing the 37th symbol",
            ),
            _ => None,
        }
    }
}

pub fn grouped_preset(preset: GroupedPreset) -> GroupedCode {
    let spec = match preset {
        GroupedPreset::Base10 => {
            let fam = family_seq(FamilyName::Seq38);
            let codes: Vec<WordCode> = fam
                .codes
                .iter()
                .map(|t| WordCode::from_table(t).without([9, 9, 9]))
                .collect();
            GroupedSpec {
                name: "base10".into(),
                collections: vec![codes.clone(), codes],
                index_code: cyclic_index(8),
            }
        }
        GroupedPreset::Base26 | GroupedPreset::Base26Zzz => {
            let zzz = [25, 25, 25];
            let full: Vec<WordCode> =
                base26_family().iter().map(WordCode::from_table).collect();
            let stripped: Vec<WordCode> = full.iter().map(|c| c.without(zzz)).collect();
            let (mut c0, mut c1) = (stripped.clone(), stripped);
            if preset == GroupedPreset::Base26Zzz {
                // index pair (0, 1) keeps zzz on both sides
                c0[0] = full[0].clone();
                c1[1] = full[1].clone();
            }
            GroupedSpec {
                name: preset.name().into(),
                collections: vec![c0, c1],
                index_code: cyclic_index(24),
            }
        }
        GroupedPreset::Base36Crt => {
            let codes: Vec<WordCode> = (1..=3)
                .flat_map(|i| (0..9).map(move |j| (i, j)))
                .map(|(i, j)| WordCode::from_table(&crt36(i, j).unwrap()))
                .collect();
            GroupedSpec {
                name: "base36crt".into(),
                collections: vec![codes.clone(), codes],
                index_code: cyclic_index(27),
            }
        }
        GroupedPreset::Base37 => {
            let codes: Vec<WordCode> = (1..=35).map(|k| mod37_code(k).unwrap()).collect();
            GroupedSpec {
                name: "base37".into(),
                collections: vec![codes.clone(), codes],
                index_code: cyclic_index(35),
            }
        }
    };
    grouped(spec).expect("presets satisfy the grouped invariants")
}
