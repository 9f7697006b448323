//! Exhaustive enumeration of the error taxonomy over a code, structural
//! checks (latin square, disjointness) and witness extraction.
//!
//! All counts are unordered pairs of distinct codewords realizing a pattern.
//! Cyclic errors count only rotations of words with three distinct symbols;
//! a rotation of a word with a repeated symbol is already an adjacent or jump
//! transposition and is counted there. This is the convention that reproduces
//! the published comparison table.

use crate::codegen::{rotate_left, AlphabetKind, CodeTable, Word, WordCode};
use std::collections::HashMap;
use std::fmt;

/// How the phonetic counts of a report were scoped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhoneticScope {
    /// Every symbol is a digit; the variable symbol ranges over the whole
    /// alphabet (minus 0 and 1).
    AllSymbols,
    /// Mixed alphabet; only patterns whose variable symbol renders as a digit
    /// are phonetic confusions.
    DigitsOnly,
    /// Pure-letter alphabet; no numeric reading exists. The counts are still
    /// the syntactic pattern counts but should not be read as phonetic errors.
    NotApplicable,
}

impl PhoneticScope {
    pub fn for_alphabet(kind: AlphabetKind) -> PhoneticScope {
        match kind {
            AlphabetKind::Numeric => PhoneticScope::AllSymbols,
            AlphabetKind::Letters => PhoneticScope::NotApplicable,
            AlphabetKind::Alphanumeric => PhoneticScope::DigitsOnly,
        }
    }

    fn admits(self, x: u8) -> bool {
        match self {
            PhoneticScope::DigitsOnly => (2..=9).contains(&x),
            _ => x >= 2,
        }
    }
}

/// Undetected-pair counts per error category.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ErrorReport {
    pub single: u32,
    pub transposition: u32,
    pub twin: u32,
    pub jump_transposition: u32,
    pub jump_twin: u32,
    pub triple: u32,
    pub phonetic_left: u32,
    pub phonetic_right: u32,
    pub cyclic: u32,
    pub permutation: u32,
    pub phonetic_scope: PhoneticScope,
}

impl ErrorReport {
    pub fn phonetic_applicable(&self) -> bool {
        self.phonetic_scope != PhoneticScope::NotApplicable
    }

    pub fn phonetic_total(&self) -> u32 {
        self.phonetic_left + self.phonetic_right
    }

    /// The eight counts of the published comparison table, in its row order:
    /// single, transposition, twin, jump transposition, jump twin, triple,
    /// phonetic (left + right), cyclic.
    pub fn comparison_row(&self) -> [u32; 8] {
        [
            self.single,
            self.transposition,
            self.twin,
            self.jump_transposition,
            self.jump_twin,
            self.triple,
            self.phonetic_total(),
            self.cyclic,
        ]
    }

    /// True when every count except the phonetic ones is zero.
    pub fn detects_all_types(&self) -> bool {
        self.single == 0
            && self.transposition == 0
            && self.twin == 0
            && self.jump_transposition == 0
            && self.jump_twin == 0
            && self.triple == 0
            && self.cyclic == 0
            && self.permutation == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Single,
    Transposition,
    Twin,
    JumpTransposition,
    JumpTwin,
    Triple,
    PhoneticLeft,
    PhoneticRight,
    Cyclic,
    Permutation,
}

impl ErrorCategory {
    pub const ALL: [ErrorCategory; 10] = [
        ErrorCategory::Single,
        ErrorCategory::Transposition,
        ErrorCategory::Twin,
        ErrorCategory::JumpTransposition,
        ErrorCategory::JumpTwin,
        ErrorCategory::Triple,
        ErrorCategory::PhoneticLeft,
        ErrorCategory::PhoneticRight,
        ErrorCategory::Cyclic,
        ErrorCategory::Permutation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ErrorCategory::Single => "single",
            ErrorCategory::Transposition => "transposition",
            ErrorCategory::Twin => "twin",
            ErrorCategory::JumpTransposition => "jump_transposition",
            ErrorCategory::JumpTwin => "jump_twin",
            ErrorCategory::Triple => "triple",
            ErrorCategory::PhoneticLeft => "phonetic_left",
            ErrorCategory::PhoneticRight => "phonetic_right",
            ErrorCategory::Cyclic => "cyclic",
            ErrorCategory::Permutation => "permutation",
        }
    }

    pub fn parse(s: &str) -> Option<ErrorCategory> {
        let s = s.replace('-', "_");
        ErrorCategory::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for ErrorCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A latin-square violation: the first duplicated symbol found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatinViolation {
    Row { row: u8, symbol: u8 },
    Column { column: u8, symbol: u8 },
}

impl fmt::Display for LatinViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatinViolation::Row { row, symbol } => {
                write!(f, "symbol {symbol} repeats in row {row}")
            }
            LatinViolation::Column { column, symbol } => {
                write!(f, "symbol {symbol} repeats in column {column}")
            }
        }
    }
}

/// Checks that every row and column is a permutation of the alphabet.
pub fn is_check_table(table: &CodeTable) -> Result<(), LatinViolation> {
    let q = table.q();
    for b in 0..q {
        let mut seen = vec![false; q as usize];
        for e in 0..q {
            let m = table.entry(b, e);
            if seen[m as usize] {
                return Err(LatinViolation::Row { row: b, symbol: m });
            }
            seen[m as usize] = true;
        }
    }
    for e in 0..q {
        let mut seen = vec![false; q as usize];
        for b in 0..q {
            let m = table.entry(b, e);
            if seen[m as usize] {
                return Err(LatinViolation::Column { column: e, symbol: m });
            }
            seen[m as usize] = true;
        }
    }
    Ok(())
}

fn all_distinct(w: Word) -> bool {
    w[0] != w[1] && w[1] != w[2] && w[0] != w[2]
}

/// Counts undetected pairs for every category by brute force over the
/// codeword set.
pub fn count_errors(code: &WordCode) -> ErrorReport {
    let scope = PhoneticScope::for_alphabet(code.alphabet());
    let q = code.q();
    let mut r = ErrorReport {
        single: 0,
        transposition: 0,
        twin: 0,
        jump_transposition: 0,
        jump_twin: 0,
        triple: 0,
        phonetic_left: 0,
        phonetic_right: 0,
        cyclic: 0,
        permutation: 0,
        phonetic_scope: scope,
    };
    for &w in code.words() {
        let [a, b, c] = w;
        // single: one position changed
        for pos in 0..3 {
            for v in 0..q {
                let mut w2 = w;
                w2[pos] = v;
                if w2 > w && code.contains(w2) {
                    r.single += 1;
                }
            }
        }
        // adjacent transpositions
        if a != b {
            let w2 = [b, a, c];
            if w2 > w && code.contains(w2) {
                r.transposition += 1;
            }
        }
        if b != c {
            let w2 = [a, c, b];
            if w2 > w && code.contains(w2) {
                r.transposition += 1;
            }
        }
        // twins: a b b <-> a c c and a a c <-> b b c
        if b == c {
            for v in b + 1..q {
                if code.contains([a, v, v]) {
                    r.twin += 1;
                }
            }
        }
        if a == b {
            for v in a + 1..q {
                if code.contains([v, v, c]) {
                    r.twin += 1;
                }
            }
        }
        // jump transposition: outer symbols swapped
        if a != c {
            let w2 = [c, b, a];
            if w2 > w && code.contains(w2) {
                r.jump_transposition += 1;
            }
        }
        // jump twin: a c a <-> v c v
        if a == c {
            for v in a + 1..q {
                if code.contains([v, b, v]) {
                    r.jump_twin += 1;
                }
            }
        }
        // triple words
        if a == b && b == c {
            for v in a + 1..q {
                if code.contains([v, v, v]) {
                    r.triple += 1;
                }
            }
        }
        // phonetic left: 1 x e <-> x 0 e
        if a == 1 && scope.admits(b) && code.contains([b, 0, c]) {
            r.phonetic_left += 1;
        }
        // phonetic right: b 1 x <-> b x 0
        if b == 1 && scope.admits(c) && code.contains([a, c, 0]) {
            r.phonetic_right += 1;
        }
        // cyclic: rotations of three distinct symbols
        if all_distinct(w) && code.contains(rotate_left(w)) {
            r.cyclic += 1;
        }
    }
    // permutation: pairs with equal symbol multisets
    let mut by_multiset: HashMap<[u8; 3], u32> = HashMap::new();
    for &w in code.words() {
        let mut key = w;
        key.sort_unstable();
        *by_multiset.entry(key).or_insert(0) += 1;
    }
    for n in by_multiset.into_values() {
        r.permutation += n * (n - 1) / 2;
    }
    r
}

/// Convenience wrapper for tables.
pub fn count_table_errors(table: &CodeTable) -> ErrorReport {
    count_errors(&WordCode::from_table(table))
}

/// The phonetic counts straight from the defining cardinalities:
/// P_L = #{ e | M(M(1,e),e) = 0 } and P_R = #{ b | M(b,M(b,0)) = 1 }.
///
/// This is the independent route against the pair enumeration; no digit
/// scoping is applied.
pub fn count_phonetic(table: &CodeTable) -> (u32, u32) {
    let q = table.q();
    assert!(q >= 2, "phonetic formulas need the symbols 0 and 1");
    let mut left = 0;
    for e in 0..q {
        if table.entry(table.entry(1, e), e) == 0 {
            left += 1;
        }
    }
    let mut right = 0;
    for b in 0..q {
        if table.entry(b, table.entry(b, 0)) == 1 {
            right += 1;
        }
    }
    (left, right)
}

/// An unordered pair of confusable codewords, smaller word first.
pub type WordPair = (Word, Word);

/// Explicit witnesses for one category: unordered codeword pairs, smaller
/// word first, list sorted.
pub fn find_error_pairs(code: &WordCode, category: ErrorCategory) -> Vec<WordPair> {
    let scope = PhoneticScope::for_alphabet(code.alphabet());
    let q = code.q();
    let mut out = Vec::new();
    let mut push = |w1: Word, w2: Word| {
        out.push((w1.min(w2), w1.max(w2)));
    };
    for &w in code.words() {
        let [a, b, c] = w;
        match category {
            ErrorCategory::Single => {
                for pos in 0..3 {
                    for v in 0..q {
                        let mut w2 = w;
                        w2[pos] = v;
                        if w2 > w && code.contains(w2) {
                            push(w, w2);
                        }
                    }
                }
            }
            ErrorCategory::Transposition => {
                if a != b && [b, a, c] > w && code.contains([b, a, c]) {
                    push(w, [b, a, c]);
                }
                if b != c && [a, c, b] > w && code.contains([a, c, b]) {
                    push(w, [a, c, b]);
                }
            }
            ErrorCategory::Twin => {
                if b == c {
                    for v in b + 1..q {
                        if code.contains([a, v, v]) {
                            push(w, [a, v, v]);
                        }
                    }
                }
                if a == b {
                    for v in a + 1..q {
                        if code.contains([v, v, c]) {
                            push(w, [v, v, c]);
                        }
                    }
                }
            }
            ErrorCategory::JumpTransposition => {
                if a != c && [c, b, a] > w && code.contains([c, b, a]) {
                    push(w, [c, b, a]);
                }
            }
            ErrorCategory::JumpTwin => {
                if a == c {
                    for v in a + 1..q {
                        if code.contains([v, b, v]) {
                            push(w, [v, b, v]);
                        }
                    }
                }
            }
            ErrorCategory::Triple => {
                if a == b && b == c {
                    for v in a + 1..q {
                        if code.contains([v, v, v]) {
                            push(w, [v, v, v]);
                        }
                    }
                }
            }
            ErrorCategory::PhoneticLeft => {
                if a == 1 && scope.admits(b) && code.contains([b, 0, c]) {
                    push(w, [b, 0, c]);
                }
            }
            ErrorCategory::PhoneticRight => {
                if b == 1 && scope.admits(c) && code.contains([a, c, 0]) {
                    push(w, [a, c, 0]);
                }
            }
            ErrorCategory::Cyclic => {
                if all_distinct(w) && code.contains(rotate_left(w)) {
                    push(w, rotate_left(w));
                }
            }
            ErrorCategory::Permutation => {
                let mut key = w;
                key.sort_unstable();
                for &w2 in code.words() {
                    let mut k2 = w2;
                    k2.sort_unstable();
                    if k2 == key && w2 > w {
                        push(w, w2);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Phonetic pattern pairs with the variable symbol unrestricted (beyond
/// x not in {0,1}), regardless of the code's alphabet.
pub fn phonetic_pairs_syntactic(code: &WordCode) -> (Vec<WordPair>, Vec<WordPair>) {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &w in code.words() {
        let [a, b, c] = w;
        if a == 1 && b >= 2 && code.contains([b, 0, c]) {
            left.push((w, [b, 0, c]));
        }
        if b == 1 && c >= 2 && code.contains([a, c, 0]) {
            right.push((w, [a, c, 0]));
        }
    }
    (left, right)
}

/// How a set of codes overlaps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Disjointness {
    /// Every pairwise intersection is empty.
    StrictlyDisjoint,
    /// Every pairwise intersection is exactly the same single word.
    AlmostDisjoint(Word),
    /// Some pair intersects in more than one word, or in different words.
    Overlapping { pair: (usize, usize), shared: Vec<Word> },
}

/// Classifies pairwise intersections of two or more codes.
pub fn disjointness(codes: &[&WordCode]) -> Disjointness {
    assert!(codes.len() >= 2, "disjointness needs at least two codes");
    let mut common: Option<Vec<Word>> = None;
    for i in 0..codes.len() {
        for j in i + 1..codes.len() {
            let shared: Vec<Word> = codes[i]
                .words()
                .iter()
                .copied()
                .filter(|&w| codes[j].contains(w))
                .collect();
            match &common {
                None => common = Some(shared),
                Some(c) if *c == shared => {}
                Some(_) => {
                    return Disjointness::Overlapping { pair: (i, j), shared };
                }
            }
            if common.as_ref().unwrap().len() > 1 {
                return Disjointness::Overlapping {
                    pair: (i, j),
                    shared: common.clone().unwrap(),
                };
            }
        }
    }
    match common.unwrap().as_slice() {
        [] => Disjointness::StrictlyDisjoint,
        [w] => Disjointness::AlmostDisjoint(*w),
        _ => unreachable!(),
    }
}
