//! Construction of the length-3 codes: the linear base codes M_q(b,e) over a
//! field, parameter validation, the insertion extension that grows base q to
//! q+1, parameter selection for permutation-error-free codes, and the weight
//! sequences for longer word lengths.

use crate::galois::Field;
use std::fmt;
use thiserror::Error;

/// A length-3 word over symbols `0..Q`, as (begin, middle, end).
pub type Word = [u8; 3];

pub fn rotate_left(w: Word) -> Word {
    [w[1], w[2], w[0]]
}

/// How symbols of a code render as characters. Decides both the CSV output
/// and whether phonetic patterns have a numeric reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphabetKind {
    /// '0'..'9'; every symbol is a digit.
    Numeric,
    /// 'a'..'z'; no digits at all, phonetic confusions have no numeric reading.
    Letters,
    /// '0'..'9' then 'a'..'z'; only symbols below 10 read as digits.
    Alphanumeric,
}

impl AlphabetKind {
    pub fn for_q(q: u8) -> AlphabetKind {
        match q {
            0..=10 => AlphabetKind::Numeric,
            11..=26 => AlphabetKind::Letters,
            _ => AlphabetKind::Alphanumeric,
        }
    }
}

/// Where a table came from; solve_missing picks its strategy off this.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableKind {
    /// Linear base code straight from the field equation.
    Base,
    /// Base code extended by one row/column via a transversal.
    Extended,
    /// Transcribed reference table.
    Builtin(&'static str),
    /// Product, relabeling or other composition.
    Composed(String),
}

/// Parameters (B, E, K) of a base code, plus the transversal offset P once the
/// code has been extended. R and C are the derived new-row/new-column offsets.
#[derive(Debug, Clone, PartialEq)]
pub struct CodeParams {
    pub field: Field,
    pub b: u8,
    pub e: u8,
    pub k: u8,
    pub p: Option<u8>,
}

impl CodeParams {
    /// New-row offset R = K - B*P.
    pub fn r(&self) -> Option<u8> {
        let p = self.p?;
        Some(self.field.sub(self.k, self.field.mul(self.b, p)))
    }

    /// New-column offset C = K + E*P.
    pub fn c(&self) -> Option<u8> {
        let p = self.p?;
        Some(self.field.add(self.k, self.field.mul(self.e, p)))
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B={} E={} K={}", self.b, self.e, self.k)?;
        if let Some(p) = self.p {
            write!(f, " P={p}")?;
        }
        Ok(())
    }
}

/// A violated condition from the parameter restrictions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamViolation {
    /// B = 0 or E = 0: single errors.
    BZero,
    EZero,
    /// B+1, E+1 or B+E is 0: (jump) twin errors.
    BPlusOneZero,
    EPlusOneZero,
    BPlusEZero,
    /// B-1, E-1 or B-E is 0: (jump) transposition errors.
    BMinusOneZero,
    EMinusOneZero,
    BMinusEZero,
    /// B+1+E != 0: triple words cannot be ruled out.
    TripleSumNonzero,
    /// K = 0: the all-zero word would be a triple word.
    KZero,
    /// P = 0: the transversal would hit the main diagonal.
    PZero,
    /// R = 0: twin errors at the start of extended words.
    RZero,
    /// C = 0: twin errors at the end of extended words.
    CZero,
    /// Insertion needs characteristic != 2.
    CharacteristicTwo,
}

impl fmt::Display for ParamViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ParamViolation::BZero => "B = 0",
            ParamViolation::EZero => "E = 0",
            ParamViolation::BPlusOneZero => "B + 1 = 0",
            ParamViolation::EPlusOneZero => "E + 1 = 0",
            ParamViolation::BPlusEZero => "B + E = 0",
            ParamViolation::BMinusOneZero => "B - 1 = 0",
            ParamViolation::EMinusOneZero => "E - 1 = 0",
            ParamViolation::BMinusEZero => "B - E = 0",
            ParamViolation::TripleSumNonzero => "B + 1 + E != 0",
            ParamViolation::KZero => "K = 0",
            ParamViolation::PZero => "P = 0",
            ParamViolation::RZero => "R = K - B*P = 0",
            ParamViolation::CZero => "C = K + E*P = 0",
            ParamViolation::CharacteristicTwo => "field characteristic is 2",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum CodegenError {
    #[error("invalid parameters: {}", format_violations(.0))]
    InvalidParams(Vec<ParamViolation>),
    #[error("table has no construction parameters")]
    MissingParams,
    #[error("operation needs a base code, got an extended or composed table")]
    NotBaseCode,
    #[error("word has {0} unknowns, expected exactly one")]
    WrongHoleCount(usize),
    #[error("no completion exists")]
    NoCompletion,
    #[error(transparent)]
    Field(#[from] crate::galois::FieldError),
}

fn format_violations(vs: &[ParamViolation]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

/// Checks the weight restrictions. Returns every violated condition; the empty
/// list means the parameters give a code detecting all types except possibly
/// cyclic errors. `triple_free` additionally demands B+1+E = 0 and K != 0.
pub fn validate_params(
    field: &Field,
    b: u8,
    e: u8,
    k: u8,
    triple_free: bool,
) -> Vec<ParamViolation> {
    let mut out = Vec::new();
    let one = 1u8;
    if b == 0 {
        out.push(ParamViolation::BZero);
    }
    if e == 0 {
        out.push(ParamViolation::EZero);
    }
    if field.add(b, one) == 0 {
        out.push(ParamViolation::BPlusOneZero);
    }
    if field.add(e, one) == 0 {
        out.push(ParamViolation::EPlusOneZero);
    }
    if field.add(b, e) == 0 {
        out.push(ParamViolation::BPlusEZero);
    }
    if field.sub(b, one) == 0 {
        out.push(ParamViolation::BMinusOneZero);
    }
    if field.sub(e, one) == 0 {
        out.push(ParamViolation::EMinusOneZero);
    }
    if field.sub(b, e) == 0 {
        out.push(ParamViolation::BMinusEZero);
    }
    if triple_free {
        if field.add(field.add(b, one), e) != 0 {
            out.push(ParamViolation::TripleSumNonzero);
        }
        if k == 0 {
            out.push(ParamViolation::KZero);
        }
    }
    out
}

/// All (B, E) pairs passing the restrictions together with B+1+E = 0, sorted.
pub fn enumerate_be(field: &Field) -> Vec<(u8, u8)> {
    let mut out = Vec::new();
    for b in 1..field.q() {
        for e in 1..field.q() {
            if validate_params(field, b, e, 1, true).is_empty() {
                out.push((b, e));
            }
        }
    }
    out
}

/// Picks (B, E) = (alpha, alpha^2) for a cube root of unity alpha, the choice
/// that kills cyclic errors when 3 | q-1.
pub fn alpha_params(field: &Field) -> Result<(u8, u8), CodegenError> {
    Ok(field.cube_roots_of_unity()?)
}

/// An immutable Q x Q code table; the entry at (b, e) is the middle symbol m,
/// so the codewords are exactly { (b, entry(b,e), e) }.
#[derive(Debug, Clone, PartialEq)]
pub struct CodeTable {
    q: u8,
    entries: Vec<u8>,
    kind: TableKind,
    params: Option<CodeParams>,
    alphabet: AlphabetKind,
}

impl CodeTable {
    pub fn from_entries(q: u8, entries: Vec<u8>, kind: TableKind) -> CodeTable {
        assert_eq!(entries.len(), q as usize * q as usize);
        let alphabet = AlphabetKind::for_q(q);
        CodeTable { q, entries, kind, params: None, alphabet }
    }

    pub fn with_alphabet(mut self, alphabet: AlphabetKind) -> CodeTable {
        self.alphabet = alphabet;
        self
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn kind(&self) -> &TableKind {
        &self.kind
    }

    pub fn params(&self) -> Option<&CodeParams> {
        self.params.as_ref()
    }

    pub fn alphabet(&self) -> AlphabetKind {
        self.alphabet
    }

    pub fn entry(&self, b: u8, e: u8) -> u8 {
        self.entries[b as usize * self.q as usize + e as usize]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.entries.chunks(self.q as usize)
    }

    pub fn contains(&self, w: Word) -> bool {
        w[0] < self.q && w[2] < self.q && self.entry(w[0], w[2]) == w[1]
    }

    /// All Q^2 codewords in row-major (b, e) order.
    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.q).flat_map(move |b| (0..self.q).map(move |e| [b, self.entry(b, e), e]))
    }

    /// Codewords of the form (a, a, a).
    pub fn triple_words(&self) -> Vec<Word> {
        (0..self.q).filter(|&a| self.entry(a, a) == a).map(|a| [a, a, a]).collect()
    }
}

/// An explicit codeword set over symbols `0..Q`, for codes that are not full
/// tables (restricted mod-37 codes, word lists with a codeword removed).
#[derive(Debug, Clone, PartialEq)]
pub struct WordCode {
    q: u8,
    words: Vec<Word>,
    member: Vec<bool>,
    alphabet: AlphabetKind,
}

impl WordCode {
    pub fn from_words(q: u8, mut words: Vec<Word>) -> WordCode {
        words.sort_unstable();
        words.dedup();
        let n = q as usize;
        let mut member = vec![false; n * n * n];
        for w in &words {
            assert!(w[0] < q && w[1] < q && w[2] < q);
            member[word_index(q, *w)] = true;
        }
        let alphabet = AlphabetKind::for_q(q);
        WordCode { q, words, member, alphabet }
    }

    pub fn from_table(t: &CodeTable) -> WordCode {
        WordCode::from_words(t.q(), t.words().collect()).with_alphabet(t.alphabet())
    }

    pub fn with_alphabet(mut self, alphabet: AlphabetKind) -> WordCode {
        self.alphabet = alphabet;
        self
    }

    /// The same code minus one word.
    pub fn without(&self, w: Word) -> WordCode {
        let words = self.words.iter().copied().filter(|&x| x != w).collect();
        WordCode::from_words(self.q, words).with_alphabet(self.alphabet)
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn alphabet(&self) -> AlphabetKind {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: Word) -> bool {
        w[0] < self.q && w[1] < self.q && w[2] < self.q && self.member[word_index(self.q, w)]
    }

    /// Codewords in sorted order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn triple_words(&self) -> Vec<Word> {
        (0..self.q).map(|a| [a, a, a]).filter(|&w| self.contains(w)).collect()
    }

    /// Completes a word with exactly one unknown position, if possible.
    pub fn complete(&self, pattern: [Option<u8>; 3]) -> Result<Word, CodegenError> {
        let holes = pattern.iter().filter(|x| x.is_none()).count();
        if holes != 1 {
            return Err(CodegenError::WrongHoleCount(holes));
        }
        let mut found = None;
        for &w in &self.words {
            if pattern.iter().zip(w).all(|(p, s)| p.is_none_or(|v| v == s)) {
                if found.is_some() {
                    return Err(CodegenError::NoCompletion);
                }
                found = Some(w);
            }
        }
        found.ok_or(CodegenError::NoCompletion)
    }
}

fn word_index(q: u8, w: Word) -> usize {
    let n = q as usize;
    (w[0] as usize * n + w[1] as usize) * n + w[2] as usize
}

/// Builds the base code with entries M_q(b,e) = K - (B*b + E*e).
pub fn base_code(field: &Field, b: u8, e: u8, k: u8) -> Result<CodeTable, CodegenError> {
    let violations = validate_params(field, b, e, k, false);
    if !violations.is_empty() {
        return Err(CodegenError::InvalidParams(violations));
    }
    let q = field.q();
    let mut entries = Vec::with_capacity(q as usize * q as usize);
    for bb in 0..q {
        for ee in 0..q {
            entries.push(field.sub(k, field.add(field.mul(b, bb), field.mul(e, ee))));
        }
    }
    let mut t = CodeTable::from_entries(q, entries, TableKind::Base);
    t.params = Some(CodeParams { field: field.clone(), b, e, k, p: None });
    Ok(t)
}

/// Extends a base code to alphabet size q+1 by projecting the transversal
/// b - e = P onto a new row and column. The new symbol is the index q.
///
/// Requires characteristic != 2, B+1+E = 0, P != 0 and nonzero R and C.
pub fn insert_extend(base: &CodeTable, p: u8) -> Result<CodeTable, CodegenError> {
    let params = base.params().ok_or(CodegenError::MissingParams)?;
    if base.kind() != &TableKind::Base {
        return Err(CodegenError::NotBaseCode);
    }
    let f = &params.field;
    let mut violations = Vec::new();
    if f.characteristic() == 2 {
        violations.push(ParamViolation::CharacteristicTwo);
    }
    if p == 0 {
        violations.push(ParamViolation::PZero);
    }
    if f.add(f.add(params.b, 1), params.e) != 0 {
        violations.push(ParamViolation::TripleSumNonzero);
    }
    let ext = CodeParams { p: Some(p), ..params.clone() };
    if !violations.contains(&ParamViolation::PZero) {
        if ext.r() == Some(0) {
            violations.push(ParamViolation::RZero);
        }
        if ext.c() == Some(0) {
            violations.push(ParamViolation::CZero);
        }
    }
    if !violations.is_empty() {
        return Err(CodegenError::InvalidParams(violations));
    }

    let q = base.q();
    let qn = q + 1;
    let (r, c) = (ext.r().unwrap(), ext.c().unwrap());
    let mut entries = Vec::with_capacity(qn as usize * qn as usize);
    for b in 0..qn {
        for e in 0..qn {
            let m = if b == q && e == q {
                q
            } else if b == q {
                f.add(r, e)
            } else if e == q {
                f.add(c, b)
            } else if f.sub(b, e) == p {
                q
            } else {
                base.entry(b, e)
            };
            entries.push(m);
        }
    }
    let mut t = CodeTable::from_entries(qn, entries, TableKind::Extended);
    t.params = Some(ext);
    Ok(t)
}

/// True when the insertion with offset P adds no cyclic errors:
/// K != (B-1)*P and K != (1-E)*P.
pub fn cyclic_safe(params: &CodeParams) -> bool {
    let f = &params.field;
    let p = params.p.expect("cyclic_safe needs the insertion offset P");
    params.k != f.mul(f.sub(params.b, 1), p) && params.k != f.mul(f.sub(1, params.e), p)
}

/// Field tag for the published weight recurrences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightField {
    Gf4,
    Gf9,
    Gf37,
}

/// First n weights for longer codewords: GF(4) starts at alpha and multiplies
/// by beta, GF(9) starts at 4 and adds 6, GF(37) starts at 10 and multiplies
/// by 26.
pub fn weight_sequence(tag: WeightField, n: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(n);
    match tag {
        WeightField::Gf4 => {
            let f = Field::new(4).unwrap();
            let mut a = 2;
            for _ in 0..n {
                out.push(a);
                a = f.mul(a, 3);
            }
        }
        WeightField::Gf9 => {
            let f = Field::new(9).unwrap();
            let mut a = 4;
            for _ in 0..n {
                out.push(a);
                a = f.add(a, 6);
            }
        }
        WeightField::Gf37 => {
            let f = Field::new(37).unwrap();
            let mut a = 10;
            for _ in 0..n {
                out.push(a);
                a = f.mul(a, 26);
            }
        }
    }
    out
}

/// Fills in the single unknown position of a word. Base codes invert the
/// defining equation directly; other tables scan the row or column, which the
/// latin-square property makes unique.
pub fn solve_missing(table: &CodeTable, pattern: [Option<u8>; 3]) -> Result<Word, CodegenError> {
    let holes = pattern.iter().filter(|x| x.is_none()).count();
    if holes != 1 {
        return Err(CodegenError::WrongHoleCount(holes));
    }
    for &s in pattern.iter().flatten() {
        if s >= table.q() {
            return Err(CodegenError::NoCompletion);
        }
    }
    let word = match pattern {
        [Some(b), None, Some(e)] => [b, table.entry(b, e), e],
        [Some(b), Some(m), None] => {
            let e = if let (TableKind::Base, Some(p)) = (table.kind(), table.params()) {
                let f = &p.field;
                f.div(f.sub(f.sub(p.k, f.mul(p.b, b)), m), p.e)
            } else {
                (0..table.q())
                    .find(|&e| table.entry(b, e) == m)
                    .ok_or(CodegenError::NoCompletion)?
            };
            [b, m, e]
        }
        [None, Some(m), Some(e)] => {
            let b = if let (TableKind::Base, Some(p)) = (table.kind(), table.params()) {
                let f = &p.field;
                f.div(f.sub(f.sub(p.k, f.mul(p.e, e)), m), p.b)
            } else {
                (0..table.q())
                    .find(|&b| table.entry(b, e) == m)
                    .ok_or(CodegenError::NoCompletion)?
            };
            [b, m, e]
        }
        _ => unreachable!(),
    };
    if table.contains(word) {
        Ok(word)
    } else {
        Err(CodegenError::NoCompletion)
    }
}

/// The reversal of a code: codeword b m e becomes e m b, i.e. the transpose
/// of the table. For a code with parameters [B,E,K,P] the result carries the
/// predicted parameters [E,B,K,-P].
pub fn reverse_code(table: &CodeTable) -> Result<CodeTable, CodegenError> {
    let params = table.params().ok_or(CodegenError::MissingParams)?.clone();
    let q = table.q();
    let mut entries = Vec::with_capacity(q as usize * q as usize);
    for b in 0..q {
        for e in 0..q {
            entries.push(table.entry(e, b));
        }
    }
    let f = params.field.clone();
    let mut t = CodeTable::from_entries(q, entries, table.kind().clone());
    t.params = Some(CodeParams {
        b: params.e,
        e: params.b,
        k: params.k,
        p: params.p.map(|p| f.neg(p)),
        field: f,
    });
    t.alphabet = table.alphabet();
    Ok(t)
}

/// Relabels a code by the involution N(x) = 1 - x on all three positions
/// (the inserted symbol, if any, is fixed). Exchanges the digits 0 and 1 and
/// carries the predicted parameters [B,E,-K,-P].
pub fn relabel_n(table: &CodeTable) -> Result<CodeTable, CodegenError> {
    let params = table.params().ok_or(CodegenError::MissingParams)?.clone();
    let f = params.field.clone();
    let q = table.q();
    let n = |x: u8| if x >= f.q() { x } else { f.sub(1, x) };
    let mut entries = Vec::with_capacity(q as usize * q as usize);
    for b in 0..q {
        for e in 0..q {
            entries.push(n(table.entry(n(b), n(e))));
        }
    }
    let mut t = CodeTable::from_entries(q, entries, table.kind().clone());
    t.params = Some(CodeParams {
        b: params.b,
        e: params.e,
        k: f.neg(params.k),
        p: params.p.map(|p| f.neg(p)),
        field: f,
    });
    t.alphabet = table.alphabet();
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> Field {
        Field::new(9).unwrap()
    }

    #[test]
    fn published_parameter_sets_validate() {
        let f = gf9();
        assert!(validate_params(&f, 4, 7, 3, true).is_empty());
        assert!(validate_params(&f, 3, 8, 5, true).is_empty());
        assert_eq!(
            validate_params(&f, 4, 4, 3, false),
            vec![ParamViolation::BMinusEZero]
        );
    }

    #[test]
    fn k_zero_valid_unless_triple_free() {
        let f = gf9();
        assert!(validate_params(&f, 4, 7, 0, false).is_empty());
        assert_eq!(validate_params(&f, 4, 7, 0, true), vec![ParamViolation::KZero]);
    }

    #[test]
    fn be_enumeration_matches_published_lists() {
        let f = gf9();
        assert_eq!(
            enumerate_be(&f),
            vec![(3, 8), (4, 7), (5, 6), (6, 5), (7, 4), (8, 3)]
        );
        let f4 = Field::new(4).unwrap();
        assert_eq!(enumerate_be(&f4), vec![(2, 3), (3, 2)]);
        let f3 = Field::new(3).unwrap();
        assert!(enumerate_be(&f3).is_empty());
    }

    #[test]
    fn base_code_published_entries() {
        let t = base_code(&gf9(), 4, 7, 3).unwrap();
        assert_eq!(t.entry(0, 0), 3);
        assert_eq!(t.entry(8, 1), 5);
        let t0 = base_code(&gf9(), 4, 7, 0).unwrap();
        assert_eq!(t0.entry(0, 0), 0);
    }

    #[test]
    fn base_code_rejects_bad_params() {
        assert!(matches!(
            base_code(&gf9(), 4, 4, 3),
            Err(CodegenError::InvalidParams(_))
        ));
    }

    #[test]
    fn alpha_params_published_values() {
        assert_eq!(alpha_params(&Field::new(4).unwrap()).unwrap(), (2, 3));
        assert_eq!(alpha_params(&Field::new(25).unwrap()).unwrap(), (11, 18));
        assert_eq!(alpha_params(&Field::new(7).unwrap()).unwrap(), (2, 4));
        assert!(alpha_params(&gf9()).is_err());
    }

    #[test]
    fn alpha_params_satisfy_theorem_conditions() {
        for q in [4u16, 7, 25, 37] {
            let f = Field::new(q).unwrap();
            let (b, e) = alpha_params(&f).unwrap();
            assert_eq!(f.mul(b, e), 1);
            assert_eq!(f.mul(b, b), e);
            assert_eq!(f.add(f.add(b, 1), e), 0);
            assert!(validate_params(&f, b, e, 1, true).is_empty());
        }
    }

    #[test]
    fn extension_reproduces_published_row_and_column() {
        let base = base_code(&gf9(), 4, 7, 3).unwrap();
        let t = insert_extend(&base, 7).unwrap();
        assert_eq!(t.q(), 10);
        let row9: Vec<u8> = (0..9).map(|e| t.entry(9, e)).collect();
        assert_eq!(row9, vec![4, 5, 3, 7, 8, 6, 1, 2, 0]);
        let col9: Vec<u8> = (0..9).map(|b| t.entry(b, 9)).collect();
        assert_eq!(col9, vec![6, 7, 8, 0, 1, 2, 3, 4, 5]);
        assert_eq!(t.entry(9, 9), 9);
        assert_eq!(t.entry(0, 5), 9);
        assert_eq!(t.triple_words(), vec![[9, 9, 9]]);
    }

    #[test]
    fn extension_rejects_bad_offsets() {
        let base = base_code(&gf9(), 4, 7, 3).unwrap();
        assert!(matches!(
            insert_extend(&base, 0),
            Err(CodegenError::InvalidParams(v)) if v == vec![ParamViolation::PZero]
        ));
        // K = B*P makes R = 0
        let base = base_code(&gf9(), 4, 7, gf9().mul(4, 2)).unwrap();
        assert!(matches!(
            insert_extend(&base, 2),
            Err(CodegenError::InvalidParams(v)) if v.contains(&ParamViolation::RZero)
        ));
        // characteristic 2 is not insertable
        let f4 = Field::new(4).unwrap();
        let b4 = base_code(&f4, 2, 3, 1).unwrap();
        assert!(matches!(
            insert_extend(&b4, 1),
            Err(CodegenError::InvalidParams(v)) if v.contains(&ParamViolation::CharacteristicTwo)
        ));
    }

    #[test]
    fn extended_row_column_have_no_two_cycles() {
        // M(q, M(q,e)) = 2*R + e != e and likewise for the column
        let f = gf9();
        for k in 0..9 {
            for p in 1..9 {
                let base = base_code(&f, 4, 7, k).unwrap();
                let Ok(t) = insert_extend(&base, p) else { continue };
                for e in 0..9 {
                    let m = t.entry(9, e);
                    if m != 9 {
                        assert_ne!(t.entry(9, m), e);
                    }
                    let m = t.entry(e, 9);
                    if m != 9 {
                        assert_ne!(t.entry(m, 9), e);
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_safe_published_cases() {
        let f = gf9();
        let params = |k, p| CodeParams { field: f.clone(), b: 4, e: 7, k, p: Some(p) };
        assert!(cyclic_safe(&params(3, 7)));
        let bad_k = f.mul(f.sub(4, 1), 1);
        assert!(!cyclic_safe(&params(bad_k, 1)));
        let f25 = Field::new(25).unwrap();
        let p25 = CodeParams { field: f25, b: 11, e: 18, k: 1, p: Some(1) };
        assert!(cyclic_safe(&p25));
    }

    #[test]
    fn weight_sequences_match_recurrences() {
        assert_eq!(weight_sequence(WeightField::Gf9, 3), vec![4, 1, 7]);
        assert_eq!(weight_sequence(WeightField::Gf4, 4), vec![2, 1, 3, 2]);
        assert_eq!(weight_sequence(WeightField::Gf37, 3), vec![10, 1, 26]);
        assert_eq!(weight_sequence(WeightField::Gf9, 1), vec![4]);
    }

    #[test]
    fn solve_missing_three_holes() {
        let base = base_code(&gf9(), 4, 7, 3).unwrap();
        let t = insert_extend(&base, 7).unwrap();
        assert_eq!(solve_missing(&t, [Some(0), None, Some(0)]).unwrap(), [0, 3, 0]);
        assert_eq!(solve_missing(&t, [Some(0), Some(3), None]).unwrap(), [0, 3, 0]);
        assert_eq!(solve_missing(&t, [None, Some(9), Some(9)]).unwrap(), [9, 9, 9]);
        assert!(matches!(
            solve_missing(&t, [None, None, Some(1)]),
            Err(CodegenError::WrongHoleCount(2))
        ));
    }

    #[test]
    fn solve_missing_direct_inversion_agrees_with_scan() {
        let f = gf9();
        let t = base_code(&f, 3, 8, 5).unwrap();
        for b in 0..9 {
            for e in 0..9 {
                let m = t.entry(b, e);
                assert_eq!(solve_missing(&t, [Some(b), Some(m), None]).unwrap(), [b, m, e]);
                assert_eq!(solve_missing(&t, [None, Some(m), Some(e)]).unwrap(), [b, m, e]);
            }
        }
    }

    #[test]
    fn reversal_matches_predicted_parameters() {
        let f = gf9();
        let base = base_code(&f, 4, 7, 3).unwrap();
        let t = insert_extend(&base, 7).unwrap();
        let rev = reverse_code(&t).unwrap();
        let direct = insert_extend(&base_code(&f, 7, 4, 3).unwrap(), f.neg(7)).unwrap();
        assert_eq!(rev.rows().collect::<Vec<_>>(), direct.rows().collect::<Vec<_>>());
        for b in 0..10 {
            for e in 0..10 {
                assert_eq!(rev.entry(b, e), t.entry(e, b));
            }
        }
    }

    #[test]
    fn relabel_n_matches_predicted_parameters() {
        let f = gf9();
        let base = base_code(&f, 4, 7, 3).unwrap();
        let t = insert_extend(&base, 7).unwrap();
        let relabeled = relabel_n(&t).unwrap();
        let direct =
            insert_extend(&base_code(&f, 4, 7, f.neg(3)).unwrap(), f.neg(7)).unwrap();
        assert_eq!(
            relabeled.rows().collect::<Vec<_>>(),
            direct.rows().collect::<Vec<_>>()
        );
        // involution
        let twice = relabel_n(&relabeled).unwrap();
        assert_eq!(twice.rows().collect::<Vec<_>>(), t.rows().collect::<Vec<_>>());
        // exchanges the digits 0 and 1 in every codeword
        let n = |x: u8| match x {
            0 => 1,
            1 => 0,
            x => x,
        };
        for w in t.words() {
            if w.iter().all(|&s| s == 0 || s == 1 || s == 2 || s == 9) {
                assert!(relabeled.contains([n(w[0]), n(w[1]), n(w[2])]));
            }
        }
    }

    #[test]
    fn word_code_complete_and_without() {
        let base = base_code(&gf9(), 4, 7, 3).unwrap();
        let t = insert_extend(&base, 7).unwrap();
        let wc = WordCode::from_table(&t);
        assert_eq!(wc.len(), 100);
        assert_eq!(wc.complete([Some(0), None, Some(0)]).unwrap(), [0, 3, 0]);
        let without = wc.without([9, 9, 9]);
        assert_eq!(without.len(), 99);
        assert!(matches!(
            without.complete([Some(9), Some(9), None]),
            Err(CodegenError::NoCompletion)
        ));
    }
}
