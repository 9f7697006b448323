//! Length-3 check digit codes over small alphabets.
//!
//! Builds the linear codes B*b + m + E*e = K over GF(4), GF(9), GF(25) and
//! prime fields, extends them by transversal insertion (base 9 to 10, base 25
//! to 26), composes them into almost-disjoint families, direct products,
//! CRT-flattened base-36 codes, restricted mod-37 codes and grouped tag
//! codes, and verifies every error-detection claim by exhaustive enumeration
//! of the error patterns: single, transposition, twin, jump transposition,
//! jump twin, triple, phonetic, cyclic and permutation confusions.
//!
//! The `l3code` binary exposes table generation (CSV), codeword checking and
//! completion, error analysis, and family/grouped reports.

pub mod analysis;
pub mod catalog;
pub mod cli;
pub mod codegen;
pub mod composite;
pub mod galois;

pub use analysis::{count_errors, count_phonetic, count_table_errors, ErrorReport};
pub use codegen::{base_code, insert_extend, CodeTable, Word, WordCode};
pub use galois::Field;
