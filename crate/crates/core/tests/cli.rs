//! CLI behavior: CSV shapes, label rows, end-entry views, exit codes and the
//! grouped selectors.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_l3code"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn gen_base10_is_golden() {
    let (out, _, code) = run(&["gen", "--base", "10"]);
    assert_eq!(code, 0);
    assert_eq!(out, include_str!("golden/gen_base10.csv"));
    assert!(!out.ends_with('\n'));
    assert_eq!(out.lines().count(), 10);
    assert_eq!(out.lines().next().unwrap(), "3,8,1,2,4,9,7,0,5,6");
}

#[test]
fn gen_labels_and_corner_markers() {
    let (out, _, _) = run(&["gen", "--base", "26", "--labels"]);
    assert!(out.starts_with("m,a,b,c,"));
    let second = out.lines().nth(1).unwrap();
    assert!(second.starts_with("a,b,n,u,h,z,"));
    // labeled output is (Q+1) x (Q+1)
    assert_eq!(out.lines().count(), 27);
    assert!(out.lines().all(|l| l.split(',').count() == 27));
    let (out, _, _) = run(&["gen", "--base", "10", "--labels", "--entries", "end"]);
    assert!(out.starts_with("e,0,1,2,"));
    assert_eq!(out.lines().count(), 11);
    // unlabeled output is Q x Q
    let (out, _, _) = run(&["gen", "--base", "4"]);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.split(',').count() == 4));
    assert_eq!(out.lines().next().unwrap(), "1,2,0,3");
}

#[test]
fn gen_end_view_inverts_the_middle_view() {
    let (mid, _, _) = run(&["gen", "--base", "10"]);
    let (end, _, _) = run(&["gen", "--base", "10", "--entries", "end"]);
    let parse = |s: &str| -> Vec<Vec<u8>> {
        s.lines()
            .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
            .collect()
    };
    let (m, t) = (parse(&mid), parse(&end));
    for b in 0..10 {
        for e in 0..10 {
            assert_eq!(t[b][m[b][e] as usize], e as u8);
        }
    }
}

#[test]
fn gen_numeric_rendering() {
    let (alnum, _, _) = run(&["gen", "--base", "26"]);
    let (numeric, _, _) = run(&["gen", "--base", "26", "--numeric"]);
    assert!(alnum.lines().next().unwrap().starts_with("b,n,u,"));
    assert!(numeric.lines().next().unwrap().starts_with("1,13,20,"));
}

#[test]
fn gen_base37_marks_missing_cells() {
    let (out, _, code) = run(&["gen", "--base", "37"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 36);
    // exactly 35 of the 1296 cells have no codeword (middle would be the
    // excluded 37th symbol)
    let dashes = out.matches('-').count();
    assert_eq!(dashes, 35);
}

#[test]
fn gen_rejects_unsupported_parameters() {
    let (_, err, code) = run(&["gen", "--base", "9", "--P", "7"]);
    assert_eq!(code, 2);
    assert!(err.contains("--P"));
    let (_, _, code) = run(&["gen", "--base", "10", "--B", "4", "--E", "4"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["gen", "--base", "12"]);
    assert_eq!(code, 2);
}

#[test]
fn check_mod37_words() {
    let (out, _, code) = run(&["check", "010", "--base", "37"]);
    assert_eq!((out.trim(), code), ("valid", 0));
    // 10b + m + 26e = 1 fails for 000
    let (out, _, code) = run(&["check", "000", "--base", "37"]);
    assert_eq!((out.trim(), code), ("invalid", 1));
    let (_, _, code) = run(&["check", "0!0", "--base", "37"]);
    assert_eq!(code, 2);
}

#[test]
fn check_grouped_words() {
    // sample word of the base10 preset is valid
    let (sample, _, _) = run(&["grouped", "base10"]);
    let sample_word = sample
        .lines()
        .find_map(|l| l.strip_prefix("sample "))
        .unwrap()
        .to_string();
    let (out, _, code) = run(&["check", &sample_word, "--grouped", "base10"]);
    assert_eq!((out.trim(), code), ("valid", 0));
    // 999 was removed from every component code
    let (out, _, code) = run(&["check", "999999", "--grouped", "base10"]);
    assert!(out.starts_with("invalid"));
    assert_eq!(code, 1);
    let (_, _, code) = run(&["check", "123", "--grouped", "base10"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["check", "999999", "--grouped", "base10", "--base", "10"]);
    assert_eq!(code, 2);
}

#[test]
fn solve_grouped_and_failures() {
    let (sample, _, _) = run(&["grouped", "base10"]);
    let sample_word = sample
        .lines()
        .find_map(|l| l.strip_prefix("sample "))
        .unwrap()
        .to_string();
    let mut holed = sample_word.clone().into_bytes();
    holed[5] = b'?';
    let holed = String::from_utf8(holed).unwrap();
    let (out, _, code) = run(&["solve", &holed, "--grouped", "base10"]);
    assert_eq!((out.trim(), code), (sample_word.as_str(), 0));
    // two holes is a usage error
    let (_, _, code) = run(&["solve", "0??", "--base", "10"]);
    assert_eq!(code, 2);
    // a completion whose unique end symbol would be the removed 37th symbol
    // does not exist; the end view marks those (b, m) cells with '-'
    let (end, _, _) = run(&["gen", "--base", "37", "--entries", "end"]);
    let alpha36 = "0123456789abcdefghijklmnopqrstuvwxyz";
    let (row, dash_col) = end
        .lines()
        .enumerate()
        .find_map(|(b, l)| {
            l.split(',').position(|c| c == "-").map(|m| (b, m))
        })
        .expect("one unsolvable cell per row");
    let word = format!(
        "{}{}?",
        alpha36.as_bytes()[row] as char,
        alpha36.as_bytes()[dash_col] as char
    );
    let (_, _, code) = run(&["solve", &word, "--base", "37"]);
    assert_eq!(code, 1);
    // and a solvable cell completes fine
    let (out, _, code) = run(&["solve", "00?", "--base", "37"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim().len(), 3);
}

#[test]
fn analyze_witnesses_listing() {
    let (out, _, code) = run(&[
        "analyze",
        "--builtin",
        "verhoeff-block-design",
        "--witnesses",
        "phonetic-right",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("witness phonetic_right 213 230"));
    let (_, _, code) = run(&["analyze", "--builtin", "no-such-table"]);
    assert_eq!(code, 2);
    let (out, _, code) = run(&["analyze", "--small", "5:1"]);
    assert_eq!(code, 0);
    assert!(out.contains("jump_transposition 10"));
}

#[test]
fn analyze_reference_only_rows() {
    let (out, _, code) = run(&["analyze", "--builtin", "damm"]);
    assert_eq!(code, 0);
    assert!(out.contains("no defining table"));
    assert!(out.contains("cyclic             12"));
    let (out, _, code) = run(&["analyze", "--builtin", "pg81"]);
    assert_eq!(code, 0);
    assert!(out.contains("cyclic             5"));
}

#[test]
fn analyze_scope_lines() {
    let (out, _, _) = run(&["analyze", "--base", "26"]);
    assert!(out.contains("phonetic_scope     not-applicable"));
    let (out, _, _) = run(&["analyze", "--base", "36"]);
    assert!(out.contains("phonetic_scope     digits-only"));
    let (out, _, _) = run(&["analyze", "--base", "10"]);
    assert!(out.contains("phonetic_scope     all-symbols"));
}

#[test]
fn family_and_grouped_unknown_names() {
    let (_, _, code) = run(&["family", "seq99"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["grouped", "base99"]);
    assert_eq!(code, 2);
}

#[test]
fn family_base26_report() {
    let (out, _, code) = run(&["family", "base26"]);
    assert_eq!(code, 0);
    assert!(out.contains("codes 24"));
    assert!(out.contains("disjoint almost"));
    assert!(out.contains("shared zzz"));
    assert!(out.contains("all_detect_all_types true"));
}

#[test]
fn grouped_reports_have_bounds() {
    let (out, _, _) = run(&["grouped", "base26"]);
    assert!(out.contains("count 10935000"));
    assert!(out.contains("bound_pct 92.0"));
    let (out, _, _) = run(&["grouped", "base26+zzz"]);
    assert!(out.contains("count 10936351"));
    let (out, _, _) = run(&["grouped", "base37"]);
    assert!(out.contains("count 55654235"));
    assert!(out.contains("group_reversal_detecting true"));
}
