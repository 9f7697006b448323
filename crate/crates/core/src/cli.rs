//! Command-line front end: CSV table generation, codeword checking and
//! completion, error analysis, family and grouped reports.
//!
//! Exit codes: 0 success / valid word, 1 invalid word or no completion,
//! 2 usage or parameter error.

use crate::analysis::{
    count_errors, find_error_pairs, is_check_table, ErrorCategory, ErrorReport, PhoneticScope,
};
use crate::catalog::{self, Alphabet, SmallCodeKind};
use crate::codegen::{base_code, insert_extend, solve_missing, CodeTable, WordCode};
use crate::composite::{
    self, family_seq, grouped_preset, mod37_entry, FamilyName, GroupedCode, GroupedPreset,
};
use crate::galois::Field;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "l3code",
    about = "Length-3 check digit codes: generation, checking, and exhaustive error analysis",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a code table as CSV on stdout
    Gen(GenArgs),
    /// Check a word for code membership
    Check(CheckArgs),
    /// Complete a word containing one '?'
    Solve(SolveArgs),
    /// Count undetected error pairs per category
    Analyze(AnalyzeArgs),
    /// Report an almost-disjoint code family
    Family {
        /// seq38, seq47 or base26
        name: String,
    },
    /// Report a grouped tag code preset
    Grouped {
        /// base10, base26, base26+zzz, base36crt or base37
        preset: String,
    },
}

#[derive(Args, Clone)]
struct CodeParamsArgs {
    /// Checksum constant K (for base 36 this is the GF(9) constant)
    #[arg(long = "K", value_name = "K")]
    k: Option<u8>,
    /// Transversal offset P (bases 10 and 26 only)
    #[arg(long = "P", value_name = "P")]
    p: Option<u8>,
    /// Begin weight B
    #[arg(long = "B", value_name = "B")]
    b: Option<u8>,
    /// End weight E
    #[arg(long = "E", value_name = "E")]
    e: Option<u8>,
    /// GF(4) constant (bases 4 and 36)
    #[arg(long = "K4", value_name = "K4")]
    k4: Option<u8>,
    /// Require triple-word freedom when validating parameters
    #[arg(long)]
    triple_free: bool,
}

#[derive(Args)]
struct GenArgs {
    /// Alphabet size: 4, 9, 10, 25, 26, 36 or 37
    #[arg(long)]
    base: u8,
    #[command(flatten)]
    params: CodeParamsArgs,
    /// Prefix a label row and column
    #[arg(long)]
    labels: bool,
    /// Which value each cell holds
    #[arg(long, value_enum, default_value_t = EntryView::Middle)]
    entries: EntryView,
    /// Emit integer indices instead of characters
    #[arg(long)]
    numeric: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EntryView {
    /// cell (b, e) holds the middle symbol
    Middle,
    /// cell (b, m) holds the end symbol
    End,
}

#[derive(Args)]
struct SelectorArgs {
    /// Alphabet size: 4, 9, 10, 25, 26, 36 or 37
    #[arg(long)]
    base: Option<u8>,
    #[command(flatten)]
    params: CodeParamsArgs,
    /// Built-in table: verhoeff-block-design, verhoeff-irregular, base6,
    /// base26, ean3, luhn3
    #[arg(long)]
    builtin: Option<String>,
    /// Small-base code as base:variant, e.g. 5:1
    #[arg(long)]
    small: Option<String>,
}

#[derive(Args)]
struct CheckArgs {
    word: String,
    #[command(flatten)]
    selector: SelectorArgs,
    /// Grouped preset to check against
    #[arg(long)]
    grouped: Option<String>,
}

#[derive(Args)]
struct SolveArgs {
    word: String,
    #[command(flatten)]
    selector: SelectorArgs,
    /// Grouped preset to complete against
    #[arg(long)]
    grouped: Option<String>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    selector: SelectorArgs,
    /// Also list the undetected pairs of one category
    #[arg(long, value_name = "CATEGORY")]
    witnesses: Option<String>,
}

/// Parses arguments and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn execute(cmd: Command) -> Result<i32, String> {
    match cmd {
        Command::Gen(args) => cmd_gen(args),
        Command::Check(args) => cmd_check(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Family { name } => cmd_family(&name),
        Command::Grouped { preset } => cmd_grouped(&preset),
    }
}

/// A code selected on the command line.
enum Selected {
    Table { table: CodeTable, description: String },
    Words { code: WordCode, description: String },
}

impl Selected {
    fn q(&self) -> u8 {
        match self {
            Selected::Table { table, .. } => table.q(),
            Selected::Words { code, .. } => code.q(),
        }
    }

    fn description(&self) -> &str {
        match self {
            Selected::Table { description, .. } | Selected::Words { description, .. } => {
                description
            }
        }
    }

    fn word_code(&self) -> WordCode {
        match self {
            Selected::Table { table, .. } => WordCode::from_table(table),
            Selected::Words { code, .. } => code.clone(),
        }
    }
}

fn reject(opt: Option<u8>, name: &str, base: u8) -> Result<(), String> {
    if opt.is_some() {
        return Err(format!("--{name} does not apply to base {base}"));
    }
    Ok(())
}

fn build_params_table(base: u8, a: &CodeParamsArgs) -> Result<CodeTable, String> {
    let table = match base {
        4 => {
            reject(a.k, "K", 4)?;
            reject(a.p, "P", 4)?;
            reject(a.b, "B", 4)?;
            reject(a.e, "E", 4)?;
            catalog::base4_code(a.k4.unwrap_or(1)).map_err(|e| e.to_string())?
        }
        9 | 10 => {
            reject(a.k4, "K4", base)?;
            let f = Field::new(9).unwrap();
            let (b, e, k) = (a.b.unwrap_or(4), a.e.unwrap_or(7), a.k.unwrap_or(3));
            check_element(&f, b, "B")?;
            check_element(&f, e, "E")?;
            check_element(&f, k, "K")?;
            let violations = crate::codegen::validate_params(&f, b, e, k, a.triple_free);
            if !violations.is_empty() {
                return Err(format!(
                    "invalid parameters: {}",
                    violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
                ));
            }
            let t = base_code(&f, b, e, k).map_err(|e| e.to_string())?;
            if base == 9 {
                reject(a.p, "P", 9)?;
                t
            } else {
                let p = a.p.unwrap_or(7);
                check_element(&f, p, "P")?;
                insert_extend(&t, p).map_err(|e| e.to_string())?
            }
        }
        25 | 26 => {
            reject(a.k4, "K4", base)?;
            let f = Field::new(25).unwrap();
            let (b, e, k) = (a.b.unwrap_or(11), a.e.unwrap_or(18), a.k.unwrap_or(1));
            check_element(&f, b, "B")?;
            check_element(&f, e, "E")?;
            check_element(&f, k, "K")?;
            let violations = crate::codegen::validate_params(&f, b, e, k, a.triple_free);
            if !violations.is_empty() {
                return Err(format!(
                    "invalid parameters: {}",
                    violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
                ));
            }
            let t = base_code(&f, b, e, k).map_err(|e| e.to_string())?;
            if base == 25 {
                reject(a.p, "P", 25)?;
                t
            } else {
                let p = a.p.unwrap_or(1);
                check_element(&f, p, "P")?;
                insert_extend(&t, p).map_err(|e| e.to_string())?
            }
        }
        36 => {
            reject(a.p, "P", 36)?;
            reject(a.b, "B", 36)?;
            reject(a.e, "E", 36)?;
            composite::crt36(a.k4.unwrap_or(1), a.k.unwrap_or(1)).map_err(|e| e.to_string())?
        }
        _ => return Err(format!("base {base} has no full table; supported: 4 9 10 25 26 36")),
    };
    Ok(table)
}

fn check_element(f: &Field, x: u8, name: &str) -> Result<(), String> {
    if x >= f.q() {
        return Err(format!("{name}={x} is out of range for GF({})", f.q()));
    }
    Ok(())
}

fn table_description(base: u8, t: &CodeTable) -> String {
    match t.params() {
        Some(p) => format!("base {base} ({p})"),
        None => format!("base {base}"),
    }
}

fn resolve_selector(sel: &SelectorArgs) -> Result<Selected, String> {
    let picked = [sel.base.is_some(), sel.builtin.is_some(), sel.small.is_some()]
        .iter()
        .filter(|&&x| x)
        .count();
    if picked != 1 {
        return Err("select exactly one of --base, --builtin, --small".into());
    }
    if let Some(name) = &sel.builtin {
        let b = catalog::builtin(name).map_err(|e| e.to_string())?;
        return Ok(Selected::Table { table: b.table, description: format!("builtin {name}") });
    }
    if let Some(smallspec) = &sel.small {
        let (base, variant) = smallspec
            .split_once(':')
            .and_then(|(b, v)| Some((b.parse().ok()?, v.parse().ok()?)))
            .ok_or("--small expects base:variant, e.g. 5:1")?;
        let sc = catalog::small_code(base, variant).map_err(|e| e.to_string())?;
        let description = format!("base {} variant {} ({})", sc.base, sc.variant, sc.source);
        return Ok(match sc.code {
            SmallCodeKind::Table(table) => Selected::Table { table, description },
            SmallCodeKind::Words(code) => Selected::Words { code, description },
        });
    }
    let base = sel.base.unwrap();
    if base == 37 {
        let k = sel.params.k.unwrap_or(1);
        let code = composite::mod37_code(k).map_err(|e| e.to_string())?;
        return Ok(Selected::Words {
            code,
            description: format!("mod-37 code (B=10 E=26 K={k}, symbol 36 removed)"),
        });
    }
    let table = build_params_table(base, &sel.params)?;
    let description = table_description(base, &table);
    Ok(Selected::Table { table, description })
}

// --- gen ---

fn cmd_gen(args: GenArgs) -> Result<i32, String> {
    let csv = if args.base == 37 {
        gen_mod37_csv(&args)?
    } else {
        let table = build_params_table(args.base, &args.params)?;
        gen_table_csv(&table, &args)
    };
    print!("{csv}");
    Ok(0)
}

fn render_cell(alphabet: &Alphabet, numeric: bool, s: u8) -> String {
    if numeric {
        s.to_string()
    } else {
        alphabet.render(s).to_string()
    }
}

fn csv_join(q: u8, labels: bool, corner: char, cell: impl Fn(u8, u8) -> String, label: impl Fn(u8) -> String) -> String {
    let mut rows: Vec<String> = Vec::new();
    if labels {
        let mut head = vec![corner.to_string()];
        head.extend((0..q).map(&label));
        rows.push(head.join(","));
    }
    for r in 0..q {
        let mut row = Vec::new();
        if labels {
            row.push(label(r));
        }
        row.extend((0..q).map(|c| cell(r, c)));
        rows.push(row.join(","));
    }
    rows.join("\n")
}

fn gen_table_csv(table: &CodeTable, args: &GenArgs) -> String {
    let alphabet = Alphabet::new(table.alphabet());
    let q = table.q();
    let label = |s: u8| render_cell(&alphabet, args.numeric, s);
    match args.entries {
        EntryView::Middle => csv_join(q, args.labels, 'm', |b, e| label(table.entry(b, e)), label),
        EntryView::End => {
            // cell (b, m) holds the end symbol completing the codeword
            let te = |b: u8, m: u8| {
                (0..q)
                    .find(|&e| table.entry(b, e) == m)
                    .map(&label)
                    .unwrap_or_else(|| "-".to_string())
            };
            csv_join(q, args.labels, 'e', te, label)
        }
    }
}

fn gen_mod37_csv(args: &GenArgs) -> Result<String, String> {
    let a = &args.params;
    reject(a.p, "P", 37)?;
    reject(a.b, "B", 37)?;
    reject(a.e, "E", 37)?;
    reject(a.k4, "K4", 37)?;
    let k = a.k.unwrap_or(1);
    if k == 0 || k > 36 {
        return Err(format!("K must be in 1..=36, got {k}"));
    }
    let alphabet = Alphabet::for_q(36);
    let cell_render = |s: u8| {
        if s > 35 {
            "-".to_string()
        } else {
            render_cell(&alphabet, args.numeric, s)
        }
    };
    let label = |s: u8| render_cell(&alphabet, args.numeric, s);
    Ok(match args.entries {
        EntryView::Middle => {
            csv_join(36, args.labels, 'm', |b, e| cell_render(mod37_entry(k, b, e)), label)
        }
        EntryView::End => {
            // 26e = K - 10b - m (mod 37), inverse of 26 is 10
            let te = |b: u8, m: u8| {
                let e = (10 * (k as i32 - 10 * b as i32 - m as i32)).rem_euclid(37) as u8;
                cell_render(e)
            };
            csv_join(36, args.labels, 'e', te, label)
        }
    })
}

// --- check ---

fn selector_in_use(sel: &SelectorArgs) -> bool {
    sel.base.is_some() || sel.builtin.is_some() || sel.small.is_some()
}

fn cmd_check(args: CheckArgs) -> Result<i32, String> {
    if let Some(preset) = &args.grouped {
        if selector_in_use(&args.selector) {
            return Err("--grouped cannot be combined with --base/--builtin/--small".into());
        }
        return check_grouped(&args.word, preset);
    }
    let sel = resolve_selector(&args.selector)?;
    let alphabet = Alphabet::for_q(sel.q());
    let symbols = alphabet
        .parse_word(&args.word)
        .ok_or_else(|| format!("word {:?} is not over the {}-symbol alphabet", args.word, sel.q()))?;
    if symbols.len() != 3 {
        return Err(format!("expected a 3-symbol word, got {} symbols", symbols.len()));
    }
    if symbols.iter().any(|&s| s >= sel.q()) {
        return Err(format!("word {:?} is not over the {}-symbol alphabet", args.word, sel.q()));
    }
    let w = [symbols[0], symbols[1], symbols[2]];
    let member = match &sel {
        Selected::Table { table, .. } => table.contains(w),
        Selected::Words { code, .. } => code.contains(w),
    };
    if member {
        println!("valid");
        Ok(0)
    } else {
        println!("invalid");
        Ok(1)
    }
}

fn check_grouped(word: &str, preset: &str) -> Result<i32, String> {
    let g = lookup_preset(preset)?;
    let alphabet = Alphabet::for_q(g.q());
    let symbols = alphabet
        .parse_word(word)
        .filter(|s| s.iter().all(|&x| x < g.q()))
        .ok_or_else(|| format!("word {word:?} is not over the {}-symbol alphabet", g.q()))?;
    if symbols.len() != g.word_len() {
        return Err(format!(
            "expected {} symbols for preset {preset}, got {}",
            g.word_len(),
            symbols.len()
        ));
    }
    match g.split_indices(&symbols) {
        None => {
            for (i, chunk) in symbols.chunks(3).enumerate() {
                if g.group_of(i, [chunk[0], chunk[1], chunk[2]]).is_none() {
                    println!("invalid (group {i} is in no component code)");
                    return Ok(1);
                }
            }
            unreachable!("split_indices failed but every group resolved");
        }
        Some(indices) => {
            if g.contains(&symbols) {
                println!("valid");
                Ok(0)
            } else {
                println!("invalid (group labels {indices:?} not in the index code)");
                Ok(1)
            }
        }
    }
}

// --- solve ---

fn cmd_solve(args: SolveArgs) -> Result<i32, String> {
    let holes = args.word.chars().filter(|&c| c == '?').count();
    if holes != 1 {
        return Err(format!("expected exactly one '?', got {holes}"));
    }
    let parse_pattern = |q: u8, word: &str| -> Result<Vec<Option<u8>>, String> {
        let alphabet = Alphabet::for_q(q);
        word.chars()
            .map(|c| {
                if c == '?' {
                    Ok(None)
                } else {
                    alphabet
                        .parse(c)
                        .filter(|&s| s < q)
                        .map(Some)
                        .ok_or_else(|| format!("symbol {c:?} is not in the alphabet"))
                }
            })
            .collect()
    };
    if let Some(preset) = &args.grouped {
        if selector_in_use(&args.selector) {
            return Err("--grouped cannot be combined with --base/--builtin/--small".into());
        }
        let g = lookup_preset(preset)?;
        let pattern = parse_pattern(g.q(), &args.word)?;
        if pattern.len() != g.word_len() {
            return Err(format!("expected {} symbols, got {}", g.word_len(), pattern.len()));
        }
        return match g.complete(&pattern) {
            Ok(w) => {
                println!("{}", Alphabet::for_q(g.q()).render_word(&w));
                Ok(0)
            }
            Err(e) => {
                eprintln!("{e}");
                Ok(1)
            }
        };
    }
    let sel = resolve_selector(&args.selector)?;
    let pattern = parse_pattern(sel.q(), &args.word)?;
    if pattern.len() != 3 {
        return Err(format!("expected a 3-symbol word, got {}", pattern.len()));
    }
    let pattern = [pattern[0], pattern[1], pattern[2]];
    let solved = match &sel {
        Selected::Table { table, .. } => solve_missing(table, pattern),
        Selected::Words { code, .. } => code.complete(pattern),
    };
    match solved {
        Ok(w) => {
            println!("{}", Alphabet::for_q(sel.q()).render_word(&w));
            Ok(0)
        }
        Err(e) => {
            eprintln!("{e}");
            Ok(1)
        }
    }
}

// --- analyze ---

fn scope_name(scope: PhoneticScope) -> &'static str {
    match scope {
        PhoneticScope::AllSymbols => "all-symbols",
        PhoneticScope::DigitsOnly => "digits-only",
        PhoneticScope::NotApplicable => "not-applicable",
    }
}

fn print_report(r: &ErrorReport) {
    println!("single             {}", r.single);
    println!("transposition      {}", r.transposition);
    println!("twin               {}", r.twin);
    println!("jump_transposition {}", r.jump_transposition);
    println!("jump_twin          {}", r.jump_twin);
    println!("triple             {}", r.triple);
    println!("phonetic_left      {}", r.phonetic_left);
    println!("phonetic_right     {}", r.phonetic_right);
    println!("cyclic             {}", r.cyclic);
    println!("permutation        {}", r.permutation);
    println!("phonetic_scope     {}", scope_name(r.phonetic_scope));
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<i32, String> {
    // the comparison rows without defining tables are available as
    // reference output only
    if let Some(name) = &args.selector.builtin {
        if let Some((_, row)) =
            catalog::expected::REFERENCE_ONLY.iter().find(|(n, _)| n == name)
        {
            println!("# reference counts for {name} (no defining table available)");
            for (label, value) in [
                "single",
                "transposition",
                "twin",
                "jump_transposition",
                "jump_twin",
                "triple",
                "phonetic",
                "cyclic",
            ]
            .iter()
            .zip(row)
            {
                println!("{label:<18} {value}");
            }
            return Ok(0);
        }
    }
    let sel = resolve_selector(&args.selector)?;
    if let Selected::Table { table, .. } = &sel {
        if let Err(v) = is_check_table(table) {
            eprintln!("warning: not a check table: {v}");
        }
    }
    let code = sel.word_code();
    println!("# {}", sel.description());
    println!("words              {}", code.len());
    let r = count_errors(&code);
    print_report(&r);
    if let Some(cat) = &args.witnesses {
        let category = ErrorCategory::parse(cat)
            .ok_or_else(|| format!("unknown category {cat:?}"))?;
        let alphabet = Alphabet::for_q(code.q());
        for (w1, w2) in find_error_pairs(&code, category) {
            println!(
                "witness {} {} {}",
                category.name(),
                alphabet.render_word(&w1),
                alphabet.render_word(&w2)
            );
        }
    }
    Ok(0)
}

// --- family ---

fn cmd_family(name: &str) -> Result<i32, String> {
    match name {
        "seq38" | "seq47" => {
            let fam = family_seq(FamilyName::parse(name).unwrap());
            println!("# family {} (B={} E={})", fam.name, fam.b, fam.e);
            let mut total = 0;
            let mut codes = Vec::new();
            for table in &fam.codes {
                let p = table.params().unwrap();
                let r = count_errors(&WordCode::from_table(table));
                total += r.phonetic_total();
                println!(
                    "code K={} P={} R={} C={} P_L={} P_R={} cyclic={}",
                    p.k,
                    p.p.unwrap(),
                    p.r().unwrap(),
                    p.c().unwrap(),
                    r.phonetic_left,
                    r.phonetic_right,
                    r.cyclic
                );
                codes.push(WordCode::from_table(table));
            }
            let refs: Vec<&WordCode> = codes.iter().collect();
            print_disjointness(&refs, 10);
            println!("phonetic_total {total}");
            Ok(0)
        }
        "base26" => {
            let fam = composite::base26_family();
            println!("# family base26 (B=11 E=18, K=P over nonzero GF(25))");
            let alphabet = Alphabet::for_q(26);
            let mut clean = true;
            let mut codes = Vec::new();
            for table in &fam {
                let p = table.params().unwrap();
                let r = count_errors(&WordCode::from_table(table));
                clean &= r.detects_all_types();
                println!(
                    "code K=P={} ({}) detects_all={} triples={}",
                    p.k,
                    alphabet.render(p.k),
                    r.detects_all_types(),
                    table.triple_words().len()
                );
                codes.push(WordCode::from_table(table));
            }
            let refs: Vec<&WordCode> = codes.iter().collect();
            print_disjointness(&refs, 26);
            println!("all_detect_all_types {clean}");
            Ok(0)
        }
        _ => Err(format!("unknown family {name:?} (expected seq38, seq47 or base26)")),
    }
}

fn print_disjointness(codes: &[&WordCode], q: u8) {
    use crate::analysis::Disjointness;
    println!("codes {}", codes.len());
    match crate::analysis::disjointness(codes) {
        Disjointness::StrictlyDisjoint => println!("disjoint strict"),
        Disjointness::AlmostDisjoint(w) => {
            println!("disjoint almost");
            println!("shared {}", Alphabet::for_q(q).render_word(&w));
        }
        Disjointness::Overlapping { pair, shared } => {
            println!("disjoint no (codes {} and {} share {} words)", pair.0, pair.1, shared.len());
        }
    }
}

// --- grouped ---

fn lookup_preset(name: &str) -> Result<GroupedCode, String> {
    let preset = GroupedPreset::parse(name).ok_or_else(|| {
        format!(
            "unknown preset {name:?} (expected one of {})",
            GroupedPreset::ALL.map(|p| p.name()).join(", ")
        )
    })?;
    Ok(grouped_preset(preset))
}

fn cmd_grouped(name: &str) -> Result<i32, String> {
    let preset = GroupedPreset::parse(name).ok_or_else(|| {
        format!(
            "unknown preset {name:?} (expected one of {})",
            GroupedPreset::ALL.map(|p| p.name()).join(", ")
        )
    })?;
    let g = grouped_preset(preset);
    let alphabet = Alphabet::for_q(g.q());
    println!("# grouped preset {}", g.name());
    println!("groups {}", g.groups());
    println!("codes_per_group {}", g.codes_per_group());
    println!("alphabet {}", g.q());
    let count = g.count();
    println!("count {count}");
    let bound = (g.q() as u64).pow(g.word_len() as u32 - 1);
    println!("bound {bound}");
    println!("bound_pct {:.1}", 100.0 * count as f64 / bound as f64);
    println!("sample {}", alphabet.render_word(&g.sample_word()));
    let report = g.detect_report();
    println!("index_single_error_detecting {}", report.index_single_error_detecting);
    println!("group_reversal_detecting {}", report.group_reversal_detecting);
    for (i, worst) in report.per_group_worst.iter().enumerate() {
        println!(
            "group {i} worst: single={} transposition={} twin={} jump_transposition={} \
             jump_twin={} triple={} phonetic={} cyclic={} permutation={}",
            worst.single,
            worst.transposition,
            worst.twin,
            worst.jump_transposition,
            worst.jump_twin,
            worst.triple,
            worst.phonetic_total(),
            worst.cyclic,
            worst.permutation
        );
    }
    if let Some(note) = preset.published_note() {
        println!("note {note}");
    }
    Ok(0)
}
