//! `coxkit` — command-line front end.

use std::collections::HashMap;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use coxkit::crysto;
use coxkit::diagram::{self, parse_diagram, ComponentType};
use coxkit::logic::{self, FiniteGroupModel};
use coxkit::permgrp::{closure, Perm, PermGroup, Presentation};
use coxkit::profinite::{self, Fingerprint, SmallGroupCatalog};
use coxkit::report::VerificationReport;
use coxkit::titsrep::{self, Word};

#[derive(Parser)]
#[command(
    name = "coxkit",
    version,
    about = "Exact computations in Coxeter, crystallographic and amalgamated groups"
)]
struct Cli {
    /// Output style: human text or line-oriented records
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for all fuzz corpora
    #[arg(long, global = true, default_value_t = 0xC0C0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify the components of a Coxeter diagram
    Classify { file: String },
    /// Commuting set and odd-component free rank at one generator
    Centralizer {
        file: String,
        #[arg(long)]
        gen: usize,
    },
    /// All vertex subsets generating finite special subgroups
    SpecialSubgroups { file: String },
    /// Decide equality of two words in the reflection representation
    WordEq {
        file: String,
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
    },
    /// Order of a word, up to a bound
    Order {
        file: String,
        #[arg(long)]
        w: String,
        #[arg(long, default_value_t = 1000)]
        bound: usize,
    },
    /// Count homomorphisms and epimorphisms from a presentation
    HomCount {
        #[arg(long)]
        presentation: String,
        /// catalogue id (like `24.4`) or a permutation-group file
        #[arg(long)]
        target: String,
    },
    /// Hom/epi counts into every catalogue group up to the bound
    Fingerprint {
        #[arg(long)]
        presentation: String,
        #[arg(long, default_value_t = 31)]
        bound: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// Compare two fingerprint files
    CompareFingerprints { f1: String, f2: String },
    /// Emit one of the named formulas
    EmitFormula {
        #[arg(long, value_enum)]
        kind: FormulaKind,
        /// chi: the exponent m
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        presentation: Option<String>,
        /// finite-g / gamma: subgroup word file
        #[arg(long)]
        subgroups: Option<String>,
        /// gamma: `|`-separated target words, e.g. "1 2 | 2"
        #[arg(long)]
        words: Option<String>,
        /// gamma: formula file for theta
        #[arg(long)]
        theta: Option<String>,
        /// gamma: `|`-separated generator words for the preserved subgroup
        #[arg(long)]
        hom_gens: Option<String>,
        /// gamma: arity of the free tuple (defaults to the word count)
        #[arg(long)]
        z_arity: Option<usize>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Evaluate a formula over a finite model
    Eval {
        #[arg(long)]
        formula: String,
        /// catalogue id or permutation-group file
        #[arg(long)]
        model: String,
        /// free-variable assignment `x=(1 2); y=()`
        #[arg(long)]
        assign: Option<String>,
        /// named constants `u=(1 2 3); v=()`
        #[arg(long = "const")]
        constants: Option<String>,
    },
    /// Reproduce one verification section
    VerifyPaper {
        #[arg(long)]
        section: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormulaKind {
    Chi,
    FiniteG,
    Gamma,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn budget() -> u64 {
    std::env::var("COXKIT_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(logic::DEFAULT_BUDGET)
}

fn read(path: &str) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

fn run(cli: &Cli) -> Result<bool, String> {
    match &cli.cmd {
        Cmd::Classify { file } => {
            let m = parse_diagram(&read(file)?).map_err(|e| e.to_string())?;
            let r = diagram::classify(&m);
            for (verts, t) in &r.components {
                let verts1: Vec<String> = verts.iter().map(|v| (v + 1).to_string()).collect();
                match cli.format {
                    Format::Text => {
                        let pretty = match t {
                            ComponentType::Spherical(f) => format!("Spherical({f})"),
                            ComponentType::Affine(f) => format!("Affine({f})"),
                            ComponentType::Other => "Other".to_string(),
                        };
                        println!("component {{{}}}: {pretty}", verts1.join(" "));
                    }
                    Format::Records => {
                        let tag = match t {
                            ComponentType::Spherical(f) => format!("Spherical {f}"),
                            ComponentType::Affine(f) => format!("Affine {f}"),
                            ComponentType::Other => "Other".to_string(),
                        };
                        println!("component {} : {tag}", verts1.join(" "));
                    }
                }
            }
            println!("global {}", r.global);
            Ok(true)
        }
        Cmd::Centralizer { file, gen } => {
            let m = parse_diagram(&read(file)?).map_err(|e| e.to_string())?;
            if *gen == 0 || *gen > m.n() {
                return Err(format!("generator must be in 1..={}", m.n()));
            }
            let r = diagram::centralizer_rank(&m, gen - 1);
            let fmt_set = |s: &[usize]| {
                s.iter()
                    .map(|v| (v + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            match cli.format {
                Format::Text => {
                    println!("generator s{gen}");
                    println!("commuting set {{{}}}", fmt_set(&r.commuting));
                    println!("odd component {{{}}}", fmt_set(&r.odd_component));
                    println!("edges {} vertices {} rank {}", r.edges, r.vertices, r.rank);
                }
                Format::Records => {
                    println!("generator {gen}");
                    println!("commuting {}", fmt_set(&r.commuting));
                    println!("odd-component {}", fmt_set(&r.odd_component));
                    println!("e {}", r.edges);
                    println!("v {}", r.vertices);
                    println!("k {}", r.rank);
                }
            }
            Ok(true)
        }
        Cmd::SpecialSubgroups { file } => {
            let m = parse_diagram(&read(file)?).map_err(|e| e.to_string())?;
            let subs = diagram::special_spherical_subgroups(&m);
            for s in &subs {
                let verts: Vec<String> = s.iter().map(|v| (v + 1).to_string()).collect();
                match cli.format {
                    Format::Text => println!("{{{}}}", verts.join(" ")),
                    Format::Records => println!("subset {}", verts.join(" ")),
                }
            }
            if cli.format == Format::Text {
                println!("total {}", subs.len());
            }
            Ok(true)
        }
        Cmd::WordEq { file, w1, w2 } => {
            let m = parse_diagram(&read(file)?).map_err(|e| e.to_string())?;
            let rep = titsrep::build_rep(&m).map_err(|e| e.to_string())?;
            let w1 = Word::parse(w1, m.n()).map_err(|e| e.to_string())?;
            let w2 = Word::parse(w2, m.n()).map_err(|e| e.to_string())?;
            let eq = titsrep::words_equal(&rep, &w1, &w2).map_err(|e| e.to_string())?;
            println!("{}", if eq { "equal" } else { "different" });
            Ok(true)
        }
        Cmd::Order { file, w, bound } => {
            let m = parse_diagram(&read(file)?).map_err(|e| e.to_string())?;
            let rep = titsrep::build_rep(&m).map_err(|e| e.to_string())?;
            let w = Word::parse(w, m.n()).map_err(|e| e.to_string())?;
            match titsrep::element_order(&rep, &w, *bound).map_err(|e| e.to_string())? {
                titsrep::OrderResult::Finite(k) => println!("order {k}"),
                titsrep::OrderResult::ExceedsBound => println!("order exceeds bound {bound}"),
            }
            Ok(true)
        }
        Cmd::HomCount {
            presentation,
            target,
        } => {
            let p = Presentation::parse(&read(presentation)?).map_err(|e| e.to_string())?;
            let group = resolve_group(target)?;
            let (homs, epis) = coxkit::permgrp::hom_count(&p, &group).map_err(|e| e.to_string())?;
            println!("homs {homs}");
            println!("epis {epis}");
            Ok(true)
        }
        Cmd::Fingerprint {
            presentation,
            bound,
            out,
        } => {
            let p = Presentation::parse(&read(presentation)?).map_err(|e| e.to_string())?;
            let f = profinite::fingerprint(&p, *bound).map_err(|e| e.to_string())?;
            let text = f.to_string();
            match out {
                Some(path) => fs::write(path, &text).map_err(|e| format!("{path}: {e}"))?,
                None => print!("{text}"),
            }
            Ok(true)
        }
        Cmd::CompareFingerprints { f1, f2 } => {
            let a = Fingerprint::parse(&read(f1)?).map_err(|e| e.to_string())?;
            let b = Fingerprint::parse(&read(f2)?).map_err(|e| e.to_string())?;
            match profinite::compare(&a, &b).map_err(|e| e.to_string())? {
                profinite::CompareResult::Equal => {
                    println!("equal");
                }
                profinite::CompareResult::FirstDifference { id, left, right } => {
                    println!(
                        "first difference at {id}: homs {} vs {}, epis {} vs {}",
                        left.0, right.0, left.1, right.1
                    );
                }
            }
            Ok(true)
        }
        Cmd::EmitFormula {
            kind,
            m,
            presentation,
            subgroups,
            words,
            theta,
            hom_gens,
            z_arity,
            out,
        } => {
            let formula = match kind {
                FormulaKind::Chi => {
                    let m = m.ok_or("chi needs --m")?;
                    logic::emit_chi(m)
                }
                FormulaKind::FiniteG => {
                    let p = Presentation::parse(&read(
                        presentation
                            .as_deref()
                            .ok_or("finite-g needs --presentation")?,
                    )?)
                    .map_err(|e| e.to_string())?;
                    let subs = parse_subgroup_file(&read(
                        subgroups.as_deref().ok_or("finite-g needs --subgroups")?,
                    )?)?;
                    logic::emit_finite_g(&p, &subs).map_err(|e| e.to_string())?
                }
                FormulaKind::Gamma => {
                    let p = Presentation::parse(&read(
                        presentation
                            .as_deref()
                            .ok_or("gamma needs --presentation")?,
                    )?)
                    .map_err(|e| e.to_string())?;
                    let w = parse_word_list(words.as_deref().ok_or("gamma needs --words")?)?;
                    let th = logic::parse_formula(&read(
                        theta.as_deref().ok_or("gamma needs --theta")?,
                    )?)
                    .map_err(|e| e.to_string())?;
                    let subs = parse_subgroup_file(&read(
                        subgroups.as_deref().ok_or("gamma needs --subgroups")?,
                    )?)?;
                    let hg = match hom_gens {
                        Some(t) => parse_word_list(t)?,
                        None => Vec::new(),
                    };
                    let arity = z_arity.unwrap_or(w.len());
                    logic::emit_gamma(&p, &w, arity, &th, &subs, &hg).map_err(|e| e.to_string())?
                }
            };
            let text = format!("{formula}\n");
            match out {
                Some(path) => fs::write(path, &text).map_err(|e| format!("{path}: {e}"))?,
                None => print!("{text}"),
            }
            Ok(true)
        }
        Cmd::Eval {
            formula,
            model,
            assign,
            constants,
        } => {
            let f = logic::parse_formula(&read(formula)?).map_err(|e| e.to_string())?;
            let group = resolve_group(model)?;
            let degree = group.degree();
            let mut model = FiniteGroupModel::new(group);
            if let Some(consts) = constants {
                for (name, value) in parse_bindings(consts, degree)? {
                    model = model.with_constant(&name, value);
                }
            }
            let mut env = HashMap::new();
            if let Some(assign) = assign {
                for (name, value) in parse_bindings(assign, degree)? {
                    env.insert(name, value);
                }
            }
            let holds = logic::evaluate(&f, &model, &env, budget()).map_err(|e| e.to_string())?;
            println!("{}", if holds { "true" } else { "false" });
            Ok(true)
        }
        Cmd::VerifyPaper { section } => {
            let report: VerificationReport = match section.as_str() {
                "a2tilde" => crysto::verify_a2_phi(),
                "amalgam" => coxkit::amalgam::verify_section_3_5(cli.seed),
                "wlog" => crysto::verify_wlog(cli.seed, 50),
                "classification" => diagram::verify_classification(),
                "brink" => diagram::verify_brink(),
                other => {
                    return Err(format!(
                        "unknown section `{other}`; expected a2tilde, amalgam, wlog, classification or brink"
                    ))
                }
            };
            println!("{report}");
            Ok(report.passed())
        }
    }
}

/// A catalogue id like `24.4`, or a permutation-group file with a
/// `degree N` line and one `gen (cycles)` line per generator.
fn resolve_group(target: &str) -> Result<PermGroup, String> {
    if let Some(entry) = SmallGroupCatalog::get().by_id(target) {
        return PermGroup::new(entry.group.degree(), entry.group.gens().to_vec())
            .map_err(|e| e.to_string());
    }
    let text = read(target)
        .map_err(|e| format!("`{target}` is neither a catalogue id nor a readable file ({e})"))?;
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (lno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("degree") {
            degree = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| format!("line {}: bad degree", lno + 1))?,
            );
        } else if let Some(rest) = line.strip_prefix("gen") {
            let d = degree.ok_or(format!("line {}: `gen` before `degree`", lno + 1))?;
            gens.push(Perm::parse(d, rest.trim()).map_err(|e| format!("line {}: {e}", lno + 1))?);
        } else {
            return Err(format!("line {}: unknown directive", lno + 1));
        }
    }
    let degree = degree.ok_or("missing `degree N` line")?;
    let bound = std::env::var("COXKIT_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(coxkit::permgrp::DEFAULT_BOUND);
    closure(degree, gens, bound).map_err(|e| e.to_string())
}

/// `x=(1 2); y=()` bindings with cycle-notation values.
fn parse_bindings(text: &str, degree: usize) -> Result<Vec<(String, Perm)>, String> {
    let mut out = Vec::new();
    for part in text.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (name, value) = part
            .split_once('=')
            .ok_or(format!("binding `{part}` needs the form name=(cycles)"))?;
        let perm = Perm::parse(degree, value.trim()).map_err(|e| e.to_string())?;
        out.push((name.trim().to_string(), perm));
    }
    Ok(out)
}

/// `|`-separated words of signed 1-based letters, e.g. `1 2 | -2 1`.
fn parse_word_list(text: &str) -> Result<Vec<Vec<i32>>, String> {
    text.split('|')
        .map(|w| {
            w.split_whitespace()
                .map(|t| t.parse::<i32>().map_err(|_| format!("bad letter `{t}`")))
                .collect()
        })
        .collect()
}

/// Subgroup file: one `subgroup` line per subgroup, words separated by `;`,
/// `e` denoting the identity word.
fn parse_subgroup_file(text: &str) -> Result<Vec<Vec<Vec<i32>>>, String> {
    let mut out = Vec::new();
    for (lno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let rest = line
            .strip_prefix("subgroup")
            .ok_or(format!("line {}: expected `subgroup ...`", lno + 1))?;
        let mut words = Vec::new();
        for w in rest.split(';') {
            let w = w.trim();
            if w == "e" || w.is_empty() {
                words.push(Vec::new());
            } else {
                words.push(
                    w.split_whitespace()
                        .map(|t| {
                            t.parse::<i32>()
                                .map_err(|_| format!("line {}: bad letter `{t}`", lno + 1))
                        })
                        .collect::<Result<Vec<i32>, String>>()?,
                );
            }
        }
        out.push(words);
    }
    Ok(out)
}
