//! Command-line front end: every pipeline of the library behind one binary
//! with machine-readable output.
//!
//! JSON goes to stdout (one object per invocation, `schema_version` 1);
//! diagnostics go to stderr. `--format csv` switches the tabular commands
//! to CSV. Exit codes: 0 success, 1 verification failure (a suite reported
//! failures or a value missed `--expect`), 2 invalid input, 3 size-guard
//! rejection.

use autfilt::autgrp::{
    conjecture_probe, evaluate, gr_rank, johnson, psigma_gr2_basis_rank, verify_relations,
    AutError, GroupSpec, GroupWord, Method, SizeGuard, Suite,
};
use autfilt::cohom;
use autfilt::hall::{bc_to_word, hall_basis, witt_rank};
use autfilt::liealg::{presented_lie_ranks, LiePresentation};
use autfilt::series::Tensor;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "autfilt", version, about = "Exact invariants of free-group automorphism families")]
struct Cli {
    /// Output format for tabular commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Override the size-guard bound on the ambient rank (env: MAX_N).
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Override the size-guard bound on the degree (env: MAX_K).
    #[arg(long, global = true)]
    max_k: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Group {
    /// Partial inner automorphisms.
    In,
    /// Basis-conjugating automorphisms.
    Psigma,
    /// Upper-triangular subfamily.
    PsigmaPlus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RankMethod {
    Johnson,
    Derivation,
    Both,
    /// Rank of the standard weight-2 commutator basis (`psigma`, k = 2).
    Basis,
}

#[derive(Subcommand)]
enum Command {
    /// Witt rank of the degree-k piece of the free Lie ring on n generators.
    Witt {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        expect: Option<u64>,
    },
    /// Weight-k basic commutators on n generators, in canonical order.
    Hall {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Also emit each commutator's tensor and cross-check it against
        /// the graded class of its word (exit 1 on any mismatch).
        #[arg(long)]
        tensors: bool,
    },
    /// Run a relation verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: usize,
    },
    /// Andreadakis filtration membership of a word in named generators.
    Member {
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Johnson homomorphism of a word in named generators.
    Johnson {
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Graded rank of a family through the Johnson homomorphism.
    GrRank {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = RankMethod::Both)]
        method: RankMethod,
        #[arg(long)]
        expect: Option<usize>,
    },
    /// Graded ranks and torsion of a presented Lie ring.
    LieRanks {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k_max: usize,
    },
    /// Betti numbers of the derived exterior-algebra quotient.
    Betti {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        expect: Option<u64>,
    },
    /// Compare Betti numbers with the product formula.
    Poincare {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        n: usize,
    },
    /// Report a computed graded rank next to the conjectured closed form.
    Probe {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

enum CliError {
    /// Expected value missed or a suite reported failures.
    Verification(String),
    Input(String),
    Resource(String),
}

impl From<AutError> for CliError {
    fn from(e: AutError) -> CliError {
        match e {
            AutError::Resource { .. } => CliError::Resource(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<cohom::CohomError> for CliError {
    fn from(e: cohom::CohomError) -> CliError {
        CliError::Input(e.to_string())
    }
}

impl From<autfilt::liealg::LieError> for CliError {
    fn from(e: autfilt::liealg::LieError) -> CliError {
        CliError::Input(e.to_string())
    }
}

struct Output {
    json: Value,
    csv: Option<String>,
}

fn env_usize(name: &str) -> Option<usize> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

fn guard_from(cli: &Cli, default: SizeGuard) -> SizeGuard {
    let max_n = cli.max_n.or_else(|| env_usize("MAX_N")).unwrap_or(default.max_n);
    let max_k = cli.max_k.or_else(|| env_usize("MAX_K")).unwrap_or(default.max_k);
    SizeGuard::custom(max_n, max_k)
}

fn check_expect<T: PartialEq + std::fmt::Display>(got: T, expect: Option<T>) -> Result<(), CliError> {
    if let Some(e) = expect {
        if got != e {
            return Err(CliError::Verification(format!("expected {e}, got {got}")));
        }
    }
    Ok(())
}

fn group_spec(group: Group, n: usize) -> GroupSpec {
    match group {
        Group::In => GroupSpec::partial_inner(n),
        Group::Psigma => GroupSpec::mccool(n),
        Group::PsigmaPlus => GroupSpec::upper_mccool(n),
    }
}

fn group_name(group: Group) -> &'static str {
    match group {
        Group::In => "in",
        Group::Psigma => "psigma",
        Group::PsigmaPlus => "psigma-plus",
    }
}

fn tensor_json(t: &Tensor) -> Value {
    let terms: Vec<Value> = t
        .terms_sorted()
        .into_iter()
        .map(|(monomial, coeff)| json!({"monomial": monomial, "coeff": coeff.to_string()}))
        .collect();
    Value::Array(terms)
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Witt { n, k, expect } => {
            if *n < 1 || *k < 1 || *n > 64 || *k > 64 {
                return Err(CliError::Input(format!("witt requires 1 <= n,k <= 64, got n={n} k={k}")));
            }
            let r = witt_rank(*n, *k);
            check_expect(r, *expect)?;
            Ok(Output {
                json: json!({"schema_version": SCHEMA_VERSION, "command": "witt", "n": n, "k": k, "r": r}),
                csv: Some(format!("n,k,r\n{n},{k},{r}\n")),
            })
        }
        Command::Hall { n, k, tensors } => {
            if *n < 1 || *k < 1 || *n > 15 || *k > 12 {
                return Err(CliError::Input(format!("hall requires 1 <= n <= 15 and 1 <= k <= 12, got n={n} k={k}")));
            }
            if witt_rank(*n, *k) > 2_000_000 || (*tensors && witt_rank(*n, *k) > 10_000) {
                return Err(CliError::Resource(format!("hall basis for n={n}, k={k} is too large")));
            }
            let basis = hall_basis(*n, *k);
            let mut mismatches = 0usize;
            let items: Vec<Value> = basis
                .iter()
                .map(|c| {
                    let word = bc_to_word(c);
                    let mut item = json!({"bc": c.to_string(), "word": word.to_string()});
                    if *tensors {
                        let tensor = autfilt::hall::bc_to_tensor(c, *n);
                        let class = autfilt::series::lie_class(&word, *n, *k)
                            .expect("basic commutator words have their weight");
                        if class != tensor {
                            mismatches += 1;
                        }
                        let obj = item.as_object_mut().unwrap();
                        obj.insert("tensor".into(), tensor_json(&tensor));
                        obj.insert("magnus_consistent".into(), json!(class == tensor));
                    }
                    item
                })
                .collect();
            let json = json!({
                "schema_version": SCHEMA_VERSION, "command": "hall", "n": n, "k": k,
                "count": basis.len(), "witt": witt_rank(*n, *k), "commutators": items,
            });
            if mismatches > 0 {
                println!("{}", serde_json::to_string_pretty(&json).unwrap());
                return Err(CliError::Verification(format!(
                    "{mismatches} commutators disagree with their graded classes"
                )));
            }
            Ok(Output { json, csv: None })
        }
        Command::Verify { suite, n } => {
            let suite: Suite = suite.parse()?;
            let guard = guard_from(cli, SizeGuard::suites());
            let report = verify_relations(suite, *n, &guard)?;
            let json = json!({
                "schema_version": SCHEMA_VERSION, "command": "verify", "suite": report.suite.name(),
                "n": report.n, "instances": report.instances, "failures": report.failures,
            });
            if !report.passed() {
                println!("{}", serde_json::to_string_pretty(&json).unwrap());
                return Err(CliError::Verification(format!(
                    "suite {suite} reported {} failures", report.failures.len()
                )));
            }
            Ok(Output { json, csv: None })
        }
        Command::Member { word, n, k } => {
            let guard = guard_from(cli, SizeGuard::suites());
            guard.admit(*n, *k)?;
            let w: GroupWord = word.parse()?;
            let e = evaluate(&w, *n)?;
            let member = autfilt::autgrp::andreadakis_member(&e, *k)?;
            let images: Vec<String> = e.images().iter().map(|im| im.to_string()).collect();
            Ok(Output {
                json: json!({
                    "schema_version": SCHEMA_VERSION, "command": "member",
                    "word": w.to_string(), "n": n, "k": k, "member": member,
                    "images": images,
                }),
                csv: None,
            })
        }
        Command::Johnson { word, n, k } => {
            let guard = guard_from(cli, SizeGuard::suites());
            guard.admit(*n, *k)?;
            let w: GroupWord = word.parse()?;
            let e = evaluate(&w, *n)?;
            let d = johnson(&e, *k)?;
            let values: Vec<Value> = (1..=*n)
                .map(|i| json!({"generator": i, "terms": tensor_json(d.value(i))}))
                .collect();
            Ok(Output {
                json: json!({
                    "schema_version": SCHEMA_VERSION, "command": "johnson",
                    "word": w.to_string(), "n": n, "k": k, "degree": d.degree(),
                    "zero": d.is_zero(), "values": values,
                }),
                csv: None,
            })
        }
        Command::GrRank { group, n, k, method, expect } => {
            let guard = guard_from(cli, SizeGuard::ranks());
            let spec = group_spec(*group, *n);
            let (rank, detail) = match method {
                RankMethod::Johnson => {
                    let r = gr_rank(&spec, *k, Method::Johnson, &guard)?;
                    (r, json!({"johnson_rank": r}))
                }
                RankMethod::Derivation => {
                    let r = gr_rank(&spec, *k, Method::Derivation, &guard)?;
                    (r, json!({"derivation_rank": r}))
                }
                RankMethod::Both => {
                    let rj = gr_rank(&spec, *k, Method::Johnson, &guard)?;
                    let rd = gr_rank(&spec, *k, Method::Derivation, &guard)?;
                    if rj != rd {
                        return Err(CliError::Verification(format!(
                            "method disagreement: johnson {rj} vs derivation {rd}"
                        )));
                    }
                    (rj, json!({"johnson_rank": rj, "derivation_rank": rd}))
                }
                RankMethod::Basis => {
                    if *group != Group::Psigma || *k != 2 {
                        return Err(CliError::Input(
                            "method `basis` applies to --group psigma with --k 2".into(),
                        ));
                    }
                    guard.admit(*n, *k)?;
                    let r = psigma_gr2_basis_rank(*n)?;
                    (r, json!({"basis_rank": r}))
                }
            };
            check_expect(rank, *expect)?;
            let mut json = json!({
                "schema_version": SCHEMA_VERSION, "command": "gr-rank",
                "group": group_name(*group), "n": n, "k": k, "rank": rank,
            });
            json.as_object_mut().unwrap().extend(detail.as_object().unwrap().clone());
            Ok(Output {
                json,
                csv: Some(format!("group,n,k,rank\n{},{n},{k},{rank}\n", group_name(*group))),
            })
        }
        Command::LieRanks { group, n, k_max } => {
            let guard = guard_from(cli, SizeGuard::ranks());
            guard.admit(*n, *k_max)?;
            let presentation = match group {
                Group::In => LiePresentation::partial_inner(*n)?,
                Group::PsigmaPlus => LiePresentation::upper_mccool(*n)?,
                Group::Psigma => {
                    return Err(CliError::Input(
                        "lie-ranks supports --group in and --group psigma-plus".into(),
                    ))
                }
            };
            let reports = presented_lie_ranks(&presentation, *k_max)?;
            let ranks: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "k": r.k, "rank": r.rank,
                        "divisors": r.divisors.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut csv = String::from("group,n,k,rank,nontrivial_divisors\n");
            for r in &reports {
                let nontrivial = r.divisors.iter().filter(|d| **d != 1.into()).count();
                csv.push_str(&format!("{},{n},{},{},{}\n", group_name(*group), r.k, r.rank, nontrivial));
            }
            Ok(Output {
                json: json!({
                    "schema_version": SCHEMA_VERSION, "command": "lie-ranks",
                    "group": group_name(*group), "n": n, "k_max": k_max,
                    "num_generators": presentation.num_generators(), "ranks": ranks,
                }),
                csv: Some(csv),
            })
        }
        Command::Betti { group, n, k, expect } => {
            let guard = guard_from(cli, SizeGuard::custom(5, 6));
            guard.admit(*n, 1)?;
            let data = match group {
                Group::In => cohom::PresentationData::partial_inner(*n),
                Group::PsigmaPlus => cohom::PresentationData::upper_mccool(*n),
                Group::Psigma => {
                    return Err(CliError::Input(
                        "betti supports --group in and --group psigma-plus".into(),
                    ))
                }
            };
            let m = data.total_generators();
            let ideal = cohom::build_ideal(&data);
            match k {
                Some(k) => {
                    let b = cohom::betti(m, &ideal, *k);
                    check_expect(b, *expect)?;
                    Ok(Output {
                        json: json!({
                            "schema_version": SCHEMA_VERSION, "command": "betti",
                            "group": group_name(*group), "n": n, "k": k, "betti": b,
                        }),
                        csv: Some(format!("group,n,k,betti\n{},{n},{k},{b}\n", group_name(*group))),
                    })
                }
                None => {
                    let seq = cohom::betti_sequence(m, &ideal);
                    if expect.is_some() {
                        return Err(CliError::Input("--expect requires --k".into()));
                    }
                    // csv: the full table for every admissible rank up to n
                    let mut csv = String::from("group,n,k,betti\n");
                    for np in 2..=*n {
                        let data = match group {
                            Group::In => cohom::PresentationData::partial_inner(np),
                            _ => cohom::PresentationData::upper_mccool(np),
                        };
                        let mp = data.total_generators();
                        let ideal = cohom::build_ideal(&data);
                        for (kk, b) in cohom::betti_sequence(mp, &ideal).iter().enumerate() {
                            csv.push_str(&format!("{},{np},{kk},{b}\n", group_name(*group)));
                        }
                    }
                    Ok(Output {
                        json: json!({
                            "schema_version": SCHEMA_VERSION, "command": "betti",
                            "group": group_name(*group), "n": n, "betti": seq,
                        }),
                        csv: Some(csv),
                    })
                }
            }
        }
        Command::Poincare { group, n } => {
            let guard = guard_from(cli, SizeGuard::custom(5, 6));
            guard.admit(*n, 1)?;
            let spec = group_spec(*group, *n);
            let report = cohom::poincare_check(&spec)?;
            let listed: Vec<Value> = report
                .two_term_in_span
                .iter()
                .map(|(label, ok)| json!({"relation": label, "in_span": ok}))
                .collect();
            let json = json!({
                "schema_version": SCHEMA_VERSION, "command": "poincare",
                "group": group_name(*group), "n": n,
                "factor_ranks": report.factor_ranks,
                "betti": report.betti, "product": report.product,
                "betti_matches_product": report.betti_matches_product,
                "b1_expected": report.b1_expected, "b1_matches": report.b1_matches,
                "two_term_relations": listed,
            });
            let mut csv = String::from("k,betti,product\n");
            for (kk, (b, p)) in report.betti.iter().zip(&report.product).enumerate() {
                csv.push_str(&format!("{kk},{b},{p}\n"));
            }
            if !report.betti_matches_product || !report.b1_matches {
                println!("{}", serde_json::to_string_pretty(&json).unwrap());
                return Err(CliError::Verification("Betti sequence mismatch".into()));
            }
            Ok(Output { json, csv: Some(csv) })
        }
        Command::Probe { group, n, k } => {
            if *group != Group::Psigma {
                return Err(CliError::Input("probe supports --group psigma".into()));
            }
            let guard = guard_from(cli, SizeGuard::ranks());
            let report = conjecture_probe(*n, *k, &guard)?;
            Ok(Output {
                json: json!({
                    "schema_version": SCHEMA_VERSION, "command": "probe",
                    "group": group_name(*group), "n": n, "k": k,
                    "computed_rank": report.computed_rank,
                    "conjectured": report.conjectured,
                    "note": "computed rank is a lower bound; no pass/fail judgment",
                }),
                csv: Some(format!(
                    "group,n,k,computed_rank,conjectured\n{},{n},{k},{},{}\n",
                    group_name(*group),
                    report.computed_rank,
                    report.conjectured
                )),
            })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => match cli.format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).unwrap()),
            Format::Csv => match out.csv {
                Some(csv) => print!("{csv}"),
                None => {
                    eprintln!("error: this command has no CSV form");
                    std::process::exit(2);
                }
            },
        },
        Err(CliError::Verification(msg)) => {
            eprintln!("verification failure: {msg}");
            std::process::exit(1);
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
        Err(CliError::Resource(msg)) => {
            eprintln!("size guard: {msg}");
            std::process::exit(3);
        }
    }
}
