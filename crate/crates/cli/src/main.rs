use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cutsets::analysis::{
    contains_maximal_antichain, extract_antichain, extract_chain, find_avoiding_chain,
    height_layers, is_cutset, is_minimal_cutset, is_nontrivial, largest_antichain_in_family,
    longest_chain_in_family, GroupKey, MAXIMAL_ANTICHAIN_SEARCH_LIMIT,
};
use cutsets::constructions::{
    block_antichain, ordinal_chain, separating_pair_cutset, tree_chain_family, BlockPartition,
};
use cutsets::text::format_set;
use cutsets::{survey, verify, Chain, Family, GroundSize, SubsetMask};

/// Cutsets of finite Boolean lattices.
#[derive(Parser)]
#[command(name = "cutsets", version)]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the standard families.
    #[command(subcommand)]
    Construct(Construct),
    /// Decide a property of a family.
    #[command(subcommand)]
    Check(Check),
    /// Pull a chain or antichain out of a cutset.
    #[command(subcommand)]
    Extract(Extract),
    /// Summarize a family: cutset status, longest chain, largest antichain.
    Analyze {
        #[arg(long)]
        family: PathBuf,
    },
    /// Census of all families over P(n).
    Survey {
        #[arg(long)]
        n: usize,
        /// Only search minimal cutsets for maximal antichains.
        #[arg(long)]
        minimal_only: bool,
    },
    /// Run the built-in acceptance suite.
    VerifyPaper {
        /// Largest ground size for the exhaustive census criterion.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Ordinal chain through a set.
    Lemma1 {
        #[arg(long)]
        n: usize,
        /// Elements separated by commas or spaces; empty or `-` for the empty set.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// All sets containing exactly one of x and y.
    Theorem3 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
    },
    /// Antichain of block selections over a p·q·s ground set.
    Lemma3b {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        s: usize,
    },
    /// Chain of lower sets of the leaves of a k-ary tree.
    TreeChain {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: usize,
    },
}

#[derive(Subcommand)]
enum Check {
    Cutset {
        #[arg(long)]
        family: PathBuf,
    },
    Minimal {
        #[arg(long)]
        family: PathBuf,
    },
}

#[derive(Subcommand)]
enum Extract {
    Chain {
        #[arg(long)]
        cutset: PathBuf,
        #[arg(long)]
        source: PathBuf,
    },
    Antichain {
        #[arg(long)]
        cutset: PathBuf,
        #[arg(long)]
        source: PathBuf,
    },
}

struct Report {
    text: String,
    machine: Value,
    /// Negative decision: exit 1 instead of 0.
    negative: bool,
}

impl Report {
    fn new(text: String, machine: Value) -> Self {
        Report {
            text,
            machine,
            negative: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.text),
                Format::Machine => println!("{}", report.machine),
            }
            if report.negative {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<Report> {
    match command {
        Command::Construct(c) => construct(c),
        Command::Check(Check::Cutset { family }) => check_cutset(&read_family(&family)?),
        Command::Check(Check::Minimal { family }) => check_minimal(&read_family(&family)?),
        Command::Extract(Extract::Chain { cutset, source }) => {
            let cutset = read_family(&cutset)?;
            let source = read_family(&source)?;
            let source = Chain::from_family(&source).context("source must be a chain")?;
            let out = extract_chain(&cutset, &source)?;
            Ok(extracted(
                &out.chain.to_family(),
                out.key,
                out.group_size,
                &[],
            ))
        }
        Command::Extract(Extract::Antichain { cutset, source }) => {
            let cutset = read_family(&cutset)?;
            let source = read_family(&source)?;
            let out = extract_antichain(&cutset, &source)?;
            Ok(extracted(
                &out.antichain,
                out.key,
                out.group_size,
                &[("collapsed", out.collapsed), ("dropped", out.dropped)],
            ))
        }
        Command::Analyze { family } => analyze(&read_family(&family)?),
        Command::Survey { n, minimal_only } => {
            let report = survey::census(GroundSize::new(n)?, minimal_only)?;
            let text = format!("{report}elapsed_ms={}\n", report.elapsed.as_millis());
            let machine = json!({
                "n": n,
                "minimal_only": minimal_only,
                "families_examined": report.families_examined,
                "cutsets": report.cutsets,
                "nontrivial_cutsets": report.nontrivial_cutsets,
                "minimal_cutsets": report.minimal_cutsets,
                "antichain_checks": report.antichain_checks,
                "dsw_failures": report.failures.iter().map(family_json).collect::<Vec<_>>(),
                "elapsed_ms": report.elapsed.as_millis() as u64,
            });
            Ok(Report {
                text,
                machine,
                negative: !report.failures.is_empty(),
            })
        }
        Command::VerifyPaper { max_n } => {
            let results = verify::run_suite(max_n)?;
            let mut text = String::new();
            for r in &results {
                text.push_str(&format!("{r}\n"));
            }
            let passed = results.iter().filter(|r| r.passed()).count();
            text.push_str(&format!("passed={passed}/{}\n", results.len()));
            let machine = json!({
                "criteria": results.iter().map(|r| json!({
                    "id": r.id,
                    "name": r.name,
                    "passed": r.passed(),
                    "correct": r.correct,
                    "detail": r.detail,
                    "elapsed_s": r.elapsed.as_secs_f64(),
                    "budget_s": r.budget.as_secs_f64(),
                })).collect::<Vec<_>>(),
                "all_passed": passed == results.len(),
            });
            Ok(Report {
                text,
                machine,
                negative: passed != results.len(),
            })
        }
    }
}

fn construct(c: Construct) -> anyhow::Result<Report> {
    let (family, comments): (Family, Vec<String>) = match c {
        Construct::Lemma1 { n, set } => {
            let n = GroundSize::new(n)?;
            (
                ordinal_chain(parse_set_arg(n, &set)?).to_family(),
                Vec::new(),
            )
        }
        Construct::Theorem3 { n, x, y } => (
            separating_pair_cutset(x, y, GroundSize::new(n)?)?,
            Vec::new(),
        ),
        Construct::Lemma3b { p, q, s } => {
            (block_antichain(&BlockPartition::new(p, q, s)?), Vec::new())
        }
        Construct::TreeChain { k, lambda } => {
            let tc = tree_chain_family(k, lambda)?;
            let mut comments: Vec<String> = tc
                .partials
                .iter()
                .enumerate()
                .map(|(i, d)| format!("element {i} = {d}"))
                .collect();
            comments.push(format!("collapsed={}", tc.collapsed));
            (tc.chain.to_family(), comments)
        }
    };
    let mut machine = family_json(&family);
    machine["comments"] = json!(comments);
    Ok(Report::new(family_text(&family, &comments), machine))
}

fn check_cutset(family: &Family) -> anyhow::Result<Report> {
    let avoiding = find_avoiding_chain(family)?;
    let cut = avoiding.is_none();
    let nontrivial = is_nontrivial(family);
    let minimal = cut && is_minimal_cutset(family)?;
    let mut text = format!("is_cutset={cut} nontrivial={nontrivial} minimal={minimal}\n");
    let mut machine = json!({
        "is_cutset": cut,
        "nontrivial": nontrivial,
        "minimal": minimal,
    });
    if let Some(chain) = avoiding {
        let order: Vec<u8> = chain.perm().to_vec();
        text.push_str(&format!("avoiding_chain={}\n", join(&order)));
        machine["avoiding_chain"] = json!(order);
    }
    Ok(Report {
        text,
        machine,
        negative: !cut,
    })
}

fn check_minimal(family: &Family) -> anyhow::Result<Report> {
    let cut = is_cutset(family)?;
    let minimal = cut && is_minimal_cutset(family)?;
    Ok(Report {
        text: format!("is_cutset={cut} minimal={minimal}\n"),
        machine: json!({ "is_cutset": cut, "minimal": minimal }),
        negative: !minimal,
    })
}

fn analyze(family: &Family) -> anyhow::Result<Report> {
    let cut = is_cutset(family)?;
    let minimal = cut && is_minimal_cutset(family)?;
    let chain = longest_chain_in_family(family)?;
    let layers = height_layers(family);
    let antichain = largest_antichain_in_family(family)?;
    let maximal = if family.ground().get() <= MAXIMAL_ANTICHAIN_SEARCH_LIMIT {
        Some(contains_maximal_antichain(family)?)
    } else {
        None
    };

    let mut text = String::new();
    text.push_str(&format!(
        "n={}\nmembers={}\n",
        family.ground(),
        family.len()
    ));
    text.push_str(&format!(
        "is_antichain={}\nis_chain={}\n",
        family.is_antichain(),
        family.is_chain()
    ));
    text.push_str(&format!(
        "is_cutset={cut}\nnontrivial={}\nminimal={minimal}\n",
        is_nontrivial(family)
    ));
    text.push_str(&format!(
        "longest_chain_len={}\nlongest_chain={}\n",
        chain.len(),
        sets_text(chain.sets())
    ));
    text.push_str(&format!("height_layers={}\n", layers.len()));
    text.push_str(&format!(
        "largest_antichain_len={}\nlargest_antichain={}\n",
        antichain.len(),
        sets_text(antichain.members())
    ));
    match &maximal {
        Some(Some(a)) => text.push_str(&format!("maximal_antichain={}\n", sets_text(a.members()))),
        Some(None) => text.push_str("maximal_antichain=none\n"),
        None => text.push_str("maximal_antichain=skipped\n"),
    }

    let machine = json!({
        "family": family_json(family),
        "is_antichain": family.is_antichain(),
        "is_chain": family.is_chain(),
        "is_cutset": cut,
        "nontrivial": is_nontrivial(family),
        "minimal": minimal,
        "longest_chain": sets_json(chain.sets()),
        "height_layers": layers.iter().map(|l| sets_json(l.members())).collect::<Vec<_>>(),
        "largest_antichain": sets_json(antichain.members()),
        "maximal_antichain": match &maximal {
            Some(Some(a)) => sets_json(a.members()),
            _ => Value::Null,
        },
        "maximal_antichain_searched": maximal.is_some(),
    });
    Ok(Report::new(text, machine))
}

fn extracted(
    family: &Family,
    key: Option<GroupKey>,
    group_size: usize,
    extra: &[(&str, usize)],
) -> Report {
    let mut comment = match key {
        Some(k) => format!(
            "direction={} alpha={} group_size={group_size}",
            k.direction, k.alpha
        ),
        None => format!("direction=none group_size={group_size}"),
    };
    for (name, value) in extra {
        comment.push_str(&format!(" {name}={value}"));
    }
    let mut machine = family_json(family);
    machine["direction"] = key.map_or(Value::Null, |k| json!(k.direction.to_string()));
    machine["alpha"] = key.map_or(Value::Null, |k| json!(k.alpha.get()));
    machine["group_size"] = json!(group_size);
    for (name, value) in extra {
        machine[*name] = json!(value);
    }
    Report::new(family_text(family, &[comment]), machine)
}

fn read_family(path: &Path) -> anyhow::Result<Family> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.parse::<Family>()
        .with_context(|| format!("parsing {}", path.display()))
}

/// Accepts `0,2`, `0 2`, `-` or the empty string.
fn parse_set_arg(n: GroundSize, arg: &str) -> anyhow::Result<SubsetMask> {
    let arg = arg.trim();
    if arg.is_empty() || arg == "-" {
        return Ok(n.empty());
    }
    let mut elements = Vec::new();
    for tok in arg
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        match tok.parse::<usize>() {
            Ok(x) => elements.push(x),
            Err(_) => bail!("`{tok}` in --set is not a non-negative integer"),
        }
    }
    Ok(SubsetMask::from_elements(n, elements)?)
}

fn family_text(family: &Family, comments: &[String]) -> String {
    let mut out = format!("n={}\n", family.ground());
    for c in comments {
        out.push_str(&format!("# {c}\n"));
    }
    for &m in family {
        out.push_str(&format_set(m));
        out.push('\n');
    }
    out
}

fn family_json(family: &Family) -> Value {
    json!({ "n": family.ground().get(), "members": sets_json(family.members()) })
}

fn sets_json(sets: &[SubsetMask]) -> Value {
    json!(sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>())
}

fn sets_text(sets: &[SubsetMask]) -> String {
    sets.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn join(xs: &[u8]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
