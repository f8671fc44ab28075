//! `raney`: sequence tables, enumeration dumps, identity suites and figure
//! export for Raney numbers and coral diagrams.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on a usage
//! error and 3 when a size cap is hit or output cannot be written.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use raney::coral::{enumerate_coral_tiered, enumerate_coral_tuple};
use raney::numbers::{p_catalan, raney_closed, raney_composition_sum, raney_convolution};
use raney::records::Record;
use raney::verify::{self, VerifyConfig};
use raney::webs::{
    conjecture_values, enumerate_a2_tree_webs_constant, enumerate_a2_tree_webs_minus,
};
use raney::{ExactNat, DEFAULT_SIZE_CAP};

#[derive(Debug, Parser)]
#[command(
    name = "raney",
    version,
    about = "Exact enumeration of Raney numbers and coral diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Table of R(p, r, k) for k = 0..=k-max.
    Raney {
        #[arg(long, value_parser = positive())]
        p: u32,
        #[arg(long, value_parser = positive())]
        r: u32,
        #[arg(long)]
        k_max: u32,
        /// Also print the composition-sum and convolution columns.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Table of the p-Catalan numbers for k = 0..=k-max.
    Catalan {
        #[arg(long, value_parser = positive())]
        p: u32,
        #[arg(long)]
        k_max: u32,
        #[command(flatten)]
        output: Output,
    },
    /// One record (or graph file) per (p,r)-coral diagram with k stars.
    Enumerate {
        #[arg(long, value_parser = positive())]
        p: u32,
        #[arg(long, value_parser = positive())]
        r: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Method::Tuple)]
        method: Method,
        #[command(flatten)]
        output: Output,
    },
    /// Connected cycle-free A2 webs with a constant or minus-first boundary.
    Webs {
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Run every identity and bijection suite; exit 1 if any fails.
    Verify {
        /// Largest p in the four-route identity.
        #[arg(long, default_value_t = VerifyConfig::default().identity_p_max)]
        p_max: u32,
        /// Largest r in the four-route identity.
        #[arg(long, default_value_t = VerifyConfig::default().identity_r_max)]
        r_max: u32,
        /// Largest k in the four-route identity.
        #[arg(long, default_value_t = VerifyConfig::default().identity_k_max)]
        k_max: u32,
        /// Largest k for the web oracles.
        #[arg(long, default_value_t = VerifyConfig::default().web_k_max)]
        web_k_max: u32,
        #[arg(long, hide = true)]
        inject_fault: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Values predicted by the sl_n tree-web conjectures (unverified).
    Conjecture {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
        n: u32,
        #[arg(long, value_parser = positive())]
        j: u32,
        #[arg(long)]
        k_max: u32,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output file; for `--format dot` a directory receiving one file per object.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest number of objects (or unfiltered trees) to walk.
    #[arg(long, env = "RANEY_CAP", default_value_t = DEFAULT_SIZE_CAP,
          value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Records,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Tuple,
    Tiered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Constant,
    Minus,
}

fn positive() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..)
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification,
    Limit(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<raney::Error> for Failure {
    fn from(e: raney::Error) -> Self {
        match e {
            raney::Error::SizeLimit { .. } => Failure::Limit(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Raney {
            p,
            r,
            k_max,
            check,
            output,
        } => {
            table_only(&output)?;
            cmd_raney(p, r, k_max, check, &output)
        }
        Command::Catalan { p, k_max, output } => {
            table_only(&output)?;
            let mut rows = vec![vec!["k".to_string(), format!("c_{p}(k)")]];
            rows.extend(
                (0..=k_max).map(|k| vec![k.to_string(), p_catalan::<ExactNat>(p, k).to_string()]),
            );
            write_text(&output, &render_table(&rows))
        }
        Command::Enumerate {
            p,
            r,
            k,
            method,
            output,
        } => cmd_enumerate(p, r, k, method, &output),
        Command::Webs { variant, k, output } => cmd_webs(variant, k, &output),
        Command::Verify {
            p_max,
            r_max,
            k_max,
            web_k_max,
            inject_fault,
            output,
        } => {
            table_only(&output)?;
            let cfg = VerifyConfig {
                identity_p_max: p_max,
                identity_r_max: r_max,
                identity_k_max: k_max,
                web_k_max,
                cap: output.cap,
                inject_fault,
                ..VerifyConfig::default()
            };
            cmd_verify(&cfg, &output)
        }
        Command::Conjecture {
            n,
            j,
            k_max,
            output,
        } => {
            table_only(&output)?;
            cmd_conjecture(n, j, k_max, &output)
        }
    }
}

fn table_only(output: &Output) -> Result<(), Failure> {
    match output.format {
        None | Some(Format::Table) => Ok(()),
        Some(other) => Err(Failure::Usage(format!(
            "this command only prints tables, not {other:?}"
        ))),
    }
}

fn cmd_raney(p: u32, r: u32, k_max: u32, check: bool, output: &Output) -> Result<(), Failure> {
    let mut header = vec!["k".to_string(), format!("R({p},{r},k)")];
    if check {
        header.extend(["composition_sum", "convolution", "agree"].map(String::from));
    }
    let mut rows = vec![header];
    let mut all_agree = true;
    for k in 0..=k_max {
        let closed = raney_closed::<ExactNat>(p, r, k);
        let mut row = vec![k.to_string(), closed.to_string()];
        if check {
            let sum = raney_composition_sum::<ExactNat>(p, r, k);
            let conv = raney_convolution::<ExactNat>(p, r, k);
            let agree = sum == closed && conv == closed;
            all_agree &= agree;
            row.extend([
                sum.to_string(),
                conv.to_string(),
                if agree { "yes" } else { "NO" }.to_string(),
            ]);
        }
        rows.push(row);
    }
    write_text(output, &render_table(&rows))?;
    if all_agree {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_enumerate(p: u32, r: u32, k: u32, method: Method, output: &Output) -> Result<(), Failure> {
    let expected = raney_closed::<ExactNat>(p, r, k);
    if expected > ExactNat::from(output.cap) {
        return Err(Failure::Limit(format!(
            "({p},{r},{k}) has {expected} coral diagrams, above the cap of {}",
            output.cap
        )));
    }
    let diagrams = match method {
        Method::Tuple => enumerate_coral_tuple(p, r, k),
        Method::Tiered => enumerate_coral_tiered(p, r, k),
    };
    match output.format.unwrap_or(Format::Records) {
        Format::Records => {
            let text: String = diagrams
                .iter()
                .map(|d| format!("{}\n", Record::coral(d)))
                .collect();
            write_text(output, &text)
        }
        Format::Dot => {
            let graphs: Vec<String> = diagrams.iter().map(|d| d.tree().to_dot()).collect();
            write_graphs(output, &format!("coral_p{p}_r{r}_k{k}"), &graphs)
        }
        Format::Table => Err(Failure::Usage("enumerate writes records or dot".into())),
    }
}

fn cmd_webs(variant: Variant, k: u32, output: &Output) -> Result<(), Failure> {
    let (webs, (p, r)) = match variant {
        Variant::Constant => {
            let expected = raney_closed::<ExactNat>(4, 2, k);
            if expected > ExactNat::from(output.cap) {
                return Err(Failure::Limit(format!(
                    "k = {k} has {expected} webs, above the cap of {}",
                    output.cap
                )));
            }
            (enumerate_a2_tree_webs_constant(k), (4, 2))
        }
        Variant::Minus => (enumerate_a2_tree_webs_minus(k, output.cap)?, (4, 1)),
    };
    match output.format.unwrap_or(Format::Records) {
        Format::Records => {
            let text: String = webs
                .iter()
                .map(|w| format!("{}\n", Record::web(p, r, k, w)))
                .collect();
            write_text(output, &text)
        }
        Format::Dot => {
            let graphs: Vec<String> = webs.iter().map(|w| w.to_dot()).collect();
            let name = match variant {
                Variant::Constant => "web_constant",
                Variant::Minus => "web_minus",
            };
            write_graphs(output, &format!("{name}_k{k}"), &graphs)
        }
        Format::Table => Err(Failure::Usage("webs writes records or dot".into())),
    }
}

fn cmd_verify(cfg: &VerifyConfig, output: &Output) -> Result<(), Failure> {
    let reports = verify::run_all(cfg);
    let mut text = String::new();
    for report in &reports {
        text.push_str(&format!("{report}\n"));
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        text.push_str(&format!("all {} suites passed\n", reports.len()));
    } else {
        text.push_str(&format!("{failed} of {} suites failed\n", reports.len()));
    }
    write_text(output, &text)?;
    match verify::exit_code(&reports) {
        0 => Ok(()),
        _ => Err(Failure::Verification),
    }
}

fn cmd_conjecture(n: u32, j: u32, k_max: u32, output: &Output) -> Result<(), Failure> {
    let mut rows = vec![vec![
        "k".to_string(),
        "(n-2)^k R(n+1,n-1,k)".to_string(),
        "(n-2)^k R(n-1,n-j,k)".to_string(),
    ]];
    for k in 0..=k_max {
        let (constant, mixed) = conjecture_values::<ExactNat>(n, j, k)?;
        rows.push(vec![k.to_string(), constant.to_string(), mixed.to_string()]);
    }
    let text = format!(
        "UNVERIFIED: conjectured sl_n tree-web counts, not checked by any enumeration\nn = {n}, j = {j}\n{}",
        render_table(&rows)
    );
    write_text(output, &text)
}

/// Left-aligned columns separated by two spaces; integers are printed in full.
fn render_table(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn write_text(output: &Output, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            w.write_all(text.as_bytes())?;
            w.flush()?;
        }
    }
    Ok(())
}

/// Writes each graph to `<dir>/<prefix>_<index>.dot`, or all of them to
/// stdout when no directory is given.
fn write_graphs(output: &Output, prefix: &str, graphs: &[String]) -> Result<(), Failure> {
    match &output.out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            for (i, graph) in graphs.iter().enumerate() {
                fs::write(graph_path(dir, prefix, i), graph)?;
            }
            Ok(())
        }
        None => write_text(
            &Output {
                format: output.format,
                out: None,
                cap: output.cap,
            },
            &graphs.concat(),
        ),
    }
}

fn graph_path(dir: &Path, prefix: &str, index: usize) -> PathBuf {
    dir.join(format!("{prefix}_{index:04}.dot"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rendering() {
        let rows = vec![
            vec!["k".to_string(), "value".to_string()],
            vec!["10".to_string(), "3".to_string()],
        ];
        assert_eq!(render_table(&rows), "k   value\n10  3\n");
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
