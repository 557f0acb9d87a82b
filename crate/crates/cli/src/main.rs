//! Command-line front end: exact counts, census tables, b-file sequences,
//! verification sweeps, and object enumeration.
//!
//! Counts print as exact decimals (they exceed 64 bits early). Output is
//! assembled in full before anything is written, so a precondition
//! violation never leaves a partial table behind; violations exit with
//! status 2 and a message naming the offending parameter. A failed
//! verification exits with status 1.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use colorforest::checks::{self, CheckOutcome, Depths};
use colorforest::table::{table_alpha, table_forest, table_xi};
use colorforest::{
    census, count_forests, count_trees, count_triangulations_by_type, enumerate_forests,
    enumerate_trees, enumerate_triangulations, fuss_catalan, proper_three_coloring, type_of,
    ColorSeq, ColoredForest, Composition, CountTable, Partition, PkIdentity,
};

#[derive(Parser)]
#[command(
    name = "colorforest",
    about = "Exact enumeration of injectively k-colored rooted forests, \
             Fuss-Catalan distributions, and 3-colored polygon triangulations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single exact count
    Count {
        #[command(subcommand)]
        what: CountCommand,
    },
    /// Emit a census table (CSV or JSON) with its Fuss-Catalan total
    Table {
        #[command(subcommand)]
        what: TableCommand,
        #[arg(long, global = true, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Write to a file instead of standard output
        #[arg(long, global = true)]
        output: Option<PathBuf>,
    },
    /// Emit an integer sequence in b-file form (one "index value" per line)
    Sequence {
        #[command(subcommand)]
        what: SequenceCommand,
        #[arg(long, global = true)]
        output: Option<PathBuf>,
    },
    /// Run verification sweeps; exits nonzero if any check fails
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
        /// Machine-readable JSON report instead of one line per check
        #[arg(long, global = true)]
        json_report: bool,
        /// Seed for the randomized sweeps
        #[arg(long, global = true, default_value_t = 0xC0FFEE)]
        seed: u64,
    },
    /// Enumerate objects, one per line (or one DOT graph per object)
    Enumerate {
        #[command(subcommand)]
        what: EnumerateCommand,
        #[arg(long, global = true, value_enum, default_value_t = ObjectFormat::Text)]
        format: ObjectFormat,
        #[arg(long, global = true)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CountCommand {
    /// Forest classes with character --lambda and root colors --roots
    Forests {
        /// Character: comma-separated vertex counts per color, e.g. 3,1,1
        #[arg(long, value_parser = parse_composition)]
        lambda: Composition,
        /// Root colors in root order, e.g. 1,1 (omit for no roots)
        #[arg(long, value_parser = parse_colors, default_value = "")]
        roots: std::vec::Vec<usize>,
    },
    /// Tree classes with character --lambda and root color --root
    Trees {
        #[arg(long, value_parser = parse_composition)]
        lambda: Composition,
        #[arg(long)]
        root: usize,
    },
    /// Triangulations of the --n gon with 3-coloring type --type
    Tri {
        #[arg(long)]
        n: u64,
        /// Weakly decreasing census, e.g. 6,5,5
        #[arg(long = "type", value_parser = parse_partition)]
        ty: Partition,
    },
    /// The Fuss-Catalan number A_n(p, r)
    Fuss {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u64,
    },
}

#[derive(Subcommand)]
enum TableCommand {
    /// The xi distribution of A_n(2,1) over two-part characters
    Xi {
        #[arg(long)]
        n: u64,
        /// Number of distribution parameters (only 2 is tabulated)
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
    /// The alpha distribution of A_n(2, 2|rho|) for a fixed root shape
    Alpha {
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = parse_partition)]
        rho: Partition,
    },
    /// The triangulation type census of the n-gon
    Tri {
        #[arg(long)]
        n: u64,
        /// Bin an explicit enumeration instead of evaluating the formula
        #[arg(long)]
        brute: bool,
    },
    /// Forest counts over all three-color characters of weight n
    Forest {
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = parse_colors)]
        roots: std::vec::Vec<usize>,
    },
}

#[derive(Subcommand)]
enum SequenceCommand {
    /// Catalan numbers C_0..C_max
    Catalan {
        #[arg(long)]
        max: u64,
    },
    /// Fuss-Catalan numbers A_0(p,r)..A_max(p,r)
    Fuss {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        max: u64,
    },
    /// Row sums of the xi tables at fixed row h, indexed by n
    RowSums {
        #[arg(long)]
        h: u64,
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long)]
        max: u64,
    },
    /// The main antidiagonal of the xi table for one n, indexed by position
    Antidiagonal {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Every sweep at standard depth (trim with --ci)
    All {
        /// Use the trimmed depths sized for CI time budgets
        #[arg(long)]
        ci: bool,
    },
    /// Brute-force enumeration against the closed-form count
    Oracle {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        max_n: u64,
        #[arg(long, default_value_t = 3)]
        max_m: u64,
    },
    /// Key polynomial identities (and the expansion/evaluator agreement)
    Poly {
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// One of i, ii, iii, iv; omit to run all four
        #[arg(long, value_enum)]
        part: Option<PolyPart>,
    },
    /// Dual-tree bijection round trips and the character bridge
    Chi {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
    /// Brute-force census against the formula census
    Census {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Last-root and root-decomposition recurrences
    Recurrences {
        #[arg(long, default_value_t = 7)]
        max_n: u64,
    },
    /// Fuss-Catalan recurrence and series power law
    Fuss {
        #[arg(long, default_value_t = 3)]
        max_p: u64,
        #[arg(long, default_value_t = 10)]
        max_n: u64,
        #[arg(long, default_value_t = 4)]
        max_r: u64,
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
    /// Distribution sums: xi, alpha, tree and forest totals
    Distributions {
        #[arg(long, default_value_t = 8)]
        max_n: u64,
    },
    /// Deletion/attachment round trips on enumerated forests
    Theta {
        #[arg(long, default_value_t = 6)]
        max_n: u64,
    },
    /// Stream uniqueness, characters, and lengths
    Streams {
        #[arg(long, default_value_t = 6)]
        max_n: u64,
        #[arg(long, default_value_t = 2)]
        max_m: u64,
    },
    /// Report the minimum coefficient of P_k in z = x - y variables
    /// (informational; the observed nonnegativity is not asserted)
    Zy {
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum EnumerateCommand {
    /// Canonical forests with the given character and root colors
    Forests {
        #[arg(long, value_parser = parse_composition)]
        lambda: Composition,
        #[arg(long, value_parser = parse_colors, default_value = "")]
        roots: std::vec::Vec<usize>,
        /// Refuse characters heavier than this
        #[arg(long, default_value_t = colorforest::DEFAULT_BRUTE_LIMIT)]
        max_weight: u64,
    },
    /// Canonical trees with the given character and root color
    Trees {
        #[arg(long, value_parser = parse_composition)]
        lambda: Composition,
        #[arg(long)]
        root: usize,
        #[arg(long, default_value_t = colorforest::DEFAULT_BRUTE_LIMIT)]
        max_weight: u64,
    },
    /// Triangulations of the n-gon (with their types)
    Tri {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectFormat {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyPart {
    I,
    Ii,
    Iii,
    Iv,
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    let parts: Result<Vec<u64>, _> = s.split(',').map(|t| t.trim().parse::<u64>()).collect();
    let parts =
        parts.map_err(|e| format!("lambda must be comma-separated nonnegative integers: {e}"))?;
    Composition::new(parts).map_err(|e| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let parts: Result<Vec<u64>, _> = s.split(',').map(|t| t.trim().parse::<u64>()).collect();
    let parts = parts.map_err(|e| format!("expected comma-separated nonnegative integers: {e}"))?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn parse_colors(s: &str) -> Result<Vec<usize>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| format!("colors must be 1-based integers: {e}"))
        })
        .collect()
}

fn color_seq(k: usize, colors: &[usize]) -> Result<ColorSeq, String> {
    ColorSeq::new(k, colors.to_vec()).map_err(|e| e.to_string())
}

/// Write fully assembled output to the chosen sink.
fn emit(output: Option<&PathBuf>, body: &str) -> Result<(), String> {
    match output {
        Some(path) => {
            std::fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| format!("cannot write to stdout: {e}")),
    }
}

fn render_table(table: &CountTable, format: TableFormat) -> String {
    match format {
        TableFormat::Csv => table.to_csv(),
        TableFormat::Json => format!("{}\n", table.to_json()),
    }
}

fn run_count(what: CountCommand) -> Result<String, String> {
    let value = match what {
        CountCommand::Forests { lambda, roots } => {
            let roots = color_seq(lambda.k(), &roots)?;
            count_forests(&lambda, &roots).map_err(|e| e.to_string())?
        }
        CountCommand::Trees { lambda, root } => {
            count_trees(&lambda, root).map_err(|e| e.to_string())?
        }
        CountCommand::Tri { n, ty } => {
            count_triangulations_by_type(n, &ty).map_err(|e| e.to_string())?
        }
        CountCommand::Fuss { n, p, r } => fuss_catalan(n, p, r).map_err(|e| e.to_string())?,
    };
    Ok(format!("{value}\n"))
}

fn run_table(what: TableCommand, format: TableFormat) -> Result<String, String> {
    let table = match what {
        TableCommand::Xi { n, p } => {
            if p != 2 {
                return Err("xi tables are only tabulated for p = 2".to_string());
            }
            table_xi(n).map_err(|e| e.to_string())?
        }
        TableCommand::Alpha { n, rho } => table_alpha(n, &rho).map_err(|e| e.to_string())?,
        TableCommand::Tri { n, brute } => {
            if n < 3 {
                return Err("triangulation censuses need n >= 3".to_string());
            }
            census(n as usize, brute).map_err(|e| e.to_string())?
        }
        TableCommand::Forest { n, roots } => {
            let roots = color_seq(3, &roots)?;
            table_forest(n, &roots).map_err(|e| e.to_string())?
        }
    };
    Ok(render_table(&table, format))
}

fn run_sequence(what: SequenceCommand) -> Result<String, String> {
    let mut out = String::new();
    match what {
        SequenceCommand::Catalan { max } => {
            for n in 0..=max {
                out.push_str(&format!("{n} {}\n", fuss_catalan(n, 2, 1).unwrap()));
            }
        }
        SequenceCommand::Fuss { p, r, max } => {
            for n in 0..=max {
                let v = fuss_catalan(n, p, r).map_err(|e| e.to_string())?;
                out.push_str(&format!("{n} {v}\n"));
            }
        }
        SequenceCommand::RowSums { h, from, max } => {
            if from == 0 {
                return Err("row sums are indexed from n >= 1".to_string());
            }
            for n in from..=max {
                let v = colorforest::counting::xi_row_sum(n, h).map_err(|e| e.to_string())?;
                out.push_str(&format!("{n} {v}\n"));
            }
        }
        SequenceCommand::Antidiagonal { n } => {
            if n == 0 {
                return Err("antidiagonals need n >= 1".to_string());
            }
            let values = colorforest::counting::xi_antidiagonal(n).map_err(|e| e.to_string())?;
            for (h, v) in values.iter().enumerate() {
                out.push_str(&format!("{h} {v}\n"));
            }
        }
    }
    Ok(out)
}

fn poly_outcomes(k: usize, part: Option<PolyPart>, seed: u64) -> Vec<CheckOutcome> {
    let ks = [k];
    match part {
        Some(PolyPart::I) => vec![checks::check_pk_identity(&ks, PkIdentity::YZero)],
        Some(PolyPart::Ii) => vec![checks::check_pk_identity(&ks, PkIdentity::TwoSupport)],
        Some(PolyPart::Iii) => vec![checks::check_pk_identity(&ks, PkIdentity::Symmetry)],
        Some(PolyPart::Iv) => vec![checks::check_pk_identity(&ks, PkIdentity::Shift)],
        None => vec![
            checks::check_pk_homogeneous(k),
            checks::check_pk_eval_agreement(&ks, 200, seed),
            checks::check_pk_identity(&ks, PkIdentity::YZero),
            checks::check_pk_identity(&ks, PkIdentity::TwoSupport),
            checks::check_pk_identity(&ks, PkIdentity::Symmetry),
            checks::check_pk_identity(&ks, PkIdentity::Shift),
        ],
    }
}

fn run_verify(what: VerifyCommand, seed: u64) -> Result<Vec<CheckOutcome>, String> {
    Ok(match what {
        VerifyCommand::All { ci } => {
            let mut depths = if ci { Depths::ci() } else { Depths::standard() };
            depths.seed = seed;
            checks::run_all(&depths)
        }
        VerifyCommand::Oracle { k, max_n, max_m } => {
            if !(2..=5).contains(&k) {
                return Err("oracle sweeps cover 2 <= k <= 5".to_string());
            }
            vec![checks::check_oracle_equivalence(k, max_n, max_m)]
        }
        VerifyCommand::Poly { k, part } => {
            if !(2..=8).contains(&k) {
                return Err(
                    "polynomial identities need 2 <= k <= 8 (expansion cost doubles per color)"
                        .to_string(),
                );
            }
            poly_outcomes(k, part, seed)
        }
        VerifyCommand::Chi { max_n } => vec![checks::check_chi_roundtrip(max_n)],
        VerifyCommand::Census { max_n } => vec![
            checks::check_triangulation_counts(max_n.min(10)),
            checks::check_census_agreement(max_n),
        ],
        VerifyCommand::Recurrences { max_n } => vec![
            checks::check_forest_recurrence(3, max_n),
            checks::check_tree_recurrence(3, max_n),
        ],
        VerifyCommand::Fuss {
            max_p,
            max_n,
            max_r,
            terms,
        } => vec![
            checks::check_fuss_recurrence(max_p, max_n),
            checks::check_series_power(max_p, max_r, terms),
        ],
        VerifyCommand::Distributions { max_n } => vec![
            checks::check_xi_sum(3, max_n.max(2)),
            checks::check_alpha_sum(3, max_n),
            checks::check_tree_totals(4, max_n.max(2)),
            checks::check_forest_totals(3, max_n, 3),
            checks::check_tree_forest_bridge(3, max_n),
        ],
        VerifyCommand::Theta { max_n } => vec![checks::check_theta_roundtrip(3, max_n)],
        VerifyCommand::Streams { max_n, max_m } => {
            vec![checks::check_stream_validity(3, max_n, max_m)]
        }
        VerifyCommand::Zy { k } => {
            if !(1..=8).contains(&k) {
                return Err("the z-rewrite report covers 1 <= k <= 8".to_string());
            }
            vec![checks::zy_report(k)]
        }
    })
}

fn render_verify(outcomes: &[CheckOutcome], json: bool) -> (String, bool) {
    let all_passed = outcomes.iter().all(|o| o.passed);
    if json {
        let report = serde_json::json!({
            "passed": all_passed,
            "checks": outcomes.iter().map(CheckOutcome::to_json).collect::<Vec<_>>(),
        });
        return (format!("{report}\n"), all_passed);
    }
    let mut out = String::new();
    for o in outcomes {
        if o.passed {
            out.push_str(&format!("PASS {} ({} cases)", o.name, o.cases));
            if let Some(d) = &o.detail {
                out.push_str(&format!(" — {d}"));
            }
        } else {
            out.push_str(&format!(
                "FAIL {} ({} cases): {}",
                o.name,
                o.cases,
                o.detail.as_deref().unwrap_or("no detail")
            ));
        }
        out.push('\n');
    }
    out.push_str(&format!(
        "{}: {} of {} checks passed\n",
        if all_passed { "ok" } else { "FAILED" },
        outcomes.iter().filter(|o| o.passed).count(),
        outcomes.len()
    ));
    (out, all_passed)
}

fn forests_to_output(forests: &[ColoredForest], format: ObjectFormat) -> String {
    let mut out = String::new();
    match format {
        ObjectFormat::Text => {
            for f in forests {
                out.push_str(&f.canonical_text());
                out.push('\n');
            }
        }
        ObjectFormat::Json => {
            for f in forests {
                out.push_str(&f.to_json().to_string());
                out.push('\n');
            }
        }
        ObjectFormat::Dot => {
            for (i, f) in forests.iter().enumerate() {
                out.push_str(&f.to_dot(&format!("forest{i}")));
            }
        }
    }
    out
}

fn run_enumerate(what: EnumerateCommand, format: ObjectFormat) -> Result<String, String> {
    match what {
        EnumerateCommand::Forests {
            lambda,
            roots,
            max_weight,
        } => {
            if lambda.total() > max_weight {
                return Err(format!(
                    "character weight {} exceeds --max-weight {max_weight}",
                    lambda.total()
                ));
            }
            let roots = color_seq(lambda.k(), &roots)?;
            let forests = enumerate_forests(&lambda, &roots).map_err(|e| e.to_string())?;
            Ok(forests_to_output(&forests, format))
        }
        EnumerateCommand::Trees {
            lambda,
            root,
            max_weight,
        } => {
            if lambda.total() > max_weight {
                return Err(format!(
                    "character weight {} exceeds --max-weight {max_weight}",
                    lambda.total()
                ));
            }
            let k = lambda.k();
            let trees = enumerate_trees(&lambda, root).map_err(|e| e.to_string())?;
            let forests: Vec<ColoredForest> = trees
                .into_iter()
                .map(|t| ColoredForest::new(k, vec![t]).unwrap())
                .collect();
            Ok(forests_to_output(&forests, format))
        }
        EnumerateCommand::Tri { n, max_n } => {
            if n < 3 {
                return Err("triangulations need n >= 3".to_string());
            }
            if n > max_n {
                return Err(format!("n = {n} exceeds --max-n {max_n}"));
            }
            let mut out = String::new();
            for (i, t) in enumerate_triangulations(n).iter().enumerate() {
                match format {
                    ObjectFormat::Text => {
                        out.push_str(&format!("{} type={}\n", t.to_text(), type_of(t)));
                    }
                    ObjectFormat::Json => {
                        let mut v = t.to_json();
                        let coloring = proper_three_coloring(t);
                        v["colors"] = serde_json::json!(coloring.colors());
                        v["type"] = serde_json::json!(coloring.census().parts());
                        out.push_str(&v.to_string());
                        out.push('\n');
                    }
                    ObjectFormat::Dot => {
                        out.push_str(&t.to_dot(&format!("tri{i}")));
                    }
                }
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<(String, bool), String> = match cli.command {
        Command::Count { what } => run_count(what).map(|s| (s, true)),
        Command::Table {
            what,
            format,
            output,
        } => match run_table(what, format) {
            Ok(s) => {
                if let Err(e) = emit(output.as_ref(), &s) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
                return ExitCode::SUCCESS;
            }
            Err(e) => Err(e),
        },
        Command::Sequence { what, output } => match run_sequence(what) {
            Ok(s) => {
                if let Err(e) = emit(output.as_ref(), &s) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
                return ExitCode::SUCCESS;
            }
            Err(e) => Err(e),
        },
        Command::Verify {
            what,
            json_report,
            seed,
        } => match run_verify(what, seed) {
            Ok(outcomes) => {
                let (body, passed) = render_verify(&outcomes, json_report);
                print!("{body}");
                return if passed {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                };
            }
            Err(e) => Err(e),
        },
        Command::Enumerate {
            what,
            format,
            output,
        } => match run_enumerate(what, format) {
            Ok(s) => {
                if let Err(e) = emit(output.as_ref(), &s) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
                return ExitCode::SUCCESS;
            }
            Err(e) => Err(e),
        },
    };
    match result {
        Ok((body, _)) => {
            print!("{body}");
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
