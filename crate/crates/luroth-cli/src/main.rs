//! `luroth` — exact detection of Lüroth quartics and the geometry behind it.
//!
//! Every subcommand takes one plane-quartic expression in x, y, z (aliases
//! x0, x1, x2) and prints a report; `--json` switches to the machine-readable
//! form described by `schema/report.schema.json`. Exit codes: 0 on success,
//! 1 for domain errors (bad input, or a request the curve cannot satisfy),
//! 2 when a resource limit such as `--budget` is hit.

use clap::{Args, Parser, Subcommand};
use luroth::cli::{run, CliOptions, Command as LurothCommand, ErrorKind, FieldChoice};
use luroth::plot::Window;
use luroth::ring::monomial::Order;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "luroth",
    version,
    about = "Exact invariants, bitangents, and Lüroth detection for plane quartics",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Common {
    /// The quartic, e.g. "x^3*y + x^3*z + 3*x^2*y^2 + 10*x^2*y*z + 4*x^2*z^2 +
    /// 2*x*y^3 + 13*x*y^2*z + 16*x*y*z^2 + 3*x*z^3 + 2*y^3*z + 5*y^2*z^2 + 3*y*z^3"
    expression: String,
    /// Coefficient field: `q` for the rationals or `p:<prime>` (prime > 3)
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: FieldChoice,
    /// Emit the report as JSON instead of text
    #[arg(long)]
    json: bool,
    /// Reduction-step allowance per Gröbner-basis computation
    #[arg(long, default_value_t = CliOptions::default().budget)]
    budget: u64,
    /// Number of independent primes the verified detector must agree on (1-4)
    #[arg(long, default_value_t = 2)]
    verify_primes: usize,
    /// Search radius for pentalateral companion lines
    #[arg(long, default_value_t = 50)]
    height_bound: i64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the degree-3 contravariant pairing data: cubic invariant,
    /// catalecticant, and the 15×15 pairing matrix L
    Invariants(Common),
    /// Print the covariant quartic on the space of dual conics
    Wm(Common),
    /// Compute the ideal of the 28 bitangents (the rank-2 singular conics)
    Bitangents {
        #[command(flatten)]
        common: Common,
        /// Monomial order of the reported Gröbner basis
        #[arg(long, default_value = "grevlex", value_parser = parse_order)]
        order: Order,
        /// Also project the 28 points to a univariate eliminant
        #[arg(long)]
        eliminant: bool,
    },
    /// Decide whether the quartic is Lüroth and certify the answer
    Detect(Common),
    /// Recover an inscribed pentalateral with its fourth-power weights
    Pentalateral(Common),
    /// Render the curve (and any detected pentalateral) as an SVG
    Plot {
        #[command(flatten)]
        common: Common,
        /// Write the SVG here instead of standard output
        #[arg(long)]
        svg: Option<std::path::PathBuf>,
        /// View rectangle as xmin,xmax,ymin,ymax
        #[arg(
            long,
            default_value = "-3,3,-3,3",
            value_parser = parse_window,
            allow_hyphen_values = true
        )]
        window: Window,
        /// Affine chart: index of the coordinate set to 1 (0 = x, 1 = y, 2 = z)
        #[arg(long, default_value_t = 2)]
        chart: usize,
    },
}

fn parse_field(s: &str) -> Result<FieldChoice, String> {
    FieldChoice::parse(s)
}

fn parse_order(s: &str) -> Result<Order, String> {
    match s {
        "grevlex" => Ok(Order::Grevlex),
        "lex" => Ok(Order::Lex),
        other => Err(format!("unknown order `{other}`; expected grevlex or lex")),
    }
}

fn parse_window(s: &str) -> Result<Window, String> {
    Window::parse(s)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are successful exits; real usage errors are
            // domain errors of the invocation.
            let code = if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
            let _ = e.print();
            return code;
        }
    };
    let (command, common, mut opts, svg_path) = match cli.command {
        Cmd::Invariants(c) => (LurothCommand::Invariants, c, CliOptions::default(), None),
        Cmd::Wm(c) => (LurothCommand::Wm, c, CliOptions::default(), None),
        Cmd::Bitangents { common, order, eliminant } => {
            let opts = CliOptions { order, want_eliminant: eliminant, ..CliOptions::default() };
            (LurothCommand::Bitangents, common, opts, None)
        }
        Cmd::Detect(c) => (LurothCommand::Detect, c, CliOptions::default(), None),
        Cmd::Pentalateral(c) => (LurothCommand::Pentalateral, c, CliOptions::default(), None),
        Cmd::Plot { common, svg, window, chart } => {
            let opts = CliOptions { window, chart, ..CliOptions::default() };
            (LurothCommand::Plot, common, opts, svg)
        }
    };
    opts.field = common.field;
    opts.budget = common.budget;
    opts.verify_primes = common.verify_primes;
    opts.height_bound = common.height_bound;
    match run(command, &common.expression, &opts) {
        Ok(out) => {
            if common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.report)
                        .expect("reports serialize to JSON")
                );
            } else {
                print!("{}", out.text);
            }
            if let Some(svg) = out.svg {
                match svg_path {
                    Some(path) => {
                        if let Err(e) = std::fs::write(&path, &svg) {
                            eprintln!("error: cannot write {}: {e}", path.display());
                            return ExitCode::from(1);
                        }
                        if !common.json {
                            println!("svg written to {}", path.display());
                        }
                    }
                    None => {
                        if !common.json {
                            print!("{svg}");
                        }
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            match e.kind {
                ErrorKind::Domain => ExitCode::from(1),
                ErrorKind::Resource => ExitCode::from(2),
            }
        }
    }
}
