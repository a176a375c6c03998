use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use forest_hopf::coproduct::Method;
use forest_hopf::enumerate::{counts, enumerate, Alphabet};
use forest_hopf::hopf::antipode;
use forest_hopf::poly::kx_target;
use forest_hopf::suites::{self, Suite, SuiteConfig};
use forest_hopf::textio::{self, parse_forest, parse_lincomb};

const USAGE_ERROR: u8 = 2;
const PROPERTY_VIOLATION: u8 = 1;

#[derive(Parser)]
#[command(
    name = "forest-hopf",
    version,
    about = "Infinitesimal Hopf algebra of decorated planar rooted forests"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of a forest expression.
    Parse {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Print a coproduct of a forest.
    Coprod {
        #[arg(long, value_enum, default_value_t = MethodArg::Eps)]
        method: MethodArg,
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the antipode of a forest or linear combination.
    Antipode {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the image of a forest or linear combination in k[x].
    Morphism {
        #[arg(long, value_enum, default_value_t = TargetArg::Kx)]
        target: TargetArg,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// List or count all forests up to a vertex bound.
    Enumerate {
        #[arg(long, env = "FOREST_HOPF_MAX_VERTICES", default_value_t = 5)]
        max_vertices: usize,
        /// Comma-separated generator names; empty for undecorated forests.
        #[arg(long, default_value = "x,y")]
        alphabet: String,
        #[arg(long)]
        count_only: bool,
    },
    /// Run exhaustive property suites.
    Check {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, env = "FOREST_HOPF_MAX_VERTICES", default_value_t = 5)]
        max_vertices: usize,
        #[arg(long, default_value = "x,y")]
        alphabet: String,
        /// Check a deliberately corrupted Δε instead (harness self-test).
        #[arg(long)]
        mutate: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Eps,
    Comb,
    Foissy,
    Rt,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Eps => Method::Eps,
            MethodArg::Comb => Method::Comb,
            MethodArg::Foissy => Method::Foissy,
            MethodArg::Rt => Method::Rt,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Kx,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Coassoc,
    Leibniz,
    Cocycle,
    Equiv,
    Grading,
    Termcount,
    Nilpotency,
    Antipode,
    Morphism,
    Foissy,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        let one = match self {
            SuiteArg::All => return Suite::ALL.to_vec(),
            SuiteArg::Coassoc => Suite::Coassoc,
            SuiteArg::Leibniz => Suite::Leibniz,
            SuiteArg::Cocycle => Suite::Cocycle,
            SuiteArg::Equiv => Suite::Equiv,
            SuiteArg::Grading => Suite::Grading,
            SuiteArg::Termcount => Suite::TermCount,
            SuiteArg::Nilpotency => Suite::Nilpotency,
            SuiteArg::Antipode => Suite::Antipode,
            SuiteArg::Morphism => Suite::Morphism,
            SuiteArg::Foissy => Suite::Foissy,
        };
        vec![one]
    }
}

fn parse_alphabet(s: &str) -> Result<Alphabet, String> {
    Alphabet::new(s.split(',').map(str::trim).filter(|n| !n.is_empty())).map_err(|e| e.to_string())
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Parse { expr, json } => {
            let forest = parse_forest(&expr).map_err(|e| e.to_string())?;
            if json {
                println!("{}", textio::forest_to_json_string(&forest));
            } else {
                println!("{forest}");
            }
        }
        Command::Coprod { method, expr, json } => {
            let forest = parse_forest(&expr).map_err(|e| e.to_string())?;
            let t = Method::from(method).apply(&forest).map_err(|e| e.to_string())?;
            if json {
                println!("{}", textio::tensor2_to_json_string(&t));
            } else {
                println!("{t}");
            }
        }
        Command::Antipode { expr, json } => {
            let v = parse_lincomb(&expr).map_err(|e| e.to_string())?;
            let s = antipode(&v);
            if json {
                println!("{}", textio::lincomb_to_json_string(&s));
            } else {
                println!("{s}");
            }
        }
        Command::Morphism {
            target: TargetArg::Kx,
            expr,
        } => {
            let v = parse_lincomb(&expr).map_err(|e| e.to_string())?;
            let image = kx_target().phi_bar_lin(&v).map_err(|e| e.to_string())?;
            println!("{image}");
        }
        Command::Enumerate {
            max_vertices,
            alphabet,
            count_only,
        } => {
            let alphabet = parse_alphabet(&alphabet)?;
            if count_only {
                let line: Vec<String> = counts(max_vertices, alphabet.len())
                    .iter()
                    .map(|c| c.to_string())
                    .collect();
                println!("{}", line.join(" "));
            } else {
                for n in 0..=max_vertices {
                    for forest in enumerate(n, &alphabet) {
                        println!("{forest}");
                    }
                }
            }
        }
        Command::Check {
            suite,
            max_vertices,
            alphabet,
            mutate,
        } => {
            let mut cfg = SuiteConfig::new(max_vertices, parse_alphabet(&alphabet)?);
            cfg.mutate = mutate;
            let mut failed = false;
            for suite in suite.suites() {
                let report = suites::run(suite, &cfg);
                failed |= !report.passed();
                println!("{report}");
            }
            if failed {
                return Ok(PROPERTY_VIOLATION);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}
