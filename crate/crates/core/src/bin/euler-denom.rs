use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use euler_denom::denominator::{luschny_sequence, verify_theorem};
use euler_denom::euler::{euler_poly_recurrence, shifted_euler};
use euler_denom::identities::{render_summary, run_identity_sweeps};
use euler_denom::oeis::{compare_sequences, parse_bfile, write_bfile, write_tsv};

#[derive(Parser, Debug)]
#[command(
    name = "euler-denom",
    version,
    about = "Exact Euler polynomials and the denominator of E_n(x) - E_n(1)"
)]
struct Cli {
    /// Refuse any --max-n or --n above this value.
    #[arg(long, global = true, default_value_t = 4096)]
    limit: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print n -> 2^(v2(n+1) - g(n)) for 0 <= n <= max-n.
    Gen {
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Bfile)]
        format: TableFormat,
    },
    /// Compare the lcm of the coefficient denominators of E*_n with the closed form.
    Verify {
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Print the exact coefficients of E_n (or E*_n), ascending by power.
    Poly {
        #[arg(long)]
        n: u64,
        /// Print E_n(x) - E_n(1) instead of E_n(x).
        #[arg(long)]
        shifted: bool,
    },
    /// Sweep the classical identities and Kummer/von Staudt-Clausen checks.
    Identities {
        #[arg(long)]
        max_n: u64,
        /// Seed for the random evaluation points of the reflection check.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Compare the computed sequence with a local OEIS b-file.
    Compare {
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long)]
        max_n: u64,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum TableFormat {
    Bfile,
    Tsv,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum ReportFormat {
    Text,
    Tsv,
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;

fn check_limit(value: u64, limit: u64) -> Result<(), String> {
    if value > limit {
        return Err(format!(
            "{value} exceeds the limit of {limit}; pass --limit to raise it"
        ));
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool, String> {
    let io_err = |e: io::Error| e.to_string();
    match cli.command {
        Command::Gen { max_n, format } => {
            check_limit(max_n, cli.limit)?;
            let seq = luschny_sequence(max_n);
            let text = match format {
                TableFormat::Bfile => write_bfile(&seq),
                TableFormat::Tsv => write_tsv(&seq),
            };
            out.write_all(text.as_bytes()).map_err(io_err)?;
            Ok(true)
        }
        Command::Verify { max_n, report } => {
            check_limit(max_n, cli.limit)?;
            let r = verify_theorem(max_n);
            let text = match report {
                ReportFormat::Text => r.render_text(),
                ReportFormat::Tsv => r.render_tsv(),
            };
            out.write_all(text.as_bytes()).map_err(io_err)?;
            Ok(r.all_pass())
        }
        Command::Poly { n, shifted } => {
            check_limit(n, cli.limit)?;
            let p = if shifted {
                shifted_euler(n)
            } else {
                euler_poly_recurrence(n)
            };
            let width = p.coeffs().len().max(1);
            for i in 0..width {
                let c = p.coeff(i);
                writeln!(out, "{i}\t{}/{}", c.numer(), c.denom()).map_err(io_err)?;
            }
            Ok(true)
        }
        Command::Identities { max_n, seed } => {
            check_limit(max_n, cli.limit)?;
            let checks = run_identity_sweeps(max_n, seed);
            out.write_all(render_summary(&checks).as_bytes())
                .map_err(io_err)?;
            Ok(checks.iter().all(|c| c.passed()))
        }
        Command::Compare { bfile, max_n } => {
            check_limit(max_n, cli.limit)?;
            let text =
                std::fs::read_to_string(&bfile).map_err(|e| format!("{}: {e}", bfile.display()))?;
            let expected = parse_bfile(&text)
                .map_err(|e| format!("{}: {e}", bfile.display()))?
                .to_table();
            let computed = luschny_sequence(max_n);
            let diff = compare_sequences(&expected, &computed);
            out.write_all(diff.render().as_bytes()).map_err(io_err)?;
            Ok(diff.agrees())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_MISMATCH),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BAD_INPUT)
        }
    }
}
