use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use p3cert::exactfield::Mode;
use p3cert::registry::{self, Env, Lens, Selection};

#[derive(Parser)]
#[command(name = "certify", about = "Run exact certificates and write a report", version)]
struct Cli {
    #[command(subcommand)]
    view: Option<View>,

    #[arg(long, value_enum, default_value_t = ModeArg::Specialized, global = true)]
    mode: ModeArg,

    /// Real part of u, an integer or p/q. q = u².
    #[arg(long, default_value = "2", global = true)]
    u: String,

    /// Imaginary part of u.
    #[arg(long, global = true)]
    u_imag: Option<String>,

    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Glob on check ids, e.g. 'pts.*'.
    #[arg(long, global = true)]
    filter: Option<String>,

    /// Top degree of the prebuilt algebra (line modules, secant checks).
    #[arg(long, default_value_t = 8, global = true)]
    degree: usize,

    /// Cutoff for incidence and fat-point resolution checks.
    #[arg(long, default_value_t = 6, global = true)]
    line_cutoff: usize,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Report file. Defaults to report.json or report.md in the output directory.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[arg(long, env = "P3CERT_OUTPUT_DIR", default_value = ".", global = true)]
    output_dir: PathBuf,
}

#[derive(Subcommand, Clone, Copy)]
enum View {
    /// Every check.
    Certify,
    Hilbert,
    /// Presentations, twist, standard form, central elements.
    Algebra,
    Pointscheme,
    Sigma,
    Lines,
    Incidence,
    Uq,
    Degenerate,
}

impl View {
    fn lens(self) -> Option<Lens> {
        match self {
            View::Certify => None,
            View::Hilbert => Some(Lens::Hilbert),
            View::Algebra => Some(Lens::Algebra),
            View::Pointscheme => Some(Lens::PointScheme),
            View::Sigma => Some(Lens::Sigma),
            View::Lines => Some(Lens::Lines),
            View::Incidence => Some(Lens::Incidence),
            View::Uq => Some(Lens::Uq),
            View::Degenerate => Some(Lens::Degenerate),
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum ModeArg {
    Symbolic,
    Specialized,
}

#[derive(ValueEnum, Clone, Copy, PartialEq)]
enum Format {
    Json,
    Markdown,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("certify: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    let u = registry::parse_u(&cli.u, cli.u_imag.as_deref())?;
    let mode = match cli.mode {
        ModeArg::Symbolic => Mode::Symbolic,
        ModeArg::Specialized => Mode::Specialized,
    };
    let env = Env::new(mode, u, cli.seed, cli.degree)?.with_line_cutoff(cli.line_cutoff);
    let sel = Selection { lens: cli.view.and_then(View::lens), filter: cli.filter };
    let report = registry::run(&env, &sel).map_err(|e| format!("bad filter: {e}"))?;
    let (body, default_name) = match cli.format {
        Format::Json => (serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?, "report.json"),
        Format::Markdown => (report.to_markdown(), "report.md"),
    };
    let path = cli.output.unwrap_or_else(|| cli.output_dir.join(default_name));
    std::fs::write(&path, body).map_err(|e| format!("{}: {e}", path.display()))?;
    let failed: Vec<&str> = report.certificates.iter().filter(|e| !e.certificate.passed()).map(|e| e.certificate.check_id.as_str()).collect();
    eprintln!(
        "{} certificates, {} failed, hash {}, report {}",
        report.certificates.len(),
        failed.len(),
        &report.determinism_hash[..16],
        path.display()
    );
    for id in &failed {
        eprintln!("  FAIL {id}");
    }
    Ok(failed.is_empty())
}
