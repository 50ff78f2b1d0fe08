use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qverify::arith::{KElem, Rat};
use qverify::numeric::{ATable, EsLemma, EsReading, Precision};
use qverify::verify::{self, run_numeric, Extent, NumericKind};
use qverify::{
    cf_numeric, parse, registry, suite_passed, to_json, verify_all, CfName, Config, Expected, Profile, QSeries, Report,
    Ring, Status,
};

#[derive(Parser)]
#[command(name = "qverify", version, about = "Exact and numeric checks of q-series identities")]
struct Cli {
    /// TOML file with default orders, precision and sample points.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one registered identity.
    Verify {
        #[arg(long)]
        id: String,
        /// Truncation order as a rational, e.g. 10 or 21/2.
        #[arg(long)]
        order: Option<Rat>,
        #[arg(long, value_enum, default_value_t = RingArg::Auto)]
        ring: RingArg,
        /// Working precision for numeric entries.
        #[arg(long)]
        digits: Option<u32>,
        #[arg(long)]
        json: bool,
        /// Report wall_ms as 0.
        #[arg(long)]
        no_timing: bool,
    },
    /// Check every registered identity.
    VerifyAll {
        #[arg(long, value_enum)]
        profile: Option<ProfileArg>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        no_timing: bool,
    },
    /// List registered identities.
    List {
        /// Also print both sides of exact entries.
        #[arg(long)]
        show: bool,
    },
    /// Expand an expression to a truncation order.
    Expand {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        order: Rat,
        #[arg(long, value_enum, default_value_t = RingArg::Auto)]
        ring: RingArg,
        /// Significant digits of the decimal approximations.
        #[arg(long, default_value_t = 12)]
        digits: usize,
    },
    /// Evaluate a displayed continued fraction numerically.
    CfEval {
        #[arg(long)]
        name: CfName,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = 40)]
        digits: u32,
    },
    /// Run one numeric check and print every sample.
    Numeric {
        #[arg(long, value_enum)]
        check: CheckArg,
        #[arg(long)]
        digits: Option<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    Auto,
    Rational,
    Field,
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Ring {
        match r {
            RingArg::Auto => Ring::Auto,
            RingArg::Rational => Ring::Rational,
            RingArg::Field => Ring::Field,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Prodsine,
    Tm,
    Es1,
    Es2,
    Atables,
    Ki,
    Liu,
    Theta1,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> qverify::Result<ExitCode> {
    let config = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Verify {
            id,
            order,
            ring,
            digits,
            json,
            no_timing,
        } => {
            let mut opts = config.verify_options();
            opts.order = order.or(config.order_overrides()?.remove(&id));
            opts.ring = ring.into();
            if let Some(d) = digits {
                opts.precision = Precision::digits(d);
            }
            opts.timing = !no_timing;
            let report = verify::verify(&id, &opts)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print_report(&report);
            }
            Ok(exit_for(&[report]))
        }
        Command::VerifyAll {
            profile,
            json,
            jobs,
            no_timing,
        } => {
            let mut suite = config.suite_options()?;
            if let Some(p) = profile {
                suite.profile = match p {
                    ProfileArg::Quick => Profile::Quick,
                    ProfileArg::Full => Profile::Full,
                };
            }
            if jobs.is_some() {
                suite.jobs = jobs;
            }
            suite.base.timing = !no_timing;
            let reports = verify_all(&suite)?;
            if json {
                println!("{}", to_json(&reports));
            } else {
                for r in &reports {
                    print_report(r);
                }
                print_summary(&reports);
            }
            Ok(exit_for(&reports))
        }
        Command::List { show } => {
            for spec in registry() {
                let extent = match spec.mode() {
                    verify::Mode::Exact => format!("order {}", spec.default_order),
                    verify::Mode::Numeric => "numeric".to_string(),
                };
                let tag = match spec.expected {
                    Expected::Pass => "",
                    Expected::Document => " [document]",
                };
                println!("{:<34} {:<10}{}  {}", spec.id, extent, tag, spec.description);
                if let (true, verify::Check::Exact { lhs, rhs, .. }) = (show, &spec.check) {
                    println!("    lhs: {lhs}");
                    println!("    rhs: {rhs}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Expand {
            expr,
            order,
            ring,
            digits,
        } => {
            let e = parse(&expr)?;
            let field = match Ring::from(ring) {
                Ring::Auto => e.requires_field(),
                Ring::Field => true,
                Ring::Rational => false,
            };
            if field {
                print!("{}", e.eval::<KElem>(&order)?.render(digits));
            } else {
                let s: QSeries<Rat> = e.eval(&order)?;
                print!("{}", s.render(digits));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CfEval { name, q, depth, digits } => {
            let p = Precision::digits(digits);
            let v = cf_numeric(name, &p.float(q), depth)?;
            println!("{}", qverify::arith::format_significant(&v, digits as usize));
            Ok(ExitCode::SUCCESS)
        }
        Command::Numeric { check, digits } => {
            let mut opts = config.verify_options();
            if let Some(d) = digits {
                opts.precision = Precision::digits(d);
            }
            let kinds: Vec<NumericKind> = match check {
                CheckArg::Prodsine => vec![NumericKind::ProdSine],
                CheckArg::Tm => vec![NumericKind::Tm],
                CheckArg::Es1 => vec![NumericKind::EsLemma(EsLemma::Es1, EsReading::Derivative)],
                CheckArg::Es2 => vec![NumericKind::EsLemma(EsLemma::Es2, EsReading::Derivative)],
                CheckArg::Atables => [ATable::A1, ATable::A2, ATable::A3].map(NumericKind::ATable).to_vec(),
                CheckArg::Ki => vec![NumericKind::Ki],
                CheckArg::Liu => vec![NumericKind::Liu],
                CheckArg::Theta1 => vec![NumericKind::Theta1SumProduct, NumericKind::Theta1Derivative],
            };
            let mut ok = true;
            for kind in kinds {
                let o = run_numeric(kind, &opts)?;
                println!("{kind:?} (tolerance {})", o.tolerance.to_string_radix(10, Some(3)));
                for s in &o.samples {
                    println!(
                        "  {:<24} lhs {}  error {}",
                        s.point,
                        qverify::arith::format_significant(&s.lhs, 25),
                        s.error.to_string_radix(10, Some(3))
                    );
                }
                ok &= o.passed();
                println!("  {}", if o.passed() { "pass" } else { "fail" });
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}

fn exit_for(reports: &[Report]) -> ExitCode {
    if suite_passed(reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn print_report(r: &Report) {
    let status = match r.status {
        Status::Pass => "PASS ",
        Status::Fail => "FAIL ",
        Status::Error => "ERROR",
    };
    let tag = if r.expected == Expected::Document { " [document]" } else { "" };
    let extent = match &r.extent {
        Extent::Order(o) => format!("to q^({o})"),
        Extent::Samples(s) => format!("{} sample(s)", s.len()),
    };
    println!("{status} {:<34} {extent:<14} {:>7} ms{tag}", r.id, r.wall_ms);
    if let Some(m) = &r.first_mismatch {
        println!("      first mismatch at q^({}): lhs - rhs = {} ~ {}", m.exponent, m.delta, m.delta_numeric);
    }
    if let Some(msg) = &r.message {
        println!("      {msg}");
    }
}

fn print_summary(reports: &[Report]) {
    let count = |s: Status, e: Expected| reports.iter().filter(|r| r.status == s && r.expected == e).count();
    println!(
        "\n{} entries: {} pass, {} fail, {} error; documented readings: {} hold, {} do not",
        reports.len(),
        count(Status::Pass, Expected::Pass),
        count(Status::Fail, Expected::Pass),
        count(Status::Error, Expected::Pass),
        count(Status::Pass, Expected::Document),
        count(Status::Fail, Expected::Document) + count(Status::Error, Expected::Document),
    );
}
