//! Command-line front end. [`run`] returns the exit status and the text to
//! print, so it can be driven from tests without a subprocess.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde_json::json;

use crate::constructions::{self, build_report, partition_classify, partition_sizes, ConstructionError};
use crate::field::FieldSpec;
use crate::moufang_set::{MoufangSet, SetKind};
use crate::perm::{export_permutations, import_permutations};
use crate::perm_group::{self, Strategy};
use crate::root_group::RootGroupElement;
use crate::suite::{self, render_json, render_text};
use crate::sweep::Exec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Print the field GF(q) and its Tits endomorphism when there is one.
    Field,
    /// Build a set and print its structure report.
    Build,
    /// Check the Moufang condition exhaustively.
    Verify,
    /// Print mu_a, ~a and V_a for `--element`.
    Mu,
    /// Suzuki partition class sizes, or the class of `--element`.
    Partition,
    /// Order of <U, tau>, or of the generators read from `--input`.
    Order,
    /// Print generators of <U, tau> in the line format.
    Export,
    /// Run the lemma suite.
    Suite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Psl2,
    Suzuki,
}

impl From<Kind> for SetKind {
    fn from(k: Kind) -> SetKind {
        match k {
            Kind::Psl2 => SetKind::ProjectiveLine,
            Kind::Suzuki => SetKind::Suzuki,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Naive,
    Schreier,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "moufang", version, about = "Finite Moufang sets M(F_q) and MSuz(q): construction and exhaustive checks")]
pub struct CliConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Field size, a power of 2.
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long, value_enum, default_value = "psl2")]
    pub kind: Kind,
    #[arg(long, value_enum, default_value = "text")]
    pub output: Output,
    /// Group order strategy; Schreier-Sims is forced for Suzuki q >= 32.
    #[arg(long, value_enum, default_value = "naive")]
    pub strategy: StrategyArg,
    /// Comma-separated check ids; a trailing `*` selects by prefix.
    #[arg(long = "checks", value_delimiter = ',')]
    pub check_ids: Option<Vec<String>>,
    /// Worker threads for sweeps (1 runs sequentially).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Element of U: `a` for psl2, `(a,b)` for suzuki.
    #[arg(long)]
    pub element: Option<String>,
    /// Generator file written by `export`, for `order`.
    #[arg(long)]
    pub input: Option<std::path::PathBuf>,
}

struct Usage(String);

impl From<ConstructionError> for Usage {
    fn from(e: ConstructionError) -> Self {
        Usage(e.to_string())
    }
}

/// Parse arguments and run; clap errors map to the usage exit code.
pub fn run_from_args<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match CliConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            (code, e.render().to_string())
        }
    }
}

pub fn run(cfg: &CliConfig) -> (i32, String) {
    let exec = match cfg.jobs {
        Some(0) => return (EXIT_USAGE, "error: --jobs must be at least 1\n".into()),
        Some(1) => Exec::Sequential,
        _ => Exec::Parallel,
    };
    #[cfg(feature = "parallel")]
    if let Some(j) = cfg.jobs.filter(|&j| j > 1) {
        return match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| dispatch(cfg, exec)),
            Err(e) => (EXIT_USAGE, format!("error: {e}\n")),
        };
    }
    dispatch(cfg, exec)
}

fn dispatch(cfg: &CliConfig, exec: Exec) -> (i32, String) {
    let result = match cfg.command {
        Command::Field => field(cfg),
        Command::Build => with_set(cfg, exec, build),
        Command::Verify => with_set(cfg, exec, verify),
        Command::Mu => with_set(cfg, exec, mu),
        Command::Partition => with_set(cfg, exec, partition),
        Command::Order => order(cfg, exec),
        Command::Export => with_set(cfg, exec, export),
        Command::Suite => with_set(cfg, exec, run_suite),
    };
    match result {
        Ok(r) => r,
        Err(Usage(msg)) => (EXIT_USAGE, format!("error: {msg}\n")),
    }
}

fn require_q(cfg: &CliConfig) -> Result<u64, Usage> {
    cfg.q.ok_or_else(|| Usage("--q is required".into()))
}

fn with_set(
    cfg: &CliConfig,
    exec: Exec,
    f: fn(&CliConfig, &MoufangSet) -> Result<(i32, String), Usage>,
) -> Result<(i32, String), Usage> {
    let m = constructions::build(cfg.kind.into(), require_q(cfg)?)?.with_exec(exec);
    f(cfg, &m)
}

fn machine(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json");
    s.push('\n');
    s
}

fn field(cfg: &CliConfig) -> Result<(i32, String), Usage> {
    let q = require_q(cfg)?;
    let n = constructions::degree_of(q)?;
    let spec = if n % 2 == 1 && n >= 3 { FieldSpec::tits(n) } else { FieldSpec::new(n) }.map_err(|e| Usage(e.to_string()))?;
    let theta = spec.is_tits().then(|| spec.theta_exponent());
    if cfg.kind == Kind::Suzuki && theta.is_none() {
        return Err(Usage(format!("q = {q} has even degree; Suzuki sets need an odd degree >= 3")));
    }
    let out = match cfg.output {
        Output::Machine => machine(json!({
            "q": q,
            "degree": n,
            "modulus": spec.modulus(),
            "theta_exponent": theta,
        })),
        Output::Text => {
            let mut s = format!("GF({q}) = GF(2)[x]/({})\ndegree {n}, modulus {:#b}\n", poly_string(spec.modulus()), spec.modulus());
            match theta {
                Some(e) => {
                    let _ = writeln!(s, "theta: x -> x^{} (x^(2^{e})), theta^2 = Frobenius", 1u64 << e);
                }
                None => s.push_str("no Tits endomorphism (even degree)\n"),
            }
            s
        }
    };
    Ok((EXIT_OK, out))
}

fn poly_string(modulus: u32) -> String {
    let terms: Vec<String> = (0..32)
        .rev()
        .filter(|i| modulus >> i & 1 == 1)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    terms.join(" + ")
}

fn build(cfg: &CliConfig, m: &MoufangSet) -> Result<(i32, String), Usage> {
    let report = build_report(m)?;
    let out = match cfg.output {
        Output::Machine => machine(serde_json::to_value(&report).expect("json")),
        Output::Text => {
            let mut s = format!("{:?} q={}\n", report.kind, report.q);
            let _ = writeln!(s, "|X| = {}", report.points);
            let _ = writeln!(s, "|U| = {}", report.root_group_order);
            let _ = writeln!(s, "|Z(U)| = {}", report.center_order);
            let _ = writeln!(s, "involutions = {}", report.involutions);
            let _ = writeln!(s, "|H| = {}", report.hua_order);
            if report.kind == SetKind::Suzuki {
                let _ = writeln!(s, "theta exponent = {}", report.theta_exponent);
            }
            if let Some(p) = report.partition {
                let _ = writeln!(s, "partition = {}/{}/{}/{}/{}", p.zero, p.center, p.sim_z, p.neg_sim_z, p.mixed);
            }
            s
        }
    };
    Ok((EXIT_OK, out))
}

fn verify(cfg: &CliConfig, m: &MoufangSet) -> Result<(i32, String), Usage> {
    let start = Instant::now();
    let report = m.verify_moufang();
    let millis = start.elapsed().as_millis() as u64;
    let code = if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
    let failure = report.counterexample.as_ref().map(|f| format!("{f:?}"));
    let out = match cfg.output {
        Output::Machine => machine(json!({
            "passed": report.passed(),
            "hua_maps_checked": report.hua_maps_checked,
            "pairs_checked": report.pairs_checked,
            "millis": millis,
            "counterexample": failure,
        })),
        Output::Text => {
            let mut s = format!(
                "Moufang condition: {} ({} Hua maps, {} pairs, {millis} ms)\n",
                if report.passed() { "ok" } else { "FAILED" },
                report.hua_maps_checked,
                report.pairs_checked
            );
            if let Some(f) = failure {
                let _ = writeln!(s, "counterexample: {f}");
            }
            s
        }
    };
    Ok((code, out))
}

fn parse_element(cfg: &CliConfig, m: &MoufangSet) -> Result<usize, Usage> {
    let text = cfg.element.as_deref().ok_or_else(|| Usage("--element is required".into()))?;
    let x: RootGroupElement = text.parse().map_err(|e: crate::root_group::RootGroupError| Usage(e.to_string()))?;
    m.index_of(&x).map_err(|e| Usage(e.to_string()))
}

fn mu(cfg: &CliConfig, m: &MoufangSet) -> Result<(i32, String), Usage> {
    let a = parse_element(cfg, m)?;
    if a == 0 {
        return Err(Usage("mu_a needs a nonzero element".into()));
    }
    let p = m.mu_at(a);
    let images: Vec<String> = (0..m.points()).map(|x| m.describe(p.apply(x))).collect();
    let fiber: Vec<String> = (1..m.size()).filter(|&b| m.mu_at(b) == p).map(|b| m.describe(b)).collect();
    let special = m.is_special_at(a).map_err(|e| Usage(e.to_string()))?;
    let out = match cfg.output {
        Output::Machine => machine(json!({
            "a": m.describe(a),
            "sim": m.describe(m.sim_at(a)),
            "special": special,
            "order": p.order(),
            "images": p.images(),
            "v_a": fiber,
        })),
        Output::Text => {
            let mut s = format!("a = {}\n~a = {}\nspecial: {special}\norder of mu_a: {}\n", m.describe(a), m.describe(m.sim_at(a)), p.order());
            let _ = writeln!(s, "V_a = {{{}}}", fiber.join(", "));
            s.push_str("mu_a:\n");
            for (x, y) in images.iter().enumerate() {
                let _ = writeln!(s, "  {} -> {y}", m.describe(x));
            }
            s
        }
    };
    Ok((EXIT_OK, out))
}

fn partition(cfg: &CliConfig, m: &MoufangSet) -> Result<(i32, String), Usage> {
    if m.kind() != SetKind::Suzuki {
        return Err(Usage("partition needs --kind suzuki".into()));
    }
    if cfg.element.is_some() {
        let x = parse_element(cfg, m)?;
        let class = partition_classify(m, &m.elem(x))?;
        let out = match cfg.output {
            Output::Machine => machine(json!({
                "element": m.describe(x),
                "class": class.tag,
                "s": class.decomposition.map(|d| d.0),
                "t": class.decomposition.map(|d| d.1),
            })),
            Output::Text => match class.decomposition {
                Some((s, t)) => format!("{}: {:?} with s = {s}, t = {t}\n", m.describe(x), class.tag),
                None => format!("{}: {:?}\n", m.describe(x), class.tag),
            },
        };
        return Ok((EXIT_OK, out));
    }
    let sizes = partition_sizes(m)?;
    let out = match cfg.output {
        Output::Machine => machine(serde_json::to_value(sizes).expect("json")),
        Output::Text => format!(
            "zero {}\ncenter {}\n~Z {}\n-~Z {}\nmixed {}\ntotal {}\n",
            sizes.zero,
            sizes.center,
            sizes.sim_z,
            sizes.neg_sim_z,
            sizes.mixed,
            sizes.total()
        ),
    };
    Ok((EXIT_OK, out))
}

fn order(cfg: &CliConfig, exec: Exec) -> Result<(i32, String), Usage> {
    let mut strategy = match cfg.strategy {
        StrategyArg::Naive => Strategy::NaiveClosure,
        StrategyArg::Schreier => Strategy::SchreierSims,
    };
    let mut auto = false;
    let start = Instant::now();
    let order = if let Some(path) = &cfg.input {
        let text = std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
        let (header, gens) = import_permutations(&text).map_err(|e| Usage(e.to_string()))?;
        match perm_group::order_of(&gens, header.points, strategy) {
            Ok(o) => o,
            Err(_) => {
                auto = true;
                strategy = Strategy::SchreierSims;
                perm_group::order_of(&gens, header.points, strategy).map_err(|e| Usage(e.to_string()))?
            }
        }
    } else {
        let q = require_q(cfg)?;
        let m = constructions::build(cfg.kind.into(), q)?.with_exec(exec);
        if m.kind() == SetKind::Suzuki && q >= 32 && strategy == Strategy::NaiveClosure {
            auto = true;
            strategy = Strategy::SchreierSims;
        }
        perm_group::group_order(&m, strategy).map_err(|e| Usage(e.to_string()))?
    };
    let millis = start.elapsed().as_millis() as u64;
    let name = match strategy {
        Strategy::NaiveClosure => "naive",
        Strategy::SchreierSims => "schreier",
    };
    let out = match cfg.output {
        Output::Machine => machine(json!({ "order": order.to_string(), "strategy": name, "auto": auto, "millis": millis })),
        Output::Text => format!("{order}\nstrategy: {name}{} ({millis} ms)\n", if auto { " (auto)" } else { "" }),
    };
    Ok((EXIT_OK, out))
}

fn export(_cfg: &CliConfig, m: &MoufangSet) -> Result<(i32, String), Usage> {
    Ok((EXIT_OK, export_permutations(&m.export_header(), &m.generators())))
}

fn run_suite(cfg: &CliConfig, m: &MoufangSet) -> Result<(i32, String), Usage> {
    let report = suite::run_suite(m, cfg.check_ids.as_deref()).map_err(|e| Usage(e.to_string()))?;
    let code = if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
    let out = match cfg.output {
        Output::Machine => {
            let mut s = render_json(&report);
            s.push('\n');
            s
        }
        Output::Text => render_text(&report),
    };
    Ok((code, out))
}
