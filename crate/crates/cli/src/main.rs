//! Command-line interface: exact tableau counts, closed-form ratios,
//! polynomial dumps, excited-diagram listings, and a one-shot verification
//! suite. All output is exact (integers or `p/q`); `--json` switches to a
//! machine-readable rendering with counts as decimal strings.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use staircase::exact::{rat, rat_int, Int, Rat};
use staircase::excited::{
    excited_diagrams, g_at_x1, g_via_eyd, gp_at_x1, gp_via_eyd, shifted_excited_diagrams,
    three_adic_check,
};
use staircase::holman::{check_gauss_summation_corollary, check_holman_identity, holman_f};
use staircase::hyper::{jacobi_poly, sst_ratio, staircase_jacobi_params};
use staircase::polyring::{gp_poly, grothendieck_poly, schur_poly, MultiPoly};
use staircase::shapes::{
    hook_product, shifted_staircase, staircase, staircase_content_product, Partition,
    StrictPartition,
};
use staircase::tableaux::{
    count_sst, count_svt_formula, enumerate_ssvt_p, enumerate_sst, enumerate_svt, Caps,
};

#[derive(Parser)]
#[command(name = "staircase", version, about = "Exact staircase-shape tableau computations")]
struct Cli {
    /// Emit machine-readable JSON
    #[arg(long, global = true)]
    json: bool,

    /// Print extra detail (parameters, per-check grids)
    #[arg(long, global = true)]
    verbose: bool,

    /// Cap on tableau cells and entry alphabet for enumerations
    #[arg(long, global = true, env = "STAIRCASE_SIZE_CAP", default_value_t = 16)]
    size_cap: usize,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count tableaux of a given shape over n letters
    Count {
        /// Shape: comma list like `3,2,1`, empty string, or `delta:K` / `sdelta:K`
        shape: String,
        /// Number of letters
        n: usize,
        /// Tableau family
        #[arg(value_enum)]
        kind: Kind,
        /// Counting method
        #[arg(value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Also print every tableau (enumerate only)
        #[arg(long)]
        dump: bool,
    },
    /// Closed-form ratio of consecutive staircase tableau counts
    Ratio {
        /// Staircase order k
        k: u64,
        /// Number of letters
        n: u64,
    },
    /// Print a generating polynomial, one term per line
    Poly {
        /// Shape: comma list like `3,2,1`, empty string, or `delta:K` / `sdelta:K`
        shape: String,
        /// Number of variables
        n: usize,
        /// Which polynomial
        #[arg(value_enum)]
        kind: PolyKind,
    },
    /// Excited diagrams of a shape inside the first n rows
    Eyd {
        /// Shape: comma list like `3,2,1`, empty string, or `delta:K` / `sdelta:K`
        shape: String,
        /// Number of rows of the ambient region
        n: usize,
        /// Use the shifted ambient (shape must be strict)
        #[arg(long)]
        shifted: bool,
        /// Render every diagram (`o` box, `b` broken box, `.` vacant)
        #[arg(long)]
        show_eyd: bool,
    },
    /// Run the full identity-verification suite
    Verify {
        /// Largest staircase order in the grids
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        /// Largest letter count in the grids
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Perturb one check to exercise failure reporting
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Sst,
    Svt,
    #[value(name = "ssvt-p")]
    SsvtP,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Enumerate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    Schur,
    G,
    Gp,
}

/// An error carrying its process exit code: 2 for usage problems, 3 for
/// resource caps.
struct CliError {
    code: u8,
    message: String,
}

impl From<staircase::Error> for CliError {
    fn from(e: staircase::Error) -> Self {
        let code = match e {
            staircase::Error::CapExceeded { .. } => 3,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn usage_error(message: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: message.into(),
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if let Some(k) = s.strip_prefix("delta:").or_else(|| s.strip_prefix("sdelta:")) {
        let k: usize = k
            .parse()
            .map_err(|_| usage_error(format!("bad staircase order in shape '{s}'")))?;
        return Ok((1..k).rev().collect());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| usage_error(format!("bad part '{p}' in shape '{s}'")))
        })
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    Partition::new(parse_parts(s)?).map_err(CliError::from)
}

fn parse_strict(s: &str) -> Result<StrictPartition, CliError> {
    StrictPartition::new(parse_parts(s)?).map_err(CliError::from)
}

#[derive(Serialize)]
struct CountOutput {
    shape: String,
    n: usize,
    kind: String,
    count: String,
}

#[derive(Serialize)]
struct RatioOutput {
    k: u64,
    n: u64,
    ratio: String,
}

#[derive(Serialize)]
struct PolyTerm {
    x: Vec<u16>,
    beta: u16,
    coeff: String,
}

#[derive(Serialize)]
struct PolyOutput {
    shape: String,
    n: usize,
    kind: String,
    terms: Vec<PolyTerm>,
}

#[derive(Serialize)]
struct EydOutput {
    shape: String,
    n: usize,
    shifted: bool,
    count: usize,
    broken_box_counts: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    diagrams: Vec<String>,
}

#[derive(Serialize)]
struct Check {
    name: String,
    parameters: String,
    left: String,
    right: String,
    pass: bool,
}

#[derive(Serialize)]
struct VerifyReport {
    checks: Vec<Check>,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let caps = Caps {
        max_cells: cli.size_cap,
        max_entry: cli.size_cap,
    };
    match &cli.cmd {
        Cmd::Count {
            shape,
            n,
            kind,
            method,
            dump,
        } => cmd_count(cli, &caps, shape, *n, *kind, *method, *dump),
        Cmd::Ratio { k, n } => cmd_ratio(cli, *k, *n),
        Cmd::Poly { shape, n, kind } => cmd_poly(cli, &caps, shape, *n, *kind),
        Cmd::Eyd {
            shape,
            n,
            shifted,
            show_eyd,
        } => cmd_eyd(cli, shape, *n, *shifted, *show_eyd),
        Cmd::Verify {
            max_k,
            max_n,
            inject_fault,
        } => cmd_verify(cli, &caps, *max_k, *max_n, *inject_fault),
    }
}

fn cmd_count(
    cli: &Cli,
    caps: &Caps,
    shape: &str,
    n: usize,
    kind: Kind,
    method: Method,
    dump: bool,
) -> Result<ExitCode, CliError> {
    let kind_name = match kind {
        Kind::Sst => "sst",
        Kind::Svt => "svt",
        Kind::SsvtP => "ssvt-p",
    };
    let count: Int = match (kind, method) {
        (Kind::Sst, Method::Formula) => count_sst(&parse_partition(shape)?, n)?,
        (Kind::Svt, Method::Formula) => count_svt_formula(&parse_partition(shape)?, n)?,
        (Kind::SsvtP, Method::Formula) => {
            // diagram-weighted evaluation at x = 1, beta = 1; exact and far
            // cheaper than enumeration
            let mu = parse_strict(shape)?;
            if mu.len() > n {
                Int::from(0)
            } else {
                let v = gp_at_x1(&mu, n, &rat_int(1))?;
                v.to_integer()
            }
        }
        (_, Method::Enumerate) => {
            let ts = match kind {
                Kind::Sst => enumerate_sst(&parse_partition(shape)?, n, caps)?,
                Kind::Svt => enumerate_svt(&parse_partition(shape)?, n, caps)?,
                Kind::SsvtP => enumerate_ssvt_p(&parse_strict(shape)?, n, caps)?,
            };
            if dump && !cli.json {
                for t in &ts {
                    println!("{t}");
                    println!();
                }
            }
            Int::from(ts.len())
        }
    };
    if cli.json {
        let out = CountOutput {
            shape: shape.to_string(),
            n,
            kind: kind_name.to_string(),
            count: count.to_string(),
        };
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        println!("{count}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_ratio(cli: &Cli, k: u64, n: u64) -> Result<ExitCode, CliError> {
    let ratio = sst_ratio(k, n)?;
    if cli.verbose && !cli.json {
        let (alpha, beta) = staircase_jacobi_params(k, n);
        println!("alpha = {alpha}");
        println!("beta = {beta}");
    }
    if cli.json {
        let out = RatioOutput {
            k,
            n,
            ratio: ratio.to_string(),
        };
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        println!("{ratio}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_poly(
    cli: &Cli,
    caps: &Caps,
    shape: &str,
    n: usize,
    kind: PolyKind,
) -> Result<ExitCode, CliError> {
    let (kind_name, poly): (&str, MultiPoly) = match kind {
        PolyKind::Schur => ("schur", schur_poly(&parse_partition(shape)?, n, caps)?),
        PolyKind::G => ("g", grothendieck_poly(&parse_partition(shape)?, n, caps)?),
        PolyKind::Gp => ("gp", gp_poly(&parse_strict(shape)?, n, caps)?),
    };
    if cli.json {
        let terms = poly
            .terms()
            .map(|((x, b), c)| PolyTerm {
                x: x.clone(),
                beta: *b,
                coeff: c.to_string(),
            })
            .collect();
        let out = PolyOutput {
            shape: shape.to_string(),
            n,
            kind: kind_name.to_string(),
            terms,
        };
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        println!("{poly}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_eyd(
    cli: &Cli,
    shape: &str,
    n: usize,
    shifted: bool,
    show_eyd: bool,
) -> Result<ExitCode, CliError> {
    let diagrams = if shifted {
        shifted_excited_diagrams(&parse_strict(shape)?, n)?
    } else {
        excited_diagrams(&parse_partition(shape)?, n)?
    };
    let broken_box_counts: Vec<usize> = diagrams.iter().map(|d| d.broken_boxes().len()).collect();
    let renders: Vec<String> = if show_eyd {
        diagrams.iter().map(|d| d.render()).collect()
    } else {
        Vec::new()
    };
    if cli.json {
        let out = EydOutput {
            shape: shape.to_string(),
            n,
            shifted,
            count: diagrams.len(),
            broken_box_counts,
            diagrams: renders,
        };
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        println!("{}", diagrams.len());
        for r in &renders {
            println!();
            println!("{r}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Accumulates checks; each named check records the first divergent value
/// pair, or the common value when everything agrees.
struct Battery {
    checks: Vec<Check>,
}

impl Battery {
    fn new() -> Self {
        Battery { checks: Vec::new() }
    }

    /// Record a check from a list of (parameters, left, right) instances.
    fn record<L: ToString, R: ToString>(
        &mut self,
        name: &str,
        grid: &str,
        instances: Vec<(String, L, R)>,
    ) {
        let failure = instances
            .iter()
            .find(|(_, l, r)| l.to_string() != r.to_string());
        let check = match failure {
            Some((p, l, r)) => Check {
                name: name.to_string(),
                parameters: p.clone(),
                left: l.to_string(),
                right: r.to_string(),
                pass: false,
            },
            None => {
                let (l, r) = instances
                    .first()
                    .map(|(_, l, r)| (l.to_string(), r.to_string()))
                    .unwrap_or_default();
                Check {
                    name: name.to_string(),
                    parameters: grid.to_string(),
                    left: l,
                    right: r,
                    pass: true,
                }
            }
        };
        self.checks.push(check);
    }
}

/// All partitions of every size up to `max_size`, each with at most
/// `max_rows` parts.
fn partitions_up_to(max_size: usize, max_rows: usize) -> Vec<Vec<usize>> {
    fn extend(out: &mut Vec<Vec<usize>>, prefix: &mut Vec<usize>, remaining: usize, cap: usize, rows: usize) {
        out.push(prefix.clone());
        if rows == 0 {
            return;
        }
        for p in (1..=remaining.min(cap)).rev() {
            prefix.push(p);
            extend(out, prefix, remaining - p, p, rows - 1);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut out, &mut Vec::new(), max_size, max_size, max_rows);
    out.sort();
    out.dedup();
    out
}

fn cmd_verify(
    cli: &Cli,
    caps: &Caps,
    max_k: usize,
    max_n: usize,
    inject_fault: bool,
) -> Result<ExitCode, CliError> {
    let mut b = Battery::new();

    // Consecutive staircase hook products differ by an odd double factorial.
    {
        let mut inst = Vec::new();
        for k in 1..=10usize {
            let lhs = hook_product(&staircase(k + 1));
            let mut rhs = hook_product(&staircase(k));
            let mut f = 1u64;
            for _ in 1..=k {
                rhs *= Int::from(f);
                f += 2;
            }
            if inject_fault && k == 1 {
                rhs += Int::from(1);
            }
            inst.push((format!("k={k}"), lhs, rhs));
        }
        b.record("hook_ratio_double_factorial", "k <= 10", inst);
    }

    // Content product over the staircase skew boxes vs its direct definition.
    {
        let mut inst = Vec::new();
        for k in 1..=max_k {
            for n in 1..=max_n {
                let lhs = staircase_content_product(k, n);
                let mut rhs = Int::from(1);
                for i in 1..=k as i64 {
                    rhs *= Int::from(n as i64 + k as i64 + 1 - 2 * i);
                }
                inst.push((format!("k={k}, n={n}"), lhs, rhs));
            }
        }
        b.record(
            "content_product",
            &format!("k <= {max_k}, n <= {max_n}"),
            inst,
        );
    }

    // Closed-form ratio vs the actual quotient of hook-content counts.
    {
        let mut inst = Vec::new();
        for k in 1..=max_k as u64 {
            for n in k..=max_n as u64 {
                let lhs = sst_ratio(k, n)?;
                let num = count_sst(&staircase(k as usize + 1), n as usize)?;
                let den = count_sst(&staircase(k as usize), n as usize)?;
                let rhs = Rat::new(num, den);
                inst.push((format!("k={k}, n={n}"), lhs, rhs));
            }
        }
        b.record(
            "jacobi_ratio_theorem",
            &format!("1 <= k <= n <= {max_n}, k <= {max_k}"),
            inst,
        );
    }

    // Jacobi parameter symmetry on a rational grid.
    {
        let mut inst = Vec::new();
        for k in 0..=4u64 {
            for (an, ad) in [(1i64, 2i64), (-3, 1), (5, 3)] {
                for (bn, bd) in [(-11i64, 2i64), (0, 1)] {
                    for (zn, zd) in [(-1i64, 1i64), (3, 7)] {
                        let alpha = rat(an, ad);
                        let beta = rat(bn, bd);
                        let z = rat(zn, zd);
                        let lhs = jacobi_poly(k, &alpha, &beta, &(-z.clone()));
                        let sign = if k % 2 == 0 { 1 } else { -1 };
                        let rhs = rat_int(sign) * jacobi_poly(k, &beta, &alpha, &z);
                        inst.push((format!("k={k}, alpha={alpha}, beta={beta}, z={z}"), lhs, rhs));
                    }
                }
            }
        }
        b.record("jacobi_symmetry", "60-point parameter grid", inst);
    }

    // Binomial-sum count vs brute-force enumeration.
    {
        let mut inst = Vec::new();
        for parts in partitions_up_to(6, 4) {
            let lam = Partition::new(parts).unwrap();
            for n in 1..=4usize.min(max_n) {
                if lam.len() > n {
                    continue;
                }
                let lhs = count_svt_formula(&lam, n)?;
                let rhs = Int::from(enumerate_svt(&lam, n, caps)?.len());
                inst.push((format!("lambda={lam}, n={n}"), lhs, rhs));
            }
        }
        b.record("svt_formula_vs_enumeration", "|lambda| <= 6, n <= 4", inst);
    }

    // Generating function at x = 1 vs the hypergeometric sum.
    {
        let mut inst = Vec::new();
        for parts in partitions_up_to(4, 3) {
            let lam = Partition::new(parts).unwrap();
            for n in lam.len().max(1)..=3usize.min(max_n) {
                inst.push((
                    format!("lambda={lam}, n={n}"),
                    check_holman_identity(&lam, n, caps)?,
                    true,
                ));
            }
        }
        b.record("holman_generating_identity", "|lambda| <= 4, n <= 3", inst);
    }

    // Hypergeometric sum at z = 1 is the reciprocal tableau count.
    {
        let mut inst = Vec::new();
        for k in 1..=max_k {
            for n in k..=max_n {
                inst.push((
                    format!("k={k}, n={n}"),
                    check_gauss_summation_corollary(k, n)?,
                    true,
                ));
            }
        }
        b.record(
            "gauss_summation_reciprocal",
            &format!("k <= {max_k}, n <= {max_n}"),
            inst,
        );
    }

    // Staircase recurrence for G at x = 1 (diagram-weighted evaluation).
    {
        let mut inst = Vec::new();
        for k in 1..=3usize.min(max_k) {
            for n in (k + 1)..=5usize.min(max_n) {
                for beta in [rat_int(1), rat_int(2), rat(1, 2)] {
                    let lhs = g_at_x1(&staircase(k + 1), n, &beta)?
                        / g_at_x1(&staircase(k), n, &beta)?;
                    let rhs = sst_ratio(k as u64, n as u64)?
                        * holman_f(&staircase(k + 1), n, &(-beta.clone()))?
                        / holman_f(&staircase(k), n, &(-beta.clone()))?;
                    inst.push((format!("k={k}, n={n}, beta={beta}"), lhs, rhs));
                }
            }
        }
        b.record(
            "staircase_recurrence_g",
            "k <= 3, n <= 5, beta in {1, 2, 1/2}",
            inst,
        );
    }

    // Same recurrence with the shifted generating function.
    {
        let mut inst = Vec::new();
        for k in 1..=3usize.min(max_k) {
            for n in (k + 1)..=5usize.min(max_n) {
                for beta in [rat_int(1), rat_int(2), rat(1, 2)] {
                    let lhs = gp_at_x1(&shifted_staircase(k + 1), n, &beta)?
                        / gp_at_x1(&shifted_staircase(k), n, &beta)?;
                    let rhs = sst_ratio(k as u64, n as u64)?
                        * holman_f(&staircase(k + 1), n, &(-beta.clone()))?
                        / holman_f(&staircase(k), n, &(-beta.clone()))?;
                    inst.push((format!("k={k}, n={n}, beta={beta}"), lhs, rhs));
                }
            }
        }
        b.record(
            "staircase_recurrence_gp",
            "k <= 3, n <= 5, beta in {1, 2, 1/2}",
            inst,
        );
    }

    // Shifted and unshifted staircase generating functions coincide.
    {
        let mut inst = Vec::new();
        for k in 2..=3usize.min(max_k) {
            for n in 3..=4usize.min(max_n) {
                let lhs = gp_poly(&shifted_staircase(k), n, caps)?;
                let rhs = grothendieck_poly(&staircase(k), n, caps)?;
                inst.push((format!("k={k}, n={n}"), lhs == rhs, true));
            }
        }
        b.record("shifted_equals_straight_staircase", "k <= 3, n in {3,4}", inst);
    }

    // Diagram-weighted expansions agree with the tableau definitions.
    {
        let mut inst = Vec::new();
        for parts in partitions_up_to(4, 3) {
            let lam = Partition::new(parts.clone()).unwrap();
            for n in lam.len().max(1)..=3usize.min(max_n) {
                let lhs = g_via_eyd(&lam, n)?;
                let rhs = grothendieck_poly(&lam, n, caps)?;
                inst.push((format!("lambda={lam}, n={n}"), lhs == rhs, true));
            }
            if parts.windows(2).all(|w| w[0] > w[1]) {
                let mu = StrictPartition::new(parts).unwrap();
                for n in mu.len().max(1)..=3usize.min(max_n) {
                    let lhs = gp_via_eyd(&mu, n)?;
                    let rhs = gp_poly(&mu, n, caps)?;
                    inst.push((format!("mu={mu} (shifted), n={n}"), lhs == rhs, true));
                }
            }
        }
        b.record("eyd_weight_expansion", "|shape| <= 4, n <= 3", inst);
    }

    // 3-adic divisibility of the shifted staircase counts.
    {
        let mut inst = Vec::new();
        for k in 2..=max_k {
            for n in (k - 1).max(1)..=max_n {
                let r = three_adic_check(k, n)?;
                inst.push((
                    format!("k={k}, n={n} (valuation {}, required {})", r.valuation, r.required),
                    r.holds,
                    true,
                ));
            }
        }
        b.record(
            "three_adic_divisibility",
            &format!("k <= {max_k}, k-1 <= n <= {max_n}"),
            inst,
        );
    }

    // Chu-Vandermonde samples.
    {
        let mut inst = Vec::new();
        for m in 0..=5u64 {
            for (bn, bd, cn, cd) in [(1i64, 2i64, 7i64, 2i64), (3, 1, 9, 1), (2, 5, 13, 5)] {
                let bb = rat(bn, bd);
                let c = rat(cn, cd);
                let lhs = staircase::hyper::hyp2f1_terminating(
                    &rat_int(-(m as i64)),
                    &bb,
                    &c,
                    &rat_int(1),
                )?;
                let rhs = staircase::exact::pochhammer(&(&c - &bb), m)
                    / staircase::exact::pochhammer(&c, m);
                inst.push((format!("m={m}, b={bb}, c={c}"), lhs, rhs));
            }
        }
        b.record("chu_vandermonde", "m <= 5, 3 parameter pairs", inst);
    }

    let mut checks = b.checks;
    checks.sort_by(|a, c| a.name.cmp(&c.name));
    let passed = checks.iter().all(|c| c.pass);
    let report = VerifyReport { checks, passed };

    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        for c in &report.checks {
            if c.pass {
                println!("PASS {} [{}]", c.name, c.parameters);
                if cli.verbose {
                    println!("     value {} = {}", c.left, c.right);
                }
            } else {
                println!(
                    "FAIL {} at {}: left {} != right {}",
                    c.name, c.parameters, c.left, c.right
                );
            }
        }
        println!(
            "{}: {} checks",
            if report.passed { "ok" } else { "FAILED" },
            report.checks.len()
        );
    }
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
