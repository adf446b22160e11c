//! Command-line front end: enumeration, Schur Q evaluation, scalar
//! products, generating-function series, diagonal slicing, and the exact
//! verification suite.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use iboson_cli::{render, report};
use iboson_core::{
    buc_macmahon_series, catalog, diagonal_slices, enumerate_boxed_strict, find_check,
    path_exponent, scalar_product, schur_q_branching, schur_q_pfaffian, strict_buc_series,
    strict_partitions_in_box, CheckParams, PathMethod, PlanePartition, QContext, ScalarDims,
    ScalarRoute, ScalarVars, StrictPartition,
};
use report::CheckRequest;

#[derive(Parser)]
#[command(
    name = "iboson",
    about = "Exact combinatorics and identity verification for the generalized i-boson lattice model",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List boxed strict partitions or strict plane partitions.
    Enumerate(EnumerateArgs),
    /// Evaluate a Schur Q-function as an explicit polynomial.
    Schurq(SchurqArgs),
    /// Evaluate the scalar product by one route or all three.
    ScalarProduct(ScalarArgs),
    /// Print a generating-function series.
    Series(SeriesArgs),
    /// Slice a plane partition diagonally and report its statistics.
    Slice(SliceArgs),
    /// Run named identity checks and emit a report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Strict plane partitions in an N,L,M box (rows, columns, max entry).
    #[arg(long, value_name = "N,L,M", conflicts_with = "strict")]
    plane: Option<String>,
    /// Strict partitions in an N,M box (max parts, max part).
    #[arg(long, value_name = "N,M")]
    strict: Option<String>,
    /// Refuse enumerations that would exceed this many items.
    #[arg(long, default_value_t = 100_000)]
    max_items: usize,
    #[arg(long, value_enum, default_value = "human")]
    output: Output,
}

#[derive(Args)]
struct SchurqArgs {
    /// Strict partition, e.g. "5,2,1"; empty string for the empty partition.
    #[arg(long, default_value = "")]
    mu: String,
    /// Number of variables x1..xn.
    #[arg(long, default_value_t = 1)]
    vars: usize,
    #[arg(long, value_enum, default_value = "both")]
    method: QMethod,
    #[arg(long, value_enum, default_value = "human")]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QMethod {
    Pfaffian,
    Branching,
    Both,
}

#[derive(Args)]
struct ScalarArgs {
    /// Sizes N1,N2,M1,M2.
    #[arg(long, value_name = "N1,N2,M1,M2")]
    dims: String,
    #[arg(long, value_enum, default_value = "all")]
    route: RouteArg,
    /// Total-degree cap of the symbolic variables.
    #[arg(long, default_value_t = 8)]
    cap: u32,
    #[arg(long, value_enum, default_value = "human")]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Lattice,
    PlanePartition,
    SchurQ,
    All,
}

#[derive(Args)]
struct SeriesArgs {
    /// Which series to expand.
    #[arg(value_enum)]
    kind: SeriesKind,
    /// Truncation order (total weight).
    #[arg(long, default_value_t = 8)]
    order: u32,
    #[arg(long, value_enum, default_value = "human")]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    /// Pairs of plane partitions (double MacMahon product).
    Buc,
    /// Pairs of strict plane partitions with 2^p weights.
    StrictBuc,
}

#[derive(Args)]
struct SliceArgs {
    /// Matrix as JSON array of arrays; otherwise read text rows from stdin.
    #[arg(long)]
    json: Option<String>,
    #[arg(long, value_enum, default_value = "human")]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check name (see --list), or "all" for the default suite.
    #[arg(default_value = "all")]
    name: String,
    /// List available checks and exit.
    #[arg(long)]
    list: bool,
    /// Box for enumeration checks: N,L,M.
    #[arg(long, value_name = "N,L,M")]
    r#box: Option<String>,
    /// Scalar-product size bounds: N1,N2,M1,M2.
    #[arg(long, value_name = "N1,N2,M1,M2")]
    dims: Option<String>,
    /// Series truncation order / degree cap.
    #[arg(long)]
    order: Option<u32>,
    /// Lattice length for the infinite-lattice check.
    #[arg(long)]
    cap_m: Option<usize>,
    /// Number of seeded spectral points.
    #[arg(long)]
    points: Option<usize>,
    /// Seed for the spectral-point stream.
    #[arg(long)]
    seed: Option<u64>,
    /// Exhaustive weight bound for Fock-side checks.
    #[arg(long)]
    weight: Option<u32>,
    /// Largest mode index for the conjugation checks.
    #[arg(long)]
    mode_max: Option<i64>,
    /// Corrupt one coefficient (negative control; the run must fail).
    #[arg(long)]
    mutate: bool,
    /// Worker threads (overrides IBOSON_THREADS; default 1).
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, value_enum, default_value = "human")]
    output: Output,
}

fn parse_tuple<const N: usize>(s: &str, what: &str) -> Result<[usize; N], String> {
    let parts: Vec<&str> = s.split(',').map(|t| t.trim()).collect();
    if parts.len() != N {
        return Err(format!("{} expects {} comma-separated integers", what, N));
    }
    let mut out = [0usize; N];
    for (i, p) in parts.iter().enumerate() {
        out[i] = p
            .parse()
            .map_err(|_| format!("bad integer `{}` in {}", p, what))?;
    }
    Ok(out)
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<ExitCode, String> {
    if let Some(spec) = &args.strict {
        let [n, m] = parse_tuple::<2>(spec, "--strict")?;
        if m > 40 {
            return Err(format!("max part {} exceeds the safety bound 40", m));
        }
        let items = strict_partitions_in_box(n, m as u32);
        if items.len() > args.max_items {
            return Err(format!(
                "{} items exceed --max-items {}",
                items.len(),
                args.max_items
            ));
        }
        match args.output {
            Output::Human => {
                for mu in &items {
                    println!(
                        "{}",
                        if mu.is_empty() {
                            "(empty)".to_string()
                        } else {
                            mu.to_string()
                        }
                    );
                }
                println!("count: {}", items.len());
            }
            Output::Json => {
                let listing: Vec<_> = items.iter().map(render::partition_to_json).collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "kind": "strict-partitions",
                        "box": [n, m],
                        "items": listing,
                        "count": items.len(),
                    }))
                    .unwrap()
                );
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let Some(spec) = &args.plane else {
        return Err("one of --plane or --strict is required".into());
    };
    let [n, l, m] = parse_tuple::<3>(spec, "--plane")?;
    if n * l * m > 64 {
        return Err(format!(
            "box volume {} exceeds the safety bound 64",
            n * l * m
        ));
    }
    let items = enumerate_boxed_strict(n, l, m as u32);
    if items.len() > args.max_items {
        return Err(format!(
            "{} items exceed --max-items {}",
            items.len(),
            args.max_items
        ));
    }
    match args.output {
        Output::Human => {
            for (i, pi) in items.iter().enumerate() {
                if pi.rows().is_empty() {
                    println!("[{}] (empty)", i);
                } else {
                    println!("[{}]", i);
                    println!("{}", pi);
                }
            }
            println!("count: {}", items.len());
        }
        Output::Json => {
            let listing: Vec<_> = items.iter().map(render::plane_to_json).collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "kind": "strict-plane-partitions",
                    "box": [n, l, m],
                    "items": listing,
                    "count": items.len(),
                }))
                .unwrap()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_schurq(args: &SchurqArgs) -> Result<ExitCode, String> {
    let mu: StrictPartition = args.mu.parse()?;
    if args.vars == 0 || args.vars > 6 || mu.weight() > 24 {
        return Err("supported range: 1..=6 variables, |mu| <= 24".into());
    }
    let q = QContext::fresh(args.vars, mu.weight().max(1));
    let (value, agreed) = match args.method {
        QMethod::Pfaffian => (schur_q_pfaffian(&mu, &q), None),
        QMethod::Branching => (schur_q_branching(&mu, &q), None),
        QMethod::Both => {
            let a = schur_q_pfaffian(&mu, &q);
            let b = schur_q_branching(&mu, &q);
            let same = a == b;
            (a, Some(same))
        }
    };
    if agreed == Some(false) {
        eprintln!("error: pfaffian and branching routes disagree");
        return Ok(ExitCode::FAILURE);
    }
    match args.output {
        Output::Human => {
            println!("{}", value);
            if agreed == Some(true) {
                println!("routes agree: pfaffian = branching");
            }
        }
        Output::Json => {
            let mut v = json!({
                "mu": render::partition_to_json(&mu),
                "vars": args.vars,
                "series": render::series_to_json(&value),
            });
            if let Some(a) = agreed {
                v["routes_agree"] = json!(a);
            }
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_scalar(args: &ScalarArgs) -> Result<ExitCode, String> {
    let [n1, n2, m1, m2] = parse_tuple::<4>(&args.dims, "--dims")?;
    if n1.max(n2) > 3 || m1.max(m2) > 6 {
        return Err("sizes beyond N <= 3, M <= 6 exceed the safety bound".into());
    }
    let dims = ScalarDims { n1, n2, m1, m2 };
    let (ctx, vars) = ScalarVars::standard(dims, args.cap);
    let routes: Vec<(ScalarRoute, &str)> = match args.route {
        RouteArg::Lattice => vec![(ScalarRoute::Lattice, "lattice")],
        RouteArg::PlanePartition => vec![(ScalarRoute::PlanePartition, "plane-partition")],
        RouteArg::SchurQ => vec![(ScalarRoute::SchurQ, "schur-q")],
        RouteArg::All => vec![
            (ScalarRoute::Lattice, "lattice"),
            (ScalarRoute::PlanePartition, "plane-partition"),
            (ScalarRoute::SchurQ, "schur-q"),
        ],
    };
    let mut results = Vec::new();
    for (route, name) in &routes {
        results.push((*name, scalar_product(dims, &ctx, &vars, *route)));
    }
    for (name, s) in &results[1..] {
        if let Some((e, a, b)) = results[0].1.first_difference(s) {
            eprintln!(
                "error: {} differs from {} at {:?}: {} vs {}",
                results[0].0, name, e, a, b
            );
            return Ok(ExitCode::FAILURE);
        }
    }
    match args.output {
        Output::Human => {
            println!("{}", results[0].1);
            if results.len() > 1 {
                println!(
                    "routes agree: {}",
                    routes
                        .iter()
                        .map(|(_, n)| *n)
                        .collect::<Vec<_>>()
                        .join(" = ")
                );
            }
        }
        Output::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "dims": [n1, n2, m1, m2],
                    "cap": args.cap,
                    "routes": routes.iter().map(|(_, n)| *n).collect::<Vec<_>>(),
                    "series": render::series_to_json(&results[0].1),
                }))
                .unwrap()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_series(args: &SeriesArgs) -> Result<ExitCode, String> {
    if args.order > 24 {
        return Err("orders above 24 exceed the safety bound".into());
    }
    let s = match args.kind {
        SeriesKind::Buc => buc_macmahon_series(args.order),
        SeriesKind::StrictBuc => strict_buc_series(args.order),
    };
    match args.output {
        Output::Human => println!("{}", s),
        Output::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "order": args.order,
                "series": render::series_to_json(&s),
            }))
            .unwrap()
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_slice(args: &SliceArgs) -> Result<ExitCode, String> {
    let pi: PlanePartition = if let Some(j) = &args.json {
        let v: serde_json::Value =
            serde_json::from_str(j).map_err(|e| format!("bad JSON: {}", e))?;
        render::plane_from_json(&v)?
    } else {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| e.to_string())?;
        text.parse()?
    };
    if !pi.is_strict() {
        return Err("plane partition is not strict".into());
    }
    let s = diagonal_slices(&pi);
    let p_regions = path_exponent(&pi, PathMethod::Regions);
    let p_formula = path_exponent(&pi, PathMethod::Formula);
    match args.output {
        Output::Human => {
            println!("weight: {}", pi.weight());
            for k in -(s.left_len() as i64)..=(s.right_len() as i64) {
                println!("slice {:>3}: {}", k, s.slice(k));
            }
            println!(
                "path statistic: {} (regions), {} (formula)",
                p_regions, p_formula
            );
        }
        Output::Json => {
            let slices: Vec<_> = (-(s.left_len() as i64)..=(s.right_len() as i64))
                .map(|k| json!({"diagonal": k, "parts": s.slice(k).parts().to_vec()}))
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "matrix": render::plane_to_json(&pi),
                    "weight": pi.weight(),
                    "slices": slices,
                    "path_regions": p_regions,
                    "path_formula": p_formula,
                }))
                .unwrap()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, String> {
    if args.list {
        for info in catalog() {
            let aliases = if info.aliases.is_empty() {
                String::new()
            } else {
                format!(" (alias: {})", info.aliases.join(", "))
            };
            println!("{:<24}{} {}", info.name, aliases, info.description);
        }
        return Ok(ExitCode::SUCCESS);
    }
    let mut params = CheckParams::default();
    if let Some(b) = &args.r#box {
        let [n, l, m] = parse_tuple::<3>(b, "--box")?;
        params.boxdims = (n, l, m as u32);
    }
    if let Some(d) = &args.dims {
        let [n1, n2, m1, m2] = parse_tuple::<4>(d, "--dims")?;
        params.n_max = n1.max(n2);
        params.m_max = m1.max(m2);
    }
    if let Some(o) = args.order {
        params.order = o;
    }
    if let Some(c) = args.cap_m {
        params.cap_m = c;
    }
    if let Some(p) = args.points {
        params.points = p;
    }
    if let Some(s) = args.seed {
        params.seed = s;
    }
    if let Some(w) = args.weight {
        params.weight = w;
    }
    if let Some(m) = args.mode_max {
        params.mode_max = m;
    }
    params.mutate = args.mutate;

    let names: Vec<String> = if args.name == "all" {
        catalog().iter().map(|c| c.name.to_string()).collect()
    } else {
        if find_check(&args.name).is_none() {
            return Err(format!(
                "unknown check `{}` (see `iboson verify --list`)",
                args.name
            ));
        }
        vec![args.name.clone()]
    };
    let threads = args
        .threads
        .or_else(|| {
            std::env::var("IBOSON_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(1)
        .max(1);
    let requests: Vec<CheckRequest> = names
        .into_iter()
        .map(|name| CheckRequest {
            name,
            params: params.clone(),
        })
        .collect();
    let report = report::run_suite(&requests, threads, params.seed);
    match args.output {
        Output::Human => print!("{}", report::render_human(&report)),
        Output::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
    }
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn main() -> ExitCode {
    // die quietly when stdout is a closed pipe (e.g. `iboson ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Schurq(a) => cmd_schurq(a),
        Command::ScalarProduct(a) => cmd_scalar(a),
        Command::Series(a) => cmd_series(a),
        Command::Slice(a) => cmd_slice(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
