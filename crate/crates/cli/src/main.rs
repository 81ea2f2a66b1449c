use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use burnside_core::bgroup::{beta, is_b_group, m_table};
use burnside_core::burnside::format_rational;
use burnside_core::catalog::Catalog;
use burnside_core::kernel::{kernel_basis, SubgroupFamily};
use burnside_core::verify::{exit_code, to_csv, verify_catalog, run_checks, Check, VerifyOptions};
use burnside_core::{BurnsideElement, Group, DEFAULT_ORDER_CAP};

const ORDER_CAP_ENV: &str = "BURNSIDE_MAX_ORDER";

#[derive(Parser)]
#[command(name = "burnside", version, about = "Burnside rings, B-groups and their verification on small finite groups")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Largest group order to construct (also read from BURNSIDE_MAX_ORDER).
    #[arg(long, global = true)]
    max_order: Option<usize>,
    /// Worker threads for verification; 0 picks automatically.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Record wall-clock time per check instead of 0.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Nilpotent,
    Solvable,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog.
    List,
    /// Order, structure flags, normal subgroups with m_{G,N}, and β.
    Analyze { spec: String },
    /// Primitive idempotents in the transitive basis.
    Idempotents { spec: String },
    /// Table of marks.
    Marks { spec: String },
    /// The largest B-group quotient.
    Beta { spec: String },
    /// Kernel of restriction to a family of subgroups.
    Kernel {
        spec: String,
        #[arg(long = "class", value_enum)]
        family: Family,
    },
    /// Run verification checks.
    Verify {
        /// `all` or one of the check names.
        check: String,
        #[arg(long, conflicts_with = "catalog")]
        group: Option<String>,
        #[arg(long)]
        catalog: bool,
    },
}

struct Output {
    body: String,
    code: u8,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let cap = match order_cap(cli.max_order) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let cat = Catalog::with_cap(cap);
    let out = match run(&cli, &cat) {
        Ok(out) => out,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &out.body).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(out.body.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(1);
    }
    ExitCode::from(out.code)
}

fn order_cap(flag: Option<usize>) -> Result<usize, String> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(ORDER_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{ORDER_CAP_ENV} must be a positive integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_ORDER_CAP),
    }
}

fn run(cli: &Cli, cat: &Catalog) -> Result<Output, String> {
    let resolve = |s: &str| cat.resolve(s).map_err(|e| format!("{s}: {e}"));
    let f = cli.format;
    match &cli.command {
        Command::List => Ok(Output::ok(list(cat, f))),
        Command::Analyze { spec } => Ok(Output::ok(analyze(&resolve(spec)?, cat, f))),
        Command::Idempotents { spec } => Ok(Output::ok(idempotents(&resolve(spec)?, f))),
        Command::Marks { spec } => Ok(Output::ok(marks(&resolve(spec)?, f))),
        Command::Beta { spec } => Ok(Output::ok(beta_cmd(&resolve(spec)?, cat, f))),
        Command::Kernel { spec, family } => {
            let fam = match family {
                Family::Nilpotent => SubgroupFamily::Nilpotent,
                Family::Solvable => SubgroupFamily::Solvable,
            };
            Ok(Output::ok(kernel(&resolve(spec)?, fam, f)))
        }
        Command::Verify { check, group, catalog: _ } => {
            let checks: Vec<Check> = if check == "all" {
                Check::ALL.to_vec()
            } else {
                vec![Check::parse(check).ok_or_else(|| {
                    let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                    format!("unknown check {check:?}; expected all or one of {}", names.join(", "))
                })?]
            };
            let opts = VerifyOptions {
                jobs: cli.jobs,
                timings: cli.timings,
            };
            let reports = match group {
                Some(spec) => run_checks(&[resolve(spec)?], &checks, cat, &opts),
                None => verify_catalog(cat, &checks, check == "all", &opts).map_err(|e| e.to_string())?,
            };
            let body = match f {
                Format::Json => pretty(&serde_json::to_value(&reports).expect("serializable")),
                Format::Csv => to_csv(&reports),
                Format::Text => {
                    let mut s = String::new();
                    for r in &reports {
                        let kind = r.failure().map(|k| format!(" ({k:?})").to_lowercase()).unwrap_or_default();
                        s.push_str(&format!("{:<12} {:>4}  {:<20} {}{}\n", r.group, r.order, r.check, r.status.as_str(), kind));
                    }
                    let failed = reports.iter().filter(|r| r.failure().is_some()).count();
                    s.push_str(&format!("{} checks, {} failed\n", reports.len(), failed));
                    s
                }
            };
            Ok(Output {
                body,
                code: exit_code(&reports) as u8,
            })
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn list(cat: &Catalog, f: Format) -> String {
    match f {
        Format::Json => pretty(&json!(cat
            .entries()
            .iter()
            .map(|e| json!({ "name": e.name, "order": e.order, "spec": e.spec }))
            .collect::<Vec<_>>())),
        Format::Csv => {
            let mut s = String::from("name,order,spec\n");
            for e in cat.entries() {
                s.push_str(&format!("{},{},{}\n", csv_field(&e.name), e.order, csv_field(&e.spec)));
            }
            s
        }
        Format::Text => cat
            .entries()
            .iter()
            .map(|e| format!("{:<12} {:>4}  {}\n", e.name, e.order, e.spec))
            .collect(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze(g: &Group, cat: &Catalog, f: Format) -> String {
    let l = g.lattice();
    let b = beta(g);
    let beta_name = cat.describe(b.group());
    let normals: Vec<(String, usize, String)> = m_table(g)
        .into_iter()
        .map(|(n, m)| (l.subgroup_label(n), l.subgroup(n).order(), format_rational(&m)))
        .collect();
    match f {
        Format::Json => pretty(&json!({
            "group": g.label(),
            "order": g.order(),
            "abelian": g.is_abelian(),
            "nilpotent": g.is_nilpotent(),
            "solvable": g.is_solvable(),
            "subgroups": l.len(),
            "subgroup_classes": l.classes().len(),
            "normal_subgroups": normals
                .iter()
                .map(|(label, order, m)| json!({ "label": label, "order": order, "m": m }))
                .collect::<Vec<_>>(),
            "b_group": is_b_group(g),
            "beta": beta_name,
            "beta_kernel": l.subgroup_label(b.kernel),
        })),
        Format::Csv => {
            let mut s = String::from("normal_subgroup,order,m\n");
            for (label, order, m) in &normals {
                s.push_str(&format!("{label},{order},{m}\n"));
            }
            s
        }
        Format::Text => {
            let mut s = format!("group: {}\norder: {}\n", g.label(), g.order());
            s.push_str(&format!("abelian: {}\n", yes_no(g.is_abelian())));
            s.push_str(&format!("nilpotent: {}\n", yes_no(g.is_nilpotent())));
            s.push_str(&format!("solvable: {}\n", yes_no(g.is_solvable())));
            s.push_str(&format!("subgroups: {} in {} classes\n", l.len(), l.classes().len()));
            s.push_str(&format!("B-group: {}\n", yes_no(is_b_group(g))));
            s.push_str(&format!("β ≅ {} (kernel {})\n", beta_name, l.subgroup_label(b.kernel)));
            s.push_str("normal subgroups (m_{G,N}):\n");
            for (label, _, m) in &normals {
                s.push_str(&format!("  {label:<8} {m}\n"));
            }
            s
        }
    }
}

fn idempotents(g: &Group, f: Format) -> String {
    let l = g.lattice();
    let es: Vec<(String, BurnsideElement)> = (0..l.classes().len())
        .map(|c| (l.class_label(c), BurnsideElement::idempotent(g, c)))
        .collect();
    match f {
        Format::Json => pretty(&json!(es
            .iter()
            .map(|(label, e)| json!({ "class": label, "element": serde_json::to_value(e.to_serialized()).expect("serializable") }))
            .collect::<Vec<_>>())),
        Format::Csv => {
            let labels: Vec<String> = (0..l.classes().len()).map(|c| l.class_label(c)).collect();
            let mut s = format!("class,{}\n", labels.join(","));
            for (label, e) in &es {
                let coeffs: Vec<String> = e.coeffs().iter().map(format_rational).collect();
                s.push_str(&format!("{label},{}\n", coeffs.join(",")));
            }
            s
        }
        Format::Text => es.iter().map(|(label, e)| format!("e[{label}] = {e}\n")).collect(),
    }
}

fn marks(g: &Group, f: Format) -> String {
    let l = g.lattice();
    let m = g.marks();
    let labels: Vec<String> = (0..m.size()).map(|c| l.class_label(c)).collect();
    match f {
        Format::Json => pretty(&json!({
            "group": g.label(),
            "classes": labels,
            "rows": (0..m.size()).map(|h| m.row(h).to_vec()).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = format!("H,{}\n", labels.join(","));
            for (h, label) in labels.iter().enumerate() {
                let row: Vec<String> = m.row(h).iter().map(i64::to_string).collect();
                s.push_str(&format!("{label},{}\n", row.join(",")));
            }
            s
        }
        Format::Text => {
            let w = labels.iter().map(String::len).max().unwrap_or(1).max(
                (0..m.size()).flat_map(|h| m.row(h).iter().map(|x| x.to_string().len())).max().unwrap_or(1),
            );
            let mut s = format!("{:>w$}", "");
            for label in &labels {
                s.push_str(&format!(" {label:>w$}"));
            }
            s.push('\n');
            for (h, label) in labels.iter().enumerate() {
                s.push_str(&format!("{label:>w$}"));
                for x in m.row(h) {
                    s.push_str(&format!(" {x:>w$}"));
                }
                s.push('\n');
            }
            s
        }
    }
}

fn beta_cmd(g: &Group, cat: &Catalog, f: Format) -> String {
    let b = beta(g);
    let name = cat.describe(b.group());
    let kernel = g.lattice().subgroup_label(b.kernel);
    match f {
        Format::Json => pretty(&json!({
            "group": g.label(),
            "beta": name,
            "order": b.group().order(),
            "kernel": kernel,
        })),
        Format::Csv => format!("group,beta,order,kernel\n{},{},{},{kernel}\n", csv_field(&g.label()), csv_field(&name), b.group().order()),
        Format::Text => format!("beta({}) ≅ {}\n", g.label(), name),
    }
}

fn kernel(g: &Group, fam: SubgroupFamily, f: Format) -> String {
    let k = kernel_basis(g, fam);
    let l = g.lattice();
    let labels: Vec<String> = (0..l.classes().len()).map(|c| l.class_label(c)).collect();
    let rows: Vec<Vec<String>> = k.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    match f {
        Format::Json => pretty(&json!({
            "group": g.label(),
            "class": fam.name(),
            "rank": k.rank(),
            "basis": labels,
            "vectors": rows,
        })),
        Format::Csv => {
            let mut s = format!("vector,{}\n", labels.join(","));
            for (i, r) in rows.iter().enumerate() {
                s.push_str(&format!("{i},{}\n", r.join(",")));
            }
            s
        }
        Format::Text => {
            let mut s = format!("kernel of restriction to {} subgroups of {}: rank {}\n", fam.name(), g.label(), k.rank());
            for v in k.basis() {
                s.push_str(&format!("  {v}\n"));
            }
            s
        }
    }
}
