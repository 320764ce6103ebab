//! Command-line front end. Every subcommand prints either a stable text
//! rendering or JSON (--format json); identical invocations produce
//! byte-identical output. Exit codes: 0 success, 1 domain error, 2 usage
//! error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bott::{bott_cohomology, BottCohomology};
use crate::bundles::{fano_class, fano_expected_dim, fano_tangent_chern};
use crate::chow::{ChowClass, Grassmannian};
use crate::error::Error;
use crate::invariants::{
    ci_hodge, DiamondInputs, HodgeDiamond, ThreefoldInvariants, DIAMOND_ASSUMPTIONS,
};
use crate::koszul;
use crate::partition::{lr_coefficients, Partition};
use crate::plethysm::wedge_triple_sym2;
use crate::reproduce;

#[derive(Debug, Parser)]
#[command(
    name = "fano-schubert",
    version,
    about = "Exact Schubert calculus and cohomology of loci of planes on intersections of quadrics",
    max_term_width = 100
)]
pub struct Cli {
    /// Output format for results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Partition arithmetic.
    Partitions {
        #[command(subcommand)]
        cmd: PartitionsCmd,
    },
    /// Schubert-basis Chow ring operations.
    Chow {
        #[command(subcommand)]
        cmd: ChowCmd,
    },
    /// The locus of planes cut out by quadrics.
    Fano {
        #[command(subcommand)]
        cmd: FanoCmd,
    },
    /// Riemann-Roch and Hodge-theoretic invariants.
    Invariants {
        #[command(subcommand)]
        cmd: InvariantsCmd,
    },
    /// Cohomology of Schur functors of the tautological subbundle.
    Bott {
        /// Weight a1,a2,... of the Schur functor (at most k parts).
        #[arg(long, value_parser = parse_partition)]
        weight: Partition,
        #[command(flatten)]
        gr: GrArg,
    },
    /// Wedge powers of the dual section bundle and their hypercohomology.
    Koszul {
        #[command(subcommand)]
        cmd: KoszulCmd,
    },
    /// Recompute every headline value and report a pass/fail table.
    Reproduce,
}

#[derive(Debug, Subcommand)]
pub enum PartitionsCmd {
    /// Littlewood-Richardson expansion of a product of two Schur classes.
    Lr {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
    },
}

#[derive(Debug, Subcommand)]
pub enum ChowCmd {
    /// Multiply classes in the Chow ring (box-truncated).
    Mul {
        #[command(flatten)]
        gr: GrArg,
        /// JSON array of classes, e.g. `[{"grassmannian":[3,10],"terms":[{"partition":[3,2,1],"coeff":1}]}]`
        #[arg(long)]
        classes: String,
    },
    /// Multiply classes, then take the coefficient of the point class.
    Integrate {
        #[command(flatten)]
        gr: GrArg,
        #[arg(long)]
        classes: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum FanoCmd {
    /// The class of the plane locus in the Chow ring.
    Class(FanoArgs),
    /// Its degree under the Plücker embedding.
    Degree(FanoArgs),
    /// Chern classes of its tangent bundle through degree three.
    Tangent(FanoArgs),
}

#[derive(Debug, Args)]
pub struct FanoArgs {
    #[arg(long, default_value_t = 3)]
    pub k: u32,
    #[arg(long, default_value_t = 10)]
    pub n: u32,
    /// Degrees of the defining forms.
    #[arg(long, value_parser = parse_degrees, default_value = "2,2,2")]
    pub degrees: std::vec::Vec<u32>,
}

#[derive(Debug, Subcommand)]
pub enum InvariantsCmd {
    /// Euler characteristic of the m-th Plücker twist by Riemann-Roch.
    Hrr {
        #[arg(long)]
        m: i64,
        #[command(flatten)]
        fano: FanoArgs,
    },
    /// The interpolated Hilbert cubic of the threefold of planes.
    Hilbert {
        #[command(flatten)]
        fano: FanoArgs,
    },
    /// Middle Hodge numbers of an intersection of three quadrics in P^n.
    CiHodge {
        #[arg(long)]
        n: u32,
    },
    /// The full Hodge diamond of the threefold of planes.
    HodgeDiamond,
}

#[derive(Debug, Subcommand)]
pub enum KoszulCmd {
    /// Schur decomposition of the r-th wedge power of the dual section bundle.
    Wedge {
        #[arg(long)]
        r: u32,
    },
    /// Wedge decompositions annotated with cohomological activity.
    Table {
        #[arg(long)]
        r: Option<u32>,
    },
    /// First-page support, dimensions, and sheaf cohomology.
    Cohomology {
        /// Also report second-page values under the (unproven)
        /// degeneration assumption; they are labeled conjectural.
        #[arg(long)]
        assume_degeneration: bool,
    },
    /// Cross-check the alternating sum against Riemann-Roch.
    EulerCheck,
}

#[derive(Debug, Args)]
pub struct GrArg {
    /// Ambient Grassmannian as k,n.
    #[arg(long, value_parser = parse_grassmannian, default_value = "3,10")]
    pub grassmannian: Grassmannian,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
    let parts = parts.map_err(|e| format!("invalid partition {s:?}: {e}"))?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn parse_degrees(s: &str) -> Result<Vec<u32>, String> {
    let degrees: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
    let degrees = degrees.map_err(|e| format!("invalid degrees {s:?}: {e}"))?;
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(format!("degrees must be positive: {s:?}"));
    }
    Ok(degrees)
}

fn parse_grassmannian(s: &str) -> Result<Grassmannian, String> {
    let nums: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
    let nums = nums.map_err(|e| format!("invalid grassmannian {s:?}: {e}"))?;
    if nums.len() != 2 {
        return Err(format!("expected k,n, got {s:?}"));
    }
    Grassmannian::new(nums[0], nums[1]).map_err(|e| e.to_string())
}

/// A failed run: either the arguments were unusable (exit 2) or a domain
/// precondition failed (exit 1).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

/// Exit code for the process. Reproduce mismatches map to 1.
pub fn run(cli: Cli) -> i32 {
    let format = cli.format;
    match dispatch(cli) {
        Ok(Output { rendered, failed }) => {
            println!("{rendered}");
            i32::from(failed)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
        Err(CliError::Domain(err)) => {
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(
                        &json!({"error": err.to_string(), "kind": "domain"})
                    )
                    .expect("error json serializes")
                ),
                Format::Text => eprintln!("error: {err}"),
            }
            1
        }
    }
}

#[derive(Debug)]
pub struct Output {
    pub rendered: String,
    /// Set by `reproduce` when some check failed.
    pub failed: bool,
}

impl Output {
    fn ok(rendered: String) -> Self {
        Output {
            rendered,
            failed: false,
        }
    }
}

/// Maximum text line width; overridable through FANO_SCHUBERT_WIDTH.
fn output_width() -> usize {
    std::env::var("FANO_SCHUBERT_WIDTH")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&w| w >= 20)
        .unwrap_or(100)
}

fn wrap_sum(terms: &[String]) -> String {
    let width = output_width();
    let mut lines = Vec::new();
    let mut line = String::new();
    for (i, t) in terms.iter().enumerate() {
        let piece = if i == 0 {
            t.clone()
        } else if let Some(rest) = t.strip_prefix('-') {
            format!(" - {}", rest.trim_start())
        } else {
            format!(" + {t}")
        };
        if !line.is_empty() && line.len() + piece.len() > width {
            lines.push(std::mem::take(&mut line));
            line.push_str("  ");
        }
        line.push_str(&piece);
    }
    if !line.is_empty() {
        lines.push(line);
    }
    lines.join("\n")
}

fn class_terms_json(class: &ChowClass) -> Value {
    Value::Array(
        class
            .sorted_desc()
            .into_iter()
            .map(|(p, c)| json!({"partition": p, "coeff": c}))
            .collect(),
    )
}

fn class_json(class: &ChowClass) -> Value {
    json!({
        "grassmannian": class.grassmannian(),
        "terms": class_terms_json(class),
    })
}

fn class_text(class: &ChowClass) -> String {
    if class.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = class
        .sorted_desc()
        .into_iter()
        .map(|(p, c)| {
            if p.is_empty() {
                format!("{c}")
            } else if c == 1 {
                format!("s{p}")
            } else if c == -1 {
                format!("-s{p}")
            } else {
                format!("{c} s{p}")
            }
        })
        .collect();
    wrap_sum(&terms)
}

fn parse_classes_arg(gr: Grassmannian, raw: &str) -> Result<Vec<ChowClass>, CliError> {
    #[derive(serde::Deserialize)]
    struct TermIn {
        partition: Partition,
        coeff: i64,
    }
    #[derive(serde::Deserialize)]
    struct ClassIn {
        grassmannian: Grassmannian,
        terms: Vec<TermIn>,
    }
    let parsed: Vec<ClassIn> = serde_json::from_str(raw)
        .map_err(|e| CliError::Usage(format!("could not parse --classes JSON: {e}")))?;
    if parsed.is_empty() {
        return Err(CliError::Usage(
            "--classes must contain at least one class".into(),
        ));
    }
    parsed
        .into_iter()
        .map(|c| {
            if c.grassmannian != gr {
                return Err(CliError::Domain(Error::ContextMismatch(
                    gr.k(),
                    gr.n(),
                    c.grassmannian.k(),
                    c.grassmannian.n(),
                )));
            }
            ChowClass::from_terms(gr, c.terms.into_iter().map(|t| (t.partition, t.coeff)))
                .map_err(CliError::Domain)
        })
        .collect()
}

pub fn dispatch(cli: Cli) -> Result<Output, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Partitions { cmd } => match cmd {
            PartitionsCmd::Lr { lambda, mu } => {
                let expansion = lr_coefficients(&lambda, &mu);
                let out = match format {
                    Format::Json => pretty(&json!({
                        "terms": expansion
                            .sorted_desc()
                            .into_iter()
                            .map(|(p, c)| json!({"partition": p, "coeff": c}))
                            .collect::<Vec<_>>(),
                    })),
                    Format::Text => {
                        let terms: Vec<String> = expansion
                            .sorted_desc()
                            .into_iter()
                            .map(|(p, c)| {
                                if c == 1 {
                                    format!("s{p}")
                                } else {
                                    format!("{c} s{p}")
                                }
                            })
                            .collect();
                        wrap_sum(&terms)
                    }
                };
                Ok(Output::ok(out))
            }
        },
        Command::Chow { cmd } => match cmd {
            ChowCmd::Mul { gr, classes } => {
                let product = chow_product(gr.grassmannian, &classes)?;
                Ok(Output::ok(match format {
                    Format::Json => pretty(&class_json(&product)),
                    Format::Text => class_text(&product),
                }))
            }
            ChowCmd::Integrate { gr, classes } => {
                let product = chow_product(gr.grassmannian, &classes)?;
                let value = product.integrate();
                Ok(Output::ok(match format {
                    Format::Json => pretty(&json!({
                        "grassmannian": gr.grassmannian,
                        "integral": value,
                    })),
                    Format::Text => value.to_string(),
                }))
            }
        },
        Command::Fano { cmd } => match cmd {
            FanoCmd::Class(args) => {
                let gr = Grassmannian::new(args.k, args.n)?;
                let class = fano_class(gr, &args.degrees)?;
                Ok(Output::ok(match format {
                    Format::Json => pretty(&json!({
                        "grassmannian": gr,
                        "degrees": args.degrees,
                        "class": class_terms_json(&class),
                    })),
                    Format::Text => class_text(&class),
                }))
            }
            FanoCmd::Degree(args) => {
                let gr = Grassmannian::new(args.k, args.n)?;
                let class = fano_class(gr, &args.degrees)?;
                let expdim = fano_expected_dim(gr, &args.degrees);
                if expdim < 0 {
                    return Err(CliError::Domain(Error::InvalidArgument(format!(
                        "expected dimension {expdim} is negative"
                    ))));
                }
                let mut hyper = ChowClass::one(gr);
                let sigma1 = ChowClass::schubert(gr, Partition::row(1))?;
                for _ in 0..expdim {
                    hyper = hyper.mul(&sigma1)?;
                }
                let degree = class.mul(&hyper)?.integrate();
                Ok(Output::ok(match format {
                    Format::Json => pretty(&json!({
                        "grassmannian": gr,
                        "degrees": args.degrees,
                        "expected_dimension": expdim,
                        "degree": degree,
                    })),
                    Format::Text => degree.to_string(),
                }))
            }
            FanoCmd::Tangent(args) => {
                let gr = Grassmannian::new(args.k, args.n)?;
                let tangent = fano_tangent_chern(gr, &args.degrees, 3)?;
                let components: Vec<ChowClass> =
                    (1..=3).map(|d| tangent.component(d).to_chow()).collect();
                Ok(Output::ok(match format {
                    Format::Json => pretty(&json!({
                        "grassmannian": gr,
                        "degrees": args.degrees,
                        "chern": {
                            "c1": class_terms_json(&components[0]),
                            "c2": class_terms_json(&components[1]),
                            "c3": class_terms_json(&components[2]),
                        },
                    })),
                    Format::Text => components
                        .iter()
                        .enumerate()
                        .map(|(i, c)| format!("c{}: {}", i + 1, class_text(c)))
                        .collect::<Vec<_>>()
                        .join("\n"),
                }))
            }
        },
        Command::Invariants { cmd } => dispatch_invariants(cmd, format),
        Command::Bott { weight, gr } => {
            let result = bott_cohomology(&weight, gr.grassmannian)?;
            Ok(Output::ok(match format {
                Format::Json => {
                    let body = match &result {
                        BottCohomology::Zero => Value::String("zero".into()),
                        BottCohomology::NonZero(g) => json!({
                            "degree": g.degree,
                            "ambient_weight": g.weight,
                            "twist": g.twist,
                            "normalized_weight": g.normalized_weight(),
                            "dimension": g.dimension,
                        }),
                    };
                    pretty(&json!({
                        "weight": weight,
                        "grassmannian": gr.grassmannian,
                        "result": body,
                    }))
                }
                Format::Text => match &result {
                    BottCohomology::Zero => "zero (singular weight)".to_string(),
                    BottCohomology::NonZero(g) => format!(
                        "H^{} = Schur{} of the ambient space, dimension {}",
                        g.degree, g.weight, g.dimension
                    ),
                },
            }))
        }
        Command::Koszul { cmd } => dispatch_koszul(cmd, format),
        Command::Reproduce => {
            let checks = reproduce::run_all();
            let all_pass = checks.iter().all(|c| c.pass);
            let rendered = match format {
                Format::Json => pretty(&json!({
                    "checks": checks
                        .iter()
                        .map(|c| json!({
                            "name": c.name,
                            "expected": c.expected,
                            "actual": c.actual,
                            "pass": c.pass,
                        }))
                        .collect::<Vec<_>>(),
                    "all_pass": all_pass,
                })),
                Format::Text => {
                    let mut lines: Vec<String> = checks
                        .iter()
                        .map(|c| {
                            if c.pass {
                                format!("ok   {} = {}", c.name, c.actual)
                            } else {
                                format!(
                                    "FAIL {}: expected {}, got {}",
                                    c.name, c.expected, c.actual
                                )
                            }
                        })
                        .collect();
                    let passed = checks.iter().filter(|c| c.pass).count();
                    lines.push(format!("{passed}/{} checks passed", checks.len()));
                    lines.join("\n")
                }
            };
            Ok(Output {
                rendered,
                failed: !all_pass,
            })
        }
    }
}

fn chow_product(gr: Grassmannian, raw: &str) -> Result<ChowClass, CliError> {
    let classes = parse_classes_arg(gr, raw)?;
    let mut product = ChowClass::one(gr);
    for class in &classes {
        product = product.mul(class)?;
    }
    Ok(product)
}

fn dispatch_invariants(cmd: InvariantsCmd, format: Format) -> Result<Output, CliError> {
    match cmd {
        InvariantsCmd::Hrr { m, fano } => {
            let gr = Grassmannian::new(fano.k, fano.n)?;
            let inv = ThreefoldInvariants::new(gr, &fano.degrees)?;
            let chi = inv.hrr_chi(m);
            Ok(Output::ok(match format {
                Format::Json => pretty(&json!({"m": m, "chi": chi})),
                Format::Text => format!("chi(O({m})) = {chi}"),
            }))
        }
        InvariantsCmd::Hilbert { fano } => {
            let gr = Grassmannian::new(fano.k, fano.n)?;
            let inv = ThreefoldInvariants::new(gr, &fano.degrees)?;
            let coeffs = inv.hilbert_polynomial();
            Ok(Output::ok(match format {
                Format::Json => pretty(&json!({
                    "coefficients": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "order": "descending powers of m",
                })),
                Format::Text => format!(
                    "chi(O(m)) = ({}) m^3 + ({}) m^2 + ({}) m + ({})",
                    coeffs[0], coeffs[1], coeffs[2], coeffs[3]
                ),
            }))
        }
        InvariantsCmd::CiHodge { n } => {
            let row = ci_hodge(n)?;
            Ok(Output::ok(match format {
                Format::Json => pretty(&json!({
                    "n": row.n,
                    "euler": row.euler,
                    "middle": row.middle,
                })),
                Format::Text => format!(
                    "euler = {}\nmiddle hodge numbers: {}",
                    row.euler,
                    row.middle
                        .iter()
                        .map(|h| h.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
            }))
        }
        InvariantsCmd::HodgeDiamond => {
            let gr = Grassmannian::new(3, 10)?;
            let inv = ThreefoldInvariants::new(gr, &[2, 2, 2])?;
            let sheaf = koszul::sheaf_cohomology(false);
            let nine = ci_hodge(9)?;
            let diamond = HodgeDiamond::assemble(&DiamondInputs {
                chi_o: inv.hrr_chi(0),
                h02: sheaf.h[2] as i64,
                chi_cotangent: inv.chi_cotangent(),
                chi_top: inv.chi_topological(),
                ci_middle: [nine.middle[0], nine.middle[1], nine.middle[2]],
                picard_rank: 1,
            })?;
            let rows = diamond.rows();
            Ok(Output::ok(match format {
                Format::Json => pretty(&json!({
                    "rows": rows,
                    "euler_characteristic": diamond.euler_characteristic(),
                    "assumptions": DIAMOND_ASSUMPTIONS,
                })),
                Format::Text => {
                    let mut lines: Vec<String> = rows
                        .iter()
                        .map(|r| {
                            r.iter()
                                .map(|h| h.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        })
                        .collect();
                    lines.push(format!(
                        "chi_top (recomputed) = {}",
                        diamond.euler_characteristic()
                    ));
                    lines.push(format!("assumes: {}", DIAMOND_ASSUMPTIONS.join(", ")));
                    lines.join("\n")
                }
            }))
        }
    }
}

fn dispatch_koszul(cmd: KoszulCmd, format: Format) -> Result<Output, CliError> {
    match cmd {
        KoszulCmd::Wedge { r } => {
            let decomposition = wedge_triple_sym2(r)?;
            Ok(Output::ok(match format {
                Format::Json => pretty(&json!({
                    "r": r,
                    "terms": decomposition
                        .sorted_desc()
                        .into_iter()
                        .map(|(p, m)| json!({"partition": p, "multiplicity": m}))
                        .collect::<Vec<_>>(),
                    "dimension": decomposition.dimension(),
                })),
                Format::Text => {
                    let terms: Vec<String> = decomposition
                        .sorted_desc()
                        .into_iter()
                        .map(|(p, m)| {
                            if m == 1 {
                                format!("G{p}")
                            } else {
                                format!("{m} G{p}")
                            }
                        })
                        .collect();
                    format!(
                        "{}\ndimension = {}",
                        wrap_sum(&terms),
                        decomposition.dimension()
                    )
                }
            }))
        }
        KoszulCmd::Table { r } => {
            let rows: Vec<u32> = match r {
                Some(r) if r <= 18 => vec![r],
                Some(r) => {
                    return Err(CliError::Domain(Error::WedgeOutOfRange {
                        index: r,
                        max: 18,
                    }))
                }
                None => (0..=18).collect(),
            };
            let mut json_rows = Vec::new();
            let mut text_rows = Vec::new();
            for r in rows {
                let table = koszul::term_table(r)?;
                json_rows.push(json!({
                    "r": r,
                    "terms": table
                        .iter()
                        .map(|t| json!({
                            "partition": t.weight,
                            "multiplicity": t.multiplicity,
                            "active": t.active,
                            "degree": t.degree,
                            "dimension": t.dimension,
                        }))
                        .collect::<Vec<_>>(),
                }));
                let rendered: Vec<String> = table
                    .iter()
                    .map(|t| {
                        let head = if t.multiplicity == 1 {
                            format!("G{}", t.weight)
                        } else {
                            format!("{} G{}", t.multiplicity, t.weight)
                        };
                        match t.degree {
                            Some(j) => format!("{head} [H^{j}]"),
                            None => head,
                        }
                    })
                    .collect();
                text_rows.push(format!("r={r}: {}", rendered.join(", ")));
            }
            Ok(Output::ok(match format {
                Format::Json => pretty(&json!({"rows": json_rows})),
                Format::Text => text_rows.join("\n"),
            }))
        }
        KoszulCmd::Cohomology {
            assume_degeneration,
        } => {
            let support = koszul::cohomology_contributions();
            let sheaf = koszul::sheaf_cohomology(assume_degeneration);
            Ok(Output::ok(match format {
                Format::Json => {
                    let entries: Vec<Value> = support
                        .support()
                        .into_iter()
                        .map(|(p, q)| {
                            json!({
                                "p": p,
                                "q": q,
                                "dimension": support.dimension(p, q),
                            })
                        })
                        .collect();
                    let conjectural = sheaf.conjectural.as_ref().map(|est| {
                        json!({
                            "conjectural": est.conjectural,
                            "e2_at_p-18_q21": est.e2_deg21,
                            "e2_at_p-11_q14": est.e2_deg14,
                        })
                    });
                    pretty(&json!({
                        "support": entries,
                        "euler": support.euler_sum(),
                        "sheaf_cohomology": sheaf.h,
                        "degeneration": conjectural,
                    }))
                }
                Format::Text => {
                    let mut lines: Vec<String> = support
                        .support()
                        .into_iter()
                        .map(|(p, q)| format!("E1({p},{q}) = {}", support.dimension(p, q)))
                        .collect();
                    lines.push(format!("euler = {}", support.euler_sum()));
                    lines.push(format!(
                        "h^0..h^3 of the structure sheaf: {} {} {} {}",
                        sheaf.h[0], sheaf.h[1], sheaf.h[2], sheaf.h[3]
                    ));
                    if let Some(est) = &sheaf.conjectural {
                        lines.push(format!(
                            "conjectural (unproven degeneration): E2(-18,21) = {}, E2(-11,14) = {}",
                            est.e2_deg21, est.e2_deg14
                        ));
                    }
                    lines.join("\n")
                }
            }))
        }
        KoszulCmd::EulerCheck => {
            let sum = koszul::euler_check();
            let gr = Grassmannian::new(3, 10)?;
            let chi = ThreefoldInvariants::new(gr, &[2, 2, 2])?.hrr_chi(0);
            Ok(Output::ok(match format {
                Format::Json => pretty(&json!({
                    "koszul": sum,
                    "riemann_roch": chi,
                    "match": sum == chi,
                })),
                Format::Text => format!(
                    "koszul alternating sum = {sum}\nriemann-roch chi(O) = {chi}\nagreement: {}",
                    if sum == chi { "ok" } else { "MISMATCH" }
                ),
            }))
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("output values serialize")
}
