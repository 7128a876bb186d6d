use std::path::PathBuf;
use std::process::ExitCode;

use assocmink::decomposition::{classify_frame, decompose};
use assocmink::json::{spec_from_json, vertices_to_json, ytable_to_json, ztable_to_json};
use assocmink::minkowski::{full_y_table, Method};
use assocmink::polytope::{catalan, cyclohedron_counterexample, enumerate_vertices, facet_count, facet_rows, hrep_from_spec};
use assocmink::scalar::{parse_scalar, to_canonical_string};
use assocmink::subset::canonical_order;
use assocmink::verify::verify;
use assocmink::zvalues::{default_facet_spec, full_z_table, sample_deformation_spec, FacetZSpec};
use assocmink::{CoxeterPartition, Error, LabeledPolygon, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Largest ground set accepted on the command line.
const CLI_MAX_N: usize = 16;

#[derive(Parser)]
#[command(name = "assocmink", version, about = "Exact Minkowski coefficients of Coxeter-element associahedra")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Minkowski coefficients of every subset, cross-checked between methods.
    Decompose {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_parser = parse_method)]
        method: Option<Method>,
    },
    /// Tight right-hand sides of every subset.
    Zvalues {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Exhaustive self-checks up to a bound.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Vertices of the realisation.
    Vertices {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// The cyclohedron instance on which the signed decomposition fails.
    CycloCheck,
    /// Shape of the four frame diagonals for every nested subset.
    Classify {
        #[command(flatten)]
        realisation: RealisationArgs,
    },
}

#[derive(Args)]
struct RealisationArgs {
    #[arg(long)]
    n: usize,
    /// Up labels, comma separated or repeated.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    up: Vec<usize>,
}

#[derive(Args)]
struct SpecArgs {
    #[command(flatten)]
    realisation: RealisationArgs,
    /// Facet values in the table schema; the entries must be exactly the facet sets.
    #[arg(long, conflicts_with = "seed")]
    z_file: Option<PathBuf>,
    /// Sample perturbed facet values with this seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Perturbation size used with --seed.
    #[arg(long, default_value = "1/10")]
    magnitude: String,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse::<Method>().map_err(|e| e.to_string())
}

fn partition_of(args: &RealisationArgs) -> Result<CoxeterPartition, Error> {
    if args.n > CLI_MAX_N {
        return Err(Error::TooLarge {
            n: args.n,
            max: CLI_MAX_N,
        });
    }
    CoxeterPartition::new(args.n, args.up.iter().copied())
}

fn load_spec(args: &SpecArgs) -> Result<FacetZSpec<Rational>, Error> {
    let partition = partition_of(&args.realisation)?;
    if let Some(path) = &args.z_file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
        let spec = spec_from_json::<Rational>(&text)?;
        if spec.partition() != &partition {
            return Err(Error::InvalidArgument(format!(
                "z-file describes {}, the command line {}",
                spec.partition(),
                partition
            )));
        }
        return Ok(spec);
    }
    if let Some(seed) = args.seed {
        let magnitude = parse_scalar::<Rational>(&args.magnitude)?;
        return sample_deformation_spec(&partition, seed, &magnitude);
    }
    Ok(default_facet_spec(&partition))
}

struct Report {
    value: Value,
    table: String,
    ok: bool,
}

fn render(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}", w = *w))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = vec![line(headers.iter().map(|h| h.to_string()).collect())];
    out.extend(rows.iter().map(|r| line(r.clone())));
    out.join("\n") + "\n"
}

fn set_label(s: &[usize]) -> String {
    format!("{{{}}}", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn decompose_cmd(args: &SpecArgs, method: Option<Method>) -> Result<Report, Error> {
    let spec = load_spec(args)?;
    let z = full_z_table(spec.partition(), &spec)?;
    if let Some(method) = method {
        let y = full_y_table(&z, method)?;
        let rows = y
            .iter()
            .map(|(s, v)| vec![set_label(&s.to_vec()), to_canonical_string(v)])
            .collect::<Vec<_>>();
        return Ok(Report {
            value: ytable_to_json(&y),
            table: render(&["I", method.name()], &rows),
            ok: true,
        });
    }
    let methods: Vec<Method> = if spec.is_default() {
        Method::ALL.to_vec()
    } else {
        vec![Method::Moebius, Method::FourTerm]
    };
    let tables = methods
        .iter()
        .map(|&m| full_y_table(&z, m))
        .collect::<Result<Vec<_>, _>>()?;
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    let mut all_agree = true;
    for s in canonical_order(z.n()) {
        let values: Vec<&Rational> = tables.iter().map(|t| t.get(s)).collect();
        let agree = values.windows(2).all(|w| w[0] == w[1]);
        all_agree &= agree;
        let strings: Vec<String> = values.iter().map(|v| to_canonical_string(*v)).collect();
        let per_method: serde_json::Map<String, Value> = methods
            .iter()
            .zip(&strings)
            .map(|(m, v)| (m.name().to_string(), json!(v)))
            .collect();
        entries.push(json!({
            "set": s.to_vec(),
            "y": strings[0],
            "values": per_method,
            "agree": agree,
        }));
        let mut row = vec![set_label(&s.to_vec())];
        row.extend(strings);
        row.push(if agree { "yes" } else { "NO" }.to_string());
        rows.push(row);
    }
    let mut headers: Vec<&str> = vec!["I"];
    headers.extend(methods.iter().map(|m| m.name()));
    headers.push("agree");
    Ok(Report {
        value: json!({
            "n": z.n(),
            "up": z.partition().up_labels(),
            "spec": if spec.is_default() { "default" } else { "custom" },
            "methods": methods.iter().map(|m| m.name()).collect::<Vec<_>>(),
            "entries": entries,
            "all_agree": all_agree,
        }),
        table: render(&headers, &rows),
        ok: all_agree,
    })
}

fn zvalues_cmd(args: &SpecArgs) -> Result<Report, Error> {
    let spec = load_spec(args)?;
    let z = full_z_table(spec.partition(), &spec)?;
    let rows = z
        .iter()
        .map(|(s, v)| vec![set_label(&s.to_vec()), to_canonical_string(v)])
        .collect::<Vec<_>>();
    Ok(Report {
        value: ztable_to_json(&z),
        table: render(&["I", "z"], &rows),
        ok: true,
    })
}

fn vertices_cmd(args: &SpecArgs) -> Result<Report, Error> {
    let spec = load_spec(args)?;
    let n = spec.partition().n();
    let h = hrep_from_spec(&spec);
    let v = enumerate_vertices(&h)?;
    let facets = facet_rows(&h, &v).len();
    let points = vertices_to_json(&v);
    let rows = points.iter().map(|p| vec![format!("({})", p.join(", "))]).collect::<Vec<_>>();
    let mut table = render(&["vertex"], &rows);
    table.push_str(&format!("{} vertices, {} facets\n", v.vertex_count(), facets));
    Ok(Report {
        value: json!({
            "n": n,
            "up": spec.partition().up_labels(),
            "vertex_count": v.vertex_count(),
            "facet_count": facets,
            "expected_vertex_count": catalan(n),
            "expected_facet_count": facet_count(n),
            "vertices": points,
        }),
        table,
        ok: true,
    })
}

fn cyclo_cmd() -> Result<Report, Error> {
    let report = cyclohedron_counterexample::<Rational>()?;
    let (left, right) = (report.left_count(), report.right_count());
    let holds = report.sides.agree();
    Ok(Report {
        value: json!({ "left": left, "right": right, "decomposition_holds": holds }),
        table: render(
            &["left", "right", "decomposition_holds"],
            &[vec![left.to_string(), right.to_string(), holds.to_string()]],
        ),
        ok: true,
    })
}

fn classify_cmd(args: &RealisationArgs) -> Result<Report, Error> {
    let partition = partition_of(args)?;
    let q = LabeledPolygon::new(partition);
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    for s in canonical_order(partition.n()) {
        let dec = decompose(&q, s)?;
        if dec.is_nested() {
            let label = classify_frame(&q, s)?;
            let sub = label.sub_case().map(|c| c.to_string());
            entries.push(json!({
                "set": s.to_vec(),
                "nested": true,
                "proper": label.shape().indices(),
                "sub_case": sub,
                "label": label.to_string(),
            }));
            rows.push(vec![set_label(&s.to_vec()), label.to_string()]);
        } else {
            entries.push(json!({
                "set": s.to_vec(),
                "nested": false,
                "components": dec.type_v(),
            }));
            rows.push(vec![set_label(&s.to_vec()), format!("{} components", dec.type_v())]);
        }
    }
    Ok(Report {
        value: json!({ "n": partition.n(), "up": partition.up_labels(), "entries": entries }),
        table: render(&["I", "frame"], &rows),
        ok: true,
    })
}

fn verify_cmd(max_n: usize) -> Result<Report, Error> {
    if max_n > CLI_MAX_N {
        return Err(Error::TooLarge {
            n: max_n,
            max: CLI_MAX_N,
        });
    }
    let report = verify(max_n)?;
    let rows = report
        .checks
        .iter()
        .map(|c| vec![c.name.to_string(), c.instances.to_string(), c.failures.to_string()])
        .collect::<Vec<_>>();
    let ok = report.passed();
    let mut value = serde_json::to_value(&report)?;
    value["passed"] = json!(ok);
    Ok(Report {
        value,
        table: render(&["check", "instances", "failures"], &rows),
        ok,
    })
}

fn fail(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("{}", json!({ "error": message.to_string() }));
    ExitCode::FAILURE
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(e.to_string().trim_end()),
    };
    let result = match &cli.command {
        Command::Decompose { spec, method } => decompose_cmd(spec, *method),
        Command::Zvalues { spec } => zvalues_cmd(spec),
        Command::Verify { max_n } => verify_cmd(*max_n),
        Command::Vertices { spec } => vertices_cmd(spec),
        Command::CycloCheck => cyclo_cmd(),
        Command::Classify { realisation } => classify_cmd(realisation),
    };
    match result {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", report.value),
                Format::Table => print!("{}", report.table),
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                fail("cross-check failed")
            }
        }
        Err(e) => fail(e),
    }
}
