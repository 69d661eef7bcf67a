use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gammaline::catalog::{builtin_catalog, GroupRecord, GroupSpec};
use gammaline::lattice::build_gamma;
use gammaline::line::{decide_line_graph, forbidden_set, Evidence};
use gammaline::verify::{check_completeness_claim, verify_case_theorems, verify_main_theorem};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "gammaline",
    version,
    about = "Cyclic subgroup graphs and line-graph recognition"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Edges,
}

#[derive(Subcommand)]
enum Command {
    /// Print the cyclic subgroup graph of a group.
    Gamma {
        /// Group expression, e.g. Z6, D4, Dic3, Z2xZ2, file:table.tbl
        spec: String,
        #[arg(long, value_enum, default_value = "edges")]
        format: Format,
    },
    /// Decide whether the cyclic subgroup graph of a group is a line graph.
    Check { spec: String },
    /// Write the nine minimal forbidden induced subgraphs.
    Forbidden {
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Check the classification over the built-in catalog and any extra tables.
    Verify {
        #[arg(long, default_value_t = 60)]
        max_order: usize,
        /// Extra Cayley-table files; repeatable.
        #[arg(long)]
        catalog: Vec<PathBuf>,
    },
    /// Print the Cayley table of a group.
    Table { spec: String },
}

fn input_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_INPUT)
}

fn build(spec: &str) -> Result<GroupRecord, ExitCode> {
    GroupRecord::from_spec(spec).map_err(input_error)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Gamma { spec, format } => {
            let record = match build(&spec) {
                Ok(r) => r,
                Err(code) => return code,
            };
            let gamma = build_gamma(&record.group);
            match format {
                Format::Edges => print!("{}", gamma.to_edge_list()),
                Format::Dot => print!("{}", gamma.to_dot(record.name())),
            }
            ExitCode::SUCCESS
        }
        Command::Check { spec } => {
            let record = match build(&spec) {
                Ok(r) => r,
                Err(code) => return code,
            };
            let forbidden = match forbidden_set() {
                Ok(f) => f,
                Err(e) => return input_error(e),
            };
            let gamma = build_gamma(&record.group);
            let graph = gamma.graph();
            println!(
                "{}: order {}, Gamma has {} vertices and {} edges",
                record.name(),
                record.order(),
                graph.vertex_count(),
                graph.edge_count()
            );
            let verdict = decide_line_graph(graph, forbidden);
            match &verdict.evidence {
                Evidence::Root {
                    root,
                    edge_of_vertex,
                } => {
                    let edges: Vec<String> = root
                        .edges()
                        .iter()
                        .map(|(a, b)| format!("{a}-{b}"))
                        .collect();
                    println!(
                        "LINE GRAPH: root with {} vertices and {} edges: {}",
                        root.vertex_count(),
                        root.edge_count(),
                        edges.join(" ")
                    );
                    for (v, (a, b)) in edge_of_vertex.iter().enumerate() {
                        println!("  {} = {a}-{b}", gamma.label(v).name);
                    }
                }
                Evidence::PatternFree => println!("LINE GRAPH"),
                Evidence::Forbidden { pattern, embedding } => {
                    let names: Vec<&str> = embedding
                        .iter()
                        .map(|&v| gamma.label(v).name.as_str())
                        .collect();
                    println!(
                        "NOT A LINE GRAPH: Gamma_{pattern} at vertices [{}]",
                        names.join(", ")
                    );
                }
                Evidence::NoRoot { .. } => println!("NOT A LINE GRAPH"),
            }
            ExitCode::SUCCESS
        }
        Command::Forbidden { out } => {
            let forbidden = match forbidden_set() {
                Ok(f) => f,
                Err(e) => return input_error(e),
            };
            if let Err(e) = std::fs::create_dir_all(&out) {
                return input_error(format!("{}: {e}", out.display()));
            }
            let mut manifest = String::new();
            for (i, p) in forbidden.patterns().iter().enumerate() {
                let file = format!("Γ{}.g", i + 1);
                if let Err(e) = std::fs::write(out.join(&file), p.to_text()) {
                    return input_error(format!("{file}: {e}"));
                }
                manifest.push_str(&format!(
                    "{file}\tvertices {}\tedges {}\n",
                    p.vertex_count(),
                    p.edge_count()
                ));
            }
            if let Err(e) = std::fs::write(out.join("manifest.txt"), &manifest) {
                return input_error(format!("manifest.txt: {e}"));
            }
            print!("{manifest}");
            ExitCode::SUCCESS
        }
        Command::Verify { max_order, catalog } => {
            let forbidden = match forbidden_set() {
                Ok(f) => f,
                Err(e) => return input_error(e),
            };
            let mut records = builtin_catalog(max_order);
            for path in catalog {
                let spec = GroupSpec::File(path);
                match spec.build() {
                    Ok(group) => records.push(GroupRecord::from_group(group, spec.to_string())),
                    Err(e) => return input_error(e),
                }
            }
            let main = verify_main_theorem(&records, forbidden);
            let cases = verify_case_theorems(&records, forbidden);
            let completeness = check_completeness_claim(&records);
            print!("{main}{cases}{completeness}");
            if main.holds() && cases.holds() && completeness.holds() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_MISMATCH)
            }
        }
        Command::Table { spec } => match build(&spec) {
            Ok(r) => {
                print!("{}", gammaline::group::to_cayley_table(&r.group));
                ExitCode::SUCCESS
            }
            Err(code) => code,
        },
    }
}
