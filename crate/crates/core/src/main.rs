use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use blowup_lab::constructions::{blowup, embed, iterated_kleetope, named, EmbeddedOrPlain, KleetopeVertexTag};
use blowup_lab::decompositions::{
    color, find_path_copath, find_two_outerpath, forest_partition, three_color, Budget, SearchOutcome,
};
use blowup_lab::drawings::{
    draw_bipartite_thicknessk, draw_coloring_splitk, draw_forest_closed_blowup, draw_kleetope_split2,
    draw_path_copath_split2, draw_two_outerpath_biplanar, DrawingKind, LayeredDrawing,
};
use blowup_lab::io::{
    read_document, to_json, ColoringData, Document, DrawingData, ForestsData, GraphData, PathCopathData,
    TwoOuterpathData,
};
use blowup_lab::svg::export_svg;
use blowup_lab::verification::{
    decide_biplanar, decide_planar, decide_split2, excess_report, lemma1_detect, lemma2_check, validate_drawing,
};
use blowup_lab::{EmbeddedGraph, Error, Graph};

#[derive(Parser)]
#[command(name = "blowup-lab", version, about = "Blowups of planar graphs and their layered drawings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph: a named family, a Kleetope or a blowup of --input.
    Generate(GenerateArgs),
    /// Search for a decomposition certificate.
    Decompose(DecomposeArgs),
    /// Build a layered drawing from a graph and a certificate.
    Draw(DrawArgs),
    /// Validate a drawing and report excess and lemma checks.
    Verify {
        drawing: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide planarity, biplanarity or split thickness 2 of a graph.
    Decide(DecideArgs),
    /// Straight-line SVG of a drawing, planes side by side.
    ExportSvg {
        drawing: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenerateArgs {
    /// Family name, `kleetope` or `blowup`.
    name: String,
    #[arg(short)]
    n: Option<usize>,
    /// Part sizes for `multipartite`, comma separated.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    iterations: u32,
    #[arg(short, default_value_t = 2)]
    k: u32,
    #[arg(long)]
    closed: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Search node limit, e.g. 5e7.
    #[arg(long, value_parser = parse_count)]
    budget: Option<u64>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    timeout: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        let mut b = self.budget.map(Budget::nodes).unwrap_or_default();
        if let Some(t) = self.timeout {
            b = b.with_timeout(Duration::from_secs_f64(t));
        }
        b
    }
}

fn parse_count(s: &str) -> Result<u64, String> {
    let x: f64 = s.parse().map_err(|_| format!("not a number: {s}"))?;
    if !(x >= 1.0 && x.is_finite()) {
        return Err(format!("budget must be at least 1: {s}"));
    }
    Ok(x as u64)
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeKind {
    TwoOuterpath,
    PathCopath,
    #[value(name = "3color")]
    ThreeColor,
    Forests,
}

#[derive(Args)]
struct DecomposeArgs {
    kind: DecomposeKind,
    #[arg(long)]
    input: PathBuf,
    /// Number of forests.
    #[arg(short, default_value_t = 2)]
    a: usize,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DrawKind {
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    BipartiteK,
    Forest,
}

#[derive(Args)]
struct DrawArgs {
    kind: DrawKind,
    #[arg(long)]
    input: PathBuf,
    /// Certificate file; searched for when absent.
    #[arg(long)]
    certificate: Option<PathBuf>,
    #[arg(short, default_value_t = 2)]
    k: u32,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecideKind {
    Planar,
    Biplanar,
    Split2,
}

#[derive(Args)]
struct DecideArgs {
    kind: DecideKind,
    input: PathBuf,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

enum Fail {
    Usage(String),
    Validation(String),
    None(String),
    Unknown(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidCertificate(_) => Fail::Validation(e.to_string()),
            _ => Fail::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Fail>;

fn emit(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Fail::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_doc(path: Option<&Path>, doc: &Document) -> Outcome {
    emit(path, &to_json(doc)?)
}

fn read_graph_doc(path: &Path) -> std::result::Result<GraphData, Fail> {
    match read_document(path)? {
        Document::Graph(g) => Ok(g),
        other => Err(Fail::Usage(format!("{}: expected a graph, found {}", path.display(), other.type_name()))),
    }
}

fn read_embedded(path: &Path) -> std::result::Result<EmbeddedGraph, Fail> {
    Ok(match read_graph_doc(path)?.to_either()? {
        EmbeddedOrPlain::Embedded(e) => e,
        EmbeddedOrPlain::Plain(g) => embed(&g)?,
    })
}

fn read_plain(path: &Path) -> std::result::Result<Graph, Fail> {
    Ok(read_graph_doc(path)?.to_graph()?)
}

fn read_drawing(path: &Path) -> std::result::Result<LayeredDrawing, Fail> {
    match read_document(path)? {
        Document::Drawing(d) => Ok(d.to_drawing()?),
        other => Err(Fail::Usage(format!("{}: expected a drawing, found {}", path.display(), other.type_name()))),
    }
}

fn read_certificate(path: Option<&Path>) -> std::result::Result<Option<Document>, Fail> {
    path.map(|p| read_document(p).map_err(Fail::from)).transpose()
}

fn settle<T>(what: &str, o: SearchOutcome<T>) -> std::result::Result<T, Fail> {
    match o {
        SearchOutcome::Found(x) => Ok(x),
        SearchOutcome::None => Err(Fail::None(format!("no {what} exists"))),
        SearchOutcome::Unknown => Err(Fail::Unknown(format!("{what}: search budget exhausted"))),
    }
}

fn wrong_certificate(expected: &str, got: &Document) -> Fail {
    Fail::Usage(format!("expected a {expected} certificate, found {}", got.type_name()))
}

fn generate(a: GenerateArgs) -> Outcome {
    let input = || a.input.as_deref().ok_or_else(|| Fail::Usage(format!("generate {} needs --input", a.name)));
    let doc = match a.name.as_str() {
        "kleetope" => {
            let e = read_embedded(input()?)?;
            GraphData::from_embedded(&iterated_kleetope(&e, a.iterations)?)
        }
        "blowup" => {
            let g = read_plain(input()?)?;
            GraphData::from_graph(&blowup(&g, a.k, a.closed)?.map_vertices(|v| v.to_string())?)
        }
        name => GraphData::from_either(&named(name, a.n, &a.parts)?),
    };
    emit_doc(a.output.as_deref(), &Document::Graph(doc))
}

fn decompose(a: DecomposeArgs) -> Outcome {
    let budget = a.budget.budget();
    let doc = match a.kind {
        DecomposeKind::TwoOuterpath => {
            let e = read_embedded(&a.input)?;
            let d = settle("two-outerpath decomposition", find_two_outerpath(&e, budget)?)?;
            Document::TwoOuterpath(TwoOuterpathData::from_decomposition(&e, &d))
        }
        DecomposeKind::PathCopath => {
            let e = read_embedded(&a.input)?;
            let d = settle("path-copath decomposition", find_path_copath(&e, budget)?)?;
            Document::PathCopath(PathCopathData::from_decomposition(&e, &d))
        }
        DecomposeKind::ThreeColor => {
            let g = read_plain(&a.input)?;
            Document::Coloring(ColoringData::from_coloring(&settle("3-coloring", three_color(&g, budget))?))
        }
        DecomposeKind::Forests => {
            let g = read_plain(&a.input)?;
            let f = settle(&format!("partition into {} forests", a.a), forest_partition(&g, a.a, budget))?;
            Document::Forests(ForestsData::from_partition(&f))
        }
    };
    emit_doc(a.output.as_deref(), &doc)
}

fn draw(a: DrawArgs) -> Outcome {
    let budget = a.budget.budget();
    let cert = read_certificate(a.certificate.as_deref())?;
    let drawing = match a.kind {
        DrawKind::Thm2 | DrawKind::Thm3 => {
            let e = read_embedded(&a.input)?;
            let dec = match cert {
                Some(Document::TwoOuterpath(c)) => c.to_decomposition(&e)?,
                Some(other) => return Err(wrong_certificate("two-outerpath", &other)),
                None => settle("two-outerpath decomposition", find_two_outerpath(&e, budget)?)?,
            };
            if matches!(a.kind, DrawKind::Thm2) {
                draw_two_outerpath_biplanar(&e, &dec)?
            } else {
                draw_kleetope_split2(&e, &dec)?.drawing
            }
        }
        DrawKind::Thm4 => {
            let e = read_embedded(&a.input)?;
            let dec = match cert {
                Some(Document::PathCopath(c)) => c.to_decomposition(&e)?,
                Some(other) => return Err(wrong_certificate("path-copath", &other)),
                None => settle("path-copath decomposition", find_path_copath(&e, budget)?)?,
            };
            draw_path_copath_split2(&e, &dec)?
        }
        DrawKind::Thm5 | DrawKind::BipartiteK => {
            let g = read_plain(&a.input)?;
            let colors = if matches!(a.kind, DrawKind::Thm5) { 3 } else { 2 };
            let c = match cert {
                Some(Document::Coloring(c)) => c.to_coloring(),
                Some(other) => return Err(wrong_certificate("coloring", &other)),
                None => settle(&format!("{colors}-coloring"), color(&g, colors, budget))?,
            };
            if matches!(a.kind, DrawKind::Thm5) {
                draw_coloring_splitk(&g, &c, a.k)?
            } else {
                draw_bipartite_thicknessk(&g, &c, a.k)?
            }
        }
        DrawKind::Forest => {
            let g = read_plain(&a.input)?;
            let f = match cert {
                Some(Document::Forests(f)) => f.to_partition(),
                Some(other) => return Err(wrong_certificate("forests", &other)),
                None => {
                    let mut found = None;
                    for count in 1..=g.vertex_count().max(1) {
                        if let SearchOutcome::Found(f) = forest_partition(&g, count, budget) {
                            found = Some(f);
                            break;
                        }
                    }
                    found.ok_or_else(|| Fail::Unknown("forest partition: search budget exhausted".into()))?
                }
            };
            draw_forest_closed_blowup(&g, &f)?
        }
    };
    let report = validate_drawing(&drawing)?;
    if !report.is_valid() {
        return Err(Fail::Validation(report.to_string()));
    }
    emit_doc(a.output.as_deref(), &Document::Drawing(DrawingData::from_drawing(&drawing)))
}

fn verify(path: &Path, output: Option<&Path>) -> Outcome {
    let d = read_drawing(path)?;
    let report = validate_drawing(&d)?;
    let mut out = json!({
        "valid": report.is_valid(),
        "edges_realized": report.edges_realized,
        "target_edges": report.target_edges,
        "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    });
    if report.is_valid() {
        let ex = excess_report(&d)?;
        out["excess"] = json!({
            "face_excess": ex.face_excess,
            "component_correction": ex.component_correction,
            "unused_slots": ex.unused_slots,
            "total": ex.total_excess,
            "predicted": ex.predicted_total,
            "max_edges": ex.max_edges,
            "images_on_nontriangular_faces": ex.images_on_nontriangular_faces,
            "nontriangle_vertex_bound": ex.nontriangle_vertex_bound,
        });
        if d.target.k == 2 {
            let l1 = lemma1_detect(&d)?;
            out["lemma1"] = json!({
                "holds": l1.holds(),
                "n": l1.n,
                "threshold": l1.threshold,
                "threshold_applies": l1.threshold_applies,
                "vertices": l1.vertices,
            });
        }
        if matches!(d.kind, DrawingKind::Split(_)) {
            let top = kleetope_level_of(&d.target.graph);
            let mut apexes = Vec::new();
            for v in d.target.graph.vertices().filter(|v| top > 0 && KleetopeVertexTag::parse(v).level() == top) {
                let r = lemma2_check(&d, v)?;
                apexes.push(json!({
                    "vertex": v,
                    "triangular": r.triangular,
                    "shared_edges": r.shared_edges,
                    "all_triangular": r.all_triangular(),
                }));
            }
            out["lemma2"] = json!(apexes);
        }
    }
    let mut text = serde_json::to_string_pretty(&out).map_err(Error::from)?;
    text.push('\n');
    emit(output, &text)?;
    if report.is_valid() {
        Ok(())
    } else {
        Err(Fail::Validation(report.to_string()))
    }
}

fn kleetope_level_of(g: &Graph) -> u32 {
    g.vertices().map(|v| KleetopeVertexTag::parse(v).level()).max().unwrap_or(0)
}

fn decide(a: DecideArgs) -> Outcome {
    let g = read_plain(&a.input)?;
    let budget = a.budget.budget();
    let (what, outcome) = match a.kind {
        DecideKind::Planar => ("planar", decide_planar(&g)?),
        DecideKind::Biplanar => ("biplanar", decide_biplanar(&g, budget)?),
        DecideKind::Split2 => ("split-2", decide_split2(&g, budget)?),
    };
    let answer = match &outcome {
        SearchOutcome::Found(_) => "yes",
        SearchOutcome::None => "no",
        SearchOutcome::Unknown => "unknown",
    };
    eprintln!("{what}: {answer}");
    let d = settle(what, outcome)?;
    emit_doc(a.output.as_deref(), &Document::Drawing(DrawingData::from_drawing(&d)))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Generate(a) => generate(a),
        Command::Decompose(a) => decompose(a),
        Command::Draw(a) => draw(a),
        Command::Verify { drawing, output } => verify(&drawing, output.as_deref()),
        Command::Decide(a) => decide(a),
        Command::ExportSvg { drawing, output } => {
            let d = read_drawing(&drawing)?;
            let svg = export_svg(&d).map_err(|e| Fail::Validation(e.to_string()))?;
            emit(output.as_deref(), &svg)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Fail::Usage(m) => (1, m),
                Fail::Validation(m) => (2, m),
                Fail::None(m) => (3, m),
                Fail::Unknown(m) => (4, m),
            };
            eprintln!("blowup-lab: {msg}");
            ExitCode::from(code)
        }
    }
}
