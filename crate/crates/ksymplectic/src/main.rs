use clap::{Args, Parser, Subcommand};
use ksymplectic::catalog::{
    classification_report, list_entries, load_entry, CatalogEntry, EntryFilter, ReportVerdict,
};
use ksymplectic::cert::verify_certificate;
use ksymplectic::construct::{
    abelian_ksymplectic, double_extension, oscillator, sln_certificate, t_star_extension,
};
use ksymplectic::deriv::{
    admissible_derivations, derivation_space, h2_dimension, inner_derivations,
    skew_derivation_space, MapSpace,
};
use ksymplectic::doc::{emit_document, AlgebraDocument, DocContents};
use ksymplectic::forms::{BilinearForm, QuadraticLieAlgebra};
use ksymplectic::lie::LieAlgebra;
use ksymplectic::linalg::{Mat, Subspace};
use ksymplectic::obstruct::{obstruction_scan, ConstructionTag};
use ksymplectic::rat::{format_rat, parse_rat, Rat};
use ksymplectic::search::{
    search_ksymplectic, search_ksymplectic_plain, SearchOptions, SearchOutcome,
};
use std::io::Read;
use std::process::exit;

/// Exact-arithmetic toolkit for k-symplectic structures on Lie algebras
/// with an invariant metric.
#[derive(Parser)]
#[command(name = "ksymp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a document: Jacobi, metric invariance, and every stored
    /// certificate.
    Check {
        /// Document path, or - for standard input
        file: String,
    },
    /// Build an algebra and print it as a document.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Print a basis of the derivation space of a document's algebra.
    Derivations {
        file: String,
        /// Restrict to skew-symmetric derivations (requires a metric)
        #[arg(long)]
        skew: bool,
        /// Restrict to derivations mapping the given coordinate span h into
        /// h-perp (requires a metric); comma-separated 1-based indices
        #[arg(long, value_name = "INDICES")]
        admissible: Option<String>,
    },
    /// Print dim H² of a document's quadratic algebra.
    H2 { file: String },
    /// Search for a k-symplectic structure on a document's algebra.
    Search {
        file: String,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = 64)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        coeff_bound: i64,
        /// Extra candidate h as comma-separated 1-based indices (repeatable)
        #[arg(long, value_name = "INDICES")]
        candidate: Vec<String>,
    },
    /// Run the non-existence rules against a document's quadratic algebra.
    Obstructions { file: String },
    /// Built-in catalog of quadratic Lie algebras up to dimension 6.
    Catalog {
        #[command(subcommand)]
        what: CatalogCmd,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// T*-extension of the algebra in a document or catalog entry
    Tstar(SourceArg),
    /// Double extension of a quadratic document by a skew map
    DoubleExt {
        #[command(flatten)]
        source: SourceArg,
        /// JSON file holding the map as an array of rows of "p/q" strings
        #[arg(long)]
        map: String,
    },
    /// Oscillator algebra with the given frequencies
    Oscillator {
        /// Comma-separated positive nondecreasing rationals
        #[arg(long)]
        lambdas: String,
    },
    /// Direct product of two documents (metrics combine block-diagonally)
    Product { left: String, right: String },
    /// sl(n, R) with its n-symplectic certificate
    Sln {
        #[arg(long)]
        n: usize,
    },
    /// Abelian algebra of dimension n(k+1) with its k-symplectic certificate
    AbelianKsym {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args)]
struct SourceArg {
    /// Document path, or - for standard input
    #[arg(long, conflicts_with = "entry")]
    file: Option<String>,
    /// Catalog entry name
    #[arg(long)]
    entry: Option<String>,
}

#[derive(Subcommand)]
enum CatalogCmd {
    List {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        tag: Option<String>,
    },
    /// Print one entry as a document
    Show {
        name: String,
        /// Parameter override name=p/q (repeatable)
        #[arg(long, value_name = "NAME=VALUE")]
        param: Vec<String>,
    },
    /// Existence verdict for every entry and every feasible k
    Report {
        /// Emit the report as JSON instead of plain text
        #[arg(long)]
        json: bool,
    },
}

fn fail(code: i32, msg: impl std::fmt::Display) -> ! {
    eprintln!("ksymp: {msg}");
    exit(code)
}

fn read_input(path: &str) -> String {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .unwrap_or_else(|e| fail(2, format!("reading standard input: {e}")));
        s
    } else {
        std::fs::read_to_string(path).unwrap_or_else(|e| fail(2, format!("{path}: {e}")))
    }
}

/// Parse errors exit 2; semantic violations (Jacobi, invariance) exit 1.
fn load_contents(path: &str) -> DocContents {
    let doc = AlgebraDocument::from_json(&read_input(path)).unwrap_or_else(|e| fail(2, e));
    doc.realize().unwrap_or_else(|e| fail(1, e))
}

fn require_quadratic(c: &DocContents) -> &QuadraticLieAlgebra {
    c.quadratic
        .as_ref()
        .unwrap_or_else(|| fail(2, "this operation needs a document with a metric"))
}

fn parse_indices(spec: &str, dim: usize) -> Subspace {
    let idx: Vec<usize> = spec
        .split(',')
        .map(|s| {
            let i: usize = s
                .trim()
                .parse()
                .unwrap_or_else(|_| fail(2, format!("bad index {s:?}")));
            if i == 0 || i > dim {
                fail(2, format!("index {i} out of range 1..={dim}"));
            }
            i - 1
        })
        .collect();
    Subspace::coordinate(dim, &idx)
}

fn parse_rat_arg(s: &str) -> Rat {
    parse_rat(s).unwrap_or_else(|e| fail(2, e))
}

fn print_document(
    name: &str,
    g: &LieAlgebra,
    metric: Option<&BilinearForm>,
    tags: &[ConstructionTag],
    certs: &[ksymplectic::KSymplecticCertificate],
) {
    println!("{}", emit_document(name, g, metric, tags, certs).to_json());
}

fn print_map_basis(label: &str, space: &MapSpace) {
    println!("{label}: dimension {}", space.dim());
    for (idx, m) in space.basis().iter().enumerate() {
        println!("D{}:", idx + 1);
        for r in 0..m.rows() {
            let row: Vec<String> = (0..m.cols()).map(|c| format_rat(&m[(r, c)])).collect();
            println!("  [{}]", row.join(", "));
        }
    }
}

fn entry_from_source(src: &SourceArg) -> (String, LieAlgebra, Option<QuadraticLieAlgebra>) {
    match (&src.file, &src.entry) {
        (Some(path), None) => {
            let c = load_contents(path);
            (c.name, c.algebra, c.quadratic)
        }
        (None, Some(name)) => {
            let e = load_entry(name, &[]).unwrap_or_else(|err| fail(2, err));
            (e.name, e.algebra, e.quadratic)
        }
        _ => fail(2, "give exactly one of --file or --entry"),
    }
}

fn cmd_check(file: &str) {
    let c = load_contents(file);
    println!(
        "{}: dim {}, Jacobi ok{}",
        c.name,
        c.algebra.dim(),
        if c.quadratic.is_some() {
            ", metric invariant and nondegenerate"
        } else {
            ""
        }
    );
    let mut ok = true;
    for cert in &c.certificates {
        match verify_certificate(&c.algebra, cert, c.quadratic.as_ref()) {
            Ok(report) => {
                let extra = match report.h_degenerate {
                    Some(true) => " (h degenerate)",
                    Some(false) => " (h nondegenerate)",
                    None => "",
                };
                println!("certificate k={}: valid{extra}", cert.k);
            }
            Err(e) => {
                ok = false;
                println!("certificate k={}: INVALID: {e}", cert.k);
            }
        }
    }
    if !ok {
        exit(1);
    }
}

fn cmd_construct(what: &ConstructCmd) {
    match what {
        ConstructCmd::Tstar(src) => {
            let (name, g, _) = entry_from_source(src);
            let q = t_star_extension(&g).unwrap_or_else(|e| fail(1, e));
            print_document(
                &format!("T*{name}"),
                q.algebra(),
                Some(q.metric()),
                &[ConstructionTag::TStarExtension],
                &[],
            );
        }
        ConstructCmd::DoubleExt { source, map } => {
            let (name, _, quad) = entry_from_source(source);
            let quad = quad.unwrap_or_else(|| fail(2, "double-ext needs a metric"));
            let rows: Vec<Vec<String>> = serde_json::from_str(&read_input(map))
                .unwrap_or_else(|e| fail(2, format!("{map}: {e}")));
            let n = quad.dim();
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                fail(2, format!("map must be {n}x{n}"));
            }
            let a = Mat::from_fn(n, n, |i, j| parse_rat_arg(&rows[i][j]));
            let q = double_extension(&quad, &a).unwrap_or_else(|e| fail(1, e));
            print_document(
                &format!("double-ext({name})"),
                q.algebra(),
                Some(q.metric()),
                &[],
                &[],
            );
        }
        ConstructCmd::Oscillator { lambdas } => {
            let ls: Vec<Rat> = lambdas.split(',').map(|s| parse_rat_arg(s.trim())).collect();
            let q = oscillator(&ls).unwrap_or_else(|e| fail(1, e));
            print_document(
                "oscillator",
                q.algebra(),
                Some(q.metric()),
                &[
                    ConstructionTag::Oscillator,
                    ConstructionTag::DoubleExtensionNonNilpotent,
                ],
                &[],
            );
        }
        ConstructCmd::Product { left, right } => {
            let a = load_contents(left);
            let b = load_contents(right);
            let g = a.algebra.direct_product(&b.algebra);
            let metric = match (&a.quadratic, &b.quadratic) {
                (Some(qa), Some(qb)) => {
                    let (da, d) = (qa.dim(), g.dim());
                    let m = Mat::from_fn(d, d, |i, j| match (i < da, j < da) {
                        (true, true) => qa.metric().matrix()[(i, j)].clone(),
                        (false, false) => qb.metric().matrix()[(i - da, j - da)].clone(),
                        _ => Rat::default(),
                    });
                    Some(BilinearForm::symmetric(m))
                }
                _ => None,
            };
            print_document(
                &format!("{} x {}", a.name, b.name),
                &g,
                metric.as_ref(),
                &[],
                &[],
            );
        }
        ConstructCmd::Sln { n } => {
            let (g, cert) = sln_certificate(*n).unwrap_or_else(|e| fail(2, e));
            print_document(&format!("sl({n},R)"), &g, None, &[], &[cert]);
        }
        ConstructCmd::AbelianKsym { n, k } => {
            let (q, cert) = abelian_ksymplectic(*n, *k).unwrap_or_else(|e| fail(2, e));
            print_document(
                &format!("abelian({n},{k})"),
                q.algebra(),
                Some(q.metric()),
                &[],
                &[cert],
            );
        }
    }
}

fn cmd_derivations(file: &str, skew: bool, admissible: Option<&str>) {
    let c = load_contents(file);
    match admissible {
        Some(spec) => {
            let q = require_quadratic(&c);
            let h = parse_indices(spec, q.dim());
            let space = admissible_derivations(q, &h);
            print_map_basis("admissible derivations", &space);
            let ker = space.common_kernel();
            if ker.is_zero() {
                println!("common kernel: zero");
            } else {
                let w: Vec<String> = ker.basis().col(0).iter().map(format_rat).collect();
                println!("common kernel: nonzero, witness [{}]", w.join(", "));
            }
        }
        None if skew => {
            let q = require_quadratic(&c);
            print_map_basis("skew-symmetric derivations", &skew_derivation_space(q));
        }
        None => print_map_basis("derivations", &derivation_space(&c.algebra)),
    }
}

fn cmd_h2(file: &str) {
    let c = load_contents(file);
    let q = require_quadratic(&c);
    println!(
        "dim H2 = {} (skew derivations {}, inner {})",
        h2_dimension(q),
        skew_derivation_space(q).dim(),
        inner_derivations(q.algebra()).dim()
    );
}

fn print_certificate(cert: &ksymplectic::KSymplecticCertificate) {
    println!("found k={} certificate, dim h = {}", cert.k, cert.h.dim());
    println!("h basis:");
    for v in cert.h.basis_vectors() {
        let row: Vec<String> = v.iter().map(format_rat).collect();
        println!("  [{}]", row.join(", "));
    }
    for (alpha, theta) in cert.thetas.iter().enumerate() {
        let mut terms = Vec::new();
        let d = theta.dim();
        for i in 0..d {
            for j in i + 1..d {
                let v = &theta.matrix()[(i, j)];
                if !num_traits::Zero::is_zero(v) {
                    terms.push(format!("{} e{}*^e{}*", format_rat(v), i + 1, j + 1));
                }
            }
        }
        println!("theta_{}: {}", alpha + 1, terms.join(" + "));
    }
}

fn cmd_search(c: &DocContents, k: usize, opts: SearchOptions) {
    let outcome = match &c.quadratic {
        Some(q) => search_ksymplectic(q, k, &c.tags, &opts),
        None => search_ksymplectic_plain(&c.algebra, k, &opts),
    }
    .unwrap_or_else(|e| fail(2, e));
    match outcome {
        SearchOutcome::Found(cert) => {
            verify_certificate(&c.algebra, &cert, c.quadratic.as_ref())
                .expect("search output re-verifies");
            print_certificate(&cert);
        }
        SearchOutcome::Obstructed(verdicts) => {
            println!("no k={k} structure exists:");
            for v in verdicts {
                println!("  {v}");
            }
        }
        SearchOutcome::Inconclusive(reports) => {
            println!("inconclusive after examining {} candidate(s):", reports.len());
            for r in reports {
                let idx: Vec<String> = r
                    .h
                    .basis_vectors()
                    .iter()
                    .map(|v| {
                        let row: Vec<String> = v.iter().map(format_rat).collect();
                        format!("[{}]", row.join(", "))
                    })
                    .collect();
                match r.blocked_witness {
                    Some(w) => {
                        let w: Vec<String> = w.iter().map(format_rat).collect();
                        println!("  h = {}: blocked, witness [{}]", idx.join(" "), w.join(", "));
                    }
                    None => println!("  h = {}: {} trials, none verified", idx.join(" "), r.trials),
                }
            }
        }
    }
}

fn cmd_obstructions(file: &str) {
    let c = load_contents(file);
    let q = require_quadratic(&c);
    for v in obstruction_scan(q, &c.tags) {
        println!("{v}");
    }
}

fn entry_document(e: &CatalogEntry) -> AlgebraDocument {
    emit_document(
        &e.name,
        &e.algebra,
        e.quadratic.as_ref().map(|q| q.metric()),
        &e.tags,
        &e.certificates,
    )
}

fn cmd_catalog(what: &CatalogCmd) {
    match what {
        CatalogCmd::List { dim, tag } => {
            let filter = match (dim, tag) {
                (Some(d), None) => EntryFilter::Dimension(*d),
                (None, Some(t)) => EntryFilter::Tag(
                    ConstructionTag::from_label(t)
                        .unwrap_or_else(|| fail(2, format!("unknown tag {t:?}"))),
                ),
                (None, None) => EntryFilter::All,
                _ => fail(2, "give at most one of --dim and --tag"),
            };
            for name in list_entries(&filter) {
                println!("{name}");
            }
        }
        CatalogCmd::Show { name, param } => {
            let overrides: Vec<(String, Rat)> = param
                .iter()
                .map(|p| {
                    let (n, v) = p
                        .split_once('=')
                        .unwrap_or_else(|| fail(2, format!("expected NAME=VALUE, got {p:?}")));
                    (n.to_string(), parse_rat_arg(v))
                })
                .collect();
            let refs: Vec<(&str, Rat)> = overrides
                .iter()
                .map(|(n, v)| (n.as_str(), v.clone()))
                .collect();
            let e = load_entry(name, &refs).unwrap_or_else(|err| fail(2, err));
            println!("{}", entry_document(&e).to_json());
        }
        CatalogCmd::Report { json } => {
            let report = classification_report();
            if !*json {
                print!("{report}");
                return;
            }
            let rows: Vec<serde_json::Value> = report
                .rows
                .iter()
                .map(|r| {
                    let (verdict, citation) = match &r.verdict {
                        ReportVerdict::Exists => ("exists", None),
                        ReportVerdict::None { citation } => ("none", Some(citation.clone())),
                        ReportVerdict::Inconclusive => ("inconclusive", None),
                    };
                    serde_json::json!({
                        "entry": r.entry,
                        "k": r.k,
                        "verdict": verdict,
                        "citation": citation,
                    })
                })
                .collect();
            let doc = serde_json::json!({ "format_version": 1, "rows": rows });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match &cli.command {
        Command::Check { file } => cmd_check(file),
        Command::Construct { what } => cmd_construct(what),
        Command::Derivations { file, skew, admissible } => {
            cmd_derivations(file, *skew, admissible.as_deref())
        }
        Command::H2 { file } => cmd_h2(file),
        Command::Search { file, k, trials, seed, coeff_bound, candidate } => {
            let contents = load_contents(file);
            let extra: Vec<Subspace> = candidate
                .iter()
                .map(|spec| parse_indices(spec, contents.algebra.dim()))
                .collect();
            cmd_search(
                &contents,
                *k,
                SearchOptions {
                    trials: *trials,
                    seed: *seed,
                    coeff_bound: *coeff_bound,
                    extra_h_candidates: extra,
                },
            );
        }
        Command::Obstructions { file } => cmd_obstructions(file),
        Command::Catalog { what } => cmd_catalog(what),
    }
}
