mod input;
mod report;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use convex1d::enumerate::{binomial, brute_force_table, interval_rows, max_rows, BRUTE_FORCE_MAX_N};
use convex1d::{
    count_table, extract_code_dense, extract_code_sparse, normalize_arbitrary, realize_matrix,
    reconstruct_dense_linear, reconstruct_multiset_dense_linear, reconstruct_multiset_sparse, reconstruct_sparse,
    regime_check, rejection_certificate, to_closed, to_open, CertificateOutcome, CodeMultiset, Density, Geometry,
    Regime, SensorMatrix,
};

use input::{ArrangementFile, CodeFile, ParseError};
use report::{
    arrangement_doc, certificate_doc, counts_doc, matrix_doc, render_json, render_text, ResultDocument, Status,
};

/// Realizability of one-dimensional convex codes on the line and circle.
#[derive(Parser, Debug)]
#[command(name = "convex1d", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a code is realizable and print a sensor matrix or a
    /// rejection certificate.
    Check(CodeArgs),
    /// Like `check`, but also print exact intervals and sensor positions.
    Realize(CodeArgs),
    /// Two-color the incompatibility graph of a code, or print an odd cycle.
    Certificate {
        file: PathBuf,
    },
    /// Count discrete interval sets by number of sensors and rows.
    Enumerate(EnumerateArgs),
    /// Move interval endpoints onto sensors, or swap open and closed ends,
    /// keeping the code.
    Normalize(NormalizeArgs),
}

#[derive(clap::Args, Debug)]
struct CodeArgs {
    /// Code file: one codeword per line, or `count codeword`; `#` starts a
    /// comment.
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = GeometryArg::Line)]
    geometry: GeometryArg,
    #[arg(long, value_enum, default_value_t = DensityArg::Sparse)]
    regime: DensityArg,
    /// Use the counts in the file as exact column multiplicities.
    #[arg(long)]
    multiset: bool,
}

#[derive(clap::Args, Debug)]
struct EnumerateArgs {
    #[arg(long, value_enum, default_value_t = DensityArg::Dense)]
    regime: DensityArg,
    #[arg(long, value_enum, default_value_t = GeometryArg::Line)]
    geometry: GeometryArg,
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// Defaults to the largest possible number of rows.
    #[arg(long)]
    max_k: Option<usize>,
    /// Recount by exhaustive search and fail on any mismatch.
    #[arg(long)]
    oracle: bool,
}

#[derive(clap::Args, Debug)]
struct NormalizeArgs {
    /// Arrangement file: one interval per line (`[1, 7/2)`, `(-inf, 2]`,
    /// `empty`, `whole`) and an optional `sensors: ...` line.
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = GeometryArg::Line)]
    geometry: GeometryArg,
    #[arg(long, value_enum)]
    to: Target,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Structured,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GeometryArg {
    Line,
    Circle,
}

impl From<GeometryArg> for Geometry {
    fn from(g: GeometryArg) -> Self {
        match g {
            GeometryArg::Line => Geometry::Line,
            GeometryArg::Circle => Geometry::Circle,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DensityArg {
    Sparse,
    Dense,
}

impl From<DensityArg> for Density {
    fn from(d: DensityArg) -> Self {
        match d {
            DensityArg::Sparse => Density::Sparse,
            DensityArg::Dense => Density::Dense,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Target {
    /// Half-open intervals with sensor endpoints; keeps the sensor readings.
    Sensors,
    /// Open to closed; keeps every codeword the arrangement produces.
    Closed,
    /// Closed to open; keeps every codeword the arrangement produces.
    Open,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    SizeLimit(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 64,
            Failure::SizeLimit(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::SizeLimit(m) => f.write_str(m),
        }
    }
}

fn input_error(path: &Path, e: ParseError) -> Failure {
    Failure::Input(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn library_error(e: convex1d::Error) -> Failure {
    match e {
        convex1d::Error::SizeLimit { .. } => Failure::SizeLimit(e.to_string()),
        other => Failure::Input(other.to_string()),
    }
}

/// Reconstruction for `check` and `realize`: the document plus the matrix
/// when one exists.
fn solve(command: &'static str, args: &CodeArgs) -> Result<(ResultDocument, Option<SensorMatrix>), Failure> {
    let file: CodeFile = read(&args.file)?.parse().map_err(|e| input_error(&args.file, e))?;
    let geometry = Geometry::from(args.geometry);
    let regime = Regime::new(geometry, args.regime.into());
    let code = file.code();
    let k = code.k();

    if regime == Regime::HCCO {
        let mut doc = ResultDocument::new(command, Status::Unsupported);
        doc.regime = Some(regime.name().into());
        doc.message = Some(
            "no reconstruction algorithm is known for dense codes on the circle; \
             try --regime sparse or --geometry line"
                .into(),
        );
        return Ok((doc, None));
    }

    let matrix = match (args.multiset, regime.density) {
        (false, Density::Sparse) => reconstruct_sparse(&code, geometry),
        (false, Density::Dense) => reconstruct_dense_linear(&code).map(|mo| mo.to_matrix()),
        (true, Density::Sparse) => reconstruct_multiset_sparse(&file.multiset, geometry),
        (true, Density::Dense) => reconstruct_multiset_dense_linear(&file.multiset).map(|mo| mo.to_matrix()),
    };

    let mut doc;
    match &matrix {
        Some(m) => {
            assert!(regime_check(m, regime), "self-check: emitted matrix fails the {regime} check");
            if args.multiset {
                let got = CodeMultiset::from_columns(k, &m.columns()).expect("columns have length k");
                assert_eq!(got, file.multiset, "self-check: column multiplicities differ from the input");
            } else {
                assert_eq!(m.column_set(), code, "self-check: column set differs from the input");
            }
            doc = ResultDocument::new(command, Status::Feasible);
            doc.matrix = Some(matrix_doc(m));
        }
        None => {
            doc = ResultDocument::new(command, Status::Infeasible);
            let mut message = match (geometry, regime.density) {
                (Geometry::Line, Density::Sparse) => "no consecutive-ones ordering exists",
                (Geometry::Circle, _) => "no circular-ones ordering exists",
                (Geometry::Line, Density::Dense) if args.multiset => {
                    "no harmonious arrangement of the columns with exactly these multiplicities exists"
                }
                (Geometry::Line, Density::Dense) => "no harmonious multiordering of these codewords exists",
            }
            .to_string();
            if geometry == Geometry::Line {
                if let CertificateOutcome::OddCycle(cert) = rejection_certificate(&code) {
                    assert!(cert.verify(&code), "self-check: odd cycle does not verify");
                    doc.certificate = Some(certificate_doc(&cert));
                    message.push_str("; the incompatibility graph has an odd cycle");
                }
            }
            doc.message = Some(message);
        }
    }
    doc.regime = Some(regime.name().into());
    Ok((doc, matrix))
}

fn cmd_realize(args: &CodeArgs) -> Result<ResultDocument, Failure> {
    let (mut doc, matrix) = solve("realize", args)?;
    let Some(m) = matrix else {
        return Ok(doc);
    };
    let regime = Regime::new(args.geometry.into(), args.regime.into());
    let (arr, sensors) = realize_matrix(&m, regime).expect("checked matrices are realizable");
    match regime.density {
        Density::Sparse => {
            let (_, back) = extract_code_sparse(&arr, &sensors).expect("sensors are valid");
            assert_eq!(back, m, "self-check: sensor readings differ from the matrix");
        }
        Density::Dense => {
            assert_eq!(extract_code_dense(&arr), m.column_set(), "self-check: dense code differs from the columns");
        }
    }
    doc.arrangement = Some(arrangement_doc(&arr, Some(&sensors)));
    Ok(doc)
}

fn cmd_certificate(path: &Path) -> Result<ResultDocument, Failure> {
    let file: CodeFile = read(path)?.parse().map_err(|e| input_error(path, e))?;
    let code = file.code();
    let doc = match rejection_certificate(&code) {
        CertificateOutcome::Bipartition(b) => {
            assert!(b.verify(&code), "self-check: two-coloring is not proper");
            let mut doc = ResultDocument::new("certificate", Status::Feasible);
            doc.message = Some("the incompatibility graph is bipartite".into());
            let m = reconstruct_sparse(&code, Geometry::Line).expect("bipartite codes have an ordering");
            assert!(regime_check(&m, Regime::CO), "self-check: emitted matrix fails the CO check");
            doc.matrix = Some(matrix_doc(&m));
            doc
        }
        CertificateOutcome::OddCycle(cert) => {
            assert!(cert.verify(&code), "self-check: odd cycle does not verify");
            let mut doc = ResultDocument::new("certificate", Status::Infeasible);
            doc.message = Some(format!("odd cycle of length {}", cert.odd_cycle.len()));
            doc.certificate = Some(certificate_doc(&cert));
            doc
        }
    };
    Ok(doc)
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<ResultDocument, Failure> {
    let geometry = Geometry::from(args.geometry);
    let regime = Regime::new(geometry, args.regime.into());
    let max_k = args.max_k.unwrap_or_else(|| max_rows(args.max_n, geometry));
    if args.oracle && args.max_n > BRUTE_FORCE_MAX_N {
        return Err(library_error(convex1d::Error::SizeLimit {
            what: "n",
            value: args.max_n,
            max: BRUTE_FORCE_MAX_N,
        }));
    }
    let table = count_table(regime, args.max_n, max_k);
    let mut doc = ResultDocument::new("enumerate", Status::Feasible);
    doc.regime = Some(regime.name().into());
    if args.oracle {
        match regime.density {
            Density::Dense => {
                let brute = brute_force_table(args.max_n, max_k, geometry).map_err(library_error)?;
                for n in 0..=args.max_n {
                    assert_eq!(table.row(n), brute.row(n), "oracle mismatch at n = {n}");
                }
            }
            Density::Sparse => {
                for n in 0..=args.max_n {
                    let rows = interval_rows(n, geometry).len();
                    for k in 0..=max_k {
                        assert_eq!(table.get(n, k), binomial(rows, k), "oracle mismatch at n = {n}, k = {k}");
                    }
                }
            }
        }
        doc.message = Some(format!("exhaustive search agrees for n <= {}", args.max_n));
    }
    doc.counts = Some(counts_doc(&table));
    Ok(doc)
}

fn cmd_normalize(args: &NormalizeArgs) -> Result<ResultDocument, Failure> {
    let file = ArrangementFile::parse(&read(&args.file)?).map_err(|e| input_error(&args.file, e))?;
    let arr = file.arrangement(args.geometry.into()).map_err(|e| input_error(&args.file, e))?;
    let sensors = file.sensor_set().map_err(|e| input_error(&args.file, e))?;
    let mut doc = ResultDocument::new("normalize", Status::Feasible);
    match args.to {
        Target::Sensors => {
            let sensors = sensors
                .ok_or_else(|| Failure::Input(format!("{}: --to sensors needs a `sensors:` line", args.file.display())))?;
            let (code, m) = extract_code_sparse(&arr, &sensors).map_err(library_error)?;
            let out = normalize_arbitrary(&arr, &sensors).map_err(library_error)?;
            let (_, back) = extract_code_sparse(&out, &sensors).expect("sensors are valid");
            assert_eq!(back, m, "self-check: sensor readings changed");
            assert_eq!(extract_code_dense(&out), code, "self-check: dense code differs from the sensor code");
            doc.matrix = Some(matrix_doc(&m));
            doc.message = Some(format!("sensor readings preserved; {} codewords", code.len()));
            doc.arrangement = Some(arrangement_doc(&out, Some(&sensors)));
        }
        Target::Closed | Target::Open => {
            let out = match args.to {
                Target::Closed => to_closed(&arr),
                _ => to_open(&arr),
            }
            .map_err(library_error)?;
            let code = extract_code_dense(&arr);
            assert_eq!(extract_code_dense(&out), code, "self-check: dense code changed");
            doc.message = Some(format!("dense code preserved; {} codewords", code.len()));
            doc.arrangement = Some(arrangement_doc(&out, sensors.as_ref()));
        }
    }
    Ok(doc)
}

fn run(cli: &Cli) -> Result<ResultDocument, Failure> {
    match &cli.command {
        Command::Check(args) => solve("check", args).map(|(doc, _)| doc),
        Command::Realize(args) => cmd_realize(args),
        Command::Certificate { file } => cmd_certificate(file),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Normalize(args) => cmd_normalize(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(doc) => {
            let text = match cli.format {
                Format::Text => render_text(&doc),
                Format::Structured => render_json(&doc),
            };
            print!("{text}");
            ExitCode::from(doc.status.exit_code())
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
