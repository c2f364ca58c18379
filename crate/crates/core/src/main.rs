//! `jr` - command-line surface: code torus points into Wang configurations,
//! plot orbit-boundary sets, print worm decompositions, verify the
//! normalization table, and run the data-verification suites.

use clap::{Args, Parser, Subcommand};
use jr::exactnum::{GoldenNum, Vec2};
use jr::nonexpansive;
use jr::partition::{self, Partition, SlopeClass};
use jr::tileset::TileSet;
use jr::torus::TorusPoint;
use jr::worms::{self, WormCase};
use jr::{coding, render};
use std::collections::BTreeSet;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "jr", version, about = "Jeandel-Rao Wang shift toolkit")]
struct Cli {
    /// Partition data file (defaults to the built-in data; env JR_PARTITION).
    #[arg(long, global = true, env = "JR_PARTITION")]
    partition: Option<std::path::PathBuf>,
    /// Tile data file (defaults to the built-in data; env JR_TILES).
    #[arg(long, global = true, env = "JR_TILES")]
    tiles: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Code a torus point into a Wang configuration over a window.
    Code(CodeArgs),
    /// List the orbit points landing on the partition boundary.
    OrbitDelta(OrbitArgs),
    /// Print the worm decomposition of one case at a parameter rho.
    Worm(WormArgs),
    /// Print and verify every row of the Delta-line normalization table.
    Table1(Table1Args),
    /// Run verification suites over the shipped data.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CodeArgs {
    /// Base point, e.g. "(1/4*phi + -1/4, 1/4)".
    #[arg(long)]
    point: String,
    /// Coding direction (default (1, -1)).
    #[arg(long, default_value = "(1, -1)")]
    direction: String,
    /// Also code with the opposite direction and highlight the differences.
    #[arg(long)]
    pair: bool,
    /// Window: either a radius N (square [-N,N]^2) or "x0,y0,x1,y1".
    #[arg(long, default_value = "10")]
    window: String,
    #[arg(long, default_value = "txt")]
    format: Format,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct OrbitArgs {
    #[arg(long)]
    point: String,
    #[arg(long, default_value = "30")]
    window: String,
    #[arg(long, default_value = "txt")]
    format: Format,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct WormArgs {
    /// Slope case: 0, phi, phi2, or inf.
    #[arg(long)]
    case: String,
    /// Exact parameter rho in [0, 1), e.g. "9/10".
    #[arg(long)]
    rho: String,
    /// Mechanical index range "a,b".
    #[arg(long, default_value = "-8,8")]
    range: String,
    #[arg(long, default_value = "txt")]
    format: Format,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct Table1Args {}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: all, data, table1, tiles.
    #[arg(default_value = "all")]
    suite: String,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Txt,
    Svg,
    Json,
}

const EXIT_USAGE: u8 = 1;
const EXIT_DATA: u8 = 2;
const EXIT_VERIFY: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // Help/version are not usage errors.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_USAGE,
        message: msg.into(),
    }
}

fn data_err(msg: impl ToString) -> CliError {
    CliError {
        code: EXIT_DATA,
        message: msg.to_string(),
    }
}

fn verify_err(msg: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_VERIFY,
        message: msg.into(),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let partition_data = match &cli.partition {
        Some(p) => std::fs::read_to_string(p).map_err(data_err)?,
        None => partition::DEFAULT_PARTITION_DATA.to_string(),
    };
    let tile_data = match &cli.tiles {
        Some(p) => std::fs::read_to_string(p).map_err(data_err)?,
        None => jr::tileset::DEFAULT_TILE_DATA.to_string(),
    };
    let partition = Partition::load(&partition_data).map_err(data_err)?;
    let tiles = TileSet::load(&tile_data).map_err(data_err)?;
    let checksums: Vec<(&str, &str)> = vec![
        ("partition", partition.checksum.as_str()),
        ("tiles", tiles.checksum.as_str()),
    ];

    match cli.command {
        Command::Code(a) => cmd_code(&partition, &tiles, &checksums, a),
        Command::OrbitDelta(a) => cmd_orbit_delta(&partition, &checksums, a),
        Command::Worm(a) => cmd_worm(&partition, a),
        Command::Table1(_) => cmd_table1(&partition),
        Command::Verify(a) => cmd_verify(&partition, &tiles, &a.suite),
    }
}

fn parse_point(s: &str) -> Result<TorusPoint, CliError> {
    let v = Vec2::from_str(s).map_err(|e| usage(format!("bad point {s:?}: {e}")))?;
    Ok(TorusPoint::reduce(&v))
}

fn parse_window(s: &str) -> Result<(i64, i64, i64, i64), CliError> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("bad window {s:?}")))?;
    match parts.as_slice() {
        [r] if *r >= 0 => Ok((-r, -r, *r, *r)),
        [x0, y0, x1, y1] if x0 <= x1 && y0 <= y1 => Ok((*x0, *y0, *x1, *y1)),
        _ => Err(usage(format!("bad window {s:?}"))),
    }
}

fn emit(out: &Option<std::path::PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, content).map_err(data_err),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_code(
    partition: &Partition,
    tiles: &TileSet,
    checksums: &[(&str, &str)],
    a: CodeArgs,
) -> Result<(), CliError> {
    let p = parse_point(&a.point)?;
    let v = Vec2::from_str(&a.direction)
        .map_err(|e| usage(format!("bad direction {:?}: {e}", a.direction)))?;
    if !Partition::direction_admissible(&v) {
        return Err(usage(format!(
            "direction {v} is parallel to a Delta slope class"
        )));
    }
    let window = parse_window(&a.window)?;
    let config = coding::configuration_with(partition, &p, &v, window).map_err(data_err)?;
    let diff: Option<BTreeSet<(i64, i64)>> = if a.pair {
        let (plus, minus) =
            coding::symbolic_pair_with(partition, &p, &v, window).map_err(data_err)?;
        Some(
            plus.difference_set(&minus)
                .map_err(data_err)?
                .into_iter()
                .collect(),
        )
    } else {
        None
    };
    if !tiles.is_valid(&config).is_ok() {
        return Err(verify_err("coded configuration fails edge matching"));
    }
    let content = match a.format {
        Format::Txt => {
            let mut s = config.to_text();
            if let Some(d) = &diff {
                s.push_str(&format!(
                    "diff {}\n",
                    d.iter()
                        .map(|(x, y)| format!("({x},{y})"))
                        .collect::<Vec<_>>()
                        .join(" ")
                ));
            }
            s
        }
        Format::Svg => render::svg_configuration(&config, diff.as_ref(), checksums),
        Format::Json => {
            let cells: Vec<String> = config
                .cells
                .iter()
                .map(|((x, y), t)| format!("[{x},{y},{t}]"))
                .collect();
            let d = diff
                .as_ref()
                .map(|d| {
                    d.iter()
                        .map(|(x, y)| format!("[{x},{y}]"))
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .unwrap_or_default();
            format!(
                "{{\"window\":[{},{},{},{}],\"cells\":[{}],\"diff\":[{}]}}\n",
                config.window.0,
                config.window.1,
                config.window.2,
                config.window.3,
                cells.join(","),
                d
            )
        }
    };
    emit(&a.out, &content)
}

fn cmd_orbit_delta(
    partition: &Partition,
    checksums: &[(&str, &str)],
    a: OrbitArgs,
) -> Result<(), CliError> {
    let p = parse_point(&a.point)?;
    let window = parse_window(&a.window)?;
    let points = nonexpansive::orbit_delta(partition, &p, window);
    let fit = nonexpansive::strip_fit(&points);
    let content = match a.format {
        Format::Txt => {
            let mut s = String::new();
            for (x, y) in &points {
                s.push_str(&format!("{x} {y}\n"));
            }
            match &fit {
                Some(f) => s.push_str(&format!(
                    "strip-fit direction ({}, {}) width^2 {}\n",
                    f.direction.0, f.direction.1, f.width_sq
                )),
                None => s.push_str("no points in window\n"),
            }
            s
        }
        Format::Svg => render::svg_scatter(&points, window, fit.as_ref(), checksums),
        Format::Json => {
            let pts: Vec<String> = points.iter().map(|(x, y)| format!("[{x},{y}]")).collect();
            let f = fit
                .as_ref()
                .map(|f| {
                    format!(
                        ",\"fit\":{{\"direction\":[{},{}],\"width_sq\":\"{}\"}}",
                        f.direction.0, f.direction.1, f.width_sq
                    )
                })
                .unwrap_or_default();
            format!("{{\"points\":[{}]{}}}\n", pts.join(","), f)
        }
    };
    emit(&a.out, &content)
}

fn parse_slope(s: &str) -> Result<SlopeClass, CliError> {
    s.parse()
        .map_err(|_| usage(format!("unknown case {s:?} (use 0, phi, phi2, inf)")))
}

fn cmd_worm(partition: &Partition, a: WormArgs) -> Result<(), CliError> {
    let slope = parse_slope(&a.case)?;
    let rho = GoldenNum::from_str(&a.rho).map_err(|e| usage(format!("bad rho: {e}")))?;
    if rho.sign() < 0 || (&rho - &GoldenNum::one()).sign() >= 0 {
        return Err(usage("rho must lie in [0, 1)"));
    }
    let parts: Vec<i64> = a
        .range
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("bad range {:?}", a.range)))?;
    let range = match parts.as_slice() {
        [lo, hi] if lo <= hi => (*lo, *hi),
        _ => return Err(usage(format!("bad range {:?}", a.range))),
    };
    let case = WormCase::for_slope(slope);
    let params = worms::RotationParams::worm(rho.clone());
    let word = worms::mechanical_word(&params, range, worms::WordKind::Lower);
    let (h, v) = worms::hv_points(&params, range);
    let (bh, gv) = worms::worm_anchors(&case, &rho, range);
    let mut s = String::new();
    s.push_str(&format!("case {slope} rho {rho} alpha 2/1 + -1/1*phi\n"));
    s.push_str(&format!("base point {}\n", case.point_of_rho(&rho).rep()));
    let fmt_pts = |pts: &[(i64, i64)]| {
        pts.iter()
            .map(|(x, y)| format!("({x},{y})"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    s.push_str(&format!(
        "word {}\n",
        word.iter().map(|c| c.to_string()).collect::<String>()
    ));
    s.push_str(&format!("H {}\n", fmt_pts(&h)));
    s.push_str(&format!("V {}\n", fmt_pts(&v)));
    s.push_str(&format!("MH {}\n", fmt_pts(&bh)));
    s.push_str(&format!("MV {}\n", fmt_pts(&gv)));
    if slope == SlopeClass::Inf {
        let dec = worms::WormDecomposition {
            slope,
            rho: rho.clone(),
            b_anchors: bh.clone(),
            g_anchors: gv.clone(),
            delta_set: Default::default(),
        };
        let heights = worms::height_sequence(&dec);
        s.push_str(&format!(
            "heights {}\n",
            heights
                .iter()
                .map(|h| h.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ));
    }
    let _ = partition;
    emit(&a.out, &s)
}

fn cmd_table1(partition: &Partition) -> Result<(), CliError> {
    let rows = partition::normalization_table();
    let mut bad = 0;
    for r in &rows {
        let ok = partition::verify_table_row(partition, r);
        if !ok {
            bad += 1;
        }
        println!(
            "line {:>2} slope {:>4} domain [{}, {}] shift ({}, {}) {}",
            r.line,
            r.slope.token(),
            r.lo,
            r.hi,
            r.shift.0,
            r.shift.1,
            if ok { "ok" } else { "FAIL" }
        );
    }
    println!("{} rows, {} failures", rows.len(), bad);
    if bad > 0 {
        return Err(verify_err(format!("{bad} normalization rows failed")));
    }
    Ok(())
}

fn cmd_verify(partition: &Partition, tiles: &TileSet, suite: &str) -> Result<(), CliError> {
    let mut failures = 0usize;
    let mut check = |name: &str, ok: bool| {
        println!("{}: {}", name, if ok { "pass" } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };
    let run_data = suite == "all" || suite == "data";
    let run_table = suite == "all" || suite == "table1";
    let run_tiles = suite == "all" || suite == "tiles";
    if !(run_data || run_table || run_tiles) {
        return Err(usage(format!("unknown suite {suite:?}")));
    }
    if run_data {
        // Loading already validated everything; spot-check the area identity.
        let total: GoldenNum = partition
            .atoms
            .iter()
            .flat_map(|a| a.pieces.iter())
            .map(|p| p.signed_area())
            .fold(GoldenNum::zero(), |acc, a| acc + a);
        check("partition: exact total area 4*phi + 1", total == GoldenNum::of(1, 4));
        check(
            "partition: 11 atoms, 18 Delta-lines",
            partition.atoms.len() == 11 && partition.lines.len() == 18,
        );
    }
    if run_table {
        let rows = partition::normalization_table();
        let ok = rows
            .iter()
            .all(|r| partition::verify_table_row(partition, r));
        check("table1: every normalization row verified", ok);
    }
    if run_tiles {
        check("tiles: 11 tiles with structural facts", tiles.tiles.len() == 11);
        // A coded window is valid.
        let p = TorusPoint::reduce(&Vec2::new(
            GoldenNum::rational(1, 7),
            GoldenNum::rational(2, 7) + GoldenNum::phi(),
        ));
        let cfg = coding::configuration_with(
            partition,
            &p,
            &coding::default_direction(),
            (-5, -5, 5, 5),
        )
        .map_err(data_err)?;
        check("coding: sample window passes edge matching", tiles.is_valid(&cfg).is_ok());
    }
    if failures > 0 {
        Err(verify_err(format!("{failures} checks failed")))
    } else {
        Ok(())
    }
}
