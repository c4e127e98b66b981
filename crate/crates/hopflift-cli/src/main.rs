use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hopflift_cli::commands;

/// Exact kissing configurations via Hopf lifts: the 24-cell, E8 and
/// the Barnes–Wall Λ16 shell, built, verified and rendered with no
/// floating-point arithmetic in the pipeline.
#[derive(Parser)]
#[command(name = "hopflift", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a configuration and write it as canonical JSON.
    Build {
        /// cell24 | e8 | lambda16
        target: String,
        /// hopf | canonical
        method: String,
        /// Output JSON path.
        out: PathBuf,
    },
    /// Re-check a configuration file: exact invariants, kissing
    /// property, and the known counts for named constructions.
    Verify {
        path: PathBuf,
    },
    /// Compare two configuration files by exact dot spectrum and
    /// lattice certificate.
    Compare {
        path_a: PathBuf,
        path_b: PathBuf,
    },
    /// Render rotation frames as an SVG grid (or one file per frame).
    Render {
        path: PathBuf,
        /// Output SVG path.
        out: PathBuf,
        /// Number of frames; frame i is rotated by i·2π/frames.
        #[arg(long, default_value_t = 1)]
        frames: usize,
        /// Rotation plane as two axis indices.
        #[arg(long, num_args = 2, value_names = ["I", "J"], default_values_t = [0, 2])]
        plane: Vec<usize>,
        /// Projection axes as two axis indices.
        #[arg(long, num_args = 2, value_names = ["I", "J"], default_values_t = [0, 1])]
        axes: Vec<usize>,
        /// Subfigure size in pixels.
        #[arg(long, num_args = 2, value_names = ["W", "H"], default_values_t = [240, 240])]
        canvas: Vec<u32>,
        /// Marker radius in pixels.
        #[arg(long, default_value_t = 3.0)]
        radius: f64,
        /// Write frame_000.svg … instead of one grid document.
        #[arg(long)]
        per_frame: bool,
    },
    /// Export a configuration as CSV (floats, 17 significant digits).
    Export {
        path: PathBuf,
        /// Output CSV path.
        out: PathBuf,
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Lift the 40 D5 kissing points of S⁴ to S⁷ and report the exact
    /// maximal dot (exploratory; no fixed expectation).
    ExperimentE5 {
        /// Fiber points per base point: 1, 2, 4 or 8.
        #[arg(long, default_value_t = 4)]
        fiber_size: u8,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build {
            target,
            method,
            out,
        } => commands::build(&target, &method, &out),
        Command::Verify { path } => commands::verify(&path),
        Command::Compare { path_a, path_b } => commands::compare(&path_a, &path_b),
        Command::Render {
            path,
            out,
            frames,
            plane,
            axes,
            canvas,
            radius,
            per_frame,
        } => commands::render(
            &path,
            &out,
            frames,
            (plane[0], plane[1]),
            (axes[0], axes[1]),
            (canvas[0], canvas[1]),
            radius,
            per_frame,
        ),
        Command::Export { path, out, format } => commands::export(&path, &format, &out),
        Command::ExperimentE5 { fiber_size } => commands::experiment_e5(fiber_size),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
