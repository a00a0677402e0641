use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "ellrot",
    version,
    about = "Elliptical rotations on ellipses and ellipsoids"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Absolute tolerance at unit scale.
    #[arg(
        long,
        default_value = "1e-9",
        global = true,
        allow_hyphen_values = true
    )]
    pub tol: String,

    /// Read angles in degrees.
    #[arg(long, global = true)]
    pub degrees: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Rodrigues,
    Cayley,
    Quat,
    Householder,
}

#[derive(Debug, Args)]
pub struct SpaceArg {
    /// Ellipsoid coefficients a₁,…,aₙ of a₁x₁² + … + aₙxₙ² = 1; fractions allowed.
    #[arg(long = "a", value_name = "LIST", allow_hyphen_values = true)]
    pub a: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a rotation matrix by one method and report its diagnostics.
    Rotate {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Rodrigues)]
        method: MethodArg,
        /// Rotation axis (normalized before use).
        #[arg(long, allow_hyphen_values = true)]
        axis: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        angle: Option<String>,
        /// Point to rotate from; requires --to.
        #[arg(long, allow_hyphen_values = true)]
        from: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<String>,
    },
    /// Find the rotation taking one point to another by every method.
    Solve {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Multiply two elliptic quaternions given as q0,q1,q2,q3.
    Qmul {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Sample the orbit of a point as CSV.
    Trace {
        #[command(flatten)]
        space: SpaceArg,
        /// Rotation axis; omitted for planar traces.
        #[arg(long, allow_hyphen_values = true)]
        axis: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        angle: String,
        #[arg(long, allow_hyphen_values = true)]
        start: String,
        #[arg(long, default_value_t = 50)]
        steps: usize,
    },
    /// Check a matrix document written by `rotate`.
    Verify {
        /// Overrides the coefficients stored in the document.
        #[arg(long = "a", value_name = "LIST", allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Reflect a point in the hyperplane B-orthogonal to a normal vector.
    Reflect {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, allow_hyphen_values = true)]
        normal: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
}
