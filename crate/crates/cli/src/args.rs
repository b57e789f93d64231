use std::path::PathBuf;
use std::str::FromStr;

use bohr_cesaro::radii::RadiusEquation;
use bohr_cesaro::verify::Figure;
use clap::{Parser, Subcommand};
use num_complex::Complex64;

#[derive(Debug, Parser)]
#[command(
    name = "bohr-cesaro",
    version,
    about = "Certified numerics for Bohr-type inequalities of the Cesaro operator"
)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Run the full acceptance suite and print a summary report.
    #[arg(long)]
    pub all: bool,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a radius equation and print its root certificate.
    Radius {
        #[command(subcommand)]
        equation: RadiusCmd,
    },
    /// Check an inequality or the auxiliary-curve claims.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Find an extremal function violating the inequality beyond its radius.
    Sharpness {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: f64,
        /// First value of the Möbius parameter tried.
        #[arg(long, default_value_t = 0.9)]
        a_start: f64,
    },
    /// Write a curve table as CSV.
    Figure {
        #[arg(value_parser = parse_figure)]
        which: Figure,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        /// Output file; CSV goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0.0)]
        lo: f64,
        #[arg(long, default_value_t = 1.0)]
        hi: f64,
    },
    /// Evaluate a single quantity.
    Eval {
        #[command(subcommand)]
        what: EvalCmd,
    },
    /// Count distinct real roots of a rational polynomial in (a, b].
    Sturm {
        /// Ascending coefficients ("39 -45 -7") or a sum of monomials ("1 - 2x + x^2").
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true)]
        interval: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum RadiusCmd {
    /// 2r + 3(1-r)ln(1-r) = 0.
    TheoremA,
    /// 2(-r - ln(1-r)) = r(1-r^2).
    PickR,
    /// Sharp radius of the improved inequality.
    Theorem1,
    /// The bound R_m for omega(z) = z^m.
    Theorem2Rm {
        #[arg(long)]
        m: u32,
    },
    /// Sharp radius for omega(z) = z^m.
    Theorem2Phim {
        #[arg(long)]
        m: u32,
    },
    /// Bohr-Rogosinski-type radius.
    TheoremB {
        #[arg(long)]
        n: u32,
    },
}

impl From<RadiusCmd> for RadiusEquation {
    fn from(cmd: RadiusCmd) -> Self {
        match cmd {
            RadiusCmd::TheoremA => RadiusEquation::TheoremA,
            RadiusCmd::PickR => RadiusEquation::PickBoundR,
            RadiusCmd::Theorem1 => RadiusEquation::Theorem1Phi,
            RadiusCmd::Theorem2Rm { m } => RadiusEquation::Theorem2Rm { m },
            RadiusCmd::Theorem2Phim { m } => RadiusEquation::Theorem2PhiM { m },
            RadiusCmd::TheoremB { n } => RadiusEquation::TheoremB { n },
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// Grid-check every registered auxiliary-curve claim.
    Claims,
    /// The first inequality on the extremal family over a in [0, 1], r in (0, R].
    Theorem1 {
        #[arg(long)]
        r: f64,
        #[arg(long, default_value = "50x50")]
        grid: GridSize,
    },
    /// The inequality with omega(z) = z^m on the extremal family.
    Theorem2 {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: f64,
        #[arg(long, default_value = "50x50")]
        grid: GridSize,
    },
    /// The first inequality on seeded random functions.
    Random {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        r: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum EvalCmd {
    /// The weight sum_{i>=k} r^i/(i+1).
    Phi {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: f64,
    },
    /// The Cesaro transform of a coefficient CSV at a point.
    Cesaro {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        z: ComplexArg,
    },
    /// Both sides of the first inequality for (a+z)/(1+az).
    Lhs1 {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        r: f64,
    },
}

/// `AxR`: `A` values of the Möbius parameter, `R` radii.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSize(pub usize, pub usize);

impl FromStr for GridSize {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, r) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| format!("expected AxR, got `{s}`"))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
        Ok(GridSize(parse(a)?, parse(r)?))
    }
}

impl From<GridSize> for (usize, usize) {
    fn from(g: GridSize) -> Self {
        (g.0, g.1)
    }
}

/// `RE,IM`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexArg(pub f64, pub f64);

impl FromStr for ComplexArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (re, im) = s
            .split_once(',')
            .ok_or_else(|| format!("expected RE,IM, got `{s}`"))?;
        let parse = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
        Ok(ComplexArg(parse(re)?, parse(im)?))
    }
}

impl From<ComplexArg> for Complex64 {
    fn from(z: ComplexArg) -> Self {
        Complex64::new(z.0, z.1)
    }
}

fn parse_figure(s: &str) -> Result<Figure, String> {
    s.parse().map_err(|e: bohr_cesaro::Error| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn grid_and_complex_arguments() {
        assert_eq!("50x40".parse::<GridSize>().unwrap(), GridSize(50, 40));
        assert!("50".parse::<GridSize>().is_err());
        assert!("ax3".parse::<GridSize>().is_err());
        assert_eq!(
            "0.3,-0.2".parse::<ComplexArg>().unwrap(),
            ComplexArg(0.3, -0.2)
        );
        assert!("0.3".parse::<ComplexArg>().is_err());
    }

    #[test]
    fn subcommand_names() {
        let cli =
            Cli::try_parse_from(["bohr-cesaro", "radius", "theorem2-phim", "--m", "3"]).unwrap();
        assert!(matches!(
            cli.command,
            Some(Command::Radius {
                equation: RadiusCmd::Theorem2Phim { m: 3 }
            })
        ));
        let cli = Cli::try_parse_from([
            "bohr-cesaro",
            "sturm",
            "--poly",
            "1 -1",
            "--interval",
            "-1",
            "2",
        ])
        .unwrap();
        assert!(
            matches!(cli.command, Some(Command::Sturm { ref interval, .. }) if interval == &["-1", "2"])
        );
        assert!(
            Cli::try_parse_from(["bohr-cesaro", "--all", "--json"])
                .unwrap()
                .all
        );
    }
}
