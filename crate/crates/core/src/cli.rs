//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;

use crate::diagram::{braid_closure, parse_braid_word, parse_diagram, Color, ColoredDiagram};
use crate::fuzz::{run_fuzz, FuzzConfig, Statistic, DEFAULT_SEED};
use crate::oracle::jones;
use crate::par::Exec;
use crate::skein::{all_colorations_f, evaluate_f, Fault, DEFAULT_COLORATION_LIMIT};
use crate::verify::verify_worked_example;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "chroma-skein",
    version,
    about = "Skein invariant of oriented colored links"
)]
pub struct Cli {
    /// Run batch work on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print F of a diagram.
    Compute {
        #[command(flatten)]
        input: Input,
        /// Also print the specialization w = s, t = s^2.
        #[arg(long)]
        jones: bool,
        /// Evaluate at a point, e.g. `x=2,w=1,t=1/3`.
        #[arg(long, value_name = "x=R,w=R,t=R")]
        eval: Option<String>,
    },
    /// Print F for every partition of the components into colors.
    Colorations {
        #[command(flatten)]
        input: Input,
    },
    /// Print the Jones polynomial in s = t^(1/2) from the Kauffman bracket.
    Jones {
        #[command(flatten)]
        input: Input,
    },
    /// Recompute the two-component worked example.
    VerifyPaper {
        #[arg(long, hide = true)]
        inject_sign_fault: bool,
    },
    /// Check invariance on random diagrams.
    Fuzz {
        #[arg(long, default_value_t = 8)]
        max_crossings: usize,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_faulty_statistic: bool,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// JSON diagram file.
    #[arg(required_unless_present = "braid", conflicts_with = "braid")]
    pub file: Option<PathBuf>,
    /// Braid word whose closure is the diagram, e.g. "s1^-1 s1^-1".
    #[arg(long, requires = "colors", allow_hyphen_values = true)]
    pub braid: Option<String>,
    /// Comma-separated color of each strand.
    #[arg(long, value_delimiter = ',')]
    pub colors: Vec<String>,
}

impl Input {
    pub fn load(&self) -> Result<ColoredDiagram, String> {
        if let Some(word) = &self.braid {
            let word = parse_braid_word(word).map_err(|e| e.to_string())?;
            let colors: Vec<Color> = self
                .colors
                .iter()
                .map(|c| Color::from(c.as_str()))
                .collect();
            return braid_closure(&word, &colors).map_err(|e| e.to_string());
        }
        let path = self.file.as_ref().expect("clap requires a file or a braid");
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        parse_diagram(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn parse_point(text: &str) -> Result<[BigRational; 3], String> {
    let mut vals: [Option<BigRational>; 3] = [None, None, None];
    for part in text.split(',') {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| format!("expected name=value, got `{part}`"))?;
        let slot = match k.trim() {
            "x" => 0,
            "w" => 1,
            "t" => 2,
            other => return Err(format!("unknown variable `{other}`")),
        };
        let r = BigRational::from_str(v.trim()).map_err(|_| format!("not a rational: `{v}`"))?;
        vals[slot] = Some(r);
    }
    match vals {
        [Some(x), Some(w), Some(t)] => Ok([x, w, t]),
        _ => Err("--eval needs x, w and t".to_string()),
    }
}

/// Runs the CLI and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    match execute(cli.command, exec, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn execute(cmd: Command, exec: Exec, out: &mut dyn Write) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    match cmd {
        Command::Compute { input, jones, eval } => {
            let d = input.load()?;
            let point = eval.as_deref().map(parse_point).transpose()?;
            let f = evaluate_f(&d);
            writeln!(out, "{f}").map_err(io)?;
            let mut code = EXIT_OK;
            if jones {
                match f.substitute_half() {
                    Ok(p) => writeln!(out, "jones: {p}").map_err(io)?,
                    Err(e) => {
                        writeln!(out, "jones: {e}").map_err(io)?;
                        code = EXIT_FAIL;
                    }
                }
            }
            if let Some([x, w, t]) = point {
                let v = f.eval(&x, &w, &t).map_err(|e| e.to_string())?;
                writeln!(out, "value: {v}").map_err(io)?;
            }
            Ok(code)
        }
        Command::Colorations { input } => {
            let d = input.load()?;
            let rows =
                all_colorations_f(&d, DEFAULT_COLORATION_LIMIT, exec).map_err(|e| e.to_string())?;
            for (p, v) in rows {
                writeln!(out, "{p} -> {v}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Jones { input } => {
            let d = input.load()?;
            let v = jones(&d, exec).map_err(|e| e.to_string())?;
            writeln!(out, "{v}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::VerifyPaper { inject_sign_fault } => {
            let fault = if inject_sign_fault {
                Fault::MonochromeSign
            } else {
                Fault::None
            };
            let checks = verify_worked_example(fault);
            let passed = checks.iter().filter(|c| c.passed()).count();
            for c in &checks {
                writeln!(out, "{c}").map_err(io)?;
            }
            writeln!(out, "{passed}/{} checks passed", checks.len()).map_err(io)?;
            Ok(if passed == checks.len() {
                EXIT_OK
            } else {
                EXIT_FAIL
            })
        }
        Command::Fuzz {
            max_crossings,
            cases,
            seed,
            inject_faulty_statistic,
        } => {
            let statistic = if inject_faulty_statistic {
                Statistic::CrossingWeighted
            } else {
                Statistic::F
            };
            let report = run_fuzz(&FuzzConfig {
                max_crossings,
                cases,
                seed,
                statistic,
                exec,
            });
            writeln!(out, "{report}").map_err(io)?;
            Ok(if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_FAIL
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("chroma-skein").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn compute_braid() {
        let (code, out, _) = run_str(&["compute", "--braid", "s1^-1 s1^-1", "--colors", "a,b"]);
        assert_eq!(code, 0);
        assert_eq!(out, "(w^2*x + t - x) / (w^3*x*t)\n");
    }

    #[test]
    fn compute_jones_and_eval() {
        let (code, out, _) = run_str(&[
            "compute",
            "--braid",
            "s1^-1 s1^-1 s1^-1",
            "--colors",
            "a,a",
            "--jones",
            "--eval",
            "x=2,w=1,t=2",
        ]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[1], "jones: s^-2 + s^-6 - s^-8");
        // (1*4 + 1 - 1) / (1*4)
        assert_eq!(lines[2], "value: 1");
    }

    #[test]
    fn point_parsing() {
        assert!(parse_point("x=1,w=2").is_err());
        assert!(parse_point("x=1,w=2,q=3").is_err());
        let [x, _, t] = parse_point("x=1/2, w=2, t=-3").unwrap();
        assert_eq!(x, BigRational::new(1.into(), 2.into()));
        assert_eq!(t, BigRational::from_integer((-3).into()));
    }

    #[test]
    fn input_errors_exit_2() {
        let (code, _, err) = run_str(&["compute", "/nonexistent/diagram.json"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"));
        let (code, _, _) = run_str(&["compute", "--braid", "s3", "--colors", "a,a"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_str(&["frobnicate"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_str(&[
            "compute",
            "--braid",
            "s1^-1 s1^-1",
            "--colors",
            "a,a",
            "--eval",
            "x=1,w=1,t=1",
        ]);
        assert_eq!(code, 2);
    }

    #[test]
    fn verify_paper_exit_codes() {
        let (code, out, _) = run_str(&["verify-paper"]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 7);
        let (code, out, _) = run_str(&["verify-paper", "--inject-sign-fault"]);
        assert_eq!(code, 1);
        assert!(out.contains("FAIL F(K2)"));
    }

    #[test]
    fn fuzz_report() {
        let (code, out, _) = run_str(&[
            "fuzz",
            "--max-crossings",
            "0",
            "--cases",
            "10",
            "--seed",
            "1",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "10/10 invariance checks passed\n");
        let (code, out, _) = run_str(&[
            "fuzz",
            "--max-crossings",
            "4",
            "--cases",
            "10",
            "--inject-faulty-statistic",
        ]);
        assert_eq!(code, 1);
        assert!(out.contains("counterexample"));
    }
}
