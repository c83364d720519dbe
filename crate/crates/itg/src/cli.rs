//! Command-line front end. Every verb parses its input, calls one library
//! operation and prints the result.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use itg_core::search::{contains, Mode};
use itg_core::spectral::{
    char_poly, cospectral_certificate, eigenvalues, ie_line_bound, ie_total_bounds,
    incidence_energy, regular_iterate_params, MatrixKind, Spectrum,
};
use itg_core::transforms::{iterate, DEFAULT_MAX_VERTICES};
use itg_core::verify::{Params, TheoremId};
use itg_core::{Family, Graph, Operator};
use serde_json::json;

use crate::error::{Error, Result};
use crate::formats::{parse_graphs, read_graphs, render, Format};
use crate::report::{default_k, run_corpus, Corpus, RunOptions, VerificationReport};

/// Exit code for success and positive verdicts.
pub const EXIT_OK: i32 = 0;
/// Exit code for negative verdicts: not found, bound violated, failures.
pub const EXIT_NEGATIVE: i32 = 1;
/// Exit code for usage and I/O errors.
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "itg",
    version,
    about = "Iterated total and line graphs: diameters, spectra, incidence energy"
)]
pub struct Cli {
    /// Largest iterate (in vertices) any command may construct.
    #[arg(long, global = true, env = "ITG_MAX_VERTICES", default_value_t = DEFAULT_MAX_VERTICES)]
    pub max_vertices: usize,
    #[command(subcommand)]
    pub command: Command,
}

/// Exactly one graph source; stdin when neither flag is given.
#[derive(Debug, Args)]
pub struct Input {
    /// graph6 or edge-list file.
    #[arg(long = "in", value_name = "PATH", conflicts_with = "family")]
    pub path: Option<PathBuf>,
    /// Built-in family, e.g. f3:5, lol:8,4, k:6, c:5, p:4, s:5.
    #[arg(long)]
    pub family: Option<Family>,
}

/// Optional operator iterate applied to the input before measuring.
#[derive(Debug, Args)]
pub struct Iterate {
    #[arg(long)]
    pub op: Option<Operator>,
    /// Number of applications of --op.
    #[arg(long, default_value_t = 1, requires = "op")]
    pub k: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply the line or total operator k times and write the result.
    Transform {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        op: Operator,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Output file; stdout by default.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Print the diameter ("inf" when disconnected).
    Diameter {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        iterate: Iterate,
    },
    /// Print the adjacency or signless Laplacian spectrum as "value multiplicity" lines.
    Spectrum {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        iterate: Iterate,
        #[arg(long, default_value = "a")]
        matrix: MatrixKind,
        /// Exact characteristic polynomial and its isolated real roots.
        #[arg(long)]
        exact: bool,
    },
    /// Print the incidence energy.
    Energy {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        iterate: Iterate,
    },
    /// Incidence energy bounds for op^(k+1) of a regular graph, given by
    /// --n/--r or by a regular input graph (then also checked).
    Bounds {
        #[arg(long, default_value = "total")]
        op: Operator,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, requires = "r", conflicts_with_all = ["path", "family"])]
        n: Option<u64>,
        #[arg(long, requires = "n")]
        r: Option<u64>,
        #[command(flatten)]
        input: Input,
    },
    /// Search for a family pattern in the input graph; exit 1 when absent.
    Contains {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        pattern: Family,
        /// Induced containment instead of plain subgraph containment.
        #[arg(long)]
        induced: bool,
    },
    /// Run a theorem checker over a corpus.
    Verify {
        /// Theorem id such as T2_1, or "all".
        #[arg(long)]
        theorem: String,
        /// Comma-separated k values; each gives one report.
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// gen:N, gen:A..B, regular or file:PATH.
        #[arg(long)]
        corpus: Option<String>,
        /// JSON report file ("-" for stdout).
        #[arg(long)]
        report: Option<PathBuf>,
        /// List skipped graphs and reasons in the report.
        #[arg(long)]
        skips: bool,
    },
    /// Exact cospectrality and isomorphism of two graphs or of their iterates.
    Cospectral {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        op: Option<Operator>,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value = "a")]
        matrix: MatrixKind,
    },
    /// Write a family member.
    Family {
        spec: Family,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
}

/// Fixed 10 significant digits with trailing zeros trimmed, keeping one
/// decimal (`4.0`, `13.65685425`).
pub fn format_float(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-6..15).contains(&mag) {
        let s = format!("{x:.9e}");
        let (m, e) = s.split_once('e').expect("exponent");
        let m = m.trim_end_matches('0');
        let m = if m.ends_with('.') {
            format!("{m}0")
        } else {
            m.to_string()
        };
        return format!("{m}e{e}");
    }
    let s = format!("{:.*}", (9 - mag).max(1) as usize, x);
    let s = s.trim_end_matches('0');
    if s.ends_with('.') {
        format!("{s}0")
    } else {
        s.to_string()
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    max_vertices: usize,
}

impl Io<'_> {
    fn graphs(&mut self, input: &Input) -> Result<Vec<Graph>> {
        match (&input.path, &input.family) {
            (Some(p), _) => read_graphs(p),
            (None, Some(f)) => Ok(vec![f.build()?]),
            (None, None) => {
                let mut text = String::new();
                self.stdin
                    .read_to_string(&mut text)
                    .map_err(|e| Error::io("<stdin>", e))?;
                parse_graphs(&text)
            }
        }
    }

    fn graph(&mut self, input: &Input) -> Result<Graph> {
        let mut gs = self.graphs(input)?;
        match gs.len() {
            1 => Ok(gs.pop().expect("one graph")),
            n => Err(Error::Usage(format!(
                "expected exactly one input graph, got {n}"
            ))),
        }
    }

    fn apply(&self, g: Graph, it: &Iterate) -> Result<Graph> {
        match it.op {
            Some(op) => Ok(iterate(&g, op, it.k, self.max_vertices)?.graph),
            None => Ok(g),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", s.as_ref()).map_err(|e| Error::io("<stdout>", e))
    }
}

fn print_spectrum(io: &mut Io<'_>, s: &Spectrum) -> Result<()> {
    for (v, m) in s.grouped() {
        io.line(format!("{} {m}", format_float(v)))?;
    }
    Ok(())
}

fn write_report(path: &PathBuf, io: &mut Io<'_>, reports: &[VerificationReport]) -> Result<()> {
    let json = match reports {
        [one] => serde_json::to_string_pretty(one),
        many => serde_json::to_string_pretty(many),
    }
    .expect("report serialises");
    if path.as_os_str() == "-" {
        io.line(json)
    } else {
        std::fs::write(path, json + "\n").map_err(|e| Error::io(path, e))
    }
}

fn execute(cmd: Command, io: &mut Io<'_>) -> Result<i32> {
    match cmd {
        Command::Transform {
            input,
            op,
            k,
            out,
            format,
        } => {
            let mut text = String::new();
            for g in io.graphs(&input)? {
                text += &render(&iterate(&g, op, k, io.max_vertices)?.graph, format)?;
            }
            match out {
                Some(p) => std::fs::write(&p, text).map_err(|e| Error::io(&p, e))?,
                None => write!(io.out, "{text}").map_err(|e| Error::io("<stdout>", e))?,
            }
        }
        Command::Diameter { input, iterate } => {
            for g in io.graphs(&input)? {
                let d = io.apply(g, &iterate)?.diameter();
                io.line(d.map_or("inf".to_string(), |d| d.to_string()))?;
            }
        }
        Command::Spectrum {
            input,
            iterate,
            matrix,
            exact,
        } => {
            let g = io.graph(&input)?;
            let m = matrix.of(&io.apply(g, &iterate)?);
            if exact {
                let p = char_poly(&m);
                io.line(format!("charpoly {p}"))?;
                print_spectrum(io, &Spectrum::new(p.real_roots(1e-12)))?;
            } else {
                print_spectrum(io, &eigenvalues(&m))?;
            }
        }
        Command::Energy { input, iterate } => {
            for g in io.graphs(&input)? {
                let e = incidence_energy(&io.apply(g, &iterate)?);
                io.line(format_float(e))?;
            }
        }
        Command::Bounds { op, k, n, r, input } => return bounds(io, op, k, n.zip(r), &input),
        Command::Contains {
            input,
            pattern,
            induced,
        } => {
            let host = io.graph(&input)?;
            let mode = if induced {
                Mode::Induced
            } else {
                Mode::Subgraph
            };
            return match contains(&host, &pattern.build()?, mode) {
                Some(e) => {
                    let image: Vec<String> = e.image().iter().map(|v| v.to_string()).collect();
                    io.line(format!("found {}", image.join(" ")))?;
                    Ok(EXIT_OK)
                }
                None => {
                    io.line("not found")?;
                    Ok(EXIT_NEGATIVE)
                }
            };
        }
        Command::Verify {
            theorem,
            k,
            r,
            corpus,
            report,
            skips,
        } => {
            return verify(
                io,
                &theorem,
                &k,
                r,
                corpus.as_deref(),
                report.as_ref(),
                skips,
            )
        }
        Command::Cospectral {
            a,
            b,
            op,
            k,
            matrix,
        } => {
            let one = |p: &PathBuf| -> Result<Graph> {
                let mut gs = read_graphs(p)?;
                match gs.len() {
                    1 => Ok(gs.pop().expect("one graph")),
                    n => Err(Error::Usage(format!(
                        "{}: expected one graph, got {n}",
                        p.display()
                    ))),
                }
            };
            let it = |g: Graph| -> Result<Graph> {
                match op {
                    Some(op) => Ok(iterate(&g, op, k, io.max_vertices)?.graph),
                    None => Ok(g),
                }
            };
            let (ga, gb) = (it(one(&a)?)?, it(one(&b)?)?);
            let c = cospectral_certificate(&ga, &gb, matrix);
            let value = json!({
                "op": op.map(|o| o.to_string()),
                "k": if op.is_some() { k } else { 0 },
                "matrix": if matrix == MatrixKind::Adjacency { "a" } else { "q" },
                "order": [ga.order(), gb.order()],
                "cospectral": c.cospectral,
                "isomorphic": c.isomorphic,
            });
            io.line(value.to_string())?;
            return Ok(if c.cospectral { EXIT_OK } else { EXIT_NEGATIVE });
        }
        Command::Family { spec, format } => {
            let text = render(&spec.build()?, format)?;
            write!(io.out, "{text}").map_err(|e| Error::io("<stdout>", e))?;
        }
    }
    Ok(EXIT_OK)
}

fn bounds(
    io: &mut Io<'_>,
    op: Operator,
    k: usize,
    nr: Option<(u64, u64)>,
    input: &Input,
) -> Result<i32> {
    let (graph, (n0, r0)) = match nr {
        Some(nr) => (None, nr),
        None => {
            let g = io.graph(input)?;
            if !g.is_connected() {
                return Err(Error::Usage("bounds need a connected regular graph".into()));
            }
            let r = g
                .is_regular()
                .ok_or_else(|| Error::Usage("bounds need a connected regular graph".into()))?;
            let nr = (g.order() as u64, r as u64);
            (Some(g), nr)
        }
    };
    let params = regular_iterate_params(n0, r0, k, op)?;
    let (n, r) = (params.order() as usize, params.degree() as usize);
    let (lower, upper) = match op {
        Operator::Total => {
            let (lo, up) = ie_total_bounds(n, r);
            (Some(lo), up)
        }
        Operator::Line => (None, ie_line_bound(n, r)?),
    };
    io.line(format!("op {op}"))?;
    io.line(format!("k {k}"))?;
    io.line(format!("order {n}"))?;
    io.line(format!("degree {r}"))?;
    if let Some(lo) = lower {
        io.line(format!("lower {}", format_float(lo)))?;
    }
    io.line(format!("upper {}", format_float(upper)))?;
    let Some(g) = graph else {
        return Ok(EXIT_OK);
    };
    let ie = incidence_energy(&iterate(&g, op, k + 1, io.max_vertices)?.graph);
    io.line(format!("energy {}", format_float(ie)))?;
    let slack = |b: f64| 1e-9 * (1.0 + b.abs());
    let ok = lower.is_none_or(|lo| ie >= lo - slack(lo)) && ie <= upper + slack(upper);
    Ok(if ok { EXIT_OK } else { EXIT_NEGATIVE })
}

fn verify(
    io: &mut Io<'_>,
    theorem: &str,
    ks: &[usize],
    r: Option<usize>,
    corpus: Option<&str>,
    report: Option<&PathBuf>,
    skips: bool,
) -> Result<i32> {
    let ids: Vec<TheoremId> = if theorem.eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        vec![theorem.parse().map_err(Error::Usage)?]
    };
    let given: Option<Corpus> = corpus.map(str::parse).transpose()?;
    let mut reports = Vec::new();
    for t in ids {
        let c = given.clone().unwrap_or_else(|| Corpus::default_for(t));
        let graphs = c.load()?;
        let kvals: Vec<Option<usize>> = if t.uses_k() && !ks.is_empty() {
            ks.iter().copied().map(Some).collect()
        } else {
            vec![default_k(t, r)]
        };
        for k in kvals {
            let params = Params::new(k, r, io.max_vertices);
            let rep = run_corpus(
                t,
                &c.to_string(),
                &graphs,
                &params,
                RunOptions {
                    record_skips: skips,
                },
            );
            if report.is_none_or(|p| p.as_os_str() != "-") {
                io.line(rep.summary(&params.describe(t)))?;
            }
            reports.push(rep);
        }
    }
    if let Some(p) = report {
        write_report(p, io, &reports)?;
    }
    Ok(if reports.iter().all(VerificationReport::passed) {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code; errors go to `err`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out,
        max_vertices: cli.max_vertices,
    };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "itg: {e}");
            EXIT_ERROR
        }
    }
}
