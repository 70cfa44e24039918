use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use lusztig_core::cache::{GroupProvider, CACHE_DIR_ENV};
use lusztig_core::charlib::{check_weight_symmetry, CharacterEngine};
use lusztig_core::gkm::{gkm_flag, gkm_hessenberg, gkm_lusztig, Coweight, GkmGraph};
use lusztig_core::hess::{
    codominant_from_hessenberg_function, hessenberg_function_from_codominant,
    ideal_from_hessenberg_function, is_smooth, is_valid_ideal, m_w, rationally_smooth,
    HessenbergFunction, Permutation, RootIdeal,
};
use lusztig_core::rootsys::{parse_int_vec, Family, Weight};
use lusztig_core::verify::{self, Report};
use lusztig_core::weyl::{format_word, parse_word, WeylElement, WeylGroup};
use lusztig_core::Error;

/// Exact combinatorics of regular semisimple Lusztig and Hessenberg varieties.
#[derive(Parser)]
#[command(name = "lusztig", version)]
struct Cli {
    /// Cartan type: A, B, C, D, E, F or G.
    #[arg(long, global = true)]
    family: Option<Family>,
    #[arg(long, global = true)]
    rank: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Weyl group cache directory.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    /// Cocharacter for cell decompositions, e.g. "1,3,9".
    #[arg(long, global = true, allow_hyphen_values = true)]
    xi: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots and Cartan matrix.
    Roots,
    /// Weyl group queries.
    #[command(subcommand)]
    Weyl(WeylCommand),
    /// Is v ≤ w in Bruhat order?
    Bruhat {
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// The root set M_w = {α > 0 : s_α ≤ w}.
    Mw {
        #[arg(long)]
        word: String,
    },
    /// Root ideal queries.
    #[command(subcommand)]
    Hess(HessCommand),
    /// Codominant permutation of a Hessenberg function, or the reverse.
    Codominant {
        #[arg(long, conflicts_with = "perm")]
        h: Option<String>,
        #[arg(long, required_unless_present = "h")]
        perm: Option<String>,
    },
    /// GKM graph: of X_H(s) for an ideal or Hessenberg function, of Y_w(s)
    /// for a word, of the flag variety otherwise. DOT on stdout by default.
    Gkm {
        #[command(flatten)]
        input: GraphInput,
        /// Write DOT to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write JSON to this file.
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Poincaré polynomial from cell dimensions.
    Poincare {
        #[command(flatten)]
        input: GraphInput,
    },
    /// dim V_w(λ).
    Dimv {
        #[arg(long)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// The character of V_w(λ) as sorted (weight, multiplicity) pairs.
    Charv {
        #[arg(long)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Exit 1 unless the weights are Weyl group symmetric.
        #[arg(long)]
        check_symmetry: bool,
    },
    /// Bundled verification suites.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand)]
enum WeylCommand {
    /// List elements (by lex-least reduced word), optionally of one length.
    Enum {
        #[arg(long)]
        length: Option<usize>,
    },
}

#[derive(Subcommand)]
enum HessCommand {
    /// Check that a root set is B-stable.
    Validate {
        #[arg(long)]
        ideal: String,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Root ideal, e.g. "1,0;0,1".
    #[arg(long, conflicts_with_all = ["word", "h"])]
    ideal: Option<String>,
    /// Weyl group element, e.g. "12" or "1,2".
    #[arg(long, conflicts_with = "h")]
    word: Option<String>,
    /// Hessenberg function, e.g. "2,3,3" (type A).
    #[arg(long)]
    h: Option<String>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// The type C3 example.
    C3,
    /// The codominant dictionary for all Hessenberg functions on [n].
    Codominant {
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
    /// Lusztig graphs against Hessenberg graphs.
    Gkm {
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Character identities for V_w(λ).
    Characters {
        #[arg(long, default_value_t = 2)]
        bound: i64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Flag variety calibration (all small systems unless one is given).
    Flag,
}

/// Failures that are not library errors.
enum Failure {
    Input(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    family: Option<Family>,
    rank: Option<usize>,
    json: bool,
    xi: Option<String>,
    groups: GroupProvider,
    out: Vec<u8>,
}

impl Ctx {
    fn system(&self) -> Result<(Family, usize), Failure> {
        match (self.family, self.rank) {
            (Some(f), Some(r)) => Ok((f, r)),
            _ => Err(Failure::Input("--family and --rank are required".into())),
        }
    }

    fn group(&self) -> Result<Arc<WeylGroup>, Failure> {
        let (f, r) = self.system()?;
        Ok(self.groups.group(f, r)?)
    }

    /// Type-A group sized by a Hessenberg function, checked against flags.
    fn group_for_h(&self, h: &HessenbergFunction) -> Result<Arc<WeylGroup>, Failure> {
        let r = h.n() - 1;
        if self.family.is_some_and(|f| f != Family::A) || self.rank.is_some_and(|k| k != r) {
            return Err(Failure::Input(format!(
                "a Hessenberg function on [{}] needs --family A --rank {r}",
                h.n()
            )));
        }
        Ok(self.groups.group(Family::A, r)?)
    }

    fn element(&self, g: &WeylGroup, word: &str) -> Result<WeylElement, Failure> {
        Ok(WeylElement::from_word(g.root_system(), &parse_word(word)?)?)
    }

    fn coweight(&self, rank: usize) -> Result<Coweight, Failure> {
        match &self.xi {
            Some(s) => Ok(Coweight(parse_int_vec(s)?)),
            None => Ok(Coweight::default_for(rank)),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.out.extend_from_slice(s.as_ref().as_bytes());
        self.out.push(b'\n');
    }

    fn emit_json(&mut self, v: &serde_json::Value) {
        let s = serde_json::to_string_pretty(v).expect("serializable");
        self.line(s);
    }

    fn report(&mut self, rep: &Report) -> Outcome {
        if self.json {
            self.emit_json(&serde_json::to_value(rep).expect("serializable"));
        } else {
            let s = rep.to_string();
            self.out.extend_from_slice(s.as_bytes());
        }
        if rep.passed() {
            Ok(())
        } else {
            Err(Failure::Check)
        }
    }
}

fn parse_h(s: &str) -> Result<HessenbergFunction, Failure> {
    let v = parse_int_vec(s)?;
    if v.iter().any(|&x| x < 1) {
        return Err(Error::InvalidHessenbergFunction(v.iter().map(|&x| x.max(0) as usize).collect()).into());
    }
    Ok(HessenbergFunction::new(v.into_iter().map(|x| x as usize).collect())?)
}

fn build_graph(ctx: &Ctx, input: &GraphInput) -> Result<GkmGraph, Failure> {
    if let Some(h) = &input.h {
        let h = parse_h(h)?;
        let g = ctx.group_for_h(&h)?;
        let m = ideal_from_hessenberg_function(g.root_system(), &h)?;
        return Ok(gkm_hessenberg(&g, &m));
    }
    let g = ctx.group()?;
    if let Some(ideal) = &input.ideal {
        let m = RootIdeal::parse(g.root_system(), ideal)?;
        return Ok(gkm_hessenberg(&g, &m));
    }
    if let Some(word) = &input.word {
        let w = ctx.element(&g, word)?;
        return Ok(gkm_lusztig(&g, &w)?);
    }
    Ok(gkm_flag(&g))
}

fn run(ctx: &mut Ctx, command: Command) -> Outcome {
    match command {
        Command::Roots => {
            let g = ctx.group()?;
            let rs = g.root_system().clone();
            if ctx.json {
                ctx.emit_json(&rs.to_json());
            } else {
                ctx.line(format!("{}: {} positive roots", rs.label(), rs.num_positive()));
                for r in rs.positive_roots() {
                    ctx.line(format!("{r}  (height {})", r.height()));
                }
            }
        }
        Command::Weyl(WeylCommand::Enum { length }) => {
            let g = ctx.group()?;
            let rank = g.root_system().rank();
            let elements: Vec<&WeylElement> = match length {
                Some(l) => g.by_length(l).iter().collect(),
                None => g.elements().iter().collect(),
            };
            if ctx.json {
                let words: Vec<&[usize]> = elements.iter().map(|w| w.reduced_word()).collect();
                ctx.emit_json(&json!(words));
            } else {
                for w in elements {
                    ctx.line(format_word(w.reduced_word(), rank));
                }
            }
        }
        Command::Bruhat { v, w } => {
            let g = ctx.group()?;
            let (v, w) = (ctx.element(&g, &v)?, ctx.element(&g, &w)?);
            let leq = v.bruhat_leq(&w)?;
            if ctx.json {
                ctx.emit_json(&json!({
                    "v": v.reduced_word(), "w": w.reduced_word(), "leq": leq,
                }));
            } else {
                ctx.line(leq.to_string());
            }
        }
        Command::Mw { word } => {
            let g = ctx.group()?;
            let w = ctx.element(&g, &word)?;
            let rs = g.root_system();
            let m = m_w(&w);
            let valid = is_valid_ideal(rs, &m);
            let (rsm, sm) = (rationally_smooth(&w), is_smooth(&w));
            if ctx.json {
                let roots: Vec<Vec<i64>> = m.roots(rs).into_iter().map(|r| r.0).collect();
                ctx.emit_json(&json!({
                    "word": w.reduced_word(),
                    "roots": roots,
                    "size": m.len(),
                    "length": w.length(),
                    "is_ideal": valid,
                    "rationally_smooth": rsm,
                    "smooth": sm,
                }));
            } else {
                ctx.line(m.format(rs));
                ctx.line(format!(
                    "|M_w| = {}, ℓ(w) = {}, ideal: {valid}, rationally smooth: {rsm}, smooth: {sm}",
                    m.len(),
                    w.length()
                ));
            }
        }
        Command::Hess(HessCommand::Validate { ideal }) => {
            let g = ctx.group()?;
            let m = RootIdeal::parse(g.root_system(), &ideal)?;
            let valid = is_valid_ideal(g.root_system(), &m);
            if ctx.json {
                ctx.emit_json(&json!({ "size": m.len(), "valid": valid }));
            } else {
                ctx.line(if valid { "valid" } else { "not B-stable" });
            }
            if !valid {
                return Err(Failure::Check);
            }
        }
        Command::Codominant { h, perm } => {
            let (h, p) = match (h, perm) {
                (Some(h), _) => {
                    let h = parse_h(&h)?;
                    let p = codominant_from_hessenberg_function(&h);
                    (h, p)
                }
                (None, Some(p)) => {
                    let p = Permutation::parse(&p)?;
                    (hessenberg_function_from_codominant(&p)?, p)
                }
                (None, None) => unreachable!("clap requires one of --h, --perm"),
            };
            let word = p.reduced_word();
            if ctx.json {
                ctx.emit_json(&json!({
                    "h": h.values(), "perm": p.one_line(), "word": word, "length": p.inversions(),
                }));
            } else {
                ctx.line(format!("h = {h}"));
                ctx.line(format!("w_h = {p} = {}", format_word(&word, p.n().saturating_sub(1))));
            }
        }
        Command::Gkm {
            input,
            dot,
            json_out,
        } => {
            let graph = build_graph(ctx, &input)?;
            let dot_text = graph.to_dot();
            let json_value = graph.to_json();
            if let Some(path) = dot {
                std::fs::write(path, &dot_text).map_err(Error::from)?;
            }
            if let Some(path) = json_out {
                let s = serde_json::to_string_pretty(&json_value).map_err(Error::from)?;
                std::fs::write(path, s).map_err(Error::from)?;
            }
            if ctx.json {
                ctx.emit_json(&json_value);
            } else {
                ctx.out.extend_from_slice(dot_text.as_bytes());
            }
        }
        Command::Poincare { input } => {
            let graph = build_graph(ctx, &input)?;
            let xi = ctx.coweight(graph.root_system().rank())?;
            let xi = graph.generic_coweight(&xi)?;
            let p = graph.poincare_polynomial(&xi)?;
            if ctx.json {
                ctx.emit_json(&json!({ "coefficients": p.dense(), "xi": xi.0 }));
            } else {
                ctx.line(p.to_string());
            }
        }
        Command::Dimv { word, lambda } => {
            let g = ctx.group()?;
            let w = ctx.element(&g, &word)?;
            let lambda = Weight(parse_int_vec(&lambda)?);
            let d = CharacterEngine::new(g.root_system()).v_w_dimension(&w, &lambda)?;
            if ctx.json {
                ctx.emit_json(&json!({ "dim": d }));
            } else {
                ctx.line(d.to_string());
            }
        }
        Command::Charv {
            word,
            lambda,
            check_symmetry,
        } => {
            let g = ctx.group()?;
            let w = ctx.element(&g, &word)?;
            let lambda = Weight(parse_int_vec(&lambda)?);
            let c = CharacterEngine::new(g.root_system()).v_w_character(&w, &lambda)?;
            ctx.line(serde_json::to_string(&c).map_err(Error::from)?);
            if check_symmetry && !check_weight_symmetry(g.root_system(), &c) {
                eprintln!("weight multiplicities are not Weyl group symmetric");
                return Err(Failure::Check);
            }
        }
        Command::Verify(v) => {
            let rep = match v {
                VerifyCommand::C3 => verify::verify_c3(&ctx.groups)?,
                VerifyCommand::Codominant { n } => verify::verify_codominant(&ctx.groups, n)?,
                VerifyCommand::Gkm { samples, seed } => {
                    let (f, r) = ctx.system()?;
                    verify::verify_gkm(&ctx.groups, f, r, samples, seed)?
                }
                VerifyCommand::Characters {
                    bound,
                    samples,
                    seed,
                } => {
                    let (f, r) = ctx.system()?;
                    verify::verify_characters(&ctx.groups, f, r, bound, samples, seed)?
                }
                VerifyCommand::Flag => {
                    let systems = match (ctx.family, ctx.rank) {
                        (None, None) => verify::FLAG_SYSTEMS.to_vec(),
                        _ => vec![ctx.system()?],
                    };
                    verify::verify_flag(&ctx.groups, &systems)?
                }
            };
            ctx.report(&rep)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut ctx = Ctx {
        family: cli.family,
        rank: cli.rank,
        json: cli.json,
        xi: cli.xi,
        groups: GroupProvider::new(cli.cache_dir),
        out: vec![],
    };
    let result = run(&mut ctx, cli.command);
    // Output is buffered and written once, after the command finishes.
    let _ = std::io::stdout().write_all(&ctx.out);
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
