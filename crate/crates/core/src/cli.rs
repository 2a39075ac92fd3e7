//! The `repgeo` command line.
//!
//! Every subcommand builds one JSON report
//! `{command, inputs, outcome, certificate?, witness?, bounds?, timing_ms}`
//! and prints it either as JSON (`--json`) or as indented text. The exit
//! code is a function of `outcome` alone:
//!
//! | outcome | code |
//! |---|---|
//! | `holds`, `equivalent`, `member`, `ok` | 0 |
//! | `fails`, `not-equivalent`, `non-member` | 1 |
//! | `unknown` | 2 |
//! | `error` | 3 |

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::audit::paper_demo;
use crate::caps::Caps;
use crate::error::Error;
use crate::geometry::{
    at_equivalent, closure_counterexample, fulfills_qid, geo_equivalent_groups, geo_equivalent_reps, GeoRefutation,
    Inseparable, SearchBounds, SeparationCertificate, Side, Verdict,
};
use crate::group::{enumerate_group_homs, FiniteGroup, GroupHom};
use crate::rep::{enumerate_rep_homs, RepHom, Representation};
use crate::term::{Atom, ModuleElement};
use crate::textio::{
    infer_context, parse_atom, parse_group_file, parse_qid, parse_rep_file, parse_system_file, serialize_rep,
};

#[derive(Debug, Parser)]
#[command(name = "repgeo", version, about = "Closures, quasi-identities and equivalence of finite representations")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Report `timing_ms` as 0, for byte-stable output.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
struct BoundArgs {
    /// Longest word in the refutation scans.
    #[arg(long)]
    max_word_len: Option<u64>,
    /// Most terms per module element in the refutation scans.
    #[arg(long)]
    max_terms: Option<usize>,
    /// Most x- and y-variables in the refutation scans.
    #[arg(long)]
    max_vars: Option<usize>,
}

impl BoundArgs {
    fn bounds(self) -> SearchBounds {
        let mut b = SearchBounds::default();
        if let Some(n) = self.max_word_len {
            b.max_word_len = n;
        }
        if let Some(n) = self.max_terms {
            b.max_terms = n;
        }
        if let Some(n) = self.max_vars {
            b.max_xvars = n;
            b.max_yvars = n;
        }
        b
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Geometric equivalence of two groups (group files).
    CheckGeoGroups { g1: PathBuf, g2: PathBuf },
    /// Geometric equivalence of two representations.
    CheckGeo {
        r1: PathBuf,
        r2: PathBuf,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Action-type equivalence of two representations.
    CheckAt {
        r1: PathBuf,
        r2: PathBuf,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Check a quasi-identity such as "x*y - x = 0 => y = 1".
    Qid { rep: PathBuf, formula: String },
    /// Membership of an atom in the closure of a system.
    Closure {
        rep: PathBuf,
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        member: String,
        /// Use the action-type closure (module atoms only).
        #[arg(long)]
        action_type: bool,
    },
    /// Faithful image of a representation.
    Faithful {
        rep: PathBuf,
        /// Write the faithful image here as a representation file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate homomorphisms between two groups, or two representations with --reps.
    Homs {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        reps: bool,
    },
    /// Recompute the six claims about the swap representations.
    PaperDemo {
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CheckGeoGroups { .. } => "check-geo-groups",
            Command::CheckGeo { .. } => "check-geo",
            Command::CheckAt { .. } => "check-at",
            Command::Qid { .. } => "qid",
            Command::Closure { .. } => "closure",
            Command::Faithful { .. } => "faithful",
            Command::Homs { .. } => "homs",
            Command::PaperDemo { .. } => "paper-demo",
        }
    }

    fn inputs(&self) -> Value {
        let path = |p: &Path| Value::String(p.display().to_string());
        match self {
            Command::CheckGeoGroups { g1, g2 } => json!({"g1": path(g1), "g2": path(g2)}),
            Command::CheckGeo { r1, r2, .. } | Command::CheckAt { r1, r2, .. } => {
                json!({"r1": path(r1), "r2": path(r2)})
            }
            Command::Qid { rep, formula } => json!({"rep": path(rep), "formula": formula}),
            Command::Closure { rep, system, member, action_type } => {
                json!({"rep": path(rep), "system": path(system), "member": member, "action_type": action_type})
            }
            Command::Faithful { rep, output } => {
                json!({"rep": path(rep), "output": output.as_deref().map(path)})
            }
            Command::Homs { a, b, reps } => json!({"a": path(a), "b": path(b), "reps": reps}),
            Command::PaperDemo { p } => json!({"p": p}),
        }
    }
}

/// A failure with the file it came from.
struct Failure {
    file: Option<PathBuf>,
    error: String,
    span: Option<crate::error::SourceSpan>,
}

impl Failure {
    fn new(file: Option<&Path>, e: Error) -> Self {
        Failure { file: file.map(Path::to_path_buf), span: e.span(), error: e.to_string() }
    }
}

type Outcome = (&'static str, Map<String, Value>);

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        file: Some(path.to_path_buf()),
        error: e.to_string(),
        span: None,
    })
}

fn load_rep(path: &Path) -> Result<Representation, Failure> {
    parse_rep_file(&read(path)?).map_err(|e| Failure::new(Some(path), e))
}

fn load_group(path: &Path) -> Result<FiniteGroup, Failure> {
    parse_group_file(&read(path)?).map_err(|e| Failure::new(Some(path), e))
}

fn plain(e: Error) -> Failure {
    Failure::new(None, e)
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::First => "first",
        Side::Second => "second",
    }
}

fn group_cert_json(c: &SeparationCertificate<GroupHom>) -> Value {
    json!({
        "homs": c.homs.iter().map(|h| h.describe()).collect::<Vec<_>>(),
        "notes": c.notes,
    })
}

fn rep_cert_json(c: &SeparationCertificate<RepHom>) -> Value {
    json!({
        "homs": c.homs.iter().map(|h| json!({
            "matrix": h.matrix().to_string(),
            "group": h.grouphom().describe(),
        })).collect::<Vec<_>>(),
        "notes": c.notes,
    })
}

fn pair_json(pair: &Inseparable, g: &FiniteGroup) -> Value {
    match pair {
        Inseparable::Group(i, j) => json!({"group_elements": [g.name(*i), g.name(*j)]}),
        Inseparable::Vector(v) => json!({"vector": v.to_string()}),
    }
}

fn refutation_json(
    r: &GeoRefutation,
    first: &FiniteGroup,
    second: &FiniteGroup,
    reps: Option<(&Representation, &Representation)>,
) -> Value {
    let g = match r.source {
        Side::First => first,
        Side::Second => second,
    };
    let mut w = json!({
        "not_embedded": side_name(r.source),
        "inseparable": pair_json(&r.pair, g),
    });
    if let (Some(s), Some((a, b))) = (&r.qid, reps) {
        let failing = match s.holds_in {
            Side::First => b,
            Side::Second => a,
        };
        w["separating_qid"] = json!({
            "formula": s.qid.to_string(),
            "holds_in": side_name(s.holds_in),
            "violated_at": s.witness.describe(failing, s.qid.context()),
        });
    }
    w
}

fn execute(cmd: &Command, caps: &Caps) -> Result<Outcome, Failure> {
    let mut extra = Map::new();
    let outcome = match cmd {
        Command::CheckGeoGroups { g1, g2 } => {
            let (a, b) = (load_group(g1)?, load_group(g2)?);
            match geo_equivalent_groups(&a, &b, caps).map_err(plain)? {
                Verdict::Equivalent(c) => {
                    extra.insert(
                        "certificate".into(),
                        json!({"g1_into_g2": group_cert_json(&c.a_into_b), "g2_into_g1": group_cert_json(&c.b_into_a)}),
                    );
                    "equivalent"
                }
                Verdict::NotEquivalent(r) => {
                    extra.insert("witness".into(), refutation_json(&r, &a, &b, None));
                    "not-equivalent"
                }
                Verdict::Unknown(_) => "unknown",
            }
        }
        Command::CheckGeo { r1, r2, bounds } => {
            let (a, b) = (load_rep(r1)?, load_rep(r2)?);
            let bounds = bounds.bounds();
            extra.insert("bounds".into(), json!(bounds));
            match geo_equivalent_reps(&a, &b, caps, &bounds).map_err(plain)? {
                Verdict::Equivalent(c) => {
                    extra.insert(
                        "certificate".into(),
                        json!({"r1_into_r2": rep_cert_json(&c.a_into_b), "r2_into_r1": rep_cert_json(&c.b_into_a)}),
                    );
                    "equivalent"
                }
                Verdict::NotEquivalent(r) => {
                    extra.insert("witness".into(), refutation_json(&r, a.group(), b.group(), Some((&a, &b))));
                    "not-equivalent"
                }
                Verdict::Unknown(_) => "unknown",
            }
        }
        Command::CheckAt { r1, r2, bounds } => {
            let (a, b) = (load_rep(r1)?, load_rep(r2)?);
            let bounds = bounds.bounds();
            extra.insert("bounds".into(), json!(bounds));
            match at_equivalent(&a, &b, &bounds, caps).map_err(plain)? {
                Verdict::Equivalent(c) => {
                    extra.insert(
                        "certificate".into(),
                        json!({
                            "r1_kernel": c.first.kernel.member_names(),
                            "r2_kernel": c.second.kernel.member_names(),
                            "faithful_r1_into_faithful_r2": rep_cert_json(&c.quotients.a_into_b),
                            "faithful_r2_into_faithful_r1": rep_cert_json(&c.quotients.b_into_a),
                        }),
                    );
                    "equivalent"
                }
                Verdict::NotEquivalent(w) => {
                    extra.insert(
                        "witness".into(),
                        json!({
                            "system": w.system.iter().map(ModuleElement::to_string).collect::<Vec<_>>(),
                            "candidate": w.candidate.to_string(),
                            "contained_in": side_name(w.contained_in),
                        }),
                    );
                    "not-equivalent"
                }
                Verdict::Unknown(_) => "unknown",
            }
        }
        Command::Qid { rep, formula } => {
            let r = load_rep(rep)?;
            let ctx = infer_context(formula, r.field()).map_err(plain)?;
            let q = parse_qid(formula, &ctx).map_err(plain)?;
            let check = fulfills_qid(&r, &q, caps).map_err(plain)?;
            extra.insert("formula".into(), json!(q.to_string()));
            match check.witness {
                Some(w) => {
                    extra.insert("witness".into(), json!(w.describe(&r, &ctx)));
                    "fails"
                }
                None => "holds",
            }
        }
        Command::Closure { rep, system, member, action_type } => {
            let r = load_rep(rep)?;
            let (ctx, sys) = parse_system_file(&read(system)?, r.field()).map_err(|e| Failure::new(Some(system), e))?;
            let atom = parse_atom(member, &ctx).map_err(plain)?;
            if *action_type && (!sys.is_action_type() || !matches!(atom, Atom::Module(_))) {
                return Err(plain(Error::InvalidContext(
                    "--action-type needs a system and a member without group atoms".into(),
                )));
            }
            extra.insert("closure".into(), json!(if *action_type { "action-type" } else { "full" }));
            match closure_counterexample(&r, &sys, &atom, caps).map_err(plain)? {
                Some(w) => {
                    extra.insert("witness".into(), json!(w.describe(&r, &ctx)));
                    "non-member"
                }
                None => "member",
            }
        }
        Command::Faithful { rep, output } => {
            let r = load_rep(rep)?;
            let fi = r.faithful_image();
            let text = serialize_rep(&fi.quotient);
            if let Some(out) = output {
                std::fs::write(out, &text).map_err(|e| Failure {
                    file: Some(out.clone()),
                    error: e.to_string(),
                    span: None,
                })?;
            }
            extra.insert(
                "certificate".into(),
                json!({
                    "kernel": fi.kernel.member_names(),
                    "sigma": fi.sigma.describe(),
                    "faithful": fi.quotient.is_faithful(),
                    "representation": text,
                }),
            );
            "ok"
        }
        Command::Homs { a, b, reps } => {
            let homs: Vec<Value> = if *reps {
                let (r, s) = (load_rep(a)?, load_rep(b)?);
                enumerate_rep_homs(&r, &s, caps)
                    .map_err(plain)?
                    .iter()
                    .map(|h| json!({"matrix": h.matrix().to_string(), "group": h.grouphom().describe()}))
                    .collect()
            } else {
                let (g, h) = (load_group(a)?, load_group(b)?);
                enumerate_group_homs(&g, &h, caps.max_hom_candidates)
                    .map_err(plain)?
                    .iter()
                    .map(|h| json!(h.describe()))
                    .collect()
            };
            extra.insert("count".into(), json!(homs.len()));
            extra.insert("homs".into(), Value::Array(homs));
            "ok"
        }
        Command::PaperDemo { p } => {
            let report = paper_demo(*p, &SearchBounds::default(), caps).map_err(plain)?;
            extra.insert("bounds".into(), json!(report.bounds));
            extra.insert("report".into(), serde_json::to_value(&report).expect("serialisable"));
            "ok"
        }
    };
    Ok((outcome, extra))
}

pub fn exit_code(outcome: &str) -> i32 {
    match outcome {
        "holds" | "equivalent" | "member" | "ok" => 0,
        "fails" | "not-equivalent" | "non-member" => 1,
        "unknown" => 2,
        _ => 3,
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                match v {
                    Value::Array(items) if items.is_empty() => out.push_str(&format!("{pad}{k}: []\n")),
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(v, indent + 1, out);
                    }
                    Value::String(s) if s.contains('\n') => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for line in s.lines() {
                            out.push_str(&format!("{pad}  {line}\n"));
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(v))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(item, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", scalar(item))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{e}");
            return if e.use_stderr() { 3 } else { 0 };
        }
    };
    let caps = Caps::default();
    let started = Instant::now();
    let result = execute(&cli.command, &caps);
    let timing = if cli.no_timing { 0 } else { started.elapsed().as_millis() as u64 };

    let mut report = Map::new();
    report.insert("command".into(), json!(cli.command.name()));
    report.insert("inputs".into(), cli.command.inputs());
    match result {
        Ok((outcome, extra)) => {
            report.insert("outcome".into(), json!(outcome));
            report.extend(extra);
        }
        Err(f) => {
            report.insert("outcome".into(), json!("error"));
            let location = match (&f.file, f.span) {
                (Some(file), Some(s)) => Some(format!("{}:{}:{}", file.display(), s.line, s.column)),
                (Some(file), None) => Some(file.display().to_string()),
                (None, Some(s)) => Some(format!("{}:{}", s.line, s.column)),
                (None, None) => None,
            };
            report.insert("error".into(), json!({"message": f.error, "at": location}));
        }
    }
    report.insert("timing_ms".into(), json!(timing));
    let outcome = report["outcome"].as_str().unwrap_or("error").to_string();

    let value = Value::Object(report);
    let text = if cli.json {
        serde_json::to_string_pretty(&value).expect("serialisable") + "\n"
    } else {
        let mut s = String::new();
        render_text(&value, 0, &mut s);
        s
    };
    let _ = out.write_all(text.as_bytes());
    exit_code(&outcome)
}
