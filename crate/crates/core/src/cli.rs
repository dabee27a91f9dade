//! Command-line front end.
//!
//! Every sub-command calls the library directly and turns the result into a
//! list of [`OutputRecord`]s, rendered as an aligned table, JSON or CSV.
//! Exit codes: 0 success, 1 a verification found a mismatch, 2 usage error or
//! arithmetic overflow.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::arith::Natural;
use crate::diophantine::{self, Equation};
use crate::error::Error;
use crate::exec::Exec;
use crate::families::{self, Combination, FamilyId, FamilyMember};
use crate::geometry::{self, Rational, TriangleSides};
use crate::pythagorean::{self, PrimitiveTriple};
use crate::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Triple,
    Solution,
    FamilyMember,
    Census,
    Verification,
}

impl Kind {
    fn as_str(self) -> &'static str {
        match self {
            Kind::Triple => "triple",
            Kind::Solution => "solution",
            Kind::FamilyMember => "family-member",
            Kind::Census => "census",
            Kind::Verification => "verification",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(Natural),
    Text(String),
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Text(s) => s.clone(),
        }
    }
}

impl Serialize for Kind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Int(v) => s.serialize_u128(*v),
            Value::Text(t) => s.serialize_str(t),
        }
    }
}

impl From<Natural> for Value {
    fn from(v: Natural) -> Self {
        Value::Int(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_owned())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

/// One output row: a kind plus named fields in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub kind: Kind,
    pub payload: Vec<(String, Value)>,
}

impl OutputRecord {
    pub fn new(kind: Kind) -> Self {
        OutputRecord { kind, payload: Vec::new() }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.payload.push((key.to_owned(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.payload.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

struct Payload<'a>(&'a [(String, Value)]);

impl Serialize for Payload<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Serialize for OutputRecord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("kind", &self.kind)?;
        map.serialize_entry("payload", &Payload(&self.payload))?;
        map.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Column names: `kind` followed by every payload key in first-seen order.
pub fn columns(records: &[OutputRecord]) -> Vec<String> {
    let mut cols = vec!["kind".to_owned()];
    for r in records {
        for (k, _) in &r.payload {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    cols
}

fn cells(records: &[OutputRecord], cols: &[String]) -> Vec<Vec<String>> {
    records
        .iter()
        .map(|r| {
            cols.iter()
                .map(|c| {
                    if c == "kind" {
                        r.kind.as_str().to_owned()
                    } else {
                        r.get(c).map(Value::render).unwrap_or_default()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn render(records: &[OutputRecord], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, records)?;
            writeln!(out)
        }
        Format::Csv => {
            let cols = columns(records);
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&cols)?;
            for row in cells(records, &cols) {
                w.write_record(&row)?;
            }
            w.flush()
        }
        Format::Table => {
            // Consecutive records with the same kind and keys share a header.
            let same_shape = |a: &OutputRecord, b: &OutputRecord| {
                a.kind == b.kind && a.payload.iter().map(|p| &p.0).eq(b.payload.iter().map(|p| &p.0))
            };
            let mut start = 0;
            while start < records.len() {
                let kind = records[start].kind;
                let end = records[start..]
                    .iter()
                    .position(|r| !same_shape(r, &records[start]))
                    .map_or(records.len(), |p| start + p);
                let group = &records[start..end];
                let cols: Vec<String> = columns(group).into_iter().skip(1).collect();
                let rows = cells(group, &cols);
                let widths: Vec<usize> = cols
                    .iter()
                    .enumerate()
                    .map(|(i, c)| rows.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
                    .collect();
                if start > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "# {}", kind.as_str())?;
                let line = |row: &[String]| {
                    row.iter()
                        .zip(&widths)
                        .map(|(v, w)| format!("{v:>w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                };
                writeln!(out, "{}", line(&cols))?;
                for row in &rows {
                    writeln!(out, "{}", line(row))?;
                }
                start = end;
            }
            Ok(())
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "pythdiam", version, about = "Tangent-circle diameters and square-leg Pythagorean families")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// Run searches on a single thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate primitive triples by hypotenuse.
    Triples {
        #[arg(long)]
        alpha_max: Natural,
        /// Report the δ-multiple of each triple.
        #[arg(long)]
        delta: Option<Natural>,
    },
    /// Incircle and excircle diameters.
    Diameters(DiametersArgs),
    /// Solutions of x²+2y²=z² (A) or x²+y²=2z² (B).
    Dioph(DiophArgs),
    /// Members of a square-leg/square-diameter family.
    Family(FamilyArgs),
    /// Census of leg/diameter square combinations.
    Classify(ClassifyArgs),
    /// Triangle with side k² and perimeter l².
    Construct {
        #[arg(long)]
        k: Natural,
        #[arg(long)]
        l: Natural,
        #[arg(long, allow_negative_numbers = true)]
        t: i128,
    },
    /// Run a verification.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct DiametersArgs {
    /// Side lengths a,b,c (a is the hypotenuse of a right triangle).
    #[arg(long, value_parser = parse_triple)]
    sides: Option<(Natural, Natural, Natural)>,
    /// Generating pair m,n of a primitive triple.
    #[arg(long, value_parser = parse_pair)]
    mn: Option<(Natural, Natural)>,
}

#[derive(Debug, Args)]
struct DiophArgs {
    #[arg(long, value_parser = parse_equation)]
    eq: Equation,
    #[arg(long, required_unless_present = "recover")]
    z_max: Option<Natural>,
    /// Use the exhaustive scan instead of the parametrization.
    #[arg(long, requires = "z_max")]
    brute: bool,
    /// Recover the chord parameters of a solution x,y,z (equation B).
    #[arg(long, value_parser = parse_triple, conflicts_with_all = ["z_max", "brute"])]
    recover: Option<(Natural, Natural, Natural)>,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, value_parser = parse_family)]
    id: FamilyId,
    #[arg(long, requires = "lambda", conflicts_with = "alpha_max")]
    kappa: Option<Natural>,
    #[arg(long, requires = "kappa")]
    lambda: Option<Natural>,
    /// Use the alternative t2 formula (F3 only).
    #[arg(long, requires = "kappa")]
    sign_variant: bool,
    #[arg(long, required_unless_present = "kappa")]
    alpha_max: Option<Natural>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ClassifyArgs {
    #[arg(long)]
    alpha_max: Option<Natural>,
    #[arg(long, value_parser = parse_pair)]
    mn: Option<(Natural, Natural)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    Examples,
    Theorem1,
    Completeness,
    Consistency,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    target: VerifyTarget,
    /// Hypotenuse bound for theorem1 (default 10⁶) and completeness (default 10⁶).
    #[arg(long)]
    alpha_max: Option<Natural>,
    /// Bound on z for completeness (default 20000).
    #[arg(long)]
    z_max: Option<Natural>,
    /// Bound on m for consistency (default 300).
    #[arg(long)]
    m_max: Option<Natural>,
    /// Bound on k²+λ² for the chord round trip in consistency (default 10000).
    #[arg(long)]
    chord_bound: Option<Natural>,
}

fn split_numbers(s: &str, n: usize) -> Result<Vec<Natural>, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != n {
        return Err(format!("expected {n} comma-separated integers, got {s:?}"));
    }
    parts
        .iter()
        .map(|p| p.parse::<Natural>().map_err(|e| format!("{p:?}: {e}")))
        .collect()
}

fn parse_triple(s: &str) -> Result<(Natural, Natural, Natural), String> {
    let v = split_numbers(s, 3)?;
    Ok((v[0], v[1], v[2]))
}

fn parse_pair(s: &str) -> Result<(Natural, Natural), String> {
    let v = split_numbers(s, 2)?;
    Ok((v[0], v[1]))
}

fn parse_equation(s: &str) -> Result<Equation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<FamilyId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn triple_record(t: &PrimitiveTriple) -> OutputRecord {
    OutputRecord::new(Kind::Triple)
        .with("m", t.params.m())
        .with("n", t.params.n())
        .with("alpha", t.alpha)
        .with("beta", t.beta)
        .with("gamma", t.gamma)
}

fn rational(q: &Rational) -> Value {
    if *q.denom() == 1 {
        Value::Int(*q.numer())
    } else {
        Value::Text(format!("{}/{}", q.numer(), q.denom()))
    }
}

fn optional(v: Option<Natural>) -> Value {
    v.map_or_else(|| Value::Text(String::new()), Value::Int)
}

fn sides_record(s: &TriangleSides) -> Result<OutputRecord, Error> {
    let ds = geometry::diameter_squares(s)?;
    let ints = ds.integer_diameters();
    Ok(OutputRecord::new(Kind::Triple)
        .with("a", s.a())
        .with("b", s.b())
        .with("c", s.c())
        .with("perimeter", s.perimeter())
        .with("heron16", ds.heron16)
        .with("d_sq", rational(&ds.squares.d))
        .with("d_a_sq", rational(&ds.squares.d_a))
        .with("d_b_sq", rational(&ds.squares.d_b))
        .with("d_g_sq", rational(&ds.squares.d_g))
        .with("d", optional(ints.d))
        .with("d_a", optional(ints.d_a))
        .with("d_b", optional(ints.d_b))
        .with("d_g", optional(ints.d_g)))
}

fn member_record(mb: &FamilyMember) -> OutputRecord {
    let mut r = OutputRecord::new(Kind::FamilyMember)
        .with("family", mb.family.to_string())
        .with("kappa", mb.kappa)
        .with("lambda", mb.lam)
        .with("sign_variant", if mb.sign_variant { "alternative" } else { "primary" })
        .with("t1", mb.t1)
        .with("t2", mb.t2)
        .with("m", mb.m)
        .with("n", mb.n)
        .with("alpha", mb.triple.alpha)
        .with("beta", mb.triple.beta)
        .with("gamma", mb.triple.gamma);
    for (q, root) in &mb.square_witnesses {
        r = r.with(&format!("{}_root", q.name()), *root);
    }
    r
}

fn triple_text(t: &(Natural, Natural, Natural)) -> String {
    format!("({}, {}, {})", t.0, t.1, t.2)
}

fn list_text(ts: &[(Natural, Natural, Natural)]) -> String {
    ts.iter().map(triple_text).collect::<Vec<_>>().join(" ")
}

fn status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

/// Records plus whether every verification in them passed.
type Outcome = (Vec<OutputRecord>, bool);

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    match &cli.command {
        Command::Triples { alpha_max, delta } => {
            let triples = pythagorean::primitive_triples(*alpha_max, exec)?;
            let mut out = Vec::with_capacity(triples.len());
            for t in &triples {
                let mut r = triple_record(t);
                if let Some(d) = delta {
                    let s = pythagorean::scale(t, *d)?;
                    r = r
                        .with("delta", *d)
                        .with("a", s.a())
                        .with("b", s.b())
                        .with("c", s.c());
                }
                out.push(r);
            }
            Ok((out, true))
        }
        Command::Diameters(DiametersArgs { sides: Some((a, b, c)), .. }) => {
            let s = TriangleSides::new(*a, *b, *c)?;
            Ok((vec![sides_record(&s)?], true))
        }
        Command::Diameters(DiametersArgs { mn: Some((m, n)), .. }) => {
            let t = pythagorean::make_primitive(*m, *n)?;
            let d = t.diameters()?;
            let r = triple_record(&t)
                .with("d", d.d)
                .with("d_a", d.d_a)
                .with("d_b", d.d_b)
                .with("d_g", d.d_g);
            Ok((vec![r], true))
        }
        Command::Diameters(_) => unreachable!("clap enforces one of --sides, --mn"),
        Command::Dioph(args) => {
            let solution = |x: Natural, y: Natural, z: Natural| {
                OutputRecord::new(Kind::Solution)
                    .with("eq", args.eq.to_string())
                    .with("x", x)
                    .with("y", y)
                    .with("z", z)
            };
            if let Some((x, y, z)) = args.recover {
                if args.eq != Equation::B {
                    return Err(Error::BadParams("chord recovery applies to equation B".into()));
                }
                let (k, lam) = diophantine::recover_chord_params(x, y, z)?;
                return Ok((vec![solution(x, y, z).with("k", k).with("lambda", lam)], true));
            }
            let z_max = args.z_max.expect("clap requires --z-max");
            let out = if args.brute {
                diophantine::brute_solutions(args.eq, z_max, exec)?
                    .into_iter()
                    .map(|(x, y, z)| solution(x, y, z))
                    .collect()
            } else {
                diophantine::enumerate_solutions(args.eq, z_max, exec)?
                    .iter()
                    .map(|s| solution(s.x, s.y, s.z).with("k", s.k).with("lambda", s.lam))
                    .collect()
            };
            Ok((out, true))
        }
        Command::Family(args) => {
            if let (Some(kappa), Some(lam)) = (args.kappa, args.lambda) {
                let mb = families::gen_family(args.id, kappa, lam, args.sign_variant)?;
                return Ok((vec![member_record(&mb)], true));
            }
            let alpha_max = args.alpha_max.expect("clap requires --alpha-max");
            let members = families::enumerate_family(args.id, alpha_max, exec)?;
            Ok((members.iter().map(member_record).collect(), true))
        }
        Command::Classify(ClassifyArgs { mn: Some((m, n)), .. }) => {
            let t = pythagorean::make_primitive(*m, *n)?;
            let set = families::classify_combinations(&t)?;
            let ids = set.ids().iter().map(u8::to_string).collect::<Vec<_>>().join(" ");
            Ok((vec![triple_record(&t).with("combinations", ids)], true))
        }
        Command::Classify(ClassifyArgs { alpha_max, .. }) => {
            let report = families::theorem1_search(alpha_max.expect("clap requires one"), exec)?;
            Ok((census_records(&report), true))
        }
        Command::Construct { k, l, t } => {
            let s = geometry::square_side_perimeter_triangle(*k, *l, *t)?;
            Ok((vec![sides_record(&s)?], true))
        }
        Command::Verify(args) => run_verify(args, exec),
    }
}

fn census_records(report: &families::Theorem1Report) -> Vec<OutputRecord> {
    Combination::ALL
        .iter()
        .map(|&c| {
            OutputRecord::new(Kind::Census)
                .with("combination", Natural::from(c.id()))
                .with("leg", c.leg().name())
                .with("diameter", c.diameter().name())
                .with("family", c.family().map_or_else(|| "none".to_owned(), |f| f.to_string()))
                .with("count", Natural::from(report.count(c)))
        })
        .collect()
}

fn run_verify(args: &VerifyArgs, exec: Exec) -> Result<Outcome, Error> {
    let verification = |check: &str| OutputRecord::new(Kind::Verification).with("check", check);
    match args.target {
        VerifyTarget::Examples => {
            let checks = verify::check_examples()?;
            let mut out = Vec::new();
            let mut all_match = true;
            for c in &checks {
                all_match &= c.matches_printed();
                let fields = c
                    .discrepancies
                    .iter()
                    .map(|d| d.field.as_str())
                    .collect::<Vec<_>>()
                    .join(" ");
                out.push(
                    verification("example")
                        .with("example", Natural::from(c.label))
                        .with("family", c.family.to_string())
                        .with("status", if c.matches_printed() { "matches-printed" } else { "printed-discrepancy" })
                        .with(
                            "recomputation",
                            if c.recomputation_consistent { "matches-oracle" } else { "inconsistent" },
                        )
                        .with("fields_checked", c.fields_checked as Natural)
                        .with("mismatched_fields", fields),
                );
            }
            for c in &checks {
                for d in &c.discrepancies {
                    out.push(
                        verification("discrepancy")
                            .with("example", Natural::from(d.label))
                            .with("field", d.field.as_str())
                            .with("printed", d.printed)
                            .with("recomputed", optional(d.recomputed)),
                    );
                }
            }
            Ok((out, all_match))
        }
        VerifyTarget::Theorem1 => {
            let alpha_max = args.alpha_max.unwrap_or(1_000_000);
            match families::theorem1_search(alpha_max, exec) {
                Ok(report) => {
                    let ok = report.counterexamples() == 0 && report.both_legs_square.is_empty();
                    let mut out = census_records(&report);
                    out.push(
                        verification("theorem1")
                            .with("alpha_max", alpha_max)
                            .with("triples", Natural::from(report.triples))
                            .with("gamma_squares", Natural::from(report.gamma_squares))
                            .with("counterexamples", Natural::from(report.counterexamples()))
                            .with("both_legs_square", report.both_legs_square.len() as Natural)
                            .with("status", status(ok))
                            .with("summary", format!("{} counterexamples", report.counterexamples())),
                    );
                    Ok((out, ok))
                }
                Err(Error::CounterexampleFound { alpha, beta, gamma, combination }) => Ok((
                    vec![verification("theorem1")
                        .with("alpha_max", alpha_max)
                        .with("status", "fail")
                        .with("summary", format!("counterexample ({alpha}, {beta}, {gamma}) in combination {combination}"))],
                    false,
                )),
                Err(e) => Err(e),
            }
        }
        VerifyTarget::Completeness => {
            let z_max = args.z_max.unwrap_or(20_000);
            let alpha_max = args.alpha_max.unwrap_or(1_000_000);
            let mut out = Vec::new();
            let mut ok = true;
            for eq in [Equation::A, Equation::B] {
                let r = verify::dioph_completeness(eq, z_max, exec)?;
                ok &= r.passes();
                out.push(
                    verification("dioph-completeness")
                        .with("equation", eq.to_string())
                        .with("bound", z_max)
                        .with("parametric", r.parametric as Natural)
                        .with("brute", r.brute as Natural)
                        .with("brute_only", list_text(&r.brute_only))
                        .with("parametric_only", list_text(&r.parametric_only))
                        .with("status", status(r.passes())),
                );
            }
            for c in families::family_census(alpha_max, exec)? {
                let pass = c.unsound.is_empty() && c.unexplained.is_empty();
                ok &= pass;
                out.push(
                    verification("family-completeness")
                        .with("combination", Natural::from(c.combination.id()))
                        .with("family", c.family.map_or_else(|| "none".to_owned(), |f| f.to_string()))
                        .with("bound", alpha_max)
                        .with("classified", c.classified as Natural)
                        .with("enumerated", c.enumerated as Natural)
                        .with("exceptions", list_text(&c.exceptions))
                        .with("unexplained", list_text(&c.unexplained))
                        .with("unsound", list_text(&c.unsound))
                        .with("status", status(pass)),
                );
            }
            Ok((out, ok))
        }
        VerifyTarget::Consistency => {
            let m_max = args.m_max.unwrap_or(300);
            let bound = args.chord_bound.unwrap_or(10_000);
            let d = verify::diameter_consistency(m_max, exec)?;
            let r = verify::chord_roundtrip(bound, exec)?;
            let (d_ok, r_ok) = (d.mismatches.is_empty(), r.failures.is_empty());
            let pairs = |v: &[(Natural, Natural)]| {
                v.iter().map(|(a, b)| format!("({a}, {b})")).collect::<Vec<_>>().join(" ")
            };
            let out = vec![
                verification("diameter-consistency")
                    .with("bound", m_max)
                    .with("checked", Natural::from(d.triples))
                    .with("failures", pairs(&d.mismatches))
                    .with("status", status(d_ok)),
                verification("chord-roundtrip")
                    .with("bound", bound)
                    .with("checked", Natural::from(r.checked))
                    .with("failures", pairs(&r.failures))
                    .with("status", status(r_ok)),
            ];
            Ok((out, d_ok && r_ok))
        }
    }
}

/// Parse `argv` (program name first), run the command and write its output.
/// Returns the process exit code.
pub fn run<S: AsRef<str>>(argv: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv.iter().map(AsRef::as_ref)) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match execute(&cli) {
        Ok((records, ok)) => {
            if let Err(e) = render(&records, cli.format, out) {
                let _ = writeln!(err, "error: writing output: {e}");
                return 2;
            }
            if ok {
                0
            } else {
                1
            }
        }
        Err(Error::OverflowDetected) => {
            let _ = writeln!(err, "error: arithmetic overflow (values exceed 128 bits)");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["pythdiam"];
        argv.extend_from_slice(args);
        let code = run(&argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&[]).0, 2);
        assert_eq!(run_str(&["triples"]).0, 2);
        assert_eq!(run_str(&["diameters", "--sides", "1,2"]).0, 2);
        assert_eq!(run_str(&["family", "--id", "F9", "--alpha-max", "10"]).0, 2);
        let (code, _, err) = run_str(&["family", "--id", "F1", "--kappa", "2", "--lambda", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("bad parameters"), "{err}");
    }

    #[test]
    fn overflow_has_its_own_diagnostic() {
        let big = (1u128 << 127).to_string();
        let (code, _, err) = run_str(&["diameters", "--mn", &format!("{big},1")]);
        assert_eq!(code, 2);
        assert!(err.contains("overflow"), "{err}");
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }

    #[test]
    fn table_output_is_aligned() {
        let (code, out, _) = run_str(&["triples", "--alpha-max", "30"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "# triple");
        assert_eq!(lines.len(), 2 + 5);
        assert!(lines.iter().skip(1).all(|l| l.len() == lines[1].len()));
    }

    #[test]
    fn negative_t_is_accepted() {
        let (code, out, _) = run_str(&["construct", "--k", "2", "--l", "3", "--t", "-1", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(out.lines().nth(1).unwrap().starts_with("triple,4,2,3,9,"), "{out}");
    }
}
