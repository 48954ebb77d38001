//! The `etgrs` command line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand, ValueEnum};
use etgrs_core::analysis::{etgrs_classify, etgrs_weight_distribution, non_grs_certificate, schur_square_closed};
use etgrs_core::gf::is_prime;
use etgrs_core::selfdual::{
    certify_self_dual_2k, construct_even, construct_odd_pcd1, construct_trace, first_subset_with_sum,
    refute_self_dual_etgrs, search_self_orthogonal, solve_self_orth, Construction, Duality, OddVariant,
};
use etgrs_core::{CodeSpec, Elem, Error as CoreError, Field, Matrix};
use serde_json::{json, Value};

use crate::json::{codes, elems, matrix_rows, parse_spec, CertificateJson, CodeJson, FieldJson, ReportJson, SpecJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "etgrs", version, about = "Exact toolkit for (+)-twisted and (+)-extended twisted GRS codes")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Describe GF(p^m).
    Field {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Print the element code to polynomial table.
        #[arg(long)]
        table: bool,
    },
    /// Generator (and, for extended codes, parity-check) matrix.
    Construct(SpecArgs),
    /// MDS/NMDS classification and the minimum-weight count.
    Classify {
        #[command(flatten)]
        spec: SpecArgs,
        /// Confirm against full codeword enumeration.
        #[arg(long)]
        verify: bool,
    },
    /// Weight distributions of the code and its dual.
    Weights {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        verify: bool,
    },
    /// Closed-form parity-check matrix of an extended code.
    Dual(SpecArgs),
    /// Schur square dimension and non-GRS certificate.
    Schur(SpecArgs),
    /// Decide self-orthogonality through the witness polynomial.
    CheckSo(SpecArgs),
    /// Explicit self-dual and almost self-dual constructions.
    Build {
        #[command(subcommand)]
        which: Build,
    },
    /// Search for a self-orthogonal code of the given shape.
    Search {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        extended: bool,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u128,
    },
    /// Exhaustively check that no extended code of length 2k is self-dual.
    Refute {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u128,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    SelfDual,
    AlmostSelfDual,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Variant {
    ZeroHole,
    Mds,
    Nmds,
}

#[derive(Debug, Subcommand)]
enum Build {
    /// Characteristic two: 2k points summing to 0 (self-dual) or 1 (almost self-dual).
    Even {
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Target::SelfDual)]
        target: Target,
        /// Points; defaults to the first subset with the required sum.
        #[arg(long, value_delimiter = ',')]
        alpha: Option<Vec<u32>>,
        #[arg(long, default_value_t = 1)]
        eta: u32,
    },
    /// Odd characteristic over GF(p^{2m}) on +-gamma^i.
    Odd {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long)]
        i0: Option<usize>,
        #[arg(long)]
        eta: Option<u32>,
    },
    /// Complement of a trace kernel in GF(p^m).
    Trace {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        eta: Option<u32>,
    },
}

#[derive(Debug, Args)]
struct SpecArgs {
    /// CodeSpec JSON file (bare, or with a `spec` member).
    #[arg(long, conflicts_with_all = ["p", "alpha", "v", "k"])]
    spec: Option<PathBuf>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Evaluation points as element codes.
    #[arg(long, value_delimiter = ',')]
    alpha: Option<Vec<u32>>,
    /// Column multipliers; all ones when omitted.
    #[arg(long, value_delimiter = ',')]
    v: Option<Vec<u32>>,
    #[arg(long, default_value_t = 1)]
    eta: u32,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    extended: bool,
}

enum Failure {
    Usage(String),
    Domain(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Domain(e.into())
    }
}

type Outcome = Result<(String, Value), Failure>;

impl SpecArgs {
    fn load(&self) -> Result<CodeSpec, Failure> {
        if let Some(path) = &self.spec {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Domain(anyhow!("cannot read {}: {e}", path.display())))?;
            return Ok(parse_spec(&text)?);
        }
        let p = self.p.ok_or_else(|| Failure::Usage("--p is required without --spec".into()))?;
        let alpha = self
            .alpha
            .clone()
            .ok_or_else(|| Failure::Usage("--alpha is required without --spec".into()))?;
        let k = self.k.ok_or_else(|| Failure::Usage("--k is required without --spec".into()))?;
        let v = self.v.clone().unwrap_or_else(|| vec![1; alpha.len()]);
        let spec = SpecJson {
            field: FieldJson {
                p,
                m: self.m,
                modulus: None,
            },
            alpha,
            v,
            eta: self.eta,
            k,
            extended: self.extended,
        };
        Ok(spec.to_spec()?)
    }
}

/// Parses `args` (program name first), writes results to `out` and
/// diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok((text, value)) => {
            let rendered = if cli.json {
                serde_json::to_string_pretty(&value).expect("serializable") + "\n"
            } else {
                text
            };
            let _ = out.write_all(rendered.as_bytes());
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_DOMAIN
        }
    }
}

fn dispatch(command: &Command) -> Outcome {
    match command {
        Command::Field { p, m, table } => field(*p, *m, *table),
        Command::Construct(args) => construct(&args.load()?),
        Command::Classify { spec, verify } => classify(&spec.load()?, *verify),
        Command::Weights { spec, verify } => weights(&spec.load()?, *verify),
        Command::Dual(args) => dual(&args.load()?),
        Command::Schur(args) => schur(&args.load()?),
        Command::CheckSo(args) => check_so(&args.load()?),
        Command::Build { which } => build(which),
        Command::Search {
            p,
            m,
            k,
            n,
            extended,
            budget,
        } => search(*p, *m, *k, *n, *extended, *budget),
        Command::Refute { q, k, budget } => refute(*q, *k, *budget),
    }
}

fn polynomial_string(coeffs: &[u32]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn field(p: u32, m: u32, table: bool) -> Outcome {
    let f = Field::new(p, m)?;
    let mut text = format!(
        "{f} modulus {} (coefficients {:?})\ngenerator {}\n",
        polynomial_string(f.modulus()),
        f.modulus(),
        f.generator()
    );
    let mut rows = Vec::new();
    if table {
        for e in f.elements() {
            let poly = polynomial_string(&f.coordinates(e));
            let _ = writeln!(text, "{:>6}  {poly}", e.0);
            rows.push(json!({"code": e.0, "coordinates": f.coordinates(e), "polynomial": poly}));
        }
    }
    let mut value = json!({
        "field": FieldJson::from_field(&f),
        "order": f.order(),
        "generator": f.generator().0,
    });
    if table {
        value["table"] = Value::Array(rows);
    }
    Ok((text, value))
}

fn render_matrix(m: &Matrix) -> String {
    let width = (0..m.rows())
        .flat_map(|r| m.row(r).iter().map(|e| e.0.to_string().len()))
        .max()
        .unwrap_or(1);
    let mut s = String::new();
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|e| format!("{:>width$}", e.0)).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    s
}

fn describe(spec: &CodeSpec) -> String {
    format!(
        "{} [{}, {}] code over {}",
        if spec.extended() { "(+)-ETGRS" } else { "(+)-TGRS" },
        spec.length(),
        spec.k(),
        spec.field()
    )
}

fn construct(spec: &CodeSpec) -> Outcome {
    let code = spec.code();
    let mut text = format!("{}\ngenerator:\n{}", describe(spec), render_matrix(code.generator()));
    let mut value = json!({
        "spec": SpecJson::from_spec(spec),
        "code": CodeJson::from_code(&code),
    });
    if spec.extended() {
        let h = spec.parity_check()?;
        let _ = write!(text, "parity-check:\n{}", render_matrix(&h));
        value["parity_check"] = json!(matrix_rows(&h));
    }
    Ok((text, value))
}

fn classify(spec: &CodeSpec, verify: bool) -> Outcome {
    let class = etgrs_classify(spec)?;
    let mut text = format!("{}, A_min={}\n", class.classification, class.a_min);
    let mut value = json!({
        "classification": class.classification.as_str(),
        "A_min": class.a_min.to_string(),
    });
    if verify {
        let code = spec.code();
        let d = code.min_distance()?;
        let dual_d = code.dual().min_distance()?;
        let wd = code.weight_distribution()?;
        let a_min = &wd.counts()[spec.length() - spec.k()];
        if wd.classification() != class.classification || *a_min != class.a_min {
            return Err(Failure::Domain(anyhow!(
                "enumeration disagrees: {} with A_min={a_min} (d = {d}, dual d = {dual_d})",
                wd.classification()
            )));
        }
        let _ = writeln!(text, "verified by enumeration: d = {d}, dual d = {dual_d}");
        value["verified"] = json!(true);
        value["min_distance"] = json!(d);
        value["dual_min_distance"] = json!(dual_d);
    }
    Ok((text, value))
}

fn certificates(spec: &CodeSpec) -> Vec<CertificateJson> {
    let mut out = Vec::new();
    if let Ok(c) = non_grs_certificate(spec) {
        out.push(CertificateJson::from_non_grs(&c));
    }
    if let Ok(Some(w)) = solve_self_orth(spec) {
        out.push(CertificateJson::from_witness(&w));
    }
    out
}

fn weights(spec: &CodeSpec, verify: bool) -> Outcome {
    let class = etgrs_classify(spec)?;
    let dists = etgrs_weight_distribution(spec)?;
    if verify {
        let code = spec.code();
        if code.weight_distribution()? != dists.0 || code.dual().weight_distribution()? != dists.1 {
            return Err(Failure::Domain(anyhow!("closed-form weight distribution disagrees with enumeration")));
        }
    }
    let (primal, dual) = (&dists.0, &dists.1);
    let rows: Vec<[String; 3]> = (0..=spec.length())
        .map(|i| [i.to_string(), primal.counts()[i].to_string(), dual.counts()[i].to_string()])
        .collect();
    let widths: Vec<usize> = (0..3)
        .map(|c| rows.iter().map(|r| r[c].len()).chain([["w", "A_w", "dual A_w"][c].len()]).max().unwrap())
        .collect();
    let mut text = format!("{}: {}, A_min={}\n", describe(spec), class.classification, class.a_min);
    let _ = writeln!(
        text,
        "{:>w0$}  {:>w1$}  {:>w2$}",
        "w",
        "A_w",
        "dual A_w",
        w0 = widths[0],
        w1 = widths[1],
        w2 = widths[2]
    );
    for r in &rows {
        let _ = writeln!(text, "{:>w0$}  {:>w1$}  {:>w2$}", r[0], r[1], r[2], w0 = widths[0], w1 = widths[1], w2 = widths[2]);
    }
    if verify {
        text.push_str("verified by enumeration\n");
    }
    let report = ReportJson::new(&class, &dists, certificates(spec));
    let mut value = serde_json::to_value(&report).expect("serializable");
    if verify {
        value["verified"] = json!(true);
    }
    Ok((text, value))
}

fn dual(spec: &CodeSpec) -> Outcome {
    let h = spec.parity_check()?;
    let rank = h.rank(spec.field());
    let text = format!(
        "parity-check matrix of the {} (rank {rank}):\n{}",
        describe(spec),
        render_matrix(&h)
    );
    Ok((text, json!({"parity_check": matrix_rows(&h), "rank": rank})))
}

fn schur(spec: &CodeSpec) -> Outcome {
    let square = spec.code().schur_square();
    let mut text = format!("{}\ndim C^2 = {}\n", describe(spec), square.dimension());
    let mut value = json!({"square_dimension": square.dimension()});
    match schur_square_closed(spec) {
        Ok(closed) => {
            let agrees = closed.same_space(&square)?;
            if !agrees {
                return Err(Failure::Domain(anyhow!("closed-form Schur square disagrees with the direct square")));
            }
            text.push_str("closed-form span agrees with the direct square\n");
            value["closed_form_agrees"] = json!(true);
        }
        Err(e) => {
            let _ = writeln!(text, "closed form unavailable: {e}");
        }
    }
    match non_grs_certificate(spec) {
        Ok(cert) => {
            let c = CertificateJson::from_non_grs(&cert);
            match (&c.square_dimension, &c.grs_dimension, &c.witness) {
                (Some(d), Some(g), _) => {
                    let _ = writeln!(text, "not GRS/EGRS: dim C^2 = {d} > {g}");
                }
                (_, _, Some(w)) => {
                    let _ = writeln!(text, "not GRS/EGRS: weight-one word {w:?} lies in the dual's square");
                }
                _ => {}
            }
            value["certificate"] = serde_json::to_value(&c).expect("serializable");
        }
        Err(e) => {
            let _ = writeln!(text, "no non-GRS certificate: {e}");
        }
    }
    Ok((text, value))
}

fn check_so(spec: &CodeSpec) -> Outcome {
    let witness = solve_self_orth(spec)?;
    let mut value = json!({"self_orthogonal": witness.is_some()});
    let mut text = describe(spec) + "\n";
    match &witness {
        Some(w) => {
            let _ = writeln!(
                text,
                "self-orthogonal: g = {} satisfies {}",
                polynomial_string(&codes(w.g.coeffs())),
                w.condition.as_str()
            );
            value["certificate"] = serde_json::to_value(CertificateJson::from_witness(w)).expect("serializable");
        }
        None => text.push_str("not self-orthogonal: no witness polynomial exists\n"),
    }
    if spec.n() == 2 * spec.k() {
        if let Some(c) = certify_self_dual_2k(spec)? {
            let _ = writeln!(text, "{} with lambda = {}", c.verdict.as_str(), c.lambda);
            value["duality"] = serde_json::to_value(CertificateJson::from_duality(&c)).expect("serializable");
        }
    }
    Ok((text, value))
}

fn construction_output(c: &Construction) -> Outcome {
    let spec = &c.spec;
    let mut text = format!("{} {}\n", c.certificate.verdict.as_str(), describe(spec));
    let _ = writeln!(text, "alpha: {:?}", codes(spec.alpha()));
    let _ = writeln!(text, "v:     {:?}", codes(spec.v()));
    let _ = writeln!(text, "eta:   {}", spec.eta());
    let _ = writeln!(text, "certificate: lambda = {}, Gram matrix vanishes", c.certificate.lambda);
    let mut value = json!({
        "spec": SpecJson::from_spec(spec),
        "certificate": CertificateJson::from_duality(&c.certificate),
    });
    if spec.extended() {
        let class = etgrs_classify(spec)?;
        let _ = writeln!(text, "classification: {}, A_min={}", class.classification, class.a_min);
        value["classification"] = json!(class.classification.as_str());
        value["A_min"] = json!(class.a_min.to_string());
    }
    Ok((text, value))
}

fn build(which: &Build) -> Outcome {
    let c = match which {
        Build::Even {
            p,
            m,
            k,
            target,
            alpha,
            eta,
        } => {
            if *p != 2 {
                return Err(Failure::Usage("the even construction needs --p 2".into()));
            }
            let f = Field::new(2, *m)?;
            let target = match target {
                Target::SelfDual => Duality::SelfDual,
                Target::AlmostSelfDual => Duality::AlmostSelfDual,
            };
            let alpha = match alpha {
                Some(a) => elems(a),
                None => {
                    let (domain, sum): (Vec<Elem>, Elem) = match target {
                        Duality::SelfDual => (f.elements().collect(), Elem::ZERO),
                        Duality::AlmostSelfDual => (f.nonzero_elements().collect(), Elem::ONE),
                    };
                    first_subset_with_sum(&f, &domain, 2 * k, sum)
                        .ok_or_else(|| anyhow!("no {}-subset has the required sum", 2 * k))?
                }
            };
            construct_even(&f, *k, alpha, target, f.elem(*eta)?)?
        }
        Build::Odd {
            p,
            m,
            k,
            variant,
            i0,
            eta,
        } => {
            let variant = match variant {
                Variant::ZeroHole => OddVariant::ZeroHole {
                    i0: i0.ok_or_else(|| Failure::Usage("--i0 is required for the zero-hole variant".into()))?,
                },
                Variant::Mds => OddVariant::PlainMds,
                Variant::Nmds => OddVariant::PlainNmds,
            };
            construct_odd_pcd1(*p, *m, *k, variant, eta.map(Elem))?
        }
        Build::Trace { p, m, r, eta } => construct_trace(*p, *m, *r, eta.map(Elem))?,
    };
    construction_output(&c)
}

fn search(p: u32, m: u32, k: usize, n: usize, extended: bool, budget: u128) -> Outcome {
    let f = Field::new(p, m)?;
    match search_self_orthogonal(&f, k, n, extended, budget)? {
        Some((spec, witness)) => {
            let text = format!(
                "self-orthogonal {}\nalpha: {:?}\nv:     {:?}\neta:   {}\nwitness g = {}\n",
                describe(&spec),
                codes(spec.alpha()),
                codes(spec.v()),
                spec.eta(),
                polynomial_string(&codes(witness.g.coeffs()))
            );
            let value = json!({
                "found": true,
                "spec": SpecJson::from_spec(&spec),
                "certificate": CertificateJson::from_witness(&witness),
            });
            Ok((text, value))
        }
        None => Ok((
            format!("no self-orthogonal code with k = {k}, n = {n} over {f}\n"),
            json!({"found": false}),
        )),
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    if !is_prime(p) {
        return None;
    }
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn refute(q: u32, k: usize, budget: u128) -> Outcome {
    let (p, m) = prime_power(q).ok_or_else(|| anyhow!("{q} is not a prime power"))?;
    let f = Field::new(p, m)?;
    let report = refute_self_dual_etgrs(&f, k, budget)?;
    let mut text = if report.self_dual.is_empty() {
        format!(
            "no self-dual (+)-ETGRS found; {} specs checked\n",
            report.specs_checked
        )
    } else {
        format!(
            "found {} self-dual (+)-ETGRS codes; {} specs checked\n",
            report.self_dual.len(),
            report.specs_checked
        )
    };
    if let Some(note) = report.note {
        let _ = writeln!(text, "note: {note}");
    }
    let value = json!({
        "q": q,
        "k": k,
        "n": report.n,
        "specs_checked": report.specs_checked.to_string(),
        "self_dual": report.self_dual.iter().map(SpecJson::from_spec).collect::<Vec<_>>(),
        "note": report.note,
    });
    Ok((text, value))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("etgrs").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn polynomials() {
        assert_eq!(polynomial_string(&[1, 0, 1]), "x^2 + 1");
        assert_eq!(polynomial_string(&[2, 1]), "x + 2");
        assert_eq!(polynomial_string(&[]), "0");
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(5), Some((5, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["classify", "--p", "7", "--alpha", "1,2,3,4", "--k", "3", "--eta", "2", "--extended"]).0, 0);
        let (code, _, err) = run_str(&["classify", "--p", "7", "--alpha", "1,2,3,4", "--eta", "2"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--k"));
        assert_eq!(run_str(&["classify", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["classify", "--p", "7", "--alpha", "1,1,3", "--k", "2", "--extended"]).0, EXIT_DOMAIN);
        assert_eq!(run_str(&["field", "--p", "6"]).0, EXIT_DOMAIN);
        assert_eq!(run_str(&["--version"]).0, EXIT_OK);
    }
}
