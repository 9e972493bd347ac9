//! Command-line surface over `cycword`. `run` parses arguments and returns
//! the exit code with the text written to stdout and stderr, so the binary
//! and the tests share one entry point.
//!
//! Exit codes: 0 success, 1 verification failure or counterexample,
//! 2 usage, parse or precondition error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use cycword::decompose::{shirv4_decompose, shirv_decompose};
use cycword::identities::{is_basic, is_strictly_basic, normal_forms, ConjugateProduct, ConjugateTerm, Identity};
use cycword::twisted_assoc::{
    exhaustive_solutions, main_lemma, theorem_solve, verify_main_lemma, verify_theorem, CheckItem, ExhaustiveOptions,
    LemmaError, MainLemmaCertificate, TheoremCertificate, TheoremError, VerificationReport,
};
use cycword::vankampen::{bouquet, fold_all, Diagram, FoldOrder};
use cycword::word_core::{
    are_cyclic_permutations, concat_all, cyc_product, cyclic_permutations, cyclically_reduce, inverse,
    is_cyclic_permutation, levi_solve, reduce, reduced_product, rotate,
};
use cycword::{Letter, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "cycword", version, about = "Cyclically reduced products of free-group words")]
pub struct Cli {
    /// Print the result in its JSON schema instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print a JSON run report (command, inputs, outputs, checks).
    #[arg(long, global = true, conflicts_with = "json")]
    report: bool,
    /// Include elapsed time in run reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Triple {
    #[arg(long)]
    u: String,
    #[arg(long)]
    v: String,
    #[arg(long)]
    w: String,
    /// A cyclic permutation of u*v, or `auto` for u*v itself.
    #[arg(long, default_value = "auto")]
    d: String,
}

#[derive(Args, Debug)]
struct ProductInput {
    /// A term `a : r` (conjugator, relator); repeat for each term.
    #[arg(long = "term", value_name = "A : R")]
    terms: Vec<String>,
    /// JSON list of `{"a": .., "r": ..}` terms; `-` reads stdin.
    #[arg(long, conflicts_with = "terms")]
    product: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Free reduction.
    Reduce { word: String },
    /// Cyclic reduction `w = t c t^-1`.
    Cycreduce { word: String },
    /// Reduced product.
    Prod { u: String, v: String },
    /// Cyclically reduced product `u*v`.
    Cycprod { u: String, v: String },
    /// All cyclic permutations in split order.
    Perms { word: String },
    /// Levi's lemma for `u1 u2 = v1 v2`.
    Levi { u1: String, u2: String, v1: String, v2: String },
    /// Shape of the reduced product of `u` and `v`.
    Shirv { u: String, v: String },
    /// Decomposition of a cyclic permutation `d` of `u*v`.
    Shirv4 {
        u: String,
        v: String,
        /// A cyclic permutation of u*v, or `auto`.
        #[arg(default_value = "auto")]
        d: String,
    },
    /// Theorem certificate `(p, q, w', f, h)`, verified.
    SolveTheorem(Triple),
    /// Lemma certificate, verified.
    SolveLemma(Triple),
    /// Every theorem certificate in the candidate space.
    Exhaustive {
        #[command(flatten)]
        triple: Triple,
        /// Stop after this many certificates.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Re-check a theorem or lemma certificate (JSON file, `-` for stdin).
    Verify {
        #[command(flatten)]
        triple: Triple,
        #[arg(long)]
        cert: String,
    },
    /// Validity and basicness of an identity (JSON file, `-` for stdin).
    IdentityCheck { file: String },
    /// Bouquet of lollipops for a product of conjugates.
    VkBouquet(ProductInput),
    /// Fold a bouquet until its boundary is reduced.
    VkFold {
        #[command(flatten)]
        input: ProductInput,
        /// Comma-separated fold positions; default is the canonical order.
        #[arg(long)]
        order: Option<String>,
    },
    /// DOT listing of the folded diagram.
    VkDot {
        #[command(flatten)]
        input: ProductInput,
        #[arg(long)]
        order: Option<String>,
        /// List the bouquet itself.
        #[arg(long)]
        no_fold: bool,
    },
    /// Random instances through every solver and verifier.
    Sweep {
        /// Comma-separated generators.
        #[arg(long, default_value = "x,y")]
        alphabet: String,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Default)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Command echo, inputs, outputs, checks, and optionally time and seed.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub outputs: Value,
    pub verification: Vec<CheckItem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

enum Failure {
    Usage(String),
    Failed(String),
}

struct Done {
    text: String,
    json: Value,
    inputs: BTreeMap<String, String>,
    checks: Vec<CheckItem>,
    seed: Option<u64>,
}

impl Done {
    fn new(text: impl Into<String>, json: Value) -> Done {
        Done { text: text.into(), json, inputs: BTreeMap::new(), checks: Vec::new(), seed: None }
    }

    fn input(mut self, key: &str, value: impl ToString) -> Done {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    fn checks(mut self, report: &VerificationReport) -> Done {
        self.checks = report.items.clone();
        self
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

type Res = Result<Done, Failure>;

fn parse(text: &str) -> Result<Word, Failure> {
    Word::parse(text).map_err(|e| Failure::Usage(format!("cannot parse word {text:?}: {e}")))
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("result types serialize")
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }
}

/// `key=value` pairs of a JSON object, for text output.
fn fields(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, x)| match x {
                Value::String(s) => format!("{k} = {s}"),
                other => format!("{k} = {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => other.to_string(),
    }
}

struct Inputs {
    u: Word,
    v: Word,
    w: Word,
    d: Word,
}

impl Triple {
    fn parse(&self) -> Result<Inputs, Failure> {
        let (u, v, w) = (parse(&self.u)?, parse(&self.v)?, parse(&self.w)?);
        let d = if self.d == "auto" { cyc_product(&u, &v) } else { parse(&self.d)? };
        Ok(Inputs { u, v, w, d })
    }
}

impl Inputs {
    fn record(&self, done: Done) -> Done {
        done.input("u", &self.u).input("v", &self.v).input("w", &self.w).input("d", &self.d)
    }
}

fn theorem_failure(e: TheoremError) -> Failure {
    match e {
        TheoremError::NotACyclicPermutation { .. } => Failure::Usage(e.to_string()),
        TheoremError::SearchExhausted => Failure::Failed(e.to_string()),
    }
}

fn lemma_failure(e: LemmaError) -> Failure {
    match e {
        LemmaError::PreconditionViolated(_) => Failure::Usage(e.to_string()),
        LemmaError::CaseDispatchFailed(_) => Failure::Failed(e.to_string()),
    }
}

fn theorem_text(c: &TheoremCertificate, r: &VerificationReport) -> String {
    let mut t = format!("p = {}\nq = {}\nw' = {}\nf = {}\nh = {}\n", c.p, c.q, c.w_prime, c.f, c.h);
    if let Some(label) = &c.case_label {
        let _ = writeln!(t, "case = {label}");
    }
    let _ = writeln!(t, "identity: {}", c.identity);
    t.push_str(&r.to_string());
    t
}

fn lemma_text(c: &MainLemmaCertificate, r: &VerificationReport) -> String {
    let mut t = format!(
        "p = {}\nq = {}\nw' = {}\nalpha = {}\nbeta = {}\ngamma = {}\nzeta = {}\neta = {}\nside = {}\ncase = {}\n",
        c.p, c.q, c.w_prime, c.alpha, c.beta, c.gamma, c.zeta, c.eta, c.side, c.case_label
    );
    let _ = writeln!(t, "identity: {}", c.identity);
    t.push_str(&r.to_string());
    t
}

fn product(input: &ProductInput) -> Result<ConjugateProduct, Failure> {
    if let Some(path) = &input.product {
        let text = read_source(path)?;
        return serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("product: {e}")));
    }
    let mut terms = Vec::new();
    for t in &input.terms {
        let (a, r) = t.split_once(':').ok_or_else(|| Failure::Usage(format!("term {t:?} is not of the form `a : r`")))?;
        terms.push(ConjugateTerm::new(&parse(a.trim())?, &parse(r.trim())?));
    }
    Ok(ConjugateProduct::new(terms))
}

fn fold_order(order: &Option<String>) -> Result<FoldOrder, Failure> {
    match order {
        None => Ok(FoldOrder::Canonical),
        Some(s) if s.trim().is_empty() => Ok(FoldOrder::Explicit(Vec::new())),
        Some(s) => s
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|e| Failure::Usage(format!("fold position {x:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()
            .map(FoldOrder::Explicit),
    }
}

fn folded(input: &ProductInput, order: &Option<String>) -> Result<(ConjugateProduct, Diagram, Vec<cycword::vankampen::FoldStep>), Failure> {
    let p = product(input)?;
    let (d, steps) = fold_all(&bouquet(&p), &fold_order(order)?).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok((p, d, steps))
}

fn diagram_summary(d: &Diagram) -> String {
    format!(
        "boundary = {}\nvertices = {}\nedges = {}\nfaces = {}\neuler = {}\n",
        d.boundary_label(),
        d.vertices.len(),
        d.edges.len(),
        d.faces.len(),
        d.euler_characteristic()
    )
}

fn dispatch(cmd: &Command) -> Res {
    match cmd {
        Command::Reduce { word } => {
            let x = parse(word)?;
            let r = reduce(&x);
            Ok(Done::new(r.to_string(), to_json(&r)).input("word", &x))
        }
        Command::Cycreduce { word } => {
            let x = parse(word)?;
            let (t, c) = cyclically_reduce(&x);
            Ok(Done::new(format!("{c}\nt = {t}"), json!({"t": t, "c": c})).input("word", &x))
        }
        Command::Prod { u, v } => {
            let (u, v) = (parse(u)?, parse(v)?);
            let r = reduced_product(&u, &v);
            Ok(Done::new(r.to_string(), to_json(&r)).input("u", &u).input("v", &v))
        }
        Command::Cycprod { u, v } => {
            let (u, v) = (parse(u)?, parse(v)?);
            let r = cyc_product(&u, &v);
            Ok(Done::new(r.to_string(), to_json(&r)).input("u", &u).input("v", &v))
        }
        Command::Perms { word } => {
            let x = parse(word)?;
            let rots: Vec<Word> = cyclic_permutations(&x).into_iter().map(|(_, r)| r).collect();
            let text = rots.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
            Ok(Done::new(text, to_json(&rots)).input("word", &x))
        }
        Command::Levi { u1, u2, v1, v2 } => {
            let (a, b, c, d) = (parse(u1)?, parse(u2)?, parse(v1)?, parse(v2)?);
            let s = levi_solve(&a, &b, &c, &d).map_err(|e| Failure::Usage(e.to_string()))?;
            let json = to_json(&s);
            Ok(Done::new(fields(&json), json).input("u1", &a).input("u2", &b).input("v1", &c).input("v2", &d))
        }
        Command::Shirv { u, v } => {
            let (u, v) = (parse(u)?, parse(v)?);
            let s = shirv_decompose(&u, &v).map_err(|e| Failure::Usage(e.to_string()))?;
            let json = to_json(&s);
            Ok(Done::new(fields(&json), json).input("u", &u).input("v", &v))
        }
        Command::Shirv4 { u, v, d } => {
            let (u, v) = (parse(u)?, parse(v)?);
            let d = if d == "auto" { cyc_product(&u, &v) } else { parse(d)? };
            let s = shirv4_decompose(&u, &v, &d).map_err(|e| Failure::Usage(e.to_string()))?;
            let json = to_json(&s);
            Ok(Done::new(fields(&json), json).input("u", &u).input("v", &v).input("d", &d))
        }
        Command::SolveTheorem(t) => {
            let i = t.parse()?;
            let c = theorem_solve(&i.u, &i.v, &i.w, &i.d).map_err(theorem_failure)?;
            let r = verify_theorem(&i.u, &i.v, &i.w, &i.d, &c);
            Ok(i.record(Done::new(theorem_text(&c, &r), to_json(&c)).checks(&r)))
        }
        Command::SolveLemma(t) => {
            let i = t.parse()?;
            let c = main_lemma(&i.u, &i.v, &i.w, &i.d).map_err(lemma_failure)?;
            let r = verify_main_lemma(&i.u, &i.v, &i.w, &i.d, &c);
            Ok(i.record(Done::new(lemma_text(&c, &r), to_json(&c)).checks(&r)))
        }
        Command::Exhaustive { triple, max } => {
            let i = triple.parse()?;
            let opts = ExhaustiveOptions { max_results: *max, deadline: None };
            let all = exhaustive_solutions(&i.u, &i.v, &i.w, &i.d, &opts).map_err(theorem_failure)?;
            let mut text = format!("{} certificates\n", all.len());
            for c in &all {
                let _ = writeln!(text, "p = {}, q = {}, w' = {}, f = {}, h = {}", c.p, c.q, c.w_prime, c.f, c.h);
            }
            Ok(i.record(Done::new(text.trim_end(), to_json(&all))))
        }
        Command::Verify { triple, cert } => {
            let i = triple.parse()?;
            let text = read_source(cert)?;
            let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("certificate: {e}")))?;
            let report = if value.get("alpha").is_some() {
                let c: MainLemmaCertificate =
                    serde_json::from_value(value).map_err(|e| Failure::Usage(format!("lemma certificate: {e}")))?;
                verify_main_lemma(&i.u, &i.v, &i.w, &i.d, &c)
            } else {
                let c: TheoremCertificate =
                    serde_json::from_value(value).map_err(|e| Failure::Usage(format!("theorem certificate: {e}")))?;
                verify_theorem(&i.u, &i.v, &i.w, &i.d, &c)
            };
            Ok(i.record(Done::new(report.to_string().trim_end(), to_json(&report)).checks(&report)))
        }
        Command::IdentityCheck { file } => {
            let text = read_source(file)?;
            #[derive(serde::Deserialize)]
            struct Sides {
                lhs: ConjugateProduct,
                rhs: ConjugateProduct,
            }
            let sides: Sides = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("identity: {e}")))?;
            let mut report = VerificationReport::default();
            match Identity::new(sides.lhs, sides.rhs) {
                Ok(id) => {
                    report.push("identity_valid", true, "");
                    let basic = is_basic(&id).unwrap_or(false);
                    let strict = is_strictly_basic(&id).unwrap_or(false);
                    let forms = normal_forms(&id).map(|f| f.len()).unwrap_or(0);
                    let json = json!({"valid": true, "basic": basic, "strictly_basic": strict, "normal_forms": forms});
                    let text = format!("valid = true\nbasic = {basic}\nstrictly_basic = {strict}\nnormal_forms = {forms}");
                    Ok(Done::new(text, json).checks(&report))
                }
                Err(e) => {
                    report.push("identity_valid", false, e.to_string());
                    Ok(Done::new(format!("valid = false\n{e}"), json!({"valid": false, "error": e.to_string()})).checks(&report))
                }
            }
        }
        Command::VkBouquet(input) => {
            let p = product(input)?;
            let d = bouquet(&p);
            Ok(Done::new(diagram_summary(&d).trim_end(), to_json(&d)).input("product", &p))
        }
        Command::VkFold { input, order } => {
            let (p, d, steps) = folded(input, order)?;
            let mut text = String::new();
            for s in &steps {
                let _ = writeln!(
                    text,
                    "fold at {}: edges {:?}, discarded {:?}, euler {}",
                    s.position, s.edge_pair, s.discarded_faces, s.euler
                );
            }
            text.push_str(&diagram_summary(&d));
            Ok(Done::new(text.trim_end(), json!({"diagram": d, "steps": steps})).input("product", &p))
        }
        Command::VkDot { input, order, no_fold } => {
            let (p, d) = if *no_fold {
                let p = product(input)?;
                let d = bouquet(&p);
                (p, d)
            } else {
                let (p, d, _) = folded(input, order)?;
                (p, d)
            };
            let dot = d.to_dot();
            Ok(Done::new(dot.trim_end(), json!({"dot": dot})).input("product", &p))
        }
        Command::Sweep { alphabet, max_len, count, seed } => sweep(alphabet, *max_len, *count, *seed),
    }
}

fn random_reduced(rng: &mut ChaCha8Rng, gens: &[String], max_len: usize) -> Word {
    let n = rng.gen_range(1..=max_len.max(1));
    let mut letters: Vec<Letter> = Vec::with_capacity(n);
    while letters.len() < n {
        let g = &gens[rng.gen_range(0..gens.len())];
        let l = Letter::new(g, if rng.gen() { 1 } else { -1 });
        if letters.last().is_some_and(|e| e.cancels(l)) {
            continue;
        }
        letters.push(l);
    }
    Word::from_letters(letters)
}

#[derive(Default)]
struct Tally {
    names: Vec<&'static str>,
    runs: BTreeMap<&'static str, (usize, usize)>,
    counterexamples: Vec<String>,
}

impl Tally {
    fn record(&mut self, name: &'static str, ok: bool, what: impl FnOnce() -> String) {
        if !self.names.contains(&name) {
            self.names.push(name);
        }
        let e = self.runs.entry(name).or_default();
        e.0 += 1;
        if !ok {
            e.1 += 1;
            if self.counterexamples.len() < 20 {
                self.counterexamples.push(format!("{name}: {}", what()));
            }
        }
    }
}

fn sweep(alphabet: &str, max_len: usize, count: usize, seed: u64) -> Res {
    let gens: Vec<String> = alphabet.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    if gens.is_empty() {
        return Err(Failure::Usage("empty alphabet".into()));
    }
    for g in &gens {
        if Word::parse(g).map(|x| x.len() != 1 || x.letters()[0].sign() != 1).unwrap_or(true) {
            return Err(Failure::Usage(format!("{g:?} is not a generator name")));
        }
    }
    if max_len == 0 {
        return Err(Failure::Usage("--max-len must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for _ in 0..count {
        let (u, v, w) = (
            random_reduced(&mut rng, &gens, max_len),
            random_reduced(&mut rng, &gens, max_len),
            random_reduced(&mut rng, &gens, max_len),
        );
        let uv = cyc_product(&u, &v);
        let d = rotate(&uv, rng.gen_range(0..uv.len().max(1)));
        let at = || format!("u = {u}, v = {v}, w = {w}, d = {d}");
        t.record("print_round_trip", Word::parse(&u.to_string()).as_ref() == Ok(&u), at);
        t.record("rotation_of_swapped_product", is_cyclic_permutation(&uv, &cyc_product(&v, &u)).is_some(), at);
        t.record("product_of_reductions", uv == cyc_product(&reduce(&u), &reduce(&v)), at);
        let cert = theorem_solve(&u, &v, &w, &d);
        let theorem_ok = match &cert {
            Ok(c) => verify_theorem(&u, &v, &w, &d, c).all_passed(),
            Err(_) => false,
        };
        t.record("theorem", theorem_ok, at);
        if !d.is_empty() {
            let ok = main_lemma(&u, &v, &w, &d).is_ok_and(|c| verify_main_lemma(&u, &v, &w, &d, &c).all_passed());
            t.record("lemma", ok, at);
        }
        if u.len() + v.len() + w.len() <= 9 {
            if let Ok(c) = &cert {
                let all = exhaustive_solutions(&u, &v, &w, &d, &ExhaustiveOptions::default()).unwrap_or_default();
                let twin = all.iter().find(|x| x.key() == c.key());
                let ok = twin.is_some_and(|x| {
                    verify_theorem(&u, &v, &w, &d, x).verdicts() == verify_theorem(&u, &v, &w, &d, c).verdicts()
                });
                t.record("exhaustive_agrees", ok, at);
            }
        }
        let dw = cyc_product(&d, &w);
        let equivalent =
            cert.is_ok_and(|c| are_cyclic_permutations(&dw, &cyc_product(&c.p, &reduce(&concat_all(&[&c.h, &c.f, &inverse(&c.h)])))));
        t.record("theorem_equivalence", equivalent, at);
    }
    let mut report = VerificationReport::default();
    let mut text = format!("sweep: {count} instances, alphabet {}, max length {max_len}, seed {seed}\n", gens.join(","));
    for name in &t.names {
        let (n, bad) = t.runs[name];
        report.push(name, bad == 0, format!("{} of {n} passed", n - bad));
    }
    text.push_str(&report.to_string());
    for c in &t.counterexamples {
        let _ = writeln!(text, "counterexample {c}");
    }
    let json = json!({"instances": count, "counterexamples": t.counterexamples});
    let mut done = Done::new(text.trim_end(), json)
        .input("alphabet", gens.join(","))
        .input("max_len", max_len)
        .input("count", count)
        .checks(&report);
    done.seed = Some(seed);
    Ok(done)
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Reduce { .. } => "reduce",
        Command::Cycreduce { .. } => "cycreduce",
        Command::Prod { .. } => "prod",
        Command::Cycprod { .. } => "cycprod",
        Command::Perms { .. } => "perms",
        Command::Levi { .. } => "levi",
        Command::Shirv { .. } => "shirv",
        Command::Shirv4 { .. } => "shirv4",
        Command::SolveTheorem(_) => "solve-theorem",
        Command::SolveLemma(_) => "solve-lemma",
        Command::Exhaustive { .. } => "exhaustive",
        Command::Verify { .. } => "verify",
        Command::IdentityCheck { .. } => "identity-check",
        Command::VkBouquet(_) => "vk-bouquet",
        Command::VkFold { .. } => "vk-fold",
        Command::VkDot { .. } => "vk-dot",
        Command::Sweep { .. } => "sweep",
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let start = Instant::now();
    match dispatch(&cli.command) {
        Err(Failure::Usage(msg)) => Output { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Failed(msg)) => Output { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Ok(done) => {
            let code = if done.passed() { 0 } else { 1 };
            let stdout = if cli.report {
                let report = RunReport {
                    command: command_name(&cli.command).to_string(),
                    inputs: done.inputs,
                    outputs: done.json,
                    verification: done.checks,
                    elapsed_ms: cli.timing.then(|| start.elapsed().as_secs_f64() * 1000.0),
                    seed: done.seed,
                };
                serde_json::to_string_pretty(&report).expect("report serializes")
            } else if cli.json {
                serde_json::to_string_pretty(&done.json).expect("value serializes")
            } else {
                done.text.trim_end().to_string()
            };
            Output { code, stdout: format!("{stdout}\n"), stderr: String::new() }
        }
    }
}
