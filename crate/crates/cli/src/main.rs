//! locus: batch front end over the localization toolkit.
//!
//! One JSON document per invocation arrives on standard input (or through
//! `--file`); one result document leaves on standard output. Diagnostics
//! and timing go to standard error so identical inputs produce
//! byte-identical outputs.
//!
//! Exit codes: 0 success; 2 parse/validation error; 3 when `--strict` is
//! set and any result carries a status other than `exact`; 4 internal
//! invariant violation.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use locus_core::finite::{self, FiniteRing};
use locus_core::localization::{self, QaOutcome};
use locus_core::modgb::VecPoly;
use locus_core::module::{self, ModulePresentation};
use locus_core::parse::parse_polynomial;
use locus_core::product::{
    self, CompValue, ComponentSpec, FilterOnIndexSet, ProductElement, ProductRing,
};
use locus_core::{Error, FieldSpec, Ideal, MonomialOrder, MultSetSpec, RingPresentation, Status};

#[derive(Parser)]
#[command(name = "locus", about = "exact localization computations", version)]
struct Cli {
    /// Read the input document from a file instead of standard input.
    #[arg(long, global = true)]
    file: Option<std::path::PathBuf>,
    /// Exit with code 3 if any result is not certified exact.
    #[arg(long, global = true)]
    strict: bool,
    /// Monomial order used to render result ideals.
    #[arg(long, global = true, default_value = "grevlex")]
    order: String,
    /// Order cap for finite-ring enumeration.
    #[arg(long, global = true, default_value_t = 64)]
    cap: usize,
    /// Scheduling seed for batch fan-out (output order is unaffected).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for batch documents.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finitely presented commutative algebras.
    Ring {
        #[command(subcommand)]
        op: RingOp,
    },
    /// Finite commutative rings given by tables.
    Finite {
        #[command(subcommand)]
        op: FiniteOp,
    },
    /// Finite direct products of fields, matrix rings and formal division rings.
    Product {
        #[command(subcommand)]
        op: ProductOp,
    },
    /// Finitely presented modules.
    Module {
        #[command(subcommand)]
        op: ModuleOp,
    },
    /// Run a list of tasks, output order fixed by input order.
    Batch,
}

#[derive(Subcommand, Clone, Copy)]
enum RingOp {
    /// Associated ideal of a multiplicative set.
    Ass,
    /// Ascending colon chain with its stabilization step.
    Chain,
    /// Adjoined-inverse localization presentation.
    Localize,
    /// Kernel of the canonical map, by eliminating the inverse variables.
    Kernel,
    /// Classify an element (unit / completely localizable / localizable / non-localizable).
    Classify,
    /// Maximal localizable sets as prime complements.
    Maxsets,
    /// Localization radical and the associated ideal of the completely localizable set.
    Lrad,
    /// Complete quotient ring: one local factor per minimal prime.
    Qc,
    /// Absolute quotient ring decision.
    Qa,
    /// R-isomorphism test between two localizations.
    Iso,
    /// Existence of a canonical map between two localizations.
    Hom,
    /// Membership in the largest multiplicative set with the same localization.
    Satmember,
}

#[derive(Subcommand, Clone, Copy)]
enum FiniteOp {
    /// Build and validate a finite commutative ring.
    Build,
    /// Exhaustive survey with per-claim verification.
    Survey,
    /// Compare the symbolic pipeline against the table pipeline on GF(p)[x]/(f).
    Crosscheck,
}

#[derive(Subcommand, Clone, Copy)]
enum ProductOp {
    /// Saturate an explicit multiplicative set.
    Sat,
    /// Validate a filter, or enumerate the ultrafilters of an index set.
    Filters,
    /// Associated ideal and localization of a product at a set of elements.
    Localize,
    /// Maximal localizable sets, one per component.
    Maxsets,
    /// The product-theory verification suite.
    Suite,
}

#[derive(Subcommand, Clone, Copy)]
enum ModuleOp {
    /// Torsion submodule at a multiplicative set.
    Torsion,
    /// Localize the module presentation.
    Localize,
    /// Exactness condition and independent injectivity computation.
    Exactness,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = std::time::Instant::now();

    let input = match read_input(&cli.file) {
        Ok(s) => s,
        Err(e) => return fail(2, &format!("cannot read input: {e}")),
    };
    let doc: Value = match serde_json::from_str(&input) {
        Ok(v) => v,
        Err(e) => return fail(2, &format!("invalid JSON: {e}")),
    };

    let order = match cli.order.as_str() {
        "grevlex" => MonomialOrder::GrevLex,
        "lex" => MonomialOrder::Lex,
        other => return fail(2, &format!("unknown order '{other}'")),
    };
    let ctx = Ctx {
        order,
        cap: cli.cap,
    };

    let outcome = match &cli.command {
        Command::Batch => run_batch(&ctx, &doc, cli.threads, cli.seed),
        other => {
            let op_name = op_name(other);
            run_task(&ctx, op_name, &doc).map(|r| vec![r])
        }
    };

    eprintln!("elapsed: {:?}", start.elapsed());
    match outcome {
        Ok(results) => {
            let mut worst = Status::Exact;
            for r in &results {
                println!("{}", serde_json::to_string(&r.document).unwrap());
                worst = worst.merge(r.status);
            }
            if cli.strict && worst != Status::Exact {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Error::Internal(msg)) => fail(4, &format!("internal invariant violated: {msg}")),
        Err(e) => fail(2, &format!("{e}")),
    }
}

fn fail(code: u8, msg: &str) -> ExitCode {
    eprintln!("locus: {msg}");
    ExitCode::from(code)
}

fn read_input(file: &Option<std::path::PathBuf>) -> std::io::Result<String> {
    match file {
        Some(path) => std::fs::read_to_string(path),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn op_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Ring { op } => match op {
            RingOp::Ass => "ring.ass",
            RingOp::Chain => "ring.chain",
            RingOp::Localize => "ring.localize",
            RingOp::Kernel => "ring.kernel",
            RingOp::Classify => "ring.classify",
            RingOp::Maxsets => "ring.maxsets",
            RingOp::Lrad => "ring.lrad",
            RingOp::Qc => "ring.qc",
            RingOp::Qa => "ring.qa",
            RingOp::Iso => "ring.iso",
            RingOp::Hom => "ring.hom",
            RingOp::Satmember => "ring.satmember",
        },
        Command::Finite { op } => match op {
            FiniteOp::Build => "finite.build",
            FiniteOp::Survey => "finite.survey",
            FiniteOp::Crosscheck => "finite.crosscheck",
        },
        Command::Product { op } => match op {
            ProductOp::Sat => "product.sat",
            ProductOp::Filters => "product.filters",
            ProductOp::Localize => "product.localize",
            ProductOp::Maxsets => "product.maxsets",
            ProductOp::Suite => "product.suite",
        },
        Command::Module { op } => match op {
            ModuleOp::Torsion => "module.torsion",
            ModuleOp::Localize => "module.localize",
            ModuleOp::Exactness => "module.exactness",
        },
        Command::Batch => "batch",
    }
}

struct Ctx {
    order: MonomialOrder,
    cap: usize,
}

struct TaskResult {
    document: Value,
    status: Status,
}

fn run_batch(ctx: &Ctx, doc: &Value, threads: usize, seed: u64) -> Result<Vec<TaskResult>, Error> {
    let tasks = doc
        .get("tasks")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Input("batch document needs a 'tasks' array".into()))?;
    let items: Vec<(usize, String, Value)> = tasks
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let op = t
                .get("op")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Input(format!("task {i} is missing 'op'")))?;
            Ok((i, op.to_string(), t.clone()))
        })
        .collect::<Result<_, Error>>()?;

    // the seed shuffles only the submission order; results are re-collected
    // by index, so output bytes never depend on the schedule
    let mut order: Vec<usize> = (0..items.len()).collect();
    let mut state = seed.wrapping_add(0x9e3779b97f4a7c15);
    for i in (1..order.len()).rev() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        order.swap(i, (state % (i as u64 + 1)) as usize);
    }

    let run_one = |&(idx, ref op, ref payload): &(usize, String, Value)| -> Result<(usize, TaskResult), Error> {
        let r = run_task(ctx, op, payload)?;
        Ok((idx, r))
    };

    let mut collected: Vec<Option<TaskResult>> = (0..items.len()).map(|_| None).collect();
    if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Input(format!("thread pool: {e}")))?;
        let shuffled: Vec<&(usize, String, Value)> = order.iter().map(|&i| &items[i]).collect();
        let results: Vec<Result<(usize, TaskResult), Error>> = pool.install(|| {
            use rayon::prelude::*;
            shuffled.par_iter().map(|item| run_one(item)).collect()
        });
        for r in results {
            let (idx, task) = r?;
            collected[idx] = Some(task);
        }
    } else {
        for &i in &order {
            let (idx, task) = run_one(&items[i])?;
            collected[idx] = Some(task);
        }
    }
    Ok(collected.into_iter().map(|r| r.unwrap()).collect())
}

fn run_task(ctx: &Ctx, op: &str, doc: &Value) -> Result<TaskResult, Error> {
    let (value, status) = dispatch(ctx, op, doc)?;
    let mut out = Map::new();
    out.insert("op".into(), Value::String(op.to_string()));
    out.insert("status".into(), Value::String(status.as_str().to_string()));
    out.insert("value".into(), value);
    Ok(TaskResult {
        document: Value::Object(out),
        status,
    })
}

fn dispatch(ctx: &Ctx, op: &str, doc: &Value) -> Result<(Value, Status), Error> {
    match op {
        "ring.ass" => {
            let ring = parse_ring(doc)?;
            let set = parse_multset(doc, &ring, "multset")?;
            let ideal = localization::ass_set(&ring, &set)?;
            Ok((
                json!({ "ideal": render_ideal(ctx, &ring, &ideal) }),
                Status::Exact,
            ))
        }
        "ring.chain" => {
            let ring = parse_ring(doc)?;
            let set = parse_multset(doc, &ring, "multset")?;
            let (ideal, step) = localization::chain_ideal(&ring, &set)?;
            Ok((
                json!({
                    "ideal": render_ideal(ctx, &ring, &ideal),
                    "stabilization_step": step,
                }),
                Status::Exact,
            ))
        }
        "ring.localize" => {
            let ring = parse_ring(doc)?;
            let set = parse_multset(doc, &ring, "multset")?;
            let pres = localization::localize_presentation(&ring, &set)?;
            Ok((
                json!({
                    "vars": pres.extended.vars(),
                    "ideal": render_ideal(ctx, &pres.extended, pres.extended.ideal()),
                    "inverse_vars": pres.inverse_vars,
                    "zero_ring": pres.zero_ring,
                }),
                Status::Exact,
            ))
        }
        "ring.kernel" => {
            let ring = parse_ring(doc)?;
            let set = parse_multset(doc, &ring, "multset")?;
            let pres = localization::localize_presentation(&ring, &set)?;
            let kernel = localization::kernel_of_sigma(&pres);
            Ok((
                json!({ "ideal": render_ideal(ctx, &ring, &kernel) }),
                Status::Exact,
            ))
        }
        "ring.classify" => {
            let ring = parse_ring(doc)?;
            let elem = parse_element(doc, &ring)?;
            let tagged = localization::classify_element(&ring, &elem)?;
            Ok((
                json!({
                    "class": tagged.value.as_str(),
                    "certificate": tagged.certificate,
                }),
                tagged.status,
            ))
        }
        "ring.maxsets" => {
            let ring = parse_ring(doc)?;
            let tagged = localization::max_localizable_sets(&ring)?;
            let sets: Vec<Value> = tagged
                .value
                .iter()
                .map(|s| match s {
                    MultSetSpec::PrimeComplement(p) => {
                        json!({ "prime_complement": render_ideal(ctx, &ring, p) })
                    }
                    MultSetSpec::Gens(_) => unreachable!("maxsets are prime complements"),
                })
                .collect();
            Ok((json!({ "sets": sets }), tagged.status))
        }
        "ring.lrad" => {
            let ring = parse_ring(doc)?;
            let lr = localization::localization_radical(&ring)?;
            Ok((
                json!({
                    "lrad": render_ideal(ctx, &ring, &lr.lrad),
                    "c_ideal": render_ideal(ctx, &ring, &lr.c_ideal),
                    "certificate": lr.certificate,
                }),
                lr.status,
            ))
        }
        "ring.qc" => {
            let ring = parse_ring(doc)?;
            let factors = localization::q_c(&ring, 64)?;
            let mut status = Status::Exact;
            let rendered: Vec<Value> = factors
                .iter()
                .map(|f| {
                    status = status.merge(f.ass.status);
                    json!({
                        "prime": render_ideal(ctx, &ring, &f.prime),
                        "ass": render_ideal(ctx, &ring, &f.ass.value),
                    })
                })
                .collect();
            Ok((json!({ "factors": rendered }), status))
        }
        "ring.qa" => {
            let ring = parse_ring(doc)?;
            match localization::q_a(&ring)? {
                QaOutcome::Ring(factor) => Ok((
                    json!({
                        "kind": "ring",
                        "prime": render_ideal(ctx, &ring, &factor.prime),
                        "ass": render_ideal(ctx, &ring, &factor.ass.value),
                    }),
                    factor.ass.status,
                )),
                QaOutcome::ZeroRing { witnesses } => {
                    let (a, b) = *witnesses;
                    let render = |s: &MultSetSpec| match s {
                        MultSetSpec::PrimeComplement(p) => {
                            json!({ "prime_complement": render_ideal(ctx, &ring, p) })
                        }
                        MultSetSpec::Gens(_) => unreachable!(),
                    };
                    Ok((
                        json!({
                            "kind": "zero",
                            "witnesses": [render(&a), render(&b)],
                        }),
                        Status::Exact,
                    ))
                }
            }
        }
        "ring.iso" | "ring.hom" => {
            let ring = parse_ring(doc)?;
            let s = parse_multset(doc, &ring, "s")?;
            let t = parse_multset(doc, &ring, "t")?;
            if op == "ring.iso" {
                let holds = localization::localization_iso(&ring, &s, &t)?;
                Ok((json!({ "iso": holds }), Status::Exact))
            } else {
                let forward = localization::hom_exists(&ring, &s, &t)?;
                let backward = localization::hom_exists(&ring, &t, &s)?;
                Ok((
                    json!({ "forward": forward, "backward": backward }),
                    Status::Exact,
                ))
            }
        }
        "ring.satmember" => {
            let ring = parse_ring(doc)?;
            let set = parse_multset(doc, &ring, "multset")?;
            let elem = parse_element(doc, &ring)?;
            let member = localization::in_largest_multset(&ring, &set, &elem)?;
            Ok((json!({ "member": member }), Status::Exact))
        }
        "finite.build" => {
            let ring = parse_finite(doc.get("finite").unwrap_or(doc))?;
            let n = ring.order();
            let add: Vec<Vec<u16>> = (0..n as u16)
                .map(|a| (0..n as u16).map(|b| ring.add(a, b)).collect())
                .collect();
            let mul: Vec<Vec<u16>> = (0..n as u16)
                .map(|a| (0..n as u16).map(|b| ring.mul(a, b)).collect())
                .collect();
            Ok((
                json!({
                    "order": n,
                    "zero": ring.zero(),
                    "one": ring.one(),
                    "units": finite::mask_elements(ring.units_mask()),
                    "nilpotents": finite::mask_elements(ring.nilpotents_mask()),
                    "add": add,
                    "mul": mul,
                }),
                Status::Exact,
            ))
        }
        "finite.survey" => {
            let ring = parse_finite(doc.get("finite").unwrap_or(doc))?;
            let s = finite::survey(&ring, ctx.cap)?;
            let clauses: Vec<Value> = s
                .clauses
                .iter()
                .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
                .collect();
            Ok((
                json!({
                    "order": s.order,
                    "localizable_monoid_count": s.localizable_monoids.len(),
                    "max_localizable_sets": s.max_localizable.iter().map(|&m| finite::mask_elements(m)).collect::<Vec<_>>(),
                    "minimal_primes": s.minimal_primes.iter().map(|&m| finite::mask_elements(m)).collect::<Vec<_>>(),
                    "nilpotents": finite::mask_elements(s.nilpotents),
                    "localizable_elements": finite::mask_elements(s.localizable_elements),
                    "completely_localizable": finite::mask_elements(s.completely_localizable),
                    "lrad": finite::mask_elements(s.lrad),
                    "c_ideal": finite::mask_elements(s.c_ideal),
                    "qc_order": s.qc_order,
                    "qa_order": s.qa_order,
                    "clauses": clauses,
                }),
                s.status(),
            ))
        }
        "finite.crosscheck" => {
            let gf = doc
                .get("gfpoly")
                .ok_or_else(|| Error::Input("crosscheck needs a 'gfpoly' document".into()))?;
            let p = gf
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Input("gfpoly needs a prime 'p'".into()))?;
            let f = gf
                .get("f")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Input("gfpoly needs a modulus 'f'".into()))?;
            let rep = finite::crosscheck::run(p as u32, f)?;
            Ok((
                json!({
                    "instances": rep.instances,
                    "mismatches": rep.mismatches,
                    "pass": rep.all_pass(),
                }),
                if rep.all_pass() {
                    Status::Exact
                } else {
                    Status::Unverified
                },
            ))
        }
        "product.sat" => {
            let ring = parse_product(doc)?;
            let elements = parse_product_elements(doc, &ring)?;
            let sat = product::saturate_multset(&ring, &elements)?;
            let members = if ring.is_enumerable() {
                Some(sat.members(&ring)?)
            } else {
                None
            };
            Ok((
                json!({
                    "filter": render_filter(&sat.filter),
                    "member_count": members.as_ref().map(|m| m.len()),
                    "members": members,
                }),
                Status::Exact,
            ))
        }
        "product.filters" => {
            let indices = doc
                .get("indices")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Input("filters document needs 'indices'".into()))?
                as usize;
            match doc.get("family") {
                Some(fam) => {
                    let family = parse_family(fam, indices)?;
                    let f = FilterOnIndexSet::new(indices, family)?;
                    Ok((
                        json!({
                            "is_filter": f.is_filter(),
                            "is_ultrafilter": f.is_ultrafilter(),
                            "principal_witness": f.principal_witness(),
                        }),
                        Status::Exact,
                    ))
                }
                None => {
                    let ultras = product::enumerate_ultrafilters(indices)?;
                    Ok((
                        json!({
                            "ultrafilters": ultras.iter().map(render_filter).collect::<Vec<_>>(),
                        }),
                        Status::Exact,
                    ))
                }
            }
        }
        "product.localize" => {
            let ring = parse_product(doc)?;
            let elements = parse_product_elements(doc, &ring)?;
            let loc = product::ass_and_localize(&ring, &elements)?;
            let dead: Vec<usize> = (0..ring.len())
                .filter(|&i| loc.dead & (1 << i) != 0)
                .collect();
            Ok((
                json!({
                    "ass_components": dead,
                    "zero_ring": loc.localization.is_none(),
                    "components": loc.localization.as_ref().map(|l| render_components(l.components())),
                }),
                Status::Exact,
            ))
        }
        "product.maxsets" => {
            let ring = parse_product(doc)?;
            let sets = product::max_localizable_product(&ring);
            Ok((
                json!({
                    "sets": sets.iter().map(|d| json!({ "index": d.index, "size": d.size })).collect::<Vec<_>>(),
                }),
                Status::Exact,
            ))
        }
        "product.suite" => {
            let ring = parse_product(doc)?;
            let suite = product::product_theory_suite(&ring)?;
            let clauses: Vec<Value> = suite
                .clauses
                .iter()
                .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
                .collect();
            Ok((
                json!({
                    "max_sets": suite.max_sets.iter().map(|d| json!({ "index": d.index, "size": d.size })).collect::<Vec<_>>(),
                    "completely_localizable_count": suite.completely_localizable_count,
                    "filter_count": suite.filter_count,
                    "clauses": clauses,
                }),
                if suite.all_pass() {
                    Status::Exact
                } else {
                    Status::Unverified
                },
            ))
        }
        "module.torsion" => {
            let (module, set) = parse_module(doc)?;
            let t = module::torsion_submodule(&module, &set)?;
            Ok((
                json!({
                    "generators": render_vectors(&module.ring, &t.generators),
                    "zero_ring": t.zero_ring,
                }),
                Status::Exact,
            ))
        }
        "module.localize" => {
            let (module, set) = parse_module(doc)?;
            let l = module::localize_module(&module, &set)?;
            Ok((
                json!({
                    "vars": l.presentation.extended.vars(),
                    "ideal": render_ideal(ctx, &l.presentation.extended, l.presentation.extended.ideal()),
                    "relations": render_vectors(&l.presentation.extended, &l.relations),
                    "zero_module": l.is_zero_module,
                }),
                Status::Exact,
            ))
        }
        "module.exactness" => {
            let ring = parse_ring(doc)?;
            let rank = doc
                .get("rank")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Input("exactness document needs 'rank'".into()))?
                as usize;
            let m1 = parse_vectors(doc, "m1", &ring, rank)?;
            let m2 = parse_vectors(doc, "m2", &ring, rank)?;
            let set = parse_multset(doc, &ring, "multset")?;
            let (condition, direct) = module::exactness_check(&ring, rank, &m1, &m2, &set)?;
            Ok((
                json!({ "condition": condition, "direct": direct }),
                Status::Exact,
            ))
        }
        other => Err(Error::Input(format!("unknown operation '{other}'"))),
    }
}

fn parse_field(v: &Value) -> Result<FieldSpec, Error> {
    match v {
        Value::String(s) if s == "Q" => Ok(FieldSpec::Q),
        Value::Object(map) => {
            let p = map
                .get("Fp")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Input("field must be \"Q\" or {\"Fp\": p}".into()))?;
            FieldSpec::Fp(p as u32).validate()
        }
        _ => Err(Error::Input("field must be \"Q\" or {\"Fp\": p}".into())),
    }
}

fn parse_ring(doc: &Value) -> Result<RingPresentation, Error> {
    let r = doc
        .get("ring")
        .ok_or_else(|| Error::Input("document needs a 'ring'".into()))?;
    let field = parse_field(
        r.get("field")
            .ok_or_else(|| Error::Input("ring needs a 'field'".into()))?,
    )?;
    let vars: Vec<String> = r
        .get("vars")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Input("ring needs 'vars'".into()))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Input("variable names must be strings".into()))
        })
        .collect::<Result<_, _>>()?;
    let gens: Vec<String> = match r.get("ideal") {
        None => Vec::new(),
        Some(v) => v
            .as_array()
            .ok_or_else(|| Error::Input("'ideal' must be a list of strings".into()))?
            .iter()
            .map(|g| {
                g.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::Input("ideal generators must be strings".into()))
            })
            .collect::<Result<_, _>>()?,
    };
    let polys = gens
        .iter()
        .map(|g| parse_polynomial(g, field, &vars))
        .collect::<Result<Vec<_>, _>>()?;
    let n = vars.len();
    RingPresentation::new(field, vars, Ideal::new(field, n, polys))
}

fn parse_multset(doc: &Value, ring: &RingPresentation, key: &str) -> Result<MultSetSpec, Error> {
    let m = doc
        .get(key)
        .ok_or_else(|| Error::Input(format!("document needs a '{key}' multiplicative set")))?;
    if let Some(gens) = m.get("gens") {
        let list = gens
            .as_array()
            .ok_or_else(|| Error::Input("'gens' must be a list of strings".into()))?;
        let polys = list
            .iter()
            .map(|g| {
                let s = g
                    .as_str()
                    .ok_or_else(|| Error::Input("generators must be strings".into()))?;
                ring.poly(s)
            })
            .collect::<Result<Vec<_>, _>>()?;
        return MultSetSpec::gens(polys);
    }
    if let Some(pc) = m.get("prime_complement") {
        let list = pc
            .as_array()
            .ok_or_else(|| Error::Input("'prime_complement' must be a list of strings".into()))?;
        let polys = list
            .iter()
            .map(|g| {
                let s = g
                    .as_str()
                    .ok_or_else(|| Error::Input("generators must be strings".into()))?;
                ring.poly(s)
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(MultSetSpec::PrimeComplement(Ideal::new(
            ring.field(),
            ring.nvars(),
            polys,
        )));
    }
    Err(Error::Input(
        "multiplicative set needs 'gens' or 'prime_complement'".into(),
    ))
}

fn parse_element(doc: &Value, ring: &RingPresentation) -> Result<locus_core::Polynomial, Error> {
    let e = doc
        .get("element")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Input("document needs an 'element' string".into()))?;
    ring.poly(e)
}

fn parse_finite(spec: &Value) -> Result<FiniteRing, Error> {
    if let Some(n) = spec.get("cyclic").and_then(Value::as_u64) {
        return FiniteRing::cyclic(n as usize);
    }
    if let Some(gf) = spec.get("gfpoly") {
        let p = gf
            .get("p")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Input("gfpoly needs 'p'".into()))? as u32;
        let f_src = gf
            .get("f")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Input("gfpoly needs 'f'".into()))?;
        let vars = vec!["x".to_string()];
        let f = parse_polynomial(f_src, FieldSpec::Fp(p), &vars)?;
        let d = f.degree_in(0) as usize;
        if d == 0 {
            return Err(Error::Input("modulus must have positive degree".into()));
        }
        let mut coeffs = vec![0u64; d + 1];
        for (m, c) in f.terms() {
            if let locus_core::Scalar::Fp { val, .. } = c {
                coeffs[m.exp(0) as usize] = *val;
            }
        }
        return FiniteRing::gf_poly(p, &coeffs);
    }
    if let Some(parts) = spec.get("product").and_then(Value::as_array) {
        let factors = parts
            .iter()
            .map(parse_finite)
            .collect::<Result<Vec<_>, _>>()?;
        return FiniteRing::product(&factors);
    }
    if let Some(tables) = spec.get("tables") {
        let n = tables
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Input("tables need 'n'".into()))? as usize;
        let grab = |key: &str| -> Result<Vec<u16>, Error> {
            let rows = tables
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Input(format!("tables need '{key}'")))?;
            let mut out = Vec::with_capacity(n * n);
            for row in rows {
                for cell in row
                    .as_array()
                    .ok_or_else(|| Error::Input("table rows must be arrays".into()))?
                {
                    out.push(
                        cell.as_u64()
                            .ok_or_else(|| Error::Input("table cells must be integers".into()))?
                            as u16,
                    );
                }
            }
            Ok(out)
        };
        let add = grab("add")?;
        let mul = grab("mul")?;
        let zero = tables.get("zero").and_then(Value::as_u64).unwrap_or(0) as u16;
        let one = tables
            .get("one")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Input("tables need 'one'".into()))? as u16;
        return FiniteRing::from_tables(n, add, mul, zero, one);
    }
    Err(Error::Input(
        "finite ring needs 'cyclic', 'gfpoly', 'product' or 'tables'".into(),
    ))
}

fn parse_product(doc: &Value) -> Result<ProductRing, Error> {
    let p = doc
        .get("product")
        .ok_or_else(|| Error::Input("document needs a 'product'".into()))?;
    let comps = p
        .get("components")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Input("product needs 'components'".into()))?;
    let specs = comps
        .iter()
        .map(|c| {
            if let Some(q) = c.get("field").and_then(Value::as_u64) {
                return Ok(ComponentSpec::Field(q as u32));
            }
            if let Some(m) = c.get("matrix").and_then(Value::as_array) {
                if m.len() == 2 {
                    let n = m[0].as_u64().unwrap_or(0) as u32;
                    let q = m[1].as_u64().unwrap_or(0) as u32;
                    return Ok(ComponentSpec::Matrix { n, q });
                }
            }
            if let Some(tag) = c.get("formal").and_then(Value::as_str) {
                return Ok(ComponentSpec::Formal(tag.to_string()));
            }
            Err(Error::Input(
                "component must be {\"field\": q}, {\"matrix\": [n, q]} or {\"formal\": tag}"
                    .into(),
            ))
        })
        .collect::<Result<Vec<_>, _>>()?;
    ProductRing::new(specs)
}

fn parse_product_elements(doc: &Value, ring: &ProductRing) -> Result<Vec<ProductElement>, Error> {
    let list = doc
        .get("elements")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Input("document needs 'elements'".into()))?;
    list.iter()
        .map(|e| {
            let entries = e
                .as_array()
                .ok_or_else(|| Error::Input("each element is a list of component values".into()))?;
            if entries.len() != ring.len() {
                return Err(Error::Input(
                    "element has the wrong number of components".into(),
                ));
            }
            let values = entries
                .iter()
                .zip(ring.components())
                .map(|(v, spec)| match spec {
                    ComponentSpec::Field(_) => v
                        .as_u64()
                        .map(|x| CompValue::Field(x as u32))
                        .ok_or_else(|| Error::Input("field entry must be an integer".into())),
                    ComponentSpec::Matrix { n, .. } => {
                        let rows = v
                            .as_array()
                            .ok_or_else(|| Error::Input("matrix entry must be rows".into()))?;
                        let mut cells = Vec::new();
                        for row in rows {
                            for cell in row
                                .as_array()
                                .ok_or_else(|| Error::Input("matrix rows must be arrays".into()))?
                            {
                                cells.push(cell.as_u64().ok_or_else(|| {
                                    Error::Input("matrix cells must be integers".into())
                                })? as u32);
                            }
                        }
                        if cells.len() != (*n as usize) * (*n as usize) {
                            return Err(Error::Input("matrix shape mismatch".into()));
                        }
                        Ok(CompValue::Matrix(cells))
                    }
                    ComponentSpec::Formal(_) => v
                        .as_bool()
                        .map(|nonzero| CompValue::Formal { nonzero })
                        .ok_or_else(|| {
                            Error::Input("formal entry is a support bit (true/false)".into())
                        }),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(ProductElement { entries: values })
        })
        .collect()
}

fn parse_module(doc: &Value) -> Result<(ModulePresentation, MultSetSpec), Error> {
    let ring = parse_ring(doc)?;
    let m = doc
        .get("module")
        .ok_or_else(|| Error::Input("document needs a 'module'".into()))?;
    let rank = m
        .get("rank")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Input("module needs 'rank'".into()))? as usize;
    let relations = match m.get("relations") {
        None => Vec::new(),
        Some(v) => parse_vector_list(v, &ring, rank)?,
    };
    let set = parse_multset(doc, &ring, "multset")?;
    Ok((ModulePresentation::new(ring, rank, relations)?, set))
}

fn parse_vectors(
    doc: &Value,
    key: &str,
    ring: &RingPresentation,
    rank: usize,
) -> Result<Vec<VecPoly>, Error> {
    let v = doc
        .get(key)
        .ok_or_else(|| Error::Input(format!("document needs '{key}'")))?;
    parse_vector_list(v, ring, rank)
}

fn parse_vector_list(
    v: &Value,
    ring: &RingPresentation,
    rank: usize,
) -> Result<Vec<VecPoly>, Error> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Input("vector list must be an array".into()))?;
    rows.iter()
        .map(|row| {
            let cells = row.as_array().ok_or_else(|| {
                Error::Input("each vector is a list of polynomial strings".into())
            })?;
            if cells.len() != rank {
                return Err(Error::Input(format!(
                    "vector length {} differs from rank {rank}",
                    cells.len()
                )));
            }
            let entries = cells
                .iter()
                .map(|c| {
                    let s = c
                        .as_str()
                        .ok_or_else(|| Error::Input("vector entries must be strings".into()))?;
                    ring.poly(s)
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(VecPoly { entries })
        })
        .collect()
}

fn render_ideal(ctx: &Ctx, ring: &RingPresentation, ideal: &Ideal) -> Vec<String> {
    ideal
        .groebner(&ctx.order)
        .iter()
        .map(|g| g.render_ordered(ring.vars(), &ctx.order))
        .collect()
}

fn render_vectors(ring: &RingPresentation, vectors: &[VecPoly]) -> Vec<Vec<String>> {
    vectors
        .iter()
        .map(|v| v.entries.iter().map(|p| p.render(ring.vars())).collect())
        .collect()
}

fn render_filter(f: &FilterOnIndexSet) -> Vec<Vec<usize>> {
    f.family
        .iter()
        .map(|&mask| (0..f.indices).filter(|&i| mask & (1 << i) != 0).collect())
        .collect()
}

fn render_components(comps: &[ComponentSpec]) -> Vec<Value> {
    comps
        .iter()
        .map(|c| match c {
            ComponentSpec::Field(q) => json!({ "field": q }),
            ComponentSpec::Matrix { n, q } => json!({ "matrix": [n, q] }),
            ComponentSpec::Formal(tag) => json!({ "formal": tag }),
        })
        .collect()
}

fn parse_family(v: &Value, indices: usize) -> Result<Vec<u32>, Error> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Input("'family' must be a list of index subsets".into()))?;
    rows.iter()
        .map(|row| {
            let idxs = row
                .as_array()
                .ok_or_else(|| Error::Input("each subset is a list of indices".into()))?;
            let mut mask = 0u32;
            for i in idxs {
                let i = i
                    .as_u64()
                    .ok_or_else(|| Error::Input("indices must be integers".into()))?
                    as usize;
                if i >= indices {
                    return Err(Error::Input(format!("index {i} out of range")));
                }
                mask |= 1 << i;
            }
            Ok(mask)
        })
        .collect()
}
