use std::fmt::Write as _;
use std::fs;
use std::sync::Arc;
use std::time::Instant;

use anyhow::Context;
use num_bigint::BigInt;
use serde_json::{json, Value};

use langdual::{
    weyl_dimension, BigCharacterTable, BigLanglands, BranchingJson, DatumJson, Error, ModifiedDatum, RootDatum, Routes,
    VerifyOptions, Weight, WeightFunctionJson,
};

use crate::cache::{default_dir, DiskCache};
use crate::render::{height_order, Table};
use crate::{BranchArgs, CharArgs, Command, DatumArgs, DatumCmdArgs, Failure, Format, Method, TensorArgs, VerifyArgs};

pub struct Output {
    pub text: String,
    /// An identity failed; exit code 1.
    pub failed: bool,
}

struct Ctx {
    cache: Option<Arc<DiskCache>>,
    start: Instant,
}

impl Ctx {
    fn new(no_cache: bool) -> Self {
        let cache = if no_cache { None } else { default_dir().map(|d| Arc::new(DiskCache::new(d))) };
        Ctx { cache, start: Instant::now() }
    }

    fn table(&self, datum: &Arc<RootDatum>) -> BigCharacterTable {
        let table = BigCharacterTable::new(datum.clone());
        match &self.cache {
            Some(c) => table.with_store(c.clone()),
            None => table,
        }
    }

    fn langlands(&self, md: ModifiedDatum) -> Result<BigLanglands, Failure> {
        let (base, dual) = (self.table(md.base()), self.table(md.dual()));
        Ok(BigLanglands::with_tables(md, base, dual)?)
    }

    fn manifest(&self, command: &Command) -> Value {
        let params = serde_json::to_value(command).expect("arguments serialize");
        json!({
            "command": params["command"],
            "params": params,
            "version": env!("CARGO_PKG_VERSION"),
            "wall_time_seconds": self.start.elapsed().as_secs_f64(),
            "cache": {
                "enabled": self.cache.is_some(),
                "hits": self.cache.as_ref().map_or(0, |c| c.hits()),
                "misses": self.cache.as_ref().map_or(0, |c| c.misses()),
            },
        })
    }

    fn finish(&self, command: &Command, format: Format, result: Value, text: String, failed: bool) -> Output {
        let text = match format {
            Format::Table => text,
            Format::Json => {
                let doc = json!({ "manifest": self.manifest(command), "result": result });
                serde_json::to_string_pretty(&doc).expect("json") + "\n"
            }
        };
        Output { text, failed }
    }
}

pub fn run(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Char(a) => char_cmd(command, a),
        Command::Tensor(a) => tensor_cmd(command, a),
        Command::Branch(a) => branch_cmd(command, a),
        Command::Verify(a) => verify_cmd(command, a),
        Command::Datum(a) => datum_cmd(command, a),
    }
}

fn read_cartan(path: &std::path::Path) -> Result<Arc<RootDatum>, Failure> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let json: DatumJson =
        serde_json::from_str(&text).with_context(|| format!("parsing {} as a Cartan datum", path.display()))?;
    Ok(RootDatum::new(json.to_datum()?))
}

fn load_datum(args: &DatumArgs) -> Result<Arc<RootDatum>, Failure> {
    match (&args.cartan_type, &args.cartan) {
        (_, Some(path)) => read_cartan(path),
        (Some(t), None) => Ok(RootDatum::of_type(t)?),
        (None, None) => Err(Failure::Usage("give a type such as B2 or --cartan FILE".into())),
    }
}

fn modified(datum: Arc<RootDatum>, ell: Option<i64>) -> Result<ModifiedDatum, Failure> {
    let ell = ell.unwrap_or_else(|| datum.cartan().d());
    Ok(ModifiedDatum::new(datum, ell)?)
}

fn check_rank(datum: &RootDatum, w: &Weight) -> Result<(), Failure> {
    if w.rank() != datum.rank() {
        return Err(Error::RankMismatch { expected: datum.rank(), found: w.rank() }.into());
    }
    Ok(())
}

fn dim(datum: &RootDatum, w: &Weight) -> BigInt {
    weyl_dimension(datum, w).expect("dominant weight of matching rank")
}

fn char_cmd(command: &Command, a: &CharArgs) -> Result<Output, Failure> {
    let ctx = Ctx::new(a.output.no_cache);
    let d = load_datum(&a.datum)?;
    check_rank(&d, &a.weight)?;
    let ch = ctx.table(&d).character(&a.weight)?;
    let total = dim(&d, &a.weight);
    let result = json!({
        "datum": d.name(),
        "highest": a.weight,
        "dimension": total.to_string(),
        "character": WeightFunctionJson::from_function(&ch),
    });
    let mut t = Table::new(&["weight", "mult"]);
    for w in height_order(&d, &a.weight, ch.iter().map(|(w, _)| w)) {
        t.row(vec![w.to_string(), ch.get(w).to_string()]);
    }
    let text = format!("{} λ = {}\n{}\ndim {total}\n", d.name(), a.weight, t.render());
    Ok(ctx.finish(command, a.output.format, result, text, false))
}

fn parse_weight(s: &str) -> Result<Weight, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(format!("weight {s:?}: {e}")))
}

fn tensor_cmd(command: &Command, a: &TensorArgs) -> Result<Output, Failure> {
    let ctx = Ctx::new(a.output.no_cache);
    let (d, weights) = match (&a.cartan, a.args.as_slice()) {
        (Some(path), [w1, w2]) => (read_cartan(path)?, [w1, w2]),
        (None, [t, w1, w2]) => (RootDatum::of_type(t)?, [w1, w2]),
        (Some(_), _) => return Err(Failure::Usage("with --cartan give exactly two weights".into())),
        (None, _) => return Err(Failure::Usage("expected TYPE WEIGHT1 WEIGHT2".into())),
    };
    let lambda = parse_weight(weights[0])?;
    let mu = parse_weight(weights[1])?;
    check_rank(&d, &lambda)?;
    check_rank(&d, &mu)?;
    let product = ctx.table(&d).tensor(&lambda, &mu)?;
    let total = dim(&d, &lambda) * dim(&d, &mu);
    let top = &lambda + &mu;
    let ordered = height_order(&d, &top, product.coefficients().keys());
    let constituents: Vec<Value> = ordered
        .iter()
        .map(|w| json!({ "weight": w, "mult": product.get(w).to_string(), "dim": dim(&d, w).to_string() }))
        .collect();
    let result = json!({
        "datum": d.name(),
        "lambda": lambda,
        "mu": mu,
        "constituents": constituents,
        "dimension": total.to_string(),
    });
    let mut t = Table::new(&["weight", "mult", "dim"]);
    for w in &ordered {
        t.row(vec![w.to_string(), product.get(w).to_string(), dim(&d, w).to_string()]);
    }
    let text = format!("{} {lambda} ⊗ {mu}\n{}\ndim {total}\n", d.name(), t.render());
    Ok(ctx.finish(command, a.output.format, result, text, false))
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "NO",
        None => "n/a",
    }
}

fn branch_cmd(command: &Command, a: &BranchArgs) -> Result<Output, Failure> {
    let ctx = Ctx::new(a.output.no_cache);
    let md = modified(load_datum(&a.datum)?, a.ell)?;
    check_rank(md.base(), &a.weight)?;
    let lang = ctx.langlands(md.clone())?;
    let lambda = &a.weight;
    let routes = match a.method {
        Method::Direct => Routes { direct: true, tensor: false, closed_form: false },
        Method::Tensor => Routes { direct: false, tensor: true, closed_form: false },
        Method::Closed => Routes { direct: false, tensor: false, closed_form: true },
        Method::All => Routes::GENERAL,
    };
    let mut r = lang.branching(lambda, routes)?;
    let mut closed_note = None;
    if a.method == Method::All {
        match lang.closed_form(lambda) {
            Ok(m) => r.closed_form = Some(m),
            Err(Error::ClosedFormUnavailable(why)) => closed_note = Some(why),
            Err(e) => return Err(e.into()),
        }
    }
    let agreement = json!({
        "direct_tensor": r.direct.as_ref().zip(r.via_tensor.as_ref()).map(|(x, y)| x == y),
        "direct_closed": r.direct.as_ref().zip(r.closed_form.as_ref()).map(|(x, y)| x == y),
        "complement": r.complement_agrees,
    });
    let agree = r.routes_agree();
    let mut result = serde_json::to_value(BranchingJson::from_result(&r)).expect("json");
    result["datum"] = json!(md.base().name());
    result["dual"] = json!(md.dual().name());
    result["agreement"] = agreement;
    if let Some(why) = &closed_note {
        result["closed_form_unavailable"] = json!(why);
    }

    let base = md.base();
    let dual = md.dual();
    let top = md.dual_coords(lambda)?;
    let mut text = String::new();
    let l: Vec<String> = md.l().iter().map(|x| x.to_string()).collect();
    writeln!(
        text,
        "{} ℓ = {}  λ = {lambda}  dual {}  l = ({})  ρ^L−ρ = {}",
        base.name(),
        md.ell(),
        dual.name(),
        l.join(","),
        md.rho_shift()
    )
    .unwrap();
    let m = r.m();
    let mut t = Table::new(&["mu", "mult", "dim"]);
    for mu in height_order(dual, &top, m.keys()) {
        t.row(vec![mu.to_string(), m[mu].to_string(), dim(dual, mu).to_string()]);
    }
    writeln!(text, "m (dual weights, dual coordinates)\n{}", t.render()).unwrap();
    let mut t = Table::new(&["nu", "mult", "dim"]);
    let n_top = lambda + &md.rho_shift();
    for nu in height_order(base, &n_top, r.complementary.coefficients().keys()) {
        t.row(vec![nu.to_string(), r.complementary.get(nu).to_string(), dim(base, nu).to_string()]);
    }
    let n_table = if r.complementary.is_empty() { "(none)".to_string() } else { t.render() };
    writeln!(text, "n (complementary constituents)\n{n_table}").unwrap();
    if a.method == Method::All {
        writeln!(text, "direct = tensor: {}", yes_no(agreement_bool(&r.direct, &r.via_tensor))).unwrap();
        match &closed_note {
            None => {
                writeln!(text, "direct = closed form: {}", yes_no(agreement_bool(&r.direct, &r.closed_form))).unwrap()
            }
            Some(why) => writeln!(text, "closed form: not applicable ({why})").unwrap(),
        }
        writeln!(text, "complement routes agree: {}", yes_no(r.complement_agrees)).unwrap();
    }
    writeln!(text, "routes agree: {}", if agree { "yes" } else { "NO" }).unwrap();
    Ok(ctx.finish(command, a.output.format, result, text, !agree))
}

fn agreement_bool<T: PartialEq>(x: &Option<T>, y: &Option<T>) -> Option<bool> {
    x.as_ref().zip(y.as_ref()).map(|(x, y)| x == y)
}

fn verify_cmd(command: &Command, a: &VerifyArgs) -> Result<Output, Failure> {
    let ctx = Ctx::new(a.output.no_cache);
    let md = modified(load_datum(&a.datum)?, a.ell)?;
    if a.bound < 0 {
        return Err(Failure::Usage("--bound must be nonnegative".into()));
    }
    let lang = ctx.langlands(md.clone())?;
    let jobs = a.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let closed = match lang.closed_form(&md.base().zero()) {
        Ok(_) => true,
        Err(Error::ClosedFormUnavailable(_)) => false,
        Err(e) => return Err(e.into()),
    };
    let describe = |r: Result<String, Error>| match r {
        Ok(s) => (true, s),
        Err(e) => (false, e.to_string()),
    };
    let (product_ok, product_msg) = describe(lang.rho_shift_product().map(|p| format!("ok ({} weights)", p.len())));
    let (scaling_ok, scaling_msg) = describe(md.root_scaling_map().map(|m| format!("ok ({} positive roots)", m.len())));
    let report = lang.verify(&VerifyOptions { bound: a.bound, jobs, steinberg: true, closed_form: closed })?;
    let failed = !report.all_passed() || !product_ok || !scaling_ok;

    let failures: Vec<Value> =
        report.failures().map(|c| json!({ "lambda": c.lambda, "messages": c.failures })).collect();
    let result = json!({
        "datum": report.datum,
        "dual": md.dual().name(),
        "ell": report.ell,
        "bound": report.bound,
        "checked": report.checked,
        "passed": report.passed,
        "max_dimension": report.max_dimension.to_string(),
        "steinberg": true,
        "closed_form": closed,
        "product_formula": product_msg,
        "root_scaling": scaling_msg,
        "failures": failures,
        "ok": !failed,
    });
    let mut text = String::new();
    writeln!(
        text,
        "{} at ℓ = {} (dual {}), dominant λ ∈ X* with coordinates ≤ {}",
        report.datum,
        report.ell,
        md.dual().name(),
        report.bound
    )
    .unwrap();
    let battery =
        if closed { "both routes, Steinberg identity, closed form" } else { "both routes, Steinberg identity" };
    writeln!(text, "{battery}: {}/{} passed", report.passed, report.checked).unwrap();
    writeln!(text, "largest tensor dimension: {}", report.max_dimension).unwrap();
    writeln!(text, "product formula for χ(ρ^L−ρ): {product_msg}").unwrap();
    writeln!(text, "root scaling map: {scaling_msg}").unwrap();
    for c in report.failures() {
        for f in &c.failures {
            writeln!(text, "FAIL λ = {}: {f}", c.lambda).unwrap();
        }
    }
    writeln!(text, "{}", if failed { "FAIL" } else { "PASS" }).unwrap();
    Ok(ctx.finish(command, a.output.format, result, text, failed))
}

fn datum_cmd(command: &Command, a: &DatumCmdArgs) -> Result<Output, Failure> {
    let ctx = Ctx::new(true);
    let md = modified(load_datum(&a.datum)?, a.ell)?;
    let base = md.base();
    let scaling = md.root_scaling_map()?;
    let roots: Vec<Value> =
        base.positive_roots().iter().map(|r| json!({ "root": r.coords, "weight": r.weight })).collect();
    let scaling_json: Vec<Value> = scaling
        .iter()
        .map(|s| json!({ "root": s.root.coords, "dual_root": s.dual_root.coords, "scale": s.scale }))
        .collect();
    let result = json!({
        "name": base.name(),
        "datum": DatumJson::from_datum(base.cartan()),
        "ell": md.ell(),
        "l": md.l(),
        "rho_shift": md.rho_shift(),
        "dual_name": md.dual().name(),
        "dual": DatumJson::from_datum(md.dual().cartan()),
        "positive_roots": roots,
        "root_scaling": scaling_json,
    });
    let fmt_row = |r: &[i64]| r.iter().map(|x| format!("{x:>3}")).collect::<String>();
    let mut text = format!("{}\nCartan matrix\n", base.name());
    for row in base.cartan().matrix() {
        writeln!(text, "{}", fmt_row(row)).unwrap();
    }
    writeln!(text, "symmetrizers {:?}", base.cartan().symmetrizers()).unwrap();
    writeln!(text, "ℓ = {}  l = {:?}  ρ^L−ρ = {}", md.ell(), md.l(), md.rho_shift()).unwrap();
    writeln!(text, "dual {}\nCartan matrix", md.dual().name()).unwrap();
    for row in md.dual().cartan().matrix() {
        writeln!(text, "{}", fmt_row(row)).unwrap();
    }
    let mut t = Table::new(&["root", "weight", "l_α", "dual root"]);
    for s in &scaling {
        t.row(vec![
            format!("{:?}", s.root.coords),
            s.root.weight.to_string(),
            s.scale.to_string(),
            format!("{:?}", s.dual_root.coords),
        ]);
    }
    writeln!(text, "positive roots (simple-root coordinates)\n{}", t.render()).unwrap();
    Ok(ctx.finish(command, a.format, result, text, false))
}
