use std::fmt::Write as _;
use std::path::PathBuf;

use gldim_core::artinian::{artin_order, global_spectrum_artin, witness_is_not_projective, SubsetVerdict};
use gldim_core::chain::{a_invariant_chain_check, leuschke_chain, LeuschkeChain};
use gldim_core::cube::{
    bn_exactness_check, bn_gldim, bn_resolution_shape, cube_hilbert, cube_simple_resolution_shape, deleted_gldim_bound,
    koszul_dual_check, subset_label, CubeAlgebra,
};
use gldim_core::order::{EndOrder, QuiverPresentation};
use gldim_core::rational::{
    a_invariant_hypersurface, flenner_is_rational, hilbert_series_hypersurface, watanabe_is_rational,
    WeightedHypersurface,
};
use gldim_core::resolve::{self, GldimVerdict, Resolution, SimpleOutcome, Witness};
use gldim_core::{DegreeSet, FractionalIdeal, NumericalSemigroup};
use serde_json::{json, Value};

use crate::config::CommandConfig;
use crate::report::{CliError, Report, Status, SCHEMA};

/// Largest `n` accepted by the `cube` command; the Hilbert matrix has
/// `4^n` entries.
pub const CUBE_MAX_N: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealSource {
    Leuschke,
    /// JSON list of degree sets over the semigroup.
    File(PathBuf),
}

fn report(command: String, input: Value, config: &CommandConfig, results: Value, certificates: Value) -> Report {
    Report {
        schema: SCHEMA,
        command,
        input,
        config: config.echo(),
        results,
        certificates,
        status: Status::Complete,
        text: String::new(),
        quiver: None,
        wall_time: Default::default(),
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

pub fn semigroup(gens: &[i64]) -> Result<NumericalSemigroup, CliError> {
    if gens.is_empty() {
        return Err(CliError::Argument("at least one generator is required".into()));
    }
    Ok(NumericalSemigroup::from_generators(gens)?)
}

pub fn run_semigroup_info(gens: &[i64], config: &CommandConfig) -> Result<Report, CliError> {
    let s = semigroup(gens)?;
    let results = json!({
        "generators": s.minimal_generators(),
        "multiplicity": s.multiplicity(),
        "frobenius": s.frobenius(),
        "conductor": s.conductor(),
        "genus": s.genus(),
        "gaps": s.gaps(),
        "symmetric": s.is_symmetric(),
        "carrier": s.carrier(),
    });
    let mut r = report(
        format!("semigroup info {}", join(gens, " ")),
        json!({ "generators": gens }),
        config,
        results,
        json!([]),
    );
    r.text = format!(
        "semigroup  {s}\nfrobenius  {}\nconductor  {}\ngenus      {}\ngaps       {}\nsymmetric  {}\n",
        s.frobenius(),
        s.conductor(),
        s.genus(),
        join(&s.gaps(), " "),
        s.is_symmetric()
    );
    Ok(r)
}

fn chain_json(chain: &LeuschkeChain) -> Value {
    json!({
        "chain": chain.rings,
        "delta": chain.delta(),
        "frobenius_sequence": chain.frobenius_sequence(),
        "frobenius_drops": a_invariant_chain_check(chain),
    })
}

fn chain_text(chain: &LeuschkeChain) -> String {
    format!(
        "chain      {}\ndelta      {}\nfrobenius  {}\n",
        join(&chain.rings, " ⊂ "),
        chain.delta(),
        join(&chain.frobenius_sequence(), " → ")
    )
}

pub fn run_chain(gens: &[i64], config: &CommandConfig) -> Result<Report, CliError> {
    let chain = leuschke_chain(&semigroup(gens)?)?;
    let mut r = report(
        format!("chain {}", join(gens, " ")),
        json!({ "generators": gens }),
        config,
        chain_json(&chain),
        json!([]),
    );
    r.text = chain_text(&chain);
    Ok(r)
}

fn read_ideal_file(s: &NumericalSemigroup, path: &PathBuf) -> Result<Vec<FractionalIdeal>, CliError> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| CliError::Argument(format!("cannot read {}: {e}", path.display())))?;
    let sets: Vec<DegreeSet> = serde_json::from_str(&raw)
        .map_err(|e| CliError::Argument(format!("{} is not a list of degree sets: {e}", path.display())))?;
    Ok(sets.into_iter().map(|d| FractionalIdeal::new(s, d)).collect::<gldim_core::Result<Vec<_>>>()?)
}

fn build_order(gens: &[i64], source: &IdealSource) -> Result<(Option<LeuschkeChain>, EndOrder, Value), CliError> {
    let s = semigroup(gens)?;
    match source {
        IdealSource::Leuschke => {
            let chain = leuschke_chain(&s)?;
            let order = EndOrder::build(&chain.as_ideals)?;
            Ok((Some(chain), order, json!({ "generators": gens, "source": "leuschke" })))
        }
        IdealSource::File(path) => {
            let ideals = read_ideal_file(&s, path)?;
            let order = EndOrder::build(&ideals)?;
            let sets: Vec<&DegreeSet> = ideals.iter().map(FractionalIdeal::degrees).collect();
            Ok((None, order, json!({ "generators": gens, "source": "ideal-file", "ideals": sets })))
        }
    }
}

fn source_flag(source: &IdealSource) -> String {
    match source {
        IdealSource::Leuschke => "--leuschke".into(),
        IdealSource::File(p) => format!("--ideal-file {}", p.display()),
    }
}

fn quiver_json(q: &QuiverPresentation) -> Value {
    let arrows: Vec<Value> = q
        .arrows
        .iter()
        .map(|a| json!({ "source": a.source + 1, "target": a.target + 1, "degree": a.degree }))
        .collect();
    json!({ "vertices": q.vertices, "arrows": arrows })
}

fn quiver_text(q: &QuiverPresentation) -> String {
    let mut out = String::new();
    for a in &q.arrows {
        let _ = writeln!(out, "  {} → {}  t^{}", a.source + 1, a.target + 1, a.degree);
    }
    out
}

fn grid_text(order: &EndOrder) -> String {
    let mut out = String::new();
    for row in order.hom_grid() {
        let _ = writeln!(out, "  {}", join(row, "  "));
    }
    out
}

pub fn run_order_quiver(gens: &[i64], source: &IdealSource, config: &CommandConfig) -> Result<Report, CliError> {
    let (chain, order, input) = build_order(gens, source)?;
    let quiver = order.quiver();
    let results = json!({
        "chain": chain.as_ref().map(|c| &c.rings),
        "hom_grid": order.hom_grid(),
        "quiver": quiver_json(&quiver),
        "center": order.center(),
    });
    let command = format!("order quiver {} {}", join(gens, " "), source_flag(source));
    let mut r = report(command, input, config, results, json!([]));
    r.text = format!("hom grid\n{}quiver\n{}center  {}\n", grid_text(&order), quiver_text(&quiver), order.center());
    r.quiver = Some(quiver);
    Ok(r)
}

fn witness_json(w: &Witness) -> Value {
    serde_json::to_value(w).expect("witness serializes")
}

fn resolution_json(r: &Resolution) -> Value {
    let mut v = serde_json::to_value(r.summary()).expect("summary serializes");
    v["outcome"] = json!("finite");
    v["maps"] = serde_json::to_value(&r.maps).expect("maps serialize");
    v
}

/// Per-simple outcomes, certificates of every finished resolution, the
/// verdict, and whether a cap was hit.
struct VerdictParts {
    verdict: Value,
    simples: Vec<Value>,
    certificates: Vec<Value>,
    status: Status,
    text: String,
}

fn certificate_json(r: &Resolution) -> Value {
    json!({ "simple": r.simple + 1, "all_pass": r.certificate.all_pass(), "certificate": r.certificate })
}

fn verdict_parts(verdict: &GldimVerdict, cap: usize) -> VerdictParts {
    let mut simples = Vec::new();
    let mut certificates = Vec::new();
    let mut text = String::new();
    let mut add_outcome = |o: &SimpleOutcome, i: usize| match o {
        SimpleOutcome::Finite(r) => {
            simples.push(resolution_json(r));
            certificates.push(certificate_json(r));
            let _ = writeln!(text, "{r}");
        }
        SimpleOutcome::ExceedsCap(r) => {
            simples.push(json!({ "simple": i + 1, "outcome": "exceeds_cap", "cap": cap, "partial_betti": r.betti }));
            let _ = writeln!(text, "S{}: still going after {cap} steps\n", i + 1);
        }
        SimpleOutcome::Infinite(w) => {
            simples.push(json!({ "simple": i + 1, "outcome": "infinite", "witness": witness_json(w) }));
            let _ = writeln!(text, "S{}: syzygies {} and {} share a fingerprint\n", i + 1, w.first, w.repeat);
        }
    };
    let (verdict_json, status) = match verdict {
        GldimVerdict::Finite { gldim, resolutions } => {
            for (i, r) in resolutions.iter().enumerate() {
                add_outcome(&SimpleOutcome::Finite(r.clone()), i);
            }
            (json!({ "verdict": "finite", "gldim": gldim }), Status::Complete)
        }
        GldimVerdict::Infinite { witness, outcomes } => {
            for (i, o) in outcomes.iter().enumerate() {
                add_outcome(o, i);
            }
            (json!({ "verdict": "infinite", "witness": witness_json(witness) }), Status::Complete)
        }
        GldimVerdict::ExceedsCap { outcomes } => {
            for (i, o) in outcomes.iter().enumerate() {
                add_outcome(o, i);
            }
            (json!({ "verdict": "exceeds_cap", "cap": cap }), Status::Capped)
        }
    };
    let line = match verdict {
        GldimVerdict::Finite { gldim, .. } => format!("gldim = {gldim}\n"),
        GldimVerdict::Infinite { witness, .. } => format!("gldim = ∞ (periodic syzygies of S{})\n", witness.simple + 1),
        GldimVerdict::ExceedsCap { .. } => format!("gldim undecided within {cap} steps\n"),
    };
    text.push_str(&line);
    VerdictParts { verdict: verdict_json, simples, certificates, status, text }
}

pub fn run_gldim(gens: &[i64], source: &IdealSource, config: &CommandConfig) -> Result<Report, CliError> {
    let (chain, order, input) = build_order(gens, source)?;
    let quiver = order.quiver();
    let verdict = resolve::gldim(&order, &config.caps())?;
    let parts = verdict_parts(&verdict, config.max_length);
    let results = json!({
        "chain": chain.as_ref().map(|c| &c.rings),
        "hom_grid": order.hom_grid(),
        "quiver": quiver_json(&quiver),
        "simples": parts.simples,
        "gldim": parts.verdict,
    });
    let command = format!("gldim {} {}", join(gens, " "), source_flag(source));
    let mut r = report(command, input, config, results, Value::Array(parts.certificates));
    r.status = parts.status;
    let mut text = String::new();
    if let Some(c) = &chain {
        text.push_str(&chain_text(c));
    }
    let _ = write!(text, "hom grid\n{}quiver\n{}\n{}", grid_text(&order), quiver_text(&quiver), parts.text);
    r.text = text;
    r.quiver = Some(quiver);
    Ok(r)
}

/// `cap` defaults to the order's own step cap.
pub fn run_artinian_gldim(
    n: usize,
    indices: &[usize],
    cap: Option<usize>,
    config: &CommandConfig,
) -> Result<Report, CliError> {
    let order = artin_order(n, indices)?;
    let cap = cap.unwrap_or_else(|| order.default_cap());
    let caps = gldim_core::resolve::Caps { max_length: cap, ..config.caps() };
    let verdict = resolve::gldim(&order, &caps)?;
    let parts = verdict_parts(&verdict, cap);
    let witness_ok = match &verdict {
        GldimVerdict::Infinite { witness, .. } => Some(witness_is_not_projective(&order, witness)),
        _ => None,
    };
    let results = json!({
        "order": order,
        "simples": parts.simples,
        "gldim": parts.verdict,
        "witness_not_projective": witness_ok,
    });
    let command = format!("artinian gldim {n} {}", join(indices, ","));
    let mut r =
        report(command, json!({ "n": n, "indices": indices }), config, results, Value::Array(parts.certificates));
    r.status = parts.status;
    r.text = parts.text;
    Ok(r)
}

pub fn run_spectrum(n: usize, cap: Option<usize>, config: &CommandConfig) -> Result<Report, CliError> {
    let spectrum = global_spectrum_artin(n, cap)?;
    let certificates: Vec<Value> = spectrum
        .subsets
        .iter()
        .map(|s| json!({ "indices": s.indices, "certificates_pass": s.certificates_pass }))
        .collect();
    let mut text = format!("spectrum {{{}}}\n", join(&spectrum.spectrum.iter().collect::<Vec<_>>(), ","));
    for s in &spectrum.subsets {
        let verdict = match &s.verdict {
            SubsetVerdict::Finite { gldim } => gldim.to_string(),
            SubsetVerdict::Infinite { .. } => "∞".into(),
            SubsetVerdict::ExceedsCap { cap } => format!("> {cap} steps"),
        };
        let _ = writeln!(text, "  {{{}}}  {verdict}", join(&s.indices, ","));
    }
    let _ = writeln!(text, "classification matches: {}", spectrum.classification_matches);
    let status = if spectrum.capped().is_empty() { Status::Complete } else { Status::Capped };
    let results = serde_json::to_value(&spectrum).expect("spectrum serializes");
    let mut r =
        report(format!("artinian spectrum {n}"), json!({ "n": n }), config, results, Value::Array(certificates));
    r.status = status;
    r.text = text;
    Ok(r)
}

pub fn run_cube(n: usize, config: &CommandConfig) -> Result<Report, CliError> {
    if n == 0 || n > CUBE_MAX_N {
        return Err(CliError::Argument(format!("n = {n} must lie in 1..={CUBE_MAX_N}")));
    }
    let cube = CubeAlgebra::new(n)?;
    let hilbert: Vec<Vec<Value>> = cube_hilbert(n)?
        .iter()
        .map(|row| row.iter().map(|h| serde_json::to_value(h.to_json()).expect("series serialize")).collect())
        .collect();
    let koszul = koszul_dual_check(n)?;
    let mut vertices = Vec::new();
    for i in cube.vertices() {
        let shape = cube_simple_resolution_shape(n, i)?;
        let mut v = json!({ "vertex": subset_label(i), "cube_shape": shape, "cube_length": shape.length() });
        if i != 0 {
            let bn = bn_resolution_shape(n, i)?;
            v["bn_shape"] = serde_json::to_value(&bn).expect("shape serializes");
            v["bn_length"] = json!(bn.length());
            v["bn_exact"] = json!(bn_exactness_check(n, i)?);
        }
        vertices.push(v);
    }
    let deleted = cube
        .vertices()
        .map(|k| Ok(json!({ "deleted": subset_label(k), "bound": deleted_gldim_bound(n, k)? })))
        .collect::<Result<Vec<_>, CliError>>()?;
    let gl = bn_gldim(n)?;
    let mut bn = json!({ "computed": gl, "stated": n });
    if n == 1 {
        bn["note"] = json!("B_1 is the field, so its simple is projective; the stated value is n = 1");
    }
    let results = json!({
        "n": n,
        "metric_valid": cube.metric_is_valid(),
        "hilbert": hilbert,
        "koszul_dual": koszul,
        "vertices": vertices,
        "bn_gldim": bn,
        "deleted_bounds": deleted,
    });
    let mut r = report(format!("cube {n}"), json!({ "n": n }), config, results, json!([]));
    r.text = format!("n           {n}\nkoszul dual {koszul}\nB_n gldim   {gl}\n");
    Ok(r)
}

fn hypersurface(weights: &[i64], degrees: &[i64]) -> Result<WeightedHypersurface, CliError> {
    Ok(WeightedHypersurface::new(weights.to_vec(), degrees.to_vec())?)
}

pub fn run_flenner(weights: &[i64], degrees: &[i64], config: &CommandConfig) -> Result<Report, CliError> {
    let h = hypersurface(weights, degrees)?;
    let rational = flenner_is_rational(&h);
    let a = a_invariant_hypersurface(&h);
    let results = json!({
        "weight_sum": weights.iter().sum::<i64>(),
        "degree_sum": degrees.iter().sum::<i64>(),
        "flenner_rational": rational,
        "a_invariant": a,
        "watanabe_rational": watanabe_is_rational(a),
    });
    let command = format!("rational flenner --weights {} --degrees {}", join(weights, ","), join(degrees, ","));
    let mut r = report(command, json!({ "weights": weights, "degrees": degrees }), config, results, json!([]));
    r.text = format!("rational  {rational}\n");
    Ok(r)
}

pub fn run_a_invariant(weights: &[i64], degrees: &[i64], config: &CommandConfig) -> Result<Report, CliError> {
    let h = hypersurface(weights, degrees)?;
    let a = a_invariant_hypersurface(&h);
    let series = hilbert_series_hypersurface(&h);
    let results = json!({
        "a_invariant": a,
        "watanabe_rational": watanabe_is_rational(a),
        "hilbert_series": series.to_json(),
        "hilbert_degree": series.degree(),
    });
    let command = format!("rational a-inv --weights {} --degrees {}", join(weights, ","), join(degrees, ","));
    let mut r = report(command, json!({ "weights": weights, "degrees": degrees }), config, results, json!([]));
    r.text = format!("a-invariant  {a}\nhilbert      {series}\n");
    Ok(r)
}
