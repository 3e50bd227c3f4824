//! One PASS/FAIL line per acceptance criterion. Timings are wall-clock in
//! the test profile.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use gldim_core::artinian::{global_spectrum_artin, is_initial_segment, SubsetVerdict};
use gldim_core::chain::leuschke_chain;
use gldim_core::cube::{bn_exactness_check, cube_simple_resolution_shape, deleted_gldim_bound, koszul_dual_check};
use gldim_core::order::EndOrder;
use gldim_core::rational::{a_invariant_hypersurface, flenner_is_rational, watanabe_is_rational, WeightedHypersurface};
use gldim_core::resolve::{self, Caps, GldimVerdict};
use gldim_core::NumericalSemigroup;
use gldim_lab::{run_gldim, CommandConfig, IdealSource};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

/// Criteria whose failure is an analysed disagreement rather than a bug.
const KNOWN_FAILURES: &[&str] = &["10a"];

struct Outcome {
    id: &'static str,
    name: &'static str,
    pass: bool,
    detail: String,
    elapsed: Duration,
}

/// Certificates gathered from the finite resolutions of criteria 1 to 5.
#[derive(Default)]
struct CertificateLog {
    checked: usize,
    failures: Vec<String>,
}

impl CertificateLog {
    fn record_json(&mut self, context: &str, certs: &Value) {
        for c in certs.as_array().expect("certificate list") {
            self.checked += 1;
            let cert = &c["certificate"];
            let ok = ["compositions_zero", "minimality", "final_injective", "doubling_stable"]
                .iter()
                .all(|k| cert[k] == true)
                && c["all_pass"] == true;
            if !ok {
                self.failures.push(format!("{context} simple {}", c["simple"]));
            }
        }
    }

    fn record_verdict(&mut self, context: &str, verdict: &GldimVerdict) {
        if let GldimVerdict::Finite { resolutions, .. } = verdict {
            for r in resolutions {
                self.checked += 1;
                let c = &r.certificate;
                if !(c.compositions_zero && c.minimality && c.final_injective && c.doubling_stable && c.all_pass()) {
                    self.failures.push(format!("{context} simple {}", r.simple + 1));
                }
            }
        }
    }
}

fn timed(id: &'static str, name: &'static str, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (pass, detail) = f();
    Outcome { id, name, pass, detail, elapsed: start.elapsed() }
}

fn leuschke_report(gens: &[i64]) -> Value {
    let report = run_gldim(gens, &IdealSource::Leuschke, &CommandConfig::default()).expect("gldim runs");
    serde_json::to_value(&report).unwrap()
}

fn gldim_of(report: &Value) -> Option<u64> {
    let g = &report["results"]["gldim"];
    (g["verdict"] == "finite").then(|| g["gldim"].as_u64().unwrap())
}

fn degree_set(members: &[i64], stab: i64) -> Value {
    let min = members.first().copied().unwrap_or(stab);
    json!({ "members": members, "min": min, "stab": stab })
}

fn criterion_1(log: &mut CertificateLog) -> (bool, String) {
    let r = leuschke_report(&[3, 4]);
    let mut problems = Vec::new();
    if r["results"]["chain"] != json!([[3, 4], [3, 4, 5], [1]]) {
        problems.push(format!("chain {}", r["results"]["chain"]));
    }
    // rows: ⟨0,3,4⟩, ⟨3,4⟩, 6+⟨0,1⟩ / ⟨0,3,4,5⟩ twice, 3+⟨0,1⟩ / ⟨0,1⟩ three times
    let grid = json!([
        [degree_set(&[0, 3, 4], 6), degree_set(&[3, 4], 6), degree_set(&[], 6)],
        [degree_set(&[0], 3), degree_set(&[0], 3), degree_set(&[], 3)],
        [degree_set(&[], 0), degree_set(&[], 0), degree_set(&[], 0)],
    ]);
    if r["results"]["hom_grid"] != grid {
        problems.push("hom grid".into());
    }
    let arrows: BTreeSet<(u64, u64, i64)> = r["results"]["quiver"]["arrows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| (a["source"].as_u64().unwrap(), a["target"].as_u64().unwrap(), a["degree"].as_i64().unwrap()))
        .collect();
    let expected: BTreeSet<_> =
        [(1, 2, 3), (1, 2, 4), (2, 1, 0), (2, 3, 3), (3, 2, 0), (3, 3, 1)].into_iter().collect();
    if arrows != expected || r["results"]["quiver"]["arrows"].as_array().unwrap().len() != 6 {
        problems.push(format!("arrows {arrows:?}"));
    }
    let pds: Vec<u64> = r["results"]["simples"].as_array().unwrap().iter().map(|s| s["pd"].as_u64().unwrap()).collect();
    if pds != [2, 3, 2] {
        problems.push(format!("pd {pds:?}"));
    }
    if gldim_of(&r) != Some(3) {
        problems.push(format!("gldim {}", r["results"]["gldim"]));
    }
    log.record_json("E6", &r["certificates"]);
    (problems.is_empty(), if problems.is_empty() { "gldim 3, pd (2,3,2)".into() } else { problems.join("; ") })
}

fn criterion_2(log: &mut CertificateLog) -> (bool, String) {
    let mut bad = Vec::new();
    for k in 1..=5 {
        let r = leuschke_report(&[2, 2 * k + 1]);
        if gldim_of(&r) != Some(2) {
            bad.push(format!("k={k}: {}", r["results"]["gldim"]));
        }
        log.record_json("A-family", &r["certificates"]);
    }
    (bad.is_empty(), if bad.is_empty() { "Finite(2) for k = 1..5".into() } else { bad.join("; ") })
}

fn criterion_3(log: &mut CertificateLog) -> (bool, String) {
    let r = leuschke_report(&[3, 5]);
    let rings = r["results"]["chain"].as_array().unwrap().len();
    let g = gldim_of(&r);
    log.record_json("E8", &r["certificates"]);
    (rings == 4 && g == Some(3), format!("{rings} rings, gldim {g:?}"))
}

fn criterion_4(log: &mut CertificateLog) -> (bool, String) {
    let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
    let m = s.maximal_ideal();
    let caps = Caps::default();
    let only_m = EndOrder::build(std::slice::from_ref(&m)).unwrap();
    let v1 = resolve::gldim(&only_m, &caps).unwrap();
    let both = EndOrder::build(&[s.as_ideal(), m]).unwrap();
    let v2 = resolve::gldim(&both, &caps).unwrap();
    log.record_verdict("cusp [m]", &v1);
    log.record_verdict("cusp [S,m]", &v2);

    // a: 1 → 2, b: 2 → 1, c: loop at 2, with ab and c² in the same degree
    let q = both.quiver();
    let counts = q.arrow_counts();
    let shape_ok = counts == vec![vec![0, 1], vec![1, 1]];
    let deg = |s: usize, t: usize| q.arrows.iter().find(|a| a.source == s && a.target == t).map(|a| a.degree);
    let relation_ok = match (deg(0, 1), deg(1, 0), deg(1, 1)) {
        (Some(a), Some(b), Some(c)) => a + b == 2 * c,
        _ => false,
    };
    let spectrum: BTreeSet<_> = [v1.gldim(), v2.gldim()].into_iter().flatten().collect();
    let pass = v1.gldim() == Some(1) && v2.gldim() == Some(2) && shape_ok && relation_ok;
    let arrows: Vec<String> =
        q.arrows.iter().map(|a| format!("{}→{} t^{}", a.source + 1, a.target + 1, a.degree)).collect();
    let detail = format!(
        "[m] → {:?}, [S,m] → {:?}, spectrum {spectrum:?}, arrows {}",
        v1.gldim(),
        v2.gldim(),
        arrows.join(", ")
    );
    (pass, detail)
}

fn criterion_5(log: &mut CertificateLog) -> (bool, String) {
    let mut problems = Vec::new();
    let mut n6 = Duration::ZERO;
    for n in 1..=6 {
        let start = Instant::now();
        let spec = global_spectrum_artin(n, None).unwrap();
        if n == 6 {
            n6 = start.elapsed();
        }
        let expected: BTreeSet<usize> = if n == 1 { [0].into() } else { [0, 2].into() };
        if spec.spectrum != expected {
            problems.push(format!("n={n} spectrum {:?}", spec.spectrum));
        }
        if spec.subsets.len() != (1 << n) - 1 {
            problems.push(format!("n={n} {} subsets", spec.subsets.len()));
        }
        for s in &spec.subsets {
            let finite = matches!(s.verdict, SubsetVerdict::Finite { .. });
            if finite != is_initial_segment(&s.indices) {
                problems.push(format!("n={n} {:?} finite={finite}", s.indices));
            }
            if finite {
                log.checked += 1;
                if !s.certificates_pass {
                    log.failures.push(format!("artinian n={n} {:?}", s.indices));
                }
            }
        }
        if !spec.witnesses_checked {
            problems.push(format!("n={n} witness check"));
        }
    }
    if n6 >= Duration::from_secs(30) {
        problems.push(format!("n=6 took {n6:?}"));
    }
    (
        problems.is_empty(),
        if problems.is_empty() { format!("n = 6 in {:.2} s", n6.as_secs_f64()) } else { problems.join("; ") },
    )
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_6() -> (bool, String) {
    let mut problems = Vec::new();
    for n in 1..=5 {
        if !koszul_dual_check(n).unwrap() {
            problems.push(format!("koszul n={n}"));
        }
        for i in 0..1u32 << n {
            let shape = cube_simple_resolution_shape(n, i).unwrap();
            let sizes: Vec<usize> = (0..=n).map(|k| binomial(n, k)).collect();
            if shape.length() != n || shape.level_sizes() != sizes {
                problems.push(format!("shape n={n} I={i}"));
            }
        }
    }
    for n in 1..=4 {
        for i in 1..1u32 << n {
            if !bn_exactness_check(n, i).unwrap() {
                problems.push(format!("exactness n={n} I={i}"));
            }
        }
    }
    for n in 1..=6 {
        for k in 0..1u32 << n {
            let b = deleted_gldim_bound(n, k).unwrap();
            if b > 2 * n - 1 {
                problems.push(format!("deleted n={n} K={k} bound {b}"));
            }
        }
    }
    (problems.is_empty(), if problems.is_empty() { "all identities hold".into() } else { problems.join("; ") })
}

fn criterion_7(log: &CertificateLog) -> (bool, String) {
    let pass = log.failures.is_empty() && log.checked > 0;
    let detail = if log.failures.is_empty() {
        format!("{} finite resolutions certified", log.checked)
    } else {
        format!("{} of {} failed: {}", log.failures.len(), log.checked, log.failures.join(", "))
    };
    (pass, detail)
}

fn criterion_8() -> (bool, String) {
    let mut problems = Vec::new();
    for gens in [[3, 4], [2, 3], [3, 5]] {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let chain = leuschke_chain(&s).unwrap();
        let center = EndOrder::build(&chain.as_ideals).unwrap().center();
        if center != s {
            problems.push(format!("{s}: center {center}"));
        }
    }
    let nat = NumericalSemigroup::naturals();
    let center = EndOrder::build(&[nat.as_ideal()]).unwrap().center();
    if center != nat {
        problems.push(format!("normalization: center {center}"));
    }
    (problems.is_empty(), if problems.is_empty() { "centers match".into() } else { problems.join("; ") })
}

/// Membership up to `bound` by dynamic programming over the generators.
fn brute_members(gens: &[i64], bound: i64) -> Vec<bool> {
    let mut member = vec![false; bound as usize + 1];
    member[0] = true;
    for d in 1..=bound {
        member[d as usize] = gens.iter().any(|&g| g <= d && member[(d - g) as usize]);
    }
    member
}

fn brute_frobenius(gens: &[i64], bound: i64) -> i64 {
    let member = brute_members(gens, bound);
    (0..=bound).rev().find(|&d| !member[d as usize]).unwrap_or(-1)
}

fn criterion_9() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(318);
    let mut tested = 0;
    let mut failures = Vec::new();
    while tested < 200 {
        let k = rng.gen_range(2..=4);
        let gens: Vec<i64> = (0..k).map(|_| rng.gen_range(2..=13)).collect();
        let Ok(s) = NumericalSemigroup::from_generators(&gens) else { continue };
        if s.is_full() {
            continue;
        }
        let bound = 4 * 13 * 13;
        let f = brute_frobenius(&gens, bound);
        let member = brute_members(&gens, bound);
        let symmetric = (0..=f).all(|g| member[g as usize] != member[(f - g) as usize]);
        if !symmetric {
            continue;
        }
        let gaps: Vec<i64> = (1..=f).filter(|&g| !member[g as usize]).collect();
        let extra: Vec<i64> = gaps.iter().copied().filter(|_| rng.gen_bool(0.3)).collect();
        let extra = if extra.is_empty() { vec![gaps[rng.gen_range(0..gaps.len())]] } else { extra };
        let mut t_gens = gens.clone();
        t_gens.extend(&extra);
        let t = s.adjoin(&extra).unwrap();
        let ft = brute_frobenius(&t_gens, bound);
        if !(t != s && ft == t.frobenius() && f == s.frobenius() && ft < f) {
            failures.push(format!("{s} ⊂ {t}"));
        }
        tested += 1;
    }
    (failures.is_empty(), format!("{tested} pairs, {} violations {}", failures.len(), failures.join(", ")))
}

fn wh(weights: Vec<i64>, degrees: Vec<i64>) -> WeightedHypersurface {
    WeightedHypersurface::new(weights, degrees).unwrap()
}

fn criterion_10a() -> (bool, String) {
    let mut mismatches = Vec::new();
    for n in 2..=8 {
        for k in 1..=12 {
            let non_rational = !flenner_is_rational(&wh(vec![1; n], vec![k]));
            if non_rational != (k as usize > n) {
                mismatches.push(format!("(n={n},k={k})"));
            }
        }
    }
    let detail = if mismatches.is_empty() {
        "non-rational exactly when k > n".into()
    } else {
        format!("criterion disagrees at k = n: {}", mismatches.join(" "))
    };
    (mismatches.is_empty(), detail)
}

fn criterion_10b() -> (bool, String) {
    let zeros = (1..=8).all(|n| a_invariant_hypersurface(&wh(vec![1; n], vec![n as i64])) == 0);
    (zeros && !watanabe_is_rational(0), format!("a = 0 for n = 1..8: {zeros}"))
}

fn criterion_10c() -> (bool, String) {
    let a = a_invariant_hypersurface(&wh(vec![1, 1, 1], vec![5]));
    let pass = a == 2 && !watanabe_is_rational(a) && watanabe_is_rational(-1);
    (pass, format!("quintic a = {a}, rational {}", watanabe_is_rational(a)))
}

fn criterion_10d() -> (bool, String) {
    let mut bad = Vec::new();
    let mut count = 0;
    for p in 2..=12i64 {
        for q in p + 1..=12 {
            if (1..=p).filter(|d| p % d == 0 && q % d == 0).max() != Some(1) {
                continue;
            }
            count += 1;
            let a = a_invariant_hypersurface(&wh(vec![p, q], vec![p * q]));
            let f = NumericalSemigroup::from_generators(&[p, q]).unwrap().frobenius();
            if a != f || f != p * q - p - q || f != brute_frobenius(&[p, q], p * q) {
                bad.push(format!("<{p},{q}>"));
            }
        }
    }
    (bad.is_empty(), format!("{count} coprime pairs {}", bad.join(" ")))
}

fn main() {
    let mut log = CertificateLog::default();
    let mut outcomes = Vec::new();

    let o = timed("1", "E6 golden", || criterion_1(&mut log));
    let o = within(o, Duration::from_secs(1));
    outcomes.push(o);
    let o = timed("2", "A-family gldim 2", || criterion_2(&mut log));
    outcomes.push(within(o, Duration::from_secs(5)));
    let o = timed("3", "E8 gldim 3", || criterion_3(&mut log));
    outcomes.push(within(o, Duration::from_secs(2)));
    outcomes.push(timed("4", "cusp spectrum {1,2}", || criterion_4(&mut log)));
    outcomes.push(timed("5", "Artinian spectrum n <= 6", || criterion_5(&mut log)));
    outcomes.push(timed("6", "cube identities", criterion_6));
    outcomes.push(timed("7", "certificate suite", || criterion_7(&log)));
    outcomes.push(timed("8", "centers", criterion_8));
    outcomes.push(timed("9", "Frobenius drop over symmetric semigroups", criterion_9));
    outcomes.push(timed("10a", "Fermat family non-rational iff k > n", criterion_10a));
    outcomes.push(timed("10b", "free divisor a-invariant 0", criterion_10b));
    outcomes.push(timed("10c", "quintic a-invariant 2", criterion_10c));
    outcomes.push(timed("10d", "a-invariant equals Frobenius for <p,q>", criterion_10d));

    let mut unexpected = 0;
    for o in &outcomes {
        let known = KNOWN_FAILURES.contains(&o.id);
        let tag = match (o.pass, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        if !o.pass && !known {
            unexpected += 1;
        }
        println!("{tag:<12} {:<4} {:<44} {:>8.3} s  {}", o.id, o.name, o.elapsed.as_secs_f64(), o.detail);
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!("\n{passed}/{} criteria pass, {unexpected} unexpected failures", outcomes.len());
    if unexpected > 0 {
        std::process::exit(1);
    }
}

fn within(mut o: Outcome, limit: Duration) -> Outcome {
    if o.elapsed >= limit {
        o.pass = false;
        o.detail = format!("{} (took {:.3} s, limit {} s)", o.detail, o.elapsed.as_secs_f64(), limit.as_secs());
    }
    o
}
