//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//!
//! Every criterion also returns a machine-readable record; criterion 10 runs
//! the others twice and compares those records byte for byte.

use std::process::{Command as Process, ExitCode};
use std::sync::Arc;

use serde_json::{json, Value};

use cotensor_cli::{render, run_command, Command, Format, SessionConfig};
use cotensor_core::coalgebra::CoalgebraMap;
use cotensor_core::cotensor::{
    cobar_bicomplex, coinduce, cotensor, cotensor_assoc_check, cotor, cotor_by_resolution, ext,
};
use cotensor_core::emss::{emss_check, total_homology};
use cotensor_core::fixtures::{self, ComoduleFixture};
use cotensor_core::gen;
use cotensor_core::{
    factorize, is_fibrant, is_fibration, postnikov_tower, stabilized_limit, verify_tower, ChainComplex, ComoduleMap,
    DGCoalgebra, DGComodule, Field, Result,
};

struct Outcome {
    passed: bool,
    detail: String,
    record: Value,
}

impl Outcome {
    fn new(failures: Vec<String>, summary: String, record: Value) -> Self {
        let passed = failures.is_empty();
        let detail = if passed { summary } else { format!("{summary}; first failure: {}", failures[0]) };
        Self { passed, detail, record: json!({ "passed": passed, "failures": failures, "data": record }) }
    }
}

fn f2() -> Field {
    Field::gf(2)
}

fn over(name: &'static str, maxdeg: usize) -> Result<Vec<ComoduleFixture>> {
    fixtures::comodule_fixtures_over(name, f2(), maxdeg)
}

fn sphere_comodule(c: &Arc<DGCoalgebra>, n: usize) -> Result<DGComodule> {
    DGComodule::trivial(&ChainComplex::sphere(c.field(), n, 1, c.maxdeg()), c.clone())
}

/// 1: splitting of 200 random complexes.
fn splitting() -> Result<Outcome> {
    let fields = [Field::gf(2), Field::gf(3), Field::rationals()];
    let mut rng = gen::rng(1);
    let mut failures = Vec::new();
    let mut total_dims = 0;
    for k in 0..200 {
        let field = fields[k % 3];
        let maxdeg = 2 + k % 9;
        let x = gen::random_complex(field, maxdeg, 8, &mut rng);
        total_dims += x.total_dim();
        let s = x.split();
        let r = s.check(&x);
        if let Some(c) = r.first_failure() {
            failures.push(format!("complex {k} over {field}: {} at {:?}", c.name, c.degree));
        }
    }
    Ok(Outcome::new(failures, "200 complexes over GF(2), GF(3), Q".into(), json!({ "total_dim": total_dims })))
}

fn cofree_factor(name: &str, field: Field, maxdeg: usize) -> Option<ChainComplex> {
    let stem = name.split('-').take(2).collect::<Vec<_>>().join("-");
    match stem.as_str() {
        "cofree-s1" => Some(ChainComplex::sphere(field, 1, 1, maxdeg)),
        "cofree-d1" => ChainComplex::disk(field, 1, 1, maxdeg).ok(),
        _ if name.starts_with("regular") => Some(ChainComplex::sphere(field, 0, 1, maxdeg)),
        _ => None,
    }
}

/// 2: unit, cofree formula and associativity over the fixture cross-product.
fn cotensor_algebra() -> Result<Outcome> {
    let maxdeg = 8;
    let mut failures = Vec::new();
    let mut counts = json!({});
    for name in ["f2", "f4"] {
        let fx = over(name, maxdeg)?;
        let c = fx[0].comodule.coalgebra().clone();
        let regular = DGComodule::regular(c.clone());
        let (mut units, mut cofree, mut triples) = (0, 0, 0);
        for x in &fx {
            let t = cotensor(&x.comodule, &regular)?;
            units += 1;
            if t.dims() != x.comodule.dims() || t.complex.homology_dims() != x.comodule.carrier().homology_dims() {
                failures.push(format!("{}: X□C has dims {:?}", x.name, t.dims()));
            }
            for m in &fx {
                let Some(factor) = cofree_factor(&m.name, f2(), maxdeg) else { continue };
                cofree += 1;
                let lhs = cotensor(&m.comodule, &x.comodule)?;
                let rhs = factor.tensor(x.comodule.carrier())?;
                if lhs.dims() != rhs.dims() || lhs.complex.homology_dims() != rhs.homology_dims() {
                    failures.push(format!("({})□{} is not M⊗{}", m.name, x.name, x.name));
                }
            }
            for y in &fx {
                for z in &fx {
                    triples += 1;
                    let r = cotensor_assoc_check(&x.comodule, &y.comodule, &z.comodule)?;
                    if let Some(chk) = r.first_failure() {
                        failures.push(format!("({}, {}, {}): {}", x.name, y.name, z.name, chk.name));
                    }
                }
            }
        }
        counts[name] = json!({ "unit": units, "cofree": cofree, "associativity": triples });
    }
    let summary = format!(
        "unit, cofree formula and associativity over f2 ({}) and f4 ({})",
        counts["f2"]["associativity"], counts["f4"]["associativity"]
    );
    Ok(Outcome::new(failures, summary, counts))
}

/// 3: CoTor over f2 of k with itself.
fn cotor_of_point() -> Result<Outcome> {
    let maxdeg = 10;
    let c = Arc::new(fixtures::f2(f2(), maxdeg));
    let k = sphere_comodule(&c, 0)?;
    let mut failures = Vec::new();
    let mut table = Vec::new();
    for q in 0..=5 {
        let dims = cotor(&k, &k, q)?;
        let expected: Vec<usize> = (0..=maxdeg).map(|p| usize::from(p == 2 * q)).collect();
        if dims != expected {
            failures.push(format!("CoTor^{q} = {dims:?}"));
        }
        if q <= 2 {
            let other = cotor_by_resolution(&k, &k, q)?;
            if other != dims {
                failures.push(format!("resolution route CoTor^{q} = {other:?}"));
            }
        }
        table.push(dims);
    }
    Ok(Outcome::new(failures, "dim 1 in chain degree 2q for q <= 5, both routes for q <= 2".into(), json!(table)))
}

/// 4: the three vanishing tests for fibrancy agree on every fixture.
fn coflat_is_fibrant() -> Result<Outcome> {
    let maxdeg = 10;
    let window = 6;
    let mut failures = Vec::new();
    let mut verdicts = json!({});
    for f in fixtures::comodule_fixtures(f2(), maxdeg)? {
        let x = &f.comodule;
        let c = x.coalgebra();
        let k = sphere_comodule(c, 0)?;
        let by_point = cotor(&k, x, 1)?[..=window].iter().all(|&d| d == 0);
        let mut by_spheres = true;
        for n in 0..=4 {
            let s = sphere_comodule(c, n)?;
            by_spheres &= cotor(&s, x, 1)?[..=window + n].iter().all(|&d| d == 0);
        }
        let mut by_disks = true;
        for n in 1..=4 {
            let d = DGComodule::trivial(&ChainComplex::disk(f2(), n, 1, maxdeg)?, c.clone())?;
            // Ext¹(D^n, X)_m sees CoTor¹(k, X) in degrees n+m-1 and n+m
            by_disks &= ext(&d, x, 1, window + 1 - n)?.iter().all(|&e| e == 0);
        }
        if by_point != by_spheres || by_point != by_disks {
            failures.push(format!("{}: S^0 {by_point}, spheres {by_spheres}, disks {by_disks}", f.name));
        }
        let reported = is_fibrant(x, window)?.fibrant;
        if reported != by_point {
            failures.push(format!("{}: is_fibrant disagrees", f.name));
        }
        verdicts[&f.name] = json!(by_point);
    }
    let fibrant = verdicts.as_object().map_or(0, |m| m.values().filter(|v| v.as_bool() == Some(true)).count());
    let total = verdicts.as_object().map_or(0, |m| m.len());
    Ok(Outcome::new(failures, format!("{total} fixtures, {fibrant} fibrant, all three tests agree"), verdicts))
}

/// 5: Postnikov towers with 7 stages for the fixtures over f2 and f4.
fn postnikov() -> Result<Outcome> {
    let maxdeg = 8;
    let stages = 7;
    let mut failures = Vec::new();
    let mut ranks = json!({});
    for name in ["f2", "f4"] {
        for f in over(name, maxdeg)? {
            let x = &f.comodule;
            let t = postnikov_tower(x, stages)?;
            let r = verify_tower(&t);
            if let Some(c) = r.first_failure() {
                failures.push(format!("{}: {} at {:?}", f.name, c.name, c.degree));
            }
            let hx = x.carrier().homology_dims();
            for n in 1..=5 {
                let hn = t.stage(n).carrier().homology_dims();
                if hn[..=n] != hx[..=n] {
                    failures.push(format!("{}: H(X({n})) = {:?} vs H(X) = {:?}", f.name, &hn[..=n], &hx[..=n]));
                }
            }
            let limit = stabilized_limit(&t)?;
            if !is_fibrant(&limit.comodule, limit.window)?.fibrant {
                failures.push(format!("{}: limit not fibrant", f.name));
            }
            if !limit.inclusion.is_quasi_iso(limit.window - 1) {
                failures.push(format!("{}: X -> limit not a quasi-isomorphism", f.name));
            }
            ranks[&f.name] = json!(t.attaching_ranks());
        }
    }
    Ok(Outcome::new(failures, "11 towers verified at maxdeg 8".into(), ranks))
}

/// 6: factorization of 50 random comodule maps.
fn factorization() -> Result<Outcome> {
    let maxdeg = 6;
    let stages = 5;
    let mut rng = gen::rng(6);
    let mut failures = Vec::new();
    let mut tops = Vec::new();
    for k in 0..50 {
        let field = if k % 2 == 0 { Field::gf(2) } else { Field::gf(3) };
        let c = Arc::new(if k % 4 < 2 { fixtures::f2(field, maxdeg) } else { fixtures::f4(field, maxdeg) });
        let x = gen::random_comodule(&c, 2, &mut rng)?;
        let y = gen::random_comodule(&c, 2, &mut rng)?;
        let f = gen::random_comodule_map(&x, &y, &mut rng)?;
        let fact = factorize(&f, stages)?;
        let r = fact.verify();
        if let Some(chk) = r.first_failure() {
            failures.push(format!("map {k}: {} at {:?}", chk.name, chk.degree));
        }
        tops.push(fact.cofibration.target().dims().to_vec());
    }
    Ok(Outcome::new(failures, "50 maps over GF(2) and GF(3), 5 stages".into(), json!(tops)))
}

/// 7: the spectral sequence on every fixture pair with fibrant left side.
fn emss() -> Result<Outcome> {
    let maxdeg = 8;
    let qmax = 3;
    let mut failures = Vec::new();
    let mut pairs = 0;
    let mut totals = json!({});
    for name in fixtures::COALGEBRA_NAMES {
        let fx = over(name, maxdeg)?;
        for x in &fx {
            if !is_fibrant(&x.comodule, maxdeg)?.fibrant {
                continue;
            }
            for y in &fx {
                pairs += 1;
                let b = cobar_bicomplex(&x.comodule, &y.comodule, qmax)?;
                let total = total_homology(&b, qmax)?;
                let h = cotensor(&x.comodule, &y.comodule)?.complex.homology_dims();
                if total[..] != h[..total.len()] {
                    failures.push(format!("{}, {}: total {total:?} vs H(X□Y) {:?}", x.name, y.name, &h[..total.len()]));
                }
                if let Some(c) = emss_check(&x.comodule, &y.comodule, qmax)?.first_failure() {
                    failures.push(format!("{}, {}: {} at {:?}: {}", x.name, y.name, c.name, c.degree, c.detail));
                }
                totals[format!("{} {}", x.name, y.name)] = json!(total);
            }
        }
    }
    Ok(Outcome::new(failures, format!("{pairs} pairs over f1..f4"), totals))
}

/// 8: fibrations among random epimorphisms are exactly those with fibrant kernel.
fn bousfield() -> Result<Outcome> {
    let maxdeg = 6;
    let mut rng = gen::rng(8);
    let mut failures = Vec::new();
    let mut fibrations = 0;
    for k in 0..50 {
        let c = Arc::new(if k % 2 == 0 { fixtures::f2(f2(), maxdeg) } else { fixtures::f4(f2(), maxdeg) });
        let e = gen::random_epimorphism(&c, 2, &mut rng)?;
        let kernel_fibrant = is_fibrant(&e.kernel()?.0, maxdeg)?.fibrant;
        let verdict = is_fibration(&e, maxdeg)?.is_fibration();
        if verdict != Some(kernel_fibrant) {
            failures.push(format!("epimorphism {k}: verdict {verdict:?}, kernel fibrant {kernel_fibrant}"));
        }
        fibrations += usize::from(kernel_fibrant);
    }
    // k -> 0 is onto but its kernel k is not fibrant
    let c = Arc::new(fixtures::f2(f2(), maxdeg));
    let k = sphere_comodule(&c, 0)?;
    let zero = DGComodule::zero(c.clone());
    let to_zero = ComoduleMap::zero(&k, &zero);
    let naive = to_zero.is_surjective_between(0, maxdeg);
    let verdict = is_fibration(&to_zero, maxdeg)?.is_fibration();
    if !(naive && verdict == Some(false)) {
        failures.push(format!("trivial(S^0) -> 0: underlying epi {naive}, verdict {verdict:?}"));
    }
    Ok(Outcome::new(
        failures,
        format!("50 epimorphisms ({fibrations} fibrations); trivial(S^0) -> 0 is epi but no fibration"),
        json!({ "fibrations": fibrations }),
    ))
}

/// 9: coinduction along f3 -> f2 preserves fibrant fixtures up to quasi-isomorphism.
fn change_of_coalgebras() -> Result<Outcome> {
    let maxdeg = 8;
    let map: CoalgebraMap = fixtures::f3_to_f2(f2(), maxdeg)?;
    let mut failures = Vec::new();
    let mut checked = Vec::new();
    for f in over("f2", maxdeg)? {
        if !is_fibrant(&f.comodule, maxdeg)?.fibrant {
            continue;
        }
        let co = coinduce(&f.comodule, &map)?;
        if !co.counit.is_quasi_iso(co.comodule.carrier(), f.comodule.carrier(), maxdeg - 1) {
            failures.push(format!("{}: counit is not a quasi-isomorphism", f.name));
        }
        checked.push(f.name.clone());
    }
    Ok(Outcome::new(failures, format!("counit X□F3 -> X on {}", checked.join(", ")), json!(checked)))
}

type Criterion = (&'static str, fn() -> Result<Outcome>);

const CRITERIA: [Criterion; 9] = [
    ("splitting", splitting),
    ("cotensor algebra", cotensor_algebra),
    ("CoTor of a point", cotor_of_point),
    ("coflat = fibrant", coflat_is_fibrant),
    ("Postnikov towers", postnikov),
    ("factorization", factorization),
    ("Eilenberg-Moore spectral sequence", emss),
    ("fibrations with fibrant kernel", bousfield),
    ("change of coalgebras", change_of_coalgebras),
];

fn run(criterion: &Criterion) -> Outcome {
    match (criterion.1)() {
        Ok(o) => o,
        Err(e) => Outcome::new(vec![format!("error: {e}")], String::new(), Value::Null),
    }
}

/// Machine reports of a fixed command list, from the library and the binary.
fn cli_reports() -> (String, String) {
    let config = SessionConfig { format: Format::Machine, verify: true, ..SessionConfig::default() };
    let fixtures_dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    let file = |name: &str| format!("{fixtures_dir}/{name}");
    let commands = vec![
        Command::Cotor { left: file("triv-k.cm"), right: file("triv-k.cm"), q: 3 },
        Command::Postnikov { input: file("triv-k.cm"), stages: 5 },
        Command::Emss { left: file("regular.cm"), right: file("triv-k.cm") },
        Command::Factorize { input: file("coaug.cmm"), stages: 5 },
    ];
    let mut library = String::new();
    for cmd in &commands {
        match run_command(cmd, &config) {
            Ok(o) => library.push_str(&render(&o, &config)),
            Err(e) => library.push_str(&format!("error: {e}\n")),
        }
    }
    let out = Process::new(env!("CARGO_BIN_EXE_cotensor"))
        .args(["--format", "machine", "--verify", "postnikov", &file("triv-k.cm"), "--stages", "5"])
        .output()
        .expect("binary runs");
    (library, String::from_utf8_lossy(&out.stdout).into_owned())
}

fn full_run() -> (Vec<Outcome>, String) {
    let outcomes: Vec<Outcome> = CRITERIA.iter().map(run).collect();
    let records: Vec<Value> =
        outcomes.iter().zip(&CRITERIA).map(|(o, c)| json!({ "criterion": c.0, "record": o.record })).collect();
    let (library, binary) = cli_reports();
    let machine = format!("{}\n{library}{binary}", serde_json::to_string_pretty(&records).expect("records serialize"));
    (outcomes, machine)
}

fn main() -> ExitCode {
    let (first, report_a) = full_run();
    let mut all_passed = true;
    for (i, (o, c)) in first.iter().zip(&CRITERIA).enumerate() {
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {} ({}): {status}: {}", i + 1, c.0, o.detail);
        all_passed &= o.passed;
    }
    let (_, report_b) = full_run();
    let same = report_a == report_b;
    println!(
        "criterion 10 (determinism): {}: two full runs, {} bytes of machine reports, {}",
        if same { "PASS" } else { "FAIL" },
        report_a.len(),
        if same { "identical" } else { "different" }
    );
    all_passed &= same;
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
