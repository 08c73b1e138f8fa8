//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! if any criterion fails.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rookq::arith::parse_poly;
use rookq::bitrace::{btr_def, btr_matrix, dim_rn, hl_inner_matrix, hl_inner_pbasis, regular_char};
use rookq::characters::{chi_at_one, chi_empty, CharacterEngine, CharacterTable, Method, TableSpec};
use rookq::identities::identity_suites;
use rookq::par::Execution;
use rookq::seminormal::relations_hold;
use rookq::shapes::{binomial, f_lambda, factorial, partitions_of, partitions_up_to};
use rookq::symfunc::classical_char;
use rookq::{LaurentPoly, Partition, Var};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_table() -> Vec<(Partition, Partition, LaurentPoly)> {
    let text = include_str!("data/table1.csv");
    let mut lines = text.lines().filter(|l| !l.starts_with('#') && !l.is_empty());
    let header: Vec<Partition> = lines
        .next()
        .unwrap()
        .split(';')
        .skip(1)
        .map(|s| s.parse().unwrap())
        .collect();
    let mut out = Vec::new();
    for line in lines {
        let fields: Vec<&str> = line.split(';').collect();
        let lambda: Partition = fields[0].parse().unwrap();
        for (mu, v) in header.iter().zip(&fields[1..]) {
            out.push((lambda.clone(), mu.clone(), parse_poly(v, Var::Q).unwrap()));
        }
    }
    out
}

fn table_reproduction() -> Outcome {
    let golden = golden_table();
    for method in [Method::Oracle, Method::Iterative, Method::Mn] {
        let engine = CharacterEngine::new();
        let mut spec = TableSpec::new(5);
        spec.below_top = true;
        spec.methods = vec![method];
        spec.execution = Execution::Sequential;
        let table = CharacterTable::build(&engine, &spec).map_err(|e| e.to_string())?;
        ensure(table.len() == golden.len(), || {
            format!("{} cells, expected {}", table.len(), golden.len())
        })?;
        for (lambda, mu, want) in &golden {
            let got = &table.get(lambda, mu).ok_or("missing cell")?.chi;
            ensure(got == want, || {
                format!("{}: chi^{}_{} = {}, table has {}", method, lambda, mu, got, want)
            })?;
        }
    }
    Ok(format!("{} cells, oracle/iterative/mn each exact", golden.len()))
}

fn cross_method() -> Outcome {
    let engine = CharacterEngine::new();
    let mut cells = 0;
    for n in 0..=6 {
        let mut spec = TableSpec::new(n);
        spec.methods = vec![Method::Oracle, Method::Iterative, Method::Mn];
        if n <= 5 {
            spec.methods.push(Method::Seminormal);
        }
        let table = CharacterTable::build(&engine, &spec).map_err(|e| e.to_string())?;
        for row in &table.cells {
            for v in row {
                ensure(v.chi.is_ordinary() && v.chi.has_integer_coeffs(), || {
                    format!("chi^{}_{} = {} is not in Z[q]", v.lambda, v.mu, v.chi)
                })?;
            }
        }
        cells += table.len();
    }
    Ok(format!(
        "{} cells for n <= 6, seminormal included for n <= 5",
        cells
    ))
}

fn compact_formulas() -> Outcome {
    let engine = CharacterEngine::new();
    let mut checked = 0;
    for n in 0..=6 {
        for mu in partitions_of(n) {
            for lambda in partitions_up_to(n) {
                let oracle = engine.chi_oracle(&lambda, &mu).map_err(|e| e.to_string())?;
                for m in [Method::Hook, Method::TwoRow] {
                    if m.applies(&lambda) {
                        let v = engine.chi(&lambda, &mu, m).map_err(|e| e.to_string())?;
                        ensure(v == oracle, || {
                            format!("{} at {} / {}: {} vs {}", m, lambda, mu, v, oracle)
                        })?;
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{} hook/two-row evaluations match the oracle", checked))
}

fn adjudication() -> Outcome {
    let engine = CharacterEngine::new();
    let lambda: Partition = "[3,1,1]".parse().unwrap();
    let mu: Partition = "[3,2,1]".parse().unwrap();
    let chi = engine.chi_oracle(&lambda, &mu).map_err(|e| e.to_string())?;
    let at_one = chi.evaluate(&rookq::arith::int(1)).map_err(|e| e.to_string())?;
    let expected = chi_at_one(&lambda, &mu).map_err(|e| e.to_string())?;
    ensure(at_one == rookq::arith::int(expected), || {
        format!("chi(1) = {} but the q = 1 character is {}", at_one, expected)
    })?;
    // |lambda| < |mu|, so the symmetric-group value only exists through the
    // sub-multisets of mu of weight 5
    ensure(
        classical_char(&lambda, &"[3,2]".parse().unwrap()) == Ok(0),
        || "chi^{311}_{32} != 0".into(),
    )?;
    let candidates = ["2*q^3 - 10*q^2 + 10*q - 2", "q^3 - 10*q^2 + 10*q - 2"];
    let hits: Vec<&str> = candidates
        .iter()
        .copied()
        .filter(|c| parse_poly(c, Var::Q).unwrap() == chi)
        .collect();
    ensure(hits.len() == 1, || {
        format!("oracle gives {}, matching {:?}", chi, hits)
    })?;
    ensure(hits[0] == candidates[0], || format!("oracle picked {}", hits[0]))?;
    Ok(format!(
        "chi = {} (vanishes at q = 1); the other candidate gives -1",
        chi
    ))
}

fn identities() -> Outcome {
    let engine = CharacterEngine::new();
    let suites = identity_suites(&engine, 6, Execution::Parallel);
    let mut total = 0;
    for s in &suites {
        ensure(s.passed(), || format!("{} fails on {:?}", s.name, s.failures))?;
        total += s.cases;
    }
    Ok(format!("{} suites, {} cases, weight <= 6", suites.len(), total))
}

fn bitrace() -> Outcome {
    let engine = CharacterEngine::new();
    let mut pairs = 0;
    for n in 0..=4 {
        for mu in partitions_of(n) {
            for nu in partitions_of(n) {
                let a = btr_matrix(mu.parts(), nu.parts()).map_err(|e| e.to_string())?;
                let b = btr_def(&engine, mu.parts(), nu.parts(), Method::Mn).map_err(|e| e.to_string())?;
                ensure(a == b, || format!("btr({}, {}): {} vs {}", mu, nu, a, b))?;
                pairs += 1;
            }
        }
    }
    let fives = partitions_of(5);
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..10 {
        let mu = &fives[rng.gen_range(0..fives.len())];
        let nu = &fives[rng.gen_range(0..fives.len())];
        let a = btr_matrix(mu.parts(), nu.parts()).map_err(|e| e.to_string())?;
        let b = btr_def(&engine, mu.parts(), nu.parts(), Method::Mn).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("btr({}, {}): {} vs {}", mu, nu, a, b))?;
    }
    let mut inner = 0;
    for n in 0..=5 {
        for a in partitions_of(n) {
            for b in partitions_of(n) {
                let x = hl_inner_matrix(a.parts(), b.parts()).map_err(|e| e.to_string())?;
                let y = hl_inner_pbasis(a.parts(), b.parts()).map_err(|e| e.to_string())?;
                ensure(x == y, || format!("<q_{}, q_{}>: {} vs {}", a, b, x, y))?;
                inner += 1;
            }
        }
    }
    Ok(format!(
        "{} exhaustive pairs + 10 random at n = 5; {} inner products",
        pairs, inner
    ))
}

fn regular() -> Outcome {
    let engine = CharacterEngine::new();
    for n in 0..=4 {
        let ones = vec![1; n];
        for mu in partitions_of(n) {
            let a = regular_char(&mu).map_err(|e| e.to_string())?;
            let b = btr_def(&engine, mu.parts(), &ones, Method::Mn).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("regular character at {}: {} vs {}", mu, a, b))?;
        }
    }
    let dims: Vec<u128> = (0..=5).map(dim_rn).collect();
    ensure(dims == [1, 2, 7, 34, 209, 1546], || {
        format!("dimensions {:?}", dims)
    })?;
    for (n, &d) in dims.iter().enumerate() {
        let r = regular_char(&Partition::ones(n)).map_err(|e| e.to_string())?;
        ensure(r == LaurentPoly::from_int(Var::Q, d as i64), || {
            format!("regular character of 1^{} = {}", n, r)
        })?;
    }
    Ok(format!("dimensions {:?}", dims))
}

fn structural() -> Outcome {
    let engine = CharacterEngine::new();
    for n in 0..=8 {
        for mu in partitions_of(n) {
            let want = chi_empty(&mu);
            ensure(
                want == LaurentPoly::var_pow(Var::Q, (n - mu.len()) as i64),
                || format!("closed form at {}", mu),
            )?;
            for m in [Method::Oracle, Method::Mn] {
                let got = engine
                    .chi(&Partition::empty(), &mu, m)
                    .map_err(|e| e.to_string())?;
                ensure(got == want, || format!("{}: chi^[]_{} = {}", m, mu, got))?;
            }
        }
    }
    for n in 0..=6 {
        let mu = Partition::ones(n);
        for lambda in partitions_up_to(n) {
            let want =
                LaurentPoly::from_int(Var::Q, (binomial(n, lambda.weight()) * f_lambda(&lambda)) as i64);
            for m in [Method::Oracle, Method::Mn] {
                let got = engine.chi(&lambda, &mu, m).map_err(|e| e.to_string())?;
                ensure(got == want, || format!("{}: chi^{}_{} = {}", m, lambda, mu, got))?;
            }
        }
    }
    for n in 0..=7 {
        let s: u64 = partitions_of(n).iter().map(|l| f_lambda(l).pow(2)).sum();
        ensure(s == factorial(n), || format!("sum f^2 = {} at n = {}", s, n))?;
    }
    Ok("empty-shape values n <= 8, (1^n) columns n <= 6, sum f^2 n <= 7".into())
}

fn seminormal_relations() -> Outcome {
    let mut shapes = 0;
    for n in 0..=5 {
        for lambda in partitions_up_to(n) {
            let ok = relations_hold(&lambda, n).map_err(|e| e.to_string())?;
            ensure(ok, || format!("relations fail on V^{} for n = {}", lambda, n))?;
            shapes += 1;
        }
    }
    Ok(format!(
        "{} modules, traces integral (see the cross-method check)",
        shapes
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 table reproduction", table_reproduction),
        ("2 cross-method equality", cross_method),
        ("3 compact formulas", compact_formulas),
        ("4 discrepancy adjudication", adjudication),
        ("5 identity suites", identities),
        ("6 bitrace equivalence", bitrace),
        ("7 regular character and dimension", regular),
        ("8 structural invariants", structural),
        ("9 seminormal relations", seminormal_relations),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {:<36} {:>7.2}s  {}", name, secs, detail),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {:<36} {:>7.2}s  {}", name, secs, detail)
            }
        }
    }
    if failed > 0 {
        println!("{} criteria failed", failed);
        std::process::exit(1);
    }
    println!("all criteria passed");
}
