//! Acceptance run: one PASS/FAIL line per criterion with pinned limits.
//! With ACCEPTANCE_STRICT set, exits nonzero when any criterion fails.
//! ACCEPTANCE_ONLY=1,3 restricts the run to the listed criteria.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use cherednik2::hom::diagram::morphism_diagram;
use cherednik2::hom::dimension::{dimension_two_labels, rational_grid_c0, search_dimension_two};
use cherednik2::hom::sweep::{param_grid, sweep};
use cherednik2::hom::hom_dim_bruteforce;
use cherednik2::labels::{character_inner, enumerate_labels, GroupElement, Label};
use cherednik2::oracle::{relation_check, y_act_oracle};
use cherednik2::repro::{repro_example35, repro_example36};
use cherednik2::singular::{construct, is_applicable, Family};
use common::{has_degenerate, random_elem, random_label, random_params, synthesize};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const EX35_LIMIT: Duration = Duration::from_secs(1);
const EX36_LIMIT: Duration = Duration::from_secs(5);
const ORACLE_LIMIT: Duration = Duration::from_secs(60);
const ORACLE_SAMPLES: usize = 500;
const ANNIHILATION_LIMIT: Duration = Duration::from_secs(120);
const PER_CLAUSE: usize = 20;
const SWEEP_LIMIT: Duration = Duration::from_secs(600);
const SWEEP_MAX_DEGREE: u32 = 25;
const DIM_TWO_LIMIT: Duration = Duration::from_secs(120);
const PROPERTY_LIMIT: Duration = Duration::from_secs(60);
const PROPERTY_SAMPLES: usize = 200;

struct Outcome {
    pass: bool,
    detail: String,
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let mut o = f();
    let el = t.elapsed();
    o.detail = format!("{} [{:.3} s, limit {} s]", o.detail, el.as_secs_f64(), limit.as_secs());
    if el > limit {
        o.pass = false;
        o.detail.push_str(" time limit exceeded");
    }
    o
}

fn example35() -> Outcome {
    match repro_example35() {
        Ok(rep) => Outcome {
            pass: rep.ok(),
            detail: if rep.ok() {
                format!("coefficients a={:?} b={:?} and polynomial match exactly", rep.a, rep.b)
            } else {
                format!("mismatches {:?}, singular={}", rep.mismatches, rep.singular)
            },
        },
        Err(e) => Outcome { pass: false, detail: format!("error: {e}") },
    }
}

fn example36() -> Outcome {
    match repro_example36() {
        Ok(rep) => {
            let bad = rep.mismatched_rows();
            let pass = rep.ok() && rep.primitive_firings == 21;
            Outcome {
                pass,
                detail: format!(
                    "{} primitive firings, unexpected {:?}, missing {:?}, rows not matching golden: {:?}",
                    rep.primitive_firings, rep.unexpected, rep.missing, bad
                ),
            }
        }
        Err(e) => Outcome { pass: false, detail: format!("error: {e}") },
    }
}

fn oracle_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let mut failures = Vec::new();
    for s in 0..ORACLE_SAMPLES {
        let r = rng.gen_range(1..=6);
        let p = random_params(&mut rng, r);
        let label = random_label(&mut rng, r);
        let e = random_elem(&mut rng, label, &p, 4, 30);
        for axis in [1u8, 2] {
            match y_act_oracle(&e, axis) {
                Ok(o) if o == e.y_act(axis) => {}
                Ok(_) => failures.push(format!("sample {s} axis {axis}: differs")),
                Err(err) => failures.push(format!("sample {s} axis {axis}: {err}")),
            }
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!("{ORACLE_SAMPLES} samples, {} mismatches {:?}", failures.len(), failures.iter().take(3).collect::<Vec<_>>()),
    }
}

fn annihilation() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for family in Family::ALL {
        let mut done = 0;
        let mut degenerate = 0;
        let mut attempts = 0;
        let want_degenerate = if has_degenerate(family) { 3 } else { 0 };
        while (done < PER_CLAUSE || degenerate < want_degenerate) && attempts < 20_000 {
            attempts += 1;
            let ask = degenerate < want_degenerate && done % 4 == 0;
            let Some(inst) = synthesize(&mut rng, family, ask) else { continue };
            if !is_applicable(&inst.params, &inst.label, &inst.tag) {
                failures.push(format!("{family}: synthesized instance not applicable ({})", inst.tag));
                continue;
            }
            let (e, ledger) = match construct(&inst.params, &inst.label, &inst.tag) {
                Ok(x) => x,
                Err(err) => {
                    failures.push(format!("{family} {}: {err}", inst.tag));
                    continue;
                }
            };
            let vanishing = ledger.clearing_order > 0
                || ledger.rec_system.as_ref().is_some_and(|rs| rs.s.iter().any(num_traits::Zero::is_zero));
            let oracle_zero = [1u8, 2].iter().all(|&a| y_act_oracle(&e, a).map(|v| v.is_zero()).unwrap_or(false));
            if e.is_zero() || !e.is_singular() || !oracle_zero {
                failures.push(format!("{family} {} {:?}: not singular", inst.tag, inst.params.d));
            }
            done += 1;
            if vanishing {
                degenerate += 1;
            }
        }
        if done < PER_CLAUSE || degenerate < want_degenerate {
            failures.push(format!("{family}: only {done} instances, {degenerate} degenerate"));
        }
        counts.push(format!("{family}={done}/{degenerate}"));
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!("instances/degenerate {}; failures {:?}", counts.join(" "), failures.iter().take(3).collect::<Vec<_>>()),
    }
}

fn classification_sweep() -> Outcome {
    let grid = param_grid(&[2, 3, 4], &rational_grid_c0(), 8);
    let s = sweep(&grid, SWEEP_MAX_DEGREE);
    let genuine: Vec<_> = s.genuine().collect();
    let false_neg = genuine.iter().filter(|d| !d.fires).count();
    Outcome {
        pass: genuine.is_empty(),
        detail: format!(
            "{} parameter sets, {} ordered pairs, {} agree, {} beyond degree cap, {} unexplained ({} firing with zero hom space, {} missed), max dim {}",
            s.param_sets,
            s.pairs_checked,
            s.agreements,
            s.discrepancies.len() - genuine.len(),
            genuine.len(),
            genuine.len() - false_neg,
            false_neg,
            s.max_dim
        ),
    }
}

fn dimension_two() -> Outcome {
    let found = search_dimension_two(&[3, 4], &[1, -1, 2, -2], 8, SWEEP_MAX_DEGREE, 2);
    let mut dims = Vec::new();
    for inst in &found {
        let p = Arc::new(inst.params.clone());
        let (from, to) = dimension_two_labels(inst.i, inst.j, inst.k);
        dims.push(hom_dim_bruteforce(&from, &to, &p, SWEEP_MAX_DEGREE).unwrap_or(usize::MAX));
    }
    let golden = cherednik2::repro::example36_golden().expect("golden data");
    let p = Arc::new(golden.params.clone());
    let (from, to) = (Label::Pair(1, 2), Label::Pair(0, 1));
    let brute = hom_dim_bruteforce(&from, &to, &p, SWEEP_MAX_DEGREE).unwrap_or(usize::MAX);
    let (maps, rank) = match morphism_diagram(&p).and_then(|d| d.morphisms_between(&from, &to, false)) {
        Ok(groups) => groups.iter().map(|(_, hs, rk)| (hs.len(), *rk)).max_by_key(|x| x.1).unwrap_or((0, 0)),
        Err(_) => (0, 0),
    };
    let pass = !found.is_empty() && dims.iter().all(|&d| d == 2) && brute == 2 && maps >= 3 && rank == 2;
    Outcome {
        pass,
        detail: format!(
            "search found {} instance(s) with brute dims {:?}; example pair:1,2 -> pair:0,1 brute dim {}, {} constructed maps of rank {}",
            found.len(),
            dims,
            brute,
            maps,
            rank
        ),
    }
}

fn properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let mut failures = Vec::new();
    for s in 0..PROPERTY_SAMPLES {
        let r = rng.gen_range(1..=5);
        let p = random_params(&mut rng, r);
        let label = random_label(&mut rng, r);
        let e = random_elem(&mut rng, label, &p, 4, 12);
        if e.y_act(1).y_act(2) != e.y_act(2).y_act(1) {
            failures.push(format!("sample {s}: y1 y2 != y2 y1"));
        }
        let t = GroupElement::transposition(r);
        let te = e.w_act_rational(&t).unwrap();
        let lhs = e.y_act(1).w_act_rational(&t).unwrap();
        if lhs != te.y_act(2) {
            failures.push(format!("sample {s}: transposition equivariance"));
        }
        for i in [1u8, 2] {
            for j in [1u8, 2] {
                if !relation_check(&e, i, j).unwrap_or(false) {
                    failures.push(format!("sample {s}: relation [y{i}, x{j}]"));
                }
            }
        }
    }
    for r in 2..=5u32 {
        let labels = enumerate_labels(r);
        for a in &labels {
            for b in &labels {
                let want = if a == b { 1 } else { 0 };
                match character_inner(a, b, r) {
                    Ok(v) if v == cherednik2::arith::int(want) => {}
                    _ => failures.push(format!("r={r}: <{a}, {b}> != {want}")),
                }
            }
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!(
            "{PROPERTY_SAMPLES} samples plus character orthogonality for r=2..5, {} failures {:?}",
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    }
}

fn main() {
    let criteria: Vec<(&str, Duration, fn() -> Outcome)> = vec![
        ("recursive-system example (r=4)", EX35_LIMIT, example35),
        ("worked table at r=3, c0=1, d=(5,0,-5)", EX36_LIMIT, example36),
        ("closed-form y-action equals the oracle", ORACLE_LIMIT, oracle_equivalence),
        ("annihilation of every constructor clause", ANNIHILATION_LIMIT, annihilation),
        ("rules fire iff hom space is nonzero", SWEEP_LIMIT, classification_sweep),
        ("dimension-two hom spaces", DIM_TWO_LIMIT, dimension_two),
        ("property batteries", PROPERTY_LIMIT, properties),
    ];
    let filter = std::env::var("ACCEPTANCE_ONLY").ok();
    let mut failed = 0;
    for (n, (name, limit, f)) in criteria.into_iter().enumerate() {
        let id = n + 1;
        if filter.as_deref().is_some_and(|only| !only.split(',').any(|x| x.trim() == id.to_string())) {
            continue;
        }
        let o = timed(limit, f);
        if !o.pass {
            failed += 1;
        }
        println!("{} criterion {id}: {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    // Known failures are reported above; a strict run turns them into a
    // nonzero exit status.
    if failed > 0 {
        println!("{failed} criteria failed");
        if std::env::var_os("ACCEPTANCE_STRICT").is_some() {
            std::process::exit(1);
        }
    }
}
