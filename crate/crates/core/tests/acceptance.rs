//! Acceptance run. Each criterion verifies its checks on the full grids
//! (plus a few known small values), prints one `PASS` or `FAIL` line with its
//! runtime against the bound, and the process exits nonzero if any fails.
//!
//! Runtime bounds are enforced for optimized builds. Debug builds still
//! report the time but only fail on wrong results.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use catdet::combinatorics::{carlitz, catalan, q_catalan};
use catdet::exact_arith::{int, int_binomial, ExactInt};
use catdet::identity_suite::{build_matrix, coherence, lookup, verify_range, GridOverrides, Params};
use catdet::linalg::{det_bareiss, det_condensation, det_cofactor, RingMatrix};
use catdet::modular_lab::{conjecture_search, lucas_binomial_mod2, odd_power_indices, ConjectureId, ConjectureStatus, SearchBounds};
use catdet::qseries::{q_int, QPoly};
use catdet::value::Value;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

struct Criterion {
    title: &'static str,
    bound: Duration,
    run: fn() -> Outcome,
}

/// Runs every listed check on its full registry grid and reports the number
/// of points verified.
fn full_grids(ids: &[&str]) -> Outcome {
    let mut points = 0;
    for id in ids {
        let check = lookup(id).map_err(|e| e.to_string())?;
        let grid = GridOverrides::default().apply(check, false).map_err(|e| e.to_string())?;
        let results = verify_range(id, &grid, false).map_err(|e| e.to_string())?;
        if let Some(bad) = results.iter().find(|r| !r.passed()) {
            return Err(format!("{id} fails at {} ({:?})", bad.params, bad.error));
        }
        points += results.len();
    }
    Ok(format!("{points} points"))
}

fn expect(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn family_det(id: &str, params: &[(&str, i64)]) -> Result<Value, String> {
    let mut p = Params::new();
    for (name, v) in params {
        p.set(name, *v);
    }
    let m = build_matrix(id, &p).map_err(|e| e.to_string())?;
    m.det().map(Value::normalize).map_err(|e| e.to_string())
}

fn catalan_hankel() -> Outcome {
    expect(family_det("eq1", &[("n", 4)])? == Value::int(14), "the 4x4 determinant is not 14")?;
    full_grids(&["eq1"])
}

fn alternating_sum() -> Outcome {
    let row = catalan(4) - catalan(3) * 7 + catalan(2) * 15 - catalan(1) * 10 + catalan(0);
    expect(row == int(0), "the n = 4 row does not vanish")?;
    full_grids(&["eq2"])
}

fn catalan_power_determinants() -> Outcome {
    for n in 0..=20 {
        for k in 1..=8 {
            let a = family_det("eq54", &[("n", n), ("k", k)])?;
            let b = family_det("eq55", &[("n", n), ("k", k)])?;
            expect(a == b, &format!("the two families differ at n = {n}, k = {k}"))?;
        }
    }
    full_grids(&["eq54", "eq55"])
}

fn hankel_bridge() -> Outcome {
    full_grids(&["eq65", "eq65p", "eq67"])
}

fn super_catalan_forms() -> Outcome {
    full_grids(&["eq74", "eq75", "eq76"])
}

fn hilbert_bridge() -> Outcome {
    full_grids(&["eq72", "eq72p", "eq73"])
}

fn carlitz_determinants() -> Outcome {
    expect(carlitz(2) == QPoly::from_coeffs(&[1, 1]), "c_2 differs from 1+q")?;
    expect(carlitz(3) == QPoly::from_coeffs(&[1, 2, 1, 1]), "c_3 differs from 1+2q+q^2+q^3")?;
    full_grids(&["eq77", "eq78", "eq79"])
}

fn q_catalan_determinants() -> Outcome {
    expect(q_catalan(2) == QPoly::from_coeffs(&[1, 0, 1]), "C_2(q) differs from 1+q^2")?;
    let c3 = &QPoly::from_coeffs(&[1, -1, 1]) * &q_int(5);
    expect(q_catalan(3) == c3, "C_3(q) differs from (1-q+q^2)[5]")?;
    full_grids(&["eq83", "eq84", "eq85", "eq86", "eq7"])
}

fn andrews_type_sums() -> Outcome {
    full_grids(&["eq89", "eq90"])
}

fn balance_products() -> Outcome {
    full_grids(&["eq91", "eq92", "eq96", "eq97", "eq98", "eq99", "eq100"])
}

fn null_spaces() -> Outcome {
    full_grids(&["eq36", "eq39", "eq47", "eq49", "eq112", "eq113", "eq114", "eq115", "thm15a", "thm15b"])
}

fn tyson_systems() -> Outcome {
    full_grids(&["eq68r", "eq68", "eq69", "eq70", "eq71"])
}

fn parity_suite() -> Outcome {
    let grids = full_grids(&["eq106", "eq107"])?;
    for m in 0..512u64 {
        expect(odd_power_indices(m).len() == 1, &format!("uniqueness fails at m = {m}"))?;
    }
    for a in 0..=256u64 {
        for b in 0..=256u64 {
            let exact = int_binomial(a as i64, b as i64).is_odd() as u8;
            expect(lucas_binomial_mod2(a, b) == exact, &format!("Lucas parity fails at ({a}, {b})"))?;
        }
    }
    Ok(format!("{grids}, uniqueness m < 512, Lucas a, b <= 256"))
}

fn conjecture_searches() -> Outcome {
    let plan = [
        (ConjectureId::C12, SearchBounds { n_max: 32, k_max: 0, m_max: 0 }),
        (ConjectureId::C13a, SearchBounds { n_max: 32, k_max: 6, m_max: 0 }),
        (ConjectureId::C13b, SearchBounds { n_max: 16, k_max: 0, m_max: 4 }),
        (ConjectureId::C14, SearchBounds { n_max: 81, k_max: 0, m_max: 0 }),
    ];
    let mut notes = Vec::new();
    for (id, bounds) in plan {
        let first = conjecture_search(id, bounds).map_err(|e| e.to_string())?;
        let again = conjecture_search(id, bounds).map_err(|e| e.to_string())?;
        let as_json = |r| serde_json::to_value(r).map_err(|e| e.to_string());
        expect(as_json(&first)? == as_json(&again)?, &format!("{} report is not reproducible", id.as_str()))?;
        match first.status {
            ConjectureStatus::VerifiedUpTo => notes.push(format!("{} verified-up-to {}", id.as_str(), first.verified_up_to)),
            ConjectureStatus::Counterexample => {
                let c = first.first_counterexample.as_ref().ok_or("counterexample without data")?;
                expect(c.reverified, &format!("{} counterexample was not reverified", id.as_str()))?;
                notes.push(format!(
                    "{} counterexample at {:?} (lhs {}, rhs {})",
                    id.as_str(),
                    c.params,
                    c.lhs,
                    c.rhs
                ));
            }
        }
    }
    Ok(notes.join("; "))
}

fn engines_and_coherence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let cases = 240;
    for case in 0..cases {
        let n = rng.gen_range(0..=6);
        let m: RingMatrix<ExactInt> = RingMatrix::square(n, |_, _| int(rng.gen_range(-9..=9)));
        let d = det_bareiss(&m).map_err(|e| e.to_string())?;
        let same = det_condensation(&m).map_err(|e| e.to_string())? == d && det_cofactor(&m).map_err(|e| e.to_string())? == d;
        expect(same, &format!("engines disagree on random case {case}"))?;
    }
    let pairs = coherence::pairs();
    for pair in pairs {
        let bad = pair.failures().map_err(|e| e.to_string())?;
        expect(bad.is_empty(), &format!("{} does not reduce to {}", pair.q_family, pair.classical_family))?;
    }
    let grids = full_grids(&["eq30"])?;
    Ok(format!("{cases} engine cases, {} coherence pairs, {grids}", pairs.len()))
}

fn criteria() -> Vec<Criterion> {
    let s = Duration::from_secs;
    vec![
        Criterion { title: "Catalan Hankel determinant", bound: s(5), run: catalan_hankel },
        Criterion { title: "alternating Catalan sum", bound: s(1), run: alternating_sum },
        Criterion { title: "higher Catalan determinants", bound: s(10), run: catalan_power_determinants },
        Criterion { title: "shifted Hankel bridge and product", bound: s(10), run: hankel_bridge },
        Criterion { title: "super-Catalan forms and condensation", bound: s(30), run: super_catalan_forms },
        Criterion { title: "Hilbert-type bridge", bound: s(10), run: hilbert_bridge },
        Criterion { title: "Carlitz determinants and q = -1 collapse", bound: s(60), run: carlitz_determinants },
        Criterion { title: "q-Catalan determinants", bound: s(60), run: q_catalan_determinants },
        Criterion { title: "Andrews-type sums and determinants", bound: s(60), run: andrews_type_sums },
        Criterion { title: "q-products and balance identities", bound: s(120), run: balance_products },
        Criterion { title: "null spaces", bound: s(60), run: null_spaces },
        Criterion { title: "Tyson identity and Hankel shifts", bound: s(60), run: tyson_systems },
        Criterion { title: "mod 2 suite", bound: s(30), run: parity_suite },
        Criterion { title: "conjecture searches", bound: s(120), run: conjecture_searches },
        Criterion { title: "engine agreement, coherence, recurrence", bound: s(60), run: engines_and_coherence },
    ]
}

fn main() -> ExitCode {
    let enforce_bounds = !cfg!(debug_assertions);
    let mut failed = 0;
    for (i, c) in criteria().into_iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let slow = enforce_bounds && elapsed > c.bound;
        let verdict = match (&outcome, slow) {
            (Ok(_), false) => "PASS",
            _ => "FAIL",
        };
        let detail = match &outcome {
            Ok(note) if slow => format!("{note}; over the time bound"),
            Ok(note) => note.clone(),
            Err(e) => e.clone(),
        };
        println!(
            "{verdict} criterion {:>2}: {} [{:.2} s, bound {} s] {detail}",
            i + 1,
            c.title,
            elapsed.as_secs_f64(),
            c.bound.as_secs()
        );
        if verdict == "FAIL" {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
