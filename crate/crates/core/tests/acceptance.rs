//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails its check or its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bbwt_core::fibzeck::{
    bwt_yk_closed, count_necklaces_formula, family_w, family_y, fib_num, fib_rotation_rank,
    fib_star, fib_word, ibbwt_fib, necklaces_no11, phi_apply, psi_fib_rot, theta_apply,
};
use bbwt_core::measures::{
    b_exact, bms_rotate, bms_valid, delta, gamma_exact, r_runs, rb_runs, smallest_bms, v_measure,
    z_measure,
};
use bbwt_core::strings::{least_rotation, rotate, run_count};
use bbwt_core::transforms::naive::sorted_rotations_naive;
use bbwt_core::transforms::{bbwt, bwt, ibbwt, lf_cycles, lf_map};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0;
const RANDOM_TRIALS: usize = 10_000;
const BMS_ROTATE_TRIALS: usize = 1_000;

type Outcome = Result<String, String>;

/// Id, name, time budget and check.
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn binary(n: usize, code: u32) -> Vec<u8> {
    (0..n).map(|j| b'a' + ((code >> j) & 1) as u8).collect()
}

fn all_binary(max_n: usize) -> impl Iterator<Item = Vec<u8>> {
    (1..=max_n).flat_map(|n| (0..1u32 << n).map(move |code| binary(n, code)))
}

fn random_words(seed: u64, count: usize, max_n: usize, max_sigma: u8) -> Vec<Vec<u8>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let sigma = rng.gen_range(1..=max_sigma);
            (0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
        })
        .collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn show(w: &[u8]) -> String {
    String::from_utf8_lossy(w).into_owned()
}

fn separation() -> Outcome {
    let mut largest = 0;
    for k in 3..=10 {
        let w = family_w(k).map_err(|e| e.to_string())?;
        let (r, rb) = (r_runs(&w).unwrap(), rb_runs(&w).unwrap());
        ensure(r == 2 * k && rb == 3, || {
            format!("k = {k}: r = {r}, rB = {rb}")
        })?;
        largest = w.len();
    }
    Ok(format!("k in [3, 10], largest n = {largest}"))
}

fn closed_form_bwt() -> Outcome {
    for k in 2..=10 {
        let closed = bwt_yk_closed(k).unwrap();
        let computed = bwt(&family_y(k).unwrap()).unwrap();
        ensure(closed == computed, || {
            format!("k = {k}: closed form differs")
        })?;
        let runs = run_count(&computed);
        let expected = if k == 2 { 5 } else { 2 * k + 2 };
        ensure(runs == expected, || {
            format!("k = {k}: {runs} runs, expected {expected}")
        })?;
    }
    Ok("k in [2, 10]".into())
}

fn clustering() -> Outcome {
    let mut checked = 0;
    let words = all_binary(14).chain(random_words(SEED, RANDOM_TRIALS, 256, 4));
    for w in words {
        let (rho, rho_b) = (run_count(&w), run_count(&bbwt(&w).unwrap()));
        ensure(rho_b <= 2 * rho, || {
            format!("{}: {rho_b} > 2 * {rho}", show(&w))
        })?;
        checked += 1;
    }
    Ok(format!("{checked} strings, 0 violations"))
}

fn psi_rotation() -> Outcome {
    let mut positions = 0;
    for k in 0..=25 {
        let lf = lf_map(&fib_word(k)).unwrap();
        for (i, &t) in lf.target.iter().enumerate() {
            let rot = psi_fib_rot(k, i as u64).unwrap();
            ensure(rot == t as u64, || {
                format!("k = {k}, i = {i}: {rot} != {t}")
            })?;
        }
        positions += lf.target.len();
    }
    Ok(format!("{positions} positions"))
}

fn rank_formula() -> Outcome {
    let mut total = 0;
    for n in 2..=20 {
        let order = sorted_rotations_naive(&fib_word(n)).unwrap();
        for (rho, &offset) in order.iter().enumerate() {
            let formula = fib_rotation_rank(n, rho as u64).unwrap();
            ensure(formula == offset as u64, || {
                format!("n = {n}, rank {rho}: {formula} != {offset}")
            })?;
        }
        total += order.len();
    }
    Ok(format!("{total} ranks"))
}

fn necklaces() -> Outcome {
    for k in 1..=20 {
        let formula = count_necklaces_formula(k).unwrap();
        let enumerated = necklaces_no11(k).unwrap().count() as u64;
        let cycles = lf_cycles(&fib_word(k)).unwrap().len() as u64;
        ensure(formula == enumerated && enumerated == cycles, || {
            format!("k = {k}: formula {formula}, enumerated {enumerated}, cycles {cycles}")
        })?;
    }
    for k in 2..=25 {
        let direct = ibbwt_fib(k).unwrap();
        ensure(direct == ibbwt(&fib_word(k)).unwrap(), || {
            format!("k = {k}: inverse differs")
        })?;
    }
    let f7 = ibbwt_fib(7).unwrap();
    ensure(f7 == b"abbbaababaaabbaaaaaba", || {
        format!("k = 7: {}", show(&f7))
    })?;
    Ok("counts for k <= 20, inverses for k in [2, 25]".into())
}

fn maximal_clustering() -> Outcome {
    let mut details = Vec::new();
    for k in [7usize, 11, 13, 17] {
        let w = ibbwt_fib(k).unwrap();
        let f = fib_word(k);
        let bound = Ratio::new(fib_num(k as i64) - 2 * k as u64, 2 * k as u64);
        let d = delta(&w).unwrap();
        let df = delta(&f).unwrap();
        let r = r_runs(&f).unwrap();
        ensure(d >= bound, || format!("k = {k}: delta = {d} < {bound}"))?;
        ensure(df <= Ratio::from_integer(2), || {
            format!("k = {k}: delta(F_k) = {df}")
        })?;
        ensure(r == 2, || format!("k = {k}: r(F_k) = {r}"))?;
        details.push(format!("k={k}: {d} >= {bound}"));
    }
    Ok(details.join("; "))
}

fn morphisms() -> Outcome {
    for w in all_binary(10) {
        let lhs = theta_apply(&w).unwrap();
        let rhs = rotate(&phi_apply(&phi_apply(&w).unwrap()).unwrap(), 2).unwrap();
        ensure(lhs == rhs, || format!("theta({}) differs", show(&w)))?;
    }
    for k in 0..=12 {
        let least = least_rotation(&fib_word(2 * k)).unwrap().0;
        ensure(fib_star(k) == least, || format!("fib_star({k}) differs"))?;
    }
    let words: Vec<Vec<u8>> = all_binary(8).collect();
    let images: Vec<Vec<u8>> = words.iter().map(|w| theta_apply(w).unwrap()).collect();
    for (s, ts) in words.iter().zip(&images) {
        for (t, tt) in words.iter().zip(&images) {
            ensure(s.cmp(t) == ts.cmp(tt), || {
                format!("order of {} and {}", show(s), show(t))
            })?;
        }
    }
    Ok(format!("{} ordered pairs", words.len() * words.len()))
}

fn round_trips_and_hierarchy() -> Outcome {
    let words = all_binary(12).chain(random_words(SEED, RANDOM_TRIALS, 256, 8));
    for w in words {
        ensure(ibbwt(&bbwt(&w).unwrap()).unwrap() == w, || {
            format!("round trip of {}", show(&w))
        })?;
    }
    for w in all_binary(10) {
        let d = delta(&w).unwrap();
        let g = gamma_exact(&w, 40, 6).exact().ok_or("gamma limit")?;
        let b = b_exact(&w, 14).exact().ok_or("b limit")?;
        let (v, z) = (v_measure(&w).unwrap(), z_measure(&w).unwrap());
        ensure(
            d <= Ratio::from_integer(g as u64) && g <= b && b <= v && b <= z,
            || format!("{}: delta {d}, gamma {g}, b {b}, v {v}, z {z}", show(&w)),
        )?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..BMS_ROTATE_TRIALS {
        let n = rng.gen_range(1..=12);
        let sigma = rng.gen_range(1..=3);
        let w: Vec<u8> = (0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect();
        let offset = rng.gen_range(0..n);
        let scheme = smallest_bms(&w, 14).unwrap();
        let rotated = bms_rotate(&w, &scheme, offset).unwrap();
        let target = rotate(&w, offset as isize).unwrap();
        ensure(
            bms_valid(&target, &rotated) && rotated.size() <= 2 * scheme.size() + 1,
            || format!("{} rotated by {offset}", show(&w)),
        )?;
    }
    Ok(format!(
        "round trips n <= 12 + {RANDOM_TRIALS} random; hierarchy n <= 10; {BMS_ROTATE_TRIALS} rotations"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            1,
            "separation r = 2k, rB = 3",
            Duration::from_secs(30),
            separation,
        ),
        (
            2,
            "closed-form BWT of y_k",
            Duration::from_secs(30),
            closed_form_bwt,
        ),
        (
            3,
            "clustering rho(BBWT) <= 2 rho",
            Duration::from_secs(60),
            clustering,
        ),
        (
            4,
            "LF map as Zeckendorf rotation",
            Duration::from_secs(10),
            psi_rotation,
        ),
        (
            5,
            "rotation-rank formula",
            Duration::from_secs(60),
            rank_formula,
        ),
        (
            6,
            "necklace correspondence",
            Duration::from_secs(60),
            necklaces,
        ),
        (
            7,
            "maximal clustering of delta",
            Duration::from_secs(120),
            maximal_clustering,
        ),
        (8, "morphism identities", Duration::from_secs(60), morphisms),
        (
            9,
            "round trips and hierarchy",
            Duration::from_secs(120),
            round_trips_and_hierarchy,
        ),
    ];
    let mut failures = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (pass, detail) = match outcome {
            Ok(detail) if elapsed <= budget => (true, detail),
            Ok(detail) => (false, format!("{detail}; over budget {budget:?}")),
            Err(why) => (false, why),
        };
        if !pass {
            failures += 1;
        }
        println!(
            "criterion {id} [{name}]: {} ({detail}; {:.2}s of {}s)",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
