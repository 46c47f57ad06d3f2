use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{summarize, Cases, Tally};
use crate::error::{Error, Result};
use crate::fibzeck::{
    bwt_yk_closed, count_necklaces_formula, family_w, family_y, fib_num, fib_rotation_rank,
    fib_star, fib_word, ibbwt_fib, necklaces_no11, phi_apply, psi_fib, psi_fib_rot, theta_apply,
};
use crate::limits::Limits;
use crate::measures::{
    b_exact, bms_rotate, bms_valid, delta, gamma_exact, r_runs, rb_runs, smallest_bms, v_measure,
    z_measure,
};
use crate::strings::{least_rotation, rotate, run_count};
use crate::transforms::{bbwt, bwt, ibbwt, ibwt, lf_cycles, lf_map, sorted_rotations};

/// Longest length enumerated exhaustively.
const MAX_EXHAUSTIVE_N: usize = 30;

fn binary(n: usize, code: u64) -> Vec<u8> {
    (0..n).map(|j| b'a' + ((code >> j) & 1) as u8).collect()
}

fn exhaustive_n(limits: &Limits, default: usize) -> Result<usize> {
    let n = limits.max_n.unwrap_or(default);
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::InvalidArgument(format!(
            "max_n = {n} exceeds {MAX_EXHAUSTIVE_N} for exhaustive enumeration"
        )));
    }
    Ok(n)
}

fn random_string(rng: &mut ChaCha8Rng, n: usize, sigma: u8) -> Vec<u8> {
    (0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
}

fn random_strings(limits: &Limits, max_n: usize, max_sigma: u8) -> Vec<Vec<u8>> {
    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
    (0..limits.trials)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let sigma = rng.gen_range(1..=max_sigma);
            random_string(&mut rng, n, sigma)
        })
        .collect()
}

fn roundtrip_check(t: &mut Tally, w: &[u8]) -> Result<()> {
    let back = ibbwt(&bbwt(w)?)?;
    t.check(back == w, || {
        format!("ibbwt(bbwt({})) = {}", summarize(w), summarize(&back))
    });
    let rot = ibwt(&bwt(w)?)?;
    let least = least_rotation(w)?.0;
    t.check(rot == least, || {
        format!("ibwt(bwt({})) = {}", summarize(w), summarize(&rot))
    });
    Ok(())
}

pub(super) fn roundtrip(limits: &Limits, cases: &mut Cases) -> Result<()> {
    for n in 1..=exhaustive_n(limits, 12)? {
        let mut t = Tally::default();
        for code in 0..1u64 << n {
            roundtrip_check(&mut t, &binary(n, code))?;
        }
        cases.push_tally(format!("all binary strings, n = {n}"), t);
    }
    let mut t = Tally::default();
    for w in random_strings(limits, 256, 4) {
        roundtrip_check(&mut t, &w)?;
    }
    cases.push_tally(
        format!("{} random strings, sigma <= 4, n <= 256", limits.trials),
        t,
    );

    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed ^ 0x5eed);
    let mut t = Tally::default();
    for (n, sigma) in [(1_000, 2), (5_000, 3), (10_000, 4), (10_000, 26)] {
        roundtrip_check(&mut t, &random_string(&mut rng, n, sigma))?;
    }
    cases.push_tally("long random strings, n <= 10000", t);
    Ok(())
}

fn clustering_check(t: &mut Tally, w: &[u8]) -> Result<()> {
    let (rho, rho_b) = (run_count(w), run_count(&bbwt(w)?));
    t.check(rho_b <= 2 * rho, || {
        format!("rho(bbwt({})) = {rho_b} > 2 * {rho}", summarize(w))
    });
    Ok(())
}

pub(super) fn clustering(limits: &Limits, cases: &mut Cases) -> Result<()> {
    for n in 1..=exhaustive_n(limits, 14)? {
        let mut t = Tally::default();
        for code in 0..1u64 << n {
            clustering_check(&mut t, &binary(n, code))?;
        }
        cases.push_tally(
            format!("rho(bbwt(w)) <= 2 rho(w), all binary strings, n = {n}"),
            t,
        );
    }
    let mut t = Tally::default();
    for w in random_strings(limits, 256, 4) {
        clustering_check(&mut t, &w)?;
    }
    cases.push_tally(
        format!(
            "rho(bbwt(w)) <= 2 rho(w), {} random strings, sigma <= 4, n <= 256",
            limits.trials
        ),
        t,
    );
    Ok(())
}

pub(super) fn psi_rot(limits: &Limits, cases: &mut Cases) -> Result<()> {
    for k in 0..=limits.max_k.unwrap_or(25) {
        let lf = lf_map(&fib_word(k))?;
        let mut t = Tally::default();
        for (i, &target) in lf.target.iter().enumerate() {
            let i = i as u64;
            let (by_rank, by_rot) = (psi_fib(k, i)?, psi_fib_rot(k, i)?);
            t.check(by_rank == target as u64 && by_rot == target as u64, || {
                format!("i = {i}: lf = {target}, rank = {by_rank}, rotation = {by_rot}")
            });
        }
        cases.push_tally(
            format!("LF map of F_{k} against both Fibonacci formulas"),
            t,
        );
    }
    Ok(())
}

pub(super) fn rank_formula(limits: &Limits, cases: &mut Cases) -> Result<()> {
    for n in 2..=limits.max_k.unwrap_or(20) {
        let order = sorted_rotations(&fib_word(n))?;
        let mut t = Tally::default();
        for (rank, &offset) in order.iter().enumerate() {
            let formula = fib_rotation_rank(n, rank as u64)?;
            t.check(formula == offset as u64, || {
                format!("rank {rank}: sorted offset {offset}, formula {formula}")
            });
        }
        cases.push_tally(format!("sorted rotations of F_{n}"), t);
    }
    Ok(())
}

pub(super) fn necklace(limits: &Limits, cases: &mut Cases) -> Result<()> {
    for k in 1..=limits.max_k.unwrap_or(20) {
        let formula = count_necklaces_formula(k)?;
        let enumerated = necklaces_no11(k)?.count() as u64;
        let cycles = lf_cycles(&fib_word(k))?.len() as u64;
        cases.push(
            format!("necklaces and LF cycles, k = {k}"),
            format!("C(k) = {formula}"),
            format!("enumerated = {enumerated}, lf cycles = {cycles}"),
            formula == enumerated && formula == cycles,
        );
    }
    for k in 2..=limits.max_k.unwrap_or(25) {
        let direct = ibbwt_fib(k)?;
        let generic = ibbwt(&fib_word(k))?;
        cases.push(
            format!("direct inverse BBWT of F_{k}"),
            summarize(&generic),
            summarize(&direct),
            direct == generic,
        );
    }
    cases.push_eq(
        "direct inverse BBWT of F_7",
        "abbbaababaaabbaaaaaba",
        String::from_utf8_lossy(&ibbwt_fib(7)?),
    );
    Ok(())
}

pub(super) fn bwt_yk(limits: &Limits, cases: &mut Cases) -> Result<()> {
    for k in 2..=limits.max_k.unwrap_or(10) {
        let closed = bwt_yk_closed(k)?;
        let computed = bwt(&family_y(k)?)?;
        cases.push(
            format!("bwt(y_{k}) against the closed form"),
            summarize(&closed),
            summarize(&computed),
            closed == computed,
        );
        let expected_runs = if k == 2 { 5 } else { 2 * k + 2 };
        cases.push_eq(
            format!("runs of bwt(y_{k})"),
            expected_runs,
            run_count(&computed),
        );
    }
    Ok(())
}

pub(super) fn separation(limits: &Limits, cases: &mut Cases) -> Result<()> {
    for k in 3..=limits.max_k.unwrap_or(10) {
        let w = family_w(k)?;
        cases.push_eq(
            format!("w_{k} (n = {})", w.len()),
            format!("r = {}, rB = 3", 2 * k),
            format!("r = {}, rB = {}", r_runs(&w)?, rb_runs(&w)?),
        );
    }
    Ok(())
}

fn hierarchy_check(t: &mut Tally, w: &[u8], limits: &Limits) -> Result<()> {
    let d = delta(w)?;
    let g = gamma_exact(w, limits.gamma_max_n, limits.gamma_max_size).exact();
    let b = b_exact(w, limits.b_max_n).exact();
    let (v, z) = (v_measure(w)?, z_measure(w)?);
    let ok = match (g, b) {
        (Some(g), Some(b)) => d <= Ratio::from_integer(g as u64) && g <= b && b <= v.min(z),
        _ => false,
    };
    t.check(ok, || {
        let show_opt = |x: Option<usize>| x.map_or("limit-exceeded".to_string(), |x| x.to_string());
        format!(
            "{}: delta = {d}, gamma = {}, b = {}, v = {v}, z = {z}",
            summarize(w),
            show_opt(g),
            show_opt(b)
        )
    });
    Ok(())
}

pub(super) fn hierarchy(limits: &Limits, cases: &mut Cases) -> Result<()> {
    for n in 1..=exhaustive_n(limits, 10)? {
        let mut t = Tally::default();
        for code in 0..1u64 << n {
            hierarchy_check(&mut t, &binary(n, code), limits)?;
        }
        cases.push_tally(
            format!("delta <= gamma <= b <= min(v, z), all binary strings, n = {n}"),
            t,
        );
    }

    let trials = limits.trials.min(1_000);
    let max_n = limits.b_max_n.min(12);
    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
    let mut t = Tally::default();
    for _ in 0..trials {
        let n = rng.gen_range(1..=max_n);
        let sigma = rng.gen_range(1..=3);
        let w = random_string(&mut rng, n, sigma);
        let offset = rng.gen_range(0..n);
        let scheme = smallest_bms(&w, max_n).expect("length within the search limit");
        let rotated = bms_rotate(&w, &scheme, offset)?;
        let target = rotate(&w, offset as isize)?;
        let ok = bms_valid(&target, &rotated) && rotated.size() <= 2 * scheme.size() + 1;
        t.check(ok, || {
            format!(
                "{} rotated by {offset}: {} phrases from b = {}",
                summarize(&w),
                rotated.size(),
                scheme.size()
            )
        });
    }
    cases.push_tally(
        format!("bms_rotate of a smallest scheme is valid with <= 2b + 1 phrases, {trials} random strings"),
        t,
    );
    Ok(())
}

pub(super) fn morphism(limits: &Limits, cases: &mut Cases) -> Result<()> {
    let max_n = exhaustive_n(limits, 10)?;
    for n in 1..=max_n {
        let mut t = Tally::default();
        for code in 0..1u64 << n {
            let w = binary(n, code);
            let theta = theta_apply(&w)?;
            let phi2 = rotate(&phi_apply(&phi_apply(&w)?)?, 2)?;
            t.check(theta == phi2, || summarize(&w));
        }
        cases.push_tally(
            format!("theta(w) = rot^2(phi^2(w)), all binary strings, n = {n}"),
            t,
        );
    }
    for k in 1..=limits.max_k.unwrap_or(12) {
        let star = fib_star(k);
        let least = least_rotation(&fib_word(2 * k))?.0;
        cases.push(
            format!("theta^{k}(b) against rot*(F_{})", 2 * k),
            summarize(&least),
            summarize(&star),
            star == least,
        );
    }

    let pair_n = max_n.min(8);
    let words: Vec<Vec<u8>> = (1..=pair_n)
        .flat_map(|n| (0..1u64 << n).map(move |code| binary(n, code)))
        .collect();
    let images = words
        .iter()
        .map(|w| theta_apply(w))
        .collect::<Result<Vec<_>>>()?;
    let mut t = Tally::default();
    for (s, ts) in words.iter().zip(&images) {
        for (u, tu) in words.iter().zip(&images) {
            t.check(s.cmp(u) == ts.cmp(tu), || {
                format!("{} vs {}", summarize(s), summarize(u))
            });
        }
    }
    cases.push_tally(
        format!("theta preserves order, all binary pairs, n <= {pair_n}"),
        t,
    );
    Ok(())
}

pub(super) fn delta_fib(limits: &Limits, cases: &mut Cases) -> Result<()> {
    let max_k = limits.max_k.unwrap_or(17);
    for k in [7usize, 11, 13, 17].into_iter().filter(|&k| k <= max_k) {
        let w = ibbwt_fib(k)?;
        let bound = Ratio::new(fib_num(k as i64) - 2 * k as u64, 2 * k as u64);
        let d = delta(&w)?;
        cases.push(
            format!("delta of the inverse BBWT of F_{k} (n = {})", w.len()),
            format!(">= {bound}"),
            d,
            d >= bound,
        );
        let f = fib_word(k);
        let df = delta(&f)?;
        cases.push(
            format!("delta of F_{k}"),
            "<= 2",
            df,
            df <= Ratio::from_integer(2),
        );
        cases.push_eq(format!("runs of bwt(F_{k})"), 2, r_runs(&f)?);
    }
    Ok(())
}
