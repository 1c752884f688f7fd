//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! The generator check at n = 4 uses `BCOVER_TC_CAP` as its coset budget
//! when set.

use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::Instant;

use bcover::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T>(r: bcover::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// `(d, n)` pairs with `d ≤ 4`, `n ≤ 5` and at most a million sequences.
fn desk_grid() -> Vec<(u32, usize)> {
    let mut out = Vec::new();
    for d in 1..=4u32 {
        for n in 0..=5usize {
            if sequence_count_bound(d, n) <= 1_000_000 {
                out.push((d, n));
            }
        }
    }
    out
}

fn all_words(n: usize, max_len: usize) -> Vec<Vec<i32>> {
    let letters: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                let mut v: Vec<i32> = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn criterion_1() -> Check {
    let mut count = 0;
    for n in 2..=5 {
        let p = MonodromySequence::disk(n);
        for i in 1..=n {
            for j in 1..=n {
                let got = ok(curve_monodromy(&p, &ok(CurveRef::alpha_ij(n, i, j))?))?;
                let want = ok(reference_alpha_monodromy(n, i, j, None))?;
                ensure!(got == want, "n={n} α_{{{i},{j}}}: {got} vs table {want}");
                count += 1;
                for k in (1..=n).filter(|&k| i != j && j != k) {
                    let got = ok(curve_monodromy(&p, &ok(CurveRef::alpha_ijk(n, i, j, k))?))?;
                    let want = ok(reference_alpha_monodromy(n, i, j, Some(k)))?;
                    ensure!(
                        got == want,
                        "n={n} α_{{{i},{j},{k}}}: {got} vs table {want}"
                    );
                    count += 1;
                }
            }
        }
    }
    Ok(format!(
        "{count} curve monodromies match the tables for n = 2..5"
    ))
}

fn criterion_2() -> Check {
    let mut checked = 0;
    for n in 2..=5 {
        let p = MonodromySequence::disk(n);
        let ty = |x: IntervalRef| ok(interval_type(&p, &x));
        for i in 1..n {
            ensure!(
                ty(ok(IntervalRef::x(n, i))?)? == 3,
                "n={n} x_{i} not type 3"
            );
        }
        for i in 1..=n {
            for j in i + 1..=n {
                ensure!(
                    ty(ok(IntervalRef::x_hat(n, i, j))?)? == 3,
                    "n={n} x̂_{{{i},{j}}} not type 3"
                );
                if j > i + 1 {
                    ensure!(
                        ty(ok(IntervalRef::x_ij(n, i, j))?)? == 2,
                        "n={n} x_{{{i},{j}}} not type 2"
                    );
                }
                for k in (1..=n).filter(|&k| k != i && k != j) {
                    let x = ok(IntervalRef::x_hat3(n, i, k, j))?;
                    ensure!(ty(x)? == 2, "n={n} x̂_{{{i},{k},{j}}} not type 2");
                }
            }
        }
        for w in all_words(n, 3) {
            let word = ok(BraidWord::new(n, w.clone()))?;
            for base in 1..n {
                let t = ty(ok(IntervalRef::new(n, base, word.clone()))?)?;
                ensure!(t != 1, "n={n} interval ({base}, {w:?}) has type 1");
                checked += 1;
            }
        }
    }
    Ok(format!(
        "named intervals typed as stated; {checked} short-word intervals, none of type 1"
    ))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    for (n, expected) in [(2, 3), (3, 16)] {
        let r = ok(verify_disk_generators(n, default_max_cosets(n)))?;
        ensure!(
            r.pass && r.orbit_index == expected && r.tc_index == Some(expected),
            "n={n}: orbit {} vs TC {:?}",
            r.orbit_index,
            r.tc_index
        );
    }
    let small = start.elapsed();
    let cap = std::env::var("BCOVER_TC_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or_else(|| default_max_cosets(4));
    let n4 = match verify_disk_generators(4, cap) {
        Ok(r) => format!(
            "n=4 orbit {} TC {:?} {}",
            r.orbit_index,
            r.tc_index,
            if r.pass { "pass" } else { "fail" }
        ),
        Err(Error::Inconclusive { max_cosets }) => {
            format!("n=4 inconclusive at {max_cosets} cosets")
        }
        Err(e) => return Err(e.to_string()),
    };
    ensure!(small.as_secs() < 60, "n ≤ 3 took {small:?}");
    Ok(format!("n=2 3=3, n=3 16=16 in {small:?}; {n4} (cap {cap})"))
}

fn criterion_4() -> Check {
    let mut classes_total = 0;
    let mut canon_total = 0;
    for (d, n) in desk_grid() {
        let classes = ok(classify_all(d, n, default_cap(d, n).max(1)))?;
        let connected: Vec<_> = classes.iter().filter(|c| c.connected).collect();
        let omegas: BTreeSet<Vec<u32>> =
            connected.iter().map(|c| c.omega.parts().to_vec()).collect();
        ensure!(
            omegas.len() == connected.len(),
            "d={d} n={n}: {} classes but {} Ω values",
            connected.len(),
            omegas.len()
        );
        classes_total += connected.len();
        for s in all_sequences(d, n).filter(|s| s.is_connected()) {
            let r = ok(canonicalize(&s))?;
            let target = ok(canonical_target(d, n, &s.omega_class()))?;
            ensure!(r.replays(&s), "certificate for {s} does not replay");
            ensure!(
                r.canonical == target,
                "{s} canonicalizes to {} not {target}",
                r.canonical
            );
            canon_total += 1;
        }
    }
    Ok(format!(
        "{classes_total} connected classes, one per Ω; {canon_total} sequences canonicalized with replaying certificates"
    ))
}

fn criterion_5() -> Check {
    let mut sequences = 0;
    let mut tightest = 0.0f64;
    for (d, n) in desk_grid() {
        let bound = sequence_count_bound(d, n);
        let mut seen: HashSet<MonodromySequence> = HashSet::new();
        for s in all_sequences(d, n) {
            sequences += 1;
            if seen.contains(&s) {
                continue;
            }
            let orbit = ok(hurwitz_orbit(&s, bound as usize))?;
            let index = ok(stabilizer_index(&s, bound as usize))?;
            ensure!(
                index == orbit.len(),
                "{s}: index {index} vs orbit {}",
                orbit.len()
            );
            ensure!(index as u128 <= bound, "{s}: index {index} > {bound}");
            tightest = tightest.max(index as f64 / bound as f64);
            seen.extend(orbit.elements().iter().cloned());
        }
    }
    Ok(format!(
        "{sequences} sequences within the bound; largest index/bound ratio {tightest:.3}"
    ))
}

fn criterion_6() -> Check {
    let mut checked = 0;
    for (d, n) in desk_grid() {
        if n == 0 {
            continue;
        }
        for s in all_sequences(d, n) {
            for mask in 1u32..(1 << n) {
                let indices: Vec<usize> = (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
                for base in [Base::Start, Base::End] {
                    let spec = ok(RestrictionSpec::new(indices.clone(), base))?;
                    let lhs = ok(restrict(&s, &spec))?.total_monodromy();
                    let rhs = ok(restricted_total_monodromy(&s, &spec))?;
                    ensure!(lhs == rhs, "{s} {indices:?} {base:?}: {lhs} vs {rhs}");
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} restrictions agree with the closed form"))
}

fn criterion_7() -> Check {
    let mut checked = 0;
    let mut disks = 0;
    for (d, n) in desk_grid() {
        for s in all_sequences(d, n).filter(|s| s.is_connected()) {
            let disk = ok(s.is_disk())?;
            for base in [Base::Start, Base::End] {
                let mut all_disconnected = true;
                for j in 1..=n {
                    let spec = ok(RestrictionSpec::new(vec![j], base))?;
                    all_disconnected &= !ok(restrict(&s, &spec))?.is_connected();
                }
                ensure!(
                    disk == all_disconnected,
                    "{s} {base:?}: disk {disk}, all cuts disconnect {all_disconnected}"
                );
            }
            checked += 1;
            disks += disk as usize;
        }
    }
    Ok(format!(
        "{checked} connected sequences ({disks} disks) satisfy the cut criterion"
    ))
}

/// `(x_{n-1} ⋯ x_1)^{n+1}` as a product in transport order, which the stored
/// word lists in reverse.
fn rotation_braid(n: usize) -> BraidWord {
    let letters: Vec<i32> = (0..=n).flat_map(|_| 1..n as i32).collect();
    BraidWord::new(n, letters).expect("letters in range")
}

fn criterion_8() -> Check {
    for n in 2..=4 {
        let p = MonodromySequence::disk(n);
        let mut regular = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if ok(is_regular_curve(&p, &ok(CurveRef::alpha_ij(n, i, j))?))? {
                    regular.push((i, j));
                }
            }
        }
        let mut expected: Vec<(usize, usize)> = (1..=n).map(|i| (i, i)).collect();
        expected.extend([(1, n), (n, 1)]);
        expected.sort_unstable();
        ensure!(
            regular == expected,
            "n={n}: regular index-0 curves {regular:?}"
        );
        let a = [ok(CurveRef::alpha_ij(n, 1, n))?];
        let b = [ok(CurveRef::alpha_ij(n, n, 1))?];
        ensure!(
            ok(systems_liftable_equivalent(&p, &a, &b))?,
            "n={n}: α_{{1,n}} and α_{{n,1}} not equivalent"
        );
    }
    for n in 2..=6 {
        let p = MonodromySequence::disk(n);
        let r = rotation_braid(n);
        ensure!(
            ok(is_liftable(&p, &r))?,
            "n={n}: rotation braid not liftable"
        );
        let moved = ok(CurveRef::alpha_ij(n, 1, n))?.transported(&r);
        let target = ok(CurveRef::alpha_ij(n, n, 1))?;
        ensure!(
            ok(curve_monodromy(&p, &moved))? == ok(curve_monodromy(&p, &target))?,
            "n={n}: rotation does not carry α_{{1,n}} to α_{{n,1}}"
        );
    }
    Ok("regular index-0 curves are α_j, α_{1,n}, α_{n,1} (n ≤ 4); α_{1,n} ~ α_{n,1}; (x_{n-1}⋯x_1)^{n+1} liftable and carries α_{1,n} to α_{n,1} (n ≤ 6)".into())
}

fn random_sequence(rng: &mut ChaCha8Rng, d: u32, n: usize) -> MonodromySequence {
    let ts = all_transpositions(d);
    let entries = (0..n).map(|_| ts[rng.gen_range(0..ts.len())]).collect();
    MonodromySequence::new(d, entries).expect("valid transpositions")
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let l = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                l
            } else {
                -l
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("letters in range")
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut schreier_runs = 0;
    for _ in 0..400 {
        let d = rng.gen_range(2..=4);
        let n = rng.gen_range(2..=4);
        let s = random_sequence(&mut rng, d, n);
        let len = rng.gen_range(0..12);
        let w = random_word(&mut rng, n, len);
        let moved = ok(act(&s, &w))?;
        ensure!(
            moved.total_monodromy() == s.total_monodromy(),
            "{s} by {w}: product changed"
        );
        for i in 1..n {
            let by_move = ok(elementary_move(&s, i, Direction::Forward))?;
            let by_act = ok(act(&s, &ok(BraidWord::new(n, vec![-(i as i32)]))?))?;
            ensure!(
                by_move == by_act,
                "{s}: O_{i} differs from the inverse generator"
            );
        }
        for i in 1..n as i32 {
            for j in 1..n as i32 {
                let (lhs, rhs) = match (i - j).abs() {
                    1 => (vec![i, j, i], vec![j, i, j]),
                    0 => continue,
                    _ => (vec![i, j], vec![j, i]),
                };
                let lhs = ok(act(&s, &ok(BraidWord::new(n, lhs))?))?;
                let rhs = ok(act(&s, &ok(BraidWord::new(n, rhs))?))?;
                ensure!(lhs == rhs, "{s}: relation between x_{i} and x_{j} fails");
            }
        }
    }
    let mut seen = HashSet::new();
    while schreier_runs < 60 {
        let d = rng.gen_range(2..=4);
        let n = rng.gen_range(1..=4);
        let s = random_sequence(&mut rng, d, n);
        if !s.is_connected() || !seen.insert(s.clone()) {
            continue;
        }
        let cap = default_cap(d, n);
        let gens = ok(schreier_generators(&s, cap))?;
        for g in &gens {
            ensure!(
                ok(is_liftable(&s, g))?,
                "{s}: Schreier word {g} not liftable"
            );
        }
        let index = ok(stabilizer_index(&s, cap))?;
        let (tc, _) = ok(todd_coxeter(
            n,
            &gens,
            default_max_cosets(n).max(64 * index),
        ))?;
        ensure!(tc == index, "{s}: TC index {tc} vs orbit {index}");
        schreier_runs += 1;
    }
    Ok(format!(
        "400 random action checks; {schreier_runs} Schreier sets enumerate to the orbit index"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("convention tables", criterion_1),
        ("interval types", criterion_2),
        ("generators of the liftable group", criterion_3),
        ("classification and canonical forms", criterion_4),
        ("index bound", criterion_5),
        ("restriction identities", criterion_6),
        ("disk criterion", criterion_7),
        ("regular curves", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!(
                "PASS criterion {} ({name}): {detail} [{elapsed:.2?}]",
                k + 1
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why} [{elapsed:.2?}]", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
