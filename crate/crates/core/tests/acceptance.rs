//! Acceptance criteria, one line each. Every criterion runs its seeded
//! suite and, where a closed form exists, cross-checks against an oracle
//! written here from first principles. Arithmetic is exact, so every
//! comparison has zero tolerance; the only slack is the wall-clock budget.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::Rng;
use shoelace::cli::selftest;
use shoelace::exactlin::FieldSpec;
use shoelace::generate;
use shoelace::proset::{shoelace, Proset, Translation};
use shoelace::rep::change_basis;
use shoelace::zed::{
    barcode, canonical_interleaving, condition_star, hom_dimension, interval_sum, padded_window, Barcode, Boundary,
    Interval, Window, WindowModule,
};

const SEED: u64 = 42;

type Outcome = Result<String, String>;

fn suite(name: &str) -> Outcome {
    let r = selftest::run_suite(name, SEED, None).expect("known suite");
    match &r.first_failure {
        None => Ok(format!("{} cases", r.cases)),
        Some(f) => Err(format!("{}/{} cases failed; case {}: {}", r.failures, r.cases, f.case, f.message)),
    }
}

fn both(a: Outcome, b: Outcome) -> Outcome {
    Ok(format!("{}; {}", a?, b?))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Shoelace relation straight from the definition: copies keep the base
/// order, and either cross relation holds iff `Λ(i) <= j`.
fn oracle_leq(p: &Proset, lam: &[usize], x: usize, y: usize) -> bool {
    let n = p.len();
    let (i, j) = (x % n, y % n);
    if (x < n) == (y < n) {
        p.leq(i, j)
    } else {
        p.leq(lam[i], j)
    }
}

fn criterion_1() -> Outcome {
    let p = Arc::new(Proset::chain(3));
    let lam = [1, 2, 2];
    let mut pairs = 0;
    let mut isos = Vec::new();
    for x in 0..6 {
        for y in 0..6 {
            if oracle_leq(&p, &lam, x, y) {
                pairs += 1;
                if x < y && oracle_leq(&p, &lam, y, x) {
                    isos.push((x, y));
                }
            }
        }
    }
    ensure(pairs == 20 && isos == vec![(2, 5)], || format!("oracle gives {pairs} pairs, isos {isos:?}"))?;
    let sh = shoelace(&p, &Translation::new(p.clone(), lam.to_vec()).unwrap()).unwrap();
    ensure(sh.carrier().iso_pairs() == isos, || "library iso pairs differ from oracle".into())?;
    both(Ok("6 elements, 20 pairs, iso {3,3'} by oracle".into()), suite("example"))
}

fn criterion_2() -> Outcome {
    for case in 0..200u64 {
        let rng = &mut generate::rng(1000 + case);
        let n = rng.gen_range(0..=7);
        let p = Arc::new(generate::random_proset(rng, n));
        let t = generate::random_translation(rng, &p);
        let sh = shoelace(&p, &t).map_err(|e| format!("case {case}: {e}"))?;
        let c = sh.carrier();
        let o = |x, y| oracle_leq(&p, t.map(), x, y);
        for x in 0..2 * n {
            ensure(o(x, x), || format!("case {case}: oracle not reflexive at {x}"))?;
            for y in 0..2 * n {
                ensure(c.leq(x, y) == o(x, y), || format!("case {case}: relation differs at ({x},{y})"))?;
                for z in 0..2 * n {
                    ensure(!(o(x, y) && o(y, z)) || o(x, z), || format!("case {case}: not transitive at {x},{y},{z}"))?;
                }
            }
        }
        for i in 0..n {
            let base = p.leq(i, t.apply(i)) && p.leq(t.apply(i), i);
            ensure(base == (o(i, n + i) && o(n + i, i)), || format!("case {case}: iso remark fails at {i}"))?;
        }
    }
    both(Ok("200 carriers match the oracle relation".into()), suite("wellformed"))
}

/// Plain `i -> γ(i)`, primed alike; twisted swaps the copies.
fn oracle_lift(gamma: &[usize], twist: bool) -> Vec<usize> {
    let n = gamma.len();
    let mut m = vec![0; 2 * n];
    for (i, &g) in gamma.iter().enumerate() {
        m[i] = if twist { n + g } else { g };
        m[n + i] = if twist { g } else { n + g };
    }
    m
}

fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for case in 0..100u64 {
        let rng = &mut generate::rng(2000 + case);
        let n = rng.gen_range(1..=6);
        let p = Arc::new(generate::random_proset(rng, n));
        let t = generate::random_translation(rng, &p);
        let a = rng.gen_range(0..=2);
        let lam = t.power(a);
        let sh = shoelace(&p, &lam).unwrap();
        let g1 = t.power(rng.gen_range(0..=3));
        let u2 = t.power(a + rng.gen_range(0..=2));
        let lib = |g: &Translation, tw| sh.induced_translation(g, tw).map(|x| x.map().to_vec()).map_err(|e| e.to_string());
        for (g, tw) in [(&g1, false), (&u2, true), (&u2, false)] {
            ensure(lib(g, tw)? == oracle_lift(g.map(), tw), || format!("case {case}: lift differs from oracle"))?;
        }
        let gu = compose(g1.map(), u2.map());
        let lhs = oracle_lift(&gu, true);
        let rhs = compose(&oracle_lift(g1.map(), false), &oracle_lift(u2.map(), true));
        ensure(lhs == rhs, || format!("case {case}: oracle identity fails"))?;
        checked += 1;
    }
    both(Ok(format!("{checked} lifts match the oracle")), suite("induced"))
}

/// `Hom(I[a,b], I[c,d])` on a chain is nonzero iff `c <= a <= d <= b`.
fn oracle_hom(i: (i64, i64), j: (i64, i64)) -> bool {
    j.0 <= i.0 && i.0 <= j.1 && j.1 <= i.1
}

fn criterion_6() -> Outcome {
    let field = FieldSpec::default();
    let ends: Vec<(i64, i64)> = (0..=8).flat_map(|x| (x..=8).map(move |y| (x, y))).collect();
    let mut cells = 0;
    let mut hypothesis = 0;
    for eps in 0..=3u64 {
        let e = eps as i64;
        for &a in &ends {
            for &b in &ends {
                let (i, j) = (Interval::closed(a.0, a.1), Interval::closed(b.0, b.1));
                let oracle = oracle_hom(a, (b.0 - e, b.1 - e)) || oracle_hom(b, (a.0 - e, a.1 - e));
                let w = padded_window(&i, &j, eps);
                let solver = hom_dimension(&i, &j.shifted_down(eps), &w, field).map_err(|e| e.to_string())? > 0
                    || hom_dimension(&j, &i.shifted_down(eps), &w, field).map_err(|e| e.to_string())? > 0;
                let here = format!("{i} vs {j} at ε={eps}");
                ensure(condition_star(&i, &j, eps) == oracle, || format!("{here}: (⋆) differs from the oracle"))?;
                ensure(solver == oracle, || format!("{here}: solver Hom differs from the oracle"))?;
                let short = |x: (i64, i64)| x.1 - x.0 < 2 * e;
                let close = (a.0 - b.0).abs() <= e && (a.1 - b.1).abs() <= e;
                if short(a) && short(b) && close {
                    hypothesis += 1;
                    let canon = canonical_interleaving(&i, &j, eps, &w, field).is_ok_and(|x| !x.is_trivial());
                    ensure(canon == oracle, || format!("{here}: canonical pair differs from the oracle"))?;
                }
                cells += 1;
            }
        }
    }
    both(Ok(format!("{cells} cells against the closed form, {hypothesis} under the hypothesis")), suite("hom_lemma"))
}

fn criterion_7() -> Outcome {
    for case in 0..300u64 {
        let rng = &mut generate::rng(3000 + case);
        let field = FieldSpec::new([2, 5][case as usize % 2]).unwrap();
        let len = rng.gen_range(1..=8);
        let w = Window::new(0, len - 1).unwrap();
        let mut bars = BTreeMap::new();
        let mut depth = vec![0usize; len as usize];
        for _ in 0..rng.gen_range(0..=10) {
            let a = rng.gen_range(0..len);
            let b = rng.gen_range(a..len);
            if (a..=b).all(|x| depth[x as usize] < 6) {
                (a..=b).for_each(|x| depth[x as usize] += 1);
                *bars.entry((a, b)).or_insert(0usize) += 1;
            }
        }
        let truth: Barcode = bars
            .iter()
            .flat_map(|(&(a, b), &k)| std::iter::repeat_n(Interval::closed(a, b), k))
            .collect();
        let sum = Arc::new(interval_sum(&truth.instances(), &w, field).unwrap().rep);
        let (scrambled, _) = change_basis(&sum, &generate::random_basis(rng, &sum)).unwrap();
        // rank invariant: rank M(x -> y) counts the bars containing [x, y]
        for x in 0..len {
            for y in x..len {
                let want: usize = bars.iter().filter(|(&(a, b), _)| a <= x && y <= b).map(|(_, &k)| k).sum();
                let got = scrambled.map(x as usize, y as usize).rank();
                ensure(got == want, || format!("case {case}: rank at ({x},{y}) is {got}, expected {want}"))?;
            }
        }
        let wm = WindowModule::new(w, scrambled).unwrap();
        ensure(barcode(&wm, Boundary::Finite) == truth, || format!("case {case}: barcode differs"))?;
    }
    both(Ok("300 rank invariants match the ground truth".into()), suite("barcode"))
}

struct Criterion {
    number: usize,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { number: 1, title: "shoelace example reproduction", budget: secs(1), run: criterion_1 },
        Criterion { number: 2, title: "shoelace well-formedness", budget: secs(5), run: criterion_2 },
        Criterion { number: 3, title: "pack/unpack round trips", budget: secs(20), run: || suite("roundtrip") },
        Criterion { number: 4, title: "induced translation identities", budget: secs(5), run: criterion_4 },
        Criterion { number: 5, title: "interleaving of interleavings", budget: secs(20), run: || suite("square") },
        Criterion { number: 6, title: "Hom lemma exhaustive sweep", budget: secs(30), run: criterion_6 },
        Criterion { number: 7, title: "barcode extraction oracle", budget: secs(20), run: criterion_7 },
        Criterion { number: 8, title: "matching bijection", budget: secs(30), run: || suite("bijection") },
        Criterion { number: 9, title: "interleaving versus matching", budget: secs(15), run: || suite("final_remark") },
    ];
    let start = Instant::now();
    let mut failed = 0;
    for c in &criteria {
        let t = Instant::now();
        let outcome = (c.run)();
        let elapsed = t.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.budget => (true, d),
            Ok(d) => (false, format!("{d}; over the time budget")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "{} criterion {}: {} [exact, {:.2} s of {} s] {}",
            if ok { "PASS" } else { "FAIL" },
            c.number,
            c.title,
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
            detail
        );
    }
    let total = start.elapsed();
    let ok = total <= Duration::from_secs(180);
    failed += usize::from(!ok);
    println!("{} full suite [{:.2} s of 180 s]", if ok { "PASS" } else { "FAIL" }, total.as_secs_f64());
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
