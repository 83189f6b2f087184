//! Seeded property suites, one per acceptance criterion.
//!
//! Each case draws from its own RNG derived from the seed, the suite and the
//! case index, so reports are reproducible and cases are independent.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;
use serde_json::Value;

use super::document::Document;
use crate::exactlin::FieldSpec;
use crate::generate::{self, Rng64};
use crate::interleave::{pack, pack_morphism, square_interleave, unpack, unpack_morphism, untwist_square, Interleaving};
use crate::proset::{shoelace, Proset, Translation};
use crate::rep::{restrict, Representation, Side};
use crate::zed::{
    barcode, canonical_interleaving, condition_star, decomposed_interleaving, enumerate_matchings,
    expand_decomposed, find_matching, hom_dimension, interval_sum, is_essential, matching_to_rep, padded_window,
    rep_to_matching, Barcode, Boundary, DecomposedShoelaceRep, ExtendedInt, Interval, Matching, Summand, Variant,
    Window, WindowModule,
};

/// Suite names with their criterion number and default case count. A count
/// of 0 marks an exhaustive suite whose size is fixed.
pub const SUITES: [(&str, usize); 9] = [
    ("example", 0),
    ("wellformed", 200),
    ("roundtrip", 200),
    ("induced", 100),
    ("square", 100),
    ("hom_lemma", 0),
    ("barcode", 300),
    ("bijection", 200),
    ("final_remark", 50),
];

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseFailure {
    pub case: usize,
    pub message: String,
    pub documents: Vec<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub criterion: usize,
    pub passed: bool,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<CaseFailure>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelfTestReport {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl SelfTestReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialise");
        s.push('\n');
        s
    }
}

type CaseResult = Result<(), (String, Vec<Document>)>;

fn fail<T>(message: impl Into<String>, docs: Vec<Document>) -> Result<T, (String, Vec<Document>)> {
    Err((message.into(), docs))
}

fn check(cond: bool, message: impl FnOnce() -> String, docs: impl FnOnce() -> Vec<Document>) -> CaseResult {
    if cond {
        Ok(())
    } else {
        fail(message(), docs())
    }
}

fn case_rng(seed: u64, suite: usize, case: usize) -> Rng64 {
    let mix = seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((suite as u64) << 40)
        .wrapping_add(case as u64);
    generate::rng(mix)
}

struct Tally {
    criterion: usize,
    name: &'static str,
    cases: usize,
    failures: usize,
    first: Option<CaseFailure>,
}

impl Tally {
    fn new(criterion: usize, name: &'static str) -> Self {
        Tally { criterion, name, cases: 0, failures: 0, first: None }
    }

    fn record(&mut self, result: CaseResult) {
        let case = self.cases;
        self.cases += 1;
        if let Err((message, docs)) = result {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(CaseFailure { case, message, documents: docs.iter().map(Document::to_value).collect() });
            }
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name.to_string(),
            criterion: self.criterion,
            passed: self.failures == 0,
            cases: self.cases,
            failures: self.failures,
            first_failure: self.first,
        }
    }
}

/// Runs the named suites (all when `suite` is `None`). `cases` overrides the
/// default count of every randomised suite. Returns `None` for an unknown
/// suite name.
pub fn run(seed: u64, cases: Option<usize>, suite: Option<&str>) -> Option<SelfTestReport> {
    let names: Vec<&str> = match suite {
        Some(s) => {
            SUITES.iter().find(|(n, _)| *n == s)?;
            vec![s]
        }
        None => SUITES.iter().map(|(n, _)| *n).collect(),
    };
    let suites: Vec<SuiteReport> = names.iter().map(|n| run_suite(n, seed, cases).expect("known suite")).collect();
    Some(SelfTestReport { seed, passed: suites.iter().all(|s| s.passed), suites })
}

/// Runs one suite by name.
pub fn run_suite(name: &str, seed: u64, cases: Option<usize>) -> Option<SuiteReport> {
    let idx = SUITES.iter().position(|(n, _)| *n == name)?;
    let (name, default) = SUITES[idx];
    let count = cases.unwrap_or(default);
    let mut t = Tally::new(idx + 1, name);
    let each = |t: &mut Tally, f: &dyn Fn(&mut Rng64) -> CaseResult| {
        for case in 0..count {
            t.record(f(&mut case_rng(seed, idx, case)));
        }
    };
    match name {
        "example" => t.record(example_case()),
        "wellformed" => each(&mut t, &wellformed_case),
        "roundtrip" => {
            for case in 0..count {
                let field = FieldSpec::new([2, 5][case % 2]).expect("prime");
                t.record(roundtrip_case(&mut case_rng(seed, idx, case), field));
            }
        }
        "induced" => each(&mut t, &induced_case),
        "square" => {
            for case in 0..count {
                let rng = &mut case_rng(seed, idx, case);
                t.record(if case % 2 == 0 { square_twist_case(rng) } else { square_matching_case(rng) });
            }
        }
        "hom_lemma" => hom_lemma_sweep(&mut t),
        "barcode" => {
            for case in 0..count {
                let field = FieldSpec::new([2, 5][case % 2]).expect("prime");
                t.record(barcode_case(&mut case_rng(seed, idx, case), field));
            }
        }
        "bijection" => {
            for case in 0..count {
                let field = FieldSpec::new([2, 5][case % 2]).expect("prime");
                t.record(bijection_matching_case(&mut case_rng(seed, idx, case), field));
            }
            for case in 0..count {
                let field = FieldSpec::new([2, 5][case % 2]).expect("prime");
                t.record(bijection_decomposition_case(&mut case_rng(seed, idx, count + case), field));
            }
            t.record(nonessential_case());
        }
        "final_remark" => {
            for case in 0..count {
                let field = FieldSpec::new([2, 5][case % 2]).expect("prime");
                t.record(final_remark_case(&mut case_rng(seed, idx, case), field));
            }
        }
        _ => unreachable!("listed in SUITES"),
    }
    Some(t.finish())
}

fn example_case() -> CaseResult {
    let p = Arc::new(Proset::chain(3).with_labels(vec!["1".into(), "2".into(), "3".into()]));
    let lam = Translation::new(p.clone(), vec![1, 2, 2]).map_err(|e| (e.to_string(), vec![]))?;
    let sh = shoelace(&p, &lam).map_err(|e| (e.to_string(), vec![]))?;
    let c = sh.carrier();
    let docs = || vec![Document::Shoelace(sh.clone())];
    check(c.len() == 6, || format!("{} elements", c.len()), docs)?;
    check(c.pair_count() == 20, || format!("{} related pairs", c.pair_count()), docs)?;
    let isos: Vec<(String, String)> = c.iso_pairs().into_iter().map(|(a, b)| (c.label(a), c.label(b))).collect();
    check(isos == vec![("3".to_string(), "3'".to_string())], || format!("iso pairs {isos:?}"), docs)
}

fn wellformed_case(rng: &mut Rng64) -> CaseResult {
    let n = rng.gen_range(0..=7);
    let p = Arc::new(generate::random_proset(rng, n));
    let lam = generate::random_translation(rng, &p);
    let docs = || vec![Document::Proset(p.clone()), Document::Translation(lam.clone())];
    let sh = shoelace(&p, &lam).or_else(|e| fail(e.to_string(), docs()))?;
    for i in 0..n {
        let base_iso = p.is_iso(i, lam.apply(i));
        let lifted_iso = sh.carrier().is_iso(sh.plain(i), sh.primed(i));
        check(base_iso == lifted_iso, || format!("iso remark fails at {i}: {base_iso} vs {lifted_iso}"), docs)?;
    }
    Ok(())
}

fn roundtrip_case(rng: &mut Rng64, field: FieldSpec) -> CaseResult {
    let n = rng.gen_range(0..=5);
    let p = Arc::new(generate::random_proset(rng, n));
    let lam = generate::random_translation(rng, &p);
    let x = generate::random_interleaving(rng, &lam, field, 3);
    let docs = || vec![Document::Interleaving(x.clone())];
    let err = |e: &dyn std::fmt::Display| (e.to_string(), docs());
    let v = pack(&x).map_err(|e| err(&e))?;
    v.rep.validate().map_err(|e| err(&e))?;
    let back = unpack(&v.shoelace, &v.rep).map_err(|e| err(&e))?;
    check(back == x, || "unpack(pack(x)) differs from x".into(), docs)?;
    let again = pack(&back).map_err(|e| err(&e))?;
    check(again == v, || "pack(unpack(v)) differs from v".into(), docs)?;

    // an arbitrary representation of the shoelace, not produced by pack
    let w = generate::random_representation(rng, v.shoelace.carrier(), field, 3);
    let wx = unpack(&v.shoelace, &w).map_err(|e| (e.to_string(), vec![Document::Representation(w.clone())]))?;
    let wv = pack(&wx).map_err(|e| (e.to_string(), vec![Document::Representation(w.clone())]))?;
    check(wv.rep == w, || "pack(unpack(v)) differs for a random representation".into(), || {
        vec![Document::Representation(w.clone())]
    })?;

    let g = generate::random_morphism(rng, &x);
    let t = pack_morphism(&g).map_err(|e| err(&e))?;
    let g_back = unpack_morphism(&v.shoelace, &t).map_err(|e| err(&e))?;
    check(g_back == g, || "morphism round trip through pack fails".into(), docs)?;
    let t_again = pack_morphism(&g_back).map_err(|e| err(&e))?;
    check(t_again == t, || "morphism round trip through unpack fails".into(), || vec![Document::NatTrans(t.clone())])
}

fn induced_case(rng: &mut Rng64) -> CaseResult {
    let n = rng.gen_range(1..=6);
    let p = Arc::new(generate::random_proset(rng, n));
    let t = generate::random_translation(rng, &p);
    let a = rng.gen_range(0..=2);
    let power = |k: usize| t.power(k);
    let lam = power(a);
    let (g1, g2) = (power(rng.gen_range(0..=3)), power(rng.gen_range(0..=3)));
    let (u1, u2) = (power(a + rng.gen_range(0..=2)), power(a + rng.gen_range(0..=2)));
    let docs = || vec![Document::Translation(t.clone()), Document::Translation(lam.clone())];
    let err = |e: &dyn std::fmt::Display| (e.to_string(), docs());
    let sh = shoelace(&p, &lam).map_err(|e| err(&e))?;
    let bar = |g: &Translation| sh.induced_translation(g, false).map_err(|e| err(&e));
    let tilde = |g: &Translation| sh.induced_translation(g, true).map_err(|e| err(&e));
    let comp = |a: &Translation, b: &Translation| a.compose(b).map_err(|e| err(&e));

    let lhs = bar(&comp(&g1, &g2)?)?;
    let rhs = comp(&bar(&g1)?, &bar(&g2)?)?;
    check(lhs == rhs, || "bar(G1 G2) != bar(G1) bar(G2)".into(), docs)?;
    let lhs = bar(&comp(&u1, &u2)?)?;
    let rhs = comp(&tilde(&u1)?, &tilde(&u2)?)?;
    check(lhs == rhs, || "bar(U1 U2) != tilde(U1) tilde(U2)".into(), docs)?;
    let lhs = tilde(&comp(&g1, &u2)?)?;
    let rhs = comp(&bar(&g1)?, &tilde(&u2)?)?;
    check(lhs == rhs, || "tilde(G1 U2) != bar(G1) tilde(U2)".into(), docs)?;
    let lhs = tilde(&comp(&u1, &g2)?)?;
    let rhs = comp(&tilde(&u1)?, &bar(&g2)?)?;
    check(lhs == rhs, || "tilde(U1 G2) != tilde(U1) bar(G2)".into(), docs)
}

fn check_square(a: &Interleaving, b: &Interleaving) -> CaseResult {
    let docs = || vec![Document::Interleaving(a.clone()), Document::Interleaving(b.clone())];
    let err = |e: &dyn std::fmt::Display| (e.to_string(), docs());
    check(a != b, || "the two interleavings coincide".into(), docs)?;
    let (sh, sq) = square_interleave(a, b).map_err(|e| err(&e))?;
    sq.validate().map_err(|e| err(&e))?;
    let twisted = sh.induced_translation(a.lam(), true).map_err(|e| err(&e))?;
    check(sq.lam() == &twisted, || "square is not over the twisted translation".into(), docs)?;
    let (_, un) = untwist_square(a, b).map_err(|e| err(&e))?;
    un.validate().map_err(|e| err(&e))?;
    let lam2 = a.lam().compose(a.lam()).map_err(|e| err(&e))?;
    let bar = sh.induced_translation(&lam2, false).map_err(|e| err(&e))?;
    check(un.lam() == &bar, || "untwisted square is not over bar(Λ∘Λ)".into(), docs)
}

fn nontrivial_interleaving(rng: &mut Rng64, field: FieldSpec) -> Interleaving {
    let n = rng.gen_range(1..=5);
    let p = Arc::new(generate::random_proset(rng, n));
    let lam = generate::random_translation(rng, &p);
    for _ in 0..10 {
        let x = generate::random_interleaving(rng, &lam, field, 3);
        if !x.is_trivial() {
            return x;
        }
    }
    let full = Arc::new(Representation::thin(p.clone(), field, &vec![true; n]));
    Interleaving::diagonal(full, lam).expect("diagonal interleaving")
}

fn square_twist_case(rng: &mut Rng64) -> CaseResult {
    let field = FieldSpec::new(5).expect("prime");
    let x = nontrivial_interleaving(rng, field);
    // c² = 1 with c = 4, or the pair (c, c⁻¹) = (2, 3)
    let y = if rng.gen_bool(0.5) { x.rescaled(4, 4) } else { x.rescaled(2, 3) };
    check_square(&x, &y)
}

fn square_matching_case(rng: &mut Rng64) -> CaseResult {
    let field = FieldSpec::new(5).expect("prime");
    let eps = rng.gen_range(1..=2);
    let mut sigma = generate::random_essential_matching(rng, eps, 4, 8, false);
    for _ in 0..20 {
        if !sigma.matched().is_empty() {
            break;
        }
        sigma = generate::random_essential_matching(rng, eps, 4, 8, false);
    }
    let all: Vec<Interval> = sigma.source().instances().into_iter().chain(sigma.target().instances()).collect();
    let w = Window::around(&all, 2 * eps);
    let docs = || vec![Document::Matching(sigma.clone())];
    let build = |m: &Matching| {
        matching_to_rep(m, &w, Variant::Essential, field)
            .and_then(|l| decomposed_interleaving(&l))
            .map_err(|e| (e.to_string(), docs()))
    };
    let options = enumerate_matchings(sigma.source(), sigma.target(), eps, true, 4);
    let a = build(&sigma)?;
    let b = match options.iter().find(|m| **m != sigma) {
        Some(other) => build(other)?,
        None => a.rescaled(2, 3),
    };
    if a.is_trivial() && b.is_trivial() {
        return square_twist_case(rng);
    }
    check_square(&a, &b)
}

fn hom_lemma_sweep(t: &mut Tally) {
    let field = FieldSpec::default();
    let intervals: Vec<Interval> = (0..=8).flat_map(|x| (x..=8).map(move |y| Interval::closed(x, y))).collect();
    for eps in 0..=3u64 {
        for i in &intervals {
            for j in &intervals {
                t.record(hom_lemma_cell(i, j, eps, field));
            }
        }
    }
}

fn hom_lemma_cell(i: &Interval, j: &Interval, eps: u64, field: FieldSpec) -> CaseResult {
    let docs = || vec![Document::Barcode(Barcode::from_intervals([*i])), Document::Barcode(Barcode::from_intervals([*j]))];
    let err = |e: &dyn std::fmt::Display| (format!("{i} vs {j} at ε={eps}: {e}"), docs());
    let w = padded_window(i, j, eps);
    let star = condition_star(i, j, eps);
    let hom = hom_dimension(i, &j.shifted_down(eps), &w, field).map_err(|e| err(&e))? > 0
        || hom_dimension(j, &i.shifted_down(eps), &w, field).map_err(|e| err(&e))? > 0;
    let canon = canonical_interleaving(i, j, eps, &w, field).is_ok_and(|x| !x.is_trivial());
    check(star == hom, || format!("{i} vs {j} at ε={eps}: (⋆) is {star} but Hom nonvanishing is {hom}"), docs)?;
    check(!canon || hom, || format!("{i} vs {j} at ε={eps}: nontrivial interleaving without Hom"), docs)?;
    let hypothesis = i.is_short(eps) && j.is_short(eps) && generate::endpoints_within(i, j, eps);
    check(!hypothesis || canon == star, || {
        format!("{i} vs {j} at ε={eps}: (⋆) is {star} but canonical interleaving nontrivial is {canon}")
    }, docs)
}

fn barcode_case(rng: &mut Rng64, field: FieldSpec) -> CaseResult {
    let len = rng.gen_range(1..=8i64);
    let lo = rng.gen_range(-3..=3i64);
    let w = Window::new(lo, lo + len - 1).expect("nonempty");
    let mut truth = Barcode::new();
    for _ in 0..rng.gen_range(0..=10) {
        let a = rng.gen_range(w.lo()..=w.hi());
        let b = rng.gen_range(a..=w.hi());
        let bar = Interval::closed(a, b);
        if w.points().filter(|&x| bar.contains(x)).all(|x| truth.rank_at(x) < 6) {
            truth.add(bar, 1);
        }
    }
    let sum = Arc::new(interval_sum(&truth.instances(), &w, field).map_err(|e| (e.to_string(), vec![]))?.rep);
    let basis = generate::random_basis(rng, &sum);
    let (scrambled, _) = crate::rep::change_basis(&sum, &basis).map_err(|e| (e.to_string(), vec![]))?;
    let wm = WindowModule::new(w, scrambled).map_err(|e| (e.to_string(), vec![]))?;
    let docs = || vec![Document::WindowModule(wm.clone()), Document::Barcode(truth.clone())];
    let got = barcode(&wm, Boundary::Finite);
    check(got == truth, || "extracted barcode differs from ground truth".into(), docs)?;
    for (k, x) in w.points().enumerate() {
        check(got.rank_at(x) == wm.rep().dim(k), || format!("dimension not conserved at {x}"), docs)?;
    }
    let edge = |e: ExtendedInt, at: i64, inf: ExtendedInt| if e == ExtendedInt::Finite(at) { inf } else { e };
    let expected_inf: Barcode = truth
        .instances()
        .into_iter()
        .map(|b| {
            Interval::new(edge(b.lo(), w.lo(), ExtendedInt::NegInf), edge(b.hi(), w.hi(), ExtendedInt::PosInf))
                .expect("well formed")
        })
        .collect();
    check(barcode(&wm, Boundary::Infinite) == expected_inf, || "infinite-boundary barcode differs".into(), docs)
}

fn all_intervals(m: &Matching) -> Vec<Interval> {
    m.source().instances().into_iter().chain(m.target().instances()).collect()
}

/// The thin, connected, convex and endpoint checks on an expansion.
fn check_expansion(l: &DecomposedShoelaceRep) -> CaseResult {
    let docs = || vec![Document::DecomposedRep(l.clone())];
    let e = expand_decomposed(l).map_err(|e| (e.to_string(), docs()))?;
    for k in 0..e.sum.summand_count() {
        let part = e.sum.project(k);
        check(part.dims().iter().all(|&d| d <= 1), || format!("summand {k} is not thin"), docs)?;
        let identities = part.maps().iter().all(|(&(a, b), m)| part.dim(a) == 0 || part.dim(b) == 0 || m.is_identity());
        check(identities, || format!("summand {k} has a non-identity internal map"), docs)?;
        let support: Vec<bool> = part.dims().iter().map(|&d| d == 1).collect();
        check(support == l.support(k), || format!("summand {k} has the wrong support"), docs)?;
        let s = l.summands()[k];
        if let (Some(i), Some(j)) = (s.left, s.right) {
            check(generate::endpoints_within(&i, &j, l.epsilon()), || format!("summand {s} breaks the endpoint bounds"), docs)?;
        }
    }
    let left = restrict(&e.shoelace, &e.sum.rep, Side::Left).map_err(|e| (e.to_string(), docs()))?;
    let right = restrict(&e.shoelace, &e.sum.rep, Side::Right).map_err(|e| (e.to_string(), docs()))?;
    let w = l.window();
    let bc = |r: Representation| {
        WindowModule::new(w, Arc::new(r)).map(|wm| barcode(&wm, Boundary::Finite)).map_err(|e| (e.to_string(), docs()))
    };
    let clamp = |side: fn(&Summand) -> Option<Interval>| -> Barcode {
        l.summands()
            .iter()
            .filter_map(side)
            .map(|i| {
                let (a, b) = i.clamp_to(&w).expect("admitted");
                Interval::closed(a, b)
            })
            .collect()
    };
    check(bc(left)? == clamp(|s| s.left), || "left restriction has the wrong barcode".into(), docs)?;
    check(bc(right)? == clamp(|s| s.right), || "right restriction has the wrong barcode".into(), docs)
}

fn bijection_matching_case(rng: &mut Rng64, field: FieldSpec) -> CaseResult {
    let eps = rng.gen_range(0..=3);
    let sigma = generate::random_essential_matching(rng, eps, 4, 8, true);
    let w = Window::around(&all_intervals(&sigma), 2 * eps);
    let docs = || vec![Document::Matching(sigma.clone())];
    let l = matching_to_rep(&sigma, &w, Variant::Essential, field).map_err(|e| (e.to_string(), docs()))?;
    let back = rep_to_matching(&l).map_err(|e| (e.to_string(), docs()))?;
    check(back == sigma, || "G(F(σ)) differs from σ".into(), docs)?;
    check_expansion(&l)
}

fn random_candidate(rng: &mut Rng64, eps: u64) -> Summand {
    let i = generate::random_interval(rng, 8, true);
    match rng.gen_range(0..4) {
        0 if eps > 0 => {
            let k = generate::random_short(rng, 8, eps);
            if rng.gen_bool(0.5) { Summand::left(k) } else { Summand::right(k) }
        }
        1 => Summand::left(i),
        _ => Summand::pair(i, generate::random_neighbour(rng, &i, eps + 1)),
    }
}

fn bijection_decomposition_case(rng: &mut Rng64, field: FieldSpec) -> CaseResult {
    let eps = rng.gen_range(0..=3u64);
    let margin = 3 * eps as i64 + 1;
    let w = Window::new(-margin, 8 + margin).expect("nonempty");
    let mut accepted = Vec::new();
    for _ in 0..rng.gen_range(1..=8) {
        let s = random_candidate(rng, eps);
        let alone = DecomposedShoelaceRep::new(w, eps, field, vec![s]);
        if let (Some(i), Some(j)) = (s.left, s.right) {
            let within = generate::endpoints_within(&i, &j, eps);
            let star_ok = !(i.is_short(eps) && j.is_short(eps)) || condition_star(&i, &j, eps);
            check(alone.is_err() || (within && star_ok), || format!("summand {s} accepted against the endpoint bounds"), || {
                vec![Document::DecomposedRep(DecomposedShoelaceRep::from_raw(w, eps, field, vec![s]))]
            })?;
        }
        if alone.is_ok() && accepted.len() < 5 {
            accepted.push(s);
        }
    }
    accepted.shuffle(rng);
    let l = DecomposedShoelaceRep::new(w, eps, field, accepted).map_err(|e| (e.to_string(), vec![]))?;
    let docs = || vec![Document::DecomposedRep(l.clone())];
    let sigma = rep_to_matching(&l).map_err(|e| (e.to_string(), docs()))?;
    check(is_essential(&sigma).is_ok_and(|v| v.is_empty()), || "G(L) is not essential".into(), docs)?;
    let again = matching_to_rep(&sigma, &w, Variant::Essential, field).map_err(|e| (e.to_string(), docs()))?;
    check(again == l.canonical(), || "F(G(L)) differs from L".into(), docs)?;
    check_expansion(&l)
}

fn nonessential_case() -> CaseResult {
    let field = FieldSpec::default();
    let eps = 2;
    let bad = (Interval::closed(0, 0), Interval::closed(1, 1));
    let good = (Interval::closed(3, 9), Interval::closed(4, 8));
    let source = Barcode::from_intervals([bad.0, good.0]);
    let target = Barcode::from_intervals([bad.1, good.1]);
    let sigma = Matching::from_interval_pairs(source, target, eps, &[bad, good]).map_err(|e| (e.to_string(), vec![]))?;
    let docs = || vec![Document::Matching(sigma.clone())];
    let violating = is_essential(&sigma).map_err(|e| (e.to_string(), docs()))?;
    check(violating == vec![bad], || format!("expected exactly one (⋆) violation, got {violating:?}"), docs)?;
    let w = Window::around(&all_intervals(&sigma), 2 * eps);
    let l = matching_to_rep(&sigma, &w, Variant::NonEssential, field).map_err(|e| (e.to_string(), docs()))?;
    let back = rep_to_matching(&l).map_err(|e| (e.to_string(), docs()))?;
    check(back != sigma, || "G(F'(σ)) equals σ".into(), docs)?;
    check(back.source() == sigma.source() && back.target() == sigma.target(), || "barcodes changed".into(), docs)?;
    check(back.matched() == vec![good], || format!("G(F'(σ)) matches {:?}", back.matched()), docs)
}

fn final_remark_case(rng: &mut Rng64, field: FieldSpec) -> CaseResult {
    let eps = rng.gen_range(0..=2);
    let sigma0 = generate::random_essential_matching(rng, eps, 4, 8, false);
    let w = Window::around(&all_intervals(&sigma0), 2 * eps);
    let docs = || vec![Document::Matching(sigma0.clone())];
    let err = |e: &dyn std::fmt::Display| (e.to_string(), docs());
    let l0 = matching_to_rep(&sigma0, &w, Variant::Essential, field).map_err(|e| err(&e))?;
    let mut x = decomposed_interleaving(&l0).map_err(|e| err(&e))?;
    if field.prime() == 5 && rng.gen_bool(0.5) {
        x = x.rescaled(2, 3);
    }
    let sigma = find_matching(sigma0.source(), sigma0.target(), eps, false)
        .ok_or_else(|| ("no ε-matching found for interleaved barcodes".to_string(), docs()))?;
    let l = matching_to_rep(&sigma, &w, Variant::NonEssential, field).map_err(|e| err(&e))?;
    let y = decomposed_interleaving(&l).map_err(|e| err(&e))?;
    let (sh, sq) = square_interleave(&x, &y).map_err(|e| {
        (e.to_string(), vec![Document::Interleaving(x.clone()), Document::Interleaving(y.clone())])
    })?;
    sq.validate().map_err(|e| err(&e))?;
    let twisted = sh.induced_translation(x.lam(), true).map_err(|e| err(&e))?;
    check(sq.lam() == &twisted, || "square is not over the twisted translation".into(), docs)?;
    // the modules really are the canonical interval sums of the barcodes
    let m = interval_sum(&sigma0.source().instances(), &w, field).map_err(|e| err(&e))?.rep;
    check(**x.m() == m, || "M is not in the canonical interval basis".into(), docs)
}

