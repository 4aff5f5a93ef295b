//! Seeded verification harness: every closed form against its
//! independent route, on random rational alphabets.
//!
//! Each suite draws its alphabets from a ChaCha stream seeded by the
//! user seed and the suite's own index, so a suite produces the same
//! report whether it runs alone, with the others, or on its own thread.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alphabet::{sigma, Alphabet, Completes, VirtualAlphabet};
use crate::arith::{rat, Rational, Series};
use crate::closedform::{
    eq8_solve, eq9_check, low_k_identities, pade, remainder_one_by_sigma, remainder_sigma_by_one,
    remainder_sigma_by_sigma, IdentityOutcome,
};
use crate::contfrac::{cf_verify, exact_generating_function};
use crate::error::Error;
use crate::euclid::{divide_iterate, divide_series, DivisionTrace};
use crate::schur::{schur, schur_from, schur_partition, IntVector, Partition};
use crate::wronskian::{
    alphabet_sequence, bazin_check, cross_check_sequences, wronskian_closed, wronskian_closed_from,
    wronskian_det, wronskian_det_from, wronskian_raw, WronskianQuery,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Theorem1,
    Eq7,
    Prop1,
    Pade,
    Eq8,
    Wronskian,
    Bazin,
    Cfrac,
    Signs,
    Lowk,
    Termination,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Theorem1,
        Suite::Eq7,
        Suite::Prop1,
        Suite::Pade,
        Suite::Eq8,
        Suite::Wronskian,
        Suite::Bazin,
        Suite::Cfrac,
        Suite::Signs,
        Suite::Lowk,
        Suite::Termination,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Eq7 => "eq7",
            Suite::Prop1 => "prop1",
            Suite::Pade => "pade",
            Suite::Eq8 => "eq8",
            Suite::Wronskian => "wronskian",
            Suite::Bazin => "bazin",
            Suite::Cfrac => "cfrac",
            Suite::Signs => "signs",
            Suite::Lowk => "lowk",
            Suite::Termination => "termination",
        }
    }

    /// Number of random trials when none is requested.
    pub fn default_trials(self) -> usize {
        match self {
            Suite::Theorem1 | Suite::Eq7 | Suite::Prop1 | Suite::Pade | Suite::Eq8 => 50,
            Suite::Wronskian | Suite::Bazin | Suite::Cfrac | Suite::Lowk => 20,
            Suite::Signs => 100,
            Suite::Termination => 30,
        }
    }

    fn index(self) -> u64 {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") as u64
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub trials: usize,
    pub checks: usize,
    /// Random alphabets discarded because a normalizer vanished.
    pub redraws: usize,
    pub failures: Vec<String>,
}

const MAX_FAILURES: usize = 10;
const MAX_REDRAWS: usize = 1000;

struct Recorder {
    suite: Suite,
    trials: usize,
    checks: usize,
    redraws: usize,
    failures: Vec<String>,
    failed: usize,
}

impl Recorder {
    fn new(suite: Suite, trials: usize) -> Self {
        Recorder {
            suite,
            trials,
            checks: 0,
            redraws: 0,
            failures: Vec::new(),
            failed: 0,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(what());
            }
        }
    }

    fn fail(&mut self, what: String) {
        self.check(false, || what);
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            passed: self.failed == 0,
            trials: self.trials,
            checks: self.checks,
            redraws: self.redraws,
            failures: self.failures,
        }
    }

    /// Draws until `f` accepts; `None` results count as redraws.
    fn draw<T>(&mut self, rng: &mut ChaCha8Rng, mut f: impl FnMut(&mut ChaCha8Rng) -> Option<T>) -> Option<T> {
        for _ in 0..MAX_REDRAWS {
            if let Some(v) = f(rng) {
                return Some(v);
            }
            self.redraws += 1;
        }
        self.fail(format!("no generic draw after {MAX_REDRAWS} attempts"));
        None
    }
}

/// Nonzero rational with `|numerator| <= 9`, `denominator <= 9`.
pub fn random_letter(rng: &mut impl Rng) -> Rational {
    loop {
        let n: i64 = rng.random_range(-9..=9);
        if n != 0 {
            return rat(n, rng.random_range(1..=9));
        }
    }
}

pub fn random_alphabet(rng: &mut impl Rng, size: usize) -> Alphabet {
    Alphabet::new((0..size).map(|_| random_letter(rng)).collect())
}

pub fn random_plain(rng: &mut impl Rng, sizes: std::ops::RangeInclusive<usize>) -> VirtualAlphabet {
    let n = rng.random_range(sizes);
    VirtualAlphabet::plain(random_alphabet(rng, n))
}

/// Uniform weight in `0..=max_weight`, then a random composition sorted
/// into a partition.
pub fn random_partition(rng: &mut impl Rng, max_weight: usize) -> Partition {
    let mut left = rng.random_range(0..=max_weight);
    let mut parts = Vec::new();
    while left > 0 {
        let p = rng.random_range(1..=left);
        parts.push(p);
        left -= p;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted parts")
}

fn suite_rng(seed: u64, suite: Suite) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (suite.index() + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn run_suite(suite: Suite, seed: u64, trials: Option<usize>) -> SuiteReport {
    let trials = trials.unwrap_or_else(|| suite.default_trials());
    let mut rng = suite_rng(seed, suite);
    let mut rec = Recorder::new(suite, trials);
    match suite {
        Suite::Theorem1 => theorem1(&mut rec, &mut rng),
        Suite::Eq7 => eq7(&mut rec, &mut rng),
        Suite::Prop1 => prop1(&mut rec, &mut rng),
        Suite::Pade => pade_suite(&mut rec, &mut rng),
        Suite::Eq8 => eq8(&mut rec, &mut rng),
        Suite::Wronskian => wronskian(&mut rec, &mut rng),
        Suite::Bazin => bazin(&mut rec, &mut rng),
        Suite::Cfrac => cfrac(&mut rec, &mut rng),
        Suite::Signs => signs(&mut rec, &mut rng),
        Suite::Lowk => lowk(&mut rec, &mut rng),
        Suite::Termination => termination(&mut rec, &mut rng),
    }
    rec.finish()
}

/// Runs suites in the given order; with `parallel`, each on its own
/// thread. Reports come back in input order either way.
pub fn run_suites(suites: &[Suite], seed: u64, trials: Option<usize>, parallel: bool) -> Vec<SuiteReport> {
    if !parallel {
        return suites.iter().map(|&s| run_suite(s, seed, trials)).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&s| scope.spawn(move || run_suite(s, seed, trials)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

const DEPTH: usize = 3;
const ORDER: usize = 12;

fn generic_trace(num: &VirtualAlphabet, den: &VirtualAlphabet) -> Option<DivisionTrace> {
    let t = divide_iterate(num, den, DEPTH, ORDER).ok()?;
    (t.steps.len() == DEPTH).then_some(t)
}

fn theorem1(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let a12 = VirtualAlphabet::from_ints(&[1, 2], &[]);
    rec.check(
        remainder_sigma_by_one(&a12, 1, 3).ok() == Some(Series::new(vec![rat(1, 1), rat(15, 7), rat(31, 7)])),
        || "anchor f_1 for {1,2}".into(),
    );
    rec.check(
        remainder_sigma_by_one(&a12, 2, 4).ok() == Some(Series::from_ints(&[1, 3, 7, 15])),
        || "anchor f_2 for {1,2}".into(),
    );
    for _ in 0..rec.trials {
        let drawn = rec.draw(rng, |rng| {
            let a = random_plain(rng, 4..=7);
            let t = generic_trace(&a, &VirtualAlphabet::zero())?;
            let closed = (1..=DEPTH)
                .map(|k| remainder_sigma_by_one(&a, k, ORDER - 2 * k).ok())
                .collect::<Option<Vec<_>>>()?;
            Some((a, t, closed))
        });
        let Some((a, t, closed)) = drawn else { return };
        for (k, c) in (1..=DEPTH).zip(&closed) {
            rec.check(&t.steps[k - 1].remainder == c, || format!("A={a} k={k}: closed form differs from division"));
        }
    }
}

fn eq7(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    for _ in 0..rec.trials {
        let drawn = rec.draw(rng, |rng| {
            let a = random_plain(rng, 4..=7);
            let b = random_plain(rng, 0..=2);
            let t = generic_trace(&a, &b)?;
            let closed = (1..=DEPTH)
                .map(|k| remainder_sigma_by_sigma(&a, &b, k, ORDER - 2 * k).ok())
                .collect::<Option<Vec<_>>>()?;
            Some((a, b, t, closed))
        });
        let Some((a, b, t, closed)) = drawn else { return };
        for (k, c) in (1..=DEPTH).zip(&closed) {
            rec.check(&t.steps[k - 1].remainder == c, || format!("A={a} B={b} k={k}: closed form differs"));
        }
        // dividing the quotient series by 1 gives the same scalars, and
        // remainders scaled by sigma(B)
        let sb = sigma(&b, ORDER);
        let q = sigma(&a, ORDER).div(&sb).expect("unitary divisor");
        match divide_series(q, Series::one(ORDER), DEPTH) {
            Ok(u) if u.steps.len() == DEPTH => {
                for (s, v) in t.steps.iter().zip(&u.steps) {
                    rec.check(s.alpha == v.alpha && s.beta == v.beta, || {
                        format!("A={a} B={b} k={}: scalars not quotient-invariant", s.k)
                    });
                    rec.check(sb.mul(&v.remainder) == s.remainder, || {
                        format!("A={a} B={b} k={}: remainder not sigma(B) multiple", s.k)
                    });
                }
            }
            _ => rec.fail(format!("A={a} B={b}: quotient division stopped early")),
        }
    }
}

fn prop1(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let a12 = VirtualAlphabet::from_ints(&[1, 2], &[]);
    rec.check(
        remainder_one_by_sigma(&a12, 1, 5).ok() == Some(Series::from_ints(&[1, 3, 7, 15, 31])),
        || "anchor sigma(A^1) for {1,2}".into(),
    );
    for _ in 0..rec.trials {
        let drawn = rec.draw(rng, |rng| {
            let a = random_plain(rng, 4..=7);
            let t = generic_trace(&VirtualAlphabet::zero(), &a)?;
            let closed = (1..=DEPTH)
                .map(|k| remainder_one_by_sigma(&a, k, ORDER - 2 * k).ok())
                .collect::<Option<Vec<_>>>()?;
            Some((a, t, closed))
        });
        let Some((a, t, closed)) = drawn else { return };
        for (k, c) in (1..=DEPTH).zip(&closed) {
            rec.check(&t.steps[k - 1].remainder == c, || format!("A={a} k={k}: sigma(A^k) differs"));
        }
    }
}

fn pade_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let a12 = VirtualAlphabet::from_ints(&[1, 2], &[]);
    match pade(&a12, 2) {
        Ok(p) => {
            let num = crate::arith::DensePoly::new(vec![rat(7, 1), rat(6, 1), rat(4, 1)]).scale(&rat(1, 7));
            let den = crate::arith::DensePoly::new(vec![rat(7, 1), rat(-15, 1)]).scale(&rat(1, 7));
            rec.check(p.numerator == num && p.denominator == den, || "anchor approximant for {1,2}".into());
            rec.check(p.contact_order == 4, || format!("anchor contact {} != 4", p.contact_order));
            rec.check(p.leading_deviation == Some(rat(-8, 7)), || "anchor deviation != -8/7".into());
        }
        Err(e) => rec.fail(format!("anchor: {e}")),
    }
    for _ in 0..rec.trials {
        let drawn = rec.draw(rng, |rng| {
            let a = random_plain(rng, 4..=7);
            let ps = (1..=DEPTH).map(|k| pade(&a, k).ok()).collect::<Option<Vec<_>>>()?;
            let rects_nonzero = (1..=DEPTH).all(|k| !schur_partition(&Partition::rectangle(k + 1, k), &a).is_zero());
            rects_nonzero.then_some((a, ps))
        });
        let Some((a, ps)) = drawn else { return };
        for p in &ps {
            let k = p.k;
            rec.check(p.contact_order >= 2 * k, || format!("A={a} k={k}: contact {}", p.contact_order));
            let rect = schur_partition(&Partition::rectangle(k + 1, k), &a);
            let den0 = p.raw_denominator.coeff(1 - k as i64);
            rec.check(p.leading_deviation == Some(rect / den0), || format!("A={a} k={k}: deviation law"));
            match eq8_solve(&a, k, 2 * k + 2) {
                Ok(e) => rec.check(
                    e.quotient_poly == p.denominator && e.subtrahend_poly == p.numerator,
                    || format!("A={a} k={k}: approximant differs from linear-system solution"),
                ),
                Err(e) => rec.fail(format!("A={a} k={k}: eq8 {e}")),
            }
            match eq9_check(&a, k, ORDER) {
                Ok(r) => rec.check(r.all(), || format!("A={a} k={k}: coefficient structure {r:?}")),
                Err(e) => rec.fail(format!("A={a} k={k}: {e}")),
            }
        }
    }
}

fn eq8(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let a12 = VirtualAlphabet::from_ints(&[1, 2], &[]);
    match eq8_solve(&a12, 2, 8) {
        Ok(s) => {
            let s_ = |v: &[i64]| schur(&IntVector(v.to_vec()), &a12);
            let s2 = s_(&[2]);
            let want_q = crate::arith::DensePoly::new(vec![rat(1, 1), -s_(&[3]) / &s2]);
            let want_p = crate::arith::DensePoly::new(vec![rat(1, 1), s_(&[2, 1]) / &s2, s_(&[2, 2]) / &s2]);
            rec.check(s.quotient_poly == want_q && s.quotient_poly.coeff(1) == rat(-15, 7), || "anchor quotient".into());
            rec.check(s.subtrahend_poly == want_p && s.subtrahend_poly.coeff(2) == rat(4, 7), || "anchor subtrahend".into());
            rec.check(s.gamma == -s_(&[3, 3]) / &s2 && s.gamma == rat(-8, 7), || "anchor gamma".into());
        }
        Err(e) => rec.fail(format!("anchor: {e}")),
    }
    for _ in 0..rec.trials {
        let drawn = rec.draw(rng, |rng| {
            let a = random_plain(rng, 4..=7);
            let t = generic_trace(&a, &VirtualAlphabet::zero())?;
            let sols = (1..=DEPTH).map(|k| eq8_solve(&a, k, ORDER).ok()).collect::<Option<Vec<_>>>()?;
            Some((a, t, sols))
        });
        let Some((a, t, sols)) = drawn else { return };
        for s in &sols {
            let k = s.k;
            let ok = s.quotient_poly.coeff(0).is_one() && s.subtrahend_poly.coeff(0).is_one() && !s.gamma.is_zero();
            rec.check(ok, || format!("A={a} k={k}: malformed solution"));
            rec.check(s.remainder().ok().as_ref() == Some(&t.steps[k - 1].remainder), || {
                format!("A={a} k={k}: implied f_k differs from division")
            });
        }
    }
}

fn wronskian(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let a12 = VirtualAlphabet::from_ints(&[1, 2], &[]);
    let q12 = WronskianQuery::new(vec![1, 2]).expect("nonempty");
    rec.check(
        wronskian_det(&q12, &a12, 6).ok() == Some(rat(2, 1)) && wronskian_closed(&q12, &a12).ok() == Some(rat(2, 1)),
        || "anchor W(S_1,S_2;{1,2}) = 2".into(),
    );
    const MAX_N: usize = 4;
    const MAX_K: usize = 6;
    let order = 2 * MAX_N + 2;
    for _ in 0..rec.trials {
        let drawn = rec.draw(rng, |rng| {
            let a = random_plain(rng, 5..=5);
            let seq = alphabet_sequence(&a, MAX_N - 1, order).ok()?;
            let h = Completes::new(&a, MAX_K + 2 * MAX_N + 2);
            let gen = (1..=MAX_N).all(|n| !schur_from(&Partition::rectangle(n - 1, n).to_vector(), &h).is_zero());
            gen.then_some((a, seq, h))
        });
        let Some((a, seq, h)) = drawn else { return };
        rec.check(cross_check_sequences(&a, MAX_N - 1, order) == Ok(true), || {
            format!("A={a}: division and closed-form sequences differ")
        });
        for n in 1..=MAX_N {
            let mut k = vec![0usize; n];
            loop {
                let q = WronskianQuery::new(k.clone()).expect("nonempty");
                let det = wronskian_det_from(&q, &seq);
                let closed = wronskian_closed_from(&q, &h);
                rec.check(det.as_ref().ok() == closed.as_ref(), || format!("A={a} K={k:?}: {det:?} vs {closed:?}"));
                // odometer over {0..=MAX_K}^n
                let Some(pos) = k.iter().rposition(|&x| x < MAX_K) else { break };
                k[pos] += 1;
                for x in &mut k[pos + 1..] {
                    *x = 0;
                }
            }
        }
        for _ in 0..5 {
            let n = rng.random_range(1..=MAX_N);
            let k: Vec<usize> = (0..n).map(|_| rng.random_range(0..=MAX_K)).collect();
            let q = WronskianQuery::new(k.clone()).expect("nonempty");
            let (raw, norm) = wronskian_raw(&q, &a);
            let det = wronskian_det_from(&q, &seq).expect("sized sequence");
            rec.check(raw == det * norm, || format!("A={a} K={k:?}: row normalization"));
        }
    }
}

fn bazin(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let a4 = VirtualAlphabet::from_ints(&[1, 2, 3, 4], &[]);
    let r = bazin_check(&a4, [0, 1, 2, 3]);
    rec.check(r.equal, || "degenerate anchor K=[0,1,2,3]".into());
    let r = bazin_check(&a4, [4, 5, 6, 7]);
    rec.check(r.equal && !r.lhs.is_zero() && r.minors_identified, || "anchor K=[4,5,6,7]".into());
    for _ in 0..rec.trials {
        let a = random_plain(rng, 4..=5);
        let mut k = [0usize; 4];
        let mut i = 0;
        while i < 4 {
            let x = rng.random_range(4..=10);
            if !k[..i].contains(&x) {
                k[i] = x;
                i += 1;
            }
        }
        let r = bazin_check(&a, k);
        rec.check(r.equal, || format!("A={a} K={k:?}: {} != {}", r.lhs, r.rhs));
        rec.check(r.minors_identified, || format!("A={a} K={k:?}: minors differ from Schur names"));
    }
}

fn cfrac(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let a12 = VirtualAlphabet::from_ints(&[1, 2], &[]);
    match cf_verify(&a12, 1, 10) {
        Ok(r) => {
            let single = r.levels.len() == 2
                && r.levels[0].s1 == rat(-3, 1)
                && r.levels[0].s2 == rat(2, 1)
                && r.levels[1].s1.is_zero()
                && r.levels[1].is_final();
            rec.check(single, || format!("anchor levels {:?}", r.levels));
            let exact = exact_generating_function(&a12).expect("plain");
            rec.check(r.convergent.same_function(&exact) && r.exact_to_order, || "anchor z/(z^2-3z+2)".into());
            rec.check(r.levels_match_division, || "anchor levels vs division".into());
        }
        Err(e) => rec.fail(format!("anchor: {e}")),
    }
    const SIZE: usize = 5;
    let order = 4 * SIZE + 4;
    for _ in 0..rec.trials {
        let drawn = rec.draw(rng, |rng| {
            let a = random_plain(rng, SIZE..=SIZE);
            let reports = (0..SIZE).map(|d| cf_verify(&a, d, order).ok()).collect::<Option<Vec<_>>>()?;
            // generic: exactly SIZE levels, only the last one final
            (reports[SIZE - 1].levels.len() == SIZE).then_some((a, reports))
        });
        let Some((a, reports)) = drawn else { return };
        for r in &reports {
            let d = r.depth;
            rec.check(r.levels_match_division, || format!("A={a} depth {d}: levels differ from division"));
            rec.check(r.matched_terms >= 2 * d, || format!("A={a} depth {d}: matched {}", r.matched_terms));
        }
        let last = &reports[SIZE - 1];
        let exact = exact_generating_function(&a).expect("plain");
        rec.check(last.convergent.same_function(&exact), || format!("A={a}: final convergent not exact"));
    }
    // small alphabets terminate with an exact final convergent
    for n in 1..=3 {
        let a = random_plain(rng, n..=n);
        match cf_verify(&a, n, 4 * n + 6) {
            Ok(r) => {
                let exact = exact_generating_function(&a).expect("plain");
                rec.check(
                    r.levels.last().is_some_and(|l| l.is_final()) && r.convergent.same_function(&exact),
                    || format!("A={a}: terminating fraction not exact"),
                );
            }
            Err(e) => rec.fail(format!("A={a}: {e}")),
        }
    }
}

fn signs(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    for _ in 0..rec.trials {
        let lambda = random_partition(rng, 8);
        let plus = rng.random_range(1..=4);
        let minus = rng.random_range(0..=2);
        let a = VirtualAlphabet::new(random_alphabet(rng, plus), random_alphabet(rng, minus));
        let lhs = schur_partition(&lambda, &a);
        let mut rhs = schur_partition(&lambda.conjugate(), &a.negated());
        if lambda.weight() % 2 == 1 {
            rhs = -rhs;
        }
        rec.check(lhs == rhs, || format!("lambda=({lambda}) A={a}: sign rule"));
        let plain = VirtualAlphabet::plain(a.plus.clone());
        if lambda.len() > plain.plus.len() {
            rec.check(schur_partition(&lambda, &plain).is_zero(), || {
                format!("lambda=({lambda}) A={plain}: too many rows but nonzero")
            });
        }
    }
}

fn lowk(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    for _ in 0..rec.trials {
        let drawn = rec.draw(rng, |rng| {
            let a = random_plain(rng, 4..=6);
            let r = low_k_identities(&a, ORDER).ok()?;
            let generic = r.checks.iter().all(|c| !matches!(c.outcome, IdentityOutcome::NonGeneric { .. }));
            generic.then_some((a, r))
        });
        let Some((a, r)) = drawn else { return };
        for c in &r.checks {
            rec.check(c.passed(), || format!("A={a} f_{}: {:?}", c.k, c.outcome));
        }
    }
}

/// `S_{(s+2)^{s+1}}(A)`, the rectangle governing division step `s`.
fn step_rectangle(a: &VirtualAlphabet, step: usize) -> Rational {
    schur_partition(&Partition::rectangle(step + 2, step + 1), a)
}

fn termination(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    for trial in 0..rec.trials {
        let n = trial % 3 + 1;
        let steps = n + 2;
        let order = 2 * steps + 4;
        let drawn = rec.draw(rng, |rng| {
            let a = random_plain(rng, n..=n);
            (0..n).all(|s| !step_rectangle(&a, s).is_zero()).then_some(a)
        });
        let Some(a) = drawn else { return };
        let t = match divide_iterate(&a, &VirtualAlphabet::zero(), steps, order) {
            Ok(t) => t,
            Err(e) => {
                rec.fail(format!("A={a}: {e}"));
                continue;
            }
        };
        for s in &t.steps {
            rec.check(!step_rectangle(&a, s.k).is_zero(), || format!("A={a}: step {} ran past a zero rectangle", s.k));
        }
        match &t.terminated {
            Some(term) => {
                let witness = step_rectangle(&a, term.step);
                rec.check(witness.is_zero(), || format!("A={a}: terminated at {} with witness {witness}", term.step));
                rec.check(term.step == n, || format!("A={a}: |A|={n} terminated at step {}", term.step));
            }
            None => rec.fail(format!("A={a}: |A|={n} did not terminate within {steps} steps")),
        }
    }
}
