//! Identity and bijection suites run by `raney verify`.
//!
//! Each suite checks one family of identities over a finite range and
//! reports how many comparisons it made. Reports contain no timing so that
//! repeated runs print identical text.

use std::collections::BTreeSet;
use std::fmt;

use crate::coral::{
    bijection_pp_to_p1, check_coral_code, coral_tiers, coral_to_weak_composition, count_coral,
    enumerate_coral_tiered, enumerate_coral_tuple,
};
use crate::numbers::{
    binomial, compositions, p_catalan, raney_closed, raney_closed_alt, raney_composition_sum,
    raney_convolution, tier_product, weak_compositions, WeakComposition,
};
use crate::trees::{enumerate_pary_trees, validate, CanonicalCode, PlaneTree};
use crate::webs::{
    enumerate_a2_tree_webs_constant, enumerate_a2_tree_webs_minus, enumerate_sourcesink_trees,
    orient_with_word, sourcesink_boundary_len, sourcesink_trees_by_filter, OrientedTreeWeb, Sign,
};
use crate::{ExactNat, DEFAULT_SIZE_CAP};

/// Ranges for every suite. The defaults are the ranges the library is
/// checked against in its acceptance tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest p, r and k for the four-route identity.
    pub identity_p_max: u32,
    pub identity_r_max: u32,
    pub identity_k_max: u32,
    /// Largest p and r (both) and k for generator agreement; (4,2) is
    /// always added up to `coral_extra_k_max`.
    pub coral_pr_max: u32,
    pub coral_k_max: u32,
    pub coral_extra_k_max: u32,
    pub bijection_p_max: u32,
    pub bijection_k_max: u32,
    pub weak_r_max: u32,
    pub weak_k_max: u32,
    pub catalan_n_max: u32,
    pub catalan_coral_n_max: u32,
    /// Largest k for the constant-boundary webs (p = 2).
    pub web_k_max: u32,
    /// Largest k for p = 3 source/sink trees.
    pub web_p3_k_max: u32,
    pub minus_k_max: u32,
    pub cap: u64,
    /// Perturbs one closed-form value so the identity suite must fail.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            identity_p_max: 5,
            identity_r_max: 5,
            identity_k_max: 8,
            coral_pr_max: 3,
            coral_k_max: 5,
            coral_extra_k_max: 4,
            bijection_p_max: 3,
            bijection_k_max: 4,
            weak_r_max: 5,
            weak_k_max: 8,
            catalan_n_max: 12,
            catalan_coral_n_max: 8,
            web_k_max: 4,
            web_p3_k_max: 1,
            minus_k_max: 3,
            cap: DEFAULT_SIZE_CAP,
            inject_fault: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks)", self.name, self.checks)?;
        for note in &self.notes {
            write!(f, "\n    {note}")?;
        }
        for failure in self.failures.iter().take(10) {
            write!(f, "\n    mismatch: {failure}")?;
        }
        if self.failures.len() > 10 {
            write!(f, "\n    ... {} more", self.failures.len() - 10)?;
        }
        Ok(())
    }
}

struct Suite {
    report: SuiteReport,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Self {
            report: SuiteReport {
                name,
                checks: 0,
                failures: Vec::new(),
                notes: Vec::new(),
            },
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.report.checks += 1;
        if !ok {
            self.report.failures.push(describe());
        }
    }

    fn eq<T: PartialEq + fmt::Display>(
        &mut self,
        what: impl FnOnce() -> String,
        left: T,
        right: T,
    ) {
        let ok = left == right;
        self.check(ok, || format!("{}: {left} != {right}", what()));
    }

    fn note(&mut self, note: String) {
        self.report.notes.push(note);
    }

    fn done(self) -> SuiteReport {
        self.report
    }
}

/// Exit status for a set of reports: 0 when every suite passed, 1 otherwise.
pub fn exit_code(reports: &[SuiteReport]) -> i32 {
    if reports.iter().all(SuiteReport::passed) {
        0
    } else {
        1
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    let inject = cfg.inject_fault;
    let closed = move |p, r, k| {
        let value = raney_closed::<ExactNat>(p, r, k);
        if inject && (p, r, k) == (2, 2, 2) {
            value + 1u32
        } else {
            value
        }
    };
    vec![
        four_route_identity(cfg, closed),
        catalan_specialization(cfg),
        weak_composition_closed_form(),
        shift_identity(),
        composition_streams(cfg),
        pary_tree_counts(cfg),
        coral_generators(cfg),
        tier_decomposition(cfg),
        pp_bijection(cfg),
        weak_composition_bijection(cfg),
        sourcesink_oracle(cfg),
        web_anchors(cfg),
        minus_word_counts(cfg),
        web_structure(cfg),
    ]
}

/// The closed form, its alternative form, the composition sum and the
/// p-Catalan convolution agree.
pub fn four_route_identity(
    cfg: &VerifyConfig,
    closed: impl Fn(u32, u32, u32) -> ExactNat,
) -> SuiteReport {
    let mut s = Suite::new("four-route-identity");
    for p in 1..=cfg.identity_p_max {
        for r in 1..=cfg.identity_r_max {
            for k in 0..=cfg.identity_k_max {
                let value = closed(p, r, k);
                let at = || format!("R({p},{r},{k})");
                if k >= 1 {
                    s.eq(
                        || format!("{} alt", at()),
                        &value,
                        &raney_closed_alt(p, r, k),
                    );
                }
                s.eq(
                    || format!("{} composition sum", at()),
                    &value,
                    &raney_composition_sum(p, r, k),
                );
                s.eq(
                    || format!("{} convolution", at()),
                    &value,
                    &raney_convolution(p, r, k),
                );
            }
        }
    }
    s.done()
}

fn catalan_specialization(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = Suite::new("catalan-specialization");
    let c: Vec<ExactNat> = (0..=cfg.catalan_n_max + 1)
        .map(|n| raney_closed(2, 1, n))
        .collect();
    for n in 0..cfg.catalan_n_max as usize {
        let convolution: ExactNat = (0..=n).map(|i| &c[i] * &c[n - i]).sum();
        s.eq(|| format!("c({})", n + 1), &c[n + 1], &convolution);
    }
    for n in 0..=cfg.catalan_coral_n_max {
        s.eq(
            || format!("coral count (2,1,{n})"),
            &c[n as usize],
            &count_coral(2, 1, n),
        );
    }
    s.done()
}

fn weak_composition_closed_form() -> SuiteReport {
    let mut s = Suite::new("p1-weak-composition-count");
    for r in 1..=6 {
        for k in 0..=10 {
            s.eq(
                || format!("R(1,{r},{k})"),
                raney_closed::<ExactNat>(1, r, k),
                binomial(u64::from(k + r - 1), k.into()),
            );
        }
    }
    s.done()
}

fn shift_identity() -> SuiteReport {
    let mut s = Suite::new("pp-shift-identity");
    for p in 1..=6 {
        for k in 0..=8 {
            s.eq(
                || format!("R({p},{p},{k}) vs R({p},1,{})", k + 1),
                raney_closed::<ExactNat>(p, p, k),
                raney_closed(p, 1, k + 1),
            );
        }
    }
    s.done()
}

fn composition_streams(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = Suite::new("composition-streams");
    for k in 0..=cfg.catalan_n_max {
        let all: Vec<_> = compositions(k).collect();
        let distinct: BTreeSet<_> = all.iter().collect();
        let expected = if k == 0 { 1 } else { 1u64 << (k - 1) };
        s.eq(
            || format!("compositions of {k}"),
            all.len() as u64,
            expected,
        );
        s.eq(
            || format!("distinct compositions of {k}"),
            distinct.len(),
            all.len(),
        );
        s.check(all.iter().all(|c| c.total() == k), || {
            format!("composition totals for {k}")
        });
    }
    for r in 1..=cfg.weak_r_max {
        for k in 0..=cfg.weak_k_max {
            let all: Vec<WeakComposition> = weak_compositions(k, r).collect();
            let distinct: BTreeSet<_> = all.iter().collect();
            let expected: u64 = binomial(u64::from(k + r - 1), (r - 1).into());
            s.eq(
                || format!("weak compositions of {k} into {r}"),
                all.len() as u64,
                expected,
            );
            s.eq(
                || format!("distinct weak compositions of {k} into {r}"),
                distinct.len(),
                all.len(),
            );
        }
    }
    s.done()
}

fn pary_tree_counts(_cfg: &VerifyConfig) -> SuiteReport {
    let mut s = Suite::new("pary-tree-counts");
    for p in 1..=4 {
        for j in 0..=6 {
            let trees = enumerate_pary_trees(p, j);
            s.eq(
                || format!("p-ary trees ({p},{j})"),
                ExactNat::from(trees.len()),
                p_catalan(p, j),
            );
            let codes: BTreeSet<CanonicalCode> = trees.iter().map(PlaneTree::encode).collect();
            s.eq(
                || format!("distinct p-ary trees ({p},{j})"),
                codes.len(),
                trees.len(),
            );
            for t in &trees {
                let code = t.encode();
                s.check(validate(code.as_slice()).is_ok(), || {
                    format!("deficit of {code}")
                });
                s.check(&PlaneTree::decode(&code) == t, || {
                    format!("round trip of {code}")
                });
                s.eq(
                    || format!("boundary of {code}"),
                    t.boundary_leaves().len() as u32,
                    j * (p - 1) + 1,
                );
            }
        }
    }
    s.done()
}

fn coral_ranges(cfg: &VerifyConfig) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for p in 1..=cfg.coral_pr_max {
        for r in 1..=cfg.coral_pr_max {
            for k in 0..=cfg.coral_k_max {
                out.push((p, r, k));
            }
        }
    }
    for k in 0..=cfg.coral_extra_k_max {
        if !out.contains(&(4, 2, k)) {
            out.push((4, 2, k));
        }
    }
    out
}

/// Both generators emit the same codes, as many as the closed form says,
/// and every diagram satisfies the coral invariants.
fn coral_generators(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = Suite::new("coral-generators");
    for (p, r, k) in coral_ranges(cfg) {
        let tiered = enumerate_coral_tiered(p, r, k);
        let tuple = enumerate_coral_tuple(p, r, k);
        let tiered_codes: Vec<&CanonicalCode> = tiered.iter().map(|d| d.code()).collect();
        let tuple_codes: Vec<&CanonicalCode> = tuple.iter().map(|d| d.code()).collect();
        s.check(tiered_codes == tuple_codes, || {
            format!("code sets differ for ({p},{r},{k})")
        });
        s.eq(
            || format!("count ({p},{r},{k})"),
            ExactNat::from(tuple.len()),
            raney_closed(p, r, k),
        );
        let distinct: BTreeSet<_> = tuple_codes.iter().collect();
        s.eq(
            || format!("distinct ({p},{r},{k})"),
            distinct.len(),
            tuple.len(),
        );
        for d in tiered.iter().chain(&tuple) {
            let code = d.code();
            s.check(check_coral_code(p, r, code.as_slice()) == Ok(k), || {
                format!("invariants of {code} as ({p},{r},{k})")
            });
            s.eq(
                || format!("boundary of {code}"),
                d.boundary_len() as u32,
                r + 1 + k * (p - 1),
            );
        }
    }
    s.done()
}

fn tier_decomposition(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = Suite::new("tier-decomposition");
    for (p, r, k) in coral_ranges(cfg) {
        for (lambda, group) in coral_tiers(p, r, k) {
            s.eq(
                || format!("tiers {lambda} for ({p},{r})"),
                ExactNat::from(group.len()),
                tier_product(p, r, lambda.parts()),
            );
        }
    }
    s.done()
}

fn pp_bijection(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = Suite::new("pp-to-p1-bijection");
    for p in 1..=cfg.bijection_p_max {
        for k in 0..=cfg.bijection_k_max {
            let source = enumerate_coral_tuple(p, p, k);
            let image: BTreeSet<CanonicalCode> = source
                .iter()
                .filter_map(|d| bijection_pp_to_p1(d).ok())
                .map(|d| d.code().clone())
                .collect();
            let target: BTreeSet<CanonicalCode> = enumerate_coral_tuple(p, 1, k + 1)
                .into_iter()
                .map(|d| d.code().clone())
                .collect();
            s.eq(
                || format!("injective on ({p},{p},{k})"),
                image.len(),
                source.len(),
            );
            s.check(image == target, || {
                format!("image of ({p},{p},{k}) is not ({p},1,{})", k + 1)
            });
        }
    }
    s.done()
}

fn weak_composition_bijection(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = Suite::new("p1-weak-composition-bijection");
    for r in 1..=cfg.weak_r_max {
        for k in 0..=cfg.weak_k_max {
            let corals = enumerate_coral_tuple(1, r, k);
            let image: BTreeSet<WeakComposition> = corals
                .iter()
                .filter_map(|d| coral_to_weak_composition(d).ok())
                .collect();
            let target: BTreeSet<WeakComposition> = weak_compositions(k, r).collect();
            s.eq(
                || format!("injective on (1,{r},{k})"),
                image.len(),
                corals.len(),
            );
            s.check(image == target, || format!("image of (1,{r},{k})"));
            s.eq(
                || format!("count (1,{r},{k})"),
                ExactNat::from(corals.len()),
                binomial(u64::from(k + r - 1), k.into()),
            );
        }
    }
    s.done()
}

fn sourcesink_oracle(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = Suite::new("sourcesink-oracle");
    let cases = (0..=cfg.web_k_max)
        .map(|k| (2, k))
        .chain((0..=cfg.web_p3_k_max).map(|k| (3, k)));
    for (p, k) in cases {
        let built = enumerate_sourcesink_trees(p, k);
        match sourcesink_trees_by_filter(p, k, cfg.cap) {
            Ok(found) => {
                s.check(built == found, || {
                    format!("constructive and filtered webs differ for ({p},{k})")
                });
                s.eq(
                    || format!("R({},{p},{k})", p * p),
                    ExactNat::from(found.len()),
                    raney_closed(p * p, p, k),
                );
                s.note(format!(
                    "p={p} k={k}: constructive {} = filter {} = closed form {}",
                    built.len(),
                    found.len(),
                    raney_closed::<ExactNat>(p * p, p, k)
                ));
            }
            Err(e) => s.check(false, || format!("({p},{k}): {e}")),
        }
    }
    s.done()
}

fn web_anchors(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = Suite::new("web-anchors");
    let two = ExactNat::from(2u8);
    let one = ExactNat::from(1u8);
    let corals = count_coral(4, 2, 1);
    s.eq(|| "coral count (4,2,1)".into(), &corals, &two);
    s.note(format!("coral count (4,2,1): {corals} = 2"));
    let constant = ExactNat::from(enumerate_a2_tree_webs_constant(1).len());
    s.eq(|| "constant-boundary webs at k = 1".into(), &constant, &two);
    s.note(format!("constant-boundary webs at k=1: {constant} = 2"));
    match enumerate_a2_tree_webs_minus(1, cfg.cap) {
        Ok(webs) => {
            let minus = ExactNat::from(webs.len());
            s.eq(|| "minus-boundary webs at k = 1".into(), &minus, &one);
            s.note(format!("minus-boundary webs at k=1: {minus} = 1"));
        }
        Err(e) => s.check(false, || e.to_string()),
    }
    s.done()
}

fn minus_word_counts(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = Suite::new("minus-word-counts");
    for k in 0..=cfg.minus_k_max {
        match enumerate_a2_tree_webs_minus(k, cfg.cap) {
            Ok(webs) => {
                s.eq(
                    || format!("R(4,1,{k})"),
                    ExactNat::from(webs.len()),
                    raney_closed(4, 1, k),
                );
                for web in &webs {
                    s.eq(
                        || format!("boundary of {}", web.code()),
                        web.boundary().len(),
                        3 * k as usize + 2,
                    );
                }
            }
            Err(e) => s.check(false, || format!("k={k}: {e}")),
        }
    }
    s.done()
}

/// Boundary law, coherence and re-orientation on every emitted web.
fn web_structure(cfg: &VerifyConfig) -> SuiteReport {
    let mut s = Suite::new("web-structure");
    let mut webs: Vec<OrientedTreeWeb> = Vec::new();
    for k in 0..=cfg.web_k_max {
        let batch = enumerate_sourcesink_trees(2, k);
        for web in &batch {
            s.eq(
                || format!("boundary length of {}", web.code()),
                web.boundary().len(),
                sourcesink_boundary_len(2, k),
            );
            s.check(
                web.boundary().signs().iter().all(|&x| x == Sign::Plus),
                || format!("boundary of {} is not constant", web.code()),
            );
        }
        webs.extend(batch);
    }
    for k in 0..=cfg.minus_k_max {
        if let Ok(batch) = enumerate_a2_tree_webs_minus(k, cfg.cap) {
            webs.extend(batch);
        }
    }
    for web in &webs {
        let code = web.code();
        let coherent = web.edges().iter().all(|&(from, to)| {
            web.classes()[from] == crate::webs::VertexClass::Source
                && web.classes()[to] == crate::webs::VertexClass::Sink
        });
        s.check(coherent, || format!("incoherent orientation on {code}"));
        let again = orient_with_word(web.tree(), web.boundary());
        s.check(again.as_ref() == Some(web), || {
            format!("re-orientation of {code}")
        });
    }
    s.done()
}
