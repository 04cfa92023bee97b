//! Registry of named verification checks. Every identity the library is
//! built around (rank axioms, minor lemmas, duality, the cross-algorithm
//! Tutte oracle, the recipe theorem, the character lemmas and flow
//! equations) is one [`Check`] behind a common trait, registered by name,
//! grouped into suites, and run over the built-in corpus at a requested
//! size bound.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::corpus::{self, CorpusCase};
use crate::error::CapExceeded;
use crate::hopf::{
    self, alpha_character, beta_character, convolve, counit_character, delta_coloop, delta_loop,
    exp_star, exp_star_kfold, rank_nullity_weight, verify_phi_morphism, Character, FlowAlphaCheck,
    FlowBetaCheck, FourFactorCheck,
};
use crate::matroid::{GroundSubset, Matroid};
use crate::poly::{MultiPoly, Var};
use crate::tutte::{
    self, check_convolution, check_duality, q_universal, q_universal_with_selector,
    recipe_closed_form, tutte_rank_sum, SeededRandom,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Tutte,
    Hopf,
    Flow,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Axioms, Suite::Tutte, Suite::Hopf, Suite::Flow];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Tutte => "tutte",
            Suite::Hopf => "hopf",
            Suite::Flow => "flow",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

/// Outcome of one check over the corpus.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub suite: Suite,
    /// Number of corpus cases (or case pairs) evaluated.
    pub cases: usize,
    /// One entry per failing case, sorted by case name.
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A named identity check, runnable over a corpus at a size bound. The
/// bound is clamped to the check's own cap.
pub trait Check {
    fn name(&self) -> &'static str;
    fn suite(&self) -> Suite;
    fn cap(&self) -> usize;
    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport;
}

/// The full registry, grouped by suite in presentation order.
pub fn all_checks() -> Vec<Box<dyn Check>> {
    vec![
        Box::new(RankAxioms),
        Box::new(RestrictionDeletion),
        Box::new(CoLoopMinor),
        Box::new(RankContraction),
        Box::new(RankAdditivity),
        Box::new(DualInvolution),
        Box::new(ContractDualDelete),
        Box::new(CircuitMinimality),
        Box::new(GraphicCycles),
        Box::new(TutteCrossAlgorithm),
        Box::new(TutteRecipe),
        Box::new(TutteSelectionIndependence),
        Box::new(TutteEvaluations),
        Box::new(TutteDirectSum),
        Box::new(TutteDuality),
        Box::new(TutteConvolution),
        Box::new(CounitUnit),
        Box::new(ConvolutionAssociativity),
        Box::new(CharacterLaws),
        Box::new(RankNullityExponential),
        Box::new(ExpKfoldAgreement),
        Box::new(AlphaTutte),
        Box::new(AlphaAssembly),
        Box::new(AlphaDuality),
        Box::new(BetaAlphaConsistency),
        Box::new(FourFactor),
        Box::new(PhiMorphism),
        Box::new(FlowAlpha),
        Box::new(FlowBeta),
    ]
}

pub fn suite_checks(suite: Option<Suite>) -> Vec<Box<dyn Check>> {
    all_checks()
        .into_iter()
        .filter(|c| suite.map(|s| c.suite() == s).unwrap_or(true))
        .collect()
}

/// Runs a suite (or all suites for `None`) over the built-in corpus plus
/// any extra cases, at the given size bound.
pub fn run_suite(suite: Option<Suite>, max_n: usize, extra: &[CorpusCase]) -> Vec<CheckReport> {
    let mut cases = corpus::builtin(max_n);
    cases.extend(extra.iter().cloned());
    suite_checks(suite)
        .iter()
        .map(|c| c.run(&cases, max_n))
        .collect()
}

fn per_case<F>(
    name: &'static str,
    suite: Suite,
    corpus: &[CorpusCase],
    limit: usize,
    mut f: F,
) -> CheckReport
where
    F: FnMut(&Matroid) -> Result<(), String>,
{
    let mut cases = 0;
    let mut failures = Vec::new();
    for case in corpus.iter().filter(|c| c.matroid.size() <= limit) {
        cases += 1;
        if let Err(msg) = f(&case.matroid) {
            failures.push(format!("{}: {}", case.name, msg));
        }
    }
    failures.sort();
    CheckReport {
        name,
        suite,
        cases,
        failures,
    }
}

fn cap_msg(e: CapExceeded) -> String {
    e.to_string()
}

/// Ranks of all subsets of the ground set, indexed by a compact mask over
/// the label positions. Returns (actual subset per index, rank per index).
fn subset_rank_table(m: &Matroid) -> (Vec<GroundSubset>, Vec<u8>) {
    let positions: Vec<u8> = m.labels().elements().collect();
    let full = 1usize << positions.len();
    let mut actual = vec![GroundSubset::EMPTY; full];
    for im in 1..full {
        let low = im.trailing_zeros() as usize;
        actual[im] = actual[im & (im - 1)].with(positions[low]);
    }
    let ranks = actual.iter().map(|a| m.rank(*a) as u8).collect();
    (actual, ranks)
}

/// Pairs (i ≤ j) of small base-corpus matroids whose direct sum fits the
/// bound; used by the checks that probe behaviour on direct sums.
fn base_pairs(limit: usize, part_cap: usize) -> Vec<(CorpusCase, CorpusCase)> {
    let base = corpus::base_cases(part_cap.min(limit));
    let mut pairs = Vec::new();
    for (i, c1) in base.iter().enumerate() {
        for c2 in &base[i..] {
            if c1.matroid.size() + c2.matroid.size() <= limit {
                pairs.push((c1.clone(), c2.clone()));
            }
        }
    }
    pairs
}

struct RankAxioms;

impl Check for RankAxioms {
    fn name(&self) -> &'static str {
        "rank-axioms"
    }

    fn suite(&self) -> Suite {
        Suite::Axioms
    }

    fn cap(&self) -> usize {
        10
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            let (actual, ranks) = subset_rank_table(m);
            let full = actual.len();
            let k = m.size();
            for im in 0..full {
                let r = ranks[im] as usize;
                if r > actual[im].len() {
                    return Err(format!("rank exceeds cardinality on {}", actual[im]));
                }
                for idx in 0..k {
                    if im >> idx & 1 == 0 {
                        let re = ranks[im | 1 << idx] as usize;
                        if re != r && re != r + 1 {
                            return Err(format!("rank not unit-increasing on {}", actual[im]));
                        }
                    }
                }
            }
            for im1 in 0..full {
                for im2 in 0..full {
                    if ranks[im1 | im2] + ranks[im1 & im2] > ranks[im1] + ranks[im2] {
                        return Err(format!(
                            "submodularity fails for {} and {}",
                            actual[im1], actual[im2]
                        ));
                    }
                }
            }
            Ok(())
        })
    }
}

struct RestrictionDeletion;

impl Check for RestrictionDeletion {
    fn name(&self) -> &'static str {
        "restriction-deletion"
    }

    fn suite(&self) -> Suite {
        Suite::Axioms
    }

    fn cap(&self) -> usize {
        10
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            for t in m.labels().subsets() {
                if m.restrict(t) != m.delete(m.labels().difference(t)) {
                    return Err(format!("restriction differs from complement deletion at {t}"));
                }
            }
            Ok(())
        })
    }
}

struct CoLoopMinor;

impl Check for CoLoopMinor {
    fn name(&self) -> &'static str {
        "coloop-minor"
    }

    fn suite(&self) -> Suite {
        Suite::Axioms
    }

    fn cap(&self) -> usize {
        10
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            for e in m.coloops().elements() {
                let single = GroundSubset::singleton(e);
                if m.contract(single) != m.delete(single) {
                    return Err(format!("contract and delete disagree on coloop {e}"));
                }
            }
            Ok(())
        })
    }
}

struct RankContraction;

impl Check for RankContraction {
    fn name(&self) -> &'static str {
        "rank-contraction"
    }

    fn suite(&self) -> Suite {
        Suite::Axioms
    }

    fn cap(&self) -> usize {
        10
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            for t in m.labels().subsets() {
                let contracted = m.contract(t);
                let rt = m.rank(t);
                for x in contracted.labels().subsets() {
                    if contracted.rank(x) != m.rank(x.union(t)) - rt {
                        return Err(format!("rank formula fails for T={t}, X={x}"));
                    }
                }
            }
            Ok(())
        })
    }
}

struct RankAdditivity;

impl Check for RankAdditivity {
    fn name(&self) -> &'static str {
        "rank-additivity"
    }

    fn suite(&self) -> Suite {
        Suite::Axioms
    }

    fn cap(&self) -> usize {
        10
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            for t in m.labels().subsets() {
                let restricted = m.restrict(t);
                let contracted = m.contract(t);
                if restricted.rank_full() + contracted.rank_full() != m.rank_full() {
                    return Err(format!("rank additivity fails at {t}"));
                }
                if restricted.nullity_full() + contracted.nullity_full() != m.nullity_full() {
                    return Err(format!("nullity additivity fails at {t}"));
                }
            }
            Ok(())
        })
    }
}

struct DualInvolution;

impl Check for DualInvolution {
    fn name(&self) -> &'static str {
        "dual-involution"
    }

    fn suite(&self) -> Suite {
        Suite::Axioms
    }

    fn cap(&self) -> usize {
        10
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            if &m.dual().dual() != m {
                return Err("double dual differs from the matroid".into());
            }
            Ok(())
        })
    }
}

struct ContractDualDelete;

impl Check for ContractDualDelete {
    fn name(&self) -> &'static str {
        "contract-dual-delete"
    }

    fn suite(&self) -> Suite {
        Suite::Axioms
    }

    fn cap(&self) -> usize {
        10
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            for t in m.labels().subsets() {
                if m.contract(t) != m.dual().delete(t).dual() {
                    return Err(format!("contraction differs from dual-delete-dual at {t}"));
                }
            }
            Ok(())
        })
    }
}

struct CircuitMinimality;

impl Check for CircuitMinimality {
    fn name(&self) -> &'static str {
        "circuit-minimality"
    }

    fn suite(&self) -> Suite {
        Suite::Axioms
    }

    fn cap(&self) -> usize {
        10
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            let circuits = m.circuits().map_err(cap_msg)?;
            for c in &circuits {
                if m.rank(*c) >= c.len() {
                    return Err(format!("{c} is not dependent"));
                }
                for e in c.elements() {
                    let sub = c.without(e);
                    if m.rank(sub) != sub.len() {
                        return Err(format!("{c} is not minimal (drop {e})"));
                    }
                }
            }
            // loops are exactly the single-element circuits
            let singleton_circuits =
                GroundSubset::from_elements(circuits.iter().filter(|c| c.len() == 1).map(|c| {
                    c.elements().next().unwrap()
                }));
            if singleton_circuits != m.loops() {
                return Err("singleton circuits differ from the loops".into());
            }
            Ok(())
        })
    }
}

struct GraphicCycles;

impl Check for GraphicCycles {
    fn name(&self) -> &'static str {
        "graphic-cycles"
    }

    fn suite(&self) -> Suite {
        Suite::Axioms
    }

    fn cap(&self) -> usize {
        8
    }

    fn run(&self, _corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let mut cases = 0;
        let mut failures = Vec::new();
        for k in 1..=max_n.min(self.cap()) {
            cases += 1;
            let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            let cycle = Matroid::graphic(k, &edges).unwrap();
            let uniform = Matroid::uniform(k - 1, k).unwrap();
            if cycle != uniform {
                failures.push(format!("C{k}: cycle matroid differs from U({},{k})", k - 1));
            }
        }
        CheckReport {
            name: self.name(),
            suite: self.suite(),
            cases,
            failures,
        }
    }
}

struct TutteCrossAlgorithm;

impl Check for TutteCrossAlgorithm {
    fn name(&self) -> &'static str {
        "tutte-cross-algorithm"
    }

    fn suite(&self) -> Suite {
        Suite::Tutte
    }

    fn cap(&self) -> usize {
        12
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let algorithms = tutte::algorithms();
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            let reference = tutte_rank_sum(m).map_err(cap_msg)?;
            for algo in &algorithms {
                let computed = algo.compute(m).map_err(cap_msg)?;
                if computed != reference {
                    return Err(format!("{} disagrees with rank-sum", algo.name()));
                }
            }
            Ok(())
        })
    }
}

struct TutteRecipe;

impl Check for TutteRecipe {
    fn name(&self) -> &'static str {
        "tutte-recipe"
    }

    fn suite(&self) -> Suite {
        Suite::Tutte
    }

    fn cap(&self) -> usize {
        12
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            let recursive = q_universal(m).map_err(cap_msg)?;
            let closed = recipe_closed_form(m).map_err(cap_msg)?;
            if recursive != closed {
                return Err("deletion/contraction Q differs from closed form".into());
            }
            Ok(())
        })
    }
}

struct TutteSelectionIndependence;

impl Check for TutteSelectionIndependence {
    fn name(&self) -> &'static str {
        "tutte-selection-independence"
    }

    fn suite(&self) -> Suite {
        Suite::Tutte
    }

    fn cap(&self) -> usize {
        12
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let mut counter = 0u64;
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            counter += 1;
            let reference = q_universal(m).map_err(cap_msg)?;
            for seed in [counter, counter.wrapping_mul(0x9e3779b97f4a7c15)] {
                let mut selector = SeededRandom::new(seed);
                let randomized = q_universal_with_selector(m, &mut selector).map_err(cap_msg)?;
                if randomized != reference {
                    return Err(format!("random selection (seed {seed}) changed Q"));
                }
            }
            Ok(())
        })
    }
}

struct TutteEvaluations;

impl Check for TutteEvaluations {
    fn name(&self) -> &'static str {
        "tutte-evaluations"
    }

    fn suite(&self) -> Suite {
        Suite::Tutte
    }

    fn cap(&self) -> usize {
        12
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let rat = |n: i64| BigRational::from_integer(BigInt::from(n));
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            let t = tutte_rank_sum(m).map_err(cap_msg)?;
            for (_, c) in t.poly().terms() {
                if !c.is_integer() || c.is_negative() {
                    return Err(format!("coefficient {c} is not a non-negative integer"));
                }
            }
            let at = |x: i64, y: i64| {
                t.poly()
                    .eval(&[(Var::X, rat(x)), (Var::Y, rat(y))])
                    .as_constant()
                    .expect("full assignment")
            };
            if at(1, 1) != rat(m.bases().len() as i64) {
                return Err("T(1,1) differs from the basis count".into());
            }
            if at(2, 2) != rat(1i64 << m.size()) {
                return Err("T(2,2) differs from 2^|E|".into());
            }
            // count independent and spanning subsets directly
            let mut independent = 0i64;
            let mut spanning = 0i64;
            let full_rank = m.rank_full();
            for a in m.labels().subsets() {
                let r = m.rank(a);
                if r == a.len() {
                    independent += 1;
                }
                if r == full_rank {
                    spanning += 1;
                }
            }
            if at(2, 1) != rat(independent) {
                return Err("T(2,1) differs from the independent-set count".into());
            }
            if at(1, 2) != rat(spanning) {
                return Err("T(1,2) differs from the spanning-set count".into());
            }
            Ok(())
        })
    }
}

struct TutteDirectSum;

impl Check for TutteDirectSum {
    fn name(&self) -> &'static str {
        "tutte-direct-sum"
    }

    fn suite(&self) -> Suite {
        Suite::Tutte
    }

    fn cap(&self) -> usize {
        12
    }

    fn run(&self, _corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let limit = max_n.min(self.cap());
        let mut cases = 0;
        let mut failures = Vec::new();
        for (c1, c2) in base_pairs(limit, 6) {
            cases += 1;
            let sum = c1.matroid.direct_sum(&c2.matroid).unwrap();
            let combined = tutte_rank_sum(&sum).unwrap().into_poly();
            let product = tutte_rank_sum(&c1.matroid)
                .unwrap()
                .into_poly()
                .mul(tutte_rank_sum(&c2.matroid).unwrap().poly());
            if combined != product {
                failures.push(format!("{} + {}: Tutte polynomial not multiplicative", c1.name, c2.name));
            }
        }
        failures.sort();
        CheckReport {
            name: self.name(),
            suite: self.suite(),
            cases,
            failures,
        }
    }
}

struct TutteDuality;

impl Check for TutteDuality {
    fn name(&self) -> &'static str {
        "tutte-duality"
    }

    fn suite(&self) -> Suite {
        Suite::Tutte
    }

    fn cap(&self) -> usize {
        12
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            if !check_duality(m).map_err(cap_msg)? {
                return Err("T(x,y) differs from dual T(y,x)".into());
            }
            Ok(())
        })
    }
}

struct TutteConvolution;

impl Check for TutteConvolution {
    fn name(&self) -> &'static str {
        "tutte-convolution"
    }

    fn suite(&self) -> Suite {
        Suite::Tutte
    }

    fn cap(&self) -> usize {
        10
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            if !check_convolution(m).map_err(cap_msg)? {
                return Err("convolution identity fails".into());
            }
            Ok(())
        })
    }
}

struct CounitUnit;

impl Check for CounitUnit {
    fn name(&self) -> &'static str {
        "counit-unit"
    }

    fn suite(&self) -> Suite {
        Suite::Hopf
    }

    fn cap(&self) -> usize {
        8
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let eps = counit_character();
        let samples = [
            ("alpha", alpha_character()),
            ("delta_coloop", delta_coloop()),
            ("a*delta_coloop+b*delta_loop", weight_combo()),
        ];
        let entries: Vec<(&str, Character, Character, Character)> = samples
            .into_iter()
            .map(|(n, f)| {
                let left = convolve(&eps, &f);
                let right = convolve(&f, &eps);
                (n, f, left, right)
            })
            .collect();
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            for (name, f, left, right) in &entries {
                let direct = f.eval(m).map_err(cap_msg)?;
                if left.eval(m).map_err(cap_msg)? != direct {
                    return Err(format!("counit is not a left unit for {name}"));
                }
                if right.eval(m).map_err(cap_msg)? != direct {
                    return Err(format!("counit is not a right unit for {name}"));
                }
            }
            Ok(())
        })
    }
}

/// a·δ_coloop + b·δ_loop.
fn weight_combo() -> Character {
    delta_coloop()
        .scale(&MultiPoly::var(Var::A))
        .add(&delta_loop().scale(&MultiPoly::var(Var::B)))
}

struct ConvolutionAssociativity;

impl Check for ConvolutionAssociativity {
    fn name(&self) -> &'static str {
        "convolution-associativity"
    }

    fn suite(&self) -> Suite {
        Suite::Hopf
    }

    fn cap(&self) -> usize {
        8
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let triples = [
            (exp_star(&weight_combo()), alpha_character(), delta_loop()),
            (delta_coloop(), exp_star(&weight_combo()), delta_loop()),
        ];
        let sides: Vec<(Character, Character)> = triples
            .iter()
            .map(|(f, g, h)| (convolve(&convolve(f, g), h), convolve(f, &convolve(g, h))))
            .collect();
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            for (i, (left, right)) in sides.iter().enumerate() {
                if left.eval(m).map_err(cap_msg)? != right.eval(m).map_err(cap_msg)? {
                    return Err(format!("associativity fails for sample triple {i}"));
                }
            }
            Ok(())
        })
    }
}

struct CharacterLaws;

impl Check for CharacterLaws {
    fn name(&self) -> &'static str {
        "character-laws"
    }

    fn suite(&self) -> Suite {
        Suite::Hopf
    }

    fn cap(&self) -> usize {
        10
    }

    fn run(&self, _corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let limit = max_n.min(self.cap());
        let mut cases = 0;
        let mut failures = Vec::new();
        let empty = Matroid::empty();
        let multiplicative = [
            ("alpha", alpha_character()),
            ("beta", beta_character()),
            ("exp(a,b)", exp_star(&weight_combo())),
        ];
        let s = MultiPoly::var(Var::S);
        let y1 = &MultiPoly::var(Var::Y) - &MultiPoly::one();
        let infinitesimal = [
            ("delta_loop", delta_loop()),
            ("delta_coloop", delta_coloop()),
            (
                "s(delta_coloop+(y-1)delta_loop)",
                delta_coloop().add(&delta_loop().scale(&y1)).scale(&s),
            ),
        ];
        for (name, chi) in &multiplicative {
            if !chi.eval(&empty).unwrap().is_one() {
                failures.push(format!("{name}: value on the empty matroid is not 1"));
            }
        }
        for (name, g) in &infinitesimal {
            if !g.eval(&empty).unwrap().is_zero() {
                failures.push(format!("{name}: value on the empty matroid is not 0"));
            }
        }
        for (c1, c2) in base_pairs(limit, 5) {
            cases += 1;
            let sum = c1.matroid.direct_sum(&c2.matroid).unwrap();
            for (name, chi) in &multiplicative {
                let joint = chi.eval(&sum).unwrap();
                let split = chi
                    .eval(&c1.matroid)
                    .unwrap()
                    .mul(&chi.eval(&c2.matroid).unwrap());
                if joint != split {
                    failures.push(format!(
                        "{} + {}: {name} is not multiplicative",
                        c1.name, c2.name
                    ));
                }
            }
            for (name, g) in &infinitesimal {
                let joint = g.eval(&sum).unwrap();
                let lhs = g.eval(&c1.matroid).unwrap().mul(&hopf::counit(&c2.matroid));
                let rhs = hopf::counit(&c1.matroid).mul(&g.eval(&c2.matroid).unwrap());
                if joint != &lhs + &rhs {
                    failures.push(format!(
                        "{} + {}: {name} violates the derivation law",
                        c1.name, c2.name
                    ));
                }
            }
        }
        failures.sort();
        CheckReport {
            name: self.name(),
            suite: self.suite(),
            cases,
            failures,
        }
    }
}

struct RankNullityExponential;

impl Check for RankNullityExponential {
    fn name(&self) -> &'static str {
        "rank-nullity-exponential"
    }

    fn suite(&self) -> Suite {
        Suite::Hopf
    }

    fn cap(&self) -> usize {
        10
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let exp = exp_star(&weight_combo());
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            let value = exp.eval(m).map_err(cap_msg)?;
            if value != rank_nullity_weight(m) {
                return Err(format!(
                    "exp_*(a·δ_coloop + b·δ_loop) is {value}, expected a^{}b^{}",
                    m.rank_full(),
                    m.nullity_full()
                ));
            }
            Ok(())
        })
    }
}

struct ExpKfoldAgreement;

impl Check for ExpKfoldAgreement {
    fn name(&self) -> &'static str {
        "exp-kfold-agreement"
    }

    fn suite(&self) -> Suite {
        Suite::Hopf
    }

    fn cap(&self) -> usize {
        6
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let s = MultiPoly::var(Var::S);
        let x1 = &MultiPoly::var(Var::X) - &MultiPoly::one();
        let combos = [
            ("a·δ_coloop+b·δ_loop", weight_combo()),
            (
                "s((x-1)δ_coloop+δ_loop)",
                delta_coloop().scale(&x1).add(&delta_loop()).scale(&s),
            ),
        ];
        let pairs: Vec<(&str, Character, Character)> = combos
            .into_iter()
            .map(|(n, d)| (n, exp_star(&d), exp_star_kfold(&d)))
            .collect();
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            for (name, fast, slow) in &pairs {
                if fast.eval(m).map_err(cap_msg)? != slow.eval(m).map_err(cap_msg)? {
                    return Err(format!("singleton recursion differs from k-fold sum for {name}"));
                }
            }
            Ok(())
        })
    }
}

struct AlphaTutte;

impl Check for AlphaTutte {
    fn name(&self) -> &'static str {
        "alpha-tutte"
    }

    fn suite(&self) -> Suite {
        Suite::Hopf
    }

    fn cap(&self) -> usize {
        12
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let alpha = alpha_character();
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            let lhs = alpha.eval(m).map_err(cap_msg)?;
            let t = tutte_rank_sum(m).map_err(cap_msg)?;
            let rhs = MultiPoly::var(Var::S)
                .pow(m.size() as u32)
                .mul(t.poly());
            if lhs != rhs {
                return Err("alpha differs from s^|E|·T".into());
            }
            Ok(())
        })
    }
}

struct AlphaAssembly;

impl Check for AlphaAssembly {
    fn name(&self) -> &'static str {
        "alpha-assembly"
    }

    fn suite(&self) -> Suite {
        Suite::Hopf
    }

    fn cap(&self) -> usize {
        6
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let merged = alpha_character();
        let by_parts = hopf::alpha_character_by_parts();
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            if merged.eval(m).map_err(cap_msg)? != by_parts.eval(m).map_err(cap_msg)? {
                return Err("merged chain sums differ from convolved exponentials".into());
            }
            Ok(())
        })
    }
}

struct AlphaDuality;

impl Check for AlphaDuality {
    fn name(&self) -> &'static str {
        "alpha-duality"
    }

    fn suite(&self) -> Suite {
        Suite::Hopf
    }

    fn cap(&self) -> usize {
        12
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let alpha = alpha_character();
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            let swapped = alpha.eval(m).map_err(cap_msg)?.swap_vars(Var::X, Var::Y);
            let dual = alpha.eval(&m.dual()).map_err(cap_msg)?;
            if swapped != dual {
                return Err("alpha(x↔y) differs from alpha of the dual".into());
            }
            Ok(())
        })
    }
}

struct BetaAlphaConsistency;

impl Check for BetaAlphaConsistency {
    fn name(&self) -> &'static str {
        "beta-alpha-consistency"
    }

    fn suite(&self) -> Suite {
        Suite::Hopf
    }

    fn cap(&self) -> usize {
        8
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let alpha = alpha_character();
        let beta = beta_character();
        let one = BigRational::one();
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            let specialized = beta
                .eval(m)
                .map_err(cap_msg)?
                .eval(&[(Var::A, one.clone()), (Var::B, one.clone())]);
            if specialized != alpha.eval(m).map_err(cap_msg)? {
                return Err("beta at a=b=1 differs from alpha".into());
            }
            Ok(())
        })
    }
}

struct FourFactor;

impl Check for FourFactor {
    fn name(&self) -> &'static str {
        "four-factor"
    }

    fn suite(&self) -> Suite {
        Suite::Hopf
    }

    fn cap(&self) -> usize {
        10
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let check = FourFactorCheck::new();
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            if !check.verify(m).map_err(cap_msg)? {
                return Err("four-factor product differs from alpha".into());
            }
            Ok(())
        })
    }
}

struct PhiMorphism;

impl Check for PhiMorphism {
    fn name(&self) -> &'static str {
        "phi-morphism"
    }

    fn suite(&self) -> Suite {
        Suite::Hopf
    }

    fn cap(&self) -> usize {
        12
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            if !verify_phi_morphism(m).map_err(cap_msg)? {
                return Err("coproduct does not commute with the weight map".into());
            }
            Ok(())
        })
    }
}

struct FlowAlpha;

impl Check for FlowAlpha {
    fn name(&self) -> &'static str {
        "flow-alpha"
    }

    fn suite(&self) -> Suite {
        Suite::Flow
    }

    fn cap(&self) -> usize {
        12
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let check = FlowAlphaCheck::new();
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            if !check.verify(m).map_err(cap_msg)? {
                return Err("alpha flow equation fails".into());
            }
            Ok(())
        })
    }
}

struct FlowBeta;

impl Check for FlowBeta {
    fn name(&self) -> &'static str {
        "flow-beta"
    }

    fn suite(&self) -> Suite {
        Suite::Flow
    }

    fn cap(&self) -> usize {
        12
    }

    fn run(&self, corpus: &[CorpusCase], max_n: usize) -> CheckReport {
        let check = FlowBetaCheck::new();
        per_case(self.name(), self.suite(), corpus, max_n.min(self.cap()), |m| {
            if !check.verify(m).map_err(cap_msg)? {
                return Err("beta flow equation fails".into());
            }
            Ok(())
        })
    }
}
