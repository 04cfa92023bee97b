//! The Tutte polynomial and the four-variable deletion/contraction
//! polynomial Q, by independent algorithms:
//!
//! - `tutte_rank_sum`: the corank-nullity subset sum,
//! - `q_universal`: memoized deletion/contraction recursion,
//! - `recipe_closed_form`: the denominator-cleared closed form of Q.
//!
//! Each route is also exposed behind the [`TutteAlgorithm`] trait so callers
//! can pick one by name at runtime; `algorithms()` lists the registry.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::CapExceeded;
use crate::matroid::{GroundSubset, Matroid};
use crate::poly::{MultiPoly, Var};

/// Cap for single-matroid polynomial computations (2^n subset work).
pub const POLY_CAP: usize = 20;

/// Cap for the convolution identity (a subset sum per minor pair).
pub const CONVOLUTION_CAP: usize = 14;

/// Tutte polynomial: a polynomial in x and y only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuttePoly(MultiPoly);

impl TuttePoly {
    pub fn poly(&self) -> &MultiPoly {
        &self.0
    }

    pub fn into_poly(self) -> MultiPoly {
        self.0
    }
}

impl fmt::Display for TuttePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The four-variable polynomial Q(x, y, a, b); at a = b = 1 it specializes
/// to the Tutte polynomial of the same matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalPoly(MultiPoly);

impl UniversalPoly {
    pub fn poly(&self) -> &MultiPoly {
        &self.0
    }

    pub fn into_poly(self) -> MultiPoly {
        self.0
    }

    /// Specialization a = 1, b = 1.
    pub fn at_unit_weights(&self) -> TuttePoly {
        let one = BigRational::from_integer(BigInt::from(1));
        TuttePoly(self.0.eval(&[(Var::A, one.clone()), (Var::B, one)]))
    }
}

impl fmt::Display for UniversalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Number of subsets A with r(E)-r(A) = i and n(A) = j, as counts[i][j].
/// One pass over the 2^n subsets; everything downstream is assembled from
/// this integer table.
fn corank_nullity_counts(m: &Matroid) -> Vec<Vec<u64>> {
    let re = m.rank_full();
    let ne = m.nullity_full();
    let mut counts = vec![vec![0u64; ne + 1]; re + 1];
    for a in m.labels().subsets() {
        let r = m.rank(a);
        counts[re - r][a.len() - r] += 1;
    }
    counts
}

fn big(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Powers p^0..p^max of a polynomial.
fn power_table(p: &MultiPoly, max: usize) -> Vec<MultiPoly> {
    let mut table = Vec::with_capacity(max + 1);
    table.push(MultiPoly::one());
    for _ in 0..max {
        table.push(table.last().unwrap().mul(p));
    }
    table
}

/// The Tutte polynomial as the corank-nullity sum
/// T(x,y) = Σ_{A⊆E} (x-1)^{r(E)-r(A)} (y-1)^{n(A)}.
pub fn tutte_rank_sum(m: &Matroid) -> Result<TuttePoly, CapExceeded> {
    CapExceeded::check("tutte_rank_sum", m.size(), POLY_CAP)?;
    let counts = corank_nullity_counts(m);
    let xm1 = &MultiPoly::var(Var::X) - &MultiPoly::one();
    let ym1 = &MultiPoly::var(Var::Y) - &MultiPoly::one();
    let xp = power_table(&xm1, m.rank_full());
    let yp = power_table(&ym1, m.nullity_full());
    let mut sum = MultiPoly::zero();
    for (i, row) in counts.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c > 0 {
                sum = &sum + &(&xp[i] * &yp[j]).scale(&big(c));
            }
        }
    }
    Ok(TuttePoly(sum))
}

/// Picks the active element for a deletion/contraction step among the
/// nonseparating elements of the current minor.
pub trait ElementSelector {
    fn pick(&mut self, m: &Matroid, candidates: GroundSubset) -> u8;
}

/// Deterministic default: the smallest-labeled nonseparating element.
pub struct SmallestLabel;

impl ElementSelector for SmallestLabel {
    fn pick(&mut self, _m: &Matroid, candidates: GroundSubset) -> u8 {
        candidates.elements().next().expect("no candidate element")
    }
}

/// Seeded random selection; used to exercise the independence of the
/// computed polynomial from the selection rule.
pub struct SeededRandom(ChaCha8Rng);

impl SeededRandom {
    pub fn new(seed: u64) -> SeededRandom {
        SeededRandom(ChaCha8Rng::seed_from_u64(seed))
    }
}

impl ElementSelector for SeededRandom {
    fn pick(&mut self, _m: &Matroid, candidates: GroundSubset) -> u8 {
        let options: Vec<u8> = candidates.elements().collect();
        options[self.0.gen_range(0..options.len())]
    }
}

/// The deletion/contraction polynomial:
/// x·Q(M\e) on a coloop, y·Q(M/e) on a loop, a·Q(M\e) + b·Q(M/e) on a
/// nonseparating element, Q(empty) = 1. Memoized on (label set, bases).
pub fn q_universal(m: &Matroid) -> Result<UniversalPoly, CapExceeded> {
    q_universal_with_selector(m, &mut SmallestLabel)
}

pub fn q_universal_with_selector(
    m: &Matroid,
    selector: &mut dyn ElementSelector,
) -> Result<UniversalPoly, CapExceeded> {
    CapExceeded::check("q_universal", m.size(), POLY_CAP)?;
    let mut memo: HashMap<Matroid, MultiPoly> = HashMap::new();
    Ok(UniversalPoly(q_rec(m, &mut memo, selector)))
}

fn q_rec(
    m: &Matroid,
    memo: &mut HashMap<Matroid, MultiPoly>,
    selector: &mut dyn ElementSelector,
) -> MultiPoly {
    if m.is_empty() {
        return MultiPoly::one();
    }
    if let Some(v) = memo.get(m) {
        return v.clone();
    }
    let candidates = m.nonseparating();
    let value = if candidates.is_empty() {
        // Only loops and coloops remain: repeated coloop/loop steps down to
        // the empty base case give x^{#coloops} y^{#loops}.
        let x = MultiPoly::var(Var::X).pow(m.coloops().len() as u32);
        let y = MultiPoly::var(Var::Y).pow(m.loops().len() as u32);
        &x * &y
    } else {
        let e = selector.pick(m, candidates);
        debug_assert!(candidates.contains(e));
        let single = GroundSubset::singleton(e);
        let deleted = q_rec(&m.delete(single), memo, selector);
        let contracted = q_rec(&m.contract(single), memo, selector);
        &(&MultiPoly::var(Var::A) * &deleted) + &(&MultiPoly::var(Var::B) * &contracted)
    };
    memo.insert(m.clone(), value.clone());
    value
}

/// The closed form Q = a^{n(M)} b^{r(M)} T(x/b, y/a), computed free of
/// denominators as
/// Σ_{A⊆E} (x-b)^{r(E)-r(A)} b^{r(A)} (y-a)^{n(A)} a^{n(E)-n(A)}.
pub fn recipe_closed_form(m: &Matroid) -> Result<UniversalPoly, CapExceeded> {
    CapExceeded::check("recipe_closed_form", m.size(), POLY_CAP)?;
    let re = m.rank_full();
    let ne = m.nullity_full();
    let counts = corank_nullity_counts(m);
    let xmb = &MultiPoly::var(Var::X) - &MultiPoly::var(Var::B);
    let yma = &MultiPoly::var(Var::Y) - &MultiPoly::var(Var::A);
    let xp = power_table(&xmb, re);
    let yp = power_table(&yma, ne);
    let bp = power_table(&MultiPoly::var(Var::B), re);
    let ap = power_table(&MultiPoly::var(Var::A), ne);
    let mut sum = MultiPoly::zero();
    for (i, row) in counts.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c > 0 {
                let term = &(&xp[i] * &bp[re - i]) * &(&yp[j] * &ap[ne - j]);
                sum = &sum + &term.scale(&big(c));
            }
        }
    }
    Ok(UniversalPoly(sum))
}

/// Checks T_M(x,y) = T_{M*}(y,x).
pub fn check_duality(m: &Matroid) -> Result<bool, CapExceeded> {
    let t = tutte_rank_sum(m)?;
    let t_dual = tutte_rank_sum(&m.dual())?;
    Ok(t.poly().swap_vars(Var::X, Var::Y) == *t_dual.poly())
}

/// Checks the convolution identity
/// T_M(x,y) = Σ_{A⊆E} T_{M|A}(0,y) · T_{M/A}(x,0).
pub fn check_convolution(m: &Matroid) -> Result<bool, CapExceeded> {
    CapExceeded::check("check_convolution", m.size(), CONVOLUTION_CAP)?;
    let zero = BigRational::from_integer(BigInt::from(0));
    let mut sum = MultiPoly::zero();
    for a in m.labels().subsets() {
        let left = tutte_rank_sum(&m.restrict(a))?
            .into_poly()
            .eval(&[(Var::X, zero.clone())]);
        if left.is_zero() {
            continue;
        }
        let right = tutte_rank_sum(&m.contract(a))?
            .into_poly()
            .eval(&[(Var::Y, zero.clone())]);
        sum = &sum + &(&left * &right);
    }
    Ok(sum == tutte_rank_sum(m)?.into_poly())
}

/// A named algorithm computing the Tutte polynomial.
pub trait TutteAlgorithm {
    fn name(&self) -> &'static str;
    fn compute(&self, m: &Matroid) -> Result<TuttePoly, CapExceeded>;
}

/// Corank-nullity subset sum.
pub struct RankSum;

impl TutteAlgorithm for RankSum {
    fn name(&self) -> &'static str {
        "rank-sum"
    }

    fn compute(&self, m: &Matroid) -> Result<TuttePoly, CapExceeded> {
        tutte_rank_sum(m)
    }
}

/// Deletion/contraction recursion, specialized at a = b = 1.
pub struct DeletionContraction;

impl TutteAlgorithm for DeletionContraction {
    fn name(&self) -> &'static str {
        "deletion-contraction"
    }

    fn compute(&self, m: &Matroid) -> Result<TuttePoly, CapExceeded> {
        Ok(q_universal(m)?.at_unit_weights())
    }
}

/// Closed-form Q, specialized at a = b = 1.
pub struct ClosedForm;

impl TutteAlgorithm for ClosedForm {
    fn name(&self) -> &'static str {
        "closed-form"
    }

    fn compute(&self, m: &Matroid) -> Result<TuttePoly, CapExceeded> {
        Ok(recipe_closed_form(m)?.at_unit_weights())
    }
}

/// The algorithm registry, in presentation order.
pub fn algorithms() -> Vec<Box<dyn TutteAlgorithm>> {
    vec![
        Box::new(RankSum),
        Box::new(DeletionContraction),
        Box::new(ClosedForm),
    ]
}

pub fn algorithm_by_name(name: &str) -> Option<Box<dyn TutteAlgorithm>> {
    algorithms().into_iter().find(|a| a.name() == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Matroid;

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, n).unwrap()
    }

    fn k4() -> Matroid {
        Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn tutte_of_coloop_is_x() {
        assert_eq!(tutte_rank_sum(&u(1, 1)).unwrap().to_string(), "x");
    }

    #[test]
    fn tutte_of_loop_is_y() {
        assert_eq!(tutte_rank_sum(&u(0, 1)).unwrap().to_string(), "y");
    }

    #[test]
    fn tutte_of_triangle() {
        // Hand expansion of the 8-subset sum for U_{2,3}: the empty set
        // gives (x-1)^2, three singletons give (x-1), three pairs give 1,
        // the full set gives (y-1); total x^2 + x + y.
        assert_eq!(tutte_rank_sum(&u(2, 3)).unwrap().to_string(), "x^2 + x + y");
    }

    #[test]
    fn tutte_of_u24() {
        // 16-subset sum: (x-1)^2 + 4(x-1) + 6 + 4(y-1) + (y-1)^2.
        assert_eq!(
            tutte_rank_sum(&u(2, 4)).unwrap().to_string(),
            "x^2 + 2*x + y^2 + 2*y"
        );
    }

    #[test]
    fn tutte_of_empty_is_one() {
        assert!(tutte_rank_sum(&Matroid::empty()).unwrap().poly().is_one());
    }

    #[test]
    fn q_of_two_parallel_elements() {
        assert_eq!(q_universal(&u(1, 2)).unwrap().to_string(), "a*x + b*y");
    }

    #[test]
    fn q_of_coloop_is_x() {
        assert_eq!(q_universal(&u(1, 1)).unwrap().to_string(), "x");
    }

    #[test]
    fn q_at_unit_weights_matches_rank_sum() {
        for m in [u(0, 0), u(1, 2), u(2, 4), u(3, 5), k4()] {
            assert_eq!(
                q_universal(&m).unwrap().at_unit_weights(),
                tutte_rank_sum(&m).unwrap()
            );
        }
    }

    #[test]
    fn q_satisfies_coloop_and_loop_axioms() {
        // coloop rule on U_{1,1} ⊕ U_{1,2}, loop rule on U_{0,1} ⊕ U_{1,2}
        let with_coloop = u(1, 1).direct_sum(&u(1, 2)).unwrap();
        let e = GroundSubset::singleton(0);
        let q = q_universal(&with_coloop).unwrap().into_poly();
        let q_minor = q_universal(&with_coloop.delete(e)).unwrap().into_poly();
        assert_eq!(q, &MultiPoly::var(Var::X) * &q_minor);

        let with_loop = u(0, 1).direct_sum(&u(1, 2)).unwrap();
        let q = q_universal(&with_loop).unwrap().into_poly();
        let q_minor = q_universal(&with_loop.contract(e)).unwrap().into_poly();
        assert_eq!(q, &MultiPoly::var(Var::Y) * &q_minor);
    }

    #[test]
    fn recipe_examples() {
        assert_eq!(recipe_closed_form(&u(1, 2)).unwrap().to_string(), "a*x + b*y");
        assert_eq!(recipe_closed_form(&u(1, 1)).unwrap().to_string(), "x");
        assert_eq!(recipe_closed_form(&u(0, 1)).unwrap().to_string(), "y");
    }

    /// Independent route for the recipe: compute T, then substitute
    /// x -> x/b, y -> y/a and clear a^{n(M)} b^{r(M)} term by term
    /// (x^i y^j -> x^i y^j b^{r-i} a^{n-j}).
    fn recipe_by_substitution(m: &Matroid) -> MultiPoly {
        let t = tutte_rank_sum(m).unwrap();
        let r = m.rank_full() as u32;
        let n = m.nullity_full() as u32;
        let mut sum = MultiPoly::zero();
        for (mono, coeff) in t.poly().terms() {
            let i = mono.exponent(Var::X) as u32;
            let j = mono.exponent(Var::Y) as u32;
            let term = &(&MultiPoly::var(Var::X).pow(i) * &MultiPoly::var(Var::B).pow(r - i))
                * &(&MultiPoly::var(Var::Y).pow(j) * &MultiPoly::var(Var::A).pow(n - j));
            sum = &sum + &term.scale(coeff);
        }
        sum
    }

    #[test]
    fn recipe_matches_direct_substitution() {
        for m in [u(1, 2), u(2, 3), u(2, 4), k4()] {
            assert_eq!(
                recipe_closed_form(&m).unwrap().into_poly(),
                recipe_by_substitution(&m)
            );
        }
    }

    #[test]
    fn recipe_matches_recursion() {
        for m in [u(0, 0), u(1, 2), u(2, 4), u(1, 3), k4()] {
            assert_eq!(recipe_closed_form(&m).unwrap(), q_universal(&m).unwrap());
        }
    }

    #[test]
    fn selection_rule_does_not_change_q() {
        for (i, m) in [u(2, 4), u(2, 5), k4()].iter().enumerate() {
            let default = q_universal(m).unwrap();
            for seed in 0..3u64 {
                let mut selector = SeededRandom::new(seed + i as u64 * 11);
                let randomized = q_universal_with_selector(m, &mut selector).unwrap();
                assert_eq!(default, randomized);
            }
        }
    }

    #[test]
    fn duality_examples() {
        assert!(check_duality(&u(1, 1)).unwrap());
        assert!(check_duality(&u(2, 4)).unwrap());
        assert!(check_duality(&k4()).unwrap());
    }

    #[test]
    fn convolution_examples() {
        assert!(check_convolution(&u(1, 1)).unwrap());
        assert!(check_convolution(&u(2, 3)).unwrap());
        assert!(check_convolution(&k4()).unwrap());
    }

    #[test]
    fn k4_spot_values() {
        let t = tutte_rank_sum(&k4()).unwrap();
        // 16 spanning trees of K4 (direct acyclic-subset count in the
        // matroid test below), 2^6 subsets.
        assert_eq!(
            t.poly().eval(&[(Var::X, rat(1)), (Var::Y, rat(1))]).as_constant(),
            Some(rat(16))
        );
        assert_eq!(
            t.poly().eval(&[(Var::X, rat(2)), (Var::Y, rat(2))]).as_constant(),
            Some(rat(64))
        );
    }

    #[test]
    fn direct_sum_multiplies() {
        let m1 = u(2, 3);
        let m2 = u(1, 2);
        let sum = m1.direct_sum(&m2).unwrap();
        let product = tutte_rank_sum(&m1).unwrap().into_poly().mul(
            tutte_rank_sum(&m2).unwrap().poly(),
        );
        assert_eq!(tutte_rank_sum(&sum).unwrap().into_poly(), product);
    }

    #[test]
    fn registry_has_three_algorithms() {
        let names: Vec<&str> = algorithms().iter().map(|a| a.name()).collect();
        assert_eq!(names, ["rank-sum", "deletion-contraction", "closed-form"]);
        assert!(algorithm_by_name("closed-form").is_some());
        assert!(algorithm_by_name("magic").is_none());
    }

    #[test]
    fn algorithms_agree_through_registry() {
        let m = u(2, 5);
        let reference = tutte_rank_sum(&m).unwrap();
        for algo in algorithms() {
            assert_eq!(algo.compute(&m).unwrap(), reference);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let m = u(1, 21);
        assert!(tutte_rank_sum(&m).is_err());
        assert!(q_universal(&m).is_err());
        assert!(recipe_closed_form(&m).is_err());
    }
}
