//! Matroids on labeled ground sets of at most 63 elements.
//!
//! A matroid is stored as its explicit basis family over a label mask.
//! Minors (restriction, deletion, contraction), duals and direct sums all
//! materialize explicit bases, and restriction/deletion/contraction keep the
//! original element labels, so `(M|A)|B = M|B` and `(M/A)/B = M/(A∪B)` hold
//! on the nose. Equality compares (label set, basis family) only; the
//! backend tag records how a matroid was constructed.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::error::CapExceeded;

/// Largest ground set representable in a single mask word.
pub const MAX_GROUND_SIZE: usize = 63;

/// Cap on circuit enumeration (subset enumeration over the ground set).
pub const CIRCUITS_CAP: usize = 20;

/// A subset of a matroid's ground set, as a bit mask over labels 0..63.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GroundSubset(u64);

impl GroundSubset {
    pub const EMPTY: GroundSubset = GroundSubset(0);

    pub fn from_mask(mask: u64) -> GroundSubset {
        GroundSubset(mask)
    }

    /// The full set {0, .., n-1}.
    pub fn full(n: usize) -> GroundSubset {
        debug_assert!(n <= MAX_GROUND_SIZE);
        if n == 0 {
            GroundSubset(0)
        } else {
            GroundSubset(u64::MAX >> (64 - n))
        }
    }

    pub fn singleton(e: u8) -> GroundSubset {
        debug_assert!((e as usize) < 64);
        GroundSubset(1 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = u8>>(elements: I) -> GroundSubset {
        let mut mask = 0;
        for e in elements {
            debug_assert!((e as usize) < 64);
            mask |= 1 << e;
        }
        GroundSubset(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: u8) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn with(self, e: u8) -> GroundSubset {
        GroundSubset(self.0 | 1 << e)
    }

    pub fn without(self, e: u8) -> GroundSubset {
        GroundSubset(self.0 & !(1 << e))
    }

    pub fn union(self, other: GroundSubset) -> GroundSubset {
        GroundSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: GroundSubset) -> GroundSubset {
        GroundSubset(self.0 & other.0)
    }

    pub fn difference(self, other: GroundSubset) -> GroundSubset {
        GroundSubset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: GroundSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let e = rest.trailing_zeros() as u8;
                rest &= rest - 1;
                Some(e)
            }
        })
    }

    /// All submasks of `self`, the empty set and `self` included.
    /// Order is unspecified.
    pub fn subsets(self) -> impl Iterator<Item = GroundSubset> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let sub = next?;
            next = if sub == 0 {
                None
            } else {
                Some((sub - 1) & full)
            };
            Some(GroundSubset(sub))
        })
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Classification of a ground-set element by the basis family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementKind {
    /// In no basis ({e} is a circuit).
    Loop,
    /// In every basis.
    Coloop,
    /// Neither.
    Nonseparating,
}

/// How a matroid was constructed. Minors, duals and direct sums normalize
/// to `Explicit`; equality of matroids ignores this tag.
#[derive(Debug, Clone)]
pub enum Backend {
    Explicit,
    Uniform { rank: usize, size: usize },
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MatroidError {
    #[error("ground set of {n} elements exceeds the supported maximum of 63")]
    GroundSetTooLarge { n: usize },
    #[error("independence axiom (I1) violated: at least one basis is required")]
    EmptyBases,
    #[error("basis {basis} contains elements outside the ground set 0..{n}")]
    BasisOutOfRange { basis: GroundSubset, n: usize },
    #[error("bases {first} and {second} have unequal cardinality")]
    UnequalBasisCardinality {
        first: GroundSubset,
        second: GroundSubset,
    },
    #[error("basis-exchange axiom violated: removing {element} from {first} cannot be repaired by any element of {second}")]
    ExchangeViolation {
        first: GroundSubset,
        second: GroundSubset,
        element: u8,
    },
    #[error("uniform matroid rank {r} exceeds ground set size {n}")]
    RankExceedsSize { r: usize, n: usize },
    #[error("edge ({u},{v}) references a vertex outside 0..{vertices}")]
    EdgeOutOfRange { u: usize, v: usize, vertices: usize },
}

/// A matroid: a label set plus its family of bases (maximal independent
/// sets), all stored as masks. Immutable after construction.
#[derive(Clone)]
pub struct Matroid {
    labels: GroundSubset,
    bases: Vec<GroundSubset>,
    backend: Backend,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl std::hash::Hash for Matroid {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
        self.bases.hash(state);
    }
}

impl PartialOrd for Matroid {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Matroid {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.labels
            .cmp(&other.labels)
            .then_with(|| self.bases.cmp(&other.bases))
    }
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({}: ", self.labels)?;
        for (i, b) in self.bases.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", b)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Matroid {
    /// The empty matroid U_{0,0}: no elements, single basis ∅.
    pub fn empty() -> Matroid {
        Matroid {
            labels: GroundSubset::EMPTY,
            bases: vec![GroundSubset::EMPTY],
            backend: Backend::Explicit,
        }
    }

    /// Internal constructor; `bases` must be the complete basis family.
    fn from_parts(labels: GroundSubset, mut bases: Vec<GroundSubset>, backend: Backend) -> Matroid {
        bases.sort_unstable();
        bases.dedup();
        debug_assert!(!bases.is_empty());
        debug_assert!(bases.iter().all(|b| b.is_subset_of(labels)));
        debug_assert!(bases.iter().all(|b| b.len() == bases[0].len()));
        Matroid {
            labels,
            bases,
            backend,
        }
    }

    /// Single-element matroid on the given label: U_{1,1} if `independent`,
    /// U_{0,1} otherwise.
    pub fn single_on_label(label: u8, independent: bool) -> Matroid {
        let labels = GroundSubset::singleton(label);
        let basis = if independent {
            labels
        } else {
            GroundSubset::EMPTY
        };
        Matroid::from_parts(labels, vec![basis], Backend::Explicit)
    }

    /// Builds a matroid from an explicit basis family on labels 0..n-1,
    /// validating equal cardinality and the basis-exchange axiom.
    pub fn from_bases(n: usize, bases: &[GroundSubset]) -> Result<Matroid, MatroidError> {
        if n > MAX_GROUND_SIZE {
            return Err(MatroidError::GroundSetTooLarge { n });
        }
        if bases.is_empty() {
            return Err(MatroidError::EmptyBases);
        }
        let labels = GroundSubset::full(n);
        let mut family = bases.to_vec();
        for b in &family {
            if !b.is_subset_of(labels) {
                return Err(MatroidError::BasisOutOfRange { basis: *b, n });
            }
        }
        family.sort_unstable();
        family.dedup();
        let cardinality = family[0].len();
        for b in &family[1..] {
            if b.len() != cardinality {
                return Err(MatroidError::UnequalBasisCardinality {
                    first: family[0],
                    second: *b,
                });
            }
        }
        let set: HashSet<u64> = family.iter().map(|b| b.mask()).collect();
        for b1 in &family {
            for b2 in &family {
                if b1 == b2 {
                    continue;
                }
                for e in b1.difference(*b2).elements() {
                    let stripped = b1.without(e);
                    let repaired = b2
                        .difference(*b1)
                        .elements()
                        .any(|f| set.contains(&stripped.with(f).mask()));
                    if !repaired {
                        return Err(MatroidError::ExchangeViolation {
                            first: *b1,
                            second: *b2,
                            element: e,
                        });
                    }
                }
            }
        }
        Ok(Matroid {
            labels,
            bases: family,
            backend: Backend::Explicit,
        })
    }

    /// The uniform matroid U_{r,n}: bases are all r-subsets of 0..n-1.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid, MatroidError> {
        if n > MAX_GROUND_SIZE {
            return Err(MatroidError::GroundSetTooLarge { n });
        }
        if r > n {
            return Err(MatroidError::RankExceedsSize { r, n });
        }
        let bases = combinations(n, r).map(GroundSubset::from_mask).collect();
        Ok(Matroid::from_parts(
            GroundSubset::full(n),
            bases,
            Backend::Uniform { rank: r, size: n },
        ))
    }

    /// The graphic matroid of a multigraph: elements are edges (labeled by
    /// list position), independent sets are the acyclic edge subsets. A
    /// self-loop is dependent by itself; parallel edges are permitted.
    pub fn graphic(num_vertices: usize, edges: &[(usize, usize)]) -> Result<Matroid, MatroidError> {
        let m = edges.len();
        if m > MAX_GROUND_SIZE {
            return Err(MatroidError::GroundSetTooLarge { n: m });
        }
        for &(u, v) in edges {
            if u >= num_vertices || v >= num_vertices {
                return Err(MatroidError::EdgeOutOfRange {
                    u,
                    v,
                    vertices: num_vertices,
                });
            }
        }
        let rank = forest_edge_count(num_vertices, edges, u64::MAX);
        let bases: Vec<GroundSubset> = combinations(m, rank)
            .filter(|&mask| forest_edge_count(num_vertices, edges, mask) == rank)
            .map(GroundSubset::from_mask)
            .collect();
        Ok(Matroid::from_parts(
            GroundSubset::full(m),
            bases,
            Backend::Graphic {
                vertices: num_vertices,
                edges: edges.to_vec(),
            },
        ))
    }

    pub fn labels(&self) -> GroundSubset {
        self.labels
    }

    pub fn bases(&self) -> &[GroundSubset] {
        &self.bases
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    /// Number of ground-set elements.
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Rank of a subset: the size of a largest independent subset, computed
    /// as the maximal intersection with a basis.
    pub fn rank(&self, a: GroundSubset) -> usize {
        debug_assert!(a.is_subset_of(self.labels));
        self.bases
            .iter()
            .map(|b| b.intersection(a).len())
            .max()
            .expect("basis family is non-empty")
    }

    /// Nullity of a subset: |A| - r(A).
    pub fn nullity(&self, a: GroundSubset) -> usize {
        a.len() - self.rank(a)
    }

    pub fn rank_full(&self) -> usize {
        self.bases[0].len()
    }

    pub fn nullity_full(&self) -> usize {
        self.size() - self.rank_full()
    }

    /// Elements contained in no basis.
    pub fn loops(&self) -> GroundSubset {
        let union = self
            .bases
            .iter()
            .fold(GroundSubset::EMPTY, |acc, b| acc.union(*b));
        self.labels.difference(union)
    }

    /// Elements contained in every basis.
    pub fn coloops(&self) -> GroundSubset {
        self.bases
            .iter()
            .fold(self.labels, |acc, b| acc.intersection(*b))
    }

    /// Elements that are neither loops nor coloops.
    pub fn nonseparating(&self) -> GroundSubset {
        self.labels
            .difference(self.loops())
            .difference(self.coloops())
    }

    pub fn element_kind(&self, e: u8) -> ElementKind {
        assert!(self.labels.contains(e), "element {} not in ground set", e);
        if self.loops().contains(e) {
            ElementKind::Loop
        } else if self.coloops().contains(e) {
            ElementKind::Coloop
        } else {
            ElementKind::Nonseparating
        }
    }

    /// Restriction M|T: ground set T, independent sets those of M inside T.
    /// Labels are preserved.
    pub fn restrict(&self, t: GroundSubset) -> Matroid {
        debug_assert!(t.is_subset_of(self.labels));
        let r = self.rank(t);
        let bases = self
            .bases
            .iter()
            .map(|b| b.intersection(t))
            .filter(|c| c.len() == r)
            .collect();
        Matroid::from_parts(t, bases, Backend::Explicit)
    }

    /// Deletion M\T = M|(E-T).
    pub fn delete(&self, t: GroundSubset) -> Matroid {
        self.restrict(self.labels.difference(t))
    }

    /// Contraction M/T: ground set E-T; the bases are the sets B-T where B
    /// is a basis of M with |B∩T| = r(T), exactly the X ⊆ E-T with
    /// |X| = r(M)-r(T) and r(X∪T) = r(M).
    pub fn contract(&self, t: GroundSubset) -> Matroid {
        debug_assert!(t.is_subset_of(self.labels));
        let rt = self.rank(t);
        let bases = self
            .bases
            .iter()
            .filter(|b| b.intersection(t).len() == rt)
            .map(|b| b.difference(t))
            .collect();
        Matroid::from_parts(self.labels.difference(t), bases, Backend::Explicit)
    }

    /// The dual matroid: bases are the complements of the bases of M.
    pub fn dual(&self) -> Matroid {
        let bases = self.bases.iter().map(|b| self.labels.difference(*b)).collect();
        Matroid::from_parts(self.labels, bases, Backend::Explicit)
    }

    /// Direct sum: the result is relabeled to 0..n1+n2-1, with the second
    /// summand's elements shifted past the first's.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid, MatroidError> {
        let n1 = self.size();
        let n2 = other.size();
        if n1 + n2 > MAX_GROUND_SIZE {
            return Err(MatroidError::GroundSetTooLarge { n: n1 + n2 });
        }
        let left = self.compact_map();
        let right = other.compact_map();
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for b1 in &self.bases {
            let m1 = remap(*b1, &left, 0);
            for b2 in &other.bases {
                bases.push(m1.union(remap(*b2, &right, n1 as u8)));
            }
        }
        Ok(Matroid::from_parts(
            GroundSubset::full(n1 + n2),
            bases,
            Backend::Explicit,
        ))
    }

    /// All circuits (minimal dependent sets). Enumerates every subset of the
    /// ground set, so the size is capped.
    pub fn circuits(&self) -> Result<Vec<GroundSubset>, CapExceeded> {
        CapExceeded::check("circuits", self.size(), CIRCUITS_CAP)?;
        let mut out = Vec::new();
        for a in self.labels.subsets() {
            if a.is_empty() || self.rank(a) == a.len() {
                continue;
            }
            let minimal = a
                .elements()
                .all(|e| self.rank(a.without(e)) == a.len() - 1);
            if minimal {
                out.push(a);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// label -> position of the label in ascending order
    fn compact_map(&self) -> Vec<u8> {
        let mut map = vec![0u8; 64];
        for (i, e) in self.labels.elements().enumerate() {
            map[e as usize] = i as u8;
        }
        map
    }
}

fn remap(set: GroundSubset, map: &[u8], shift: u8) -> GroundSubset {
    GroundSubset::from_elements(set.elements().map(|e| map[e as usize] + shift))
}

/// Masks of all `r`-element subsets of {0,..,n-1}, ascending (Gosper's hack).
fn combinations(n: usize, r: usize) -> impl Iterator<Item = u64> {
    let limit = if n == 0 { 1 } else { 1u64 << n };
    let mut next = if r == 0 {
        Some(0u64)
    } else {
        Some((1u64 << r) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            next = None;
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            let t = cur | (cur - 1);
            let succ = (t + 1) | (((!t & (t + 1)) - 1) >> (cur.trailing_zeros() + 1));
            Some(succ)
        };
        Some(cur)
    })
}

/// Number of edges in a maximal forest among the edges selected by `mask`.
fn forest_edge_count(num_vertices: usize, edges: &[(usize, usize)], mask: u64) -> usize {
    let mut parent: Vec<usize> = (0..num_vertices).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut count = 0;
    for (i, &(u, v)) in edges.iter().enumerate() {
        if mask >> i & 1 == 0 {
            continue;
        }
        let ru = find(&mut parent, u);
        let rv = find(&mut parent, v);
        if ru != rv {
            parent[ru] = rv;
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(elements: &[u8]) -> GroundSubset {
        GroundSubset::from_elements(elements.iter().copied())
    }

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, n).unwrap()
    }

    fn triangle() -> Matroid {
        Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn from_bases_rank_one_uniform() {
        let m = Matroid::from_bases(2, &[gs(&[0]), gs(&[1])]).unwrap();
        assert_eq!(m, u(1, 2));
    }

    #[test]
    fn from_bases_rejects_unequal_cardinality() {
        let err = Matroid::from_bases(2, &[gs(&[0]), gs(&[0, 1])]).unwrap_err();
        assert_eq!(
            err,
            MatroidError::UnequalBasisCardinality {
                first: gs(&[0]),
                second: gs(&[0, 1]),
            }
        );
    }

    #[test]
    fn from_bases_accepts_exchange_family() {
        let m = Matroid::from_bases(3, &[gs(&[0, 1]), gs(&[0, 2])]).unwrap();
        assert_eq!(m.rank_full(), 2);
        assert_eq!(m.bases().len(), 2);
    }

    #[test]
    fn from_bases_rejects_exchange_violation_with_witness() {
        // {0,1} and {2,3}: removing 0 from {0,1} leaves {1}, and neither
        // {1,2} nor {1,3} is a basis.
        let err = Matroid::from_bases(4, &[gs(&[0, 1]), gs(&[2, 3])]).unwrap_err();
        match err {
            MatroidError::ExchangeViolation { first, second, .. } => {
                assert_eq!(first, gs(&[0, 1]));
                assert_eq!(second, gs(&[2, 3]));
            }
            other => panic!("expected exchange violation, got {other}"),
        }
    }

    #[test]
    fn from_bases_rejects_empty_family() {
        assert_eq!(
            Matroid::from_bases(2, &[]).unwrap_err(),
            MatroidError::EmptyBases
        );
    }

    #[test]
    fn uniform_loop_and_coloop() {
        assert_eq!(u(0, 1).bases(), &[GroundSubset::EMPTY]);
        assert_eq!(u(1, 1).bases(), &[gs(&[0])]);
        assert_eq!(u(0, 1).element_kind(0), ElementKind::Loop);
        assert_eq!(u(1, 1).element_kind(0), ElementKind::Coloop);
        assert_eq!(u(1, 2).element_kind(0), ElementKind::Nonseparating);
        assert_eq!(u(1, 2).element_kind(1), ElementKind::Nonseparating);
    }

    #[test]
    fn uniform_two_of_four_has_six_bases() {
        assert_eq!(u(2, 4).bases().len(), 6);
    }

    #[test]
    fn uniform_rejects_rank_above_size() {
        assert!(matches!(
            Matroid::uniform(2, 1),
            Err(MatroidError::RankExceedsSize { r: 2, n: 1 })
        ));
    }

    #[test]
    fn graphic_triangle_equals_uniform() {
        assert_eq!(triangle(), u(2, 3));
    }

    #[test]
    fn graphic_self_loop_is_matroid_loop() {
        let m = Matroid::graphic(1, &[(0, 0)]).unwrap();
        assert_eq!(m, u(0, 1));
    }

    #[test]
    fn graphic_bridge_is_coloop() {
        let m = Matroid::graphic(2, &[(0, 1)]).unwrap();
        assert_eq!(m, u(1, 1));
    }

    #[test]
    fn graphic_cycles_are_circuit_uniform() {
        for k in 2..=6 {
            let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            let c = Matroid::graphic(k, &edges).unwrap();
            assert_eq!(c, u(k - 1, k), "C_{k} should match U_{{{},{}}}", k - 1, k);
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(u(2, 4).rank(gs(&[0, 1, 2])), 2);
        let c3 = triangle();
        assert_eq!(c3.rank(c3.labels()), 2);
        assert_eq!(u(3, 5).rank(GroundSubset::EMPTY), 0);
    }

    #[test]
    fn nullity_examples() {
        assert_eq!(u(0, 1).nullity(gs(&[0])), 1);
        assert_eq!(u(1, 1).nullity(gs(&[0])), 0);
        let c3 = triangle();
        assert_eq!(c3.nullity(c3.labels()), 1);
    }

    #[test]
    fn restrict_keeps_labels_and_finds_maximal_independents() {
        let m = u(2, 4).restrict(gs(&[0, 1]));
        assert_eq!(m.labels(), gs(&[0, 1]));
        assert_eq!(m.bases(), &[gs(&[0, 1])]);
    }

    #[test]
    fn delete_nothing_is_identity() {
        let m = u(2, 4);
        assert_eq!(m.delete(GroundSubset::EMPTY), m);
    }

    #[test]
    fn contract_turns_parallel_element_into_loop() {
        let m = u(1, 2).contract(gs(&[0]));
        assert_eq!(m.labels(), gs(&[1]));
        assert_eq!(m.bases(), &[GroundSubset::EMPTY]);
        assert_eq!(m, Matroid::single_on_label(1, false));
    }

    #[test]
    fn contract_nothing_is_identity() {
        let m = triangle();
        assert_eq!(m.contract(GroundSubset::EMPTY), m);
    }

    #[test]
    fn contract_coloop_gives_empty() {
        assert_eq!(u(1, 1).contract(gs(&[0])), Matroid::empty());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(u(1, 1).dual(), u(0, 1));
        assert_eq!(u(0, 1).dual(), u(1, 1));
        assert_eq!(u(2, 4).dual(), u(2, 4));
    }

    #[test]
    fn direct_sum_examples() {
        let m = u(1, 1).direct_sum(&u(0, 1)).unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(m.bases(), &[gs(&[0])]);
        let e = Matroid::empty();
        assert_eq!(u(2, 3).direct_sum(&e).unwrap(), u(2, 3));
    }

    #[test]
    fn direct_sum_adds_ranks() {
        for (m1, m2) in [(u(1, 2), u(2, 3)), (u(0, 1), u(2, 4)), (triangle(), u(1, 1))] {
            let sum = m1.direct_sum(&m2).unwrap();
            assert_eq!(sum.rank_full(), m1.rank_full() + m2.rank_full());
        }
    }

    #[test]
    fn circuits_examples() {
        assert_eq!(u(0, 1).circuits().unwrap(), vec![gs(&[0])]);
        assert!(u(1, 1).circuits().unwrap().is_empty());
        assert_eq!(u(2, 3).circuits().unwrap(), vec![gs(&[0, 1, 2])]);
    }

    #[test]
    fn restriction_is_deletion_of_complement() {
        let m = triangle();
        for t in m.labels().subsets() {
            assert_eq!(m.restrict(t), m.delete(m.labels().difference(t)));
        }
    }

    #[test]
    fn contraction_satisfies_rank_formula() {
        let m = u(2, 4);
        for t in m.labels().subsets() {
            let c = m.contract(t);
            for x in c.labels().subsets() {
                assert_eq!(c.rank(x), m.rank(x.union(t)) - m.rank(t));
            }
        }
    }

    #[test]
    fn contraction_matches_dual_delete_dual() {
        for m in [u(2, 4), triangle(), u(1, 3)] {
            for t in m.labels().subsets() {
                assert_eq!(m.contract(t), m.dual().delete(t).dual());
            }
        }
    }

    #[test]
    fn coloop_contract_equals_delete() {
        let m = u(1, 1).direct_sum(&u(1, 2)).unwrap();
        assert_eq!(m.element_kind(0), ElementKind::Coloop);
        assert_eq!(m.contract(gs(&[0])), m.delete(gs(&[0])));
    }

    #[test]
    fn minors_compose_on_labels() {
        let m = u(3, 6);
        let a = gs(&[0, 2, 3, 5]);
        let b = gs(&[2, 5]);
        assert_eq!(m.restrict(a).restrict(b), m.restrict(b));
        let t1 = gs(&[1, 4]);
        let t2 = gs(&[0, 5]);
        assert_eq!(m.contract(t1).contract(t2), m.contract(t1.union(t2)));
    }

    #[test]
    fn subset_iteration_covers_power_set() {
        let s = gs(&[1, 3, 4]);
        let all: Vec<GroundSubset> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.contains(&GroundSubset::EMPTY));
        assert!(all.contains(&s));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        /// Valid matroids generated as minors of uniform matroids.
        fn arb_matroid() -> impl Strategy<Value = Matroid> {
            (0usize..=5)
                .prop_flat_map(|n| (Just(n), 0..=n, any::<u64>(), any::<u64>()))
                .prop_map(|(n, r, del, con)| {
                    let m = Matroid::uniform(r, n).unwrap();
                    let d = GroundSubset::from_mask(del).intersection(m.labels());
                    let m = m.delete(d);
                    let c = GroundSubset::from_mask(con).intersection(m.labels());
                    m.contract(c)
                })
        }

        proptest! {
            #[test]
            fn rank_axioms_hold(m in arb_matroid()) {
                let subsets: Vec<GroundSubset> = m.labels().subsets().collect();
                for &a in &subsets {
                    let r = m.rank(a);
                    prop_assert!(r <= a.len());
                    for e in m.labels().difference(a).elements() {
                        let re = m.rank(a.with(e));
                        prop_assert!(re == r || re == r + 1);
                    }
                }
                for &a in &subsets {
                    for &b in &subsets {
                        prop_assert!(
                            m.rank(a.union(b)) + m.rank(a.intersection(b))
                                <= m.rank(a) + m.rank(b)
                        );
                    }
                }
            }

            #[test]
            fn dual_is_involutive(m in arb_matroid()) {
                prop_assert_eq!(m.dual().dual(), m);
            }

            #[test]
            fn rank_additivity_under_minors(m in arb_matroid(), mask in any::<u64>()) {
                let t = GroundSubset::from_mask(mask).intersection(m.labels());
                let restricted = m.restrict(t);
                let contracted = m.contract(t);
                prop_assert_eq!(
                    restricted.rank_full() + contracted.rank_full(),
                    m.rank_full()
                );
                prop_assert_eq!(
                    restricted.nullity_full() + contracted.nullity_full(),
                    m.nullity_full()
                );
            }

            #[test]
            fn basis_exchange_holds_for_generated_minors(m in arb_matroid()) {
                // re-validate through the public constructor after compacting
                let compacted = m.direct_sum(&Matroid::empty()).unwrap();
                prop_assert!(Matroid::from_bases(compacted.size(), compacted.bases()).is_ok());
            }
        }
    }
}
