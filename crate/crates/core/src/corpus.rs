//! The built-in verification corpus: every uniform matroid up to a size
//! bound, a handful of graphic matroids (paths, cycles, K4, the one-point
//! join of two triangles, a multigraph with a self-loop and a parallel
//! pair), plus duals and pairwise direct sums of all of the above.

use crate::matroid::Matroid;

#[derive(Debug, Clone)]
pub struct CorpusCase {
    pub name: String,
    pub matroid: Matroid,
}

impl CorpusCase {
    fn new(name: impl Into<String>, matroid: Matroid) -> CorpusCase {
        CorpusCase {
            name: name.into(),
            matroid,
        }
    }
}

/// Path graph on 4 vertices (3 edges, all bridges).
pub fn path4() -> Matroid {
    Matroid::graphic(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
}

/// Cycle on 5 vertices.
pub fn cycle5() -> Matroid {
    Matroid::graphic(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
}

/// Complete graph on 4 vertices.
pub fn k4() -> Matroid {
    Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Two triangles sharing one vertex.
pub fn bowtie() -> Matroid {
    Matroid::graphic(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
}

/// One self-loop plus a parallel pair on two vertices.
pub fn loop_with_parallel_pair() -> Matroid {
    Matroid::graphic(2, &[(0, 0), (0, 1), (0, 1)]).unwrap()
}

/// The named base matroids: all U_{r,n} with n ≤ max_n and the graphic
/// examples whose ground set fits.
pub fn base_cases(max_n: usize) -> Vec<CorpusCase> {
    let mut cases = Vec::new();
    for n in 0..=max_n {
        for r in 0..=n {
            cases.push(CorpusCase::new(
                format!("U({r},{n})"),
                Matroid::uniform(r, n).unwrap(),
            ));
        }
    }
    let graphs = [
        ("P4", path4()),
        ("C5", cycle5()),
        ("K4", k4()),
        ("bowtie", bowtie()),
        ("multigraph", loop_with_parallel_pair()),
    ];
    for (name, m) in graphs {
        if m.size() <= max_n {
            cases.push(CorpusCase::new(name, m));
        }
    }
    cases
}

/// The full corpus: base cases, their duals, and the pairwise direct sums
/// of base cases whose combined ground set still fits in max_n.
pub fn builtin(max_n: usize) -> Vec<CorpusCase> {
    let base = base_cases(max_n);
    let mut cases = base.clone();
    for c in &base {
        cases.push(CorpusCase::new(
            format!("dual({})", c.name),
            c.matroid.dual(),
        ));
    }
    for (i, c1) in base.iter().enumerate() {
        for c2 in &base[i..] {
            if c1.matroid.size() + c2.matroid.size() <= max_n {
                cases.push(CorpusCase::new(
                    format!("{} + {}", c1.name, c2.name),
                    c1.matroid.direct_sum(&c2.matroid).unwrap(),
                ));
            }
        }
    }
    cases
}
