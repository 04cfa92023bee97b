//! Sparse multivariate polynomials over the rationals in the fixed
//! variable set {x, y, a, b, s}.
//!
//! Invariants:
//! - no stored coefficient is zero (canonical form),
//! - two polynomials are equal iff their term maps are identical,
//! - all arithmetic is exact (`BigRational` coefficients, always reduced).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The five variables of the ring. `x`, `y` are the Tutte arguments,
/// `a`, `b` the deletion/contraction weights, `s` the flow parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    A,
    B,
    S,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::X, Var::Y, Var::A, Var::B, Var::S];

    /// Order used for printing the factors of a monomial.
    const PRINT_ORDER: [Var; 5] = [Var::A, Var::B, Var::S, Var::X, Var::Y];

    /// Position in the exponent vector. The ordering (x, y, a, b, s) is the
    /// significance order of the canonical term ordering.
    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::A => 2,
            Var::B => 3,
            Var::S => 4,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::A => 'a',
            Var::B => 'b',
            Var::S => 's',
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        match name {
            "x" => Some(Var::X),
            "y" => Some(Var::Y),
            "a" => Some(Var::A),
            "b" => Some(Var::B),
            "s" => Some(Var::S),
            _ => None,
        }
    }
}

/// Exponent vector (ex, ey, ea, eb, es). The derived `Ord` is the
/// lexicographic canonical ordering used for printing (highest first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exps: [u16; 5],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; 5] };

    pub fn var(v: Var) -> Monomial {
        let mut exps = [0; 5];
        exps[v.index()] = 1;
        Monomial { exps }
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.exps[v.index()]
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0; 5];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i]
                .checked_add(other.exps[i])
                .expect("monomial exponent overflow");
        }
        Monomial { exps }
    }
}

/// A sparse polynomial in Q[x, y, a, b, s], kept in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> MultiPoly {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::ONE, c);
        p
    }

    pub fn from_int(n: i64) -> MultiPoly {
        MultiPoly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> MultiPoly {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::var(v), BigRational::one());
        p
    }

    pub fn monomial(m: Monomial, c: BigRational) -> MultiPoly {
        let mut p = MultiPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I>(terms: I) -> MultiPoly
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// The value of a constant polynomial; `None` if any variable occurs.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_constant() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms
            .keys()
            .map(|m| m.exponent(v))
            .max()
            .unwrap_or(0)
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut exp = k;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Substitutes the assigned variables by rational values, leaving the
    /// rest symbolic. A full assignment yields a constant polynomial.
    pub fn eval(&self, assignment: &[(Var, BigRational)]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut residual = *m;
            for (v, value) in assignment {
                let e = residual.exponent(*v);
                if e > 0 {
                    coeff *= num_traits::pow(value.clone(), e as usize);
                    residual.exps[v.index()] = 0;
                }
            }
            out.add_term(residual, coeff);
        }
        out
    }

    /// Formal partial derivative with respect to `s`.
    pub fn deriv_s(&self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(Var::S);
            if e > 0 {
                let mut dm = *m;
                dm.exps[Var::S.index()] = e - 1;
                out.add_term(dm, c * BigRational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Exchanges two variables in every monomial.
    pub fn swap_vars(&self, u: Var, v: Var) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut sm = *m;
            sm.exps.swap(u.index(), v.index());
            out.add_term(sm, c.clone());
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Canonical ordering: lexicographic on (ex, ey, ea, eb, es), highest first.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = c.abs();
            if m.is_constant() {
                write!(f, "{}", magnitude)?;
            } else {
                let mut lead = true;
                if !magnitude.is_one() {
                    write!(f, "{}", magnitude)?;
                    lead = false;
                }
                for v in Var::PRINT_ORDER {
                    let e = m.exponent(v);
                    if e == 0 {
                        continue;
                    }
                    if !lead {
                        write!(f, "*")?;
                    }
                    lead = false;
                    if e == 1 {
                        write!(f, "{}", v.symbol())?;
                    } else {
                        write!(f, "{}^{}", v.symbol(), e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}
