//! Sparse exact Laurent polynomials in `m` variables over `Z`.
//!
//! `LaurentPoly` is the element type of `Λ_m = Z[t1^±1, …, tm^±1]`. Terms are
//! kept in a `BTreeMap` keyed by exponent vector, so iteration order is the
//! lexicographic order on exponents and printing/hashing is deterministic
//! across runs and platforms. Coefficients are arbitrary-precision integers;
//! a stored coefficient is never zero and the zero polynomial is the empty
//! map. The variable count is carried explicitly even for constants (there
//! are polynomials in zero variables: the integers).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exponent vector of a Laurent monomial: one signed exponent per variable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn zero(num_vars: usize) -> Self {
        ExponentVector(vec![0; num_vars])
    }

    /// The `i`-th unit vector (0-based) in `num_vars` variables.
    pub fn unit(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        ExponentVector(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn negated(&self) -> Self {
        ExponentVector(self.0.iter().map(|&e| -e).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// True if the first nonzero entry is positive. The zero vector is not
    /// canonical: it never appears as a coefficient-pair representative.
    pub fn is_canonical(&self) -> bool {
        match self.0.iter().find(|&&e| e != 0) {
            Some(&e) => e > 0,
            None => false,
        }
    }

    /// The canonical representative of the pair `{α, -α}`.
    pub fn canonicalized(&self) -> Self {
        if self.is_canonical() || self.is_zero() {
            self.clone()
        } else {
            self.negated()
        }
    }

    /// Manhattan distance to `other`.
    pub fn manhattan(&self, other: &Self) -> u64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.abs_diff(*b))
            .sum()
    }
}

/// A sparse Laurent polynomial with exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<ExponentVector, BigInt>,
    num_vars: usize,
}

impl LaurentPoly {
    pub fn zero(num_vars: usize) -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
            num_vars,
        }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, BigInt::one())
    }

    pub fn constant(num_vars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(ExponentVector::zero(num_vars), c.into());
        p
    }

    /// The monomial `c * t^e`.
    pub fn monomial(e: ExponentVector, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(e.len());
        p.add_term(e, c.into());
        p
    }

    /// The variable `t_{i+1}` (0-based index) in `num_vars` variables.
    pub fn var(num_vars: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(num_vars, i), 1)
    }

    pub fn from_terms(
        num_vars: usize,
        terms: impl IntoIterator<Item = (ExponentVector, BigInt)>,
    ) -> Self {
        let mut p = Self::zero(num_vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&ExponentVector::zero(self.num_vars))
                .is_some_and(|c| c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExponentVector) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Adds `c * t^e` in place, pruning a resulting zero coefficient.
    pub fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        assert_eq!(
            e.len(),
            self.num_vars,
            "exponent vector length {} does not match variable count {}",
            e.len(),
            self.num_vars
        );
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn assert_same_vars(&self, other: &Self) {
        assert_eq!(
            self.num_vars, other.num_vars,
            "mismatched variable counts: {} vs {}",
            self.num_vars, other.num_vars
        );
    }

    /// Substitutes `t_i -> t_i^{-1}` for every variable.
    pub fn invert_vars(&self) -> Self {
        let mut out = Self::zero(self.num_vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.negated(), c.clone());
        }
        out
    }

    /// True iff `p(t1,…,tm) = p(t1^{-1},…,tm^{-1})` exactly.
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&e.negated()) == Some(c))
    }

    /// Divides by the monomial `t^e` (always exact in `Λ_m`): shifts every
    /// exponent by `-e`.
    pub fn monomial_div(&self, e: &ExponentVector) -> Self {
        assert_eq!(e.len(), self.num_vars, "monomial divisor arity mismatch");
        let mut out = Self::zero(self.num_vars);
        for (f, c) in &self.terms {
            out.terms.insert(f.sub(e), c.clone());
        }
        out
    }

    /// Exact substitution of nonzero rationals for the variables.
    pub fn eval_rational(&self, point: &[BigRational]) -> Result<BigRational, EvalError> {
        if point.len() != self.num_vars {
            return Err(EvalError::WrongArity {
                expected: self.num_vars,
                got: point.len(),
            });
        }
        if let Some(i) = point.iter().position(|x| x.is_zero()) {
            return Err(EvalError::ZeroCoordinate { index: i });
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (x, &k) in point.iter().zip(&e.0) {
                term *= rational_pow(x, k);
            }
            total += term;
        }
        Ok(total)
    }

    /// Value at `(1,…,1)`: the sum of the coefficients.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Largest exponent vector in lexicographic order, if nonzero.
    pub fn leading(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Componentwise minimum of all exponent vectors (the "min corner").
    /// Returns the zero vector for the zero polynomial.
    pub fn min_corner(&self) -> ExponentVector {
        let mut min = vec![i64::MAX; self.num_vars];
        if self.terms.is_empty() {
            return ExponentVector::zero(self.num_vars);
        }
        for e in self.terms.keys() {
            for (m, &x) in min.iter_mut().zip(&e.0) {
                *m = (*m).min(x);
            }
        }
        ExponentVector(min)
    }

    /// Exact quotient `self / divisor`, or `None` when `divisor` does not
    /// divide `self` in `Λ_m`. Both polynomials are first shifted so their
    /// min corner sits at the origin; the shifted parts are then genuine
    /// polynomials and long division by the lexicographic leading term
    /// either terminates with zero remainder or proves indivisibility.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.assert_same_vars(divisor);
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(self.num_vars));
        }
        let shift_a = self.min_corner();
        let shift_b = divisor.min_corner();
        let a = self.monomial_div(&shift_a);
        let b = divisor.monomial_div(&shift_b);
        let (lead_b, lead_bc) = b.leading().expect("nonzero divisor");
        let lead_b = lead_b.clone();
        let lead_bc = lead_bc.clone();

        let mut rem = a;
        let mut quot = Self::zero(self.num_vars);
        while let Some((lead_r, lead_rc)) = rem.leading() {
            let eq = lead_r.sub(&lead_b);
            if eq.0.iter().any(|&x| x < 0) {
                return None;
            }
            let (cq, cr) = num_integer::Integer::div_rem(lead_rc, &lead_bc);
            if !cr.is_zero() {
                return None;
            }
            let term = Self::monomial(eq, cq);
            rem = &rem - &(&term * &b);
            quot = &quot + &term;
        }
        Some(quot.monomial_div(&shift_b.sub(&shift_a)))
    }
}

/// `base^exp` for a nonzero rational and a signed exponent.
fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    let mut result = BigRational::one();
    let mut sq = if exp >= 0 {
        base.clone()
    } else {
        base.recip()
    };
    let mut k = exp.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            result *= &sq;
        }
        k >>= 1;
        if k > 0 {
            sq = &sq * &sq;
        }
    }
    result
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.assert_same_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.assert_same_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.num_vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.assert_same_vars(rhs);
        let mut out = LaurentPoly::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        out
    }
}

impl Mul<&BigInt> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &BigInt) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.num_vars);
        if rhs.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c * rhs);
        }
        out
    }
}

/// Failure modes of [`LaurentPoly::eval_rational`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    WrongArity { expected: usize, got: usize },
    ZeroCoordinate { index: usize },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::WrongArity { expected, got } => {
                write!(f, "evaluation point has {got} coordinates, expected {expected}")
            }
            EvalError::ZeroCoordinate { index } => {
                write!(f, "coordinate {} is zero; variables must be invertible", index + 1)
            }
        }
    }
}
