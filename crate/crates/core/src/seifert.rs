//! Boundary link Seifert matrices and their Alexander polynomials.
//!
//! A Seifert matrix here is an `n x n` integer matrix split into blocks of
//! sizes `(n_1, …, n_m)` with `A_ij = A_ji^t` for `i != j` and
//! `det(A_ii - A_ii^t) = 1` for every diagonal block; the `n_i` are
//! necessarily even. Its Alexander polynomial is
//! `det(T)^(-1/2) det(TA - A^t)` with `T` the block-scalar diagonal of the
//! variables. That polynomial always takes the value 1 at `(1,…,1)` and is
//! invariant under inverting all variables; [`alexander`] asserts both.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::laurent::{ExponentVector, LaurentPoly};
use crate::matrix::{det_int, det_poly, IntMatrix, PolyMatrix};

/// A validated boundary link Seifert matrix with its block sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    matrix: IntMatrix,
    sizes: Vec<usize>,
}

impl SeifertMatrix {
    /// Number of variables / blocks.
    pub fn num_blocks(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Row/column offset where block `i` starts.
    pub fn block_offset(&self, i: usize) -> usize {
        self.sizes[..i].iter().sum()
    }

    /// The block `A_ij`.
    pub fn block(&self, i: usize, j: usize) -> IntMatrix {
        let ro = self.block_offset(i);
        let co = self.block_offset(j);
        let rows: Vec<usize> = (ro..ro + self.sizes[i]).collect();
        let cols: Vec<usize> = (co..co + self.sizes[j]).collect();
        self.matrix.submatrix(&rows, &cols)
    }

    /// The block row `(A_i1 … A_im)` as one matrix.
    pub fn block_row(&self, i: usize) -> IntMatrix {
        let ro = self.block_offset(i);
        let rows: Vec<usize> = (ro..ro + self.sizes[i]).collect();
        let cols: Vec<usize> = (0..self.dim()).collect();
        self.matrix.submatrix(&rows, &cols)
    }

    /// The stacked block column `(A_1i; …; A_mi)` as one matrix.
    pub fn block_col(&self, i: usize) -> IntMatrix {
        let co = self.block_offset(i);
        let rows: Vec<usize> = (0..self.dim()).collect();
        let cols: Vec<usize> = (co..co + self.sizes[i]).collect();
        self.matrix.submatrix(&rows, &cols)
    }

    /// Block index containing matrix index `idx`.
    pub fn block_of_index(&self, idx: usize) -> usize {
        let mut acc = 0;
        for (b, &s) in self.sizes.iter().enumerate() {
            acc += s;
            if idx < acc {
                return b;
            }
        }
        panic!("index {idx} out of range for dimension {}", self.dim());
    }
}

/// One violated Seifert condition, with enough context to report it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotSquare {
        rows: usize,
        cols: usize,
    },
    SizeSumMismatch {
        dim: usize,
        size_sum: usize,
    },
    OddBlockSize {
        block: usize,
        size: usize,
    },
    BlockSymmetry {
        i: usize,
        j: usize,
    },
    DiagonalDeterminant {
        block: usize,
        det: BigInt,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, not square")
            }
            Violation::SizeSumMismatch { dim, size_sum } => {
                write!(f, "block sizes sum to {size_sum} but the matrix has dimension {dim}")
            }
            Violation::OddBlockSize { block, size } => {
                write!(f, "block {} has odd size {size}", block + 1)
            }
            Violation::BlockSymmetry { i, j } => write!(
                f,
                "blocks ({},{}) and ({},{}) are not mutual transposes",
                i + 1,
                j + 1,
                j + 1,
                i + 1
            ),
            Violation::DiagonalDeterminant { block, det } => write!(
                f,
                "det(A_{0}{0} - A_{0}{0}^t) = {1}, expected 1",
                block + 1,
                det
            ),
        }
    }
}

/// Checks every Seifert condition and returns the validated matrix, or the
/// full list of violations.
pub fn validate_seifert(matrix: IntMatrix, sizes: Vec<usize>) -> Result<SeifertMatrix, Vec<Violation>> {
    let mut violations = Vec::new();
    if !matrix.is_square() {
        violations.push(Violation::NotSquare {
            rows: matrix.rows(),
            cols: matrix.cols(),
        });
        return Err(violations);
    }
    let size_sum: usize = sizes.iter().sum();
    if size_sum != matrix.rows() {
        violations.push(Violation::SizeSumMismatch {
            dim: matrix.rows(),
            size_sum,
        });
        return Err(violations);
    }
    for (b, &s) in sizes.iter().enumerate() {
        if s % 2 != 0 {
            violations.push(Violation::OddBlockSize { block: b, size: s });
        }
    }
    let candidate = SeifertMatrix { matrix, sizes };
    let m = candidate.num_blocks();
    for i in 0..m {
        for j in i + 1..m {
            if candidate.block(i, j) != candidate.block(j, i).transpose() {
                violations.push(Violation::BlockSymmetry { i, j });
            }
        }
    }
    for i in 0..m {
        let d = candidate.block(i, i);
        let skew = IntMatrix::from_fn(d.rows(), d.cols(), |r, c| d.at(r, c) - d.at(c, r));
        let det = det_int(&skew);
        if !det.is_one() {
            violations.push(Violation::DiagonalDeterminant { block: i, det });
        }
    }
    if violations.is_empty() {
        Ok(candidate)
    } else {
        Err(violations)
    }
}

/// The block-scalar diagonal `T = diag(t_1,…,t_1,…,t_m,…,t_m)` and the
/// matrix `TA - A^t` over `Λ_m`.
pub fn twisted_difference(a: &SeifertMatrix) -> PolyMatrix {
    let m = a.num_blocks();
    let n = a.dim();
    let mut var_of_index = Vec::with_capacity(n);
    for (b, &s) in a.sizes().iter().enumerate() {
        var_of_index.extend(core::iter::repeat(b).take(s));
    }
    PolyMatrix::from_fn(n, n, m, |r, c| {
        let t_r = LaurentPoly::var(m, var_of_index[r]);
        let ta = &t_r * a.matrix().at(r, c);
        let at = LaurentPoly::constant(m, a.matrix().at(c, r).clone());
        &ta - &at
    })
}

/// The Alexander polynomial `det(T)^(-1/2) det(TA - A^t)` of a validated
/// Seifert matrix. Panics if the result fails either defining property,
/// which would mean an invalid matrix slipped past validation.
pub fn alexander(a: &SeifertMatrix) -> LaurentPoly {
    let det = det_poly(&twisted_difference(a));
    let half_sizes: Vec<i64> = a.sizes().iter().map(|&s| (s / 2) as i64).collect();
    let delta = det.monomial_div(&ExponentVector(half_sizes));
    assert!(
        delta.eval_at_ones().is_one(),
        "Alexander polynomial of a valid Seifert matrix must be 1 at (1,…,1), got {}",
        delta.eval_at_ones()
    );
    assert!(
        delta.is_symmetric(),
        "Alexander polynomial of a valid Seifert matrix must be symmetric"
    );
    delta
}

/// The unique coefficient form of an admissible polynomial:
/// `Δ = Σ c_α (t^α + t^{-α}) + constant` with canonical representatives
/// `α` (first nonzero entry positive) and `constant = 1 - 2 Σ c_α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPresentation {
    pub num_vars: usize,
    /// `(α, c_α)` pairs, canonical `α`, descending lexicographic order.
    pub pairs: Vec<(ExponentVector, BigInt)>,
    pub constant: BigInt,
}

/// Why a polynomial has no symmetric presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecomposeError {
    /// Witness: an exponent whose coefficient differs from its negation's.
    NotSymmetric {
        exponent: ExponentVector,
        coeff: BigInt,
        mirrored: BigInt,
    },
    /// The value at `(1,…,1)` is not 1.
    UnitValue { value: BigInt },
}

impl fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecomposeError::NotSymmetric {
                exponent,
                coeff,
                mirrored,
            } => write!(
                f,
                "polynomial is not symmetric: coefficient at {:?} is {} but {} at the negated exponent",
                exponent.0, coeff, mirrored
            ),
            DecomposeError::UnitValue { value } => {
                write!(f, "polynomial evaluates to {value} at (1,…,1), expected 1")
            }
        }
    }
}

/// Extracts the symmetric presentation of an admissible polynomial.
pub fn decompose(p: &LaurentPoly) -> Result<SymmetricPresentation, DecomposeError> {
    for (e, c) in p.terms() {
        let mirrored = p.coeff(&e.negated());
        if &mirrored != c {
            return Err(DecomposeError::NotSymmetric {
                exponent: e.clone(),
                coeff: c.clone(),
                mirrored,
            });
        }
    }
    let ones = p.eval_at_ones();
    if !ones.is_one() {
        return Err(DecomposeError::UnitValue { value: ones });
    }
    let pairs: Vec<(ExponentVector, BigInt)> = p
        .terms()
        .rev()
        .filter(|(e, _)| e.is_canonical())
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect();
    let constant = p.coeff(&ExponentVector::zero(p.num_vars()));
    Ok(SymmetricPresentation {
        num_vars: p.num_vars(),
        pairs,
        constant,
    })
}

/// `Σ c_α (t^α + t^{-α}) + constant`.
pub fn reconstruct(s: &SymmetricPresentation) -> LaurentPoly {
    let mut p = LaurentPoly::constant(s.num_vars, s.constant.clone());
    for (e, c) in &s.pairs {
        p.add_term(e.clone(), c.clone());
        p.add_term(e.negated(), c.clone());
    }
    p
}
