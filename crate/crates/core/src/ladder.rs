//! The inductive ladder matrices `B_l` and the twisted determinant identity
//! they satisfy.
//!
//! For integers `v_1,…,v_l` and signs `ε_2,…,ε_l` the `2l x 2l` matrix
//! `B_l` is defined by `B_1 = [[v_1, 0], [-1, 1]]` and by extending
//! `B_{i-1}` with two columns (row pair 1 gets `(v_i, 0), (0, 1)`, later
//! pairs get `(v_i, 1), (0, 1)`) and two rows (`v_i` at every odd column
//! and `z_i := (1+ε_i)/2` closing the diagonal; a 0 then 1s in the last
//! row, ending `1-z_i, 1`). With `Y = diag(y_1,y_1,…,y_l,y_l)`,
//!
//! ```text
//! det(Y B - Y^{-1} B^t)
//!   = 1 - 2 v_1
//!     + Σ_{j=1}^{l} (v_j - v_{j+1}) (y_1^2 Π_{i=2}^{j} y_i^{2ε_i}
//!                                    + y_1^{-2} Π_{i=2}^{j} y_i^{-2ε_i})
//! ```
//!
//! with `v_{l+1} = 0`. [`twisted_det`] computes the left side from the
//! actual matrix, [`twisted_det_formula`] the right side from the closed
//! form; the test suites check they agree exactly. The sign `ε_1` is not a
//! parameter: the first step's contribution is fixed as `y_1^{+2}`, and
//! path normalization guarantees that is sufficient.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::laurent::{ExponentVector, LaurentPoly};
use crate::matrix::{det_poly, IntMatrix, PolyMatrix};

/// A unit step direction; also the ladder twist signs `ε_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `z = (1 + ε) / 2`, i.e. 1 for `+`, 0 for `-`.
    pub fn z(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => 0,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Parameters of one ladder matrix: `v_1,…,v_l` and `ε_2,…,ε_l`.
/// `v_{l+1}` is implicitly 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderParams {
    v: Vec<BigInt>,
    eps: Vec<Sign>,
}

impl LadderParams {
    pub fn new(v: Vec<BigInt>, eps: Vec<Sign>) -> Self {
        assert_eq!(
            eps.len(),
            v.len().saturating_sub(1),
            "need exactly one sign for each rung after the first"
        );
        LadderParams { v, eps }
    }

    pub fn from_i64(v: &[i64], eps: &[Sign]) -> Self {
        Self::new(v.iter().map(|&x| BigInt::from(x)).collect(), eps.to_vec())
    }

    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v.is_empty()
    }

    pub fn v(&self) -> &[BigInt] {
        &self.v
    }

    pub fn eps(&self) -> &[Sign] {
        &self.eps
    }

    /// `z_i` for rung `i` (1-based, `i >= 2`).
    fn z(&self, i: usize) -> i64 {
        self.eps[i - 2].z()
    }
}

/// Builds the `2l x 2l` ladder matrix.
pub fn build_b(params: &LadderParams) -> IntMatrix {
    let l = params.len();
    let mut b = IntMatrix::zero(2 * l, 2 * l);
    // Fill per 2x2 pair block; pair indices below are 1-based like the rungs.
    for pi in 1..=l {
        for pj in 1..=l {
            let r = 2 * (pi - 1);
            let c = 2 * (pj - 1);
            let (e00, e01, e10, e11): (BigInt, BigInt, BigInt, BigInt) = if pj > pi {
                // column extension added at stage pj
                let delta = if pi == 1 { 0 } else { 1 };
                (params.v[pj - 1].clone(), delta.into(), 0.into(), 1.into())
            } else if pj == pi {
                if pi == 1 {
                    (params.v[0].clone(), 0.into(), (-1).into(), 1.into())
                } else {
                    let z = params.z(pi);
                    (params.v[pi - 1].clone(), z.into(), (1 - z).into(), 1.into())
                }
            } else {
                // bottom rows added at stage pi
                let low = if pj == 1 { 0 } else { 1 };
                (params.v[pi - 1].clone(), 0.into(), low.into(), 1.into())
            };
            *b.at_mut(r, c) = e00;
            *b.at_mut(r, c + 1) = e01;
            *b.at_mut(r + 1, c) = e10;
            *b.at_mut(r + 1, c + 1) = e11;
        }
    }
    b
}

/// The `2l x 2l` matrix `Y B - Y^{-1} B^t` over `Λ_l`,
/// `Y = diag(y_1,y_1,…,y_l,y_l)`.
pub fn twisted_matrix(params: &LadderParams) -> PolyMatrix {
    let l = params.len();
    let b = build_b(params);
    PolyMatrix::from_fn(2 * l, 2 * l, l, |r, c| {
        let pair = r / 2;
        let y = LaurentPoly::monomial(ExponentVector::unit(l, pair), 1);
        let y_inv = LaurentPoly::monomial({
            let mut e = ExponentVector::zero(l);
            e.0[pair] = -1;
            e
        }, 1);
        &(&y * b.at(r, c)) - &(&y_inv * b.at(c, r))
    })
}

/// Left side of the identity: the actual symbolic determinant.
pub fn twisted_det(params: &LadderParams) -> LaurentPoly {
    if params.is_empty() {
        return LaurentPoly::one(0);
    }
    det_poly(&twisted_matrix(params))
}

/// Right side of the identity: the closed form, expanded directly.
pub fn twisted_det_formula(params: &LadderParams) -> LaurentPoly {
    let l = params.len();
    if l == 0 {
        return LaurentPoly::one(0);
    }
    let two_v1 = &params.v[0] * 2;
    let mut out = LaurentPoly::constant(l, BigInt::one() - two_v1);
    for j in 1..=l {
        let w_j = if j < l {
            &params.v[j - 1] - &params.v[j]
        } else {
            params.v[l - 1].clone()
        };
        if w_j.is_zero() {
            continue;
        }
        let mut e = ExponentVector::zero(l);
        e.0[0] = 2;
        for i in 2..=j {
            e.0[i - 1] = 2 * params.eps[i - 2].to_i64();
        }
        out.add_term(e.negated(), w_j.clone());
        out.add_term(e, w_j);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytext::parse_poly;

    #[test]
    fn single_rung_matrix() {
        let b = build_b(&LadderParams::from_i64(&[5], &[]));
        assert_eq!(b, IntMatrix::from_i64_rows(&[&[5, 0], &[-1, 1]]));
    }

    #[test]
    fn empty_ladder() {
        let params = LadderParams::from_i64(&[], &[]);
        assert_eq!(build_b(&params).rows(), 0);
        assert_eq!(twisted_det(&params), LaurentPoly::one(0));
        assert_eq!(twisted_det_formula(&params), LaurentPoly::one(0));
    }

    #[test]
    fn frozen_two_rung_matrix() {
        let b = build_b(&LadderParams::from_i64(&[3, 3], &[Sign::Plus]));
        assert_eq!(
            b,
            IntMatrix::from_i64_rows(&[
                &[3, 0, 3, 0],
                &[-1, 1, 0, 1],
                &[3, 0, 3, 1],
                &[0, 1, 0, 1],
            ])
        );
    }

    #[test]
    fn frozen_three_rung_matrix() {
        let b = build_b(&LadderParams::from_i64(&[1, 2, 3], &[Sign::Plus, Sign::Minus]));
        assert_eq!(
            b,
            IntMatrix::from_i64_rows(&[
                &[1, 0, 2, 0, 3, 0],
                &[-1, 1, 0, 1, 0, 1],
                &[2, 0, 2, 1, 3, 1],
                &[0, 1, 0, 1, 0, 1],
                &[3, 0, 3, 0, 3, 0],
                &[0, 1, 1, 1, 1, 1],
            ])
        );
    }

    #[test]
    fn skew_part_is_block_sum_of_elementary_pairs() {
        for (v, eps) in [
            (&[1, 2, 3][..], &[Sign::Plus, Sign::Minus][..]),
            (&[0, -2, 5, 1][..], &[Sign::Minus, Sign::Minus, Sign::Plus][..]),
        ] {
            let params = LadderParams::from_i64(v, eps);
            let b = build_b(&params);
            let n = b.rows();
            let skew = IntMatrix::from_fn(n, n, |r, c| b.at(r, c) - b.at(c, r));
            for r in 0..n {
                for c in 0..n {
                    let expected: BigInt = if r / 2 != c / 2 || r == c {
                        0.into()
                    } else {
                        let eps_i = if r / 2 == 0 {
                            1
                        } else {
                            params.eps()[r / 2 - 1].to_i64()
                        };
                        if r < c { eps_i.into() } else { (-eps_i).into() }
                    };
                    assert_eq!(skew.at(r, c), &expected, "at ({r},{c})");
                }
            }
        }
    }

    #[test]
    fn identity_single_rung() {
        let params = LadderParams::from_i64(&[1], &[]);
        let expected = parse_poly("t1^2 - 1 + t1^-2", 1).unwrap();
        assert_eq!(twisted_det_formula(&params), expected);
        assert_eq!(twisted_det(&params), expected);
    }

    #[test]
    fn identity_two_rungs_worked_example() {
        let params = LadderParams::from_i64(&[3, 3], &[Sign::Plus]);
        let expected = parse_poly("3*t1^2*t2^2 - 5 + 3*t1^-2*t2^-2", 2).unwrap();
        assert_eq!(twisted_det_formula(&params), expected);
        assert_eq!(twisted_det(&params), expected);
    }

    #[test]
    fn identity_holds_on_mixed_signs() {
        for (v, eps) in [
            (&[2, -1, 1][..], &[Sign::Minus, Sign::Plus][..]),
            (&[-2, 0, 3][..], &[Sign::Minus, Sign::Minus][..]),
            (&[1, 1, 1, 1][..], &[Sign::Plus, Sign::Minus, Sign::Plus][..]),
            (&[0, 0, 2][..], &[Sign::Plus, Sign::Minus][..]),
        ] {
            let params = LadderParams::from_i64(v, eps);
            assert_eq!(twisted_det(&params), twisted_det_formula(&params), "{params:?}");
        }
    }

    #[test]
    fn formula_drops_cancelling_rungs() {
        // equal consecutive v means the corresponding term vanishes
        let params = LadderParams::from_i64(&[3, 3], &[Sign::Plus]);
        let formula = twisted_det_formula(&params);
        assert_eq!(formula.term_count(), 3);
    }
}
