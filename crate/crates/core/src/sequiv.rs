//! S-equivalence toolkit: congruence and enlargement moves, the
//! irreducibility certificate, and sound non-equivalence obstructions.
//!
//! Two Seifert matrices are S-equivalent when they are related by
//! unimodular block-diagonal congruences and row/column enlargements or
//! reductions. Equal Alexander polynomials are necessary; for irreducible
//! matrices the stronger necessary condition is rational block congruence,
//! under which each diagonal block determinant changes by a positive
//! rational square. [`compare`] turns those two facts into a verdict that
//! is either `NotEquivalent` with sound reasons or `Inconclusive` — it
//! never claims equivalence.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;
use crate::matrix::{congruence, det_int, rank_rational, IntMatrix};
use crate::seifert::{alexander, validate_seifert, SeifertMatrix};

/// Errors of the move operations; all are caller input errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveError {
    SizeMismatch {
        expected: usize,
        got: usize,
    },
    /// Nonzero entry outside the diagonal blocks at this position.
    NotBlockDiagonal {
        row: usize,
        col: usize,
    },
    BlockNotUnimodular {
        block: usize,
        det: BigInt,
    },
    BlockOutOfRange {
        block: usize,
        blocks: usize,
    },
    /// The enlargement column/row has a nonzero entry outside its block.
    SupportOutsideBlock {
        index: usize,
    },
}

impl fmt::Display for MoveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveError::SizeMismatch { expected, got } => {
                write!(f, "expected dimension {expected}, got {got}")
            }
            MoveError::NotBlockDiagonal { row, col } => write!(
                f,
                "matrix is not block diagonal: nonzero entry at ({}, {})",
                row + 1,
                col + 1
            ),
            MoveError::BlockNotUnimodular { block, det } => {
                write!(f, "block {} has determinant {det}, expected ±1", block + 1)
            }
            MoveError::BlockOutOfRange { block, blocks } => {
                write!(f, "block index {} out of range 1..={blocks}", block + 1)
            }
            MoveError::SupportOutsideBlock { index } => write!(
                f,
                "enlargement vector has support outside the enlarged block at index {}",
                index + 1
            ),
        }
    }
}

/// `P A P^t` for a block-diagonal `P` with unimodular diagonal blocks.
/// This preserves validity and the Alexander polynomial.
pub fn block_congruence(a: &SeifertMatrix, p: &IntMatrix) -> Result<SeifertMatrix, MoveError> {
    let n = a.dim();
    if !p.is_square() || p.rows() != n {
        return Err(MoveError::SizeMismatch {
            expected: n,
            got: p.rows(),
        });
    }
    for r in 0..n {
        for c in 0..n {
            if a.block_of_index(r) != a.block_of_index(c) && !p.at(r, c).is_zero() {
                return Err(MoveError::NotBlockDiagonal { row: r, col: c });
            }
        }
    }
    for b in 0..a.num_blocks() {
        let o = a.block_offset(b);
        let idx: Vec<usize> = (o..o + a.sizes()[b]).collect();
        let det = det_int(&p.submatrix(&idx, &idx));
        if !det.is_one() && det != BigInt::from(-1) {
            return Err(MoveError::BlockNotUnimodular { block: b, det });
        }
    }
    let conj = congruence(a.matrix(), p);
    Ok(validate_seifert(conj, a.sizes().to_vec())
        .expect("unimodular block congruence preserves the Seifert conditions"))
}

/// Which side the enlargement pattern attaches to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnlargeKind {
    /// Appends `[ξ, x; 0, x->1; 0, 0]`-shaped columns: new column pair
    /// carries `ξ` and the `(x, 1; 0, 0)` corner.
    Column,
    /// The transposed placement: new row pair carries `ξ^t` and the
    /// `(x, 0; 1, 0)` corner.
    Row,
}

/// Enlarges block `k` (0-based) by two indices in the exact pattern that
/// [`reduce_once`] can undo. `xi` must have length `dim` and support inside
/// block `k`. Keeps the Alexander polynomial unchanged.
pub fn enlarge(
    a: &SeifertMatrix,
    block: usize,
    xi: &[BigInt],
    x: &BigInt,
    kind: EnlargeKind,
) -> Result<SeifertMatrix, MoveError> {
    let n = a.dim();
    let m = a.num_blocks();
    if block >= m {
        return Err(MoveError::BlockOutOfRange { block, blocks: m });
    }
    if xi.len() != n {
        return Err(MoveError::SizeMismatch {
            expected: n,
            got: xi.len(),
        });
    }
    if let Some(bad) = (0..n).find(|&i| !xi[i].is_zero() && a.block_of_index(i) != block) {
        return Err(MoveError::SupportOutsideBlock { index: bad });
    }
    // the two new indices go at the end of block `block`
    let insert = a.block_offset(block) + a.sizes()[block];
    let old_of = |i: usize| -> Option<usize> {
        if i < insert {
            Some(i)
        } else if i >= insert + 2 {
            Some(i - 2)
        } else {
            None
        }
    };
    let u = insert;
    let z = insert + 1;
    let big = IntMatrix::from_fn(n + 2, n + 2, |r, c| match (old_of(r), old_of(c)) {
        (Some(i), Some(j)) => a.matrix().at(i, j).clone(),
        (Some(i), None) => match kind {
            EnlargeKind::Column if c == u => xi[i].clone(),
            _ => BigInt::zero(),
        },
        (None, Some(j)) => match kind {
            EnlargeKind::Row if r == u => xi[j].clone(),
            _ => BigInt::zero(),
        },
        (None, None) => {
            if r == u && c == u {
                x.clone()
            } else {
                match kind {
                    EnlargeKind::Column if r == u && c == z => BigInt::one(),
                    EnlargeKind::Row if r == z && c == u => BigInt::one(),
                    _ => BigInt::zero(),
                }
            }
        }
    });
    let mut sizes = a.sizes().to_vec();
    sizes[block] += 2;
    Ok(validate_seifert(big, sizes).expect("enlargement preserves the Seifert conditions"))
}

/// A failed maximal-rank condition on one block row or column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankDeficiency {
    pub block: usize,
    pub kind: RankKind,
    pub rank: usize,
    pub expected: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankKind {
    BlockRow,
    BlockColumn,
}

impl fmt::Display for RankDeficiency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            RankKind::BlockRow => "block row",
            RankKind::BlockColumn => "block column",
        };
        write!(
            f,
            "{what} {} has rank {} over Q, expected {}",
            self.block + 1,
            self.rank,
            self.expected
        )
    }
}

/// All failed rank conditions; empty means irreducible.
pub fn rank_deficiencies(a: &SeifertMatrix) -> Vec<RankDeficiency> {
    let mut out = Vec::new();
    for b in 0..a.num_blocks() {
        let expected = a.sizes()[b];
        let row_rank = rank_rational(&a.block_row(b));
        if row_rank != expected {
            out.push(RankDeficiency {
                block: b,
                kind: RankKind::BlockRow,
                rank: row_rank,
                expected,
            });
        }
        let col_rank = rank_rational(&a.block_col(b));
        if col_rank != expected {
            out.push(RankDeficiency {
                block: b,
                kind: RankKind::BlockColumn,
                rank: col_rank,
                expected,
            });
        }
    }
    out
}

/// A Seifert matrix is irreducible exactly when every block row and block
/// column has maximal rank over the rationals.
pub fn is_irreducible(a: &SeifertMatrix) -> bool {
    rank_deficiencies(a).is_empty()
}

/// Result of one reduction attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReduceOutcome {
    /// Two indices were removed; the Alexander polynomial is unchanged.
    Reduced(SeifertMatrix),
    /// No enlargement pattern is present. The deficiency list is the rank
    /// witness: empty means the matrix is certifiably irreducible, nonempty
    /// means it is reducible in principle but not by the integral pattern
    /// this routine recognizes.
    NoReductionFound { deficiencies: Vec<RankDeficiency> },
}

/// Searches for the exact enlargement pattern, in deterministic order
/// (column kind first, then by block, then by index pair), and removes the
/// first occurrence.
pub fn reduce_once(a: &SeifertMatrix) -> ReduceOutcome {
    let n = a.dim();
    let mat = a.matrix();
    for kind in [EnlargeKind::Column, EnlargeKind::Row] {
        for u in 0..n {
            for z in 0..n {
                if u == z || a.block_of_index(u) != a.block_of_index(z) {
                    continue;
                }
                if matches_pattern(a, u, z, kind) {
                    let keep: Vec<usize> = (0..n).filter(|&i| i != u && i != z).collect();
                    let reduced = mat.submatrix(&keep, &keep);
                    let mut sizes = a.sizes().to_vec();
                    sizes[a.block_of_index(u)] -= 2;
                    let reduced = validate_seifert(reduced, sizes)
                        .expect("undoing an enlargement preserves the Seifert conditions");
                    return ReduceOutcome::Reduced(reduced);
                }
            }
        }
    }
    ReduceOutcome::NoReductionFound {
        deficiencies: rank_deficiencies(a),
    }
}

fn matches_pattern(a: &SeifertMatrix, u: usize, z: usize, kind: EnlargeKind) -> bool {
    let n = a.dim();
    let mat = a.matrix();
    let block = a.block_of_index(u);
    match kind {
        EnlargeKind::Column => {
            // row z all zero; column z zero except [u,z] = 1;
            // row u zero outside {u, z}; column u supported in the block
            (0..n).all(|j| mat.at(z, j).is_zero())
                && mat.at(u, z).is_one()
                && (0..n).all(|i| i == u || mat.at(i, z).is_zero())
                && (0..n).all(|j| j == u || j == z || mat.at(u, j).is_zero())
                && (0..n).all(|i| {
                    i == u || i == z || mat.at(i, u).is_zero() || a.block_of_index(i) == block
                })
        }
        EnlargeKind::Row => {
            (0..n).all(|i| mat.at(i, z).is_zero())
                && mat.at(z, u).is_one()
                && (0..n).all(|j| j == u || mat.at(z, j).is_zero())
                && (0..n).all(|i| i == u || i == z || mat.at(i, u).is_zero())
                && (0..n).all(|j| {
                    j == u || j == z || mat.at(u, j).is_zero() || a.block_of_index(j) == block
                })
        }
    }
}

/// Verdict of a comparison. `Inconclusive` never claims equivalence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    NotEquivalent,
    Inconclusive,
}

/// One sound reason two matrices cannot be S-equivalent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    /// Different variable counts: the matrices live over different rings.
    VariableCountMismatch { left: usize, right: usize },
    /// S-equivalent matrices have equal Alexander polynomials.
    DeltaMismatch {
        left: LaurentPoly,
        right: LaurentPoly,
    },
    /// Irreducible S-equivalent matrices are rationally block congruent,
    /// hence have equal block sizes.
    BlockSizeMismatch {
        left: Vec<usize>,
        right: Vec<usize>,
    },
    /// Under rational block congruence, `det(A_ii)` changes by a positive
    /// rational square: zero cannot become nonzero...
    BlockDetZeroPattern {
        block: usize,
        left: BigInt,
        right: BigInt,
    },
    /// ...the sign cannot change...
    BlockDetSign {
        block: usize,
        left: BigInt,
        right: BigInt,
    },
    /// ...and the product of the two determinants must be a rational
    /// square, decided exactly on the integers.
    BlockDetSquareClass {
        block: usize,
        left: BigInt,
        right: BigInt,
    },
}

impl Reason {
    /// Stable machine-readable code for serialized reports.
    pub fn code(&self) -> &'static str {
        match self {
            Reason::VariableCountMismatch { .. } => "variable_count_mismatch",
            Reason::DeltaMismatch { .. } => "delta_mismatch",
            Reason::BlockSizeMismatch { .. } => "block_size_mismatch",
            Reason::BlockDetZeroPattern { .. } => "block_det_zero_pattern",
            Reason::BlockDetSign { .. } => "block_det_sign",
            Reason::BlockDetSquareClass { .. } => "block_det_square_class",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::VariableCountMismatch { left, right } => {
                write!(f, "variable counts differ: {left} vs {right}")
            }
            Reason::DeltaMismatch { left, right } => {
                write!(f, "Alexander polynomials differ: {left} vs {right}")
            }
            Reason::BlockSizeMismatch { left, right } => {
                write!(f, "both irreducible but block sizes differ: {left:?} vs {right:?}")
            }
            Reason::BlockDetZeroPattern { block, left, right } => write!(
                f,
                "block {} determinants {left} vs {right}: exactly one is zero",
                block + 1
            ),
            Reason::BlockDetSign { block, left, right } => write!(
                f,
                "block {} determinants {left} vs {right} have opposite signs",
                block + 1
            ),
            Reason::BlockDetSquareClass { block, left, right } => write!(
                f,
                "block {} determinants {left} vs {right} lie in different rational square classes",
                block + 1
            ),
        }
    }
}

/// Structured outcome of [`compare`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub reasons: Vec<Reason>,
    /// `Some(equal?)` when the Alexander polynomials were compared.
    pub deltas_equal: Option<bool>,
    /// Irreducibility of the two inputs, when the variable counts matched.
    pub irreducible: Option<(bool, bool)>,
    /// Diagonal block determinants of both inputs, when the block
    /// structures matched.
    pub block_dets: Option<(Vec<BigInt>, Vec<BigInt>)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompareMode {
    Full,
    ObstructionOnly,
}

/// Runs the obstruction stages. In `Full` mode the Alexander polynomials
/// are recomputed and compared first; `ObstructionOnly` skips them.
pub fn compare(a1: &SeifertMatrix, a2: &SeifertMatrix, mode: CompareMode) -> ObstructionReport {
    let deltas = match mode {
        CompareMode::Full => Some((alexander(a1), alexander(a2))),
        CompareMode::ObstructionOnly => None,
    };
    compare_with_deltas(a1, a2, deltas.as_ref().map(|(l, r)| (l, r)))
}

/// Like [`compare`], but with the Alexander polynomials supplied by the
/// caller (or skipped entirely with `None`).
pub fn compare_with_deltas(
    a1: &SeifertMatrix,
    a2: &SeifertMatrix,
    deltas: Option<(&LaurentPoly, &LaurentPoly)>,
) -> ObstructionReport {
    let mut reasons = Vec::new();
    if a1.num_blocks() != a2.num_blocks() {
        reasons.push(Reason::VariableCountMismatch {
            left: a1.num_blocks(),
            right: a2.num_blocks(),
        });
        return ObstructionReport {
            verdict: Verdict::NotEquivalent,
            reasons,
            deltas_equal: None,
            irreducible: None,
            block_dets: None,
        };
    }
    let deltas_equal = deltas.map(|(l, r)| {
        if l != r {
            reasons.push(Reason::DeltaMismatch {
                left: l.clone(),
                right: r.clone(),
            });
        }
        l == r
    });
    let irr = (is_irreducible(a1), is_irreducible(a2));
    let both_irreducible = irr.0 && irr.1;
    let mut block_dets = None;
    if a1.sizes() == a2.sizes() {
        let d1: Vec<BigInt> = (0..a1.num_blocks()).map(|b| det_int(&a1.block(b, b))).collect();
        let d2: Vec<BigInt> = (0..a2.num_blocks()).map(|b| det_int(&a2.block(b, b))).collect();
        if both_irreducible {
            for (b, (l, r)) in d1.iter().zip(&d2).enumerate() {
                if let Some(reason) = block_det_obstruction(b, l, r) {
                    reasons.push(reason);
                }
            }
        }
        block_dets = Some((d1, d2));
    } else if both_irreducible {
        reasons.push(Reason::BlockSizeMismatch {
            left: a1.sizes().to_vec(),
            right: a2.sizes().to_vec(),
        });
    }
    ObstructionReport {
        verdict: if reasons.is_empty() {
            Verdict::Inconclusive
        } else {
            Verdict::NotEquivalent
        },
        reasons,
        deltas_equal,
        irreducible: Some(irr),
        block_dets,
    }
}

fn block_det_obstruction(block: usize, left: &BigInt, right: &BigInt) -> Option<Reason> {
    if left.is_zero() != right.is_zero() {
        return Some(Reason::BlockDetZeroPattern {
            block,
            left: left.clone(),
            right: right.clone(),
        });
    }
    if left.is_zero() {
        return None;
    }
    if left.is_negative() != right.is_negative() {
        return Some(Reason::BlockDetSign {
            block,
            left: left.clone(),
            right: right.clone(),
        });
    }
    let product = left * right;
    let root = product.sqrt();
    if &root * &root != product {
        return Some(Reason::BlockDetSquareClass {
            block,
            left: left.clone(),
            right: right.clone(),
        });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytext::parse_poly;

    fn seifert(rows: &[&[i64]], sizes: &[usize]) -> SeifertMatrix {
        validate_seifert(IntMatrix::from_i64_rows(rows), sizes.to_vec()).unwrap()
    }

    fn worked_4x4() -> SeifertMatrix {
        seifert(
            &[&[3, 0, 3, 0], &[-1, 1, 0, 1], &[3, 0, 3, 1], &[0, 1, 0, 1]],
            &[2, 2],
        )
    }

    #[test]
    fn block_congruence_identity() {
        let a = worked_4x4();
        let same = block_congruence(&a, &IntMatrix::identity(4)).unwrap();
        assert_eq!(&same, &a);
    }

    #[test]
    fn block_congruence_rejects_pair_swap() {
        let a = worked_4x4();
        let swap = IntMatrix::from_i64_rows(&[
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
        ]);
        assert_eq!(
            block_congruence(&a, &swap),
            Err(MoveError::NotBlockDiagonal { row: 0, col: 2 })
        );
    }

    #[test]
    fn block_congruence_rejects_non_unimodular_block() {
        let a = worked_4x4();
        let p = IntMatrix::from_i64_rows(&[
            &[2, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
        ]);
        assert_eq!(
            block_congruence(&a, &p),
            Err(MoveError::BlockNotUnimodular {
                block: 0,
                det: 2.into()
            })
        );
    }

    #[test]
    fn block_congruence_preserves_delta() {
        let a = worked_4x4();
        let delta = alexander(&a);
        let p = IntMatrix::from_i64_rows(&[
            &[1, 2, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, -3, -1],
        ]);
        let b = block_congruence(&a, &p).unwrap();
        assert_eq!(alexander(&b), delta);
    }

    #[test]
    fn smallest_enlargement() {
        let empty = validate_seifert(IntMatrix::zero(0, 0), vec![0]).unwrap();
        let e = enlarge(&empty, 0, &[], &BigInt::zero(), EnlargeKind::Column).unwrap();
        assert_eq!(e.matrix(), &IntMatrix::from_i64_rows(&[&[0, 1], &[0, 0]]));
        assert_eq!(e.sizes(), &[2]);
        assert_eq!(alexander(&e), parse_poly("1", 1).unwrap());
    }

    #[test]
    fn enlarge_trefoil_preserves_delta() {
        let trefoil = seifert(&[&[1, 0], &[-1, 1]], &[2]);
        let delta = alexander(&trefoil);
        for kind in [EnlargeKind::Column, EnlargeKind::Row] {
            let e = enlarge(
                &trefoil,
                0,
                &[BigInt::zero(), BigInt::zero()],
                &BigInt::zero(),
                kind,
            )
            .unwrap();
            assert_eq!(e.dim(), 4);
            assert_eq!(alexander(&e), delta);
            assert!(!is_irreducible(&e));
        }
    }

    #[test]
    fn enlarge_rejects_outside_support() {
        let a = worked_4x4();
        let xi = [
            BigInt::from(1),
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero(),
        ];
        assert_eq!(
            enlarge(&a, 1, &xi, &BigInt::zero(), EnlargeKind::Column),
            Err(MoveError::SupportOutsideBlock { index: 0 })
        );
    }

    #[test]
    fn reduce_undoes_enlarge() {
        let a = worked_4x4();
        for kind in [EnlargeKind::Column, EnlargeKind::Row] {
            for block in 0..2 {
                let mut xi = vec![BigInt::zero(); 4];
                let o = a.block_offset(block);
                xi[o] = BigInt::from(2);
                xi[o + 1] = BigInt::from(-1);
                let big = enlarge(&a, block, &xi, &BigInt::from(7), kind).unwrap();
                assert_eq!(alexander(&big), alexander(&a));
                match reduce_once(&big) {
                    ReduceOutcome::Reduced(r) => assert_eq!(&r, &a),
                    other => panic!("expected a reduction, got {other:?}"),
                }
            }
        }
    }

    #[test]
    fn reduce_on_irreducible_reports_empty_witness() {
        let a = worked_4x4();
        assert!(is_irreducible(&a));
        assert_eq!(
            reduce_once(&a),
            ReduceOutcome::NoReductionFound {
                deficiencies: vec![]
            }
        );
    }

    #[test]
    fn reduce_on_empty() {
        let empty = validate_seifert(IntMatrix::zero(0, 0), vec![]).unwrap();
        assert!(is_irreducible(&empty));
        assert_eq!(
            reduce_once(&empty),
            ReduceOutcome::NoReductionFound {
                deficiencies: vec![]
            }
        );
    }

    #[test]
    fn printed_fixture_obstruction() {
        // transcribed example matrices, w = 3
        let a1 = seifert(
            &[&[3, 1, 3, 0], &[0, 1, 1, 1], &[3, 1, 0, 1], &[0, 1, 0, 1]],
            &[2, 2],
        );
        let a2 = seifert(
            &[&[0, 1, 3, 1], &[0, 1, 0, 1], &[3, 0, 3, 1], &[1, 1, 0, 1]],
            &[2, 2],
        );
        let report = compare(&a1, &a2, CompareMode::ObstructionOnly);
        assert_eq!(report.verdict, Verdict::NotEquivalent);
        assert_eq!(report.irreducible, Some((true, true)));
        let (d1, d2) = report.block_dets.clone().unwrap();
        assert_eq!(d1[0], 3.into());
        assert_eq!(d2[0], 0.into());
        assert!(report
            .reasons
            .iter()
            .any(|r| matches!(r, Reason::BlockDetZeroPattern { block: 0, .. })));
    }

    #[test]
    fn self_comparison_is_inconclusive() {
        let a = worked_4x4();
        let report = compare(&a, &a, CompareMode::Full);
        assert_eq!(report.verdict, Verdict::Inconclusive);
        assert!(report.reasons.is_empty());
        assert_eq!(report.deltas_equal, Some(true));
    }

    #[test]
    fn both_built_paths_compare_inconclusive() {
        // the two matrices this crate builds for 3(t1t2 + 1/(t1t2)) - 5
        let a1 = worked_4x4();
        let a2 = seifert(
            &[&[3, 1, 3, 0], &[0, 1, 0, 1], &[3, 0, 3, 0], &[0, 1, -1, 1]],
            &[2, 2],
        );
        let report = compare(&a1, &a2, CompareMode::Full);
        assert_eq!(report.deltas_equal, Some(true));
        assert_eq!(report.irreducible, Some((true, true)));
        let (d1, d2) = report.block_dets.clone().unwrap();
        assert_eq!(d1, vec![BigInt::from(3), BigInt::from(3)]);
        assert_eq!(d2, vec![BigInt::from(3), BigInt::from(3)]);
        assert_eq!(report.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn delta_mismatch_is_sound_reason() {
        let a = worked_4x4();
        let trefoil_like = seifert(
            &[&[1, 0, 0, 0], &[-1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, -1, 1]],
            &[2, 2],
        );
        let report = compare(&a, &trefoil_like, CompareMode::Full);
        assert_eq!(report.verdict, Verdict::NotEquivalent);
        assert!(matches!(report.reasons[0], Reason::DeltaMismatch { .. }));
    }

    #[test]
    fn square_class_obstruction() {
        // det 2 vs det 3: same sign, product 6 not a square
        let a = seifert(&[&[2, 1], &[0, 1]], &[2]);
        let b = seifert(&[&[3, 1], &[0, 1]], &[2]);
        assert!(is_irreducible(&a) && is_irreducible(&b));
        let report = compare(&a, &b, CompareMode::ObstructionOnly);
        assert_eq!(report.verdict, Verdict::NotEquivalent);
        assert!(matches!(
            report.reasons[0],
            Reason::BlockDetSquareClass { block: 0, .. }
        ));

        // det 2 vs det 8: product 16 = 4^2, no obstruction
        let c = seifert(&[&[8, 1], &[0, 1]], &[2]);
        let report = compare(&a, &c, CompareMode::ObstructionOnly);
        assert_eq!(report.verdict, Verdict::Inconclusive);

        // det 2 vs det -2: sign obstruction
        let d = seifert(&[&[-2, 1], &[0, 1]], &[2]);
        let report = compare(&a, &d, CompareMode::ObstructionOnly);
        assert!(matches!(
            report.reasons[0],
            Reason::BlockDetSign { block: 0, .. }
        ));
    }

    #[test]
    fn size_mismatch_only_sound_when_both_irreducible() {
        let trefoil = seifert(&[&[1, 0], &[-1, 1]], &[2]);
        let delta = alexander(&trefoil);
        let enlarged = enlarge(
            &trefoil,
            0,
            &[BigInt::zero(), BigInt::zero()],
            &BigInt::zero(),
            EnlargeKind::Column,
        )
        .unwrap();
        assert_eq!(alexander(&enlarged), delta);
        // same polynomial, different sizes, one side reducible: must stay
        // inconclusive, the pair IS S-equivalent
        let report = compare(&trefoil, &enlarged, CompareMode::Full);
        assert_eq!(report.verdict, Verdict::Inconclusive);
        assert_eq!(report.irreducible, Some((true, false)));
    }

    #[test]
    fn variable_count_mismatch() {
        let knot = seifert(&[&[1, 0], &[-1, 1]], &[2]);
        let link = worked_4x4();
        let report = compare(&knot, &link, CompareMode::ObstructionOnly);
        assert_eq!(report.verdict, Verdict::NotEquivalent);
        assert_eq!(report.reasons[0].code(), "variable_count_mismatch");
    }
}
