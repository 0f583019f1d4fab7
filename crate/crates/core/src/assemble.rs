//! Final assembly: sort the step pairs by component with a permutation `P`
//! and conjugate the ladder matrix into a boundary link Seifert matrix
//! `A = P B P^t` whose Alexander polynomial is the input.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::ladder::build_b;
use crate::laurent::{ExponentVector, LaurentPoly};
use crate::matrix::{congruence, det_int, IntMatrix, PolyMatrix};
use crate::path::{find_path, make_plan, BuildPlan, LatticePath, PathStrategy, PlanError};
use crate::seifert::{alexander, decompose, validate_seifert, DecomposeError, SeifertMatrix};

/// A fully assembled and verified construction.
#[derive(Clone, Debug)]
pub struct Assembly {
    pub plan: BuildPlan,
    /// Pair permutation: `sigma[k]` is the original pair index (0-based)
    /// that lands in sorted position `k`.
    pub sigma: Vec<usize>,
    /// The permutation matrix acting on coordinate pairs.
    pub permutation: IntMatrix,
    pub seifert: SeifertMatrix,
    /// `Δ(A)`, recomputed from the assembled matrix by an actual
    /// determinant; equal to the input polynomial by construction.
    pub delta: LaurentPoly,
}

impl Assembly {
    pub fn sizes(&self) -> &[usize] {
        self.seifert.sizes()
    }
}

/// Errors of the end-to-end pipeline; all are input errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildError {
    NotAdmissible(DecomposeError),
    Plan(PlanError),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::NotAdmissible(e) => write!(f, "{e}"),
            BuildError::Plan(e) => write!(f, "{e}"),
        }
    }
}

impl From<DecomposeError> for BuildError {
    fn from(e: DecomposeError) -> Self {
        BuildError::NotAdmissible(e)
    }
}

impl From<PlanError> for BuildError {
    fn from(e: PlanError) -> Self {
        BuildError::Plan(e)
    }
}

/// The stable sort of step indices by component, as a pair permutation.
/// Returns `sigma` (sorted position -> original pair) and the `2l x 2l`
/// permutation matrix `P` with `P A P^t` relabeling pair `sigma[k]` to
/// position `k`. `P` satisfies `P^t = P^{-1}`, `det(P) = 1` and sorts the
/// twisted diagonal by component; all three are checked.
pub fn permutation_from_plan(plan: &BuildPlan) -> (Vec<usize>, IntMatrix) {
    let components: Vec<usize> = plan.path.steps().iter().map(|s| s.component).collect();
    let l = components.len();
    let mut sigma: Vec<usize> = (0..l).collect();
    sigma.sort_by_key(|&i| (components[i], i));
    let mut p = IntMatrix::zero(2 * l, 2 * l);
    for (k, &orig) in sigma.iter().enumerate() {
        *p.at_mut(2 * k, 2 * orig) = 1.into();
        *p.at_mut(2 * k + 1, 2 * orig + 1) = 1.into();
    }

    assert_eq!(p.mul(&p.transpose()), IntMatrix::identity(2 * l));
    assert!(det_int(&p).is_one(), "pair permutations have determinant 1");
    let m = plan.path.num_vars();
    let unsorted = diag_of_vars(&components, m);
    let sorted_components: Vec<usize> = sigma.iter().map(|&i| components[i]).collect();
    let sorted = diag_of_vars(&sorted_components, m);
    let conjugated = PolyMatrix::from_fn(2 * l, 2 * l, m, |r, c| {
        // P D P^t for diagonal D only permutes the diagonal
        let (pr, pc) = (2 * sigma[r / 2] + r % 2, 2 * sigma[c / 2] + c % 2);
        unsorted.at(pr, pc).clone()
    });
    assert_eq!(conjugated, sorted, "permutation must sort the twisted diagonal");

    (sigma, p)
}

fn diag_of_vars(components: &[usize], num_vars: usize) -> PolyMatrix {
    let l = components.len();
    PolyMatrix::from_fn(2 * l, 2 * l, num_vars, |r, c| {
        if r == c {
            LaurentPoly::var(num_vars, components[r / 2])
        } else {
            LaurentPoly::zero(num_vars)
        }
    })
}

/// Conjugates the ladder matrix into block-sorted form and verifies the
/// whole construction: the result validates as a Seifert matrix and its
/// Alexander polynomial equals the polynomial the plan realizes. Both
/// checks can only fail on an implementation bug, so they panic.
pub fn build_seifert_from_plan(plan: BuildPlan) -> Assembly {
    let m = plan.path.num_vars();
    let b = build_b(&plan.ladder_params());
    let (sigma, permutation) = permutation_from_plan(&plan);
    let a = congruence(&b, &permutation);
    let mut sizes = vec![0usize; m];
    for s in plan.path.steps() {
        sizes[s.component] += 2;
    }
    let seifert = match validate_seifert(a, sizes) {
        Ok(s) => s,
        Err(violations) => panic!("assembled matrix failed validation: {violations:?}"),
    };
    let delta = alexander(&seifert);
    assert_eq!(
        delta,
        plan.realized_delta(),
        "assembled matrix must realize the planned polynomial"
    );
    Assembly {
        plan,
        sigma,
        permutation,
        seifert,
        delta,
    }
}

/// The end-to-end pipeline: decompose, pick a path (or take the override),
/// plan, assemble. The returned assembly's `delta` equals the input
/// exactly.
pub fn build(
    delta: &LaurentPoly,
    strategy: PathStrategy,
    path_override: Option<LatticePath>,
) -> Result<Assembly, BuildError> {
    let pres = decompose(delta)?;
    let targets: Vec<ExponentVector> = pres.pairs.iter().map(|(e, _)| e.clone()).collect();
    let path = match path_override {
        Some(p) => p,
        None => find_path(pres.num_vars, &targets, strategy),
    };
    let plan = make_plan(&path, &pres)?;
    let assembly = build_seifert_from_plan(plan);
    assert_eq!(&assembly.delta, delta, "roundtrip must be exact");
    Ok(assembly)
}
