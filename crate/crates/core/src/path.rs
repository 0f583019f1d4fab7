//! Lattice paths through the coefficient exponents of an admissible
//! polynomial, and the build plans (`w`, `v`, hit times) derived from them.
//!
//! A path starts at the origin, moves by unit coordinate steps and must
//! visit, for every coefficient pair `{α, -α}`, one of its two
//! representatives. Paths are normalized so the first step has positive
//! sign; since each coefficient is attached to the pair, negating a whole
//! path (or a single target's representative) never changes the polynomial
//! being realized.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ladder::{LadderParams, Sign};
use crate::laurent::{ExponentVector, LaurentPoly};
use crate::seifert::SymmetricPresentation;

/// One unit step: which coordinate moves (0-based) and in which direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub component: usize,
    pub sign: Sign,
}

impl Step {
    pub fn new(component: usize, sign: Sign) -> Self {
        Step { component, sign }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}t{}", self.sign, self.component + 1)
    }
}

/// A unit-step lattice path from the origin in `Z^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePath {
    num_vars: usize,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(num_vars: usize, steps: Vec<Step>) -> Self {
        assert!(
            steps.iter().all(|s| s.component < num_vars),
            "step component out of range"
        );
        LatticePath { num_vars, steps }
    }

    pub fn empty(num_vars: usize) -> Self {
        Self::new(num_vars, Vec::new())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// First step has positive sign (or no steps at all).
    pub fn is_normalized(&self) -> bool {
        self.steps.first().map_or(true, |s| s.sign == Sign::Plus)
    }

    /// The mirrored path visiting `-p(t)` for every `t`.
    pub fn negated(&self) -> LatticePath {
        LatticePath {
            num_vars: self.num_vars,
            steps: self
                .steps
                .iter()
                .map(|s| Step::new(s.component, s.sign.flipped()))
                .collect(),
        }
    }

    /// Positions `p(0), p(1), …, p(l)`.
    pub fn positions(&self) -> Vec<ExponentVector> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut pos = ExponentVector::zero(self.num_vars);
        out.push(pos.clone());
        for s in &self.steps {
            pos.0[s.component] += s.sign.to_i64();
            out.push(pos.clone());
        }
        out
    }

    /// First time `t >= 1` at which the path sits on `target` or `-target`.
    pub fn first_visit(&self, target: &ExponentVector) -> Option<usize> {
        let neg = target.negated();
        self.positions()
            .into_iter()
            .enumerate()
            .skip(1)
            .find(|(_, p)| *p == *target || *p == neg)
            .map(|(t, _)| t)
    }

    /// Checks the three path conditions: starts at the origin (built in),
    /// unit steps (built in), and visits a representative of every target.
    pub fn visits_all(&self, targets: &[ExponentVector]) -> bool {
        targets.iter().all(|t| self.first_visit(t).is_some())
    }

    /// The comma-separated text form, e.g. `+t1,+t2,-t1`.
    pub fn to_text(&self) -> alloc::string::String {
        use alloc::string::ToString;
        let parts: Vec<alloc::string::String> = self.steps.iter().map(|s| s.to_string()).collect();
        parts.join(",")
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// How [`find_path`] chooses the visiting order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathStrategy {
    /// Manhattan segments between consecutive targets in input order,
    /// axes in index order, signs toward the goal.
    Sequential,
    /// Exhaustive search over visit orders and per-target negations for a
    /// minimum-length path; ties broken by lexicographic step sequence.
    /// Beyond [`SHORTEST_EXHAUSTIVE_LIMIT`] targets the search degrades to
    /// a deterministic nearest-representative greedy order.
    Shortest,
}

/// Above this many targets, `Shortest` stops being exhaustive.
pub const SHORTEST_EXHAUSTIVE_LIMIT: usize = 8;

/// Appends the canonical Manhattan segment from `pos` to `goal`.
fn push_segment(steps: &mut Vec<Step>, pos: &mut ExponentVector, goal: &ExponentVector) {
    for axis in 0..goal.len() {
        let delta = goal.0[axis] - pos.0[axis];
        let sign = if delta >= 0 { Sign::Plus } else { Sign::Minus };
        for _ in 0..delta.unsigned_abs() {
            steps.push(Step::new(axis, sign));
        }
        pos.0[axis] = goal.0[axis];
    }
}

fn path_through(num_vars: usize, waypoints: &[ExponentVector]) -> LatticePath {
    let mut steps = Vec::new();
    let mut pos = ExponentVector::zero(num_vars);
    for goal in waypoints {
        push_segment(&mut steps, &mut pos, goal);
    }
    normalize(LatticePath::new(num_vars, steps))
}

fn normalize(path: LatticePath) -> LatticePath {
    if path.is_normalized() {
        path
    } else {
        path.negated()
    }
}

fn total_length(waypoints: &[ExponentVector], num_vars: usize) -> u64 {
    let mut pos = ExponentVector::zero(num_vars);
    let mut total = 0;
    for w in waypoints {
        total += pos.manhattan(w);
        pos = w.clone();
    }
    total
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out.sort();
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Constructs a path visiting a representative of every target. A path
/// always exists, so this cannot fail.
pub fn find_path(num_vars: usize, targets: &[ExponentVector], strategy: PathStrategy) -> LatticePath {
    assert!(
        targets.iter().all(|t| t.len() == num_vars),
        "target arity mismatch"
    );
    if targets.is_empty() {
        return LatticePath::empty(num_vars);
    }
    match strategy {
        PathStrategy::Sequential => path_through(num_vars, targets),
        PathStrategy::Shortest if targets.len() <= SHORTEST_EXHAUSTIVE_LIMIT => {
            let r = targets.len();
            let mut best: Option<(u64, LatticePath)> = None;
            for order in permutations(r) {
                for mask in 0..(1u32 << r) {
                    let waypoints: Vec<ExponentVector> = order
                        .iter()
                        .enumerate()
                        .map(|(slot, &i)| {
                            if mask & (1 << slot) != 0 {
                                targets[i].negated()
                            } else {
                                targets[i].clone()
                            }
                        })
                        .collect();
                    let len = total_length(&waypoints, num_vars);
                    if best.as_ref().is_some_and(|(bl, _)| *bl < len) {
                        continue;
                    }
                    // path_through normalizes, so every candidate has a
                    // positive first step
                    let path = path_through(num_vars, &waypoints);
                    let better = match &best {
                        None => true,
                        Some((bl, bp)) => {
                            len < *bl || (len == *bl && path.steps() < bp.steps())
                        }
                    };
                    if better {
                        best = Some((len, path));
                    }
                }
            }
            best.expect("some normalized candidate always exists").1
        }
        PathStrategy::Shortest => {
            // deterministic nearest-representative greedy
            let mut remaining: Vec<ExponentVector> = targets.to_vec();
            let mut waypoints = Vec::with_capacity(targets.len());
            let mut pos = ExponentVector::zero(num_vars);
            while !remaining.is_empty() {
                let (idx, rep) = remaining
                    .iter()
                    .enumerate()
                    .map(|(i, t)| {
                        let d_pos = pos.manhattan(t);
                        let d_neg = pos.manhattan(&t.negated());
                        if d_neg < d_pos {
                            (d_neg, i, t.negated())
                        } else {
                            (d_pos, i, t.clone())
                        }
                    })
                    .min_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)))
                    .map(|(_, i, rep)| (i, rep))
                    .expect("nonempty");
                pos = rep.clone();
                waypoints.push(rep);
                remaining.remove(idx);
            }
            path_through(num_vars, &waypoints)
        }
    }
}

/// The data the assembler needs: the path plus the weight and partial-sum
/// sequences `w` and `v`, with the step index that realizes each target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildPlan {
    pub path: LatticePath,
    /// `w_j`: the coefficient placed at step `j` (1-based index `j-1` here).
    pub w: Vec<BigInt>,
    /// `v_i = Σ_{j>=i} w_j`.
    pub v: Vec<BigInt>,
    /// Canonical target exponent -> 1-based step index of its first visit.
    pub hit_times: BTreeMap<ExponentVector, usize>,
}

/// Failure modes of planning and enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanError {
    /// The supplied path never visits either representative of a target.
    TargetMissed { target: ExponentVector },
}

impl fmt::Display for PlanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanError::TargetMissed { target } => {
                write!(f, "path misses target exponent {:?}", target.0)
            }
        }
    }
}

/// Places each coefficient at its target's first visit and forms the
/// suffix sums.
pub fn make_plan(path: &LatticePath, pres: &SymmetricPresentation) -> Result<BuildPlan, PlanError> {
    assert_eq!(path.num_vars(), pres.num_vars, "plan arity mismatch");
    let l = path.len();
    let mut w = vec![BigInt::zero(); l];
    let mut hit_times = BTreeMap::new();
    for (alpha, c) in &pres.pairs {
        let t = path
            .first_visit(alpha)
            .ok_or_else(|| PlanError::TargetMissed {
                target: alpha.clone(),
            })?;
        w[t - 1] = c.clone();
        hit_times.insert(alpha.clone(), t);
    }
    let mut v = vec![BigInt::zero(); l];
    let mut acc = BigInt::zero();
    for j in (0..l).rev() {
        acc += &w[j];
        v[j] = acc.clone();
    }
    Ok(BuildPlan {
        path: path.clone(),
        w,
        v,
        hit_times,
    })
}

impl BuildPlan {
    /// The ladder parameters `(v_1..v_l, ε_2..ε_l)` this plan induces.
    pub fn ladder_params(&self) -> LadderParams {
        let eps: Vec<Sign> = self.path.steps().iter().skip(1).map(|s| s.sign).collect();
        LadderParams::new(self.v.clone(), eps)
    }

    /// The polynomial this plan realizes:
    /// `Σ_j w_j (t^{p(j)} + t^{-p(j)}) + 1 - 2 Σ_j w_j`.
    pub fn realized_delta(&self) -> LaurentPoly {
        let m = self.path.num_vars();
        let mut sum_w = BigInt::zero();
        let positions = self.path.positions();
        let mut out = LaurentPoly::zero(m);
        for (j, w) in self.w.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            sum_w += w;
            let p = &positions[j + 1];
            out.add_term(p.clone(), w.clone());
            out.add_term(p.negated(), w.clone());
        }
        out.add_term(ExponentVector::zero(m), BigInt::from(1) - 2 * sum_w);
        out
    }
}

/// Outcome of a capped path enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationCapExceeded {
    pub cap: usize,
    /// The paths found before the cap was hit.
    pub partial: Vec<LatticePath>,
}

impl fmt::Display for EnumerationCapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "path enumeration exceeded the cap of {} paths", self.cap)
    }
}

/// Default enumeration cap.
pub const DEFAULT_MAX_PATHS: usize = 100_000;

/// All normalized paths of length at most (shortest + `max_extra_steps`)
/// that visit every target pair, in depth-first lexicographic step order.
pub fn enumerate_paths(
    num_vars: usize,
    targets: &[ExponentVector],
    max_extra_steps: usize,
    max_paths: usize,
) -> Result<Vec<LatticePath>, EnumerationCapExceeded> {
    let shortest = find_path(num_vars, targets, PathStrategy::Shortest);
    let max_len = shortest.len() + max_extra_steps;
    let mut out = Vec::new();
    let mut steps: Vec<Step> = Vec::new();
    let mut pos = ExponentVector::zero(num_vars);
    let mut visited: Vec<Option<usize>> = vec![None; targets.len()];
    let overflow = dfs(
        num_vars, targets, max_len, max_paths, &mut steps, &mut pos, &mut visited, &mut out,
    );
    if overflow {
        Err(EnumerationCapExceeded {
            cap: max_paths,
            partial: out,
        })
    } else {
        Ok(out)
    }
}

/// Returns true when the cap was exceeded.
#[allow(clippy::too_many_arguments)]
fn dfs(
    num_vars: usize,
    targets: &[ExponentVector],
    max_len: usize,
    max_paths: usize,
    steps: &mut Vec<Step>,
    pos: &mut ExponentVector,
    visited: &mut Vec<Option<usize>>,
    out: &mut Vec<LatticePath>,
) -> bool {
    if visited.iter().all(Option::is_some) {
        if out.len() == max_paths {
            return true;
        }
        out.push(LatticePath::new(num_vars, steps.clone()));
    }
    if steps.len() == max_len {
        return false;
    }
    // admissible lower bound on the remaining length
    let bound = targets
        .iter()
        .zip(visited.iter())
        .filter(|(_, v)| v.is_none())
        .map(|(t, _)| pos.manhattan(t).min(pos.manhattan(&t.negated())))
        .max()
        .unwrap_or(0);
    if steps.len() as u64 + bound > max_len as u64 {
        return false;
    }
    for component in 0..num_vars {
        for sign in [Sign::Plus, Sign::Minus] {
            if steps.is_empty() && sign == Sign::Minus {
                continue;
            }
            steps.push(Step::new(component, sign));
            pos.0[component] += sign.to_i64();
            let mut marked = Vec::new();
            for (i, t) in targets.iter().enumerate() {
                if visited[i].is_none() && (*pos == *t || *pos == t.negated()) {
                    visited[i] = Some(steps.len());
                    marked.push(i);
                }
            }
            let overflow = dfs(
                num_vars, targets, max_len, max_paths, steps, pos, visited, out,
            );
            for i in marked {
                visited[i] = None;
            }
            pos.0[component] -= sign.to_i64();
            steps.pop();
            if overflow {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::decompose;
    use crate::polytext::parse_poly;

    fn ev(e: &[i64]) -> ExponentVector {
        ExponentVector(e.to_vec())
    }

    fn steps(path: &LatticePath) -> Vec<(usize, i64)> {
        path.steps()
            .iter()
            .map(|s| (s.component + 1, s.sign.to_i64()))
            .collect()
    }

    #[test]
    fn sequential_path_through_three_targets() {
        let path = find_path(
            2,
            &[ev(&[1, 0]), ev(&[1, 1]), ev(&[0, 1])],
            PathStrategy::Sequential,
        );
        assert_eq!(steps(&path), vec![(1, 1), (2, 1), (1, -1)]);
        assert_eq!(
            path.positions(),
            vec![ev(&[0, 0]), ev(&[1, 0]), ev(&[1, 1]), ev(&[0, 1])]
        );
    }

    #[test]
    fn empty_targets_empty_path() {
        let path = find_path(2, &[], PathStrategy::Sequential);
        assert!(path.is_empty());
        assert_eq!(path.to_text(), "");
    }

    #[test]
    fn normalization_flips_negative_first_step() {
        // Target (-1, 0) is not canonical, but find_path accepts any targets.
        let path = find_path(2, &[ev(&[-1, 0])], PathStrategy::Sequential);
        assert!(path.is_normalized());
        assert_eq!(steps(&path), vec![(1, 1)]);
        assert!(path.visits_all(&[ev(&[-1, 0])]));
    }

    #[test]
    fn shortest_prefers_lex_smaller_order() {
        // both orders of the two length-3 visits tie; lex picks component 1 first
        let path = find_path(
            2,
            &[ev(&[1, 0]), ev(&[1, 1]), ev(&[0, 1])],
            PathStrategy::Shortest,
        );
        assert_eq!(steps(&path), vec![(1, 1), (2, 1), (1, -1)]);
    }

    #[test]
    fn shortest_uses_negated_representative_when_closer() {
        // visiting (1,1) then (-2,-1) directly costs 2 + 5; negating the
        // second target pair gives 2 + 1
        let path = find_path(2, &[ev(&[1, 1]), ev(&[-2, -1])], PathStrategy::Shortest);
        assert_eq!(path.len(), 3);
        assert!(path.visits_all(&[ev(&[1, 1]), ev(&[-2, -1])]));
    }

    #[test]
    fn plan_for_worked_example() {
        let delta = parse_poly("3*t1*t2 + 3*t1^-1*t2^-1 - 5", 2).unwrap();
        let pres = decompose(&delta).unwrap();
        let path = LatticePath::new(
            2,
            vec![Step::new(0, Sign::Plus), Step::new(1, Sign::Plus)],
        );
        let plan = make_plan(&path, &pres).unwrap();
        assert_eq!(plan.w, vec![BigInt::zero(), BigInt::from(3)]);
        assert_eq!(plan.v, vec![BigInt::from(3), BigInt::from(3)]);
        assert_eq!(plan.hit_times.get(&ev(&[1, 1])), Some(&2));
        assert_eq!(plan.realized_delta(), delta);
    }

    #[test]
    fn plan_uses_first_visit() {
        // path passes (1,0) on the way to (2,0); the hit time is the pass-by
        let delta = parse_poly("2*t1 + 2*t1^-1 + t1^2 + t1^-2 - 5", 1).unwrap();
        let pres = decompose(&delta).unwrap();
        let path = find_path(1, &[ev(&[2]), ev(&[1])], PathStrategy::Sequential);
        assert_eq!(steps(&path), vec![(1, 1), (1, 1)]);
        let plan = make_plan(&path, &pres).unwrap();
        assert_eq!(plan.hit_times.get(&ev(&[1])), Some(&1));
        assert_eq!(plan.hit_times.get(&ev(&[2])), Some(&2));
        assert_eq!(plan.realized_delta(), delta);
    }

    #[test]
    fn plan_reports_missed_target() {
        let delta = parse_poly("t1*t2 + t1^-1*t2^-1 - 1", 2).unwrap();
        let pres = decompose(&delta).unwrap();
        let path = LatticePath::new(2, vec![Step::new(0, Sign::Plus)]);
        assert_eq!(
            make_plan(&path, &pres),
            Err(PlanError::TargetMissed { target: ev(&[1, 1]) })
        );
    }

    #[test]
    fn empty_plan() {
        let delta = parse_poly("1", 2).unwrap();
        let pres = decompose(&delta).unwrap();
        let plan = make_plan(&LatticePath::empty(2), &pres).unwrap();
        assert!(plan.w.is_empty() && plan.v.is_empty());
        assert_eq!(plan.realized_delta(), delta);
        assert!(plan.ladder_params().is_empty());
    }

    #[test]
    fn enumerate_single_diagonal_target() {
        let paths = enumerate_paths(2, &[ev(&[1, 1])], 0, DEFAULT_MAX_PATHS).unwrap();
        let as_steps: Vec<_> = paths.iter().map(steps).collect();
        assert_eq!(as_steps, vec![vec![(1, 1), (2, 1)], vec![(2, 1), (1, 1)]]);
    }

    #[test]
    fn enumerate_no_targets() {
        let paths = enumerate_paths(2, &[], 0, DEFAULT_MAX_PATHS).unwrap();
        assert_eq!(paths, vec![LatticePath::empty(2)]);
    }

    #[test]
    fn enumerate_unique_monotone_path() {
        let paths = enumerate_paths(2, &[ev(&[2, 0])], 0, DEFAULT_MAX_PATHS).unwrap();
        let as_steps: Vec<_> = paths.iter().map(steps).collect();
        assert_eq!(as_steps, vec![vec![(1, 1), (1, 1)]]);
    }

    #[test]
    fn enumerate_respects_cap() {
        let err = enumerate_paths(2, &[ev(&[1, 1])], 4, 3).unwrap_err();
        assert_eq!(err.cap, 3);
        assert_eq!(err.partial.len(), 3);
    }

    #[test]
    fn enumerated_paths_all_satisfy_conditions() {
        let targets = [ev(&[1, 0]), ev(&[1, 1])];
        let paths = enumerate_paths(2, &targets, 2, DEFAULT_MAX_PATHS).unwrap();
        assert!(!paths.is_empty());
        for p in &paths {
            assert!(p.is_normalized());
            assert!(p.visits_all(&targets));
        }
        // extension by two extra steps strictly enlarges the set
        let shorter = enumerate_paths(2, &targets, 0, DEFAULT_MAX_PATHS).unwrap();
        assert!(shorter.len() < paths.len());
    }
}
