//! Paths in the branching graph of the partition algebras.
//!
//! A path of degree `s` from λ is stored as λ together with `s` integral steps
//! `(−ε_i, +ε_j)`. Half-level shapes are recomputed on demand and never kept
//! in the public type.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// An integral step `(−ε_remove, +ε_add)`. Index 0 means "nothing".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub remove: usize,
    pub add: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StepKind {
    MoveUp,
    Dummy,
    MoveDown,
}

impl Step {
    pub const fn new(remove: usize, add: usize) -> Self {
        Step { remove, add }
    }

    /// `a(i) = m↓(0, i)`.
    pub const fn a(i: usize) -> Self {
        Step::new(0, i)
    }

    /// `r(i) = m↑(i, 0)`.
    pub const fn r(i: usize) -> Self {
        Step::new(i, 0)
    }

    /// `d(i) = (−ε_i, +ε_i)`.
    pub const fn d(i: usize) -> Self {
        Step::new(i, i)
    }

    pub fn kind(&self) -> StepKind {
        match self.remove.cmp(&self.add) {
            Ordering::Greater => StepKind::MoveUp,
            Ordering::Equal => StepKind::Dummy,
            Ordering::Less => StepKind::MoveDown,
        }
    }
}

/// Move-ups, then dummies, then move-downs. Within move-ups by add index
/// ascending then remove index descending; dummies by index descending;
/// move-downs by remove index descending then add index ascending.
///
/// ```
/// use kronecker_tableaux::Step;
/// assert!(Step::r(1) < Step::d(1) && Step::d(1) < Step::a(1));
/// assert!(Step::d(2) < Step::d(1));
/// assert!(Step::new(1, 2) < Step::a(1));
/// ```
impl Ord for Step {
    fn cmp(&self, other: &Self) -> Ordering {
        let (ka, kb) = (self.kind(), other.kind());
        if ka != kb {
            return ka.cmp(&kb);
        }
        match ka {
            StepKind::MoveUp => self.add.cmp(&other.add).then(other.remove.cmp(&self.remove)),
            StepKind::Dummy => other.remove.cmp(&self.remove),
            StepKind::MoveDown => other.remove.cmp(&self.remove).then(self.add.cmp(&other.add)),
        }
    }
}

impl PartialOrd for Step {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "-{}+{}", self.remove, self.add)
    }
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse { input: s.to_string(), reason: "expected -i+j".into() };
        let rest = s.trim().strip_prefix('-').ok_or_else(err)?;
        let (i, j) = rest.split_once('+').ok_or_else(err)?;
        Ok(Step::new(i.parse().map_err(|_| err())?, j.parse().map_err(|_| err())?))
    }
}

/// Applies one integral step, returning the half-level and integral shapes.
pub fn apply_step(shape: &Partition, step: Step) -> Option<(Partition, Partition)> {
    let half = shape.remove_box(step.remove)?;
    let next = half.add_box(step.add)?;
    Some((half, next))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// Moving from an integral level to the next half level (remove or keep).
    Integral,
    /// Moving from a half level to the next integral level (add or keep).
    Half,
}

/// Shapes reachable in one half-step, the shape itself first.
pub fn successors(shape: &Partition, from: Level) -> Vec<Partition> {
    let mut out = vec![shape.clone()];
    match from {
        Level::Integral => out.extend(shape.removable_rows().into_iter().filter_map(|r| shape.remove_box(r))),
        Level::Half => out.extend(shape.addable_rows().into_iter().filter_map(|r| shape.add_box(r))),
    }
    out
}

/// A standard Kronecker tableau: a path λ = t(0) → t(½) → t(1) → ... → t(s).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KroneckerTableau {
    start: Partition,
    steps: Vec<Step>,
}

impl KroneckerTableau {
    /// Validates every intermediate shape.
    ///
    /// ```
    /// use kronecker_tableaux::{KroneckerTableau, Partition, Step};
    /// let l: Partition = "4,2".parse().unwrap();
    /// let t = KroneckerTableau::new(l, vec![Step::a(2), Step::a(3), Step::a(1)]).unwrap();
    /// assert_eq!(t.end().to_string(), "[5,3,1]");
    /// assert!(KroneckerTableau::new(Partition::empty(), vec![Step::a(2)]).is_err());
    /// ```
    pub fn new(start: Partition, steps: Vec<Step>) -> Result<Self> {
        let mut cur = start.clone();
        for (k, &st) in steps.iter().enumerate() {
            cur = apply_step(&cur, st)
                .ok_or_else(|| Error::NotAPartition(format!("step {} ({st}) from {cur}", k + 1)))?
                .1;
        }
        Ok(KroneckerTableau { start, steps })
    }

    pub fn start(&self) -> &Partition {
        &self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The degree `s`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// All `2s + 1` shapes; entry `2k` is `t(k)` and entry `2k + 1` is `t(k + ½)`.
    pub fn shapes(&self) -> Vec<Partition> {
        let mut out = Vec::with_capacity(2 * self.steps.len() + 1);
        let mut cur = self.start.clone();
        out.push(cur.clone());
        for &st in &self.steps {
            let (h, n) = apply_step(&cur, st).expect("validated path");
            out.push(h);
            out.push(n.clone());
            cur = n;
        }
        out
    }

    /// `t(k)` for `0 ≤ k ≤ s`.
    pub fn shape(&self, k: usize) -> Partition {
        let mut cur = self.start.clone();
        for &st in &self.steps[..k] {
            cur = apply_step(&cur, st).expect("validated path").1;
        }
        cur
    }

    /// `t(k − ½)` for `1 ≤ k ≤ s`.
    pub fn half_before(&self, k: usize) -> Partition {
        self.shape(k - 1).remove_box(self.steps[k - 1].remove).expect("validated path")
    }

    pub fn end(&self) -> Partition {
        self.shape(self.steps.len())
    }

    /// Concatenation `self ∘ other`.
    pub fn compose(&self, other: &KroneckerTableau) -> Result<KroneckerTableau> {
        if self.end() != other.start {
            return Err(Error::ShapeMismatch(format!("{} then {}", self.end(), other.start)));
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Ok(KroneckerTableau { start: self.start.clone(), steps })
    }

    /// Rendering with the shapes interleaved, as printed by `--verbose`.
    pub fn verbose(&self) -> String {
        let shapes = self.shapes();
        let mut s = shapes[0].to_string();
        for (k, st) in self.steps.iter().enumerate() {
            s.push_str(&format!(" -{} {} +{} {}", st.remove, shapes[2 * k + 1], st.add, shapes[2 * k + 2]));
        }
        s
    }
}

impl fmt::Display for KroneckerTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", v.join(" "))
    }
}

/// The maximal tableau `d(0)^{r−|ν|} a(1)^{ν_1} a(2)^{ν_2} ...` in `Std_r(ν)`.
pub fn maximal_tableau(nu: &Partition, r: usize) -> KroneckerTableau {
    let mut steps = vec![Step::d(0); r - nu.size()];
    for (i, &p) in nu.parts().iter().enumerate() {
        steps.extend(std::iter::repeat_n(Step::a(i + 1), p));
    }
    KroneckerTableau::new(Partition::empty(), steps).expect("maximal tableau is a path")
}

fn excess(a: &Partition, b: &Partition) -> usize {
    let l = a.len().max(b.len());
    (1..=l).map(|i| a.part(i).saturating_sub(b.part(i))).sum()
}

/// Every element of `Std_s(ν \ λ)`, lexicographic in the step order.
///
/// ```
/// use kronecker_tableaux::{enumerate_std, Partition};
/// let l: Partition = "4,2".parse().unwrap();
/// let n: Partition = "5,3,1".parse().unwrap();
/// assert_eq!(enumerate_std(&l, &n, 3).len(), 6);
/// ```
pub fn enumerate_std(lambda: &Partition, nu: &Partition, s: usize) -> Vec<KroneckerTableau> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(s);
    dfs(lambda, nu, s, &mut steps, &mut out, lambda);
    out
}

fn dfs(
    cur: &Partition,
    nu: &Partition,
    s: usize,
    steps: &mut Vec<Step>,
    out: &mut Vec<KroneckerTableau>,
    start: &Partition,
) {
    let k = steps.len();
    if k == s {
        if cur == nu {
            out.push(KroneckerTableau { start: start.clone(), steps: steps.clone() });
        }
        return;
    }
    let left = s - k - 1;
    let mut cands: Vec<(Step, Partition)> = Vec::new();
    for i in std::iter::once(0).chain(cur.removable_rows()) {
        let half = cur.remove_box(i).expect("removable");
        for j in std::iter::once(0).chain(half.addable_rows()) {
            let next = half.add_box(j).expect("addable");
            // each later step removes at most one box and adds at most one
            if excess(&next, nu) <= left && excess(nu, &next) <= left {
                cands.push((Step::new(i, j), next));
            }
        }
    }
    cands.sort_by_key(|a| a.0);
    for (st, next) in cands {
        steps.push(st);
        dfs(&next, nu, s, steps, out, start);
        steps.pop();
    }
}

/// The least `i` with `t ∈ DR^i`, if any. `DR^0` collects paths with a
/// `(−ε_0, +ε_0)` step; `DR^i` for `i ≥ 1` those removing more than `λ_i`
/// boxes from row `i` (dummies `d(i)` count as removals).
pub fn is_dvir(t: &KroneckerTableau) -> Option<usize> {
    if t.steps.iter().any(|s| *s == Step::d(0)) {
        return Some(0);
    }
    dvir_row(t)
}

fn dvir_row(t: &KroneckerTableau) -> Option<usize> {
    let maxrow = t.steps.iter().map(|s| s.remove).max().unwrap_or(0);
    (1..=maxrow).find(|&i| t.steps.iter().filter(|s| s.remove == i).count() > t.start.part(i))
}

/// `Std⁰_s(ν \ λ)`: the paths outside the Dvir radical.
pub fn enumerate_std0(lambda: &Partition, nu: &Partition, s: usize) -> Vec<KroneckerTableau> {
    enumerate_std(lambda, nu, s).into_iter().filter(|t| is_dvir(t).is_none()).collect()
}

/// `Std⁺_s(ν \ λ)`: excludes only `DR^i` for `i ≥ 1`.
pub fn enumerate_std_plus(lambda: &Partition, nu: &Partition, s: usize) -> Vec<KroneckerTableau> {
    enumerate_std(lambda, nu, s).into_iter().filter(|t| dvir_row(t).is_none()).collect()
}

/// `t_{k↔k+1}` (1-indexed `k`): exchanges integral steps `k` and `k + 1`.
pub fn swap_adjacent(t: &KroneckerTableau, k: usize) -> Result<Option<KroneckerTableau>> {
    if k == 0 || k + 1 > t.len() {
        return Err(Error::IndexOutOfRange { index: k, max: t.len().saturating_sub(1) });
    }
    let mut steps = t.steps.clone();
    steps.swap(k - 1, k);
    Ok(KroneckerTableau::new(t.start.clone(), steps).ok())
}

/// The error path `e_k(t)`: when step `k` adds a box in row `u > 0` and step
/// `k + 1` removes it again, the round trip through row `u` is replaced by a
/// round trip through the first empty row `L = ℓ(t(k − ½)) + 1`.
pub fn error_path(t: &KroneckerTableau, k: usize) -> Result<Option<KroneckerTableau>> {
    if k == 0 || k > t.len() {
        return Err(Error::IndexOutOfRange { index: k, max: t.len() });
    }
    if k == t.len() {
        return Ok(None);
    }
    let (a, b) = (t.steps[k - 1], t.steps[k + 1 - 1]);
    if a.add == 0 || a.add != b.remove {
        return Ok(None);
    }
    let l = t.half_before(k).len() + 1;
    let mut steps = t.steps.clone();
    steps[k - 1] = Step::new(a.remove, l);
    steps[k] = Step::new(l, b.add);
    Ok(KroneckerTableau::new(t.start.clone(), steps).ok())
}

/// The bijection between pairs of one-way paths through
/// `α ⊆ λ_[n] ∩ ν_[n]` and `Std⁺_s(ν \ λ)`: `p` removes boxes from `λ_[n]`,
/// `q` adds boxes to reach `ν_[n]`, and the result pairs the `k`-th removal
/// with the `k`-th addition after shifting rows down by one.
pub fn phi(remove_path: &KroneckerTableau, add_path: &KroneckerTableau) -> Option<KroneckerTableau> {
    if remove_path.len() != add_path.len() || remove_path.end() != add_path.start {
        return None;
    }
    let mut steps = Vec::with_capacity(add_path.len());
    for (r, a) in remove_path.steps.iter().zip(&add_path.steps) {
        if r.add != 0 || a.remove != 0 || r.remove == 0 || a.add == 0 {
            return None;
        }
        steps.push(Step::new(r.remove - 1, a.add - 1));
    }
    KroneckerTableau::new(remove_path.start.strip_first(), steps).ok()
}

/// Set of step sequences, for quick membership tests.
pub fn step_set(ts: &[KroneckerTableau]) -> HashSet<Vec<Step>> {
    ts.iter().map(|t| t.steps.clone()).collect()
}
