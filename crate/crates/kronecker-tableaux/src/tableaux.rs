//! Semistandard Kronecker tableaux, reverse reading words and the counting
//! rule for stable Kronecker coefficients.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::branching::{enumerate_std0, is_dvir, swap_adjacent, KroneckerTableau, Step};
use crate::error::{Error, Result};
use crate::partitions::{is_copieri, is_horizontal, is_maximal_depth, within_bounds, Composition, Partition};

/// An equivalence class `[t]_μ`: paths in `Std⁰` joined by swaps that stay
/// inside a frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemistandardClass {
    weight: Composition,
    members: Vec<KroneckerTableau>,
    boundary: Vec<Partition>,
}

fn boundary_shapes(t: &KroneckerTableau, weight: &Composition) -> Vec<Partition> {
    (0..=weight.len()).map(|c| t.shape(weight.partial_sum(c))).collect()
}

/// Frame of each (1-indexed) step position `k`, as a 0-indexed vector.
fn frames(weight: &Composition) -> Vec<usize> {
    let mut out = Vec::with_capacity(weight.size());
    for (c, &m) in weight.parts().iter().enumerate() {
        out.extend(std::iter::repeat_n(c + 1, m));
    }
    out
}

impl SemistandardClass {
    pub fn weight(&self) -> &Composition {
        &self.weight
    }

    pub fn members(&self) -> &[KroneckerTableau] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `t([μ]_0), t([μ]_1), ..., t([μ]_l)`, shared by all members.
    pub fn boundary_shapes(&self) -> &[Partition] {
        &self.boundary
    }

    /// Both skews of every frame against their intersection are horizontal.
    pub fn is_semistandard(&self) -> bool {
        self.boundary.windows(2).all(|w| {
            let m = w[0].intersect(&w[1]);
            is_horizontal(&w[1], &m) && is_horizontal(&w[0], &m)
        })
    }

    pub fn reading_word(&self) -> ReadingWord {
        reading_word_of(&self.members[0], &self.weight)
    }

    pub fn is_lattice(&self) -> bool {
        is_lattice(&self.reading_word().frames())
    }
}

/// `(step, frame)` columns sorted by step, ties by frame descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReadingWord {
    columns: Vec<(Step, usize)>,
}

impl ReadingWord {
    pub fn new(mut columns: Vec<(Step, usize)>) -> Self {
        columns.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        ReadingWord { columns }
    }

    pub fn columns(&self) -> &[(Step, usize)] {
        &self.columns
    }

    pub fn steps(&self) -> Vec<Step> {
        self.columns.iter().map(|c| c.0).collect()
    }

    pub fn frames(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.1).collect()
    }

    /// Same first row, new second row; `None` if the result is not sorted
    /// the way a reading word must be.
    pub fn with_frames(&self, frames: &[usize]) -> Option<ReadingWord> {
        if frames.len() != self.columns.len() {
            return None;
        }
        let columns: Vec<(Step, usize)> = self.columns.iter().zip(frames).map(|(c, &f)| (c.0, f)).collect();
        let sorted = columns.windows(2).all(|w| w[0].0 != w[1].0 || w[0].1 >= w[1].1);
        sorted.then_some(ReadingWord { columns })
    }
}

impl fmt::Display for ReadingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps: Vec<String> = self.columns.iter().map(|c| c.0.to_string()).collect();
        let frames: Vec<String> = self.columns.iter().map(|c| c.1.to_string()).collect();
        write!(f, "{} / {}", steps.join(" "), frames.join(" "))
    }
}

/// Reading word of a single path with respect to a weight.
pub fn reading_word_of(t: &KroneckerTableau, weight: &Composition) -> ReadingWord {
    ReadingWord::new(t.steps().iter().copied().zip(frames(weight)).collect())
}

/// Classes of `Std⁰_s(ν \ λ)` for `s = |μ|`, found by breadth-first search
/// over swaps at positions that are not frame boundaries.
///
/// ```
/// use kronecker_tableaux::tableaux::mu_classes;
/// let p = |s: &str| s.parse().unwrap();
/// let classes = mu_classes(&p("4,2"), &p("5,3,1"), &"2,1".parse().unwrap());
/// assert_eq!(classes.iter().map(|c| c.len()).collect::<Vec<_>>(), vec![2, 2, 2]);
/// ```
pub fn mu_classes(lambda: &Partition, nu: &Partition, mu: &Composition) -> Vec<SemistandardClass> {
    classes_of(enumerate_std0(lambda, nu, mu.size()), mu)
}

fn walls(mu: &Composition) -> HashSet<usize> {
    (1..mu.len()).map(|c| mu.partial_sum(c)).collect()
}

fn classes_of(paths: Vec<KroneckerTableau>, mu: &Composition) -> Vec<SemistandardClass> {
    let s = mu.size();
    let walls = walls(mu);
    let index: HashMap<Vec<Step>, usize> = paths.iter().enumerate().map(|(i, t)| (t.steps().to_vec(), i)).collect();
    let mut seen = vec![false; paths.len()];
    let mut out = Vec::new();
    for start in 0..paths.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut members = Vec::new();
        while let Some(i) = queue.pop_front() {
            members.push(i);
            for k in (1..s).filter(|k| !walls.contains(k)) {
                let Some(next) = swap_adjacent(&paths[i], k).expect("k in range") else { continue };
                if let Some(&j) = index.get(next.steps()) {
                    if !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
        members.sort_unstable();
        let members: Vec<KroneckerTableau> = members.into_iter().map(|i| paths[i].clone()).collect();
        let boundary = boundary_shapes(&members[0], mu);
        out.push(SemistandardClass { weight: mu.clone(), members, boundary });
    }
    out
}

/// The class of one path, by breadth-first search from it.
pub fn class_of(t: &KroneckerTableau, mu: &Composition) -> Result<SemistandardClass> {
    if mu.size() != t.len() {
        return Err(Error::SizeMismatch(format!("|{mu}| != {}", t.len())));
    }
    if is_dvir(t).is_some() {
        return Err(Error::NotDvir);
    }
    let walls = walls(mu);
    let mut seen: HashSet<Vec<Step>> = HashSet::from([t.steps().to_vec()]);
    let mut queue = VecDeque::from([t.clone()]);
    let mut members = Vec::new();
    while let Some(cur) = queue.pop_front() {
        for k in (1..t.len()).filter(|k| !walls.contains(k)) {
            if let Some(next) = swap_adjacent(&cur, k)? {
                if seen.insert(next.steps().to_vec()) {
                    queue.push_back(next);
                }
            }
        }
        members.push(cur);
    }
    members.sort_by(|a, b| a.steps().cmp(b.steps()));
    let boundary = boundary_shapes(t, mu);
    Ok(SemistandardClass { weight: mu.clone(), members, boundary })
}

/// Good/bad marks: every 1 is good, and an `i+1` is good iff strictly more
/// good `i`'s than good `(i+1)`'s precede it.
pub fn qualities(word: &[usize]) -> Vec<bool> {
    let mut good: HashMap<usize, usize> = HashMap::new();
    word.iter()
        .map(|&x| {
            let ok = x == 1 || good.get(&(x - 1)).copied().unwrap_or(0) > good.get(&x).copied().unwrap_or(0);
            if ok {
                *good.entry(x).or_default() += 1;
            }
            ok
        })
        .collect()
}

/// Every term is good.
///
/// ```
/// use kronecker_tableaux::tableaux::is_lattice;
/// assert!(is_lattice(&[1, 1, 1, 2, 3, 2]));
/// assert!(!is_lattice(&[2, 1, 1, 3, 2, 2, 2, 3, 3, 2, 1, 1, 1]));
/// ```
pub fn is_lattice(word: &[usize]) -> bool {
    qualities(word).into_iter().all(|q| q)
}

/// Every prefix has at least as many `i`'s as `(i+1)`'s.
pub fn is_lattice_by_prefix(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &x in word {
        if x == 0 {
            return false;
        }
        if counts.len() <= x {
            counts.resize(x + 1, 0);
        }
        counts[x] += 1;
        if x > 1 && counts[x] > counts[x - 1] {
            return false;
        }
    }
    true
}

/// `|SStd⁰_s(ν \ λ, μ)|`.
pub fn count_sstd(lambda: &Partition, nu: &Partition, mu: &Composition) -> usize {
    mu_classes(lambda, nu, mu).iter().filter(|c| c.is_semistandard()).count()
}

/// `|Latt⁰_s(ν \ λ, μ)|`.
pub fn count_latticed(lambda: &Partition, nu: &Partition, mu: &Partition) -> usize {
    latticed_classes(lambda, nu, mu).len()
}

pub fn latticed_classes(lambda: &Partition, nu: &Partition, mu: &Partition) -> Vec<SemistandardClass> {
    mu_classes(lambda, nu, &mu.into()).into_iter().filter(|c| c.is_semistandard() && c.is_lattice()).collect()
}

/// `ḡ(λ, ν, μ)` for co-Pieri and maximal-depth triples.
///
/// ```
/// use kronecker_tableaux::tableaux::stable_kronecker;
/// let p = |s: &str| s.parse().unwrap();
/// assert_eq!(stable_kronecker(&p("4"), &p("5"), &p("2,2,1")).unwrap(), 1);
/// assert_eq!(stable_kronecker(&p("2,1"), &p("3,3,2"), &p("2,2,1")).unwrap(), 1);
/// ```
pub fn stable_kronecker(lambda: &Partition, nu: &Partition, mu: &Partition) -> Result<usize> {
    let s = mu.size();
    if !within_bounds(lambda, nu, s) {
        return Ok(0);
    }
    if !is_copieri(lambda, nu, s) && !is_maximal_depth(lambda, nu, s) {
        return Err(Error::NotApplicable);
    }
    Ok(count_latticed(lambda, nu, mu))
}

/// Reverse reading words (rows right to left, top to bottom) of all
/// semistandard fillings of `outer ⊖ inner` with the given content.
pub fn skew_ssyt_words(outer: &Partition, inner: &Partition, weight: &Composition) -> Vec<Vec<usize>> {
    if !outer.contains(inner) || outer.size() - inner.size() != weight.size() {
        return Vec::new();
    }
    let cells: Vec<(usize, usize)> =
        (1..=outer.len()).flat_map(|i| (inner.part(i) + 1..=outer.part(i)).rev().map(move |j| (i, j))).collect();
    let mut grid: HashMap<(usize, usize), usize> = HashMap::new();
    let mut left: Vec<usize> = weight.parts().to_vec();
    let mut word = Vec::with_capacity(cells.len());
    let mut out = Vec::new();
    fill(&cells, 0, &mut grid, &mut left, &mut word, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut HashMap<(usize, usize), usize>,
    left: &mut [usize],
    word: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if idx == cells.len() {
        out.push(word.clone());
        return;
    }
    let (i, j) = cells[idx];
    let hi = grid.get(&(i, j + 1)).copied().unwrap_or(usize::MAX);
    let lo = grid.get(&(i - 1, j)).map_or(1, |v| v + 1);
    for v in lo..=hi.min(left.len()) {
        if left[v - 1] == 0 {
            continue;
        }
        left[v - 1] -= 1;
        grid.insert((i, j), v);
        word.push(v);
        fill(cells, idx + 1, grid, left, word, out);
        word.pop();
        grid.remove(&(i, j));
        left[v - 1] += 1;
    }
}

/// Littlewood–Richardson coefficient `c(λ, μ; ν)` by counting semistandard
/// fillings of `ν ⊖ λ` of weight μ with lattice reverse reading word.
pub fn classical_lr(lambda: &Partition, nu: &Partition, mu: &Partition) -> Result<usize> {
    if !nu.contains(lambda) {
        return Err(Error::ShapeMismatch(format!("{lambda} is not contained in {nu}")));
    }
    if nu.size() != lambda.size() + mu.size() {
        return Err(Error::SizeMismatch(format!("|{nu}| != |{lambda}| + |{mu}|")));
    }
    Ok(skew_ssyt_words(nu, lambda, &mu.into()).iter().filter(|w| is_lattice_by_prefix(w)).count())
}

/// Kostka number: semistandard tableaux of shape τ and weight μ.
pub fn ssyt_count(tau: &Partition, mu: &Composition) -> usize {
    skew_ssyt_words(tau, &Partition::empty(), mu).len()
}

/// Changes every bad `c` into `c − 1`.
pub fn r_map(word: &[usize], c: usize) -> Vec<usize> {
    let q = qualities(word);
    word.iter().zip(q).map(|(&x, good)| if x == c && !good { c - 1 } else { x }).collect()
}

/// Number of good `i`'s, indexed by `i − 1`.
fn good_counts(word: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for (&x, good) in word.iter().zip(qualities(word)) {
        if good {
            if out.len() < x {
                out.resize(x, 0);
            }
            out[x - 1] += 1;
        }
    }
    out
}

fn has_good(word: &[usize], sharp: &Partition) -> bool {
    let g = good_counts(word);
    (1..=sharp.len()).all(|i| g.get(i - 1).copied().unwrap_or(0) >= sharp.part(i))
}

fn add_box(p: &Partition, row: usize) -> Option<Partition> {
    let mut v = p.parts().to_vec();
    if v.len() < row {
        v.resize(row, 0);
    }
    v[row - 1] += 1;
    Partition::new(v).ok()
}

/// All `u` of type `tau` with at least `sharp_i` good `i`'s, exactly
/// `sharp_c` good `c`'s when `a_c(sharp)` is a partition, and
/// `r_map(u, c) = word`.
pub fn r_map_preimages(word: &[usize], c: usize, sharp: &Partition, tau: &Composition) -> Vec<Vec<usize>> {
    let k = tau.part(c).saturating_sub(sharp.part(c));
    let slots: Vec<usize> = word.iter().enumerate().filter(|(_, &x)| x == c - 1).map(|(i, _)| i).collect();
    let bumped = add_box(sharp, c);
    let mut out = Vec::new();
    let mut choice = Vec::with_capacity(k);
    fn rec(start: usize, k: usize, slots: &[usize], choice: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if choice.len() == k {
            f(choice);
            return;
        }
        for i in start..slots.len() {
            choice.push(slots[i]);
            rec(i + 1, k, slots, choice, f);
            choice.pop();
        }
    }
    let mut check = |picked: &[usize]| {
        let mut u = word.to_vec();
        for &i in picked {
            u[i] = c;
        }
        let typed = (1..=tau.len().max(u.iter().copied().max().unwrap_or(0)))
            .all(|i| u.iter().filter(|&&x| x == i).count() == tau.part(i));
        if !typed || !has_good(&u, sharp) {
            return;
        }
        if let Some(b) = &bumped {
            if has_good(&u, b) {
                return;
            }
        }
        if r_map(&u, c) == word {
            out.push(u);
        }
    };
    rec(0, k, &slots, &mut choice, &mut check);
    out
}

/// The unique preimage under `r_map`, found by exhaustive search.
pub fn r_map_inverse(word: &[usize], c: usize, sharp: &Partition, tau: &Composition) -> Result<Vec<usize>> {
    let mut pre = r_map_preimages(word, c, sharp, tau);
    if pre.len() != 1 {
        return Err(Error::NoUniquePreimage(pre.len()));
    }
    Ok(pre.pop().expect("one element"))
}

/// An edge operator of the James tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum JamesEdge {
    /// `r_c^k`: moves the last `k` boxes of row `c` to row `c − 1`.
    R { c: usize, k: usize },
    /// `a_c`: adds a box to row `c` of the sharp partition.
    A { c: usize },
}

impl fmt::Display for JamesEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JamesEdge::R { c, k: 1 } => write!(f, "r{c}"),
            JamesEdge::R { c, k } => write!(f, "r{c}^{k}"),
            JamesEdge::A { c } => write!(f, "a{c}"),
        }
    }
}

/// A vertex label `(τ♯, τ)`, or the dead label `(∅, ∅)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairOfPartitions {
    Pair { sharp: Partition, full: Composition },
    Dead,
}

#[derive(Clone, Debug)]
pub struct JamesNode {
    pub label: PairOfPartitions,
    pub parent: Option<usize>,
    pub edge: Option<JamesEdge>,
    pub children: Vec<usize>,
    /// The row `c` acted on at this vertex, if it has children.
    pub c: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct JamesTree {
    pub mu: Partition,
    pub nodes: Vec<JamesNode>,
}

fn normalize(mut sharp: Vec<usize>, full: &[usize]) -> Partition {
    if sharp.is_empty() {
        sharp.push(0);
    }
    sharp[0] = full.first().copied().unwrap_or(0);
    Partition::new(sharp.into_iter().filter(|&x| x > 0).collect::<Vec<_>>()).expect("sharp stays a partition")
}

/// The tree `𝒯(μ)` rooted at `((μ₁), μ)`; children are listed `a_c` first.
pub fn james_tree(mu: &Partition) -> JamesTree {
    let l = mu.len();
    let root_full = Composition::new(mu.parts().to_vec());
    let root = JamesNode {
        label: PairOfPartitions::Pair { sharp: normalize(vec![mu.part(1)], mu.parts()), full: root_full },
        parent: None,
        edge: None,
        children: Vec::new(),
        c: None,
    };
    let mut tree = JamesTree { mu: mu.clone(), nodes: vec![root] };
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        let PairOfPartitions::Pair { sharp, full } = tree.nodes[v].label.clone() else { continue };
        let Some(c) = (2..=l).find(|&c| sharp.part(c) < full.part(c)) else { continue };
        tree.nodes[v].c = Some(c);
        let a_label = match add_box(&sharp, c) {
            Some(b) => PairOfPartitions::Pair { sharp: b, full: full.clone() },
            None => PairOfPartitions::Dead,
        };
        let k = full.part(c) - sharp.part(c);
        let mut moved = full.parts().to_vec();
        moved[c - 1] -= k;
        moved[c - 2] += k;
        let r_label =
            PairOfPartitions::Pair { sharp: normalize(sharp.parts().to_vec(), &moved), full: Composition::new(moved) };
        let mut kids = Vec::new();
        for (edge, label) in [(JamesEdge::A { c }, a_label), (JamesEdge::R { c, k }, r_label)] {
            tree.nodes.push(JamesNode { label, parent: Some(v), edge: Some(edge), children: Vec::new(), c: None });
            kids.push(tree.nodes.len() - 1);
        }
        tree.nodes[v].children = kids.clone();
        stack.extend(kids.into_iter().rev());
    }
    tree
}

impl JamesTree {
    /// Non-dead leaves, left to right.
    pub fn terminals(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            let node = &self.nodes[v];
            if node.children.is_empty() {
                if matches!(node.label, PairOfPartitions::Pair { .. }) {
                    out.push(v);
                }
            } else {
                stack.extend(node.children.iter().rev());
            }
        }
        out
    }

    /// The τ of a terminal vertex.
    pub fn terminal_shape(&self, v: usize) -> Option<Partition> {
        match &self.nodes[v].label {
            PairOfPartitions::Pair { sharp, full } if self.nodes[v].children.is_empty() => {
                full.as_partition().filter(|f| f == sharp)
            }
            _ => None,
        }
    }

    /// Edge operators from the root down to `v`.
    pub fn path(&self, v: usize) -> Vec<JamesEdge> {
        let mut out = Vec::new();
        let mut cur = v;
        while let (Some(p), Some(e)) = (self.nodes[cur].parent, self.nodes[cur].edge) {
            out.push(e);
            cur = p;
        }
        out.reverse();
        out
    }

    /// The path written as a composition of operators, right to left.
    pub fn path_label(&self, v: usize) -> String {
        self.path(v).iter().rev().map(|e| e.to_string()).collect()
    }

    /// Carries a word of type τ at terminal `v` back to a word of type μ by
    /// inverting each `r_c` on the way up.
    pub fn pull_back(&self, v: usize, word: &[usize]) -> Result<Vec<usize>> {
        let mut w = word.to_vec();
        let mut cur = v;
        while let (Some(p), Some(e)) = (self.nodes[cur].parent, self.nodes[cur].edge) {
            if let JamesEdge::R { c, .. } = e {
                let PairOfPartitions::Pair { sharp, full } = &self.nodes[p].label else {
                    unreachable!("dead vertices have no children")
                };
                w = r_map_inverse(&w, c, sharp, full)?;
            }
            cur = p;
        }
        Ok(w)
    }
}

/// Maps every latticed class of every weight τ through the James tree of μ
/// back to reading words of weight μ, returning them in tree order.
pub fn pull_back_latticed(lambda: &Partition, nu: &Partition, mu: &Partition) -> Result<Vec<ReadingWord>> {
    let tree = james_tree(mu);
    let mut cache: HashMap<Partition, Vec<ReadingWord>> = HashMap::new();
    let mut out = Vec::new();
    for v in tree.terminals() {
        let tau = tree.terminal_shape(v).expect("terminal vertex");
        let words = cache
            .entry(tau.clone())
            .or_insert_with(|| latticed_classes(lambda, nu, &tau).iter().map(|c| c.reading_word()).collect());
        for w in words.iter() {
            let frames = tree.pull_back(v, &w.frames())?;
            let rw = w.with_frames(&frames).ok_or_else(|| Error::ShapeMismatch(format!("unsorted word {w}")))?;
            out.push(rw);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branching::enumerate_std;
    use crate::partitions::{partitions_of, partitions_up_to};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn word(s: &str) -> Vec<usize> {
        s.chars().map(|ch| ch.to_digit(10).unwrap() as usize).collect()
    }

    #[test]
    fn lattice_examples() {
        assert!(is_lattice(&[1, 1, 1, 2, 3, 2]));
        assert!(is_lattice(&[1, 2, 3]));
        assert!(!is_lattice(&[2, 1, 1, 3, 2, 2, 2, 3, 3, 2, 1, 1, 1]));
        assert_eq!(qualities(&[2, 1, 1, 3, 2]), vec![false, true, true, false, true]);
        assert!(is_lattice(&[]));
    }

    #[test]
    fn two_lattice_tests_agree_exhaustively() {
        for len in 0..=7 {
            let mut w = vec![1usize; len];
            loop {
                assert_eq!(is_lattice(&w), is_lattice_by_prefix(&w), "{w:?}");
                let Some(i) = (0..len).rev().find(|&i| w[i] < 4) else { break };
                w[i] += 1;
                for x in w.iter_mut().skip(i + 1) {
                    *x = 1;
                }
            }
        }
    }

    #[test]
    fn small_class_examples() {
        let classes = mu_classes(&p("4,2"), &p("5,3,1"), &c("2,1"));
        assert_eq!(classes.len(), 3);
        assert!(classes.iter().all(|k| k.len() == 2 && k.is_semistandard()));
        assert_eq!(classes.iter().filter(|k| k.is_lattice()).count(), 2);
        let first: Vec<String> = classes.iter().flat_map(|k| k.members().iter().map(|t| t.to_string())).collect();
        assert!(first.contains(&"-0+2 -0+3 -0+1".to_string()));
        assert!(first.contains(&"-0+3 -0+2 -0+1".to_string()));
        assert_eq!(classical_lr(&p("4,2"), &p("5,3,1"), &p("2,1")).unwrap(), 2);
    }

    #[test]
    fn one_row_examples() {
        let (l, n) = (p("7"), p("6"));
        assert_eq!(mu_classes(&l, &n, &c("6")).len(), 3);
        let classes = mu_classes(&l, &n, &c("3,2,1"));
        assert_eq!(classes.len(), 27);
        assert_eq!(classes.iter().filter(|k| k.is_semistandard()).count(), 27);
        assert_eq!(count_latticed(&l, &n, &p("3,2,1")), 2);
        assert_eq!(count_latticed(&l, &n, &p("4,2")), 4);
        let words: HashSet<String> =
            latticed_classes(&l, &n, &p("3,2,1")).iter().map(|k| k.reading_word().to_string()).collect();
        let want: HashSet<String> =
            ["-1+0 -1+0 -1+0 -1+1 -0+1 -0+1 / 1 1 1 2 3 2", "-1+0 -1+0 -1+1 -1+1 -1+1 -0+1 / 1 1 2 2 1 3"]
                .into_iter()
                .map(String::from)
                .collect();
        assert_eq!(words, want);
    }

    #[test]
    fn reading_word_is_class_invariant() {
        for (l, n, m) in [("4,2", "5,3,1", "2,1"), ("7", "6", "3,2,1"), ("6,1", "4,3", "2,1"), ("2,1", "2,1", "2,1")] {
            for k in mu_classes(&p(l), &p(n), &c(m)) {
                let w = k.reading_word();
                for t in k.members() {
                    assert_eq!(reading_word_of(t, k.weight()), w);
                    assert_eq!(boundary_shapes(t, k.weight()), k.boundary_shapes());
                }
                let mut f = w.frames();
                f.sort_unstable();
                assert_eq!(f, frames(k.weight()));
            }
        }
    }

    #[test]
    fn class_from_one_member_matches_partition() {
        for k in mu_classes(&p("6,1"), &p("4,3"), &c("2,1")) {
            let again = class_of(&k.members()[0], k.weight()).unwrap();
            assert_eq!(again, k);
        }
    }

    #[test]
    fn maximal_depth_reading_word() {
        let l = p("6,4,3");
        let steps: Vec<Step> = [1, 1, 4, 4, 4, 1, 2, 2, 2, 3, 2, 3, 3].iter().map(|&i| Step::a(i)).collect();
        let t = KroneckerTableau::new(l, steps).unwrap();
        assert_eq!(t.end(), p("9,8,6,3"));
        let w = reading_word_of(&t, &c("5,5,3"));
        assert_eq!(w.frames(), vec![2, 1, 1, 3, 2, 2, 2, 3, 3, 2, 1, 1, 1]);
        assert!(!is_lattice(&w.frames()));
        let k = class_of(&t, &c("5,5,3")).unwrap();
        assert!(k.is_semistandard());
        assert_eq!(k.reading_word(), w);
    }

    #[test]
    fn stacked_boxes_in_a_frame_are_not_semistandard() {
        let classes = mu_classes(&Partition::empty(), &p("2,2"), &c("2,2"));
        assert_eq!(classes.len(), 2);
        assert_eq!(classes.iter().filter(|k| k.is_semistandard()).count(), 1);
        assert_eq!(count_sstd(&Partition::empty(), &p("2,2"), &c("2,2")), ssyt_count(&p("2,2"), &c("2,2")));
    }

    #[test]
    fn maximal_depth_classes_match_classical_tableaux() {
        for nu in partitions_up_to(6) {
            for lam in partitions_up_to(nu.size()).into_iter().filter(|l| nu.contains(l)) {
                let s = nu.size() - lam.size();
                for mu in partitions_of(s, None) {
                    let skew = skew_ssyt_words(&nu, &lam, &(&mu).into()).len();
                    assert_eq!(count_sstd(&lam, &nu, &(&mu).into()), skew, "{lam} {nu} {mu}");
                    assert_eq!(count_latticed(&lam, &nu, &mu), classical_lr(&lam, &nu, &mu).unwrap());
                }
            }
        }
    }

    #[test]
    fn classical_lr_agrees_with_characters() {
        for nu in partitions_up_to(6) {
            for lam in partitions_up_to(nu.size()).into_iter().filter(|l| nu.contains(l)) {
                for mu in partitions_of(nu.size() - lam.size(), None) {
                    let want = crate::oracle::lr(&lam, &mu, &nu).unwrap();
                    assert_eq!(
                        num_bigint::BigInt::from(classical_lr(&lam, &nu, &mu).unwrap()),
                        want,
                        "{lam} {nu} {mu}"
                    );
                }
            }
        }
        assert_eq!(classical_lr(&p("3,1"), &p("3,1"), &Partition::empty()).unwrap(), 1);
        assert!(classical_lr(&p("3"), &p("2,2"), &p("1")).is_err());
    }

    #[test]
    fn kostka_numbers() {
        assert_eq!(ssyt_count(&p("3,2,1"), &c("3,2,1")), 1);
        assert_eq!(ssyt_count(&p("4,2"), &c("3,2,1")), 2);
        assert_eq!(ssyt_count(&p("1,1"), &c("2")), 0);
        assert_eq!(ssyt_count(&p("3,2"), &c("1,1,1,1,1")), 5);
        // weight order does not matter
        assert_eq!(ssyt_count(&p("4,2"), &c("1,2,3")), ssyt_count(&p("4,2"), &c("3,2,1")));
    }

    #[test]
    fn weight_s_is_always_lattice() {
        for (l, n, s) in [("2,1", "2,1", 2), ("7", "6", 6), ("3,1", "2,2", 3)] {
            let m = Partition::new(vec![s]).unwrap();
            assert_eq!(count_latticed(&p(l), &p(n), &m), count_sstd(&p(l), &p(n), &(&m).into()));
        }
    }

    #[test]
    fn james_tree_for_321() {
        let tree = james_tree(&p("3,2,1"));
        let labels: Vec<String> = tree.terminals().iter().map(|&v| tree.path_label(v)).collect();
        assert_eq!(
            labels,
            ["a3a2a2", "a2r3a2a2", "r2r3a2a2", "a3r2a2", "a2r3r2a2", "r2r3r2a2", "a2r3r2^2", "r2r3r2^2"]
        );
        let shapes: Vec<Partition> = tree.terminals().iter().map(|&v| tree.terminal_shape(v).unwrap()).collect();
        assert_eq!(shapes.iter().filter(|s| **s == p("4,2")).count(), 2);
        assert_eq!(shapes.last(), Some(&p("6")));
        let dead = tree.nodes.iter().filter(|n| n.label == PairOfPartitions::Dead).count();
        assert_eq!(dead, 1);
        let single = james_tree(&p("4"));
        assert_eq!(single.terminals(), vec![0]);
    }

    #[test]
    fn terminals_count_kostka_numbers() {
        for s in 1..=7 {
            for mu in partitions_of(s, None) {
                let tree = james_tree(&mu);
                let mut counts: HashMap<Partition, usize> = HashMap::new();
                for v in tree.terminals() {
                    *counts.entry(tree.terminal_shape(v).unwrap()).or_default() += 1;
                }
                for tau in partitions_of(s, None) {
                    assert_eq!(counts.get(&tau).copied().unwrap_or(0), ssyt_count(&tau, &(&mu).into()), "{mu} {tau}");
                }
            }
        }
    }

    #[test]
    fn r_map_examples() {
        assert_eq!(r_map(&word("311122"), 3), word("211122"));
        assert_eq!(r_map(&word("211122"), 2), word("111122"));
        assert_eq!(r_map(&word("111222"), 2), word("111222"));
        assert_eq!(r_map(&word("21122"), 2), word("11122"));
        assert_eq!(r_map(&word("112122"), 2), word("112122"));
    }

    #[test]
    fn james_inverse_examples() {
        let tree = james_tree(&p("3,2,1"));
        let term = tree.terminals();
        let by_label = |l: &str| *term.iter().find(|&&v| tree.path_label(v) == l).unwrap();
        let (v1, v2) = (by_label("r2r3a2a2"), by_label("a2r3r2a2"));
        // the vertex just above the last r2 on the first path
        let parent = tree.nodes[v1].parent.unwrap();
        let PairOfPartitions::Pair { sharp, full } = &tree.nodes[parent].label else { panic!() };
        assert_eq!(r_map_inverse(&word("111122"), 2, sharp, full).unwrap(), word("211122"));
        for (from, to) in [("111122", "311122"), ("111221", "311221"), ("112112", "312112"), ("112211", "113221")] {
            assert_eq!(tree.pull_back(v1, &word(from)).unwrap(), word(to), "{from}");
        }
        for (from, to) in [("111122", "211132"), ("111221", "211321"), ("112112", "213112"), ("112211", "213211")] {
            assert_eq!(tree.pull_back(v2, &word(from)).unwrap(), word(to), "{from}");
        }
    }

    fn words_of_type(mu: &Composition) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut left = mu.parts().to_vec();
        let mut cur = Vec::new();
        fn rec(left: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, n: usize) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for i in 0..left.len() {
                if left[i] > 0 {
                    left[i] -= 1;
                    cur.push(i + 1);
                    rec(left, cur, out, n);
                    cur.pop();
                    left[i] += 1;
                }
            }
        }
        rec(&mut left, &mut cur, &mut out, mu.size());
        out
    }

    #[test]
    fn r_map_is_a_bijection_at_every_vertex() {
        for s in 2..=6 {
            for mu in partitions_of(s, None) {
                let tree = james_tree(&mu);
                for node in &tree.nodes {
                    let (Some(c), PairOfPartitions::Pair { sharp, full }) = (node.c, &node.label) else { continue };
                    let r_child = node.children[1];
                    let PairOfPartitions::Pair { sharp: s2, full: f2 } = &tree.nodes[r_child].label else { panic!() };
                    let bumped = add_box(sharp, c);
                    let domain: Vec<Vec<usize>> = words_of_type(full)
                        .into_iter()
                        .filter(|w| has_good(w, sharp) && !bumped.as_ref().is_some_and(|b| has_good(w, b)))
                        .collect();
                    let target: HashSet<Vec<usize>> =
                        words_of_type(f2).into_iter().filter(|w| has_good(w, s2)).collect();
                    let image: HashSet<Vec<usize>> = domain.iter().map(|w| r_map(w, c)).collect();
                    assert_eq!(image.len(), domain.len(), "{mu}: not injective at c={c}");
                    assert_eq!(image, target, "{mu}: image at c={c}");
                    for w in &target {
                        let u = r_map_inverse(w, c, sharp, full).unwrap();
                        assert_eq!(r_map(&u, c), *w);
                    }
                }
            }
        }
    }

    #[test]
    fn pulled_back_words_are_the_semistandard_words() {
        for (l, n, m) in [
            ("7", "6", "3,2,1"),
            ("6,1", "4,3", "2,1"),
            ("6,1", "4,3", "1,1,1"),
            ("5,3", "4,2", "2,1"),
            ("5,3", "4,2", "1,1,1"),
        ] {
            let (l, n, m) = (p(l), p(n), p(m));
            assert!(is_copieri(&l, &n, m.size()), "{l} {n} {m}");
            let pulled = pull_back_latticed(&l, &n, &m).unwrap();
            let distinct: HashSet<&ReadingWord> = pulled.iter().collect();
            assert_eq!(distinct.len(), pulled.len());
            let want: HashSet<ReadingWord> = mu_classes(&l, &n, &(&m).into())
                .iter()
                .filter(|k| k.is_semistandard())
                .map(|k| k.reading_word())
                .collect();
            assert_eq!(distinct, want.iter().collect::<HashSet<_>>(), "{l} {n} {m}");
        }
    }

    #[test]
    fn stable_kronecker_bounds_and_applicability() {
        assert_eq!(stable_kronecker(&p("1"), &p("1"), &p("4")).unwrap(), 0);
        let all_std = enumerate_std(&p("1,1"), &p("1,1"), 2);
        assert_eq!(all_std.len(), 8);
        assert_eq!(stable_kronecker(&p("1,1"), &p("1,1"), &p("2")), Err(Error::NotApplicable));
    }
}
