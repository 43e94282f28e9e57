//! Exact arithmetic in the partition algebra `P_r(n)` with coefficients in
//! `Z[n]`.
//!
//! Points `1..r` form the southern (bottom) row and `1'..r'` the northern
//! (top) row. In a product `x·y` the diagram `x` sits on top of `y`; each
//! component left floating in the middle row contributes a factor `n`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::branching::{is_dvir, maximal_tableau, KroneckerTableau, Step};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A polynomial in `n` with integer coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly(Vec<BigInt>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: i64) -> Self {
        Poly(vec![BigInt::from(c)]).trimmed()
    }

    /// `n^k`.
    pub fn monomial(k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::one();
        Poly(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    /// Multiplies by `n^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        Poly(v)
    }

    pub fn eval(&self, n: i64) -> BigInt {
        let n = BigInt::from(n);
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * &n + c)
    }

    fn add_assign_ref(&mut self, other: &Poly) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), BigInt::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
        let t = std::mem::take(self).trimmed();
        *self = t;
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly(v).trimmed()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "n")?,
                (1, false) => write!(f, "{a}n")?,
                (_, true) => write!(f, "n^{k}")?,
                (_, false) => write!(f, "{a}n^{k}")?,
            }
        }
        Ok(())
    }
}

/// A set partition of the `2r` points, stored as canonical block labels:
/// entry `i < r` is the southern point `i + 1`, entry `r + i` the northern
/// point `(i + 1)'`, and labels are numbered by first occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    r: usize,
    labels: Vec<u16>,
}

/// One of the `2r` points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    South(usize),
    North(usize),
}

impl Diagram {
    fn canonical(r: usize, raw: &[usize]) -> Diagram {
        let mut map: Vec<Option<u16>> = vec![None; raw.iter().max().map_or(0, |m| m + 1)];
        let mut next = 0u16;
        let labels = raw
            .iter()
            .map(|&x| {
                *map[x].get_or_insert_with(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        Diagram { r, labels }
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    fn index(&self, p: Point) -> usize {
        match p {
            Point::South(i) => i - 1,
            Point::North(i) => self.r + i - 1,
        }
    }

    fn point(&self, idx: usize) -> Point {
        if idx < self.r {
            Point::South(idx + 1)
        } else {
            Point::North(idx - self.r + 1)
        }
    }

    pub fn from_blocks(r: usize, blocks: &[Vec<Point>]) -> Result<Diagram> {
        let mut raw = vec![usize::MAX; 2 * r];
        for (b, block) in blocks.iter().enumerate() {
            for &p in block {
                let i = match p {
                    Point::South(i) | Point::North(i) if i == 0 || i > r => {
                        return Err(Error::IndexOutOfRange { index: i, max: r })
                    }
                    Point::South(i) => i - 1,
                    Point::North(i) => r + i - 1,
                };
                if raw[i] != usize::MAX {
                    return Err(Error::Parse { input: format!("{p:?}"), reason: "point in two blocks".into() });
                }
                raw[i] = b;
            }
        }
        if raw.contains(&usize::MAX) {
            return Err(Error::Parse { input: format!("{blocks:?}"), reason: "blocks do not cover all points".into() });
        }
        Ok(Diagram::canonical(r, &raw))
    }

    pub fn identity(r: usize) -> Diagram {
        let raw: Vec<usize> = (0..r).chain(0..r).collect();
        Diagram::canonical(r, &raw)
    }

    /// Blocks ordered by least point, points ordered southern first.
    pub fn blocks(&self) -> Vec<Vec<Point>> {
        let nblocks = self.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        let mut out = vec![Vec::new(); nblocks];
        for (i, &l) in self.labels.iter().enumerate() {
            out[l as usize].push(self.point(i));
        }
        let mut out: Vec<Vec<Point>> = out.into_iter().filter(|b| !b.is_empty()).collect();
        out.sort();
        out
    }

    pub fn same_block(&self, a: Point, b: Point) -> bool {
        self.labels[self.index(a)] == self.labels[self.index(b)]
    }

    pub fn is_singleton(&self, p: Point) -> bool {
        let l = self.labels[self.index(p)];
        self.labels.iter().filter(|&&x| x == l).count() == 1
    }

    /// Top-bottom reflection.
    pub fn star(&self) -> Diagram {
        let r = self.r;
        let raw: Vec<usize> = (0..2 * r).map(|i| self.labels[(i + r) % (2 * r)] as usize).collect();
        Diagram::canonical(r, &raw)
    }

    /// `self` stacked on top of `below`; returns the reduced diagram and the
    /// number of closed middle components.
    pub fn multiply(&self, below: &Diagram) -> Result<(Diagram, usize)> {
        let r = self.r;
        if below.r != r {
            return Err(Error::RankMismatch(r, below.r));
        }
        // nodes: 0..r top, r..2r middle, 2r..3r bottom
        let mut uf = UnionFind::new(3 * r);
        let mut first = vec![usize::MAX; 2 * r + 1];
        for (i, &l) in self.labels.iter().enumerate() {
            let node = if i < r { r + i } else { i - r };
            let slot = &mut first[l as usize];
            if *slot == usize::MAX {
                *slot = node;
            } else {
                uf.union(*slot, node);
            }
        }
        let mut first = vec![usize::MAX; 2 * r + 1];
        for (i, &l) in below.labels.iter().enumerate() {
            let node = if i < r { 2 * r + i } else { i };
            let slot = &mut first[l as usize];
            if *slot == usize::MAX {
                *slot = node;
            } else {
                uf.union(*slot, node);
            }
        }
        let raw: Vec<usize> = (0..2 * r).map(|i| uf.find(if i < r { 2 * r + i } else { i - r })).collect();
        let mut outer = vec![false; 3 * r];
        for &x in &raw {
            outer[x] = true;
        }
        let mut loops = 0;
        let mut seen = vec![false; 3 * r];
        for m in r..2 * r {
            let root = uf.find(m);
            if !outer[root] && !seen[root] {
                seen[root] = true;
                loops += 1;
            }
        }
        Ok((Diagram::canonical(r, &raw), loops))
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut x = x;
        while self.0[x] != root {
            let next = self.0[x];
            self.0[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in self.blocks() {
            let pts: Vec<String> = block
                .iter()
                .map(|p| match p {
                    Point::South(i) => format!("{i}"),
                    Point::North(i) => format!("{i}'"),
                })
                .collect();
            write!(f, "{{{}}}", pts.join(","))?;
        }
        Ok(())
    }
}

/// Parses `{1,2'}{2}{1'}`; the rank is the largest index mentioned.
impl FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        let mut blocks = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('{').ok_or_else(|| err("expected '{'"))?;
            let end = body.find('}').ok_or_else(|| err("expected '}'"))?;
            let mut block = Vec::new();
            for tok in body[..end].split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let (num, north) = match tok.strip_suffix('\'') {
                    Some(n) => (n, true),
                    None => (tok, false),
                };
                let i: usize = num.parse().map_err(|_| err("bad point"))?;
                block.push(if north { Point::North(i) } else { Point::South(i) });
            }
            blocks.push(block);
            rest = body[end + 1..].trim_start();
        }
        let r = blocks
            .iter()
            .flatten()
            .map(|p| match p {
                Point::South(i) | Point::North(i) => *i,
            })
            .max()
            .unwrap_or(0);
        Diagram::from_blocks(r, &blocks)
    }
}

/// A finite `Z[n]`-combination of diagrams of a fixed rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    r: usize,
    terms: BTreeMap<Diagram, Poly>,
}

impl AlgebraElement {
    pub fn zero(r: usize) -> Self {
        AlgebraElement { r, terms: BTreeMap::new() }
    }

    pub fn one(r: usize) -> Self {
        Self::from(Diagram::identity(r))
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Poly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &Diagram) -> Poly {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, d: Diagram, c: &Poly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = AlgebraElement::zero(self.r);
        for (d, p) in &self.terms {
            out.add_term(d.clone(), &(p * c));
        }
        out
    }

    pub fn star(&self) -> Self {
        let mut out = AlgebraElement::zero(self.r);
        for (d, p) in &self.terms {
            out.add_term(d.star(), p);
        }
        out
    }

    /// Replaces `n` by an integer.
    pub fn specialize(&self, n: i64) -> BTreeMap<Diagram, BigInt> {
        self.terms.iter().map(|(d, p)| (d.clone(), p.eval(n))).filter(|(_, c)| !c.is_zero()).collect()
    }
}

impl From<Diagram> for AlgebraElement {
    fn from(d: Diagram) -> Self {
        let mut terms = BTreeMap::new();
        let r = d.r;
        terms.insert(d, Poly::constant(1));
        AlgebraElement { r, terms }
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.r, rhs.r, "rank mismatch");
        let mut out = self.clone();
        for (d, p) in &rhs.terms {
            out.add_term(d.clone(), p);
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.r, rhs.r, "rank mismatch");
        let mut out = self.clone();
        for (d, p) in &rhs.terms {
            out.add_term(d.clone(), &-p);
        }
        out
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.r, rhs.r, "rank mismatch");
        let mut out = AlgebraElement::zero(self.r);
        for (x, p) in &self.terms {
            for (y, q) in &rhs.terms {
                let (d, loops) = x.multiply(y).expect("equal ranks");
                out.add_term(d, &(p * q).shift(loops));
            }
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (d, p) in &self.terms {
            writeln!(f, "({p}) * {d}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `s_k`: swaps strands `k` and `k + 1`.
    S,
    /// `p_k`: isolates `k` and `k'`.
    P,
    /// `p_{k+½}`: joins `k, k+1, k', (k+1)'`.
    PHalf,
}

/// The generators of `P_r(n)`.
///
/// ```
/// use kronecker_tableaux::diagalg::{generator, Generator};
/// assert_eq!(generator(Generator::PHalf, 1, 2).unwrap().to_string(), "{1,2,1',2'}");
/// assert_eq!(generator(Generator::S, 1, 2).unwrap().to_string(), "{1,2'}{2,1'}");
/// assert_eq!(generator(Generator::P, 2, 2).unwrap().to_string(), "{1,1'}{2}{2'}");
/// ```
pub fn generator(kind: Generator, k: usize, r: usize) -> Result<Diagram> {
    let max = if kind == Generator::P { r } else { r.saturating_sub(1) };
    if k == 0 || k > max {
        return Err(Error::IndexOutOfRange { index: k, max });
    }
    let mut raw: Vec<usize> = (0..r).chain(0..r).collect();
    let (a, b) = (k - 1, k);
    match kind {
        Generator::S => {
            raw[r + a] = b;
            raw[r + b] = a;
        }
        Generator::P => {
            raw[a] = r;
            raw[r + a] = r + 1;
        }
        Generator::PHalf => {
            raw[b] = a;
            raw[r + b] = a;
        }
    }
    Ok(Diagram::canonical(r, &raw))
}

fn gen_el(kind: Generator, k: usize, r: usize) -> AlgebraElement {
    AlgebraElement::from(generator(kind, k, r).expect("generator index in range"))
}

fn product(r: usize, factors: impl IntoIterator<Item = AlgebraElement>) -> AlgebraElement {
    factors.into_iter().fold(AlgebraElement::one(r), |acc, f| &acc * &f)
}

/// `e_k^{(l)} = p_{k−l+1} ⋯ p_k`; the identity when `k = 0` or `l = 0`.
pub fn e_int(k: usize, l: usize, r: usize) -> AlgebraElement {
    if k == 0 || l == 0 {
        return AlgebraElement::one(r);
    }
    product(r, (k + 1 - l..=k).map(|i| gen_el(Generator::P, i, r)))
}

/// `e_{k+½}^{(l)} = p_{k−l+3/2} ⋯ p_{k+½}`, i.e. `p_{i+½}` for `i = k−l+1..=k`.
pub fn e_half(k: usize, l: usize, r: usize) -> AlgebraElement {
    if l == 0 {
        return AlgebraElement::one(r);
    }
    product(r, (k + 1 - l..=k).map(|i| gen_el(Generator::PHalf, i, r)))
}

/// `s_{l,k} = s_l ⋯ s_{k−1}` for `l < k`, its inverse `s_{l−1} ⋯ s_k` for
/// `l > k`; the identity if `l = k` or either index is 0, zero if either is
/// negative.
pub fn s_range(l: i64, k: i64, r: usize) -> AlgebraElement {
    if l < 0 || k < 0 {
        return AlgebraElement::zero(r);
    }
    if l == 0 || k == 0 || l == k {
        return AlgebraElement::one(r);
    }
    let (l, k) = (l as usize, k as usize);
    if l < k {
        product(r, (l..k).map(|i| gen_el(Generator::S, i, r)))
    } else {
        product(r, (k..l).rev().map(|i| gen_el(Generator::S, i, r)))
    }
}

/// `Σ_{i=0}^{ν_b−1} s_{[ν]_b − i, [ν]_b}`, the identity for `b = 0`.
fn m_sum(nu: &Partition, b: usize, r: usize) -> AlgebraElement {
    if b == 0 {
        return AlgebraElement::one(r);
    }
    let top = nu.partial_sum(b) as i64;
    let mut out = AlgebraElement::zero(r);
    for i in 0..nu.part(b) as i64 {
        out = &out + &s_range(top - i, top, r);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
    /// `t(k) → t(k + ½)`.
    First,
    /// `t(k + ½) → t(k + 1)`.
    Second,
}

fn require_rooted(t: &KroneckerTableau) -> Result<()> {
    if !t.start().is_empty() {
        return Err(Error::ShapeMismatch(format!("path must start at the empty partition, got {}", t.start())));
    }
    Ok(())
}

/// Branching coefficient of the step leaving integral level `k` (0-indexed,
/// so `0 ≤ k < r`) of a path `t ∈ Std_r(ν)`.
pub fn branching_coeff(t: &KroneckerTableau, k: usize, dir: Direction, half: Half) -> Result<AlgebraElement> {
    require_rooted(t)?;
    let r = t.len();
    if k >= r {
        return Err(Error::IndexOutOfRange { index: k, max: r.saturating_sub(1) });
    }
    let shapes = t.shapes();
    let (lam, mu, nu) = (&shapes[2 * k], &shapes[2 * k + 1], &shapes[2 * k + 2]);
    let Step { remove: a, add: b } = t.steps()[k];
    let (sl, sm, sn) = (lam.size(), mu.size(), nu.size());
    let el = match (dir, half) {
        (Direction::Up, Half::First) => &e_half(k, k - sm, r) * &s_range(sl as i64, lam.partial_sum(a) as i64, r),
        (Direction::Up, Half::Second) => {
            let nb = nu.partial_sum(b) as i64;
            &(&e_int(k + 1, k + 1 - sn, r) * &m_sum(nu, b, r)) * &s_range(nb, sn as i64, r)
        }
        (Direction::Down, Half::First) => {
            let la = lam.partial_sum(a) as i64;
            &(&e_int(k, k - sl, r) * &m_sum(lam, a, r)) * &s_range(la, sl as i64, r)
        }
        (Direction::Down, Half::Second) => &e_half(k, k - sm, r) * &s_range(sn as i64, nu.partial_sum(b) as i64, r),
    };
    Ok(el)
}

/// `u_t = u_{t(r−½)→t(r)} ⋯ u_{t(½)→t(1)} u_{t(0)→t(½)}`.
pub fn murphy_u(t: &KroneckerTableau) -> Result<AlgebraElement> {
    require_rooted(t)?;
    let r = t.len();
    let mut acc = AlgebraElement::one(r);
    for k in 0..r {
        let step =
            &branching_coeff(t, k, Direction::Up, Half::Second)? * &branching_coeff(t, k, Direction::Up, Half::First)?;
        acc = &step * &acc;
    }
    Ok(acc)
}

/// `d_t = d_{t(0)→t(½)} d_{t(½)→t(1)} ⋯ d_{t(r−½)→t(r)}`.
pub fn murphy_d(t: &KroneckerTableau) -> Result<AlgebraElement> {
    require_rooted(t)?;
    let r = t.len();
    let mut acc = AlgebraElement::one(r);
    for k in 0..r {
        acc = &acc * &branching_coeff(t, k, Direction::Down, Half::First)?;
        acc = &acc * &branching_coeff(t, k, Direction::Down, Half::Second)?;
    }
    Ok(acc)
}

/// Both sides of `u_t s_{k,k+1} = u_{t'} + u_{e_k(t)} − u_{e_k(t')}` with
/// `t' = t_{k↔k+1}` and undefined error paths read as zero.
pub fn thm33_sides(t: &KroneckerTableau, k: usize) -> Result<(AlgebraElement, AlgebraElement)> {
    use crate::branching::{error_path, swap_adjacent};
    require_rooted(t)?;
    let r = t.len();
    let swapped = swap_adjacent(t, k)?.ok_or(Error::SwapUndefined)?;
    let lhs = &murphy_u(t)? * &AlgebraElement::from(generator(Generator::S, k, r)?);
    let mut rhs = murphy_u(&swapped)?;
    if let Some(e) = error_path(t, k)? {
        rhs = &rhs + &murphy_u(&e)?;
    }
    if let Some(e) = error_path(&swapped, k)? {
        rhs = &rhs - &murphy_u(&e)?;
    }
    Ok((lhs, rhs))
}

/// Checks the action of `s_{k,k+1}` on `u_t` identically in `n`.
pub fn verify_thm33(t: &KroneckerTableau, k: usize) -> Result<bool> {
    let (lhs, rhs) = thm33_sides(t, k)?;
    Ok(lhs == rhs)
}

/// `u_{t^λ ∘ t}` for a path `t` starting at λ, inside `P_{|λ|+s}(n)`.
pub fn skew_u(t: &KroneckerTableau) -> Result<AlgebraElement> {
    let lam = t.start();
    let full = maximal_tableau(lam, lam.size()).compose(t)?;
    murphy_u(&full)
}

/// Number of blocks meeting both the last `s` southern points and the
/// remaining points (all northern points and the first `r − s` southern).
pub fn cross_blocks(d: &Diagram, s: usize) -> usize {
    let r = d.rank();
    d.blocks()
        .iter()
        .filter(|b| {
            let tail = b.iter().any(|p| matches!(p, Point::South(i) if *i > r - s));
            let rest = b.iter().any(|p| match p {
                Point::South(i) => *i <= r - s,
                Point::North(_) => true,
            });
            tail && rest
        })
        .count()
}

/// For `t` in the Dvir radical, every diagram of `u_{t^λ∘t}` has at most
/// `s − 1` blocks joining the last `s` southern points to the rest.
pub fn dvir_diagram_check(t: &KroneckerTableau) -> Result<bool> {
    if is_dvir(t).is_none() {
        return Err(Error::NotDvir);
    }
    let s = t.len();
    let u = skew_u(t)?;
    let ok = u.terms().all(|(d, _)| cross_blocks(d, s) < s);
    Ok(ok)
}
