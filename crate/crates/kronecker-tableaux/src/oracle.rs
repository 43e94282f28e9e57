//! Kronecker and Littlewood–Richardson coefficients from symmetric group
//! characters. Nothing here uses tableaux; it is the reference the
//! combinatorics is checked against.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};

/// A conjugacy class of `S_n`, named by its cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(rho: Partition) -> Self {
        CycleType(rho)
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    /// `z_ρ = Π i^{m_i} m_i!`.
    pub fn centralizer(&self) -> BigInt {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &p in self.0.parts() {
            *counts.entry(p).or_default() += 1;
        }
        let mut z = BigInt::one();
        for (i, m) in counts {
            for j in 1..=m {
                z *= BigInt::from(i) * BigInt::from(j);
            }
        }
        z
    }

    /// `n! / z_ρ`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.0.size()) / self.centralizer()
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

type Key = (Vec<u8>, Vec<u8>);

fn memo() -> &'static Mutex<HashMap<Key, i128>> {
    static MEMO: OnceLock<Mutex<HashMap<Key, i128>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Drops every memoized character value.
pub fn clear_character_cache() {
    memo().lock().expect("character memo poisoned").clear();
}

fn to_key(v: &[usize]) -> Vec<u8> {
    v.iter().map(|&x| u8::try_from(x).expect("part too large for the character memo")).collect()
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule, stripping the largest cycle first.
///
/// ```
/// use kronecker_tableaux::oracle::mn_character;
/// let p = |s: &str| s.parse().unwrap();
/// assert_eq!(mn_character(&p("2,1"), &p("1,1,1")).unwrap(), 2);
/// assert_eq!(mn_character(&p("2,1"), &p("3")).unwrap(), -1);
/// ```
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i128> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{rho}|")));
    }
    Ok(character(lambda.parts(), rho.parts()))
}

fn character(lambda: &[usize], rho: &[usize]) -> i128 {
    if rho.is_empty() {
        return 1;
    }
    let key = (to_key(lambda), to_key(rho));
    if let Some(&v) = memo().lock().expect("character memo poisoned").get(&key) {
        return v;
    }
    let h = rho[0];
    let l = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    let mut total = 0i128;
    for (i, &b) in beta.iter().enumerate() {
        if b < h || beta.contains(&(b - h)) {
            continue;
        }
        let target = b - h;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = next.iter().enumerate().map(|(j, &x)| x + j + 1 - l).filter(|&p| p > 0).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * character(&shape, &rho[1..]);
    }
    memo().lock().expect("character memo poisoned").insert(key, total);
    total
}

/// `g(λ, ν, μ) = (1/n!) Σ_ρ |C_ρ| χ^λ(ρ) χ^ν(ρ) χ^μ(ρ)`.
///
/// ```
/// use kronecker_tableaux::oracle::kronecker;
/// let p = |s: &str| s.parse().unwrap();
/// assert_eq!(kronecker(&p("4,2,1"), &p("4,2,1"), &p("6,1")).unwrap(), 2u32.into());
/// ```
pub fn kronecker(lambda: &Partition, nu: &Partition, mu: &Partition) -> Result<BigInt> {
    let n = lambda.size();
    if nu.size() != n || mu.size() != n {
        return Err(Error::SizeMismatch(format!("{lambda}, {nu}, {mu}")));
    }
    let mut sum = BigInt::zero();
    for rho in partitions_of(n, None) {
        let c = character(lambda.parts(), rho.parts());
        if c == 0 {
            continue;
        }
        let prod = BigInt::from(c) * character(nu.parts(), rho.parts()) * character(mu.parts(), rho.parts());
        if !prod.is_zero() {
            sum += prod * CycleType::new(rho).class_size();
        }
    }
    let nf = factorial(n);
    assert!((&sum % &nf).is_zero(), "non-integral Kronecker coefficient for {lambda}, {nu}, {mu}");
    Ok(sum / nf)
}

/// Littlewood–Richardson coefficient `c(α, β; λ)`: the multiplicity of
/// `S(λ)` in the induction of `S(α) ⊠ S(β)`, from characters of
/// `S_a × S_b`.
pub fn lr(alpha: &Partition, beta: &Partition, lambda: &Partition) -> Result<BigInt> {
    let (a, b) = (alpha.size(), beta.size());
    if a + b != lambda.size() {
        return Err(Error::SizeMismatch(format!("|{alpha}| + |{beta}| != |{lambda}|")));
    }
    if !lambda.contains(alpha) || !lambda.contains(beta) {
        return Ok(BigInt::zero());
    }
    let rhos: Vec<(Partition, i128, BigInt)> = partitions_of(a, None)
        .into_iter()
        .map(|r| {
            let c = character(alpha.parts(), r.parts());
            let size = CycleType::new(r.clone()).class_size();
            (r, c, size)
        })
        .filter(|(_, c, _)| *c != 0)
        .collect();
    let mut sum = BigInt::zero();
    for sigma in partitions_of(b, None) {
        let cb = character(beta.parts(), sigma.parts());
        if cb == 0 {
            continue;
        }
        let sigma_size = CycleType::new(sigma.clone()).class_size();
        for (rho, ca, rho_size) in &rhos {
            let mut joined: Vec<usize> = rho.parts().iter().chain(sigma.parts()).copied().collect();
            joined.sort_unstable_by(|x, y| y.cmp(x));
            let cl = character(lambda.parts(), &joined);
            if cl != 0 {
                sum += BigInt::from(*ca * cb) * cl * rho_size * &sigma_size;
            }
        }
    }
    let denom = factorial(a) * factorial(b);
    assert!((&sum % &denom).is_zero(), "non-integral LR coefficient");
    Ok(sum / denom)
}

/// Partitions of `n` obtained from μ by adding a horizontal strip, in
/// reverse lexicographic order.
pub fn p_set(n: usize, mu: &Partition) -> Vec<Partition> {
    if n < mu.size() {
        return Vec::new();
    }
    let l = mu.len();
    // β_{i+1} ranges over [μ_{i+1}, μ_i] for i = 1..=l, β_1 takes the rest
    let mut out = Vec::new();
    let mut tail = vec![0usize; l];
    fn rec(i: usize, mu: &Partition, n: usize, tail: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let l = mu.len();
        if i == l {
            let used: usize = tail.iter().sum();
            if used > n || n - used < mu.part(1) {
                return;
            }
            let mut parts = vec![n - used];
            parts.extend(tail.iter().copied());
            out.push(
                Partition::new(parts.into_iter().filter(|&p| p > 0).collect::<Vec<_>>())
                    .expect("interlacing gives a partition"),
            );
            return;
        }
        for v in (mu.part(i + 2)..=mu.part(i + 1)).rev() {
            tail[i] = v;
            rec(i + 1, mu, n, tail, out);
        }
    }
    if l == 0 {
        return vec![Partition::new(if n > 0 { vec![n] } else { vec![] }).expect("one row")];
    }
    rec(0, mu, n, &mut tail, &mut out);
    out.sort_by(|a, b| b.parts().cmp(a.parts()));
    out
}

/// Result of following `g(λ_[n], ν_[n], μ_[n])` as `n` grows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableValue {
    pub value: BigInt,
    /// First `n` of the observed constant tail.
    pub onset_n: usize,
    /// True when the cap was reached before two consecutive values agreed;
    /// `value` is then the last one computed.
    pub capped: bool,
}

pub fn first_n(lambda: &Partition, nu: &Partition, mu: &Partition) -> usize {
    [lambda, nu, mu].iter().map(|p| p.size() + p.part(1)).max().unwrap_or(0)
}

pub fn default_cap(lambda: &Partition, nu: &Partition, mu: &Partition) -> usize {
    first_n(lambda, nu, mu) + lambda.size() + nu.size() + mu.size() + 8
}

/// Follows the padded coefficients from `n₀ = max(|λ|+λ₁, |ν|+ν₁, |μ|+μ₁)`
/// until two consecutive values agree at some `n ≥ |λ|+|ν|+|μ|`, or `cap`.
pub fn stable_kronecker_probe(lambda: &Partition, nu: &Partition, mu: &Partition, cap: usize) -> StableValue {
    let n0 = first_n(lambda, nu, mu);
    let total = lambda.size() + nu.size() + mu.size();
    let mut prev: Option<BigInt> = None;
    let mut onset = n0;
    let mut n = n0;
    loop {
        let v = kronecker(&lambda.pad(n).expect("n >= n0"), &nu.pad(n).expect("n >= n0"), &mu.pad(n).expect("n >= n0"))
            .expect("padded sizes agree");
        if prev.as_ref() != Some(&v) {
            onset = n;
        } else if n >= total {
            return StableValue { value: v, onset_n: onset, capped: false };
        }
        if n >= cap {
            return StableValue { value: v, onset_n: onset, capped: true };
        }
        prev = Some(v);
        n += 1;
    }
}

/// The stable Kronecker coefficient `ḡ(λ, ν, μ)` by direct computation.
///
/// ```
/// use kronecker_tableaux::oracle::stable_kronecker_oracle;
/// let p = |s: &str| s.parse().unwrap();
/// let v = stable_kronecker_oracle(&p("1"), &p("1"), &p("1"), None).unwrap();
/// assert_eq!(v.value, 1u32.into());
/// ```
pub fn stable_kronecker_oracle(
    lambda: &Partition,
    nu: &Partition,
    mu: &Partition,
    cap: Option<usize>,
) -> Result<StableValue> {
    let cap = cap.unwrap_or_else(|| default_cap(lambda, nu, mu));
    let v = stable_kronecker_probe(lambda, nu, mu, cap);
    if v.capped {
        return Err(Error::BudgetExceeded { cap });
    }
    Ok(v)
}

/// Dvir's recursion evaluated on one triple of partitions of `n`:
/// `Σ_α g(λ⊖α, ν⊖α, μ) − Σ_{β ∈ P(n,μ), β ≠ μ_[n]} g(λ, ν, β)` where `μ` is
/// `μ_[n]` without its first row and `α ⊢ n − |μ|` runs over `α ⊆ λ ∩ ν`.
/// The skew terms expand each skew Specht module by character-based
/// Littlewood–Richardson coefficients.
pub fn dvir_step(lambda_n: &Partition, nu_n: &Partition, mu_n: &Partition) -> Result<BigInt> {
    let n = lambda_n.size();
    if nu_n.size() != n || mu_n.size() != n {
        return Err(Error::SizeMismatch(format!("{lambda_n}, {nu_n}, {mu_n}")));
    }
    let mu = mu_n.strip_first();
    let s = mu.size();
    let meet = lambda_n.intersect(nu_n);
    let taus = partitions_of(s, None);
    let mut total = BigInt::zero();
    for alpha in partitions_of(n - s, None).into_iter().filter(|a| meet.contains(a)) {
        let left: Vec<(Partition, BigInt)> = taus
            .iter()
            .map(|t| (t.clone(), lr(&alpha, t, lambda_n).expect("sizes add up")))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let right: Vec<(Partition, BigInt)> = taus
            .iter()
            .map(|t| (t.clone(), lr(&alpha, t, nu_n).expect("sizes add up")))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (tau, a) in &left {
            for (sigma, b) in &right {
                total += a * b * kronecker(tau, sigma, &mu)?;
            }
        }
    }
    for beta in p_set(n, &mu) {
        if &beta != mu_n {
            total -= kronecker(lambda_n, nu_n, &beta)?;
        }
    }
    Ok(total)
}
