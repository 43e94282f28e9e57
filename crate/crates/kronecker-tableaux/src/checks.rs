//! Sweep drivers shared by `kron verify` and the acceptance tests. Each one
//! returns a [`Report`] instead of panicking so callers can print every
//! failure.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;

use crate::branching::{enumerate_std, is_dvir, swap_adjacent, KroneckerTableau};
use crate::diagalg::{cross_blocks, dvir_diagram_check, skew_u, verify_thm33, AlgebraElement, Diagram};
use crate::error::Error;
use crate::oracle::{factorial, kronecker, mn_character, stable_kronecker_oracle, stable_kronecker_probe, CycleType};
use crate::partitions::{
    is_copieri, is_maximal_depth, partitions_of, partitions_up_to, within_bounds, Composition, Partition,
};
use crate::tableaux::{
    class_of, classical_lr, count_latticed, count_sstd, is_lattice, is_lattice_by_prefix, latticed_classes, mu_classes,
    pull_back_latticed, reading_word_of, ssyt_count, stable_kronecker, ReadingWord,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    fn new(name: &'static str) -> Self {
        Report { name, checked: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(f, "{}: {} checked, {} failed ({status})", self.name, self.checked, self.failures.len())
    }
}

/// Sweep limits. The defaults are the acceptance sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest `|λ|`, `|ν|`, `|μ|` in the oracle and decomposition sweeps.
    pub max_size: usize,
    /// Largest `s` in the decomposition sweep.
    pub max_s: usize,
    /// Largest `|ν|` in the maximal-depth sweep.
    pub max_depth_size: usize,
    /// Largest rank for the `s_{k,k+1}` action check.
    pub thm33_r: usize,
    /// Largest `|λ|` and `s` for the radical diagram check.
    pub dvir_size: usize,
    pub n_cap: Option<usize>,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_size: 5, max_s: 5, max_depth_size: 7, thm33_r: 3, dvir_size: 3, n_cap: None }
    }
}

impl Bounds {
    /// Bounds where every size-indexed sweep is cut to `k`; the maximal-depth
    /// sweep goes two boxes further.
    pub fn with_max_size(mut self, k: usize) -> Self {
        self.max_size = k;
        self.max_s = self.max_s.min(k);
        self.max_depth_size = k + 2;
        self.dvir_size = self.dvir_size.min(k);
        self
    }
}

fn p(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

/// One known value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Golden {
    /// `ḡ(λ, ν, μ)`, checked against both the tableaux count and the oracle.
    Stable { lambda: &'static str, nu: &'static str, mu: &'static str, value: usize },
    /// `|SStd⁰_s(ν \ λ, μ)|`.
    Semistandard { lambda: &'static str, nu: &'static str, mu: &'static str, value: usize },
    /// `|Latt⁰_s(ν \ λ, μ)|`.
    Latticed { lambda: &'static str, nu: &'static str, mu: &'static str, value: usize },
    /// `|Std_s(ν \ λ)|`.
    Standard { lambda: &'static str, nu: &'static str, s: usize, value: usize },
    /// Littlewood–Richardson coefficient `c(λ, μ; ν)`.
    Classical { lambda: &'static str, nu: &'static str, mu: &'static str, value: usize },
}

pub fn golden_values() -> Vec<Golden> {
    use Golden::*;
    let st = |lambda, nu, mu, value| Stable { lambda, nu, mu, value };
    vec![
        st("2,1", "3,3,2", "2,2,1", 1),
        st("4", "5", "2,2,1", 1),
        st("6,1", "4,3", "3", 3),
        st("6,1", "4,3", "2,1", 4),
        st("6,1", "4,3", "1,1,1", 1),
        st("6,2", "7,4", "4", 4),
        st("6,2", "7,4", "3,1", 7),
        st("6,2", "7,4", "2,2", 3),
        st("6,2", "7,4", "2,1,1", 3),
        st("6,2", "7,4", "1,1,1,1", 0),
        st("6,2", "7,4", "2,2,1", 11),
        st("5,3,3", "7,5,1,1", "2,2,1", 11),
        st("9,6,3", "9,6,3", "2,1", 60),
        st("7", "6", "4,3,1", 3),
        st("8,5,3", "6,5,3,2", "3", 6),
        st("8,5,3", "6,5,3,2", "2,1", 9),
        st("8,5,3", "6,5,3,2", "1,1,1", 3),
        Semistandard { lambda: "8,5,3", nu: "6,5,3,2", mu: "3", value: 6 },
        Semistandard { lambda: "8,5,3", nu: "6,5,3,2", mu: "2,1", value: 15 },
        Semistandard { lambda: "7", nu: "6", mu: "6", value: 3 },
        Semistandard { lambda: "7", nu: "6", mu: "3,2,1", value: 27 },
        Semistandard { lambda: "6,1", nu: "4,3", mu: "3", value: 3 },
        Semistandard { lambda: "6,1", nu: "4,3", mu: "2,1", value: 7 },
        Latticed { lambda: "7", nu: "6", mu: "3,2,1", value: 2 },
        Latticed { lambda: "7", nu: "6", mu: "4,2", value: 4 },
        Latticed { lambda: "6,1", nu: "4,3", mu: "3", value: 3 },
        Standard { lambda: "4,2", nu: "5,3,1", s: 3, value: 6 },
        Classical { lambda: "4,2", nu: "5,3,1", mu: "2,1", value: 2 },
    ]
}

/// Every known value, plus the three latticed words for `((7), (6), (4,3,1))`
/// with their orbit sizes 3, 12 and 4.
pub fn check_goldens(n_cap: Option<usize>) -> Report {
    let mut rep = Report::new("golden values");
    for g in golden_values() {
        match g {
            Golden::Stable { lambda, nu, mu, value } => {
                let (l, n, m) = (p(lambda), p(nu), p(mu));
                let got = stable_kronecker(&l, &n, &m);
                rep.check(got == Ok(value), || format!("stable_kronecker({l}, {n}, {m}) = {got:?}, want {value}"));
                let orc = stable_kronecker_oracle(&l, &n, &m, n_cap).map(|v| v.value);
                rep.check(orc == Ok(BigInt::from(value)), || format!("oracle({l}, {n}, {m}) = {orc:?}, want {value}"));
            }
            Golden::Semistandard { lambda, nu, mu, value } => {
                let (l, n, m) = (p(lambda), p(nu), mu.parse::<Composition>().expect("literal"));
                let got = count_sstd(&l, &n, &m);
                rep.check(got == value, || format!("|SStd({n} \\ {l}, {m})| = {got}, want {value}"));
            }
            Golden::Latticed { lambda, nu, mu, value } => {
                let (l, n, m) = (p(lambda), p(nu), p(mu));
                let got = count_latticed(&l, &n, &m);
                rep.check(got == value, || format!("|Latt({n} \\ {l}, {m})| = {got}, want {value}"));
            }
            Golden::Standard { lambda, nu, s, value } => {
                let (l, n) = (p(lambda), p(nu));
                let got = enumerate_std(&l, &n, s).len();
                rep.check(got == value, || format!("|Std_{s}({n} \\ {l})| = {got}, want {value}"));
            }
            Golden::Classical { lambda, nu, mu, value } => {
                let (l, n, m) = (p(lambda), p(nu), p(mu));
                let got = classical_lr(&l, &n, &m);
                rep.check(got == Ok(value), || format!("c({l}, {m}; {n}) = {got:?}, want {value}"));
            }
        }
    }
    let mut orbits: Vec<(Vec<usize>, usize)> =
        latticed_classes(&p("7"), &p("6"), &p("4,3,1")).iter().map(|c| (c.reading_word().frames(), c.len())).collect();
    orbits.sort();
    let want =
        vec![(vec![1, 1, 1, 1, 2, 3, 2, 2], 3), (vec![1, 1, 1, 2, 2, 1, 3, 2], 12), (vec![1, 1, 1, 2, 2, 2, 3, 1], 4)];
    rep.check(orbits == want, || format!("latticed words and orbit sizes for ((7),(6),(4,3,1)): {orbits:?}"));
    rep
}

/// Triples `(λ, ν, μ)` with all three sizes at most `k` that are co-Pieri or
/// of maximal depth and inside the degree window.
pub fn applicable_triples(k: usize) -> Vec<(Partition, Partition, Partition)> {
    let ps = partitions_up_to(k);
    let mut out = Vec::new();
    for l in &ps {
        for n in &ps {
            for m in &ps {
                let s = m.size();
                if within_bounds(l, n, s) && (is_copieri(l, n, s) || is_maximal_depth(l, n, s)) {
                    out.push((l.clone(), n.clone(), m.clone()));
                }
            }
        }
    }
    out
}

/// `count_latticed = stable_kronecker_oracle` on every applicable triple.
pub fn check_oracle_equivalence(bounds: &Bounds) -> Report {
    let mut rep = Report::new("oracle equivalence");
    for (l, n, m) in applicable_triples(bounds.max_size) {
        let got = count_latticed(&l, &n, &m);
        let orc = stable_kronecker_oracle(&l, &n, &m, bounds.n_cap).map(|v| v.value);
        rep.check(orc == Ok(BigInt::from(got)), || format!("({l}, {n}, {m}): tableaux {got}, oracle {orc:?}"));
    }
    rep
}

fn lit(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition")
}

/// Small Kronecker coefficients along growing first rows, and where the
/// `(n−3,2,1)` column becomes constant.
///
/// `(10,3)` and `(11,3)` give 2 and 3 against `(6,6,1),(6,4,3)` and
/// `(7,6,1),(7,4,3)`; `(10,2,1)` and `(11,2,1)` give 3 and 4. All four are
/// pinned.
pub fn check_stability() -> Report {
    let mut rep = Report::new("stability onset");
    for n in 7..=10 {
        let a = lit(&[n - 3, 2, 1]);
        let g = kronecker(&a, &a, &lit(&[n - 1, 1]));
        rep.check(g == Ok(BigInt::from(2)), || format!("g(({}), ({}), ({},1)) = {g:?}, want 2", a, a, n - 1));
    }
    type Case = (&'static [usize], &'static [usize], &'static [usize], i64);
    let cases: [Case; 4] = [
        (&[6, 6, 1], &[6, 4, 3], &[10, 2, 1], 3),
        (&[7, 6, 1], &[7, 4, 3], &[11, 2, 1], 4),
        (&[6, 6, 1], &[6, 4, 3], &[10, 3], 2),
        (&[7, 6, 1], &[7, 4, 3], &[11, 3], 3),
    ];
    for (a, b, c, want) in cases {
        let (a, b, c) = (lit(a), lit(b), lit(c));
        let g = kronecker(&a, &b, &c);
        rep.check(g == Ok(BigInt::from(want)), || format!("g({a}, {b}, {c}) = {g:?}, want {want}"));
    }
    let v = stable_kronecker_probe(&p("6,1"), &p("4,3"), &p("2,1"), 30);
    rep.check(!v.capped && v.value == BigInt::from(4) && v.onset_n == 14, || {
        format!("((6,1),(4,3),(2,1)) stabilises to {} from n = {} (capped {})", v.value, v.onset_n, v.capped)
    });
    rep
}

/// `stable_kronecker = classical_lr = oracle` on maximal-depth triples.
pub fn check_maximal_depth(bounds: &Bounds) -> Report {
    let mut rep = Report::new("maximal depth");
    for n in partitions_up_to(bounds.max_depth_size) {
        for l in partitions_up_to(n.size()).into_iter().filter(|l| n.contains(l)) {
            let s = n.size() - l.size();
            for m in partitions_of(s, None) {
                debug_assert!(is_maximal_depth(&l, &n, s));
                let t = stable_kronecker(&l, &n, &m);
                let c = classical_lr(&l, &n, &m);
                rep.check(t.is_ok() && t == c, || format!("({l}, {n}, {m}): tableaux {t:?}, classical {c:?}"));
                let o = stable_kronecker_oracle(&l, &n, &m, bounds.n_cap).map(|v| v.value);
                let want = c.map(BigInt::from);
                rep.check(o == want, || format!("({l}, {n}, {m}): oracle {o:?}, classical {want:?}"));
            }
        }
    }
    rep
}

/// The action of `s_{k,k+1}` on the Murphy basis, for every rank up to `r`.
pub fn check_thm33(r_max: usize) -> Report {
    let mut rep = Report::new("s_k action on Murphy basis");
    for r in 2..=r_max {
        for nu in partitions_up_to(r) {
            for t in enumerate_std(&Partition::empty(), &nu, r) {
                for k in 1..r {
                    match verify_thm33(&t, k) {
                        Err(Error::SwapUndefined) => {}
                        res => rep.check(res == Ok(true), || format!("r = {r}, t = {t}, k = {k}: {res:?}")),
                    }
                }
            }
        }
    }
    rep
}

/// Bell numbers by the Bell triangle.
pub fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().expect("nonempty")];
        for x in &row {
            let v = next.last().expect("nonempty") + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// `Σ_ν |Std_r(ν)|² = Bell(2r)`.
pub fn check_bell(r_max: usize) -> Report {
    let mut rep = Report::new("cellular dimension");
    for r in 1..=r_max {
        let total: u128 =
            partitions_up_to(r).iter().map(|nu| (enumerate_std(&Partition::empty(), nu, r).len() as u128).pow(2)).sum();
        let want = bell(2 * r);
        rep.check(total == want, || format!("r = {r}: {total}, Bell = {want}"));
    }
    rep
}

/// The path `d(2) a(2) r(2)` from `(2,1)` and its four-term expansion.
pub fn figure_instance() -> (KroneckerTableau, AlgebraElement) {
    let t = KroneckerTableau::new(
        p("2,1"),
        vec!["-2+2".parse().unwrap(), "-0+2".parse().unwrap(), "-2+0".parse().unwrap()],
    )
    .expect("valid path");
    let mut want = AlgebraElement::zero(6);
    for s in [
        "{2,1'}{1,2'}{3,4,6}{5,3'}{4'}{5'}{6'}",
        "{1,1'}{2,2'}{3,4,6}{5,3'}{4'}{5'}{6'}",
        "{2,1'}{1,2'}{3,4,3'}{5,6}{4'}{5'}{6'}",
        "{1,1'}{2,2'}{3,4,3'}{5,6}{4'}{5'}{6'}",
    ] {
        want = &want + &AlgebraElement::from(s.parse::<Diagram>().expect("literal diagram"));
    }
    (t, want)
}

/// Every radical path has too few blocks crossing into its last `s` points.
pub fn check_dvir(size: usize) -> Report {
    let mut rep = Report::new("radical diagrams");
    for l in partitions_up_to(size) {
        for s in 1..=size {
            for n in partitions_up_to(l.size() + s) {
                for t in enumerate_std(&l, &n, s).into_iter().filter(|t| is_dvir(t).is_some()) {
                    let res = dvir_diagram_check(&t);
                    rep.check(res == Ok(true), || format!("{t}: {res:?}"));
                }
            }
        }
    }
    let (t, want) = figure_instance();
    let got = skew_u(&t);
    rep.check(got.as_ref() == Ok(&want), || format!("figure expansion: {got:?}"));
    rep.check(dvir_diagram_check(&t) == Ok(true) && want.terms().all(|(d, _)| cross_blocks(d, 3) <= 2), || {
        "figure diagrams cross the cut more than twice".into()
    });
    rep
}

/// `|SStd(μ)| = Σ_τ K_{τμ} |Latt(τ)|` on co-Pieri triples, and the pulled-back
/// latticed words are exactly the semistandard words.
pub fn check_decomposition(bounds: &Bounds) -> Report {
    let mut rep = Report::new("semistandard decomposition");
    let ps = partitions_up_to(bounds.max_size);
    for l in &ps {
        for n in &ps {
            for s in 1..=bounds.max_s {
                if !is_copieri(l, n, s) {
                    continue;
                }
                let taus = partitions_of(s, None);
                let latt: Vec<usize> = taus.iter().map(|t| count_latticed(l, n, t)).collect();
                for m in &taus {
                    let mc: Composition = m.into();
                    let lhs = count_sstd(l, n, &mc);
                    let rhs: usize = taus.iter().zip(&latt).map(|(t, c)| c * ssyt_count(t, &mc)).sum();
                    rep.check(lhs == rhs, || format!("({l}, {n}, {m}): |SStd| = {lhs}, Kostka sum = {rhs}"));
                    let want: HashSet<ReadingWord> = mu_classes(l, n, &mc)
                        .iter()
                        .filter(|c| c.is_semistandard())
                        .map(|c| c.reading_word())
                        .collect();
                    let got = pull_back_latticed(l, n, m);
                    let ok = match &got {
                        Ok(ws) => ws.len() == want.len() && ws.iter().cloned().collect::<HashSet<_>>() == want,
                        Err(_) => false,
                    };
                    rep.check(ok, || format!("({l}, {n}, {m}): pull-back mismatch {got:?}"));
                }
            }
        }
    }
    rep
}

fn words(len: usize, alphabet: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=alphabet).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

/// Swap involution, path revalidation, class invariance of reading words,
/// the two lattice tests, and character orthogonality up to `n = 8`.
pub fn check_properties() -> Report {
    let mut rep = Report::new("properties");
    let ps = partitions_up_to(3);
    for l in &ps {
        for n in &ps {
            for t in enumerate_std(l, n, 3) {
                let again = KroneckerTableau::new(t.start().clone(), t.steps().to_vec());
                rep.check(again.as_ref() == Ok(&t), || format!("{t} does not revalidate"));
                for k in 1..3 {
                    if let Ok(Some(u)) = swap_adjacent(&t, k) {
                        let back = swap_adjacent(&u, k);
                        rep.check(back == Ok(Some(t.clone())) && u.end() == t.end(), || format!("swap {k} of {t}"));
                        let re = KroneckerTableau::new(u.start().clone(), u.steps().to_vec());
                        rep.check(re.as_ref() == Ok(&u), || format!("swap {k} of {t} does not revalidate"));
                    }
                }
            }
        }
    }
    for (l, n, m) in [("4,2", "5,3,1", "2,1"), ("7", "6", "3,2,1"), ("6,1", "4,3", "2,1"), ("2,1", "2,1", "2,1")] {
        let m: Composition = m.parse().expect("literal");
        for c in mu_classes(&p(l), &p(n), &m) {
            let w = c.reading_word();
            for t in c.members() {
                rep.check(reading_word_of(t, &m) == w, || format!("{t} has a different reading word from its class"));
            }
            let again = class_of(&c.members()[0], &m);
            rep.check(again.as_ref() == Ok(&c), || format!("class of {} rebuilt differently", c.members()[0]));
        }
    }
    for len in 0..=8 {
        for w in words(len, 3) {
            rep.check(is_lattice(&w) == is_lattice_by_prefix(&w), || format!("lattice tests disagree on {w:?}"));
        }
    }
    for n in 1..=8 {
        let parts = partitions_of(n, None);
        let table: Vec<Vec<i128>> =
            parts.iter().map(|a| parts.iter().map(|r| mn_character(a, r).expect("same size")).collect()).collect();
        let sizes: Vec<BigInt> = parts.iter().map(|r| CycleType::new(r.clone()).class_size()).collect();
        for (i, a) in table.iter().enumerate() {
            for (j, b) in table.iter().enumerate() {
                let s: BigInt = a.iter().zip(b).zip(&sizes).map(|((x, y), z)| BigInt::from(x * y) * z).sum();
                let want = if i == j { factorial(n) } else { BigInt::from(0) };
                rep.check(s == want, || format!("rows {} and {} of the n = {n} table", parts[i], parts[j]));
            }
        }
    }
    rep
}

/// Everything `kron verify` runs, one thread per sweep. Reports come back in
/// a fixed order whatever the scheduling.
pub fn run_all(bounds: &Bounds) -> Vec<Report> {
    let b = *bounds;
    let jobs: Vec<Box<dyn Fn() -> Report + Send + Sync>> = vec![
        Box::new(move || check_goldens(b.n_cap)),
        Box::new(move || check_oracle_equivalence(&b)),
        Box::new(check_stability),
        Box::new(move || check_maximal_depth(&b)),
        Box::new(move || check_thm33(b.thm33_r)),
        Box::new(move || check_bell(b.thm33_r)),
        Box::new(move || check_dvir(b.dvir_size)),
        Box::new(move || check_decomposition(&b)),
        Box::new(check_properties),
    ];
    std::thread::scope(|sc| {
        let handles: Vec<_> = jobs.iter().map(|job| sc.spawn(job)).collect();
        handles.into_iter().map(|h| h.join().expect("sweep thread panicked")).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let got: Vec<u128> = (0..8).map(bell).collect();
        assert_eq!(got, [1, 1, 2, 5, 15, 52, 203, 877]);
    }

    #[test]
    fn small_sweeps_pass() {
        let b = Bounds::default().with_max_size(2);
        for rep in [check_oracle_equivalence(&b), check_decomposition(&b), check_dvir(2), check_bell(2)] {
            assert!(rep.passed(), "{rep}: {:?}", rep.failures);
            assert!(rep.checked > 0);
        }
    }

    #[test]
    fn empty_bounds_are_vacuous() {
        let b = Bounds::default().with_max_size(0);
        let rep = check_oracle_equivalence(&b);
        assert!(rep.passed());
        assert_eq!(rep.checked, 1);
        assert_eq!(check_dvir(0).failures, Vec::<String>::new());
    }
}
