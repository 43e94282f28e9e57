//! One PASS/FAIL line per acceptance criterion. Every comparison is exact;
//! the tolerance is pinned at zero below and used for each numeric check.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;

use kronecker_tableaux::branching::enumerate_std;
use kronecker_tableaux::checks::{self, Bounds, Report};
use kronecker_tableaux::oracle::{dvir_step, kronecker, stable_kronecker_oracle};
use kronecker_tableaux::partitions::{partitions_of, partitions_up_to};
use kronecker_tableaux::tableaux::{classical_lr, count_latticed, count_sstd, stable_kronecker};
use kronecker_tableaux::{Composition, Partition};

/// Allowed absolute difference for every numeric comparison.
const TOLERANCE: u64 = 0;

fn close(got: &BigInt, want: i64) -> bool {
    let d = got - BigInt::from(want);
    d.magnitude() <= &TOLERANCE.into()
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

struct Outcome {
    checked: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { checked: 0, failures: Vec::new() }
    }

    fn num(&mut self, what: String, got: impl Into<BigInt>, want: i64) {
        self.checked += 1;
        let got = got.into();
        if !close(&got, want) {
            self.failures.push(format!("{what}: got {got}, want {want}"));
        }
    }

    fn absorb(&mut self, r: Report) {
        self.checked += r.checked;
        self.failures.extend(r.failures.into_iter().map(|f| format!("{}: {f}", r.name)));
    }
}

fn goldens() -> Outcome {
    let mut o = Outcome::new();
    let stable: &[(&str, &str, &str, i64)] = &[
        ("2,1", "3,3,2", "2,2,1", 1),
        ("4", "5", "2,2,1", 1),
        ("6,1", "4,3", "3", 3),
        ("6,1", "4,3", "2,1", 4),
        ("6,1", "4,3", "1,1,1", 1),
        ("6,2", "7,4", "4", 4),
        ("6,2", "7,4", "3,1", 7),
        ("6,2", "7,4", "2,2", 3),
        ("6,2", "7,4", "2,1,1", 3),
        ("6,2", "7,4", "1,1,1,1", 0),
        ("6,2", "7,4", "2,2,1", 11),
        ("5,3,3", "7,5,1,1", "2,2,1", 11),
        ("9,6,3", "9,6,3", "2,1", 60),
    ];
    for &(l, n, m, want) in stable {
        let got = stable_kronecker(&p(l), &p(n), &p(m)).expect("applicable triple");
        o.num(format!("tableaux ({l}),({n}),({m})"), got, want);
        let orc = stable_kronecker_oracle(&p(l), &p(n), &p(m), None).expect("oracle stabilises");
        o.num(format!("oracle ({l}),({n}),({m})"), orc.value, want);
    }
    let sstd: &[(&str, &str, &str, i64)] =
        &[("8,5,3", "6,5,3,2", "3", 6), ("8,5,3", "6,5,3,2", "2,1", 15), ("7", "6", "6", 3), ("7", "6", "3,2,1", 27)];
    for &(l, n, m, want) in sstd {
        o.num(format!("SStd ({n})\\({l}), ({m})"), count_sstd(&p(l), &p(n), &m.parse::<Composition>().unwrap()), want);
    }
    for (m, want) in [("3,2,1", 2), ("4,2", 4)] {
        o.num(format!("Latt (6)\\(7), ({m})"), count_latticed(&p("7"), &p("6"), &p(m)), want);
    }
    o.num("Std_3 (5,3,1)\\(4,2)".into(), enumerate_std(&p("4,2"), &p("5,3,1"), 3).len(), 6);
    o.num("c((4,2),(2,1);(5,3,1))".into(), classical_lr(&p("4,2"), &p("5,3,1"), &p("2,1")).unwrap(), 2);
    o
}

fn oracle_equivalence() -> Outcome {
    let mut o = Outcome::new();
    o.absorb(checks::check_oracle_equivalence(&Bounds::default()));
    // the recursion behind the oracle, against characters on every triple of size 8 to 10
    for n in 8..=10 {
        let parts = partitions_of(n, None);
        for a in &parts {
            for b in &parts {
                for c in &parts {
                    let g = kronecker(a, b, c).unwrap();
                    o.checked += 1;
                    if dvir_step(a, b, c).unwrap() != g {
                        o.failures.push(format!("dvir_step {a} {b} {c}"));
                    }
                }
            }
        }
    }
    o
}

fn stability() -> Outcome {
    let mut o = Outcome::new();
    for n in 7..=10 {
        let a = Partition::new(vec![n - 3, 2, 1]).unwrap();
        let c = Partition::new(vec![n - 1, 1]).unwrap();
        o.num(format!("g({a},{a},{c})"), kronecker(&a, &a, &c).unwrap(), 2);
    }
    // 3 and 4 belong to (10,2,1) and (11,2,1); (10,3) and (11,3) give 2 and 3
    o.num("g((6,6,1),(6,4,3),(10,2,1))".into(), kronecker(&p("6,6,1"), &p("6,4,3"), &p("10,2,1")).unwrap(), 3);
    o.num("g((7,6,1),(7,4,3),(11,2,1))".into(), kronecker(&p("7,6,1"), &p("7,4,3"), &p("11,2,1")).unwrap(), 4);
    o.num("g((6,6,1),(6,4,3),(10,3))".into(), kronecker(&p("6,6,1"), &p("6,4,3"), &p("10,3")).unwrap(), 2);
    o.num("g((7,6,1),(7,4,3),(11,3))".into(), kronecker(&p("7,6,1"), &p("7,4,3"), &p("11,3")).unwrap(), 3);
    let v = stable_kronecker_oracle(&p("6,1"), &p("4,3"), &p("2,1"), None).unwrap();
    o.num("onset of ((6,1),(4,3),(2,1))".into(), v.onset_n, 14);
    o.absorb(checks::check_stability());
    o
}

fn maximal_depth() -> Outcome {
    let mut o = Outcome::new();
    let b = Bounds { max_depth_size: 7, ..Bounds::default() };
    o.absorb(checks::check_maximal_depth(&b));
    o
}

fn thm33() -> Outcome {
    let mut o = Outcome::new();
    o.absorb(checks::check_thm33(3));
    o
}

fn bell() -> Outcome {
    let mut o = Outcome::new();
    for (r, want) in [(1, 2), (2, 15), (3, 203)] {
        let total: usize =
            partitions_up_to(r).iter().map(|nu| enumerate_std(&Partition::empty(), nu, r).len().pow(2)).sum();
        o.num(format!("Σ|Std_{r}(ν)|²"), total, want);
    }
    o.absorb(checks::check_bell(3));
    o
}

fn dvir() -> Outcome {
    let mut o = Outcome::new();
    o.absorb(checks::check_dvir(3));
    o
}

fn decomposition() -> Outcome {
    let mut o = Outcome::new();
    o.absorb(checks::check_decomposition(&Bounds { max_size: 5, max_s: 5, ..Bounds::default() }));
    o
}

fn properties() -> Outcome {
    let mut o = Outcome::new();
    o.absorb(checks::check_properties());
    o
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("golden values", goldens),
        ("oracle equivalence, sizes <= 5", oracle_equivalence),
        ("stability onset", stability),
        ("maximal depth, |nu| <= 7", maximal_depth),
        ("s_k action on the Murphy basis, r = 2, 3", thm33),
        ("cellular dimension equals Bell(2r), r <= 3", bell),
        ("radical diagrams, |lambda| <= 3, s <= 3", dvir),
        ("semistandard decomposition, sizes <= 5, s <= 5", decomposition),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let verdict = if o.failures.is_empty() && o.checked > 0 { "PASS" } else { "FAIL" };
        println!(
            "{verdict} {}: {name} ({} checks, tolerance {TOLERANCE}, {:.1}s)",
            i + 1,
            o.checked,
            start.elapsed().as_secs_f64()
        );
        for f in o.failures.iter().take(10) {
            println!("    {f}");
        }
        if verdict == "FAIL" {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
