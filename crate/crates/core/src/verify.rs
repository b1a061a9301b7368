//! Cross-engine checks behind the `verify` command.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};

use crate::coefficients::{
    asym_multinomial_uncached, factorial, odd_double_factorial, AsymMultinomial,
};
use crate::compositions::{enumerate, is_catalan_parts, Composition};
use crate::error::{Error, Result};
use crate::genfun::{total_mass, GeneratingFunctions};
use crate::multidegree::compute_table_with;
use crate::parking::{
    build_all_by_insertion, count_cpf, enumerate_all_cpf, insert, pointed, remove, Badness,
    Insertion, Removal,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Recursion,
    Enumeration,
    Bijection,
    Genfun,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Recursion, Suite::Enumeration, Suite::Bijection, Suite::Genfun];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recursion => "recursion",
            Suite::Enumeration => "enumeration",
            Suite::Bijection => "bijection",
            Suite::Genfun => "genfun",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Outcome of one named check inside a suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} (n <= {})", self.suite.name(), self.max_n)?;
        for c in &self.checks {
            let tag = if c.passed { "ok  " } else { "FAIL" };
            write!(f, "\n  {tag} {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new() }
    }

    /// Records the first failure found by `run`, or a pass with `summary`.
    fn check(&mut self, name: &str, run: impl FnOnce() -> Result<std::result::Result<String, String>>) {
        let (passed, detail) = match run() {
            Ok(Ok(summary)) => (true, summary),
            Ok(Err(failure)) => (false, failure),
            Err(e) => (false, e.to_string()),
        };
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }
}

pub fn run_suite(suite: Suite, max_n: usize) -> SuiteReport {
    let mut r = Recorder::new();
    match suite {
        Suite::Recursion => recursion(&mut r, max_n),
        Suite::Enumeration => enumeration(&mut r, max_n),
        Suite::Bijection => bijection(&mut r, max_n),
        Suite::Genfun => genfun(&mut r, max_n),
    }
    SuiteReport {
        suite,
        max_n,
        checks: r.checks,
    }
}

/// Runs the suites on separate threads; reports come back in input order.
pub fn run_suites(suites: &[Suite], max_n: usize) -> Vec<SuiteReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&suite| s.spawn(move || run_suite(suite, max_n)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

fn recursion(r: &mut Recorder, max_n: usize) {
    let engine = AsymMultinomial::new();
    r.check("row sums equal (2n-1)!!", || {
        for n in 1..=max_n {
            let mut sum = BigUint::default();
            for k in enumerate(n as u32, n) {
                sum += engine.get(n as u32, &k)?;
            }
            let want = odd_double_factorial(n as u64);
            if sum != want {
                return Ok(Err(format!("n = {n}: {sum} != {want}")));
            }
        }
        Ok(Ok(format!("n = 1..{max_n}")))
    });
    r.check("nonzero exactly on Catalan compositions", || {
        let mut seen = 0usize;
        for n in 1..=max_n {
            for k in enumerate(n as u32, n) {
                let nonzero = engine.get(n as u32, &k)? != BigUint::default();
                if nonzero != is_catalan_parts(k.parts()) {
                    return Ok(Err(format!("k = {k}")));
                }
                seen += 1;
            }
        }
        Ok(Ok(format!("{seen} compositions")))
    });
    r.check("<<n; 1^n>> = n!", || {
        for n in 1..=max_n {
            let v = engine.get(n as u32, &Composition::ones(n))?;
            if v != factorial(n as u64) {
                return Ok(Err(format!("n = {n}: {v}")));
            }
        }
        Ok(Ok(format!("n = 1..{max_n}")))
    });
    r.check("memoized equals uncached", || {
        let top = max_n.min(7);
        for n in 1..=top {
            for k in enumerate(n as u32, n) {
                if engine.get(n as u32, &k)? != asym_multinomial_uncached(n as u32, &k)? {
                    return Ok(Err(format!("k = {k}")));
                }
            }
        }
        Ok(Ok(format!("n = 1..{top}")))
    });
    r.check("cone degree equals (2(n-3)-1)!!", || {
        for n in 3..=max_n + 3 {
            let total = compute_table_with(&engine, n)?.total();
            let want = odd_double_factorial((n - 3) as u64);
            if total != want {
                return Ok(Err(format!("n = {n}: {total} != {want}")));
            }
        }
        Ok(Ok(format!("n = 3..{}", max_n + 3)))
    });
}

fn enumeration(r: &mut Recorder, max_n: usize) {
    let engine = AsymMultinomial::new();
    r.check("<<n;k>> = |CPF(n,k)| for all k", || {
        let mut seen = 0usize;
        for n in 1..=max_n {
            for k in enumerate(n as u32, n) {
                let count = BigUint::from(count_cpf(n, &k)?);
                let value = engine.get(n as u32, &k)?;
                if count != value {
                    return Ok(Err(format!("k = {k}: recursion {value}, enumeration {count}")));
                }
                seen += 1;
            }
        }
        Ok(Ok(format!("{seen} compositions, n = 1..{max_n}")))
    });
}

fn bijection(r: &mut Recorder, max_n: usize) {
    let pairs = [
        ("iota/nu", Insertion::Iota, Removal::Nu),
        ("iota'/nu'", Insertion::IotaPrime, Removal::NuPrime),
    ];
    for (label, ins, rem) in pairs {
        r.check(&format!("{label} round trips and good/bad preservation"), || {
            let mut count = 0usize;
            for n in 2..=max_n {
                let prev = enumerate_all_cpf(n - 1)?;
                for pp in pointed(&prev) {
                    let q = match insert(&pp, ins) {
                        Ok(q) => q,
                        Err(e) => return Ok(Err(format!("insert {pp}: {e}"))),
                    };
                    let bad = q.classify() == Badness::Bad;
                    if bad != pp.is_corner() {
                        return Ok(Err(format!("{pp} -> {q} changes good/bad")));
                    }
                    match remove(&q, rem) {
                        Ok(back) if back == pp => {}
                        Ok(back) => return Ok(Err(format!("{pp} -> {q} -> {back}"))),
                        Err(e) => return Ok(Err(format!("remove {q}: {e}"))),
                    }
                    count += 1;
                }
                for q in enumerate_all_cpf(n)? {
                    let pp = match remove(&q, rem) {
                        Ok(pp) => pp,
                        Err(e) => return Ok(Err(format!("remove {q}: {e}"))),
                    };
                    match insert(&pp, ins) {
                        Ok(back) if back == q => {}
                        Ok(back) => return Ok(Err(format!("{q} -> {pp} -> {back}"))),
                        Err(e) => return Ok(Err(format!("insert {pp}: {e}"))),
                    }
                }
            }
            Ok(Ok(format!("{count} pointed inputs, n = 2..{max_n}")))
        });
        r.check(&format!("{label} builds CPF(n) without duplicates"), || {
            for n in 1..=max_n {
                let built = match build_all_by_insertion(n, ins) {
                    Ok(b) => b,
                    Err(e) => return Ok(Err(format!("n = {n}: {e}"))),
                };
                let enumerated: BTreeSet<_> = enumerate_all_cpf(n)?.into_iter().collect();
                if built != enumerated {
                    return Ok(Err(format!("n = {n}: built set differs from enumeration")));
                }
            }
            Ok(Ok(format!("n = 1..{max_n}")))
        });
    }
}

fn genfun(r: &mut Recorder, max_n: usize) {
    let engine = AsymMultinomial::new();
    let gf = GeneratingFunctions::new();
    r.check("coefficients of F_n match <<n;k>>", || {
        for n in 1..=max_n {
            let f = gf.f_n(n)?;
            for k in enumerate(n as u32, n) {
                let c = f.coefficient_of(&k);
                let v = engine.get(n as u32, &k)?;
                if c != BigInt::from(v) {
                    return Ok(Err(format!("n = {n}, k = {k}: {c}")));
                }
            }
        }
        Ok(Ok(format!("n = 1..{max_n}, both formulas agree")))
    });
    r.check("F_n(1,...,1) = (2n-1)!!", || {
        for n in 1..=max_n {
            let mass = total_mass(&gf.f_n(n)?)?;
            if mass != odd_double_factorial(n as u64) {
                return Ok(Err(format!("n = {n}: {mass}")));
            }
        }
        Ok(Ok(format!("n = 1..{max_n}")))
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            let report = run_suite(suite, 4);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn parse_suite_names() {
        assert_eq!("genfun".parse::<Suite>().unwrap(), Suite::Genfun);
        assert!("all".parse::<Suite>().is_err());
    }
}
