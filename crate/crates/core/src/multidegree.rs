//! Multidegree tables of `M_{0,n}` in `P^1 x ... x P^{n-3}`, the Chow class
//! they assemble into, and the cone degree.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Number, Value};

use crate::coefficients::{odd_double_factorial, AsymMultinomial, BigCount};
use crate::compositions::{enumerate, reverse, Composition};
use crate::error::{Error, Result};
use crate::parking::count_cpf;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultidegreeTable {
    n: usize,
    entries: Vec<(Composition, BigCount)>,
}

impl MultidegreeTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entries in descending lexicographic order of `k`.
    pub fn entries(&self) -> &[(Composition, BigCount)] {
        &self.entries
    }

    pub fn get(&self, k: &Composition) -> Option<&BigCount> {
        self.entries.iter().find(|(key, _)| key == k).map(|(_, d)| d)
    }

    pub fn total(&self) -> BigCount {
        self.entries.iter().map(|(_, d)| d).sum()
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|(k, d)| json!({ "k": k.parts(), "deg": big_number(d) }))
            .collect();
        json!({
            "n": self.n,
            "entries": entries,
            "cone_degree": big_number(&self.total()),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("multidegree JSON: {what}"));
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        if n < 3 {
            return Err(Error::Domain(format!("n must be at least 3, got {n}")));
        }
        let mut entries = Vec::new();
        for e in v["entries"].as_array().ok_or_else(|| bad("missing entries"))? {
            let k: Composition = serde_json::from_value(e["k"].clone()).map_err(|_| bad("bad k"))?;
            if k.len() != n - 3 || k.total() as usize != n - 3 {
                return Err(Error::Shape(format!("entry {k} does not lie in Comp({0},{0})", n - 3)));
            }
            entries.push((k, parse_big(&e["deg"]).ok_or_else(|| bad("bad deg"))?));
        }
        let table = MultidegreeTable { n, entries };
        if let Some(c) = v.get("cone_degree") {
            if parse_big(c) != Some(table.total()) {
                return Err(bad("cone_degree does not match the entries"));
            }
        }
        Ok(table)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let m = self.n - 3;
        let mut header: Vec<String> = (1..=m).map(|i| format!("k_{i}")).collect();
        header.push("deg".into());
        w.write_record(&header).map_err(csv_err)?;
        for (k, d) in &self.entries {
            let mut row: Vec<String> = k.parts().iter().map(u32::to_string).collect();
            row.push(d.to_string());
            w.write_record(&row).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for MultidegreeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|(k, _)| k.to_string().len())
            .max()
            .unwrap_or(1)
            .max(1);
        writeln!(f, "n = {}", self.n)?;
        writeln!(f, "{:<width$}  deg", "k")?;
        for (k, d) in &self.entries {
            writeln!(f, "{:<width$}  {d}", k.to_string())?;
        }
        write!(f, "cone degree = {}", self.total())
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

fn big_number(v: &BigUint) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal digits"))
}

fn parse_big(v: &Value) -> Option<BigUint> {
    match v {
        Value::Number(n) => n.to_string().parse().ok(),
        _ => None,
    }
}

fn check_marks(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::Domain(format!("need n >= {min}, got {n}")));
    }
    Ok(())
}

/// `deg_k = <<n-3; rev(k)>>` for every `k` in `Comp(n-3, n-3)`.
pub fn compute_table(n: usize) -> Result<MultidegreeTable> {
    compute_table_with(&AsymMultinomial::new(), n)
}

pub fn compute_table_with(engine: &AsymMultinomial, n: usize) -> Result<MultidegreeTable> {
    check_marks(n, 3)?;
    let m = n - 3;
    let keys: Vec<Composition> = enumerate(m as u32, m).collect();
    let entries = keys
        .into_par_iter()
        .map(|k| {
            let d = engine.get(m as u32, &reverse(&k))?;
            Ok((k, d))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MultidegreeTable { n, entries })
}

/// The same table with every entry counted as `|CPF(n-3, rev(k))|`.
pub fn compute_table_by_enumeration(n: usize) -> Result<MultidegreeTable> {
    check_marks(n, 3)?;
    let m = n - 3;
    let keys: Vec<Composition> = enumerate(m as u32, m).collect();
    let entries = keys
        .into_par_iter()
        .map(|k| {
            let d = count_cpf(m, &reverse(&k))?;
            Ok((k, BigUint::from(d)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MultidegreeTable { n, entries })
}

/// Sum of all multidegrees, checked against `(2(n-3)-1)!!`.
pub fn cone_degree(n: usize) -> Result<BigCount> {
    let total = compute_table(n)?.total();
    let expected = odd_double_factorial((n - 3) as u64);
    if total != expected {
        return Err(Error::Inconsistency(format!(
            "cone degree {total} differs from (2(n-3)-1)!! = {expected} for n = {n}"
        )));
    }
    Ok(total)
}

/// `sum_k deg_k prod_i H_i^{i - k_i}`, keyed by the exponent vector `(e_1, ..., e_{n-3})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowClassExpansion {
    pub n: usize,
    pub terms: BTreeMap<Vec<u32>, BigCount>,
}

impl fmt::Display for ChowClassExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| match x {
                    1 => format!("H{}", i + 1),
                    _ => format!("H{}^{x}", i + 1),
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

pub fn chow_class(n: usize) -> Result<ChowClassExpansion> {
    check_marks(n, 4)?;
    let table = compute_table(n)?;
    chow_class_of(&table)
}

pub fn chow_class_of(table: &MultidegreeTable) -> Result<ChowClassExpansion> {
    let mut terms = BTreeMap::new();
    for (k, d) in table.entries() {
        let exps: Vec<i64> = k
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &ki)| (i + 1) as i64 - i64::from(ki))
            .collect();
        if exps.iter().any(|&e| e < 0) {
            if !d.is_zero() {
                return Err(Error::Invariant(format!(
                    "deg {k} = {d} is nonzero but needs a negative exponent"
                )));
            }
            continue;
        }
        if d.is_zero() {
            continue;
        }
        terms.insert(exps.iter().map(|&e| e as u32).collect(), d.clone());
    }
    Ok(ChowClassExpansion {
        n: table.n(),
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn small_tables() {
        let t3 = compute_table(3).unwrap();
        assert_eq!(t3.entries(), &[(Composition::empty(), big(1))]);
        let t4 = compute_table(4).unwrap();
        assert_eq!(t4.entries(), &[(c(&[1]), big(1))]);
        let t5 = compute_table(5).unwrap();
        assert_eq!(t5.get(&c(&[2, 0])), Some(&big(0)));
        assert_eq!(t5.get(&c(&[1, 1])), Some(&big(2)));
        assert_eq!(t5.get(&c(&[0, 2])), Some(&big(1)));
        assert!(matches!(compute_table(2), Err(Error::Domain(_))));
    }

    #[test]
    fn cone_degrees() {
        assert_eq!(cone_degree(3).unwrap(), big(1));
        assert_eq!(cone_degree(4).unwrap(), big(1));
        assert_eq!(cone_degree(5).unwrap(), big(3));
        assert_eq!(cone_degree(9).unwrap(), big(10395));
        assert_eq!(cone_degree(10).unwrap(), big(135135));
    }

    #[test]
    fn chow_classes() {
        let c4 = chow_class(4).unwrap();
        assert_eq!(c4.terms, BTreeMap::from([(vec![0], big(1))]));
        assert_eq!(c4.to_string(), "1");
        let c5 = chow_class(5).unwrap();
        assert_eq!(c5.terms, BTreeMap::from([(vec![0, 1], big(2)), (vec![1, 0], big(1))]));
        assert_eq!(c5.to_string(), "1*H1 + 2*H2");
        assert!(matches!(chow_class(3), Err(Error::Domain(_))));
    }

    #[test]
    fn negative_exponent_with_nonzero_degree_is_rejected() {
        let bogus = MultidegreeTable {
            n: 5,
            entries: vec![(c(&[2, 0]), big(1))],
        };
        assert!(matches!(chow_class_of(&bogus), Err(Error::Invariant(_))));
    }

    #[test]
    fn json_and_csv() {
        let t = compute_table(5).unwrap();
        let s = t.to_json().to_string();
        assert_eq!(
            s,
            r#"{"cone_degree":3,"entries":[{"deg":0,"k":[2,0]},{"deg":2,"k":[1,1]},{"deg":1,"k":[0,2]}],"n":5}"#
        );
        let back = MultidegreeTable::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, t);
        assert_eq!(t.to_csv().unwrap(), "k_1,k_2,deg\n2,0,0\n1,1,2\n0,2,1\n");
        assert_eq!(compute_table(3).unwrap().to_csv().unwrap(), "deg\n1\n");
    }

    #[test]
    fn enumeration_table_agrees() {
        for n in 3..=7 {
            assert_eq!(compute_table(n).unwrap(), compute_table_by_enumeration(n).unwrap());
        }
    }
}
