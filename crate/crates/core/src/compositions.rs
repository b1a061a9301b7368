//! Weak compositions and the index algebra around them.
//!
//! Public indices are 1-based: `part(1)` is the first part and
//! `leftmost_zero_index` returns `len + 1` when there is no zero.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition {
    parts: Vec<u32>,
    total: u32,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        let total = parts.iter().sum();
        Composition { parts, total }
    }

    pub fn empty() -> Self {
        Composition::new(Vec::new())
    }

    /// The all-ones composition `(1, ..., 1)` of length `n`.
    pub fn ones(n: usize) -> Self {
        Composition::new(vec![1; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    /// 1-based access.
    pub fn part(&self, i: usize) -> Option<u32> {
        i.checked_sub(1).and_then(|i| self.parts.get(i).copied())
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }
}

impl From<Vec<u32>> for Composition {
    fn from(parts: Vec<u32>) -> Self {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(k: Composition) -> Self {
        k.parts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `3,1,2,0` (optionally wrapped in parentheses or brackets).
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if inner.is_empty() {
            return Ok(Composition::empty());
        }
        inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Composition::new)
    }
}

/// `Comp(n, n, i)`: compositions of `n` of length `j` whose first zero sits at `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompositionClass {
    pub n: u32,
    pub j: usize,
    pub i: usize,
}

impl CompositionClass {
    pub fn new(n: u32, j: usize, i: usize) -> Result<Self> {
        if i < 1 || i > j + 1 {
            return Err(Error::Range(format!(
                "first-zero index {i} outside 1..={}",
                j + 1
            )));
        }
        Ok(CompositionClass { n, j, i })
    }

    pub fn contains(&self, k: &Composition) -> bool {
        k.total() == self.n && k.len() == self.j && leftmost_zero_index(k) == self.i
    }

    pub fn members(&self) -> impl Iterator<Item = Composition> + '_ {
        enumerate(self.n, self.j).filter(move |k| self.contains(k))
    }
}

/// Catalan test on a composition with `length == total`. Every proper prefix
/// of length `j` must sum to at least `j`.
pub fn is_catalan(k: &Composition) -> Result<bool> {
    if k.len() != k.total() as usize {
        return Err(Error::Shape(format!(
            "Catalan test needs length == total, got length {} and total {}",
            k.len(),
            k.total()
        )));
    }
    Ok(is_catalan_parts(k.parts()))
}

pub(crate) fn is_catalan_parts(parts: &[u32]) -> bool {
    let mut sum = 0u64;
    for (j, &p) in parts.iter().enumerate() {
        if j + 1 == parts.len() {
            break;
        }
        sum += u64::from(p);
        if sum < (j + 1) as u64 {
            return false;
        }
    }
    true
}

pub fn leftmost_zero_index(k: &Composition) -> usize {
    k.parts()
        .iter()
        .position(|&p| p == 0)
        .map_or(k.len() + 1, |i| i + 1)
}

/// `k~_j`: decrement part `j`, then delete the leftmost zero.
pub fn reduce(k: &Composition, j: usize) -> Result<Composition> {
    let i = leftmost_zero_index(k);
    if j < 1 || j >= i {
        return Err(Error::Index(format!(
            "reduce index {j} must satisfy 1 <= j < {i} for {k}"
        )));
    }
    let mut parts = k.parts().to_vec();
    parts[j - 1] -= 1;
    let z = parts.iter().position(|&p| p == 0).expect("a zero exists");
    parts.remove(z);
    Ok(Composition::new(parts))
}

pub fn reverse(k: &Composition) -> Composition {
    let mut parts = k.parts().to_vec();
    parts.reverse();
    Composition::new(parts)
}

/// All weak compositions of `n` with `j` parts, lexicographically descending.
pub fn enumerate(n: u32, j: usize) -> Compositions {
    Compositions::new(n, j)
}

#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u32>>,
}

impl Compositions {
    fn new(n: u32, j: usize) -> Self {
        let current = match j {
            0 if n == 0 => Some(Vec::new()),
            0 => None,
            _ => {
                let mut v = vec![0; j];
                v[0] = n;
                Some(v)
            }
        };
        Compositions { current }
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let cur = self.current.take()?;
        let out = Composition::new(cur.clone());
        // Successor in descending lex order: find the rightmost nonzero part
        // before the last slot, move one unit right and sweep the tail into it.
        let len = cur.len();
        if len >= 2 {
            if let Some(t) = (0..len - 1).rev().find(|&t| cur[t] > 0) {
                let mut next = cur;
                let tail: u32 = next[t + 1..].iter().sum();
                next[t] -= 1;
                for x in &mut next[t + 1..] {
                    *x = 0;
                }
                next[t + 1] = tail + 1;
                self.current = Some(next);
            }
        }
        Some(out)
    }
}

/// Counts Catalan members of `Comp(n, n)` by filtering the enumeration.
pub fn catalan_count(n: u32) -> BigUint {
    let mut count = BigUint::from(0u32);
    for k in enumerate(n, n as usize) {
        if is_catalan_parts(k.parts()) {
            count += 1u32;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn catalan_examples() {
        assert!(is_catalan(&c(&[3, 0, 2, 0, 0, 1])).unwrap());
        assert!(is_catalan(&c(&[1])).unwrap());
        assert!(!is_catalan(&c(&[0, 2])).unwrap());
        assert!(is_catalan(&Composition::empty()).unwrap());
        assert!(matches!(is_catalan(&c(&[1, 2])), Err(Error::Shape(_))));
    }

    #[test]
    fn leftmost_zero() {
        assert_eq!(leftmost_zero_index(&c(&[3, 1, 2, 0, 0, 1, 0])), 4);
        assert_eq!(leftmost_zero_index(&c(&[1, 1])), 3);
        assert_eq!(leftmost_zero_index(&c(&[0, 2])), 1);
    }

    #[test]
    fn reduce_examples() {
        let k = c(&[3, 1, 2, 0, 0, 1, 0]);
        assert_eq!(reduce(&k, 1).unwrap(), c(&[2, 1, 2, 0, 1, 0]));
        assert_eq!(reduce(&k, 2).unwrap(), c(&[3, 2, 0, 0, 1, 0]));
        assert_eq!(reduce(&c(&[2, 0]), 1).unwrap(), c(&[1]));
        assert!(matches!(reduce(&k, 4), Err(Error::Index(_))));
        assert!(matches!(reduce(&k, 0), Err(Error::Index(_))));
        assert_eq!(reduce(&c(&[1, 1]), 2).unwrap(), c(&[1]));
        assert!(matches!(reduce(&c(&[1, 1]), 3), Err(Error::Index(_))));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(reverse(&c(&[1, 0, 0, 0, 2, 1, 3])), c(&[3, 1, 2, 0, 0, 0, 1]));
        assert_eq!(reverse(&Composition::empty()), Composition::empty());
        assert_eq!(reverse(&c(&[1, 1])), c(&[1, 1]));
    }

    #[test]
    fn enumerate_small() {
        let all: Vec<_> = enumerate(2, 2).collect();
        assert_eq!(all, vec![c(&[2, 0]), c(&[1, 1]), c(&[0, 2])]);
        let empty: Vec<_> = enumerate(0, 0).collect();
        assert_eq!(empty, vec![Composition::empty()]);
        assert_eq!(enumerate(3, 0).count(), 0);
        assert_eq!(enumerate(0, 3).collect::<Vec<_>>(), vec![c(&[0, 0, 0])]);
        assert_eq!(enumerate(4, 1).collect::<Vec<_>>(), vec![c(&[4])]);
    }

    #[test]
    fn enumerate_is_strictly_descending() {
        let all: Vec<_> = enumerate(5, 4).collect();
        assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
    }

    #[test]
    fn catalan_counts() {
        assert_eq!(catalan_count(3), BigUint::from(5u32));
        assert_eq!(catalan_count(1), BigUint::from(1u32));
        assert_eq!(catalan_count(6), BigUint::from(132u32));
        assert_eq!(catalan_count(0), BigUint::from(1u32));
    }

    #[test]
    fn class_membership() {
        let class = CompositionClass::new(3, 3, 2).unwrap();
        let members: Vec<_> = class.members().collect();
        assert_eq!(members, vec![c(&[3, 0, 0]), c(&[2, 0, 1]), c(&[1, 0, 2])]);
        assert!(CompositionClass::new(3, 3, 5).is_err());
    }

    #[test]
    fn parse_and_serde() {
        let k: Composition = "3,0,2".parse().unwrap();
        assert_eq!(k, c(&[3, 0, 2]));
        assert_eq!(k.total(), 5);
        assert_eq!(k.part(1), Some(3));
        assert_eq!(k.part(0), None);
        assert_eq!(serde_json::to_string(&k).unwrap(), "[3,0,2]");
        let back: Composition = serde_json::from_str("[3,0,2]").unwrap();
        assert_eq!(back.total(), 5);
        assert!("1,x".parse::<Composition>().is_err());
    }
}
