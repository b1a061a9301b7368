//! Sparse integer polynomials and the generating functions
//! `F_n = sum_k <<n;k>> x^k` split by first-zero position.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::coefficients::ExponentVector;
use crate::compositions::Composition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = SparsePolynomial::zero(nvars);
        p.add_term(ExponentVector::one(), c.into());
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Result<Self> {
        SparsePolynomial::from_terms(nvars, [(ExponentVector::from_dense(&[1], i), BigInt::one())])
    }

    /// `x_1 + ... + x_m`.
    pub fn var_sum(nvars: usize, m: usize) -> Result<Self> {
        SparsePolynomial::from_terms(
            nvars,
            (1..=m).map(|i| (ExponentVector::from_dense(&[1], i), BigInt::one())),
        )
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, BigInt)>,
    {
        let mut p = SparsePolynomial::zero(nvars);
        for (m, c) in terms {
            if m.max_var() > nvars || m.min_var() == Some(0) {
                return Err(Error::Arity(format!("{m} uses a variable outside x1..x{nvars}")));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &ExponentVector) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Coefficient of `x_1^{k_1} ... x_j^{k_j}`.
    pub fn coefficient_of(&self, k: &Composition) -> BigInt {
        self.coefficient(&ExponentVector::from_dense(k.parts(), 1))
    }

    fn same_arity(&self, other: &SparsePolynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Arity(format!(
                "polynomials in {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SparsePolynomial) -> Result<Self> {
        self.same_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &SparsePolynomial) -> Result<Self> {
        self.same_arity(other)?;
        let mut out = SparsePolynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Removes the unused variable `x_i`, renaming `x_{i+1}..x_n` to `x_i..x_{n-1}`.
    pub fn drop_var(&self, i: usize) -> Result<Self> {
        if i < 1 || i > self.nvars {
            return Err(Error::Arity(format!("no variable x{i} among {} variables", self.nvars)));
        }
        if self.terms.keys().any(|m| m.exponent(i) > 0) {
            return Err(Error::Domain(format!("x{i} occurs in the polynomial")));
        }
        Ok(self.reindexed(self.nvars - 1, |v| if v > i { v - 1 } else { v }))
    }

    /// Inverse of `drop_var`: `p(x_1, ..., x_{i-1}, x_{i+1}, ..., x_{n+1})`.
    pub fn insert_var(&self, i: usize) -> Result<Self> {
        if i < 1 || i > self.nvars + 1 {
            return Err(Error::Arity(format!(
                "cannot open slot x{i} in {} variables",
                self.nvars
            )));
        }
        Ok(self.reindexed(self.nvars + 1, |v| if v >= i { v + 1 } else { v }))
    }

    fn reindexed(&self, nvars: usize, f: impl Fn(usize) -> usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: self.terms.iter().map(|(m, c)| (m.remap(&f), c.clone())).collect(),
        }
    }

    pub fn eval(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.nvars {
            return Err(Error::Arity(format!(
                "{} values for {} variables",
                point.len(),
                self.nvars
            )));
        }
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.iter() {
                term *= num_traits::pow(point[v - 1].clone(), e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// Terms in display order: dense exponent tuples, largest first.
    pub fn sorted_terms(&self) -> Vec<(&ExponentVector, &BigInt)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        let n = self.nvars;
        out.sort_by(|a, b| compare_dense(b.0, a.0, n));
        out
    }
}

fn compare_dense(a: &ExponentVector, b: &ExponentVector, n: usize) -> Ordering {
    a.dense(1, n).cmp(&b.dense(1, n))
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Memoized `F_{n,i}` keyed by `(n, i)`.
#[derive(Debug, Default)]
pub struct GeneratingFunctions {
    cache: RwLock<HashMap<(usize, usize), SparsePolynomial>>,
}

impl GeneratingFunctions {
    pub fn new() -> Self {
        GeneratingFunctions::default()
    }

    /// `F_{n,i}`: the part of `F_n` whose monomials have their first zero exponent at `i`.
    pub fn f_ni(&self, n: usize, i: usize) -> Result<SparsePolynomial> {
        if n < 1 || i < 2 || i > n + 1 {
            return Err(Error::Range(format!("F_(n,i) needs n >= 1 and 2 <= i <= n+1, got ({n},{i})")));
        }
        if let Some(p) = self.cache.read().ok().and_then(|c| c.get(&(n, i)).cloned()) {
            return Ok(p);
        }
        let p = self.compute(n, i)?;
        if let Ok(mut c) = self.cache.write() {
            c.insert((n, i), p.clone());
        }
        Ok(p)
    }

    // F_{n-1,l}, with F_{n-1,1} = 0.
    fn lower(&self, n: usize, l: usize) -> Result<SparsePolynomial> {
        if l < 2 {
            return Ok(SparsePolynomial::zero(n - 1));
        }
        self.f_ni(n - 1, l)
    }

    /// `F_{n-1,>=i} = sum_{l=i}^{n} F_{n-1,l}`.
    fn lower_tail(&self, n: usize, i: usize) -> Result<SparsePolynomial> {
        let mut acc = SparsePolynomial::zero(n - 1);
        for l in i.max(2)..=n {
            acc = acc.add(&self.f_ni(n - 1, l)?)?;
        }
        Ok(acc)
    }

    fn compute(&self, n: usize, i: usize) -> Result<SparsePolynomial> {
        if n == 1 {
            return SparsePolynomial::var(1, 1);
        }
        let mut out = SparsePolynomial::zero(n);
        let prev = self.lower(n, i - 1)?;
        if !prev.is_zero() {
            for j in 1..i {
                let xj = SparsePolynomial::var(n, j)?;
                out = out.add(&xj.mul(&prev.insert_var(j)?)?)?;
            }
        }
        if i <= n {
            let tail = self.lower_tail(n, i)?.insert_var(i)?;
            out = out.add(&SparsePolynomial::var_sum(n, i - 1)?.mul(&tail)?)?;
        }
        Ok(out)
    }

    /// `F_n` as the sum of `F_{n,i}`, checked against the telescoped form
    /// `sum_{i=1}^{n} (x_1 + ... + x_i) F_{n-1,>=i}(X \ x_i)`.
    pub fn f_n(&self, n: usize) -> Result<SparsePolynomial> {
        let by_parts = self.f_n_by_parts(n)?;
        if n >= 2 {
            let telescoped = self.f_n_telescoped(n)?;
            if telescoped != by_parts {
                return Err(Error::Inconsistency(format!(
                    "the two formulas for F_{n} disagree"
                )));
            }
        }
        Ok(by_parts)
    }

    pub fn f_n_by_parts(&self, n: usize) -> Result<SparsePolynomial> {
        if n < 1 {
            return Err(Error::Range("F_n needs n >= 1".into()));
        }
        let mut acc = SparsePolynomial::zero(n);
        for i in 2..=n + 1 {
            acc = acc.add(&self.f_ni(n, i)?)?;
        }
        Ok(acc)
    }

    pub fn f_n_telescoped(&self, n: usize) -> Result<SparsePolynomial> {
        if n < 2 {
            return Err(Error::Range("the telescoped formula needs n >= 2".into()));
        }
        let mut acc = SparsePolynomial::zero(n);
        for i in 1..=n {
            let tail = self.lower_tail(n, i)?.insert_var(i)?;
            acc = acc.add(&SparsePolynomial::var_sum(n, i)?.mul(&tail)?)?;
        }
        Ok(acc)
    }
}

pub fn f_ni(n: usize, i: usize) -> Result<SparsePolynomial> {
    GeneratingFunctions::new().f_ni(n, i)
}

pub fn f_n(n: usize) -> Result<SparsePolynomial> {
    GeneratingFunctions::new().f_n(n)
}

/// `F_n(1, ..., 1)` as an unsigned count.
pub fn total_mass(p: &SparsePolynomial) -> Result<BigUint> {
    let ones = vec![BigInt::one(); p.nvars()];
    p.eval(&ones)?
        .to_biguint()
        .ok_or_else(|| Error::Inconsistency("negative coefficient sum".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::leftmost_zero_index;

    fn ev(pairs: &[(usize, u32)]) -> ExponentVector {
        ExponentVector::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn poly(nvars: usize, terms: &[(&[(usize, u32)], i64)]) -> SparsePolynomial {
        SparsePolynomial::from_terms(nvars, terms.iter().map(|(m, c)| (ev(m), BigInt::from(*c)))).unwrap()
    }

    #[test]
    fn ring_basics() {
        let p = poly(2, &[(&[(1, 2)], 1), (&[(1, 1), (2, 1)], 2)]);
        assert_eq!(p.add(&SparsePolynomial::zero(2)).unwrap(), p);
        assert!(matches!(p.add(&SparsePolynomial::zero(3)), Err(Error::Arity(_))));
        let q = poly(2, &[(&[(1, 1)], 1), (&[(2, 1)], -1)]);
        let prod = q.mul(&q).unwrap();
        assert_eq!(prod, poly(2, &[(&[(1, 2)], 1), (&[(1, 1), (2, 1)], -2), (&[(2, 2)], 1)]));
        let cancel = q.add(&poly(2, &[(&[(2, 1)], 1)])).unwrap();
        assert_eq!(cancel, poly(2, &[(&[(1, 1)], 1)]));
    }

    #[test]
    fn drop_and_insert() {
        let p = poly(3, &[(&[(1, 1), (3, 1)], 1)]);
        assert_eq!(p.drop_var(2).unwrap(), poly(2, &[(&[(1, 1), (2, 1)], 1)]));
        assert!(matches!(p.drop_var(3), Err(Error::Domain(_))));
        assert!(matches!(p.drop_var(4), Err(Error::Arity(_))));
        assert_eq!(p.drop_var(2).unwrap().insert_var(2).unwrap(), p);
    }

    #[test]
    fn display_form() {
        let p = poly(2, &[(&[(1, 1), (2, 1)], 2), (&[(1, 2)], 1)]);
        assert_eq!(p.to_string(), "x1^2 + 2*x1*x2");
        let q = poly(2, &[(&[(2, 1)], -3), (&[], 4)]);
        assert_eq!(q.to_string(), "-3*x2 + 4");
        assert_eq!(SparsePolynomial::zero(3).to_string(), "0");
    }

    #[test]
    fn small_generating_functions() {
        assert_eq!(f_ni(1, 2).unwrap(), poly(1, &[(&[(1, 1)], 1)]));
        assert_eq!(f_n(1).unwrap().to_string(), "x1");
        assert_eq!(f_n(2).unwrap().to_string(), "x1^2 + 2*x1*x2");
        let f23 = f_ni(2, 3).unwrap();
        assert_eq!(f23.coefficient(&ev(&[(1, 1), (2, 1)])), BigInt::from(2));
        assert!(matches!(f_ni(2, 1), Err(Error::Range(_))));
        assert!(matches!(f_ni(2, 4), Err(Error::Range(_))));
    }

    #[test]
    fn support_by_first_zero() {
        for n in 1..=5 {
            for i in 2..=n + 1 {
                for m in f_ni(n, i).unwrap().terms().keys() {
                    let k = Composition::new(m.dense(1, n));
                    assert_eq!(leftmost_zero_index(&k), i);
                    assert_eq!(k.total() as usize, n);
                }
            }
        }
    }

    #[test]
    fn mass_is_double_factorial() {
        for n in 1..=6u64 {
            let p = f_n(n as usize).unwrap();
            assert_eq!(total_mass(&p).unwrap(), crate::coefficients::odd_double_factorial(n));
        }
    }
}
