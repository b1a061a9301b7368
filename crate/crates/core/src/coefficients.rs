//! Multinomials, the string operator, psi and omega intersection numbers,
//! and the asymmetric multinomial recursion.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::compositions::{leftmost_zero_index, reduce, reverse, Composition};
use crate::error::{Error, Result};

pub type BigCount = BigUint;

/// Sparse monomial exponents keyed by 1-based variable index. Zero
/// exponents are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    exponents: BTreeMap<usize, u32>,
    degree: u32,
}

impl ExponentVector {
    pub fn one() -> Self {
        ExponentVector::default()
    }

    /// Builds from `(variable, exponent)` pairs; repeated variables add up.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Result<Self> {
        let mut v = ExponentVector::default();
        for (var, e) in pairs {
            if var == 0 {
                return Err(Error::Index("variables are 1-based".into()));
            }
            v.add(var, e);
        }
        Ok(v)
    }

    /// Dense exponents `dense[0]` for variable `offset`, `dense[1]` for `offset + 1`, ...
    pub fn from_dense(dense: &[u32], offset: usize) -> Self {
        let mut v = ExponentVector::default();
        for (i, &e) in dense.iter().enumerate() {
            v.add(offset + i, e);
        }
        v
    }

    fn add(&mut self, var: usize, e: u32) {
        if e == 0 {
            return;
        }
        *self.exponents.entry(var).or_insert(0) += e;
        self.degree += e;
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents.get(&var).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exponents.iter().map(|(&v, &e)| (v, e))
    }

    pub fn max_var(&self) -> usize {
        self.exponents.keys().next_back().copied().unwrap_or(0)
    }

    pub fn min_var(&self) -> Option<usize> {
        self.exponents.keys().next().copied()
    }

    /// Exponents of variables `lo..=hi` as a dense tuple.
    pub fn dense(&self, lo: usize, hi: usize) -> Vec<u32> {
        (lo..=hi).map(|v| self.exponent(v)).collect()
    }

    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        let mut out = self.clone();
        for (v, e) in other.iter() {
            out.add(v, e);
        }
        out
    }

    /// Decrements one variable; `None` if it is absent.
    pub fn decrement(&self, var: usize) -> Option<ExponentVector> {
        let e = *self.exponents.get(&var)?;
        let mut out = self.clone();
        if e == 1 {
            out.exponents.remove(&var);
        } else {
            out.exponents.insert(var, e - 1);
        }
        out.degree -= 1;
        Some(out)
    }

    /// Applies `f` to every variable index. `f` must be injective on the support.
    pub(crate) fn remap(&self, f: impl Fn(usize) -> usize) -> ExponentVector {
        let mut out = ExponentVector::default();
        for (v, e) in self.iter() {
            out.add(f(v), e);
        }
        out
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            match e {
                1 => write!(f, "x{v}")?,
                _ => write!(f, "x{v}^{e}")?,
            }
        }
        Ok(())
    }
}

/// Formal sum of monomials with positive integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MonomialSum {
    terms: BTreeMap<ExponentVector, BigUint>,
}

impl MonomialSum {
    pub fn monomial(m: ExponentVector) -> Self {
        let mut s = MonomialSum::default();
        s.add_term(m, BigUint::one());
        s
    }

    pub fn add_term(&mut self, m: ExponentVector, c: BigUint) {
        if c.is_zero() {
            return;
        }
        *self.terms.entry(m).or_default() += c;
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, BigUint> {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &ExponentVector) -> BigUint {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// The string operator extended linearly.
    pub fn string(&self) -> MonomialSum {
        let mut out = MonomialSum::default();
        for (m, c) in &self.terms {
            for (v, _) in m.iter() {
                out.add_term(m.decrement(v).expect("support variable"), c.clone());
            }
        }
        out
    }
}

/// `St(m)`: sum over the variables of `m` of `m` with that exponent lowered by one.
pub fn string_operator(m: &ExponentVector) -> MonomialSum {
    MonomialSum::monomial(m.clone()).string()
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `n! / (k_1! ... k_j!)`, or zero when a part is negative or the parts do not sum to `n`.
pub fn multinomial(n: u64, parts: &[i64]) -> BigUint {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n as i64 {
        return BigUint::zero();
    }
    let den = parts
        .iter()
        .fold(BigUint::one(), |acc, &p| acc * factorial(p as u64));
    factorial(n) / den
}

/// `(2m-1)!!`, with `m = 0` giving the empty product.
pub fn odd_double_factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, i| acc * (2 * i - 1))
}

/// Psi intersection number on `M_{0,n}` for `prod psi_i^{k_i}`, computed by
/// iterating the string operator and by the multinomial formula.
pub fn psi_intersection(n: usize, k: &Composition) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::Domain(format!("psi intersections need n >= 3, got {n}")));
    }
    if k.len() != n {
        return Err(Error::Shape(format!(
            "exponent tuple has length {}, expected {n}",
            k.len()
        )));
    }
    let d = n as u64 - 3;
    if u64::from(k.total()) != d {
        return Ok(BigUint::zero());
    }
    let mut sum = MonomialSum::monomial(ExponentVector::from_dense(k.parts(), 1));
    for _ in 0..d {
        sum = sum.string();
    }
    let by_string = sum.coefficient(&ExponentVector::one());
    let parts: Vec<i64> = k.parts().iter().map(|&p| i64::from(p)).collect();
    let closed = multinomial(d, &parts);
    if by_string != closed {
        return Err(Error::Inconsistency(format!(
            "string operator gives {by_string}, multinomial gives {closed} for {k}"
        )));
    }
    Ok(closed)
}

fn check_square(n: u32, k: &Composition) -> Result<()> {
    if k.len() != n as usize || k.total() != n {
        return Err(Error::Shape(format!(
            "asymmetric multinomial needs k in Comp({n},{n}), got {k}"
        )));
    }
    Ok(())
}

/// Memoized evaluator for asymmetric multinomials `<<n; k>>`.
///
/// The cache is private to the instance and can be shared between threads.
#[derive(Debug, Default)]
pub struct AsymMultinomial {
    cache: RwLock<HashMap<Vec<u32>, BigUint>>,
}

impl AsymMultinomial {
    pub fn new() -> Self {
        AsymMultinomial::default()
    }

    pub fn get(&self, n: u32, k: &Composition) -> Result<BigUint> {
        check_square(n, k)?;
        Ok(self.eval(k))
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.read().map(|c| c.len()).unwrap_or(0)
    }

    fn eval(&self, k: &Composition) -> BigUint {
        if let Some(v) = self.cache.read().ok().and_then(|c| c.get(k.parts()).cloned()) {
            return v;
        }
        let value = step(k, |child| self.eval(child));
        if let Ok(mut c) = self.cache.write() {
            c.insert(k.parts().to_vec(), value.clone());
        }
        value
    }
}

// One level of the recursion; `sub` evaluates the reduced compositions.
fn step(k: &Composition, mut sub: impl FnMut(&Composition) -> BigUint) -> BigUint {
    if k.is_empty() {
        return BigUint::one();
    }
    let i = leftmost_zero_index(k);
    let mut total = BigUint::zero();
    for j in 1..i {
        let child = reduce(k, j).expect("j below the leftmost zero");
        total += sub(&child);
    }
    total
}

/// `<<n; k>>` with a fresh cache.
pub fn asym_multinomial(n: u32, k: &Composition) -> Result<BigUint> {
    AsymMultinomial::new().get(n, k)
}

/// The same recursion without memoization.
pub fn asym_multinomial_uncached(n: u32, k: &Composition) -> Result<BigUint> {
    check_square(n, k)?;
    fn go(k: &Composition) -> BigUint {
        step(k, go)
    }
    Ok(go(k))
}

fn omega_dense(n: usize, w: &ExponentVector) -> Result<Vec<u32>> {
    if n < 4 {
        return Err(Error::Domain(format!("omega classes need n >= 4, got {n}")));
    }
    if let Some(lo) = w.min_var() {
        if lo < 4 || w.max_var() > n {
            return Err(Error::Domain(format!(
                "omega variables must lie in 4..={n}, got {w}"
            )));
        }
    }
    Ok(w.dense(4, n))
}

/// `int_{M_{0,n}} prod omega_i^{k_i}` for a monomial in `omega_4, ..., omega_n`.
pub fn omega_intersection(n: usize, w: &ExponentVector) -> Result<BigUint> {
    omega_intersection_with(&AsymMultinomial::new(), n, w)
}

pub fn omega_intersection_with(
    engine: &AsymMultinomial,
    n: usize,
    w: &ExponentVector,
) -> Result<BigUint> {
    let dense = omega_dense(n, w)?;
    let m = (n - 3) as u32;
    if w.degree() != m {
        return Ok(BigUint::zero());
    }
    engine.get(m, &reverse(&Composition::new(dense)))
}

/// Expands one step of the omega recursion: the monomials on `M_{0,n-1}`
/// whose integrals sum to the integral of `w` on `M_{0,n}`.
pub fn omega_recursion_step(n: usize, w: &ExponentVector) -> Result<Vec<ExponentVector>> {
    let dense = omega_dense(n, w)?;
    if n < 5 {
        return Err(Error::Domain("no recursion step below n = 5".into()));
    }
    if w.degree() as usize != n - 3 {
        return Err(Error::Domain(format!(
            "degree {} does not match dimension {}",
            w.degree(),
            n - 3
        )));
    }
    let k = reverse(&Composition::new(dense));
    let i = leftmost_zero_index(&k);
    (1..i)
        .map(|j| {
            let r = reverse(&reduce(&k, j)?);
            Ok(ExponentVector::from_dense(r.parts(), 4))
        })
        .collect()
}
