//! Column-restricted parking functions and the insertion maps between
//! `CPF_•(n-1)` and `CPF(n)`.
//!
//! A parking function of size `n` is stored as `n` columns of labels, each
//! column sorted bottom to top. The Dyck path is derived from the column
//! heights: column `c` contributes `k_c` up steps followed by one right step.
//! Lattice points on the path are numbered `0..=2n` by the number of steps
//! taken from the origin.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::compositions::{is_catalan_parts, Composition};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PfRecord", into = "PfRecord")]
pub struct ParkingFunction {
    columns: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PfRecord {
    n: usize,
    columns: Vec<Vec<usize>>,
}

impl TryFrom<PfRecord> for ParkingFunction {
    type Error = Error;

    fn try_from(r: PfRecord) -> Result<Self> {
        let pf = ParkingFunction::new(r.columns)?;
        if pf.size() != r.n {
            return Err(Error::Shape(format!(
                "n = {} but {} columns were given",
                r.n,
                pf.size()
            )));
        }
        Ok(pf)
    }
}

impl From<ParkingFunction> for PfRecord {
    fn from(pf: ParkingFunction) -> Self {
        PfRecord {
            n: pf.size(),
            columns: pf.columns,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Up,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Badness {
    Good,
    Bad,
}

impl fmt::Display for Badness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Badness::Good => "good",
            Badness::Bad => "bad",
        })
    }
}

impl ParkingFunction {
    /// Validates that the columns partition `1..=n` (with `n` the number of
    /// columns) and that the heights form a Catalan composition.
    pub fn new(mut columns: Vec<Vec<usize>>) -> Result<Self> {
        let n = columns.len();
        let mut seen = vec![false; n + 1];
        for col in &mut columns {
            col.sort_unstable();
            for &a in col.iter() {
                if a == 0 || a > n {
                    return Err(Error::Label(format!("label {a} outside 1..={n}")));
                }
                if seen[a] {
                    return Err(Error::Label(format!("label {a} appears twice")));
                }
                seen[a] = true;
            }
        }
        if let Some(a) = (1..=n).find(|&a| !seen[a]) {
            return Err(Error::Label(format!("label {a} is missing")));
        }
        let heights: Vec<u32> = columns.iter().map(|c| c.len() as u32).collect();
        if !is_catalan_parts(&heights) {
            return Err(Error::Shape(format!(
                "column heights {} are not Catalan",
                Composition::new(heights)
            )));
        }
        Ok(ParkingFunction { columns })
    }

    /// Builds from a preference list: `prefs[a - 1]` is the 1-based column of label `a`.
    pub fn from_preferences(prefs: &[usize]) -> Result<Self> {
        let n = prefs.len();
        let mut columns = vec![Vec::new(); n];
        for (i, &c) in prefs.iter().enumerate() {
            if c == 0 || c > n {
                return Err(Error::Range(format!("column {c} outside 1..={n}")));
            }
            columns[c - 1].push(i + 1);
        }
        ParkingFunction::new(columns)
    }

    pub fn to_preferences(&self) -> Vec<usize> {
        let mut prefs = vec![0; self.size()];
        for (c, col) in self.columns.iter().enumerate() {
            for &a in col {
                prefs[a - 1] = c + 1;
            }
        }
        prefs
    }

    pub fn size(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn heights(&self) -> Composition {
        Composition::new(self.columns.iter().map(|c| c.len() as u32).collect())
    }

    fn height_vec(&self) -> Vec<usize> {
        self.columns.iter().map(Vec::len).collect()
    }

    /// 1-based column holding label `a`.
    pub fn column_of(&self, a: usize) -> Option<usize> {
        col_index(&self.columns, a).map(|c| c + 1)
    }

    pub fn path(&self) -> Vec<Step> {
        let mut w = Vec::with_capacity(2 * self.size());
        for col in &self.columns {
            w.extend(std::iter::repeat_n(Step::Up, col.len()));
            w.push(Step::Right);
        }
        w
    }

    /// True when lattice point `s` is preceded by an up step and followed by a right step.
    pub fn is_upper_left_corner(&self, s: usize) -> bool {
        let w = self.path();
        s > 0 && s < w.len() && w[s - 1] == Step::Up && w[s] == Step::Right
    }

    /// Number of columns left of `a` whose labels are all smaller than `a`.
    pub fn dominance_index(&self, a: usize) -> Result<usize> {
        let c = col_index(&self.columns, a)
            .ok_or_else(|| Error::Label(format!("label {a} not present")))?;
        Ok(dominance(&self.columns, c, a))
    }

    pub fn is_column_restricted(&self) -> bool {
        column_restricted(&self.columns)
    }

    pub fn classify(&self) -> Badness {
        classify_columns(&self.columns)
    }

    /// ASCII picture: labels in their cells, `.` for empty cells, `|` for
    /// up steps and `_` for right steps.
    pub fn render(&self) -> String {
        let n = self.size();
        let w = n.to_string().len();
        let heights = self.height_vec();
        let mut base = Vec::with_capacity(n);
        let mut acc = 0;
        for &h in &heights {
            base.push(acc);
            acc += h;
        }
        let mut lines = Vec::with_capacity(n + 1);
        for y in (0..=n).rev() {
            let mut line = String::new();
            for c in 0..n {
                let (lo, hi) = (base[c], base[c] + heights[c]);
                if y >= lo && y < hi {
                    line.push('|');
                    line.push_str(&format!("{:>w$}", self.columns[c][y - lo]));
                } else if y == hi {
                    line.push(' ');
                    line.push_str(&"_".repeat(w));
                } else if y < n {
                    line.push(' ');
                    line.push_str(&format!("{:>w$}", "."));
                } else {
                    line.push_str(&" ".repeat(w + 1));
                }
            }
            lines.push(line.trim_end().to_string());
        }
        lines.join("\n")
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .columns
            .iter()
            .map(|c| {
                let labels: Vec<String> = c.iter().map(usize::to_string).collect();
                format!("{{{}}}", labels.join(","))
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PointedRecord", into = "PointedRecord")]
pub struct PointedParkingFunction {
    pf: ParkingFunction,
    point: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointedRecord {
    n: usize,
    columns: Vec<Vec<usize>>,
    point: usize,
}

impl TryFrom<PointedRecord> for PointedParkingFunction {
    type Error = Error;

    fn try_from(r: PointedRecord) -> Result<Self> {
        let pf = ParkingFunction::try_from(PfRecord {
            n: r.n,
            columns: r.columns,
        })?;
        PointedParkingFunction::new(pf, r.point)
    }
}

impl From<PointedParkingFunction> for PointedRecord {
    fn from(p: PointedParkingFunction) -> Self {
        PointedRecord {
            n: p.pf.size(),
            columns: p.pf.columns,
            point: p.point,
        }
    }
}

impl PointedParkingFunction {
    pub fn new(pf: ParkingFunction, point: usize) -> Result<Self> {
        if point > 2 * pf.size() {
            return Err(Error::Range(format!(
                "point {point} outside 0..={}",
                2 * pf.size()
            )));
        }
        Ok(PointedParkingFunction { pf, point })
    }

    pub fn pf(&self) -> &ParkingFunction {
        &self.pf
    }

    pub fn point(&self) -> usize {
        self.point
    }

    pub fn is_corner(&self) -> bool {
        self.pf.is_upper_left_corner(self.point)
    }
}

impl fmt::Display for PointedParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {}", self.pf, self.point)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insertion {
    Iota,
    IotaPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Removal {
    Nu,
    NuPrime,
}

fn col_index(cols: &[Vec<usize>], a: usize) -> Option<usize> {
    cols.iter().position(|c| c.binary_search(&a).is_ok())
}

fn col_max(col: &[usize]) -> usize {
    col.last().copied().unwrap_or(0)
}

fn dominance(cols: &[Vec<usize>], c: usize, a: usize) -> usize {
    cols[..c].iter().filter(|col| col_max(col) < a).count()
}

/// `d(a)` for every label, indexed by `a - 1`.
fn dominance_profile(cols: &[Vec<usize>]) -> Vec<usize> {
    let n: usize = cols.iter().map(Vec::len).sum();
    let mut out = vec![0; n];
    for (c, col) in cols.iter().enumerate() {
        for &a in col {
            out[a - 1] = dominance(cols, c, a);
        }
    }
    out
}

fn column_restricted(cols: &[Vec<usize>]) -> bool {
    cols.iter()
        .enumerate()
        .all(|(c, col)| col.iter().all(|&a| dominance(cols, c, a) < a))
}

fn classify_columns(cols: &[Vec<usize>]) -> Badness {
    let n = cols.len();
    let x = match col_index(cols, n) {
        Some(x) => x,
        None => return Badness::Good,
    };
    let col = &cols[x];
    if col.len() < 2 {
        return Badness::Good;
    }
    let r = col[col.len() - 2];
    match cols.get(x + 1).and_then(|c| c.first()) {
        Some(&c) if c > r => Badness::Good,
        _ => Badness::Bad,
    }
}

/// Column and number of up steps within it that precede lattice point `s`.
/// Returns `(heights.len(), 0)` for the end point.
fn locate(heights: &[usize], s: usize) -> (usize, usize) {
    let mut base = 0;
    for (c, &h) in heights.iter().enumerate() {
        if s <= base + h {
            return (c, s - base);
        }
        base += h + 1;
    }
    (heights.len(), 0)
}

/// Index of the lattice point just before the up step of column `c` at offset `off`.
fn point_of(heights: &[usize], c: usize, off: usize) -> usize {
    heights[..c].iter().map(|h| h + 1).sum::<usize>() + off
}

fn sorted_insert(col: &mut Vec<usize>, a: usize) {
    let pos = col.binary_search(&a).unwrap_or_else(|p| p);
    col.insert(pos, a);
}

fn finish(cols: Vec<Vec<usize>>, what: &str) -> Result<ParkingFunction> {
    let pf = ParkingFunction::new(cols.clone())
        .map_err(|e| Error::Inconsistency(format!("{what} produced an invalid path: {e}")))?;
    if !pf.is_column_restricted() {
        return Err(Error::Inconsistency(format!(
            "{what} produced {pf}, which is not column-restricted"
        )));
    }
    Ok(pf)
}

fn require_cpf(pf: &ParkingFunction) -> Result<()> {
    if !pf.is_column_restricted() {
        return Err(Error::Domain(format!("{pf} is not column-restricted")));
    }
    Ok(())
}

/// Dominance profiles recorded while computing `iota`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IotaTrace {
    /// `d(a)` in the input, indexed by `a - 1`.
    pub before: Vec<usize>,
    /// `d(a)` after step 1, indexed by `a - 1` (includes `n`).
    pub after_step1: Vec<usize>,
    /// `d(a)` in the output.
    pub after_step2: Vec<usize>,
    /// Columns moved in step 2 (1-based, in the step-1 configuration).
    pub moved: Vec<usize>,
    /// The label directly below the insertion point, when it is a corner.
    pub r: Option<usize>,
}

fn iota_columns(pp: &PointedParkingFunction) -> Result<(Vec<Vec<usize>>, IotaTrace)> {
    let p = &pp.pf;
    require_cpf(p)?;
    let n = p.size() + 1;
    let heights = p.height_vec();
    let (c, off) = locate(&heights, pp.point);
    let mut cols = p.columns.clone();
    let r = (c < cols.len() && off > 0 && off == heights[c]).then(|| cols[c][off - 1]);

    // Step 1: one step up and one step right at the point.
    if c == cols.len() {
        cols.push(vec![n]);
    } else {
        let tail = cols[c].split_off(off);
        cols[c].push(n);
        cols.insert(c + 1, tail);
    }
    let after_step1 = dominance_profile(&cols);

    // Step 2: shift the columns holding a label below r.
    let mut moved = Vec::new();
    if let Some(r) = r {
        let affected: Vec<usize> = (c + 1..n)
            .filter(|&i| cols[i].first().is_some_and(|&b| b < r))
            .collect();
        for ci in affected {
            let e = (0..ci).rev().find(|&j| cols[j].is_empty()).filter(|&e| e > c);
            let e = e.ok_or_else(|| {
                Error::Inconsistency(format!("no empty column left of column {}", ci + 1))
            })?;
            cols.swap(e, ci);
            moved.push(ci + 1);
        }
    }
    let trace = IotaTrace {
        before: dominance_profile(&p.columns),
        after_step1,
        after_step2: dominance_profile(&cols),
        moved,
        r,
    };
    Ok((cols, trace))
}

/// Inserts `n` into a pointed CPF of size `n - 1`.
pub fn insert_iota(pp: &PointedParkingFunction) -> Result<ParkingFunction> {
    let (cols, trace) = iota_columns(pp)?;
    debug_assert!(lemma_bookkeeping_holds(pp.pf(), &trace, &cols), "{pp}: {trace:?}");
    finish(cols, "iota")
}

/// `insert_iota` together with the dominance profiles along the way.
pub fn insert_iota_traced(pp: &PointedParkingFunction) -> Result<(ParkingFunction, IotaTrace)> {
    let (cols, trace) = iota_columns(pp)?;
    Ok((finish(cols, "iota")?, trace))
}

// On a corner insertion exactly the labels a < r right of r gain one in
// step 1, and step 2 gives every label below r its original index back.
fn lemma_bookkeeping_holds(p: &ParkingFunction, t: &IotaTrace, out: &[Vec<usize>]) -> bool {
    let Some(r) = t.r else {
        return t.before[..] == t.after_step2[..t.before.len()];
    };
    let xr = col_index(&p.columns, r).expect("r present");
    let step1_ok = (1..=p.size()).all(|a| {
        let right_of_r = col_index(&p.columns, a).is_some_and(|c| c > xr);
        let gained = t.after_step1[a - 1] > t.before[a - 1];
        let expected_gain = a < r && right_of_r;
        gained == expected_gain && (!gained || t.after_step1[a - 1] == t.before[a - 1] + 1)
    });
    let step2_ok = (1..r).all(|a| t.after_step2[a - 1] == t.before[a - 1]);
    step1_ok && step2_ok && col_index(out, r) == Some(xr)
}

/// Removes `n` from a CPF of size `n`; inverse of `insert_iota`.
pub fn remove_nu(q: &ParkingFunction) -> Result<PointedParkingFunction> {
    require_cpf(q)?;
    let n = q.size();
    if n < 2 {
        return Err(Error::Domain("removal needs n >= 2".into()));
    }
    let mut cols = q.columns.clone();
    let x = col_index(&cols, n).expect("n present");
    if q.classify() == Badness::Bad {
        let r = cols[x][cols[x].len() - 2];
        let affected: Vec<usize> = (x + 1..n)
            .filter(|&i| cols[i].first().is_some_and(|&b| b < r))
            .collect();
        for &ci in affected.iter().rev() {
            let e = (ci + 1..n).find(|&j| cols[j].is_empty()).ok_or_else(|| {
                Error::Inconsistency(format!("no empty column right of column {}", ci + 1))
            })?;
            cols.swap(e, ci);
        }
    }
    strip_top(cols, "nu")
}

// Deletes `n` together with the right step that follows it.
fn strip_top(mut cols: Vec<Vec<usize>>, what: &str) -> Result<PointedParkingFunction> {
    let n = cols.len();
    let x = col_index(&cols, n).expect("n present");
    let heights: Vec<usize> = cols.iter().map(Vec::len).collect();
    let point = point_of(&heights, x, heights[x] - 1);
    cols[x].pop();
    if x + 1 < n {
        let next = cols.remove(x + 1);
        cols[x].extend(next);
        cols[x].sort_unstable();
    } else {
        cols.remove(x);
    }
    let pf = finish(cols, what)?;
    PointedParkingFunction::new(pf, point)
}

/// The second insertion map. Agrees with `insert_iota` away from corners.
pub fn insert_iota_prime(pp: &PointedParkingFunction) -> Result<ParkingFunction> {
    if !pp.is_corner() {
        return insert_iota(pp);
    }
    let p = &pp.pf;
    require_cpf(p)?;
    let n = p.size() + 1;
    let heights = p.height_vec();
    let (x, off) = locate(&heights, pp.point);
    let r = p.columns[x][off - 1];

    let mut cols = p.columns.clone();
    cols.push(Vec::new());
    cols[x].push(n);
    for c in (x + 1..n - 1).rev() {
        let labels: Vec<usize> = cols[c].iter().rev().copied().collect();
        for a in labels {
            if a < r {
                continue;
            }
            let fits = cols[c + 1].first().is_none_or(|&m| a < m);
            if fits {
                cols[c].retain(|&b| b != a);
                sorted_insert(&mut cols[c + 1], a);
            } else {
                let below: Vec<usize> = cols[c].iter().copied().filter(|&b| b < r).collect();
                let next_below: Vec<usize> =
                    cols[c + 1].iter().copied().filter(|&b| b < r).collect();
                if next_below.is_empty() {
                    return Err(Error::Inconsistency(format!(
                        "iota' found no labels below {r} in column {} of {}",
                        c + 2,
                        ParkingFunction { columns: cols }
                    )));
                }
                cols[c].retain(|&b| b > r);
                cols[c + 1].retain(|&b| b > r);
                cols[c].extend(next_below);
                cols[c].sort_unstable();
                cols[c + 1].extend(below);
                cols[c + 1].sort_unstable();
                break;
            }
        }
    }
    finish(cols, "iota'")
}

/// Inverse of `insert_iota_prime`. Agrees with `remove_nu` on good inputs.
pub fn remove_nu_prime(q: &ParkingFunction) -> Result<PointedParkingFunction> {
    if q.classify() == Badness::Good {
        return remove_nu(q);
    }
    require_cpf(q)?;
    let n = q.size();
    let mut cols = q.columns.clone();
    let x = col_index(&cols, n).expect("n present");
    cols[x].pop();
    let r = col_max(&cols[x]);
    for c in x + 1..n {
        let labels = cols[c].clone();
        for a in labels {
            if a < r {
                continue;
            }
            let lowest = cols[c].first() == Some(&a);
            if lowest && col_max(&cols[c - 1]) < a {
                cols[c].remove(0);
                sorted_insert(&mut cols[c - 1], a);
                continue;
            }
            let moving: Vec<usize> = cols[c].iter().copied().filter(|&b| b < r && b < a).collect();
            if moving.is_empty() || c + 1 >= n {
                return Err(Error::Inconsistency(format!(
                    "nu' cannot interchange at column {} of {}",
                    c + 1,
                    ParkingFunction { columns: cols }
                )));
            }
            let next_below: Vec<usize> = cols[c + 1].iter().copied().filter(|&b| b < r).collect();
            cols[c].retain(|b| !moving.contains(b));
            cols[c].extend(next_below);
            cols[c].sort_unstable();
            cols[c + 1].retain(|&b| b > r);
            cols[c + 1].extend(moving);
            cols[c + 1].sort_unstable();
            break;
        }
    }
    if cols.last().is_some_and(|c| !c.is_empty()) {
        return Err(Error::Inconsistency(format!(
            "nu' left labels in the last column of {}",
            ParkingFunction { columns: cols }
        )));
    }
    cols.pop();
    let pf = finish(cols, "nu'")?;
    let heights = pf.height_vec();
    let xr = col_index(&pf.columns, r).expect("r present");
    let point = point_of(&heights, xr, heights[xr]);
    PointedParkingFunction::new(pf, point)
}

pub fn insert(pp: &PointedParkingFunction, algorithm: Insertion) -> Result<ParkingFunction> {
    match algorithm {
        Insertion::Iota => insert_iota(pp),
        Insertion::IotaPrime => insert_iota_prime(pp),
    }
}

pub fn remove(q: &ParkingFunction, algorithm: Removal) -> Result<PointedParkingFunction> {
    match algorithm {
        Removal::Nu => remove_nu(q),
        Removal::NuPrime => remove_nu_prime(q),
    }
}

/// Every pointed extension of every parking function in `level`.
pub fn pointed(level: &[ParkingFunction]) -> impl Iterator<Item = PointedParkingFunction> + '_ {
    level.iter().flat_map(|p| {
        (0..=2 * p.size()).map(move |s| PointedParkingFunction {
            pf: p.clone(),
            point: s,
        })
    })
}

/// Grows `CPF(n)` from `CPF(1)` by repeated insertion.
pub fn build_all_by_insertion(n: usize, algorithm: Insertion) -> Result<BTreeSet<ParkingFunction>> {
    if n < 1 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let mut level = vec![ParkingFunction {
        columns: vec![vec![1]],
    }];
    for _ in 2..=n {
        let mut next = BTreeSet::new();
        for pp in pointed(&level) {
            let q = insert(&pp, algorithm)?;
            if !next.insert(q.clone()) {
                return Err(Error::Duplicate(format!("{q} produced twice (last from {pp})")));
            }
        }
        level = next.into_iter().collect();
    }
    Ok(level.into_iter().collect())
}

fn check_heights(n: usize, k: &Composition) -> Result<()> {
    if k.len() != n || k.total() as usize != n {
        return Err(Error::Shape(format!("heights must lie in Comp({n},{n}), got {k}")));
    }
    if n > 63 {
        return Err(Error::Domain(format!("enumeration supports n <= 63, got {n}")));
    }
    Ok(())
}

/// Depth-first search over column contents, left to right. A label `a`
/// may go into column `c` only while fewer than `a` earlier columns have
/// maximum below `a`; since that count only grows, a remaining label that
/// already fails can never be placed and the branch is cut.
struct Search<'a, F> {
    heights: &'a [usize],
    maxima: Vec<usize>,
    cols: Vec<Vec<usize>>,
    visit: F,
}

impl<F: FnMut(&[Vec<usize>])> Search<'_, F> {
    fn dom(&self, a: usize) -> usize {
        self.maxima.iter().filter(|&&m| m < a).count()
    }

    fn column(&mut self, c: usize, remaining: u64) {
        if c == self.heights.len() {
            (self.visit)(&self.cols);
            return;
        }
        let allowed: Vec<usize> = labels(remaining).filter(|&a| self.dom(a) < a).collect();
        let mut chosen = Vec::with_capacity(self.heights[c]);
        self.choose(c, remaining, &allowed, 0, &mut chosen);
    }

    fn choose(&mut self, c: usize, remaining: u64, allowed: &[usize], from: usize, chosen: &mut Vec<usize>) {
        let h = self.heights[c];
        if chosen.len() == h {
            let rest = chosen.iter().fold(remaining, |m, &a| m & !(1u64 << a));
            self.maxima.push(chosen.last().copied().unwrap_or(0));
            if labels(rest).all(|a| self.dom(a) < a) {
                self.cols.push(chosen.clone());
                self.column(c + 1, rest);
                self.cols.pop();
            }
            self.maxima.pop();
            return;
        }
        let need = h - chosen.len();
        for i in from..allowed.len() {
            if allowed.len() - i < need {
                break;
            }
            chosen.push(allowed[i]);
            self.choose(c, remaining, allowed, i + 1, chosen);
            chosen.pop();
        }
    }
}

fn labels(mask: u64) -> impl Iterator<Item = usize> {
    (1..64).filter(move |&a| mask & (1u64 << a) != 0)
}

fn search_cpf(n: usize, k: &Composition, visit: impl FnMut(&[Vec<usize>])) -> Result<()> {
    check_heights(n, k)?;
    if !is_catalan_parts(k.parts()) {
        return Ok(());
    }
    let heights: Vec<usize> = k.parts().iter().map(|&h| h as usize).collect();
    let full = (1..=n).fold(0u64, |m, a| m | (1u64 << a));
    let mut s = Search {
        heights: &heights,
        maxima: Vec::with_capacity(n),
        cols: Vec::with_capacity(n),
        visit,
    };
    s.column(0, full);
    Ok(())
}

/// All members of `CPF(n, k)`, ordered by column contents.
pub fn enumerate_cpf(n: usize, k: &Composition) -> Result<Vec<ParkingFunction>> {
    let mut out = Vec::new();
    search_cpf(n, k, |cols| {
        out.push(ParkingFunction {
            columns: cols.to_vec(),
        })
    })?;
    Ok(out)
}

/// `|CPF(n, k)|` without materializing the members.
pub fn count_cpf(n: usize, k: &Composition) -> Result<u64> {
    let mut count = 0u64;
    search_cpf(n, k, |_| count += 1)?;
    Ok(count)
}

/// All of `CPF(n)`, grouped by heights in descending lexicographic order.
pub fn enumerate_all_cpf(n: usize) -> Result<Vec<ParkingFunction>> {
    let mut out = Vec::new();
    for k in crate::compositions::enumerate(n as u32, n) {
        out.extend(enumerate_cpf(n, &k)?);
    }
    Ok(out)
}
