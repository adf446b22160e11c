//! Plane partitions, diagonal slicing, the path statistic, and boxed
//! enumeration of strict plane partitions.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::partition::{interlacing_extensions, sharp_count, StrictPartition};
use crate::qsqrt2::QSqrt2;
use crate::series::{MultiSeries, SeriesContext};

/// A plane partition: positive entries, weakly decreasing along rows and
/// columns, with weakly decreasing row lengths (Young-diagram support).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PlanePartition {
    rows: Vec<Vec<u32>>,
}

impl PlanePartition {
    pub fn new(rows: Vec<Vec<u32>>) -> Self {
        let pp = PlanePartition { rows };
        assert!(pp.is_valid(), "not a plane partition");
        pp
    }

    pub fn empty() -> Self {
        PlanePartition { rows: Vec::new() }
    }

    fn is_valid(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() || row.iter().any(|&v| v == 0) {
                return false;
            }
            if !row.windows(2).all(|w| w[0] >= w[1]) {
                return false;
            }
            if i > 0 {
                if row.len() > self.rows[i - 1].len() {
                    return false;
                }
                if row
                    .iter()
                    .enumerate()
                    .any(|(j, &v)| v > self.rows[i - 1][j])
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at 1-based (row, col), 0 if outside the support.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        if i >= 1 && j >= 1 {
            self.rows
                .get(i - 1)
                .and_then(|r| r.get(j - 1))
                .copied()
                .unwrap_or(0)
        } else {
            0
        }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }

    /// True iff every diagonal slice is strictly decreasing.
    pub fn is_strict(&self) -> bool {
        self.try_slices().is_some()
    }

    fn slice_at(&self, k: i64) -> Option<StrictPartition> {
        let mut parts = Vec::new();
        let mut t = 1usize;
        loop {
            let (i, j) = if k >= 0 {
                (t, t + k as usize)
            } else {
                (t + (-k) as usize, t)
            };
            let v = self.entry(i, j);
            if v == 0 {
                break;
            }
            parts.push(v);
            t += 1;
        }
        if parts.windows(2).all(|w| w[0] > w[1]) {
            Some(StrictPartition::new(parts))
        } else {
            None
        }
    }

    fn try_slices(&self) -> Option<SlicedPP> {
        let center = self.slice_at(0)?;
        let mut left = Vec::new();
        for m in 1..self.num_rows() as i64 {
            let s = self.slice_at(-m)?;
            if s.is_empty() {
                break;
            }
            left.push(s);
        }
        let mut right = Vec::new();
        for m in 1..self.num_cols() as i64 {
            let s = self.slice_at(m)?;
            if s.is_empty() {
                break;
            }
            right.push(s);
        }
        Some(SlicedPP {
            left,
            center,
            right,
        })
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut first = true;
            for v in row {
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{}", v)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Parses the text form: one row per line, entries separated by spaces.
impl core::str::FromStr for PlanePartition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        use alloc::format;
        use alloc::string::ToString;
        let mut rows = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                row.push(
                    tok.parse::<u32>()
                        .map_err(|_| format!("bad entry `{}`", tok))?,
                );
            }
            rows.push(row);
        }
        let pp = PlanePartition { rows };
        if !pp.is_valid() {
            return Err("not a plane partition".to_string());
        }
        Ok(pp)
    }
}

/// The diagonal slices of a strict plane partition: `left[m-1]` holds the
/// slice at diagonal `-m`, `right[m-1]` the slice at `+m`. Slices interlace
/// towards the center and taper to the empty partition on both sides.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SlicedPP {
    left: Vec<StrictPartition>,
    center: StrictPartition,
    right: Vec<StrictPartition>,
}

impl SlicedPP {
    pub fn center(&self) -> &StrictPartition {
        &self.center
    }

    /// Slice at signed diagonal index `k` (empty outside the stored range).
    pub fn slice(&self, k: i64) -> StrictPartition {
        let list = if k < 0 { &self.left } else { &self.right };
        if k == 0 {
            return self.center.clone();
        }
        let m = (k.unsigned_abs() as usize) - 1;
        list.get(m).cloned().unwrap_or_else(StrictPartition::empty)
    }

    pub fn left_len(&self) -> usize {
        self.left.len()
    }

    pub fn right_len(&self) -> usize {
        self.right.len()
    }

    pub fn weight(&self) -> u32 {
        self.center.weight()
            + self.left.iter().map(|s| s.weight()).sum::<u32>()
            + self.right.iter().map(|s| s.weight()).sum::<u32>()
    }

    /// Rebuilds the matrix; inverse of [`diagonal_slices`].
    pub fn reassemble(&self) -> PlanePartition {
        let n_rows = if self.center.is_empty() {
            0
        } else {
            self.left.len() + 1
        };
        let mut rows = Vec::new();
        for i in 1..=n_rows {
            let mut row = Vec::new();
            let mut j = 1usize;
            loop {
                let k = j as i64 - i as i64;
                let t = if k >= 0 { i } else { j };
                let v = self.slice(k).part(t);
                if v == 0 {
                    break;
                }
                row.push(v);
                j += 1;
            }
            if row.is_empty() {
                break;
            }
            rows.push(row);
        }
        PlanePartition::new(rows)
    }
}

/// Slices a strict plane partition along its anti-diagonals.
///
/// Panics when some slice is not strict; use [`PlanePartition::is_strict`]
/// to test first.
pub fn diagonal_slices(pi: &PlanePartition) -> SlicedPP {
    pi.try_slices()
        .expect("plane partition is not strict; diagonal slices are not strict partitions")
}

/// How to compute the path statistic `p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathMethod {
    /// Evaluate the exponent identity over the diagonal slices:
    /// `-l(pi_0) + sum #(pi_{-i+1}|pi_{-i}) + sum #(pi_{j-1}|pi_j)`.
    Formula,
    /// Count 4-adjacent connected components of equal-value cells.
    Regions,
}

/// The path statistic `p(pi)` of a strict plane partition, computed by the
/// requested method; the two methods agreeing is the content of the slice
/// identity checked by the harness.
pub fn path_exponent(pi: &PlanePartition, method: PathMethod) -> u32 {
    match method {
        PathMethod::Formula => {
            let s = diagonal_slices(pi);
            let mut total: i64 = -(s.center().len() as i64);
            for i in 1..=(s.left_len() as i64 + 1) {
                total += sharp_count(&s.slice(-i + 1), &s.slice(-i)) as i64;
            }
            for j in 1..=(s.right_len() as i64 + 1) {
                total += sharp_count(&s.slice(j - 1), &s.slice(j)) as i64;
            }
            assert!(total >= 0, "path exponent must be non-negative");
            total as u32
        }
        PathMethod::Regions => {
            assert!(
                pi.is_strict(),
                "path statistic requires a strict plane partition"
            );
            count_equal_value_regions(pi)
        }
    }
}

/// 4-adjacent connected components of equal-value cells, by union-find.
fn count_equal_value_regions(pi: &PlanePartition) -> u32 {
    let rows = pi.rows();
    let mut ids: Vec<Vec<usize>> = Vec::new();
    let mut n = 0usize;
    for row in rows {
        ids.push((n..n + row.len()).collect());
        n += row.len();
    }
    let mut uf = UnionFind::new(n);
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if j + 1 < row.len() && row[j + 1] == v {
                uf.union(ids[i][j], ids[i][j + 1]);
            }
            if i + 1 < rows.len() && rows[i + 1].get(j) == Some(&v) {
                uf.union(ids[i][j], ids[i + 1][j]);
            }
        }
    }
    uf.num_components() as u32
}

struct UnionFind {
    parent: Vec<usize>,
    len: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            len: n,
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn num_components(&mut self) -> usize {
        let mut roots: Vec<usize> = (0..self.len).map(|i| self.find(i)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }
}

/// All strict plane partitions confined to `n_rows x n_cols x max_entry`,
/// generated as interlacing chains of boxed strict partitions and
/// reassembled; weight-graded deterministic order.
pub fn enumerate_boxed_strict(n_rows: usize, n_cols: usize, max_entry: u32) -> Vec<PlanePartition> {
    // chains of `steps` interlacing extensions starting from the empty
    // partition, grouped by their final partition
    fn chains_to(
        steps: usize,
        max_entry: u32,
        cache: &mut BTreeMap<StrictPartition, Vec<StrictPartition>>,
    ) -> BTreeMap<StrictPartition, Vec<Vec<StrictPartition>>> {
        let mut acc: BTreeMap<StrictPartition, Vec<Vec<StrictPartition>>> = BTreeMap::new();
        acc.entry(StrictPartition::empty())
            .or_default()
            .push(Vec::new());
        for _ in 0..steps {
            let mut next: BTreeMap<StrictPartition, Vec<Vec<StrictPartition>>> = BTreeMap::new();
            for (last, chains) in acc {
                let exts = cache
                    .entry(last.clone())
                    .or_insert_with(|| interlacing_extensions(&last, last.len() + 1, max_entry))
                    .clone();
                for ext in exts {
                    for chain in &chains {
                        let mut c = chain.clone();
                        c.push(ext.clone());
                        next.entry(ext.clone()).or_default().push(c);
                    }
                }
            }
            acc = next;
        }
        acc
    }

    if n_rows == 0 || n_cols == 0 || max_entry == 0 {
        return vec![PlanePartition::empty()];
    }
    let mut cache = BTreeMap::new();
    let left_chains = chains_to(n_rows, max_entry, &mut cache);
    let right_chains = chains_to(n_cols, max_entry, &mut cache);
    let mut out = Vec::new();
    for (center, lefts) in &left_chains {
        let Some(rights) = right_chains.get(center) else {
            continue;
        };
        for lc in lefts {
            for rc in rights {
                // lc = [pi_{-n+1}, ..., pi_{-1}, pi_0] ascending towards center
                let left: Vec<StrictPartition> = lc.iter().rev().skip(1).cloned().collect();
                let right: Vec<StrictPartition> = rc.iter().rev().skip(1).cloned().collect();
                let sliced = SlicedPP {
                    left,
                    center: center.clone(),
                    right,
                };
                out.push(sliced.reassemble());
            }
        }
    }
    out.sort_by(|a, b| {
        a.weight()
            .cmp(&b.weight())
            .then_with(|| a.rows().cmp(b.rows()))
    });
    out.dedup();
    out
}

/// All plane partitions (not necessarily strict) of weight at most `w`,
/// enumerated row by row. Used as the brute-force oracle behind the
/// generating-function checks.
pub fn enumerate_by_weight(w: u32) -> Vec<PlanePartition> {
    // rows bounded above (componentwise) by `bound`, of weight <= budget
    fn rows_below(bound: &[u32], budget: u32) -> Vec<Vec<u32>> {
        fn rec(
            bound: &[u32],
            j: usize,
            prev: u32,
            budget: u32,
            acc: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            out.push(acc.clone());
            if j >= bound.len() {
                return;
            }
            let hi = bound[j].min(prev).min(budget);
            for v in (1..=hi).rev() {
                acc.push(v);
                rec(bound, j + 1, v, budget - v, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        let mut acc = Vec::new();
        rec(bound, 0, u32::MAX, budget, &mut acc, &mut out);
        out
    }

    fn rec(bound: Vec<u32>, budget: u32, acc: &mut Vec<Vec<u32>>, out: &mut Vec<PlanePartition>) {
        out.push(PlanePartition::new(acc.clone()));
        for row in rows_below(&bound, budget) {
            if row.is_empty() {
                continue;
            }
            let spent: u32 = row.iter().sum();
            acc.push(row.clone());
            rec(row, budget - spent, acc, out);
            acc.pop();
        }
    }

    let mut out = Vec::new();
    // first row: any partition of weight <= w (unbounded entries up to w)
    let first_bound = vec![w; w as usize];
    let mut acc = Vec::new();
    if w == 0 {
        return vec![PlanePartition::empty()];
    }
    rec(first_bound, w, &mut acc, &mut out);
    out.sort_by(|a, b| {
        a.weight()
            .cmp(&b.weight())
            .then_with(|| a.rows().cmp(b.rows()))
    });
    out.dedup();
    out
}

/// The monomial weight `B_pi = 2^{p(pi)} prod x_i^{|pi_{-i+1}|-|pi_{-i}|}
/// z_i^{|pi_{i-1}|-|pi_i|}` of a strict plane partition.
///
/// `x_vars` and `z_vars` are variable indices in `ctx`; panics when the
/// slice structure needs more variables than supplied.
pub fn b_weight(
    pi: &PlanePartition,
    x_vars: &[usize],
    z_vars: &[usize],
    ctx: &Arc<SeriesContext>,
) -> MultiSeries {
    let s = diagonal_slices(pi);
    let p = path_exponent(pi, PathMethod::Regions);
    assert!(
        s.left_len() < x_vars.len() || (s.left_len() == 0 && s.center().is_empty()),
        "not enough x variables for {} left slices",
        s.left_len()
    );
    assert!(
        s.right_len() < z_vars.len() || (s.right_len() == 0 && s.center().is_empty()),
        "not enough z variables for {} right slices",
        s.right_len()
    );
    let mut exps: Vec<(usize, u32)> = Vec::new();
    for (i, &xv) in x_vars.iter().enumerate() {
        let d = s.slice(-(i as i64)).weight() - s.slice(-(i as i64) - 1).weight();
        if d > 0 {
            exps.push((xv, d));
        }
    }
    for (i, &zv) in z_vars.iter().enumerate() {
        let d = s.slice(i as i64).weight() - s.slice(i as i64 + 1).weight();
        if d > 0 {
            exps.push((zv, d));
        }
    }
    MultiSeries::monomial(ctx, &exps, QSqrt2::pow2(p as i64))
}
