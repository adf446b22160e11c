//! Strict partitions, the interlacing order, and boxed enumeration.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// A strictly decreasing sequence of positive integers; the empty partition
/// is allowed. The padded trailing zero of Fock-state labels is not stored
/// here; the `fock` module tracks it as a separate flag.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] > w[1]) && parts.last().map_or(true, |&p| p > 0),
            "parts must be strictly decreasing and positive"
        );
        StrictPartition { parts }
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part at 1-based index `i`, reading missing parts as 0.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn contains_part(&self, p: u32) -> bool {
        self.parts.contains(&p)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{}", p)?;
        }
        Ok(())
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Parses the comma-separated text form, e.g. "5,2,1"; the empty string is
/// the empty partition.
impl FromStr for StrictPartition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        use alloc::format;
        use alloc::string::ToString;
        let s = s.trim();
        if s.is_empty() {
            return Ok(StrictPartition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| format!("bad partition part `{}`", tok))?;
            parts.push(p);
        }
        if !(parts.windows(2).all(|w| w[0] > w[1]) && *parts.last().unwrap() > 0) {
            return Err("parts must be strictly decreasing and positive".to_string());
        }
        Ok(StrictPartition { parts })
    }
}

/// A pair of strict partitions; labels the two species / Fock components.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TwoPartition {
    pub first: StrictPartition,
    pub second: StrictPartition,
}

impl TwoPartition {
    pub fn new(first: StrictPartition, second: StrictPartition) -> Self {
        TwoPartition { first, second }
    }

    pub fn weight(&self) -> u32 {
        self.first.weight() + self.second.weight()
    }
}

impl fmt::Debug for TwoPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.first, self.second)
    }
}

/// `mu > nu` in the interlacing order: `mu_1 >= nu_1 >= mu_2 >= nu_2 >= ...`
/// with missing parts read as 0.
pub fn interlaces(mu: &StrictPartition, nu: &StrictPartition) -> bool {
    let n = mu.len().max(nu.len());
    for i in 1..=n {
        if mu.part(i) < nu.part(i) || nu.part(i) < mu.part(i + 1) {
            return false;
        }
    }
    true
}

/// `#(mu|nu)`: the number of parts of `mu` that are not parts of `nu`
/// (parts are distinct by strictness, so this is a set difference count).
pub fn sharp_count(mu: &StrictPartition, nu: &StrictPartition) -> u32 {
    mu.parts().iter().filter(|p| !nu.contains_part(**p)).count() as u32
}

/// All strict partitions with at most `n_rows` parts, each part at most
/// `max_part`, in weight-graded order (ties broken lexicographically).
pub fn strict_partitions_in_box(n_rows: usize, max_part: u32) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    // parts are a decreasing-ordered subset of 1..=max_part of size <= n_rows
    fn rec(next: u32, len_left: usize, acc: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
        out.push(StrictPartition::new(acc.clone()));
        if len_left == 0 {
            return;
        }
        let mut p = next;
        while p >= 1 {
            acc.push(p);
            rec(p - 1, len_left - 1, acc, out);
            acc.pop();
            p -= 1;
        }
    }
    let mut acc = Vec::new();
    rec(max_part, n_rows, &mut acc, &mut out);
    sort_partitions(&mut out);
    out
}

/// All strict `mu` in the `[n_rows, max_part]` box with `mu > nu`.
pub fn interlacing_extensions(
    nu: &StrictPartition,
    n_rows: usize,
    max_part: u32,
) -> Vec<StrictPartition> {
    let l = nu.len();
    let mut out = Vec::new();
    if l > n_rows || nu.part(1) > max_part {
        return out;
    }
    // mu has l or l+1 parts; choose mu_i in [max(nu_i, mu_{i+1}+1), nu_{i-1}]
    fn rec(
        nu: &StrictPartition,
        len: usize,
        i: usize,
        prev: u32, // mu_{i-1}, upper bound exclusive tie via strictness
        acc: &mut Vec<u32>,
        out: &mut Vec<StrictPartition>,
    ) {
        if i > len {
            out.push(StrictPartition::new(acc.clone()));
            return;
        }
        // nu_{i-1} >= mu_i >= nu_i, mu_i < mu_{i-1}, mu_i >= 1
        let hi = if i == 1 {
            prev
        } else {
            nu.part(i - 1).min(prev - 1)
        };
        let lo = nu.part(i).max(1);
        let mut v = hi;
        while v >= lo {
            acc.push(v);
            rec(nu, len, i + 1, v, acc, out);
            acc.pop();
            v -= 1;
        }
    }
    let mut acc = Vec::new();
    for len in [l, l + 1] {
        if len > n_rows {
            continue;
        }
        rec(nu, len, 1, max_part, &mut acc, &mut out);
    }
    sort_partitions(&mut out);
    out.dedup();
    out
}

/// All strict `nu` with `mu > nu` (finite: `nu_i` ranges over
/// `[mu_{i+1}, mu_i]` with parts dropped at 0).
pub fn interlacing_restrictions(mu: &StrictPartition) -> Vec<StrictPartition> {
    fn rec(
        mu: &StrictPartition,
        i: usize,
        prev: u32,
        acc: &mut Vec<u32>,
        out: &mut Vec<StrictPartition>,
    ) {
        if i > mu.len() {
            out.push(StrictPartition::new(acc.clone()));
            return;
        }
        let hi = mu.part(i).min(prev - 1);
        let lo = mu.part(i + 1);
        if lo == 0 {
            // nu may end here
            out.push(StrictPartition::new(acc.clone()));
        }
        let mut v = hi;
        while v >= lo.max(1) {
            acc.push(v);
            rec(mu, i + 1, v, acc, out);
            acc.pop();
            v -= 1;
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    rec(mu, 1, u32::MAX, &mut acc, &mut out);
    sort_partitions(&mut out);
    out
}

/// All strict `mu > nu` with `|mu| - |nu| <= rise` (the upward interlacing
/// sum is infinite; the weight budget makes it finite).
pub fn interlacing_covers(nu: &StrictPartition, rise: u32) -> Vec<StrictPartition> {
    fn rec(
        nu: &StrictPartition,
        len: usize,
        i: usize,
        prev: u32,
        budget: u32,
        acc: &mut Vec<u32>,
        out: &mut Vec<StrictPartition>,
    ) {
        if i > len {
            out.push(StrictPartition::new(acc.clone()));
            return;
        }
        // mu_i in [nu_i, nu_{i-1}], strictly below mu_{i-1}, within budget
        let hi = if i == 1 {
            nu.part(1) + budget
        } else {
            nu.part(i - 1).min(prev - 1)
        };
        let lo = nu.part(i).max(1);
        let mut v = hi.min(nu.part(i) + budget);
        while v >= lo {
            let spent = v - nu.part(i);
            acc.push(v);
            rec(nu, len, i + 1, v, budget - spent, acc, out);
            acc.pop();
            if v == lo {
                break;
            }
            v -= 1;
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    for len in [nu.len(), nu.len() + 1] {
        if len == 0 {
            out.push(StrictPartition::empty());
            continue;
        }
        rec(nu, len, 1, u32::MAX, rise, &mut acc, &mut out);
    }
    out.retain(|mu| interlaces(mu, nu) && mu.weight() <= nu.weight() + rise);
    sort_partitions(&mut out);
    out.dedup();
    out
}

/// Weight-graded order with lexicographic tie-break; the fixed enumeration
/// order used everywhere so that reports are reproducible.
pub fn sort_partitions(parts: &mut [StrictPartition]) {
    parts.sort_by(|a, b| {
        a.weight()
            .cmp(&b.weight())
            .then_with(|| a.parts().cmp(b.parts()))
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec())
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlaces(&sp(&[1]), &sp(&[])));
        assert!(interlaces(&sp(&[5, 2, 1]), &sp(&[4, 1])));
        assert!(!interlaces(&sp(&[4, 1]), &sp(&[5, 2, 1])));
        assert!(interlaces(&sp(&[5, 2, 1]), &sp(&[4, 2])));
        assert!(!interlaces(&sp(&[3]), &sp(&[3, 1])));
    }

    #[test]
    fn interlacing_length_relation() {
        let all = strict_partitions_in_box(4, 5);
        for mu in &all {
            for nu in &all {
                if interlaces(mu, nu) {
                    assert!(nu.len() == mu.len() || nu.len() + 1 == mu.len());
                }
            }
        }
    }

    #[test]
    fn sharp_count_examples() {
        assert_eq!(sharp_count(&sp(&[5, 2, 1]), &sp(&[4, 1])), 2);
        assert_eq!(sharp_count(&sp(&[3, 1]), &sp(&[3, 1])), 0);
        assert_eq!(sharp_count(&sp(&[1]), &sp(&[])), 1);
    }

    #[test]
    fn sharp_count_symmetric_difference() {
        let all = strict_partitions_in_box(3, 4);
        for mu in &all {
            for nu in &all {
                let sym = mu.parts().iter().filter(|p| !nu.contains_part(**p)).count()
                    + nu.parts().iter().filter(|p| !mu.contains_part(**p)).count();
                assert_eq!((sharp_count(mu, nu) + sharp_count(nu, mu)) as usize, sym);
            }
        }
    }

    #[test]
    fn box_enumeration_examples() {
        assert_eq!(strict_partitions_in_box(0, 7), vec![sp(&[])]);
        assert_eq!(strict_partitions_in_box(1, 1), vec![sp(&[]), sp(&[1])]);
        assert_eq!(
            strict_partitions_in_box(2, 2),
            vec![sp(&[]), sp(&[1]), sp(&[2]), sp(&[2, 1])]
        );
    }

    #[test]
    fn box_count_matches_generating_polynomial() {
        // |box(N, M)| = sum of coefficients of prod_k (1 + t q^k) with t-degree <= N
        for n in 0..=6usize {
            for m in 0..=6u32 {
                // poly[j][w] = number of strict partitions with j parts, weight w
                let wmax = (m * (m + 1) / 2 + 1) as usize;
                let mut poly = vec![vec![0u64; wmax]; n + 2];
                poly[0][0] = 1;
                for k in 1..=m as usize {
                    for j in (0..=n).rev() {
                        for w in (0..wmax).rev() {
                            if poly[j][w] > 0 && w + k < wmax {
                                let add = poly[j][w];
                                poly[j + 1][w + k] += add;
                            }
                        }
                    }
                }
                let count: u64 = poly[..=n].iter().flatten().sum();
                assert_eq!(strict_partitions_in_box(n, m).len() as u64, count);
            }
        }
    }

    #[test]
    fn extension_examples() {
        assert_eq!(
            interlacing_extensions(&sp(&[]), 1, 2),
            vec![sp(&[]), sp(&[1]), sp(&[2])]
        );
        assert_eq!(
            interlacing_extensions(&sp(&[1]), 2, 2),
            vec![sp(&[1]), sp(&[2]), sp(&[2, 1])]
        );
        assert_eq!(interlacing_extensions(&sp(&[4]), 1, 4), vec![sp(&[4])]);
    }

    #[test]
    fn extensions_agree_with_filter() {
        for n in 0..=3usize {
            for m in 0..=4u32 {
                for nu in strict_partitions_in_box(n, m) {
                    let fast = interlacing_extensions(&nu, n, m);
                    let slow: Vec<_> = strict_partitions_in_box(n, m)
                        .into_iter()
                        .filter(|mu| interlaces(mu, &nu))
                        .collect();
                    assert_eq!(fast, slow, "nu = {:?} box [{}, {}]", nu, n, m);
                }
            }
        }
    }

    #[test]
    fn covers_agree_with_filter() {
        for nu in strict_partitions_in_box(2, 4) {
            for rise in 0..=4u32 {
                let fast = interlacing_covers(&nu, rise);
                let slow: Vec<_> = strict_partitions_in_box(nu.len() + 1, nu.part(1) + rise)
                    .into_iter()
                    .filter(|mu| interlaces(mu, &nu) && mu.weight() <= nu.weight() + rise)
                    .collect();
                assert_eq!(fast, slow, "nu = {:?}, rise = {}", nu, rise);
            }
        }
    }

    #[test]
    fn restrictions_agree_with_filter() {
        for mu in strict_partitions_in_box(3, 5) {
            let fast = interlacing_restrictions(&mu);
            // any nu below mu has parts <= mu_1 and at most l(mu) parts
            let slow: Vec<_> = strict_partitions_in_box(mu.len(), mu.part(1))
                .into_iter()
                .filter(|nu| interlaces(&mu, nu))
                .collect();
            assert_eq!(fast, slow, "mu = {:?}", mu);
        }
        assert_eq!(interlacing_restrictions(&sp(&[])), vec![sp(&[])]);
        assert_eq!(
            interlacing_restrictions(&sp(&[2, 1])),
            vec![sp(&[1]), sp(&[2]), sp(&[2, 1])]
        );
    }

    #[test]
    fn text_round_trip() {
        use alloc::string::ToString;
        for s in ["", "5,2,1", "3"] {
            let p: StrictPartition = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("1,2".parse::<StrictPartition>().is_err());
        assert!("0".parse::<StrictPartition>().is_err());
        assert!("x".parse::<StrictPartition>().is_err());
    }
}
