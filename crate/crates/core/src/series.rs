//! Truncated multivariate formal power series over `Q(sqrt 2)`.
//!
//! A series lives in a fixed [`SeriesContext`]: an ordered list of variable
//! names together with a truncation policy (per-variable exponent caps and/or
//! a total-degree cap). Terms above any cap are discarded eagerly and zero
//! coefficients are never stored, so two series over the same context are
//! equal iff their term maps are equal.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::qsqrt2::QSqrt2;

/// Variable names plus truncation policy shared by a family of series.
///
/// Every variable must either carry its own exponent cap or be covered by the
/// total-degree cap; this guarantees each context admits only finitely many
/// monomials, which is what makes series inversion terminate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesContext {
    vars: Vec<String>,
    var_caps: Vec<Option<u32>>,
    total_cap: Option<u32>,
}

impl SeriesContext {
    pub fn new(vars: &[&str], var_caps: &[Option<u32>], total_cap: Option<u32>) -> Arc<Self> {
        assert_eq!(vars.len(), var_caps.len(), "one cap slot per variable");
        if total_cap.is_none() {
            assert!(
                var_caps.iter().all(|c| c.is_some()),
                "unbounded variable requires a total-degree cap"
            );
        }
        Arc::new(SeriesContext {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            var_caps: var_caps.to_vec(),
            total_cap,
        })
    }

    /// All variables share one per-variable cap.
    pub fn uniform(vars: &[&str], cap: u32) -> Arc<Self> {
        let caps = vec![Some(cap); vars.len()];
        SeriesContext::new(vars, &caps, None)
    }

    /// Unbounded per-variable exponents under a single total-degree cap.
    pub fn total_degree(vars: &[&str], cap: u32) -> Arc<Self> {
        let caps = vec![None; vars.len()];
        SeriesContext::new(vars, &caps, Some(cap))
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> usize {
        self.vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("unknown series variable `{}`", name))
    }

    pub fn total_cap(&self) -> Option<u32> {
        self.total_cap
    }

    /// True when the exponent vector survives every cap.
    pub fn admits(&self, exps: &[u32]) -> bool {
        debug_assert_eq!(exps.len(), self.vars.len());
        for (e, cap) in exps.iter().zip(&self.var_caps) {
            if let Some(c) = cap {
                if e > c {
                    return false;
                }
            }
        }
        if let Some(t) = self.total_cap {
            if exps.iter().sum::<u32>() > t {
                return false;
            }
        }
        true
    }

    /// Upper bound on the total degree of any admissible monomial.
    pub fn degree_bound(&self) -> u32 {
        match self.total_cap {
            Some(t) => t,
            None => self.var_caps.iter().map(|c| c.unwrap()).sum(),
        }
    }
}

/// A truncated formal power series: a term map over a shared context.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiSeries {
    ctx: Arc<SeriesContext>,
    terms: BTreeMap<Vec<u32>, QSqrt2>,
}

fn same_context(a: &MultiSeries, b: &MultiSeries) {
    assert!(
        Arc::ptr_eq(&a.ctx, &b.ctx) || a.ctx == b.ctx,
        "series context mismatch"
    );
}

impl MultiSeries {
    pub fn zero(ctx: &Arc<SeriesContext>) -> Self {
        MultiSeries {
            ctx: Arc::clone(ctx),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<SeriesContext>) -> Self {
        MultiSeries::constant(ctx, QSqrt2::one())
    }

    pub fn constant(ctx: &Arc<SeriesContext>, c: QSqrt2) -> Self {
        let mut s = MultiSeries::zero(ctx);
        s.add_term(vec![0; ctx.num_vars()], c);
        s
    }

    /// Single monomial `c * prod var_i^e_i` from sparse (index, exponent) pairs.
    pub fn monomial(ctx: &Arc<SeriesContext>, exps: &[(usize, u32)], c: QSqrt2) -> Self {
        let mut e = vec![0u32; ctx.num_vars()];
        for &(i, k) in exps {
            e[i] += k;
        }
        let mut s = MultiSeries::zero(ctx);
        s.add_term(e, c);
        s
    }

    pub fn context(&self) -> &Arc<SeriesContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &QSqrt2)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> QSqrt2 {
        let key = vec![0u32; self.ctx.num_vars()];
        self.terms.get(&key).cloned().unwrap_or_else(QSqrt2::zero)
    }

    pub fn coefficient(&self, exps: &[u32]) -> QSqrt2 {
        self.terms.get(exps).cloned().unwrap_or_else(QSqrt2::zero)
    }

    /// Accumulate one term, pruning caps and zeros.
    pub fn add_term(&mut self, exps: Vec<u32>, c: QSqrt2) {
        if c.is_zero() || !self.ctx.admits(&exps) {
            return;
        }
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &MultiSeries) {
        same_context(self, rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn add(&self, rhs: &MultiSeries) -> MultiSeries {
        let mut s = self.clone();
        s.add_assign(rhs);
        s
    }

    pub fn sub(&self, rhs: &MultiSeries) -> MultiSeries {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> MultiSeries {
        MultiSeries {
            ctx: Arc::clone(&self.ctx),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &QSqrt2) -> MultiSeries {
        if c.is_zero() {
            return MultiSeries::zero(&self.ctx);
        }
        let mut s = MultiSeries::zero(&self.ctx);
        for (e, v) in &self.terms {
            s.add_term(e.clone(), c * v);
        }
        s
    }

    /// Convolution product; terms over any cap are dropped.
    pub fn mul(&self, rhs: &MultiSeries) -> MultiSeries {
        same_context(self, rhs);
        let mut s = MultiSeries::zero(&self.ctx);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if s.ctx.admits(&e) {
                    s.add_term(e, ca * cb);
                }
            }
        }
        s
    }

    pub fn pow(&self, k: u32) -> MultiSeries {
        let mut acc = MultiSeries::one(&self.ctx);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse up to caps, by the geometric expansion
    /// `(c(1-r))^{-1} = c^{-1} (1 + r + r^2 + ...)` where `r` has no constant
    /// term. Panics when the constant term is not a unit (zero).
    pub fn invert_unit(&self) -> MultiSeries {
        let c0 = self.constant_term();
        assert!(
            !c0.is_zero(),
            "series inverse requires a unit constant term"
        );
        let c0_inv = c0.invert();
        // r = 1 - s/c0
        let mut r = MultiSeries::one(&self.ctx);
        r = r.sub(&self.scale(&c0_inv));
        debug_assert!(r.constant_term().is_zero());
        let mut acc = MultiSeries::one(&self.ctx);
        let mut term = MultiSeries::one(&self.ctx);
        loop {
            term = term.mul(&r);
            if term.is_zero() {
                break;
            }
            acc.add_assign(&term);
        }
        acc.scale(&c0_inv)
    }

    /// Drop every term of total degree above `d`.
    pub fn truncate_total(&self, d: u32) -> MultiSeries {
        let mut s = MultiSeries::zero(&self.ctx);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() <= d {
                s.add_term(e.clone(), c.clone());
            }
        }
        s
    }

    /// The coefficient of `var^power` as a series over the remaining
    /// variables (the extracted variable's exponent is zeroed in the result).
    pub fn coefficient_of(&self, var: usize, power: u32) -> MultiSeries {
        let mut s = MultiSeries::zero(&self.ctx);
        for (e, c) in &self.terms {
            if e[var] == power {
                let mut e2 = e.clone();
                e2[var] = 0;
                s.add_term(e2, c.clone());
            }
        }
        s
    }

    /// Lexicographically smallest exponent vector where the two series
    /// differ, with both coefficients. `None` means equal.
    pub fn first_difference(&self, rhs: &MultiSeries) -> Option<(Vec<u32>, QSqrt2, QSqrt2)> {
        same_context(self, rhs);
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().chain(rhs.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            let a = self.coefficient(k);
            let b = rhs.coefficient(k);
            if a != b {
                return Some((k.clone(), a, b));
            }
        }
        None
    }

    fn fmt_monomial(&self, exps: &[u32]) -> String {
        use alloc::format;
        let mut parts: Vec<String> = Vec::new();
        for (i, &e) in exps.iter().enumerate() {
            if e == 1 {
                parts.push(self.ctx.vars[i].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", self.ctx.vars[i], e));
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let m = self.fmt_monomial(e);
            if m.is_empty() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", c, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn c(n: i64) -> QSqrt2 {
        QSqrt2::from_int(n)
    }

    #[test]
    fn mul_truncates() {
        let ctx = SeriesContext::uniform(&["t"], 3);
        let mut p = MultiSeries::one(&ctx); // 1 + t
        p.add_term(vec![1], c(1));
        let mut q = MultiSeries::one(&ctx); // 1 - t
        q.add_term(vec![1], c(-1));
        let r = p.mul(&q);
        let mut want = MultiSeries::one(&ctx);
        want.add_term(vec![2], c(-1));
        assert_eq!(r, want); // 1 - t^2
    }

    #[test]
    fn mul_identity() {
        let ctx = SeriesContext::uniform(&["t"], 3);
        let mut p = MultiSeries::one(&ctx);
        for k in 1..=3 {
            p.add_term(vec![k], c(2));
        }
        assert_eq!(p.mul(&MultiSeries::one(&ctx)), p);
    }

    #[test]
    fn hand_convolution() {
        // (1+q) * (1+q+q^2+q^3) = 1+2q+2q^2+2q^3 at cap 3
        let ctx = SeriesContext::uniform(&["q"], 3);
        let mut p = MultiSeries::one(&ctx);
        p.add_term(vec![1], c(1));
        let mut geom = MultiSeries::zero(&ctx);
        for k in 0..=3 {
            geom.add_term(vec![k], c(1));
        }
        let r = p.mul(&geom);
        let mut want = MultiSeries::one(&ctx);
        for k in 1..=3 {
            want.add_term(vec![k], c(2));
        }
        assert_eq!(r, want);
    }

    #[test]
    fn invert_geometric() {
        let ctx = SeriesContext::uniform(&["t"], 3);
        let mut p = MultiSeries::one(&ctx);
        p.add_term(vec![1], c(-1)); // 1 - t
        let inv = p.invert_unit();
        let mut want = MultiSeries::zero(&ctx);
        for k in 0..=3 {
            want.add_term(vec![k], c(1));
        }
        assert_eq!(inv, want);
        assert_eq!(MultiSeries::one(&ctx).invert_unit(), MultiSeries::one(&ctx));
    }

    #[test]
    fn invert_then_mul_ratio() {
        // (1+t)/(1-t) = 1 + 2t + 2t^2 + 2t^3 + 2t^4 at cap 4
        let ctx = SeriesContext::uniform(&["t"], 4);
        let mut num = MultiSeries::one(&ctx);
        num.add_term(vec![1], c(1));
        let mut den = MultiSeries::one(&ctx);
        den.add_term(vec![1], c(-1));
        let r = num.mul(&den.invert_unit());
        let mut want = MultiSeries::one(&ctx);
        for k in 1..=4 {
            want.add_term(vec![k], c(2));
        }
        assert_eq!(r, want);
    }

    #[test]
    #[should_panic(expected = "context mismatch")]
    fn context_mismatch_panics() {
        let a = SeriesContext::uniform(&["t"], 3);
        let b = SeriesContext::uniform(&["u"], 3);
        let _ = MultiSeries::one(&a).mul(&MultiSeries::one(&b));
    }

    #[test]
    #[should_panic(expected = "unit constant term")]
    fn invert_non_unit_panics() {
        let ctx = SeriesContext::uniform(&["t"], 3);
        let _ = MultiSeries::monomial(&ctx, &[(0, 1)], c(1)).invert_unit();
    }

    #[test]
    fn total_cap_prunes() {
        let ctx = SeriesContext::total_degree(&["x", "y"], 2);
        let x = MultiSeries::monomial(&ctx, &[(0, 1)], c(1));
        let y = MultiSeries::monomial(&ctx, &[(1, 1)], c(1));
        let p = x.add(&y).pow(3);
        assert!(p.is_zero());
        let q = x.add(&y).pow(2);
        assert_eq!(q.num_terms(), 3);
    }

    #[test]
    fn first_difference_is_lex_smallest() {
        let ctx = SeriesContext::uniform(&["x", "y"], 4);
        let a = MultiSeries::monomial(&ctx, &[(0, 1), (1, 2)], c(4));
        let b = MultiSeries::monomial(&ctx, &[(0, 1), (1, 2)], c(5));
        let (e, ca, cb) = a.first_difference(&b).unwrap();
        assert_eq!(e, vec![1, 2]);
        assert_eq!((ca, cb), (c(4), c(5)));
        assert!(a.first_difference(&a).is_none());
    }

    #[test]
    fn display_sorted() {
        let ctx = SeriesContext::uniform(&["x", "y"], 4);
        let mut s = MultiSeries::one(&ctx);
        s.add_term(vec![1, 1], c(2));
        assert_eq!(s.to_string(), "1 + 2*x*y");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_series() -> impl Strategy<Value = MultiSeries> {
            proptest::collection::vec(((0u32..4, 0u32..4), -5i64..=5), 0..8).prop_map(|terms| {
                let ctx = SeriesContext::uniform(&["x", "y"], 3);
                let mut s = MultiSeries::zero(&ctx);
                for ((ex, ey), co) in terms {
                    s.add_term(vec![ex, ey], c(co));
                }
                s
            })
        }

        proptest! {
            #[test]
            fn mul_commutes(a in arb_series(), b in arb_series()) {
                prop_assert_eq!(a.mul(&b), b.mul(&a));
            }

            #[test]
            fn mul_associates(a in arb_series(), b in arb_series(), z in arb_series()) {
                prop_assert_eq!(a.mul(&b).mul(&z), a.mul(&b.mul(&z)));
            }

            #[test]
            fn inverse_times_self_is_one(a in arb_series()) {
                let mut u = a;
                // force a unit constant term
                u.add_term(vec![0, 0], c(1) - u.constant_term());
                let ctx = u.context().clone();
                prop_assert_eq!(u.invert_unit().mul(&u), MultiSeries::one(&ctx));
            }
        }
    }
}
