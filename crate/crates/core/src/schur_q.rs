//! Schur Q-functions in finitely many variables, by two independent routes:
//! the Pfaffian formula over one-row functions and one-variable skew
//! branching. The harness checks the routes against each other.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::partition::{interlaces, interlacing_restrictions, sharp_count, StrictPartition};
use crate::pfaffian::{pfaffian_in, SkewMatrix};
use crate::qsqrt2::QSqrt2;
use crate::series::{MultiSeries, SeriesContext};

/// Variable slots (indices into a shared series context) that a Q-function
/// is evaluated over.
#[derive(Clone, Debug)]
pub struct QContext {
    ctx: Arc<SeriesContext>,
    vars: Vec<usize>,
}

impl QContext {
    pub fn new(ctx: &Arc<SeriesContext>, vars: &[usize]) -> Self {
        QContext {
            ctx: Arc::clone(ctx),
            vars: vars.to_vec(),
        }
    }

    /// Fresh context over variables `x1..xn` with per-variable caps `cap`.
    pub fn fresh(n: usize, cap: u32) -> Self {
        use alloc::format;
        let names: Vec<alloc::string::String> = (1..=n).map(|i| format!("x{}", i)).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let ctx = SeriesContext::uniform(&refs, cap);
        QContext {
            vars: (0..n).collect(),
            ctx,
        }
    }

    pub fn series_context(&self) -> &Arc<SeriesContext> {
        &self.ctx
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// The same variables in reversed order (for symmetry tests).
    pub fn reversed(&self) -> QContext {
        let mut vars = self.vars.clone();
        vars.reverse();
        QContext {
            ctx: Arc::clone(&self.ctx),
            vars,
        }
    }
}

/// One-row function `q_m`: the coefficient of `k^m` in
/// `prod_i (1 + x_i k)/(1 - x_i k)`, extracted from the truncated expansion
/// in the auxiliary variable `k`.
pub fn q_one_row(m: u32, q: &QContext) -> MultiSeries {
    q_table(m, q).pop().unwrap()
}

/// `[q_0, ..., q_max]` in one pass. Each factor contributes
/// `1 + 2 sum_{j>=1} x_i^j k^j`, folded into a k-polynomial with series
/// coefficients.
fn q_table(max: u32, q: &QContext) -> Vec<MultiSeries> {
    let ctx = &q.ctx;
    let mut coeffs: Vec<MultiSeries> = vec![MultiSeries::zero(ctx); (max + 1) as usize];
    coeffs[0] = MultiSeries::one(ctx);
    let two = QSqrt2::from_int(2);
    for &xi in &q.vars {
        let mut next = coeffs.clone();
        for d in 1..=max {
            for j in 1..=d {
                let lower = &coeffs[(d - j) as usize];
                if lower.is_zero() {
                    continue;
                }
                let factor = MultiSeries::monomial(ctx, &[(xi, j)], two.clone());
                next[d as usize].add_assign(&lower.mul(&factor));
            }
        }
        coeffs = next;
    }
    coeffs
}

/// Schur Q-function via the Pfaffian of the skew matrix with entries
/// `q_{mu_i} q_{mu_j} + 2 sum_{k=1}^{mu_j} (-1)^k q_{mu_i + k} q_{mu_j - k}`;
/// odd-length partitions are padded with a zero part (the correction sum is
/// then empty, so the padded column is just `q_{mu_i}`).
pub fn schur_q_pfaffian(mu: &StrictPartition, q: &QContext) -> MultiSeries {
    let ctx = &q.ctx;
    if mu.is_empty() {
        return MultiSeries::one(ctx);
    }
    let mut padded: Vec<u32> = mu.parts().to_vec();
    if padded.len() % 2 == 1 {
        padded.push(0);
    }
    let dim = padded.len();
    let qmax = padded[0] + padded[1];
    let table = q_table(qmax, q);
    let m = SkewMatrix::from_upper(ctx, dim, |i, j| {
        let (a, b) = (padded[i], padded[j]);
        let mut e = table[a as usize].mul(&table[b as usize]);
        for k in 1..=b {
            let prod = table[(a + k) as usize].mul(&table[(b - k) as usize]);
            let signed = prod.scale(&QSqrt2::from_int(if k % 2 == 1 { -2 } else { 2 }));
            e.add_assign(&signed);
        }
        e
    });
    pfaffian_in(ctx, &m)
}

/// Skew Schur Q in a single variable: `2^{#(mu|nu)} x^{|mu|-|nu|}` when
/// `mu > nu`, else 0.
pub fn skew_q_one_var(
    mu: &StrictPartition,
    nu: &StrictPartition,
    var: usize,
    ctx: &Arc<SeriesContext>,
) -> MultiSeries {
    if !interlaces(mu, nu) {
        return MultiSeries::zero(ctx);
    }
    let sharp = sharp_count(mu, nu);
    let deg = mu.weight() - nu.weight();
    MultiSeries::monomial(ctx, &[(var, deg)], QSqrt2::pow2(sharp as i64))
}

/// Schur Q-function by the branching rule
/// `Q_mu{x_1..x_n} = sum_nu Q_{mu/nu}(x_n) Q_nu{x_1..x_{n-1}}`, the sum over
/// strict `nu < mu` with at most `n-1` parts.
pub fn schur_q_branching(mu: &StrictPartition, q: &QContext) -> MultiSeries {
    let ctx = &q.ctx;
    if q.vars.is_empty() {
        return if mu.is_empty() {
            MultiSeries::one(ctx)
        } else {
            MultiSeries::zero(ctx)
        };
    }
    let last = *q.vars.last().unwrap();
    let rest = QContext {
        ctx: Arc::clone(ctx),
        vars: q.vars[..q.vars.len() - 1].to_vec(),
    };
    let mut acc = MultiSeries::zero(ctx);
    for nu in interlacing_restrictions(mu) {
        if nu.len() + 1 > q.vars.len() {
            continue;
        }
        let skew = skew_q_one_var(mu, &nu, last, ctx);
        if skew.is_zero() {
            continue;
        }
        let inner = schur_q_branching(&nu, &rest);
        acc.add_assign(&skew.mul(&inner));
    }
    acc
}
