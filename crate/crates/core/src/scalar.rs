//! The scalar product of the lattice model, computed three independent ways:
//! through the operator calculus and the Fock pairing, as a weighted sum
//! over pairs of boxed strict plane partitions, and as a sum of Schur
//! Q-function products. Exact agreement of the three routes is one of the
//! central identities the harness verifies.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::lattice::{map_to_fock, LatticeContext, LatticeVector, Species};
use crate::monodromy::{apply_b, apply_c, BcMethod};
use crate::partition::{strict_partitions_in_box, TwoPartition};
use crate::plane::{b_weight, enumerate_boxed_strict};
use crate::qsqrt2::QSqrt2;
use crate::schur_q::{schur_q_branching, QContext};
use crate::series::{MultiSeries, SeriesContext};

/// Problem sizes: `n1`/`n2` operator applications per species on lattices
/// with `m1`/`m2` hard-core sites.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ScalarDims {
    pub n1: usize,
    pub n2: usize,
    pub m1: usize,
    pub m2: usize,
}

/// Variable slots for the four alphabets: `x`/`z` of length `n1` pair with
/// species 1, `y`/`v` of length `n2` with species 2.
#[derive(Clone, Debug)]
pub struct ScalarVars {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub z: Vec<usize>,
    pub v: Vec<usize>,
}

impl ScalarVars {
    /// Builds the standard context `x1..,y1..,z1..,v1..` with a total-degree
    /// cap.
    pub fn standard(dims: ScalarDims, total_cap: u32) -> (Arc<SeriesContext>, ScalarVars) {
        use alloc::format;
        use alloc::string::String;
        let mut names: Vec<String> = Vec::new();
        for i in 1..=dims.n1 {
            names.push(format!("x{}", i));
        }
        for j in 1..=dims.n2 {
            names.push(format!("y{}", j));
        }
        for l in 1..=dims.n1 {
            names.push(format!("z{}", l));
        }
        for k in 1..=dims.n2 {
            names.push(format!("v{}", k));
        }
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let ctx = SeriesContext::total_degree(&refs, total_cap);
        let x: Vec<usize> = (0..dims.n1).collect();
        let y: Vec<usize> = (dims.n1..dims.n1 + dims.n2).collect();
        let z: Vec<usize> = (dims.n1 + dims.n2..2 * dims.n1 + dims.n2).collect();
        let v: Vec<usize> = (2 * dims.n1 + dims.n2..2 * dims.n1 + 2 * dims.n2).collect();
        (ctx, ScalarVars { x, y, z, v })
    }
}

/// The three computation routes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ScalarRoute {
    /// Operator applications composed with the Fock pairing.
    Lattice,
    /// Plane-partition weight sums.
    PlanePartition,
    /// Schur Q-function products.
    SchurQ,
}

/// Folds a lattice vector into Fock-label coefficients, applying the map's
/// `2^{-l-l}` normalization.
fn to_fock_coefficients(
    v: &LatticeVector,
    ctx: &Arc<SeriesContext>,
) -> BTreeMap<TwoPartition, MultiSeries> {
    let mut out: BTreeMap<TwoPartition, MultiSeries> = BTreeMap::new();
    for (pair, coeff) in v.terms() {
        let (two, exp) = map_to_fock(pair);
        let scaled = coeff.scale(&QSqrt2::pow2(exp));
        out.entry(two)
            .or_insert_with(|| MultiSeries::zero(ctx))
            .add_assign(&scaled);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// One species factor of the Schur-Q route:
/// `sum_{mu in [n, m]} 2^{-l(mu)} Q_mu{a} Q_mu{b}`.
fn schur_q_factor(
    n: usize,
    m: u32,
    a_vars: &[usize],
    b_vars: &[usize],
    ctx: &Arc<SeriesContext>,
) -> MultiSeries {
    let mut acc = MultiSeries::zero(ctx);
    let qa = |vars: &[usize]| QContext::new(ctx, vars);
    for mu in strict_partitions_in_box(n, m) {
        let qx = schur_q_branching(&mu, &qa(a_vars));
        if qx.is_zero() {
            continue;
        }
        let qz = schur_q_branching(&mu, &qa(b_vars));
        if qz.is_zero() {
            continue;
        }
        acc.add_assign(&qx.mul(&qz).scale(&QSqrt2::pow2(-(mu.len() as i64))));
    }
    acc
}

/// One species factor of the plane-partition route:
/// `sum_{pi in [n, n, m]} B_pi({a}, {b})`.
fn plane_partition_factor(
    n: usize,
    m: u32,
    a_vars: &[usize],
    b_vars: &[usize],
    ctx: &Arc<SeriesContext>,
) -> MultiSeries {
    let mut acc = MultiSeries::zero(ctx);
    for pi in enumerate_boxed_strict(n, n, m) {
        acc.add_assign(&b_weight(&pi, a_vars, b_vars, ctx));
    }
    acc
}

/// The scalar product over the given variable alphabets, by the requested
/// route. All three routes return the identical truncated series.
pub fn scalar_product(
    dims: ScalarDims,
    ctx: &Arc<SeriesContext>,
    vars: &ScalarVars,
    route: ScalarRoute,
) -> MultiSeries {
    assert_eq!(vars.x.len(), dims.n1, "x alphabet length");
    assert_eq!(vars.z.len(), dims.n1, "z alphabet length");
    assert_eq!(vars.y.len(), dims.n2, "y alphabet length");
    assert_eq!(vars.v.len(), dims.n2, "v alphabet length");
    match route {
        ScalarRoute::Lattice => {
            let lattice = LatticeContext {
                m1: dims.m1,
                m2: dims.m2,
                n0_cap: dims.n1.max(dims.n2) as u32,
            };
            let mut ket = LatticeVector::vacuum(ctx, lattice);
            for &zl in &vars.z {
                ket = apply_b(Species::One, zl, &ket, BcMethod::Combinatorial);
            }
            for &vk in &vars.v {
                ket = apply_b(Species::Two, vk, &ket, BcMethod::Combinatorial);
            }
            let mut bra = LatticeVector::vacuum(ctx, lattice);
            for &xi in &vars.x {
                bra = apply_c(Species::One, xi, &bra, BcMethod::Combinatorial);
            }
            for &yj in &vars.y {
                bra = apply_c(Species::Two, yj, &bra, BcMethod::Combinatorial);
            }
            assert!(!ket.truncated() && !bra.truncated(), "site-0 cap too small");
            let fock_ket = to_fock_coefficients(&ket, ctx);
            let fock_bra = to_fock_coefficients(&bra, ctx);
            let mut acc = MultiSeries::zero(ctx);
            for (two, cb) in &fock_bra {
                if let Some(ck) = fock_ket.get(two) {
                    let pairing = QSqrt2::pow2(two.first.len() as i64 + two.second.len() as i64);
                    acc.add_assign(&cb.mul(ck).scale(&pairing));
                }
            }
            acc
        }
        ScalarRoute::PlanePartition => {
            let s1 = plane_partition_factor(dims.n1, dims.m1 as u32, &vars.x, &vars.z, ctx);
            let s2 = plane_partition_factor(dims.n2, dims.m2 as u32, &vars.y, &vars.v, ctx);
            s1.mul(&s2)
        }
        ScalarRoute::SchurQ => {
            let s1 = schur_q_factor(dims.n1, dims.m1 as u32, &vars.x, &vars.z, ctx);
            let s2 = schur_q_factor(dims.n2, dims.m2 as u32, &vars.y, &vars.v, ctx);
            s1.mul(&s2)
        }
    }
}
