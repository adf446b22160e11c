//! Monodromy operators of the lattice model: the normalized creation and
//! annihilation family `B`/`C` computed two independent ways (closed-form
//! combinatorial sums and the symbolic L-matrix product), plus the R-matrix
//! intertwining checks at exact rational spectral points.
//!
//! Half-integer powers of the spectral parameter are handled by substituting
//! `x = u^2` and working with integer powers of `u`; the normalized
//! operators come out with even non-negative `u`-exponents, which converts
//! back to plain powers of `x`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::lattice::{
    admissible_images, apply_mode_config, LatticeVector, ModeOp, Side, SiteConfig, Species,
};
use crate::qsqrt2::QSqrt2;
use crate::series::MultiSeries;

/// Which implementation of the monodromy action to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BcMethod {
    /// The admissible-configuration sums.
    Combinatorial,
    /// Multiply out the L-matrix chain in `u` and apply the extracted entry.
    Matrix,
}

/// Laurent polynomial in `u` with `Q(sqrt 2)` coefficients.
type Laurent = BTreeMap<i64, QSqrt2>;

/// Single-species vector with Laurent coefficients.
type UVector = BTreeMap<SiteConfig, Laurent>;

fn laurent_one() -> Laurent {
    let mut l = Laurent::new();
    l.insert(0, QSqrt2::one());
    l
}

fn uvec_add(acc: &mut UVector, cfg: SiteConfig, lau: &Laurent, shift: i64, scale: &QSqrt2) {
    if lau.is_empty() || scale.is_zero() {
        return;
    }
    let entry = acc.entry(cfg).or_default();
    for (k, c) in lau {
        let v = c * scale;
        if v.is_zero() {
            continue;
        }
        let e = entry.entry(k + shift).or_insert_with(QSqrt2::zero);
        *e += &v;
        if e.is_zero() {
            entry.remove(&(k + shift));
        }
    }
}

fn uvec_prune(v: &mut UVector) {
    v.retain(|_, l| !l.is_empty());
}

/// Runs the L-matrix chain for the `B` entry on a ket basis config:
/// `B = up-component of L_M ... L_0 applied to (0, |n>)`, then `u^M`.
/// `invert_u` substitutes the inverse spectral parameter (used by `C`).
fn chain_b_ket(n: &SiteConfig, invert_u: bool) -> UVector {
    let m = n.size();
    let e11: i64 = if invert_u { 1 } else { -1 };
    let sqrt2 = QSqrt2::sqrt2();
    let mut up: UVector = UVector::new();
    let mut down: UVector = UVector::new();
    down.insert(n.clone(), laurent_one());
    for i in 0..=m {
        let mut new_up = UVector::new();
        let mut new_down = UVector::new();
        for (cfg, lau) in &up {
            uvec_add(&mut new_up, cfg.clone(), lau, e11, &QSqrt2::one());
            if let Some((img, f)) = apply_mode_config(ModeOp::Annihilate(i), Side::Ket, cfg) {
                uvec_add(&mut new_down, img, lau, 0, &(&f * &sqrt2));
            }
        }
        for (cfg, lau) in &down {
            uvec_add(&mut new_down, cfg.clone(), lau, -e11, &QSqrt2::one());
            if let Some((img, f)) = apply_mode_config(ModeOp::Create(i), Side::Ket, cfg) {
                uvec_add(&mut new_up, img, lau, 0, &(&f * &sqrt2));
            }
        }
        uvec_prune(&mut new_up);
        uvec_prune(&mut new_down);
        up = new_up;
        down = new_down;
    }
    let mut out = UVector::new();
    for (cfg, lau) in &up {
        uvec_add(&mut out, cfg.clone(), lau, m as i64, &QSqrt2::one());
    }
    uvec_prune(&mut out);
    out
}

/// Runs the L-matrix chain for the `C` entry on a bra basis config:
/// `C = up-component of <n| applied through L_M ... L_0`, then `u^M`.
fn chain_c_bra(n: &SiteConfig, invert_u: bool) -> UVector {
    let m = n.size();
    let e11: i64 = if invert_u { 1 } else { -1 };
    let sqrt2 = QSqrt2::sqrt2();
    let mut up: UVector = UVector::new();
    let mut down: UVector = UVector::new();
    down.insert(n.clone(), laurent_one());
    for i in (0..=m).rev() {
        let mut new_up = UVector::new();
        let mut new_down = UVector::new();
        for (cfg, lau) in &up {
            // r'_up += r_up * L11, r'_down += r_up * L12
            uvec_add(&mut new_up, cfg.clone(), lau, e11, &QSqrt2::one());
            if let Some((img, f)) = apply_mode_config(ModeOp::Create(i), Side::Bra, cfg) {
                uvec_add(&mut new_down, img, lau, 0, &(&f * &sqrt2));
            }
        }
        for (cfg, lau) in &down {
            // r'_up += r_down * L21, r'_down += r_down * L22
            if let Some((img, f)) = apply_mode_config(ModeOp::Annihilate(i), Side::Bra, cfg) {
                uvec_add(&mut new_up, img, lau, 0, &(&f * &sqrt2));
            }
            uvec_add(&mut new_down, cfg.clone(), lau, -e11, &QSqrt2::one());
        }
        uvec_prune(&mut new_up);
        uvec_prune(&mut new_down);
        up = new_up;
        down = new_down;
    }
    let mut out = UVector::new();
    for (cfg, lau) in &up {
        uvec_add(&mut out, cfg.clone(), lau, m as i64, &QSqrt2::one());
    }
    uvec_prune(&mut out);
    out
}

/// Converts a `u`-Laurent image to monomials in the spectral variable
/// `var`; every exponent must come out even and non-negative.
fn uvec_to_terms(
    uv: UVector,
    var: usize,
    ctx: &alloc::sync::Arc<crate::series::SeriesContext>,
) -> Vec<(SiteConfig, MultiSeries)> {
    let mut out = Vec::new();
    for (cfg, lau) in uv {
        let mut s = MultiSeries::zero(ctx);
        for (k, c) in lau {
            assert!(
                k >= 0 && k % 2 == 0,
                "normalized monodromy entry has u-exponent {}",
                k
            );
            s.add_assign(&MultiSeries::monomial(ctx, &[(var, (k / 2) as u32)], c));
        }
        out.push((cfg, s));
    }
    out
}

fn species_cfg<'a>(pair: &'a crate::lattice::PairConfig, species: Species) -> &'a SiteConfig {
    match species {
        Species::One => &pair.0,
        Species::Two => &pair.1,
    }
}

fn replace_species(
    pair: &crate::lattice::PairConfig,
    species: Species,
    cfg: SiteConfig,
) -> crate::lattice::PairConfig {
    match species {
        Species::One => (cfg, pair.1.clone()),
        Species::Two => (pair.0.clone(), cfg),
    }
}

/// The normalized creation operator `B_j(x)` applied to a ket vector, by
/// either method. Site-0 cap overflows are dropped and flagged on the
/// result.
pub fn apply_b(species: Species, var: usize, v: &LatticeVector, method: BcMethod) -> LatticeVector {
    let ctx = v.context().clone();
    let mut out = LatticeVector::zero(&ctx, v.lattice());
    let mut overflow = v.truncated();
    let cap = v.lattice().n0_cap;
    for (pair, coeff) in v.terms() {
        let n = species_cfg(pair, species);
        match method {
            BcMethod::Combinatorial => {
                for (img, twos, xexp) in admissible_images(n, cap, &mut overflow) {
                    let mono =
                        MultiSeries::monomial(&ctx, &[(var, xexp)], QSqrt2::pow2(twos as i64));
                    out.add_term(replace_species(pair, species, img), coeff.mul(&mono));
                }
            }
            BcMethod::Matrix => {
                for (img, s) in uvec_to_terms(chain_b_ket(n, false), var, &ctx) {
                    out.add_term(replace_species(pair, species, img), coeff.mul(&s));
                }
            }
        }
    }
    if overflow {
        out.mark_truncated();
    }
    out
}

/// The normalized annihilation operator `C_j(x)` applied to a bra vector:
/// the spectral parameter is inverted inside the matrix route before the
/// `x^{M/2}` normalization.
pub fn apply_c(species: Species, var: usize, v: &LatticeVector, method: BcMethod) -> LatticeVector {
    let ctx = v.context().clone();
    let mut out = LatticeVector::zero(&ctx, v.lattice());
    let mut overflow = v.truncated();
    let cap = v.lattice().n0_cap;
    for (pair, coeff) in v.terms() {
        let n = species_cfg(pair, species);
        match method {
            BcMethod::Combinatorial => {
                for (img, twos, xexp) in admissible_images(n, cap, &mut overflow) {
                    let mono =
                        MultiSeries::monomial(&ctx, &[(var, xexp)], QSqrt2::pow2(twos as i64));
                    out.add_term(replace_species(pair, species, img), coeff.mul(&mono));
                }
            }
            BcMethod::Matrix => {
                for (img, s) in uvec_to_terms(chain_c_bra(n, true), var, &ctx) {
                    out.add_term(replace_species(pair, species, img), coeff.mul(&s));
                }
            }
        }
    }
    if overflow {
        out.mark_truncated();
    }
    out
}

// ---------------------------------------------------------------------------
// R-matrix intertwining at exact rational points
// ---------------------------------------------------------------------------

/// A sum of scalar-weighted operator words; words apply right-to-left.
#[derive(Clone, Debug, Default)]
struct OpPoly {
    terms: Vec<(QSqrt2, Vec<ModeOp>)>,
}

impl OpPoly {
    fn zero() -> Self {
        OpPoly { terms: Vec::new() }
    }

    fn scalar(c: QSqrt2) -> Self {
        OpPoly {
            terms: vec![(c, Vec::new())],
        }
    }

    fn op(c: QSqrt2, op: ModeOp) -> Self {
        OpPoly {
            terms: vec![(c, vec![op])],
        }
    }

    fn mul(&self, rhs: &OpPoly) -> OpPoly {
        let mut terms = Vec::new();
        for (ca, wa) in &self.terms {
            for (cb, wb) in &rhs.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                terms.push((ca * cb, w));
            }
        }
        OpPoly { terms }
    }

    fn add_assign(&mut self, rhs: &OpPoly) {
        self.terms.extend(rhs.terms.iter().cloned());
    }

    fn scale(&self, c: &QSqrt2) -> OpPoly {
        OpPoly {
            terms: self
                .terms
                .iter()
                .map(|(ca, w)| (ca * c, w.clone()))
                .collect(),
        }
    }

    /// Applies to a ket basis config, returning the image vector.
    fn apply(&self, cfg: &SiteConfig) -> BTreeMap<SiteConfig, QSqrt2> {
        let mut out: BTreeMap<SiteConfig, QSqrt2> = BTreeMap::new();
        'term: for (c, word) in &self.terms {
            let mut cur = cfg.clone();
            let mut factor = c.clone();
            for op in word.iter().rev() {
                match apply_mode_config(*op, Side::Ket, &cur) {
                    Some((img, f)) => {
                        cur = img;
                        factor *= &f;
                    }
                    None => continue 'term,
                }
            }
            let e = out.entry(cur).or_insert_with(QSqrt2::zero);
            *e += &factor;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

type OpMatrix = Vec<Vec<OpPoly>>;

/// The 2x2 L-matrix at site `i` with numeric half-variable `u`:
/// `[[u^{-1}, sqrt2 phi_i^dagger], [sqrt2 phi_i, u]]`.
fn l_matrix(i: usize, u: &QSqrt2) -> OpMatrix {
    let sqrt2 = QSqrt2::sqrt2();
    vec![
        vec![
            OpPoly::scalar(u.invert()),
            OpPoly::op(sqrt2.clone(), ModeOp::Create(i)),
        ],
        vec![
            OpPoly::op(sqrt2, ModeOp::Annihilate(i)),
            OpPoly::scalar(u.clone()),
        ],
    ]
}

/// `A_1(x) B_2(y)` in the two auxiliary spaces: the first factor occupies
/// auxiliary slot 1 and its operator entries act second (multiply on the
/// left).
fn prod_12(a: &OpMatrix, b: &OpMatrix) -> OpMatrix {
    let mut out = vec![vec![OpPoly::zero(); 4]; 4];
    for r1 in 0..2 {
        for r2 in 0..2 {
            for c1 in 0..2 {
                for c2 in 0..2 {
                    out[2 * r1 + r2][2 * c1 + c2] = a[r1][c1].mul(&b[r2][c2]);
                }
            }
        }
    }
    out
}

/// `B_2(y) A_1(x)`: same slot placement, reversed operator order.
fn prod_21(a: &OpMatrix, b: &OpMatrix) -> OpMatrix {
    let mut out = vec![vec![OpPoly::zero(); 4]; 4];
    for r1 in 0..2 {
        for r2 in 0..2 {
            for c1 in 0..2 {
                for c2 in 0..2 {
                    out[2 * r1 + r2][2 * c1 + c2] = b[r2][c2].mul(&a[r1][c1]);
                }
            }
        }
    }
    out
}

fn scalar_mat_mul(r: &[Vec<QSqrt2>], a: &OpMatrix) -> OpMatrix {
    let n = a.len();
    let mut out = vec![vec![OpPoly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !r[i][k].is_zero() {
                    out[i][j].add_assign(&a[k][j].scale(&r[i][k]));
                }
            }
        }
    }
    out
}

fn mat_scalar_mul(a: &OpMatrix, r: &[Vec<QSqrt2>]) -> OpMatrix {
    let n = a.len();
    let mut out = vec![vec![OpPoly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !r[k][j].is_zero() {
                    out[i][j].add_assign(&a[i][k].scale(&r[k][j]));
                }
            }
        }
    }
    out
}

/// The R-matrix at `x = u^2`, `y = w^2`; the off-diagonal entry
/// `2 x^{1/2} y^{1/2} = 2uw` stays exact at rational points.
fn r_matrix(u: &QSqrt2, w: &QSqrt2) -> Vec<Vec<QSqrt2>> {
    let x = u * u;
    let y = w * w;
    let zero = QSqrt2::zero;
    let mid = QSqrt2::from_int(2) * (u * w);
    let sum = x.clone() + &y;
    vec![
        vec![sum.clone(), zero(), zero(), zero()],
        vec![zero(), y.clone() - x.clone(), mid.clone(), zero()],
        vec![zero(), mid, x - y, zero()],
        vec![zero(), zero(), zero(), sum],
    ]
}

fn op_matrices_equal_on(a: &OpMatrix, b: &OpMatrix, basis: &[SiteConfig]) -> bool {
    for cfg in basis {
        for i in 0..a.len() {
            for j in 0..a.len() {
                if a[i][j].apply(cfg) != b[i][j].apply(cfg) {
                    return false;
                }
            }
        }
    }
    true
}

/// All site configs of a species lattice with `m` hard-core sites and site-0
/// occupation up to `n0_max`.
pub fn species_basis(m: usize, n0_max: u32) -> Vec<SiteConfig> {
    let mut out = Vec::new();
    for bits in 0..(1u64 << m) {
        for n0 in 0..=n0_max {
            let sites: Vec<u8> = (0..m).map(|k| ((bits >> k) & 1) as u8).collect();
            out.push(SiteConfig::new(n0, sites));
        }
    }
    out.sort();
    out
}

/// The intertwining equation `R(x,y) (L_i(x) ⊗ L_i(y)) = (L_i(y) ⊗ L_i(x))
/// R(x,y)` for a single site, checked as operator matrices on every basis
/// vector of a one-site lattice.
pub fn rtt_single_site_holds(u: &QSqrt2, w: &QSqrt2) -> bool {
    let r = r_matrix(u, w);
    // site 1 (hard-core) and site 0 (unbounded) of a one-site lattice
    for site in [1usize, 0] {
        let lx = l_matrix(site, u);
        let ly = l_matrix(site, w);
        let lhs = scalar_mat_mul(&r, &prod_12(&lx, &ly));
        let rhs = mat_scalar_mul(&prod_21(&lx, &ly), &r);
        let basis = species_basis(1, 3);
        if !op_matrices_equal_on(&lhs, &rhs, &basis) {
            return false;
        }
    }
    true
}

/// The intertwining equation for the full monodromy matrix `T` of an
/// `m`-site species, on every basis vector with site-0 occupation up to 2.
///
/// Rather than multiplying out the operator-word matrices, the per-site
/// blocks are applied to state vectors column by column (distinct-site
/// copies commute, so `T_1(x) T_2(y)` factors into per-site blocks applied
/// in descending site order).
pub fn rtt_full_holds(m: usize, u: &QSqrt2, w: &QSqrt2) -> bool {
    type NVector = BTreeMap<SiteConfig, QSqrt2>;

    fn apply_entry(p: &OpPoly, v: &NVector) -> NVector {
        let mut out = NVector::new();
        for (cfg, c) in v {
            for (img, f) in p.apply(cfg) {
                let val = &f * c;
                if val.is_zero() {
                    continue;
                }
                let e = out.entry(img).or_insert_with(QSqrt2::zero);
                *e += &val;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn chain(site_blocks: &[OpMatrix], start: &SiteConfig) -> Vec<Vec<NVector>> {
        // table[r][c]: slot r of the chain applied to e_c tensor |start>
        let mut table = vec![vec![NVector::new(); 4]; 4];
        for (c, row) in table.iter_mut().enumerate() {
            let mut state = vec![NVector::new(); 4];
            state[c].insert(start.clone(), QSqrt2::one());
            for block in site_blocks {
                let mut next = vec![NVector::new(); 4];
                for (r, slot) in next.iter_mut().enumerate() {
                    for s in 0..4 {
                        if state[s].is_empty() {
                            continue;
                        }
                        for (cfg, val) in apply_entry(&block[r][s], &state[s]) {
                            let e = slot.entry(cfg).or_insert_with(QSqrt2::zero);
                            *e += &val;
                        }
                    }
                }
                for slot in next.iter_mut() {
                    slot.retain(|_, v| !v.is_zero());
                }
                state = next;
            }
            for r in 0..4 {
                row[r] = state[r].clone();
            }
        }
        // transpose: row index first
        let mut out = vec![vec![NVector::new(); 4]; 4];
        for (c, row) in table.iter().enumerate() {
            for (r, cell) in row.iter().enumerate() {
                out[r][c] = cell.clone();
            }
        }
        out
    }

    let r = r_matrix(u, w);
    let mut blocks_xy = Vec::new();
    let mut blocks_yx = Vec::new();
    for i in 0..=m {
        let lx = l_matrix(i, u);
        let ly = l_matrix(i, w);
        blocks_xy.push(prod_12(&lx, &ly));
        blocks_yx.push(prod_21(&lx, &ly));
    }
    for basis in species_basis(m, 2) {
        let t_xy = chain(&blocks_xy, &basis);
        let t_yx = chain(&blocks_yx, &basis);
        for i in 0..4 {
            for j in 0..4 {
                // (R T_xy)[i][j] vs (T_yx R)[i][j]
                let mut lhs = NVector::new();
                let mut rhs = NVector::new();
                for k in 0..4 {
                    if !r[i][k].is_zero() {
                        for (cfg, v) in &t_xy[k][j] {
                            let e = lhs.entry(cfg.clone()).or_insert_with(QSqrt2::zero);
                            *e += &(&r[i][k] * v);
                        }
                    }
                    if !r[k][j].is_zero() {
                        for (cfg, v) in &t_yx[i][k] {
                            let e = rhs.entry(cfg.clone()).or_insert_with(QSqrt2::zero);
                            *e += &(v * &r[k][j]);
                        }
                    }
                }
                lhs.retain(|_, c| !c.is_zero());
                rhs.retain(|_, c| !c.is_zero());
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}
