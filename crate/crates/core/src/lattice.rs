//! The two-species occupation-number representation of the generalized
//! i-boson algebra: lattice configurations, the eight mode actions, the
//! inner product, admissibility, and the map to Fock-state labels.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::partition::{StrictPartition, TwoPartition};
use crate::qsqrt2::QSqrt2;
use crate::series::{MultiSeries, SeriesContext};

/// Occupations of one species over sites `0..=M`: site 0 is unbounded, sites
/// `>= 1` are hard-core (0 or 1).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SiteConfig {
    n0: u32,
    sites: Vec<u8>,
}

impl SiteConfig {
    pub fn new(n0: u32, sites: Vec<u8>) -> Self {
        assert!(sites.iter().all(|&s| s <= 1), "sites >= 1 are hard-core");
        SiteConfig { n0, sites }
    }

    pub fn vacuum(m: usize) -> Self {
        SiteConfig {
            n0: 0,
            sites: vec![0; m],
        }
    }

    /// Number of sites beyond site 0.
    pub fn size(&self) -> usize {
        self.sites.len()
    }

    pub fn n0(&self) -> u32 {
        self.n0
    }

    /// The hard-core occupations as a plain vector (sites `1..=M`).
    pub fn sites_vec(&self) -> Vec<u8> {
        self.sites.clone()
    }

    /// Occupation of site `i` (0-based over `0..=M`).
    pub fn occupation(&self, i: usize) -> u32 {
        if i == 0 {
            self.n0
        } else {
            self.sites[i - 1] as u32
        }
    }

    pub fn particle_number(&self) -> u32 {
        self.n0 + self.sites.iter().map(|&s| s as u32).sum::<u32>()
    }

    /// The strict partition of occupied sites `>= 1` (site 0 contributes no
    /// part).
    pub fn to_partition(&self) -> StrictPartition {
        let mut parts: Vec<u32> = self
            .sites
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == 1)
            .map(|(i, _)| (i + 1) as u32)
            .collect();
        parts.reverse();
        StrictPartition::new(parts)
    }

    fn with_site(&self, i: usize, v: u32) -> SiteConfig {
        let mut c = self.clone();
        if i == 0 {
            c.n0 = v;
        } else {
            c.sites[i - 1] = v as u8;
        }
        c
    }
}

impl fmt::Display for SiteConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n0)?;
        for s in &self.sites {
            write!(f, ",{}", s)?;
        }
        Ok(())
    }
}

/// Renders the config text format `species:j n0,n1,...,nM`.
pub fn format_config(species: u8, cfg: &SiteConfig) -> String {
    use alloc::format;
    format!("species:{} {}", species, cfg)
}

/// Parses the config text format `species:j n0,n1,...,nM`.
pub fn parse_config(s: &str) -> Result<(u8, SiteConfig), String> {
    use alloc::format;
    use alloc::string::ToString;
    let s = s.trim();
    let rest = s
        .strip_prefix("species:")
        .ok_or_else(|| "expected `species:j n0,n1,...`".to_string())?;
    let (j, occ) = rest
        .split_once(' ')
        .ok_or_else(|| "expected occupations after species".to_string())?;
    let species: u8 = j
        .trim()
        .parse()
        .map_err(|_| format!("bad species `{}`", j))?;
    if species != 1 && species != 2 {
        return Err(format!("species must be 1 or 2, got {}", species));
    }
    let mut nums = Vec::new();
    for tok in occ.trim().split(',') {
        nums.push(
            tok.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad occupation `{}`", tok))?,
        );
    }
    if nums.is_empty() {
        return Err("missing occupations".to_string());
    }
    let n0 = nums[0];
    let sites: Vec<u8> = nums[1..]
        .iter()
        .map(|&v| {
            if v <= 1 {
                Ok(v as u8)
            } else {
                Err(format!("site occupation {} exceeds 1", v))
            }
        })
        .collect::<Result<_, _>>()?;
    Ok((species, SiteConfig::new(n0, sites)))
}

/// One basis vector of the two-species state space.
pub type PairConfig = (SiteConfig, SiteConfig);

/// Which species a mode operator belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Species {
    One,
    Two,
}

impl Species {
    pub fn index(self) -> usize {
        match self {
            Species::One => 0,
            Species::Two => 1,
        }
    }
}

/// A single generator of one i-boson copy at a site.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModeOp {
    /// The annihilator `phi_i`.
    Annihilate(usize),
    /// The creator `phi_i^dagger`.
    Create(usize),
    /// The occupation operator `N_i`.
    Number(usize),
}

/// Whether an operator acts on kets (right action) or bras (left action).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Ket,
    Bra,
}

fn inv_sqrt2() -> QSqrt2 {
    // 1/sqrt(2) = sqrt(2)/2
    use num_bigint::BigInt;
    use num_traits::Zero;
    QSqrt2::new(
        crate::qsqrt2::Rat::zero(),
        crate::qsqrt2::Rat::new(BigInt::from(1), BigInt::from(2)),
    )
}

/// Applies one mode to a basis config, returning the image config and its
/// scalar factor, or `None` when the image vanishes. Hard-core sites carry
/// the `(1 +- (-1)^n)/sqrt(2)` parity factors; site 0 is unbounded with its
/// own parity rules, and the bra actions keep the lowering guard on
/// creation.
pub fn apply_mode_config(op: ModeOp, side: Side, cfg: &SiteConfig) -> Option<(SiteConfig, QSqrt2)> {
    let sqrt2 = QSqrt2::sqrt2();
    match (op, side) {
        (ModeOp::Number(i), _) => {
            let n = cfg.occupation(i);
            if n == 0 {
                None
            } else {
                Some((cfg.clone(), QSqrt2::from_int(n as i64)))
            }
        }
        (ModeOp::Annihilate(0), Side::Ket) => {
            // parity factor kills even occupations (the vacuum included);
            // this is the reading under which [phi_0, phi_0^dagger] =
            // (-1)^{N_0} holds on every state and the site-0 annihilator
            // mirrors the bra-side creator
            let n0 = cfg.occupation(0);
            if n0 % 2 == 0 {
                None
            } else {
                Some((cfg.with_site(0, n0 - 1), sqrt2))
            }
        }
        (ModeOp::Annihilate(i), Side::Ket) => {
            if cfg.occupation(i) == 0 {
                None
            } else {
                Some((cfg.with_site(i, cfg.occupation(i) - 1), inv_sqrt2()))
            }
        }
        (ModeOp::Create(0), Side::Ket) => {
            Some((cfg.with_site(0, cfg.occupation(0) + 1), inv_sqrt2()))
        }
        (ModeOp::Create(i), Side::Ket) => {
            // factor (1 + (-1)^{n_i})/sqrt(2): hard-core exclusion
            if cfg.occupation(i) == 1 {
                None
            } else {
                Some((cfg.with_site(i, 1), sqrt2))
            }
        }
        (ModeOp::Annihilate(0), Side::Bra) => {
            Some((cfg.with_site(0, cfg.occupation(0) + 1), inv_sqrt2()))
        }
        (ModeOp::Annihilate(i), Side::Bra) => {
            // factor (1 + (-1)^{m_i})/sqrt(2)
            if cfg.occupation(i) == 1 {
                None
            } else {
                Some((cfg.with_site(i, 1), sqrt2))
            }
        }
        (ModeOp::Create(0), Side::Bra) => {
            // factor (1 - (-1)^{m0})/sqrt(2)
            let m0 = cfg.occupation(0);
            if m0 % 2 == 0 {
                None
            } else {
                Some((cfg.with_site(0, m0 - 1), sqrt2))
            }
        }
        (ModeOp::Create(i), Side::Bra) => {
            if cfg.occupation(i) == 0 {
                None
            } else {
                Some((cfg.with_site(i, cfg.occupation(i) - 1), inv_sqrt2()))
            }
        }
    }
}

/// Sizes and the site-0 cap shared by a family of lattice vectors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LatticeContext {
    pub m1: usize,
    pub m2: usize,
    pub n0_cap: u32,
}

/// A finite linear combination of two-species basis vectors with series
/// coefficients. `truncated` records whether any site-0 cap overflow term
/// was dropped along the way.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeVector {
    ctx: Arc<SeriesContext>,
    lattice: LatticeContext,
    terms: BTreeMap<PairConfig, MultiSeries>,
    truncated: bool,
}

impl LatticeVector {
    pub fn zero(ctx: &Arc<SeriesContext>, lattice: LatticeContext) -> Self {
        LatticeVector {
            ctx: Arc::clone(ctx),
            lattice,
            terms: BTreeMap::new(),
            truncated: false,
        }
    }

    pub fn basis(ctx: &Arc<SeriesContext>, lattice: LatticeContext, pair: PairConfig) -> Self {
        assert_eq!(pair.0.size(), lattice.m1);
        assert_eq!(pair.1.size(), lattice.m2);
        let mut v = LatticeVector::zero(ctx, lattice);
        v.add_term(pair, MultiSeries::one(ctx));
        v
    }

    pub fn vacuum(ctx: &Arc<SeriesContext>, lattice: LatticeContext) -> Self {
        LatticeVector::basis(
            ctx,
            lattice,
            (
                SiteConfig::vacuum(lattice.m1),
                SiteConfig::vacuum(lattice.m2),
            ),
        )
    }

    pub fn context(&self) -> &Arc<SeriesContext> {
        &self.ctx
    }

    pub fn lattice(&self) -> LatticeContext {
        self.lattice
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn mark_truncated(&mut self) {
        self.truncated = true;
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PairConfig, &MultiSeries)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, pair: &PairConfig) -> MultiSeries {
        self.terms
            .get(pair)
            .cloned()
            .unwrap_or_else(|| MultiSeries::zero(&self.ctx))
    }

    pub fn add_term(&mut self, pair: PairConfig, coeff: MultiSeries) {
        if coeff.is_zero() {
            return;
        }
        if pair.0.n0() > self.lattice.n0_cap || pair.1.n0() > self.lattice.n0_cap {
            self.truncated = true;
            return;
        }
        let entry = self
            .terms
            .entry(pair)
            .or_insert_with(|| MultiSeries::zero(&self.ctx));
        entry.add_assign(&coeff);
        if entry.is_zero() {
            // avoid holding zero coefficients; re-fetch key by rebuilding
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add_assign(&mut self, rhs: &LatticeVector) {
        assert_eq!(self.lattice, rhs.lattice, "lattice context mismatch");
        for (pair, c) in &rhs.terms {
            self.add_term(pair.clone(), c.clone());
        }
        self.truncated |= rhs.truncated;
    }

    pub fn scale(&self, s: &MultiSeries) -> LatticeVector {
        let mut out = LatticeVector::zero(&self.ctx, self.lattice);
        out.truncated = self.truncated;
        for (pair, c) in &self.terms {
            out.add_term(pair.clone(), c.mul(s));
        }
        out
    }

    pub fn sub(&self, rhs: &LatticeVector) -> LatticeVector {
        let mut out = self.clone();
        for (pair, c) in &rhs.terms {
            out.add_term(pair.clone(), c.neg());
        }
        out.truncated |= rhs.truncated;
        out
    }

    /// Applies one mode of one species on the given side.
    pub fn apply_mode(&self, species: Species, op: ModeOp, side: Side) -> LatticeVector {
        let site = match op {
            ModeOp::Annihilate(i) | ModeOp::Create(i) | ModeOp::Number(i) => i,
        };
        let m = match species {
            Species::One => self.lattice.m1,
            Species::Two => self.lattice.m2,
        };
        assert!(site <= m, "site {} out of range 0..={}", site, m);
        let mut out = LatticeVector::zero(&self.ctx, self.lattice);
        out.truncated = self.truncated;
        for (pair, coeff) in &self.terms {
            let cfg = match species {
                Species::One => &pair.0,
                Species::Two => &pair.1,
            };
            if let Some((img, factor)) = apply_mode_config(op, side, cfg) {
                let new_pair = match species {
                    Species::One => (img, pair.1.clone()),
                    Species::Two => (pair.0.clone(), img),
                };
                out.add_term(new_pair, coeff.scale(&factor));
            }
        }
        out
    }

    /// First basis vector (with both coefficients) where two vectors differ.
    pub fn first_difference(
        &self,
        rhs: &LatticeVector,
    ) -> Option<(PairConfig, MultiSeries, MultiSeries)> {
        let mut keys: Vec<&PairConfig> = self.terms.keys().chain(rhs.terms.keys()).collect();
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
}

/// The inner product of two basis vectors:
/// `theta_0^1 theta_0^2 prod 2^{-m_i^j} delta_{m_i^j, n_i^j}` with
/// `theta_0^j = 2^{m_0^j}` restricted to `0 <= m_0 <= 1`.
pub fn inner_product_basis(m: &PairConfig, n: &PairConfig) -> QSqrt2 {
    if m != n {
        return QSqrt2::zero();
    }
    let mut exp: i64 = 0;
    for cfg in [&m.0, &m.1] {
        if cfg.n0() > 1 {
            return QSqrt2::zero();
        }
        exp += cfg.n0() as i64;
        exp -= cfg.sites.iter().map(|&s| s as i64).sum::<i64>();
    }
    QSqrt2::pow2(exp)
}

/// Bilinear extension of [`inner_product_basis`] to vectors.
pub fn inner_product(bra: &LatticeVector, ket: &LatticeVector) -> MultiSeries {
    assert_eq!(bra.lattice, ket.lattice, "lattice context mismatch");
    let mut acc = MultiSeries::zero(&bra.ctx);
    for (pair, cb) in &bra.terms {
        if let Some(ck) = ket.terms.get(pair) {
            let w = inner_product_basis(pair, pair);
            if !w.is_zero() {
                acc.add_assign(&cb.mul(ck).scale(&w));
            }
        }
    }
    acc
}

/// The admissibility relation: `m` differs from `n` by exactly one particle
/// in total, with every tail sum difference in `{0, 1}`.
pub fn is_admissible(m: &SiteConfig, n: &SiteConfig) -> bool {
    if m.size() != n.size() {
        return false;
    }
    let mut tail: i64 = 0;
    for i in (1..=m.size()).rev() {
        tail += m.occupation(i) as i64 - n.occupation(i) as i64;
        if tail < 0 || tail > 1 {
            return false;
        }
    }
    tail + m.n0() as i64 - n.n0() as i64 == 1
}

/// All admissible images `m > n` over one species, with the product weight
/// `prod_{i>=1} 2^{delta(m_i - n_i, 1)} x^{i (m_i - n_i)}` returned as
/// (config, 2-exponent, x-exponent). Images whose site-0 occupation would
/// exceed `n0_cap` are skipped and reported through the `overflow` flag.
pub fn admissible_images(
    n: &SiteConfig,
    n0_cap: u32,
    overflow: &mut bool,
) -> Vec<(SiteConfig, u32, u32)> {
    let m = n.size();
    let mut out = Vec::new();
    // choose site occupations from the right, keeping the tail sum in {0,1}
    fn rec(
        n: &SiteConfig,
        i: usize,
        tail: i64,
        gained: u32,
        xexp: i64,
        sites: &mut Vec<u8>,
        out: &mut Vec<(Vec<u8>, u32, u32)>,
    ) {
        if i == 0 {
            debug_assert!(xexp >= 0);
            out.push((sites.clone(), gained, xexp as u32));
            return;
        }
        for v in 0..=1u8 {
            let d = v as i64 - n.occupation(i) as i64;
            let t = tail + d;
            if !(0..=1).contains(&t) {
                continue;
            }
            sites[i - 1] = v;
            rec(
                n,
                i - 1,
                t,
                gained + (d == 1) as u32,
                xexp + i as i64 * d,
                sites,
                out,
            );
        }
    }
    let mut sites = vec![0u8; m];
    let mut raw = Vec::new();
    rec(n, m, 0, 0, 0, &mut sites, &mut raw);
    for (sites, gained, xexp) in raw {
        let site_gain: i64 = sites
            .iter()
            .zip(n.sites.iter())
            .map(|(&a, &b)| a as i64 - b as i64)
            .sum();
        let m0 = (n.n0() as i64 + 1 - site_gain) as u32;
        if m0 > n0_cap {
            *overflow = true;
            continue;
        }
        out.push((SiteConfig::new(m0, sites), gained, xexp));
    }
    out.sort();
    out
}

/// Map to the Fock side: the strict 2-partition of occupied sites plus the
/// normalization exponent `-l(nu^1) - l(nu^2)`.
pub fn map_to_fock(pair: &PairConfig) -> (TwoPartition, i64) {
    let p1 = pair.0.to_partition();
    let p2 = pair.1.to_partition();
    let exp = -(p1.len() as i64) - (p2.len() as i64);
    (TwoPartition::new(p1, p2), exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::interlaces;

    fn cfg(n0: u32, sites: &[u8]) -> SiteConfig {
        SiteConfig::new(n0, sites.to_vec())
    }

    fn simple_ctx() -> Arc<SeriesContext> {
        SeriesContext::uniform(&["x"], 8)
    }

    fn lat(m: usize) -> LatticeContext {
        LatticeContext {
            m1: m,
            m2: m,
            n0_cap: 4,
        }
    }

    #[test]
    fn mode_actions_ket() {
        // creation on an occupied hard-core site vanishes
        assert!(apply_mode_config(ModeOp::Create(1), Side::Ket, &cfg(0, &[1])).is_none());
        // annihilation carries 1/sqrt(2)
        let (img, f) = apply_mode_config(ModeOp::Annihilate(1), Side::Ket, &cfg(0, &[1])).unwrap();
        assert_eq!(img, cfg(0, &[0]));
        assert_eq!(f * QSqrt2::sqrt2(), QSqrt2::one());
        // site-0 annihilation vanishes on even occupation (vacuum included)
        assert!(apply_mode_config(ModeOp::Annihilate(0), Side::Ket, &cfg(0, &[0])).is_none());
        assert!(apply_mode_config(ModeOp::Annihilate(0), Side::Ket, &cfg(2, &[0])).is_none());
        let (img, f) = apply_mode_config(ModeOp::Annihilate(0), Side::Ket, &cfg(1, &[0])).unwrap();
        assert_eq!(img, cfg(0, &[0]));
        assert_eq!(f, QSqrt2::sqrt2());
        // number operator is diagonal
        let (img, f) = apply_mode_config(ModeOp::Number(0), Side::Ket, &cfg(3, &[1])).unwrap();
        assert_eq!(img, cfg(3, &[1]));
        assert_eq!(f, QSqrt2::from_int(3));
    }

    #[test]
    fn mode_actions_bra() {
        // bra-side creation lowers with the delta guard
        assert!(apply_mode_config(ModeOp::Create(1), Side::Bra, &cfg(0, &[0])).is_none());
        let (img, f) = apply_mode_config(ModeOp::Create(1), Side::Bra, &cfg(0, &[1])).unwrap();
        assert_eq!(img, cfg(0, &[0]));
        assert_eq!(f * QSqrt2::sqrt2(), QSqrt2::one());
        // bra-side site-0 creation kills even occupations
        assert!(apply_mode_config(ModeOp::Create(0), Side::Bra, &cfg(0, &[0])).is_none());
        assert!(apply_mode_config(ModeOp::Create(0), Side::Bra, &cfg(2, &[0])).is_none());
        let (img, f) = apply_mode_config(ModeOp::Create(0), Side::Bra, &cfg(1, &[0])).unwrap();
        assert_eq!(img, cfg(0, &[0]));
        assert_eq!(f, QSqrt2::sqrt2());
    }

    #[test]
    fn inner_product_examples() {
        let ctx = simple_ctx();
        let l = lat(1);
        let vac = LatticeVector::vacuum(&ctx, l);
        assert_eq!(inner_product(&vac, &vac), MultiSeries::one(&ctx));
        // single particle at site 1: 2^{-1}
        let one = LatticeVector::basis(&ctx, l, (cfg(0, &[1]), cfg(0, &[0])));
        assert_eq!(
            inner_product(&one, &one),
            MultiSeries::constant(&ctx, QSqrt2::from_fraction(1, 2))
        );
        // site 0 occupied once: theta contributes 2
        let zero_mode = LatticeVector::basis(&ctx, l, (cfg(1, &[0]), cfg(0, &[0])));
        assert_eq!(
            inner_product(&zero_mode, &zero_mode),
            MultiSeries::constant(&ctx, QSqrt2::from_int(2))
        );
        // theta truncates n0 >= 2
        let two = LatticeVector::basis(&ctx, l, (cfg(2, &[0]), cfg(0, &[0])));
        assert!(inner_product(&two, &two).is_zero());
        assert!(inner_product(&vac, &one).is_zero());
    }

    #[test]
    fn admissibility_examples() {
        // incrementing n0 is admissible
        assert!(is_admissible(&cfg(1, &[0, 1]), &cfg(0, &[0, 1])));
        // equal configs fail the total condition
        assert!(!is_admissible(&cfg(0, &[1]), &cfg(0, &[1])));
        // adding two particles fails
        assert!(!is_admissible(&cfg(1, &[1]), &cfg(0, &[0])));
        // particle moves up a site while one enters at site 0
        assert!(is_admissible(&cfg(1, &[0, 1]), &cfg(0, &[1, 0])));
    }

    #[test]
    fn admissible_implies_interlacing_exhaustive() {
        // Every admissible pair maps to interlacing partitions, M <= 4
        for m_size in 0..=4usize {
            let mut all = Vec::new();
            for bits in 0..(1u32 << m_size) {
                for n0 in 0..=3u32 {
                    let sites: Vec<u8> = (0..m_size).map(|k| ((bits >> k) & 1) as u8).collect();
                    all.push(SiteConfig::new(n0, sites));
                }
            }
            for m in &all {
                for n in &all {
                    if is_admissible(m, n) {
                        assert!(
                            interlaces(&m.to_partition(), &n.to_partition()),
                            "m = {:?}, n = {:?}",
                            m,
                            n
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn admissible_images_match_filter() {
        for m_size in 0..=3usize {
            for bits in 0..(1u32 << m_size) {
                for n0 in 0..=2u32 {
                    let sites: Vec<u8> = (0..m_size).map(|k| ((bits >> k) & 1) as u8).collect();
                    let n = SiteConfig::new(n0, sites);
                    let mut overflow = false;
                    let fast: Vec<SiteConfig> = admissible_images(&n, 10, &mut overflow)
                        .into_iter()
                        .map(|(c, _, _)| c)
                        .collect();
                    assert!(!overflow);
                    let mut slow = Vec::new();
                    for mbits in 0..(1u32 << m_size) {
                        for m0 in 0..=4u32 {
                            let msites: Vec<u8> =
                                (0..m_size).map(|k| ((mbits >> k) & 1) as u8).collect();
                            let m = SiteConfig::new(m0, msites);
                            if is_admissible(&m, &n) {
                                slow.push(m);
                            }
                        }
                    }
                    slow.sort();
                    assert_eq!(fast, slow, "n = {:?}", n);
                }
            }
        }
    }

    #[test]
    fn fock_map_examples() {
        let (two, exp) = map_to_fock(&(cfg(0, &[0, 0]), cfg(0, &[0, 0])));
        assert!(two.first.is_empty() && two.second.is_empty());
        assert_eq!(exp, 0);
        let (two, exp) = map_to_fock(&(cfg(2, &[1, 0, 1]), cfg(0, &[0, 1, 0])));
        assert_eq!(two.first, StrictPartition::new(vec![3, 1]));
        assert_eq!(two.second, StrictPartition::new(vec![2]));
        assert_eq!(exp, -3);
    }

    #[test]
    fn config_text_round_trip() {
        let c = cfg(2, &[1, 0, 1]);
        let s = format_config(1, &c);
        assert_eq!(s, "species:1 2,1,0,1");
        assert_eq!(parse_config(&s).unwrap(), (1, c));
        assert!(parse_config("species:3 0,0").is_err());
        assert!(parse_config("species:1 0,2").is_err());
    }

    #[test]
    fn n0_cap_truncation_flag() {
        let ctx = simple_ctx();
        let l = LatticeContext {
            m1: 1,
            m2: 1,
            n0_cap: 0,
        };
        let vac = LatticeVector::vacuum(&ctx, l);
        let bumped = vac.apply_mode(Species::One, ModeOp::Create(0), Side::Ket);
        assert!(bumped.is_zero());
        assert!(bumped.truncated());
    }
}
