//! Neutral-fermion Fock states labeled by strict 2-partitions, the bilinear
//! pairing (closed form and a mode-level Clifford rewriting oracle), and the
//! vertex operators acting at state level.
//!
//! States are labels, not mode words; mode words exist only inside the
//! rewriting engine, which independently validates the normalization
//! conventions. A label carries one strict partition per flavor plus a flag
//! for the padded zero mode, so that states reached by single-mode
//! applications (odd-length words) are representable too. The part-count
//! `l` used in coefficients never counts the pad.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::partition::{
    interlacing_covers, interlacing_restrictions, sharp_count, StrictPartition, TwoPartition,
};
use crate::qsqrt2::QSqrt2;
use crate::series::{MultiSeries, SeriesContext};

/// The two neutral-fermion flavors.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Flavor {
    Phi,
    PhiBar,
}

/// A basis state: a strict partition per flavor plus zero-pad flags. The
/// flavor word of a component is its parts in decreasing order, followed by
/// a zero mode when the pad flag is set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct FockLabel {
    pub pair: TwoPartition,
    pub pad1: bool,
    pub pad2: bool,
}

impl FockLabel {
    pub fn new(pair: TwoPartition, pad1: bool, pad2: bool) -> Self {
        FockLabel { pair, pad1, pad2 }
    }

    /// The standard label of a 2-partition: each component padded to an
    /// even-length word.
    pub fn standard(pair: TwoPartition) -> Self {
        let pad1 = pair.first.len() % 2 == 1;
        let pad2 = pair.second.len() % 2 == 1;
        FockLabel { pair, pad1, pad2 }
    }

    pub fn vacuum() -> Self {
        FockLabel::standard(TwoPartition::default())
    }

    pub fn component(&self, flavor: Flavor) -> (&StrictPartition, bool) {
        match flavor {
            Flavor::Phi => (&self.pair.first, self.pad1),
            Flavor::PhiBar => (&self.pair.second, self.pad2),
        }
    }

    /// Mode word of one flavor, decreasing, with the pad's zero appended.
    pub fn word(&self, flavor: Flavor) -> Vec<i64> {
        let (p, pad) = self.component(flavor);
        let mut w: Vec<i64> = p.parts().iter().map(|&x| x as i64).collect();
        if pad {
            w.push(0);
        }
        w
    }

    fn with_component(&self, flavor: Flavor, part: StrictPartition, pad: bool) -> FockLabel {
        let mut l = self.clone();
        match flavor {
            Flavor::Phi => {
                l.pair.first = part;
                l.pad1 = pad;
            }
            Flavor::PhiBar => {
                l.pair.second = part;
                l.pad2 = pad;
            }
        }
        l
    }

    pub fn weight(&self) -> u32 {
        self.pair.weight()
    }
}

impl fmt::Display for FockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |p: &StrictPartition, pad: bool| -> String {
            use alloc::string::ToString;
            let mut s = p.to_string();
            if pad {
                if s.is_empty() {
                    s.push('0');
                } else {
                    s.push_str(",0");
                }
            }
            s
        };
        write!(
            f,
            "{}|{}",
            side(&self.pair.first, self.pad1),
            side(&self.pair.second, self.pad2)
        )
    }
}

/// Parses `mu1|mu2`, each side a partition string with an optional trailing
/// `,0` (or a bare `0`) marking the zero pad.
impl core::str::FromStr for FockLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        use alloc::string::ToString;
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| "expected `mu1|mu2`".to_string())?;
        let parse_side = |t: &str| -> Result<(StrictPartition, bool), String> {
            let t = t.trim();
            if t == "0" {
                return Ok((StrictPartition::empty(), true));
            }
            if let Some(head) = t.strip_suffix(",0") {
                Ok((head.parse()?, true))
            } else {
                Ok((t.parse()?, false))
            }
        };
        let (first, pad1) = parse_side(a)?;
        let (second, pad2) = parse_side(b)?;
        Ok(FockLabel::new(TwoPartition::new(first, second), pad1, pad2))
    }
}

/// A finite combination of labels with series coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FockVector {
    ctx: Arc<SeriesContext>,
    terms: BTreeMap<FockLabel, MultiSeries>,
}

impl FockVector {
    pub fn zero(ctx: &Arc<SeriesContext>) -> Self {
        FockVector {
            ctx: Arc::clone(ctx),
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(ctx: &Arc<SeriesContext>, label: FockLabel) -> Self {
        let mut v = FockVector::zero(ctx);
        v.add_term(label, MultiSeries::one(ctx));
        v
    }

    pub fn vacuum(ctx: &Arc<SeriesContext>) -> Self {
        FockVector::basis(ctx, FockLabel::vacuum())
    }

    pub fn context(&self) -> &Arc<SeriesContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockLabel, &MultiSeries)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, label: &FockLabel) -> MultiSeries {
        self.terms
            .get(label)
            .cloned()
            .unwrap_or_else(|| MultiSeries::zero(&self.ctx))
    }

    pub fn add_term(&mut self, label: FockLabel, coeff: MultiSeries) {
        if coeff.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry(label)
            .or_insert_with(|| MultiSeries::zero(&self.ctx));
        e.add_assign(&coeff);
        if e.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add_assign(&mut self, rhs: &FockVector) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), c.clone());
        }
    }

    pub fn scale(&self, s: &MultiSeries) -> FockVector {
        let mut out = FockVector::zero(&self.ctx);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c.mul(s));
        }
        out
    }

    pub fn scale_scalar(&self, s: &QSqrt2) -> FockVector {
        let mut out = FockVector::zero(&self.ctx);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c.scale(s));
        }
        out
    }

    pub fn first_difference(
        &self,
        rhs: &FockVector,
    ) -> Option<(FockLabel, MultiSeries, MultiSeries)> {
        let mut keys: Vec<&FockLabel> = self.terms.keys().chain(rhs.terms.keys()).collect();
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

/// A free word in the flavored modes.
pub type CliffordWord = Vec<(Flavor, i64)>;

/// Rewrites a single-flavor mode word into canonical combinations
/// (strictly decreasing non-negative indices) using
/// `phi_m phi_n = -phi_n phi_m + 2 (-1)^m delta_{m+n,0}`, `phi_0^2 = 1`,
/// `phi_m^2 = 0` for `m != 0`, and `phi_n |0> = 0` for `n < 0`. Each swap
/// moves larger indices leftward, so the rewriting terminates.
fn reduce_word(word: &[i64]) -> BTreeMap<Vec<i64>, QSqrt2> {
    let mut out: BTreeMap<Vec<i64>, QSqrt2> = BTreeMap::new();
    let mut work: Vec<(QSqrt2, Vec<i64>)> = alloc::vec![(QSqrt2::one(), word.to_vec())];
    'outer: while let Some((coeff, mut w)) = work.pop() {
        if coeff.is_zero() {
            continue;
        }
        let mut i = 0;
        while i + 1 < w.len() {
            let (a, b) = (w[i], w[i + 1]);
            if a > b {
                i += 1;
                continue;
            }
            if a == b {
                if a == 0 {
                    // phi_0^2 = 1
                    w.drain(i..i + 2);
                    work.push((coeff, w));
                } // else phi_a^2 = 0: drop the term
                continue 'outer;
            }
            // a < b: swap with a sign, plus the anticommutator term
            if a + b == 0 {
                let mut shorter = w.clone();
                shorter.drain(i..i + 2);
                let delta = QSqrt2::from_int(if a.rem_euclid(2) == 0 { 2 } else { -2 });
                work.push((&coeff * &delta, shorter));
            }
            w.swap(i, i + 1);
            work.push((-coeff, w));
            continue 'outer;
        }
        // strictly decreasing; a trailing negative mode annihilates |0>
        if w.last().map_or(false, |&m| m < 0) {
            continue;
        }
        let e = out.entry(w).or_insert_with(QSqrt2::zero);
        *e += &coeff;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Vacuum expectation of a flavored word. Flavors commute, so the word
/// splits into one rewriting problem per flavor; the expectation is the
/// coefficient of the empty canonical word in each (a leading positive mode
/// kills the bra, a lone zero mode vanishes by parity).
pub fn vev(word: &CliffordWord) -> QSqrt2 {
    let mut total = QSqrt2::one();
    for flavor in [Flavor::Phi, Flavor::PhiBar] {
        let sub: Vec<i64> = word
            .iter()
            .filter(|(f, _)| *f == flavor)
            .map(|&(_, m)| m)
            .collect();
        let reduced = reduce_word(&sub);
        let c = reduced
            .get(&Vec::new())
            .cloned()
            .unwrap_or_else(QSqrt2::zero);
        if c.is_zero() {
            return QSqrt2::zero();
        }
        total *= &c;
    }
    total
}

/// How to evaluate the Fock pairing.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairingMethod {
    /// `2^{l(mu^1)} 2^{l(mu^2)} delta_{labels}`.
    ClosedForm,
    /// Expand labels into mode words and evaluate by Clifford rewriting.
    Clifford,
}

/// The pairing of one bra label against one ket label.
pub fn fock_inner_basis(bra: &FockLabel, ket: &FockLabel, method: PairingMethod) -> QSqrt2 {
    match method {
        PairingMethod::ClosedForm => {
            if bra == ket {
                QSqrt2::pow2(bra.pair.first.len() as i64 + bra.pair.second.len() as i64)
            } else {
                QSqrt2::zero()
            }
        }
        PairingMethod::Clifford => {
            let mut total = QSqrt2::one();
            for flavor in [Flavor::Phi, Flavor::PhiBar] {
                // bra side: phi*_n = (-1)^n phi_{-n}, reversed word order
                let bra_word = bra.word(flavor);
                let ket_word = ket.word(flavor);
                let mut word: Vec<i64> = Vec::new();
                let mut sign = QSqrt2::one();
                for &m in bra_word.iter().rev() {
                    word.push(-m);
                    if m % 2 == 1 {
                        sign = -sign;
                    }
                }
                word.extend(ket_word.iter().copied());
                let reduced = reduce_word(&word);
                let c = reduced
                    .get(&Vec::new())
                    .cloned()
                    .unwrap_or_else(QSqrt2::zero);
                if c.is_zero() {
                    return QSqrt2::zero();
                }
                total *= &(c * sign);
            }
            total
        }
    }
}

/// Bilinear extension of the pairing to vectors.
pub fn fock_inner(bra: &FockVector, ket: &FockVector, method: PairingMethod) -> MultiSeries {
    let mut acc = MultiSeries::zero(&bra.ctx);
    for (lb, cb) in &bra.terms {
        for (lk, ck) in &ket.terms {
            let w = fock_inner_basis(lb, lk, method);
            if !w.is_zero() {
                acc.add_assign(&cb.mul(ck).scale(&w));
            }
        }
    }
    acc
}

/// Applies a single mode to every label of a vector by word rewriting,
/// converting the canonical words back into labels. Negative modes
/// annihilate the vacuum; a surviving trailing zero becomes the pad flag.
pub fn apply_fock_mode(flavor: Flavor, mode: i64, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero(&v.ctx);
    for (label, coeff) in &v.terms {
        let mut word = alloc::vec![mode];
        word.extend(label.word(flavor));
        for (canon, c) in reduce_word(&word) {
            let pad = canon.last() == Some(&0);
            let parts: Vec<u32> = canon
                .iter()
                .take_while(|&&m| m > 0)
                .map(|&m| m as u32)
                .collect();
            let new_label = label.with_component(flavor, StrictPartition::new(parts), pad);
            out.add_term(new_label, coeff.scale(&c));
        }
    }
    out
}

fn pad_after(pad: bool, from_len: usize, to_len: usize) -> bool {
    // word length changes by pairs only, so the pad flag transports parity
    (pad as usize + from_len + to_len) % 2 == 1
}

/// The downward interlacing action shared by `Gamma_+` on kets and
/// `Gamma_-` on bras: every component descends with weight
/// `2^{#(mu|nu)} t^{|mu|-|nu|}`.
fn interlace_down(v: &FockVector, z_var: usize, v_var: usize) -> FockVector {
    let mut out = FockVector::zero(&v.ctx);
    for (label, coeff) in &v.terms {
        let (mu1, pad1) = label.component(Flavor::Phi);
        let (mu2, pad2) = label.component(Flavor::PhiBar);
        for nu1 in interlacing_restrictions(mu1) {
            let w1 = QSqrt2::pow2(sharp_count(mu1, &nu1) as i64);
            let d1 = mu1.weight() - nu1.weight();
            for nu2 in interlacing_restrictions(mu2) {
                let w2 = QSqrt2::pow2(sharp_count(mu2, &nu2) as i64);
                let d2 = mu2.weight() - nu2.weight();
                let mono = MultiSeries::monomial(&v.ctx, &[(z_var, d1), (v_var, d2)], &w1 * &w2);
                let new_label = FockLabel::new(
                    TwoPartition::new(nu1.clone(), nu2.clone()),
                    pad_after(pad1, mu1.len(), nu1.len()),
                    pad_after(pad2, mu2.len(), nu2.len()),
                );
                out.add_term(new_label, coeff.mul(&mono));
            }
        }
    }
    out
}

/// `Gamma_+(z, v)` on a ket vector: the finite downward interlacing sum.
pub fn gamma_plus(v: &FockVector, z_var: usize, v_var: usize) -> FockVector {
    interlace_down(v, z_var, v_var)
}

/// `Gamma_-(z, v)` on a bra vector: the finite downward interlacing sum
/// with the same weights.
pub fn gamma_minus_bra(v: &FockVector, z_var: usize, v_var: usize) -> FockVector {
    interlace_down(v, z_var, v_var)
}

/// `Gamma_-(z, v)` on a ket vector: the upward interlacing sum with weights
/// `2^{#(mu|nu) - l(mu) + l(nu)}`, truncated at weight rise `rise` per
/// component (equal to the series degree caps in the two variables).
pub fn gamma_minus_ket(v: &FockVector, z_var: usize, v_var: usize, rise: u32) -> FockVector {
    let mut out = FockVector::zero(&v.ctx);
    for (label, coeff) in &v.terms {
        let (nu1, pad1) = label.component(Flavor::Phi);
        let (nu2, pad2) = label.component(Flavor::PhiBar);
        for mu1 in interlacing_covers(nu1, rise) {
            let e1 = sharp_count(&mu1, nu1) as i64 - mu1.len() as i64 + nu1.len() as i64;
            let d1 = mu1.weight() - nu1.weight();
            for mu2 in interlacing_covers(nu2, rise) {
                let e2 = sharp_count(&mu2, nu2) as i64 - mu2.len() as i64 + nu2.len() as i64;
                let d2 = mu2.weight() - nu2.weight();
                let mono = MultiSeries::monomial(
                    &v.ctx,
                    &[(z_var, d1), (v_var, d2)],
                    QSqrt2::pow2(e1 + e2),
                );
                let new_label = FockLabel::new(
                    TwoPartition::new(mu1.clone(), mu2.clone()),
                    pad_after(pad1, nu1.len(), mu1.len()),
                    pad_after(pad2, nu2.len(), mu2.len()),
                );
                out.add_term(new_label, coeff.mul(&mono));
            }
        }
    }
    out
}

/// State-level check of the vertex-operator conjugation relation
/// `Gamma_+(z,v) phi_i = (phi_i + 2 sum_{n>=1} phi_{i-n} t^n) Gamma_+(z,v)`
/// (variable `z` for the phi flavor, `v` for the bar flavor), applied to
/// the vacuum and to single-mode states, expanding the left side through
/// the interlacing action and the right side through mode algebra.
pub fn check_vertex_conjugation(mode: i64, flavor: Flavor, cap: u32) -> bool {
    let ctx = SeriesContext::uniform(&["z", "v"], cap);
    let (zv, vv) = (0usize, 1usize);
    let var = match flavor {
        Flavor::Phi => zv,
        Flavor::PhiBar => vv,
    };
    let mut states = alloc::vec![FockVector::vacuum(&ctx)];
    for m in 0..=3i64 {
        states.push(apply_fock_mode(flavor, m, &FockVector::vacuum(&ctx)));
        // a mixed-flavor state exercises the untouched component too
        let other = match flavor {
            Flavor::Phi => Flavor::PhiBar,
            Flavor::PhiBar => Flavor::Phi,
        };
        states.push(apply_fock_mode(
            flavor,
            m,
            &apply_fock_mode(other, 1, &FockVector::vacuum(&ctx)),
        ));
    }
    for s in &states {
        if s.is_zero() {
            continue;
        }
        let lhs = gamma_plus(&apply_fock_mode(flavor, mode, s), zv, vv);
        let g = gamma_plus(s, zv, vv);
        let mut rhs = apply_fock_mode(flavor, mode, &g);
        for n in 1..=cap {
            let shifted = apply_fock_mode(flavor, mode - n as i64, &g);
            let mono = MultiSeries::monomial(&ctx, &[(var, n)], QSqrt2::from_int(2));
            rhs.add_assign(&shifted.scale(&mono));
        }
        if lhs.first_difference(&rhs).is_some() {
            return false;
        }
    }
    true
}

/// Checks the exchange relation
/// `Gamma_+(z,v) Gamma_-(x,y) = (1+xz)/(1-xz) (1+yv)/(1-yv)
///  Gamma_-(x,y) Gamma_+(z,v)`
/// on the given states, with all four variables capped at `cap`.
pub fn check_gamma_commutation(states: &[TwoPartition], cap: u32) -> bool {
    let ctx = SeriesContext::uniform(&["x", "y", "z", "v"], cap);
    let (xv, yv, zv, vv) = (0usize, 1, 2, 3);
    let ratio = {
        let one = MultiSeries::one(&ctx);
        let xz = MultiSeries::monomial(&ctx, &[(xv, 1), (zv, 1)], QSqrt2::one());
        let yv_m = MultiSeries::monomial(&ctx, &[(yv, 1), (vv, 1)], QSqrt2::one());
        let f1 = one.add(&xz).mul(&one.sub(&xz).invert_unit());
        let f2 = one.add(&yv_m).mul(&one.sub(&yv_m).invert_unit());
        f1.mul(&f2)
    };
    for pair in states {
        let s = FockVector::basis(&ctx, FockLabel::standard(pair.clone()));
        let lhs = gamma_plus(&gamma_minus_ket(&s, xv, yv, cap), zv, vv);
        let rhs = gamma_minus_ket(&gamma_plus(&s, zv, vv), xv, yv, cap).scale(&ratio);
        if lhs.first_difference(&rhs).is_some() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::strict_partitions_in_box;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec())
    }

    fn two(a: &[u32], b: &[u32]) -> TwoPartition {
        TwoPartition::new(sp(a), sp(b))
    }

    fn ctx_zv() -> Arc<SeriesContext> {
        SeriesContext::uniform(&["z", "v"], 8)
    }

    #[test]
    fn vev_examples() {
        assert_eq!(vev(&Vec::new()), QSqrt2::one());
        // <0| phi_1^* phi_1 |0> = -<0| phi_{-1} phi_1 |0> = 2
        assert_eq!(
            -vev(&alloc::vec![(Flavor::Phi, -1), (Flavor::Phi, 1)]),
            QSqrt2::from_int(2)
        );
        // flavors factorize: <phibar_2^* phi_1^* phi_1 phibar_2> = 4, the
        // star modes carrying (-1)^2 (-1)^1 = -1 in front of the raw word
        let word: CliffordWord = alloc::vec![
            (Flavor::PhiBar, -2),
            (Flavor::Phi, -1),
            (Flavor::Phi, 1),
            (Flavor::PhiBar, 2),
        ];
        assert_eq!(-vev(&word), QSqrt2::from_int(4));
        // odd words vanish by parity
        assert_eq!(vev(&alloc::vec![(Flavor::Phi, 0)]), QSqrt2::zero());
    }

    #[test]
    fn pairing_examples() {
        let ctx = ctx_zv();
        let vac = FockVector::vacuum(&ctx);
        for m in [PairingMethod::ClosedForm, PairingMethod::Clifford] {
            assert_eq!(fock_inner(&vac, &vac, m), MultiSeries::one(&ctx));
        }
        let one = FockVector::basis(&ctx, FockLabel::standard(two(&[1], &[])));
        for m in [PairingMethod::ClosedForm, PairingMethod::Clifford] {
            assert_eq!(
                fock_inner(&one, &one, m),
                MultiSeries::constant(&ctx, QSqrt2::from_int(2))
            );
        }
        let other = FockVector::basis(&ctx, FockLabel::standard(two(&[2], &[])));
        for m in [PairingMethod::ClosedForm, PairingMethod::Clifford] {
            assert!(fock_inner(&one, &other, m).is_zero());
        }
    }

    #[test]
    fn pairing_oracle_exhaustive_weight_4() {
        let ctx = ctx_zv();
        let mut labels = Vec::new();
        for a in strict_partitions_in_box(3, 4) {
            for b in strict_partitions_in_box(3, 4) {
                if a.weight() + b.weight() <= 4 {
                    labels.push(FockLabel::standard(TwoPartition::new(a.clone(), b)));
                }
            }
        }
        for lb in &labels {
            for lk in &labels {
                let closed = fock_inner_basis(lb, lk, PairingMethod::ClosedForm);
                let clifford = fock_inner_basis(lb, lk, PairingMethod::Clifford);
                assert_eq!(closed, clifford, "bra {:?} ket {:?}", lb, lk);
            }
        }
        let _ = ctx;
    }

    #[test]
    fn gamma_plus_examples() {
        let ctx = ctx_zv();
        let vac = FockVector::vacuum(&ctx);
        assert_eq!(gamma_plus(&vac, 0, 1), vac);

        // Gamma_+ |(1), 0> = |(1), 0> + 2z |0, 0>
        let s = FockVector::basis(&ctx, FockLabel::standard(two(&[1], &[])));
        let got = gamma_plus(&s, 0, 1);
        let mut want = s.clone();
        want.add_term(
            FockLabel::vacuum(),
            MultiSeries::monomial(&ctx, &[(0, 1)], QSqrt2::from_int(2)),
        );
        assert_eq!(got, want);

        // six interlacing terms below ((2), (1))
        let s = FockVector::basis(&ctx, FockLabel::standard(two(&[2], &[1])));
        let got = gamma_plus(&s, 0, 1);
        assert_eq!(got.terms().count(), 6);
        let coeff = got.coefficient(&FockLabel::standard(two(&[1], &[])));
        // nu1 = (1): 2 z, nu2 = {}: 2 v
        assert_eq!(
            coeff,
            MultiSeries::monomial(&ctx, &[(0, 1), (1, 1)], QSqrt2::from_int(4))
        );
    }

    #[test]
    fn gamma_minus_examples() {
        let ctx = ctx_zv();
        let vac = FockVector::vacuum(&ctx);
        // rise 1 per component: |0,0> + z |(1),0> + v |0,(1)> + zv |(1),(1)>,
        // each weight 2^{# - l(mu) + l(nu)} = 1
        let got = gamma_minus_ket(&vac, 0, 1, 1);
        let mut want = vac.clone();
        want.add_term(
            FockLabel::standard(two(&[1], &[])),
            MultiSeries::monomial(&ctx, &[(0, 1)], QSqrt2::one()),
        );
        want.add_term(
            FockLabel::standard(two(&[], &[1])),
            MultiSeries::monomial(&ctx, &[(1, 1)], QSqrt2::one()),
        );
        want.add_term(
            FockLabel::standard(two(&[1], &[1])),
            MultiSeries::monomial(&ctx, &[(0, 1), (1, 1)], QSqrt2::one()),
        );
        assert_eq!(got, want);

        // bra action mirrors gamma_plus
        let bra = FockVector::basis(&ctx, FockLabel::standard(two(&[1], &[])));
        let got = gamma_minus_bra(&bra, 0, 1);
        let mut want = bra.clone();
        want.add_term(
            FockLabel::vacuum(),
            MultiSeries::monomial(&ctx, &[(0, 1)], QSqrt2::from_int(2)),
        );
        assert_eq!(got, want);

        // matrix element <(1),0| Gamma_- |0,0> = 2z via both routes
        let ket_route = fock_inner(
            &FockVector::basis(&ctx, FockLabel::standard(two(&[1], &[]))),
            &gamma_minus_ket(&vac, 0, 1, 4),
            PairingMethod::ClosedForm,
        );
        let bra_route = fock_inner(
            &gamma_minus_bra(
                &FockVector::basis(&ctx, FockLabel::standard(two(&[1], &[]))),
                0,
                1,
            ),
            &vac,
            PairingMethod::ClosedForm,
        );
        let want = MultiSeries::monomial(&ctx, &[(0, 1)], QSqrt2::from_int(2));
        assert_eq!(ket_route, want);
        assert_eq!(bra_route, want);
    }

    #[test]
    fn gamma_minus_duality_weight_4() {
        // <mu| Gamma_- |nu> agrees between the bra action and the ket action
        let ctx = ctx_zv();
        let mut labels = Vec::new();
        for a in strict_partitions_in_box(2, 4) {
            for b in strict_partitions_in_box(2, 4) {
                if a.weight() + b.weight() <= 4 {
                    labels.push(FockLabel::standard(TwoPartition::new(a.clone(), b)));
                }
            }
        }
        for mu in &labels {
            let bra = FockVector::basis(&ctx, mu.clone());
            let via_bra = gamma_minus_bra(&bra, 0, 1);
            for nu in &labels {
                let ket = FockVector::basis(&ctx, nu.clone());
                let a = fock_inner(&via_bra, &ket, PairingMethod::ClosedForm);
                let b = fock_inner(
                    &bra,
                    &gamma_minus_ket(&ket, 0, 1, 8),
                    PairingMethod::ClosedForm,
                );
                assert_eq!(a, b, "mu {:?} nu {:?}", mu, nu);
            }
        }
    }

    #[test]
    fn vacuum_stability_both_sides() {
        let ctx = ctx_zv();
        let vac = FockVector::vacuum(&ctx);
        assert_eq!(gamma_plus(&vac, 0, 1), vac);
        assert_eq!(gamma_minus_bra(&vac, 0, 1), vac);
    }

    #[test]
    fn iterated_gamma_minus_is_chain_sum() {
        // Gamma_-(z2,v2) Gamma_-(z1,v1) |0> carries, per component, the
        // two-step interlacing chain weights 2^{# - l} telescoped over
        // empty < sigma < mu
        let ctx = SeriesContext::uniform(&["z1", "v1", "z2", "v2"], 6);
        let vac = FockVector::vacuum(&ctx);
        let got = gamma_minus_ket(&gamma_minus_ket(&vac, 0, 1, 4), 2, 3, 4);
        for mu in strict_partitions_in_box(3, 4) {
            if mu.weight() > 4 {
                continue;
            }
            // single-component slice: coefficient of |mu, empty>
            let label =
                FockLabel::standard(TwoPartition::new(mu.clone(), StrictPartition::empty()));
            let mut want = MultiSeries::zero(&ctx);
            for sigma in interlacing_restrictions(&mu) {
                // chain condition: empty < sigma as well
                if !crate::partition::interlaces(&sigma, &StrictPartition::empty()) {
                    continue;
                }
                let exp = sharp_count(&sigma, &StrictPartition::empty()) as i64
                    - sigma.len() as i64
                    + sharp_count(&mu, &sigma) as i64
                    - mu.len() as i64
                    + sigma.len() as i64;
                want.add_assign(&MultiSeries::monomial(
                    &ctx,
                    &[(0, sigma.weight()), (2, mu.weight() - sigma.weight())],
                    QSqrt2::pow2(exp),
                ));
            }
            assert_eq!(got.coefficient(&label), want, "mu = {:?}", mu);
        }
    }

    #[test]
    fn vertex_conjugation_small() {
        for flavor in [Flavor::Phi, Flavor::PhiBar] {
            for i in 0..=2i64 {
                assert!(
                    check_vertex_conjugation(i, flavor, 4),
                    "mode {} flavor {:?}",
                    i,
                    flavor
                );
            }
        }
    }

    #[test]
    fn gamma_commutation_small() {
        let states = [two(&[], &[]), two(&[1], &[]), two(&[2], &[1])];
        assert!(check_gamma_commutation(&states, 3));
    }

    #[test]
    fn label_text_round_trip() {
        use alloc::string::ToString;
        for s in ["|", "5,2,1,0|3,0", "1,0|", "0|2,1"] {
            let l: FockLabel = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        // standard padding is parity-forced
        let l = FockLabel::standard(two(&[5, 2, 1], &[3]));
        assert_eq!(l.to_string(), "5,2,1,0|3,0");
        assert!("1,1|".parse::<FockLabel>().is_err());
    }
}
