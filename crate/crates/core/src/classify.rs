//! Classification predicates and the invariant chain
//! `delta <= gamma <= ord(C) <= tau <= g(a1) <= r`.
//!
//! # Finite M-additivity test
//!
//! `S` is M-additive when `ord(u + a1) = ord(u) + 1` for every `u in S`. Only
//! `u <= (2e - 2) a_nu` needs checking. Suppose `u` fails and take a maximal
//! representation of `u + a1`. It uses no copy of `a1`, since removing one
//! would give `ord(u) >= ord(u + a1) - 1`. If it has at least `2e - 1` terms,
//! the Erdos-Ginzburg-Ziv theorem yields `e` of them whose sum is `m e` with
//! `m >= e + 1`, because every term exceeds `a1 = e`. Replacing those `e`
//! terms by `m` copies of `a1` lengthens the representation, which is
//! impossible. So `ord(u + a1) <= 2e - 2` and `u + a1 <= (2e - 2) a_nu`.

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Result};
use crate::num::floor_div;
use crate::semigroup::{NumericalSemigroup, Relation};

/// The classification flags of a semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Flags {
    pub symmetric: bool,
    pub pure: bool,
    pub m_pure: bool,
    pub m_additive: bool,
    pub m_symmetric: bool,
    /// `gr` of `R / x^{a1} R` is Gorenstein.
    pub gr_bar_gorenstein: bool,
    /// `gr_m(R)` is Gorenstein.
    pub gr_gorenstein: bool,
}

/// `delta_i`, `gamma_i` per Apery position and their minima.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaGamma {
    pub delta: i64,
    pub gamma: i64,
    pub delta_i: Vec<i64>,
    pub gamma_i: Vec<i64>,
}

/// Everything on the invariant chain plus the flags and the beta vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub delta: i64,
    pub gamma: i64,
    pub ord_conductor: i64,
    pub tau: i64,
    pub g_a1: i64,
    pub reduction_number: i64,
    pub delta_i: Vec<i64>,
    pub gamma_i: Vec<i64>,
    pub beta: Vec<usize>,
    pub flags: Flags,
}

impl InvariantReport {
    /// `(delta, gamma, ord(C), tau, g(a1), r)`.
    pub fn chain(&self) -> [i64; 6] {
        [
            self.delta,
            self.gamma,
            self.ord_conductor,
            self.tau,
            self.g_a1,
            self.reduction_number,
        ]
    }
}

impl NumericalSemigroup {
    /// Odd `f` with exactly half of `0..=f` in `S`.
    pub fn is_symmetric(&self) -> Result<bool> {
        self.require_proper()?;
        let f = self.frobenius();
        let members = self.elements_in(0, f).count() as i64;
        let symmetric = f % 2 == 1 && 2 * members == f + 1;
        let max_count = self.max_min_apery(Relation::Plain)?.max.len();
        ensure(symmetric == (max_count == 1), || {
            format!("{}: symmetric = {symmetric} but #maxAp = {max_count}", self.label())
        })?;
        Ok(symmetric)
    }

    /// `(pure, m_pure)`.
    pub fn purity(&self) -> Result<(bool, bool)> {
        let plain = self.max_min_apery(Relation::Plain)?.max;
        let m = self.max_min_apery(Relation::M)?.max;
        let same_order = |set: &[i64]| {
            let o = self.ord(set[0]);
            set.iter().all(|&w| self.ord(w) == o)
        };
        let pure = same_order(&plain);
        let m_pure = same_order(&m);
        ensure(m_pure == (pure && plain == m), || {
            format!(
                "{}: m_pure = {m_pure}, pure = {pure}, maxAp = {plain:?}, maxAp_M = {m:?}",
                self.label()
            )
        })?;
        Ok((pure, m_pure))
    }

    /// Members `u <= bound` with `ord(u + a1) != ord(u) + 1`.
    fn additivity_failures(&self, bound: i64) -> Vec<i64> {
        let a1 = self.multiplicity();
        let orders = self.order_view(bound + a1);
        self.elements_in(0, bound)
            .filter(|&u| orders.get(u + a1) != orders.get(u) + 1)
            .collect()
    }

    fn additivity_bound(&self) -> i64 {
        (2 * self.multiplicity() - 2) * self.largest_generator()
    }

    /// `ord(u + a1) = ord(u) + 1` for all `u in S`, checked up to
    /// `(2e - 2) a_nu` (see the module docs).
    pub fn is_m_additive(&self) -> Result<bool> {
        self.require_proper()?;
        Ok(self.additivity_failures(self.additivity_bound()).is_empty())
    }

    /// The criterion `0 <= w - a1 ord(w) <= e - 1` on `Ap(S)`, which decides
    /// M-additivity when `a2 = a1 + 1`; `None` otherwise.
    pub fn m_additive_by_apery_residues(&self) -> Result<Option<bool>> {
        self.require_proper()?;
        let gens = self.generators();
        let e = gens[0];
        if gens[1] != e + 1 {
            return Ok(None);
        }
        Ok(Some(self.apery_w().iter().all(|&w| {
            let r = w - e * self.ord(w);
            (0..e).contains(&r)
        })))
    }

    /// The reduction number of `m` with respect to `x^{a1} R`.
    ///
    /// `r` is the least `k` with `m^{k+1} = x^{a1} m^k`. An element of order
    /// at least `k + 1` must then be `a1 + t` with `ord(t) >= k`, so `k` is at
    /// least `g(a1)` (no Apery element may reach order `k + 1`) and at least
    /// `ord(u + a1)` for every `u` with `ord(u + a1) != ord(u) + 1`. All such
    /// `u` lie below `(2e - 2) a_nu - a1`.
    pub fn reduction_number(&self) -> Result<i64> {
        self.require_proper()?;
        let a1 = self.multiplicity();
        let g_a1 = self.goto_number(a1)?;
        let failures = self.additivity_failures(self.additivity_bound() - a1);
        let worst = failures.iter().map(|&u| self.ord(u + a1)).max();
        Ok(worst.map_or(g_a1, |w| w.max(g_a1)))
    }

    /// `delta_i` and `gamma_i` maximise `ord(w_i) + ord(w)` and
    /// `ord(w_i) + floor(w / a1)` over `w in S` with `w_i + w in Ap(S)`.
    pub fn delta_gamma(&self) -> Result<DeltaGamma> {
        self.require_proper()?;
        let a1 = self.multiplicity();
        let ap = self.apery_w();
        let top = *ap.last().unwrap();
        let in_ap = |x: i64| ap.binary_search(&x).is_ok();
        let mut delta_i = Vec::with_capacity(ap.len());
        let mut gamma_i = Vec::with_capacity(ap.len());
        for &wi in &ap {
            let partners: Vec<i64> = self.elements_in(0, top - wi).filter(|&w| in_ap(wi + w)).collect();
            let oi = self.ord(wi);
            delta_i.push(partners.iter().map(|&w| oi + self.ord(w)).max().unwrap());
            gamma_i.push(partners.iter().map(|&w| oi + floor_div(w, a1)).max().unwrap());
        }
        Ok(DeltaGamma {
            delta: *delta_i.iter().min().unwrap(),
            gamma: *gamma_i.iter().min().unwrap(),
            delta_i,
            gamma_i,
        })
    }

    /// The colon identity `(x^{a1}) : m^n = (x^{a1}) + m^{g-n+1}` for
    /// `1 <= n <= g = g(a1)`, restricted to monomials.
    ///
    /// On `Ap(S)` the left side is `{ w | w + s - a1 in S for all s with
    /// ord(s) >= n }` and the right side is `{ w | ord(w) >= g - n + 1 }`.
    /// For `s > f + a1 - w` the condition holds automatically.
    pub fn colon_identity_holds(&self) -> Result<bool> {
        self.require_proper()?;
        let a1 = self.multiplicity();
        let f = self.frobenius();
        let g = self.goto_number(a1)?;
        let ap = self.apery_w();
        let orders = self.order_view(f + a1);
        for n in 1..=g {
            for &w in &ap {
                let in_colon = (0..=f + a1 - w)
                    .filter(|&s| orders.get(s) >= n)
                    .all(|s| self.contains(w + s - a1));
                let in_sum = orders.get(w) > g - n;
                if in_colon != in_sum {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All invariants and flags, with the chain and the equivalences linking
    /// `delta`, `g(a1)` and `r` to the flags checked on the way.
    pub fn invariant_report(&self) -> Result<InvariantReport> {
        self.require_proper()?;
        let label = self.label();
        let symmetric = self.is_symmetric()?;
        let (pure, m_pure) = self.purity()?;
        let m_additive = self.is_m_additive()?;
        if let Some(by_residues) = self.m_additive_by_apery_residues()? {
            ensure(by_residues == m_additive, || {
                format!("{label}: M-additivity {m_additive} but Apery residue test {by_residues}")
            })?;
        }
        let dg = self.delta_gamma()?;
        let ord_conductor = self.conductor_order()?;
        let gv = self.goto_vector()?;
        let g_a1 = self.goto_number(self.multiplicity())?;
        let r = self.reduction_number()?;
        let beta = self.beta_vector()?;

        let m_symmetric = symmetric && m_pure && m_additive;
        let gr_bar_gorenstein = m_pure && symmetric;
        let gr_gorenstein = gr_bar_gorenstein && g_a1 == r;
        let report = InvariantReport {
            delta: dg.delta,
            gamma: dg.gamma,
            ord_conductor,
            tau: gv.tau,
            g_a1,
            reduction_number: r,
            delta_i: dg.delta_i,
            gamma_i: dg.gamma_i,
            beta,
            flags: Flags {
                symmetric,
                pure,
                m_pure,
                m_additive,
                m_symmetric,
                gr_bar_gorenstein,
                gr_gorenstein,
            },
        };

        let chain = report.chain();
        ensure(chain.windows(2).all(|p| p[0] <= p[1]), || {
            format!("{label}: chain {chain:?} is not monotone")
        })?;
        ensure(m_pure == (report.delta == g_a1), || {
            format!("{label}: m_pure = {m_pure} but delta = {}, g(a1) = {g_a1}", report.delta)
        })?;
        ensure((m_pure && m_additive) == (report.delta == r), || {
            format!("{label}: m_pure and m_additive disagree with delta = r")
        })?;
        ensure(!m_additive || g_a1 == r, || {
            format!("{label}: M-additive but g(a1) = {g_a1} != r = {r}")
        })?;
        ensure(gr_gorenstein == m_symmetric, || {
            format!("{label}: gr Gorenstein {gr_gorenstein} but M-symmetric {m_symmetric}")
        })?;
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn symmetry() {
        assert!(sg(&[5, 6, 9]).is_symmetric().unwrap());
        assert!(!sg(&[4, 5, 7]).is_symmetric().unwrap());
        assert!(sg(&[2, 3]).is_symmetric().unwrap());
        assert_eq!(sg(&[1]).is_symmetric(), Err(Error::RequiresProperSemigroup));
    }

    #[test]
    fn purity_examples() {
        assert_eq!(sg(&[5, 6, 9]).purity().unwrap(), (true, false));
        assert_eq!(sg(&[10, 17, 35]).purity().unwrap(), (true, true));
        assert!(!sg(&[4, 5, 11]).purity().unwrap().1);
    }

    #[test]
    fn m_additivity() {
        assert!(sg(&[4, 5, 7]).is_m_additive().unwrap());
        assert!(!sg(&[7, 8, 9, 19]).is_m_additive().unwrap());
        assert!(!sg(&[6, 7, 15]).is_m_additive().unwrap());
        assert_eq!(sg(&[7, 8, 9, 19]).ord(26), 3);
    }

    #[test]
    fn apery_residue_criterion() {
        assert_eq!(sg(&[4, 5, 7]).m_additive_by_apery_residues().unwrap(), Some(true));
        assert_eq!(sg(&[4, 5, 11]).m_additive_by_apery_residues().unwrap(), Some(false));
        assert_eq!(sg(&[5, 8, 12]).m_additive_by_apery_residues().unwrap(), None);
    }

    #[test]
    fn reduction_numbers() {
        assert_eq!(sg(&[5, 6, 14]).reduction_number().unwrap(), 4);
        assert_eq!(sg(&[6, 7, 15]).reduction_number().unwrap(), 5);
        assert_eq!(sg(&[10, 17, 35]).reduction_number().unwrap(), 5);
        assert_eq!(sg(&[7, 8, 9, 19]).reduction_number().unwrap(), 3);
    }

    #[test]
    fn delta_and_gamma() {
        let dg = sg(&[5, 8, 12]).delta_gamma().unwrap();
        assert_eq!((dg.delta, dg.gamma), (2, 3));
        let dg = sg(&[4, 7, 9]).delta_gamma().unwrap();
        assert_eq!((dg.delta, dg.gamma), (1, 1));
        let dg = sg(&[5, 6, 14]).delta_gamma().unwrap();
        assert_eq!((dg.delta, dg.gamma), (1, 1));
    }

    #[test]
    fn reports() {
        let r = sg(&[5, 6, 14]).invariant_report().unwrap();
        assert_eq!(r.chain(), [1, 1, 1, 2, 3, 4]);
        assert!(sg(&[10, 17, 35]).invariant_report().unwrap().flags.gr_gorenstein);
        let f = sg(&[5, 8, 12]).invariant_report().unwrap().flags;
        assert!(f.symmetric && !f.gr_bar_gorenstein);
        let r = sg(&[5, 8, 12]).invariant_report().unwrap();
        assert_eq!(r.chain(), [2, 3, 3, 3, 3, 3]);
        let r = sg(&[4, 7, 9]).invariant_report().unwrap();
        assert_eq!(r.chain(), [1, 1, 2, 2, 2, 2]);
    }

    #[test]
    fn colon_identity_tracks_m_purity() {
        for gens in [&[5, 6, 9][..], &[10, 17, 35], &[4, 5, 11], &[6, 7, 15], &[5, 8, 12], &[3, 4, 5]] {
            let s = sg(gens);
            assert_eq!(s.colon_identity_holds().unwrap(), s.purity().unwrap().1, "{s}");
        }
    }
}
