//! Goto numbers of the monomial parameter ideals `x^u R`.
//!
//! `g(u)` is read off the Goto vector: `g(u) = min { sigma(alpha) | alpha in
//! A(u) }` with `A(u) = { alpha in 1..=e | u - alpha in S }`. A separate
//! brute-force route works straight from the colon-ideal definition and is
//! used to cross-check the vector.
//!
//! `tau` is also the minimum Goto number over all parameter ideals of
//! `k[[S]]`, not only the monomial ones; only the monomial ideals are
//! computed here.

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};
use crate::num::{ceil_div, floor_div};
use crate::semigroup::NumericalSemigroup;

/// `(sigma(1), ..., sigma(e))` together with `tau = min sigma` and
/// `rho = max g(a_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GotoVector {
    pub sigma: Vec<i64>,
    pub tau: i64,
    pub rho: i64,
}

impl GotoVector {
    /// `sigma(alpha)` for `alpha` in `1..=e`.
    pub fn sigma_at(&self, alpha: i64) -> i64 {
        self.sigma[(alpha - 1) as usize]
    }
}

/// Estimates bracketing `g(u)` in terms of `f`, the generators and the
/// predecessor `u~` of `u` in `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GotoBounds {
    /// `ceil((f + u - u~) / a_nu)`.
    pub lower: i64,
    /// `floor((f + u - u~) / a1)`.
    pub upper: i64,
    /// `floor((f + a1) / a2)`, reported when `u = a1`.
    pub multiplicity_upper: Option<i64>,
    /// `ceil((f + a_nu - a_nu~) / a_{nu-1})`, reported when `u = a_nu`.
    pub largest_generator_lower: Option<i64>,
}

impl NumericalSemigroup {
    fn require_nonzero_member(&self, u: i64) -> Result<()> {
        if u >= 1 && self.contains(u) {
            Ok(())
        } else {
            Err(Error::NotAMember(u))
        }
    }

    /// `A(u)` by direct scan, checked against its Apery-set description.
    pub fn a_set(&self, u: i64) -> Result<Vec<i64>> {
        self.require_nonzero_member(u)?;
        let e = self.multiplicity();
        let direct: Vec<i64> = (1..=e).filter(|&alpha| self.contains(u - alpha)).collect();

        // u = w_p + k a1; w_h is the largest Apery element below u.
        let table = self.apery_orderings();
        let p = table
            .index_of(table.v_at(u))
            .ok_or_else(|| Error::AssertionFailed("residue of u missing from Ap(S)".into()))?;
        let h = table.w.iter().rposition(|&w| w < u).unwrap();
        let p_hat = table.hat[p];
        let mut via_apery: Vec<i64> = (0..=h)
            .map(|j| {
                let v = table.v_at(p_hat - table.hat[j]);
                v - (ceil_div(v, e) - 1) * e
            })
            .collect();
        via_apery.sort_unstable();
        via_apery.dedup();
        ensure(direct == via_apery, || {
            format!("A({u}) = {direct:?} by scan but {via_apery:?} from Ap(S)")
        })?;
        Ok(direct)
    }

    /// The Goto vector, computed once per semigroup.
    ///
    /// Each `sigma(alpha)` is evaluated as the top order on `Ap(S; alpha)` and
    /// as the top order of `p + alpha` over `p in T`; the two must agree.
    pub fn goto_vector(&self) -> Result<GotoVector> {
        self.goto_cache
            .get_or_init(|| self.compute_goto_vector())
            .clone()
    }

    fn compute_goto_vector(&self) -> Result<GotoVector> {
        self.require_proper()?;
        let e = self.multiplicity();
        let t = self.t_set()?;
        let mut sigma = Vec::with_capacity(e as usize);
        for alpha in 1..=e {
            let by_apery = self
                .apery_set(alpha)?
                .into_iter()
                .map(|w| self.ord(w))
                .max()
                .unwrap();
            let by_t = t.iter().map(|&p| self.ord(p + alpha)).max().unwrap();
            ensure(by_apery == by_t, || {
                format!(
                    "{}: sigma({alpha}) is {by_apery} over Ap(S;{alpha}) but {by_t} over T",
                    self.label()
                )
            })?;
            sigma.push(by_apery);
        }
        let top_apery = self.apery_w().iter().map(|&w| self.ord(w)).max().unwrap();
        ensure(sigma[(e - 1) as usize] == top_apery, || {
            format!("sigma(e) = {} but max ord on Ap(S) is {top_apery}", sigma[(e - 1) as usize])
        })?;
        let tau = *sigma.iter().min().unwrap();
        let mut rho = i64::MIN;
        for &a in self.generators() {
            let g = (1..=e)
                .filter(|&alpha| self.contains(a - alpha))
                .map(|alpha| sigma[(alpha - 1) as usize])
                .min()
                .unwrap();
            rho = rho.max(g);
        }
        Ok(GotoVector { sigma, tau, rho })
    }

    /// `g(u) = min { sigma(alpha) | alpha in A(u) }`.
    pub fn goto_number(&self, u: i64) -> Result<i64> {
        let a = self.a_set(u)?;
        let gv = self.goto_vector()?;
        Ok(a.iter().map(|&alpha| gv.sigma_at(alpha)).min().unwrap())
    }

    /// `g(u)` straight from the definition, without the Goto vector.
    ///
    /// `g(u)` is the largest `q` such that no `b in S` with `b < u` has
    /// `b + s in u + S` for every `s in S` with `ord(s) >= q`.
    ///
    /// Proof obligations for the finite search:
    /// * `s` is only scanned up to `f + u`: for larger `s`, `b + s - u > f`
    ///   is a member for every `b >= 0`.
    /// * `q` is capped at `ceil(f / a1) + 1` because `g(u) <= rho <=
    ///   ceil(f / a1)`; reaching the cap is reported as `CapExceeded`.
    pub fn goto_number_oracle(&self, u: i64) -> Result<i64> {
        self.require_nonzero_member(u)?;
        let f = self.frobenius();
        let cap = ceil_div(f, self.multiplicity()) + 1;
        let top = f + u;
        let orders = self.order_view(top);
        // For each b < u in S, the largest order of an s that keeps
        // x^b out of x^u R : m^q. b qualifies at q exactly when q exceeds it.
        let blockers: Vec<i64> = self
            .elements_in(0, u - 1)
            .map(|b| {
                (0..=top)
                    .filter(|&s| orders.get(s) >= 0 && !self.contains(b + s - u))
                    .map(|s| orders.get(s))
                    .max()
                    .unwrap_or(-1)
            })
            .collect();
        for q in 1..=cap {
            if blockers.iter().any(|&worst| worst < q) {
                return Ok(q - 1);
            }
        }
        Err(Error::CapExceeded {
            element: u,
            cap,
        })
    }

    /// Upper and lower estimates for `g(u)`.
    pub fn goto_bounds(&self, u: i64) -> Result<GotoBounds> {
        self.require_nonzero_member(u)?;
        self.require_proper()?;
        let f = self.frobenius();
        let gens = self.generators();
        let a1 = gens[0];
        let a_nu = self.largest_generator();
        let pred = |x: i64| (0..x).rev().find(|&y| self.contains(y)).unwrap();
        let span = f + u - pred(u);
        let multiplicity_upper = (u == a1).then(|| floor_div(f + a1, gens[1]));
        let largest_generator_lower = (u == a_nu).then(|| {
            let before = gens[gens.len() - 2];
            ceil_div(f + a_nu - pred(a_nu), before)
        });
        Ok(GotoBounds {
            lower: ceil_div(span, a_nu),
            upper: floor_div(span, a1),
            multiplicity_upper,
            largest_generator_lower,
        })
    }

    /// `(ceil(f / a_nu), ceil(f / a1))`: a lower bound for `tau` and an upper
    /// bound for `rho`.
    pub fn global_goto_bounds(&self) -> Result<(i64, i64)> {
        self.require_proper()?;
        let f = self.frobenius();
        Ok((
            ceil_div(f, self.largest_generator()),
            ceil_div(f, self.multiplicity()),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn a_sets() {
        let s = sg(&[4, 5, 7]);
        assert_eq!(s.a_set(4).unwrap(), vec![4]);
        assert_eq!(s.a_set(7).unwrap(), vec![2, 3]);
        assert_eq!(s.a_set(11).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(s.a_set(6), Err(Error::NotAMember(6)));
        assert_eq!(s.a_set(0), Err(Error::NotAMember(0)));
    }

    #[test]
    fn goto_vector_of_457() {
        let gv = sg(&[4, 5, 7]).goto_vector().unwrap();
        assert_eq!(gv.sigma, vec![1, 2, 2, 2]);
        assert_eq!((gv.tau, gv.rho), (1, 2));
    }

    #[test]
    fn goto_vector_of_569() {
        let gv = sg(&[5, 6, 9]).goto_vector().unwrap();
        assert_eq!(gv.sigma, vec![2, 3, 3, 3, 3]);
        assert_eq!(gv.tau, 2);
    }

    #[test]
    fn symmetric_goto_vector_is_conductor_orders() {
        for gens in [&[5, 6, 9][..], &[5, 8, 12], &[10, 17, 35], &[6, 7, 15]] {
            let s = sg(gens);
            let f = s.frobenius();
            let expected: Vec<i64> = (1..=s.multiplicity()).map(|a| s.ord(f + a)).collect();
            assert_eq!(s.goto_vector().unwrap().sigma, expected, "{s}");
        }
    }

    #[test]
    fn goto_numbers_457() {
        let s = sg(&[4, 5, 7]);
        for u in s.elements_in(1, 40) {
            let expected = if u == 4 || u == 7 { 2 } else { 1 };
            assert_eq!(s.goto_number(u).unwrap(), expected, "g({u})");
        }
    }

    #[test]
    fn goto_numbers_569() {
        let s = sg(&[5, 6, 9]);
        assert_eq!(s.goto_number(14).unwrap(), 3);
        assert_eq!(s.goto_number(11).unwrap(), 2);
        assert_eq!(s.goto_number(9).unwrap(), 3);
        assert_eq!(s.goto_number(5).unwrap(), 3);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(sg(&[4, 5, 7]).goto_number_oracle(4).unwrap(), 2);
        assert_eq!(sg(&[2, 3]).goto_number_oracle(3).unwrap(), 1);
        assert_eq!(sg(&[5, 8, 12]).goto_number_oracle(5).unwrap(), 3);
        assert_eq!(sg(&[4, 5, 7]).goto_number_oracle(3), Err(Error::NotAMember(3)));
    }

    #[test]
    fn oracle_matches_vector_on_small_cases() {
        for gens in [&[3, 5][..], &[4, 5, 7], &[5, 6, 9], &[7, 8, 9, 19], &[6, 7, 15]] {
            let s = sg(gens);
            let a1 = s.multiplicity();
            for u in s.elements_in(1, s.frobenius() + 2 * a1 + 1) {
                assert_eq!(
                    s.goto_number(u).unwrap(),
                    s.goto_number_oracle(u).unwrap(),
                    "{s} u={u}"
                );
            }
        }
    }

    #[test]
    fn bounds_examples() {
        let s = sg(&[5, 8, 12]);
        let big = s.goto_bounds(100).unwrap();
        assert_eq!(big.lower, 2);
        assert_eq!(s.global_goto_bounds().unwrap().0, 2);
        assert_eq!(s.goto_vector().unwrap().tau, 3);

        let b = sg(&[4, 5, 7]).goto_bounds(4).unwrap();
        assert_eq!(b.multiplicity_upper, Some(2));
        assert_eq!(sg(&[4, 5, 7]).goto_number(4).unwrap(), 2);

        let b = sg(&[2, 3]).goto_bounds(3).unwrap();
        assert_eq!(b.lower, 1);
        assert_eq!(b.largest_generator_lower, Some(1));
    }

    #[test]
    fn n0_is_refused() {
        let n0 = sg(&[1]);
        assert_eq!(n0.goto_vector(), Err(Error::RequiresProperSemigroup));
        assert_eq!(n0.goto_number(3), Err(Error::RequiresProperSemigroup));
    }
}
