//! The registry of verifiable properties.
//!
//! A property checks one semigroup at a time. Properties with a fixed
//! corpus ignore the enumeration bounds and run on their own list of
//! semigroups. A `conclude` hook sees every note emitted during the run and
//! reports corpus-level failures or, for experiments, a summary.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::num::{ceil_div, floor_div};
use crate::semigroup::{NumericalSemigroup, Relation};

use super::verify::except_frobenius_bound;
use super::{EnumSpec, Filter, Mode};

/// The verdict of a property on one semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The hypotheses do not apply.
    Skip,
    Fail(String),
    /// A pass worth recording as evidence.
    Note(String),
}

/// What a `conclude` hook found after the run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Conclusion {
    pub failures: Vec<String>,
    pub evidence: Vec<String>,
}

/// Final pass over a whole run: the spec used and the collected notes.
pub type Concluder = fn(Option<&EnumSpec>, &[String]) -> Result<Conclusion>;

/// A registered property.
#[derive(Clone, Copy)]
pub struct Property {
    pub id: &'static str,
    pub description: &'static str,
    /// Experiments report evidence and never fail.
    pub experiment: bool,
    pub check: fn(&NumericalSemigroup) -> Result<Outcome>,
    pub corpus: Option<fn() -> Vec<Vec<i64>>>,
    pub conclude: Option<Concluder>,
    pub default_spec: fn() -> EnumSpec,
    /// Derive `frobenius_max` from the multiplicity cap when it is not given.
    pub frobenius_bound: Option<fn(i64) -> i64>,
}

impl std::fmt::Debug for Property {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Property").field("id", &self.id).finish()
    }
}

macro_rules! require {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Ok(Outcome::Fail(format!($($fmt)+)));
        }
    };
}

fn genus12() -> EnumSpec {
    EnumSpec::by_genus(12)
}

fn genus10() -> EnumSpec {
    EnumSpec::by_genus(10)
}

fn symmetric_genus14() -> EnumSpec {
    EnumSpec::by_genus(14).with_filter(Filter::Symmetric)
}

fn except_spec() -> EnumSpec {
    EnumSpec {
        mode: Mode::ByMultiplicityAndFrobenius,
        genus_max: None,
        multiplicity: None,
        multiplicity_max: Some(6),
        frobenius_max: Some(except_frobenius_bound(6)),
        filter: Filter::Symmetric,
    }
}

fn ele4_spec() -> EnumSpec {
    EnumSpec {
        mode: Mode::ByMultiplicityAndFrobenius,
        genus_max: None,
        multiplicity: None,
        multiplicity_max: Some(4),
        frobenius_max: Some(60),
        filter: Filter::Custom("proper".into()),
    }
}

fn question_spec() -> EnumSpec {
    EnumSpec {
        mode: Mode::ByMultiplicityAndFrobenius,
        genus_max: None,
        multiplicity: None,
        multiplicity_max: Some(9),
        frobenius_max: Some(45),
        filter: Filter::Symmetric,
    }
}

/// Nonzero members `u <= f + 2 a1 + 1`, the range every Goto check covers.
fn test_range(s: &NumericalSemigroup) -> Vec<i64> {
    let top = s.frobenius() + 2 * s.multiplicity() + 1;
    s.elements_in(1, top).collect()
}

fn chain_equal(chain: [i64; 6]) -> bool {
    chain.iter().all(|&x| x == chain[0])
}

fn theorem_main(s: &NumericalSemigroup) -> Result<Outcome> {
    s.goto_vector()?;
    for u in test_range(s) {
        let (g, oracle) = (s.goto_number(u)?, s.goto_number_oracle(u)?);
        require!(g == oracle, "g({u}) = {g} but the oracle gives {oracle}");
    }
    Ok(Outcome::Pass)
}

fn goto_monotonicity(s: &NumericalSemigroup) -> Result<Outcome> {
    let range = test_range(s);
    let top = 2 * range.last().unwrap();
    let members: Vec<i64> = s.elements_in(1, top).collect();
    let g = |u: i64| s.goto_number(u);
    let a_sets: Vec<Vec<i64>> = range.iter().map(|&u| s.a_set(u)).collect::<Result<_>>()?;
    for (i, &u) in range.iter().enumerate() {
        for (j, &u2) in range.iter().enumerate() {
            if a_sets[i].iter().all(|a| a_sets[j].contains(a)) {
                require!(g(u)? >= g(u2)?, "A({u}) in A({u2}) but g({u}) < g({u2})");
            }
            if j >= i {
                let sum = g(u + u2)?;
                require!(
                    sum <= g(u)?.min(g(u2)?),
                    "g({u} + {u2}) = {sum} exceeds min(g({u}), g({u2}))"
                );
            }
        }
    }
    let rho = members.iter().map(|&u| g(u)).collect::<Result<Vec<_>>>()?;
    let gv = s.goto_vector()?;
    require!(
        rho.iter().max() == Some(&gv.rho),
        "rho = {} but max g(u) over the range is {:?}",
        gv.rho,
        rho.iter().max()
    );
    Ok(Outcome::Pass)
}

fn tau_characterizations(s: &NumericalSemigroup) -> Result<Outcome> {
    let gv = s.goto_vector()?;
    let (f, a1) = (s.frobenius(), s.multiplicity());
    for u in f + a1 + 1..=f + 3 * a1 {
        let g = s.goto_number(u)?;
        require!(g == gv.tau, "g({u}) = {g} but tau = {}", gv.tau);
    }
    let by_min = s.goto_number(a1)?.min(s.goto_number(f + a1)?);
    require!(by_min == gv.tau, "min(g(a1), g(f+a1)) = {by_min} but tau = {}", gv.tau);
    let min_sigma = *gv.sigma.iter().min().unwrap();
    require!(min_sigma == gv.tau, "min sigma = {min_sigma} but tau = {}", gv.tau);
    let rho = s.generators().iter().map(|&a| s.goto_number(a)).collect::<Result<Vec<_>>>()?;
    let rho = *rho.iter().max().unwrap();
    require!(rho == gv.rho, "max g(a_i) = {rho} but rho = {}", gv.rho);
    Ok(Outcome::Pass)
}

fn g_a1_apery(s: &NumericalSemigroup) -> Result<Outcome> {
    let a1 = s.multiplicity();
    let g = s.goto_number(a1)?;
    let max_ord = s.apery_w().iter().map(|&w| s.ord(w)).max().unwrap();
    require!(g == max_ord, "g(a1) = {g} but max ord on Ap(S) = {max_ord}");
    require!(s.a_set(a1)? == vec![a1], "A(a1) is not {{e}}");
    let sigma_e = s.goto_vector()?.sigma_at(a1);
    require!(sigma_e == g, "sigma(e) = {sigma_e} but g(a1) = {g}");
    let beta = s.beta_vector()?;
    require!(
        beta.len() as i64 == g + 1 && beta.iter().all(|&b| b > 0),
        "orders on Ap(S) are not 0..=g(a1): beta = {beta:?}"
    );
    Ok(Outcome::Pass)
}

fn goto_bounds(s: &NumericalSemigroup) -> Result<Outcome> {
    let gv = s.goto_vector()?;
    let (lower, upper) = s.global_goto_bounds()?;
    require!(gv.tau >= lower, "tau = {} < ceil(f / a_nu) = {lower}", gv.tau);
    require!(gv.rho <= upper, "rho = {} > ceil(f / a1) = {upper}", gv.rho);
    let symmetric = s.is_symmetric()?;
    let floor = if symmetric && s.multiplicity() > 2 { 2 } else { 1 };
    for u in test_range(s) {
        let g = s.goto_number(u)?;
        let b = s.goto_bounds(u)?;
        require!(b.lower <= g && g <= b.upper, "g({u}) = {g} outside [{}, {}]", b.lower, b.upper);
        require!(g >= floor, "g({u}) = {g} < {floor}");
        if let Some(m) = b.multiplicity_upper {
            require!(g <= m, "g(a1) = {g} > floor((f + a1) / a2) = {m}");
        }
        if let Some(m) = b.largest_generator_lower {
            require!(g >= m, "g(a_nu) = {g} < {m}");
        }
    }
    Ok(Outcome::Pass)
}

fn symmetric_tau(s: &NumericalSemigroup) -> Result<Outcome> {
    if !s.is_symmetric()? {
        return Ok(Outcome::Skip);
    }
    let gv = s.goto_vector()?;
    let (f, a1) = (s.frobenius(), s.multiplicity());
    let by_conductor: Vec<i64> = (1..=a1).map(|alpha| s.ord(f + alpha)).collect();
    require!(gv.sigma == by_conductor, "sigma {:?} != ord(f + alpha) {by_conductor:?}", gv.sigma);
    for u in test_range(s) {
        let expected = s.a_set(u)?.iter().map(|&alpha| s.ord(f + alpha)).min().unwrap();
        let g = s.goto_number(u)?;
        require!(g == expected, "g({u}) = {g} but min ord(f + alpha) over A(u) = {expected}");
        for alpha in s.a_set(u)? {
            let m = g.min(s.goto_number(f + alpha)?);
            require!(m == gv.tau, "alpha = {alpha} in A({u}) but min(g(u), g(f+alpha)) = {m}");
        }
    }
    let least = gv.sigma.iter().filter(|&&x| x == gv.tau).count();
    let missing: Vec<i64> = (f + 1..=f + 2 * a1)
        .filter(|&u| s.goto_number(u) != Ok(gv.tau))
        .collect();
    let expected = usize::from(least == 1);
    require!(
        missing.len() == expected,
        "least sigma entry occurs {least} times but {missing:?} miss tau"
    );
    Ok(Outcome::Pass)
}

fn consym_12(s: &NumericalSemigroup) -> Result<Outcome> {
    if !s.is_symmetric()? {
        return Ok(Outcome::Skip);
    }
    let gens = s.generators();
    let (f, a1, a2) = (s.frobenius(), gens[0], gens[1]);
    let g1 = s.goto_number(a1)?;
    require!(g1 == s.ord(f + a1), "g(a1) = {g1} but ord(f + a1) = {}", s.ord(f + a1));
    let g2 = s.goto_number(a2)?;
    let expected = s.ord(f + a2 - floor_div(a2, a1) * a1);
    require!(g2 == expected, "g(a2) = {g2} but the conductor formula gives {expected}");
    Ok(Outcome::Pass)
}

fn apery_basics(s: &NumericalSemigroup) -> Result<Outcome> {
    let table = s.apery_orderings();
    let e = s.multiplicity();
    let f = s.frobenius();
    require!(!s.contains(f) && (f + 1..=f + e).all(|n| s.contains(n)), "f is not the Frobenius number");
    for n in s.elements_in(1, f + e) {
        let ap = s.apery_set(n)?;
        let residues: BTreeSet<i64> = ap.iter().map(|w| w.rem_euclid(n)).collect();
        require!(ap.len() as i64 == n && residues.len() as i64 == n, "Ap(S;{n}) is not a residue system");
    }
    let v = |i: i64| table.v_at(i);
    for n in 0..e {
        for m in 0..e {
            let t = v(n) + v(m) - v(n + m);
            require!(t >= 0 && t % e == 0, "v_{n} + v_{m} - v_{{n+m}} = {t}");
            let t = v(n - m) - (v(n) - v(m));
            require!(t >= 0 && t % e == 0, "v_{{n-m}} - (v_{n} - v_{m}) = {t}");
        }
        if v(n) != 0 {
            let lhs = v(n) + v(-n);
            let rhs = (1 + floor_div(v(n), e) + floor_div(v(-n), e)) * e;
            require!(lhs == rhs, "v_{n} + v_-{n} = {lhs} but {rhs} expected");
        }
    }
    let t = s.t_set()?;
    let max = s.max_min_apery(Relation::Plain)?.max;
    require!(t == max.iter().map(|w| w - e).collect::<Vec<_>>(), "T != maxAp - a1");
    Ok(Outcome::Pass)
}

fn order_basics(s: &NumericalSemigroup) -> Result<Outcome> {
    let gens = s.generators();
    let (a1, a_nu) = (gens[0], s.largest_generator());
    let bound = s.order_table_bound();
    let orders = s.order_table(bound);
    for n in s.elements_in(1, bound) {
        let o = orders[n as usize];
        require!(
            ceil_div(n, a_nu) <= o && o <= floor_div(n, a1),
            "ord({n}) = {o} outside [n / a_nu, n / a1]"
        );
    }
    let small: Vec<i64> = s.elements_in(0, bound.min(120)).collect();
    for &x in &small {
        for &y in small.iter().take_while(|&&y| y <= x && x + y <= bound) {
            let (ox, oy, oxy) = (orders[x as usize], orders[y as usize], orders[(x + y) as usize]);
            require!(oxy >= ox + oy, "ord({x} + {y}) = {oxy} < {ox} + {oy}");
        }
    }
    let beta = s.beta_vector()?;
    require!(
        beta[0] == 1 && beta.get(1) == Some(&(gens.len() - 1)) && beta.iter().sum::<usize>() == a1 as usize,
        "beta = {beta:?} for e = {a1}, nu = {}",
        gens.len()
    );
    Ok(Outcome::Pass)
}

fn beta_stuff(s: &NumericalSemigroup) -> Result<Outcome> {
    if !s.is_symmetric()? {
        return Ok(Outcome::Skip);
    }
    let beta = s.beta_vector()?;
    let g = beta.len() - 1;
    let (mut low, mut high) = (0, 0);
    let mut sums_equal = true;
    for i in 0..=g {
        low += beta[i];
        high += beta[g - i];
        require!(low >= high, "partial sums fail at i = {i}: beta = {beta:?}");
        sums_equal &= low == high;
    }
    let palindrome = (0..=g).all(|i| beta[i] == beta[g - i]);
    let m_pure = s.purity()?.1;
    require!(
        sums_equal == palindrome && palindrome == m_pure,
        "sums equal {sums_equal}, palindrome {palindrome}, m_pure {m_pure}: beta = {beta:?}"
    );
    Ok(Outcome::Pass)
}

fn mpsym(s: &NumericalSemigroup) -> Result<Outcome> {
    let symmetric = s.is_symmetric()?;
    let m_pure = s.purity()?.1;
    let max_m = s.max_min_apery(Relation::M)?.max;
    require!(
        (symmetric && m_pure) == (max_m.len() == 1),
        "symmetric {symmetric}, m_pure {m_pure}, but maxAp_M = {max_m:?}"
    );
    let (f, e) = (s.frobenius(), s.multiplicity());
    let w = s.apery_w();
    let top = w[w.len() - 1];
    let max = s.max_min_apery(Relation::Plain)?.max;
    let complementary = (0..w.len()).all(|i| w[i] + w[w.len() - 1 - i] == top);
    let below_top = w.iter().all(|&x| s.contains(top - x));
    let conditions = [symmetric, max == [f + e], max.len() == 1, complementary, below_top];
    require!(
        conditions.iter().all(|&c| c == symmetric),
        "symmetry characterizations disagree: {conditions:?}"
    );
    Ok(Outcome::Pass)
}

fn someeq(s: &NumericalSemigroup) -> Result<Outcome> {
    let rep = s.invariant_report()?;
    let fl = rep.flags;
    if fl.symmetric {
        require!(rep.ord_conductor == rep.tau, "symmetric but ord(C) = {} != tau = {}", rep.ord_conductor, rep.tau);
    }
    if fl.m_additive {
        require!(rep.g_a1 == rep.reduction_number, "M-additive but g(a1) != r");
    }
    if fl.m_additive && fl.symmetric {
        require!(
            rep.gamma == rep.ord_conductor && rep.ord_conductor == rep.tau,
            "M-additive symmetric but gamma, ord(C), tau = {}, {}, {}",
            rep.gamma,
            rep.ord_conductor,
            rep.tau
        );
    }
    if fl.symmetric {
        let w = s.apery_w();
        let e = w.len();
        let a1 = s.multiplicity();
        let witness = (0..e).any(|i| s.ord(w[i]) == floor_div(w[i], a1) && rep.delta_i[e - 1 - i] == rep.delta);
        require!(
            witness == (rep.delta == rep.gamma),
            "order witness {witness} but delta = {}, gamma = {}",
            rep.delta,
            rep.gamma
        );
    }
    Ok(Outcome::Pass)
}

fn g_and_ev(s: &NumericalSemigroup) -> Result<Outcome> {
    let e = s.multiplicity();
    let nu = s.embedding_dim() as i64;
    let g = s.goto_number(e)?;
    require!(g <= e - nu + 1, "g(a1) = {g} > e - nu + 1 = {}", e - nu + 1);
    let (_, m_pure) = s.purity()?;
    if m_pure && s.is_symmetric()? && 2 < nu && nu < e - 1 {
        require!(g <= e - 2 * nu + 3, "g(a1) = {g} > e - 2 nu + 3 = {}", e - 2 * nu + 3);
        let k = e - nu;
        require!(k + 3 <= e && e <= 2 * k, "nu = e - {k} but e = {e} outside [k + 3, 2k]");
    }
    Ok(Outcome::Pass)
}

fn almost_max(s: &NumericalSemigroup) -> Result<Outcome> {
    let e = s.multiplicity();
    let nu = s.embedding_dim() as i64;
    let symmetric = s.is_symmetric()?;
    if nu == e - 1 {
        let rep = s.invariant_report()?;
        let fl = rep.flags;
        require!(
            fl.m_pure == symmetric && symmetric == fl.m_symmetric,
            "almost maximal: m_pure {}, symmetric {symmetric}, m_symmetric {}",
            fl.m_pure,
            fl.m_symmetric
        );
    }
    if nu == e {
        require!(symmetric == (e == 2), "maximal embedding dimension, e = {e}, symmetric {symmetric}");
    }
    Ok(Outcome::Pass)
}

fn bar_and_fro(s: &NumericalSemigroup) -> Result<Outcome> {
    let Some(by_residues) = s.m_additive_by_apery_residues()? else {
        return Ok(Outcome::Skip);
    };
    let m_additive = s.is_m_additive()?;
    require!(by_residues == m_additive, "residue criterion {by_residues} but M-additive {m_additive}");
    Ok(Outcome::Pass)
}

fn mpureadd_families(s: &NumericalSemigroup) -> Result<Outcome> {
    let gens = s.generators();
    let e = s.multiplicity();
    let nu = gens.len() as i64;
    let symmetric = s.is_symmetric()?;
    let arithmetic = s.arithmetic_difference().is_some();
    let (_, m_pure) = s.purity()?;
    let m_additive = s.is_m_additive()?;
    let t_count = s.t_set()?.len() as i64;

    let additive_expected = nu == 2
        || nu == e
        || (nu == e - 1 && t_count < e - 2)
        || arithmetic
        || (e <= 4 && !(e == 4 && nu == 3 && gens[2] == 3 * gens[1] - 4))
        || (symmetric && nu == e - 2);
    if additive_expected {
        require!(m_additive, "expected M-additive");
    }
    let pure_additive_expected = nu == 2
        || nu == e
        || (symmetric && nu == e - 1)
        || arithmetic
        || (e <= 4 && !(e == 4 && nu == 3 && !symmetric));
    if pure_additive_expected {
        require!(m_pure && m_additive, "expected M-pure and M-additive");
    }
    let m_symmetric_expected = nu == 2
        || (symmetric && nu == e - 1)
        || (arithmetic && (e - 2) % (nu - 1) == 0)
        || (e <= 4 && symmetric);
    if m_symmetric_expected {
        require!(symmetric && m_pure && m_additive, "expected M-symmetric");
    }
    if nu == e || arithmetic || (symmetric && m_pure && m_additive) {
        let chain = s.invariant_report()?.chain();
        require!(chain_equal(chain), "chain {chain:?} is not constant");
    }
    if additive_expected || pure_additive_expected || m_symmetric_expected {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::Skip)
    }
}

fn tev(s: &NumericalSemigroup) -> Result<Outcome> {
    let e = s.multiplicity();
    let nu = s.embedding_dim() as i64;
    let tau = s.goto_vector()?.tau;
    let symmetric = s.is_symmetric()?;
    require!(tau <= e - nu + 1, "tau = {tau} > e - nu + 1");
    if symmetric && s.purity()?.1 && 2 < nu && nu < e - 1 {
        require!(tau <= e - 2 * nu + 3, "tau = {tau} > e - 2 nu + 3");
    }
    if nu == 2 {
        require!(tau == e - 1, "nu = 2 but tau = {tau}");
    }
    if nu == e - 1 && symmetric {
        require!(tau == 2, "symmetric almost maximal but tau = {tau}");
    }
    if nu == e {
        require!(tau == 1, "maximal embedding dimension but tau = {tau}");
    }
    if s.arithmetic_difference().is_some() {
        let expected = ceil_div(e - 1, nu - 1);
        require!(tau == expected, "arithmetic sequence but tau = {tau} != {expected}");
    }
    Ok(Outcome::Pass)
}

fn lemma_3lem(s: &NumericalSemigroup) -> Result<Outcome> {
    let e = s.multiplicity();
    if s.embedding_dim() != 3 || !s.is_symmetric()? || !(5..=7).contains(&e) {
        return Ok(Outcome::Skip);
    }
    let m_pure = s.purity()?.1;
    require!(m_pure == (e == 6), "symmetric, nu = 3, e = {e}, m_pure = {m_pure}");
    Ok(Outcome::Pass)
}

fn puret_g(s: &NumericalSemigroup) -> Result<Outcome> {
    let gens = s.generators();
    let g = s.goto_number(gens[0])?;
    if !s.purity()?.0 || floor_div(gens[1], gens[0]) < g - 1 {
        return Ok(Outcome::Skip);
    }
    let rep = s.invariant_report()?;
    let values = [rep.gamma, rep.ord_conductor, rep.tau, rep.g_a1];
    require!(values.iter().all(|&x| x == g), "gamma, ord(C), tau, g(a1) = {values:?}");
    Ok(Outcome::Pass)
}

fn cor50(s: &NumericalSemigroup) -> Result<Outcome> {
    let rep = s.invariant_report()?;
    let fl = rep.flags;
    let conditions = fl.symmetric && fl.m_additive && rep.tau == rep.g_a1 && rep.delta == rep.gamma;
    require!(
        fl.gr_gorenstein == conditions,
        "gr Gorenstein {} but the four conditions give {conditions}",
        fl.gr_gorenstein
    );
    Ok(Outcome::Pass)
}

fn chain_star(s: &NumericalSemigroup) -> Result<Outcome> {
    let rep = s.invariant_report()?;
    let chain = rep.chain();
    require!(chain.windows(2).all(|p| p[0] <= p[1]), "chain {chain:?} is not monotone");
    let fl = rep.flags;
    require!(fl.m_pure == (rep.delta == rep.g_a1), "m_pure {} but delta = {}, g(a1) = {}", fl.m_pure, rep.delta, rep.g_a1);
    require!(
        (fl.m_pure && fl.m_additive) == (rep.delta == rep.reduction_number),
        "m_pure and m_additive {} but delta = {}, r = {}",
        fl.m_pure && fl.m_additive,
        rep.delta,
        rep.reduction_number
    );
    require!(
        fl.m_symmetric == (fl.symmetric && rep.delta == rep.reduction_number),
        "m_symmetric {} but symmetric and delta = r gives the opposite",
        fl.m_symmetric
    );
    Ok(Outcome::Pass)
}

fn mpure_colon(s: &NumericalSemigroup) -> Result<Outcome> {
    let m_pure = s.purity()?.1;
    let holds = s.colon_identity_holds()?;
    require!(holds == m_pure, "colon identity {holds} but m_pure {m_pure}");
    Ok(Outcome::Pass)
}

fn theorem_equivs(s: &NumericalSemigroup) -> Result<Outcome> {
    let rep = s.invariant_report()?;
    let fl = rep.flags;
    let g_eq_r = rep.g_a1 == rep.reduction_number;
    require!(fl.gr_bar_gorenstein == (fl.m_pure && fl.symmetric), "gr_bar Gorenstein mismatch");
    require!(!fl.m_additive || g_eq_r, "M-additive but g(a1) != r");
    if fl.m_pure {
        require!(fl.m_additive == g_eq_r, "M-pure, M-additive {} but g(a1) = r is {g_eq_r}", fl.m_additive);
    }
    require!(fl.gr_gorenstein == (fl.gr_bar_gorenstein && g_eq_r), "gr Gorenstein mismatch");
    require!(fl.m_symmetric == fl.gr_gorenstein, "M-symmetric != gr Gorenstein");

    // Additivity along each residue class of Ap(S), up to the same bound.
    let a1 = s.multiplicity();
    let bound = 2 * (a1 - 1) * s.largest_generator();
    let along_apery = s
        .apery_w()
        .iter()
        .all(|&w| (0..).map(|k| (k, w + k * a1)).take_while(|&(_, x)| x <= bound).all(|(k, x)| s.ord(x) == s.ord(w) + k));
    require!(along_apery == fl.m_additive, "Apery-class additivity {along_apery} but M-additive {}", fl.m_additive);
    Ok(Outcome::Pass)
}

fn closed_form(s: &NumericalSemigroup) -> Result<Outcome> {
    let families = s.applicable_families()?;
    if families == [crate::FamilyTag::General] {
        return Ok(Outcome::Skip);
    }
    for u in test_range(s) {
        let g = s.goto_number(u)?;
        for &family in &families {
            let value = s.closed_form_for(family, u)?;
            require!(value == Some(g), "{family}: closed form gives {value:?} for g({u}) = {g}");
        }
    }
    Ok(Outcome::Pass)
}

const EXCEPTIONS: [&[i64]; 2] = [&[5, 6, 9], &[6, 7, 10, 11]];

fn theorem_except(s: &NumericalSemigroup) -> Result<Outcome> {
    if s.multiplicity() > 6 || !s.is_symmetric()? {
        return Ok(Outcome::Skip);
    }
    let tau = s.goto_vector()?.tau;
    let g = s.goto_number(s.multiplicity())?;
    let listed = EXCEPTIONS.contains(&s.generators());
    require!((tau < g) == listed, "tau = {tau}, g(a1) = {g}");
    Ok(if listed { Outcome::Note(s.label()) } else { Outcome::Pass })
}

/// Each listed exception that the spec admits must have been found.
fn expected_found(
    spec: Option<&EnumSpec>,
    notes: &[String],
    expected: &[&[i64]],
) -> Result<Conclusion> {
    let mut out = Conclusion::default();
    let Some(spec) = spec else { return Ok(out) };
    for gens in expected {
        let s = NumericalSemigroup::from_generators(gens)?;
        if spec.admits(&s)? && !notes.contains(&s.label()) {
            out.failures.push(format!("{} is within bounds but was not found", s.label()));
        }
    }
    out.evidence = notes.to_vec();
    Ok(out)
}

fn conclude_except(spec: Option<&EnumSpec>, notes: &[String]) -> Result<Conclusion> {
    let mut out = expected_found(spec, notes, &EXCEPTIONS)?;
    let mut found = notes.to_vec();
    found.sort();
    out.evidence = vec![format!("exceptions with tau < g(a1): {}", found.join(" "))];
    Ok(out)
}

fn ele4_coverage(s: &NumericalSemigroup) -> Result<Outcome> {
    if s.multiplicity() > 4 {
        return Ok(Outcome::Skip);
    }
    let families = s.applicable_families()?;
    require!(
        families.iter().any(|f| matches!(f, crate::FamilyTag::MultiplicityLE4(_))),
        "no multiplicity <= 4 case matches"
    );
    let tau = s.goto_vector()?.tau;
    let g = s.goto_number(s.multiplicity())?;
    let special = s.generators() == [4, 5, 7];
    require!((tau < g) == special, "tau = {tau}, g(a1) = {g}");
    Ok(if special { Outcome::Note(s.label()) } else { Outcome::Pass })
}

fn conclude_ele4(spec: Option<&EnumSpec>, notes: &[String]) -> Result<Conclusion> {
    expected_found(spec, notes, &[&[4, 5, 7]])
}

fn consecutive_generators(s: &NumericalSemigroup) -> Result<Outcome> {
    if s.arithmetic_difference() != Some(1) {
        return Ok(Outcome::Skip);
    }
    let e = s.multiplicity();
    let nu = s.embedding_dim() as i64;
    let expected = ceil_div(e - 1, nu - 1);
    let by_f = ceil_div(s.frobenius(), e);
    require!(expected == by_f, "ceil((e-1)/(nu-1)) = {expected} but ceil(f/e) = {by_f}");
    for u in test_range(s) {
        let g = s.goto_number(u)?;
        require!(g == expected, "g({u}) = {g} != {expected}");
    }
    Ok(Outcome::Pass)
}

const EIGHT_EXAMPLES: [(&[i64], [bool; 3]); 8] = [
    (&[2, 3], [true, true, true]),
    (&[3, 4, 5], [false, true, true]),
    (&[4, 5, 7], [false, false, true]),
    (&[4, 5, 11], [false, false, false]),
    (&[5, 6, 9], [true, false, true]),
    (&[5, 6, 13], [false, true, false]),
    (&[6, 7, 15], [true, true, false]),
    (&[7, 8, 20], [true, false, false]),
];

fn eight_examples_corpus() -> Vec<Vec<i64>> {
    EIGHT_EXAMPLES.iter().map(|(g, _)| g.to_vec()).collect()
}

fn examples_8exs(s: &NumericalSemigroup) -> Result<Outcome> {
    let Some((_, expected)) = EIGHT_EXAMPLES.iter().find(|(g, _)| *g == s.generators()) else {
        return Ok(Outcome::Skip);
    };
    let fl = s.invariant_report()?.flags;
    let got = [fl.symmetric, fl.m_pure, fl.m_additive];
    require!(got == *expected, "(symmetric, m_pure, m_additive) = {got:?}, expected {expected:?}");
    Ok(Outcome::Pass)
}

const SHEN: [&[i64]; 2] = [&[7, 11, 20], &[11, 14, 21]];

fn shen_corpus() -> Vec<Vec<i64>> {
    SHEN.iter().map(|g| g.to_vec()).collect()
}

fn shen_counterexamples(s: &NumericalSemigroup) -> Result<Outcome> {
    if !SHEN.contains(&s.generators()) {
        return Ok(Outcome::Skip);
    }
    let tau = s.goto_vector()?.tau;
    for &a in s.generators() {
        let g = s.goto_number(a)?;
        require!(tau < g, "tau = {tau} but g({a}) = {g}");
    }
    if s.generators() == [11, 14, 21] {
        let fl = s.invariant_report()?.flags;
        require!(fl.symmetric && fl.m_additive, "expected symmetric and M-additive");
    }
    Ok(Outcome::Pass)
}

/// `<e, e+1, ..., e+nu-2, 2e-1>`.
pub(crate) fn near_consecutive(e: i64, nu: i64) -> Vec<i64> {
    let mut gens: Vec<i64> = (e..=e + nu - 2).collect();
    gens.push(2 * e - 1);
    gens
}

/// `<e, e+1, e+4, e+5, ..., 2e-1>`.
pub(crate) fn gapped_symmetric(e: i64) -> Vec<i64> {
    let mut gens = vec![e, e + 1];
    gens.extend(e + 4..2 * e);
    gens
}

fn family_corpus() -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for e in 4..=12 {
        for nu in 3..e {
            out.push(near_consecutive(e, nu));
        }
    }
    for e in 5..=14 {
        out.push(gapped_symmetric(e));
    }
    out
}

fn family_examples(s: &NumericalSemigroup) -> Result<Outcome> {
    let gens = s.generators();
    let e = s.multiplicity();
    let nu = gens.len() as i64;
    let gapped = e >= 5 && gens == gapped_symmetric(e);
    let near = 2 < nu && nu < e && gens == near_consecutive(e, nu);
    if !gapped && !near {
        return Ok(Outcome::Skip);
    }
    let tau = s.goto_vector()?.tau;
    let g = s.goto_number(e)?;
    require!(tau < g, "tau = {tau}, g(a1) = {g}");
    if gapped {
        require!(s.is_symmetric()? && s.frobenius() == 2 * e + 3, "expected symmetric with f = 2e + 3");
    }
    Ok(Outcome::Pass)
}

fn question_3lem(s: &NumericalSemigroup) -> Result<Outcome> {
    let e = s.multiplicity();
    if s.embedding_dim() != 3 || e < 4 || !s.is_symmetric()? {
        return Ok(Outcome::Skip);
    }
    let m_pure = s.purity()?.1;
    Ok(Outcome::Note(format!("{} {} {}", s.label(), e, m_pure)))
}

fn conclude_question(_: Option<&EnumSpec>, notes: &[String]) -> Result<Conclusion> {
    let mut agree = 0;
    let mut against = Vec::new();
    for note in notes {
        let mut parts = note.split(' ');
        let (label, e, m_pure) = (parts.next(), parts.next(), parts.next());
        let even = e.and_then(|e| e.parse::<i64>().ok()).is_some_and(|e| e % 2 == 0);
        if (m_pure == Some("true")) == even {
            agree += 1;
        } else {
            against.push(label.unwrap_or_default().to_string());
        }
    }
    let mut evidence = vec![format!(
        "symmetric nu = 3: {} checked, {agree} fit m_pure <=> e even, {} do not",
        notes.len(),
        against.len()
    )];
    if !against.is_empty() {
        evidence.push(format!("counterexamples: {}", against.join(" ")));
    }
    Ok(Conclusion { failures: Vec::new(), evidence })
}

macro_rules! prop {
    ($id:ident, $desc:expr, $spec:expr) => {
        Property {
            id: stringify!($id),
            description: $desc,
            experiment: false,
            check: $id,
            corpus: None,
            conclude: None,
            default_spec: $spec,
            frobenius_bound: None,
        }
    };
}

const REGISTRY: &[Property] = &[
    prop!(apery_basics, "Apery sets are residue systems; v-index sum rules; T = maxAp - a1", genus10),
    prop!(order_basics, "n / a_nu <= ord(n) <= n / a1, superadditivity, beta_0 = 1, beta_1 = nu - 1, sum beta = e", genus10),
    prop!(theorem_main, "g(u) from the Goto vector equals the colon-ideal oracle; both sigma formulas agree", genus12),
    prop!(goto_monotonicity, "A(u) in A(u') gives g(u) >= g(u'); g(u + u') <= min(g(u), g(u'))", genus10),
    prop!(tau_characterizations, "tau = g(u) for u > f + a1; tau = min(g(a1), g(f + a1)) = min sigma; rho = max g(a_i)", genus12),
    prop!(g_a1_apery, "g(a1) = max ord on Ap(S) = sigma(e)", genus12),
    prop!(goto_bounds, "f, u and its predecessor bracket g(u); tau >= f / a_nu; rho <= f / a1; g >= 1, >= 2 if symmetric with e > 2", genus12),
    prop!(symmetric_tau, "symmetric: sigma(alpha) = ord(f + alpha); at most one u > f misses tau, exactly when the least entry is unique", symmetric_genus14),
    prop!(consym_12, "symmetric: g(a1) = ord(f + a1), g(a2) = ord(f + a2 - floor(a2 / a1) a1)", symmetric_genus14),
    prop!(beta_stuff, "symmetric: beta partial sums dominate their reversal; equality iff palindromic iff M-pure", symmetric_genus14),
    prop!(mpsym, "symmetric and M-pure iff #maxAp_M = 1; equivalent forms of symmetry", genus12),
    prop!(someeq, "symmetric gives ord(C) = tau; M-additive gives g(a1) = r; both give gamma = ord(C) = tau; delta = gamma criterion", genus12),
    prop!(g_and_ev, "g(a1) <= e - nu + 1; M-pure symmetric with 2 < nu < e - 1 gives g(a1) <= e - 2 nu + 3", genus12),
    prop!(almost_max, "nu = e - 1: M-pure iff symmetric iff M-symmetric; nu = e: symmetric iff e = 2", genus12),
    prop!(bar_and_fro, "a2 = a1 + 1: M-additive iff 0 <= w - a1 ord(w) <= e - 1 on Ap(S)", genus12),
    prop!(mpureadd_families, "listed families are M-additive, M-pure and M-additive, or M-symmetric", genus12),
    prop!(tev, "tau <= e - nu + 1 and its special values", genus12),
    prop!(lemma_3lem, "symmetric nu = 3: e = 5, 7 never M-pure, e = 6 always M-pure", symmetric_genus14),
    prop!(puret_g, "pure with floor(a2 / a1) >= g(a1) - 1 gives gamma = ord(C) = tau = g(a1)", genus12),
    prop!(cor50, "gr Gorenstein iff symmetric, M-additive, tau = g(a1) and delta = gamma", genus12),
    prop!(chain_star, "delta <= gamma <= ord(C) <= tau <= g(a1) <= r; delta characterizes M-purity and M-symmetry", genus12),
    prop!(mpure_colon, "the colon identity on Ap(S) holds iff S is M-pure", genus10),
    prop!(theorem_equivs, "gr_bar Gorenstein iff M-pure symmetric; g(a1) = r versus M-additivity; gr Gorenstein iff gr_bar Gorenstein and g(a1) = r", genus12),
    prop!(closed_form, "every applicable family formula equals g(u)", genus12),
    Property {
        id: "theorem_except",
        description: "symmetric with e <= 6: tau = g(a1) except exactly <5,6,9> and <6,7,10,11>",
        experiment: false,
        check: theorem_except,
        corpus: None,
        conclude: Some(conclude_except),
        default_spec: except_spec,
        frobenius_bound: Some(except_frobenius_bound),
    },
    Property {
        id: "ele4_coverage",
        description: "e <= 4: some multiplicity <= 4 case applies; <4,5,7> is the only one with tau < g(a1)",
        experiment: false,
        check: ele4_coverage,
        corpus: None,
        conclude: Some(conclude_ele4),
        default_spec: ele4_spec,
        frobenius_bound: None,
    },
    prop!(consecutive_generators, "consecutive generators: g(u) = ceil((e-1)/(nu-1)) = ceil(f/e) for all u", genus12),
    Property {
        id: "examples_8exs",
        description: "symmetry, M-purity and M-additivity of the eight minimal examples",
        experiment: false,
        check: examples_8exs,
        corpus: Some(eight_examples_corpus),
        conclude: None,
        default_spec: genus12,
        frobenius_bound: None,
    },
    Property {
        id: "shen_counterexamples",
        description: "<7,11,20> and <11,14,21> have tau < g(a_i) for every generator",
        experiment: false,
        check: shen_counterexamples,
        corpus: Some(shen_corpus),
        conclude: None,
        default_spec: genus12,
        frobenius_bound: None,
    },
    Property {
        id: "family_examples",
        description: "<e, e+1, ..., e+nu-2, 2e-1> and symmetric <e, e+1, e+4, ..., 2e-1> have tau < g(a1)",
        experiment: false,
        check: family_examples,
        corpus: Some(family_corpus),
        conclude: None,
        default_spec: genus12,
        frobenius_bound: None,
    },
    Property {
        id: "question_3lem",
        description: "experiment: symmetric nu = 3, e >= 4, is M-pure equivalent to e even?",
        experiment: true,
        check: question_3lem,
        corpus: None,
        conclude: Some(conclude_question),
        default_spec: question_spec,
        frobenius_bound: None,
    },
];

/// Look up a property by id.
pub fn property(id: &str) -> Option<&'static Property> {
    REGISTRY.iter().find(|p| p.id == id)
}

/// All registered ids, in registry order.
pub fn property_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|p| p.id).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn ids_are_unique() {
        let ids = property_ids();
        let unique: BTreeSet<_> = ids.iter().collect();
        assert_eq!(ids.len(), unique.len());
        assert!(property("theorem_main").is_some());
        assert!(property("nope").is_none());
    }

    #[test]
    fn every_property_passes_on_small_examples() {
        for gens in [&[3, 4, 5][..], &[4, 5, 7], &[5, 6, 9], &[5, 8, 12], &[7, 8, 9, 19], &[6, 7, 15]] {
            let s = sg(gens);
            for p in REGISTRY {
                let outcome = (p.check)(&s).unwrap();
                assert!(!matches!(outcome, Outcome::Fail(_)), "{} on {}: {outcome:?}", p.id, s.label());
            }
        }
    }

    #[test]
    fn exception_is_noted() {
        assert_eq!(theorem_except(&sg(&[5, 6, 9])).unwrap(), Outcome::Note("<5,6,9>".into()));
        assert_eq!(theorem_except(&sg(&[5, 8, 12])).unwrap(), Outcome::Pass);
        assert_eq!(theorem_except(&sg(&[4, 5, 7])).unwrap(), Outcome::Skip);
    }

    #[test]
    fn family_generators() {
        assert_eq!(near_consecutive(6, 4), vec![6, 7, 8, 11]);
        assert_eq!(gapped_symmetric(5), vec![5, 6, 9]);
        assert_eq!(gapped_symmetric(7), vec![7, 8, 11, 12, 13]);
    }
}
