//! Numerical semigroups, Apery sets and the two partial orders on `Ap(S)`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{ensure, Error, Result};
use crate::goto::GotoVector;
use crate::order::OrderTable;

/// Largest generator accepted at construction.
pub const MAX_GENERATOR: i64 = 1 << 31;

/// Default cap on the size of the membership and order tables.
pub const DEFAULT_TABLE_LIMIT: i64 = 1 << 24;

/// Construction options.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemigroupOptions {
    /// Reject `N0` (a single generator `1`).
    pub proper: bool,
    /// Refuse to build when the initial table bound exceeds this value.
    pub table_limit: i64,
}

impl Default for SemigroupOptions {
    fn default() -> Self {
        SemigroupOptions {
            proper: false,
            table_limit: DEFAULT_TABLE_LIMIT,
        }
    }
}

/// A numerical semigroup given by its minimal generating set.
///
/// Membership is answered from the Apery set of the multiplicity, so it is
/// exact for every integer. The m-adic order table covers
/// `0..=max(f + 2a1, (2e - 2) a_nu + a1)` at construction and grows on demand
/// behind a lock, so a shared reference can be used from several threads.
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    frobenius: i64,
    /// `apery_v[r]` is the least element congruent to `r` modulo `a1`.
    apery_v: Vec<i64>,
    membership: Vec<bool>,
    gaps: Vec<i64>,
    pub(crate) orders: OrderTable,
    pub(crate) goto_cache: OnceLock<Result<GotoVector>>,
}

/// The Apery set of the multiplicity in both of its orderings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyTable {
    /// `w_0 < w_1 < ... < w_{e-1}`.
    pub w: Vec<i64>,
    /// `v[n]` is the member congruent to `n` modulo `e`.
    pub v: Vec<i64>,
    /// `hat[i]` in `1..=e` with `w_i = v[hat[i] mod e]`.
    pub hat: Vec<i64>,
}

impl AperyTable {
    pub fn multiplicity(&self) -> i64 {
        self.w.len() as i64
    }

    /// `v_n` with the subscript read modulo `e`.
    pub fn v_at(&self, n: i64) -> i64 {
        self.v[n.rem_euclid(self.multiplicity()) as usize]
    }

    /// `i-hat` as an integer in `1..=e`.
    pub fn hat_of(&self, i: usize) -> i64 {
        self.hat[i]
    }

    /// Position in the `w` ordering of an Apery element, if it is one.
    pub fn index_of(&self, w: i64) -> Option<usize> {
        self.w.binary_search(&w).ok()
    }
}

/// The two partial orders on `S` used to pick out extremal Apery elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `u <= u'` iff `u' - u` is in `S`.
    Plain,
    /// Additionally `ord(u) + ord(u' - u) = ord(u')`.
    M,
}

/// Minimal and maximal elements of `Ap(S) \ {0}` under one relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalApery {
    pub min: Vec<i64>,
    pub max: Vec<i64>,
}

/// Parse the `"a1,a2,..."` text format; whitespace is ignored.
pub fn parse_generators(text: &str) -> Result<Vec<i64>> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    cleaned
        .split(',')
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))
        })
        .collect()
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

/// Least element of `<gens>` in each residue class modulo `modulus`
/// (`None` for unreachable classes), by Dijkstra over residues.
fn residue_minima(gens: &[i64], modulus: i64) -> Vec<Option<i64>> {
    let m = modulus as usize;
    let mut dist: Vec<Option<i64>> = vec![None; m];
    dist[0] = Some(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if dist[r] != Some(d) {
            continue;
        }
        for &g in gens {
            let nd = d + g;
            let nr = (nd % modulus) as usize;
            if dist[nr].is_none_or(|old| nd < old) {
                dist[nr] = Some(nd);
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

impl NumericalSemigroup {
    /// Build `<gens>`, reducing to the minimal generating set.
    ///
    /// `N0` (for instance `[1]`) is accepted; use
    /// [`NumericalSemigroup::with_options`] with `proper: true` to reject it.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        Self::with_options(gens, SemigroupOptions::default())
    }

    pub fn with_options(gens: &[i64], opts: SemigroupOptions) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for &g in gens {
            if g < 1 {
                return Err(Error::NonPositiveGenerator(g));
            }
            if g > MAX_GENERATOR {
                return Err(Error::GeneratorTooLarge(g));
            }
        }
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::NotNumerical(d));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let a1 = sorted[0];
        if a1 > opts.table_limit {
            return Err(Error::TableLimit {
                needed: a1,
                limit: opts.table_limit,
            });
        }

        let minima = residue_minima(&sorted, a1);
        let apery_v: Vec<i64> = minima
            .iter()
            .map(|m| m.expect("gcd 1 reaches every residue"))
            .collect();

        // g is redundant iff it lies in the semigroup spanned by the others.
        let mut generators = vec![a1];
        for (idx, &g) in sorted.iter().enumerate().skip(1) {
            let others: Vec<i64> = sorted
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != idx)
                .map(|(_, &x)| x)
                .collect();
            let reach = residue_minima(&others, a1);
            let redundant = matches!(reach[(g % a1) as usize], Some(m) if m <= g);
            if !redundant {
                generators.push(g);
            }
        }

        let frobenius = apery_v.iter().max().copied().unwrap() - a1;
        let nu = generators.len() as i64;
        if opts.proper && nu < 2 {
            return Err(Error::RequiresProperSemigroup);
        }
        let a_nu = *generators.last().unwrap();
        let bound = (frobenius + 2 * a1).max((2 * a1 - 2) * a_nu + a1);
        if bound > opts.table_limit {
            return Err(Error::TableLimit {
                needed: bound,
                limit: opts.table_limit,
            });
        }

        let member = |n: i64| n >= apery_v[(n % a1) as usize];
        let membership: Vec<bool> = (0..=bound).map(member).collect();
        let gaps: Vec<i64> = (0..=frobenius.max(0)).filter(|&n| !member(n)).collect();
        let orders = OrderTable::new(&generators, bound);

        let s = NumericalSemigroup {
            generators,
            frobenius,
            apery_v,
            membership,
            gaps,
            orders,
            goto_cache: OnceLock::new(),
        };
        debug_assert!(s.check_structure().is_ok());
        Ok(s)
    }

    /// Like [`NumericalSemigroup::from_generators`] but rejects `N0`.
    pub fn proper(gens: &[i64]) -> Result<Self> {
        Self::with_options(
            gens,
            SemigroupOptions {
                proper: true,
                ..SemigroupOptions::default()
            },
        )
    }

    fn check_structure(&self) -> Result<()> {
        let f = self.frobenius;
        ensure(!self.contains(f), || format!("frobenius {f} is a member"))?;
        ensure(self.gaps.last().copied().unwrap_or(-1) == f || f < 0, || {
            "largest gap differs from frobenius".into()
        })?;
        ensure(
            self.generators.len() as i64 <= self.multiplicity(),
            || "embedding dimension exceeds multiplicity".into(),
        )
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn embedding_dim(&self) -> usize {
        self.generators.len()
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// The construction-time membership table over `0..=B`.
    pub fn membership_table(&self) -> &[bool] {
        &self.membership
    }

    /// `a_nu`, the largest minimal generator.
    pub fn largest_generator(&self) -> i64 {
        *self.generators.last().unwrap()
    }

    /// True unless this is `N0`.
    pub fn is_proper(&self) -> bool {
        self.generators.len() >= 2
    }

    pub(crate) fn require_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::RequiresProperSemigroup)
        }
    }

    #[inline]
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        if n > self.frobenius {
            return true;
        }
        match self.membership.get(n as usize) {
            Some(&b) => b,
            None => n >= self.apery_v[(n % self.multiplicity()) as usize],
        }
    }

    /// Elements of `S` in `lo..=hi`, ascending.
    pub fn elements_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo.max(0)..=hi).filter(move |&n| self.contains(n))
    }

    /// `Ap(S; n) = { w in S | w - n not in S }`, ascending.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        if n < 1 {
            return Err(Error::InvalidArgument(format!(
                "Apery set needs a positive integer, got {n}"
            )));
        }
        let top = self.frobenius + n;
        Ok(self
            .elements_in(0, top)
            .filter(|&w| !self.contains(w - n))
            .collect())
    }

    /// `Ap(S) = Ap(S; a1)` in the `w` ordering.
    pub fn apery_w(&self) -> Vec<i64> {
        let mut w = self.apery_v.clone();
        w.sort_unstable();
        w
    }

    /// `Ap(S)` with `w`/`v` orderings and the hat bijection.
    pub fn apery_orderings(&self) -> AperyTable {
        let e = self.multiplicity();
        let w = self.apery_w();
        let hat = w
            .iter()
            .map(|&wi| {
                let ceil = (wi + e - 1) / e;
                wi - (ceil - 1) * e
            })
            .collect();
        AperyTable {
            w,
            v: self.apery_v.clone(),
            hat,
        }
    }

    /// `T = { z not in S | z + u in S for all 0 != u in S }`, computed from
    /// the definition and checked against `maxAp(S) - a1`.
    pub fn t_set(&self) -> Result<Vec<i64>> {
        self.require_proper()?;
        let f = self.frobenius;
        let t: Vec<i64> = self
            .gaps
            .iter()
            .copied()
            .filter(|&z| self.elements_in(1, f - z).all(|u| self.contains(z + u)))
            .collect();
        let a1 = self.multiplicity();
        let from_max: Vec<i64> = self
            .extremal(Relation::Plain)
            .max
            .iter()
            .map(|w| w - a1)
            .collect();
        ensure(t == from_max, || {
            format!("T = {t:?} but maxAp - a1 = {from_max:?}")
        })?;
        Ok(t)
    }

    fn precedes(&self, rel: Relation, u: i64, u2: i64) -> bool {
        let s = u2 - u;
        if s <= 0 || !self.contains(s) {
            return false;
        }
        match rel {
            Relation::Plain => true,
            Relation::M => self.ord(u) + self.ord(s) == self.ord(u2),
        }
    }

    fn extremal(&self, rel: Relation) -> ExtremalApery {
        let nonzero: Vec<i64> = self.apery_w().into_iter().filter(|&w| w != 0).collect();
        let min = nonzero
            .iter()
            .copied()
            .filter(|&u| !nonzero.iter().any(|&x| self.precedes(rel, x, u)))
            .collect();
        let max = nonzero
            .iter()
            .copied()
            .filter(|&u| !nonzero.iter().any(|&x| self.precedes(rel, u, x)))
            .collect();
        ExtremalApery { min, max }
    }

    /// `minAp`/`maxAp` under the chosen relation.
    ///
    /// Checks that the plain minima are `{a2, ..., a_nu}`, that both relations
    /// have the same minima and that `maxAp` is contained in `maxAp_M`.
    pub fn max_min_apery(&self, relation: Relation) -> Result<ExtremalApery> {
        self.require_proper()?;
        let plain = self.extremal(Relation::Plain);
        let m = self.extremal(Relation::M);
        ensure(plain.min == self.generators[1..], || {
            format!("minAp {:?} differs from a2..a_nu", plain.min)
        })?;
        ensure(plain.min == m.min, || {
            format!("minAp {:?} != minAp_M {:?}", plain.min, m.min)
        })?;
        ensure(plain.max.iter().all(|x| m.max.contains(x)), || {
            format!("maxAp {:?} not inside maxAp_M {:?}", plain.max, m.max)
        })?;
        Ok(match relation {
            Relation::Plain => plain,
            Relation::M => m,
        })
    }

    /// `"<a1,a2,...>"`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        format!("<{}>", parts.join(","))
    }

    /// Comma-separated generator list (the CLI input format).
    pub fn generator_list(&self) -> String {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        parts.join(",")
    }
}

impl Clone for NumericalSemigroup {
    fn clone(&self) -> Self {
        NumericalSemigroup {
            generators: self.generators.clone(),
            frobenius: self.frobenius,
            apery_v: self.apery_v.clone(),
            membership: self.membership.clone(),
            gaps: self.gaps.clone(),
            orders: OrderTable::new(&self.generators, self.orders.bound()),
            goto_cache: OnceLock::new(),
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericalSemigroup")
            .field("generators", &self.generators)
            .field("frobenius", &self.frobenius)
            .finish()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NumericalSemigroup::from_generators(&parse_generators(s)?)
    }
}
