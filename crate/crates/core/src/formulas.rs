//! Closed-form Goto numbers for special families of semigroups.
//!
//! Each family has a formula for `g(u)` in terms of the generators or the
//! Apery set. Detection follows a fixed priority order; when several
//! families apply they must all agree with [`NumericalSemigroup::goto_number`].
//!
//! Subscripts on `v` are read modulo `e` and `i-hat` is the hat bijection of
//! [`AperyTable`](crate::AperyTable). Generators are 1-based in the docs:
//! `a_1 = e`, `a_2`, ..., `a_nu`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::floor_div;
use crate::semigroup::{AperyTable, NumericalSemigroup};

/// The cases of the classification of semigroups with `e <= 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ele4Case {
    /// `<2, a2>`.
    One,
    /// `<3, a2>`.
    Two,
    /// `<3, a2, a3>`.
    Three,
    /// `<4, a2>`.
    Four,
    /// Symmetric `<4, a2, a3>`.
    FiveA,
    /// Non-symmetric `<4, a2, a3>` other than `<4,5,7>`.
    FiveB,
    /// `<4,5,7>`.
    FiveC,
    /// `<4, a2, a3, a4>`.
    Six,
}

impl Ele4Case {
    pub fn id(self) -> &'static str {
        match self {
            Ele4Case::One => "1",
            Ele4Case::Two => "2",
            Ele4Case::Three => "3",
            Ele4Case::Four => "4",
            Ele4Case::FiveA => "5a",
            Ele4Case::FiveB => "5b",
            Ele4Case::FiveC => "5c",
            Ele4Case::Six => "6",
        }
    }
}

/// The cases of the classification of symmetric semigroups with `e = 5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ee5Case {
    /// `<5, a2>`.
    One,
    /// `<5, a2, a3>` other than `<5,6,9>`.
    Two,
    /// `<5,6,9>`.
    Three,
    /// `<5, a2, a3, a4>`.
    Four,
}

impl Ee5Case {
    pub fn id(self) -> &'static str {
        match self {
            Ee5Case::One => "1",
            Ee5Case::Two => "2",
            Ee5Case::Three => "3",
            Ee5Case::Four => "4",
        }
    }
}

/// A family with a closed formula for its Goto numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    TwoGenerators,
    /// Minimal generators `a1, a1 + d, ..., a1 + (nu - 1) d` with
    /// `q = (e - 2) / (nu - 1)` an integer.
    ArithmeticSeq { q: i64, d: i64 },
    /// `nu = e`.
    MaxEmbeddingDim,
    /// Symmetric with `nu = e - 1`.
    SymAlmostMaxEmbeddingDim,
    MultiplicityLE4(Ele4Case),
    SymMultiplicity5(Ee5Case),
    /// M-additive, symmetric and `tau = g(a1)`.
    MAdditiveSymmetricTauEqGa1,
    MSymmetric,
    General,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::TwoGenerators => f.write_str("two-generators"),
            FamilyTag::ArithmeticSeq { q, d } => write!(f, "arithmetic-sequence(q={q}, d={d})"),
            FamilyTag::MaxEmbeddingDim => f.write_str("max-embedding-dim"),
            FamilyTag::SymAlmostMaxEmbeddingDim => f.write_str("symmetric-almost-max-embedding-dim"),
            FamilyTag::MultiplicityLE4(c) => write!(f, "multiplicity-le-4(case {})", c.id()),
            FamilyTag::SymMultiplicity5(c) => write!(f, "symmetric-multiplicity-5(case {})", c.id()),
            FamilyTag::MAdditiveSymmetricTauEqGa1 => f.write_str("m-additive-symmetric-tau-eq-g(a1)"),
            FamilyTag::MSymmetric => f.write_str("m-symmetric"),
            FamilyTag::General => f.write_str("general"),
        }
    }
}

impl NumericalSemigroup {
    /// The common difference `d` when the minimal generators form an
    /// arithmetic progression starting at `a1`.
    pub fn arithmetic_difference(&self) -> Option<i64> {
        let gens = self.generators();
        if gens.len() < 2 {
            return None;
        }
        let d = gens[1] - gens[0];
        gens.windows(2).all(|p| p[1] - p[0] == d).then_some(d)
    }

    fn ele4_case(&self) -> Result<Option<Ele4Case>> {
        let gens = self.generators();
        Ok(match (gens[0], gens.len()) {
            (2, _) => Some(Ele4Case::One),
            (3, 2) => Some(Ele4Case::Two),
            (3, 3) => Some(Ele4Case::Three),
            (4, 2) => Some(Ele4Case::Four),
            (4, 3) if self.is_symmetric()? => Some(Ele4Case::FiveA),
            (4, 3) if gens == [4, 5, 7] => Some(Ele4Case::FiveC),
            (4, 3) => Some(Ele4Case::FiveB),
            (4, 4) => Some(Ele4Case::Six),
            _ => None,
        })
    }

    fn ee5_case(&self) -> Result<Option<Ee5Case>> {
        let gens = self.generators();
        if gens[0] != 5 || !self.is_symmetric()? {
            return Ok(None);
        }
        Ok(match gens.len() {
            2 => Some(Ee5Case::One),
            3 if gens == [5, 6, 9] => Some(Ee5Case::Three),
            3 => Some(Ee5Case::Two),
            4 => Some(Ee5Case::Four),
            _ => None,
        })
    }

    /// Every family whose hypotheses hold, in priority order; `[General]`
    /// when none does.
    pub fn applicable_families(&self) -> Result<Vec<FamilyTag>> {
        self.require_proper()?;
        let e = self.multiplicity();
        let nu = self.embedding_dim() as i64;
        let symmetric = self.is_symmetric()?;
        let mut tags = Vec::new();
        if nu == 2 {
            tags.push(FamilyTag::TwoGenerators);
        }
        if let Some(d) = self.arithmetic_difference() {
            if (e - 2) % (nu - 1) == 0 {
                tags.push(FamilyTag::ArithmeticSeq {
                    q: (e - 2) / (nu - 1),
                    d,
                });
            }
        }
        if nu == e {
            tags.push(FamilyTag::MaxEmbeddingDim);
        }
        if symmetric && nu == e - 1 {
            tags.push(FamilyTag::SymAlmostMaxEmbeddingDim);
        }
        if let Some(c) = self.ele4_case()? {
            tags.push(FamilyTag::MultiplicityLE4(c));
        }
        if let Some(c) = self.ee5_case()? {
            tags.push(FamilyTag::SymMultiplicity5(c));
        }
        if symmetric && self.is_m_additive()? {
            let gv = self.goto_vector()?;
            if gv.tau == self.goto_number(e)? {
                tags.push(FamilyTag::MAdditiveSymmetricTauEqGa1);
            }
            if self.purity()?.1 {
                tags.push(FamilyTag::MSymmetric);
            }
        }
        if tags.is_empty() {
            tags.push(FamilyTag::General);
        }
        Ok(tags)
    }

    /// The most specific applicable family.
    pub fn detect_family(&self) -> Result<FamilyTag> {
        Ok(self.applicable_families()?[0])
    }

    /// `g(u)` by the closed formula of the detected family; `None` for
    /// [`FamilyTag::General`].
    pub fn goto_closed_form(&self, u: i64) -> Result<Option<i64>> {
        let family = self.detect_family()?;
        self.closed_form_for(family, u)
    }

    /// `g(u)` by the formula of `family`, assuming its hypotheses hold.
    pub fn closed_form_for(&self, family: FamilyTag, u: i64) -> Result<Option<i64>> {
        self.require_proper()?;
        if u < 1 || !self.contains(u) {
            return Err(Error::NotAMember(u));
        }
        let gens = self.generators();
        let a = |i: usize| gens[i - 1];
        let a1 = a(1);
        let nu = gens.len();
        let fl = |x: i64| floor_div(x, a1);
        let table = self.apery_orderings();
        let value = match family {
            FamilyTag::General => return Ok(None),
            FamilyTag::TwoGenerators => {
                let k = u / a(2);
                if u % a(2) == 0 && (1..a1).contains(&k) {
                    a(2) + k - 2 - fl(k * a(2))
                } else {
                    a1 - 1
                }
            }
            FamilyTag::ArithmeticSeq { q, .. } => arithmetic(gens, q, u),
            FamilyTag::MaxEmbeddingDim => {
                if u == a(2) {
                    fl(table.v_at(-table.hat[1]))
                } else if u == a(nu) {
                    fl(a(2))
                } else if let Some(i) = (2..nu - 1).find(|&i| u == a(i + 1)) {
                    fl(min_v_before(&table, i))
                } else {
                    1
                }
            }
            FamilyTag::SymAlmostMaxEmbeddingDim => {
                let top = a(2) + a(nu);
                if u == a(2) {
                    let v = table.v_at(-table.hat[1]);
                    if v == top {
                        fl(top)
                    } else {
                        1 + fl(v)
                    }
                } else if let Some(i) = (2..nu).find(|&i| u == a(i + 1)) {
                    1 + fl(min_v_before(&table, i))
                } else if u == top {
                    1 + fl(a(2))
                } else {
                    2
                }
            }
            FamilyTag::MultiplicityLE4(case) => ele4(case, gens, u),
            FamilyTag::SymMultiplicity5(case) => ee5(case, gens, u),
            FamilyTag::MAdditiveSymmetricTauEqGa1 => {
                let e = table.multiplicity() as usize;
                let hat = &table.hat;
                match table.index_of(u) {
                    Some(i) if i >= 1 => (0..i)
                        .map(|j| {
                            self.ord(table.v_at(hat[e - 1] + hat[i] - hat[j]))
                                + fl(table.v_at(hat[j] - hat[i]))
                        })
                        .min()
                        .unwrap(),
                    _ => self.ord(table.w[e - 1]),
                }
            }
            FamilyTag::MSymmetric => {
                let e = table.multiplicity() as usize;
                let tau = self.ord(table.w[e - 1]);
                match table.index_of(u) {
                    Some(i) if i >= 1 => (0..i)
                        .map(|j| {
                            let v = table.v_at(table.hat[j] - table.hat[i]);
                            tau + fl(v) - self.ord(v)
                        })
                        .min()
                        .unwrap(),
                    _ => tau,
                }
            }
        };
        Ok(Some(value))
    }
}

/// `min { v_{j-hat - i-hat} | 0 <= j < i }`.
fn min_v_before(table: &AperyTable, i: usize) -> i64 {
    (0..i)
        .map(|j| table.v_at(table.hat[j] - table.hat[i]))
        .min()
        .unwrap()
}

/// Arithmetic sequences. Every element `a_n + k a_nu` with `2 <= n <= nu`
/// has at most one such form because `0 < a_nu - a_2 < a_nu`.
fn arithmetic(gens: &[i64], q: i64, u: i64) -> i64 {
    let a = |i: usize| gens[i - 1];
    let nu = gens.len();
    let a1 = a(1);
    let a_nu = a(nu);
    for n in 2..=nu {
        let rest = u - a(n);
        if rest < 0 || rest % a_nu != 0 {
            continue;
        }
        let k = rest / a_nu;
        if n == 2 && k <= q {
            return floor_div(a(2) + (q - k) * a_nu, a1) + k;
        }
        if n >= 3 && k < q {
            return floor_div(a(nu - n + 3) + (q - k - 1) * a_nu, a1) + k + 1;
        }
    }
    q + 1
}

fn ele4(case: Ele4Case, gens: &[i64], u: i64) -> i64 {
    let a = |i: usize| gens[i - 1];
    let e = a(1);
    let fl = |x: i64| floor_div(x, e);
    let even = |x: i64| x % 2 == 0;
    match case {
        Ele4Case::One => {
            if u == a(2) {
                fl(a(2))
            } else {
                1
            }
        }
        Ele4Case::Two => match u {
            _ if u == a(2) => a(2) - fl(a(2)) - 1,
            _ if u == 2 * a(2) => a(2) - fl(2 * a(2)),
            _ => 2,
        },
        Ele4Case::Three => match u {
            _ if u == a(2) => fl(a(3)),
            _ if u == a(3) => fl(a(2)),
            _ => 1,
        },
        Ele4Case::Four => match u {
            _ if u == a(2) => a(2) - fl(a(2)) - 1,
            _ if u == 2 * a(2) => a(2) - fl(2 * a(2)),
            _ if u == 3 * a(2) => a(2) - fl(3 * a(2)) + 1,
            _ => 3,
        },
        Ele4Case::FiveA => match u {
            _ if u == a(2) && even(a(2)) => 1 + fl(a(2)),
            _ if u == a(2) => fl(a(2) + a(3)),
            _ if u == a(3) => 1 + fl(a(3)),
            _ if u == a(2) + a(3) => 1 + fl(a(2)),
            _ => 2,
        },
        Ele4Case::FiveB => match u {
            _ if u == a(2) => fl(a(3)),
            _ if u == a(3) => 1 + fl(a(2)),
            _ if u == 2 * a(2) && 2 * a(2) < a(3) => fl(2 * a(2)),
            _ if u == 2 * a(2) && a(3) == a(2) + 2 => fl(a(3)),
            _ if u == 2 * a(2) => 1 + fl(a(2)),
            _ => 2,
        },
        Ele4Case::FiveC => match u {
            4 | 7 => 2,
            _ => 1,
        },
        Ele4Case::Six => match u {
            _ if u == a(2) && even(a(2)) => fl(a(2)),
            _ if u == a(2) && even(a(4)) => fl(a(3)),
            _ if u == a(2) => fl(a(4)),
            _ if u == a(3) && even(a(4)) => fl(a(2)),
            _ if u == a(3) => fl(a(3)),
            _ if u == a(4) => fl(a(2)),
            _ => 1,
        },
    }
}

fn ee5(case: Ee5Case, gens: &[i64], u: i64) -> i64 {
    let a = |i: usize| gens[i - 1];
    let fl = |x: i64| floor_div(x, 5);
    match case {
        Ee5Case::One => match (1..=4).find(|&k| u == k * a(2)) {
            Some(k) => a(2) - fl(k * a(2)) + k - 2,
            None => 4,
        },
        Ee5Case::Two => match u {
            _ if u == a(2) => 1 + fl(a(3)),
            _ if u == a(3) => 2 + fl(a(2)),
            _ if u == 2 * a(2) => 1 + fl(a(3)),
            _ if u == 3 * a(2) => 2 + fl(a(2)),
            _ => 3,
        },
        Ee5Case::Three => match u {
            5 | 9 | 14 => 3,
            _ => 2,
        },
        Ee5Case::Four => {
            let divides = (a(2) + a(3)) % 5 == 0;
            match u {
                _ if u == a(2) && divides => 1 + fl(a(3)),
                _ if u == a(2) => fl(2 * a(3)),
                _ if u == a(3) && divides => 1 + fl(a(2)),
                _ if u == a(3) => 1 + fl(a(4)),
                _ if u == a(4) => 1 + fl(a(3)),
                _ if u == 2 * a(3) => 1 + fl(a(2)),
                _ => 2,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn detection() {
        assert_eq!(sg(&[3, 4, 5]).detect_family().unwrap(), FamilyTag::MaxEmbeddingDim);
        assert_eq!(
            sg(&[5, 6, 9]).detect_family().unwrap(),
            FamilyTag::SymMultiplicity5(Ee5Case::Three)
        );
        assert_eq!(sg(&[2, 7]).detect_family().unwrap(), FamilyTag::TwoGenerators);
        assert_eq!(
            sg(&[4, 5, 7]).detect_family().unwrap(),
            FamilyTag::MultiplicityLE4(Ele4Case::FiveC)
        );
        assert_eq!(sg(&[7, 11, 20]).detect_family().unwrap(), FamilyTag::General);
    }

    #[test]
    fn two_generators_also_match_arithmetic() {
        let tags = sg(&[3, 5]).applicable_families().unwrap();
        assert_eq!(tags[0], FamilyTag::TwoGenerators);
        assert!(tags.contains(&FamilyTag::ArithmeticSeq { q: 1, d: 2 }));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(sg(&[5, 6, 9]).goto_closed_form(9).unwrap(), Some(3));
        assert_eq!(sg(&[4, 5, 7]).goto_closed_form(9).unwrap(), Some(1));
        let s = sg(&[3, 5]);
        assert_eq!(s.goto_closed_form(5).unwrap(), Some(3));
        assert_eq!(s.goto_closed_form(10).unwrap(), Some(2));
        assert_eq!(s.goto_number_oracle(5).unwrap(), 3);
        assert_eq!(s.goto_number_oracle(10).unwrap(), 2);
        assert_eq!(sg(&[7, 11, 20]).goto_closed_form(7).unwrap(), None);
        assert_eq!(s.goto_closed_form(4), Err(Error::NotAMember(4)));
    }

    #[test]
    fn every_applicable_family_agrees_on_samples() {
        let samples: [&[i64]; 10] = [
            &[3, 5],
            &[4, 5, 6],
            &[5, 6, 7, 8, 9],
            &[5, 7, 9],
            &[4, 6, 7, 9],
            &[5, 6, 9],
            &[5, 8, 12],
            &[10, 17, 35],
            &[4, 5, 11],
            &[5, 6, 13, 14],
        ];
        for gens in samples {
            let s = sg(gens);
            for tag in s.applicable_families().unwrap() {
                for u in s.elements_in(1, s.frobenius() + 2 * s.multiplicity() + 1) {
                    if let Some(v) = s.closed_form_for(tag, u).unwrap() {
                        assert_eq!(v, s.goto_number(u).unwrap(), "{s} {tag} u={u}");
                    }
                }
            }
        }
    }
}
