//! Exhaustive enumeration of numerical semigroups and batch verification of
//! properties over the enumerated corpus.

mod properties;
mod tree;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

pub use properties::{property, property_ids, Outcome, Property};
pub use tree::{enumerate_semigroups, map_semigroups, SemigroupIter};
pub use properties::Conclusion;
pub use verify::{
    except_frobenius_bound, verify, verify_rows, Row, SpecOverrides, VerificationReport, Witness,
    MAX_WITNESSES,
};

/// How the enumeration is bounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    ByGenus,
    ByMultiplicityAndFrobenius,
}

/// Which enumerated semigroups are kept.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    All,
    Symmetric,
    MPure,
    MAdditive,
    /// A named predicate from [`Filter::CUSTOM`].
    Custom(String),
}

impl Filter {
    /// Names accepted by [`Filter::Custom`].
    pub const CUSTOM: &'static [&'static str] = &[
        "proper",
        "nonsymmetric",
        "m_symmetric",
        "not_m_pure",
        "family",
        "general",
    ];

    /// Cheap part of the test, decided from genus and Frobenius number alone.
    pub(crate) fn precheck(&self, frobenius: i64, genus: usize, proper: bool) -> bool {
        let symmetric = frobenius % 2 == 1 && 2 * genus as i64 == frobenius + 1;
        match self {
            Filter::All => true,
            Filter::Symmetric => proper && symmetric,
            Filter::Custom(name) if name == "nonsymmetric" => proper && !symmetric,
            Filter::Custom(name) if name == "m_symmetric" => proper && symmetric,
            _ => proper,
        }
    }

    pub fn accepts(&self, s: &NumericalSemigroup) -> Result<bool> {
        if !self.precheck(s.frobenius(), s.genus(), s.is_proper()) {
            return Ok(false);
        }
        Ok(match self {
            Filter::All | Filter::Symmetric => true,
            Filter::MPure => s.purity()?.1,
            Filter::MAdditive => s.is_m_additive()?,
            Filter::Custom(name) => match name.as_str() {
                "proper" | "nonsymmetric" => true,
                "m_symmetric" => s.invariant_report()?.flags.m_symmetric,
                "not_m_pure" => !s.purity()?.1,
                "family" => s.detect_family()? != crate::FamilyTag::General,
                "general" => s.detect_family()? == crate::FamilyTag::General,
                _ => return Err(Error::InvalidSpec(format!("unknown filter {name:?}"))),
            },
        })
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Filter::All,
            "symmetric" => Filter::Symmetric,
            "m_pure" => Filter::MPure,
            "m_additive" => Filter::MAdditive,
            other if Filter::CUSTOM.contains(&other) => Filter::Custom(other.to_string()),
            other => return Err(Error::InvalidSpec(format!("unknown filter {other:?}"))),
        })
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::All => f.write_str("all"),
            Filter::Symmetric => f.write_str("symmetric"),
            Filter::MPure => f.write_str("m_pure"),
            Filter::MAdditive => f.write_str("m_additive"),
            Filter::Custom(name) => f.write_str(name),
        }
    }
}

/// Bounds and filter for an enumeration.
///
/// `ByGenus` needs `genus_max`; `ByMultiplicityAndFrobenius` needs
/// `frobenius_max` and one of `multiplicity` (exact) or `multiplicity_max`.
/// Any bound may be combined with the others.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumSpec {
    pub mode: Mode,
    pub genus_max: Option<usize>,
    pub multiplicity: Option<i64>,
    pub multiplicity_max: Option<i64>,
    pub frobenius_max: Option<i64>,
    pub filter: Filter,
}

impl EnumSpec {
    pub fn by_genus(genus_max: usize) -> Self {
        EnumSpec {
            mode: Mode::ByGenus,
            genus_max: Some(genus_max),
            multiplicity: None,
            multiplicity_max: None,
            frobenius_max: None,
            filter: Filter::All,
        }
    }

    pub fn by_multiplicity(multiplicity: i64, frobenius_max: i64) -> Self {
        EnumSpec {
            mode: Mode::ByMultiplicityAndFrobenius,
            genus_max: None,
            multiplicity: Some(multiplicity),
            multiplicity_max: None,
            frobenius_max: Some(frobenius_max),
            filter: Filter::All,
        }
    }

    pub fn with_filter(mut self, filter: Filter) -> Self {
        self.filter = filter;
        self
    }

    pub fn with_multiplicity_max(mut self, max: i64) -> Self {
        self.multiplicity_max = Some(max);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidSpec(msg.to_string()));
        match self.mode {
            Mode::ByGenus if self.genus_max.is_none() => return bad("by_genus needs genus_max"),
            Mode::ByMultiplicityAndFrobenius => {
                if self.frobenius_max.is_none() {
                    return bad("by_multiplicity_and_frobenius needs frobenius_max");
                }
                if self.multiplicity.is_none() && self.multiplicity_max.is_none() {
                    return bad("by_multiplicity_and_frobenius needs a multiplicity bound");
                }
            }
            _ => {}
        }
        for (name, v) in [
            ("multiplicity", self.multiplicity),
            ("multiplicity_max", self.multiplicity_max),
        ] {
            if matches!(v, Some(x) if x < 1) {
                return bad(&format!("{name} must be positive"));
            }
        }
        if matches!(self.frobenius_max, Some(x) if x < -1) {
            return bad("frobenius_max must be at least -1");
        }
        if let (Some(m), Some(max)) = (self.multiplicity, self.multiplicity_max) {
            if m > max {
                return bad("multiplicity exceeds multiplicity_max");
            }
        }
        if let Filter::Custom(name) = &self.filter {
            if !Filter::CUSTOM.contains(&name.as_str()) {
                return bad(&format!("unknown filter {name:?}"));
            }
        }
        Ok(())
    }

    /// Whether `s` lies inside the bounds and passes the filter.
    pub fn admits(&self, s: &NumericalSemigroup) -> Result<bool> {
        let e = s.multiplicity();
        let inside = self.genus_max.is_none_or(|g| s.genus() <= g)
            && self.multiplicity_cap().is_none_or(|m| e <= m)
            && self.multiplicity.is_none_or(|m| e == m)
            && self.frobenius_max.is_none_or(|f| s.frobenius() <= f);
        Ok(inside && self.filter.accepts(s)?)
    }

    /// Largest multiplicity any emitted semigroup may have.
    pub(crate) fn multiplicity_cap(&self) -> Option<i64> {
        match (self.multiplicity, self.multiplicity_max) {
            (Some(m), Some(max)) => Some(m.min(max)),
            (m, max) => m.or(max),
        }
    }
}

/// Whether enumeration and verification may use several threads.
///
/// `Parallel` falls back to sequential execution when the crate is built
/// without the `parallel` feature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}
