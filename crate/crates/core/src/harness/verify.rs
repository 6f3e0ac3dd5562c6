//! Running a property over an enumeration and collecting the report.

use serde::{Deserialize, Serialize};

use crate::classify::InvariantReport;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

use super::properties::{property, Outcome, Property};
use super::{map_semigroups, EnumSpec, Execution, Filter, Mode};

/// At most this many failing semigroups are reported in full.
pub const MAX_WITNESSES: usize = 10;

/// A failing semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    pub generators: Vec<i64>,
    pub message: String,
    pub report: Option<InvariantReport>,
}

/// Counts, witnesses and evidence of one verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub property: String,
    pub description: String,
    pub experiment: bool,
    /// `None` when the property runs on its own fixed corpus.
    pub spec: Option<EnumSpec>,
    pub checked: usize,
    pub passed: usize,
    pub skipped: usize,
    pub failed: usize,
    pub witnesses: Vec<Witness>,
    /// Failures that concern the corpus as a whole.
    pub corpus_failures: Vec<String>,
    pub evidence: Vec<String>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.corpus_failures.is_empty()
    }
}

/// Bounds given explicitly, for example on the command line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpecOverrides {
    pub genus_max: Option<usize>,
    pub multiplicity: Option<i64>,
    pub multiplicity_max: Option<i64>,
    pub frobenius_max: Option<i64>,
    pub filter: Option<Filter>,
}

impl SpecOverrides {
    fn has_bounds(&self) -> bool {
        self.genus_max.is_some()
            || self.multiplicity.is_some()
            || self.multiplicity_max.is_some()
            || self.frobenius_max.is_some()
    }

    /// A spec from these bounds alone: a genus bound selects `ByGenus`,
    /// otherwise the multiplicity mode is used. `frobenius_bound` fills a
    /// missing `frobenius_max` from the multiplicity cap.
    pub fn to_spec(
        &self,
        default_filter: Filter,
        frobenius_bound: Option<fn(i64) -> i64>,
    ) -> Result<EnumSpec> {
        let mode = if self.genus_max.is_some() {
            Mode::ByGenus
        } else {
            Mode::ByMultiplicityAndFrobenius
        };
        let mut spec = EnumSpec {
            mode,
            genus_max: self.genus_max,
            multiplicity: self.multiplicity,
            multiplicity_max: self.multiplicity_max,
            frobenius_max: self.frobenius_max,
            filter: self.filter.clone().unwrap_or(default_filter),
        };
        if let (Mode::ByMultiplicityAndFrobenius, None, Some(bound), Some(cap)) =
            (mode, spec.frobenius_max, frobenius_bound, spec.multiplicity_cap())
        {
            spec.frobenius_max = Some(bound(cap));
        }
        spec.validate()?;
        Ok(spec)
    }
}

impl Property {
    /// The spec this property runs on.
    ///
    /// Without explicit bounds this is the default spec. Explicit bounds
    /// replace all default bounds (see [`SpecOverrides::to_spec`]). The
    /// default filter is kept unless overridden.
    pub fn spec_with(&self, overrides: &SpecOverrides) -> Result<EnumSpec> {
        let default = (self.default_spec)();
        if overrides.has_bounds() {
            return overrides.to_spec(default.filter, self.frobenius_bound);
        }
        let filter = overrides.filter.clone().unwrap_or(default.filter.clone());
        let spec = EnumSpec { filter, ..default };
        spec.validate()?;
        Ok(spec)
    }
}

/// A Frobenius bound for the symmetric semigroups with `e <= m <= 6` and
/// `tau < g(a1)`.
///
/// Such a semigroup is not M-pure (M-pure forces `delta = g(a1)`, which
/// collapses the chain), so `3 <= nu <= e - 2` and `g(a1) <= e - 2`. Being
/// symmetric it is pure, and `floor(a2 / e) >= g(a1) - 1` would force
/// `tau = g(a1)`; hence `a2 <= e (e - 3) - 1`. When `gcd(e, a2) = 1` the
/// multiples `k a2`, `k < e`, meet every residue class, so
/// `f + e = max Ap(S) <= (e - 1) a2`. For `e = 6` and `gcd(6, a2) > 1` the
/// symmetric Apery set is `{0, a2, a3, a4, 2 a2, 3 a2}`, so `f + 6 <= 3 a2`.
/// Nothing qualifies for `e <= 4`.
pub fn except_frobenius_bound(m: i64) -> i64 {
    (5..=m.max(5))
        .map(|e| (e - 1) * (e * (e - 3) - 1) - e)
        .max()
        .unwrap()
}

/// The verdict on one semigroup, for tabulation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Row {
    pub generators: Vec<i64>,
    /// One of `pass`, `skip`, `note`, `fail`.
    pub outcome: String,
    pub detail: String,
}

fn judge(p: &Property, s: &NumericalSemigroup) -> Row {
    let (outcome, detail) = if !s.is_proper() {
        ("skip", String::new())
    } else {
        match (p.check)(s) {
            Ok(Outcome::Pass) => ("pass", String::new()),
            Ok(Outcome::Skip) => ("skip", String::new()),
            Ok(Outcome::Note(n)) => ("note", n),
            Ok(Outcome::Fail(msg)) => ("fail", msg),
            Err(e) => ("fail", e.to_string()),
        }
    };
    Row {
        generators: s.generators().to_vec(),
        outcome: outcome.to_string(),
        detail,
    }
}

/// Run `id` over `spec` (or the property's default spec) and collect a report.
pub fn verify(id: &str, spec: Option<EnumSpec>, exec: Execution) -> Result<VerificationReport> {
    Ok(verify_rows(id, spec, exec)?.0)
}

/// [`verify`], also returning the verdict on every checked semigroup in
/// enumeration order.
pub fn verify_rows(
    id: &str,
    spec: Option<EnumSpec>,
    exec: Execution,
) -> Result<(VerificationReport, Vec<Row>)> {
    let p = property(id).ok_or_else(|| Error::UnknownProperty(id.to_string()))?;
    let (spec, rows) = match p.corpus {
        Some(corpus) => {
            let mut rows = Vec::new();
            for gens in corpus() {
                rows.push(judge(p, &NumericalSemigroup::from_generators(&gens)?));
            }
            (None, rows)
        }
        None => {
            let spec = match spec {
                Some(spec) => spec,
                None => (p.default_spec)(),
            };
            let rows = map_semigroups(&spec, exec, |s| judge(p, &s))?;
            (Some(spec), rows)
        }
    };

    let mut report = VerificationReport {
        property: p.id.to_string(),
        description: p.description.to_string(),
        experiment: p.experiment,
        spec: spec.clone(),
        checked: rows.len(),
        passed: 0,
        skipped: 0,
        failed: 0,
        witnesses: Vec::new(),
        corpus_failures: Vec::new(),
        evidence: Vec::new(),
    };
    let mut notes = Vec::new();
    for row in &rows {
        match row.outcome.as_str() {
            "pass" => report.passed += 1,
            "skip" => report.skipped += 1,
            "note" => {
                report.passed += 1;
                notes.push(row.detail.clone());
            }
            _ => {
                report.failed += 1;
                if report.witnesses.len() < MAX_WITNESSES {
                    let s = NumericalSemigroup::from_generators(&row.generators)?;
                    report.witnesses.push(Witness {
                        generators: row.generators.clone(),
                        message: row.detail.clone(),
                        report: s.invariant_report().ok(),
                    });
                }
            }
        }
    }
    match p.conclude {
        Some(conclude) => {
            let c = conclude(spec.as_ref(), &notes)?;
            report.corpus_failures = c.failures;
            report.evidence = c.evidence;
        }
        None => report.evidence = notes,
    }
    if p.experiment {
        report.evidence.extend(report.witnesses.drain(..).map(|w| w.message));
        report.failed = 0;
        report.corpus_failures.clear();
    }
    Ok((report, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_bound_values() {
        assert_eq!(except_frobenius_bound(5), 31);
        assert_eq!(except_frobenius_bound(6), 79);
        assert_eq!(except_frobenius_bound(3), 31);
    }

    #[test]
    fn unknown_property() {
        assert_eq!(
            verify("nope", None, Execution::Sequential).unwrap_err(),
            Error::UnknownProperty("nope".into())
        );
    }

    #[test]
    fn chain_on_small_genus() {
        let r = verify("chain_star", Some(EnumSpec::by_genus(6)), Execution::Parallel).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.checked, 1 + 1 + 2 + 4 + 7 + 12 + 23);
        assert_eq!(r.skipped, 1);
    }

    #[test]
    fn fixed_corpus_ignores_spec() {
        let r = verify("examples_8exs", Some(EnumSpec::by_genus(1)), Execution::Sequential).unwrap();
        assert!(r.ok());
        assert_eq!((r.checked, r.passed, r.spec), (8, 8, None));
    }

    #[test]
    fn spec_overrides() {
        let p = property("theorem_except").unwrap();
        let spec = p.spec_with(&SpecOverrides::default()).unwrap();
        assert_eq!(spec.frobenius_max, Some(79));
        let o = SpecOverrides {
            multiplicity_max: Some(5),
            ..Default::default()
        };
        let spec = p.spec_with(&o).unwrap();
        assert_eq!((spec.frobenius_max, spec.filter), (Some(31), Filter::Symmetric));
        let o = SpecOverrides {
            genus_max: Some(5),
            ..Default::default()
        };
        assert_eq!(p.spec_with(&o).unwrap().mode, Mode::ByGenus);
    }

    #[test]
    fn missing_exception_is_reported() {
        // Bounds admit <5,6,9>; it must be found by the scan.
        let r = verify("theorem_except", Some(EnumSpec::by_multiplicity(5, 19).with_filter(Filter::Symmetric)), Execution::Sequential).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.evidence, vec!["exceptions with tau < g(a1): <5,6,9>".to_string()]);
    }
}
