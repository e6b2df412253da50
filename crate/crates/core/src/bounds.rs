//! Published exclusion limits and curve classification against them.
//!
//! Exclusion data is external to this crate: files are digitized from the
//! experiments that published them and supplied by the user. The file format
//! is plain UTF-8 text with `#`-prefixed metadata lines followed by two
//! numeric columns (abscissa, upper limit on the coupling), whitespace- or
//! comma-delimited:
//!
//! ```text
//! # name: torsion-balance 2020
//! # source: doi:...
//! # abscissa: range_m
//! # coupling: alpha_g
//! 1e-5  1e3
//! 1e-4  1e1
//! ```
//!
//! Limits are interpreted as "couplings at or above the line are excluded",
//! matching the shaded-above convention of published constraint plots.
//! Interpolation between samples is log-log linear and never extrapolates.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scan::ConstraintCurve;

/// What quantity runs along the abscissa.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AbscissaKind {
    RangeM,
    MassEv,
}

impl AbscissaKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            AbscissaKind::RangeM => "range_m",
            AbscissaKind::MassEv => "mass_eV",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "range_m" => Some(AbscissaKind::RangeM),
            "mass_eV" => Some(AbscissaKind::MassEv),
            _ => None,
        }
    }
}

impl fmt::Display for AbscissaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which coupling the limit constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CouplingKind {
    AlphaJM,
    AlphaG,
    GS,
    GP,
}

impl CouplingKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CouplingKind::AlphaJM => "alpha_J_m",
            CouplingKind::AlphaG => "alpha_g",
            CouplingKind::GS => "g_S",
            CouplingKind::GP => "g_P",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "alpha_J_m" => Some(CouplingKind::AlphaJM),
            "alpha_g" => Some(CouplingKind::AlphaG),
            "g_S" => Some(CouplingKind::GS),
            "g_P" => Some(CouplingKind::GP),
            _ => None,
        }
    }
}

impl fmt::Display for CouplingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One published exclusion curve: ordered (abscissa, upper limit) samples.
#[derive(Debug, Clone, PartialEq)]
pub struct ExclusionRegion {
    pub name: String,
    pub source: String,
    pub abscissa_kind: AbscissaKind,
    pub coupling_kind: CouplingKind,
    samples: Vec<(f64, f64)>,
}

impl ExclusionRegion {
    pub fn from_samples(
        name: impl Into<String>,
        source: impl Into<String>,
        abscissa_kind: AbscissaKind,
        coupling_kind: CouplingKind,
        samples: Vec<(f64, f64)>,
    ) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::domain("exclusion region needs at least one sample"));
        }
        for (i, &(x, y)) in samples.iter().enumerate() {
            if !(x > 0.0) || !x.is_finite() || !(y > 0.0) || !y.is_finite() {
                return Err(Error::domain(format!(
                    "exclusion sample {i} must be positive and finite, got ({x}, {y})"
                )));
            }
            if i > 0 && samples[i - 1].0 >= x {
                return Err(Error::domain(format!(
                    "exclusion abscissa must be strictly increasing, sample {i} is not"
                )));
            }
        }
        Ok(ExclusionRegion {
            name: name.into(),
            source: source.into(),
            abscissa_kind,
            coupling_kind,
            samples,
        })
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    /// Upper limit at `x` by log-log linear interpolation; `None` outside
    /// the region's support (no extrapolation).
    pub fn limit_at(&self, x: f64) -> Option<f64> {
        let first = self.samples.first()?.0;
        let last = self.samples.last()?.0;
        if !(x >= first && x <= last) {
            return None;
        }
        let idx = self.samples.partition_point(|&(sx, _)| sx < x);
        if idx < self.samples.len() && self.samples[idx].0 == x {
            return Some(self.samples[idx].1);
        }
        let (x0, y0) = self.samples[idx - 1];
        let (x1, y1) = self.samples[idx];
        let t = (x.ln() - x0.ln()) / (x1.ln() - x0.ln());
        Some((y0.ln() + t * (y1.ln() - y0.ln())).exp())
    }
}

/// Loads an exclusion region from a delimited text file. Parse problems
/// report 1-based line numbers.
pub fn load_exclusion(path: &Path) -> Result<ExclusionRegion> {
    let display = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: display.clone(),
        message: e.to_string(),
    })?;

    let mut name = String::new();
    let mut source = String::new();
    let mut abscissa_kind = None;
    let mut coupling_kind = None;
    let mut samples: Vec<(f64, f64)> = Vec::new();

    let parse_err = |line: usize, message: String| Error::Parse {
        path: display.clone(),
        line,
        message,
    };

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(meta) = line.strip_prefix('#') {
            let meta = meta.trim();
            if let Some((key, value)) = meta.split_once(':') {
                let value = value.trim();
                match key.trim() {
                    "name" => name = value.to_string(),
                    "source" => source = value.to_string(),
                    "abscissa" => {
                        abscissa_kind = Some(AbscissaKind::parse(value).ok_or_else(|| {
                            parse_err(
                                lineno,
                                format!("unknown abscissa kind {value:?}, expected range_m or mass_eV"),
                            )
                        })?)
                    }
                    "coupling" => {
                        coupling_kind = Some(CouplingKind::parse(value).ok_or_else(|| {
                            parse_err(
                                lineno,
                                format!(
                                    "unknown coupling kind {value:?}, expected alpha_J_m, alpha_g, g_S or g_P"
                                ),
                            )
                        })?)
                    }
                    _ => {} // unrecognized metadata is a comment
                }
            }
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|f| !f.is_empty())
            .collect();
        if fields.len() != 2 {
            return Err(parse_err(
                lineno,
                format!("expected two numeric columns, found {}", fields.len()),
            ));
        }
        let x: f64 = fields[0]
            .parse()
            .map_err(|_| parse_err(lineno, format!("bad abscissa value {:?}", fields[0])))?;
        let y: f64 = fields[1]
            .parse()
            .map_err(|_| parse_err(lineno, format!("bad limit value {:?}", fields[1])))?;
        if !(x > 0.0) || !x.is_finite() {
            return Err(parse_err(lineno, format!("abscissa must be positive, got {x}")));
        }
        if !(y > 0.0) || !y.is_finite() {
            return Err(parse_err(lineno, format!("limit must be positive, got {y}")));
        }
        if let Some(&(px, _)) = samples.last() {
            if px >= x {
                return Err(parse_err(
                    lineno,
                    format!("abscissa not strictly increasing: {x} after {px}"),
                ));
            }
        }
        samples.push((x, y));
    }

    if samples.is_empty() {
        return Err(parse_err(1, "no data rows found".to_string()));
    }
    let abscissa_kind = abscissa_kind
        .ok_or_else(|| parse_err(1, "missing `# abscissa:` metadata line".to_string()))?;
    let coupling_kind = coupling_kind
        .ok_or_else(|| parse_err(1, "missing `# coupling:` metadata line".to_string()))?;

    ExclusionRegion::from_samples(name, source, abscissa_kind, coupling_kind, samples)
}

/// Verdict for one curve sample against one region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Excluded,
    Allowed,
    OutsideRegionSupport,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Excluded => "excluded",
            Classification::Allowed => "allowed",
            Classification::OutsideRegionSupport => "outside_region_support",
        }
    }
}

/// Classifies raw (abscissa, coupling) points against a region. A sample is
/// excluded iff its coupling is at or above the interpolated limit (closed
/// boundary); samples without a coupling or outside the region's abscissa
/// support are `OutsideRegionSupport`.
pub fn classify_samples(
    points: &[(f64, Option<f64>)],
    abscissa_kind: AbscissaKind,
    coupling_kind: CouplingKind,
    region: &ExclusionRegion,
) -> Result<Vec<Classification>> {
    if abscissa_kind != region.abscissa_kind || coupling_kind != region.coupling_kind {
        return Err(Error::KindMismatch {
            curve_abscissa: abscissa_kind.to_string(),
            curve_coupling: coupling_kind.to_string(),
            region: region.name.clone(),
            region_abscissa: region.abscissa_kind.to_string(),
            region_coupling: region.coupling_kind.to_string(),
        });
    }
    Ok(points
        .iter()
        .map(|&(x, coupling)| match (coupling, region.limit_at(x)) {
            (Some(c), Some(limit)) => {
                if c >= limit {
                    Classification::Excluded
                } else {
                    Classification::Allowed
                }
            }
            _ => Classification::OutsideRegionSupport,
        })
        .collect())
}

/// [`classify_samples`] for a scan output.
pub fn classify_curve(
    curve: &ConstraintCurve,
    region: &ExclusionRegion,
) -> Result<Vec<Classification>> {
    let points: Vec<(f64, Option<f64>)> = curve
        .samples
        .iter()
        .map(|s| (s.abscissa, s.coupling))
        .collect();
    classify_samples(
        &points,
        curve.request.model.abscissa_kind(),
        curve.request.model.coupling_kind(),
        region,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::io::Write;

    fn demo_region() -> ExclusionRegion {
        ExclusionRegion::from_samples(
            "demo",
            "synthetic",
            AbscissaKind::RangeM,
            CouplingKind::AlphaG,
            vec![(1e-5, 1e3), (1e-4, 1e1)],
        )
        .unwrap()
    }

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn loads_two_line_file() {
        let f = write_temp(
            "# name: demo\n# source: synthetic\n# abscissa: range_m\n# coupling: alpha_g\n\
             1e-5 1e3\n1e-4, 1e1\n",
        );
        let region = load_exclusion(f.path()).unwrap();
        assert_eq!(region.samples().len(), 2);
        assert_eq!(region.name, "demo");
        assert_eq!(region.abscissa_kind, AbscissaKind::RangeM);
        assert_eq!(region.coupling_kind, CouplingKind::AlphaG);
    }

    #[test]
    fn empty_file_is_a_parse_error() {
        let f = write_temp("");
        match load_exclusion(f.path()) {
            Err(Error::Parse { message, .. }) => assert!(message.contains("no data rows")),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn unsorted_abscissa_names_the_line() {
        let f = write_temp(
            "# abscissa: range_m\n# coupling: g_S\n1e-4 1e1\n1e-5 1e3\n",
        );
        match load_exclusion(f.path()) {
            Err(Error::Parse { line, message, .. }) => {
                assert_eq!(line, 4);
                assert!(message.contains("strictly increasing"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn nonpositive_limit_names_the_line() {
        let f = write_temp("# abscissa: mass_eV\n# coupling: g_P\n1e-5 -2\n");
        match load_exclusion(f.path()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_number_names_the_line() {
        let f = write_temp("# abscissa: range_m\n# coupling: alpha_g\n1e-5 xyz\n");
        match load_exclusion(f.path()) {
            Err(Error::Parse { line, message, .. }) => {
                assert_eq!(line, 3);
                assert!(message.contains("xyz"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn missing_file_is_io_error() {
        assert!(matches!(
            load_exclusion(Path::new("/no/such/file.txt")),
            Err(Error::Io { .. })
        ));
    }

    #[test]
    fn interpolation_exact_at_nodes() {
        let r = demo_region();
        assert_eq!(r.limit_at(1e-5), Some(1e3));
        assert_eq!(r.limit_at(1e-4), Some(1e1));
    }

    #[test]
    fn interpolation_is_log_log() {
        // midpoint in log x lands at the geometric mean of the limits
        let r = demo_region();
        let x = (1e-5f64 * 1e-4f64).sqrt();
        assert_relative_eq!(r.limit_at(x).unwrap(), 1e2, max_relative = 1e-12);
    }

    #[test]
    fn no_extrapolation() {
        let r = demo_region();
        assert_eq!(r.limit_at(9e-6), None);
        assert_eq!(r.limit_at(2e-4), None);
    }

    #[test]
    fn classification_cases() {
        let r = demo_region();
        let points = vec![
            (3e-5, Some(1e-3)),  // far below the line
            (1e-5, Some(1e3)),   // exactly on it: closed boundary
            (3e-5, Some(1e6)),   // far above
            (5e-3, Some(1.0)),   // outside support
            (3e-5, None),        // inversion failed at this point
        ];
        let verdicts =
            classify_samples(&points, AbscissaKind::RangeM, CouplingKind::AlphaG, &r).unwrap();
        assert_eq!(
            verdicts,
            vec![
                Classification::Allowed,
                Classification::Excluded,
                Classification::Excluded,
                Classification::OutsideRegionSupport,
                Classification::OutsideRegionSupport,
            ]
        );
    }

    #[test]
    fn kind_mismatch_is_an_error() {
        let r = demo_region();
        let res = classify_samples(&[(3e-5, Some(1.0))], AbscissaKind::MassEv, CouplingKind::AlphaG, &r);
        assert!(matches!(res, Err(Error::KindMismatch { .. })));
        let res = classify_samples(&[(3e-5, Some(1.0))], AbscissaKind::RangeM, CouplingKind::GS, &r);
        assert!(matches!(res, Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn scaling_couplings_up_is_monotone() {
        let r = demo_region();
        let base: Vec<(f64, Option<f64>)> = (0..20)
            .map(|i| {
                let x = 1e-5 * 10f64.powf(i as f64 / 19.0);
                (x, Some(1e-1 * (i as f64 + 1.0)))
            })
            .collect();
        let scaled: Vec<(f64, Option<f64>)> = base
            .iter()
            .map(|&(x, c)| (x, c.map(|c| c * 1e6)))
            .collect();
        let v0 = classify_samples(&base, AbscissaKind::RangeM, CouplingKind::AlphaG, &r).unwrap();
        let v1 = classify_samples(&scaled, AbscissaKind::RangeM, CouplingKind::AlphaG, &r).unwrap();
        for (a, b) in v0.iter().zip(v1.iter()) {
            if *a == Classification::Excluded {
                assert_eq!(*b, Classification::Excluded);
            }
            if *a == Classification::OutsideRegionSupport {
                assert_eq!(*b, Classification::OutsideRegionSupport);
            }
        }
    }
}
