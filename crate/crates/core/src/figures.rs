//! Named comparison figures emitted as CSV.
//!
//! Each figure id carries a fixed column set (an exact curve next to one or
//! more approximated ones) and a default grid chosen to cover the visible
//! features; rendering is left to an external plotter. Output is
//! byte-deterministic: fixed 17-significant-digit scientific notation,
//! `.` decimal separator, `\n` line endings.

use std::fmt;
use std::str::FromStr;

use crate::amplitude::Amplitude;
use crate::error::Result;
use crate::families::Family;
use crate::grid::{eval_grid, Curve, GridSpec};
use crate::operator::pade_appell;
use crate::pade::pade_of_amplitude;
use crate::rational::Rational;
use crate::umbral::bessel_pade_series;

/// Series length used for the Bessel comparison curves.
pub const BESSEL_FIGURE_TERMS: usize = 25;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FigureId {
    F1a,
    F1b,
    F2a,
    F2b,
    F2c,
    F2d,
    F3a,
    F3b,
    F3c,
    F3d,
    F3e,
    F3f,
    F4a,
    F4b,
    F5a,
    F5b,
}

impl FigureId {
    pub const ALL: [FigureId; 16] = [
        FigureId::F1a,
        FigureId::F1b,
        FigureId::F2a,
        FigureId::F2b,
        FigureId::F2c,
        FigureId::F2d,
        FigureId::F3a,
        FigureId::F3b,
        FigureId::F3c,
        FigureId::F3d,
        FigureId::F3e,
        FigureId::F3f,
        FigureId::F4a,
        FigureId::F4b,
        FigureId::F5a,
        FigureId::F5b,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FigureId::F1a => "1a",
            FigureId::F1b => "1b",
            FigureId::F2a => "2a",
            FigureId::F2b => "2b",
            FigureId::F2c => "2c",
            FigureId::F2d => "2d",
            FigureId::F3a => "3a",
            FigureId::F3b => "3b",
            FigureId::F3c => "3c",
            FigureId::F3d => "3d",
            FigureId::F3e => "3e",
            FigureId::F3f => "3f",
            FigureId::F4a => "4a",
            FigureId::F4b => "4b",
            FigureId::F5a => "5a",
            FigureId::F5b => "5b",
        }
    }

    /// Default abscissa range and resolution. The sources give no numeric
    /// axes, so these are this crate's choices, overridable by the caller.
    pub fn default_grid(&self) -> GridSpec {
        let (xmin, xmax, points) = match self {
            FigureId::F1a | FigureId::F1b => (0.0, 4.0, 201),
            FigureId::F2a | FigureId::F2b | FigureId::F2c | FigureId::F2d => (-3.0, 3.0, 241),
            FigureId::F3a | FigureId::F3b | FigureId::F3c | FigureId::F3d | FigureId::F3e
            | FigureId::F3f => (-2.0, 2.0, 201),
            FigureId::F4a | FigureId::F4b => (-4.0, 4.0, 321),
            FigureId::F5a | FigureId::F5b => (0.0, 8.0, 321),
        };
        GridSpec::new(xmin, xmax, points).expect("built-in grids are valid")
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigureId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        FigureId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown figure id `{s}`"))
    }
}

/// A figure's column set: labels paired with sampleable curves.
#[derive(Clone, Debug)]
pub struct FigureJob {
    id: FigureId,
    columns: Vec<(String, Curve)>,
}

impl FigureJob {
    pub fn id(&self) -> FigureId {
        self.id
    }

    pub fn columns(&self) -> &[(String, Curve)] {
        &self.columns
    }
}

fn amplitude_ratio(m: usize, n: usize) -> Curve {
    let value = pade_of_amplitude(&Amplitude::ExpNeg, m, n)
        .expect("exponential table has no defects")
        .into_value();
    Curve::Rational(value)
}

fn amplitude_truncation(k: usize) -> Curve {
    Curve::from_series(&Amplitude::ExpNeg.maclaurin(k))
}

fn family_pair(family: &Family, m: usize, n: usize, index: usize) -> Vec<(String, Curve)> {
    let exact = family.exact_polynomial(index).expect("supported family");
    let image = pade_appell(family, m, n, index)
        .expect("figure entries are solvable")
        .value()
        .clone();
    vec![
        ("exact".into(), Curve::Poly(exact)),
        (format!("pade_{m}_{n}"), Curve::Poly(image)),
    ]
}

fn bessel_columns(orders: &[usize]) -> Vec<(String, Curve)> {
    let mut columns = vec![("j0".into(), Curve::BesselJ0)];
    for &k in orders {
        columns.push((
            format!("pade_0_{k}"),
            Curve::from_series(&bessel_pade_series(k, BESSEL_FIGURE_TERMS)),
        ));
    }
    columns
}

/// Builds the fixed column set for a figure id.
pub fn figure_job(id: FigureId) -> FigureJob {
    let hermite = Family::Hermite1 { y: Rational::int(-1) };
    let columns = match id {
        FigureId::F1a => vec![
            ("exact".into(), Curve::ExpNeg),
            ("pade_0_2".into(), amplitude_ratio(0, 2)),
            ("pade_1_1".into(), amplitude_ratio(1, 1)),
            ("maclaurin_2".into(), amplitude_truncation(2)),
        ],
        FigureId::F1b => vec![
            ("exact".into(), Curve::ExpNeg),
            ("pade_0_3".into(), amplitude_ratio(0, 3)),
            ("maclaurin_3".into(), amplitude_truncation(3)),
        ],
        FigureId::F2a => family_pair(&hermite, 1, 1, 1),
        FigureId::F2b => family_pair(&hermite, 1, 1, 2),
        FigureId::F2c => family_pair(&hermite, 1, 1, 3),
        FigureId::F2d => family_pair(&hermite, 2, 1, 3),
        FigureId::F3a => family_pair(&Family::He, 1, 1, 2),
        FigureId::F3b => family_pair(&Family::He, 1, 1, 3),
        FigureId::F3c => family_pair(&Family::He, 1, 1, 4),
        FigureId::F3d => family_pair(&Family::He, 1, 1, 5),
        FigureId::F3e => family_pair(&Family::He, 1, 1, 6),
        FigureId::F3f => family_pair(&Family::He, 1, 1, 7),
        FigureId::F4a => family_pair(&Family::He, 3, 2, 11),
        FigureId::F4b => family_pair(&Family::He, 3, 2, 12),
        FigureId::F5a => bessel_columns(&[2, 3]),
        FigureId::F5b => bessel_columns(&[2, 4]),
    };
    FigureJob { id, columns }
}

/// Renders the job on a grid as CSV: header `x,<label>,…`, one row per point.
pub fn figure_emit(job: &FigureJob, g: &GridSpec) -> Result<String> {
    let mut sampled = Vec::with_capacity(job.columns.len());
    for (_, curve) in &job.columns {
        sampled.push(eval_grid(curve, g)?);
    }

    let mut out = String::from("x");
    for (label, _) in &job.columns {
        out.push(',');
        out.push_str(label);
    }
    out.push('\n');

    for i in 0..g.points() {
        out.push_str(&format!("{:.16e}", g.abscissa(i)));
        for column in &sampled {
            out.push_str(&format!(",{:.16e}", column[i].1));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Figure CSV on the given grid, or on the id's default when `g` is `None`.
pub fn figure_csv(id: FigureId, g: Option<&GridSpec>) -> Result<String> {
    let job = figure_job(id);
    match g {
        Some(grid) => figure_emit(&job, grid),
        None => figure_emit(&job, &id.default_grid()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::sup_error;

    fn rows(csv: &str) -> Vec<Vec<String>> {
        csv.lines()
            .map(|l| l.split(',').map(str::to_owned).collect())
            .collect()
    }

    fn column_values(csv: &str, idx: usize) -> Vec<f64> {
        rows(csv)[1..]
            .iter()
            .map(|r| r[idx].parse().unwrap())
            .collect()
    }

    #[test]
    fn ids_round_trip_through_their_names() {
        for id in FigureId::ALL {
            assert_eq!(id.name().parse::<FigureId>().unwrap(), id);
        }
        assert!("6a".parse::<FigureId>().is_err());
        assert!("".parse::<FigureId>().is_err());
    }

    #[test]
    fn exponential_comparison_has_expected_shape() {
        let g = GridSpec::new(0.0, 4.0, 5).unwrap();
        let csv = figure_csv(FigureId::F1a, Some(&g)).unwrap();
        let table = rows(&csv);
        assert_eq!(table.len(), 6);
        assert_eq!(table[0], ["x", "exact", "pade_0_2", "pade_1_1", "maclaurin_2"]);
        assert!(table.iter().all(|r| r.len() == 5));
        // Every curve passes through (0, 1).
        assert_eq!(table[1][0], "0.0000000000000000e0");
        for v in &table[1][1..] {
            assert_eq!(v, "1.0000000000000000e0");
        }
    }

    #[test]
    fn truncation_column_is_the_plain_maclaurin_polynomial() {
        let g = GridSpec::new(0.0, 4.0, 9).unwrap();
        let csv = figure_csv(FigureId::F1b, Some(&g)).unwrap();
        let xs: Vec<f64> = column_values(&csv, 0);
        let mac: Vec<f64> = column_values(&csv, 3);
        for (x, v) in xs.iter().zip(&mac) {
            let direct = 1.0 - x + x * x / 2.0 - x * x * x / 6.0;
            assert!((v - direct).abs() < 1e-12, "x = {x}");
        }
    }

    #[test]
    fn exact_images_coincide_column_for_column() {
        // [1|1]He₄ = He₄ and [3|2]He₁₁ = He₁₁, so the emitted columns are
        // byte-identical, not merely close.
        for id in [FigureId::F3c, FigureId::F4a] {
            let csv = figure_csv(id, None).unwrap();
            for row in &rows(&csv)[1..] {
                assert_eq!(row[1], row[2], "figure {id}");
            }
        }
    }

    #[test]
    fn emission_is_deterministic() {
        let a = figure_csv(FigureId::F4a, None).unwrap();
        let b = figure_csv(FigureId::F4a, None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn higher_bessel_order_tracks_j0_more_closely() {
        let g = GridSpec::new(0.0, 8.0, 161).unwrap();
        let csv = figure_csv(FigureId::F5a, Some(&g)).unwrap();
        let xs = column_values(&csv, 0);
        let j0 = column_values(&csv, 1);
        let p02 = column_values(&csv, 2);
        let p03 = column_values(&csv, 3);
        let pair = |vals: &[f64]| -> Vec<(f64, f64)> {
            xs.iter().copied().zip(vals.iter().copied()).collect()
        };
        let e02 = sup_error(&pair(&j0), &pair(&p02)).unwrap();
        let e03 = sup_error(&pair(&j0), &pair(&p03)).unwrap();
        assert!(e03 < e02, "sup errors: [0|3] {e03} vs [0|2] {e02}");
    }

    #[test]
    fn every_figure_emits_on_its_default_grid() {
        for id in FigureId::ALL {
            let csv = figure_csv(id, None).unwrap();
            let expected_rows = id.default_grid().points() + 1;
            assert_eq!(csv.lines().count(), expected_rows, "figure {id}");
            assert!(csv.ends_with('\n'));
        }
    }
}
