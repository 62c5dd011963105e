//! Log-log plots of sweep tables, as standalone SVG or plain text.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::sweep::SweepTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotFormat {
    Svg,
    Ascii,
}

impl PlotFormat {
    /// `.svg` selects SVG, anything else plain text.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("svg") => PlotFormat::Svg,
            _ => PlotFormat::Ascii,
        }
    }
}

/// A rendered plot plus notices about series that could not be drawn.
#[derive(Debug, Clone)]
pub struct Rendered {
    pub text: String,
    pub notices: Vec<String>,
}

struct Series {
    label: String,
    /// (log10 x, log10 y), positive finite points only.
    points: Vec<(f64, f64)>,
}

struct Prepared {
    series: Vec<Series>,
    notices: Vec<String>,
    x_label: &'static str,
}

fn prepare(table: &SweepTable) -> Result<Prepared> {
    if table.rows() < 2 {
        return Err(Error::Config(format!(
            "plot: need at least 2 sweep points, table has {}",
            table.rows()
        )));
    }
    let xs: Vec<f64> = table.values.iter().map(|&v| table.variable.from_si(v)).collect();
    if xs.iter().any(|&x| x <= 0.0) {
        return Err(Error::Config(
            "plot: log axes need a strictly positive sweep variable".into(),
        ));
    }
    let mut series = Vec::new();
    let mut notices = Vec::new();
    for (i, col) in table.columns.iter().enumerate() {
        let points: Vec<(f64, f64)> = xs
            .iter()
            .zip(table.series(i))
            .filter_map(|(&x, y)| match y {
                Some(y) if y > 0.0 && y.is_finite() => Some((x.log10(), y.log10())),
                _ => None,
            })
            .collect();
        if points.is_empty() {
            notices.push(format!("plot: series `{}` is empty or all zero, skipped", col.label));
        } else {
            series.push(Series {
                label: col.label.clone(),
                points,
            });
        }
    }
    if series.is_empty() {
        return Err(Error::Config("plot: no drawable series".into()));
    }
    Ok(Prepared {
        series,
        notices,
        x_label: table.variable.axis_label(),
    })
}

fn bounds(series: &[Series], pick: impl Fn(&(f64, f64)) -> f64) -> (f64, f64) {
    let (lo, hi) = series
        .iter()
        .flat_map(|s| s.points.iter().map(&pick))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if hi - lo < 1e-12 {
        (lo - 0.5, hi + 0.5)
    } else {
        (lo, hi)
    }
}

const COLORS: [&str; 6] = ["#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad", "#d35400", "#555555"];
const DASHES: [&str; 4] = ["", "2,3", "8,4", "8,3,2,3"];

pub fn render_svg(table: &SweepTable) -> Result<Rendered> {
    let p = prepare(table)?;
    let (x0, x1) = bounds(&p.series, |q| q.0);
    let (y0, y1) = bounds(&p.series, |q| q.1);
    let (x0, x1) = (x0.floor(), x1.ceil());
    let (y0, y1) = (y0.floor(), y1.ceil());

    let (w, h) = (760.0, 480.0);
    let (left, right, top, bottom) = (80.0, 560.0, 30.0, 410.0);
    let sx = |lx: f64| left + (lx - x0) / (x1 - x0) * (right - left);
    let sy = |ly: f64| bottom - (ly - y0) / (y1 - y0) * (bottom - top);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<rect x="{left}" y="{top}" width="{}" height="{}" fill="none" stroke="black"/>"#,
        right - left,
        bottom - top
    );
    for d in x0 as i32..=x1 as i32 {
        let x = sx(d as f64);
        let _ = writeln!(
            s,
            r##"<path d="M{x:.2},{top} V{bottom}" stroke="#dddddd"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">1e{d}</text>"##,
            bottom + 18.0
        );
    }
    for d in y0 as i32..=y1 as i32 {
        let y = sy(d as f64);
        let _ = writeln!(
            s,
            r##"<path d="M{left},{y:.2} H{right}" stroke="#dddddd"/><text x="{:.2}" y="{:.2}" text-anchor="end">1e{d}</text>"##,
            left - 6.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        (left + right) / 2.0,
        bottom + 44.0,
        p.x_label
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">heating rate (1/s)</text>"#,
        (top + bottom) / 2.0,
        (top + bottom) / 2.0
    );
    for (i, series) in p.series.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let dash = DASHES[i % DASHES.len()];
        let dash_attr = if dash.is_empty() {
            String::new()
        } else {
            format!(r#" stroke-dasharray="{dash}""#)
        };
        let mut d = String::new();
        for (k, (lx, ly)) in series.points.iter().enumerate() {
            let _ = write!(d, "{}{:.2},{:.2}", if k == 0 { "M" } else { " L" }, sx(*lx), sy(*ly));
        }
        let _ = writeln!(
            s,
            r#"<path d="{d}" fill="none" stroke="{color}" stroke-width="1.5"{dash_attr}/>"#
        );
        let ly = top + 10.0 + 20.0 * i as f64;
        let _ = writeln!(
            s,
            r#"<path d="M{:.2},{ly:.2} h30" stroke="{color}" stroke-width="1.5"{dash_attr}/><text x="{:.2}" y="{:.2}">{}</text>"#,
            right + 15.0,
            right + 50.0,
            ly + 4.0,
            series.label
        );
    }
    s.push_str("</svg>\n");
    Ok(Rendered {
        text: s,
        notices: p.notices,
    })
}

const MARKERS: [char; 6] = ['*', 'o', '+', 'x', '#', '@'];
const LABEL_WIDTH: usize = 10;

/// Character plot fitting in `width` columns (at least 40).
pub fn render_ascii(table: &SweepTable, width: usize) -> Result<Rendered> {
    let p = prepare(table)?;
    let width = width.max(40);
    let cols = width - LABEL_WIDTH - 1;
    let rows = 20;
    let (x0, x1) = bounds(&p.series, |q| q.0);
    let (y0, y1) = bounds(&p.series, |q| q.1);

    let mut grid = vec![vec![' '; cols]; rows];
    for (i, series) in p.series.iter().enumerate() {
        let m = MARKERS[i % MARKERS.len()];
        for (lx, ly) in &series.points {
            let c = ((lx - x0) / (x1 - x0) * (cols - 1) as f64).round() as usize;
            let r = ((y1 - ly) / (y1 - y0) * (rows - 1) as f64).round() as usize;
            grid[r.min(rows - 1)][c.min(cols - 1)] = m;
        }
    }

    let mut s = String::new();
    let _ = writeln!(s, "heating rate (1/s), log-log");
    for (r, line) in grid.iter().enumerate() {
        let label = if r == 0 || r == rows - 1 || r == rows / 2 {
            let ly = y1 - (y1 - y0) * r as f64 / (rows - 1) as f64;
            format!("{:>9.1e}", 10f64.powf(ly))
        } else {
            " ".repeat(LABEL_WIDTH - 1)
        };
        let body: String = line.iter().collect();
        let _ = writeln!(s, "{label} |{}", body.trim_end());
    }
    let _ = writeln!(s, "{} +{}", " ".repeat(LABEL_WIDTH - 1), "-".repeat(cols));
    let lo = format!("{:.1e}", 10f64.powf(x0));
    let hi = format!("{:.1e}", 10f64.powf(x1));
    let gap = cols.saturating_sub(lo.len() + hi.len());
    let _ = writeln!(s, "{}{lo}{}{hi}", " ".repeat(LABEL_WIDTH + 1), " ".repeat(gap));
    let _ = writeln!(s, "{}{}", " ".repeat(LABEL_WIDTH + 1), p.x_label);
    for (i, series) in p.series.iter().enumerate() {
        let _ = writeln!(s, "  {} {}", MARKERS[i % MARKERS.len()], series.label);
    }
    Ok(Rendered {
        text: s,
        notices: p.notices,
    })
}

/// Writes a plot file and returns notices about skipped series.
pub fn emit_plot(table: &SweepTable, path: impl AsRef<Path>, format: PlotFormat) -> Result<Vec<String>> {
    let rendered = match format {
        PlotFormat::Svg => render_svg(table)?,
        PlotFormat::Ascii => render_ascii(table, 80)?,
    };
    fs::write(path, rendered.text)?;
    Ok(rendered.notices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::materials::MaterialDb;
    use crate::rates::MechanismRegistry;
    use crate::scenario::Scenario;
    use crate::sweep::run_scenario;

    fn fig2() -> SweepTable {
        let s = Scenario::from_preset("fig2-ion-ag", &MaterialDb::builtin()).unwrap();
        run_scenario(&s, MechanismRegistry::builtin()).unwrap()
    }

    #[test]
    fn svg_has_one_path_per_series_and_labels() {
        let r = render_svg(&fig2()).unwrap();
        assert!(r.notices.is_empty());
        assert!(r.text.starts_with("<svg"));
        assert!(r.text.contains("trap distance z (um)"));
        assert!(r.text.contains("heating rate (1/s)"));
        for label in ["ion_surface", "ion_blackbody", "ion_endcap"] {
            assert!(r.text.contains(&format!(">{label}</text>")));
        }
        assert_eq!(r.text.matches("stroke-width=\"1.5\"").count(), 6);
    }

    #[test]
    fn svg_is_deterministic() {
        assert_eq!(render_svg(&fig2()).unwrap().text, render_svg(&fig2()).unwrap().text);
    }

    #[test]
    fn ascii_fits_80_columns() {
        let r = render_ascii(&fig2(), 80).unwrap();
        assert!(r.text.lines().all(|l| l.chars().count() <= 80), "{}", r.text);
        assert!(r.text.contains("* ion_surface"));
        assert!(r.text.contains('*'));
    }

    #[test]
    fn single_point_rejected() {
        let mut t = fig2();
        t.values.truncate(1);
        t.rates.truncate(1);
        t.warnings.truncate(1);
        assert!(render_svg(&t).is_err());
        assert!(render_ascii(&t, 80).is_err());
    }

    #[test]
    fn zero_series_skipped_with_notice() {
        let mut t = fig2();
        for row in &mut t.rates {
            row[1] = Some(0.0);
            row[2] = None;
        }
        let r = render_svg(&t).unwrap();
        assert_eq!(r.notices.len(), 2);
        assert!(r.notices[0].contains("ion_blackbody"));
        assert!(!r.text.contains(">ion_endcap<"));
    }

    #[test]
    fn format_from_extension() {
        assert_eq!(PlotFormat::from_path(Path::new("a.SVG")), PlotFormat::Svg);
        assert_eq!(PlotFormat::from_path(Path::new("a.txt")), PlotFormat::Ascii);
    }
}
