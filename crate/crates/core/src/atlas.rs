//! Interval decomposition of the degree axis `[2g − 2, 4g − 4]` and its
//! ASCII / SVG renderings.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::params::{GonalCurve, HypothesisError};
use crate::rank_two::{classify_b3, ClassifierReport, Family, Regularity, Status, UnknownFamily};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotation {
    pub d: i64,
    pub point: String,
    pub summary: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasRegion {
    pub d_min: i64,
    pub d_max: i64,
    pub status: Status,
    pub families: Vec<Family>,
    pub unknowns: Vec<UnknownFamily>,
    pub empties: Vec<String>,
    pub clauses: Vec<String>,
    pub annotations: Vec<Annotation>,
}

impl AtlasRegion {
    pub fn contains(&self, d: i64) -> bool {
        self.d_min <= d && d <= self.d_max
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atlas {
    pub g: i64,
    pub nu: i64,
    pub regions: Vec<AtlasRegion>,
}

impl Atlas {
    pub fn d_min(&self) -> i64 {
        2 * self.g - 2
    }

    pub fn d_max(&self) -> i64 {
        4 * self.g - 4
    }

    pub fn region_at(&self, d: i64) -> Option<&AtlasRegion> {
        self.regions.iter().find(|r| r.contains(d))
    }
}

/// The distinguished degrees marked on the diagrams, with their symbolic
/// names; only those inside `[2g − 2, 4g − 4]` are returned.
pub fn special_points(g: i64, nu: i64) -> Vec<(i64, &'static str)> {
    let mut pts = vec![
        (2 * g - 2, "2g-2"),
        (2 * g - 7 + 2 * nu, "2g-7+2nu"),
        (2 * g - 6 + 2 * nu, "2g-6+2nu"),
        (3 * g - 7, "3g-7"),
        ((10 * g - 18).div_euclid(3), "floor((10g-18)/3)"),
        (4 * g - 5 - 4 * nu, "4g-5-4nu"),
        (4 * g - 5 - 2 * nu, "4g-5-2nu"),
        (4 * g - 4 - 2 * nu, "4g-4-2nu"),
    ];
    pts.retain(|&(d, _)| 2 * g - 2 <= d && d <= 4 * g - 4);
    pts.sort_by_key(|&(d, _)| d);
    pts
}

/// Short description of a report, e.g. `2 regular + 1 superabundant`.
pub fn summarize(report: &ClassifierReport) -> String {
    match report.status {
        Status::NotApplicable => return "not applicable".into(),
        Status::AssertedEmpty => return format!("empty ({})", report.empties.join(", ")),
        _ => {}
    }
    let mut parts = Vec::new();
    let reg = report.count(Regularity::Regular);
    let sup = report.count(Regularity::Superabundant);
    if reg > 0 {
        parts.push(format!("{reg} regular"));
    }
    if sup > 0 {
        parts.push(format!("{sup} superabundant"));
    }
    if !report.unknowns.is_empty() {
        parts.push("?".into());
    }
    parts.join(" + ")
}

type RegionKey = (Status, Vec<Family>, Vec<UnknownFamily>, Vec<String>);

fn key(r: &ClassifierReport) -> RegionKey {
    let mut unknowns: Vec<_> = r.unknowns.iter().map(|u| u.family).collect();
    unknowns.sort();
    (r.status, r.families(), unknowns, r.empties.clone())
}

/// Sweep `d` over `[2g − 2, 4g − 4]` and merge consecutive degrees with the
/// same status, families, unknowns and emptiness clauses.
pub fn atlas(g: i64, nu: i64) -> Result<Atlas, HypothesisError> {
    GonalCurve::new(g, nu)?;
    let reports: Vec<ClassifierReport> = (2 * g - 2..=4 * g - 4)
        .into_par_iter()
        .map(|d| classify_b3(g, nu, d))
        .collect();
    let specials = special_points(g, nu);

    let mut regions: Vec<AtlasRegion> = Vec::new();
    let mut last_key: Option<RegionKey> = None;
    for rep in &reports {
        let k = key(rep);
        if last_key.as_ref() != Some(&k) {
            regions.push(AtlasRegion {
                d_min: rep.d,
                d_max: rep.d,
                status: k.0,
                families: k.1.clone(),
                unknowns: k.2.clone(),
                empties: k.3.clone(),
                clauses: Vec::new(),
                annotations: Vec::new(),
            });
            last_key = Some(k);
        }
        let region = regions.last_mut().expect("pushed above");
        region.d_max = rep.d;
        for c in rep.clause_ids() {
            if !region.clauses.iter().any(|x| x == c) {
                region.clauses.push(c.to_string());
            }
        }
        for &(d, point) in specials.iter().filter(|(d, _)| *d == rep.d) {
            region.annotations.push(Annotation {
                d,
                point: point.into(),
                summary: summarize(rep),
            });
        }
    }
    Ok(Atlas { g, nu, regions })
}

const PLOT_COLS: i64 = 80;

type RowMark<'a> = Box<dyn Fn(&ClassifierReport) -> char + 'a>;
const ROW_LABEL: usize = 7;

fn col_to_d(dmin: i64, span: i64, c: i64) -> i64 {
    dmin + (c * span + (PLOT_COLS - 1) / 2) / (PLOT_COLS - 1)
}

fn d_to_col(dmin: i64, span: i64, d: i64) -> i64 {
    ((d - dmin) * (PLOT_COLS - 1) + span / 2) / span
}

fn family_abbrev(f: Family) -> &'static str {
    match f {
        Family::FirstType1a => "1a",
        Family::ModType2bMod => "2b-mod",
        Family::RegularEi => "reg(E-i)",
        Family::RegularEii => "reg(E-ii)",
    }
}

/// Fixed-width number line: one row per family class, `R` marks a regular
/// component, `#` a superabundant one, `?` an undetermined family and `x`
/// an asserted-empty degree.
pub fn render_ascii(atlas: &Atlas) -> String {
    let (dmin, dmax) = (atlas.d_min(), atlas.d_max());
    let span = (dmax - dmin).max(1);
    let reports: Vec<ClassifierReport> = (dmin..=dmax)
        .map(|d| classify_b3(atlas.g, atlas.nu, d))
        .collect();
    let at = |d: i64| &reports[(d - dmin) as usize];

    let mark = |rep: &ClassifierReport, fams: &[Family]| -> char {
        let mut found = ' ';
        for c in rep.components.iter().filter(|c| fams.contains(&c.family)) {
            found = match (found, c.regularity) {
                (_, Regularity::Regular) => 'R',
                (' ', Regularity::Superabundant) => '#',
                (f, _) => f,
            };
        }
        found
    };

    let rows: [(&str, RowMark); 5] = [
        ("1a", Box::new(move |r| mark(r, &[Family::FirstType1a]))),
        ("2b-m", Box::new(move |r| mark(r, &[Family::ModType2bMod]))),
        (
            "reg",
            Box::new(move |r| mark(r, &[Family::RegularEi, Family::RegularEii])),
        ),
        (
            "?",
            Box::new(|r: &ClassifierReport| if r.unknowns.is_empty() { ' ' } else { '?' }),
        ),
        (
            "empty",
            Box::new(|r: &ClassifierReport| {
                if r.status == Status::AssertedEmpty {
                    'x'
                } else {
                    ' '
                }
            }),
        ),
    ];

    let mut out = String::new();
    let _ = writeln!(
        out,
        "B^k3_d atlas, g = {}, nu = {}, d in [{dmin}, {dmax}]",
        atlas.g, atlas.nu
    );
    for (name, f) in &rows {
        let line: String = (0..PLOT_COLS)
            .map(|c| f(at(col_to_d(dmin, span, c))))
            .collect();
        let _ = writeln!(out, "{name:<w$}|{}", line.trim_end(), w = ROW_LABEL - 1);
    }

    let starts: Vec<i64> = atlas
        .regions
        .iter()
        .map(|r| r.d_min)
        .chain([dmax])
        .collect();
    let mut ticks = vec![b'-'; PLOT_COLS as usize];
    let mut labels = vec![b' '; PLOT_COLS as usize + 4];
    let mut free_from = 0usize;
    for &d in &starts {
        let c = d_to_col(dmin, span, d) as usize;
        ticks[c] = b'+';
        let text = d.to_string();
        if c >= free_from && c + text.len() <= labels.len() {
            labels[c..c + text.len()].copy_from_slice(text.as_bytes());
            free_from = c + text.len() + 1;
        }
    }
    let _ = writeln!(
        out,
        "{:<w$}|{}",
        "",
        String::from_utf8_lossy(&ticks),
        w = ROW_LABEL - 1
    );
    let _ = writeln!(
        out,
        "{:<w$} {}",
        "d",
        String::from_utf8_lossy(&labels).trim_end(),
        w = ROW_LABEL - 1
    );
    out.push('\n');
    out.push_str("legend: R regular, # superabundant, ? undetermined, x empty; + region start\n");
    for r in &atlas.regions {
        let fams: Vec<&str> = r.families.iter().map(|f| family_abbrev(*f)).collect();
        let mut line = format!("  [{}, {}] {:?}", r.d_min, r.d_max, r.status);
        if !fams.is_empty() {
            let _ = write!(line, " {{{}}}", fams.join(", "));
        }
        if !r.unknowns.is_empty() {
            let u: Vec<String> = r.unknowns.iter().map(|u| format!("{u:?}")).collect();
            let _ = write!(line, " ?{}", u.join("/"));
        }
        if !r.empties.is_empty() {
            let _ = write!(line, " via {}", r.empties.join(", "));
        }
        out.push_str(&line);
        out.push('\n');
        for a in &r.annotations {
            let _ = writeln!(out, "      d = {} ({}): {}", a.d, a.point, a.summary);
        }
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn status_fill(s: Status) -> &'static str {
    match s {
        Status::HasComponents => "#cfe8cf",
        Status::PartiallyKnown => "#f6e3b4",
        Status::AssertedEmpty => "#e9c2c2",
        Status::NotApplicable => "#dddddd",
    }
}

/// Self-contained SVG (800-wide viewBox): region bands above a degree axis,
/// with ticks at the special points.
pub fn render_svg(atlas: &Atlas) -> String {
    let (dmin, dmax) = (atlas.d_min(), atlas.d_max());
    let (left, right) = (40.0_f64, 760.0_f64);
    let unit = (right - left) / ((dmax - dmin + 1) as f64);
    let x = |d: f64| left + (d - dmin as f64 + 0.5) * unit;

    let band_top = 50.0;
    let band_h = 24.0;
    let axis_y = band_top + band_h * atlas.regions.len() as f64 + 20.0;
    let specials = special_points(atlas.g, atlas.nu);
    let height = axis_y + 40.0 + 14.0 * (specials.len() as f64) + 40.0;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 800 {h}" width="800" height="{h}" font-family="monospace" font-size="10">"#,
        h = height.ceil()
    );
    let _ = writeln!(
        s,
        r#"<text x="{left}" y="24" font-size="13">B^k3_d components, g = {}, nu = {}</text>"#,
        atlas.g, atlas.nu
    );
    for (i, r) in atlas.regions.iter().enumerate() {
        let y = band_top + band_h * i as f64;
        let x0 = x(r.d_min as f64 - 0.5);
        let x1 = x(r.d_max as f64 + 0.5);
        let mut label: Vec<String> = r
            .families
            .iter()
            .map(|f| family_abbrev(*f).to_string())
            .collect();
        if !r.unknowns.is_empty() {
            label.push("?".into());
        }
        if r.status == Status::AssertedEmpty {
            label.push(format!("no comp. ({})", r.empties.join(",")));
        }
        let _ = writeln!(
            s,
            r##"<rect x="{x0:.2}" y="{y:.2}" width="{w:.2}" height="{hh:.2}" fill="{fill}" stroke="#555" stroke-width="0.5"/>"##,
            w = x1 - x0,
            hh = band_h - 4.0,
            fill = status_fill(r.status)
        );
        let _ = writeln!(
            s,
            r#"<text x="{tx:.2}" y="{ty:.2}">[{}, {}] {}</text>"#,
            r.d_min,
            r.d_max,
            escape(&label.join(" + ")),
            tx = x0 + 3.0,
            ty = y + 14.0
        );
    }
    let _ = writeln!(
        s,
        r#"<line x1="{left}" y1="{axis_y}" x2="{right}" y2="{axis_y}" stroke="black" stroke-width="1.5"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}">d</text>"#,
        right + 8.0,
        axis_y + 4.0
    );
    for (d, name) in [(dmin, "2g-2"), (dmax, "4g-4")] {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{d} ({name})</text>"#,
            x(d as f64),
            axis_y + 16.0
        );
    }
    for (i, (d, name)) in specials.iter().enumerate() {
        let xd = x(*d as f64);
        let _ = writeln!(
            s,
            r##"<line x1="{xd:.2}" y1="{y0:.2}" x2="{xd:.2}" y2="{y1:.2}" stroke="#c00" stroke-width="0.8"/>"##,
            y0 = band_top - 4.0,
            y1 = axis_y + 4.0
        );
        let _ = writeln!(
            s,
            r##"<text x="{left}" y="{ty:.2}" fill="#c00">d = {d}: {}</text>"##,
            escape(name),
            ty = axis_y + 40.0 + 14.0 * i as f64
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bounds(a: &Atlas) -> Vec<(i64, i64)> {
        a.regions.iter().map(|r| (r.d_min, r.d_max)).collect()
    }

    #[test]
    fn regions_for_20_3() {
        let a = atlas(20, 3).unwrap();
        assert_eq!(
            bounds(&a),
            vec![
                (38, 38),
                (39, 39),
                (40, 53),
                (54, 60),
                (61, 63),
                (64, 69),
                (70, 73),
                (74, 76)
            ]
        );
        let last = a.regions.last().unwrap();
        assert_eq!(last.status, Status::AssertedEmpty);
        assert_eq!(last.empties, vec!["A"]);
        assert_eq!(a.region_at(38).unwrap().families, vec![Family::RegularEi]);
        for d in 54..=60 {
            assert!(a
                .region_at(d)
                .unwrap()
                .unknowns
                .contains(&UnknownFamily::Regular));
        }
    }

    #[test]
    fn annotations_20_3() {
        let a = atlas(20, 3).unwrap();
        let find = |d: i64| {
            a.regions
                .iter()
                .flat_map(|r| &r.annotations)
                .find(|x| x.d == d)
                .unwrap()
                .summary
                .clone()
        };
        assert_eq!(find(38), "1 regular");
        assert_eq!(find(39), "2 regular");
        assert_eq!(find(40), "2 regular + 1 superabundant");
        assert_eq!(find(70), "empty (B)");
    }

    #[test]
    fn special_points_sorted_and_in_range() {
        let pts = special_points(20, 3);
        assert_eq!(pts.first().unwrap().0, 38);
        assert!(pts.windows(2).all(|w| w[0].0 <= w[1].0));
        assert!(pts.iter().any(|&(d, n)| d == 60 && n.starts_with("floor")));
    }

    #[test]
    fn ascii_is_fixed_width() {
        let text = render_ascii(&atlas(20, 3).unwrap());
        for line in text.lines().take(8).skip(1) {
            assert!(
                line.chars().count() <= ROW_LABEL + PLOT_COLS as usize + 4,
                "{line}"
            );
        }
        assert!(text.contains('?'));
        assert!(text.contains("[74, 76] AssertedEmpty"));
    }

    #[test]
    fn column_mapping_hits_both_ends() {
        for span in [6, 38, 79, 200] {
            assert_eq!(col_to_d(0, span, 0), 0);
            assert_eq!(col_to_d(0, span, PLOT_COLS - 1), span);
            assert_eq!(d_to_col(0, span, span), PLOT_COLS - 1);
        }
    }
}
