//! Text and CSV renderings of the report types.

use std::fmt::Write as _;

use serde::Serialize;

use gonal_bn::atlas::Atlas;
use gonal_bn::rank_one::{classical_rho, GenericElement, Locus, WrdReport};
use gonal_bn::rank_two::{
    k_i, rho_fixed_det, rho_rank2, ClassifierReport, FixedDeterminantReport, Kernel, Presentation,
    Quotient, Rank2ComponentRecord,
};

fn csv_string<R: Serialize>(rows: impl IntoIterator<Item = R>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("rows are flat records");
    }
    let bytes = w.into_inner().expect("in-memory writer");
    String::from_utf8(bytes).expect("csv output is UTF-8")
}

fn generic_parts(e: &GenericElement) -> (&'static str, Option<i64>) {
    match *e {
        GenericElement::PencilPlusBase { base_degree } => ("PencilPlusBase", Some(base_degree)),
        GenericElement::FreePencil => ("FreePencil", None),
        GenericElement::DoubleGonalPlusBase { base_degree } => {
            ("DoubleGonalPlusBase", Some(base_degree))
        }
        GenericElement::GonalPlusMovable { movable_degree } => {
            ("GonalPlusMovable", Some(movable_degree))
        }
        GenericElement::FreeNet => ("FreeNet", None),
        GenericElement::GeneralLineBundle => ("GeneralLineBundle", None),
        GenericElement::Unspecified => ("Unspecified", None),
    }
}

fn describe_generic(e: &GenericElement) -> String {
    match *e {
        GenericElement::PencilPlusBase { base_degree } => {
            format!("A + B, B effective of degree {base_degree}")
        }
        GenericElement::FreePencil => "base-point-free complete pencil".into(),
        GenericElement::DoubleGonalPlusBase { base_degree } => {
            format!("2A + B, B effective of degree {base_degree}")
        }
        GenericElement::GonalPlusMovable { movable_degree } => {
            format!("A + M, M movable of degree {movable_degree}")
        }
        GenericElement::FreeNet => "base-point-free birationally very ample net".into(),
        GenericElement::GeneralLineBundle => "general line bundle".into(),
        GenericElement::Unspecified => "unspecified".into(),
    }
}

fn locus_label(report: &WrdReport) -> &'static str {
    match &report.locus {
        Locus::AllOfPicard => "AllOfPicard",
        Locus::Components(c) if c.is_empty() => "Empty",
        Locus::Components(_) => "Components",
    }
}

pub fn wrd_text(report: &WrdReport) -> String {
    let mut s = String::new();
    let head = format!(
        "W^{}_{}(C), g = {}, nu = {}",
        report.r, report.d, report.g, report.nu
    );
    match &report.locus {
        Locus::AllOfPicard => {
            let _ = writeln!(s, "{head}: Pic^d(C)");
        }
        Locus::Components(c) if c.is_empty() => {
            let _ = writeln!(s, "{head}: empty");
        }
        Locus::Components(comps) => {
            let _ = writeln!(s, "{head}: {} component(s)", comps.len());
            for c in comps {
                let _ = writeln!(
                    s,
                    "  ell = {}  w = {}  dim {}  codim {}  general point: {}",
                    c.ell,
                    c.vector,
                    c.dimension,
                    c.codimension,
                    describe_generic(&c.generic_element)
                );
            }
        }
    }
    for w in &report.warnings {
        let _ = writeln!(s, "  warning: {w}");
    }
    s
}

#[derive(Serialize)]
struct WrdRow<'a> {
    g: i64,
    nu: i64,
    d: i64,
    r: i64,
    locus: &'a str,
    ell: Option<i64>,
    vector: Option<String>,
    dimension: Option<i64>,
    codimension: Option<i64>,
    generic_element: Option<&'a str>,
    generic_degree: Option<i64>,
}

/// One row per component; `Pic^d` and the empty locus get a single row
/// with blank component columns.
pub fn wrd_csv(report: &WrdReport) -> String {
    let base = |locus| WrdRow {
        g: report.g,
        nu: report.nu,
        d: report.d,
        r: report.r,
        locus,
        ell: None,
        vector: None,
        dimension: None,
        codimension: None,
        generic_element: None,
        generic_degree: None,
    };
    let label = locus_label(report);
    let comps = report.components();
    if comps.is_empty() {
        return csv_string([base(label)]);
    }
    csv_string(comps.iter().map(|c| {
        let (kind, deg) = generic_parts(&c.generic_element);
        WrdRow {
            ell: Some(c.ell),
            vector: Some(c.vector.to_string()),
            dimension: Some(c.dimension),
            codimension: Some(c.codimension),
            generic_element: Some(kind),
            generic_degree: deg,
            ..base(label)
        }
    }))
}

fn kernel_label(k: &Kernel) -> String {
    match k {
        Kernel::General => "N".into(),
        Kernel::CanonicalMinusDivisor { s } => format!("K-D_{s}"),
        Kernel::CanonicalMinusNet { t } => format!("K-g2_{t}"),
    }
}

fn kernel_kind(k: &Kernel) -> &'static str {
    match k {
        Kernel::General => "General",
        Kernel::CanonicalMinusDivisor { .. } => "CanonicalMinusDivisor",
        Kernel::CanonicalMinusNet { .. } => "CanonicalMinusNet",
    }
}

fn quotient_label(q: Quotient) -> &'static str {
    match q {
        Quotient::CanonicalMinusTwoGonal => "K-2A",
        Quotient::CanonicalMinusGonal => "K-A",
        Quotient::Canonical => "K",
    }
}

fn quotient_kind(q: Quotient) -> &'static str {
    match q {
        Quotient::CanonicalMinusTwoGonal => "CanonicalMinusTwoGonal",
        Quotient::CanonicalMinusGonal => "CanonicalMinusGonal",
        Quotient::Canonical => "Canonical",
    }
}

fn sequence(p: &Presentation) -> String {
    format!(
        "0 -> {}(deg {}) -> F -> {}(deg {}) -> 0",
        kernel_label(&p.kernel),
        p.kernel_degree,
        quotient_label(p.quotient),
        p.quotient_degree
    )
}

fn record_line(c: &Rank2ComponentRecord) -> String {
    let mut flags = vec![format!("{:?}", c.regularity)];
    if c.uniruled {
        flags.push("uniruled".into());
    }
    if c.generically_smooth {
        flags.push("generically smooth".into());
    }
    let mut line = format!(
        "  [{}] {} dim {} ({}); {}",
        c.clause,
        c.family,
        c.dim,
        flags.join(", "),
        sequence(&c.presentation)
    );
    if let Some(n) = &c.net {
        let _ = write!(
            line,
            "; t = {}, {} <= 3t <= {}{}",
            n.t,
            n.three_t_min,
            n.three_t_max,
            if n.satisfied { "" } else { " (violated)" }
        );
    }
    line
}

pub fn b3_text(r: &ClassifierReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "B^k3_d, g = {}, nu = {}, d = {}: {:?}",
        r.g, r.nu, r.d, r.status
    );
    if let Some(reason) = &r.reason {
        let _ = writeln!(s, "  not applicable: {reason}");
        return s;
    }
    let _ = writeln!(s, "  k3 = {}, rho = {}", r.k3, r.rho);
    if !r.empties.is_empty() {
        let _ = writeln!(s, "  empty by clause {}", r.empties.join(", "));
    }
    if !r.components.is_empty() {
        let _ = writeln!(s, "  components ({}):", r.components.len());
        for c in &r.components {
            let _ = writeln!(s, "  {}", record_line(c));
        }
    }
    for u in &r.unknowns {
        let _ = writeln!(s, "  unknown {:?}: {}", u.family, u.reason);
        for gap in &u.gaps {
            let _ = writeln!(s, "      {} fails: {}", gap.clause, gap.failed.join("; "));
        }
    }
    let _ = writeln!(s, "  excluded types:");
    for x in &r.excluded_types {
        let _ = writeln!(s, "    {} by {}: {}", x.type_label, x.clause, x.note);
    }
    let _ = writeln!(s, "  speciality: {}", r.speciality.statement);
    for w in &r.warnings {
        let _ = writeln!(s, "  warning: {w}");
    }
    s
}

#[derive(Serialize, Default)]
struct B3Row<'a> {
    g: i64,
    nu: i64,
    d: i64,
    status: String,
    k3: i64,
    rho: i64,
    family: Option<&'a str>,
    dim: Option<i64>,
    regularity: Option<String>,
    clause: Option<&'a str>,
    uniruled: Option<bool>,
    generically_smooth: Option<bool>,
    kernel: Option<&'a str>,
    kernel_degree: Option<i64>,
    quotient: Option<&'a str>,
    quotient_degree: Option<i64>,
    net_t: Option<i64>,
    empties: String,
    unknowns: String,
}

/// One row per component record, or one summary row when there are none.
pub fn b3_csv(r: &ClassifierReport) -> String {
    let unknowns: Vec<String> = r
        .unknowns
        .iter()
        .map(|u| format!("{:?}", u.family))
        .collect();
    let base = || B3Row {
        g: r.g,
        nu: r.nu,
        d: r.d,
        status: format!("{:?}", r.status),
        k3: r.k3,
        rho: r.rho,
        empties: r.empties.join(" "),
        unknowns: unknowns.join(" "),
        ..Default::default()
    };
    if r.components.is_empty() {
        return csv_string([base()]);
    }
    csv_string(r.components.iter().map(|c| B3Row {
        family: Some(c.family.as_str()),
        dim: Some(c.dim),
        regularity: Some(format!("{:?}", c.regularity)),
        clause: Some(&c.clause),
        uniruled: Some(c.uniruled),
        generically_smooth: Some(c.generically_smooth),
        kernel: Some(kernel_kind(&c.presentation.kernel)),
        kernel_degree: Some(c.presentation.kernel_degree),
        quotient: Some(quotient_kind(c.presentation.quotient)),
        quotient_degree: Some(c.presentation.quotient_degree),
        net_t: c.net.map(|n| n.t),
        ..base()
    }))
}

pub fn fixdet_text(r: &FixedDeterminantReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "B^k3_M, g = {}, nu = {}, d = {}: rho_M = {}",
        r.g, r.nu, r.d, r.rho_m
    );
    if let Some(reason) = &r.reason {
        let _ = writeln!(s, "  not applicable: {reason}");
        return s;
    }
    if r.components.is_empty() {
        let _ = writeln!(s, "  no asserted components");
    }
    for c in &r.components {
        let _ = writeln!(
            s,
            "  [{}] {} dim {} ({:?})",
            c.clause, c.family, c.dim, c.regularity
        );
    }
    s
}

#[derive(Serialize)]
struct FixdetRow<'a> {
    g: i64,
    nu: i64,
    d: i64,
    applicable: bool,
    rho_m: i64,
    family: Option<&'a str>,
    dim: Option<i64>,
    regularity: Option<String>,
    clause: Option<&'a str>,
}

pub fn fixdet_csv(r: &FixedDeterminantReport) -> String {
    let base = || FixdetRow {
        g: r.g,
        nu: r.nu,
        d: r.d,
        applicable: r.applicable,
        rho_m: r.rho_m,
        family: None,
        dim: None,
        regularity: None,
        clause: None,
    };
    if r.components.is_empty() {
        return csv_string([base()]);
    }
    csv_string(r.components.iter().map(|c| FixdetRow {
        family: Some(c.family.as_str()),
        dim: Some(c.dim),
        regularity: Some(format!("{:?}", c.regularity)),
        clause: Some(&c.clause),
        ..base()
    }))
}

fn joined<T: std::fmt::Debug>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| format!("{x:?}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn atlas_text(a: &Atlas) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "atlas g = {}, nu = {}, d in [{}, {}]: {} regions",
        a.g,
        a.nu,
        a.d_min(),
        a.d_max(),
        a.regions.len()
    );
    for r in &a.regions {
        let fams: Vec<&str> = r.families.iter().map(|f| f.as_str()).collect();
        let _ = write!(s, "  [{}, {}] {:?}", r.d_min, r.d_max, r.status);
        if !fams.is_empty() {
            let _ = write!(s, " families {}", fams.join(" "));
        }
        if !r.unknowns.is_empty() {
            let _ = write!(s, " unknown {}", joined(&r.unknowns));
        }
        if !r.empties.is_empty() {
            let _ = write!(s, " empty by {}", r.empties.join(" "));
        }
        if !r.clauses.is_empty() {
            let _ = write!(s, " clauses {}", r.clauses.join(" "));
        }
        s.push('\n');
        for n in &r.annotations {
            let _ = writeln!(s, "      d = {} ({}): {}", n.d, n.point, n.summary);
        }
    }
    s
}

#[derive(Serialize)]
struct AtlasRow {
    d_min: i64,
    d_max: i64,
    status: String,
    families: String,
    unknowns: String,
    empties: String,
    clauses: String,
}

pub fn atlas_csv(a: &Atlas) -> String {
    csv_string(a.regions.iter().map(|r| {
        AtlasRow {
            d_min: r.d_min,
            d_max: r.d_max,
            status: format!("{:?}", r.status),
            families: r
                .families
                .iter()
                .map(|f| f.as_str())
                .collect::<Vec<_>>()
                .join(" "),
            unknowns: joined(&r.unknowns),
            empties: r.empties.join(" "),
            clauses: r.clauses.join(" "),
        }
    }))
}

#[derive(Debug, Serialize)]
pub struct RhoReport {
    pub g: i64,
    pub d: i64,
    pub i: i64,
    pub k_i: i64,
    pub rho_k_i: i64,
    pub r: Option<i64>,
    pub rho_classical: Option<i64>,
    pub rho_m_k3: i64,
}

impl RhoReport {
    pub fn new(g: i64, d: i64, r: Option<i64>, i: i64) -> Self {
        RhoReport {
            g,
            d,
            i,
            k_i: k_i(g, d, i),
            rho_k_i: rho_rank2(g, d, i),
            r,
            rho_classical: r.map(|r| classical_rho(g, r, d)),
            rho_m_k3: rho_fixed_det(g, d),
        }
    }
}

pub fn rho_text(x: &RhoReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "g = {}, d = {}", x.g, x.d);
    let _ = writeln!(s, "  k_{} = {}", x.i, x.k_i);
    let _ = writeln!(s, "  rho_d^k_{} = {}", x.i, x.rho_k_i);
    if let (Some(r), Some(rho)) = (x.r, x.rho_classical) {
        let _ = writeln!(s, "  rho(g, {r}, d) = {rho}");
    }
    let _ = writeln!(s, "  rho_M^k3 = {}", x.rho_m_k3);
    s
}

pub fn rho_csv(x: &RhoReport) -> String {
    csv_string([x])
}
