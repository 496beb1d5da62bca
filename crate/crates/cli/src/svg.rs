//! Plain SVG 1.1 rendering of the burden panels: one panel per scenario with the
//! technology curve, the institution curve and the shaded gap between them.

use std::fmt::Write;

use siam_core::scenario::Traces;

const PANEL_W: f64 = 420.0;
const PANEL_H: f64 = 340.0;
const MARGIN_L: f64 = 56.0;
const MARGIN_R: f64 = 16.0;
const MARGIN_T: f64 = 40.0;
const MARGIN_B: f64 = 48.0;
const HEADER_H: f64 = 36.0;
/// Upper bound on vertices per polyline; traces are decimated to this.
const MAX_VERTICES: usize = 600;

const PALETTE: [&str; 6] = [
    "#7f7f7f", "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e",
];

/// Everything needed to draw one panel.
#[derive(Debug, Clone)]
pub struct Panel<'a> {
    pub title: String,
    pub lag: f64,
    pub duration: f64,
    pub burden: f64,
    /// `None` for the baseline (drawn as the reference) or when reductions are undefined.
    pub reduction_percent: Option<f64>,
    pub is_baseline: bool,
    pub traces: &'a Traces<f64>,
}

pub fn render(panels: &[Panel<'_>], title: &str) -> String {
    let width = PANEL_W * panels.len().max(1) as f64;
    let height = PANEL_H + HEADER_H;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="Helvetica, Arial, sans-serif">"#,
        w = width,
        h = height
    );
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="24" font-size="16" font-weight="bold" text-anchor="middle">{}</text>"#,
        width / 2.0,
        escape(title)
    );
    for (i, p) in panels.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        panel(&mut s, p, PANEL_W * i as f64, HEADER_H, color, i == 0);
    }
    s.push_str("</svg>\n");
    s
}

struct Frame {
    x0: f64,
    y0: f64,
    w: f64,
    h: f64,
    t_min: f64,
    t_max: f64,
}

impl Frame {
    fn x(&self, t: f64) -> f64 {
        self.x0 + (t - self.t_min) / (self.t_max - self.t_min) * self.w
    }

    fn y(&self, v: f64) -> f64 {
        self.y0 + (1.0 - v.clamp(0.0, 1.0)) * self.h
    }
}

fn panel(s: &mut String, p: &Panel<'_>, left: f64, top: f64, color: &str, y_label: bool) {
    let grid = p.traces.grid;
    let f = Frame {
        x0: left + MARGIN_L,
        y0: top + MARGIN_T,
        w: PANEL_W - MARGIN_L - MARGIN_R,
        h: PANEL_H - MARGIN_T - MARGIN_B,
        t_min: grid.t_start(),
        t_max: grid.t_end(),
    };

    let _ = writeln!(s, "<g>");
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" font-size="14" font-weight="bold" text-anchor="middle">{}</text>"#,
        fmt(f.x0 + f.w / 2.0),
        fmt(top + 22.0),
        escape(&p.title)
    );
    axes(s, &f, y_label);

    let idx = decimate(p.traces.len());
    let t_at = |j: usize| grid.node(j);

    // gap region: upper edge I + gap (= S where S > I), lower edge I
    let mut d = String::new();
    for (k, &j) in idx.iter().enumerate() {
        let upper = p.traces.institution[j] + p.traces.gap[j];
        let _ = write!(
            d,
            "{}{},{} ",
            if k == 0 { 'M' } else { 'L' },
            fmt(f.x(t_at(j))),
            fmt(f.y(upper))
        );
    }
    for &j in idx.iter().rev() {
        let _ = write!(
            d,
            "L{},{} ",
            fmt(f.x(t_at(j))),
            fmt(f.y(p.traces.institution[j]))
        );
    }
    d.push('Z');
    let _ = writeln!(
        s,
        r#"<path d="{d}" fill="{color}" fill-opacity="0.25" stroke="none"><title>Gap (H)</title></path>"#
    );

    let _ = writeln!(
        s,
        r#"<polyline points="{}" fill="none" stroke="black" stroke-width="2.5"><title>Tech (S)</title></polyline>"#,
        points(&f, &idx, &grid, &p.traces.tech)
    );
    let _ = writeln!(
        s,
        r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2.5" stroke-dasharray="8,5"><title>Inst (I)</title></polyline>"#,
        points(&f, &idx, &grid, &p.traces.institution)
    );

    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" font-size="12">L = {} yr, D = {} yr</text>"#,
        fmt(f.x0 + 8.0),
        fmt(f.y0 + 16.0),
        p.lag,
        p.duration
    );

    let impact = if p.is_baseline {
        "Ref. (100%)".to_owned()
    } else {
        match p.reduction_percent {
            Some(r) => format!("{:.1}% reduction", r),
            None => "reduction undefined".to_owned(),
        }
    };
    let (bx, by) = (f.x0 + f.w / 2.0, f.y0 + f.h * 0.6);
    let _ = writeln!(
        s,
        r#"<rect x="{}" y="{}" width="150" height="62" rx="8" fill="white" fill-opacity="0.9" stroke="{color}" stroke-width="2"/>"#,
        fmt(bx - 75.0),
        fmt(by - 31.0)
    );
    for (k, line) in [
        "Total Burden".to_owned(),
        format!("H = {:.2} yr", p.burden),
        impact,
    ]
    .iter()
    .enumerate()
    {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="13" font-weight="bold" fill="{color}" text-anchor="middle">{}</text>"#,
            fmt(bx),
            fmt(by - 12.0 + 17.0 * k as f64),
            escape(line)
        );
    }

    legend(s, &f, color);
    let _ = writeln!(s, "</g>");
}

fn axes(s: &mut String, f: &Frame, y_label: bool) {
    let _ = writeln!(
        s,
        r##"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#333" stroke-width="1"/>"##,
        fmt(f.x0),
        fmt(f.y0),
        fmt(f.w),
        fmt(f.h)
    );
    for v in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let y = f.y(v);
        let _ = writeln!(
            s,
            r##"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="#ccc" stroke-width="0.5"/>"##,
            fmt(f.x0),
            fmt(f.x0 + f.w),
            y = fmt(y)
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="end">{}</text>"#,
            fmt(f.x0 - 4.0),
            fmt(y + 3.5),
            v
        );
    }
    let step = tick_step(f.t_max - f.t_min);
    let mut k = (f.t_min / step).ceil() as i64;
    loop {
        let t = k as f64 * step;
        if t > f.t_max + 1e-9 * step {
            break;
        }
        let x = f.x(t);
        let _ = writeln!(
            s,
            r##"<line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="#ccc" stroke-width="0.5"/>"##,
            fmt(f.y0),
            fmt(f.y0 + f.h),
            x = fmt(x)
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="middle">{}</text>"#,
            fmt(x),
            fmt(f.y0 + f.h + 14.0),
            fmt(t)
        );
        k += 1;
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" font-size="12" text-anchor="middle">Time (years)</text>"#,
        fmt(f.x0 + f.w / 2.0),
        fmt(f.y0 + f.h + 34.0)
    );
    if y_label {
        let (x, y) = (f.x0 - 38.0, f.y0 + f.h / 2.0);
        let _ = writeln!(
            s,
            r#"<text x="{x}" y="{y}" font-size="12" text-anchor="middle" transform="rotate(-90 {x} {y})">Maturity level (0-1)</text>"#,
            x = fmt(x),
            y = fmt(y)
        );
    }
}

fn legend(s: &mut String, f: &Frame, color: &str) {
    let x = f.x0 + f.w - 92.0;
    let y = f.y0 + f.h - 52.0;
    let rows: [(&str, String); 3] = [
        (
            "Tech (S)",
            r#"stroke="black" stroke-width="2.5""#.to_owned(),
        ),
        (
            "Inst (I)",
            format!(r#"stroke="{color}" stroke-width="2.5" stroke-dasharray="8,5""#),
        ),
        ("Gap (H)", String::new()),
    ];
    for (k, (name, style)) in rows.iter().enumerate() {
        let yy = y + 15.0 * k as f64;
        if style.is_empty() {
            let _ = writeln!(
                s,
                r#"<rect x="{}" y="{}" width="22" height="9" fill="{color}" fill-opacity="0.25"/>"#,
                fmt(x),
                fmt(yy - 4.5)
            );
        } else {
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" {style}/>"#,
                fmt(x),
                fmt(x + 22.0),
                y = fmt(yy)
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="11">{name}</text>"#,
            fmt(x + 28.0),
            fmt(yy + 4.0)
        );
    }
}

fn points(f: &Frame, idx: &[usize], grid: &siam_core::UniformGrid<f64>, values: &[f64]) -> String {
    idx.iter()
        .map(|&j| format!("{},{}", fmt(f.x(grid.node(j))), fmt(f.y(values[j]))))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Node indices to draw: evenly strided, always including both ends.
fn decimate(n: usize) -> Vec<usize> {
    if n <= MAX_VERTICES {
        return (0..n).collect();
    }
    let stride = (n - 1).div_ceil(MAX_VERTICES - 1);
    let mut idx: Vec<usize> = (0..n).step_by(stride).collect();
    if *idx.last().unwrap() != n - 1 {
        idx.push(n - 1);
    }
    idx
}

fn tick_step(span: f64) -> f64 {
    let raw = span / 6.0;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let nice = if norm <= 1.0 {
        1.0
    } else if norm <= 2.0 {
        2.0
    } else if norm <= 2.5 {
        2.5
    } else if norm <= 5.0 {
        5.0
    } else {
        10.0
    };
    nice * mag
}

fn fmt(x: f64) -> String {
    let r = (x * 100.0).round() / 100.0;
    if r == 0.0 {
        "0".to_owned()
    } else {
        format!("{r}")
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
