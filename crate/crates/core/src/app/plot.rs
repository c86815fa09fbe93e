//! Minimal SVG rendering of a motif: all members overlaid, center on top,
//! label markers where event labels fall.

use std::fmt::Write;

use super::labels::EventKind;
use super::report::MotifEntry;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 320.0;
const MARGIN: f64 = 40.0;

fn kind_color(kind: EventKind) -> &'static str {
    match kind {
        EventKind::Brake => "#d62728",
        EventKind::Acceleration => "#2ca02c",
        EventKind::Turn => "#9467bd",
        EventKind::Other => "#7f7f7f",
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

pub fn motif_svg(entry: &MotifEntry, trip: &str) -> String {
    let trip = escape(trip);
    let max_len = entry
        .members
        .iter()
        .map(|m| m.values.len())
        .max()
        .unwrap_or(1)
        .max(2);
    let (mut lo, mut hi) = entry
        .members
        .iter()
        .flat_map(|m| m.values.iter().copied())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
    if !lo.is_finite() {
        (lo, hi) = (-1.0, 1.0);
    }
    if hi - lo < 1e-9 {
        lo -= 0.5;
        hi += 0.5;
    }
    let x = |i: f64| MARGIN + i / (max_len - 1) as f64 * (WIDTH - 2.0 * MARGIN);
    let y = |v: f64| HEIGHT - MARGIN - (v - lo) / (hi - lo) * (HEIGHT - 2.0 * MARGIN);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{MARGIN}" y="20" font-family="sans-serif" font-size="13">{trip} motif #{} ({}) cost {:.2} bits, {} members</text>"#,
        entry.rank,
        entry.pattern.join(" "),
        entry.mdl_cost,
        entry.members.len()
    );
    let _ = writeln!(
        svg,
        r##"<g font-family="sans-serif" font-size="10" fill="#444"><text x="4" y="{:.2}">{hi:.3}</text><text x="4" y="{:.2}">{lo:.3}</text></g>"##,
        y(hi) + 4.0,
        y(lo)
    );
    let _ = writeln!(
        svg,
        r##"<rect x="{MARGIN}" y="{MARGIN}" width="{}" height="{}" fill="none" stroke="#ccc"/>"##,
        WIDTH - 2.0 * MARGIN,
        HEIGHT - 2.0 * MARGIN
    );

    let center = entry.center.segment();
    let mut order: Vec<usize> = (0..entry.members.len()).collect();
    // center drawn last so it stays visible
    order.sort_by_key(|&i| entry.members[i].span.segment() == center);
    for i in order {
        let m = &entry.members[i];
        let is_center = m.span.segment() == center;
        let points: Vec<String> = m
            .values
            .iter()
            .enumerate()
            .map(|(k, v)| format!("{:.2},{:.2}", x(k as f64), y(*v)))
            .collect();
        let (stroke, width, opacity) = if is_center {
            ("#1f77b4", 2.0, 1.0)
        } else {
            ("#555", 1.0, 0.45)
        };
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{stroke}" stroke-width="{width}" stroke-opacity="{opacity}" points="{}"/>"#,
            points.join(" ")
        );
        for label in &m.labels {
            let offset = (label.time_s - m.span.start_s) * m.values.len() as f64
                / m.span.duration_s.max(f64::MIN_POSITIVE);
            let k = (offset.floor() as usize).min(m.values.len().saturating_sub(1));
            let _ = writeln!(
                svg,
                r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="{}"><title>{:?} at {:.1} s</title></circle>"#,
                x(offset),
                y(m.values[k]),
                kind_color(label.kind),
                label.kind,
                label.time_s
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}
