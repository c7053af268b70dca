//! CSV, JSON and SVG emitters for sweep results.

use std::fmt::Write as _;

use super::PointEstimate;

pub const CSV_HEADER: &str =
    "L,p_phi,p_lambda,samples,failures,lambda_failures,phi_failures,P,stderr,censored,seed";

pub fn points_to_csv(points: &[PointEstimate]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for pt in points {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            pt.l,
            pt.p_phi,
            pt.p_lambda,
            pt.samples,
            pt.failures,
            pt.lambda_failures,
            pt.phi_failures,
            pt.p,
            pt.stderr,
            pt.censored,
            pt.seed
        );
    }
    out
}

pub fn points_to_json(points: &[PointEstimate]) -> String {
    serde_json::to_string_pretty(points).expect("point estimates serialize")
}

/// Minimal line plot: one series per lattice size, x = p_phi, y = log10 P.
/// Points with zero failures are skipped.
pub fn points_to_svg(points: &[PointEstimate]) -> String {
    const W: f64 = 640.0;
    const H: f64 = 440.0;
    const ML: f64 = 60.0;
    const MR: f64 = 90.0;
    const MT: f64 = 20.0;
    const MB: f64 = 50.0;
    const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

    let mut sizes: Vec<usize> = points.iter().map(|p| p.l).collect();
    sizes.sort_unstable();
    sizes.dedup();

    let usable: Vec<&PointEstimate> = points.iter().filter(|p| p.p > 0.0).collect();
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {W} {H}\" font-family=\"monospace\" font-size=\"12\">"
    );
    if usable.is_empty() {
        let _ = writeln!(svg, "<text x=\"20\" y=\"30\">no nonzero points</text></svg>");
        return svg;
    }
    let xmin = usable.iter().map(|p| p.p_phi).fold(f64::INFINITY, f64::min);
    let xmax = usable.iter().map(|p| p.p_phi).fold(f64::NEG_INFINITY, f64::max);
    let ymin = usable.iter().map(|p| p.p.log10()).fold(f64::INFINITY, f64::min);
    let ymax = usable.iter().map(|p| p.p.log10()).fold(f64::NEG_INFINITY, f64::max);
    let xspan = (xmax - xmin).max(1e-12);
    let yspan = (ymax - ymin).max(1e-12);
    let x = |p: f64| ML + (p - xmin) / xspan * (W - ML - MR);
    let y = |v: f64| H - MB - (v - ymin) / yspan * (H - MT - MB);

    // axes
    let _ = writeln!(
        svg,
        "<line x1=\"{ML}\" y1=\"{MT}\" x2=\"{ML}\" y2=\"{}\" stroke=\"black\"/>",
        H - MB
    );
    let _ = writeln!(
        svg,
        "<line x1=\"{ML}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>",
        H - MB,
        W - MR,
        H - MB
    );
    let _ = writeln!(
        svg,
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">p</text>",
        (ML + W - MR) / 2.0,
        H - 12.0
    );
    let _ = writeln!(
        svg,
        "<text x=\"14\" y=\"{}\" transform=\"rotate(-90 14 {})\">log10 P</text>",
        (MT + H - MB) / 2.0,
        (MT + H - MB) / 2.0
    );
    // a few ticks
    for i in 0..=4 {
        let px = xmin + xspan * f64::from(i) / 4.0;
        let _ = writeln!(
            svg,
            "<text x=\"{:.1}\" y=\"{}\" text-anchor=\"middle\">{:.4}</text>",
            x(px),
            H - MB + 16.0,
            px
        );
        let py = ymin + yspan * f64::from(i) / 4.0;
        let _ = writeln!(
            svg,
            "<text x=\"{}\" y=\"{:.1}\" text-anchor=\"end\">{:.2}</text>",
            ML - 6.0,
            y(py) + 4.0,
            py
        );
    }

    for (si, &l) in sizes.iter().enumerate() {
        let color = PALETTE[si % PALETTE.len()];
        let mut series: Vec<&&PointEstimate> = usable.iter().filter(|p| p.l == l).collect();
        series.sort_by(|a, b| a.p_phi.total_cmp(&b.p_phi));
        if series.is_empty() {
            continue;
        }
        let path: Vec<String> = series
            .iter()
            .map(|p| format!("{:.2},{:.2}", x(p.p_phi), y(p.p.log10())))
            .collect();
        let _ = writeln!(
            svg,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>",
            path.join(" ")
        );
        for p in &series {
            let _ = writeln!(
                svg,
                "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.5\" fill=\"{color}\"/>",
                x(p.p_phi),
                y(p.p.log10())
            );
        }
        let _ = writeln!(
            svg,
            "<text x=\"{}\" y=\"{}\" fill=\"{color}\">L={l}</text>",
            W - MR + 8.0,
            MT + 16.0 * si as f64 + 12.0
        );
    }
    svg.push_str("</svg>\n");
    svg
}
