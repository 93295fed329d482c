//! Gnuplot script generation.
//!
//! The script is self-contained: it selects the SVG terminal and an output
//! figure named after the script, so running it with a stock gnuplot needs
//! nothing beyond the referenced TSV files. Binned layers connect their
//! points; the connecting lines are a visual clue, so raw and size-rank
//! layers stay dots-only. On a log y axis, nonpositive ordinates are
//! filtered out inline (log scales cannot display them).

use std::path::Path;

/// How one data file is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayerKind {
    RawDots,
    BinnedLine,
    SizeRank,
    ModelCurve,
}

#[derive(Debug, Clone)]
pub struct Layer {
    pub kind: LayerKind,
    pub path: String,
    pub label: String,
}

impl Layer {
    /// Parses a `PATH[=LABEL]` flag value; the label defaults to the file
    /// stem.
    pub fn from_flag(kind: LayerKind, value: &str) -> Layer {
        let (path, label) = match value.split_once('=') {
            Some((p, l)) => (p.to_string(), l.to_string()),
            None => {
                let stem = Path::new(value)
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| value.to_string());
                (value.to_string(), stem)
            }
        };
        Layer { kind, path, label }
    }
}

#[derive(Debug, Clone)]
pub struct PlotSpec {
    pub layers: Vec<Layer>,
    pub log_x: bool,
    pub log_y: bool,
    /// Path of the figure the script renders.
    pub figure: String,
}

/// Figure file name derived from the script path: same stem, `.svg`.
pub fn figure_name(script: Option<&str>) -> String {
    match script {
        Some(p) => Path::new(p).with_extension("svg").to_string_lossy().into_owned(),
        None => "plot.svg".to_string(),
    }
}

pub fn render(spec: &PlotSpec) -> String {
    let mut out = String::new();
    out.push_str("# generated by fibbin plot\n");
    out.push_str("set terminal svg size 960,720 dynamic\n");
    out.push_str(&format!("set output {}\n", quote(&spec.figure)));
    match (spec.log_x, spec.log_y) {
        (true, true) => out.push_str("set logscale xy\n"),
        (true, false) => out.push_str("set logscale x\n"),
        (false, true) => out.push_str("set logscale y\n"),
        (false, false) => {}
    }
    out.push_str("set key top right\n");
    let clauses: Vec<String> = spec
        .layers
        .iter()
        .map(|layer| {
            let using = if spec.log_y {
                // drop nonpositive ordinates from log-scale layers
                "using 1:($2 > 0 ? $2 : 1/0)"
            } else {
                "using 1:2"
            };
            let style = match layer.kind {
                LayerKind::RawDots => "with points pointtype 7 pointsize 0.4",
                LayerKind::BinnedLine => "with linespoints pointtype 5 pointsize 0.5",
                LayerKind::SizeRank => "with points pointtype 9 pointsize 0.4",
                LayerKind::ModelCurve => "with lines linewidth 2",
            };
            format!(
                "    {} {using} {style} title {}",
                quote(&layer.path),
                quote(&layer.label)
            )
        })
        .collect();
    out.push_str("plot \\\n");
    out.push_str(&clauses.join(", \\\n"));
    out.push('\n');
    out
}

// gnuplot single-quoted string: double any embedded quote
fn quote(s: &str) -> String {
    format!("'{}'", s.replace('\'', "''"))
}
