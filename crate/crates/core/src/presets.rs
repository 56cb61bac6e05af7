//! Parameter presets of the parametric studies, one entry per curve.
//!
//! The presets are data, not code branches, so they can be audited in
//! one place. All values are dimensionless; the working units are
//! `mu_M = 1`, `r_o = 1`, `U_o = 1`.
//!
//! The `G3` values of study 5 are not published; the three used here are
//! implementer-chosen (admissible under `g2 = 3.5 > g3 > 1`) and flagged
//! as such so emitted metadata can record their provenance.

use crate::material::DimensionlessSet;

/// One curve of one figure-style study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigurePreset {
    pub figure: u8,
    /// Short machine-friendly curve label, e.g. `g1_1.45`.
    pub label: &'static str,
    pub set: DimensionlessSet<f64>,
    /// True when a value was chosen by the implementer rather than taken
    /// from the published study.
    pub implementer_chosen: bool,
}

const fn set(g1: f64, g2: f64, g3: f64, beta: f64, lc_ratio: f64, delta: f64) -> DimensionlessSet<f64> {
    DimensionlessSet { g1, g2, g3, beta, lc_ratio, delta }
}

/// Every curve of every study, in figure order.
pub const PRESETS: &[FigurePreset] = &[
    // thick shell, three shear-ratio values
    FigurePreset { figure: 2, label: "g1_1.45", set: set(1.45, 5.0, 2.0, 0.15, 2.0, 0.0), implementer_chosen: false },
    FigurePreset { figure: 2, label: "g1_3.25", set: set(3.25, 5.0, 2.0, 0.15, 2.0, 0.0), implementer_chosen: false },
    FigurePreset { figure: 2, label: "g1_4.95", set: set(4.95, 5.0, 2.0, 0.15, 2.0, 0.0), implementer_chosen: false },
    // thin shell, same material values
    FigurePreset { figure: 3, label: "g1_1.45", set: set(1.45, 5.0, 2.0, 0.85, 2.0, 0.0), implementer_chosen: false },
    FigurePreset { figure: 3, label: "g1_3.25", set: set(3.25, 5.0, 2.0, 0.85, 2.0, 0.0), implementer_chosen: false },
    FigurePreset { figure: 3, label: "g1_4.95", set: set(4.95, 5.0, 2.0, 0.85, 2.0, 0.0), implementer_chosen: false },
    // bulk-ratio study
    FigurePreset { figure: 4, label: "g2_3", set: set(2.0, 3.0, 1.3, 0.15, 2.0, 0.0), implementer_chosen: false },
    FigurePreset { figure: 4, label: "g2_5", set: set(2.0, 5.0, 1.3, 0.15, 2.0, 0.0), implementer_chosen: false },
    FigurePreset { figure: 4, label: "g2_7", set: set(2.0, 7.0, 1.3, 0.15, 2.0, 0.0), implementer_chosen: false },
    // macro-bulk-ratio study; g3 values implementer-chosen
    FigurePreset { figure: 5, label: "g3_1.5", set: set(2.5, 3.5, 1.5, 0.15, 2.0, 0.0), implementer_chosen: true },
    FigurePreset { figure: 5, label: "g3_2.0", set: set(2.5, 3.5, 2.0, 0.15, 2.0, 0.0), implementer_chosen: true },
    FigurePreset { figure: 5, label: "g3_2.5", set: set(2.5, 3.5, 2.5, 0.15, 2.0, 0.0), implementer_chosen: true },
    // displacement-ratio study
    FigurePreset { figure: 6, label: "delta_-0.50", set: set(1.5, 5.5, 2.0, 0.2, 1.0, -0.50), implementer_chosen: false },
    FigurePreset { figure: 6, label: "delta_-0.25", set: set(1.5, 5.5, 2.0, 0.2, 1.0, -0.25), implementer_chosen: false },
    FigurePreset { figure: 6, label: "delta_0.00", set: set(1.5, 5.5, 2.0, 0.2, 1.0, 0.0), implementer_chosen: false },
    FigurePreset { figure: 6, label: "delta_0.25", set: set(1.5, 5.5, 2.0, 0.2, 1.0, 0.25), implementer_chosen: false },
    FigurePreset { figure: 6, label: "delta_0.50", set: set(1.5, 5.5, 2.0, 0.2, 1.0, 0.50), implementer_chosen: false },
    // length-scale sweep, large-L_c side
    FigurePreset { figure: 7, label: "lc_0.05", set: set(1.5, 5.0, 2.0, 0.25, 0.05, 0.5), implementer_chosen: false },
    FigurePreset { figure: 7, label: "lc_0.10", set: set(1.5, 5.0, 2.0, 0.25, 0.10, 0.5), implementer_chosen: false },
    FigurePreset { figure: 7, label: "lc_0.20", set: set(1.5, 5.0, 2.0, 0.25, 0.20, 0.5), implementer_chosen: false },
    FigurePreset { figure: 7, label: "lc_0.50", set: set(1.5, 5.0, 2.0, 0.25, 0.50, 0.5), implementer_chosen: false },
    FigurePreset { figure: 7, label: "lc_1.00", set: set(1.5, 5.0, 2.0, 0.25, 1.00, 0.5), implementer_chosen: false },
    // length-scale sweep, small-L_c side
    FigurePreset { figure: 8, label: "lc_2", set: set(1.5, 5.0, 2.0, 0.25, 2.0, 0.5), implementer_chosen: false },
    FigurePreset { figure: 8, label: "lc_5", set: set(1.5, 5.0, 2.0, 0.25, 5.0, 0.5), implementer_chosen: false },
    FigurePreset { figure: 8, label: "lc_10", set: set(1.5, 5.0, 2.0, 0.25, 10.0, 0.5), implementer_chosen: false },
    FigurePreset { figure: 8, label: "lc_20", set: set(1.5, 5.0, 2.0, 0.25, 20.0, 0.5), implementer_chosen: false },
    FigurePreset { figure: 8, label: "lc_200", set: set(1.5, 5.0, 2.0, 0.25, 200.0, 0.5), implementer_chosen: false },
];

/// Curves belonging to one figure id (2..=8); `None` for unknown ids.
pub fn figure_presets(figure: u8) -> Option<Vec<FigurePreset>> {
    if !(2..=8).contains(&figure) {
        return None;
    }
    Some(PRESETS.iter().copied().filter(|p| p.figure == figure).collect())
}
