//! Serialized normalizer artifacts.

use serde::{Deserialize, Serialize};
use trigcenter::coeffring::{SeriesJson, SeriesWindow};
use trigcenter::normalizer::{solve_g_appendix_a, solve_g_froute, solve_gbar_rational, FractionJson};
use trigcenter::{Rational, Result};

use crate::report::SCHEMA_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Via the coefficients `f_k` and the symmetrization.
    Froute,
    /// Via the differential recursion.
    Appendix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GSeriesFile {
    pub schema_version: u32,
    pub n: usize,
    pub method: Method,
    pub window: SeriesWindow,
    pub g: SeriesJson,
    pub gbar: Vec<String>,
    pub f: Option<Vec<FractionJson>>,
    pub a: Option<Vec<FractionJson>>,
}

pub fn build(n: usize, window: &SeriesWindow, method: Method) -> Result<GSeriesFile> {
    let (g, gbar, f, a) = match method {
        Method::Froute => {
            let gs = solve_g_froute::<Rational>(n, window)?;
            let (f, a) = match &gs.fcoeffs {
                Some(fc) => (Some(fc.f_json()), Some(fc.a_json())),
                None => (None, None),
            };
            (gs.g_in_window(), gs.gbar_rat, f, a)
        }
        Method::Appendix => {
            let ap = solve_g_appendix_a::<Rational>(n, window)?;
            (ap.series.restrict(window), solve_gbar_rational(n, window.h_high), None, None)
        }
    };
    Ok(GSeriesFile {
        schema_version: SCHEMA_VERSION,
        n,
        method,
        window: *window,
        g: SeriesJson::from_series(&g, Some(*window)),
        gbar: gbar.iter().map(|c| c.to_string()).collect(),
        f,
        a,
    })
}
