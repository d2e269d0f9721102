//! Bit-exact JSON form of rational series.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::layer::{LaurentLayer, EXACT};
use super::series::{SeriesWindow, TruncSeries};
use crate::error::{Error, Result};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub s: i64,
    pub l: usize,
    pub num: String,
    pub den: String,
}

/// A series as its nominal window, the per-layer precision and its
/// nonzero known terms. `h_high` is `null` for a series exact in `h`;
/// a `null` layer precision marks an exact layer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub window: Option<SeriesWindow>,
    pub h_high: Option<usize>,
    pub layer_high: Vec<Option<i64>>,
    pub terms: Vec<TermJson>,
}

impl SeriesJson {
    pub fn from_series(a: &TruncSeries<Rational>, window: Option<SeriesWindow>) -> Self {
        let terms = a
            .terms()
            .into_iter()
            .map(|(s, l, c)| TermJson {
                s,
                l,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        Self {
            window,
            h_high: a.h_high(),
            layer_high: a
                .layer_highs()
                .into_iter()
                .map(|h| (h < EXACT).then_some(h))
                .collect(),
            terms,
        }
    }

    pub fn to_series(&self) -> Result<TruncSeries<Rational>> {
        let n = self.layer_high.len();
        let mut grid: Vec<Vec<(i64, Rational)>> = vec![Vec::new(); n];
        for t in &self.terms {
            let c = crate::scalar::parse_rational(&format!("{}/{}", t.num, t.den))
                .ok_or_else(|| Error::Serialization(format!("bad rational {}/{}", t.num, t.den)))?;
            let slot = grid
                .get_mut(t.l)
                .ok_or_else(|| Error::Serialization(format!("term at h^{} beyond stored layers", t.l)))?;
            slot.push((t.s, c));
        }
        let layers = grid
            .into_iter()
            .zip(&self.layer_high)
            .map(|(mut terms, high)| {
                let high = high.unwrap_or(EXACT);
                terms.sort_by_key(|(s, _)| *s);
                match (terms.first(), terms.last()) {
                    (Some(&(lo, _)), Some(&(hi, _))) => {
                        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
                        for (s, c) in terms {
                            coeffs[(s - lo) as usize] = c;
                        }
                        LaurentLayer::from_coeffs(lo, coeffs, high)
                    }
                    _ => LaurentLayer::zero_to(high),
                }
            })
            .collect();
        let h = self.h_high.map(|h| h as i64).unwrap_or(EXACT);
        Ok(TruncSeries::from_layers(layers, h))
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Serialization(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Serialization(e.to_string()))
    }
}
