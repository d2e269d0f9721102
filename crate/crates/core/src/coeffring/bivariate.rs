//! Finite sums of products `f(z) g(y)` with `f, g` in `F((·))[[h]]`.

use std::collections::BTreeMap;

use super::layer::{padd, EXACT};
use super::series::TruncSeries;
use crate::scalar::Field;

/// Element of `F((z))((y))[[h]]` built from outer products. Layer `l` is
/// known on the rectangle `s_z <= z_high[l]`, `s_y <= y_high[l]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiSeries<F> {
    layers: Vec<BTreeMap<(i64, i64), F>>,
    z_high: Vec<i64>,
    y_high: Vec<i64>,
    h_high: i64,
}

impl<F: Field> BiSeries<F> {
    pub fn zero() -> Self {
        Self {
            layers: Vec::new(),
            z_high: Vec::new(),
            y_high: Vec::new(),
            h_high: EXACT,
        }
    }

    /// `f(z) * g(y)`.
    pub fn outer(f: &TruncSeries<F>, g: &TruncSeries<F>) -> Self {
        let vf = f.h_valuation_bound();
        let vg = g.h_valuation_bound();
        let h = padd(f.h_high_raw(), vg).min(padd(g.h_high_raw(), vf));
        let n = if h >= EXACT {
            (f.num_layers() + g.num_layers()).saturating_sub(1)
        } else {
            h as usize + 1
        };
        let mut out = Self {
            layers: vec![BTreeMap::new(); n],
            z_high: vec![EXACT; n],
            y_high: vec![EXACT; n],
            h_high: h,
        };
        for l in 0..n {
            for l1 in 0..=l {
                let (Some(a), Some(b)) = (f.layer(l1), g.layer(l - l1)) else { continue };
                if a.is_exact_zero() || b.is_exact_zero() {
                    continue;
                }
                out.z_high[l] = out.z_high[l].min(a.high());
                out.y_high[l] = out.y_high[l].min(b.high());
                for (sa, ca) in a.terms() {
                    for (sb, cb) in b.terms() {
                        let e = out.layers[l].entry((sa, sb)).or_insert_with(F::zero);
                        *e = e.clone() + ca.clone() * cb.clone();
                    }
                }
            }
        }
        out.clean();
        out
    }

    fn clean(&mut self) {
        for (l, layer) in self.layers.iter_mut().enumerate() {
            let (zh, yh) = (self.z_high[l], self.y_high[l]);
            layer.retain(|&(a, b), c| !c.is_zero() && a <= zh && b <= yh);
        }
    }

    fn layer_bounds(&self, l: usize) -> (i64, i64) {
        if l < self.layers.len() {
            (self.z_high[l], self.y_high[l])
        } else {
            (EXACT, EXACT)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let h = self.h_high.min(other.h_high);
        let n = if h >= EXACT {
            self.layers.len().max(other.layers.len())
        } else {
            h as usize + 1
        };
        let mut out = Self {
            layers: vec![BTreeMap::new(); n],
            z_high: vec![EXACT; n],
            y_high: vec![EXACT; n],
            h_high: h,
        };
        for l in 0..n {
            let (z1, y1) = self.layer_bounds(l);
            let (z2, y2) = other.layer_bounds(l);
            out.z_high[l] = z1.min(z2);
            out.y_high[l] = y1.min(y2);
            for src in [self.layers.get(l), other.layers.get(l)].into_iter().flatten() {
                for (k, c) in src {
                    let e = out.layers[l].entry(*k).or_insert_with(F::zero);
                    *e = e.clone() + c.clone();
                }
            }
        }
        out.clean();
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = self.clone();
        for layer in out.layers.iter_mut() {
            for v in layer.values_mut() {
                *v = v.clone() * c.clone();
            }
        }
        out.clean();
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-F::one()))
    }

    /// Highest known h-power, `None` if exact in `h`.
    pub fn h_high(&self) -> Option<usize> {
        (self.h_high < EXACT).then_some(self.h_high as usize)
    }

    /// True if every coefficient with `s_z <= zu`, `s_y <= yu`, `l <= h` is known.
    pub fn covers(&self, zu: i64, yu: i64, h: usize) -> bool {
        (h as i64) <= self.h_high
            && (0..=h).all(|l| {
                let (z, y) = self.layer_bounds(l);
                z >= zu && y >= yu
            })
    }

    /// First known nonzero coefficient `(s_z, s_y, l, c)`.
    pub fn first_nonzero(&self) -> Option<(i64, i64, usize, F)> {
        for (l, layer) in self.layers.iter().enumerate() {
            if let Some(((a, b), c)) = layer.iter().next() {
                return Some((*a, *b, l, c.clone()));
            }
        }
        None
    }

    /// First nonzero coefficient with `s_z <= zu`, `s_y <= yu`, `l <= h`.
    pub fn first_nonzero_in(&self, zu: i64, yu: i64, h: usize) -> Option<(i64, i64, usize, F)> {
        for (l, layer) in self.layers.iter().enumerate().take(h + 1) {
            if let Some(((a, b), c)) = layer.iter().find(|((a, b), _)| *a <= zu && *b <= yu) {
                return Some((*a, *b, l, c.clone()));
            }
        }
        None
    }

    pub fn is_known_zero(&self) -> bool {
        self.layers.iter().all(|l| l.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::SeriesWindow;
    use crate::scalar::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn outer_product_of_monomials() {
        let f = TruncSeries::monomial(-1, 0, r(2));
        let g = TruncSeries::monomial(3, 1, r(5));
        let b = BiSeries::outer(&f, &g);
        assert_eq!(b.first_nonzero(), Some((-1, 3, 1, r(10))));
        assert!(b.covers(100, 100, 10));
    }

    #[test]
    fn symmetric_difference_cancels() {
        let w = SeriesWindow::new(-2, 3, 2).unwrap();
        let f = TruncSeries::from_terms(&w, [(0, 0, r(1)), (1, 1, r(2))]);
        let g = TruncSeries::from_terms(&w, [(-1, 0, r(3)), (2, 2, r(1))]);
        let a = BiSeries::outer(&f, &g).add(&BiSeries::outer(&g, &f));
        let b = BiSeries::outer(&g, &f).add(&BiSeries::outer(&f, &g));
        assert!(a.sub(&b).is_known_zero());
        assert!(a.covers(3, 3, 2));
        assert!(!a.covers(4, 3, 2));
    }
}
