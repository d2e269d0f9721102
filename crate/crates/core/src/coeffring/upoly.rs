//! Dense univariate polynomial helpers (ascending coefficient order).

use crate::scalar::Field;

pub fn trim<F: Field>(mut p: Vec<F>) -> Vec<F> {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub fn divrem<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![F::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap().clone() / lead.clone();
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].clone() - c.clone() * bc.clone();
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

/// Monic greatest common divisor.
pub fn gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        x.iter_mut().for_each(|c| *c = c.clone() / l.clone());
    }
    x
}

pub fn eval<F: Field>(p: &[F], x: &F) -> F {
    p.iter()
        .rev()
        .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
}

/// Multiplicity of the root `x = 1`.
pub fn order_at_one<F: Field>(p: &[F]) -> Option<usize> {
    let mut p = trim(p.to_vec());
    if p.is_empty() {
        return None;
    }
    let mut k = 0;
    loop {
        if !eval(&p, &F::one()).is_zero() {
            return Some(k);
        }
        // synthetic division by (x - 1)
        let n = p.len();
        let mut q = vec![F::zero(); n - 1];
        let mut acc = F::zero();
        for i in (1..n).rev() {
            acc = acc + p[i].clone();
            q[i - 1] = acc.clone();
        }
        p = trim(q);
        k += 1;
    }
}

pub fn mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    trim(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn p(c: &[i64]) -> Vec<Rational> {
        c.iter().map(|&x| Rational::from_i64(x)).collect()
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x+3)
        let g = gcd(&p(&[-2, 1, 1]), &p(&[-3, 2, 1]));
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn root_multiplicity_at_one() {
        // (x-1)^2 (x+1)
        let f = mul(&mul(&p(&[-1, 1]), &p(&[-1, 1])), &p(&[1, 1]));
        assert_eq!(order_at_one(&f), Some(2));
        assert_eq!(order_at_one(&p(&[3])), Some(0));
    }
}
