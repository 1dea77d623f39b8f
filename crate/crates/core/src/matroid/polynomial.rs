use std::fmt;

use num_traits::Zero;

use crate::scalar::ExactScalar;

/// Dense univariate polynomial, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: ExactScalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(T::zero());
        }
        Polynomial { coeffs }
    }

    /// `∏ (t − r)`.
    pub fn from_roots<I: IntoIterator<Item = T>>(roots: I) -> Self {
        roots.into_iter().fold(Polynomial::new(vec![T::one()]), |p, r| p.mul_linear(r))
    }

    fn mul_linear(&self, r: T) -> Self {
        let mut out = vec![T::zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] = out[k + 1].clone() + c.clone();
            out[k] = out[k].clone() - c.clone() * r.clone();
        }
        Polynomial::new(out)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn eval(&self, t: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    /// Integer roots with multiplicity, if the polynomial splits over the
    /// integers into monic linear factors; `None` otherwise.
    pub fn integer_roots(&self) -> Option<Vec<T>> {
        if !self.coeffs.last()?.is_one() {
            return None;
        }
        let mut p = self.clone();
        let mut roots = Vec::new();
        while p.degree() > 0 {
            if p.coeffs[0].is_zero() {
                roots.push(T::zero());
                p = Polynomial::new(p.coeffs[1..].to_vec());
                continue;
            }
            let c0 = p.coeffs[0].abs();
            let r = divisors(&c0)
                .into_iter()
                .flat_map(|d| [d.clone(), -d])
                .find(|d| p.eval(d).is_zero())?;
            p = p.divide_linear(&r);
            roots.push(r);
        }
        roots.sort();
        Some(roots)
    }

    fn divide_linear(&self, r: &T) -> Self {
        let n = self.degree();
        let mut q = vec![T::zero(); n];
        let mut carry = T::zero();
        for k in (0..n).rev() {
            carry = self.coeffs[k + 1].clone() + carry * r.clone();
            q[k] = carry.clone();
        }
        Polynomial::new(q)
    }
}

fn divisors<T: ExactScalar>(n: &T) -> Vec<T> {
    let mut out = Vec::new();
    let mut d = T::one();
    while d.clone() * d.clone() <= *n {
        if (n.clone() % d.clone()).is_zero() {
            out.push(d.clone());
            out.push(n.clone() / d.clone());
        }
        d = d + T::one();
    }
    out
}

impl<T: ExactScalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(first && k == 0) {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}
