//! Exact linear algebra over integer vectors.
//!
//! Everything here is fraction-free: vectors are reduced against an
//! echelon basis by integer cross-multiplication, and each stored row is
//! divided by its content so entries stay small. Rational solving is only
//! used to express a vector in a given basis.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::scalar::ExactScalar;

/// Incrementally built echelon basis of a subspace of `T^dim`.
///
/// Each stored row has a distinct pivot (its first nonzero entry), rows are
/// kept sorted by pivot, and every row is primitive with a positive pivot.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    dim: usize,
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: ExactScalar> Echelon<T> {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new() }
    }

    pub fn from_rows<'a, I>(dim: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = &'a [T]>,
    {
        let mut e = Echelon::new(dim);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis. The result is zero iff `v` lies in
    /// the span.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.dim, "vector has wrong dimension");
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let g = row[*p].gcd(&v[*p]);
            let scale_v = row[*p].clone() / g.clone();
            let scale_r = v[*p].clone() / g;
            for k in 0..self.dim {
                v[k] = v[k].clone() * scale_v.clone() - row[k].clone() * scale_r.clone();
            }
            normalize(&mut v);
        }
        v
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the spanning set. Returns `true` if the rank grew.
    pub fn insert(&mut self, v: &[T]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        normalize(&mut r);
        if r[p].is_negative() {
            r.iter_mut().for_each(|x| *x = -x.clone());
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, r));
        true
    }
}

/// Divides a vector by the gcd of its entries.
fn normalize<T: ExactScalar>(v: &mut [T]) {
    let g = v.iter().fold(T::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        v.iter_mut().for_each(|x| *x = x.clone() / g.clone());
    }
}

/// Dimension of the span of `rows`.
pub fn rank<T: ExactScalar>(dim: usize, rows: &[Vec<T>]) -> usize {
    Echelon::from_rows(dim, rows.iter().map(Vec::as_slice)).rank()
}

/// Whether `v` lies in the span of `rows`.
pub fn in_span<T: ExactScalar>(dim: usize, rows: &[Vec<T>], v: &[T]) -> bool {
    Echelon::from_rows(dim, rows.iter().map(Vec::as_slice)).contains(v)
}

/// Coefficients `c` with `v = Σ c_i basis_i`, or `None` if `v` is outside the
/// span. `basis` must be linearly independent.
pub fn solve_in_basis<T: ExactScalar>(basis: &[Vec<T>], v: &[T]) -> Option<Vec<Ratio<T>>> {
    let k = basis.len();
    let dim = v.len();
    // Augmented system with one row per coordinate: [b_1 .. b_k | v].
    let mut m: Vec<Vec<Ratio<T>>> = (0..dim)
        .map(|row| {
            basis
                .iter()
                .map(|b| Ratio::from_integer(b[row].clone()))
                .chain(std::iter::once(Ratio::from_integer(v[row].clone())))
                .collect()
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(k);
    for col in 0..k {
        let r = (pivot_row..dim).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot_row, r);
        let inv = Ratio::one() / m[pivot_row][col].clone();
        for x in m[pivot_row].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..dim {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=k {
                    let d = m[pivot_row][c].clone() * f.clone();
                    m[r][c] = m[r][c].clone() - d;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if (pivot_row..dim).any(|r| !m[r][k].is_zero()) {
        return None;
    }
    Some(pivots.into_iter().map(|r| m[r][k].clone()).collect())
}

/// `u^T G v` for a square integer matrix `G`.
pub fn bilinear<T: ExactScalar>(gram: &[Vec<T>], u: &[T], v: &[T]) -> T {
    let mut acc = T::zero();
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            acc = acc + ui.clone() * gram[i][j].clone() * vj.clone();
        }
    }
    acc
}

/// Exact quotient `a / b` when `b` divides `a`.
pub fn exact_div<T: ExactScalar>(a: &T, b: &T) -> Option<T> {
    let (q, r) = a.div_rem(b);
    r.is_zero().then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![vec![1i64, 1, 0], vec![0, 1, 1], vec![1, 2, 1]];
        assert_eq!(rank(3, &rows), 2);
        assert!(in_span(3, &rows, &[2, 3, 1]));
        assert!(!in_span(3, &rows, &[0, 0, 1]));
        assert_eq!(rank::<i64>(3, &[]), 0);
    }

    #[test]
    fn solve_with_half_coefficients() {
        // (1,0) = ½(1,1) + ½(1,-1)
        let basis = vec![vec![1i64, 1], vec![1, -1]];
        let c = solve_in_basis(&basis, &[1, 0]).unwrap();
        assert_eq!(c, vec![Ratio::new(1, 2), Ratio::new(1, 2)]);
        assert!(solve_in_basis(&[vec![1i64, 1, 0]], &[1, 0, 0]).is_none());
    }

    #[test]
    fn generic_over_i128() {
        let rows: Vec<Vec<i128>> = vec![vec![2, 4, 6], vec![3, 6, 9]];
        assert_eq!(rank(3, &rows), 1);
    }

    #[test]
    fn pivot_rows_are_primitive() {
        let mut e = Echelon::<i64>::new(2);
        e.insert(&[4, 6]);
        assert_eq!(e.reduce(&[2, 3]), vec![0, 0]);
        assert!(!e.insert(&[-6, -9]));
    }

    #[test]
    fn entries_left_of_a_pivot_are_scaled() {
        let e = Echelon::from_rows(4, [&[0i64, 0, 0, 1][..], &[0, 2, 1, 0], &[1, 1, 1, 1]]);
        assert!(e.contains(&[1, 1, 1, 0]));
        assert!(!e.contains(&[0, 1, 0, 0]));
    }
}
