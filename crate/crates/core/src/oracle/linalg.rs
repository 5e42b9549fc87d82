//! Exact linear algebra over ℚ(i).
//!
//! [`Echelon`] keeps rows over ℤ[i] and eliminates fraction-free
//! (`v ← p·v − v_c·row`), dividing every new row by its Gaussian content so
//! entries stay small. [`solve`] is plain field elimination for small square
//! systems.

use num_traits::Zero;

use crate::algebra::gaussint::{clear_denominators, GaussInt};
use crate::algebra::GaussianRational;

/// Incremental row-echelon basis of a growing span.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    width: usize,
    /// `(pivot column, row)`; the row is zero left of its pivot.
    rows: Vec<(usize, Vec<GaussInt>)>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Self { width, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    fn reduce(&self, v: &[GaussianRational]) -> Vec<GaussInt> {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let mut w = clear_denominators(v);
        for (c, row) in &self.rows {
            if w[*c].is_zero() {
                continue;
            }
            let p = &row[*c];
            let f = w[*c].clone();
            for (x, y) in w.iter_mut().zip(row) {
                *x = x.mul(p).sub(&f.mul(y));
            }
            remove_content(&mut w);
        }
        w
    }

    /// Whether `v` lies in the current span.
    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        self.reduce(v).iter().all(GaussInt::is_zero)
    }

    /// Adds `v`; returns `false` (and changes nothing) if it was dependent.
    pub fn insert(&mut self, v: &[GaussianRational]) -> bool {
        let w = self.reduce(v);
        match w.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(c) => {
                self.rows.push((c, w));
                true
            }
        }
    }
}

fn remove_content(w: &mut [GaussInt]) {
    let g = w.iter().fold(GaussInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.norm() == GaussInt::one().norm() {
        return;
    }
    for x in w.iter_mut() {
        *x = x.div_exact(&g).expect("content divides every entry");
    }
}

/// Rank of a list of vectors.
pub fn rank(vectors: &[Vec<GaussianRational>]) -> usize {
    let width = vectors.first().map_or(0, Vec::len);
    let mut e = Echelon::new(width);
    vectors.iter().filter(|v| e.insert(v)).count()
}

/// A solution of `A·x = b` (`A` given by rows), `None` if inconsistent.
/// Free variables are set to zero.
pub fn solve(a: &[Vec<GaussianRational>], b: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<GaussianRational>> =
        a.iter().zip(b).map(|(row, rhs)| row.iter().cloned().chain(std::iter::once(rhs.clone())).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![GaussianRational::zero(); cols];
    for (i, c) in pivots.into_iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}
