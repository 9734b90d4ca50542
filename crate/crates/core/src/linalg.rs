//! Exact linear algebra over `Z` and `Q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type RatVec = Vec<BigRational>;

/// Rank of an integer matrix by Bareiss fraction-free elimination. Every
/// intermediate entry is a minor of the input, so growth stays polynomial.
pub fn rank_fraction_free(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for c in col + 1..ncols {
                let v = &pivot * &row[c] - &factor * &pivot_row[c];
                row[c] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(mut m: Vec<RatVec>) -> (Vec<RatVec>, Vec<usize>) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                if !pv.is_zero() {
                    row[c] -= &factor * pv;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank_rational(rows: &[RatVec]) -> usize {
    rref(rows.to_vec()).1.len()
}

/// Basis of `{x : A x = 0}` for `A` with `ncols` columns, one vector per free
/// column (that column set to 1, other free columns 0).
pub fn nullspace(rows: &[RatVec], ncols: usize) -> Vec<RatVec> {
    let (reduced, pivots) = rref(rows.to_vec());
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![BigRational::zero(); ncols];
            x[free] = BigRational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                x[p] = -row[free].clone();
            }
            x
        })
        .collect()
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[BigRational], b: &[BigRational]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Scales a rational vector to a primitive integer vector with the same sign
/// pattern and direction.
pub fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g.abs()).collect()
}

/// Row-echelon basis that grows one vector at a time.
#[derive(Clone, Debug, Default)]
pub struct IncrementalBasis {
    rows: Vec<(usize, RatVec)>,
}

impl IncrementalBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the current span; returns whether it was.
    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        let mut w = v.to_vec();
        for (pivot, row) in &self.rows {
            if !w[*pivot].is_zero() {
                let factor = w[*pivot].clone();
                for (x, y) in w.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
            }
        }
        match w.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                let inv = w[p].recip();
                for x in w.iter_mut() {
                    *x *= &inv;
                }
                self.rows.push((p, w));
                true
            }
            None => false,
        }
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
