use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::One;

use super::{LinalgError, MPoly, Rat};

/// Square matrix with multivariate polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    nvars: usize,
    entries: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn zeros(n: usize, nvars: usize) -> Self {
        Self {
            n,
            nvars,
            entries: (0..n * n).map(|_| MPoly::zero(nvars)).collect(),
        }
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<MPoly>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(LinalgError::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            for e in row {
                if e.nvars() != nvars {
                    return Err(LinalgError::DimensionMismatch {
                        expected: nvars,
                        found: e.nvars(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(Self { n, nvars, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, r: usize, c: usize) -> &MPoly {
        &self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: MPoly) {
        self.entries[r * self.n + c] = p;
    }

    /// First violation of `m[j][k] = -m[k][j]` with zero diagonal, if any.
    pub fn skew_violation(&self) -> Option<(usize, usize)> {
        for j in 0..self.n {
            if !self.get(j, j).is_zero() {
                return Some((j, j));
            }
            for k in j + 1..self.n {
                if !(self.get(j, k) + self.get(k, j)).is_zero() {
                    return Some((j, k));
                }
            }
        }
        None
    }

    /// Entrywise evaluation at a point.
    pub fn eval(&self, point: &[Rat]) -> Result<super::Mat, LinalgError> {
        let data = self
            .entries
            .iter()
            .map(|p| p.eval(point))
            .collect::<Result<Vec<_>, _>>()?;
        super::Mat::new(self.n, self.n, data)
    }
}

/// Pfaffian of a skew-symmetric polynomial matrix, by expansion along the first
/// remaining row. Sub-Pfaffians are memoized by their index set. Odd sizes give
/// the zero polynomial.
pub fn sym_pfaffian(m: &PolyMatrix) -> Result<MPoly, LinalgError> {
    if let Some((row, col)) = m.skew_violation() {
        return Err(LinalgError::NotSkew { row, col });
    }
    if m.n % 2 == 1 {
        return Ok(MPoly::zero(m.nvars));
    }
    assert!(m.n <= 64, "Pfaffian expansion supports at most 64 rows");
    let all: u64 = if m.n == 64 { u64::MAX } else { (1u64 << m.n) - 1 };
    let mut memo = BTreeMap::new();
    Ok(pfaffian_rec(m, all, &mut memo))
}

fn pfaffian_rec(m: &PolyMatrix, set: u64, memo: &mut BTreeMap<u64, MPoly>) -> MPoly {
    if set == 0 {
        return MPoly::constant(m.nvars, Rat::one());
    }
    if let Some(p) = memo.get(&set) {
        return p.clone();
    }
    let first = set.trailing_zeros() as usize;
    let rest = set & !(1u64 << first);
    let mut acc = MPoly::zero(m.nvars);
    let mut negative = false;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let entry = m.get(first, j);
        if !entry.is_zero() {
            let minor = pfaffian_rec(m, rest & !(1u64 << j), memo);
            if !minor.is_zero() {
                let term = entry * &minor;
                acc = if negative { &acc - &term } else { &acc + &term };
            }
        }
        negative = !negative;
    }
    memo.insert(set, acc.clone());
    acc
}

/// Determinant of a polynomial matrix: `Pf²` when skew, Laplace expansion
/// along rows (memoized over column sets) otherwise.
pub fn sym_det(m: &PolyMatrix) -> MPoly {
    if m.skew_violation().is_none() {
        let pf = sym_pfaffian(m).expect("skew checked");
        return &pf * &pf;
    }
    laplace_det(m)
}

pub(crate) fn laplace_det(m: &PolyMatrix) -> MPoly {
    assert!(m.n < 64, "Laplace expansion supports fewer than 64 rows");
    let mut memo = BTreeMap::new();
    laplace_rec(m, 0, (1u64 << m.n) - 1, &mut memo)
}

fn laplace_rec(m: &PolyMatrix, row: usize, cols: u64, memo: &mut BTreeMap<u64, MPoly>) -> MPoly {
    if cols == 0 {
        return MPoly::constant(m.nvars, Rat::one());
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = MPoly::zero(m.nvars);
    let mut negative = false;
    let mut bits = cols;
    while bits != 0 {
        let c = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let entry = m.get(row, c);
        if !entry.is_zero() {
            let minor = laplace_rec(m, row + 1, cols & !(1u64 << c), memo);
            let term = entry * &minor;
            acc = if negative { &acc - &term } else { &acc + &term };
        }
        negative = !negative;
    }
    memo.insert(cols, acc.clone());
    acc
}
