use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{LinalgError, Rat, UPoly};

pub type Exponents = Vec<u32>;

/// Sparse polynomial in `nvars` variables over the rationals. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rat::one());
        p
    }

    /// `Σ coeffs[i] · x_i`.
    pub fn linear(coeffs: &[Rat]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Exponents, Rat)>,
    ) -> Result<Self, LinalgError> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(LinalgError::DimensionMismatch {
                    expected: nvars,
                    found: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponents, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::constant(self.nvars, Rat::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat, LinalgError> {
        if point.len() != self.nvars {
            return Err(LinalgError::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// The univariate polynomial `t ↦ p(a + t·(b − a))`.
    pub fn restrict_to_segment(&self, a: &[Rat], b: &[Rat]) -> Result<UPoly, LinalgError> {
        for v in [a, b] {
            if v.len() != self.nvars {
                return Err(LinalgError::DimensionMismatch {
                    expected: self.nvars,
                    found: v.len(),
                });
            }
        }
        let lines: Vec<UPoly> = a
            .iter()
            .zip(b)
            .map(|(x, y)| UPoly::new(vec![x.clone(), y - x]))
            .collect();
        // Powers of each coordinate line, built lazily up to the needed degree.
        let mut powers: Vec<Vec<UPoly>> = vec![vec![UPoly::constant(Rat::one())]; self.nvars];
        let mut out = UPoly::zero();
        for (e, c) in &self.terms {
            let mut t = UPoly::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = &powers[i][powers[i].len() - 1] * &lines[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    t = &t * &powers[i][k];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Terms in graded-lexicographic order, largest first.
    pub fn grlex_terms(&self) -> Vec<(&Exponents, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| grlex_cmp(b, a));
        v
    }

    /// Canonical rendering: grlex order (largest first), variables named by
    /// `names`, rational coefficients as `p/q`, e.g. `xi_Y^2 - 1/2*xi_X*xi_Y + 3`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.grlex_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            let is_const = e.iter().all(|&k| k == 0);
            if is_const || !mag.is_one() {
                factors.push(alloc::format!("{mag}"));
            }
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => {
                        let mut s = names[i].clone();
                        let _ = write!(s, "^{k}");
                        factors.push(s);
                    }
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// Graded lexicographic comparison: total degree first, then lexicographic
/// with variable 0 most significant.
pub(crate) fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &(-rhs)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};
    use alloc::string::ToString;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| alloc::format!("x{i}")).collect()
    }

    #[test]
    fn arithmetic_cancels_to_zero() {
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let s = &x + &y;
        let d = &x - &y;
        let lhs = &s * &d;
        let rhs = &(&x * &x) - &(&y * &y);
        assert_eq!(lhs, rhs);
        assert!((&lhs - &rhs).is_zero());
        assert_eq!(lhs.num_terms(), 2);
    }

    #[test]
    fn rendering_is_grlex() {
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let p = &(&(&y * &y) - &(&x * &y).scale(&rat(1, 2))) + &MPoly::constant(2, int(3));
        let p = &p + &x.scale(&int(-1));
        assert_eq!(p.render(&names(2)), "-1/2*x0*x1 + x1^2 - x0 + 3");
        assert_eq!(MPoly::zero(3).render(&names(3)), "0");
        assert_eq!(MPoly::constant(1, int(-2)).render(&names(1)), "-2");
    }

    #[test]
    fn segment_restriction_matches_pointwise_evaluation() {
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let p = &(&(&x * &x) * &y) - &y.scale(&int(3));
        let a = [int(1), rat(-1, 2)];
        let b = [int(-2), int(3)];
        let u = p.restrict_to_segment(&a, &b).unwrap();
        for t in [int(0), int(1), rat(1, 3), rat(-5, 2)] {
            let pt: Vec<Rat> = a.iter().zip(&b).map(|(ai, bi)| ai + &t * (bi - ai)).collect();
            assert_eq!(u.eval(&t), p.eval(&pt).unwrap(), "t = {}", t.to_string());
        }
    }

    #[test]
    fn eval_checks_arity() {
        assert!(MPoly::var(2, 0).eval(&[int(1)]).is_err());
    }
}
