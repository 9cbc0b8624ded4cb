use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ad_matrix, LieAlgebra};
use crate::linalg::{real_root_count, Mat, Rat, UPoly};
use crate::sampling::{random_rat, rng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExponentialityStatus {
    /// Some `ad(X)` has a nonzero purely imaginary eigenvalue; the group is
    /// provably not exponential.
    CertifiedNo,
    /// No candidate `X` refuted exponentiality. Not a proof.
    HeuristicYes,
    /// The caller asserted exponentiality.
    Asserted,
}

impl ExponentialityStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::CertifiedNo => "certified_no",
            Self::HeuristicYes => "heuristic_yes",
            Self::Asserted => "asserted",
        }
    }
}

/// Outcome of the spectral screen. `witness` is present exactly when the
/// status is [`ExponentialityStatus::CertifiedNo`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentialityVerdict {
    pub status: ExponentialityStatus,
    pub witness: Option<Vec<Rat>>,
    /// Number of elements whose adjoint spectrum was examined.
    pub candidates_checked: usize,
}

impl ExponentialityVerdict {
    pub fn asserted() -> Self {
        Self {
            status: ExponentialityStatus::Asserted,
            witness: None,
            candidates_checked: 0,
        }
    }

    pub fn is_refuted(&self) -> bool {
        self.status == ExponentialityStatus::CertifiedNo
    }
}

/// Characteristic polynomial `det(λI − A)` by the Faddeev–LeVerrier
/// recurrence, exact over the rationals.
pub fn characteristic_polynomial(a: &Mat) -> UPoly {
    let n = a.rows();
    assert_eq!(n, a.cols(), "characteristic polynomial needs a square matrix");
    let mut coeffs = alloc::vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut m = Mat::zeros(n, n);
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I
        let mut next = a.mul(&m).expect("square");
        for i in 0..n {
            let v = next.get(i, i) + &coeffs[n - k + 1];
            next.set(i, i, v);
        }
        let am = a.mul(&next).expect("square");
        let trace = (0..n).fold(Rat::zero(), |acc, i| acc + am.get(i, i));
        coeffs[n - k] = -trace / Rat::from_integer(BigInt::from(k));
        m = next;
    }
    UPoly::new(coeffs)
}

/// Whether `p(iμ) = 0` for some real `μ ≠ 0`.
///
/// Splits `p(iμ)` into real and imaginary parts, both real polynomials in
/// `μ`, and counts nonzero real roots of their gcd exactly.
pub fn has_nonzero_imaginary_root(p: &UPoly) -> bool {
    let mut re = Vec::with_capacity(p.coeffs().len());
    let mut im = Vec::with_capacity(p.coeffs().len());
    for (k, c) in p.coeffs().iter().enumerate() {
        // i^k = 1, i, -1, -i
        let (r, i) = match k % 4 {
            0 => (c.clone(), Rat::zero()),
            1 => (Rat::zero(), c.clone()),
            2 => (-c, Rat::zero()),
            _ => (Rat::zero(), -c),
        };
        re.push(r);
        im.push(i);
    }
    let mut g = UPoly::new(re).gcd(&UPoly::new(im));
    if g.is_zero() {
        return false;
    }
    let mu = UPoly::linear_factor(&Rat::zero());
    while g.degree().unwrap_or(0) > 0 && g.eval(&Rat::zero()).is_zero() {
        g = g.div_rem(&mu).0;
    }
    real_root_count(&g).map(|n| n > 0).unwrap_or(false)
}

/// Screens the exponentiality hypothesis with the classical spectral
/// criterion: the group is not exponential when some `ad(X)` has a nonzero
/// purely imaginary eigenvalue.
///
/// Basis vectors are tested first, then `trials` random rational
/// combinations drawn deterministically from `seed`.
pub fn exponentiality_check(l: &LieAlgebra, seed: u64, trials: usize) -> ExponentialityVerdict {
    let n = l.dim();
    let mut rng = rng(seed);
    let candidates = (0..n)
        .map(|i| l.unit(i))
        .chain((0..trials).map(|_| (0..n).map(|_| random_rat(&mut rng, 10, 8)).collect()));
    let mut checked = 0;
    for x in candidates {
        checked += 1;
        let ad = ad_matrix(l, &x).expect("candidate has algebra dimension");
        if has_nonzero_imaginary_root(&characteristic_polynomial(&ad)) {
            return ExponentialityVerdict {
                status: ExponentialityStatus::CertifiedNo,
                witness: Some(x),
                candidates_checked: checked,
            };
        }
    }
    ExponentialityVerdict {
        status: ExponentialityStatus::HeuristicYes,
        witness: None,
        candidates_checked: checked,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog;
    use crate::linalg::int;

    #[test]
    fn faddeev_leverrier_small() {
        // [[2,1],[1,2]]: λ² − 4λ + 3
        let a = Mat::from_i64(2, 2, &[2, 1, 1, 2]).unwrap();
        assert_eq!(characteristic_polynomial(&a), UPoly::from_i64(&[3, -4, 1]));
        assert_eq!(characteristic_polynomial(&Mat::zeros(0, 0)), UPoly::from_i64(&[1]));
    }

    #[test]
    fn oscillator_ad_h() {
        let osc = catalog("oscillator", &[]).unwrap();
        let ad = ad_matrix(&osc, &osc.unit(0)).unwrap();
        // λ²(λ² + 1)
        assert_eq!(characteristic_polynomial(&ad), UPoly::from_i64(&[0, 0, 1, 0, 1]));
    }

    #[test]
    fn imaginary_root_detection() {
        assert!(has_nonzero_imaginary_root(&UPoly::from_i64(&[0, 0, 1, 0, 1])));
        assert!(has_nonzero_imaginary_root(&UPoly::from_i64(&[4, 0, 1])));
        // λ² (only the zero root), λ² − 1 (real), λ² + 2λ + 2 (roots −1 ± i)
        assert!(!has_nonzero_imaginary_root(&UPoly::from_i64(&[0, 0, 1])));
        assert!(!has_nonzero_imaginary_root(&UPoly::from_i64(&[-1, 0, 1])));
        assert!(!has_nonzero_imaginary_root(&UPoly::from_i64(&[2, 2, 1])));
    }

    #[test]
    fn screen_verdicts() {
        for name in ["oscillator", "e2"] {
            let v = exponentiality_check(&catalog(name, &[]).unwrap(), 0, 10);
            assert_eq!(v.status, ExponentialityStatus::CertifiedNo);
            let w = v.witness.unwrap();
            assert_eq!(w[0], int(1));
            assert!(w[1..].iter().all(Zero::is_zero));
        }
        let v = exponentiality_check(&catalog("axb", &[]).unwrap(), 0, 20);
        assert_eq!(v.status, ExponentialityStatus::HeuristicYes);
        assert_eq!(v.witness, None);
        assert_eq!(v.candidates_checked, 22);
    }
}
