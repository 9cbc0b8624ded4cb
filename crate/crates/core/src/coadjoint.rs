//! Coadjoint-orbit analysis: the skew form `B_ξ(X, Y) = ⟨ξ, [X, Y]⟩`, the
//! polynomial `P(ξ) = det B_ξ`, and detection of open orbits.
//!
//! The orbit through `ξ` is open exactly when `B_ξ` is nondegenerate, i.e.
//! `P(ξ) ≠ 0`; the union of open orbits is `{P ≠ 0}`, whose path components
//! are the open orbits.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::lie::{LieAlgebra, LieError};
use crate::linalg::{sturm_root_count, sym_pfaffian, MPoly, Mat, PolyMatrix, Rat, Subspace};
use crate::sampling::{random_rat, rng};

/// A point of `g*` in dual-basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoadjointPoint(Vec<Rat>);

impl CoadjointPoint {
    pub fn new(l: &LieAlgebra, coords: Vec<Rat>) -> Result<Self, LieError> {
        if coords.len() != l.dim() {
            return Err(LieError::DimensionMismatch {
                expected: l.dim(),
                found: coords.len(),
            });
        }
        Ok(Self(coords))
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPointData {
    /// `dim g − dim g(ξ)`, always even.
    pub orbit_dim: usize,
    /// The isotropy algebra `g(ξ) = ker B_ξ`.
    pub isotropy: Subspace,
    pub open: bool,
}

/// A segment between two samples on which `P` has no zero, proving both lie
/// in the same path component of `{P ≠ 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CertificateEdge {
    pub from: usize,
    pub to: usize,
    pub root_free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentEstimate {
    pub sample_count: usize,
    pub seed: u64,
    pub component_count: usize,
    /// Accepted sample points, in draw order.
    pub points: Vec<Vec<Rat>>,
    /// Points drawn on the zero set `P = 0` and discarded.
    pub rejected: usize,
    /// A spanning forest of the certificate graph.
    pub certificates: Vec<CertificateEdge>,
    /// Component label of every accepted point (smallest member index).
    pub labels: Vec<usize>,
}

/// `B_ξ` as a matrix of linear forms: entry `(j, k)` is `Σ_l c_{jk}^l ξ_l`.
pub fn b_matrix_sym(l: &LieAlgebra) -> PolyMatrix {
    let n = l.dim();
    let mut m = PolyMatrix::zeros(n, n);
    for (&(j, k), c) in l.brackets() {
        let form = MPoly::linear(c);
        m.set(k, j, -&form);
        m.set(j, k, form);
    }
    m
}

/// `Pf(B_ξ)`; zero for odd dimension.
pub fn pfaffian_polynomial(l: &LieAlgebra) -> MPoly {
    sym_pfaffian(&b_matrix_sym(l)).expect("B_ξ is skew by construction")
}

/// `P(ξ) = det B_ξ = Pf(B_ξ)²`, identically zero in odd dimension.
pub fn p_polynomial(l: &LieAlgebra) -> MPoly {
    let pf = pfaffian_polynomial(l);
    &pf * &pf
}

/// `B_ξ` evaluated at a point.
pub fn b_matrix_at(l: &LieAlgebra, xi: &[Rat]) -> Result<Mat, LieError> {
    let n = l.dim();
    if xi.len() != n {
        return Err(LieError::DimensionMismatch {
            expected: n,
            found: xi.len(),
        });
    }
    let mut m = Mat::zeros(n, n);
    for (&(j, k), c) in l.brackets() {
        let v = c
            .iter()
            .zip(xi)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b);
        m.set(k, j, -v.clone());
        m.set(j, k, v);
    }
    Ok(m)
}

/// Whether some coadjoint orbit is open, i.e. `P ≢ 0`.
///
/// A few random evaluations are tried first (a nonzero value settles it);
/// a negative answer always comes from the expanded polynomial.
pub fn has_open_orbits(l: &LieAlgebra) -> bool {
    let n = l.dim();
    if n % 2 == 1 {
        return false;
    }
    let mut r = rng(0x0b17);
    for _ in 0..4 {
        let xi: Vec<Rat> = (0..n).map(|_| random_rat(&mut r, 10, 64)).collect();
        if b_matrix_at(l, &xi).expect("matching length").rank() == n {
            return true;
        }
    }
    !pfaffian_polynomial(l).is_zero()
}

pub fn orbit_data_at(l: &LieAlgebra, xi: &CoadjointPoint) -> Result<OrbitPointData, LieError> {
    let b = b_matrix_at(l, xi.coords())?;
    let rank = b.rank();
    let isotropy = b.kernel_basis();
    Ok(OrbitPointData {
        orbit_dim: rank,
        open: isotropy.dim() == 0,
        isotropy,
    })
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn find(&mut self, i: usize) -> usize {
        let mut root = i;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = i;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    /// Links the larger root under the smaller one so roots stay minimal.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.0[hi] = lo;
    }
}

/// Whether `f` has no zero on the closed segment `[a, b]`, given `f(a)` and
/// `f(b)` are nonzero.
fn segment_root_free(f: &MPoly, a: &[Rat], b: &[Rat], fa: &Rat, fb: &Rat) -> bool {
    if fa.is_positive() != fb.is_positive() {
        return false;
    }
    let u = f.restrict_to_segment(a, b).expect("points have algebra dimension");
    sturm_root_count(&u, &Rat::zero(), &Rat::one()).expect("nonzero restriction") == 0
}

/// Certified sampling estimate of the number of open coadjoint orbits.
///
/// Draws `samples` points of `[-10, 10]^dim` (denominators ≤ 64) off the zero
/// set of `P`, and joins two points when `P` has no root on the segment
/// between them (checked exactly with a Sturm sequence). Each edge proves its
/// endpoints share a path component of `{P ≠ 0}`, so the number of graph
/// components never undercounts the components the samples hit.
///
/// Only a spanning forest is materialised: pairs already known to be
/// connected are not tested, which leaves the component count unchanged.
pub fn estimate_open_orbit_components(l: &LieAlgebra, samples: usize, seed: u64) -> ComponentEstimate {
    let n = l.dim();
    let mut estimate = ComponentEstimate {
        sample_count: samples,
        seed,
        component_count: 0,
        points: Vec::new(),
        rejected: 0,
        certificates: Vec::new(),
        labels: Vec::new(),
    };
    if !has_open_orbits(l) {
        return estimate;
    }
    // P and Pf share their zero set; the Pfaffian has half the degree.
    let pf = pfaffian_polynomial(l);
    let mut r = rng(seed);
    let mut values = Vec::with_capacity(samples);
    while estimate.points.len() < samples {
        let xi: Vec<Rat> = (0..n).map(|_| random_rat(&mut r, 10, 64)).collect();
        let v = pf.eval(&xi).expect("matching length");
        if v.is_zero() {
            estimate.rejected += 1;
            continue;
        }
        estimate.points.push(xi);
        values.push(v);
    }

    let mut sets = DisjointSets((0..samples).collect());
    for j in 0..samples {
        for i in 0..j {
            if sets.find(i) == sets.find(j) {
                continue;
            }
            let (a, b) = (&estimate.points[i], &estimate.points[j]);
            if segment_root_free(&pf, a, b, &values[i], &values[j]) {
                sets.union(i, j);
                estimate.certificates.push(CertificateEdge {
                    from: i,
                    to: j,
                    root_free: true,
                });
            }
        }
    }
    estimate.labels = (0..samples).map(|i| sets.find(i)).collect();
    estimate.component_count = (0..samples).filter(|&i| estimate.labels[i] == i).count();
    estimate
}
