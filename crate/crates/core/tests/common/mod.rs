//! Oracles and generators shared by the integration tests. Nothing here calls
//! into the library's algorithms; the oracles are deliberately naive.

#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use orbit_rank_core::lie::{catalog, BracketEntry};
use orbit_rank_core::linalg::{int, Rat};
use orbit_rank_core::{LieAlgebra, Mat};
use proptest::prelude::*;

pub fn r(n: i64) -> Rat {
    int(n)
}

pub fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Determinant by cofactor expansion along the first row, memoised on the
/// set of remaining columns.
pub fn cofactor_det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut memo = std::collections::HashMap::new();
    fn go(m: &[Vec<Rat>], row: usize, cols: u32, memo: &mut std::collections::HashMap<u32, Rat>) -> Rat {
        let n = m.len();
        if row == n {
            return Rat::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = Rat::zero();
        let mut sign_index = 0;
        for c in 0..n {
            if cols & (1 << c) == 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let minor = go(m, row + 1, cols & !(1 << c), memo);
                let term = &m[row][c] * minor;
                if sign_index % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            sign_index += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    go(m, 0, (1u32 << n) - 1, &mut memo)
}

/// Rank as the size of the largest nonvanishing minor.
pub fn minor_rank(m: &[Vec<Rat>], cols: usize) -> usize {
    let rows = m.len();
    let mut best = 0;
    for row_mask in 0u32..(1 << rows) {
        let k = row_mask.count_ones() as usize;
        if k <= best || k > cols {
            continue;
        }
        for col_mask in 0u32..(1 << cols) {
            if col_mask.count_ones() as usize != k {
                continue;
            }
            let sub: Vec<Vec<Rat>> = (0..rows)
                .filter(|i| row_mask & (1 << i) != 0)
                .map(|i| {
                    (0..cols)
                        .filter(|j| col_mask & (1 << j) != 0)
                        .map(|j| m[i][j].clone())
                        .collect()
                })
                .collect();
            if !cofactor_det(&sub).is_zero() {
                best = k;
                break;
            }
        }
    }
    best
}

/// Structure constants `c[j][k][l]` of an algebra, read off basis brackets.
pub fn structure_tensor(l: &LieAlgebra) -> Vec<Vec<Vec<Rat>>> {
    let n = l.dim();
    let mut c = vec![vec![vec![Rat::zero(); n]; n]; n];
    for (&(j, k), v) in l.brackets() {
        for (idx, x) in v.iter().enumerate() {
            c[j][k][idx] = x.clone();
            c[k][j][idx] = -x.clone();
        }
    }
    c
}

/// First triple `i < j < k` (lexicographic) at which the Jacobi identity
/// fails for the raw tensor `c`, with the residual
/// `[[i,j],k] + [[j,k],i] + [[k,i],j]`.
pub fn jacobi_oracle(c: &[Vec<Vec<Rat>>]) -> Option<(usize, usize, usize, Vec<Rat>)> {
    let n = c.len();
    let br = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); n];
        for a in 0..n {
            for b in 0..n {
                if x[a].is_zero() || y[b].is_zero() {
                    continue;
                }
                for t in 0..n {
                    out[t] += &x[a] * &y[b] * &c[a][b][t];
                }
            }
        }
        out
    };
    let unit = |i: usize| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); n];
        v[i] = Rat::one();
        v
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (ei, ej, ek) = (unit(i), unit(j), unit(k));
                let a = br(&br(&ei, &ej), &ek);
                let b = br(&br(&ej, &ek), &ei);
                let d = br(&br(&ek, &ei), &ej);
                let res: Vec<Rat> = (0..n).map(|t| &a[t] + &b[t] + &d[t]).collect();
                if res.iter().any(|x| !x.is_zero()) {
                    return Some((i, j, k, res));
                }
            }
        }
    }
    None
}

pub fn table_from_tensor(c: &[Vec<Vec<Rat>>]) -> Vec<BracketEntry> {
    let n = c.len();
    let mut table = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            table.push(BracketEntry::new(j, k, c[j][k].clone()));
        }
    }
    table
}

/// `ℝ ⋉_D ℝ^k`: `[X0, Xi] = Σ_j D[j][i] Xj`.
pub fn semidirect(d: &[Vec<i64>]) -> LieAlgebra {
    let k = d.len();
    let n = k + 1;
    let table = (0..k)
        .map(|i| {
            let mut v = vec![Rat::zero(); n];
            for j in 0..k {
                v[j + 1] = r(d[j][i]);
            }
            BracketEntry::new(0, i + 1, v)
        })
        .collect();
    LieAlgebra::validate(n, names("X", n), table).unwrap()
}

/// Two-step nilpotent: `p` generators bracketing into `q` central elements.
pub fn two_step(p: usize, q: usize, coeffs: &[i64]) -> LieAlgebra {
    let n = p + q;
    let mut table = Vec::new();
    let mut it = coeffs.iter().cycle();
    for a in 0..p {
        for b in a + 1..p {
            let mut v = vec![Rat::zero(); n];
            for z in 0..q {
                v[p + z] = r(*it.next().unwrap());
            }
            table.push(BracketEntry::new(a, b, v));
        }
    }
    LieAlgebra::validate(n, names("X", n), table).unwrap()
}

pub fn random_invertible(n: usize, entries: &[i64]) -> Mat {
    let mut rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| r(entries[(i * n + j) % entries.len()])).collect())
        .collect();
    // Make it diagonally dominant, hence invertible.
    for (i, row) in rows.iter_mut().enumerate() {
        let off: Rat = row.iter().map(|x| x.abs()).fold(Rat::zero(), |a, b| a + b);
        row[i] = off + Rat::one();
    }
    Mat::from_rows(n, &rows).unwrap()
}

pub fn catalog_entries() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("abelian", vec!["1"]),
        ("abelian", vec!["2"]),
        ("abelian", vec!["3"]),
        ("axb", vec![]),
        ("heisenberg", vec!["1"]),
        ("heisenberg", vec!["2"]),
        ("filiform", vec!["3"]),
        ("filiform", vec!["4"]),
        ("filiform", vec!["5"]),
        ("grelaud", vec!["1"]),
        ("grelaud", vec!["-1/2"]),
        ("grelaud", vec!["0"]),
        ("oscillator", vec![]),
        ("e2", vec![]),
        ("sl2", vec![]),
    ]
}

pub fn catalog_algebras() -> Vec<(String, LieAlgebra)> {
    catalog_entries()
        .into_iter()
        .map(|(name, params)| {
            let label = if params.is_empty() {
                name.to_string()
            } else {
                format!("{name}:{}", params.join(":"))
            };
            (label, catalog(name, &params).unwrap())
        })
        .collect()
}

/// Valid algebras of dimension 1..=6 from three independent families, the
/// catalog ones seen in a random basis.
pub fn arb_algebra() -> impl Strategy<Value = LieAlgebra> {
    let semi = (1usize..=5)
        .prop_flat_map(|k| prop::collection::vec(prop::collection::vec(-3i64..=3, k), k))
        .prop_map(|d| semidirect(&d));
    let nil = (2usize..=4, 1usize..=2, prop::collection::vec(-2i64..=2, 1..12))
        .prop_map(|(p, q, c)| two_step(p, q, &c));
    let rebased = (0usize..12, prop::collection::vec(-2i64..=2, 36)).prop_map(|(i, e)| {
        let (_, l) = catalog_algebras().swap_remove(i);
        l.change_basis(&random_invertible(l.dim(), &e)).unwrap()
    });
    prop_oneof![semi, nil, rebased]
}

/// Square-free part by naive Euclid over the rationals, coefficients low
/// degree first.
pub fn poly_trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn poly_rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut a = poly_trim(a.to_vec());
    let b = poly_trim(b.to_vec());
    while a.len() >= b.len() && !a.is_empty() {
        let shift = a.len() - b.len();
        let f = a.last().unwrap() / b.last().unwrap();
        for (i, c) in b.iter().enumerate() {
            a[i + shift] -= &f * c;
        }
        a = poly_trim(a);
    }
    a
}

pub fn poly_div(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut a = poly_trim(a.to_vec());
    let b = poly_trim(b.to_vec());
    if a.len() < b.len() {
        return vec![];
    }
    let mut q = vec![Rat::zero(); a.len() - b.len() + 1];
    while a.len() >= b.len() && !a.is_empty() {
        let shift = a.len() - b.len();
        let f = a.last().unwrap() / b.last().unwrap();
        for (i, c) in b.iter().enumerate() {
            a[i + shift] -= &f * c;
        }
        q[shift] = f;
        a = poly_trim(a);
    }
    q
}

pub fn poly_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let (mut a, mut b) = (poly_trim(a.to_vec()), poly_trim(b.to_vec()));
    while !b.is_empty() {
        let rem = poly_rem(&a, &b);
        a = b;
        b = rem;
    }
    a
}

pub fn poly_eval(p: &[Rat], x: &Rat) -> Rat {
    p.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
}

fn squarefree(p: &[Rat]) -> Vec<Rat> {
    let deriv: Vec<Rat> = p.iter().enumerate().skip(1).map(|(i, c)| c * r(i as i64)).collect();
    let g = poly_gcd(p, &deriv);
    poly_div(p, &g)
}

/// Coefficients of `(1+t)^d · q((a + b t)/(1 + t))`, whose positive roots
/// correspond to the roots of `q` in `(a, b)`.
fn moebius(q: &[Rat], a: &Rat, b: &Rat) -> Vec<Rat> {
    let d = q.len() - 1;
    let mut out = vec![Rat::zero(); d + 1];
    for (i, c) in q.iter().enumerate() {
        // (a + b t)^i (1 + t)^(d - i)
        let mut term = vec![c.clone()];
        for _ in 0..i {
            term = mul_linear(&term, a, b);
        }
        for _ in 0..d - i {
            term = mul_linear(&term, &Rat::one(), &Rat::one());
        }
        for (k, x) in term.into_iter().enumerate() {
            out[k] += x;
        }
    }
    out
}

fn mul_linear(p: &[Rat], c0: &Rat, c1: &Rat) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); p.len() + 1];
    for (i, x) in p.iter().enumerate() {
        out[i] += x * c0;
        out[i + 1] += x * c1;
    }
    out
}

fn sign_variations(p: &[Rat]) -> usize {
    let signs: Vec<bool> = p.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`, by
/// Descartes' rule of signs and bisection.
pub fn bisection_root_count(p: &[Rat], lo: &Rat, hi: &Rat) -> usize {
    let q = squarefree(&poly_trim(p.to_vec()));
    if q.len() <= 1 {
        return 0;
    }
    fn count(q: &[Rat], a: &Rat, b: &Rat) -> usize {
        match sign_variations(&moebius(q, a, b)) {
            0 => 0,
            1 => 1,
            _ => {
                let m = (a + b) / r(2);
                let at_mid = usize::from(poly_eval(q, &m).is_zero());
                count(q, a, &m) + at_mid + count(q, &m, b)
            }
        }
    }
    count(&q, lo, hi)
}
