use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::{BracketEntry, LieAlgebra, LieError};
use crate::linalg::{int, parse_rat, Rat};

/// A named algebra of the built-in catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogEntry {
    Abelian(usize),
    Axb,
    Heisenberg(usize),
    Filiform(usize),
    Grelaud(Rat),
    Oscillator,
    E2,
    Sl2,
}

/// `(name, parameter schema, description)` for every catalog entry.
pub fn catalog_schemas() -> &'static [(&'static str, &'static str, &'static str)] {
    &[
        ("abelian", "<n: nat >= 1>", "abelian algebra of dimension n"),
        ("axb", "", "[X,Y] = Y, the ax+b algebra"),
        ("heisenberg", "<m: nat >= 1>", "[P_i,Q_i] = Z, dimension 2m+1"),
        ("filiform", "<n: nat >= 3>", "[e1,e_i] = e_{i+1} for 2 <= i <= n-1"),
        ("grelaud", "<theta: rational>", "[A,X] = X - theta Y, [A,Y] = theta X + Y"),
        ("oscillator", "", "[H,P] = Q, [H,Q] = -P, [P,Q] = E"),
        ("e2", "", "[H,P] = Q, [H,Q] = -P, Euclidean motions of the plane"),
        ("sl2", "", "[H,E] = 2E, [H,F] = -2F, [E,F] = H"),
    ]
}

/// `[e_j, e_k] = Σ c·e_l` as `(j, k, [(c, l), …])`.
type IntegerBracket = (usize, usize, Vec<(i64, usize)>);

fn params_error(name: &str, reason: impl Into<String>) -> LieError {
    LieError::InvalidCatalogParams {
        name: name.to_string(),
        reason: reason.into(),
    }
}

fn parse_nat(name: &str, params: &[&str], min: usize) -> Result<usize, LieError> {
    let [p] = params else {
        return Err(params_error(name, "expected exactly one parameter"));
    };
    let n: usize = p
        .parse()
        .map_err(|_| params_error(name, format!("`{p}` is not a natural number")))?;
    if n < min {
        return Err(params_error(name, format!("parameter must be at least {min}")));
    }
    Ok(n)
}

impl CatalogEntry {
    pub fn parse(name: &str, params: &[&str]) -> Result<Self, LieError> {
        let no_params = |entry: CatalogEntry| {
            if params.is_empty() {
                Ok(entry)
            } else {
                Err(params_error(name, "takes no parameters"))
            }
        };
        match name {
            "abelian" => Ok(Self::Abelian(parse_nat(name, params, 1)?)),
            "axb" => no_params(Self::Axb),
            "heisenberg" => Ok(Self::Heisenberg(parse_nat(name, params, 1)?)),
            "filiform" => Ok(Self::Filiform(parse_nat(name, params, 3)?)),
            "grelaud" => {
                let [p] = params else {
                    return Err(params_error(name, "expected exactly one parameter"));
                };
                let theta = parse_rat(p).map_err(|e| params_error(name, e.to_string()))?;
                Ok(Self::Grelaud(theta))
            }
            "oscillator" => no_params(Self::Oscillator),
            "e2" => no_params(Self::E2),
            "sl2" => no_params(Self::Sl2),
            other => Err(LieError::UnknownCatalogName(other.to_string())),
        }
    }

    pub fn build(&self) -> LieAlgebra {
        let (names, brackets): (Vec<String>, Vec<IntegerBracket>) = match self {
            Self::Abelian(n) => ((1..=*n).map(|i| format!("X{i}")).collect(), vec![]),
            Self::Axb => (names(&["X", "Y"]), vec![(0, 1, vec![(1, 1)])]),
            Self::Heisenberg(m) => {
                let m = *m;
                let mut ns: Vec<String> = Vec::with_capacity(2 * m + 1);
                if m == 1 {
                    ns.extend(names(&["P", "Q"]));
                } else {
                    ns.extend((1..=m).map(|i| format!("P{i}")));
                    ns.extend((1..=m).map(|i| format!("Q{i}")));
                }
                ns.push("Z".to_string());
                let br = (0..m).map(|i| (i, m + i, vec![(1, 2 * m)])).collect();
                (ns, br)
            }
            Self::Filiform(n) => {
                let ns = (1..=*n).map(|i| format!("e{i}")).collect();
                let br = (1..n - 1).map(|i| (0, i, vec![(1, i + 1)])).collect();
                (ns, br)
            }
            Self::Grelaud(theta) => return grelaud(theta),
            Self::Oscillator => (
                names(&["H", "P", "Q", "E"]),
                vec![(0, 1, vec![(1, 2)]), (0, 2, vec![(-1, 1)]), (1, 2, vec![(1, 3)])],
            ),
            Self::E2 => (
                names(&["H", "P", "Q"]),
                vec![(0, 1, vec![(1, 2)]), (0, 2, vec![(-1, 1)])],
            ),
            Self::Sl2 => (
                names(&["H", "E", "F"]),
                vec![(0, 1, vec![(2, 1)]), (0, 2, vec![(-2, 2)]), (1, 2, vec![(1, 0)])],
            ),
        };
        let dim = names.len();
        let table = brackets
            .into_iter()
            .map(|(j, k, terms)| {
                let mut v = vec![Rat::zero(); dim];
                for (c, l) in terms {
                    v[l] += int(c);
                }
                BracketEntry::new(j, k, v)
            })
            .collect();
        LieAlgebra::validate(dim, names, table).expect("catalog entries satisfy Jacobi")
    }
}

fn grelaud(theta: &Rat) -> LieAlgebra {
    let one = Rat::one();
    let zero = Rat::zero();
    let table = vec![
        BracketEntry::new(0, 1, vec![zero.clone(), one.clone(), -theta.clone()]),
        BracketEntry::new(0, 2, vec![zero, theta.clone(), one]),
    ];
    LieAlgebra::validate(3, names(&["A", "X", "Y"]), table).expect("grelaud satisfies Jacobi")
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Abelian(n) => write!(f, "abelian:{n}"),
            Self::Axb => write!(f, "axb"),
            Self::Heisenberg(m) => write!(f, "heisenberg:{m}"),
            Self::Filiform(n) => write!(f, "filiform:{n}"),
            Self::Grelaud(t) => write!(f, "grelaud:{t}"),
            Self::Oscillator => write!(f, "oscillator"),
            Self::E2 => write!(f, "e2"),
            Self::Sl2 => write!(f, "sl2"),
        }
    }
}

/// Builds a catalog algebra from its name and textual parameters.
pub fn catalog(name: &str, params: &[&str]) -> Result<LieAlgebra, LieError> {
    Ok(CatalogEntry::parse(name, params)?.build())
}

/// `g₁ ⊕ g₂` with no brackets between the summands. Basis names are kept when
/// disjoint; otherwise the left names get suffix `1` and the right ones `2`.
pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> Result<LieAlgebra, LieError> {
    let left: BTreeSet<&str> = a.names().iter().map(String::as_str).collect();
    let clash = b.names().iter().any(|n| left.contains(n.as_str()));
    let mut ns: Vec<String> = Vec::with_capacity(a.dim() + b.dim());
    if clash {
        ns.extend(a.names().iter().map(|n| format!("{n}1")));
        ns.extend(b.names().iter().map(|n| format!("{n}2")));
    } else {
        ns.extend(a.names().iter().cloned());
        ns.extend(b.names().iter().cloned());
    }
    let dim = ns.len();
    let off = a.dim();
    let mut table = Vec::new();
    for (&(j, k), v) in a.brackets() {
        let mut w = v.clone();
        w.resize(dim, Rat::zero());
        table.push(BracketEntry::new(j, k, w));
    }
    for (&(j, k), v) in b.brackets() {
        let mut w = vec![Rat::zero(); off];
        w.extend(v.iter().cloned());
        table.push(BracketEntry::new(off + j, off + k, w));
    }
    LieAlgebra::validate(dim, ns, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::abelianization_dim;

    #[test]
    fn heisenberg_one() {
        let h = catalog("heisenberg", &["1"]).unwrap();
        assert_eq!(h.dim(), 3);
        assert_eq!(h.brackets().len(), 1);
        assert_eq!(h.names(), ["P", "Q", "Z"]);
        let h3 = catalog("heisenberg", &["3"]).unwrap();
        assert_eq!(h3.dim(), 7);
        assert_eq!(h3.names()[0], "P1");
    }

    #[test]
    fn direct_sum_of_axb() {
        let a = catalog("axb", &[]).unwrap();
        let s = direct_sum(&a, &a).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.names(), ["X1", "Y1", "X2", "Y2"]);
        assert_eq!(abelianization_dim(&s), 2);
        let mixed = direct_sum(&a, &catalog("e2", &[]).unwrap()).unwrap();
        assert_eq!(mixed.names(), ["X", "Y", "H", "P", "Q"]);
    }

    #[test]
    fn grelaud_abelianization() {
        let g = catalog("grelaud", &["1"]).unwrap();
        assert_eq!(g.dim(), 3);
        assert_eq!(abelianization_dim(&g), 1);
        let g0 = catalog("grelaud", &["-3/4"]).unwrap();
        assert_eq!(abelianization_dim(&g0), 1);
    }

    #[test]
    fn bad_names_and_params() {
        assert_eq!(
            catalog("so3", &[]),
            Err(LieError::UnknownCatalogName("so3".into()))
        );
        assert!(catalog("filiform", &["2"]).is_err());
        assert!(catalog("heisenberg", &[]).is_err());
        assert!(catalog("heisenberg", &["x"]).is_err());
        assert!(catalog("axb", &["1"]).is_err());
        assert!(catalog("grelaud", &["1/0"]).is_err());
    }

    #[test]
    fn display_round_trips_through_parse() {
        for entry in [
            CatalogEntry::Abelian(2),
            CatalogEntry::Heisenberg(2),
            CatalogEntry::Grelaud(crate::linalg::rat(-1, 2)),
            CatalogEntry::Sl2,
        ] {
            let text = entry.to_string();
            let mut parts = text.split(':');
            let name = parts.next().unwrap();
            let params: Vec<&str> = parts.collect();
            assert_eq!(CatalogEntry::parse(name, &params).unwrap(), entry);
        }
    }
}
