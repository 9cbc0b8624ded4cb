use alloc::boxed::Box;
use alloc::vec::Vec;

use super::upoly::UPoly;
use super::{LinalgError, Rat};

/// Sturm sequence `p, p', -rem(p, p'), …` with every term reduced to its
/// positive primitive part to keep coefficients small. Positive rescaling
/// leaves every sign variation count unchanged.
pub fn sturm_sequence(p: &UPoly) -> Vec<UPoly> {
    let mut seq = Vec::new();
    if p.is_zero() {
        return seq;
    }
    seq.push(p.primitive());
    let d = p.derivative().primitive();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push((-&r).primitive());
    }
    seq
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` strictly inside `(lo, hi)`.
pub fn sturm_root_count(p: &UPoly, lo: &Rat, hi: &Rat) -> Result<usize, LinalgError> {
    if p.is_zero() {
        return Err(LinalgError::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(LinalgError::EmptyInterval {
            lo: Box::new(lo.clone()),
            hi: Box::new(hi.clone()),
        });
    }
    // Work with the squarefree part and strip endpoint roots so that the
    // classical count V(lo) - V(hi) is exactly the open-interval count.
    let mut q = p.squarefree();
    for end in [lo, hi] {
        if q.sign_at(end) == 0 {
            q = q.div_rem(&UPoly::linear_factor(end)).0;
        }
    }
    let seq = sturm_sequence(&q);
    let v_lo = variations(seq.iter().map(|s| s.sign_at(lo)));
    let v_hi = variations(seq.iter().map(|s| s.sign_at(hi)));
    Ok(v_lo - v_hi)
}

/// Number of distinct real roots of `p` on the whole line.
pub fn real_root_count(p: &UPoly) -> Result<usize, LinalgError> {
    if p.is_zero() {
        return Err(LinalgError::ZeroPolynomial);
    }
    let seq = sturm_sequence(p);
    let v_lo = variations(seq.iter().map(|s| s.sign_at_infinity(true)));
    let v_hi = variations(seq.iter().map(|s| s.sign_at_infinity(false)));
    Ok(v_lo - v_hi)
}
