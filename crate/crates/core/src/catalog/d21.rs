//! `D(2,1;α)`: even part three copies of sl₂, odd part `V ⊗ V ⊗ V` for the
//! two-dimensional module `V`.
//!
//! The odd–odd product is `Σ_s σ_s · ψ(u_t, v_t) ψ(u_r, v_r) · P(u_s, v_s)`
//! over the three factors `s` (with `t`, `r` the other two), where `ψ` is
//! the invariant symplectic pairing on `V` and `P(a, b) w = ψ(a, w) b + ψ(b, w) a`
//! lands in the `s`-th sl₂. The super Jacobi identity holds exactly when
//! `σ₁ + σ₂ + σ₃ = 0`; the family uses `σ = (1, α, -1-α)`.

use crate::exactnum::{q, Rational};
use crate::superalgebra::{Element, Parity, SuperAlgebra};

use super::{CatalogError, Construction};

/// `ψ(v_a, v_b)` with `v_0 = (1,0)`, `v_1 = (0,1)`.
fn pairing(a: usize, b: usize) -> i64 {
    match (a, b) {
        (0, 1) => 1,
        (1, 0) => -1,
        _ => 0,
    }
}

/// `P(v_a, v_b)` in sl₂ coordinates `(h, e, f)`.
fn symmetric_projection(a: usize, b: usize) -> [i64; 3] {
    // Matrix entry M[r][w]: coefficient of v_r in P(v_a, v_b) v_w.
    let mut m = [[0i64; 2]; 2];
    for w in 0..2 {
        m[b][w] += pairing(a, w);
        m[a][w] += pairing(b, w);
    }
    [m[0][0], m[0][1], m[1][0]]
}

/// Action of sl₂ basis element `x` (0 = h, 1 = e, 2 = f) on `v_w`:
/// returns `(coefficient, index)`.
fn act(x: usize, w: usize) -> Option<(i64, usize)> {
    match (x, w) {
        (0, 0) => Some((1, 0)),
        (0, 1) => Some((-1, 1)),
        (1, 1) => Some((1, 0)),
        (2, 0) => Some((1, 1)),
        _ => None,
    }
}

const EVEN: usize = 9;

fn odd_index(s: [usize; 3]) -> usize {
    EVEN + 4 * s[0] + 2 * s[1] + s[2]
}

fn odd_signs(k: usize) -> [usize; 3] {
    let k = k - EVEN;
    [k / 4, (k / 2) % 2, k % 2]
}

/// The superalgebra on basis `h_s, e_s, f_s` (indices `3s..3s+3`) and the
/// eight odd tensors, with odd–odd coefficients `sigma`. Super Jacobi is not
/// checked here.
pub fn d21_with_coefficients(sigma: &[Rational; 3]) -> Result<SuperAlgebra, CatalogError> {
    let mut parity = vec![Parity::Even; EVEN];
    parity.extend([Parity::Odd; 8]);
    let mut entries = Vec::new();
    let c = |i: usize, v: i64| (i, Rational::from(v));
    for s in 0..3 {
        let (h, e, f) = (3 * s, 3 * s + 1, 3 * s + 2);
        entries.push(((h, e), Element::new([c(e, 2)])));
        entries.push(((h, f), Element::new([c(f, -2)])));
        entries.push(((e, f), Element::new([c(h, 1)])));
        for k in EVEN..EVEN + 8 {
            let signs = odd_signs(k);
            for x in 0..3 {
                if let Some((coef, w)) = act(x, signs[s]) {
                    let mut image = signs;
                    image[s] = w;
                    entries.push(((3 * s + x, k), Element::new([c(odd_index(image), coef)])));
                }
            }
        }
    }
    for u in EVEN..EVEN + 8 {
        for v in u..EVEN + 8 {
            let (a, b) = (odd_signs(u), odd_signs(v));
            let mut terms = Vec::new();
            for s in 0..3 {
                let weight: i64 = (0..3).filter(|&t| t != s).map(|t| pairing(a[t], b[t])).product();
                if weight == 0 || sigma[s].is_zero() {
                    continue;
                }
                let proj = symmetric_projection(a[s], b[s]);
                for (x, p) in proj.iter().enumerate() {
                    if *p != 0 {
                        terms.push((3 * s + x, &sigma[s] * &Rational::from(weight * p)));
                    }
                }
            }
            entries.push(((u, v), Element::new(terms)));
        }
    }
    Ok(SuperAlgebra::new("D(2,1)", parity, entries)?)
}

pub(super) fn construct(alpha: &Rational) -> Result<Construction, CatalogError> {
    let sigma = [q(1, 1), alpha.clone(), -(alpha + &q(1, 1))];
    let algebra = d21_with_coefficients(&sigma)?;
    let mut labels = Vec::new();
    for s in 1..=3 {
        labels.push(format!("h_{s}"));
        labels.push(format!("g_{{2e{s}}}"));
        labels.push(format!("g_{{-2e{s}}}"));
    }
    for k in EVEN..EVEN + 8 {
        let signs = odd_signs(k);
        let mut l = String::new();
        for (t, &sg) in signs.iter().enumerate() {
            let sign = if sg == 1 { "-" } else if t == 0 { "" } else { "+" };
            l.push_str(&format!("{sign}e{}", t + 1));
        }
        labels.push(format!("g_{{{l}}}"));
    }
    Ok(Construction { algebra, labels, cartan: vec![0, 3, 6] })
}
