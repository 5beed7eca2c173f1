use num_integer::Integer;

use super::{Atom, KnotExpression};
use crate::error::{Error, Result};
use crate::phi::basis_decompose;

fn torus(p: i64, q: i64, coeff: i64) -> KnotExpression {
    KnotExpression::torus(p, q, coeff).expect("family parameters are validated")
}

fn check_member(index: usize, (p, r, k): (i64, i64, i64)) -> Result<()> {
    let fail = |reason: String| Err(Error::FamilyParam { index, reason });
    if k < 1 {
        return fail(format!("k = {k} must be >= 1"));
    }
    if r < 2 || r > p - 2 {
        return fail(format!("r = {r} must satisfy 2 <= r <= p-2 = {}", p - 2));
    }
    if p.gcd(&r) != 1 {
        return fail(format!("p = {p} and r = {r} are not coprime"));
    }
    Ok(())
}

fn check_family(params: &[(i64, i64, i64)], gap: i64) -> Result<()> {
    for (i, &m) in params.iter().enumerate() {
        check_member(i, m)?;
        if i > 0 {
            let prev = params[i - 1].0;
            if prev > m.0 - gap {
                return Err(Error::FamilyParam {
                    index: i,
                    reason: format!("p = {} must be at least {}", m.0, prev + gap),
                });
            }
        }
    }
    Ok(())
}

/// `K_i = T(p, kp+r) # -T(r, p) # -k T(p, p+1)`: vanishing Υ, with
/// `φ_{p-2}(K_i) = -k`. Requires `p_i <= p_{i+1} - 2`.
pub fn family_phi(params: &[(i64, i64, i64)]) -> Result<Vec<KnotExpression>> {
    check_family(params, 2)?;
    Ok(params
        .iter()
        .map(|&(p, r, k)| torus(p, k * p + r, 1) + torus(r, p, -1) + torus(p, p + 1, -k))
        .collect())
}

/// `K_i = T(p, kp+r) # -(k+1)T(r, p) # -k T(p-r, p) # -k T(p, p+1) # k T(p-1, p)`:
/// vanishing φ, with `ξ_p(K_i) = k`. Requires `p_i <= p_{i+1}`.
pub fn family_upsilon(params: &[(i64, i64, i64)]) -> Result<Vec<KnotExpression>> {
    check_family(params, 0)?;
    Ok(params
        .iter()
        .map(|&(p, r, k)| {
            torus(p, k * p + r, 1)
                + torus(r, p, -(k + 1))
                + torus(p - r, p, -k)
                + torus(p, p + 1, -k)
                + torus(p - 1, p, k)
        })
        .collect())
}

fn check_k(k: i64) -> Result<()> {
    if k < 3 {
        return Err(Error::Precondition(format!("k = {k} must be >= 3")));
    }
    Ok(())
}

/// The `(k, 2k-1)`-cable of the trefoil.
pub fn jk(k: i64) -> Result<KnotExpression> {
    check_k(k)?;
    let atom = Atom::cable(2, 3, k, 2 * k - 1)?.expect("cable of the trefoil is nontrivial");
    Ok(KnotExpression::atom(atom))
}

/// The combination of `T(n, n+1)` with the same φ as `J_k`.
pub fn lk(k: i64) -> Result<KnotExpression> {
    let phi = jk(k)?.phi();
    Ok(basis_decompose(&phi)
        .into_iter()
        .fold(KnotExpression::unknot(), |acc, (n, c)| acc + torus(n, n + 1, c)))
}

/// `J_k # -L_k` for each `k`.
pub fn family_jk_lk(ks: &[i64]) -> Result<Vec<KnotExpression>> {
    ks.iter()
        .enumerate()
        .map(|(index, &k)| {
            check_k(k).map_err(|e| Error::FamilyParam { index, reason: e.to_string() })?;
            Ok(jk(k)? - lk(k)?)
        })
        .collect()
}
