//! One-shot p-maximality test for an equation order.
//!
//! Split f mod p as g*h with g the radical (each irreducible factor once)
//! and h the cofactor carrying the repeated part.  Lift both monically and
//! set t = (g*h - f)/p, which is integral because g*h reproduces f mod p.
//! The order Z[x]/(f) is maximal at p exactly when gcd(t, g, h) = 1 in
//! F_p[x]; a nontrivial common factor names a direction in which the order
//! index at p can still be divided down.

use crate::exactmath::{FPoly, IntPoly};
use num_bigint::BigInt;

/// True iff Z[x]/(f) is maximal at p.  `f` must be monic and irreducible.
pub fn dedekind_is_pmaximal(f: &IntPoly, p: u64) -> bool {
    debug_assert!(f.is_monic() && f.degree() >= 1);
    let fbar = FPoly::from_int_poly(f, p);
    let gbar = fbar.radical();
    if gbar.degree() == fbar.degree() {
        // f squarefree mod p: p does not divide the index.
        return true;
    }
    let hbar = fbar.div_exact(&gbar);
    let g = gbar.to_int_poly();
    let h = hbar.to_int_poly();
    let t = g.mul(&h).sub(f).div_exact(&BigInt::from(p));
    let tbar = FPoly::from_int_poly(&t, p);
    let d = tbar.gcd(&gbar).gcd(&hbar);
    d.degree() == 0 && !d.is_zero()
}
