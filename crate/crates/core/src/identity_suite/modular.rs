//! Residue-lift determinants and the mod-2 orthogonal polynomials of the
//! Catalan parity sequence.

use num_integer::Integer;

use crate::combinatorics::catalan;
use crate::exact_arith::ExactInt;
use crate::linalg::{det_bareiss, RingMatrix};
use crate::modular_lab::{
    catalan_mod2_orthopolys, lifted_det, mod2_hankel_bridge_sides, r_catalan_sum, r_coeff, r_shifted_det,
    LiftFamily, ResidueLift,
};
use crate::value::Value;

use super::support::{delta, sides, Sides};
use super::{check, params, CheckKind::*, IdentityCheck, Params};

fn parity_of_catalan(n: i64) -> ExactInt {
    ResidueLift::Mod2.lift(&catalan(n))
}

fn lifted_catalan(p: &Params) -> Sides {
    let n = p.get("n")?;
    sides(lifted_det(LiftFamily::CatalanBinomial, n as usize, ResidueLift::Mod2), parity_of_catalan(n))
}

fn hankel_bridge(p: &Params) -> Sides {
    let (lhs, rhs) = mod2_hankel_bridge_sides(p.size("n")?, p.size("m")?)?;
    sides(lhs, rhs)
}

fn shifted_orthopoly_det(p: &Params) -> Sides {
    let n = p.size("n")?;
    let table = catalan_mod2_orthopolys(n + 1)?;
    let det = det_bareiss(&RingMatrix::square(n, |i, j| table.p(i + 1, j)))?;
    sides(det, parity_of_catalan(n as i64))
}

/// Every coefficient of the orthogonal polynomial table is an integer
/// congruent to `r(n, j)` modulo 2.
fn r_congruence(p: &Params) -> Sides {
    let n = p.size("n")?;
    let table = catalan_mod2_orthopolys(n)?;
    let row = |f: &dyn Fn(usize) -> Value| Value::Vector((0..=n).map(f).collect());
    let reduced = row(&|j| {
        let c = table.p(n, j);
        if c.is_integer() {
            Value::Int(c.to_integer().mod_floor(&ExactInt::from(2)))
        } else {
            Value::Rat(c)
        }
    });
    sides(reduced, row(&|j| Value::Int(r_coeff(n as i64, j as i64))))
}

fn r_sum(p: &Params) -> Sides {
    let n = p.get("n")?;
    sides(r_catalan_sum(n), delta(n))
}

fn r_dets(p: &Params) -> Sides {
    let n = p.get("n")?;
    let target = Value::Int(parity_of_catalan(n));
    sides(
        vec![Value::Int(r_shifted_det(n as usize)), Value::Int(lifted_det(LiftFamily::CatalanBinomial, n as usize, ResidueLift::Mod2))],
        vec![target.clone(), target],
    )
}

pub(super) fn register(out: &mut Vec<IdentityCheck>) {
    out.extend([
        check("eq11", Determinant, "det(binom(i+j+1, i-j+1) mod 2) = C_n mod 2", params![("n", 0, 32, 20)], lifted_catalan),
        check("eq103", Determinant, "det(p(i+m, j))_n = (-1)^{C(m,2)} det(a(i+j+n))_m for the orthogonal polynomials of a(n) = C_n mod 2", params![("n", 0, 8, 6), ("m", 0, 3, 3)], hankel_bridge),
        check("eq104", Determinant, "det(p(i+1, j)) = C_n mod 2", params![("n", 0, 16, 10)], shifted_orthopoly_det),
        check("eq105", Structural, "r_n(x) ≡ p_{2n}(√x) mod 2 coefficientwise", params![("n", 0, 16, 10)], r_congruence),
        check("eq106", Sum, "Σ_j (-1)^{n-j} r(n, j) (C_j mod 2) = [n=0]", params![("n", 0, 64, 40)], r_sum),
        check("eq107", Determinant, "det(r(i+1, j)) = det(binom(i+j+1, i-j+1) mod 2) = C_n mod 2", params![("n", 0, 32, 20)], r_dets),
    ]);
}

