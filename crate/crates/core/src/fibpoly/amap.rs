use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::ladder::{binomial, p_polynomial};
use super::IntPolynomial;

/// `C_m` by `C_{m+1} = sum C_j C_{m-j}`, memoized.
pub fn catalan(m: usize) -> BigInt {
    static TABLE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    let mut table = TABLE
        .get_or_init(|| Mutex::new(vec![BigInt::one()]))
        .lock()
        .expect("catalan table poisoned");
    while table.len() <= m {
        let n = table.len();
        let next = (0..n).map(|j| &table[j] * &table[n - 1 - j]).sum();
        table.push(next);
    }
    table[m].clone()
}

/// `A_d(1)`, memoized. `A_0(1) = 1 + 2x` and
/// `A_d(1) = P_{2d+1} - A_d(P_{2d-1} - 1)`; the subtracted term only
/// needs `A_m(1)` for `m < d`.
pub fn a_of_one(d: usize) -> IntPolynomial {
    static TABLE: OnceLock<Mutex<Vec<IntPolynomial>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| Mutex::new(vec![IntPolynomial::from_i64s(&[1, 2])]));
    loop {
        let next = {
            let t = table.lock().expect("A table poisoned");
            if t.len() > d {
                return t[d].clone();
            }
            t.len()
        };
        let value = a_of_one_from(next, |m| table.lock().expect("A table poisoned")[m].clone());
        let mut t = table.lock().expect("A table poisoned");
        if t.len() == next {
            t.push(value);
        }
    }
}

fn a_of_one_from(d: usize, lower: impl Fn(usize) -> IntPolynomial) -> IntPolynomial {
    let top = p_polynomial(2 * d + 1, None).expect("in range");
    let inner = p_polynomial(2 * d - 1, None).expect("in range");
    let mut sub = IntPolynomial::zero();
    for k in 1..=inner.degree().unwrap_or(0) {
        let c = inner.coeff(k);
        if !c.is_zero() {
            sub = &sub + &lower(d - k).shift(k).scale(&c);
        }
    }
    &top - &sub
}

/// `A_d(x^k) = x^k A_{d-k}(1)`.
pub fn a_basis_image(d: usize, k: usize) -> Result<IntPolynomial> {
    if k > d {
        return Err(Error::OutOfRange(format!("x^{k} is outside the degree-{d} domain")));
    }
    Ok(a_of_one(d - k).shift(k))
}

/// The linear map `A_d` on polynomials of degree at most `d`.
pub fn apply_a(d: usize, p: &IntPolynomial) -> Result<IntPolynomial> {
    if let Some(deg) = p.degree() {
        if deg > d {
            return Err(Error::OutOfRange(format!(
                "degree {deg} exceeds the domain bound {d}"
            )));
        }
    }
    let mut out = IntPolynomial::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out = &out + &a_basis_image(d, k)?.scale(c);
        }
    }
    Ok(out)
}

/// `x^k (1 + 2x - C_1 x^2 + C_2 x^3 - ... + (-1)^{d-k} C_{d-k} x^{d-k+1})`.
pub fn a_unit_closed_form(d: usize, k: usize) -> Result<IntPolynomial> {
    if k > d {
        return Err(Error::OutOfRange(format!("k = {k} exceeds d = {d}")));
    }
    let mut coeffs = vec![BigInt::one(), BigInt::from(2)];
    for m in 1..=d - k {
        let c = catalan(m);
        coeffs.push(if m % 2 == 0 { c } else { -c });
    }
    Ok(IntPolynomial::new(coeffs).shift(k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalanIdentity {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
}

/// `C(n, k)` against `sum_{i=0}^{k} (-1)^i C(n+1+i, k-i) C_i`.
pub fn catalan_identity_check(n: usize, k: usize) -> Result<CatalanIdentity> {
    if k < 1 || k > n {
        return Err(Error::OutOfRange(format!("need n >= k >= 1, got n={n}, k={k}")));
    }
    let lhs = binomial(n as u64, k as u64);
    let rhs: BigInt = (0..=k)
        .map(|i| {
            let term = binomial((n + 1 + i) as u64, (k - i) as u64) * catalan(i);
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    let holds = lhs == rhs;
    Ok(CatalanIdentity { lhs, rhs, holds })
}
