use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::complex::build_complex;
use crate::error::{Error, Result};
use crate::planar::build_ladder;

use super::IntPolynomial;

type Key = (usize, Option<usize>);

fn check_bump(n: usize, bump: Option<usize>) -> Result<()> {
    match bump {
        Some(i) if i == 0 || i > n => Err(Error::OutOfRange(format!(
            "bump position {i} outside 1..={n}"
        ))),
        _ => Ok(()),
    }
}

/// The f-polynomial of the ladder complex counted face by face.
pub fn f_polynomial_by_enumeration(n: usize, bump: Option<usize>) -> Result<IntPolynomial> {
    check_bump(n, bump)?;
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let k = build_complex(&build_ladder(n, bump)?);
    Ok(IntPolynomial::new(
        k.f_vector().into_iter().map(BigInt::from).collect(),
    ))
}

fn base_case(n: usize, bump: Option<usize>) -> Result<IntPolynomial> {
    static CACHE: OnceLock<Mutex<HashMap<Key, IntPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("cache poisoned").get(&(n, bump)) {
        return Ok(p.clone());
    }
    let p = f_polynomial_by_enumeration(n, bump)?;
    cache
        .lock()
        .expect("cache poisoned")
        .insert((n, bump), p.clone());
    Ok(p)
}

/// `F_n` or `F_{n,i}`: two enumerated base cases, then
/// `F_{k} = F_{k-1} + (x+1) F_{k-2}`.
pub fn f_polynomial(n: usize, bump: Option<usize>) -> Result<IntPolynomial> {
    check_bump(n, bump)?;
    let first = bump.unwrap_or(1);
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    if n <= first + 1 {
        return base_case(n, bump);
    }
    let mut prev = base_case(first, bump)?;
    let mut cur = base_case(first + 1, bump)?;
    for _ in first + 2..=n {
        let next = &cur + &(&prev.shift(1) + &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `P_n(x) = F_n(x - 1)`, likewise for bumped ladders.
pub fn p_polynomial(n: usize, bump: Option<usize>) -> Result<IntPolynomial> {
    let p = p_unchecked(n, bump)?;
    #[cfg(debug_assertions)]
    check_p_recurrences(n, bump, &p);
    Ok(p)
}

fn p_unchecked(n: usize, bump: Option<usize>) -> Result<IntPolynomial> {
    Ok(f_polynomial(n, bump)?.substitute_shift(&-BigInt::one()))
}

#[cfg(debug_assertions)]
fn check_p_recurrences(n: usize, bump: Option<usize>, p: &IntPolynomial) {
    let get = |m: usize, b: Option<usize>| p_unchecked(m, b).expect("in range");
    match bump {
        None if n >= 2 => {
            let rhs = &get(n - 1, None) + &get(n - 2, None).shift(1);
            debug_assert_eq!(*p, rhs, "P recurrence fails at n={n}");
        }
        Some(i) => {
            if i + 2 <= n {
                let rhs = &get(n - 1, bump) + &get(n - 2, bump).shift(1);
                debug_assert_eq!(*p, rhs, "bumped P recurrence fails at n={n}, i={i}");
            }
            if i >= 3 {
                let rhs = &get(n - 1, Some(i - 1)) + &get(n - 2, Some(i - 2)).shift(1);
                debug_assert_eq!(*p, rhs, "shifted-bump P recurrence fails at n={n}, i={i}");
            }
        }
        None => {}
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, j| acc * (n - j) / (j + 1))
}

/// `P_n` from binomials: the coefficient of `x^k` is `C(n + 1 - k, k)`.
pub fn p_closed_form(n: usize) -> Result<IntPolynomial> {
    if n < 1 {
        return Err(Error::OutOfRange("closed form needs n >= 1".into()));
    }
    let n = n as u64;
    Ok(IntPolynomial::new(
        (0..=n.div_ceil(2)).map(|k| binomial(n + 1 - k, k)).collect(),
    ))
}

/// `k`-subsets of `{1, ..., n}` (with a second copy of the bump value)
/// containing no two consecutive integers. The two copies of a value
/// count as consecutive.
pub fn multiset_no_consecutive_count(n: usize, bump: Option<usize>, k: usize) -> Result<u64> {
    check_bump(n, bump)?;
    if bump.is_some() && n == 0 {
        return Err(Error::OutOfRange("bump on an empty ladder".into()));
    }
    if n > 40 {
        return Err(Error::OutOfRange(format!("n = {n} too large to enumerate")));
    }
    let mut items: Vec<usize> = (1..=n).collect();
    if let Some(i) = bump {
        items.insert(i, i);
    }
    fn go(items: &[usize], start: usize, left: usize, last: Option<usize>) -> u64 {
        if left == 0 {
            return 1;
        }
        (start..items.len())
            .filter(|&j| last.is_none_or(|l| items[j] >= l + 2))
            .map(|j| go(items, j + 1, left - 1, Some(items[j])))
            .sum()
    }
    Ok(go(&items, 0, k, None))
}
