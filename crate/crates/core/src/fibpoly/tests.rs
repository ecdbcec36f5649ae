use num_bigint::BigInt;

use super::*;

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

#[test]
fn canonical_form_and_degree() {
    assert_eq!(poly(&[1, 2, 0, 0]), poly(&[1, 2]));
    assert_eq!(poly(&[0, 0]).degree(), None);
    assert_eq!(poly(&[3]).degree(), Some(0));
    assert_eq!(poly(&[1, 2]).shift(2), poly(&[0, 0, 1, 2]));
    assert_eq!(&poly(&[1, 2]) - &poly(&[1, 2]), IntPolynomial::zero());
}

#[test]
fn substitution_and_evaluation() {
    // (x + 1)^2 shifted by -1 is x^2.
    let p = poly(&[1, 2, 1]);
    assert_eq!(p.substitute_shift(&BigInt::from(-1)), poly(&[0, 0, 1]));
    assert_eq!(p.eval(&BigInt::from(3)), BigInt::from(16));
}

#[test]
fn display() {
    assert_eq!(poly(&[1, 2, -1, 2]).to_string(), "1 + 2x - x^2 + 2x^3");
    assert_eq!(poly(&[0, -1]).to_string(), "-x");
    assert_eq!(IntPolynomial::zero().to_string(), "0");
}

#[test]
fn json_uses_strings_for_big_coefficients() {
    let big = IntPolynomial::new(vec![BigInt::from(1), BigInt::from(10).pow(30)]);
    let text = serde_json::to_string(&big).unwrap();
    assert_eq!(text, r#"[1,"1000000000000000000000000000000"]"#);
    let back: IntPolynomial = serde_json::from_str(&text).unwrap();
    assert_eq!(back, big);
}

#[test]
fn f_polynomial_examples() {
    assert_eq!(f_polynomial(0, None).unwrap(), poly(&[1]));
    assert_eq!(f_polynomial(1, None).unwrap(), poly(&[2, 1]));
    assert_eq!(f_polynomial(3, None).unwrap(), poly(&[5, 5, 1]));
    assert!(f_polynomial(3, Some(4)).is_err());
    assert!(f_polynomial(3, Some(0)).is_err());
}

#[test]
fn p_polynomial_examples() {
    assert_eq!(p_polynomial(1, None).unwrap(), poly(&[1, 1]));
    assert_eq!(p_polynomial(4, None).unwrap(), poly(&[1, 4, 3]));
    assert_eq!(p_polynomial(3, Some(1)).unwrap(), poly(&[1, 4, 2]));
}

#[test]
fn closed_form_examples() {
    assert_eq!(p_closed_form(3).unwrap(), poly(&[1, 3, 1]));
    assert_eq!(p_closed_form(5).unwrap(), poly(&[1, 5, 6, 1]));
    assert_eq!(p_closed_form(2).unwrap(), poly(&[1, 2]));
    assert!(p_closed_form(0).is_err());
}

#[test]
fn a_map_examples() {
    assert_eq!(apply_a(0, &poly(&[1])).unwrap(), poly(&[1, 2]));
    assert_eq!(apply_a(1, &p_polynomial(1, None).unwrap()).unwrap(), poly(&[1, 3, 1]));
    assert_eq!(apply_a(3, &IntPolynomial::zero()).unwrap(), IntPolynomial::zero());
    assert!(apply_a(1, &poly(&[0, 0, 1])).is_err());
}

#[test]
fn a_unit_closed_form_examples() {
    assert_eq!(a_unit_closed_form(1, 0).unwrap(), poly(&[1, 2, -1]));
    assert_eq!(a_unit_closed_form(4, 0).unwrap(), poly(&[1, 2, -1, 2, -5, 14]));
    assert_eq!(a_unit_closed_form(3, 3).unwrap(), poly(&[0, 0, 0, 1, 2]));
    assert!(a_unit_closed_form(1, 2).is_err());
}

#[test]
fn catalan_numbers() {
    let first: Vec<BigInt> = (0..8).map(catalan).collect();
    let expected: Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132, 429].iter().map(|&c| BigInt::from(c)).collect();
    assert_eq!(first, expected);
}

#[test]
fn catalan_identity_examples() {
    let r = catalan_identity_check(1, 1).unwrap();
    assert_eq!((r.lhs.clone(), r.holds), (BigInt::from(1), true));
    let r = catalan_identity_check(4, 2).unwrap();
    assert_eq!((r.lhs.clone(), r.rhs.clone()), (BigInt::from(6), BigInt::from(6)));
    for n in 1..=10 {
        let r = catalan_identity_check(n, 1).unwrap();
        assert_eq!(r.lhs, BigInt::from(n));
        assert!(r.holds);
    }
    assert!(catalan_identity_check(2, 3).is_err());
    assert!(catalan_identity_check(2, 0).is_err());
}

#[test]
fn affine_rank_examples() {
    let p3 = p_polynomial(3, None).unwrap();
    let p4 = p_polynomial(4, None).unwrap();
    let p31 = p_polynomial(3, Some(1)).unwrap();
    assert_eq!(affine_rank(&[p3.clone(), p4, p31], 2).unwrap(), 2);
    assert_eq!(affine_rank(&[p3.clone(), p3.clone()], 2).unwrap(), 0);
    let set: Vec<IntPolynomial> = [(5, None), (6, None), (5, Some(1)), (5, Some(2))]
        .iter()
        .map(|&(n, b)| p_polynomial(n, b).unwrap())
        .collect();
    assert_eq!(affine_rank(&set, 3).unwrap(), 3);
    assert!(affine_rank(&[], 2).is_err());
    assert!(affine_rank(&[p3], 1).is_err());
}

#[test]
fn bareiss_handles_skipped_columns() {
    let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    };
    assert_eq!(bareiss_rank(m(&[&[0, 2, 4], &[0, 1, 2], &[0, 0, 1]])), 2);
    assert_eq!(bareiss_rank(m(&[&[2, 3], &[4, 6]])), 1);
    assert_eq!(bareiss_rank(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])), 3);
    assert_eq!(bareiss_rank(Vec::new()), 0);
}

#[test]
fn multiset_examples() {
    assert_eq!(multiset_no_consecutive_count(4, None, 2).unwrap(), 3);
    assert_eq!(multiset_no_consecutive_count(7, None, 0).unwrap(), 1);
    assert_eq!(multiset_no_consecutive_count(3, Some(1), 2).unwrap(), 2);
    assert_eq!(multiset_no_consecutive_count(3, Some(1), 1).unwrap(), 4);
    assert!(multiset_no_consecutive_count(3, Some(4), 1).is_err());
}

#[test]
fn binomials() {
    assert_eq!(binomial(5, 2), BigInt::from(10));
    assert_eq!(binomial(3, 5), BigInt::from(0));
    assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
}
