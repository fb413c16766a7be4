use axial_core::exact::{rat, rational_roots, resultant, standard_monomial_count, MonomialCount, UniPoly};
use axial_core::{Matrix, MultiPoly, Rational, Var};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

/// Polynomials in λ, μ of degree at most 3 in each variable.
fn small_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..=3, 0u32..=3), small_rat()), 0..6).prop_map(MultiPoly::from_terms)
}

fn small_matrix() -> impl Strategy<Value = Matrix<Rational>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
            .prop_map(|rows| Matrix::from_rows(rows.into_iter().map(|row| row.into_iter().map(|x| rat(x, 1)).collect()).collect()))
    })
}

/// Product of (x − r) over the roots, in λ.
fn from_roots(roots: &[Rational]) -> MultiPoly {
    roots.iter().fold(MultiPoly::one(), |acc, r| {
        &acc * &(&MultiPoly::lambda() - &MultiPoly::constant(r.clone()))
    })
}

/// Brute-force rational roots of an integer polynomial: ±p/q over divisors
/// p of the constant term and q of the leading coefficient.
fn divisor_oracle(coeffs: &[i64]) -> Vec<Rational> {
    let divisors = |n: i64| -> Vec<i64> { (1..=n.abs()).filter(|d| n % d == 0).collect() };
    let mut c = coeffs.to_vec();
    let mut zero_root = false;
    while c.len() > 1 && c[0] == 0 {
        c.remove(0);
        zero_root = true;
    }
    let f = UniPoly::new(c.iter().map(|&x| rat(x, 1)).collect());
    let mut roots = Vec::new();
    if c.len() > 1 {
        for p in divisors(c[0]) {
            for q in divisors(*c.last().unwrap()) {
                for s in [rat(p, q), rat(-p, q)] {
                    if f.eval(&s).is_zero() && !roots.contains(&s) {
                        roots.push(s);
                    }
                }
            }
        }
    }
    if zero_root {
        roots.push(Rational::zero());
    }
    roots.sort();
    roots
}

proptest! {
    #[test]
    fn rank_plus_nullity_is_column_count(m in small_matrix()) {
        prop_assert_eq!(m.rank() + m.kernel().len(), m.ncols());
        for v in m.kernel() {
            prop_assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(f in small_poly(), g in small_poly(), l in small_rat(), m in small_rat()) {
        let pt = (l, m);
        prop_assert_eq!((&f + &g).evaluate(&pt), f.evaluate(&pt) + g.evaluate(&pt));
        prop_assert_eq!((&f * &g).evaluate(&pt), f.evaluate(&pt) * g.evaluate(&pt));
        prop_assert_eq!((&f - &g).evaluate(&pt), f.evaluate(&pt) - g.evaluate(&pt));
    }

    #[test]
    fn multiplication_is_commutative_and_distributive(f in small_poly(), g in small_poly(), h in small_poly()) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn rational_roots_match_divisor_oracle(coeffs in prop::collection::vec(-12i64..=12, 2..6)) {
        prop_assume!(*coeffs.last().unwrap() != 0);
        let f = MultiPoly::from_terms(coeffs.iter().enumerate().map(|(i, &c)| ((i as u32, 0), rat(c, 1))));
        prop_assert_eq!(rational_roots(&f).unwrap(), divisor_oracle(&coeffs));
    }

    #[test]
    fn rational_roots_recover_planted_roots(roots in prop::collection::btree_set(small_rat(), 1..5), extra in 1i64..=4) {
        // Multiply by x² + extra, which has no rational roots.
        let quad = MultiPoly::from_terms([((2, 0), rat(1, 1)), ((0, 0), rat(extra, 1))]);
        let roots: Vec<Rational> = roots.into_iter().collect();
        let f = &from_roots(&roots) * &quad;
        prop_assert_eq!(rational_roots(&f).unwrap(), roots);
    }

    #[test]
    fn resultant_vanishes_iff_common_root(r in prop::collection::vec(small_rat(), 1..4), s in prop::collection::vec(small_rat(), 1..4)) {
        let f = from_roots(&r);
        let g = from_roots(&s);
        let res = resultant(&f, &g, Var::Lambda).unwrap();
        let common = r.iter().any(|x| s.contains(x));
        prop_assert_eq!(res.is_zero(), common);
    }
}

#[test]
fn resultant_eliminates_to_the_shared_coordinate() {
    // f = λ − μ, g = λ² − 2: eliminating λ leaves μ² − 2 up to sign.
    let f = &MultiPoly::lambda() - &MultiPoly::mu();
    let g = MultiPoly::from_terms([((2, 0), rat(1, 1)), ((0, 0), rat(-2, 1))]);
    let res = resultant(&f, &g, Var::Lambda).unwrap();
    let expected = MultiPoly::from_terms([((0, 2), rat(1, 1)), ((0, 0), rat(-2, 1))]);
    assert!(res == expected || res == -expected);
}

#[test]
fn zero_polynomial_has_no_root_list() {
    assert!(rational_roots(&MultiPoly::zero()).is_err());
}

#[test]
fn standard_monomials_of_a_point_set() {
    // λ(λ − 1) = 0, μ − λ = 0 has two solutions.
    let f = MultiPoly::from_terms([((2, 0), rat(1, 1)), ((1, 0), rat(-1, 1))]);
    let g = &MultiPoly::mu() - &MultiPoly::lambda();
    assert_eq!(standard_monomial_count(&[f, g]), MonomialCount::Finite(2));
    // A single curve has infinitely many.
    assert_eq!(standard_monomial_count(&[MultiPoly::lambda()]), MonomialCount::Infinite);
}

#[test]
fn determinants_of_inverse_pairs_multiply_to_one() {
    let m = Matrix::from_rows(vec![
        vec![rat(2, 1), rat(1, 3), rat(0, 1)],
        vec![rat(-1, 2), rat(1, 1), rat(4, 1)],
        vec![rat(0, 1), rat(5, 7), rat(1, 1)],
    ]);
    let inv = m.inverse().unwrap();
    assert!(m.mul_mat(&inv).is_identity());
    assert_eq!(m.determinant() * inv.determinant(), Rational::one());
    assert!(m.determinant().is_positive() || m.determinant().is_negative());
}
