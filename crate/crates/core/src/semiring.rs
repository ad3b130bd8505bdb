//! The scalar algebra every kernel is generic over.
//!
//! A semiring bundles an associative-commutative addition with an identity
//! (the "null" element of sparse storage), a multiplication, an optional
//! multiplicative identity, and an `annihilating` flag stating whether
//! `a ⊗ null = null` holds. The flag is carried explicitly rather than
//! inferred: kernels consult it to decide between intersection iteration
//! (`spgemm`) and union iteration (`spgemm_union`).
//!
//! Shipped instances, by registry label:
//!
//! | label           | ⊕        | ⊗            | null  | one  | annihilating |
//! |-----------------|----------|--------------|-------|------|--------------|
//! | `arith-f64`     | +        | ×            | 0.0   | 1.0  | yes |
//! | `arith-i64`     | +        | ×            | 0     | 1    | yes |
//! | `boolean`       | or       | and          | false | true | yes |
//! | `min-plus`      | min      | +            | +inf  | 0.0  | yes |
//! | `max-min`       | max      | min          | -inf  | +inf | yes |
//! | `select2nd-min` | min      | second arg   | +inf  | none | no  |
//! | `manhattan`     | +        | abs diff     | 0.0   | none | no  |

use crate::scalar::Scalar;

pub trait Semiring: Copy + Send + Sync + 'static {
    type Elem: Scalar;

    /// Registry label, e.g. `"arith-f64"`.
    const NAME: &'static str;

    fn add(a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn mul(a: Self::Elem, b: Self::Elem) -> Self::Elem;

    /// The additive identity, which is also the element sparse storage omits.
    fn add_identity() -> Self::Elem;

    /// The multiplicative identity, when the algebra has a two-sided one.
    fn mul_identity() -> Option<Self::Elem>;

    /// Whether `mul(a, add_identity) = add_identity = mul(add_identity, a)`.
    fn annihilating() -> bool;

    /// Whether `mul` distributes over `add`. Distance algebras such as
    /// `manhattan` do not; the law test suite skips distributivity for them.
    fn distributive() -> bool {
        true
    }

    /// True when `v` is the element sparse storage treats as absent.
    fn is_null(v: Self::Elem) -> bool {
        v.bit_eq(Self::add_identity())
    }
}

/// Labels of the semirings selectable by name (CLI registry order).
pub const SEMIRING_LABELS: &[&str] = &[
    "arith-f64",
    "arith-i64",
    "boolean",
    "min-plus",
    "max-min",
    "select2nd-min",
    "manhattan",
];

/// `(+, ×)` over `f64`.
#[derive(Clone, Copy, Debug)]
pub struct ArithF64;

impl Semiring for ArithF64 {
    type Elem = f64;
    const NAME: &'static str = "arith-f64";
    fn add(a: f64, b: f64) -> f64 {
        a + b
    }
    fn mul(a: f64, b: f64) -> f64 {
        a * b
    }
    fn add_identity() -> f64 {
        0.0
    }
    fn mul_identity() -> Option<f64> {
        Some(1.0)
    }
    fn annihilating() -> bool {
        true
    }
}

/// `(+, ×)` over `i64`.
#[derive(Clone, Copy, Debug)]
pub struct ArithI64;

impl Semiring for ArithI64 {
    type Elem = i64;
    const NAME: &'static str = "arith-i64";
    fn add(a: i64, b: i64) -> i64 {
        a + b
    }
    fn mul(a: i64, b: i64) -> i64 {
        a * b
    }
    fn add_identity() -> i64 {
        0
    }
    fn mul_identity() -> Option<i64> {
        Some(1)
    }
    fn annihilating() -> bool {
        true
    }
}

/// `(or, and)` over `bool`; path existence.
#[derive(Clone, Copy, Debug)]
pub struct Boolean;

impl Semiring for Boolean {
    type Elem = bool;
    const NAME: &'static str = "boolean";
    fn add(a: bool, b: bool) -> bool {
        a | b
    }
    fn mul(a: bool, b: bool) -> bool {
        a & b
    }
    fn add_identity() -> bool {
        false
    }
    fn mul_identity() -> Option<bool> {
        Some(true)
    }
    fn annihilating() -> bool {
        true
    }
}

/// `(min, +)` over `f64`; shortest distances. The additive identity is IEEE
/// `+inf`, which saturates under `+` so distance relaxation cannot overflow.
/// Ties under `min` keep the first-encountered value.
#[derive(Clone, Copy, Debug)]
pub struct MinPlus;

impl Semiring for MinPlus {
    type Elem = f64;
    const NAME: &'static str = "min-plus";
    fn add(a: f64, b: f64) -> f64 {
        if b < a {
            b
        } else {
            a
        }
    }
    fn mul(a: f64, b: f64) -> f64 {
        a + b
    }
    fn add_identity() -> f64 {
        f64::INFINITY
    }
    fn mul_identity() -> Option<f64> {
        Some(0.0)
    }
    fn annihilating() -> bool {
        true
    }
}

/// `(max, min)` over `f64`; widest-bottleneck capacities.
#[derive(Clone, Copy, Debug)]
pub struct MaxMin;

impl Semiring for MaxMin {
    type Elem = f64;
    const NAME: &'static str = "max-min";
    fn add(a: f64, b: f64) -> f64 {
        if b > a {
            b
        } else {
            a
        }
    }
    fn mul(a: f64, b: f64) -> f64 {
        if b < a {
            b
        } else {
            a
        }
    }
    fn add_identity() -> f64 {
        f64::NEG_INFINITY
    }
    fn mul_identity() -> Option<f64> {
        Some(f64::INFINITY)
    }
    fn annihilating() -> bool {
        true
    }
}

/// `(min, select-second)` over `f64`; propagates the minimum of the right
/// operand's values, used for exponential-key sketches. Not annihilating:
/// `mul(null, b) = b`, so intersection iteration would be incorrect.
#[derive(Clone, Copy, Debug)]
pub struct Select2ndMin;

impl Semiring for Select2ndMin {
    type Elem = f64;
    const NAME: &'static str = "select2nd-min";
    fn add(a: f64, b: f64) -> f64 {
        if b < a {
            b
        } else {
            a
        }
    }
    fn mul(_a: f64, b: f64) -> f64 {
        b
    }
    fn add_identity() -> f64 {
        f64::INFINITY
    }
    fn mul_identity() -> Option<f64> {
        None
    }
    fn annihilating() -> bool {
        false
    }
}

/// `(min, select-second)` over `i64`; the minhash signature algebra, where
/// the propagated values are permuted column indices.
#[derive(Clone, Copy, Debug)]
pub struct Select2ndMinI64;

impl Semiring for Select2ndMinI64 {
    type Elem = i64;
    const NAME: &'static str = "select2nd-min-i64";
    fn add(a: i64, b: i64) -> i64 {
        a.min(b)
    }
    fn mul(_a: i64, b: i64) -> i64 {
        b
    }
    fn add_identity() -> i64 {
        i64::MAX
    }
    fn mul_identity() -> Option<i64> {
        None
    }
    fn annihilating() -> bool {
        false
    }
}

/// `(+, |a − b|)` over `f64`; pairwise Manhattan distances via union-mode
/// Gram products. Here the multiplicative identity coincides with the
/// additive one (0), so the algebra is neither annihilating nor
/// distributive; only `spgemm_union` computes with it correctly.
#[derive(Clone, Copy, Debug)]
pub struct Manhattan;

impl Semiring for Manhattan {
    type Elem = f64;
    const NAME: &'static str = "manhattan";
    fn add(a: f64, b: f64) -> f64 {
        a + b
    }
    fn mul(a: f64, b: f64) -> f64 {
        (a - b).abs()
    }
    fn add_identity() -> f64 {
        0.0
    }
    fn mul_identity() -> Option<f64> {
        None
    }
    fn annihilating() -> bool {
        false
    }
    fn distributive() -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn close_f64(a: f64, b: f64) -> bool {
        a.bit_eq(b) || (a - b).abs() <= 1e-9 * f64::max(1.0, f64::max(a.abs(), b.abs()))
    }

    /// Checks the semiring laws on 1000 sampled tuples: add identity,
    /// associativity, commutativity, distributivity (where claimed),
    /// annihilation (where claimed), and two-sidedness of the declared
    /// multiplicative identity.
    fn check_laws<S, F, E>(mut sample: F, eq: E)
    where
        S: Semiring,
        F: FnMut(&mut ChaCha8Rng) -> S::Elem,
        E: Fn(S::Elem, S::Elem) -> bool,
    {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..1000 {
            let a = sample(&mut rng);
            let b = sample(&mut rng);
            let c = sample(&mut rng);
            let id = S::add_identity();

            assert!(eq(S::add(id, a), a), "{}: add identity", S::NAME);
            assert!(eq(S::add(a, id), a), "{}: add identity (right)", S::NAME);
            assert!(
                eq(S::add(S::add(a, b), c), S::add(a, S::add(b, c))),
                "{}: add associativity",
                S::NAME
            );
            assert!(eq(S::add(a, b), S::add(b, a)), "{}: add commutativity", S::NAME);
            if S::distributive() {
                assert!(
                    eq(S::mul(a, S::add(b, c)), S::add(S::mul(a, b), S::mul(a, c))),
                    "{}: left distributivity",
                    S::NAME
                );
                assert!(
                    eq(S::mul(S::add(a, b), c), S::add(S::mul(a, c), S::mul(b, c))),
                    "{}: right distributivity",
                    S::NAME
                );
            }
            if S::annihilating() {
                assert!(eq(S::mul(a, id), id), "{}: right annihilation", S::NAME);
                assert!(eq(S::mul(id, a), id), "{}: left annihilation", S::NAME);
            }
            if let Some(one) = S::mul_identity() {
                assert!(eq(S::mul(one, a), a), "{}: left mul identity", S::NAME);
                assert!(eq(S::mul(a, one), a), "{}: right mul identity", S::NAME);
            }
        }
    }

    fn uniform_f64(rng: &mut ChaCha8Rng) -> f64 {
        rng.random_range(-10.0..10.0)
    }

    #[test]
    fn laws_arith_f64() {
        check_laws::<ArithF64, _, _>(uniform_f64, close_f64);
    }

    #[test]
    fn laws_arith_i64() {
        check_laws::<ArithI64, _, _>(|rng| rng.random_range(-100..100), |a, b| a == b);
    }

    #[test]
    fn laws_boolean() {
        check_laws::<Boolean, _, _>(|rng| rng.random(), |a, b| a == b);
    }

    #[test]
    fn laws_min_plus() {
        check_laws::<MinPlus, _, _>(uniform_f64, close_f64);
    }

    #[test]
    fn laws_max_min() {
        check_laws::<MaxMin, _, _>(uniform_f64, |a, b| a == b);
    }

    #[test]
    fn laws_select2nd_min() {
        check_laws::<Select2ndMin, _, _>(uniform_f64, |a, b| a == b);
    }

    #[test]
    fn laws_select2nd_min_i64() {
        check_laws::<Select2ndMinI64, _, _>(|rng| rng.random_range(-100..100), |a, b| a == b);
    }

    #[test]
    fn laws_manhattan() {
        // non-distributive by declaration; the remaining laws must hold
        assert!(!Manhattan::distributive());
        check_laws::<Manhattan, _, _>(uniform_f64, close_f64);
    }

    #[test]
    fn manhattan_is_genuinely_non_distributive() {
        // |1 - (1 + 1)| = 1 but |1 - 1| + |1 - 1| = 0
        let lhs = Manhattan::mul(1.0, Manhattan::add(1.0, 1.0));
        let rhs = Manhattan::add(Manhattan::mul(1.0, 1.0), Manhattan::mul(1.0, 1.0));
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn select2nd_min_is_one_sided_only() {
        // right-null annihilates but left-null passes the operand through,
        // which is exactly why the flag must be declared, not inferred
        assert_eq!(Select2ndMin::mul(3.0, f64::INFINITY), f64::INFINITY);
        assert_eq!(Select2ndMin::mul(f64::INFINITY, 3.0), 3.0);
    }
}
