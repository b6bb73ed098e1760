use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::fibword::{Letter, Word};
use crate::{Error, Result};

/// Distinct positive integers `a ≠ b` selecting `ξ_{a,b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    a: u64,
    b: u64,
}

impl Params {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 || a == b {
            return Err(Error::InvalidParams { a, b });
        }
        Ok(Params { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// Partial quotient carried by a letter.
    pub fn value(&self, l: Letter) -> u64 {
        match l {
            Letter::A => self.a,
            Letter::B => self.b,
        }
    }
}

/// 2×2 integer matrix `((m00, m01), (m10, m11))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub m00: BigInt,
    pub m01: BigInt,
    pub m10: BigInt,
    pub m11: BigInt,
}

impl Mat2 {
    pub fn new(
        m00: impl Into<BigInt>,
        m01: impl Into<BigInt>,
        m10: impl Into<BigInt>,
        m11: impl Into<BigInt>,
    ) -> Self {
        Mat2 {
            m00: m00.into(),
            m01: m01.into(),
            m10: m10.into(),
            m11: m11.into(),
        }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    /// `(q 1; 1 0)`, the matrix of one partial quotient.
    pub fn partial_quotient(q: u64) -> Self {
        Mat2::new(q, 1, 1, 0)
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        Mat2 {
            m00: &self.m00 * &other.m00 + &self.m01 * &other.m10,
            m01: &self.m00 * &other.m01 + &self.m01 * &other.m11,
            m10: &self.m10 * &other.m00 + &self.m11 * &other.m10,
            m11: &self.m10 * &other.m01 + &self.m11 * &other.m11,
        }
    }

    pub fn det(&self) -> BigInt {
        &self.m00 * &self.m11 - &self.m01 * &self.m10
    }

    pub fn is_symmetric(&self) -> bool {
        self.m01 == self.m10
    }

    pub fn is_nonnegative(&self) -> bool {
        [&self.m00, &self.m01, &self.m10, &self.m11]
            .iter()
            .all(|x| !x.is_negative())
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2 {
            m00: self.m00.clone(),
            m01: self.m10.clone(),
            m10: self.m01.clone(),
            m11: self.m11.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.m00.is_one() && self.m11.is_one() && self.m01.is_zero() && self.m10.is_zero()
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}, {}), ({}, {}))", self.m00, self.m01, self.m10, self.m11)
    }
}

/// Image of a letter: `A = (a 1; 1 0)` or `B = (b 1; 1 0)`.
pub fn letter_matrix(l: Letter, p: &Params) -> Mat2 {
    Mat2::partial_quotient(p.value(l))
}

/// The monoid homomorphism `Φ` with `Φ(a) = A`, `Φ(b) = B`.
///
/// Uses a balanced product tree, so long words cost `O(M(n) log n)`.
pub fn phi(w: &Word, p: &Params) -> Mat2 {
    phi_letters(w.letters(), p)
}

pub(crate) fn phi_letters(letters: &[Letter], p: &Params) -> Mat2 {
    match letters.len() {
        0 => Mat2::identity(),
        1 => letter_matrix(letters[0], p),
        n if n <= 16 => letters
            .iter()
            .fold(Mat2::identity(), |m, &l| m.mul(&letter_matrix(l, p))),
        n => {
            let (left, right) = letters.split_at(n / 2);
            phi_letters(left, p).mul(&phi_letters(right, p))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p12() -> Params {
        Params::new(1, 2).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(Params::new(1, 1).is_err());
        assert!(Params::new(0, 2).is_err());
        assert!(Params::new(3, 0).is_err());
        assert!(Params::new(2, 1).is_ok());
    }

    #[test]
    fn products() {
        let p = p12();
        let a = letter_matrix(Letter::A, &p);
        let b = letter_matrix(Letter::B, &p);
        let m = Mat2::new(7, -2, 5, 11);
        assert_eq!(Mat2::identity().mul(&m), m);
        assert_eq!(a.mul(&b), Mat2::new(3, 1, 2, 1));
        assert_eq!(a.mul(&b).mul(&a), Mat2::new(4, 3, 3, 2));
    }

    #[test]
    fn phi_examples() {
        let p = p12();
        assert!(phi(&Word::empty(), &p).is_identity());
        assert_eq!(phi(&"a".parse().unwrap(), &p), Mat2::new(1, 1, 1, 0));
        assert_eq!(phi(&"aba".parse().unwrap(), &p), Mat2::new(4, 3, 3, 2));
    }

    fn word(max: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(prop_oneof![Just(Letter::A), Just(Letter::B)], 0..=max)
            .prop_map(Word::from_letters)
    }

    proptest! {
        #[test]
        fn phi_is_a_homomorphism(u in word(50), v in word(50), a in 1u64..6, b in 6u64..12) {
            let p = Params::new(a, b).unwrap();
            prop_assert_eq!(phi(&u.concat(&v), &p), phi(&u, &p).mul(&phi(&v, &p)));
        }

        #[test]
        fn det_is_sign_of_length(u in word(60), a in 1u64..5, b in 5u64..9) {
            let p = Params::new(a, b).unwrap();
            let m = phi(&u, &p);
            let expected = if u.len() % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(m.det(), BigInt::from(expected));
            prop_assert!(m.is_nonnegative());
        }

        #[test]
        fn det_is_multiplicative(x in proptest::array::uniform4(-50i64..50), y in proptest::array::uniform4(-50i64..50)) {
            let m = Mat2::new(x[0], x[1], x[2], x[3]);
            let n = Mat2::new(y[0], y[1], y[2], y[3]);
            prop_assert_eq!(m.mul(&n).det(), m.det() * n.det());
        }
    }
}
