use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

/// Coefficient scalars for the algebra.
///
/// Everything downstream assumes exact arithmetic: the rewriting rule for odd
/// squares divides by two, and every identity check compares coefficients for
/// literal equality. The blanket impl admits any num-traits field-like type;
/// the crate-root aliases fix `BigRational`.
pub trait Scalar:
    Clone + PartialEq + Num + Signed + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Num + Signed + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// Scalar from a machine integer.
pub fn int<S: Scalar>(v: i64) -> S {
    S::from_i64(v).expect("integer representable in the scalar type")
}

/// (-1)^e as a scalar.
pub fn sign<S: Scalar>(e: usize) -> S {
    if e % 2 == 1 {
        -S::one()
    } else {
        S::one()
    }
}

/// Binomial coefficient as a scalar; zero when k > n.
pub fn binomial<S: Scalar>(n: usize, k: usize) -> S {
    if k > n {
        return S::zero();
    }
    let mut acc: i128 = 1;
    for t in 0..k.min(n - k) {
        acc = acc * (n - t) as i128 / (t + 1) as i128;
    }
    S::from_i128(acc).expect("binomial representable in the scalar type")
}
