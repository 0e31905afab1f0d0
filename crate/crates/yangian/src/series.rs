//! Truncated formal power series in u^{-1} with algebra coefficients.
//!
//! Every series carries exactly D+1 coefficients (orders 0..=D) and every
//! operation computes each of them exactly; nothing above D is tracked.

use std::fmt;

use crate::algebra::{AlgebraContext, AlgebraElement};
use crate::error::{Error, Result};
use crate::scalar::{binomial, int, Scalar};

/// Series sum_{k=0}^{D} c_k u^{-k} with c_k in the algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct USeries<S: Scalar> {
    ctx: AlgebraContext<S>,
    coeffs: Vec<AlgebraElement<S>>,
}

impl<S: Scalar> USeries<S> {
    pub fn zero(ctx: &AlgebraContext<S>) -> Self {
        USeries {
            ctx: ctx.clone(),
            coeffs: vec![ctx.zero(); ctx.order() + 1],
        }
    }

    pub fn one(ctx: &AlgebraContext<S>) -> Self {
        Self::from_scalar(ctx, S::one())
    }

    /// The constant series c.
    pub fn from_scalar(ctx: &AlgebraContext<S>, c: S) -> Self {
        let mut s = Self::zero(ctx);
        s.coeffs[0] = ctx.scalar(c);
        s
    }

    /// t_{i,j}(u): delta at order zero, then the generators of each level.
    pub fn generator(ctx: &AlgebraContext<S>, i: usize, j: usize) -> Result<Self> {
        ctx.check_index(i)?;
        ctx.check_index(j)?;
        let mut coeffs = Vec::with_capacity(ctx.order() + 1);
        coeffs.push(ctx.scalar(if i == j { S::one() } else { S::zero() }));
        for r in 1..=ctx.order() {
            coeffs.push(ctx.generator(i, j, r)?);
        }
        Ok(USeries {
            ctx: ctx.clone(),
            coeffs,
        })
    }

    pub fn from_coefficients(
        ctx: &AlgebraContext<S>,
        coeffs: Vec<AlgebraElement<S>>,
    ) -> Result<Self> {
        if coeffs.len() != ctx.order() + 1 {
            return Err(Error::TruncationExceeded {
                order: coeffs.len().saturating_sub(1),
                max: ctx.order(),
            });
        }
        for c in &coeffs {
            if c.context() != ctx {
                return Err(Error::ContextMismatch);
            }
        }
        Ok(USeries {
            ctx: ctx.clone(),
            coeffs,
        })
    }

    pub fn context(&self) -> &AlgebraContext<S> {
        &self.ctx
    }

    /// Highest tracked order D.
    pub fn order(&self) -> usize {
        self.ctx.order()
    }

    /// Exact coefficient of u^{-k}; k beyond D is a truncation error, not zero.
    pub fn coefficient(&self, k: usize) -> Result<&AlgebraElement<S>> {
        self.coeffs.get(k).ok_or(Error::TruncationExceeded {
            order: k,
            max: self.ctx.order(),
        })
    }

    pub fn coefficients(&self) -> &[AlgebraElement<S>] {
        &self.coeffs
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(USeries {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        USeries {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scaled(&self, c: &S) -> Self {
        USeries {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|x| x.scaled(c)).collect(),
        }
    }

    /// Cauchy product truncated at D; factor order is preserved.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let d = self.ctx.order();
        let mut coeffs = Vec::with_capacity(d + 1);
        for m in 0..=d {
            let mut acc = self.ctx.zero();
            for r in 0..=m {
                let term = self.coeffs[r].mul(&other.coeffs[m - r])?;
                acc = acc.add(&term)?;
            }
            coeffs.push(acc);
        }
        Ok(USeries {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    /// Substitute u -> u + c. Exact: order m of the result only mixes orders
    /// <= m of the input, via (u+c)^{-r} = sum_k binom(r+k-1,k) (-c)^k u^{-r-k}.
    pub fn shift(&self, c: i64) -> Self {
        if c == 0 {
            return self.clone();
        }
        let d = self.ctx.order();
        let mut coeffs = Vec::with_capacity(d + 1);
        coeffs.push(self.coeffs[0].clone());
        for m in 1..=d {
            let mut acc = self.ctx.zero();
            for r in 1..=m {
                let k = m - r;
                let factor = binomial::<S>(m - 1, k) * num_traits::pow(int::<S>(-c), k);
                if !factor.is_zero() {
                    acc = acc
                        .add(&self.coeffs[r].scaled(&factor))
                        .expect("same context");
                }
            }
            coeffs.push(acc);
        }
        USeries {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }

    /// Two-sided inverse up to order D. The constant term must be a nonzero
    /// scalar; coefficients solve a_0 b_m = -sum_{r>=1} a_r b_{m-r}.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coeffs[0].as_scalar().ok_or(Error::NonInvertible)?;
        if c0.is_zero() {
            return Err(Error::NonInvertible);
        }
        let inv0 = S::one() / c0;
        let d = self.ctx.order();
        let mut coeffs: Vec<AlgebraElement<S>> = Vec::with_capacity(d + 1);
        coeffs.push(self.ctx.scalar(inv0.clone()));
        for m in 1..=d {
            let mut acc = self.ctx.zero();
            for r in 1..=m {
                acc = acc.add(&self.coeffs[r].mul(&coeffs[m - r])?)?;
            }
            coeffs.push(acc.scaled(&-inv0.clone()));
        }
        Ok(USeries {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].as_scalar() == Some(S::one()) && self.coeffs[1..].iter().all(|c| c.is_zero())
    }
}

/// Order of the first differing coefficient, with the difference there.
pub fn first_difference<S: Scalar>(
    a: &USeries<S>,
    b: &USeries<S>,
) -> Result<Option<(usize, AlgebraElement<S>)>> {
    if a.context() != b.context() {
        return Err(Error::ContextMismatch);
    }
    for k in 0..=a.order() {
        let diff = a.coeffs[k].sub(&b.coeffs[k])?;
        if !diff.is_zero() {
            return Ok(Some((k, diff)));
        }
    }
    Ok(None)
}

impl<S: Scalar> fmt::Display for USeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            if k == 0 {
                write!(f, "u^0: {c}")?;
            } else {
                write!(f, "u^-{k}: {c}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Ctx = AlgebraContext<BigRational>;

    fn ctx(seq: &str, order: usize) -> Ctx {
        Ctx::from_seq(seq.parse().unwrap(), order).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    /// Independent inversion oracle: sum_k (1 - a)^k, truncated.
    fn neumann_invert(a: &USeries<BigRational>) -> USeries<BigRational> {
        let c = a.context();
        let one = USeries::one(c);
        let delta = one.sub(a).unwrap();
        let mut acc = USeries::one(c);
        let mut pow = USeries::one(c);
        for _ in 1..=c.order() {
            pow = pow.mul(&delta).unwrap();
            acc = acc.add(&pow).unwrap();
        }
        acc
    }

    #[test]
    fn generator_series_shape() {
        let c = ctx("00", 2);
        let t11 = USeries::generator(&c, 1, 1).unwrap();
        assert_eq!(t11.coefficient(0).unwrap().as_scalar(), Some(rat(1)));
        assert_eq!(t11.coefficient(1).unwrap(), &c.generator(1, 1, 1).unwrap());
        assert_eq!(t11.coefficient(2).unwrap(), &c.generator(1, 1, 2).unwrap());
        let t12 = USeries::generator(&c, 1, 2).unwrap();
        assert!(t12.coefficient(0).unwrap().is_zero());
        assert_eq!(t12.coefficients().len(), 3);
        assert!(matches!(
            t11.coefficient(3),
            Err(Error::TruncationExceeded { .. })
        ));
    }

    #[test]
    fn mul_unit_and_cross_term() {
        let c = ctx("00", 3);
        let a = USeries::generator(&c, 1, 1).unwrap();
        assert_eq!(a.mul(&USeries::one(&c)).unwrap(), a);
        let b = USeries::generator(&c, 2, 2).unwrap();
        let p = a.mul(&b).unwrap();
        let expected = c
            .generator(1, 1, 1)
            .unwrap()
            .add(&c.generator(2, 2, 1).unwrap())
            .unwrap();
        assert_eq!(p.coefficient(1).unwrap(), &expected);
    }

    #[test]
    fn mul_is_order_sensitive() {
        // Y_{1|1}(01): the order-2 coefficients differ by a supercommutator
        let c = ctx("01", 3);
        let a = USeries::generator(&c, 1, 2).unwrap();
        let b = USeries::generator(&c, 2, 1).unwrap();
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        assert_ne!(ab, ba);
        // order 2 only sees the level-1 generators, so the difference is
        // their plain commutator computed at the element level
        let diff = ab
            .coefficient(2)
            .unwrap()
            .sub(ba.coefficient(2).unwrap())
            .unwrap();
        let x = c.generator(1, 2, 1).unwrap();
        let y = c.generator(2, 1, 1).unwrap();
        let oracle = x.mul(&y).unwrap().sub(&y.mul(&x).unwrap()).unwrap();
        assert_eq!(diff, oracle);
        assert!(!diff.is_zero());
    }

    #[test]
    fn shift_examples() {
        let c = ctx("00", 3);
        let a = USeries::generator(&c, 1, 1).unwrap();
        assert_eq!(a.shift(0), a);
        // (u-1): coefficient of u^-2 is t^(2) + t^(1)
        let shifted = a.shift(-1);
        let expected = c
            .generator(1, 1, 2)
            .unwrap()
            .add(&c.generator(1, 1, 1).unwrap())
            .unwrap();
        assert_eq!(shifted.coefficient(2).unwrap(), &expected);
        assert_eq!(a.shift(1).shift(-1), a);
        assert_eq!(a.shift(-2).shift(2), a);
    }

    #[test]
    fn shift_is_multiplicative() {
        let c = ctx("010", 3);
        let a = USeries::generator(&c, 1, 2).unwrap();
        let b = USeries::generator(&c, 2, 3).unwrap();
        for s in [-2i64, 1, 3] {
            let lhs = a.mul(&b).unwrap().shift(s);
            let rhs = a.shift(s).mul(&b.shift(s)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn invert_examples() {
        let c = ctx("0", 2);
        assert!(USeries::one(&c).invert().unwrap().is_one());
        let a = USeries::generator(&c, 1, 1).unwrap();
        let b = a.invert().unwrap();
        assert_eq!(
            b.coefficient(1).unwrap(),
            &c.generator(1, 1, 1).unwrap().neg()
        );
        let t1 = c.generator(1, 1, 1).unwrap();
        let expected2 = t1
            .mul(&t1)
            .unwrap()
            .sub(&c.generator(1, 1, 2).unwrap())
            .unwrap();
        assert_eq!(b.coefficient(2).unwrap(), &expected2);
        assert_eq!(b, neumann_invert(&a));
        assert!(a.mul(&b).unwrap().is_one());
        assert!(b.mul(&a).unwrap().is_one());
    }

    #[test]
    fn invert_rejects_zero_constant() {
        let c = ctx("00", 2);
        let a = USeries::generator(&c, 1, 2).unwrap();
        assert_eq!(a.invert(), Err(Error::NonInvertible));
    }

    #[test]
    fn invert_scalar_constant() {
        // constant term 3 after adding the unit head of t_{1,1}(u)
        let c = ctx("0", 3);
        let two = USeries::from_scalar(&c, rat(2));
        let a = two.add(&USeries::generator(&c, 1, 1).unwrap()).unwrap();
        let b = a.invert().unwrap();
        assert!(a.mul(&b).unwrap().is_one());
        assert!(b.mul(&a).unwrap().is_one());
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(b, neumann_invert(&a.scaled(&third)).scaled(&third));
    }

    #[test]
    fn shift_invert_commute() {
        let c = ctx("01", 3);
        let a = USeries::generator(&c, 1, 1).unwrap();
        for s in [-1i64, 2] {
            assert_eq!(a.invert().unwrap().shift(s), a.shift(s).invert().unwrap());
        }
    }

    #[test]
    fn display_form() {
        let c = ctx("0", 1);
        let a = USeries::generator(&c, 1, 1).unwrap();
        assert_eq!(a.to_string(), "u^0: 1; u^-1: t[1,1;1]");
    }
}
