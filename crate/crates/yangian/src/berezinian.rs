//! Quantum determinants, quantum minors, and quantum Berezinians.
//!
//! Permutation sums are evaluated by direct enumeration with factor-ordered
//! products, exactly as the defining formulas display them; the sizes at desk
//! scale never exceed a few dozen permutations.

use std::fmt;

use crate::algebra::AlgebraContext;
use crate::error::{Error, Result};
use crate::matrix::{Composition, SeriesMatrix};
use crate::morphism::Morphism;
use crate::scalar::{sign, Scalar};
use crate::series::USeries;
use crate::sign::SignSequence;

/// All permutations of 1..=n with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i8)>) {
        if cur.len() == n {
            let mut inversions = 0usize;
            for a in 0..n {
                for b in a + 1..n {
                    if cur[a] > cur[b] {
                        inversions += 1;
                    }
                }
            }
            out.push((cur.clone(), if inversions.is_multiple_of(2) { 1 } else { -1 }));
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v - 1] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// Sign of a permutation given as 1-based images.
pub fn permutation_sign(p: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Quantum determinant of a square series matrix:
/// sum over permutations of sgn * x_{s(1),1}(u) x_{s(2),2}(u-1) ... ;
/// the empty matrix yields 1.
pub fn qdet<S: Scalar>(x: &SeriesMatrix<S>) -> Result<USeries<S>> {
    if !x.is_square() {
        return Err(Error::NotSquare {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    let ctx = x.context();
    let l = x.rows();
    if l == 0 {
        return Ok(USeries::one(ctx));
    }
    // column k carries the argument u-(k-1)
    let shifted: Vec<Vec<USeries<S>>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|k| x.entry(i, k).shift(-((k - 1) as i64)))
                .collect()
        })
        .collect();
    let mut acc = USeries::zero(ctx);
    for (perm, sgn) in permutations(l) {
        let mut prod = USeries::one(ctx);
        for (k, &row) in perm.iter().enumerate() {
            prod = prod.mul(&shifted[row - 1][k])?;
        }
        acc = acc.add(&prod.scaled(&sign::<S>(if sgn < 0 { 1 } else { 0 })))?;
    }
    Ok(acc)
}

/// Quantum minor: qdet of the submatrix of T(u) picked by the two tuples.
pub fn qdet_minor<S: Scalar>(
    ctx: &AlgebraContext<S>,
    rows: &[usize],
    cols: &[usize],
) -> Result<USeries<S>> {
    if rows.len() != cols.len() {
        return Err(Error::TupleLengthMismatch {
            lhs: rows.len(),
            rhs: cols.len(),
        });
    }
    let t = SeriesMatrix::t_matrix(ctx);
    let sub = t.submatrix(rows, cols)?;
    qdet(&sub)
}

/// The evaluation points u_i = u + c_i of the Drinfeld-generator product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UShiftVector {
    shifts: Vec<i64>,
}

impl UShiftVector {
    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    /// c_i at 1-based position i.
    pub fn shift(&self, i: usize) -> i64 {
        self.shifts[i - 1]
    }

    pub fn len(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shifts.is_empty()
    }
}

impl fmt::Display for UShiftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.shifts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c:+}")?;
        }
        Ok(())
    }
}

/// c_1 = s_1; then c drops by 1 across a 00 step, gains 1 across a 11 step,
/// and stays put when the digits differ.
pub fn u_shifts(seq: &SignSequence) -> UShiftVector {
    let mut shifts = Vec::with_capacity(seq.len());
    if seq.is_empty() {
        return UShiftVector { shifts };
    }
    shifts.push(seq.digit(1) as i64);
    for i in 1..seq.len() {
        let prev = shifts[i - 1];
        let (a, b) = (seq.digit(i), seq.digit(i + 1));
        shifts.push(match (a, b) {
            (0, 0) => prev - 1,
            (1, 1) => prev + 1,
            _ => prev,
        });
    }
    UShiftVector { shifts }
}

/// The diagonal Drinfeld generators d_1(u), ..., d_{M+N}(u): the 1x1 Gauss
/// blocks for the finest composition.
pub fn drinfeld_generators<S: Scalar>(ctx: &AlgebraContext<S>) -> Result<Vec<USeries<S>>> {
    let t = SeriesMatrix::t_matrix(ctx);
    let g = t.gauss_decompose(&Composition::finest(ctx.size()))?;
    Ok((1..=ctx.size())
        .map(|a| g.d_block(a).entry(1, 1).clone())
        .collect())
}

/// b^s(u) = dtilde_1(u_1) ... dtilde_{M+N}(u_{M+N}), with dtilde_i the
/// Drinfeld generator d_i shifted to u_i and inverted where s_i = 1.
pub fn b_series<S: Scalar>(ctx: &AlgebraContext<S>) -> Result<USeries<S>> {
    let d = drinfeld_generators(ctx)?;
    let shifts = u_shifts(ctx.seq());
    let mut acc = USeries::one(ctx);
    for i in 1..=ctx.size() {
        let shifted = d[i - 1].shift(shifts.shift(i));
        let factor = if ctx.seq().digit(i) == 1 {
            shifted.invert()?
        } else {
            shifted
        };
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// The Berezinian of a square series matrix relative to a digit pattern:
/// a qdet-style sum over the 0-positions of X, times a permutation sum over
/// the 1-positions of X^{-1} with ascending arguments u-p+1, ..., u-p+q.
pub fn berezinian_of<S: Scalar>(x: &SeriesMatrix<S>, digits: &SignSequence) -> Result<USeries<S>> {
    if !x.is_square() {
        return Err(Error::NotSquare {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    if x.rows() != digits.len() {
        return Err(Error::DimensionMismatch {
            lhs_rows: x.rows(),
            lhs_cols: x.cols(),
            rhs_rows: digits.len(),
            rhs_cols: digits.len(),
        });
    }
    let ctx = x.context();
    let zp = digits.zero_positions();
    let op = digits.one_positions();
    let (p, q) = (zp.len(), op.len());

    let mut first = USeries::one(ctx);
    if p > 0 {
        let even = x.submatrix(&zp, &zp)?;
        first = qdet(&even)?;
    }

    let mut second = USeries::one(ctx);
    if q > 0 {
        let xinv = x.invert()?;
        let mut acc = USeries::zero(ctx);
        for (perm, sgn) in permutations(q) {
            let mut prod = USeries::one(ctx);
            for (k0, &img) in perm.iter().enumerate() {
                let k = k0 + 1;
                let entry = xinv.entry(op[k - 1], op[img - 1]);
                prod = prod.mul(&entry.shift(k as i64 - p as i64))?;
            }
            acc = acc.add(&prod.scaled(&sign::<S>(if sgn < 0 { 1 } else { 0 })))?;
        }
        second = acc;
    }

    first.mul(&second)
}

/// Quantum Berezinian of T(u) for the context's 01-sequence.
pub fn qsdet<S: Scalar>(ctx: &AlgebraContext<S>) -> Result<USeries<S>> {
    berezinian_of(&SeriesMatrix::t_matrix(ctx), ctx.seq())
}

/// The Berezinian with re-indexed columns/rows: theta permutes the zero
/// positions (column side of the first factor), tau the one positions (row
/// side of the second factor), with compensating signs. Equal to qsdet for
/// every theta, tau.
pub fn qsdet_permuted<S: Scalar>(
    ctx: &AlgebraContext<S>,
    theta: &[usize],
    tau: &[usize],
) -> Result<USeries<S>> {
    let zp = ctx.seq().zero_positions();
    let op = ctx.seq().one_positions();
    let (p, q) = (zp.len(), op.len());
    if theta.len() != p {
        return Err(Error::NotAPermutation { size: p });
    }
    if tau.len() != q {
        return Err(Error::NotAPermutation { size: q });
    }
    let t = SeriesMatrix::t_matrix(ctx);

    let mut first = USeries::one(ctx);
    if p > 0 {
        let mut acc = USeries::zero(ctx);
        for (perm, sgn) in permutations(p) {
            let mut prod = USeries::one(ctx);
            for (k0, &img) in perm.iter().enumerate() {
                let k = k0 + 1;
                let entry = t.entry(zp[img - 1], zp[theta[k - 1] - 1]);
                prod = prod.mul(&entry.shift(-((k - 1) as i64)))?;
            }
            acc = acc.add(&prod.scaled(&sign::<S>(if sgn < 0 { 1 } else { 0 })))?;
        }
        let total = permutation_sign(theta);
        first = acc.scaled(&sign::<S>(if total < 0 { 1 } else { 0 }));
    }

    let mut second = USeries::one(ctx);
    if q > 0 {
        let tinv = t.invert()?;
        let mut acc = USeries::zero(ctx);
        for (perm, sgn) in permutations(q) {
            let mut prod = USeries::one(ctx);
            for (k0, &img) in perm.iter().enumerate() {
                let k = k0 + 1;
                let entry = tinv.entry(op[tau[k - 1] - 1], op[img - 1]);
                prod = prod.mul(&entry.shift(k as i64 - p as i64))?;
            }
            acc = acc.add(&prod.scaled(&sign::<S>(if sgn < 0 { 1 } else { 0 })))?;
        }
        let total = permutation_sign(tau);
        second = acc.scaled(&sign::<S>(if total < 0 { 1 } else { 0 }));
    }

    first.mul(&second)
}

/// Block Berezinian of D_a(u) for the composition mu, in the block's own
/// variable u. The theorem-level evaluation point u_{a*1} - |1|_a is applied
/// by the caller via `block_evaluation_shift`.
pub fn qsdet_block<S: Scalar>(
    ctx: &AlgebraContext<S>,
    mu: &Composition,
    a: usize,
) -> Result<USeries<S>> {
    if mu.total() != ctx.size() {
        return Err(Error::BadComposition {
            expected: ctx.size(),
        });
    }
    if a < 1 || a > mu.len() {
        return Err(Error::IndexOutOfRange {
            index: a,
            size: mu.len(),
        });
    }
    let t = SeriesMatrix::t_matrix(ctx);
    let g = t.gauss_decompose(mu)?;
    berezinian_of(g.d_block(a), &mu.block_seq(ctx.seq(), a))
}

/// The shift c with u_{a*1} - |1|_a = u + c.
pub fn block_evaluation_shift<S: Scalar>(
    ctx: &AlgebraContext<S>,
    mu: &Composition,
    a: usize,
) -> i64 {
    let first = mu.absolute(a, 1);
    let shifts = u_shifts(ctx.seq());
    shifts.shift(first) - ctx.seq().digit(first) as i64
}

/// Berezinian of the leading i x i corner, computed in the sub-context of
/// the first i digits and carried back through the standard inclusion.
pub fn prefix_superminor<S: Scalar>(ctx: &AlgebraContext<S>, i: usize) -> Result<USeries<S>> {
    if i > ctx.size() {
        return Err(Error::IndexOutOfRange {
            index: i,
            size: ctx.size(),
        });
    }
    if i == 0 {
        return Ok(USeries::one(ctx));
    }
    let sub_ctx = AlgebraContext::from_seq(ctx.seq().prefix(i), ctx.order())?;
    let inner = qsdet(&sub_ctx)?;
    let include = Morphism::inclusion(&sub_ctx, ctx)?;
    include.apply_series(&inner)
}
