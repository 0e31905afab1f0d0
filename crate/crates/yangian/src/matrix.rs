//! Matrices of truncated series: the generating matrix T(u), its inverse,
//! block Gauss decomposition with respect to a composition, and the
//! quasideterminant (Schur complement) route to the same diagonal blocks.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgebraContext, AlgebraElement};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::USeries;
use crate::sign::SignSequence;

/// A composition mu_1 + ... + mu_n of the matrix size.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let expected = parts.iter().sum();
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::BadComposition { expected });
        }
        Ok(Composition { parts })
    }

    /// The finest composition (1, ..., 1).
    pub fn finest(total: usize) -> Self {
        Composition {
            parts: vec![1; total],
        }
    }

    /// The one-block composition (total).
    pub fn single(total: usize) -> Self {
        Composition { parts: vec![total] }
    }

    /// All 2^{total-1} compositions, coarsest part patterns first by length.
    pub fn all(total: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if remaining == 0 {
                out.push(Composition {
                    parts: current.clone(),
                });
                return;
            }
            for p in 1..=remaining {
                current.push(p);
                rec(remaining - p, current, out);
                current.pop();
            }
        }
        rec(total, &mut current, &mut out);
        out
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Size of block `a` (1-based).
    pub fn part(&self, a: usize) -> usize {
        self.parts[a - 1]
    }

    /// Partial sum p_a = mu_1 + ... + mu_{a-1}; p_1 = 0.
    pub fn partial_sum(&self, a: usize) -> usize {
        self.parts[..a - 1].iter().sum()
    }

    /// Absolute position of local index `i` in block `a`.
    pub fn absolute(&self, a: usize, i: usize) -> usize {
        self.partial_sum(a) + i
    }

    /// Digit subsequence of block `a`.
    pub fn block_seq(&self, seq: &SignSequence, a: usize) -> SignSequence {
        seq.slice(self.partial_sum(a), self.part(a))
    }

    /// Composition of the tail blocks (mu_a, ..., mu_n).
    pub fn tail(&self, a: usize) -> Composition {
        Composition {
            parts: self.parts[a - 1..].to_vec(),
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::BadComposition { expected: 0 })
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// Rectangular grid of series over one context. Entry indices are 1-based.
#[derive(Clone, PartialEq, Debug)]
pub struct SeriesMatrix<S: Scalar> {
    ctx: AlgebraContext<S>,
    rows: usize,
    cols: usize,
    entries: Vec<USeries<S>>,
}

impl<S: Scalar> SeriesMatrix<S> {
    /// The generating matrix T(u); constant term is the identity.
    pub fn t_matrix(ctx: &AlgebraContext<S>) -> Self {
        let size = ctx.size();
        let entries = (1..=size)
            .flat_map(|i| (1..=size).map(move |j| (i, j)))
            .map(|(i, j)| USeries::generator(ctx, i, j).expect("indices in range"))
            .collect();
        SeriesMatrix {
            ctx: ctx.clone(),
            rows: size,
            cols: size,
            entries,
        }
    }

    pub fn identity(ctx: &AlgebraContext<S>, n: usize) -> Self {
        let entries = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .map(|(i, j)| {
                if i == j {
                    USeries::one(ctx)
                } else {
                    USeries::zero(ctx)
                }
            })
            .collect();
        SeriesMatrix {
            ctx: ctx.clone(),
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn zero(ctx: &AlgebraContext<S>, rows: usize, cols: usize) -> Self {
        SeriesMatrix {
            ctx: ctx.clone(),
            rows,
            cols,
            entries: vec![USeries::zero(ctx); rows * cols],
        }
    }

    /// Row-major entries; length must be rows*cols.
    pub fn from_entries(
        ctx: &AlgebraContext<S>,
        rows: usize,
        cols: usize,
        entries: Vec<USeries<S>>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                lhs_rows: rows,
                lhs_cols: cols,
                rhs_rows: entries.len(),
                rhs_cols: 1,
            });
        }
        for e in &entries {
            if e.context() != ctx {
                return Err(Error::ContextMismatch);
            }
        }
        Ok(SeriesMatrix {
            ctx: ctx.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn context(&self) -> &AlgebraContext<S> {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 1-based (i, j).
    pub fn entry(&self, i: usize, j: usize) -> &USeries<S> {
        assert!(
            i >= 1 && i <= self.rows && j >= 1 && j <= self.cols,
            "entry index out of range"
        );
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    fn set_entry(&mut self, i: usize, j: usize, v: USeries<S>) {
        self.entries[(i - 1) * self.cols + (j - 1)] = v;
    }

    /// Submatrix picked by 1-based row and column index lists (repeats allowed).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        for &i in rows {
            if i < 1 || i > self.rows {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    size: self.rows,
                });
            }
        }
        for &j in cols {
            if j < 1 || j > self.cols {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    size: self.cols,
                });
            }
        }
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.entry(i, j).clone())
            .collect();
        Ok(SeriesMatrix {
            ctx: self.ctx.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        })
    }

    /// Block (a, b) of the composition pattern.
    pub fn block(&self, mu: &Composition, a: usize, b: usize) -> Self {
        let (pa, pb) = (mu.partial_sum(a), mu.partial_sum(b));
        let rows: Vec<usize> = (1..=mu.part(a)).map(|i| pa + i).collect();
        let cols: Vec<usize> = (1..=mu.part(b)).map(|j| pb + j).collect();
        self.submatrix(&rows, &cols).expect("block in range")
    }

    fn write_block(&mut self, mu: &Composition, a: usize, b: usize, v: &Self) {
        let (pa, pb) = (mu.partial_sum(a), mu.partial_sum(b));
        for i in 1..=v.rows {
            for j in 1..=v.cols {
                self.set_entry(pa + i, pb + j, v.entry(i, j).clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dims_eq(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(SeriesMatrix {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dims_eq(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(SeriesMatrix {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    fn check_dims_eq(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        Ok(())
    }

    /// Noncommutative matrix product, entrywise truncated at D.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 1..=self.rows {
            for j in 1..=other.cols {
                let mut acc = USeries::zero(&self.ctx);
                for k in 1..=self.cols {
                    acc = acc.add(&self.entry(i, k).mul(other.entry(k, j))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(SeriesMatrix {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// Two-sided inverse up to order D via the recursive coefficient solve
    /// B_0 = A_0^{-1}, B_m = -A_0^{-1} sum_{r>=1} A_r B_{m-r}. The constant
    /// term must be an invertible scalar matrix.
    pub fn invert(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let d = self.ctx.order();
        // constant-term scalar matrix
        let mut a0 = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                let c = self
                    .entry(i, j)
                    .coefficient(0)
                    .expect("order 0 present")
                    .as_scalar()
                    .ok_or(Error::NonInvertible)?;
                a0.push(c);
            }
        }
        let b0 = scalar_inverse(n, &a0).ok_or(Error::NonInvertible)?;

        // coefficient matrices of the input, as plain element grids
        let coeff = |r: usize| -> Vec<AlgebraElement<S>> {
            self.entries
                .iter()
                .map(|e| e.coefficient(r).expect("within order").clone())
                .collect()
        };
        let a: Vec<Vec<AlgebraElement<S>>> = (0..=d).map(coeff).collect();

        let b0_elems: Vec<AlgebraElement<S>> =
            b0.iter().map(|c| self.ctx.scalar(c.clone())).collect();
        let mut b: Vec<Vec<AlgebraElement<S>>> = vec![b0_elems];
        for m in 1..=d {
            // s = sum_{r=1..m} A_r B_{m-r}
            let mut s_grid: Vec<AlgebraElement<S>> = vec![self.ctx.zero(); n * n];
            for r in 1..=m {
                for i in 0..n {
                    for j in 0..n {
                        let mut acc = s_grid[i * n + j].clone();
                        for k in 0..n {
                            acc = acc.add(&a[r][i * n + k].mul(&b[m - r][k * n + j])?)?;
                        }
                        s_grid[i * n + j] = acc;
                    }
                }
            }
            // B_m = -B_0 * s (B_0 is a scalar matrix, entries commute)
            let mut bm: Vec<AlgebraElement<S>> = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    let mut acc = self.ctx.zero();
                    for k in 0..n {
                        acc = acc.add(&s_grid[k * n + j].scaled(&b0[i * n + k]))?;
                    }
                    bm.push(acc.neg());
                }
            }
            b.push(bm);
        }

        // reassemble entrywise series
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let coeffs = (0..=d).map(|m| b[m][i * n + j].clone()).collect();
                entries.push(USeries::from_coefficients(&self.ctx, coeffs)?);
            }
        }
        Ok(SeriesMatrix {
            ctx: self.ctx.clone(),
            rows: n,
            cols: n,
            entries,
        })
    }

    /// Block LDU by forward elimination: returns F (lower unitriangular),
    /// the diagonal blocks D_a, and E (upper unitriangular) with F.D.E = self.
    pub fn gauss_decompose(&self, mu: &Composition) -> Result<GaussFactors<S>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if mu.total() != self.rows {
            return Err(Error::BadComposition {
                expected: self.rows,
            });
        }
        let n = mu.len();
        let mut work = self.clone();
        let mut e = Self::identity(&self.ctx, self.rows);
        let mut f = Self::identity(&self.ctx, self.rows);
        let mut d_blocks = Vec::with_capacity(n);
        for a in 1..=n {
            let da = work.block(mu, a, a);
            let dinv = da.invert()?;
            for b in a + 1..=n {
                let eab = dinv.mul(&work.block(mu, a, b))?;
                let fba = work.block(mu, b, a).mul(&dinv)?;
                e.write_block(mu, a, b, &eab);
                f.write_block(mu, b, a, &fba);
            }
            for b in a + 1..=n {
                let left = work.block(mu, b, a).mul(&dinv)?;
                for c in a + 1..=n {
                    let upd = left.mul(&work.block(mu, a, c))?;
                    let new_block = work.block(mu, b, c).sub(&upd)?;
                    work.write_block(mu, b, c, &new_block);
                }
            }
            d_blocks.push(da);
        }
        Ok(GaussFactors {
            mu: mu.clone(),
            d_blocks,
            e,
            f,
        })
    }

    /// The boxed quasideterminant of block `a`: the Schur complement
    /// A_aa - A_{a,<} (A_{<,<})^{-1} A_{<,a} of the leading blocks.
    pub fn schur_block(&self, mu: &Composition, a: usize) -> Result<Self> {
        if !self.is_square() || mu.total() != self.rows {
            return Err(Error::BadComposition {
                expected: self.rows,
            });
        }
        if a < 1 || a > mu.len() {
            return Err(Error::IndexOutOfRange {
                index: a,
                size: mu.len(),
            });
        }
        let p = mu.partial_sum(a);
        let diag = self.block(mu, a, a);
        if p == 0 {
            return Ok(diag);
        }
        let leading: Vec<usize> = (1..=p).collect();
        let own: Vec<usize> = (p + 1..=p + mu.part(a)).collect();
        let corner = self.submatrix(&leading, &leading)?;
        let west = self.submatrix(&own, &leading)?;
        let north = self.submatrix(&leading, &own)?;
        let correction = west.mul(&corner.invert()?)?.mul(&north)?;
        diag.sub(&correction)
    }
}

impl<S: Scalar> fmt::Display for SeriesMatrix<S> {
    /// Row-major, entries in series text form, tab-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                if j > 1 {
                    write!(f, "\t")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            if i < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Exact Gauss-Jordan inverse of an n x n scalar grid (row-major).
fn scalar_inverse<S: Scalar>(n: usize, a: &[S]) -> Option<Vec<S>> {
    let mut m: Vec<S> = a.to_vec();
    let mut inv: Vec<S> = (0..n * n)
        .map(|idx| {
            if idx / n == idx % n {
                S::one()
            } else {
                S::zero()
            }
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !m[r * n + col].is_zero())?;
        if pivot_row != col {
            for j in 0..n {
                m.swap(col * n + j, pivot_row * n + j);
                inv.swap(col * n + j, pivot_row * n + j);
            }
        }
        let pivot = m[col * n + col].clone();
        for j in 0..n {
            m[col * n + j] = m[col * n + j].clone() / pivot.clone();
            inv[col * n + j] = inv[col * n + j].clone() / pivot.clone();
        }
        for r in 0..n {
            if r == col || m[r * n + col].is_zero() {
                continue;
            }
            let factor = m[r * n + col].clone();
            for j in 0..n {
                m[r * n + j] = m[r * n + j].clone() - factor.clone() * m[col * n + j].clone();
                inv[r * n + j] = inv[r * n + j].clone() - factor.clone() * inv[col * n + j].clone();
            }
        }
    }
    Some(inv)
}

/// The factors of a block Gauss decomposition.
#[derive(Clone, Debug)]
pub struct GaussFactors<S: Scalar> {
    mu: Composition,
    d_blocks: Vec<SeriesMatrix<S>>,
    e: SeriesMatrix<S>,
    f: SeriesMatrix<S>,
}

impl<S: Scalar> GaussFactors<S> {
    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    /// Diagonal block D_a (1-based).
    pub fn d_block(&self, a: usize) -> &SeriesMatrix<S> {
        &self.d_blocks[a - 1]
    }

    pub fn d_blocks(&self) -> &[SeriesMatrix<S>] {
        &self.d_blocks
    }

    /// D'_a = (D_a)^{-1}.
    pub fn d_prime(&self, a: usize) -> Result<SeriesMatrix<S>> {
        self.d_block(a).invert()
    }

    pub fn e(&self) -> &SeriesMatrix<S> {
        &self.e
    }

    pub fn f(&self) -> &SeriesMatrix<S> {
        &self.f
    }

    /// Assemble diag(D_1, ..., D_n) at full size.
    pub fn block_diagonal(&self) -> SeriesMatrix<S> {
        let ctx = self.e.context().clone();
        let mut d = SeriesMatrix::zero(&ctx, self.mu.total(), self.mu.total());
        for a in 1..=self.mu.len() {
            d.write_block(&self.mu, a, a, &self.d_blocks[a - 1]);
        }
        d
    }

    /// F . diag(D) . E, which must reproduce the decomposed matrix.
    pub fn reconstruct(&self) -> Result<SeriesMatrix<S>> {
        self.f.mul(&self.block_diagonal())?.mul(&self.e)
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

    /// Independent matrix inversion oracle: sum_k (I - A)^k.
    fn neumann_invert(a: &SeriesMatrix<BigRational>) -> SeriesMatrix<BigRational> {
        let c = a.context();
        let id = SeriesMatrix::identity(c, a.rows());
        let delta = id.sub(a).unwrap();
        let mut acc = SeriesMatrix::identity(c, a.rows());
        let mut pow = SeriesMatrix::identity(c, a.rows());
        for _ in 1..=c.order() {
            pow = pow.mul(&delta).unwrap();
            acc = acc.add(&pow).unwrap();
        }
        acc
    }

    #[test]
    fn t_matrix_shape() {
        let c = ctx("00", 2);
        let t = SeriesMatrix::t_matrix(&c);
        assert_eq!(t.rows(), 2);
        for i in 1..=2 {
            for j in 1..=2 {
                let c0 = t.entry(i, j).coefficient(0).unwrap();
                let expect = BigRational::from_integer(if i == j { 1 } else { 0 }.into());
                assert_eq!(c0.as_scalar(), Some(expect));
            }
        }
        assert_eq!(
            t.entry(1, 2).coefficient(1).unwrap(),
            &c.generator(1, 2, 1).unwrap()
        );
    }

    #[test]
    fn identity_is_neutral() {
        let c = ctx("010", 2);
        let t = SeriesMatrix::t_matrix(&c);
        let id = SeriesMatrix::identity(&c, 3);
        assert_eq!(t.mul(&id).unwrap(), t);
        assert_eq!(id.mul(&t).unwrap(), t);
    }

    #[test]
    fn mat_mul_associative() {
        let c = ctx("01", 3);
        let t = SeriesMatrix::t_matrix(&c);
        let tinv = t.invert().unwrap();
        let lhs = t.mul(&tinv).unwrap().mul(&t).unwrap();
        let rhs = t.mul(&tinv.mul(&t).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn invert_scalar_case() {
        let c = ctx("0", 3);
        let t = SeriesMatrix::t_matrix(&c);
        let tinv = t.invert().unwrap();
        assert_eq!(
            tinv.entry(1, 1),
            &USeries::generator(&c, 1, 1).unwrap().invert().unwrap()
        );
    }

    #[test]
    fn invert_matches_neumann_and_is_two_sided() {
        for seq in ["00", "01", "0101", "1010"] {
            let c = ctx(seq, 3);
            let t = SeriesMatrix::t_matrix(&c);
            let tinv = t.invert().unwrap();
            assert_eq!(tinv, neumann_invert(&t));
            let id = SeriesMatrix::identity(&c, c.size());
            assert_eq!(t.mul(&tinv).unwrap(), id);
            assert_eq!(tinv.mul(&t).unwrap(), id);
        }
    }

    #[test]
    fn invert_first_order_entry() {
        let c = ctx("00", 3);
        let tinv = SeriesMatrix::t_matrix(&c).invert().unwrap();
        assert_eq!(
            tinv.entry(1, 2).coefficient(1).unwrap(),
            &c.generator(1, 2, 1).unwrap().neg()
        );
    }

    #[test]
    fn invert_rejects_singular() {
        let c = ctx("00", 2);
        let t = SeriesMatrix::t_matrix(&c);
        let sing = SeriesMatrix::from_entries(&c, 1, 1, vec![t.entry(1, 2).clone()]).unwrap();
        assert_eq!(sing.invert(), Err(Error::NonInvertible));
    }

    #[test]
    fn gauss_single_block_is_trivial() {
        let c = ctx("01", 2);
        let t = SeriesMatrix::t_matrix(&c);
        let g = t.gauss_decompose(&Composition::single(2)).unwrap();
        assert_eq!(g.e(), &SeriesMatrix::identity(&c, 2));
        assert_eq!(g.f(), &SeriesMatrix::identity(&c, 2));
        assert_eq!(g.d_block(1), &t);
    }

    #[test]
    fn gauss_two_by_two_oracle() {
        // mu = (1,1): d1 = t11, d2 = t22 - t21 t11^{-1} t12, built by hand
        let c = ctx("00", 3);
        let t = SeriesMatrix::t_matrix(&c);
        let g = t.gauss_decompose(&Composition::finest(2)).unwrap();
        let t11 = USeries::generator(&c, 1, 1).unwrap();
        let t12 = USeries::generator(&c, 1, 2).unwrap();
        let t21 = USeries::generator(&c, 2, 1).unwrap();
        let t22 = USeries::generator(&c, 2, 2).unwrap();
        assert_eq!(g.d_block(1).entry(1, 1), &t11);
        let d2 = t22
            .sub(&t21.mul(&t11.invert().unwrap()).unwrap().mul(&t12).unwrap())
            .unwrap();
        assert_eq!(g.d_block(2).entry(1, 1), &d2);
        assert_eq!(g.reconstruct().unwrap(), t);
    }

    #[test]
    fn gauss_reconstructs_super_case() {
        let c = ctx("1010", 3);
        let t = SeriesMatrix::t_matrix(&c);
        let mu: Composition = "2,2".parse().unwrap();
        let g = t.gauss_decompose(&mu).unwrap();
        assert_eq!(g.reconstruct().unwrap(), t);
    }

    #[test]
    fn schur_matches_gauss() {
        let c = ctx("010", 3);
        let t = SeriesMatrix::t_matrix(&c);
        for mu in Composition::all(3) {
            let g = t.gauss_decompose(&mu).unwrap();
            for a in 1..=mu.len() {
                assert_eq!(
                    t.schur_block(&mu, a).unwrap(),
                    *g.d_block(a),
                    "mu={mu} a={a}"
                );
            }
        }
    }

    #[test]
    fn schur_first_block_is_corner() {
        let c = ctx("0011", 2);
        let t = SeriesMatrix::t_matrix(&c);
        let mu: Composition = "2,2".parse().unwrap();
        let corner = t.submatrix(&[1, 2], &[1, 2]).unwrap();
        assert_eq!(t.schur_block(&mu, 1).unwrap(), corner);
    }

    #[test]
    fn d_prime_is_inverse() {
        let c = ctx("01", 3);
        let t = SeriesMatrix::t_matrix(&c);
        let g = t.gauss_decompose(&Composition::finest(2)).unwrap();
        let da = g.d_block(2);
        let dp = g.d_prime(2).unwrap();
        let id = SeriesMatrix::identity(&c, 1);
        assert_eq!(da.mul(&dp).unwrap(), id);
        assert_eq!(
            dp.entry(1, 1).coefficient(0).unwrap().as_scalar(),
            Some(BigRational::from_integer(1.into()))
        );
    }

    #[test]
    fn gauss_rejects_singular_pivot() {
        let c = ctx("00", 2);
        let t = SeriesMatrix::t_matrix(&c);
        let bad = SeriesMatrix::from_entries(
            &c,
            2,
            2,
            vec![
                t.entry(1, 2).clone(),
                t.entry(1, 1).clone(),
                t.entry(2, 2).clone(),
                t.entry(2, 1).clone(),
            ],
        )
        .unwrap();
        assert!(matches!(
            bad.gauss_decompose(&Composition::finest(2)),
            Err(Error::NonInvertible)
        ));
    }

    #[test]
    fn composition_helpers() {
        let mu: Composition = "2,1,1".parse().unwrap();
        assert_eq!(mu.total(), 4);
        assert_eq!(mu.partial_sum(1), 0);
        assert_eq!(mu.partial_sum(3), 3);
        assert_eq!(mu.absolute(2, 1), 3);
        assert_eq!(Composition::all(4).len(), 8);
        assert!(Composition::new(vec![]).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
        let seq: SignSequence = "0110".parse().unwrap();
        assert_eq!(mu.block_seq(&seq, 1).to_string(), "01");
        assert_eq!(mu.block_seq(&seq, 2).to_string(), "1");
        assert_eq!(mu.tail(2).parts(), &[1, 1]);
    }
}
