//! Maps between super Yangians, stored as finite generator-image tables.
//!
//! A morphism keeps, for every source pair (i, j), the image series of
//! t_{i,j}(u) over the target context; the image of t_{i,j}^{(r)} is the
//! order-r coefficient of that series. Images are exact for all orders up to
//! the truncation order D, which is why a table suffices even for the maps
//! (omega, psi) that have no closed-form generator images.

use std::fmt;

use crate::algebra::{AlgebraContext, AlgebraElement};
use crate::error::{Error, Result};
use crate::matrix::SeriesMatrix;
use crate::scalar::{sign, Scalar};
use crate::series::USeries;
use crate::sign::SignSequence;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MorphismKind {
    Relabel,
    Rho,
    Omega,
    Zeta,
    Phi,
    Psi,
    Inclusion,
    Composite,
}

/// A parity-preserving algebra homomorphism between two contexts, valid to
/// order D.
#[derive(Clone, PartialEq, Debug)]
pub struct Morphism<S: Scalar> {
    source: AlgebraContext<S>,
    target: AlgebraContext<S>,
    images: Vec<USeries<S>>,
    kind: MorphismKind,
}

/// Coefficientwise substitution u -> -u.
fn alternate<S: Scalar>(s: &USeries<S>) -> USeries<S> {
    let coeffs = s
        .coefficients()
        .iter()
        .enumerate()
        .map(|(k, c)| c.scaled(&sign::<S>(k)))
        .collect();
    USeries::from_coefficients(s.context(), coeffs).expect("same shape")
}

impl<S: Scalar> Morphism<S> {
    fn from_images(
        source: AlgebraContext<S>,
        target: AlgebraContext<S>,
        images: Vec<USeries<S>>,
        kind: MorphismKind,
    ) -> Self {
        debug_assert_eq!(images.len(), source.size() * source.size());
        Morphism {
            source,
            target,
            images,
            kind,
        }
    }

    pub fn identity(ctx: &AlgebraContext<S>) -> Self {
        let perm: Vec<usize> = (1..=ctx.size()).collect();
        Self::relabel(ctx, &perm).expect("identity permutation")
    }

    /// Relabeling along a permutation: t_{i,j} -> t_{perm(i),perm(j)}, with
    /// the target sequence transporting the parities.
    pub fn relabel(src: &AlgebraContext<S>, perm: &[usize]) -> Result<Self> {
        let size = src.size();
        if perm.len() != size {
            return Err(Error::NotAPermutation { size });
        }
        let mut seen = vec![false; size];
        for &p in perm {
            if p < 1 || p > size || seen[p - 1] {
                return Err(Error::NotAPermutation { size });
            }
            seen[p - 1] = true;
        }
        let mut digits = vec![0u8; size];
        for i in 1..=size {
            digits[perm[i - 1] - 1] = src.seq().digit(i);
        }
        let target = AlgebraContext::from_seq(SignSequence::new(digits)?, src.order())?;
        let mut images = Vec::with_capacity(size * size);
        for i in 1..=size {
            for j in 1..=size {
                images.push(USeries::generator(&target, perm[i - 1], perm[j - 1])?);
            }
        }
        Ok(Self::from_images(
            src.clone(),
            target,
            images,
            MorphismKind::Relabel,
        ))
    }

    /// The odd reflection sigma_i: requires digits (1,0) at positions
    /// (i, i+1) and swaps them.
    pub fn odd_reflection(src: &AlgebraContext<S>, i: usize) -> Result<Self> {
        if i < 1 || i + 1 > src.size() {
            return Err(Error::IndexOutOfRange {
                index: i,
                size: src.size().saturating_sub(1),
            });
        }
        let (a, b) = (src.seq().digit(i), src.seq().digit(i + 1));
        if (a, b) != (1, 0) {
            return Err(Error::NotAnOddReflection {
                index: i,
                got: format!("{a}{b}"),
            });
        }
        let mut perm: Vec<usize> = (1..=src.size()).collect();
        perm.swap(i - 1, i);
        Self::relabel(src, &perm)
    }

    /// The straightening map sigma_s onto the standard sequence: the k-th
    /// zero position goes to k, the l-th one position to M + l.
    pub fn straightening(src: &AlgebraContext<S>) -> Result<Self> {
        let m = src.m();
        let mut perm = vec![0usize; src.size()];
        for (k, i) in src.seq().zero_positions().into_iter().enumerate() {
            perm[i - 1] = k + 1;
        }
        for (l, j) in src.seq().one_positions().into_iter().enumerate() {
            perm[j - 1] = m + l + 1;
        }
        Self::relabel(src, &perm)
    }

    /// rho: Y_{M|N}(s) -> Y_{N|M}(s^dagger), t_{i,j}(u) -> t_{i',j'}(-u)
    /// with i' = M+N+1-i.
    pub fn rho(src: &AlgebraContext<S>) -> Self {
        let size = src.size();
        let target = AlgebraContext::from_seq(src.seq().dagger(), src.order())
            .expect("dagger sequence is valid");
        let mut images = Vec::with_capacity(size * size);
        for i in 1..=size {
            for j in 1..=size {
                let g = USeries::generator(&target, size + 1 - i, size + 1 - j)
                    .expect("flipped indices in range");
                images.push(alternate(&g));
            }
        }
        Self::from_images(src.clone(), target, images, MorphismKind::Rho)
    }

    /// omega: T(u) -> T(-u)^{-1}, an automorphism of the same context.
    pub fn omega(src: &AlgebraContext<S>) -> Self {
        let size = src.size();
        let t = SeriesMatrix::t_matrix(src);
        let mut neg_entries = Vec::with_capacity(size * size);
        for i in 1..=size {
            for j in 1..=size {
                neg_entries.push(alternate(t.entry(i, j)));
            }
        }
        let t_neg = SeriesMatrix::from_entries(src, size, size, neg_entries)
            .expect("entries over the same context");
        let inv = t_neg.invert().expect("unit constant term");
        let mut images = Vec::with_capacity(size * size);
        for i in 1..=size {
            for j in 1..=size {
                images.push(inv.entry(i, j).clone());
            }
        }
        Self::from_images(src.clone(), src.clone(), images, MorphismKind::Omega)
    }

    /// zeta = rho after omega.
    pub fn zeta(src: &AlgebraContext<S>) -> Self {
        let mut z = Self::rho(src)
            .compose(&Self::omega(src))
            .expect("contexts line up");
        z.kind = MorphismKind::Zeta;
        z
    }

    /// phi: the corner embedding t_{i,j} -> t_{p+q+i,p+q+j} into the context
    /// with `prefix` prepended to the sequence.
    pub fn phi(src: &AlgebraContext<S>, prefix: &SignSequence) -> Self {
        let shift = prefix.len();
        let target = AlgebraContext::from_seq(prefix.concat(src.seq()), src.order())
            .expect("concatenated sequence is valid");
        let size = src.size();
        let mut images = Vec::with_capacity(size * size);
        for i in 1..=size {
            for j in 1..=size {
                images.push(
                    USeries::generator(&target, shift + i, shift + j)
                        .expect("shifted indices in range"),
                );
            }
        }
        Self::from_images(src.clone(), target, images, MorphismKind::Phi)
    }

    /// The shift map psi into the context with `prefix` prepended, realized
    /// through its corner quasideterminant form: the image of t_{i,j}(u) is
    /// the boxed entry of the leading (m+1)-block, m = |prefix|.
    pub fn psi(src: &AlgebraContext<S>, prefix: &SignSequence) -> Self {
        let m = prefix.len();
        let target = AlgebraContext::from_seq(prefix.concat(src.seq()), src.order())
            .expect("concatenated sequence is valid");
        let size = src.size();
        let t = SeriesMatrix::t_matrix(&target);
        let mut images = Vec::with_capacity(size * size);
        if m == 0 {
            for i in 1..=size {
                for j in 1..=size {
                    images.push(USeries::generator(&target, i, j).expect("index in range"));
                }
            }
        } else {
            let leading: Vec<usize> = (1..=m).collect();
            let corner_inv = t
                .submatrix(&leading, &leading)
                .expect("leading corner")
                .invert()
                .expect("unit constant term");
            for i in 1..=size {
                for j in 1..=size {
                    let row = t.submatrix(&[m + i], &leading).expect("row strip");
                    let col = t.submatrix(&leading, &[m + j]).expect("column strip");
                    let corr = row
                        .mul(&corner_inv)
                        .and_then(|x| x.mul(&col))
                        .expect("1x1 product");
                    let img = t
                        .entry(m + i, m + j)
                        .sub(corr.entry(1, 1))
                        .expect("same context");
                    images.push(img);
                }
            }
        }
        Self::from_images(src.clone(), target, images, MorphismKind::Psi)
    }

    /// The standard inclusion of a leading corner subalgebra: the target
    /// sequence must extend the source sequence.
    pub fn inclusion(src: &AlgebraContext<S>, target: &AlgebraContext<S>) -> Result<Self> {
        if !target.seq().starts_with(src.seq()) || target.order() != src.order() {
            return Err(Error::NotAnInclusion);
        }
        let size = src.size();
        let mut images = Vec::with_capacity(size * size);
        for i in 1..=size {
            for j in 1..=size {
                images.push(USeries::generator(target, i, j)?);
            }
        }
        Ok(Self::from_images(
            src.clone(),
            target.clone(),
            images,
            MorphismKind::Inclusion,
        ))
    }

    pub fn source(&self) -> &AlgebraContext<S> {
        &self.source
    }

    pub fn target(&self) -> &AlgebraContext<S> {
        &self.target
    }

    pub fn kind(&self) -> MorphismKind {
        self.kind
    }

    /// Image series of t_{i,j}(u).
    pub fn image_series(&self, i: usize, j: usize) -> Result<&USeries<S>> {
        self.source.check_index(i)?;
        self.source.check_index(j)?;
        Ok(&self.images[(i - 1) * self.source.size() + (j - 1)])
    }

    /// Image of the generator t_{i,j}^{(r)}, defined for r <= D.
    pub fn generator_image(&self, i: usize, j: usize, r: usize) -> Result<AlgebraElement<S>> {
        if r < 1 {
            return Err(Error::LevelZero);
        }
        if r > self.source.order() {
            return Err(Error::LevelExceedsOrder {
                level: r,
                max: self.source.order(),
            });
        }
        Ok(self.image_series(i, j)?.coefficient(r)?.clone())
    }

    /// Multiplicative extension to an element. Homomorphisms of superalgebras
    /// preserve parity, so no sign corrections arise.
    pub fn apply(&self, x: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        if x.context() != &self.source {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.target.zero();
        for (mono, coeff) in x.terms() {
            let mut prod = self.target.one();
            for g in mono.factors() {
                let img = self.generator_image(g.row(), g.col(), g.level())?;
                prod = prod.mul(&img)?;
            }
            out = out.add(&prod.scaled(coeff))?;
        }
        Ok(out)
    }

    /// Coefficientwise extension to series; exact up to order D.
    pub fn apply_series(&self, x: &USeries<S>) -> Result<USeries<S>> {
        if x.context() != &self.source {
            return Err(Error::ContextMismatch);
        }
        let coeffs = x
            .coefficients()
            .iter()
            .map(|c| self.apply(c))
            .collect::<Result<Vec<_>>>()?;
        USeries::from_coefficients(&self.target, coeffs)
    }

    /// self after g: requires g.target = self.source.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if g.target != self.source {
            return Err(Error::ContextMismatch);
        }
        let images = g
            .images
            .iter()
            .map(|s| self.apply_series(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_images(
            g.source.clone(),
            self.target.clone(),
            images,
            MorphismKind::Composite,
        ))
    }

    /// True when the generator-image tables agree (kinds may differ).
    pub fn equal_images(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.images == other.images
    }

    /// Parity preservation across the whole image table.
    pub fn is_parity_preserving(&self) -> bool {
        let size = self.source.size();
        for i in 1..=size {
            for j in 1..=size {
                let p = (self.source.seq().digit(i) + self.source.seq().digit(j)) % 2;
                let img = &self.images[(i - 1) * size + (j - 1)];
                for c in img.coefficients() {
                    match c.parity() {
                        Some(q) if q == p => {}
                        Some(_) if c.is_zero() => {}
                        Some(_) => return false,
                        None => return false,
                    }
                }
            }
        }
        true
    }
}

impl<S: Scalar> fmt::Display for Morphism<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {} -> {}", self.kind, self.source, self.target)
    }
}
