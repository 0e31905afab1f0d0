//! Checks for the quantum Berezinian in all its forms.

use rand::seq::SliceRandom;
use yangian::berezinian::{
    b_series, berezinian_of, block_evaluation_shift, drinfeld_generators, permutations,
    prefix_superminor, qdet, qsdet, qsdet_permuted, u_shifts,
};
use yangian::{Composition, Matrix, Series};

use super::support::*;
use crate::{CheckParams, Outcome};

/// The standard-sequence Berezinian equals its Drinfeld-generator display:
/// d_1(u)...d_M(u-M+1) d_{M+1}(u-M+1)^{-1}...d_{M+N}(u-M+N)^{-1}.
pub(crate) fn berezinian_standard(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    let pairs: Vec<(usize, usize)> = match (&params.seq, params.m, params.n) {
        (Some(seq), _, _) => {
            if !seq.is_standard() {
                return Outcome::Error("this check needs a standard sequence 0^M 1^N".into());
            }
            vec![(seq.count_zeros(), seq.count_ones())]
        }
        (None, m, n) if m.is_some() || n.is_some() => vec![(m.unwrap_or(0), n.unwrap_or(0))],
        _ => {
            let mut v = Vec::new();
            for total in 1..=4usize {
                for m in 0..=total {
                    v.push((m, total - m));
                }
            }
            v
        }
    };
    finish((|| {
        for (m, n) in pairs {
            let c = ctx(&yangian::SignSequence::standard(m, n), order)?;
            let d = drinfeld_generators(&c).map_err(|e| e.to_string())?;
            let mut display = Series::one(&c);
            for k in 1..=m {
                display = display
                    .mul(&d[k - 1].shift(-((k - 1) as i64)))
                    .map_err(|e| e.to_string())?;
            }
            for k in 1..=n {
                let shifted = d[m + k - 1].shift(k as i64 - m as i64);
                display = display
                    .mul(&shifted.invert().map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
            }
            let via_qsdet = qsdet(&c).map_err(|e| e.to_string())?;
            series_eq(
                &format!("standard Berezinian (M,N)=({m},{n})"),
                &via_qsdet,
                &display,
            )?;
            let via_b = b_series(&c).map_err(|e| e.to_string())?;
            series_eq(
                &format!("b-series matches display (M,N)=({m},{n})"),
                &via_b,
                &display,
            )?;
        }
        Ok(())
    })())
}

/// Standard-sequence parabolic form: for mu = (lambda | nu),
/// qsdet = prod_i qdet D_i(u - p_i(lambda)) prod_k qdet D'_{m+k}(u - M + p_{k+1}(nu)).
pub(crate) fn berezinian_parabolic_standard(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    let pairs: Vec<(usize, usize)> = match (params.m, params.n) {
        (Some(m), Some(n)) => vec![(m, n)],
        _ => vec![(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3)],
    };
    finish((|| {
        for (m, n) in pairs {
            let c = ctx(&yangian::SignSequence::standard(m, n), order)?;
            let t = Matrix::t_matrix(&c);
            let full = qsdet(&c).map_err(|e| e.to_string())?;
            for lambda in Composition::all(m) {
                for nu in Composition::all(n) {
                    if let Some(pinned) = &params.mu {
                        let joined: Vec<usize> = lambda
                            .parts()
                            .iter()
                            .chain(nu.parts().iter())
                            .copied()
                            .collect();
                        if pinned.parts() != joined.as_slice() {
                            continue;
                        }
                    }
                    let parts: Vec<usize> = lambda
                        .parts()
                        .iter()
                        .chain(nu.parts().iter())
                        .copied()
                        .collect();
                    let mu = Composition::new(parts).map_err(|e| e.to_string())?;
                    let g = t.gauss_decompose(&mu).map_err(|e| e.to_string())?;
                    let mut product = Series::one(&c);
                    for i in 1..=lambda.len() {
                        let factor = qdet(g.d_block(i))
                            .map_err(|e| e.to_string())?
                            .shift(-(lambda.partial_sum(i) as i64));
                        product = product.mul(&factor).map_err(|e| e.to_string())?;
                    }
                    for k in 1..=nu.len() {
                        let p_next: i64 = nu.parts()[..k].iter().sum::<usize>() as i64;
                        let dp = g.d_prime(lambda.len() + k).map_err(|e| e.to_string())?;
                        let factor = qdet(&dp)
                            .map_err(|e| e.to_string())?
                            .shift(p_next - m as i64);
                        product = product.mul(&factor).map_err(|e| e.to_string())?;
                    }
                    series_eq(
                        &format!(
                            "parabolic standard Berezinian (M,N)=({m},{n}) mu=({lambda}|{nu})"
                        ),
                        &product,
                        &full,
                    )?;
                }
            }
        }
        Ok(())
    })())
}

/// b^s(u) = qsdet T^s(u) for every 01-sequence: the evaluation points u_i and
/// the inverted factors d-tilde on one side, the double permutation sum with
/// the inverse matrix entries on the other.
pub(crate) fn berezinian_equals_bseries(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    finish((|| {
        for seq in params.sequences(4) {
            let c = ctx(&seq, order)?;
            let lhs = b_series(&c).map_err(|e| e.to_string())?;
            let rhs = qsdet(&c).map_err(|e| e.to_string())?;
            series_eq(&format!("b = qsdet at {seq}"), &lhs, &rhs)?;
        }
        Ok(())
    })())
}

/// The Berezinian coefficients supercommute with every generator.
pub(crate) fn berezinian_central(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    let max_coeff = order.min(3);
    let max_level = 2;
    finish((|| {
        for seq in params.sequences(4) {
            let c = ctx(&seq, order)?;
            let b = qsdet(&c).map_err(|e| e.to_string())?;
            for r in 1..=max_coeff {
                let coeff = b.coefficient(r).map_err(|e| e.to_string())?;
                for i in 1..=c.size() {
                    for j in 1..=c.size() {
                        for s in 1..=max_level {
                            let g = c.generator(i, j, s).map_err(|e| e.to_string())?;
                            let bracket = coeff.supercommutator(&g).map_err(|e| e.to_string())?;
                            element_zero(&format!("[b^({r}), t[{i},{j};{s}]] at {seq}"), &bracket)?;
                        }
                    }
                }
            }
        }
        Ok(())
    })())
}

/// Block factorization: qsdet T^s(u) is the product over blocks of the block
/// Berezinians evaluated at u_{a*1} - |1|_a.
pub(crate) fn berezinian_block_factorization(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    finish_counted(
        (|| {
            let mut ran = 0usize;
            for seq in params.sequences(4) {
                let c = ctx(&seq, order)?;
                let full = qsdet(&c).map_err(|e| e.to_string())?;
                let t = Matrix::t_matrix(&c);
                for mu in params.compositions(c.size()) {
                    ran += 1;
                    let g = t.gauss_decompose(&mu).map_err(|e| e.to_string())?;
                    let mut product = Series::one(&c);
                    for a in 1..=mu.len() {
                        let block = berezinian_of(g.d_block(a), &mu.block_seq(c.seq(), a))
                            .map_err(|e| e.to_string())?;
                        let shift = block_evaluation_shift(&c, &mu, a);
                        product = product
                            .mul(&block.shift(shift))
                            .map_err(|e| e.to_string())?;
                    }
                    series_eq(
                        &format!("block factorization at {seq} mu={mu}"),
                        &product,
                        &full,
                    )?;
                }
            }
            Ok(ran)
        })(),
        "the requested composition does not partition any requested sequence",
    )
}

/// The defining double sum is invariant under re-indexing the zero positions
/// by theta and the one positions by tau, with compensating signs.
pub(crate) fn berezinian_permutation(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    let seqs = if params.seq.is_some() || params.m.is_some() || params.n.is_some() {
        params.sequences(4)
    } else {
        vec!["0101".parse().unwrap(), "1001".parse().unwrap()]
    };
    let mut rng = rng_for(params, 0x9E2);
    finish((|| {
        for seq in seqs {
            let c = ctx(&seq, order)?;
            let base = qsdet(&c).map_err(|e| e.to_string())?;
            let (m, n) = (c.m(), c.n());
            let mut pairs: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
            if m <= 3 && n <= 3 {
                for (theta, _) in permutations(m) {
                    for (tau, _) in permutations(n) {
                        pairs.push((theta.clone(), tau.clone()));
                    }
                }
            } else {
                for _ in 0..params.samples_or(5) {
                    let mut theta: Vec<usize> = (1..=m).collect();
                    let mut tau: Vec<usize> = (1..=n).collect();
                    theta.shuffle(&mut rng);
                    tau.shuffle(&mut rng);
                    pairs.push((theta, tau));
                }
            }
            for (theta, tau) in pairs {
                let permuted = qsdet_permuted(&c, &theta, &tau).map_err(|e| e.to_string())?;
                series_eq(
                    &format!("permuted Berezinian at {seq}, theta={theta:?} tau={tau:?}"),
                    &permuted,
                    &base,
                )?;
            }
        }
        Ok(())
    })())
}

/// dtilde_i(u_i) equals the ratio of consecutive prefix superminors.
pub(crate) fn prefix_superminor_ratio(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    let seqs = if params.seq.is_some() || params.m.is_some() || params.n.is_some() {
        params.sequences(4)
    } else {
        let mut seqs = params.sequences(3);
        seqs.push("0101".parse().unwrap());
        seqs
    };
    finish((|| {
        for seq in seqs {
            let c = ctx(&seq, order)?;
            let d = drinfeld_generators(&c).map_err(|e| e.to_string())?;
            let shifts = u_shifts(c.seq());
            for i in 1..=c.size() {
                let shifted = d[i - 1].shift(shifts.shift(i));
                let dtilde = if c.seq().digit(i) == 1 {
                    shifted.invert().map_err(|e| e.to_string())?
                } else {
                    shifted
                };
                let ratio = prefix_superminor(&c, i - 1)
                    .map_err(|e| e.to_string())?
                    .invert()
                    .map_err(|e| e.to_string())?
                    .mul(&prefix_superminor(&c, i).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                series_eq(
                    &format!("superminor ratio at {seq}, i={i}"),
                    &dtilde,
                    &ratio,
                )?;
            }
        }
        Ok(())
    })())
}

/// The four series relations of the rank-(1|1) algebra over the sequence 01.
pub(crate) fn y11_relations(params: &CheckParams) -> Outcome {
    if let Err(e) = require_pinned_seq(params, "01") {
        return e;
    }
    let order = params.order_or(4);
    finish((|| {
        let c = ctx_str("01", order);
        let t = |i, j| Series::generator(&c, i, j).expect("index in range");
        let prod = |a: &Series, b: &Series| a.mul(&b.shift(-1)).map_err(|e| e.to_string());

        series_eq(
            "t11(u) t21(u-1) = t21(u) t11(u-1)",
            &prod(&t(1, 1), &t(2, 1))?,
            &prod(&t(2, 1), &t(1, 1))?,
        )?;
        series_eq(
            "t22(u) t21(u-1) = t21(u) t22(u-1)",
            &prod(&t(2, 2), &t(2, 1))?,
            &prod(&t(2, 1), &t(2, 2))?,
        )?;
        ensure(prod(&t(2, 1), &t(2, 1))?.is_zero(), "t21(u) t21(u-1) != 0")?;
        let lhs = prod(&t(1, 1), &t(2, 2))?
            .sub(&prod(&t(2, 2), &t(1, 1))?)
            .map_err(|e| e.to_string())?;
        let rhs = prod(&t(1, 2), &t(2, 1))?
            .add(&prod(&t(2, 1), &t(1, 2))?)
            .map_err(|e| e.to_string())?;
        series_eq(
            "t11(u)t22(u-1) - t22(u)t11(u-1) = t12(u)t21(u-1) + t21(u)t12(u-1)",
            &lhs,
            &rhs,
        )?;
        Ok(())
    })())
}
