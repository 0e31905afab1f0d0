//! Checks for the even quantum determinant and its parabolic factorization.

use yangian::berezinian::{drinfeld_generators, qdet, qdet_minor};
use yangian::{Hom, Matrix, Series, SignSequence};

use super::support::*;
use crate::{CheckParams, Outcome};

fn even_context(n: usize, order: usize) -> yangian::Context {
    ctx_str(&"0".repeat(n), order)
}

/// qdet T(u) = d_1(u) d_2(u-1) ... d_N(u-N+1) in the even Yangian.
pub(crate) fn qdet_factorization(params: &CheckParams) -> Outcome {
    let order = params.order_or(4);
    let ranks: Vec<usize> = match (&params.seq, params.m) {
        (Some(seq), _) => {
            if seq.count_ones() > 0 {
                return Outcome::Error("this check needs an all-zero sequence".into());
            }
            vec![seq.len()]
        }
        (None, Some(m)) => vec![m],
        (None, None) => vec![2, 3],
    };
    finish((|| {
        for n in ranks {
            let c = even_context(n, order);
            let lhs = qdet(&Matrix::t_matrix(&c)).map_err(|e| e.to_string())?;
            let d = drinfeld_generators(&c).map_err(|e| e.to_string())?;
            let mut rhs = Series::one(&c);
            for k in 1..=n {
                rhs = rhs
                    .mul(&d[k - 1].shift(-((k - 1) as i64)))
                    .map_err(|e| e.to_string())?;
            }
            series_eq(&format!("c_{n} = prod d_k(u-k+1)"), &lhs, &rhs)?;
        }
        Ok(())
    })())
}

/// Parabolic factorization of the quantum determinant: per block,
/// qdet D_a(u - p_a) = prod_{k in block} d_k(u-k+1), and their product is
/// the full qdet.
pub(crate) fn qdet_parabolic(params: &CheckParams) -> Outcome {
    let order = params.order_or(4);
    let n = params.m.unwrap_or(3);
    if params.seq.as_ref().is_some_and(|s| s.count_ones() > 0) {
        return Outcome::Error("this check needs an all-zero sequence".into());
    }
    finish_counted(
        (|| {
            let c = even_context(n, order);
            let t = Matrix::t_matrix(&c);
            let full = qdet(&t).map_err(|e| e.to_string())?;
            let d = drinfeld_generators(&c).map_err(|e| e.to_string())?;
            let mut ran = 0usize;
            for mu in params.compositions(n) {
                ran += 1;
                let mut product = Series::one(&c);
                for a in 1..=mu.len() {
                    let pa = mu.partial_sum(a);
                    let block = t.schur_block(&mu, a).map_err(|e| e.to_string())?;
                    let block_qdet = qdet(&block).map_err(|e| e.to_string())?.shift(-(pa as i64));
                    let mut expected = Series::one(&c);
                    for k in pa + 1..=pa + mu.part(a) {
                        expected = expected
                            .mul(&d[k - 1].shift(-((k - 1) as i64)))
                            .map_err(|e| e.to_string())?;
                    }
                    series_eq(
                        &format!("qdet D_{a}(u-p_{a}) at mu={mu}"),
                        &block_qdet,
                        &expected,
                    )?;
                    product = product.mul(&block_qdet).map_err(|e| e.to_string())?;
                }
                series_eq(
                    &format!("c_{n} = prod qdet D_a at mu={mu}"),
                    &product,
                    &full,
                )?;
            }
            Ok(ran)
        })(),
        "the requested composition does not partition the requested rank",
    )
}

/// The shift map on quantum minors:
/// psi_m(qdet T_ij(u)) = c_m(u+m)^{-1} qdet T_{m#i,m#j}(u+m).
pub(crate) fn lemma_psi_qdet(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    finish((|| {
        // (source rank, m) pairs embedding into Y_3 and Y_4
        for (src_rank, m) in [(2usize, 1usize), (1, 2), (2, 2)] {
            let src = even_context(src_rank, order);
            let prefix: SignSequence = "0".repeat(m).parse().unwrap();
            let psi = Hom::psi(&src, &prefix);
            let tgt = psi.target().clone();
            let leading: Vec<usize> = (1..=m).collect();
            let cm_inv = qdet_minor(&tgt, &leading, &leading)
                .map_err(|e| e.to_string())?
                .shift(m as i64)
                .invert()
                .map_err(|e| e.to_string())?;
            let mut tuples: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
            for i in 1..=src_rank {
                for j in 1..=src_rank {
                    tuples.push((vec![i], vec![j]));
                }
            }
            if src_rank >= 2 {
                tuples.push((vec![1, 2], vec![1, 2]));
                tuples.push((vec![2, 1], vec![1, 2]));
                tuples.push((vec![1, 2], vec![2, 1]));
            }
            for (rows, cols) in tuples {
                let minor = qdet_minor(&src, &rows, &cols).map_err(|e| e.to_string())?;
                let lhs = psi.apply_series(&minor).map_err(|e| e.to_string())?;
                let big = |t: &[usize]| -> Vec<usize> {
                    (1..=m).chain(t.iter().map(|&x| x + m)).collect()
                };
                let rhs = cm_inv
                    .mul(
                        &qdet_minor(&tgt, &big(&rows), &big(&cols))
                            .map_err(|e| e.to_string())?
                            .shift(m as i64),
                    )
                    .map_err(|e| e.to_string())?;
                series_eq(
                    &format!("psi_{m} on minor {rows:?},{cols:?} from Y_{src_rank}"),
                    &lhs,
                    &rhs,
                )?;
            }
        }
        Ok(())
    })())
}
