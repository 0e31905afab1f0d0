//! Checks for the matrix layer: inversion, Gauss factors, quasideterminants.

use yangian::berezinian::drinfeld_generators;
use yangian::{Composition, Context, Hom, Matrix};

use super::support::*;
use crate::{CheckParams, Outcome};

/// T(u) times its inverse matrix is the identity on both sides.
pub(crate) fn inverse_matrix(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    finish((|| {
        for seq in params.sequences(4) {
            let c = ctx(&seq, order)?;
            let t = Matrix::t_matrix(&c);
            let tinv = t.invert().map_err(|e| e.to_string())?;
            let id = Matrix::identity(&c, c.size());
            for (label, prod) in [("T * T^-1", t.mul(&tinv)), ("T^-1 * T", tinv.mul(&t))] {
                let prod = prod.map_err(|e| e.to_string())?;
                ensure(prod == id, &format!("{label} != I at {seq}"))?;
            }
        }
        Ok(())
    })())
}

fn unitriangular_shape(label: &str, m: &Matrix, mu: &Composition, upper: bool) -> CheckResult {
    let c = m.context().clone();
    let id = Matrix::identity(&c, 1);
    let _ = id;
    for a in 1..=mu.len() {
        for b in 1..=mu.len() {
            let block = m.block(mu, a, b);
            if a == b {
                let expect = Matrix::identity(&c, mu.part(a));
                ensure(
                    block == expect,
                    &format!("{label}: diagonal block {a} not identity"),
                )?;
            } else if (upper && a > b) || (!upper && a < b) {
                let expect = Matrix::zero(&c, mu.part(a), mu.part(b));
                ensure(
                    block == expect,
                    &format!("{label}: block ({a},{b}) not zero"),
                )?;
            }
        }
    }
    Ok(())
}

/// F . diag(D) . E reproduces T for every composition, with the correct
/// unitriangular shapes.
pub(crate) fn gauss_reconstruct(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    finish_counted(
        (|| {
            let mut ran = 0usize;
            for seq in params.sequences(4) {
                let c = ctx(&seq, order)?;
                let t = Matrix::t_matrix(&c);
                for mu in params.compositions(c.size()) {
                    ran += 1;
                    let g = t.gauss_decompose(&mu).map_err(|e| e.to_string())?;
                    unitriangular_shape(&format!("E at {seq} mu={mu}"), g.e(), &mu, true)?;
                    unitriangular_shape(&format!("F at {seq} mu={mu}"), g.f(), &mu, false)?;
                    let back = g.reconstruct().map_err(|e| e.to_string())?;
                    ensure(back == t, &format!("F.D.E != T at {seq} mu={mu}"))?;
                }
            }
            Ok(ran)
        })(),
        "the requested composition does not partition any requested sequence",
    )
}

/// The boxed quasideterminant equals the elimination D-block for every
/// composition and block index.
pub(crate) fn quasidet_agree(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    finish_counted(
        (|| {
            let mut ran = 0usize;
            for seq in params.sequences(4) {
                let c = ctx(&seq, order)?;
                let t = Matrix::t_matrix(&c);
                for mu in params.compositions(c.size()) {
                    ran += 1;
                    let g = t.gauss_decompose(&mu).map_err(|e| e.to_string())?;
                    for a in 1..=mu.len() {
                        let schur = t.schur_block(&mu, a).map_err(|e| e.to_string())?;
                        ensure(
                            &schur == g.d_block(a),
                            &format!("quasideterminant != D-block at {seq} mu={mu} a={a}"),
                        )?;
                    }
                }
            }
            Ok(ran)
        })(),
        "the requested composition does not partition any requested sequence",
    )
}

/// The diagonal Drinfeld generators d_i(u) commute pairwise.
pub(crate) fn drinfeld_commute(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    finish((|| {
        for seq in params.sequences(4) {
            let c = ctx(&seq, order)?;
            let d = drinfeld_generators(&c).map_err(|e| e.to_string())?;
            for a in 0..d.len() {
                for b in a + 1..d.len() {
                    let lhs = d[a].mul(&d[b]).map_err(|e| e.to_string())?;
                    let rhs = d[b].mul(&d[a]).map_err(|e| e.to_string())?;
                    series_eq(&format!("[d_{}, d_{}] at {seq}", a + 1, b + 1), &lhs, &rhs)?;
                }
            }
        }
        Ok(())
    })())
}

/// Every parabolic diagonal block is the shift-map image of the leading
/// corner block of the tail context.
pub(crate) fn psi_block_transport(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    let seqs = if params.seq.is_some() || params.m.is_some() || params.n.is_some() {
        params.sequences(4)
    } else {
        let mut seqs = params.sequences(3);
        seqs.push("1010".parse().unwrap());
        seqs.push("0101".parse().unwrap());
        seqs
    };
    finish_counted(
        (|| {
            let mut ran = 0usize;
            for seq in seqs {
                let c = ctx(&seq, order)?;
                let t = Matrix::t_matrix(&c);
                for mu in params.compositions(c.size()) {
                    ran += 1;
                    let g = t.gauss_decompose(&mu).map_err(|e| e.to_string())?;
                    for a in 1..=mu.len() {
                        let pa = mu.partial_sum(a);
                        let tail_ctx = Context::from_seq(c.seq().suffix(pa), order)
                            .map_err(|e| e.to_string())?;
                        let psi = Hom::psi(&tail_ctx, &c.seq().prefix(pa));
                        let tail_t = Matrix::t_matrix(&tail_ctx);
                        let da = g.d_block(a);
                        for i in 1..=mu.part(a) {
                            for j in 1..=mu.part(a) {
                                let lhs = psi
                                    .apply_series(tail_t.entry(i, j))
                                    .map_err(|e| e.to_string())?;
                                series_eq(
                                    &format!("psi block at {seq} mu={mu} a={a} entry ({i},{j})"),
                                    &lhs,
                                    da.entry(i, j),
                                )?;
                            }
                        }
                    }
                }
            }
            Ok(ran)
        })(),
        "the requested composition does not partition any requested sequence",
    )
}
