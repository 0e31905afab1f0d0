//! Checks for the normal-ordering rewriting core.

use yangian::algebra::rtt_rhs;
use yangian::{Element, Generator};

use super::support::*;
use crate::{CheckParams, Outcome};

fn default_relation_seqs(params: &CheckParams) -> Vec<yangian::SignSequence> {
    if params.seq.is_some() || params.m.is_some() || params.n.is_some() {
        params.sequences(4)
    } else {
        vec!["0011".parse().unwrap(), "1010".parse().unwrap()]
    }
}

/// Supercommutator of every generator pair equals the relation's right side.
pub(crate) fn rtt_relations(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    let max_level = 3;
    finish((|| {
        for seq in default_relation_seqs(params) {
            let c = ctx(&seq, order)?;
            let size = c.size();
            for i in 1..=size {
                for j in 1..=size {
                    for k in 1..=size {
                        for l in 1..=size {
                            for r in 1..=max_level {
                                for s in 1..=max_level {
                                    let x = c.generator(i, j, r).map_err(|e| e.to_string())?;
                                    let y = c.generator(k, l, s).map_err(|e| e.to_string())?;
                                    let lhs = x.supercommutator(&y).map_err(|e| e.to_string())?;
                                    let rhs =
                                        rtt_rhs(&c, i, j, k, l, r, s).map_err(|e| e.to_string())?;
                                    element_eq(
                                        &format!("[t[{i},{j};{r}], t[{k},{l};{s}]] at {seq}"),
                                        &lhs,
                                        &rhs,
                                    )?;
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    })())
}

/// Generating-series form of the relation, in the corrected reading where the
/// second term is t_{k,j}(v) t_{i,l}(u). Coefficientwise it telescopes to
/// [t^{(r+1)}, t^{(s)}] - [t^{(r)}, t^{(s+1)}] = sign (t_{k,j}^{(r)} t_{i,l}^{(s)} - t_{k,j}^{(s)} t_{i,l}^{(r)})
/// over all r, s >= 0 with the delta convention at level 0.
pub(crate) fn rtt_series_form(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    let max_level = 3usize;
    finish((|| {
        for seq in params.sequences(3) {
            let c = ctx(&seq, order)?;
            let size = c.size();
            let gen_or_delta = |a: usize, b: usize, t: usize| -> Element {
                if t == 0 {
                    if a == b {
                        c.one()
                    } else {
                        c.zero()
                    }
                } else {
                    c.generator(a, b, t).expect("index in range")
                }
            };
            for i in 1..=size {
                for j in 1..=size {
                    for k in 1..=size {
                        for l in 1..=size {
                            let e = c.parity_of_index(i).unwrap() * c.parity_of_index(j).unwrap()
                                + c.parity_of_index(i).unwrap() * c.parity_of_index(k).unwrap()
                                + c.parity_of_index(j).unwrap() * c.parity_of_index(k).unwrap();
                            for r in 0..=max_level {
                                for s in 0..=max_level {
                                    let a_hi = gen_or_delta(i, j, r + 1);
                                    let a_lo = gen_or_delta(i, j, r);
                                    let b_lo = gen_or_delta(k, l, s);
                                    let b_hi = gen_or_delta(k, l, s + 1);
                                    let lhs = a_hi
                                        .supercommutator(&b_lo)
                                        .and_then(|x| {
                                            a_lo.supercommutator(&b_hi).and_then(|y| x.sub(&y))
                                        })
                                        .map_err(|e| e.to_string())?;
                                    let rhs = gen_or_delta(k, j, r)
                                        .mul(&gen_or_delta(i, l, s))
                                        .and_then(|x| {
                                            gen_or_delta(k, j, s)
                                                .mul(&gen_or_delta(i, l, r))
                                                .and_then(|y| x.sub(&y))
                                        })
                                        .map_err(|e| e.to_string())?;
                                    let rhs = if e % 2 == 1 { rhs.neg() } else { rhs };
                                    element_eq(
                                        &format!(
                                            "series relation at {seq} ({i},{j},{k},{l}) r={r} s={s}"
                                        ),
                                        &lhs,
                                        &rhs,
                                    )?;
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    })())
}

/// Random associativity triples: the rewrite system is confluent.
pub(crate) fn assoc_confluence(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    let samples = params.samples_or(500);
    let mut rng = rng_for(params, 0xA550C);
    finish((|| {
        for seq in params.sequences(4) {
            let c = ctx(&seq, order)?;
            for trial in 0..samples {
                let x = random_generator(&mut rng, &c, 3);
                let y = random_generator(&mut rng, &c, 3);
                let z = random_generator(&mut rng, &c, 3);
                let lhs = x
                    .mul(&y)
                    .and_then(|p| p.mul(&z))
                    .map_err(|e| e.to_string())?;
                let rhs = y
                    .mul(&z)
                    .and_then(|p| x.mul(&p))
                    .map_err(|e| e.to_string())?;
                element_eq(
                    &format!("associativity at {seq}, trial {trial}"),
                    &lhs,
                    &rhs,
                )?;
            }
        }
        Ok(())
    })())
}

fn is_canonical(c: &yangian::Context, m: &yangian::Monomial) -> bool {
    let key = |g: &Generator| (g.level(), g.row(), g.col());
    let parity = |g: &Generator| {
        (c.parity_of_index(g.row()).unwrap() + c.parity_of_index(g.col()).unwrap()) % 2
    };
    m.factors()
        .windows(2)
        .all(|w| key(&w[0]) < key(&w[1]) || (key(&w[0]) == key(&w[1]) && parity(&w[0]) == 0))
}

/// Re-normalizing a canonical element is the identity, and every stored
/// monomial satisfies the normal-form invariants.
pub(crate) fn normal_form_idempotence(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    let samples = params.samples_or(100);
    let mut rng = rng_for(params, 0x1DE4);
    finish((|| {
        for seq in params.sequences(3) {
            let c = ctx(&seq, order)?;
            for trial in 0..samples {
                let mut x = random_generator(&mut rng, &c, 3);
                for _ in 0..2 {
                    x = x
                        .mul(&random_generator(&mut rng, &c, 3))
                        .map_err(|e| e.to_string())?;
                }
                let renormalized = c.one().mul(&x).map_err(|e| e.to_string())?;
                element_eq(
                    &format!("idempotence at {seq}, trial {trial}"),
                    &renormalized,
                    &x,
                )?;
                for (m, _) in x.terms() {
                    ensure(
                        is_canonical(&c, m),
                        &format!("non-canonical monomial {m} at {seq}, trial {trial}"),
                    )?;
                }
            }
        }
        Ok(())
    })())
}

/// Monomial parity is additive under multiplication of homogeneous elements.
pub(crate) fn parity_grading(params: &CheckParams) -> Outcome {
    let order = params.order_or(3);
    let samples = params.samples_or(200);
    let mut rng = rng_for(params, 0x9A417);
    finish((|| {
        for seq in params.sequences(4) {
            let c = ctx(&seq, order)?;
            for trial in 0..samples {
                let a = random_generator(&mut rng, &c, 3);
                let b = random_generator(&mut rng, &c, 3);
                let pa = a.parity().expect("generators are homogeneous");
                let pb = b.parity().expect("generators are homogeneous");
                let prod = a.mul(&b).map_err(|e| e.to_string())?;
                let expected = if prod.is_zero() { 0 } else { (pa + pb) % 2 };
                ensure(
                    prod.parity() == Some(expected),
                    &format!("parity not additive at {seq}, trial {trial}: {a} * {b}"),
                )?;
            }
        }
        Ok(())
    })())
}

/// Ring laws of the truncated series, plus the shift/invert contracts.
pub(crate) fn series_laws(params: &CheckParams) -> Outcome {
    use yangian::Series;
    let order = params.order_or(3);
    let samples = params.samples_or(200);
    let mut rng = rng_for(params, 0x5E41E5);
    finish((|| {
        for seq in params.sequences(3) {
            let c = ctx(&seq, order)?;
            let random_series = |rng: &mut rand_chacha::ChaCha8Rng| {
                use rand::Rng;
                let i = rng.gen_range(1..=c.size());
                let j = rng.gen_range(1..=c.size());
                Series::generator(&c, i, j).expect("index in range")
            };
            for trial in 0..samples {
                use rand::Rng;
                let a = random_series(&mut rng);
                let b = random_series(&mut rng);
                let d = random_series(&mut rng);
                let label = format!("series laws at {seq}, trial {trial}");
                let assoc_l = a
                    .mul(&b)
                    .and_then(|p| p.mul(&d))
                    .map_err(|e| e.to_string())?;
                let assoc_r = b
                    .mul(&d)
                    .and_then(|p| a.mul(&p))
                    .map_err(|e| e.to_string())?;
                series_eq(&format!("{label} (assoc)"), &assoc_l, &assoc_r)?;
                let dist_l = a
                    .add(&b)
                    .and_then(|s| s.mul(&d))
                    .map_err(|e| e.to_string())?;
                let dist_r = a
                    .mul(&d)
                    .and_then(|x| b.mul(&d).and_then(|y| x.add(&y)))
                    .map_err(|e| e.to_string())?;
                series_eq(&format!("{label} (distrib)"), &dist_l, &dist_r)?;
                let s = rng.gen_range(-3i64..=3);
                let shift_l = a.mul(&b).map_err(|e| e.to_string())?.shift(s);
                let shift_r = a.shift(s).mul(&b.shift(s)).map_err(|e| e.to_string())?;
                series_eq(&format!("{label} (shift hom, c={s})"), &shift_l, &shift_r)?;
                // unit-head series for inversion
                let diag = rng.gen_range(1..=c.size());
                let u = Series::generator(&c, diag, diag).expect("diagonal");
                let uinv = u.invert().map_err(|e| e.to_string())?;
                ensure(
                    u.mul(&uinv).map_err(|e| e.to_string())?.is_one()
                        && uinv.mul(&u).map_err(|e| e.to_string())?.is_one(),
                    &format!("{label} (two-sided inverse)"),
                )?;
                series_eq(
                    &format!("{label} (shift-invert commute)"),
                    &uinv.shift(s),
                    &u.shift(s).invert().map_err(|e| e.to_string())?,
                )?;
            }
        }
        Ok(())
    })())
}
