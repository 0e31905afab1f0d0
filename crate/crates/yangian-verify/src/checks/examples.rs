//! The worked rank-(2|2) example over the sequence 1010, frozen as golden
//! text fixtures: the Berezinian formula itself and its mu = (2,2) block
//! product. The fixtures pin the canonical text form byte for byte.

use std::fmt::Write as _;

use yangian::berezinian::{qsdet, qsdet_block, u_shifts};
use yangian::{Composition, Matrix};

use super::support::*;
use crate::{CheckParams, Outcome};

const QSDET_FIXTURE: &str = include_str!("../../fixtures/example_1010_qsdet.txt");
const BLOCKS_FIXTURE: &str = include_str!("../../fixtures/example_1010_blocks.txt");

pub(crate) fn render_qsdet_fixture(order: usize) -> Result<String, String> {
    let c = ctx_str("1010", order);
    let t = Matrix::t_matrix(&c);
    let tinv = t.invert().map_err(|e| e.to_string())?;
    // zero positions (2,4), one positions (1,3)
    let even = t
        .entry(2, 2)
        .mul(&t.entry(4, 4).shift(-1))
        .and_then(|a| {
            t.entry(4, 2)
                .mul(&t.entry(2, 4).shift(-1))
                .and_then(|b| a.sub(&b))
        })
        .map_err(|e| e.to_string())?;
    let odd = tinv
        .entry(1, 1)
        .shift(-1)
        .mul(tinv.entry(3, 3))
        .and_then(|a| {
            tinv.entry(1, 3)
                .shift(-1)
                .mul(tinv.entry(3, 1))
                .and_then(|b| a.sub(&b))
        })
        .map_err(|e| e.to_string())?;
    let product = even.mul(&odd).map_err(|e| e.to_string())?;
    let full = qsdet(&c).map_err(|e| e.to_string())?;
    series_eq("displayed formula vs qsdet", &product, &full)?;
    let mut s = String::new();
    writeln!(s, "even_factor = {even}").unwrap();
    writeln!(s, "odd_factor = {odd}").unwrap();
    writeln!(s, "qsdet = {full}").unwrap();
    Ok(s)
}

pub(crate) fn render_blocks_fixture(order: usize) -> Result<String, String> {
    let c = ctx_str("1010", order);
    let mu: Composition = "2,2".parse().expect("valid composition");
    let t = Matrix::t_matrix(&c);
    let g = t.gauss_decompose(&mu).map_err(|e| e.to_string())?;
    let d1 = g.d_block(1);
    let d2 = g.d_block(2);
    let d1p = g.d_prime(1).map_err(|e| e.to_string())?;
    let d2p = g.d_prime(2).map_err(|e| e.to_string())?;

    // qsdet D_a(u) = D_{a;2,2}(u) D'_{a;1,1}(u), both blocks
    for (a, da, dap) in [(1usize, d1, &d1p), (2, d2, &d2p)] {
        let expected = da
            .entry(2, 2)
            .mul(dap.entry(1, 1))
            .map_err(|e| e.to_string())?;
        let block = qsdet_block(&c, &mu, a).map_err(|e| e.to_string())?;
        series_eq(&format!("block Berezinian {a} formula"), &block, &expected)?;
    }

    let product = d1
        .entry(2, 2)
        .mul(d1p.entry(1, 1))
        .and_then(|x| x.mul(d2.entry(2, 2)))
        .and_then(|x| x.mul(d2p.entry(1, 1)))
        .map_err(|e| e.to_string())?;
    let full = qsdet(&c).map_err(|e| e.to_string())?;
    series_eq("block product vs qsdet", &product, &full)?;

    let mut s = String::new();
    writeln!(s, "u_shifts = {}", u_shifts(c.seq())).unwrap();
    writeln!(s, "D[1;2,2] = {}", d1.entry(2, 2)).unwrap();
    writeln!(s, "D'[1;1,1] = {}", d1p.entry(1, 1)).unwrap();
    writeln!(s, "D[2;2,2] = {}", d2.entry(2, 2)).unwrap();
    writeln!(s, "D'[2;1,1] = {}", d2p.entry(1, 1)).unwrap();
    writeln!(s, "product = {product}").unwrap();
    Ok(s)
}

fn fixture_check(
    params: &CheckParams,
    fixture: &str,
    render: fn(usize) -> Result<String, String>,
) -> Outcome {
    if let Err(e) = require_pinned_seq(params, "1010") {
        return e;
    }
    if params.order.is_some_and(|d| d != 3) {
        return Outcome::Error("the golden fixture is pinned at order 3".into());
    }
    finish((|| {
        let rendered = render(3)?;
        if rendered == fixture {
            Ok(())
        } else {
            let line = rendered
                .lines()
                .zip(fixture.lines())
                .position(|(a, b)| a != b)
                .map(|i| i + 1)
                .unwrap_or_else(|| rendered.lines().count().min(fixture.lines().count()) + 1);
            Err(format!(
                "rendered text differs from the golden fixture at line {line}"
            ))
        }
    })())
}

/// The 1010 Berezinian formula, reproduced byte for byte.
pub(crate) fn example_1010_qsdet(params: &CheckParams) -> Outcome {
    fixture_check(params, QSDET_FIXTURE, render_qsdet_fixture)
}

/// The 1010, mu = (2,2) block product, reproduced byte for byte.
pub(crate) fn example_1010_blocks(params: &CheckParams) -> Outcome {
    fixture_check(params, BLOCKS_FIXTURE, render_blocks_fixture)
}
