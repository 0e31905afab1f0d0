//! The check catalog. Every entry names one identity (or one artifact
//! property), states its claim, and documents its default grid.

mod algebra;
mod berezinian;
mod examples;
mod gauss;
mod morphism;
mod qdet;
pub(crate) mod support;

use crate::Check;

pub(crate) use examples::{render_blocks_fixture, render_qsdet_fixture};

pub(crate) const CATALOG: &[Check] = &[
    Check {
        name: "rtt-relations",
        claim: "the supercommutator of any two RTT generators equals the right side of the defining relation, term by term",
        grid: "sequences 0011 and 1010, all index quadruples, levels r,s <= 3",
        run: algebra::rtt_relations,
    },
    Check {
        name: "rtt-series-form",
        claim: "the generating-series form of the defining relation, with second term t_kj(v) t_il(u), checked coefficientwise through the telescoped identity",
        grid: "all sequences of length <= 3, levels r,s <= 3 including the level-0 delta",
        run: algebra::rtt_series_form,
    },
    Check {
        name: "assoc-confluence",
        claim: "normal-ordering rewriting is confluent: random generator triples multiply associatively",
        grid: "all sequences of length <= 4, 500 seeded triples each, levels <= 3",
        run: algebra::assoc_confluence,
    },
    Check {
        name: "normal-form-idempotence",
        claim: "re-normalizing a canonical element is the identity and every stored monomial is normally ordered with no odd squares",
        grid: "all sequences of length <= 3, 100 seeded products",
        run: algebra::normal_form_idempotence,
    },
    Check {
        name: "parity-grading",
        claim: "monomial parity is additive under multiplication of parity-homogeneous elements",
        grid: "all sequences of length <= 4, 200 seeded pairs",
        run: algebra::parity_grading,
    },
    Check {
        name: "series-laws",
        claim: "truncated series form a ring up to order D; integer shifts are ring homomorphisms, inverses are two-sided, and shifting commutes with inversion",
        grid: "all sequences of length <= 3, 200 seeded samples",
        run: algebra::series_laws,
    },
    Check {
        name: "inverse-matrix",
        claim: "the generating matrix T(u) is invertible: T(u) T(u)^{-1} = T(u)^{-1} T(u) = I up to order D",
        grid: "all sequences of length <= 4, order 3",
        run: gauss::inverse_matrix,
    },
    Check {
        name: "gauss-reconstruct",
        claim: "the Gauss decomposition exists and reconstructs: F(u) D(u) E(u) = T(u) with unitriangular E, F for every composition",
        grid: "all sequences of length <= 4, every composition, order 3",
        run: gauss::gauss_reconstruct,
    },
    Check {
        name: "quasidet-agree",
        claim: "the boxed quasideterminant (Schur complement of the leading blocks) equals the elimination D-block for every block index",
        grid: "all sequences of length <= 4, every composition, order 3",
        run: gauss::quasidet_agree,
    },
    Check {
        name: "drinfeld-commute",
        claim: "the diagonal Drinfeld generators d_i(u) commute pairwise up to order D",
        grid: "all sequences of length <= 4, order 3",
        run: gauss::drinfeld_commute,
    },
    Check {
        name: "psi-block-transport",
        claim: "parabolic diagonal blocks depend only on the leading size: D_a(u) is the shift-map image of the leading corner block of the tail context",
        grid: "all sequences of length <= 3 plus 1010 and 0101, every composition, order 3",
        run: gauss::psi_block_transport,
    },
    Check {
        name: "qdet-factorization",
        claim: "the quantum determinant factors through the Drinfeld generators: qdet T(u) = d_1(u) d_2(u-1) ... d_N(u-N+1)",
        grid: "even contexts of rank 2 and 3, order 4",
        run: qdet::qdet_factorization,
    },
    Check {
        name: "qdet-parabolic",
        claim: "the quantum determinant factors through the parabolic generators: qdet D_a(u - p_a) is the matching segment of Drinfeld factors, and the block qdets multiply to c_N(u)",
        grid: "even context of rank 3, every composition, order 4",
        run: qdet::qdet_parabolic,
    },
    Check {
        name: "lemma-psi-qdet",
        claim: "the shift map on quantum minors: psi_m(qdet T_ij(u)) = c_m(u+m)^{-1} qdet T_{m#i,m#j}(u+m)",
        grid: "even sources of rank 1 and 2 embedded with m = 1, 2; order 3",
        run: qdet::lemma_psi_qdet,
    },
    Check {
        name: "y11-relations",
        claim: "the four displayed series relations of the rank-(1|1) algebra over 01, including the vanishing square t21(u) t21(u-1) = 0",
        grid: "sequence 01, order 4",
        run: berezinian::y11_relations,
    },
    Check {
        name: "y11-odd-reflection",
        claim: "sigma_1 carries the Drinfeld ratio of Y_{1|1}(10) to its unit-shifted inverse pattern over 01",
        grid: "sequences 10 -> 01, order 4",
        run: morphism::y11_odd_reflection,
    },
    Check {
        name: "odd-reflection-general",
        claim: "odd reflections act on consecutive Drinfeld generators as sigma_i(d_i^{-1} d_{i+1}) = d_i(u-1) d_{i+1}(u-1)^{-1}, uniformly across sequences; the variant with the inverses swapped does not hold",
        grid: "all sequences of length <= 4 with a (1,0) adjacency, order 3",
        run: morphism::odd_reflection_general,
    },
    Check {
        name: "berezinian-standard",
        claim: "for the standard sequence the quantum Berezinian equals its Drinfeld-generator display d_1(u)...d_M(u-M+1) d_{M+1}(u-M+1)^{-1}...d_{M+N}(u-M+N)^{-1}",
        grid: "standard sequences with M+N <= 4, order 3",
        run: berezinian::berezinian_standard,
    },
    Check {
        name: "berezinian-parabolic-standard",
        claim: "standard-sequence parabolic Berezinian: qsdet equals the product of qdets of even blocks and qdets of inverted odd blocks at their staggered arguments",
        grid: "standard contexts with M, N >= 1 and M+N <= 4, all (lambda | nu) compositions, order 3",
        run: berezinian::berezinian_parabolic_standard,
    },
    Check {
        name: "berezinian-equals-bseries",
        claim: "the quantum Berezinian of an arbitrary 01-sequence equals the product of shifted (and inverted, where the digit is odd) Drinfeld generators at the evaluation points u_i",
        grid: "all sequences of length <= 4, order 3",
        run: berezinian::berezinian_equals_bseries,
    },
    Check {
        name: "berezinian-central",
        claim: "the coefficients of the quantum Berezinian are central: they supercommute with every generator",
        grid: "all sequences of length <= 4, coefficients r <= 3 against levels s <= 2",
        run: berezinian::berezinian_central,
    },
    Check {
        name: "berezinian-block-factorization",
        claim: "the quantum Berezinian factors through any composition: qsdet T(u) is the product of the block Berezinians of the Gauss D-blocks evaluated at u_{a*1} - |1|_a",
        grid: "all sequences of length <= 4, every composition, order 3",
        run: berezinian::berezinian_block_factorization,
    },
    Check {
        name: "berezinian-permutation",
        claim: "the defining double sum of the Berezinian is invariant under any re-indexing theta of the zero positions and tau of the one positions, with compensating signs",
        grid: "sequences 0101 and 1001, all theta and tau, order 3",
        run: berezinian::berezinian_permutation,
    },
    Check {
        name: "prefix-superminor-ratio",
        claim: "each factor dtilde_i(u_i) equals the ratio of consecutive prefix superminors of the leading corners",
        grid: "all sequences of length <= 3 plus 0101, every prefix length, order 3",
        run: berezinian::prefix_superminor_ratio,
    },
    Check {
        name: "example-1010-qsdet",
        claim: "worked example over 1010: the displayed two-factor Berezinian formula holds and its canonical text matches the golden fixture byte for byte",
        grid: "sequence 1010, order 3 (fixture-pinned)",
        run: examples::example_1010_qsdet,
    },
    Check {
        name: "example-1010-blocks",
        claim: "worked example over 1010 with mu = (2,2): the block Berezinians collapse to D_{1;2,2} D'_{1;1,1} D_{2;2,2} D'_{2;1,1} and the product matches the golden fixture byte for byte",
        grid: "sequence 1010, mu = (2,2), order 3 (fixture-pinned)",
        run: examples::example_1010_blocks,
    },
    Check {
        name: "sigma-s-factorization",
        claim: "the straightening of 1010 onto the standard sequence is the composition of odd reflections through 0110 and 0101",
        grid: "sequence 1010, order 3",
        run: morphism::sigma_s_factorization,
    },
    Check {
        name: "sigma-s-transport",
        claim: "the straightening isomorphism carries the Berezinian of any sequence to the standard-sequence Berezinian",
        grid: "all sequences of length <= 4, order 3",
        run: morphism::sigma_s_transport,
    },
    Check {
        name: "morphism-involutions",
        claim: "rho and omega are involutive and zeta = rho . omega composes to an involution, generator table by generator table",
        grid: "all sequences of length <= 3, order 3",
        run: morphism::morphism_involutions,
    },
    Check {
        name: "morphism-homomorphism",
        claim: "relabelings, rho, omega, zeta, the embedding phi and the shift map psi are parity-preserving algebra homomorphisms and transport the defining relation",
        grid: "all sequences of length <= 2, 100 seeded generator pairs per map",
        run: morphism::morphism_homomorphism,
    },
    Check {
        name: "psi-agreement",
        claim: "the shift map's corner quasideterminant form agrees with the composition omega . phi . omega on every generator",
        grid: "selected sources of rank <= 3 with prefixes 0 and 1, order 3",
        run: morphism::psi_agreement,
    },
    Check {
        name: "bseries-transport",
        claim: "odd reflections transport the b-series: sigma_i(b^s(u)) = b^{s-bar}(u)",
        grid: "all sequences of length <= 4 with a (1,0) adjacency, order 3",
        run: morphism::bseries_transport,
    },
];
