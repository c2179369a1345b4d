//! The claim table. Template letters `1..=r` are relabelled by permutations
//! of the vertex set when a check asks for it.

use super::{Check, Claim, Cx, Perms, Subst, Swaps};

const FREE3_L4: &[&[usize]] = &[
    &[1, 2, 1, 1],
    &[1, 3, 1, 1],
    &[2, 3, 2, 1],
    &[1, 3, 2, 1],
    &[1, 3, 1, 2],
    &[2, 3, 2, 2],
    &[2, 3, 1, 2],
    &[1, 3, 2, 3],
];

// i, j, k = 1, 2, 3
const FREE3_TEMPLATE: &[&[usize]] = &[
    &[2, 1, 1, 1],
    &[3, 1, 1, 1],
    &[3, 2, 2, 1],
    &[3, 1, 2, 1],
    &[3, 1, 1, 2],
    &[3, 2, 2, 2],
    &[3, 2, 1, 2],
    &[3, 1, 2, 3],
];

// i, j, k, l = 1, 2, 3, 4
const FREE4_L4: &[&[usize]] = &[
    &[3, 2, 2, 1],
    &[3, 1, 2, 1],
    &[3, 1, 1, 2],
    &[3, 2, 1, 2],
    &[3, 1, 2, 3],
    &[2, 1, 1, 1],
    &[4, 2, 2, 1],
    &[4, 1, 2, 1],
    &[4, 1, 1, 2],
    &[4, 2, 1, 2],
    &[4, 1, 2, 4],
    &[3, 1, 1, 1],
    &[4, 1, 1, 1],
    &[4, 3, 3, 1],
    &[4, 1, 3, 1],
    &[4, 1, 1, 3],
    &[4, 3, 1, 3],
    &[4, 1, 3, 4],
    &[3, 2, 2, 2],
    &[4, 2, 2, 2],
    &[4, 3, 3, 2],
    &[4, 2, 3, 2],
    &[4, 2, 2, 3],
    &[4, 3, 3, 3],
    &[4, 3, 2, 3],
    &[4, 2, 3, 4],
    &[2, 4, 3, 1],
    &[1, 4, 3, 2],
    &[1, 4, 2, 3],
    &[2, 4, 1, 3],
    &[3, 4, 1, 2],
    &[3, 4, 2, 1],
];

// Two edges {i,k}, {j,k} with i < j; (i, j, k) = (1, 2, 3).
const TWO_EDGES: &[(usize, usize)] = &[(1, 3), (2, 3)];
const TWO_EDGES_L4: &[&[usize]] = &[&[1, 2, 1, 1]];

// One edge {i,j} with i < j, third vertex k; (i, j, k) = (1, 2, 3).
const ONE_EDGE: &[(usize, usize)] = &[(1, 2)];
const ONE_EDGE_L4: &[&[usize]] = &[&[1, 3, 1, 1], &[3, 2, 3, 3], &[3, 2, 3, 1], &[3, 2, 1, 3]];

const TRIANGLE: &[(usize, usize)] = &[(1, 2), (1, 3), (2, 3)];

pub fn table() -> Vec<Claim> {
    vec![
        Claim {
            id: "lrck-bases",
            statement: "L^1, L^2, L^3 of RC_K have the combinatorial bases: m generators, one bracket per non-edge, and in degree 3 one per non-edge plus one per admissible triple",
            checks: vec![Check::CombinatorialDims {
                samples: 20,
                max_m: 5,
                seed: 2024,
            }],
        },
        Claim {
            id: "eq-square",
            statement: "(g_i, g_j, g_i) = (g_i, g_j, g_j) = (g_j, g_i)^2 in every right-angled Coxeter group",
            checks: vec![Check::RacgPairs { max_m: 4, degree4: false }],
        },
        Claim {
            id: "relation-L4",
            statement: "(g_i, g_j, g_i, g_i) = (g_i, g_j)^4 = (g_i, g_j, g_i, g_j), so the classes agree in L^4",
            checks: vec![
                Check::RacgPairs { max_m: 4, degree4: true },
                Check::GroupRelation {
                    complex: Cx::Discrete(3),
                    degree: 4,
                    lhs: &[1, 2, 1, 1],
                    rhs: &[1, 2, 1, 2],
                },
            ],
        },
        Claim {
            id: "lie-relation-L4",
            statement: "[μ_i, μ_j, μ_i, μ_i] = [μ_i, μ_j, μ_i, μ_j] in the Lie algebra F with the square relations",
            checks: vec![Check::LieRelation {
                m: 3,
                lhs: &[1, 2, 1, 1],
                rhs: &[1, 2, 1, 2],
            }],
        },
        Claim {
            id: "F-vs-L-low",
            statement: "F^i is isomorphic to L^i(RC_K) for i <= 3 when K is discrete",
            checks: vec![
                Check::LieVsGroup { complex: Cx::Discrete(3), dmax: 3, equal: true },
                Check::LieVsGroup { complex: Cx::Discrete(4), dmax: 3, equal: true },
            ],
        },
        Claim {
            id: "lie-compare",
            statement: "the Lie algebra F surjects onto L(RC_K), so dim F^d >= dim L^d",
            checks: vec![
                Check::LieVsGroup { complex: Cx::Discrete(3), dmax: 5, equal: false },
                Check::LieVsGroup { complex: Cx::Discrete(4), dmax: 4, equal: false },
                Check::LieVsGroup { complex: Cx::Flag(3, ONE_EDGE), dmax: 5, equal: false },
                Check::LieVsGroup { complex: Cx::Flag(3, TRIANGLE), dmax: 5, equal: false },
            ],
        },
        Claim {
            id: "numbergens3",
            statement: "L^4(RC_K) has a minimal set of 8 generators for K three points",
            checks: vec![Check::Dims { complex: Cx::Discrete(3), class: 4, expect: &[3, 3, 5, 8] }],
        },
        Claim {
            id: "numbergens3-one-edge",
            statement: "L^4(RC_K) has a minimal set of 4 generators for K three points with a single edge",
            checks: vec![Check::DimAt { complex: Cx::Flag(3, ONE_EDGE), degree: 4, expect: 4 }],
        },
        Claim {
            id: "numbergens4",
            statement: "L^4(RC_K) has a minimal set of 32 generators for K four points; degrees 2 and 3 have 6 and 14",
            checks: vec![Check::Dims { complex: Cx::Discrete(4), class: 4, expect: &[4, 6, 14, 32] }],
        },
        Claim {
            id: "free3-L4",
            statement: "L^4 of the free product of three Z_2 is Z_2^8 with the listed minimal generators",
            checks: vec![Check::Basis {
                m: 3,
                edges: &[],
                degree: 4,
                family: FREE3_L4,
                perms: Perms::Identity,
                swaps: Swaps::AllSubsets,
                drop_one: true,
            }],
        },
        Claim {
            id: "cor-free3-sym",
            statement: "the eight generators in i, j, k form a minimal generating set for every distinct choice of i, j, k",
            checks: vec![Check::Basis {
                m: 3,
                edges: &[],
                degree: 4,
                family: FREE3_TEMPLATE,
                perms: Perms::All,
                swaps: Swaps::AllAndSingles,
                drop_one: true,
            }],
        },
        Claim {
            id: "commcox3",
            statement: "for K on three vertices L^4 is 0 (triangle), Z_2 (two edges), Z_2^4 (one edge) or Z_2^8 (no edges) with the listed generators",
            checks: vec![
                Check::Basis {
                    m: 3,
                    edges: TRIANGLE,
                    degree: 4,
                    family: &[],
                    perms: Perms::Identity,
                    swaps: Swaps::None,
                    drop_one: false,
                },
                Check::Basis {
                    m: 3,
                    edges: TWO_EDGES,
                    degree: 4,
                    family: TWO_EDGES_L4,
                    perms: Perms::Increasing(&[(1, 2)]),
                    swaps: Swaps::AllAndSingles,
                    drop_one: true,
                },
                Check::Basis {
                    m: 3,
                    edges: ONE_EDGE,
                    degree: 4,
                    family: ONE_EDGE_L4,
                    perms: Perms::Increasing(&[(1, 2)]),
                    swaps: Swaps::AllAndSingles,
                    drop_one: true,
                },
                Check::Basis {
                    m: 3,
                    edges: &[],
                    degree: 4,
                    family: FREE3_TEMPLATE,
                    perms: Perms::All,
                    swaps: Swaps::None,
                    drop_one: false,
                },
            ],
        },
        Claim {
            id: "free4-L4",
            statement: "L^4 of the free product of four Z_2 is Z_2^32 with minimal generators A_1, A_2, A_3, A_4, B",
            checks: vec![Check::Basis {
                m: 4,
                edges: &[],
                degree: 4,
                family: FREE4_L4,
                perms: Perms::Identity,
                swaps: Swaps::AllAndSingles,
                drop_one: true,
            }],
        },
        Claim {
            id: "theorem-free4-sym",
            statement: "the 32 generators in i, j, k, l form a minimal generating set for every distinct choice of i, j, k, l",
            checks: vec![Check::Basis {
                m: 4,
                edges: &[],
                degree: 4,
                family: FREE4_L4,
                perms: Perms::All,
                swaps: Swaps::AllAndSingles,
                drop_one: false,
            }],
        },
        Claim {
            id: "hall-witt",
            statement: "the three Hall-Witt identities hold for all a, b, c",
            checks: vec![Check::Identities { m: 4, trials: 100, max_len: 6, seed: 7, lemma: false }],
        },
        Claim {
            id: "triple-lemma",
            statement: "(a,(b,c)) and ((a,b),c) expand into the stated products of double and triple commutators",
            checks: vec![Check::Identities { m: 4, trials: 100, max_len: 6, seed: 11, lemma: true }],
        },
        Claim {
            id: "obrcom",
            statement: "(a, b, c)^{-1} = (b, a, c) modulo γ_{k+m+n+1} for a, b, c of weights k, m, n",
            checks: vec![Check::Congruence {
                kind: Subst::Obrcom,
                weights: &[(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2)],
                random: 10,
                seed: 3,
            }],
        },
        Claim {
            id: "cor-triple-1",
            statement: "(a,(b,c)) = (c,(b,a))(b,(a,c)) modulo γ_{min(2i+j+k, i+2j+k, i+j+2k)}",
            checks: vec![Check::Congruence {
                kind: Subst::Inner,
                weights: &[(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2)],
                random: 10,
                seed: 5,
            }],
        },
        Claim {
            id: "cor-triple-2",
            statement: "((a,b),c) = ((c,b),a)((a,c),b) modulo γ_{min(2i+j+k, i+2j+k, i+j+2k)}",
            checks: vec![Check::Congruence {
                kind: Subst::Outer,
                weights: &[(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2)],
                random: 10,
                seed: 9,
            }],
        },
        Claim {
            id: "cor-obrcom",
            statement: "(a, b, c) = (c, (b, a)) modulo γ_{k+m+n+1}",
            checks: vec![Check::Congruence {
                kind: Subst::Swapped,
                weights: &[(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2)],
                random: 10,
                seed: 13,
            }],
        },
        Claim {
            id: "square-descends",
            statement: "the square of any element of γ_k(RC_K) lies in γ_{k+1}, so every factor is elementary abelian of exponent 2",
            checks: vec![Check::Structure { max_m: 4, class: 5, samples: 50, seed: 17 }],
        },
        Claim {
            id: "homrk",
            statement: "H_i(R_K) is the sum over J of the reduced homology of K_J in degree i-1",
            checks: vec![Check::HomologyAgree { max_m: 4 }],
        },
        Claim {
            id: "h1rk",
            statement: "H_1(R_K) is free abelian with rank the number of commutator generators of RC_K'",
            checks: vec![
                Check::H1Rank { complex: Cx::Discrete(3), expect: Some(5) },
                Check::H1Rank { complex: Cx::Discrete(4), expect: Some(17) },
                Check::H1RankAll { max_m: 4 },
            ],
        },
    ]
}
