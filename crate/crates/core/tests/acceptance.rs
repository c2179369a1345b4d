//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the
//! process exits nonzero if any fails.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use racg_lcs::complex::{all_complexes, flag_complex_of_graph, SimplicialComplex};
use racg_lcs::freegroup::{commutator, fuzz_identities, simple_nested, FreeWord};
use racg_lcs::lie2::{
    check_derived_relation, compare_with_group, free_lie_basis, quotient_dims, square_relations,
    GradedLie2,
};
use racg_lcs::nq::{
    check_racg_structure, racg_quotient, verify_basis_claim_pc, verify_congruence, PcPresentation,
};
use racg_lcs::racg::verify_all_pairs;

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;
type Case = (&'static str, Vec<(usize, usize)>, Option<[usize; 4]>, usize);

fn nested(letters: &[usize]) -> FreeWord {
    let parts: Vec<FreeWord> = letters.iter().map(|&i| FreeWord::generator(i)).collect();
    simple_nested(&parts).unwrap()
}

fn words(list: &[[usize; 4]]) -> Vec<FreeWord> {
    list.iter().map(|b| nested(b)).collect()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn graph(m: usize, edges: &[(usize, usize)]) -> SimplicialComplex {
    flag_complex_of_graph(m, edges).unwrap()
}

/// One representative complex per 1-skeleton.
fn graphs_up_to(max_m: usize) -> Vec<SimplicialComplex> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for m in 1..=max_m {
        for k in all_complexes(m).unwrap() {
            if seen.insert((m, k.edges())) {
                out.push(k);
            }
        }
    }
    out
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(m - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, m);
            out.push(q);
        }
    }
    out
}

fn relabel(list: &[[usize; 4]], perm: &[usize]) -> Vec<[usize; 4]> {
    list.iter().map(|b| b.map(|l| perm[l - 1])).collect()
}

fn swapped(b: [usize; 4]) -> [usize; 4] {
    [b[1], b[0], b[2], b[3]]
}

const FREE3: [[usize; 4]; 8] = [
    [1, 2, 1, 1],
    [1, 3, 1, 1],
    [2, 3, 2, 1],
    [1, 3, 2, 1],
    [1, 3, 1, 2],
    [2, 3, 2, 2],
    [2, 3, 1, 2],
    [1, 3, 2, 3],
];

// [j,i,i,i], [k,i,i,i], [k,j,j,i], [k,i,j,i], [k,i,i,j], [k,j,j,j], [k,j,i,j], [k,i,j,k]
const FREE3_IJK: [[usize; 4]; 8] = [
    [2, 1, 1, 1],
    [3, 1, 1, 1],
    [3, 2, 2, 1],
    [3, 1, 2, 1],
    [3, 1, 1, 2],
    [3, 2, 2, 2],
    [3, 2, 1, 2],
    [3, 1, 2, 3],
];

const FREE4: [[usize; 4]; 32] = [
    [3, 2, 2, 1],
    [3, 1, 2, 1],
    [3, 1, 1, 2],
    [3, 2, 1, 2],
    [3, 1, 2, 3],
    [2, 1, 1, 1],
    [4, 2, 2, 1],
    [4, 1, 2, 1],
    [4, 1, 1, 2],
    [4, 2, 1, 2],
    [4, 1, 2, 4],
    [3, 1, 1, 1],
    [4, 1, 1, 1],
    [4, 3, 3, 1],
    [4, 1, 3, 1],
    [4, 1, 1, 3],
    [4, 3, 1, 3],
    [4, 1, 3, 4],
    [3, 2, 2, 2],
    [4, 2, 2, 2],
    [4, 3, 3, 2],
    [4, 2, 3, 2],
    [4, 2, 2, 3],
    [4, 3, 3, 3],
    [4, 3, 2, 3],
    [4, 2, 3, 4],
    [2, 4, 3, 1],
    [1, 4, 3, 2],
    [1, 4, 2, 3],
    [2, 4, 1, 3],
    [3, 4, 1, 2],
    [3, 4, 2, 1],
];

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn criterion_1() -> Outcome {
    let cases: [Case; 4] = [
        ("discrete", vec![], Some([3, 3, 5, 8]), 8),
        ("one edge", vec![(1, 2)], None, 4),
        ("two edges", vec![(1, 3), (2, 3)], Some([3, 1, 1, 1]), 1),
        ("triangle", vec![(1, 2), (1, 3), (2, 3)], None, 0),
    ];
    let mut notes = Vec::new();
    for (name, edges, full, l4) in cases {
        let (pc, dt) = timed(|| racg_quotient(&graph(3, &edges), 4).unwrap());
        let dims = pc.dims();
        ensure(
            dims[3] == l4,
            format!("{name}: L^4 = {} expected {l4}", dims[3]),
        )?;
        if let Some(full) = full {
            ensure(
                dims == full,
                format!("{name}: dims {dims:?} expected {full:?}"),
            )?;
        }
        ensure(dt < Duration::from_secs(10), format!("{name}: took {dt:?}"))?;
        notes.push(format!("{name} {dims:?}"));
    }
    Ok(notes.join("; "))
}

fn criterion_2() -> Outcome {
    let (pc, dt) = timed(|| racg_quotient(&SimplicialComplex::discrete(4).unwrap(), 4).unwrap());
    let dims = pc.dims();
    ensure(dims == [4, 6, 14, 32], format!("dims {dims:?}"))?;
    ensure(dt < Duration::from_secs(300), format!("took {dt:?}"))?;
    Ok(format!("dims {dims:?} in {dt:?}"))
}

fn basis(pc: &PcPresentation, list: &[[usize; 4]]) -> bool {
    verify_basis_claim_pc(pc, 4, &words(list)).unwrap()
}

fn drop_any_fails(pc: &PcPresentation, list: &[[usize; 4]]) -> bool {
    (0..list.len()).all(|t| {
        let mut short = list.to_vec();
        short.remove(t);
        !basis(pc, &short)
    })
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    let d3 = racg_quotient(&SimplicialComplex::discrete(3).unwrap(), 4).unwrap();
    let d4 = racg_quotient(&SimplicialComplex::discrete(4).unwrap(), 4).unwrap();

    ensure(basis(&d3, &FREE3), "8-element list is not a basis")?;
    ensure(drop_any_fails(&d3, &FREE3), "a 7-element sublist spans")?;
    for mask in 0u32..256 {
        let v: Vec<[usize; 4]> = FREE3
            .iter()
            .enumerate()
            .map(|(t, &b)| if mask >> t & 1 == 1 { swapped(b) } else { b })
            .collect();
        ensure(
            basis(&d3, &v),
            format!("swap mask {mask:#b} breaks the 8-element list"),
        )?;
        checked += 1;
    }
    ensure(basis(&d4, &FREE4), "32-element list is not a basis")?;
    ensure(drop_any_fails(&d4, &FREE4), "a 31-element sublist spans")?;
    checked += 2;

    // Three generators: the i, j, k family for every labelling.
    for perm in permutations(3) {
        let v = relabel(&FREE3_IJK, &perm);
        ensure(basis(&d3, &v), format!("i,j,k family fails for {perm:?}"))?;
        let all_swapped: Vec<[usize; 4]> = v.iter().map(|&b| swapped(b)).collect();
        ensure(
            basis(&d3, &all_swapped),
            format!("swapped i,j,k family fails for {perm:?}"),
        )?;
        checked += 2;
    }
    // Four generators: the final family for all 24 labellings.
    for perm in permutations(4) {
        let v = relabel(&FREE4, &perm);
        ensure(basis(&d4, &v), format!("32 family fails for {perm:?}"))?;
        let all_swapped: Vec<[usize; 4]> = v.iter().map(|&b| swapped(b)).collect();
        ensure(
            basis(&d4, &all_swapped),
            format!("swapped 32 family fails for {perm:?}"),
        )?;
        checked += 2;
    }
    // Cases on three vertices; (i, j, k) ranges over labellings with i < j.
    let tri = racg_quotient(&graph(3, &[(1, 2), (1, 3), (2, 3)]), 4).unwrap();
    ensure(basis(&tri, &[]), "triangle: empty list is not a basis")?;
    for perm in permutations(3) {
        let (i, j, k) = (perm[0], perm[1], perm[2]);
        if i > j {
            continue;
        }
        let two = racg_quotient(&graph(3, &[(i, k), (j, k)]), 4).unwrap();
        ensure(
            basis(&two, &[[i, j, i, i]]),
            format!("two edges at {k}: [{i},{j},{i},{i}]"),
        )?;
        let one = racg_quotient(&graph(3, &[(i, j)]), 4).unwrap();
        let list = [[i, k, i, i], [k, j, k, k], [k, j, k, i], [k, j, i, k]];
        ensure(
            basis(&one, &list),
            format!("edge {{{i},{j}}}: listed generators"),
        )?;
        ensure(
            drop_any_fails(&one, &list),
            format!("edge {{{i},{j}}}: sublist spans"),
        )?;
        checked += 2;
    }
    Ok(format!("{checked} families checked"))
}

/// Degree 1-3 dimensions from the combinatorial bases.
fn combinatorial(k: &SimplicialComplex) -> Vec<usize> {
    let m = k.m();
    let edge = |a: usize, b: usize| k.has_edge(a, b);
    let non_edges = (1..=m)
        .flat_map(|i| (i + 1..=m).map(move |j| (i, j)))
        .filter(|&(i, j)| !edge(i, j))
        .count();
    let mut triples = 0;
    for j in 1..=m {
        for i in 1..j {
            for kk in 1..j {
                if kk == i {
                    continue;
                }
                // component of i in the full subcomplex on {i, j, kk}
                let mut comp = vec![i];
                for _ in 0..2 {
                    for v in [j, kk] {
                        if !comp.contains(&v) && comp.iter().any(|&c| edge(c, v)) {
                            comp.push(v);
                        }
                    }
                }
                if !comp.contains(&j) && comp.iter().all(|&v| v >= i) {
                    triples += 1;
                }
            }
        }
    }
    vec![m, non_edges, non_edges + triples]
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    for trial in 0..20 {
        let m = rng.gen_range(2..=5);
        let mut edges = Vec::new();
        for i in 1..=m {
            for j in i + 1..=m {
                if rng.gen_bool(0.4) {
                    edges.push((i, j));
                }
            }
        }
        // Higher faces do not affect the group; add a few anyway.
        let mut faces: Vec<Vec<usize>> = edges.iter().map(|&(a, b)| vec![a, b]).collect();
        if rng.gen_bool(0.5) && m >= 3 {
            faces.push(vec![1, 2, 3]);
        }
        let k = SimplicialComplex::new(m, &faces).unwrap();
        let dims = racg_quotient(&k, 3).unwrap().dims();
        let expect = combinatorial(&k);
        ensure(
            dims == expect,
            format!("trial {trial} {:?}: {dims:?} vs {expect:?}", k.face_lists()),
        )?;
    }
    Ok("20 complexes match".into())
}

fn criterion_5() -> Outcome {
    let t = Instant::now();
    let r = fuzz_identities(4, 100, 6, 5);
    ensure(r.passed(), format!("{r:?}"))?;
    let mut pairs = 0;
    let mut complexes = 0;
    for m in 2..=4 {
        for k in all_complexes(m).unwrap() {
            let p = verify_all_pairs(&k).unwrap();
            ensure(p.passed(), format!("{:?}: {p:?}", k.face_lists()))?;
            pairs += p.pairs;
            complexes += 1;
        }
    }
    let dt = t.elapsed();
    ensure(dt < Duration::from_secs(5), format!("took {dt:?}"))?;
    Ok(format!(
        "100 triples, {pairs} pairs over {complexes} complexes in {dt:?}"
    ))
}

fn criterion_6() -> Outcome {
    let g = FreeWord::generator;
    let com = commutator;
    let mut count = 0;
    // (a, b, c) with weights (i, j, k)
    let subs = [
        ((g(1), 1), (g(2), 1), (g(3), 1)),
        ((com(&g(1), &g(2)), 2), (g(3), 1), (g(4), 1)),
    ];
    for ((a, i), (b, j), (c, k)) in subs {
        let lower = i + j + k + 1;
        let cor = (2 * i + j + k).min(i + 2 * j + k).min(i + j + 2 * k);
        let checks = [
            (
                "inverse",
                com(&com(&a, &b), &c).inverse(),
                com(&com(&b, &a), &c),
                lower,
            ),
            (
                "corollary 1",
                com(&a, &com(&b, &c)),
                com(&c, &com(&b, &a)).mul(&com(&b, &com(&a, &c))),
                cor,
            ),
            (
                "corollary 2",
                com(&com(&a, &b), &c),
                com(&com(&c, &b), &a).mul(&com(&com(&a, &c), &b)),
                cor,
            ),
            ("swap", com(&com(&a, &b), &c), com(&c, &com(&b, &a)), lower),
        ];
        for (name, lhs, rhs, modulus) in checks {
            ensure(
                verify_congruence(&lhs, &rhs, modulus).unwrap(),
                format!("{name} fails for weights ({i},{j},{k}) mod γ_{modulus}"),
            )?;
            count += 1;
        }
    }
    Ok(format!("{count} congruences"))
}

fn criterion_7() -> Outcome {
    let mut n = 0;
    for k in graphs_up_to(4) {
        let pc = racg_quotient(&k, 5).unwrap();
        let r = check_racg_structure(&pc, 50, 99).unwrap();
        ensure(r.passed(), format!("{:?}: {r:?}", k.face_lists()))?;
        ensure(
            pc.invariants()
                .iter()
                .all(|inv| inv.free_rank == 0 && inv.torsion.iter().all(|&t| t == 2)),
            format!("{:?}: factor not elementary abelian", k.face_lists()),
        )?;
        n += 1;
    }
    Ok(format!("{n} groups at class 5"))
}

fn criterion_8() -> Outcome {
    let mut n = 0;
    for m in 1..=5 {
        for k in all_complexes(m).unwrap() {
            for d in 0..=m {
                let a = k.rmk_homology(d).unwrap();
                let b = k.cubical_rmk_homology(d).unwrap();
                ensure(
                    a == b,
                    format!("{:?} degree {d}: {a:?} vs {b:?}", k.face_lists()),
                )?;
            }
            let h1 = k.rmk_homology(1).unwrap();
            let gens = k.gscox_generators().len();
            ensure(
                h1.torsion.is_empty() && h1.free_rank == gens,
                format!("{:?}: H_1 {h1:?}, {gens} generators", k.face_lists()),
            )?;
            n += 1;
        }
    }
    for (m, expect) in [(3, 5), (4, 17)] {
        let k = SimplicialComplex::discrete(m).unwrap();
        let rank = k.rmk_homology(1).unwrap().free_rank;
        ensure(
            rank == expect && k.gscox_generators().len() == expect,
            format!("{m} points: rank {rank}"),
        )?;
    }
    Ok(format!("{n} complexes"))
}

/// Necklace count of aperiodic words.
fn witt(m: usize, d: usize) -> usize {
    let mut count = 0;
    for idx in 0..m.pow(d as u32) {
        let w: Vec<usize> = (0..d)
            .map(|p| idx / m.pow((d - 1 - p) as u32) % m)
            .collect();
        if (1..d).all(|r| [&w[r..], &w[..r]].concat() > w) {
            count += 1;
        }
    }
    count
}

fn criterion_9() -> Outcome {
    for m in 1..=4 {
        let free = GradedLie2::free(m, 5).unwrap().dims();
        for d in 1..=5 {
            ensure(
                free_lie_basis(m, d).len() == witt(m, d),
                format!("Lyndon count m={m} d={d}"),
            )?;
            ensure(free[d - 1] == witt(m, d), format!("free dims m={m} d={d}"))?;
        }
    }
    for k in graphs_up_to(4) {
        let m = k.m();
        let f = quotient_dims(m, &k.edges(), &square_relations(m), 3).unwrap();
        let l = racg_quotient(&k, 3).unwrap().dims();
        ensure(f == l, format!("{:?}: F {f:?} vs L {l:?}", k.face_lists()))?;
    }
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        ensure(
            check_derived_relation(
                3,
                &[],
                &square_relations(3),
                &vec![vec![i, j, i, i]],
                &vec![vec![i, j, i, j]],
            )
            .unwrap(),
            format!("F^4 relation for ({i},{j})"),
        )?;
    }
    let mut kernels = Vec::new();
    for k in graphs_up_to(4) {
        let dmax = if k.m() <= 3 { 5 } else { 4 };
        let cmp = compare_with_group(&k, dmax).unwrap();
        ensure(
            cmp.iter().all(|c| c.kernel_dim >= 0),
            format!("{:?}: {cmp:?}", k.face_lists()),
        )?;
        if k.edges().is_empty() && k.m() >= 3 {
            kernels.push(format!("m={} F^4-L^4={}", k.m(), cmp[3].kernel_dim));
        }
    }
    Ok(kernels.join(", "))
}

fn main() {
    let criteria: [(&str, Criterion); 9] = [
        ("dimension table on 3 vertices", criterion_1),
        ("dimensions on 4 discrete vertices", criterion_2),
        ("basis claims", criterion_3),
        ("degrees 1-3 on random complexes", criterion_4),
        ("identity suites", criterion_5),
        ("congruence suite", criterion_6),
        ("structural invariants", criterion_7),
        ("homology cross-check", criterion_8),
        ("Lie algebra side", criterion_9),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let (outcome, dt) = timed(f);
        match outcome {
            Ok(note) => println!("criterion {}: PASS {name} ({note}) [{dt:.2?}]", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why} [{dt:.2?}]", n + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
