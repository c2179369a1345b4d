//! Executable checks of the claims about right-angled Coxeter groups, their
//! lower central series and the comparison Lie algebra.
//!
//! Each claim is a row of [`claims::table`]; [`run_all`] interprets the rows.

mod claims;

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::complex::{
    all_complexes, all_flag_complexes, flag_complex_of_graph, random_complex, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::freegroup::{commutator, fuzz_identities, random_word, simple_nested, FreeWord};
use crate::lie2::{check_derived_relation, compare_with_group, square_relations};
use crate::nq::{
    self, check_racg_structure, claimed_rank, express_in, free_quotient, racg_quotient,
    verify_congruence_pc, PcPresentation,
};
use crate::racg::verify_all_pairs;

pub use claims::table;

/// Complex named in a claim.
#[derive(Debug, Clone, Copy)]
pub enum Cx {
    Discrete(usize),
    Flag(usize, &'static [(usize, usize)]),
}

impl Cx {
    fn build(&self) -> Result<SimplicialComplex> {
        match *self {
            Cx::Discrete(m) => SimplicialComplex::discrete(m),
            Cx::Flag(m, edges) => flag_complex_of_graph(m, edges),
        }
    }
}

/// Relabellings applied to a templated family.
#[derive(Debug, Clone, Copy)]
pub enum Perms {
    Identity,
    All,
    /// All permutations keeping each listed pair of template letters in
    /// increasing order.
    Increasing(&'static [(usize, usize)]),
}

/// Variants obtained by swapping the first two entries of brackets.
#[derive(Debug, Clone, Copy)]
pub enum Swaps {
    None,
    /// Every subset of the family.
    AllSubsets,
    /// The whole family at once and each bracket alone.
    AllAndSingles,
}

/// Which triple-commutator congruence to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subst {
    /// `(a,b,c)^{-1} ≡ (b,a,c) mod γ_{k+m+n+1}`
    Obrcom,
    /// `(a,(b,c)) ≡ (c,(b,a))(b,(a,c))`
    Inner,
    /// `((a,b),c) ≡ ((c,b),a)((a,c),b)`
    Outer,
    /// `(a,b,c) ≡ (c,(b,a)) mod γ_{k+m+n+1}`
    Swapped,
}

impl Subst {
    fn modulus(&self, (i, j, k): (usize, usize, usize)) -> usize {
        match self {
            Subst::Obrcom | Subst::Swapped => i + j + k + 1,
            Subst::Inner | Subst::Outer => (2 * i + j + k).min(i + 2 * j + k).min(i + j + 2 * k),
        }
    }

    fn sides(&self, a: &FreeWord, b: &FreeWord, c: &FreeWord) -> (FreeWord, FreeWord) {
        let com = commutator;
        match self {
            Subst::Obrcom => (com(&com(a, b), c).inverse(), com(&com(b, a), c)),
            Subst::Inner => (
                com(a, &com(b, c)),
                com(c, &com(b, a)).mul(&com(b, &com(a, c))),
            ),
            Subst::Outer => (
                com(&com(a, b), c),
                com(&com(c, b), a).mul(&com(&com(a, c), b)),
            ),
            Subst::Swapped => (com(&com(a, b), c), com(c, &com(b, a))),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Check {
    Dims {
        complex: Cx,
        class: usize,
        expect: &'static [usize],
    },
    DimAt {
        complex: Cx,
        degree: usize,
        expect: usize,
    },
    Basis {
        m: usize,
        edges: &'static [(usize, usize)],
        degree: usize,
        family: &'static [&'static [usize]],
        perms: Perms,
        swaps: Swaps,
        drop_one: bool,
    },
    CombinatorialDims {
        samples: usize,
        max_m: usize,
        seed: u64,
    },
    RacgPairs {
        max_m: usize,
        degree4: bool,
    },
    GroupRelation {
        complex: Cx,
        degree: usize,
        lhs: &'static [usize],
        rhs: &'static [usize],
    },
    LieRelation {
        m: usize,
        lhs: &'static [usize],
        rhs: &'static [usize],
    },
    LieVsGroup {
        complex: Cx,
        dmax: usize,
        /// Require equality rather than `dim F^d >= dim L^d`.
        equal: bool,
    },
    Identities {
        m: usize,
        trials: usize,
        max_len: usize,
        seed: u64,
        lemma: bool,
    },
    Congruence {
        kind: Subst,
        weights: &'static [(usize, usize, usize)],
        random: usize,
        seed: u64,
    },
    Structure {
        max_m: usize,
        class: usize,
        samples: usize,
        seed: u64,
    },
    HomologyAgree {
        max_m: usize,
    },
    H1Rank {
        complex: Cx,
        expect: Option<usize>,
    },
    H1RankAll {
        max_m: usize,
    },
}

#[derive(Debug, Clone)]
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub statement: String,
    pub passed: bool,
    pub witness: Vec<Value>,
}

// (m, edges, class)
type RacgKey = (usize, Vec<(usize, usize)>, usize);

/// Caches quotients shared between checks.
#[derive(Default)]
pub struct Context {
    racg: HashMap<RacgKey, PcPresentation>,
    free: HashMap<(usize, usize), PcPresentation>,
}

impl Context {
    pub fn racg(&mut self, k: &SimplicialComplex, class: usize) -> Result<&PcPresentation> {
        let key = (k.m(), k.edges(), class);
        if !self.racg.contains_key(&key) {
            let pc = racg_quotient(k, class)?;
            self.racg.insert(key.clone(), pc);
        }
        Ok(&self.racg[&key])
    }

    pub fn free(&mut self, m: usize, class: usize) -> Result<&PcPresentation> {
        if let std::collections::hash_map::Entry::Vacant(e) = self.free.entry((m, class)) {
            e.insert(free_quotient(m, class)?);
        }
        Ok(&self.free[&(m, class)])
    }
}

/// Ids of all encoded claims.
pub fn claim_ids() -> Vec<&'static str> {
    table().iter().map(|c| c.id).collect()
}

/// Runs the claims whose id equals `case` (all when `None`).
pub fn run_all(case: Option<&str>) -> Result<Vec<ClaimReport>> {
    let claims: Vec<Claim> = table()
        .into_iter()
        .filter(|c| case.is_none_or(|id| c.id == id))
        .collect();
    if claims.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "unknown claim {:?}; known: {}",
            case.unwrap_or(""),
            claim_ids().join(", ")
        )));
    }
    let mut ctx = Context::default();
    claims.iter().map(|c| run_claim(&mut ctx, c)).collect()
}

pub fn run_claim(ctx: &mut Context, claim: &Claim) -> Result<ClaimReport> {
    let mut passed = true;
    let mut witness = Vec::new();
    for check in &claim.checks {
        let (ok, w) = run_check(ctx, check)?;
        passed &= ok;
        witness.push(w);
    }
    Ok(ClaimReport {
        id: claim.id.to_string(),
        statement: claim.statement.to_string(),
        passed,
        witness,
    })
}

fn nested(letters: &[usize]) -> Result<FreeWord> {
    let parts: Vec<FreeWord> = letters.iter().map(|&i| FreeWord::generator(i)).collect();
    simple_nested(&parts)
}

fn relabel(family: &[&[usize]], perm: &[usize]) -> Vec<Vec<usize>> {
    family
        .iter()
        .map(|b| b.iter().map(|&l| perm[l - 1]).collect())
        .collect()
}

fn swap_first(b: &[usize]) -> Vec<usize> {
    let mut v = b.to_vec();
    v.swap(0, 1);
    v
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for idx in 0..rest.len() {
            let x = rest.remove(idx);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(idx, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=m).collect(), &mut Vec::new(), &mut out);
    out
}

/// Rank over GF(2) of the classes of the given brackets in `L^degree`.
pub fn family_rank(pc: &PcPresentation, degree: usize, family: &[Vec<usize>]) -> Result<usize> {
    let words = family
        .iter()
        .map(|b| nested(b))
        .collect::<Result<Vec<_>>>()?;
    claimed_rank(pc, degree, &words)
}

/// True iff the family is a basis of `L^degree(RC_K)`.
pub fn is_basis(pc: &PcPresentation, degree: usize, family: &[Vec<usize>]) -> Result<bool> {
    let dim = pc.generators_of_weight(degree).len();
    Ok(family.len() == dim && family_rank(pc, degree, family)? == dim)
}

/// Applies `perm` (image of vertex `v` at `perm[v-1]`) to a family and checks
/// that the result is still a basis of `L^degree(RC_K)`. The permutation must
/// preserve `K`.
pub fn symmetry_check(
    k: &SimplicialComplex,
    family: &[Vec<usize>],
    perm: &[usize],
    degree: usize,
) -> Result<bool> {
    let m = k.m();
    let mut sorted = perm.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=m).collect::<Vec<_>>() {
        return Err(Error::InvalidArgument(format!(
            "{perm:?} is not a permutation of 1..={m}"
        )));
    }
    for (i, j) in k.edges() {
        if !k.has_edge(perm[i - 1], perm[j - 1]) {
            return Err(Error::InvalidArgument(format!(
                "permutation {perm:?} does not preserve K"
            )));
        }
    }
    let moved: Vec<Vec<usize>> = family
        .iter()
        .map(|b| b.iter().map(|&l| perm[l - 1]).collect())
        .collect();
    let pc = racg_quotient(k, degree)?;
    is_basis(&pc, degree, &moved)
}

/// Dimensions of `L^1..L^3(RC_K)` predicted by the combinatorial bases.
pub fn combinatorial_dims(k: &SimplicialComplex) -> [usize; 3] {
    let m = k.m();
    let non_edges = k.non_edges().len();
    let mut triples = 0;
    for j in 1..=m {
        for i in 1..j {
            for kk in (1..j).filter(|&kk| kk != i) {
                let sub = k.restrict((1 << (i - 1)) | (1 << (j - 1)) | (1 << (kk - 1)));
                let ok = sub
                    .component_masks()
                    .iter()
                    .any(|&c| c & (1 << (j - 1)) == 0 && c.trailing_zeros() as usize + 1 == i);
                if ok {
                    triples += 1;
                }
            }
        }
    }
    [m, non_edges, non_edges + triples]
}

fn run_check(ctx: &mut Context, check: &Check) -> Result<(bool, Value)> {
    match check {
        Check::Dims {
            complex,
            class,
            expect,
        } => {
            let k = complex.build()?;
            let dims = ctx.racg(&k, *class)?.dims();
            Ok((
                dims == *expect,
                json!({"complex": k.face_lists(), "dims": dims, "expected": expect}),
            ))
        }
        Check::DimAt {
            complex,
            degree,
            expect,
        } => {
            let k = complex.build()?;
            let dim = ctx.racg(&k, *degree)?.generators_of_weight(*degree).len();
            Ok((
                dim == *expect,
                json!({"complex": k.face_lists(), "degree": degree, "dim": dim, "expected": expect}),
            ))
        }
        Check::Basis {
            m,
            edges,
            degree,
            family,
            perms,
            swaps,
            drop_one,
        } => run_basis(ctx, *m, edges, *degree, family, *perms, *swaps, *drop_one),
        Check::CombinatorialDims {
            samples,
            max_m,
            seed,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut mismatches = Vec::new();
            for _ in 0..*samples {
                let m = rand::Rng::gen_range(&mut rng, 2..=*max_m);
                let k = random_complex(&mut rng, m)?;
                let dims = ctx.racg(&k, 3)?.dims();
                let expect = combinatorial_dims(&k);
                if dims != expect {
                    mismatches
                        .push(json!({"complex": k.face_lists(), "dims": dims, "expected": expect}));
                }
            }
            Ok((
                mismatches.is_empty(),
                json!({"samples": samples, "mismatches": mismatches}),
            ))
        }
        Check::RacgPairs { max_m, degree4 } => {
            let mut complexes = 0;
            let mut pairs = 0;
            let mut failures = Vec::new();
            for m in 2..=*max_m {
                for k in all_flag_complexes(m)? {
                    complexes += 1;
                    let r = verify_all_pairs(&k)?;
                    pairs += r.pairs;
                    let bad = if *degree4 {
                        r.degree4_failures
                    } else {
                        r.square_failures
                    };
                    if !bad.is_empty() {
                        failures.push(json!({"complex": k.face_lists(), "pairs": bad}));
                    }
                }
            }
            Ok((
                failures.is_empty(),
                json!({"complexes": complexes, "pairs": pairs, "failures": failures}),
            ))
        }
        Check::GroupRelation {
            complex,
            degree,
            lhs,
            rhs,
        } => {
            let k = complex.build()?;
            let pc = ctx.racg(&k, *degree)?;
            let mut fails = Vec::new();
            for perm in permutations(k.m()) {
                let l: Vec<usize> = lhs.iter().map(|&x| perm[x - 1]).collect();
                let r: Vec<usize> = rhs.iter().map(|&x| perm[x - 1]).collect();
                let w = nested(&l)?.mul(&nested(&r)?.inverse());
                if !express_in(pc, &w, *degree)?.to_gf2().is_zero() {
                    fails.push(json!([l, r]));
                }
            }
            Ok((
                fails.is_empty(),
                json!({"degree": degree, "failures": fails}),
            ))
        }
        Check::LieRelation { m, lhs, rhs } => {
            let mut fails = Vec::new();
            let mut free_distinguishes = true;
            for perm in permutations(*m) {
                let l = vec![lhs.iter().map(|&x| perm[x - 1]).collect::<Vec<_>>()];
                let r = vec![rhs.iter().map(|&x| perm[x - 1]).collect::<Vec<_>>()];
                if !check_derived_relation(*m, &[], &square_relations(*m), &l, &r)? {
                    fails.push(json!([l, r]));
                }
                free_distinguishes &= !check_derived_relation(*m, &[], &[], &l, &r)?;
            }
            Ok((
                fails.is_empty() && free_distinguishes,
                json!({"failures": fails, "distinct_in_free_algebra": free_distinguishes}),
            ))
        }
        Check::LieVsGroup {
            complex,
            dmax,
            equal,
        } => {
            let k = complex.build()?;
            let cmp = compare_with_group(&k, *dmax)?;
            let ok = cmp.iter().all(|c| {
                if *equal {
                    c.kernel_dim == 0
                } else {
                    c.kernel_dim >= 0
                }
            });
            Ok((ok, json!({"complex": k.face_lists(), "comparison": cmp})))
        }
        Check::Identities {
            m,
            trials,
            max_len,
            seed,
            lemma,
        } => {
            let r = fuzz_identities(*m, *trials, *max_len, *seed);
            let fails = if *lemma {
                r.lemma_failures
            } else {
                r.hall_witt_failures
            };
            Ok((
                fails == 0,
                json!({"trials": trials, "seed": seed, "failures": fails}),
            ))
        }
        Check::Congruence {
            kind,
            weights,
            random,
            seed,
        } => run_congruence(ctx, *kind, weights, *random, *seed),
        Check::Structure {
            max_m,
            class,
            samples,
            seed,
        } => {
            let mut complexes = 0;
            let mut failures = Vec::new();
            for m in 1..=*max_m {
                for k in all_flag_complexes(m)? {
                    complexes += 1;
                    let pc = ctx.racg(&k, *class)?;
                    let r = check_racg_structure(pc, *samples, *seed)?;
                    if !r.passed() {
                        failures.push(json!({"complex": k.face_lists(), "report": r}));
                    }
                }
            }
            Ok((
                failures.is_empty(),
                json!({"complexes": complexes, "class": class, "failures": failures}),
            ))
        }
        Check::HomologyAgree { max_m } => {
            let mut complexes = 0;
            let mut failures = Vec::new();
            for m in 1..=*max_m {
                for k in all_complexes(m)? {
                    complexes += 1;
                    for d in 0..=m {
                        let a = k.rmk_homology(d)?;
                        let b = k.cubical_rmk_homology(d)?;
                        if a != b {
                            failures.push(json!({"complex": k.face_lists(), "degree": d, "combinatorial": a, "cubical": b}));
                        }
                    }
                }
            }
            Ok((
                failures.is_empty(),
                json!({"complexes": complexes, "failures": failures}),
            ))
        }
        Check::H1Rank { complex, expect } => {
            let k = complex.build()?;
            let h1 = k.rmk_homology(1)?;
            let gens = k.gscox_generators().len();
            let ok =
                h1.torsion.is_empty() && h1.free_rank == gens && expect.is_none_or(|e| e == gens);
            Ok((
                ok,
                json!({"complex": k.face_lists(), "h1": h1, "generators": gens, "expected": expect}),
            ))
        }
        Check::H1RankAll { max_m } => {
            let mut complexes = 0;
            let mut failures = Vec::new();
            for m in 1..=*max_m {
                for k in all_complexes(m)? {
                    complexes += 1;
                    let h1 = k.rmk_homology(1)?;
                    let gens = k.gscox_generators().len();
                    if !h1.torsion.is_empty() || h1.free_rank != gens {
                        failures
                            .push(json!({"complex": k.face_lists(), "h1": h1, "generators": gens}));
                    }
                }
            }
            Ok((
                failures.is_empty(),
                json!({"complexes": complexes, "failures": failures}),
            ))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_basis(
    ctx: &mut Context,
    m: usize,
    edges: &[(usize, usize)],
    degree: usize,
    family: &[&[usize]],
    perms: Perms,
    swaps: Swaps,
    drop_one: bool,
) -> Result<(bool, Value)> {
    let perm_list: Vec<Vec<usize>> = match perms {
        Perms::Identity => vec![(1..=m).collect()],
        Perms::All => permutations(m),
        Perms::Increasing(pairs) => permutations(m)
            .into_iter()
            .filter(|p| pairs.iter().all(|&(a, b)| p[a - 1] < p[b - 1]))
            .collect(),
    };
    let mut variants = 0;
    let mut failures = Vec::new();
    let mut dims = Vec::new();
    for perm in &perm_list {
        let moved_edges: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| (perm[a - 1], perm[b - 1]))
            .collect();
        let k = flag_complex_of_graph(m, &moved_edges)?;
        let pc = ctx.racg(&k, degree)?;
        let dim = pc.generators_of_weight(degree).len();
        dims.push(dim);
        let base = relabel(family, perm);
        let mut candidates = vec![base.clone()];
        match swaps {
            Swaps::None => {}
            Swaps::AllSubsets => {
                for mask in 1u64..(1u64 << base.len()) {
                    candidates.push(
                        base.iter()
                            .enumerate()
                            .map(|(t, b)| {
                                if mask >> t & 1 == 1 {
                                    swap_first(b)
                                } else {
                                    b.clone()
                                }
                            })
                            .collect(),
                    );
                }
            }
            Swaps::AllAndSingles => {
                if !base.is_empty() {
                    candidates.push(base.iter().map(|b| swap_first(b)).collect());
                }
                for t in 0..base.len() {
                    let mut v = base.clone();
                    v[t] = swap_first(&v[t]);
                    candidates.push(v);
                }
            }
        }
        for cand in &candidates {
            variants += 1;
            if !is_basis(pc, degree, cand)? {
                failures.push(json!({"permutation": perm, "family": cand}));
            }
        }
        if drop_one {
            for t in 0..base.len() {
                let mut short = base.clone();
                short.remove(t);
                variants += 1;
                if is_basis(pc, degree, &short)? {
                    failures.push(
                        json!({"permutation": perm, "dropped": base[t], "still_basis": true}),
                    );
                }
            }
        }
    }
    Ok((
        failures.is_empty(),
        json!({
            "degree": degree,
            "size": family.len(),
            "dims": dims,
            "permutations": perm_list.len(),
            "variants_checked": variants,
            "failures": failures,
        }),
    ))
}

/// Generator words of weight `w` on fresh generators starting at `next`.
fn fresh(w: usize, next: &mut usize) -> Result<FreeWord> {
    let letters: Vec<usize> = (0..w).map(|t| *next + t).collect();
    *next += w;
    if w == 1 {
        Ok(FreeWord::generator(letters[0]))
    } else {
        nested(&letters)
    }
}

fn random_homogeneous(rng: &mut ChaCha8Rng, m: usize, w: usize) -> Result<FreeWord> {
    let mut word = random_word(rng, m, 5);
    while word.is_identity() {
        word = random_word(rng, m, 5);
    }
    if w == 1 {
        return Ok(word);
    }
    let parts = (0..w)
        .map(|_| {
            let mut x = random_word(rng, m, 4);
            while x.is_identity() {
                x = random_word(rng, m, 4);
            }
            x
        })
        .collect::<Vec<_>>();
    simple_nested(&parts)
}

fn run_congruence(
    ctx: &mut Context,
    kind: Subst,
    weights: &[(usize, usize, usize)],
    random: usize,
    seed: u64,
) -> Result<(bool, Value)> {
    let mut cases = Vec::new();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &wt in weights {
        let modulus = kind.modulus(wt);
        let mut next = 1;
        let a = fresh(wt.0, &mut next)?;
        let b = fresh(wt.1, &mut next)?;
        let c = fresh(wt.2, &mut next)?;
        let m = next - 1;
        let mut triples = vec![(a, b, c)];
        for _ in 0..random {
            triples.push((
                random_homogeneous(&mut rng, 3, wt.0)?,
                random_homogeneous(&mut rng, 3, wt.1)?,
                random_homogeneous(&mut rng, 3, wt.2)?,
            ));
        }
        for (t, (a, b, c)) in triples.iter().enumerate() {
            let rank = if t == 0 { m } else { 3 };
            let pc = ctx.free(rank, modulus - 1)?;
            let (lhs, rhs) = kind.sides(a, b, c);
            if !verify_congruence_pc(pc, &lhs, &rhs)? {
                failures.push(json!({"weights": wt, "a": a.to_string(), "b": b.to_string(), "c": c.to_string()}));
            }
        }
        cases.push(json!({"weights": wt, "modulus": modulus, "triples": triples.len()}));
    }
    Ok((
        failures.is_empty(),
        json!({"cases": cases, "failures": failures}),
    ))
}

/// Convenience used by the CLI: `lcs_dims` with caps from the environment.
pub fn dims(k: &SimplicialComplex, class: usize) -> Result<Vec<usize>> {
    nq::lcs_dims(k, class)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let ids = claim_ids();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
    }

    #[test]
    fn unknown_case_is_an_error() {
        assert!(run_all(Some("no-such-claim")).is_err());
    }

    #[test]
    fn symmetry_examples() {
        let k = SimplicialComplex::discrete(3).unwrap();
        let fam: Vec<Vec<usize>> = claims::table()
            .iter()
            .find(|c| c.id == "free3-L4")
            .map(|c| match &c.checks[0] {
                Check::Basis { family, .. } => family.iter().map(|b| b.to_vec()).collect(),
                _ => unreachable!(),
            })
            .unwrap();
        assert!(symmetry_check(&k, &fam, &[2, 1, 3], 4).unwrap());
        let edge = SimplicialComplex::new(3, &[vec![1, 2]]).unwrap();
        assert!(symmetry_check(&edge, &fam, &[1, 3, 2], 4).is_err());
    }

    #[test]
    fn small_claims_pass() {
        for id in [
            "free3-L4",
            "commcox3",
            "numbergens3",
            "eq-square",
            "obrcom",
            "cor-triple-1",
            "cor-triple-2",
            "cor-obrcom",
        ] {
            let r = run_all(Some(id)).unwrap();
            assert!(
                r[0].passed,
                "{id}: {}",
                serde_json::to_string(&r[0].witness).unwrap()
            );
        }
    }
}
