//! Nilpotent quotients of finitely presented groups.
//!
//! [`nilpotent_quotient`] builds a weighted consistent pc-presentation of
//! `G/γ_{c+1}(G)` one class at a time. The weight-`k` generators form a basis
//! of `γ_k/γ_{k+1}`, so coordinates of group elements in `L^k(G)` are read
//! off collected words.

mod presentation;
mod quotient;

pub use presentation::{Definition, PcPresentation, PcSpec, PcWord};
pub use quotient::{image_of, nilpotent_quotient, nilpotent_quotient_with_caps, GroupPresentation};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::{AbelianInvariants, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactlinalg::{BitVec, Gf2Matrix};
use crate::freegroup::{random_word, FreeWord};

pub const MAX_CLASS: usize = 5;
pub const MAX_GROUP_GENERATORS: usize = 5;
pub const MAX_PC_GENERATORS: usize = 512;
pub const CLASS_ENV: &str = "RACG_LCS_MAX_CLASS";

/// Resource caps. [`Caps::from_env`] may only lower the defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_class: usize,
    pub max_group_generators: usize,
    pub max_pc_generators: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_class: MAX_CLASS,
            max_group_generators: MAX_GROUP_GENERATORS,
            max_pc_generators: MAX_PC_GENERATORS,
        }
    }
}

impl Caps {
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Some(c) = std::env::var(CLASS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            caps.max_class = caps.max_class.min(c);
        }
        caps
    }

    pub fn check(&self, generators: usize, class: usize) -> Result<()> {
        if class > self.max_class {
            return Err(Error::CapExceeded(format!(
                "class {class} exceeds the cap of {}",
                self.max_class
            )));
        }
        if generators > self.max_group_generators {
            return Err(Error::CapExceeded(format!(
                "{generators} group generators exceed the cap of {}",
                self.max_group_generators
            )));
        }
        Ok(())
    }
}

/// Class-`c` quotient of `RC_K`.
pub fn racg_quotient(k: &SimplicialComplex, class: usize) -> Result<PcPresentation> {
    nilpotent_quotient(&GroupPresentation::racg(k), class)
}

/// Class-`c` quotient of the free group of rank `m`.
pub fn free_quotient(m: usize, class: usize) -> Result<PcPresentation> {
    nilpotent_quotient(&GroupPresentation::free(m), class)
}

/// `dim L^k(RC_K)` over GF(2) for `k = 1..=c`.
pub fn lcs_dims(k: &SimplicialComplex, class: usize) -> Result<Vec<usize>> {
    Ok(racg_quotient(k, class)?.dims())
}

/// Element of `L^k(G)` in the basis of weight-`k` pc-generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedElement {
    pub degree: usize,
    pub coords: Vec<i64>,
}

impl GradedElement {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }

    /// Coordinates reduced mod 2.
    pub fn to_gf2(&self) -> BitVec {
        let bits: Vec<bool> = self.coords.iter().map(|x| x.rem_euclid(2) == 1).collect();
        BitVec::from_bools(&bits)
    }
}

/// Outcome of [`express`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Expressed {
    Element(GradedElement),
    /// The word has a nonzero component in the given weight below `k`.
    NotInGamma {
        lowest_weight: usize,
    },
}

/// Coordinates of the class of `w` in `L^k`, if `w ∈ γ_k`.
pub fn express(pc: &PcPresentation, w: &FreeWord, k: usize) -> Result<Expressed> {
    if k == 0 || k > pc.class() {
        return Err(Error::InvalidArgument(format!(
            "degree {k} outside 1..={} of the presentation",
            pc.class()
        )));
    }
    let exps = quotient::evaluate(pc, w)?;
    if let Some(g) = exps.iter().position(|&e| e != 0) {
        if pc.weights()[g] < k {
            return Ok(Expressed::NotInGamma {
                lowest_weight: pc.weights()[g],
            });
        }
    }
    let range = pc.generators_of_weight(k);
    Ok(Expressed::Element(GradedElement {
        degree: k,
        coords: exps[range].to_vec(),
    }))
}

/// Like [`express`] but treating "not in γ_k" as an error.
pub fn express_in(pc: &PcPresentation, w: &FreeWord, k: usize) -> Result<GradedElement> {
    match express(pc, w, k)? {
        Expressed::Element(e) => Ok(e),
        Expressed::NotInGamma { lowest_weight } => Err(Error::InvalidArgument(format!(
            "{w} is not in γ_{k} (nonzero in weight {lowest_weight})"
        ))),
    }
}

/// GF(2) rank of the claimed elements of `L^k`.
pub fn claimed_rank(pc: &PcPresentation, k: usize, claimed: &[FreeWord]) -> Result<usize> {
    let dim = pc.generators_of_weight(k).len();
    let rows = claimed
        .iter()
        .map(|w| Ok(express_in(pc, w, k)?.to_gf2()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Gf2Matrix::from_rows(dim, rows)?.rank())
}

/// True iff the claimed words form a basis of `L^k` over GF(2).
pub fn verify_basis_claim_pc(pc: &PcPresentation, k: usize, claimed: &[FreeWord]) -> Result<bool> {
    let dim = pc.generators_of_weight(k).len();
    Ok(claimed.len() == dim && claimed_rank(pc, k, claimed)? == dim)
}

/// Computes `RC_K / γ_{k+1}` and checks the basis claim in degree `k`.
pub fn verify_basis_claim(kx: &SimplicialComplex, k: usize, claimed: &[FreeWord]) -> Result<bool> {
    let pc = racg_quotient(kx, k)?;
    verify_basis_claim_pc(&pc, k, claimed)
}

/// True iff `lhs ≡ rhs mod γ_modulus` in a free group.
pub fn verify_congruence(lhs: &FreeWord, rhs: &FreeWord, modulus: usize) -> Result<bool> {
    if modulus <= 1 {
        return Ok(true);
    }
    let m = lhs.max_generator().max(rhs.max_generator()).max(1);
    let pc = free_quotient(m, modulus - 1)?;
    verify_congruence_pc(&pc, lhs, rhs)
}

/// Same as [`verify_congruence`] with the modulus `class + 1` of a prepared
/// free-group quotient.
pub fn verify_congruence_pc(pc: &PcPresentation, lhs: &FreeWord, rhs: &FreeWord) -> Result<bool> {
    Ok(image_of(pc, &lhs.mul(&rhs.inverse()))?.is_empty())
}

/// Structure constants of `L(G)` over GF(2): `table[p][q]` is the class of
/// `[a_p, a_q]` in weight `wt(p) + wt(q)` for every pair with weight sum at
/// most the class.
#[derive(Debug, Clone)]
pub struct BracketTable {
    pub weights: Vec<usize>,
    pub offsets: Vec<usize>,
    table: Vec<Vec<Option<BitVec>>>,
}

impl BracketTable {
    pub fn new(pc: &PcPresentation) -> Result<Self> {
        let n = pc.len();
        let c = pc.class();
        let w = pc.weights().to_vec();
        let offsets = (0..n)
            .map(|g| g - pc.generators_of_weight(w[g]).start)
            .collect();
        let mut table = vec![vec![None; n]; n];
        for p in 0..n {
            for q in 0..n {
                let d = w[p] + w[q];
                if d > c {
                    continue;
                }
                let ip = pc.inverse(&vec![(p, 1)])?;
                let iq = pc.inverse(&vec![(q, 1)])?;
                let mut letters = ip;
                letters.extend(iq);
                letters.push((p, 1));
                letters.push((q, 1));
                let exps = pc.dense(&pc.collect(&letters)?);
                let range = pc.generators_of_weight(d);
                if exps[..range.start].iter().any(|&e| e != 0) {
                    return Err(Error::Internal(format!(
                        "[a{}, a{}] is not in weight {d}",
                        p + 1,
                        q + 1
                    )));
                }
                let bits: Vec<bool> = exps[range].iter().map(|e| e.rem_euclid(2) == 1).collect();
                table[p][q] = Some(BitVec::from_bools(&bits));
            }
        }
        Ok(BracketTable {
            weights: w,
            offsets,
            table,
        })
    }

    /// Bracket of basis elements, `None` past the class.
    pub fn basis_bracket(&self, p: usize, q: usize) -> Option<&BitVec> {
        self.table[p][q].as_ref()
    }

    /// Bilinear extension to homogeneous elements of degrees `a` and `b`,
    /// given by their generator index lists.
    pub fn bracket(&self, x: &[usize], y: &[usize], dim: usize) -> Option<BitVec> {
        let mut out = BitVec::zeros(dim);
        for &p in x {
            for &q in y {
                out.xor_assign(self.table[p][q].as_ref()?);
            }
        }
        Some(out)
    }
}

/// Results of the structural checks on a RACG quotient.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub consistency_failures: Vec<String>,
    pub non_elementary_factors: Vec<usize>,
    pub alternation_failures: usize,
    pub jacobi_failures: usize,
    pub square_failures: usize,
    pub antisymmetry_failures: usize,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.consistency_failures.is_empty()
            && self.non_elementary_factors.is_empty()
            && self.alternation_failures == 0
            && self.jacobi_failures == 0
            && self.square_failures == 0
            && self.antisymmetry_failures == 0
    }
}

/// Indices of pc-generators set in a GF(2) vector of weight `k`.
fn support(pc: &PcPresentation, k: usize, v: &BitVec) -> Vec<usize> {
    let start = pc.generators_of_weight(k).start;
    v.ones().map(|i| start + i).collect()
}

/// Structural checks on a RACG quotient: full consistency battery, every
/// factor elementary abelian of exponent 2, alternation and Jacobi in the
/// structure constants, squares of random words descending, and
/// `(a,b,c)(b,a,c) ∈ γ_{deg+1}` for sampled homogeneous `a, b, c`.
pub fn check_racg_structure(
    pc: &PcPresentation,
    samples: usize,
    seed: u64,
) -> Result<StructureReport> {
    let mut report = StructureReport {
        consistency_failures: pc.consistency_failures(false)?,
        ..Default::default()
    };
    for (k, inv) in pc.invariants().iter().enumerate() {
        if inv.free_rank != 0 || inv.torsion.iter().any(|&t| t != 2) {
            report.non_elementary_factors.push(k + 1);
        }
    }
    let c = pc.class();
    let table = BracketTable::new(pc)?;
    let n = pc.len();
    let w = pc.weights();
    for p in 0..n {
        if 2 * w[p] <= c && !table.basis_bracket(p, p).expect("in range").is_zero() {
            report.alternation_failures += 1;
        }
    }
    // Jacobi on basis triples: [[x,y],z] + [[y,z],x] + [[z,x],y] = 0.
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let d = w[x] + w[y] + w[z];
                if d > c {
                    continue;
                }
                let dim = pc.generators_of_weight(d).len();
                let mut sum = BitVec::zeros(dim);
                for (a, b, e) in [(x, y, z), (y, z, x), (z, x, y)] {
                    let ab = table.basis_bracket(a, b).expect("in range");
                    let ab = support(pc, w[a] + w[b], ab);
                    sum.xor_assign(&table.bracket(&ab, &[e], dim).expect("in range"));
                }
                if !sum.is_zero() {
                    report.jacobi_failures += 1;
                }
            }
        }
    }
    let m = pc.images().len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let word = random_word(&mut rng, m, 12);
        let exps = quotient::evaluate(pc, &word)?;
        let Some(g) = exps.iter().position(|&e| e != 0) else {
            continue;
        };
        let k = w[g];
        if k >= c {
            continue;
        }
        match express(pc, &word.pow(2), k + 1)? {
            Expressed::Element(_) => {}
            Expressed::NotInGamma { .. } => report.square_failures += 1,
        }
    }
    // Homogeneous samples: random nested commutators of generators.
    for _ in 0..samples {
        let mut parts = Vec::new();
        let mut total = 0;
        for _ in 0..3 {
            let len = 1 + (rand::Rng::gen_range(&mut rng, 0..2usize));
            let letters: Vec<FreeWord> = (0..len)
                .map(|_| FreeWord::generator(rand::Rng::gen_range(&mut rng, 1..=m)))
                .collect();
            total += len;
            parts.push(if len == 1 {
                letters[0].clone()
            } else {
                crate::freegroup::simple_nested(&letters)?
            });
        }
        if total > c {
            continue;
        }
        let (a, b, cc) = (&parts[0], &parts[1], &parts[2]);
        let abc = crate::freegroup::simple_nested(&[a.clone(), b.clone(), cc.clone()])?;
        let bac = crate::freegroup::simple_nested(&[b.clone(), a.clone(), cc.clone()])?;
        match express(pc, &abc.mul(&bac), total)? {
            Expressed::Element(e) if e.to_gf2().is_zero() => {}
            _ => report.antisymmetry_failures += 1,
        }
    }
    Ok(report)
}

/// Invariants of `γ_k/γ_{k+1}` as plain lists: torsion ascending then one `0`
/// per free summand.
pub fn invariant_lists(pc: &PcPresentation) -> Vec<Vec<u64>> {
    pc.invariants().iter().map(invariant_list).collect()
}

pub fn invariant_list(inv: &AbelianInvariants) -> Vec<u64> {
    let mut v = inv.torsion.clone();
    v.sort_unstable();
    v.extend(std::iter::repeat_n(0, inv.free_rank));
    v
}

#[cfg(test)]
mod tests;
