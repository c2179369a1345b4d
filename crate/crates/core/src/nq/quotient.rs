use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::presentation::{invert_letters, to_word, Definition, PcPresentation, PcWord};
use super::Caps;
use crate::complex::{AbelianInvariants, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactlinalg::{elementary_divisors, Lattice};
use crate::freegroup::{commutator, FreeWord};

/// Finitely presented group `⟨g_1..g_m | relators⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<FreeWord>,
}

impl GroupPresentation {
    pub fn free(m: usize) -> Self {
        GroupPresentation {
            generators: m,
            relators: Vec::new(),
        }
    }

    /// `RC_K`: `g_i² = 1` and `(g_i, g_j) = 1` for every edge of `K`.
    pub fn racg(k: &SimplicialComplex) -> Self {
        let mut relators: Vec<FreeWord> =
            (1..=k.m()).map(|i| FreeWord::generator(i).pow(2)).collect();
        for (i, j) in k.edges() {
            relators.push(commutator(&FreeWord::generator(i), &FreeWord::generator(j)));
        }
        GroupPresentation {
            generators: k.m(),
            relators,
        }
    }

    fn check(&self) -> Result<()> {
        for r in &self.relators {
            if r.max_generator() > self.generators {
                return Err(Error::GeneratorOutOfRange {
                    index: r.max_generator(),
                    m: self.generators,
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tail {
    Image(usize),
    Power(usize),
    Comm(usize, usize),
}

/// Computes a consistent weighted pc-presentation of `G/γ_{c+1}(G)`.
pub fn nilpotent_quotient(pres: &GroupPresentation, class: usize) -> Result<PcPresentation> {
    nilpotent_quotient_with_caps(pres, class, &Caps::from_env())
}

pub fn nilpotent_quotient_with_caps(
    pres: &GroupPresentation,
    class: usize,
    caps: &Caps,
) -> Result<PcPresentation> {
    if class == 0 {
        return Err(Error::InvalidArgument("class must be at least 1".into()));
    }
    caps.check(pres.generators, class)?;
    pres.check()?;
    let mut pc = PcPresentation::assemble(
        Vec::new(),
        Vec::new(),
        Vec::new(),
        Vec::new(),
        Vec::new(),
        vec![Vec::new(); pres.generators],
        0,
        Vec::new(),
        0,
    )?;
    for c in 1..=class {
        pc = next_class(&pc, pres, c, caps)?;
    }
    Ok(pc)
}

/// Lifts a class-(c−1) presentation to class c.
fn next_class(
    old: &PcPresentation,
    pres: &GroupPresentation,
    c: usize,
    caps: &Caps,
) -> Result<PcPresentation> {
    let n = old.len();
    let m = pres.generators;
    let is_def = |d: Definition| old.definitions.contains(&Some(d));

    let mut plain = Vec::new();
    let mut candidates = Vec::new();
    for s in 0..m {
        if !is_def(Definition::Generator(s)) {
            if c == 1 {
                candidates.push(Tail::Image(s));
            } else {
                plain.push(Tail::Image(s));
            }
        }
    }
    for i in 0..n {
        if old.order[i].is_some() {
            plain.push(Tail::Power(i));
        }
    }
    for j in 0..n {
        for i in 0..j {
            if old.weight[i] + old.weight[j] > c || is_def(Definition::Commutator { j, i }) {
                continue;
            }
            if old.weight[j] == c - 1 && old.weight[i] == 1 {
                candidates.push(Tail::Comm(j, i));
            } else {
                plain.push(Tail::Comm(j, i));
            }
        }
    }
    let n_plain = plain.len();
    let tails: Vec<Tail> = plain.into_iter().chain(candidates).collect();
    let nt = tails.len();

    // Presentation with every tail as a new central generator of infinite order.
    let mut weight = old.weight.clone();
    weight.extend(std::iter::repeat_n(c, nt));
    let mut order = old.order.clone();
    order.extend(std::iter::repeat_n(None, nt));
    let mut power = old.power.clone();
    power.extend(std::iter::repeat_n(Vec::new(), nt));
    let mut comm = old.comm.clone();
    for j in n..n + nt {
        comm.push(vec![Vec::new(); j]);
    }
    let mut images = old.images.clone();
    for (t, tail) in tails.iter().enumerate() {
        let g = n + t;
        match *tail {
            Tail::Image(s) => images[s].push((g, 1)),
            Tail::Power(i) => power[i].push((g, 1)),
            Tail::Comm(j, i) => comm[j][i].push((g, 1)),
        }
    }
    let mut definitions = old.definitions.clone();
    definitions.extend(std::iter::repeat_n(None, nt));
    let ext = PcPresentation::assemble(
        weight,
        order,
        power,
        comm,
        definitions,
        images,
        c,
        Vec::new(),
        n,
    )?;

    let mut lattice = Lattice::new(nt);
    for test in ext.consistency_tests(true)? {
        if test.left[..n] != test.right[..n] {
            return Err(Error::Internal(format!(
                "class {} presentation inconsistent at test {}",
                c - 1,
                test.label
            )));
        }
        let diff: Vec<i64> = (n..n + nt).map(|g| test.left[g] - test.right[g]).collect();
        lattice.add_dense(&diff);
    }
    for r in &pres.relators {
        let image = evaluate(&ext, r)?;
        if image[..n].iter().any(|&e| e != 0) {
            return Err(Error::Internal(format!(
                "relator {r} nontrivial below class {c}"
            )));
        }
        lattice.add_dense(&image[n..]);
    }
    lattice.reduce();

    // Classify the tail columns.
    let mut survivor_of = vec![None; nt];
    let mut survivors = Vec::new();
    for t in 0..nt {
        let unit_pivot = lattice.pivot_row(t).is_some_and(|row| row[0].1.is_one());
        if !unit_pivot {
            if t < n_plain {
                return Err(Error::Internal(format!(
                    "class {c}: tail {:?} is not determined by definitions",
                    tails[t]
                )));
            }
            survivor_of[t] = Some(survivors.len());
            survivors.push(t);
        }
    }
    let ns = survivors.len();
    if n + ns > caps.max_pc_generators {
        return Err(Error::CapExceeded(format!(
            "{} pc-generators at class {c} exceeds the cap of {}",
            n + ns,
            caps.max_pc_generators
        )));
    }

    let to_i64 = |x: &BigInt| {
        x.to_i64()
            .ok_or_else(|| Error::CapExceeded("tail coefficient exceeds 64 bits".into()))
    };
    // Relation row of column t as "t = Σ coeffs over survivors" (negated rest).
    let rest = |t: usize| -> Result<Vec<i64>> {
        let mut v = vec![0i64; ns];
        if let Some(row) = lattice.pivot_row(t) {
            for (col, x) in &row[1..] {
                let k = survivor_of[*col].ok_or_else(|| {
                    Error::Internal("reduced row touches an eliminated column".into())
                })?;
                v[k] = -to_i64(x)?;
            }
        }
        Ok(v)
    };
    let mut new_order = vec![None; ns];
    let mut new_power_raw = vec![vec![0i64; ns]; ns];
    for (k, &t) in survivors.iter().enumerate() {
        if let Some(row) = lattice.pivot_row(t) {
            new_order[k] = Some(to_i64(&row[0].1)?);
            new_power_raw[k] = rest(t)?;
        }
    }
    let normalize = |mut v: Vec<i64>, from: usize| -> Vec<i64> {
        for k in from..ns {
            if let Some(d) = new_order[k] {
                let q = v[k].div_euclid(d);
                if q != 0 {
                    v[k] -= q * d;
                    for l in k + 1..ns {
                        v[l] += q * new_power_raw[k][l];
                    }
                }
            }
        }
        v
    };
    let section = |t: usize| -> Result<PcWord> {
        let v = match survivor_of[t] {
            Some(k) => {
                let mut v = vec![0i64; ns];
                v[k] = 1;
                v
            }
            None => normalize(rest(t)?, 0),
        };
        Ok(v.iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(k, &e)| (n + k, e))
            .collect())
    };

    let mut weight = old.weight.clone();
    weight.extend(std::iter::repeat_n(c, ns));
    let mut order = old.order.clone();
    order.extend(new_order.iter().copied());
    let mut power = old.power.clone();
    for k in 0..ns {
        let v = normalize(new_power_raw[k].clone(), k + 1);
        power.push(
            v.iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(l, &e)| (n + l, e))
                .collect(),
        );
    }
    let mut comm = old.comm.clone();
    for j in n..n + ns {
        comm.push(vec![Vec::new(); j]);
    }
    let mut images = old.images.clone();
    let mut definitions = old.definitions.clone();
    for (t, tail) in tails.iter().enumerate() {
        let w = section(t)?;
        match *tail {
            Tail::Image(s) => images[s].extend(w),
            Tail::Power(i) => power[i].extend(w),
            Tail::Comm(j, i) => comm[j][i].extend(w),
        }
    }
    for &t in &survivors {
        definitions.push(Some(match tails[t] {
            Tail::Image(s) => Definition::Generator(s),
            Tail::Comm(j, i) => Definition::Commutator { j, i },
            Tail::Power(_) => unreachable!("power tails are never candidates"),
        }));
    }

    let torsion_rows: Vec<Vec<(usize, BigInt)>> = survivors
        .iter()
        .filter_map(|&t| lattice.pivot_row(t))
        .map(|row| {
            row.iter()
                .map(|(col, x)| (survivor_of[*col].expect("survivor column"), x.clone()))
                .collect()
        })
        .collect();
    let mut invariants = old.invariants.clone();
    invariants.push(AbelianInvariants::from_quotient(
        ns,
        &elementary_divisors(ns, torsion_rows),
    ));

    PcPresentation::assemble(
        weight,
        order,
        power,
        comm,
        definitions,
        images,
        c,
        invariants,
        n,
    )
}

/// Collected image of a group word as a dense exponent vector.
pub(crate) fn evaluate(pc: &PcPresentation, w: &FreeWord) -> Result<Vec<i64>> {
    let mut exps = vec![0i64; pc.len()];
    for &l in w.letters() {
        let s = l.unsigned_abs() as usize - 1;
        let image = pc.images.get(s).ok_or(Error::GeneratorOutOfRange {
            index: s + 1,
            m: pc.images.len(),
        })?;
        if l > 0 {
            pc.collect_letters(&mut exps, image)?;
        } else {
            pc.collect_letters(&mut exps, &invert_letters(image))?;
        }
    }
    Ok(exps)
}

/// Normal word of the image of a group word.
pub fn image_of(pc: &PcPresentation, w: &FreeWord) -> Result<PcWord> {
    Ok(to_word(&evaluate(pc, w)?))
}
