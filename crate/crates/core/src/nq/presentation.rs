use std::fmt;

use serde::Serialize;

use crate::complex::AbelianInvariants;
use crate::error::{Error, Result};

/// Normal word `a_{i_1}^{e_1} … a_{i_r}^{e_r}` with `i_1 < … < i_r` (0-based
/// generator indices) and nonzero exponents, reduced modulo the relative order
/// of each finite-order generator.
pub type PcWord = Vec<(usize, i64)>;

/// How a pc-generator entered the presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Definition {
    /// Image of group generator `g_{s+1}` (0-based `s`).
    Generator(usize),
    /// `[a_j, a_i] = a_new` with `a_i` of weight 1.
    Commutator { j: usize, i: usize },
}

/// Weighted consistent polycyclic presentation of a nilpotent group.
///
/// Relations:
/// * `a_i^{o_i} = power[i]` for finite relative orders,
/// * `a_j^{a_i} = a_j · comm[j][i]` (that is, `[a_j, a_i] = comm[j][i]`) for `j > i`.
///
/// Generators at index `central_from` and beyond are central.
#[derive(Debug, Clone)]
pub struct PcPresentation {
    pub(crate) weight: Vec<usize>,
    pub(crate) order: Vec<Option<i64>>,
    pub(crate) power: Vec<PcWord>,
    pub(crate) comm: Vec<Vec<PcWord>>,
    pub(crate) definitions: Vec<Option<Definition>>,
    pub(crate) images: Vec<PcWord>,
    pub(crate) class: usize,
    pub(crate) invariants: Vec<AbelianInvariants>,
    pub(crate) central_from: usize,
    // a_j^{a_i} and, for infinite a_i, a_j^{a_i^{-1}}; only for j < central_from
    conj: Vec<Vec<PcWord>>,
    conj_inv: Vec<Vec<Option<PcWord>>>,
}

/// Raw relations used to build a presentation by hand.
#[derive(Debug, Clone, Default)]
pub struct PcSpec {
    pub weight: Vec<usize>,
    pub order: Vec<Option<i64>>,
    pub power: Vec<PcWord>,
    /// `comm[j][i]` for `i < j`; missing entries are trivial.
    pub comm: Vec<Vec<PcWord>>,
}

impl PcPresentation {
    /// Builds a presentation from explicit relations. Consistency is not
    /// checked here; see [`PcPresentation::consistency_failures`].
    pub fn from_spec(spec: PcSpec) -> Result<Self> {
        let n = spec.weight.len();
        if spec.order.len() != n {
            return Err(Error::DimensionMismatch("orders vs weights".into()));
        }
        let mut power = spec.power;
        power.resize(n, Vec::new());
        let mut comm = spec.comm;
        comm.resize(n, Vec::new());
        for (j, row) in comm.iter_mut().enumerate() {
            row.resize(j, Vec::new());
        }
        let class = spec.weight.iter().copied().max().unwrap_or(0);
        let mut p = PcPresentation {
            weight: spec.weight,
            order: spec.order,
            power,
            comm,
            definitions: vec![None; n],
            images: Vec::new(),
            class,
            invariants: Vec::new(),
            central_from: n,
            conj: Vec::new(),
            conj_inv: Vec::new(),
        };
        p.validate()?;
        p.prepare()?;
        Ok(p)
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble(
        weight: Vec<usize>,
        order: Vec<Option<i64>>,
        power: Vec<PcWord>,
        comm: Vec<Vec<PcWord>>,
        definitions: Vec<Option<Definition>>,
        images: Vec<PcWord>,
        class: usize,
        invariants: Vec<AbelianInvariants>,
        central_from: usize,
    ) -> Result<Self> {
        let mut p = PcPresentation {
            weight,
            order,
            power,
            comm,
            definitions,
            images,
            class,
            invariants,
            central_from,
            conj: Vec::new(),
            conj_inv: Vec::new(),
        };
        p.validate()?;
        p.prepare()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let n = self.len();
        let normal = |w: &PcWord, above: usize| {
            w.windows(2).all(|p| p[0].0 < p[1].0)
                && w.iter().all(|&(g, e)| g > above && g < n && e != 0)
        };
        for i in 0..n {
            if let Some(o) = self.order[i] {
                if o < 2 {
                    return Err(Error::InvalidArgument(format!("relative order {o} < 2")));
                }
                if !normal(&self.power[i], i) {
                    return Err(Error::InvalidArgument(format!(
                        "power relation of a{}",
                        i + 1
                    )));
                }
            } else if !self.power[i].is_empty() {
                return Err(Error::InvalidArgument(format!(
                    "power relation on infinite generator a{}",
                    i + 1
                )));
            }
            for j in 0..i {
                if !normal(&self.comm[i][j], i) {
                    return Err(Error::InvalidArgument(format!(
                        "commutator relation [a{}, a{}] is not a normal word in later generators",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        if self.weight.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidArgument(
                "weights must be nondecreasing".into(),
            ));
        }
        Ok(())
    }

    /// Fills the conjugation tables.
    fn prepare(&mut self) -> Result<()> {
        let n = self.len();
        let cf = self.central_from;
        self.conj = (0..cf)
            .map(|j| {
                (0..j)
                    .map(|i| {
                        let mut w = vec![(j, 1)];
                        w.extend(self.comm[j][i].iter().copied());
                        w
                    })
                    .collect()
            })
            .collect();
        self.conj_inv = (0..cf).map(|j| vec![None; j]).collect();
        // a_j^{a_i^{-1}} = a_j · (φ⁻¹(comm[j][i]))⁻¹ where φ = conjugation by a_i.
        for i in (0..n.min(cf)).rev() {
            if self.order[i].is_some() {
                continue;
            }
            for j in (i + 1..cf).rev() {
                let mut image = vec![0i64; n];
                for &(g, e) in &self.comm[j][i] {
                    let w = self.phi_inv(g, i);
                    let letters = if e > 0 { w } else { invert_letters(&w) };
                    for _ in 0..e.unsigned_abs() {
                        self.collect_letters(&mut image, &letters)?;
                    }
                }
                let inv = invert_letters(&to_word(&image));
                let mut out = vec![0i64; n];
                out[j] = 1;
                self.collect_letters(&mut out, &inv)?;
                self.conj_inv[j][i] = Some(to_word(&out));
            }
        }
        Ok(())
    }

    fn phi_inv(&self, g: usize, i: usize) -> PcWord {
        if g >= self.central_from {
            vec![(g, 1)]
        } else {
            self.conj_inv[g][i]
                .clone()
                .expect("computed in decreasing order")
        }
    }

    pub fn len(&self) -> usize {
        self.weight.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weight.is_empty()
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn weights(&self) -> &[usize] {
        &self.weight
    }

    pub fn relative_orders(&self) -> &[Option<i64>] {
        &self.order
    }

    pub fn power_relation(&self, i: usize) -> &PcWord {
        &self.power[i]
    }

    /// Right-hand side of `[a_j, a_i]` for `j > i`.
    pub fn commutator_relation(&self, j: usize, i: usize) -> &PcWord {
        &self.comm[j][i]
    }

    pub fn definitions(&self) -> &[Option<Definition>] {
        &self.definitions
    }

    /// Images of the group generators as normal words.
    pub fn images(&self) -> &[PcWord] {
        &self.images
    }

    /// Abelian invariants of `γ_k/γ_{k+1}` for `k = 1..=class`.
    pub fn invariants(&self) -> &[AbelianInvariants] {
        &self.invariants
    }

    /// Indices of the generators of weight `k`.
    pub fn generators_of_weight(&self, k: usize) -> std::ops::Range<usize> {
        let start = self.weight.partition_point(|&w| w < k);
        let end = self.weight.partition_point(|&w| w <= k);
        start..end
    }

    /// Number of generators per weight `1..=class`.
    pub fn dims(&self) -> Vec<usize> {
        (1..=self.class)
            .map(|k| self.generators_of_weight(k).len())
            .collect()
    }

    /// Collects an arbitrary word in pc-generators (letters may repeat and
    /// carry any nonzero exponent) to its normal word.
    pub fn collect(&self, letters: &[(usize, i64)]) -> Result<PcWord> {
        let mut exps = vec![0i64; self.len()];
        self.collect_letters(&mut exps, letters)?;
        Ok(to_word(&exps))
    }

    /// Multiplies the normal element held in `exps` by `letters` on the right.
    pub fn collect_letters(&self, exps: &mut [i64], letters: &[(usize, i64)]) -> Result<()> {
        let n = self.len();
        if exps.len() != n {
            return Err(Error::DimensionMismatch("exponent vector length".into()));
        }
        if let Some(&(g, _)) = letters.iter().find(|(g, _)| *g >= n) {
            return Err(Error::GeneratorOutOfRange { index: g + 1, m: n });
        }
        let cf = self.central_from;
        let mut stack: Vec<(usize, i64)> = letters.iter().rev().copied().collect();
        let mut steps: u64 = 0;
        while let Some((g, mut e)) = stack.pop() {
            steps += 1;
            if steps > 50_000_000 {
                return Err(Error::CapExceeded("collection step limit".into()));
            }
            if e == 0 {
                continue;
            }
            if let Some(o) = self.order[g] {
                let q = e.div_euclid(o);
                e = e.rem_euclid(o);
                if q != 0 {
                    push_power(&mut stack, &self.power[g], q);
                }
                if e == 0 {
                    continue;
                }
            }
            let suffix_empty = g + 1 >= cf || exps[g + 1..cf].iter().all(|&x| x == 0);
            if g >= cf || suffix_empty {
                exps[g] += e;
                if let Some(o) = self.order[g] {
                    if exps[g] >= o {
                        exps[g] -= o;
                        push_power(&mut stack, &self.power[g], 1);
                    }
                }
                continue;
            }
            // One unit of a_g past the non-central suffix.
            let s = e.signum();
            if e != s {
                stack.push((g, e - s));
            }
            let mut suffix = Vec::new();
            for (l, x) in exps.iter_mut().enumerate().take(cf).skip(g + 1) {
                if *x != 0 {
                    suffix.push((l, std::mem::take(x)));
                }
            }
            for &(l, x) in suffix.iter().rev() {
                let c = if s > 0 {
                    &self.conj[l][g]
                } else {
                    self.conj_inv[l][g].as_ref().ok_or_else(|| {
                        Error::Internal(format!(
                            "missing inverse conjugate a{}^(a{}^-1)",
                            l + 1,
                            g + 1
                        ))
                    })?
                };
                push_power(&mut stack, c, x);
            }
            exps[g] += s;
            if let Some(o) = self.order[g] {
                if exps[g] >= o {
                    exps[g] -= o;
                    push_power(&mut stack, &self.power[g], 1);
                }
            }
        }
        Ok(())
    }

    /// Normal word of `w^{-1}`.
    pub fn inverse(&self, w: &PcWord) -> Result<PcWord> {
        self.collect(&invert_letters(w))
    }

    pub fn multiply(&self, a: &PcWord, b: &PcWord) -> Result<PcWord> {
        let mut exps = self.dense(a);
        self.collect_letters(&mut exps, b)?;
        Ok(to_word(&exps))
    }

    pub(crate) fn dense(&self, w: &PcWord) -> Vec<i64> {
        let mut exps = vec![0i64; self.len()];
        for &(g, e) in w {
            exps[g] = e;
        }
        exps
    }

    /// Runs the consistency battery and returns the labels of failing tests.
    /// With `weighted`, tests whose generators' weights sum past the class are
    /// skipped (they hold automatically in a weighted presentation).
    pub fn consistency_failures(&self, weighted: bool) -> Result<Vec<String>> {
        let mut failures = Vec::new();
        for t in self.consistency_tests(weighted)? {
            if t.left != t.right {
                failures.push(t.label);
            }
        }
        Ok(failures)
    }

    /// Evaluates every consistency test word in two ways.
    pub(crate) fn consistency_tests(&self, weighted: bool) -> Result<Vec<ConsistencyTest>> {
        let n = self.len();
        let c = self.class;
        let w = &self.weight;
        let ok2 = |a: usize, b: usize| !weighted || w[a] + w[b] <= c;
        let unit = |g: usize, e: i64| {
            let mut v = vec![0i64; n];
            v[g] = e;
            v
        };
        let mut out = Vec::new();
        // Only non-central generators can produce a discrepancy; central
        // generators commute with everything and their powers are central.
        let top = self.central_from;
        for k in 0..top {
            for j in 0..k {
                if weighted && w[j] + w[k] >= c {
                    continue;
                }
                for i in 0..j {
                    if weighted && w[i] + w[j] + w[k] > c {
                        continue;
                    }
                    let mut left = unit(k, 1);
                    self.collect_letters(&mut left, &[(j, 1)])?;
                    self.collect_letters(&mut left, &[(i, 1)])?;
                    let ji = self.collect(&[(j, 1), (i, 1)])?;
                    let mut right = unit(k, 1);
                    self.collect_letters(&mut right, &ji)?;
                    out.push(ConsistencyTest::new(
                        format!("a{} a{} a{}", k + 1, j + 1, i + 1),
                        left,
                        right,
                    ));
                }
            }
        }
        for j in 0..n {
            for i in 0..j.min(top) {
                if !ok2(i, j) {
                    continue;
                }
                if let Some(oj) = self.order[j] {
                    // (a_j^{o_j}) a_i = a_j^{o_j-1} (a_j a_i)
                    let mut left = self.dense(&self.power[j]);
                    self.collect_letters(&mut left, &[(i, 1)])?;
                    let ji = self.collect(&[(j, 1), (i, 1)])?;
                    let mut right = unit(j, oj - 1);
                    self.collect_letters(&mut right, &ji)?;
                    out.push(ConsistencyTest::new(
                        format!("a{}^{} a{}", j + 1, oj, i + 1),
                        left,
                        right,
                    ));
                }
                if let Some(oi) = self.order[i] {
                    // a_j (a_i^{o_i}) = (a_j a_i^{o_i-1}) a_i
                    let mut left = unit(j, 1);
                    self.collect_letters(&mut left, &self.power[i])?;
                    let mut right = unit(j, 1);
                    self.collect_letters(&mut right, &[(i, oi - 1)])?;
                    self.collect_letters(&mut right, &[(i, 1)])?;
                    out.push(ConsistencyTest::new(
                        format!("a{} a{}^{}", j + 1, i + 1, oi),
                        left,
                        right,
                    ));
                } else {
                    // (a_j a_i^{-1}) a_i = a_j
                    let mut left = unit(j, 1);
                    self.collect_letters(&mut left, &[(i, -1)])?;
                    self.collect_letters(&mut left, &[(i, 1)])?;
                    out.push(ConsistencyTest::new(
                        format!("a{} a{}^-1 a{}", j + 1, i + 1, i + 1),
                        left,
                        unit(j, 1),
                    ));
                }
                if self.order[j].is_none() {
                    // a_j^{-1} (a_j a_i) = a_i
                    let ji = self.collect(&[(j, 1), (i, 1)])?;
                    let mut left = unit(j, -1);
                    self.collect_letters(&mut left, &ji)?;
                    out.push(ConsistencyTest::new(
                        format!("a{}^-1 a{} a{}", j + 1, j + 1, i + 1),
                        left,
                        unit(i, 1),
                    ));
                    if self.order[i].is_none() {
                        // a_j^{-1} (a_j a_i^{-1}) = a_i^{-1}
                        let ji = self.collect(&[(j, 1), (i, -1)])?;
                        let mut left = unit(j, -1);
                        self.collect_letters(&mut left, &ji)?;
                        out.push(ConsistencyTest::new(
                            format!("a{}^-1 a{} a{}^-1", j + 1, j + 1, i + 1),
                            left,
                            unit(i, -1),
                        ));
                    }
                }
            }
        }
        for i in 0..top {
            if let Some(oi) = self.order[i] {
                if weighted && 2 * w[i] > c {
                    continue;
                }
                // a_i (a_i^{o_i}) = (a_i^{o_i}) a_i
                let mut left = unit(i, 1);
                self.collect_letters(&mut left, &self.power[i])?;
                let mut right = self.dense(&self.power[i]);
                self.collect_letters(&mut right, &[(i, 1)])?;
                out.push(ConsistencyTest::new(
                    format!("a{}^{}", i + 1, oi + 1),
                    left,
                    right,
                ));
            }
        }
        Ok(out)
    }

    pub fn format_word(w: &PcWord) -> String {
        if w.is_empty() {
            return "e".into();
        }
        w.iter()
            .map(|&(g, e)| {
                if e == 1 {
                    format!("a{}", g + 1)
                } else {
                    format!("a{}^{}", g + 1, e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for PcPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "pc presentation: {} generators, class {}",
            self.len(),
            self.class
        )?;
        for i in 0..self.len() {
            let def = match self.definitions[i] {
                Some(Definition::Generator(s)) => format!("g{}", s + 1),
                Some(Definition::Commutator { j, i }) => format!("[a{}, a{}]", j + 1, i + 1),
                None => "-".into(),
            };
            let ord = self.order[i].map_or("inf".to_string(), |o| o.to_string());
            writeln!(
                f,
                "  a{} weight {} order {} def {}",
                i + 1,
                self.weight[i],
                ord,
                def
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub(crate) struct ConsistencyTest {
    pub label: String,
    pub left: Vec<i64>,
    pub right: Vec<i64>,
}

impl ConsistencyTest {
    fn new(label: String, left: Vec<i64>, right: Vec<i64>) -> Self {
        ConsistencyTest { label, left, right }
    }
}

pub(crate) fn to_word(exps: &[i64]) -> PcWord {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(g, &e)| (g, e))
        .collect()
}

pub(crate) fn invert_letters(w: &[(usize, i64)]) -> Vec<(usize, i64)> {
    w.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

/// Pushes `w^q` so that it is processed next.
fn push_power(stack: &mut Vec<(usize, i64)>, w: &[(usize, i64)], q: i64) {
    if w.is_empty() {
        return;
    }
    for _ in 0..q.unsigned_abs() {
        if q > 0 {
            stack.extend(w.iter().rev().copied());
        } else {
            stack.extend(w.iter().map(|&(g, e)| (g, -e)));
        }
    }
}
