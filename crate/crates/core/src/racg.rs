//! Word problem in right-angled Coxeter groups `RC_K`.
//!
//! Normal forms: cancel pairs `s … s` whose intermediate letters all commute
//! with `s` until none remain (the word is then geodesic), then take the
//! lexicographically least word of the commutation class.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::freegroup::{commutator, simple_nested, FreeWord};

/// Right-angled Coxeter group given by the 1-skeleton of a complex.
#[derive(Debug, Clone)]
pub struct Racg {
    m: usize,
    // commute[i][j] for 1-based i, j; false on the diagonal.
    commute: Vec<Vec<bool>>,
}

impl Racg {
    pub fn new(k: &SimplicialComplex) -> Self {
        let m = k.m();
        let mut commute = vec![vec![false; m + 1]; m + 1];
        for (i, j) in k.edges() {
            commute[i][j] = true;
            commute[j][i] = true;
        }
        Racg { m, commute }
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    pub fn commutes(&self, i: usize, j: usize) -> bool {
        self.commute[i][j]
    }

    fn check(&self, w: &[usize]) -> Result<()> {
        match w.iter().find(|&&x| x == 0 || x > self.m) {
            Some(&x) => Err(Error::GeneratorOutOfRange {
                index: x,
                m: self.m,
            }),
            None => Ok(()),
        }
    }

    /// Geodesic representative obtained by cancellation only.
    pub fn geodesic(&self, w: &[usize]) -> Result<Vec<usize>> {
        self.check(w)?;
        let mut out: Vec<usize> = Vec::with_capacity(w.len());
        for &s in w {
            let mut cancel = None;
            for p in (0..out.len()).rev() {
                if out[p] == s {
                    cancel = Some(p);
                    break;
                }
                if !self.commute[out[p]][s] {
                    break;
                }
            }
            match cancel {
                Some(p) => {
                    out.remove(p);
                }
                None => out.push(s),
            }
        }
        Ok(out)
    }

    /// Lexicographically least word in the commutation class of `w`.
    pub fn lex_least(&self, w: &[usize]) -> Vec<usize> {
        let mut rest = w.to_vec();
        let mut out = Vec::with_capacity(w.len());
        while !rest.is_empty() {
            // A position can move to the front iff it commutes with everything before it.
            let mut best: Option<usize> = None;
            for p in 0..rest.len() {
                let s = rest[p];
                if rest[..p].iter().all(|&x| self.commute[x][s]) && best.is_none_or(|b| s < rest[b])
                {
                    best = Some(p);
                }
            }
            let p = best.expect("first letter is always movable");
            out.push(rest.remove(p));
        }
        out
    }

    pub fn normal_form(&self, w: &[usize]) -> Result<Vec<usize>> {
        Ok(self.lex_least(&self.geodesic(w)?))
    }

    pub fn equal(&self, a: &[usize], b: &[usize]) -> Result<bool> {
        Ok(self.normal_form(a)? == self.normal_form(b)?)
    }

    /// Image of a free-group word: `g_k⁻¹ = g_k` in `RC_K`.
    pub fn from_free(&self, w: &FreeWord) -> Result<Vec<usize>> {
        let letters: Vec<usize> = w
            .letters()
            .iter()
            .map(|x| x.unsigned_abs() as usize)
            .collect();
        self.check(&letters)?;
        Ok(letters)
    }

    pub fn equal_free(&self, a: &FreeWord, b: &FreeWord) -> Result<bool> {
        self.equal(&self.from_free(a)?, &self.from_free(b)?)
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        self.check(&[i, j])?;
        if i == j {
            return Err(Error::InvalidArgument(format!(
                "identity needs i != j, got {i}"
            )));
        }
        Ok(())
    }

    /// `(g_i, g_j, g_i) = (g_i, g_j, g_j) = (g_j, g_i)^2`.
    pub fn verify_square_identity(&self, i: usize, j: usize) -> Result<bool> {
        self.check_pair(i, j)?;
        let (gi, gj) = (FreeWord::generator(i), FreeWord::generator(j));
        let a = simple_nested(&[gi.clone(), gj.clone(), gi.clone()])?;
        let b = simple_nested(&[gi.clone(), gj.clone(), gj.clone()])?;
        let c = commutator(&gj, &gi).pow(2);
        Ok(self.equal_free(&a, &b)? && self.equal_free(&b, &c)?)
    }

    /// `(g_i, g_j, g_i, g_i) = (g_i, g_j)^4 = (g_i, g_j, g_i, g_j)`.
    pub fn verify_degree4_expansion(&self, i: usize, j: usize) -> Result<bool> {
        self.check_pair(i, j)?;
        let (gi, gj) = (FreeWord::generator(i), FreeWord::generator(j));
        let a = simple_nested(&[gi.clone(), gj.clone(), gi.clone(), gi.clone()])?;
        let b = commutator(&gi, &gj).pow(4);
        let c = simple_nested(&[gi.clone(), gj.clone(), gi.clone(), gj.clone()])?;
        Ok(self.equal_free(&a, &b)? && self.equal_free(&b, &c)?)
    }
}

/// Result of running both identities over all ordered pairs `i ≠ j`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PairIdentityReport {
    pub pairs: usize,
    pub square_failures: Vec<(usize, usize)>,
    pub degree4_failures: Vec<(usize, usize)>,
}

impl PairIdentityReport {
    pub fn passed(&self) -> bool {
        self.square_failures.is_empty() && self.degree4_failures.is_empty()
    }
}

pub fn verify_all_pairs(k: &SimplicialComplex) -> Result<PairIdentityReport> {
    let g = Racg::new(k);
    let mut report = PairIdentityReport {
        pairs: 0,
        square_failures: Vec::new(),
        degree4_failures: Vec::new(),
    };
    for i in 1..=g.rank() {
        for j in (1..=g.rank()).filter(|&j| j != i) {
            report.pairs += 1;
            if !g.verify_square_identity(i, j)? {
                report.square_failures.push((i, j));
            }
            if !g.verify_degree4_expansion(i, j)? {
                report.degree4_failures.push((i, j));
            }
        }
    }
    Ok(report)
}
