//! Words in the free group `F(g_1, ..., g_m)`.
//!
//! A letter is a nonzero `i32`: `k` stands for `g_k`, `-k` for `g_k⁻¹`.
//! Words are kept freely reduced, so equality of group elements is equality
//! of letter sequences.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(k: usize) -> Self {
        FreeWord(vec![k as i32])
    }

    /// Reduces an arbitrary letter sequence. Letter `0` is rejected.
    pub fn new(letters: &[i32]) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidArgument("letter 0 in free word".into()));
        }
        Ok(reduce(letters))
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index occurring in the word.
    pub fn max_generator(&self) -> usize {
        self.0
            .iter()
            .map(|x| x.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn inverse(&self) -> Self {
        FreeWord(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn mul(&self, other: &FreeWord) -> Self {
        let mut out = self.0.clone();
        for &x in &other.0 {
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        FreeWord(out)
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(FreeWord::identity(), |acc, _| acc.mul(&base))
    }

    /// `a^b = b⁻¹ a b`.
    pub fn conj(&self, by: &FreeWord) -> Self {
        by.inverse().mul(self).mul(by)
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&x| {
                if x > 0 {
                    format!("g{x}")
                } else {
                    format!("g{}^-1", -x)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Free reduction of a letter sequence.
pub fn reduce(letters: &[i32]) -> FreeWord {
    FreeWord::identity().mul(&FreeWord(letters.to_vec()))
}

/// `(a, b) = a⁻¹ b⁻¹ a b`.
pub fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
    a.inverse().mul(&b.inverse()).mul(a).mul(b)
}

/// Left-nested commutator `(…((q_1, q_2), q_3), …, q_k)`.
pub fn simple_nested(parts: &[FreeWord]) -> Result<FreeWord> {
    if parts.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "nested commutator needs at least 2 entries, got {}",
            parts.len()
        )));
    }
    Ok(parts[1..]
        .iter()
        .fold(parts[0].clone(), |acc, q| commutator(&acc, q)))
}

fn nested3(a: &FreeWord, b: &FreeWord, c: &FreeWord) -> FreeWord {
    commutator(&commutator(a, b), c)
}

fn product(parts: &[FreeWord]) -> FreeWord {
    parts.iter().fold(FreeWord::identity(), |acc, w| acc.mul(w))
}

/// Checks the three Hall–Witt identities
///
/// ```text
/// (a, bc) = (a, c)(a, b)(a, b, c)
/// (ab, c) = (a, c)(a, c, b)(b, c)
/// (a,b,c)(b,c,a)(c,a,b) = (b,a)(c,a)(c,b)^a (a,b)(a,c)^b (b,c)^a (a,c)(c,a)^b
/// ```
pub fn verify_hall_witt(a: &FreeWord, b: &FreeWord, c: &FreeWord) -> bool {
    let first = commutator(a, &b.mul(c))
        == product(&[commutator(a, c), commutator(a, b), nested3(a, b, c)]);
    let second = commutator(&a.mul(b), c)
        == product(&[commutator(a, c), nested3(a, c, b), commutator(b, c)]);
    let lhs = product(&[nested3(a, b, c), nested3(b, c, a), nested3(c, a, b)]);
    let rhs = product(&[
        commutator(b, a),
        commutator(c, a),
        commutator(c, b).conj(a),
        commutator(a, b),
        commutator(a, c).conj(b),
        commutator(b, c).conj(a),
        commutator(a, c),
        commutator(c, a).conj(b),
    ]);
    first && second && lhs == rhs
}

/// Checks the two eight-factor expansions of `(a, (b, c))` and `((a, b), c)`.
pub fn verify_triple_lemma(a: &FreeWord, b: &FreeWord, c: &FreeWord) -> bool {
    let comm = commutator;
    let first = comm(a, &comm(b, c))
        == product(&[
            comm(a, c),
            comm(c, &comm(b, a)),
            comm(a, b),
            comm(c, b),
            comm(b, &comm(a, c)),
            comm(c, a),
            comm(b, a),
            comm(b, c),
        ]);
    let second = comm(&comm(a, b), c)
        == product(&[
            comm(b, a),
            comm(c, a),
            comm(c, b),
            comm(&comm(c, b), a),
            comm(a, b),
            comm(a, c),
            comm(&comm(a, c), b),
            comm(b, c),
        ]);
    first && second
}

/// Uniform random reduced word over `m` generators of length at most `max_len`
/// before reduction.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, m: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=m) as i32;
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    reduce(&letters)
}

/// Outcome of the seeded identity fuzz suites.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct IdentityReport {
    pub trials: usize,
    pub hall_witt_failures: usize,
    pub lemma_failures: usize,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.hall_witt_failures == 0 && self.lemma_failures == 0
    }
}

/// Runs both identity suites on `trials` random triples in `F_m`.
pub fn fuzz_identities(m: usize, trials: usize, max_len: usize, seed: u64) -> IdentityReport {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut report = IdentityReport {
        trials,
        hall_witt_failures: 0,
        lemma_failures: 0,
    };
    for _ in 0..trials {
        let a = random_word(&mut rng, m, max_len);
        let b = random_word(&mut rng, m, max_len);
        let c = random_word(&mut rng, m, max_len);
        if !verify_hall_witt(&a, &b, &c) {
            report.hall_witt_failures += 1;
        }
        if !verify_triple_lemma(&a, &b, &c) {
            report.lemma_failures += 1;
        }
    }
    report
}

/// Parses commutator notation: `(1,2,1,1)` is the left-nested
/// `(g_1, g_2, g_1, g_1)`; entries may themselves be parenthesized, as in
/// `((1,2),3,4)`. A bare index `3` is the generator `g_3`.
pub fn parse_commutator(text: &str) -> Result<FreeWord> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let w = parse_entry(&chars, &mut pos)?;
    if pos != chars.len() {
        return Err(Error::Parse(format!("trailing input in {text:?}")));
    }
    Ok(w)
}

/// Letter sequence of a parsed commutator, e.g. `[1,2,1,1]` for `(1,2,1,1)`.
/// Only flat brackets have one.
pub fn parse_flat_commutator(text: &str) -> Result<Vec<usize>> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected (i,j,...) in {text:?}")))?;
    let letters = inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if letters.len() < 2 || letters.contains(&0) {
        return Err(Error::Parse(format!("bad commutator {text:?}")));
    }
    Ok(letters)
}

fn parse_entry(chars: &[char], pos: &mut usize) -> Result<FreeWord> {
    match chars.get(*pos) {
        Some('(') => {
            *pos += 1;
            let mut parts = vec![parse_entry(chars, pos)?];
            loop {
                match chars.get(*pos) {
                    Some(',') => {
                        *pos += 1;
                        parts.push(parse_entry(chars, pos)?);
                    }
                    Some(')') => {
                        *pos += 1;
                        break;
                    }
                    _ => {
                        return Err(Error::Parse(format!(
                            "expected ',' or ')' at offset {}",
                            *pos
                        )))
                    }
                }
            }
            simple_nested(&parts).map_err(|e| Error::Parse(e.to_string()))
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while chars.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                *pos += 1;
            }
            let s: String = chars[start..*pos].iter().collect();
            let k: usize = s.parse().map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
            if k == 0 || k > i32::MAX as usize {
                return Err(Error::Parse(format!("generator index {k} out of range")));
            }
            Ok(FreeWord::generator(k))
        }
        _ => Err(Error::Parse(format!("unexpected input at offset {}", *pos))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(k: usize) -> FreeWord {
        FreeWord::generator(k)
    }

    #[test]
    fn reduce_examples() {
        assert!(reduce(&[1, -1]).is_identity());
        assert_eq!(reduce(&[1, 2, -2, 1]).letters(), &[1, 1]);
        assert_eq!(reduce(&[1, 2, -1]).letters(), &[1, 2, -1]);
        assert!(FreeWord::new(&[1, 0]).is_err());
    }

    #[test]
    fn commutator_examples() {
        assert!(commutator(&g(1), &g(1)).is_identity());
        assert_eq!(commutator(&g(1), &g(2)).letters(), &[-1, -2, 1, 2]);
        assert!(commutator(&g(1), &FreeWord::identity()).is_identity());
    }

    #[test]
    fn nested_examples() {
        let n = simple_nested(&[g(1), g(2), g(3)]).unwrap();
        assert_eq!(n, commutator(&commutator(&g(1), &g(2)), &g(3)));
        assert!(simple_nested(&[g(1), g(1), g(2)]).unwrap().is_identity());
        // (g1, g2, g1) = g2^-1 g1^-1 g2 g1 g1^-1 g1^-1 g2^-1 g1 g2 g1, reduced to 8 letters.
        let w = simple_nested(&[g(1), g(2), g(1)]).unwrap();
        assert_eq!(w.letters(), &[-2, -1, 2, -1, -2, 1, 2, 1]);
        assert!(simple_nested(&[g(1)]).is_err());
    }

    #[test]
    fn identities_on_generators_and_identity() {
        assert!(verify_hall_witt(&g(1), &g(2), &g(3)));
        assert!(verify_triple_lemma(&g(1), &g(2), &g(3)));
        let e = FreeWord::identity();
        assert!(verify_hall_witt(&e, &e, &e));
        assert!(verify_triple_lemma(&g(1), &g(2), &g(1)));
    }

    #[test]
    fn seeded_fuzz_suite() {
        let r = fuzz_identities(4, 100, 6, 7);
        assert!(r.passed(), "{r:?}");
    }

    fn word() -> impl Strategy<Value = FreeWord> {
        prop::collection::vec((1i32..=4, any::<bool>()), 0..10).prop_map(|v| {
            reduce(
                &v.into_iter()
                    .map(|(g, s)| if s { g } else { -g })
                    .collect::<Vec<_>>(),
            )
        })
    }

    proptest! {
        #[test]
        fn reduce_idempotent_and_shortening(letters in prop::collection::vec(prop_oneof![1i32..=3, -3i32..=-1], 0..20)) {
            let w = reduce(&letters);
            prop_assert!(w.len() <= letters.len());
            prop_assert_eq!(reduce(w.letters()), w.clone());
            prop_assert!(w.letters().windows(2).all(|p| p[0] != -p[1]));
        }

        #[test]
        fn commutator_inverse_pair(a in word(), b in word()) {
            prop_assert!(commutator(&a, &b).mul(&commutator(&b, &a)).is_identity());
        }

        #[test]
        fn identities_hold(a in word(), b in word(), c in word()) {
            prop_assert!(verify_hall_witt(&a, &b, &c));
            prop_assert!(verify_triple_lemma(&a, &b, &c));
        }
    }

    #[test]
    fn parse_commutators() {
        let g = FreeWord::generator;
        assert_eq!(
            parse_commutator("(1,2,1,1)").unwrap(),
            simple_nested(&[g(1), g(2), g(1), g(1)]).unwrap()
        );
        assert_eq!(
            parse_commutator("((1, 2), 3, 4)").unwrap(),
            simple_nested(&[commutator(&g(1), &g(2)), g(3), g(4)]).unwrap()
        );
        assert_eq!(parse_commutator("3").unwrap(), g(3));
        for bad in ["(1)", "(1,2", "(0,1)", "1,2", "(a,b)", ""] {
            assert!(parse_commutator(bad).is_err(), "{bad}");
        }
        assert_eq!(
            parse_flat_commutator("(2,3,1,2)").unwrap(),
            vec![2, 3, 1, 2]
        );
        assert!(parse_flat_commutator("((1,2),3)").is_err());
    }
}
