//! Simplicial complexes on `[m] = {1, ..., m}`, their full subcomplexes and
//! homology, the cubical real moment-angle complex, and the nested-commutator
//! generators of the commutator subgroup of a right-angled Coxeter group.
//!
//! Vertices are 1-based; vertex `i` is bit `i - 1` of a face mask.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlinalg::{elementary_divisors, smith_normal_form, IntMatrix};

/// Largest vertex count a complex may have (faces are `u32` masks).
pub const MAX_VERTICES: usize = 31;
/// Largest vertex count accepted by the homology routines.
pub const MAX_HOMOLOGY_VERTICES: usize = 12;

pub type Mask = u32;

fn bit(v: usize) -> Mask {
    1 << (v - 1)
}

fn mask_vertices(mask: Mask) -> impl Iterator<Item = usize> {
    (0..32).filter(move |b| mask >> b & 1 == 1).map(|b| b + 1)
}

/// A downward-closed family of faces on a vertex set `V ⊆ [m]` containing
/// the empty face and every singleton of `V`.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    m: usize,
    vertices: Mask,
    /// Sorted by (size, mask); always starts with the empty face.
    faces: Vec<Mask>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let faces: Vec<Vec<usize>> = self
            .maximal_faces()
            .into_iter()
            .map(|f| mask_vertices(f).collect())
            .collect();
        f.debug_struct("SimplicialComplex")
            .field("m", &self.m)
            .field(
                "vertices",
                &mask_vertices(self.vertices).collect::<Vec<_>>(),
            )
            .field("maximal_faces", &faces)
            .finish()
    }
}

fn check_vertex(v: usize, m: usize) -> Result<()> {
    if v == 0 || v > m {
        Err(Error::VertexOutOfRange { vertex: v, m })
    } else {
        Ok(())
    }
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 || m > MAX_VERTICES {
        Err(Error::InvalidComplex(format!(
            "vertex count must be in 1..={MAX_VERTICES}, got {m}"
        )))
    } else {
        Ok(())
    }
}

fn sort_faces(faces: &mut Vec<Mask>) {
    faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
    faces.dedup();
}

impl SimplicialComplex {
    /// Builds the downward closure of `faces` together with all singletons.
    pub fn new(m: usize, faces: &[Vec<usize>]) -> Result<Self> {
        check_m(m)?;
        let mut set = std::collections::HashSet::new();
        set.insert(0);
        for v in 1..=m {
            set.insert(bit(v));
        }
        for face in faces {
            let mut mask = 0;
            for &v in face {
                check_vertex(v, m)?;
                mask |= bit(v);
            }
            // every subset of the face
            let mut sub = mask;
            loop {
                set.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        let mut faces: Vec<Mask> = set.into_iter().collect();
        sort_faces(&mut faces);
        Ok(SimplicialComplex {
            m,
            vertices: if m == 32 { u32::MAX } else { (1u32 << m) - 1 },
            faces,
        })
    }

    /// `m` isolated vertices.
    pub fn discrete(m: usize) -> Result<Self> {
        Self::new(m, &[])
    }

    /// The full simplex on `[m]`.
    pub fn simplex(m: usize) -> Result<Self> {
        Self::new(m, &[(1..=m).collect()])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_mask(&self) -> Mask {
        self.vertices
    }

    pub fn vertices(&self) -> Vec<usize> {
        mask_vertices(self.vertices).collect()
    }

    pub fn faces(&self) -> &[Mask] {
        &self.faces
    }

    pub fn face_lists(&self) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .map(|&f| mask_vertices(f).collect())
            .collect()
    }

    pub fn contains_face(&self, face: Mask) -> bool {
        let key = (face.count_ones(), face);
        self.faces
            .binary_search_by_key(&key, |&f| (f.count_ones(), f))
            .is_ok()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j
            && (1..=self.m).contains(&i)
            && (1..=self.m).contains(&j)
            && self.contains_face(bit(i) | bit(j))
    }

    /// Edges `{i, j}` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.faces
            .iter()
            .filter(|f| f.count_ones() == 2)
            .map(|&f| {
                let mut it = mask_vertices(f);
                (it.next().unwrap(), it.next().unwrap())
            })
            .collect()
    }

    /// Non-edges `{i, j}`, `i < j`, among the vertices of the complex.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let vs = self.vertices();
        let mut out = Vec::new();
        for (a, &i) in vs.iter().enumerate() {
            for &j in &vs[a + 1..] {
                if !self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn maximal_faces(&self) -> Vec<Mask> {
        self.faces
            .iter()
            .copied()
            .filter(|&f| !self.faces.iter().any(|&g| g != f && g & f == f))
            .collect()
    }

    /// `K_J = {I ∈ K : I ⊆ J}`, keeping the original vertex labels.
    pub fn full_subcomplex(&self, j: &[usize]) -> Result<Self> {
        let mut mask = 0;
        for &v in j {
            check_vertex(v, self.m)?;
            mask |= bit(v);
        }
        Ok(self.restrict(mask))
    }

    /// Full subcomplex on the vertices of `mask` (intersected with `V`).
    pub fn restrict(&self, mask: Mask) -> Self {
        let mask = mask & self.vertices;
        SimplicialComplex {
            m: self.m,
            vertices: mask,
            faces: self
                .faces
                .iter()
                .copied()
                .filter(|&f| f & !mask == 0)
                .collect(),
        }
    }

    /// Vertex masks of the connected components of the 1-skeleton.
    pub fn component_masks(&self) -> Vec<Mask> {
        let mut parent: Vec<usize> = (0..=self.m).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for (i, j) in self.edges() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut comps: Vec<(usize, Mask)> = Vec::new();
        for v in mask_vertices(self.vertices) {
            let root = find(&mut parent, v);
            match comps.iter_mut().find(|(r, _)| *r == root) {
                Some((_, m)) => *m |= bit(v),
                None => comps.push((root, bit(v))),
            }
        }
        comps.into_iter().map(|(_, m)| m).collect()
    }

    /// Partition of the vertex set by connectivity of the 1-skeleton,
    /// ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.component_masks()
            .into_iter()
            .map(|m| mask_vertices(m).collect())
            .collect()
    }

    fn faces_of_size(&self, size: u32) -> Vec<Mask> {
        self.faces
            .iter()
            .copied()
            .filter(|f| f.count_ones() == size)
            .collect()
    }

    /// Reduced simplicial homology `H̃_k(K; Z)` for `k ≥ -1`.
    pub fn reduced_homology(&self, k: i32) -> AbelianInvariants {
        if k < -1 {
            return AbelianInvariants::trivial();
        }
        // C_d has basis the faces of size d + 1; C_{-1} = Z on the empty face.
        let size = (k + 1) as u32;
        let chains = self.faces_of_size(size);
        let lower = if size == 0 {
            Vec::new()
        } else {
            self.faces_of_size(size - 1)
        };
        let upper = self.faces_of_size(size + 1);
        let rank_out = simplicial_boundary_divisors(&chains, &lower).len();
        let into = simplicial_boundary_divisors(&upper, &chains);
        AbelianInvariants::from_quotient(chains.len() - rank_out, &into)
    }

    /// `H_k(R_K; Z) ≅ ⊕_{J ⊆ V} H̃_{k-1}(K_J)`.
    pub fn rmk_homology(&self, k: usize) -> Result<AbelianInvariants> {
        self.check_homology_size()?;
        let mut total = AbelianInvariants::trivial();
        let v = self.vertices;
        let mut j = v;
        loop {
            total = total.direct_sum(&self.restrict(j).reduced_homology(k as i32 - 1));
            if j == 0 {
                break;
            }
            j = (j - 1) & v;
        }
        Ok(total)
    }

    /// Homology of `R_K = ⋃_{I ∈ K} (D¹,S⁰)^I` computed directly from its
    /// cubical cell structure.
    pub fn cubical_rmk_homology(&self, k: usize) -> Result<AbelianInvariants> {
        self.check_homology_size()?;
        let cells_k = self.cubical_cells(k);
        let cells_below = if k == 0 {
            Vec::new()
        } else {
            self.cubical_cells(k - 1)
        };
        let cells_above = self.cubical_cells(k + 1);
        let rank_out = cubical_boundary_divisors(&cells_k, &cells_below).len();
        let into = cubical_boundary_divisors(&cells_above, &cells_k);
        Ok(AbelianInvariants::from_quotient(
            cells_k.len() - rank_out,
            &into,
        ))
    }

    fn check_homology_size(&self) -> Result<()> {
        let n = self.vertices.count_ones() as usize;
        if n > MAX_HOMOLOGY_VERTICES {
            return Err(Error::CapExceeded(format!(
                "homology limited to {MAX_HOMOLOGY_VERTICES} vertices, complex has {n}"
            )));
        }
        Ok(())
    }

    /// Cells `(I, ε)` of dimension `d`: `I ∈ K` with `|I| = d` and `ε` a
    /// choice of endpoint (bit set = +1) for each vertex of `V \ I`.
    fn cubical_cells(&self, d: usize) -> Vec<(Mask, Mask)> {
        let mut out = Vec::new();
        for &face in self.faces.iter().filter(|f| f.count_ones() as usize == d) {
            let free = self.vertices & !face;
            let mut eps = free;
            loop {
                out.push((face, eps));
                if eps == 0 {
                    break;
                }
                eps = (eps - 1) & free;
            }
        }
        out
    }

    /// Enumerates the nested commutators `(g_i, g_j, g_{k_1}, ..., g_{k_{ℓ-2}})`
    /// with `i < j > k_1 > ... > k_{ℓ-2}`, `k_s ≠ i`, such that `i` is the
    /// smallest vertex of a connected component of `K_{{k_1..k_{ℓ-2}, j, i}}`
    /// not containing `j`. Ordered by `(ℓ, j, i, k_1, ...)`.
    pub fn gscox_generators(&self) -> Vec<CommutatorPattern> {
        let vs = self.vertices();
        let mut out = Vec::new();
        for len in 2..=vs.len() {
            for &j in &vs {
                for &i in vs.iter().filter(|&&i| i < j) {
                    let pool: Vec<usize> =
                        vs.iter().copied().filter(|&k| k < j && k != i).collect();
                    let mut tails: Vec<Vec<usize>> = Vec::new();
                    choose_desc(&pool, len - 2, &mut Vec::new(), &mut tails);
                    tails.sort();
                    for ks in tails {
                        let mut support = bit(i) | bit(j);
                        for &k in &ks {
                            support |= bit(k);
                        }
                        let sub = self.restrict(support);
                        let ok = sub
                            .component_masks()
                            .iter()
                            .any(|&c| c & bit(j) == 0 && c.trailing_zeros() as usize + 1 == i);
                        if ok {
                            let mut letters = vec![i, j];
                            letters.extend(ks);
                            out.push(CommutatorPattern { letters });
                        }
                    }
                }
            }
        }
        out
    }
}

/// All decreasing sequences of `r` elements from `pool`.
fn choose_desc(pool: &[usize], r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == r {
        out.push(cur.clone());
        return;
    }
    for (idx, &k) in pool.iter().enumerate() {
        if cur.last().is_none_or(|&last| k < last) {
            cur.push(k);
            choose_desc(&pool[..idx], r, cur, out);
            cur.pop();
        }
    }
}

/// Elementary divisors of `∂ : C(from) → C(to)` for simplicial chains.
fn simplicial_boundary_divisors(from: &[Mask], to: &[Mask]) -> Vec<BigInt> {
    if from.is_empty() || to.is_empty() {
        return Vec::new();
    }
    let index: HashMap<Mask, usize> = to.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let rows = from
        .iter()
        .map(|&face| {
            let mut row: Vec<(usize, BigInt)> = mask_vertices(face)
                .enumerate()
                .map(|(pos, v)| {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    (index[&(face & !bit(v))], BigInt::from(sign))
                })
                .collect();
            row.sort_by_key(|(c, _)| *c);
            row
        })
        .collect();
    elementary_divisors(to.len(), rows)
}

fn cubical_boundary_divisors(from: &[(Mask, Mask)], to: &[(Mask, Mask)]) -> Vec<BigInt> {
    if from.is_empty() || to.is_empty() {
        return Vec::new();
    }
    let index: HashMap<(Mask, Mask), usize> = to.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let rows = from
        .iter()
        .map(|&(face, eps)| {
            let mut row = Vec::new();
            for (pos, v) in mask_vertices(face).enumerate() {
                let sign: i64 = if pos % 2 == 0 { 1 } else { -1 };
                let smaller = face & !bit(v);
                row.push((index[&(smaller, eps | bit(v))], BigInt::from(sign)));
                row.push((index[&(smaller, eps)], BigInt::from(-sign)));
            }
            row.sort_by_key(|(c, _)| *c);
            row
        })
        .collect();
    elementary_divisors(to.len(), rows)
}

/// Finitely generated abelian group `Z^free_rank ⊕ ⊕ Z/t_i`, torsion in
/// invariant-factor form (`t_1 | t_2 | ...`, each `≥ 2`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianInvariants {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z^cycles / im`, where `im` is the image of a map with the given
    /// elementary divisors landing inside the cycles.
    pub fn from_quotient(cycles: usize, divisors: &[BigInt]) -> Self {
        AbelianInvariants {
            free_rank: cycles - divisors.len(),
            torsion: divisors
                .iter()
                .filter(|d| !d.is_one())
                .map(|d| d.to_u64().expect("torsion coefficient fits in u64"))
                .collect(),
        }
    }

    /// Builds invariants from an arbitrary multiset of cyclic orders.
    pub fn from_cyclic_orders(free_rank: usize, orders: &[u64]) -> Self {
        let mut diag = IntMatrix::zeros(orders.len(), orders.len());
        for (i, &o) in orders.iter().enumerate() {
            diag.set(i, i, BigInt::from(o));
        }
        let divisors = smith_normal_form(&diag).diagonal;
        AbelianInvariants {
            free_rank,
            torsion: divisors
                .iter()
                .filter(|d| !d.is_one())
                .map(|d| d.to_u64().expect("torsion coefficient fits in u64"))
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &AbelianInvariants) -> Self {
        let mut orders = self.torsion.clone();
        orders.extend(&other.torsion);
        if orders.is_empty() {
            return AbelianInvariants::free(self.free_rank + other.free_rank);
        }
        Self::from_cyclic_orders(self.free_rank + other.free_rank, &orders)
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// Generator index sequence `(i, j, k_1, ..., k_{ℓ-2})` of a left-nested
/// commutator `(g_i, g_j, g_{k_1}, ...)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CommutatorPattern {
    pub letters: Vec<usize>,
}

impl CommutatorPattern {
    /// Checks `i < j > k_1 > k_2 > ...` and `k_s ≠ i`.
    pub fn satisfies_index_conditions(&self) -> bool {
        let l = &self.letters;
        if l.len() < 2 || l[0] >= l[1] {
            return false;
        }
        let ks = &l[2..];
        let mut prev = l[1];
        for &k in ks {
            if k >= prev || k == l[0] {
                return false;
            }
            prev = k;
        }
        true
    }
}

impl fmt::Display for CommutatorPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Every simplicial complex on `[m]` containing all vertices.
pub fn all_complexes(m: usize) -> Result<Vec<SimplicialComplex>> {
    check_m(m)?;
    if m > 6 {
        return Err(Error::CapExceeded(format!(
            "enumerating complexes on {m} > 6 vertices"
        )));
    }
    let mut sets: Vec<Mask> = (1..(1u32 << m)).filter(|s| s.count_ones() >= 2).collect();
    sort_faces(&mut sets);
    let base: Vec<Mask> = (0..=m).map(|v| if v == 0 { 0 } else { bit(v) }).collect();
    let mut out = Vec::new();
    fn go(
        m: usize,
        sets: &[Mask],
        idx: usize,
        chosen: &mut Vec<Mask>,
        out: &mut Vec<SimplicialComplex>,
    ) {
        if idx == sets.len() {
            let mut faces = chosen.clone();
            sort_faces(&mut faces);
            out.push(SimplicialComplex {
                m,
                vertices: (1u32 << m) - 1,
                faces,
            });
            return;
        }
        go(m, sets, idx + 1, chosen, out);
        let s = sets[idx];
        let closed = mask_vertices(s).all(|v| chosen.contains(&(s & !bit(v))));
        if closed {
            chosen.push(s);
            go(m, sets, idx + 1, chosen, out);
            chosen.pop();
        }
    }
    let mut chosen = base;
    go(m, &sets, 0, &mut chosen, &mut out);
    Ok(out)
}

/// Flag complexes of every graph on `[m]`.
pub fn all_flag_complexes(m: usize) -> Result<Vec<SimplicialComplex>> {
    check_m(m)?;
    let pairs: Vec<(usize, usize)> = (1..=m)
        .flat_map(|i| (i + 1..=m).map(move |j| (i, j)))
        .collect();
    if pairs.len() > 20 {
        return Err(Error::CapExceeded(format!(
            "enumerating graphs on {m} vertices"
        )));
    }
    (0..1u32 << pairs.len())
        .map(|sel| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| sel >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            flag_complex_of_graph(m, &edges)
        })
        .collect()
}

/// Random complex on `[m]`: the closure of a few random faces of size 2 or 3.
pub fn random_complex<R: rand::Rng + ?Sized>(rng: &mut R, m: usize) -> Result<SimplicialComplex> {
    let count = rng.gen_range(0..=m + 1);
    let mut faces = Vec::new();
    for _ in 0..count {
        let size = rng.gen_range(2..=3.min(m).max(2));
        let mut verts: Vec<usize> = (1..=m).collect();
        for t in 0..size.min(m) {
            let r = rng.gen_range(t..m);
            verts.swap(t, r);
        }
        verts.truncate(size.min(m));
        faces.push(verts);
    }
    SimplicialComplex::new(m, &faces)
}

/// The flag complex whose faces are the cliques of the graph.
pub fn flag_complex_of_graph(m: usize, edges: &[(usize, usize)]) -> Result<SimplicialComplex> {
    check_m(m)?;
    let mut adj = vec![0 as Mask; m + 1];
    for &(a, b) in edges {
        check_vertex(a, m)?;
        check_vertex(b, m)?;
        if a == b {
            return Err(Error::LoopEdge(a));
        }
        adj[a] |= bit(b);
        adj[b] |= bit(a);
    }
    let mut faces = Vec::new();
    // Bron–Kerbosch style growth: extend cliques by larger vertices only.
    fn grow(clique: Mask, candidates: Mask, adj: &[Mask], out: &mut Vec<Mask>) {
        out.push(clique);
        for v in mask_vertices(candidates) {
            let rest = candidates & adj[v] & !((bit(v) << 1) - 1);
            grow(clique | bit(v), rest, adj, out);
        }
    }
    let all = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    grow(0, all, &adj, &mut faces);
    sort_faces(&mut faces);
    Ok(SimplicialComplex {
        m,
        vertices: all,
        faces,
    })
}

/// JSON ingestion format: `{"m": 4, "faces": [[1,2],[2,3]]}` (closure taken)
/// or `{"m": 4, "edges": [[1,2]], "flag": true}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexInput {
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flag: Option<bool>,
}

impl ComplexInput {
    pub fn build(&self) -> Result<SimplicialComplex> {
        let mut faces = self.faces.clone().unwrap_or_default();
        let edges = self.edges.clone().unwrap_or_default();
        for e in &edges {
            if e.len() != 2 {
                return Err(Error::InvalidComplex(format!(
                    "edge must have two endpoints, got {e:?}"
                )));
            }
        }
        if self.flag.unwrap_or(false) {
            let mut pairs: Vec<(usize, usize)> = edges.iter().map(|e| (e[0], e[1])).collect();
            // Faces given alongside a flag request contribute their edges.
            for f in &faces {
                for (a, &x) in f.iter().enumerate() {
                    for &y in &f[a + 1..] {
                        pairs.push((x, y));
                    }
                }
            }
            return flag_complex_of_graph(self.m, &pairs);
        }
        for e in &edges {
            if e[0] == e[1] {
                return Err(Error::LoopEdge(e[0]));
            }
        }
        faces.extend(edges);
        SimplicialComplex::new(self.m, &faces)
    }

    pub fn from_json(text: &str) -> Result<SimplicialComplex> {
        let input: ComplexInput =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        input.build()
    }
}
