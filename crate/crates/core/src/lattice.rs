//! Intersection lattice of a central arrangement: edge enumeration, Mobius
//! function, characteristic polynomials, dense-edge detection, and the log
//! canonical threshold.
//!
//! Edges are keyed by the exact RREF of the span of the normals of the
//! hyperplanes containing them, which gives O(1) deduplication and a stable
//! order. Containment of edges is J-set inclusion, since the key row space is
//! spanned by exactly the normals indexed by J. The lattice is built fully
//! (all edges): the Mobius recursion and the zeta recursion need complete
//! lower intervals, and p <= ~20 keeps that tractable.

use std::collections::{BTreeSet, HashMap};

use num::{BigInt, BigRational, One, Zero};

use crate::arrangement::Arrangement;
use crate::error::{ArrError, Result};
use crate::exactmath::{primitive_integer_vector, LinearForm, RatMatrix, SparsePoly};

/// A lattice element: the intersection subspace W of the hyperplanes in J.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    key: RatMatrix,
    rank: usize,
    j_set: BTreeSet<usize>,
    /// Per factor j: the hyperplanes of J owned by factor j (positive mult).
    jf: Vec<BTreeSet<usize>>,
}

impl Edge {
    /// Canonical RREF basis of the span of the normals containing W.
    pub fn key(&self) -> &RatMatrix {
        &self.key
    }

    /// Codimension of W in the ambient space.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Indices of the hyperplanes containing W.
    pub fn j_set(&self) -> &BTreeSet<usize> {
        &self.j_set
    }

    pub fn jf(&self) -> &[BTreeSet<usize>] {
        &self.jf
    }

    /// J(W, f): the factors whose zero locus contains W.
    pub fn factor_set(&self) -> BTreeSet<usize> {
        self.jf
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_empty())
            .map(|(j, _)| j)
            .collect()
    }

    pub fn is_ambient(&self) -> bool {
        self.rank == 0
    }

    /// Key rows scaled to primitive integer vectors for display.
    pub fn display_key_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.key.rows())
            .map(|i| primitive_integer_vector(self.key.row(i)))
            .collect()
    }
}

pub struct Lattice {
    arrangement: Arrangement,
    edges: Vec<Edge>,
    mobius: Vec<BigInt>,
    /// For each edge, the indices of the strictly smaller edges (V < W,
    /// i.e. V strictly contains W as a subspace), ambient included.
    below: Vec<Vec<usize>>,
    char_polys: Vec<SparsePoly>,
    /// q(1) where char_poly = (t-1) q; None for the ambient edge.
    pce: Vec<Option<BigInt>>,
}

/// Enumerate all distinct intersections by rank-increasing BFS: intersect
/// each frontier edge with each hyperplane not already containing it and
/// deduplicate by canonical key. Mobius values come from the recursion over
/// lower intervals.
pub fn build_lattice(arrangement: &Arrangement) -> Lattice {
    Lattice::build(arrangement.clone())
}

impl Lattice {
    pub fn build(arrangement: Arrangement) -> Lattice {
        let n = arrangement.dim();
        let normals: Vec<Vec<BigRational>> = arrangement
            .hyperplanes()
            .iter()
            .map(|h| h.normal.clone())
            .collect();

        let make_edge = |key: RatMatrix| -> Edge {
            let j_set: BTreeSet<usize> = normals
                .iter()
                .enumerate()
                .filter(|(_, a)| key.row_space_contains(a).expect("width match"))
                .map(|(i, _)| i)
                .collect();
            let jf = (0..arrangement.factors())
                .map(|j| {
                    j_set
                        .iter()
                        .copied()
                        .filter(|&i| arrangement.hyperplanes()[i].mults[j] > 0)
                        .collect()
                })
                .collect();
            Edge {
                rank: key.rows(),
                key,
                j_set,
                jf,
            }
        };

        let ambient_key = RatMatrix::zero(0, n);
        let mut seen: HashMap<Vec<Vec<BigRational>>, usize> = HashMap::new();
        let mut edges = vec![make_edge(ambient_key)];
        seen.insert(edges[0].key.row_vecs(), 0);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &w in &frontier {
                for (i, normal) in normals.iter().enumerate() {
                    if edges[w].j_set.contains(&i) {
                        continue;
                    }
                    let stacked = edges[w]
                        .key
                        .stacked(std::slice::from_ref(normal))
                        .expect("width match");
                    let key = stacked.row_space_basis();
                    let rows = key.row_vecs();
                    if let std::collections::hash_map::Entry::Vacant(slot) = seen.entry(rows) {
                        let idx = edges.len();
                        edges.push(make_edge(key));
                        slot.insert(idx);
                        next.push(idx);
                    }
                }
            }
            frontier = next;
        }

        edges.sort_by(|a, b| {
            a.rank
                .cmp(&b.rank)
                .then_with(|| a.key.row_vecs().cmp(&b.key.row_vecs()))
        });

        let below: Vec<Vec<usize>> = edges
            .iter()
            .map(|w| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| v.j_set.len() < w.j_set.len() && v.j_set.is_subset(&w.j_set))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();

        let mut mobius: Vec<BigInt> = vec![BigInt::zero(); edges.len()];
        for w in 0..edges.len() {
            if edges[w].rank == 0 {
                mobius[w] = BigInt::one();
            } else {
                let sum: BigInt = below[w].iter().map(|&v| mobius[v].clone()).sum();
                mobius[w] = -sum;
            }
        }

        let char_polys: Vec<SparsePoly> = (0..edges.len())
            .map(|w| {
                let mut p = SparsePoly::zero(1);
                for v in below[w].iter().copied().chain(std::iter::once(w)) {
                    let exp = (edges[w].rank - edges[v].rank) as u32;
                    let term = SparsePoly::monomial_term(1, vec![exp])
                        .scale(&BigRational::from_integer(mobius[v].clone()));
                    p = p.add(&term);
                }
                p
            })
            .collect();

        let t_minus_1 = LinearForm::from_i64(&[1], -1).expect("nonzero form");
        let pce: Vec<Option<BigInt>> = char_polys
            .iter()
            .zip(&edges)
            .map(|(chi, e)| {
                if e.rank == 0 {
                    return None;
                }
                let (ok, q) = chi.divides_linear(&t_minus_1);
                assert!(ok, "(t-1) must divide the characteristic polynomial of a central arrangement");
                let val = q
                    .expect("quotient present")
                    .eval(&[BigRational::one()])
                    .expect("arity 1");
                assert!(val.denom().is_one());
                Some(val.numer().clone())
            })
            .collect();

        Lattice {
            arrangement,
            edges,
            mobius,
            below,
            char_polys,
            pce,
        }
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> &Edge {
        &self.edges[idx]
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// mu(ambient, W).
    pub fn mobius(&self, idx: usize) -> &BigInt {
        &self.mobius[idx]
    }

    /// Indices of edges strictly below (strictly containing) the given edge,
    /// ambient included.
    pub fn below(&self, idx: usize) -> &[usize] {
        &self.below[idx]
    }

    pub fn find_edge(&self, key: &RatMatrix) -> Option<usize> {
        let rows = key.row_vecs();
        self.edges.iter().position(|e| e.key.row_vecs() == rows)
    }

    /// Index of the minimal edge (the intersection of all hyperplanes);
    /// for essential arrangements this is the origin.
    pub fn minimal_edge(&self) -> usize {
        let max_rank = self.edges.iter().map(|e| e.rank).max().unwrap_or(0);
        self.edges
            .iter()
            .position(|e| e.rank == max_rank && e.j_set.len() == self.arrangement.num_hyperplanes())
            .expect("the intersection of all hyperplanes is an edge")
    }

    /// Characteristic polynomial of the essentialized localization D^W
    /// at the given edge (degree = rank W).
    pub fn char_poly(&self, idx: usize) -> &SparsePoly {
        &self.char_polys[idx]
    }

    /// Characteristic polynomial of the whole arrangement (degree n).
    pub fn char_poly_global(&self) -> SparsePoly {
        let n = self.arrangement.dim();
        let mut p = SparsePoly::zero(1);
        for (w, edge) in self.edges.iter().enumerate() {
            let term = SparsePoly::monomial_term(1, vec![(n - edge.rank) as u32])
                .scale(&BigRational::from_integer(self.mobius[w].clone()));
            p = p.add(&term);
        }
        p
    }

    /// Euler characteristic of the projective complement of D^W:
    /// q(1) where char_poly(W) = (t-1) q(t). Errors on the ambient edge.
    pub fn proj_complement_euler(&self, idx: usize) -> Result<BigInt> {
        self.pce[idx]
            .clone()
            .ok_or_else(|| ArrError::Validation("rank(W) >= 1 required".into()))
    }

    /// Density of an edge: the localization D_W is irreducible, detected by
    /// a nonzero projective-complement Euler characteristic. Multiplicities
    /// play no role (the lattice only sees the support).
    pub fn is_dense(&self, idx: usize) -> bool {
        matches!(&self.pce[idx], Some(v) if !v.is_zero())
    }

    /// Indices of the dense edges in canonical order.
    pub fn dense_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.is_dense(i)).collect()
    }

    /// Pullback orders of the factors along the dense-edge blowup: for each
    /// factor j, the sum of the j-multiplicities of the hyperplanes
    /// containing W.
    pub fn mult_vector(&self, idx: usize) -> Vec<u64> {
        let mut a = vec![0u64; self.arrangement.factors()];
        for &i in &self.edges[idx].j_set {
            for (aj, m) in a.iter_mut().zip(&self.arrangement.hyperplanes()[i].mults) {
                *aj += m;
            }
        }
        a
    }

    /// Log canonical threshold of a reduced arrangement:
    /// min over dense edges of rank(W) / |J(W)|.
    pub fn lct(&self) -> Result<BigRational> {
        if !self.arrangement.is_reduced() {
            return Err(ArrError::NonReduced("lct"));
        }
        if self.arrangement.is_empty() {
            return Err(ArrError::EmptyArrangement("lct"));
        }
        self.dense_edges()
            .into_iter()
            .map(|w| {
                BigRational::new(
                    BigInt::from(self.edges[w].rank),
                    BigInt::from(self.edges[w].j_set.len()),
                )
            })
            .min()
            .ok_or_else(|| ArrError::Internal("no dense edges in a nonempty arrangement".into()))
    }
}
