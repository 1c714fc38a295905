//! Data model for central hyperplane arrangements: parsing, validation, and
//! the structural operations (essentialization, localization, restriction,
//! decomposition into irreducible factors).
//!
//! An arrangement is a set of hyperplanes through the origin of C^n, each
//! carrying a vector of multiplicities, one entry per factor of the defining
//! polynomial f = prod_j f_j. Normals are stored in monic canonical form
//! (first nonzero coordinate 1); proportional input normals are merged by
//! summing their multiplicity vectors. Hyperplanes are kept sorted so every
//! downstream output is deterministic.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, Zero};

use crate::error::{ArrError, Result};
use crate::exactmath::{monic_vector, parse_rational, primitive_integer_vector, RatMatrix, Rational};
use crate::lattice::Edge;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    /// Monic canonical normal vector (first nonzero coordinate is 1).
    pub normal: Vec<Rational>,
    /// Multiplicity of this hyperplane in each factor; not all zero.
    pub mults: Vec<u64>,
}

impl Hyperplane {
    pub fn total_mult(&self) -> u64 {
        self.mults.iter().sum()
    }

    /// Primitive integer form of the normal for display.
    pub fn display_normal(&self) -> Vec<BigInt> {
        primitive_integer_vector(&self.normal)
    }
}

/// How the factorization relates to the hyperplanes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorizationKind {
    /// Every factor is a single hyperplane counted once (each column of the
    /// multiplicity matrix has exactly one nonzero entry, equal to 1).
    Complete,
    /// One factor: f itself.
    Single,
    General,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    factors: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    /// Validate, canonicalize, merge proportional normals, and sort.
    pub fn new(
        dim: usize,
        factors: usize,
        hyperplanes: Vec<(Vec<Rational>, Vec<u64>)>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(ArrError::Validation("ambient dimension n = 0".into()));
        }
        if factors == 0 {
            return Err(ArrError::Validation("factor count r = 0".into()));
        }
        let mut merged: BTreeMap<Vec<Rational>, Vec<u64>> = BTreeMap::new();
        for (idx, (normal, mults)) in hyperplanes.into_iter().enumerate() {
            if normal.len() != dim {
                return Err(ArrError::Validation(format!(
                    "hyperplane {idx}: normal has {} coordinates, expected {dim}",
                    normal.len()
                )));
            }
            let Some(monic) = monic_vector(&normal) else {
                return Err(ArrError::Validation(format!(
                    "hyperplane {idx}: zero normal vector"
                )));
            };
            if mults.len() != factors {
                return Err(ArrError::Validation(format!(
                    "hyperplane {idx}: {} multiplicities, expected {factors}",
                    mults.len()
                )));
            }
            if mults.iter().all(|&m| m == 0) {
                return Err(ArrError::Validation(format!(
                    "hyperplane {idx}: multiplicity vector is all zero"
                )));
            }
            let entry = merged.entry(monic).or_insert_with(|| vec![0; factors]);
            for (e, m) in entry.iter_mut().zip(&mults) {
                *e += m;
            }
        }
        Ok(Self {
            dim,
            factors,
            hyperplanes: merged
                .into_iter()
                .map(|(normal, mults)| Hyperplane { normal, mults })
                .collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// All total multiplicities equal to 1.
    pub fn is_reduced(&self) -> bool {
        self.hyperplanes.iter().all(|h| h.total_mult() == 1)
    }

    /// Total degree of f: sum of all multiplicities.
    pub fn degree(&self) -> u64 {
        self.hyperplanes.iter().map(Hyperplane::total_mult).sum()
    }

    pub fn kind(&self) -> FactorizationKind {
        let complete = (0..self.factors).all(|j| {
            let mut owners = self.hyperplanes.iter().filter(|h| h.mults[j] != 0);
            matches!((owners.next(), owners.next()), (Some(h), None) if h.mults[j] == 1)
        });
        if complete {
            FactorizationKind::Complete
        } else if self.factors == 1 {
            FactorizationKind::Single
        } else {
            FactorizationKind::General
        }
    }

    /// Matrix whose rows are the hyperplane normals.
    pub fn normal_matrix(&self) -> RatMatrix {
        let rows: Vec<Vec<Rational>> = self.hyperplanes.iter().map(|h| h.normal.clone()).collect();
        if rows.is_empty() {
            RatMatrix::zero(0, self.dim)
        } else {
            RatMatrix::from_rows(&rows).expect("normals have uniform length")
        }
    }

    pub fn rank(&self) -> usize {
        self.normal_matrix().rank()
    }

    pub fn is_essential(&self) -> bool {
        self.rank() == self.dim
    }

    /// Re-express the normals in a basis of their span. The result is
    /// essential of ambient dimension rank(A); lattice, J-sets, and
    /// multiplicities are untouched.
    pub fn essentialize(&self) -> (Arrangement, usize) {
        let basis = self.normal_matrix().row_space_basis();
        let rank = basis.rows();
        if rank == self.dim {
            return (self.clone(), rank);
        }
        if rank == 0 {
            // empty arrangement: nothing to express, park it in C^1
            let arr = Arrangement {
                dim: 1,
                factors: self.factors,
                hyperplanes: Vec::new(),
            };
            return (arr, 0);
        }
        // transpose of the basis: columns are basis vectors
        let mut tdata = Vec::with_capacity(self.dim * rank);
        for i in 0..self.dim {
            for j in 0..rank {
                tdata.push(basis.at(j, i).clone());
            }
        }
        let t = RatMatrix::new(self.dim, rank, tdata).expect("transpose dims");
        let hyperplanes = self
            .hyperplanes
            .iter()
            .map(|h| {
                let coords = t
                    .linsolve(&h.normal)
                    .expect("dims")
                    .expect("normal lies in the span of the basis");
                (coords, h.mults.clone())
            })
            .collect();
        let arr = Arrangement::new(rank, self.factors, hyperplanes)
            .expect("essentialization preserves validity");
        (arr, rank)
    }

    /// Sub-arrangement of the hyperplanes containing the edge W, in the same
    /// ambient space with multiplicities retained.
    pub fn localize(&self, edge: &Edge) -> Result<Arrangement> {
        self.check_edge(edge)?;
        let hyperplanes = edge
            .j_set()
            .iter()
            .map(|&i| {
                let h = &self.hyperplanes[i];
                (h.normal.clone(), h.mults.clone())
            })
            .collect();
        Arrangement::new(self.dim, self.factors, hyperplanes)
    }

    /// Arrangement of traces H cap W inside W for the hyperplanes H not
    /// containing W; multiplicities of coinciding traces are summed.
    pub fn restrict(&self, edge: &Edge) -> Result<Arrangement> {
        self.check_edge(edge)?;
        self.restrict_unchecked(edge)
    }

    /// Restriction without the (quadratic) edge validity check; used
    /// internally where edges come straight from the lattice.
    pub(crate) fn restrict_unchecked(&self, edge: &Edge) -> Result<Arrangement> {
        self.restrict_subset(edge, &(0..self.hyperplanes.len()).collect())
    }

    /// Traces on the edge subspace of the hyperplanes in `subset` that do not
    /// contain the edge. The zeta recursion restricts localized
    /// sub-arrangements this way without re-indexing them.
    pub(crate) fn restrict_subset(
        &self,
        edge: &Edge,
        subset: &BTreeSet<usize>,
    ) -> Result<Arrangement> {
        let w_dim = self.dim - edge.rank();
        if w_dim == 0 {
            return Err(ArrError::Validation(
                "cannot restrict to a zero-dimensional edge".into(),
            ));
        }
        let w_basis = edge.key().kernel_basis();
        debug_assert_eq!(w_basis.len(), w_dim);
        let mut hyperplanes = Vec::new();
        for &i in subset {
            if edge.j_set().contains(&i) {
                continue;
            }
            let h = &self.hyperplanes[i];
            let trace: Vec<Rational> = w_basis
                .iter()
                .map(|w| {
                    h.normal
                        .iter()
                        .zip(w)
                        .map(|(a, b)| a * b)
                        .fold(Rational::zero(), |acc, x| acc + x)
                })
                .collect();
            debug_assert!(trace.iter().any(|x| !x.is_zero()));
            hyperplanes.push((trace, h.mults.clone()));
        }
        Arrangement::new(w_dim, self.factors, hyperplanes)
    }

    /// Split an essential arrangement into its irreducible factors.
    ///
    /// A greedy basis of the linear matroid of normals is fixed; every
    /// non-basis normal yields its fundamental circuit by solving against the
    /// basis, and a union-find over circuit supports produces the blocks.
    /// Each block is re-essentialized. The returned sequence is a singleton
    /// iff the arrangement is irreducible.
    pub fn decompose(&self) -> Result<Vec<Arrangement>> {
        if !self.is_essential() {
            return Err(ArrError::NotEssential("decompose"));
        }
        Ok(self
            .decompose_index_blocks()
            .into_iter()
            .map(|block| {
                let hyps = block
                    .iter()
                    .map(|&i| {
                        let h = &self.hyperplanes[i];
                        (h.normal.clone(), h.mults.clone())
                    })
                    .collect();
                let sub = Arrangement::new(self.dim, self.factors, hyps)
                    .expect("block of a valid arrangement is valid");
                sub.essentialize().0
            })
            .collect())
    }

    /// Connected components of the matroid of normals, as sorted index sets
    /// ordered by smallest member. Does not require essentiality.
    pub fn decompose_index_blocks(&self) -> Vec<Vec<usize>> {
        let p = self.hyperplanes.len();
        let mut uf = UnionFind::new(p);
        let mut basis_rows: Vec<Vec<Rational>> = Vec::new();
        let mut basis_idx: Vec<usize> = Vec::new();
        for (i, h) in self.hyperplanes.iter().enumerate() {
            let basis_mat = if basis_rows.is_empty() {
                RatMatrix::zero(0, self.dim)
            } else {
                RatMatrix::from_rows(&basis_rows).expect("uniform")
            };
            let stacked = basis_mat
                .stacked(std::slice::from_ref(&h.normal))
                .expect("uniform width");
            if stacked.rank() > basis_rows.len() {
                basis_rows.push(h.normal.clone());
                basis_idx.push(i);
            } else {
                // fundamental circuit: i together with the support of the
                // unique representation of its normal in the basis
                let mut tdata = Vec::with_capacity(self.dim * basis_rows.len());
                for row in 0..self.dim {
                    for b in &basis_rows {
                        tdata.push(b[row].clone());
                    }
                }
                let t = RatMatrix::new(self.dim, basis_rows.len(), tdata).expect("dims");
                let coords = t
                    .linsolve(&h.normal)
                    .expect("dims")
                    .expect("dependent normal lies in basis span");
                for (k, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        uf.unite(i, basis_idx[k]);
                    }
                }
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..p {
            blocks.entry(uf.find(i)).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = blocks.into_values().collect();
        out.sort_by_key(|b| b[0]);
        out
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        Ok(self.decompose()?.len() == 1)
    }

    /// The reduced divisor: same support, every total multiplicity 1, r = 1.
    pub fn reduce(&self) -> Arrangement {
        let hyperplanes = self
            .hyperplanes
            .iter()
            .map(|h| (h.normal.clone(), vec![1u64]))
            .collect();
        Arrangement::new(self.dim, 1, hyperplanes).expect("reduction of valid arrangement")
    }

    /// Arrangement without hyperplane `idx` (the deletion A minus H).
    pub fn delete(&self, idx: usize) -> Arrangement {
        let hyperplanes = self
            .hyperplanes
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, h)| (h.normal.clone(), h.mults.clone()))
            .collect();
        Arrangement::new(self.dim, self.factors, hyperplanes)
            .expect("deletion of valid arrangement")
    }

    /// The canonical complete factorization refining this one: every copy of
    /// every hyperplane gets its own factor. Returns the refined arrangement
    /// together with the map new factor index -> old factor index. For an
    /// already complete factorization this is the identity refinement.
    pub fn complete_refinement(&self) -> (Arrangement, Vec<usize>) {
        if self.kind() == FactorizationKind::Complete {
            return (self.clone(), (0..self.factors).collect());
        }
        let new_r = self.degree() as usize;
        let mut mapping = Vec::with_capacity(new_r);
        let mut hyperplanes = Vec::with_capacity(self.hyperplanes.len());
        let mut next_col = 0usize;
        for h in &self.hyperplanes {
            let mut mults = vec![0u64; new_r];
            for (j, &m) in h.mults.iter().enumerate() {
                for _ in 0..m {
                    mults[next_col] = 1;
                    mapping.push(j);
                    next_col += 1;
                }
            }
            hyperplanes.push((h.normal.clone(), mults));
        }
        let arr = Arrangement::new(self.dim, new_r, hyperplanes)
            .expect("refinement of valid arrangement");
        (arr, mapping)
    }

    /// For a complete factorization, the unique factor owning each
    /// hyperplane copy; errors otherwise.
    pub fn owning_factor(&self) -> Result<Vec<usize>> {
        if self.kind() != FactorizationKind::Complete {
            return Err(ArrError::NotComplete("owning_factor"));
        }
        Ok(self
            .hyperplanes
            .iter()
            .map(|h| {
                h.mults
                    .iter()
                    .position(|&m| m != 0)
                    .expect("hyperplane owned by some factor")
            })
            .collect())
    }

    fn check_edge(&self, edge: &Edge) -> Result<()> {
        // J must be exactly the hyperplanes whose normal lies in the key's
        // row space, and the key must match this ambient dimension.
        if edge.key().cols() != self.dim {
            return Err(ArrError::NotAnEdge);
        }
        for (i, h) in self.hyperplanes.iter().enumerate() {
            let inside = edge.key().row_space_contains(&h.normal)?;
            if inside != edge.j_set().contains(&i) {
                return Err(ArrError::NotAnEdge);
            }
        }
        Ok(())
    }

    // ---- parsing and serialization ----

    /// Parse either supported format, sniffing JSON by a leading '{'.
    pub fn parse(text: &str) -> Result<Arrangement> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_plain(text)
        }
    }

    /// Plain format: first line `n r`, then one line per hyperplane
    /// `a_1 .. a_n : m_1 .. m_r` with rational a_i. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn parse_plain(text: &str) -> Result<Arrangement> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (header_no, header) = lines.next().ok_or_else(|| ArrError::Parse {
            line: 1,
            msg: "empty input".into(),
        })?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(ArrError::Parse {
                line: header_no,
                msg: format!("header must be \"n r\", got {header:?}"),
            });
        }
        let dim: usize = parts[0].parse().map_err(|_| ArrError::Parse {
            line: header_no,
            msg: format!("bad dimension {:?}", parts[0]),
        })?;
        let factors: usize = parts[1].parse().map_err(|_| ArrError::Parse {
            line: header_no,
            msg: format!("bad factor count {:?}", parts[1]),
        })?;
        let mut hyperplanes = Vec::new();
        for (line_no, line) in lines {
            let err = |msg: String| ArrError::Parse { line: line_no, msg };
            let (lhs, rhs) = line
                .split_once(':')
                .ok_or_else(|| err("expected \"a_1 .. a_n : m_1 .. m_r\"".into()))?;
            let normal: Vec<Rational> = lhs
                .split_whitespace()
                .map(parse_rational)
                .collect::<Result<_>>()
                .map_err(|e| err(e.to_string()))?;
            if normal.len() != dim {
                return Err(err(format!(
                    "{} coordinates before ':', expected {dim} (affine constants are not accepted)",
                    normal.len()
                )));
            }
            let mults: Vec<u64> = rhs
                .split_whitespace()
                .map(|s| {
                    s.parse::<u64>()
                        .map_err(|_| err(format!("bad multiplicity {s:?}")))
                })
                .collect::<Result<_>>()?;
            hyperplanes.push((normal, mults));
        }
        Arrangement::new(dim, factors, hyperplanes)
    }

    /// JSON format:
    /// `{"dim": n, "factors": r, "hyperplanes": [{"normal": [..], "mults": [..]}]}`
    /// with normals given as `"p/q"` strings (bare integers also accepted).
    pub fn parse_json(text: &str) -> Result<Arrangement> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| ArrError::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        let field = |name: &str| {
            v.get(name)
                .ok_or_else(|| ArrError::Validation(format!("missing field {name:?}")))
        };
        let dim = field("dim")?
            .as_u64()
            .ok_or_else(|| ArrError::Validation("\"dim\" must be a positive integer".into()))?
            as usize;
        let factors = field("factors")?
            .as_u64()
            .ok_or_else(|| ArrError::Validation("\"factors\" must be a positive integer".into()))?
            as usize;
        let hyps = field("hyperplanes")?
            .as_array()
            .ok_or_else(|| ArrError::Validation("\"hyperplanes\" must be an array".into()))?;
        let mut hyperplanes = Vec::with_capacity(hyps.len());
        for (idx, h) in hyps.iter().enumerate() {
            let ctx = |msg: String| ArrError::Validation(format!("hyperplanes[{idx}]: {msg}"));
            let normal_v = h
                .get("normal")
                .and_then(|x| x.as_array())
                .ok_or_else(|| ctx("missing \"normal\" array".into()))?;
            let normal: Vec<Rational> = normal_v
                .iter()
                .map(|x| match x {
                    serde_json::Value::String(s) => parse_rational(s),
                    serde_json::Value::Number(n) if n.is_i64() => {
                        Ok(Rational::from_integer(n.as_i64().unwrap().into()))
                    }
                    _ => Err(ctx(format!("normal entry {x} is not a rational string"))),
                })
                .collect::<Result<_>>()?;
            let mults_v = h
                .get("mults")
                .and_then(|x| x.as_array())
                .ok_or_else(|| ctx("missing \"mults\" array".into()))?;
            let mults: Vec<u64> = mults_v
                .iter()
                .map(|x| {
                    x.as_u64().ok_or_else(|| {
                        ctx(format!("multiplicity {x} is not a nonnegative integer"))
                    })
                })
                .collect::<Result<_>>()?;
            hyperplanes.push((normal, mults));
        }
        Arrangement::new(dim, factors, hyperplanes)
    }

    pub fn to_plain(&self) -> String {
        let mut out = format!("{} {}\n", self.dim, self.factors);
        for h in &self.hyperplanes {
            let coords: Vec<String> = h.display_normal().iter().map(|x| x.to_string()).collect();
            let mults: Vec<String> = h.mults.iter().map(|m| m.to_string()).collect();
            out.push_str(&format!("{} : {}\n", coords.join(" "), mults.join(" ")));
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "dim": self.dim,
            "factors": self.factors,
            "hyperplanes": self.hyperplanes.iter().map(|h| {
                serde_json::json!({
                    "normal": h.display_normal().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "mults": h.mults,
                })
            }).collect::<Vec<_>>(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn unite(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
