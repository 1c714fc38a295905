//! Exact multivariable topological zeta functions of central arrangements,
//! their pole loci, and the strong-monodromy containment check.
//!
//! The zeta function is assembled from the canonical log resolution that
//! blows up dense edges in increasing dimension order, but no resolution is
//! materialized. Over the origin the exceptional P^(m-1) stratifies by
//! projectivized edges P(W); at a generic point of a stratum the transverse
//! structure is the cone over the localized arrangement D_W, so the
//! contribution of the stratum is chi(P(W) stratum) times the fiber zeta of
//! D_W, and the divisor data (a, k) of the blowup come in closed form:
//! a_j = sum of j-multiplicities over the hyperplanes through W and
//! k = rank(W) - 1. Localizations only shrink as edges grow (H containing W'
//! contains W for W inside W'), which is what makes the per-edge memoization
//! sound. The recursion is validated against hand-computed one-blowup
//! resolutions in rank 2 and for four generic planes before deeper lattices
//! are trusted (see the crate tests).

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num::{BigInt, BigRational, One, Zero};
use serde::Serialize;

use crate::arrangement::{Arrangement, FactorizationKind};
use crate::bsideal::lower_bound_components;
use crate::error::{ArrError, Result};
use crate::exactmath::{LinearForm, SparsePoly};
use crate::lattice::{build_lattice, Lattice};

/// Exact rational function: sparse numerator over a multiset of linear
/// denominator factors. Kept reduced (no denominator factor divides the
/// numerator) with primitive, sign-normalized factors; all scalars live in
/// the numerator, so the representation is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunctionInS {
    arity: usize,
    num: SparsePoly,
    den: BTreeMap<LinearForm, u32>,
}

impl RationalFunctionInS {
    pub fn constant(arity: usize, c: BigRational) -> Self {
        Self {
            arity,
            num: SparsePoly::constant(arity, c),
            den: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigRational::one())
    }

    pub fn from_int(arity: usize, c: &BigInt) -> Self {
        Self::constant(arity, BigRational::from_integer(c.clone()))
    }

    /// 1 / form, with the form canonicalized and the lost scale moved into
    /// the numerator.
    pub fn inv_linear(arity: usize, coeffs: Vec<BigInt>, constant: BigInt) -> Result<Self> {
        let (form, scale) = LinearForm::new_with_scale(coeffs, constant)?;
        if form.arity() != arity {
            return Err(ArrError::Dimension("denominator arity".into()));
        }
        let mut den = BTreeMap::new();
        den.insert(form, 1);
        Ok(Self {
            arity,
            num: SparsePoly::constant(arity, BigRational::one() / scale),
            den,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn numerator(&self) -> &SparsePoly {
        &self.num
    }

    /// Denominator factors with orders, in canonical order.
    pub fn denominator(&self) -> impl Iterator<Item = (&LinearForm, u32)> {
        self.den.iter().map(|(f, &o)| (f, o))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cancel denominator factors that divide the numerator.
    fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let forms: Vec<LinearForm> = self.den.keys().cloned().collect();
        for form in forms {
            let mut order = self.den[&form];
            while order > 0 {
                let (ok, quotient) = self.num.divides_linear(&form);
                if !ok {
                    break;
                }
                self.num = quotient.expect("exact quotient");
                order -= 1;
            }
            if order == 0 {
                self.den.remove(&form);
            } else {
                self.den.insert(form, order);
            }
        }
        self
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut den = self.den.clone();
        for (f, o) in &other.den {
            *den.entry(f.clone()).or_insert(0) += o;
        }
        Self {
            arity: self.arity,
            num: self.num.mul(&other.num),
            den,
        }
        .normalize()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut union: BTreeMap<LinearForm, u32> = self.den.clone();
        for (f, o) in &other.den {
            let e = union.entry(f.clone()).or_insert(0);
            *e = (*e).max(*o);
        }
        let scale_to = |num: &SparsePoly, den: &BTreeMap<LinearForm, u32>| -> SparsePoly {
            let mut out = num.clone();
            for (f, o) in &union {
                let have = den.get(f).copied().unwrap_or(0);
                for _ in have..*o {
                    out = out.mul_linear(f);
                }
            }
            out
        };
        Self {
            arity: self.arity,
            num: scale_to(&self.num, &self.den).add(&scale_to(&other.num, &other.den)),
            den: union,
        }
        .normalize()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            arity: self.arity,
            num: self.num.scale(c),
            den: if c.is_zero() {
                BTreeMap::new()
            } else {
                self.den.clone()
            },
        }
    }

    /// Evaluate at a point; None when a denominator factor vanishes there.
    pub fn eval(&self, point: &[BigRational]) -> Result<Option<BigRational>> {
        let mut acc = self.num.eval(point)?;
        for (f, o) in &self.den {
            let v = f.eval(point)?;
            if v.is_zero() {
                return Ok(None);
            }
            for _ in 0..*o {
                acc /= v.clone();
            }
        }
        Ok(Some(acc))
    }

    /// Substitute variables along a merge map (e.g. every s_j to s), then
    /// re-reduce. Denominator factors that coincide after merging combine.
    pub fn merge_variables(&self, mapping: &[usize], new_arity: usize) -> Result<Self> {
        let mut num = self.num.merge_variables(mapping, new_arity);
        let mut den: BTreeMap<LinearForm, u32> = BTreeMap::new();
        for (f, o) in &self.den {
            let (merged, scale) = f.merge_variables(mapping, new_arity)?;
            num = num.scale(&(BigRational::one() / scale.pow(*o as i32)));
            *den.entry(merged).or_insert(0) += o;
        }
        Ok(Self {
            arity: new_arity,
            num,
            den,
        }
        .normalize())
    }

    pub fn display(&self) -> String {
        let names = |i: usize| {
            if self.arity == 1 {
                "s".to_string()
            } else {
                format!("s_{}", i + 1)
            }
        };
        let num = self.num.display(&names);
        if self.den.is_empty() {
            return num;
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(f, o)| {
                if *o == 1 {
                    format!("({})", f.display(&names))
                } else {
                    format!("({})^{}", f.display(&names), o)
                }
            })
            .collect();
        format!("({}) / {}", num, den.join(""))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "numerator": self.num.terms().map(|(m, c)| {
                serde_json::json!({
                    "exponents": m.0,
                    "coeff": crate::exactmath::format_rational(c),
                })
            }).collect::<Vec<_>>(),
            "denominator": self.den.iter().map(|(f, o)| {
                serde_json::json!({ "form": f, "order": o })
            }).collect::<Vec<_>>(),
            "display": self.display(),
        })
    }
}

/// Divisor data of the canonical dense-edge log resolution: for the
/// exceptional divisor of a dense edge W, the pullback orders a_j of the
/// factors and the discrepancy k = rank(W) - 1 (hyperplanes appear with
/// their own multiplicity vector and k = 0).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorDatum {
    /// Index of the dense edge in the lattice.
    pub edge: usize,
    pub a: Vec<u64>,
    pub k: usize,
}

pub fn divisor_data(lattice: &Lattice) -> Vec<DivisorDatum> {
    lattice
        .dense_edges()
        .into_iter()
        .map(|w| DivisorDatum {
            edge: w,
            a: lattice.mult_vector(w),
            k: lattice.edge(w).rank() - 1,
        })
        .collect()
}

/// Candidate pole forms a_W . s + rank(W) over the dense edges, primitive.
pub fn candidate_pole_forms(lattice: &Lattice) -> Vec<LinearForm> {
    let set: BTreeSet<LinearForm> = divisor_data(lattice)
        .into_iter()
        .map(|d| {
            LinearForm::new(
                d.a.iter().map(|&x| BigInt::from(x)).collect(),
                BigInt::from(d.k as u64 + 1),
            )
            .expect("nonzero candidate form")
        })
        .collect();
    set.into_iter().collect()
}

/// Euler characteristic of the projective complement of a central
/// arrangement with at least one hyperplane: q(1) for chi = (t-1) q.
fn beta(arrangement: &Arrangement) -> Result<BigInt> {
    if arrangement.is_empty() {
        return Err(ArrError::EmptyArrangement("beta"));
    }
    let chi = build_lattice(arrangement).char_poly_global();
    let t_minus_1 = LinearForm::from_i64(&[1], -1).expect("nonzero");
    let (ok, q) = chi.divides_linear(&t_minus_1);
    if !ok {
        return Err(ArrError::Internal(
            "(t-1) does not divide a central characteristic polynomial".into(),
        ));
    }
    let v = q.expect("quotient").eval(&[BigRational::one()])?;
    debug_assert!(v.denom().is_one());
    Ok(v.numer().clone())
}

/// Shared state of the fiber recursion over one lattice: localizations are
/// functions of the edge alone, so fibers memoize by edge index.
struct FiberCtx<'a> {
    arrangement: &'a Arrangement,
    lattice: &'a Lattice,
    memo: HashMap<usize, RationalFunctionInS>,
}

impl<'a> FiberCtx<'a> {
    fn new(arrangement: &'a Arrangement, lattice: &'a Lattice) -> Self {
        Self {
            arrangement,
            lattice,
            memo: HashMap::new(),
        }
    }

    /// Zeta contribution of the resolution strata over the edge W, i.e. the
    /// fiber zeta of the essentialized localization at W. The ambient edge
    /// contributes the empty product 1.
    fn fiber(&mut self, w: usize) -> Result<RationalFunctionInS> {
        if let Some(f) = self.memo.get(&w) {
            return Ok(f.clone());
        }
        let r = self.arrangement.factors();
        let result = if self.lattice.edge(w).rank() == 0 {
            RationalFunctionInS::one(r)
        } else {
            let mut acc = RationalFunctionInS::one(r);
            for v in self.irreducible_blocks(w)? {
                let f = self.fiber_irreducible(v)?;
                acc = acc.mul(&f);
            }
            acc
        };
        self.memo.insert(w, result.clone());
        Ok(result)
    }

    /// Decompose the localization D_W into irreducible blocks; each block is
    /// itself the localization at a dense edge, returned by lattice index.
    fn irreducible_blocks(&self, w: usize) -> Result<Vec<usize>> {
        let j: Vec<usize> = self.lattice.edge(w).j_set().iter().copied().collect();
        let hyps: Vec<_> = j
            .iter()
            .map(|&i| {
                let h = &self.arrangement.hyperplanes()[i];
                (h.normal.clone(), h.mults.clone())
            })
            .collect();
        let local = Arrangement::new(self.arrangement.dim(), self.arrangement.factors(), hyps)?;
        let blocks = local.decompose_index_blocks();
        blocks
            .into_iter()
            .map(|block| {
                let rows: Vec<Vec<BigRational>> = block
                    .iter()
                    .map(|&bi| self.arrangement.hyperplanes()[j[bi]].normal.clone())
                    .collect();
                let key = crate::exactmath::RatMatrix::from_rows(&rows)?.row_space_basis();
                self.lattice.find_edge(&key).ok_or_else(|| {
                    ArrError::Internal("block span is not a lattice edge".into())
                })
            })
            .collect()
    }

    /// Fiber zeta of an irreducible localization D_V of rank m:
    /// rank 1 gives 1/(a.s + 1); otherwise the exceptional divisor over the
    /// blown-up V contributes 1/(a.s + m) times the sum over the strata of
    /// P(X/V), which are indexed by the edges U strictly below V with
    /// chi(P(U) stratum) = q(1) of the trace of D_V on U.
    fn fiber_irreducible(&mut self, v: usize) -> Result<RationalFunctionInS> {
        let r = self.arrangement.factors();
        let m = self.lattice.edge(v).rank();
        let a: Vec<BigInt> = self
            .lattice
            .mult_vector(v)
            .into_iter()
            .map(BigInt::from)
            .collect();
        let prefactor = RationalFunctionInS::inv_linear(r, a, BigInt::from(m as u64))?;
        if m == 1 {
            return Ok(prefactor);
        }
        let j_set = self.lattice.edge(v).j_set().clone();
        let mut bracket = RationalFunctionInS::constant(r, BigRational::zero());
        for &u in self.lattice.below(v) {
            let chi = if self.lattice.edge(u).rank() == 0 {
                // the open stratum of P(X/V): the projective complement of
                // the localization itself
                self.lattice.proj_complement_euler(v)?
            } else {
                let trace = self
                    .arrangement
                    .restrict_subset(self.lattice.edge(u), &j_set)?;
                beta(&trace)?
            };
            if chi.is_zero() {
                continue;
            }
            let fiber_u = self.fiber(u)?;
            bracket = bracket.add(&fiber_u.scale(&BigRational::from_integer(chi)));
        }
        Ok(bracket.mul(&prefactor))
    }
}

/// Zeta contribution of the strata over the origin of an essential central
/// arrangement: rank 1 is 1/(a.s + 1), reducible arrangements multiply over
/// their irreducible factors, and irreducible ones recurse over the
/// projectivized edge strata of the first blowup.
pub fn zeta_fiber(arrangement: &Arrangement) -> Result<RationalFunctionInS> {
    if arrangement.is_empty() {
        return Err(ArrError::EmptyArrangement("zeta_fiber"));
    }
    if !arrangement.is_essential() {
        return Err(ArrError::NotEssential("zeta_fiber"));
    }
    let lattice = build_lattice(arrangement);
    let mut ctx = FiberCtx::new(arrangement, &lattice);
    let origin = lattice.minimal_edge();
    debug_assert_eq!(lattice.edge(origin).rank(), arrangement.dim());
    ctx.fiber(origin)
}

/// The topological zeta function of a central arrangement: the stratified
/// sum over all edges W of chi(W deg) * fiber(localization at W), with
/// chi(W deg) the Euler characteristic of the open stratum (1 for the
/// minimal edge, chi of the restriction's affine complement otherwise).
/// For central arrangements every non-minimal stratum has vanishing Euler
/// characteristic, so this collapses to the fiber zeta of the
/// essentialization; the sum is still computed term by term, which doubles
/// as a cross-check on the restriction characteristic polynomials.
pub fn zeta_global(arrangement: &Arrangement) -> Result<RationalFunctionInS> {
    if arrangement.is_empty() {
        return Err(ArrError::EmptyArrangement("zeta_global"));
    }
    let r = arrangement.factors();
    let n = arrangement.dim();
    let lattice = build_lattice(arrangement);
    let mut ctx = FiberCtx::new(arrangement, &lattice);
    let mut total = RationalFunctionInS::constant(r, BigRational::zero());
    for w in 0..lattice.num_edges() {
        let chi = if lattice.edge(w).rank() == n {
            BigInt::one()
        } else if lattice.edge(w).rank() == 0 {
            let v = lattice.char_poly_global().eval(&[BigRational::one()])?;
            debug_assert!(v.denom().is_one());
            v.numer().clone()
        } else {
            let restriction = arrangement.restrict_unchecked(lattice.edge(w))?;
            if restriction.is_empty() {
                BigInt::one()
            } else {
                let v = build_lattice(&restriction)
                    .char_poly_global()
                    .eval(&[BigRational::one()])?;
                debug_assert!(v.denom().is_one());
                v.numer().clone()
            }
        };
        if chi.is_zero() {
            continue;
        }
        let fiber = ctx.fiber(w)?;
        total = total.add(&fiber.scale(&BigRational::from_integer(chi)));
    }
    Ok(total)
}

/// Denominator factors of the reduced form with their orders.
pub fn pole_locus(z: &RationalFunctionInS) -> Vec<(LinearForm, u32)> {
    z.denominator().map(|(f, o)| (f.clone(), o)).collect()
}

/// Substitute s_j -> s_{mapping[j]} and re-reduce.
pub fn specialize_zeta(
    z: &RationalFunctionInS,
    mapping: &[usize],
    new_arity: usize,
) -> Result<RationalFunctionInS> {
    z.merge_variables(mapping, new_arity)
}

/// Merge every variable into one: the single-variable zeta function.
pub fn specialize_zeta_single(z: &RationalFunctionInS) -> Result<RationalFunctionInS> {
    z.merge_variables(&vec![0; z.arity()], 1)
}

#[derive(Debug, Clone, Serialize)]
pub struct PoleMatch {
    pub pole: LinearForm,
    pub order: u32,
    /// The Bernstein-Sato zero-locus component containing this pole, as a
    /// form in the complete refinement's variables.
    pub component: Option<LinearForm>,
}

/// Verdict of the strong-monodromy containment check.
#[derive(Debug, Clone, Serialize)]
pub struct SmcReport {
    /// Whether the input factorization was already complete (direct check)
    /// or the canonical complete refinement plus merge was used
    /// (inclusion semantics of the diagonal specialization).
    pub factorization_complete: bool,
    pub poles: Vec<PoleMatch>,
    pub component_count: usize,
    pub pass: bool,
}

/// Check that every pole of the topological zeta function lies in the
/// Bernstein-Sato zero locus predicted for the complete factorization.
/// The containment is a theorem, so a violation signals an implementation
/// bug and is reported as such by callers (distinct exit code).
pub fn verify_smc(arrangement: &Arrangement) -> Result<SmcReport> {
    let factorization_complete = arrangement.kind() == FactorizationKind::Complete;
    let (refined, mapping) = arrangement.complete_refinement();
    let refined_lattice = build_lattice(&refined);
    let components = lower_bound_components(&refined_lattice)?;
    // image of each component under the merge of refinement variables back
    // to the input factorization's variables
    let mut image: BTreeMap<LinearForm, LinearForm> = BTreeMap::new();
    for c in &components {
        let (merged, _) = c.merge_variables(&mapping, arrangement.factors())?;
        image.entry(merged).or_insert_with(|| c.clone());
    }
    let z = zeta_global(arrangement)?;
    let poles = pole_locus(&z)
        .into_iter()
        .map(|(pole, order)| {
            let component = image.get(&pole).cloned();
            PoleMatch {
                pole,
                order,
                component,
            }
        })
        .collect::<Vec<_>>();
    let pass = poles.iter().all(|p| p.component.is_some());
    Ok(SmcReport {
        factorization_complete,
        poles,
        component_count: components.len(),
        pass,
    })
}
