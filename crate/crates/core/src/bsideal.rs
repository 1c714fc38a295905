//! Symbolic Bernstein-Sato outputs read off the intersection lattice: R_W
//! root sets and their union for free arrangements, Maisonobe's principal
//! generator, lower-bound zero-locus components for complete factorizations,
//! relative characteristic-cycle components with multiplicities, and the
//! diagonal specialization s_j -> s.
//!
//! Root multiplicities are never reported: the underlying statements are
//! set-level, so outputs are sets of rationals plus the factor multiset where
//! a generator is available.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, BigRational, Signed, Zero};

use crate::arrangement::FactorizationKind;
use crate::error::{ArrError, Result};
use crate::exactmath::LinearForm;
use crate::lattice::Lattice;

/// A multiset of linear forms, e.g. the factors of a principal generator.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolicProduct {
    /// form -> multiplicity
    pub factors: BTreeMap<LinearForm, u32>,
}

impl SymbolicProduct {
    pub fn push(&mut self, form: LinearForm) {
        *self.factors.entry(form).or_insert(0) += 1;
    }

    pub fn iter_with_multiplicity(&self) -> impl Iterator<Item = (&LinearForm, u32)> {
        self.factors.iter().map(|(f, &m)| (f, m))
    }

    pub fn total_factors(&self) -> u32 {
        self.factors.values().sum()
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(f, &m)| {
                if m == 1 {
                    format!("({})", f.display_s())
                } else {
                    format!("({})^{}", f.display_s(), m)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("")
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "factors": self.factors.iter().map(|(f, m)| {
                serde_json::json!({ "form": f, "multiplicity": m })
            }).collect::<Vec<_>>(),
            "display": self.display(),
        })
    }
}

/// One component of the relative characteristic cycle: the conormal of a
/// dense edge times the hyperplane sum_{j in J(W,f)} s_j + shift = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CCComponent {
    /// Index of the dense edge in the lattice.
    pub edge: usize,
    pub shift: i64,
    /// (-1)^(rank-1) * chi of the projective complement of D^W; always > 0.
    pub multiplicity: BigInt,
    /// The displayed linear form sum_{j in J(W,f)} s_j + shift.
    pub form: Option<LinearForm>,
}

/// Output of the diagonal specialization s_j -> s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalSpecialization {
    /// Specialized one-variable forms with multiplicity.
    pub product: SymbolicProduct,
    /// Root set { -c_0 / sum(c_j) }.
    pub roots: BTreeSet<BigRational>,
    /// Forms whose coefficient sum vanished (empty specialized locus).
    pub dropped: Vec<LinearForm>,
}

fn require_reduced(lattice: &Lattice, op: &'static str) -> Result<()> {
    if !lattice.arrangement().is_reduced() {
        return Err(ArrError::NonReduced(op));
    }
    Ok(())
}

fn require_complete(lattice: &Lattice, op: &'static str) -> Result<()> {
    if lattice.arrangement().kind() != FactorizationKind::Complete {
        return Err(ArrError::NotComplete(op));
    }
    Ok(())
}

/// The arithmetic progression R_W of a dense edge of a reduced arrangement:
/// { -(rank(W)+j)/|J(W)| : j = 0, ..., 2(|J(W)| - rank(W)) }.
pub fn rw_set(lattice: &Lattice, edge: usize) -> Result<BTreeSet<BigRational>> {
    require_reduced(lattice, "rw_set")?;
    if !lattice.is_dense(edge) {
        return Err(ArrError::NotDense);
    }
    let rank = lattice.edge(edge).rank() as i64;
    let j = lattice.edge(edge).j_set().len() as i64;
    Ok((0..=2 * (j - rank))
        .map(|k| BigRational::new(BigInt::from(-(rank + k)), BigInt::from(j)))
        .collect())
}

/// Union of R_W over all dense edges: the root set of the b-function when
/// the arrangement is free, and a conjectural upper-bound set otherwise.
/// Every root lies in the open interval (-2, 0); asserted on each output.
pub fn free_roots(lattice: &Lattice) -> Result<BTreeSet<BigRational>> {
    require_reduced(lattice, "free_roots")?;
    if lattice.arrangement().is_empty() {
        return Err(ArrError::EmptyArrangement("free_roots"));
    }
    let mut roots = BTreeSet::new();
    for w in lattice.dense_edges() {
        roots.extend(rw_set(lattice, w)?);
    }
    let zero = BigRational::zero();
    let minus_two = BigRational::from_integer(BigInt::from(-2));
    assert!(
        roots.iter().all(|r| *r > minus_two && *r < zero),
        "free roots must lie in (-2, 0)"
    );
    Ok(roots)
}

/// Coefficient vector with a 1 for each factor owning a hyperplane of J(W).
fn indicator_form(lattice: &Lattice, edge: usize, constant: i64) -> Result<LinearForm> {
    let r = lattice.arrangement().factors();
    let mut coeffs = vec![BigInt::zero(); r];
    for j in lattice.edge(edge).factor_set() {
        coeffs[j] = BigInt::from(1);
    }
    LinearForm::new(coeffs, BigInt::from(constant))
}

/// Maisonobe's generator of the Bernstein-Sato ideal of a free arrangement
/// with its complete factorization:
/// prod over dense W, j = 0..2(|J(W)|-rank(W)) of (sum_{i in J(W)} s_i + rank(W) + j).
/// Freeness itself is the caller's hypothesis (certificate or explicit flag).
pub fn maisonobe_generator(lattice: &Lattice) -> Result<SymbolicProduct> {
    require_reduced(lattice, "maisonobe_generator")?;
    require_complete(lattice, "maisonobe_generator")?;
    let mut product = SymbolicProduct::default();
    for w in lattice.dense_edges() {
        let rank = lattice.edge(w).rank() as i64;
        let j = lattice.edge(w).j_set().len() as i64;
        for k in 0..=2 * (j - rank) {
            product.push(indicator_form(lattice, w, rank + k)?);
        }
    }
    Ok(product)
}

/// The components (sum_{j in J(W,f)} s_j + rank(W) + k = 0), k = 0..|J(W,f)|-1,
/// of the Bernstein-Sato zero locus guaranteed for every dense edge of a
/// complete factorization (non-reduced allowed). Deduplicated primitive forms
/// in canonical order.
pub fn lower_bound_components(lattice: &Lattice) -> Result<Vec<LinearForm>> {
    require_complete(lattice, "lower_bound_components")?;
    let mut set = BTreeSet::new();
    for w in lattice.dense_edges() {
        let rank = lattice.edge(w).rank() as i64;
        let jwf = lattice.edge(w).factor_set().len() as i64;
        for k in 0..jwf {
            set.insert(indicator_form(lattice, w, rank + k)?);
        }
    }
    Ok(set.into_iter().collect())
}

/// Relative characteristic-cycle components for the requested shift range:
/// for each dense W and each l, the conormal T*_W X times
/// (sum_{j in J(W,f)} s_j + l = 0) with multiplicity
/// (-1)^(rank(W)-1) * chi(P(X/W) minus the projectivized D^W). The k >> l
/// stabilization is not modeled; this is the symbolic statement only.
pub fn cc_components(
    lattice: &Lattice,
    shifts: std::ops::RangeInclusive<i64>,
) -> Result<Vec<CCComponent>> {
    require_complete(lattice, "cc_components")?;
    let mut out = Vec::new();
    for w in lattice.dense_edges() {
        let rank = lattice.edge(w).rank();
        let pce = lattice.proj_complement_euler(w)?;
        let multiplicity = if (rank - 1).is_multiple_of(2) { pce } else { -pce };
        assert!(
            multiplicity.is_positive(),
            "dense-edge characteristic-cycle multiplicity must be positive"
        );
        for l in shifts.clone() {
            let form = indicator_form(lattice, w, l).ok();
            out.push(CCComponent {
                edge: w,
                shift: l,
                multiplicity: multiplicity.clone(),
                form,
            });
        }
    }
    Ok(out)
}

/// Diagonal specialization s |-> (s, ..., s): each form
/// sum c_j s_j + c_0 maps to (sum c_j) s + c_0 with root -c_0 / sum c_j.
/// Forms with zero coefficient sum and nonzero constant specialize to the
/// empty locus and are dropped (reported); a fully zero form is an error.
pub fn specialize_diagonal<'a, I>(forms: I) -> Result<DiagonalSpecialization>
where
    I: IntoIterator<Item = (&'a LinearForm, u32)>,
{
    let mut product = SymbolicProduct::default();
    let mut roots = BTreeSet::new();
    let mut dropped = Vec::new();
    for (form, mult) in forms {
        let sum = form.coeff_sum();
        if sum.is_zero() {
            if form.constant().is_zero() {
                return Err(ArrError::Validation(
                    "zero form under diagonal specialization".into(),
                ));
            }
            dropped.push(form.clone());
            continue;
        }
        let specialized = LinearForm::new(vec![sum.clone()], form.constant().clone())?;
        for _ in 0..mult {
            product.push(specialized.clone());
        }
        roots.insert(BigRational::new(-form.constant().clone(), sum));
    }
    Ok(DiagonalSpecialization {
        product,
        roots,
        dropped,
    })
}

/// Convenience for a plain sequence of forms (multiplicity 1 each).
pub fn specialize_diagonal_forms(forms: &[LinearForm]) -> Result<DiagonalSpecialization> {
    specialize_diagonal(forms.iter().map(|f| (f, 1)))
}
