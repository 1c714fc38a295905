//! Sparse multivariate polynomials over Q.
//!
//! Terms live in a BTreeMap keyed by exponent vectors under graded
//! lexicographic order, so iteration, display, and serialization are
//! reproducible. No zero coefficients are ever stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

use super::linform::LinearForm;
use super::rational::format_rational;
use crate::error::{ArrError, Result};

/// Exponent vector ordered by (total degree, lex).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    arity: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl SparsePoly {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; arity]), c);
        }
        p
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigRational::one())
    }

    pub fn from_int(arity: usize, c: i64) -> Self {
        Self::constant(arity, BigRational::from_integer(c.into()))
    }

    pub fn var(arity: usize, idx: usize) -> Self {
        Self::monomial_term(arity, {
            let mut e = vec![0; arity];
            e[idx] = 1;
            e
        })
    }

    pub fn monomial_term(arity: usize, exps: Vec<u32>) -> Self {
        assert_eq!(exps.len(), arity);
        let mut p = Self::zero(arity);
        p.terms.insert(Monomial(exps), BigRational::one());
        p
    }

    pub fn from_linear_form(form: &LinearForm) -> Self {
        let arity = form.arity();
        let mut p = Self::constant(arity, BigRational::from_integer(form.constant().clone()));
        for (i, c) in form.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; arity];
                e[i] = 1;
                p.add_term(Monomial(e), BigRational::from_integer(c.clone()));
            }
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// The graded-lex leading term.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = Self::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(exps), ca * cb);
            }
        }
        out
    }

    pub fn mul_linear(&self, form: &LinearForm) -> Self {
        self.mul(&Self::from_linear_form(form))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.arity);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.arity {
            return Err(ArrError::Dimension("evaluation point arity".into()));
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (e, x) in m.0.iter().zip(point) {
                for _ in 0..*e {
                    term *= x;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitute `var := sum_j repl[j] * x_j + constant` where `repl[var]`
    /// must be zero. Used to restrict polynomials to a hyperplane.
    pub fn subst_var_linear(
        &self,
        var: usize,
        repl: &[BigRational],
        constant: &BigRational,
    ) -> Self {
        assert_eq!(repl.len(), self.arity);
        assert!(repl[var].is_zero());
        let mut repl_poly = Self::constant(self.arity, constant.clone());
        for (j, c) in repl.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; self.arity];
                e[j] = 1;
                repl_poly.add_term(Monomial(e), c.clone());
            }
        }
        // group by power of `var`, then Horner in the replacement
        let max_pow = self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0);
        let mut out = Self::zero(self.arity);
        for k in (0..=max_pow).rev() {
            out = out.mul(&repl_poly);
            let mut slice = Self::zero(self.arity);
            for (m, c) in &self.terms {
                if m.0[var] == k {
                    let mut e = m.0.clone();
                    e[var] = 0;
                    slice.add_term(Monomial(e), c.clone());
                }
            }
            out = out.add(&slice);
        }
        out
    }

    /// Merge variables: exponent k of the image is the sum over the preimage.
    pub fn merge_variables(&self, mapping: &[usize], new_arity: usize) -> Self {
        assert_eq!(mapping.len(), self.arity);
        let mut out = Self::zero(new_arity);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; new_arity];
            for (j, &exp) in m.0.iter().enumerate() {
                e[mapping[j]] += exp;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Exact division test by a nonzero linear form.
    ///
    /// True iff `self` vanishes identically on the hyperplane `form = 0`,
    /// detected by eliminating one variable with nonzero coefficient in the
    /// form and checking the remainder; on success the quotient satisfies
    /// `quotient * form = self` exactly.
    pub fn divides_linear(&self, form: &LinearForm) -> (bool, Option<SparsePoly>) {
        assert_eq!(form.arity(), self.arity);
        if self.is_zero() {
            return (true, Some(Self::zero(self.arity)));
        }
        let Some(pivot) = form.coeffs().iter().position(|c| !c.is_zero()) else {
            // constant nonzero form: divides everything, quotient scaled
            let c = BigRational::from_integer(form.constant().clone());
            return (true, Some(self.scale(&c.recip())));
        };
        let c_pivot = BigRational::from_integer(form.coeffs()[pivot].clone());
        // B = form - c_pivot * x_pivot
        let mut b = Self::constant(self.arity, BigRational::from_integer(form.constant().clone()));
        for (j, c) in form.coeffs().iter().enumerate() {
            if j != pivot && !c.is_zero() {
                let mut e = vec![0; self.arity];
                e[j] = 1;
                b.add_term(Monomial(e), BigRational::from_integer(c.clone()));
            }
        }
        // coefficients of self as a polynomial in x_pivot
        let deg = self.terms.keys().map(|m| m.0[pivot]).max().unwrap_or(0);
        let mut slices: Vec<SparsePoly> = vec![Self::zero(self.arity); deg as usize + 1];
        for (m, c) in &self.terms {
            let k = m.0[pivot] as usize;
            let mut e = m.0.clone();
            e[pivot] = 0;
            slices[k].add_term(Monomial(e), c.clone());
        }
        // synthetic division from the top coefficient down
        let mut quotient_slices: Vec<SparsePoly> = vec![Self::zero(self.arity); deg as usize];
        let mut carry = Self::zero(self.arity);
        for k in (1..=deg as usize).rev() {
            let qk = slices[k].add(&carry).scale(&c_pivot.recip());
            carry = qk.mul(&b).neg();
            quotient_slices[k - 1] = qk;
        }
        let remainder = slices[0].add(&carry);
        if !remainder.is_zero() {
            return (false, None);
        }
        let mut q = Self::zero(self.arity);
        for (k, slice) in quotient_slices.iter().enumerate() {
            for (m, c) in &slice.terms {
                let mut e = m.0.clone();
                e[pivot] = k as u32;
                q.add_term(Monomial(e), c.clone());
            }
        }
        (true, Some(q))
    }

    /// Coefficients `[c_0, c_1, ...]` of a univariate polynomial.
    pub fn univariate_coeffs(&self) -> Vec<BigRational> {
        assert_eq!(self.arity, 1);
        let deg = self.total_degree() as usize;
        let mut out = vec![BigRational::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.0[0] as usize] = c.clone();
        }
        out
    }

    /// Render with the given variable namer; terms in descending graded-lex
    /// order so univariate polynomials read naturally.
    pub fn display(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let neg = c < &BigRational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let is_const_term = m.degree() == 0;
            if !mag.is_one() || is_const_term {
                out.push_str(&format_rational(&mag));
                if !is_const_term {
                    out.push('*');
                }
            }
            let mut first = true;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    out.push('*');
                }
                first = false;
                out.push_str(&names(i));
                if e > 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }

    /// Integer content: only meaningful when all coefficients are integers.
    pub fn integer_coeff(&self, exps: &[u32]) -> Option<BigInt> {
        let c = self.coeff(exps);
        c.denom().is_one().then(|| c.numer().clone())
    }
}
