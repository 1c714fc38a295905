//! Integer linear forms `c_1 v_1 + ... + c_k v_k + c_0`.
//!
//! These are the atoms of Bernstein-Sato zero-locus components, Maisonobe
//! factors, and zeta denominators (variables s_1..s_r), and double as the
//! defining forms of hyperplanes (variables x_1..x_n, zero constant) for
//! divisibility tests. Stored primitive: the gcd of all entries is 1 and the
//! first nonzero coefficient is positive (the constant decides the sign when
//! all coefficients vanish).

use num::{bigint::Sign, BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;

use super::rational::int_sign;
use crate::error::{ArrError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coeffs: Vec<BigInt>,
    constant: BigInt,
}

impl LinearForm {
    /// Canonicalize raw integer data. Errors on the zero form.
    pub fn new(coeffs: Vec<BigInt>, constant: BigInt) -> Result<Self> {
        let (form, _) = Self::new_with_scale(coeffs, constant)?;
        Ok(form)
    }

    /// Canonicalize and also return the rational scale `c` with
    /// `raw = c * canonical`. Callers dividing rational functions use the
    /// scale to keep the overall function unchanged.
    pub fn new_with_scale(coeffs: Vec<BigInt>, constant: BigInt) -> Result<(Self, BigRational)> {
        let mut gcd = BigInt::zero();
        for c in coeffs.iter().chain(std::iter::once(&constant)) {
            gcd = num::integer::gcd(gcd, c.clone());
        }
        if gcd.is_zero() {
            return Err(ArrError::Validation("zero linear form".into()));
        }
        let lead_sign = coeffs
            .iter()
            .map(int_sign)
            .find(|&s| s != 0)
            .unwrap_or_else(|| int_sign(&constant));
        let divisor = if lead_sign < 0 { -gcd } else { gcd };
        let form = Self {
            coeffs: coeffs.iter().map(|c| c / &divisor).collect(),
            constant: &constant / &divisor,
        };
        Ok((form, BigRational::from_integer(divisor)))
    }

    /// Clear denominators of a rational vector (zero constant); used for
    /// hyperplane normals. Divisibility by the form is scale-invariant.
    pub fn from_rational_normal(normal: &[BigRational]) -> Result<Self> {
        let mut lcm = BigInt::one();
        for x in normal {
            lcm = num::integer::lcm(lcm, x.denom().clone());
        }
        let coeffs = normal.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        Self::new(coeffs, BigInt::zero())
    }

    pub fn from_i64(coeffs: &[i64], constant: i64) -> Result<Self> {
        Self::new(
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            BigInt::from(constant),
        )
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn constant(&self) -> &BigInt {
        &self.constant
    }

    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |a, c| a + c)
    }

    /// Indices of nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// All coefficients nonnegative and the constant positive: the shape of
    /// every Bernstein-Sato component this crate emits.
    pub fn has_bs_shape(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative()) && self.constant.is_positive()
    }

    /// Merge variables: coefficient k of the image is the sum over the
    /// preimage `{j : mapping[j] = k}`. Returns the canonical form plus the
    /// scale lost to re-primitivization, or Ok(None) when the merged form is
    /// identically zero-coefficient with zero constant is impossible, but a
    /// merged form can only vanish entirely if the original was zero; callers
    /// treat forms with zero coefficient sum downstream.
    pub fn merge_variables(
        &self,
        mapping: &[usize],
        new_arity: usize,
    ) -> Result<(Self, BigRational)> {
        if mapping.len() != self.coeffs.len() {
            return Err(ArrError::Dimension(
                "variable mapping length != form arity".into(),
            ));
        }
        let mut coeffs = vec![BigInt::zero(); new_arity];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[mapping[j]] += c;
        }
        Self::new_with_scale(coeffs, self.constant.clone())
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.coeffs.len() {
            return Err(ArrError::Dimension("evaluation point arity".into()));
        }
        let mut acc = BigRational::from_integer(self.constant.clone());
        for (c, x) in self.coeffs.iter().zip(point) {
            acc += BigRational::from_integer(c.clone()) * x;
        }
        Ok(acc)
    }

    /// Render with the given variable names, e.g. `s_1+2s_3+4` or `3s+2`.
    pub fn display(&self, names: &dyn Fn(usize) -> String) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.sign() == Sign::Minus {
                    out.push('-');
                }
            } else {
                out.push(if c.sign() == Sign::Minus { '-' } else { '+' });
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&names(i));
        }
        if !self.constant.is_zero() || out.is_empty() {
            if out.is_empty() {
                out.push_str(&self.constant.to_string());
            } else {
                out.push(if self.constant.is_negative() { '-' } else { '+' });
                out.push_str(&self.constant.abs().to_string());
            }
        }
        out
    }

    /// Default rendering in the Bernstein-Sato variables: `s` when the arity
    /// is 1, `s_1..s_r` otherwise.
    pub fn display_s(&self) -> String {
        if self.arity() == 1 {
            self.display(&|_| "s".to_string())
        } else {
            self.display(&|i| format!("s_{}", i + 1))
        }
    }
}

/// JSON shape pinned by the spec: `{"coeffs": [...], "const": c}`.
impl Serialize for LinearForm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("LinearForm", 3)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.serialize_field("const", &self.constant.to_string())?;
        st.serialize_field("display", &self.display_s())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_primitive_and_sign() {
        let f = LinearForm::from_i64(&[-2, -4], -6).unwrap();
        assert_eq!(f, LinearForm::from_i64(&[1, 2], 3).unwrap());
        let (_, scale) = LinearForm::new_with_scale(
            vec![BigInt::from(-2), BigInt::from(-4)],
            BigInt::from(-6),
        )
        .unwrap();
        assert_eq!(scale, BigRational::from_integer(BigInt::from(-2)));
    }

    #[test]
    fn zero_form_rejected() {
        assert!(LinearForm::from_i64(&[0, 0], 0).is_err());
    }

    #[test]
    fn constant_only_form_normalizes_positive() {
        let f = LinearForm::from_i64(&[0], -3).unwrap();
        assert_eq!(f, LinearForm::from_i64(&[0], 1).unwrap());
    }

    #[test]
    fn display_forms() {
        assert_eq!(LinearForm::from_i64(&[1, 1], 2).unwrap().display_s(), "s_1+s_2+2");
        assert_eq!(LinearForm::from_i64(&[3], 2).unwrap().display_s(), "3s+2");
        assert_eq!(
            LinearForm::from_i64(&[1, -2, 0], 0).unwrap().display_s(),
            "s_1-2s_2"
        );
    }

    #[test]
    fn merge_variables_sums_coefficients() {
        let f = LinearForm::from_i64(&[1, 1, 1, 1], 3).unwrap();
        let (g, scale) = f.merge_variables(&[0, 0, 0, 0], 1).unwrap();
        assert_eq!(g, LinearForm::from_i64(&[4], 3).unwrap());
        assert_eq!(scale, BigRational::from_integer(BigInt::one()));
    }
}
