//! Shared oracles and generators for the integration suites.
//!
//! The oracles here are deliberately independent of the implementation paths
//! they check: the characteristic polynomial comes from Whitney's subset
//! expansion instead of the lattice Mobius recursion, and the decomposition
//! oracle searches bipartitions exhaustively instead of using fundamental
//! circuits.

use std::collections::BTreeSet;

use num::{BigRational, One, Zero};
use rand::Rng;

use arr_core::arrangement::Arrangement;
use arr_core::exactmath::{RatMatrix, Rational, SparsePoly};
use arr_core::lattice::{build_lattice, Lattice};

/// Whitney's theorem for central arrangements:
/// chi_A(t) = sum over subsets S of (-1)^|S| t^(n - rank S).
pub fn whitney_char_poly(a: &Arrangement) -> SparsePoly {
    let p = a.num_hyperplanes();
    assert!(p <= 16, "oracle is exponential in p");
    let n = a.dim();
    let mut chi = SparsePoly::zero(1);
    for mask in 0u32..(1 << p) {
        let rows: Vec<Vec<Rational>> = (0..p)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| a.hyperplanes()[i].normal.clone())
            .collect();
        let rank = if rows.is_empty() {
            0
        } else {
            RatMatrix::from_rows(&rows).unwrap().rank()
        };
        let sign = if mask.count_ones() % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        chi = chi.add(&SparsePoly::monomial_term(1, vec![(n - rank) as u32]).scale(&sign));
    }
    chi
}

fn rank_of(a: &Arrangement, subset: &[usize]) -> usize {
    if subset.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Rational>> = subset
        .iter()
        .map(|&i| a.hyperplanes()[i].normal.clone())
        .collect();
    RatMatrix::from_rows(&rows).unwrap().rank()
}

/// Finest partition of the hyperplane indices under iterated matroid
/// 1-separations: search all bipartitions E1 | E2 with
/// rank(E1) + rank(E2) = rank(E), recursing until no split exists.
pub fn brute_force_blocks(a: &Arrangement) -> Vec<BTreeSet<usize>> {
    fn split(a: &Arrangement, part: &[usize]) -> Vec<BTreeSet<usize>> {
        let k = part.len();
        if k <= 1 {
            return vec![part.iter().copied().collect()];
        }
        let total = rank_of(a, part);
        for mask in 1u32..(1 << (k - 1)) {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (pos, &idx) in part.iter().enumerate() {
                if mask & (1 << pos) != 0 {
                    left.push(idx);
                } else {
                    right.push(idx);
                }
            }
            if rank_of(a, &left) + rank_of(a, &right) == total {
                let mut out = split(a, &left);
                out.extend(split(a, &right));
                return out;
            }
        }
        vec![part.iter().copied().collect()]
    }
    let all: Vec<usize> = (0..a.num_hyperplanes()).collect();
    let mut blocks = split(a, &all);
    blocks.sort();
    blocks
}

/// Random central arrangement with small integer normals.
pub fn random_arrangement<R: Rng>(rng: &mut R, max_dim: usize, max_hyps: usize) -> Arrangement {
    loop {
        let n = rng.gen_range(1..=max_dim);
        let p = rng.gen_range(1..=max_hyps);
        let mut hyps = Vec::new();
        for _ in 0..p {
            let normal: Vec<Rational> = (0..n)
                .map(|_| Rational::from_integer(rng.gen_range(-2i64..=2).into()))
                .collect();
            if normal.iter().all(|x| x.is_zero()) {
                continue;
            }
            hyps.push((normal, vec![1u64]));
        }
        if hyps.is_empty() {
            continue;
        }
        if let Ok(a) = Arrangement::new(n, 1, hyps) {
            return a;
        }
    }
}

/// chi of the open stratum of an edge: 1 for the minimal (origin) stratum,
/// chi_{A^W}(1) otherwise, with the convention A^ambient = A.
pub fn stratum_euler(a: &Arrangement, lattice: &Lattice, w: usize) -> num::BigInt {
    use num::BigInt;
    let rank = lattice.edge(w).rank();
    if rank == a.dim() {
        return BigInt::one();
    }
    let chi = if rank == 0 {
        lattice.char_poly_global()
    } else {
        let restriction = a.restrict(lattice.edge(w)).unwrap();
        build_lattice(&restriction).char_poly_global()
    };
    let v = chi.eval(&[BigRational::one()]).unwrap();
    assert!(v.denom().is_one());
    v.numer().clone()
}

/// Exact rational-function identity by cross multiplication:
/// z == expected_num / prod expected_den without trusting normalization.
pub fn assert_rf_equals_raw(
    z: &arr_core::zeta::RationalFunctionInS,
    expected_num: &SparsePoly,
    expected_den: &[(Vec<i64>, i64)],
) {
    let arity = z.arity();
    let mut lhs = z.numerator().clone();
    for (coeffs, c) in expected_den {
        // multiply by the raw (possibly imprimitive) linear polynomial; going
        // through LinearForm would silently drop its content
        let mut raw = SparsePoly::constant(arity, Rational::from_integer((*c).into()));
        for (j, &cj) in coeffs.iter().enumerate() {
            raw = raw.add(&SparsePoly::var(arity, j).scale(&Rational::from_integer(cj.into())));
        }
        lhs = lhs.mul(&raw);
    }
    let mut rhs = expected_num.clone();
    for (form, order) in z.denominator() {
        for _ in 0..order {
            rhs = rhs.mul(&SparsePoly::from_linear_form(form));
        }
    }
    assert_eq!(lhs, rhs, "rational functions differ");
}
