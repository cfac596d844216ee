//! Two-dimensional and four-dimensional complex states and the oracle
//! matrices.
//!
//! Two-qubit amplitudes are always stored in the order
//! `|00⟩, |01⟩, |10⟩, |11⟩`, i.e. index `2x + y` for `|x⟩⊗|y⟩`. This order is
//! fixed; nothing in the crate permutes it.

use std::f64::consts::FRAC_1_SQRT_2;
use std::ops::Index;

use num_complex::Complex64;

use crate::classical::{apply_f_operator, Bit, BitPair, OneBitFunction};
use crate::{Error, Result, NORM_TOLERANCE};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn check_norm(norm_sq: f64) -> Result<()> {
    if (norm_sq - 1.0).abs() > NORM_TOLERANCE || !norm_sq.is_finite() {
        return Err(Error::Normalization {
            norm_sq,
            tolerance: NORM_TOLERANCE,
        });
    }
    Ok(())
}

/// `a0|0⟩ + a1|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Qubit {
    pub a0: Complex64,
    pub a1: Complex64,
}

impl Qubit {
    /// No normalization check.
    pub const fn raw(a0: Complex64, a1: Complex64) -> Qubit {
        Qubit { a0, a1 }
    }

    pub fn normalized(a0: Complex64, a1: Complex64) -> Result<Qubit> {
        let q = Qubit::raw(a0, a1);
        check_norm(q.norm_sqr())?;
        Ok(q)
    }

    pub const fn zero() -> Qubit {
        Qubit::raw(ONE, ZERO)
    }

    pub const fn one() -> Qubit {
        Qubit::raw(ZERO, ONE)
    }

    pub fn basis(bit: Bit) -> Qubit {
        match bit {
            Bit::Zero => Qubit::zero(),
            Bit::One => Qubit::one(),
        }
    }

    /// `(|0⟩ + |1⟩)/√2`.
    pub fn plus() -> Qubit {
        Qubit::raw(
            Complex64::from(FRAC_1_SQRT_2),
            Complex64::from(FRAC_1_SQRT_2),
        )
    }

    /// `(|0⟩ − |1⟩)/√2`, the target state that turns the oracle into a phase.
    pub fn minus() -> Qubit {
        Qubit::raw(
            Complex64::from(FRAC_1_SQRT_2),
            Complex64::from(-FRAC_1_SQRT_2),
        )
    }

    /// `(|0⟩ + e^{iθ}|1⟩)/√2`.
    pub fn phased_plus(theta: f64) -> Qubit {
        Qubit::raw(
            Complex64::from(FRAC_1_SQRT_2),
            Complex64::from_polar(FRAC_1_SQRT_2, theta),
        )
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a0.norm_sqr() + self.a1.norm_sqr()
    }
}

/// Four amplitudes `c₁…c₄` over `|00⟩, |01⟩, |10⟩, |11⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState {
    c: [Complex64; 4],
}

impl TwoQubitState {
    /// No normalization check.
    pub const fn raw(c: [Complex64; 4]) -> TwoQubitState {
        TwoQubitState { c }
    }

    pub fn normalized(c: [Complex64; 4]) -> Result<TwoQubitState> {
        let s = TwoQubitState::raw(c);
        check_norm(s.norm_sqr())?;
        Ok(s)
    }

    pub fn from_real(c: [f64; 4]) -> TwoQubitState {
        TwoQubitState::raw(c.map(Complex64::from))
    }

    /// Basis vector `e_index` (0-based).
    pub fn basis(index: usize) -> TwoQubitState {
        assert!(index < 4, "basis index {index} out of range");
        let mut c = [ZERO; 4];
        c[index] = ONE;
        TwoQubitState::raw(c)
    }

    /// The classical pair `(x, y)` embedded as `|x⟩⊗|y⟩`.
    pub fn from_pair(pair: BitPair) -> TwoQubitState {
        TwoQubitState::basis(pair.basis_index())
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.c
    }

    pub fn norm_sqr(&self) -> f64 {
        self.c.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn scale(&self, k: Complex64) -> TwoQubitState {
        TwoQubitState::raw(self.c.map(|z| z * k))
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &TwoQubitState) -> f64 {
        self.c
            .iter()
            .zip(other.c.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Determinant of the amplitude matrix `[[c₁, c₂], [c₃, c₄]]`. Zero exactly
    /// when the state factors as `|a⟩⊗|b⟩`.
    pub fn amplitude_determinant(&self) -> Complex64 {
        self.c[0] * self.c[3] - self.c[1] * self.c[2]
    }

    pub fn is_product(&self, tolerance: f64) -> bool {
        self.amplitude_determinant().norm() <= tolerance
    }

    /// Equal up to a global phase: `|⟨self|other⟩| = 1 ± tolerance`, both
    /// assumed normalized.
    pub fn equivalent_up_to_phase(&self, other: &TwoQubitState, tolerance: f64) -> bool {
        (inner(self, other).norm() - 1.0).abs() <= tolerance
    }
}

impl Index<usize> for TwoQubitState {
    type Output = Complex64;

    fn index(&self, i: usize) -> &Complex64 {
        &self.c[i]
    }
}

/// `|a⟩⊗|b⟩ = (a0·b0, a0·b1, a1·b0, a1·b1)`.
pub fn tensor(a: &Qubit, b: &Qubit) -> TwoQubitState {
    TwoQubitState::raw([a.a0 * b.a0, a.a0 * b.a1, a.a1 * b.a0, a.a1 * b.a1])
}

/// `⟨u|v⟩ = Σ conj(uᵢ)·vᵢ`.
pub fn inner(u: &TwoQubitState, v: &TwoQubitState) -> Complex64 {
    u.c.iter().zip(v.c.iter()).map(|(a, b)| a.conj() * b).sum()
}

/// The four operator matrices as printed in the derivation, in the order of
/// [`OneBitFunction::ALL`].
const PUBLISHED_TABLES: [[[u8; 4]; 4]; 4] = [
    // C_I
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    // C_II
    [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
    // B_I
    [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    // B_II
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
];

fn published_table(f: OneBitFunction) -> [[u8; 4]; 4] {
    let i = OneBitFunction::ALL.iter().position(|&g| g == f).unwrap();
    PUBLISHED_TABLES[i]
}

/// 0/1 permutation matrix realizing `|x⟩⊗|y⟩ -> |x⟩⊗|f(x) ⊕ y⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleMatrix {
    function: OneBitFunction,
    m: [[u8; 4]; 4],
}

impl OracleMatrix {
    pub fn function(&self) -> OneBitFunction {
        self.function
    }

    pub fn entries(&self) -> &[[u8; 4]; 4] {
        &self.m
    }

    pub fn is_permutation(&self) -> bool {
        let rows_ok = self
            .m
            .iter()
            .all(|row| row.iter().filter(|&&e| e == 1).count() == 1);
        let cols_ok = (0..4).all(|j| (0..4).filter(|&i| self.m[i][j] == 1).count() == 1);
        let binary = self.m.iter().flatten().all(|&e| e <= 1);
        rows_ok && cols_ok && binary
    }

    /// Integer product `self · other`.
    pub fn mul(&self, other: &OracleMatrix) -> [[u8; 4]; 4] {
        let mut out = [[0u8; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = (0..4).map(|k| self.m[i][k] * other.m[k][j]).sum();
            }
        }
        out
    }

    pub fn is_involution(&self) -> bool {
        let sq = self.mul(self);
        (0..4).all(|i| (0..4).all(|j| sq[i][j] == u8::from(i == j)))
    }

    pub fn apply(&self, psi: &TwoQubitState) -> TwoQubitState {
        let mut out = [ZERO; 4];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = (0..4)
                .filter(|&j| self.m[i][j] == 1)
                .map(|j| psi.c[j])
                .sum();
        }
        TwoQubitState::raw(out)
    }
}

/// Builds the matrix from the basis action and checks it against the
/// published table.
pub fn oracle_matrix(f: OneBitFunction) -> OracleMatrix {
    let mut m = [[0u8; 4]; 4];
    for input in BitPair::all() {
        let output = apply_f_operator(f, input);
        m[output.basis_index()][input.basis_index()] = 1;
    }
    assert_eq!(
        m,
        published_table(f),
        "basis action of {f} disagrees with its published matrix"
    );
    OracleMatrix { function: f, m }
}

/// `O_f · ψ`.
pub fn apply_oracle(f: OneBitFunction, psi: &TwoQubitState) -> TwoQubitState {
    oracle_matrix(f).apply(psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::EXACT_TOLERANCE;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn tensor_of_basis_states() {
        assert_eq!(
            tensor(&Qubit::zero(), &Qubit::zero()),
            TwoQubitState::basis(0)
        );
        assert_eq!(
            tensor(&Qubit::one(), &Qubit::one()),
            TwoQubitState::basis(3)
        );
        assert_eq!(
            tensor(&Qubit::zero(), &Qubit::one()),
            TwoQubitState::basis(1)
        );
        assert_eq!(
            tensor(&Qubit::one(), &Qubit::zero()),
            TwoQubitState::basis(2)
        );
    }

    #[test]
    fn tensor_plus_minus() {
        let s = tensor(&Qubit::plus(), &Qubit::minus());
        let expected = TwoQubitState::from_real([0.5, -0.5, 0.5, -0.5]);
        assert!(s.max_abs_diff(&expected) <= EXACT_TOLERANCE);
    }

    #[test]
    fn inner_examples() {
        let e1 = TwoQubitState::basis(0);
        let e2 = TwoQubitState::basis(1);
        assert_eq!(inner(&e1, &e2), ZERO);
        let psi = TwoQubitState::raw([c(0.5, 0.0), c(0.0, 0.5), c(-0.5, 0.0), c(0.0, -0.5)]);
        assert!((inner(&psi, &psi) - ONE).norm() <= EXACT_TOLERANCE);
        let a = TwoQubitState::from_real([0.5, -0.5, 0.5, -0.5]);
        let b = TwoQubitState::from_real([0.5, -0.5, -0.5, 0.5]);
        assert_eq!(inner(&a, &b), ZERO);
    }

    #[test]
    fn inner_is_conjugate_linear_in_first_argument() {
        let u = TwoQubitState::raw([c(1.0, 2.0), c(0.0, -1.0), c(0.5, 0.5), c(-2.0, 0.0)]);
        let v = TwoQubitState::raw([c(0.3, 0.0), c(1.0, 1.0), c(0.0, 2.0), c(1.0, -0.5)]);
        let k = c(0.0, 1.0);
        let lhs = inner(&u.scale(k), &v);
        let rhs = k.conj() * inner(&u, &v);
        assert!((lhs - rhs).norm() <= EXACT_TOLERANCE);
    }

    #[test]
    fn normalized_constructor_rejects_bad_norm() {
        let err = TwoQubitState::normalized([ONE, ONE, ZERO, ZERO]).unwrap_err();
        assert!(matches!(err, Error::Normalization { norm_sq, .. } if norm_sq == 2.0));
        assert!(TwoQubitState::normalized([ONE, ZERO, ZERO, ZERO]).is_ok());
        assert!(Qubit::normalized(ONE, ONE).is_err());
        assert!(Qubit::normalized(c(FRAC_1_SQRT_2, 0.0), c(0.0, FRAC_1_SQRT_2)).is_ok());
        // within 1e-9 is accepted
        assert!(TwoQubitState::normalized([c(1.0 + 1e-10, 0.0), ZERO, ZERO, ZERO]).is_ok());
        assert!(TwoQubitState::normalized([c(f64::NAN, 0.0), ZERO, ZERO, ZERO]).is_err());
    }

    #[test]
    fn c_i_is_identity() {
        let m = oracle_matrix(OneBitFunction::ConstI);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m.entries()[i][j], u8::from(i == j));
            }
        }
    }

    #[test]
    fn b_i_swaps_first_two_basis_states() {
        let m = oracle_matrix(OneBitFunction::BalancedI);
        assert_eq!(m.apply(&TwoQubitState::basis(0)), TwoQubitState::basis(1));
        assert_eq!(m.apply(&TwoQubitState::basis(1)), TwoQubitState::basis(0));
        assert_eq!(m.apply(&TwoQubitState::basis(2)), TwoQubitState::basis(2));
        assert_eq!(m.apply(&TwoQubitState::basis(3)), TwoQubitState::basis(3));
    }

    #[test]
    fn c_ii_swaps_both_pairs() {
        let m = oracle_matrix(OneBitFunction::ConstII);
        assert_eq!(
            m.entries(),
            &[[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
        );
    }

    #[test]
    fn every_oracle_is_a_permutation_involution() {
        for f in OneBitFunction::ALL {
            let m = oracle_matrix(f);
            assert!(m.is_permutation(), "{f}");
            assert!(m.is_involution(), "{f}");
            assert_eq!(m.function(), f);
        }
    }

    #[test]
    fn c_i_leaves_states_alone() {
        let psi = TwoQubitState::raw([c(0.1, 0.2), c(-0.3, 0.0), c(0.0, 0.7), c(0.4, -0.1)]);
        assert_eq!(apply_oracle(OneBitFunction::ConstI, &psi), psi);
    }

    #[test]
    fn b_i_kicks_back_a_minus_sign_on_zero_control() {
        let psi = tensor(&Qubit::zero(), &Qubit::minus());
        let out = apply_oracle(OneBitFunction::BalancedI, &psi);
        assert!(out.max_abs_diff(&psi.scale(-ONE)) <= EXACT_TOLERANCE);
    }

    #[test]
    fn basis_action_matches_classical_operator() {
        for f in OneBitFunction::ALL {
            for p in BitPair::all() {
                let quantum = apply_oracle(f, &TwoQubitState::from_pair(p));
                assert_eq!(quantum, TwoQubitState::from_pair(apply_f_operator(f, p)));
            }
        }
    }

    #[test]
    fn oracle_can_entangle_a_product_input() {
        let psi = tensor(&Qubit::plus(), &Qubit::zero());
        assert!(psi.is_product(EXACT_TOLERANCE));
        let out = apply_oracle(OneBitFunction::BalancedI, &psi);
        assert!((out.amplitude_determinant().norm() - 0.5).abs() <= EXACT_TOLERANCE);
        assert!(!out.is_product(1e-6));
    }
}
