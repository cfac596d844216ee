//! Deriving the input state from orthogonality conditions alone.
//!
//! For an unknown input `ψ = (c₁, c₂, c₃, c₄)` the requirement is that every
//! balanced oracle's output is orthogonal to every constant oracle's output:
//!
//! ```text
//! ⟨F_CI ψ | F_BI ψ⟩  = 2·Re(c₁ c̄₂) + |c₃|² + |c₄|²  = 0
//! ⟨F_CI ψ | F_BII ψ⟩ = 2·Re(c̄₃ c₄) + |c₁|² + |c₂|²  = 0
//! ⟨F_CII ψ | F_BI ψ⟩  (same as the second)
//! ⟨F_CII ψ | F_BII ψ⟩ (same as the first)
//! ```
//!
//! together with `Σ|cᵢ|² = 1`. Restricting to real amplitudes, subtracting
//! each condition from the norm gives `c₁ = c₂ ± 1` and `c₃ = c₄ ± 1`; each of
//! the four sign choices leaves a quadratic in `c₂` whose discriminant, as a
//! function of `c₄`, is a downward parabola touching zero at a single point.
//! [`solve_real_cases`] walks that case tree in exact rational arithmetic.
//!
//! [`grid_search`] is a brute-force cross-check that shares nothing with the
//! case tree except the residual formulas. [`identification_infeasibility`]
//! covers the two extra conditions needed to tell `C_I` from `C_II` and
//! `B_I` from `B_II`, which contradict the first two.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::OnceLock;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::classical::OneBitFunction;
use crate::quantum::{inner, oracle_matrix, OracleMatrix, TwoQubitState};
use crate::{Error, Result, EXACT_TOLERANCE, NORM_TOLERANCE};

/// Largest accepted grid step.
pub const GRID_STEP_MAX: f64 = 0.5;

/// Number of random candidates used for the algebraic identity checks.
pub const IDENTITY_CANDIDATES: usize = 10_000;

/// Sweep samples with `max(|r_first|, |r_second|)` at or below this count as
/// near-feasible in the exploration tally.
pub const NEAR_FEASIBLE_THRESHOLD: f64 = 0.05;

/// Four amplitudes with no normalization requirement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CandidateState(pub [Complex64; 4]);

impl CandidateState {
    pub fn from_real(c: [f64; 4]) -> CandidateState {
        CandidateState(c.map(Complex64::from))
    }

    pub fn to_state(self) -> TwoQubitState {
        TwoQubitState::raw(self.0)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn linf_distance(&self, other: &CandidateState) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn negated(&self) -> CandidateState {
        CandidateState(self.0.map(|z| -z))
    }
}

impl From<TwoQubitState> for CandidateState {
    fn from(s: TwoQubitState) -> CandidateState {
        CandidateState(*s.amplitudes())
    }
}

/// Residuals of every condition for one candidate.
///
/// `first`/`second` come from the closed forms, `third`/`fourth`/`sixth` from
/// explicit matrix pairings, `fifth` from its closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstraintResiduals {
    pub first: Complex64,
    pub second: Complex64,
    pub third: Complex64,
    pub fourth: Complex64,
    /// `Σ|cᵢ|² − 1`.
    pub norm: f64,
    /// `⟨F_CI ψ | F_CII ψ⟩`.
    pub fifth: Complex64,
    /// `⟨F_BI ψ | F_BII ψ⟩`.
    pub sixth: Complex64,
}

impl ConstraintResiduals {
    /// Largest of `|first|…|fourth|` and `|norm|`.
    pub fn max_orthogonality(&self) -> f64 {
        [self.first, self.second, self.third, self.fourth]
            .iter()
            .map(|z| z.norm())
            .fold(self.norm.abs(), f64::max)
    }

    /// `max(|first|, |second|, |fifth|)`: how badly a state misses the
    /// requirements for identifying the exact function.
    pub fn joint_identification_violation(&self) -> f64 {
        self.first
            .norm()
            .max(self.second.norm())
            .max(self.fifth.norm())
    }
}

/// `2·Re(c₁ c̄₂) + |c₃|² + |c₄|²`.
pub fn first_closed_form(c: &CandidateState) -> f64 {
    let [c1, c2, c3, c4] = c.0;
    2.0 * (c1 * c2.conj()).re + c3.norm_sqr() + c4.norm_sqr()
}

/// `2·Re(c̄₃ c₄) + |c₁|² + |c₂|²`.
pub fn second_closed_form(c: &CandidateState) -> f64 {
    let [c1, c2, c3, c4] = c.0;
    2.0 * (c3.conj() * c4).re + c1.norm_sqr() + c2.norm_sqr()
}

/// `c̄₁c₂ + c̄₂c₁ + c̄₃c₄ + c̄₄c₃`.
pub fn fifth_closed_form(c: &CandidateState) -> Complex64 {
    let [c1, c2, c3, c4] = c.0;
    c1.conj() * c2 + c2.conj() * c1 + c3.conj() * c4 + c4.conj() * c3
}

fn cached_matrix(f: OneBitFunction) -> &'static OracleMatrix {
    static MATRICES: OnceLock<[OracleMatrix; 4]> = OnceLock::new();
    let all = MATRICES.get_or_init(|| OneBitFunction::ALL.map(oracle_matrix));
    all.iter().find(|m| m.function() == f).unwrap()
}

fn pairing(c: &CandidateState, bra: OneBitFunction, ket: OneBitFunction) -> Complex64 {
    let psi = c.to_state();
    inner(
        &cached_matrix(bra).apply(&psi),
        &cached_matrix(ket).apply(&psi),
    )
}

/// The four balanced-vs-constant overlaps computed by matrix application:
/// `⟨F_CI ψ|F_BI ψ⟩, ⟨F_CI ψ|F_BII ψ⟩, ⟨F_CII ψ|F_BI ψ⟩, ⟨F_CII ψ|F_BII ψ⟩`.
pub fn matrix_pairings(c: &CandidateState) -> [Complex64; 4] {
    use OneBitFunction::*;
    [
        pairing(c, ConstI, BalancedI),
        pairing(c, ConstI, BalancedII),
        pairing(c, ConstII, BalancedI),
        pairing(c, ConstII, BalancedII),
    ]
}

pub fn residuals(c: &CandidateState) -> ConstraintResiduals {
    use OneBitFunction::*;
    ConstraintResiduals {
        first: Complex64::from(first_closed_form(c)),
        second: Complex64::from(second_closed_form(c)),
        third: pairing(c, ConstII, BalancedI),
        fourth: pairing(c, ConstII, BalancedII),
        norm: c.norm_sqr() - 1.0,
        fifth: fifth_closed_form(c),
        sixth: pairing(c, BalancedI, BalancedII),
    }
}

// ---------------------------------------------------------------------------
// Exact real case analysis
// ---------------------------------------------------------------------------

/// One branch of `c₁ = c₂ ± 1`, `c₃ = c₄ ± 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    /// `c₁ = c₂ + 1`, `c₃ = c₄ + 1`
    Case1,
    /// `c₁ = c₂ + 1`, `c₃ = c₄ − 1`
    Case2,
    /// `c₁ = c₂ − 1`, `c₃ = c₄ + 1`
    Case3,
    /// `c₁ = c₂ − 1`, `c₃ = c₄ − 1`
    Case4,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 4] = [
        CaseLabel::Case1,
        CaseLabel::Case2,
        CaseLabel::Case3,
        CaseLabel::Case4,
    ];

    /// `(s₁₂, s₃₄)` with `c₁ = c₂ + s₁₂`, `c₃ = c₄ + s₃₄`.
    pub fn signs(self) -> (i64, i64) {
        match self {
            CaseLabel::Case1 => (1, 1),
            CaseLabel::Case2 => (1, -1),
            CaseLabel::Case3 => (-1, 1),
            CaseLabel::Case4 => (-1, -1),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::Case1 => "Case1",
            CaseLabel::Case2 => "Case2",
            CaseLabel::Case3 => "Case3",
            CaseLabel::Case4 => "Case4",
        }
    }
}

/// `a·t² + b·t + c` over the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quadratic {
    pub a: Rational64,
    pub b: Rational64,
    pub c: Rational64,
}

impl Quadratic {
    pub fn new(a: i64, b: i64, c: i64) -> Quadratic {
        Quadratic {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    pub fn eval(&self, t: Rational64) -> Rational64 {
        self.a * t * t + self.b * t + self.c
    }

    pub fn discriminant(&self) -> Rational64 {
        self.b * self.b - Rational64::from(4) * self.a * self.c
    }

    pub fn vertex(&self) -> Rational64 {
        -self.b / (Rational64::from(2) * self.a)
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |q: Rational64| if q.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{}t^2 {} {}t {} {}",
            self.a,
            sign(self.b),
            self.b.abs(),
            sign(self.c),
            self.c.abs()
        )
    }
}

/// Where the `c₂` discriminant, viewed as a function of `c₄`, is non-negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FeasibleC4 {
    /// Negative everywhere: no real `c₂`.
    Empty,
    /// Downward parabola with its apex on the axis: a single admissible `c₄`.
    Apex(Rational64),
    /// A genuine interval. Never happens for this system.
    Interval(f64, f64),
    /// Upward or degenerate parabola. Never happens for this system.
    Unbounded,
}

/// Everything the case tree produced for one branch.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseAnalysis {
    pub label: CaseLabel,
    /// Normalization after substitution, as a quadratic in `c₂` whose
    /// constant term depends on `c₄`: `2c₂² + 2s₁₂c₂ + (2c₄² + 2s₃₄c₄ + s₁₂² + s₃₄² − 1)`.
    pub c2_leading: Rational64,
    pub c2_linear: Rational64,
    pub c2_constant: Quadratic,
    /// Discriminant of the `c₂` quadratic as a polynomial in `c₄`.
    pub discriminant: Quadratic,
    pub feasible_c4: FeasibleC4,
    /// Exact amplitudes, when the branch yields a real solution.
    pub exact: Option<[Rational64; 4]>,
}

impl CaseAnalysis {
    fn run(label: CaseLabel) -> CaseAnalysis {
        let (s12, s34) = label.signs();
        let two = Rational64::from(2);
        // (c₂ + s₁₂)² + c₂² + (c₄ + s₃₄)² + c₄² − 1 = 0
        let c2_leading = two;
        let c2_linear = two * s12;
        let c2_constant = Quadratic::new(2, 2 * s34, s12 * s12 + s34 * s34 - 1);
        // B² − 4·A·C(c₄), with C(c₄) quadratic in c₄.
        let four_a = Rational64::from(4) * c2_leading;
        let discriminant = Quadratic {
            a: -four_a * c2_constant.a,
            b: -four_a * c2_constant.b,
            c: c2_linear * c2_linear - four_a * c2_constant.c,
        };

        let feasible_c4 = if !discriminant.a.is_negative() {
            FeasibleC4::Unbounded
        } else {
            let d = discriminant.discriminant();
            if d.is_negative() {
                FeasibleC4::Empty
            } else if d.is_zero() {
                FeasibleC4::Apex(discriminant.vertex())
            } else {
                let v = discriminant.vertex().to_f64().unwrap();
                let half =
                    d.to_f64().unwrap().sqrt() / (2.0 * discriminant.a.abs().to_f64().unwrap());
                FeasibleC4::Interval(v - half, v + half)
            }
        };

        let exact = match feasible_c4 {
            FeasibleC4::Apex(c4) => {
                debug_assert!(discriminant.eval(c4).is_zero());
                // Double root of the c₂ quadratic.
                let c2 = -c2_linear / (two * c2_leading);
                let c1 = c2 + s12;
                let c3 = c4 + s34;
                Some([c1, c2, c3, c4])
            }
            _ => None,
        };

        CaseAnalysis {
            label,
            c2_leading,
            c2_linear,
            c2_constant,
            discriminant,
            feasible_c4,
            exact,
        }
    }

    /// The real system checked exactly on [`CaseAnalysis::exact`].
    pub fn exact_residuals(&self) -> Option<[Rational64; 3]> {
        let [c1, c2, c3, c4] = self.exact?;
        let two = Rational64::from(2);
        Some([
            two * c1 * c2 + c3 * c3 + c4 * c4,
            two * c3 * c4 + c1 * c1 + c2 * c2,
            c1 * c1 + c2 * c2 + c3 * c3 + c4 * c4 - Rational64::from(1),
        ])
    }
}

/// Walks all four branches.
pub fn case_tree() -> Vec<CaseAnalysis> {
    CaseLabel::ALL.into_iter().map(CaseAnalysis::run).collect()
}

/// A normalized state satisfying all four orthogonality conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivationSolution {
    pub state: TwoQubitState,
    pub case_label: CaseLabel,
    /// Largest of the four pairing residuals and the norm residual.
    pub max_residual: f64,
    /// Set when this branch reproduces an earlier branch's state up to a
    /// global phase.
    pub duplicate_of: Option<CaseLabel>,
}

/// Solves the real system branch by branch. Every branch yields a state;
/// `Case3` and `Case4` come back flagged as sign flips of `Case2` and
/// `Case1`.
pub fn solve_real_cases() -> Vec<DerivationSolution> {
    let mut out: Vec<DerivationSolution> = Vec::new();
    for case in case_tree() {
        let Some(exact) = case.exact else { continue };
        let residual_exact = case.exact_residuals().unwrap();
        if residual_exact.iter().any(|r| !r.is_zero()) {
            continue;
        }
        let amplitudes = exact.map(|q| q.to_f64().unwrap());
        let candidate = CandidateState::from_real(amplitudes);
        let state = candidate.to_state();
        let duplicate_of = out
            .iter()
            .filter(|s| s.duplicate_of.is_none())
            .find(|s| s.state.equivalent_up_to_phase(&state, NORM_TOLERANCE))
            .map(|s| s.case_label);
        out.push(DerivationSolution {
            state,
            case_label: case.label,
            max_residual: residuals(&candidate).max_orthogonality(),
            duplicate_of,
        });
    }
    out
}

/// Solutions that are not global-phase duplicates of an earlier one.
pub fn distinct_solutions(solutions: &[DerivationSolution]) -> Vec<&DerivationSolution> {
    solutions
        .iter()
        .filter(|s| s.duplicate_of.is_none())
        .collect()
}

// ---------------------------------------------------------------------------
// Brute-force grid
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub struct GridCluster {
    /// Per-entry sign (−1, 0, +1).
    pub sign_pattern: [i8; 4],
    pub members: usize,
    /// The member with the smallest `max(|r_first|, |r_second|, |r_norm|)`.
    pub representative: CandidateState,
    pub representative_residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridSearch {
    pub step: f64,
    pub axis_points: usize,
    pub points_scanned: usize,
    pub survivors: usize,
    /// Sorted by sign pattern.
    pub clusters: Vec<GridCluster>,
}

impl GridSearch {
    pub fn representatives(&self) -> Vec<CandidateState> {
        self.clusters.iter().map(|c| c.representative).collect()
    }

    /// Matches each representative against `±` the given solutions within
    /// `tolerance` in the ℓ∞ norm.
    pub fn agreement(&self, solutions: &[DerivationSolution], tolerance: f64) -> GridAgreement {
        let targets: Vec<(CaseLabel, i8, CandidateState)> = distinct_solutions(solutions)
            .into_iter()
            .flat_map(|s| {
                let c = CandidateState::from(s.state);
                [(s.case_label, 1, c), (s.case_label, -1, c.negated())]
            })
            .collect();

        let matches: Vec<ClusterMatch> = self
            .clusters
            .iter()
            .map(|cluster| {
                let best = targets
                    .iter()
                    .map(|(label, sign, t)| {
                        (*label, *sign, cluster.representative.linf_distance(t))
                    })
                    .min_by(|a, b| a.2.total_cmp(&b.2));
                match best {
                    Some((label, sign, distance)) if distance <= tolerance => ClusterMatch {
                        sign_pattern: cluster.sign_pattern,
                        matched: Some((label, sign)),
                        distance,
                    },
                    Some((_, _, distance)) => ClusterMatch {
                        sign_pattern: cluster.sign_pattern,
                        matched: None,
                        distance,
                    },
                    None => ClusterMatch {
                        sign_pattern: cluster.sign_pattern,
                        matched: None,
                        distance: f64::INFINITY,
                    },
                }
            })
            .collect();

        let every_cluster_matched = matches.iter().all(|m| m.matched.is_some());
        let every_target_found = targets
            .iter()
            .all(|(label, sign, _)| matches.iter().any(|m| m.matched == Some((*label, *sign))));
        GridAgreement {
            tolerance,
            matches,
            holds: every_cluster_matched && every_target_found,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClusterMatch {
    pub sign_pattern: [i8; 4],
    /// Solution label and global sign (`±1`) this cluster landed on.
    pub matched: Option<(CaseLabel, i8)>,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridAgreement {
    pub tolerance: f64,
    pub matches: Vec<ClusterMatch>,
    /// Every cluster matches a signed solution and every signed solution is
    /// hit by some cluster.
    pub holds: bool,
}

pub fn validate_step(step: f64) -> Result<()> {
    if step > 0.0 && step <= GRID_STEP_MAX {
        Ok(())
    } else {
        Err(Error::InvalidStep {
            step,
            max: GRID_STEP_MAX,
        })
    }
}

struct ClusterAcc {
    members: usize,
    best: [f64; 4],
    best_residual: f64,
}

/// Scans real 4-vectors on the lattice `{i·step : |i·step| ≤ 1}` and keeps
/// the points with `|r_norm|, |r_first|, |r_second| ≤ 2·step`, clustered by
/// sign pattern.
pub fn grid_search(step: f64) -> Result<GridSearch> {
    validate_step(step)?;
    let half = (1.0 / step + 1e-9).floor() as i64;
    let axis: Vec<(i8, f64)> = (-half..=half)
        .map(|i| (i.signum() as i8, i as f64 * step))
        .collect();
    let tolerance = 2.0 * step;

    let mut clusters: BTreeMap<[i8; 4], ClusterAcc> = BTreeMap::new();
    let mut survivors = 0usize;
    for &(s1, c1) in &axis {
        for &(s2, c2) in &axis {
            for &(s3, c3) in &axis {
                for &(s4, c4) in &axis {
                    let norm = c1 * c1 + c2 * c2 + c3 * c3 + c4 * c4 - 1.0;
                    if norm.abs() > tolerance {
                        continue;
                    }
                    let first = 2.0 * c1 * c2 + c3 * c3 + c4 * c4;
                    let second = 2.0 * c3 * c4 + c1 * c1 + c2 * c2;
                    if first.abs() > tolerance || second.abs() > tolerance {
                        continue;
                    }
                    survivors += 1;
                    let worst = norm.abs().max(first.abs()).max(second.abs());
                    let acc = clusters.entry([s1, s2, s3, s4]).or_insert(ClusterAcc {
                        members: 0,
                        best: [c1, c2, c3, c4],
                        best_residual: worst,
                    });
                    acc.members += 1;
                    if worst < acc.best_residual {
                        acc.best = [c1, c2, c3, c4];
                        acc.best_residual = worst;
                    }
                }
            }
        }
    }

    Ok(GridSearch {
        step,
        axis_points: axis.len(),
        points_scanned: axis.len().pow(4),
        survivors,
        clusters: clusters
            .into_iter()
            .map(|(sign_pattern, acc)| GridCluster {
                sign_pattern,
                members: acc.members,
                representative: CandidateState::from_real(acc.best),
                representative_residual: acc.best_residual,
            })
            .collect(),
    })
}

// ---------------------------------------------------------------------------
// Exact identification is infeasible
// ---------------------------------------------------------------------------

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn normal_amplitudes(rng: &mut ChaCha8Rng) -> [Complex64; 4] {
    std::array::from_fn(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
}

/// Unnormalized candidates with i.i.d. standard normal real and imaginary
/// parts.
pub fn random_candidates(count: usize, seed: u64) -> Vec<CandidateState> {
    let mut rng = rng_for(seed, 1);
    (0..count)
        .map(|_| CandidateState(normal_amplitudes(&mut rng)))
        .collect()
}

/// Uniform samples from the unit sphere in `C⁴`: eight standard normals,
/// normalized.
pub fn random_normalized_states(count: usize, seed: u64) -> Vec<CandidateState> {
    let mut rng = rng_for(seed, 0);
    (0..count)
        .map(|_| {
            let c = normal_amplitudes(&mut rng);
            let norm = c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            CandidateState(c.map(|z| z / norm))
        })
        .collect()
}

/// Error of `2·[Re(c₁c̄₂) + Re(c̄₃c₄)] = (r_first + r_second) − Σ|cᵢ|²`, with
/// the right-hand residuals taken from matrix pairings.
pub fn pairing_sum_identity_error(c: &CandidateState) -> f64 {
    let [c1, c2, c3, c4] = c.0;
    let lhs = 2.0 * ((c1 * c2.conj()).re + (c3.conj() * c4).re);
    let pairings = matrix_pairings(c);
    let rhs = pairings[0] + pairings[1] - Complex64::from(c.norm_sqr());
    (Complex64::from(lhs) - rhs).norm()
}

/// Largest deviation, over `candidates`, of the matrix pairings from the
/// closed forms, including the collapse of the last two pairings onto the
/// first two.
pub fn reduction_error(candidates: &[CandidateState]) -> ReductionCheck {
    let mut check = ReductionCheck::default();
    for c in candidates {
        let p = matrix_pairings(c);
        let first = Complex64::from(first_closed_form(c));
        let second = Complex64::from(second_closed_form(c));
        check.first_vs_closed_form = check.first_vs_closed_form.max((p[0] - first).norm());
        check.second_vs_closed_form = check.second_vs_closed_form.max((p[1] - second).norm());
        check.third_vs_second = check.third_vs_second.max((p[2] - p[1]).norm());
        check.fourth_vs_first = check.fourth_vs_first.max((p[3] - p[0]).norm());
        check.candidates += 1;
    }
    check
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ReductionCheck {
    pub candidates: usize,
    pub first_vs_closed_form: f64,
    pub second_vs_closed_form: f64,
    /// `⟨F_CII ψ|F_BI ψ⟩` against `⟨F_CI ψ|F_BII ψ⟩`.
    pub third_vs_second: f64,
    /// `⟨F_CII ψ|F_BII ψ⟩` against `⟨F_CI ψ|F_BI ψ⟩`.
    pub fourth_vs_first: f64,
}

impl ReductionCheck {
    pub fn max_error(&self) -> f64 {
        self.first_vs_closed_form
            .max(self.second_vs_closed_form)
            .max(self.third_vs_second)
            .max(self.fourth_vs_first)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaFamilyCheck {
    pub theta: f64,
    pub first: f64,
    pub second: f64,
    pub fifth: Complex64,
    /// `Re(c₁c̄₂) + Re(c̄₃c₄)`, which the extra conditions would need to be 0.
    pub pairing_sum: f64,
}

/// Angles at which the θ-family is checked: 16 evenly spaced points on
/// `[0, 2π)` plus a few irregular ones.
pub fn theta_grid() -> Vec<f64> {
    let mut thetas: Vec<f64> = (0..16).map(|k| k as f64 * PI / 8.0).collect();
    thetas.extend([PI / 3.0, 2.0, 5.5]);
    thetas
}

pub fn theta_family_check(theta: f64) -> Result<ThetaFamilyCheck> {
    let input = crate::protocol::prepare_input(theta)?;
    let c = CandidateState::from(*input.state());
    let r = residuals(&c);
    let [c1, c2, c3, c4] = c.0;
    Ok(ThetaFamilyCheck {
        theta,
        first: r.first.norm(),
        second: r.second.norm(),
        fifth: r.fifth,
        pairing_sum: (c1 * c2.conj()).re + (c3.conj() * c4).re,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct InfeasibilityReport {
    pub seed: u64,
    pub samples: usize,
    /// Worst error of the pairing-sum identity over [`IDENTITY_CANDIDATES`]
    /// unnormalized candidates.
    pub identity_candidates: usize,
    pub identity_max_error: f64,
    pub theta_family: Vec<ThetaFamilyCheck>,
    /// Minimum over the sweep of `max(|r_first|, |r_second|, |r_fifth|)`.
    pub sweep_min_joint_violation: f64,
    pub sweep_argmin: TwoQubitState,
    /// Sweep samples with `max(|r_first|, |r_second|) ≤`
    /// [`NEAR_FEASIBLE_THRESHOLD`]; an exploration count only.
    pub near_feasible: usize,
}

impl InfeasibilityReport {
    pub fn identity_holds(&self) -> bool {
        self.identity_max_error <= EXACT_TOLERANCE
    }

    /// Every θ checked has `r_first = r_second = 0` and `|r_fifth| = 1`.
    pub fn theta_family_holds(&self) -> bool {
        self.theta_family.iter().all(|t| {
            t.first <= EXACT_TOLERANCE
                && t.second <= EXACT_TOLERANCE
                && (t.fifth.norm() - 1.0).abs() <= EXACT_TOLERANCE
        })
    }
}

/// Evidence that no state satisfies the four orthogonality conditions and
/// the two identification conditions at once.
///
/// For unit-norm states `r_fifth = r_first + r_second − 1`, so the joint
/// violation can never drop below ⅓; the sweep makes this visible
/// numerically.
pub fn identification_infeasibility(samples: usize, seed: u64) -> Result<InfeasibilityReport> {
    if samples == 0 {
        return Err(Error::InvalidSamples(samples));
    }

    let identity_max_error = random_candidates(IDENTITY_CANDIDATES, seed)
        .iter()
        .map(pairing_sum_identity_error)
        .fold(0.0, f64::max);

    let theta_family = theta_grid()
        .into_iter()
        .map(theta_family_check)
        .collect::<Result<Vec<_>>>()?;

    let mut best = f64::INFINITY;
    let mut argmin = CandidateState([Complex64::zero(); 4]);
    let mut near_feasible = 0;
    for c in random_normalized_states(samples, seed) {
        let r = residuals(&c);
        let v = r.joint_identification_violation();
        if v < best {
            best = v;
            argmin = c;
        }
        if r.first.norm().max(r.second.norm()) <= NEAR_FEASIBLE_THRESHOLD {
            near_feasible += 1;
        }
    }

    Ok(InfeasibilityReport {
        seed,
        samples,
        identity_candidates: IDENTITY_CANDIDATES,
        identity_max_error,
        theta_family,
        sweep_min_joint_violation: best,
        sweep_argmin: argmin.to_state(),
        near_feasible,
    })
}
