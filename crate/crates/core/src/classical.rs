//! Classical bits, the four one-bit functions and the XOR-feedback operators
//! `(x, y) -> (x, f(x) ⊕ y)`.
//!
//! The module also carries the exhaustive argument that a single classical
//! query cannot separate constant from balanced functions: every
//! deterministic one-query strategy is enumerated and shown to misclassify
//! at least one function, while an explicit two-query strategy is correct on
//! all four.

use std::fmt;
use std::ops::BitXor;

/// A classical bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bit {
    Zero,
    One,
}

impl Bit {
    pub const ALL: [Bit; 2] = [Bit::Zero, Bit::One];

    /// Returns `None` for anything other than 0 or 1.
    pub fn from_u8(value: u8) -> Option<Bit> {
        match value {
            0 => Some(Bit::Zero),
            1 => Some(Bit::One),
            _ => None,
        }
    }

    pub fn value(self) -> u8 {
        match self {
            Bit::Zero => 0,
            Bit::One => 1,
        }
    }

    pub fn index(self) -> usize {
        self.value() as usize
    }
}

impl BitXor for Bit {
    type Output = Bit;

    fn bitxor(self, rhs: Bit) -> Bit {
        xor(self, rhs)
    }
}

impl fmt::Display for Bit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Addition of two bits modulo 2.
pub fn xor(a: Bit, b: Bit) -> Bit {
    if a == b {
        Bit::Zero
    } else {
        Bit::One
    }
}

/// Whether a one-bit function is constant or balanced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Constant,
    Balanced,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Constant => "Constant",
            Verdict::Balanced => "Balanced",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The four maps `{0,1} -> {0,1}`.
///
/// The tag and the truth table are in bijection, so the tag is the whole
/// representation and [`OneBitFunction::table`] is derived from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OneBitFunction {
    /// Always 0.
    ConstI,
    /// Always 1.
    ConstII,
    /// Negation: 0 -> 1, 1 -> 0.
    BalancedI,
    /// Identity: 0 -> 0, 1 -> 1.
    BalancedII,
}

impl OneBitFunction {
    /// Canonical order: C_I, C_II, B_I, B_II.
    pub const ALL: [OneBitFunction; 4] = [
        OneBitFunction::ConstI,
        OneBitFunction::ConstII,
        OneBitFunction::BalancedI,
        OneBitFunction::BalancedII,
    ];

    /// `(f(0), f(1))`.
    pub fn table(self) -> (Bit, Bit) {
        match self {
            OneBitFunction::ConstI => (Bit::Zero, Bit::Zero),
            OneBitFunction::ConstII => (Bit::One, Bit::One),
            OneBitFunction::BalancedI => (Bit::One, Bit::Zero),
            OneBitFunction::BalancedII => (Bit::Zero, Bit::One),
        }
    }

    pub fn from_table(f_of_0: Bit, f_of_1: Bit) -> OneBitFunction {
        match (f_of_0, f_of_1) {
            (Bit::Zero, Bit::Zero) => OneBitFunction::ConstI,
            (Bit::One, Bit::One) => OneBitFunction::ConstII,
            (Bit::One, Bit::Zero) => OneBitFunction::BalancedI,
            (Bit::Zero, Bit::One) => OneBitFunction::BalancedII,
        }
    }

    pub fn eval(self, x: Bit) -> Bit {
        let (f0, f1) = self.table();
        match x {
            Bit::Zero => f0,
            Bit::One => f1,
        }
    }

    pub fn is_constant(self) -> bool {
        let (f0, f1) = self.table();
        f0 == f1
    }

    pub fn class(self) -> Verdict {
        if self.is_constant() {
            Verdict::Constant
        } else {
            Verdict::Balanced
        }
    }

    /// Short label used in reports: `C_I`, `C_II`, `B_I`, `B_II`.
    pub fn label(self) -> &'static str {
        match self {
            OneBitFunction::ConstI => "C_I",
            OneBitFunction::ConstII => "C_II",
            OneBitFunction::BalancedI => "B_I",
            OneBitFunction::BalancedII => "B_II",
        }
    }

    pub fn from_label(label: &str) -> Option<OneBitFunction> {
        OneBitFunction::ALL.into_iter().find(|f| f.label() == label)
    }
}

impl fmt::Display for OneBitFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Control bit `x` and target bit `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitPair {
    pub x: Bit,
    pub y: Bit,
}

impl BitPair {
    pub const fn new(x: Bit, y: Bit) -> BitPair {
        BitPair { x, y }
    }

    /// The four pairs in basis order 00, 01, 10, 11.
    pub fn all() -> [BitPair; 4] {
        [
            BitPair::new(Bit::Zero, Bit::Zero),
            BitPair::new(Bit::Zero, Bit::One),
            BitPair::new(Bit::One, Bit::Zero),
            BitPair::new(Bit::One, Bit::One),
        ]
    }

    /// Position of `|x⟩⊗|y⟩` in the column-vector convention.
    pub fn basis_index(self) -> usize {
        2 * self.x.index() + self.y.index()
    }
}

impl fmt::Display for BitPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// `F_f(x, y) = (x, f(x) ⊕ y)`.
pub fn apply_f_operator(f: OneBitFunction, input: BitPair) -> BitPair {
    BitPair::new(input.x, f.eval(input.x) ^ input.y)
}

/// Functions consistent with having fed `query` and seen `observed` on the
/// target wire.
pub fn consistent_functions(query: BitPair, observed: Bit) -> Vec<OneBitFunction> {
    OneBitFunction::ALL
        .into_iter()
        .filter(|&f| apply_f_operator(f, query).y == observed)
        .collect()
}

/// A deterministic one-query plan: which pair to feed the oracle and what to
/// answer for each possible target bit coming back.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalStrategy {
    pub query: BitPair,
    /// Indexed by the observed target bit.
    pub decision: [Verdict; 2],
}

impl ClassicalStrategy {
    /// All 4 queries × 4 decision maps.
    pub fn enumerate() -> Vec<ClassicalStrategy> {
        const VERDICTS: [Verdict; 2] = [Verdict::Constant, Verdict::Balanced];
        let mut out = Vec::with_capacity(16);
        for query in BitPair::all() {
            for on_zero in VERDICTS {
                for on_one in VERDICTS {
                    out.push(ClassicalStrategy {
                        query,
                        decision: [on_zero, on_one],
                    });
                }
            }
        }
        out
    }

    /// Runs the strategy against an oracle, which is called exactly once.
    pub fn decide<O: FnMut(BitPair) -> BitPair>(&self, mut oracle: O) -> Verdict {
        let observed = oracle(self.query).y;
        self.decision[observed.index()]
    }

    pub fn classify(&self, f: OneBitFunction) -> Verdict {
        self.decide(|p| apply_f_operator(f, p))
    }

    pub fn misclassified(&self) -> Vec<OneBitFunction> {
        OneBitFunction::ALL
            .into_iter()
            .filter(|&f| self.classify(f) != f.class())
            .collect()
    }
}

/// Queries `(0,0)` then `(1,0)`, reads `f(0)` and `f(1)` off the target wire
/// and answers Balanced iff `f(0) ⊕ f(1) = 1`.
pub fn two_query_decide<O: FnMut(BitPair) -> BitPair>(mut oracle: O) -> Verdict {
    let f0 = oracle(BitPair::new(Bit::Zero, Bit::Zero)).y;
    let f1 = oracle(BitPair::new(Bit::One, Bit::Zero)).y;
    match f0 ^ f1 {
        Bit::Zero => Verdict::Constant,
        Bit::One => Verdict::Balanced,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyFailure {
    pub strategy: ClassicalStrategy,
    /// Never empty.
    pub misclassified: Vec<OneBitFunction>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessRun {
    pub function: OneBitFunction,
    pub verdict: Verdict,
    pub oracle_calls: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryBoundReport {
    /// Every one-query strategy, each paired with the functions it gets wrong.
    pub one_query: Vec<StrategyFailure>,
    /// The two-query witness run against each function.
    pub witness: Vec<WitnessRun>,
    pub lower_bound: usize,
    pub strategy_space: &'static str,
}

impl QueryBoundReport {
    pub fn witness_correct(&self) -> usize {
        self.witness
            .iter()
            .filter(|run| run.verdict == run.function.class())
            .count()
    }

    pub fn every_one_query_strategy_fails(&self) -> bool {
        self.one_query.len() == 16 && self.one_query.iter().all(|s| !s.misclassified.is_empty())
    }
}

/// Minimum number of classical queries needed to tell constant from balanced
/// with certainty.
pub fn min_classical_queries() -> QueryBoundReport {
    let one_query: Vec<StrategyFailure> = ClassicalStrategy::enumerate()
        .into_iter()
        .map(|strategy| StrategyFailure {
            misclassified: strategy.misclassified(),
            strategy,
        })
        .collect();

    let witness: Vec<WitnessRun> = OneBitFunction::ALL
        .into_iter()
        .map(|f| {
            let mut calls = 0;
            let verdict = two_query_decide(|p| {
                calls += 1;
                apply_f_operator(f, p)
            });
            WitnessRun {
                function: f,
                verdict,
                oracle_calls: calls,
            }
        })
        .collect();

    let one_query_suffices = one_query.iter().any(|s| s.misclassified.is_empty());
    let two_queries_suffice = witness
        .iter()
        .all(|run| run.verdict == run.function.class());
    // Zero queries is covered by the decision maps that ignore the observation.
    let lower_bound = match (one_query_suffices, two_queries_suffice) {
        (true, _) => 1,
        (false, true) => 2,
        (false, false) => 3,
    };

    QueryBoundReport {
        one_query,
        witness,
        lower_bound,
        strategy_space:
            "deterministic non-adaptive single-query strategies (4 inputs x 4 decision maps)",
    }
}
