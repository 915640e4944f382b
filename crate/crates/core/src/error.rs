use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("state index {index} out of range for {wires} wire(s)")]
    StateOutOfRange { index: u64, wires: u8 },
    #[error("bit vector has {got} bits, expected {expected}")]
    BitLength { got: usize, expected: usize },
    #[error("invalid bit string {0:?}")]
    BitSyntax(String),
    #[error("wire count {0} is not supported (1..={max})", max = crate::perm::MAX_WIRES)]
    UnsupportedWires(u32),
    #[error("wire count mismatch: {0} vs {1}")]
    WireMismatch(u8, u8),
    #[error("image is not a bijection on 1..={0}")]
    NotBijection(u32),
    #[error("malformed cycle notation: {0}")]
    CycleSyntax(String),
    #[error("element {0} appears more than once in cycle notation")]
    RepeatedElement(u32),
    #[error("invalid gate: {0}")]
    InvalidGate(String),
    #[error("no cost defined for gate kind {0}")]
    UndefinedCost(String),
    #[error("unknown library {0:?}")]
    UnknownLibrary(String),
    #[error("empty generator set")]
    EmptyGenerators,
    #[error("closure exceeds {0} elements")]
    ClosureTooLarge(usize),
    #[error("library {name} has {size} gates; exhaustive sub-library analysis supports at most {max}")]
    LibraryTooLarge { name: String, size: usize, max: usize },
    #[error("exhaustive search requires 3 wires, got {0}")]
    SearchWires(u8),
    #[error("target {0} is not reachable with library {1}")]
    Unreachable(String, String),
    #[error("gate {0} has no elementary decomposition")]
    UnsupportedGate(String),
    #[error("non-classical gate {0}; use unitary mode")]
    NonClassical(String),
    #[error("optimizer did not reach a fixpoint within {0} passes")]
    PassLimit(u32),
    #[error("optimized circuit is not equivalent to its input")]
    NotEquivalent,
    #[error("netlist line {line}: {msg}")]
    Netlist { line: usize, msg: String },
    #[error("unknown table {0:?}")]
    UnknownTable(String),
    #[error("output error: {0}")]
    Output(String),
}

impl Error {
    /// Errors caused by malformed or out-of-range input, as opposed to a
    /// computation that cannot succeed on valid input.
    pub fn is_input_error(&self) -> bool {
        use Error::*;
        matches!(
            self,
            StateOutOfRange { .. }
                | BitLength { .. }
                | BitSyntax(_)
                | UnsupportedWires(_)
                | WireMismatch(..)
                | NotBijection(_)
                | CycleSyntax(_)
                | RepeatedElement(_)
                | InvalidGate(_)
                | UnknownLibrary(_)
                | EmptyGenerators
                | SearchWires(_)
                | Netlist { .. }
                | UnknownTable(_)
        )
    }
}
