use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A permutation moved a variable to another node's alphabet.
    MixesNodes,
    PositionOutOfRange {
        node: usize,
        position: usize,
    },
    /// The input polynomial is not invariant under the required Young subgroup.
    NotInvariant,
    DimensionMismatch,
    /// Source/target or shape data do not fit together.
    TypeMismatch(String),
    /// A skew shape has two boxes in one column, or is not a skew shape.
    NotHorizontalStrip,
    /// The chosen degree convention breaks an assumption of an algorithm.
    Convention(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MixesNodes => f.write_str("permutation mixes node alphabets"),
            Error::PositionOutOfRange { node, position } => {
                write!(f, "position {position} out of range at node {node}")
            }
            Error::NotInvariant => f.write_str("polynomial is not invariant under the Young subgroup"),
            Error::DimensionMismatch => f.write_str("dimension vectors differ"),
            Error::TypeMismatch(s) => write!(f, "type mismatch: {s}"),
            Error::NotHorizontalStrip => f.write_str("skew shape is not a horizontal strip"),
            Error::Convention(s) => write!(f, "convention failure: {s}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
