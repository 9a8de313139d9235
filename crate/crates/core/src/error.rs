use core::fmt;

/// Errors raised when an operation is called outside its domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A `(d, g, r)` triple violating `d >= 1`, `g >= 0`, `r >= 3`.
    InvalidCurveClass { d: i64, g: i64, r: i64 },
    /// A divisor class with a negative coefficient or invariant.
    InvalidDivisorClass { a: i64, b: i64, e: i64 },
    /// An argument outside the domain where the operation is defined.
    OutOfDomain { op: &'static str, reason: &'static str },
    /// Two divisor classes living on different surfaces.
    SurfaceMismatch { left: i64, right: i64 },
    /// The curve class has arithmetic genus too small to split into a stable curve.
    BelowStability { genus: i64 },
    /// `d` has no representation `a * base + eta` with `eta` in `{0, 1}` and `a >= 1`.
    NoConeRepresentation { d: i64, base: i64 },
    /// An intermediate value left the range of the integer type.
    Overflow { op: &'static str },
    /// The enumeration requested is larger than the scan is willing to walk.
    SearchTooLarge { op: &'static str, size: u128 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidCurveClass { d, g, r } => write!(
                f,
                "invalid curve class (d={d}, g={g}, r={r}): need d >= 1, g >= 0, r >= 3"
            ),
            Error::InvalidDivisorClass { a, b, e } => write!(
                f,
                "invalid divisor class (a={a}, b={b}, e={e}): coefficients must be non-negative"
            ),
            Error::OutOfDomain { op, reason } => write!(f, "{op}: {reason}"),
            Error::SurfaceMismatch { left, right } => {
                write!(f, "divisor classes live on different surfaces (e={left} vs e={right})")
            }
            Error::BelowStability { genus } => {
                write!(f, "genus {genus} below stability threshold")
            }
            Error::NoConeRepresentation { d, base } => {
                write!(f, "degree {d} is not of the form a*{base} + eta with eta in {{0,1}}, a >= 1")
            }
            Error::Overflow { op } => write!(f, "{op}: integer overflow"),
            Error::SearchTooLarge { op, size } => {
                write!(f, "{op}: search space of {size} candidates exceeds the scan limit")
            }
        }
    }
}

impl core::error::Error for Error {}
