use thiserror::Error;

/// Errors raised by group construction and the exact-arithmetic kernels.
#[derive(Debug, Error)]
pub enum Error {
    #[error("multiplication table is not associative: ({0} {1}) {2} != {0} ({1} {2})")]
    NotAssociative(u32, u32, u32),
    #[error("identity or inverse law fails at element {0}")]
    BadIdentity(u32),
    #[error("group order {0} exceeds the order bound {1}")]
    OrderBound(usize, usize),
    #[error("pi is not a homomorphism to {{+1,-1}}")]
    BadGrading,
    #[error("grading is trivial but a non-trivial grading is required")]
    TrivialGrading,
    #[error("element {0} is not in the even part ker(pi)")]
    NotInKernel(u32),
    #[error("elements {0} and {1} do not commute")]
    NonCommuting(u32, u32),
    #[error("map is not a group homomorphism")]
    NotHomomorphism,
    #[error("not a right action: {0}")]
    BadAction(String),
    #[error("cochain degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("cochain base group or twist type mismatch")]
    BaseMismatch,
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(i64, i64),
    #[error("cochain is not a cocycle")]
    NotCocycle,
    #[error("value {0}/{1} does not lie in (1/{2})Z/Z")]
    BadModulus(i64, i64, i64),
    #[error("level {0} is not a multiple of the element order {1}")]
    BadLevel(u64, u64),
    #[error("class of the element has sign -1; i_g targets a +1-sign class")]
    NegativeSignClass,
    #[error("Tate torsion order mismatch: {0} vs {1}")]
    TateOrderMismatch(u32, u32),
    #[error("not a unit monomial in the Tate coefficient ring")]
    NotMonomialUnit,
    #[error("point invariant xi^N = q^i fails")]
    TateInvariant,
    #[error("subgroup is not closed or not graded-compatible")]
    BadSubgroup,
    #[error("twisted classes do not support power operations; twist compatibility is an open problem")]
    TwistedPowerUnsupported,
    #[error("kernel of the quotient is not trivially graded")]
    KernelGraded,
    #[error("{0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
