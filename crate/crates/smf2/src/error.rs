//! Error type shared by all modules.
//!
//! Display output starts with the error name so that the CLI can report
//! domain failures as `<Name>: <detail>` on standard error.

use thiserror::Error;

use crate::quadform::BinQF;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("NotPositiveSemidefinite: [{0},{1},{2}] is not positive semidefinite")]
    NotPositiveSemidefinite(i64, i64, i64),
    #[error("OutOfPrecision: index [{},{},{}] exceeds the stored precision", .0.a, .0.b, .0.c)]
    OutOfPrecision(BinQF),
    #[error("CharacterMismatch: cannot add forms with different characters; embed into the group ring first")]
    CharacterMismatch,
    #[error("ModuleMismatch: {0}")]
    ModuleMismatch(String),
    #[error("SupportNotDivisible: nonzero coefficient at [{},{},{}] is not divisible by {1}", .0.a, .0.b, .0.c)]
    SupportNotDivisible(BinQF, i64),
    #[error("NotEquivariant: no formal character is consistent; witness index [{},{},{}]", .0.a, .0.b, .0.c)]
    NotEquivariant(BinQF),
    #[error("BadWeight: {0}")]
    BadWeight(String),
    #[error("MissingWeight: the operation requires weight metadata")]
    MissingWeight,
    #[error("NotFundamental: {0} is not a fundamental discriminant")]
    NotFundamental(i64),
    #[error("InconsistentIndexLaw: d({0},{1}) conflicts with an earlier value for the same (4n-r^2, r mod 2)")]
    InconsistentIndexLaw(i64, i64),
    #[error("InsufficientJacobiPrecision: need q-precision {0}, have {1}")]
    InsufficientJacobiPrecision(usize, usize),
    #[error("InsufficientPrecision: {0}")]
    InsufficientPrecision(String),
    #[error("ZeroConstant: theta constant with odd pairing t(a)b vanishes identically")]
    ZeroConstant,
    #[error("OddPairing: theta product contains a factor with odd t(a)b")]
    OddPairing,
    #[error("NotIsotropic: the vector data is not isotropic")]
    NotIsotropic,
    #[error("NotPluriharmonic: the polynomial datum failed the equivariance check")]
    NotPluriharmonic,
    #[error("NotPrime: {0} is not prime")]
    NotPrime(i64),
    #[error("RankDeficient: basis is linearly dependent at the available precision")]
    RankDeficient,
    #[error("NotInSpan: the linear system is inconsistent")]
    NotInSpan,
    #[error("UnderDetermined: too few indices to determine coordinates")]
    UnderDetermined,
    #[error("ZeroWeight: bracket arguments must have nonzero weight")]
    ZeroWeight,
    #[error("OddFirstWeight: the Sym4 bracket requires the first weight to be even")]
    OddFirstWeight,
    #[error("BadLattice: {0}")]
    BadLattice(String),
    #[error("UnsupportedLevel: theta constants are implemented for level N = 2 only (got {0})")]
    UnsupportedLevel(i64),
    #[error("Format: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
