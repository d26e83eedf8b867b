use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ratfun::ZeroLocation;

/// The inequalities this crate evaluates.
///
/// Names follow the attribution and year of each result; the `Main*` ids
/// are the two new bounds with an `m` correction and their corollaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// `|r'| <= |B'| ||r|| / 2`, zeros in `|z| >= 1`.
    LiUpper,
    /// `|r'| >= [|B'|/2 - (n - t)/2] |r|`, zeros in `|z| <= 1`.
    LiLower,
    /// `|r'| <= |B'| (||r|| - m) / 2`, `m` the minimum on the unit circle.
    #[serde(rename = "aziz-shah-upper-97")]
    AzizShahUpper97,
    /// `|r'| >= |B'| (|r| + m) / 2`, exactly `n` zeros in `|z| <= 1`.
    #[serde(rename = "aziz-shah-lower-97")]
    AzizShahLower97,
    /// Upper bound for zeros in `|z| >= k >= 1`, corrected by `|r|^2 / ||r||^2`.
    #[serde(rename = "aziz-zarger-99")]
    AzizZarger99,
    /// Lower bound for zeros in `|z| <= k <= 1`, with the zero count `t`.
    #[serde(rename = "aziz-shah-04")]
    AzizShah04,
    /// [`TheoremId::AzizShah04`] with exactly `n` zeros.
    #[serde(rename = "aziz-shah-04-cor")]
    AzizShah04Cor,
    /// Upper bound for zeros in `|z| >= k >= 1` with `m = min_{|z|=k} |r|`.
    MainUpper,
    /// [`TheoremId::MainUpper`] when a zero lies on `|z| = k` (so `m = 0`).
    MainUpperCor,
    /// Lower bound for zeros in `|z| <= k <= 1` with `m = min_{|z|=k} |r|`.
    MainLower,
    /// [`TheoremId::MainLower`] with exactly `n` zeros.
    MainLowerCor,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::LiUpper,
        TheoremId::LiLower,
        TheoremId::AzizShahUpper97,
        TheoremId::AzizShahLower97,
        TheoremId::AzizZarger99,
        TheoremId::AzizShah04,
        TheoremId::AzizShah04Cor,
        TheoremId::MainUpper,
        TheoremId::MainUpperCor,
        TheoremId::MainLower,
        TheoremId::MainLowerCor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::LiUpper => "li-upper",
            TheoremId::LiLower => "li-lower",
            TheoremId::AzizShahUpper97 => "aziz-shah-upper-97",
            TheoremId::AzizShahLower97 => "aziz-shah-lower-97",
            TheoremId::AzizZarger99 => "aziz-zarger-99",
            TheoremId::AzizShah04 => "aziz-shah-04",
            TheoremId::AzizShah04Cor => "aziz-shah-04-cor",
            TheoremId::MainUpper => "main-upper",
            TheoremId::MainUpperCor => "main-upper-cor",
            TheoremId::MainLower => "main-lower",
            TheoremId::MainLowerCor => "main-lower-cor",
        }
    }

    pub fn hypothesis(self) -> Hypothesis {
        use MinCircle as M;
        use RadiusRule as R;
        use Side::{Lower, Upper};
        let (side, radius, exactly_n_poles, exactly_n_zeros, zero_on_circle, min_circle) =
            match self {
                TheoremId::LiUpper => (Upper, R::Unit, false, false, false, M::None),
                TheoremId::LiLower => (Lower, R::Unit, true, false, false, M::None),
                TheoremId::AzizShahUpper97 => (Upper, R::Unit, false, false, false, M::Unit),
                TheoremId::AzizShahLower97 => (Lower, R::Unit, false, true, false, M::Unit),
                TheoremId::AzizZarger99 => (Upper, R::AtLeastOne, false, false, false, M::None),
                TheoremId::AzizShah04 => (Lower, R::AtMostOne, true, false, false, M::None),
                TheoremId::AzizShah04Cor => (Lower, R::AtMostOne, false, true, false, M::None),
                TheoremId::MainUpper => (Upper, R::AtLeastOne, true, false, false, M::ZeroRegion),
                TheoremId::MainUpperCor => (Upper, R::AtLeastOne, true, false, true, M::None),
                TheoremId::MainLower => (Lower, R::AtMostOne, true, false, false, M::ZeroRegion),
                TheoremId::MainLowerCor => (Lower, R::AtMostOne, true, true, false, M::ZeroRegion),
            };
        Hypothesis {
            side,
            radius,
            exactly_n_poles,
            exactly_n_zeros,
            zero_on_circle,
            min_circle,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownTheorem(pub String);

impl fmt::Display for UnknownTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown theorem name '{}'", self.0)
    }
}

impl std::error::Error for UnknownTheorem {}

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Upper,
    Lower,
}

/// Which radii `k` a theorem admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadiusRule {
    /// `k = 1` regardless of input.
    Unit,
    AtLeastOne,
    AtMostOne,
}

impl RadiusRule {
    pub fn effective(self, k: f64) -> f64 {
        match self {
            RadiusRule::Unit => 1.0,
            _ => k,
        }
    }

    pub fn admits(self, k: f64) -> bool {
        k.is_finite()
            && match self {
                RadiusRule::Unit => k == 1.0,
                RadiusRule::AtLeastOne => k >= 1.0,
                RadiusRule::AtMostOne => k > 0.0 && k <= 1.0,
            }
    }
}

impl fmt::Display for RadiusRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RadiusRule::Unit => "k = 1",
            RadiusRule::AtLeastOne => "k >= 1",
            RadiusRule::AtMostOne => "0 < k <= 1",
        })
    }
}

/// The circle the theorem's `m` is a minimum over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinCircle {
    None,
    Unit,
    /// `|z| = k`, the boundary of the zero region.
    ZeroRegion,
}

/// Hypothesis descriptor of a theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hypothesis {
    pub side: Side,
    pub radius: RadiusRule,
    pub exactly_n_poles: bool,
    pub exactly_n_zeros: bool,
    /// At least one zero on `|z| = k`.
    pub zero_on_circle: bool,
    pub min_circle: MinCircle,
}

impl Hypothesis {
    /// Upper bounds constrain zeros to `|z| >= k`, lower bounds to `|z| <= k`.
    pub fn zero_region(&self, k: f64) -> ZeroLocation {
        match self.side {
            Side::Upper => ZeroLocation::AllOutsideOrOn(k),
            Side::Lower => ZeroLocation::AllInsideOrOn(k),
        }
    }
}
