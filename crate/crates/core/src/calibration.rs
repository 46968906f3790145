//! Orientation conventions that the homological model cannot derive on its own.
//!
//! Three free signs enter the computation:
//!
//! * `twist` (ε_T): handedness of the transvection realizing a Dehn twist,
//!   `x ↦ x + ε_T ⟨x,c⟩ c`;
//! * `arc` (ε_L): the pairing `λ(d)` of the arc `l` with the boundary class `d`;
//! * `tau` (ε_τ): global sign of the Meyer cocycle relative to the standard form `J`.
//!
//! [`Calibration::CALIBRATED`] is the assignment selected by the calibration procedure in
//! [`crate::campaign::calibrate`]: `arc = -1` is forced by symplecticity of the annulus
//! stabilization, `tau = -1` by the cobound identity, and `twist = -1` (the usual
//! left-handed twist `x ↦ x + ⟨c,x⟩c`) is the tie-break between the two twist
//! handednesses, which generate the same group and therefore score identically on the
//! cobound identity.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = Error;
    fn try_from(v: i64) -> Result<Self, Error> {
        match v {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            other => Err(Error::InvalidSign(other)),
        }
    }
}

impl From<Sign> for i64 {
    fn from(s: Sign) -> i64 {
        s.value()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+1",
            Sign::Negative => "-1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Calibration {
    pub twist: Sign,
    pub arc: Sign,
    pub tau: Sign,
}

impl Calibration {
    pub const CALIBRATED: Calibration =
        Calibration { twist: Sign::Negative, arc: Sign::Negative, tau: Sign::Negative };

    /// All eight assignments, in a fixed order.
    pub fn all() -> [Calibration; 8] {
        let s = [Sign::Positive, Sign::Negative];
        let mut out = [Self::CALIBRATED; 8];
        let mut i = 0;
        for twist in s {
            for arc in s {
                for tau in s {
                    out[i] = Calibration { twist, arc, tau };
                    i += 1;
                }
            }
        }
        out
    }
}

impl Default for Calibration {
    fn default() -> Self {
        Self::CALIBRATED
    }
}

impl fmt::Display for Calibration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(eps_twist={}, eps_arc={}, eps_tau={})", self.twist, self.arc, self.tau)
    }
}
