use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The diagram monoids the library knows how to count.
///
/// `T`, `I` and `Idual` are the full transformation monoid, the symmetric
/// inverse monoid and the dual symmetric inverse monoid, each realised as a
/// submonoid of the partition monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MonoidFamily {
    P,
    B,
    PB,
    T,
    I,
    Idual,
}

impl MonoidFamily {
    pub const ALL: [MonoidFamily; 6] = [
        MonoidFamily::P,
        MonoidFamily::B,
        MonoidFamily::PB,
        MonoidFamily::T,
        MonoidFamily::I,
        MonoidFamily::Idual,
    ];

    /// The three families with closed forms for their rank-zero R-classes.
    pub fn is_diagram_family(self) -> bool {
        matches!(self, MonoidFamily::P | MonoidFamily::B | MonoidFamily::PB)
    }

    pub fn name(self) -> &'static str {
        match self {
            MonoidFamily::P => "P",
            MonoidFamily::B => "B",
            MonoidFamily::PB => "PB",
            MonoidFamily::T => "T",
            MonoidFamily::I => "I",
            MonoidFamily::Idual => "Idual",
        }
    }
}

impl fmt::Display for MonoidFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonoidFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        MonoidFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown family `{s}`")))
    }
}
