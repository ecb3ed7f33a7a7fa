use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Working precision of a job.
///
/// `Fast` runs on `f64`; `High` runs on double-double (106-bit significand).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    #[default]
    Fast,
    High,
}

impl Precision {
    /// Decimal digits the representation carries reliably. Caps `zeros_N`.
    pub fn significant_digits(self) -> u32 {
        match self {
            Precision::Fast => 15,
            Precision::High => 32,
        }
    }

    /// Digits printed in reports and data files.
    pub fn print_digits(self) -> usize {
        match self {
            Precision::Fast => 17,
            Precision::High => 36,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Precision::Fast => "fast",
            Precision::High => "high",
        }
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Precision {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "fast" | "double" => Ok(Precision::Fast),
            "high" | "quad" => Ok(Precision::High),
            other => Err(format!("unknown precision `{other}` (expected fast|high)")),
        }
    }
}
