//! Validated run configuration.

use std::path::PathBuf;
use std::str::FromStr;

use exact_arith::{check_modulus, DEFAULT_PRIME};

use crate::error::CliError;

/// Largest `n` built symbolically.
pub const MAX_SYMBOLIC_N: usize = 5;

/// Which complex a command acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexChoice {
    F,
    M,
}

impl FromStr for ComplexChoice {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "F" | "f" => Ok(ComplexChoice::F),
            "M" | "m" => Ok(ComplexChoice::M),
            _ => Err(CliError::Usage(format!("unknown complex {s:?}; expected F or M"))),
        }
    }
}

/// Named check suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckId {
    D2,
    Decomposition,
    Chainmaps,
    Betti,
    Minimality,
    Duality,
    H0,
    Exactness,
    Grade,
    Isos,
    Tor,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::D2,
        CheckId::Decomposition,
        CheckId::Chainmaps,
        CheckId::Betti,
        CheckId::Minimality,
        CheckId::Duality,
        CheckId::H0,
        CheckId::Exactness,
        CheckId::Grade,
        CheckId::Isos,
        CheckId::Tor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::D2 => "d2",
            CheckId::Decomposition => "decomposition",
            CheckId::Chainmaps => "chainmaps",
            CheckId::Betti => "betti",
            CheckId::Minimality => "minimality",
            CheckId::Duality => "duality",
            CheckId::H0 => "h0",
            CheckId::Exactness => "exactness",
            CheckId::Grade => "grade",
            CheckId::Isos => "isos",
            CheckId::Tor => "tor",
        }
    }
}

impl FromStr for CheckId {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        CheckId::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<&str> = CheckId::ALL.iter().map(|c| c.name()).collect();
            CliError::Usage(format!("unknown check id {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

/// Everything a command needs, validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub d_u: i64,
    pub prime: u64,
    pub seed: u64,
    pub complex: Option<ComplexChoice>,
    pub specialization: String,
    pub out: Option<PathBuf>,
    pub json: bool,
    /// Record wall time in reports; off by default so reports are reproducible.
    pub timings: bool,
}

pub const SPECIALIZATIONS: [&str; 4] = ["generic", "diagonal", "random", "block"];

impl RunConfig {
    /// Defaults: `n = 3`, `d_u = ⌊(n−1)/2⌋`, `p = 1000003`, `seed = 0`, generic data.
    pub fn new(n: usize) -> Self {
        RunConfig {
            n,
            d_u: (n as i64 - 1) / 2,
            prime: DEFAULT_PRIME,
            seed: 0,
            complex: None,
            specialization: "generic".into(),
            out: None,
            json: false,
            timings: false,
        }
    }

    /// Coefficient mode: symbolic over ℤ unless specialized to a random 𝔽_p point.
    pub fn symbolic(&self) -> bool {
        self.specialization != "random"
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if !(2..=exact_arith::MAX_N).contains(&self.n) {
            return Err(CliError::Usage(format!("n must lie in 2..={}, got {}", exact_arith::MAX_N, self.n)));
        }
        if self.symbolic() && self.n > MAX_SYMBOLIC_N {
            return Err(CliError::Usage(format!("symbolic mode supports n <= {MAX_SYMBOLIC_N}; use --specialization random for n = {}", self.n)));
        }
        if self.d_u < 0 || self.d_u > self.n as i64 - 1 {
            return Err(CliError::Usage(format!("d_u must lie in 0..={}, got {}", self.n - 1, self.d_u)));
        }
        check_modulus(self.prime).map_err(|e| CliError::Usage(e.to_string()))?;
        if !SPECIALIZATIONS.contains(&self.specialization.as_str()) {
            return Err(CliError::Usage(format!("unknown specialization {:?}; expected one of {}", self.specialization, SPECIALIZATIONS.join(", "))));
        }
        Ok(())
    }
}
