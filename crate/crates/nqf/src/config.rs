use std::fmt;
use std::path::PathBuf;

use nqf_core::polyring::Constants;
use nqf_core::{CartanType, Error, Rational, Result, RootSystem};

/// Output format of reports and dumps.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Everything a run depends on.
#[derive(Clone, Debug)]
pub struct EngineConfig {
    pub kind: CartanType,
    pub rank: usize,
    /// `None` builds until the algebra ends.
    pub max_degree: Option<usize>,
    pub c_long: Rational,
    pub c_short: Rational,
    pub seed: u64,
    pub cache_dir: Option<PathBuf>,
    pub format: Format,
}

impl EngineConfig {
    pub fn new(kind: CartanType, rank: usize) -> Self {
        EngineConfig {
            kind,
            rank,
            max_degree: default_max_degree(kind, rank),
            c_long: Rational::ONE,
            c_short: Rational::ONE,
            seed: 0,
            cache_dir: None,
            format: Format::Json,
        }
    }

    pub fn with_max_degree(mut self, d: Option<usize>) -> Self {
        self.max_degree = d;
        self
    }

    pub fn with_constants(mut self, c_long: Rational, c_short: Rational) -> Self {
        self.c_long = c_long;
        self.c_short = c_short;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_cache(mut self, dir: Option<PathBuf>) -> Self {
        self.cache_dir = dir;
        self
    }

    pub fn root_system(&self) -> Result<RootSystem> {
        RootSystem::new(self.kind, self.rank)
    }

    /// Constants `c_α`, one value per root length; validated orbit-constant.
    pub fn constants(&self, rs: &RootSystem) -> Result<Constants> {
        if rs.positive_roots().iter().all(|r| r.long) && self.c_short != self.c_long && !self.c_short.is_one() {
            return Err(Error::InvalidConstants(format!("{}{} has no short roots", self.kind, self.rank)));
        }
        let c = Constants::by_length(rs, self.c_long.clone(), self.c_short.clone())?;
        Constants::from_values(rs, c.values().to_vec())
    }

    pub fn instance(&self) -> Instance {
        Instance { kind: self.kind, rank: self.rank }
    }
}

/// Default truncation: full algebras whose size is known to be small, degree 6 otherwise.
pub fn default_max_degree(kind: CartanType, rank: usize) -> Option<usize> {
    match (kind, rank) {
        (CartanType::A, 1..=3) | (CartanType::B | CartanType::C, 2) | (CartanType::D, 3) => None,
        _ => Some(6),
    }
}

/// Root-system label such as `A2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Instance {
    pub kind: CartanType,
    pub rank: usize,
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.rank)
    }
}
