//! Verification harness: configurations, embedded expected structures,
//! the pipeline runner and report emission.

pub mod report;
pub mod runner;
pub mod tables;

pub use report::{CheckResult, OrbitReport, Report};
pub use runner::run_verification;
pub use tables::{expected_config, ExpectedConfig, ExpectedOrbit};

use crate::error::{Error, Result};
use crate::geometry::Family;
use crate::gfmat::is_prime;

/// Which nonsingular orbits to report on.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum KappaChoice {
    Plus,
    Minus,
    Both,
}

impl KappaChoice {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "+1" | "plus" => Ok(KappaChoice::Plus),
            "-1" | "minus" => Ok(KappaChoice::Minus),
            "both" => Ok(KappaChoice::Both),
            _ => Err(Error::UnsupportedConfig(format!("bad kappa `{s}`"))),
        }
    }

    pub fn includes(self, kappa: u8) -> bool {
        match self {
            KappaChoice::Plus => kappa == 1,
            KappaChoice::Minus => kappa == 2,
            KappaChoice::Both => true,
        }
    }
}

/// A verification job.
#[derive(Clone, Debug)]
pub struct Config {
    pub family: Family,
    pub m: usize,
    pub ell: u64,
    pub kappa: KappaChoice,
    pub seed: u64,
    pub order_check: bool,
    pub lattice_enum: bool,
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if self.ell == 3 || !is_prime(self.ell) || self.ell >= 256 {
            return Err(Error::BadModulus(self.ell));
        }
        let supported = matches!(
            (self.family, self.m),
            (Family::Minus, 4)
                | (Family::Plus, 6)
                | (Family::Minus, 6)
                | (Family::Odd, 7)
                | (Family::Plus, 8)
                | (Family::Minus, 8)
        );
        if !supported {
            return Err(Error::UnsupportedConfig(format!(
                "family {} with m = {} (supported: minus-4, plus/minus-6, odd-7, plus/minus-8)",
                self.family.name(),
                self.m
            )));
        }
        Ok(())
    }

    pub fn label(&self) -> String {
        format!("{}-{}-ell{}", self.family.name(), self.m, self.ell)
    }
}

/// The table-row class of a prime for a given family and half-rank n.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum EllClass {
    /// ell != 2 and coprime to the relevant 3^n -+ 1.
    Generic,
    /// ell != 2 divides 3^n - 1.
    DividesQMinusOne,
    /// ell != 2 divides 3^n + 1.
    DividesQPlusOne,
    /// ell = 2 with n even.
    TwoEven,
    /// ell = 2 with n odd.
    TwoOdd,
}

impl EllClass {
    pub fn name(self) -> &'static str {
        match self {
            EllClass::Generic => "generic",
            EllClass::DividesQMinusOne => "ell | 3^n - 1",
            EllClass::DividesQPlusOne => "ell | 3^n + 1",
            EllClass::TwoEven => "ell = 2, n even",
            EllClass::TwoOdd => "ell = 2, n odd",
        }
    }
}

/// Exactly one class per (family, n, prime).
pub fn classify_ell(family: Family, n: usize, ell: u64) -> EllClass {
    if ell == 2 {
        return if n % 2 == 0 {
            EllClass::TwoEven
        } else {
            EllClass::TwoOdd
        };
    }
    let qn = 3u64.pow(n as u32);
    match family {
        Family::Plus => {
            if (qn - 1) % ell == 0 {
                EllClass::DividesQMinusOne
            } else {
                EllClass::Generic
            }
        }
        Family::Minus => {
            if (qn + 1) % ell == 0 {
                EllClass::DividesQPlusOne
            } else {
                EllClass::Generic
            }
        }
        Family::Odd => {
            if (qn - 1) % ell == 0 {
                EllClass::DividesQMinusOne
            } else if (qn + 1) % ell == 0 {
                EllClass::DividesQPlusOne
            } else {
                EllClass::Generic
            }
        }
    }
}

/// The default verification matrix: every table row of every family is hit
/// by some prime (13 | 3^3-1, 7 | 3^3+1 at m = 6/7; ell = 2 covers both
/// parities through m = 4 and m = 6/7).
pub fn default_suite(seed: u64, order_check: bool, lattice_enum: bool) -> Vec<Config> {
    let mut out = Vec::new();
    out.push(Config {
        family: Family::Minus,
        m: 4,
        ell: 2,
        kappa: KappaChoice::Both,
        seed,
        order_check,
        lattice_enum,
    });
    for (family, m) in [(Family::Plus, 6), (Family::Minus, 6), (Family::Odd, 7)] {
        for ell in [2u64, 5, 7, 13] {
            out.push(Config {
                family,
                m,
                ell,
                kappa: KappaChoice::Both,
                seed,
                order_check,
                lattice_enum,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_examples() {
        assert_eq!(classify_ell(Family::Plus, 3, 13), EllClass::DividesQMinusOne);
        assert_eq!(classify_ell(Family::Minus, 3, 7), EllClass::DividesQPlusOne);
        assert_eq!(classify_ell(Family::Plus, 3, 5), EllClass::Generic);
        assert_eq!(classify_ell(Family::Odd, 3, 13), EllClass::DividesQMinusOne);
        assert_eq!(classify_ell(Family::Odd, 3, 7), EllClass::DividesQPlusOne);
        assert_eq!(classify_ell(Family::Odd, 3, 2), EllClass::TwoOdd);
        assert_eq!(classify_ell(Family::Minus, 2, 2), EllClass::TwoEven);
    }

    #[test]
    fn classification_partitions_primes() {
        // every prime lands in exactly one class, and the class is stable
        for family in [Family::Plus, Family::Minus, Family::Odd] {
            for n in [2usize, 3, 4] {
                for ell in [2u64, 5, 7, 11, 13, 41, 61, 73] {
                    let c = classify_ell(family, n, ell);
                    let matches = [
                        c == EllClass::Generic,
                        c == EllClass::DividesQMinusOne,
                        c == EllClass::DividesQPlusOne,
                        c == EllClass::TwoEven,
                        c == EllClass::TwoOdd,
                    ];
                    assert_eq!(matches.iter().filter(|&&b| b).count(), 1);
                }
            }
        }
    }

    #[test]
    fn suite_covers_every_class() {
        use std::collections::BTreeSet;
        let mut seen = BTreeSet::new();
        for cfg in default_suite(0, false, false) {
            cfg.validate().unwrap();
            let n = cfg.m / 2;
            seen.insert((cfg.family.name(), classify_ell(cfg.family, n, cfg.ell).name()));
        }
        // each family hits its generic, divisor and ell=2 rows
        assert!(seen.contains(&("plus", "generic")));
        assert!(seen.contains(&("plus", "ell | 3^n - 1")));
        assert!(seen.contains(&("plus", "ell = 2, n odd")));
        assert!(seen.contains(&("minus", "ell | 3^n + 1")));
        assert!(seen.contains(&("minus", "ell = 2, n even")));
        assert!(seen.contains(&("minus", "ell = 2, n odd")));
        assert!(seen.contains(&("odd", "ell | 3^n - 1")));
        assert!(seen.contains(&("odd", "ell | 3^n + 1")));
        assert!(seen.contains(&("odd", "ell = 2, n odd")));
    }
}
