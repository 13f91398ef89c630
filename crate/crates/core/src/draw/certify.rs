//! Crossing bounds checked against exact counts.

use serde::Serialize;

use super::{CrossingReport, Drawing};

/// `value < num/den` when `strict`, else `value <= num/den`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub value: u64,
    pub num: u64,
    pub den: u64,
    pub strict: bool,
}

impl BoundCheck {
    pub fn at_most(name: &str, value: usize, bound: u64) -> BoundCheck {
        BoundCheck { name: name.into(), value: value as u64, num: bound, den: 1, strict: false }
    }

    pub fn below(name: &str, value: usize, num: u64, den: u64) -> BoundCheck {
        BoundCheck { name: name.into(), value: value as u64, num, den, strict: true }
    }

    pub fn holds(&self) -> bool {
        let lhs = self.value as u128 * self.den as u128;
        if self.strict {
            lhs < self.num as u128
        } else {
            lhs <= self.num as u128
        }
    }
}

/// A drawing, its exact crossing report, and the bounds it was checked against.
#[derive(Clone, Debug)]
pub struct CertifiedDrawing {
    pub drawing: Drawing,
    pub report: CrossingReport,
    pub checks: Vec<BoundCheck>,
}

impl CertifiedDrawing {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(BoundCheck::holds)
    }

    pub fn failed(&self) -> Vec<&BoundCheck> {
        self.checks.iter().filter(|c| !c.holds()).collect()
    }
}
