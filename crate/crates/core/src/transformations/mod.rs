//! The five Kf-increasing transformations and the driver that chains them.
//!
//! Every transformation produces an [`OperationCertificate`]: the graphs
//! before and after, their exact Kirchhoff indices, the side conditions that
//! were checked and the inequality those conditions entitle us to claim.

mod driver;
mod ops;

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::rational::Rational;
use crate::resistance::{kirchhoff_index, resistance_matrix};

pub use driver::{canonicalize_to_extremal, Canonicalization};
pub use ops::{operation_i, operation_ii, operation_iii, operation_iv, operation_v, OpIPart};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum OperationId {
    I,
    II,
    III,
    IV,
    V,
}

/// One checked side condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

impl Hypothesis {
    pub fn new(name: impl Into<String>, holds: bool) -> Self {
        Hypothesis {
            name: name.into(),
            holds,
        }
    }
}

/// What the hypotheses entitle us to claim about `delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Claim {
    /// `delta > 0`.
    Increase,
    /// `delta >= 0`.
    NonDecrease,
    /// `delta = 0`.
    Unchanged,
}

impl Claim {
    pub fn holds_for(self, delta: &Rational) -> bool {
        let zero = Rational::from_integer(0.into());
        match self {
            Claim::Increase => *delta > zero,
            Claim::NonDecrease => *delta >= zero,
            Claim::Unchanged => *delta == zero,
        }
    }
}

/// A named exact auxiliary value recorded alongside a certificate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Quantity {
    pub name: String,
    #[serde(with = "crate::rational::as_string")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OperationCertificate {
    pub op: OperationId,
    #[serde(with = "crate::io::as_graph6")]
    pub before: Graph,
    #[serde(with = "crate::io::as_graph6")]
    pub after: Graph,
    #[serde(with = "crate::rational::as_string")]
    pub kf_before: Rational,
    #[serde(with = "crate::rational::as_string")]
    pub kf_after: Rational,
    #[serde(with = "crate::rational::as_string")]
    pub delta: Rational,
    pub hypotheses: Vec<Hypothesis>,
    pub claim: Claim,
    pub quantities: Vec<Quantity>,
}

impl OperationCertificate {
    pub(crate) fn new(op: OperationId, before: Graph, after: Graph, hypotheses: Vec<Hypothesis>, claim: Claim) -> Result<Self> {
        let kf_before = kirchhoff_index(&before)?;
        let kf_after = kirchhoff_index(&after)?;
        let delta = &kf_after - &kf_before;
        Ok(OperationCertificate {
            op,
            before,
            after,
            kf_before,
            kf_after,
            delta,
            hypotheses,
            claim,
            quantities: Vec::new(),
        })
    }

    pub(crate) fn with_quantity(mut self, name: &str, value: Rational) -> Self {
        self.quantities.push(Quantity {
            name: name.to_string(),
            value,
        });
        self
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|h| h.holds)
    }

    /// True when the claim is in force and `delta` satisfies it.
    pub fn claim_verified(&self) -> bool {
        self.hypotheses_hold() && self.claim.holds_for(&self.delta)
    }

    /// False only if the hypotheses held and the claim was violated.
    pub fn consistent(&self) -> bool {
        !self.hypotheses_hold() || self.claim.holds_for(&self.delta)
    }

    pub fn quantity(&self, name: &str) -> Option<&Rational> {
        self.quantities.iter().find(|q| q.name == name).map(|q| &q.value)
    }
}

/// All unordered vertex pairs of largest resistance distance, sorted.
pub fn longest_path_endpoints(g: &Graph) -> Result<Vec<(usize, usize)>> {
    Ok(resistance_matrix(g)?.maximizing_pairs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_cycle, build_path, build_triangle_chain};

    #[test]
    fn longest_pairs() {
        assert_eq!(longest_path_endpoints(&build_path(5).unwrap().graph).unwrap(), vec![(0, 4)]);
        assert_eq!(longest_path_endpoints(&build_cycle(4).unwrap().graph).unwrap(), vec![(0, 2), (1, 3)]);
        let bowtie = build_triangle_chain(2).unwrap().graph;
        // far vertices of the two triangles: {0, 1} x {3, 4}
        assert_eq!(
            longest_path_endpoints(&bowtie).unwrap(),
            vec![(0, 3), (0, 4), (1, 3), (1, 4)]
        );
    }

    #[test]
    fn claims() {
        use crate::rational::int;
        assert!(Claim::Increase.holds_for(&int(1)));
        assert!(!Claim::Increase.holds_for(&int(0)));
        assert!(Claim::NonDecrease.holds_for(&int(0)));
        assert!(!Claim::Unchanged.holds_for(&int(-1)));
    }
}
