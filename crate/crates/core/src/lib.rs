//! Matching theory of balanced hypergraphs.
//!
//! A hypergraph is balanced when it contains no strong odd cycle (a cycle none
//! of whose edges holds three or more cycle vertices). This crate implements
//! the structural toolbox around that class at desk scale:
//!
//! * [`hypergraph`] — the data model and the structural operators
//!   (induced / partial / dual hypergraphs, the three deletion operators),
//! * [`balance`] — balancedness recognition with strong-odd-cycle
//!   certificates plus an independent incidence-matrix oracle,
//! * [`solve`] — exact weighted matching and integer vertex-cover solvers,
//!   enumeration of all optima, König duality and degree-bound verifiers,
//! * [`coloring`] — proper vertex 2-colorings, equitable edge bisections and
//!   Δ-color edge colorings,
//! * [`augment`] — coloring-based matching augmentation over multiset union
//!   instances,
//! * [`decompose`] — the D/P/M and F/Q/N vertex decompositions, the classic
//!   D/A/C partition, and item-by-item theorem verifiers,
//! * [`charac`] — characterizations of balancedness through D-sets of partial
//!   subhypergraphs and through maximum-weight stable sets of the dual,
//! * [`gen`] — deterministic seeded instance generators for the test harness,
//! * [`io`] / [`report`] — the text instance format and canonical JSON
//!   reports used by the `hypermatch` CLI.
//!
//! Every solver is exact and exponential; instances are capped at 64 vertices
//! and 64 edges and searches carry explicit state budgets ([`Limits`]) that
//! fail loudly instead of answering wrongly.

pub mod augment;
pub mod balance;
pub mod charac;
pub mod coloring;
pub mod decompose;
pub mod error;
pub mod gen;
pub mod hypergraph;
pub mod io;
pub mod report;
pub mod set;
pub mod solve;
pub mod walk;

pub use error::{Error, Result};
pub use hypergraph::{DeleteMode, Hypergraph};
pub use set::IdSet;
pub use walk::{Walk, WalkClass};

/// Search and enumeration budgets shared by the exponential routines.
///
/// Exceeding a budget is always an explicit [`Error::InstanceTooLarge`],
/// never a silent wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Extended search states (walk extensions, branch-and-bound nodes,
    /// submatrix candidates) a single operation may visit.
    pub max_states: u64,
    /// Largest vertex count for exhaustive partial-subhypergraph scans.
    pub charac_max_n: usize,
    /// Largest edge count for exhaustive partial-subhypergraph scans.
    pub charac_max_m: usize,
    /// Sample count for the randomized partial-subhypergraph mode.
    pub charac_samples: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_states: 10_000_000,
            charac_max_n: 10,
            charac_max_m: 8,
            charac_samples: 1000,
        }
    }
}

impl Limits {
    pub fn with_max_states(max_states: u64) -> Self {
        Limits {
            max_states,
            ..Limits::default()
        }
    }
}

/// Decrementing state counter handed through the exponential searches.
#[derive(Debug, Clone)]
pub(crate) struct Budget {
    remaining: u64,
}

impl Budget {
    pub(crate) fn new(limits: &Limits) -> Self {
        Budget {
            remaining: limits.max_states,
        }
    }

    #[inline]
    pub(crate) fn spend(&mut self, amount: u64) -> Result<()> {
        if self.remaining < amount {
            return Err(Error::InstanceTooLarge);
        }
        self.remaining -= amount;
        Ok(())
    }
}
