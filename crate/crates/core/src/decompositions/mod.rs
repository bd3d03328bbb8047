//! Exact backtracking searches for the certificates the drawing
//! constructions consume.

use std::time::{Duration, Instant};

mod coloring;
mod forest;
mod outerpath;
mod path_copath;

pub use coloring::{color, three_color, ProperColoring};
pub use forest::{forest_partition, ForestPartition};
pub use outerpath::{
    find_two_outerpath, triangulate_outerpath, two_outerpath_from_sides, Outerpath, StripRegion,
    TwoOuterpathDecomposition,
};
pub use path_copath::{find_path_copath, path_copath_from_parts, PathCopathDecomposition};

/// Three-valued search result. `None` is only reported after the search
/// space is exhausted; running out of budget gives `Unknown`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    None,
    Unknown,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::None => SearchOutcome::None,
            SearchOutcome::Unknown => SearchOutcome::Unknown,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "found",
            SearchOutcome::None => "none",
            SearchOutcome::Unknown => "unknown",
        }
    }
}

/// Node and wall-clock limits for a search.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_nodes: u64,
    pub timeout: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Self { max_nodes: 50_000_000, timeout: None }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Self { max_nodes, timeout: None }
    }

    pub fn unlimited() -> Self {
        Self { max_nodes: u64::MAX, timeout: None }
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = Some(timeout);
        self
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter {
            nodes: 0,
            max_nodes: self.max_nodes,
            deadline: self.timeout.map(|t| Instant::now() + t),
            exhausted: false,
        }
    }
}

pub(crate) struct Meter {
    pub nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    pub exhausted: bool,
}

impl Meter {
    /// Counts one search node; false once the budget is spent.
    pub fn step(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.exhausted = true;
        } else if self.nodes % 1024 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.exhausted = true;
                }
            }
        }
        !self.exhausted
    }

    pub fn outcome<T>(&self, found: Option<T>) -> SearchOutcome<T> {
        match found {
            Some(t) => SearchOutcome::Found(t),
            None if self.exhausted => SearchOutcome::Unknown,
            None => SearchOutcome::None,
        }
    }
}
