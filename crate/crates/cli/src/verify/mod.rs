//! Check suites that recompute reference tables and diff them against the
//! embedded expected values.

use std::time::Instant;

use rayon::prelude::*;

use crate::config::Config;
use crate::report::{Check, VerifyReport};

mod components;
pub mod data;
mod ideals;
mod pi;

pub use ideals::{alpha, type_degrees, type_one_generator};

pub type Job = Box<dyn FnOnce() -> Vec<Check> + Send>;

/// A job whose error becomes one failing check.
pub(crate) fn job<F>(name: impl Into<String>, f: F) -> Job
where
    F: FnOnce() -> uas_core::Result<Vec<Check>> + Send + 'static,
{
    let name = name.into();
    Box::new(move || match f() {
        Ok(checks) => checks,
        Err(e) => vec![Check::failed(name, "a value", e)],
    })
}

pub struct Suite {
    pub id: &'static str,
    pub title: &'static str,
    jobs: fn(&Config) -> Vec<Job>,
}

pub const SUITES: &[Suite] = &[
    Suite {
        id: "truncation",
        title: "truncation components: dimensions and bases",
        jobs: |_| components::truncation(),
    },
    Suite {
        id: "characters",
        title: "characters of truncation components and generated modules",
        jobs: |_| components::characters(),
    },
    Suite {
        id: "generators",
        title: "cyclic generators of the top truncation components",
        jobs: |_| components::generators(),
    },
    Suite {
        id: "lie-truncation",
        title: "the ideal of the triple commutator plus the arity-5 truncation",
        jobs: |_| ideals::lie_truncation(),
    },
    Suite {
        id: "grade-four",
        title: "ideals with quotient of GK-dimension 5",
        jobs: |_| ideals::grade_four(),
    },
    Suite {
        id: "pair-counts",
        title: "completions of arity-4 modules to admissible pairs",
        jobs: |_| ideals::pair_counts(),
    },
    Suite {
        id: "pair-degrees",
        title: "generating degrees of pair ideals",
        jobs: |cfg| ideals::pair_degrees(cfg.seed),
    },
    Suite {
        id: "grade-five",
        title: "codimension series of grade 5",
        jobs: |_| ideals::grade_five(),
    },
    Suite {
        id: "identities",
        title: "codimensions of small algebras",
        jobs: pi::identities,
    },
];

pub fn find(id: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.id == id)
}

pub fn ids() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.id).collect()
}

impl Suite {
    pub fn run(&self, cfg: &Config) -> VerifyReport {
        let start = Instant::now();
        let checks: Vec<Check> = (self.jobs)(cfg)
            .into_par_iter()
            .flat_map_iter(|j| j())
            .collect();
        VerifyReport::new(self.id, self.title, checks, start.elapsed().as_secs_f64())
    }
}
