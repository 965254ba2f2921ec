use uas_core::ideal::{IdealPresentation, IdealWindow};
use uas_core::operad::{tau, tau_n};
use uas_core::pi::{codim, cross_check, identities_component, FiniteAlgebra, Mode};

use super::{data, job, Job};
use crate::config::Config;
use crate::report::Check;

pub fn identities(cfg: &Config) -> Vec<Job> {
    let d = data::identities();
    let (cap, seed, factor) = (cfg.cap, cfg.seed, cfg.samples_factor);
    let mut jobs = vec![job("field", move || {
        let f = FiniteAlgebra::field();
        let comm = IdealWindow::generate(&IdealPresentation::element(tau()), 6)?;
        let mut checks = Vec::new();
        for n in 1..=6 {
            let (c, _) = codim(&f, n, Mode::exact())?;
            checks.push(Check::new(format!("field n={n}"), d.field, c));
            let x = cross_check(&f, &comm, n, Mode::exact())?;
            checks.push(Check::new(format!("field kernel n={n}"), "true", x.equal));
        }
        Ok(checks)
    })];
    for (i, &expected) in d.grassmann.iter().enumerate() {
        let n = i + 1;
        jobs.push(job(format!("grassmann n={n}"), move || {
            let e = FiniteAlgebra::grassmann(n)?;
            let mode = Mode::auto(&e, n, cap, seed, factor);
            let c = identities_component(&e, n, mode)?;
            let mut checks = vec![Check::new(
                format!("grassmann n={n}"),
                expected,
                format!("{} ({})", c.codim(), c.status),
            )];
            checks[0].pass = c.codim() == expected;
            if n <= 5 {
                let lie = IdealWindow::generate(&IdealPresentation::element(tau_n(3)), n)?;
                let x = cross_check(&e, &lie, n, mode)?;
                checks.push(Check::new(
                    format!("grassmann kernel n={n}"),
                    "true",
                    x.equal,
                ));
            }
            Ok(checks)
        }));
    }
    jobs.push(job("upper triangular", move || {
        let u = FiniteAlgebra::ut(2)?;
        let (c, _) = codim(&u, 2, Mode::exact())?;
        Ok(vec![Check::new(
            "upper triangular n=2",
            d.upper_triangular_2,
            c,
        )])
    }));
    jobs
}
