//! Consistency checks that use data independent of the spectrum formula.

use serde::{Deserialize, Serialize};

use crate::chern;
use crate::spectrum::{reduced_lines_spectrum, BuildingSetChoice, SpectrumEngine};
use crate::{Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(Check { name: name.into(), passed, detail });
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

/// For every `k < d`: `Σ_p n_{k/d+p} = (-1)^{n-1} χ(U)`. Returns the sums and
/// the expected value.
pub fn euler_sums(engine: &SpectrumEngine, cells: &[(u64, usize, i64)]) -> Result<(Vec<i64>, i64)> {
    let n = engine.arrangement().n();
    let d = engine.arrangement().degree();
    let chi = engine.lattice().euler_projective_complement()?;
    let expected = if n.is_multiple_of(2) { -chi } else { chi };
    let sums = (1..d)
        .map(|k| cells.iter().filter(|c| c.0 == k).map(|c| c.2).sum())
        .collect();
    Ok((sums, expected))
}

/// `P_p` from `K_{p,*}` against the direct formal-root expansion, as free
/// polynomials.
pub fn chern_cross_route(engine: &SpectrumEngine) -> Result<Vec<bool>> {
    let classes = engine.classes();
    (0..engine.arrangement().n())
        .map(|p| Ok(chern::ch_dual_exterior_direct(p, &classes.h)? == classes.p[p]))
        .collect()
}

/// Runs every check applicable to the engine's arrangement.
pub fn run(engine: &SpectrumEngine, jobs: usize) -> Result<Report> {
    let mut report = Report::default();
    let arr = engine.arrangement();
    let n = arr.n();
    let d = arr.degree();

    let cells = engine.all_multiplicities(jobs)?;
    report.push(
        "integrality",
        true,
        format!("{} multiplicities evaluated, all integral", cells.len()),
    );

    let ranks = engine.ideal().quotient_ranks();
    report.push(
        "top-rank",
        ranks[0] == 1 && ranks[n - 1] == 1,
        format!("rank(0) = {}, rank({}) = {}", ranks[0], n - 1, ranks[n - 1]),
    );
    let mut reversed = ranks.clone();
    reversed.reverse();
    report.push("poincare-duality", ranks == reversed, format!("quotient ranks {ranks:?}"));

    let (sums, expected) = euler_sums(engine, &cells)?;
    report.push(
        "euler-identity",
        sums.iter().all(|&s| s == expected),
        format!("per-k sums {sums:?}, expected {expected} = (-1)^(n-1) chi(U)"),
    );

    let routes = chern_cross_route(engine)?;
    report.push(
        "chern-cross-route",
        routes.iter().all(|&b| b),
        format!("P_p agrees with the direct expansion for p in 0..{n}: {routes:?}"),
    );

    let spectrum = engine.spectrum(jobs)?;
    if n == 2 && arr.hyperplanes().iter().all(|h| h.mult == 1) {
        let expected = reduced_lines_spectrum(d);
        let got = spectrum.pairs();
        report.push(
            "plane-curve-oracle",
            got == expected,
            format!("{} points, oracle {{(i+j)/{d}}} has {}", got.len(), expected.len()),
        );
        let two = Rational::from_integer(2.into());
        let symmetric = got.iter().all(|(a, m)| spectrum.multiplicity(&(&two - a)) == *m);
        report.push("plane-curve-symmetry", symmetric, "n_a = n_(2-a)".into());
    }

    if engine.building_set().is_maximal() {
        let perm: Vec<usize> = (0..arr.len()).rev().collect();
        let other = SpectrumEngine::new(&arr.permuted(&perm)?, &BuildingSetChoice::Maximal)?;
        let same = other.spectrum(jobs)?.points == spectrum.points;
        report.push(
            "permutation-invariance",
            same,
            "spectrum unchanged when the hyperplane order is reversed".into(),
        );
    }

    Ok(report)
}
