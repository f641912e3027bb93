//! Spectral multiplicities from the ring data.
//!
//! For `α = k/d + p` the multiplicity is `(-1)^{n-p-1} (R_α · G)_{n-1}`,
//! where `R_α = P_{n-p-1} · exp(Σ_V a_{k,V} c_V)` and the top-degree part is
//! read as a multiple of `(-c_0)^{n-1}`.

use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arrangement::{Arrangement, IntersectionLattice};
use crate::chern::CharClassBundle;
use crate::nested::BuildingSet;
use crate::poly::GradedPoly;
use crate::ring::IdealPresentation;
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum BuildingSetChoice {
    #[default]
    Maximal,
    /// Explicit `G'` as closure sets (no building-set axioms are checked).
    Closures(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub building_set: BuildingSetChoice,
    /// Worker threads for the per-`(k,p)` evaluations; 0 means rayon's default.
    pub jobs: usize,
}

/// `β_V^{(k)} = {-k m_V / d}` for every hyperplane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenData {
    pub k: u64,
    pub beta: Vec<Rational>,
    pub sum_beta: i64,
}

pub fn beta(k: u64, arr: &Arrangement) -> Result<EigenData> {
    let d = arr.degree();
    if k == 0 || k > d {
        return Err(Error::Argument(format!("k = {k} outside 1..={d}")));
    }
    let beta: Vec<Rational> = arr
        .hyperplanes()
        .iter()
        .map(|h| {
            let x = Rational::new(num_bigint::BigInt::from(-(i128::from(k) * i128::from(h.mult))), d.into());
            &x - x.floor()
        })
        .collect();
    let sum: Rational = beta.iter().sum();
    if !sum.is_integer() {
        return Err(Error::Internal(format!("Σβ = {sum} is not an integer")));
    }
    let sum_beta = sum.to_integer().to_i64().expect("small sum");
    Ok(EigenData { k, beta, sum_beta })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralPoint {
    pub alpha: Rational,
    pub k: u64,
    pub p: usize,
    pub mult: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumResult {
    pub n: usize,
    pub degree: u64,
    /// Nonzero multiplicities, strictly increasing in `alpha`.
    pub points: Vec<SpectralPoint>,
    pub warnings: Vec<String>,
}

impl SpectrumResult {
    pub fn multiplicity(&self, alpha: &Rational) -> i64 {
        self.points.iter().find(|pt| &pt.alpha == alpha).map_or(0, |pt| pt.mult)
    }

    /// `(alpha, mult)` pairs.
    pub fn pairs(&self) -> Vec<(Rational, i64)> {
        self.points.iter().map(|pt| (pt.alpha.clone(), pt.mult)).collect()
    }
}

/// Frozen lattice, ring and characteristic classes for one arrangement.
#[derive(Debug, Clone)]
pub struct SpectrumEngine {
    arr: Arrangement,
    lat: IntersectionLattice,
    bs: BuildingSet,
    ideal: IdealPresentation,
    classes: CharClassBundle,
    warnings: Vec<String>,
}

impl SpectrumEngine {
    pub fn new(arr: &Arrangement, choice: &BuildingSetChoice) -> Result<Self> {
        let lat = IntersectionLattice::build(arr)?;
        let bs = match choice {
            BuildingSetChoice::Maximal => BuildingSet::maximal(&lat),
            BuildingSetChoice::Closures(c) => BuildingSet::from_closures(&lat, c)?,
        };
        let ideal = IdealPresentation::build(&lat, &bs)?;
        let classes = CharClassBundle::compute(&lat, &bs)?;
        let mut warnings = Vec::new();
        if !lat.is_essential() {
            warnings.push(
                "arrangement is not essential; the result has not been validated for this case"
                    .to_string(),
            );
        }
        if !bs.is_maximal() {
            warnings.push("non-maximal building set (experimental)".to_string());
        }
        Ok(SpectrumEngine { arr: arr.clone(), lat, bs, ideal, classes, warnings })
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arr
    }

    pub fn lattice(&self) -> &IntersectionLattice {
        &self.lat
    }

    pub fn building_set(&self) -> &BuildingSet {
        &self.bs
    }

    pub fn ideal(&self) -> &IdealPresentation {
        &self.ideal
    }

    pub fn classes(&self) -> &CharClassBundle {
        &self.classes
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    fn n(&self) -> usize {
        self.arr.n()
    }

    /// `s_V(β)`: sum of `β_W` over hyperplanes `W ⊇ V`.
    pub fn s_value(&self, v: usize, eigen: &EigenData) -> Rational {
        let e = self.bs.element(v);
        match e.flat {
            Some(f) => self.lat.flat(f).closure.iter().map(|&h| eigen.beta[h].clone()).sum(),
            None => eigen.beta.iter().sum(),
        }
    }

    /// `a_{k,V} = r(V) - ⌊s_V(β^{(k)})⌋ - 1 + [V = 0]`.
    pub fn a_coeff(&self, eigen: &EigenData, v: usize) -> i64 {
        let r = self.bs.element(v).codim as i64;
        let floor = self.s_value(v, eigen).floor().to_integer().to_i64().expect("small");
        r - floor - 1 + i64::from(v == 0)
    }

    fn check_cell(&self, k: u64, p: usize) -> Result<()> {
        let (d, n) = (self.arr.degree(), self.n());
        if k == 0 || k > d || p >= n || (k == d && p == n - 1) {
            return Err(Error::Argument(format!("(k, p) = ({k}, {p}) does not give α in (0, n)")));
        }
        Ok(())
    }

    /// `R_α = P_{n-p-1} · exp(Σ_V a_{k,V} c_V)` in the free truncated ring.
    pub fn r_alpha(&self, k: u64, p: usize) -> Result<GradedPoly> {
        self.check_cell(k, p)?;
        let eigen = beta(k, &self.arr)?;
        let nvars = self.bs.len();
        let top = (self.n() - 1) as u32;
        let twist = GradedPoly::linear(
            nvars,
            top,
            (0..nvars).map(|v| (v, Rational::from_integer(self.a_coeff(&eigen, v).into()))),
        );
        Ok(&self.classes.p[self.n() - p - 1] * &twist.exp()?)
    }

    /// `n_α` for `α = k/d + p`.
    pub fn multiplicity(&self, k: u64, p: usize) -> Result<i64> {
        let r = self.r_alpha(k, p)?;
        let mut value = self.ideal.reduce_top(&(&r * &self.classes.g))?;
        if (self.n() - p - 1) % 2 == 1 {
            value = -value;
        }
        if !value.is_integer() {
            return Err(Error::Internal(format!(
                "multiplicity at (k, p) = ({k}, {p}) is not an integer: {value}"
            )));
        }
        value
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::Internal("multiplicity overflows i64".into()))
    }

    /// Every admissible cell `(k, p)` in `(k, p)` order.
    pub fn cells(&self) -> Vec<(u64, usize)> {
        let (d, n) = (self.arr.degree(), self.n());
        (1..=d)
            .flat_map(|k| (0..n).map(move |p| (k, p)))
            .filter(|&(k, p)| !(k == d && p == n - 1))
            .collect()
    }

    /// Multiplicities of all cells, zeros included, in `(k, p)` order.
    pub fn all_multiplicities(&self, jobs: usize) -> Result<Vec<(u64, usize, i64)>> {
        let cells = self.cells();
        let eval = || -> Result<Vec<(u64, usize, i64)>> {
            cells.par_iter().map(|&(k, p)| Ok((k, p, self.multiplicity(k, p)?))).collect()
        };
        if jobs == 0 {
            eval()
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
                .install(eval)
        }
    }

    pub fn spectrum(&self, jobs: usize) -> Result<SpectrumResult> {
        let d = self.arr.degree();
        let mut points: Vec<SpectralPoint> = self
            .all_multiplicities(jobs)?
            .into_iter()
            .filter(|&(_, _, m)| m != 0)
            .map(|(k, p, mult)| SpectralPoint {
                alpha: Rational::new(k.into(), d.into()) + Rational::from_integer(p.into()),
                k,
                p,
                mult,
            })
            .collect();
        points.sort_by(|a, b| a.alpha.cmp(&b.alpha));
        debug_assert!(points.windows(2).all(|w| w[0].alpha < w[1].alpha));
        debug_assert!(points
            .iter()
            .all(|pt| pt.alpha.is_positive() && pt.alpha < Rational::from_integer(self.n().into())));
        Ok(SpectrumResult { n: self.n(), degree: d, points, warnings: self.warnings.clone() })
    }
}

/// Hodge spectrum of `arr`.
pub fn spectrum(arr: &Arrangement, options: &Options) -> Result<SpectrumResult> {
    SpectrumEngine::new(arr, &options.building_set)?.spectrum(options.jobs)
}

/// The classical spectrum of `d` reduced lines through the origin of `C^2`:
/// `{(i+j)/d : 1 <= i, j <= d-1}` as sorted `(alpha, mult)` pairs.
pub fn reduced_lines_spectrum(d: u64) -> Vec<(Rational, i64)> {
    let mut counts: std::collections::BTreeMap<Rational, i64> = Default::default();
    for i in 1..d {
        for j in 1..d {
            *counts.entry(Rational::new((i + j).into(), d.into())).or_insert(0) += 1;
        }
    }
    counts.into_iter().filter(|(_, m)| !m.is_zero()).collect()
}
