//! The cohomology ring of the wonderful model as `Q[c_V] / I`.
//!
//! `I` is generated by monomials over non-nested subsets and by the
//! relations `∏_{V∈H} c_V · (Σ_{W'⊆W} c_{W'})^{d_{H,W}}` over nested `H`.
//! Everything is homogeneous and the quotient vanishes above degree `n-1`,
//! so each degree is handled separately by exact row reduction of the span
//! of `{m·g}`; no Gröbner basis is needed.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::arrangement::IntersectionLattice;
use crate::linalg::{SparseEchelon, SparseVec};
use crate::nested::BuildingSet;
use crate::poly::{GradedPoly, Monomial};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorKind {
    /// `∏_{V∈T} c_V` for a minimal non-nested antichain `T`.
    NonNested { set: Vec<usize> },
    /// `∏_{V∈H} c_V (Σ_{W'⊆W} c_{W'})^{exponent}` for nested `H`.
    Nested { set: Vec<usize>, w: usize, exponent: usize },
}

#[derive(Debug, Clone)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub poly: GradedPoly,
}

#[derive(Debug, Clone)]
struct DegreeSpan {
    columns: HashMap<Monomial, usize>,
    num_monomials: usize,
    echelon: SparseEchelon,
}

impl DegreeSpan {
    fn vector(&self, p: &GradedPoly, degree: u32) -> SparseVec {
        p.terms()
            .filter(|(m, _)| m.degree() == degree)
            .map(|(m, c)| (self.columns[m], c.clone()))
            .collect()
    }
}

/// Generators of `I` up to degree `n-1` with the row-reduced span of `I` in
/// each degree.
#[derive(Debug, Clone)]
pub struct IdealPresentation {
    nvars: usize,
    top: u32,
    generators: Vec<Generator>,
    spans: Vec<DegreeSpan>,
    top_column: usize,
    // Coordinate of (-c_0)^{n-1} on the free top column.
    top_reference: Rational,
}

impl IdealPresentation {
    pub fn build(lat: &IntersectionLattice, bs: &BuildingSet) -> Result<Self> {
        let n = bs.n();
        let top = (n - 1) as u32;
        let nvars = bs.len();
        let generators = generators(lat, bs, top)?;

        let mut spans = Vec::with_capacity(n);
        for j in 0..=top {
            let monomials = Monomial::all_of_degree(nvars, j);
            let columns: HashMap<Monomial, usize> =
                monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            let mut span = DegreeSpan {
                columns,
                num_monomials: monomials.len(),
                echelon: SparseEchelon::new(),
            };
            for g in &generators {
                let Some(e) = g.poly.degree() else { continue };
                if e > j {
                    continue;
                }
                for m in Monomial::all_of_degree(nvars, j - e) {
                    let row = &GradedPoly::monomial(nvars, top, m, Rational::one()) * &g.poly;
                    span.echelon.insert(span.vector(&row, j));
                }
            }
            spans.push(span);
        }

        let top_span = &spans[top as usize];
        let top_rank = top_span.num_monomials - top_span.echelon.rank();
        if top_rank != 1 {
            return Err(Error::Structural(format!(
                "top cohomology not rank 1 (quotient rank {top_rank} in degree {top})"
            )));
        }
        let top_column = (0..top_span.num_monomials)
            .find(|&c| !top_span.echelon.is_pivot(c))
            .expect("exactly one free column");
        let reference = minus_c0_power(nvars, top);
        let reduced = top_span.echelon.reduce(top_span.vector(&reference, top));
        let top_reference = reduced.get(&top_column).cloned().unwrap_or_else(Rational::zero);
        if top_reference.is_zero() {
            return Err(Error::Structural(
                "(-c_0)^(n-1) lies in the ideal; top-degree evaluation is undefined".into(),
            ));
        }

        Ok(IdealPresentation { nvars, top, generators, spans, top_column, top_reference })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn top_degree(&self) -> u32 {
        self.top
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Dimension of the quotient in each degree `0..=n-1`.
    pub fn quotient_ranks(&self) -> Vec<usize> {
        self.spans.iter().map(|s| s.num_monomials - s.echelon.rank()).collect()
    }

    fn check_poly(&self, p: &GradedPoly) -> Result<()> {
        if p.nvars() != self.nvars {
            return Err(Error::Argument(format!(
                "polynomial has {} variables, ring has {}",
                p.nvars(),
                self.nvars
            )));
        }
        Ok(())
    }

    /// The number `λ` with `p_{n-1} ≡ λ·(-c_0)^{n-1} mod I`.
    pub fn reduce_top(&self, p: &GradedPoly) -> Result<Rational> {
        self.check_poly(p)?;
        let span = &self.spans[self.top as usize];
        let reduced = span.echelon.reduce(span.vector(p, self.top));
        if reduced.keys().any(|&c| c != self.top_column) {
            return Err(Error::Internal("top-degree reduction left a pivot column".into()));
        }
        let value = reduced.get(&self.top_column).cloned().unwrap_or_else(Rational::zero);
        Ok(value / &self.top_reference)
    }

    /// Whether every homogeneous component of `p` lies in `I`.
    pub fn contains(&self, p: &GradedPoly) -> bool {
        if p.nvars() != self.nvars {
            return false;
        }
        (0..=self.top).all(|j| {
            let span = &self.spans[j as usize];
            span.echelon.contains(span.vector(p, j))
        })
    }

    /// Whether `a ≡ b mod I`.
    pub fn congruent(&self, a: &GradedPoly, b: &GradedPoly) -> bool {
        self.contains(&(a - b))
    }
}

fn minus_c0_power(nvars: usize, top: u32) -> GradedPoly {
    let mut exps = vec![0u16; nvars];
    exps[0] = top as u16;
    let sign = if top.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    GradedPoly::monomial(nvars, top, Monomial::from_exponents(exps), sign)
}

fn generators(lat: &IntersectionLattice, bs: &BuildingSet, top: u32) -> Result<Vec<Generator>> {
    let nvars = bs.len();
    let max = top as usize;
    let product = |set: &[usize]| {
        let mut exps = vec![0u16; nvars];
        for &v in set {
            exps[v] += 1;
        }
        GradedPoly::monomial(nvars, top, Monomial::from_exponents(exps), Rational::one())
    };

    let mut out = Vec::new();
    for set in bs.obstructions(lat, max) {
        let poly = product(&set);
        out.push(Generator { kind: GeneratorKind::NonNested { set }, poly });
    }
    for set in bs.enumerate_nested(lat, max) {
        for w in 0..nvars {
            if !set.iter().all(|&v| bs.is_strictly_below(lat, w, v)) {
                continue;
            }
            let exponent = bs.d_value(lat, &set, w)?;
            if set.len() + exponent > max {
                continue;
            }
            let below = GradedPoly::linear(
                nvars,
                top,
                (0..nvars).filter(|&u| bs.is_below(lat, u, w)).map(|u| (u, Rational::one())),
            );
            let poly = &product(&set) * &below.pow(exponent as u32);
            out.push(Generator { kind: GeneratorKind::Nested { set: set.clone(), w, exponent }, poly });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, rat, Arrangement, Hyperplane};

    fn setup(arr: &Arrangement) -> (IntersectionLattice, BuildingSet, IdealPresentation) {
        let lat = IntersectionLattice::build(arr).unwrap();
        let bs = BuildingSet::maximal(&lat);
        let ideal = IdealPresentation::build(&lat, &bs).unwrap();
        (lat, bs, ideal)
    }

    fn named(name: &str) -> (IntersectionLattice, BuildingSet, IdealPresentation) {
        setup(&fixtures::by_name(name).unwrap())
    }

    #[test]
    fn example_a_generators_and_ranks() {
        let (_, _, ideal) = named("example-a");
        // c_0^2 sits above the truncation degree; only c_0 + c_i remain.
        assert_eq!(ideal.generators().len(), 3);
        for (i, g) in ideal.generators().iter().enumerate() {
            assert!(matches!(g.kind, GeneratorKind::Nested { ref set, w, exponent: 1 } if set.is_empty() && w == i + 1));
            let expected = GradedPoly::linear(4, 1, [(0, rat(1)), (i + 1, rat(1))]);
            assert_eq!(g.poly, expected);
        }
        assert_eq!(ideal.quotient_ranks(), vec![1, 1]);
    }

    #[test]
    fn example_a_top_reduction() {
        let (_, _, ideal) = named("example-a");
        let minus_c0 = GradedPoly::linear(4, 1, [(0, rat(-1))]);
        assert_eq!(ideal.reduce_top(&minus_c0).unwrap(), rat(1));
        assert_eq!(ideal.reduce_top(&GradedPoly::var(4, 1, 1)).unwrap(), rat(1));
        assert_eq!(ideal.reduce_top(&GradedPoly::one(4, 1)).unwrap(), rat(0));
    }

    #[test]
    fn example_b_relations() {
        let (lat, bs, ideal) = named("example-b2");
        assert_eq!(ideal.quotient_ranks(), vec![1, 7, 1]);
        let nv = bs.len();
        for a in 7..11 {
            let mut g = GradedPoly::linear(nv, 2, [(a, rat(1)), (0, rat(1))]);
            for b in 1..7 {
                if bs.is_below(&lat, b, a) {
                    g = &g + &GradedPoly::var(nv, 2, b);
                }
            }
            assert!(ideal.contains(&g));
        }
        let c0 = GradedPoly::var(nv, 2, 0);
        for b in 1..7 {
            let cb = GradedPoly::var(nv, 2, b);
            assert!(ideal.contains(&(&(&cb * &cb) + &(&c0 * &c0))));
            assert!(ideal.contains(&(&cb * &c0)));
            assert_eq!(ideal.reduce_top(&(&cb * &cb)).unwrap(), rat(-1));
        }
        assert!(ideal.contains(&(&GradedPoly::var(nv, 2, 1) * &GradedPoly::var(nv, 2, 2))));
        assert!(!ideal.contains(&(&c0 * &c0)));
        assert!(!ideal.contains(&GradedPoly::one(nv, 2)));
        assert_eq!(ideal.reduce_top(&(&c0 * &c0)).unwrap(), rat(1));
    }

    #[test]
    fn one_hyperplane_in_c3_is_the_projective_plane() {
        let arr = Arrangement::new(3, vec![Hyperplane::reduced(&[0, 0, 1])]).unwrap();
        let (_, _, ideal) = setup(&arr);
        assert_eq!(ideal.quotient_ranks(), vec![1, 1, 1]);
    }

    #[test]
    fn poincare_duality_of_ranks() {
        for name in ["example-a", "example-b1", "generic3d:6", "braid4", "lines:6"] {
            let (_, _, ideal) = named(name);
            let r = ideal.quotient_ranks();
            let rev: Vec<usize> = r.iter().rev().copied().collect();
            assert_eq!(r, rev, "{name}");
            assert_eq!(r[0], 1);
        }
    }

    #[test]
    fn membership_of_zero() {
        let (_, bs, ideal) = named("example-b1");
        assert!(ideal.contains(&GradedPoly::zero(bs.len(), 2)));
        assert!(ideal.reduce_top(&GradedPoly::zero(3, 2)).is_err());
    }
}
