//! Characteristic classes of the wonderful model as truncated series in the
//! ring generators `c_V`.
//!
//! All series live in the free truncated ring; they are only compared or
//! evaluated modulo the ideal at the very end.

use num_traits::One;

use crate::arrangement::IntersectionLattice;
use crate::nested::BuildingSet;
use crate::poly::GradedPoly;
use crate::symmetric::{self, binomial};
use crate::{Rational, Result};

/// Taylor coefficients of `Q(x) = x / (1 - e^{-x})` up to `x^deg`.
pub fn q_series(deg: usize) -> Vec<Rational> {
    // (1 - e^{-x}) / x = Σ (-1)^k x^k / (k+1)!
    let mut denom = Vec::with_capacity(deg + 1);
    let mut fact = Rational::one();
    for k in 0..=deg {
        fact *= Rational::from_integer((k + 1).into());
        let term = fact.recip();
        denom.push(if k % 2 == 0 { term } else { -term });
    }
    let mut q: Vec<Rational> = Vec::with_capacity(deg + 1);
    q.push(Rational::one());
    for j in 1..=deg {
        let s: Rational = (1..=j).map(|i| &denom[i] * &q[j - i]).sum();
        q.push(-s);
    }
    q
}

struct Ctx<'a> {
    lat: &'a IntersectionLattice,
    bs: &'a BuildingSet,
    nvars: usize,
    top: u32,
}

impl<'a> Ctx<'a> {
    fn new(lat: &'a IntersectionLattice, bs: &'a BuildingSet) -> Self {
        Ctx { lat, bs, nvars: bs.len(), top: (bs.n() - 1) as u32 }
    }

    fn one(&self) -> GradedPoly {
        GradedPoly::one(self.nvars, self.top)
    }

    fn var(&self, i: usize) -> GradedPoly {
        GradedPoly::var(self.nvars, self.top, i)
    }

    /// `Σ_{W⊊V} c_W` and `Σ_{W⊆V} c_W` over the building set.
    fn sums_below(&self, v: usize) -> (GradedPoly, GradedPoly) {
        let strict = GradedPoly::linear(
            self.nvars,
            self.top,
            (0..self.nvars)
                .filter(|&w| self.bs.is_strictly_below(self.lat, w, v))
                .map(|w| (w, Rational::one())),
        );
        let inclusive = &strict + &self.var(v);
        (strict, inclusive)
    }
}

/// The series `F` whose image is the total Chern class of the model.
pub fn chern_total(lat: &IntersectionLattice, bs: &BuildingSet) -> Result<GradedPoly> {
    let cx = Ctx::new(lat, bs);
    let n = bs.n() as u32;
    let mut f = (&cx.one() - &cx.var(0)).pow(n);
    for v in 1..bs.len() {
        let r = bs.element(v).codim as i64;
        let (strict, inclusive) = cx.sums_below(v);
        let fv = &(&(&cx.one() - &strict).int_pow(-r)? * &(&cx.one() + &cx.var(v)))
            * &(&cx.one() - &inclusive).int_pow(r)?;
        f = &f * &fv;
    }
    Ok(f)
}

/// The series `G` whose image is the Todd class of the model.
pub fn todd(lat: &IntersectionLattice, bs: &BuildingSet) -> Result<GradedPoly> {
    let cx = Ctx::new(lat, bs);
    let q = q_series(cx.top as usize);
    let q_of = |z: &GradedPoly| z.substitute_into(&q);
    let n = bs.n() as i64;
    let mut g = q_of(&-&cx.var(0)).int_pow(n)?;
    for v in 1..bs.len() {
        let r = bs.element(v).codim as i64;
        let (strict, inclusive) = cx.sums_below(v);
        let gv = &(&q_of(&-&strict).int_pow(-r)? * &q_of(&cx.var(v)))
            * &q_of(&-&inclusive).int_pow(r)?;
        g = &g * &gv;
    }
    Ok(g)
}

/// The series `H` for the total Chern class of the log cotangent bundle:
/// `(Σ_i (-1)^i F_i) · ∏_{V≠0} 1/(1 - c_V)`.
pub fn chern_omega_log(f: &GradedPoly, bs: &BuildingSet) -> Result<GradedPoly> {
    let (nvars, top) = (f.nvars(), f.max_degree());
    let one = GradedPoly::one(nvars, top);
    let mut h = f.alternate_signs();
    for v in 1..bs.len() {
        h = &h * &(&one - &GradedPoly::var(nvars, top, v)).geom_inv()?;
    }
    Ok(h)
}

/// `[H_1, .., H_top]`, the positive-degree components of `h`.
fn graded_parts(h: &GradedPoly) -> Vec<GradedPoly> {
    (1..=h.max_degree()).map(|j| h.homogeneous(j)).collect()
}

/// Chern classes `K_{p,0..=top}` of the `p`-th exterior power of a bundle
/// of rank `top` with total Chern class `h`.
pub fn exterior_chern(p: usize, h: &GradedPoly) -> Result<Vec<GradedPoly>> {
    let top = h.max_degree();
    let m = top as usize;
    let parts = graded_parts(h);
    symmetric::exterior_power_chern_roots(m, p, top)
        .iter()
        .map(|c| Ok(symmetric::to_elementary(c)?.substitute(&parts, h.nvars(), top)))
        .collect()
}

/// Chern character of the dual of a bundle with Chern classes `k_row` and
/// rank `rank`: Newton's identities on the sign-twisted classes.
pub fn ch_dual_from_chern(rank: u64, k_row: &[GradedPoly]) -> GradedPoly {
    let (nvars, top) = (k_row[0].nvars(), k_row[0].max_degree());
    let twisted: Vec<GradedPoly> = k_row
        .iter()
        .enumerate()
        .map(|(i, k)| if i % 2 == 0 { k.clone() } else { -k })
        .collect();
    let sums = symmetric::power_sums(&twisted, top as usize);
    let mut out = GradedPoly::constant(nvars, top, Rational::from_integer(rank.into()));
    let mut fact = Rational::one();
    for (j, pj) in sums.iter().enumerate().skip(1) {
        fact *= Rational::from_integer(j.into());
        out = &out + &pj.scale(&fact.recip());
    }
    out
}

/// `P_p`: Chern character of the dual of `Ω^p(log E)`, via `K_{p,*}`.
pub fn ch_dual_exterior(p: usize, k_row: &[GradedPoly]) -> GradedPoly {
    let m = k_row[0].max_degree() as usize;
    ch_dual_from_chern(binomial(m, p), k_row)
}

/// Same class by the λ-operation route: `Σ_{|S|=p} exp(-Σ_{i∈S} x_i)` in
/// formal roots, rewritten in the `e_j` and evaluated at `e_j = H_j`.
pub fn ch_dual_exterior_direct(p: usize, h: &GradedPoly) -> Result<GradedPoly> {
    let top = h.max_degree();
    let roots = symmetric::dual_exterior_character_roots(top as usize, p, top)?;
    Ok(symmetric::to_elementary(&roots)?.substitute(&graded_parts(h), h.nvars(), top))
}

/// Every characteristic-class series the spectrum formula consumes.
#[derive(Debug, Clone)]
pub struct CharClassBundle {
    pub f: GradedPoly,
    pub g: GradedPoly,
    pub h: GradedPoly,
    /// `k[p][i] = K_{p,i}`.
    pub k: Vec<Vec<GradedPoly>>,
    /// `p[p] = P_p`.
    pub p: Vec<GradedPoly>,
}

impl CharClassBundle {
    pub fn compute(lat: &IntersectionLattice, bs: &BuildingSet) -> Result<Self> {
        let n = bs.n();
        let f = chern_total(lat, bs)?;
        let g = todd(lat, bs)?;
        let h = chern_omega_log(&f, bs)?;
        let k = (0..n).map(|p| exterior_chern(p, &h)).collect::<Result<Vec<_>>>()?;
        let p = k.iter().enumerate().map(|(p, row)| ch_dual_exterior(p, row)).collect();
        Ok(CharClassBundle { f, g, h, k, p })
    }
}
