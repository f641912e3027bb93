//! Sparse polynomials over the rationals, truncated above a fixed degree.
//!
//! Every quotient we care about vanishes above degree `n-1`, so products are
//! computed in `Q[c_0, ..., c_N] / (monomials of degree > max_degree)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result};

/// Dense exponent vector. Ordered graded-lexicographically: higher total
/// degree first, then by the exponent of the earliest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], degree: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| u32::from(e)).sum();
        Monomial { exps, degree }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    /// All monomials of total degree `deg`, in decreasing graded-lex order.
    pub fn all_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
        fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
            if i + 1 == cur.len() {
                cur[i] = left as u16;
                out.push(cur.clone());
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if nvars == 0 {
            return if deg == 0 { vec![Monomial::one(0)] } else { vec![] };
        }
        let mut out = Vec::new();
        rec(0, deg, &mut vec![0; nvars], &mut out);
        out.into_iter().map(|exps| Monomial { exps, degree: deg }).collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `nvars` variables with every term of degree `<= max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPoly {
    nvars: usize,
    max_degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedPoly {
    pub fn zero(nvars: usize, max_degree: u32) -> Self {
        GradedPoly { nvars, max_degree, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, max_degree: u32, c: Rational) -> Self {
        let mut p = GradedPoly::zero(nvars, max_degree);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize, max_degree: u32) -> Self {
        GradedPoly::constant(nvars, max_degree, Rational::one())
    }

    pub fn var(nvars: usize, max_degree: u32, i: usize) -> Self {
        GradedPoly::monomial(nvars, max_degree, Monomial::var(nvars, i), Rational::one())
    }

    pub fn monomial(nvars: usize, max_degree: u32, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), nvars);
        let mut p = GradedPoly::zero(nvars, max_degree);
        p.add_term(m, c);
        p
    }

    /// Linear form `Σ coeff_i c_i`.
    pub fn linear<I>(nvars: usize, max_degree: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut p = GradedPoly::zero(nvars, max_degree);
        for (i, c) in terms {
            p.add_term(Monomial::var(nvars, i), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars))
    }

    /// Adds `c·m`, dropping it if it exceeds the truncation degree.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if m.degree() > self.max_degree || c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Degree-`j` homogeneous component.
    pub fn homogeneous(&self, j: u32) -> GradedPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == j)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        GradedPoly { nvars: self.nvars, max_degree: self.max_degree, terms }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Highest degree of a nonzero term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Same polynomial under a different truncation degree.
    pub fn truncate(&self, max_degree: u32) -> GradedPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() <= max_degree)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        GradedPoly { nvars: self.nvars, max_degree, terms }
    }

    /// `Σ (-1)^i p_i`, the image under `c_V ↦ -c_V`.
    pub fn alternate_signs(&self) -> GradedPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), if m.degree() % 2 == 0 { c.clone() } else { -c }))
            .collect();
        GradedPoly { nvars: self.nvars, max_degree: self.max_degree, terms }
    }

    pub fn scale(&self, c: &Rational) -> GradedPoly {
        if c.is_zero() {
            return GradedPoly::zero(self.nvars, self.max_degree);
        }
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        GradedPoly { nvars: self.nvars, max_degree: self.max_degree, terms }
    }

    fn check_compatible(&self, other: &GradedPoly) {
        assert_eq!(self.nvars, other.nvars, "polynomials over different variable sets");
        assert_eq!(self.max_degree, other.max_degree, "polynomials with different truncation");
    }

    pub fn pow(&self, mut e: u32) -> GradedPoly {
        let mut result = GradedPoly::one(self.nvars, self.max_degree);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Integer power; negative exponents go through [`GradedPoly::geom_inv`].
    pub fn int_pow(&self, e: i64) -> Result<GradedPoly> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e < 0 {
            p.geom_inv()
        } else {
            Ok(p)
        }
    }

    /// Truncated inverse `u^{-1} = u_0^{-1} Σ_k (-(u - u_0)/u_0)^k`.
    pub fn geom_inv(&self) -> Result<GradedPoly> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::Argument(
                "geometric inverse of a series with zero constant term".into(),
            ));
        }
        let inv_c = c.recip();
        let mut z = self.clone();
        z.terms.remove(&Monomial::one(self.nvars));
        let z = z.scale(&-&inv_c);
        let coeffs = vec![Rational::one(); self.max_degree as usize + 1];
        Ok(z.substitute_into(&coeffs).scale(&inv_c))
    }

    /// Truncated `exp(z)` for `z` without constant term.
    pub fn exp(&self) -> Result<GradedPoly> {
        if !self.constant_term().is_zero() {
            return Err(Error::Argument("exp of a series with nonzero constant term".into()));
        }
        let mut coeffs = Vec::with_capacity(self.max_degree as usize + 1);
        let mut fact = Rational::one();
        for k in 0..=self.max_degree {
            if k > 0 {
                fact *= Rational::from_integer(k.into());
            }
            coeffs.push(fact.recip());
        }
        Ok(self.substitute_into(&coeffs))
    }

    /// `Σ_k series[k] · self^k` (Horner). `self` must have zero constant
    /// term; coefficients past the truncation degree are irrelevant.
    pub fn substitute_into(&self, series: &[Rational]) -> GradedPoly {
        debug_assert!(self.constant_term().is_zero());
        let len = series.len().min(self.max_degree as usize + 1);
        let mut acc = GradedPoly::zero(self.nvars, self.max_degree);
        for c in series[..len].iter().rev() {
            acc = &acc * self;
            acc.add_term(Monomial::one(self.nvars), c.clone());
        }
        acc
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }
}

struct PolyDisplay<'a> {
    poly: &'a GradedPoly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        // Lowest degree first reads more naturally for series.
        let mut ordered: Vec<_> = self.poly.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then(b.exps.cmp(&a.exps)));
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = m
                .exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    let name = self.names.get(v).cloned().unwrap_or_else(|| format!("c{v}"));
                    if e == 1 { name } else { format!("{name}^{e}") }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &GradedPoly {
    type Output = GradedPoly;
    fn add(self, rhs: &GradedPoly) -> GradedPoly {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: &GradedPoly) -> GradedPoly {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        self.check_compatible(rhs);
        let mut out = GradedPoly::zero(self.nvars, self.max_degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                if ma.degree() + mb.degree() > self.max_degree {
                    continue;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}
