//! Formal Chern roots and the elementary-symmetric basis.
//!
//! Universal formulas (Chern classes of exterior powers, Chern characters)
//! are expanded in root variables `x_1..x_m`, rewritten in the elementary
//! symmetric polynomials `e_1..e_m` and then evaluated on concrete classes.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::{GradedPoly, Monomial};
use crate::{Error, Rational, Result};

/// Polynomial in `e_1..e_m`; key `k` holds the exponent of `e_{i+1}` at `k[i]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ElementaryPoly {
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl ElementaryPoly {
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates at `e_{i+1} = values[i]`.
    pub fn substitute(&self, values: &[GradedPoly], nvars: usize, max_degree: u32) -> GradedPoly {
        let mut out = GradedPoly::zero(nvars, max_degree);
        for (exps, c) in &self.terms {
            let mut term = GradedPoly::constant(nvars, max_degree, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = &term * &values[i].pow(e);
                }
            }
            out = &out + &term;
        }
        out
    }
}

/// `e_0..e_m` as polynomials in `m` roots, truncated at `max_degree`.
pub fn elementary_in_roots(m: usize, max_degree: u32) -> Vec<GradedPoly> {
    let mut e = vec![GradedPoly::zero(m, max_degree); m + 1];
    e[0] = GradedPoly::one(m, max_degree);
    for (k, ek) in e.iter_mut().enumerate().skip(1) {
        if k as u32 > max_degree {
            continue;
        }
        for subset in subsets(m, k) {
            let mut exps = vec![0u16; m];
            for i in subset {
                exps[i] = 1;
            }
            ek.add_term(Monomial::from_exponents(exps), Rational::one());
        }
    }
    e
}

/// Rewrites a symmetric polynomial in the roots in terms of `e_1..e_m`
/// by repeatedly cancelling the lexicographically leading term.
pub fn to_elementary(p: &GradedPoly) -> Result<ElementaryPoly> {
    let m = p.nvars();
    let e = elementary_in_roots(m, p.max_degree());
    let mut rest = p.clone();
    let mut out = ElementaryPoly::default();
    while let Some((lead, c)) = rest
        .terms()
        .max_by(|(a, _), (b, _)| a.exponents().cmp(b.exponents()))
        .map(|(m, c)| (m.clone(), c.clone()))
    {
        let a = lead.exponents();
        if a.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Internal(format!(
                "polynomial is not symmetric: leading exponent {a:?}"
            )));
        }
        let exps: Vec<u32> = (0..m)
            .map(|i| u32::from(a[i]) - a.get(i + 1).copied().map_or(0, u32::from))
            .collect();
        let mut term = GradedPoly::constant(m, p.max_degree(), c.clone());
        for (i, &k) in exps.iter().enumerate() {
            if k > 0 {
                term = &term * &e[i + 1].pow(k);
            }
        }
        rest = &rest - &term;
        if !rest.coeff(&lead).is_zero() {
            return Err(Error::Internal("symmetric rewrite failed to cancel the leading term".into()));
        }
        *out.terms.entry(exps).or_insert_with(Rational::zero) += c;
    }
    out.terms.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Coefficients of `t^0..t^{max_degree}` in `∏_{|S|=p} (1 + (Σ_{i∈S} x_i) t)`.
pub fn exterior_power_chern_roots(m: usize, p: usize, max_degree: u32) -> Vec<GradedPoly> {
    let len = max_degree as usize + 1;
    let mut coeffs = vec![GradedPoly::zero(m, max_degree); len];
    coeffs[0] = GradedPoly::one(m, max_degree);
    for subset in subsets(m, p) {
        let root = GradedPoly::linear(m, max_degree, subset.into_iter().map(|i| (i, Rational::one())));
        for i in (1..len).rev() {
            let shifted = &coeffs[i - 1] * &root;
            coeffs[i] = &coeffs[i] + &shifted;
        }
    }
    coeffs
}

/// `Σ_{|S|=p} exp(-Σ_{i∈S} x_i)`, the Chern character of the dual of the
/// `p`-th exterior power in terms of roots.
pub fn dual_exterior_character_roots(m: usize, p: usize, max_degree: u32) -> Result<GradedPoly> {
    let mut out = GradedPoly::zero(m, max_degree);
    for subset in subsets(m, p) {
        let root = GradedPoly::linear(m, max_degree, subset.into_iter().map(|i| (i, -Rational::one())));
        out = &out + &root.exp()?;
    }
    Ok(out)
}

/// Power sums `p_1..p_upto` from `e[i] = e_i` (with `e[0] = 1`) by Newton's
/// identities; indices beyond `e.len()` count as zero.
pub fn power_sums(e: &[GradedPoly], upto: usize) -> Vec<GradedPoly> {
    let (nvars, max_degree) = (e[0].nvars(), e[0].max_degree());
    let get = |i: usize| e.get(i).cloned().unwrap_or_else(|| GradedPoly::zero(nvars, max_degree));
    let mut p: Vec<GradedPoly> = vec![GradedPoly::zero(nvars, max_degree)];
    for j in 1..=upto {
        let sign = |k: usize| if k % 2 == 1 { Rational::one() } else { -Rational::one() };
        let mut pj = get(j).scale(&(sign(j) * Rational::from_integer(j.into())));
        for i in 1..j {
            pj = &pj + &(&get(i) * &p[j - i]).scale(&sign(i));
        }
        p.push(pj);
    }
    p
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// All `k`-subsets of `0..m` in lexicographic order.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}
