//! Central arrangements and their intersection lattices.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use crate::linalg::{self, DenseSpan};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<Rational>,
    pub mult: u32,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, mult: u32) -> Self {
        Hyperplane { normal, mult }
    }

    /// Hyperplane of multiplicity one with integer normal.
    pub fn reduced(normal: &[i64]) -> Self {
        Hyperplane::new(normal.iter().map(|&x| crate::rat(x)).collect(), 1)
    }
}

/// A central arrangement in `C^n` with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn new(n: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Validation(format!(
                "ambient dimension must be at least 2, got {n}"
            )));
        }
        if hyperplanes.is_empty() {
            return Err(Error::Validation("arrangement has no hyperplanes".into()));
        }
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.normal.len() != n {
                return Err(Error::Validation(format!(
                    "hyperplane {i}: normal has {} coordinates, expected {n}",
                    h.normal.len()
                )));
            }
            if h.normal.iter().all(Zero::is_zero) {
                return Err(Error::Validation(format!("hyperplane {i}: zero normal vector")));
            }
            if h.mult == 0 {
                return Err(Error::Validation(format!(
                    "hyperplane {i}: multiplicity must be positive"
                )));
            }
        }
        for i in 0..hyperplanes.len() {
            for j in i + 1..hyperplanes.len() {
                let pair = [hyperplanes[i].normal.as_slice(), hyperplanes[j].normal.as_slice()];
                if linalg::rank(n, pair) < 2 {
                    return Err(Error::ProportionalNormals { first: i, second: j });
                }
            }
        }
        Ok(Arrangement { n, hyperplanes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Total degree `d`, the sum of the multiplicities.
    pub fn degree(&self) -> u64 {
        self.hyperplanes.iter().map(|h| u64::from(h.mult)).sum()
    }

    pub fn multiplicities(&self) -> Vec<u32> {
        self.hyperplanes.iter().map(|h| h.mult).collect()
    }

    /// Rank of the set of all normals; `n` iff the arrangement is essential.
    pub fn rank(&self) -> usize {
        linalg::rank(self.n, self.hyperplanes.iter().map(|h| h.normal.as_slice()))
    }

    pub fn is_essential(&self) -> bool {
        self.rank() == self.n
    }

    /// Same arrangement with hyperplanes listed in the order `perm`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.len()];
        for &i in perm {
            if i >= self.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Argument("not a permutation of the hyperplanes".into()));
            }
        }
        if perm.len() != self.len() {
            return Err(Error::Argument("not a permutation of the hyperplanes".into()));
        }
        let hyperplanes = perm.iter().map(|&i| self.hyperplanes[i].clone()).collect();
        Arrangement::new(self.n, hyperplanes)
    }
}

/// An element of the intersection lattice, identified by its closure: the
/// sorted indices of the hyperplanes containing it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Flat {
    pub closure: Vec<usize>,
    pub dim: usize,
    pub codim: usize,
}

/// The intersection lattice `L(A)`, ambient space included.
///
/// Flats are ordered by codimension, ties broken lexicographically on the
/// closure, so index 0 is always `C^n`.
#[derive(Debug, Clone)]
pub struct IntersectionLattice {
    n: usize,
    num_hyperplanes: usize,
    flats: Vec<Flat>,
    index: HashMap<Vec<usize>, usize>,
    // subspace[v][w] <=> V ⊆ W
    subspace: Vec<Vec<bool>>,
    mobius: Vec<i64>,
}

impl IntersectionLattice {
    pub fn build(arr: &Arrangement) -> Result<Self> {
        let n = arr.n();
        let m = arr.len();
        let normals: Vec<&[Rational]> =
            arr.hyperplanes().iter().map(|h| h.normal.as_slice()).collect();

        let closure_of = |generators: &[usize]| -> (Vec<usize>, usize) {
            let mut span = DenseSpan::new(n);
            for &g in generators {
                span.insert(normals[g]);
            }
            let closure = (0..m).filter(|&i| span.contains(normals[i])).collect();
            (closure, span.rank())
        };

        let mut found: HashMap<Vec<usize>, usize> = HashMap::new();
        found.insert(Vec::new(), 0);
        let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
        while !frontier.is_empty() {
            let mut next = BTreeSet::new();
            for flat in &frontier {
                for i in 0..m {
                    if flat.binary_search(&i).is_ok() {
                        continue;
                    }
                    let mut gens = flat.clone();
                    gens.push(i);
                    let (closure, codim) = closure_of(&gens);
                    if !found.contains_key(&closure) {
                        found.insert(closure.clone(), codim);
                        next.insert(closure);
                    }
                }
            }
            frontier = next.into_iter().collect();
        }

        let mut flats: Vec<Flat> = found
            .into_iter()
            .map(|(closure, codim)| Flat { closure, dim: n - codim, codim })
            .collect();
        flats.sort_by(|a, b| a.codim.cmp(&b.codim).then_with(|| a.closure.cmp(&b.closure)));

        let index: HashMap<Vec<usize>, usize> =
            flats.iter().enumerate().map(|(i, f)| (f.closure.clone(), i)).collect();

        let subspace: Vec<Vec<bool>> = flats
            .iter()
            .map(|v| flats.iter().map(|w| is_subset(&w.closure, &v.closure)).collect())
            .collect();

        // μ(C^n, V) by the recursion over the strictly larger flats, which all
        // precede V in the codimension order.
        let mut mobius = vec![0i64; flats.len()];
        mobius[0] = 1;
        for v in 1..flats.len() {
            mobius[v] = -(0..v).filter(|&w| subspace[v][w]).map(|w| mobius[w]).sum::<i64>();
        }

        Ok(IntersectionLattice { n, num_hyperplanes: m, flats, index, subspace, mobius })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.num_hyperplanes
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flat(&self, i: usize) -> &Flat {
        &self.flats[i]
    }

    pub fn index_of(&self, closure: &[usize]) -> Option<usize> {
        self.index.get(closure).copied()
    }

    /// Index of the flat cut out by hyperplane `h` alone.
    pub fn hyperplane_flat(&self, h: usize) -> usize {
        self.index[&vec![h]]
    }

    /// True iff `V ⊆ W` as subspaces.
    pub fn is_subspace(&self, v: usize, w: usize) -> bool {
        self.subspace[v][w]
    }

    pub fn mobius(&self, v: usize) -> i64 {
        self.mobius[v]
    }

    /// The zero subspace, when it is a flat (essential arrangements).
    pub fn zero_flat(&self) -> Option<usize> {
        let last = self.flats.len() - 1;
        (self.flats[last].dim == 0).then_some(last)
    }

    pub fn is_essential(&self) -> bool {
        self.zero_flat().is_some()
    }

    /// Subspace intersection of the given flats (`C^n` for none).
    pub fn meet(&self, flats: &[usize]) -> usize {
        let mut union: Vec<usize> =
            flats.iter().flat_map(|&f| self.flats[f].closure.iter().copied()).collect();
        union.sort_unstable();
        union.dedup();
        if let Some(i) = self.index_of(&union) {
            return i;
        }
        // The smallest closed set containing the union.
        (0..self.flats.len())
            .filter(|&i| is_subset(&union, &self.flats[i].closure))
            .min_by_key(|&i| self.flats[i].closure.len())
            .expect("the minimal flat contains every hyperplane index")
    }

    /// Coefficients of `π(t) = Σ μ(C^n,V) (-t)^{r(V)}`, lowest degree first.
    pub fn poincare_polynomial(&self) -> Vec<i64> {
        let mut coeffs = vec![0i64; self.n + 1];
        for (v, flat) in self.flats.iter().enumerate() {
            let sign = if flat.codim % 2 == 0 { 1 } else { -1 };
            coeffs[flat.codim] += sign * self.mobius[v];
        }
        coeffs
    }

    /// Euler characteristic of the complement of the arrangement in
    /// `P^{n-1}`: `π(t)/(1+t)` evaluated at `t = -1`.
    pub fn euler_projective_complement(&self) -> Result<i64> {
        let pi = self.poincare_polynomial();
        // Synthetic division by (t + 1), from the top coefficient down.
        let deg = pi.len() - 1;
        let mut quotient = vec![0i64; deg];
        let mut carry = 0i64;
        for j in (1..=deg).rev() {
            carry = pi[j] - carry;
            quotient[j - 1] = carry;
        }
        if pi[0] != carry {
            return Err(Error::Internal(format!(
                "(1+t) does not divide the Poincaré polynomial {pi:?}"
            )));
        }
        let value = quotient
            .iter()
            .enumerate()
            .map(|(j, q)| if j % 2 == 0 { *q } else { -*q })
            .sum();
        Ok(value)
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn lattice(name: &str) -> IntersectionLattice {
        IntersectionLattice::build(&fixtures::by_name(name).unwrap()).unwrap()
    }

    #[test]
    fn three_concurrent_lines() {
        let lat = lattice("example-a");
        assert_eq!(lat.len(), 5);
        let dims: Vec<usize> = lat.flats().iter().map(|f| f.dim).collect();
        assert_eq!(dims, vec![2, 1, 1, 1, 0]);
        let mu: Vec<i64> = (0..5).map(|v| lat.mobius(v)).collect();
        assert_eq!(mu, vec![1, -1, -1, -1, 2]);
        assert_eq!(lat.poincare_polynomial(), vec![1, 3, 2]);
        assert_eq!(lat.euler_projective_complement().unwrap(), -1);
    }

    #[test]
    fn single_hyperplane() {
        for n in 2..5 {
            let mut normal = vec![0; n];
            normal[0] = 1;
            let arr = Arrangement::new(n, vec![Hyperplane::reduced(&normal)]).unwrap();
            let lat = IntersectionLattice::build(&arr).unwrap();
            assert_eq!(lat.len(), 2);
            assert_eq!(lat.euler_projective_complement().unwrap(), 1);
            assert!(!lat.is_essential());
        }
    }

    #[test]
    fn four_generic_planes() {
        let lat = lattice("example-b2");
        assert_eq!(lat.len(), 12);
        let count = |codim| lat.flats().iter().filter(|f| f.codim == codim).count();
        assert_eq!((count(0), count(1), count(2), count(3)), (1, 4, 6, 1));
        assert_eq!(lat.poincare_polynomial(), vec![1, 4, 6, 3]);
        assert_eq!(lat.euler_projective_complement().unwrap(), 1);
        let b1 = lattice("example-b1");
        assert_eq!(b1.poincare_polynomial(), vec![1, 4, 6, 3]);
    }

    #[test]
    fn proportional_normals_rejected() {
        let err = Arrangement::new(
            2,
            vec![Hyperplane::reduced(&[1, 2]), Hyperplane::reduced(&[-2, -4])],
        )
        .unwrap_err();
        assert!(matches!(err, Error::ProportionalNormals { first: 0, second: 1 }));
        assert!(err.to_string().contains("merge"));
    }

    #[test]
    fn invalid_inputs() {
        assert!(Arrangement::new(1, vec![Hyperplane::reduced(&[1])]).is_err());
        assert!(Arrangement::new(2, vec![]).is_err());
        assert!(Arrangement::new(2, vec![Hyperplane::reduced(&[0, 0])]).is_err());
        assert!(Arrangement::new(2, vec![Hyperplane::reduced(&[1, 0, 0])]).is_err());
        assert!(Arrangement::new(2, vec![Hyperplane::new(vec![crate::rat(1), crate::rat(0)], 0)])
            .is_err());
    }

    #[test]
    fn meet_of_planes_is_their_line() {
        let lat = lattice("example-b2");
        let a0 = lat.hyperplane_flat(0);
        let a1 = lat.hyperplane_flat(1);
        let line = lat.meet(&[a0, a1]);
        assert_eq!(lat.flat(line).closure, vec![0, 1]);
        assert_eq!(lat.meet(&[]), 0);
        let all: Vec<usize> = (0..4).map(|h| lat.hyperplane_flat(h)).collect();
        assert_eq!(Some(lat.meet(&all)), lat.zero_flat());
    }

    #[test]
    fn closures_are_closed_and_codim_is_rank() {
        for name in ["example-a", "example-b1", "generic3d:5", "braid4"] {
            let arr = fixtures::by_name(name).unwrap();
            let lat = IntersectionLattice::build(&arr).unwrap();
            for flat in lat.flats() {
                let normals: Vec<&[Rational]> =
                    flat.closure.iter().map(|&i| arr.hyperplanes()[i].normal.as_slice()).collect();
                assert_eq!(linalg::rank(arr.n(), normals.iter().copied()), flat.codim);
                let mut span = DenseSpan::new(arr.n());
                normals.iter().for_each(|v| {
                    span.insert(v);
                });
                for (i, h) in arr.hyperplanes().iter().enumerate() {
                    assert_eq!(span.contains(&h.normal), flat.closure.contains(&i));
                }
            }
        }
    }
}
