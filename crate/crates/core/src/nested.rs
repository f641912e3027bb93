//! Building sets, nested subsets and the exponents `d_{H,W}`.

use crate::arrangement::IntersectionLattice;
use crate::{Error, Result};

/// One element of a building set `G = G' ∪ {0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    /// Lattice index. For the formal zero element this is the zero flat when
    /// the arrangement is essential and `None` otherwise.
    pub flat: Option<usize>,
    pub dim: usize,
    pub codim: usize,
}

/// `G = {0} ∪ G'` with the formal zero element at index 0 and the flats of
/// `G'` sorted by dimension, then by closure.
#[derive(Debug, Clone)]
pub struct BuildingSet {
    n: usize,
    elements: Vec<Element>,
    // Whether the zero subspace belongs to G' (it is then identified with
    // the formal element 0).
    zero_in_building: bool,
    maximal: bool,
}

impl BuildingSet {
    /// `G' = L(A) - {C^n}`.
    pub fn maximal(lat: &IntersectionLattice) -> Self {
        let flats: Vec<usize> = (1..lat.len()).collect();
        Self::assemble(lat, flats, lat.is_essential(), true)
    }

    /// A user-supplied `G'` given by closure sets. It must contain every
    /// hyperplane; whether it is a building set is not checked.
    pub fn from_closures(lat: &IntersectionLattice, closures: &[Vec<usize>]) -> Result<Self> {
        let mut flats = Vec::new();
        let mut zero = false;
        for closure in closures {
            let mut sorted = closure.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let idx = lat.index_of(&sorted).ok_or_else(|| {
                Error::Validation(format!("building set entry {closure:?} is not a flat"))
            })?;
            if idx == 0 {
                return Err(Error::Validation(
                    "building set must not contain the ambient space".into(),
                ));
            }
            if Some(idx) == lat.zero_flat() {
                zero = true;
            } else if !flats.contains(&idx) {
                flats.push(idx);
            }
        }
        for h in 0..lat.num_hyperplanes() {
            let f = lat.hyperplane_flat(h);
            if !flats.contains(&f) {
                return Err(Error::Validation(format!(
                    "building set is missing hyperplane {h}"
                )));
            }
        }
        let maximal = zero == lat.is_essential() && flats.len() + 1 + usize::from(zero) == lat.len();
        Ok(Self::assemble(lat, flats, zero, maximal))
    }

    fn assemble(lat: &IntersectionLattice, flats: Vec<usize>, zero: bool, maximal: bool) -> Self {
        let n = lat.n();
        let mut flats: Vec<usize> =
            flats.into_iter().filter(|&f| Some(f) != lat.zero_flat()).collect();
        flats.sort_by(|&a, &b| {
            let (fa, fb) = (lat.flat(a), lat.flat(b));
            fa.dim.cmp(&fb.dim).then_with(|| fa.closure.cmp(&fb.closure))
        });
        let mut elements =
            vec![Element { flat: lat.zero_flat(), dim: 0, codim: n }];
        elements.extend(flats.into_iter().map(|f| Element {
            flat: Some(f),
            dim: lat.flat(f).dim,
            codim: lat.flat(f).codim,
        }));
        BuildingSet { n, elements, zero_in_building: zero, maximal }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn is_maximal(&self) -> bool {
        self.maximal
    }

    /// Building-set index of a lattice flat, if the flat is in `G'`.
    pub fn position_of_flat(&self, flat: usize) -> Option<usize> {
        if self.elements[0].flat == Some(flat) {
            return self.zero_in_building.then_some(0);
        }
        self.elements.iter().position(|e| e.flat == Some(flat))
    }

    /// True iff element `w` is contained in element `v` as a subspace.
    pub fn is_below(&self, lat: &IntersectionLattice, w: usize, v: usize) -> bool {
        if w == v || w == 0 {
            return true;
        }
        if v == 0 {
            return false;
        }
        lat.is_subspace(self.flat_of(w), self.flat_of(v))
    }

    pub fn is_strictly_below(&self, lat: &IntersectionLattice, w: usize, v: usize) -> bool {
        w != v && self.is_below(lat, w, v)
    }

    fn flat_of(&self, i: usize) -> usize {
        self.elements[i].flat.expect("nonzero elements are flats")
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.elements.len() {
            return Err(Error::Argument(format!("element {i} is not in the building set")));
        }
        Ok(())
    }

    /// Subspace intersection of nonzero elements, as a lattice index.
    fn meet(&self, lat: &IntersectionLattice, set: &[usize]) -> usize {
        let flats: Vec<usize> = set.iter().map(|&i| self.flat_of(i)).collect();
        lat.meet(&flats)
    }

    fn is_antichain(&self, lat: &IntersectionLattice, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(a, &x)| {
            set[a + 1..]
                .iter()
                .all(|&y| !self.is_below(lat, x, y) && !self.is_below(lat, y, x))
        })
    }

    /// An antichain whose intersection lies in `G'` obstructs nestedness.
    fn is_obstruction(&self, lat: &IntersectionLattice, set: &[usize]) -> bool {
        set.len() >= 2
            && self.is_antichain(lat, set)
            && self.position_of_flat(self.meet(lat, set)).is_some()
    }

    /// Nestedness: no pairwise-incomparable subfamily of two or more
    /// elements has its intersection in `G'`. The formal zero element is
    /// comparable to everything and is ignored.
    pub fn is_nested(&self, lat: &IntersectionLattice, set: &[usize]) -> Result<bool> {
        for &i in set {
            self.check_index(i)?;
        }
        let mut flats: Vec<usize> = set.iter().copied().filter(|&i| i != 0).collect();
        flats.sort_unstable();
        flats.dedup();
        let k = flats.len();
        if k > 20 {
            return Err(Error::Argument("subset too large for the nestedness test".into()));
        }
        for mask in 1u32..(1 << k) {
            if mask.count_ones() < 2 {
                continue;
            }
            let sub: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| flats[b]).collect();
            if self.is_obstruction(lat, &sub) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All nested subsets of `G - {0}` of size at most `max_size`, `∅`
    /// first, in depth-first order with increasing element indices.
    pub fn enumerate_nested(&self, lat: &IntersectionLattice, max_size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.collect_nested(lat, &mut Vec::new(), max_size, &mut out);
        out
    }

    fn collect_nested(
        &self,
        lat: &IntersectionLattice,
        set: &mut Vec<usize>,
        max_size: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(set.clone());
        if set.len() >= max_size {
            return;
        }
        let start = set.last().map_or(1, |&l| l + 1);
        for x in start..self.elements.len() {
            if self.extends_nested(lat, set, x) {
                set.push(x);
                self.collect_nested(lat, set, max_size, out);
                set.pop();
            }
        }
    }

    /// Given nested `set`, whether `set ∪ {x}` is nested. Only antichains
    /// through `x` need checking.
    fn extends_nested(&self, lat: &IntersectionLattice, set: &[usize], x: usize) -> bool {
        let k = set.len();
        for mask in 1u32..(1 << k) {
            let mut sub: Vec<usize> =
                (0..k).filter(|b| mask >> b & 1 == 1).map(|b| set[b]).collect();
            sub.push(x);
            if self.is_obstruction(lat, &sub) {
                return false;
            }
        }
        true
    }

    /// Minimal non-nested antichains of size in `2..=max_size`: nested
    /// antichains extended by one incomparable element of larger index
    /// whose joint intersection lies in `G'`.
    pub fn obstructions(&self, lat: &IntersectionLattice, max_size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for set in self.enumerate_nested(lat, max_size.saturating_sub(1)) {
            if set.is_empty() || !self.is_antichain(lat, &set) {
                continue;
            }
            let start = set.last().map_or(1, |&l| l + 1);
            for x in start..self.elements.len() {
                let mut t = set.clone();
                t.push(x);
                if self.is_obstruction(lat, &t) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// `d_{H,W} = δ(∩_{V∈H} V) - δ(W)` with `δ(∩∅) = n`. Requires `W ⊊ V`
    /// for every `V ∈ H`.
    pub fn d_value(&self, lat: &IntersectionLattice, h: &[usize], w: usize) -> Result<usize> {
        self.check_index(w)?;
        for &v in h {
            self.check_index(v)?;
            if !self.is_strictly_below(lat, w, v) {
                return Err(Error::Argument(format!(
                    "element {w} is not strictly contained in element {v}"
                )));
            }
        }
        // W ⊊ V rules out the formal zero element in H.
        let top = if h.is_empty() { self.n } else { lat.flat(self.meet(lat, h)).dim };
        let bottom = self.elements[w].dim;
        top.checked_sub(bottom)
            .ok_or_else(|| Error::Internal("negative d_{H,W}".into()))
    }

    /// Display names: `c_0` for the zero element, `c_{i,j,..}` (closure) for flats.
    pub fn variable_names(&self, lat: &IntersectionLattice) -> Vec<String> {
        self.elements
            .iter()
            .enumerate()
            .map(|(i, e)| match (i, e.flat) {
                (0, _) => "c_0".to_string(),
                (_, Some(f)) => {
                    let ids: Vec<String> =
                        lat.flat(f).closure.iter().map(|h| h.to_string()).collect();
                    format!("c[{}]", ids.join(","))
                }
                _ => unreachable!(),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn setup(name: &str) -> (IntersectionLattice, BuildingSet) {
        let lat = IntersectionLattice::build(&fixtures::by_name(name).unwrap()).unwrap();
        let bs = BuildingSet::maximal(&lat);
        (lat, bs)
    }

    #[test]
    fn maximal_sizes() {
        assert_eq!(setup("example-a").1.len(), 4);
        let (_, b) = setup("example-b2");
        assert_eq!(b.len(), 11);
        let dims: Vec<usize> = b.elements().iter().map(|e| e.dim).collect();
        assert_eq!(dims, vec![0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2]);
        let arr = crate::Arrangement::new(3, vec![crate::Hyperplane::reduced(&[0, 0, 1])]).unwrap();
        let lat = IntersectionLattice::build(&arr).unwrap();
        let bs = BuildingSet::maximal(&lat);
        assert_eq!(bs.len(), 2);
        assert_eq!(bs.element(0).flat, None);
    }

    #[test]
    fn nestedness_in_example_b() {
        let (lat, bs) = setup("example-b2");
        // Element 1 is a line, 7.. are planes.
        let line = 1;
        let planes: Vec<usize> = (7..11).collect();
        let above: Vec<usize> =
            planes.iter().copied().filter(|&p| bs.is_below(&lat, line, p)).collect();
        assert_eq!(above.len(), 2);
        assert!(bs.is_nested(&lat, &[line, above[0]]).unwrap());
        assert!(!bs.is_nested(&lat, &[planes[0], planes[1]]).unwrap());
        assert!(!bs.is_nested(&lat, &[1, 2]).unwrap());
        assert!(bs.is_nested(&lat, &[]).unwrap());
        assert!(bs.is_nested(&lat, &[0, line]).unwrap());
        assert!(bs.is_nested(&lat, &[99]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let (lat, bs) = setup("example-a");
        assert_eq!(bs.enumerate_nested(&lat, 1), vec![vec![], vec![1], vec![2], vec![3]]);
        let (lat, bs) = setup("example-b2");
        let sets = bs.enumerate_nested(&lat, 2);
        assert_eq!(sets.iter().filter(|s| s.is_empty()).count(), 1);
        assert_eq!(sets.iter().filter(|s| s.len() == 1).count(), 10);
        assert_eq!(sets.iter().filter(|s| s.len() == 2).count(), 12);
        assert_eq!(bs.obstructions(&lat, 2).len(), 6 + 15 + 12);
    }

    #[test]
    fn d_values() {
        let (lat, bs) = setup("example-a");
        assert_eq!(bs.d_value(&lat, &[], 0).unwrap(), 2);
        assert_eq!(bs.d_value(&lat, &[], 1).unwrap(), 1);
        assert!(bs.d_value(&lat, &[1], 2).is_err());
        let (lat, bs) = setup("example-b2");
        let plane = 7;
        let line = (1..7).find(|&l| bs.is_below(&lat, l, plane)).unwrap();
        assert_eq!(bs.d_value(&lat, &[plane], line).unwrap(), 1);
        assert_eq!(bs.d_value(&lat, &[line, plane], 0).unwrap(), 1);
    }

    #[test]
    fn maximal_nested_iff_chain_brute_force() {
        for name in ["example-b1", "braid4", "generic3d:5"] {
            let (lat, bs) = setup(name);
            let m = bs.len();
            let nested = bs.enumerate_nested(&lat, 4);
            let mut brute = Vec::new();
            for mask in 0u64..(1 << (m - 1)) {
                if mask.count_ones() > 4 {
                    continue;
                }
                let set: Vec<usize> = (1..m).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let is_chain = set.iter().all(|&a| {
                    set.iter().all(|&b| bs.is_below(&lat, a, b) || bs.is_below(&lat, b, a))
                });
                assert_eq!(bs.is_nested(&lat, &set).unwrap(), is_chain, "{name} {set:?}");
                if is_chain {
                    brute.push(set);
                }
            }
            let mut got = nested.clone();
            got.sort();
            brute.sort();
            assert_eq!(got, brute, "{name}");
        }
    }

    #[test]
    fn custom_building_set_requires_hyperplanes() {
        let (lat, _) = setup("example-b2");
        let err = BuildingSet::from_closures(&lat, &[vec![0], vec![1]]).unwrap_err();
        assert!(err.is_validation());
        let all: Vec<Vec<usize>> = lat.flats()[1..].iter().map(|f| f.closure.clone()).collect();
        let bs = BuildingSet::from_closures(&lat, &all).unwrap();
        assert!(bs.is_maximal());
        assert_eq!(bs.len(), 11);
    }
}
