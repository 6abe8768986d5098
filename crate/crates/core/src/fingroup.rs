//! Finite group kernel: permutation-represented groups with full element
//! enumeration, verified homomorphisms stored as total element maps, and the
//! exhaustive subgroup calculus (kernels, intersections, commutators, normal
//! closures) used everywhere else.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default ceiling on the number of enumerated elements.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// Domain size above which homomorphism verification switches from the
/// all-pairs sweep to Cayley-edge consistency (equivalent by induction on
/// generator words, linear instead of quadratic).
const ALL_PAIRS_VERIFY_LIMIT: usize = 2_000;

/// A permutation of `{0, .., degree-1}` stored as its images array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    /// Build from an images array, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &i in &images {
            if i >= degree || seen[i] {
                return Err(Error::BadPermutation { degree, images });
            }
            seen[i] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    /// Cycle notation constructor, e.g. `from_cycles(4, &[&[0,1,2,3]])`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for k in 0..cycle.len() {
                let from = cycle[k];
                let to = cycle[(k + 1) % cycle.len()];
                if from >= degree || to >= degree {
                    return Err(Error::BadPermutation {
                        degree,
                        images: cycle.to_vec(),
                    });
                }
                images[from] = to;
            }
        }
        Perm::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u16 == j)
    }

    /// Multiplicative order, from the cycle type.
    pub fn order(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut ord = 1usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.apply(p);
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// Embed into a larger point set at the given offset.
    pub fn shift(&self, offset: usize, total_degree: usize) -> Perm {
        let mut images: Vec<u16> = (0..total_degree as u16).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[offset + i] = (offset + j as usize) as u16;
        }
        Perm { images }
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A fully enumerated permutation group.
///
/// Element 0 is always the identity. `transitions[e * gens + g]` is the index
/// of `elements[e] * generators[g]`, recorded during the closure BFS; it doubles
/// as the Cayley graph used for homomorphism word propagation.
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    inverses: Vec<u32>,
    transitions: Vec<u32>,
    /// BFS tree: `parents[e] = (parent, gen)` with `e = parent * gen`; identity has none.
    parents: Vec<Option<(u32, u16)>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteGroup(degree={}, order={}, gens={})",
            self.degree,
            self.order(),
            self.generators.len()
        )
    }
}

impl FiniteGroup {
    /// Enumerate the group generated by `gens` acting on `degree` points.
    pub fn closure(gens: Vec<Perm>, degree: usize, cap: usize) -> Result<Arc<FiniteGroup>> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0u32);
        let mut transitions: Vec<u32> = Vec::new();
        let mut parents: Vec<Option<(u32, u16)>> = vec![None];
        let mut queue: VecDeque<u32> = VecDeque::new();
        queue.push_back(0);
        while let Some(e) = queue.pop_front() {
            let base = transitions.len();
            transitions.resize(base + gens.len(), 0);
            for (gi, g) in gens.iter().enumerate() {
                let product = elements[e as usize].compose(g);
                let idx = match index.get(&product) {
                    Some(&i) => i,
                    None => {
                        let i = elements.len() as u32;
                        if elements.len() >= cap {
                            return Err(Error::OrderCapExceeded { cap });
                        }
                        elements.push(product.clone());
                        index.insert(product, i);
                        parents.push(Some((e, gi as u16)));
                        queue.push_back(i);
                        i
                    }
                };
                transitions[base + gi] = idx;
            }
        }
        let inverses = elements
            .iter()
            .map(|p| index[&p.inverse()])
            .collect();
        Ok(Arc::new(FiniteGroup {
            degree,
            generators: gens,
            elements,
            index,
            inverses,
            transitions,
            parents,
        }))
    }

    pub fn trivial(degree: usize) -> Arc<FiniteGroup> {
        FiniteGroup::closure(Vec::new(), degree, 2).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn perm(&self, idx: u32) -> &Perm {
        &self.elements[idx as usize]
    }

    pub fn identity_idx(&self) -> u32 {
        0
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    /// Product of elements by index (`a * b`, applying `b`'s permutation first).
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.elements[a as usize].compose(&self.elements[b as usize]);
        self.index[&p]
    }

    pub fn mul_by_gen(&self, a: u32, gen: usize) -> u32 {
        self.transitions[a as usize * self.generators.len() + gen]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    pub fn conj(&self, a: u32, by: u32) -> u32 {
        self.mul(self.mul(by, a), self.inv(by))
    }

    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn element_order(&self, a: u32) -> usize {
        self.elements[a as usize].order()
    }

    pub fn parent_edge(&self, e: u32) -> Option<(u32, u16)> {
        self.parents[e as usize]
    }

    /// Multiset of element orders, sorted.
    pub fn order_spectrum(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements.iter().map(|p| p.order()).collect();
        v.sort_unstable();
        v
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.generators.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                self.generators[i].compose(&self.generators[j])
                    == self.generators[j].compose(&self.generators[i])
            })
        })
    }

    /// The whole group as a subgroup of itself.
    pub fn full_subgroup(self: &Arc<Self>) -> Subgroup {
        Subgroup::from_indices(self.clone(), (0..self.order() as u32).collect())
    }

    pub fn trivial_subgroup(self: &Arc<Self>) -> Subgroup {
        Subgroup::from_indices(self.clone(), vec![0])
    }
}

/// A verified homomorphism stored as a total element-index map.
#[derive(Clone)]
pub struct Homomorphism {
    domain: Arc<FiniteGroup>,
    codomain: Arc<FiniteGroup>,
    images: Vec<u32>,
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Homomorphism({} -> {})",
            self.domain.order(),
            self.codomain.order()
        )
    }
}

impl Homomorphism {
    /// Build from generator images by word propagation over the Cayley tree,
    /// then verify consistency on every (element, generator) edge. For small
    /// domains the all-pairs sweep runs as well.
    pub fn from_gen_images(
        domain: Arc<FiniteGroup>,
        codomain: Arc<FiniteGroup>,
        gen_images: &[Perm],
    ) -> Result<Homomorphism> {
        if gen_images.len() != domain.generators().len() {
            return Err(Error::GeneratorCountMismatch {
                expected: domain.generators().len(),
                found: gen_images.len(),
            });
        }
        let mut gen_idx = Vec::with_capacity(gen_images.len());
        for p in gen_images {
            match codomain.index_of(p) {
                Some(i) => gen_idx.push(i),
                None => {
                    return Err(Error::ImageOutsideCodomain {
                        element: format!("{:?}", p),
                    })
                }
            }
        }
        let mut images = vec![0u32; domain.order()];
        for e in 1..domain.order() as u32 {
            let (parent, gen) = domain.parent_edge(e).expect("non-identity has a parent");
            images[e as usize] = codomain.mul(images[parent as usize], gen_idx[gen as usize]);
        }
        let hom = Homomorphism {
            domain,
            codomain,
            images,
        };
        hom.verify_edges(&gen_idx)?;
        if hom.domain.order() <= ALL_PAIRS_VERIFY_LIMIT {
            hom.verify_all_pairs()?;
        }
        Ok(hom)
    }

    /// Build from an arbitrary function on elements; verified the same way.
    pub fn from_fn(
        domain: Arc<FiniteGroup>,
        codomain: Arc<FiniteGroup>,
        f: impl Fn(&Perm) -> Perm,
    ) -> Result<Homomorphism> {
        let mut images = Vec::with_capacity(domain.order());
        for p in domain.elements() {
            let q = f(p);
            match codomain.index_of(&q) {
                Some(i) => images.push(i),
                None => {
                    return Err(Error::ImageOutsideCodomain {
                        element: format!("{:?}", q),
                    })
                }
            }
        }
        let gen_idx: Vec<u32> = domain
            .generators()
            .iter()
            .map(|g| images[domain.index_of(g).expect("generator enumerated") as usize])
            .collect();
        let hom = Homomorphism {
            domain,
            codomain,
            images,
        };
        hom.verify_edges(&gen_idx)?;
        if hom.domain.order() <= ALL_PAIRS_VERIFY_LIMIT {
            hom.verify_all_pairs()?;
        }
        Ok(hom)
    }

    pub fn identity(g: Arc<FiniteGroup>) -> Homomorphism {
        Homomorphism {
            domain: g.clone(),
            codomain: g.clone(),
            images: (0..g.order() as u32).collect(),
        }
    }

    fn verify_edges(&self, gen_idx: &[u32]) -> Result<()> {
        if self.images[0] != self.codomain.identity_idx() {
            return Err(Error::HomomorphismInvalid {
                a: "1".into(),
                b: "1".into(),
            });
        }
        for e in 0..self.domain.order() as u32 {
            for g in 0..gen_idx.len() {
                let eg = self.domain.mul_by_gen(e, g);
                let lhs = self.images[eg as usize];
                let rhs = self.codomain.mul(self.images[e as usize], gen_idx[g]);
                if lhs != rhs {
                    return Err(Error::HomomorphismInvalid {
                        a: format!("{:?}", self.domain.perm(e)),
                        b: format!("{:?}", self.domain.generators()[g]),
                    });
                }
            }
        }
        Ok(())
    }

    /// The quadratic check `f(ab) = f(a) f(b)` over all pairs.
    pub fn verify_all_pairs(&self) -> Result<()> {
        for a in 0..self.domain.order() as u32 {
            for b in 0..self.domain.order() as u32 {
                let ab = self.domain.mul(a, b);
                if self.images[ab as usize]
                    != self
                        .codomain
                        .mul(self.images[a as usize], self.images[b as usize])
                {
                    return Err(Error::HomomorphismInvalid {
                        a: format!("{:?}", self.domain.perm(a)),
                        b: format!("{:?}", self.domain.perm(b)),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &Arc<FiniteGroup> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteGroup> {
        &self.codomain
    }

    pub fn apply_idx(&self, e: u32) -> u32 {
        self.images[e as usize]
    }

    pub fn apply(&self, p: &Perm) -> &Perm {
        let e = self.domain.index_of(p).expect("element of the domain");
        self.codomain.perm(self.images[e as usize])
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Homomorphism) -> Homomorphism {
        debug_assert_eq!(
            other.codomain.order(),
            self.domain.order(),
            "composition level mismatch"
        );
        Homomorphism {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            images: other
                .images
                .iter()
                .map(|&m| self.images[m as usize])
                .collect(),
        }
    }

    pub fn kernel(&self) -> Subgroup {
        let members: Vec<u32> = (0..self.domain.order() as u32)
            .filter(|&e| self.images[e as usize] == self.codomain.identity_idx())
            .collect();
        Subgroup::from_indices(self.domain.clone(), members)
    }

    pub fn image(&self) -> Subgroup {
        let mut members: Vec<u32> = self.images.clone();
        members.sort_unstable();
        members.dedup();
        Subgroup::from_indices(self.codomain.clone(), members)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.codomain.order()
    }
}

/// A subgroup stored as an explicit, sorted element-index subset of its parent.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<u32>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order={} of {})", self.members.len(), self.parent.order())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.members == other.members
    }
}

impl Subgroup {
    pub fn from_indices(parent: Arc<FiniteGroup>, mut members: Vec<u32>) -> Subgroup {
        members.sort_unstable();
        members.dedup();
        Subgroup { parent, members }
    }

    /// Closure of a set of member indices inside the parent.
    pub fn generated(parent: Arc<FiniteGroup>, gens: &[u32]) -> Subgroup {
        let mut members = vec![parent.identity_idx()];
        let mut seen = vec![false; parent.order()];
        seen[0] = true;
        let mut queue: VecDeque<u32> = VecDeque::new();
        queue.push_back(0);
        while let Some(e) = queue.pop_front() {
            for &g in gens {
                let x = parent.mul(e, g);
                if !seen[x as usize] {
                    seen[x as usize] = true;
                    members.push(x);
                    queue.push_back(x);
                }
            }
        }
        Subgroup::from_indices(parent, members)
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, e: u32) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        assert!(
            Arc::ptr_eq(&self.parent, &other.parent),
            "intersection requires a common parent"
        );
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&e| other.contains(e))
            .collect();
        Subgroup::from_indices(self.parent.clone(), members)
    }

    /// Smallest normal subgroup of the parent containing `self`.
    pub fn normal_closure(&self) -> Subgroup {
        // Conjugate by parent generators, then close under multiplication.
        let parent = &self.parent;
        let n_gens = parent.generators().len();
        let mut seed: Vec<u32> = self.members.clone();
        let mut frontier = seed.clone();
        let mut seen: Vec<bool> = vec![false; parent.order()];
        for &m in &seed {
            seen[m as usize] = true;
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &x in &frontier {
                for g in 0..n_gens {
                    let gx = parent.mul_by_gen(x, g);
                    let g_idx = parent.mul_by_gen(parent.identity_idx(), g);
                    let conj = parent.mul(gx, parent.inv(g_idx));
                    // also conjugate by the inverse generator
                    let gi = parent.inv(g_idx);
                    let conj2 = parent.mul(parent.mul(gi, x), g_idx);
                    for c in [conj, conj2] {
                        if !seen[c as usize] {
                            seen[c as usize] = true;
                            seed.push(c);
                            next.push(c);
                        }
                    }
                }
            }
            frontier = next;
        }
        Subgroup::generated(parent.clone(), &seed)
    }

    /// Subgroup generated by all commutators `[a, b]`, `a` in self, `b` in other.
    pub fn commutator_with(&self, other: &Subgroup) -> Subgroup {
        assert!(Arc::ptr_eq(&self.parent, &other.parent));
        let mut comms = Vec::new();
        for &a in &self.members {
            for &b in &other.members {
                comms.push(self.parent.commutator(a, b));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        Subgroup::generated(self.parent.clone(), &comms)
    }

    pub fn is_normal(&self) -> bool {
        self.parent.generators().iter().all(|g| {
            let g_idx = self.parent.index_of(g).unwrap();
            self.members
                .iter()
                .all(|&m| self.contains(self.parent.conj(m, g_idx)))
        })
    }

    /// Image of this subgroup under a homomorphism on the parent, as a set of
    /// codomain indices.
    pub fn image_under(&self, f: &Homomorphism) -> Subgroup {
        assert!(Arc::ptr_eq(&self.parent, f.domain()));
        let mut members: Vec<u32> = self.members.iter().map(|&m| f.apply_idx(m)).collect();
        members.sort_unstable();
        members.dedup();
        Subgroup::from_indices(f.codomain().clone(), members)
    }

    /// Re-enumerate as a standalone FiniteGroup on the same point set.
    pub fn into_group(&self) -> Arc<FiniteGroup> {
        let gens = self.small_generating_set();
        let perms: Vec<Perm> = gens.iter().map(|&i| self.parent.perm(i).clone()).collect();
        let g = FiniteGroup::closure(perms, self.parent.degree(), self.members.len() + 1)
            .expect("subgroup closure stays within its own order");
        debug_assert_eq!(g.order(), self.members.len());
        g
    }

    /// Greedy generating set for the subgroup (indices into the parent).
    pub fn small_generating_set(&self) -> Vec<u32> {
        let mut gens: Vec<u32> = Vec::new();
        let mut current = Subgroup::from_indices(self.parent.clone(), vec![0]);
        // Prefer high-order elements; they tend to generate faster.
        let mut candidates = self.members.clone();
        candidates.sort_by_key(|&m| std::cmp::Reverse(self.parent.element_order(m)));
        for m in candidates {
            if !current.contains(m) {
                gens.push(m);
                current = Subgroup::generated(self.parent.clone(), &gens);
                if current.order() == self.members.len() {
                    break;
                }
            }
        }
        gens
    }
}

/// A direct product together with its injections and projections.
pub struct DirectProduct {
    pub group: Arc<FiniteGroup>,
    pub inj_left: Homomorphism,
    pub inj_right: Homomorphism,
    pub proj_left: Homomorphism,
    pub proj_right: Homomorphism,
}

/// Product group acting on the disjoint union of the factors' point sets.
pub fn direct_product(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>, cap: usize) -> Result<DirectProduct> {
    if a.order().saturating_mul(b.order()) > cap {
        return Err(Error::OrderCapExceeded { cap });
    }
    let degree = a.degree() + b.degree();
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(g.shift(0, degree));
    }
    for g in b.generators() {
        gens.push(g.shift(a.degree(), degree));
    }
    let group = FiniteGroup::closure(gens, degree, cap)?;
    debug_assert_eq!(group.order(), a.order() * b.order());
    let a_deg = a.degree();
    let inj_left = Homomorphism::from_fn(a.clone(), group.clone(), |p| p.shift(0, degree))?;
    let inj_right = Homomorphism::from_fn(b.clone(), group.clone(), |p| p.shift(a_deg, degree))?;
    let proj_left = Homomorphism::from_fn(group.clone(), a.clone(), |p| {
        Perm::new((0..a_deg).map(|i| p.apply(i)).collect()).expect("left block is a permutation")
    })?;
    let proj_right = Homomorphism::from_fn(group.clone(), b.clone(), |p| {
        Perm::new((a_deg..degree).map(|i| p.apply(i) - a_deg).collect())
            .expect("right block is a permutation")
    })?;
    Ok(DirectProduct {
        group,
        inj_left,
        inj_right,
        proj_left,
        proj_right,
    })
}

/// Outcome of an isomorphism search: the element map when one exists.
pub fn find_isomorphism(
    a: &Arc<FiniteGroup>,
    b: &Arc<FiniteGroup>,
    budget: usize,
) -> Result<Option<Vec<u32>>> {
    let mut found = None;
    search_isomorphisms(a, b, budget, &mut |map| {
        found = Some(map.to_vec());
        Flow::Stop
    })?;
    Ok(found)
}

pub fn is_isomorphic(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>, budget: usize) -> Result<bool> {
    Ok(find_isomorphism(a, b, budget)?.is_some())
}

/// Enumerate all isomorphisms a -> b (as element maps) up to the budget.
pub fn all_isomorphisms(
    a: &Arc<FiniteGroup>,
    b: &Arc<FiniteGroup>,
    budget: usize,
) -> Result<Vec<Vec<u32>>> {
    let mut all = Vec::new();
    search_isomorphisms(a, b, budget, &mut |map| {
        all.push(map.to_vec());
        Flow::Continue
    })?;
    Ok(all)
}

#[derive(PartialEq)]
enum Flow {
    Continue,
    Stop,
}

/// Backtracking over generator images with order-spectrum pruning.
fn search_isomorphisms(
    a: &Arc<FiniteGroup>,
    b: &Arc<FiniteGroup>,
    budget: usize,
    on_found: &mut dyn FnMut(&[u32]) -> Flow,
) -> Result<()> {
    if a.order() != b.order() {
        return Ok(());
    }
    if a.order_spectrum() != b.order_spectrum() {
        return Ok(());
    }
    let gens = minimal_generating_set(a);
    let gen_orders: Vec<usize> = gens.iter().map(|&g| a.element_order(g)).collect();
    // Candidate images per generator slot, filtered by element order.
    let candidates: Vec<Vec<u32>> = gen_orders
        .iter()
        .map(|&o| {
            (0..b.order() as u32)
                .filter(|&e| b.element_order(e) == o)
                .collect()
        })
        .collect();
    let mut assignment = vec![0u32; gens.len()];
    let mut nodes = 0usize;
    try_assign(
        a, b, &gens, &candidates, 0, &mut assignment, &mut nodes, budget, on_found,
    )?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn try_assign(
    a: &Arc<FiniteGroup>,
    b: &Arc<FiniteGroup>,
    gens: &[u32],
    candidates: &[Vec<u32>],
    slot: usize,
    assignment: &mut [u32],
    nodes: &mut usize,
    budget: usize,
    on_found: &mut dyn FnMut(&[u32]) -> Flow,
) -> Result<Flow> {
    if slot == gens.len() {
        if let Some(map) = extend_by_words(a, b, gens, assignment) {
            return Ok(on_found(&map));
        }
        return Ok(Flow::Continue);
    }
    for &cand in &candidates[slot] {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::SearchBudgetExceeded { budget });
        }
        assignment[slot] = cand;
        if try_assign(a, b, gens, candidates, slot + 1, assignment, nodes, budget, on_found)?
            == Flow::Stop
        {
            return Ok(Flow::Stop);
        }
    }
    Ok(Flow::Continue)
}

/// Attempt to extend generator images to a full bijective homomorphism by
/// propagating over the subgroup generated by `gens`; None when inconsistent
/// or not surjective.
fn extend_by_words(
    a: &Arc<FiniteGroup>,
    b: &Arc<FiniteGroup>,
    gens: &[u32],
    images: &[u32],
) -> Option<Vec<u32>> {
    let n = a.order();
    let mut map: Vec<Option<u32>> = vec![None; n];
    map[0] = Some(0);
    let mut order: Vec<u32> = vec![0];
    let mut head = 0usize;
    while head < order.len() {
        let e = order[head];
        head += 1;
        for (k, &g) in gens.iter().enumerate() {
            let eg = a.mul(e, g);
            let img = b.mul(map[e as usize].unwrap(), images[k]);
            match map[eg as usize] {
                Some(existing) if existing != img => return None,
                Some(_) => {}
                None => {
                    map[eg as usize] = Some(img);
                    order.push(eg);
                }
            }
        }
    }
    if order.len() < n {
        return None; // gens did not generate all of a (cannot happen for a true gen set)
    }
    let flat: Vec<u32> = map.into_iter().map(|o| o.unwrap()).collect();
    let mut seen = vec![false; n];
    for &i in &flat {
        if seen[i as usize] {
            return None;
        }
        seen[i as usize] = true;
    }
    Some(flat)
}

/// A small generating set: exhaustive over 1- and 2-element subsets for
/// modest orders, greedy otherwise.
pub fn minimal_generating_set(g: &Arc<FiniteGroup>) -> Vec<u32> {
    let n = g.order();
    if n == 1 {
        return Vec::new();
    }
    let subgroup_order = |gens: &[u32]| Subgroup::generated(g.clone(), gens).order();
    if n <= 512 {
        for e in 1..n as u32 {
            if g.element_order(e) == n {
                return vec![e];
            }
        }
        if n <= 128 {
            for x in 1..n as u32 {
                for y in (x + 1)..n as u32 {
                    if subgroup_order(&[x, y]) == n {
                        return vec![x, y];
                    }
                }
            }
        }
    }
    g.full_subgroup().small_generating_set()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<FiniteGroup> {
        FiniteGroup::closure(
            vec![
                Perm::from_cycles(3, &[&[0, 1]]).unwrap(),
                Perm::from_cycles(3, &[&[1, 2]]).unwrap(),
            ],
            3,
            DEFAULT_ORDER_CAP,
        )
        .unwrap()
    }

    fn d4() -> Arc<FiniteGroup> {
        FiniteGroup::closure(
            vec![
                Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
                Perm::from_cycles(4, &[&[0, 2]]).unwrap(),
            ],
            4,
            DEFAULT_ORDER_CAP,
        )
        .unwrap()
    }

    #[test]
    fn closure_empty_generating_set_is_trivial() {
        let g = FiniteGroup::closure(vec![], 3, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn closure_adjacent_transpositions_generate_sym3() {
        assert_eq!(s3().order(), 6);
    }

    #[test]
    fn closure_cyclic_generator() {
        let g = FiniteGroup::closure(
            vec![Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()],
            4,
            DEFAULT_ORDER_CAP,
        )
        .unwrap();
        assert_eq!(g.order(), 4);
    }

    #[test]
    fn closure_rejects_bad_permutation() {
        assert!(matches!(
            Perm::new(vec![0, 0, 1]),
            Err(Error::BadPermutation { .. })
        ));
    }

    #[test]
    fn closure_respects_order_cap() {
        let gens = vec![
            Perm::from_cycles(3, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(3, &[&[1, 2]]).unwrap(),
        ];
        assert!(matches!(
            FiniteGroup::closure(gens, 3, 4),
            Err(Error::OrderCapExceeded { cap: 4 })
        ));
    }

    #[test]
    fn kernel_of_identity_map_is_trivial() {
        let g = s3();
        let id = Homomorphism::identity(g.clone());
        assert!(id.kernel().is_trivial());
    }

    #[test]
    fn kernel_of_constant_map_is_whole_domain() {
        let g = s3();
        let t = FiniteGroup::trivial(1);
        let c = Homomorphism::from_fn(g.clone(), t, |_| Perm::identity(1)).unwrap();
        assert_eq!(c.kernel().order(), 6);
    }

    #[test]
    fn kernel_of_sign_map_has_order_three() {
        // Sign map on Sym(3): oracle computed by brute-force scan of all 6
        // elements (even permutations go to the identity of C2).
        let g = s3();
        let c2 = FiniteGroup::closure(
            vec![Perm::from_cycles(2, &[&[0, 1]]).unwrap()],
            2,
            16,
        )
        .unwrap();
        let sign = Homomorphism::from_fn(g.clone(), c2, |p| {
            let mut inversions = 0;
            for i in 0..3 {
                for j in i + 1..3 {
                    if p.apply(i) > p.apply(j) {
                        inversions += 1;
                    }
                }
            }
            if inversions % 2 == 0 {
                Perm::identity(2)
            } else {
                Perm::from_cycles(2, &[&[0, 1]]).unwrap()
            }
        })
        .unwrap();
        let k = sign.kernel();
        assert_eq!(k.order(), 3);
        assert!(k.is_normal());
    }

    #[test]
    fn normal_closure_trivial_and_full_seeds() {
        let g = s3();
        assert_eq!(g.trivial_subgroup().normal_closure().order(), 1);
        assert_eq!(g.full_subgroup().normal_closure().order(), 6);
    }

    #[test]
    fn normal_closure_of_transposition_is_whole_sym3() {
        // Oracle: brute-force closure of all conjugates of (0 1).
        let g = s3();
        let t = g.index_of(&Perm::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
        let seed = Subgroup::generated(g.clone(), &[t]);
        assert_eq!(seed.normal_closure().order(), 6);
    }

    #[test]
    fn commutator_subgroup_examples() {
        let g = s3();
        let full = g.full_subgroup();
        let triv = g.trivial_subgroup();
        assert!(full.commutator_with(&triv).is_trivial());
        // [S3, S3] = A3, computed over all 36 commutators then closed.
        let derived = full.commutator_with(&full);
        assert_eq!(derived.order(), 3);
        // abelian case
        let c4 = FiniteGroup::closure(
            vec![Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()],
            4,
            16,
        )
        .unwrap();
        let f = c4.full_subgroup();
        assert!(f.commutator_with(&f).is_trivial());
    }

    #[test]
    fn commutator_subgroup_is_symmetric() {
        let g = d4();
        let a = Subgroup::generated(
            g.clone(),
            &[g.index_of(&Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()).unwrap()],
        );
        let b = Subgroup::generated(
            g.clone(),
            &[g.index_of(&Perm::from_cycles(4, &[&[0, 2]]).unwrap()).unwrap()],
        );
        assert_eq!(a.commutator_with(&b).members(), b.commutator_with(&a).members());
    }

    #[test]
    fn intersect_examples() {
        let g = d4();
        let r = g.index_of(&Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()).unwrap();
        let a = Subgroup::generated(g.clone(), &[r]);
        assert_eq!(a.intersect(&a).members(), a.members());
        assert!(a.intersect(&g.trivial_subgroup()).is_trivial());
        // <(0123)> ∩ <(02)(13),(01)(23)> = <(02)(13)>, order 2 (element scan)
        let v = Subgroup::generated(
            g.clone(),
            &[
                g.index_of(&Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap()).unwrap(),
                g.index_of(&Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()).unwrap(),
            ],
        );
        let i = a.intersect(&v);
        assert_eq!(i.order(), 2);
        assert!(i.contains(g.index_of(&Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap()).unwrap()));
    }

    #[test]
    fn direct_product_orders_and_trivial_factor() {
        let g = s3();
        let t = FiniteGroup::trivial(1);
        let p = direct_product(&g, &t, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(p.group.order(), 6);
        assert!(is_isomorphic(&p.group, &g, 100_000).unwrap());

        let c3 = FiniteGroup::closure(
            vec![Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()],
            3,
            16,
        )
        .unwrap();
        let q = direct_product(&c3, &c3, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(q.group.order(), 9);
        assert!(q
            .group
            .elements()
            .iter()
            .all(|p| p.order() == 1 || p.order() == 3));
    }

    #[test]
    fn direct_product_injections_project_back() {
        let g = s3();
        let h = d4();
        let p = direct_product(&g, &h, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(p.group.order(), 48);
        for e in 0..g.order() as u32 {
            let lifted = p.inj_left.apply_idx(e);
            assert_eq!(p.proj_left.apply_idx(lifted), e);
            assert_eq!(p.proj_right.apply_idx(lifted), h.identity_idx());
        }
    }

    #[test]
    fn isomorphism_reflexive() {
        let g = s3();
        assert!(is_isomorphic(&g, &g, 100_000).unwrap());
    }

    #[test]
    fn c4_not_isomorphic_to_klein() {
        let c4 = FiniteGroup::closure(
            vec![Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()],
            4,
            16,
        )
        .unwrap();
        let klein = FiniteGroup::closure(
            vec![
                Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ],
            4,
            16,
        )
        .unwrap();
        assert!(!is_isomorphic(&c4, &klein, 100_000).unwrap());
    }

    #[test]
    fn sym3_presentations_are_isomorphic() {
        // Both generate the order-6 nonabelian group; exhaustive
        // generator-image search finds the isomorphism.
        let a = s3();
        let b = FiniteGroup::closure(
            vec![
                Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
                Perm::from_cycles(3, &[&[0, 1]]).unwrap(),
            ],
            3,
            16,
        )
        .unwrap();
        assert!(is_isomorphic(&a, &b, 100_000).unwrap());
    }

    #[test]
    fn kernel_is_normal_for_every_projection() {
        let g = s3();
        let h = d4();
        let p = direct_product(&g, &h, DEFAULT_ORDER_CAP).unwrap();
        assert!(p.proj_left.kernel().is_normal());
        assert!(p.proj_right.kernel().is_normal());
    }

    #[test]
    fn normal_closure_idempotent_and_monotone() {
        let g = d4();
        let r2 = g
            .index_of(&Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap())
            .unwrap();
        let s = g.index_of(&Perm::from_cycles(4, &[&[0, 2]]).unwrap()).unwrap();
        let small = Subgroup::generated(g.clone(), &[r2]);
        let big = Subgroup::generated(g.clone(), &[r2, s]);
        let nc_small = small.normal_closure();
        let nc_big = big.normal_closure();
        assert_eq!(nc_small.normal_closure().members(), nc_small.members());
        assert!(nc_small.members().iter().all(|&m| nc_big.contains(m)));
    }

    #[test]
    fn subgroup_into_group_preserves_order() {
        let g = d4();
        let r = g.index_of(&Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()).unwrap();
        let a = Subgroup::generated(g.clone(), &[r]);
        assert_eq!(a.into_group().order(), 4);
    }
}
