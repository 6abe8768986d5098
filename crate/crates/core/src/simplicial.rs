//! Truncated simplicial groups: storage, exhaustive identity verification,
//! Moore complex extraction, and the nerve construction realizing a crossed
//! module as a simplicial group with vanishing Moore complex above degree 1.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fingroup::{FiniteGroup, Homomorphism, Perm, Subgroup};
use crate::report::VerificationReport;

/// A simplicial group truncated at `max_level`.
///
/// `faces[n][i]` is `d_i : G_n -> G_{n-1}` (stored for `1 <= n <= N`),
/// `degeneracies[n][j]` is `s_j : G_n -> G_{n+1}` (stored for `0 <= n < N`).
pub struct SimplicialGroupTrunc {
    levels: Vec<Arc<FiniteGroup>>,
    faces: Vec<Vec<Homomorphism>>,
    degeneracies: Vec<Vec<Homomorphism>>,
}

impl SimplicialGroupTrunc {
    pub fn new(
        levels: Vec<Arc<FiniteGroup>>,
        faces: Vec<Vec<Homomorphism>>,
        degeneracies: Vec<Vec<Homomorphism>>,
    ) -> Result<Self> {
        let n = levels.len();
        if faces.len() != n || degeneracies.len() != n.saturating_sub(1) {
            return Err(Error::Parse(
                "face/degeneracy tables do not match the level count".into(),
            ));
        }
        for (lvl, fs) in faces.iter().enumerate() {
            let expect = if lvl == 0 { 0 } else { lvl + 1 };
            if fs.len() != expect {
                return Err(Error::Parse(format!(
                    "level {lvl} must carry {expect} faces, found {}",
                    fs.len()
                )));
            }
        }
        for (lvl, ss) in degeneracies.iter().enumerate() {
            if ss.len() != lvl + 1 {
                return Err(Error::Parse(format!(
                    "level {lvl} must carry {} degeneracies, found {}",
                    lvl + 1,
                    ss.len()
                )));
            }
        }
        Ok(SimplicialGroupTrunc {
            levels,
            faces,
            degeneracies,
        })
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> Result<&Arc<FiniteGroup>> {
        self.levels.get(n).ok_or(Error::TruncationExceeded((n, 0)))
    }

    pub fn face(&self, n: usize, i: usize) -> Result<&Homomorphism> {
        self.faces
            .get(n)
            .and_then(|fs| fs.get(i))
            .ok_or(Error::IndexOutOfRange { index: i, level: (n, 0) })
    }

    pub fn degeneracy(&self, n: usize, j: usize) -> Result<&Homomorphism> {
        self.degeneracies
            .get(n)
            .and_then(|ss| ss.get(j))
            .ok_or(Error::IndexOutOfRange { index: j, level: (n, 0) })
    }

    /// Moore cell `NG_n = ker d_0 ∩ .. ∩ ker d_{n-1}`.
    pub fn moore(&self, n: usize) -> Result<Subgroup> {
        let level = self.level(n)?;
        let mut cell = level.full_subgroup();
        for i in 0..n {
            cell = cell.intersect(&self.face(n, i)?.kernel());
        }
        Ok(cell)
    }

    /// The boundary `∂_n = d_n` restricted to the Moore cell, returned as a
    /// map between the re-enumerated cell groups; its image is verified to
    /// land in `NG_{n-1}`.
    pub fn moore_boundary(&self, n: usize) -> Result<Homomorphism> {
        let cell = self.moore(n)?;
        let lower = self.moore(n - 1)?;
        let d = self.face(n, n)?;
        for &m in cell.members() {
            if !lower.contains(d.apply_idx(m)) {
                return Err(Error::AxiomViolation {
                    check: format!("boundary image escapes the Moore cell at level {n}"),
                });
            }
        }
        let dom = cell.into_group();
        let cod = lower.into_group();
        Homomorphism::from_fn(dom, cod, |p| d.apply(p).clone())
    }

    /// Exhaustive check of every simplicial identity instance on elements.
    pub fn verify(&self) -> VerificationReport {
        let mut report = VerificationReport::new("simplicial identities");
        let top = self.max_level();
        // d_i d_j = d_{j-1} d_i  (i < j), on G_n for n >= 2
        for n in 2..=top {
            for j in 1..=n {
                for i in 0..j {
                    let lhs = |x: u32| {
                        self.faces[n - 1][i].apply_idx(self.faces[n][j].apply_idx(x))
                    };
                    let rhs = |x: u32| {
                        self.faces[n - 1][j - 1].apply_idx(self.faces[n][i].apply_idx(x))
                    };
                    self.sweep(&mut report, n, &format!("d{i} d{j} = d{} d{i} @ {n}", j - 1), lhs, rhs);
                }
            }
        }
        // s_i s_j = s_{j+1} s_i  (i <= j), G_n -> G_{n+2}
        for n in 0..top.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = |x: u32| {
                        self.degeneracies[n + 1][i].apply_idx(self.degeneracies[n][j].apply_idx(x))
                    };
                    let rhs = |x: u32| {
                        self.degeneracies[n + 1][j + 1].apply_idx(self.degeneracies[n][i].apply_idx(x))
                    };
                    self.sweep(&mut report, n, &format!("s{i} s{j} = s{} s{i} @ {n}", j + 1), lhs, rhs);
                }
            }
        }
        // d_i s_j identities, G_n -> G_n or G_n -> .. for n < top
        for n in 0..top {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let name;
                    let lhs = |x: u32| {
                        self.faces[n + 1][i].apply_idx(self.degeneracies[n][j].apply_idx(x))
                    };
                    if i == j || i == j + 1 {
                        name = format!("d{i} s{j} = id @ {n}");
                        self.sweep(&mut report, n, &name, lhs, |x| x);
                    } else if i < j {
                        name = format!("d{i} s{j} = s{} d{i} @ {n}", j - 1);
                        let rhs = |x: u32| {
                            self.degeneracies[n - 1][j - 1].apply_idx(self.faces[n][i].apply_idx(x))
                        };
                        self.sweep(&mut report, n, &name, lhs, rhs);
                    } else {
                        name = format!("d{i} s{j} = s{j} d{} @ {n}", i - 1);
                        let rhs = |x: u32| {
                            self.degeneracies[n - 1][j].apply_idx(self.faces[n][i - 1].apply_idx(x))
                        };
                        self.sweep(&mut report, n, &name, lhs, rhs);
                    }
                }
            }
        }
        report
    }

    fn sweep(
        &self,
        report: &mut VerificationReport,
        level: usize,
        name: &str,
        lhs: impl Fn(u32) -> u32,
        rhs: impl Fn(u32) -> u32,
    ) {
        let g = &self.levels[level];
        for x in 0..g.order() as u32 {
            if lhs(x) != rhs(x) {
                report.fail(name, format!("{:?}", g.perm(x)));
                return;
            }
        }
        report.pass(name);
    }
}

/// Crossed module data: a boundary `M -> P` with a P-action on M stored as a
/// full automorphism table (`action[p][m]` = index of the image of `m`).
pub struct CrossedModuleData {
    pub m: Arc<FiniteGroup>,
    pub p: Arc<FiniteGroup>,
    pub boundary: Homomorphism,
    pub action: Vec<Vec<u32>>,
}

impl CrossedModuleData {
    pub fn act(&self, p: u32, m: u32) -> u32 {
        self.action[p as usize][m as usize]
    }

    /// Conjugation-action crossed module for a subgroup inclusion `M <= P`
    /// (M normal in P for the axioms to hold).
    pub fn from_inclusion(m: &Arc<FiniteGroup>, p: &Arc<FiniteGroup>) -> Result<CrossedModuleData> {
        let boundary = Homomorphism::from_fn(m.clone(), p.clone(), |x| x.clone())?;
        let action = conjugation_action_table(p, m, |x| x.clone(), |y| y.clone())?;
        Ok(CrossedModuleData {
            m: m.clone(),
            p: p.clone(),
            boundary,
            action,
        })
    }
}

/// Build an action table for `p` acting on `m` by conjugation through
/// embeddings into a common ambient group: `act(a, x) = embed_p(a) embed_m(x) embed_p(a)^(-1)`
/// pulled back along `embed_m`.
pub fn conjugation_action_table(
    p: &Arc<FiniteGroup>,
    m: &Arc<FiniteGroup>,
    embed_m: impl Fn(&Perm) -> Perm,
    embed_p: impl Fn(&Perm) -> Perm,
) -> Result<Vec<Vec<u32>>> {
    let mut table = Vec::with_capacity(p.order());
    for a in p.elements() {
        let pa = embed_p(a);
        let pa_inv = pa.inverse();
        let mut row = Vec::with_capacity(m.order());
        for x in m.elements() {
            let conj = pa.compose(&embed_m(x)).compose(&pa_inv);
            // pull back: the conjugate must be the embedding of a unique m-element
            let back = m
                .elements()
                .iter()
                .position(|y| embed_m(y) == conj)
                .ok_or_else(|| Error::AxiomViolation {
                    check: "conjugation leaves the acted subgroup".into(),
                })?;
            row.push(back as u32);
        }
        table.push(row);
    }
    Ok(table)
}

/// Internal nerve of a crossed module: level n is `M^n ⋊ P` realized on
/// `n·|M| + deg(P)` points, with faces dropping/merging arrows and
/// degeneracies inserting identities. `NG_1 ≅ M`, `NG_0 = P`, `NG_n = 1` for
/// `n >= 2`, all verified downstream.
pub fn nerve(x: &CrossedModuleData, max_level: usize, cap: usize) -> Result<SimplicialGroupTrunc> {
    let m_ord = x.m.order();
    let p_deg = x.p.degree();
    if x.p.order() * m_ord.pow(max_level as u32) > cap {
        return Err(Error::OrderCapExceeded { cap });
    }

    // Permutation for the tuple (m_n,..,m_1, p): copy k of the M point set is
    // translated by m_k and twisted by the action of q_k = ∂(m_{k-1})..∂(m_1)p.
    let tuple_perm = |n: usize, ms: &[u32], p_idx: u32| -> Perm {
        let degree = n * m_ord + p_deg;
        let mut images: Vec<usize> = (0..degree).collect();
        let mut q = p_idx;
        for (k, &mk) in ms.iter().enumerate() {
            // slot k+1 in 1-based numbering, block offset k * m_ord
            let off = k * m_ord;
            for pt in 0..m_ord {
                let acted = x.act(q, pt as u32);
                let translated = x.m.mul(mk, acted);
                images[off + pt] = off + translated as usize;
            }
            q = x.p.mul(x.boundary.apply_idx(mk), q);
        }
        let pp = x.p.perm(p_idx);
        for pt in 0..p_deg {
            images[n * m_ord + pt] = n * m_ord + pp.apply(pt);
        }
        Perm::new(images).expect("tuple action is a permutation")
    };

    let slot = |n: usize, k: usize, m_idx: u32| -> Perm {
        let mut ms = vec![x.m.identity_idx(); n];
        ms[k - 1] = m_idx;
        tuple_perm(n, &ms, x.p.identity_idx())
    };
    let base = |n: usize, p_idx: u32| -> Perm {
        tuple_perm(n, &vec![x.m.identity_idx(); n], p_idx)
    };

    // Generators per level: one per M-generator per slot, then P's generators.
    let mut levels: Vec<Arc<FiniteGroup>> = Vec::new();
    let mut gen_tags: Vec<Vec<GenTag>> = Vec::new(); // what each generator is
    for n in 0..=max_level {
        let mut gens = Vec::new();
        let mut tags = Vec::new();
        for k in 1..=n {
            for g in x.m.generators() {
                let gi = x.m.index_of(g).unwrap();
                gens.push(slot(n, k, gi));
                tags.push(GenTag::M { slot: k, elt: gi });
            }
        }
        for g in x.p.generators() {
            let gi = x.p.index_of(g).unwrap();
            gens.push(base(n, gi));
            tags.push(GenTag::P { elt: gi });
        }
        let lvl = FiniteGroup::closure(gens, n * m_ord + p_deg, cap)?;
        levels.push(lvl);
        gen_tags.push(tags);
    }

    // Face d_i at level n (reversed-orientation internal nerve):
    //   d_0 drops slot n; d_n folds slot 1 into the base via ∂;
    //   0 < i < n merges slots n-i and n-i+1.
    let face_of_tag = |n: usize, i: usize, tag: &GenTag| -> Perm {
        match *tag {
            GenTag::P { elt } => base(n - 1, elt),
            GenTag::M { slot: k, elt } => {
                if i == 0 {
                    if k == n {
                        base(n - 1, x.p.identity_idx())
                    } else {
                        slot(n - 1, k, elt)
                    }
                } else if i == n {
                    if k == 1 {
                        base(n - 1, x.boundary.apply_idx(elt))
                    } else {
                        slot(n - 1, k - 1, elt)
                    }
                } else {
                    let merge_low = n - i; // slots n-i and n-i+1 merge
                    if k < merge_low {
                        slot(n - 1, k, elt)
                    } else if k == merge_low || k == merge_low + 1 {
                        slot(n - 1, merge_low, elt)
                    } else {
                        slot(n - 1, k - 1, elt)
                    }
                }
            }
        }
    };
    // Degeneracy s_j at level n inserts an identity arrow so that slots
    // > n-j shift up by one.
    let degen_of_tag = |n: usize, j: usize, tag: &GenTag| -> Perm {
        match *tag {
            GenTag::P { elt } => base(n + 1, elt),
            GenTag::M { slot: k, elt } => {
                if k >= n - j + 1 {
                    slot(n + 1, k + 1, elt)
                } else {
                    slot(n + 1, k, elt)
                }
            }
        }
    };

    let mut faces: Vec<Vec<Homomorphism>> = vec![Vec::new()];
    for n in 1..=max_level {
        let mut fs = Vec::new();
        for i in 0..=n {
            let imgs: Vec<Perm> = gen_tags[n].iter().map(|t| face_of_tag(n, i, t)).collect();
            fs.push(Homomorphism::from_gen_images(
                levels[n].clone(),
                levels[n - 1].clone(),
                &imgs,
            )?);
        }
        faces.push(fs);
    }
    let mut degeneracies: Vec<Vec<Homomorphism>> = Vec::new();
    for n in 0..max_level {
        let mut ss = Vec::new();
        for j in 0..=n {
            let imgs: Vec<Perm> = gen_tags[n].iter().map(|t| degen_of_tag(n, j, t)).collect();
            ss.push(Homomorphism::from_gen_images(
                levels[n].clone(),
                levels[n + 1].clone(),
                &imgs,
            )?);
        }
        degeneracies.push(ss);
    }

    SimplicialGroupTrunc::new(levels, faces, degeneracies)
}

enum GenTag {
    M { slot: usize, elt: u32 },
    P { elt: u32 },
}

/// All levels equal to `g`, every operator the identity.
pub fn constant_simplicial(g: &Arc<FiniteGroup>, max_level: usize) -> SimplicialGroupTrunc {
    let levels: Vec<Arc<FiniteGroup>> = (0..=max_level).map(|_| g.clone()).collect();
    let mut faces = vec![Vec::new()];
    for n in 1..=max_level {
        faces.push((0..=n).map(|_| Homomorphism::identity(g.clone())).collect());
    }
    let degeneracies = (0..max_level)
        .map(|n| (0..=n).map(|_| Homomorphism::identity(g.clone())).collect())
        .collect();
    SimplicialGroupTrunc::new(levels, faces, degeneracies).expect("constant structure is well formed")
}

/// Exhaustive CM1/CM2 and action-law check for crossed module data.
pub fn check_crossed_module(x: &CrossedModuleData) -> VerificationReport {
    let mut report = VerificationReport::new("crossed module axioms");
    // action laws: each act(p) an automorphism, act(pq) = act(p)act(q), act(1) = id
    let mut law_ok = true;
    'laws: for p in 0..x.p.order() as u32 {
        let row = &x.action[p as usize];
        let mut seen = vec![false; x.m.order()];
        for &img in row {
            if seen[img as usize] {
                report.fail("action: act(p) bijective", format!("p={:?}", x.p.perm(p)));
                law_ok = false;
                break 'laws;
            }
            seen[img as usize] = true;
        }
        for a in 0..x.m.order() as u32 {
            for b in 0..x.m.order() as u32 {
                if x.act(p, x.m.mul(a, b)) != x.m.mul(x.act(p, a), x.act(p, b)) {
                    report.fail(
                        "action: act(p) multiplicative",
                        format!("p={:?} a={:?} b={:?}", x.p.perm(p), x.m.perm(a), x.m.perm(b)),
                    );
                    law_ok = false;
                    break 'laws;
                }
            }
        }
    }
    if law_ok {
        report.pass("action: each act(p) is an automorphism");
    }
    let mut comp_ok = true;
    'comp: for p in 0..x.p.order() as u32 {
        for q in 0..x.p.order() as u32 {
            for a in 0..x.m.order() as u32 {
                if x.act(x.p.mul(p, q), a) != x.act(p, x.act(q, a)) {
                    report.fail(
                        "action: act(pq) = act(p)act(q)",
                        format!("p={:?} q={:?} a={:?}", x.p.perm(p), x.p.perm(q), x.m.perm(a)),
                    );
                    comp_ok = false;
                    break 'comp;
                }
            }
        }
    }
    if comp_ok {
        report.pass("action: act(pq) = act(p)act(q), act(1) = id");
    }
    // CM1: ∂(^p x) = p ∂(x) p^{-1}
    let mut cm1_ok = true;
    'cm1: for p in 0..x.p.order() as u32 {
        for a in 0..x.m.order() as u32 {
            let lhs = x.boundary.apply_idx(x.act(p, a));
            let rhs = x.p.conj(x.boundary.apply_idx(a), p);
            if lhs != rhs {
                report.fail(
                    "CM1: boundary is equivariant",
                    format!("p={:?} x={:?}", x.p.perm(p), x.m.perm(a)),
                );
                cm1_ok = false;
                break 'cm1;
            }
        }
    }
    if cm1_ok {
        report.pass("CM1: boundary is equivariant");
    }
    // CM2: ^{∂x} y = x y x^{-1}
    let mut cm2_ok = true;
    'cm2: for a in 0..x.m.order() as u32 {
        for b in 0..x.m.order() as u32 {
            if x.act(x.boundary.apply_idx(a), b) != x.m.conj(b, a) {
                report.fail(
                    "CM2: Peiffer identity",
                    format!("x={:?} y={:?}", x.m.perm(a), x.m.perm(b)),
                );
                cm2_ok = false;
                break 'cm2;
            }
        }
    }
    if cm2_ok {
        report.pass("CM2: Peiffer identity");
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{is_isomorphic, DEFAULT_ORDER_CAP};

    fn s3() -> Arc<FiniteGroup> {
        FiniteGroup::closure(
            vec![
                Perm::from_cycles(3, &[&[0, 1]]).unwrap(),
                Perm::from_cycles(3, &[&[1, 2]]).unwrap(),
            ],
            3,
            64,
        )
        .unwrap()
    }

    fn c3_in_s3() -> Arc<FiniteGroup> {
        FiniteGroup::closure(vec![Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()], 3, 64).unwrap()
    }

    pub(crate) fn c3_to_s3() -> CrossedModuleData {
        CrossedModuleData::from_inclusion(&c3_in_s3(), &s3()).unwrap()
    }

    #[test]
    fn constant_simplicial_passes_and_has_trivial_moore() {
        let sg = constant_simplicial(&s3(), 3);
        assert!(sg.verify().passed());
        assert_eq!(sg.moore(0).unwrap().order(), 6);
        for n in 1..=3 {
            assert!(sg.moore(n).unwrap().is_trivial());
        }
    }

    #[test]
    fn crossed_module_c3_s3_passes() {
        let x = c3_to_s3();
        assert!(check_crossed_module(&x).passed());
    }

    #[test]
    fn trivial_m_crossed_module_passes() {
        let x = CrossedModuleData::from_inclusion(&FiniteGroup::trivial(3), &s3()).unwrap();
        assert!(check_crossed_module(&x).passed());
    }

    #[test]
    fn trivial_action_fails_cm2() {
        // nonabelian M so that x y x^{-1} differs from y somewhere
        let g = s3();
        let mut x = CrossedModuleData::from_inclusion(&g, &g).unwrap();
        x.action = vec![(0..x.m.order() as u32).collect(); x.p.order()];
        let report = check_crossed_module(&x);
        assert!(!report.passed());
        let cm2 = report
            .failures()
            .find(|c| c.name.starts_with("CM2"))
            .expect("CM2 must fail with the trivial action");
        assert!(cm2.witness.is_some());
    }

    #[test]
    fn nerve_of_c3_s3_level_orders() {
        let x = c3_to_s3();
        let sg = nerve(&x, 3, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(sg.level(0).unwrap().order(), 6);
        assert_eq!(sg.level(1).unwrap().order(), 18);
        assert_eq!(sg.level(2).unwrap().order(), 54);
        assert_eq!(sg.level(3).unwrap().order(), 162);
    }

    #[test]
    fn nerve_satisfies_simplicial_identities() {
        let x = c3_to_s3();
        let sg = nerve(&x, 3, DEFAULT_ORDER_CAP).unwrap();
        let report = sg.verify();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn nerve_moore_complex_shape() {
        let x = c3_to_s3();
        let sg = nerve(&x, 3, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(sg.moore(0).unwrap().order(), 6);
        let ng1 = sg.moore(1).unwrap();
        assert_eq!(ng1.order(), 3);
        assert!(sg.moore(2).unwrap().is_trivial());
        assert!(sg.moore(3).unwrap().is_trivial());
        assert!(is_isomorphic(&ng1.into_group(), &x.m, 100_000).unwrap());
    }

    #[test]
    fn nerve_of_trivial_crossed_module_is_constant() {
        let x = CrossedModuleData::from_inclusion(&FiniteGroup::trivial(3), &s3()).unwrap();
        let sg = nerve(&x, 2, DEFAULT_ORDER_CAP).unwrap();
        for n in 0..=2 {
            assert_eq!(sg.level(n).unwrap().order(), 6);
        }
        assert!(sg.verify().passed());
    }

    #[test]
    fn nerve_moore_boundary_matches_inclusion() {
        let x = c3_to_s3();
        let sg = nerve(&x, 2, DEFAULT_ORDER_CAP).unwrap();
        let d = sg.moore_boundary(1).unwrap();
        // boundary of the nerve's NG_1 is injective with image of order 3
        assert!(d.is_injective());
        assert_eq!(d.image().order(), 3);
    }

    #[test]
    fn moore_complex_is_a_complex() {
        let x = c3_to_s3();
        let sg = nerve(&x, 3, DEFAULT_ORDER_CAP).unwrap();
        for n in 2..=3 {
            let upper = sg.moore(n).unwrap();
            let lower = sg.moore(n - 1).unwrap();
            let d_hi = sg.face(n, n).unwrap();
            let d_lo = sg.face(n - 1, n - 1).unwrap();
            for &m in upper.members() {
                assert!(lower.contains(d_hi.apply_idx(m)));
                assert_eq!(
                    d_lo.apply_idx(d_hi.apply_idx(m)),
                    sg.level(n - 2).unwrap().identity_idx()
                );
            }
        }
    }

    #[test]
    fn degeneracies_injective_faces_surjective_on_nerve() {
        let x = c3_to_s3();
        let sg = nerve(&x, 2, DEFAULT_ORDER_CAP).unwrap();
        for n in 0..2 {
            for j in 0..=n {
                assert!(sg.degeneracy(n, j).unwrap().is_injective());
            }
        }
        for n in 1..=2 {
            for i in 0..=n {
                assert!(sg.face(n, i).unwrap().is_surjective());
            }
        }
    }

    #[test]
    fn verify_flags_a_corrupted_face() {
        let x = c3_to_s3();
        let sg = nerve(&x, 2, DEFAULT_ORDER_CAP).unwrap();
        // replace d_0 at level 1 with the constant-to-identity map (a valid
        // homomorphism) and expect a named identity failure with a witness
        let levels: Vec<_> = (0..=2).map(|n| sg.level(n).unwrap().clone()).collect();
        let broken = Homomorphism::from_fn(levels[1].clone(), levels[0].clone(), |p| {
            Perm::identity(p.degree().min(levels[0].degree()).max(levels[0].degree()))
        })
        .unwrap();
        let mut faces: Vec<Vec<Homomorphism>> = vec![Vec::new()];
        faces.push(vec![broken, sg.face(1, 1).unwrap().clone()]);
        faces.push((0..=2).map(|i| sg.face(2, i).unwrap().clone()).collect());
        let degeneracies: Vec<Vec<Homomorphism>> = (0..2)
            .map(|n| (0..=n).map(|j| sg.degeneracy(n, j).unwrap().clone()).collect())
            .collect();
        let mutant = SimplicialGroupTrunc::new(levels, faces, degeneracies).unwrap();
        let report = mutant.verify();
        assert!(!report.passed());
        for fail in report.failures() {
            assert!(fail.witness.is_some(), "FAIL entries carry witnesses");
        }
        assert!(
            report.failures().any(|c| c.name.contains("d0")),
            "an identity involving the corrupted d0 is flagged"
        );
    }
}
