//! Truncated bisimplicial groups: a grid of levels with commuting horizontal
//! and vertical simplicial structures, the Moore bicomplex with exact-kernel
//! cells, degenerate subgroups, kernel intersections, and the order
//! factorization that shadows the semidirect decomposition.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fingroup::{direct_product, FiniteGroup, Homomorphism, Perm, Subgroup};
use crate::report::VerificationReport;
use crate::simplicial::SimplicialGroupTrunc;
use crate::surjections::enumerate_s;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Horizontal,
    Vertical,
}

impl Direction {
    pub fn letter(self) -> char {
        match self {
            Direction::Horizontal => 'h',
            Direction::Vertical => 'v',
        }
    }
}

/// A bisimplicial group truncated at `(max_p, max_q)`.
pub struct BisimplicialGroupTrunc {
    max_p: usize,
    max_q: usize,
    levels: Vec<Vec<Arc<FiniteGroup>>>,
    /// `dh[p][q][i]`: `d_i^h : G_{p,q} -> G_{p-1,q}` for `p >= 1`, `0 <= i <= p`.
    dh: Vec<Vec<Vec<Homomorphism>>>,
    /// `sh[p][q][i]`: `s_i^h : G_{p,q} -> G_{p+1,q}` for `p < max_p`, `0 <= i <= p`.
    sh: Vec<Vec<Vec<Homomorphism>>>,
    dv: Vec<Vec<Vec<Homomorphism>>>,
    sv: Vec<Vec<Vec<Homomorphism>>>,
}

/// A Moore bicomplex cell: the exact-kernel subgroup and its two boundaries.
pub struct MooreBicomplexCell {
    pub level: (usize, usize),
    pub subgroup: Subgroup,
    /// `d_n^h` restricted to the cell (present when n >= 1).
    pub boundary_h: Option<Homomorphism>,
    /// `d_m^v` restricted to the cell (present when m >= 1).
    pub boundary_v: Option<Homomorphism>,
}

impl BisimplicialGroupTrunc {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        max_p: usize,
        max_q: usize,
        levels: Vec<Vec<Arc<FiniteGroup>>>,
        dh: Vec<Vec<Vec<Homomorphism>>>,
        sh: Vec<Vec<Vec<Homomorphism>>>,
        dv: Vec<Vec<Vec<Homomorphism>>>,
        sv: Vec<Vec<Vec<Homomorphism>>>,
    ) -> Result<Self> {
        let g = BisimplicialGroupTrunc {
            max_p,
            max_q,
            levels,
            dh,
            sh,
            dv,
            sv,
        };
        for p in 0..=max_p {
            for q in 0..=max_q {
                g.level((p, q))?;
                if p >= 1 {
                    for i in 0..=p {
                        g.face(Direction::Horizontal, (p, q), i)?;
                    }
                }
                if p < max_p {
                    for i in 0..=p {
                        g.degeneracy(Direction::Horizontal, (p, q), i)?;
                    }
                }
                if q >= 1 {
                    for j in 0..=q {
                        g.face(Direction::Vertical, (p, q), j)?;
                    }
                }
                if q < max_q {
                    for j in 0..=q {
                        g.degeneracy(Direction::Vertical, (p, q), j)?;
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn truncation(&self) -> (usize, usize) {
        (self.max_p, self.max_q)
    }

    pub fn level(&self, (p, q): (usize, usize)) -> Result<&Arc<FiniteGroup>> {
        self.levels
            .get(p)
            .and_then(|row| row.get(q))
            .ok_or(Error::TruncationExceeded((p, q)))
    }

    pub fn face(&self, dir: Direction, (p, q): (usize, usize), i: usize) -> Result<&Homomorphism> {
        let table = match dir {
            Direction::Horizontal => &self.dh,
            Direction::Vertical => &self.dv,
        };
        table
            .get(p)
            .and_then(|row| row.get(q))
            .and_then(|maps| maps.get(i))
            .ok_or(Error::IndexOutOfRange { index: i, level: (p, q) })
    }

    pub fn degeneracy(
        &self,
        dir: Direction,
        (p, q): (usize, usize),
        i: usize,
    ) -> Result<&Homomorphism> {
        let table = match dir {
            Direction::Horizontal => &self.sh,
            Direction::Vertical => &self.sv,
        };
        table
            .get(p)
            .and_then(|row| row.get(q))
            .and_then(|maps| maps.get(i))
            .ok_or(Error::IndexOutOfRange { index: i, level: (p, q) })
    }

    /// Exhaustive check: horizontal identities at each fixed q, vertical at
    /// each fixed p, and all horizontal/vertical commutations.
    pub fn verify(&self) -> VerificationReport {
        let mut report = VerificationReport::new("bisimplicial identities");
        for q in 0..=self.max_q {
            let row = self.row(q).expect("row within truncation");
            let mut sub = row.verify();
            for c in &mut sub.checks {
                c.name = format!("h[q={q}]: {}", c.name);
            }
            report.merge(sub);
        }
        for p in 0..=self.max_p {
            let col = self.column(p).expect("column within truncation");
            let mut sub = col.verify();
            for c in &mut sub.checks {
                c.name = format!("v[p={p}]: {}", c.name);
            }
            report.merge(sub);
        }
        self.verify_commutation(&mut report);
        report
    }

    fn verify_commutation(&self, report: &mut VerificationReport) {
        let sweep = |report: &mut VerificationReport,
                     name: String,
                     g: &Arc<FiniteGroup>,
                     lhs: &dyn Fn(u32) -> u32,
                     rhs: &dyn Fn(u32) -> u32| {
            for x in 0..g.order() as u32 {
                if lhs(x) != rhs(x) {
                    report.fail(&name, format!("{:?}", g.perm(x)));
                    return;
                }
            }
            report.pass(&name);
        };
        for p in 0..=self.max_p {
            for q in 0..=self.max_q {
                let g = &self.levels[p][q];
                // d^h d^v = d^v d^h
                if p >= 1 && q >= 1 {
                    for i in 0..=p {
                        for j in 0..=q {
                            let a = self.face(Direction::Horizontal, (p, q), i).unwrap();
                            let b = self.face(Direction::Vertical, (p - 1, q), j).unwrap();
                            let c = self.face(Direction::Vertical, (p, q), j).unwrap();
                            let d = self.face(Direction::Horizontal, (p, q - 1), i).unwrap();
                            sweep(
                                report,
                                format!("d{i}^h d{j}^v commute @ ({p},{q})"),
                                g,
                                &|x| b.apply_idx(a.apply_idx(x)),
                                &|x| d.apply_idx(c.apply_idx(x)),
                            );
                        }
                    }
                }
                // s^h s^v = s^v s^h
                if p < self.max_p && q < self.max_q {
                    for i in 0..=p {
                        for j in 0..=q {
                            let a = self.degeneracy(Direction::Horizontal, (p, q), i).unwrap();
                            let b = self.degeneracy(Direction::Vertical, (p + 1, q), j).unwrap();
                            let c = self.degeneracy(Direction::Vertical, (p, q), j).unwrap();
                            let d = self.degeneracy(Direction::Horizontal, (p, q + 1), i).unwrap();
                            sweep(
                                report,
                                format!("s{i}^h s{j}^v commute @ ({p},{q})"),
                                g,
                                &|x| b.apply_idx(a.apply_idx(x)),
                                &|x| d.apply_idx(c.apply_idx(x)),
                            );
                        }
                    }
                }
                // d^h s^v = s^v d^h
                if p >= 1 && q < self.max_q {
                    for i in 0..=p {
                        for j in 0..=q {
                            let a = self.face(Direction::Horizontal, (p, q), i).unwrap();
                            let b = self.degeneracy(Direction::Vertical, (p - 1, q), j).unwrap();
                            let c = self.degeneracy(Direction::Vertical, (p, q), j).unwrap();
                            let d = self.face(Direction::Horizontal, (p, q + 1), i).unwrap();
                            sweep(
                                report,
                                format!("s{j}^v d{i}^h commute @ ({p},{q})"),
                                g,
                                &|x| b.apply_idx(a.apply_idx(x)),
                                &|x| d.apply_idx(c.apply_idx(x)),
                            );
                        }
                    }
                }
                // s^h d^v = d^v s^h
                if p < self.max_p && q >= 1 {
                    for i in 0..=p {
                        for j in 0..=q {
                            let a = self.degeneracy(Direction::Horizontal, (p, q), i).unwrap();
                            let b = self.face(Direction::Vertical, (p + 1, q), j).unwrap();
                            let c = self.face(Direction::Vertical, (p, q), j).unwrap();
                            let d = self.degeneracy(Direction::Horizontal, (p, q - 1), i).unwrap();
                            sweep(
                                report,
                                format!("d{j}^v s{i}^h commute @ ({p},{q})"),
                                g,
                                &|x| b.apply_idx(a.apply_idx(x)),
                                &|x| d.apply_idx(c.apply_idx(x)),
                            );
                        }
                    }
                }
            }
        }
    }

    /// The horizontal simplicial group at fixed q.
    pub fn row(&self, q: usize) -> Result<SimplicialGroupTrunc> {
        if q > self.max_q {
            return Err(Error::TruncationExceeded((0, q)));
        }
        let levels: Vec<Arc<FiniteGroup>> = (0..=self.max_p).map(|p| self.levels[p][q].clone()).collect();
        let mut faces = vec![Vec::new()];
        for p in 1..=self.max_p {
            faces.push(self.dh[p][q].clone());
        }
        let degeneracies: Vec<Vec<Homomorphism>> =
            (0..self.max_p).map(|p| self.sh[p][q].clone()).collect();
        SimplicialGroupTrunc::new(levels, faces, degeneracies)
    }

    /// The vertical simplicial group at fixed p.
    pub fn column(&self, p: usize) -> Result<SimplicialGroupTrunc> {
        if p > self.max_p {
            return Err(Error::TruncationExceeded((p, 0)));
        }
        let levels: Vec<Arc<FiniteGroup>> = (0..=self.max_q).map(|q| self.levels[p][q].clone()).collect();
        let mut faces = vec![Vec::new()];
        for q in 1..=self.max_q {
            faces.push(self.dv[p][q].clone());
        }
        let degeneracies: Vec<Vec<Homomorphism>> =
            (0..self.max_q).map(|q| self.sv[p][q].clone()).collect();
        SimplicialGroupTrunc::new(levels, faces, degeneracies)
    }

    /// Exact-kernel Moore cell `NG_{n,m} = (∩_{i<n} ker d_i^h) ∩ (∩_{j<m} ker d_j^v)`.
    pub fn moore_subgroup(&self, (n, m): (usize, usize)) -> Result<Subgroup> {
        let level = self.level((n, m))?;
        let mut cell = level.full_subgroup();
        for i in 0..n {
            cell = cell.intersect(&self.face(Direction::Horizontal, (n, m), i)?.kernel());
        }
        for j in 0..m {
            cell = cell.intersect(&self.face(Direction::Vertical, (n, m), j)?.kernel());
        }
        Ok(cell)
    }

    /// The full cell with restricted boundaries; boundary images are verified
    /// to land in the adjacent Moore cells.
    pub fn moore_cell(&self, (n, m): (usize, usize)) -> Result<MooreBicomplexCell> {
        let subgroup = self.moore_subgroup((n, m))?;
        let restrict = |d: &Homomorphism, target: &Subgroup| -> Result<Homomorphism> {
            for &x in subgroup.members() {
                if !target.contains(d.apply_idx(x)) {
                    return Err(Error::AxiomViolation {
                        check: format!("Moore boundary escapes the cell below ({n},{m})"),
                    });
                }
            }
            let dom = subgroup.into_group();
            let cod = target.into_group();
            Homomorphism::from_fn(dom, cod, |p| d.apply(p).clone())
        };
        let boundary_h = if n >= 1 {
            let target = self.moore_subgroup((n - 1, m))?;
            Some(restrict(self.face(Direction::Horizontal, (n, m), n)?, &target)?)
        } else {
            None
        };
        let boundary_v = if m >= 1 {
            let target = self.moore_subgroup((n, m - 1))?;
            Some(restrict(self.face(Direction::Vertical, (n, m), m)?, &target)?)
        } else {
            None
        };
        Ok(MooreBicomplexCell {
            level: (n, m),
            subgroup,
            boundary_h,
            boundary_v,
        })
    }

    /// Subgroup of `G_{n,m}` generated by all degenerate elements.
    pub fn degenerate_subgroup(&self, (n, m): (usize, usize)) -> Result<Subgroup> {
        if n == 0 && m == 0 {
            return Err(Error::IndexOutOfRange { index: 0, level: (0, 0) });
        }
        let level = self.level((n, m))?;
        let mut gens: Vec<u32> = Vec::new();
        let mut push_image_gens = |s: &Homomorphism| {
            for g in s.domain().generators() {
                let img = s.apply(g);
                gens.push(level.index_of(img).expect("degeneracy image in level"));
            }
        };
        if n >= 1 {
            for i in 0..n {
                push_image_gens(self.degeneracy(Direction::Horizontal, (n - 1, m), i)?);
            }
        }
        if m >= 1 {
            for j in 0..m {
                push_image_gens(self.degeneracy(Direction::Vertical, (n, m - 1), j)?);
            }
        }
        Ok(Subgroup::generated(level.clone(), &gens))
    }

    /// `(∩_{i∈I} ker d_i) ∩ K_transverse` at a level, per the kernel
    /// decompositions used by the boundary-image inclusions. `indices` select
    /// faces in `dir`; the transverse factor intersects the kernels of all
    /// faces `0..transverse_count` in the other direction.
    pub fn kernel_intersection(
        &self,
        (p, q): (usize, usize),
        dir: Direction,
        indices: &[usize],
        transverse_count: usize,
    ) -> Result<Subgroup> {
        let level = self.level((p, q))?;
        let mut sub = level.full_subgroup();
        for &i in indices {
            sub = sub.intersect(&self.face(dir, (p, q), i)?.kernel());
        }
        let other = match dir {
            Direction::Horizontal => Direction::Vertical,
            Direction::Vertical => Direction::Horizontal,
        };
        for i in 0..transverse_count {
            sub = sub.intersect(&self.face(other, (p, q), i)?.kernel());
        }
        Ok(sub)
    }

    /// The order factorization as a cardinality law: at every level the group
    /// order factors as the product of Moore-cell orders over S(n) x S(m).
    pub fn order_factorization_check(&self) -> VerificationReport {
        let mut report = VerificationReport::new("order factorization");
        let mut cell_orders = vec![vec![0usize; self.max_q + 1]; self.max_p + 1];
        for p in 0..=self.max_p {
            for q in 0..=self.max_q {
                cell_orders[p][q] = self
                    .moore_subgroup((p, q))
                    .expect("cell within truncation")
                    .order();
            }
        }
        for n in 0..=self.max_p {
            for m in 0..=self.max_q {
                let mut product = 1usize;
                let mut factors = Vec::new();
                for s1 in enumerate_s(n) {
                    for s2 in enumerate_s(m) {
                        let f = cell_orders[s1.target()][s2.target()];
                        product *= f;
                        factors.push(f.to_string());
                    }
                }
                let actual = self.levels[n][m].order();
                let name = format!("|G({n},{m})| = {} = {}", actual, factors.join("*"));
                if product == actual {
                    report.pass(name);
                } else {
                    report.fail(name, format!("product gives {product}"));
                }
            }
        }
        report
    }
}

/// `G_{p,q} = a_p x b_q`, horizontal structure from `a`, vertical from `b`.
pub fn external_product(
    a: &SimplicialGroupTrunc,
    b: &SimplicialGroupTrunc,
    cap: usize,
) -> Result<BisimplicialGroupTrunc> {
    let max_p = a.max_level();
    let max_q = b.max_level();
    let mut levels: Vec<Vec<Arc<FiniteGroup>>> = Vec::new();
    let mut products = Vec::new();
    for p in 0..=max_p {
        let mut row = Vec::new();
        let mut prow = Vec::new();
        for q in 0..=max_q {
            let prod = direct_product(a.level(p)?, b.level(q)?, cap)?;
            row.push(prod.group.clone());
            prow.push(prod);
        }
        levels.push(row);
        products.push(prow);
    }
    // f x id and id x g via the stored injections/projections
    let pair_map = |from: &(usize, usize),
                    to: &(usize, usize),
                    f_a: Option<&Homomorphism>,
                    f_b: Option<&Homomorphism>|
     -> Result<Homomorphism> {
        let src = &products[from.0][from.1];
        let dst = &products[to.0][to.1];
        let dom = src.group.clone();
        let cod = dst.group.clone();
        let src_pl = src.proj_left.clone();
        let src_pr = src.proj_right.clone();
        let dst_il = dst.inj_left.clone();
        let dst_ir = dst.inj_right.clone();
        let fa = f_a.cloned();
        let fb = f_b.cloned();
        Homomorphism::from_fn(dom, cod.clone(), move |x| {
            let xa = src_pl.apply(x);
            let xb = src_pr.apply(x);
            let ya = match &fa {
                Some(f) => f.apply(xa).clone(),
                None => xa.clone(),
            };
            let yb = match &fb {
                Some(f) => f.apply(xb).clone(),
                None => xb.clone(),
            };
            dst_il.apply(&ya).compose(dst_ir.apply(&yb))
        })
    };
    let mut dh: Vec<Vec<Vec<Homomorphism>>> = Vec::new();
    let mut sh: Vec<Vec<Vec<Homomorphism>>> = Vec::new();
    let mut dv: Vec<Vec<Vec<Homomorphism>>> = Vec::new();
    let mut sv: Vec<Vec<Vec<Homomorphism>>> = Vec::new();
    for p in 0..=max_p {
        let mut dh_row = Vec::new();
        let mut sh_row = Vec::new();
        let mut dv_row = Vec::new();
        let mut sv_row = Vec::new();
        for q in 0..=max_q {
            let mut dh_maps = Vec::new();
            if p >= 1 {
                for i in 0..=p {
                    dh_maps.push(pair_map(&(p, q), &(p - 1, q), Some(a.face(p, i)?), None)?);
                }
            }
            let mut sh_maps = Vec::new();
            if p < max_p {
                for i in 0..=p {
                    sh_maps.push(pair_map(&(p, q), &(p + 1, q), Some(a.degeneracy(p, i)?), None)?);
                }
            }
            let mut dv_maps = Vec::new();
            if q >= 1 {
                for j in 0..=q {
                    dv_maps.push(pair_map(&(p, q), &(p, q - 1), None, Some(b.face(q, j)?))?);
                }
            }
            let mut sv_maps = Vec::new();
            if q < max_q {
                for j in 0..=q {
                    sv_maps.push(pair_map(&(p, q), &(p, q + 1), None, Some(b.degeneracy(q, j)?))?);
                }
            }
            dh_row.push(dh_maps);
            sh_row.push(sh_maps);
            dv_row.push(dv_maps);
            sv_row.push(sv_maps);
        }
        dh.push(dh_row);
        sh.push(sh_row);
        dv.push(dv_row);
        sv.push(sv_row);
    }
    BisimplicialGroupTrunc::new(max_p, max_q, levels, dh, sh, dv, sv)
}

/// Horizontal structure copied from `s`, constant (identity operators) in the
/// vertical direction.
pub fn from_horizontal(s: &SimplicialGroupTrunc, max_q: usize) -> Result<BisimplicialGroupTrunc> {
    let max_p = s.max_level();
    let mut levels = Vec::new();
    let mut dh = Vec::new();
    let mut sh = Vec::new();
    let mut dv = Vec::new();
    let mut sv = Vec::new();
    for p in 0..=max_p {
        let g = s.level(p)?.clone();
        levels.push(vec![g.clone(); max_q + 1]);
        let dh_maps = |_q: usize| -> Result<Vec<Homomorphism>> {
            if p >= 1 {
                (0..=p).map(|i| s.face(p, i).cloned()).collect()
            } else {
                Ok(Vec::new())
            }
        };
        let sh_maps = |_q: usize| -> Result<Vec<Homomorphism>> {
            if p < max_p {
                (0..=p).map(|i| s.degeneracy(p, i).cloned()).collect()
            } else {
                Ok(Vec::new())
            }
        };
        let mut dh_row = Vec::new();
        let mut sh_row = Vec::new();
        let mut dv_row = Vec::new();
        let mut sv_row = Vec::new();
        for q in 0..=max_q {
            dh_row.push(dh_maps(q)?);
            sh_row.push(sh_maps(q)?);
            dv_row.push(if q >= 1 {
                vec![Homomorphism::identity(g.clone()); q + 1]
            } else {
                Vec::new()
            });
            sv_row.push(if q < max_q {
                vec![Homomorphism::identity(g.clone()); q + 1]
            } else {
                Vec::new()
            });
        }
        dh.push(dh_row);
        sh.push(sh_row);
        dv.push(dv_row);
        sv.push(sv_row);
    }
    BisimplicialGroupTrunc::new(max_p, max_q, levels, dh, sh, dv, sv)
}

/// Vertical structure copied from `s`, constant horizontally.
pub fn from_vertical(s: &SimplicialGroupTrunc, max_p: usize) -> Result<BisimplicialGroupTrunc> {
    let max_q = s.max_level();
    let mut levels = Vec::new();
    let mut dh = Vec::new();
    let mut sh = Vec::new();
    let mut dv = Vec::new();
    let mut sv = Vec::new();
    for p in 0..=max_p {
        let mut lvl_row = Vec::new();
        let mut dh_row = Vec::new();
        let mut sh_row = Vec::new();
        let mut dv_row = Vec::new();
        let mut sv_row = Vec::new();
        for q in 0..=max_q {
            let g = s.level(q)?.clone();
            lvl_row.push(g.clone());
            dh_row.push(if p >= 1 {
                vec![Homomorphism::identity(g.clone()); p + 1]
            } else {
                Vec::new()
            });
            sh_row.push(if p < max_p {
                vec![Homomorphism::identity(g.clone()); p + 1]
            } else {
                Vec::new()
            });
            dv_row.push(if q >= 1 {
                (0..=q).map(|j| s.face(q, j).cloned()).collect::<Result<Vec<_>>>()?
            } else {
                Vec::new()
            });
            sv_row.push(if q < max_q {
                (0..=q)
                    .map(|j| s.degeneracy(q, j).cloned())
                    .collect::<Result<Vec<_>>>()?
            } else {
                Vec::new()
            });
        }
        levels.push(lvl_row);
        dh.push(dh_row);
        sh.push(sh_row);
        dv.push(dv_row);
        sv.push(sv_row);
    }
    BisimplicialGroupTrunc::new(max_p, max_q, levels, dh, sh, dv, sv)
}

/// Constant grid: one group everywhere, identity operators.
pub fn constant_grid(
    g: &Arc<FiniteGroup>,
    max_p: usize,
    max_q: usize,
) -> Result<BisimplicialGroupTrunc> {
    let s = crate::simplicial::constant_simplicial(g, max_p);
    from_horizontal(&s, max_q)
}

/// Canonical embedding of a permutation into a direct-product block, used by
/// fixtures and tests.
pub fn pairs_in_product(a_deg: usize, total: usize, pa: &Perm, pb: &Perm) -> Perm {
    pa.shift(0, total).compose(&pb.shift(a_deg, total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::DEFAULT_ORDER_CAP;
    use crate::simplicial::{constant_simplicial, nerve, CrossedModuleData};

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

    fn nerve_c3_s3(levels: usize) -> SimplicialGroupTrunc {
        let m = FiniteGroup::closure(vec![Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()], 3, 64).unwrap();
        let x = CrossedModuleData::from_inclusion(&m, &s3()).unwrap();
        nerve(&x, levels, DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn constant_grid_verifies_and_has_trivial_moore_off_origin() {
        let g = constant_grid(&s3(), 2, 2).unwrap();
        assert!(g.verify().passed());
        assert_eq!(g.moore_subgroup((0, 0)).unwrap().order(), 6);
        for p in 0..=2 {
            for q in 0..=2 {
                if (p, q) != (0, 0) {
                    assert!(g.moore_subgroup((p, q)).unwrap().is_trivial());
                }
            }
        }
    }

    #[test]
    fn external_product_verifies() {
        let a = nerve_c3_s3(2);
        let b = nerve_c3_s3(2);
        let g = external_product(&a, &b, DEFAULT_ORDER_CAP).unwrap();
        let report = g.verify();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn external_product_moore_cells() {
        let a = nerve_c3_s3(2);
        let b = nerve_c3_s3(2);
        let g = external_product(&a, &b, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.moore_subgroup((0, 0)).unwrap().order(), 36);
        assert_eq!(g.moore_subgroup((1, 0)).unwrap().order(), 3);
        assert_eq!(g.moore_subgroup((0, 1)).unwrap().order(), 3);
        assert!(g.moore_subgroup((1, 1)).unwrap().is_trivial());
        for p in 1..=2 {
            for q in 1..=2 {
                assert!(g.moore_subgroup((p, q)).unwrap().is_trivial());
            }
        }
    }

    #[test]
    fn external_product_order_factorization() {
        let a = nerve_c3_s3(2);
        let b = nerve_c3_s3(2);
        let g = external_product(&a, &b, DEFAULT_ORDER_CAP).unwrap();
        let report = g.order_factorization_check();
        assert!(report.passed(), "{report}");
        // 324 = 1 * 3 * 3 * 36 at level (1,1)
        assert_eq!(g.level((1, 1)).unwrap().order(), 324);
    }

    #[test]
    fn from_horizontal_row_is_the_original() {
        let s = nerve_c3_s3(2);
        let g = from_horizontal(&s, 2).unwrap();
        assert!(g.verify().passed());
        let row = g.row(0).unwrap();
        for n in 0..=2 {
            assert!(Arc::ptr_eq(row.level(n).unwrap(), s.level(n).unwrap()));
        }
        // Moore bicomplex concentrated on one axis
        for p in 0..=2 {
            for q in 1..=2 {
                assert!(g.moore_subgroup((p, q)).unwrap().is_trivial());
            }
        }
    }

    #[test]
    fn degenerate_subgroup_of_constant_grid_is_whole_level() {
        let g = constant_grid(&s3(), 2, 2).unwrap();
        assert_eq!(g.degenerate_subgroup((1, 0)).unwrap().order(), 6);
        assert_eq!(g.degenerate_subgroup((1, 1)).unwrap().order(), 6);
    }

    #[test]
    fn degenerate_subgroup_rejects_origin() {
        let g = constant_grid(&s3(), 1, 1).unwrap();
        assert!(g.degenerate_subgroup((0, 0)).is_err());
    }

    #[test]
    fn moore_cell_boundaries_land_in_cells() {
        let a = nerve_c3_s3(2);
        let b = nerve_c3_s3(2);
        let g = external_product(&a, &b, DEFAULT_ORDER_CAP).unwrap();
        for p in 0..=2 {
            for q in 0..=2 {
                let cell = g.moore_cell((p, q)).unwrap();
                if p >= 1 {
                    assert!(cell.boundary_h.is_some());
                }
                if q >= 1 {
                    assert!(cell.boundary_v.is_some());
                }
            }
        }
    }

    #[test]
    fn boundaries_square_to_zero_and_commute() {
        let a = nerve_c3_s3(2);
        let b = nerve_c3_s3(2);
        let g = external_product(&a, &b, DEFAULT_ORDER_CAP).unwrap();
        for n in 2..=2 {
            for m in 0..=2 {
                // ∂^h ∂^h trivial on cells
                let cell = g.moore_subgroup((n, m)).unwrap();
                let d1 = g.face(Direction::Horizontal, (n, m), n).unwrap();
                let d2 = g.face(Direction::Horizontal, (n - 1, m), n - 1).unwrap();
                for &x in cell.members() {
                    assert_eq!(
                        d2.apply_idx(d1.apply_idx(x)),
                        g.level((n - 2, m)).unwrap().identity_idx()
                    );
                }
            }
        }
        // ∂^h ∂^v = ∂^v ∂^h on cells where both exist
        for n in 1..=2 {
            for m in 1..=2 {
                let cell = g.moore_subgroup((n, m)).unwrap();
                let dh = g.face(Direction::Horizontal, (n, m), n).unwrap();
                let dv_after = g.face(Direction::Vertical, (n - 1, m), m).unwrap();
                let dv = g.face(Direction::Vertical, (n, m), m).unwrap();
                let dh_after = g.face(Direction::Horizontal, (n, m - 1), n).unwrap();
                for &x in cell.members() {
                    assert_eq!(
                        dv_after.apply_idx(dh.apply_idx(x)),
                        dh_after.apply_idx(dv.apply_idx(x))
                    );
                }
            }
        }
    }

    #[test]
    fn kernel_intersection_empty_index_set_gives_transverse_kernel() {
        let a = nerve_c3_s3(2);
        let b = nerve_c3_s3(2);
        let g = external_product(&a, &b, DEFAULT_ORDER_CAP).unwrap();
        // I = {} at (1,1) with full transverse: the horizontal kernel
        let k = g
            .kernel_intersection((1, 1), Direction::Vertical, &[], 1)
            .unwrap();
        let kh = g.face(Direction::Horizontal, (1, 1), 0).unwrap().kernel();
        assert_eq!(k.members(), kh.members());
        // full index set with full transverse = the Moore cell
        let cell = g
            .kernel_intersection((1, 1), Direction::Vertical, &[0], 1)
            .unwrap();
        assert_eq!(cell.members(), g.moore_subgroup((1, 1)).unwrap().members());
    }

    #[test]
    fn constant_simplicial_embeds_as_constant_grid() {
        let g = constant_grid(&s3(), 2, 2).unwrap();
        let report = g.order_factorization_check();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn corrupting_an_operator_is_flagged_with_identity_name() {
        let s = constant_simplicial(&s3(), 1);
        let mut g = from_horizontal(&s, 1).unwrap();
        // break commutation: make one vertical face a non-identity automorphism
        let lvl = g.levels[1][1].clone();
        let flip = Homomorphism::from_fn(lvl.clone(), lvl.clone(), |p| {
            // conjugate by (0 1): an automorphism of Sym(3), not the identity map
            let t = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
            t.compose(p).compose(&t.inverse())
        })
        .unwrap();
        g.dv[1][1][0] = flip;
        let report = g.verify();
        assert!(!report.passed());
        let fail = report.first_failure().unwrap();
        assert!(fail.witness.is_some());
        assert!(
            fail.name.contains("commute") || fail.name.contains('d'),
            "unexpected identity name {}",
            fail.name
        );
    }
}
