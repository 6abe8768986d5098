//! The grids and algebraic structures the verification suites run on: a
//! constant grid on the order-6 nonabelian group, the external product of two
//! copies of the nerve of (C3 -> S3), and a hand-built grid whose Moore
//! bicomplex carries the dihedral normal-pair crossed square.

use std::sync::Arc;

use crate::bisimplicial::{constant_grid, external_product, BisimplicialGroupTrunc};
use crate::crossed::{inclusion_crossed_square, CrossedSquareData};
use crate::error::Result;
use crate::fingroup::{FiniteGroup, Homomorphism, Perm, Subgroup, DEFAULT_ORDER_CAP};
use crate::simplicial::{nerve, CrossedModuleData, SimplicialGroupTrunc};

/// Order cap for the dihedral grid; its top level has 32768 elements.
pub const D4_GRID_CAP: usize = 40_000;

pub fn sym3() -> Arc<FiniteGroup> {
    FiniteGroup::closure(
        vec![
            Perm::from_cycles(3, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(3, &[&[1, 2]]).unwrap(),
        ],
        3,
        64,
    )
    .expect("Sym(3)")
}

pub fn c3_in_sym3() -> Arc<FiniteGroup> {
    FiniteGroup::closure(vec![Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()], 3, 64).expect("C3")
}

pub fn dihedral4() -> Arc<FiniteGroup> {
    FiniteGroup::closure(
        vec![
            Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
            Perm::from_cycles(4, &[&[1, 3]]).unwrap(),
        ],
        4,
        64,
    )
    .expect("D4")
}

/// The conjugation crossed module C3 -> Sym(3).
pub fn c3_s3_crossed_module() -> CrossedModuleData {
    CrossedModuleData::from_inclusion(&c3_in_sym3(), &sym3()).expect("inclusion crossed module")
}

/// Nerve of C3 -> Sym(3), levels 0..=max_level.
pub fn nerve_c3_s3(max_level: usize) -> SimplicialGroupTrunc {
    nerve(&c3_s3_crossed_module(), max_level, DEFAULT_ORDER_CAP).expect("nerve fixture")
}

/// Constant grid on the order-6 nonabelian group, truncation (2,2).
pub fn constant_s3_grid() -> BisimplicialGroupTrunc {
    constant_grid(&sym3(), 2, 2).expect("constant grid")
}

/// External product of the nerve of (C3 -> S3) with itself, truncation (2,2).
pub fn external_product_grid() -> BisimplicialGroupTrunc {
    let a = nerve_c3_s3(2);
    let b = nerve_c3_s3(2);
    external_product(&a, &b, DEFAULT_ORDER_CAP).expect("product grid")
}

/// The normal-pair crossed square in D4: L = <r^2>, M = <r>, N = <r^2, s>,
/// P = D4, inclusions, conjugation actions, h the commutator.
pub fn d4_normal_pair_square() -> CrossedSquareData {
    let p = dihedral4();
    let r = p
        .index_of(&Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap())
        .unwrap();
    let r2 = p
        .index_of(&Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap())
        .unwrap();
    let s = p.index_of(&Perm::from_cycles(4, &[&[1, 3]]).unwrap()).unwrap();
    let m = Subgroup::generated(p.clone(), &[r]);
    let n = Subgroup::generated(p.clone(), &[r2, s]);
    inclusion_crossed_square(&p, &m, &n).expect("normal pair square")
}

/// The hand-built dihedral grid: level (p,q) consists of the
/// `(p+1) x (q+1)` matrices over D4 whose horizontal neighbor ratios lie in
/// N = <r^2, s> and vertical ones in M = <r>. Faces delete a matrix index,
/// degeneracies duplicate one. Its Moore bicomplex is
/// `P <- N, M <- L` at the corner and trivial beyond (1,1), realizing the
/// normal-pair crossed square with h the commutator.
pub fn d4_normal_pair_grid() -> Result<BisimplicialGroupTrunc> {
    let p = dihedral4();
    let r = Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
    let r2 = Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
    let s = Perm::from_cycles(4, &[&[1, 3]]).unwrap();
    let diag_gens = vec![r.clone(), s.clone()];
    let n_gens = vec![r2.clone(), s.clone()]; // horizontal ratio subgroup
    let m_gens = vec![r.clone()]; // vertical ratio subgroup
    let l_gens = vec![r2.clone()]; // corner subgroup M ∩ N
    let max_p = 2usize;
    let max_q = 2usize;
    let deg_p = p.degree();

    // a level element as a matrix of D4 permutations, indexed [i][j]
    type Matrix = Vec<Vec<Perm>>;
    let ident = |rows: usize, cols: usize| -> Matrix {
        vec![vec![Perm::identity(deg_p); cols]; rows]
    };
    let to_perm = |mat: &Matrix| -> Perm {
        let rows = mat.len();
        let cols = mat[0].len();
        let total = deg_p * rows * cols;
        let mut images = Vec::with_capacity(total);
        for (i, row) in mat.iter().enumerate().take(rows) {
            for (j, entry) in row.iter().enumerate().take(cols) {
                let off = deg_p * (i * cols + j);
                for pt in 0..deg_p {
                    images.push(off + entry.apply(pt));
                }
            }
        }
        Perm::new(images).expect("block permutation")
    };

    // generator matrices of level (p, q), in a fixed order
    let level_gen_matrices = |pp: usize, qq: usize| -> Vec<Matrix> {
        let rows = pp + 1;
        let cols = qq + 1;
        let mut gens: Vec<Matrix> = Vec::new();
        for g in &diag_gens {
            gens.push(vec![vec![g.clone(); cols]; rows]);
        }
        for i in 1..=pp {
            for g in &n_gens {
                let mut mat = ident(rows, cols);
                for row in mat.iter_mut().skip(i) {
                    for entry in row.iter_mut() {
                        *entry = g.clone();
                    }
                }
                gens.push(mat);
            }
        }
        for j in 1..=qq {
            for g in &m_gens {
                let mut mat = ident(rows, cols);
                for row in mat.iter_mut() {
                    for entry in row.iter_mut().skip(j) {
                        *entry = g.clone();
                    }
                }
                gens.push(mat);
            }
        }
        for i in 1..=pp {
            for j in 1..=qq {
                for g in &l_gens {
                    let mut mat = ident(rows, cols);
                    for row in mat.iter_mut().skip(i) {
                        for entry in row.iter_mut().skip(j) {
                            *entry = g.clone();
                        }
                    }
                    gens.push(mat);
                }
            }
        }
        gens
    };

    let delete_h = |mat: &Matrix, k: usize| -> Matrix {
        mat.iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, row)| row.clone())
            .collect()
    };
    let dup_h = |mat: &Matrix, k: usize| -> Matrix {
        let mut out = Vec::with_capacity(mat.len() + 1);
        for (i, row) in mat.iter().enumerate() {
            out.push(row.clone());
            if i == k {
                out.push(row.clone());
            }
        }
        out
    };
    let delete_v = |mat: &Matrix, k: usize| -> Matrix {
        mat.iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect()
    };
    let dup_v = |mat: &Matrix, k: usize| -> Matrix {
        mat.iter()
            .map(|row| {
                let mut out = Vec::with_capacity(row.len() + 1);
                for (j, e) in row.iter().enumerate() {
                    out.push(e.clone());
                    if j == k {
                        out.push(e.clone());
                    }
                }
                out
            })
            .collect()
    };

    let mut levels: Vec<Vec<Arc<FiniteGroup>>> = Vec::new();
    let mut gen_mats: Vec<Vec<Vec<Matrix>>> = Vec::new();
    for pp in 0..=max_p {
        let mut row = Vec::new();
        let mut mats_row = Vec::new();
        for qq in 0..=max_q {
            let mats = level_gen_matrices(pp, qq);
            let perms: Vec<Perm> = mats.iter().map(&to_perm).collect();
            let degree = deg_p * (pp + 1) * (qq + 1);
            row.push(FiniteGroup::closure(perms, degree, D4_GRID_CAP)?);
            mats_row.push(mats);
        }
        levels.push(row);
        gen_mats.push(mats_row);
    }

    let map_from = |pp: usize,
                    qq: usize,
                    target: &Arc<FiniteGroup>,
                    f: &dyn Fn(&Matrix) -> Matrix|
     -> Result<Homomorphism> {
        let imgs: Vec<Perm> = gen_mats[pp][qq].iter().map(|m| to_perm(&f(m))).collect();
        Homomorphism::from_gen_images(levels[pp][qq].clone(), target.clone(), &imgs)
    };

    let mut dh = Vec::new();
    let mut sh = Vec::new();
    let mut dv = Vec::new();
    let mut sv = Vec::new();
    for pp in 0..=max_p {
        let mut dh_row = Vec::new();
        let mut sh_row = Vec::new();
        let mut dv_row = Vec::new();
        let mut sv_row = Vec::new();
        for qq in 0..=max_q {
            let mut dh_maps = Vec::new();
            if pp >= 1 {
                for k in 0..=pp {
                    dh_maps.push(map_from(pp, qq, &levels[pp - 1][qq], &|m| delete_h(m, k))?);
                }
            }
            let mut sh_maps = Vec::new();
            if pp < max_p {
                for k in 0..=pp {
                    sh_maps.push(map_from(pp, qq, &levels[pp + 1][qq], &|m| dup_h(m, k))?);
                }
            }
            let mut dv_maps = Vec::new();
            if qq >= 1 {
                for k in 0..=qq {
                    dv_maps.push(map_from(pp, qq, &levels[pp][qq - 1], &|m| delete_v(m, k))?);
                }
            }
            let mut sv_maps = Vec::new();
            if qq < max_q {
                for k in 0..=qq {
                    sv_maps.push(map_from(pp, qq, &levels[pp][qq + 1], &|m| dup_v(m, k))?);
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
