//! Representations of hemistrict Lie 2-algebras: left/right actions plus an
//! action homotopy on a two-term complex, their morphisms, minimal models,
//! semidirect products, and pullbacks along compatible morphisms.

use crate::error::Error;
use crate::graded::{basis_tuples, homotopy_coboundary, Deg, MultiMap, TwoTermComplex};
use crate::hemistrict::{check_hemistrict, HemistrictLie2, Morphism2};
use crate::leibniz::{LeibnizAlgebra, LeibnizModule};
use crate::linalg::{Mat, Rat};
use crate::report::CheckReport;
use num_traits::{One, Zero};

/// Action data of a representation, stored blockwise. The right action is
/// kept in the slot order `(module element, algebra element)`; the operator
/// normal form `r_x v = (-1)^{|x||v|} r(v, x)` is applied inside the
/// checkers, never in storage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation2 {
    pub v: TwoTermComplex,
    /// L^0 (x) V^0 -> V^0
    pub l00: MultiMap,
    /// L^0 (x) V^-1 -> V^-1
    pub l0m: MultiMap,
    /// L^-1 (x) V^0 -> V^-1
    pub lm0: MultiMap,
    /// V^0 (x) L^0 -> V^0
    pub r00: MultiMap,
    /// V^-1 (x) L^0 -> V^-1
    pub rm0: MultiMap,
    /// V^0 (x) L^-1 -> V^-1
    pub r0m: MultiMap,
    /// L^0 (x) V^0 -> V^-1
    pub hv: MultiMap,
}

fn unit(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = Rat::one();
    v
}

fn sub_assign(a: &mut [Rat], b: &[Rat]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x = x.clone() - y;
    }
}

fn add_assign(a: &mut [Rat], b: &[Rat]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x = x.clone() + y;
    }
}

impl Representation2 {
    pub fn zero_shaped(l: &HemistrictLie2, v: TwoTermComplex) -> Self {
        let (lz, lm) = (l.dim(Deg::Z), l.dim(Deg::M1));
        let (vz, vm) = (v.dim_0, v.dim_m1);
        Representation2 {
            l00: MultiMap::zero(vec![Deg::Z, Deg::Z], vec![lz, vz], 0, vz),
            l0m: MultiMap::zero(vec![Deg::Z, Deg::M1], vec![lz, vm], -1, vm),
            lm0: MultiMap::zero(vec![Deg::M1, Deg::Z], vec![lm, vz], -1, vm),
            r00: MultiMap::zero(vec![Deg::Z, Deg::Z], vec![vz, lz], 0, vz),
            rm0: MultiMap::zero(vec![Deg::M1, Deg::Z], vec![vm, lz], -1, vm),
            r0m: MultiMap::zero(vec![Deg::Z, Deg::M1], vec![vz, lm], -1, vm),
            hv: MultiMap::zero(vec![Deg::Z, Deg::Z], vec![lz, vz], -1, vm),
            v,
        }
    }

    /// The trivial representation on the given complex.
    pub fn trivial(l: &HemistrictLie2, v: TwoTermComplex) -> Self {
        Self::zero_shaped(l, v)
    }

    /// The adjoint representation: actions are the bracket blocks, the
    /// action homotopy is the alternator.
    pub fn adjoint(l: &HemistrictLie2) -> Self {
        let mut out = Self::zero_shaped(l, l.complex.clone());
        out.l00 = l.c00.clone();
        out.l0m = l.c0m.clone();
        out.lm0 = l.cm0.clone();
        out.r00 = l.c00.clone();
        out.rm0 = l.cm0.clone();
        out.r0m = l.c0m.clone();
        out.hv = l.h2.clone();
        // the slots of the action homotopy live in different spaces
        out.hv.symmetric_slots = Vec::new();
        out
    }

    pub fn l_vec(&self, xd: Deg, x: &[Rat], vd: Deg, v: &[Rat]) -> Vec<Rat> {
        let block = match (xd, vd) {
            (Deg::Z, Deg::Z) => &self.l00,
            (Deg::Z, Deg::M1) => &self.l0m,
            (Deg::M1, Deg::Z) => &self.lm0,
            (Deg::M1, Deg::M1) => return Vec::new(),
        };
        block.evaluate(&[x.to_vec(), v.to_vec()]).expect("left action shapes")
    }

    pub fn r_vec(&self, vd: Deg, v: &[Rat], xd: Deg, x: &[Rat]) -> Vec<Rat> {
        let block = match (vd, xd) {
            (Deg::Z, Deg::Z) => &self.r00,
            (Deg::M1, Deg::Z) => &self.rm0,
            (Deg::Z, Deg::M1) => &self.r0m,
            (Deg::M1, Deg::M1) => return Vec::new(),
        };
        block.evaluate(&[v.to_vec(), x.to_vec()]).expect("right action shapes")
    }

    pub fn hv_vec(&self, x: &[Rat], v: &[Rat]) -> Vec<Rat> {
        self.hv.evaluate(&[x.to_vec(), v.to_vec()]).expect("action homotopy shapes")
    }

    /// True iff the action homotopy vanishes.
    pub fn is_symmetric(&self) -> bool {
        self.hv.is_zero()
    }

    /// True iff the degree -1 part of the algebra acts by zero on `V^0`.
    pub fn degree_m1_acts_trivially(&self) -> bool {
        self.lm0.is_zero()
    }

    /// Blockwise direct sum over the same algebra.
    pub fn direct_sum(&self, other: &Representation2, l: &HemistrictLie2) -> Representation2 {
        let v = self.v.direct_sum(&other.v);
        let mut out = Representation2::zero_shaped(l, v);
        let (az, am) = (self.v.dim_0, self.v.dim_m1);
        let copy2 = |dst: &mut MultiMap, a: &MultiMap, b: &MultiMap, slot: usize, offset_out: usize| {
            // slot = which argument slot is the module one
            for t in basis_tuples(&a.arg_dims) {
                for o in 0..a.out_dim {
                    dst.set_entry(&t, o, a.entry(&t, o).clone());
                }
            }
            for t in basis_tuples(&b.arg_dims) {
                let mut shifted = t.clone();
                shifted[slot] += if slot == 0 { if b.arg_degrees[0] == Deg::Z { az } else { am } } else if b.arg_degrees[1] == Deg::Z { az } else { am };
                for o in 0..b.out_dim {
                    dst.set_entry(&shifted, offset_out + o, b.entry(&t, o).clone());
                }
            }
        };
        copy2(&mut out.l00, &self.l00, &other.l00, 1, az);
        copy2(&mut out.l0m, &self.l0m, &other.l0m, 1, am);
        copy2(&mut out.lm0, &self.lm0, &other.lm0, 1, am);
        copy2(&mut out.r00, &self.r00, &other.r00, 0, az);
        copy2(&mut out.rm0, &self.rm0, &other.rm0, 0, am);
        copy2(&mut out.r0m, &self.r0m, &other.r0m, 0, am);
        copy2(&mut out.hv, &self.hv, &other.hv, 1, am);
        out
    }
}

/// All defining equations of a representation on basis tuples.
pub fn check_representation(v: &Representation2, l: &HemistrictLie2) -> CheckReport {
    let mut report = CheckReport::new();
    let lz = l.dim(Deg::Z);
    let lm = l.dim(Deg::M1);
    let (vz, vm) = (v.v.dim_0, v.v.dim_m1);
    let dl = &l.complex.d;
    let dv = &v.v.d;

    // left action is a cochain map
    for t in basis_tuples(&[lz, vm]) {
        let mut residual = dv.mul_vec(v.l0m.eval_basis(&t));
        sub_assign(&mut residual, &v.l_vec(Deg::Z, &unit(lz, t[0]), Deg::Z, &dv.col(t[1])));
        report.push_residual("action-chain-map", &t, residual);
    }
    for t in basis_tuples(&[lm, vz]) {
        let mut residual = dv.mul_vec(v.lm0.eval_basis(&t));
        sub_assign(&mut residual, &v.l_vec(Deg::Z, &dl.col(t[0]), Deg::Z, &unit(vz, t[1])));
        report.push_residual("action-chain-map", &t, residual);
    }
    for t in basis_tuples(&[lm, vm]) {
        let mut residual = v.l_vec(Deg::Z, &dl.col(t[0]), Deg::M1, &unit(vm, t[1]));
        sub_assign(&mut residual, &v.l_vec(Deg::M1, &unit(lm, t[0]), Deg::Z, &dv.col(t[1])));
        report.push_residual("action-chain-map", &t, residual);
    }

    // right action is a cochain map
    for t in basis_tuples(&[vm, lz]) {
        let mut residual = dv.mul_vec(v.rm0.eval_basis(&t));
        sub_assign(&mut residual, &v.r_vec(Deg::Z, &dv.col(t[0]), Deg::Z, &unit(lz, t[1])));
        report.push_residual("right-action-chain-map", &t, residual);
    }
    for t in basis_tuples(&[vz, lm]) {
        let mut residual = dv.mul_vec(v.r0m.eval_basis(&t));
        sub_assign(&mut residual, &v.r_vec(Deg::Z, &unit(vz, t[0]), Deg::Z, &dl.col(t[1])));
        report.push_residual("right-action-chain-map", &t, residual);
    }
    for t in basis_tuples(&[vm, lm]) {
        let mut residual = v.r_vec(Deg::Z, &dv.col(t[0]), Deg::M1, &unit(lm, t[1]));
        sub_assign(&mut residual, &v.r_vec(Deg::M1, &unit(vm, t[0]), Deg::Z, &dl.col(t[1])));
        report.push_residual("right-action-chain-map", &t, residual);
    }

    // left representation law on the admissible degree blocks
    for t in basis_tuples(&[lz, lz, vz]) {
        let (x, y, w) = (unit(lz, t[0]), unit(lz, t[1]), unit(vz, t[2]));
        let mut residual = v.l_vec(Deg::Z, &x, Deg::Z, &v.l_vec(Deg::Z, &y, Deg::Z, &w));
        sub_assign(&mut residual, &v.l_vec(Deg::Z, &y, Deg::Z, &v.l_vec(Deg::Z, &x, Deg::Z, &w)));
        sub_assign(&mut residual, &v.l_vec(Deg::Z, &l.bracket_vec(Deg::Z, &x, Deg::Z, &y), Deg::Z, &w));
        report.push_residual("left-action", &t, residual);
    }
    for t in basis_tuples(&[lz, lz, vm]) {
        let (x, y, u) = (unit(lz, t[0]), unit(lz, t[1]), unit(vm, t[2]));
        let mut residual = v.l_vec(Deg::Z, &x, Deg::M1, &v.l_vec(Deg::Z, &y, Deg::M1, &u));
        sub_assign(&mut residual, &v.l_vec(Deg::Z, &y, Deg::M1, &v.l_vec(Deg::Z, &x, Deg::M1, &u)));
        sub_assign(&mut residual, &v.l_vec(Deg::Z, &l.bracket_vec(Deg::Z, &x, Deg::Z, &y), Deg::M1, &u));
        report.push_residual("left-action", &t, residual);
    }
    for t in basis_tuples(&[lz, lm, vz]) {
        let (x, a, w) = (unit(lz, t[0]), unit(lm, t[1]), unit(vz, t[2]));
        let mut residual = v.l_vec(Deg::Z, &x, Deg::M1, &v.l_vec(Deg::M1, &a, Deg::Z, &w));
        sub_assign(&mut residual, &v.l_vec(Deg::M1, &a, Deg::Z, &v.l_vec(Deg::Z, &x, Deg::Z, &w)));
        sub_assign(&mut residual, &v.l_vec(Deg::M1, &l.bracket_vec(Deg::Z, &x, Deg::M1, &a), Deg::Z, &w));
        report.push_residual("left-action", &t, residual);
    }
    for t in basis_tuples(&[lm, lz, vz]) {
        let (a, y, w) = (unit(lm, t[0]), unit(lz, t[1]), unit(vz, t[2]));
        let mut residual = v.l_vec(Deg::M1, &a, Deg::Z, &v.l_vec(Deg::Z, &y, Deg::Z, &w));
        sub_assign(&mut residual, &v.l_vec(Deg::Z, &y, Deg::M1, &v.l_vec(Deg::M1, &a, Deg::Z, &w)));
        sub_assign(&mut residual, &v.l_vec(Deg::M1, &l.bracket_vec(Deg::M1, &a, Deg::Z, &y), Deg::Z, &w));
        report.push_residual("left-action", &t, residual);
    }

    // left and right actions skew-commute up to the action homotopy
    for degs in [[Deg::Z, Deg::Z], [Deg::M1, Deg::Z], [Deg::Z, Deg::M1]] {
        let dhv = homotopy_coboundary(&v.hv, &[&l.complex, &v.v], &v.v, &degs)
            .expect("action homotopy block");
        for t in basis_tuples(&dhv.arg_dims.clone()) {
            let x = unit(l.complex.dim(degs[0]), t[0]);
            let w = unit(v.v.dim(degs[1]), t[1]);
            let mut residual = v.l_vec(degs[0], &x, degs[1], &w);
            add_assign(&mut residual, &v.r_vec(degs[1], &w, degs[0], &x));
            sub_assign(&mut residual, dhv.eval_basis(&t));
            report.push_residual("skew-commutation", &t, residual);
        }
    }

    // the three compatibility laws
    for t in basis_tuples(&[lz, lz, vz]) {
        let (x1, x2, w) = (t[0], t[1], t[2]);
        let h = v.hv.eval_basis(&[x1, w]);
        let residual = v.r_vec(Deg::M1, h, Deg::Z, &unit(lz, x2));
        report.push_residual("homotopy-right-action", &t, residual);
    }
    for t in basis_tuples(&[lz, lz, vz]) {
        let h = l.h2.eval_basis(&[t[0], t[1]]);
        let residual = v.l_vec(Deg::M1, h, Deg::Z, &unit(vz, t[2]));
        report.push_residual("alternator-action", &t, residual);
    }
    for t in basis_tuples(&[lz, lz, vz]) {
        let (x1, x2, w) = (unit(lz, t[0]), unit(lz, t[1]), unit(vz, t[2]));
        let mut residual = v.l_vec(Deg::Z, &x1, Deg::M1, &v.hv_vec(&x2, &w));
        sub_assign(&mut residual, &v.hv_vec(&l.bracket_vec(Deg::Z, &x1, Deg::Z, &x2), &w));
        sub_assign(&mut residual, &v.hv_vec(&x2, &v.l_vec(Deg::Z, &x1, Deg::Z, &w)));
        report.push_residual("homotopy-derivation", &t, residual);
    }

    report
}

/// The induced module laws of the underlying differential graded Leibniz
/// algebra, with the right action in operator normal form. These follow
/// from an empty [`check_representation`] report.
pub fn check_dg_leibniz_rep(v: &Representation2, l: &HemistrictLie2) -> CheckReport {
    let mut report = CheckReport::new();
    let lz = l.dim(Deg::Z);
    let lm = l.dim(Deg::M1);
    let (vz, vm) = (v.v.dim_0, v.v.dim_m1);
    // r_{[x,y]} = l_x r_y - (-1)^{|x||y|} r_y l_x
    for t in basis_tuples(&[lz, lz, vz]) {
        let (x, y, w) = (unit(lz, t[0]), unit(lz, t[1]), unit(vz, t[2]));
        let mut residual = v.r_vec(Deg::Z, &w, Deg::Z, &l.bracket_vec(Deg::Z, &x, Deg::Z, &y));
        sub_assign(&mut residual, &v.l_vec(Deg::Z, &x, Deg::Z, &v.r_vec(Deg::Z, &w, Deg::Z, &y)));
        add_assign(&mut residual, &v.r_vec(Deg::Z, &v.l_vec(Deg::Z, &x, Deg::Z, &w), Deg::Z, &y));
        report.push_residual("induced-right-action", &t, residual);
    }
    for t in basis_tuples(&[lz, lz, vm]) {
        let (x, y, u) = (unit(lz, t[0]), unit(lz, t[1]), unit(vm, t[2]));
        let mut residual = v.r_vec(Deg::M1, &u, Deg::Z, &l.bracket_vec(Deg::Z, &x, Deg::Z, &y));
        sub_assign(&mut residual, &v.l_vec(Deg::Z, &x, Deg::M1, &v.r_vec(Deg::M1, &u, Deg::Z, &y)));
        add_assign(&mut residual, &v.r_vec(Deg::M1, &v.l_vec(Deg::Z, &x, Deg::M1, &u), Deg::Z, &y));
        report.push_residual("induced-right-action", &t, residual);
    }
    for t in basis_tuples(&[lz, lm, vz]) {
        let (x, b, w) = (unit(lz, t[0]), unit(lm, t[1]), unit(vz, t[2]));
        let mut residual = v.r_vec(Deg::Z, &w, Deg::M1, &l.bracket_vec(Deg::Z, &x, Deg::M1, &b));
        sub_assign(&mut residual, &v.l_vec(Deg::Z, &x, Deg::M1, &v.r_vec(Deg::Z, &w, Deg::M1, &b)));
        add_assign(&mut residual, &v.r_vec(Deg::Z, &v.l_vec(Deg::Z, &x, Deg::Z, &w), Deg::M1, &b));
        report.push_residual("induced-right-action", &t, residual);
    }
    for t in basis_tuples(&[lm, lz, vz]) {
        let (a, y, w) = (unit(lm, t[0]), unit(lz, t[1]), unit(vz, t[2]));
        let mut residual = v.r_vec(Deg::Z, &w, Deg::M1, &l.bracket_vec(Deg::M1, &a, Deg::Z, &y));
        sub_assign(&mut residual, &v.l_vec(Deg::M1, &a, Deg::Z, &v.r_vec(Deg::Z, &w, Deg::Z, &y)));
        add_assign(&mut residual, &v.r_vec(Deg::M1, &v.l_vec(Deg::M1, &a, Deg::Z, &w), Deg::Z, &y));
        report.push_residual("induced-right-action", &t, residual);
    }
    // r_x l_y = -r_x r_y
    for t in basis_tuples(&[lz, lz, vz]) {
        let (x, y, w) = (unit(lz, t[0]), unit(lz, t[1]), unit(vz, t[2]));
        let mut residual = v.r_vec(Deg::Z, &v.l_vec(Deg::Z, &y, Deg::Z, &w), Deg::Z, &x);
        add_assign(&mut residual, &v.r_vec(Deg::Z, &v.r_vec(Deg::Z, &w, Deg::Z, &y), Deg::Z, &x));
        report.push_residual("induced-mixed-action", &t, residual);
    }
    for t in basis_tuples(&[lz, lz, vm]) {
        let (x, y, u) = (unit(lz, t[0]), unit(lz, t[1]), unit(vm, t[2]));
        let mut residual = v.r_vec(Deg::M1, &v.l_vec(Deg::Z, &y, Deg::M1, &u), Deg::Z, &x);
        add_assign(&mut residual, &v.r_vec(Deg::M1, &v.r_vec(Deg::M1, &u, Deg::Z, &y), Deg::Z, &x));
        report.push_residual("induced-mixed-action", &t, residual);
    }
    for t in basis_tuples(&[lz, lm, vz]) {
        let (x, b, w) = (unit(lz, t[0]), unit(lm, t[1]), unit(vz, t[2]));
        let mut residual = v.r_vec(Deg::M1, &v.l_vec(Deg::M1, &b, Deg::Z, &w), Deg::Z, &x);
        add_assign(&mut residual, &v.r_vec(Deg::M1, &v.r_vec(Deg::Z, &w, Deg::M1, &b), Deg::Z, &x));
        report.push_residual("induced-mixed-action", &t, residual);
    }
    for t in basis_tuples(&[lm, lz, vz]) {
        let (a, y, w) = (unit(lm, t[0]), unit(lz, t[1]), unit(vz, t[2]));
        let mut residual = v.r_vec(Deg::Z, &v.l_vec(Deg::Z, &y, Deg::Z, &w), Deg::M1, &a);
        add_assign(&mut residual, &v.r_vec(Deg::Z, &v.r_vec(Deg::Z, &w, Deg::Z, &y), Deg::M1, &a));
        report.push_residual("induced-mixed-action", &t, residual);
    }
    report
}

/// A morphism of representations over a fixed algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMorphism {
    pub phi1_m1: Mat,
    pub phi1_0: Mat,
    /// L^0 (x) V^0 -> V'^-1
    pub phil: MultiMap,
    /// V^0 (x) L^0 -> V'^-1
    pub phir: MultiMap,
}

impl RepMorphism {
    pub fn identity(l: &HemistrictLie2, v: &Representation2) -> Self {
        RepMorphism {
            phi1_m1: Mat::identity(v.v.dim_m1),
            phi1_0: Mat::identity(v.v.dim_0),
            phil: MultiMap::zero(vec![Deg::Z, Deg::Z], vec![l.dim(Deg::Z), v.v.dim_0], -1, v.v.dim_m1),
            phir: MultiMap::zero(vec![Deg::Z, Deg::Z], vec![v.v.dim_0, l.dim(Deg::Z)], -1, v.v.dim_m1),
        }
    }

    pub fn apply(&self, deg: Deg, v: &[Rat]) -> Vec<Rat> {
        match deg {
            Deg::M1 => self.phi1_m1.mul_vec(v),
            Deg::Z => self.phi1_0.mul_vec(v),
        }
    }
}

/// The three displayed morphism laws, blockwise on basis tuples.
pub fn check_rep_morphism(
    m: &RepMorphism,
    l: &HemistrictLie2,
    v: &Representation2,
    vp: &Representation2,
) -> CheckReport {
    let mut report = CheckReport::new();
    let lz = l.dim(Deg::Z);

    // underlying cochain map
    let lhs = vp.v.d.mul(&m.phi1_m1);
    let rhs = m.phi1_0.mul(&v.v.d);
    for c in 0..v.v.dim_m1 {
        let residual: Vec<Rat> = (0..vp.v.dim_0).map(|r| lhs.at(r, c) - rhs.at(r, c)).collect();
        report.push_residual("rep-morphism-chain-map", &[c], residual);
    }

    // left-action compatibility up to d(phi_l)
    for degs in [[Deg::Z, Deg::Z], [Deg::M1, Deg::Z], [Deg::Z, Deg::M1]] {
        let dphil = homotopy_coboundary(&m.phil, &[&l.complex, &v.v], &vp.v, &degs)
            .expect("left homotopy block");
        for t in basis_tuples(&dphil.arg_dims.clone()) {
            let x = unit(l.complex.dim(degs[0]), t[0]);
            let w = unit(v.v.dim(degs[1]), t[1]);
            let out_deg = if degs == [Deg::Z, Deg::Z] { Deg::Z } else { Deg::M1 };
            let mut residual = vp.l_vec(degs[0], &x, degs[1], &m.apply(degs[1], &w));
            sub_assign(&mut residual, &m.apply(out_deg, &v.l_vec(degs[0], &x, degs[1], &w)));
            sub_assign(&mut residual, dphil.eval_basis(&t));
            report.push_residual("rep-morphism-left", &t, residual);
        }
    }

    // right-action compatibility up to d(phi_r)
    for degs in [[Deg::Z, Deg::Z], [Deg::M1, Deg::Z], [Deg::Z, Deg::M1]] {
        let dphir = homotopy_coboundary(&m.phir, &[&v.v, &l.complex], &vp.v, &degs)
            .expect("right homotopy block");
        for t in basis_tuples(&dphir.arg_dims.clone()) {
            let w = unit(v.v.dim(degs[0]), t[0]);
            let x = unit(l.complex.dim(degs[1]), t[1]);
            let out_deg = if degs == [Deg::Z, Deg::Z] { Deg::Z } else { Deg::M1 };
            let mut residual = vp.r_vec(degs[0], &m.apply(degs[0], &w), degs[1], &x);
            sub_assign(&mut residual, &m.apply(out_deg, &v.r_vec(degs[0], &w, degs[1], &x)));
            sub_assign(&mut residual, dphir.eval_basis(&t));
            report.push_residual("rep-morphism-right", &t, residual);
        }
    }

    // homotopy compatibility
    for t in basis_tuples(&[lz, v.v.dim_0]) {
        let x = unit(lz, t[0]);
        let w = unit(v.v.dim_0, t[1]);
        let mut residual = vp.hv_vec(&x, &m.apply(Deg::Z, &w));
        sub_assign(&mut residual, &m.apply(Deg::M1, &v.hv_vec(&x, &w)));
        sub_assign(&mut residual, m.phil.eval_basis(&t));
        sub_assign(&mut residual, m.phir.eval_basis(&[t[1], t[0]]));
        report.push_residual("rep-morphism-homotopy", &t, residual);
    }

    report
}

/// `psi . phi`, with `phi : V -> V'` and `psi : V' -> V''`.
pub fn compose_rep_morphisms(
    psi: &RepMorphism,
    phi: &RepMorphism,
    l: &HemistrictLie2,
) -> Result<RepMorphism, Error> {
    if psi.phi1_0.cols() != phi.phi1_0.rows() || psi.phi1_m1.cols() != phi.phi1_m1.rows() {
        return Err(Error::ShapeMismatch("representation morphisms do not compose".into()));
    }
    let lz = l.dim(Deg::Z);
    let vz = phi.phi1_0.cols();
    let out_m1 = psi.phi1_m1.rows();
    let mut phil = MultiMap::zero(vec![Deg::Z, Deg::Z], vec![lz, vz], -1, out_m1);
    let mut phir = MultiMap::zero(vec![Deg::Z, Deg::Z], vec![vz, lz], -1, out_m1);
    for t in basis_tuples(&[lz, vz]) {
        let w = unit(vz, t[1]);
        let pw = phi.phi1_0.mul_vec(&w);
        let mut val = psi.phil.evaluate(&[unit(lz, t[0]), pw.clone()]).unwrap();
        add_assign(&mut val, &psi.phi1_m1.mul_vec(phi.phil.eval_basis(&t)));
        for (o, x) in val.into_iter().enumerate() {
            phil.set_entry(&t, o, x);
        }
        let mut val = psi.phir.evaluate(&[pw, unit(lz, t[0])]).unwrap();
        add_assign(&mut val, &psi.phi1_m1.mul_vec(phi.phir.eval_basis(&[t[1], t[0]])));
        for (o, x) in val.into_iter().enumerate() {
            phir.set_entry(&[t[1], t[0]], o, x);
        }
    }
    Ok(RepMorphism {
        phi1_m1: psi.phi1_m1.mul(&phi.phi1_m1),
        phi1_0: psi.phi1_0.mul(&phi.phi1_0),
        phil,
        phir,
    })
}

/// The symmetric model `(V, l, -l, 0)` together with the isomorphisms
/// `phi : V -> V_s` and `psi : V_s -> V`. Both are checked to satisfy the
/// morphism laws and to compose to identities on the nose.
pub fn minimal_model(
    v: &Representation2,
    l: &HemistrictLie2,
) -> (Representation2, RepMorphism, RepMorphism) {
    let lz = l.dim(Deg::Z);
    let lm = l.dim(Deg::M1);
    let (vz, vm) = (v.v.dim_0, v.v.dim_m1);
    let mut vs = v.clone();
    vs.hv = MultiMap::zero(vec![Deg::Z, Deg::Z], vec![lz, vz], -1, vm);
    vs.r00 = MultiMap::zero(vec![Deg::Z, Deg::Z], vec![vz, lz], 0, vz);
    vs.rm0 = MultiMap::zero(vec![Deg::M1, Deg::Z], vec![vm, lz], -1, vm);
    vs.r0m = MultiMap::zero(vec![Deg::Z, Deg::M1], vec![vz, lm], -1, vm);
    for t in basis_tuples(&[vz, lz]) {
        for o in 0..vz {
            vs.r00.set_entry(&t, o, -v.l00.entry(&[t[1], t[0]], o).clone());
        }
    }
    for t in basis_tuples(&[vm, lz]) {
        for o in 0..vm {
            vs.rm0.set_entry(&t, o, -v.l0m.entry(&[t[1], t[0]], o).clone());
        }
    }
    for t in basis_tuples(&[vz, lm]) {
        for o in 0..vm {
            vs.r0m.set_entry(&t, o, -v.lm0.entry(&[t[1], t[0]], o).clone());
        }
    }
    let mut phir_fwd = MultiMap::zero(vec![Deg::Z, Deg::Z], vec![vz, lz], -1, vm);
    let mut phir_bwd = phir_fwd.clone();
    for t in basis_tuples(&[vz, lz]) {
        for o in 0..vm {
            let h = v.hv.entry(&[t[1], t[0]], o);
            phir_fwd.set_entry(&t, o, -h.clone());
            phir_bwd.set_entry(&t, o, h.clone());
        }
    }
    let id = RepMorphism::identity(l, v);
    let phi = RepMorphism { phir: phir_fwd, ..id.clone() };
    let psi = RepMorphism { phir: phir_bwd, ..id };
    (vs, phi, psi)
}

/// The semidirect product algebra on `L (+) V`, built without validating
/// the representation first. The bracket is `[.,.] + l + r` and the
/// alternator is the symmetric extension of `h2 + h_v`.
pub fn semidirect_unchecked(l: &HemistrictLie2, v: &Representation2) -> HemistrictLie2 {
    let complex = l.complex.direct_sum(&v.v);
    let lz = l.dim(Deg::Z);
    let lm = l.dim(Deg::M1);
    let (vz, vm) = (v.v.dim_0, v.v.dim_m1);
    let mut out = HemistrictLie2::zero_shaped(complex);
    // degree (0,0) block
    for t in basis_tuples(&[lz + vz, lz + vz]) {
        let (i, j) = (t[0], t[1]);
        match (i < lz, j < lz) {
            (true, true) => {
                for (o, val) in l.c00.eval_basis(&[i, j]).iter().enumerate() {
                    out.c00.set_entry(&t, o, val.clone());
                }
            }
            (true, false) => {
                for (o, val) in v.l00.eval_basis(&[i, j - lz]).iter().enumerate() {
                    out.c00.set_entry(&t, lz + o, val.clone());
                }
            }
            (false, true) => {
                for (o, val) in v.r00.eval_basis(&[i - lz, j]).iter().enumerate() {
                    out.c00.set_entry(&t, lz + o, val.clone());
                }
            }
            (false, false) => {}
        }
    }
    // degree (0,-1) block
    for t in basis_tuples(&[lz + vz, lm + vm]) {
        let (i, j) = (t[0], t[1]);
        match (i < lz, j < lm) {
            (true, true) => {
                for (o, val) in l.c0m.eval_basis(&[i, j]).iter().enumerate() {
                    out.c0m.set_entry(&t, o, val.clone());
                }
            }
            (true, false) => {
                for (o, val) in v.l0m.eval_basis(&[i, j - lm]).iter().enumerate() {
                    out.c0m.set_entry(&t, lm + o, val.clone());
                }
            }
            (false, true) => {
                for (o, val) in v.r0m.eval_basis(&[i - lz, j]).iter().enumerate() {
                    out.c0m.set_entry(&t, lm + o, val.clone());
                }
            }
            (false, false) => {}
        }
    }
    // degree (-1,0) block
    for t in basis_tuples(&[lm + vm, lz + vz]) {
        let (i, j) = (t[0], t[1]);
        match (i < lm, j < lz) {
            (true, true) => {
                for (o, val) in l.cm0.eval_basis(&[i, j]).iter().enumerate() {
                    out.cm0.set_entry(&t, o, val.clone());
                }
            }
            (true, false) => {
                for (o, val) in v.lm0.eval_basis(&[i, j - lz]).iter().enumerate() {
                    out.cm0.set_entry(&t, lm + o, val.clone());
                }
            }
            (false, true) => {
                for (o, val) in v.rm0.eval_basis(&[i - lm, j]).iter().enumerate() {
                    out.cm0.set_entry(&t, lm + o, val.clone());
                }
            }
            (false, false) => {}
        }
    }
    // alternator: symmetric extension of h2 and h_v
    for t in basis_tuples(&[lz + vz, lz + vz]) {
        let (i, j) = (t[0], t[1]);
        match (i < lz, j < lz) {
            (true, true) => {
                for (o, val) in l.h2.eval_basis(&[i, j]).iter().enumerate() {
                    out.h2.set_entry(&t, o, val.clone());
                }
            }
            (true, false) => {
                for (o, val) in v.hv.eval_basis(&[i, j - lz]).iter().enumerate() {
                    out.h2.set_entry(&t, lm + o, val.clone());
                }
            }
            (false, true) => {
                for (o, val) in v.hv.eval_basis(&[j, i - lz]).iter().enumerate() {
                    out.h2.set_entry(&t, lm + o, val.clone());
                }
            }
            (false, false) => {}
        }
    }
    out.h2.symmetric_slots = vec![vec![0, 1]];
    out
}

/// Validating variant of [`semidirect_unchecked`].
pub fn semidirect(l: &HemistrictLie2, v: &Representation2) -> Result<HemistrictLie2, Error> {
    let report = check_representation(v, l);
    if !report.is_empty() {
        return Err(Error::NotARepresentation(report.violations[0].to_string()));
    }
    let out = semidirect_unchecked(l, v);
    debug_assert!(check_hemistrict(&out).is_empty());
    Ok(out)
}

/// Compatibility of a representation of `dst` with a morphism
/// `f : src -> dst`: the degree -1 action must vanish on the image of the
/// homotopy `f_2`.
pub fn is_f_compatible(v: &Representation2, f: &Morphism2) -> bool {
    let dims = &f.f2.arg_dims;
    for t in basis_tuples(dims) {
        let val = f.f2.eval_basis(&t);
        for w in 0..v.v.dim_0 {
            let image = v.l_vec(Deg::M1, val, Deg::Z, &unit(v.v.dim_0, w));
            if image.iter().any(|r| !r.is_zero()) {
                return false;
            }
        }
    }
    true
}

/// Pullback of an `f`-compatible representation along `f : src -> dst`.
pub fn pullback_rep(
    v: &Representation2,
    f: &Morphism2,
    src: &HemistrictLie2,
) -> Result<Representation2, Error> {
    if !is_f_compatible(v, f) {
        return Err(Error::NotCompatible(
            "degree -1 action does not vanish on the homotopy image".into(),
        ));
    }
    let mut out = Representation2::zero_shaped(src, v.v.clone());
    let lz = src.dim(Deg::Z);
    let lm = src.dim(Deg::M1);
    let (vz, vm) = (v.v.dim_0, v.v.dim_m1);
    for t in basis_tuples(&[lz, vz]) {
        let fx = f.f1_0.col(t[0]);
        for (o, val) in v.l_vec(Deg::Z, &fx, Deg::Z, &unit(vz, t[1])).into_iter().enumerate() {
            out.l00.set_entry(&t, o, val);
        }
        for (o, val) in v.hv_vec(&fx, &unit(vz, t[1])).into_iter().enumerate() {
            out.hv.set_entry(&t, o, val);
        }
        for (o, val) in v.r_vec(Deg::Z, &unit(vz, t[1]), Deg::Z, &fx).into_iter().enumerate() {
            out.r00.set_entry(&[t[1], t[0]], o, val);
        }
    }
    for t in basis_tuples(&[lz, vm]) {
        let fx = f.f1_0.col(t[0]);
        for (o, val) in v.l_vec(Deg::Z, &fx, Deg::M1, &unit(vm, t[1])).into_iter().enumerate() {
            out.l0m.set_entry(&t, o, val);
        }
        for (o, val) in v.r_vec(Deg::M1, &unit(vm, t[1]), Deg::Z, &fx).into_iter().enumerate() {
            out.rm0.set_entry(&[t[1], t[0]], o, val);
        }
    }
    for t in basis_tuples(&[lm, vz]) {
        let fa = f.f1_m1.col(t[0]);
        for (o, val) in v.l_vec(Deg::M1, &fa, Deg::Z, &unit(vz, t[1])).into_iter().enumerate() {
            out.lm0.set_entry(&t, o, val);
        }
        for (o, val) in v.r_vec(Deg::Z, &unit(vz, t[1]), Deg::M1, &fa).into_iter().enumerate() {
            out.r0m.set_entry(&[t[1], t[0]], o, val);
        }
    }
    Ok(out)
}

/// Builds the representation of the two-term algebra of `g` determined by an
/// ordinary module `(V^0, l, r)`: the degree -1 part is the span of all
/// `l_x v + r_x v`, included into `V^0`, and the action homotopy records the
/// symmetrised action.
pub fn from_leibniz_module(
    g: &LeibnizAlgebra,
    m: &LeibnizModule,
    l2: &HemistrictLie2,
) -> Representation2 {
    let n = g.dim;
    let md = m.dim;
    let mut gens: Vec<Vec<Rat>> = Vec::new();
    for x in 0..n {
        for w in 0..md {
            let lv = m.l.eval_basis(&[x, w]);
            let rv = m.r.eval_basis(&[w, x]);
            gens.push((0..md).map(|c| &lv[c] + &rv[c]).collect());
        }
    }
    let span = Mat::from_cols(gens).column_space_basis();
    let s = span.cols();
    let v = TwoTermComplex::new(s, md, span.clone()).unwrap();
    let in_span = |w: Vec<Rat>| -> Vec<Rat> {
        span.solve(&Mat::from_cols(vec![w]))
            .expect("action preserves the symmetrised-action span")
            .col(0)
    };
    let lm = l2.dim(Deg::M1);
    let mut out = Representation2::zero_shaped(l2, v);
    out.l00 = m.l.clone();
    out.r00 = m.r.clone();
    for x in 0..n {
        for u in 0..s {
            let w = m.l.evaluate(&[unit(n, x), span.col(u)]).unwrap();
            for (o, val) in in_span(w).into_iter().enumerate() {
                out.l0m.set_entry(&[x, u], o, val);
            }
            let w = m.r.evaluate(&[span.col(u), unit(n, x)]).unwrap();
            for (o, val) in in_span(w).into_iter().enumerate() {
                out.rm0.set_entry(&[u, x], o, val);
            }
        }
    }
    // degree -1 part of the algebra acts through its inclusion into g
    for a in 0..lm {
        let ka = l2.complex.d.col(a);
        for w in 0..md {
            let img = m.l.evaluate(&[ka.clone(), unit(md, w)]).unwrap();
            for (o, val) in in_span(img).into_iter().enumerate() {
                out.lm0.set_entry(&[a, w], o, val);
            }
            let img = m.r.evaluate(&[unit(md, w), ka.clone()]).unwrap();
            for (o, val) in in_span(img).into_iter().enumerate() {
                out.r0m.set_entry(&[w, a], o, val);
            }
        }
    }
    for t in basis_tuples(&[n, md]) {
        let lv = m.l.eval_basis(&t);
        let rv = m.r.eval_basis(&[t[1], t[0]]);
        let sum: Vec<Rat> = (0..md).map(|c| &lv[c] + &rv[c]).collect();
        for (o, val) in in_span(sum).into_iter().enumerate() {
            out.hv.set_entry(&t, o, val);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled;
    use crate::hemistrict::{from_leibniz, lie_quotient};
    use crate::linalg::rat;

    fn l_g2() -> HemistrictLie2 {
        from_leibniz(&bundled::g2())
    }

    #[test]
    fn adjoint_and_trivial_pass() {
        let l = l_g2();
        assert!(check_representation(&Representation2::adjoint(&l), &l).is_empty());
        let triv = Representation2::trivial(&l, TwoTermComplex::concentrated(1));
        assert!(check_representation(&triv, &l).is_empty());
        for g in [bundled::g3(), bundled::g4()] {
            let l = from_leibniz(&g);
            assert!(check_representation(&Representation2::adjoint(&l), &l).is_empty());
        }
    }

    #[test]
    fn zeroed_action_homotopy_is_reported() {
        let l = l_g2();
        let mut ad = Representation2::adjoint(&l);
        ad.hv = MultiMap::zero(vec![Deg::Z, Deg::Z], vec![2, 2], -1, 1);
        let report = check_representation(&ad, &l);
        assert!(report.cites("skew-commutation"));
        assert!(report
            .violations
            .iter()
            .any(|v| v.law == "skew-commutation" && v.at == vec![0, 0]));
    }

    #[test]
    fn dg_leibniz_laws_follow() {
        for g in [bundled::g2(), bundled::g4()] {
            let l = from_leibniz(&g);
            let ad = Representation2::adjoint(&l);
            assert!(check_dg_leibniz_rep(&ad, &l).is_empty());
        }
    }

    #[test]
    fn minimal_model_round_trip() {
        let l = l_g2();
        let ad = Representation2::adjoint(&l);
        let (vs, phi, psi) = minimal_model(&ad, &l);
        assert!(vs.is_symmetric());
        // r(e1, e1) = -e2 in the symmetric model
        assert_eq!(vs.r00.entry(&[0, 0], 1), &rat(-1));
        assert!(check_representation(&vs, &l).is_empty());
        assert!(check_rep_morphism(&phi, &l, &ad, &vs).is_empty());
        assert!(check_rep_morphism(&psi, &l, &vs, &ad).is_empty());
        let round = compose_rep_morphisms(&psi, &phi, &l).unwrap();
        assert_eq!(round, RepMorphism::identity(&l, &ad));
        let round = compose_rep_morphisms(&phi, &psi, &l).unwrap();
        assert_eq!(round, RepMorphism::identity(&l, &vs));
        // already symmetric input is untouched
        let (vss, phi2, _) = minimal_model(&vs, &l);
        assert_eq!(vss, vs);
        assert_eq!(phi2, RepMorphism::identity(&l, &vs));
    }

    #[test]
    fn perturbed_morphism_is_reported() {
        let l = l_g2();
        let ad = Representation2::adjoint(&l);
        let mut bad = RepMorphism::identity(&l, &ad);
        bad.phil.set_entry(&[0, 0], 0, rat(1));
        let report = check_rep_morphism(&bad, &l, &ad, &ad);
        assert!(report.cites("rep-morphism-left"));
    }

    #[test]
    fn semidirect_of_adjoint_passes() {
        let l = l_g2();
        let ad = Representation2::adjoint(&l);
        let e = semidirect(&l, &ad).unwrap();
        assert!(check_hemistrict(&e).is_empty());
        // trivial one-dimensional coefficients: the new line is central
        let triv = Representation2::trivial(&l, TwoTermComplex::concentrated(1));
        let e = semidirect(&l, &triv).unwrap();
        assert!(check_hemistrict(&e).is_empty());
        for t in basis_tuples(&[3, 3]) {
            if t[0] == 2 || t[1] == 2 {
                assert!(e.c00.eval_basis(&t).iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn broken_rep_breaks_semidirect() {
        let l = l_g2();
        let mut ad = Representation2::adjoint(&l);
        // violate the homotopy-derivation law
        ad.hv.set_entry(&[1, 1], 0, rat(7));
        let report = check_representation(&ad, &l);
        assert!(!report.is_empty());
        let e = semidirect_unchecked(&l, &ad);
        assert!(!check_hemistrict(&e).is_empty());
        assert!(matches!(semidirect(&l, &ad), Err(Error::NotARepresentation(_))));
    }

    #[test]
    fn pullback_along_splitting_section() {
        let l = l_g2();
        let (_, split) = lie_quotient(&l).unwrap();
        let ad = Representation2::adjoint(&l);
        // the degree -1 bracket block of l_g2 vanishes, so anything is
        // compatible with g
        assert!(is_f_compatible(&ad, &split.g));
        let quotient = HemistrictLie2::from_lie(&lie_quotient(&l).unwrap().0);
        let pulled = pullback_rep(&ad, &split.g, &quotient).unwrap();
        assert!(check_representation(&pulled, &quotient).is_empty());
        // identity morphism with zero homotopy is always compatible
        let id = Morphism2::identity(&l);
        assert!(is_f_compatible(&ad, &id));
        let back = pullback_rep(&ad, &id, &l).unwrap();
        assert_eq!(back, ad);
        // pullback of a symmetric representation stays symmetric
        let (vs, _, _) = minimal_model(&ad, &l);
        let pulled = pullback_rep(&vs, &split.g, &quotient).unwrap();
        assert!(pulled.is_symmetric());
    }

    #[test]
    fn module_construction_recovers_the_adjoint() {
        let g = bundled::g2();
        let l = from_leibniz(&g);
        let ordinary = LeibnizModule::adjoint(&g);
        let v = from_leibniz_module(&g, &ordinary, &l);
        assert!(check_representation(&v, &l).is_empty());
        assert_eq!(v, Representation2::adjoint(&l));
    }

    #[test]
    fn direct_sums_stay_representations() {
        let l = l_g2();
        let ad = Representation2::adjoint(&l);
        let triv = Representation2::trivial(&l, TwoTermComplex::concentrated(2));
        let sum = ad.direct_sum(&triv, &l);
        assert!(check_representation(&sum, &l).is_empty());
        assert_eq!(sum.v.dim_0, 4);
        assert_eq!(sum.v.dim_m1, 1);
    }
}
