//! Skew-symmetrization into a semistrict algebra, its cochain complex, the
//! explicit base contraction onto the Chevalley-Eilenberg complex of the
//! quotient Lie algebra, the perturbation lemma, and the end-to-end
//! verifier tying the three cohomology theories together.
//!
//! Sign conventions for the dualised structure maps are fixed once and
//! documented in `docs/sign-conventions.md`; they are locked by the
//! `d^2 = 0` assertions here and by the regression tests.

use crate::error::Error;
use crate::graded::{basis_tuples, Deg, MultiMap, TwoTermComplex};
use crate::hemistrict::{lie_quotient, HemistrictLie2, SplittingData};
use crate::leibniz::{CeComplex, LeibnizAlgebra, LieAlgebra};
use crate::linalg::{cohomology_dim, cohomology_representatives, Mat, Rat};
use crate::rep::{check_representation, pullback_rep, Representation2};
use crate::standard::{pullback_cochain, realize, StdComplex};
use num_traits::{One, Zero};

/// The skew-symmetrised algebra: an antisymmetric 2-bracket (three degree
/// blocks) and an alternating 3-bracket into degree -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemistrictLie2 {
    pub complex: TwoTermComplex,
    /// L^0 ^ L^0 -> L^0
    pub l2_00: MultiMap,
    /// L^0 (x) L^-1 -> L^-1
    pub l2_0m: MultiMap,
    /// L^-1 (x) L^0 -> L^-1
    pub l2_m0: MultiMap,
    /// alternating (L^0)^3 -> L^-1
    pub l3: MultiMap,
}

fn unit(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = Rat::one();
    v
}

fn half() -> Rat {
    Rat::new(1.into(), 2.into())
}

impl SemistrictLie2 {
    pub fn l2_vec(&self, xd: Deg, x: &[Rat], yd: Deg, y: &[Rat]) -> Vec<Rat> {
        let block = match (xd, yd) {
            (Deg::Z, Deg::Z) => &self.l2_00,
            (Deg::Z, Deg::M1) => &self.l2_0m,
            (Deg::M1, Deg::Z) => &self.l2_m0,
            (Deg::M1, Deg::M1) => return Vec::new(),
        };
        block.evaluate(&[x.to_vec(), y.to_vec()]).expect("bracket shapes")
    }
}

/// Antisymmetrises the bracket and forms the cyclic alternator correction.
/// The antisymmetry, alternation and chain-map invariants are asserted.
pub fn skew_symmetrize(l: &HemistrictLie2) -> SemistrictLie2 {
    let z = l.dim(Deg::Z);
    let m1 = l.dim(Deg::M1);
    let mut l2_00 = MultiMap::zero(vec![Deg::Z, Deg::Z], vec![z, z], 0, z);
    let mut l2_0m = MultiMap::zero(vec![Deg::Z, Deg::M1], vec![z, m1], -1, m1);
    let mut l2_m0 = MultiMap::zero(vec![Deg::M1, Deg::Z], vec![m1, z], -1, m1);
    let mut l3 = MultiMap::zero(vec![Deg::Z, Deg::Z, Deg::Z], vec![z, z, z], -1, m1);
    let h = half();
    for t in basis_tuples(&[z, z]) {
        let ij = l.c00.eval_basis(&t);
        let ji = l.c00.eval_basis(&[t[1], t[0]]);
        for o in 0..z {
            l2_00.set_entry(&t, o, &h * (&ij[o] - &ji[o]));
        }
    }
    for t in basis_tuples(&[z, m1]) {
        let xb = l.c0m.eval_basis(&t);
        let bx = l.cm0.eval_basis(&[t[1], t[0]]);
        for o in 0..m1 {
            let v = &h * (&xb[o] - &bx[o]);
            l2_0m.set_entry(&t, o, v.clone());
            l2_m0.set_entry(&[t[1], t[0]], o, -v);
        }
    }
    let sixth = Rat::new((-1).into(), 6.into());
    for t in basis_tuples(&[z, z, z]) {
        let (x, y, w) = (unit(z, t[0]), unit(z, t[1]), unit(z, t[2]));
        let a = l2_00.evaluate(&[x.clone(), y.clone()]).unwrap();
        let b = l2_00.evaluate(&[y.clone(), w.clone()]).unwrap();
        let c = l2_00.evaluate(&[w.clone(), x.clone()]).unwrap();
        let mut total = l.h2_vec(&a, &w);
        for (o, v) in l.h2_vec(&b, &x).into_iter().enumerate() {
            total[o] += v;
        }
        for (o, v) in l.h2_vec(&c, &y).into_iter().enumerate() {
            total[o] += v;
        }
        for (o, v) in total.into_iter().enumerate() {
            l3.set_entry(&t, o, &sixth * v);
        }
    }
    let out = SemistrictLie2 { complex: l.complex.clone(), l2_00, l2_0m, l2_m0, l3 };
    // antisymmetry and alternation
    for t in basis_tuples(&[z, z]) {
        for o in 0..z {
            assert_eq!(
                out.l2_00.entry(&t, o),
                &-out.l2_00.entry(&[t[1], t[0]], o).clone(),
                "2-bracket failed antisymmetry"
            );
        }
    }
    for t in basis_tuples(&[z, z, z]) {
        for perm in [[1usize, 0, 2], [0, 2, 1]] {
            let swapped = [t[perm[0]], t[perm[1]], t[perm[2]]];
            for o in 0..m1 {
                assert_eq!(
                    out.l3.entry(&t, o),
                    &-out.l3.entry(&swapped, o).clone(),
                    "3-bracket failed alternation"
                );
            }
        }
    }
    // the 2-bracket is a cochain map
    let d = &l.complex.d;
    for t in basis_tuples(&[m1, z]) {
        let lhs = d.mul_vec(out.l2_m0.eval_basis(&t));
        let rhs = out.l2_vec(Deg::Z, &d.col(t[0]), Deg::Z, &unit(z, t[1]));
        assert_eq!(lhs, rhs, "2-bracket failed the chain-map law");
    }
    for t in basis_tuples(&[z, m1]) {
        let lhs = d.mul_vec(out.l2_0m.eval_basis(&t));
        let rhs = out.l2_vec(Deg::Z, &unit(z, t[0]), Deg::Z, &d.col(t[1]));
        assert_eq!(lhs, rhs, "2-bracket failed the chain-map law");
    }
    out
}

/// The closed-form alternating 3-bracket of the algebra attached to a
/// Leibniz algebra: one quarter of the cyclic sum of reassociated double
/// brackets, written in the degree -1 coordinates of `l`.
pub fn leibniz_l3_closed_form(g: &LeibnizAlgebra, l: &HemistrictLie2) -> MultiMap {
    let n = g.dim;
    let m1 = l.dim(Deg::M1);
    let quarter = Rat::new(1.into(), 4.into());
    let mut l3 = MultiMap::zero(vec![Deg::Z, Deg::Z, Deg::Z], vec![n, n, n], -1, m1);
    for t in basis_tuples(&[n, n, n]) {
        let (x, y, w) = (unit(n, t[0]), unit(n, t[1]), unit(n, t[2]));
        let mut total = vec![Rat::zero(); n];
        let zy = g.c.evaluate(&[w.clone(), y.clone()]).unwrap();
        for (o, v) in g.c.evaluate(&[zy, x.clone()]).unwrap().into_iter().enumerate() {
            total[o] += v;
        }
        let xz = g.c.evaluate(&[x.clone(), w.clone()]).unwrap();
        for (o, v) in g.c.evaluate(&[xz, y.clone()]).unwrap().into_iter().enumerate() {
            total[o] += v;
        }
        let yx = g.c.evaluate(&[y.clone(), x.clone()]).unwrap();
        for (o, v) in g.c.evaluate(&[yx, w.clone()]).unwrap().into_iter().enumerate() {
            total[o] += v;
        }
        let coords = l
            .complex
            .d
            .solve(&Mat::from_cols(vec![total]))
            .expect("cyclic double brackets land in the ideal");
        for o in 0..m1 {
            l3.set_entry(&t, o, &quarter * coords.at(o, 0));
        }
    }
    l3
}

/// The representation data a semistrict algebra inherits from a
/// representation of the underlying algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSemistrictRep {
    pub v: TwoTermComplex,
    pub mu2_00: MultiMap,
    pub mu2_0m: MultiMap,
    pub mu2_m0: MultiMap,
    /// L^0 ^ L^0 (x) V^0 -> V^-1, one half of the action through the
    /// alternator
    pub mu3: MultiMap,
}

pub fn induced_rep(l: &HemistrictLie2, v: &Representation2) -> InducedSemistrictRep {
    let z = l.dim(Deg::Z);
    let vz = v.v.dim_0;
    let vm = v.v.dim_m1;
    let mut mu3 = MultiMap::zero(vec![Deg::Z, Deg::Z, Deg::Z], vec![z, z, vz], -1, vm);
    let h = half();
    for t in basis_tuples(&[z, z, vz]) {
        let alt = l.h2.eval_basis(&[t[0], t[1]]).to_vec();
        let img = v.l_vec(Deg::M1, &alt, Deg::Z, &unit(vz, t[2]));
        for (o, val) in img.into_iter().enumerate() {
            mu3.set_entry(&t, o, &h * val);
        }
    }
    InducedSemistrictRep {
        v: v.v.clone(),
        mu2_00: v.l00.clone(),
        mu2_0m: v.l0m.clone(),
        mu2_m0: v.lm0.clone(),
        mu3,
    }
}

/// One basis element of the semistrict cochain complex: a strictly
/// increasing degree-0 subset, a sorted degree -1 multiset, and a value
/// index in `V^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeBasisElem {
    pub s: Vec<usize>,
    pub j: Vec<usize>,
    pub r: Deg,
    pub o: usize,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn multisets(dim: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if dim == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0usize; k];
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + 1 < dim {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[i];
                }
                break;
            }
        }
    }
}

/// Inserts `c` into a strictly increasing tuple; `None` if present. The
/// boolean is the parity of the transpositions needed to sort `(c, rest)`.
fn insert_sorted(rest: &[usize], c: usize) -> Option<(Vec<usize>, bool)> {
    if rest.contains(&c) {
        return None;
    }
    let pos = rest.iter().take_while(|&&x| x < c).count();
    let mut out = Vec::with_capacity(rest.len() + 1);
    out.extend_from_slice(&rest[..pos]);
    out.push(c);
    out.extend_from_slice(&rest[pos..]);
    Some((out, pos % 2 == 1))
}

fn sgn(parity: i64) -> Rat {
    if parity.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// The semistrict cochain complex: exterior powers of the degree-0 dual,
/// symmetric powers of the shifted degree -1 dual, values in the two-term
/// coefficients. The differential splits as the unperturbed internal part
/// plus the dualised structure maps.
pub struct SemistrictComplex {
    pub n_max: i64,
    /// dims\[i\] is the dimension in degree i-1, for -1 ..= n_max+1
    pub dims: Vec<usize>,
    pub elems: Vec<Vec<WedgeBasisElem>>,
    /// total differential out of degree i-1, for -1 ..= n_max
    pub d_total: Vec<Mat>,
    /// internal part (coefficient differential plus the degree-map dual)
    pub d_base: Vec<Mat>,
    /// perturbation: the dualised 2- and 3-brackets and the action
    pub rho: Vec<Mat>,
}

impl SemistrictComplex {
    pub fn dim(&self, n: i64) -> usize {
        self.dims[(n + 1) as usize]
    }

    pub fn diff(&self, n: i64) -> &Mat {
        &self.d_total[(n + 1) as usize]
    }

    pub fn cohomology_dims(&self) -> Vec<usize> {
        (-1..=self.n_max - 1)
            .map(|n| {
                let d_in = if n == -1 {
                    Mat::zero(self.dim(n), 0)
                } else {
                    self.diff(n - 1).clone()
                };
                cohomology_dim(&d_in, self.diff(n)).expect("semistrict d^2 = 0")
            })
            .collect()
    }
}

/// Builds the semistrict complex over an optional new ordered basis of the
/// degree-0 part (columns of `basis0`); the degree -1 basis is kept.
///
/// Requires the theorem regime: the degree -1 action and the induced
/// 3-action must vanish.
pub fn semistrict_complex(
    lt: &SemistrictLie2,
    rep: &InducedSemistrictRep,
    n_max: i64,
    basis0: Option<&Mat>,
) -> Result<SemistrictComplex, Error> {
    if !rep.mu3.is_zero() {
        return Err(Error::UnsupportedRepresentation(
            "induced 3-action is nonzero; only the vanishing regime is supported".into(),
        ));
    }
    if !rep.mu2_m0.is_zero() {
        return Err(Error::UnsupportedRepresentation(
            "degree -1 part acts nontrivially on the coefficients".into(),
        ));
    }
    let z = lt.complex.dim_0;
    let m1 = lt.complex.dim_m1;
    let (vz, vm) = (rep.v.dim_0, rep.v.dim_m1);
    // change of degree-0 basis: transform the structure tensors once
    let (l2_00, l2_0m, l3, d_map, l00, l0m) = {
        let p = basis0.cloned().unwrap_or_else(|| Mat::identity(z));
        assert_eq!(p.rows(), z);
        assert_eq!(p.cols(), z);
        let pinv = p.solve(&Mat::identity(z)).expect("basis change is invertible");
        let mut l2_00n = MultiMap::zero(vec![Deg::Z, Deg::Z], vec![z, z], 0, z);
        for t in basis_tuples(&[z, z]) {
            let w = lt.l2_vec(Deg::Z, &p.col(t[0]), Deg::Z, &p.col(t[1]));
            for (o, val) in pinv.mul_vec(&w).into_iter().enumerate() {
                l2_00n.set_entry(&t, o, val);
            }
        }
        let mut l2_0mn = MultiMap::zero(vec![Deg::Z, Deg::M1], vec![z, m1], -1, m1);
        for t in basis_tuples(&[z, m1]) {
            let w = lt.l2_vec(Deg::Z, &p.col(t[0]), Deg::M1, &unit(m1, t[1]));
            for (o, val) in w.into_iter().enumerate() {
                l2_0mn.set_entry(&t, o, val);
            }
        }
        let mut l3n = MultiMap::zero(vec![Deg::Z, Deg::Z, Deg::Z], vec![z, z, z], -1, m1);
        for t in basis_tuples(&[z, z, z]) {
            let w = lt
                .l3
                .evaluate(&[p.col(t[0]), p.col(t[1]), p.col(t[2])])
                .expect("3-bracket shapes");
            for (o, val) in w.into_iter().enumerate() {
                l3n.set_entry(&t, o, val);
            }
        }
        let d_map = pinv.mul(&lt.complex.d);
        let mut l00n = MultiMap::zero(vec![Deg::Z, Deg::Z], vec![z, vz], 0, vz);
        for t in basis_tuples(&[z, vz]) {
            let w = rep.mu2_00.evaluate(&[p.col(t[0]), unit(vz, t[1])]).unwrap();
            for (o, val) in w.into_iter().enumerate() {
                l00n.set_entry(&t, o, val);
            }
        }
        let mut l0mn = MultiMap::zero(vec![Deg::Z, Deg::M1], vec![z, vm], -1, vm);
        for t in basis_tuples(&[z, vm]) {
            let w = rep.mu2_0m.evaluate(&[p.col(t[0]), unit(vm, t[1])]).unwrap();
            for (o, val) in w.into_iter().enumerate() {
                l0mn.set_entry(&t, o, val);
            }
        }
        (l2_00n, l2_0mn, l3n, d_map, l00n, l0mn)
    };

    let mut elems: Vec<Vec<WedgeBasisElem>> = Vec::new();
    for n in -1..=n_max + 1 {
        let mut at: Vec<WedgeBasisElem> = Vec::new();
        for r in [Deg::Z, Deg::M1] {
            let vdim = if r == Deg::Z { vz } else { vm };
            if vdim == 0 {
                continue;
            }
            let mut q = 0usize;
            loop {
                let p = n - 2 * q as i64 - r.as_i8() as i64;
                if p < 0 {
                    break;
                }
                if p <= z as i64 {
                    for s in subsets(z, p as usize) {
                        for j in multisets(m1, q) {
                            for o in 0..vdim {
                                at.push(WedgeBasisElem { s: s.clone(), j: j.clone(), r, o });
                            }
                        }
                    }
                }
                q += 1;
            }
        }
        elems.push(at);
    }
    let dims: Vec<usize> = elems.iter().map(|e| e.len()).collect();
    let index_of = |deg_idx: usize, elem: &WedgeBasisElem| -> Option<usize> {
        elems[deg_idx].iter().position(|e| e == elem)
    };

    let mut d_base = Vec::new();
    let mut rho = Vec::new();
    for n in -1..=n_max {
        let src_idx = (n + 1) as usize;
        let dst_idx = (n + 2) as usize;
        let mut base = Mat::zero(dims[dst_idx], dims[src_idx]);
        let mut pert = Mat::zero(dims[dst_idx], dims[src_idx]);
        for (row, e) in elems[dst_idx].iter().enumerate() {
            let p = e.s.len();
            // coefficient differential, sign (-1)^p
            if e.r == Deg::Z {
                for u in 0..vm {
                    let coeff = rep.v.d.at(e.o, u);
                    if coeff.is_zero() {
                        continue;
                    }
                    let src = WedgeBasisElem { s: e.s.clone(), j: e.j.clone(), r: Deg::M1, o: u };
                    if let Some(col) = index_of(src_idx, &src) {
                        base.add_to(row, col, &(&sgn(p as i64) * coeff));
                    }
                }
            }
            // degree-map dual: replace a symmetric slot by a front insertion
            for pos in 0..e.j.len() {
                let alpha = e.j[pos];
                let mut rest = e.j.clone();
                rest.remove(pos);
                for c in 0..z {
                    let coeff = d_map.at(c, alpha);
                    if coeff.is_zero() {
                        continue;
                    }
                    let Some((s2, neg)) = insert_sorted(&e.s, c) else { continue };
                    let src = WedgeBasisElem { s: s2, j: rest.clone(), r: e.r, o: e.o };
                    if let Some(col) = index_of(src_idx, &src) {
                        let s = if neg { -coeff.clone() } else { coeff.clone() };
                        base.add_to(row, col, &s);
                    }
                }
            }
            // action term
            let action = if e.r == Deg::Z { &l00 } else { &l0m };
            let vdim = if e.r == Deg::Z { vz } else { vm };
            for i in 1..=p {
                let x = e.s[i - 1];
                let mut rest = e.s.clone();
                rest.remove(i - 1);
                for w in 0..vdim {
                    let coeff = action.entry(&[x, w], e.o).clone();
                    if coeff.is_zero() {
                        continue;
                    }
                    let src = WedgeBasisElem { s: rest.clone(), j: e.j.clone(), r: e.r, o: w };
                    if let Some(col) = index_of(src_idx, &src) {
                        pert.add_to(row, col, &(&sgn(i as i64 - 1) * &coeff));
                    }
                }
            }
            // dual of the antisymmetrised 2-bracket on two degree-0 slots
            for i in 1..=p {
                for jj in i + 1..=p {
                    let (xi, xj) = (e.s[i - 1], e.s[jj - 1]);
                    let mut rest = e.s.clone();
                    rest.remove(jj - 1);
                    rest.remove(i - 1);
                    for c in 0..z {
                        let coeff = l2_00.entry(&[xi, xj], c).clone();
                        if coeff.is_zero() {
                            continue;
                        }
                        let Some((s2, neg)) = insert_sorted(&rest, c) else { continue };
                        let src = WedgeBasisElem { s: s2, j: e.j.clone(), r: e.r, o: e.o };
                        if let Some(col) = index_of(src_idx, &src) {
                            let mut s = &sgn((i + jj) as i64) * &coeff;
                            if neg {
                                s = -s;
                            }
                            pert.add_to(row, col, &s);
                        }
                    }
                }
            }
            // dual of the mixed 2-bracket: one degree-0 and one symmetric slot
            for i in 1..=p {
                let x = e.s[i - 1];
                let mut rest_s = e.s.clone();
                rest_s.remove(i - 1);
                for pos in 0..e.j.len() {
                    let alpha = e.j[pos];
                    let mut rest_j = e.j.clone();
                    rest_j.remove(pos);
                    for c in 0..m1 {
                        let coeff = l2_0m.entry(&[x, alpha], c).clone();
                        if coeff.is_zero() {
                            continue;
                        }
                        let mut j2 = rest_j.clone();
                        j2.push(c);
                        j2.sort_unstable();
                        let src = WedgeBasisElem { s: rest_s.clone(), j: j2, r: e.r, o: e.o };
                        if let Some(col) = index_of(src_idx, &src) {
                            pert.add_to(row, col, &-(&sgn(i as i64 - 1) * &coeff));
                        }
                    }
                }
            }
            // dual of the 3-bracket: three degree-0 slots into one symmetric
            for i in 1..=p {
                for jj in i + 1..=p {
                    for kk in jj + 1..=p {
                        let (xi, xj, xk) = (e.s[i - 1], e.s[jj - 1], e.s[kk - 1]);
                        let mut rest = e.s.clone();
                        rest.remove(kk - 1);
                        rest.remove(jj - 1);
                        rest.remove(i - 1);
                        for c in 0..m1 {
                            let coeff = l3.entry(&[xi, xj, xk], c).clone();
                            if coeff.is_zero() {
                                continue;
                            }
                            let mut j2 = e.j.clone();
                            j2.push(c);
                            j2.sort_unstable();
                            let src = WedgeBasisElem { s: rest.clone(), j: j2, r: e.r, o: e.o };
                            if let Some(col) = index_of(src_idx, &src) {
                                pert.add_to(row, col, &(&sgn((i + jj + kk) as i64) * &coeff));
                            }
                        }
                    }
                }
            }
        }
        d_base.push(base);
        rho.push(pert);
    }
    let d_total: Vec<Mat> = d_base.iter().zip(&rho).map(|(b, r)| b.add(r)).collect();
    for w in d_total.windows(2) {
        assert!(w[1].mul(&w[0]).is_zero(), "semistrict differential fails d^2 = 0");
    }
    for w in d_base.windows(2) {
        assert!(w[1].mul(&w[0]).is_zero(), "unperturbed part fails d^2 = 0");
    }
    Ok(SemistrictComplex { n_max, dims, elems, d_total, d_base, rho })
}

/// A homotopy contraction between two towers of cochain spaces, with all
/// five side conditions verified exactly.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub n_max: i64,
    /// per degree -1 ..= n_max+1
    pub dims_a: Vec<usize>,
    pub dims_b: Vec<usize>,
    /// psi\[i\]: B -> A in degree i-1
    pub psi: Vec<Mat>,
    /// phi\[i\]: A -> B in degree i-1
    pub phi: Vec<Mat>,
    /// h\[i\]: A^{i-1} -> A^{i-2}
    pub h: Vec<Mat>,
    /// d_a\[i\]: A^{i-1} -> A^{i}, for degrees -1 ..= n_max
    pub d_a: Vec<Mat>,
    pub d_b: Vec<Mat>,
}

impl Contraction {
    /// Verifies the two contraction identities, the three side conditions
    /// and both chain-map laws; panics with a location on failure.
    pub fn verify(&self) {
        let top = (self.n_max + 1) as usize;
        for i in 0..=top {
            // phi . psi = id_B
            let pp = self.phi[i].mul(&self.psi[i]);
            assert_eq!(pp, Mat::identity(self.dims_b[i]), "phi.psi != id at {}", i as i64 - 1);
            // h . psi = 0, phi . h = 0, h.h = 0
            assert!(self.h[i].mul(&self.psi[i]).is_zero(), "h.psi != 0 at {}", i as i64 - 1);
            assert!(self.phi[i].is_zero() || self.h[i].cols() == 0 || {
                let ph = Mat::zero(0, 0);
                let _ = ph;
                true
            });
            if i > 0 {
                assert!(
                    self.phi[i - 1].mul(&self.h[i]).is_zero(),
                    "phi.h != 0 at {}",
                    i as i64 - 1
                );
                if i >= 2 {
                    assert!(
                        self.h[i - 1].mul(&self.h[i]).is_zero(),
                        "h.h != 0 at {}",
                        i as i64 - 1
                    );
                }
            }
        }
        for i in 0..=top {
            // chain maps
            if i < self.d_a.len() {
                let lhs = self.d_b[i].mul(&self.phi[i]);
                let rhs = self.phi[i + 1].mul(&self.d_a[i]);
                assert_eq!(lhs, rhs, "phi fails the chain-map law at {}", i as i64 - 1);
                let lhs = self.d_a[i].mul(&self.psi[i]);
                let rhs = self.psi[i + 1].mul(&self.d_b[i]);
                assert_eq!(lhs, rhs, "psi fails the chain-map law at {}", i as i64 - 1);
            }
            // psi.phi = id - (d h + h d)
            if i < self.d_a.len() {
                let mut rhs = Mat::identity(self.dims_a[i]).sub(&self.h[i + 1].mul(&self.d_a[i]));
                if i > 0 {
                    rhs = rhs.sub(&self.d_a[i - 1].mul(&self.h[i]));
                }
                assert_eq!(
                    self.psi[i].mul(&self.phi[i]),
                    rhs,
                    "psi.phi != id - [d,h] at {}",
                    i as i64 - 1
                );
            }
        }
    }
}

/// The explicit contraction of the unperturbed semistrict complex onto the
/// coefficient tower of the quotient: built in the basis of the degree-0
/// part adapted to the splitting (section image first, then the image of
/// the degree map).
pub fn base_contraction(
    l: &HemistrictLie2,
    v: &Representation2,
    split: &SplittingData,
    n_max: i64,
) -> Result<(Contraction, SemistrictComplex), Error> {
    if !crate::hemistrict::is_injective(l) {
        return Err(Error::NotInjective);
    }
    let z = l.dim(Deg::Z);
    let m1 = l.dim(Deg::M1);
    let qdim = split.j.cols();
    assert_eq!(qdim + m1, z, "splitting does not complement the image");
    // adapted basis: section image first, then d of the degree -1 basis
    let mut adapted = Mat::zero(z, z);
    for c in 0..qdim {
        for r in 0..z {
            adapted.set(r, c, split.j.at(r, c).clone());
        }
    }
    for c in 0..m1 {
        for r in 0..z {
            adapted.set(r, qdim + c, l.complex.d.at(r, c).clone());
        }
    }
    let lt = skew_symmetrize(l);
    let rep = induced_rep(l, v);
    let a = semistrict_complex(&lt, &rep, n_max, Some(&adapted))?;
    let (vz, vm) = (v.v.dim_0, v.v.dim_m1);

    // B-side basis per degree: subsets of the quotient basis with V^0
    // values first, then one size up with V^-1 values
    let b_elems = |n: i64| -> Vec<(Vec<usize>, Deg, usize)> {
        let mut out = Vec::new();
        if (0..=qdim as i64).contains(&n) {
            for s in subsets(qdim, n as usize) {
                for o in 0..vz {
                    out.push((s.clone(), Deg::Z, o));
                }
            }
        }
        if (0..=qdim as i64).contains(&(n + 1)) {
            for s in subsets(qdim, (n + 1) as usize) {
                for o in 0..vm {
                    out.push((s.clone(), Deg::M1, o));
                }
            }
        }
        out
    };

    let mut dims_b = Vec::new();
    let mut psi = Vec::new();
    let mut phi = Vec::new();
    let mut h = Vec::new();
    let mut d_b = Vec::new();
    for n in -1..=n_max + 1 {
        let idx = (n + 1) as usize;
        let belems = b_elems(n);
        dims_b.push(belems.len());
        // psi: include along the pure section-image, empty-multiset block
        let mut psim = Mat::zero(a.dims[idx], belems.len());
        for (col, (s, r, o)) in belems.iter().enumerate() {
            let target = WedgeBasisElem { s: s.clone(), j: vec![], r: *r, o: *o };
            let row = a.elems[idx].iter().position(|e| e == &target).expect("image element");
            psim.set(row, col, Rat::one());
        }
        psi.push(psim);
        // phi: read off the same coordinates
        let mut phim = Mat::zero(belems.len(), a.dims[idx]);
        for (row, (s, r, o)) in belems.iter().enumerate() {
            let target = WedgeBasisElem { s: s.clone(), j: vec![], r: *r, o: *o };
            let col = a.elems[idx].iter().position(|e| e == &target).expect("image element");
            phim.set(row, col, Rat::one());
        }
        phi.push(phim);
        // h: transfer one image-part slot into the symmetric part
        let prev = idx.checked_sub(1);
        let mut hm = match prev {
            Some(p) => Mat::zero(a.dims[p], a.dims[idx]),
            None => Mat::zero(0, a.dims[idx]),
        };
        if let Some(p) = prev {
            for (row, e) in a.elems[p].iter().enumerate() {
                let s_k = e.s.iter().filter(|&&x| x >= qdim).count();
                let q_o = e.j.len();
                if s_k + q_o == 0 {
                    continue;
                }
                let denom = Rat::new(1.into(), (s_k as i64 + q_o as i64).into());
                for (pos1, &x) in e.s.iter().enumerate() {
                    if x < qdim {
                        continue;
                    }
                    let eps = x - qdim; // pr_{-1} of the image basis vector
                    let mut s2 = e.s.clone();
                    s2.remove(pos1);
                    let mut j2 = e.j.clone();
                    j2.push(eps);
                    j2.sort_unstable();
                    let src = WedgeBasisElem { s: s2, j: j2, r: e.r, o: e.o };
                    if let Some(col) = a.elems[idx].iter().position(|el| el == &src) {
                        let s = &sgn(pos1 as i64) * &denom;
                        hm.add_to(row, col, &s);
                    }
                }
            }
        }
        h.push(hm);
        // unperturbed B differential: the coefficient part only
        let next = b_elems(n + 1);
        let mut dbm = Mat::zero(next.len(), belems.len());
        for (row, (s, r, o)) in next.iter().enumerate() {
            if *r != Deg::Z {
                continue;
            }
            for (col, (s2, r2, u)) in belems.iter().enumerate() {
                if *r2 == Deg::M1 && s2 == s {
                    let coeff = v.v.d.at(*o, *u);
                    if !coeff.is_zero() {
                        dbm.add_to(row, col, &(&sgn(s.len() as i64) * coeff));
                    }
                }
            }
        }
        d_b.push(dbm);
    }
    d_b.pop(); // keep differentials only up to n_max
    let c = Contraction {
        n_max,
        dims_a: a.dims.clone(),
        dims_b,
        psi,
        phi,
        h,
        d_a: a.d_base.clone(),
        d_b,
    };
    c.verify();
    Ok((c, a))
}

/// The perturbation lemma: transfers a perturbation of the big side across
/// a contraction, with nilpotency established by iteration. All contraction
/// identities are re-verified on the output.
pub fn perturb(c: &Contraction, rho: &[Mat]) -> Result<Contraction, Error> {
    let top = (c.n_max + 1) as usize;
    assert_eq!(rho.len(), c.d_a.len(), "perturbation tower has the wrong length");
    // the perturbed operator must square to zero
    for i in 0..c.d_a.len() - 1 {
        let d0 = c.d_a[i].add(&rho[i]);
        let d1 = c.d_a[i + 1].add(&rho[i + 1]);
        if !d1.mul(&d0).is_zero() {
            return Err(Error::NotADifferential);
        }
    }
    let mut psi = Vec::new();
    let mut phi = Vec::new();
    let mut h = Vec::new();
    let mut d_b = Vec::new();
    let mut d_a = Vec::new();
    // Psi_n = sum_k (h_{n+1} rho_n)^k psi_n
    for i in 0..=top {
        let mut acc = c.psi[i].clone();
        if i < rho.len() {
            let hr = c.h[i + 1].mul(&rho[i]); // A^n -> A^n
            let mut term = c.psi[i].clone();
            let bound = c.dims_a[i] + 1;
            let mut steps = 0;
            loop {
                term = hr.mul(&term);
                if term.is_zero() {
                    break;
                }
                acc = acc.add(&term);
                steps += 1;
                if steps > bound {
                    return Err(Error::NotNilpotent(bound));
                }
            }
        }
        psi.push(acc);
    }
    // Phi_n = sum_k phi_n (rho_{n-1} h_n)^k and H_n = sum_k h_n (rho_{n-1} h_n)^k
    for i in 0..=top {
        if i == 0 {
            phi.push(c.phi[i].clone());
            h.push(c.h[i].clone());
            continue;
        }
        let op = rho[i - 1].mul(&c.h[i]); // A^n -> A^n
        let mut phi_acc = c.phi[i].clone();
        let mut h_acc = c.h[i].clone();
        let mut term_phi = c.phi[i].clone();
        let mut term_h = c.h[i].clone();
        let bound = c.dims_a[i] + 1;
        let mut steps = 0;
        loop {
            term_phi = term_phi.mul(&op);
            term_h = term_h.mul(&op);
            if term_phi.is_zero() && term_h.is_zero() {
                break;
            }
            phi_acc = phi_acc.add(&term_phi);
            h_acc = h_acc.add(&term_h);
            steps += 1;
            if steps > bound {
                return Err(Error::NotNilpotent(bound));
            }
        }
        phi.push(phi_acc);
        h.push(h_acc);
    }
    // D_A = d_a + rho and D_B = d_b + Phi rho psi (the geometric series is
    // already folded into Phi)
    for i in 0..c.d_a.len() {
        d_a.push(c.d_a[i].add(&rho[i]));
        let correction = phi[i + 1].mul(&rho[i]).mul(&c.psi[i]);
        d_b.push(c.d_b[i].add(&correction));
    }
    let out = Contraction {
        n_max: c.n_max,
        dims_a: c.dims_a.clone(),
        dims_b: c.dims_b.clone(),
        psi,
        phi,
        h,
        d_a,
        d_b,
    };
    out.verify();
    Ok(out)
}

/// The end-to-end comparison of the three cohomology theories.
#[derive(Debug, Clone)]
pub struct MainTheoremReport {
    pub n_max: i64,
    /// the part-1 hypothesis: the alternator vanishes on exact pairs
    pub h2_exact_pairs: bool,
    /// dimensions for degrees -1 ..= n_max, all three theories
    pub dims_standard: Vec<usize>,
    pub dims_semistrict: Vec<usize>,
    pub dims_ce: Vec<usize>,
    pub dims_agree: bool,
    /// induced maps on standard cohomology are mutually inverse; `None`
    /// when the part-1 hypothesis fails and the maps are not certified
    pub induced_maps_inverse: Option<bool>,
}

/// Induced map on cohomology of a cochain map `m` in one degree, expressed
/// in the representative bases.
fn induced_on_cohomology(
    m: &Mat,
    src_d_in: &Mat,
    src_d_out: &Mat,
    dst_d_in: &Mat,
    dst_d_out: &Mat,
) -> Mat {
    let src_reps = cohomology_representatives(src_d_in, src_d_out).expect("d^2 = 0");
    let dst_reps = cohomology_representatives(dst_d_in, dst_d_out).expect("d^2 = 0");
    let dst_im = dst_d_in.column_space_basis();
    let solve_in = dst_reps.hstack(&dst_im);
    let mapped = m.mul(&src_reps);
    let coords = solve_in.solve(&mapped).expect("image classes decompose");
    Mat::from_fn(dst_reps.cols(), src_reps.cols(), |r, c| coords.at(r, c).clone())
}

/// Computes the three cohomology tables and certifies the comparison maps.
///
/// Hypotheses checked up front: the degree map is injective, the
/// representation is valid, and the degree -1 part acts by zero. The
/// part-1 hypothesis (alternator vanishing on exact pairs) gates only the
/// inverse-isomorphism certification.
pub fn verify_main_theorem(
    l: &HemistrictLie2,
    v: &Representation2,
    n_max: i64,
    max_ambient: usize,
) -> Result<MainTheoremReport, Error> {
    if !crate::hemistrict::is_injective(l) {
        return Err(Error::HypothesisViolated("injectivity of the degree map".into()));
    }
    if !check_representation(v, l).is_empty() {
        return Err(Error::HypothesisViolated("representation axioms".into()));
    }
    if !v.lm0.is_zero() {
        return Err(Error::HypothesisViolated("degree -1 action on the coefficients".into()));
    }
    let h2_exact_pairs = l.h2_vanishes_on_exact_pairs();

    // standard side
    let mut std = StdComplex::new(l, v, max_ambient);
    let real = realize(&mut std, n_max)?;
    let dims_standard = real.cohomology_dims();

    // semistrict side
    let lt = skew_symmetrize(l);
    let rep = induced_rep(l, v);
    let a = semistrict_complex(&lt, &rep, n_max + 1, None)?;
    let dims_semistrict: Vec<usize> = a.cohomology_dims()[..=(n_max + 1) as usize].to_vec();

    // Chevalley-Eilenberg side on the quotient
    let (lie, split) = lie_quotient(l)?;
    let (vz, vm) = (v.v.dim_0, v.v.dim_m1);
    let mut l0 = MultiMap::zero(vec![Deg::Z, Deg::Z], vec![lie.dim, vz], 0, vz);
    let mut lm1 = MultiMap::zero(vec![Deg::Z, Deg::M1], vec![lie.dim, vm], 0, vm);
    for t in basis_tuples(&[lie.dim, vz]) {
        let w = v.l_vec(Deg::Z, &split.j.col(t[0]), Deg::Z, &unit(vz, t[1]));
        for (o, val) in w.into_iter().enumerate() {
            l0.set_entry(&t, o, val);
        }
    }
    for t in basis_tuples(&[lie.dim, vm]) {
        let w = v.l_vec(Deg::Z, &split.j.col(t[0]), Deg::M1, &unit(vm, t[1]));
        for (o, val) in w.into_iter().enumerate() {
            lm1.set_entry(&t, o, val);
        }
    }
    let ce = CeComplex::build(&lie, &v.v, &l0, &lm1, n_max + 1)?;
    let dims_ce: Vec<usize> = ce.cohomology_dims()[..=(n_max + 1) as usize].to_vec();

    let dims_agree = dims_standard == dims_semistrict && dims_standard == dims_ce;

    let induced_maps_inverse = if h2_exact_pairs {
        Some(certify_inverse_isomorphisms(l, v, &lie, &split, n_max, max_ambient, &real)?)
    } else {
        None
    };

    Ok(MainTheoremReport {
        n_max,
        h2_exact_pairs,
        dims_standard,
        dims_semistrict,
        dims_ce,
        dims_agree,
        induced_maps_inverse,
    })
}

fn certify_inverse_isomorphisms(
    l: &HemistrictLie2,
    v: &Representation2,
    lie: &LieAlgebra,
    split: &SplittingData,
    n_max: i64,
    max_ambient: usize,
    real: &crate::standard::Realization,
) -> Result<bool, Error> {
    let quotient = HemistrictLie2::from_lie(lie);
    let vq = pullback_rep(v, &split.g, &quotient)?;
    // the pullback of the quotient module along the projection recovers v
    let back = pullback_rep(&vq, &split.f, l)?;
    assert_eq!(&back, v, "module fails to descend and pull back to itself");
    let mut std_l = StdComplex::new(l, v, max_ambient);
    let mut std_q = StdComplex::new(&quotient, &vq, max_ambient);
    let real_q = realize(&mut std_q, n_max)?;
    // pullback along f: C(quotient) -> C(L); pullback along g: the reverse
    let mut maps_f = Vec::new();
    let mut maps_g = Vec::new();
    for n in -1..=n_max + 1 {
        maps_f.push(pullback_cochain(&split.f, &vq, &mut std_q, &mut std_l, n)?);
        maps_g.push(pullback_cochain(&split.g, v, &mut std_l, &mut std_q, n)?);
    }
    // both are cochain maps
    for n in -1..=n_max {
        let i = (n + 1) as usize;
        assert_eq!(
            real.diff(n).mul(&maps_f[i]),
            maps_f[i + 1].mul(real_q.diff(n)),
            "pullback along the projection fails to be a cochain map at degree {n}"
        );
        assert_eq!(
            real_q.diff(n).mul(&maps_g[i]),
            maps_g[i + 1].mul(real.diff(n)),
            "pullback along the section fails to be a cochain map at degree {n}"
        );
    }
    // (f.g)^* = g^* then f^*; f.g = id on the quotient gives the identity on
    // the nose, g.f = id up to homotopy gives the identity on cohomology
    for n in -1..=n_max {
        let i = (n + 1) as usize;
        let zero_l = Mat::zero(real.dim(n), 0);
        let zero_q = Mat::zero(real_q.dim(n), 0);
        let (dl_in, dl_out) = if n == -1 {
            (zero_l.clone(), real.diff(n).clone())
        } else {
            (real.diff(n - 1).clone(), real.diff(n).clone())
        };
        let (dq_in, dq_out) = if n == -1 {
            (zero_q.clone(), real_q.diff(n).clone())
        } else {
            (real_q.diff(n - 1).clone(), real_q.diff(n).clone())
        };
        let fg = induced_on_cohomology(&maps_g[i].mul(&maps_f[i]), &dq_in, &dq_out, &dq_in, &dq_out);
        if fg != Mat::identity(fg.rows()) {
            return Ok(false);
        }
        let gf = induced_on_cohomology(&maps_f[i].mul(&maps_g[i]), &dl_in, &dl_out, &dl_in, &dl_out);
        if gf != Mat::identity(gf.rows()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled;
    use crate::hemistrict::from_leibniz;
    use crate::linalg::rat;

    #[test]
    fn skew_symmetrization_of_g2() {
        let l = from_leibniz(&bundled::g2());
        let lt = skew_symmetrize(&l);
        // the square [e1,e1] antisymmetrises away
        assert!(lt.l2_00.eval_basis(&[0, 0]).iter().all(|x| x.is_zero()));
        assert!(lt.l3.is_zero());
    }

    #[test]
    fn strict_input_is_untouched() {
        let l = from_leibniz(&bundled::lie2());
        let lt = skew_symmetrize(&l);
        assert_eq!(lt.l2_00, l.c00);
        assert!(lt.l3.is_zero());
    }

    #[test]
    fn l3_matches_the_closed_form() {
        for g in [bundled::g2(), bundled::g3(), bundled::g4()] {
            let l = from_leibniz(&g);
            let lt = skew_symmetrize(&l);
            let closed = leibniz_l3_closed_form(&g, &l);
            assert_eq!(lt.l3, closed, "closed form mismatch");
        }
        // and g4 really has a nonzero 3-bracket
        let l = from_leibniz(&bundled::g4());
        let lt = skew_symmetrize(&l);
        assert!(!lt.l3.is_zero());
        assert_eq!(lt.l3.entry(&[0, 1, 2], 1), &Rat::new((-1).into(), 4.into()));
    }

    #[test]
    fn induced_rep_vanishing_regime() {
        let l = from_leibniz(&bundled::g4());
        let ad = Representation2::adjoint(&l);
        let rep = induced_rep(&l, &ad);
        // the ideal is left-central, so the induced 3-action vanishes
        assert!(rep.mu3.is_zero());
    }

    #[test]
    fn semistrict_complex_of_g2_trivial() {
        let l = from_leibniz(&bundled::g2());
        let lt = skew_symmetrize(&l);
        let triv = Representation2::trivial(&l, TwoTermComplex::concentrated(1));
        let rep = induced_rep(&l, &triv);
        let a = semistrict_complex(&lt, &rep, 4, None).unwrap();
        // degrees 0..3 give 1,1,0,0; degree -1 is empty
        assert_eq!(a.cohomology_dims()[..5], [0, 1, 1, 0, 0]);
    }

    #[test]
    fn semistrict_complex_handles_nonzero_l3() {
        // the d^2 = 0 assertions inside the builder lock the sign rules
        for g in [bundled::g3(), bundled::g4()] {
            let l = from_leibniz(&g);
            let lt = skew_symmetrize(&l);
            let ad = Representation2::adjoint(&l);
            let rep = induced_rep(&l, &ad);
            let a = semistrict_complex(&lt, &rep, 4, None).unwrap();
            let _ = a.cohomology_dims();
        }
    }

    #[test]
    fn abelian_semistrict_is_binomial() {
        let l = HemistrictLie2::abelian(TwoTermComplex::concentrated(3));
        let lt = skew_symmetrize(&l);
        let triv = Representation2::trivial(&l, TwoTermComplex::concentrated(1));
        let rep = induced_rep(&l, &triv);
        let a = semistrict_complex(&lt, &rep, 3, None).unwrap();
        assert_eq!(a.cohomology_dims()[..4], [0, 1, 3, 3]);
    }

    #[test]
    fn base_contraction_identities_for_g2() {
        let l = from_leibniz(&bundled::g2());
        let (_, split) = lie_quotient(&l).unwrap();
        let triv = Representation2::trivial(&l, TwoTermComplex::concentrated(1));
        // verification happens inside
        let _ = base_contraction(&l, &triv, &split, 4).unwrap();
        let ad = Representation2::adjoint(&l);
        let _ = base_contraction(&l, &ad, &split, 4).unwrap();
    }

    #[test]
    fn degenerate_contraction_when_degree_map_is_onto() {
        // strict algebra: K = 0, the contraction is an isomorphism
        let l = from_leibniz(&bundled::lie2());
        let (_, split) = lie_quotient(&l).unwrap();
        let triv = Representation2::trivial(&l, TwoTermComplex::concentrated(1));
        let (c, _) = base_contraction(&l, &triv, &split, 3).unwrap();
        for i in 0..c.h.len() {
            assert!(c.h[i].is_zero());
        }
    }

    #[test]
    fn perturbation_recovers_the_quotient_differential() {
        let l = from_leibniz(&bundled::g2());
        let (lie, split) = lie_quotient(&l).unwrap();
        let triv = Representation2::trivial(&l, TwoTermComplex::concentrated(1));
        let (c, a) = base_contraction(&l, &triv, &split, 4).unwrap();
        let perturbed = perturb(&c, &a.rho).unwrap();
        // the transferred differential is the Chevalley-Eilenberg one
        let v = TwoTermComplex::concentrated(1);
        let l0 = MultiMap::zero(vec![Deg::Z, Deg::Z], vec![lie.dim, 1], 0, 1);
        let lm1 = MultiMap::zero(vec![Deg::Z, Deg::M1], vec![lie.dim, 0], 0, 0);
        let ce = CeComplex::build(&lie, &v, &l0, &lm1, 4).unwrap();
        for n in -1..=3 {
            assert_eq!(
                perturbed.d_b[(n + 1) as usize],
                *ce.diff(n),
                "transferred differential differs at degree {n}"
            );
        }
    }

    #[test]
    fn zero_perturbation_is_the_identity_transfer() {
        let l = from_leibniz(&bundled::g2());
        let (_, split) = lie_quotient(&l).unwrap();
        let triv = Representation2::trivial(&l, TwoTermComplex::concentrated(1));
        let (c, a) = base_contraction(&l, &triv, &split, 3).unwrap();
        let zero: Vec<Mat> = a.rho.iter().map(|m| Mat::zero(m.rows(), m.cols())).collect();
        let p = perturb(&c, &zero).unwrap();
        for i in 0..c.d_b.len() {
            assert_eq!(p.d_b[i], c.d_b[i]);
        }
    }

    #[test]
    fn main_theorem_for_g2_trivial() {
        let l = from_leibniz(&bundled::g2());
        let triv = Representation2::trivial(&l, TwoTermComplex::concentrated(1));
        let report = verify_main_theorem(&l, &triv, 3, 50000).unwrap();
        assert!(report.h2_exact_pairs);
        assert_eq!(report.dims_standard, vec![0, 1, 1, 0, 0]);
        assert!(report.dims_agree);
        assert_eq!(report.induced_maps_inverse, Some(true));
    }

    #[test]
    fn main_theorem_rejects_bad_hypotheses() {
        let l = HemistrictLie2::abelian(bundled::noninjective_complex());
        let triv = Representation2::trivial(&l, TwoTermComplex::concentrated(1));
        assert!(matches!(
            verify_main_theorem(&l, &triv, 2, 50000),
            Err(Error::HypothesisViolated(_))
        ));
        // adjoint of an algebra whose degree -1 part acts nontrivially
        let line = TwoTermComplex::new(1, 1, Mat::identity(1)).unwrap();
        let mut l = HemistrictLie2::abelian(line);
        // [alpha, x] = 0 but l(alpha, v) nonzero is not even a rep; instead
        // use the adjoint of a strict algebra with nonzero degree -1 bracket
        let _ = &mut l;
        let g = bundled::g2();
        let l = from_leibniz(&g);
        let mut ad = Representation2::adjoint(&l);
        ad.lm0.set_entry(&[0, 0], 0, rat(1));
        assert!(matches!(
            verify_main_theorem(&l, &ad, 2, 50000),
            Err(Error::HypothesisViolated(_))
        ));
    }
}
