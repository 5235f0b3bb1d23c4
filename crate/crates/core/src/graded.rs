//! Two-term cochain complexes and degree-graded multilinear maps.
//!
//! A two-term complex is `V^{-1} -d-> V^0`; every multilinear structure map
//! in this crate is a [`MultiMap`]: a dense structure-constant tensor, one
//! index per argument slot plus one output index. The degree `-2` space is
//! zero by convention, so any map forced there vanishes identically.

use crate::error::Error;
use crate::linalg::{Mat, Rat};
use num_traits::Zero;

/// Degree of an argument slot or output: only -1 and 0 occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Deg {
    M1,
    Z,
}

impl Deg {
    pub fn as_i8(self) -> i8 {
        match self {
            Deg::M1 => -1,
            Deg::Z => 0,
        }
    }

    /// Parity used in Koszul signs: odd for degree -1, even for degree 0.
    pub fn is_odd(self) -> bool {
        self == Deg::M1
    }
}

/// A two-term cochain complex `V^{-1} -d-> V^0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTermComplex {
    pub dim_m1: usize,
    pub dim_0: usize,
    /// dim_0 x dim_m1 matrix of the differential.
    pub d: Mat,
}

impl TwoTermComplex {
    pub fn new(dim_m1: usize, dim_0: usize, d: Mat) -> Result<Self, Error> {
        if d.rows() != dim_0 || d.cols() != dim_m1 {
            return Err(Error::ShapeMismatch(format!(
                "differential is {}x{}, expected {}x{}",
                d.rows(),
                d.cols(),
                dim_0,
                dim_m1
            )));
        }
        Ok(TwoTermComplex { dim_m1, dim_0, d })
    }

    /// Complex concentrated in degree 0.
    pub fn concentrated(dim_0: usize) -> Self {
        TwoTermComplex { dim_m1: 0, dim_0, d: Mat::zero(dim_0, 0) }
    }

    pub fn dim(&self, deg: Deg) -> usize {
        match deg {
            Deg::M1 => self.dim_m1,
            Deg::Z => self.dim_0,
        }
    }

    /// Direct sum, blocks in the given order.
    pub fn direct_sum(&self, other: &TwoTermComplex) -> TwoTermComplex {
        let dim_m1 = self.dim_m1 + other.dim_m1;
        let dim_0 = self.dim_0 + other.dim_0;
        let mut d = Mat::zero(dim_0, dim_m1);
        for i in 0..self.dim_0 {
            for j in 0..self.dim_m1 {
                d.set(i, j, self.d.at(i, j).clone());
            }
        }
        for i in 0..other.dim_0 {
            for j in 0..other.dim_m1 {
                d.set(self.dim_0 + i, self.dim_m1 + j, other.d.at(i, j).clone());
            }
        }
        TwoTermComplex { dim_m1, dim_0, d }
    }
}

/// True iff `(f_m1, f_0)` is a cochain map `src -> dst`, i.e.
/// `dst.d . f_m1 = f_0 . src.d` exactly.
pub fn is_chain_map(
    f_m1: &Mat,
    f_0: &Mat,
    src: &TwoTermComplex,
    dst: &TwoTermComplex,
) -> Result<bool, Error> {
    if f_m1.rows() != dst.dim_m1
        || f_m1.cols() != src.dim_m1
        || f_0.rows() != dst.dim_0
        || f_0.cols() != src.dim_0
    {
        return Err(Error::ShapeMismatch("cochain map blocks do not fit the complexes".into()));
    }
    Ok(dst.d.mul(f_m1) == f_0.mul(&src.d))
}

/// Degree-graded multilinear map given by a dense structure-constant tensor.
///
/// `tensor` is indexed by one basis index per argument slot followed by the
/// output index, row-major. Slot groups listed in `symmetric_slots` are
/// stored redundantly and required to be invariant under slot permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiMap {
    pub arg_degrees: Vec<Deg>,
    pub arg_dims: Vec<usize>,
    /// -2 is allowed and forces the zero map (the target space is zero).
    pub out_degree: i8,
    pub out_dim: usize,
    pub tensor: Vec<Rat>,
    pub symmetric_slots: Vec<Vec<usize>>,
}

impl MultiMap {
    pub fn zero(
        arg_degrees: Vec<Deg>,
        arg_dims: Vec<usize>,
        out_degree: i8,
        out_dim: usize,
    ) -> Self {
        assert_eq!(arg_degrees.len(), arg_dims.len());
        let len = arg_dims.iter().product::<usize>() * out_dim;
        MultiMap {
            arg_degrees,
            arg_dims,
            out_degree,
            out_dim,
            tensor: vec![Rat::zero(); len],
            symmetric_slots: Vec::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arg_degrees.len()
    }

    /// Total degree of the map: out - sum of argument degrees.
    pub fn degree(&self) -> i8 {
        self.out_degree - self.arg_degrees.iter().map(|d| d.as_i8()).sum::<i8>()
    }

    fn offset(&self, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arity());
        let mut idx = 0usize;
        for (k, &a) in args.iter().enumerate() {
            debug_assert!(a < self.arg_dims[k]);
            idx = idx * self.arg_dims[k] + a;
        }
        idx * self.out_dim
    }

    /// Output coefficients on a basis tuple.
    pub fn eval_basis(&self, args: &[usize]) -> &[Rat] {
        let o = self.offset(args);
        &self.tensor[o..o + self.out_dim]
    }

    pub fn entry(&self, args: &[usize], out: usize) -> &Rat {
        &self.tensor[self.offset(args) + out]
    }

    pub fn set_entry(&mut self, args: &[usize], out: usize, v: Rat) {
        let o = self.offset(args) + out;
        self.tensor[o] = v;
    }

    pub fn add_entry(&mut self, args: &[usize], out: usize, v: &Rat) {
        let o = self.offset(args) + out;
        self.tensor[o] = self.tensor[o].clone() + v;
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, other: &MultiMap) -> MultiMap {
        assert_eq!(self.arg_dims, other.arg_dims);
        assert_eq!(self.out_dim, other.out_dim);
        let mut out = self.clone();
        for (a, b) in out.tensor.iter_mut().zip(other.tensor.iter()) {
            *a = a.clone() + b;
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> MultiMap {
        let mut out = self.clone();
        for a in out.tensor.iter_mut() {
            *a = a.clone() * s;
        }
        out
    }

    /// Multilinear contraction against coefficient vectors, one per slot.
    pub fn evaluate(&self, args: &[Vec<Rat>]) -> Result<Vec<Rat>, Error> {
        if args.len() != self.arity() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} arguments, got {}",
                self.arity(),
                args.len()
            )));
        }
        for (k, a) in args.iter().enumerate() {
            if a.len() != self.arg_dims[k] {
                return Err(Error::ShapeMismatch(format!(
                    "argument {k} has length {}, expected {}",
                    a.len(),
                    self.arg_dims[k]
                )));
            }
        }
        let mut out = vec![Rat::zero(); self.out_dim];
        if self.out_dim == 0 {
            return Ok(out);
        }
        for idx in basis_tuples(&self.arg_dims) {
            let mut coeff = Rat::new(1.into(), 1.into());
            let mut zero = false;
            for (k, &i) in idx.iter().enumerate() {
                if args[k][i].is_zero() {
                    zero = true;
                    break;
                }
                coeff *= &args[k][i];
            }
            if zero {
                continue;
            }
            let vals = self.eval_basis(&idx);
            for (o, v) in vals.iter().enumerate() {
                if !v.is_zero() {
                    out[o] += &coeff * v;
                }
            }
        }
        Ok(out)
    }

    /// Checks the declared symmetric slot groups.
    pub fn symmetry_holds(&self) -> bool {
        for group in &self.symmetric_slots {
            for w in group.windows(2) {
                let (s, t) = (w[0], w[1]);
                if self.arg_dims[s] != self.arg_dims[t] {
                    return false;
                }
                let mut idx = vec![0usize; self.arity()];
                loop {
                    let mut swapped = idx.clone();
                    swapped.swap(s, t);
                    for o in 0..self.out_dim {
                        if self.entry(&idx, o) != self.entry(&swapped, o) {
                            return false;
                        }
                    }
                    let mut k = self.arity();
                    let mut done = true;
                    while k > 0 {
                        k -= 1;
                        idx[k] += 1;
                        if idx[k] < self.arg_dims[k] {
                            done = false;
                            break;
                        }
                        idx[k] = 0;
                    }
                    if done {
                        break;
                    }
                }
            }
        }
        true
    }
}

/// Iterates over all basis multi-indices of the given dims.
pub fn basis_tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &d in dims {
        let mut next = Vec::with_capacity(out.len() * d);
        for t in &out {
            for i in 0..d {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

/// The homotopy coboundary `d(h)` of a degree `-1` multilinear map, on a
/// requested argument-degree block.
///
/// `d(h)(x_1,...,x_m) = d(h(x_1,...,x_m))
///    + sum_i (-1)^{|x_1|+...+|x_{i-1}|} h(x_1,...,d x_i,...,x_m)`,
/// where each term is kept only when its degrees match `h`'s slots; maps
/// into degree -2 are zero.
pub fn homotopy_coboundary(
    h: &MultiMap,
    slot_spaces: &[&TwoTermComplex],
    out_space: &TwoTermComplex,
    target_degrees: &[Deg],
) -> Result<MultiMap, Error> {
    if h.degree() != -1 {
        return Err(Error::DegreeMismatch(format!(
            "homotopy has degree {}, expected -1",
            h.degree()
        )));
    }
    if slot_spaces.len() != h.arity() || target_degrees.len() != h.arity() {
        return Err(Error::ShapeMismatch("slot count mismatch".into()));
    }
    for (k, sp) in slot_spaces.iter().enumerate() {
        if sp.dim(h.arg_degrees[k]) != h.arg_dims[k] {
            return Err(Error::ShapeMismatch(format!("slot {k} dimension differs")));
        }
    }
    let target_total: i8 = target_degrees.iter().map(|d| d.as_i8()).sum();
    let out_degree = target_total + h.degree() + 1;
    let arg_dims: Vec<usize> =
        target_degrees.iter().zip(slot_spaces).map(|(&d, sp)| sp.dim(d)).collect();
    let out_dim = match out_degree {
        0 => out_space.dim_0,
        -1 => out_space.dim_m1,
        _ => 0,
    };
    let mut result = MultiMap::zero(target_degrees.to_vec(), arg_dims.clone(), out_degree, out_dim);
    if out_dim == 0 {
        return Ok(result);
    }

    // d . h term: applicable when the target block matches h's own block and
    // h lands in degree -1.
    if target_degrees == h.arg_degrees.as_slice() && h.out_degree == -1 {
        for t in basis_tuples(&arg_dims) {
            let hv = h.eval_basis(&t);
            for o in 0..out_dim {
                let mut acc = Rat::zero();
                for (c, coeff) in hv.iter().enumerate() {
                    if !coeff.is_zero() {
                        acc += out_space.d.at(o, c) * coeff;
                    }
                }
                if !acc.is_zero() {
                    result.add_entry(&t, o, &acc);
                }
            }
        }
    }

    // h(..., d x_i, ...) terms: slot i of the target is degree -1 where h
    // expects degree 0, all other slots agree.
    for i in 0..h.arity() {
        if target_degrees[i] != Deg::M1 || h.arg_degrees[i] != Deg::Z {
            continue;
        }
        let block_matches = (0..h.arity())
            .all(|k| k == i || target_degrees[k] == h.arg_degrees[k]);
        if !block_matches || h.out_degree != out_degree {
            continue;
        }
        let parity = target_degrees[..i].iter().filter(|d| d.is_odd()).count();
        let sign = if parity % 2 == 0 { Rat::new(1.into(), 1.into()) } else { -Rat::new(1.into(), 1.into()) };
        for t in basis_tuples(&arg_dims) {
            // expand d x_i over the degree-0 basis
            for c in 0..slot_spaces[i].dim_0 {
                let dcoef = slot_spaces[i].d.at(c, t[i]);
                if dcoef.is_zero() {
                    continue;
                }
                let mut ht = t.clone();
                ht[i] = c;
                let hv = h.eval_basis(&ht);
                for o in 0..out_dim {
                    if !hv[o].is_zero() {
                        result.add_entry(&t, o, &(&sign * dcoef * &hv[o]));
                    }
                }
            }
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn line_complex() -> TwoTermComplex {
        // Q -id-> Q
        TwoTermComplex::new(1, 1, Mat::identity(1)).unwrap()
    }

    #[test]
    fn chain_map_examples() {
        let l = line_complex();
        assert!(is_chain_map(&Mat::identity(1), &Mat::identity(1), &l, &l).unwrap());
        let src = TwoTermComplex::concentrated(1);
        assert!(is_chain_map(&Mat::zero(1, 0), &Mat::identity(1), &src, &l).unwrap());
        // f_m1 = 1, f_0 = 0 fails: d . 1 != 0
        assert!(!is_chain_map(&Mat::identity(1), &Mat::zero(1, 1), &l, &l).unwrap());
    }

    #[test]
    fn unary_homotopy_coboundary_blocks() {
        // theta : L^0 -> L^-1 on the line complex; d(theta) has blocks
        // d.theta on degree 0 and theta.d on degree -1.
        let l = line_complex();
        let mut theta = MultiMap::zero(vec![Deg::Z], vec![1], -1, 1);
        theta.set_entry(&[0], 0, rat(5));
        let block0 = homotopy_coboundary(&theta, &[&l], &l, &[Deg::Z]).unwrap();
        assert_eq!(block0.entry(&[0], 0), &rat(5));
        let blockm1 = homotopy_coboundary(&theta, &[&l], &l, &[Deg::M1]).unwrap();
        assert_eq!(blockm1.entry(&[0], 0), &rat(5));
    }

    #[test]
    fn coboundary_of_zero_is_zero_and_linear() {
        let l = line_complex();
        let z = MultiMap::zero(vec![Deg::Z, Deg::Z], vec![1, 1], -1, 1);
        let d = homotopy_coboundary(&z, &[&l, &l], &l, &[Deg::Z, Deg::Z]).unwrap();
        assert!(d.is_zero());
        let mut h = MultiMap::zero(vec![Deg::Z, Deg::Z], vec![1, 1], -1, 1);
        h.set_entry(&[0, 0], 0, rat(3));
        let d1 = homotopy_coboundary(&h, &[&l, &l], &l, &[Deg::Z, Deg::Z]).unwrap();
        let d2 = homotopy_coboundary(&h.scale(&rat(2)), &[&l, &l], &l, &[Deg::Z, Deg::Z]).unwrap();
        assert_eq!(d1.scale(&rat(2)), d2);
    }

    #[test]
    fn evaluate_is_multilinear() {
        let mut m = MultiMap::zero(vec![Deg::Z, Deg::Z], vec![2, 2], 0, 2);
        m.set_entry(&[0, 0], 1, rat(1)); // m(e1,e1) = e2
        let e1 = vec![rat(1), rat(0)];
        let e2 = vec![rat(0), rat(1)];
        let zero = vec![rat(0), rat(0)];
        assert_eq!(m.evaluate(&[e1.clone(), e1.clone()]).unwrap(), vec![rat(0), rat(1)]);
        assert_eq!(m.evaluate(&[zero.clone(), e1.clone()]).unwrap(), vec![rat(0), rat(0)]);
        // m(u+v, w) = m(u,w) + m(v,w)
        let sum = vec![rat(1), rat(1)];
        let lhs = m.evaluate(&[sum, e1.clone()]).unwrap();
        let a = m.evaluate(&[e1.clone(), e1.clone()]).unwrap();
        let b = m.evaluate(&[e2, e1]).unwrap();
        let rhs: Vec<Rat> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        assert_eq!(lhs, rhs);
    }
}
