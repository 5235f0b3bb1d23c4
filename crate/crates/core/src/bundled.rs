//! The bundled example algebras and representations used across the test
//! suites and shipped as definition files with the CLI.

use crate::graded::{Deg, MultiMap, TwoTermComplex};
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::{rat, Mat, Rat};
use num_traits::{One, Zero};

pub fn basis_vec(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = Rat::one();
    v
}

/// Two-dimensional algebra with the single square `[e1,e1] = e2`.
pub fn g2() -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(2, &[(0, 0, 1, rat(1))])
}

/// Three-dimensional algebra `[e1,e3] = e3, [e2,e3] = e3`: its symmetrised
/// bracket pairs against the alternating 3-bracket ingredients without the
/// 3-bracket itself surviving the cyclic sum.
pub fn g3() -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(3, &[(0, 2, 2, rat(1)), (1, 2, 2, rat(1))])
}

/// Four-dimensional algebra with a genuinely nonzero alternating 3-bracket
/// after skew-symmetrisation:
/// `[e1,e2] = e2, [e2,e1] = -e2, [e1,e3] = -e3, [e2,e3] = e4`.
pub fn g4() -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(
        4,
        &[
            (0, 1, 1, rat(1)),
            (1, 0, 1, rat(-1)),
            (0, 2, 2, rat(-1)),
            (1, 2, 3, rat(1)),
        ],
    )
}

/// The two-dimensional nonabelian Lie algebra `[e1,e2] = e2`, as a Leibniz
/// algebra with zero symmetrised part.
pub fn lie2() -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(2, &[(0, 1, 1, rat(1)), (1, 0, 1, rat(-1))])
}

/// A two-term complex `Q -0-> Q` whose degree map is not injective.
pub fn noninjective_complex() -> TwoTermComplex {
    TwoTermComplex::new(1, 1, Mat::zero(1, 1)).unwrap()
}

/// Zero bilinear tensor of the given block signature.
pub fn zero_block(degs: [Deg; 2], dims: [usize; 2], out_degree: i8, out_dim: usize) -> MultiMap {
    MultiMap::zero(degs.to_vec(), dims.to_vec(), out_degree, out_dim)
}
