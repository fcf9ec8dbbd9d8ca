//! Spin-1/2 operators on two sites, basis `(|00>, |01>, |10>, |11>)` with
//! `|0>` = spin up.

use crate::linalg::{ComplexMatrix, ONE, ZERO};

/// Two-site embeddings of `S^z`, `S^+`, `S^-`.
#[derive(Clone, Debug)]
pub struct SpinOperatorSet {
    pub sz1: ComplexMatrix,
    pub sz2: ComplexMatrix,
    pub sp1: ComplexMatrix,
    pub sp2: ComplexMatrix,
    pub sm1: ComplexMatrix,
    pub sm2: ComplexMatrix,
    pub identity: ComplexMatrix,
}

pub fn single_sz() -> ComplexMatrix {
    ComplexMatrix::from_diagonal(&[0.5, -0.5])
}

pub fn single_sp() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[ZERO, ONE], [ZERO, ZERO]])
}

pub fn single_sm() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[ZERO, ZERO], [ONE, ZERO]])
}

pub fn spin_ops() -> SpinOperatorSet {
    let i2 = ComplexMatrix::identity(2);
    let first = |op: &ComplexMatrix| op.kron(&i2);
    let second = |op: &ComplexMatrix| i2.kron(op);
    let (sz, sp, sm) = (single_sz(), single_sp(), single_sm());
    SpinOperatorSet {
        sz1: first(&sz),
        sz2: second(&sz),
        sp1: first(&sp),
        sp2: second(&sp),
        sm1: first(&sm),
        sm2: second(&sm),
        identity: ComplexMatrix::identity(4),
    }
}
