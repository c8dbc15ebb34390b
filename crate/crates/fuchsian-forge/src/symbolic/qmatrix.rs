//! 2x2 matrices in split-quaternion coordinates over the symbolic tower.
//!
//! A matrix is stored as four coordinates `(q0, q1, q2, q3)` with respect to
//! the basis `E, I, P, Q` of the 2x2 matrix algebra, where
//!
//! ```text
//! E = [1 0; 0 1],   I = [1 0; 0 -1],   P = [0 2; 0 0],   Q = [0 0; 2 0],
//! ```
//!
//! so the matrix itself is `[q0 + q1, 2 q2; 2 q3, q0 - q1]`.  (`P` and `Q`
//! are the sum and difference of the usual split generators `J = [0 1; 1 0]`
//! and `K = [0 1; -1 0]`.)  The product rule below is the expansion of the
//! 2x2 product in these coordinates; the unit tests pin it against direct
//! 2x2 multiplication on random rational matrices.

use crate::symbolic::tower::TowerElement;

/// A 2x2 matrix in split-quaternion coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    coords: [TowerElement; 4],
}

impl QMatrix {
    pub fn new(coords: [TowerElement; 4]) -> Self {
        QMatrix { coords }
    }

    /// The identity matrix `(1, 0, 0, 0)`.
    pub fn identity() -> Self {
        QMatrix {
            coords: [
                TowerElement::one(),
                TowerElement::zero(),
                TowerElement::zero(),
                TowerElement::zero(),
            ],
        }
    }

    pub fn coords(&self) -> &[TowerElement; 4] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &TowerElement {
        &self.coords[i]
    }

    /// Matrix product in coordinates:
    ///
    /// ```text
    /// (ab)0 = a0 b0 + a1 b1 + 2 a2 b3 + 2 a3 b2
    /// (ab)1 = a0 b1 + a1 b0 + 2 a2 b3 - 2 a3 b2
    /// (ab)2 = a0 b2 + a2 b0 + a1 b2 - a2 b1
    /// (ab)3 = a0 b3 + a3 b0 + a3 b1 - a1 b3
    /// ```
    pub fn mul(&self, other: &Self) -> Self {
        let [a0, a1, a2, a3] = &self.coords;
        let [b0, b1, b2, b3] = &other.coords;
        let two_a2b3 = a2.mul(b3).scale_int(2);
        let two_a3b2 = a3.mul(b2).scale_int(2);
        let out0 = a0.mul(b0).add(&a1.mul(b1)).add(&two_a2b3).add(&two_a3b2);
        let out1 = a0.mul(b1).add(&a1.mul(b0)).add(&two_a2b3).sub(&two_a3b2);
        let out2 = a0.mul(b2).add(&a2.mul(b0)).add(&a1.mul(b2)).sub(&a2.mul(b1));
        let out3 = a0.mul(b3).add(&a3.mul(b0)).add(&a3.mul(b1)).sub(&a1.mul(b3));
        QMatrix {
            coords: [out0, out1, out2, out3],
        }
    }

    /// The matrix trace, `2 q0`.
    pub fn trace(&self) -> TowerElement {
        self.coords[0].scale_int(2)
    }

    /// The determinant, `q0^2 - q1^2 - 4 q2 q3`.
    pub fn det_form(&self) -> TowerElement {
        let [q0, q1, q2, q3] = &self.coords;
        q0.mul(q0)
            .sub(&q1.mul(q1))
            .sub(&q2.mul(q3).scale_int(4))
    }

    /// The adjugate `(q0, -q1, -q2, -q3)`; for determinant 1 this is the
    /// inverse.
    pub fn adjugate(&self) -> Self {
        let [q0, q1, q2, q3] = &self.coords;
        QMatrix {
            coords: [q0.clone(), q1.neg(), q2.neg(), q3.neg()],
        }
    }

    /// Conjugation by `I = diag(1, -1)`, which negates the two off-diagonal
    /// coordinates.  This carries each generator to its mirror partner.
    pub fn reflect(&self) -> Self {
        let [q0, q1, q2, q3] = &self.coords;
        QMatrix {
            coords: [q0.clone(), q1.clone(), q2.neg(), q3.neg()],
        }
    }
}
