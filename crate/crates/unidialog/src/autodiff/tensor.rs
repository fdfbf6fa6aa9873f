//! Dense row-major tensors.

use crate::autodiff::scalar::Scalar;
use crate::error::{Error, Result};

/// Handle into the tape a tensor was recorded on.
pub type NodeId = usize;

/// Dense numeric array with shape, optionally attached to a differentiation tape.
///
/// Data is row-major. A tensor is immutable once recorded; tensors detached
/// from any tape (`node_id() == None`) serve as parameters, constants, and
/// plain numeric buffers.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorValue<S: Scalar> {
    shape: Vec<usize>,
    data: Vec<S>,
    node_id: Option<NodeId>,
}

impl<S: Scalar> TensorValue<S> {
    pub fn new(shape: Vec<usize>, data: Vec<S>) -> Result<Self> {
        let numel: usize = shape.iter().product();
        if numel != data.len() || shape.iter().any(|&d| d == 0) {
            return Err(Error::ShapeMismatch {
                op: "tensor_new",
                lhs: shape,
                rhs: vec![data.len()],
            });
        }
        Ok(TensorValue {
            shape,
            data,
            node_id: None,
        })
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let numel: usize = shape.iter().product();
        TensorValue {
            shape,
            data: vec![S::zero(); numel],
            node_id: None,
        }
    }

    pub fn scalar(v: S) -> Self {
        TensorValue {
            shape: vec![1],
            data: vec![v],
            node_id: None,
        }
    }

    pub fn from_rows(rows: &[Vec<S>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::ShapeMismatch {
                    op: "from_rows",
                    lhs: vec![r, c],
                    rhs: vec![row.len()],
                });
            }
            data.extend_from_slice(row);
        }
        TensorValue::new(vec![r, c], data)
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    /// Mutable access for out-of-tape numerics (optimizer updates, init).
    /// Tensors already recorded on a tape must not be mutated.
    pub fn data_mut(&mut self) -> &mut [S] {
        debug_assert!(self.node_id.is_none(), "mutating a recorded tensor");
        &mut self.data
    }

    pub fn node_id(&self) -> Option<NodeId> {
        self.node_id
    }

    pub(crate) fn with_node(mut self, id: NodeId) -> Self {
        self.node_id = Some(id);
        self
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    pub fn is_scalar(&self) -> bool {
        self.numel() == 1
    }

    pub fn rows(&self) -> usize {
        self.shape[0]
    }

    pub fn cols(&self) -> usize {
        *self.shape.last().unwrap()
    }

    /// 2-D element access.
    pub fn at(&self, r: usize, c: usize) -> S {
        debug_assert_eq!(self.shape.len(), 2);
        self.data[r * self.cols() + c]
    }

    pub fn scalar_value(&self) -> S {
        debug_assert!(self.is_scalar());
        self.data[0]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Strips the tape handle, keeping shape and data.
    pub fn detached(&self) -> Self {
        TensorValue {
            shape: self.shape.clone(),
            data: self.data.clone(),
            node_id: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_data_consistency_enforced() {
        assert!(TensorValue::<f64>::new(vec![2, 3], vec![0.0; 6]).is_ok());
        assert!(TensorValue::<f64>::new(vec![2, 3], vec![0.0; 5]).is_err());
        assert!(TensorValue::<f64>::new(vec![0], vec![]).is_err());
    }

    #[test]
    fn row_major_indexing() {
        let t = TensorValue::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        assert_eq!(t.at(0, 1), 2.0);
        assert_eq!(t.at(1, 0), 3.0);
        assert_eq!(t.data(), &[1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn generic_over_f32() {
        let t = TensorValue::<f32>::scalar(1.5);
        assert!(t.is_scalar());
        assert_eq!(t.scalar_value(), 1.5f32);
    }
}
