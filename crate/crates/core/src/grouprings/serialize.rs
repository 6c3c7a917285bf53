//! JSON form of ring elements: a header naming the group and coefficient
//! ring, then the coefficients as strings in enumeration order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::GroupSpec;

use super::group_ring::GroupRing;
use super::ring::{CoefficientRing, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedElement {
    pub group: Option<GroupSpec>,
    pub ring: CoefficientRing,
    pub coeffs: Vec<String>,
}

impl<R: Ring> GroupRing<R> {
    pub fn serialize_element(&self, e: &[R::Elem]) -> SerializedElement {
        SerializedElement {
            group: Some(self.spec()),
            ring: self.coefficient_ring().descriptor(),
            coeffs: e.iter().map(|c| self.coefficient_ring().render(c)).collect(),
        }
    }

    /// Inverse of [`GroupRing::serialize_element`] for integer-valued
    /// coefficient rings.
    pub fn deserialize_element(&self, s: &SerializedElement) -> Result<Vec<R::Elem>> {
        if s.group != Some(self.spec()) || s.ring != self.coefficient_ring().descriptor() {
            return Err(Error::AmbientMismatch);
        }
        let coeffs = s
            .coeffs
            .iter()
            .map(|c| {
                c.parse::<i64>()
                    .map(|v| self.coefficient_ring().from_int(v))
                    .map_err(|_| Error::InvalidParameter(format!("unparsable coefficient {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.from_coeffs(coeffs)
    }
}
