//! JSON encodings of the algebraic values.
//!
//! * `Poly`: `{"coeffs": ["<scalar>", ...]}` in ascending powers.
//! * `FactoredPoly`: `{"lead": "...", "roots": [["<root>", m], ...]}`.
//! * `ChainDecomposition`: `{"lead": "...", "chains": [["<start>", n], ...]}`.
//! * `NewtonExpansion`: `{"base": "...", "coeffs": ["...", ...]}`.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::diffcalc::NewtonExpansion;
use crate::poly::{FactoredPoly, Poly};
use crate::scalar::Scalar;
use crate::shiftcalc::ChainDecomposition;

impl<S: Scalar> Serialize for Poly<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        let mut st = serializer.serialize_struct("Poly", 1)?;
        st.serialize_field("coeffs", self.coeffs())?;
        st.end()
    }
}

impl<S: Scalar> Serialize for FactoredPoly<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        let mut st = serializer.serialize_struct("FactoredPoly", 2)?;
        st.serialize_field("lead", self.lead())?;
        st.serialize_field("roots", self.roots())?;
        st.end()
    }
}

impl<S: Scalar> Serialize for ChainDecomposition<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        let mut st = serializer.serialize_struct("ChainDecomposition", 2)?;
        st.serialize_field("lead", &self.lead)?;
        st.serialize_field("chains", &self.chains)?;
        st.end()
    }
}

impl<S: Scalar> Serialize for NewtonExpansion<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        let mut st = serializer.serialize_struct("NewtonExpansion", 2)?;
        st.serialize_field("base", &self.base)?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactScalar;
    use crate::shiftcalc::chain_decomposition;

    fn q(n: i64) -> ExactScalar {
        ExactScalar::from_integer(n)
    }

    #[test]
    fn encodings() {
        let p = Poly::new(vec![ExactScalar::ratio(-3, 4), q(0), q(1)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"coeffs":["-3/4","0","1/1"]}"#);
        let f = FactoredPoly::new(q(2), [(q(1), 1), (q(0), 2)]).unwrap();
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"lead":"2/1","roots":[["0",2],["1/1",1]]}"#
        );
        let c = chain_decomposition(&f).unwrap();
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"lead":"2/1","chains":[["0",2],["0",1]]}"#
        );
    }
}
