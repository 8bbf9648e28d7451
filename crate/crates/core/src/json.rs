//! The canonical JSON form of cyclotomic values.
//!
//! `{"order": N, "coeffs": [[num, den], ...], "approx": [re, im]}`; integers
//! that do not fit in an `i64` are written as strings. The decimal annotation
//! uses a process-wide digit count (default 12).

use std::sync::atomic::{AtomicU32, Ordering};

use num::ToPrimitive;
use serde::ser::{Serialize, SerializeStruct, Serializer};
use serde_json::Value;

use crate::cyclotomic::CyclotomicNumber;

static APPROX_DIGITS: AtomicU32 = AtomicU32::new(12);

pub fn set_approx_digits(digits: u32) {
    APPROX_DIGITS.store(digits.max(1), Ordering::Relaxed);
}

pub fn approx_digits() -> u32 {
    APPROX_DIGITS.load(Ordering::Relaxed)
}

fn int_value(n: &num::BigInt) -> Value {
    match n.to_i64() {
        Some(x) => Value::from(x),
        None => Value::from(n.to_string()),
    }
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<[Value; 2]> =
            self.coeffs().iter().map(|c| [int_value(c.numer()), int_value(c.denom())]).collect();
        let approx = self.approx_complex(approx_digits());
        let mut st = s.serialize_struct("CyclotomicNumber", 3)?;
        // fields in sorted order so emitted JSON is canonical
        st.serialize_field("approx", &[approx.re, approx.im])?;
        st.serialize_field("coeffs", &coeffs)?;
        st.serialize_field("order", &self.order())?;
        st.end()
    }
}

/// Serializes through `serde_json::Value`, whose maps are sorted by key.
pub fn to_canonical_string<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    serde_json::to_string_pretty(&v).expect("valid JSON")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let z = CyclotomicNumber::root_of_unity(4, 1);
        let v = serde_json::to_value(&z).unwrap();
        assert_eq!(v["order"], 4);
        assert_eq!(v["coeffs"], serde_json::json!([[0, 1], [1, 1]]));
        let im: f64 = v["approx"][1].as_str().unwrap().parse().unwrap();
        assert!((im - 1.0).abs() < 1e-9);
    }
}
