use serde::{Deserialize, Serialize};

use cliffchar::{CharPoly, Multivector, Rational, Signature};

/// What `charpoly`, `det` and `inverse` print.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub signature: [usize; 2],
    pub input: String,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "C")]
    pub c: Vec<String>,
    pub det: String,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub inverse: Option<String>,
    pub micros: u64,
}

impl ResultDocument {
    pub fn new(sig: Signature, input: &str, poly: &CharPoly, method: &str) -> Self {
        ResultDocument {
            signature: [sig.p(), sig.q()],
            input: input.to_string(),
            n: poly.degree(),
            c: poly.coeffs().iter().map(ToString::to_string).collect(),
            det: poly.det().to_string(),
            method: method.to_string(),
            inverse: None,
            micros: 0,
        }
    }

    pub fn with_inverse(mut self, inverse: &Multivector) -> Self {
        self.inverse = Some(inverse.to_string());
        self
    }

    pub fn coefficients(&self) -> Result<Vec<Rational>, cliffchar::Error> {
        self.c.iter().map(|s| s.parse()).collect()
    }
}

pub fn format_number(r: &Rational, float: bool) -> String {
    if float {
        format!("{}", r.to_f64())
    } else {
        r.to_string()
    }
}

pub fn format_list(values: &[Rational], float: bool) -> String {
    let parts: Vec<String> = values.iter().map(|v| format_number(v, float)).collect();
    format!("[{}]", parts.join(","))
}

/// Multivector text with coefficients rounded for display.
pub fn format_multivector(u: &Multivector, float: bool) -> String {
    if !float {
        return u.to_string();
    }
    let mut out = String::new();
    for (blade, c) in u.terms() {
        let v = c.to_f64();
        let (sign, mag) = if v < 0.0 { ("-", -v) } else { ("+", v) };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if blade.grade() == 0 {
            out.push_str(&mag.to_string());
        } else {
            out.push_str(&format!("{mag}*{blade}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_field_order() {
        let sig = Signature::new(2, 0).unwrap();
        let poly = cliffchar::charpoly(&Multivector::identity(sig));
        let doc = ResultDocument::new(sig, "1", &poly, "recursive");
        assert_eq!(
            serde_json::to_string(&doc).unwrap(),
            r#"{"signature":[2,0],"input":"1","N":2,"C":["2","-1"],"det":"1","method":"recursive","micros":0}"#
        );
        let back: ResultDocument = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.coefficients().unwrap(), poly.coeffs());
    }

    #[test]
    fn float_display() {
        let sig = Signature::new(2, 0).unwrap();
        let u = crate::expr::parse_expression("1/2 - 3/4*e12", sig).unwrap();
        assert_eq!(format_multivector(&u, true), "0.5 - 0.75*e12");
        assert_eq!(format_multivector(&u, false), "1/2 - 3/4*e12");
        assert_eq!(format_multivector(&Multivector::zero(sig), true), "0");
        assert_eq!(format_list(&[Rational::new(1, 4)], true), "[0.25]");
    }
}
