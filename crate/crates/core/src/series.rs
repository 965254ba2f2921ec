//! Growth of quotient operads in γ-vector form: `dim 𝒫(n) = Σ γₖ C(n,k)`
//! and `G(t) = Σ γₖ tᵏ/(1−t)^{k+1}`.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::binomial;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::{
    classify_gkdim, completion_types, module_decomposition, sequence_classes, IdealWindow,
};
use crate::truncation::{gamma, truncation_kernel};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaSeries {
    gamma: Vec<u64>,
}

impl GammaSeries {
    /// Trailing zeros are dropped.
    pub fn new(mut gamma: Vec<u64>) -> Self {
        while gamma.last() == Some(&0) {
            gamma.pop();
        }
        GammaSeries { gamma }
    }

    pub fn gamma(&self) -> &[u64] {
        &self.gamma
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.is_empty()
    }

    pub fn dims_at(&self, n: usize) -> u128 {
        self.gamma
            .iter()
            .enumerate()
            .filter(|&(k, _)| k <= n)
            .map(|(k, &g)| g as u128 * binomial(n as u128, k as u128))
            .sum()
    }

    /// `Σ γₖ tᵏ/(1−t)^{k+1}`, e.g. `1/(1-t) + t^2/(1-t)^3`.
    pub fn closed_form(&self) -> String {
        let terms: Vec<String> = self
            .gamma
            .iter()
            .enumerate()
            .filter(|(_, &g)| g > 0)
            .map(|(k, &g)| {
                let coeff = if g == 1 { String::new() } else { g.to_string() };
                let power = match k {
                    0 if g == 1 => "1".to_string(),
                    0 => String::new(),
                    1 => "t".to_string(),
                    _ => format!("t^{k}"),
                };
                let den = if k == 0 {
                    "(1-t)".to_string()
                } else {
                    format!("(1-t)^{}", k + 1)
                };
                format!("{coeff}{power}/{den}")
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    pub fn gkdim(&self) -> usize {
        self.gamma.len()
    }

    pub fn grade(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::Invalid("zero series has no grade".into()));
        }
        Ok(self.gamma.len() - 1)
    }

    /// `γ_g / g!`, the leading coefficient of `dim 𝒫(n)` as a polynomial in `n`.
    pub fn leading_lambda(&self) -> Result<Rational> {
        let g = self.grade()?;
        let fact: u64 = (1..=g as u64).product();
        Ok(Rational::new(self.gamma[g].into(), fact.into()))
    }

    pub fn growth(&self) -> String {
        match self.grade() {
            Ok(g) => format!("polynomial, grade {g}"),
            Err(_) => "zero".into(),
        }
    }
}

impl fmt::Display for GammaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gamma.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for GammaSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GammaSeries", 4)?;
        st.serialize_field("gamma", &self.gamma)?;
        st.serialize_field("grade", &self.grade().ok())?;
        st.serialize_field("lambda", &self.leading_lambda().ok().map(|q| q.to_string()))?;
        st.serialize_field("closed_form", &self.closed_form())?;
        st.end()
    }
}

pub fn gamma_series_of_quotient(ideal: &IdealWindow) -> Result<GammaSeries> {
    Ok(GammaSeries::new(ideal.quotient_gamma()?))
}

/// The γ-series of `𝒰𝒜𝓈/ᵈ𝔘`.
pub fn truncation_quotient_series(d: usize) -> GammaSeries {
    GammaSeries::new((0..d).map(gamma).collect())
}

/// `γₖ = 1` for even `k ≤ 2w`, the series of `𝒰𝒜𝓈/(𝒯₃+²ʷ⁺¹𝔘)`.
pub fn grassmann_truncation_series(w: usize) -> GammaSeries {
    GammaSeries::new((0..=2 * w).map(|k| (k % 2 == 0) as u64).collect())
}

/// Every γ-series of grade `g ≤ 5` quotient, sorted and deduplicated.
///
/// Grades up to 4 come from the explicit ideal classification. Grade 5
/// uses character types: `ᵐ𝔘^M` contributes `γ₅ = 44 − dim M` for every
/// proper type `M`, and each admissible prefix contributes one series per
/// completion type at arity 5.
pub fn catalog(g: usize) -> Result<Vec<GammaSeries>> {
    let set: BTreeSet<GammaSeries> = match g {
        0..=4 => classify_gkdim(g + 1, g)?
            .into_iter()
            .map(|c| GammaSeries::new(c.gamma))
            .collect(),
        5 => {
            let base: Vec<u64> = (0..5).map(gamma).collect();
            let whole = module_decomposition(5, &*truncation_kernel(5, 5)?)?;
            let mut set = BTreeSet::new();
            let (_, proper) = completion_types(&Default::default(), &whole);
            for ty in proper {
                let mut v = base.clone();
                v.push(gamma(5) - ty.top.dimension());
                set.insert(GammaSeries::new(v));
            }
            for (prefix, class) in sequence_classes(5)? {
                for ty in &class.types {
                    let mut v = base.clone();
                    for t in &prefix {
                        v[t.arity] -= t.dim() as u64;
                    }
                    v.push(gamma(5) - ty.top.dimension());
                    set.insert(GammaSeries::new(v));
                }
            }
            set
        }
        _ => return Err(Error::Unsupported(format!("catalogue of grade {g}"))),
    };
    let out: Vec<GammaSeries> = set.into_iter().collect();
    if let Some(bad) = out.iter().find(|s| s.gkdim() != g + 1) {
        return Err(Error::Invalid(format!(
            "series {bad} does not have grade {g}"
        )));
    }
    Ok(out)
}

/// Leading constants `γ_g/g!` over the catalogue.
pub fn lambda_set(g: usize) -> Result<BTreeSet<Rational>> {
    catalog(g)?.iter().map(|s| s.leading_lambda()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn evaluation_and_forms() {
        let s = GammaSeries::new(vec![1, 0, 1, 0, 1]);
        assert_eq!(s.dims_at(6), 31);
        assert_eq!(s.dims_at(0), 1);
        assert_eq!(s.closed_form(), "1/(1-t) + t^2/(1-t)^3 + t^4/(1-t)^5");
        assert_eq!(s.leading_lambda().unwrap(), q(1, 24));
        let one = GammaSeries::new(vec![1]);
        assert_eq!(one.closed_form(), "1/(1-t)");
        assert_eq!(one.grade().unwrap(), 0);
        assert_eq!(one.leading_lambda().unwrap(), q(1, 1));
        let u = GammaSeries::new(vec![1, 0, 1, 2, 9]);
        assert_eq!(u.grade().unwrap(), 4);
        assert_eq!(u.leading_lambda().unwrap(), q(9, 24));
        assert_eq!(
            u.closed_form(),
            "1/(1-t) + t^2/(1-t)^3 + 2t^3/(1-t)^4 + 9t^4/(1-t)^5"
        );
        assert!(GammaSeries::new(vec![0, 0]).grade().is_err());
    }

    #[test]
    fn dims_are_monotone_past_the_degree() {
        for s in [
            GammaSeries::new(vec![1, 0, 1, 2, 9, 44]),
            grassmann_truncation_series(3),
        ] {
            for n in s.gkdim()..20 {
                assert!(s.dims_at(n + 1) >= s.dims_at(n));
            }
        }
    }

    #[test]
    fn truncation_quotients() {
        assert_eq!(truncation_quotient_series(5).gamma(), &[1, 0, 1, 2, 9]);
        // dimension of the quotient is n! minus the truncation component
        for n in 0..=6usize {
            let fact: u128 = (1..=n as u128).product();
            let expected = fact - crate::truncation::truncation_dim(5, n) as u128;
            assert_eq!(truncation_quotient_series(5).dims_at(n), expected);
        }
    }

    #[test]
    fn grassmann_family() {
        assert_eq!(grassmann_truncation_series(2).gamma(), &[1, 0, 1, 0, 1]);
        let s = grassmann_truncation_series(3);
        assert_eq!(s.grade().unwrap(), 6);
        assert_eq!(s.leading_lambda().unwrap(), q(1, 720));
    }

    #[test]
    fn json_shape() {
        let s = GammaSeries::new(vec![1, 0, 1, 2, 9]);
        let v: serde_json::Value = serde_json::to_value(&s).unwrap();
        assert_eq!(v["gamma"], serde_json::json!([1, 0, 1, 2, 9]));
        assert_eq!(v["grade"], 4);
        assert_eq!(v["lambda"], "3/8");
    }

    #[test]
    fn low_grade_catalogues() {
        assert_eq!(catalog(0).unwrap(), vec![GammaSeries::new(vec![1])]);
        assert!(catalog(1).unwrap().is_empty());
        assert_eq!(catalog(2).unwrap(), vec![GammaSeries::new(vec![1, 0, 1])]);
        assert_eq!(
            catalog(3).unwrap(),
            vec![GammaSeries::new(vec![1, 0, 1, 2])]
        );
        assert!(catalog(6).is_err());
    }
}
