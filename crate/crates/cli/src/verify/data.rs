//! Expected values shipped with the binary.

use serde::de::DeserializeOwned;
use serde::Deserialize;

use uas_core::operad::tau_composition;
use uas_core::symmetric::Permutation;
use uas_core::{Element, Rational};

fn load<T: DeserializeOwned>(name: &str, text: &str) -> T {
    toml::from_str(text).unwrap_or_else(|e| panic!("embedded {name}: {e}"))
}

#[derive(Deserialize)]
pub struct Truncation {
    pub gamma: Vec<u64>,
}

#[derive(Deserialize)]
pub struct TruncationCharacter {
    pub k: usize,
    pub n: usize,
    pub character: String,
}

#[derive(Deserialize)]
pub struct Generated {
    pub module: String,
    pub arity: usize,
    pub character: String,
}

#[derive(Deserialize)]
pub struct Forced {
    pub module: String,
    pub character: String,
}

#[derive(Deserialize)]
pub struct Characters {
    pub truncation: Vec<TruncationCharacter>,
    pub generated: Vec<Generated>,
    pub forced: Vec<Forced>,
}

/// `τ_blocks ∗ σ`
#[derive(Clone, Deserialize)]
pub struct Term {
    pub blocks: Vec<usize>,
    pub sigma: Vec<usize>,
}

impl Term {
    pub fn element(&self) -> Element {
        let sigma = Permutation::new(self.sigma.clone()).expect("embedded permutation");
        tau_composition::<Rational>(&self.blocks)
            .act(&sigma)
            .expect("embedded term")
    }
}

pub fn sum(terms: &[Term]) -> Element {
    let mut it = terms.iter().map(Term::element);
    let first = it.next().expect("nonempty sum");
    it.fold(first, |acc, t| acc.add(&t).expect("same arity"))
}

#[derive(Deserialize)]
pub struct Component {
    pub lambda: String,
    pub coefficients: Vec<i64>,
}

#[derive(Deserialize)]
pub struct Recovery {
    pub terms: Vec<Term>,
    pub twist: String,
    pub multiplier: String,
    pub scale: String,
}

#[derive(Deserialize)]
pub struct TopGenerator {
    pub arity: usize,
    pub terms: Vec<Term>,
}

#[derive(Deserialize)]
pub struct Generators {
    pub basis: Vec<Term>,
    pub component: Vec<Component>,
    pub recovery: Recovery,
    pub top_generator: Vec<TopGenerator>,
}

impl Generators {
    /// `Σ cᵢ θᵢ` over the listed basis.
    pub fn zeta(&self, c: &Component) -> Element {
        self.basis
            .iter()
            .zip(&c.coefficients)
            .fold(Element::zero(4), |acc, (t, &k)| {
                acc.add(&t.element().scale(&Rational::from_integer(k.into())))
                    .expect("arity 4")
            })
    }

    pub fn zeta_of(&self, lambda: &str) -> Element {
        let c = self
            .component
            .iter()
            .find(|c| c.lambda == lambda)
            .unwrap_or_else(|| panic!("no generator for {lambda}"));
        self.zeta(c)
    }

    pub fn top(&self, arity: usize) -> Element {
        let g = self
            .top_generator
            .iter()
            .find(|g| g.arity == arity)
            .unwrap_or_else(|| panic!("no generator in arity {arity}"));
        sum(&g.terms)
    }
}

#[derive(Deserialize)]
pub struct LieTruncation {
    pub lie_dim: usize,
    pub sum_dim: usize,
    pub quotient_dim: u64,
    pub gamma: Vec<u64>,
    pub gen_degree: usize,
}

#[derive(Deserialize)]
pub struct GradeFourRow {
    pub module: String,
    pub u: u64,
    pub gd: usize,
}

#[derive(Deserialize)]
pub struct GradeFour {
    pub ideals: usize,
    pub maximal: Vec<String>,
    pub pair_gamma: Vec<u64>,
    pub pair_gen_degree: usize,
    pub series: usize,
    pub row: Vec<GradeFourRow>,
}

#[derive(Deserialize)]
pub struct GradeFive {
    pub series: usize,
    pub excluded_u: Vec<u64>,
    pub x: Vec<u64>,
    pub y: Vec<u64>,
    pub z: Vec<u64>,
}

#[derive(Deserialize)]
pub struct Identities {
    pub field: u64,
    pub grassmann: Vec<u64>,
    pub upper_triangular_2: u64,
}

#[derive(Deserialize)]
pub struct PairTop {
    pub character: String,
    pub gd: Vec<usize>,
}

#[derive(Deserialize)]
pub struct PairBottom {
    pub module: String,
    pub count: String,
    pub top: Vec<PairTop>,
}

#[derive(Deserialize)]
pub struct Pairs {
    pub none: Vec<String>,
    pub bottom: Vec<PairBottom>,
}

pub fn truncation() -> Truncation {
    load("truncation", include_str!("../../data/truncation.toml"))
}

pub fn characters() -> Characters {
    load("characters", include_str!("../../data/characters.toml"))
}

pub fn generators() -> Generators {
    load("generators", include_str!("../../data/generators.toml"))
}

pub fn lie_truncation() -> LieTruncation {
    load(
        "lie_truncation",
        include_str!("../../data/lie_truncation.toml"),
    )
}

pub fn grade_four() -> GradeFour {
    load("grade_four", include_str!("../../data/grade_four.toml"))
}

pub fn grade_five() -> GradeFive {
    load("grade_five", include_str!("../../data/grade_five.toml"))
}

pub fn identities() -> Identities {
    load("identities", include_str!("../../data/identities.toml"))
}

pub fn pairs() -> Pairs {
    load("pairs", include_str!("../../data/pairs.toml"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_files_parse() {
        assert_eq!(truncation().gamma.len(), 7);
        assert_eq!(characters().forced.len(), 11);
        let g = generators();
        assert_eq!(g.basis.len(), 9);
        assert_eq!(g.top(6).arity(), 6);
        assert_eq!(grade_four().row.len(), 15);
        assert_eq!(grade_five().series, 55);
        assert_eq!(identities().grassmann.len(), 6);
        let p = pairs();
        assert_eq!(p.none.len() + p.bottom.len(), 14);
        assert_eq!(lie_truncation().lie_dim, 688);
    }
}
