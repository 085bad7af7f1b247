//! Named bialgebra set-ups: a model together with its distinguished
//! product and coproduct, its generating coproducts, and a splitting scheme.

use crate::error::{Error, Result};
use crate::models::{model_by_name, Bialgebra};
use crate::scheme::SplittingScheme;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preset {
    pub name: &'static str,
    pub model: &'static str,
    /// Product used for convolution and PBW reassembly.
    pub product: &'static str,
    /// Coproduct used for convolution and iterated coproducts.
    pub coproduct: &'static str,
    /// Reduced coproducts whose common kernel is the primitive part.
    pub generating: &'static [&'static str],
    pub scheme: Option<SplittingScheme>,
    pub alphabet: usize,
}

impl Preset {
    pub fn build(&self) -> Box<dyn Bialgebra> {
        self.build_with(self.alphabet)
    }

    pub fn build_with(&self, alphabet: usize) -> Box<dyn Bialgebra> {
        model_by_name(self.model, alphabet).expect("preset models exist")
    }

    pub fn scheme(&self) -> Result<&SplittingScheme> {
        self.scheme
            .as_ref()
            .ok_or_else(|| Error::Unsupported(format!("unsupported cooperad: {} has no splitting scheme", self.name)))
    }
}

const fn preset(
    name: &'static str,
    model: &'static str,
    product: &'static str,
    coproduct: &'static str,
    generating: &'static [&'static str],
    scheme: Option<SplittingScheme>,
    alphabet: usize,
) -> Preset {
    Preset { name, model, product, coproduct, generating, scheme, alphabet }
}

/// All presets, by CLI name.
pub fn presets() -> Vec<Preset> {
    use SplittingScheme::*;
    vec![
        preset("as", "as", "concat", "deconcat", &["deconcat"], Some(Coassociative { coproduct: "deconcat", product: "concat" }), 2),
        preset("classical", "as", "concat", "shuffle", &["shuffle"], Some(Classical { coproduct: "shuffle", product: "concat" }), 2),
        preset("dup", "dup", "right", "delta", &["delta"], Some(Coassociative { coproduct: "delta", product: "right" }), 1),
        preset("dup-bi", "dup", "left", "delta_left", &["delta_left", "delta_right"], Some(DupDual), 1),
        preset("mag", "mag", "mul", "dual", &["dual"], Some(MagDual), 1),
        preset("mag-livernet", "mag", "mul", "livernet", &["livernet"], None, 1),
        preset("mag-hopf", "mag", "mul", "hopf", &["hopf"], None, 1),
        preset("zinb", "zinb", "left", "deconcat", &["deconcat"], None, 2),
        preset("lie", "lie", "bracket", "cobracket", &["cobracket"], None, 2),
        preset("nil", "nil", "concat", "deconcat", &["deconcat"], None, 2),
    ]
}

pub fn preset_by_name(name: &str) -> Result<Preset> {
    presets().into_iter().find(|p| p.name == name).ok_or_else(|| Error::unknown("model", name))
}
