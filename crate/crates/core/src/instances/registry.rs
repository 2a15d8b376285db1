//! Instance configs and the name-keyed registry of instance builders.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::cartan::CartanData;
use super::lattice::build_lattice;
use super::qheis::{build_qheis, ColoredGenerators};
use super::weyl::{build_weyl, WeylGenerators};
use crate::double::{
    DoubleContext, DoubleElement, Generator, GeneratorSet, HeisenbergDouble, RelationContext, SmashAlgebra,
};
use crate::error::{Error, Result};
use crate::pairing::TwistedPairing;
use crate::report::Report;
use crate::twisting::{BiadditiveMap, Shift};

/// A matrix given inline or by a type name such as `"A2"` or `"D4_affine"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixSpec {
    Named(String),
    Rows(Vec<Vec<i64>>),
}

impl MatrixSpec {
    pub fn resolve(&self) -> Result<CartanData> {
        match self {
            MatrixSpec::Named(name) => CartanData::named(name),
            MatrixSpec::Rows(rows) => CartanData::new(rows.clone()),
        }
    }
}

/// `α⁺ = α⁻ = alpha`, `β⁺ = beta`, `β⁻ = −betaᵀ`; missing maps are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShiftConfig {
    #[serde(default)]
    pub alpha: Option<BiadditiveMap>,
    #[serde(default)]
    pub beta: Option<BiadditiveMap>,
}

impl ShiftConfig {
    pub fn to_shift(&self, rank: usize) -> Result<Shift> {
        let alpha = self.alpha.clone().unwrap_or_else(|| BiadditiveMap::zero(rank));
        let beta = self.beta.clone().unwrap_or_else(|| BiadditiveMap::zero(rank));
        for m in [&alpha, &beta] {
            if m.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: m.rank(),
                });
            }
        }
        Shift::compatible(alpha, beta)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceConfig {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// `qheis`: the matrix `⟨i,j⟩`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<MatrixSpec>,
    /// `lattice`: the Gram matrix of the lattice form.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<MatrixSpec>,
    /// `qheis`: nonsingularity is required for `k` up to this degree.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub working_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<ShiftConfig>,
}

impl InstanceConfig {
    pub fn of_kind(kind: &str) -> Self {
        InstanceConfig {
            kind: kind.into(),
            name: None,
            cartan: None,
            form: None,
            working_degree: None,
            shift: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    fn reject(&self, field: &str, present: bool) -> Result<()> {
        if present {
            return Err(Error::Config(format!(
                "field {field:?} does not apply to type {:?}",
                self.kind
            )));
        }
        Ok(())
    }

    fn require<'a>(&self, field: &str, value: &'a Option<MatrixSpec>) -> Result<&'a MatrixSpec> {
        value
            .as_ref()
            .ok_or_else(|| Error::Config(format!("type {:?} needs the field {field:?}", self.kind)))
    }
}

/// A loaded instance: a pairing, its double (or relation) context and the
/// generator names understood by expressions.
#[derive(Clone)]
pub struct LoadedInstance {
    kind: String,
    name: String,
    pairing: TwistedPairing,
    context: DoubleContext,
    generators: Arc<dyn GeneratorSet + Send + Sync>,
    probe_alpha: BiadditiveMap,
}

impl fmt::Debug for LoadedInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LoadedInstance")
            .field("kind", &self.kind)
            .field("name", &self.name)
            .field("pairing", &self.pairing)
            .finish()
    }
}

impl LoadedInstance {
    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn pairing(&self) -> &TwistedPairing {
        &self.pairing
    }

    pub fn context(&self) -> &DoubleContext {
        &self.context
    }

    pub fn engine(&self) -> &SmashAlgebra {
        self.context.engine()
    }

    pub fn generators(&self) -> &dyn GeneratorSet {
        &*self.generators
    }

    pub fn resolve(&self, g: &Generator) -> Result<DoubleElement> {
        self.generators.resolve(g)
    }

    /// The shift `α` probed by `verify_shift_invariance`.
    pub fn probe_alpha(&self) -> &BiadditiveMap {
        &self.probe_alpha
    }

    /// Bialgebra, pairing and (when a double exists) double checks up to `n`.
    pub fn verify(&self, n: u32) -> Result<Vec<Report>> {
        let p = &self.pairing;
        let mut out = vec![
            p.plus().check_bialgebra(n),
            p.check_pairing_axioms(n),
            p.perfectness_check(n),
            p.dual_presentation_check(n),
            self.engine().verify_commutation(n),
        ];
        if let DoubleContext::Double(d) = &self.context {
            out.push(d.verify_vacuum(n));
            out.push(d.verify_shift_invariance(&self.probe_alpha, n)?);
        }
        Ok(out
            .into_iter()
            .map(|mut r| {
                r.instance = self.name.clone();
                r
            })
            .collect())
    }
}

/// A strategy that builds one kind of instance from a config.
pub trait InstanceBuilder: Send + Sync {
    fn kind(&self) -> &'static str;
    fn build(&self, config: &InstanceConfig) -> Result<LoadedInstance>;
}

/// Applies the config's shift, which keeps the pair compatible.
fn apply_shift(pairing: TwistedPairing, config: &InstanceConfig) -> Result<TwistedPairing> {
    match &config.shift {
        Some(s) => pairing.shifted(&s.to_shift(pairing.plus().rank())?),
        None => Ok(pairing),
    }
}

fn name_of(config: &InstanceConfig, fallback: &str) -> String {
    config.name.clone().unwrap_or_else(|| fallback.to_string())
}

struct WeylBuilder;

impl InstanceBuilder for WeylBuilder {
    fn kind(&self) -> &'static str {
        "weyl"
    }

    fn build(&self, config: &InstanceConfig) -> Result<LoadedInstance> {
        config.reject("cartan", config.cartan.is_some())?;
        config.reject("form", config.form.is_some())?;
        config.reject("working_degree", config.working_degree.is_some())?;
        let pairing = apply_shift(build_weyl()?.pairing, config)?;
        Ok(LoadedInstance {
            kind: self.kind().into(),
            name: name_of(config, "weyl"),
            context: DoubleContext::Double(HeisenbergDouble::new(pairing.clone())?),
            generators: Arc::new(WeylGenerators::new(pairing.clone())),
            pairing,
            probe_alpha: BiadditiveMap::scalar(1),
        })
    }
}

struct QHeisBuilder;

impl InstanceBuilder for QHeisBuilder {
    fn kind(&self) -> &'static str {
        "qheis"
    }

    fn build(&self, config: &InstanceConfig) -> Result<LoadedInstance> {
        config.reject("form", config.form.is_some())?;
        let cartan = config.require("cartan", &config.cartan)?.resolve()?;
        let built = build_qheis(&cartan, config.working_degree.unwrap_or(8))?;
        let pairing = apply_shift(built.pairing, config)?;
        Ok(LoadedInstance {
            kind: self.kind().into(),
            name: name_of(config, "qheis"),
            context: DoubleContext::Double(HeisenbergDouble::new(pairing.clone())?),
            generators: Arc::new(ColoredGenerators::new(pairing.clone(), cartan.colors(), true)),
            pairing,
            probe_alpha: BiadditiveMap::scalar(1),
        })
    }
}

struct LatticeBuilder;

impl InstanceBuilder for LatticeBuilder {
    fn kind(&self) -> &'static str {
        "lattice"
    }

    fn build(&self, config: &InstanceConfig) -> Result<LoadedInstance> {
        config.reject("cartan", config.cartan.is_some())?;
        config.reject("working_degree", config.working_degree.is_some())?;
        let form = config.require("form", &config.form)?.resolve()?;
        let built = build_lattice(&form)?;
        let pairing = apply_shift(built.pairing, config)?;
        let context = match built.context {
            DoubleContext::Double(_) => DoubleContext::Double(HeisenbergDouble::new(pairing.clone())?),
            DoubleContext::PresentationOnly(r) => {
                DoubleContext::PresentationOnly(RelationContext::new(pairing.clone(), r.reason())?)
            }
        };
        Ok(LoadedInstance {
            kind: self.kind().into(),
            name: name_of(config, "lattice"),
            context,
            generators: Arc::new(ColoredGenerators::new(pairing.clone(), form.colors(), false)),
            pairing,
            probe_alpha: BiadditiveMap::scalar(1),
        })
    }
}

/// Builders keyed by the config's `type`.
pub struct InstanceRegistry {
    builders: BTreeMap<&'static str, Box<dyn InstanceBuilder>>,
}

impl Default for InstanceRegistry {
    /// `weyl`, `qheis` and `lattice`.
    fn default() -> Self {
        let mut r = InstanceRegistry::empty();
        r.register(Box::new(WeylBuilder));
        r.register(Box::new(QHeisBuilder));
        r.register(Box::new(LatticeBuilder));
        r
    }
}

impl InstanceRegistry {
    pub fn empty() -> Self {
        InstanceRegistry {
            builders: BTreeMap::new(),
        }
    }

    /// Replaces any builder of the same kind.
    pub fn register(&mut self, builder: Box<dyn InstanceBuilder>) {
        self.builders.insert(builder.kind(), builder);
    }

    pub fn kinds(&self) -> Vec<&'static str> {
        self.builders.keys().copied().collect()
    }

    pub fn build(&self, config: &InstanceConfig) -> Result<LoadedInstance> {
        let builder = self.builders.get(config.kind.as_str()).ok_or_else(|| {
            Error::Config(format!(
                "unknown instance type {:?}; known: {}",
                config.kind,
                self.kinds().join(", ")
            ))
        })?;
        builder.build(config)
    }

    pub fn build_json(&self, text: &str) -> Result<LoadedInstance> {
        self.build(&InstanceConfig::from_json(text)?)
    }
}
