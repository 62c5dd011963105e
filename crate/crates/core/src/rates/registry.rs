use std::sync::LazyLock;

use super::mechanisms::{IonBlackbody, IonEndcap, IonSurface, PhononVdw, SpinSurface};
use super::{high_temperature_check, Endcap, InputsEcho, Mechanism, Method, RateResult, Rated};
use crate::error::{Error, Result};
use crate::materials::Material;
use crate::trap::{Particle, TrapConfig};

/// Everything a mechanism may need to evaluate a rate.
#[derive(Debug, Clone, Copy)]
pub struct Setup<'a> {
    pub trap: TrapConfig,
    pub particle: Particle,
    pub material: &'a Material,
    pub endcap: Option<Endcap>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Applicability {
    Applicable,
    NotApplicable(String),
}

impl Applicability {
    pub fn is_applicable(&self) -> bool {
        matches!(self, Applicability::Applicable)
    }
}

/// One heating channel. Implementations are stateless and shared across threads.
pub trait HeatingMechanism: Send + Sync {
    fn mechanism(&self) -> Mechanism;

    fn name(&self) -> &'static str {
        self.mechanism().name()
    }

    fn supports(&self, method: Method) -> bool;

    /// Whether the particle and material couple through this channel at all.
    fn applicability(&self, setup: &Setup<'_>) -> Applicability;

    /// Evaluates the rate with a method this mechanism supports.
    fn evaluate(&self, setup: &Setup<'_>, method: Method) -> Result<Rated>;
}

/// Which mechanisms a scenario asks for.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum Selection {
    #[default]
    Auto,
    Only(Vec<Mechanism>),
}

impl Selection {
    pub fn includes(&self, mechanism: Mechanism) -> bool {
        match self {
            Selection::Auto => true,
            Selection::Only(list) => list.contains(&mechanism),
        }
    }
}

/// Name-keyed collection of heating mechanisms, evaluated in registration order.
pub struct MechanismRegistry {
    entries: Vec<Box<dyn HeatingMechanism>>,
}

impl MechanismRegistry {
    pub fn empty() -> Self {
        MechanismRegistry { entries: Vec::new() }
    }

    pub fn with_builtins() -> Self {
        let mut reg = MechanismRegistry::empty();
        reg.register(Box::new(IonSurface));
        reg.register(Box::new(IonBlackbody));
        reg.register(Box::new(IonEndcap));
        reg.register(Box::new(SpinSurface));
        reg.register(Box::new(PhononVdw));
        reg
    }

    /// Process-wide registry holding the built-in mechanisms.
    pub fn builtin() -> &'static MechanismRegistry {
        static BUILTIN: LazyLock<MechanismRegistry> = LazyLock::new(MechanismRegistry::with_builtins);
        &BUILTIN
    }

    /// Adds a mechanism, replacing one registered under the same name.
    pub fn register(&mut self, mechanism: Box<dyn HeatingMechanism>) {
        if let Some(slot) = self.entries.iter_mut().find(|m| m.name() == mechanism.name()) {
            *slot = mechanism;
        } else {
            self.entries.push(mechanism);
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|m| m.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&dyn HeatingMechanism> {
        self.entries
            .iter()
            .find(|m| m.name() == name)
            .map(|m| m.as_ref())
            .ok_or_else(|| Error::UnknownMechanism {
                name: name.to_string(),
                registered: self.names().join(", "),
            })
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn HeatingMechanism> {
        self.entries.iter().map(|m| m.as_ref())
    }

    /// Evaluates one mechanism, falling back to whichever method it supports
    /// when `preferred` is unavailable.
    pub fn evaluate(
        &self,
        mechanism: &dyn HeatingMechanism,
        setup: &Setup<'_>,
        preferred: Method,
    ) -> Result<RateResult> {
        if let Applicability::NotApplicable(reason) = mechanism.applicability(setup) {
            return Err(Error::Inapplicable {
                mechanism: mechanism.name().to_string(),
                reason,
            });
        }
        let method = if mechanism.supports(preferred) {
            preferred
        } else {
            match preferred {
                Method::ClosedForm => Method::Pipeline,
                Method::Pipeline => Method::ClosedForm,
            }
        };
        let Rated { rate, mut warnings } = mechanism.evaluate(setup, method)?;
        if method == Method::ClosedForm {
            warnings.extend(high_temperature_check(&setup.trap));
        }
        Ok(RateResult {
            mechanism: mechanism.mechanism(),
            rate,
            method,
            inputs: InputsEcho::new(setup),
            warnings,
        })
    }

    /// One result per selected and applicable mechanism; inapplicable ones are omitted.
    pub fn compute_all(
        &self,
        setup: &Setup<'_>,
        selection: &Selection,
        method: Method,
    ) -> Result<Vec<RateResult>> {
        let results = self
            .iter()
            .filter(|m| selection.includes(m.mechanism()))
            .filter(|m| m.applicability(setup).is_applicable())
            .map(|m| self.evaluate(m, setup, method))
            .collect::<Result<Vec<_>>>()?;
        if results.is_empty() {
            Err(Error::NoMechanism)
        } else {
            Ok(results)
        }
    }
}

impl Default for MechanismRegistry {
    fn default() -> Self {
        MechanismRegistry::with_builtins()
    }
}

/// All applicable built-in mechanisms, closed forms preferred.
pub fn compute_all(setup: &Setup<'_>) -> Result<Vec<RateResult>> {
    MechanismRegistry::builtin().compute_all(setup, &Selection::Auto, Method::ClosedForm)
}
