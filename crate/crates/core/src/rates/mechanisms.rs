use super::registry::{Applicability, HeatingMechanism, Setup};
use super::{
    ion_rate_closed, ion_rate_endcap, ion_rate_pipeline, zeeman_rate_closed, zeeman_rate_pipeline,
    Mechanism, Method, Rated,
};
use crate::em_noise::{quasi_static_check, FieldSources};
use crate::error::{Error, Result};
use crate::phonons::{rayleigh_heating_rate, PhononChannel};
use crate::validity::Validity;

fn charged(setup: &Setup<'_>) -> Applicability {
    if setup.particle.charge() != 0.0 {
        Applicability::Applicable
    } else {
        Applicability::NotApplicable("particle is neutral".into())
    }
}

fn unsupported(mechanism: Mechanism, method: Method) -> Error {
    Error::invalid(
        "method",
        format!("{mechanism} has no {} evaluation", method.name()),
    )
}

/// Electric proximity fields of the absorbing surface acting on a charge.
pub struct IonSurface;

impl HeatingMechanism for IonSurface {
    fn mechanism(&self) -> Mechanism {
        Mechanism::IonSurface
    }

    fn supports(&self, _method: Method) -> bool {
        true
    }

    fn applicability(&self, setup: &Setup<'_>) -> Applicability {
        charged(setup)
    }

    fn evaluate(&self, setup: &Setup<'_>, method: Method) -> Result<Rated> {
        match method {
            Method::ClosedForm => {
                let trap = &setup.trap;
                let rate = ion_rate_closed(trap, &setup.particle, setup.material)?;
                let warnings = quasi_static_check(trap.omega_t(), trap.distance())
                    .into_iter()
                    .chain(setup.material.low_frequency_check(trap.omega_t()))
                    .collect();
                Ok(Rated { rate, warnings })
            }
            Method::Pipeline => {
                ion_rate_pipeline(&setup.trap, &setup.particle, setup.material, FieldSources::Surface)
            }
        }
    }
}

/// Free-space blackbody field acting on a charge. Distance independent.
pub struct IonBlackbody;

impl HeatingMechanism for IonBlackbody {
    fn mechanism(&self) -> Mechanism {
        Mechanism::IonBlackbody
    }

    fn supports(&self, method: Method) -> bool {
        method == Method::Pipeline
    }

    fn applicability(&self, setup: &Setup<'_>) -> Applicability {
        charged(setup)
    }

    fn evaluate(&self, setup: &Setup<'_>, method: Method) -> Result<Rated> {
        if method != Method::Pipeline {
            return Err(unsupported(self.mechanism(), method));
        }
        ion_rate_pipeline(&setup.trap, &setup.particle, setup.material, FieldSources::Blackbody)
    }
}

/// Johnson noise of the trap electrodes (lumped endcap circuit).
pub struct IonEndcap;

impl HeatingMechanism for IonEndcap {
    fn mechanism(&self) -> Mechanism {
        Mechanism::IonEndcap
    }

    fn supports(&self, method: Method) -> bool {
        method == Method::ClosedForm
    }

    fn applicability(&self, setup: &Setup<'_>) -> Applicability {
        match (charged(setup), setup.endcap) {
            (Applicability::Applicable, Some(_)) => Applicability::Applicable,
            (Applicability::Applicable, None) => {
                Applicability::NotApplicable("no endcap circuit configured".into())
            }
            (other, _) => other,
        }
    }

    fn evaluate(&self, setup: &Setup<'_>, method: Method) -> Result<Rated> {
        if method != Method::ClosedForm {
            return Err(unsupported(self.mechanism(), method));
        }
        let endcap = setup.endcap.ok_or_else(|| Error::Inapplicable {
            mechanism: self.name().to_string(),
            reason: "no endcap circuit configured".into(),
        })?;
        Ok(Rated {
            rate: ion_rate_endcap(&setup.trap, &setup.particle, &endcap)?,
            warnings: vec![Validity::EndcapGeometry],
        })
    }
}

/// Magnetic proximity fields acting on a magnetic moment.
pub struct SpinSurface;

impl HeatingMechanism for SpinSurface {
    fn mechanism(&self) -> Mechanism {
        Mechanism::SpinSurface
    }

    fn supports(&self, _method: Method) -> bool {
        true
    }

    fn applicability(&self, setup: &Setup<'_>) -> Applicability {
        if setup.particle.moment_expect() > 0.0 {
            Applicability::Applicable
        } else {
            Applicability::NotApplicable("particle has no magnetic moment".into())
        }
    }

    fn evaluate(&self, setup: &Setup<'_>, method: Method) -> Result<Rated> {
        match method {
            Method::ClosedForm => {
                let trap = &setup.trap;
                let rate = zeeman_rate_closed(trap, &setup.particle, setup.material)?;
                let warnings = quasi_static_check(trap.omega_t(), trap.distance())
                    .into_iter()
                    .chain(setup.material.low_frequency_check(trap.omega_t()))
                    .collect();
                Ok(Rated { rate, warnings })
            }
            Method::Pipeline => zeeman_rate_pipeline(&setup.trap, &setup.particle, setup.material),
        }
    }
}

/// Rayleigh phonons modulating the van-der-Waals image potential.
pub struct PhononVdw;

impl HeatingMechanism for PhononVdw {
    fn mechanism(&self) -> Mechanism {
        Mechanism::PhononVdw
    }

    fn supports(&self, method: Method) -> bool {
        method == Method::ClosedForm
    }

    fn applicability(&self, setup: &Setup<'_>) -> Applicability {
        if setup.particle.c3() <= 0.0 {
            Applicability::NotApplicable("particle has no van-der-Waals coefficient".into())
        } else if !setup.material.has_phonons() {
            Applicability::NotApplicable(format!(
                "material `{}` lacks phonon parameters",
                setup.material.name()
            ))
        } else {
            Applicability::Applicable
        }
    }

    fn evaluate(&self, setup: &Setup<'_>, method: Method) -> Result<Rated> {
        if method != Method::ClosedForm {
            return Err(unsupported(self.mechanism(), method));
        }
        let rate = rayleigh_heating_rate(&setup.trap, &setup.particle, setup.material)?;
        let channel = PhononChannel::resonant(setup.material, &setup.trap, setup.particle.c3())?;
        Ok(Rated {
            rate,
            warnings: channel.validity(setup.trap.distance()).into_iter().collect(),
        })
    }
}
