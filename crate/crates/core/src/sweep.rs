//! Evaluates a scenario over its sweep grid.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rates::{Applicability, Mechanism, MechanismRegistry, Method, Selection, Setup};
use crate::scenario::{Scenario, SweepVariable};

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub mechanism: Mechanism,
    pub material: String,
    /// `mechanism`, or `mechanism:material` when several materials are swept.
    pub label: String,
    pub method: Method,
}

/// Rates over a sweep, in grid order. `None` marks an inapplicable cell.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub variable: SweepVariable,
    /// Sweep values in SI.
    pub values: Vec<f64>,
    pub columns: Vec<Column>,
    /// `rates[row][column]`, in 1/s.
    pub rates: Vec<Vec<Option<f64>>>,
    /// Distinct validity flags per row, as `label:code`.
    pub warnings: Vec<Vec<String>>,
}

impl SweepTable {
    pub fn rows(&self) -> usize {
        self.values.len()
    }

    pub fn column_index(&self, label: &str) -> Option<usize> {
        self.columns.iter().position(|c| c.label == label)
    }

    /// One column as a series, inapplicable cells included.
    pub fn series(&self, column: usize) -> Vec<Option<f64>> {
        self.rates.iter().map(|row| row[column]).collect()
    }
}

fn select_columns(scenario: &Scenario, registry: &MechanismRegistry) -> Result<Vec<Column>> {
    let many = scenario.materials.len() > 1;
    let mut columns = Vec::new();
    for mech in registry.iter() {
        let kind = mech.mechanism();
        if !scenario.selection.includes(kind) {
            continue;
        }
        let before = columns.len();
        for material in &scenario.materials {
            let setup = Setup {
                trap: scenario.trap,
                particle: scenario.particle,
                material,
                endcap: scenario.endcap,
            };
            if !mech.applicability(&setup).is_applicable() {
                continue;
            }
            let method = if mech.supports(scenario.method) {
                scenario.method
            } else {
                match scenario.method {
                    Method::ClosedForm => Method::Pipeline,
                    Method::Pipeline => Method::ClosedForm,
                }
            };
            let label = if many {
                format!("{}:{}", kind.name(), material.name())
            } else {
                kind.name().to_string()
            };
            columns.push(Column {
                mechanism: kind,
                material: material.name().to_string(),
                label,
                method,
            });
        }
        if columns.len() == before {
            if let Selection::Only(_) = scenario.selection {
                let setup = Setup {
                    trap: scenario.trap,
                    particle: scenario.particle,
                    material: &scenario.materials[0],
                    endcap: scenario.endcap,
                };
                let reason = match mech.applicability(&setup) {
                    Applicability::NotApplicable(r) => r,
                    Applicability::Applicable => "no applicable material".into(),
                };
                return Err(Error::Inapplicable {
                    mechanism: kind.name().to_string(),
                    reason,
                });
            }
        }
    }
    if columns.is_empty() {
        return Err(Error::NoMechanism);
    }
    Ok(columns)
}

type Row = (Vec<Option<f64>>, Vec<String>);

fn evaluate_row(
    scenario: &Scenario,
    registry: &MechanismRegistry,
    columns: &[Column],
    value: f64,
) -> Result<Row> {
    let trap = scenario.trap_at(value)?;
    let mut cells = Vec::with_capacity(columns.len());
    let mut warnings: Vec<String> = Vec::new();
    for col in columns {
        let material = scenario
            .materials
            .iter()
            .find(|m| m.name() == col.material)
            .expect("column material comes from the scenario");
        let setup = Setup {
            trap,
            particle: scenario.particle,
            material,
            endcap: scenario.endcap,
        };
        let mech = registry.get(col.mechanism.name())?;
        match registry.evaluate(mech, &setup, scenario.method) {
            Ok(result) => {
                cells.push(Some(result.rate));
                for w in result.warnings {
                    let tag = format!("{}:{}", col.label, w.code());
                    if !warnings.contains(&tag) {
                        warnings.push(tag);
                    }
                }
            }
            Err(Error::Inapplicable { .. }) => cells.push(None),
            Err(e) => return Err(e),
        }
    }
    Ok((cells, warnings))
}

/// Evaluates every selected, applicable mechanism at every grid point.
/// Grid points run in parallel; rows come back in grid order.
pub fn run_scenario(scenario: &Scenario, registry: &MechanismRegistry) -> Result<SweepTable> {
    let columns = select_columns(scenario, registry)?;
    let values = scenario.sweep.grid_si();
    let rows = values
        .par_iter()
        .map(|&v| evaluate_row(scenario, registry, &columns, v))
        .collect::<Result<Vec<Row>>>()?;
    let (rates, warnings) = rows.into_iter().unzip();
    Ok(SweepTable {
        variable: scenario.sweep.variable,
        values,
        columns,
        rates,
        warnings,
    })
}
