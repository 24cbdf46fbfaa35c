//! JSON inputs: parameter triples, entanglement scenarios and run configurations.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::entanglement::{
    initial_meson, initial_su2, su2_normalizing_amplitude, EntanglementError, StateVector,
    TransitionKind, TransitionSpec,
};
use crate::lie::AlgebraName;
use crate::yangian::{YangianError, YangianParams};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid configuration: {0}")]
    Invalid(String),
    #[error(transparent)]
    Yangian(#[from] YangianError),
    #[error(transparent)]
    Entanglement(#[from] EntanglementError),
}

/// `{"mu": f, "nu": f, "lambda": f}`.
pub fn parse_params(text: &str) -> Result<YangianParams, ConfigError> {
    Ok(serde_json::from_str(text)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum StateInput {
    Qubits { alpha: f64, beta: f64 },
    Mesons { alpha1: f64, alpha2: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum TransitionInput {
    Su3 {
        eta1: f64,
        eta2: f64,
    },
    /// `a` omitted: solved from the normalizing condition.
    Su2 {
        #[serde(default)]
        a: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub system: AlgebraName,
    pub params: YangianParams,
    pub state: StateInput,
    pub transition: TransitionInput,
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let s: Scenario = serde_json::from_str(text)?;
        s.resolve()?;
        Ok(s)
    }

    /// The initial state and the transition it feeds.
    pub fn resolve(&self) -> Result<(StateVector, TransitionSpec), ConfigError> {
        let params = self.params;
        match (self.system, self.state, self.transition) {
            (AlgebraName::Su2, StateInput::Qubits { alpha, beta }, TransitionInput::Su2 { a }) => {
                let state = initial_su2(alpha, beta)?;
                let a = match a {
                    Some(a) if a.is_finite() => a,
                    Some(a) => return Err(ConfigError::Invalid(format!("transition.a = {a}"))),
                    None => su2_normalizing_amplitude(&params, alpha, beta)?,
                };
                Ok((
                    state,
                    TransitionSpec {
                        kind: TransitionKind::Su2P { a },
                        params,
                    },
                ))
            }
            (
                AlgebraName::Su3,
                StateInput::Mesons { alpha1, alpha2 },
                TransitionInput::Su3 { eta1, eta2 },
            ) => {
                if !(eta1.is_finite() && eta2.is_finite()) {
                    return Err(ConfigError::Invalid("eta1/eta2 must be finite".into()));
                }
                let state = initial_meson(alpha1, alpha2)?;
                Ok((
                    state,
                    TransitionSpec {
                        kind: TransitionKind::Su3P { eta1, eta2 },
                        params,
                    },
                ))
            }
            (system, _, _) => Err(ConfigError::Invalid(format!(
                "state/transition fields do not match system {system:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Verify,
    Reduce,
    Entangle,
}

fn default_tolerance() -> f64 {
    DEFAULT_TOLERANCE
}

fn default_seed() -> u64 {
    crate::battery::DEFAULT_SEED
}

/// Everything a CLI invocation can carry, loadable from a `--config` file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    #[serde(default)]
    pub params: Option<YangianParams>,
    /// Replace `μ` by `−λ²/(4ν)`.
    #[serde(default)]
    pub constrained: bool,
    #[serde(default)]
    pub system: Option<AlgebraName>,
    #[serde(default)]
    pub scenario: Option<Scenario>,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default)]
    pub output_path: Option<String>,
    #[serde(default = "default_seed")]
    pub seed: u64,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            params: None,
            constrained: false,
            system: None,
            scenario: None,
            tolerance: DEFAULT_TOLERANCE,
            output_path: None,
            seed: default_seed(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let c: RunConfig = serde_json::from_str(text)?;
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(ConfigError::Invalid(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if let Some(s) = &self.scenario {
            s.resolve()?;
        }
        if self.command == Command::Entangle && self.scenario.is_none() {
            return Err(ConfigError::Invalid("entangle needs a scenario".into()));
        }
        self.effective_params().map(|_| ())
    }

    /// `params` with the constraint applied when requested.
    pub fn effective_params(&self) -> Result<Option<YangianParams>, ConfigError> {
        match (self.params, self.constrained) {
            (Some(p), true) => Ok(Some(YangianParams::constrained_from(p.nu, p.lambda)?)),
            (p, _) => Ok(p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_roundtrip_and_rejects() {
        let p = parse_params(r#"{"mu": 1, "nu": -0.25, "lambda": 1}"#).unwrap();
        assert!(p.is_constrained());
        assert!(parse_params(r#"{"mu": 1, "nu": 2}"#).is_err());
        assert!(parse_params(r#"{"mu": 1, "nu": 2, "lambda": 3, "x": 0}"#).is_err());
        assert!(parse_params("[1,2,3]").is_err());
        assert!(parse_params(r#"{"mu": 1e999, "nu": 0, "lambda": 0}"#).is_err());
    }

    #[test]
    fn scenarios() {
        let su2 = r#"{"system":"su2","params":{"mu":1,"nu":-0.25,"lambda":1},
                     "state":{"alpha":0.6,"beta":0.8},"transition":{}}"#;
        let s = Scenario::parse(su2).unwrap();
        let (_, spec) = s.resolve().unwrap();
        assert!(matches!(spec.kind, TransitionKind::Su2P { a } if a > 0.0));

        let su3 = r#"{"system":"su3","params":{"mu":0.5,"nu":-0.5,"lambda":1},
                     "state":{"alpha1":0.6,"alpha2":0.8},"transition":{"eta1":1,"eta2":1}}"#;
        assert!(Scenario::parse(su3).is_ok());

        let mixed = r#"{"system":"su2","params":{"mu":1,"nu":1,"lambda":1},
                       "state":{"alpha1":0.6,"alpha2":0.8},"transition":{"a":1}}"#;
        assert!(matches!(
            Scenario::parse(mixed),
            Err(ConfigError::Invalid(_))
        ));

        let unnorm = r#"{"system":"su2","params":{"mu":1,"nu":1,"lambda":1},
                        "state":{"alpha":0.6,"beta":0.6},"transition":{"a":1}}"#;
        assert!(Scenario::parse(unnorm).is_err());

        let stray = su2.replace(r#""beta":0.8"#, r#""beta":0.8,"gamma":0"#);
        assert!(matches!(Scenario::parse(&stray), Err(ConfigError::Json(_))));
        let stray = su2.replace(r#""transition":{}"#, r#""transition":{"b":2}"#);
        assert!(matches!(Scenario::parse(&stray), Err(ConfigError::Json(_))));
    }

    #[test]
    fn run_config() {
        let c = RunConfig::parse(
            r#"{"command":"verify","params":{"mu":0,"nu":1,"lambda":1},"constrained":true}"#,
        )
        .unwrap();
        let p = c.effective_params().unwrap().unwrap();
        assert!(p.is_constrained());
        assert_eq!(c.tolerance, DEFAULT_TOLERANCE);
        assert_eq!(c.seed, 42);
        assert!(RunConfig::parse(r#"{"command":"verify","tolerance":0}"#).is_err());
        assert!(RunConfig::parse(r#"{"command":"entangle"}"#).is_err());
        assert!(RunConfig::parse(r#"{"command":"explode"}"#).is_err());
    }
}
