use alloc::string::String;

use thiserror::Error;

use crate::degree::DegreeConditions;
use crate::graph::{InstanceId, VertexId};

/// Structural errors raised while building or mutating graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("n must be positive")]
    EmptyClasses,
    #[error("loop at {0}")]
    Loop(VertexId),
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRange { vertex: VertexId, n: u32 },
    #[error("zero multiplicity for edge {0}{1}")]
    ZeroMultiplicity(VertexId, VertexId),
    #[error("edge instance {0} not found")]
    MissingInstance(InstanceId),
    #[error("resolving {vertex} needs {needed} lift targets, only {available} available")]
    InsufficientTargets {
        vertex: VertexId,
        needed: usize,
        available: usize,
    },
}

/// Failures reported by the realizers.
///
/// None of these is a claim that the demand graph is unrealizable; only the
/// oracle decides infeasibility.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("sufficient condition not met: {0}")]
    ConditionUnmet(DegreeConditions),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("method failed at {stage}: {detail}")]
    MethodFailure { stage: &'static str, detail: String },
    #[error("instance exceeds search budget: {0}")]
    ScaleExceeded(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
