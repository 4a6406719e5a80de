"""Homotopy-guided self-supervised learning to optimize (C++ core)."""

from ._core import (
    AcopfProblem,
    ConfigError,
    DataError,
    DimensionError,
    DivergenceError,
    Error,
    NumericError,
    PolicyNet,
    Problem,
    RandNlpProblem,
    evaluate,
    gen_data,
    load_checkpoint,
    load_dataset,
    report,
    schedule_lambdas,
    train,
    transform_names,
)

__all__ = [
    "AcopfProblem",
    "ConfigError",
    "DataError",
    "DimensionError",
    "DivergenceError",
    "Error",
    "NumericError",
    "PolicyNet",
    "Problem",
    "RandNlpProblem",
    "evaluate",
    "gen_data",
    "load_checkpoint",
    "load_dataset",
    "report",
    "schedule_lambdas",
    "train",
    "transform_names",
]
