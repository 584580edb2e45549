"""Data models for cadlag-audit."""
from .paths import CadlagStep, SidedTime, Side, Point
from .params import FunctionalParams, Window, GridSpec
from .reports import (
    SeminormReport, BesovReport, AuditReport,
    DerivedConstants, CorollaryConstants
)
from .process import (
    ProcessSpec, ProcessKind, JumpLaw, MomentHypothesis,
    MCConfig, MCEstimate, CorpusSpec, ExperimentConfig
)

__all__ = [
    "CadlagStep", "SidedTime", "Side", "Point",
    "FunctionalParams", "Window", "GridSpec",
    "SeminormReport", "BesovReport", "AuditReport",
    "DerivedConstants", "CorollaryConstants",
    "ProcessSpec", "ProcessKind", "JumpLaw", "MomentHypothesis",
    "MCConfig", "MCEstimate", "CorpusSpec", "ExperimentConfig"
]
