"""Coding for composite DNA: strand matrices, channel errors, code
constructions and exhaustively checked bounds."""

from ._kernels import BACKEND
from .channels import (
    ChannelConfig,
    ErrorKind,
    ErrorPattern,
    apply_pattern,
    balls_disjoint,
    error_ball,
    sample_pattern,
    single_deletion_ball_size,
)
from .codes import CodeSpec, CombinedLSCode, CompositeVTCode, StrandLossCode
from .core import (
    ChannelOutput,
    CompositeVector,
    StrandMatrix,
    column_sums,
    enumerate_representations,
    representation_count,
)

__version__ = "0.1.0"
