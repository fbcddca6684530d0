"""Exact deficiency engine for graph joins G*K_t.

Solvers for K_r-factors, H-factors and Hamilton cycles, the extremal
constructions for the K_r-factor and bandwidth problems, their closed-form
edge bounds, and an exhaustive verification harness.
"""

from .bounds import BoundResult, bandwidth_bound, hamilton_bound, kr_bound, triangle_bound
from .constructions import RFactorParams, ex1_band, ex1_factor, ex2_band, ex2_factor, ex_h, ex_h_prime
from .deficiency import DeficiencyQuery, HFactor, Hamiltonicity, KrFactor, deficiency
from .errors import ContractError, GraphInputError, ParameterError, SizeLimitError
from .factors import FactorCertificate, h_factor, hamilton_cycle, kr_factor
from .graph import Graph, build, join
from .graph6 import emit_graph6, parse_graph6

__version__ = "0.1.0"
