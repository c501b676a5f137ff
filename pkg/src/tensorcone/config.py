"""Resource caps and run-wide configuration defaults.

All enumeration entry points accept an optional RunConfig; the defaults
keep every supported computation at desk scale.  Raising a cap is the
caller's explicit decision, never an automatic fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass


DEFAULT_RANK_CAP = 6
DEFAULT_TUPLE_BUDGET = 10**7
DEFAULT_DIM_CAP = 10**6
DEFAULT_SATURATION_DEPTH = 3
DEFAULT_BOX_BOUND = 3

ENV_PREFIX = "TENSORCONE"


@dataclass
class RunConfig:
    """Caps and knobs threaded through enumerations and the oracle.

    rank_cap: maximal total rank of a root system that will be built.
    tuple_budget: upper bound on |W^P|^(s+1) before tuple enumeration starts.
    dim_cap: upper bound on the Weyl dimension of any single module the
        oracle is asked to decompose or tabulate.
    saturation_depth: largest scaling factor tried when certifying cone
        membership of a lattice point.
    box_bound: coordinate bound for sampled dominant weights.
    jobs: worker processes for sampling; 0 means use all available cores.
    """

    rank_cap: int = DEFAULT_RANK_CAP
    tuple_budget: int = DEFAULT_TUPLE_BUDGET
    dim_cap: int = DEFAULT_DIM_CAP
    saturation_depth: int = DEFAULT_SATURATION_DEPTH
    box_bound: int = DEFAULT_BOX_BOUND
    jobs: int = 1

    def resolved_jobs(self) -> int:
        if self.jobs and self.jobs > 0:
            return self.jobs
        return os.cpu_count() or 1


DEFAULT_CONFIG = RunConfig()
