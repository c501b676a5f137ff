"""Exact face-lattice engine for tensor cones of semisimple groups.

The package computes which tuples of dominant weights admit an invariant
in the tensor product of the corresponding irreducible modules, describes
the resulting rational cone by oriented facet inequalities, and lists its
faces through a parametrization by parabolic subgroups and Weyl-group
class tuples.  An independent character-theoretic oracle audits every
geometric claim.
"""

from .bkprod import (
    PointTuple,
    bk_point_coefficient,
    enumerate_point_tuples,
    enumerate_theta,
    levi_movable,
    resolve_convention,
)
from .checks import VerifyReport, verify_cone
from .config import DEFAULT_CONFIG, RunConfig
from .errors import (
    BudgetError,
    ConfigError,
    ConsistencyError,
    TensorConeError,
    VerificationFailure,
)
from .facecone import (
    ConeInequality,
    FaceDescriptor,
    MembershipResult,
    cone_extreme_rays,
    enumerate_faces,
    face_inclusion,
    face_rayset,
    facet_inequalities,
    hasse_diagram,
    membership,
)
from .oracle import (
    CertifiedPoint,
    freudenthal,
    invariant_dim,
    sample_cone,
    tensor_decompose,
    weyl_dim,
)
from .rootsys import (
    CartanType,
    RootSystem,
    Weight,
    build_root_system,
    dominant_fold,
    dual_weight,
    is_dominant,
)
from .schubert import SchubertRing, schubert_ring
from .weylgrp import ParabolicSubset, WeylElement, WeylGroup, weyl_group

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CartanType",
    "CertifiedPoint",
    "ConeInequality",
    "ConfigError",
    "ConsistencyError",
    "DEFAULT_CONFIG",
    "FaceDescriptor",
    "MembershipResult",
    "ParabolicSubset",
    "PointTuple",
    "RootSystem",
    "RunConfig",
    "SchubertRing",
    "TensorConeError",
    "VerificationFailure",
    "VerifyReport",
    "Weight",
    "WeylElement",
    "WeylGroup",
    "bk_point_coefficient",
    "build_root_system",
    "cone_extreme_rays",
    "dominant_fold",
    "dual_weight",
    "enumerate_faces",
    "enumerate_point_tuples",
    "enumerate_theta",
    "face_inclusion",
    "face_rayset",
    "facet_inequalities",
    "freudenthal",
    "hasse_diagram",
    "invariant_dim",
    "is_dominant",
    "levi_movable",
    "membership",
    "resolve_convention",
    "sample_cone",
    "schubert_ring",
    "tensor_decompose",
    "verify_cone",
    "weyl_dim",
    "weyl_group",
]
