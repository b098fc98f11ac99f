"""Exact singlet bases for three coupled SU(2) or SU(3) irreps and the action of invariant operators."""

from .basis import (SingletLabelSU2, SingletLabelSU3, enumerate_su2, enumerate_su3, irreps,
                    leg_irrep, quanta_weight)
from .opexpr import CanonicalForm, InvariantOp, canonicalize, parse
from .sqrtrational import SqrtRational
from .su2 import Su2Transition, act_su2, norm_sq_su2
from .su3 import (Su3Transition, act_su3, fbar_12, norm_chain_su3, norm_sq_su3, symmetry_image,
                  unnormalized_act)

__all__ = [
    "SingletLabelSU2", "SingletLabelSU3", "enumerate_su2", "enumerate_su3", "irreps", "leg_irrep",
    "quanta_weight", "CanonicalForm", "InvariantOp", "canonicalize", "parse", "SqrtRational",
    "Su2Transition", "act_su2", "norm_sq_su2", "Su3Transition", "act_su3", "fbar_12",
    "norm_chain_su3", "norm_sq_su3", "symmetry_image", "unnormalized_act",
]
