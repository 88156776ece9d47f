"""Exact computation with Witt-algebra modules F(P, M) = P (x) M."""

from wittmod.exactnum import ExactMatrix, Scalar
from wittmod.glmod import (
    GlModule, exterior_power, natural_module, scalar_module, sym_power,
    tensor_module,
)
from wittmod.liealg import (
    ToroidalElement, WeylElement, WittElement, shen_tau, toroidal_bracket,
    witt_bracket,
)
from wittmod.weylmod import (
    WeylModule, alaurent, apoly, laurent_quot, tensor_factors,
    twisted_laurent, whittaker,
)
from wittmod.wittrep import (
    FPModule, complex_homology, fingerprint, irreducibility_report,
    kernel_window, l_window, ltilde_window, pi_map, submodule_closure,
    torsion_operator, weight_support,
)

__all__ = [
    "ExactMatrix", "Scalar",
    "GlModule", "exterior_power", "natural_module", "scalar_module",
    "sym_power", "tensor_module",
    "ToroidalElement", "WeylElement", "WittElement", "shen_tau",
    "toroidal_bracket", "witt_bracket",
    "WeylModule", "alaurent", "apoly", "laurent_quot", "tensor_factors",
    "twisted_laurent", "whittaker",
    "FPModule", "complex_homology", "fingerprint", "irreducibility_report",
    "kernel_window", "l_window", "ltilde_window", "pi_map",
    "submodule_closure", "torsion_operator", "weight_support",
]
__version__ = "0.1.0"
