"""Partition bijections, Garvan k-rank injections and exhaustive verification."""

from .algorithm_z import gamma_forward, gamma_inverse, refined_forward, refined_inverse, theorem_form_forward, theorem_form_inverse
from .chi import RElement, SElement, chi_forward, chi_inverse
from .errors import CapExceeded, ExceptionalElement, InternalError, InvalidInput, NotInImage
from .krank import KTuple, QElement, eta_forward, eta_inverse, sigma_apply, source_labels, target_labels, verify_monotonicity, zeta_apply
from .partition import PaddedPartition, Partition, conjugate, durfee_chain, k_rank, union
from .phi import AElement, BElement, phi_forward, phi_inverse
from .psi import CElement, DElement, psi_forward, psi_inverse, render_table
from .qseries import TruncatedSeries, gaussian, inv_pochhammer, nk_count, nk_series

__version__ = "0.1.0"

__all__ = [
    "AElement", "BElement", "CElement", "CapExceeded", "DElement", "ExceptionalElement", "InternalError",
    "InvalidInput", "KTuple", "NotInImage", "PaddedPartition", "Partition", "QElement", "RElement", "SElement",
    "TruncatedSeries", "chi_forward", "chi_inverse", "conjugate", "durfee_chain", "eta_forward", "eta_inverse",
    "gamma_forward", "gamma_inverse", "gaussian", "inv_pochhammer", "k_rank", "nk_count", "nk_series",
    "phi_forward", "phi_inverse", "psi_forward", "psi_inverse", "refined_forward", "refined_inverse",
    "render_table", "sigma_apply", "source_labels", "target_labels", "theorem_form_forward",
    "theorem_form_inverse", "union", "verify_monotonicity", "zeta_apply",
]
