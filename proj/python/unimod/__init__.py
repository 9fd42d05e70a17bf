"""Unimodular-ensemble toolkit.

Random diagonal gates and unimodular matrices, operator Schmidt spectra,
exact moments and mean entropies of the induced states, entangling power,
and contra-diagonalization of Hermitian matrices.

The exact moment formula (Borel-triangle coefficients) and the doublet-word
identity are conjectural: proven for moment orders up to four and verified
numerically/combinatorially beyond that (see ``run_verify_suite``).
"""

from fractions import Fraction

from unimod._core import (  # noqa: F401
    RandomStream,
    __version__,
    arcsine_density,
    contradiagonalize,
    count_doublet_words,
    diag_gate_avg_purity,
    diagonal_gate_to_unimodular,
    eig_hermitian,
    enphase,
    entangling_power_mc,
    fourier_gate,
    fourier_matrix,
    gate_entanglement_entropy,
    haar_gate_entropy_reference,
    hs_mean_entropy,
    integrate_arcsine,
    integrate_mp,
    linear_entanglement,
    majorization_chain_check,
    majorizes,
    max_orbit_distance,
    mean_epower_diag,
    mean_epower_haar,
    measurement_entropy,
    mp_density,
    offdiag_weight,
    operator_schmidt_decomposition,
    prescribe_diagonal,
    renyi_entropy,
    reshuffle,
    run_verify_suite,
    sample_diagonal_gate,
    sample_ginibre,
    sample_haar_state,
    sample_haar_unitary,
    sample_hs_state,
    sample_unimodular,
    schmidt_spectrum,
    shannon_entropy,
    singular_values,
    ue_mean_entropy,
    ue_moment_continued,
    unimodular_to_state,
)
from unimod import _core


def catalan_number(k: int) -> int:
    return int(_core.catalan_number_str(k))


def catalan_triangle(n: int, k: int) -> int:
    return int(_core.catalan_triangle_str(n, k))


def borel_triangle(n: int, k: int) -> int:
    return int(_core.borel_triangle_str(n, k))


def ue_moment(n: int, dim: int) -> Fraction:
    """Conjectured exact ⟨Tr ρⁿ⟩ for the unimodular ensemble."""
    return Fraction(_core.ue_moment_str(n, dim))


def ue_moment_scaled(n: int, dim: int) -> int:
    """Integer polynomial P_n(N) = N^(2(n-1)) ⟨Tr ρⁿ⟩."""
    return int(_core.ue_moment_scaled_str(n, dim))


def hs_moment(n: int, dim: int) -> Fraction:
    return Fraction(_core.hs_moment_str(n, dim))


def ue_cumulants(dim: int) -> list[Fraction]:
    return [Fraction(s) for s in _core.ue_cumulants_str(dim)]


def arcsine_moment(n: int) -> Fraction:
    return Fraction(_core.arcsine_moment_str(n))


def mp_moment(n: int) -> int:
    return int(_core.mp_moment_str(n))
