"""Parameter counts, h^{2,1} of the resolution and the rank split of H^3."""
from __future__ import annotations

from dataclasses import dataclass

from .core import HypersurfaceFamily, as_weights, graded_dim, random_member
from .strata import resolution_picard_rank, singular_curves


@dataclass(frozen=True)
class ModuliCount:
    dim_Sd: int
    aut_dim: int
    moduli: int
    warning: bool = False


@dataclass(frozen=True)
class HodgeSplit:
    h21_Y: int
    h11_Y: int
    g_total: int
    b3_X: int
    b3_moved: int
    b3_Y: int

    def to_dict(self) -> dict:
        return {
            "h21_Y": self.h21_Y,
            "h11_Y": self.h11_Y,
            "g_total": self.g_total,
            "b3_X": self.b3_X,
            "b3_moved": self.b3_moved,
            "b3_Y": self.b3_Y,
        }


def aut_group_dim(w) -> int:
    """Dimension of the group of graded substitutions acting on ``P[w]``."""
    w = as_weights(w)
    return sum(graded_dim(w, wi) for wi in w.weights) - 1


def moduli_count(fam: HypersurfaceFamily, probe_seed: int | None = None) -> ModuliCount:
    """``dim S_d - sum_i dim S_{w_i}``.

    Projectivizing ``S_d`` (-1) and the trivially acting torus (+1) cancel.
    With ``probe_seed`` the stabilizer of a sampled member is computed, and the
    warning flag is raised if it exceeds the Euler line.
    """
    w = fam.weights
    dim_sd = graded_dim(w, fam.degree)
    substitutions = sum(graded_dim(w, wi) for wi in w.weights)
    warn = False
    if probe_seed is not None:
        from .autlie import stabilizer_dim

        warn = stabilizer_dim(random_member(fam, probe_seed)) > 1
    return ModuliCount(dim_sd, substitutions - 1, dim_sd - substitutions, warn)


def total_genus(fam: HypersurfaceFamily) -> int:
    return sum(c.genus for c in singular_curves(fam))


def h21_resolution(fam: HypersurfaceFamily) -> int:
    return moduli_count(fam).moduli + total_genus(fam)


def hodge_split(fam: HypersurfaceFamily) -> HodgeSplit:
    moduli = moduli_count(fam).moduli
    g = total_genus(fam)
    b3_x = 2 + 2 * moduli
    moved = 2 * g
    return HodgeSplit(
        h21_Y=moduli + g,
        h11_Y=resolution_picard_rank(fam),
        g_total=g,
        b3_X=b3_x,
        b3_moved=moved,
        b3_Y=b3_x + moved,
    )


def s_e_codim(fam: HypersurfaceFamily) -> int:
    return h21_resolution(fam) - moduli_count(fam).moduli


def euler_expected(fam: HypersurfaceFamily) -> int:
    """``2 (h^{1,1} - h^{2,1})`` of the crepant resolution."""
    return 2 * (resolution_picard_rank(fam) - h21_resolution(fam))
