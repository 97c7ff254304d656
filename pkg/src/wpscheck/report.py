"""Family reports and the cross-module consistency suite."""
from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from .autlie import forced_involution, involution_check, stabilizer_dim
from .core import (
    HypersurfaceFamily,
    WeightSystem,
    enumerate_monomials,
    graded_dim,
    random_member,
)
from .errors import UnsupportedSingularityError
from .hodge import h21_resolution, hodge_split, moduli_count, s_e_codim, euler_expected
from .scroll import (
    ChowClass,
    ScrollSpec,
    c2_form,
    ci_model,
    cubic_form,
    double_cover_model,
    euler_number,
    integrate,
    model_for,
    nef_invariance_check,
)
from .strata import flop_count, quasi_smooth_probe, resolution_picard_rank, singular_curves, strata

SCHEMA_VERSION = 1
DEFAULT_SEEDS = tuple(range(20))
COEFF_BOUND = 9

PRESETS = {
    "x8": ((1, 1, 2, 2, 2), 8),
    "x12": ((1, 1, 2, 2, 6), 12),
    "x14": ((1, 2, 2, 2, 7), 14),
    "quintic": ((1, 1, 1, 1, 1), 5),
}

# scroll each model generically deforms to (same r, same c1E)
DEFORMED_TWISTS = {(2, 0, 0, 0): (1, 1, 0, 0), (2, 0, 0): (1, 1, 0)}


def preset_family(name: str) -> HypersurfaceFamily:
    w, d = PRESETS[name]
    return HypersurfaceFamily(WeightSystem(w), d)


@dataclass
class FamilyReport:
    weights: list[int]
    degree: int
    cy_flag: bool
    well_formed: bool
    strata: list[dict] = field(default_factory=list)
    singular_curves: list[dict] = field(default_factory=list)
    moduli: int | None = None
    dim_Sd: int | None = None
    aut_dim: int | None = None
    h21_Y: int | None = None
    h11_Y: int | None = None
    hodge: dict | None = None
    s_e_codim: int | None = None
    euler_expected: int | None = None
    intersection: dict | None = None
    automorphism: dict | None = None
    consistency: dict = field(default_factory=dict)
    error: str | None = None
    schema_version: int = SCHEMA_VERSION

    @property
    def consistent(self) -> bool:
        return self.error is None and all(self.consistency.values())

    def to_dict(self) -> dict:
        return asdict(self)


def intersection_block(model) -> dict:
    cubic = cubic_form(model)
    c2 = c2_form(model)
    euler = euler_number(model)
    verdict = nef_invariance_check(model)
    block = {
        "model": model.label,
        "kind": model.kind,
        "ambient": list(model.ambient.twists),
        "cubic_form": list(cubic),
        "c2_form": list(c2),
        "euler_number": euler,
        "nef_criterion": {
            "holds": verdict.holds,
            "kernel": list(verdict.kernel),
            "cubic_value": verdict.cubic_value,
        },
    }
    partner = DEFORMED_TWISTS.get(model.ambient.twists)
    if partner is not None:
        other = (ci_model if model.kind == "complete-intersection" else double_cover_model)(partner)
        block["deformed_ambient"] = list(partner)
        block["deformation_invariant"] = (
            cubic_form(other) == cubic and c2_form(other) == c2 and euler_number(other) == euler
        )
    return block


def automorphism_block(fam: HypersurfaceFamily, seeds: Iterable[int], bound: int) -> dict:
    dims = {}
    involutions = {}
    for seed in seeds:
        member = random_member(fam, seed, bound)
        dims[str(seed)] = stabilizer_dim(member)
        involutions[str(seed)] = involution_check(member, fam)
    generic = sum(1 for v in dims.values() if v == 1)
    return {
        "stabilizer_dims": dims,
        "generic_count": generic,
        "majority_generic": 2 * generic > len(dims),
        "forced_involution": forced_involution(fam),
        "involution_check": all(involutions.values()) if involutions else False,
    }


def analyze(weights, degree: int, seeds: Iterable[int] = DEFAULT_SEEDS, bound: int = COEFF_BOUND,
            intersection: bool = True) -> FamilyReport:
    fam = HypersurfaceFamily(WeightSystem(tuple(weights)), degree)
    seeds = list(seeds)
    rep = FamilyReport(
        weights=list(fam.weights.weights),
        degree=degree,
        cy_flag=fam.cy_flag,
        well_formed=fam.weights.well_formed,
    )
    rep.strata = [s.to_dict() for s in strata(fam.weights)]
    probe_member = random_member(fam, seeds[0], bound) if seeds else None
    for c in singular_curves(fam):
        entry = {
            "vanishing_set": list(c.stratum.vanishing_set),
            "genus": c.genus,
            "transverse_type": c.transverse_type,
            "flop_count": flop_count(c.genus) if c.genus >= 1 else None,
        }
        if probe_member is not None:
            try:
                entry["quasi_smooth_probe"] = quasi_smooth_probe(probe_member, c.stratum)
            except ValueError:
                entry["quasi_smooth_probe"] = None
        rep.singular_curves.append(entry)

    mc = moduli_count(fam)
    rep.moduli, rep.dim_Sd, rep.aut_dim = mc.moduli, mc.dim_Sd, mc.aut_dim
    rep.h21_Y = h21_resolution(fam)
    rep.s_e_codim = s_e_codim(fam)
    rep.consistency["moduli_bookkeeping"] = mc.moduli + 1 + mc.aut_dim == mc.dim_Sd
    genus_sum = sum(c["genus"] for c in rep.singular_curves)
    rep.consistency["s_e_codim_equals_genus"] = rep.s_e_codim == genus_sum

    if seeds:
        rep.automorphism = automorphism_block(fam, seeds, bound)
        rep.consistency["stabilizer_majority"] = rep.automorphism["majority_generic"]

    try:
        rep.h11_Y = resolution_picard_rank(fam)
    except UnsupportedSingularityError as exc:
        rep.error = f"unsupported singularity: {exc}"
        return rep

    split = hodge_split(fam)
    rep.hodge = split.to_dict()
    rep.euler_expected = euler_expected(fam)
    rep.consistency["betti_additivity"] = (
        split.b3_Y - split.b3_X == 2 * split.g_total and split.b3_Y == 2 + 2 * split.h21_Y
    )

    model = model_for(fam.weights.weights, degree) if intersection else None
    if model is not None:
        block = intersection_block(model)
        rep.intersection = block
        rep.consistency["euler_contract"] = block["euler_number"] == rep.euler_expected
        rep.consistency["picard_rank_matches_model"] = rep.h11_Y == 2
        if "deformation_invariant" in block:
            rep.consistency["deformation_invariance"] = block["deformation_invariant"]
    return rep


def render_text(rep: FamilyReport) -> str:
    lines = [f"X_{rep.degree} in P{rep.weights}  cy={rep.cy_flag}  well_formed={rep.well_formed}"]
    for s in rep.strata:
        lines.append(
            f"  stratum {s['vanishing_set']}: residual {s['residual_weights']}, "
            f"mu_{s['stabilizer_order']}, dim {s['dim']}"
        )
    for c in rep.singular_curves:
        lines.append(
            f"  singular curve {c['vanishing_set']}: genus {c['genus']}, {c['transverse_type']}, "
            f"flops {c['flop_count']}"
        )
    lines.append(f"  dim S_d {rep.dim_Sd}, aut dim {rep.aut_dim}, moduli {rep.moduli}")
    lines.append(f"  h11(Y) {rep.h11_Y}, h21(Y) {rep.h21_Y}, S_E codim {rep.s_e_codim}")
    if rep.hodge:
        h = rep.hodge
        lines.append(f"  b3: X {h['b3_X']} + moved {h['b3_moved']} = Y {h['b3_Y']}")
        lines.append(f"  euler (Hodge numbers) {rep.euler_expected}")
    if rep.intersection:
        b = rep.intersection
        lines.append(f"  model {b['model']} ({b['kind']}) over F{tuple(b['ambient'])}")
        lines.append(f"    cubic form {b['cubic_form']}, c2 form {b['c2_form']}, euler {b['euler_number']}")
        nef = b["nef_criterion"]
        lines.append(f"    nef criterion holds={nef['holds']} kernel={nef['kernel']} cubic={nef['cubic_value']}")
    if rep.automorphism:
        a = rep.automorphism
        lines.append(
            f"  stabilizer dim 1 on {a['generic_count']}/{len(a['stabilizer_dims'])} seeds; "
            f"forced involution {a['forced_involution']}; involution check {a['involution_check']}"
        )
    for k, v in sorted(rep.consistency.items()):
        lines.append(f"  [{'ok' if v else 'FAIL'}] {k}")
    if rep.error:
        lines.append(f"  ERROR: {rep.error}")
    return "\n".join(lines)


@dataclass
class Row:
    id: str
    name: str
    passed: bool
    detail: str


def _rows(reports: dict[str, FamilyReport]) -> list[tuple[str, str, Callable[[], tuple[bool, str]]]]:
    r8, r12, r14, rq = (reports[k] for k in ("x8", "x12", "x14", "quintic"))

    def genera():
        got = tuple(r.singular_curves[0]["genus"] for r in (r8, r12, r14))
        return got == (3, 2, 15), f"genera {got}"

    def moduli():
        ok = r14.moduli == 107 and r14.h21_Y - r14.singular_curves[0]["genus"] == 107
        return ok, f"moduli {r14.moduli}, h21-g {r14.h21_Y - r14.singular_curves[0]['genus']}"

    def flops():
        got = tuple(flop_count(r.singular_curves[0]["genus"]) for r in (r8, r12, r14))
        return got == (4, 2, 28), f"flops {got}"

    def picard():
        return (r8.h11_Y, r12.h11_Y) == (2, 2), f"h11 {(r8.h11_Y, r12.h11_Y)}"

    def nef():
        v = [r.intersection["nef_criterion"] for r in (r8, r12)]
        return all(x["holds"] for x in v), f"cubic at c2-kernel {[x['cubic_value'] for x in v]}"

    def euler():
        pairs = [(r.intersection["euler_number"], r.euler_expected) for r in (r8, r12)]
        return pairs == [(-168, -168), (-252, -252)], f"(chern, hodge) {pairs}"

    def deformation():
        ok = all(r.intersection["deformation_invariant"] for r in (r8, r12))
        return ok, "F(2,0,0,0)~F(1,1,0,0), F(2,0,0)~F(1,1,0)"

    def stabilizer():
        counts = [(r.automorphism["generic_count"], len(r.automorphism["stabilizer_dims"])) for r in (r8, r12, r14)]
        return all(2 * g > n and n == 20 for g, n in counts), f"dim-1 counts {counts}"

    def involution():
        got = tuple(r.automorphism["involution_check"] for r in (r8, r12, r14))
        return got == (False, True, True), f"{got}"

    def counting():
        rng = random.Random(20240601)
        for _ in range(500):
            n = rng.randint(1, 5)
            w = tuple(rng.randint(1, 9) for _ in range(n + 1))
            d = rng.randint(0, 40)
            if graded_dim(w, d) != len(enumerate_monomials(w, d, cap=None)):
                return False, f"mismatch at {w}, {d}"
        return True, "500 instances"

    def quintic():
        ok = rq.moduli == 101 and rq.h11_Y == 1 and rq.euler_expected == -200
        return ok, f"moduli {rq.moduli}, h11 {rq.h11_Y}, euler {rq.euler_expected}"

    def betti():
        ok = all(
            r.hodge["b3_Y"] - r.hodge["b3_X"] == 2 * r.singular_curves[0]["genus"] for r in (r8, r12, r14)
        )
        return ok, f"moved ranks {[r.hodge['b3_moved'] for r in (r8, r12, r14)]}"

    def anchor():
        vals = [
            int(integrate(ChowClass.xi(s) ** s.r, s))
            for s in (ScrollSpec((2, 0, 0, 0)), ScrollSpec((2, 0, 0)))
        ]
        return vals == [2, 2], f"int xi^r {vals}"

    def family_verdicts():
        bad = [k for k, r in reports.items() if not r.consistent]
        return not bad, f"inconsistent: {bad}" if bad else "all families"

    return [
        ("1", "genus triple", genera),
        ("2", "x14 moduli count", moduli),
        ("3", "flop counts", flops),
        ("4", "picard rank of resolution", picard),
        ("5", "nef-cone criterion", nef),
        ("6", "euler contract", euler),
        ("7", "deformation invariance", deformation),
        ("8", "stabilizer genericity", stabilizer),
        ("9", "involution dichotomy", involution),
        ("10", "counting oracle", counting),
        ("11", "quintic control", quintic),
        ("12", "betti additivity", betti),
        ("A1", "grothendieck sign anchor", anchor),
        ("A2", "per-family consistency verdicts", family_verdicts),
    ]


def consistency_suite(seeds: Iterable[int] = DEFAULT_SEEDS) -> list[Row]:
    seeds = list(seeds)
    reports = {name: analyze(*PRESETS[name], seeds=seeds) for name in PRESETS}
    rows = []
    for rid, name, check in _rows(reports):
        try:
            passed, detail = check()
        except Exception as exc:  # a crashed row is a failed row
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        rows.append(Row(rid, name, bool(passed), detail))
    return rows


def timed_suite(seeds: Iterable[int] = DEFAULT_SEEDS) -> tuple[list[Row], float]:
    start = time.perf_counter()
    rows = consistency_suite(seeds)
    return rows, time.perf_counter() - start
