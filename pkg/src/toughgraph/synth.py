"""Synthesis of nonhamiltonian graphs with prescribed toughness.

Given a rational t with 0 < t < 9/4 (in lowest terms; inputs are
normalized first), plan() picks one of ten construction regimes keyed on
the size of t and the parity of its denominator, scales t by the
smallest admissible integer q, and derives the block counts.  build()
realizes the plan as a concrete graph plus a certificate holding the
toughness witness cutset and a checkable nonhamiltonicity argument.

The regimes, by certificate "case" tag:
  1    0 < t < 1      complete bipartite, more independents than the rest
  2    t = 1          a fixed 7-vertex graph
  3    1 < t < 3/2    matched_layers, nonhamiltonian by edge counting
  4    t = 3/2        the triangle inflation of the Petersen graph
  5.x  3/2 < t < 7/4  clique joined onto chains of L2 (and one L3) blocks
  6.x  7/4 <= t <= 2  mixed L1/L2 (and one L3) block chains
  7.x  2 < t < 9/4    L1 chains, with one L4 block to fix parity
with .1 for odd and .2 for even denominator after reduction.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .blocks import (
    BlockKind,
    block,
    complete_bipartite,
    g_construct,
    inflate_triangles,
    inflation_cutset,
    matched_layers,
    petersen,
    unit_toughness_graph,
)
from .graphs import Graph
from .oracles import cutset_witness

__all__ = [
    "PlanError",
    "CertificateError",
    "SynthesisPlan",
    "NonHamiltonicityArgument",
    "Certificate",
    "parse_rational",
    "plan",
    "build",
    "synthesize",
    "predicted_toughness",
    "plan_order",
    "certificate_to_json",
    "certificate_from_json",
    "NONHAM_BIPARTITE",
    "NONHAM_EDGE_COUNT",
    "NONHAM_BLOCK_COUNT",
    "NONHAM_EXHAUSTIVE",
]

T_UPPER = Fraction(9, 4)

NONHAM_BIPARTITE = "bipartite_imbalance"
NONHAM_EDGE_COUNT = "edge_count"
NONHAM_BLOCK_COUNT = "block_count"
NONHAM_EXHAUSTIVE = "exhaustive"

_CASE_IDS = ("1", "2", "3", "4", "5.1", "5.2", "6.1", "6.2", "7.1", "7.2")

# kinds with no spanning path between their terminals
_PATH_FREE_KINDS = frozenset({BlockKind.L1, BlockKind.L2, BlockKind.L3})

_BLOCK_ORDER = {BlockKind.L1: 8, BlockKind.L2: 7, BlockKind.L3: 9, BlockKind.L4: 5}

_SCALE_CAP = 1_000_000


class PlanError(RuntimeError):
    """Internal inconsistency in a synthesis plan; sound plans never raise."""


class CertificateError(ValueError):
    """Certificate JSON that does not match the schema."""


@dataclass(frozen=True)
class SynthesisPlan:
    """Everything needed to rebuild a witness graph deterministically."""

    t: Fraction
    case_id: str
    q: int
    a_scaled: int
    b_scaled: int
    l: int
    m: int
    m1: Optional[int]
    m2: Optional[int]
    block_kinds: tuple[BlockKind, ...]
    notes: tuple[str, ...]


@dataclass(frozen=True)
class NonHamiltonicityArgument:
    """Tagged argument for why the built graph has no Hamilton cycle."""

    kind: str
    params: dict


@dataclass(frozen=True)
class Certificate:
    plan: SynthesisPlan
    n: int
    nonhamiltonicity: NonHamiltonicityArgument
    cutset: frozenset[int]
    components: int
    predicted_tau: Fraction


def parse_rational(text: str) -> Fraction:
    """Parse 'a/b' or 'a' with nonnegative integer a, positive b."""
    match = re.fullmatch(r"(\d+)(?:/(\d+))?", text.strip())
    if not match:
        raise ValueError(f"rational must look like a/b or a, got {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) else 1
    if den == 0:
        raise ValueError("rational has zero denominator")
    return Fraction(num, den)


def _as_fraction(t: Union[Fraction, int, str]) -> Fraction:
    if isinstance(t, bool) or isinstance(t, float):
        raise TypeError("t must be an exact rational (Fraction, int, or 'a/b' string)")
    if isinstance(t, str):
        return parse_rational(t)
    if isinstance(t, (int, Fraction)):
        return Fraction(t)
    raise TypeError(f"cannot interpret {type(t).__name__} as a rational")


def _case_for(t: Fraction) -> str:
    if t < 1:
        return "1"
    if t == 1:
        return "2"
    if t < Fraction(3, 2):
        return "3"
    if t == Fraction(3, 2):
        return "4"
    odd = t.denominator % 2 == 1
    if t < Fraction(7, 4):
        return "5.1" if odd else "5.2"
    if t <= 2:
        return "6.1" if odd else "6.2"
    return "7.1" if odd else "7.2"


@dataclass(frozen=True)
class _Derived:
    a_s: int
    b_s: int
    l: int
    m: int
    m1: Optional[int]
    m2: Optional[int]
    kinds: tuple[BlockKind, ...]
    ok: bool


def _derive(case_id: str, t: Fraction, q: int) -> _Derived:
    """Parameters of a regime at scale q, plus whether q is admissible."""
    a, b = t.numerator, t.denominator
    A, B = a * q, b * q
    l = m = 0
    m1: Optional[int] = None
    m2: Optional[int] = None
    kinds: tuple[BlockKind, ...] = ()
    if case_id in ("1", "2", "4"):
        ok = q == 1
    elif case_id == "3":
        # nonhamiltonicity needs the independent layer to outgrow the
        # cycle capacity of the rest: 3*B > 2*A + 2
        ok = B >= 2 and 3 * B > 2 * A + 2
    elif case_id == "5.1":
        m = (B - 1) // 2
        l = A - 3 * (B - 1) // 2
        kinds = (BlockKind.L2,) * m
        ok = B % 2 == 1 and l >= 2 and m >= 1 and m >= 2 * l + 1
    elif case_id == "5.2":
        m = B // 2 - 1
        l = A - 3 * B // 2 + 2
        kinds = (BlockKind.L2,) * max(m - 1, 0) + (BlockKind.L3,)
        ok = B % 2 == 0 and l >= 2 and m >= 1 and m >= 2 * l + 1
    elif case_id == "6.1":
        m2 = (B - 1) // 2
        l = A - 3 * (B - 1) // 2
        m1 = max(1, 2 * l + 1 - m2)
        m = m1 + m2
        kinds = (BlockKind.L1,) * m1 + (BlockKind.L2,) * m2
        ok = B % 2 == 1 and l >= 2 and m2 >= max(0, l - 2) and m >= 2 * l + 1
    elif case_id == "6.2":
        m2 = B // 2 - 1
        l = A - 3 * B // 2 + 2
        m1 = max(1, 2 * l + 1 - m2)
        m = m1 + m2
        kinds = (
            (BlockKind.L1,) * m1
            + (BlockKind.L2,) * max(m2 - 1, 0)
            + (BlockKind.L3,)
        )
        ok = B % 2 == 0 and l >= 2 and m2 >= max(1, l - 2) and m >= 2 * l + 1
    elif case_id == "7.1":
        m = (B - 1) // 2
        l = A - 2 * B + 2
        kinds = (BlockKind.L1,) * m
        ok = B % 2 == 1 and l >= 2 and m >= 1 and m >= 2 * l + 1
    elif case_id == "7.2":
        m = B // 2
        l = A - 2 * B + 2
        kinds = (BlockKind.L1,) * max(m - 1, 0) + (BlockKind.L4,)
        # only the chorded-cycle blocks lack terminal paths here
        ok = B % 2 == 0 and l >= 2 and m >= 1 and m - 1 >= 2 * l + 1
    else:
        raise PlanError(f"unknown case id {case_id!r}")
    return _Derived(A, B, l, m, m1, m2, kinds, ok)


def plan(t: Union[Fraction, int, str]) -> SynthesisPlan:
    """Deterministic synthesis plan for toughness exactly t.

    Raises ValueError when t is outside (0, 9/4).  The scale q is the
    smallest admissible one (smallest odd one where the reduced
    denominator must stay odd), so equal rationals always yield the
    identical plan.
    """
    t = _as_fraction(t)
    if not 0 < t < T_UPPER:
        raise ValueError("t must satisfy 0 < t < 9/4")
    case_id = _case_for(t)
    step = 2 if case_id in ("5.1", "6.1", "7.1") else 1
    q = 1
    derived = _derive(case_id, t, q)
    while not derived.ok:
        q += step
        if q > _SCALE_CAP:
            raise PlanError(f"no admissible scale for t={t} below {_SCALE_CAP}")
        derived = _derive(case_id, t, q)

    notes = []
    if case_id in ("6.1", "6.2"):
        notes.append("regime covers 7/4 <= t <= 2 with both endpoints included")
    if case_id == "6.2":
        notes.append("l = a_scaled - 3*b_scaled/2 + 2")
    if case_id == "6.1" and derived.m2 == 0:
        notes.append(
            "witness cutset drawn from the chorded-cycle block cores; "
            "no contracted blocks exist at this t"
        )
    if case_id == "7.2":
        notes.append("scale chosen so that t <= 9/4 - 3/b_scaled")
        notes.append("path-free count excludes the one path-admitting block")

    p = SynthesisPlan(
        t=t,
        case_id=case_id,
        q=q,
        a_scaled=derived.a_s,
        b_scaled=derived.b_s,
        l=derived.l,
        m=derived.m,
        m1=derived.m1,
        m2=derived.m2,
        block_kinds=derived.kinds,
        notes=tuple(notes),
    )
    validate_plan(p)
    return p


def validate_plan(p: SynthesisPlan) -> None:
    """Check a plan's internal consistency; raises PlanError when any
    derived quantity disagrees with its fields."""
    t = p.t
    if not isinstance(t, Fraction) or not 0 < t < T_UPPER:
        raise PlanError("plan target out of range (0, 9/4)")
    if _case_for(t) != p.case_id:
        raise PlanError(f"case {p.case_id} does not match t={t}")
    if p.q < 1:
        raise PlanError("scale must be positive")
    derived = _derive(p.case_id, t, p.q)
    if not derived.ok:
        raise PlanError(f"scale q={p.q} violates the conditions of case {p.case_id}")
    stored = (p.a_scaled, p.b_scaled, p.l, p.m, p.m1, p.m2, p.block_kinds)
    fresh = (
        derived.a_s, derived.b_s, derived.l, derived.m,
        derived.m1, derived.m2, derived.kinds,
    )
    if stored != fresh:
        raise PlanError(f"plan fields {stored} disagree with derivation {fresh}")
    if predicted_toughness(p) != t:
        raise PlanError("governing formula does not reproduce t")


def predicted_toughness(p: SynthesisPlan) -> Fraction:
    """The governing toughness formula of the plan's regime."""
    c = p.case_id
    if c in ("1", "3"):
        return Fraction(p.a_scaled, p.b_scaled)
    if c == "2":
        return Fraction(1)
    if c == "4":
        return Fraction(3, 2)
    if c == "5.1":
        return Fraction(p.l + 3 * p.m, 1 + 2 * p.m)
    if c == "5.2":
        return Fraction(p.l + 3 * p.m + 1, 2 * (p.m + 1))
    if c in ("6.1", "6.2"):
        if p.m2 is None:
            raise PlanError(f"case {c} needs m2")
        if c == "6.1":
            return Fraction(p.l + 3 * p.m2, 2 * p.m2 + 1)
        return Fraction(p.l + 3 * p.m2 + 1, 2 * (p.m2 + 1))
    if c == "7.1":
        return Fraction(p.l + 4 * p.m, 2 * p.m + 1)
    if c == "7.2":
        return Fraction(p.l + 4 * p.m - 2, 2 * p.m)
    raise PlanError(f"unknown case id {c!r}")


def plan_order(p: SynthesisPlan) -> int:
    """Vertex count of the graph the plan builds, without building it."""
    c = p.case_id
    if c == "1":
        return p.a_scaled + p.b_scaled
    if c == "2":
        return 7
    if c == "3":
        return p.a_scaled + p.b_scaled + 1
    if c == "4":
        return 30
    return p.l + sum(_BLOCK_ORDER[k] for k in p.block_kinds)


def _witness_kinds(p: SynthesisPlan) -> frozenset[BlockKind]:
    """Block kinds whose cut cores join the terminal clique in the
    standard witness cutset."""
    table = {
        "5.1": frozenset({BlockKind.L2}),
        "5.2": frozenset({BlockKind.L2, BlockKind.L3}),
        "6.2": frozenset({BlockKind.L2, BlockKind.L3}),
        "7.1": frozenset({BlockKind.L1}),
        "7.2": frozenset({BlockKind.L1, BlockKind.L4}),
    }
    if p.case_id == "6.1":
        # with no L2 blocks at all (t = 2) the L1 cores give the same ratio
        return frozenset({BlockKind.L2 if p.m2 else BlockKind.L1})
    return table[p.case_id]


def build(p: SynthesisPlan) -> tuple[Graph, Certificate]:
    """Realize a plan: the graph, and a certificate with a verified
    witness cutset and the nonhamiltonicity argument for its regime."""
    validate_plan(p)
    A, B = p.a_scaled, p.b_scaled
    if p.case_id == "1":
        g = complete_bipartite(A, B)
        cut = frozenset(range(A))
        arg = NonHamiltonicityArgument(NONHAM_BIPARTITE, {"independent_side": B})
    elif p.case_id == "2":
        g = unit_toughness_graph()
        cut = frozenset({0, 3})
        arg = NonHamiltonicityArgument(NONHAM_EXHAUSTIVE, {})
    elif p.case_id == "3":
        g = matched_layers(A, B)
        n1 = A - B + 1
        cut = frozenset(range(n1)) | frozenset(n1 + B + i for i in range(B - 1))
        arg = NonHamiltonicityArgument(
            NONHAM_EDGE_COUNT,
            {
                "required_incidences": 2 * B,
                "available_incidences": 2 * (A - B + 1) + B,
            },
        )
    elif p.case_id == "4":
        base = petersen()
        g = inflate_triangles(base)
        cut = inflation_cutset(base)
        arg = NonHamiltonicityArgument(NONHAM_EXHAUSTIVE, {})
    else:
        blocks = [block(k) for k in p.block_kinds]
        g = g_construct(p.l, blocks)
        chosen = _witness_kinds(p)
        picks = set(range(p.l))
        offset = p.l
        for b in blocks:
            if b.kind in chosen:
                picks.update(offset + v for v in b.cut_core)
            offset += b.n
        cut = frozenset(picks)
        path_free = sum(1 for k in p.block_kinds if k in _PATH_FREE_KINDS)
        arg = NonHamiltonicityArgument(
            NONHAM_BLOCK_COUNT,
            {"required": 2 * p.l + 1, "path_free_blocks": path_free},
        )
    witness = cutset_witness(g, cut)
    predicted = predicted_toughness(p)
    if witness.ratio != predicted:
        raise PlanError(
            f"witness ratio {witness.ratio} disagrees with predicted {predicted}"
        )
    if g.n != plan_order(p):
        raise PlanError("built order disagrees with plan_order")
    cert = Certificate(
        plan=p,
        n=g.n,
        nonhamiltonicity=arg,
        cutset=witness.cutset,
        components=witness.component_count,
        predicted_tau=predicted,
    )
    return g, cert


def synthesize(t: Union[Fraction, int, str]) -> tuple[Graph, Certificate]:
    return build(plan(t))


# -- certificate JSON ---------------------------------------------------

_CERT_KEYS = {
    "t", "case", "q", "a_scaled", "b_scaled", "l", "m", "m1", "m2",
    "blocks", "nonhamiltonicity", "cutset", "components", "predicted_tau",
    "notes",
}

_NONHAM_KINDS = {
    NONHAM_BIPARTITE, NONHAM_EDGE_COUNT, NONHAM_BLOCK_COUNT, NONHAM_EXHAUSTIVE,
}


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def certificate_to_json(cert: Certificate) -> str:
    p = cert.plan
    payload = {
        "t": _frac_str(p.t),
        "case": p.case_id,
        "q": p.q,
        "a_scaled": p.a_scaled,
        "b_scaled": p.b_scaled,
        "l": p.l,
        "m": p.m,
        "m1": p.m1,
        "m2": p.m2,
        "blocks": [k.value for k in p.block_kinds],
        "nonhamiltonicity": {"kind": cert.nonhamiltonicity.kind,
                             **cert.nonhamiltonicity.params},
        "cutset": sorted(cert.cutset),
        "components": cert.components,
        "predicted_tau": _frac_str(cert.predicted_tau),
        "notes": list(p.notes),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _want_int(payload: dict, key: str, minimum: int) -> int:
    v = payload[key]
    if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
        raise CertificateError(f'"{key}" must be an integer >= {minimum}, got {v!r}')
    return v


def certificate_from_json(text: str) -> Certificate:
    """Parse certificate JSON, checking the schema only.

    Semantic consistency (does the plan derive, does the cutset achieve
    the ratio) is the verifier's job; a schema-valid but wrong
    certificate parses fine and is then rejected by check_certificate.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"bad JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise CertificateError("certificate must be a JSON object")
    if set(payload) != _CERT_KEYS:
        missing = _CERT_KEYS - set(payload)
        extra = set(payload) - _CERT_KEYS
        raise CertificateError(
            f"certificate keys wrong: missing {sorted(missing)}, extra {sorted(extra)}"
        )
    if payload["case"] not in _CASE_IDS:
        raise CertificateError(f'unknown case {payload["case"]!r}')
    try:
        t = parse_rational(payload["t"]) if isinstance(payload["t"], str) else None
        tau = (
            parse_rational(payload["predicted_tau"])
            if isinstance(payload["predicted_tau"], str)
            else None
        )
    except ValueError as exc:
        raise CertificateError(str(exc)) from None
    if t is None or tau is None:
        raise CertificateError('"t" and "predicted_tau" must be rational strings')
    q = _want_int(payload, "q", 1)
    a_s = _want_int(payload, "a_scaled", 1)
    b_s = _want_int(payload, "b_scaled", 1)
    l = _want_int(payload, "l", 0)
    m = _want_int(payload, "m", 0)
    m1 = m2 = None
    if payload["m1"] is not None:
        m1 = _want_int(payload, "m1", 0)
    if payload["m2"] is not None:
        m2 = _want_int(payload, "m2", 0)
    components = _want_int(payload, "components", 1)
    if not isinstance(payload["blocks"], list):
        raise CertificateError('"blocks" must be a list')
    try:
        kinds = tuple(BlockKind(s) for s in payload["blocks"])
    except ValueError as exc:
        raise CertificateError(f"bad block kind: {exc}") from None
    raw_cut = payload["cutset"]
    if not isinstance(raw_cut, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in raw_cut
    ):
        raise CertificateError('"cutset" must be a list of nonnegative integers')
    cutset = frozenset(raw_cut)
    if len(cutset) != len(raw_cut):
        raise CertificateError('"cutset" has repeated vertices')
    notes_raw = payload["notes"]
    if not isinstance(notes_raw, list) or not all(isinstance(s, str) for s in notes_raw):
        raise CertificateError('"notes" must be a list of strings')
    nh = payload["nonhamiltonicity"]
    if not isinstance(nh, dict) or "kind" not in nh:
        raise CertificateError('"nonhamiltonicity" must be an object with a "kind"')
    if nh["kind"] not in _NONHAM_KINDS:
        raise CertificateError(f'unknown nonhamiltonicity kind {nh["kind"]!r}')
    params = {k: v for k, v in nh.items() if k != "kind"}
    for k, v in params.items():
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise CertificateError(f"nonhamiltonicity parameter {k}={v!r} must be an integer")
    p = SynthesisPlan(
        t=t, case_id=payload["case"], q=q, a_scaled=a_s, b_scaled=b_s,
        l=l, m=m, m1=m1, m2=m2, block_kinds=kinds, notes=tuple(notes_raw),
    )
    return Certificate(
        plan=p,
        n=plan_order(p),
        nonhamiltonicity=NonHamiltonicityArgument(nh["kind"], params),
        cutset=cutset,
        components=components,
        predicted_tau=tau,
    )
