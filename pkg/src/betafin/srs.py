"""The shift radix system attached to Q(beta).

Integer vectors l in Z^{d-1} evolve by tau(l) = (l_2, ..., l_{d-1},
-floor(r . l)) where r is the radix vector built from the defining
coefficients.  The fractional value map conjugates tau to the
beta-transformation on Z[beta] intersected with [0, 1), which turns
digit finiteness questions into reachability questions on integer
vectors: F collects the vectors whose tau-orbit hits zero, Q the closure
of the initial vector under tau and its dual, and P the nonzero
tau-periodic points of Q.  The finiteness certificate checks the two
conditions (preimage closure of P, and the delta-box slice of V landing
in F) whose conjunction is sufficient for every natural number to have a
finite expansion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ClosureBudgetExceeded, GoldenRatioPrecondition, InvariantViolation
from .expansion import is_finite_expansion
from .field import BetaField, FieldElement

SrsVector = tuple[int, ...]

DEFAULT_CLOSURE_CAP = 1_000_000
DEFAULT_WALK_CAP = 100_000
DEFAULT_BOX_PAD = 8


class ShiftRadixSystem:
    """tau, its dual, and the conjugacy data for one field."""

    def __init__(self, field: BetaField):
        self.field = field
        self.dim = field.degree - 1
        binv = field.beta_inverse()
        a = field.coeffs
        # r_j = sum_{i=1}^{j} a_{j-i} beta^{-i}
        self.r: list[FieldElement] = []
        for j in range(1, field.degree):
            acc = field.zero()
            power = field.one()
            for i in range(1, j + 1):
                power = power * binv
                acc = acc + a[j - i] * power
            self.r.append(acc)

    def initial_vector(self) -> SrsVector:
        return (0,) * (self.dim - 1) + (1,)

    def value(self, vec: SrsVector) -> FieldElement:
        """The inner product r . vec, exact in Q(beta)."""
        self._check(vec)
        acc = self.field.zero()
        for rj, lj in zip(self.r, vec):
            if lj:
                acc = acc + lj * rj
        return acc

    def frac_value(self, vec: SrsVector) -> FieldElement:
        v = self.value(vec)
        return v - v.floor()

    def tau(self, vec: SrsVector) -> SrsVector:
        self._check(vec)
        return vec[1:] + (-self.value(vec).floor(),)

    def tau_star(self, vec: SrsVector) -> SrsVector:
        """-tau(-l); checked to equal tau(l) - initial_vector for l != 0."""
        out = tuple(-c for c in self.tau(tuple(-c for c in vec)))
        if any(vec):
            expect = _vec_sub(self.tau(vec), self.initial_vector())
            if out != expect:
                raise InvariantViolation("tau_star identity tau(l) - l_I failed")
        return out

    def _check(self, vec: SrsVector) -> None:
        if len(vec) != self.dim:
            raise ValueError(f"vector length {len(vec)} != {self.dim}")


def _vec_sub(a: SrsVector, b: SrsVector) -> SrsVector:
    return tuple(x - y for x, y in zip(a, b))


@dataclass
class OrbitGraph:
    """Q as a functional tau-graph with F and P membership flags."""

    srs: ShiftRadixSystem
    nodes: tuple[SrsVector, ...]
    edges: dict[SrsVector, SrsVector]
    in_f: dict[SrsVector, bool]
    p_nodes: frozenset[SrsVector]

    def node_count(self) -> int:
        return len(self.nodes)


def q_set(srs: ShiftRadixSystem, cap: int = DEFAULT_CLOSURE_CAP) -> OrbitGraph:
    """Closure of the initial vector under tau and its dual, with the
    tau-edge relation and membership annotations."""
    start = srs.initial_vector()
    seen: set[SrsVector] = {start}
    frontier = [start]
    edges: dict[SrsVector, SrsVector] = {}
    while frontier:
        nxt = []
        for v in frontier:
            t = srs.tau(v)
            edges[v] = t
            for img in (t, srs.tau_star(v)):
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
            if len(seen) > cap:
                raise ClosureBudgetExceeded(f"closure exceeded {cap} vectors")
        frontier = nxt
    for v in list(seen):
        if v not in edges:
            edges[v] = srs.tau(v)
    if any(t not in seen for t in edges.values()):
        raise InvariantViolation("closure is not tau-closed")

    # F membership: resolve reach-to-zero over the functional graph
    in_f: dict[SrsVector, bool] = {}
    zero = (0,) * srs.dim
    for v in seen:
        if v in in_f:
            continue
        path = []
        cur = v
        while cur not in in_f and cur not in path and cur != zero:
            path.append(cur)
            cur = edges[cur]
        verdict = True if cur == zero else (in_f[cur] if cur in in_f else False)
        for node in path:
            in_f[node] = verdict
    if zero in seen:
        in_f[zero] = True

    # P: nonzero nodes lying on tau-cycles
    p_nodes = set()
    for v in seen:
        if v == zero:
            continue
        cur = srs.tau(v)
        for _ in range(len(seen)):
            if cur == v:
                p_nodes.add(v)
                break
            cur = edges[cur]
    nodes = tuple(sorted(seen))
    return OrbitGraph(srs, nodes, edges, in_f, frozenset(p_nodes))


def in_f_beta(srs: ShiftRadixSystem, vec: SrsVector, cap: int = DEFAULT_WALK_CAP) -> bool:
    """Does the tau-orbit of vec reach the zero vector?"""
    zero = (0,) * srs.dim
    seen: set[SrsVector] = set()
    cur = vec
    while cur != zero:
        if cur in seen:
            return False
        seen.add(cur)
        if len(seen) > cap:
            raise ClosureBudgetExceeded(f"tau walk exceeded {cap} states")
        cur = srs.tau(cur)
    return True


def p_set(graph: OrbitGraph) -> frozenset[SrsVector]:
    return graph.p_nodes


def tau_preimages(
    srs: ShiftRadixSystem, vec: SrsVector, restrict: set[SrsVector] | None = None
) -> set[SrsVector]:
    """All integer vectors l with tau(l) = vec.

    A preimage is (x, vec_1, ..., vec_{d-2}) and x solves
    floor(value(l)) = -vec_{d-1}; the value is affine in x with the
    nonzero slope r_1, so x ranges over an explicit integer interval.
    """
    srs._check(vec)
    fixed = vec[:-1]
    target = -vec[-1]
    r1 = srs.r[0]
    const = srs.field.zero()
    for rj, lj in zip(srs.r[1:], fixed):
        if lj:
            const = const + lj * rj
    # target <= x*r1 + const < target + 1
    lo_val = (srs.field.from_rational(target) - const) / r1
    hi_val = (srs.field.from_rational(target + 1) - const) / r1
    if r1.sign() > 0:
        lo_int = _ceil(lo_val)
        hi_int = _ceil(hi_val) - 1
    else:
        lo_val, hi_val = hi_val, lo_val
        # here the inequality flips to open at the left end
        lo_int = _floor(lo_val) + 1
        hi_int = _floor(hi_val)
    out: set[SrsVector] = set()
    for x in range(lo_int, hi_int + 1):
        cand = (x,) + fixed
        if srs.tau(cand) != vec:
            raise InvariantViolation("preimage interval produced a non-preimage")
        out.add(cand)
    if restrict is not None:
        out &= restrict
    return out


def _floor(v: FieldElement) -> int:
    return v.floor()


def _ceil(v: FieldElement) -> int:
    return -((-v).floor())


def delta(p_nodes: frozenset[SrsVector] | set[SrsVector]) -> int:
    """Largest coordinate magnitude over P; 0 for an empty P."""
    return max((abs(c) for v in p_nodes for c in v), default=0)


def tau_orbit_vectors(srs: ShiftRadixSystem, cap: int = DEFAULT_WALK_CAP) -> list[SrsVector]:
    """Distinct nonzero vectors of the tau-orbit of the initial vector."""
    zero = (0,) * srs.dim
    out: list[SrsVector] = []
    seen: set[SrsVector] = set()
    cur = srs.initial_vector()
    while cur != zero and cur not in seen:
        seen.add(cur)
        out.append(cur)
        if len(out) > cap:
            raise ClosureBudgetExceeded(f"tau orbit exceeded {cap} states")
        cur = srs.tau(cur)
    return out


def v_box_set(
    srs: ShiftRadixSystem,
    delta_bound: int,
    pad: int = DEFAULT_BOX_PAD,
    cap: int = DEFAULT_CLOSURE_CAP,
) -> tuple[set[SrsVector], bool]:
    """Members of V inside the delta-box, with a completeness flag.

    V is the set of finite sums -sum omega_n s_n over the orbit vectors
    s_n.  When the s_n all have the same coordinate sign, partial sums
    are coordinate-monotone and the box-restricted breadth first search
    enumerates the slice exactly.  Otherwise the search runs in a padded
    box and the result is flagged incomplete (never silently wrong).
    """
    if delta_bound < 0:
        raise ValueError("delta must be >= 0")
    S = tau_orbit_vectors(srs)
    box = delta_bound
    if delta_bound == 0 or not S:
        # the box holds only the zero vector, which is always a member
        return {(0,) * srs.dim}, True
    monotone = all(c >= 0 for v in S for c in v) or all(c <= 0 for v in S for c in v)
    bound = box if monotone else box + max(abs(c) for v in S for c in v) * pad
    zero = (0,) * srs.dim
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for s in S:
                w = _vec_sub(v, s)
                if w in seen or any(abs(c) > bound for c in w):
                    continue
                seen.add(w)
                nxt.append(w)
                if len(seen) > cap:
                    raise ClosureBudgetExceeded(f"V enumeration exceeded {cap} vectors")
        frontier = nxt
    slice_ = {v for v in seen if all(abs(c) <= box for c in v)}
    return slice_, monotone


@dataclass(frozen=True)
class F1Certificate:
    """Machine-checkable certificate for the natural-number finiteness
    property; the verdict is proven or unknown, never refuted, because
    the two conditions are only sufficient."""

    verdict: str
    p_set: frozenset[SrsVector]
    delta: int
    r0: frozenset[SrsVector]
    r0_complete: bool
    preimage_closure_ok: bool
    diagnostic: str = ""

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "p_set": sorted(list(v) for v in self.p_set),
            "delta": self.delta,
            "r0": sorted(list(v) for v in self.r0),
            "r0_complete": self.r0_complete,
            "preimage_closure_ok": self.preimage_closure_ok,
            "diagnostic": self.diagnostic,
        }


def f1_certificate(
    srs: ShiftRadixSystem,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
    walk_cap: int = DEFAULT_WALK_CAP,
    box_pad: int = DEFAULT_BOX_PAD,
) -> F1Certificate:
    """Check the sufficient condition: every preimage of a P vector stays
    in P, and the delta-box slice of V reaches zero under tau."""
    try:
        graph = q_set(srs, closure_cap)
        P = graph.p_nodes
        d = delta(P)
        closure_ok = all(tau_preimages(srs, p) <= P for p in P)
        r0, complete = v_box_set(srs, d, box_pad, closure_cap)
        r0_in_f = all(in_f_beta(srs, v, walk_cap) for v in r0)
    except ClosureBudgetExceeded as exc:
        return F1Certificate(
            "unknown", frozenset(), 0, frozenset(), False, False, f"budget: {exc}"
        )
    if closure_ok and r0_in_f and complete:
        verdict = "proven"
        diag = ""
    else:
        verdict = "unknown"
        parts = []
        if not closure_ok:
            parts.append("preimage closure fails")
        if not r0_in_f:
            parts.append("a box vector misses F")
        if not complete:
            parts.append("box enumeration incomplete")
        diag = "; ".join(parts)
    return F1Certificate(verdict, P, d, frozenset(r0), complete, closure_ok, diag)


def floor_beta_plus_one_finite(srs: ShiftRadixSystem, cap: int = DEFAULT_WALK_CAP) -> bool:
    """Finiteness of the expansion of floor(beta) + 1, decided on the
    vector side and cross-checked on the digit side.

    Requires beta at or above the golden ratio so that
    floor(beta) + 1 < beta^2.
    """
    field = srs.field
    b = field.beta()
    if (b * b - b - 1).sign() < 0:
        raise GoldenRatioPrecondition("needs beta >= (1+sqrt(5))/2")
    neg_li = tuple(-c for c in srs.initial_vector())
    vec_side = in_f_beta(srs, neg_li, cap)
    digit_side = is_finite_expansion(field.from_rational(field.floor_beta() + 1))
    if vec_side != digit_side:
        raise InvariantViolation("vector and digit sides of the floor(beta)+1 test disagree")
    return vec_side


def export_graph(graph: OrbitGraph, fmt: str = "dot") -> str:
    """Deterministic DOT or JSON rendering of the orbit graph.

    DOT marks P nodes with shape=doublecircle and F nodes with
    style=filled; nodes are ordered lexicographically.
    """
    nodes = sorted(graph.nodes)

    def name(v: SrsVector) -> str:
        return ",".join(str(c) for c in v)

    if fmt == "dot":
        lines = ["digraph srs {"]
        for v in nodes:
            attrs = []
            if v in graph.p_nodes:
                attrs.append("shape=doublecircle")
            if graph.in_f.get(v, False):
                attrs.append("style=filled")
            suffix = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f'  "{name(v)}"{suffix};')
        for v in nodes:
            lines.append(f'  "{name(v)}" -> "{name(graph.edges[v])}";')
        lines.append("}")
        return "\n".join(lines)
    if fmt == "json":
        return json.dumps(
            {
                "nodes": [list(v) for v in nodes],
                "edges": [[list(v), list(graph.edges[v])] for v in nodes],
                "p_set": sorted(list(v) for v in graph.p_nodes),
                "f_flags": [graph.in_f.get(v, False) for v in nodes],
            }
        )
    raise ValueError(f"unknown format {fmt!r}")
