"""Digit normalization: free blocks, the carry rewrite, and x -> x+1.

An admissible word factors uniquely into maximal prefixes of the
quasi-greedy expansion of 1, each closed by a strictly smaller digit
(its "free blocks").  Incrementing a digit generally breaks
admissibility; the carry rewrite repairs it by bumping the digit at the
enclosing block boundary and subtracting the quasi-greedy word from the
tail, preserving the value exactly.  Iterating the rewrite from the
innermost block outward normalizes the expansion of x + 1 and, as a by
product, certifies the identity

    frac(x + 1) - frac(x) = theta - sum_j omega_j T^j(1)

with theta in {0, 1} and nonnegative integers omega_j.  Every step here
self-checks against exact field arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CascadeOverrun, InvariantViolation, NotAdmissible, OutOfRange
from .expansion import (
    DEFAULT_ORBIT_CAP,
    Expansion,
    beta_expand,
    big_l,
    d_beta,
    d_beta_star,
    frac_part,
    is_admissible,
    nu as word_value,
    t_orbit_of_one,
    xi,
    xi_t_power,
)
from .field import BetaField, FieldElement
from .words import Word, compare_window, subtract

_SCAN_CAP = 1_000_000


def nu(field: BetaField, w: Word) -> FieldElement:
    """Exact value of a (possibly signed) eventually periodic word."""
    return word_value(field, w)


@dataclass(frozen=True)
class FreeBlockDecomposition:
    """Block boundaries k_1 < k_2 < ... of an admissible word.

    Eventually the gaps repeat: head holds the explicit boundaries and
    cycle_gaps the gap cycle that continues forever after them.
    """

    head: tuple[int, ...]
    cycle_gaps: tuple[int, ...]

    def k(self, i: int) -> int:
        """The i-th boundary, 1-based; k(0) = 0."""
        if i < 0:
            raise ValueError("block index must be >= 0")
        if i == 0:
            return 0
        if i <= len(self.head):
            return self.head[i - 1]
        base = self.head[-1] if self.head else 0
        m = i - len(self.head)
        full, part = divmod(m, len(self.cycle_gaps))
        return base + full * sum(self.cycle_gaps) + sum(self.cycle_gaps[:part])

    def locate(self, ell: int) -> int:
        """The index i with k(i) < ell <= k(i+1)."""
        if ell < 1:
            raise ValueError("position must be >= 1")
        i = 0
        while self.k(i + 1) < ell:
            i += 1
        return i

    def boundaries(self, count: int) -> list[int]:
        return [self.k(i) for i in range(1, count + 1)]


def free_blocks(field: BetaField, w: Word) -> FreeBlockDecomposition:
    """Decompose an admissible word into its free blocks.

    The scan walks block by block: inside a block the word copies the
    quasi-greedy expansion of 1 and the block closes at the first
    strictly smaller digit.  An upward deviation, or a tail that never
    deviates, is exactly a failure of admissibility.
    """
    dstar = d_beta_star(field)
    prelen = len(w.pre)
    plen = w.period_len()
    ks: list[int] = []
    seen: dict[int, int] = {}
    s = 0
    while len(ks) <= prelen + plen + 2:
        if s >= prelen:
            key = (s - prelen) % plen
            if key in seen:
                start = seen[key]
                gaps = []
                prev = ks[start - 1] if start > 0 else 0
                for kv in ks[start:]:
                    gaps.append(kv - prev)
                    prev = kv
                return FreeBlockDecomposition(tuple(ks[:start]), tuple(gaps))
            seen[key] = len(ks)
        suffix = w.shift(s)
        bound = compare_window(suffix, dstar) + 1
        j = None
        for idx in range(bound):
            a, b = suffix.digit(idx), dstar.digit(idx)
            if a != b:
                if a > b:
                    raise NotAdmissible(
                        f"digit above the quasi-greedy bound at position {s + idx + 1}"
                    )
                j = idx + 1
                break
        if j is None:
            raise NotAdmissible(f"shift at position {s} coincides with the quasi-greedy word")
        ks.append(s + j)
        s += j
    raise InvariantViolation("free block scan failed to close a gap cycle")


def carry_step(
    field: BetaField,
    w: Word,
    blocks: FreeBlockDecomposition,
    ell: int,
    tail: Word,
    block_index: int,
) -> Word:
    """One carry rewrite of the word with digit ell incremented and the
    given tail after position ell.

    Returns w[1, k_i - 1] (w_{k_i} + 1) 0^{ell-k_i-1} theta (tail minus the
    shifted quasi-greedy word), value-preserving by construction; the
    preservation and the nonnegativity inequality for the new tail value
    are both re-checked exactly.
    """
    i = block_index
    if i < 1:
        raise InvariantViolation("carry_step needs a block index >= 1")
    ki = blocks.k(i)
    kj = blocks.k(i + 1)
    if ell <= ki:
        raise InvariantViolation("increment position must lie beyond block k_i")
    dstar = d_beta_star(field)
    theta = 1 if ell < kj else 0

    if theta == 0:
        # the rewrite is only valid when positions k_i+1 .. ell copy the
        # quasi-greedy word; the cascade guarantees it, re-check anyway
        incremented = list(w.digits(kj)) + [0] * (ell - kj)
        incremented[kj - 1] += 1
        for off in range(ell - ki):
            if incremented[ki + off] != dstar.digit(off):
                raise InvariantViolation("carry fired outside the quasi-greedy prefix")

    new_tail = subtract(tail, dstar.shift(ell - ki))
    head = list(w.digits(ki - 1)) + [w.digit(ki - 1) + 1] + [0] * (ell - ki - 1) + [theta]
    out = new_tail.prepend(head)

    # exact value preservation against the incremented original
    if theta == 1:
        before = tail.prepend(list(w.digits(ell - 1)) + [w.digit(ell - 1) + 1])
    else:
        head_before = list(w.digits(kj - 1)) + [w.digit(kj - 1) + 1] + [0] * (ell - kj)
        before = tail.prepend(head_before)
    if nu(field, out) != nu(field, before):
        raise InvariantViolation("carry rewrite changed the value")
    gain = theta + nu(field, tail) - xi(field, ell - ki + 1)
    if gain.sign() < 0:
        raise InvariantViolation("carry tail value went negative")
    return out


@dataclass(frozen=True)
class KeyWitness:
    """Certificate for frac(x+1) - frac(x) = theta - sum_j omega_j T^j(1)."""

    theta: int
    omegas: tuple[int, ...]
    lhs: FieldElement
    rhs: FieldElement
    verified: bool

    def to_json_dict(self) -> dict:
        return {
            "theta": self.theta,
            "omegas": list(self.omegas),
            "lhs": [str(c) for c in self.lhs.coords],
            "rhs": [str(c) for c in self.rhs.coords],
            "verified": self.verified,
        }


def _assemble_witness(
    field: BetaField, theta: int, xi_indices: list[int], lhs: FieldElement
) -> KeyWitness:
    omegas: dict[int, int] = {}
    for m in xi_indices:
        j = xi_t_power(field, m)
        if xi(field, m) != t_orbit_of_one(field, j)[j]:
            raise InvariantViolation("xi value does not match its T-orbit representative")
        omegas[j] = omegas.get(j, 0) + 1
    top = max(omegas) if omegas else -1
    om = tuple(omegas.get(j, 0) for j in range(top + 1))
    orbit = t_orbit_of_one(field, top) if top >= 0 else []
    rhs = field.from_rational(theta)
    for j, o in enumerate(om):
        if o:
            rhs = rhs - o * orbit[j]
    return KeyWitness(theta, om, lhs, rhs, verified=(lhs == rhs))


def add_one(
    x: FieldElement, cap: int = DEFAULT_ORBIT_CAP, _trace: list | None = None
) -> tuple[Expansion, KeyWitness]:
    """Expansion of x + 1 computed from the expansion of x by carry
    propagation, together with the exact difference certificate.

    The cascade follows the innermost enclosing block of the incremented
    position outward; each round subtracts one xi value from the running
    tail and stops as soon as the candidate word is admissible.  The
    round count never exceeds the number of enclosing blocks.
    """
    if x.sign() < 0:
        raise OutOfRange("add_one needs x >= 0")
    field = x.field
    ell = big_l(x + 1)
    lx = big_l(x)
    base = beta_expand(x, cap)
    c = base.word.prepend((0,) * (ell - lx))
    blocks = free_blocks(field, c)
    i = blocks.locate(ell)
    theta = 1 if ell < blocks.k(i + 1) else 0

    tail = c.shift(ell)
    y = word_value(field, tail)
    if tail != d_beta(y, cap):
        raise InvariantViolation("tail of the shifted word is not the greedy word of frac(x)")
    y0 = y

    head = list(c.digits(ell - 1)) + [c.digit(ell - 1) + 1]
    cand = tail.prepend(head)
    xi_indices: list[int] = []
    n = 0
    while not is_admissible(field, cand):
        if n >= i:
            raise CascadeOverrun("carry cascade exceeded its proven bound")
        cur = i - n
        m = ell - blocks.k(cur) + 1
        rewrite = carry_step(field, c, blocks, ell, tail, cur)
        if _trace is not None:
            _trace.append(rewrite)
        step_theta = theta if n == 0 else 0
        y = step_theta + y - xi(field, m)
        if y.sign() < 0 or (y - 1).sign() >= 0:
            raise InvariantViolation("cascade tail value left [0, 1)")
        xi_indices.append(m)
        n += 1
        ki = blocks.k(cur)
        tail = d_beta(y, cap)
        head = list(c.digits(ki - 1)) + [c.digit(ki - 1) + 1] + [0] * (ell - ki)
        cand = tail.prepend(head)

    if n == 0 and theta != 0:
        raise InvariantViolation("admissible zeroth candidate forces theta = 0")

    expansion = Expansion(ell, cand)
    lhs = y - y0
    if y != frac_part(x + 1):
        raise InvariantViolation("cascade fractional part disagrees with direct computation")
    witness = _assemble_witness(field, theta, xi_indices, lhs)
    if not witness.verified:
        raise InvariantViolation("witness identity failed the exact check")
    return expansion, witness


def witness_for_natural(N: int, field: BetaField, cap: int = DEFAULT_ORBIT_CAP) -> list[int]:
    """Nonnegative omega_n with frac(N) = -sum_{n>=1} omega_n T^n(1) mod Z.

    Built by accumulating the x -> x+1 certificates for 0, 1, ..., N-1;
    the constant terms theta and omega_0 drop modulo Z.  The congruence
    is verified exactly before returning.
    """
    if N < 0:
        raise OutOfRange("witness_for_natural needs N >= 0")
    acc: dict[int, int] = {}
    for k in range(N):
        _, wit = add_one(field.from_rational(k), cap)
        for j, o in enumerate(wit.omegas):
            if j >= 1 and o:
                acc[j] = acc.get(j, 0) + o
    top = max(acc) if acc else 0
    omegas = [acc.get(j, 0) for j in range(top + 1)]
    orbit = t_orbit_of_one(field, top)
    total = frac_part(field.from_rational(N))
    for j, o in enumerate(omegas):
        if o:
            total = total + o * orbit[j]
    if not (total.is_rational() and total.as_rational().denominator == 1):
        raise InvariantViolation("natural-number witness congruence failed")
    return omegas
