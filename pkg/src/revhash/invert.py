"""Preimage recovery: exhaustive forward search and backward deduction.

The brute-force oracle simply evaluates the function forward over every
input and keeps the matches; it exists as the independent cross-check.

The deduction solver works on the synthesized circuit instead. Because
inputs are never targets, every gate on output line j contributes the
conjunction of its input-line controls XOR-wise to that line, so "output
lines end at y, having started at a known initialization" is a system of
per-line XOR constraints over cube predicates. The solver keeps a
tri-state partial assignment over the input variables, runs unit
propagation (a line whose last undecided predicate is forced pins that
predicate; a pinned predicate with one explanation pins variables), and
when stuck branches on the lowest-index unknown variable, value 0 first,
backtracking on contradiction. Solutions come out in lexicographic order.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass

from .circuit import Circuit
from .errors import ResourceLimitError
from .esop import EsopCover
from .pla import (
    DEFAULT_EXHAUSTIVE_LIMIT,
    CoverSemantics,
    PlaFunction,
    bits_to_int,
    int_to_bits,
)
from .sim import _line_pattern, _run_words, cover_truth_words


@dataclass(frozen=True)
class PreimageResult:
    target: str
    preimages: tuple[str, ...]
    method: str  # "bruteforce" or "deduction"
    branches: int
    propagations: int
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "target": self.target,
            "preimages": list(self.preimages),
            "method": self.method,
            "branches": self.branches,
            "propagations": self.propagations,
            "elapsed": self.elapsed,
        }


def preimages_bruteforce(fn, y: str, limit: int = DEFAULT_EXHAUSTIVE_LIMIT) -> PreimageResult:
    """Enumerate all x with f(x) = y by forward evaluation.

    Accepts a PlaFunction (OR semantics), EsopCover (XOR semantics), or
    Circuit. Evaluation is batched wordwise but is exactly the forward map.
    """
    t0 = time.perf_counter()
    if isinstance(fn, PlaFunction):
        n, m = fn.n, fn.m
        if n > limit:
            raise ResourceLimitError(f"brute force over {n} inputs exceeds limit {limit}")
        words = cover_truth_words(n, m, fn.cubes, CoverSemantics.INCLUSIVE_OR)
    elif isinstance(fn, EsopCover):
        n, m = fn.n, fn.m
        if n > limit:
            raise ResourceLimitError(f"brute force over {n} inputs exceeds limit {limit}")
        words = cover_truth_words(n, m, fn.cubes, CoverSemantics.EXCLUSIVE_OR)
    elif isinstance(fn, Circuit):
        n, m = fn.num_inputs, fn.num_outputs
        if n > limit:
            raise ResourceLimitError(f"brute force over {n} inputs exceeds limit {limit}")
        size = 1 << n
        mask = (1 << size) - 1
        state = [_line_pattern(line, size) for line in range(n)] + [0] * m
        state = _run_words(fn, state, mask)
        words = state[n:]
    else:
        raise TypeError(f"cannot evaluate {type(fn).__name__} forward")

    if len(y) != m:
        raise ValueError(f"target length {len(y)} != m={m}")
    size = 1 << n
    mask = (1 << size) - 1
    hits = mask
    for j, ch in enumerate(y):
        hits &= words[j] if ch == "1" else ~words[j]
    hits &= mask
    found = []
    while hits:
        s = (hits & -hits).bit_length() - 1
        hits &= hits - 1
        found.append(int_to_bits(s, n))
    return PreimageResult(
        target=y,
        preimages=tuple(sorted(found)),
        method="bruteforce",
        branches=0,
        propagations=0,
        elapsed=time.perf_counter() - t0,
    )


class _Deducer:
    """Backtracking unit-propagation solver over a circuit's XOR constraints."""

    def __init__(self, c: Circuit, y: str, output_init: str | None):
        n, m = c.num_inputs, c.num_outputs
        if len(y) != m:
            raise ValueError(f"target length {len(y)} != m={m}")
        if output_init is not None and len(output_init) != m:
            raise ValueError(f"initialization length {len(output_init)} != m={m}")
        init = bits_to_int(output_init) if output_init else 0
        ybits = bits_to_int(y)

        self.n = n
        self.num_preds = 0
        self.pred_pos: list[int] = []   # positive-literal variable masks
        self.pred_neg: list[int] = []
        self.pred_line: list[int] = []
        self.line_preds: list[list[int]] = [[] for _ in range(m)]
        self.target = [((ybits >> j) & 1) ^ ((init >> j) & 1) for j in range(m)]
        self.base_parity = [0] * m
        input_mask = (1 << n) - 1

        for g in c.gates:
            if g.target < n:
                raise ValueError("deduction needs targets on output lines only")
            if (g.positive_mask | g.negative_mask) & ~input_mask:
                raise ValueError("deduction needs controls on input lines only")
            j = g.target - n
            support = g.positive_mask | g.negative_mask
            if not support:
                self.base_parity[j] ^= 1  # uncontrolled NOT: always fires
                continue
            p = self.num_preds
            self.num_preds += 1
            self.pred_pos.append(g.positive_mask)
            self.pred_neg.append(g.negative_mask)
            self.pred_line.append(j)
            self.line_preds[j].append(p)

        self.occ: list[list[int]] = [[] for _ in range(n)]
        for p in range(self.num_preds):
            support = self.pred_pos[p] | self.pred_neg[p]
            for v in range(n):
                if (support >> v) & 1:
                    self.occ[v].append(p)

        self.branches = 0
        self.propagations = 0
        self.solutions: list[str] = []

    def solve(self, first_only: bool = False) -> None:
        unknown = [(self.pred_pos[p] | self.pred_neg[p]).bit_count() for p in range(self.num_preds)]
        dead = bytearray(self.num_preds)
        line_undec = [len(preds) for preds in self.line_preds]
        line_par = list(self.base_parity)
        assigned = [-1] * self.n
        state = (unknown, dead, line_undec, line_par, assigned)
        pending = deque(range(len(self.line_preds)))
        self.first_only = first_only
        if self._propagate(state, pending):
            self._search(state)

    # -- search ----------------------------------------------------------

    def _search(self, state) -> None:
        unknown, dead, line_undec, line_par, assigned = state
        try:
            v = assigned.index(-1)
        except ValueError:
            self._record(assigned)
            return
        for b in (0, 1):
            snap = (list(unknown), bytearray(dead), list(line_undec), list(line_par), list(assigned))
            self.branches += 1
            pending: deque[int] = deque()
            if self._assign(snap, v, b, pending) and self._propagate(snap, pending):
                self._search(snap)
            if self.first_only and self.solutions:
                return

    def _record(self, assigned) -> None:
        x = "".join("1" if b else "0" for b in assigned)
        xi = bits_to_int(x)
        # Soundness: re-evaluate every predicate forward before accepting.
        parity = list(self.base_parity)
        for p in range(self.num_preds):
            if (xi & self.pred_pos[p]) == self.pred_pos[p] and (xi & self.pred_neg[p]) == 0:
                parity[self.pred_line[p]] ^= 1
        if parity != self.target:
            raise RuntimeError(f"deduced preimage {x} fails forward evaluation")
        self.solutions.append(x)

    def _assign(self, state, v: int, b: int, pending: deque) -> bool:
        unknown, dead, line_undec, line_par, assigned = state
        if assigned[v] >= 0:
            return assigned[v] == b
        assigned[v] = b
        bit = 1 << v
        for p in self.occ[v]:
            if dead[p]:
                continue
            falsified = (self.pred_pos[p] & bit) if b == 0 else (self.pred_neg[p] & bit)
            if falsified:
                dead[p] = 1
                j = self.pred_line[p]
                line_undec[j] -= 1
                pending.append(j)
            else:
                unknown[p] -= 1
                if unknown[p] == 0:
                    dead[p] = 1  # all literals satisfied: predicate is true
                    j = self.pred_line[p]
                    line_par[j] ^= 1
                    line_undec[j] -= 1
                    pending.append(j)
        return True

    def _propagate(self, state, pending: deque) -> bool:
        unknown, dead, line_undec, line_par, assigned = state
        while pending:
            j = pending.popleft()
            u = line_undec[j]
            if u == 0:
                if line_par[j] != self.target[j]:
                    return False
                continue
            if u != 1:
                continue
            p = next(q for q in self.line_preds[j] if not dead[q])
            needed = self.target[j] ^ line_par[j]
            if needed == 1:
                # The remaining predicate must fire: pin all its free literals.
                support = self.pred_pos[p] | self.pred_neg[p]
                for v in range(self.n):
                    if (support >> v) & 1 and assigned[v] < 0:
                        self.propagations += 1
                        if not self._assign(state, v, 1 if (self.pred_pos[p] >> v) & 1 else 0, pending):
                            return False
            elif unknown[p] == 1:
                # Must not fire and one literal is left: force its negation.
                support = self.pred_pos[p] | self.pred_neg[p]
                for v in range(self.n):
                    if (support >> v) & 1 and assigned[v] < 0:
                        self.propagations += 1
                        if not self._assign(state, v, 0 if (self.pred_pos[p] >> v) & 1 else 1, pending):
                            return False
                        break
        return True


def preimages_deduce(
    c: Circuit,
    y: str,
    output_init: str | None = None,
) -> PreimageResult:
    """Recover all preimages of y by backward deduction over the circuit.

    The circuit must come from synthesis: targets on output lines, controls
    on input lines. `output_init` overrides the all-zeros output-line
    initialization when the circuit was run from a different known state.
    """
    t0 = time.perf_counter()
    solver = _Deducer(c, y, output_init)
    solver.solve()
    return PreimageResult(
        target=y,
        preimages=tuple(sorted(solver.solutions)),
        method="deduction",
        branches=solver.branches,
        propagations=solver.propagations,
        elapsed=time.perf_counter() - t0,
    )


def preimage_one(c: Circuit, y: str, output_init: str | None = None) -> str | None:
    """First preimage under the deterministic branch order, or None.

    Branching tries the lowest-index unknown variable with 0 first, so the
    returned preimage is the lexicographically smallest one.
    """
    solver = _Deducer(c, y, output_init)
    solver.solve(first_only=True)
    return solver.solutions[0] if solver.solutions else None
