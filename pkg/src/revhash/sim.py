"""Bit-exact simulation of reversible circuits and identity verification.

States are bit strings (index 0 = line 0). Exhaustive sweeps do not loop
over states one at a time: each line is held as one big integer whose bit s
is that line's value in state s, so a gate application is a handful of
bitwise operations regardless of how many states are in flight. Semantics
are defined by the single-state rule; batching is only an evaluation
strategy, and the two agree bit for bit.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .circuit import Circuit, Gate
from .errors import ResourceLimitError
from .pla import (
    DEFAULT_EXHAUSTIVE_LIMIT,
    CoverSemantics,
    PlaFunction,
    bits_to_int,
    int_to_bits,
)

# Exhaustive identity verification sweeps all 2^width states; cap the width.
DEFAULT_WIDTH_LIMIT = 20


class VerifyMode(enum.Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


@dataclass(frozen=True)
class VerificationReport:
    mode: VerifyMode
    states_checked: int
    passed: bool
    counterexample: str | None = None
    seed: int | None = None
    detail: str | None = None

    def to_json_dict(self) -> dict:
        doc = {
            "mode": self.mode.value,
            "states_checked": self.states_checked,
            "pass": self.passed,
        }
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample
        if self.seed is not None:
            doc["seed"] = self.seed
        if self.detail is not None:
            doc["detail"] = self.detail
        return doc


def apply_gate(state: str, gate: Gate) -> str:
    """Flip the target bit iff all positive controls are 1 and negatives 0."""
    s = bits_to_int(state)
    return int_to_bits(_apply_gate_int(s, gate), len(state))


def _apply_gate_int(s: int, gate: Gate) -> int:
    if (s & gate.positive_mask) == gate.positive_mask and (s & gate.negative_mask) == 0:
        s ^= 1 << gate.target
    return s


def run(c: Circuit, state: str) -> str:
    """Fold apply_gate over the circuit's gates in order."""
    if len(state) != c.width:
        raise ValueError(f"state length {len(state)} != circuit width {c.width}")
    s = bits_to_int(state)
    for g in c.gates:
        s = _apply_gate_int(s, g)
    return int_to_bits(s, c.width)


def _line_pattern(line: int, num_states: int) -> int:
    """Word whose bit s equals bit `line` of s, for s in 0..num_states-1."""
    block = 1 << line
    period = block << 1
    mask = (1 << num_states) - 1
    if period >= num_states:
        return (((1 << block) - 1) << block) & mask
    # 1-bits every `period` positions via an exact repunit, then widen to blocks.
    padded = ((num_states + period - 1) // period) * period
    repunit = ((1 << padded) - 1) // ((1 << period) - 1)
    return (repunit * (((1 << block) - 1) << block)) & mask


def _run_words(c: Circuit, words: list[int], mask: int) -> list[int]:
    words = list(words)
    for g in c.gates:
        fire = mask
        for line in g.positive_controls:
            fire &= words[line]
        for line in g.negative_controls:
            fire &= ~words[line]
        words[g.target] ^= fire & mask
    return words


def cover_truth_words(n: int, m: int, cubes, semantics: CoverSemantics) -> list[int]:
    """Batched forward evaluation of a cube cover over all 2^n inputs.

    Returns one word per output; bit s of word j is output bit j at the
    packed input s. Each cube contributes its match pattern OR- or XOR-wise.
    """
    size = 1 << n
    mask = (1 << size) - 1
    words = [0] * m
    for cu in cubes:
        match = mask
        for i in range(n):
            bit = 1 << i
            if cu.care_mask & bit:
                p = _line_pattern(i, size)
                match &= p if cu.value_mask & bit else ~p
        match &= mask
        for j in range(m):
            if (cu.output_mask >> j) & 1:
                if semantics is CoverSemantics.INCLUSIVE_OR:
                    words[j] |= match
                else:
                    words[j] ^= match
    return words


def truth_table(c: Circuit, limit: int = DEFAULT_EXHAUSTIVE_LIMIT) -> dict[str, str]:
    """Map every input vector to the circuit's output-line values.

    Input lines are driven with each x in turn, output lines start at 0.
    """
    n, m = c.num_inputs, c.num_outputs
    if n > limit:
        raise ResourceLimitError(f"truth table over {n} inputs exceeds limit {limit}")
    size = 1 << n
    mask = (1 << size) - 1
    words = [_line_pattern(line, size) for line in range(n)] + [0] * m
    words = _run_words(c, words, mask)
    table = {}
    for i in range(size):
        x = format(i, f"0{n}b")
        s = bits_to_int(x)
        table[x] = "".join("1" if (words[n + j] >> s) & 1 else "0" for j in range(m))
    return table


def verify_identity(
    forward: Circuit,
    reversed_circuit: Circuit,
    mode: VerifyMode = VerifyMode.EXHAUSTIVE,
    samples: int = 10_000,
    seed: int = 0,
    width_limit: int = DEFAULT_WIDTH_LIMIT,
) -> VerificationReport:
    """Check run(reversed, run(forward, s)) == s over states s.

    Exhaustive mode covers all 2^width states (refusing beyond width_limit);
    sampled mode draws `samples` seeded pseudo-random states.
    """
    if forward.width != reversed_circuit.width:
        raise ValueError("circuit widths differ")
    width = forward.width

    if mode is VerifyMode.EXHAUSTIVE:
        if width > width_limit:
            raise ResourceLimitError(f"exhaustive verification over width {width} exceeds limit {width_limit}")
        size = 1 << width
        mask = (1 << size) - 1
        start = [_line_pattern(line, size) for line in range(width)]
        words = _run_words(reversed_circuit, _run_words(forward, start, mask), mask)
        bad = 0
        for line in range(width):
            bad |= words[line] ^ start[line]
        if bad:
            s = (bad & -bad).bit_length() - 1
            return VerificationReport(mode, size, False, counterexample=int_to_bits(s, width))
        return VerificationReport(mode, size, True)

    rng = random.Random(seed)
    states = [rng.getrandbits(width) for _ in range(samples)]
    mask = (1 << samples) - 1
    start = [0] * width
    for k, s in enumerate(states):
        for line in range(width):
            if (s >> line) & 1:
                start[line] |= 1 << k
    words = _run_words(reversed_circuit, _run_words(forward, start, mask), mask)
    bad = 0
    for line in range(width):
        bad |= words[line] ^ start[line]
    if bad:
        k = (bad & -bad).bit_length() - 1
        return VerificationReport(mode, samples, False,
                                  counterexample=int_to_bits(states[k], width), seed=seed)
    return VerificationReport(mode, samples, True, seed=seed)


def verify_against_spec(
    c: Circuit,
    f: PlaFunction,
    limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
) -> VerificationReport:
    """Compare the circuit's truth table against the cover's OR evaluation."""
    if c.num_inputs != f.n or c.num_outputs != f.m:
        raise ValueError(
            f"arity mismatch: circuit {c.num_inputs}->{c.num_outputs}, function {f.n}->{f.m}"
        )
    if f.n > limit:
        raise ResourceLimitError(f"spec comparison over {f.n} inputs exceeds limit {limit}")
    size = 1 << f.n
    mask = (1 << size) - 1
    expected = cover_truth_words(f.n, f.m, f.cubes, CoverSemantics.INCLUSIVE_OR)

    words = [_line_pattern(line, size) for line in range(f.n)] + [0] * f.m
    words = _run_words(c, words, mask)
    bad = 0
    for j in range(f.m):
        bad |= words[f.n + j] ^ expected[j]
    if bad:
        s = (bad & -bad).bit_length() - 1
        return VerificationReport(
            VerifyMode.EXHAUSTIVE, size, False, counterexample=int_to_bits(s, f.n),
            detail=f"{bad.bit_count()} mismatching input(s)",
        )
    return VerificationReport(VerifyMode.EXHAUSTIVE, size, True)
