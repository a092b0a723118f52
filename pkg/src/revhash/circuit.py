"""Gate and circuit types for reversible NOT/CNOT/Toffoli networks.

A gate flips its target line iff every positive control reads 1 and every
negative control reads 0. Circuits carry n input lines (0..n-1) followed
by m output lines (n..n+m-1); both are plain lines, the role split only
records how synthesis laid them out. Circuits are immutable; every rewrite
returns a new one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from functools import cached_property


@dataclass(frozen=True)
class Gate:
    target: int
    positive_controls: frozenset[int] = frozenset()
    negative_controls: frozenset[int] = frozenset()

    def __post_init__(self):
        # Allow construction from any iterable.
        object.__setattr__(self, "positive_controls", frozenset(self.positive_controls))
        object.__setattr__(self, "negative_controls", frozenset(self.negative_controls))
        if self.target in self.positive_controls or self.target in self.negative_controls:
            raise ValueError(f"target line {self.target} is also a control")
        if self.positive_controls & self.negative_controls:
            raise ValueError("a line cannot be both a positive and a negative control")

    @cached_property
    def positive_mask(self) -> int:
        mask = 0
        for line in self.positive_controls:
            mask |= 1 << line
        return mask

    @cached_property
    def negative_mask(self) -> int:
        mask = 0
        for line in self.negative_controls:
            mask |= 1 << line
        return mask

    @property
    def control_count(self) -> int:
        """0 = NOT, 1 = CNOT, 2 = Toffoli, 3+ = generalized Toffoli."""
        return len(self.positive_controls) + len(self.negative_controls)

    @property
    def lines(self) -> frozenset[int]:
        return self.positive_controls | self.negative_controls | {self.target}


def NOT(target: int) -> Gate:
    return Gate(target=target)


def CNOT(control: int, target: int) -> Gate:
    return Gate(target=target, positive_controls=frozenset({control}))


def toffoli(controls, target: int) -> Gate:
    return Gate(target=target, positive_controls=frozenset(controls))


@dataclass(frozen=True)
class Circuit:
    num_inputs: int
    num_outputs: int
    gates: tuple[Gate, ...] = ()
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.num_inputs < 0 or self.num_outputs < 0 or self.width < 1:
            raise ValueError("circuit needs at least one line")
        for g in self.gates:
            if max(g.lines) >= self.width:
                raise ValueError(f"gate on line {max(g.lines)} exceeds width {self.width}")

    @property
    def width(self) -> int:
        return self.num_inputs + self.num_outputs

    @property
    def input_lines(self) -> range:
        return range(self.num_inputs)

    @property
    def output_lines(self) -> range:
        return range(self.num_inputs, self.width)

    def with_gates(self, gates, name: str | None = None) -> "Circuit":
        return replace(self, gates=tuple(gates), name=name or self.name)


def line_name(c: Circuit, line: int) -> str:
    if line < c.num_inputs:
        return f"x{line}"
    return f"y{line - c.num_inputs}"


def to_json_doc(c: Circuit) -> dict:
    return {
        "name": c.name,
        "width": c.width,
        "inputs": c.num_inputs,
        "outputs": c.num_outputs,
        "gates": [
            {
                "target": g.target,
                "positive": sorted(g.positive_controls),
                "negative": sorted(g.negative_controls),
            }
            for g in c.gates
        ],
    }


def write_circuit_json(c: Circuit) -> str:
    return json.dumps(to_json_doc(c), indent=2) + "\n"


def read_circuit_json(text: str) -> Circuit:
    doc = json.loads(text)
    gates = tuple(
        Gate(
            target=g["target"],
            positive_controls=frozenset(g.get("positive", ())),
            negative_controls=frozenset(g.get("negative", ())),
        )
        for g in doc["gates"]
    )
    return Circuit(
        num_inputs=doc["inputs"],
        num_outputs=doc["outputs"],
        gates=gates,
        name=doc.get("name"),
    )
