"""Cube-to-gate synthesis, NOT-pair cleanup, and gate-order reversal.

Each cube of an XOR cover becomes one gate per 1-bit in its output row:
input literal 1 -> positive control, literal 0 -> negative control, dash ->
no control; the target is the output line for that bit. Inputs are never
targets, so they pass through unchanged and the circuit stays reversible.

Reversing a circuit is just emitting its gate list backwards: every gate in
this gateset is an involution, so the reversed circuit is the inverse.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .circuit import Circuit, Gate, line_name
from .esop import EsopCover


def synthesize(c: EsopCover, name: str | None = None) -> Circuit:
    """Map a cover to a reversible circuit over n input + m output lines.

    Gates appear in cube order, then ascending output bit within a cube.
    The gate total equals the number of 1-bits across all cube outputs.
    """
    n = c.n
    gates = []
    for cu in c.cubes:
        pos = frozenset(i for i, ch in enumerate(cu.inputs) if ch == "1")
        neg = frozenset(i for i, ch in enumerate(cu.inputs) if ch == "0")
        for j, ch in enumerate(cu.outputs):
            if ch == "1":
                gates.append(Gate(target=n + j, positive_controls=pos, negative_controls=neg))
    return Circuit(num_inputs=n, num_outputs=c.m, gates=tuple(gates), name=name)


def expand_negative_controls(c: Circuit) -> Circuit:
    """Replace negative controls by NOT / positive-gate / NOT sandwiches."""
    gates = []
    for g in c.gates:
        if not g.negative_controls:
            gates.append(g)
            continue
        flips = [Gate(target=line) for line in sorted(g.negative_controls)]
        gates.extend(flips)
        gates.append(Gate(target=g.target,
                          positive_controls=g.positive_controls | g.negative_controls))
        gates.extend(flips)
    return c.with_gates(gates)


def remove_superfluous_nots(c: Circuit) -> Circuit:
    """Cancel NOT pairs on a line with no intervening gate touching it."""
    kept: list[Gate | None] = []
    pending: dict[int, int] = {}  # line -> index in kept of an open NOT
    for g in c.gates:
        if g.control_count == 0:
            line = g.target
            if line in pending:
                kept[pending.pop(line)] = None
            else:
                pending[line] = len(kept)
                kept.append(g)
        else:
            for line in g.lines:
                pending.pop(line, None)
            kept.append(g)
    return c.with_gates(g for g in kept if g is not None)


def reverse(c: Circuit) -> Circuit:
    """Same gates in reversed order; line roles unchanged."""
    return c.with_gates(reversed(c.gates))


@dataclass(frozen=True)
class CircuitStats:
    """Gate totals after negative-control expansion and NOT cleanup."""

    total: int
    by_controls: dict[int, int]
    raw_gates: int  # before expansion, negative controls still native

    def to_json_dict(self) -> dict:
        return {
            "total": self.total,
            "by_controls": {str(k): v for k, v in sorted(self.by_controls.items())},
            "raw_gates": self.raw_gates,
        }


def stats(c: Circuit) -> CircuitStats:
    expanded = remove_superfluous_nots(expand_negative_controls(c))
    counts = Counter(g.control_count for g in expanded.gates)
    return CircuitStats(
        total=len(expanded.gates),
        by_controls=dict(sorted(counts.items())),
        raw_gates=len(c.gates),
    )


def write_real(c: Circuit) -> str:
    """Serialize to RevLib-style .real text.

    Negative controls are expanded to NOT sandwiches first, since the gate
    lines (`t<k> <controls...> <target>`) carry positive controls only. A
    leading comment records the input/output split so the file round-trips.
    """
    expanded = expand_negative_controls(c)
    names = [line_name(c, line) for line in range(c.width)]
    lines = [f"# revhash inputs={c.num_inputs} outputs={c.num_outputs}"]
    if c.name:
        lines.append(f"# {c.name}")
    lines.append(".version 2.0")
    lines.append(f".numvars {c.width}")
    lines.append(".variables " + " ".join(names))
    lines.append(".begin")
    for g in expanded.gates:
        involved = sorted(g.positive_controls) + [g.target]
        lines.append(f"t{len(involved)} " + " ".join(names[i] for i in involved))
    lines.append(".end")
    return "\n".join(lines) + "\n"


def read_real(text: str) -> Circuit:
    """Read the .real subset produced by write_real."""
    num_inputs = num_outputs = None
    names: list[str] | None = None
    gates: list[Gate] = []
    in_body = False
    name = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comment = line[1:].strip()
            if comment.startswith("revhash inputs="):
                fields = dict(part.split("=") for part in comment.split()[1:])
                num_inputs = int(fields["inputs"])
                num_outputs = int(fields["outputs"])
            elif name is None and comment:
                name = comment
            continue
        if line.startswith(".version") or line.startswith(".numvars"):
            continue
        if line.startswith(".variables"):
            names = line.split()[1:]
            continue
        if line == ".begin":
            in_body = True
            continue
        if line == ".end":
            break
        if in_body:
            tokens = line.split()
            kind, args = tokens[0], tokens[1:]
            if not kind.startswith("t") or not kind[1:].isdigit():
                raise ValueError(f"unsupported .real gate: {line!r}")
            if len(args) != int(kind[1:]):
                raise ValueError(f"gate arity mismatch: {line!r}")
            if names is None:
                raise ValueError(".variables must precede gate lines")
            idx = [names.index(a) for a in args]
            gates.append(Gate(target=idx[-1], positive_controls=frozenset(idx[:-1])))
    if names is None:
        raise ValueError("missing .variables header")
    if num_inputs is None or num_outputs is None:
        raise ValueError("missing '# revhash inputs=… outputs=…' role comment")
    if num_inputs + num_outputs != len(names):
        raise ValueError("role comment does not match .variables count")
    return Circuit(num_inputs=num_inputs, num_outputs=num_outputs,
                   gates=_fold_not_sandwiches(gates), name=name)


def _fold_not_sandwiches(gates: list[Gate]) -> tuple[Gate, ...]:
    """Collapse NOT/gate/NOT sandwiches back into negative controls.

    Inverse of the expansion write_real applies; a NOT run that is not part
    of a full sandwich (for instance a real output-line NOT) is kept as is.
    """
    out: list[Gate] = []
    i = 0
    while i < len(gates):
        g = gates[i]
        if g.control_count == 0:
            run: list[int] = []
            j = i
            while j < len(gates) and gates[j].control_count == 0 and gates[j].target not in run:
                run.append(gates[j].target)
                j += 1
            # Look for: controlled gate over the run, then the same NOTs again.
            if (
                j < len(gates)
                and gates[j].control_count > 0
                and set(run) <= gates[j].positive_controls
                and gates[j + 1 : j + 1 + len(run)] == gates[i:j]
            ):
                core = gates[j]
                out.append(Gate(
                    target=core.target,
                    positive_controls=core.positive_controls - frozenset(run),
                    negative_controls=frozenset(run),
                ))
                i = j + 1 + len(run)
                continue
        out.append(g)
        i += 1
    return tuple(out)
