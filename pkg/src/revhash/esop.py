"""Exclusive-or sum-of-products covers and cube-count minimization.

An EsopCover reads its rows XOR-wise: output bit j of f(x) is the XOR of
output bit j over every cube matching x. Conversion from a conventional
(OR-semantics) .pla cover goes through a disjoint minterm cover, on which
the two readings coincide.

The minimizer is an iterated pairwise cube transformer. Cube distance is
the number of input positions whose literals differ (don't-care counts as
distinct from 0 and 1). The moves:

  * distance 0 — same inputs: XOR the output rows; all-zero rows vanish,
    so identical cubes annihilate.
  * distance 1, equal outputs: the pair collapses into one cube (the
    merged literal is the third symbol: 0/1 -> dash, dash/0 -> 1, ...).
  * distance 1, differing outputs and distance 2, equal outputs: the pair
    is rewritten into a different equivalent pair. Rewrites are accepted
    when they shrink the literal count or when one of the new cubes
    immediately cancels or merges with the rest of the cover.

Every accepted move keeps the covered function identical and never grows
the cube count; passes repeat until a sweep yields no accepted move or the
effort budget runs out.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import ResourceLimitError
from .pla import (
    DEFAULT_EXPANSION_BUDGET,
    Cube,
    PlaFunction,
    bits_to_int,
    int_to_bits,
    parse_pla,
    write_pla,
)

DEFAULT_EFFORT = 64

# Internal cube form: (care_mask, value_mask, output_mask) ints.
_MaskCube = tuple[int, int, int]


@dataclass(frozen=True)
class EsopCover:
    """Cube list under XOR interpretation.

    Identical cubes XOR to nothing, so duplicate (inputs, outputs) pairs
    cancel at construction; a stored cover never contains two equal rows.
    """

    n: int
    m: int
    cubes: tuple[Cube, ...]

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"arities must be >= 1, got n={self.n} m={self.m}")
        for c in self.cubes:
            if len(c.inputs) != self.n or len(c.outputs) != self.m:
                raise ValueError(f"cube {c.inputs} {c.outputs} does not conform to n={self.n} m={self.m}")
        counts: dict[Cube, int] = {}
        for c in self.cubes:
            counts[c] = counts.get(c, 0) + 1
        if any(k > 1 for k in counts.values()):
            object.__setattr__(self, "cubes", tuple(c for c, k in counts.items() if k % 2))


@dataclass(frozen=True)
class CoverCost:
    cube_count: int
    literal_count: int
    output_ones: int


def cost(c: EsopCover) -> CoverCost:
    return CoverCost(
        cube_count=len(c.cubes),
        literal_count=sum(cu.num_literals for cu in c.cubes),
        output_ones=sum(cu.output_mask.bit_count() for cu in c.cubes),
    )


def evaluate_esop(c: EsopCover, x: str) -> str:
    """XOR-semantics evaluation at input x."""
    if len(x) != c.n:
        raise ValueError(f"input length {len(x)} != n={c.n}")
    xi = bits_to_int(x)
    acc = 0
    for cu in c.cubes:
        if (xi & cu.care_mask) == cu.value_mask:
            acc ^= cu.output_mask
    return int_to_bits(acc, c.m)


def from_pla(f: PlaFunction, budget: int = DEFAULT_EXPANSION_BUDGET) -> EsopCover:
    """Convert an OR-semantics cover to an equivalent XOR cover.

    Builds the disjoint minterm cover (accumulating overlapping rows with
    OR), drops all-zero-output minterms, and orders rows by input value.
    On the result, XOR evaluation equals the original's OR evaluation.
    """
    steps = 0
    for cu in f.cubes:
        steps += 1 << (f.n - cu.num_literals)
        if steps > budget:
            raise ResourceLimitError(f"disjoint expansion needs {steps}+ cubes, budget is {budget}")

    acc: dict[int, int] = {}
    full = (1 << f.n) - 1
    for cu in f.cubes:
        free = full & ~cu.care_mask
        # Iterate all subsets of the don't-care positions.
        sub = 0
        while True:
            x = cu.value_mask | sub
            acc[x] = acc.get(x, 0) | cu.output_mask
            if sub == free:
                break
            sub = (sub - free) & free
    cubes = tuple(
        Cube(int_to_bits(x, f.n), int_to_bits(out, f.m))
        for x, out in sorted(acc.items())
        if out
    )
    return EsopCover(n=f.n, m=f.m, cubes=cubes)


def cover_to_pla(c: EsopCover, name: str | None = None) -> PlaFunction:
    """View a cover as a .pla whose rows are understood XOR-wise."""
    return PlaFunction(n=c.n, m=c.m, cubes=c.cubes, name=name, comments=("esop",))


def write_esop(c: EsopCover, name: str | None = None) -> str:
    return write_pla(cover_to_pla(c, name))


def read_esop(text: str) -> EsopCover:
    """Read a .pla document as an XOR cover (duplicate row pairs cancel)."""
    f = parse_pla(text)
    return EsopCover(n=f.n, m=f.m, cubes=f.cubes)


def minimize(c: EsopCover, effort: int = DEFAULT_EFFORT) -> EsopCover:
    """Shrink the cube count without changing the covered function.

    `effort` bounds the number of rewrite sweeps; exhaustion returns the
    best cover found so far. The result never has more cubes than the
    input, and a second call at the same effort is a fixpoint once a sweep
    goes by without an accepted move.
    """
    n = c.n
    live = _reduce([(cu.care_mask, cu.value_mask, cu.output_mask) for cu in c.cubes], n)
    for _ in range(max(1, effort)):
        if not _reshape_sweep(live, n):
            break
    # Cube order is semantically free under XOR; group cubes by their
    # zero-literal set so downstream NOT sandwiches cancel maximally.
    ordered = sorted(
        ((care & ~val, care, val), out) for (care, val), out in live.items()
    )
    return EsopCover(n=n, m=c.m, cubes=tuple(
        Cube(_cube_text(care, val, n), int_to_bits(out, c.m))
        for (_zeros, care, val), out in ordered
    ))


def _cube_text(care: int, val: int, n: int) -> str:
    return "".join(
        ("1" if (val >> i) & 1 else "0") if (care >> i) & 1 else "-"
        for i in range(n)
    )


def _reduce(cubes: list[_MaskCube], n: int) -> dict[tuple[int, int], int]:
    """Fold/merge a cube list to a d0/d1 fixpoint; keys are (care, value)."""
    live: dict[tuple[int, int], int] = {}
    queue = deque(cubes)
    while queue:
        _insert(live, n, queue)
    return live


def _insert(live: dict[tuple[int, int], int], n: int, queue: deque) -> None:
    care, val, out = queue.popleft()
    if not out:
        return
    key = (care, val)
    if key in live:
        folded = live.pop(key) ^ out
        if folded:
            queue.append((care, val, folded))
        return
    partner = _d1_partner(live, n, care, val, out)
    if partner is not None:
        pkey, mcare, mval = partner
        live.pop(pkey)
        queue.append((mcare, mval, out))
        return
    live[key] = out


def _d1_partner(live, n, care, val, out):
    """Find a live cube at input distance 1 with identical outputs.

    Returns (partner_key, merged_care, merged_value) or None. Positions are
    tried in ascending order, so ties resolve toward the lowest index.
    """
    for i in range(n):
        bit = 1 << i
        if care & bit:
            if val & bit:  # literal '1'
                cands = (
                    ((care, val & ~bit), (care & ~bit, val & ~bit)),  # partner '0' -> '-'
                    ((care & ~bit, val & ~bit), (care, val & ~bit)),  # partner '-' -> '0'
                )
            else:  # literal '0'
                cands = (
                    ((care, val | bit), (care & ~bit, val)),          # partner '1' -> '-'
                    ((care & ~bit, val), (care, val | bit)),          # partner '-' -> '1'
                )
        else:  # literal '-'
            cands = (
                ((care | bit, val), (care | bit, val | bit)),         # partner '0' -> '1'
                ((care | bit, val | bit), (care | bit, val)),         # partner '1' -> '0'
            )
        for pkey, merged in cands:
            if live.get(pkey) == out:
                return pkey, merged[0], merged[1]
    return None


def _diff_mask(care_a: int, val_a: int, care_b: int, val_b: int) -> int:
    """Bit i set iff the literals at position i differ."""
    return (care_a ^ care_b) | (care_a & care_b & (val_a ^ val_b))


def _merged_literal(care_a, val_a, care_b, val_b, bit):
    """Third symbol at a differing position: (care_bit, value_bit) to apply."""
    if care_a & bit and care_b & bit:
        return 0, 0  # 0/1 -> don't-care
    if care_a & bit:
        return bit, (~val_a) & bit  # c/- -> opposite of c
    return bit, (~val_b) & bit


def _with_literal(care, val, bit, lit):
    lcare, lval = lit
    care = (care & ~bit) | lcare
    val = (val & ~bit) | (lval & lcare)
    return care, val


def _reshape_sweep(live: dict[tuple[int, int], int], n: int) -> bool:
    """One sweep of pair rewrites over the current cover.

    Rewrites input-distance-1 pairs with differing outputs and
    input-distance-2 pairs with equal outputs; the rewritten pair covers
    the same function. A rewrite is kept when it lowers the literal count
    outright or lets a new cube cancel/merge with the remaining cover.
    Returns True if anything was accepted.
    """
    snapshot = list(live.items())
    changed = False
    for ia in range(len(snapshot)):
        (care_a, val_a), out_a = snapshot[ia]
        if live.get((care_a, val_a)) != out_a:
            continue
        for ib in range(ia + 1, len(snapshot)):
            (care_b, val_b), out_b = snapshot[ib]
            if live.get((care_b, val_b)) != out_b:
                continue
            if live.get((care_a, val_a)) != out_a:
                break
            diff = _diff_mask(care_a, val_a, care_b, val_b)
            d = diff.bit_count()
            if d == 1 and out_a != out_b:
                options = _rewrite_d1(care_a, val_a, out_a, care_b, val_b, out_b, diff)
            elif d == 2 and out_a == out_b:
                options = _rewrite_d2(care_a, val_a, care_b, val_b, out_a, diff)
            else:
                continue
            if _try_rewrite(live, n, (care_a, val_a, out_a), (care_b, val_b, out_b), options):
                changed = True
    return changed


def _rewrite_d1(care_a, val_a, out_a, care_b, val_b, out_b, bit):
    """Two equivalent replacements for a distance-1 pair with unequal outputs.

    With merged input M (P_M = P_A xor P_B):
        A(u) + B(v)  =  M(u) + B(u^v)  =  M(v) + A(u^v)
    """
    lit = _merged_literal(care_a, val_a, care_b, val_b, bit)
    mcare, mval = _with_literal(care_a, val_a, bit, lit)
    x = out_a ^ out_b
    return (
        ((mcare, mval, out_a), (care_b, val_b, x)),
        ((mcare, mval, out_b), (care_a, val_a, x)),
    )


def _rewrite_d2(care_a, val_a, care_b, val_b, out, diff):
    """Two equivalent replacements for a distance-2 pair with equal outputs.

    Merging one differing position at a time:
        A + B = A[i->m_i] + A[i->b_i][j->m_j]   (and the i/j swap)
    """
    bit_i = diff & -diff
    bit_j = diff ^ bit_i
    options = []
    for first, second in ((bit_i, bit_j), (bit_j, bit_i)):
        m1 = _with_literal(care_a, val_a, first, _merged_literal(care_a, val_a, care_b, val_b, first))
        bcare = (care_a & ~first) | (care_b & first)
        bval = (val_a & ~first) | (val_b & first)
        m2 = _with_literal(bcare, bval, second, _merged_literal(bcare, bval, care_b, val_b, second))
        options.append(((m1[0], m1[1], out), (m2[0], m2[1], out)))
    return tuple(options)


def _try_rewrite(live, n, a, b, options) -> bool:
    """Apply the first acceptable rewrite option; restore the pair otherwise."""
    care_a, val_a, out_a = a
    care_b, val_b, out_b = b
    lits_before = (care_a.bit_count() + care_b.bit_count())
    del live[(care_a, val_a)]
    del live[(care_b, val_b)]
    for c1, c2 in options:
        lits_after = c1[0].bit_count() + c2[0].bit_count()
        if lits_after < lits_before or _has_partner(live, n, c1) or _has_partner(live, n, c2):
            queue = deque((c1, c2))
            while queue:
                _insert(live, n, queue)
            return True
    live[(care_a, val_a)] = out_a
    live[(care_b, val_b)] = out_b
    return False


def _has_partner(live, n, cube) -> bool:
    care, val, out = cube
    if (care, val) in live:
        return True
    return _d1_partner(live, n, care, val, out) is not None
