import random

import pytest

from revhash.circuit import (
    CNOT,
    NOT,
    Circuit,
    Gate,
    read_circuit_json,
    write_circuit_json,
)
from revhash.esop import EsopCover, from_pla
from revhash.pla import Cube, parse_pla
from revhash.sim import run
from revhash.synth import (
    expand_negative_controls,
    read_real,
    remove_superfluous_nots,
    reverse,
    stats,
    synthesize,
    write_real,
)

AND_PLA = ".i 2\n.o 1\n0- 0\n-0 0\n11 1\n.e"


def and_circuit():
    return synthesize(from_pla(parse_pla(AND_PLA)))


def test_gate_validation():
    with pytest.raises(ValueError):
        Gate(target=0, positive_controls={0})
    with pytest.raises(ValueError):
        Gate(target=2, positive_controls={0}, negative_controls={0})


def test_gate_control_count():
    assert NOT(0).control_count == 0
    assert CNOT(0, 1).control_count == 1
    assert Gate(target=3, positive_controls={0, 1}, negative_controls={2}).control_count == 3


def test_synthesize_and():
    c = and_circuit()
    assert len(c.gates) == 1
    g = c.gates[0]
    assert g.target == 2
    assert g.positive_controls == {0, 1} and not g.negative_controls


def test_synthesize_negative_control():
    cover = EsopCover(n=2, m=1, cubes=(Cube("0-", "1"),))
    c = synthesize(cover)
    g = c.gates[0]
    assert g.target == 2
    assert g.negative_controls == {0} and not g.positive_controls


def test_synthesize_all_dash_is_plain_not():
    cover = EsopCover(n=2, m=1, cubes=(Cube("--", "1"),))
    g = synthesize(cover).gates[0]
    assert g.control_count == 0 and g.target == 2


def test_synthesize_gate_count_and_order():
    cover = EsopCover(n=2, m=2, cubes=(Cube("11", "11"), Cube("0-", "01")))
    c = synthesize(cover)
    # One gate per 1-bit in each cube's outputs, cube order then output order.
    assert [g.target for g in c.gates] == [2, 3, 3]
    assert len(c.gates) == sum(cu.output_mask.bit_count() for cu in cover.cubes)


def test_synthesize_never_targets_inputs(small_corpus):
    for f in small_corpus.values():
        c = synthesize(from_pla(f))
        assert all(g.target >= c.num_inputs for g in c.gates)


def test_expand_negative_controls_sandwich():
    c = Circuit(num_inputs=1, num_outputs=1,
                gates=(Gate(target=1, negative_controls={0}),))
    e = expand_negative_controls(c)
    kinds = [(g.control_count, g.target) for g in e.gates]
    assert kinds == [(0, 0), (1, 1), (0, 0)]
    assert e.gates[1].positive_controls == {0}


def test_expand_no_negatives_unchanged():
    c = and_circuit()
    assert expand_negative_controls(c).gates == c.gates


def test_expand_then_cleanup_cancels_interior_pair():
    c = Circuit(num_inputs=1, num_outputs=2, gates=(
        Gate(target=1, negative_controls={0}),
        Gate(target=2, negative_controls={0}),
    ))
    cleaned = remove_superfluous_nots(expand_negative_controls(c))
    nots = [g for g in cleaned.gates if g.control_count == 0]
    assert len(nots) == 2  # was 4 before cleanup
    for state in range(8):
        s = format(state, "03b")[::-1]
        assert run(cleaned, s) == run(c, s)


def test_remove_nots_involution():
    c = Circuit(num_inputs=1, num_outputs=1, gates=(NOT(0), NOT(0)))
    assert remove_superfluous_nots(c).gates == ()


def test_remove_nots_blocked_by_touching_gate():
    c = Circuit(num_inputs=1, num_outputs=2, gates=(
        NOT(0), CNOT(0, 1), NOT(0), NOT(0), CNOT(0, 2), NOT(0),
    ))
    cleaned = remove_superfluous_nots(c)
    kinds = [(g.control_count, g.target) for g in cleaned.gates]
    assert kinds == [(0, 0), (1, 1), (1, 2), (0, 0)]
    for state in range(8):
        s = format(state, "03b")[::-1]
        assert run(cleaned, s) == run(c, s)


def test_remove_nots_cancels_across_untouching_gate():
    c = Circuit(num_inputs=2, num_outputs=1, gates=(NOT(0), CNOT(1, 2), NOT(0)))
    cleaned = remove_superfluous_nots(c)
    assert [(g.control_count, g.target) for g in cleaned.gates] == [(1, 2)]
    for state in range(8):
        s = format(state, "03b")[::-1]
        assert run(cleaned, s) == run(c, s)


def test_reverse_order_and_involution():
    g1, g2, g3 = NOT(0), CNOT(0, 1), NOT(1)
    c = Circuit(num_inputs=1, num_outputs=1, gates=(g1, g2, g3))
    r = reverse(c)
    assert r.gates == (g3, g2, g1)
    assert reverse(r).gates == c.gates
    single = Circuit(num_inputs=1, num_outputs=1, gates=(g1,))
    assert reverse(single).gates == single.gates


def test_stats_and():
    st = stats(and_circuit())
    assert st.total == 1
    assert st.by_controls == {2: 1}


def test_stats_empty():
    st = stats(Circuit(num_inputs=1, num_outputs=1))
    assert st.total == 0 and st.by_controls == {}


def test_stats_counts_expanded_nots():
    c = Circuit(num_inputs=1, num_outputs=1,
                gates=(Gate(target=1, negative_controls={0}),))
    st = stats(c)
    assert st.total == 3  # NOT, CNOT, NOT
    assert st.by_controls == {0: 2, 1: 1}
    assert st.raw_gates == 1


def test_real_roundtrip_preserves_gates(small_corpus):
    rng = random.Random(7)
    for name, f in list(small_corpus.items())[:4]:
        from revhash.esop import minimize
        c = synthesize(minimize(from_pla(f)), name=name)
        back = read_real(write_real(c))
        assert back.gates == c.gates
        assert (back.num_inputs, back.num_outputs) == (c.num_inputs, c.num_outputs)


def test_real_requires_role_comment():
    c = and_circuit()
    text = "\n".join(l for l in write_real(c).splitlines() if not l.startswith("#"))
    with pytest.raises(ValueError):
        read_real(text)


def test_real_output_shape():
    text = write_real(and_circuit())
    assert ".numvars 3" in text
    assert "t3 x0 x1 y0" in text
    assert text.index(".begin") < text.index("t3") < text.index(".end")


def test_json_roundtrip():
    cover = EsopCover(n=2, m=1, cubes=(Cube("0-", "1"), Cube("11", "1")))
    c = synthesize(cover, name="demo")
    back = read_circuit_json(write_circuit_json(c))
    assert back == c


def test_circuit_width_validation():
    with pytest.raises(ValueError):
        Circuit(num_inputs=1, num_outputs=1, gates=(NOT(5),))
