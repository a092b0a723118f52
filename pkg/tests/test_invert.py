import random

import pytest

from revhash.circuit import CNOT, NOT, Circuit, Gate
from revhash.esop import from_pla, minimize
from revhash.invert import preimage_one, preimages_bruteforce, preimages_deduce
from revhash.pla import Cube, PlaFunction, int_to_bits, parse_pla
from revhash.sim import run
from revhash.synth import expand_negative_controls, synthesize

from revhash import corpus

AND_PLA = ".i 2\n.o 1\n0- 0\n-0 0\n11 1\n.e"


def and_circuit():
    return synthesize(from_pla(parse_pla(AND_PLA)))


def demo_circuit():
    return synthesize(minimize(from_pla(corpus.demo_hash4_pla())))


def const_zero_circuit():
    return Circuit(num_inputs=1, num_outputs=1)


# -- brute force -------------------------------------------------------------

def test_bruteforce_and_targets():
    f = parse_pla(AND_PLA)
    assert preimages_bruteforce(f, "1").preimages == ("11",)
    assert preimages_bruteforce(f, "0").preimages == ("00", "01", "10")


def test_bruteforce_demo_hash():
    result = preimages_bruteforce(corpus.demo_hash4_pla(), "1001")
    assert result.preimages == ("0110",)
    assert result.method == "bruteforce"


def test_bruteforce_bijection_unique_everywhere():
    f = dict(corpus.corpus_functions())["aes4_sbox"]
    seen = set()
    for y in range(16):
        result = preimages_bruteforce(f, format(y, "04b"))
        assert len(result.preimages) == 1
        seen.add(result.preimages[0])
    assert len(seen) == 16  # preimages over all targets cover every input


def test_bruteforce_bijective_8bit_spot_targets():
    f = dict(corpus.corpus_functions())["aes_sbox"]
    for y in ("00000000", "01100011", "11111111"):
        assert len(preimages_bruteforce(f, y).preimages) == 1


def test_bruteforce_accepts_cover_and_circuit():
    f = parse_pla(AND_PLA)
    cover = from_pla(f)
    circ = synthesize(cover)
    for y in ("0", "1"):
        expected = preimages_bruteforce(f, y).preimages
        assert preimages_bruteforce(cover, y).preimages == expected
        assert preimages_bruteforce(circ, y).preimages == expected


def test_bruteforce_rejects_bad_target():
    with pytest.raises(ValueError):
        preimages_bruteforce(parse_pla(AND_PLA), "11")


def test_bruteforce_sorted_output():
    f = parse_pla(AND_PLA)
    assert list(preimages_bruteforce(f, "0").preimages) == sorted(["00", "01", "10"])


# -- deduction ---------------------------------------------------------------

def test_deduce_demo_hash_worked_example():
    result = preimages_deduce(demo_circuit(), "1001")
    assert result.preimages == ("0110",)
    assert result.method == "deduction"
    assert result.branches == 0  # pure propagation, no search


def test_deduce_and_target_one_forces_controls():
    result = preimages_deduce(and_circuit(), "1")
    assert result.preimages == ("11",)
    assert result.branches == 0


def test_deduce_unsatisfiable_target():
    result = preimages_deduce(const_zero_circuit(), "1")
    assert result.preimages == ()


def test_deduce_matches_bruteforce_small(small_corpus):
    for name, f in small_corpus.items():
        circ = synthesize(minimize(from_pla(f)))
        for y in range(1 << f.m):
            ys = int_to_bits(y, f.m)
            assert (
                preimages_deduce(circ, ys).preimages
                == preimages_bruteforce(f, ys).preimages
            ), (name, ys)


def test_deduce_on_unminimized_circuit():
    f = dict(corpus.corpus_functions())["present_sbox"]
    circ = synthesize(from_pla(f))
    for y in ("0000", "0110", "1111"):
        assert preimages_deduce(circ, y).preimages == preimages_bruteforce(f, y).preimages


def test_deduce_deterministic_stats():
    circ = demo_circuit()
    a = preimages_deduce(circ, "0101")
    b = preimages_deduce(circ, "0101")
    assert (a.branches, a.propagations) == (b.branches, b.propagations)


def test_deduce_nonzero_initialization():
    circ = demo_circuit()
    x = "0110"
    init = "1010"
    y = run(circ, x + init)[4:]
    result = preimages_deduce(circ, y, output_init=init)
    assert x in result.preimages
    for p in result.preimages:
        assert run(circ, p + init)[4:] == y


def test_deduce_rejects_bad_arity():
    with pytest.raises(ValueError):
        preimages_deduce(demo_circuit(), "10101")
    with pytest.raises(ValueError):
        preimages_deduce(demo_circuit(), "1001", output_init="10")


def test_deduce_rejects_input_line_targets():
    c = Circuit(num_inputs=2, num_outputs=1, gates=(NOT(0),))
    with pytest.raises(ValueError):
        preimages_deduce(c, "1")
    expanded = expand_negative_controls(
        Circuit(num_inputs=1, num_outputs=1, gates=(Gate(target=1, negative_controls={0}),))
    )
    with pytest.raises(ValueError):
        preimages_deduce(expanded, "1")


def test_deduce_rejects_output_line_controls():
    c = Circuit(num_inputs=1, num_outputs=2, gates=(CNOT(1, 2),))
    with pytest.raises(ValueError):
        preimages_deduce(c, "11")


def test_deduce_json_shape():
    doc = preimages_deduce(and_circuit(), "1").to_json_dict()
    assert set(doc) == {"target", "preimages", "method", "branches", "propagations", "elapsed"}
    assert doc["preimages"] == ["11"]


# -- first-solution mode ------------------------------------------------------

def test_preimage_one_demo():
    assert preimage_one(demo_circuit(), "1001") == "0110"


def test_preimage_one_absent():
    assert preimage_one(const_zero_circuit(), "1") is None


def test_preimage_one_lexicographic_order():
    assert preimage_one(and_circuit(), "0") == "00"
    # Always the lexicographically smallest member of the full set.
    rng = random.Random(31)
    for _ in range(50):
        f = PlaFunction(
            n=3, m=2,
            cubes=tuple(
                Cube(format(x, "03b"), format(rng.randrange(4), "02b"))
                for x in range(8)
            ),
        )
        circ = synthesize(minimize(from_pla(f)))
        for y in ("00", "01", "10", "11"):
            full = preimages_bruteforce(f, y).preimages
            one = preimage_one(circ, y)
            assert one == (min(full) if full else None)


def test_deduce_random_functions_match_bruteforce():
    rng = random.Random(32)
    for _ in range(60):
        n, m = rng.randint(1, 4), rng.randint(1, 3)
        f = PlaFunction(
            n=n, m=m,
            cubes=tuple(
                Cube(format(x, f"0{n}b"),
                     format(rng.randrange(1 << m), f"0{m}b"))
                for x in range(1 << n)
            ),
        )
        circ = synthesize(minimize(from_pla(f)))
        for y in range(1 << m):
            ys = int_to_bits(y, m)
            assert (
                preimages_deduce(circ, ys).preimages
                == preimages_bruteforce(f, ys).preimages
            )
