"""Integrity checks for the benchmark reference tables.

The tables double as the equivalence oracle for synthesized circuits, so
they are verified here through independent routes: published spot values,
defining algebraic identities recomputed with a separate field
implementation, and structural properties of the standards.
"""

from revhash.pla import parse_pla

from revhash import corpus

# Standard first DES S-box, transcribed from the DES specification.
DES_S1 = (
    (14, 4, 13, 1, 2, 15, 11, 8, 3, 10, 6, 12, 5, 9, 0, 7),
    (0, 15, 7, 4, 14, 2, 13, 1, 10, 6, 12, 11, 9, 5, 3, 8),
    (4, 1, 14, 8, 13, 6, 2, 11, 15, 12, 9, 7, 3, 10, 5, 0),
    (15, 12, 8, 2, 4, 9, 1, 7, 5, 11, 3, 14, 10, 0, 6, 13),
)


def gf256_mul(a, b):
    # Independent shift-and-add multiply, distinct from the generator's code.
    r = 0
    for i in range(8):
        if (b >> i) & 1:
            r ^= a << i
    for i in range(15, 7, -1):
        if (r >> i) & 1:
            r ^= 0x11B << (i - 8)
    return r


def inverse_aes_affine(y):
    # Inverse of the S-box affine layer: x_i = y_{(i+2)%8} ^ y_{(i+5)%8} ^ y_{(i+7)%8} ^ c_i
    out = 0
    for i in range(8):
        bit = ((y >> ((i + 2) % 8)) ^ (y >> ((i + 5) % 8)) ^ (y >> ((i + 7) % 8)) ^ (0x05 >> i)) & 1
        out |= bit << i
    return out


def test_aes_sbox_known_values():
    s = corpus.aes_sbox()
    assert s[0x00] == 0x63
    assert s[0x01] == 0x7C
    assert s[0x02] == 0x77
    assert s[0x03] == 0x7B
    assert s[0x10] == 0xCA
    assert s[0x53] == 0xED
    assert s[0xFF] == 0x16
    assert s[0x52] == 0x00


def test_aes_sbox_is_affine_of_field_inverse():
    s = corpus.aes_sbox()
    assert sorted(s) == list(range(256))
    for x in range(1, 256):
        # Undoing the affine layer must recover the field inverse of x.
        assert gf256_mul(x, inverse_aes_affine(s[x])) == 1
    assert inverse_aes_affine(s[0]) == 0


def test_aes_inverse_sbox():
    s, inv = corpus.aes_sbox(), corpus.aes_inv_sbox()
    assert inv[0x00] == 0x52
    assert inv[0x63] == 0x00
    assert all(inv[s[x]] == x for x in range(256))


def test_aes4_sbox_published_table():
    assert corpus.aes4_sbox() == (0x6, 0xB, 0x5, 0x4, 0x2, 0xE, 0x7, 0xA,
                                  0x9, 0xD, 0xF, 0xC, 0x3, 0x1, 0x0, 0x8)


def test_present_sbox_published_table():
    assert corpus.PRESENT_SBOX == (0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD,
                                   0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2)


def test_des_sbox1_matches_standard():
    assert corpus.DES_SBOXES[0] == DES_S1


def test_des_sbox_structural_properties():
    assert len(corpus.DES_SBOXES) == 8
    for table in corpus.DES_SBOXES:
        assert len(table) == 4
        for row in table:
            assert sorted(row) == list(range(16))


def test_des_sbox_spot_rows():
    assert corpus.DES_SBOXES[1][0] == (15, 1, 8, 14, 6, 11, 3, 4, 9, 7, 2, 13, 12, 0, 5, 10)
    assert corpus.DES_SBOXES[4][0] == (2, 12, 4, 1, 7, 10, 11, 6, 8, 5, 3, 15, 13, 0, 14, 9)
    assert corpus.DES_SBOXES[7][3] == (2, 1, 14, 7, 4, 10, 8, 13, 15, 12, 9, 0, 3, 5, 6, 11)


def test_des_sbox_row_column_convention():
    fn = corpus.des_sbox(1)
    # Input b1..b6 = 011011: row = b1b6 = 01 = 1, column = b2..b5 = 1101 = 13.
    assert fn(0b011011) == DES_S1[1][13]
    assert fn(0) == DES_S1[0][0]
    assert fn(0b111111) == DES_S1[3][15]


def test_hash8_properties():
    values = [corpus.hash8(x) for x in range(256)]
    assert sorted(values) == list(range(256))
    assert values[0x36] == 0
    # The avalanche criteria the regenerated hash was built to satisfy.
    for x in range(256):
        assert bin(x ^ values[x]).count("1") >= 4
        for i in range(8):
            assert bin(values[x] ^ values[x ^ (1 << i)]).count("1") >= 4


def test_demo_hash4_is_complement():
    assert corpus.demo_hash4(0b0110) == 0b1001
    assert [corpus.demo_hash4(x) for x in range(16)] == [x ^ 0xF for x in range(16)]


def test_corpus_functions_shape():
    entries = corpus.corpus_functions()
    assert len(entries) == 13
    names = [name for name, _ in entries]
    assert names[:2] == ["aes4_sbox", "present_sbox"]
    assert names[2:10] == [f"des_sbox{k}" for k in range(1, 9)]
    assert names[10:] == ["aes_sbox", "aes_inv_sbox", "hash8_avalanche"]
    for name, f in entries:
        assert len(f.cubes) == 1 << f.n
        assert (f.n, f.m) in {(4, 4), (6, 4), (8, 8)}


def test_write_corpus(tmp_path):
    paths = corpus.write_corpus(tmp_path)
    assert len(paths) == 13
    for path in paths:
        f = parse_pla(path.read_text())
        assert len(f.cubes) == 1 << f.n
    with_demo = corpus.write_corpus(tmp_path / "demo", include_demo=True)
    assert len(with_demo) == 14
    assert with_demo[-1].name == "demo_hash4.pla"
