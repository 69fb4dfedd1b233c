import pytest

from sd40.constructions import (
    BinaryGeneratorMatrix,
    b10_matrix,
    binmap,
    build_d4n0,
    build_e_b,
    build_e_c,
    c40_de_b10,
    certify,
    d4_block,
    e10_matrix,
    parse_matrix_text,
    printed_de_matrix,
    printed_se_matrix,
    rho_a,
    rho_b,
    rho_c,
    row_reduce,
    same_span,
)
from sd40.gf4 import Gf4Word

DE_DISTRIBUTION = {
    0: 1, 8: 285, 12: 21280, 16: 239970, 20: 525504,
    24: 239970, 28: 21280, 32: 285, 40: 1,
}
SE_DISTRIBUTION = {
    0: 1, 8: 285, 10: 1024, 12: 11040, 14: 46080, 16: 117090,
    18: 215040, 20: 267456, 22: 215040, 24: 117090, 26: 46080,
    28: 11040, 30: 1024, 32: 285, 40: 1,
}


def test_binmap_examples():
    w = Gf4Word.from_string("1111000000")
    assert format(binmap(w), "040b") == "0011" * 4 + "0000" * 6
    assert binmap(Gf4Word(0, 10)) == 0
    w2 = Gf4Word.from_string("wW00000000")
    assert format(binmap(w2), "040b") == "01010110" + "0000" * 8
    with pytest.raises(ValueError):
        binmap(Gf4Word(0, 5))


def test_d4n0_generators():
    gens = build_d4n0()
    assert len(gens) == 9
    assert format(gens[0], "040b") == "1" * 8 + "0" * 32
    span = {0}
    for g in gens:
        span |= {w ^ g for w in span}
    assert len(span) == 512
    assert all(w.bit_count() % 8 == 0 for w in span)


def test_glue_vectors():
    eb, ec = build_e_b(), build_e_c()
    assert format(eb, "040b") == "1000" * 9 + "0111"
    assert format(ec, "040b") == "1000" * 10
    assert eb.bit_count() == 12
    assert ec.bit_count() == 10
    assert (eb >> 39) & 1 == 1  # coordinate 1
    assert format(eb, "040b")[36:] == "0111"  # coordinates 37..40


def test_row_reduce_deterministic_and_idempotent():
    rows = printed_de_matrix().rows
    basis = row_reduce(rows)
    assert len(basis) == 20
    assert row_reduce(basis) == basis
    assert row_reduce(reversed(rows)) == basis


def test_rho_b_is_the_printed_code(de_matrix):
    assert same_span(de_matrix, printed_de_matrix())


def test_rho_c_is_the_printed_se_code(se_matrix):
    assert same_span(se_matrix, printed_se_matrix())


def test_lifts_are_self_dual():
    for m in (e10_matrix(), b10_matrix()):
        for construct in (rho_a, rho_b, rho_c):
            lifted = construct(m)
            assert len(lifted.rows) == 20
            assert lifted.is_self_dual()


def test_rho_a_contains_d4(de_matrix):
    ra = rho_a(e10_matrix())
    assert ra.contains(d4_block(1))
    # d4 blocks have weight 4, so construction A is not distance 8.
    assert not de_matrix.contains(d4_block(1))


def test_certify_de(de_matrix):
    report = certify(de_matrix)
    assert report.self_dual
    assert report.minimum_distance == 8
    assert report.parity_type == "doubly-even"
    assert report.weight_distribution == DE_DISTRIBUTION


def test_certify_se(se_matrix):
    report = certify(se_matrix)
    assert report.self_dual
    assert report.minimum_distance == 8
    assert report.parity_type == "singly-even"
    assert report.weight_distribution == SE_DISTRIBUTION


def test_certify_b10_lift_same_distribution():
    report = certify(c40_de_b10())
    assert report.weight_distribution == DE_DISTRIBUTION
    assert report.parity_type == "doubly-even"


def test_printed_matrix_spot_rows():
    rows = printed_de_matrix().rows
    assert format(rows[0], "040b") == "0011" * 4 + "0" * 24
    assert format(rows[4], "040b") == (
        "0011000000110000001100000011000001010110"
    )
    assert rows[19] == build_e_b()
    assert printed_se_matrix().rows[19] == build_e_c()


def test_encode_unit_vectors():
    m = printed_de_matrix()
    assert m.encode(1 << 19) == m.rows[0]
    assert m.encode(0) == 0
    assert m.encode(0b11 << 18) == m.rows[0] ^ m.rows[1]
    with pytest.raises(ValueError):
        m.encode(1 << 20)


def test_matrix_text_roundtrip():
    text = printed_de_matrix().to_text()
    assert parse_matrix_text(text) == printed_de_matrix().rows
    with pytest.raises(ValueError):
        parse_matrix_text(text.replace("0", "2", 1))
    with pytest.raises(ValueError):
        parse_matrix_text("\n".join(text.splitlines()[:5]))


def test_rank_deficient_matrix_rejected():
    rows = printed_de_matrix().rows
    with pytest.raises(ValueError):
        BinaryGeneratorMatrix("bad", rows[:19] + (rows[0] ^ rows[1],))


def test_non_self_dual_matrix_flagged():
    rows = tuple(1 << (39 - i) for i in range(20))
    m = BinaryGeneratorMatrix("identity-padded", rows)
    assert not m.is_self_dual()
    report = certify(m)
    assert not report.self_dual
    assert report.parity_type == "odd"
    assert report.minimum_distance == 1
