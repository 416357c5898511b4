import random

import pytest

from chordgenus.errors import AttachmentLengthError, TracingConsistencyError
from chordgenus.surface import (
    AttachmentConfig,
    EndEdgeTracing,
    Side,
    boundary_count,
    build_rotation_system,
    chord_dart,
    end_edge_trace,
    genus,
    genus_from_boundary_count,
    next_dart,
    prev_dart,
    trace_faces,
)
from chordgenus.words import all_normalized_words, enumerate_words, parse
from helpers import random_word


def all_configs(n):
    for bits in range(4 ** n):
        yield AttachmentConfig.from_bits(bits, 2 * n)


class TestAttachmentConfig:
    def test_parse_flags(self):
        cfg = AttachmentConfig.parse("io")
        assert cfg.sides == (Side.IN, Side.OUT)
        assert cfg.out_bits == 0b10
        assert cfg.render() == "io"

    def test_aliases(self):
        assert AttachmentConfig.parse("all-in", 4) == AttachmentConfig.all_in(4)
        assert AttachmentConfig.parse("ALL-OUT", 4) == AttachmentConfig.all_out(4)
        with pytest.raises(AttachmentLengthError):
            AttachmentConfig.parse("all-in")

    def test_bad_flag(self):
        with pytest.raises(AttachmentLengthError):
            AttachmentConfig.parse("ix")

    def test_complement_and_toggle(self):
        cfg = AttachmentConfig.parse("io")
        assert cfg.complement().render() == "oi"
        assert cfg.toggled(0).render() == "oo"
        assert cfg.toggled(1).render() == "ii"

    def test_length_mismatch(self):
        with pytest.raises(AttachmentLengthError):
            boundary_count(parse("11"), AttachmentConfig.parse("iii"))


class TestRotationSystem:
    def test_single_chord_all_in(self):
        rs = build_rotation_system(parse("11"), AttachmentConfig.all_in(2))
        # per-vertex rotations (next, chord, prev) at both endpoints
        assert rs.rho[next_dart(0)] == chord_dart(0)
        assert rs.rho[chord_dart(0)] == prev_dart(0)
        assert rs.rho[prev_dart(0)] == next_dart(0)
        assert rs.rho[next_dart(1)] == chord_dart(1)
        # alpha: next(i) <-> prev(i+1), chord(0) <-> chord(1)
        assert rs.alpha[next_dart(0)] == prev_dart(1)
        assert rs.alpha[next_dart(1)] == prev_dart(0)
        assert rs.alpha[chord_dart(0)] == chord_dart(1)
        rs.check()

    def test_single_chord_out_in(self):
        rs = build_rotation_system(parse("11"), AttachmentConfig.parse("oi"))
        # outer endpoint rotates (next, prev, chord)
        assert rs.rho[next_dart(0)] == prev_dart(0)
        assert rs.rho[prev_dart(0)] == chord_dart(0)
        assert rs.rho[chord_dart(0)] == next_dart(0)
        assert rs.rho[next_dart(1)] == chord_dart(1)
        rs.check()

    def test_alpha_is_free_involution(self):
        rng = random.Random(5)
        for _ in range(30):
            w = random_word(rng, rng.randint(1, 7))
            cfg = AttachmentConfig.from_bits(rng.getrandbits(2 * w.n), 2 * w.n)
            rs = build_rotation_system(w, cfg)
            rs.check()
            for d in range(rs.dart_count):
                assert rs.alpha[d] != d
                assert rs.alpha[rs.alpha[d]] == d

    def test_length_mismatch(self):
        with pytest.raises(AttachmentLengthError):
            build_rotation_system(parse("11"), AttachmentConfig.all_in(4))


class TestTraceFaces:
    def test_single_chord_all_in(self):
        fd = trace_faces(build_rotation_system(parse("11"), AttachmentConfig.all_in(2)))
        assert fd.b == 3

    def test_interleaved_pair_all_in(self):
        fd = trace_faces(build_rotation_system(parse("1212"), AttachmentConfig.all_in(4)))
        assert fd.b == 2

    def test_single_chord_mixed(self):
        fd = trace_faces(build_rotation_system(parse("11"), AttachmentConfig.parse("io")))
        assert fd.b == 1

    def test_nested_triple_all_in(self):
        fd = trace_faces(build_rotation_system(parse("123321"), AttachmentConfig.all_in(6)))
        assert fd.b == 5

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_faces_partition_darts(self, n):
        for w in all_normalized_words(n):
            for cfg in all_configs(n):
                fd = trace_faces(build_rotation_system(w, cfg))
                darts = [d for face in fd.faces for d in face]
                assert sorted(darts) == list(range(6 * n))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_all_in_outer_boundary_is_one_face(self, n):
        for w in enumerate_words(n):
            fd = trace_faces(build_rotation_system(w, AttachmentConfig.all_in(2 * n)))
            outer = {fd.face_of(next_dart(i)) for i in range(2 * n)}
            assert len(outer) == 1
            assert fd.b >= 2


class TestGenus:
    def test_formula_values(self):
        assert genus_from_boundary_count(2, 2) == 1
        assert genus_from_boundary_count(1, 3) == 0
        assert genus_from_boundary_count(7, 1) == 4

    def test_formula_rejects_parity_violation(self):
        with pytest.raises(TracingConsistencyError):
            genus_from_boundary_count(2, 3)
        with pytest.raises(TracingConsistencyError):
            genus_from_boundary_count(2, 0)
        with pytest.raises(TracingConsistencyError):
            genus_from_boundary_count(2, 6)

    def test_genus_of_configs(self):
        assert genus(parse("1212"), AttachmentConfig.all_in(4)) == 1
        assert genus(parse("11"), AttachmentConfig.all_in(2)) == 0
        assert genus(parse("11"), AttachmentConfig.parse("io")) == 1


class TestEndEdge:
    def test_single_chord_all_in_double(self):
        assert (end_edge_trace(parse("11"), AttachmentConfig.all_in(2))
                is EndEdgeTracing.DOUBLE)

    def test_single_chord_mixed_single(self):
        assert (end_edge_trace(parse("11"), AttachmentConfig.parse("io"))
                is EndEdgeTracing.SINGLE)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_one_boundary_curve_implies_single(self, n):
        for w in all_normalized_words(n):
            for cfg in all_configs(n):
                if boundary_count(w, cfg) == 1:
                    assert end_edge_trace(w, cfg) is EndEdgeTracing.SINGLE
