"""Thickened chord diagrams as rotation systems.

Thickening the backbone circle to an annulus and each chord to a band
gives an orientable surface; each band end may be attached to the inner
or the outer boundary circle of the annulus, so an n-chord diagram has
4^n thickenings.  The surface is encoded combinatorially: every
endpoint is a trivalent vertex carrying three darts, an involution
``alpha`` glues darts of the same edge, and a rotation ``rho`` records
the counterclockwise order of darts around each vertex.  Boundary
curves of the surface are then the cycles of ``rho ∘ alpha``, and the
genus follows from the Euler characteristic.

Dart layout for endpoint ``i`` (positions run counterclockwise):

* ``3i``     toward the next backbone arc (arc ``i -> i+1``),
* ``3i + 1`` into the chord band,
* ``3i + 2`` toward the previous backbone arc (arc ``i-1 -> i``).

An inner band end has rotation ``(next, chord, prev)``; an outer one
``(next, prev, chord)``.  Bands are attached untwisted, which keeps
every surface orientable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import kernels
from .errors import AttachmentLengthError, TracingConsistencyError
from .words import ChordWord


class Side(enum.Enum):
    """Which boundary circle of the backbone annulus a band end joins."""

    IN = "i"
    OUT = "o"

    def flipped(self) -> "Side":
        return Side.OUT if self is Side.IN else Side.IN


class EndEdgeTracing(enum.Enum):
    """How many boundary curves run along the end edge."""

    SINGLE = 1
    DOUBLE = 2


@dataclass(frozen=True)
class AttachmentConfig:
    """One in/out flag per endpoint position, selecting a thickening."""

    sides: "tuple[Side, ...]"

    @classmethod
    def all_in(cls, endpoints: int) -> "AttachmentConfig":
        return cls((Side.IN,) * endpoints)

    @classmethod
    def all_out(cls, endpoints: int) -> "AttachmentConfig":
        return cls((Side.OUT,) * endpoints)

    @classmethod
    def parse(cls, text: str, endpoints: "int | None" = None) -> "AttachmentConfig":
        """Parse ``"iooi..."`` flags or the aliases ``all-in`` and
        ``all-out`` (the aliases need the endpoint count)."""
        lowered = text.strip().lower()
        if lowered in ("all-in", "all-out"):
            if endpoints is None:
                raise AttachmentLengthError(
                    "alias %r needs an endpoint count" % (text,))
            side = Side.IN if lowered == "all-in" else Side.OUT
            return cls((side,) * endpoints)
        sides = []
        for c in lowered:
            if c == "i":
                sides.append(Side.IN)
            elif c == "o":
                sides.append(Side.OUT)
            else:
                raise AttachmentLengthError(
                    "attachment flags must be 'i'/'o', got %r" % (c,))
        return cls(tuple(sides))

    @classmethod
    def from_bits(cls, bits: int, endpoints: int) -> "AttachmentConfig":
        return cls(tuple(Side.OUT if (bits >> i) & 1 else Side.IN
                         for i in range(endpoints)))

    @property
    def out_bits(self) -> int:
        """Bitmask with bit i set when endpoint i is attached outside."""
        bits = 0
        for i, s in enumerate(self.sides):
            if s is Side.OUT:
                bits |= 1 << i
        return bits

    def complement(self) -> "AttachmentConfig":
        return AttachmentConfig(tuple(s.flipped() for s in self.sides))

    def toggled(self, i: int) -> "AttachmentConfig":
        sides = list(self.sides)
        sides[i] = sides[i].flipped()
        return AttachmentConfig(tuple(sides))

    def restricted(self, kept_positions) -> "AttachmentConfig":
        return AttachmentConfig(tuple(self.sides[i] for i in kept_positions))

    def render(self) -> str:
        return "".join(s.value for s in self.sides)

    def __len__(self) -> int:
        return len(self.sides)

    def __str__(self) -> str:
        return self.render()


def next_dart(i: int) -> int:
    return 3 * i


def chord_dart(i: int) -> int:
    return 3 * i + 1


def prev_dart(i: int) -> int:
    return 3 * i + 2


@dataclass(frozen=True)
class RotationSystem:
    """Darts with edge involution and vertex rotation permutations."""

    endpoints: int
    alpha: "tuple[int, ...]"
    rho: "tuple[int, ...]"

    @property
    def dart_count(self) -> int:
        return 3 * self.endpoints

    def check(self) -> None:
        nd = self.dart_count
        if len(self.alpha) != nd or len(self.rho) != nd:
            raise TracingConsistencyError("permutation length mismatch")
        if sorted(self.alpha) != list(range(nd)) or sorted(self.rho) != list(range(nd)):
            raise TracingConsistencyError("alpha and rho must be bijections")
        for d in range(nd):
            if self.alpha[d] == d or self.alpha[self.alpha[d]] != d:
                raise TracingConsistencyError("alpha is not a free involution")


def build_rotation_system(word: ChordWord, config: AttachmentConfig) -> RotationSystem:
    """Rotation system of the thickening selected by ``config``."""
    m = 2 * word.n
    if len(config) != m:
        raise AttachmentLengthError(
            "word has %d endpoints but %d flags given" % (m, len(config)))
    pair = word.pairing().positions
    alpha = [0] * (3 * m)
    rho = [0] * (3 * m)
    for i in range(m):
        alpha[3 * i] = 3 * ((i + 1) % m) + 2
        alpha[3 * i + 1] = 3 * pair[i] + 1
        alpha[3 * i + 2] = 3 * ((i - 1) % m)
        nd, cd, pd = 3 * i, 3 * i + 1, 3 * i + 2
        if config.sides[i] is Side.IN:
            rho[nd], rho[cd], rho[pd] = cd, pd, nd
        else:
            rho[nd], rho[pd], rho[cd] = pd, cd, nd
    return RotationSystem(endpoints=m, alpha=tuple(alpha), rho=tuple(rho))


@dataclass(frozen=True)
class FaceDecomposition:
    """Partition of the darts into boundary-curve cycles."""

    faces: "tuple[tuple[int, ...], ...]"
    _face_of: "dict[int, int]" = field(repr=False, compare=False, default_factory=dict)

    @property
    def b(self) -> int:
        return len(self.faces)

    def face_of(self, dart: int) -> int:
        return self._face_of[dart]

    def same_face(self, d1: int, d2: int) -> bool:
        return self._face_of[d1] == self._face_of[d2]


def trace_faces(rs: RotationSystem) -> FaceDecomposition:
    """Cycles of ``rho ∘ alpha``; each cycle is one boundary curve.

    Faces are listed by their least dart; every dart appears in exactly
    one cycle (verified, a failure here is an internal bug).
    """
    nd = rs.dart_count
    alpha, rho = rs.alpha, rs.rho
    face_of: "dict[int, int]" = {}
    faces = []
    for start in range(nd):
        if start in face_of:
            continue
        cycle = []
        d = start
        while d not in face_of:
            face_of[d] = len(faces)
            cycle.append(d)
            d = rho[alpha[d]]
        if d != start:
            raise TracingConsistencyError("face walk did not close up")
        faces.append(tuple(cycle))
    if sum(len(f) for f in faces) != nd:
        raise TracingConsistencyError("faces do not partition the darts")
    return FaceDecomposition(tuple(faces), face_of)


def genus_from_boundary_count(n: int, b: int) -> int:
    """Euler characteristic formula: genus = (n - b + 2) / 2.

    A parity or range violation can only come from a tracing bug, so it
    aborts loudly instead of rounding.
    """
    if b < 1 or b > n + 2 or (n - b) % 2:
        raise TracingConsistencyError(
            "impossible boundary count b=%d for n=%d" % (b, n))
    return (n - b + 2) // 2


def boundary_count(word: ChordWord, config: AttachmentConfig) -> int:
    if len(config) != 2 * word.n:
        raise AttachmentLengthError(
            "word has %d endpoints but %d flags given"
            % (2 * word.n, len(config)))
    b, _ = kernels.trace_b_end(word.pairing().positions, config.out_bits)
    return b


def genus(word: ChordWord, config: AttachmentConfig) -> int:
    """Genus of the thickening selected by ``config``."""
    return genus_from_boundary_count(word.n, boundary_count(word, config))


def end_edge_trace(word: ChordWord, config: AttachmentConfig) -> EndEdgeTracing:
    """Single or double tracing of the end edge.

    The end edge is the backbone arc from the last endpoint back to
    position 0 (it contains the base point); its two boundary segments
    belong to the faces of darts ``next(2n-1)`` and ``prev(0)``.
    """
    if len(config) != 2 * word.n:
        raise AttachmentLengthError(
            "word has %d endpoints but %d flags given"
            % (2 * word.n, len(config)))
    _, single = kernels.trace_b_end(word.pairing().positions, config.out_bits)
    return EndEdgeTracing.SINGLE if single else EndEdgeTracing.DOUBLE
