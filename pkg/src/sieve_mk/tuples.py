"""Admissible k-tuples: checking, construction, greedy refinement.

A set H of k integers is admissible when, for every prime p, some residue
class mod p contains no element of H.  Only primes p <= k need checking: k
elements cannot cover the p > k classes of a larger prime.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .arith import PRIMES


@dataclass(frozen=True)
class KTuple:
    """Strictly increasing non-negative integers; ``shift`` records any normalization."""

    elements: tuple[int, ...]
    shift: int = 0

    def __post_init__(self):
        els = tuple(int(h) for h in self.elements)
        if not els:
            raise ValueError("a tuple needs at least one element")
        if els[0] < 0:
            raise ValueError("tuple elements must be non-negative")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise ValueError("tuple elements must be strictly increasing")
        object.__setattr__(self, "elements", els)

    @classmethod
    def from_iterable(cls, values: Iterable[int], normalize: bool = False) -> KTuple:
        els = sorted(set(int(v) for v in values))
        if not els:
            raise ValueError("a tuple needs at least one element")
        if normalize:
            lo = els[0]
            return cls(tuple(h - lo for h in els), shift=lo)
        return cls(tuple(els))

    @property
    def k(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def normalized(self) -> KTuple:
        lo = self.elements[0]
        return KTuple(tuple(h - lo for h in self.elements), shift=self.shift + lo)


@dataclass(frozen=True)
class Admissibility:
    admissible: bool
    prime: int | None = None
    residues: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.admissible


def _as_ints(H) -> list[int]:
    return list(H.elements if isinstance(H, KTuple) else H)


def is_admissible(H) -> Admissibility:
    """Check admissibility; on failure report the first prime whose classes are all hit."""
    els = _as_ints(H)
    if not els:
        raise ValueError("empty tuple")
    for p in PRIMES.up_to(len(els)):
        residues = {h % p for h in els}
        if len(residues) == p:
            return Admissibility(False, p, tuple(sorted(residues)))
    return Admissibility(True)


def diameter(H) -> int:
    els = _as_ints(H)
    if not els:
        raise ValueError("empty tuple")
    return max(els) - min(els)


def prime_offset_tuple(k: int) -> KTuple:
    """The k consecutive primes after the first pi(k) primes, shifted to start at 0."""
    if k < 1:
        raise ValueError("k must be positive")
    start = PRIMES.pi(k)
    return KTuple.from_iterable((PRIMES.nth(start + i) for i in range(1, k + 1)), normalize=True)


def refine_admissible(A: Sequence[int], k: int) -> list[int]:
    """For each prime p <= k drop the least-occupied residue class mod p.

    Ties go to the smallest residue.  Every k-element subset of the result is
    admissible.
    """
    values = sorted(set(int(a) for a in A))
    if len(values) != len(A):
        raise ValueError("input must consist of distinct integers")
    for p in PRIMES.up_to(k):
        counts = Counter(a % p for a in values)
        drop = min(range(p), key=lambda r: (counts.get(r, 0), r))
        values = [a for a in values if a % p != drop]
    if not values:
        raise ValueError("input too small for refinement")
    return values


# fmt: off
_H105 = (
    0, 10, 12, 24, 28, 30, 34, 42, 48, 52, 54, 64, 70, 72, 78, 82, 90, 94,
    100, 112, 114, 118, 120, 124, 132, 138, 148, 154, 168, 174, 178, 180, 184,
    190, 192, 202, 204, 208, 220, 222, 232, 234, 250, 252, 258, 262, 264, 268,
    280, 288, 294, 300, 310, 322, 324, 328, 330, 334, 342, 352, 358, 360, 364,
    372, 378, 384, 390, 394, 400, 402, 408, 412, 418, 420, 430, 432, 442, 444,
    450, 454, 462, 468, 472, 478, 484, 490, 492, 498, 504, 510, 528, 532, 534,
    538, 544, 558, 562, 570, 574, 580, 582, 588, 594, 598, 600,
)
# fmt: on


def builtin_h105() -> KTuple:
    """Admissible 105-tuple of diameter 600 (Engelsma's computation)."""
    return KTuple(_H105)


H5 = KTuple((0, 2, 6, 8, 12))

# narrowest known tuples shipped with the package, by size
KNOWN_TUPLES: dict[int, KTuple] = {5: H5, 105: KTuple(_H105)}


class TupleFileError(ValueError):
    pass


def parse_tuple_text(text: str, source: str = "<tuple>") -> KTuple:
    """Parse one integer per line, ascending; blank lines and ``#`` comments allowed."""
    values: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            v = int(line)
        except ValueError:
            raise TupleFileError(f"{source}:{lineno}: not an integer: {line!r}") from None
        if v < 0:
            raise TupleFileError(f"{source}:{lineno}: negative element {v}")
        if values and v <= values[-1]:
            raise TupleFileError(f"{source}:{lineno}: elements must be strictly ascending")
        values.append(v)
    if not values:
        raise TupleFileError(f"{source}: no elements")
    return KTuple(tuple(values))


def format_tuple(H) -> str:
    return "".join(f"{h}\n" for h in _as_ints(H))


def load_tuple(source: str) -> KTuple:
    """Load ``builtin:h105`` / ``builtin:h5`` or a tuple file path."""
    if source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        table = {"h105": builtin_h105(), "h5": H5}
        if name not in table:
            raise TupleFileError(f"unknown builtin tuple {name!r}")
        return table[name]
    path = Path(source)
    return parse_tuple_text(path.read_text(), str(path))
