"""Permutations of {1..n}.

Points are 1-based in every public surface (constructors, ``images``,
cycle strings).  Internally the image array is stored 0-based.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DegreeMismatchError


class Permutation:
    """An immutable bijection of ``{1..degree}``.

    ``p(i)`` evaluates the image of point ``i``; ``p * q`` is the composition
    ``p ∘ q`` (apply ``q`` first).  Permutations are totally ordered
    lexicographically by image array, which gives every group a canonical
    element order.
    """

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Sequence[int]):
        img = tuple(int(x) - 1 for x in images)
        n = len(img)
        if n == 0:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(img) != list(range(n)):
            raise ValueError(f"not a permutation of 1..{n}: {list(images)}")
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _raw(cls, img: tuple[int, ...]) -> Permutation:
        p = object.__new__(cls)
        p._img = img
        p._hash = hash(img)
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        if degree < 1:
            raise ValueError("degree must be >= 1")
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Build a permutation from *disjoint* 1-based cycles."""
        img = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= degree:
                    raise ValueError(f"point {a} outside 1..{degree}")
                if a in seen:
                    raise ValueError(f"point {a} repeated; cycles must be disjoint")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b - 1
        return cls._raw(tuple(img))

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self._img)

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self._img)
        for i, x in enumerate(self._img):
            inv[x] = i
        return Permutation._raw(tuple(inv))

    def conjugate(self, by: Permutation) -> Permutation:
        """Return ``by * self * by^-1``."""
        b = by._img
        if len(b) != len(self._img):
            raise DegreeMismatchError(f"degrees {len(b)} and {len(self._img)} differ")
        out = [0] * len(b)
        for i, x in enumerate(self._img):
            out[b[i]] = b[x]
        return Permutation._raw(tuple(out))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def order(self) -> int:
        from math import lcm

        result = 1
        for cyc in self.cycles():
            result = lcm(result, len(cyc))
        return result

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 1-based, each starting at its smallest point."""
        seen = [False] * len(self._img)
        out = []
        for start in range(len(self._img)):
            if seen[start] or self._img[start] == start:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self._img[j]
            out.append(tuple(cyc))
        return out

    def extend(self, degree: int) -> Permutation:
        """Pad with fixed points up to ``degree``."""
        n = len(self._img)
        if degree < n:
            raise ValueError(f"cannot shrink degree {n} to {degree}")
        return Permutation._raw(self._img + tuple(range(n, degree)))

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, degree={self.degree})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __lt__(self, other: Permutation) -> bool:
        return self._img < other._img

    def __le__(self, other: Permutation) -> bool:
        return self._img <= other._img

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (Permutation, (self.images,))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p ∘ q``, i.e. ``i ↦ p(q(i))``."""
    a, b = p._img, q._img
    if len(a) != len(b):
        raise DegreeMismatchError(f"cannot compose degree {len(a)} with degree {len(b)}")
    return Permutation._raw(tuple(a[x] for x in b))


def identity(degree: int) -> Permutation:
    return Permutation.identity(degree)


def inverse(p: Permutation) -> Permutation:
    return p.inverse()
