"""Permutations of {1..n} with the apply-left-first composition convention.

Throughout the package a product written compose(a, b) means "apply a, then b",
i.e. the function b o a.  Permutations act on arrangements (tuples of n distinct
values) by position: the value landing in slot p is the one previously in slot
inverse(p).
"""

from __future__ import annotations

import re

from .errors import ShapeError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """Bijection of {1..n}, stored in one-line notation (images[i-1] = image of i)."""

    __slots__ = ("images", "_inv")

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ShapeError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_inv", None)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= self.n:
            raise ShapeError(f"point {point} outside 1..{self.n}")
        return self.images[point - 1]

    def inverse(self) -> "Permutation":
        inv = self._inv
        if inv is None:
            out = [0] * self.n
            for i, image in enumerate(self.images, start=1):
                out[image - 1] = i
            inv = Permutation(out)
            object.__setattr__(self, "_inv", inv)
        return inv

    def is_identity(self) -> bool:
        return all(image == i for i, image in enumerate(self.images, start=1))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def cycle_string(self) -> str:
        """Cycle notation, fixed points omitted; identity prints as 'id'."""
        seen = [False] * self.n
        parts: list[str] = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen[nxt - 1] = True
                nxt = self(nxt)
            if len(cyc) > 1:
                parts.append("(" + "".join(str(x) for x in cyc) + ")")
        return "".join(parts) if parts else "id"


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def from_cycles(n: int, text: str) -> Permutation:
    """Parse cycle notation like '(123)' or '(12)(34)'; 'id' or '()' is the identity.

    A cycle (a b c) maps a to b, b to c, c to a.  Points may be separated by
    spaces or commas; single digits may be juxtaposed.
    """
    text = text.strip()
    if text in ("id", "()", "e", ""):
        return identity(n)
    if not re.fullmatch(r"(\s*\([^()]*\)\s*)+", text):
        raise ShapeError(f"bad cycle notation: {text!r}")
    images = list(range(1, n + 1))
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if not body:
            continue
        if re.search(r"[\s,]", body):
            points = [int(tok) for tok in re.split(r"[\s,]+", body) if tok]
        else:
            points = [int(ch) for ch in body]
        if len(set(points)) != len(points):
            raise ShapeError(f"cycle repeats a point: ({body})")
        for p in points:
            if not 1 <= p <= n:
                raise ShapeError(f"cycle point {p} outside 1..{n}")
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b
    perm = Permutation(images)
    return perm


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply a first, then b (the function b o a)."""
    if a.n != b.n:
        raise ShapeError(f"cannot compose permutations of sizes {a.n} and {b.n}")
    return Permutation(b(a(i)) for i in range(1, a.n + 1))


def act(sigma: Permutation, arrangement: tuple) -> tuple:
    """Rearrange a tuple: slot p of the result takes the value from slot inverse(p)."""
    if len(arrangement) != sigma.n:
        raise ShapeError(
            f"arrangement of length {len(arrangement)} under permutation of {sigma.n}"
        )
    inv = sigma.inverse().images
    return tuple(arrangement[inv[p] - 1] for p in range(sigma.n))
