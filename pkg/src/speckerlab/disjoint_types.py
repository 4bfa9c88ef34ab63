"""Balanced interleaving words and helpers for finite ordinal-like sets.

An "ordinal set" here is a strictly increasing tuple of non-negative
integers.  A disjoint type of length n is a 0/1 word of length 2n with
exactly n zeros and n ones; it records how two disjoint n-element ordinal
sets merge: bit i is 0 exactly when the i-th smallest element of the union
comes from the first set.  Types serialize as ASCII 0/1 strings, ordinal
sets as comma-separated integers.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class TypeAlgebraError(ValueError):
    """Invalid disjoint type or ordinal set."""


class OddLengthError(TypeAlgebraError):
    pass


class UnbalancedTypeError(TypeAlgebraError):
    pass


class NotDisjointError(TypeAlgebraError):
    pass


class UnequalSizesError(TypeAlgebraError):
    pass


class BadParametersError(TypeAlgebraError):
    pass


class IndexOutOfRangeError(TypeAlgebraError):
    pass


@dataclass(frozen=True)
class DisjointType:
    """A balanced 0/1 word of even length; the empty word is allowed."""

    bits: str

    def __post_init__(self):
        if any(c not in "01" for c in self.bits):
            raise TypeAlgebraError(f"bits must be a 0/1 word, got {self.bits!r}")
        if len(self.bits) % 2 != 0:
            raise OddLengthError(f"type length {len(self.bits)} is odd")
        if self.bits.count("0") != self.bits.count("1"):
            raise UnbalancedTypeError(
                f"{self.bits!r} has {self.bits.count('0')} zeros "
                f"and {self.bits.count('1')} ones"
            )

    @property
    def n(self) -> int:
        return len(self.bits) // 2

    def complement(self) -> "DisjointType":
        return DisjointType(self.bits.translate(_FLIP))

    def __str__(self) -> str:
        return self.bits

    def __len__(self) -> int:
        return len(self.bits)


_FLIP = str.maketrans("01", "10")

EMPTY_TYPE = DisjointType("")


def validate_type(bits) -> DisjointType:
    """Build a DisjointType from a 0/1 string or an iterable of 0/1 ints."""
    if not isinstance(bits, str):
        parts = []
        for b in bits:
            if b not in (0, 1):
                raise TypeAlgebraError(f"bit values must be 0 or 1, got {b!r}")
            parts.append(str(b))
        bits = "".join(parts)
    return DisjointType(bits)


def concat(t0: DisjointType, t1: DisjointType) -> DisjointType:
    """Concatenation of two disjoint types; EMPTY_TYPE is the identity."""
    return DisjointType(t0.bits + t1.bits)


def canonical_type(n: int, s: int) -> DisjointType:
    """The word made of s zeros, then n-s copies of "01", then s ones.

    Requires 1 <= s <= n-1.  For example canonical_type(5, 2) is 0001010111.
    """
    if not 1 <= s <= n - 1:
        raise BadParametersError(f"need 1 <= s <= n-1, got n={n}, s={s}")
    return DisjointType("0" * s + "01" * (n - s) + "1" * s)


def tp(a, b) -> DisjointType:
    """The interleaving type of two disjoint equal-size ordinal sets."""
    a = as_ordinal_set(a)
    b = as_ordinal_set(b)
    if len(a) != len(b):
        raise UnequalSizesError(f"sizes differ: {len(a)} vs {len(b)}")
    first = set(a)
    if first.intersection(b):
        raise NotDisjointError(f"sets share {sorted(first.intersection(b))}")
    return DisjointType("".join("0" if x in first else "1" for x in sorted(a + b)))


def ones_before_zeros(t: DisjointType) -> tuple[int, ...]:
    """For each 0-bit (in order), the number of 1-bits strictly before it."""
    ones = 0
    out = []
    for bit in t.bits:
        if bit == "1":
            ones += 1
        else:
            out.append(ones)
    return tuple(out)


def all_types(n: int) -> Iterator[DisjointType]:
    """All C(2n, n) disjoint types of length n, ordered by zero positions."""
    for zeros in combinations(range(2 * n), n):
        zero_set = set(zeros)
        yield DisjointType("".join("0" if i in zero_set else "1" for i in range(2 * n)))


def as_ordinal_set(elems) -> tuple[int, ...]:
    """Normalize to a strictly increasing tuple of non-negative ints."""
    t = tuple(elems)
    if t and t[0] < 0:
        raise TypeAlgebraError(f"negative element {t[0]}")
    for x, y in zip(t, t[1:]):
        if x >= y:
            raise TypeAlgebraError(f"not strictly increasing at {x}, {y}")
    return t


def select_indices(a, indices: Iterable[int]) -> tuple[int, ...]:
    """Positional selection: the elements of `a` at the given positions."""
    a = as_ordinal_set(a)
    idx = sorted(set(indices))
    if idx and not (0 <= idx[0] and idx[-1] < len(a)):
        raise IndexOutOfRangeError(f"indices {idx} out of range for size {len(a)}")
    return tuple(a[i] for i in idx)


def ssup(a) -> int:
    """Strong supremum: the least integer strictly above every element (0 if empty)."""
    a = as_ordinal_set(a)
    return a[-1] + 1 if a else 0


def end_extends(a, b) -> bool:
    """True when b agrees with a below ssup(a)."""
    a = as_ordinal_set(a)
    b = as_ordinal_set(b)
    bound = a[-1] + 1 if a else 0
    return tuple(x for x in b if x < bound) == a


def parse_ordinal_set(text: str) -> tuple[int, ...]:
    """Parse a comma-separated integer list; empty string means the empty set."""
    if not text.strip():
        return ()
    return as_ordinal_set(int(part) for part in text.split(","))


def format_ordinal_set(a) -> str:
    return ",".join(str(x) for x in as_ordinal_set(a))
