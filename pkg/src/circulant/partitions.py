# Integer partitions and multiset set-partitions, with the part-multiplicity
# bookkeeping the coefficient formulas need.

from collections import Counter

from sympy.utilities.iterables import multiset_partitions as _msp

from .exactmath import factorial


class IntegerPartition:
    """A partition of p into parts z1 >= z2 >= ... >= zj >= 1."""

    def __init__(self, parts):
        self.parts = tuple(sorted(parts, reverse=True))
        self.p = sum(self.parts)
        self.j = len(self.parts)
        counts = Counter(self.parts)
        # multiplicities k_1..k_p (k_i = number of parts equal to i)
        self.multiplicities = tuple(counts.get(i, 0) for i in range(1, self.p + 1))

    def __repr__(self):
        return "IntegerPartition%r" % (self.parts,)

    def __eq__(self, other):
        return isinstance(other, IntegerPartition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)


def integer_partitions(p: int):
    """All partitions of p, largest-part-first order; p=0 gives the empty partition."""
    if p < 0:
        raise ValueError("p must be >= 0")
    out = []

    def rec(remaining, cap, acc):
        if remaining == 0:
            out.append(IntegerPartition(acc))
            return
        for z in range(min(cap, remaining), 0, -1):
            rec(remaining - z, z, acc + [z])

    rec(p, p, [])
    return out


class SetPartition:
    """A partition of a multiset of indices into unordered parts.

    Identical parts are kept as repeated entries in `parts`; kappa counts them
    so evaluators can divide by kappa! per distinct part.
    """

    def __init__(self, parts):
        canon = sorted((tuple(sorted(part)) for part in parts),
                       key=lambda t: (-len(t), t))
        self.parts = tuple(canon)
        self.j = len(self.parts)
        self.sizes = tuple(len(part) for part in self.parts)
        self.kappa = Counter(self.parts)
        self.traces = tuple(sum(part) for part in self.parts)

    def residues(self, modulus: int):
        """X value per part: -trace mod modulus, in [0, modulus-1]."""
        return tuple((-t) % modulus for t in self.traces)

    def kappa_factorial(self) -> int:
        out = 1
        for count in self.kappa.values():
            out *= factorial(count)
        return out

    def element_multiplicity_factorial(self, part) -> int:
        out = 1
        for count in Counter(part).values():
            out *= factorial(count)
        return out

    def size_profile(self):
        return IntegerPartition(self.sizes)

    def __repr__(self):
        return "SetPartition%r" % (self.parts,)

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)


def multiset_partitions(elements):
    """All distinct partitions of a multiset, as SetPartition objects.

    The empty multiset yields a single empty partition.
    """
    elements = sorted(elements)
    if not elements:
        return [SetPartition([])]
    out = [SetPartition(parts) for parts in _msp(elements)]
    # deterministic order regardless of what the enumerator produced
    out.sort(key=lambda sp: sp.parts)
    return out


def part_residue(theta, modulus: int) -> int:
    """X(theta) = -sum(theta) mod modulus, normalized into [0, modulus-1]."""
    return (-sum(theta)) % modulus
