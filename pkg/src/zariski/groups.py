"""Ambient monoid and group interfaces used by word evaluation.

Word and matrix operations are generic over the carrier: they only need an
identity, multiplication, and (for group words) inversion.  Cancellativity
is assumed by the normalization algorithm but never checked at runtime.
"""

from zariski.perm import IDENTITY, FinPermutation


class Monoid:
    def one(self):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError


class Group(Monoid):
    def inv(self, a):
        raise NotImplementedError


class SymOmega(Group):
    """The finitary symmetric group on N; elements are FinPermutation."""

    def one(self) -> FinPermutation:
        return IDENTITY

    def mul(self, a: FinPermutation, b: FinPermutation) -> FinPermutation:
        return a * b

    def inv(self, a: FinPermutation) -> FinPermutation:
        return a.inv()


class NatPlus(Monoid):
    """The naturals under addition: a cancellative monoid with no inverses.

    Used to exercise the normalization code path on a carrier where only
    cancellativity (not invertibility) is available.
    """

    def one(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return a + b


SYM = SymOmega()
NAT_PLUS = NatPlus()
