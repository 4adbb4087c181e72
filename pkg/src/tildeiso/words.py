"""Words over a small alphabet and the basic word algebra.

Positions are 0-based everywhere in the library.  Only the presentation
layer (``str`` of edit operations, JSON reports, the CLI) shows the 1-based
positions used in the combinatorics-on-words literature.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from .errors import BoundsError, InvalidWordError, UnsupportedAlphabetError

BINARY = "01"
MAX_LEN = 64


@dataclass(frozen=True)
class Word:
    """An immutable word.

    ``symbols`` is the plain character string.  Binary words also expose a
    packed integer form through :attr:`bits`, with the first symbol in the
    most significant bit, so integer order equals lexicographic order among
    words of one length.

    >>> w = Word("1011")
    >>> len(w), w[0], w.bits
    (4, '1', 11)
    """

    symbols: str
    alphabet: str = field(default=BINARY, compare=False)

    def __post_init__(self):
        if not isinstance(self.symbols, str):
            raise TypeError(f"Word symbols must be a str, got {type(self.symbols).__name__}")
        if len(set(self.alphabet)) != len(self.alphabet) or not self.alphabet:
            raise UnsupportedAlphabetError(f"alphabet {self.alphabet!r} must be distinct characters")
        if len(self.symbols) > MAX_LEN:
            raise BoundsError(f"word length {len(self.symbols)} exceeds {MAX_LEN}")
        for pos, ch in enumerate(self.symbols):
            if ch not in self.alphabet:
                raise InvalidWordError(self.symbols, pos + 1, self.alphabet)

    @classmethod
    def from_bits(cls, bits, length):
        if not 0 <= bits < (1 << length):
            raise BoundsError(f"{bits} does not fit in {length} bits")
        return cls(format(bits, f"0{length}b") if length else "")

    @property
    def is_binary(self):
        return set(self.alphabet) == set(BINARY)

    @cached_property
    def bits(self):
        if not self.is_binary:
            raise UnsupportedAlphabetError(f"packed form needs a binary alphabet, got {self.alphabet!r}")
        return int(self.symbols, 2) if self.symbols else 0

    def __len__(self):
        return len(self.symbols)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.symbols[index], self.alphabet)
        return self.symbols[index]

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, other):
        return is_factor(other, self)

    def __add__(self, other):
        other = as_word(other, self.alphabet)
        return Word(self.symbols + other.symbols, self.alphabet)

    def __lt__(self, other):
        return (len(self), self.symbols) < (len(other), other.symbols)

    def __str__(self):
        return self.symbols

    def __repr__(self):
        if self.is_binary:
            return f"Word({self.symbols!r})"
        return f"Word({self.symbols!r}, alphabet={self.alphabet!r})"


def as_word(value, alphabet=None):
    """Coerce a ``str`` or :class:`Word` to a Word."""
    if isinstance(value, Word):
        if alphabet is not None and not set(value.symbols) <= set(alphabet):
            raise UnsupportedAlphabetError(f"{value!r} is not over alphabet {alphabet!r}")
        return value
    return Word(value, alphabet or BINARY)


def require_binary(*words):
    for w in words:
        if not w.is_binary:
            raise UnsupportedAlphabetError(f"{w!r} is not over the binary alphabet")


def reverse(w):
    w = as_word(w)
    return Word(w.symbols[::-1], w.alphabet)


_FLIP = str.maketrans("01", "10")


def complement(w):
    w = as_word(w)
    require_binary(w)
    return Word(w.symbols.translate(_FLIP))


def is_factor(f, w):
    """True iff ``f`` occurs contiguously in ``w``; the empty word always does."""
    return str(f) in str(w)


def is_f_free(w, f):
    return not is_factor(f, w)


def find_factor(f, w, start=0):
    """0-based index of the first occurrence of ``f`` in ``w`` at or after ``start``, or -1."""
    return str(w).find(str(f), start)


def prefix(w, length):
    w = as_word(w)
    if not 0 <= length <= len(w):
        raise BoundsError(f"prefix length {length} outside 0..{len(w)}")
    return Word(w.symbols[:length], w.alphabet)


def suffix(w, length):
    w = as_word(w)
    if not 0 <= length <= len(w):
        raise BoundsError(f"suffix length {length} outside 0..{len(w)}")
    return Word(w.symbols[len(w) - length:], w.alphabet)


def borders(w):
    """Lengths ``l`` in 1..n-1 with prefix(w, l) == suffix(w, l)."""
    s = str(w)
    return [l for l in range(1, len(s)) if s[:l] == s[len(s) - l:]]


def all_words(length, alphabet=BINARY):
    """Every word of the given length, in lexicographic order of ``alphabet``."""
    for symbols in product(alphabet, repeat=length):
        yield Word("".join(symbols), alphabet)
