"""
Set compositions, integer compositions and descent-starred permutations.

Canonical strings follow the usual numeric notation: a set composition is
written ``15|346|2`` and a descent-starred permutation ``5*16*4*32`` (a star
follows each starred letter). Labels above 9 switch to ``{10,11}`` blocks and
space-separated letters.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

from .errors import FormatError

logger = logging.getLogger(__name__)


# =========================
#   TEXT HELPERS
# =========================

def _format_block(block):
    items = sorted(block)
    if all(x <= 9 for x in items):
        return ''.join(map(str, items))
    return '{' + ','.join(map(str, items)) + '}'


def _parse_block(text):
    if not text:
        return frozenset()
    if text.startswith('{') and text.endswith('}'):
        fields = [f for f in text[1:-1].split(',') if f.strip()]
    elif text.isdigit():
        fields = list(text)
    else:
        raise FormatError(f"cannot read block {text!r}")
    try:
        items = [int(f) for f in fields]
    except ValueError as exc:
        raise FormatError(f"cannot read block {text!r}") from exc
    if len(set(items)) != len(items):
        raise FormatError(f"repeated element in block {text!r}")
    return frozenset(items)


# =========================
#   TYPES
# =========================

@dataclass(frozen=True)
class SetComposition:
    """Ordered list of disjoint nonempty blocks covering ``{1..n}``."""

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        object.__setattr__(self, 'blocks', blocks)
        seen = set()
        for block in blocks:
            if not block:
                raise FormatError("set compositions have no empty block")
            if seen & block:
                raise FormatError(f"blocks of {self} overlap")
            seen |= block
        if seen != set(range(1, len(seen) + 1)):
            raise FormatError(f"blocks {sorted(seen)} do not cover 1..{len(seen)}")

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(_parse_block(part) for part in text.split('|')))

    def __str__(self):
        return '|'.join(_format_block(b) for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    @property
    def n(self):
        return sum(len(b) for b in self.blocks)

    @cached_property
    def positions(self):
        """Block index (1-based) of every element."""
        return {x: i for i, block in enumerate(self.blocks, 1) for x in block}


@dataclass(frozen=True)
class IntegerComposition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise FormatError(f"composition parts must be positive: {parts}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if ',' in text:
            return cls(tuple(int(p) for p in text.split(',')))
        if not text.isdigit() and text:
            raise FormatError(f"cannot read composition {text!r}")
        return cls(tuple(int(p) for p in text))

    def __str__(self):
        if all(p <= 9 for p in self.parts):
            return ''.join(map(str, self.parts))
        return ','.join(map(str, self.parts))

    @property
    def degree(self):
        return sum(self.parts)


@dataclass(frozen=True)
class DStarPerm:
    """A permutation word together with a subset of its descent positions."""

    word: tuple
    stars: frozenset = frozenset()

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        stars = frozenset(int(x) for x in self.stars)
        object.__setattr__(self, 'word', word)
        object.__setattr__(self, 'stars', stars)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise FormatError(f"{word} is not a permutation of 1..{len(word)}")
        for x in stars:
            if not 1 <= x < len(word):
                raise FormatError(f"star position {x} out of range")
            if word[x - 1] < word[x]:
                raise FormatError(f"starred position {x} of {word} is not a descent")

    @classmethod
    def parse(cls, text):
        text = text.strip()
        tokens = text.split() if ' ' in text else list(_split_letters(text))
        word, stars = [], set()
        for x, token in enumerate(tokens, 1):
            if token.endswith('*'):
                stars.add(x)
                token = token[:-1]
            if not token.isdigit():
                raise FormatError(f"cannot read descent-starred word {text!r}")
            word.append(int(token))
        return cls(tuple(word), frozenset(stars))

    def __str__(self):
        sep = '' if len(self.word) <= 9 else ' '
        return sep.join(
            f"{letter}{'*' if x in self.stars else ''}"
            for x, letter in enumerate(self.word, 1)
        )

    @property
    def n(self):
        return len(self.word)

    @property
    def descents(self):
        return frozenset(
            x for x in range(1, len(self.word)) if self.word[x - 1] > self.word[x]
        )


def _split_letters(text):
    token = ''
    for char in text:
        if char == '*':
            token += char
            continue
        if token:
            yield token
        token = char
    if token:
        yield token


@dataclass(frozen=True)
class SemiLengthView:
    """A set composition read as ``(I_1, J_1, ..., I_r, J_r)``; only ``J_r`` may be empty."""

    i_blocks: tuple
    j_blocks: tuple

    def __post_init__(self):
        i_blocks = tuple(frozenset(b) for b in self.i_blocks)
        j_blocks = tuple(frozenset(b) for b in self.j_blocks)
        object.__setattr__(self, 'i_blocks', i_blocks)
        object.__setattr__(self, 'j_blocks', j_blocks)
        if len(i_blocks) != len(j_blocks):
            raise FormatError("a semi-length view needs as many J blocks as I blocks")
        if any(not b for b in i_blocks) or any(not b for b in j_blocks[:-1]):
            raise FormatError("only the last J block may be empty")
        # validates disjointness and coverage
        self.composition

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not (text.startswith('(') and text.endswith(')')):
            raise FormatError(f"cannot read semi-length view {text!r}")
        body = text[1:-1]
        depth = 0
        for at, char in enumerate(body):
            depth += {'{': 1, '}': -1}.get(char, 0)
            if char == ',' and depth == 0:
                left, right = body[:at], body[at + 1:]
                break
        else:
            raise FormatError(f"cannot read semi-length view {text!r}")
        i_blocks = tuple(_parse_block(b) for b in left.split('|'))
        j_blocks = tuple(_parse_block(b) for b in right.split('|'))
        return cls(i_blocks, j_blocks)

    def __str__(self):
        left = '|'.join(_format_block(b) for b in self.i_blocks)
        right = '|'.join(_format_block(b) for b in self.j_blocks)
        return f"({left},{right})"

    @property
    def r(self):
        return len(self.i_blocks)

    @cached_property
    def composition(self):
        blocks = []
        for i_block, j_block in zip(self.i_blocks, self.j_blocks):
            blocks.append(i_block)
            if j_block:
                blocks.append(j_block)
        return SetComposition(tuple(blocks))

    @property
    def n(self):
        return self.composition.n

    @property
    def left(self):
        return frozenset().union(*self.i_blocks)

    @property
    def right(self):
        return frozenset().union(*self.j_blocks)

    @cached_property
    def levels(self):
        """The index m with ``x`` in ``I_m`` or ``J_m``."""
        out = {}
        for m, (i_block, j_block) in enumerate(zip(self.i_blocks, self.j_blocks), 1):
            for x in i_block | j_block:
                out[x] = m
        return out


# =========================
#   OPERATIONS
# =========================

def delta_of_word(w):
    """Position ``j`` lands in the block ranked by the value ``w_j`` among the distinct letters."""
    w = tuple(w)
    if not w:
        raise FormatError("delta_of_word needs a nonempty word")
    rank = {value: i for i, value in enumerate(sorted(set(w)))}
    blocks = [set() for _ in rank]
    for j, letter in enumerate(w, 1):
        blocks[rank[letter]].add(j)
    return SetComposition(tuple(blocks))


def phi_c(composition):
    return IntegerComposition(tuple(len(b) for b in composition.blocks))


def to_dstar(composition):
    word, stars = [], set()
    for block in composition.blocks:
        start = len(word) + 1
        word.extend(sorted(block, reverse=True))
        stars.update(range(start, start + len(block) - 1))
    return DStarPerm(tuple(word), frozenset(stars))


def from_dstar(perm):
    if not perm.stars <= perm.descents:
        raise FormatError(f"{perm} stars a position that is not a descent")
    if not perm.word:
        return SetComposition(())
    blocks = [{perm.word[0]}]
    for x in range(1, perm.n):
        if x in perm.stars:
            blocks[-1].add(perm.word[x])
        else:
            blocks.append({perm.word[x]})
    return SetComposition(tuple(blocks))


def adjacent_coarsenings(composition):
    """Every composition obtained by merging runs of adjacent blocks, ``composition`` included."""
    bars = range(1, len(composition))
    out = []
    for size in range(len(bars) + 1):
        for removed in combinations(bars, size):
            blocks = [set(composition.blocks[0])] if composition.blocks else []
            for i in range(1, len(composition)):
                if i in removed:
                    blocks[-1] |= composition.blocks[i]
                else:
                    blocks.append(set(composition.blocks[i]))
            out.append(SetComposition(tuple(blocks)))
    return sorted(out, key=str)


def _set_partitions_ordered(remaining, admissible):
    """Ordered partitions of ``remaining`` whose every leading block passes ``admissible``."""

    @lru_cache(maxsize=None)
    def tails(rest):
        if not rest:
            return ((),)
        items = sorted(rest)
        out = []
        for size in range(1, len(items) + 1):
            for first in combinations(items, size):
                block = frozenset(first)
                if not admissible(block, rest):
                    continue
                out.extend((block,) + tail for tail in tails(rest - block))
        return tuple(out)

    return tails(frozenset(remaining))


@lru_cache(maxsize=8)
def _all_setcomps(n):
    found = _set_partitions_ordered(range(1, n + 1), lambda block, rest: True)
    comps = sorted((SetComposition(blocks) for blocks in found), key=str)
    logger.debug("enumerated %d set compositions of %d", len(comps), n)
    return tuple(comps)


def enumerate_setcomps(n):
    """Every set composition of ``{1..n}``, sorted by canonical string."""
    return iter(_all_setcomps(n))


def compatible_setcomps(n, weak=(), strict=()):
    """
    Set compositions of ``{1..n}`` whose block index satisfies
    ``pos(u) <= pos(v)`` for each ``(u, v)`` in ``weak`` and
    ``pos(u) < pos(v)`` for each ``(u, v)`` in ``strict``.
    """
    weak = tuple(weak)
    strict = tuple(strict)

    def admissible(block, rest):
        for u, v in weak:
            if v in block and u in rest and u not in block:
                return False
        for u, v in strict:
            if v in block and u in rest:
                return False
        return True

    found = _set_partitions_ordered(range(1, n + 1), admissible)
    return sorted((SetComposition(blocks) for blocks in found), key=str)


def split_semilength(composition):
    blocks = composition.blocks
    i_blocks = blocks[0::2]
    j_blocks = blocks[1::2]
    if len(j_blocks) < len(i_blocks):
        j_blocks = j_blocks + (frozenset(),)
    return SemiLengthView(i_blocks, j_blocks)
