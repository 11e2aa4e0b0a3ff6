"""Words in the standard generators of a closed surface group.

A word is a tuple of nonzero integers.  Generator ``a_i`` is ``2*i - 1``,
``b_i`` is ``2*i`` and a negative entry is the inverse letter.  The text
form is whitespace separated, ``a1 b1 A1 B1`` with uppercase for inverses;
``a1^-1`` and ``a1⁻¹`` are accepted on input as well.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

Word = tuple[int, ...]


class WordParseError(ValueError):
    pass


_TOKEN = re.compile(r"^([abAB])(\d+)(\^-1|\^\-1|⁻¹|\^1|\^\+1)?$")


def letter(kind: str, index: int, inverse: bool = False) -> int:
    if index < 1:
        raise WordParseError(f"generator index must be >= 1, got {index}")
    x = 2 * index - 1 if kind == "a" else 2 * index
    return -x if inverse else x


def letter_name(x: int) -> str:
    k = abs(x)
    index = (k + 1) // 2
    kind = "a" if k % 2 else "b"
    return (kind.upper() if x < 0 else kind) + str(index)


def parse_word(text: str | Sequence[int]) -> Word:
    """Parse ``"a1 b1 B2"`` (or an int sequence) into a word tuple."""
    if not isinstance(text, str):
        return tuple(int(x) for x in text)
    out = []
    # allow "a1b1A1" without spaces as well
    for tok in re.findall(r"[abAB]\d+(?:\^-1|\^\+?1|⁻¹)?", text):
        m = _TOKEN.match(tok)
        if m is None:
            raise WordParseError(f"bad token {tok!r}")
        kind, idx, suffix = m.group(1), int(m.group(2)), m.group(3)
        inv = kind.isupper()
        if suffix in ("^-1", "⁻¹"):
            inv = not inv
        out.append(letter(kind.lower(), idx, inv))
    rest = re.sub(r"[abAB]\d+(?:\^-1|\^\+?1|⁻¹)?", "", text).strip()
    if rest and rest not in ("1", "e", "id"):
        raise WordParseError(f"unparsed input {rest!r} in {text!r}")
    return tuple(out)


def format_word(w: Iterable[int]) -> str:
    return " ".join(letter_name(x) for x in w)


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def free_reduce(w: Iterable[int]) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i:j + 1])


def power(w: Sequence[int], n: int) -> Word:
    if n < 0:
        return free_reduce(inverse(w) * (-n))
    return free_reduce(tuple(w) * n)


def conjugate(w: Sequence[int], by: Sequence[int]) -> Word:
    """``by * w * by^-1``."""
    return free_reduce(tuple(by) + tuple(w) + inverse(by))


def rotations(w: Sequence[int]) -> list[Word]:
    w = tuple(w)
    return [w[i:] + w[:i] for i in range(len(w))] if w else [()]


def sort_key(x: int) -> tuple[int, int]:
    # a1 < A1 < b1 < B1 < a2 < ...
    return (abs(x), 0 if x > 0 else 1)


def shortlex_key(w: Sequence[int]) -> tuple:
    return (len(w), tuple(sort_key(x) for x in w))


def least_rotation(w: Sequence[int]) -> Word:
    return min(rotations(w), key=shortlex_key)


def exponent_sums(w: Iterable[int], genus: int) -> tuple[int, ...]:
    v = [0] * (2 * genus)
    for x in w:
        k = abs(x)
        if k > 2 * genus:
            raise WordParseError(f"letter {letter_name(x)} outside genus {genus}")
        v[k - 1] += 1 if x > 0 else -1
    return tuple(v)


def primitive_root(w: Sequence[int]) -> tuple[Word, int]:
    """Return ``(r, k)`` with cyclic word ``w == r**k`` and ``k`` maximal."""
    w = tuple(w)
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d], n // d
    return w, 1
