"""Permutations of {1..k}, reduced words, partitions and standard tableaux.

Permutations are one-line tuples ``(σ(1), ..., σ(k))`` and compose right to
left: ``compose(a, b)(x) = a(b(x))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product


def identity(k: int) -> tuple:
    return tuple(range(1, k + 1))


def compose(a: tuple, b: tuple) -> tuple:
    return tuple(a[x - 1] for x in b)


def inverse(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a, start=1):
        out[x - 1] = i
    return tuple(out)


def transposition(i: int, j: int, k: int) -> tuple:
    p = list(range(1, k + 1))
    p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
    return tuple(p)


def simple(j: int, k: int) -> tuple:
    return transposition(j, j + 1, k)


def length(a: tuple) -> int:
    """Number of inversions."""
    return sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] > a[j])


@lru_cache(maxsize=None)
def reduced_word(a: tuple) -> tuple:
    """Canonical reduced word (j_1, ..., j_l) with a = s_{j_1} ∘ ... ∘ s_{j_l}.

    Built by bubble sort: if a(j) > a(j+1) then a = (a ∘ s_j) ∘ s_j with a ∘ s_j
    one shorter.
    """
    k = len(a)
    for j in range(1, k):
        if a[j - 1] > a[j]:
            return reduced_word(compose(a, simple(j, k))) + (j,)
    return ()


def from_word(word, k: int) -> tuple:
    out = identity(k)
    for j in word:
        out = compose(out, simple(j, k))
    return out


def all_permutations(k: int) -> list:
    return [tuple(p) for p in permutations(range(1, k + 1))]


def from_cycles(cycles, k: int) -> tuple:
    """Product of cycles, rightmost applied first."""
    out = identity(k)
    for cyc in cycles:
        p = list(range(1, k + 1))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a - 1] = b
        out = compose(out, tuple(p))
    return out


# ---------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(not r for r in rows):
            raise ValueError("empty row in tableau")
        shape = self.shape
        if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
            raise ValueError(f"row lengths {shape} are not a partition")
        entries = self.entries()
        if len(set(entries)) != len(entries):
            raise ValueError("repeated entry in tableau")
        for r in rows:
            if any(r[i] >= r[i + 1] for i in range(len(r) - 1)):
                raise ValueError(f"row {r} does not increase")
        for c in range(shape[0] if shape else 0):
            col = [r[c] for r in rows if len(r) > c]
            if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
                raise ValueError(f"column {col} does not increase")

    @property
    def shape(self) -> tuple:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def entries(self) -> list:
        return [x for r in self.rows for x in r]

    def cells(self):
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                yield (i, j), x

    def row_of(self, x: int) -> int:
        """1-based row containing x."""
        for i, r in enumerate(self.rows, start=1):
            if x in r:
                return i
        raise KeyError(x)

    def columns(self) -> list:
        shape = self.shape
        return [tuple(r[c] for r in self.rows if len(r) > c) for c in range(shape[0] if shape else 0)]

    def to_json(self) -> list:
        return [list(r) for r in self.rows]

    def __str__(self):
        return "/".join("".join(str(x) for x in r) if all(x < 10 for x in r)
                        else ",".join(str(x) for x in r) for r in self.rows)


def row_tableau(shape, entries=None) -> StandardTableau:
    """T_+: entries increase by one across rows."""
    entries = list(entries) if entries is not None else list(range(1, sum(shape) + 1))
    rows, pos = [], 0
    for m in shape:
        rows.append(tuple(entries[pos:pos + m]))
        pos += m
    return StandardTableau(tuple(rows))


def column_tableau(shape, entries=None) -> StandardTableau:
    """T_-: entries increase by one down columns."""
    entries = list(entries) if entries is not None else list(range(1, sum(shape) + 1))
    conj = conjugate(shape)
    grid = [[None] * m for m in shape]
    pos = 0
    for c, h in enumerate(conj):
        for r in range(h):
            grid[r][c] = entries[pos]
            pos += 1
    return StandardTableau(tuple(tuple(r) for r in grid))


def conjugate(shape) -> tuple:
    shape = tuple(shape)
    if not shape:
        return ()
    return tuple(sum(1 for m in shape if m > c) for c in range(shape[0]))


def partitions(m: int, max_part: int | None = None) -> list:
    if max_part is None:
        max_part = m
    if m == 0:
        return [()]
    out = []
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions(m - first, first):
            out.append((first,) + rest)
    return out


def standard_tableaux(shape, entries=None) -> list:
    """All standard tableaux of the given shape with the given (sorted) entries."""
    shape = tuple(shape)
    m = sum(shape)
    entries = sorted(entries) if entries is not None else list(range(1, m + 1))
    out = []

    def fill(grid, remaining):
        if not remaining:
            out.append(StandardTableau(tuple(tuple(r) for r in grid)))
            return
        x = remaining[0]
        for r, mlen in enumerate(shape):
            c = len(grid[r])
            if c >= mlen:
                continue
            if r > 0 and len(grid[r - 1]) <= c:
                continue
            grid[r].append(x)
            fill(grid, remaining[1:])
            grid[r].pop()

    fill([[] for _ in shape], entries)
    return out


def all_standard_tableaux(entries, max_rows: int | None = None) -> list:
    entries = sorted(entries)
    out = []
    for shape in partitions(len(entries)):
        if max_rows is not None and len(shape) > max_rows:
            continue
        out.extend(standard_tableaux(shape, entries))
    return out


def row_group(t: StandardTableau, k: int) -> list:
    """Permutations of {1..k} preserving each row of t (fixing other points)."""
    return _block_group([r for r in t.rows], k)


def column_group(t: StandardTableau, k: int) -> list:
    return _block_group(t.columns(), k)


def _block_group(blocks, k: int) -> list:
    out = []
    for perms in product(*[permutations(b) for b in blocks]):
        p = list(range(1, k + 1))
        for b, img in zip(blocks, perms):
            for src, dst in zip(b, img):
                p[src - 1] = dst
        out.append(tuple(p))
    return sorted(out)


def tableau_permutation(source: StandardTableau, target: StandardTableau, k: int) -> tuple:
    """σ with σ(source[cell]) = target[cell]; points outside source map increasingly
    onto the points outside target."""
    if source.shape != target.shape:
        raise ValueError("tableaux of different shapes")
    p = [0] * k
    src = dict(source.cells())
    tgt = dict(target.cells())
    for cell, x in src.items():
        p[x - 1] = tgt[cell]
    rest_src = [x for x in range(1, k + 1) if x not in set(source.entries())]
    rest_tgt = [x for x in range(1, k + 1) if x not in set(target.entries())]
    for a, b in zip(rest_src, rest_tgt):
        p[a - 1] = b
    return tuple(p)


def parse_tableau(text: str) -> StandardTableau:
    """Parse ``[[1,2],[3]]`` (JSON rows) or ``12/3`` (rows separated by '/')."""
    import json

    text = text.strip()
    if text.startswith("["):
        return StandardTableau(tuple(tuple(r) for r in json.loads(text)))
    rows = []
    for part in text.split("/"):
        part = part.strip()
        if "," in part:
            rows.append(tuple(int(x) for x in part.split(",")))
        else:
            rows.append(tuple(int(ch) for ch in part))
    return StandardTableau(tuple(rows))


# ---------------------------------------------------------------------------
# contraction patterns


class PatternError(ValueError):
    """Overlapping or malformed contraction pattern."""


@dataclass(frozen=True)
class ContractionPattern:
    pairs: tuple

    def __post_init__(self):
        pairs = tuple(tuple(p) for p in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        seen = set()
        for p in pairs:
            if len(p) != 2:
                raise PatternError(f"pair {p} must have two entries")
            r, s = p
            if not r < s:
                raise PatternError(f"pair {p} needs r < s")
            if r in seen or s in seen:
                raise PatternError(f"pattern {pairs} reuses an index")
            seen.update(p)

    @property
    def r(self) -> tuple:
        return tuple(p[0] for p in self.pairs)

    @property
    def s(self) -> tuple:
        return tuple(p[1] for p in self.pairs)

    def support(self) -> set:
        return {x for p in self.pairs for x in p}

    def complement(self, k: int) -> list:
        sup = self.support()
        return [x for x in range(1, k + 1) if x not in sup]

    def check(self, k: int):
        if any(not 1 <= x <= k for x in self.support()):
            raise PatternError(f"pattern {self.pairs} out of range for k={k}")

    def to_json(self) -> list:
        return [list(p) for p in self.pairs]


def patterns(j: int, k: int) -> list:
    """All (r̃, s̃) in P(j): j disjoint pairs r_m < s_m, as unordered sets of pairs
    listed with r_1 < r_2 < ... ."""
    out = []

    def rec(avail, acc):
        if len(acc) == j:
            out.append(ContractionPattern(tuple(acc)))
            return
        for a_i, r in enumerate(avail):
            if acc and r < acc[-1][0]:
                continue
            for s in avail[a_i + 1:]:
                rest = [x for x in avail if x not in (r, s)]
                rec(rest, acc + [(r, s)])

    rec(list(range(1, k + 1)), [])
    return out


def parse_pattern(text: str) -> ContractionPattern:
    """Parse ``[[1,3],[2,4]]`` (JSON) or ``1-3,2-4``; the empty string is no contraction."""
    import json

    text = text.strip()
    if text.startswith("["):
        data = json.loads(text)
    else:
        try:
            data = [tuple(int(x) for x in part.split("-")) for part in text.split(",") if part.strip()]
        except ValueError as exc:
            raise PatternError(f"cannot parse pattern {text!r}") from exc
    return ContractionPattern(tuple(tuple(p) for p in data))
