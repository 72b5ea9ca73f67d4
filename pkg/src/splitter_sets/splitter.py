"""Splitter sets B[-k1, k2](N): verification, classification and oracles.

B is a splitter set when the products lam * s (lam in [-k1, k2] without 0,
s in B) are nonzero and pairwise distinct mod N. Set files come in a text
form (one element per line, '#' comments) and a JSON form.
"""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from ._search import SearchBoundError, covers, first_cover

PERFECT_ORACLE_BOUND = 600
MAX_SPLITTER_BOUND = 120


@dataclass(frozen=True, order=True)
class Interval:
    """The multiplier window [-k1, k2]; multipliers exclude 0."""

    k1: int
    k2: int

    def __post_init__(self):
        if self.k1 < 0 or self.k2 < 1:
            raise ValueError(f"need k1 >= 0 and k2 >= 1, got [{-self.k1},{self.k2}]")

    @property
    def multipliers(self) -> tuple[int, ...]:
        return tuple(range(-self.k1, 0)) + tuple(range(1, self.k2 + 1))

    @property
    def size(self) -> int:
        return self.k1 + self.k2

    def mirrored(self) -> "Interval":
        """[-k2, k1]; only meaningful when k1 >= 1."""
        return Interval(self.k2, self.k1)

    def is_singular_for(self, N: int) -> bool:
        return math.gcd(N, math.factorial(self.k1) * math.factorial(self.k2)) > 1

    def __str__(self):
        return f"[-{self.k1},{self.k2}]"


class Kind(str, enum.Enum):
    PERFECT = "perfect"
    QUASI_PERFECT = "quasi-perfect"
    VALID = "valid-not-maximal"
    INVALID = "invalid"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    singular: bool


def _products(N: int, interval: Interval, elements) -> np.ndarray:
    s = np.asarray(elements, dtype=np.int64)
    lam = np.asarray(interval.multipliers, dtype=np.int64)
    if N * max(interval.k1, interval.k2) >= 1 << 62:
        return np.array([(l * int(x)) % N for l in interval.multipliers for x in s], dtype=object)
    return ((lam[:, None] * s[None, :]) % N).ravel()


def _check_elements(N: int, elements) -> list[int]:
    elements = [int(x) for x in elements]
    bad = [x for x in elements if not 1 <= x <= N - 1]
    if bad:
        raise ValueError(f"elements must lie in [1, {N - 1}]: {bad[:5]}")
    return elements


def verify_splitter(N: int, interval: Interval, elements: Iterable[int]) -> bool:
    """Whether the products lam * s are nonzero and pairwise distinct mod N."""
    elements = _check_elements(N, elements)
    if not elements:
        return True
    prod = _products(N, interval, elements)
    if prod.dtype == object:
        return 0 not in set(prod) and len(set(prod)) == prod.size
    if (prod == 0).any():
        return False
    return bool(np.bincount(prod, minlength=N).max() <= 1)


def classify(N: int, interval: Interval, elements: Iterable[int]) -> Classification:
    elements = list(elements)
    singular = interval.is_singular_for(N)
    if len(set(elements)) != len(elements) or not verify_splitter(N, interval, elements):
        return Classification(Kind.INVALID, singular)
    top, rem = divmod(N - 1, interval.size)
    if len(elements) == top:
        return Classification(Kind.QUASI_PERFECT if rem else Kind.PERFECT, singular)
    return Classification(Kind.VALID, singular)


@dataclass(frozen=True)
class SplitterSet:
    modulus: int
    interval: Interval
    elements: tuple[int, ...]
    generator: dict | None = None  # optional {base, exponent chains} description

    @classmethod
    def of(cls, modulus: int, interval: Interval, elements: Iterable[int], generator=None):
        return cls(modulus, interval, tuple(sorted(int(x) for x in elements)), generator)

    def __len__(self):
        return len(self.elements)

    def verify(self) -> bool:
        return verify_splitter(self.modulus, self.interval, self.elements)

    def classify(self) -> Classification:
        return classify(self.modulus, self.interval, self.elements)

    # -- file formats -------------------------------------------------------
    def to_json(self) -> str:
        doc = {"modulus": self.modulus, "k1": self.interval.k1, "k2": self.interval.k2,
               "elements": list(self.elements)}
        if self.generator is not None:
            doc["generator"] = self.generator
        return json.dumps(doc, separators=(",", ":")) + "\n"

    def to_text(self) -> str:
        head = f"# modulus={self.modulus} k1={self.interval.k1} k2={self.interval.k2}\n"
        return head + "".join(f"{x}\n" for x in self.elements)

    def write(self, path, fmt: str | None = None) -> None:
        path = Path(path)
        fmt = fmt or ("json" if path.suffix == ".json" else "text")
        path.write_text(self.to_json() if fmt == "json" else self.to_text())


def parse_set_text(text: str) -> tuple[dict, list[int]]:
    """Parse the text form; header comments of the form key=value are returned as metadata."""
    meta: dict[str, int] = {}
    elements = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for tok in line[1:].split():
                key, sep, val = tok.partition("=")
                if sep and val.lstrip("-").isdigit():
                    meta[key] = int(val)
            continue
        try:
            elements.append(int(line))
        except ValueError:
            raise ValueError(f"line {lineno}: not an integer: {raw!r}") from None
    return meta, elements


def read_set(path, modulus: int | None = None, k1: int | None = None,
             k2: int | None = None) -> SplitterSet:
    """Load a set file in either form; explicit arguments override file metadata."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        missing = {"modulus", "k1", "k2", "elements"} - doc.keys()
        if missing:
            raise ValueError(f"set file lacks fields {sorted(missing)}")
        meta, elements = doc, doc["elements"]
        if not all(isinstance(x, int) for x in elements):
            raise ValueError("elements must be integers")
    else:
        meta, elements = parse_set_text(text)
    N = modulus if modulus is not None else meta.get("modulus")
    k1 = k1 if k1 is not None else meta.get("k1")
    k2 = k2 if k2 is not None else meta.get("k2")
    if N is None or k1 is None or k2 is None:
        raise ValueError("modulus, k1 and k2 must come from the file or the caller")
    _check_elements(N, elements)
    # keep the caller's order and duplicates out of it: classification must see them
    return SplitterSet(N, Interval(k1, k2), tuple(int(x) for x in elements),
                       meta.get("generator") if isinstance(meta, dict) else None)


# -- oracles -----------------------------------------------------------------

def _block(N: int, interval: Interval, s: int) -> int | None:
    cells = {(l * s) % N for l in interval.multipliers}
    if 0 in cells or len(cells) != interval.size:
        return None
    return sum(1 << (c - 1) for c in cells)


def _splitting_problem(N: int, interval: Interval):
    blocks, owners = [], []
    for s in range(1, N):
        b = _block(N, interval, s)
        if b is not None:
            blocks.append(b)
            owners.append(s)
    by_cell = [[] for _ in range(N - 1)]
    for r, b in enumerate(blocks):
        for c in range(N - 1):
            if b >> c & 1:
                by_cell[c].append(r)
    return blocks, owners, by_cell


def perfect_exists_bruteforce(q: int, interval: Interval,
                              bound: int = PERFECT_ORACLE_BOUND) -> tuple[bool, tuple[int, ...] | None]:
    """Exact-cover search for a perfect B[-k1,k2](q) set; returns (exists, witness)."""
    if q > bound:
        raise SearchBoundError(f"q={q} exceeds the oracle bound {bound}")
    if (q - 1) % interval.size:
        raise ValueError(f"{interval.size} does not divide q-1={q - 1}")
    blocks, owners, by_cell = _splitting_problem(q, interval)
    # for prime q, u*B is perfect whenever B is, so one element may be fixed to 1
    start = 0
    fixed: list[int] = []
    if 1 in owners and q > max(interval.k1, interval.k2):
        root = owners.index(1)
        start, fixed = blocks[root], [1]
    sol = first_cover(q - 1, blocks, by_cell, start_mask=start)
    if sol is None:
        return False, None
    return True, tuple(sorted(fixed + [owners[r] for r in sol]))


def enumerate_perfect(q: int, interval: Interval,
                      bound: int = PERFECT_ORACLE_BOUND) -> Iterator[tuple[int, ...]]:
    """Every perfect B[-k1,k2](q) set, each once, as a sorted tuple."""
    if q > bound:
        raise SearchBoundError(f"q={q} exceeds the oracle bound {bound}")
    blocks, owners, by_cell = _splitting_problem(q, interval)
    for sol in covers(q - 1, blocks, by_cell):
        yield tuple(sorted(owners[r] for r in sol))


def max_splitter_bruteforce(N: int, interval: Interval,
                            bound: int = MAX_SPLITTER_BOUND) -> tuple[int, tuple[int, ...]]:
    """Largest splitter set in Z_N; returns (size, a witness of that size).

    Tries sizes downward from floor((N-1)/(k1+k2)); a set of size t leaves
    exactly N-1-t(k1+k2) nonzero residues uncovered, which bounds the search.
    """
    if N > bound:
        raise SearchBoundError(f"N={N} exceeds the oracle bound {bound}")
    if N < 2:
        return 0, ()
    blocks, owners, by_cell = _splitting_problem(N, interval)
    for t in range((N - 1) // interval.size, -1, -1):
        waste = N - 1 - t * interval.size
        sol = first_cover(N - 1, blocks, by_cell, waste=waste)
        if sol is not None:
            witness = tuple(sorted(owners[r] for r in sol))
            assert len(witness) == t and verify_splitter(N, interval, witness)
            return t, witness
    raise AssertionError("unreachable: the empty set is a splitter set")
