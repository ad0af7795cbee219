"""Concrete groups with canonical normal forms.

Every group element is plain immutable Python data (tuples, ints,
``Fraction``), already in its unique normal form, so structural equality
is group equality and elements can key memo tables.  The ``Group``
subclasses carry the operations: ``identity``, ``multiply``, ``inverse``,
deterministic ``ball`` enumeration, seeded ``sample``, and a text syntax
(``parse`` / ``format_element``) used by the CLI and config files.

Supported groups:

* ``IntVector(d)``      -- the lattice Z^d, elements are int tuples.
* ``RationalAdditive``  -- (Q, +), elements are ``Fraction``.
* ``HeisenbergRational``-- upper unitriangular 3x3 rational matrices,
  stored as coordinate triples (a, b, c) with the product rule
  (a1,b1,c1)*(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2).
* ``FreeProdZZ2``       -- <a, b | a^2 = e>, the free product of Z and
  Z/2.  Normal form: a tuple alternating the letter ``"a"`` and nonzero
  ints n (standing for b^n), with no two adjacent letters of the same
  type.
* ``IntDirectSum``      -- integer sequences with finite support,
  stored as sorted tuples of (index, nonzero coefficient).
* ``CyclicFinite(n)``   -- Z/n, elements are residues in [0, n).
* ``GLFloat(n)``        -- invertible n x n float matrices (|det| > 1e-9),
  stored as tuples of row tuples.  Quarantined to float demos; all other
  groups are exact.
* ``FreeWordGroup(labels)`` -- free group on generator labels; the
  carrier for matrix-element functions of a representation.

Ball enumeration order is deterministic: elements are sorted by a
documented per-group key, so reports are reproducible bit-for-bit.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

import numpy as np

__all__ = [
    "GroupError",
    "det_float",
    "Group",
    "IntVector",
    "RationalAdditive",
    "HeisenbergRational",
    "FreeProdZZ2",
    "IntDirectSum",
    "CyclicFinite",
    "GLFloat",
    "FreeWordGroup",
    "group_from_name",
    "power",
]

GL_DET_MIN = 1e-9


class GroupError(ValueError):
    """Malformed element, cross-group operands, or unsupported operation."""


def det_float(mat) -> float:
    """Determinant of a small float matrix (closed form up to 3x3)."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    if n == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = mat
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return float(np.linalg.det(np.array(mat, dtype=float)))


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise GroupError(f"not a rational literal: {text!r}") from exc


def _format_fraction(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _rational_grid(bound: int) -> list[Fraction]:
    """All reduced p/q with |p| <= bound and 1 <= q <= bound, sorted."""
    values = {Fraction(p, q) for q in range(1, bound + 1) for p in range(-bound, bound + 1)}
    return sorted(values)


@dataclass(frozen=True)
class Group:
    """Base class; operations are pure and elements immutable."""

    name = "group"
    is_commutative = False
    is_exact = True

    def identity(self):
        raise NotImplementedError

    def multiply(self, x, y):
        raise NotImplementedError

    def inverse(self, x):
        raise NotImplementedError

    def validate(self, x) -> None:
        """Raise GroupError unless x is a well-formed normal form."""
        raise NotImplementedError

    def ball(self, radius: int, coeff_bound: int = 1) -> list:
        """Deterministic, duplicate-free, inverse-closed test set.

        ``radius`` bounds the generator word length (group-specific, see
        subclasses); ``coeff_bound`` bounds exponents / numerators and
        denominators.  Always contains the identity.
        """
        raise NotImplementedError

    def sample(self, count: int, seed: int) -> list:
        """Seeded pseudo-random elements; identical on repeat calls."""
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format_element(self, x) -> str:
        raise NotImplementedError

    def sort_key(self, x):
        return repr(x)

    def _check_radius(self, radius: int) -> None:
        if radius < 0:
            raise GroupError(f"radius must be >= 0, got {radius}")


@dataclass(frozen=True)
class IntVector(Group):
    d: int = 1

    name = "int-vector"
    is_commutative = True

    def __post_init__(self):
        if self.d < 1:
            raise GroupError(f"dimension must be >= 1, got {self.d}")

    def identity(self):
        return (0,) * self.d

    def validate(self, x) -> None:
        if not (isinstance(x, tuple) and len(x) == self.d and all(isinstance(c, int) for c in x)):
            raise GroupError(f"not a Z^{self.d} element: {x!r}")

    def multiply(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def inverse(self, x):
        return tuple(-a for a in x)

    def ball(self, radius, coeff_bound=1):
        # All v with max|v_i| <= coeff_bound and sum|v_i| <= radius.
        self._check_radius(radius)
        if radius == 0:
            return [self.identity()]
        m = min(radius, coeff_bound)
        pts = [
            v
            for v in itertools.product(range(-m, m + 1), repeat=self.d)
            if sum(abs(c) for c in v) <= radius
        ]
        return sorted(pts)

    def sample(self, count, seed):
        rng = random.Random(f"{seed}|{self.name}|{self.d}")
        return [tuple(rng.randint(-3, 3) for _ in range(self.d)) for _ in range(count)]

    def parse(self, text):
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        parts = [p for p in body.split(",") if p.strip() != ""]
        if len(parts) != self.d:
            raise GroupError(f"expected {self.d} coordinates in {text!r}")
        try:
            return tuple(int(p) for p in parts)
        except ValueError as exc:
            raise GroupError(f"not an integer vector: {text!r}") from exc

    def format_element(self, x):
        return "(" + ",".join(str(c) for c in x) + ")"

    def sort_key(self, x):
        return x


@dataclass(frozen=True)
class RationalAdditive(Group):
    name = "rational"
    is_commutative = True

    def identity(self):
        return Fraction(0)

    def validate(self, x) -> None:
        if not isinstance(x, Fraction):
            raise GroupError(f"not a rational element: {x!r}")

    def multiply(self, x, y):
        return x + y

    def inverse(self, x):
        return -x

    def ball(self, radius, coeff_bound=1):
        # Reduced p/q with |p| <= coeff_bound, q <= coeff_bound, |p/q| <= radius.
        self._check_radius(radius)
        return [q for q in _rational_grid(coeff_bound) if abs(q) <= radius]

    def sample(self, count, seed):
        rng = random.Random(f"{seed}|{self.name}")
        return [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(count)]

    def parse(self, text):
        return _parse_fraction(text)

    def format_element(self, x):
        return _format_fraction(x)

    def sort_key(self, x):
        return x


@dataclass(frozen=True)
class HeisenbergRational(Group):
    name = "heisenberg"

    def identity(self):
        return (Fraction(0), Fraction(0), Fraction(0))

    def validate(self, x) -> None:
        if not (isinstance(x, tuple) and len(x) == 3 and all(isinstance(c, Fraction) for c in x)):
            raise GroupError(f"not a Heisenberg element: {x!r}")

    def multiply(self, x, y):
        a1, b1, c1 = x
        a2, b2, c2 = y
        return (a1 + a2, b1 + b2, c1 + c2 + a1 * b2)

    def inverse(self, x):
        a, b, c = x
        return (-a, -b, a * b - c)

    def element(self, a, b, c):
        return (Fraction(a), Fraction(b), Fraction(c))

    def ball(self, radius, coeff_bound=1):
        # Products of at most `radius` one-axis powers x^t, y^t, z^t with
        # t = p/q, 0 < |p| <= coeff_bound, q <= coeff_bound.  Inverse-closed
        # because the generator set is symmetric and word length is
        # preserved by inversion.
        self._check_radius(radius)
        exponents = [t for t in _rational_grid(coeff_bound) if t != 0]
        zero = Fraction(0)
        generators = []
        for t in exponents:
            generators.append((t, zero, zero))
            generators.append((zero, t, zero))
            generators.append((zero, zero, t))
        seen = {self.identity()}
        frontier = [self.identity()]
        for _ in range(radius):
            new = []
            for x in frontier:
                for g in generators:
                    y = self.multiply(x, g)
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return sorted(seen)

    def sample(self, count, seed):
        rng = random.Random(f"{seed}|{self.name}")
        out = []
        for _ in range(count):
            out.append(tuple(Fraction(rng.randint(-2, 2), rng.randint(1, 2)) for _ in range(3)))
        return out

    def parse(self, text):
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        parts = body.split(",")
        if len(parts) != 3:
            raise GroupError(f"expected 3 coordinates in {text!r}")
        return tuple(_parse_fraction(p) for p in parts)

    def format_element(self, x):
        return "(" + ",".join(_format_fraction(c) for c in x) + ")"

    def sort_key(self, x):
        return x


def _normalize_word(letters) -> tuple:
    """Reduce a letter sequence by a*a -> e and b^m * b^n -> b^(m+n)."""
    out = []
    for letter in letters:
        if letter == "a":
            if out and out[-1] == "a":
                out.pop()
            else:
                out.append("a")
        else:
            n = letter
            if not isinstance(n, int):
                raise GroupError(f"bad letter {letter!r} in word")
            if n == 0:
                continue
            if out and out[-1] != "a":
                n += out.pop()
                if n == 0:
                    continue
            out.append(n)
    return tuple(out)


@dataclass(frozen=True)
class FreeProdZZ2(Group):
    """The group <a, b | a^2 = e>.

    Words are tuples mixing the letter ``"a"`` and nonzero ints (b-block
    exponents); the normal form never contains a*a or b^0, and no two
    adjacent letters have the same type.  Word length counts one per
    ``a`` and |n| per block b^n.
    """

    name = "freeprod"

    def identity(self):
        return ()

    def validate(self, x) -> None:
        if not isinstance(x, tuple):
            raise GroupError(f"not a word: {x!r}")
        for i, letter in enumerate(x):
            ok_a = letter == "a"
            ok_b = isinstance(letter, int) and letter != 0
            if not (ok_a or ok_b):
                raise GroupError(f"bad letter {letter!r} in word {x!r}")
            if i > 0 and (x[i - 1] == "a") == ok_a:
                raise GroupError(f"word {x!r} is not in normal form")

    def multiply(self, x, y):
        return _normalize_word(itertools.chain(x, y))

    def inverse(self, x):
        return tuple("a" if letter == "a" else -letter for letter in reversed(x))

    def word_length(self, x) -> int:
        return sum(1 if letter == "a" else abs(letter) for letter in x)

    def generator_a(self):
        return ("a",)

    def generator_b(self, n: int = 1):
        if n == 0:
            raise GroupError("b^0 is the identity; use identity()")
        return (n,)

    def ball(self, radius, coeff_bound=1):
        # All normal forms of word length <= radius with every block
        # exponent |n| <= coeff_bound.
        self._check_radius(radius)
        words: list[tuple] = []
        exps = [n for n in range(-coeff_bound, coeff_bound + 1) if n != 0]

        def extend(word: list, budget: int) -> None:
            words.append(tuple(word))
            if budget <= 0:
                return
            last = word[-1] if word else None
            if last != "a":
                word.append("a")
                extend(word, budget - 1)
                word.pop()
            if last is None or last == "a":
                for n in exps:
                    if abs(n) <= budget:
                        word.append(n)
                        extend(word, budget - abs(n))
                        word.pop()

        extend([], radius)
        return sorted(words, key=self.sort_key)

    def sample(self, count, seed):
        rng = random.Random(f"{seed}|{self.name}")
        out = []
        for _ in range(count):
            letters = []
            for _ in range(rng.randint(0, 6)):
                if rng.random() < 0.4:
                    letters.append("a")
                else:
                    letters.append(rng.choice([-2, -1, 1, 2]))
            out.append(_normalize_word(letters))
        return out

    def parse(self, text):
        body = text.strip()
        if body in ("", "e"):
            return self.identity()
        letters = []
        for token in body.split():
            if token == "a":
                letters.append("a")
            elif token == "b":
                letters.append(1)
            elif token.startswith("b^"):
                try:
                    letters.append(int(token[2:]))
                except ValueError as exc:
                    raise GroupError(f"bad word token {token!r}") from exc
            else:
                raise GroupError(f"bad word token {token!r}")
        return _normalize_word(letters)

    def format_element(self, x):
        if not x:
            return "e"
        parts = []
        for letter in x:
            if letter == "a":
                parts.append("a")
            elif letter == 1:
                parts.append("b")
            else:
                parts.append(f"b^{letter}")
        return " ".join(parts)

    def sort_key(self, x):
        return (self.word_length(x), tuple((0, 0) if c == "a" else (1, c) for c in x))


@dataclass(frozen=True)
class IntDirectSum(Group):
    """Finitely supported integer sequences indexed from 1."""

    name = "int-sum"
    is_commutative = True

    SAMPLE_WINDOW = 12  # sampled vectors have support inside 1..12

    def identity(self):
        return ()

    def validate(self, x) -> None:
        if not isinstance(x, tuple):
            raise GroupError(f"not a sparse vector: {x!r}")
        last = 0
        for entry in x:
            if not (isinstance(entry, tuple) and len(entry) == 2):
                raise GroupError(f"bad entry {entry!r} in {x!r}")
            idx, coeff = entry
            if not (isinstance(idx, int) and idx > last and isinstance(coeff, int) and coeff != 0):
                raise GroupError(f"bad entry {entry!r} in {x!r}")
            last = idx

    def multiply(self, x, y):
        acc = dict(x)
        for idx, coeff in y:
            total = acc.get(idx, 0) + coeff
            if total:
                acc[idx] = total
            else:
                acc.pop(idx, None)
        return tuple(sorted(acc.items()))

    def inverse(self, x):
        return tuple((idx, -coeff) for idx, coeff in x)

    def basis_vector(self, index: int, coeff: int = 1):
        if index < 1 or coeff == 0:
            raise GroupError(f"bad basis vector e_{index} * {coeff}")
        return ((index, coeff),)

    def ball(self, radius, coeff_bound=1):
        # Vectors with support inside 1..radius and max|coeff| <= coeff_bound;
        # size (2*coeff_bound+1)^radius, so keep radius small.
        self._check_radius(radius)
        values = range(-coeff_bound, coeff_bound + 1)
        out = []
        for combo in itertools.product(values, repeat=radius):
            out.append(tuple((i + 1, c) for i, c in enumerate(combo) if c))
        return sorted(out)

    def sample(self, count, seed):
        rng = random.Random(f"{seed}|{self.name}")
        out = []
        for _ in range(count):
            entries = []
            for idx in range(1, self.SAMPLE_WINDOW + 1):
                if rng.random() < 0.25:
                    entries.append((idx, rng.choice([-2, -1, 1, 2])))
            out.append(tuple(entries))
        return out

    def parse(self, text):
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        if not body.strip():
            return ()
        acc = {}
        for item in body.split(","):
            try:
                idx_text, coeff_text = item.split(":")
                idx, coeff = int(idx_text), int(coeff_text)
            except ValueError as exc:
                raise GroupError(f"bad sparse entry {item!r}") from exc
            if idx < 1:
                raise GroupError(f"indices start at 1, got {idx}")
            if coeff:
                acc[idx] = acc.get(idx, 0) + coeff
        return tuple(sorted((i, c) for i, c in acc.items() if c))

    def format_element(self, x):
        return "{" + ",".join(f"{i}:{c}" for i, c in x) + "}"

    def sort_key(self, x):
        return x


@dataclass(frozen=True)
class CyclicFinite(Group):
    n: int = 2

    name = "cyclic"
    is_commutative = True

    def __post_init__(self):
        if self.n < 2:
            raise GroupError(f"cyclic order must be >= 2, got {self.n}")

    def identity(self):
        return 0

    def validate(self, x) -> None:
        if not (isinstance(x, int) and 0 <= x < self.n):
            raise GroupError(f"not a residue mod {self.n}: {x!r}")

    def multiply(self, x, y):
        return (x + y) % self.n

    def inverse(self, x):
        return (-x) % self.n

    def elements(self) -> list[int]:
        return list(range(self.n))

    def ball(self, radius, coeff_bound=1):
        self._check_radius(radius)
        if radius == 0:
            return [0]
        return self.elements()

    def sample(self, count, seed):
        rng = random.Random(f"{seed}|{self.name}|{self.n}")
        return [rng.randrange(self.n) for _ in range(count)]

    def parse(self, text):
        m = re.fullmatch(r"\s*(-?\d+)(?:\s+mod\s+(\d+))?\s*", text)
        if not m:
            raise GroupError(f"bad residue literal {text!r}")
        if m.group(2) is not None and int(m.group(2)) != self.n:
            raise GroupError(f"modulus {m.group(2)} does not match group order {self.n}")
        return int(m.group(1)) % self.n

    def format_element(self, x):
        return f"{x} mod {self.n}"

    def sort_key(self, x):
        return x


@dataclass(frozen=True)
class GLFloat(Group):
    n: int = 2

    name = "gl-float"
    is_exact = False

    def __post_init__(self):
        if self.n < 1:
            raise GroupError(f"matrix size must be >= 1, got {self.n}")

    def identity(self):
        return tuple(tuple(1.0 if i == j else 0.0 for j in range(self.n)) for i in range(self.n))

    def element(self, rows) -> tuple:
        mat = tuple(tuple(float(v) for v in row) for row in rows)
        self.validate(mat)
        return mat

    def validate(self, x) -> None:
        ok = (
            isinstance(x, tuple)
            and len(x) == self.n
            and all(isinstance(r, tuple) and len(r) == self.n for r in x)
        )
        if not ok:
            raise GroupError(f"not an {self.n}x{self.n} float matrix: {x!r}")
        if abs(det_float(x)) <= GL_DET_MIN:
            raise GroupError(f"matrix is singular beyond tolerance {GL_DET_MIN}")

    def multiply(self, x, y):
        n = self.n
        cols = tuple(zip(*y))
        return tuple(
            tuple(sum(row[k] * col[k] for k in range(n)) for col in cols) for row in x
        )

    def inverse(self, x):
        inv = np.linalg.inv(np.array(x, dtype=float))
        return tuple(tuple(float(v) for v in row) for row in inv)

    def ball(self, radius, coeff_bound=1):
        raise GroupError("ball enumeration is unsupported for float matrices; use sample()")

    def sample(self, count, seed):
        rng = random.Random(f"{seed}|{self.name}|{self.n}")
        out = []
        while len(out) < count:
            rows = tuple(
                tuple(rng.uniform(-2.0, 2.0) for _ in range(self.n)) for _ in range(self.n)
            )
            if abs(det_float(rows)) > GL_DET_MIN:
                out.append(rows)
        return out

    def parse(self, text):
        import json

        try:
            rows = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GroupError(f"bad matrix literal {text!r}") from exc
        return self.element(rows)

    def format_element(self, x):
        return "[" + ",".join("[" + ",".join(repr(v) for v in row) + "]" for row in x) + "]"

    def sort_key(self, x):
        return x


def _reduce_free_word(pairs) -> tuple:
    out = []
    for label, exp in pairs:
        if exp == 0:
            continue
        if out and out[-1][0] == label:
            prev_label, prev_exp = out.pop()
            exp += prev_exp
            if exp == 0:
                continue
        out.append((label, exp))
    return tuple(out)


@dataclass(frozen=True)
class FreeWordGroup(Group):
    """Free group on generator labels; carrier for matrix elements."""

    labels: tuple = ("g",)

    name = "free-words"

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if not self.labels or len(set(self.labels)) != len(self.labels):
            raise GroupError(f"labels must be nonempty and distinct: {self.labels!r}")

    def identity(self):
        return ()

    def validate(self, x) -> None:
        if not isinstance(x, tuple):
            raise GroupError(f"not a word: {x!r}")
        prev = None
        for entry in x:
            if not (isinstance(entry, tuple) and len(entry) == 2):
                raise GroupError(f"bad syllable {entry!r}")
            label, exp = entry
            if label not in self.labels or not isinstance(exp, int) or exp == 0 or label == prev:
                raise GroupError(f"word {x!r} is not in normal form")
            prev = label
    def multiply(self, x, y):
        return _reduce_free_word(itertools.chain(x, y))

    def inverse(self, x):
        return tuple((label, -exp) for label, exp in reversed(x))

    def generator(self, label: str):
        if label not in self.labels:
            raise GroupError(f"unknown label {label!r}")
        return ((label, 1),)

    def word_length(self, x) -> int:
        return sum(abs(exp) for _, exp in x)

    def ball(self, radius, coeff_bound=0):
        # All reduced words of total syllable length <= radius; coeff_bound
        # additionally caps |exponent| per syllable when positive.
        self._check_radius(radius)
        words: list[tuple] = []

        def extend(word: list, budget: int) -> None:
            words.append(tuple(word))
            if budget <= 0:
                return
            last = word[-1][0] if word else None
            for label in self.labels:
                if label == last:
                    continue
                max_exp = budget if coeff_bound <= 0 else min(budget, coeff_bound)
                for mag in range(1, max_exp + 1):
                    for exp in (mag, -mag):
                        word.append((label, exp))
                        extend(word, budget - mag)
                        word.pop()

        extend([], radius)
        return sorted(set(words), key=self.sort_key)

    def sample(self, count, seed):
        rng = random.Random(f"{seed}|{self.name}|{'|'.join(self.labels)}")
        out = []
        for _ in range(count):
            pairs = [
                (rng.choice(self.labels), rng.choice([-2, -1, 1, 2]))
                for _ in range(rng.randint(0, 5))
            ]
            out.append(_reduce_free_word(pairs))
        return out

    def parse(self, text):
        body = text.strip()
        if body in ("", "e"):
            return ()
        pairs = []
        for token in body.split():
            if "^" in token:
                label, exp_text = token.split("^", 1)
                try:
                    exp = int(exp_text)
                except ValueError as exc:
                    raise GroupError(f"bad word token {token!r}") from exc
            else:
                label, exp = token, 1
            if label not in self.labels:
                raise GroupError(f"unknown label {label!r} in {text!r}")
            pairs.append((label, exp))
        return _reduce_free_word(pairs)

    def format_element(self, x):
        if not x:
            return "e"
        return " ".join(label if exp == 1 else f"{label}^{exp}" for label, exp in x)

    def sort_key(self, x):
        order = {label: i for i, label in enumerate(self.labels)}
        return (self.word_length(x), tuple((order[l], e) for l, e in x))


def power(group: Group, x, k: int):
    """k-th power of x (k may be negative)."""
    if k < 0:
        return power(group, group.inverse(x), -k)
    acc = group.identity()
    base = x
    while k:
        if k & 1:
            acc = group.multiply(acc, base)
        base = group.multiply(base, base)
        k >>= 1
    return acc


_NAME_RE = re.compile(r"^(?P<kind>[a-z-]+)(?::(?P<arg>\d+))?$")


def group_from_name(text: str) -> Group:
    """Resolve a group descriptor such as ``int:2``, ``heisenberg``, ``cyclic:5``."""
    m = _NAME_RE.match(text.strip().lower())
    if not m:
        raise GroupError(f"bad group descriptor {text!r}")
    kind, arg = m.group("kind"), m.group("arg")

    def need_arg() -> int:
        if arg is None:
            raise GroupError(f"group descriptor {text!r} needs a numeric parameter")
        return int(arg)

    if kind in ("int", "int-vector", "z"):
        return IntVector(need_arg())
    if kind in ("rational", "q"):
        return RationalAdditive()
    if kind == "heisenberg":
        return HeisenbergRational()
    if kind in ("freeprod", "free-prod"):
        return FreeProdZZ2()
    if kind in ("intsum", "int-sum"):
        return IntDirectSum()
    if kind == "cyclic":
        return CyclicFinite(need_arg())
    if kind in ("gl", "gl-float"):
        return GLFloat(need_arg())
    raise GroupError(f"unknown group kind {kind!r}")
