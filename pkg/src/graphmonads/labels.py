"""Structured vertex labels.

Iterating the functors T and S, and forming products, produces vertices whose
names are built from the names of the original vertices.  Instead of renaming
through lookup tables every vertex carries a small immutable term:

* ``Atom("a")`` -- an original vertex;
* ``Tagged(x, i)`` -- the vertex ``x_i`` of ``T(A)`` (``i = 0`` mirrors ``x``,
  ``i = 1`` is the new leaf);
* ``SetLabel({x})`` / ``SetLabel({x, y})`` -- vertices of ``S(G)``;
* ``PairLabel(a, b)`` -- vertices of a product graph.

Labels are totally ordered (Atom < Tagged < SetLabel < PairLabel, then
recursively) and render to a canonical text form that :func:`parse_label`
reads back::

    a        Atom
    a~1      Tagged(Atom("a"), 1)
    {a,b}    SetLabel
    (a,b)    PairLabel
"""

from __future__ import annotations

import functools
import re
from typing import Iterable

from .errors import LabelError

RESERVED = frozenset("~{}(),")
_TOKEN_RE = re.compile(r"[^\s~{}(),]+")


@functools.total_ordering
class VertexLabel:
    __slots__ = ("_key", "_hash")

    def _set_key(self, key):
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    @property
    def sort_key(self):
        return self._key

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, VertexLabel):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __lt__(self, other):
        if not isinstance(other, VertexLabel):
            return NotImplemented
        return self._key < other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"<{type(self).__name__} {self}>"

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")


class Atom(VertexLabel):
    __slots__ = ("token",)

    def __init__(self, token: str):
        if not isinstance(token, str) or not _TOKEN_RE.fullmatch(token):
            raise LabelError(
                f"invalid atom token {token!r}: must be nonempty, without "
                f"whitespace or any of {''.join(sorted(RESERVED))}"
            )
        object.__setattr__(self, "token", token)
        self._set_key((0, token))

    def __reduce__(self):
        return (Atom, (self.token,))

    def __str__(self):
        return self.token


class Tagged(VertexLabel):
    __slots__ = ("base", "bit")

    def __init__(self, base: VertexLabel, bit: int):
        if not isinstance(base, VertexLabel):
            raise LabelError(f"Tagged base must be a label, got {base!r}")
        if bit not in (0, 1):
            raise LabelError(f"Tagged bit must be 0 or 1, got {bit!r}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "bit", int(bit))
        self._set_key((1, base._key, int(bit)))

    def __reduce__(self):
        return (Tagged, (self.base, self.bit))

    def __str__(self):
        return f"{self.base}~{self.bit}"


class SetLabel(VertexLabel):
    """A one- or two-element set of labels."""

    __slots__ = ("elems", "items")

    def __init__(self, elems: Iterable[VertexLabel]):
        fs = frozenset(elems)
        if not 1 <= len(fs) <= 2:
            raise LabelError(f"SetLabel needs 1 or 2 distinct elements, got {len(fs)}")
        for e in fs:
            if not isinstance(e, VertexLabel):
                raise LabelError(f"SetLabel element must be a label, got {e!r}")
        items = tuple(sorted(fs))
        object.__setattr__(self, "elems", fs)
        object.__setattr__(self, "items", items)
        self._set_key((2, tuple(e._key for e in items)))

    def __reduce__(self):
        return (SetLabel, (self.items,))

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __str__(self):
        return "{" + ",".join(str(e) for e in self.items) + "}"


class PairLabel(VertexLabel):
    __slots__ = ("left", "right")

    def __init__(self, left: VertexLabel, right: VertexLabel):
        if not isinstance(left, VertexLabel) or not isinstance(right, VertexLabel):
            raise LabelError("PairLabel components must be labels")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        self._set_key((3, left._key, right._key))

    def __reduce__(self):
        return (PairLabel, (self.left, self.right))

    def __str__(self):
        return f"({self.left},{self.right})"


def as_label(x) -> VertexLabel:
    """Coerce a label or its canonical text into a label."""
    if isinstance(x, VertexLabel):
        return x
    if isinstance(x, str):
        return parse_label(x)
    raise LabelError(f"cannot interpret {x!r} as a vertex label")


def parse_label(text: str) -> VertexLabel:
    parser = _LabelParser(text)
    label = parser.label()
    if parser.pos != len(text):
        raise LabelError(f"trailing characters in label {text!r} at offset {parser.pos}")
    return label


class _LabelParser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def _peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, ch):
        if self._peek() != ch:
            raise LabelError(f"expected {ch!r} at offset {self.pos} in {self.text!r}")
        self.pos += 1

    def label(self):
        ch = self._peek()
        if ch == "{":
            self.pos += 1
            elems = [self.label()]
            while self._peek() == ",":
                self.pos += 1
                elems.append(self.label())
            self._expect("}")
            if len(set(elems)) != len(elems):
                raise LabelError(f"repeated element in set label {self.text!r}")
            out = SetLabel(elems)
        elif ch == "(":
            self.pos += 1
            left = self.label()
            self._expect(",")
            right = self.label()
            self._expect(")")
            out = PairLabel(left, right)
        else:
            m = _TOKEN_RE.match(self.text, self.pos)
            if m is None:
                raise LabelError(f"expected a label at offset {self.pos} in {self.text!r}")
            self.pos = m.end()
            out = Atom(m.group())
        while self._peek() == "~":
            self.pos += 1
            bit = self._peek()
            if bit not in ("0", "1"):
                raise LabelError(f"tag bit must be 0 or 1 in {self.text!r}")
            self.pos += 1
            out = Tagged(out, int(bit))
        return out
