"""
Non-crossing diagrams on two rows of dots, the basis of the Temperley-Lieb
algebra of type A.

A diagram on k strings is a perfect matching of 2k dots, k on a top row
(numbered 1..k left to right) and k on a bottom row (numbered 1'..k'), that
can be drawn inside the rectangle without intersections.  Dots are totally
ordered by 1 < 2 < ... < k < 1' < 2' < ... < k'; an arrow is a matched pair
written (tail, head) with tail < head in that order.

Internally a dot is an integer code in [0, 2k): top i is i-1 and bottom i'
is k+i-1, so integer order on codes equals the total dot order.  The
matching is a flat involution ``partner`` (code -> code), which makes
partner lookup O(1); the set-of-arrows view is derived.

Planarity is *not* the bracket condition in the total order.  It is checked
on the boundary walk of the rectangle, top row left to right and then
bottom row right to left; on that circular order the matching must nest
like balanced brackets.

Concatenation stacks one diagram on top of another, traces the composite
strands through the glued middle row, and deletes closed circles, returning
their count.  Each deleted circle contributes one factor of the loop
parameter in the algebra.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    CrossingError,
    IndexOutOfRangeError,
    NotMatchingError,
    ParityViolationError,
    ParseError,
    StringMismatchError,
)

Arrow = tuple[int, int]  # (tail code, head code), tail < head


def _boundary(code: int, strings: int) -> int:
    """Position of a dot code on the rectangle's boundary walk."""
    return code if code < strings else 3 * strings - 1 - code


@dataclass(frozen=True)
class Diagram:
    """A non-crossing perfect matching on two rows of ``strings`` dots.

    Construction validates everything: matching, planarity, and the parity
    invariant (same-row arrows join dots of different parity, cross-row
    arrows dots of equal parity).  Instances are immutable and hashable.
    """

    strings: int
    partner: tuple[int, ...]

    def __post_init__(self) -> None:
        k = self.strings
        if not isinstance(k, int) or k < 1:
            raise NotMatchingError(f"strings must be a positive integer, got {k!r}")
        partner = tuple(self.partner)
        object.__setattr__(self, "partner", partner)
        if len(partner) != 2 * k:
            raise NotMatchingError(f"partner array must have length {2 * k}, got {len(partner)}")
        for d, q in enumerate(partner):
            if not 0 <= q < 2 * k:
                raise NotMatchingError(f"dot {self.dot_name(d)} is matched out of range")
            if q == d:
                raise NotMatchingError(f"dot {self.dot_name(d)} is matched to itself")
            if partner[q] != d:
                raise NotMatchingError(
                    f"matching is not an involution at dot {self.dot_name(d)}"
                )

        # Planarity: balanced brackets along the boundary walk.
        order = sorted(range(2 * k), key=lambda d: _boundary(d, k))
        stack: list[int] = []
        for d in order:
            b = _boundary(d, k)
            if _boundary(partner[d], k) > b:
                stack.append(d)
            else:
                top = stack.pop()
                if top != partner[d]:
                    first = self._arrow_of(top)
                    second = self._arrow_of(d)
                    raise CrossingError(
                        f"arrows {self.arrow_name(first)} and {self.arrow_name(second)} cross",
                        first,
                        second,
                    )

        # Parity invariant.  For valid planar matchings this is implied by
        # the crossing check, so it only guards encoding mistakes.
        for d, q in enumerate(partner):
            if d > q:
                continue
            ri, rj = self.row_index(d)[1], self.row_index(q)[1]
            same_row = (d < k) == (q < k)
            if same_row and (ri - rj) % 2 == 0:
                raise ParityViolationError(
                    f"same-row arrow {self.arrow_name((d, q))} joins dots of equal parity"
                )
            if not same_row and (ri - rj) % 2 == 1:
                raise ParityViolationError(
                    f"cross-row arrow {self.arrow_name((d, q))} joins dots of opposite parity"
                )

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def identity(cls, strings: int) -> Diagram:
        """All strands vertical."""
        if strings < 1:
            raise IndexOutOfRangeError(f"strings must be >= 1, got {strings}")
        partner = tuple(range(strings, 2 * strings)) + tuple(range(strings))
        return cls(strings, partner)

    @classmethod
    def generator(cls, strings: int, i: int) -> Diagram:
        """The cup-cap diagram joining i with i+1 on both rows."""
        if not 1 <= i <= strings - 1:
            raise IndexOutOfRangeError(
                f"generator index must satisfy 1 <= i <= {strings - 1}, got {i}"
            )
        partner = list(range(strings, 2 * strings)) + list(range(strings))
        k = strings
        partner[i - 1], partner[i] = i, i - 1
        partner[k + i - 1], partner[k + i] = k + i, k + i - 1
        return cls(strings, tuple(partner))

    @classmethod
    def from_arrows(cls, strings: int, arrows: Iterable[Arrow]) -> Diagram:
        """Build and validate a diagram from dot-code pairs."""
        partner = [-1] * (2 * strings)
        for x, y in arrows:
            for d in (x, y):
                if not 0 <= d < 2 * strings:
                    raise NotMatchingError(f"dot code {d} out of range for {strings} strings")
                if partner[d] != -1:
                    raise NotMatchingError(f"dot {_dot_name(d, strings)} used twice")
            partner[x], partner[y] = y, x
        for d, q in enumerate(partner):
            if q == -1:
                raise NotMatchingError(f"dot {_dot_name(d, strings)} is unmatched")
        return cls(strings, tuple(partner))

    # ------------------------------------------------------------------
    # views

    def arrows(self) -> tuple[Arrow, ...]:
        """All arrows as (tail, head) code pairs, sorted by tail."""
        return tuple(
            (d, q) for d, q in enumerate(self.partner) if d < q
        )

    def row_index(self, code: int) -> tuple[str, int]:
        """Decode a dot code into ("top"|"bottom", 1-based index)."""
        k = self.strings
        return ("top", code + 1) if code < k else ("bottom", code - k + 1)

    def dot_name(self, code: int) -> str:
        return _dot_name(code, self.strings)

    def arrow_name(self, arrow: Arrow) -> str:
        return f"{self.dot_name(arrow[0])}-{self.dot_name(arrow[1])}"

    def _arrow_of(self, code: int) -> Arrow:
        q = self.partner[code]
        return (code, q) if code < q else (q, code)

    def components(self) -> Components:
        """Split the arrows into the four structural families."""
        k = self.strings
        top_arcs: set[Arrow] = set()
        bottom_arcs: set[Arrow] = set()
        positive: set[Arrow] = set()
        vertical_or_negative: set[Arrow] = set()
        for x, y in self.arrows():
            if y < k:
                top_arcs.add((x, y))
            elif x >= k:
                bottom_arcs.add((x, y))
            elif (y - k) > x:
                positive.add((x, y))
            else:
                vertical_or_negative.add((x, y))
        starts = frozenset(x + 1 for x, _ in top_arcs) | frozenset(x + 1 for x, _ in positive)
        ends = frozenset(y - k for _, y in bottom_arcs) | frozenset(y - k for _, y in positive)
        return Components(
            top_arcs=frozenset(top_arcs),
            bottom_arcs=frozenset(bottom_arcs),
            positive=frozenset(positive),
            vertical_or_negative=frozenset(vertical_or_negative),
            starts=starts,
            ends=ends,
            size=len(top_arcs) + len(positive),
        )

    # ------------------------------------------------------------------
    # symmetries

    def flip_vertical(self) -> Diagram:
        """Swap the two rows; an involution."""
        k = self.strings

        def swap(d: int) -> int:
            return d + k if d < k else d - k

        partner = [0] * (2 * k)
        for d, q in enumerate(self.partner):
            partner[swap(d)] = swap(q)
        return Diagram(k, tuple(partner))

    def flip_horizontal(self) -> Diagram:
        """Mirror left to right; an involution realizing i -> k-i on generators."""
        k = self.strings

        def mirror(d: int) -> int:
            return k - 1 - d if d < k else 3 * k - 1 - d

        partner = [0] * (2 * k)
        for d, q in enumerate(self.partner):
            partner[mirror(d)] = mirror(q)
        return Diagram(k, tuple(partner))

    # ------------------------------------------------------------------
    # serialization

    def to_text(self) -> str:
        body = ",".join(self.arrow_name(a) for a in self.arrows())
        return f"strings={self.strings};{body}"

    def to_json(self) -> dict:
        """Partner-array encoding with 1-based dots, top 1..k then bottom 1..k."""
        return {"strings": self.strings, "partner": [q + 1 for q in self.partner]}

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Components:
    """The structural pieces of a diagram.

    ``top_arcs`` and ``bottom_arcs`` are the same-row arrows; ``positive``
    the top-to-bottom arrows heading strictly right of their tail's shadow;
    ``vertical_or_negative`` the remaining cross arrows.  ``starts`` are the
    1-based top indices that tail a rightward arrow and ``ends`` the indices
    j such that bottom dot (j+1)' heads a leftward arrow; read in decreasing
    order these are exactly the block starts and ends of the FC element the
    diagram corresponds to.  ``size`` counts top arcs plus positive arrows.
    """

    top_arcs: frozenset[Arrow]
    bottom_arcs: frozenset[Arrow]
    positive: frozenset[Arrow]
    vertical_or_negative: frozenset[Arrow]
    starts: frozenset[int]
    ends: frozenset[int]
    size: int


def _dot_name(code: int, strings: int) -> str:
    return str(code + 1) if code < strings else f"{code - strings + 1}'"


# ----------------------------------------------------------------------
# concatenation


def concatenate(upper: Diagram, lower: Diagram) -> tuple[Diagram, int]:
    """Stack ``lower`` below ``upper``; return the result and the circle count.

    The bottom row of ``upper`` is glued to the top row of ``lower``.  Each
    boundary dot's strand is traced through the glue; middle cycles never
    reaching the boundary are the deleted circles.
    """
    if upper.strings != lower.strings:
        raise StringMismatchError(
            f"cannot concatenate diagrams on {upper.strings} and {lower.strings} strings"
        )
    k = upper.strings
    up, lo = upper.partner, lower.partner
    result = [-1] * (2 * k)
    seen_mid = [False] * k

    def trace(in_upper: bool, cur: int) -> int:
        """Follow a strand to its terminal boundary dot (result coordinates)."""
        while True:
            if in_upper:
                nxt = up[cur]
                if nxt < k:
                    return nxt  # top boundary
                seen_mid[nxt - k] = True
                in_upper, cur = False, nxt - k
            else:
                nxt = lo[cur]
                if nxt >= k:
                    return nxt  # bottom boundary
                seen_mid[nxt] = True
                in_upper, cur = True, nxt + k

    for d in range(2 * k):
        if result[d] != -1:
            continue
        end = trace(d < k, d)
        result[d], result[end] = end, d

    loops = 0
    for m in range(k):
        if seen_mid[m]:
            continue
        loops += 1
        cur = m
        while not seen_mid[cur]:
            seen_mid[cur] = True
            via_lower = lo[cur]  # arc in the lower diagram's top row
            seen_mid[via_lower] = True
            cur = up[via_lower + k] - k  # arc in the upper diagram's bottom row

    return Diagram(k, tuple(result)), loops


# ----------------------------------------------------------------------
# enumeration


def enumerate_diagrams(strings: int) -> Iterator[Diagram]:
    """Yield every non-crossing diagram on the given number of strings.

    Generates balanced matchings along the boundary walk, so there are
    Catalan-many (C_strings) and the order is deterministic.
    """
    if strings < 1:
        raise IndexOutOfRangeError(f"strings must be >= 1, got {strings}")
    k = strings
    m = 2 * k
    seq = [-1] * m

    # boundary position -> dot code
    code_of = [0] * m
    for d in range(m):
        code_of[_boundary(d, k)] = d

    def fill(lo_pos: int, hi_pos: int) -> Iterator[None]:
        if lo_pos >= hi_pos:
            yield None
            return
        for mid in range(lo_pos + 1, hi_pos, 2):
            seq[lo_pos], seq[mid] = mid, lo_pos
            for _ in fill(lo_pos + 1, mid):
                yield from fill(mid + 1, hi_pos)

    for _ in fill(0, m):
        partner = [0] * m
        for b in range(m):
            partner[code_of[b]] = code_of[seq[b]]
        yield Diagram(k, tuple(partner))


# ----------------------------------------------------------------------
# text and JSON input

_DIAGRAM_HEAD_RE = re.compile(r"^strings=(\d+);(.*)$")
_DOT_RE = re.compile(r"^(\d+)('?)$")


def parse_dot(token: str, strings: int) -> int:
    m = _DOT_RE.match(token)
    if not m:
        raise ParseError(f"not a dot: {token!r}")
    idx = int(m.group(1))
    if not 1 <= idx <= strings:
        raise ParseError(f"dot index {idx} out of range for {strings} strings")
    return idx - 1 if not m.group(2) else strings + idx - 1


def parse_diagram(text: str) -> Diagram:
    """Parse the text form ``strings=2;1-2,1'-2'``."""
    m = _DIAGRAM_HEAD_RE.match(text.strip())
    if not m:
        raise ParseError(f"not a diagram text form: {text!r}")
    strings = int(m.group(1))
    arrows = []
    body = m.group(2)
    if not body:
        raise ParseError("diagram text form has no arrows")
    for chunk in body.split(","):
        halves = chunk.split("-")
        if len(halves) != 2:
            raise ParseError(f"not an arrow: {chunk!r}")
        x, y = (parse_dot(h.strip(), strings) for h in halves)
        if x > y:
            x, y = y, x
        arrows.append((x, y))
    return Diagram.from_arrows(strings, arrows)


def diagram_from_json(obj: dict) -> Diagram:
    """Inverse of :meth:`Diagram.to_json`."""
    try:
        strings = obj["strings"]
        partner = tuple(int(q) - 1 for q in obj["partner"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"not a diagram JSON object: {obj!r}") from exc
    return Diagram(strings, partner)
