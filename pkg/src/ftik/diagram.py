"""Oriented framed link diagrams in planar-diagram (PD) form.

A crossing is a 4-tuple of arc identifiers listed counterclockwise starting
at the incoming under-arc, the dominant convention in published link tables.
Orientation is carried by an explicit record of which over-slot (1 or 3) the
over-strand enters; for table codes this is inferred from the under-passage
directions.  Components that have no crossings at all cannot be expressed in
PD form and are kept as explicit unknot markers.

Diagrams are immutable values and every operation here is a pure function.
Planarity of the code is deliberately not verified; non-planar inputs yield
formally defined but geometrically meaningless results.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DiagramError

Crossing = tuple[int, int, int, int]


def _pairs(d: dict[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(d.items()))


class _UnionFind:
    """Union-find over arc ids that also counts joins, so a class whose join
    count equals its size is known to have closed up into a free loop."""

    def __init__(self):
        self.parent: dict[int, int] = {}
        self.size: dict[int, int] = {}
        self.joins: dict[int, int] = {}

    def find(self, x: int) -> int:
        self.parent.setdefault(x, x)
        self.size.setdefault(x, 1)
        self.joins.setdefault(x, 0)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def join(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            self.joins[rx] += 1
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.joins[rx] += self.joins[ry] + 1

    def is_loop(self, x: int) -> bool:
        r = self.find(x)
        return self.joins[r] == self.size[r]


@dataclass(frozen=True)
class LinkDiagram:
    """An oriented link diagram with per-component integer framings.

    ``over_in`` holds, per crossing, the slot (1 or 3) at which the
    over-strand enters.  ``arc_component`` maps every arc to its component
    index; ``marker_components`` lists the indices of zero-crossing unknot
    components, which own no arcs.
    """

    crossings: tuple[Crossing, ...]
    over_in: tuple[int, ...]
    arc_component: tuple[tuple[int, int], ...]
    components: int
    framings: tuple[int, ...]
    marker_components: frozenset[int] = field(default_factory=frozenset)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_pd(
        cls,
        crossings: Iterable[Sequence[int]],
        framings: Sequence[int] | None = None,
        unknotted_components: int = 0,
    ) -> "LinkDiagram":
        """Build a diagram from bare PD tuples, inferring orientations.

        Marker components are appended after the PD-borne components, which
        are numbered in order of their smallest arc identifier.
        """
        crossings = tuple(tuple(c) for c in crossings)
        violations = pd_violations(crossings)
        if violations:
            raise DiagramError(violations)
        over_in = _infer_over_in(crossings)
        return cls.assemble(crossings, over_in, framings, unknotted_components)

    @classmethod
    def assemble(
        cls,
        crossings: tuple[Crossing, ...],
        over_in: tuple[int, ...],
        framings: Sequence[int] | None = None,
        unknotted_components: int = 0,
    ) -> "LinkDiagram":
        """Build a diagram from crossings with known over-strand directions."""
        succ = _successors(crossings, over_in)
        cycles = _cycles(succ)
        arc_comp: dict[int, int] = {}
        for idx, cycle in enumerate(cycles):
            for arc in cycle:
                arc_comp[arc] = idx
        n_pd = len(cycles)
        total = n_pd + unknotted_components
        markers = frozenset(range(n_pd, total))
        if framings is None:
            framings = (0,) * total
        framings = tuple(int(f) for f in framings)
        if len(framings) != total:
            raise DiagramError(
                f"expected {total} framings, got {len(framings)}"
            )
        return cls(crossings, tuple(over_in), _pairs(arc_comp), total, framings, markers)

    # -- basic accessors ----------------------------------------------------

    @property
    def arc_to_component(self) -> dict[int, int]:
        return dict(self.arc_component)

    @property
    def unknotted_components(self) -> int:
        return len(self.marker_components)

    def is_empty(self) -> bool:
        return self.components == 0

    def component_arcs(self, comp: int) -> list[int]:
        return [a for a, c in self.arc_component if c == comp]

    def successors(self) -> dict[int, int]:
        return _successors(self.crossings, self.over_in)

    def crossing_sign(self, i: int) -> int:
        """+1 for a right-handed crossing, -1 for a left-handed one.

        With slots listed counterclockwise from the incoming under-arc, the
        crossing is positive exactly when the over-strand enters at slot 3.
        """
        return 1 if self.over_in[i] == 3 else -1

    def writhe(self) -> int:
        return sum(self.crossing_sign(i) for i in range(len(self.crossings)))

    def self_writhe(self, comp: int) -> int:
        comp_of = self.arc_to_component
        total = 0
        for i, (a, b, _c, _d) in enumerate(self.crossings):
            if comp_of[a] == comp and comp_of[b] == comp:
                total += self.crossing_sign(i)
        return total

    # -- validation ---------------------------------------------------------

    def validate(self) -> list[str]:
        """Check all structural invariants; returns violations, never raises."""
        out = pd_violations(self.crossings)
        comp_of = self.arc_to_component
        succ = _successors(self.crossings, self.over_in)
        try:
            cycles = _cycles(succ)
        except DiagramError as exc:
            return out + exc.violations
        pd_comps = {c for c in range(self.components) if c not in self.marker_components}
        if len(cycles) != len(pd_comps):
            out.append(
                f"arc successor relation has {len(cycles)} cycles but diagram "
                f"declares {len(pd_comps)} crossing-bearing components"
            )
        seen = sorted({c for _a, c in self.arc_component} | set(self.marker_components))
        if seen != list(range(self.components)):
            out.append("component indices are not contiguous from 0")
        for arc in succ:
            if arc not in comp_of:
                out.append(f"arc {arc} has no component assignment")
        for cycle in cycles:
            comps = {comp_of.get(a) for a in cycle}
            if len(comps) != 1:
                out.append(f"arcs {sorted(cycle)} mix component indices {comps}")
        if len(self.framings) != self.components:
            out.append(
                f"{len(self.framings)} framings for {self.components} components"
            )
        if len(self.over_in) != len(self.crossings):
            out.append("over_in length does not match crossing count")
        for i, s in enumerate(self.over_in):
            if s not in (1, 3):
                out.append(f"crossing {i}: over-strand entry slot must be 1 or 3")
        return out

    # -- linking data -------------------------------------------------------

    def linking_matrix(self) -> list[list[int]]:
        """Symmetric matrix with linking numbers off the diagonal and
        framings on it.  An odd signed crossing count between two
        components means the diagram is malformed."""
        n = self.components
        sums = [[0] * n for _ in range(n)]
        comp_of = self.arc_to_component
        for i, (a, b, _c, _d) in enumerate(self.crossings):
            p, q = comp_of[a], comp_of[b]
            if p != q:
                s = self.crossing_sign(i)
                sums[p][q] += s
                sums[q][p] += s
        out = [[0] * n for _ in range(n)]
        for p in range(n):
            out[p][p] = self.framings[p]
            for q in range(n):
                if p == q:
                    continue
                if sums[p][q] % 2 != 0:
                    raise DiagramError(
                        f"odd signed crossing sum between components {p} and {q}"
                    )
                out[p][q] = sums[p][q] // 2
        return out

    # -- canonical key ------------------------------------------------------

    def canonical_key(self, include_framings: bool = False) -> tuple:
        """A relabelling-invariant encoding used as a cache key.

        Arcs are renumbered by walking each component from its smallest
        original arc id; the crossing list is then sorted.
        """
        succ = self.successors()
        comp_of = self.arc_to_component
        by_comp: dict[int, list[int]] = {}
        for a, c in self.arc_component:
            by_comp.setdefault(c, []).append(a)
        relabel: dict[int, int] = {}
        nxt = 1
        for comp in sorted(by_comp):
            start = min(by_comp[comp])
            arc = start
            while True:
                relabel[arc] = nxt
                nxt += 1
                arc = succ[arc]
                if arc == start:
                    break
        body = tuple(
            sorted(
                (tuple(relabel[x] for x in cr), oi)
                for cr, oi in zip(self.crossings, self.over_in)
            )
        )
        key = (body, self.components, len(self.marker_components))
        if include_framings:
            key = key + (self.framings, tuple(sorted(self.marker_components)))
        return key

    # -- serialization ------------------------------------------------------

    def to_json_dict(self, name: str) -> dict:
        """Emit the link-file schema.  Marker components must occupy the
        trailing component indices, as the schema only stores their count."""
        pd_comps = self.components - len(self.marker_components)
        if self.marker_components != frozenset(range(pd_comps, self.components)):
            raise DiagramError("cannot serialize: unknotted components are not trailing")
        return {
            "name": name,
            "components": self.components,
            "framings": list(self.framings),
            "crossings": [list(c) for c in self.crossings],
            "unknotted_components": len(self.marker_components),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> tuple[str, "LinkDiagram"]:
        required = {"name", "components", "framings", "crossings", "unknotted_components"}
        missing = required - set(data)
        if missing:
            raise DiagramError(f"link file missing keys: {sorted(missing)}")
        d = cls.from_pd(
            data["crossings"],
            framings=data["framings"],
            unknotted_components=data["unknotted_components"],
        )
        if d.components != data["components"]:
            raise DiagramError(
                f"link file declares {data['components']} components, "
                f"diagram has {d.components}"
            )
        return data["name"], d

    def to_json(self, name: str) -> str:
        return json.dumps(self.to_json_dict(name), indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# PD structure checks and orientation inference
# ---------------------------------------------------------------------------


def pd_violations(crossings: Sequence[Sequence[int]]) -> list[str]:
    """Structural checks on raw PD tuples; returns human-readable violations."""
    out: list[str] = []
    counts: dict[int, int] = {}
    for i, c in enumerate(crossings):
        if len(c) != 4:
            out.append(f"crossing {i}: expected 4 arcs, got {len(c)}")
            continue
        for arc in c:
            if not isinstance(arc, int) or arc < 1:
                out.append(f"crossing {i}: arc identifiers must be positive integers")
                break
        for arc in c:
            counts[arc] = counts.get(arc, 0) + 1
    for arc, n in sorted(counts.items()):
        if n != 2:
            out.append(f"arc multiplicity: arc {arc} appears {n} times, expected 2")
    if out:
        return out
    try:
        _infer_over_in(tuple(tuple(c) for c in crossings))
    except DiagramError as exc:
        out.extend(exc.violations)
    return out


def _infer_over_in(crossings: tuple[Crossing, ...]) -> tuple[int, ...]:
    """Infer, per crossing, which over-slot the over-strand enters.

    The under-passages fix the orientation of most arcs; the rest is
    propagated through the constraint that each arc is incoming at exactly
    one of its two appearances.  Components that only ever pass over are
    orientation-ambiguous and get a fixed arbitrary choice, which cannot
    affect any invariant of an algebraically split link.
    """
    appearances: dict[int, list[tuple[int, int]]] = {}
    for ci, cr in enumerate(crossings):
        for slot, arc in enumerate(cr):
            appearances.setdefault(arc, []).append((ci, slot))
    incoming: dict[tuple[int, int], bool] = {}

    def set_status(app: tuple[int, int], value: bool, queue: list) -> None:
        if app in incoming:
            if incoming[app] != value:
                raise DiagramError(
                    [f"crossing {app[0]}: inconsistent strand orientation"]
                )
            return
        incoming[app] = value
        queue.append(app)

    queue: list[tuple[int, int]] = []
    for ci, cr in enumerate(crossings):
        set_status((ci, 0), True, queue)
        set_status((ci, 2), False, queue)
    while True:
        while queue:
            ci, slot = queue.pop()
            value = incoming[(ci, slot)]
            arc = crossings[ci][slot]
            for other in appearances[arc]:
                if other != (ci, slot):
                    set_status(other, not value, queue)
            if slot in (1, 3):
                mate = 3 if slot == 1 else 1
                set_status((ci, mate), not value, queue)
        unresolved = [
            ci for ci in range(len(crossings)) if (ci, 1) not in incoming
        ]
        if not unresolved:
            break
        # Orientation-ambiguous strand: fix slot 3 as the entry point.
        set_status((unresolved[0], 3), True, queue)
    return tuple(1 if incoming[(ci, 1)] else 3 for ci in range(len(crossings)))


def _successors(crossings: tuple[Crossing, ...], over_in: tuple[int, ...]) -> dict[int, int]:
    succ: dict[int, int] = {}
    for cr, oi in zip(crossings, over_in):
        a, b, c, d = cr
        succ[a] = c
        if oi == 1:
            succ[b] = d
        else:
            succ[d] = b
    return succ


def _cycles(succ: dict[int, int]) -> list[list[int]]:
    """Decompose the successor relation into cycles, ordered by smallest arc."""
    seen: set[int] = set()
    cycles: list[list[int]] = []
    for start in sorted(succ):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        arc = succ.get(start)
        while arc is not None and arc != start:
            if arc in seen:
                raise DiagramError(
                    [f"arc successor relation is not a disjoint union of cycles (near arc {arc})"]
                )
            cycle.append(arc)
            seen.add(arc)
            arc = succ.get(arc)
        if arc is None:
            raise DiagramError([f"arc {cycle[-1]} has no successor"])
        cycles.append(cycle)
    return cycles


# ---------------------------------------------------------------------------
# Diagram operations
# ---------------------------------------------------------------------------


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Swap over- and under-strand at every crossing.  Framings are kept;
    surgery presentations negate them separately."""
    crossings = []
    over_in = []
    for cr, oi in zip(d.crossings, d.over_in):
        a, b, c, e = cr
        if oi == 1:
            crossings.append((b, c, e, a))
            over_in.append(3)
        else:
            crossings.append((e, a, b, c))
            over_in.append(1)
    return LinkDiagram(
        tuple(crossings),
        tuple(over_in),
        d.arc_component,
        d.components,
        d.framings,
        d.marker_components,
    )


def switch_crossing(d: LinkDiagram, i: int) -> LinkDiagram:
    """Exchange over- and under-strand at one crossing (a skein move)."""
    crossings = list(d.crossings)
    over_in = list(d.over_in)
    a, b, c, e = crossings[i]
    if over_in[i] == 1:
        crossings[i] = (b, c, e, a)
        over_in[i] = 3
    else:
        crossings[i] = (e, a, b, c)
        over_in[i] = 1
    return LinkDiagram(
        tuple(crossings),
        tuple(over_in),
        d.arc_component,
        d.components,
        d.framings,
        d.marker_components,
    )


def smooth_crossing(d: LinkDiagram, i: int) -> LinkDiagram:
    """Orientation-respecting smoothing of one crossing.

    Component structure is rebuilt from scratch since the smoothing can
    merge two components or split one; framings are reset to zero (the
    operation is only meaningful inside skein recursions).
    """
    a, b, c, e = d.crossings[i]
    if d.over_in[i] == 1:
        o_in, o_out = b, e
    else:
        o_in, o_out = e, b
    uf = _UnionFind()
    uf.join(a, o_out)
    uf.join(o_in, c)
    remaining = [
        (tuple(uf.find(x) for x in cr), oi)
        for j, (cr, oi) in enumerate(zip(d.crossings, d.over_in))
        if j != i
    ]
    used = {x for cr, _oi in remaining for x in cr}
    free_loops = 0
    for rep in {uf.find(a), uf.find(o_in)}:
        if uf.is_loop(rep) and rep not in used:
            free_loops += 1
    crossings = tuple(cr for cr, _oi in remaining)
    over_in = tuple(oi for _cr, oi in remaining)
    return LinkDiagram.assemble(
        crossings, over_in, None, d.unknotted_components + free_loops
    )


def sublink(d: LinkDiagram, keep: Iterable[int]) -> LinkDiagram:
    """Restrict the diagram to a subset of components.

    Crossings between two kept strands are preserved; where a kept strand
    passes through a crossing with a removed strand, its two arcs are fused
    and the crossing disappears.  Component indices keep their original
    relative order and framings are restricted accordingly.
    """
    keep = frozenset(keep)
    bad = keep - set(range(d.components))
    if bad:
        raise DiagramError(f"unknown component indices {sorted(bad)}")
    comp_of = d.arc_to_component
    uf = _UnionFind()
    kept: list[tuple[Crossing, int]] = []
    for cr, oi in zip(d.crossings, d.over_in):
        a, b, c, e = cr
        under_kept = comp_of[a] in keep
        over_kept = comp_of[b] in keep
        if under_kept and over_kept:
            kept.append((cr, oi))
        elif under_kept:
            uf.join(a, c)
        elif over_kept:
            uf.join(b, e)
    crossings = tuple(tuple(uf.find(x) for x in cr) for cr, _oi in kept)
    over_in = tuple(oi for _cr, oi in kept)
    used = {x for cr in crossings for x in cr}

    new_index: dict[int, int] = {}
    markers: set[int] = set()
    arc_comp: dict[int, int] = {}
    framings: list[int] = []
    for comp in sorted(keep):
        idx = len(framings)
        new_index[comp] = idx
        framings.append(d.framings[comp])
        if comp in d.marker_components:
            markers.add(idx)
            continue
        arcs = {uf.find(a) for a in d.component_arcs(comp)}
        live = arcs & used
        if live:
            for a in live:
                arc_comp[a] = idx
        else:
            # Every crossing on this component vanished; it is now a bare loop.
            markers.add(idx)
    return LinkDiagram(
        crossings,
        over_in,
        _pairs(arc_comp),
        len(framings),
        tuple(framings),
        frozenset(markers),
    )


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    """Place two diagrams side by side, reindexing arcs and components."""
    offset = max((x for cr in d1.crossings for x in cr), default=0)
    shift = d1.components
    crossings = d1.crossings + tuple(
        tuple(x + offset for x in cr) for cr in d2.crossings
    )
    arc_comp = dict(d1.arc_component)
    for a, c in d2.arc_component:
        arc_comp[a + offset] = c + shift
    markers = frozenset(d1.marker_components) | frozenset(
        c + shift for c in d2.marker_components
    )
    return LinkDiagram(
        crossings,
        d1.over_in + d2.over_in,
        _pairs(arc_comp),
        d1.components + d2.components,
        d1.framings + d2.framings,
        markers,
    )


# ---------------------------------------------------------------------------
# Parallel cables
# ---------------------------------------------------------------------------


def parallel(d: LinkDiagram, m: int) -> LinkDiagram:
    """The 0-framed m-parallel: blackboard m-cable plus compensating twists.

    Each crossing becomes an m-by-m grid of crossings; afterwards, for every
    component with self-writhe w, -w full twists are spliced into its bundle
    so that parallel copies of one component have pairwise linking number
    zero.  Copy j of component xi receives component index ``xi * m + j`` and
    inherits the framing of xi.
    """
    if m < 1:
        raise ValueError("parallel multiplicity must be a positive integer")
    comp_of = d.arc_to_component

    next_arc = max((x for cr in d.crossings for x in cr), default=0) + 1

    def fresh() -> int:
        nonlocal next_arc
        next_arc += 1
        return next_arc - 1

    copies: dict[int, list[int]] = {}
    for a in comp_of:
        copies[a] = [fresh() for _ in range(m)]

    arc_comp: dict[int, int] = {}
    for a, comp in comp_of.items():
        for j in range(m):
            arc_comp[copies[a][j]] = comp * m + j

    crossings: list[Crossing] = []
    over_in: list[int] = []
    for cr, oi in zip(d.crossings, d.over_in):
        a, b, c, e = cr
        # Vertical bundle (under-strand, heading north): copy j at x-position j.
        vert = [[None] * (m + 1) for _ in range(m)]
        for i in range(m):
            vert[i][0] = copies[a][i]
            vert[i][m] = copies[c][i]
            for k in range(1, m):
                vert[i][k] = fresh()
                arc_comp[vert[i][k]] = comp_of[a] * m + i
        # Horizontal bundle: copy placement depends on travel direction.
        horiz = [[None] * (m + 1) for _ in range(m)]
        if oi == 3:
            # Over-strand enters at slot 3 (west), heading east; its left
            # side is north, so copy j sits at height m - 1 - j.
            copy_at = [m - 1 - k for k in range(m)]
            for k in range(m):
                j = copy_at[k]
                horiz[k][0] = copies[e][j]
                horiz[k][m] = copies[b][j]
        else:
            # Enters at slot 1 (east), heading west; left side is south.
            copy_at = list(range(m))
            for k in range(m):
                j = copy_at[k]
                horiz[k][m] = copies[b][j]
                horiz[k][0] = copies[e][j]
        for k in range(m):
            j = copy_at[k]
            for l in range(1, m):
                horiz[k][l] = fresh()
                arc_comp[horiz[k][l]] = comp_of[b] * m + j
        for i in range(m):
            for k in range(m):
                crossings.append(
                    (vert[i][k], horiz[k][i + 1], vert[i][k + 1], horiz[k][i])
                )
                over_in.append(oi)

    # Splice compensating twists per component bundle.
    grid_crossing_count = len(crossings)
    if m > 1:
        for comp in range(d.components):
            if comp in d.marker_components:
                continue
            w = d.self_writhe(comp)
            if w == 0:
                continue
            anchor = min(d.component_arcs(comp))
            cur = [(copies[anchor][j], comp * m + j) for j in range(m)]
            word: list[int] = []
            for _ in range(abs(w)):
                word.extend(list(range(m - 1)) * m)
            sign = -1 if w > 0 else 1
            for p in word:
                x, xc = cur[p]
                y, yc = cur[p + 1]
                xo, yo = fresh(), fresh()
                if sign > 0:
                    crossings.append((y, yo, xo, x))
                    over_in.append(3)
                else:
                    crossings.append((x, y, yo, xo))
                    over_in.append(1)
                # The strands swap positions; new arcs follow their strands.
                arc_comp[yo] = xc
                arc_comp[xo] = yc
                cur[p], cur[p + 1] = (xo, yc), (yo, xc)
            # Reconnect block outputs to where the original copies headed.
            rename = {copies[anchor][j]: cur[j][0] for j in range(m)}
            for idx, (cr, oi) in enumerate(zip(crossings, over_in)):
                # Only the incoming occurrence moves to the block output; the
                # outgoing occurrence stays attached to the block input.
                new_cr = list(cr)
                changed = False
                for s in (0, oi):
                    arc = new_cr[s]
                    if arc in rename and idx < grid_crossing_count:
                        new_cr[s] = rename[arc]
                        changed = True
                if changed:
                    crossings[idx] = tuple(new_cr)
            for old, new in rename.items():
                if new != old and old in arc_comp:
                    arc_comp[new] = arc_comp[old]

    markers = frozenset(
        comp * m + j
        for comp in d.marker_components
        for j in range(m)
    )
    framings = [0] * (d.components * m)
    for comp in range(d.components):
        for j in range(m):
            framings[comp * m + j] = d.framings[comp]
    # Drop component assignments for arcs that no longer occur.
    used = {x for cr in crossings for x in cr}
    arc_comp = {a: c for a, c in arc_comp.items() if a in used}
    return LinkDiagram(
        tuple(crossings),
        tuple(over_in),
        _pairs(arc_comp),
        d.components * m,
        tuple(framings),
        markers,
    )


def parallel_copy_components(m: int, comp: int) -> list[int]:
    """Component indices of the m parallel copies of an original component."""
    return [comp * m + j for j in range(m)]


# ---------------------------------------------------------------------------
# Braid closures (used to build catalog diagrams)
# ---------------------------------------------------------------------------


def closed_braid(strands: int, word: Sequence[tuple[int, int]]) -> LinkDiagram:
    """Closure of a braid given as (position, sign) generator pairs.

    Position p in 0..strands-2 crosses strands p and p+1; sign +1 means the
    left strand passes over.  Strands untouched by the word close into
    unknot markers.
    """
    next_arc = 1

    def fresh() -> int:
        nonlocal next_arc
        next_arc += 1
        return next_arc - 1

    start = [fresh() for _ in range(strands)]
    cur = list(start)
    crossings: list[Crossing] = []
    over_in: list[int] = []
    for p, sign in word:
        if not 0 <= p < strands - 1:
            raise ValueError(f"braid position {p} out of range")
        x, y = cur[p], cur[p + 1]
        xo, yo = fresh(), fresh()
        if sign > 0:
            crossings.append((y, yo, xo, x))
            over_in.append(3)
        else:
            crossings.append((x, y, yo, xo))
            over_in.append(1)
        cur[p], cur[p + 1] = xo, yo
    rename = {}
    untouched = 0
    for p in range(strands):
        if cur[p] == start[p]:
            untouched += 1
        else:
            rename[cur[p]] = start[p]
    crossings = [
        tuple(rename.get(x, x) for x in cr) for cr in crossings
    ]
    return LinkDiagram.assemble(
        tuple(crossings), tuple(over_in), None, untouched
    )


# ---------------------------------------------------------------------------
# Surgery presentations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SurgeryPresentation:
    """A +-1-framed algebraically split link, denoting surgery on S^3."""

    diagram: LinkDiagram

    def __post_init__(self):
        problems = []
        d = self.diagram
        for i, f in enumerate(d.framings):
            if f not in (1, -1):
                problems.append(f"component {i} has framing {f}, expected +1 or -1")
        if not problems:
            lk = d.linking_matrix()
            for p in range(d.components):
                for q in range(p + 1, d.components):
                    if lk[p][q] != 0:
                        problems.append(
                            f"components {p} and {q} have linking number {lk[p][q]}"
                        )
        if problems:
            raise DiagramError(problems)

    @property
    def components(self) -> int:
        return self.diagram.components

    def mirror(self) -> "SurgeryPresentation":
        flipped = mirror(self.diagram)
        flipped = LinkDiagram(
            flipped.crossings,
            flipped.over_in,
            flipped.arc_component,
            flipped.components,
            tuple(-f for f in flipped.framings),
            flipped.marker_components,
        )
        return SurgeryPresentation(flipped)

    def sub_presentation(self, keep: Iterable[int]) -> "SurgeryPresentation":
        return SurgeryPresentation(sublink(self.diagram, keep))

    def canonical_key(self) -> tuple:
        return self.diagram.canonical_key(include_framings=True)


def with_framings(d: LinkDiagram, framings: Sequence[int]) -> LinkDiagram:
    framings = tuple(int(f) for f in framings)
    if len(framings) != d.components:
        raise DiagramError(
            f"expected {d.components} framings, got {len(framings)}"
        )
    return LinkDiagram(
        d.crossings, d.over_in, d.arc_component, d.components, framings,
        d.marker_components,
    )
