"""Line-oriented text formats for every instance kind.

Graph files start with ``mwbis <n> <m> <B>`` followed by ``v <id> <w> <b>``
and ``e <u> <v>`` lines. A ``root <id>`` line marks a rooted tree and
``level <i> <ids...>`` lines make a leveled planar instance (face edges are
implied, ``e`` lines are the cross edges). Interval files use
``intervals <n> <B>`` / ``i <s> <f> <w> <b>`` and knapsack files use
``knapsack <n> <cap>`` / ``k <value> <size>``. ``#`` starts a comment.
"""
from __future__ import annotations

import os
from pathlib import Path
from typing import Union

from .core import Instance
from .errors import NotATree, ParseError, SelfLoop, ValidationError, VertexOutOfRange
from .interval import Interval, IntervalInstance, IntervalSet
from .planar.leveled import LeveledPlanarInstance, validate_leveled
from .reductions import KnapsackInstance
from .tree import RootedTree, root_tree

KINDS = ("graph", "tree", "intervals", "planar", "knapsack")

Parsed = Union[Instance, RootedTree, IntervalInstance, LeveledPlanarInstance, KnapsackInstance]


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield no, body


def _ints(tokens, count, no, what):
    if len(tokens) != count:
        raise ParseError(f"{what} expects {count} fields, got {len(tokens)}", no)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"{what} has a non-integer field: {' '.join(tokens)}", no) from None


def _reraise(exc: ValidationError, no: int):
    """Re-raise a validation error with the offending line attached."""
    err = type(exc)(f"line {no}: {exc}")
    err.line = no
    raise err from exc


def _parse_graph(rows, header, kind):
    no, head = header
    n, m, B = _ints(head[1:], 3, no, "header")
    if n < 0 or m < 0:
        raise ParseError("n and m must be nonnegative", no)
    weight: list[int | None] = [None] * n
    budget = [0] * n
    edges = []
    root = None
    levels: dict[int, tuple[list[int], int]] = {}
    for no, tok in rows:
        tag = tok[0]
        if tag == "v":
            vid, w, b = _ints(tok[1:], 3, no, "vertex line")
            if not 0 <= vid < n:
                raise VertexOutOfRange(f"line {no}: vertex id {vid} outside 0..{n - 1}")
            if weight[vid] is not None:
                raise ParseError(f"vertex {vid} defined twice", no)
            weight[vid], budget[vid] = w, b
        elif tag == "e":
            u, v = _ints(tok[1:], 2, no, "edge line")
            for x in (u, v):
                if not 0 <= x < n:
                    raise VertexOutOfRange(f"line {no}: edge ({u}, {v}) names vertex {x}, n={n}")
            if u == v:
                raise SelfLoop(f"line {no}: self-loop on vertex {u}")
            edges.append((u, v))
        elif tag == "root":
            if root is not None:
                raise ParseError("second root line", no)
            (root,) = _ints(tok[1:], 1, no, "root line")
        elif tag == "level":
            if len(tok) < 2:
                raise ParseError("level line needs a level number", no)
            li, *ids = _ints(tok[1:], len(tok) - 1, no, "level line")
            if li in levels:
                raise ParseError(f"level {li} given twice", no)
            levels[li] = (ids, no)
        else:
            raise ParseError(f"unknown record {tag!r}", no)

    missing = [v for v in range(n) if weight[v] is None]
    if missing:
        raise ParseError(f"header declares n={n} but vertices {missing[:5]} are missing", header[0])
    if len(edges) != m:
        raise ParseError(f"header declares m={m} edges, found {len(edges)}", header[0])

    if kind is None:
        kind = "planar" if levels else "tree" if root is not None else "graph"
    if kind != "planar" and levels:
        raise ParseError(f"level lines are not allowed in a {kind} file", next(iter(levels.values()))[1])


    if kind == "planar":
        if sorted(levels) != list(range(1, len(levels) + 1)):
            raise ParseError(f"levels must be numbered 1..{len(levels)}, got {sorted(levels)}", header[0])
        order = [levels[i][0] for i in range(1, len(levels) + 1)]
        face = [(lv[j], lv[(j + 1) % len(lv)]) for lv in order for j in range(len(lv))]
        for li, (ids, lno) in levels.items():
            for v in ids:
                if not 0 <= v < n:
                    raise VertexOutOfRange(f"line {lno}: level {li} names vertex {v}, n={n}")
        inst = _checked(weight, budget, edges + face, B, header[0])
        return validate_leveled(inst, order)

    inst = _checked(weight, budget, edges, B, header[0])
    if kind == "graph":
        return inst
    if kind == "tree":
        if len(edges) != max(n - 1, 0) or n == 0:
            raise NotATree(f"a tree on {n} vertices needs {max(n - 1, 0)} edges, found {len(edges)}")
        tree = root_tree(inst, 0 if root is None else root)
        if len(tree.postorder) != n:
            raise NotATree("graph is not connected")
        return tree
    raise ParseError(f"a graph file cannot be read as {kind!r}", header[0])


def _checked(weight, budget, edges, B, no):
    try:
        return Instance.from_edges(weight, budget, edges, B)
    except ValidationError as exc:
        _reraise(exc, no)


def _parse_intervals(rows, header):
    no, head = header
    n, B = _ints(head[1:], 2, no, "header")
    ivs = []
    for no, tok in rows:
        if tok[0] != "i":
            raise ParseError(f"unknown record {tok[0]!r} in an interval file", no)
        s, f, w, b = _ints(tok[1:], 4, no, "interval line")
        iv = Interval(s, f, w, b)
        try:
            IntervalSet.from_intervals([iv])
        except ValidationError as exc:
            _reraise(exc, no)
        ivs.append(iv)
    if len(ivs) != n:
        raise ParseError(f"header declares n={n} intervals, found {len(ivs)}", header[0])
    if B < 0:
        raise ValidationError(f"line {header[0]}: B={B} is negative")
    return IntervalInstance(tuple(ivs), B)


def _parse_knapsack(rows, header):
    no, head = header
    n, cap = _ints(head[1:], 2, no, "header")
    items = []
    for no, tok in rows:
        if tok[0] != "k":
            raise ParseError(f"unknown record {tok[0]!r} in a knapsack file", no)
        items.append(tuple(_ints(tok[1:], 2, no, "item line")))
    if len(items) != n:
        raise ParseError(f"header declares n={n} items, found {len(items)}", header[0])
    return KnapsackInstance(tuple(items), cap)


def parse_text(text: str, kind: str | None = None) -> Parsed:
    """Parse ``text``; ``kind`` is one of KINDS or None to infer it."""
    if kind is not None and kind not in KINDS:
        raise ParseError(f"unknown format {kind!r}; choose from {', '.join(KINDS)}")
    rows = iter(_lines(text))
    header = next(rows, None)
    if header is None:
        raise ParseError("missing header")
    tag = header[1][0]
    if tag == "mwbis":
        if kind in ("intervals", "knapsack"):
            raise ParseError(f"expected a {kind} header, found 'mwbis'", header[0])
        return _parse_graph(rows, header, kind)
    if tag == "intervals":
        if kind not in (None, "intervals"):
            raise ParseError(f"expected a {kind} file, found an interval header", header[0])
        return _parse_intervals(rows, header)
    if tag == "knapsack":
        if kind not in (None, "knapsack"):
            raise ParseError(f"expected a {kind} file, found a knapsack header", header[0])
        return _parse_knapsack(rows, header)
    raise ParseError(f"missing header, found {tag!r}", header[0])


def parse(path: str | os.PathLike, kind: str | None = None) -> Parsed:
    return parse_text(Path(path).read_text(), kind)


def _graph_lines(inst: Instance, edges) -> list[str]:
    out = [f"mwbis {inst.n} {len(edges)} {inst.B}"]
    out += [f"v {v} {inst.weight[v]} {inst.budget[v]}" for v in range(inst.n)]
    out += [f"e {u} {v}" for u, v in edges]
    return out


def write_text(obj: Parsed) -> str:
    if isinstance(obj, RootedTree):
        lines = _graph_lines(obj.instance, obj.instance.edges())
        lines.insert(1, f"root {obj.root}")
    elif isinstance(obj, LeveledPlanarInstance):
        lines = _graph_lines(obj.instance, list(obj.cross_edges))
        for li, lv in enumerate(obj.levels, start=1):
            lines.insert(li, f"level {li} " + " ".join(map(str, lv)))
    elif isinstance(obj, Instance):
        lines = _graph_lines(obj, obj.edges())
    elif isinstance(obj, IntervalInstance):
        lines = [f"intervals {len(obj.intervals)} {obj.B}"]
        lines += [f"i {iv.start} {iv.finish} {iv.weight} {iv.budget}" for iv in obj.intervals]
    elif isinstance(obj, KnapsackInstance):
        lines = [f"knapsack {len(obj.items)} {obj.capacity}"]
        lines += [f"k {value} {size}" for value, size in obj.items]
    else:
        raise TypeError(f"cannot write {type(obj).__name__}")
    return "\n".join(lines) + "\n"


def write(obj: Parsed, path: str | os.PathLike) -> None:
    Path(path).write_text(write_text(obj))


def kind_of(obj) -> str:
    if isinstance(obj, RootedTree):
        return "tree"
    if isinstance(obj, LeveledPlanarInstance):
        return "planar"
    if isinstance(obj, Instance):
        return "graph"
    if isinstance(obj, IntervalInstance):
        return "intervals"
    if isinstance(obj, KnapsackInstance):
        return "knapsack"
    raise TypeError(type(obj).__name__)
