"""Instance files, the cube-cone generator and extreme-ray counting.

Text format::

    # comment
    m n
    a11 a12 ... a1n
    ...
    am1 ... amn
    b: b1 ... bm        (optional)
    c: c1 ... cn        (optional)

The JSON format is one object ``{"m":, "n":, "A": [[...]], "b": [...], "c": [...],
"name":, "metadata":}``; files are dispatched on the ``.json`` extension.
"""
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path

from .errors import DomainError, ParameterError, ParseError, ShapeError
from .exact import as_int_matrix, as_int_vector, integer_scaling, nullspace_rat, rank


@dataclass
class InstanceFile:
    A: tuple
    b: tuple = None
    c: tuple = None
    name: str = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.A = as_int_matrix(self.A)
        m, n = len(self.A), len(self.A[0])
        if self.b is not None:
            self.b = as_int_vector(self.b)
            if len(self.b) != m:
                raise ShapeError(f"b has {len(self.b)} entries, expected {m}")
        if self.c is not None:
            self.c = as_int_vector(self.c)
            if len(self.c) != n:
                raise ShapeError(f"c has {len(self.c)} entries, expected {n}")

    @property
    def m(self):
        return len(self.A)

    @property
    def n(self):
        return len(self.A[0])

    def rhs(self):
        """Right-hand side, defaulting to zero for cones."""
        return self.b if self.b is not None else (0,) * self.m


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        bad = next(t for t in tokens if not _is_int(t))
        raise ParseError(f"non-integer token {bad!r}", lineno) from None


def _is_int(t):
    try:
        int(t)
        return True
    except ValueError:
        return False


def parse_instance(text):
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty instance", 1)
    lineno, header = lines[0]
    dims = _ints(header.split(), lineno)
    if len(dims) != 2:
        raise ParseError("header must be 'm n'", lineno)
    m, n = dims
    if m < 1 or n < 1:
        raise ParseError("dimensions must be positive", lineno)
    if len(lines) < 1 + m:
        raise ParseError(f"expected {m} matrix rows, found {len(lines) - 1}", lines[-1][0])
    A = []
    for lineno, body in lines[1:1 + m]:
        if ":" in body:
            raise ParseError(f"expected a matrix row, found {body!r}", lineno)
        row = _ints(body.split(), lineno)
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", lineno)
        A.append(row)
    b = c = None
    for lineno, body in lines[1 + m:]:
        key, sep, rest = body.partition(":")
        key = key.strip()
        if not sep or key not in ("b", "c"):
            raise ParseError(f"unexpected line {body!r}", lineno)
        vals = _ints(rest.split(), lineno)
        want = m if key == "b" else n
        if len(vals) != want:
            raise ParseError(f"{key} has {len(vals)} entries, expected {want}", lineno)
        if key == "b":
            b = vals
        else:
            c = vals
    return InstanceFile(A, b, c)


def emit_instance(inst):
    """Canonical text form; ``parse_instance(emit_instance(x))`` reproduces ``x``."""
    out = [f"{inst.m} {inst.n}"]
    out += [" ".join(map(str, row)) for row in inst.A]
    if inst.b is not None:
        out.append("b: " + " ".join(map(str, inst.b)))
    if inst.c is not None:
        out.append("c: " + " ".join(map(str, inst.c)))
    return "\n".join(out) + "\n"


def parse_json_instance(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(obj, dict) or "A" not in obj:
        raise ParseError("JSON instance must be an object with an 'A' field")
    A = obj["A"]
    if "m" in obj and obj["m"] != len(A):
        raise ParseError(f"'m' says {obj['m']} rows, A has {len(A)}")
    if "n" in obj and any(len(r) != obj["n"] for r in A):
        raise ParseError(f"some row of A does not have n = {obj['n']} entries")
    try:
        return InstanceFile(A, obj.get("b"), obj.get("c"), name=obj.get("name"),
                            metadata=obj.get("metadata") or {})
    except ShapeError as exc:
        raise ParseError(str(exc)) from None


def emit_json_instance(inst):
    obj = {"m": inst.m, "n": inst.n, "A": [list(r) for r in inst.A]}
    if inst.b is not None:
        obj["b"] = list(inst.b)
    if inst.c is not None:
        obj["c"] = list(inst.c)
    if inst.name is not None:
        obj["name"] = inst.name
    if inst.metadata:
        obj["metadata"] = inst.metadata
    return json.dumps(obj) + "\n"


def load_instance(path):
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        return parse_json_instance(text)
    return parse_instance(text)


def cube_cone_matrix(n):
    """Homogenization of ``[0, 1]^n``: rows ``(-e_i, 0)`` then ``(e_i, -1)``."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    rows = []
    for i in range(n):
        rows.append(tuple(-int(j == i) for j in range(n)) + (0,))
    for i in range(n):
        rows.append(tuple(int(j == i) for j in range(n)) + (-1,))
    return tuple(rows)


def gen_cube_cone(n, scaled_col=None):
    """Cube cone matrix with column ``scaled_col`` (1-based) doubled.

    ``scaled_col=None`` returns the unscaled (totally unimodular) matrix.
    """
    if n < 2:
        raise ParameterError("cube cone needs n >= 2")
    A = cube_cone_matrix(n)
    if scaled_col is None:
        return A
    if not 1 <= scaled_col <= n + 1:
        raise ParameterError(f"scaled column must lie in [1, {n + 1}], got {scaled_col}")
    j = scaled_col - 1
    return tuple(tuple(2 * v if k == j else v for k, v in enumerate(row)) for row in A)


def cone_edges(A):
    """Extreme rays of the pointed cone ``{x : A x <= 0}``.

    Returns a list of ``(ray, rows)`` where ``ray`` is a primitive integer vector
    and ``rows`` is the lexicographically first row subset of size ``d - 1``
    that defines it.
    """
    A = as_int_matrix(A)
    d = len(A[0])
    if rank(A) < d:
        raise DomainError("cone is not pointed")
    if d == 1:
        rays = []
        for s in (1, -1):
            if all(row[0] * s <= 0 for row in A):
                rays.append(((s,), ()))
        return rays
    seen = {}
    for rows in combinations(range(len(A)), d - 1):
        sub = [A[i] for i in rows]
        kernel = nullspace_rat(sub)
        if len(kernel) != 1:
            continue
        r = integer_scaling(kernel[0])
        vals = [sum(a * x for a, x in zip(row, r)) for row in A]
        if all(v <= 0 for v in vals):
            ray = r
        elif all(v >= 0 for v in vals):
            ray = tuple(-x for x in r)
        else:
            continue
        seen.setdefault(ray, rows)
    return sorted(seen.items())


def count_cone_edges(A):
    return len(cone_edges(A))
