"""The ``MDSSD v1`` text format for generator matrices.

    MDSSD v1
    q=<q> p=<p> deg=<2m> n=<N> k=<k> ext=<0|1>
    mod=<c_0,...,c_2m>
    evalset=<e_1 ... e_n>
    row 0: <g_00> ... <g_0,N-1>
    ...

Entries are canonical base-p encodings.  ``n`` is the code length; the
evaluation set has n - ext points.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .gf import FieldCtx, FieldError, ctx_new

HEADER = "MDSSD v1"
_PARAMS = re.compile(r"^q=(\d+) p=(\d+) deg=(\d+) n=(\d+) k=(\d+) ext=([01])$")
_ROW = re.compile(r"^row (\d+):((?: \d+)*)$")


class MatrixFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class MatrixFile:
    q: int
    p: int
    deg: int
    ncols: int
    k: int
    extended: bool
    modulus: tuple[int, ...]
    evalset: tuple[int, ...]
    rows: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, MatrixFile):
            return NotImplemented
        head = ("q", "p", "deg", "ncols", "k", "extended", "modulus", "evalset")
        return (all(getattr(self, a) == getattr(other, a) for a in head)
                and np.array_equal(self.rows, other.rows))

    __hash__ = None

    @classmethod
    def from_code(cls, code) -> "MatrixFile":
        p, m, modulus = code.matrix.ctx_fingerprint
        G = code.matrix
        return cls(p ** (2 * m), p, 2 * m, G.ncols, G.k, G.extended, tuple(modulus),
                   tuple(code.evalset.elements), np.array(G.rows, dtype=np.int64))

    def field(self) -> FieldCtx:
        """The field this file was written over (cached when the modulus is canonical)."""
        ctx = ctx_new(self.p, self.deg // 2)
        if ctx.modulus == self.modulus:
            return ctx
        return FieldCtx(self.p, self.deg // 2, modulus=self.modulus)


def render(mf: MatrixFile) -> str:
    lines = [
        HEADER,
        f"q={mf.q} p={mf.p} deg={mf.deg} n={mf.ncols} k={mf.k} ext={int(mf.extended)}",
        "mod=" + ",".join(map(str, mf.modulus)),
        "evalset=" + " ".join(map(str, mf.evalset)),
    ]
    for i, row in enumerate(np.asarray(mf.rows).tolist()):
        lines.append(f"row {i}: " + " ".join(map(str, row)))
    return "\n".join(lines) + "\n"


def _ints(text: str, sep: str | None, line: int, what: str) -> list[int]:
    parts = text.split(sep) if text.strip() else []
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise MatrixFileError(f"{what} must be integers", line) from None


def parse(text: str) -> MatrixFile:
    """Parse and validate a matrix file; errors carry 1-based line numbers."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != HEADER:
        raise MatrixFileError(f"expected header {HEADER!r}", 1)
    if len(lines) < 4:
        raise MatrixFileError("file ends before the evalset line", len(lines) + 1)

    m = _PARAMS.match(lines[1])
    if not m:
        raise MatrixFileError("expected 'q=<q> p=<p> deg=<2m> n=<N> k=<k> ext=<0|1>'", 2)
    q, p, deg, N, k, ext = (int(x) for x in m.groups())
    if deg < 2 or deg % 2 or p ** deg != q:
        raise MatrixFileError(f"q={q} is not p^deg with p={p}, even deg={deg}", 2)
    if ext and N < 2 or N < 1 or k < 1 or k > N:
        raise MatrixFileError(f"inconsistent n={N}, k={k}, ext={ext}", 2)

    if not lines[2].startswith("mod="):
        raise MatrixFileError("expected 'mod=<c_0,...,c_2m>'", 3)
    mod = _ints(lines[2][4:], ",", 3, "modulus coefficients")
    if len(mod) != deg + 1 or any(not 0 <= c < p for c in mod) or mod[-1] != 1:
        raise MatrixFileError(f"modulus must be {deg + 1} coefficients in [0,{p}) ending in 1", 3)

    if not lines[3].startswith("evalset="):
        raise MatrixFileError("expected 'evalset=<e_1 ... e_n>'", 4)
    evalset = _ints(lines[3][8:], None, 4, "evaluation points")
    if len(evalset) != N - ext:
        raise MatrixFileError(f"evalset has {len(evalset)} points, header implies {N - ext}", 4)
    if any(not 0 <= e < q for e in evalset):
        raise MatrixFileError(f"evaluation points must lie in [0,{q})", 4)

    body = lines[4:]
    if len(body) != k:
        raise MatrixFileError(f"expected {k} rows, found {len(body)}", 5 + min(len(body), k))
    rows = np.zeros((k, N), dtype=np.int64)
    for i, line in enumerate(body):
        no = 5 + i
        rm = _ROW.match(line)
        if not rm:
            raise MatrixFileError("expected 'row <i>: <entries>'", no)
        if int(rm.group(1)) != i:
            raise MatrixFileError(f"row index {rm.group(1)}, expected {i}", no)
        vals = _ints(rm.group(2), None, no, "matrix entries")
        if len(vals) != N:
            raise MatrixFileError(f"row has {len(vals)} entries, expected {N}", no)
        if any(not 0 <= v < q for v in vals):
            raise MatrixFileError(f"matrix entries must lie in [0,{q})", no)
        rows[i] = vals

    mf = MatrixFile(q, p, deg, N, k, bool(ext), tuple(mod), tuple(evalset), rows)
    try:
        mf.field()
    except FieldError as exc:
        raise MatrixFileError(str(exc), 3) from None
    return mf


def read(path) -> MatrixFile:
    with open(path, encoding="ascii") as fh:
        return parse(fh.read())


def write(path, mf: MatrixFile) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(render(mf))


def structure_problems(ctx: FieldCtx, mf: MatrixFile) -> list[str]:
    """Disagreements between the matrix and the GRS shape its evalset implies.

    Column j < |evalset| must be v_j (1, a_j, ..., a_j^(k-1)) with v_j != 0,
    the extended column must be the indicator of row k-1, and the points must
    be distinct.
    """
    out = []
    seen: dict[int, int] = {}
    for j, a in enumerate(mf.evalset):
        if a in seen:
            out.append(f"evaluation point {a} repeated at positions {seen[a]} and {j}")
        seen.setdefault(a, j)
    G = mf.rows
    for j, a in enumerate(mf.evalset):
        v = int(G[0, j])
        if v == 0:
            out.append(f"column {j} has a zero multiplier")
            continue
        cur = v
        for i in range(1, mf.k):
            cur = ctx.mul(cur, a)
            if int(G[i, j]) != cur:
                out.append(f"column {j} is not v*(a^i) for a={a} (row {i})")
                break
    if mf.extended:
        col = G[:, -1].tolist()
        if col != [0] * (mf.k - 1) + [1]:
            out.append("extended column is not the indicator of the last row")
    return out
