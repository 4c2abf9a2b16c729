"""Toric matrices, log-linear generator sets and undirected graphs."""

from __future__ import annotations

from typing import Iterable, Sequence

from .shape import Shape


class ToricMatrix:
    """Integer matrix ``A`` whose columns are indexed by joint states.

    ``column_labels`` are the states (tuples) for shape-based matrices and
    ``0..n`` for raw matrices; ``shape`` is kept when known so the columns
    can be matched with ``p`` variables.
    """

    def __init__(self, entries: Sequence[Sequence[int]], column_labels=None, row_labels=None, shape: Shape | None = None):
        rows = [[int(x) for x in r] for r in entries]
        if not rows or not rows[0]:
            raise ValueError("toric matrix must be nonempty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("toric matrix rows must have equal length")
        if shape is not None and shape.size != width:
            raise ValueError(f"{width} columns do not match shape {shape}")
        self.entries = rows
        self.shape = shape
        if column_labels is None:
            column_labels = shape.states if shape is not None else list(range(width))
        self.column_labels = list(column_labels)
        self.row_labels = list(row_labels) if row_labels is not None else None

    def __eq__(self, other):
        return isinstance(other, ToricMatrix) and self.entries == other.entries

    def __repr__(self):
        return f"ToricMatrix({self.entries!r})"

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.entries]

    def column_sums(self) -> list[int]:
        return [sum(r[j] for r in self.entries) for j in range(self.ncols)]

    def has_equal_column_sums(self) -> bool:
        return len(set(self.column_sums())) == 1

    def p_names(self) -> list[str]:
        if self.shape is not None:
            return self.shape.names("p")
        return [f"p{j}" for j in range(self.ncols)]

    def u_names(self) -> list[str]:
        if self.shape is not None:
            return self.shape.names("u")
        return [f"u{j}" for j in range(self.ncols)]

    def apply(self, vector: Sequence[int]) -> list[int]:
        return [sum(a * x for a, x in zip(r, vector)) for r in self.entries]


class GeneratorSet:
    """Ordered list of nonempty variable subsets (1-based)."""

    def __init__(self, subsets: Iterable[Iterable[int]]):
        out = []
        for s in subsets:
            t = tuple(sorted(set(int(v) for v in s)))
            if not t:
                raise ValueError("generators must be nonempty")
            if t in out:
                raise ValueError(f"duplicate generator {t}")
            out.append(t)
        self.subsets = out

    def __iter__(self):
        return iter(self.subsets)

    def __len__(self):
        return len(self.subsets)

    def __eq__(self, other):
        if isinstance(other, GeneratorSet):
            return self.subsets == other.subsets
        return NotImplemented

    def __repr__(self):
        return f"GeneratorSet({self.subsets!r})"


def loglinear_matrix(shape: Shape, gens: GeneratorSet | Iterable[Iterable[int]]) -> ToricMatrix:
    """0/1 matrix of a hierarchical log-linear model.

    One row per generator and per joint state of the generator's variables;
    an entry is 1 iff the column state restricts to the row state.
    """
    if not isinstance(gens, GeneratorSet):
        gens = GeneratorSet(gens)
    if not len(gens):
        raise ValueError("empty generator set")
    rows, labels = [], []
    for g in gens:
        shape.check_block(g, proper=False)
        for t in shape.block_states(g):
            rows.append([int(all(s[v - 1] == x for v, x in zip(g, t))) for s in shape.states])
            labels.append(", ".join(f"X{v}={x}" for v, x in zip(g, t)))
    return ToricMatrix(rows, row_labels=labels, shape=shape)


class Graph:
    """Simple undirected graph on vertices ``1..n``."""

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        self.n = n
        self.adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
        seen = set()
        for e in edges:
            a, b = (int(v) for v in e)
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"edge {(a, b)} leaves vertex range 1..{n}")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            self.adj[a].add(b)
            self.adj[b].add(a)
        self.edges = sorted(seen)


def cliques(g: Graph) -> GeneratorSet:
    """Maximal cliques by Bron-Kerbosch with pivoting, sorted lexicographically."""
    adj = g.adj
    found: list[tuple[int, ...]] = []

    def expand(r: set, p: set, x: set):
        if not p and not x:
            found.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda v: len(adj[v] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(adj), set())
    return GeneratorSet(sorted(found))


def graphical_matrix(shape: Shape, g: Graph) -> ToricMatrix:
    if g.n != shape.n:
        raise ValueError(f"graph has {g.n} vertices but the table has {shape.n} variables")
    return loglinear_matrix(shape, cliques(g))
