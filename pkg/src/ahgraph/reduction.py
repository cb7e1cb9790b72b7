"""3-SAT to 3-colouring (Karp's reduction) and its structural guarantees.

Vertex layout of ``G(phi)``:

* ``0, 1, 2``: the palette triangle T, F, B;
* ``3 + 2(i-1)`` and ``4 + 2(i-1)``: literals ``x_i`` and ``not x_i``, each
  joined to the other and to B;
* then six vertices per clause, ``a1 b1 o1 a2 b2 o2``, forming two chained OR
  gadgets. The first combines literals 1 and 2 into ``o1``; the second
  combines ``o1`` and literal 3 into ``o2``, which is tied to F and B so it
  must take T's colour.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .errors import BadParams, NotThreeCnf, ParseError, TooLarge, UnusedVariable
from .formats import format_fraction
from .graph import Graph, average_degree, build_graph, is_connected

__all__ = [
    "CnfFormula",
    "Role",
    "KarpGraph",
    "parse_cnf",
    "write_cnf",
    "karp_graph",
    "predicted_stats",
    "sat_bruteforce",
    "degree_claim_holds",
    "reduction_metadata",
    "GADGET_SLOTS",
]

GADGET_SLOTS = ("a1", "b1", "o1", "a2", "b2", "o2")


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple

    def __post_init__(self):
        if self.num_vars < 1:
            raise BadParams("a formula needs at least one variable")
        if not self.clauses:
            raise BadParams("a formula needs at least one clause")
        fixed = []
        for clause in self.clauses:
            clause = tuple(int(x) for x in clause)
            if len(clause) != 3:
                raise NotThreeCnf(f"clause {clause} does not have exactly 3 literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise BadParams(f"literal {lit} outside 1..{self.num_vars}")
            fixed.append(clause)
        object.__setattr__(self, "clauses", tuple(fixed))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    @property
    def num_literals(self) -> int:
        # one vertex per polarity of each variable
        return 2 * self.num_vars

    def unused_variables(self) -> list[int]:
        used = {abs(lit) for clause in self.clauses for lit in clause}
        return [i for i in range(1, self.num_vars + 1) if i not in used]

    def evaluate(self, assignment: Sequence[bool]) -> bool:
        """``assignment[i-1]`` is the value of variable ``i``."""
        return all(
            any(assignment[abs(l) - 1] == (l > 0) for l in clause) for clause in self.clauses
        )


class Role(NamedTuple):
    kind: str  # "T", "F", "B", "pos", "neg" or "or"
    index: Optional[int] = None  # variable (pos/neg) or clause (or)
    slot: Optional[str] = None

    def __str__(self):
        if self.kind in ("T", "F", "B"):
            return self.kind
        if self.kind == "pos":
            return f"x{self.index}"
        if self.kind == "neg":
            return f"~x{self.index}"
        return f"c{self.index}.{self.slot}"


@dataclass(frozen=True)
class KarpGraph:
    graph: Graph
    labels: tuple
    formula: CnfFormula

    def literal_vertex(self, lit: int) -> int:
        return _literal_vertex(lit)

    def gadget_vertex(self, clause: int, slot: str) -> int:
        return 3 + self.formula.num_literals + 6 * clause + GADGET_SLOTS.index(slot)


def _literal_vertex(lit: int) -> int:
    return 3 + 2 * (abs(lit) - 1) + (0 if lit > 0 else 1)


def parse_cnf(text: str) -> CnfFormula:
    """Parse DIMACS CNF. Clauses may span lines; each ends at a literal ``0``."""
    header = None
    clauses = []
    current = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise ParseError("second problem line", lineno)
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"bad problem line {line!r}", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"bad problem line {line!r}", lineno) from None
            continue
        if header is None:
            raise ParseError("clause before the 'p cnf' line", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if lit == 0:
                if len(current) != 3:
                    raise NotThreeCnf(f"clause {current} has {len(current)} literals", lineno)
                clauses.append(tuple(current))
                current = []
            else:
                if abs(lit) > header[0]:
                    raise ParseError(f"literal {lit} exceeds declared {header[0]} variables", lineno)
                current.append(lit)
    if header is None:
        raise ParseError("missing 'p cnf' line")
    if current:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise ParseError(f"declared {header[1]} clauses, found {len(clauses)}")
    if header[0] < 1 or not clauses:
        raise ParseError("formula needs at least one variable and one clause")
    return CnfFormula(header[0], tuple(clauses))


def write_cnf(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.num_vars} {phi.num_clauses}"]
    lines += [" ".join(map(str, clause)) + " 0" for clause in phi.clauses]
    return "\n".join(lines) + "\n"


def karp_graph(phi: CnfFormula) -> KarpGraph:
    unused = phi.unused_variables()
    if unused:
        raise UnusedVariable(unused)
    T, F, B = 0, 1, 2
    labels = [Role("T"), Role("F"), Role("B")]
    edges = [(T, F), (F, B), (T, B)]
    for i in range(1, phi.num_vars + 1):
        p, q = len(labels), len(labels) + 1
        labels += [Role("pos", i), Role("neg", i)]
        edges += [(p, q), (p, B), (q, B)]

    for j, (l1, l2, l3) in enumerate(phi.clauses):
        a1, b1, o1, a2, b2, o2 = range(len(labels), len(labels) + 6)
        labels += [Role("or", j, slot) for slot in GADGET_SLOTS]
        edges += [
            (_literal_vertex(l1), a1), (_literal_vertex(l2), b1), (a1, b1), (a1, o1), (b1, o1),
            (o1, a2), (_literal_vertex(l3), b2), (a2, b2), (a2, o2), (b2, o2),
            (o2, F), (o2, B),
        ]
    return KarpGraph(build_graph(len(labels), edges), tuple(labels), phi)


def predicted_stats(C: int, L: int) -> tuple[int, int, Fraction]:
    """``(6C+L+3, 24C+3L+6, 3(8C+L+2)/(6C+L+3))``: vertices, twice the edges, average degree."""
    if C < 1 or L < 2 or L % 2:
        raise BadParams(f"need C >= 1 and even L >= 2, got C={C}, L={L}")
    n = 6 * C + L + 3
    return n, 24 * C + 3 * L + 6, Fraction(3 * (8 * C + L + 2), n)


def sat_bruteforce(phi: CnfFormula) -> bool:
    if phi.num_vars > 20:
        raise TooLarge(f"sat_bruteforce is limited to 20 variables, got {phi.num_vars}")
    return any(
        phi.evaluate(bits) for bits in itertools.product((False, True), repeat=phi.num_vars)
    )


def degree_claim_holds(g: Graph) -> bool:
    """Every degree is at least 2 and no two degree-2 vertices are adjacent."""
    deg = g.degrees()
    if any(d < 2 for d in deg):
        return False
    return not any(deg[u] == 2 and deg[v] == 2 for u, v in g.edges)


def reduction_metadata(kg: KarpGraph, is_ah: Optional[bool] = None) -> dict:
    phi = kg.formula
    C, L = phi.num_clauses, phi.num_literals
    n, twice_m, d = predicted_stats(C, L)
    g = kg.graph
    if is_ah is None:
        from .density import is_average_hereditary

        is_ah = is_average_hereditary(g).is_ah
    return {
        "clauses": C,
        "literals": L,
        "variables": phi.num_vars,
        "predicted": {"vertices": n, "edges": twice_m // 2, "avg_degree": format_fraction(d)},
        "actual": {"vertices": g.n, "edges": g.m, "avg_degree": format_fraction(average_degree(g))},
        "is_ah": is_ah,
        "connected": is_connected(g),
        "degree_claim": degree_claim_holds(g),
    }
