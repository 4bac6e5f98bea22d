"""Pure Sullivan presentations S_k(G), their tensor products, and witnesses.

S_k(G) has a degree-2 generator ``x_v`` per vertex (``d x_v = 0``) and a
degree-(2k-3) generator ``y_u+v`` per edge with

    d(y_uv) = sum_{l=1}^{k} x_u^(k-l) x_v^(l-1).

Ellipticity is never computed from cohomology.  A verdict is issued from
the colourability of the underlying graph, and a non-elliptic verdict
carries a colouring witness that is checked by substituting k-th roots of
unity into every differential, in exact integer arithmetic modulo the
k-th cyclotomic polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .colourings import Assignment, ColourScheme, check, colour, scheme_of
from .complex import SimplicialComplex, face_name, faces_connected, homogeneity, is_connected, is_strongly_connected
from .derived import (
    cart_asc_graph,
    cart_desc_graph,
    complete_asc_graph,
    complete_desc_graph,
    descending_graph,
    exchange_graph,
    full_graph,
    line_graph,
    partition_graph,
    total_graph,
    two_section,
)
from .errors import BadK, ColouringError, HypothesisViolated, OutOfRange, PaletteMismatch
from .graph import Graph
from .partitions import DEFAULT_CAP, Partition, bcp

# -- integer polynomials, coefficient lists from the constant term up ---------


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a, b) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_divmod(a, b) -> tuple[list[int], list[int]]:
    """Division by a monic integer polynomial; exact over the integers."""
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(a)
    _trim(rem)
    if len(rem) < len(b):
        return [], rem
    quot = [0] * (len(rem) - len(b) + 1)
    for shift in range(len(rem) - len(b), -1, -1):
        c = rem[shift + len(b) - 1]
        if c:
            quot[shift] = c
            for j, y in enumerate(b):
                rem[shift + j] -= c * y
    return _trim(quot), _trim(rem[: len(b) - 1])


@lru_cache(maxsize=None)
def cyclotomic_poly(k: int) -> tuple[int, ...]:
    """Coefficients of the k-th cyclotomic polynomial, constant term first."""
    if not 1 <= k <= 64:
        raise OutOfRange("cyclotomic polynomials are provided for 1 <= k <= 64")
    num = [-1] + [0] * (k - 1) + [1]
    for d in range(1, k):
        if k % d == 0:
            num, rem = poly_divmod(num, list(cyclotomic_poly(d)))
            assert not rem
    return tuple(num)


class CyclotomicElement:
    """An element of Z[ζ_k], held as its residue modulo Φ_k."""

    __slots__ = ("k", "coeffs")

    def __init__(self, k: int, coeffs=()):
        phi = list(cyclotomic_poly(k))
        _, rem = poly_divmod(list(coeffs), phi)
        self.k = k
        self.coeffs = tuple(rem + [0] * (len(phi) - 1 - len(rem)))

    @classmethod
    def integer(cls, k: int, n: int) -> CyclotomicElement:
        return cls(k, [n])

    @classmethod
    def zeta(cls, k: int, power: int = 1) -> CyclotomicElement:
        return cls(k, [0] * (power % k) + [1])

    def _other(self, other):
        if isinstance(other, int):
            return CyclotomicElement.integer(self.k, other)
        if other.k != self.k:
            raise ValueError("cyclotomic elements of different orders")
        return other

    def __add__(self, other):
        other = self._other(other)
        return CyclotomicElement(self.k, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.k, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._other(other))

    def __mul__(self, other):
        other = self._other(other)
        return CyclotomicElement(self.k, poly_mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = CyclotomicElement.integer(self.k, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicElement.integer(self.k, other)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self.k == other.k and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.k, self.coeffs))

    def __repr__(self):
        return f"CyclotomicElement({self.k}, {list(self.coeffs)})"


# -- presentations ------------------------------------------------------------

@dataclass(frozen=True)
class SullivanPresentation:
    k: int
    graph: Graph = field(repr=False)
    even: dict = field(hash=False, repr=False)  # graph vertex -> generator name
    odd: dict = field(hash=False, repr=False)  # (u, v) edge -> generator name
    # odd generator -> ((coeff, ((generator, exponent), ...)), ...)
    differential: dict = field(hash=False, repr=False)
    source: str = ""

    @property
    def odd_degree(self) -> int:
        return 2 * self.k - 3

    def degree(self, name: str) -> int:
        return 2 if name in self.even.values() else self.odd_degree

    @property
    def generators(self) -> list[tuple[str, int]]:
        return [(x, 2) for x in self.even.values()] + [(y, self.odd_degree) for y in self.odd.values()]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "generators": [{"name": n, "degree": d} for n, d in self.generators],
            "differentials": {
                y: [{"coeff": c, "monomial": dict(mono)} for c, mono in terms]
                for y, terms in self.differential.items()
            },
        }

    def render(self) -> str:
        lines = [f"S_{self.k}({self.source or 'G'}): {len(self.even)} even, {len(self.odd)} odd generators"]
        for x in self.even.values():
            lines.append(f"  |{x}| = 2, d({x}) = 0")
        for y in self.odd.values():
            lines.append(f"  |{y}| = {self.odd_degree}, d({y}) = {render_terms(self.differential[y])}")
        return "\n".join(lines)


def render_terms(terms) -> str:
    parts = []
    for c, mono in terms:
        body = " ".join(g if e == 1 else f"{g}^{e}" for g, e in mono) or "1"
        parts.append(body if c == 1 else f"{c} {body}")
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class TensorPresentation:
    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise ColouringError("a tensor product needs at least one factor")
        names = [n for f in self.factors for n, _ in f.generators]
        if len(names) != len(set(names)):
            raise ColouringError("tensor factors must have disjoint generator names")

    @property
    def k(self) -> int:
        return self.factors[0].k

    def to_json(self) -> dict:
        return {"factors": [f.to_json() for f in self.factors]}

    def render(self) -> str:
        return "\n(x)\n".join(f.render() for f in self.factors)


def _edge_differential(xu: str, xv: str, k: int) -> tuple:
    terms = []
    for l in range(1, k + 1):
        mono = tuple((g, e) for g, e in ((xu, k - l), (xv, l - 1)) if e)
        terms.append((1, mono))
    return tuple(terms)


def build_model(G: Graph, k: int, prefix: str = "", source: str = "") -> SullivanPresentation:
    if k < 2:
        raise BadK("S_k(G) is defined for k >= 2")
    if not G.vertices:
        raise ColouringError("S_k(G) needs a non-empty graph")
    even = {v: f"{prefix}x_{v}" for v in G.vertices}
    odd = {}
    differential = {}
    for e in sorted(tuple(sorted(e)) for e in G.edges):
        u, v = e
        y = f"{prefix}y_{u}+{v}"
        if y in differential:
            raise ColouringError(f"generator name collision on {y}")
        odd[e] = y
        differential[y] = _edge_differential(even[u], even[v], k)
    return SullivanPresentation(k, G, even, odd, differential, source)


def build_tensor(graphs, k: int, sources=None) -> TensorPresentation:
    sources = sources or [""] * len(graphs)
    return TensorPresentation(
        tuple(build_model(G, k, prefix=f"[{i}]", source=src) for i, (G, src) in enumerate(zip(graphs, sources)))
    )


def _require_hypotheses(X: SimplicialComplex, scheme: ColourScheme):
    if scheme.tag in ("C8", "C9", "C10", "C11", "ASC", "DESC"):
        if not (is_strongly_connected(X) and homogeneity(X).pure):
            raise HypothesisViolated(f"{scheme} models need a strongly connected pure complex")
    elif not is_connected(X):
        raise HypothesisViolated(f"{scheme} models need a connected complex")


_SINGLE = {
    "C1": ("two-section graph", two_section),
    "C2": ("line graph", line_graph),
    "C3": ("total graph", total_graph),
    "C4": ("sum of exchange graphs", complete_asc_graph),
    "C5": ("sum of descending graphs", complete_desc_graph),
    "C6": ("full graph", full_graph),
    "C8": ("Cartesian product of exchange graphs", cart_asc_graph),
    "C9": ("Cartesian product of descending graphs", cart_desc_graph),
}


def model_for_scheme(X: SimplicialComplex, scheme, k: int, cap: int = DEFAULT_CAP):
    """The presentation whose non-ellipticity encodes k-colourability of X."""
    scheme = scheme_of(scheme)
    if k < 2:
        raise BadK("models are defined for k >= 2")
    _require_hypotheses(X, scheme)
    tag = scheme.tag
    if tag in _SINGLE:
        src, make = _SINGLE[tag]
        return build_model(make(X), k, source=src)
    if tag == "ASC":
        return build_model(exchange_graph(X, scheme.index), k, source=f"G_{scheme.index}")
    if tag == "DESC":
        return build_model(descending_graph(X, scheme.index), k, source=f"G'_{scheme.index}")
    if tag == "PS":
        parts = bcp(X, scheme.index, cap)
        return build_tensor(
            [partition_graph(X, P) for P in parts], k, [f"G_0({P!r})" for P in parts]
        )
    if tag == "C10":
        return build_tensor([exchange_graph(X, r) for r in range(X.dim)], k, [f"G_{r}" for r in range(X.dim)])
    dims = range(1, X.dim + 1)
    return build_tensor([descending_graph(X, s) for s in dims], k, [f"G'_{s}" for s in dims])


def evaluate_differentials(S: SullivanPresentation, exponents: dict) -> dict:
    """Value of every d(y) at x_v = ζ^exponents[v], as exact cyclotomic elements."""
    k = S.k
    zeta_of = {S.even[v]: CyclotomicElement.zeta(k, e) for v, e in exponents.items()}
    values = {}
    for y, terms in S.differential.items():
        total = CyclotomicElement.integer(k, 0)
        for c, mono in terms:
            term = CyclotomicElement.integer(k, c)
            for g, e in mono:
                term = term * zeta_of[g] ** e
            total = total + term
        values[y] = total
    return values


def witness_check(S: SullivanPresentation, c: dict) -> bool:
    """Substitute x_v -> ζ^c(v) and test that every differential vanishes."""
    missing = [v for v in S.graph.vertices if v not in c]
    if missing:
        raise PaletteMismatch(f"colouring misses vertices {missing}")
    bad = {v: c[v] for v in S.graph.vertices if not 1 <= c[v] <= S.k}
    if bad:
        raise PaletteMismatch(f"colours outside 1..{S.k}: {bad}")
    values = evaluate_differentials(S, {v: c[v] for v in S.graph.vertices})
    return all(val.is_zero() for val in values.values())


# -- verdicts -----------------------------------------------------------------

_JUSTIFY = {
    "C1": "vertex colourings of X are colourings of its two-section graph",
    "C2": "face colourings of X are colourings of its line graph",
    "C3": "total colourings of X are colourings of its total graph",
    "C4": "complete ascending colourings are colourings of the sum of exchange graphs",
    "C5": "complete descending colourings are colourings of the sum of descending graphs",
    "C6": "full colourings are colourings of the full graph",
    "C8": "maximal ascending colourings are colourings of the Cartesian product of exchange graphs",
    "C9": "maximal descending colourings are colourings of the Cartesian product of descending graphs",
    "ASC": "ascending colourings in one dimension are colourings of the exchange graph",
    "DESC": "descending colourings in one dimension are colourings of the descending graph",
    "PS": "chr^s is the minimum over BCP^s of partition-graph chromatic numbers; "
    "a tensor product is elliptic iff every factor is",
    "C10": "some dimension admits an ascending colouring; a tensor product is elliptic iff every factor is",
    "C11": "some dimension admits a descending colouring; a tensor product is elliptic iff every factor is",
}


@dataclass(frozen=True)
class Verdict:
    verdict: str  # "Elliptic" or "NonElliptic"
    justification: str
    witness: Assignment | None = None
    factor: int | None = None
    graph_witness: dict | None = field(default=None, hash=False)

    @property
    def non_elliptic(self) -> bool:
        return self.verdict == "NonElliptic"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "justification": self.justification,
            "witness": self.witness.to_json() if self.witness else None,
            "factor": self.factor,
            "graph_witness": dict(sorted(self.graph_witness.items())) if self.graph_witness else None,
        }


def _product_colouring(G: Graph, colours: dict, k: int) -> dict:
    """Colour (v_0, ..., v_m) by the sum of factor colours modulo k."""
    out = {}
    for name in G.vertices:
        coords = name.split(",")
        out[name] = sum(colours[c] - 1 for c in coords) % k + 1
    return out


def _colour_classes_partition(X: SimplicialComplex, colours: dict) -> Partition:
    """Split each colour class into the connected pieces of its induced subcomplex."""
    blocks = []
    for c in sorted(set(colours.values())):
        remaining = {v for v, cv in colours.items() if cv == c}
        while remaining:
            start = min(remaining)
            block = {start}
            grew = True
            while grew:
                grew = False
                for e in X.faces_of_dim(1):
                    if len(e & block) == 1 and e <= remaining:
                        block |= e
                        grew = True
            remaining -= block
            blocks.append(block)
    P = Partition(blocks)
    assert all(faces_connected(X.induced(b)) for b in P.blocks)
    return P


def _graph_witness(X, scheme, model, a: Assignment):
    """Return (factor index or None, colouring of that factor's graph)."""
    tag = scheme.tag
    k = a.k
    if tag in ("C4", "C5"):
        return None, {v: a.colours[v.split(":", 1)[1]] for v in model.graph.vertices}
    if tag in ("C8", "C9"):
        return None, _product_colouring(model.graph, a.colours, k)
    if isinstance(model, SullivanPresentation):
        return None, {v: a.colours[v] for v in model.graph.vertices}
    if tag == "PS":
        P = _colour_classes_partition(X, a.colours)
        i = [Q.blocks for Q in bcp(X, scheme.index)].index(P.blocks)
        return i, {P.block_name(b): a.colours[min(b)] for b in P.blocks}
    offset = 0 if tag == "C10" else 1
    subtag = "ASC" if tag == "C10" else "DESC"
    for i, factor in enumerate(model.factors):
        r = i + offset
        part = {face_name(f): a.colours[face_name(f)] for f in X.faces_of_dim(r)}
        if check(X, ColourScheme(subtag, r), Assignment(f"dim:{r}", k, part)):
            return i, part
    raise AssertionError("no factor matches the witness")  # pragma: no cover


def ellipticity_verdict(X: SimplicialComplex, scheme, k: int, **colour_kwargs) -> Verdict:
    """Elliptic / NonElliptic for the scheme's model, via the colouring equivalence."""
    scheme = scheme_of(scheme)
    model = model_for_scheme(X, scheme, k)
    justification = _JUSTIFY[scheme.tag] + "; S_k(G) is non-elliptic iff G is k-colourable"
    a = colour(X, scheme, k, **colour_kwargs)
    if a is None:
        return Verdict("Elliptic", justification)
    factor, gw = _graph_witness(X, scheme, model, a)
    S = model if factor is None else model.factors[factor]
    if not witness_check(S, gw):
        raise AssertionError("colouring witness failed the root-of-unity check")  # pragma: no cover
    return Verdict("NonElliptic", justification, a, factor, gw)
