"""Colouring schemes for simplicial complexes.

Each scheme is encoded straight from its definition as a list of
*groups*: a tuple of domain elements together with a cap, meaning no
colour may occur more than ``cap`` times inside the group.  A pair with
cap 1 is an ordinary "must differ" constraint; a face of ``m`` vertices
with cap ``m - 1`` is "not monochromatic"; a face with cap ``s`` is the
(P, s) condition.  :func:`check` evaluates the groups, and
:func:`colour` either searches them directly (``method="direct"``) or
colours the scheme's derived graph (``method="graph"``, the default).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .complex import SimplicialComplex, face_name, homogeneity, is_connected, is_strongly_connected
from .derived import (
    cart_asc_graph,
    cart_desc_graph,
    complete_asc_graph,
    complete_desc_graph,
    descending_graph,
    exchange_graph,
    full_graph,
    line_graph,
    total_graph,
    two_section,
)
from .errors import BadDimension, ColouringError, DomainMismatch, HypothesisViolated, PaletteMismatch
from .graph import is_k_colourable

FIXED = ("C1", "C2", "C3", "C4", "C5", "C6", "C8", "C9", "C10", "C11")
INDEXED = ("PS", "ASC", "DESC")


@dataclass(frozen=True)
class ColourScheme:
    """``C1`` ... ``C11`` (no ``C7``; use ``PS``), ``PS(s)``, ``ASC(r)`` or ``DESC(s)``."""

    tag: str
    index: int | None = None

    def __post_init__(self):
        if self.tag in FIXED:
            if self.index is not None:
                raise ColouringError(f"{self.tag} takes no index")
        elif self.tag in INDEXED:
            if self.index is None:
                raise ColouringError(f"{self.tag} needs an index")
            if self.tag == "PS" and self.index < 1:
                raise ColouringError("PS(s) needs s >= 1")
            if self.index < 0:
                raise BadDimension("dimension index must be non-negative")
        else:
            raise ColouringError(f"unknown colouring scheme {self.tag!r}")

    @classmethod
    def parse(cls, text) -> ColourScheme:
        """Accepts ``c1``..``c11``, ``c7:s``, ``ps:s``, ``asc:r``, ``desc:s``."""
        if isinstance(text, ColourScheme):
            return text
        name, _, idx = str(text).strip().lower().partition(":")
        index = int(idx) if idx else None
        if name == "c7":
            return cls("PS", 1 if index is None else index)
        if name in ("ps", "asc", "desc"):
            return cls(name.upper(), index)
        if name.startswith("c") and name[1:].isdigit():
            return cls(name.upper(), index)
        raise ColouringError(f"unknown colouring scheme {text!r}")

    def __str__(self):
        if self.index is None:
            return self.tag.lower()
        return f"{self.tag.lower()}:{self.index}"

    @property
    def domain(self) -> str:
        if self.tag in ("C1", "PS"):
            return "vertices"
        if self.tag == "C3":
            return "both"
        if self.tag in ("ASC", "DESC"):
            return f"dim:{self.index}"
        return "faces"


def scheme_of(s) -> ColourScheme:
    return ColourScheme.parse(s)


@dataclass(frozen=True)
class Assignment:
    """A colouring map on a declared domain, colours drawn from ``1..k``."""

    domain: str
    k: int
    colours: dict = field(hash=False)

    def __post_init__(self):
        bad = {e: c for e, c in self.colours.items() if not (isinstance(c, int) and 1 <= c <= self.k)}
        if bad:
            raise PaletteMismatch(f"colours outside 1..{self.k}: {bad}")

    def to_json(self) -> dict:
        return {"k": self.k, "domain": self.domain, "colours": dict(sorted(self.colours.items()))}

    @classmethod
    def from_json(cls, obj) -> Assignment:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["domain"], int(obj["k"]), {str(e): int(c) for e, c in obj["colours"].items()})

    def __getitem__(self, key):
        return self.colours[key]


def domain_elements(X: SimplicialComplex, domain: str) -> list[str]:
    if domain == "vertices":
        return list(X.vertices)
    if domain == "faces":
        return [face_name(f) for f in X]
    if domain == "both":
        return [f"v:{v}" for v in X.vertices] + [f"f:{face_name(f)}" for f in X]
    if domain.startswith("dim:"):
        return [face_name(f) for f in X.faces_of_dim(int(domain[4:]))]
    raise DomainMismatch(f"unknown domain {domain!r}")


# -- definitions as constraint groups -----------------------------------------

def _ascending_pairs(X, r):
    """σ, τ in X^r joined in an (r+1)-simplex."""
    faces = X.faces_of_dim(r)
    return [(s, t) for s, t in combinations(faces, 2) if len(s | t) == r + 2 and (s | t) in X]


def _descending_pairs(X, r):
    """σ, τ in X^r meeting in an (r-1)-simplex."""
    faces = X.faces_of_dim(r)
    return [(s, t) for s, t in combinations(faces, 2) if len(s & t) == r and r > 0 and (s & t) in X]


def _named(pairs, prefix=""):
    return [((prefix + face_name(s), prefix + face_name(t)), 1) for s, t in pairs]


def _cross_dimension_pairs(X):
    return [
        ((face_name(s), face_name(t)), 1)
        for s, t in combinations(X.faces, 2)
        if len(s) != len(t)
    ]


@lru_cache(maxsize=512)
def constraint_groups(X: SimplicialComplex, scheme: ColourScheme, literal_total: bool = False) -> tuple:
    """``(group, cap)`` pairs encoding the scheme's definition on ``X``.

    Not defined for the existential schemes C10 and C11.
    """
    tag, n = scheme.tag, X.dim
    if tag == "C1":
        # no monochromatic face with two or more vertices
        return tuple((tuple(sorted(f)), len(f) - 1) for f in X if len(f) >= 2)
    if tag == "PS":
        s = scheme.index
        return tuple((tuple(sorted(f)), s) for f in X if len(f) > s)
    if tag == "C2":
        return tuple(((face_name(s), face_name(t)), 1) for s, t in combinations(X.faces, 2) if s & t)
    if tag == "C3":
        groups = [((f"v:{a}", f"v:{b}"), 1) for a, b in (sorted(e) for e in X.faces_of_dim(1))]
        groups += _named([(s, t) for s, t in combinations(X.faces, 2) if s & t], "f:")
        for u in X.vertices:
            for f in X:
                if literal_total or u in f:
                    groups.append(((f"v:{u}", f"f:{face_name(f)}"), 1))
        return tuple(groups)
    if tag == "C4":
        groups = [g for r in range(n + 1) for g in _named(_ascending_pairs(X, r))]
        return tuple(groups + _cross_dimension_pairs(X))
    if tag == "C5":
        groups = [g for r in range(n + 1) for g in _named(_descending_pairs(X, r))]
        return tuple(groups + _cross_dimension_pairs(X))
    if tag == "C6":
        groups = _named([(s, t) for s, t in combinations(X.faces, 2) if s < t or t < s])
        groups += _named(_ascending_pairs(X, 0))
        groups += [g for r in range(1, n + 1) for g in _named(_descending_pairs(X, r))]
        return tuple(groups)
    if tag == "C8":
        return tuple(g for r in range(n + 1) for g in _named(_ascending_pairs(X, r)))
    if tag == "C9":
        return tuple(g for r in range(n + 1) for g in _named(_descending_pairs(X, r)))
    if tag == "ASC":
        _require_dim(X, scheme.index)
        return tuple(_named(_ascending_pairs(X, scheme.index)))
    if tag == "DESC":
        _require_dim(X, scheme.index)
        return tuple(_named(_descending_pairs(X, scheme.index)))
    raise ColouringError(f"{tag} is existential over dimensions and has no single constraint set")


def _require_dim(X, r):
    if not 0 <= r <= X.dim:
        raise BadDimension(f"dimension {r} outside 0..{X.dim}")


def _existential_dims(X, scheme) -> list[ColourScheme]:
    if scheme.tag == "C10":
        return [ColourScheme("ASC", r) for r in range(X.dim)]
    return [ColourScheme("DESC", s) for s in range(1, X.dim + 1)]


def _groups_hold(groups, colours) -> bool:
    for members, cap in groups:
        counts = Counter(colours[m] for m in members)
        if max(counts.values()) > cap:
            return False
    return True


def _restrict(X, colours, r) -> dict:
    return {face_name(f): colours[face_name(f)] for f in X.faces_of_dim(r)}


def check(X: SimplicialComplex, scheme, a: Assignment, *, literal_total: bool = False) -> bool:
    """Does ``a`` satisfy the scheme's definition on ``X``?"""
    scheme = scheme_of(scheme)
    if a.domain != scheme.domain:
        raise DomainMismatch(f"scheme {scheme} needs domain {scheme.domain!r}, assignment has {a.domain!r}")
    if scheme.tag in ("ASC", "DESC"):
        _require_dim(X, scheme.index)
    expected = domain_elements(X, scheme.domain)
    if set(a.colours) != set(expected):
        missing = sorted(set(expected) - set(a.colours))
        extra = sorted(set(a.colours) - set(expected))
        raise DomainMismatch(f"assignment is not total on its domain (missing {missing}, extra {extra})")
    if scheme.tag in ("C10", "C11"):
        return any(
            _groups_hold(constraint_groups(X, sub), _restrict(X, a.colours, sub.index))
            for sub in _existential_dims(X, scheme)
        )
    return _groups_hold(constraint_groups(X, scheme, literal_total), a.colours)


# -- direct search over the constraint groups ---------------------------------

def solve_groups(elements: list, groups, k: int) -> dict | None:
    """Backtracking with forward checking and fewest-options-first selection.

    Only one previously unused colour is ever tried at a node, since unused
    colours are interchangeable under every cap constraint.
    """
    n = len(elements)
    if n == 0:
        return {}
    if k <= 0:
        return None
    idx = {e: i for i, e in enumerate(elements)}
    members = [tuple(idx[m] for m in g) for g, _ in groups]
    caps = [cap for _, cap in groups]
    var_groups = [[] for _ in range(n)]
    for gi, ms in enumerate(members):
        for m in ms:
            var_groups[m].append(gi)
    counts = [[0] * (k + 2) for _ in groups]
    colour = [0] * n

    def options(v, used):
        top = min(k, used + 1)
        return [c for c in range(1, top + 1) if all(counts[g][c] < caps[g] for g in var_groups[v])]

    def search(used, left):
        if left == 0:
            return True
        best, best_opts = -1, None
        for v in range(n):
            if colour[v]:
                continue
            opts = options(v, used)
            if not opts:
                return False
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = v, opts
        for c in best_opts:
            colour[best] = c
            for g in var_groups[best]:
                counts[g][c] += 1
            if search(max(used, c), left - 1):
                return True
            for g in var_groups[best]:
                counts[g][c] -= 1
            colour[best] = 0
        return False

    if not search(0, n):
        return None
    return {e: colour[i] for i, e in enumerate(elements)}


def _hypotheses(X, scheme):
    if scheme.tag in ("C8", "C9", "C10", "C11", "ASC", "DESC"):
        if not (is_strongly_connected(X) and homogeneity(X).pure):
            raise HypothesisViolated(f"{scheme} needs a strongly connected pure complex")
    elif not is_connected(X):
        raise HypothesisViolated(f"{scheme} needs a connected complex")


def _fill(X, partial: dict, domain="faces") -> dict:
    out = {e: 1 for e in domain_elements(X, domain)}
    out.update(partial)
    return out


def _colour_direct(X, scheme, k, literal_total):
    if scheme.tag in ("C10", "C11"):
        for sub in _existential_dims(X, scheme):
            found = solve_groups(domain_elements(X, sub.domain), constraint_groups(X, sub), k)
            if found is not None:
                return _fill(X, found)
        return None
    return solve_groups(domain_elements(X, scheme.domain), constraint_groups(X, scheme, literal_total), k)


def _fibre_colours(X, dims, product_colouring) -> dict:
    """Read each factor's colouring off the fibre through the first vertex of every factor."""
    factors = [[face_name(f) for f in X.faces_of_dim(r)] for r in dims]
    base = [fs[0] for fs in factors]
    out = {}
    for i, fs in enumerate(factors):
        for name in fs:
            coords = list(base)
            coords[i] = name
            out[name] = product_colouring[",".join(coords)]
    return out


def _strip_prefix(colouring: dict) -> dict:
    return {v.split(":", 1)[1]: c for v, c in colouring.items()}


def _colour_graph(X, scheme, k, literal_total):
    tag = scheme.tag
    if tag == "PS":
        return _colour_direct(X, scheme, k, literal_total)
    if tag == "C10" or tag == "C11":
        for sub in _existential_dims(X, scheme):
            found = _colour_graph(X, sub, k, literal_total)
            if found is not None:
                return _fill(X, found)
        return None
    if tag in ("C8", "C9") and X.dim == 0:
        # the only dimension is unconstrained
        return _fill(X, {}) if k >= 1 else None
    graph = {
        "C1": lambda: two_section(X),
        "C2": lambda: line_graph(X),
        "C3": lambda: total_graph(X, literal=literal_total),
        "C4": lambda: complete_asc_graph(X),
        "C5": lambda: complete_desc_graph(X),
        "C6": lambda: full_graph(X),
        "C8": lambda: cart_asc_graph(X),
        "C9": lambda: cart_desc_graph(X),
        "ASC": lambda: exchange_graph(X, scheme.index),
        "DESC": lambda: descending_graph(X, scheme.index),
    }[tag]()
    found = is_k_colourable(graph, k)
    if found is None:
        return None
    if tag in ("C4", "C5"):
        return _strip_prefix(found)
    if tag == "C8":
        return _fill(X, _fibre_colours(X, range(X.dim), found))
    if tag == "C9":
        return _fill(X, _fibre_colours(X, range(1, X.dim + 1), found))
    return found


def colour(
    X: SimplicialComplex,
    scheme,
    k: int,
    *,
    method: str = "graph",
    theorem_backed: bool = False,
    literal_total: bool = False,
) -> Assignment | None:
    """A valid ``k``-colouring for ``scheme``, or ``None``.

    ``method="graph"`` colours the scheme's derived graph; ``"direct"``
    searches the definition itself.  ``theorem_backed=True`` insists on the
    connectivity hypotheses under which the graph encodings are theorems.
    """
    scheme = scheme_of(scheme)
    if k < 0:
        raise ValueError("k must be non-negative")
    if scheme.tag in ("ASC", "DESC"):
        _require_dim(X, scheme.index)
    if theorem_backed:
        _hypotheses(X, scheme)
    if method == "graph":
        found = _colour_graph(X, scheme, k, literal_total)
    elif method == "direct":
        found = _colour_direct(X, scheme, k, literal_total)
    else:
        raise ValueError(f"unknown method {method!r}")
    if found is None:
        return None
    a = Assignment(scheme.domain, k, found)
    assert check(X, scheme, a, literal_total=literal_total)
    return a


def is_colourable(X: SimplicialComplex, scheme, k: int, **kwargs) -> bool:
    return colour(X, scheme, k, **kwargs) is not None


def chromatic(X: SimplicialComplex, scheme, **kwargs) -> int:
    """Least ``k`` for which :func:`colour` succeeds."""
    scheme = scheme_of(scheme)
    if scheme.tag in ("C10", "C11") and X.dim == 0:
        raise BadDimension(f"{scheme} has no admissible dimension on a 0-dimensional complex")
    limit = len(domain_elements(X, scheme.domain))
    for k in range(limit + 1):
        if colour(X, scheme, k, **kwargs) is not None:
            return k
    raise ColouringError(f"no {scheme} colouring with up to {limit} colours")  # pragma: no cover
