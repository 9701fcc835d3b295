"""JSON and text encodings for the objects of this package."""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from .affine import AffinePermutation, CyclicRankMatrix
from .complexes import ShellingCertificate, SimplicialComplex
from .perms import Permutation
from .positroid import Matroid, rational_matrix
from .qposet import QClass
from .symfunc import GrassmannClass, SymmetricFunction


def _int_list(x: Any, what: str) -> list[int]:
    if not isinstance(x, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in x):
        raise ValueError(f"{what} must be a list of integers")
    return x


def permutation_to_json(w: Permutation) -> dict:
    return {"n": w.n, "window": list(w.window)}


def permutation_from_json(obj: dict) -> Permutation:
    w = Permutation(tuple(_int_list(obj["window"], "window")))
    if obj.get("n", w.n) != w.n:
        raise ValueError("n does not match the window length")
    return w


def affine_to_json(f: AffinePermutation) -> dict:
    return {"n": f.n, "window": list(f.window)}


def affine_from_json(obj: dict) -> AffinePermutation:
    f = AffinePermutation(tuple(_int_list(obj["window"], "window")))
    if obj.get("n", f.n) != f.n:
        raise ValueError("n does not match the window length")
    return f


def qclass_to_json(q: QClass) -> dict:
    return {"k": q.k, "n": q.n, "u": list(q.u.window), "w": list(q.w.window)}


def qclass_from_json(obj: dict) -> QClass:
    return QClass(obj["k"], obj["n"], Permutation(tuple(_int_list(obj["u"], "u"))),
                  Permutation(tuple(_int_list(obj["w"], "w"))))


def rank_matrix_to_json(m: CyclicRankMatrix) -> list[list[int]]:
    return [list(r) for r in m.rows]


def rank_matrix_from_json(rows: Sequence[Sequence[int]], k: int | None = None) -> CyclicRankMatrix:
    n = len(rows)
    if k is None:
        k = rows[0][-1] if n else 0
    return CyclicRankMatrix(n, k, tuple(tuple(r) for r in rows))


def matroid_to_json(m: Matroid) -> dict:
    return {"n": m.n, "k": m.k, "bases": [list(b) for b in m.sorted_bases()]}


def matroid_from_json(obj: dict) -> Matroid:
    return Matroid(obj["n"], obj["k"], frozenset(tuple(_int_list(b, "basis")) for b in obj["bases"]))


def necklace_to_json(terms: Sequence[Sequence[int]]) -> dict:
    return {"terms": [list(t) for t in terms]}


def necklace_from_json(obj: dict) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(_int_list(t, "necklace term"))) for t in obj["terms"])


def matrix_from_json(rows: Sequence[Sequence[Any]]):
    """Entries may be integers or strings such as "3/4"."""
    try:
        return rational_matrix([[Fraction(x) if not isinstance(x, float) else _reject(x)
                                 for x in row] for row in rows])
    except (TypeError, ZeroDivisionError) as e:
        raise ValueError(f"bad matrix entry: {e}") from None


def _reject(x: float):
    raise ValueError(f"floating point entry {x} is not exact; use a string \"p/q\"")


def matrix_to_json(mat) -> list[list[str]]:
    return [[str(x) for x in row] for row in mat]


def complex_to_json(c: SimplicialComplex) -> dict:
    return {"vertices": [list(v) for v in c.vertices], "facets": [list(f) for f in c.facets]}


def complex_from_json(obj: dict) -> SimplicialComplex:
    vertices = tuple(tuple(v) for v in obj["vertices"])
    return SimplicialComplex(vertices, tuple(tuple(f) for f in obj["facets"]))


def certificate_to_json(cert: ShellingCertificate) -> dict:
    return {"facets": [[list(v) for v in f] for f in cert.facets],
            "intersection_dims": [[len(g) - 1 for g in r] for r in cert.restrictions]}


def symfunc_to_json(f: SymmetricFunction) -> dict:
    return {"basis": f.basis, "terms": [{"partition": list(p), "coeff": c} for p, c in f.terms]}


def symfunc_from_json(obj: dict) -> SymmetricFunction:
    return SymmetricFunction(obj["basis"], tuple((tuple(t["partition"]), t["coeff"])
                                                 for t in obj["terms"]))


def class_to_json(c: GrassmannClass) -> dict:
    return {"basis": "s", "k": c.k, "n": c.n,
            "terms": [{"partition": list(p), "coeff": x} for p, x in c.terms]}


def class_from_json(obj: dict) -> GrassmannClass:
    return GrassmannClass(obj["k"], obj["n"], tuple((tuple(t["partition"]), t["coeff"])
                                                    for t in obj["terms"]))
