"""CNF formulas that are satisfiable iff an r-coloring of [n] avoids the pattern.

Variable ``(i - 1) * r + c`` states that position i has color c. Three clause
families are generated: positive (each position gets some color), negative
(no pattern is monochromatic in any color) and optional (at most one color
per position).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..colorings import Coloring
from ..diffsets import DiffSet, enumerate_aps, enumerate_diffseqs

__all__ = ["CnfInstance", "var", "encode", "patterns", "decode_model", "ModelError"]


class ModelError(ValueError):
    """A satisfying assignment does not describe a valid coloring."""


def var(i: int, c: int, r: int) -> int:
    return (i - 1) * r + c


def patterns(D: DiffSet, k: int, n: int, mode: str):
    """Position tuples of every k-term pattern in [n]."""
    if mode == "diffseq":
        return enumerate_diffseqs(D, k, n)
    if mode == "ap":
        return (tuple(a + t * g for t in range(k)) for a, g in enumerate_aps(D, k, n))
    raise ValueError("mode must be 'diffseq' or 'ap'")


@dataclass
class CnfInstance:
    n: int
    r: int
    k: int
    mode: str
    D: str
    clauses: list[list[int]] = field(default_factory=list)
    n_positive: int = 0
    n_negative: int = 0
    n_optional: int = 0

    @property
    def var_count(self) -> int:
        return self.n * self.r

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    def var(self, i: int, c: int) -> int:
        return var(i, c, self.r)


def encode(D: DiffSet, k: int, r: int, n: int, mode: str = "diffseq") -> CnfInstance:
    if k < 2 or r < 1 or n < 1:
        raise ValueError("need k >= 2, r >= 1, n >= 1")
    inst = CnfInstance(n=n, r=r, k=k, mode=mode, D=D.name)
    cl = inst.clauses
    for i in range(1, n + 1):
        cl.append([var(i, c, r) for c in range(1, r + 1)])
    inst.n_positive = n
    seen = set()
    for xs in patterns(D, k, n, mode):
        if xs in seen:
            continue
        seen.add(xs)
        for c in range(1, r + 1):
            cl.append([-var(x, c, r) for x in xs])
    inst.n_negative = len(cl) - n
    for i in range(1, n + 1):
        for c, c2 in combinations(range(1, r + 1), 2):
            cl.append([-var(i, c, r), -var(i, c2, r)])
    inst.n_optional = len(cl) - n - inst.n_negative
    return inst


def decode_model(inst: CnfInstance, model) -> Coloring:
    """Turn a model into a coloring.

    ``model`` is either DIMACS literals or a bool sequence whose entry ``v - 1``
    is the value of variable v.
    """
    true = _true_vars(model)
    colors = []
    for i in range(1, inst.n + 1):
        on = [c for c in range(1, inst.r + 1) if var(i, c, inst.r) in true]
        if len(on) != 1:
            raise ModelError(f"position {i} has colors {on}")
        colors.append(on[0])
    return Coloring(colors, r=inst.r)


def _true_vars(model) -> set[int]:
    model = list(model)
    if model and isinstance(model[0], bool):
        return {v for v, val in enumerate(model, 1) if val}
    return {lit for lit in model if lit > 0}
