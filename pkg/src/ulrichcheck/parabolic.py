"""Parabolic contexts: a node set J with an equivariant polarization.

A context fixes the flag variety G/P_J together with the ample class
O(1) = (x) L_j^{b_j}.  It caches the roots with support on J (whose count
is the dimension of G/P_J) and the polarization weight sum b_j * w_j.

Membership of a positive root in the J-supported set is decided on integer
simple-root coordinates: (w_j, alpha) != 0 exactly when the alpha_j
coefficient of alpha is positive.  The test suite checks this against the
rational pairing definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Mapping, Sequence

from .rootspace import Root, RootSystem, Weight, dot


@dataclass(frozen=True)
class ParabolicContext:
    rs: RootSystem
    nodes: tuple[int, ...]
    polarization: tuple[int, ...]
    pol_weight: Weight
    phi_j_plus: tuple[Root, ...]

    @property
    def dim(self) -> int:
        """dim G/P_J = number of positive roots with support on J."""
        return len(self.phi_j_plus)

    @property
    def is_minimal_ample(self) -> bool:
        return all(b == 1 for b in self.polarization)

    def contains(self, root: Root) -> bool:
        return any(root.simple_coords[j - 1] > 0 for j in self.nodes)

    def is_pj_dominant(self, lam: Weight) -> bool:
        """a_i >= 0 for every node outside J (highest weight of a P_J-irrep)."""
        self.rs._check_rank(lam)
        return all(lam.fw_coords[i] >= 0
                   for i in range(self.rs.rank) if (i + 1) not in self.nodes)

    def to_json_dict(self) -> dict:
        return {
            "type": str(self.rs.lie_type),
            "nodes": list(self.nodes),
            "polarization": list(self.polarization),
            "dim": self.dim,
        }


def make_context(rs: RootSystem,
                 nodes: Iterable[int],
                 polarization: Mapping[int, int] | Sequence[int] | None = None,
                 ) -> ParabolicContext:
    """Build the context for (J, b); b defaults to the minimal ample class.

    `polarization` is either a sequence aligned with sorted(J) or a mapping
    node -> b_j.  Every b_j must be a positive integer and J nonempty.
    """
    J = tuple(sorted(set(int(j) for j in nodes)))
    if not J:
        raise ValueError("J must be a nonempty set of Dynkin nodes")
    if J[0] < 1 or J[-1] > rs.rank:
        raise ValueError(f"nodes {J} out of range 1..{rs.rank}")
    if polarization is None:
        b = tuple(1 for _ in J)
    elif isinstance(polarization, Mapping):
        b = tuple(int(polarization[j]) for j in J)
    else:
        b = tuple(int(x) for x in polarization)
        if len(b) != len(J):
            raise ValueError(f"polarization has {len(b)} entries for {len(J)} nodes")
    if any(x < 1 for x in b):
        raise ValueError(f"polarization coefficients must be >= 1, got {b}")

    pol = Weight(tuple(Fraction(dict(zip(J, b)).get(i + 1, 0))
                       for i in range(rs.rank)))
    supported = tuple(r for r in rs.positive_roots
                      if any(r.simple_coords[j - 1] > 0 for j in J))
    return ParabolicContext(rs=rs, nodes=J, polarization=b,
                            pol_weight=pol, phi_j_plus=supported)


def restrict_weight(lam: Weight, nodes: Iterable[int]) -> Weight:
    """lambda_S: zero out every fundamental-weight coordinate outside S."""
    S = set(int(i) for i in nodes)
    if any(i < 1 or i > lam.rank for i in S):
        raise ValueError(f"S={sorted(S)} out of range 1..{lam.rank}")
    return Weight(tuple(a if (i + 1) in S else Fraction(0)
                        for i, a in enumerate(lam.fw_coords)))


@dataclass(frozen=True)
class IntTables:
    """Denominator-cleared pairing tables for one context.

    For the k-th root of phi_j_plus (deterministic order):
      num[k][i] = scale * (w_{i+1}, alpha_k)      -- all entries integers
      const[k]  = scale * (rho, alpha_k)
      den[k]    = scale * (pol_weight, alpha_k)   -- positive
    so phi_lambda(alpha_k) = (const[k] + sum_i num[k][i]*a_i) / den[k].
    """

    scale: int
    num: tuple[tuple[int, ...], ...]
    const: tuple[int, ...]
    den: tuple[int, ...]


@lru_cache(maxsize=None)
def int_tables(ctx: ParabolicContext) -> IntTables:
    raw = [[dot(fw, r.ambient) for fw in ctx.rs.fundamental_weights]
           for r in ctx.phi_j_plus]
    scale = lcm(*(x.denominator for row in raw for x in row), 1)
    num = tuple(tuple(int(x * scale) for x in row) for row in raw)
    const = tuple(sum(row) for row in num)
    den = tuple(sum(b * row[j - 1] for j, b in zip(ctx.nodes, ctx.polarization))
                for row in num)
    assert all(d > 0 for d in den)
    return IntTables(scale=scale, num=num, const=const, den=den)
