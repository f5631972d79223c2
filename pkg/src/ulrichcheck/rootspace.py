"""Exact ambient realizations of the finite root systems A-G.

Every root system is built from explicit rational coordinates: type A_n in
R^{n+1}, types B/C/D in R^n, the E family inside the E8 lattice in R^8,
F4 in R^4 and G2 inside the sum-zero plane of R^3.  All arithmetic is done
with `fractions.Fraction`; there is no floating point anywhere in this
package and no tolerance parameters exist.

The invariant bilinear form is the ambient Euclidean dot product of these
realizations.  Every quantity the rest of the package consumes (the map
phi, slopes, singularity tests) is a ratio of pairings, hence independent
of the positive scale of the form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import lcm
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]

#: |Phi^+| for every supported simple type, keyed by (family, rank) rules.
POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def vec(entries: Iterable) -> Vec:
    return tuple(Fraction(x) for x in entries)


def dot(v: Vec, w: Vec) -> Fraction:
    """Ambient dot product; rejects vectors of different lengths."""
    if len(v) != len(w):
        raise ValueError(f"dimension mismatch: {len(v)} vs {len(w)}")
    return sum((a * b for a, b in zip(v, w)), Fraction(0))


def vadd(v: Vec, w: Vec) -> Vec:
    return tuple(a + b for a, b in zip(v, w))


def vscale(c, v: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in v)


def solve_in_basis(cols: Sequence[Vec], b: Vec) -> tuple[Fraction, ...]:
    """Solve sum_k x_k * cols[k] = b exactly.

    The columns must be linearly independent and the system consistent;
    anything else raises.  Plain Gaussian elimination over Fraction.
    """
    m, n = len(b), len(cols)
    aug = [[cols[j][i] for j in range(n)] + [b[i]] for i in range(m)]
    pivots = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, m) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("columns are linearly dependent")
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    for r in range(row, m):
        if aug[r][n] != 0:
            raise ValueError("inconsistent system: vector outside the span")
    return tuple(aug[r][n] for r in range(n))


def invert_matrix(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse of a small square matrix (Gauss-Jordan over Fraction)."""
    n = len(rows)
    aug = [[Fraction(x) for x in rows[i]] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class LieType:
    """A simple Lie type, e.g. LieType('E', 6)."""

    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        ok = (
            (fam == "A" and n >= 1)
            or (fam in ("B", "C") and n >= 2)
            or (fam == "D" and n >= 3)
            or (fam == "E" and n in (6, 7, 8))
            or (fam == "F" and n == 4)
            or (fam == "G" and n == 2)
        )
        if not ok:
            raise ValueError(f"invalid simple type {fam}{n}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        text = text.strip()
        if len(text) < 2 or text[0].upper() not in "ABCDEFG" or not text[1:].isdigit():
            raise ValueError(f"cannot parse Lie type {text!r} (expected e.g. 'E6', 'A3')")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    """A root: ambient vector plus its integer coordinates in the simple basis."""

    ambient: Vec
    simple_coords: tuple[int, ...]
    height: int

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def order_key(self):
        """Deterministic root order used everywhere: height, then lex coords."""
        return (self.height, self.simple_coords)


@dataclass(frozen=True)
class Weight:
    """A weight in the fundamental-weight basis (exact rational coordinates)."""

    fw_coords: Vec

    @classmethod
    def of(cls, coords: Iterable) -> "Weight":
        return cls(vec(coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls(tuple(Fraction(0) for _ in range(rank)))

    @classmethod
    def fundamental(cls, rank: int, i: int) -> "Weight":
        """The i-th fundamental weight (1-based node index)."""
        return cls(tuple(Fraction(int(k == i - 1)) for k in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.fw_coords)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.fw_coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(vadd(self.fw_coords, other.fw_coords))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.fw_coords, other.fw_coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.fw_coords))

    def __rmul__(self, c) -> "Weight":
        return Weight(vscale(c, self.fw_coords))

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.fw_coords) + ")"


@dataclass(frozen=True)
class RootSystem:
    """An irreducible root system with exact ambient data.

    `positive_roots` is sorted by (height, simple coordinates); that order is
    the deterministic root order used by verdicts and certificates.
    """

    lie_type: LieType
    simple_roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    fundamental_weights: tuple[Vec, ...]
    rho: Weight
    cartan: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def pairing(self, v: Vec, w: Vec) -> Fraction:
        """The invariant form: the ambient dot product of this realization."""
        return dot(v, w)

    def to_ambient(self, w: Weight) -> Vec:
        self._check_rank(w)
        out = tuple(Fraction(0) for _ in self.fundamental_weights[0])
        for a, fw in zip(w.fw_coords, self.fundamental_weights):
            if a:
                out = vadd(out, vscale(a, fw))
        return out

    def weight_root_pairing(self, w: Weight, root: Root) -> Fraction:
        """(w, root) computed from fw coordinates; exact and fast."""
        self._check_rank(w)
        scale, table = _fw_root_pairing(self)
        row = table[self.root_index(root)]
        return Fraction(sum(a * p for a, p in zip(w.fw_coords, row)), scale)

    def is_dominant(self, w: Weight) -> bool:
        self._check_rank(w)
        return all(a >= 0 for a in w.fw_coords)

    def is_strongly_dominant(self, w: Weight) -> bool:
        self._check_rank(w)
        return all(a > 0 for a in w.fw_coords)

    def reflect(self, w: Weight, i: int) -> Weight:
        """Simple reflection s_i in fw coordinates (i is a 1-based node)."""
        self._check_rank(w)
        c = w.fw_coords[i - 1]
        row = self.cartan[i - 1]
        return Weight(tuple(a - c * r for a, r in zip(w.fw_coords, row)))

    def root_index(self, root: Root) -> int:
        idx = _root_indices(self).get(root)
        if idx is None:
            raise ValueError(f"not a positive root of {self.lie_type}: {root}")
        return idx

    def root_from_simple_coords(self, coords: Sequence[int]) -> Root:
        """Look up the positive root with the given simple coordinates."""
        key = tuple(int(c) for c in coords)
        for r in self.positive_roots:
            if r.simple_coords == key:
                return r
        raise ValueError(f"no positive root of {self.lie_type} with coordinates {key}")

    @property
    def highest_root(self) -> Root:
        top = self.positive_roots[-1]
        assert len(self.positive_roots) == 1 or \
            top.height > self.positive_roots[-2].height, "highest root not unique"
        return top

    def half_sum_of_positive_roots(self) -> Vec:
        out = tuple(Fraction(0) for _ in self.positive_roots[0].ambient)
        for r in self.positive_roots:
            out = vadd(out, r.ambient)
        return vscale(Fraction(1, 2), out)

    def _check_rank(self, w: Weight) -> None:
        if w.rank != self.rank:
            raise ValueError(f"weight has {w.rank} coordinates, expected {self.rank}")

    def to_json_dict(self) -> dict:
        from . import jsonio

        return {
            "type": str(self.lie_type),
            "simple_roots": [jsonio.root_to_json(r) for r in self.simple_roots],
            "positive_roots": [jsonio.root_to_json(r) for r in self.positive_roots],
            "fundamental_weights": [[jsonio.rat_str(x) for x in fw]
                                    for fw in self.fundamental_weights],
            "rho": [jsonio.rat_str(x) for x in self.rho.fw_coords],
        }


# -- ambient realizations ----------------------------------------------------

def _unit(n: int, i: int) -> Vec:
    return tuple(Fraction(int(k == i)) for k in range(n))


def _realization_classical(family: str, n: int) -> tuple[list[Vec], list[Vec]]:
    """Simple roots and the full root set for types A-D (epsilon realizations)."""
    if family == "A":
        dim = n + 1
        simple = [vec([int(k == i) - int(k == i + 1) for k in range(dim)])
                  for i in range(n)]
        roots = [vadd(_unit(dim, i), vscale(-1, _unit(dim, j)))
                 for i in range(dim) for j in range(dim) if i != j]
        return simple, roots
    simple = [vec([int(k == i) - int(k == i + 1) for k in range(n)])
              for i in range(n - 1)]
    roots: list[Vec] = []
    for i, j in combinations(range(n), 2):
        for si, sj in product((1, -1), repeat=2):
            roots.append(vadd(vscale(si, _unit(n, i)), vscale(sj, _unit(n, j))))
    if family == "B":
        simple.append(_unit(n, n - 1))
        roots += [vscale(s, _unit(n, i)) for i in range(n) for s in (1, -1)]
    elif family == "C":
        simple.append(vscale(2, _unit(n, n - 1)))
        roots += [vscale(2 * s, _unit(n, i)) for i in range(n) for s in (1, -1)]
    elif family == "D":
        simple.append(vec([int(k == n - 2) + int(k == n - 1) for k in range(n)]))
    else:
        raise AssertionError(family)
    return simple, roots


def _realization_e8() -> tuple[list[Vec], list[Vec]]:
    """The 240 norm-2 vectors of the even E8 lattice, with the standard base:
    alpha_1 = (e1 - e2 - ... - e7 + e8)/2, alpha_2 = e1 + e2,
    alpha_i = e_{i-1} - e_{i-2} for 3 <= i <= 8.
    """
    simple = [
        vec([Fraction(1, 2), *([Fraction(-1, 2)] * 6), Fraction(1, 2)]),
        vec([1, 1, 0, 0, 0, 0, 0, 0]),
    ]
    for i in range(3, 9):
        simple.append(vec([int(k == i - 2) - int(k == i - 3) for k in range(8)]))
    roots: list[Vec] = []
    for i, j in combinations(range(8), 2):
        for si, sj in product((1, -1), repeat=2):
            roots.append(vadd(vscale(si, _unit(8, i)), vscale(sj, _unit(8, j))))
    for signs in product((Fraction(1, 2), Fraction(-1, 2)), repeat=8):
        if sum(1 for s in signs if s < 0) % 2 == 0:
            roots.append(signs)
    assert len(roots) == 240
    return simple, roots


def _realization_f4() -> tuple[list[Vec], list[Vec]]:
    simple = [
        vec([0, 1, -1, 0]),
        vec([0, 0, 1, -1]),
        vec([0, 0, 0, 1]),
        vec([Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)]),
    ]
    roots: list[Vec] = [vscale(s, _unit(4, i)) for i in range(4) for s in (1, -1)]
    for i, j in combinations(range(4), 2):
        for si, sj in product((1, -1), repeat=2):
            roots.append(vadd(vscale(si, _unit(4, i)), vscale(sj, _unit(4, j))))
    for signs in product((Fraction(1, 2), Fraction(-1, 2)), repeat=4):
        roots.append(signs)
    assert len(roots) == 48
    return simple, roots


def _realization_g2() -> tuple[list[Vec], list[Vec]]:
    """G2 inside the plane { sum of coordinates = 0 } of R^3."""
    simple = [vec([0, 1, -1]), vec([1, -2, 1])]
    roots: list[Vec] = []
    for i, j in combinations(range(3), 2):
        base = vadd(_unit(3, i), vscale(-1, _unit(3, j)))
        roots += [base, vscale(-1, base)]
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        base = vadd(vscale(2, _unit(3, i)),
                    vadd(vscale(-1, _unit(3, j)), vscale(-1, _unit(3, k))))
        roots += [base, vscale(-1, base)]
    assert len(roots) == 12
    return simple, roots


@lru_cache(maxsize=None)
def build(lie_type: LieType | str) -> RootSystem:
    """Construct the root system of a simple type.

    The E types are carved out of the E8 lattice: a root of E8 belongs to
    E7 (resp. E6) exactly when its coordinates on alpha_8 (resp. alpha_7 and
    alpha_8) vanish.  Fundamental weights are solved from the defining
    duality 2(w_i, a_j)/(a_j, a_j) = delta_ij inside the span of the base.
    """
    lt = LieType.parse(lie_type) if isinstance(lie_type, str) else lie_type

    if lt.family == "E":
        simple8, roots = _realization_e8()
        coords_all = _coords_in_basis(simple8, roots)
        keep = []
        for r, c in zip(roots, coords_all):
            if all(c[k] == 0 for k in range(lt.rank, 8)):
                keep.append((r, c[: lt.rank]))
        roots = [r for r, _ in keep]
        coords = [c for _, c in keep]
        simple = simple8[: lt.rank]
    else:
        if lt.family == "F":
            simple, roots = _realization_f4()
        elif lt.family == "G":
            simple, roots = _realization_g2()
        else:
            simple, roots = _realization_classical(lt.family, lt.rank)
        coords = _coords_in_basis(simple, roots)

    all_roots = []
    for ambient, c in zip(roots, coords):
        ic = tuple(int(x) for x in c)
        assert all(Fraction(i) == x for i, x in zip(ic, c)), "non-integral root coords"
        all_roots.append(Root(ambient=ambient, simple_coords=ic, height=sum(ic)))

    positive = [r for r in all_roots
                if all(c >= 0 for c in r.simple_coords) and r.height > 0]
    expected = POSITIVE_ROOT_COUNTS[lt.family](lt.rank)
    assert len(positive) == expected, (lt, len(positive), expected)
    assert 2 * len(positive) == len(all_roots)
    positive.sort(key=Root.order_key)

    simple_as_roots = []
    for i in range(lt.rank):
        coord = tuple(int(k == i) for k in range(lt.rank))
        match = [r for r in positive if r.simple_coords == coord]
        assert len(match) == 1
        simple_as_roots.append(match[0])

    cartan = tuple(
        tuple(int(2 * dot(a.ambient, b.ambient) / dot(b.ambient, b.ambient))
              for b in simple_as_roots)
        for a in simple_as_roots
    )
    inv = invert_matrix(cartan)
    fws = []
    for i in range(lt.rank):
        w = tuple(Fraction(0) for _ in simple[0])
        for k in range(lt.rank):
            if inv[i][k]:
                w = vadd(w, vscale(inv[i][k], simple_as_roots[k].ambient))
        fws.append(w)

    for i, fw in enumerate(fws):
        for j, a in enumerate(simple_as_roots):
            want = Fraction(int(i == j))
            got = 2 * dot(fw, a.ambient) / dot(a.ambient, a.ambient)
            assert got == want, f"fundamental weight duality broken at ({i},{j})"
    if lt.family == "G":
        for r in all_roots:
            assert sum(r.ambient) == 0
        for fw in fws:
            assert sum(fw) == 0

    return RootSystem(
        lie_type=lt,
        simple_roots=tuple(simple_as_roots),
        positive_roots=tuple(positive),
        fundamental_weights=tuple(fws),
        rho=Weight(tuple(Fraction(1) for _ in range(lt.rank))),
        cartan=cartan,
    )


def _coords_in_basis(simple: Sequence[Vec], roots: Sequence[Vec]):
    """Coordinates of every root in the simple basis, via one matrix solve."""
    dim, n = len(simple[0]), len(simple)
    coords = []
    if dim == n:
        inv = invert_matrix([[simple[j][i] for j in range(n)] for i in range(n)])
        for r in roots:
            coords.append(tuple(sum(inv[k][i] * r[i] for i in range(dim))
                                for k in range(n)))
    else:
        for r in roots:
            coords.append(solve_in_basis(simple, r))
    return coords


@lru_cache(maxsize=None)
def _root_indices(rs: RootSystem) -> dict:
    return {r: k for k, r in enumerate(rs.positive_roots)}


@lru_cache(maxsize=None)
def _fw_root_pairing(rs: RootSystem) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Integer table scale, T with T[k][i] = scale * (w_i, alpha_k) over Phi^+.

    Clearing denominators once lets the hot paths (singularity counting, the
    search core) run on plain machine integers.
    """
    raw = [[dot(fw, r.ambient) for fw in rs.fundamental_weights]
           for r in rs.positive_roots]
    scale = lcm(*(x.denominator for row in raw for x in row), 1)
    table = tuple(tuple(int(x * scale) for x in row) for row in raw)
    return scale, table
