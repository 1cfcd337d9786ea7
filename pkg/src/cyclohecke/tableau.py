"""Standard tableaux on multipartitions, contents, and seminormal ratios.

The content of k sitting in row a, column b of component u is
eps^{p_u} * q^{b-a} * Q_{d_u} where u = d*(p_u - 1) + d_u.  The exponent
p_u (rather than p_u - 1) is forced by the cyclotomic relation: the
eigenvalues of L_1 must run through the parameter list
(eps Q_1, ..., eps^p Q_d).
"""

from functools import lru_cache

from .combin import Multipartition, component_index
from .exactnum import PoleError


class StandardTableau:
    """A bijective filling of a multipartition diagram by 1..n."""

    __slots__ = ("shape", "rows", "_pos")

    def __init__(self, shape: Multipartition, rows):
        rows = tuple(tuple(tuple(int(x) for x in row) for row in comp)
                     for comp in rows)
        if len(rows) != shape.r:
            raise ValueError("component count does not match shape")
        pos = {}
        for s, comp in enumerate(rows, start=1):
            if tuple(len(row) for row in comp) != shape.component(s):
                raise ValueError(f"row lengths do not match component {s}")
            for a, row in enumerate(comp, start=1):
                for b, entry in enumerate(row, start=1):
                    if entry in pos:
                        raise ValueError(f"repeated entry {entry}")
                    pos[entry] = (s, a, b)
        n = shape.size
        if sorted(pos) != list(range(1, n + 1)):
            raise ValueError("entries must be exactly 1..n")
        self.shape = shape
        self.rows = rows
        self._pos = pos

    @property
    def n(self) -> int:
        return self.shape.size

    def position(self, k: int) -> tuple:
        """(component, row, column) of the entry k, all 1-based."""
        return self._pos[k]

    def entry(self, s: int, a: int, b: int) -> int:
        return self.rows[s - 1][a - 1][b - 1]

    def reading_word(self) -> tuple:
        return tuple(x for comp in self.rows for row in comp for x in row)

    def is_standard(self) -> bool:
        for comp in self.rows:
            for a, row in enumerate(comp):
                for b, x in enumerate(row):
                    if b + 1 < len(row) and row[b + 1] < x:
                        return False
                    if a + 1 < len(comp) and b < len(comp[a + 1]):
                        if comp[a + 1][b] < x:
                            return False
        return True

    def swap(self, i: int) -> "StandardTableau":
        """Exchange the entries i and i+1; may break standardness."""
        si, ai, bi = self._pos[i]
        sj, aj, bj = self._pos[i + 1]
        rows = [list(list(row) for row in comp) for comp in self.rows]
        rows[si - 1][ai - 1][bi - 1] = i + 1
        rows[sj - 1][aj - 1][bj - 1] = i
        return StandardTableau(self.shape, rows)

    def shift(self, z: int) -> "StandardTableau":
        """Block-rotated tableau of shape λ⟨z⟩; entries follow their boxes."""
        p, d = self.shape.p, self.shape.d
        rows = []
        for t in range(1, p + 1):
            src = ((t + z - 1) % p) * d
            rows.extend(self.rows[src: src + d])
        return StandardTableau(self.shape.shift(z), rows)

    def to_json(self) -> list:
        return [list(list(row) for row in comp) for comp in self.rows]

    @classmethod
    def from_json(cls, p: int, d: int, data) -> "StandardTableau":
        shape = Multipartition(p, d, [tuple(len(r) for r in comp)
                                      for comp in data])
        return cls(shape, data)

    def __eq__(self, other):
        return (isinstance(other, StandardTableau)
                and self.shape == other.shape and self.rows == other.rows)

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        return f"StandardTableau({self.rows})"


def superstandard(shape: Multipartition) -> StandardTableau:
    """The tableau with 1..n entered row by row through the components."""
    rows = []
    k = 0
    for c in shape.comps:
        comp = []
        for length in c:
            comp.append(tuple(range(k + 1, k + length + 1)))
            k += length
        rows.append(tuple(comp))
    return StandardTableau(shape, rows)


def enumerate_std(shape: Multipartition) -> list:
    """All standard tableaux of the given shape, in reading-word order.

    Grown forward: entry k goes into any cell whose row and column
    predecessors are already filled.
    """
    n = shape.size
    done = [[[0] * length for length in c] for c in shape.comps]

    out = []

    def grow(k):
        if k > n:
            out.append(StandardTableau(
                shape, [tuple(tuple(row) for row in comp) for comp in done]))
            return
        for comp in done:
            for a, row in enumerate(comp):
                # only the first empty cell of a row is addable
                b = next((j for j, val in enumerate(row) if not val), None)
                if b is None:
                    continue
                if a > 0 and not comp[a - 1][b]:
                    continue
                row[b] = k
                grow(k + 1)
                row[b] = 0

    grow(1)
    out.sort(key=StandardTableau.reading_word)
    return out


@lru_cache(maxsize=None)
def _count_std(comps: tuple) -> int:
    # branching rule: remove the cell containing n in every admissible way
    if all(not c for c in comps):
        return 1
    total = 0
    for s, c in enumerate(comps):
        for i in range(len(c)):
            if i + 1 < len(c) and c[i + 1] == c[i]:
                continue
            smaller = c[:i] + ((c[i] - 1,) if c[i] > 1 else ()) + c[i + 1:]
            total += _count_std(comps[:s] + (smaller,) + comps[s + 1:])
    return total


def count_std(shape: Multipartition) -> int:
    return _count_std(shape.comps)


def content_exponents(s: StandardTableau, k: int) -> tuple:
    """(eps exponent mod p, q exponent, Q index) of cont_s(k)."""
    u, a, b = s.position(k)
    p_u, d_u = component_index(u, s.shape.p, s.shape.d)
    return p_u % s.shape.p, b - a, d_u


def content(s: StandardTableau, k: int, params):
    e, h, c = content_exponents(s, k)
    return params.eps_pow(e) * params.q_power(h) * params.Q(c)


def beta_coeff(s: StandardTableau, i: int, params):
    """(q-1) cont_t(i) / (cont_t(i) - cont_s(i)) where t swaps i, i+1."""
    c = content(s, i, params)
    cp = content(s, i + 1, params)
    den = cp - c
    if not den:
        raise PoleError(
            f"contents of {i} and {i + 1} collide at this specialization")
    return (params.q - 1) * cp / den
