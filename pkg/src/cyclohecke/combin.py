"""Partitions, multipartitions, compositions, and permutation words.

All values are immutable tuples.  A multipartition carries its (p, d)
context explicitly: the same r-tuple of partitions means different things
for different factorizations r = p*d, so the context is never inferred.

Permutations are tuples ``img`` with ``img[i-1]`` the image of i, and
products compose left to right: ``(i)(uv) = ((i)u)v``.
"""

from itertools import product as _cartesian


# ---------------------------------------------------------------------------
# partitions

def check_partition(parts) -> tuple:
    parts = tuple(int(x) for x in parts)
    for i, x in enumerate(parts):
        if x <= 0:
            raise ValueError(f"partition parts must be positive: {parts}")
        if i + 1 < len(parts) and parts[i + 1] > x:
            raise ValueError(f"partition parts must weakly decrease: {parts}")
    return parts


def conjugate_partition(la) -> tuple:
    if not la:
        return ()
    return tuple(sum(1 for x in la if x > j) for j in range(la[0]))


def beta(la) -> int:
    """Sum of (i-1)*la_i over the rows, i starting at 1."""
    return sum(i * x for i, x in enumerate(la))


def partitions(m: int):
    """All partitions of m, largest first part first."""
    if m < 0:
        return
    if m == 0:
        yield ()
        return
    for first in range(m, 0, -1):
        for rest in partitions(m - first):
            if not rest or rest[0] <= first:
                yield (first,) + rest


# ---------------------------------------------------------------------------
# permutations

def perm_id(n: int) -> tuple:
    return tuple(range(1, n + 1))


def perm_mul(u: tuple, v: tuple) -> tuple:
    """Apply u first, then v."""
    if len(u) != len(v):
        raise ValueError("permutation size mismatch")
    return tuple(v[x - 1] for x in u)


def perm_inv(w: tuple) -> tuple:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def inversions(w: tuple) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def perm_from_word(n: int, word) -> tuple:
    img = list(range(1, n + 1))
    # right multiplication by s_i swaps the values i, i+1
    for i in word:
        if not 1 <= i < n:
            raise ValueError(f"generator index out of range: s_{i} in S_{n}")
        for j in range(n):
            if img[j] == i:
                img[j] = i + 1
            elif img[j] == i + 1:
                img[j] = i
    return tuple(img)


def reduced_word(w: tuple) -> list:
    """A reduced word for w, to be applied left to right."""
    img = list(w)
    word = []
    i = 0
    while i < len(img) - 1:
        if img[i] > img[i + 1]:
            # stripping s_i from the left shortens w
            word.append(i + 1)
            img[i], img[i + 1] = img[i + 1], img[i]
            i = max(i - 1, 0)
        else:
            i += 1
    return word


def embed_perm(w: tuple, n: int, k: int = 0) -> tuple:
    """w acting on {k+1, ..., k+len(w)} inside S_n, fixing the rest."""
    if k + len(w) > n:
        raise ValueError("shifted permutation does not fit")
    img = list(range(1, n + 1))
    for i, x in enumerate(w):
        img[k + i] = k + x
    return tuple(img)


def wab_perm(a: int, b: int, k: int = 0, n: int = None) -> tuple:
    """The block swap moving {k+1..k+a} past {k+a+1..k+a+b}.

    Equals (s_{a+b+k-1} ... s_{k+1})^b and has length a*b.
    """
    core = tuple(range(b + 1, a + b + 1)) + tuple(range(1, b + 1))
    if n is None:
        n = k + a + b
    return embed_perm(core, n, k)


def wb_perm(b) -> tuple:
    """The composition shuffle: block t moves past all later blocks."""
    b = check_composition(b)
    n = sum(b)
    img = [0] * n
    before = 0
    for t, bt in enumerate(b):
        after = sum(b[t + 1:])
        for c in range(1, bt + 1):
            img[before + c - 1] = after + c
        before += bt
    return tuple(img)


# ---------------------------------------------------------------------------
# compositions

def check_composition(b) -> tuple:
    b = tuple(int(x) for x in b)
    if any(x < 0 for x in b):
        raise ValueError(f"composition parts must be nonnegative: {b}")
    return b


def partial_sum(b, i: int, j: int) -> int:
    """b_i + ... + b_j with 1-based inclusive bounds; 0 when i > j."""
    if i > j:
        return 0
    return sum(b[i - 1:j])


def shift_composition(b, k: int) -> tuple:
    b = check_composition(b)
    p = len(b)
    k %= p
    return b[k:] + b[:k]


def orbit_order_composition(b) -> tuple:
    b = check_composition(b)
    p = len(b)
    for o in range(1, p + 1):
        if p % o == 0 and shift_composition(b, o) == b:
            return o, p // o
    raise AssertionError("shift by p must fix b")


def alpha(b) -> int:
    return sum((i + 1) * x for i, x in enumerate(b))


def comp_stats(b) -> tuple:
    """(alpha(b), length of wb_perm(b))."""
    b = check_composition(b)
    p = len(b)
    l_wb = sum(b[i] * b[j] for i in range(p) for j in range(i + 1, p))
    return alpha(b), l_wb


def compositions(n: int, p: int):
    """All weak compositions of n into p parts, lexicographically."""
    if p == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, p - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# multipartitions

class Multipartition:
    """An r-tuple of partitions with explicit (p, d) context, r = p*d."""

    __slots__ = ("p", "d", "comps")

    def __init__(self, p: int, d: int, comps):
        if p < 1 or d < 1:
            raise ValueError("need p >= 1 and d >= 1")
        comps = tuple(check_partition(c) for c in comps)
        if len(comps) != p * d:
            raise ValueError(
                f"expected {p * d} components for (p, d) = ({p}, {d}), "
                f"got {len(comps)}"
            )
        self.p = p
        self.d = d
        self.comps = comps

    @property
    def r(self) -> int:
        return self.p * self.d

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self.comps)

    def component(self, s: int) -> tuple:
        if not 1 <= s <= self.r:
            raise ValueError(f"component index out of range: {s}")
        return self.comps[s - 1]

    def block(self, t: int) -> tuple:
        """The t-th d-tuple of components, t taken mod p into 1..p."""
        t = (t - 1) % self.p + 1
        return self.comps[self.d * (t - 1): self.d * t]

    def blocks(self) -> tuple:
        return tuple(self.block(t) for t in range(1, self.p + 1))

    def composition(self) -> tuple:
        """Block sizes (|block 1|, ..., |block p|)."""
        return tuple(sum(sum(c) for c in blk) for blk in self.blocks())

    def shift(self, k: int) -> "Multipartition":
        """Cyclic block shift: block t of the result is block t+k of self."""
        ordered = []
        for t in range(1, self.p + 1):
            ordered.extend(self.block(t + k))
        return Multipartition(self.p, self.d, ordered)

    def conjugate(self) -> "Multipartition":
        return Multipartition(
            self.p, self.d,
            [conjugate_partition(c) for c in reversed(self.comps)],
        )

    def arrow(self) -> tuple:
        """All parts pooled into one partition."""
        merged = sorted((x for c in self.comps for x in c), reverse=True)
        return tuple(merged)

    def orbit_order(self) -> tuple:
        """(o, p/o) with o the least positive block shift fixing self."""
        for o in range(1, self.p + 1):
            if self.p % o == 0 and self.shift(o) == self:
                return o, self.p // o
        raise AssertionError("shift by p must fix the multipartition")

    def orbit_slice(self) -> "Multipartition":
        """The first o blocks, which repeat to give the whole tuple."""
        o, _ = self.orbit_order()
        return Multipartition(o, self.d, self.comps[: o * self.d])

    def dominates(self, other: "Multipartition") -> bool:
        if (self.p, self.d) != (other.p, other.d):
            raise ValueError("multipartition context mismatch")
        if self.size != other.size:
            raise ValueError("multipartition size mismatch")
        head_self = 0
        head_other = 0
        for s in range(self.r):
            la, mu = self.comps[s], other.comps[s]
            depth = max(len(la), len(mu))
            run_self, run_other = 0, 0
            for i in range(depth):
                run_self += la[i] if i < len(la) else 0
                run_other += mu[i] if i < len(mu) else 0
                if head_self + run_self < head_other + run_other:
                    return False
            head_self += run_self
            head_other += run_other
        return True

    def sort_key(self) -> tuple:
        key = []
        for c in self.comps:
            key.append(sum(c))
            key.extend(c)
        return tuple(key)

    def to_json(self) -> list:
        return [list(c) for c in self.comps]

    @classmethod
    def from_json(cls, p: int, d: int, data) -> "Multipartition":
        return cls(p, d, data)

    def __eq__(self, other):
        return (
            isinstance(other, Multipartition)
            and (self.p, self.d, self.comps) == (other.p, other.d, other.comps)
        )

    def __hash__(self):
        return hash((self.p, self.d, self.comps))

    def __repr__(self):
        body = ",".join(repr(list(c)) for c in self.comps)
        return f"Multipartition(p={self.p},d={self.d},[{body}])"


def component_index(s: int, p: int, d: int) -> tuple:
    """Split s in 1..p*d as s = d*(p_s - 1) + d_s with 1 <= d_s <= d."""
    if not 1 <= s <= p * d:
        raise ValueError(f"component index out of range: {s}")
    return (s - 1) // d + 1, (s - 1) % d + 1


def multipartition_tuples(d: int, m: int):
    """All d-tuples of partitions with total size m."""
    if d == 1:
        for la in partitions(m):
            yield (la,)
        return
    for first_size in range(m + 1):
        for la in partitions(first_size):
            for rest in multipartition_tuples(d - 1, m - first_size):
                yield (la,) + rest


def count_multipartition_tuples(d: int, m: int) -> int:
    """Coefficient extraction from prod_k (1 - x^k)^{-d}."""
    coeffs = [1] + [0] * m
    for _ in range(d):
        for k in range(1, m + 1):
            # multiply by 1/(1 - x^k)
            for i in range(k, m + 1):
                coeffs[i] += coeffs[i - k]
    return coeffs[m]


def enumerate_pdb(d: int, b) -> list:
    """All multipartitions whose t-th block has size b_t, sorted."""
    b = check_composition(b)
    p = len(b)
    out = []
    for choice in _cartesian(*(multipartition_tuples(d, bt) for bt in b)):
        comps = [c for blk in choice for c in blk]
        out.append(Multipartition(p, d, comps))
    out.sort(key=Multipartition.sort_key)
    return out


def enumerate_all(p: int, d: int, n: int) -> list:
    """All (p*d)-multipartitions of n, grouped by nothing, sorted."""
    out = []
    for b in compositions(n, p):
        out.extend(enumerate_pdb(d, b))
    out.sort(key=Multipartition.sort_key)
    return out


def class_reps(items, relation: str = "sigma", b=None) -> list:
    """One representative per shift class, minimal in sort order.

    relation "sigma" allows every block shift; relation "b" only shifts
    by multiples of the orbit order of the fixed composition b.
    """
    if relation == "sigma":
        step = 1
    elif relation == "b":
        if b is None:
            raise ValueError("relation 'b' needs the composition")
        step, _ = orbit_order_composition(b)
    else:
        raise ValueError(f"unknown relation: {relation!r}")
    seen = set()
    reps = []
    for la in sorted(items, key=Multipartition.sort_key):
        if la in seen:
            continue
        reps.append(la)
        for k in range(0, la.p, step):
            seen.add(la.shift(k))
    return reps
