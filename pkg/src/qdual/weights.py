"""Classical weight labels, irreducible dimensions, and group elements.

Labels live in one of four families keyed by the printed subscript: GL
(weakly decreasing integer tuples), Sp (partitions in the first half,
zeros in the second), O (partitions of depth at most floor(n/2) with a
tilde flag marking the column-complement partner), and SO (tuples of
length floor(n/2) whose last entry may be negative when the depth
reaches n/2 for even n).  Dimensions come from the Weyl products of the
respective root systems.  The special group elements act on Fock
vectors monomial-wise through the superscript decomposition of mode
indices.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .qfield import QScalar
from .fock import PSI, FockError, FockVector

_GROUPS = ("GL", "Sp", "SO", "O")


class WeightError(ValueError):
    """Invalid label data or out-of-domain partition map."""


def depth(mu) -> int:
    """Number of positive entries of a partition."""
    d = 0
    for k, x in enumerate(mu):
        if x > 0:
            d = k + 1
    return d


def transpose(mu) -> tuple:
    """Conjugate partition, at least as long as the input."""
    _check_partition(mu)
    width = max(len(mu), mu[0] if mu else 0)
    return tuple(sum(1 for x in mu if x >= i) for i in range(1, width + 1))


def _check_partition(mu):
    for k, x in enumerate(mu):
        if x < 0 or (k > 0 and mu[k - 1] < x):
            raise WeightError("not a partition: %r" % (mu,))


def tilde(mu, n=None) -> tuple:
    """Replace the first column length c by n - c; an involution.

    Defined whenever the first two column lengths sum to at most n.
    """
    if n is None:
        n = len(mu)
    mu = tuple(mu) + (0,) * (n - len(mu))
    if len(mu) != n:
        raise WeightError("partition longer than n")
    cols = transpose(mu)
    if cols[0] + (cols[1] if len(cols) > 1 else 0) > n:
        raise WeightError("tilde undefined: first two columns exceed %d" % (n,))
    # n - cols[0] >= cols[1] here, so the flipped column list stays a partition
    back = transpose((n - cols[0],) + cols[1:])
    # the image has depth n - cols[0] <= n, so entries past n are zeros
    return (back + (0,) * n)[:n]


def bar_label(mu, n: int) -> tuple:
    """Negate the n/2-th entry; defined for even n at depth exactly n/2."""
    if n % 2 != 0:
        raise WeightError("bar label needs even n")
    p = n // 2
    if len(mu) < p:
        raise WeightError("label too short for n = %d" % (n,))
    if any(x != 0 for x in mu[p:]):
        raise WeightError("bar label needs depth n/2")
    absmu = tuple(abs(x) for x in mu[:p])
    _check_partition(absmu)
    if depth(absmu) != p:
        raise WeightError("bar label needs depth n/2")
    return mu[: p - 1] + (-mu[p - 1],)


@dataclass(frozen=True)
class WeightLabel:
    """One highest-weight label; size is the printed group subscript."""

    group: str
    size: int
    entries: tuple
    tilde: bool = False

    def __post_init__(self):
        if self.group not in _GROUPS:
            raise WeightError("group must be one of %r" % (_GROUPS,))
        if self.size < 1:
            raise WeightError("size must be positive")
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if self.tilde and self.group != "O":
            raise WeightError("tilde flag applies to O labels only")
        getattr(self, "_check_" + self.group)()

    def _check_GL(self):
        mu = self.entries
        if len(mu) != self.size:
            raise WeightError("GL label needs %d entries" % (self.size,))
        if any(mu[k] < mu[k + 1] for k in range(len(mu) - 1)):
            raise WeightError("GL entries must weakly decrease")

    def _check_Sp(self):
        mu = self.entries
        if self.size % 2 != 0:
            raise WeightError("Sp subscript must be even")
        if len(mu) != self.size:
            raise WeightError("Sp label needs %d entries" % (self.size,))
        half = self.size // 2
        _check_partition(mu[:half])
        if any(x != 0 for x in mu[half:]):
            raise WeightError("Sp entries beyond position %d must vanish" % (half,))

    def _check_O(self):
        mu = self.entries
        n = self.size
        if len(mu) != n:
            raise WeightError("O label needs %d entries" % (n,))
        _check_partition(mu)
        if depth(mu) > n // 2:
            raise WeightError("O label depth exceeds floor(n/2)")
        if self.tilde and tilde(mu, n) == mu:
            object.__setattr__(self, "tilde", False)

    def _check_SO(self):
        mu = self.entries
        n = self.size
        p = n // 2
        if len(mu) != p:
            raise WeightError("SO label needs %d entries" % (p,))
        absmu = tuple(abs(x) for x in mu)
        _check_partition(absmu)
        if any(x < 0 for x in mu[:-1]):
            raise WeightError("only the last SO entry may be negative")
        if p and mu[p - 1] < 0 and n % 2 != 0:
            raise WeightError("signed SO labels need even n")

    def __str__(self) -> str:
        body = ",".join(str(x) for x in self.entries)
        return "%s%d:[%s]%s" % (self.group, self.size, body, "~" if self.tilde else "")


_LABEL_RE = re.compile(r"(GL|Sp|SO|O)(\d+):\[(-?\d+(?:,-?\d+)*)?\](~?)")


def parse_label(text: str) -> WeightLabel:
    mt = _LABEL_RE.fullmatch(text.strip())
    if mt is None:
        raise WeightError("bad label literal %r" % (text,))
    entries = tuple(int(x) for x in mt.group(3).split(",")) if mt.group(3) else ()
    return WeightLabel(mt.group(1), int(mt.group(2)), entries, mt.group(4) == "~")


def o_label_partition(label: WeightLabel) -> tuple:
    """The actual partition an O label names: entries, or their tilde image."""
    if label.group != "O":
        raise WeightError("expected an O label")
    return tilde(label.entries, label.size) if label.tilde else label.entries


def o_label_from_partition(n: int, part) -> WeightLabel:
    """The O_n label naming a given partition of depth at most n - depth."""
    full = tuple(int(x) for x in part) + (0,) * (n - len(part))
    if len(full) != n:
        raise WeightError("partition longer than n")
    _check_partition(full)
    if depth(full) <= n // 2:
        return WeightLabel("O", n, full)
    return WeightLabel("O", n, tilde(full, n), tilde=True)


def _partitions(max_len: int, bound: int):
    """Weakly decreasing nonnegative tuples of fixed length and size <= bound."""

    def rec(prefix, prev, budget):
        if len(prefix) == max_len:
            yield tuple(prefix)
            return
        for x in range(min(prev, budget), -1, -1):
            yield from rec(prefix + [x], x, budget - x)

    yield from rec([], bound, bound)


def enumerate_labels(group: str, size: int, bound: int) -> list:
    """All labels of total entry size at most bound, deterministically ordered."""
    if bound < 0:
        raise WeightError("bound must be nonnegative")
    out = []
    if group == "GL":

        def rec(prefix, prev, budget):
            if len(prefix) == size:
                out.append(WeightLabel("GL", size, tuple(prefix)))
                return
            for x in range(-budget, min(prev, budget) + 1):
                rec(prefix + [x], x, budget - abs(x))

        rec([], bound, bound)
    elif group == "Sp":
        half = size // 2
        if size % 2 != 0:
            raise WeightError("Sp subscript must be even")
        for mu in _partitions(half, bound):
            out.append(WeightLabel("Sp", size, mu + (0,) * half))
    elif group == "O":
        for mu in _partitions(size // 2, bound):
            full = mu + (0,) * (size - len(mu))
            out.append(WeightLabel("O", size, full))
            if tilde(full, size) != full:
                out.append(WeightLabel("O", size, full, tilde=True))
    elif group == "SO":
        p = size // 2
        for mu in _partitions(p, bound):
            if size % 2 == 0 and depth(mu) == p:
                out.append(WeightLabel("SO", size, mu))
                out.append(WeightLabel("SO", size, bar_label(mu, size)))
            else:
                out.append(WeightLabel("SO", size, mu))
    else:
        raise WeightError("group must be one of %r" % (_GROUPS,))
    out.sort(key=lambda lb: (lb.entries, lb.tilde))
    return out


def _pair_product(l, r) -> Fraction:
    num = Fraction(1)
    for i in range(len(l)):
        for j in range(i + 1, len(l)):
            num *= Fraction(l[i] * l[i] - l[j] * l[j], r[i] * r[i] - r[j] * r[j])
    return num


def _so_dim(lam, n: int) -> int:
    """Weyl dimension for the special orthogonal group of rank floor(n/2)."""
    p = n // 2
    lam = tuple(lam) + (0,) * (p - len(lam))
    if n % 2 == 1:
        l = [Fraction(2 * (lam[i] + p - i) - 1, 2) for i in range(p)]
        r = [Fraction(2 * (p - i) - 1, 2) for i in range(p)]
        val = _pair_product(l, r)
        for i in range(p):
            val *= l[i] / r[i]
    else:
        l = [Fraction(lam[i] + p - i - 1) for i in range(p)]
        r = [Fraction(p - i - 1) for i in range(p)]
        val = _pair_product(l, r)
    return _as_dim(val)


def _as_dim(val: Fraction) -> int:
    if val.denominator != 1 or val <= 0:
        raise WeightError("dimension product is not a positive integer")
    return int(val)


def dim_irrep(label: WeightLabel) -> int:
    """Dimension of the irreducible module the label names."""
    mu = label.entries
    if label.group == "GL":
        n = label.size
        val = Fraction(1)
        for i in range(n):
            for j in range(i + 1, n):
                val *= Fraction(mu[i] - mu[j] + j - i, j - i)
        return _as_dim(val)
    if label.group == "Sp":
        n = label.size // 2
        l = [mu[i] + n - i for i in range(n)]
        r = [n - i for i in range(n)]
        val = _pair_product(l, r)
        for i in range(n):
            val *= Fraction(l[i], r[i])
        return _as_dim(val)
    if label.group == "SO":
        return _so_dim(mu, label.size)
    n = label.size
    lam = mu[: n // 2]
    if n % 2 == 0 and depth(mu) == n // 2:
        return 2 * _so_dim(lam, n)
    return _so_dim(lam, n)


# ------------------------------------------------------- group elements


def superscript(index: int, m: int) -> int:
    """The block number k of a mode index i + (k-1)m."""
    return (index - 1) // m + 1


def monomial_weight(mono, m: int, n: int) -> tuple:
    """Exponent of each diagonal entry: +1 per psi, -1 per psibar."""
    w = [0] * n
    for (species, index, _) in mono:
        w[superscript(index, m) - 1] += 1 if species == PSI else -1
    return tuple(w)


def group_element_apply(elem, pair: str, m: int, n: int, v: FockVector) -> FockVector:
    """Action of a special group element on a Fock vector.

    A diagonal element is ("diag", (h_1, ..., h_n)) and scales each
    monomial by the product of h_k^(sign) over its modes, where k is the
    mode superscript and the sign is +1 for psi, -1 for psibar.  "tau"
    (even n, orthogonal context) relabels superscripts n/2 <-> n/2 + 1.
    "minus_identity" scales by (-1)^length.
    """
    if elem == "minus_identity":
        return FockVector(
            {mono: c if len(mono) % 2 == 0 else -c for mono, c in v.terms.items()}
        )
    if elem == "tau":
        if pair != "so_sp":
            raise FockError("tau lives in the orthogonal group")
        if n % 2 != 0:
            raise FockError("tau needs even n")
        swap = {n // 2: n // 2 + 1, n // 2 + 1: n // 2}
        out: dict = {}
        for mono, c in v.terms.items():
            new = []
            for (species, index, level) in mono:
                k = superscript(index, m)
                block = index - (k - 1) * m
                new.append((species, block + (swap.get(k, k) - 1) * m, level))
            key = tuple(sorted(new))
            out[key] = out[key] + c if key in out else c
        return FockVector(out)
    if isinstance(elem, tuple) and len(elem) == 2 and elem[0] == "diag":
        h = [Fraction(x) for x in elem[1]]
        if len(h) != n:
            raise FockError("diagonal needs %d entries" % (n,))
        if any(x == 0 for x in h):
            raise FockError("singular diagonal")
        out = {}
        for mono, c in v.terms.items():
            factor = Fraction(1)
            for w, e in zip(h, monomial_weight(mono, m, n)):
                factor *= w**e
            if isinstance(c, QScalar):
                out[mono] = QScalar.from_fraction(factor) * c
            else:
                out[mono] = factor * c
        return FockVector(out)
    raise FockError("unknown group element %r" % (elem,))
