"""Charged multipartition combinatorics.

A multipartition is an ell-tuple of partitions, each stored as a tuple of
weakly decreasing positive integers (no trailing zeros inside a component,
but empty components are allowed and significant).  Boxes are (row, col,
component) triples, all 1-indexed.  A charge attaches an integer s_m to each
component and a quantum characteristic e; the charged content of a box
(r, c, m) is s_m + c - r and its residue is that value mod e.
"""

from functools import lru_cache
from typing import NamedTuple


class Charge(NamedTuple):
    s: tuple
    e: int
    a: int = 1

    @property
    def level(self):
        return len(self.s)


def make_charge(s, e, a=1):
    from math import gcd
    s = tuple(int(x) for x in s)
    if e < 2:
        raise ValueError("quantum characteristic e must be >= 2")
    if gcd(a, e) != 1:
        raise ValueError("numerator a must be coprime to e")
    return Charge(s, e, a)


def is_cylindrical_charge(ch):
    """s_1 <= s_2 <= ... <= s_ell < s_1 + e."""
    s, e = ch.s, ch.e
    return all(s[i] <= s[i + 1] for i in range(len(s) - 1)) and s[-1] < s[0] + e


def is_partition(p):
    return all(isinstance(x, int) and x > 0 for x in p) and all(
        p[i] >= p[i + 1] for i in range(len(p) - 1)
    )


def is_multipartition(mp):
    return all(is_partition(comp) for comp in mp)


def mp_size(mp):
    return sum(sum(comp) for comp in mp)


def heights(mp):
    return tuple(len(comp) for comp in mp)


def boxes(mp):
    """All boxes of mp as (r, c, m) with r, c, m 1-indexed."""
    out = []
    for m, comp in enumerate(mp, start=1):
        for r, row_len in enumerate(comp, start=1):
            for c in range(1, row_len + 1):
                out.append((r, c, m))
    return out


def charged_content(b, ch):
    r, c, m = b
    return ch.s[m - 1] + c - r


def residue(b, ch):
    return charged_content(b, ch) % ch.e


def box_key(b, ch):
    """Sort key for the dominance order on boxes: bigger key = more dominant.

    A box is more dominant when its charged content is larger; ties are
    broken by smaller component index winning.
    """
    return (charged_content(b, ch), -b[2])


def add_box(mp, b):
    r, c, m = b
    comp = list(mp[m - 1])
    if r == len(comp) + 1:
        if c != 1:
            raise ValueError(f"box {b} not addable")
        comp.append(1)
    else:
        if comp[r - 1] + 1 != c:
            raise ValueError(f"box {b} not addable")
        comp[r - 1] += 1
    out = list(mp)
    out[m - 1] = tuple(comp)
    new = tuple(out)
    if not is_partition(new[m - 1]):
        raise ValueError(f"box {b} not addable")
    return new


def remove_box(mp, b):
    r, c, m = b
    comp = list(mp[m - 1])
    if r > len(comp) or comp[r - 1] != c:
        raise ValueError(f"box {b} not removable")
    comp[r - 1] -= 1
    if comp[r - 1] == 0:
        if r != len(comp):
            raise ValueError(f"box {b} not removable")
        comp.pop()
    out = list(mp)
    out[m - 1] = tuple(comp)
    return tuple(out)


def addable_boxes(mp, ch, i=None):
    out = []
    for m, comp in enumerate(mp, start=1):
        for r in range(1, len(comp) + 2):
            c = (comp[r - 1] if r <= len(comp) else 0) + 1
            if r > 1 and comp[r - 2] < c:
                continue
            b = (r, c, m)
            if i is None or residue(b, ch) == i % ch.e:
                out.append(b)
    return out


def removable_boxes(mp, ch, i=None):
    out = []
    for m, comp in enumerate(mp, start=1):
        for r in range(1, len(comp) + 1):
            c = comp[r - 1]
            if r < len(comp) and comp[r] == c:
                continue
            b = (r, c, m)
            if i is None or residue(b, ch) == i % ch.e:
                out.append(b)
    return out


def is_s_admissible(hbar, ch):
    ok, strict = _admissibility(hbar, ch)
    return ok and strict


def step_changes(hbar, ch):
    """Indices m where the admissibility inequality is strict."""
    s, e = ch.s, ch.e
    out = []
    for m in range(1, len(hbar) + 1):
        bound = e + s[0] - s[-1] if m == 1 else s[m - 1] - s[m - 2]
        if hbar[m - 1] < bound:
            out.append(m)
    return out


def _admissibility(hbar, ch):
    s, e = ch.s, ch.e
    ok = True
    for m in range(1, len(hbar) + 1):
        bound = e + s[0] - s[-1] if m == 1 else s[m - 1] - s[m - 2]
        if hbar[m - 1] > bound:
            ok = False
    return ok, bool(step_changes(hbar, ch))


# ---------------------------------------------------------------------------
# Tableaux.  A tableau mirrors its shape: a tuple of components, each a tuple
# of rows, each row a tuple of entries from {1..n}.


def tableau_shape(t):
    return tuple(tuple(len(row) for row in comp) for comp in t)


def tableau_boxes_by_entry(t):
    """Dict entry -> box."""
    out = {}
    for m, comp in enumerate(t, start=1):
        for r, row in enumerate(comp, start=1):
            for c, k in enumerate(row, start=1):
                out[k] = (r, c, m)
    return out


def is_standard_tableau(t):
    shape = tableau_shape(t)
    if not is_multipartition(shape):
        return False
    entries = [k for comp in t for row in comp for k in row]
    n = len(entries)
    if sorted(entries) != list(range(1, n + 1)):
        return False
    for comp in t:
        for r, row in enumerate(comp):
            for c, k in enumerate(row):
                if c + 1 < len(row) and row[c + 1] <= k:
                    return False
                if r + 1 < len(comp) and c < len(comp[r + 1]) and comp[r + 1][c] <= k:
                    return False
    return True


def residue_sequence(t, ch):
    by_entry = tableau_boxes_by_entry(t)
    return tuple(residue(by_entry[k], ch) for k in range(1, len(by_entry) + 1))


def tableau_from_box_order(mp, order):
    """Build the tableau whose k-th entry sits at order[k-1]."""
    filling = [[[None] * row_len for row_len in comp] for comp in mp]
    for k, (r, c, m) in enumerate(order, start=1):
        filling[m - 1][r - 1][c - 1] = k
    return tuple(tuple(tuple(row) for row in comp) for comp in filling)


def standard_tableaux(mp):
    """Yield all standard tableaux of mp (in a deterministic order)."""
    n = mp_size(mp)
    order = []

    def rec(shape):
        if len(order) == n:
            yield tableau_from_box_order(mp, order)
            return
        for b in sorted(addable_boxes(shape, _DUMMY_CHARGE_FOR(shape))):
            r, c, m = b
            if r > len(mp[m - 1]) or c > mp[m - 1][r - 1]:
                continue  # outside the target shape
            order.append(b)
            yield from rec(add_box(shape, b))
            order.pop()

    yield from rec(tuple(() for _ in mp))


def _DUMMY_CHARGE_FOR(mp):
    # addable_boxes only consults the charge when filtering by residue
    return Charge((0,) * len(mp), 2)


@lru_cache(maxsize=None)
def count_standard_tableaux(mp):
    if mp_size(mp) == 0:
        return 1
    ch = _DUMMY_CHARGE_FOR(mp)
    return sum(count_standard_tableaux(remove_box(mp, b)) for b in removable_boxes(mp, ch))


def reverse_column_reading_tableau(mp, m=1):
    """The tableau filling column 1 of components m-1, m-2, ... (wrapping
    around to m), then column 2 in the same component order, and so on."""
    ell = len(mp)
    comp_order = [(m - 2 - j) % ell + 1 for j in range(ell)]
    max_width = max((comp[0] if comp else 0) for comp in mp) if mp else 0
    order = []
    for c in range(1, max_width + 1):
        for cm in comp_order:
            comp = mp[cm - 1]
            for r in range(1, len(comp) + 1):
                if comp[r - 1] >= c:
                    order.append((r, c, cm))
    return tableau_from_box_order(mp, order)


def tableau_degree(t, ch):
    """Sum over entries of (#addable - #removable) same-residue boxes of the
    prefix shape strictly more dominant than the entry's box."""
    by_entry = tableau_boxes_by_entry(t)
    n = len(by_entry)
    shape = tuple(() for _ in t)
    deg = 0
    for k in range(1, n + 1):
        b = by_entry[k]
        shape = add_box(shape, b)
        i = residue(b, ch)
        key = box_key(b, ch)
        add = sum(1 for x in addable_boxes(shape, ch, i) if box_key(x, ch) > key)
        rem = sum(1 for x in removable_boxes(shape, ch, i) if box_key(x, ch) > key)
        deg += add - rem
    return deg


# ---------------------------------------------------------------------------
# Dominance.


def dominates(mu, la, ch):
    """Test mu >= la: is there a residue-preserving bijection from the boxes
    of mu onto those of la moving every box weakly down the dominance order?

    Greedy per residue class: within one class the box order is total, so a
    matching exists iff, after sorting both sides decreasingly, the k-th
    la-box sits at or below the k-th mu-box.
    """
    if mp_size(mu) != mp_size(la):
        raise ValueError("dominance needs equal sizes")
    by_res_mu = {}
    by_res_la = {}
    for b in boxes(mu):
        by_res_mu.setdefault(residue(b, ch), []).append(box_key(b, ch))
    for b in boxes(la):
        by_res_la.setdefault(residue(b, ch), []).append(box_key(b, ch))
    if set(by_res_mu) != set(by_res_la):
        return False
    for i in by_res_mu:
        ku = sorted(by_res_mu[i], reverse=True)
        kl = sorted(by_res_la[i], reverse=True)
        if len(ku) != len(kl):
            return False
        if any(l > u for u, l in zip(ku, kl)):
            return False
    return True


def residue_multiset(mp, ch):
    out = {}
    for b in boxes(mp):
        i = residue(b, ch)
        out[i] = out.get(i, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Enumeration helpers.


def partitions_of(n, max_part=None):
    """All partitions of n as tuples, largest part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


def multipartitions_of(n, ell):
    """All ell-multipartitions of n."""
    if ell == 1:
        return [(p,) for p in partitions_of(n)]
    out = []
    for first_size in range(n + 1):
        for p in partitions_of(first_size):
            for rest in multipartitions_of(n - first_size, ell - 1):
                out.append((p,) + rest)
    return out
