"""Seminormal construction of calibrated modules for the affine and
cyclotomic Hecke algebras, with exact Hecke-relation verification and the
invariant Hermitian form.

A calibrated weight is stored by its exponent vector m (b_k = zeta^(a*m_k),
q = zeta^a, zeta = exp(2*pi*i/e)).  All matrix arithmetic is exact in
Q(zeta_e); operators are kept column-sparse (at most two entries per
column).
"""

from fractions import Fraction

from .cyclotomics import Cyc, re_compare


def _norm(m, e):
    return tuple(x % e for x in m) if e else tuple(m)


def is_calibrated_weight(m, e):
    """For every equal pair m_i = m_j (i < j), both neighbours m_i + 1 and
    m_i - 1 must occur strictly between them (all mod e when e > 0)."""
    m = _norm(m, e)
    n = len(m)
    for i in range(n):
        for j in range(i + 1, n):
            if m[i] == m[j]:
                between = set(m[i + 1 : j])
                up = (m[i] + 1) % e if e else m[i] + 1
                down = (m[i] - 1) % e if e else m[i] - 1
                if up not in between or down not in between:
                    return False
    return True


def admissible_transposition(m, i, e):
    """s_i is admissible at m when b_{i+1} != q^{+-1} b_i."""
    m = _norm(m, e)
    up = (m[i - 1] + 1) % e if e else m[i - 1] + 1
    down = (m[i - 1] - 1) % e if e else m[i - 1] - 1
    return m[i] != up and m[i] != down


def weight_class(m, e):
    """Closure of m under admissible transpositions, sorted."""
    if not is_calibrated_weight(m, e):
        raise ValueError("weight is not calibrated")
    start = _norm(m, e)
    seen = {start}
    frontier = [start]
    while frontier:
        cur = frontier.pop()
        for i in range(1, len(cur)):
            if admissible_transposition(cur, i, e):
                nxt = list(cur)
                nxt[i - 1], nxt[i] = nxt[i], nxt[i - 1]
                nxt = tuple(nxt)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
    return sorted(seen)


class SeminormalModule:
    """Exact matrices for T_1..T_{n-1} and X_1..X_n on a weight class.

    Operators are stored as column maps: op[j] is a list of (i, coeff)
    meaning the basis vector w_{class[j]} maps to sum coeff * w_{class[i]}.
    """

    def __init__(self, cls, e, a=1):
        if not cls:
            raise ValueError("empty weight class")
        self.cls = list(cls)
        self.e = e
        self.a = a
        self.n = len(cls[0])
        self.index = {b: i for i, b in enumerate(self.cls)}
        self.q = Cyc.zeta_power(e, a)
        self.X = [self._x_op(k) for k in range(1, self.n + 1)]
        self.T = [self._t_op(k) for k in range(1, self.n)]

    def dim(self):
        return len(self.cls)

    def _b(self, wt, k):
        """Eigenvalue b_k = zeta^(a*m_k) at the weight wt."""
        return Cyc.zeta_power(self.e, self.a * wt[k - 1])

    def _x_op(self, k):
        return [[(j, self._b(wt, k))] for j, wt in enumerate(self.cls)]

    def _t_op(self, i):
        cols = []
        for j, wt in enumerate(self.cls):
            bi, bi1 = self._b(wt, i), self._b(wt, i + 1)
            diag = bi1 * (self.q - 1) / (bi1 - bi)
            col = [(j, diag)]
            if admissible_transposition(wt, i, self.e):
                swapped = list(wt)
                swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
                col.append((self.index[tuple(swapped)], diag - self.q))
            cols.append(col)
        return cols

    # -- sparse column-map algebra -----------------------------------------

    def apply(self, op, vec):
        """vec is a dict index -> Cyc; returns op(vec)."""
        out = {}
        for j, c in vec.items():
            for i, coeff in op[j]:
                out[i] = out.get(i, Cyc.zero(self.e)) + coeff * c
        return {i: c for i, c in out.items() if not c.is_zero()}

    def compose(self, ops, j):
        """Apply ops right-to-left to the j-th basis vector."""
        vec = {j: Cyc.one(self.e)}
        for op in reversed(ops):
            vec = self.apply(op, vec)
        return vec

    def t_inverse(self, i):
        """T_i^{-1} = q^{-1} (T_i + (1 - q))."""
        qinv = self.q.inv()
        cols = []
        for j, col in enumerate(self.T[i - 1]):
            new = []
            for idx, coeff in col:
                c = coeff + (1 - self.q) if idx == j else coeff
                new.append((idx, qinv * c))
            cols.append(new)
        return cols

    def x_inverse(self, k):
        return [[(j, col[0][1].inv())] for j, col in enumerate(self.X[k - 1])]


def seminormal_module(cls, e, a=1):
    return SeminormalModule(cls, e, a)


def verify_hecke_relations(mod):
    """Exact verification of the defining relations on every basis vector."""
    n, dim = mod.n, mod.dim()
    report = {}

    def same(vec1, vec2):
        keys = set(vec1) | set(vec2)
        z = Cyc.zero(mod.e)
        return all((vec1.get(k, z) - vec2.get(k, z)).is_zero() for k in keys)

    def check(name, left_ops, right_ops, scale=None):
        ok = True
        for j in range(dim):
            lhs = mod.compose(left_ops, j)
            rhs = mod.compose(right_ops, j)
            if scale is not None:
                rhs = {k: scale * c for k, c in rhs.items()}
            if not same(lhs, rhs):
                ok = False
                break
        report[name] = ok

    for i in range(1, n):
        Ti = mod.T[i - 1]
        # (T_i + 1)(T_i - q) = 0  <=>  T_i^2 = (q - 1) T_i + q
        ok = True
        for j in range(dim):
            lhs = mod.compose([Ti, Ti], j)
            rhs = mod.apply(Ti, {j: mod.q - 1})
            rhs[j] = rhs.get(j, Cyc.zero(mod.e)) + mod.q
            if not same(lhs, rhs):
                ok = False
        report[f"quadratic_{i}"] = ok
    for i in range(1, n - 1):
        check(f"braid_{i}", [mod.T[i - 1], mod.T[i], mod.T[i - 1]],
              [mod.T[i], mod.T[i - 1], mod.T[i]])
    for i in range(1, n):
        for j in range(i + 2, n):
            check(f"distant_{i}_{j}", [mod.T[i - 1], mod.T[j - 1]],
                  [mod.T[j - 1], mod.T[i - 1]])
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            check(f"xcomm_{i}_{j}", [mod.X[i - 1], mod.X[j - 1]],
                  [mod.X[j - 1], mod.X[i - 1]])
    for i in range(1, n):
        check(f"txt_{i}", [mod.T[i - 1], mod.X[i - 1], mod.T[i - 1]],
              [mod.X[i]], scale=mod.q)
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                check(f"tx_{i}_{j}", [mod.T[i - 1], mod.X[j - 1]],
                      [mod.X[j - 1], mod.T[i - 1]])
    return report


def _class_edges(cls, index, e):
    for j, wt in enumerate(cls):
        for i in range(1, len(wt)):
            if admissible_transposition(wt, i, e):
                swapped = list(wt)
                swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
                k = index[tuple(swapped)]
                if j < k:
                    yield j, k, i


def class_form_signs(cls, e, a=1):
    """Signs of the diagonal form values A_b on a sorted weight class,
    propagated from the lexicographically least weight (sign +1) along
    admissible transpositions; the ratio rule is
    sign(A_{s_i b}/A_b) = sign(Re(q) - Re(b_i/b_{i+1})), decided exactly by
    re_compare on exponents.  No matrices are needed."""
    cls = sorted(cls)
    index = {b: i for i, b in enumerate(cls)}
    signs = {0: 1}
    adj = {}
    for j, k, i in _class_edges(cls, index, e):
        adj.setdefault(j, []).append((k, i))
        adj.setdefault(k, []).append((j, i))
    frontier = [0]
    while frontier:
        j = frontier.pop()
        wt = cls[j]
        for k, i in adj.get(j, []):
            # ratio b_i / b_{i+1} at the source weight of the transposition
            d = a * (wt[i - 1] - wt[i])
            cmp = re_compare(a, d, e)  # Re(q) vs Re(ratio)
            if cmp == 0:
                raise ValueError("wall weight: Re(ratio) = Re(q) inside a class")
            step = 1 if cmp > 0 else -1
            if k in signs:
                if signs[k] != signs[j] * step:
                    raise ValueError("inconsistent sign propagation around a cycle")
            else:
                signs[k] = signs[j] * step
                frontier.append(k)
    if len(signs) != len(cls):
        raise ValueError("weight class is not connected by admissible transpositions")
    return {cls[j]: s for j, s in signs.items()}


def form_signs(mod):
    return class_form_signs(mod.cls, mod.e, mod.a)


def _edges(mod):
    yield from _class_edges(mod.cls, mod.index, mod.e)


def form_values(mod):
    """Exact diagonal Gram entries A_b (real cyclotomic numbers), with the
    base weight normalized to A = 1, propagated by the ratio
    A_{s_i b} / A_b = (b_i - q b_{i+1}) / (q b_i - b_{i+1}), which is what
    form invariance under T_i forces."""
    vals = {0: Cyc.one(mod.e)}
    adj = {}
    for j, k, i in _edges(mod):
        adj.setdefault(j, []).append((k, i))
        adj.setdefault(k, []).append((j, i))
    frontier = [0]
    while frontier:
        j = frontier.pop()
        wt = mod.cls[j]
        for k, i in adj.get(j, []):
            bi, bi1 = mod._b(wt, i), mod._b(wt, i + 1)
            ratio = (bi - mod.q * bi1) / (mod.q * bi - bi1)
            target = vals[j] * ratio
            if k in vals:
                if vals[k] != target:
                    raise ValueError("inconsistent form values around a cycle")
            else:
                vals[k] = target
                frontier.append(k)
    return [vals[j] for j in range(mod.dim())]


def is_unitary_class(mod):
    return all(s == 1 for s in form_signs(mod).values())


def verify_form_invariance(mod):
    """Check < M u, v > = < u, M^{-1} v > for M = T_i and X_i against the
    exact diagonal Gram form, i.e. G M = (M^{-1})^dagger G with dagger the
    cyclotomic conjugate-transpose."""
    G = form_values(mod)
    dim = mod.dim()

    def dense(op):
        mat = [[Cyc.zero(mod.e) for _ in range(dim)] for _ in range(dim)]
        for j, col in enumerate(op):
            for i, c in col:
                mat[i][j] = c
        return mat

    def invariant(op, op_inv):
        M, Minv = dense(op), dense(op_inv)
        for i in range(dim):
            for j in range(dim):
                # (G M)_{ij} = G_i M_{ij}; ((M^{-1})^dagger G)_{ij} = conj(Minv_{ji}) G_j
                if G[i] * M[i][j] != Minv[j][i].conj() * G[j]:
                    return False
        return True

    report = {}
    for i in range(1, mod.n):
        report[f"T_{i}"] = invariant(mod.T[i - 1], mod.t_inverse(i))
    for k in range(1, mod.n + 1):
        report[f"X_{k}"] = invariant(mod.X[k - 1], mod.x_inverse(k))
    return report


def cyclotomic_membership(mod, ch):
    """Does prod_i (X_1 - q^{s_i}) vanish?  X_1 is diagonal, so this just
    asks that every weight's first eigenvalue is one of the Q_i."""
    targets = {(ch.a * s) % mod.e for s in ch.s}
    return all((mod.a * wt[0]) % mod.e in targets for wt in mod.cls)


def enumerate_calibrated_classes(n, e):
    """All weight classes of calibrated exponent vectors in (Z/e)^n,
    each represented by its sorted member list."""
    classes = []
    seen = set()
    stack = [()]
    while stack:
        prefix = stack.pop()
        if len(prefix) == n:
            if prefix not in seen and is_calibrated_weight(prefix, e):
                cls = tuple(weight_class(prefix, e))
                seen.update(cls)
                classes.append(list(cls))
            continue
        # prune: m_i != m_{i+1} always; m_i != m_{i+2} unless e = 2, where
        # +1 and -1 coincide mod e and a single value between suffices
        for v in range(e):
            if len(prefix) >= 1 and prefix[-1] == v:
                continue
            if e != 2 and len(prefix) >= 2 and prefix[-2] == v:
                continue
            stack.append(prefix + (v,))
    return sorted(classes)
