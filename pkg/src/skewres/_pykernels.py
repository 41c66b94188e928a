"""Pure-Python skew multiplication and division on integer-coded coefficients.

Same interface as the compiled ``_ckernels`` module.  A coefficient list
``a`` stands for ``sum a[i] X^(shift+i)``; the twist applied when moving a
coefficient past ``X^k`` is ``theta^(k*stride)``, so ``stride=1`` is the
ring K[X; theta], ``stride=-1`` the chart at infinity and ``stride=0`` the
commutative ring K[Y].
"""


class KernelContext:
    def __init__(self, tables, r):
        self.r = r
        self.add = tables["add"].tolist()
        self.mul = tables["mul"].tolist()
        self.neg = tables["neg"].tolist()
        self.inv = tables["inv"].tolist()
        self.frob = tables["frob"].tolist()

    def skew_mul(self, a, b, shift, stride):
        if not a or not b:
            return []
        add, mul, frob, r = self.add, self.mul, self.frob, self.r
        nb = len(b)
        out = [0] * (len(a) + nb - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            row = mul[ai]
            fr = frob[((shift + i) * stride) % r]
            for j in range(nb):
                bj = b[j]
                if bj:
                    k = i + j
                    out[k] = add[out[k]][row[fr[bj]]]
        return out

    def right_divmod(self, A, B, stride):
        """A = Q*B + R with deg R < deg B (B nonzero, trimmed)."""
        add, mul, neg, inv, frob, r = self.add, self.mul, self.neg, self.inv, self.frob, self.r
        n = len(B) - 1
        R = list(A)
        if len(R) <= n:
            return [], R
        Q = [0] * (len(R) - n)
        for d in range(len(R) - 1 - n, -1, -1):
            lead = R[d + n]
            if lead == 0:
                continue
            fr = frob[(d * stride) % r]
            q = mul[lead][inv[fr[B[n]]]]
            Q[d] = q
            nq = mul[neg[q]]
            for k in range(n + 1):
                bk = B[k]
                if bk:
                    R[d + k] = add[R[d + k]][nq[fr[bk]]]
        return Q, R[:n]

    def left_divmod(self, A, B, stride):
        """A = B*Q + R with deg R < deg B (B nonzero, trimmed)."""
        add, mul, neg, inv, frob, r = self.add, self.mul, self.neg, self.inv, self.frob, self.r
        n = len(B) - 1
        R = list(A)
        if len(R) <= n:
            return [], R
        Q = [0] * (len(R) - n)
        binv = inv[B[n]]
        back = frob[(-n * stride) % r]
        for d in range(len(R) - 1 - n, -1, -1):
            lead = R[d + n]
            if lead == 0:
                continue
            q = back[mul[lead][binv]]
            Q[d] = q
            for k in range(n + 1):
                bk = B[k]
                if bk:
                    t = frob[(k * stride) % r][q]
                    R[d + k] = add[R[d + k]][neg[mul[bk][t]]]
        return Q, R[:n]
