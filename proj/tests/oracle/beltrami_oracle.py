"""Independent sympy oracle for the constants frozen in the C++ tests.

Own frame calculus and operator, concrete curvature functions, no code shared
with the engine. c and s stand for cos(phi) and sin(phi); phi-derivatives use
the chain rule and s^2 is replaced by 1 - c^2. Prints one `name = value` line
per constant.
"""

import sys

import sympy as sp

u, c, s = sp.symbols("u c s")
CIRCLE = s**2 + c**2 - 1


def reduce(f):
    num, den = sp.fraction(sp.cancel(sp.together(f)))
    num = sp.rem(sp.expand(num), CIRCLE, s)
    den = sp.rem(sp.expand(den), CIRCLE, s)
    return sp.cancel(num / den)


def d_phi(f):
    return -s * sp.diff(f, c) + c * sp.diff(f, s)


class Surface:
    def __init__(self, kappa, tau, offset, normal):
        self.kappa, self.tau = kappa, tau
        self.normal = normal
        x_u = self.du(offset, spine=True)
        x_p = self.dphi(offset)
        b11, b12, b22 = (reduce(sum(p * q for p, q in zip(v, normal)))
                         for v in (self.du(x_u), self.dphi(x_u), self.dphi(x_p)))
        self.det = reduce(b11 * b22 - b12**2)
        self.inv = [[reduce(b22 / self.det), reduce(-b12 / self.det)],
                    [reduce(-b12 / self.det), reduce(b11 / self.det)]]
        self.log_det = (reduce(sp.diff(self.det, u) / self.det), reduce(d_phi(self.det) / self.det))

    def du(self, v, spine=False):
        a, b, e = v
        k, t = self.kappa, self.tau
        out = [sp.diff(a, u) - k * b, sp.diff(b, u) + k * a - t * e, sp.diff(e, u) + t * b]
        if spine:
            out[0] += 1
        return tuple(out)

    @staticmethod
    def dphi(v):
        return tuple(d_phi(x) for x in v)

    def divergence(self, w):
        """-(d_u w^u + d_phi w^phi + w^j d_j det / (2 det)) for scalar w."""
        return reduce(-(sp.diff(w[0], u) + d_phi(w[1]) + (w[0] * self.log_det[0] + w[1] * self.log_det[1]) / 2))

    def laplace_scalar(self, f):
        grads = (sp.diff(f, u), d_phi(f))
        w = [sum(self.inv[i][j] * grads[i] for i in range(2)) for j in range(2)]
        return self.divergence(w)

    def laplace_vec(self, v):
        grads = (self.du(v), self.dphi(v))
        w = [tuple(reduce(sum(self.inv[i][j] * grads[i][a] for i in range(2))) for a in range(3)) for j in range(2)]
        d0, d1 = self.du(w[0]), self.dphi(w[1])
        return tuple(reduce(-(d0[a] + d1[a] + (w[0][a] * self.log_det[0] + w[1][a] * self.log_det[1]) / 2))
                     for a in range(3))


def tube(kappa, tau, r):
    return Surface(kappa, tau, (sp.Integer(0), r * c, r * s), (sp.Integer(0), -c, -s))


class TubeData:
    """Tube over kappa = 3 + u + u^2/2, tau = 1 with r = 1/2, read at u = 0."""

    def __init__(self):
        self.r = sp.Rational(1, 2)
        self.kappa = 3 + u + u**2 / 2
        self.tau = sp.Integer(1)
        self.surf = tube(self.kappa, self.tau, self.r)
        self.k0 = self.kappa.subs(u, 0)
        self.kp = sp.diff(self.kappa, u).subs(u, 0)
        # The delta pole sits at c0 = 1/(r kappa); s0^2 = 1 - c0^2.
        self.c0 = 1 / (self.r * self.k0)
        self.s0 = sp.sqrt(1 - self.c0**2)
        self.beta0 = self.kp * self.c0 + self.k0 * self.tau * self.s0

    def top_delta(self, f, order):
        """Coefficient of delta^-order in f at u = 0, as a number at (c0, s0)."""
        g = sp.cancel(sp.together(f.subs(u, 0)) * (1 - self.r * self.k0 * c) ** order)
        return sp.nsimplify(sp.simplify(g.subs({c: self.c0, s: self.s0})))


def tube_multiples(data, k_max):
    """h_k(0): top delta coefficient of the t-component of (Delta^II)^k n over
    beta^(2k-1) / (2^k delta^(3k-1) (kappa c)^(3k-2))."""
    out = {}
    v = data.surf.normal
    for k in range(1, k_max + 1):
        v = data.surf.laplace_vec(v)
        value = data.top_delta(v[0], 3 * k - 1)
        base = data.beta0 ** (2 * k - 1) / (2**k * (data.k0 * data.c0) ** (3 * k - 2))
        out[k] = sp.nsimplify(sp.simplify(value / base))
        print(f"# tube iterate {k} done", file=sys.stderr, flush=True)
    return out


def lemma_multiple(data, m, n, h):
    """Top delta coefficient of Delta^II f, f = h beta^m / (delta^n (kappa c)^(n-1)),
    over beta^(m+2) / (delta^(n+3) (kappa c)^(n+2))."""
    delta = 1 - data.r * data.kappa * c
    beta = sp.diff(data.kappa, u) * c + data.kappa * data.tau * s
    f = h(delta) * beta**m / (delta**n * (data.kappa * c) ** (n - 1))
    value = data.top_delta(data.surf.laplace_scalar(f), n + 3)
    base = data.beta0 ** (m + 2) / (data.k0 * data.c0) ** (n + 2)
    return sp.nsimplify(sp.simplify(value / base))


def top_cos(f, order, r, power):
    """Coefficient of cos^-order at c = 0, s = 1, times r^power."""
    g = sp.cancel(sp.together(f) * c**order)
    return sp.nsimplify(sp.simplify(g.subs({c: 0, s: 1}) * r**power))


def ring_coefficients():
    r = sp.Symbol("r", positive=True)
    surf = tube(sp.Integer(1), sp.Integer(0), r)
    delta = 1 - r * c
    out = {}
    for n in range(1, 5):
        for m in (1, 2):
            f = s**m / (delta * c) ** n
            out[f"ring_recurrence_m{m}_n{n}"] = top_cos(surf.laplace_scalar(f), n + 2, r, 1)
    v = surf.normal
    for k in range(1, 5):
        v = surf.laplace_vec(v)
        out[f"ring_power_{k}"] = top_cos(v[1], 2 * k - 1, r, k)
    return out


def main():
    for key, q in ring_coefficients().items():
        print(f"{key} = {q}", flush=True)
    data = TubeData()
    print(f"lemma_m1_n2_h1 = {lemma_multiple(data, 1, 2, lambda d: 1)}", flush=True)
    print(f"lemma_m3_n5_h = {lemma_multiple(data, 3, 5, lambda d: (3 * d - 2) * (12 * d - 7))}", flush=True)
    multiples = tube_multiples(data, 3)
    for k, q in multiples.items():
        print(f"tube_h{k}_at_zero = {q}", flush=True)


if __name__ == "__main__":
    main()
