"""Reference values for the unit tests, computed in 40-digit arithmetic.

Each block uses a route that shares no code with the library: closed forms,
Taylor expansion of explicit functions, polynomial roots, ODE integration of
the characteristics, and root finding. Run with python3; paste the printed
values into the tests.
"""
import mpmath as mp

mp.mp.dps = 40


def show(label, x):
    if isinstance(x, mp.mpc):
        print(f"{label}: {mp.nstr(x.real, 20)} {mp.nstr(x.imag, 20)}")
    else:
        print(f"{label}: {mp.nstr(x, 20)}")


# free unitary Brownian motion moments, closed form
def fubm(s, n):
    return mp.e ** (-n * s / 2) * sum(
        (-s) ** k / mp.factorial(k) * mp.mpf(n) ** (k - 1) * mp.binomial(n, k + 1)
        for k in range(n))


for n in range(1, 6):
    show(f"fubm s=1 n={n}", fubm(1, n))

# stationary moments, Taylor coefficients of the closed forms
def m_inf(a):
    A = (1 - 2 * mp.mpf(a)) / (2 * mp.mpf(a))
    return lambda z: (-A + mp.sqrt(A ** 2 * z + (A + 1) ** 2 * (1 - z))) / (1 - z)


for a in ['0.7', '0.3']:
    for n, c in enumerate(mp.taylor(m_inf(mp.mpf(a)), 0, 6)):
        show(f"stationary a={a} m{n}", c)


def m_half(a):
    c = 1 - 2 * mp.mpf(a)
    return lambda w: (-c * w / 2 + mp.sqrt(1 - w + c * c * w * w / 4)) / (1 - w)


for n, c in enumerate(mp.taylor(m_half(mp.mpf('0.7')), 0, 6)):
    show(f"stationary half a=0.7 m{n}", c)

# Herglotz transform: inverse of ((u-1)/(u+1)) e^{t u} near u = 1
for t, z in [(0.5, mp.mpf('0.3')), (1.0, mp.mpc('0.2', '0.1'))]:
    u = mp.findroot(lambda u: (u - 1) / (u + 1) * mp.e ** (t * u) - z, 1)
    show(f"herglotz t={t} z={z}", u)

# moment generating function by integrating the characteristics
# z' = (1-2a) z + 2a z (1-z) f, f' = a z f^2, from (z0, 1/(1-z0))
def characteristic_end(a, t, z0):
    sol = mp.odefun(lambda s, y: [(1 - 2 * a) * y[0] + 2 * a * y[0] * (1 - y[0]) * y[1],
                                  a * y[0] * y[1] ** 2], 0, [z0, 1 / (1 - z0)])
    return sol(t)


def mgf(a, t, z):
    a = mp.mpf(a)
    z0 = mp.findroot(lambda w: characteristic_end(a, t, w)[0] - z, z * mp.e ** (-(1 - 2 * a) * t))
    return characteristic_end(a, t, z0)[1]


mp.mp.dps = 25
show("mgf a=0.6 t=1 z=0.03+0.02i", mgf('0.6', 1, mp.mpc('0.03', '0.02')))
show("mgf a=0.4 t=1 z=0.04", mgf('0.4', 1, mp.mpf('0.04')))
mp.mp.dps = 40

# endpoints of the rescaled map's bijection interval
def vt(a, t, u):
    return (u - 1) * (u - 1 + 2 * a) / ((u + 1) * (u + 1 - 2 * a)) * mp.e ** (t * u)


a, t = mp.mpf('0.7'), mp.mpf(1)
show("vmap a=0.7 t=1 a", mp.findroot(lambda u: vt(a, t, u) + 1, 0.8))
show("vmap a=0.7 t=1 b", mp.findroot(lambda u: vt(a, t, u) - 1, 1.5))
s = mp.sqrt(2 * a - 1)
show("t0(0.7)", (a - s) / (a * (1 - a)))
show("t1(0.7)", (a + s) / (a * (1 - a)))
a, t = mp.mpf('0.3'), mp.mpf(1)
u = mp.findroot(lambda u: mp.diff(lambda x: vt(a, t, x), u), 0.8)
show("vmap a=0.3 t=1 min location", u)
show("vmap a=0.3 t=1 min value", vt(a, t, u))

# inverse coefficients of chi by Lagrange: b_n = [w^{n-1}] (w/chi(w))^n / n
def chi(a, t, w):
    return w * (w + a) / ((w + 1) * (w + 1 - a)) * mp.e ** ((1 + 2 * w) * t)


for a, t in [(mp.mpf('0.7'), mp.mpf(1)), (mp.mpf('0.5'), mp.mpf(3))]:
    for n in [1, 2, 3, 5, 8]:
        g = lambda w: (1 / ((w + a) / ((w + 1) * (w + 1 - a)) * mp.e ** ((1 + 2 * w) * t))) ** n
        bn = mp.taylor(g, 0, n - 1)[n - 1] / n
        show(f"chi inverse a={a} t={t} b{n}", bn)

# critical points at a = 0.7, t = 7: (1-a)(w^2+w+a/2) + t w(1+w)(w+a)(w+1-a) = 0
a, t = mp.mpf('0.7'), mp.mpf(7)
# coefficients by interpolation at five points
pts = [mp.mpf(k) for k in range(5)]
vals = [t * w * (1 + w) * (w + a) * (w + 1 - a) + (1 - a) * (w * w + w + a / 2) for w in pts]
coef = mp.lu_solve(mp.matrix([[w ** (4 - j) for j in range(5)] for w in pts]), mp.matrix(vals))
roots = sorted(mp.polyroots([coef[i] for i in range(5)], maxsteps=200, extraprec=100), key=lambda r: mp.re(r))
for r in roots:
    show("critical point a=0.7 t=7", r)
