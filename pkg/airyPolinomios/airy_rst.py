"""
Polinomios R_n, S_n, T_n de las derivadas de productos de funciones de Airy:

    (u v)^(n) = R_n u v + S_n (u v' + u' v) + T_n u' v',   u, v en {Ai, Bi}.

Rutas: recurrencia, formas cerradas con h~ (3F2 terminante en 3/4),
coeficientes h_{m,n} de la función generatriz y convolución con P/Q.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errores import ErrorDominio, ErrorTabla
from .hyper import HyperSpec, pfq_exact
from .ratcore import Poly, Series, binom, caida_factorial, poch, series_reciprocal_power, series_sqrt_reciprocal

X = Poly.x()
_TRINOMIO = Poly([3, -3, 1])

PRODUCTOS = {
    "AiAi": ("Ai", "Ai"),
    "AiBi": ("Ai", "Bi"),
    "BiBi": ("Bi", "Bi"),
}


@dataclass(frozen=True)
class RSTTriple:
    n: int
    r: Poly
    s: Poly
    t: Poly


class SolucionGeneral(NamedTuple):
    y: list
    ok: bool


# =========================================================
# RECURRENCIA
# =========================================================

def rst_recurrence(N):
    """R_{n+1} = R' + 2xS, S_{n+1} = R + S' + xT, T_{n+1} = 2S + T'."""
    ternas = [RSTTriple(0, Poly([1]), Poly(), Poly())]
    for n in range(N):
        r, s, t = ternas[-1].r, ternas[-1].s, ternas[-1].t
        ternas.append(RSTTriple(
            n + 1,
            r.derivative() + X * s * 2,
            r + s.derivative() + X * t,
            s * 2 + t.derivative(),
        ))
    return ternas


def rst_three_term_check(N):
    """R, S y T cumplen Y_{n+3} = 4x Y_{n+1} + (4n+2) Y_n para n <= N-3."""
    ternas = rst_recurrence(N)
    for familia in ("r", "s", "t"):
        y = [getattr(terna, familia) for terna in ternas]
        for n in range(N - 2):
            if y[n + 3] != X * y[n + 1] * 4 + y[n] * (4 * n + 2):
                return False
    return True


def product_rows(which):
    """Factores (u, v) del producto cuya derivada se pide."""
    try:
        return PRODUCTOS[which]
    except KeyError:
        raise ErrorDominio(f"Producto desconocido: {which}") from None


# =========================================================
# COEFICIENTES h Y h~
# =========================================================

def h_coeff(m, n):
    """[s^n] (1/2)(1-s)^(-1/2)(3-3s+s^2)^-(m+1), exacto."""
    serie: Series = series_sqrt_reciprocal(n) * series_reciprocal_power(_TRINOMIO, m, n)
    return serie[n] / 2


def h_via_3f2(m, n):
    """h_{m,n} por el 3F2 terminante invertido, con n = 2q + delta."""
    q, delta = divmod(n, 2)
    F = Fraction
    spec = HyperSpec(
        (-q, -m - q - F(1, 2), m + q + delta + F(3, 2)),
        (-m - q, delta + F(1, 2)),
        F(3, 4),
    )
    prefactor = F((-1) ** q * binom(m + q, m), 2 * 3 ** (m + q + 1)) * poch(m + q + F(3, 2), delta)
    return prefactor * pfq_exact(spec)


def tilde_h(m, n, delta, a, b):
    """
    (n+a)_delta 3F2(m-n, 1-a-n, n+delta+a; b-n, delta+1/2 | 3/4).

    El superior m-n se empareja con el inferior b-n; si b > m la serie
    llegaría al cero del inferior antes de terminar y pfq_exact lo rechaza.
    """
    a = Fraction(a)
    spec = HyperSpec(
        (m - n, 1 - a - n, n + delta + a),
        (b - n, delta + Fraction(1, 2)),
        Fraction(3, 4),
    )
    return poch(n + a, delta) * pfq_exact(spec)


def _ensamblar(q, delta, potencia_dos, coeficiente):
    """Suma sobre m de coeficiente(m) q!(-1/3)^(q-m) 2^potencia_dos(m) x^(3m-2q-delta)/((q-m)!(3m-2q-delta)!)."""
    total = Poly()
    desde = -(-(2 * q + delta) // 3)
    for m in range(desde, q + 1):
        potencia = 3 * m - 2 * q - delta
        factor = (Fraction(math.factorial(q), math.factorial(q - m) * math.factorial(potencia))
                  * Fraction(-1, 3) ** (q - m) * 2 ** potencia_dos(m))
        total = total + Poly.monomio(coeficiente(m) * factor, potencia)
    return total


def t_closed(n):
    """T_n = T_{2q+delta+2}."""
    if n < 2:
        return Poly()
    q, delta = divmod(n - 2, 2)
    return _ensamblar(q, delta, lambda m: 2 * m + 1,
                      lambda m: tilde_h(m, q, delta, Fraction(3, 2), 0))


def s_closed(n):
    """S_n = S_{2q+delta+1}."""
    if n < 1:
        return Poly()
    q, delta = divmod(n - 1, 2)
    return _ensamblar(q, delta, lambda m: 2 * m,
                      lambda m: tilde_h(m, q, delta, Fraction(1, 2), 0))


def r_closed(n):
    """R_n = R_{2q+delta}; el segundo término solo cuenta con q > 0."""
    q, delta = divmod(n, 2)

    def coeficiente(m):
        valor = tilde_h(m, q, delta, Fraction(-1, 2), 0)
        if q > 0:
            valor -= Fraction(3 * m - 2 * q - delta, 2 * q) * tilde_h(m, q, delta, Fraction(1, 2), 1)
        return valor

    return _ensamblar(q, delta, lambda m: 2 * m, coeficiente)


def t_from_h(n):
    """T_n = sum h_{m,n'-2m} 12^(m+1) m!/(3m-n')! x^(3m-n'), con n' = n - 2."""
    if n < 2:
        return Poly()
    k = n - 2
    total = Poly()
    for m in range(-(-k // 3), k // 2 + 1):
        coef = h_coeff(m, k - 2 * m) * 12 ** (m + 1) * caida_factorial(m, k - 2 * m)
        total = total + Poly.monomio(coef, 3 * m - k)
    return total


# =========================================================
# CONVOLUCIÓN Y SOLUCIÓN GENERAL
# =========================================================

def rst_convolution(n, pq):
    """R, S, T del índice n a partir de la tabla de pares P/Q (índices 0..n)."""
    if len(pq) <= n:
        raise ErrorTabla(f"La tabla P/Q llega a {len(pq) - 1} y se pide {n}")
    r, s, t = Poly(), Poly(), Poly()
    for k in range(n + 1):
        c = binom(n, k)
        a, b = pq[k], pq[n - k]
        r = r + a.p * b.p * c
        s = s + (a.p * b.q + a.q * b.p) * c
        t = t + a.q * b.q * c
    return RSTTriple(n, r, s * Fraction(1, 2), t)


def _como_poly(v):
    return v if isinstance(v, Poly) else Poly([v])


def rst_general_solution(y0, y1, y2, N):
    """
    Y_n = Y_0 R_n + Y_1 S_n + (Y_2/2 - x Y_0) T_n y comprobación de
    Y_{n+3} = 4x Y_{n+1} + (4n+2) Y_n con los valores iniciales dados.
    """
    y0, y1, y2 = _como_poly(y0), _como_poly(y1), _como_poly(y2)
    ternas = rst_recurrence(max(N, 2))
    tercero = y2 * Fraction(1, 2) - X * y0
    y = [y0 * terna.r + y1 * terna.s + tercero * terna.t for terna in ternas]
    ok = y[0] == y0 and y[1] == y1 and y[2] == y2
    for n in range(len(y) - 3):
        ok = ok and y[n + 3] == X * y[n + 1] * 4 + y[n] * (4 * n + 2)
    return SolucionGeneral(y[: N + 1], ok)


# =========================================================
# DESARROLLO EN x PEQUEÑO
# =========================================================

def rst_small_x_leading(n):
    """Primeros términos (familia, potencia, coef) de R_n, S_n, T_n cerca de 0."""
    k, r = divmod(n, 3)
    F = Fraction
    doce = F(12) ** k
    sexto, medio, cinco_sextos = poch(F(1, 6), k), poch(F(1, 2), k), poch(F(5, 6), k)
    siete_sextos, tres_medios = poch(F(7, 6), k), poch(F(3, 2), k)
    if r == 0:
        t = [(2, doce * (cinco_sextos - 2 * medio + sexto))]
        s = [(1, doce * (medio - sexto))]
        rr = [(0, doce * sexto), (3, doce * ((2 * k + 1) * sexto - medio))]
    elif r == 1:
        t = [(1, 2 * doce * (cinco_sextos - medio)),
             (4, doce / 2 * ((2 * k + 3) * cinco_sextos - (8 * k + 5) * medio + 2 * siete_sextos))]
        s = [(0, doce * medio), (3, doce * ((2 * k + 2) * medio - cinco_sextos - siete_sextos))]
        rr = [(2, doce * (siete_sextos - medio))]
    else:
        t = [(0, 2 * doce * cinco_sextos),
             (3, 2 * doce * ((2 * k + 2) * cinco_sextos - 3 * tres_medios + siete_sextos))]
        s = [(2, doce * (3 * tres_medios - cinco_sextos - 2 * siete_sextos))]
        rr = [(1, 12 * doce * poch(F(1, 6), k + 1)),
              (4, doce / 2 * ((2 * k + 5) * siete_sextos + cinco_sextos - 6 * tres_medios))]
    return ([("R", p, c) for p, c in rr] + [("S", p, c) for p, c in s]
            + [("T", p, c) for p, c in t])
