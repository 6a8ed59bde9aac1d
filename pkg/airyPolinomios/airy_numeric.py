"""
Evaluación en doble precisión de los átomos de Airy f, g y de Ai, Bi,
sus derivadas n-ésimas y las de sus productos. Las diferencias finitas
de contraste se calculan con mpmath.

Las series de Maclaurin solo se usan en |x| <= 8; fuera de esa ventana la
cancelación destruye la precisión y se rechaza la entrada.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import mpmath

from .airy_pq import PQPair, pq_recurrence
from .airy_rst import RSTTriple, product_rows
from .errores import ErrorConvergencia, ErrorDominio
from .hyper import SumaCompensada, gamma_numeric
from .ratcore import binom, caida_factorial

X_MAX = 8.0
MAX_TERMINOS_SERIE = 400
MAX_TERMINOS_COLA = 10 ** 5

# Precisión de trabajo de las diferencias finitas de orden alto
DIGITOS_DIFERENCIAS = 30


@dataclass(frozen=True)
class AiryConsts:
    c1: float
    c2: float


CONSTANTES = AiryConsts(
    c1=3 ** (-2 / 3) / gamma_numeric(2 / 3),
    c2=3 ** (-1 / 3) / gamma_numeric(1 / 3),
)
RAIZ_3 = math.sqrt(3)


@dataclass(frozen=True)
class AiryQuad:
    x: float
    f: float
    g: float
    fp: float
    gp: float

    @property
    def wronskiano(self):
        return self.f * self.gp - self.g * self.fp


class ValoresAiry(NamedTuple):
    ai: float
    bi: float
    aip: float
    bip: float


class LambdaTail(NamedTuple):
    via_closed: float
    via_series: float


def _exigir_ventana(x):
    if not abs(x) <= X_MAX:
        raise ErrorDominio(f"|x| = {abs(x)} fuera de la ventana de la serie (|x| <= {X_MAX})")


# =========================================================
# ÁTOMOS f, g
# =========================================================

def airy_atoms(x: float, tol: float = 1e-16) -> AiryQuad:
    """
    f = sum (1/3)_k 3^k x^3k/(3k)!, g = sum (2/3)_k 3^k x^(3k+1)/(3k+1)!
    y sus derivadas término a término.
    """
    x = float(x)
    _exigir_ventana(x)
    x2, x3 = x * x, x * x * x
    sumas = [SumaCompensada() for _ in range(4)]
    a = b = 1.0
    potencia = 1.0
    potencia_anterior = 0.0
    for k in range(MAX_TERMINOS_SERIE):
        terminos = (
            a * potencia,
            b * potencia * x,
            a * 3 * k * potencia_anterior * x2,
            b * (3 * k + 1) * potencia,
        )
        for suma, termino in zip(sumas, terminos):
            suma.add(termino)
        if k > 0 and all(abs(t) < tol * (abs(s.valor) + 1) for s, t in zip(sumas, terminos)):
            break
        a /= (3 * k + 2) * (3 * k + 3)
        b /= (3 * k + 3) * (3 * k + 4)
        potencia_anterior, potencia = potencia, potencia * x3
    f, g, fp, gp = (s.valor for s in sumas)
    return AiryQuad(x, f, g, fp, gp)


def ai_bi(x: float) -> ValoresAiry:
    """Ai = c1 f - c2 g, Bi = sqrt(3)(c1 f + c2 g) y sus derivadas."""
    q = airy_atoms(x)
    c1, c2 = CONSTANTES.c1, CONSTANTES.c2
    return ValoresAiry(
        ai=c1 * q.f - c2 * q.g,
        bi=RAIZ_3 * (c1 * q.f + c2 * q.g),
        aip=c1 * q.fp - c2 * q.gp,
        bip=RAIZ_3 * (c1 * q.fp + c2 * q.gp),
    )


# =========================================================
# DERIVADAS
# =========================================================

def _exigir_indice(n, registro):
    if registro.n != n:
        raise ErrorDominio(f"Se pidió n = {n} pero los polinomios son del índice {registro.n}")


def ai_derivative(n: int, x: float, pq: PQPair) -> float:
    """Ai^(n)(x) = P_n(x) Ai(x) + Q_n(x) Ai'(x)."""
    _exigir_indice(n, pq)
    v = ai_bi(x)
    return pq.p.eval_real(x) * v.ai + pq.q.eval_real(x) * v.aip


def bi_derivative(n: int, x: float, pq: PQPair) -> float:
    _exigir_indice(n, pq)
    v = ai_bi(x)
    return pq.p.eval_real(x) * v.bi + pq.q.eval_real(x) * v.bip


def product_derivative(which: str, n: int, x: float, rst: RSTTriple) -> float:
    """(u v)^(n) = R_n u v + S_n (u v' + u' v) + T_n u' v'."""
    _exigir_indice(n, rst)
    u_nombre, v_nombre = product_rows(which)
    valores = ai_bi(x)
    pares = {"Ai": (valores.ai, valores.aip), "Bi": (valores.bi, valores.bip)}
    u, up = pares[u_nombre]
    v, vp = pares[v_nombre]
    return (rst.r.eval_real(x) * u * v
            + rst.s.eval_real(x) * (u * vp + up * v)
            + rst.t.eval_real(x) * up * vp)


def atom_derivative(n: int, x: float, which: str, tol: float = 1e-16) -> float:
    """Derivada n-ésima de f o g derivando su serie de Maclaurin término a término."""
    x = float(x)
    _exigir_ventana(x)
    if which not in ("f", "g"):
        raise ErrorDominio(f"Átomo desconocido: {which}")
    desplazamiento = 0 if which == "f" else 1
    suma = SumaCompensada()
    coef = Fraction(1)
    for k in range(MAX_TERMINOS_SERIE):
        grado = 3 * k + desplazamiento
        if grado >= n:
            termino = float(coef * caida_factorial(grado, n)) * x ** (grado - n)
            suma.add(termino)
            if grado > n and abs(termino) < tol * (abs(suma.valor) + 1):
                break
        coef /= (grado + 2) * (grado + 3)
    return suma.valor


def ai_bi_derivative_series(n: int, x: float):
    """(Ai^(n)(x), Bi^(n)(x)) desde las series derivadas de f y g."""
    fn = atom_derivative(n, x, "f")
    gn = atom_derivative(n, x, "g")
    c1, c2 = CONSTANTES.c1, CONSTANTES.c2
    return c1 * fn - c2 * gn, RAIZ_3 * (c1 * fn + c2 * gn)


def _contexto_mpmath(digitos):
    """Contexto mpmath propio; la precisión global de mpmath no se toca."""
    ctx = mpmath.MPContext()
    ctx.dps = digitos
    return ctx


def richardson_derivative(fn, n: int, x: float, h: float = 0.01, niveles: int = 2,
                          digitos: int = DIGITOS_DIFERENCIAS) -> float:
    """
    Diferencia central de orden n con pasos h, h/2, ..., extrapolada
    ``niveles`` veces; el error de la diferencia central es par en h.

    El cociente divide el redondeo por h^n, así que todo se evalúa en un
    contexto mpmath de ``digitos`` cifras: ``fn(ctx, t)`` recibe ese
    contexto y un mpf.
    """
    ctx = _contexto_mpmath(digitos)
    x = ctx.mpf(x)
    mitad = ctx.mpf(n) / 2

    def central(paso):
        total = ctx.fsum((-1) ** j * binom(n, j) * fn(ctx, x + (mitad - j) * paso) for j in range(n + 1))
        return total / paso ** n

    tabla = [central(ctx.mpf(h) / 2 ** i) for i in range(niveles + 1)]
    for nivel in range(1, niveles + 1):
        factor = 4 ** nivel
        tabla = [(factor * fino - grueso) / (factor - 1) for grueso, fino in zip(tabla, tabla[1:])]
    return float(tabla[0])


def producto_mpmath(which: str):
    """u(t) v(t) del producto con las funciones de Airy de mpmath, para ``richardson_derivative``."""
    u_nombre, v_nombre = product_rows(which)

    def valor(ctx, t):
        funciones = {"Ai": ctx.airyai, "Bi": ctx.airybi}
        return funciones[u_nombre](t) * funciones[v_nombre](t)

    return valor


# =========================================================
# FUNCIÓN GENERATRIZ Y COLA LAMBDA
# =========================================================

def genfun_check(x: float, t: float, N: int, pq=None):
    """
    Desviaciones absolutas de sum P_n(x) t^n/n! frente a
    g'(x) f(x+t) - f'(x) g(x+t), y de la suma de Q_n frente a
    f(x) g(x+t) - g(x) f(x+t).
    """
    if abs(t) > 1:
        raise ErrorDominio(f"|t| = {abs(t)} > 1")
    _exigir_ventana(x)
    _exigir_ventana(x + t)
    if pq is None:
        pq = pq_recurrence(N)
    suma_p, suma_q = SumaCompensada(), SumaCompensada()
    factor = 1.0
    for n in range(N + 1):
        suma_p.add(pq[n].p.eval_real(x) * factor)
        suma_q.add(pq[n].q.eval_real(x) * factor)
        factor *= t / (n + 1)
    en_x, desplazado = airy_atoms(x), airy_atoms(x + t)
    generatriz_p = en_x.gp * desplazado.f - en_x.fp * desplazado.g
    generatriz_q = en_x.f * desplazado.g - en_x.g * desplazado.f
    return abs(suma_p.valor - generatriz_p), abs(suma_q.valor - generatriz_q)


def lambda_tail(n: int, N: int, t: float) -> LambdaTail:
    """
    Lambda_{n,N}(t) por la forma cerrada (con mpmath, la resta cancela
    N+1 órdenes de t) y por la serie de la cola en doble precisión.
    """
    t = float(t)
    if not 0 < t < 1:
        raise ErrorDominio(f"t = {t} fuera de (0, 1)")
    alfa = n + 0.5

    ctx = _contexto_mpmath(20 + int((N + 1) * abs(math.log10(t))))
    tm = ctx.mpf(t)
    a = ctx.mpf(2 * n + 1) / 2
    parcial = ctx.fsum(ctx.rf(a, k) * tm ** k / ctx.factorial(k) for k in range(N + 1))
    cerrada = float(((1 - tm) ** (-a) - parcial) / tm ** (N + 1))

    suma = SumaCompensada()
    termino = 1.0
    for k in range(N + 1):
        termino *= (alfa + k) / (k + 1)
    k = N + 1
    while True:
        suma.add(termino)
        termino *= (alfa + k) / (k + 1) * t
        k += 1
        if termino < 1e-17 * suma.valor:
            break
        if k > MAX_TERMINOS_COLA:
            raise ErrorConvergencia(
                f"La cola lambda no convergió en {MAX_TERMINOS_COLA} términos (t = {t})")
    return LambdaTail(cerrada, suma.valor)
