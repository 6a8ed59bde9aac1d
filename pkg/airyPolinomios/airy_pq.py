"""
Polinomios P_n, Q_n y Z_n.

Ai^(n)(x) = P_n(x) Ai(x) + Q_n(x) Ai'(x). Se calculan por recurrencia,
por las formas cerradas con los coeficientes g~_{m,n}, por las sumas
dobles clásicas y por reconstrucción desde las sucesiones de Laplace;
todas deben coincidir coeficiente a coeficiente.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errores import ErrorDominio
from .hyper import HyperSpec, pfq_exact
from .ratcore import Poly, binom, caida_factorial, poch, series_reciprocal_power, sturm_count_interval, sturm_real_roots

X = Poly.x()
_GENERADORA = Poly([1, -1, Fraction(1, 3)])

FAMILIAS = ("P", "Q", "Z", "R", "S", "T")

# Potencia de x que se divide al reducir, según n mod 3
_POTENCIA_REDUCCION = {
    "P": (0, 2, 1),
    "R": (0, 2, 1),
    "Q": (1, 0, 2),
    "S": (1, 0, 2),
    "Z": (2, 1, 0),
    "T": (2, 1, 0),
}


@dataclass(frozen=True)
class PQPair:
    n: int
    p: Poly
    q: Poly


@dataclass(frozen=True)
class LaplaceSeqs:
    mu: list
    nu: list
    mu_t: list
    nu_t: list


class Puente(NamedTuple):
    """Varias expresiones exactas que deben coincidir."""

    nombre: str
    valores: tuple

    @property
    def ok(self):
        return all(v == self.valores[0] for v in self.valores[1:])


class FilaCeros(NamedTuple):
    family: str
    n: int
    degree: int
    real_roots: int
    negative_roots: int
    positive_roots: int
    simple: bool


# =========================================================
# RECURRENCIAS
# =========================================================

def pq_recurrence(N):
    """P_0 = 1, Q_0 = 0; P_{n+1} = P_n' + x Q_n, Q_{n+1} = P_n + Q_n'."""
    pares = [PQPair(0, Poly([1]), Poly())]
    for n in range(N):
        p, q = pares[-1].p, pares[-1].q
        pares.append(PQPair(n + 1, p.derivative() + X * q, p + q.derivative()))
    return pares


def z_recurrence(N):
    """Z_0 = Z_1 = 0, Z_2 = 1, Z_{n+3} = x Z_{n+1} + (n+1) Z_n."""
    z = [Poly(), Poly(), Poly([1])]
    for n in range(N - 2):
        z.append(X * z[n + 1] + z[n] * (n + 1))
    return z[: N + 1]


def pq_three_term_check(N):
    """P, Q y Z cumplen Y_{n+3} = x Y_{n+1} + (n+1) Y_n para n <= N-3."""
    pares = pq_recurrence(N)
    familias = ([par.p for par in pares], [par.q for par in pares], z_recurrence(N))
    for y in familias:
        for n in range(N - 2):
            if y[n + 3] != X * y[n + 1] + y[n] * (n + 1):
                return False
    return True


# =========================================================
# COEFICIENTES g~ Y FORMAS CERRADAS
# =========================================================

def gtilde(m, n):
    """[t^n] (1 - t + t^2/3)^-(m+1); vale 0 para n negativo."""
    if n < 0:
        return Fraction(0)
    return series_reciprocal_power(_GENERADORA, m, n)[n]


def gtilde_via_2f1(m, n):
    """2^-n binom(n+2m+1, n) 2F1(-n/2, -(n-1)/2; m+3/2 | -1/3)."""
    spec = HyperSpec(
        (Fraction(-n, 2), Fraction(1 - n, 2)),
        (m + Fraction(3, 2),),
        Fraction(-1, 3),
    )
    return Fraction(binom(n + 2 * m + 1, n), 2 ** n) * pfq_exact(spec)


def gtilde_gegenbauer(m, n):
    """3^(-n/2) C_n^(m+1)(sqrt(3)/2) por la recurrencia de tres términos."""
    lam = m + 1
    x = math.sqrt(3) / 2
    anterior, actual = 1.0, 2 * lam * x
    if n == 0:
        return 1.0
    for k in range(2, n + 1):
        anterior, actual = actual, (2 * x * (k + lam - 1) * actual - (k + 2 * lam - 2) * anterior) / k
    return actual / 3 ** (n / 2)


def _rango_m(n):
    return range(-(-n // 3), n // 2 + 1)


def q_closed(n):
    """Q_{n+1} = sum g~_{m,n-2m} m!/(3m-n)! x^(3m-n), n/3 <= m <= n/2."""
    q = Poly()
    for m in _rango_m(n):
        q = q + Poly.monomio(gtilde(m, n - 2 * m) * caida_factorial(m, n - 2 * m), 3 * m - n)
    return q


def p_closed(n):
    """P_n con {g~_{m,n-2m} - g~_{m,n-2m-1}}; el segundo es 0 si n = 2m."""
    p = Poly()
    for m in _rango_m(n):
        coef = gtilde(m, n - 2 * m) - gtilde(m, n - 2 * m - 1)
        p = p + Poly.monomio(coef * caida_factorial(m, n - 2 * m), 3 * m - n)
    return p


# --- Sumas dobles clásicas ---

# delta -> (k1, l1, m1, k2, l2, m2)
_PARAMETROS_MP = {
    0: (0, 0, 0, 1, 1, 0),
    1: (1, 2, 1, 0, 0, 0),
    2: (0, 1, 1, 1, 2, 1),
}


def _suma_doble(m, k0, l0, m0, desplazamiento):
    total = Poly()
    for k in range(0, (m - k0) // 2 + 1):
        grado = 3 * k + l0
        interior = Fraction(0)
        for l in range(grado + 1):
            interior += (-1) ** l * binom(grado, l) * poch(Fraction(desplazamiento - l, 3), m + m0 + k)
        coef = Fraction(3) ** (m + m0 + k) * interior / math.factorial(grado)
        total = total + Poly.monomio(coef, grado)
    return total


def pq_maurone_phares(n):
    """(P_n, Q_n) por las sumas dobles según n mod 3."""
    m, delta = divmod(n, 3)
    k1, l1, m1, k2, l2, m2 = _PARAMETROS_MP[delta]
    return _suma_doble(m, k1, l1, m1, 1), _suma_doble(m, k2, l2, m2, 2)


# =========================================================
# DESARROLLOS EN x PEQUEÑO Y x GRANDE
# =========================================================

def pq_small_x_leading(n):
    """Primeros términos (familia, potencia, coef) de P_n y Q_n cerca de 0."""
    k, r = divmod(n, 3)
    F = Fraction
    t = F(3) ** k
    tercio, dos_tercios = poch(F(1, 3), k), poch(F(2, 3), k)
    cuatro, cinco = poch(F(4, 3), k), poch(F(5, 3), k)
    if r == 0:
        p = [(0, t * tercio), (3, t / 2 * ((k + 1) * tercio - dos_tercios))]
        q = [(1, t * (dos_tercios - tercio)), (4, t / 8 * ((k + 2) * dos_tercios - (4 * k + 2) * tercio))]
    elif r == 1:
        p = [(2, t / 2 * (cuatro - dos_tercios)), (5, t / 40 * ((k + 8) * cuatro - (10 * k + 8) * dos_tercios))]
        q = [(0, t * dos_tercios), (3, t / 2 * ((k + 1) * dos_tercios - cuatro))]
    else:
        p = [(1, t * cuatro), (4, t / 8 * ((k + 4) * cuatro - 4 * cinco))]
        q = [(2, t * (cinco - cuatro)), (5, t / 40 * ((2 * k + 10) * cinco - (5 * k + 10) * cuatro))]
    return [("P", pot, c) for pot, c in p] + [("Q", pot, c) for pot, c in q]


def pq_large_x_terms(n):
    """
    Hasta tres términos principales de P_2n, P_2n+1, Q_2n, Q_2n+1 como
    (familia, índice, potencia, coef); se omiten potencias negativas.
    """
    F = Fraction
    b = binom
    candidatos = [
        ("P", 2 * n, n, F(1)),
        ("P", 2 * n, n - 3, F(b(n, 3) * (3 * n - 5))),
        ("P", 2 * n, n - 6, F(10 * b(n, 6) * (3 * n * n - 15 * n + 10))),
        ("P", 2 * n + 1, n - 1, F(n * n)),
        ("P", 2 * n + 1, n - 4, F(4 * b(n, 4) * (n * n - 2 * n - 1))),
        ("P", 2 * n + 1, n - 7, F(14 * b(n, 7) * (3 * n ** 3 - 17 * n * n + 8 * n + 8))),
        ("Q", 2 * n, n - 2, F(2 * b(n, 2))),
        ("Q", 2 * n, n - 5, F(20 * b(n, 5) * (n - 1))),
        ("Q", 2 * n, n - 8, F(112 * b(n, 8) * (3 * n - 2) * (n - 3))),
        ("Q", 2 * n + 1, n, F(1)),
        ("Q", 2 * n + 1, n - 3, F(b(n, 3) * (3 * n + 1))),
        ("Q", 2 * n + 1, n - 6, F(10 * b(n, 6) * (3 * n * n - 3 * n - 2))),
    ]
    return [c for c in candidatos if c[2] >= 0]


def z_small_x_leading(n):
    """Término principal de Z_n en x = 0 como [(potencia, coef)]."""
    k, r = divmod(n, 3)
    F = Fraction
    t = F(3) ** k
    fact = math.factorial(k)
    if r == 0:
        return [(2, t / 2 * (fact - 2 * poch(F(2, 3), k) + poch(F(1, 3), k)))]
    if r == 1:
        return [(1, t * (fact - poch(F(2, 3), k)))]
    return [(0, t * fact)]


def z_large_x_terms(n):
    """Dos términos principales de Z_{2n+2} y Z_{2n+3} (familia, índice, potencia, coef)."""
    F = Fraction
    candidatos = [("Z", 2 * n + 2, n, F(1)), ("Z", 2 * n + 3, n - 1, F(n * (n + 2)))]
    if n >= 3:
        candidatos.append(("Z", 2 * n + 2, n - 3, F((n - 1) * (n - 2) * (3 * n * n + 7 * n + 6), 6)))
    if n >= 4:
        candidatos.append(("Z", 2 * n + 3, n - 4, F(binom(n - 1, 3) * (n + 2) * (n * n + 2 * n + 3))))
    return [c for c in candidatos if c[2] >= 0]


def coincide_prefijo(p, terminos):
    """
    Los coeficientes de p entre la menor y la mayor potencia listada (o el
    grado de p si es mayor) coinciden con la lista; lo no listado es 0.
    """
    listados = {}
    for pot, c in terminos:
        listados[pot] = listados.get(pot, 0) + c
    desde = min(listados)
    hasta = max(max(listados), p.degree())
    return all(p.coeff(k) == listados.get(k, 0) for k in range(desde, hasta + 1))


def coincide_desde_cero(p, terminos):
    """Como coincide_prefijo pero desde x^0 hasta la mayor potencia listada."""
    listados = dict(terminos)
    return all(p.coeff(k) == listados.get(k, 0) for k in range(max(listados) + 1))


# =========================================================
# POLINOMIOS Z Y COEFICIENTES LAMBDA
# =========================================================

def _lambda(z, m, n):
    if n < 0 or not (3 * m >= n and 2 * m <= n):
        return Fraction(0)
    potencia = 3 * m - n
    return z[n + 2].coeff(potencia) * math.factorial(potencia) / math.factorial(m)


def z_lambda_check(N):
    """
    Extrae lambda_{m,n} de Z_{n+2}, comprueba que Z_{n+2} se reconstruye
    con ellos y que m lambda_{m,n} = (3m-n) lambda_{m-1,n-2} + n lambda_{m-1,n-3};
    también los valores de Z en x pequeño.
    """
    if N < 2:
        raise ErrorDominio("z_lambda_check requiere N >= 2")
    z = z_recurrence(N)
    for n in range(N - 1):
        reconstruido = Poly()
        for m in _rango_m(n):
            reconstruido = reconstruido + Poly.monomio(_lambda(z, m, n) * caida_factorial(m, n - 2 * m), 3 * m - n)
        if reconstruido != z[n + 2]:
            return False
        for m in _rango_m(n):
            if m == 0:
                continue
            izquierda = m * _lambda(z, m, n)
            derecha = (3 * m - n) * _lambda(z, m - 1, n - 2) + n * _lambda(z, m - 1, n - 3)
            if izquierda != derecha:
                return False
    return all(coincide_desde_cero(z[n], z_small_x_leading(n)) for n in range(N + 1))


# =========================================================
# SUCESIONES DE LAPLACE
# =========================================================

def _sucesion_laplace(mu0, nu0, mu1, nu1, N):
    mu = [Poly([mu0]), Poly([mu1])]
    nu = [Poly([nu0]), Poly([nu1])]
    for k in range(max(N - 1, 0)):
        mu.append(nu[k] * (2 * k + 2))
        nu.append(mu[k + 1] * (2 * k + 3) + X * mu[k] * (2 * k + 2))
    return mu[: N + 1], nu[: N + 1]


def laplace_seqs(N):
    """mu_{k+2} = (2k+2) nu_k, nu_{k+2} = (2k+3) mu_{k+1} + (2k+2) x mu_k."""
    mu, nu = _sucesion_laplace(1, 0, 0, 1, N)
    mu_t, nu_t = _sucesion_laplace(0, 1, 0, 0, N)
    return LaplaceSeqs(mu, nu, mu_t, nu_t)


def laplace_fourth_order_check(N):
    if N < 4:
        raise ErrorDominio("laplace_fourth_order_check requiere N >= 4")
    s = laplace_seqs(N)
    for y, (a, b) in ((s.mu, (3, 6)), (s.mu_t, (3, 6)), (s.nu, (4, 7)), (s.nu_t, (4, 7))):
        for k in range(N - 3):
            derecha = y[k + 1] * ((2 * k + a) * (2 * k + b)) + X * y[k] * ((2 * k + 2) * (2 * k + 6))
            if y[k + 4] != derecha:
                return False
    return True


def pq_parity_reconstruct(n):
    """(P_2n, P_2n+1, Q_2n, Q_2n+1) como sumas binomiales de mu, nu, mu~, nu~."""
    s = laplace_seqs(n)

    def combinar(y):
        total = Poly()
        for k in range(n + 1):
            total = total + y[k].mul_x(n - k) * binom(n, k)
        return total

    return combinar(s.mu), combinar(s.nu), combinar(s.mu_t), combinar(s.nu_t)


# =========================================================
# PUENTES CON 2F1
# =========================================================

def _f21(a, b, c):
    return pfq_exact(HyperSpec((a, b), (c,), Fraction(-1, 3)))


def two_f1_bridges(n, pares=None):
    """
    Coeficientes de P y Q cerca de 0 escritos como g~ y como 2F1 terminante.
    ``pares`` debe cubrir hasta el índice 3n+3.
    """
    F = Fraction
    if pares is None:
        pares = pq_recurrence(3 * n + 3)
    fn = math.factorial(n)
    fn1 = math.factorial(n + 1)
    puentes = [
        Puente("Q3n+1(0)", (
            pares[3 * n + 1].q.coeff(0),
            F(3) ** n * poch(F(2, 3), n),
            fn * gtilde(n, n),
            F(fn * binom(3 * n + 1, n), 2 ** n) * _f21(F(-n, 2), F(1 - n, 2), n + F(3, 2)),
        )),
        Puente("[x]Q3n+3", (
            pares[3 * n + 3].q.coeff(1),
            F(3) ** (n + 1) * (poch(F(2, 3), n + 1) - poch(F(1, 3), n + 1)),
            fn1 * gtilde(n + 1, n),
            F(fn1 * binom(3 * n + 3, n), 2 ** n) * _f21(F(-n, 2), F(1 - n, 2), n + F(5, 2)),
        )),
        Puente("P3n(0)", (
            pares[3 * n].p.coeff(0),
            F(3) ** n * poch(F(1, 3), n),
            fn * (gtilde(n, n) - gtilde(n, n - 1)),
        )),
        Puente("[x]P3n+2", (
            pares[3 * n + 2].p.coeff(1),
            F(3) ** n * poch(F(4, 3), n),
            fn1 * (gtilde(n + 1, n) - gtilde(n + 1, n - 1)),
        )),
    ]
    x2 = [
        pares[3 * n + 2].q.coeff(2),
        F(3) ** n * (poch(F(5, 3), n) - poch(F(4, 3), n)),
        F(fn1, 2) * gtilde(n + 1, n - 1),
    ]
    if n >= 1:
        x2.append(F(fn1 * binom(3 * n + 2, n - 1), 2 ** n) * _f21(F(1 - n, 2), F(2 - n, 2), n + F(5, 2)))
    puentes.append(Puente("[x^2]Q3n+2", tuple(x2)))
    return puentes


def gtilde_difference(m, n):
    """(g~_{m,n} - g~_{m,n-1}, la misma diferencia como combinación de dos 2F1)."""
    F = Fraction
    primero = F(3 * binom(n + 2 * m, n), 2 ** (n + 1)) * _f21(F(-n, 2), F(-n - 1, 2), m + F(1, 2))
    segundo = F(binom(n + 2 * m + 1, n), 2 ** (n + 1)) * _f21(F(1 - n, 2), F(-n, 2), m + F(3, 2))
    return gtilde(m, n) - gtilde(m, n - 1), primero - segundo


# =========================================================
# POLINOMIOS REDUCIDOS Y CEROS
# =========================================================

def polinomio_familia(familia, n):
    """Miembro n de la familia calculado por recurrencia."""
    if familia in ("P", "Q"):
        par = pq_recurrence(n)[n]
        return par.p if familia == "P" else par.q
    if familia == "Z":
        return z_recurrence(max(n, 2))[n]
    if familia in ("R", "S", "T"):
        from .airy_rst import rst_recurrence

        terna = rst_recurrence(n)[n]
        return {"R": terna.r, "S": terna.s, "T": terna.t}[familia]
    raise ErrorDominio(f"Familia desconocida: {familia}")


def reduced_poly(familia, n, poly=None):
    """
    Divide la potencia de x prescrita para n mod 3 y comprime x^3 -> x.
    Sin ``poly`` se calcula el miembro de la familia.
    """
    if familia not in _POTENCIA_REDUCCION:
        raise ErrorDominio(f"Familia desconocida: {familia}")
    if poly is None:
        poly = polinomio_familia(familia, n)
    if poly.is_zero():
        raise ErrorDominio(f"{familia}_{n} es nulo: no hay reducción")
    s = _POTENCIA_REDUCCION[familia][n % 3]
    reducido = {}
    for k, c in enumerate(poly.coeffs):
        if not c:
            continue
        if k < s or (k - s) % 3:
            raise ErrorDominio(f"{familia}_{n} tiene el término x^{k} fuera de la estructura x^{s} x^(3j)")
        reducido[(k - s) // 3] = c
    return Poly([reducido.get(j, 0) for j in range(max(reducido) + 1)])


def fila_ceros(familia, n, poly=None):
    """Conteo de Sturm del polinomio reducido, o None si es nulo."""
    if poly is None:
        poly = polinomio_familia(familia, n)
    if poly.is_zero():
        return None
    reducido = reduced_poly(familia, n, poly)
    raices = sturm_real_roots(reducido)
    positivas = sturm_count_interval(reducido, Fraction(0), None)
    return FilaCeros(familia, n, reducido.degree(), raices.count_total, raices.count_negative,
                     positivas, raices.all_simple)
