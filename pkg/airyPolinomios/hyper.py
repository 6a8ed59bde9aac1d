"""
Series hipergeométricas pFq, función gamma numérica y verificación de
los valores especiales de 2F1 (argumento -1/3) y 3F2 (argumento 3/4).

Dos modos de evaluación:

- exacto (``pfq_exact``): series terminantes con parámetros racionales;
  un parámetro inferior entero no positivo -N se admite solo si la serie
  termina antes, por un superior -M con M <= N;
- flotante (``pfq_numeric``): doble precisión con suma compensada.

Los lados derechos de las identidades se evalúan con ``gamma_numeric``;
en los puntos terminantes se usan en cambio los cocientes de Pochhammer
exactos, de modo que esas comprobaciones son exactas.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .errores import ErrorConvencion, ErrorConvergencia, ErrorDominio, ErrorPolo
from .ratcore import poch

logger = logging.getLogger(__name__)

Numero = Union[int, Fraction, float]

RADIO_POLO = 1e-6
MAX_TERMINOS = 10 ** 6

IDENTIDADES_2F1 = ("A", "B52", "B72", "Cm12", "C12")
IDENTIDADES_3F2 = ("Ta", "Tb", "Sa", "Sb", "Ra", "Rb", "RPa", "RPb")
IDENTIDADES_DOS_PARAMETROS = ("cos_case", "sin_case")

_MEDIO = Fraction(1, 2)


# =========================================================
# ESPECIFICACIÓN DE UNA SERIE
# =========================================================

def _es_entero(v):
    if isinstance(v, int):
        return True
    if isinstance(v, Fraction):
        return v.denominator == 1
    return float(v).is_integer()


def _entero_no_positivo(v):
    return _es_entero(v) and v <= 0


@dataclass(frozen=True)
class HyperSpec:
    """Instancia de pFq: parámetros superiores, inferiores y argumento."""

    upper: tuple
    lower: tuple
    arg: Numero

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))

    def es_exacto(self):
        valores = self.upper + self.lower + (self.arg,)
        return all(isinstance(v, (int, Fraction)) for v in valores)

    def corte(self):
        """Índice M del último término si la serie termina, si no None."""
        cortes = [-int(a) for a in self.upper if _entero_no_positivo(a)]
        return min(cortes) if cortes else None


# =========================================================
# EVALUACIÓN EXACTA
# =========================================================

def pfq_exact(spec: HyperSpec) -> Fraction:
    """
    Suma exacta de una serie terminante.

    Con un inferior -N emparejado con el superior terminante -M (M <= N)
    los cocientes (-M)_k/(-N)_k = M!(N-k)!/((M-k)!N!) aparecen solos al
    multiplicar los cocientes de términos, porque ningún factor inferior
    se anula para k <= M.
    """
    if not spec.es_exacto():
        raise ErrorDominio("pfq_exact requiere parámetros racionales")
    M = spec.corte()
    if M is None:
        raise ErrorDominio(f"Serie no terminante: {spec}")
    superiores = [Fraction(a) for a in spec.upper]
    inferiores = [Fraction(b) for b in spec.lower]
    z = Fraction(spec.arg)
    for b in inferiores:
        if _entero_no_positivo(b) and -int(b) < M:
            raise ErrorConvencion(
                f"El inferior {b} se anula antes del corte k = {M}: {spec}"
            )
    suma = Fraction(1)
    termino = Fraction(1)
    for k in range(M):
        numerador = z
        for a in superiores:
            numerador *= a + k
        denominador = Fraction(k + 1)
        for b in inferiores:
            denominador *= b + k
        termino = termino * numerador / denominador
        suma += termino
    return suma


# =========================================================
# EVALUACIÓN FLOTANTE
# =========================================================

class SumaCompensada:
    """Acumulador de Kahan-Babuska (Neumaier)."""

    __slots__ = ("suma", "compensacion")

    def __init__(self):
        self.suma = 0.0
        self.compensacion = 0.0

    def add(self, v):
        t = self.suma + v
        if abs(self.suma) >= abs(v):
            self.compensacion += (self.suma - t) + v
        else:
            self.compensacion += (v - t) + self.suma
        self.suma = t

    @property
    def valor(self):
        return self.suma + self.compensacion


def pfq_numeric(spec: HyperSpec, tol: float = 1e-16, max_terminos: int = MAX_TERMINOS) -> float:
    """
    Suma parcial en doble precisión hasta que dos términos seguidos
    aporten menos que tol relativo a la suma.
    """
    for b in spec.lower:
        if distancia_entero_no_positivo(float(b)) < RADIO_POLO:
            raise ErrorPolo(f"Parámetro inferior {b} en un polo")
    M = spec.corte()
    z = float(spec.arg)
    if M is None and abs(z) >= 1:
        raise ErrorDominio(f"|z| = {abs(z)} >= 1 en una serie no terminante")
    superiores = [float(a) for a in spec.upper]
    inferiores = [float(b) for b in spec.lower]
    acumulado = SumaCompensada()
    acumulado.add(1.0)
    termino = 1.0
    pequenos = 0
    k = 0
    while M is None or k < M:
        if k >= max_terminos:
            raise ErrorConvergencia(f"Sin convergencia tras {max_terminos} términos: {spec}")
        cociente = z / (k + 1)
        for a in superiores:
            cociente *= a + k
        for b in inferiores:
            cociente /= b + k
        termino *= cociente
        acumulado.add(termino)
        k += 1
        if termino == 0.0:
            break
        if abs(termino) <= tol * abs(acumulado.valor):
            pequenos += 1
            if pequenos >= 2:
                break
        else:
            pequenos = 0
    return acumulado.valor


# =========================================================
# GAMMA (LANCZOS g=7, 9 COEFICIENTES)
# =========================================================

_LANCZOS_G = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def sinpi(x):
    """sin(pi x) con reducción exacta del argumento."""
    n = round(x)
    s = math.sin(math.pi * (x - n))
    return -s if n % 2 else s


def cospi(x):
    """cos(pi x) con reducción exacta del argumento."""
    n = round(x)
    c = math.cos(math.pi * (x - n))
    return -c if n % 2 else c


def distancia_entero_no_positivo(v):
    """Distancia de v al entero no positivo más cercano."""
    return abs(v - min(round(v), 0))


def gamma_numeric(x: float) -> float:
    """Gamma en doble precisión; reflexión para x < 1/2."""
    x = float(x)
    if x <= 0 and x.is_integer():
        raise ErrorPolo(f"Gamma tiene un polo en {x}")
    if x < 0.5:
        return math.pi / (sinpi(x) * gamma_numeric(1.0 - x))
    x -= 1.0
    a = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        a += _LANCZOS[i] / (x + i)
    t = x + _LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (x + 0.5) * math.exp(-t) * a


def rgamma_numeric(x: float) -> float:
    """1/Gamma(x), que vale 0 en los polos de Gamma."""
    x = float(x)
    if x <= 0 and x.is_integer():
        return 0.0
    return 1.0 / gamma_numeric(x)


def error_mixto(lhs, rhs):
    """|l - r| / max(|r|, 1): relativo lejos de cero, absoluto cerca."""
    return float(abs(lhs - rhs)) / max(abs(float(rhs)), 1.0)


# =========================================================
# REGISTROS DE VERIFICACIÓN
# =========================================================

@dataclass(frozen=True)
class IdentityCheck:
    identity_id: str
    point: str
    lhs: Numero
    rhs: Numero
    rel_err: float
    exact: bool
    passed: bool


@dataclass
class IdentityReport:
    identity_id: str
    test_points: list = field(default_factory=list)
    max_rel_err: float = 0.0
    exact_passes: int = 0
    verdict: bool = True


def identity_sweep(identity_id: str, checks: Sequence[IdentityCheck], tol: float) -> IdentityReport:
    """Agrega los chequeos de una identidad en un informe."""
    informe = IdentityReport(identity_id)
    for chequeo in checks:
        informe.test_points.append(chequeo.point)
        if chequeo.exact:
            if chequeo.passed:
                informe.exact_passes += 1
            else:
                informe.verdict = False
        else:
            informe.max_rel_err = max(informe.max_rel_err, chequeo.rel_err)
    if informe.max_rel_err > tol:
        informe.verdict = False
    return informe


def _chequeo_exacto(identity_id, punto, lhs, rhs):
    return IdentityCheck(identity_id, str(punto), lhs, rhs, error_mixto(lhs, rhs), True, lhs == rhs)


def _chequeo_flotante(identity_id, punto, lhs, rhs, tol):
    err = error_mixto(lhs, rhs)
    return IdentityCheck(identity_id, str(punto), float(lhs), float(rhs), err, False, err <= tol)


def _exigir_lejos_de_polos(identity_id, punto, gammas, no_cero, radio=RADIO_POLO):
    d = distancia_polos(gammas, no_cero)
    if d < radio:
        raise ErrorPolo(f"{identity_id}: punto {punto} a {d:.3g} de un polo")


def distancia_polos(gammas, no_cero):
    """
    Menor distancia a una singularidad: los valores de ``gammas`` no deben
    ser enteros no positivos y los de ``no_cero`` no deben anularse.
    """
    d = math.inf
    for v in gammas:
        d = min(d, distancia_entero_no_positivo(float(v)))
    for v in no_cero:
        d = min(d, abs(float(v)))
    return d


def _lado_izquierdo(spec):
    if spec.es_exacto() and spec.corte() is not None:
        return float(pfq_exact(spec))
    return pfq_numeric(spec)


def _punto_terminante(a, multiplo):
    """n si a = -n*multiplo con n natural y a racional, si no None."""
    if not isinstance(a, (int, Fraction)):
        return None
    n = -Fraction(a) / multiplo
    if n.denominator == 1 and n >= 0:
        return int(n)
    return None


# =========================================================
# VALORES ESPECIALES DE 2F1 EN z = -1/3
# =========================================================

def spec_2f1(identity_id, a):
    """2F1(a, a+1/2; c | -1/3) con el c de cada identidad."""
    inferior = {
        "A": Fraction(3, 2) - 2 * a,
        "B52": Fraction(5, 2) - 2 * a,
        "B72": Fraction(7, 2) - 2 * a,
        "Cm12": -_MEDIO - 2 * a,
        "C12": _MEDIO - 2 * a,
    }[identity_id]
    return HyperSpec((a, a + _MEDIO), (inferior,), Fraction(-1, 3))


def _polos_2f1(identity_id, a):
    c = spec_2f1(identity_id, a).lower[0]
    if identity_id == "A":
        return [c, 2 / 3 - 2 * a, 2 - 4 * a], []
    if identity_id == "B52":
        return [c, 5 / 3 - 2 * a, 4 / 3 - 2 * a, 4 - 4 * a], [1 - 2 * a]
    if identity_id == "B72":
        return [c, 8 / 3 - 2 * a, 7 / 3 - 2 * a, 6 - 4 * a], [1 - 2 * a, 2 - 2 * a]
    if identity_id == "Cm12":
        return [c, 1 / 3 - 2 * a, 2 / 3 - 2 * a, -1 - 4 * a], [1 + 6 * a]
    return [c, 1 / 3 - 2 * a, 2 / 3 - 2 * a, 1 - 4 * a], []


def rhs_2f1(identity_id, a):
    """Lado derecho con gammas, en doble precisión."""
    a = float(a)
    g, rg = gamma_numeric, rgamma_numeric
    if identity_id == "A":
        return g(2 / 3 - 2 * a) * g(2 - 4 * a) * rg(2 - 6 * a) / (6 ** (2 * a) * g(2 / 3))
    if identity_id == "B52":
        llave = 2 * g(5 / 3 - 2 * a) / g(5 / 3) - g(4 / 3 - 2 * a) / g(4 / 3)
        return 6 ** (-2 * a) / (1 - 2 * a) * llave * g(4 - 4 * a) * rg(4 - 6 * a)
    if identity_id == "B72":
        llave = g(8 / 3 - 2 * a) / g(5 / 3) - g(7 / 3 - 2 * a) / g(4 / 3)
        return 6 ** (1 - 2 * a) / ((1 - 2 * a) * (2 - 2 * a)) * llave * g(6 - 4 * a) * rg(6 - 6 * a)
    if identity_id == "Cm12":
        llave = g(1 / 3 - 2 * a) / g(1 / 3) + (1 + 3 * a) / (1 + 6 * a) * g(2 / 3 - 2 * a) / g(2 / 3)
        return 6 ** (-2 * a) / 3 * llave * g(-1 - 4 * a) * rg(-1 - 6 * a)
    if identity_id == "C12":
        llave = g(1 / 3 - 2 * a) / g(1 / 3) + g(2 / 3 - 2 * a) / g(2 / 3)
        return 6 ** (-2 * a) / 2 * llave * g(1 - 4 * a) * rg(1 - 6 * a)
    raise ErrorDominio(f"Identidad 2F1 desconocida: {identity_id}")


def exact_rhs_2f1(identity_id, n):
    """Lado derecho en a = -n/2 como cociente exacto de Pochhammer."""
    F = Fraction
    if identity_id == "A":
        return F(6) ** n * poch(F(2, 3), n) / poch(F(2 * n + 2), n)
    if identity_id == "B52":
        return F(6) ** n / (n + 1) * (2 * poch(F(5, 3), n) - poch(F(4, 3), n)) / poch(F(2 * n + 4), n)
    if identity_id == "B72":
        llave = poch(F(5, 3), n + 1) - poch(F(4, 3), n + 1)
        return F(6) ** (n + 1) / ((n + 1) * (n + 2)) * llave / poch(F(2 * n + 6), n)
    if identity_id == "Cm12":
        # lim Gamma(-1+2n-4e)/Gamma(-1+3n-6e) vale 3/2 en n = 0
        rho = F(3, 2) if n == 0 else 1 / poch(F(2 * n - 1), n)
        llave = poch(F(1, 3), n) + F(2 - 3 * n, 2 - 6 * n) * poch(F(2, 3), n)
        return F(6) ** n / 3 * llave * rho
    if identity_id == "C12":
        return F(6) ** n / 2 * (poch(F(1, 3), n) + poch(F(2, 3), n)) / poch(F(2 * n + 1), n)
    raise ErrorDominio(f"Identidad 2F1 desconocida: {identity_id}")


def verify_2f1_value(identity_id: str, a: Numero, tol: float = 1e-9) -> IdentityCheck:
    """Compara ambos lados de una identidad 2F1 en el punto a."""
    if identity_id not in IDENTIDADES_2F1:
        raise ErrorDominio(f"Identidad 2F1 desconocida: {identity_id}")
    n = _punto_terminante(a, _MEDIO)
    if n is not None:
        lhs = pfq_exact(spec_2f1(identity_id, Fraction(a)))
        return _chequeo_exacto(identity_id, a, lhs, exact_rhs_2f1(identity_id, n))
    gammas, no_cero = _polos_2f1(identity_id, float(a))
    _exigir_lejos_de_polos(identity_id, a, gammas, no_cero)
    lhs = _lado_izquierdo(spec_2f1(identity_id, a))
    return _chequeo_flotante(identity_id, a, lhs, rhs_2f1(identity_id, a), tol)


# =========================================================
# VALORES ESPECIALES DE 3F2 EN z = 3/4
# =========================================================

def spec_3f2(identity_id, a):
    F = Fraction
    tabla = {
        "Ta": ((a, 3 * a - F(1, 2), F(3, 2) - 3 * a), (3 * a, F(1, 2))),
        "Tb": ((a, 3 * a - F(3, 2), F(7, 2) - 3 * a), (3 * a - 1, F(3, 2))),
        "Sa": ((a, F(1, 2) - 3 * a, F(1, 2) + 3 * a), (3 * a, F(1, 2))),
        "Sb": ((a, 3 * a - F(1, 2), F(5, 2) - 3 * a), (3 * a - 1, F(3, 2))),
        "Ra": ((a, 3 * a + F(3, 2), -F(1, 2) - 3 * a), (3 * a, F(1, 2))),
        "Rb": ((a, 3 * a + F(1, 2), F(3, 2) - 3 * a), (3 * a - 1, F(3, 2))),
        "RPa": ((a, 3 * a + F(1, 2), F(1, 2) - 3 * a), (3 * a - 1, F(1, 2))),
        "RPb": ((a, 3 * a - F(1, 2), F(5, 2) - 3 * a), (3 * a - 2, F(3, 2))),
    }
    if identity_id not in tabla:
        raise ErrorDominio(f"Identidad 3F2 desconocida: {identity_id}")
    superiores, inferiores = tabla[identity_id]
    return HyperSpec(superiores, inferiores, F(3, 4))


def _polos_3f2(identity_id, a):
    inferiores = list(spec_3f2(identity_id, a).lower)
    no_cero = {
        "Tb": [1 - 3 * a, 5 - 6 * a],
        "Sb": [1 - 2 * a, 1 - 3 * a],
        "Rb": [1 - 3 * a, 1 - 6 * a],
        "RPa": [1 - 3 * a],
        "RPb": [1 - 2 * a, 1 - 3 * a, 2 - 3 * a],
    }.get(identity_id, [])
    return inferiores + [3 * a], no_cero


def _base_t(a):
    return (2 * gamma_numeric(1 / 6) * gamma_numeric(3 * a) * rgamma_numeric(a)
            * sinpi(1 / 6 + a) * rgamma_numeric(2 * a + 1 / 6) / 3 ** (3 * a))


def _base_s(a):
    return (4 * math.sqrt(math.pi) * gamma_numeric(3 * a) * rgamma_numeric(a)
            * cospi(a) * rgamma_numeric(2 * a + 0.5) / 3 ** (3 * a))


def _base_r(a):
    return (2 * gamma_numeric(5 / 6) * gamma_numeric(3 * a) * rgamma_numeric(a)
            * sinpi(1 / 6 - a) * rgamma_numeric(2 * a + 5 / 6) / 3 ** (3 * a))


def rhs_3f2(identity_id, a):
    """Lado derecho con gammas y factores trigonométricos."""
    a = float(a)
    if identity_id == "Ta":
        return _base_t(a)
    if identity_id == "Tb":
        return (5 - 12 * a) / ((1 - 3 * a) * (5 - 6 * a)) * _base_t(a)
    if identity_id == "Sa":
        return _base_s(a)
    if identity_id == "Sb":
        return (1 - 4 * a) / ((1 - 2 * a) * (1 - 3 * a)) * _base_s(a)
    if identity_id == "Ra":
        return _base_r(a)
    if identity_id == "Rb":
        return (1 - 12 * a) / ((1 - 3 * a) * (1 - 6 * a)) * _base_r(a)
    prefactor = gamma_numeric(3 * a) * rgamma_numeric(a) / 3 ** (3 * a)
    seno_mas = gamma_numeric(1 / 6) * sinpi(1 / 6 + a) * rgamma_numeric(2 * a + 1 / 6)
    seno_menos = gamma_numeric(5 / 6) * sinpi(1 / 6 - a) * rgamma_numeric(2 * a + 5 / 6)
    if identity_id == "RPa":
        return prefactor / (1 - 3 * a) * (seno_mas + (1 - 12 * a) * seno_menos)
    if identity_id == "RPb":
        llave = (5 - 12 * a) * seno_mas + (1 - 12 * a) * (7 - 12 * a) * seno_menos
        return prefactor / ((1 - 2 * a) * (1 - 3 * a) * (2 - 3 * a) * 3) * llave
    raise ErrorDominio(f"Identidad 3F2 desconocida: {identity_id}")


def exact_rhs_3f2(identity_id, n):
    """
    Valor en a = -n: el coeficiente correspondiente de T, S, R o R'
    en x = 0 reescrito como cociente de Pochhammer.
    """
    F = Fraction
    signo = (-1) ** n
    nf = math.factorial(n)
    if identity_id == "Ta":
        return signo * F(27) ** n * poch(F(5, 6), 2 * n) * nf / math.factorial(3 * n)
    if identity_id == "Tb":
        return (3 * F(9) ** n * F(-3) ** n * poch(F(5, 6), 2 * n + 1) * nf
                / (math.factorial(3 * n + 1) * (3 * n + F(5, 2))))
    if identity_id == "Sa":
        return signo * F(27) ** n * poch(F(1, 2), 2 * n) * nf / math.factorial(3 * n)
    if identity_id == "Sb":
        return (signo * F(3) ** (3 * n + 1) * poch(F(1, 2), 2 * n + 1) * nf
                / (math.factorial(3 * n + 1) * (3 * n + F(3, 2))))
    if identity_id == "Ra":
        return signo * F(27) ** n * poch(F(1, 6), 2 * n) * nf / math.factorial(3 * n)
    if identity_id == "Rb":
        return (signo * F(3) ** (3 * n + 1) * poch(F(1, 6), 2 * n + 1) * nf
                / (math.factorial(3 * n + 1) * (3 * n + F(1, 2))))
    if identity_id == "RPa":
        return (signo * F(3) ** (3 * n + 1) * poch(F(1, 6), 2 * n + 1) * nf / math.factorial(3 * n + 1)
                + exact_rhs_3f2("Ta", n) / (6 * n + 2))
    if identity_id == "RPb":
        primero = F(9) ** (n + 1) * F(-3) ** n * poch(F(1, 6), 2 * n + 2) * nf / math.factorial(3 * n + 2)
        segundo = (3 * n + F(5, 2)) * exact_rhs_3f2("Tb", n) / (6 * n + 4)
        return (primero + segundo) / (3 * n + F(3, 2))
    raise ErrorDominio(f"Identidad 3F2 desconocida: {identity_id}")


def verify_3f2_value(identity_id: str, a: Numero, tol: float = 1e-8) -> IdentityCheck:
    """Compara ambos lados de una identidad 3F2 de un parámetro."""
    if identity_id not in IDENTIDADES_3F2:
        raise ErrorDominio(f"Identidad 3F2 desconocida: {identity_id}")
    n = _punto_terminante(a, Fraction(1))
    if n is not None:
        lhs = pfq_exact(spec_3f2(identity_id, Fraction(a)))
        return _chequeo_exacto(identity_id, a, lhs, exact_rhs_3f2(identity_id, n))
    gammas, no_cero = _polos_3f2(identity_id, float(a))
    _exigir_lejos_de_polos(identity_id, a, gammas, no_cero)
    lhs = _lado_izquierdo(spec_3f2(identity_id, a))
    return _chequeo_flotante(identity_id, a, lhs, rhs_3f2(identity_id, a), tol)


# --- Identidades con dos parámetros ---

def spec_3f2_two_param(identity_id, a, b):
    F = Fraction
    if identity_id == "cos_case":
        return HyperSpec((b, F(1, 2) - 3 * a, F(1, 2) + 3 * a), (3 * b, F(1, 2)), F(3, 4))
    if identity_id == "sin_case":
        return HyperSpec((b, 1 - 3 * a, 1 + 3 * a), (3 * b - 1, F(3, 2)), F(3, 4))
    raise ErrorDominio(f"Identidad de dos parámetros desconocida: {identity_id}")


def polos_two_param(identity_id, a, b):
    a, b = float(a), float(b)
    if identity_id == "cos_case":
        return [3 * b, 0.5 + a - b], []
    return [3 * b - 1, 1 + a - b], [a]


def rhs_3f2_two_param(identity_id, a, b):
    a, b = float(a), float(b)
    g, rg = gamma_numeric, rgamma_numeric
    if identity_id == "cos_case":
        return (4 * g(0.5 + a - b) * g(3 * b) * rg(0.5 + a + b) * rg(b) / 3 ** (3 * b)
                * cospi(a) * cospi(b - a))
    return (4 * g(1 + a - b) * g(3 * b - 1) * rg(a + b) * rg(b) / (3 ** (3 * b) * a)
            * sinpi(a) * sinpi(b - a))


def exact_rhs_3f2_two_param(identity_id, n, m):
    """
    Valor en b = m natural y en el a que hace terminar la serie en -n:
    a = (2n+1)/6 para cos_case y a = (n+1)/3 para sin_case. Las gammas
    quedan como factoriales y un Pochhammer; el producto trigonométrico
    es (-1)^m cos^2(pi a) o (-1)^(m+1) sen^2(pi a), que vale 3/4 o 0.
    """
    F = Fraction
    if m < 1:
        raise ErrorDominio(f"{identity_id}: se requiere b natural positivo, no {m}")
    if identity_id == "cos_case":
        a = F(2 * n + 1, 6)
        denominador = poch(F(1, 2) + a - m, 2 * m)
        cuadrado = 0 if n % 3 == 1 else F(3, 4)
        numerador = 4 * F(math.factorial(3 * m - 1), math.factorial(m - 1)) * (-1) ** m * cuadrado
    elif identity_id == "sin_case":
        a = F(n + 1, 3)
        denominador = poch(1 + a - m, 2 * m - 1) * a
        cuadrado = 0 if n % 3 == 2 else F(3, 4)
        numerador = 4 * F(math.factorial(3 * m - 2), math.factorial(m - 1)) * (-1) ** (m + 1) * cuadrado
    else:
        raise ErrorDominio(f"Identidad de dos parámetros desconocida: {identity_id}")
    if denominador == 0:
        raise ErrorPolo(f"{identity_id}: (a, b) = ({a}, {m}) en un polo de gamma")
    return numerador / denominador / F(27) ** m


def _punto_dos_parametros(identity_id, a, b):
    """(n, m) si b = m natural positivo y el segundo superior es -n, si no None."""
    if not isinstance(a, (int, Fraction)) or not isinstance(b, (int, Fraction)):
        return None
    if Fraction(b).denominator != 1 or b < 1:
        return None
    n = _punto_terminante(spec_3f2_two_param(identity_id, a, b).upper[1], Fraction(1))
    return None if n is None else (n, int(b))


def verify_3f2_two_param(identity_id: str, a: Numero, b: Numero, tol: float = 1e-8) -> IdentityCheck:
    """
    Identidades cos*cos y sin*sin. Con b natural y la serie terminante
    ambos lados son racionales y se comparan exactamente; si no, en
    doble precisión.
    """
    if identity_id not in IDENTIDADES_DOS_PARAMETROS:
        raise ErrorDominio(f"Identidad de dos parámetros desconocida: {identity_id}")
    punto = f"({a}, {b})"
    terminante = _punto_dos_parametros(identity_id, a, b)
    if terminante is not None:
        rhs = exact_rhs_3f2_two_param(identity_id, *terminante)
        lhs = pfq_exact(spec_3f2_two_param(identity_id, Fraction(a), int(b)))
        return _chequeo_exacto(identity_id, punto, lhs, rhs)
    gammas, no_cero = polos_two_param(identity_id, a, b)
    _exigir_lejos_de_polos(identity_id, punto, gammas, no_cero)
    lhs = _lado_izquierdo(spec_3f2_two_param(identity_id, a, b))
    return _chequeo_flotante(identity_id, punto, lhs, rhs_3f2_two_param(identity_id, a, b), tol)


# =========================================================
# F(a), F0(a), tau(a)
# =========================================================

def spec_f(a):
    """F(a) = 3F2(a, 3a-1/2, 3/2-3a; 3a, 1/2 | 3/4)."""
    return spec_3f2("Ta", a)


def polos_tau(a):
    a = float(a)
    return [3 * a, 1 - 3 * a, a + 1 / 3, a + 2 / 3], []


def f_value(a):
    gammas = [float(v) for v in spec_f(a).lower]
    _exigir_lejos_de_polos("F", a, gammas, [])
    return _lado_izquierdo(spec_f(a))


def f0_value(a):
    a = float(a)
    _exigir_lejos_de_polos("F0", a, [a + 1 / 3, a + 2 / 3], [])
    return (gamma_numeric(1 / 6) * gamma_numeric(a + 1 / 3) * gamma_numeric(a + 2 / 3)
            * sinpi(a + 1 / 6) * rgamma_numeric(2 * a + 1 / 6) / (math.pi * math.sqrt(3)))


def tau_value(a):
    gammas, no_cero = polos_tau(a)
    _exigir_lejos_de_polos("tau", a, gammas[:2], no_cero)
    af = float(a)
    factor = (3 ** (3 * af) * gamma_numeric(5 / 6) * gamma_numeric(1 - 3 * af)
              * rgamma_numeric(5 / 6 - 2 * af) * rgamma_numeric(1 - af))
    return f_value(a) * factor


def f0_and_tau(a):
    """(F0(a), tau(a)) en doble precisión."""
    return f0_value(a), tau_value(a)


def tau_tilde(a):
    """Cociente de senos con los ceros y polos observados de tau."""
    a = float(a)
    denominador = 2 * sinpi(a - 1 / 3) * sinpi(a - 2 / 3)
    if abs(denominador) < RADIO_POLO:
        raise ErrorPolo(f"tau_tilde tiene un polo cerca de {a}")
    return -sinpi(a - 5 / 6) * sinpi(2 * a - 5 / 6) / denominador


def constant_ratio(a):
    """F(a) / (tau_tilde(a) * cociente de gammas); vale -2."""
    tt = tau_tilde(a)
    if abs(tt) < RADIO_POLO:
        raise ErrorPolo(f"tau_tilde se anula cerca de {a}")
    return tau_value(a) / tt


# =========================================================
# MUESTREO DE PUNTOS
# =========================================================

def sample_points(rng, lo, hi, count, distancia, radio=1e-3, max_intentos=100000):
    """
    ``count`` puntos uniformes en (lo, hi) con distancia(a) >= radio.
    ``rng`` es un numpy.random.Generator; el orden es reproducible.
    """
    puntos = []
    intentos = 0
    while len(puntos) < count:
        intentos += 1
        if intentos > max_intentos:
            raise ErrorConvergencia("El muestreo no encontró puntos lejos de los polos")
        a = float(rng.uniform(lo, hi))
        if distancia(a) >= radio:
            puntos.append(a)
        else:
            logger.debug("Punto %.6g descartado por cercanía a un polo", a)
    return puntos


def distancia_2f1(identity_id):
    return lambda a: distancia_polos(*_polos_2f1(identity_id, a))


def distancia_3f2(identity_id):
    return lambda a: distancia_polos(*_polos_3f2(identity_id, a))


def distancia_doceavos(a):
    """Distancia a la rejilla a = k/12, donde tau y tau_tilde se anulan o divergen."""
    return abs(a * 12 - round(a * 12)) / 12
