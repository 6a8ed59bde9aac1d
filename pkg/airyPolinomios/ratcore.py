"""
Aritmética exacta sobre los racionales.

Contiene los tres tipos sobre los que se apoya todo el cálculo exacto:

- ``Fraction`` (de la biblioteca estándar) como número racional,
  siempre reducido y con denominador positivo.
- ``Poly``: polinomio denso en una variable con coeficientes racionales.
- ``Series``: serie de potencias truncada con orden explícito.

Además incluye el conteo exacto de raíces reales por cadenas de Sturm.
Todos los valores son inmutables; las funciones no guardan estado.
"""
import math
import re
from fractions import Fraction
from typing import NamedTuple, Optional

from .errores import ErrorDominio, ErrorPolo


# =========================================================
# NÚMEROS: POCHHAMMER Y BINOMIALES
# =========================================================

def poch(a, k):
    """Símbolo de Pochhammer (a)_k = a(a+1)...(a+k-1), con (a)_0 = 1."""
    if k < 0:
        raise ErrorDominio(f"Pochhammer con k negativo: {k}")
    resultado = 1
    for j in range(k):
        resultado *= a + j
    return resultado


def binom(n, k):
    """
    Coeficiente binomial entero. Vale 0 si k < 0 o si k > n >= 0; para n
    negativo usa la extensión por factorial descendente.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return (-1) ** k * math.comb(k - n - 1, k)


def caida_factorial(m, j):
    """m!/(m-j)! como entero exacto (producto de j factores)."""
    resultado = 1
    for i in range(j):
        resultado *= m - i
    return resultado


def _formato_coef(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


# =========================================================
# POLINOMIOS DENSOS
# =========================================================

_TERMINO = re.compile(r"(?:(\d+)|\((\d+)/(\d+)\))?(x(?:\^(\d+))?)?")


class Poly:
    """
    Polinomio denso: ``coeffs[k]`` es el coeficiente de x^k.

    El último coeficiente es distinto de cero salvo en el polinomio nulo,
    que se representa con la tupla vacía (grado -1).
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = [Fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    # --- Constructores ---

    @classmethod
    def monomio(cls, coef, k):
        if coef == 0:
            return cls()
        return cls([0] * k + [coef])

    @classmethod
    def constante(cls, c):
        return cls([c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    # --- Consultas ---

    @property
    def coeffs(self):
        return self._c

    def degree(self):
        return len(self._c) - 1

    def is_zero(self):
        return not self._c

    def coeff(self, k):
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def lowest_power(self):
        """Menor potencia con coeficiente no nulo (None para el nulo)."""
        for k, c in enumerate(self._c):
            if c:
                return k
        return None

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, otro):
        if isinstance(otro, Poly):
            return self._c == otro._c
        if isinstance(otro, (int, Fraction)):
            return self._c == Poly.constante(otro)._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"Poly('{self.to_text()}')"

    def __str__(self):
        return self.to_text()

    # --- Anillo ---

    @staticmethod
    def _como_poly(v):
        if isinstance(v, Poly):
            return v
        if isinstance(v, (int, Fraction)):
            return Poly.constante(v)
        return None

    def __add__(self, otro):
        otro = self._como_poly(otro)
        if otro is None:
            return NotImplemented
        n = max(len(self._c), len(otro._c))
        return Poly([self.coeff(k) + otro.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self._c])

    def __sub__(self, otro):
        otro = self._como_poly(otro)
        if otro is None:
            return NotImplemented
        return self + (-otro)

    def __rsub__(self, otro):
        return (-self) + otro

    def __mul__(self, otro):
        if isinstance(otro, (int, Fraction)):
            return Poly([c * otro for c in self._c])
        if not isinstance(otro, Poly):
            return NotImplemented
        if not self._c or not otro._c:
            return Poly()
        res = [Fraction(0)] * (len(self._c) + len(otro._c) - 1)
        for i, a in enumerate(self._c):
            if not a:
                continue
            for j, b in enumerate(otro._c):
                res[i + j] += a * b
        return Poly(res)

    __rmul__ = __mul__

    def mul_x(self, k=1):
        """Multiplica por x^k."""
        if not self._c:
            return self
        return Poly([0] * k + list(self._c))

    def derivative(self):
        return Poly([k * c for k, c in enumerate(self._c)][1:])

    def eval(self, x):
        """Evaluación exacta por Horner."""
        resultado = Fraction(0)
        for c in reversed(self._c):
            resultado = resultado * x + c
        return resultado

    def eval_real(self, x):
        """Evaluación en doble precisión por Horner."""
        resultado = 0.0
        for c in reversed(self._c):
            resultado = resultado * x + float(c)
        return resultado

    def divmod(self, divisor):
        """División euclídea: devuelve (cociente, resto)."""
        if divisor.is_zero():
            raise ErrorDominio("División por el polinomio nulo")
        resto = list(self._c)
        gd = divisor.degree()
        lider = divisor._c[-1]
        cociente = [Fraction(0)] * max(len(resto) - gd, 0)
        for k in range(len(resto) - 1, gd - 1, -1):
            q = resto[k] / lider
            if q:
                cociente[k - gd] = q
                for j, d in enumerate(divisor._c):
                    resto[k - gd + j] -= q * d
        return Poly(cociente), Poly(resto[:gd] if gd > 0 else [])

    def monic(self):
        if not self._c:
            return self
        return self * (1 / self._c[-1])

    def gcd(self, otro):
        """Máximo común divisor mónico (el nulo si ambos son nulos)."""
        a, b = self, otro
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    # --- Texto ---

    def to_text(self):
        """
        Forma canónica de las tablas: potencias descendentes, sin '*',
        coeficientes unitarios omitidos (ej. ``x^7+770x^4+8680x``).
        """
        if not self._c:
            return "0"
        partes = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if not c:
                continue
            signo = "-" if c < 0 else ("+" if partes else "")
            a = abs(c)
            if k == 0:
                cuerpo = _formato_coef(a)
            else:
                variable = "x" if k == 1 else f"x^{k}"
                cuerpo = variable if a == 1 else _formato_coef(a) + variable
            partes.append(signo + cuerpo)
        return "".join(partes)

    @classmethod
    def from_text(cls, texto):
        """Lee el formato producido por to_text()."""
        s = texto.replace(" ", "")
        if s == "0":
            return cls()
        terminos = re.findall(r"[+-]?[^+-]+", s)
        if not terminos or "".join(terminos) != s:
            raise ErrorDominio(f"Polinomio ilegible: {texto!r}")
        res = {}
        for t in terminos:
            signo = -1 if t[0] == "-" else 1
            cuerpo = t.lstrip("+-")
            m = _TERMINO.fullmatch(cuerpo)
            if not cuerpo or m is None:
                raise ErrorDominio(f"Término ilegible: {t!r}")
            entero, num, den, var, exp = m.groups()
            if entero is not None:
                c = Fraction(int(entero))
            elif num is not None:
                c = Fraction(int(num), int(den))
            else:
                c = Fraction(1)
            k = 0 if var is None else (int(exp) if exp else 1)
            res[k] = res.get(k, Fraction(0)) + signo * c
        grado = max(res)
        return cls([res.get(k, 0) for k in range(grado + 1)])


# =========================================================
# SERIES DE POTENCIAS TRUNCADAS
# =========================================================

class Series:
    """Serie exacta módulo t^(order+1)."""

    __slots__ = ("_c", "order")

    def __init__(self, coeffs, order=None):
        c = [Fraction(v) for v in coeffs]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ErrorDominio("El orden de una serie no puede ser negativo")
        c = (c + [Fraction(0)] * (order + 1))[: order + 1]
        self._c = tuple(c)
        self.order = order

    @classmethod
    def from_poly(cls, p, order):
        return cls([p.coeff(k) for k in range(order + 1)], order)

    @property
    def coeffs(self):
        return self._c

    def __getitem__(self, k):
        if not 0 <= k <= self.order:
            raise ErrorDominio(f"Coeficiente t^{k} fuera del orden {self.order}")
        return self._c[k]

    def __eq__(self, otro):
        if not isinstance(otro, Series):
            return NotImplemented
        return self.order == otro.order and self._c == otro._c

    def __hash__(self):
        return hash((self.order, self._c))

    def __repr__(self):
        return f"Series({list(map(str, self._c))}, order={self.order})"

    def __add__(self, otro):
        orden = min(self.order, otro.order)
        return Series([self._c[k] + otro._c[k] for k in range(orden + 1)], orden)

    def __sub__(self, otro):
        orden = min(self.order, otro.order)
        return Series([self._c[k] - otro._c[k] for k in range(orden + 1)], orden)

    def __mul__(self, otro):
        if isinstance(otro, (int, Fraction)):
            return Series([c * otro for c in self._c], self.order)
        orden = min(self.order, otro.order)
        res = [Fraction(0)] * (orden + 1)
        for i in range(orden + 1):
            a = self._c[i]
            if not a:
                continue
            for j in range(orden + 1 - i):
                res[i + j] += a * otro._c[j]
        return Series(res, orden)

    __rmul__ = __mul__


def series_power(p, alpha, order):
    """
    Desarrollo exacto de p(t)^alpha hasta t^order.

    Usa la recurrencia de Miller
    f_k = 1/(k p_0) * sum_{j=1..k} ((alpha+1) j - k) p_j f_{k-j},
    lineal en el grado de p por coeficiente.
    """
    alpha = Fraction(alpha)
    p0 = p.coeff(0)
    if p0 == 0:
        raise ErrorPolo("p(0) = 0: la potencia tiene un polo en t = 0")
    if alpha.denominator != 1 and p0 != 1:
        raise ErrorDominio("Exponente no entero con p(0) != 1 deja el cuerpo racional")
    f = [p0 ** int(alpha) if alpha.denominator == 1 else Fraction(1)]
    grado = p.degree()
    for k in range(1, order + 1):
        acumulado = Fraction(0)
        for j in range(1, min(k, grado) + 1):
            acumulado += ((alpha + 1) * j - k) * p.coeff(j) * f[k - j]
        f.append(acumulado / (k * p0))
    return Series(f, order)


def series_reciprocal_power(p, m, order):
    """Desarrollo de p(t)^(-(m+1)) hasta t^order."""
    return series_power(p, -(m + 1), order)


def series_sqrt_reciprocal(order):
    """(1-s)^(-1/2): el coeficiente de s^k es binom(2k,k)/4^k."""
    return Series([Fraction(math.comb(2 * k, k), 4 ** k) for k in range(order + 1)], order)


# =========================================================
# RAÍCES REALES POR STURM
# =========================================================

class RaicesReales(NamedTuple):
    count_total: int
    count_negative: int
    all_simple: bool


def _signo(v):
    return (v > 0) - (v < 0)


def _variaciones(signos):
    previos = [s for s in signos if s]
    return sum(1 for a, b in zip(previos, previos[1:]) if a != b)


def cadena_sturm(p):
    """Cadena de restos con signo cambiado: p, p', -rem(p, p'), ..."""
    cadena = [p]
    siguiente = p.derivative()
    while not siguiente.is_zero():
        cadena.append(siguiente)
        siguiente = -cadena[-2].divmod(cadena[-1])[1]
    return cadena


def _variaciones_en(cadena, punto):
    return _variaciones([_signo(q.eval(punto)) for q in cadena])


def _variaciones_infinito(cadena, positivo):
    # signo del coeficiente líder, alternado por la paridad del grado en -inf
    signos = []
    for q in cadena:
        s = _signo(q.coeffs[-1])
        if not positivo and q.degree() % 2:
            s = -s
        signos.append(s)
    return _variaciones(signos)


def _parte_libre_cuadrados(p):
    g = p.gcd(p.derivative())
    return p.divmod(g)[0], g


def sturm_count_interval(p, a: Optional[Fraction] = None, b: Optional[Fraction] = None):
    """Raíces reales distintas de p en (a, b]; None equivale a -inf o +inf."""
    if p.is_zero():
        raise ErrorDominio("El polinomio nulo no tiene conteo de raíces")
    q, _ = _parte_libre_cuadrados(p)
    cadena = cadena_sturm(q)
    va = _variaciones_infinito(cadena, False) if a is None else _variaciones_en(cadena, Fraction(a))
    vb = _variaciones_infinito(cadena, True) if b is None else _variaciones_en(cadena, Fraction(b))
    return va - vb


def sturm_real_roots(p):
    """
    Conteo exacto de raíces reales distintas de p, de las negativas, y si
    todas las raíces (también las complejas) son simples.
    """
    if p.is_zero():
        raise ErrorDominio("El polinomio nulo no tiene conteo de raíces")
    q, g = _parte_libre_cuadrados(p)
    cadena = cadena_sturm(q)
    v_menos = _variaciones_infinito(cadena, False)
    v_mas = _variaciones_infinito(cadena, True)
    v_cero = _variaciones_en(cadena, Fraction(0))
    negativas = v_menos - v_cero - (1 if q.eval(Fraction(0)) == 0 else 0)
    return RaicesReales(v_menos - v_mas, negativas, g.degree() == 0)
