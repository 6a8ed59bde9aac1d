"""
Verificación exacta del par de Zeilberger (operador, certificado) para
F(a) = 3F2(a, 3a-1/2, 3/2-3a; 3a, 1/2 | 3/4) en las tres sucesiones
terminantes a = n + 5/6, n + 1/2, n + 1/6.

Las dos últimas usan el mismo par desplazando n a n - 1/3 y n - 2/3; con
nu = n - desplazamiento el sumando es

    f(nu, k) = binom(L+k, 2k) (nu+5/6)_k / (3nu+5/2)_k (-3)^k,  L = 3nu + 1,

y L es siempre entero.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

from .errores import ErrorCertificado, ErrorDominio
from .hyper import HyperSpec, pfq_exact
from .ratcore import caida_factorial, poch
from .airy_rst import tilde_h

F = Fraction

SECUENCIAS = ("z_dbltilde", "z_tilde", "z")
DESPLAZAMIENTO = {
    "z_dbltilde": F(0),
    "z_tilde": F(1, 3),
    "z": F(2, 3),
}


@dataclass(frozen=True)
class Certificate:
    """Operador (12nu+11)(12nu+17) N + (6nu+7)(6nu+9) y certificado R(nu, k)."""

    desplazamiento: Fraction = F(0)

    def nu(self, n):
        return n - self.desplazamiento

    def operador(self, n):
        nu = self.nu(n)
        return (12 * nu + 11) * (12 * nu + 17), (6 * nu + 7) * (6 * nu + 9)

    def tope(self, n):
        """L = 3nu + 1, último k del soporte del sumando."""
        return int(3 * self.nu(n) + 1)

    def summand(self, n, k):
        if k < 0:
            return F(0)
        nu = self.nu(n)
        L = self.tope(n)
        # binom(L+k, 2k) generalizado: se anula para k > L >= 0
        binomial = F(caida_factorial(L + k, 2 * k), math.factorial(2 * k))
        return binomial * poch(nu + F(5, 6), k) / poch(3 * nu + F(5, 2), k) * F(-3) ** k

    def _numerador(self, nu, k):
        cubica = (2 * k ** 3 - 18 * k ** 2 * (nu + 1) - 2 * k * (81 * nu ** 2 + 153 * nu + 73)
                  - 3 * (nu + 1) * (90 * nu ** 2 + 162 * nu + 71))
        return 12 * k * (2 * k - 1) * (12 * nu ** 2 + 32 * nu + 21) * cubica

    def R(self, n, k):
        nu = self.nu(n)
        L = self.tope(n)
        denominador = (6 * nu + 7 + 2 * k) * (6 * nu + 5 + 2 * k) * (L + 1 - k) * (L + 2 - k) * (L + 3 - k)
        if denominador == 0:
            raise ErrorCertificado(f"R(n={n}, k={k}) tiene denominador nulo")
        return self._numerador(nu, k) / denominador

    def G(self, n, k):
        """
        G = R f dentro del soporte; en L < k <= L+3 el cero del binomial
        cancela el polo de R y se toma el límite.
        """
        L = self.tope(n)
        if k <= 0 or k > L + 3:
            return F(0)
        if k <= L:
            return self.R(n, k) * self.summand(n, k)
        nu = self.nu(n)
        denominador = (6 * nu + 7 + 2 * k) * (6 * nu + 5 + 2 * k)
        if denominador == 0:
            raise ErrorCertificado(f"G(n={n}, k={k}) tiene denominador nulo")
        factoriales = F(math.factorial(L + k), math.factorial(2 * k) * math.factorial(L + 3 - k))
        return (self._numerador(nu, k) / denominador * factoriales
                * poch(nu + F(5, 6), k) / poch(3 * nu + F(5, 2), k) * F(-3) ** k)


CERTIFICADOS = {seq: Certificate(d) for seq, d in DESPLAZAMIENTO.items()}


def _certificado(seq):
    try:
        return CERTIFICADOS[seq]
    except KeyError:
        raise ErrorDominio(f"Sucesión desconocida: {seq}") from None


def summand_f(n, k):
    """Sumando de F(n + 5/6); fuera de 0 <= k <= 3n+1 es un error."""
    if not 0 <= k <= 3 * n + 1:
        raise ErrorDominio(f"k = {k} fuera de 0..{3 * n + 1}")
    return CERTIFICADOS["z_dbltilde"].summand(n, k)


def telescoping_check(n, seq="z_dbltilde"):
    """c1(n) f(n+1,k) + c0(n) f(n,k) = G(n,k+1) - G(n,k) en k = 0..L+3."""
    cert = _certificado(seq)
    c1, c0 = cert.operador(n)
    for k in range(cert.tope(n) + 4):
        izquierda = c1 * cert.summand(n + 1, k) + c0 * cert.summand(n, k)
        if izquierda != cert.G(n, k + 1) - cert.G(n, k):
            return False
    return True


# =========================================================
# SUCESIONES TERMINANTES
# =========================================================

def spec_sequence(seq, n):
    """El 3F2 terminante de cada sucesión."""
    if seq == "z_dbltilde":
        return HyperSpec((n + F(5, 6), 3 * n + 2, -3 * n - 1), (3 * n + F(5, 2), F(1, 2)), F(3, 4))
    if seq == "z_tilde":
        return HyperSpec((n + F(1, 2), 3 * n + 1, -3 * n), (3 * n + F(3, 2), F(1, 2)), F(3, 4))
    if seq == "z":
        return HyperSpec((n + F(1, 6), 3 * n, 1 - 3 * n), (3 * n + F(1, 2), F(1, 2)), F(3, 4))
    raise ErrorDominio(f"Sucesión desconocida: {seq}")


def sequence_sum(seq, n):
    """F en el punto terminante n-ésimo de la sucesión, exacto."""
    if seq == "z_dbltilde":
        return sum((summand_f(n, k) for k in range(3 * n + 2)), F(0))
    return pfq_exact(spec_sequence(seq, n))


def shifted_sum(seq, n):
    """La misma suma con el sumando desplazado del certificado."""
    cert = _certificado(seq)
    return sum((cert.summand(n, k) for k in range(max(cert.tope(n), 0) + 1)), F(0))


def closed_value(seq, n):
    """F0 en el punto terminante."""
    signo = (-1) ** n
    if seq == "z_dbltilde":
        return F(0)
    if seq == "z_tilde":
        return signo * poch(F(5, 6), n) * poch(F(7, 6), n) / poch(F(7, 6), 2 * n)
    if seq == "z":
        return signo * poch(F(1, 2), n) * poch(F(5, 6), n) / poch(F(1, 2), 2 * n)
    raise ErrorDominio(f"Sucesión desconocida: {seq}")


def operator_annihilates(seq, n):
    """c1(n) F0(n+1) + c0(n) F0(n) = 0 con el operador desplazado."""
    c1, c0 = _certificado(seq).operador(n)
    return c1 * closed_value(seq, n + 1) + c0 * closed_value(seq, n) == 0


def shifted_operator_check(seq, n):
    """
    Los coeficientes del operador desplazado coinciden con los que se
    leen del cociente de valores cerrados consecutivos.
    """
    c1, c0 = _certificado(seq).operador(n)
    if seq == "z_tilde":
        esperado = ((12 * n + 7) * (12 * n + 13), (6 * n + 5) * (6 * n + 7))
    elif seq == "z":
        esperado = (9 * (4 * n + 1) * (4 * n + 3), 3 * (2 * n + 1) * (6 * n + 5))
    else:
        esperado = ((12 * n + 11) * (12 * n + 17), (6 * n + 7) * (6 * n + 9))
    return (c1, c0) == esperado


# =========================================================
# IDENTIDAD DE REDUCCIÓN PARA T
# =========================================================

def t_reduction_sum(n, delta):
    """n!/(3n+d)! sum_k (3n+d+3/2-k)_{d+2k} (3n+d-k)! (-3)^k / ((n-k)! (2k+d)!)."""
    m = 3 * n + delta
    total = F(0)
    for k in range(n + 1):
        total += (poch(m + F(3, 2) - k, delta + 2 * k) * math.factorial(m - k) * F(-3) ** k
                  / (math.factorial(n - k) * math.factorial(2 * k + delta)))
    return total * math.factorial(n) / math.factorial(m)


def t_reduction_check(n, delta):
    """
    2 12^(2n+d) (5/6)_{2n+d} = h~(2n+d, 3n+d, d, 3/2, 0) 2^(4n+2d+1) (3n+d)!/((-3)^n n!),
    y la suma intermedia coincide con h~.
    """
    izquierda = 2 * F(12) ** (2 * n + delta) * poch(F(5, 6), 2 * n + delta)
    h = tilde_h(2 * n + delta, 3 * n + delta, delta, F(3, 2), 0)
    factor = F(2 ** (4 * n + 2 * delta + 1) * math.factorial(3 * n + delta),
               (-3) ** n * math.factorial(n))
    return izquierda == h * factor and h == t_reduction_sum(n, delta)
