"""
Chequeos de la suite de verificación.

Cada función decorada con ``@verificacion`` recibe el contexto de la
corrida y un generador aleatorio propio, y produce CheckRecord. Los
límites de n se derivan de ``contexto.n_max`` (40 por defecto):

- P, Q, Z hasta 3/2 n_max; R, S, T hasta n_max;
- g~ hasta n_max, h hasta n_max/2;
- puntos terminantes de 2F1 hasta n_max/2, de 3F2 y de dos parámetros hasta 12;
- certificado hasta 30 y sucesiones hasta 25.
"""
import math
from collections import defaultdict
from fractions import Fraction

import numpy as np

from . import airy_numeric, airy_pq, airy_rst, certs, hyper
from .decorators import APROBADO, FALLIDO, CheckRecord, verificacion
from .errores import ErrorPolo
from .ratcore import Poly
from .tablas import polinomio_tabla

F = Fraction

PUNTOS_X = (-2.0, -1.0, -0.3, 0.0, 0.4, 1.0, 2.0)
PUNTOS_FLOTANTES = 50
PUNTOS_CONSTANTE = 20

# Valores de referencia de Ai(0) y Ai'(0)
AI_0 = 0.35502805388781723926
AIP_0 = -0.25881940379280679840


def _texto(v):
    if v is None:
        return ''
    if isinstance(v, Poly):
        return v.to_text()
    if isinstance(v, bool):
        return 'true' if v else 'false'
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def registro(familia, n, ok, lhs='', rhs='', rel_err=None, detalle=''):
    return CheckRecord(
        check='',
        family=familia,
        n=n,
        status=APROBADO if ok else FALLIDO,
        lhs=_texto(lhs),
        rhs=_texto(rhs),
        rel_err=None if rel_err is None else float(rel_err),
        detail=detalle,
    )


def _desde_identidad(familia, n, chequeo):
    return registro(familia, n, chequeo.passed, chequeo.lhs, chequeo.rhs, chequeo.rel_err,
                    detalle=f"a = {chequeo.point}")


def _peor(ternas):
    """(lhs, rhs, err) con el mayor error; los registros agregados lo reportan."""
    return max(ternas, key=lambda terna: terna[2])


def _peor_chequeo(chequeos):
    return max(chequeos, key=lambda chequeo: chequeo.rel_err or 0.0)


# --- Límites de la corrida ---

def _n_pq(contexto):
    return (3 * contexto.n_max) // 2


def _n_rst(contexto):
    return contexto.n_max


def _n_cert(contexto):
    return min(30, contexto.n_max)


def _n_sucesiones(contexto):
    return min(25, contexto.n_max)


def _filas_pq(N):
    return [(par.p, par.q) for par in airy_pq.pq_recurrence(N)]


def _filas_rst(N):
    return [(t.r, t.s, t.t) for t in airy_rst.rst_recurrence(N)]


# =========================================================
# TABLAS DE REFERENCIA
# =========================================================

_RUTAS_PQ = {
    'recurrencia': lambda N: _filas_pq(N),
    'cerrada': lambda N: [(airy_pq.p_closed(n), airy_pq.q_closed(n - 1) if n else Poly())
                          for n in range(N + 1)],
    'sumas_dobles': lambda N: [airy_pq.pq_maurone_phares(n) for n in range(N + 1)],
}


def _filas_convolucion(N):
    pares = airy_pq.pq_recurrence(N)
    ternas = [airy_rst.rst_convolution(n, pares) for n in range(N + 1)]
    return [(t.r, t.s, t.t) for t in ternas]


_RUTAS_RST = {
    'recurrencia': lambda N: _filas_rst(N),
    'cerrada': lambda N: [(airy_rst.r_closed(n), airy_rst.s_closed(n), airy_rst.t_closed(n))
                          for n in range(N + 1)],
    'convolucion': _filas_convolucion,
}


def _comparar_tabla(contexto, familias, filas):
    for n, fila in enumerate(filas):
        for familia, calculado in zip(familias, fila):
            esperado = polinomio_tabla(contexto.tablas, familia, n)
            yield registro(familia, n, calculado == esperado, calculado, contexto.tablas[familia][n])


def _registrar_tabla_pq(ruta):
    @verificacion(nombre=f"tabla_pq_{ruta}")
    def chequeo(contexto, rng):
        N = len(contexto.tablas['P']) - 1
        yield from _comparar_tabla(contexto, ('P', 'Q'), _RUTAS_PQ[ruta](N))
    return chequeo


def _registrar_tabla_rst(ruta):
    @verificacion(nombre=f"tabla_rst_{ruta}")
    def chequeo(contexto, rng):
        N = len(contexto.tablas['R']) - 1
        yield from _comparar_tabla(contexto, ('R', 'S', 'T'), _RUTAS_RST[ruta](N))
    return chequeo


for _ruta in _RUTAS_PQ:
    _registrar_tabla_pq(_ruta)
for _ruta in _RUTAS_RST:
    _registrar_tabla_rst(_ruta)


@verificacion(nombre='tabla_t_desde_h')
def tabla_t_desde_h(contexto, rng):
    for n in range(len(contexto.tablas['T'])):
        calculado = airy_rst.t_from_h(n)
        esperado = polinomio_tabla(contexto.tablas, 'T', n)
        yield registro('T', n, calculado == esperado, calculado, contexto.tablas['T'][n])


@verificacion(nombre='tabla_texto')
def tabla_texto(contexto, rng):
    """El texto de cada celda se lee y se vuelve a escribir sin cambios."""
    for familia, filas in sorted(contexto.tablas.items()):
        for n, texto in enumerate(filas):
            releido = Poly.from_text(texto).to_text()
            yield registro(familia, n, releido == texto, releido, texto)


# =========================================================
# P, Q, Z
# =========================================================

@verificacion(nombre='rutas_pq')
def rutas_pq(contexto, rng):
    """Recurrencia, formas cerradas y sumas dobles coinciden hasta 3/2 n_max."""
    N = _n_pq(contexto)
    filas = _filas_pq(N)
    for n in range(N + 1):
        p, q = filas[n]
        fallos = []
        if p != airy_pq.p_closed(n):
            fallos.append('P cerrada')
        if n and q != airy_pq.q_closed(n - 1):
            fallos.append('Q cerrada')
        if (p, q) != airy_pq.pq_maurone_phares(n):
            fallos.append('sumas dobles')
        yield registro('PQ', n, not fallos, p, q, detalle=', '.join(fallos))


@verificacion(nombre='cruce_pq')
def cruce_pq(contexto, rng):
    """Q_{n+1} - Q_n' = P_n y P_{n+1} - P_n' = x Q_n."""
    filas = _filas_pq(_n_pq(contexto))
    x = Poly.x()
    for n in range(len(filas) - 1):
        (p, q), (p1, q1) = filas[n], filas[n + 1]
        ok = q1 - q.derivative() == p and p1 - p.derivative() == x * q
        yield registro('PQ', n, ok)


@verificacion(nombre='positividad')
def positividad(contexto, rng):
    """Todos los coeficientes de las seis familias son enteros no negativos."""
    N = _n_pq(contexto)
    familias = defaultdict(list)
    for p, q in _filas_pq(N):
        familias['P'].append(p)
        familias['Q'].append(q)
    familias['Z'] = airy_pq.z_recurrence(N)
    for r, s, t in _filas_rst(_n_rst(contexto)):
        familias['R'].append(r)
        familias['S'].append(s)
        familias['T'].append(t)
    for familia, polinomios in familias.items():
        malos = [n for n, poly in enumerate(polinomios)
                 if any(c < 0 or c.denominator != 1 for c in poly.coeffs)]
        yield registro(familia, len(polinomios) - 1, not malos,
                       detalle=f"índices con coeficientes no enteros positivos: {malos}" if malos else '')


@verificacion(nombre='tres_terminos_pqz')
def tres_terminos_pqz(contexto, rng):
    N = _n_pq(contexto)
    yield registro('PQZ', N, airy_pq.pq_three_term_check(N))


@verificacion(nombre='gtilde_2f1')
def gtilde_2f1(contexto, rng):
    """g~_{m,n} por serie y por 2F1 terminante, m, n <= n_max."""
    N = contexto.n_max
    for m in range(N + 1):
        distintos = [n for n in range(N + 1) if airy_pq.gtilde(m, n) != airy_pq.gtilde_via_2f1(m, n)]
        yield registro('g~', m, not distintos, detalle=f"n con diferencias: {distintos}" if distintos else '')


@verificacion(nombre='gtilde_gegenbauer')
def gtilde_gegenbauer(contexto, rng):
    N = min(20, contexto.n_max)
    tol = contexto.tol('gegenbauer')
    for m in range(N + 1):
        ternas = []
        for n in range(N + 1):
            lhs, rhs = airy_pq.gtilde_gegenbauer(m, n), airy_pq.gtilde(m, n)
            ternas.append((lhs, rhs, hyper.error_mixto(lhs, rhs)))
        lhs, rhs, peor = _peor(ternas)
        yield registro('g~', m, peor <= tol, lhs, rhs, peor)


@verificacion(nombre='puentes_2f1')
def puentes_2f1(contexto, rng):
    N = _n_pq(contexto) // 3 - 1
    pares = airy_pq.pq_recurrence(3 * N + 3)
    for n in range(N + 1):
        for puente in airy_pq.two_f1_bridges(n, pares):
            yield registro(puente.nombre, n, puente.ok, puente.valores[0], puente.valores[-1])
    for m in range(11):
        for n in range(1, 11):
            lhs, rhs = airy_pq.gtilde_difference(m, n)
            if lhs != rhs:
                yield registro('g~ diferencia', m, False, lhs, rhs, detalle=f"n = {n}")
                break
        else:
            yield registro('g~ diferencia', m, True)


def _agrupar(terminos):
    grupos = defaultdict(list)
    for familia, indice, potencia, coef in terminos:
        grupos[(familia, indice)].append((potencia, coef))
    return grupos


@verificacion(nombre='desarrollo_x_pequeno')
def desarrollo_x_pequeno(contexto, rng):
    """Términos de menor grado de P, Q, Z (hasta n_max) y R, S, T."""
    N = contexto.n_max
    filas = _filas_pq(N)
    z = airy_pq.z_recurrence(N)
    ternas = _filas_rst(_n_rst(contexto))
    for n in range(N + 1):
        polinomios = {'P': filas[n][0], 'Q': filas[n][1]}
        grupos = defaultdict(list)
        for familia, potencia, coef in airy_pq.pq_small_x_leading(n):
            grupos[familia].append((potencia, coef))
        grupos['Z'] = airy_pq.z_small_x_leading(n)
        polinomios['Z'] = z[n]
        if n < len(ternas):
            polinomios.update(zip('RST', ternas[n]))
            for familia, potencia, coef in airy_rst.rst_small_x_leading(n):
                grupos[familia].append((potencia, coef))
        for familia, terminos in sorted(grupos.items()):
            yield registro(familia, n, airy_pq.coincide_desde_cero(polinomios[familia], terminos))


@verificacion(nombre='desarrollo_x_grande')
def desarrollo_x_grande(contexto, rng):
    """Hasta tres términos de mayor grado de P_2n, P_2n+1, Q_2n, Q_2n+1, Z_2n+2, Z_2n+3."""
    N = contexto.n_max
    filas = _filas_pq(N + 3)
    z = airy_pq.z_recurrence(N + 3)
    polinomios = {'P': [f[0] for f in filas], 'Q': [f[1] for f in filas], 'Z': z}
    for n in range(N // 2 + 1):
        grupos = _agrupar(airy_pq.pq_large_x_terms(n) + airy_pq.z_large_x_terms(n))
        for (familia, indice), terminos in sorted(grupos.items()):
            ok = airy_pq.coincide_prefijo(polinomios[familia][indice], terminos)
            yield registro(familia, indice, ok)


@verificacion(nombre='z_lambda')
def z_lambda(contexto, rng):
    N = _n_pq(contexto)
    yield registro('Z', N, airy_pq.z_lambda_check(N))


@verificacion(nombre='laplace')
def laplace(contexto, rng):
    """Ecuaciones de cuarto orden (k <= 12) y reconstrucción de P, Q por paridad (n <= 12)."""
    yield registro('mu/nu', 16, airy_pq.laplace_fourth_order_check(16))
    filas = _filas_pq(26)
    for n in range(13):
        esperado = (filas[2 * n][0], filas[2 * n + 1][0], filas[2 * n][1], filas[2 * n + 1][1])
        yield registro('paridad', n, airy_pq.pq_parity_reconstruct(n) == esperado)


# =========================================================
# R, S, T
# =========================================================

@verificacion(nombre='rutas_rst')
def rutas_rst(contexto, rng):
    """Recurrencia, formas cerradas, convolución con P/Q y T desde h."""
    N = _n_rst(contexto)
    ternas = _filas_rst(N)
    pares = airy_pq.pq_recurrence(N)
    for n in range(N + 1):
        r, s, t = ternas[n]
        fallos = []
        if (r, s, t) != (airy_rst.r_closed(n), airy_rst.s_closed(n), airy_rst.t_closed(n)):
            fallos.append('cerrada')
        conv = airy_rst.rst_convolution(n, pares)
        if (r, s, t) != (conv.r, conv.s, conv.t):
            fallos.append('convolución')
        if t != airy_rst.t_from_h(n):
            fallos.append('T desde h')
        yield registro('RST', n, not fallos, r, t, detalle=', '.join(fallos))


@verificacion(nombre='h_3f2')
def h_3f2(contexto, rng):
    N = contexto.n_max // 2
    for m in range(N + 1):
        distintos = [n for n in range(N + 1) if airy_rst.h_coeff(m, n) != airy_rst.h_via_3f2(m, n)]
        yield registro('h', m, not distintos, detalle=f"n con diferencias: {distintos}" if distintos else '')


@verificacion(nombre='tres_terminos_rst')
def tres_terminos_rst(contexto, rng):
    N = _n_rst(contexto)
    yield registro('RST', N, airy_rst.rst_three_term_check(N))


@verificacion(nombre='solucion_general_rst')
def solucion_general_rst(contexto, rng):
    """Con los valores iniciales de R, S y T la solución general reproduce cada familia."""
    N = _n_rst(contexto)
    ternas = _filas_rst(N)
    x = Poly.x()
    casos = {
        'R': ((1, 0, 2 * x), 0),
        'S': ((0, 1, 0), 1),
        'T': ((0, 0, 2), 2),
    }
    for familia, (iniciales, columna) in casos.items():
        solucion = airy_rst.rst_general_solution(*iniciales, N)
        ok = solucion.ok and solucion.y == [terna[columna] for terna in ternas]
        yield registro(familia, N, ok)
    generica = airy_rst.rst_general_solution(x, 1, x * x + 3, N)
    yield registro('Y', N, generica.ok)


# =========================================================
# CEROS (STURM)
# =========================================================

def _filas_ceros(familia, polinomios):
    for n, poly in enumerate(polinomios):
        fila = airy_pq.fila_ceros(familia, n, poly)
        if fila is None:
            continue
        ok = fila.simple and fila.real_roots == fila.degree == fila.negative_roots
        yield registro(familia, n, ok, fila.real_roots, fila.degree,
                       detalle=f"negativas={fila.negative_roots} simples={_texto(fila.simple)}")


@verificacion(nombre='ceros_pqz')
def ceros_pqz(contexto, rng):
    """Polinomios reducidos de P, Q, Z con raíces reales, negativas y simples."""
    N = _n_pq(contexto)
    filas = _filas_pq(N)
    yield from _filas_ceros('P', [f[0] for f in filas])
    yield from _filas_ceros('Q', [f[1] for f in filas])
    yield from _filas_ceros('Z', airy_pq.z_recurrence(N))


@verificacion(nombre='ceros_rst')
def ceros_rst(contexto, rng):
    ternas = _filas_rst(_n_rst(contexto))
    for columna, familia in enumerate('RST'):
        yield from _filas_ceros(familia, [terna[columna] for terna in ternas])


# =========================================================
# IDENTIDADES HIPERGEOMÉTRICAS
# =========================================================

@verificacion(nombre='identidades_2f1_exactas')
def identidades_2f1_exactas(contexto, rng):
    for identidad in hyper.IDENTIDADES_2F1:
        for n in range(contexto.n_max // 2 + 1):
            yield _desde_identidad(identidad, n, hyper.verify_2f1_value(identidad, F(-n, 2)))


@verificacion(nombre='identidades_2f1_flotantes')
def identidades_2f1_flotantes(contexto, rng):
    tol = contexto.tol('2f1')
    for identidad in hyper.IDENTIDADES_2F1:
        puntos = hyper.sample_points(rng, -3.0, 0.25, PUNTOS_FLOTANTES, hyper.distancia_2f1(identidad))
        chequeos = [hyper.verify_2f1_value(identidad, a, tol) for a in puntos]
        informe = hyper.identity_sweep(identidad, chequeos, tol)
        for i, chequeo in enumerate(chequeos):
            yield _desde_identidad(identidad, i, chequeo)
        peor = _peor_chequeo(chequeos)
        yield registro(identidad, None, informe.verdict, peor.lhs, peor.rhs, informe.max_rel_err,
                       detalle=f"{len(informe.test_points)} puntos, peor en a = {peor.point}")


@verificacion(nombre='identidades_3f2_exactas')
def identidades_3f2_exactas(contexto, rng):
    for identidad in hyper.IDENTIDADES_3F2:
        for n in range(min(12, contexto.n_max) + 1):
            yield _desde_identidad(identidad, n, hyper.verify_3f2_value(identidad, -n))


@verificacion(nombre='identidades_3f2_flotantes')
def identidades_3f2_flotantes(contexto, rng):
    tol = contexto.tol('3f2')
    for identidad in hyper.IDENTIDADES_3F2:
        puntos = hyper.sample_points(rng, -1.5, 2.5, PUNTOS_FLOTANTES, hyper.distancia_3f2(identidad))
        chequeos = [hyper.verify_3f2_value(identidad, a, tol) for a in puntos]
        informe = hyper.identity_sweep(identidad, chequeos, tol)
        for i, chequeo in enumerate(chequeos):
            yield _desde_identidad(identidad, i, chequeo)
        peor = _peor_chequeo(chequeos)
        yield registro(identidad, None, informe.verdict, peor.lhs, peor.rhs, informe.max_rel_err,
                       detalle=f"{len(informe.test_points)} puntos, peor en a = {peor.point}")


@verificacion(nombre='identidades_dos_parametros_exactas')
def identidades_dos_parametros_exactas(contexto, rng):
    """b = 1, 2, 3 con el segundo superior en -n, n <= 12; se omiten los polos de gamma."""
    for identidad in hyper.IDENTIDADES_DOS_PARAMETROS:
        inicio = F(1, 6) if identidad == 'cos_case' else F(1, 3)
        for n in range(min(12, contexto.n_max) + 1):
            for m in (1, 2, 3):
                try:
                    chequeo = hyper.verify_3f2_two_param(identidad, inicio + F(n, 3), m)
                except ErrorPolo:
                    continue
                yield registro(identidad, n, chequeo.passed, chequeo.lhs, chequeo.rhs, chequeo.rel_err,
                               detalle=f"(a, b) = {chequeo.point}")


@verificacion(nombre='identidades_dos_parametros')
def identidades_dos_parametros(contexto, rng):
    tol = contexto.tol('3f2')
    for identidad in hyper.IDENTIDADES_DOS_PARAMETROS:
        n = 0
        while n < PUNTOS_FLOTANTES:
            a, b = float(rng.uniform(-0.9, 0.9)), float(rng.uniform(0.05, 1.5))
            if hyper.distancia_polos(*hyper.polos_two_param(identidad, a, b)) < 1e-3:
                continue
            yield _desde_identidad(identidad, n, hyper.verify_3f2_two_param(identidad, a, b, tol))
            n += 1
    # con b = a el caso coseno tiene la misma serie que Sa; se comparan los lados derechos
    for i, a in enumerate(hyper.sample_points(rng, 0.05, 0.9, 10, hyper.distancia_3f2('Sa'))):
        cos_case = hyper.rhs_3f2_two_param('cos_case', a, a)
        sa = hyper.rhs_3f2('Sa', a)
        err = hyper.error_mixto(cos_case, sa)
        yield registro('cos_case=Sa', i, err <= tol, cos_case, sa, err)


@verificacion(nombre='constante_menos_dos')
def constante_menos_dos(contexto, rng):
    """F(a) / (tau~(a) cociente de gammas) = -2 lejos de la rejilla a = k/12."""
    tol = contexto.tol('constante')
    puntos = hyper.sample_points(rng, -1.5, 2.5, PUNTOS_CONSTANTE, hyper.distancia_doceavos, radio=0.02)
    for i, a in enumerate(puntos):
        valor = hyper.constant_ratio(a)
        err = abs(valor + 2) / 2
        yield registro('tau', i, err <= tol, valor, -2.0, err, detalle=f"a = {a!r}")


@verificacion(nombre='gamma_recurrencia')
def gamma_recurrencia(contexto, rng):
    xs = rng.uniform(0.1, 20.0, 200)
    ternas = []
    for x in map(float, xs):
        lhs, rhs = hyper.gamma_numeric(x + 1), x * hyper.gamma_numeric(x)
        ternas.append((lhs, rhs, abs(lhs - rhs) / lhs))
    lhs, rhs, peor = _peor(ternas)
    yield registro('gamma', len(ternas), peor <= 1e-11, lhs, rhs, peor)


def _peor_pfq(specs):
    ternas = []
    for spec in specs:
        lhs, rhs = hyper.pfq_numeric(spec), hyper.pfq_exact(spec)
        ternas.append((lhs, rhs, hyper.error_mixto(lhs, rhs)))
    return _peor(ternas)


@verificacion(nombre='pfq_exacto_flotante')
def pfq_exacto_flotante(contexto, rng):
    """Los dos modos de evaluación coinciden en series terminantes."""
    for identidad in hyper.IDENTIDADES_2F1:
        lhs, rhs, peor = _peor_pfq(hyper.spec_2f1(identidad, F(-n, 2)) for n in range(21))
        yield registro(identidad, 20, peor <= 1e-12, lhs, rhs, peor)
    lhs, rhs, peor = _peor_pfq(hyper.HyperSpec((F(-n, 2), F(1 - n, 2)), (m + F(3, 2),), F(-1, 3))
                               for m in range(11) for n in range(21))
    yield registro('g~', 10, peor <= 1e-12, lhs, rhs, peor)


# =========================================================
# CERTIFICADO Y SUCESIONES
# =========================================================

@verificacion(nombre='telescopico')
def telescopico(contexto, rng):
    for secuencia in certs.SECUENCIAS:
        for n in range(_n_cert(contexto) + 1):
            yield registro(secuencia, n, certs.telescoping_check(n, secuencia))


@verificacion(nombre='anulacion')
def anulacion(contexto, rng):
    """El operador anula las sumas desplazadas y los valores cerrados."""
    N = _n_cert(contexto)
    for secuencia in certs.SECUENCIAS:
        cert = certs.CERTIFICADOS[secuencia]
        sumas = [certs.shifted_sum(secuencia, n) for n in range(N + 2)]
        for n in range(N + 1):
            c1, c0 = cert.operador(n)
            valor = c1 * sumas[n + 1] + c0 * sumas[n]
            ok = valor == 0 and certs.operator_annihilates(secuencia, n)
            yield registro(secuencia, n, ok, valor, 0)


@verificacion(nombre='sucesiones')
def sucesiones(contexto, rng):
    for secuencia in certs.SECUENCIAS:
        for n in range(_n_sucesiones(contexto) + 1):
            suma = certs.sequence_sum(secuencia, n)
            cerrado = certs.closed_value(secuencia, n)
            ok = suma == cerrado == certs.shifted_sum(secuencia, n)
            yield registro(secuencia, n, ok, suma, cerrado)


@verificacion(nombre='operadores_desplazados')
def operadores_desplazados(contexto, rng):
    for secuencia in certs.SECUENCIAS:
        for n in range(11):
            yield registro(secuencia, n, certs.shifted_operator_check(secuencia, n))


@verificacion(nombre='reduccion_t')
def reduccion_t(contexto, rng):
    for delta in (0, 1):
        for n in range(13):
            yield registro(f"delta={delta}", n, certs.t_reduction_check(n, delta))


# =========================================================
# NUMÉRICOS
# =========================================================

@verificacion(nombre='constantes_airy')
def constantes_airy(contexto, rng):
    v = airy_numeric.ai_bi(0.0)
    yield registro('Ai', 0, abs(v.ai - AI_0) <= 1e-14, v.ai, AI_0, abs(v.ai - AI_0))
    yield registro('Aip', 0, abs(v.aip - AIP_0) <= 1e-14, v.aip, AIP_0, abs(v.aip - AIP_0))
    cociente = v.bi / v.ai
    yield registro('Bi/Ai', 0, abs(cociente - math.sqrt(3)) <= 1e-14, cociente, math.sqrt(3))


@verificacion(nombre='wronskiano')
def wronskiano(contexto, rng):
    """f g' - g f' = 1; por encima de x = 4 la cota es relativa a |f g'| + |g f'|."""
    tol = contexto.tol('wronskiano')
    for i, x in enumerate(np.linspace(-6.0, 6.0, 100)):
        q = airy_numeric.airy_atoms(float(x))
        escala = abs(q.f * q.gp) + abs(q.g * q.fp) if x > 4 else 1.0
        err = abs(q.wronskiano - 1.0) / escala
        yield registro('fg', i, err <= tol, q.wronskiano, 1.0, err, detalle=f"x = {float(x)!r}")


@verificacion(nombre='derivadas_ai_bi')
def derivadas_ai_bi(contexto, rng):
    """P_n Ai + Q_n Ai' contra la serie de Maclaurin derivada término a término."""
    tol = contexto.tol('derivada')
    pares = airy_pq.pq_recurrence(10)
    for n in range(11):
        ternas_ai, ternas_bi = [], []
        for x in PUNTOS_X:
            ai, bi = airy_numeric.ai_bi_derivative_series(n, x)
            via_ai = airy_numeric.ai_derivative(n, x, pares[n])
            via_bi = airy_numeric.bi_derivative(n, x, pares[n])
            ternas_ai.append((via_ai, ai, hyper.error_mixto(via_ai, ai)))
            ternas_bi.append((via_bi, bi, hyper.error_mixto(via_bi, bi)))
        for familia, ternas in (('Ai', ternas_ai), ('Bi', ternas_bi)):
            lhs, rhs, peor = _peor(ternas)
            yield registro(familia, n, peor <= tol, lhs, rhs, peor)


@verificacion(nombre='derivadas_producto')
def derivadas_producto(contexto, rng):
    """R_n uv + S_n (uv' + u'v) + T_n u'v' contra diferencias centrales con Richardson."""
    tol = contexto.tol('producto')
    ternas_rst = airy_rst.rst_recurrence(6)
    for which in airy_rst.PRODUCTOS:
        funcion = airy_numeric.producto_mpmath(which)
        for n in range(7):
            ternas = []
            for x in PUNTOS_X:
                lhs = airy_numeric.product_derivative(which, n, x, ternas_rst[n])
                rhs = airy_numeric.richardson_derivative(funcion, n, x)
                ternas.append((lhs, rhs, hyper.error_mixto(lhs, rhs), x))
            lhs, rhs, peor, x = _peor(ternas)
            yield registro(which, n, peor <= tol, lhs, rhs, peor, detalle=f"x = {x}")


@verificacion(nombre='funcion_generatriz')
def funcion_generatriz(contexto, rng):
    tol = contexto.tol('genfun')
    pares = airy_pq.pq_recurrence(35)
    for i, (x, t) in enumerate(((0.5, 0.3), (-1.0, 0.2), (2.0, -0.5))):
        err_p, err_q = airy_numeric.genfun_check(x, t, 30, pares)
        yield registro('PQ', i, max(err_p, err_q) <= tol, err_p, err_q, max(err_p, err_q),
                       detalle=f"x = {x}, t = {t}")
        corto = max(airy_numeric.genfun_check(x, t, 25, pares))
        largo = max(airy_numeric.genfun_check(x, t, 35, pares))
        # por debajo de 1e-12 ambas sumas están en el nivel de redondeo
        yield registro('N=25/N=35', i, largo <= max(corto, 1e-12), largo, corto)


@verificacion(nombre='cola_lambda')
def cola_lambda(contexto, rng):
    tol = contexto.tol('lambda')
    for t in (0.1, 0.25, 0.5, 0.9):
        for n in range(6):
            ternas = []
            for N in range(13):
                cola = airy_numeric.lambda_tail(n, N, t)
                err = abs(cola.via_closed - cola.via_series) / abs(cola.via_series)
                ternas.append((cola.via_closed, cola.via_series, err))
            lhs, rhs, peor = _peor(ternas)
            yield registro(f"t={t}", n, peor <= tol, lhs, rhs, peor)
