import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from django.conf import settings
from django.db import transaction

from .airy_numeric import ai_derivative, bi_derivative, product_derivative
from .airy_pq import FAMILIAS, fila_ceros, pq_recurrence, z_recurrence
from .airy_rst import rst_recurrence
from .decorators import REGISTRO, ContextoSuite
from .errores import ErrorDominio, ErrorPolo, ErrorTabla
from .hyper import distancia_polos, f0_value, f_value, polos_tau, tau_value
from .tablas import tablas_por_defecto

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    registros: list
    semilla: int
    n_max: int
    duracion: float = field(default=0.0, compare=False)

    @property
    def veredicto(self):
        return all(r.aprobado for r in self.registros)

    @property
    def fallidos(self):
        return [r for r in self.registros if not r.aprobado]

    @property
    def total(self):
        return len(self.registros)

    def tiempos_por_chequeo(self):
        """{chequeo: segundos}; cada registro de un chequeo lleva el mismo tiempo."""
        return {r.check: r.elapsed for r in self.registros}


def tolerancias_efectivas(sobrescritas=None):
    """Tolerancias de settings con las claves de ``sobrescritas`` reemplazadas."""
    tolerancias = dict(settings.AIRY_TOLERANCIAS)
    for clave, valor in (sobrescritas or {}).items():
        if clave not in tolerancias:
            raise ErrorDominio(f"Tolerancia desconocida: {clave}")
        if not valor > 0:
            raise ErrorDominio(f"La tolerancia {clave} debe ser positiva")
        tolerancias[clave] = valor
    return tolerancias


def nombres_chequeos():
    # Importar el módulo registra los chequeos
    from . import verificaciones  # noqa: F401

    return sorted(REGISTRO)


# =========================================================
# EJECUCIÓN DE LA SUITE
# =========================================================

def ejecutar_suite(n_max=None, semilla=None, tolerancias=None, hilos=None, solo=None, golden=None):
    """
    Ejecuta los chequeos registrados en un ThreadPoolExecutor y devuelve
    los registros ordenados por (check, family, n, lhs).

    ``solo`` restringe la corrida a esos nombres; ``golden`` reemplaza
    filas de las tablas de referencia ({familia: {n: texto}}).
    """
    n_max = settings.AIRY_N_MAX_VERIFICAR if n_max is None else n_max
    semilla = settings.AIRY_SEMILLA if semilla is None else semilla
    hilos = settings.AIRY_HILOS if hilos is None else hilos

    disponibles = nombres_chequeos()
    nombres = disponibles
    if solo:
        desconocidos = sorted(set(solo) - set(disponibles))
        if desconocidos:
            raise ErrorDominio(f"Chequeos desconocidos: {', '.join(desconocidos)}")
        nombres = [nombre for nombre in disponibles if nombre in solo]

    tablas = tablas_por_defecto()
    for familia, filas in (golden or {}).items():
        if familia not in tablas:
            raise ErrorDominio(f"Familia sin tabla de referencia: {familia}")
        for n, texto in filas.items():
            if not 0 <= n < len(tablas[familia]):
                raise ErrorTabla(f"La tabla de {familia} no cubre n = {n}")
            tablas[familia][n] = texto

    contexto = ContextoSuite(
        n_max=n_max,
        semilla=semilla,
        tolerancias=tolerancias_efectivas(tolerancias),
        tablas=tablas,
    )
    logger.info("Suite iniciada: %d chequeos, semilla=%s, n_max=%s, hilos=%s",
                len(nombres), semilla, n_max, hilos)

    inicio = time.perf_counter()
    with ThreadPoolExecutor(max_workers=hilos) as pool:
        lotes = list(pool.map(lambda nombre: REGISTRO[nombre](contexto), nombres))
    registros = sorted((r for lote in lotes for r in lote), key=lambda r: r.clave_orden())

    resultado = SuiteResult(registros, semilla, n_max, time.perf_counter() - inicio)
    for registro in resultado.fallidos:
        logger.warning("Chequeo fallido: %s [%s n=%s] %s", registro.check, registro.family,
                       registro.n, registro.detail)
    logger.info("Suite terminada en %.2f s: %d registros, %d fallidos, veredicto=%s",
                resultado.duracion, resultado.total, len(resultado.fallidos), resultado.veredicto)
    return resultado


# =========================================================
# PERSISTENCIA
# =========================================================

@transaction.atomic
def guardar_corrida(resultado):
    """Guarda la corrida y todos sus registros; devuelve la CorridaVerificacion."""
    from .models import CorridaVerificacion, RegistroChequeo

    corrida = CorridaVerificacion.objects.create(
        semilla=resultado.semilla,
        n_max=resultado.n_max,
        veredicto=resultado.veredicto,
        total_chequeos=resultado.total,
        fallidos=len(resultado.fallidos),
        duracion=resultado.duracion,
    )
    RegistroChequeo.objects.bulk_create([
        RegistroChequeo(
            corrida=corrida,
            chequeo=r.check,
            family=r.family,
            n=r.n,
            status=r.status,
            lhs=r.lhs,
            rhs=r.rhs,
            rel_err=r.rel_err,
            detail=r.detail,
        )
        for r in resultado.registros
    ])
    logger.info("Corrida %s guardada con %d registros", corrida.pk, resultado.total)
    return corrida


# =========================================================
# TABLAS, EVALUACIÓN, CEROS Y MUESTRAS
# =========================================================

def tablas_solicitadas(familias='', n_max=None):
    """
    {'PQ': filas, 'RST': filas} según ``familias`` ('', 'PQ' o 'RST'); sin
    n_max cada tabla usa su largo por defecto.
    """
    por_defecto = {'PQ': settings.AIRY_N_MAX_TABLAS_PQ, 'RST': settings.AIRY_N_MAX_TABLAS_RST}
    return {
        tabla: filas_tablas(tabla, defecto if n_max is None else n_max)
        for tabla, defecto in por_defecto.items()
        if familias in ('', tabla)
    }


def filas_tablas(tabla, n_max):
    """Filas {'n', familia: texto} de la tabla 'PQ' o 'RST' hasta n_max."""
    if tabla == 'PQ':
        return [{'n': par.n, 'P': par.p.to_text(), 'Q': par.q.to_text()}
                for par in pq_recurrence(n_max)]
    if tabla == 'RST':
        return [{'n': t.n, 'R': t.r.to_text(), 'S': t.s.to_text(), 'T': t.t.to_text()}
                for t in rst_recurrence(n_max)]
    raise ErrorDominio(f"Tabla desconocida: {tabla}")


def evaluar(target, n, x):
    """Derivada n-ésima de Ai, Bi o de un producto en x, con los polinomios usados."""
    if target in ('Ai', 'Bi'):
        par = pq_recurrence(n)[n]
        derivada = ai_derivative if target == 'Ai' else bi_derivative
        valor = derivada(n, x, par)
        polinomios = {'P': par.p.to_text(), 'Q': par.q.to_text()}
    else:
        terna = rst_recurrence(n)[n]
        valor = product_derivative(target, n, x, terna)
        polinomios = {'R': terna.r.to_text(), 'S': terna.s.to_text(), 'T': terna.t.to_text()}
    return {'target': target, 'n': n, 'x': x, 'value': valor, 'polinomios': polinomios}


def filas_ceros(n_max, familias=FAMILIAS):
    """FilaCeros de los polinomios reducidos no nulos hasta n_max."""
    filas = []
    pares = pq_recurrence(n_max)
    ternas = rst_recurrence(n_max)
    polinomios = {
        'P': [par.p for par in pares],
        'Q': [par.q for par in pares],
        'Z': z_recurrence(max(n_max, 2))[: n_max + 1],
        'R': [t.r for t in ternas],
        'S': [t.s for t in ternas],
        'T': [t.t for t in ternas],
    }
    for familia in familias:
        for n, poly in enumerate(polinomios[familia]):
            fila = fila_ceros(familia, n, poly)
            if fila is not None:
                filas.append(fila)
    return filas


RADIO_MUESTREO = 1e-3

_CURVAS = {
    'tau': (tau_value, polos_tau),
    'F': (f_value, lambda a: ([3 * a], [])),
    'F0': (f0_value, lambda a: ([a + 1 / 3, a + 2 / 3], [])),
}


def muestras_curva(curva, a_min, a_max, pasos):
    """
    Muestras {'a', 'value'} equiespaciadas; cerca de un polo el valor es
    None (celda vacía en CSV).
    """
    try:
        funcion, polos = _CURVAS[curva]
    except KeyError:
        raise ErrorDominio(f"Curva desconocida: {curva}") from None
    muestras = []
    for a in np.linspace(a_min, a_max, pasos):
        a = float(a)
        valor = None
        if distancia_polos(*polos(a)) >= RADIO_MUESTREO:
            try:
                valor = funcion(a)
            except ErrorPolo:
                logger.debug("Muestra a=%r descartada por un polo", a)
        muestras.append({'a': a, 'value': valor})
    return muestras
