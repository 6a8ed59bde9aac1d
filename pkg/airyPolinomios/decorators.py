import dataclasses
import functools
import logging
import time
import zlib
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

logger = logging.getLogger(__name__)

# Registro global de chequeos: nombre -> función envuelta
REGISTRO = {}

APROBADO = 'pass'
FALLIDO = 'fail'


@dataclass(frozen=True)
class CheckRecord:
    check: str
    family: str = ''
    n: Optional[int] = None
    status: str = APROBADO
    lhs: str = ''
    rhs: str = ''
    rel_err: Optional[float] = None
    detail: str = ''
    # El tiempo no participa en la igualdad: dos corridas con la misma semilla son iguales
    elapsed: float = field(default=0.0, compare=False)

    @property
    def aprobado(self):
        return self.status == APROBADO

    def clave_orden(self):
        return (self.check, self.family, self.n is not None, self.n or 0, self.lhs)


@dataclass(frozen=True)
class ContextoSuite:
    """Parámetros compartidos por todos los chequeos de una corrida."""

    n_max: int
    semilla: int
    tolerancias: dict
    tablas: dict

    def tol(self, clave):
        return self.tolerancias[clave]

    def rng(self, nombre):
        """Generador propio de cada chequeo; no depende del orden de ejecución."""
        return np.random.default_rng([self.semilla, zlib.crc32(nombre.encode('utf-8'))])


# =========================================================
# DECORADOR DE REGISTRO
# =========================================================

def verificacion(function=None, nombre=None):
    """
    Registra una función generadora de CheckRecord en REGISTRO.

    La función recibe (contexto, rng). El envoltorio completa el nombre del
    chequeo y el tiempo en cada registro; si la función lanza una excepción
    se devuelve un único registro fallido con el texto del error.
    """
    def actual_decorator(func):
        clave = nombre or func.__name__

        @functools.wraps(func)
        def envoltura(contexto):
            inicio = time.perf_counter()
            try:
                registros = list(func(contexto, contexto.rng(clave)))
            except Exception as exc:
                logger.exception("El chequeo %s lanzó una excepción", clave)
                registros = [CheckRecord(check=clave, status=FALLIDO,
                                         detail=f"{type(exc).__name__}: {exc}")]
            duracion = time.perf_counter() - inicio
            return [dataclasses.replace(r, check=clave, elapsed=duracion) for r in registros]

        envoltura.nombre = clave
        REGISTRO[clave] = envoltura
        return envoltura

    if function:
        return actual_decorator(function)
    return actual_decorator
