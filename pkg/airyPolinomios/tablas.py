"""
Tablas de referencia en el formato de texto de Poly.to_text().

TABLA_PQ[n] = (P_n, Q_n) para n <= 15.
TABLA_RST[n] = (R_n, S_n, T_n) para n <= 12.
"""
from .errores import ErrorTabla
from .ratcore import Poly

TABLA_PQ = (
    ("1", "0"),
    ("0", "1"),
    ("x", "0"),
    ("1", "x"),
    ("x^2", "2"),
    ("4x", "x^2"),
    ("x^3+4", "6x"),
    ("9x^2", "x^3+10"),
    ("x^4+28x", "12x^2"),
    ("16x^3+28", "x^4+52x"),
    ("x^5+100x^2", "20x^3+80"),
    ("25x^4+280x", "x^5+160x^2"),
    ("x^6+260x^3+280", "30x^4+600x"),
    ("36x^5+1380x^2", "x^6+380x^3+880"),
    ("x^7+560x^4+3640x", "42x^5+2520x^2"),
    ("49x^6+4760x^3+3640", "x^7+770x^4+8680x"),
)

TABLA_RST = (
    ("1", "0", "0"),
    ("0", "1", "0"),
    ("2x", "0", "2"),
    ("2", "4x", "0"),
    ("8x^2", "6", "8x"),
    ("28x", "16x^2", "20"),
    ("32x^3+28", "80x", "32x^2"),
    ("256x^2", "64x^3+108", "224x"),
    ("128x^4+728x", "672x^2", "128x^3+440"),
    ("1856x^3+728", "256x^4+2512x", "1728x^2"),
    ("512x^5+10592x^2", "4608x^3+3240", "512x^4+8480x"),
    ("11776x^4+27664x", "1024x^5+32896x^2", "11264x^3+14960"),
    ("2048x^6+112896x^3+27664", "28160x^4+108416x", "2048x^5+99584x^2"),
)

FAMILIAS_TABLA = {"P": ("PQ", 0), "Q": ("PQ", 1), "R": ("RST", 0), "S": ("RST", 1), "T": ("RST", 2)}


def tablas_por_defecto():
    """Copia mutable {familia: [texto por n]} que la suite puede alterar."""
    return {
        familia: [fila[columna] for fila in (TABLA_PQ if tabla == "PQ" else TABLA_RST)]
        for familia, (tabla, columna) in FAMILIAS_TABLA.items()
    }


def polinomio_tabla(tablas, familia, n):
    """Poly de la tabla de referencia; ErrorTabla si no la cubre."""
    filas = tablas.get(familia, ())
    if not 0 <= n < len(filas):
        raise ErrorTabla(f"La tabla de {familia} no cubre n = {n}")
    return Poly.from_text(filas[n])
