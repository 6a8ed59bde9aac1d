"""
Jerarquía de excepciones de la aplicación airyPolinomios.

Todas heredan de ErrorAiry para que la suite y los comandos puedan
capturarlas en un solo punto; además heredan de la excepción estándar
más cercana (ValueError, ArithmeticError...) para no sorprender a quien
use los módulos de cálculo por separado.
"""


class ErrorAiry(Exception):
    """Base de todos los errores del dominio."""


class ErrorDominio(ErrorAiry, ValueError):
    """Entrada fuera del dominio de definición o de precisión."""


class ErrorPolo(ErrorDominio):
    """Argumento a menos del radio de proximidad de un polo."""


class ErrorConvergencia(ErrorAiry, ArithmeticError):
    """La serie alcanzó el tope de términos sin converger."""


class ErrorConvencion(ErrorAiry, ArithmeticError):
    """
    Serie terminante mal planteada: un parámetro inferior entero no
    positivo se anula antes de que termine la serie.
    """


class ErrorCertificado(ErrorAiry, ZeroDivisionError):
    """El denominador del certificado se anula en un punto aplicado."""


class ErrorTabla(ErrorAiry, IndexError):
    """La tabla de polinomios recibida no cubre el índice pedido."""
