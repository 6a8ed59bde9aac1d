"""
Base común de los comandos tables, verify, eval, zeros y plotdata.

Las opciones pasan por el mismo formulario Django que usa la API; un
formulario inválido, un ErrorDominio o un ErrorTabla terminan con
código de salida 2.
"""
import csv
import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from airyPolinomios.errores import ErrorDominio, ErrorTabla

logger = logging.getLogger(__name__)

SALIDA_USO = 2


class ComandoAiry(BaseCommand):
    form_class = None

    def add_arguments(self, parser):
        parser.add_argument('--format', default='text', help="text, json o csv")
        parser.add_argument('--n-max', dest='n_max', help="Índice máximo (<= 200)")
        parser.add_argument('--seed', help="Semilla de los puntos aleatorios")
        parser.add_argument('--tol', default='', help="Tolerancias: 'clave=valor,...' o un valor para todas")

    def datos_formulario(self, options):
        """Solo las opciones que el formulario conoce y que vienen informadas."""
        return {
            campo: options[campo]
            for campo in self.form_class.base_fields
            if options.get(campo) is not None
        }

    def validar(self, options):
        form = self.form_class(self.datos_formulario(options))
        if not form.is_valid():
            mensaje = '; '.join(
                f"{campo}: {' '.join(errores)}" for campo, errores in form.errors.items()
            )
            raise CommandError(mensaje, returncode=SALIDA_USO)
        logger.debug("%s con %r", self.__class__.__module__, form.cleaned_data)
        return form.cleaned_data

    def handle(self, *args, **options):
        datos = self.validar(options)
        try:
            self.ejecutar(datos)
        except (ErrorDominio, ErrorTabla) as e:
            raise CommandError(str(e), returncode=SALIDA_USO)

    def ejecutar(self, datos):
        raise NotImplementedError

    # --- Salidas ---

    def emitir_json(self, datos):
        self.stdout.write(JSONRenderer().render(datos).decode('utf-8'))

    def emitir_csv(self, filas, columnas):
        escritor = csv.DictWriter(self.stdout, fieldnames=columnas, restval='',
                                  extrasaction='ignore', lineterminator='\n')
        escritor.writeheader()
        escritor.writerows(filas)

    def emitir_texto(self, filas, columnas, encabezados=None):
        """Columnas alineadas a la izquierda; None se imprime vacío."""
        encabezados = encabezados or columnas
        celdas = [[_celda(fila.get(c)) for c in columnas] for fila in filas]
        anchos = [max([len(e)] + [len(f[i]) for f in celdas]) for i, e in enumerate(encabezados)]
        for fila in [list(encabezados)] + celdas:
            self.stdout.write('  '.join(v.ljust(a) for v, a in zip(fila, anchos)).rstrip())


def _celda(valor):
    if valor is None:
        return ''
    if isinstance(valor, float):
        return repr(valor)
    return str(valor)
