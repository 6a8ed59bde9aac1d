from collections import Counter

from django.core.management.base import CommandError

from airyPolinomios import services
from airyPolinomios.forms import VerificarForm
from airyPolinomios.serializers import CheckRecordSerializer

from ._base import ComandoAiry

COLUMNAS = ['check', 'family', 'n', 'status', 'lhs', 'rhs', 'rel_err']
SALIDA_FALLIDA = 1


class Command(ComandoAiry):
    help = ("Ejecuta la suite de verificación completa: rutas equivalentes, recurrencias, "
            "positividad, Sturm, identidades hipergeométricas, certificados y numérica. "
            "Sale con 0 si todo pasa, 1 si algún chequeo falla y 2 ante un error de uso.")
    form_class = VerificarForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--solo', default='', help="Nombres de chequeo separados por coma")
        parser.add_argument('--hilos', help="Hilos del ejecutor")
        parser.add_argument('--guardar', action='store_true', help="Guarda la corrida en la base de datos")
        parser.add_argument(
            '--golden', action='append', default=[],
            help="Reemplaza una fila de tabla de referencia, ej. 'Q:10=20x^3+81' (repetible)",
        )

    def datos_formulario(self, options):
        datos = super().datos_formulario(options)
        golden = options.get('golden') or []
        datos['golden'] = ';'.join(golden) if isinstance(golden, (list, tuple)) else golden
        return datos

    def handle(self, *args, **options):
        self.guardar = options['guardar']
        self.verbosidad = options['verbosity']
        super().handle(*args, **options)

    def ejecutar(self, datos):
        resultado = services.ejecutar_suite(
            n_max=datos['n_max'],
            semilla=datos['seed'],
            tolerancias=datos['tol'],
            hilos=datos['hilos'],
            solo=datos['solo'],
            golden=datos['golden'],
        )

        if datos['format'] == 'json':
            self.emitir_json(CheckRecordSerializer(resultado.registros, many=True).data)
        elif datos['format'] == 'csv':
            self.emitir_csv(CheckRecordSerializer(resultado.registros, many=True).data, COLUMNAS)
        else:
            self.resumen_texto(resultado)

        if self.guardar:
            corrida = services.guardar_corrida(resultado)
            self.stderr.write(f"Corrida guardada con id {corrida.pk}")

        if not resultado.veredicto:
            nombres = sorted({r.check for r in resultado.fallidos})
            raise CommandError(
                f"{len(resultado.fallidos)} registros fallidos en: {', '.join(nombres)}",
                returncode=SALIDA_FALLIDA,
            )

    def resumen_texto(self, resultado):
        """Una línea por chequeo con su tiempo; los registros fallidos siempre se listan."""
        totales = Counter(r.check for r in resultado.registros)
        fallidos = Counter(r.check for r in resultado.fallidos)
        tiempos = resultado.tiempos_por_chequeo()
        filas = [
            {
                'check': nombre,
                'records': totales[nombre],
                'failed': fallidos[nombre],
                'seconds': f"{tiempos[nombre]:.3f}",
            }
            for nombre in sorted(totales)
        ]
        self.emitir_texto(filas, ['check', 'records', 'failed', 'seconds'])

        detalle = resultado.registros if self.verbosidad >= 2 else resultado.fallidos
        if detalle:
            self.stdout.write('')
            for r in detalle:
                error = '' if r.rel_err is None else f" rel_err={r.rel_err:.3e}"
                self.stdout.write(
                    f"{r.status.upper()} {r.check} [{r.family} n={r.n}]{error} {r.detail}".rstrip()
                )

        self.stdout.write('')
        veredicto = self.style.SUCCESS('PASS') if resultado.veredicto else self.style.ERROR('FAIL')
        self.stdout.write(
            f"{veredicto}: {resultado.total} registros, {len(resultado.fallidos)} fallidos, "
            f"semilla {resultado.semilla}, n_max {resultado.n_max}, {resultado.duracion:.2f} s"
        )
