from django.conf import settings

from airyPolinomios import services
from airyPolinomios.forms import CerosForm
from airyPolinomios.serializers import FilaCerosSerializer

from ._base import ComandoAiry

COLUMNAS = ['family', 'n', 'degree', 'real_roots', 'negative_roots', 'positive_roots', 'simple']


class Command(ComandoAiry):
    help = ("Conteo de Sturm de las raíces reales, negativas y simples de los polinomios "
            "reducidos P, Q, Z, R, S y T hasta n_max.")
    form_class = CerosForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--familias', default='', help="Subconjunto de PQZRST, ej. 'PQ'")

    def ejecutar(self, datos):
        n_max = datos['n_max'] if datos['n_max'] is not None else settings.AIRY_N_MAX_TABLAS_PQ
        filas = FilaCerosSerializer(services.filas_ceros(n_max, datos['familias']), many=True).data

        if datos['format'] == 'json':
            self.emitir_json(filas)
        elif datos['format'] == 'csv':
            self.emitir_csv(filas, COLUMNAS)
        else:
            self.emitir_texto(filas, COLUMNAS)
