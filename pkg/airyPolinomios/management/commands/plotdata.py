from airyPolinomios import services
from airyPolinomios.forms import PlotdataForm
from airyPolinomios.serializers import MuestraSerializer

from ._base import ComandoAiry


class Command(ComandoAiry):
    help = ("Muestras (a, valor) de tau(a), F(a) o F0(a) para graficar; los puntos "
            "cercanos a un polo quedan con el valor vacío.")
    form_class = PlotdataForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--curve', default='F', help="tau, F o F0")
        parser.add_argument('--a-min', dest='a_min')
        parser.add_argument('--a-max', dest='a_max')
        parser.add_argument('--steps', help="Cantidad de muestras (>= 2)")
        parser.set_defaults(format='csv')

    def ejecutar(self, datos):
        muestras = MuestraSerializer(
            services.muestras_curva(datos['curve'], datos['a_min'], datos['a_max'], datos['steps']),
            many=True,
        ).data

        if datos['format'] == 'json':
            self.emitir_json(muestras)
        elif datos['format'] == 'csv':
            self.emitir_csv(muestras, ['a', 'value'])
        else:
            self.emitir_texto(muestras, ['a', 'value'])
