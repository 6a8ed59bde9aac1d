from airyPolinomios import services
from airyPolinomios.forms import EvaluarForm
from airyPolinomios.serializers import EvaluacionSerializer

from ._base import ComandoAiry


class Command(ComandoAiry):
    help = "Evalúa la derivada n-ésima de Ai, Bi, AiAi, AiBi o BiBi en x (|x| <= 8)."
    form_class = EvaluarForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--target', default='Ai', help="Ai, Bi, AiAi, AiBi o BiBi")
        parser.add_argument('--n', help="Orden de la derivada")
        parser.add_argument('--x', help="Punto de evaluación")

    def ejecutar(self, datos):
        resultado = services.evaluar(datos['target'], datos['n'], datos['x'])

        if datos['format'] == 'json':
            self.emitir_json(EvaluacionSerializer(resultado).data)
        elif datos['format'] == 'csv':
            polinomios = resultado['polinomios']
            fila = {k: v for k, v in resultado.items() if k != 'polinomios'}
            fila.update(polinomios)
            self.emitir_csv([fila], ['target', 'n', 'x', 'value', *polinomios])
        else:
            self.stdout.write(
                f"{resultado['target']}^({resultado['n']})({resultado['x']!r}) = {resultado['value']!r}"
            )
            for familia, texto in resultado['polinomios'].items():
                self.stdout.write(f"{familia}_{resultado['n']}(x) = {texto}")
