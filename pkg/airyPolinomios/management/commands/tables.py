from airyPolinomios import services
from airyPolinomios.forms import TablasForm
from airyPolinomios.serializers import FilaPQSerializer, FilaRSTSerializer

from ._base import ComandoAiry

COLUMNAS = {'PQ': ['n', 'P', 'Q'], 'RST': ['n', 'R', 'S', 'T']}
SERIALIZADORES = {'PQ': FilaPQSerializer, 'RST': FilaRSTSerializer}


class Command(ComandoAiry):
    help = "Imprime P_n, Q_n (n <= 15) y R_n, S_n, T_n (n <= 12) en el formato de texto de los polinomios."
    form_class = TablasForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--familias', default='', help="PQ o RST; vacío imprime ambas tablas")

    def ejecutar(self, datos):
        tablas = services.tablas_solicitadas(datos['familias'], datos['n_max'])

        if datos['format'] == 'json':
            self.emitir_json({
                tabla: SERIALIZADORES[tabla](filas, many=True).data for tabla, filas in tablas.items()
            })
        elif datos['format'] == 'csv':
            # Una sola cabecera: las filas de cada tabla dejan vacías las columnas ajenas
            filas = [dict(fila, table=tabla) for tabla, filas in tablas.items() for fila in filas]
            self.emitir_csv(filas, ['table', 'n', 'P', 'Q', 'R', 'S', 'T'])
        else:
            for i, (tabla, filas) in enumerate(tablas.items()):
                if i:
                    self.stdout.write('')
                columnas = COLUMNAS[tabla]
                encabezados = ['n'] + [f"{c}_n(x)" for c in columnas[1:]]
                self.emitir_texto(filas, columnas, encabezados)
