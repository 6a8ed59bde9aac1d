import math

from django.test import SimpleTestCase, TestCase

from airyPolinomios import services
from airyPolinomios.airy_pq import FilaCeros
from airyPolinomios.decorators import FALLIDO, REGISTRO, CheckRecord, verificacion
from airyPolinomios.errores import ErrorDominio, ErrorTabla
from airyPolinomios.models import CorridaVerificacion, RegistroChequeo

ALEATORIOS = ['constante_menos_dos', 'identidades_2f1_flotantes', 'tabla_pq_recurrencia']


class SuiteTests(SimpleTestCase):

    def test_suite_completa_pasa(self):
        resultado = services.ejecutar_suite(n_max=6, semilla=11)
        self.assertTrue(resultado.veredicto, [(r.check, r.family, r.n, r.detail) for r in resultado.fallidos])
        self.assertGreater(resultado.total, 200)
        self.assertEqual(set(resultado.tiempos_por_chequeo()), set(services.nombres_chequeos()))

    def test_registros_agregados_llevan_el_peor_par(self):
        agregados = ['identidades_3f2_flotantes', 'gamma_recurrencia', 'pfq_exacto_flotante',
                     'derivadas_ai_bi', 'cola_lambda', 'gtilde_gegenbauer']
        resultado = services.ejecutar_suite(n_max=4, semilla=3, solo=agregados)
        resumenes = [r for r in resultado.registros
                     if r.check != 'identidades_3f2_flotantes' or r.n is None]
        self.assertEqual({r.check for r in resumenes}, set(agregados))
        for r in resumenes:
            with self.subTest(check=r.check, family=r.family, n=r.n):
                self.assertNotEqual(r.lhs, '')
                self.assertNotEqual(r.rhs, '')
                self.assertIsNotNone(r.rel_err)

    def test_dos_parametros_exactos_en_la_suite(self):
        resultado = services.ejecutar_suite(n_max=12, solo=['identidades_dos_parametros_exactas'])
        self.assertTrue(resultado.veredicto, [(r.family, r.n, r.detail) for r in resultado.fallidos])
        self.assertEqual({r.family for r in resultado.registros}, {'cos_case', 'sin_case'})

    def test_determinista_con_la_misma_semilla(self):
        primera = services.ejecutar_suite(n_max=4, semilla=5, solo=ALEATORIOS)
        segunda = services.ejecutar_suite(n_max=4, semilla=5, solo=ALEATORIOS, hilos=1)
        self.assertEqual(primera.registros, segunda.registros)
        otra = services.ejecutar_suite(n_max=4, semilla=6, solo=ALEATORIOS)
        self.assertNotEqual(primera.registros, otra.registros)

    def test_registros_ordenados(self):
        resultado = services.ejecutar_suite(n_max=4, solo=ALEATORIOS)
        claves = [r.clave_orden() for r in resultado.registros]
        self.assertEqual(claves, sorted(claves))

    def test_tabla_corrompida_falla(self):
        resultado = services.ejecutar_suite(
            n_max=4, solo=['tabla_pq_recurrencia'], golden={'Q': {10: '20x^3+81'}},
        )
        self.assertFalse(resultado.veredicto)
        self.assertEqual([(r.check, r.family, r.n) for r in resultado.fallidos],
                         [('tabla_pq_recurrencia', 'Q', 10)])

    def test_reemplazo_fuera_de_tabla(self):
        with self.assertRaises(ErrorTabla):
            services.ejecutar_suite(n_max=2, solo=['tabla_texto'], golden={'R': {13: 'x'}})
        with self.assertRaises(ErrorDominio):
            services.ejecutar_suite(n_max=2, solo=['tabla_texto'], golden={'W': {1: 'x'}})

    def test_chequeo_desconocido(self):
        with self.assertRaises(ErrorDominio):
            services.ejecutar_suite(solo=['no_existe'])

    def test_tolerancias(self):
        self.assertEqual(services.tolerancias_efectivas({'2f1': 1e-6})['2f1'], 1e-6)
        with self.assertRaises(ErrorDominio):
            services.tolerancias_efectivas({'inventada': 1e-6})
        with self.assertRaises(ErrorDominio):
            services.tolerancias_efectivas({'2f1': 0.0})

    def test_excepcion_se_vuelve_registro_fallido(self):
        @verificacion(nombre='prueba_que_explota')
        def explota(contexto, rng):
            yield CheckRecord(check='', family='x', n=0)
            raise ZeroDivisionError("sin certificado")

        self.addCleanup(REGISTRO.pop, 'prueba_que_explota')
        with self.assertLogs('airyPolinomios.decorators', level='ERROR'):
            resultado = services.ejecutar_suite(n_max=2, solo=['prueba_que_explota'])
        self.assertEqual(resultado.total, 1)
        registro = resultado.registros[0]
        self.assertEqual(registro.status, FALLIDO)
        self.assertEqual(registro.check, 'prueba_que_explota')
        self.assertIn('ZeroDivisionError', registro.detail)


class ServiciosDeConsultaTests(SimpleTestCase):

    def test_filas_tablas(self):
        filas = services.filas_tablas('PQ', 3)
        self.assertEqual(filas[3], {'n': 3, 'P': '1', 'Q': 'x'})
        with self.assertRaises(ErrorDominio):
            services.filas_tablas('XY', 3)

    def test_tablas_solicitadas(self):
        tablas = services.tablas_solicitadas()
        self.assertEqual(len(tablas['PQ']), 16)
        self.assertEqual(len(tablas['RST']), 13)
        self.assertEqual(list(services.tablas_solicitadas('RST', 4)), ['RST'])

    def test_evaluar(self):
        resultado = services.evaluar('Ai', 0, 0.0)
        self.assertAlmostEqual(resultado['value'], 0.35502805388781723926, places=14)
        self.assertEqual(resultado['polinomios'], {'P': '1', 'Q': '0'})
        producto = services.evaluar('AiBi', 2, 0.5)
        self.assertEqual(set(producto['polinomios']), {'R', 'S', 'T'})

    def test_filas_ceros(self):
        filas = services.filas_ceros(15, ('Q',))
        self.assertIn(FilaCeros('Q', 15, 2, 2, 2, 0, True), filas)
        self.assertTrue(all(f.family == 'Q' for f in filas))

    def test_muestras_con_polo(self):
        muestras = services.muestras_curva('tau', 1 / 6, 1 / 2, 3)
        self.assertEqual([m['value'] is None for m in muestras], [False, True, False])
        self.assertAlmostEqual(muestras[1]['a'], 1 / 3)

    def test_muestras_f(self):
        muestras = services.muestras_curva('F', -1.5, 2.5, 401)
        self.assertEqual(len(muestras), 401)
        self.assertIsNone(muestras[150]['value'])
        self.assertTrue(all(m['value'] is None or math.isfinite(m['value']) for m in muestras))

    def test_curva_desconocida(self):
        with self.assertRaises(ErrorDominio):
            services.muestras_curva('G', 0, 1, 3)


class PersistenciaTests(TestCase):

    def test_guardar_corrida(self):
        resultado = services.ejecutar_suite(
            n_max=2, solo=['tabla_pq_recurrencia'], golden={'P': {4: 'x^2+1'}},
        )
        corrida = services.guardar_corrida(resultado)
        self.assertEqual(CorridaVerificacion.objects.count(), 1)
        self.assertFalse(corrida.veredicto)
        self.assertEqual(corrida.fallidos, 1)
        self.assertEqual(corrida.registros.count(), resultado.total)
        fallido = RegistroChequeo.objects.get(corrida=corrida, status=FALLIDO)
        self.assertEqual((fallido.chequeo, fallido.family, fallido.n), ('tabla_pq_recurrencia', 'P', 4))
