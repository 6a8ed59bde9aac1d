import math

import mpmath
import numpy as np
from django.test import SimpleTestCase
from scipy import special

from airyPolinomios import services
from airyPolinomios.airy_numeric import (
    ai_bi, ai_bi_derivative_series, ai_derivative, airy_atoms, atom_derivative, bi_derivative,
    genfun_check, lambda_tail, product_derivative, producto_mpmath, richardson_derivative,
)
from airyPolinomios.airy_pq import pq_recurrence
from airyPolinomios.airy_rst import PRODUCTOS, rst_recurrence
from airyPolinomios.errores import ErrorConvergencia, ErrorDominio
from airyPolinomios.hyper import error_mixto
from airyPolinomios.verificaciones import PUNTOS_X

AI_0 = 0.35502805388781723926
AIP_0 = -0.25881940379280679840


class ValoresAiryTests(SimpleTestCase):

    def test_constantes_en_cero(self):
        v = ai_bi(0.0)
        self.assertLessEqual(abs(v.ai - AI_0), 1e-14)
        self.assertLessEqual(abs(v.aip - AIP_0), 1e-14)
        self.assertAlmostEqual(v.bi / v.ai, math.sqrt(3), places=14)

    def test_contra_scipy(self):
        for x in np.linspace(-6, 3, 37):
            ai, aip, bi, bip = special.airy(x)
            v = ai_bi(float(x))
            with self.subTest(x=x):
                self.assertLessEqual(error_mixto(v.ai, ai), 1e-10)
                self.assertLessEqual(error_mixto(v.aip, aip), 1e-10)
                self.assertLessEqual(error_mixto(v.bi, bi), 1e-10)
                self.assertLessEqual(error_mixto(v.bip, bip), 1e-10)

    def test_wronskiano(self):
        for x in np.linspace(-6, 4, 41):
            v = ai_bi(float(x))
            with self.subTest(x=x):
                self.assertLessEqual(abs(v.ai * v.bip - v.aip * v.bi - 1 / math.pi), 1e-10)
        self.assertAlmostEqual(airy_atoms(0.0).wronskiano, 1.0, places=15)

    def test_fuera_de_la_ventana(self):
        with self.assertRaises(ErrorDominio):
            ai_bi(8.5)
        with self.assertRaises(ErrorDominio):
            atom_derivative(2, 0.0, "h")


class DerivadasTests(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.pares = pq_recurrence(10)
        cls.ternas = rst_recurrence(6)

    def test_ecuacion_de_airy(self):
        ai = special.airy(1.0)[0]
        self.assertAlmostEqual(ai_derivative(2, 1.0, self.pares[2]), ai, places=13)
        self.assertAlmostEqual(ai_derivative(0, 0.0, self.pares[0]), AI_0, places=14)

    def test_primera_derivada_contra_scipy(self):
        _, aip, _, bip = special.airy(0.7)
        self.assertLessEqual(error_mixto(ai_derivative(1, 0.7, self.pares[1]), aip), 1e-12)
        self.assertLessEqual(error_mixto(bi_derivative(1, 0.7, self.pares[1]), bip), 1e-12)

    def test_contra_series_derivadas(self):
        for n in range(11):
            for x in (-2.0, -0.3, 0.0, 1.0, 2.0):
                ai_serie, bi_serie = ai_bi_derivative_series(n, x)
                with self.subTest(n=n, x=x):
                    self.assertLessEqual(error_mixto(ai_derivative(n, x, self.pares[n]), ai_serie), 1e-7)
                    self.assertLessEqual(error_mixto(bi_derivative(n, x, self.pares[n]), bi_serie), 1e-7)

    def test_producto_en_cero(self):
        esperado = 2 * AI_0 * AIP_0
        self.assertAlmostEqual(product_derivative("AiAi", 1, 0.0, self.ternas[1]), esperado, places=13)

    def test_producto_contra_richardson(self):
        for producto in PRODUCTOS:
            funcion = producto_mpmath(producto)
            for n in range(7):
                for x in PUNTOS_X:
                    with self.subTest(producto=producto, n=n, x=x):
                        exacto = product_derivative(producto, n, x, self.ternas[n])
                        aproximado = richardson_derivative(funcion, n, x)
                        self.assertLessEqual(error_mixto(aproximado, exacto), 1e-7)

    def test_richardson_no_cambia_la_precision_global(self):
        antes = mpmath.mp.dps
        richardson_derivative(producto_mpmath("BiBi"), 6, 2.0)
        lambda_tail(2, 8, 0.5)
        self.assertEqual(mpmath.mp.dps, antes)

    def test_derivadas_producto_con_tolerancia_por_defecto(self):
        resultado = services.ejecutar_suite(n_max=6, solo=['derivadas_producto'])
        self.assertTrue(resultado.veredicto, [(r.family, r.n, r.rel_err) for r in resultado.fallidos])
        self.assertEqual(resultado.total, 3 * 7)
        for r in resultado.registros:
            with self.subTest(family=r.family, n=r.n):
                self.assertNotEqual(r.lhs, '')
                self.assertNotEqual(r.rhs, '')

    def test_indice_equivocado(self):
        with self.assertRaises(ErrorDominio):
            ai_derivative(3, 0.0, self.pares[2])


class GeneratrizYColaTests(SimpleTestCase):

    def test_funcion_generatriz(self):
        for x, t in ((0.5, 0.3), (-1.0, 0.2), (2.0, -0.5)):
            with self.subTest(x=x, t=t):
                error_p, error_q = genfun_check(x, t, 30)
                self.assertLessEqual(error_p, 1e-9)
                self.assertLessEqual(error_q, 1e-9)

    def test_t_fuera_de_rango(self):
        with self.assertRaises(ErrorDominio):
            genfun_check(0.0, 1.5, 10)

    def test_cola_lambda(self):
        for t in (0.1, 0.5, 0.9):
            for n, N in ((0, 3), (2, 8), (5, 12)):
                with self.subTest(t=t, n=n, N=N):
                    cola = lambda_tail(n, N, t)
                    self.assertLessEqual(error_mixto(cola.via_series, cola.via_closed), 1e-10)

    def test_cola_t_invalido(self):
        for t in (0.0, 1.0, -0.2):
            with self.subTest(t=t), self.assertRaises(ErrorDominio):
                lambda_tail(1, 4, t)

    def test_cola_valores_en_un_cuarto(self):
        cola = lambda_tail(0, 0, 0.25)
        self.assertAlmostEqual(cola.via_closed, (2 / math.sqrt(3) - 1) / 0.25, places=12)
        # el primer término de la cola con N = 10 ya vale (1/2)_11 / 11! ~ 0.168
        cola = lambda_tail(0, 10, 0.25)
        self.assertGreater(cola.via_series, 0.2)
        self.assertLess(cola.via_series, 0.25)
        self.assertLessEqual(error_mixto(cola.via_closed, cola.via_series), 1e-10)

    def test_cola_sin_converger(self):
        with self.assertRaises(ErrorConvergencia):
            lambda_tail(0, 10, 0.99999)
