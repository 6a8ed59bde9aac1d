from django.test import SimpleTestCase

from airyPolinomios.airy_pq import FilaCeros, coincide_desde_cero, fila_ceros, pq_recurrence
from airyPolinomios.airy_rst import (
    h_coeff, h_via_3f2, product_rows, r_closed, rst_convolution, rst_general_solution,
    rst_recurrence, rst_small_x_leading, rst_three_term_check, s_closed, t_closed, t_from_h,
)
from airyPolinomios.errores import ErrorDominio, ErrorTabla
from airyPolinomios.ratcore import Poly
from airyPolinomios.tablas import TABLA_RST

N = 20


class RecurrenciaRSTTests(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.ternas = rst_recurrence(N)

    def test_tabla_de_referencia(self):
        for n, fila in enumerate(TABLA_RST):
            with self.subTest(n=n):
                terna = self.ternas[n]
                self.assertEqual((terna.r.to_text(), terna.s.to_text(), terna.t.to_text()), fila)

    def test_fila_once(self):
        self.assertEqual(self.ternas[11].r.to_text(), "11776x^4+27664x")

    def test_formas_cerradas(self):
        for n in range(N + 1):
            terna = self.ternas[n]
            with self.subTest(n=n):
                self.assertEqual(r_closed(n), terna.r)
                self.assertEqual(s_closed(n), terna.s)
                self.assertEqual(t_closed(n), terna.t)
                self.assertEqual(t_from_h(n), terna.t)

    def test_convolucion(self):
        pares = pq_recurrence(N)
        for n in range(N + 1):
            with self.subTest(n=n):
                self.assertEqual(rst_convolution(n, pares), self.ternas[n])

    def test_convolucion_tabla_corta(self):
        with self.assertRaises(ErrorTabla):
            rst_convolution(5, pq_recurrence(3))

    def test_tres_terminos(self):
        self.assertTrue(rst_three_term_check(30))


class CoeficientesHTests(SimpleTestCase):

    def test_via_3f2(self):
        for m in range(7):
            for n in range(11):
                with self.subTest(m=m, n=n):
                    self.assertEqual(h_coeff(m, n), h_via_3f2(m, n))


class SolucionGeneralTests(SimpleTestCase):

    def test_bases(self):
        ternas = rst_recurrence(12)
        casos = {
            "r": (1, 0, Poly([0, 2])),
            "s": (0, 1, 0),
            "t": (0, 0, 2),
        }
        for familia, iniciales in casos.items():
            with self.subTest(familia=familia):
                solucion = rst_general_solution(*iniciales, 12)
                self.assertTrue(solucion.ok)
                self.assertEqual(solucion.y, [getattr(terna, familia) for terna in ternas])

    def test_iniciales_genericos(self):
        solucion = rst_general_solution(Poly.x(), 1, Poly([3, 0, 1]), 15)
        self.assertTrue(solucion.ok)
        self.assertEqual(len(solucion.y), 16)


class DesarrolloYCerosRSTTests(SimpleTestCase):

    def test_x_pequeno(self):
        ternas = rst_recurrence(N)
        for n in range(N + 1):
            terminos = rst_small_x_leading(n)
            for familia in ("R", "S", "T"):
                with self.subTest(n=n, familia=familia):
                    propios = [(pot, c) for fam, pot, c in terminos if fam == familia]
                    poly = getattr(ternas[n], familia.lower())
                    self.assertTrue(coincide_desde_cero(poly, propios))

    def test_fila_doce(self):
        self.assertEqual(fila_ceros("R", 12), FilaCeros("R", 12, 2, 2, 2, 0, True))

    def test_producto_desconocido(self):
        self.assertEqual(product_rows("AiBi"), ("Ai", "Bi"))
        with self.assertRaises(ErrorDominio):
            product_rows("AiCi")
