from fractions import Fraction

import sympy
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from airyPolinomios.errores import ErrorDominio, ErrorPolo
from airyPolinomios.ratcore import (
    Poly, Series, binom, poch, series_power, series_reciprocal_power,
    series_sqrt_reciprocal, sturm_count_interval, sturm_real_roots,
)

racionales = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polinomios = st.lists(racionales, max_size=6).map(Poly)


class PochhammerTests(SimpleTestCase):

    def test_valores_basicos(self):
        self.assertEqual(poch(Fraction(1, 3), 0), 1)
        self.assertEqual(poch(1, 5), 120)
        self.assertEqual(poch(Fraction(1, 2), 2), Fraction(3, 4))
        self.assertEqual(poch(-3, 4), 0)

    def test_k_negativo(self):
        with self.assertRaises(ErrorDominio):
            poch(1, -1)

    @given(racionales, st.integers(0, 8), st.integers(0, 8))
    def test_particion(self, a, m, k):
        self.assertEqual(poch(a, m + k), poch(a, m) * poch(a + m, k))

    def test_binomial(self):
        self.assertEqual(binom(5, 2), 10)
        self.assertEqual(binom(3, 5), 0)
        self.assertEqual(binom(4, -1), 0)
        self.assertEqual(binom(-2, 3), -4)


class PolyTests(SimpleTestCase):

    def test_nulo(self):
        cero = Poly([0, 0])
        self.assertTrue(cero.is_zero())
        self.assertEqual(cero.degree(), -1)
        self.assertEqual(cero.to_text(), "0")

    def test_texto_tablas(self):
        p = Poly([0, 8680, 0, 0, 770, 0, 0, 1])
        self.assertEqual(p.to_text(), "x^7+770x^4+8680x")
        self.assertEqual(Poly.from_text("x^7+770x^4+8680x"), p)
        self.assertEqual(Poly([Fraction(-1, 2), 0, 1]).to_text(), "x^2-(1/2)")
        self.assertEqual(Poly.from_text("x^2-(1/2)"), Poly([Fraction(-1, 2), 0, 1]))

    def test_texto_ilegible(self):
        for texto in ("", "x^", "3y", "2**x"):
            with self.subTest(texto=texto), self.assertRaises(ErrorDominio):
                Poly.from_text(texto)

    @given(polinomios)
    def test_texto_ida_y_vuelta(self, p):
        self.assertEqual(Poly.from_text(p.to_text()), p)

    @given(polinomios, polinomios, polinomios)
    def test_leyes_de_anillo(self, a, b, c):
        self.assertEqual(a + b, b + a)
        self.assertEqual(a * b, b * a)
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual(a - a, Poly())

    @given(polinomios, polinomios.filter(lambda p: not p.is_zero()))
    def test_division_euclidea(self, a, b):
        q, r = a.divmod(b)
        self.assertEqual(q * b + r, a)
        self.assertLess(r.degree(), b.degree())

    def test_division_por_cero(self):
        with self.assertRaises(ErrorDominio):
            Poly.x().divmod(Poly())

    def test_gcd_monico(self):
        a = Poly([-1, 0, 1]) * Poly([2, 1])
        b = Poly([1, 1]) * Poly([3, 1])
        self.assertEqual(a.gcd(b), Poly([1, 1]))

    def test_derivada_y_evaluacion(self):
        p = Poly.from_text("x^4+28x")
        self.assertEqual(p.derivative(), Poly.from_text("4x^3+28"))
        self.assertEqual(p.eval(Fraction(1, 2)), Fraction(1, 16) + 14)
        self.assertAlmostEqual(p.eval_real(0.5), 14.0625)
        self.assertEqual(p.lowest_power(), 1)


class SeriesTests(SimpleTestCase):

    def test_producto_trunca(self):
        s = Series([1, 1], 3) * Series([1, -1], 3)
        self.assertEqual(s, Series([1, 0, -1, 0], 3))

    def test_raiz_reciproca(self):
        s = series_sqrt_reciprocal(5)
        self.assertEqual(series_power(Poly([1, -1]), Fraction(-1, 2), 5), s)
        self.assertEqual(s * s, Series([1] * 6, 5))

    def test_polo_en_cero(self):
        with self.assertRaises(ErrorPolo):
            series_power(Poly.x(), -1, 4)

    def test_exponente_fraccionario_fuera_del_cuerpo(self):
        with self.assertRaises(ErrorDominio):
            series_power(Poly([2, 1]), Fraction(1, 2), 4)

    @settings(max_examples=40)
    @given(st.lists(racionales, min_size=1, max_size=4).filter(lambda c: c[0] != 0), st.integers(0, 4))
    def test_inversa_multiplicativa(self, coeficientes, m):
        p = Poly(coeficientes)
        orden = 8
        inversa = series_reciprocal_power(p, m, orden)
        potencia = Series.from_poly(p, orden)
        for _ in range(m):
            potencia = potencia * Series.from_poly(p, orden)
        self.assertEqual(inversa * potencia, Series([1], orden))

    def test_coeficiente_fuera_de_orden(self):
        with self.assertRaises(ErrorDominio):
            Series([1, 2], 1)[2]


class SturmTests(SimpleTestCase):

    def test_raices_simples_negativas(self):
        p = Poly.from_text("2048x^2+112896x+27664")
        self.assertEqual(sturm_real_roots(p), (2, 2, True))

    def test_raiz_doble(self):
        p = Poly([1, 2, 1]) * Poly([-2, 1])
        raices = sturm_real_roots(p)
        self.assertEqual(raices.count_total, 2)
        self.assertEqual(raices.count_negative, 1)
        self.assertFalse(raices.all_simple)

    def test_cero_no_es_negativo(self):
        p = Poly([0, 1]) * Poly([1, 1])
        self.assertEqual(sturm_real_roots(p), (2, 1, True))

    def test_intervalo(self):
        p = Poly([-1, 0, 1]) * Poly([-4, 1])
        self.assertEqual(sturm_count_interval(p, 0, None), 2)
        self.assertEqual(sturm_count_interval(p, -2, 2), 2)
        self.assertEqual(sturm_count_interval(p, None, 0), 1)

    def test_nulo(self):
        with self.assertRaises(ErrorDominio):
            sturm_real_roots(Poly())

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(-9, 9), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
    def test_coincide_con_sympy(self, coeficientes):
        x = sympy.Symbol('x')
        esperado = sympy.Poly(list(reversed(coeficientes)), x)
        reales = set(sympy.real_roots(esperado))
        raices = sturm_real_roots(Poly(coeficientes))
        self.assertEqual(raices.count_total, len(reales))
        self.assertEqual(raices.count_negative, sum(1 for r in reales if r < 0))
