import math
from fractions import Fraction

import mpmath
import numpy as np
from django.test import SimpleTestCase
from hypothesis import assume, given, strategies as st
from scipy import special

from airyPolinomios.errores import ErrorConvencion, ErrorDominio, ErrorPolo
from airyPolinomios.hyper import (
    IDENTIDADES_2F1, IDENTIDADES_3F2, HyperSpec, IdentityCheck, constant_ratio,
    distancia_2f1, distancia_entero_no_positivo, error_mixto, f0_value, gamma_numeric,
    identity_sweep, pfq_exact, pfq_numeric, rgamma_numeric, rhs_3f2, rhs_3f2_two_param,
    sample_points, spec_2f1, tau_value, verify_2f1_value, verify_3f2_two_param,
    verify_3f2_value,
)


class PfqExactoTests(SimpleTestCase):

    def test_binomio(self):
        # 2F1(-2, 1; 1 | 1/2) = (1 - 1/2)^2
        self.assertEqual(pfq_exact(HyperSpec((-2, 1), (1,), Fraction(1, 2))), Fraction(1, 4))

    def test_inferior_entero_despues_del_corte(self):
        spec = HyperSpec((-2,), (-3,), 1)
        self.assertEqual(pfq_exact(spec), Fraction(11, 6))

    def test_inferior_entero_antes_del_corte(self):
        with self.assertRaises(ErrorConvencion):
            pfq_exact(HyperSpec((-3,), (-2,), 1))

    def test_serie_no_terminante(self):
        with self.assertRaises(ErrorDominio):
            pfq_exact(HyperSpec((Fraction(1, 2),), (1,), Fraction(1, 2)))

    def test_coincide_con_flotante(self):
        spec = HyperSpec((-5, Fraction(1, 3)), (Fraction(7, 4),), Fraction(-1, 3))
        exacto = float(pfq_exact(spec))
        self.assertLessEqual(abs(pfq_numeric(spec) - exacto), 1e-13 * abs(exacto))


class PfqFlotanteTests(SimpleTestCase):

    def test_2f1_contra_scipy(self):
        spec = HyperSpec((0.3, 0.8), (1.7,), -1 / 3)
        esperado = special.hyp2f1(0.3, 0.8, 1.7, -1 / 3)
        self.assertLessEqual(abs(pfq_numeric(spec) - esperado), 1e-13 * abs(esperado))

    def test_3f2_contra_mpmath(self):
        spec = HyperSpec((0.2, 0.4, 0.7), (1.3, 0.9), 0.75)
        esperado = float(mpmath.hyp3f2(0.2, 0.4, 0.7, 1.3, 0.9, 0.75))
        self.assertLessEqual(abs(pfq_numeric(spec) - esperado), 1e-12 * abs(esperado))

    def test_fuera_del_disco(self):
        with self.assertRaises(ErrorDominio):
            pfq_numeric(HyperSpec((0.5, 0.5), (1.5,), 1.0))

    def test_inferior_en_un_polo(self):
        with self.assertRaises(ErrorPolo):
            pfq_numeric(HyperSpec((0.5,), (-2.0,), 0.5))


class GammaTests(SimpleTestCase):

    @given(st.floats(min_value=-10, max_value=25))
    def test_contra_scipy(self, x):
        assume(distancia_entero_no_positivo(x) > 1e-3)
        esperado = special.gamma(x)
        self.assertLessEqual(abs(gamma_numeric(x) - esperado), 1e-11 * abs(esperado))

    @given(st.floats(min_value=-8, max_value=20))
    def test_recurrencia(self, x):
        assume(distancia_entero_no_positivo(x) > 1e-3)
        assume(distancia_entero_no_positivo(x + 1) > 1e-3)
        izquierda = gamma_numeric(x + 1)
        self.assertLessEqual(abs(izquierda - x * gamma_numeric(x)), 1e-11 * abs(izquierda))

    def test_polos(self):
        with self.assertRaises(ErrorPolo):
            gamma_numeric(-3.0)
        self.assertEqual(rgamma_numeric(-3.0), 0.0)
        self.assertAlmostEqual(rgamma_numeric(0.5), 1 / math.sqrt(math.pi), places=14)

    def test_error_mixto(self):
        self.assertEqual(error_mixto(1e-20, 0.0), 1e-20)
        self.assertAlmostEqual(error_mixto(101.0, 100.0), 0.01)


class Identidades2F1Tests(SimpleTestCase):

    def test_puntos_terminantes_exactos(self):
        for identidad in IDENTIDADES_2F1:
            for n in range(8):
                with self.subTest(identidad=identidad, n=n):
                    chequeo = verify_2f1_value(identidad, Fraction(-n, 2))
                    self.assertTrue(chequeo.exact)
                    self.assertTrue(chequeo.passed, chequeo)
                    self.assertEqual(chequeo.lhs, chequeo.rhs)

    def test_puntos_flotantes(self):
        for identidad in IDENTIDADES_2F1:
            for a in (-1.37, -0.61, 0.13):
                with self.subTest(identidad=identidad, a=a):
                    chequeo = verify_2f1_value(identidad, a)
                    self.assertFalse(chequeo.exact)
                    self.assertTrue(chequeo.passed, chequeo)

    def test_lado_izquierdo_contra_scipy(self):
        spec = spec_2f1("A", 0.13)
        c = float(spec.lower[0])
        esperado = special.hyp2f1(0.13, 0.63, c, -1 / 3)
        self.assertAlmostEqual(verify_2f1_value("A", 0.13).lhs, esperado, places=13)

    def test_polo(self):
        with self.assertRaises(ErrorPolo):
            verify_2f1_value("A", 1 / 3)

    def test_identidad_desconocida(self):
        with self.assertRaises(ErrorDominio):
            verify_2f1_value("Z9", 0.1)


class Identidades3F2Tests(SimpleTestCase):

    def test_puntos_terminantes_exactos(self):
        for identidad in IDENTIDADES_3F2:
            for n in range(7):
                with self.subTest(identidad=identidad, n=n):
                    chequeo = verify_3f2_value(identidad, -n)
                    self.assertTrue(chequeo.exact)
                    self.assertTrue(chequeo.passed, chequeo)

    def test_puntos_flotantes(self):
        for identidad in IDENTIDADES_3F2:
            for a in (-0.41, 0.37, 1.22):
                with self.subTest(identidad=identidad, a=a):
                    self.assertTrue(verify_3f2_value(identidad, a).passed)

    def test_dos_parametros(self):
        self.assertTrue(verify_3f2_two_param("cos_case", 0.2, 0.6).passed)
        self.assertTrue(verify_3f2_two_param("sin_case", 0.3, 0.7).passed)

    def test_dos_parametros_exactos(self):
        chequeo = verify_3f2_two_param("cos_case", Fraction(1, 6), 1)
        self.assertTrue(chequeo.exact)
        self.assertTrue(chequeo.passed)
        self.assertEqual(chequeo.lhs, 1)
        self.assertEqual(verify_3f2_two_param("cos_case", Fraction(5, 6), 1).lhs, Fraction(-1, 2))
        self.assertEqual(verify_3f2_two_param("sin_case", Fraction(2, 3), 2).rhs, Fraction(2, 5))
        # cos^2(3 pi / 2) = 0
        self.assertEqual(verify_3f2_two_param("cos_case", Fraction(3, 2), 1).lhs, 0)

    def test_dos_parametros_terminantes_hasta_doce(self):
        polos = []
        for identidad, inicio in (("cos_case", Fraction(1, 6)), ("sin_case", Fraction(1, 3))):
            for n in range(13):
                for m in (1, 2, 3):
                    a = inicio + Fraction(n, 3)
                    with self.subTest(identidad=identidad, n=n, m=m):
                        try:
                            chequeo = verify_3f2_two_param(identidad, a, m)
                        except ErrorPolo:
                            polos.append((identidad, n, m))
                            continue
                        self.assertTrue(chequeo.exact)
                        self.assertTrue(chequeo.passed, chequeo)
        self.assertIn(("cos_case", 1, 1), polos)
        self.assertNotIn(("cos_case", 0, 1), polos)

    def test_dos_parametros_exacto_coincide_con_gammas(self):
        for identidad, a, m in (("cos_case", Fraction(5, 6), 1), ("sin_case", Fraction(2, 3), 2),
                                ("cos_case", Fraction(7, 6), 3)):
            with self.subTest(identidad=identidad, a=a, m=m):
                exacto = verify_3f2_two_param(identidad, a, m).rhs
                self.assertAlmostEqual(float(exacto), rhs_3f2_two_param(identidad, a, m), places=10)

    def test_dos_parametros_polo(self):
        with self.assertRaises(ErrorPolo):
            verify_3f2_two_param("cos_case", Fraction(1, 2), 1)

    def test_coseno_con_b_igual_a_a(self):
        for a in (0.15, 0.55):
            with self.subTest(a=a):
                self.assertAlmostEqual(rhs_3f2_two_param("cos_case", a, a) / rhs_3f2("Sa", a), 1.0, places=12)


class CurvasTests(SimpleTestCase):

    def test_f0_en_un_sexto(self):
        self.assertAlmostEqual(f0_value(1 / 6), 1.0, places=12)

    def test_tau_cero_en_cinco_sextos(self):
        self.assertAlmostEqual(tau_value(5 / 6), 0.0, delta=1e-10)

    def test_tau_polo(self):
        with self.assertRaises(ErrorPolo):
            tau_value(1 / 3)

    def test_constante_menos_dos(self):
        for a in (-0.7, 0.375, 1.29):
            with self.subTest(a=a):
                self.assertAlmostEqual(constant_ratio(a), -2.0, delta=2e-8)


class MuestreoTests(SimpleTestCase):

    def test_reproducible_y_lejos_de_polos(self):
        distancia = distancia_2f1("B52")
        puntos = sample_points(np.random.default_rng(7), -3, 0.25, 30, distancia)
        self.assertEqual(puntos, sample_points(np.random.default_rng(7), -3, 0.25, 30, distancia))
        self.assertEqual(len(puntos), 30)
        for a in puntos:
            self.assertTrue(-3 <= a < 0.25)
            self.assertGreaterEqual(distancia(a), 1e-3)

    def test_informe_de_barrido(self):
        chequeos = [
            IdentityCheck("A", "0", 1, 1, 0.0, True, True),
            IdentityCheck("A", "0.1", 1.0, 1.0 + 1e-12, 1e-12, False, True),
        ]
        informe = identity_sweep("A", chequeos, 1e-9)
        self.assertTrue(informe.verdict)
        self.assertEqual(informe.exact_passes, 1)
        self.assertEqual(informe.test_points, ["0", "0.1"])
        malo = IdentityCheck("A", "0.2", 1.0, 1.1, 0.1, False, False)
        self.assertFalse(identity_sweep("A", chequeos + [malo], 1e-9).verdict)
