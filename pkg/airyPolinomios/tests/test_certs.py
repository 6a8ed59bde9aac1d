from fractions import Fraction

from django.test import SimpleTestCase

from airyPolinomios.certs import (
    CERTIFICADOS, SECUENCIAS, closed_value, operator_annihilates, sequence_sum,
    shifted_operator_check, shifted_sum, summand_f, t_reduction_check, t_reduction_sum,
    telescoping_check,
)
from airyPolinomios.errores import ErrorDominio


class CertificadoTests(SimpleTestCase):

    def test_sumando_en_n_cero(self):
        self.assertEqual(summand_f(0, 0), 1)
        self.assertEqual(summand_f(0, 1), -1)
        with self.assertRaises(ErrorDominio):
            summand_f(0, 2)

    def test_telescopico(self):
        for secuencia in SECUENCIAS:
            for n in range(9):
                with self.subTest(secuencia=secuencia, n=n):
                    self.assertTrue(telescoping_check(n, secuencia))

    def test_certificado_nulo_fuera_del_soporte(self):
        cert = CERTIFICADOS["z_dbltilde"]
        self.assertEqual(cert.G(3, 0), 0)
        self.assertEqual(cert.G(3, cert.tope(3) + 4), 0)

    def test_sucesion_desconocida(self):
        with self.assertRaises(ErrorDominio):
            telescoping_check(1, "w")
        with self.assertRaises(ErrorDominio):
            closed_value("w", 1)


class SucesionesTests(SimpleTestCase):

    def test_cero_en_cinco_sextos(self):
        for n in range(11):
            with self.subTest(n=n):
                self.assertEqual(sequence_sum("z_dbltilde", n), 0)

    def test_valores_cerrados(self):
        for secuencia in SECUENCIAS:
            for n in range(11):
                with self.subTest(secuencia=secuencia, n=n):
                    self.assertEqual(sequence_sum(secuencia, n), closed_value(secuencia, n))
                    self.assertEqual(shifted_sum(secuencia, n), sequence_sum(secuencia, n))

    def test_operador(self):
        for secuencia in SECUENCIAS:
            for n in range(11):
                with self.subTest(secuencia=secuencia, n=n):
                    self.assertTrue(operator_annihilates(secuencia, n))
                    self.assertTrue(shifted_operator_check(secuencia, n))

    def test_valor_cerrado_inicial(self):
        self.assertEqual(closed_value("z_tilde", 0), 1)
        self.assertEqual(closed_value("z", 0), 1)
        self.assertEqual(closed_value("z", 1), -Fraction(1, 2) * Fraction(5, 6) / (Fraction(1, 2) * Fraction(3, 2)))


class ReduccionTTests(SimpleTestCase):

    def test_reduccion(self):
        for delta in (0, 1):
            for n in range(9):
                with self.subTest(n=n, delta=delta):
                    self.assertTrue(t_reduction_check(n, delta))

    def test_suma_intermedia_en_cero(self):
        self.assertEqual(t_reduction_sum(0, 0), 1)
