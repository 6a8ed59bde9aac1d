from django.contrib.auth.models import User
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APITestCase
from scipy.special import airy

from airyPolinomios import services


class CalculoApiTests(APITestCase):

    def test_tablas_por_defecto(self):
        respuesta = self.client.get(reverse('api:tablas-list'))
        self.assertEqual(respuesta.status_code, status.HTTP_200_OK)
        self.assertEqual(len(respuesta.data['PQ']), 16)
        self.assertEqual(len(respuesta.data['RST']), 13)
        self.assertEqual(respuesta.data['PQ'][10]['Q'], '20x^3+80')

    def test_tablas_filtradas(self):
        respuesta = self.client.get(reverse('api:tablas-list'), {'familias': 'PQ', 'n_max': 4})
        self.assertEqual(list(respuesta.data), ['PQ'])
        self.assertEqual(respuesta.data['PQ'][-1], {'n': 4, 'P': 'x^2', 'Q': '2'})

    def test_tablas_n_max_fuera_de_rango(self):
        respuesta = self.client.get(reverse('api:tablas-list'), {'n_max': 500})
        self.assertEqual(respuesta.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('n_max', respuesta.data)

    def test_evaluar(self):
        respuesta = self.client.get(reverse('api:evaluar-list'), {'target': 'Ai', 'n': 2, 'x': 1.0})
        self.assertEqual(respuesta.status_code, status.HTTP_200_OK)
        ai = airy(1.0)[0]
        self.assertAlmostEqual(respuesta.data['value'], ai, delta=1e-10)
        self.assertEqual(respuesta.data['polinomios'], {'P': 'x', 'Q': '0'})

    def test_evaluar_fuera_de_ventana(self):
        respuesta = self.client.get(reverse('api:evaluar-list'), {'target': 'Ai', 'n': 2, 'x': 9})
        self.assertEqual(respuesta.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('x', respuesta.data)

    def test_ceros(self):
        respuesta = self.client.get(reverse('api:ceros-list'), {'n_max': 12, 'familias': 'R'})
        self.assertEqual(respuesta.status_code, status.HTTP_200_OK)
        self.assertTrue(respuesta.data)
        self.assertEqual({fila['family'] for fila in respuesta.data}, {'R'})
        self.assertTrue(all(fila['n'] <= 12 for fila in respuesta.data))


class CorridasApiTests(APITestCase):

    def setUp(self):
        resultado = services.ejecutar_suite(n_max=2, solo=['tabla_texto'])
        self.corrida = services.guardar_corrida(resultado)

    def test_anonimo_sin_acceso(self):
        respuesta = self.client.get(reverse('api:corridaverificacion-list'))
        self.assertIn(respuesta.status_code, (status.HTTP_401_UNAUTHORIZED, status.HTTP_403_FORBIDDEN))

    def test_usuario_sin_staff_sin_acceso(self):
        usuario = User.objects.create_user('lector', password='clave-de-prueba')
        self.client.force_authenticate(usuario)
        respuesta = self.client.get(reverse('api:corridaverificacion-list'))
        self.assertEqual(respuesta.status_code, status.HTTP_403_FORBIDDEN)

    def test_admin_ve_registros(self):
        admin = User.objects.create_superuser('admin', 'admin@example.com', 'clave-de-prueba')
        self.client.force_authenticate(admin)
        respuesta = self.client.get(
            reverse('api:corridaverificacion-detail', args=[self.corrida.pk])
        )
        self.assertEqual(respuesta.status_code, status.HTTP_200_OK)
        self.assertTrue(respuesta.data['veredicto'])
        self.assertEqual(len(respuesta.data['registros']), self.corrida.total_chequeos)
        self.assertIn('check', respuesta.data['registros'][0])
        self.assertEqual(respuesta.data['registros'][0]['check'], 'tabla_texto')
