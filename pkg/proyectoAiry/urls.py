"""
Definiciones de URL para el proyecto proyectoAiry.

Este archivo enruta las URLs a la API de la aplicación airyPolinomios
y al admin de Django.
"""
from django.contrib import admin
from django.urls import path, include
from rest_framework.routers import DefaultRouter
from airyPolinomios import api_views

# Configuración del Router de la API
router = DefaultRouter()
router.register(r'tablas', api_views.TablasViewSet, basename='tablas')
router.register(r'evaluar', api_views.EvaluarViewSet, basename='evaluar')
router.register(r'ceros', api_views.CerosViewSet, basename='ceros')
router.register(r'corridas', api_views.CorridaVerificacionViewSet)

urlpatterns = [
    # ----------------------------------------------------
    # 1. RUTAS DE ADMINISTRACIÓN
    # ----------------------------------------------------
    path('admin/', admin.site.urls),

    # --- RUTA PARA LA API ---
    path('api/', include((router.urls, 'api'), namespace='api')),
]
