"""
Configuración ASGI del proyecto proyectoAiry.

Expone el callable ASGI como la variable de módulo ``application``.
"""

import os

from django.core.asgi import get_asgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'proyectoAiry.settings')

application = get_asgi_application()
