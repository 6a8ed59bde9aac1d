"""
Configuración WSGI del proyecto proyectoAiry.

Expone el callable WSGI como la variable de módulo ``application``.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'proyectoAiry.settings')

application = get_wsgi_application()
