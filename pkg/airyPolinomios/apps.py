from django.apps import AppConfig


class AiryPolinomiosConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'airyPolinomios'
    verbose_name = 'Polinomios de Airy'
