"""
Configuración de Django para el proyecto proyectoAiry.

Los valores se leen con python-decouple desde variables de entorno o un
archivo .env; todos tienen un valor por defecto para que un checkout
limpio funcione sin configuración.
"""

from pathlib import Path

from decouple import Csv, config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='django-insecure-solo-para-desarrollo-local')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='localhost,127.0.0.1', cast=Csv())


# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',

    # --- MIS APPS ---
    'airyPolinomios',
    'rest_framework',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'proyectoAiry.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]

WSGI_APPLICATION = 'proyectoAiry.wsgi.application'


# Database
# https://docs.djangoproject.com/en/5.2/ref/settings/#databases

DATABASES = {
    'default': {
        'ENGINE': config('DB_ENGINE', default='django.db.backends.sqlite3'),
        'NAME': config('DB_NAME', default=str(BASE_DIR / 'db.sqlite3')),
    }
}


# Password validation
# https://docs.djangoproject.com/en/5.2/ref/settings/#auth-password-validators

AUTH_PASSWORD_VALIDATORS = [
    {
        'NAME': 'django.contrib.auth.password_validation.UserAttributeSimilarityValidator',
    },
    {
        'NAME': 'django.contrib.auth.password_validation.MinimumLengthValidator',
    },
    {
        'NAME': 'django.contrib.auth.password_validation.CommonPasswordValidator',
    },
    {
        'NAME': 'django.contrib.auth.password_validation.NumericPasswordValidator',
    },
]


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'es-cl'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Static files (CSS, JavaScript, Images)
# https://docs.djangoproject.com/en/5.2/howto/static-files/

STATIC_URL = 'static/'

# Default primary key field type
# https://docs.djangoproject.com/en/5.2/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

REST_FRAMEWORK = {
    # Solo permite acceso a usuarios con is_staff=True (Administradores);
    # los endpoints de cálculo declaran AllowAny.
    'DEFAULT_PERMISSION_CLASSES': [
        'rest_framework.permissions.IsAdminUser',
    ],
    'DEFAULT_AUTHENTICATION_CLASSES': [
        'rest_framework.authentication.SessionAuthentication',
        'rest_framework.authentication.BasicAuthentication',
    ],
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
}

# --- SUITE DE VERIFICACIÓN ---

# Semilla por defecto de los puntos aleatorios
AIRY_SEMILLA = config('AIRY_SEMILLA', default=20240607, cast=int)

AIRY_N_MAX_VERIFICAR = config('AIRY_N_MAX_VERIFICAR', default=40, cast=int)
AIRY_N_MAX_TABLAS_PQ = config('AIRY_N_MAX_TABLAS_PQ', default=15, cast=int)
AIRY_N_MAX_TABLAS_RST = config('AIRY_N_MAX_TABLAS_RST', default=12, cast=int)

# Hilos del ThreadPoolExecutor de la suite
AIRY_HILOS = config('AIRY_HILOS', default=4, cast=int)

_TOLERANCIAS_POR_DEFECTO = {
    '2f1': 1e-9,
    '3f2': 1e-8,
    'constante': 1e-8,
    'derivada': 1e-7,
    'producto': 1e-5,
    'wronskiano': 1e-10,
    'lambda': 1e-10,
    'genfun': 1e-9,
    'gegenbauer': 1e-10,
    'serie': 1e-16,
}

# Cada clave se puede cambiar con AIRY_TOL_<CLAVE> (ej. AIRY_TOL_2F1=1e-8)
AIRY_TOLERANCIAS = {
    clave: config(f'AIRY_TOL_{clave.upper()}', default=valor, cast=float)
    for clave, valor in _TOLERANCIAS_POR_DEFECTO.items()
}

# --- LOGGING ---

AIRY_LOG_LEVEL = config('AIRY_LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'airyPolinomios': {
            'handlers': ['console'],
            'level': AIRY_LOG_LEVEL,
            'propagate': False,
        },
    },
}
