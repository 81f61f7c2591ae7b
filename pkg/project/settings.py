"""
Django settings for the pole-skipping project.

For more information on this file, see
https://docs.djangoproject.com/en/4.2/topics/settings/
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('POLESKIP_SECRET_KEY', 'dev-only-8q#n2v!poleskip-k3x$w1m')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get('POLESKIP_DEBUG', '1') == '1'

ALLOWED_HOSTS = [
    'localhost',
    '127.0.0.1',
    'testserver',
]


# Application definition

INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',

    'rest_framework',  # rest_framework

    'api.poleskip.apps.PoleskipConfig',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'project.urls'

WSGI_APPLICATION = 'project.wsgi.application'


# Database
# Nothing is persisted, the test runner still expects a default alias.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.path.join(BASE_DIR, 'db.sqlite3'),
    },
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': (
    ),
    'UNAUTHENTICATED_USER': None,
}

# Numerical tolerances and limits, see api/poleskip/utils/config.py for the
# full list and defaults.
POLESKIP = {
    'NEWTON_TOL': 1e-12,
    'PROBE_RADIUS': 1e-3,
    'ODE_RTOL': 1e-12,
    'GRID_MAX': 10**6,
}

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
            'stream': 'ext://sys.stderr',
        },
    },
    'loggers': {
        'api.poleskip': {
            'handlers': ['console'],
            'level': os.environ.get('POLESKIP_LOG_LEVEL', 'WARNING'),
        },
    },
}
