"""
Django settings for caterpillar_lab project.

Generated by 'django-admin startproject' using Django 3.2.16.

The project has no web surface: it is driven through management commands
(see caterpillarapp/management and oracleapp/management).

For more information on this file, see
https://docs.djangoproject.com/en/3.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/3.2/ref/settings/
"""
import os

from environs import Env

env = Env()
env.read_env()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = env.str('DJANGO_SECRET_KEY', 'caterpillar-lab-insecure-dev-key')

DEBUG = env.bool('DEBUG', False)

ALLOWED_HOSTS = env.list('HOSTS', ['127.0.0.1'])

# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'caterpillarapp',
    'oracleapp',
]

# Database
# https://docs.djangoproject.com/en/3.2/ref/settings/#databases

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.path.join(BASE_DIR, 'db.sqlite3'),
    }
}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Realizer

# default wall-clock budget (seconds) for exhaustive searches
REALIZER_TIME_BUDGET = env.float('REALIZER_TIME_BUDGET', 60.0)

ORACLE_MAX_NODES = env.int('ORACLE_MAX_NODES', 2_000_000)

# largest n for which the oracle may close an open base case
ORACLE_BASE_MAX_N = env.int('ORACLE_BASE_MAX_N', 12)

# Logging

LOG_LEVEL = env.str('LOG_LEVEL', 'INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'caterpillarapp': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
        },
        'oracleapp': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
        },
    },
}
