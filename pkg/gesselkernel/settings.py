"""
Django settings for gesselkernel project.

The project serves no web pages: the ``core`` app carries the algebra library
and its management commands, and this module is the single source of
configuration for both.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(BASE_DIR / '.env')


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'SECRET_KEY',
    'django-insecure-gesselkernel-local-only-5k#r2w0!p8d$z1v',
)

DEBUG = os.environ.get('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'core',
]

# No database: every computation is in memory.
DATABASES = {}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# =========================
#   ALGEBRA LIMITS
# =========================

# Largest n for exhaustive acyclic-graph enumeration (29281 graphs at n=5).
GESSEL_ACYCLIC_CAP = int(os.environ.get('GESSEL_ACYCLIC_CAP', '5'))

# Largest n for bipartite enumeration (11835 graphs at n=6).
GESSEL_BIPARTITE_CAP = int(os.environ.get('GESSEL_BIPARTITE_CAP', '6'))

# Largest |mu| for character graphs and largest k for free cumulant graphs.
GESSEL_KEROV_CAP = int(os.environ.get('GESSEL_KEROV_CAP', '6'))

# Brute-force canonical labeling walks n! relabelings.
GESSEL_LABEL_CAP = int(os.environ.get('GESSEL_LABEL_CAP', '6'))

GESSEL_THREADS = int(os.environ.get('GESSEL_THREADS', '1'))

# "all" simple cycles, or "small" for |C+| in {1, 2}.
GESSEL_CYCLE_MODE = os.environ.get('GESSEL_CYCLE_MODE', 'all')


# =========================
#   LOGGING
# =========================

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name} {message}',
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
        'core': {
            'handlers': ['console'],
            'level': os.environ.get('GESSEL_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}
