import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'gesselkernel.settings')
django.setup()
