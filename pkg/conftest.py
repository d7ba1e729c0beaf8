import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'caterpillar_lab.settings')
django.setup()
