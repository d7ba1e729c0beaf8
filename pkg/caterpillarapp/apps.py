from django.apps import AppConfig


class CaterpillarappConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'caterpillarapp'
    verbose_name = 'caterpillar realizations'
