from django.apps import AppConfig


class OracleappConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'oracleapp'
    verbose_name = 'exhaustive oracle'
