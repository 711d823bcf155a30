from django.apps import AppConfig


class MixedcharConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'mixedchar'
