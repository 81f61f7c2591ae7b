from django.apps import AppConfig


class PoleskipConfig(AppConfig):
    name = 'api.poleskip'
