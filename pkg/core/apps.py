from django.apps import AppConfig
from django.core.signals import setting_changed


class CoreConfig(AppConfig):
    name = 'core'
    verbose_name = 'Gessel morphisms and graph kernels'

    def ready(self):
        from .caches import on_setting_changed

        setting_changed.connect(on_setting_changed, dispatch_uid='core.clear_caches')
