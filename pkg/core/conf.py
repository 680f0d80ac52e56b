"""Typed access to the ``GESSEL_*`` settings with their defaults."""

from dataclasses import dataclass

from django.conf import settings


@dataclass(frozen=True)
class GesselSettings:
    acyclic_cap: int
    bipartite_cap: int
    kerov_cap: int
    label_cap: int
    threads: int
    cycle_mode: str


def gessel_settings():
    return GesselSettings(
        acyclic_cap=getattr(settings, 'GESSEL_ACYCLIC_CAP', 5),
        bipartite_cap=getattr(settings, 'GESSEL_BIPARTITE_CAP', 6),
        kerov_cap=getattr(settings, 'GESSEL_KEROV_CAP', 6),
        label_cap=getattr(settings, 'GESSEL_LABEL_CAP', 6),
        threads=getattr(settings, 'GESSEL_THREADS', 1),
        cycle_mode=getattr(settings, 'GESSEL_CYCLE_MODE', 'all'),
    )
