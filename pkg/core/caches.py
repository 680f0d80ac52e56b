"""Process-wide memo tables of the library and their reset path."""

import logging

logger = logging.getLogger(__name__)


def clear_caches():
    from . import digraph, gamma, kerov, rewrite, setcomp

    for cached in (
        setcomp._all_setcomps,
        digraph._acyclic_graphs,
        digraph._bipartite_graphs,
        digraph._canonical,
        gamma._gamma_nc_graph,
        kerov._signed_expander_count,
        kerov._g_ch,
        kerov._g_r,
    ):
        cached.cache_clear()
    rewrite._shared_reducer.clear()
    logger.debug("library caches cleared")


def on_setting_changed(setting, **kwargs):
    if setting.startswith('GESSEL_'):
        clear_caches()
