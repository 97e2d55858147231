"""Result tables and run manifests."""
from chaos_probe.services.results.dao import ResultsDAO

__all__ = ["ResultsDAO"]
