# Report models package
from .report_models import BackendVerdict, Query, Report, WalkCounts

__all__ = ["BackendVerdict", "Query", "Report", "WalkCounts"]
