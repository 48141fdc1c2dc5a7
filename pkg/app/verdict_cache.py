from typing import Any, Dict, Hashable, Optional


class VerdictCache:
    """In-memory store of finished reports, keyed by the check and its configuration."""

    def __init__(self):
        self.reports: Dict[Hashable, Any] = {}

    def get_report(self, key: Hashable) -> Optional[Any]:
        return self.reports.get(key)

    def add_report(self, key: Hashable, report: Any):
        self.reports[key] = report

    def clear_all_reports(self):
        self.reports.clear()

    def get_report_count(self) -> int:
        return len(self.reports)
