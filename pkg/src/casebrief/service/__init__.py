"""HTTP service, project store, configuration, and the CLI."""

from casebrief.service.config import ServiceConfig
from casebrief.service.errors import ERROR_STATUS, ApiError, to_api_error
from casebrief.service.store import ProjectStore

__all__ = ["ApiError", "ERROR_STATUS", "ProjectStore", "ServiceConfig", "to_api_error"]
