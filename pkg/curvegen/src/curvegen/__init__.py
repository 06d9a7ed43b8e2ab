"""curvegen: exports canonical curve data for AG evaluation codes."""

from curvegen.engine import ExportError, export
from curvegen.field import Field
from curvegen.job import Job, JobError, job_path, list_jobs, load_job

__all__ = [
    "ExportError",
    "Field",
    "Job",
    "JobError",
    "export",
    "job_path",
    "list_jobs",
    "load_job",
]
