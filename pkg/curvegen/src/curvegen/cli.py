"""Command line: export canonical curve data from a curve-job file."""

from __future__ import annotations

import argparse
import json
import sys

from curvegen.engine import ExportError, export
from curvegen.job import Job, JobError, job_path, list_jobs


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="curvegen",
        description="Compute canonical curve data for an AG evaluation code "
        "from a curve-job file.",
    )
    ap.add_argument(
        "job",
        help="path to a curve-job JSON file, or the name of a shipped job "
        "(see --list)",
        nargs="?",
    )
    ap.add_argument("-o", "--output", help="output curve-data JSON file")
    ap.add_argument("--list", action="store_true", help="list shipped jobs and exit")
    ap.add_argument("-q", "--quiet", action="store_true", help="suppress the summary")
    args = ap.parse_args(argv)

    if args.list:
        for name in list_jobs():
            print(name)
        return 0
    if not args.job or not args.output:
        ap.error("a job file and -o/--output are required")

    try:
        try:
            job = Job.load(args.job)
        except FileNotFoundError:
            p = job_path(args.job)
            if not p.is_file():
                raise
            job = Job(json.loads(p.read_text()))
    except (FileNotFoundError, JobError) as exc:
        print(f"curvegen: {exc}", file=sys.stderr)
        return 2

    try:
        obj = export(job)
    except ExportError as exc:
        print(f"curvegen: export failed: {exc}", file=sys.stderr)
        return 1

    with open(args.output, "w") as fh:
        json.dump(obj, fh)
        fh.write("\n")
    if not args.quiet:
        print(
            f"{job.name}: n={obj['n']} gamma={obj['gamma']} degG={obj['degG']} "
            f"a={obj['a']} b={obj['b']} -> {args.output}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
