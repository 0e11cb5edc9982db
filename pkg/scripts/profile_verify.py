"""Run a dmod verification suite under a code profiler.

Configuration is done via module-level constants below (no CLI arguments);
the suite itself is configured exactly like `dmod verify`.

Output:
	profile_verify.html   (pyinstrument)
	profile_verify.pstats (cProfile fallback, top entries also printed)
"""

from __future__ import annotations

import cProfile
import logging
import pstats
import sys
from pathlib import Path
from typing import Callable, List

CURRENT_DIR = Path(__file__).resolve().parent
ROOT_DIR = CURRENT_DIR.parent
if str(ROOT_DIR) not in sys.path:
	sys.path.insert(0, str(ROOT_DIR))

from src.cli.app import main as dmod_main  # noqa: E402


# ---------------------------------------------------------------------------
# Configuration Constants (modify as needed)
# ---------------------------------------------------------------------------
VERIFY_ARGS: List[str] = ["verify", "--suite", "all", "--q", "3", "--pi", "T+1", "--prec", "120"]
LOG_LEVEL: str = "INFO"  # One of: CRITICAL, ERROR, WARNING, INFO, DEBUG

# 'pyinstrument' (preferred if installed) or 'cprofile' (stdlib fallback)
PROFILER_BACKEND: str = "pyinstrument"
PROFILER_OUTPUT_BASENAME: str = "profile_verify"  # .html or .pstats next to this file

logger = logging.getLogger(__name__)


def _run_with_profiler(func: Callable[[], int]) -> int:
	"""Run func under the configured profiler backend and save the report.

	- PROFILER_BACKEND == 'pyinstrument': HTML report.
	- Otherwise (or if pyinstrument is missing): cProfile .pstats plus the top entries.
	"""
	out_base = Path(__file__).with_name(PROFILER_OUTPUT_BASENAME)
	if PROFILER_BACKEND.lower() == "pyinstrument":
		try:
			from pyinstrument import Profiler  # type: ignore
		except ImportError as e:  # pragma: no cover
			logger.warning("PyInstrument unavailable (%s). Falling back to cProfile.", e)
		else:
			profiler = Profiler()
			profiler.start()
			try:
				return func()
			finally:
				profiler.stop()
				out_html = out_base.with_suffix(".html")
				try:
					profiler.write_html(str(out_html))
					logger.info("PyInstrument profile saved to %s", out_html)
				except OSError as write_err:  # pragma: no cover
					logger.warning("Failed to write PyInstrument report: %s", write_err)

	pr = cProfile.Profile()
	pr.enable()
	try:
		return func()
	finally:
		pr.disable()
		out_pstats = out_base.with_suffix(".pstats")
		try:
			pr.dump_stats(str(out_pstats))
			logger.info("cProfile stats saved to %s", out_pstats)
			pstats.Stats(pr).strip_dirs().sort_stats("cumtime").print_stats(30)
		except OSError as write_err:  # pragma: no cover
			logger.warning("Failed to write cProfile stats: %s", write_err)


def main() -> int:
	logging.basicConfig(
		level=getattr(logging, LOG_LEVEL.upper(), logging.INFO),
		format="%(asctime)s %(levelname)s %(name)s - %(message)s",
	)
	args = VERIFY_ARGS + ["--log-level", LOG_LEVEL]
	return _run_with_profiler(lambda: dmod_main(args))


if __name__ == "__main__":  # pragma: no cover
	raise SystemExit(main())
