import sys
import logging

from app.cli.commands import main as cli_main
from app.utils.constants import APP_NAME, APP_VERSION, LOGGER_NAME
from app.utils.common_imports import PERFORMANCE_MONITORING_AVAILABLE


def main() -> int:
    # Use a temporary logger for the very early startup phase.
    # The main logger is configured by the CLI once the configuration is loaded.
    startup_logger = logging.getLogger(f"{LOGGER_NAME}_Startup")
    startup_logger.setLevel(logging.WARNING)
    if not startup_logger.hasHandlers():
        ch = logging.StreamHandler(sys.stderr)
        ch.setFormatter(logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s'))
        startup_logger.addHandler(ch)
        startup_logger.propagate = False

    startup_logger.info(f"Starting {APP_NAME} v{APP_VERSION}")
    if not PERFORMANCE_MONITORING_AVAILABLE:
        startup_logger.info("psutil not available; memory and CPU figures are omitted.")

    try:
        return cli_main(sys.argv[1:])
    except KeyboardInterrupt:
        startup_logger.warning("Interrupted.")
        return 130
    except Exception as e:
        startup_logger.critical(f"A critical unexpected error occurred: {e}", exc_info=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
