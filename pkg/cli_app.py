"""Command-line entry point for the caterpillar toolkit."""
from caterpillar.logging_config import get_logger, setup_logging
from cli.commands import cli

# Initialize logging
setup_logging()
logger = get_logger(__name__)


if __name__ == "__main__":
    logger.info("Caterpillar CLI starting")
    cli(prog_name="caterpillar")
