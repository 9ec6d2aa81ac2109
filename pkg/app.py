"""
Main Application Entry Point
stirling-forge: exact Stirling numbers, polynomial families and identity verification
"""

import os
import sys
import logging

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from dotenv import load_dotenv

# Load environment variables from .env file before config reads them
load_dotenv()

import config
from ui.cli import main as cli_main

logging.basicConfig(
    level=config.LOG_LEVEL,
    format=config.LOG_FORMAT
)
logger = logging.getLogger(__name__)


def main():
    """Main entry point for the application."""
    try:
        code = cli_main(sys.argv[1:])
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        code = 1
    except Exception as e:
        logger.error(f"Error running application: {e}", exc_info=True)
        code = 1
    sys.exit(code)


if __name__ == "__main__":
    main()
