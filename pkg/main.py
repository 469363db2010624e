"""Lightweight runner for the GraphEnsembleEmbed package."""

import sys

from GraphEnsembleEmbed.app import main


if __name__ == "__main__":
    sys.exit(main())
