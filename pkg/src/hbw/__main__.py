"""Run the command line with `python -m hbw`."""

from .cli.main import run

run()
