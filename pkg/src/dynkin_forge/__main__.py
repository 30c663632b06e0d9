"""Run the command line interface with `python -m dynkin_forge`."""

from .cli import main

main()
