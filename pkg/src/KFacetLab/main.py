import sys


def main():
    from .cli import main_cli

    sys.exit(main_cli())
