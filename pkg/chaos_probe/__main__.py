import sys

from chaos_probe.cli.commands import main as run_cli
from chaos_probe.logging import configure_logging


def main() -> None:
    """Entrypoint of the application."""
    configure_logging()
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
