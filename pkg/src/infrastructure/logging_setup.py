"""Console logging: one stderr handler, `[HH:MM:SS] [module] message` lines."""
import logging
import sys

FORMAT = '[%(asctime)s] [%(name)s] %(message)s'
DATE_FORMAT = '%H:%M:%S'


def configure_logging(level: str = 'WARNING') -> logging.Logger:
    root = logging.getLogger()
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        numeric = logging.WARNING
    for handler in list(root.handlers):
        if getattr(handler, '_divisiveness', False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(FORMAT, DATE_FORMAT))
    handler._divisiveness = True
    root.addHandler(handler)
    root.setLevel(numeric)
    return root
