import logging

logging.getLogger('multiomit').addHandler(logging.NullHandler())


def get_logger(name):
    """Module logger below the package logger."""
    if not name.startswith('multiomit'):
        name = 'multiomit.' + name
    return logging.getLogger(name)


def configure_cli_logging(verbose=False):
    """
    Stream handler for command-line runs, bound to the current stderr.

    Calling it again replaces the handler installed by the previous call.
    """
    logger = logging.getLogger('multiomit')
    for handler in list(logger.handlers):
        if getattr(handler, '_multiomit_cli', False):
            logger.removeHandler(handler)
    handler = logging.StreamHandler()
    handler._multiomit_cli = True
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    return logger
