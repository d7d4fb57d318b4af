from hypertope_extensions.version import VERSION

__version__ = ".".join(VERSION)
