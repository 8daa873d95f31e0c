"""Tournament-array construction engine and equitable-weight code certifier."""

__version__ = "0.1.0"
