"""weakval - weak values and quasiprobabilities of coherent states."""

__version__ = "0.1.0"
