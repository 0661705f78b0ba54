"""Kandinsky Figures and Patterns toolkit."""
__version__ = "0.1.0"
