"""Twisted GRS codes with cyclotomic twist polynomials and their subfield-subcodes."""

__version__ = "0.1.0"
