"""Triple Semigroup - Johnson matrix, Frobenius number, genus and Hilbert numerator of <d1, d2, d3>"""

__version__ = "0.1.0"
