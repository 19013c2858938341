"""Exact toolkit for genus-2 curve families over real quadratic fields.

Builds the explicit family of genus-2 curves over Q(sqrt(D)) whose
Weil-restricted Jacobians are abelian fourfolds with a quadratic
endomorphism algebra, and certifies triviality of the geometric
endomorphism ring of a member by reduction modulo two primes, exact
point counting and a stable-irreducibility test on the Frobenius
characteristic polynomials.

All arithmetic is exact (integers, rationals, finite fields); no
floating point is used anywhere.
"""

__version__ = "0.1.0"
