"""Exact verification of Z/nZ subgroups in class groups of Q(sqrt(a^2 - 4p^n))."""

from .arith import factorize, is_prime, kronecker, sqrt_mod, squarefree_part
from .classgroup import class_number, class_order, class_order_unbounded, prime_form
from .fieldparams import FieldParams, InvalidParams, build
from .quadform import QuadForm, compose, inverse, is_principal, power, principal_form, reduce
from .theorem import Verdict, search_primes, verify_theorem1

__version__ = "0.1.0"
