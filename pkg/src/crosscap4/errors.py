"""Exception hierarchy shared by all modules.

Input errors (bad user data) derive from InputError; the CLI maps these to
exit code 2.  ConsistencyError marks a violated internal invariant (oracle
disagreement, failed cross-check) and maps to exit code 3.
"""


class InputError(ValueError):
    """Invalid input supplied by the caller."""


class NotCoprime(InputError):
    pass


class NotPrimitive(InputError):
    pass


class ZeroClass(InputError):
    pass


class NotInvertible(InputError):
    pass


class InvalidForm(InputError):
    pass


class OutOfRange(InputError):
    pass


class ParityError(InputError):
    pass


class InexactDivision(ArithmeticError):
    """Laurent division left a nonzero remainder; signals caller misuse."""


class NotSymmetric(ValueError):
    """Polynomial is not invariant under T -> 1/T."""


class OddSignature(ValueError):
    pass


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; results cannot be trusted."""
