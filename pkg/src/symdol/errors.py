"""Package-wide error types."""


class ContractViolation(RuntimeError):
    """An internal exactness or completeness invariant failed.

    Raised when a computation produces output that contradicts a structural
    guarantee (negative eigenvalue rows, non-scalar blocks, mismatched
    dimension ledgers).  The CLI maps this to exit code 2.
    """
