class PreconditionError(ValueError):
    """Input graph does not satisfy an operation's precondition (e.g. not regular)."""
