"""Exception types shared across the package."""


class IntegralityError(ArithmeticError):
    """An exact quotient that must be an integer was not.

    Raised when a character degree (or one of its factors) fails to clear
    exactly. This always indicates a bug, never bad user input.
    """
