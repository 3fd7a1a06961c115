class HodgeException(Exception):
    """
    Base error for every computation in this package.
    Carries the process exit code the CLI reports for it.
    """

    def __init__(self, detail: str, exit_code: int = 2):
        super().__init__(detail)
        self.detail = detail
        self.exit_code = exit_code

    def __str__(self) -> str:
        return self.detail


class DomainException(HodgeException):
    """A genus, index, partition or option is outside its allowed range"""


class TruncationException(HodgeException):
    """A truncated series is asked for more precision than it carries"""


class PoleException(HodgeException, ZeroDivisionError):
    """Division by a quantity that vanishes (V_1 = 0, non-invertible constant term)"""


class SeriesLogException(HodgeException):
    """Logarithm of a series whose constant term is not 1"""
