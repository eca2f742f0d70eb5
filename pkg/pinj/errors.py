# pinj
# SPDX-License-Identifier: MIT
"""Exception hierarchy shared by every pinj module.

All errors derive from PinjError, itself a RuntimeError, so callers that only
care about "something in pinj went wrong" can catch one class.
"""


class PinjError(RuntimeError):
    pass


class PointOutOfRange(PinjError):
    def __init__(self, point, n):
        super().__init__(f'point {point} is outside {{1..{n}}}')
        self.point = point
        self.n = n


class DuplicateDomainPoint(PinjError):
    def __init__(self, point):
        super().__init__(f'point {point} is mapped more than once')
        self.point = point


class DuplicateImagePoint(PinjError):
    def __init__(self, point):
        super().__init__(f'point {point} is hit more than once')
        self.point = point


class SizeMismatch(PinjError):
    def __init__(self, left, right):
        super().__init__(f'cannot combine elements of IS_{left} and IS_{right}')
        self.left = left
        self.right = right


class ChartSyntaxError(PinjError):
    pass


class MissingPoint(PinjError):
    def __init__(self, points):
        points = sorted(points)
        super().__init__(
            f'chart does not mention point(s) {", ".join(map(str, points))}')
        self.points = points


class RepeatedPoint(PinjError):
    def __init__(self, point):
        super().__init__(f'point {point} appears more than once in the chart')
        self.point = point


class InvalidElementJson(PinjError):
    pass


class BudgetExceeded(PinjError):
    """Raised before an enumeration starts when it would visit too much.

    `required` is the exact number of objects the enumeration would visit.
    """

    def __init__(self, required, budget, what='elements'):
        super().__init__(
            f'enumeration needs {required} {what} but the budget is {budget}')
        self.required = required
        self.budget = budget


class NotNilpotent(PinjError):
    pass


class InvalidMark(PinjError):
    pass


class MultiplicityOutOfRange(PinjError):
    pass


class RankConstancyError(PinjError):
    """Two elements of the same rank were hit a different number of times."""
    pass
