class PlaneCoverError(Exception):
    pass


class EmptyInput(PlaneCoverError, ValueError):
    pass


class DegenerateInput(PlaneCoverError):
    """A window predicate tied (collinear triple) where general position is required."""


class ConstructionFailed(PlaneCoverError):
    """A case construction produced an intersection outside its claimed region."""


class DegenerateWindowUnsolvable(PlaneCoverError):
    pass


class BudgetTooLarge(PlaneCoverError, ValueError):
    pass


class TooLarge(PlaneCoverError, ValueError):
    pass


class InvalidSpec(PlaneCoverError, ValueError):
    pass
