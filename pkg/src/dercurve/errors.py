"""Exception hierarchy. Every error carries a stable ``kind`` used in CLI reports."""


class DercurveError(ValueError):
    kind = "DercurveError"

    def to_dict(self):
        return {"type": self.kind, "message": str(self)}


class GcdNotOne(DercurveError):
    kind = "GcdNotOne"


class Duplicate(DercurveError):
    kind = "Duplicate"


class NotMinimal(DercurveError):
    kind = "NotMinimal"

    def __init__(self, index, generator):
        self.index = index
        self.generator = generator
        super().__init__(f"generator {generator} (index {index}) is a combination of the others")


class NotMember(DercurveError):
    kind = "NotMember"


class SearchExhausted(DercurveError):
    kind = "SearchExhausted"

    def __init__(self, bound, what=""):
        self.bound = bound
        super().__init__(f"no witness found below bound {bound}" + (f" ({what})" if what else ""))


class NotCohenMacaulay(DercurveError):
    kind = "NotCohenMacaulay"

    def __init__(self, point):
        self.point = point
        super().__init__(f"{point} lies in (Gamma1 x Gamma2) ∩ L but not in the plane semigroup")

    def to_dict(self):
        d = super().to_dict()
        d["counterexample"] = list(self.point)
        return d


class PointOutsideSemigroup(DercurveError):
    kind = "PointOutsideSemigroup"


class BadResidueField(DercurveError):
    kind = "BadResidueField"


class ParamOutOfRange(DercurveError):
    kind = "ParamOutOfRange"


class DimensionMismatch(DercurveError):
    kind = "DimensionMismatch"


class ParseError(DercurveError):
    kind = "ParseError"
