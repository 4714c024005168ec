"""Exception hierarchy shared by every module of the package."""


class NamedSetError(Exception):
    """Base class for all errors raised by :mod:`namedsets`."""


class InvalidAtom(NamedSetError, ValueError):
    pass


class DanglingPair(NamedSetError, ValueError):
    """A relation pair references an atom outside support or reflector."""


class UnknownElement(NamedSetError, KeyError):
    def __str__(self):
        return self.args[0] if self.args else "unknown element"


class PartialMap(NamedSetError, ValueError):
    """A morphism component is not total on its domain."""


class NonComposable(NamedSetError, ValueError):
    pass


class UnknownObject(NamedSetError, ValueError):
    pass


class NotSinglenamed(NamedSetError, ValueError):
    pass


class NotFunctional(NamedSetError, ValueError):
    pass


class BadNumeral(NamedSetError, ValueError):
    pass


class TokenClash(NamedSetError, ValueError):
    pass


class DegreeOutOfScale(NamedSetError, ValueError):
    pass


class InvalidLattice(NamedSetError, ValueError):
    pass


class DuplicateId(NamedSetError, ValueError):
    pass


class NotDeterministic(NamedSetError, ValueError):
    pass


class UnknownSymbol(NamedSetError, ValueError):
    pass


class InvalidStructure(NamedSetError, ValueError):
    """A machine, grammar or calculus violates its declared invariants."""
